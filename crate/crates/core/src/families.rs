//! Constructors and certified predicates for parametrized families:
//! arithmetic sequences, the maximal-embedding-dimension family, the two
//! trace-maximal families and the trace-conductor family. Every constructor
//! carries closed-form predictions that `verify` checks against the general
//! machinery.

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::ideal::{self, TracePosition};
use crate::semigroup::NumericalSemigroup;

fn ensure<T>(label: &str, predicted: &T, computed: &T) -> Result<()>
where
    T: std::fmt::Debug + PartialEq,
{
    if predicted == computed {
        Ok(())
    } else {
        Err(Error::PredictionFailed(format!(
            "{label}: predicted {predicted:?}, computed {computed:?}"
        )))
    }
}

/// Parameters of an arithmetic-sequence semigroup <a, a+d, ..., a+(e-1)d>.
#[derive(Debug, Clone, Copy)]
pub struct ArithmeticParams {
    pub a: i128,
    pub d: i128,
    pub e: i128,
    /// k = floor((a-2)/(e-1)), so that a = k(e-1) + tau + 1.
    pub k: i128,
    /// Predicted type.
    pub tau: i128,
}

impl ArithmeticParams {
    pub fn new(a: i128, d: i128, e: i128) -> Result<Self> {
        if e <= 2 || a < e || d < 1 || gcd(a, d) != 1 {
            return Err(Error::BadParams(format!(
                "arithmetic family needs e > 2, e <= a, d >= 1, gcd(a,d) = 1; got a={a} d={d} e={e}"
            )));
        }
        let k = (a - 2) / (e - 1);
        let tau = a - 1 - k * (e - 1);
        debug_assert!((1..=e - 1).contains(&tau));
        Ok(ArithmeticParams { a, d, e, k, tau })
    }
}

#[derive(Debug, Clone)]
pub struct ArithmeticFamily {
    pub params: ArithmeticParams,
    pub semigroup: NumericalSemigroup,
    pub predicted_frobenius: i128,
    pub predicted_pf: Vec<i128>,
    pub predicted_type: i128,
    pub predicted_symmetric: bool,
    pub predicted_almost_symmetric: bool,
    /// Arithmetic-sequence semigroups are always nearly Gorenstein.
    pub predicted_nearly_gorenstein: bool,
}

pub fn arithmetic(params: ArithmeticParams) -> Result<ArithmeticFamily> {
    let ArithmeticParams { a, d, e, k, tau } = params;
    let gens: Vec<i128> = (0..e).map(|i| a + i * d).collect();
    let semigroup = NumericalSemigroup::new(&gens)?;
    if semigroup.edim() as i128 != e {
        return Err(Error::Degenerate(format!(
            "arithmetic generators are not minimal for a={a} d={d} e={e}"
        )));
    }
    let fr = a * k + d * (a - 1);
    let pf: Vec<i128> = (0..tau).rev().map(|i| fr - i * d).collect();
    Ok(ArithmeticFamily {
        params,
        semigroup,
        predicted_frobenius: fr,
        predicted_pf: pf,
        predicted_type: tau,
        predicted_symmetric: (a - 2) % (e - 1) == 0,
        predicted_almost_symmetric: a == e || (a - 2) % (e - 1) == 0,
        predicted_nearly_gorenstein: true,
    })
}

impl ArithmeticFamily {
    pub fn verify(&self) -> Result<()> {
        let h = &self.semigroup;
        ensure("Fr", &self.predicted_frobenius, &h.frobenius())?;
        ensure("PF", &self.predicted_pf.as_slice(), &h.pseudo_frobenius())?;
        ensure("type", &(self.predicted_type as usize), &h.semigroup_type())?;
        ensure("symmetric", &self.predicted_symmetric, &h.is_symmetric())?;
        ensure(
            "almost symmetric",
            &self.predicted_almost_symmetric,
            &h.is_almost_symmetric(),
        )?;
        ensure(
            "nearly Gorenstein",
            &self.predicted_nearly_gorenstein,
            &ideal::is_nearly_gorenstein(h)?,
        )
    }
}

/// The maximal-embedding-dimension family <m, qm+1, ..., qm+m-1>.
#[derive(Debug, Clone)]
pub struct MedFamily {
    pub m: i128,
    pub q: i128,
    pub semigroup: NumericalSemigroup,
    /// At m = 2 the family degenerates to a symmetric 2-generated semigroup
    /// and the predictions below do not apply.
    pub predictions_apply: bool,
    pub predicted_pf: Vec<i128>,
    pub predicted_residue: u64,
}

pub fn med_family(m: i128, q: i128) -> Result<MedFamily> {
    if m < 2 || q < 1 {
        return Err(Error::BadParams(format!(
            "med family needs m >= 2, q >= 1; got m={m} q={q}"
        )));
    }
    let gens: Vec<i128> = std::iter::once(m)
        .chain((1..m).map(|i| q * m + i))
        .collect();
    let semigroup = NumericalSemigroup::new(&gens)?;
    let predictions_apply = m > 2;
    let predicted_pf: Vec<i128> = (1..m).map(|i| (q - 1) * m + i).collect();
    Ok(MedFamily {
        m,
        q,
        semigroup,
        predictions_apply,
        predicted_pf,
        predicted_residue: q as u64,
    })
}

impl MedFamily {
    pub fn verify(&self) -> Result<()> {
        if !self.predictions_apply {
            return Ok(());
        }
        let h = &self.semigroup;
        ensure("PF", &self.predicted_pf.as_slice(), &h.pseudo_frobenius())?;
        let tr = ideal::trace_ideal(h)?;
        ensure("residue", &self.predicted_residue, &tr.residue)?;
        ensure("tr = C_H", &TracePosition::EqualsConductor, &tr.position)
    }
}

#[derive(Debug, Clone)]
pub struct TraceMaximalFamily {
    pub a: i128,
    pub b: i128,
    pub c: i128,
    pub semigroup: NumericalSemigroup,
    /// Generators in the family's defining order, before re-minimalization.
    pub labeled_gens: [i128; 3],
    pub predicted_frobenius: i128,
    pub predicted_pseudo_symmetric: bool,
}

fn build_tm(
    a: i128,
    b: i128,
    c: i128,
    labeled_gens: [i128; 3],
    predicted_frobenius: i128,
    predicted_pseudo_symmetric: bool,
) -> Result<TraceMaximalFamily> {
    let semigroup = match NumericalSemigroup::new(&labeled_gens) {
        Ok(h) => h,
        Err(Error::NonPrimitive(_)) => {
            return Err(Error::Degenerate(format!(
                "({a},{b},{c}) yields non-primitive generators {labeled_gens:?}"
            )))
        }
        Err(e) => return Err(e),
    };
    if semigroup.edim() != 3 {
        return Err(Error::Degenerate(format!(
            "({a},{b},{c}) does not minimally generate a 3-generated semigroup"
        )));
    }
    Ok(TraceMaximalFamily {
        a,
        b,
        c,
        semigroup,
        labeled_gens,
        predicted_frobenius,
        predicted_pseudo_symmetric,
    })
}

/// Family (i) of the trace-maximal classification:
/// <ab+b+1, b+c+1, ac+a+c> with gcd(b+c-1, ab-c) = 1; tr(H) = M.
pub fn family_tm_i(a: i128, b: i128, c: i128) -> Result<TraceMaximalFamily> {
    if a < 1 || b < 1 || c < 1 {
        return Err(Error::BadParams("parameters must be >= 1".into()));
    }
    if gcd(b + c - 1, a * b - c) != 1 {
        return Err(Error::GcdFail(format!(
            "gcd(b+c-1, ab-c) = gcd({}, {}) != 1",
            b + c - 1,
            a * b - c
        )));
    }
    let gens = [a * b + b + 1, b + c + 1, a * c + a + c];
    let fr = a * b * c + b * c - b - 1 + (a * b - c).max(0);
    build_tm(a, b, c, gens, fr, false)
}

/// Family (ii): <bc+b+1, ca+c+1, ab+a+1> with gcd(bc+b+1, ca+c+1) = 1;
/// tr(H) = M and H is pseudo-symmetric.
pub fn family_tm_ii(a: i128, b: i128, c: i128) -> Result<TraceMaximalFamily> {
    if a < 1 || b < 1 || c < 1 {
        return Err(Error::BadParams("parameters must be >= 1".into()));
    }
    let gens = [b * c + b + 1, c * a + c + 1, a * b + a + 1];
    if gcd(gens[0], gens[1]) != 1 {
        return Err(Error::GcdFail(format!(
            "gcd(bc+b+1, ca+c+1) = gcd({}, {}) != 1",
            gens[0], gens[1]
        )));
    }
    let fr = 2 * a * b * c - 2;
    build_tm(a, b, c, gens, fr, true)
}

impl TraceMaximalFamily {
    pub fn verify(&self) -> Result<()> {
        let h = &self.semigroup;
        ensure("Fr", &self.predicted_frobenius, &h.frobenius())?;
        let tr = ideal::trace_ideal(h)?;
        // tr(H) = M for non-symmetric H is exactly residue 1.
        ensure("residue", &1u64, &tr.residue)?;
        let is_m = tr.position == TracePosition::EqualsM || tr.also_equals_m;
        ensure("tr = M", &true, &is_m)?;
        if self.predicted_pseudo_symmetric {
            ensure("pseudo-symmetric", &true, &h.is_pseudo_symmetric())?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct ConductorFamily {
    pub a: i128,
    pub semigroup: NumericalSemigroup,
    pub predicted_residue: u64,
}

/// The trace-conductor family <3, 3a+1, 3a+2>: tr(H) = C_H and res(H) = a.
pub fn conductor_family(a: i128) -> Result<ConductorFamily> {
    if a < 1 {
        return Err(Error::BadParams("shift a must be >= 1".into()));
    }
    let semigroup = NumericalSemigroup::new(&[3, 3 * a + 1, 3 * a + 2])?;
    Ok(ConductorFamily {
        a,
        semigroup,
        predicted_residue: a as u64,
    })
}

impl ConductorFamily {
    pub fn verify(&self) -> Result<()> {
        let tr = ideal::trace_ideal(&self.semigroup)?;
        ensure("residue", &self.predicted_residue, &tr.residue)?;
        ensure("tr = C_H", &TracePosition::EqualsConductor, &tr.position)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_examples() {
        let f = arithmetic(ArithmeticParams::new(5, 1, 3).unwrap()).unwrap();
        assert_eq!(f.predicted_frobenius, 9);
        assert_eq!(f.predicted_pf, [8, 9]);
        assert_eq!(f.predicted_type, 2);
        assert!(!f.predicted_almost_symmetric);
        f.verify().unwrap();

        let f = arithmetic(ArithmeticParams::new(4, 1, 4).unwrap()).unwrap();
        assert!(f.predicted_almost_symmetric && !f.predicted_symmetric);
        f.verify().unwrap();

        let f = arithmetic(ArithmeticParams::new(5, 3, 4).unwrap()).unwrap();
        assert!(f.predicted_symmetric);
        f.verify().unwrap();

        assert!(matches!(
            ArithmeticParams::new(4, 2, 3),
            Err(Error::BadParams(_))
        ));
        assert!(matches!(
            ArithmeticParams::new(3, 1, 4),
            Err(Error::BadParams(_))
        ));
    }

    #[test]
    fn med_examples() {
        let f = med_family(3, 2).unwrap();
        assert_eq!(f.semigroup.gens(), [3, 7, 8]);
        assert_eq!(f.predicted_residue, 2);
        f.verify().unwrap();

        let f = med_family(4, 3).unwrap();
        assert_eq!(f.semigroup.gens(), [4, 13, 14, 15]);
        f.verify().unwrap();

        let f = med_family(2, 5).unwrap();
        assert_eq!(f.semigroup.gens(), [2, 11]);
        assert!(!f.predictions_apply);
        assert!(f.semigroup.is_symmetric());
        f.verify().unwrap();
    }

    #[test]
    fn tm_i_examples() {
        let f = family_tm_i(1, 2, 1).unwrap();
        assert_eq!(f.semigroup.gens(), [3, 4, 5]);
        assert_eq!(f.predicted_frobenius, 2);
        f.verify().unwrap();

        let f = family_tm_i(2, 1, 1).unwrap();
        f.verify().unwrap();

        // (1,1,1) passes the gcd test (gcd(1,0) = 1) but collapses to <3>.
        assert!(matches!(family_tm_i(1, 1, 1), Err(Error::Degenerate(_))));
        // gcd(b+c-1, ab-c) = gcd(3, 0) = 3
        assert!(matches!(family_tm_i(1, 2, 2), Err(Error::GcdFail(_))));
    }

    #[test]
    fn tm_ii_examples() {
        let f = family_tm_ii(1, 1, 2).unwrap();
        assert_eq!(f.semigroup.gens(), [3, 4, 5]);
        assert_eq!(f.predicted_frobenius, 2);
        f.verify().unwrap();

        let f = family_tm_ii(1, 2, 1).unwrap();
        assert_eq!(f.predicted_frobenius, 2);
        f.verify().unwrap();

        // All three generators collapse to 7.
        assert!(matches!(family_tm_ii(2, 2, 2), Err(Error::GcdFail(_))));
    }

    #[test]
    fn conductor_examples() {
        for a in [1i128, 2, 4] {
            let f = conductor_family(a).unwrap();
            assert_eq!(f.predicted_residue, a as u64);
            f.verify().unwrap();
        }
        assert_eq!(conductor_family(2).unwrap().semigroup.gens(), [3, 7, 8]);
        assert_eq!(conductor_family(4).unwrap().semigroup.gens(), [3, 13, 14]);
    }
}
