//! Relative-ideal arithmetic over a fixed numerical semigroup: the canonical
//! ideal, its dual, the canonical trace ideal, the conductor ideal, the
//! residue and the classification predicates built on them.
//!
//! Relative ideals are always represented by minimal generators. Element sets
//! are only derived on explicit windows with a proven tail bound, so results
//! are exact without heuristic cutoffs.

use crate::arith;
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;
use serde::Serialize;

/// A relative ideal of H given by finitely many (possibly negative) integer
/// generators; membership means x - g in H for some generator g.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelativeIdeal {
    base: NumericalSemigroup,
    gens: Vec<i128>,
}

/// Position of tr(H) in the chain C_H <= tr(H) <= H.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TracePosition {
    WholeH,
    EqualsM,
    StrictlyBetween,
    EqualsConductor,
}

impl std::fmt::Display for TracePosition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            TracePosition::WholeH => "whole_h",
            TracePosition::EqualsM => "equals_m",
            TracePosition::StrictlyBetween => "strictly_between",
            TracePosition::EqualsConductor => "equals_conductor",
        };
        f.write_str(s)
    }
}

/// Canonical trace ideal data of a semigroup.
#[derive(Debug, Clone)]
pub struct TraceData {
    pub base: NumericalSemigroup,
    /// Minimal generators of tr(H).
    pub gens: Vec<i128>,
    /// tr(H) restricted to [0, Fr(H)]; all larger elements of H lie in tr(H).
    pub sporadic: Vec<i128>,
    pub residue: u64,
    pub position: TracePosition,
    /// Set when M and C_H coincide below the conductor, so the position
    /// EqualsConductor also means tr(H) = M.
    pub also_equals_m: bool,
}

fn minimalize(base: &NumericalSemigroup, mut cands: Vec<i128>) -> Vec<i128> {
    cands.sort_unstable();
    cands.dedup();
    let mut kept: Vec<i128> = Vec::new();
    for c in cands {
        if !kept.iter().any(|&k| base.contains(c - k)) {
            kept.push(c);
        }
    }
    kept
}

impl RelativeIdeal {
    pub fn new(base: &NumericalSemigroup, gens: &[i128]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyInput);
        }
        for &g in gens {
            arith::guard(g)?;
        }
        Ok(RelativeIdeal {
            base: base.clone(),
            gens: minimalize(base, gens.to_vec()),
        })
    }

    pub fn base(&self) -> &NumericalSemigroup {
        &self.base
    }

    pub fn gens(&self) -> &[i128] {
        &self.gens
    }

    pub fn member(&self, x: i128) -> bool {
        self.gens.iter().any(|&g| self.base.contains(x - g))
    }

    /// Ideal sum: generated by all pairwise sums of generators.
    pub fn sum(&self, other: &RelativeIdeal) -> Result<RelativeIdeal> {
        if self.base != other.base {
            return Err(Error::BaseMismatch);
        }
        let mut cands = Vec::with_capacity(self.gens.len() * other.gens.len());
        for &g in &self.gens {
            for &h in &other.gens {
                cands.push(arith::add(g, h)?);
            }
        }
        Ok(RelativeIdeal {
            base: self.base.clone(),
            gens: minimalize(&self.base, cands),
        })
    }

    /// The dual H - I = {x : x + I <= H}. Membership is checked on the
    /// generators of I; every x >= c(H) - min(gens) is a member, so scanning
    /// the window below that tail is exhaustive.
    pub fn dual(&self) -> Result<RelativeIdeal> {
        self.dual_with_slack(0)
    }

    /// Like `dual`, with the scan window stretched by `slack`. The default
    /// window is already exact; this is a stress hook for verifying that.
    pub fn dual_with_slack(&self, slack: i128) -> Result<RelativeIdeal> {
        if slack < 0 {
            return Err(Error::BadRange("window slack must be >= 0".into()));
        }
        let min_gen = *self.gens.first().unwrap();
        let lo = -min_gen;
        let tail = arith::add(arith::sub(self.base.conductor(), min_gen)?, slack)?;
        let is_member = |x: i128| self.gens.iter().all(|&g| self.base.contains(x + g));
        let mut cands: Vec<i128> = (lo..tail).filter(|&x| is_member(x)).collect();
        // The tail x >= tail is generated, as an ideal, by its first mult values.
        for t in 0..self.base.mult() {
            cands.push(tail + t);
        }
        let gens = minimalize(&self.base, cands);
        // Window membership must agree with the extracted generators.
        debug_assert!((lo..tail + 2 * self.base.mult())
            .all(|x| { is_member(x) == gens.iter().any(|&g| self.base.contains(x - g)) }));
        Ok(RelativeIdeal {
            base: self.base.clone(),
            gens,
        })
    }
}

/// The canonical ideal Omega_H, generated by {-f : f in PF(H)}.
pub fn canonical_ideal(h: &NumericalSemigroup) -> Result<RelativeIdeal> {
    if h.is_trivial() {
        return Err(Error::TrivialSemigroup);
    }
    let gens: Vec<i128> = h.pseudo_frobenius().iter().map(|&f| -f).collect();
    RelativeIdeal::new(h, &gens)
}

/// The conductor ideal C_H, minimally generated by c(H), ..., c(H)+mult-1.
pub fn conductor_ideal(h: &NumericalSemigroup) -> RelativeIdeal {
    let c = h.conductor();
    let gens: Vec<i128> = (0..h.mult()).map(|t| c + t).collect();
    RelativeIdeal {
        base: h.clone(),
        gens: minimalize(h, gens),
    }
}

/// Computes the canonical trace ideal tr(H) = Omega_H + Omega_H^{-1},
/// cross-checked against the direct pseudo-Frobenius membership formula:
/// x in tr(H) iff some f in PF(H) has x + f - g in H for every g in PF(H).
pub fn trace_ideal(h: &NumericalSemigroup) -> Result<TraceData> {
    if h.is_symmetric() {
        // Gorenstein fast path: Omega is principal and tr(H) = H.
        let sporadic = h.nongaps();
        return Ok(TraceData {
            base: h.clone(),
            gens: vec![0],
            sporadic,
            residue: 0,
            position: TracePosition::WholeH,
            also_equals_m: false,
        });
    }
    let omega = canonical_ideal(h)?;
    let omega_inv = omega.dual()?;
    let tr = omega.sum(&omega_inv)?;

    let pf = h.pseudo_frobenius();
    let direct = |x: i128| {
        pf.iter()
            .any(|&f| pf.iter().all(|&g| h.contains(x + f - g)))
    };
    let fr = h.frobenius();
    for x in -fr..=3 * fr + 1 {
        if tr.member(x) != direct(x) {
            return Err(Error::InternalInconsistency(format!(
                "trace routes disagree at x={x} on {h}"
            )));
        }
    }

    let sporadic: Vec<i128> = (0..=fr).filter(|&x| tr.member(x)).collect();
    debug_assert!(!sporadic.contains(&0), "tr(H) <= M for non-symmetric H");
    let residue = h.nongaps().iter().filter(|x| !sporadic.contains(x)).count() as u64;

    let m_below: Vec<i128> = h.nongaps().into_iter().filter(|&x| x > 0).collect();
    let (position, also_equals_m) = if sporadic.is_empty() {
        // C_H has no elements below the conductor; tr = C_H. When M also has
        // none, the two ends of the chain coincide.
        (TracePosition::EqualsConductor, m_below.is_empty())
    } else if sporadic == m_below {
        (TracePosition::EqualsM, false)
    } else {
        (TracePosition::StrictlyBetween, false)
    };

    Ok(TraceData {
        base: h.clone(),
        gens: tr.gens,
        sporadic,
        residue,
        position,
        also_equals_m,
    })
}

/// res(H) = |H \ tr(H)|.
pub fn residue(h: &NumericalSemigroup) -> Result<u64> {
    Ok(trace_ideal(h)?.residue)
}

/// Nearly Gorenstein iff M <= tr(H); checking the minimal generators of H
/// suffices since tr(H) is an ideal of H. Consistency with residue <= 1 is
/// asserted.
pub fn is_nearly_gorenstein(h: &NumericalSemigroup) -> Result<bool> {
    let tr = trace_ideal(h)?;
    let member =
        |x: i128| x > tr.base.frobenius() && tr.base.contains(x) || tr.sporadic.contains(&x);
    let ng = h.gens().iter().all(|&g| member(g));
    assert_eq!(
        ng,
        tr.residue <= 1,
        "nearly Gorenstein criteria disagree on {h}"
    );
    Ok(ng)
}

/// Residue bounds: res(H) <= n(H) always, with equality iff tr(H) = C_H,
/// and the open question res(H) <= g(H) - n(H).
#[derive(Debug, Clone, Serialize)]
pub struct BoundsReport {
    pub res: u64,
    pub n: u64,
    pub g: u64,
    /// res <= n (a theorem; false here is a bug).
    pub cor13_ok: bool,
    /// res = n exactly when tr(H) = C_H.
    pub cor13_tight: bool,
    /// res <= g - n; open in general, reported but never asserted.
    pub q12_ok: bool,
}

pub fn bounds_report(h: &NumericalSemigroup) -> Result<BoundsReport> {
    let tr = trace_ideal(h)?;
    let n = h.nongaps_count() as u64;
    let g = h.genus() as u64;
    Ok(BoundsReport {
        res: tr.residue,
        n,
        g,
        cor13_ok: tr.residue <= n,
        cor13_tight: (tr.residue == n) == (tr.position == TracePosition::EqualsConductor),
        q12_ok: tr.residue as i128 <= g as i128 - n as i128,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(gens: &[i128]) -> NumericalSemigroup {
        NumericalSemigroup::new(gens).unwrap()
    }

    #[test]
    fn ideal_minimalization() {
        let s = h(&[3, 4, 5]);
        assert_eq!(RelativeIdeal::new(&s, &[-1, -2]).unwrap().gens(), [-2, -1]);
        assert_eq!(RelativeIdeal::new(&s, &[0, 3, 4]).unwrap().gens(), [0]);
        let s = h(&[3, 7, 8]);
        assert_eq!(
            RelativeIdeal::new(&s, &[6, 7, 8, 9]).unwrap().gens(),
            [6, 7, 8]
        );
        assert_eq!(RelativeIdeal::new(&s, &[]).unwrap_err(), Error::EmptyInput);
    }

    #[test]
    fn ideal_membership() {
        let s = h(&[3, 4, 5]);
        let omega = canonical_ideal(&s).unwrap();
        assert!(omega.member(-2));
        assert!(!omega.member(0));
        let s = h(&[3, 7, 8]);
        let cond = conductor_ideal(&s);
        assert!(!cond.member(5));
        assert!(cond.member(6));
    }

    #[test]
    fn sum_identity_and_pairs() {
        let s = h(&[3, 4, 5]);
        let i = RelativeIdeal::new(&s, &[-2, -1]).unwrap();
        let unit = RelativeIdeal::new(&s, &[0]).unwrap();
        assert_eq!(i.sum(&unit).unwrap(), i);
        let j = RelativeIdeal::new(&s, &[3]).unwrap();
        assert_eq!(i.sum(&j).unwrap().gens(), [1, 2]);
        let other = h(&[2, 3]);
        let k = RelativeIdeal::new(&other, &[0]).unwrap();
        assert_eq!(i.sum(&k).unwrap_err(), Error::BaseMismatch);
    }

    #[test]
    fn dual_basics() {
        let s = h(&[3, 4, 5]);
        let unit = RelativeIdeal::new(&s, &[0]).unwrap();
        assert_eq!(unit.dual().unwrap().gens(), [0]);
        // biduality inclusion
        let omega = canonical_ideal(&s).unwrap();
        let bidual = omega.dual().unwrap().dual().unwrap();
        for x in -10..30 {
            if omega.member(x) {
                assert!(bidual.member(x));
            }
        }
    }

    #[test]
    fn canonical_ideals() {
        assert_eq!(canonical_ideal(&h(&[3, 4, 5])).unwrap().gens(), [-2, -1]);
        assert_eq!(canonical_ideal(&h(&[3, 7, 8])).unwrap().gens(), [-5, -4]);
        assert_eq!(canonical_ideal(&h(&[2, 3])).unwrap().gens(), [-1]);
        assert_eq!(
            canonical_ideal(&h(&[1])).unwrap_err(),
            Error::TrivialSemigroup
        );
    }

    #[test]
    fn trace_examples() {
        let t = trace_ideal(&h(&[3, 7, 8])).unwrap();
        assert_eq!(t.residue, 2);
        assert_eq!(t.position, TracePosition::EqualsConductor);
        assert!(t.sporadic.is_empty());

        let t = trace_ideal(&h(&[3, 4, 5])).unwrap();
        assert_eq!(t.residue, 1);
        // Fr = 2, so M and C_H coincide below the conductor.
        assert_eq!(t.position, TracePosition::EqualsConductor);
        assert!(t.also_equals_m);

        let t = trace_ideal(&h(&[2, 3])).unwrap();
        assert_eq!(t.residue, 0);
        assert_eq!(t.position, TracePosition::WholeH);
    }

    #[test]
    fn trace_equals_m_example() {
        // <5,6,7>: arithmetic sequence, nearly Gorenstein, not symmetric.
        let t = trace_ideal(&h(&[5, 6, 7])).unwrap();
        assert_eq!(t.residue, 1);
        assert_eq!(t.position, TracePosition::EqualsM);
    }

    #[test]
    fn conductor_ideals() {
        let s = h(&[3, 7, 8]);
        assert_eq!(s.conductor(), 6);
        assert_eq!(conductor_ideal(&s).gens(), [6, 7, 8]);
        let s = h(&[2, 3]);
        assert_eq!(s.conductor(), 2);
        assert_eq!(conductor_ideal(&s).gens(), [2, 3]);
        let s = h(&[1]);
        assert_eq!(s.conductor(), 0);
        assert_eq!(conductor_ideal(&s).gens(), [0]);
    }

    #[test]
    fn residues() {
        for a in 1..=5i128 {
            assert_eq!(residue(&h(&[3, 3 * a + 1, 3 * a + 2])).unwrap(), a as u64);
        }
        assert_eq!(residue(&h(&[4, 13, 14, 15])).unwrap(), 3);
        let (s, _) = NumericalSemigroup::normalize(&[6, 8, 10]).unwrap();
        assert_eq!(residue(&s).unwrap(), 1);
        assert_eq!(residue(&h(&[9, 11, 12])).unwrap(), 0);
    }

    #[test]
    fn nearly_gorenstein() {
        assert!(is_nearly_gorenstein(&h(&[5, 6, 7])).unwrap());
        assert!(!is_nearly_gorenstein(&h(&[3, 7, 8])).unwrap());
        assert!(is_nearly_gorenstein(&h(&[2, 3])).unwrap());
    }

    #[test]
    fn bounds() {
        let b = bounds_report(&h(&[3, 7, 8])).unwrap();
        assert_eq!((b.res, b.n, b.g), (2, 2, 4));
        assert!(b.cor13_ok && b.cor13_tight && b.q12_ok);

        // <5,...,9>: res 1 = n < g - n = 3.
        let b = bounds_report(&h(&[5, 6, 7, 8, 9])).unwrap();
        assert_eq!((b.res, b.n, b.g), (1, 1, 4));
        assert!(b.q12_ok);

        let b = bounds_report(&h(&[9, 11, 12])).unwrap();
        assert_eq!(b.res, 0);
        assert_eq!(b.n, b.g);
    }
}
