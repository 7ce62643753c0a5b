//! Fast path for non-symmetric 3-generated semigroups: the structure matrix,
//! the closed-form residue d1*d2*d3, the Frobenius formula and recognition of
//! trace-maximal / trace-conductor semigroups.

use crate::arith::{self, gcd};
use crate::error::{Error, Result};
use crate::ideal::TracePosition;
use crate::semigroup::{dp_member, NumericalSemigroup};

/// Exponent data of the minimal relations
///
/// ```text
/// c1 n1 = b2 n2 + a3 n3
/// c2 n2 = a1 n1 + b3 n3
/// c3 n3 = b1 n1 + a2 n2
/// ```
///
/// with all coefficients positive, unique and c_i = a_i + b_i. The labeling
/// `n` is the one in which the cyclic slot pattern holds; `perm[i]` tells
/// which input generator sits in slot i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureMatrix {
    pub n: [i128; 3],
    pub a: [i128; 3],
    pub b: [i128; 3],
    pub c: [i128; 3],
    pub perm: [usize; 3],
}

impl StructureMatrix {
    pub fn d(&self) -> [i128; 3] {
        [
            self.a[0].min(self.b[0]),
            self.a[1].min(self.b[1]),
            self.a[2].min(self.b[2]),
        ]
    }

    pub fn residue(&self) -> u64 {
        let d = self.d();
        (d[0] * d[1] * d[2]) as u64
    }
}

/// Outcome of the minimal-representation search for one generator.
enum Rep {
    /// Unique representation with positive coefficients.
    Unique { c: i128, alpha: i128, beta: i128 },
    /// Zero coefficient or several representations at the minimal c: the
    /// complete-intersection (symmetric) signal.
    SymmetricSignal,
}

/// Finds the minimal c >= 1 such that c*t is a nonnegative combination of p
/// and q, and inspects the representations there. The bound c <= p*q is
/// crude but safe: beyond lcm territory a representation always exists.
fn min_rep(t: i128, p: i128, q: i128) -> Result<Rep> {
    for c in 1..=arith::mul(p, q)? {
        let target = arith::mul(c, t)?;
        let mut reps: Vec<(i128, i128)> = Vec::new();
        let mut alpha = 0;
        loop {
            let rest = target - alpha * p;
            if rest < 0 {
                break;
            }
            if rest % q == 0 {
                reps.push((alpha, rest / q));
            }
            alpha += 1;
        }
        if reps.is_empty() {
            continue;
        }
        if reps.len() > 1 || reps[0].0 == 0 || reps[0].1 == 0 {
            return Ok(Rep::SymmetricSignal);
        }
        let (alpha, beta) = reps[0];
        return Ok(Rep::Unique { c, alpha, beta });
    }
    Err(Error::InternalInconsistency(format!(
        "no representation of multiples of {t} over {p}, {q}"
    )))
}

fn try_labeling(n: [i128; 3], perm: [usize; 3]) -> Result<Option<StructureMatrix>> {
    let mut a = [0i128; 3];
    let mut b = [0i128; 3];
    let mut c = [0i128; 3];
    // c1 n1 = b2 n2 + a3 n3
    match min_rep(n[0], n[1], n[2])? {
        Rep::SymmetricSignal => return Err(Error::SymmetricInput),
        Rep::Unique { c: cc, alpha, beta } => {
            c[0] = cc;
            b[1] = alpha;
            a[2] = beta;
        }
    }
    // c2 n2 = a1 n1 + b3 n3
    match min_rep(n[1], n[0], n[2])? {
        Rep::SymmetricSignal => return Err(Error::SymmetricInput),
        Rep::Unique { c: cc, alpha, beta } => {
            c[1] = cc;
            a[0] = alpha;
            b[2] = beta;
        }
    }
    // c3 n3 = b1 n1 + a2 n2
    match min_rep(n[2], n[0], n[1])? {
        Rep::SymmetricSignal => return Err(Error::SymmetricInput),
        Rep::Unique { c: cc, alpha, beta } => {
            c[2] = cc;
            b[0] = alpha;
            a[1] = beta;
        }
    }
    for i in 0..3 {
        if c[i] != a[i] + b[i] {
            return Ok(None);
        }
    }
    // Generator recovery from the matrix entries.
    let rec = [
        a[1] * a[2] + b[1] * a[2] + b[1] * b[2],
        a[0] * a[2] + a[0] * b[2] + b[0] * b[2],
        a[0] * a[1] + b[0] * a[1] + b[0] * b[1],
    ];
    if rec != n {
        return Ok(None);
    }
    Ok(Some(StructureMatrix { n, a, b, c, perm }))
}

fn three_gens(h: &NumericalSemigroup) -> Result<[i128; 3]> {
    match h.gens() {
        [x, y, z] => Ok([*x, *y, *z]),
        g => Err(Error::NotThreeGenerated(g.len())),
    }
}

/// Herzog's criterion: a minimally 3-generated semigroup is symmetric iff,
/// up to a permutation, d = gcd(n1, n2) > 1 and n3 in <n1/d, n2/d>.
pub fn symmetric3(n1: i128, n2: i128, n3: i128) -> Result<bool> {
    let h = NumericalSemigroup::new(&[n1, n2, n3])?;
    if h.edim() != 3 {
        return Err(Error::NotThreeGenerated(h.edim()));
    }
    let by_gcd = [(n1, n2, n3), (n1, n3, n2), (n2, n3, n1)]
        .into_iter()
        .any(|(x, y, z)| {
            let d = gcd(x, y);
            d > 1 && dp_member(z, &[x / d, y / d])
        });
    assert_eq!(
        by_gcd,
        h.is_symmetric(),
        "Herzog criterion disagrees with the type-1 test on {h}"
    );
    Ok(by_gcd)
}

/// Computes the structure matrix, retrying the two cyclic relabelings (then
/// the transpositions) of the default increasing labeling if the slot
/// pattern fails.
pub fn structure_matrix(h: &NumericalSemigroup) -> Result<StructureMatrix> {
    let n = three_gens(h)?;
    if symmetric3(n[0], n[1], n[2])? {
        return Err(Error::SymmetricInput);
    }
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [1, 2, 0],
        [2, 0, 1],
        [0, 2, 1],
        [1, 0, 2],
        [2, 1, 0],
    ];
    for perm in PERMS {
        let labeled = [n[perm[0]], n[perm[1]], n[perm[2]]];
        if let Some(m) = try_labeling(labeled, perm)? {
            return Ok(m);
        }
    }
    Err(Error::LabelMismatch)
}

/// res(H) = d1*d2*d3 for non-symmetric H; 0 for symmetric H.
pub fn residue3(h: &NumericalSemigroup) -> Result<u64> {
    let n = three_gens(h)?;
    if symmetric3(n[0], n[1], n[2])? {
        return Ok(0);
    }
    Ok(structure_matrix(h)?.residue())
}

/// Frobenius number via the structure matrix:
/// max{c1 n1 + b3 n3, c2 n2 + a3 n3} - (n1 + n2 + n3).
/// Always validated against the Apéry computation.
pub fn frobenius3(h: &NumericalSemigroup) -> Result<i128> {
    let m = structure_matrix(h)?;
    let lhs = arith::add(arith::mul(m.c[0], m.n[0])?, arith::mul(m.b[2], m.n[2])?)?;
    let rhs = arith::add(arith::mul(m.c[1], m.n[1])?, arith::mul(m.a[2], m.n[2])?)?;
    let fr = lhs.max(rhs) - (m.n[0] + m.n[1] + m.n[2]);
    assert_eq!(fr, h.frobenius(), "Frobenius formula mismatch on {h}");
    Ok(fr)
}

#[derive(Debug, Clone)]
pub struct GenusIdentity {
    pub lhs: i128,
    pub rhs_set: [i128; 2],
    pub ok: bool,
}

/// 2g(H) - (Fr(H)+1) must land in {a1 a2 a3, b1 b2 b3}.
pub fn genus_identity_check(h: &NumericalSemigroup) -> Result<GenusIdentity> {
    let m = structure_matrix(h)?;
    let lhs = 2 * h.genus() as i128 - (h.frobenius() + 1);
    let rhs_set = [m.a[0] * m.a[1] * m.a[2], m.b[0] * m.b[1] * m.b[2]];
    Ok(GenusIdentity {
        lhs,
        rhs_set,
        ok: rhs_set.contains(&lhs),
    })
}

/// If H = <3, 3a+1, 3a+2> for some a >= 1, returns a.
pub fn conductor_family_shift(h: &NumericalSemigroup) -> Option<i128> {
    match h.gens() {
        [3, x, y] if *y == *x + 1 && (*x - 1) % 3 == 0 => Some((*x - 1) / 3),
        _ => None,
    }
}

/// Position of tr(H) from the matrix data alone: tr = M iff all d_i = 1;
/// tr = C_H exactly on the family <3, 3a+1, 3a+2>.
pub fn trace_position3(h: &NumericalSemigroup) -> Result<(TracePosition, bool)> {
    let n = three_gens(h)?;
    if symmetric3(n[0], n[1], n[2])? {
        return Ok((TracePosition::WholeH, false));
    }
    if let Some(a) = conductor_family_shift(h) {
        // At a = 1 the conductor ideal coincides with M.
        return Ok((TracePosition::EqualsConductor, a == 1));
    }
    let m = structure_matrix(h)?;
    if m.d() == [1, 1, 1] {
        Ok((TracePosition::EqualsM, false))
    } else {
        Ok((TracePosition::StrictlyBetween, false))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal;

    fn h(gens: &[i128]) -> NumericalSemigroup {
        NumericalSemigroup::new(gens).unwrap()
    }

    #[test]
    fn symmetric_triples() {
        assert!(symmetric3(9, 11, 12).unwrap());
        assert!(!symmetric3(3, 4, 5).unwrap());
        assert!(symmetric3(4, 6, 9).unwrap());
        assert_eq!(
            symmetric3(3, 4, 7).unwrap_err(),
            Error::NotThreeGenerated(2)
        );
    }

    #[test]
    fn structure_matrices() {
        let m = structure_matrix(&h(&[3, 4, 5])).unwrap();
        assert_eq!(m.a, [1, 1, 1]);
        assert_eq!(m.b, [2, 1, 1]);
        assert_eq!(m.c, [3, 2, 2]);

        let m = structure_matrix(&h(&[7, 9, 10])).unwrap();
        assert_eq!(m.a, [1, 1, 1]);
        assert_eq!(m.b, [3, 2, 2]);
        assert_eq!(m.c, [4, 3, 3]);

        let m = structure_matrix(&h(&[3, 7, 8])).unwrap();
        assert_eq!(m.a, [2, 1, 1]);
        assert_eq!(m.b, [3, 1, 1]);
        assert_eq!(m.c, [5, 2, 2]);

        assert_eq!(
            structure_matrix(&h(&[9, 11, 12])).unwrap_err(),
            Error::SymmetricInput
        );
    }

    #[test]
    fn residues() {
        assert_eq!(residue3(&h(&[3, 7, 8])).unwrap(), 2);
        assert_eq!(residue3(&h(&[7, 9, 10])).unwrap(), 1);
        assert_eq!(residue3(&h(&[9, 11, 12])).unwrap(), 0);
        assert_eq!(
            residue3(&h(&[3, 7, 8])).unwrap(),
            ideal::residue(&h(&[3, 7, 8])).unwrap()
        );
    }

    #[test]
    fn frobenius_formula() {
        assert_eq!(frobenius3(&h(&[3, 4, 5])).unwrap(), 2);
        assert_eq!(frobenius3(&h(&[7, 9, 10])).unwrap(), 22);
        assert_eq!(frobenius3(&h(&[3, 7, 8])).unwrap(), 5);
    }

    #[test]
    fn genus_identity() {
        let r = genus_identity_check(&h(&[3, 4, 5])).unwrap();
        assert_eq!(r.lhs, 1);
        assert_eq!(r.rhs_set, [1, 2]);
        assert!(r.ok);

        let r = genus_identity_check(&h(&[3, 7, 8])).unwrap();
        assert_eq!(r.lhs, 2);
        assert_eq!(r.rhs_set, [2, 3]);
        assert!(r.ok);

        assert!(genus_identity_check(&h(&[7, 9, 10])).unwrap().ok);
    }

    #[test]
    fn trace_positions() {
        assert_eq!(
            trace_position3(&h(&[3, 4, 5])).unwrap(),
            (TracePosition::EqualsConductor, true)
        );
        assert_eq!(
            trace_position3(&h(&[3, 10, 11])).unwrap(),
            (TracePosition::EqualsConductor, false)
        );
        assert_eq!(
            trace_position3(&h(&[3, 7, 8])).unwrap(),
            (TracePosition::EqualsConductor, false)
        );
        assert_eq!(
            trace_position3(&h(&[5, 6, 7])).unwrap(),
            (TracePosition::EqualsM, false)
        );
        assert_eq!(
            trace_position3(&h(&[9, 11, 12])).unwrap(),
            (TracePosition::WholeH, false)
        );
    }

    #[test]
    fn positions_match_trace_computation() {
        for gens in [
            [3i128, 4, 5],
            [3, 7, 8],
            [5, 6, 7],
            [7, 9, 10],
            [3, 10, 11],
            [9, 11, 12],
        ] {
            let s = h(&gens);
            let (pos, also_m) = trace_position3(&s).unwrap();
            let t = ideal::trace_ideal(&s).unwrap();
            assert_eq!(pos, t.position, "{s}");
            assert_eq!(also_m, t.also_equals_m, "{s}");
        }
    }
}
