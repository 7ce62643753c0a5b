//! Numerical semigroup arithmetic: membership, Apéry sets, gaps, Frobenius
//! number, pseudo-Frobenius numbers and the counting invariants n(H), g(H).

use crate::arith::{self, gcd_all};
use crate::error::{Error, Result};
use std::collections::BinaryHeap;
use std::sync::OnceLock;

/// A numerical semigroup given by its minimal generating set.
///
/// Invariants (Apéry set, Frobenius number, gaps, pseudo-Frobenius set) are
/// computed lazily on first use and frozen; the value is immutable afterwards
/// and safe to share across threads.
#[derive(Debug)]
pub struct NumericalSemigroup {
    gens: Vec<i128>,
    cache: OnceLock<Invariants>,
}

#[derive(Debug, Clone)]
struct Invariants {
    /// apery[i] is the least element of H congruent to i mod mult.
    apery: Vec<i128>,
    frobenius: i128,
    gaps: Vec<i128>,
    pf: Vec<i128>,
}

impl Clone for NumericalSemigroup {
    fn clone(&self) -> Self {
        let cache = OnceLock::new();
        if let Some(inv) = self.cache.get() {
            let _ = cache.set(inv.clone());
        }
        NumericalSemigroup {
            gens: self.gens.clone(),
            cache,
        }
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens
    }
}
impl Eq for NumericalSemigroup {}

impl std::fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

/// Dynamic-programming membership test, independent of any cached data.
/// `gens` need not be minimal nor have gcd 1.
pub fn dp_member(x: i128, gens: &[i128]) -> bool {
    if x < 0 {
        return false;
    }
    if x == 0 {
        return true;
    }
    let n = x as usize;
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for i in 1..=n {
        for &g in gens {
            let g = g as usize;
            if g <= i && reach[i - g] {
                reach[i] = true;
                break;
            }
        }
    }
    reach[n]
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `gens`, minimalizing the list.
    /// Requires all generators positive with overall gcd 1.
    pub fn new(gens: &[i128]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyInput);
        }
        for &g in gens {
            if g <= 0 {
                return Err(Error::InvalidGenerator(g));
            }
            arith::guard(g)?;
        }
        let d = gcd_all(gens);
        if d != 1 {
            return Err(Error::NonPrimitive(d));
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        // A generator larger than all kept ones can never help represent a
        // smaller one, so a single increasing pass minimalizes the list.
        let mut minimal: Vec<i128> = Vec::with_capacity(sorted.len());
        for g in sorted {
            if !dp_member(g, &minimal) {
                minimal.push(g);
            }
        }
        let h = NumericalSemigroup {
            gens: minimal,
            cache: OnceLock::new(),
        };
        debug_assert!(h.edim() as i128 <= h.mult());
        Ok(h)
    }

    /// Divides out the gcd: returns (H/d, d) where d = gcd(gens).
    /// This is the residue extension to non-primitive subsemigroups of N.
    pub fn normalize(gens: &[i128]) -> Result<(Self, i128)> {
        if gens.is_empty() {
            return Err(Error::EmptyInput);
        }
        for &g in gens {
            if g <= 0 {
                return Err(Error::InvalidGenerator(g));
            }
        }
        let d = gcd_all(gens);
        let reduced: Vec<i128> = gens.iter().map(|&g| g / d).collect();
        Ok((Self::new(&reduced)?, d))
    }

    pub fn gens(&self) -> &[i128] {
        &self.gens
    }

    /// Multiplicity: the smallest nonzero element.
    pub fn mult(&self) -> i128 {
        self.gens[0]
    }

    /// Embedding dimension: the number of minimal generators.
    pub fn edim(&self) -> usize {
        self.gens.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.gens == [1]
    }

    fn invariants(&self) -> &Invariants {
        self.cache.get_or_init(|| self.compute_invariants())
    }

    fn compute_invariants(&self) -> Invariants {
        let apery = self
            .apery_set(self.mult())
            .expect("multiplicity is a nonzero element");
        let m = self.mult();
        let frobenius = apery.iter().copied().max().unwrap() - m;
        let mut gaps: Vec<i128> = Vec::new();
        for &w in &apery {
            let mut x = w - m;
            while x > 0 {
                gaps.push(x);
                x -= m;
            }
        }
        gaps.sort_unstable();
        debug_assert_eq!(gaps.last().copied().unwrap_or(-1), frobenius);

        let member = |x: i128| x >= 0 && x >= apery[(x % m) as usize];

        // PF via maximal Apéry elements under the order a <=_H b iff b-a in H.
        // For <1> there are no gaps and PF is empty by convention.
        let mut pf: Vec<i128> = if self.is_trivial() {
            Vec::new()
        } else {
            apery
                .iter()
                .filter(|&&w| !apery.iter().any(|&w2| w2 != w && member(w2 - w)))
                .map(|&w| w - m)
                .collect()
        };
        pf.sort_unstable();
        // Second route: gaps f with f + n_i in H for every generator.
        let pf2: Vec<i128> = gaps
            .iter()
            .copied()
            .filter(|&f| self.gens.iter().all(|&g| member(f + g)))
            .collect();
        if !self.is_trivial() {
            assert_eq!(pf, pf2, "pseudo-Frobenius routes disagree on {self}");
        }

        // n(H) + g(H) = Fr(H) + 1, with n(H) counted directly.
        let nongaps = (0..frobenius.max(0)).filter(|&x| member(x)).count();
        assert_eq!(
            nongaps as i128 + gaps.len() as i128,
            frobenius + 1,
            "n(H) + g(H) != Fr(H) + 1 on {self}"
        );

        Invariants {
            apery,
            frobenius,
            gaps,
            pf,
        }
    }

    /// The Apéry set of H with respect to n: entry i is the least element of H
    /// congruent to i mod n. Computed by Dijkstra relaxation over the residue
    /// classes, each generator contributing an edge.
    pub fn apery_set(&self, n: i128) -> Result<Vec<i128>> {
        if n <= 0 || !self.contains_dp(n) {
            return Err(Error::NotAnElement(n));
        }
        let m = n as usize;
        let mut dist = vec![i128::MAX; m];
        dist[0] = 0;
        let mut heap: BinaryHeap<(std::cmp::Reverse<i128>, usize)> = BinaryHeap::new();
        heap.push((std::cmp::Reverse(0), 0));
        while let Some((std::cmp::Reverse(d), r)) = heap.pop() {
            if d > dist[r] {
                continue;
            }
            for &g in &self.gens {
                let nd = arith::add(d, g).expect("Apéry relaxation overflow");
                let nr = ((r as i128 + g) % n) as usize;
                if nd < dist[nr] {
                    dist[nr] = nd;
                    heap.push((std::cmp::Reverse(nd), nr));
                }
            }
        }
        debug_assert!(dist.iter().all(|&d| d < i128::MAX));
        Ok(dist)
    }

    /// Membership via DP, bypassing the cache. Used during construction and
    /// as an independent cross-check of the Apéry route.
    pub fn contains_dp(&self, x: i128) -> bool {
        dp_member(x, &self.gens)
    }

    /// Membership via the cached Apéry set: x in H iff x >= 0 and
    /// x >= apery[x mod mult].
    pub fn contains(&self, x: i128) -> bool {
        if x < 0 {
            return false;
        }
        let inv = self.invariants();
        x >= inv.apery[(x % self.mult()) as usize]
    }

    /// Largest gap; -1 for H = <1> by convention.
    pub fn frobenius(&self) -> i128 {
        self.invariants().frobenius
    }

    /// Conductor c(H) = Fr(H) + 1.
    pub fn conductor(&self) -> i128 {
        self.frobenius() + 1
    }

    pub fn gaps(&self) -> &[i128] {
        &self.invariants().gaps
    }

    /// Genus g(H) = number of gaps.
    pub fn genus(&self) -> usize {
        self.invariants().gaps.len()
    }

    /// n(H) = |{x in H : x < Fr(H)}|; always n(H) + g(H) = Fr(H) + 1.
    pub fn nongaps_count(&self) -> usize {
        (self.frobenius() + 1 - self.genus() as i128) as usize
    }

    /// Nongaps of H: elements of H strictly below Fr(H), including 0.
    pub fn nongaps(&self) -> Vec<i128> {
        (0..self.frobenius().max(0))
            .filter(|&x| self.contains(x))
            .collect()
    }

    /// Sorted pseudo-Frobenius numbers; empty for H = <1>.
    pub fn pseudo_frobenius(&self) -> &[i128] {
        &self.invariants().pf
    }

    /// type(H) = |PF(H)|, with type(<1>) = 1 by convention.
    pub fn semigroup_type(&self) -> usize {
        if self.is_trivial() {
            1
        } else {
            self.invariants().pf.len()
        }
    }

    /// Symmetric iff type 1 iff n(H) = g(H); both tests run and must agree.
    pub fn is_symmetric(&self) -> bool {
        let by_type = self.semigroup_type() == 1;
        let by_count = self.nongaps_count() == self.genus();
        assert_eq!(by_type, by_count, "symmetry criteria disagree on {self}");
        by_type
    }

    /// Almost symmetric via Nari's pairing: with PF = {f_1 < ... < f_tau},
    /// f_i + f_{tau-i} = Fr(H) for all i.
    pub fn is_almost_symmetric(&self) -> bool {
        if self.is_symmetric() {
            return true;
        }
        let pf = self.pseudo_frobenius();
        let tau = pf.len();
        let fr = self.frobenius();
        (1..tau).all(|i| pf[i - 1] + pf[tau - 1 - i] == fr)
    }

    /// Pseudo-symmetric: Fr(H) even and PF(H) = {Fr/2, Fr}.
    pub fn is_pseudo_symmetric(&self) -> bool {
        let fr = self.frobenius();
        fr > 0 && fr % 2 == 0 && self.pseudo_frobenius() == [fr / 2, fr]
    }
}
