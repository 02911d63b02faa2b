//! Independent reference implementations used by the test suites to check
//! the production code paths: coset enumeration for lattice membership and
//! index, and a congruence scanner for the delta system. Deliberately slow
//! and simple; not used anywhere in the normal computation path.

use std::collections::BTreeSet;

use crate::lattice::{LatticeVector, Rational};

/// The finite group `L / Z^d` enumerated element by element: each coset is
/// represented by its unique representative with all coordinates in
/// `[0, 1)`.
pub struct CosetTable {
    dim: usize,
    elements: BTreeSet<Vec<Rational>>,
}

fn frac(x: &Rational) -> Rational {
    x - x.floor()
}

fn frac_vec(v: &[Rational]) -> Vec<Rational> {
    v.iter().map(frac).collect()
}

/// Breadth-first closure of `{0}` under addition of the adjoined
/// generators, modulo `Z^d`. Panics if the group exceeds `cap` elements
/// (guards against accidental infinite groups from bad input).
pub fn enumerate_cosets(dim: usize, adjoined: &[LatticeVector], cap: usize) -> CosetTable {
    let zero = vec![Rational::from_integer(0.into()); dim];
    let mut elements = BTreeSet::new();
    elements.insert(zero.clone());
    let mut frontier = vec![zero];
    while let Some(e) = frontier.pop() {
        for g in adjoined {
            let next: Vec<Rational> = e
                .iter()
                .zip(g.coords())
                .map(|(a, b)| frac(&(a + b)))
                .collect();
            if elements.insert(next.clone()) {
                assert!(elements.len() <= cap, "coset enumeration exceeded cap");
                frontier.push(next);
            }
        }
    }
    CosetTable { dim, elements }
}

impl CosetTable {
    /// `[L : Z^d]`.
    pub fn index(&self) -> usize {
        self.elements.len()
    }

    /// Membership of an arbitrary rational vector in `L`.
    pub fn contains(&self, x: &LatticeVector) -> bool {
        x.dim() == self.dim && self.elements.contains(&frac_vec(x.coords()))
    }
}

/// One solution of the delta system, found by scanning the congruences
/// directly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeltaOracle {
    pub s1: i64,
    pub s2: i64,
    pub s1star: i64,
    pub s2star: i64,
    pub u1: i64,
    pub u2: i64,
    pub delta1: i64,
    pub delta2: i64,
}

/// Solves the delta system for the tuple `(n, b, a, d, r1)` with
/// `r2 = a*d*n - r1` by brute force: scans `s_i*` over `[0, r_i)` for the
/// inverse congruence. Returns `None` when the tuple is inadmissible
/// (non-integral `s_i` or failing coprimality).
pub fn delta_bruteforce(n: i64, b: i64, a: i64, d: i64, r1: i64) -> Option<DeltaOracle> {
    let r2 = a * d * n - r1;
    if n < 1 || a < 1 || d < 1 || r1 < 1 || r2 < 1 {
        return None;
    }
    if (a - b * r1).rem_euclid(n) != 0 {
        return None;
    }
    let s1 = (a - b * r1) / n;
    let s2 = (a + b * r2) / n;

    let inverse_scan = |s: i64, r: i64| -> Option<i64> {
        if r == 1 {
            return Some(0);
        }
        (0..r).find(|&t| (t * s - 1).rem_euclid(r) == 0)
    };
    let s1star = inverse_scan(s1, r1)?;
    let s2star = inverse_scan(s2, r2)?;
    let u1 = (1 - s1star * s1) / r1;
    let u2 = (1 - s2star * s2) / r2;
    let delta1 = -n * u1 + b * s1star;
    let delta2 = -n * u2 - b * s2star;
    debug_assert_eq!(delta1 * r1 + n, a * s1star);
    debug_assert_eq!(delta2 * r2 + n, a * s2star);
    Some(DeltaOracle {
        s1,
        s2,
        s1star,
        s2star,
        u1,
        u2,
        delta1,
        delta2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Overlattice;

    #[test]
    fn coset_table_matches_overlattice() {
        let g = LatticeVector::scaled(2, &[1, 1, 1, 0]);
        let table = enumerate_cosets(4, &[g.clone()], 1000);
        let l = Overlattice::canonicalize(4, &[g.clone()]).unwrap();
        assert_eq!(table.index(), 2);
        assert_eq!(l.index(), 2.into());
        assert!(table.contains(&g));
        assert!(!table.contains(&LatticeVector::scaled(2, &[1, 0, 0, 0])));
    }

    #[test]
    fn delta_examples() {
        let d = delta_bruteforce(2, 1, 5, 1, 3).unwrap();
        assert_eq!((d.delta1, d.delta2), (1, 4));
        assert_eq!(d.delta1 + d.delta2, 5);

        let d = delta_bruteforce(2, 1, 3, 1, 5).unwrap();
        assert_eq!((d.delta1, d.delta2), (2, -2));

        let d = delta_bruteforce(3, 1, 2, 1, 5).unwrap();
        assert_eq!((d.delta1, d.delta2), (1, -3));
    }
}
