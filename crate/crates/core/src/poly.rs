//! Monomial supports, semi-invariants, weight functions, and the
//! bookkeeping for compatible re-embeddings.
//!
//! Coefficients are never modeled: every check in this crate depends only
//! on which monomials occur (plus declared membership facts), so a
//! "polynomial" here is a named, deduplicated set of exponent vectors.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::One;
use thiserror::Error;

use crate::lattice::{LatticeVector, Overlattice, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("semi-invariant `{0}` has an empty support")]
    EmptySupport(String),
    #[error("monomial has {got} exponents, ambient dimension is {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("declared weight {declared} differs from computed weight {computed}")]
    DeclaredWeightMismatch { declared: String, computed: String },
}

/// A single monomial `x_1^{e_1} ... x_d^{e_d}`, stored as its exponent
/// vector.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    /// Builds `x_i^e` (1-based `i`) in `dim` variables.
    pub fn power(dim: usize, i: usize, e: u32) -> Self {
        let mut v = vec![0; dim];
        v[i - 1] = e;
        Monomial(v)
    }

    /// Weight `sum_j v_j * e_j` under the vector `v`.
    pub fn weight(&self, v: &LatticeVector) -> Result<Rational, PolyError> {
        if v.dim() != self.0.len() {
            return Err(PolyError::DimensionMismatch {
                expected: v.dim(),
                got: self.0.len(),
            });
        }
        Ok(self
            .0
            .iter()
            .zip(v.coords())
            .map(|(&e, c)| c * Rational::from_integer(e.into()))
            .sum())
    }

    /// Support product (exponent-wise sum).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(j, &e)| {
                if e == 1 {
                    format!("x{}", j + 1)
                } else {
                    format!("x{}^{}", j + 1, e)
                }
            })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// A named polynomial tracked by its monomial support only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiInvariant {
    pub name: String,
    pub monomials: BTreeSet<Monomial>,
}

impl SemiInvariant {
    pub fn new(name: &str, monomials: Vec<Monomial>) -> Self {
        SemiInvariant {
            name: name.to_string(),
            monomials: monomials.into_iter().collect(),
        }
    }

    /// Union of supports (named after `self`).
    pub fn with(&self, extra: &[Monomial]) -> Self {
        let mut monomials = self.monomials.clone();
        monomials.extend(extra.iter().cloned());
        SemiInvariant {
            name: self.name.clone(),
            monomials,
        }
    }
}

/// The weight of a semi-invariant under `v`: the minimum of the monomial
/// weights over the support.
pub fn wt(v: &LatticeVector, phi: &SemiInvariant) -> Result<Rational, PolyError> {
    phi.monomials
        .iter()
        .map(|m| m.weight(v))
        .try_fold(None::<Rational>, |acc, w| {
            let w = w?;
            Ok(Some(match acc {
                None => w,
                Some(a) => a.min(w),
            }))
        })?
        .ok_or_else(|| PolyError::EmptySupport(phi.name.clone()))
}

/// True iff `phi` is semi-invariant for `l`: under every adjoined generator
/// of the overlattice, all monomials have the same weight modulo 1.
pub fn is_semi_invariant(l: &Overlattice, phi: &SemiInvariant) -> Result<bool, PolyError> {
    for g in l.adjoined() {
        let mut first: Option<Rational> = None;
        for m in &phi.monomials {
            let w = m.weight(g)?;
            match &first {
                None => first = Some(w),
                Some(f) => {
                    if !(f - &w).denom().is_one() {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// A re-embedding that eliminates equation `equation` split as
/// `f0 + f1 + f2`, introducing a new coordinate for `f1`.
#[derive(Clone, Debug)]
pub struct ReembedSpec {
    pub equation: usize,
    pub f0: SemiInvariant,
    pub f1: SemiInvariant,
    pub f2: SemiInvariant,
    /// Must equal `wt(v1, f1)` exactly.
    pub new_coordinate_weight: Rational,
}

/// Extends `v` and `v1` by the weight of the re-embedding part `f1`:
/// the new coordinate stands for `f1`, so it carries weight `wt(v, f1)`
/// under `v` and `wt(v1, f1)` under `v1`.
pub fn reembed_extend(
    v: &LatticeVector,
    v1: &LatticeVector,
    spec: &ReembedSpec,
) -> Result<(LatticeVector, LatticeVector), PolyError> {
    let w1 = wt(v1, &spec.f1)?;
    if w1 != spec.new_coordinate_weight {
        return Err(PolyError::DeclaredWeightMismatch {
            declared: crate::lattice::rational_str(&spec.new_coordinate_weight),
            computed: crate::lattice::rational_str(&w1),
        });
    }
    let w = wt(v, &spec.f1)?;
    Ok((v.extend(w), v1.extend(w1)))
}

/// One eliminated coordinate matched with its substitute expression: the
/// weight assigned to coordinate `coordinate` by `coordinate_vector` must
/// equal the weight of `substitute` under `substitute_vector`.
#[derive(Clone, Debug)]
pub struct CompatibilityFact {
    pub coordinate_vector: LatticeVector,
    /// 1-based index of the eliminated coordinate.
    pub coordinate: usize,
    pub substitute_vector: LatticeVector,
    pub substitute: SemiInvariant,
}

/// Checks every eliminated-coordinate/substitute pair for exact weight
/// agreement.
pub fn compatibility_check(facts: &[CompatibilityFact]) -> Result<bool, PolyError> {
    for fact in facts {
        if fact.coordinate == 0 || fact.coordinate > fact.coordinate_vector.dim() {
            return Err(PolyError::DimensionMismatch {
                expected: fact.coordinate_vector.dim(),
                got: fact.coordinate,
            });
        }
        let assigned = fact.coordinate_vector.coord(fact.coordinate).clone();
        let computed = wt(&fact.substitute_vector, &fact.substitute)?;
        if assigned != computed {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{int, rat};

    fn mono(exps: &[u32]) -> Monomial {
        Monomial(exps.to_vec())
    }

    #[test]
    fn wt_takes_the_minimum() {
        let v = LatticeVector::from_ints(&[3, 2, 1, 4]);
        let phi = SemiInvariant::new(
            "phi",
            vec![
                Monomial::power(4, 4, 2),
                Monomial::power(4, 1, 3),
                Monomial::power(4, 2, 4),
                Monomial::power(4, 3, 8),
            ],
        );
        assert_eq!(wt(&v, &phi).unwrap(), int(8));

        let constant = SemiInvariant::new("c", vec![mono(&[0, 0, 0, 0])]);
        assert_eq!(wt(&v, &constant).unwrap(), int(0));

        let half = LatticeVector::scaled(2, &[1, 1, 1, 0]);
        let q = SemiInvariant::new("q", vec![mono(&[0, 2, 0, 1])]);
        assert_eq!(wt(&half, &q).unwrap(), int(1));
    }

    #[test]
    fn wt_is_monotone_and_additive() {
        let v = LatticeVector::from_ints(&[3, 2, 1, 4]);
        let big = SemiInvariant::new("b", vec![mono(&[1, 0, 0, 0]), mono(&[0, 0, 1, 0])]);
        let small = SemiInvariant::new("s", vec![mono(&[1, 0, 0, 0])]);
        assert!(wt(&v, &small).unwrap() >= wt(&v, &big).unwrap());

        let a = mono(&[1, 2, 0, 0]);
        let b = mono(&[0, 1, 3, 1]);
        let pa = SemiInvariant::new("a", vec![a.clone()]);
        let pb = SemiInvariant::new("b", vec![b.clone()]);
        let pab = SemiInvariant::new("ab", vec![a.mul(&b)]);
        assert_eq!(
            wt(&v, &pab).unwrap(),
            wt(&v, &pa).unwrap() + wt(&v, &pb).unwrap()
        );
    }

    #[test]
    fn wt_rejects_empty_support() {
        let v = LatticeVector::from_ints(&[1, 2]);
        let phi = SemiInvariant::new("empty", vec![]);
        assert_eq!(wt(&v, &phi), Err(PolyError::EmptySupport("empty".into())));
    }

    #[test]
    fn semi_invariance() {
        let l = Overlattice::canonicalize(4, &[LatticeVector::scaled(2, &[1, 1, 1, 0])]).unwrap();
        let good = SemiInvariant::new(
            "phi",
            vec![mono(&[2, 0, 0, 0]), mono(&[0, 2, 0, 1]), mono(&[0, 0, 4, 0])],
        );
        assert!(is_semi_invariant(&l, &good).unwrap());

        let single = SemiInvariant::new("one", vec![mono(&[1, 0, 0, 0])]);
        assert!(is_semi_invariant(&l, &single).unwrap());

        let bad = SemiInvariant::new("bad", vec![mono(&[1, 0, 0, 0]), mono(&[0, 0, 2, 0])]);
        assert!(!is_semi_invariant(&l, &bad).unwrap());
    }

    #[test]
    fn reembed_appends_the_part_weight() {
        // f1 = x3^4 under v2 = (1/2)(3,3,1,2): appended weight 4 * 1/2 = 2.
        let v = LatticeVector::scaled(2, &[1, 1, 1, 0]);
        let v2 = LatticeVector::scaled(2, &[3, 3, 1, 2]);
        let spec = ReembedSpec {
            equation: 2,
            f0: SemiInvariant::new("f0", vec![mono(&[0, 2, 0, 0])]),
            f1: SemiInvariant::new("f1", vec![mono(&[0, 0, 4, 0])]),
            f2: SemiInvariant::new("f2", vec![mono(&[0, 0, 0, 0])]),
            new_coordinate_weight: int(2),
        };
        let (vp, v2p) = reembed_extend(&v, &v2, &spec).unwrap();
        assert_eq!(vp, v.extend(int(2)));
        assert_eq!(v2p, v2.extend(int(2)));

        // Single-coordinate part: appended weight is that coordinate of v1.
        let spec2 = ReembedSpec {
            equation: 1,
            f0: spec.f0.clone(),
            f1: SemiInvariant::new("x2", vec![mono(&[0, 1, 0, 0])]),
            f2: spec.f2.clone(),
            new_coordinate_weight: rat(3, 2),
        };
        let (_, v2p) = reembed_extend(&v, &v2, &spec2).unwrap();
        assert_eq!(v2p.coord(5), &rat(3, 2));

        // Declared weight off by one is rejected.
        let mut bad = spec;
        bad.new_coordinate_weight = int(3);
        assert!(matches!(
            reembed_extend(&v, &v2, &bad),
            Err(PolyError::DeclaredWeightMismatch { .. })
        ));
    }

    #[test]
    fn compatibility() {
        // Coordinate replaced by itself is always compatible.
        let w = LatticeVector::new(vec![rat(1, 3), rat(2, 3), int(1)]);
        let fact = CompatibilityFact {
            coordinate_vector: w.clone(),
            coordinate: 2,
            substitute_vector: w.clone(),
            substitute: SemiInvariant::new("x2", vec![mono(&[0, 1, 0])]),
        };
        assert!(compatibility_check(&[fact.clone()]).unwrap());

        let off = CompatibilityFact {
            coordinate_vector: LatticeVector::new(vec![rat(1, 3), rat(5, 3), int(1)]),
            ..fact
        };
        assert!(!compatibility_check(&[off]).unwrap());
    }
}
