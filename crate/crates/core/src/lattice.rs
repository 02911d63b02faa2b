//! Overlattices `N = Z^d + Z*g_1 + ... + Z*g_k` of the standard integer
//! lattice, with exact membership, index, primitivity and quotient-type
//! computations.
//!
//! An overlattice is stored in a canonical form: the unique Hermite-style
//! triangular basis `(1/den) * H` with positive pivots, entries above each
//! pivot reduced, and `gcd(den, entries of H)` reduced out. Two descriptions
//! of the same group therefore compare equal.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::linalg;

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand constructor for `n/d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand constructor for an integer rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Renders a rational as `"n"` or `"n/d"`, never as a decimal.
pub fn rational_str(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `"n"` or `"n/d"`.
pub fn parse_rational(s: &str) -> Result<Rational, LatticeError> {
    let bad = || LatticeError::Parse(s.to_string());
    match s.split_once('/') {
        None => Ok(Rational::from_integer(s.trim().parse::<BigInt>().map_err(|_| bad())?)),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("dimension must be positive")]
    ZeroDimension,
    #[error("vector is not a lattice element")]
    NotInLattice,
    #[error("zero vector where a nonzero vector is required")]
    ZeroVector,
    #[error("generators are linearly dependent")]
    DependentGenerators,
    #[error("cannot parse rational `{0}`")]
    Parse(String),
}

/// A vector with rational coordinates, of fixed dimension within one
/// computation context.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector(Vec<Rational>);

impl LatticeVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        LatticeVector(coords)
    }

    /// Builds `(1/den)(a_1, ..., a_d)`.
    pub fn scaled(den: i64, coords: &[i64]) -> Self {
        LatticeVector(coords.iter().map(|&a| rat(a, den)).collect())
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self::scaled(1, coords)
    }

    /// Standard basis vector `e_i` (1-based) in dimension `dim`.
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = vec![int(0); dim];
        v[i - 1] = int(1);
        LatticeVector(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    /// 1-based coordinate access.
    pub fn coord(&self, i: usize) -> &Rational {
        &self.0[i - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn all_positive(&self) -> bool {
        self.0.iter().all(|c| c.is_positive())
    }

    pub fn add(&self, other: &Self) -> Self {
        LatticeVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        LatticeVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        LatticeVector(self.0.iter().map(|a| a * k).collect())
    }

    /// Appends a coordinate, returning the (d+1)-dimensional extension.
    pub fn extend(&self, last: Rational) -> Self {
        let mut v = self.0.clone();
        v.push(last);
        LatticeVector(v)
    }

    /// Least common multiple of the lowest-term denominators.
    pub fn common_denominator(&self) -> BigInt {
        self.0
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().map(rational_str).collect::<Vec<_>>().join(", "))
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

/// The group `Z^d + Z*g_1 + ... + Z*g_k` for rational vectors `g_i`, in
/// canonical triangular form. Always contains the standard lattice, so the
/// index over `Z^d` is a finite positive integer.
#[derive(Clone)]
pub struct Overlattice {
    dim: usize,
    adjoined: Vec<LatticeVector>,
    den: BigInt,
    /// Upper-triangular HNF basis of `den * L`.
    basis: Vec<Vec<BigInt>>,
}

impl PartialEq for Overlattice {
    fn eq(&self, other: &Self) -> bool {
        // Equality of the generated group, not of the presentation.
        self.dim == other.dim && self.den == other.den && self.basis == other.basis
    }
}
impl Eq for Overlattice {}

impl fmt::Debug for Overlattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z^{}", self.dim)?;
        for g in &self.adjoined {
            write!(f, " + Z{:?}", g)?;
        }
        Ok(())
    }
}

impl Overlattice {
    /// Canonicalizes `Z^dim + sum_i Z*g_i`. Idempotent and independent of
    /// the order of the adjoined generators.
    pub fn canonicalize(dim: usize, adjoined: &[LatticeVector]) -> Result<Self, LatticeError> {
        if dim == 0 {
            return Err(LatticeError::ZeroDimension);
        }
        for g in adjoined {
            if g.dim() != dim {
                return Err(LatticeError::DimensionMismatch {
                    expected: dim,
                    got: g.dim(),
                });
            }
        }
        let den = adjoined
            .iter()
            .fold(BigInt::one(), |acc, g| acc.lcm(&g.common_denominator()));
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(dim + adjoined.len());
        for i in 0..dim {
            let mut row = vec![BigInt::zero(); dim];
            row[i] = den.clone();
            rows.push(row);
        }
        for g in adjoined {
            rows.push(
                g.coords()
                    .iter()
                    .map(|c| {
                        let scaled = c * Rational::from_integer(den.clone());
                        debug_assert!(scaled.denom().is_one());
                        scaled.numer().clone()
                    })
                    .collect(),
            );
        }
        let basis = linalg::hnf(&rows, dim).expect("contains den*I, always full rank");
        let (den, basis) = reduce_content(den, basis);
        Ok(Overlattice {
            dim,
            adjoined: adjoined.to_vec(),
            den,
            basis,
        })
    }

    /// The standard lattice `Z^dim`.
    pub fn standard(dim: usize) -> Self {
        Self::canonicalize(dim, &[]).expect("dim > 0")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The generators adjoined at construction time (presentation data, not
    /// part of the canonical form).
    pub fn adjoined(&self) -> &[LatticeVector] {
        &self.adjoined
    }

    fn check_dim(&self, x: &LatticeVector) -> Result<(), LatticeError> {
        if x.dim() != self.dim {
            return Err(LatticeError::DimensionMismatch {
                expected: self.dim,
                got: x.dim(),
            });
        }
        Ok(())
    }

    /// Integer coordinates of `x` in the canonical basis, or `None` when
    /// `x` is not in the lattice.
    pub fn coordinates(&self, x: &LatticeVector) -> Result<Option<Vec<BigInt>>, LatticeError> {
        self.check_dim(x)?;
        // Solve c * H = den * x by back substitution on the triangular H.
        let mut target: Vec<Rational> = x
            .coords()
            .iter()
            .map(|c| c * Rational::from_integer(self.den.clone()))
            .collect();
        let mut coeffs = vec![BigInt::zero(); self.dim];
        for col in 0..self.dim {
            let pivot = &self.basis[col][col];
            let c = &target[col] / Rational::from_integer(pivot.clone());
            if !c.denom().is_one() {
                return Ok(None);
            }
            let c = c.numer().clone();
            for j in col..self.dim {
                let t = Rational::from_integer(&c * &self.basis[col][j]);
                target[j] = &target[j] - t;
            }
            coeffs[col] = c;
        }
        debug_assert!(target.iter().all(|t| t.is_zero()));
        Ok(Some(coeffs))
    }

    /// Membership test.
    pub fn contains(&self, x: &LatticeVector) -> Result<bool, LatticeError> {
        Ok(self.coordinates(x)?.is_some())
    }

    /// The index `[L : Z^d]`.
    pub fn index(&self) -> BigInt {
        let mut num = BigInt::one();
        let mut det = BigInt::one();
        for i in 0..self.dim {
            num *= &self.den;
            det *= &self.basis[i][i];
        }
        let (q, r) = num.div_rem(&det);
        debug_assert!(r.is_zero());
        q
    }

    /// True iff `x/k` is not in the lattice for any integer `k >= 2`.
    pub fn is_primitive(&self, x: &LatticeVector) -> Result<bool, LatticeError> {
        if x.is_zero() {
            return Err(LatticeError::ZeroVector);
        }
        let coords = self.coordinates(x)?.ok_or(LatticeError::NotInLattice)?;
        let g = coords
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c));
        Ok(g.is_one())
    }

    /// True iff the given vectors generate exactly this group (without the
    /// standard lattice thrown in).
    pub fn is_generated_by(&self, vectors: &[LatticeVector]) -> Result<bool, LatticeError> {
        for v in vectors {
            self.check_dim(v)?;
        }
        let den = vectors
            .iter()
            .fold(BigInt::one(), |acc, g| acc.lcm(&g.common_denominator()));
        let rows: Vec<Vec<BigInt>> = vectors
            .iter()
            .map(|g| {
                g.coords()
                    .iter()
                    .map(|c| (c * Rational::from_integer(den.clone())).numer().clone())
                    .collect()
            })
            .collect();
        let basis = match linalg::hnf(&rows, self.dim) {
            Some(b) => b,
            None => return Ok(false), // not full rank
        };
        let (den, basis) = reduce_content(den, basis);
        Ok(den == self.den && basis == self.basis)
    }

    /// The finite quotient `L / <generators>` for `dim` linearly independent
    /// lattice elements.
    pub fn quotient_type(
        &self,
        generators: &[LatticeVector],
    ) -> Result<QuotientType, LatticeError> {
        if generators.len() != self.dim {
            return Err(LatticeError::DimensionMismatch {
                expected: self.dim,
                got: generators.len(),
            });
        }
        let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(self.dim);
        for g in generators {
            let coords = self.coordinates(g)?.ok_or(LatticeError::NotInLattice)?;
            m.push(coords);
        }
        let s = linalg::snf(&m);
        if s.diag.iter().any(|d| d.is_zero()) {
            return Err(LatticeError::DependentGenerators);
        }
        let nontrivial: Vec<usize> = (0..self.dim)
            .filter(|&i| !s.diag[i].is_one())
            .collect();
        match nontrivial.len() {
            0 => Ok(QuotientType::smooth(self.dim)),
            1 => {
                let i = nontrivial[0];
                let p = s.diag[i].to_u64().expect("quotient order fits in u64");
                // Row i of U gives integer c with c * M = p * u for a
                // generator u of the quotient; the weights are c mod p.
                let weights: Vec<u64> = s.u[i]
                    .iter()
                    .map(|c| c.mod_floor(&s.diag[i]).to_u64().unwrap())
                    .collect();
                Ok(QuotientType::cyclic(p, weights))
            }
            _ => {
                let order = s
                    .diag
                    .iter()
                    .fold(BigInt::one(), |acc, d| acc * d)
                    .to_u64()
                    .expect("quotient order fits in u64");
                Ok(QuotientType {
                    order,
                    weights: vec![],
                    kind: QuotientKind::NonCyclic,
                })
            }
        }
    }
}

fn reduce_content(den: BigInt, mut basis: Vec<Vec<BigInt>>) -> (BigInt, Vec<Vec<BigInt>>) {
    let mut g = den.clone();
    for row in &basis {
        for e in row {
            g = g.gcd(e);
            if g.is_one() {
                return (den, basis);
            }
        }
    }
    for row in &mut basis {
        for e in row.iter_mut() {
            *e = &*e / &g;
        }
    }
    (den / g, basis)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuotientKind {
    Smooth,
    Cyclic,
    NonCyclic,
}

/// The type of a finite quotient of an overlattice by a full-rank sublattice:
/// `1/p (q_1, ..., q_d)` when cyclic.
///
/// Cyclic weights are normalized to the lexicographically smallest tuple
/// among all unit multiples mod `p`, so equal types compare equal; the
/// paper-style labels are recovered through [`QuotientType::equivalent`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientType {
    order: u64,
    weights: Vec<u64>,
    kind: QuotientKind,
}

impl QuotientType {
    pub fn smooth(dim: usize) -> Self {
        QuotientType {
            order: 1,
            weights: vec![0; dim],
            kind: QuotientKind::Smooth,
        }
    }

    /// Builds a cyclic type `1/p (q_1, ..., q_d)`, reducing the weights mod
    /// `p` and normalizing across unit multiples.
    pub fn cyclic(p: u64, weights: Vec<u64>) -> Self {
        assert!(p >= 1);
        if p == 1 {
            return Self::smooth(weights.len());
        }
        let reduced: Vec<u64> = weights.iter().map(|&w| w % p).collect();
        let mut best: Option<Vec<u64>> = None;
        for t in 1..p {
            if gcd_u64(t, p) != 1 {
                continue;
            }
            let cand: Vec<u64> = reduced.iter().map(|&w| (w * t) % p).collect();
            if best.as_ref().map_or(true, |b| &cand < b) {
                best = Some(cand);
            }
        }
        QuotientType {
            order: p,
            weights: best.unwrap(),
            kind: QuotientKind::Cyclic,
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn kind(&self) -> QuotientKind {
        self.kind
    }

    /// Normalized weight tuple (empty for non-cyclic quotients).
    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    /// Equality up to multiplying all weights by a unit mod `p` (with the
    /// coordinate order fixed). Normalization makes this plain equality.
    pub fn equivalent(&self, other: &QuotientType) -> bool {
        self == other
    }
}

impl fmt::Display for QuotientType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            QuotientKind::Smooth => write!(f, "smooth"),
            QuotientKind::Cyclic => write!(
                f,
                "1/{}({})",
                self.order,
                self.weights
                    .iter()
                    .map(|w| w.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
            QuotientKind::NonCyclic => write!(f, "non-cyclic of order {}", self.order),
        }
    }
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half(coords: &[i64]) -> LatticeVector {
        LatticeVector::scaled(2, coords)
    }

    #[test]
    fn canonical_form_is_presentation_independent() {
        // Z^3 + Z(1/2,1/2,1/2) presented two different ways.
        let a = Overlattice::canonicalize(3, &[half(&[1, 1, 1])]).unwrap();
        let b = Overlattice::canonicalize(3, &[half(&[3, 1, -1]), half(&[1, 1, 1])]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.index(), BigInt::from(2));
    }

    #[test]
    fn redundant_generator_reduces_out() {
        // (2/2, 4/2, 6/2) is already integral.
        let a = Overlattice::canonicalize(3, &[half(&[2, 4, 6])]).unwrap();
        assert_eq!(a, Overlattice::standard(3));
        assert_eq!(a.index(), BigInt::one());
    }

    #[test]
    fn membership_and_coordinates() {
        let l = Overlattice::canonicalize(4, &[half(&[1, 1, 1, 0])]).unwrap();
        assert!(l.contains(&half(&[1, 1, 1, 0])).unwrap());
        assert!(l.contains(&half(&[3, 5, 1, 2])).unwrap());
        assert!(!l.contains(&half(&[1, 1, 0, 0])).unwrap());
        assert!(!l.contains(&LatticeVector::scaled(3, &[1, 1, 1, 0])).unwrap());
    }

    #[test]
    fn primitivity() {
        let l = Overlattice::canonicalize(4, &[half(&[1, 1, 1, 0])]).unwrap();
        assert!(l.is_primitive(&half(&[1, 1, 1, 0])).unwrap());
        // (1,1,1,0) = 2 * (1/2)(1,1,1,0) inside L.
        assert!(!l.is_primitive(&LatticeVector::from_ints(&[1, 1, 1, 0])).unwrap());
        assert!(l.is_primitive(&LatticeVector::from_ints(&[1, 0, 0, 0])).unwrap());
        assert_eq!(
            l.is_primitive(&LatticeVector::from_ints(&[0, 0, 0, 0])),
            Err(LatticeError::ZeroVector)
        );
    }

    #[test]
    fn quotient_smooth_and_cyclic() {
        let l = Overlattice::standard(2);
        let q = l
            .quotient_type(&[
                LatticeVector::from_ints(&[1, 0]),
                LatticeVector::from_ints(&[0, 1]),
            ])
            .unwrap();
        assert_eq!(q, QuotientType::smooth(2));

        // Z^2 / <(1,2), (0,5)> is cyclic of order 5.
        let q = l
            .quotient_type(&[
                LatticeVector::from_ints(&[1, 2]),
                LatticeVector::from_ints(&[0, 5]),
            ])
            .unwrap();
        assert_eq!(q.order(), 5);
        assert_eq!(q.kind(), QuotientKind::Cyclic);
    }

    #[test]
    fn quotient_weights_normalize_across_units() {
        // 1/5(1,2) and 1/5(2,4) and 1/5(3,1) are the same type.
        let a = QuotientType::cyclic(5, vec![1, 2]);
        let b = QuotientType::cyclic(5, vec![2, 4]);
        let c = QuotientType::cyclic(5, vec![3, 1]);
        assert!(a.equivalent(&b));
        assert!(a.equivalent(&c));
        // 1/5(1,3) is a different type (not a unit multiple of (1,2)).
        let d = QuotientType::cyclic(5, vec![1, 3]);
        assert!(!a.equivalent(&d));
    }

    #[test]
    fn quotient_noncyclic() {
        // Z^2 / <2e1, 2e2> = Z/2 x Z/2.
        let l = Overlattice::standard(2);
        let q = l
            .quotient_type(&[
                LatticeVector::from_ints(&[2, 0]),
                LatticeVector::from_ints(&[0, 2]),
            ])
            .unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(q.kind(), QuotientKind::NonCyclic);
    }

    #[test]
    fn quotient_dependent_generators_rejected() {
        let l = Overlattice::standard(2);
        let err = l.quotient_type(&[
            LatticeVector::from_ints(&[1, 2]),
            LatticeVector::from_ints(&[2, 4]),
        ]);
        assert_eq!(err, Err(LatticeError::DependentGenerators));
    }

    #[test]
    fn generated_by() {
        // Z^2 is generated by (1,0) and (0,1), or by (1,1) and (1,0).
        let l = Overlattice::standard(2);
        assert!(l
            .is_generated_by(&[
                LatticeVector::from_ints(&[1, 1]),
                LatticeVector::from_ints(&[1, 0])
            ])
            .unwrap());
        assert!(!l
            .is_generated_by(&[
                LatticeVector::from_ints(&[1, 1]),
                LatticeVector::from_ints(&[1, -1])
            ])
            .unwrap());
        let l2 = Overlattice::canonicalize(2, &[LatticeVector::scaled(2, &[1, 1])]).unwrap();
        assert!(l2
            .is_generated_by(&[
                LatticeVector::scaled(2, &[1, 1]),
                LatticeVector::from_ints(&[0, 1])
            ])
            .unwrap());
    }

    #[test]
    fn parse_and_print_rationals() {
        assert_eq!(parse_rational("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-4").unwrap(), int(-4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(rational_str(&rat(1, 2)), "1/2");
        assert_eq!(rational_str(&int(7)), "7");
    }
}
