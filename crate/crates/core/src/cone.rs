//! Full-dimensional simplicial cones in an overlattice, star subdivisions,
//! weights of interior vectors, interchangeability of rays, and two-step
//! towers of subdivisions with their reversal.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use thiserror::Error;

use crate::lattice::{LatticeError, LatticeVector, Overlattice, QuotientType, Rational};
use crate::linalg;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConeError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("generators do not span a full-dimensional simplicial cone")]
    Degenerate,
    #[error("vector is not a primitive lattice element")]
    NotPrimitive,
    #[error("vector is not strictly interior to the cone")]
    NotInterior,
    #[error("chart index {0} out of range")]
    BadChart(usize),
    #[error("cone has no marked ray")]
    NoMark,
    #[error("rays are not interchangeable: {0}")]
    NotInterchangeable(&'static str),
}

/// A full-dimensional simplicial cone, spanned by `dim` primitive lattice
/// vectors. At most one generator may be *marked*: charts produced by a star
/// subdivision mark the ray that was inserted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialCone {
    lattice: Overlattice,
    generators: Vec<LatticeVector>,
    marked: Option<usize>, // 1-based generator index
}

impl SimplicialCone {
    pub fn new(
        lattice: Overlattice,
        generators: Vec<LatticeVector>,
    ) -> Result<Self, ConeError> {
        if generators.len() != lattice.dim() {
            return Err(ConeError::Degenerate);
        }
        for g in &generators {
            if !lattice.is_primitive(g)? {
                return Err(ConeError::NotPrimitive);
            }
        }
        let cols: Vec<Vec<Rational>> = generators.iter().map(|g| g.coords().to_vec()).collect();
        let zero = vec![crate::lattice::int(0); lattice.dim()];
        if linalg::solve_columns(&cols, &zero).is_none() {
            return Err(ConeError::Degenerate);
        }
        Ok(SimplicialCone {
            lattice,
            generators,
            marked: None,
        })
    }

    /// The positive orthant, spanned by the standard basis vectors.
    pub fn orthant(lattice: Overlattice) -> Result<Self, ConeError> {
        let d = lattice.dim();
        let gens = (1..=d).map(|i| LatticeVector::basis(d, i)).collect();
        Self::new(lattice, gens)
    }

    pub fn lattice(&self) -> &Overlattice {
        &self.lattice
    }

    pub fn generators(&self) -> &[LatticeVector] {
        &self.generators
    }

    /// 1-based index of the marked ray, if any.
    pub fn marked(&self) -> Option<usize> {
        self.marked
    }

    /// Barycentric coordinates of `x` with respect to the generators:
    /// the unique rationals with `x = sum_j lambda_j * g_j`.
    pub fn barycentric(&self, x: &LatticeVector) -> Result<Vec<Rational>, ConeError> {
        if x.dim() != self.lattice.dim() {
            return Err(LatticeError::DimensionMismatch {
                expected: self.lattice.dim(),
                got: x.dim(),
            }
            .into());
        }
        let cols: Vec<Vec<Rational>> =
            self.generators.iter().map(|g| g.coords().to_vec()).collect();
        linalg::solve_columns(&cols, x.coords()).ok_or(ConeError::Degenerate)
    }

    /// True iff `x` lies strictly inside the cone (all barycentric
    /// coordinates positive).
    pub fn contains_interior(&self, x: &LatticeVector) -> Result<bool, ConeError> {
        Ok(self.barycentric(x)?.iter().all(|l| l.is_positive()))
    }

    /// The quotient type of the lattice by the cone's generators: the local
    /// model of the associated toric chart.
    pub fn quotient_type(&self) -> Result<QuotientType, ConeError> {
        Ok(self.lattice.quotient_type(&self.generators)?)
    }

    /// Star subdivision along `v`: replaces the cone with `dim` charts, the
    /// `i`-th having `v` substituted for the `i`-th generator (and marked
    /// there). `v` must be a primitive lattice vector strictly interior to
    /// the cone.
    pub fn star_subdivide(&self, v: &LatticeVector) -> Result<Vec<SimplicialCone>, ConeError> {
        if !self.lattice.is_primitive(v)? {
            return Err(ConeError::NotPrimitive);
        }
        if !self.contains_interior(v)? {
            return Err(ConeError::NotInterior);
        }
        Ok((1..=self.generators.len())
            .map(|i| {
                let mut gens = self.generators.clone();
                gens[i - 1] = v.clone();
                SimplicialCone {
                    lattice: self.lattice.clone(),
                    generators: gens,
                    marked: Some(i),
                }
            })
            .collect())
    }

    /// The `i`-th chart (1-based) of the star subdivision along `v`.
    pub fn chart(&self, v: &LatticeVector, i: usize) -> Result<SimplicialCone, ConeError> {
        let mut charts = self.star_subdivide(v)?;
        if i == 0 || i > charts.len() {
            return Err(ConeError::BadChart(i));
        }
        Ok(charts.swap_remove(i - 1))
    }

    /// The weight of an interior vector of a marked chart: barycentric
    /// coordinates put over their least common denominator, together with
    /// the component along the marked ray split off.
    pub fn weight_in_cone(&self, x: &LatticeVector) -> Result<ConeWeight, ConeError> {
        let position = self.marked.ok_or(ConeError::NoMark)?;
        let lambda = self.barycentric(x)?;
        if !lambda.iter().all(|l| l.is_positive()) {
            return Err(ConeError::NotInterior);
        }
        let order = lambda
            .iter()
            .fold(BigInt::one(), |acc, l| acc.lcm(l.denom()));
        let numerators: Vec<BigInt> = lambda
            .iter()
            .map(|l| (l * Rational::from_integer(order.clone())).numer().clone())
            .collect();
        let hat = x.sub(&self.generators[position - 1].scale(&lambda[position - 1]));
        Ok(ConeWeight {
            order,
            numerators,
            position,
            hat,
        })
    }
}

/// The weight `(1/order)(numerators)` of a vector in a marked chart, plus
/// the decomposition `x = (numerators[position]/order) * marked_ray + hat`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeWeight {
    pub order: BigInt,
    pub numerators: Vec<BigInt>,
    /// 1-based index of the marked ray within the chart.
    pub position: usize,
    pub hat: LatticeVector,
}

impl ConeWeight {
    /// The weight as a rational vector `(1/order)(numerators)`.
    pub fn as_vector(&self) -> LatticeVector {
        LatticeVector::new(
            self.numerators
                .iter()
                .map(|n| Rational::new(n.clone(), self.order.clone()))
                .collect(),
        )
    }

    /// The coefficient of the marked ray, `numerators[position]/order`.
    pub fn marked_coefficient(&self) -> Rational {
        Rational::new(self.numerators[self.position - 1].clone(), self.order.clone())
    }
}

/// Sufficient condition for interchangeability, by pairwise determinants of
/// the two coordinate vectors: `Some(true)` when it applies, `None` when it
/// is inconclusive. Never returns `Some(false)`.
pub fn interchangeable_fast(v1: &LatticeVector, v2: &LatticeVector) -> Option<bool> {
    let d = v1.dim();
    if d != v2.dim() {
        return None;
    }
    let n1 = v1.common_denominator();
    let n2 = v2.common_denominator();
    let b: Vec<BigInt> = v1
        .coords()
        .iter()
        .map(|c| (c * Rational::from_integer(n1.clone())).numer().clone())
        .collect();
    let c: Vec<BigInt> = v2
        .coords()
        .iter()
        .map(|x| (x * Rational::from_integer(n2.clone())).numer().clone())
        .collect();
    if b.iter().any(|x| !x.is_positive()) || c.iter().any(|x| !x.is_positive()) {
        return None;
    }
    for j in 0..d {
        for l in 0..d {
            if j != l && &b[j] * &c[l] == &b[l] * &c[j] {
                return None;
            }
        }
    }
    Some(true)
}

/// Geometric interchangeability inside the positive orthant: each of the two
/// rays must lie strictly inside some chart of the star subdivision along
/// the other.
pub fn interchangeable(
    lattice: &Overlattice,
    v1: &LatticeVector,
    v2: &LatticeVector,
) -> Result<bool, ConeError> {
    let orthant = SimplicialCone::orthant(lattice.clone())?;
    let a = find_interior_chart(&orthant, v1, v2)?.is_some();
    let b = find_interior_chart(&orthant, v2, v1)?.is_some();
    Ok(a && b)
}

/// 1-based index of the chart of the subdivision along `center` whose
/// interior contains `x`, or `None` when `x` sits on an internal wall.
fn find_interior_chart(
    cone: &SimplicialCone,
    center: &LatticeVector,
    x: &LatticeVector,
) -> Result<Option<usize>, ConeError> {
    for (k, chart) in cone.star_subdivide(center)?.iter().enumerate() {
        if chart.contains_interior(x)? {
            return Ok(Some(k + 1));
        }
    }
    Ok(None)
}

/// A two-step tower over the positive orthant: subdivide along `v1`, pick
/// the chart `chart` (1-based), then subdivide that chart along `v2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tower {
    lattice: Overlattice,
    v1: LatticeVector,
    chart: usize,
    v2: LatticeVector,
}

impl Tower {
    pub fn new(
        lattice: Overlattice,
        v1: LatticeVector,
        chart: usize,
        v2: LatticeVector,
    ) -> Result<Self, ConeError> {
        let orthant = SimplicialCone::orthant(lattice.clone())?;
        if !lattice.is_primitive(&v1)? {
            return Err(ConeError::NotPrimitive);
        }
        if !orthant.contains_interior(&v1)? {
            return Err(ConeError::NotInterior);
        }
        let chart_cone = orthant.chart(&v1, chart)?;
        if !lattice.is_primitive(&v2)? {
            return Err(ConeError::NotPrimitive);
        }
        if !chart_cone.contains_interior(&v2)? {
            return Err(ConeError::NotInterior);
        }
        Ok(Tower {
            lattice,
            v1,
            chart,
            v2,
        })
    }

    pub fn lattice(&self) -> &Overlattice {
        &self.lattice
    }

    pub fn v1(&self) -> &LatticeVector {
        &self.v1
    }

    /// 1-based index of the first-step chart the tower goes through.
    pub fn chart(&self) -> usize {
        self.chart
    }

    pub fn v2(&self) -> &LatticeVector {
        &self.v2
    }

    /// The chart of the first subdivision that hosts the second one, with
    /// `v1` marked.
    pub fn chart_cone(&self) -> SimplicialCone {
        let orthant = SimplicialCone::orthant(self.lattice.clone()).expect("validated");
        orthant.chart(&self.v1, self.chart).expect("validated")
    }

    /// The weight of `v2` in the hosting chart.
    pub fn second_weight(&self) -> ConeWeight {
        self.chart_cone().weight_in_cone(&self.v2).expect("validated")
    }

    /// The reversed tower: first subdivide along `v2`, then along `v1`
    /// inside the unique chart whose interior contains it. Requires the two
    /// rays to be interchangeable.
    pub fn reverse(&self) -> Result<Tower, ConeError> {
        let orthant = SimplicialCone::orthant(self.lattice.clone())?;
        let k = find_interior_chart(&orthant, &self.v2, &self.v1)?.ok_or(
            ConeError::NotInterchangeable(
                "first ray lies on a wall of the subdivision along the second",
            ),
        )?;
        if find_interior_chart(&orthant, &self.v1, &self.v2)?.is_none() {
            return Err(ConeError::NotInterchangeable(
                "second ray lies on a wall of the subdivision along the first",
            ));
        }
        Tower::new(self.lattice.clone(), self.v2.clone(), k, self.v1.clone())
    }
}
