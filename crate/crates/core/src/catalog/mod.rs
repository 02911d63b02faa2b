//! The case catalog: parameterized encodings of every tower family, the
//! delta arithmetic for the cA/n family, and the master verification
//! routine. Each family is stored as a builder that evaluates all templates
//! at a given parameter tuple; `verify` then re-derives everything the
//! library can compute and compares against the stored expectations.

mod delta;
mod families;
mod verify;

use std::collections::BTreeMap;

use thiserror::Error;

pub use delta::{delta_data, DeltaData};
pub use verify::{scan, verify, CheckResult, ScanReport, VerificationReport};

use crate::cone::ConeError;
use crate::lattice::{LatticeError, LatticeVector, Overlattice, QuotientType, Rational};
use crate::poly::{CompatibilityFact, SemiInvariant};
use crate::tworay::CaseKind;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("missing parameter `{0}`")]
    MissingParam(String),
    #[error("unexpected parameter `{0}`")]
    UnexpectedParam(String),
    #[error("constraint violation: {0}")]
    Constraint(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Cone(#[from] ConeError),
}

/// One named integer parameter of a family.
pub struct ParamSpec {
    pub name: &'static str,
    pub min: i64,
    pub description: &'static str,
}

/// Static description of one instantiable catalog entry.
pub struct FamilyInfo {
    pub id: &'static str,
    /// Families sharing one geometric situation share a group label.
    pub group: &'static str,
    /// What the entry encodes, in words.
    pub source: &'static str,
    pub params: &'static [ParamSpec],
    pub constraints: &'static [&'static str],
    /// Printable weight templates (first center, chart, second weight, ...).
    pub templates: &'static [&'static str],
    /// Deviations from the source text, recorded verbatim.
    pub notes: &'static [&'static str],
}

/// A weight expectation `(1/order)(numerators)` stored as catalog data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedWeight {
    pub order: i64,
    pub numerators: Vec<i64>,
}

impl ExpectedWeight {
    pub fn as_vector(&self) -> LatticeVector {
        LatticeVector::scaled(self.order, &self.numerators)
    }
}

/// Expected quotient type of one chart of the first subdivision.
#[derive(Clone, Debug)]
pub struct ChartTypeExpectation {
    /// 1-based chart index.
    pub chart: usize,
    pub expected: QuotientType,
}

/// A stated lower bound on the weight of a generic part of an equation.
#[derive(Clone, Debug)]
pub struct WeightBound {
    pub vector: LatticeVector,
    pub support: SemiInvariant,
    pub min: Rational,
}

/// One alternative for the forced-monomial content of the equations. Most
/// entries have a single branch; entries where the source forces "one of
/// two" memberships carry both, and every branch must verify.
#[derive(Clone, Debug)]
pub struct EquationBranch {
    pub label: String,
    pub equations: Vec<SemiInvariant>,
    pub weight_bounds: Vec<WeightBound>,
    pub compat_facts: Vec<CompatibilityFact>,
}

/// Input data of the nefness criterion together with its expected value.
#[derive(Clone, Debug)]
pub struct NefData {
    pub a: i64,
    pub n: u64,
    pub p: u64,
    pub q: Rational,
    pub c0: Rational,
    pub q0: Rational,
    pub ecube: Rational,
    pub fcube: Rational,
    pub expected_t: Rational,
}

/// Cross-check data for the self-intersection of the second exceptional.
#[derive(Clone, Debug)]
pub struct KawamataCheck {
    pub p: u64,
    pub weights: [u64; 3],
    pub expected: Rational,
}

/// The four discrepancy labels of a case diagram: the two steps of the
/// original tower and the two steps of the reversed one, each over its own
/// base.
#[derive(Clone, Debug)]
pub struct DiscrepancyLabels {
    pub f: Rational,
    pub g: Rational,
    pub fprime: Rational,
    pub gprime: Rational,
}

/// Extra data of the index-1 `(1, a, b)` family.
#[derive(Clone, Debug)]
pub struct GorensteinData {
    pub a: i64,
    pub b: i64,
    pub p: i64,
    pub q: i64,
}

/// A fully evaluated catalog entry. All fields are public so that tests can
/// perturb individual values and observe the named check that catches it.
#[derive(Clone, Debug)]
pub struct CaseInstance {
    pub family_id: String,
    pub params: BTreeMap<String, i64>,
    pub lattice: Overlattice,
    pub v1: LatticeVector,
    /// 1-based chart of the first subdivision hosting the second.
    pub chart: usize,
    pub v2: LatticeVector,
    pub expected_w2: ExpectedWeight,
    pub reversed_chart: usize,
    pub expected_w2_prime: ExpectedWeight,
    pub chart_types: Vec<ChartTypeExpectation>,
    pub branches: Vec<EquationBranch>,
    pub nef: Option<NefData>,
    pub kawamata: Option<KawamataCheck>,
    pub disc: DiscrepancyLabels,
    pub kind: CaseKind,
    /// Discrepancy numerator of the first contraction over `n`.
    pub a: i64,
    /// Index of the base point.
    pub n: u64,
    pub delta: Option<DeltaData>,
    pub gorenstein: Option<GorensteinData>,
}

/// All instantiable catalog entries, in presentation order.
pub fn families() -> &'static [FamilyInfo] {
    families::FAMILIES
}

pub fn family(id: &str) -> Option<&'static FamilyInfo> {
    families::FAMILIES.iter().find(|f| f.id == id)
}

/// Evaluates a family at a parameter tuple, validating its constraints.
pub fn instantiate(
    id: &str,
    params: &BTreeMap<String, i64>,
) -> Result<CaseInstance, CatalogError> {
    let info = family(id).ok_or_else(|| CatalogError::UnknownFamily(id.to_string()))?;
    for name in params.keys() {
        if !info.params.iter().any(|p| p.name == name) {
            return Err(CatalogError::UnexpectedParam(name.clone()));
        }
    }
    let mut values = BTreeMap::new();
    for spec in info.params {
        let v = *params
            .get(spec.name)
            .ok_or_else(|| CatalogError::MissingParam(spec.name.to_string()))?;
        if v < spec.min {
            return Err(CatalogError::Constraint(format!(
                "{} must be at least {}",
                spec.name, spec.min
            )));
        }
        values.insert(spec.name.to_string(), v);
    }
    families::build(id, &values)
}
