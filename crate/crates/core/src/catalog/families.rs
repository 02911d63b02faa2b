//! The family records: static descriptions plus the builders that evaluate
//! every template at a concrete parameter tuple. All constants here are
//! catalog data; `verify` re-derives everything that the lattice, cone, and
//! two-ray modules can compute and compares against these records.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::lattice::{int, rat, LatticeVector, Overlattice, QuotientType, Rational};
use crate::poly::{CompatibilityFact, Monomial, SemiInvariant};
use crate::tworay::CaseKind;

use super::delta::{delta_data, gcd_i64, mod_inverse};
use super::{
    CaseInstance, CatalogError, ChartTypeExpectation, DiscrepancyLabels, EquationBranch,
    ExpectedWeight, FamilyInfo, GorensteinData, KawamataCheck, NefData, ParamSpec, WeightBound,
};

pub(super) const FAMILIES: &[FamilyInfo] = &[
    FamilyInfo {
        id: "cD2-a4-case1",
        group: "cD2-a4",
        source: "tower over the 1/2(1,1,1,0,0) point with first-step discrepancy 2, first case",
        params: &[ParamSpec {
            name: "l",
            min: 1,
            description: "scale of the weight templates",
        }],
        constraints: &["l >= 1"],
        templates: &[
            "v1 = (4l+1, 4l, 2, 1, 8l+1)",
            "chart = 5",
            "w2 = (1/(2(8l+1)))(6l+1, 10l+1, 1, 12l+2, 4l)",
            "w1' = (1/2)(2l+1, 2l+1, 1, 2, 4l)",
            "reversed chart = 4",
            "w2' = (1/2)(6l+1, 6l-1, 3, 2, 12l+2)",
            "T = (1/(2(8l+1)))(-8 + 4l/((6l+1)(10l+1)))",
        ],
        notes: &[],
    },
    FamilyInfo {
        id: "cD2-a4-case2",
        group: "cD2-a4",
        source: "tower over the 1/2(1,1,1,0,0) point with first-step discrepancy 2, second case",
        params: &[ParamSpec {
            name: "l",
            min: 1,
            description: "scale of the weight templates",
        }],
        constraints: &["l >= 1"],
        templates: &[
            "v1 = (4l, 4l-1, 2, 1, 8l-1)",
            "chart = 5",
            "w2 = (1/(2(8l-1)))(10l-1, 6l-1, 1, 4l, 12l-2)",
            "w1' = (1/2)(6l+1, 6l-1, 3, 2, 12l-2)",
            "reversed chart = 4",
            "w2' = (1/2)(2l-1, 2l-1, 1, 2, 4l)",
            "T = (1/(2(8l-1)))(-8 + 2/(10l-1))",
        ],
        notes: &[],
    },
    FamilyInfo {
        id: "cD2-a-case1-sub1",
        group: "cD2-a-case1",
        source: "tower over the 1/2(1,1,1,0) point, first case, first subdivision order",
        params: &[
            ParamSpec {
                name: "r",
                min: 5,
                description: "odd parameter with r + 1 = 2ad",
            },
            ParamSpec {
                name: "a",
                min: 3,
                description: "odd first-step discrepancy numerator",
            },
        ],
        constraints: &["a odd", "r odd", "2a divides r + 1 (d = (r+1)/(2a) >= 1)"],
        templates: &[
            "v1 = (1/2)(r+2, r, a, 2)",
            "chart = 1",
            "w2 = (1/(r+2))(4d, 4d, 1, r+2-4d)",
            "w1' = (2d, 2d, 1, 1)",
            "reversed chart = 4",
            "w2' = (1/2)(r+2-4d, r-4d, a-2, 2)",
            "T = (1/(r+2))(-2(r+1)/r + 1)",
        ],
        notes: &["the criterion uses the divisor x4 = 0, so q0 = r+2-4d"],
    },
    FamilyInfo {
        id: "cD2-a-case1-sub2",
        group: "cD2-a-case1",
        source: "tower over the 1/2(1,1,1,0) point, first case, second subdivision order",
        params: &[
            ParamSpec {
                name: "r",
                min: 5,
                description: "odd parameter with r + 1 = 2ad",
            },
            ParamSpec {
                name: "a",
                min: 3,
                description: "odd first-step discrepancy numerator",
            },
        ],
        constraints: &["a odd", "r odd", "2a divides r + 1 (d = (r+1)/(2a) >= 1)"],
        templates: &[
            "v1 = (1/2)(r+2, r, a, 2)",
            "chart = 2",
            "w2 = (1/r)(4d, r-4d, 1, 4d)",
            "w1' = (1/2)(r+2-4d, r-4d, a-2, 2)",
            "reversed chart = 4",
            "w2' = (2d, 2d, 1, 1)",
            "T = (1/r)(-2(r+1)/(r+2) + 1)",
        ],
        notes: &["the criterion uses the divisor x4 = 0, so q0 = 4d"],
    },
    FamilyInfo {
        id: "cD2-a-case2-sub1",
        group: "cD2-a-case2",
        source: "tower over the 1/2(1,1,0,1,1) point, second case, first subdivision order",
        params: &[
            ParamSpec {
                name: "a",
                min: 2,
                description: "first-step discrepancy numerator",
            },
            ParamSpec {
                name: "d",
                min: 1,
                description: "scale with r + 2 = (2d+1)a",
            },
        ],
        constraints: &["r = (2d+1)a - 2 is derived from a and d"],
        templates: &[
            "v1 = (1/2)(a, r, 2, r+2, r+4)",
            "chart = 5",
            "w2 = (1/(r+4))(1, 4d+2, r-2d+3, 2d+1, 2d+1)",
            "w1' = (1/2)(1, 2d+1, 2, 2d+1, 2d+1)",
            "reversed chart = 3",
            "w2' = (1/2)(a-1, r-2d-1, 2, r-2d+1, r-2d+3)",
            "T = (1/(r+4))(-2(r+2)/r + 1)",
        ],
        notes: &["the criterion uses the divisor x3 = 0, so q0 = r-2d+3"],
    },
    FamilyInfo {
        id: "cD2-a-case2-sub2",
        group: "cD2-a-case2",
        source: "tower over the 1/2(1,1,0,1,1) point, second case, second subdivision order",
        params: &[
            ParamSpec {
                name: "a",
                min: 2,
                description: "first-step discrepancy numerator",
            },
            ParamSpec {
                name: "d",
                min: 1,
                description: "scale with r + 2 = (2d+1)a",
            },
        ],
        constraints: &["r = (2d+1)a - 2 is derived from a and d"],
        templates: &[
            "v1 = (1/2)(a, r, 2, r+2, r+4)",
            "chart = 2",
            "w2 = (1/r)(1, r-2d-1, 2d+1, 2d+1, 4d+2)",
            "w1' = (1/2)(a-1, r-2d-1, 2, r-2d+1, r-2d+3)",
            "reversed chart = 3",
            "w2' = (1/2)(1, 2d+1, 2, 2d+1, 2d+1)",
            "T = (1/r)(-2(r+2)/(r+4) + 1)",
        ],
        notes: &["the criterion uses the divisor x3 = 0, so q0 = 2d+1"],
    },
    FamilyInfo {
        id: "cE2",
        group: "cE2",
        source: "the single tower over the 1/2(0,1,1,1) point with reversed second step of index 3",
        params: &[],
        constraints: &[],
        templates: &[
            "v1 = (3, 2, 1, 4)",
            "chart = 1",
            "w2 = (1/6)(2, 5, 1, 1)",
            "w1' = (1/2)(2, 3, 1, 3)",
            "reversed chart = 2",
            "w2' = (1/3)(5, 4, 1, 6)",
            "T = -1/10",
        ],
        notes: &[],
    },
    FamilyInfo {
        id: "cD2-d1-case1",
        group: "cD2-d1-case1",
        source: "tower over the 1/2(1,1,1,0) point with first-step discrepancy 1, first case",
        params: &[ParamSpec {
            name: "l",
            min: 1,
            description: "scale of the weight templates",
        }],
        constraints: &["l >= 1"],
        templates: &[
            "v1 = (2l, 2l, 1, 1)",
            "chart = 2",
            "w2 = (1/(4l))(4l, 2l-1, 1, 2l+1)",
            "w1' = (1/2)(2l+1, 2l-1, 1, 2)",
            "reversed chart = 4",
            "w2' = (1/2)(2l-1, 2l+1, 1, 2)",
            "T = (1/(4l))(-2 + 1/(2l+1))",
        ],
        notes: &[],
    },
    FamilyInfo {
        id: "cD2-d1-case2",
        group: "cD2-d1-case2",
        source: "tower over the 1/2(1,1,1,0) point with first-step discrepancy 1, second case",
        params: &[
            ParamSpec {
                name: "b",
                min: 2,
                description: "exponent of x3 in the equation",
            },
            ParamSpec {
                name: "c",
                min: 4,
                description: "exponent of x4 in the equation",
            },
        ],
        constraints: &["b >= 2", "c >= 4"],
        templates: &[
            "v1 = (2, 2, 1, 1)",
            "chart = 2",
            "w2 = (1/4)(4, 1, 1, 3)",
            "w1' = (1/2)(3, 1, 1, 2)",
            "reversed chart = 4",
            "w2' = (1/2)(1, 3, 1, 2)",
            "T = -5/12",
        ],
        notes: &["F^3 is stored as 16/3, the value forced by the weights (1, 1, 3) over 1/4"],
    },
    FamilyInfo {
        id: "cD2-d1-case3",
        group: "cD2-d1-case3",
        source: "tower over the 1/2(1,1,1,0,0) point with first-step discrepancy 1, parity-split case",
        params: &[ParamSpec {
            name: "l",
            min: 1,
            description: "scale of the weight templates; the data splits on its parity",
        }],
        constraints: &["l >= 1", "templates differ for odd and even l"],
        templates: &[
            "v1 = (l+1, l, 1, 1, 2l+1)",
            "chart = 5",
            "odd l:  w2 = (1/(4l+2))(3l+2, l, 1, 2l+2, 2l), w1' = (1/2)(l+2, l, 1, 2, 2l), w2' = (1/2)(l, l, 1, 2, 2l+2)",
            "even l: w2 = (1/(4l+2))(l+1, 3l+1, 1, 2l+2, 2l), w1' = (1/2)(l+1, l+1, 1, 2, 2l), w2' = (1/2)(l+1, l-1, 1, 2, 2l+2)",
            "reversed chart = 4",
            "T = (1/(4l+2))(-4 + 2l/(l(3l+2)))  [odd];  (1/(4l+2))(-4 + 2l/((l+1)(3l+1)))  [even]",
        ],
        notes: &[
            "the second-step weight prefactor is stored as 1/(4l+2), the only value making the entries barycentric",
            "the second-step discrepancy label is stored as 1/(4l+2)",
            "for odd l the reversed-weight fifth entry is stored as (2l+2)/2, forced by the decomposition v1 = w1' + hat",
            "each parity carries two equation branches, one per forced monomial; both must verify",
        ],
    },
    FamilyInfo {
        id: "cAn-sub1",
        group: "cAn",
        source: "tower over the 1/n(1,n-1,b,0) point, subdivision order with delta1 > 0",
        params: &[
            ParamSpec {
                name: "n",
                min: 2,
                description: "index of the base point",
            },
            ParamSpec {
                name: "b",
                min: 1,
                description: "third weight of the base quotient, coprime to n",
            },
            ParamSpec {
                name: "a",
                min: 2,
                description: "first-step discrepancy numerator",
            },
            ParamSpec {
                name: "d",
                min: 1,
                description: "scale with r1 + r2 = a*d*n",
            },
            ParamSpec {
                name: "r1",
                min: 1,
                description: "first splitting of a*d*n",
            },
        ],
        constraints: &[
            "gcd(b, n) = 1",
            "n divides a - b*r1",
            "gcd(s1, r1) = 1 and gcd(s2, r2) = 1 where s1 = (a-b*r1)/n, s2 = (a+b*r2)/n, r2 = a*d*n - r1",
            "delta1 > 0 and all template entries positive",
        ],
        templates: &[
            "v1 = (1/n)(r1, r2, a, n)",
            "chart = 1",
            "w2 = (1/r1)(r1-s1*, dn, 1, s1*)",
            "w1' = (1/n)(r1-s1*, r2-delta1*dn+s1*, a-delta1, n)",
            "reversed chart = 4",
            "w2' = (1/n)(s1*, delta1*dn-s1*, delta1, n)",
            "T = (1/r1)(-adn/r2 + 1)",
        ],
        notes: &[
            "E^3 is stored as d*n^2/(r1*r2), the form forced by T = (1/r1)(-adn/r2 + 1)",
            "the second entry of w2 is stored as d*n",
        ],
    },
    FamilyInfo {
        id: "cAn-sub2",
        group: "cAn",
        source: "tower over the 1/n(1,n-1,b,0) point, subdivision order with delta2 > 0",
        params: &[
            ParamSpec {
                name: "n",
                min: 2,
                description: "index of the base point",
            },
            ParamSpec {
                name: "b",
                min: 1,
                description: "third weight of the base quotient, coprime to n",
            },
            ParamSpec {
                name: "a",
                min: 2,
                description: "first-step discrepancy numerator",
            },
            ParamSpec {
                name: "d",
                min: 1,
                description: "scale with r1 + r2 = a*d*n",
            },
            ParamSpec {
                name: "r1",
                min: 1,
                description: "first splitting of a*d*n",
            },
        ],
        constraints: &[
            "gcd(b, n) = 1",
            "n divides a - b*r1",
            "gcd(s1, r1) = 1 and gcd(s2, r2) = 1 where s1 = (a-b*r1)/n, s2 = (a+b*r2)/n, r2 = a*d*n - r1",
            "delta2 > 0 and all template entries positive",
        ],
        templates: &[
            "v1 = (1/n)(r1, r2, a, n)",
            "chart = 2",
            "w2 = (1/r2)(dn, r2-s2*, 1, s2*)",
            "w1' = (1/n)(r1+s2*-delta2*dn, r2-s2*, a-delta2, n)",
            "reversed chart = 4",
            "w2' = (1/n)(delta2*dn-s2*, s2*, delta2, n)",
            "T = (1/r2)(-adn/r1 + 1)",
        ],
        notes: &[
            "E^3 is stored as d*n^2/(r1*r2), the form forced by T = (1/r2)(-adn/r1 + 1)",
            "the second-step discrepancy label is 1/r2 for this subdivision order",
        ],
    },
    FamilyInfo {
        id: "gorenstein-1ab",
        group: "gorenstein",
        source: "tower over a smooth point with first weight (1, a, b)",
        params: &[
            ParamSpec {
                name: "a",
                min: 2,
                description: "second entry of the first weight",
            },
            ParamSpec {
                name: "b",
                min: 3,
                description: "third entry of the first weight, coprime to a",
            },
        ],
        constraints: &["a < b", "gcd(a, b) = 1"],
        templates: &[
            "v1 = (1, a, b)",
            "chart = 3",
            "w2 = (1/b)(p, 1, b-p)  with ap = bq + 1, 0 < p < b",
            "w1' = (1, a-q, b-p)",
            "reversed chart = 1",
            "w2' = (1, q, p)",
        ],
        notes: &["no nefness data is recorded for this family; only the weight and discrepancy checks apply"],
    },
];

fn p(values: &BTreeMap<String, i64>, name: &str) -> i64 {
    values[name]
}

fn constraint(msg: impl Into<String>) -> CatalogError {
    CatalogError::Constraint(msg.into())
}

fn ints(coords: &[i64]) -> LatticeVector {
    LatticeVector::from_ints(coords)
}

fn frac(den: i64, coords: &[i64]) -> LatticeVector {
    LatticeVector::scaled(den, coords)
}

fn half(dim: usize, mask: &[i64]) -> Overlattice {
    Overlattice::canonicalize(dim, &[frac(2, mask)]).expect("valid half-lattice")
}

fn ew(order: i64, numerators: &[i64]) -> ExpectedWeight {
    ExpectedWeight {
        order,
        numerators: numerators.to_vec(),
    }
}

fn cyc(order: i64, numerators: &[i64]) -> QuotientType {
    QuotientType::cyclic(
        order as u64,
        numerators
            .iter()
            .map(|&w| w.rem_euclid(order) as u64)
            .collect(),
    )
}

fn mono(dim: usize, parts: &[(usize, i64)]) -> Monomial {
    let mut exps = vec![0u32; dim];
    for &(i, e) in parts {
        exps[i - 1] += e as u32;
    }
    Monomial(exps)
}

fn si(name: &str, monomials: Vec<Monomial>) -> SemiInvariant {
    SemiInvariant::new(name, monomials)
}

fn fact(weight: &LatticeVector, coordinate: usize, substitute: SemiInvariant) -> CompatibilityFact {
    CompatibilityFact {
        coordinate_vector: weight.clone(),
        coordinate,
        substitute_vector: weight.clone(),
        substitute,
    }
}

fn rq(n: i128, d: i128) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn require_positive(label: &str, entries: &[i64]) -> Result<(), CatalogError> {
    if let Some(bad) = entries.iter().find(|&&x| x < 1) {
        return Err(constraint(format!(
            "degenerate instance: {} contains the nonpositive entry {}",
            label, bad
        )));
    }
    Ok(())
}

pub(super) fn build(
    id: &str,
    values: &BTreeMap<String, i64>,
) -> Result<CaseInstance, CatalogError> {
    match id {
        "cD2-a4-case1" => build_cd2_a4_case1(values),
        "cD2-a4-case2" => build_cd2_a4_case2(values),
        "cD2-a-case1-sub1" => build_cd2_a_case1(values, 1),
        "cD2-a-case1-sub2" => build_cd2_a_case1(values, 2),
        "cD2-a-case2-sub1" => build_cd2_a_case2(values, 1),
        "cD2-a-case2-sub2" => build_cd2_a_case2(values, 2),
        "cE2" => build_ce2(values),
        "cD2-d1-case1" => build_cd2_d1_case1(values),
        "cD2-d1-case2" => build_cd2_d1_case2(values),
        "cD2-d1-case3" => build_cd2_d1_case3(values),
        "cAn-sub1" => build_can(values, 1),
        "cAn-sub2" => build_can(values, 2),
        "gorenstein-1ab" => build_gorenstein(values),
        _ => Err(CatalogError::UnknownFamily(id.to_string())),
    }
}

fn build_cd2_a4_case1(values: &BTreeMap<String, i64>) -> Result<CaseInstance, CatalogError> {
    let l = p(values, "l");
    let lattice = half(5, &[1, 1, 1, 0, 0]);
    let v1 = ints(&[4 * l + 1, 4 * l, 2, 1, 8 * l + 1]);
    let v2 = frac(2, &[2 * l + 1, 2 * l + 1, 1, 2, 4 * l]);
    let order = 2 * (8 * l + 1);
    let w2 = ew(order, &[6 * l + 1, 10 * l + 1, 1, 12 * l + 2, 4 * l]);
    let w2p = ew(2, &[6 * l + 1, 6 * l - 1, 3, 2, 12 * l + 2]);
    let w2v = w2.as_vector();

    let phi1 = si(
        "phi1",
        vec![
            mono(5, &[(1, 2)]),
            mono(5, &[(4, 1), (5, 1)]),
            mono(5, &[(3, 4 * l + 2)]),
        ],
    );
    let phi2 = si(
        "phi2",
        vec![mono(5, &[(2, 2)]), mono(5, &[(3, 4 * l)]), mono(5, &[(5, 1)])],
    );
    let branch = EquationBranch {
        label: "main".into(),
        equations: vec![phi1, phi2],
        weight_bounds: vec![
            WeightBound {
                vector: v1.clone(),
                support: si("x3^(4l+2)", vec![mono(5, &[(3, 4 * l + 2)])]),
                min: int(8 * l + 1),
            },
            WeightBound {
                vector: v1.clone(),
                support: si("x3^(4l)", vec![mono(5, &[(3, 4 * l)])]),
                min: int(8 * l),
            },
        ],
        compat_facts: vec![
            fact(&w2v, 4, si("x1^2", vec![mono(5, &[(1, 2)])])),
            fact(
                &w2v,
                5,
                si(
                    "x2^2 + x3^(4l)",
                    vec![mono(5, &[(2, 2)]), mono(5, &[(3, 4 * l)])],
                ),
            ),
        ],
    };

    let fden = (6 * l as i128 + 1) * (10 * l as i128 + 1);
    let fcube = rq((order as i128) * (order as i128), fden);
    let expected_t = rat(1, order) * (int(-8) + rq(4 * l as i128, fden));
    Ok(CaseInstance {
        family_id: "cD2-a4-case1".into(),
        params: values.clone(),
        lattice,
        v1,
        chart: 5,
        v2,
        expected_w2: w2.clone(),
        reversed_chart: 4,
        expected_w2_prime: w2p,
        chart_types: vec![
            ChartTypeExpectation {
                chart: 3,
                expected: cyc(4, &[1, 2, 1, 3, 3]),
            },
            ChartTypeExpectation {
                chart: 5,
                expected: cyc(order, &w2.numerators),
            },
        ],
        branches: vec![branch],
        nef: Some(NefData {
            a: 4,
            n: 2,
            p: order as u64,
            q: int(4 * l),
            c0: int(4),
            q0: int(1),
            ecube: rat(2, order),
            fcube: fcube.clone(),
            expected_t,
        }),
        kawamata: Some(KawamataCheck {
            p: order as u64,
            weights: [(6 * l + 1) as u64, (10 * l + 1) as u64, 1],
            expected: fcube,
        }),
        disc: DiscrepancyLabels {
            f: int(2),
            g: rat(1, order),
            fprime: rat(1, 2),
            gprime: rat(3, 2),
        },
        kind: CaseKind::Other,
        a: 4,
        n: 2,
        delta: None,
        gorenstein: None,
    })
}

fn build_cd2_a4_case2(values: &BTreeMap<String, i64>) -> Result<CaseInstance, CatalogError> {
    let l = p(values, "l");
    let lattice = half(5, &[1, 1, 1, 0, 0]);
    let v1 = ints(&[4 * l, 4 * l - 1, 2, 1, 8 * l - 1]);
    let v2 = frac(2, &[6 * l + 1, 6 * l - 1, 3, 2, 12 * l - 2]);
    let order = 2 * (8 * l - 1);
    let w2 = ew(order, &[10 * l - 1, 6 * l - 1, 1, 4 * l, 12 * l - 2]);
    let w2p = ew(2, &[2 * l - 1, 2 * l - 1, 1, 2, 4 * l]);
    let w2v = w2.as_vector();

    let phi1 = si(
        "phi1",
        vec![
            mono(5, &[(1, 2)]),
            mono(5, &[(4, 1), (5, 1)]),
            mono(5, &[(3, 4 * l)]),
        ],
    );
    let phi2 = si("phi2", vec![mono(5, &[(2, 2)]), mono(5, &[(5, 1)])]);
    let branch = EquationBranch {
        label: "main".into(),
        equations: vec![phi1, phi2],
        weight_bounds: vec![WeightBound {
            vector: v1.clone(),
            support: si("x3^(4l)", vec![mono(5, &[(3, 4 * l)])]),
            min: int(8 * l),
        }],
        compat_facts: vec![
            fact(
                &w2v,
                4,
                si(
                    "x1^2 + x3^(4l)",
                    vec![mono(5, &[(1, 2)]), mono(5, &[(3, 4 * l)])],
                ),
            ),
            fact(&w2v, 5, si("x2^2", vec![mono(5, &[(2, 2)])])),
        ],
    };

    let fden = (10 * l as i128 - 1) * (6 * l as i128 - 1);
    let fcube = rq((order as i128) * (order as i128), fden);
    let expected_t = rat(1, order) * (int(-8) + rat(2, 10 * l - 1));
    Ok(CaseInstance {
        family_id: "cD2-a4-case2".into(),
        params: values.clone(),
        lattice,
        v1,
        chart: 5,
        v2,
        expected_w2: w2.clone(),
        reversed_chart: 4,
        expected_w2_prime: w2p,
        chart_types: vec![
            ChartTypeExpectation {
                chart: 3,
                expected: cyc(4, &[2, 3, 1, 3, 1]),
            },
            ChartTypeExpectation {
                chart: 5,
                expected: cyc(order, &w2.numerators),
            },
        ],
        branches: vec![branch],
        nef: Some(NefData {
            a: 4,
            n: 2,
            p: order as u64,
            q: int(12 * l - 2),
            c0: int(4),
            q0: int(1),
            ecube: rat(2, order),
            fcube: fcube.clone(),
            expected_t,
        }),
        kawamata: Some(KawamataCheck {
            p: order as u64,
            weights: [(10 * l - 1) as u64, (6 * l - 1) as u64, 1],
            expected: fcube,
        }),
        disc: DiscrepancyLabels {
            f: int(2),
            g: rat(1, order),
            fprime: rat(3, 2),
            gprime: rat(1, 2),
        },
        kind: CaseKind::Other,
        a: 4,
        n: 2,
        delta: None,
        gorenstein: None,
    })
}

fn build_cd2_a_case1(
    values: &BTreeMap<String, i64>,
    sub: usize,
) -> Result<CaseInstance, CatalogError> {
    let r = p(values, "r");
    let a = p(values, "a");
    if a % 2 == 0 {
        return Err(constraint("a must be odd"));
    }
    if r % 2 == 0 {
        return Err(constraint("r must be odd"));
    }
    if (r + 1) % (2 * a) != 0 {
        return Err(constraint("r + 1 must be divisible by 2a"));
    }
    let d = (r + 1) / (2 * a);
    let lattice = half(4, &[1, 1, 1, 0]);
    let big = frac(2, &[r + 2, r, a, 2]);
    let small = frac(2, &[r + 2 - 4 * d, r - 4 * d, a - 2, 2]);
    let phi = si(
        "phi",
        vec![
            mono(4, &[(1, 2)]),
            mono(4, &[(2, 2), (4, 1)]),
            mono(4, &[(3, 4 * d)]),
        ],
    );
    let branch = EquationBranch {
        label: "main".into(),
        equations: vec![phi],
        weight_bounds: vec![],
        compat_facts: vec![],
    };

    let ecube = rq(
        4 * (r as i128 + 1),
        (a as i128) * (r as i128) * (r as i128 + 2),
    );
    let family_id;
    let (v1, chart, w2, v2, w2p, nef, kawamata, disc);
    if sub == 1 {
        family_id = "cD2-a-case1-sub1";
        v1 = big;
        chart = 1;
        w2 = ew(r + 2, &[4 * d, 4 * d, 1, r + 2 - 4 * d]);
        v2 = ints(&[2 * d, 2 * d, 1, 1]);
        w2p = ew(2, &[r + 2 - 4 * d, r - 4 * d, a - 2, 2]);
        let fcube = rq(
            (r as i128 + 2) * (r as i128 + 2),
            4 * (d as i128) * (r as i128 + 2 - 4 * d as i128),
        );
        nef = NefData {
            a,
            n: 2,
            p: (r + 2) as u64,
            q: int(4 * d),
            c0: int(2),
            q0: int(r + 2 - 4 * d),
            ecube,
            fcube: fcube.clone(),
            expected_t: rat(1, r + 2) * (rat(-2 * (r + 1), r) + int(1)),
        };
        kawamata = KawamataCheck {
            p: (r + 2) as u64,
            weights: [(4 * d) as u64, 1, (r + 2 - 4 * d) as u64],
            expected: fcube,
        };
        disc = DiscrepancyLabels {
            f: rat(a, 2),
            g: rat(1, r + 2),
            fprime: int(1),
            gprime: rat(a - 2, 2),
        };
    } else {
        family_id = "cD2-a-case1-sub2";
        v1 = big;
        chart = 2;
        w2 = ew(r, &[4 * d, r - 4 * d, 1, 4 * d]);
        v2 = small;
        w2p = ew(1, &[2 * d, 2 * d, 1, 1]);
        let fcube = rq(
            (r as i128) * (r as i128),
            4 * (d as i128) * (r as i128 - 4 * d as i128),
        );
        nef = NefData {
            a,
            n: 2,
            p: r as u64,
            q: int(r - 4 * d),
            c0: int(2),
            q0: int(4 * d),
            ecube,
            fcube: fcube.clone(),
            expected_t: rat(1, r) * (rat(-2 * (r + 1), r + 2) + int(1)),
        };
        kawamata = KawamataCheck {
            p: r as u64,
            weights: [(4 * d) as u64, (r - 4 * d) as u64, 1],
            expected: fcube,
        };
        disc = DiscrepancyLabels {
            f: rat(a, 2),
            g: rat(1, r),
            fprime: rat(a - 2, 2),
            gprime: int(1),
        };
    }
    Ok(CaseInstance {
        family_id: family_id.into(),
        params: values.clone(),
        lattice,
        v1,
        chart,
        v2,
        expected_w2: w2.clone(),
        reversed_chart: 4,
        expected_w2_prime: w2p,
        chart_types: vec![ChartTypeExpectation {
            chart,
            expected: cyc(w2.order, &w2.numerators),
        }],
        branches: vec![branch],
        nef: Some(nef),
        kawamata: Some(kawamata),
        disc,
        kind: CaseKind::Other,
        a,
        n: 2,
        delta: None,
        gorenstein: None,
    })
}

fn build_cd2_a_case2(
    values: &BTreeMap<String, i64>,
    sub: usize,
) -> Result<CaseInstance, CatalogError> {
    let a = p(values, "a");
    let d = p(values, "d");
    let r = (2 * d + 1) * a - 2;
    let lattice = half(5, &[1, 1, 0, 1, 1]);
    let big = frac(2, &[a, r, 2, r + 2, r + 4]);
    let small = frac(
        2,
        &[a - 1, r - 2 * d - 1, 2, r - 2 * d + 1, r - 2 * d + 3],
    );
    let phi1 = si(
        "phi1",
        vec![mono(5, &[(4, 2)]), mono(5, &[(2, 1), (5, 1)])],
    );
    let phi2 = si(
        "phi2",
        vec![
            mono(5, &[(2, 1), (3, 1)]),
            mono(5, &[(1, 2 * d + 1)]),
            mono(5, &[(5, 1)]),
        ],
    );
    let branch = EquationBranch {
        label: "main".into(),
        equations: vec![phi1, phi2],
        weight_bounds: vec![],
        compat_facts: vec![],
    };

    let ecube = rq(
        4 * (r as i128 + 2),
        (a as i128) * (r as i128) * (r as i128 + 4),
    );
    let family_id;
    let (v1, chart, w2, v2, w2p, nef, kawamata, disc);
    if sub == 1 {
        family_id = "cD2-a-case2-sub1";
        v1 = big;
        chart = 5;
        w2 = ew(
            r + 4,
            &[1, 4 * d + 2, r - 2 * d + 3, 2 * d + 1, 2 * d + 1],
        );
        v2 = frac(2, &[1, 2 * d + 1, 2, 2 * d + 1, 2 * d + 1]);
        w2p = ew(
            2,
            &[a - 1, r - 2 * d - 1, 2, r - 2 * d + 1, r - 2 * d + 3],
        );
        let fcube = rq(
            (r as i128 + 4) * (r as i128 + 4),
            (2 * d as i128 + 1) * (r as i128 - 2 * d as i128 + 3),
        );
        nef = NefData {
            a,
            n: 2,
            p: (r + 4) as u64,
            q: int(2 * d + 1),
            c0: int(2),
            q0: int(r - 2 * d + 3),
            ecube,
            fcube: fcube.clone(),
            expected_t: rat(1, r + 4) * (rat(-2 * (r + 2), r) + int(1)),
        };
        kawamata = KawamataCheck {
            p: (r + 4) as u64,
            weights: [1, (r - 2 * d + 3) as u64, (2 * d + 1) as u64],
            expected: fcube,
        };
        disc = DiscrepancyLabels {
            f: rat(a, 2),
            g: rat(1, r + 4),
            fprime: rat(1, 2),
            gprime: rat(a - 1, 2),
        };
    } else {
        family_id = "cD2-a-case2-sub2";
        v1 = big;
        chart = 2;
        w2 = ew(
            r,
            &[1, r - 2 * d - 1, 2 * d + 1, 2 * d + 1, 4 * d + 2],
        );
        v2 = small;
        w2p = ew(2, &[1, 2 * d + 1, 2, 2 * d + 1, 2 * d + 1]);
        let fcube = rq(
            (r as i128) * (r as i128),
            (2 * d as i128 + 1) * (r as i128 - 2 * d as i128 - 1),
        );
        nef = NefData {
            a,
            n: 2,
            p: r as u64,
            q: int(r - 2 * d - 1),
            c0: int(2),
            q0: int(2 * d + 1),
            ecube,
            fcube: fcube.clone(),
            expected_t: rat(1, r) * (rat(-2 * (r + 2), r + 4) + int(1)),
        };
        kawamata = KawamataCheck {
            p: r as u64,
            weights: [1, (r - 2 * d - 1) as u64, (2 * d + 1) as u64],
            expected: fcube,
        };
        disc = DiscrepancyLabels {
            f: rat(a, 2),
            g: rat(1, r),
            fprime: rat(a - 1, 2),
            gprime: rat(1, 2),
        };
    }
    Ok(CaseInstance {
        family_id: family_id.into(),
        params: values.clone(),
        lattice,
        v1,
        chart,
        v2,
        expected_w2: w2.clone(),
        reversed_chart: 3,
        expected_w2_prime: w2p,
        chart_types: vec![ChartTypeExpectation {
            chart,
            expected: cyc(w2.order, &w2.numerators),
        }],
        branches: vec![branch],
        nef: Some(nef),
        kawamata: Some(kawamata),
        disc,
        kind: CaseKind::Other,
        a,
        n: 2,
        delta: None,
        gorenstein: None,
    })
}

fn build_ce2(values: &BTreeMap<String, i64>) -> Result<CaseInstance, CatalogError> {
    let lattice = half(4, &[0, 1, 1, 1]);
    let v1 = ints(&[3, 2, 1, 4]);
    let v2 = frac(2, &[2, 3, 1, 3]);
    let w2 = ew(6, &[2, 5, 1, 1]);
    let w2p = ew(3, &[5, 4, 1, 6]);
    let phi = si(
        "phi",
        vec![
            mono(4, &[(4, 2)]),
            mono(4, &[(1, 3)]),
            mono(4, &[(2, 4)]),
            mono(4, &[(3, 8)]),
        ],
    );
    let branch = EquationBranch {
        label: "main".into(),
        equations: vec![phi],
        weight_bounds: vec![],
        compat_facts: vec![],
    };
    let fcube = rat(36, 5);
    Ok(CaseInstance {
        family_id: "cE2".into(),
        params: values.clone(),
        lattice,
        v1,
        chart: 1,
        v2,
        expected_w2: w2.clone(),
        reversed_chart: 2,
        expected_w2_prime: w2p,
        chart_types: vec![ChartTypeExpectation {
            chart: 1,
            expected: cyc(6, &w2.numerators),
        }],
        branches: vec![branch],
        nef: Some(NefData {
            a: 2,
            n: 2,
            p: 6,
            q: int(2),
            c0: int(2),
            q0: int(1),
            ecube: rat(1, 6),
            fcube: fcube.clone(),
            expected_t: rat(-1, 10),
        }),
        kawamata: Some(KawamataCheck {
            p: 6,
            weights: [5, 1, 1],
            expected: fcube,
        }),
        disc: DiscrepancyLabels {
            f: int(1),
            g: rat(1, 6),
            fprime: rat(1, 2),
            gprime: rat(1, 3),
        },
        kind: CaseKind::CE2,
        a: 2,
        n: 2,
        delta: None,
        gorenstein: None,
    })
}

fn build_cd2_d1_case1(values: &BTreeMap<String, i64>) -> Result<CaseInstance, CatalogError> {
    let l = p(values, "l");
    let lattice = half(4, &[1, 1, 1, 0]);
    let v1 = ints(&[2 * l, 2 * l, 1, 1]);
    let v2 = frac(2, &[2 * l + 1, 2 * l - 1, 1, 2]);
    let w2 = ew(4 * l, &[4 * l, 2 * l - 1, 1, 2 * l + 1]);
    let w2p = ew(2, &[2 * l - 1, 2 * l + 1, 1, 2]);
    let phi = si(
        "phi",
        vec![
            mono(4, &[(1, 2)]),
            mono(4, &[(2, 2), (4, 1)]),
            mono(4, &[(3, 4 * l)]),
        ],
    );
    let branch = EquationBranch {
        label: "main".into(),
        equations: vec![phi],
        weight_bounds: vec![],
        compat_facts: vec![],
    };
    let fden = (2 * l as i128 + 1) * (2 * l as i128 - 1);
    let fcube = rq(16 * (l as i128) * (l as i128), fden);
    Ok(CaseInstance {
        family_id: "cD2-d1-case1".into(),
        params: values.clone(),
        lattice,
        v1,
        chart: 2,
        v2,
        expected_w2: w2.clone(),
        reversed_chart: 4,
        expected_w2_prime: w2p,
        chart_types: vec![ChartTypeExpectation {
            chart: 2,
            expected: cyc(4 * l, &w2.numerators),
        }],
        branches: vec![branch],
        nef: Some(NefData {
            a: 2,
            n: 2,
            p: (4 * l) as u64,
            q: int(2 * l - 1),
            c0: int(2),
            q0: int(1),
            ecube: rat(2, 4 * l),
            fcube: fcube.clone(),
            expected_t: rat(1, 4 * l) * (int(-2) + rat(1, 2 * l + 1)),
        }),
        kawamata: Some(KawamataCheck {
            p: (4 * l) as u64,
            weights: [(2 * l - 1) as u64, 1, (2 * l + 1) as u64],
            expected: fcube,
        }),
        disc: DiscrepancyLabels {
            f: int(1),
            g: rat(1, 4 * l),
            fprime: rat(1, 2),
            gprime: rat(1, 2),
        },
        kind: CaseKind::Other,
        a: 2,
        n: 2,
        delta: None,
        gorenstein: None,
    })
}

fn build_cd2_d1_case2(values: &BTreeMap<String, i64>) -> Result<CaseInstance, CatalogError> {
    let b = p(values, "b");
    let c = p(values, "c");
    let lattice = half(4, &[1, 1, 1, 0]);
    let v1 = ints(&[2, 2, 1, 1]);
    let v2 = frac(2, &[3, 1, 1, 2]);
    let w2 = ew(4, &[4, 1, 1, 3]);
    let w2p = ew(2, &[1, 3, 1, 2]);
    let phi = si(
        "phi",
        vec![
            mono(4, &[(1, 2)]),
            mono(4, &[(2, 1), (3, 1), (4, 1)]),
            mono(4, &[(2, 4)]),
            mono(4, &[(3, 2 * b)]),
            mono(4, &[(4, c)]),
        ],
    );
    let branch = EquationBranch {
        label: "main".into(),
        equations: vec![phi],
        weight_bounds: vec![],
        compat_facts: vec![],
    };
    let fcube = rat(16, 3);
    Ok(CaseInstance {
        family_id: "cD2-d1-case2".into(),
        params: values.clone(),
        lattice,
        v1,
        chart: 2,
        v2,
        expected_w2: w2.clone(),
        reversed_chart: 4,
        expected_w2_prime: w2p,
        chart_types: vec![ChartTypeExpectation {
            chart: 2,
            expected: cyc(4, &w2.numerators),
        }],
        branches: vec![branch],
        nef: Some(NefData {
            a: 2,
            n: 2,
            p: 4,
            q: int(1),
            c0: int(2),
            q0: int(1),
            ecube: rat(1, 2),
            fcube: fcube.clone(),
            expected_t: rat(-5, 12),
        }),
        kawamata: Some(KawamataCheck {
            p: 4,
            weights: [1, 1, 3],
            expected: fcube,
        }),
        disc: DiscrepancyLabels {
            f: int(1),
            g: rat(1, 4),
            fprime: rat(1, 2),
            gprime: rat(1, 2),
        },
        kind: CaseKind::Other,
        a: 2,
        n: 2,
        delta: None,
        gorenstein: None,
    })
}

fn build_cd2_d1_case3(values: &BTreeMap<String, i64>) -> Result<CaseInstance, CatalogError> {
    let l = p(values, "l");
    let lattice = half(5, &[1, 1, 1, 0, 0]);
    let v1 = ints(&[l + 1, l, 1, 1, 2 * l + 1]);
    let order = 4 * l + 2;
    let phi1 = si(
        "phi1",
        vec![mono(5, &[(1, 2)]), mono(5, &[(4, 1), (5, 1)])],
    );
    let phi2 = si("phi2", vec![mono(5, &[(2, 2)]), mono(5, &[(5, 1)])]);

    let odd = l % 2 == 1;
    let (w2, v2, w2p, forced, fden, kaw_weights): (
        ExpectedWeight,
        LatticeVector,
        ExpectedWeight,
        Vec<Monomial>,
        i128,
        [u64; 3],
    ) = if odd {
        (
            ew(order, &[3 * l + 2, l, 1, 2 * l + 2, 2 * l]),
            frac(2, &[l + 2, l, 1, 2, 2 * l]),
            ew(2, &[l, l, 1, 2, 2 * l + 2]),
            vec![
                mono(5, &[(3, 2 * l + 2)]),
                mono(5, &[(2, 1), (3, l + 2)]),
            ],
            (l as i128) * (3 * l as i128 + 2),
            [(3 * l + 2) as u64, l as u64, 1],
        )
    } else {
        (
            ew(order, &[l + 1, 3 * l + 1, 1, 2 * l + 2, 2 * l]),
            frac(2, &[l + 1, l + 1, 1, 2, 2 * l]),
            ew(2, &[l + 1, l - 1, 1, 2, 2 * l + 2]),
            vec![mono(5, &[(3, 2 * l)]), mono(5, &[(1, 1), (3, l - 1)])],
            (l as i128 + 1) * (3 * l as i128 + 1),
            [(l + 1) as u64, (3 * l + 1) as u64, 1],
        )
    };
    let w2v = w2.as_vector();

    let branches = forced
        .into_iter()
        .map(|m| {
            let label = format!(
                "{} forced into {}",
                m,
                if odd { "phi1" } else { "phi2" }
            );
            let (eq1, eq2, facts) = if odd {
                let eq1 = phi1.with(std::slice::from_ref(&m));
                let facts = vec![
                    fact(
                        &w2v,
                        4,
                        SemiInvariant::new(
                            "x1^2 + forced",
                            vec![mono(5, &[(1, 2)]), m.clone()],
                        ),
                    ),
                    fact(&w2v, 5, si("x2^2", vec![mono(5, &[(2, 2)])])),
                ];
                (eq1, phi2.clone(), facts)
            } else {
                let eq2 = phi2.with(std::slice::from_ref(&m));
                let facts = vec![
                    fact(&w2v, 4, si("x1^2", vec![mono(5, &[(1, 2)])])),
                    fact(
                        &w2v,
                        5,
                        SemiInvariant::new(
                            "x2^2 + forced",
                            vec![mono(5, &[(2, 2)]), m.clone()],
                        ),
                    ),
                ];
                (phi1.clone(), eq2, facts)
            };
            EquationBranch {
                label,
                equations: vec![eq1, eq2],
                weight_bounds: vec![],
                compat_facts: facts,
            }
        })
        .collect();

    let fcube = rq((order as i128) * (order as i128), fden);
    Ok(CaseInstance {
        family_id: "cD2-d1-case3".into(),
        params: values.clone(),
        lattice,
        v1,
        chart: 5,
        v2,
        expected_w2: w2.clone(),
        reversed_chart: 4,
        expected_w2_prime: w2p,
        chart_types: vec![ChartTypeExpectation {
            chart: 5,
            expected: cyc(order, &w2.numerators),
        }],
        branches,
        nef: Some(NefData {
            a: 2,
            n: 2,
            p: order as u64,
            q: int(2 * l),
            c0: int(2),
            q0: int(1),
            ecube: rat(4, order),
            fcube: fcube.clone(),
            expected_t: rat(1, order) * (int(-4) + rq(2 * l as i128, fden)),
        }),
        kawamata: Some(KawamataCheck {
            p: order as u64,
            weights: kaw_weights,
            expected: fcube,
        }),
        disc: DiscrepancyLabels {
            f: int(1),
            g: rat(1, order),
            fprime: rat(1, 2),
            gprime: rat(1, 2),
        },
        kind: CaseKind::Other,
        a: 2,
        n: 2,
        delta: None,
        gorenstein: None,
    })
}

fn build_can(values: &BTreeMap<String, i64>, sub: usize) -> Result<CaseInstance, CatalogError> {
    let n = p(values, "n");
    let b = p(values, "b");
    let a = p(values, "a");
    let d = p(values, "d");
    let r1 = p(values, "r1");
    let dd = delta_data(n, b, a, d, r1)?;
    let r2 = dd.r2;
    let dn = d * n;
    let lattice = Overlattice::canonicalize(
        4,
        &[LatticeVector::scaled(n, &[1, n - 1, b.rem_euclid(n), 0])],
    )?;
    let v1 = frac(n, &[r1, r2, a, n]);
    let phi = si(
        "phi",
        vec![mono(4, &[(1, 1), (2, 1)]), mono(4, &[(3, dn)])],
    );
    let branch = EquationBranch {
        label: "main".into(),
        equations: vec![phi],
        weight_bounds: vec![],
        compat_facts: vec![],
    };
    let ecube = rq((d as i128) * (n as i128) * (n as i128), (r1 as i128) * (r2 as i128));

    let family_id;
    let (chart, w2, v2, w2p, nef, kawamata, disc);
    if sub == 1 {
        family_id = "cAn-sub1";
        let (s, delta) = (dd.s1star, dd.delta1);
        if delta < 1 {
            return Err(constraint(format!(
                "this subdivision order requires delta1 > 0 (got {})",
                delta
            )));
        }
        chart = 1;
        w2 = ew(r1, &[r1 - s, dn, 1, s]);
        v2 = frac(n, &[r1 - s, r2 - delta * dn + s, a - delta, n]);
        w2p = ew(n, &[s, delta * dn - s, delta, n]);
        require_positive("the second-step weight", &w2.numerators)?;
        require_positive(
            "the reversed tower center",
            &[r1 - s, r2 - delta * dn + s, a - delta, n],
        )?;
        require_positive("the reversed second-step weight", &w2p.numerators)?;
        let fcube = rq(
            (r1 as i128) * (r1 as i128),
            (s as i128) * (r1 as i128 - s as i128),
        );
        nef = NefData {
            a,
            n: n as u64,
            p: r1 as u64,
            q: int(r1 - s),
            c0: int(n),
            q0: int(s),
            ecube,
            fcube: fcube.clone(),
            expected_t: rat(1, r1)
                * (rq(-(a as i128) * (dn as i128), r2 as i128) + int(1)),
        };
        kawamata = KawamataCheck {
            p: r1 as u64,
            weights: [(r1 - s) as u64, 1, s as u64],
            expected: fcube,
        };
        disc = DiscrepancyLabels {
            f: rat(a, n),
            g: rat(1, r1),
            fprime: rat(a - delta, n),
            gprime: rat(delta, n),
        };
    } else {
        family_id = "cAn-sub2";
        let (s, delta) = (dd.s2star, dd.delta2);
        if delta < 1 {
            return Err(constraint(format!(
                "this subdivision order requires delta2 > 0 (got {})",
                delta
            )));
        }
        chart = 2;
        w2 = ew(r2, &[dn, r2 - s, 1, s]);
        v2 = frac(n, &[r1 + s - delta * dn, r2 - s, a - delta, n]);
        w2p = ew(n, &[delta * dn - s, s, delta, n]);
        require_positive("the second-step weight", &w2.numerators)?;
        require_positive(
            "the reversed tower center",
            &[r1 + s - delta * dn, r2 - s, a - delta, n],
        )?;
        require_positive("the reversed second-step weight", &w2p.numerators)?;
        let fcube = rq(
            (r2 as i128) * (r2 as i128),
            (s as i128) * (r2 as i128 - s as i128),
        );
        nef = NefData {
            a,
            n: n as u64,
            p: r2 as u64,
            q: int(r2 - s),
            c0: int(n),
            q0: int(s),
            ecube,
            fcube: fcube.clone(),
            expected_t: rat(1, r2)
                * (rq(-(a as i128) * (dn as i128), r1 as i128) + int(1)),
        };
        kawamata = KawamataCheck {
            p: r2 as u64,
            weights: [(r2 - s) as u64, 1, s as u64],
            expected: fcube,
        };
        disc = DiscrepancyLabels {
            f: rat(a, n),
            g: rat(1, r2),
            fprime: rat(a - delta, n),
            gprime: rat(delta, n),
        };
    }
    Ok(CaseInstance {
        family_id: family_id.into(),
        params: values.clone(),
        lattice,
        v1,
        chart,
        v2,
        expected_w2: w2.clone(),
        reversed_chart: 4,
        expected_w2_prime: w2p,
        chart_types: vec![ChartTypeExpectation {
            chart,
            expected: cyc(w2.order, &w2.numerators),
        }],
        branches: vec![branch],
        nef: Some(nef),
        kawamata: Some(kawamata),
        disc,
        kind: CaseKind::Other,
        a,
        n: n as u64,
        delta: Some(dd),
        gorenstein: None,
    })
}

fn build_gorenstein(values: &BTreeMap<String, i64>) -> Result<CaseInstance, CatalogError> {
    let a = p(values, "a");
    let b = p(values, "b");
    if a >= b {
        return Err(constraint("a must be less than b"));
    }
    if gcd_i64(a, b) != 1 {
        return Err(constraint("a and b must be coprime"));
    }
    let pp = mod_inverse(a, b).ok_or_else(|| constraint("a has no inverse modulo b"))?;
    let q = (a * pp - 1) / b;
    let lattice = Overlattice::standard(3);
    let v1 = ints(&[1, a, b]);
    let v2 = ints(&[1, a - q, b - pp]);
    let w2 = ew(b, &[pp, 1, b - pp]);
    let w2p = ew(1, &[1, q, pp]);
    let branch = EquationBranch {
        label: "main".into(),
        equations: vec![],
        weight_bounds: vec![],
        compat_facts: vec![],
    };
    Ok(CaseInstance {
        family_id: "gorenstein-1ab".into(),
        params: values.clone(),
        lattice,
        v1,
        chart: 3,
        v2,
        expected_w2: w2.clone(),
        reversed_chart: 1,
        expected_w2_prime: w2p,
        chart_types: vec![ChartTypeExpectation {
            chart: 3,
            expected: cyc(b, &w2.numerators),
        }],
        branches: vec![branch],
        nef: None,
        kawamata: Some(KawamataCheck {
            p: b as u64,
            weights: [pp as u64, 1, (b - pp) as u64],
            expected: rq(
                (b as i128) * (b as i128),
                (pp as i128) * (b as i128 - pp as i128),
            ),
        }),
        disc: DiscrepancyLabels {
            f: int(a + b),
            g: rat(1, b),
            fprime: int(a + b - pp - q),
            gprime: int(pp + q),
        },
        kind: CaseKind::Other,
        a: a + b,
        n: 1,
        delta: None,
        gorenstein: Some(GorensteinData { a, b, p: pp, q }),
    })
}
