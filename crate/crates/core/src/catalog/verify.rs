//! The master verification routine: re-derives everything the lattice,
//! cone, polynomial, and two-ray modules can compute about a catalog
//! instance and compares against the stored expectations. Failures are
//! recorded, never thrown. `scan` runs `verify` over a parameter box,
//! skipping inadmissible tuples, with deterministically ordered output.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cone::{interchangeable, interchangeable_fast, SimplicialCone, Tower};
use crate::lattice::{int, rational_str, LatticeVector, Rational};
use crate::poly::{compatibility_check, is_semi_invariant, wt, SemiInvariant};
use crate::tworay::{
    discrepancy_over_x, kawamata_fcube, theorem12_verify, DiscrepancyLedger, TwoRayData,
};

use super::delta::gcd_i64;
use super::{instantiate, CaseInstance, CatalogError, ExpectedWeight};

/// One named comparison of a recomputed value against the stored one.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub lhs: String,
    pub rhs: String,
}

/// All checks run on one instance, in a fixed order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub family: String,
    pub params: BTreeMap<String, i64>,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// The result of verifying every admissible tuple in a parameter box.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub family: String,
    pub reports: Vec<VerificationReport>,
    /// Tuples in the box rejected by the family's admissibility constraints.
    pub skipped: usize,
}

impl ScanReport {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed())
    }
}

fn outcome(name: &str, passed: bool, lhs: String, rhs: String) -> CheckResult {
    CheckResult {
        name: name.to_string(),
        passed,
        lhs,
        rhs,
    }
}

fn weight_str(w: &ExpectedWeight) -> String {
    format!(
        "(1/{})({})",
        w.order,
        w.numerators
            .iter()
            .map(|n| n.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    )
}

fn ledger_str(ledger: &DiscrepancyLedger) -> String {
    ledger
        .iter()
        .map(|(k, v)| format!("{} -> {}", k, rational_str(v)))
        .collect::<Vec<_>>()
        .join("; ")
}

/// `sum(v) - sum_k wt(v, phi_k) - 1`: the discrepancy of the weighted
/// blowup along `v` over the base cut out by the equations.
fn toric_discrepancy(v: &LatticeVector, eqs: &[SemiInvariant]) -> Result<Rational, String> {
    let mut total = v.coords().iter().fold(int(0), |acc, c| acc + c);
    for eq in eqs {
        total = total - wt(v, eq).map_err(|e| e.to_string())?;
    }
    Ok(total - int(1))
}

/// Runs every applicable check on `instance` and records the outcomes.
/// Never panics and never returns early: a failed prerequisite (e.g. a
/// tower that cannot be built) fails its own check and every dependent one.
pub fn verify(instance: &CaseInstance) -> VerificationReport {
    let mut checks: Vec<CheckResult> = Vec::new();
    let tower = Tower::new(
        instance.lattice.clone(),
        instance.v1.clone(),
        instance.chart,
        instance.v2.clone(),
    );

    // (1) primitivity: both rays are primitive lattice vectors and the
    // tower through the stated chart exists.
    let prim_goal = "v1, v2 primitive; v1 interior; v2 interior to the stated chart".to_string();
    match &tower {
        Ok(_) => checks.push(outcome("primitivity", true, prim_goal.clone(), prim_goal)),
        Err(e) => checks.push(outcome(
            "primitivity",
            false,
            format!("tower construction failed: {}", e),
            prim_goal,
        )),
    }

    // (2) semi-invariance of all equations plus the declared weight bounds.
    {
        let mut problems = Vec::new();
        let (mut eqs, mut bounds) = (0usize, 0usize);
        for branch in &instance.branches {
            for eq in &branch.equations {
                eqs += 1;
                match is_semi_invariant(&instance.lattice, eq) {
                    Ok(true) => {}
                    Ok(false) => problems.push(format!(
                        "{} is not semi-invariant (branch: {})",
                        eq.name, branch.label
                    )),
                    Err(e) => problems.push(e.to_string()),
                }
            }
            for bound in &branch.weight_bounds {
                bounds += 1;
                match wt(&bound.vector, &bound.support) {
                    Ok(w) if w >= bound.min => {}
                    Ok(w) => problems.push(format!(
                        "wt({}) = {} is below the bound {}",
                        bound.support.name,
                        rational_str(&w),
                        rational_str(&bound.min)
                    )),
                    Err(e) => problems.push(e.to_string()),
                }
            }
        }
        let ok = problems.is_empty();
        checks.push(outcome(
            "semi-invariance",
            ok,
            if ok {
                format!("{} equation(s) semi-invariant, {} bound(s) hold", eqs, bounds)
            } else {
                problems.join("; ")
            },
            "all equations semi-invariant, all weight bounds hold".into(),
        ));
    }

    // (3) quotient types of the stated first-subdivision charts.
    {
        let mut lhs = Vec::new();
        let mut rhs = Vec::new();
        let mut ok = true;
        for expectation in &instance.chart_types {
            rhs.push(format!("chart {}: {}", expectation.chart, expectation.expected));
            let computed = SimplicialCone::orthant(instance.lattice.clone())
                .and_then(|o| o.chart(&instance.v1, expectation.chart))
                .and_then(|c| c.quotient_type());
            match computed {
                Ok(t) => {
                    if !t.equivalent(&expectation.expected) {
                        ok = false;
                    }
                    lhs.push(format!("chart {}: {}", expectation.chart, t));
                }
                Err(e) => {
                    ok = false;
                    lhs.push(format!("chart {}: error: {}", expectation.chart, e));
                }
            }
        }
        checks.push(outcome("quotient-type", ok, lhs.join("; "), rhs.join("; ")));
    }

    // (4) the weight of v2 in the stated chart, its decomposition
    // v2 = lambda * v1 + hat, and the vanishing of hat along v1.
    {
        let rhs = format!(
            "weight {} at position {}, hat residual zero",
            weight_str(&instance.expected_w2),
            instance.chart
        );
        match &tower {
            Ok(t) => {
                let w = t.second_weight();
                let order_ok = w.order == BigInt::from(instance.expected_w2.order)
                    && w.numerators.len() == instance.expected_w2.numerators.len()
                    && w.numerators
                        .iter()
                        .zip(&instance.expected_w2.numerators)
                        .all(|(a, &b)| *a == BigInt::from(b));
                let hat_ok = w.hat.coord(instance.chart).is_zero()
                    && w.position == instance.chart;
                let residual_ok =
                    instance.v1.scale(&w.marked_coefficient()).add(&w.hat) == instance.v2;
                let lhs = format!(
                    "weight (1/{})({}) at position {}, hat residual {}",
                    w.order,
                    w.numerators
                        .iter()
                        .map(|n| n.to_string())
                        .collect::<Vec<_>>()
                        .join(", "),
                    w.position,
                    if residual_ok && hat_ok { "zero" } else { "nonzero" }
                );
                checks.push(outcome(
                    "weight-in-cone",
                    order_ok && hat_ok && residual_ok,
                    lhs,
                    rhs,
                ));
            }
            Err(e) => checks.push(outcome(
                "weight-in-cone",
                false,
                format!("tower construction failed: {}", e),
                rhs,
            )),
        }
    }

    // (5) interchangeability of the two rays, and agreement of the
    // pairwise-determinant sufficient condition when it applies.
    {
        let fast = interchangeable_fast(&instance.v1, &instance.v2);
        match interchangeable(&instance.lattice, &instance.v1, &instance.v2) {
            Ok(geo) => {
                let fast_ok = fast.unwrap_or(geo) == geo || geo;
                checks.push(outcome(
                    "interchangeable",
                    geo && fast_ok,
                    format!("geometric: {}, fast path: {:?}", geo, fast),
                    "geometric: true, fast path consistent".into(),
                ));
            }
            Err(e) => checks.push(outcome(
                "interchangeable",
                false,
                format!("error: {}", e),
                "geometric: true, fast path consistent".into(),
            )),
        }
    }

    // (6) the reversed tower: chart index, reversed second weight, and the
    // involution property.
    {
        let rhs = format!(
            "chart {}, weight {:?}, involution holds",
            instance.reversed_chart,
            instance.expected_w2_prime.as_vector()
        );
        let result = tower
            .as_ref()
            .map_err(|e| e.to_string())
            .and_then(|t| {
                let rev = t.reverse().map_err(|e| e.to_string())?;
                let involution = rev.reverse().map_err(|e| e.to_string())? == *t;
                Ok((rev.chart(), rev.second_weight().as_vector(), involution))
            });
        match result {
            Ok((chart, wvec, involution)) => {
                let ok = chart == instance.reversed_chart
                    && wvec == instance.expected_w2_prime.as_vector()
                    && involution;
                checks.push(outcome(
                    "reverse-tower",
                    ok,
                    format!(
                        "chart {}, weight {:?}, involution {}",
                        chart,
                        wvec,
                        if involution { "holds" } else { "fails" }
                    ),
                    rhs,
                ));
            }
            Err(e) => checks.push(outcome("reverse-tower", false, format!("error: {}", e), rhs)),
        }
    }

    // (7) the declared eliminated-coordinate/substitute weight facts.
    {
        let total: usize = instance.branches.iter().map(|b| b.compat_facts.len()).sum();
        if total == 0 {
            checks.push(outcome(
                "compatibility",
                true,
                "no re-embedding facts declared".into(),
                "no re-embedding facts declared".into(),
            ));
        } else {
            let mut problems = Vec::new();
            for branch in &instance.branches {
                match compatibility_check(&branch.compat_facts) {
                    Ok(true) => {}
                    Ok(false) => {
                        problems.push(format!("weight mismatch on branch {}", branch.label))
                    }
                    Err(e) => problems.push(e.to_string()),
                }
            }
            let ok = problems.is_empty();
            checks.push(outcome(
                "compatibility",
                ok,
                if ok {
                    format!("{} fact(s) consistent", total)
                } else {
                    problems.join("; ")
                },
                "all substituted coordinates carry the substitute's weight".into(),
            ));
        }
    }

    // (8) the nefness criterion with the stored intersection numbers.
    if let Some(nef) = &instance.nef {
        let data = TwoRayData {
            a: BigInt::from(nef.a),
            n: nef.n,
            p: nef.p,
            q: nef.q.clone(),
            c0: nef.c0.clone(),
            q0: nef.q0.clone(),
            ecube: nef.ecube.clone(),
            fcube: nef.fcube.clone(),
        };
        let t = data.criterion_t();
        let ok = t == nef.expected_t
            && t.is_negative()
            && data.nef_check()
            && nef.p as i64 == instance.expected_w2.order;
        checks.push(outcome(
            "nef-criterion",
            ok,
            format!(
                "T = {}, nef = {}, p = {}",
                rational_str(&t),
                data.nef_check(),
                nef.p
            ),
            format!(
                "T = {} (strictly negative), nef = true, p = {}",
                rational_str(&nef.expected_t),
                instance.expected_w2.order
            ),
        ));
    }

    // (9) the self-intersection of the second exceptional from the
    // minimal-discrepancy blowup formula.
    if let Some(k) = &instance.kawamata {
        let computed = kawamata_fcube(k.p, k.weights[0], k.weights[1], k.weights[2]);
        let mut ok = computed == k.expected;
        if let Some(nef) = &instance.nef {
            ok = ok && nef.fcube == k.expected;
        }
        checks.push(outcome(
            "kawamata-cube",
            ok,
            format!(
                "{}^2/({}*{}*{}) = {}",
                k.p,
                k.weights[0],
                k.weights[1],
                k.weights[2],
                rational_str(&computed)
            ),
            rational_str(&k.expected),
        ));
    }

    // (10) discrepancies over the base for both tower orders, the case
    // identity, and the toric cross-check of both first-step labels.
    {
        let result: Result<(Vec<String>, String, String), String> = (|| {
            let t = tower.as_ref().map_err(|e| e.to_string())?;
            let lam = Rational::new(
                BigInt::from(instance.expected_w2.numerators[instance.chart - 1]),
                BigInt::from(instance.expected_w2.order),
            );
            let lamp = Rational::new(
                BigInt::from(
                    instance.expected_w2_prime.numerators[instance.reversed_chart - 1],
                ),
                BigInt::from(instance.expected_w2_prime.order),
            );
            let original = discrepancy_over_x(
                t,
                instance.disc.f.clone(),
                (instance.disc.g.clone(), lam),
            )
            .map_err(|e| e.to_string())?;
            let rev = t.reverse().map_err(|e| e.to_string())?;
            let reversed = discrepancy_over_x(
                &rev,
                instance.disc.fprime.clone(),
                (instance.disc.gprime.clone(), lamp),
            )
            .map_err(|e| e.to_string())?;
            let index = rev
                .chart_cone()
                .quotient_type()
                .map_err(|e| e.to_string())?
                .order();
            let identity = theorem12_verify(
                &original,
                &reversed,
                instance.kind,
                &BigInt::from(instance.a),
                instance.n,
                rev.v1(),
                (index, instance.disc.gprime.clone()),
            )
            .map_err(|e| e.to_string())?;
            let mut fails = Vec::new();
            if !identity {
                fails.push(format!(
                    "ledger agreement or the case identity fails (reversed index {})",
                    index
                ));
            }
            if rev.second_weight().as_vector() != instance.expected_w2_prime.as_vector() {
                fails.push("discrepancies computed against a reversed weight differing from the stated one".into());
            }
            for branch in &instance.branches {
                let first = toric_discrepancy(&instance.v1, &branch.equations)?;
                if first != instance.disc.f {
                    fails.push(format!(
                        "first-step discrepancy recomputes to {} (stated {}) on branch {}",
                        rational_str(&first),
                        rational_str(&instance.disc.f),
                        branch.label
                    ));
                }
                let rfirst = toric_discrepancy(&instance.v2, &branch.equations)?;
                if rfirst != instance.disc.fprime {
                    fails.push(format!(
                        "reversed first-step discrepancy recomputes to {} (stated {}) on branch {}",
                        rational_str(&rfirst),
                        rational_str(&instance.disc.fprime),
                        branch.label
                    ));
                }
            }
            Ok((fails, ledger_str(&original), ledger_str(&reversed)))
        })();
        match result {
            Ok((fails, lhs, rhs)) => {
                let ok = fails.is_empty();
                checks.push(outcome(
                    "discrepancy",
                    ok,
                    if ok { lhs } else { fails.join("; ") },
                    rhs,
                ));
            }
            Err(e) => checks.push(outcome(
                "discrepancy",
                false,
                format!("error: {}", e),
                "ledgers agree and the case identity holds".into(),
            )),
        }
    }

    // (11) the delta system: the four defining relations, both delta
    // identities, and the sign claims.
    if let Some(dd) = &instance.delta {
        let mut fails = Vec::new();
        if dd.a != dd.b * dd.r1 + dd.n * dd.s1 {
            fails.push("a = b*r1 + n*s1 fails");
        }
        if dd.a != -dd.b * dd.r2 + dd.n * dd.s2 {
            fails.push("a = -b*r2 + n*s2 fails");
        }
        if !(0 <= dd.s1star && dd.s1star < dd.r1) || 1 != dd.u1 * dd.r1 + dd.s1star * dd.s1 {
            fails.push("1 = u1*r1 + s1star*s1 with 0 <= s1star < r1 fails");
        }
        if !(0 <= dd.s2star && dd.s2star < dd.r2) || 1 != dd.u2 * dd.r2 + dd.s2star * dd.s2 {
            fails.push("1 = u2*r2 + s2star*s2 with 0 <= s2star < r2 fails");
        }
        if dd.delta1 * dd.r1 + dd.n != dd.a * dd.s1star {
            fails.push("delta1*r1 + n = a*s1star fails");
        }
        if dd.delta2 * dd.r2 + dd.n != dd.a * dd.s2star {
            fails.push("delta2*r2 + n = a*s2star fails");
        }
        if !(dd.a > dd.delta1 && dd.delta1 != 0 && dd.a > dd.delta2 && dd.delta2 != 0) {
            fails.push("a > delta_i != 0 fails");
        }
        if !(dd.delta1 > 0 || dd.delta2 > 0) {
            fails.push("no delta_i is positive");
        }
        if dd.r1 >= dd.r2 && dd.delta1 <= 0 {
            fails.push("r1 >= r2 but delta1 <= 0");
        }
        if dd.delta1 > 0
            && dd.delta2 > 0
            && gcd_i64(dd.a, dd.r1) == 1
            && dd.delta1 + dd.delta2 != dd.a
        {
            fails.push("delta1 + delta2 = a fails although both are positive and gcd(a, r1) = 1");
        }
        let ok = fails.is_empty();
        checks.push(outcome(
            "delta-system",
            ok,
            if ok {
                format!("delta1 = {}, delta2 = {}; all identities hold", dd.delta1, dd.delta2)
            } else {
                fails.join("; ")
            },
            "delta identities, sign claims, and the splitting remark hold".into(),
        ));
    }

    // (12) the index-one family's arithmetic identity and reversed weights.
    if let Some(g) = &instance.gorenstein {
        let mut fails = Vec::new();
        if g.a * g.p != g.b * g.q + 1 {
            fails.push("a*p = b*q + 1 fails".to_string());
        }
        if 1 + (g.a + g.b) * (g.b - g.p) != g.b * (g.a + g.b - g.p - g.q) {
            fails.push("1 + (a+b)(b-p) = b(a+b-p-q) fails".to_string());
        }
        if instance.expected_w2_prime.order != 1
            || instance.expected_w2_prime.numerators != vec![1, g.q, g.p]
        {
            fails.push(format!(
                "reversed weight is {}, not (1, q, p)",
                weight_str(&instance.expected_w2_prime)
            ));
        }
        if instance.v2 != LatticeVector::from_ints(&[1, g.a - g.q, g.b - g.p]) {
            fails.push(format!("second center is {:?}, not (1, a-q, b-p)", instance.v2));
        }
        let ok = fails.is_empty();
        checks.push(outcome(
            "gorenstein-identity",
            ok,
            if ok {
                format!("p = {}, q = {}; a*p = b*q + 1", g.p, g.q)
            } else {
                fails.join("; ")
            },
            "index-one identities and reversed weights hold".into(),
        ));
    }

    VerificationReport {
        family: instance.family_id.clone(),
        params: instance.params.clone(),
        checks,
    }
}

/// Verifies every admissible tuple in the inclusive ranges, in lexicographic
/// order over the family's declared parameter order. Inadmissible tuples are
/// counted in `skipped`. `jobs` worker threads verify concurrently; the
/// output order is independent of `jobs`.
pub fn scan(
    family_id: &str,
    ranges: &BTreeMap<String, (i64, i64)>,
    jobs: usize,
) -> Result<ScanReport, CatalogError> {
    let info = super::family(family_id)
        .ok_or_else(|| CatalogError::UnknownFamily(family_id.to_string()))?;
    for name in ranges.keys() {
        if !info.params.iter().any(|p| p.name == name) {
            return Err(CatalogError::UnexpectedParam(name.clone()));
        }
    }
    let mut axes: Vec<(&str, i64, i64)> = Vec::new();
    for spec in info.params {
        let (lo, hi) = *ranges
            .get(spec.name)
            .ok_or_else(|| CatalogError::MissingParam(spec.name.to_string()))?;
        axes.push((spec.name, lo, hi));
    }

    // Enumerate the box lexicographically in declaration order.
    let mut instances: Vec<CaseInstance> = Vec::new();
    let mut skipped = 0usize;
    let mut cursor: Vec<i64> = axes.iter().map(|&(_, lo, _)| lo).collect();
    'outer: loop {
        if axes.iter().zip(&cursor).all(|(&(_, lo, hi), &v)| lo <= v && v <= hi) {
            let params: BTreeMap<String, i64> = axes
                .iter()
                .zip(&cursor)
                .map(|(&(name, _, _), &v)| (name.to_string(), v))
                .collect();
            match instantiate(family_id, &params) {
                Ok(instance) => instances.push(instance),
                Err(CatalogError::Constraint(_)) => skipped += 1,
                Err(e) => return Err(e),
            }
        }
        if axes.is_empty() {
            break;
        }
        // Odometer increment, last axis fastest.
        for i in (0..axes.len()).rev() {
            cursor[i] += 1;
            if cursor[i] <= axes[i].2 {
                continue 'outer;
            }
            cursor[i] = axes[i].1;
        }
        break;
    }

    let jobs = jobs.max(1);
    let reports: Vec<VerificationReport> = if jobs == 1 || instances.len() < 2 {
        instances.iter().map(verify).collect()
    } else {
        let slots: Vec<Mutex<Option<VerificationReport>>> =
            instances.iter().map(|_| Mutex::new(None)).collect();
        let next = AtomicUsize::new(0);
        std::thread::scope(|scope| {
            for _ in 0..jobs.min(instances.len()) {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= instances.len() {
                        break;
                    }
                    let report = verify(&instances[i]);
                    *slots[i].lock().expect("no poisoned slot") = Some(report);
                });
            }
        });
        slots
            .into_iter()
            .map(|s| s.into_inner().expect("no poisoned slot").expect("filled"))
            .collect()
    };

    Ok(ScanReport {
        family: family_id.to_string(),
        reports,
        skipped,
    })
}
