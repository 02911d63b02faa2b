//! The integer system attached to the cA/n family: the inverses `s_i*`,
//! the cofactors `u_i`, and the deltas, solved with the extended Euclidean
//! algorithm. (The test suites re-derive the same data by scanning the
//! congruences directly.)

use super::CatalogError;

/// Solution of the delta system for one parameter tuple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeltaData {
    pub n: i64,
    pub b: i64,
    pub a: i64,
    pub d: i64,
    pub r1: i64,
    pub r2: i64,
    pub s1: i64,
    pub s2: i64,
    /// Inverse of `s1` modulo `r1`, in `[0, r1)`.
    pub s1star: i64,
    pub s2star: i64,
    pub u1: i64,
    pub u2: i64,
    pub delta1: i64,
    pub delta2: i64,
}

pub(super) fn gcd_i64(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd_i64(b, a % b)
    }
}

/// Inverse of `s` modulo `r` in `[0, r)` via extended Euclid; `None` when
/// `gcd(s, r) != 1`. By convention the inverse modulo 1 is 0.
pub(super) fn mod_inverse(s: i64, r: i64) -> Option<i64> {
    if r == 1 {
        return Some(0);
    }
    let (mut old_r, mut rr) = (s.rem_euclid(r), r);
    let (mut old_t, mut t) = (1i64, 0i64);
    while rr != 0 {
        let q = old_r.div_euclid(rr);
        (old_r, rr) = (rr, old_r - q * rr);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_t.rem_euclid(r))
}

/// Solves the delta system for `(n, b, a, d, r1)` with `r2 = a*d*n - r1`.
/// Fails with a constraint error when the tuple is inadmissible:
/// `s1 = (a - b*r1)/n` must be an integer coprime to `r1`, and
/// `s2 = (a + b*r2)/n` coprime to `r2`.
pub fn delta_data(n: i64, b: i64, a: i64, d: i64, r1: i64) -> Result<DeltaData, CatalogError> {
    let r2 = a * d * n - r1;
    if r2 < 1 {
        return Err(CatalogError::Constraint(format!(
            "r2 = a*d*n - r1 = {} must be positive",
            r2
        )));
    }
    if gcd_i64(b, n) != 1 {
        return Err(CatalogError::Constraint("gcd(b, n) must be 1".into()));
    }
    if (a - b * r1).rem_euclid(n) != 0 {
        return Err(CatalogError::Constraint(
            "s1 = (a - b*r1)/n is not an integer".into(),
        ));
    }
    let s1 = (a - b * r1) / n;
    let s2 = (a + b * r2) / n;
    debug_assert_eq!((a + b * r2).rem_euclid(n), 0);
    let s1star = mod_inverse(s1, r1)
        .ok_or_else(|| CatalogError::Constraint("s1 is not coprime to r1".into()))?;
    let s2star = mod_inverse(s2, r2)
        .ok_or_else(|| CatalogError::Constraint("s2 is not coprime to r2".into()))?;
    let u1 = (1 - s1star * s1) / r1;
    let u2 = (1 - s2star * s2) / r2;
    let delta1 = -n * u1 + b * s1star;
    let delta2 = -n * u2 - b * s2star;
    Ok(DeltaData {
        n,
        b,
        a,
        d,
        r1,
        r2,
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

    #[test]
    fn worked_tuples() {
        let d = delta_data(2, 1, 5, 1, 3).unwrap();
        assert_eq!(
            (d.s1, d.s1star, d.u1, d.delta1),
            (1, 1, 0, 1)
        );
        assert_eq!(
            (d.s2, d.s2star, d.u2, d.delta2),
            (6, 6, -5, 4)
        );
        assert_eq!(d.delta1 + d.delta2, d.a);

        let d = delta_data(2, 1, 3, 1, 5).unwrap();
        assert_eq!((d.delta1, d.delta2), (2, -2));

        let d = delta_data(3, 1, 2, 1, 5).unwrap();
        assert_eq!((d.delta1, d.delta2), (1, -3));
    }

    #[test]
    fn identities_hold() {
        for n in 2..=6 {
            for b in 1..=6 {
                for a in 2..=6 {
                    for dd in 1..=3 {
                        for r1 in 1..(a * dd * n) {
                            if let Ok(s) = delta_data(n, b, a, dd, r1) {
                                assert_eq!(s.a, s.b * s.r1 + s.n * s.s1);
                                assert_eq!(s.a, -s.b * s.r2 + s.n * s.s2);
                                assert_eq!(1, s.u1 * s.r1 + s.s1star * s.s1);
                                assert_eq!(1, s.u2 * s.r2 + s.s2star * s.s2);
                                assert_eq!(s.delta1 * s.r1 + s.n, s.a * s.s1star);
                                assert_eq!(s.delta2 * s.r2 + s.n, s.a * s.s2star);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn inadmissible_tuples_are_rejected() {
        // gcd(b, n) != 1
        assert!(delta_data(2, 2, 5, 1, 3).is_err());
        // s1 not integral: a - b*r1 = 5 - 4 = 1, n = 2
        assert!(delta_data(2, 1, 5, 1, 4).is_err());
    }
}
