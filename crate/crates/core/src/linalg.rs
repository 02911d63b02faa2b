//! Integer and rational linear algebra: Hermite and Smith normal forms and
//! exact Gaussian elimination. Everything here is over `BigInt`/`BigRational`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::lattice::Rational;

/// Row-style Hermite normal form of an integer matrix whose row space has
/// full column rank `dim`.
///
/// Returns the unique `dim x dim` upper-triangular basis with positive
/// pivots and entries above each pivot reduced into `[0, pivot)`. Returns
/// `None` when the rows do not span a rank-`dim` lattice.
pub fn hnf(rows: &[Vec<BigInt>], dim: usize) -> Option<Vec<Vec<BigInt>>> {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let n = m.len();
    if n < dim {
        return None;
    }
    let mut pivot_row = 0usize;
    for col in 0..dim {
        // Euclidean elimination below the pivot row.
        loop {
            let mut best: Option<usize> = None;
            for r in pivot_row..n {
                if !m[r][col].is_zero() {
                    match best {
                        None => best = Some(r),
                        Some(b) => {
                            if m[r][col].abs() < m[b][col].abs() {
                                best = Some(r);
                            }
                        }
                    }
                }
            }
            let b = best?;
            m.swap(pivot_row, b);
            let mut done = true;
            for r in pivot_row + 1..n {
                if !m[r][col].is_zero() {
                    let q = m[r][col].div_floor(&m[pivot_row][col]);
                    for c in col..dim {
                        let sub = &q * &m[pivot_row][c];
                        m[r][c] -= sub;
                    }
                    if !m[r][col].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if m[pivot_row][col].is_negative() {
            for c in col..dim {
                m[pivot_row][c] = -m[pivot_row][c].clone();
            }
        }
        pivot_row += 1;
    }
    // Reduce entries above each pivot.
    for col in (0..dim).rev() {
        let pivot = m[col][col].clone();
        for r in 0..col {
            let q = m[r][col].div_floor(&pivot);
            if !q.is_zero() {
                for c in col..dim {
                    let sub = &q * &m[col][c];
                    m[r][c] -= sub;
                }
            }
        }
    }
    m.truncate(dim);
    Some(m)
}

/// Smith normal form `u * m * v = diag(s_1, ..., s_d)` with `s_i | s_{i+1}`,
/// all `s_i >= 0`, and `u`, `v` unimodular.
pub struct Snf {
    pub diag: Vec<BigInt>,
    pub u: Vec<Vec<BigInt>>,
    pub v: Vec<Vec<BigInt>>,
}

pub fn snf(input: &[Vec<BigInt>]) -> Snf {
    let d = input.len();
    let mut m: Vec<Vec<BigInt>> = input.to_vec();
    let mut u = identity(d);
    let mut v = identity(d);

    fn swap_rows(m: &mut [Vec<BigInt>], u: &mut [Vec<BigInt>], a: usize, b: usize) {
        m.swap(a, b);
        u.swap(a, b);
    }
    fn swap_cols(m: &mut [Vec<BigInt>], v: &mut [Vec<BigInt>], a: usize, b: usize) {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
        for row in v.iter_mut() {
            row.swap(a, b);
        }
    }
    fn add_row(m: &mut [Vec<BigInt>], u: &mut [Vec<BigInt>], dst: usize, src: usize, k: &BigInt) {
        let d = m.len();
        for c in 0..d {
            let t = k * &m[src][c];
            m[dst][c] += t;
            let t = k * &u[src][c];
            u[dst][c] += t;
        }
    }
    fn add_col(m: &mut [Vec<BigInt>], v: &mut [Vec<BigInt>], dst: usize, src: usize, k: &BigInt) {
        let d = m.len();
        for r in 0..d {
            let t = k * &m[r][src];
            m[r][dst] += t;
            let t = k * &v[r][src];
            v[r][dst] += t;
        }
    }

    for t in 0..d {
        loop {
            // Move a smallest nonzero entry of the trailing block to (t, t).
            let mut best: Option<(usize, usize)> = None;
            for r in t..d {
                for c in t..d {
                    if !m[r][c].is_zero() {
                        match &best {
                            None => best = Some((r, c)),
                            Some((br, bc)) => {
                                if m[r][c].abs() < m[*br][*bc].abs() {
                                    best = Some((r, c));
                                }
                            }
                        }
                    }
                }
            }
            let (br, bc) = match best {
                Some(p) => p,
                None => break, // trailing block is zero
            };
            swap_rows(&mut m, &mut u, t, br);
            swap_cols(&mut m, &mut v, t, bc);
            let mut clean = true;
            for r in t + 1..d {
                if !m[r][t].is_zero() {
                    let q = -m[r][t].div_floor(&m[t][t]);
                    add_row(&mut m, &mut u, r, t, &q);
                    if !m[r][t].is_zero() {
                        clean = false;
                    }
                }
            }
            for c in t + 1..d {
                if !m[t][c].is_zero() {
                    let q = -m[t][c].div_floor(&m[t][t]);
                    add_col(&mut m, &mut v, c, t, &q);
                    if !m[t][c].is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                continue;
            }
            // Enforce divisibility of the trailing block by the pivot.
            let mut fixed = true;
            'outer: for r in t + 1..d {
                for c in t + 1..d {
                    if !(&m[r][c] % &m[t][t]).is_zero() {
                        add_row(&mut m, &mut u, t, r, &BigInt::one());
                        fixed = false;
                        break 'outer;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        if m[t][t].is_negative() {
            for c in 0..d {
                m[t][c] = -m[t][c].clone();
            }
            for c in 0..d {
                u[t][c] = -u[t][c].clone();
            }
        }
    }

    Snf {
        diag: (0..d).map(|i| m[i][i].clone()).collect(),
        u,
        v,
    }
}

pub fn identity(d: usize) -> Vec<Vec<BigInt>> {
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

/// Solves `sum_j x_j * col_j = b` exactly; `cols` are the column vectors.
/// Returns `None` when the columns are linearly dependent.
pub fn solve_columns(cols: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let d = b.len();
    debug_assert!(cols.iter().all(|c| c.len() == d) && cols.len() == d);
    // Augmented matrix [A | b] with A[r][c] = cols[c][r].
    let mut a: Vec<Vec<Rational>> = (0..d)
        .map(|r| {
            let mut row: Vec<Rational> = (0..d).map(|c| cols[c][r].clone()).collect();
            row.push(b[r].clone());
            row
        })
        .collect();
    for col in 0..d {
        let pivot = (col..d).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col].clone();
        for c in col..=d {
            a[col][c] = &a[col][c] / &p;
        }
        for r in 0..d {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..=d {
                    let t = &f * &a[col][c];
                    a[r][c] = &a[r][c] - &t;
                }
            }
        }
    }
    Some((0..d).map(|r| a[r][d].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn bi(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn hnf_is_canonical_under_row_permutation() {
        let a = bi(&[&[2, 0], &[0, 2], &[1, 1]]);
        let b = bi(&[&[1, 1], &[0, 2], &[2, 0]]);
        assert_eq!(hnf(&a, 2), hnf(&b, 2));
        let h = hnf(&a, 2).unwrap();
        assert_eq!(h, bi(&[&[1, 1], &[0, 2]]));
    }

    #[test]
    fn snf_reproduces_input() {
        let m = bi(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]);
        let s = snf(&m);
        // u * m * v == diag
        let d = 3;
        let mut umv = vec![vec![BigInt::zero(); d]; d];
        let mut um = vec![vec![BigInt::zero(); d]; d];
        for r in 0..d {
            for c in 0..d {
                for k in 0..d {
                    let t = &s.u[r][k] * &m[k][c];
                    um[r][c] += t;
                }
            }
        }
        for r in 0..d {
            for c in 0..d {
                for k in 0..d {
                    let t = &um[r][k] * &s.v[k][c];
                    umv[r][c] += t;
                }
            }
        }
        for r in 0..d {
            for c in 0..d {
                let expect = if r == c { s.diag[r].clone() } else { BigInt::zero() };
                assert_eq!(umv[r][c], expect);
            }
        }
        for i in 0..d - 1 {
            assert!((&s.diag[i + 1] % &s.diag[i]).is_zero());
        }
        let prod: i64 = s.diag.iter().map(|x| x.to_i64().unwrap()).product();
        assert_eq!(prod, 624); // |det| of the input
    }

    #[test]
    fn solve_exact() {
        use crate::lattice::rat;
        let cols = vec![
            vec![rat(1, 1), rat(0, 1)],
            vec![rat(1, 1), rat(2, 1)],
        ];
        let b = vec![rat(1, 1), rat(1, 1)];
        let x = solve_columns(&cols, &b).unwrap();
        assert_eq!(x, vec![rat(1, 2), rat(1, 2)]);
    }
}
