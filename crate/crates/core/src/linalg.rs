//! Arbitrary-precision matrix kernels shared by the lattice and cone code.
//!
//! Everything here works on `Vec<Vec<BigInt>>` / `Vec<Vec<BigRational>>`
//! and never touches machine integers except at the conversion boundary.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub(crate) type BigMat = Vec<Vec<BigInt>>;
pub(crate) type RatMat = Vec<Vec<BigRational>>;

pub(crate) fn to_big(rows: &[Vec<i64>]) -> BigMat {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

pub(crate) fn to_i64(x: &BigInt) -> Result<i64> {
    x.to_i64().ok_or_else(|| Error::Overflow(x.to_string()))
}

pub(crate) fn vec_to_i64(v: &[BigInt]) -> Result<Vec<i64>> {
    v.iter().map(to_i64).collect()
}

pub(crate) fn mat_to_i64(m: &BigMat) -> Result<Vec<Vec<i64>>> {
    m.iter().map(|r| vec_to_i64(r)).collect()
}

pub(crate) fn identity(n: usize) -> BigMat {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

/// Smith normal form `u * a * v = d` of an `m x n` matrix.
pub(crate) struct BigSmith {
    pub u: BigMat,
    pub d: BigMat,
    pub v: BigMat,
    pub rank: usize,
}

pub(crate) fn smith(a: &BigMat, m: usize, n: usize) -> BigSmith {
    let mut d = a.clone();
    let mut u = identity(m);
    let mut v = identity(n);
    let mut t = 0;
    while t < m.min(n) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if !d[i][j].is_zero()
                    && best.is_none_or(|(bi, bj)| d[i][j].abs() < d[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        d.swap(t, pi);
        u.swap(t, pi);
        for row in d.iter_mut() {
            row.swap(t, pj);
        }
        for row in v.iter_mut() {
            row.swap(t, pj);
        }

        let mut dirty = false;
        for i in t + 1..m {
            if d[i][t].is_zero() {
                continue;
            }
            let q = d[i][t].div_floor(&d[t][t]);
            for j in t..n {
                let s = &q * &d[t][j];
                d[i][j] -= s;
            }
            for j in 0..m {
                let s = &q * &u[t][j];
                u[i][j] -= s;
            }
            dirty |= !d[i][t].is_zero();
        }
        for j in t + 1..n {
            if d[t][j].is_zero() {
                continue;
            }
            let q = d[t][j].div_floor(&d[t][t]);
            for i in t..m {
                let s = &q * &d[i][t];
                d[i][j] -= s;
            }
            for i in 0..n {
                let s = &q * &v[i][t];
                v[i][j] -= s;
            }
            dirty |= !d[t][j].is_zero();
        }
        if dirty {
            continue;
        }
        // divisibility: fold an offending row into the pivot row and retry
        let mut offending = None;
        'scan: for i in t + 1..m {
            for j in t + 1..n {
                if !(&d[i][j] % &d[t][t]).is_zero() {
                    offending = Some(i);
                    break 'scan;
                }
            }
        }
        if let Some(i) = offending {
            for j in t..n {
                let s = d[i][j].clone();
                d[t][j] += s;
            }
            for j in 0..m {
                let s = u[i][j].clone();
                u[t][j] += s;
            }
            continue;
        }
        if d[t][t].is_negative() {
            for j in t..n {
                d[t][j] = -d[t][j].clone();
            }
            for j in 0..m {
                u[t][j] = -u[t][j].clone();
            }
        }
        t += 1;
    }
    BigSmith { u, d, v, rank: t }
}

/// Determinant by fraction-free Bareiss elimination.
pub(crate) fn det(a: &BigMat) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = a.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let val = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = val;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

pub(crate) fn rat_of(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

pub(crate) fn to_rat(m: &BigMat) -> RatMat {
    m.iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect()
}

/// Reduced row echelon form in place; returns pivot columns.
pub(crate) fn rref(m: &mut RatMat, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..cols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][c].recip();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != row && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let s = &f * &m[row][j];
                    m[i][j] -= s;
                }
            }
        }
        pivots.push(c);
        row += 1;
    }
    pivots
}

pub(crate) fn rank_rat(m: &RatMat, cols: usize) -> usize {
    let mut w = m.clone();
    rref(&mut w, cols).len()
}

pub(crate) fn rank_int(rows: &[Vec<i64>], cols: usize) -> usize {
    rank_rat(&to_rat(&to_big(rows)), cols)
}

/// Inverse of a square rational matrix, `None` when singular.
pub(crate) fn inverse_rat(a: &RatMat) -> Option<RatMat> {
    let n = a.len();
    let mut aug: RatMat = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            row
        })
        .collect();
    let piv = rref(&mut aug, 2 * n);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Integer inverse of a unimodular matrix.
pub(crate) fn inverse_unimodular(a: &BigMat) -> Result<BigMat> {
    let d = det(a);
    if d.abs() != BigInt::one() {
        return Err(Error::NotUnimodular(d.to_string()));
    }
    let inv = inverse_rat(&to_rat(a)).ok_or_else(|| Error::NotUnimodular("0".into()))?;
    Ok(inv
        .into_iter()
        .map(|r| r.into_iter().map(|x| x.to_integer()).collect())
        .collect())
}

/// Saturated integer basis of `{x in Z^n : a x = 0}`, rows returned in row-Hermite form.
pub(crate) fn integer_kernel(a: &BigMat, n: usize) -> BigMat {
    let m = a.len();
    if m == 0 {
        return identity(n);
    }
    let s = smith(a, m, n);
    let basis: BigMat = (s.rank..n)
        .map(|j| (0..n).map(|i| s.v[i][j].clone()).collect())
        .collect();
    hermite_rows(basis, n)
}

/// Row-style Hermite normal form of a full-row-rank integer matrix
/// (upper echelon, positive pivots, entries above pivots reduced).
pub(crate) fn hermite_rows(mut rows: BigMat, n: usize) -> BigMat {
    let mut r = 0;
    for c in 0..n {
        if r == rows.len() {
            break;
        }
        loop {
            let nz: Vec<usize> = (r..rows.len()).filter(|&i| !rows[i][c].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            let p = *nz
                .iter()
                .min_by(|&&i, &&j| rows[i][c].abs().cmp(&rows[j][c].abs()))
                .unwrap();
            rows.swap(r, p);
            if nz.len() == 1 {
                break;
            }
            for i in r + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = rows[i][c].div_floor(&rows[r][c]);
                for j in 0..n {
                    let s = &q * &rows[r][j];
                    rows[i][j] -= s;
                }
            }
        }
        if rows[r][c].is_zero() {
            continue;
        }
        if rows[r][c].is_negative() {
            for x in rows[r].iter_mut() {
                *x = -x.clone();
            }
        }
        for i in 0..r {
            let q = rows[i][c].div_floor(&rows[r][c]);
            if q.is_zero() {
                continue;
            }
            for j in 0..n {
                let s = &q * &rows[r][j];
                rows[i][j] -= s;
            }
        }
        r += 1;
    }
    rows
}

pub(crate) fn gcd_all(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Clear denominators and divide by the content.
pub(crate) fn primitive_from_rat(v: &[BigRational]) -> Vec<BigInt> {
    let l = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &l).to_integer()).collect();
    let g = gcd_all(&ints);
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

pub(crate) fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> BigMat {
        to_big(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let a = big(&[&[2, -1, 0], &[1, 3, 4], &[0, 5, -2]]);
        // 2(-6-20) + 1(-2-0) = -54
        assert_eq!(det(&a), BigInt::from(-54));
        assert_eq!(det(&big(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
    }

    #[test]
    fn kernel_is_saturated() {
        let k = integer_kernel(&big(&[&[2, 4]]), 2);
        assert_eq!(k, big(&[&[2, -1]]));
        let k = integer_kernel(&big(&[&[1, 1, 1]]), 3);
        assert_eq!(k.len(), 2);
        for row in &k {
            assert_eq!(dot(row, &[1.into(), 1.into(), 1.into()]), BigInt::zero());
        }
    }

    #[test]
    fn unimodular_inverse_roundtrip() {
        let a = big(&[&[1, 1], &[0, 1]]);
        let inv = inverse_unimodular(&a).unwrap();
        assert_eq!(inv, big(&[&[1, -1], &[0, 1]]));
        assert!(inverse_unimodular(&big(&[&[2, 0], &[0, 1]])).is_err());
    }
}
