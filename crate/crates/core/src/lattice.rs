//! Integer lattices `M` and `N = Hom(M, Z)`.
//!
//! Both lattices are identified with `Z^n`; the pairing `<m, v>` is the
//! coordinate dot product. It is symmetric in the coordinate representation,
//! so `<e, p>` and `<p, e>` denote the same number throughout the crate.
//!
//! Vectors and matrices are stored as `i64`. Elimination (Smith form,
//! determinants, inverses) runs on big integers and converts back, failing
//! with [`Error::Overflow`] rather than wrapping.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Deref, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg;

/// A point of `M` or `N` in standard coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticeVector(pub Vec<i64>);

impl LatticeVector {
    pub fn new(coords: impl Into<Vec<i64>>) -> Self {
        LatticeVector(coords.into())
    }

    pub fn zero(rank: usize) -> Self {
        LatticeVector(vec![0; rank])
    }

    /// The `i`-th standard basis vector.
    pub fn unit(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        LatticeVector(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// `<self, other>`.
    pub fn pair(&self, other: &LatticeVector) -> Result<i64> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: other.rank(),
            });
        }
        Ok(self.dot(other))
    }

    /// Unchecked pairing for callers that already validated ranks.
    pub(crate) fn dot(&self, other: &LatticeVector) -> i64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn content(&self) -> i64 {
        self.0.iter().fold(0i64, |g, &x| g.gcd(&x))
    }

    /// The primitive lattice vector on the ray through `self`.
    pub fn primitive_part(&self) -> Result<LatticeVector> {
        let g = self.content();
        if g == 0 {
            return Err(Error::ZeroVector);
        }
        Ok(LatticeVector(self.0.iter().map(|x| x / g).collect()))
    }

    pub fn scale(&self, c: i64) -> LatticeVector {
        LatticeVector(self.0.iter().map(|x| x * c).collect())
    }

    pub(crate) fn to_big(&self) -> Vec<BigInt> {
        self.0.iter().map(|&x| BigInt::from(x)).collect()
    }

    pub(crate) fn from_big(v: &[BigInt]) -> Result<Self> {
        Ok(LatticeVector(linalg::vec_to_i64(v)?))
    }
}

impl Deref for LatticeVector {
    type Target = [i64];
    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<i64>> for LatticeVector {
    fn from(v: Vec<i64>) -> Self {
        LatticeVector(v)
    }
}

impl<const N: usize> From<[i64; N]> for LatticeVector {
    fn from(v: [i64; N]) -> Self {
        LatticeVector(v.to_vec())
    }
}

impl Add for &LatticeVector {
    type Output = LatticeVector;
    fn add(self, rhs: &LatticeVector) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &LatticeVector {
    type Output = LatticeVector;
    fn sub(self, rhs: &LatticeVector) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        LatticeVector(self.0.iter().map(|a| -a).collect())
    }
}

/// Canonical ordering of vector lists: descending lexicographic, so the
/// standard basis comes out as `e_1, e_2, ...`.
pub fn canonical_cmp(a: &LatticeVector, b: &LatticeVector) -> Ordering {
    b.0.cmp(&a.0)
}

pub(crate) fn canonical_sort(v: &mut Vec<LatticeVector>) {
    v.sort_by(canonical_cmp);
    v.dedup();
}

/// Dense integer matrix, row-major. Acts on column vectors.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

/// A lattice endomorphism, typically unimodular.
pub type LatticeMap = IntMatrix;

impl IntMatrix {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::RankMismatch {
                expected: cols,
                got: bad.len(),
            });
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Matrix with the given vectors as columns.
    pub fn from_columns(n: usize, cols: &[LatticeVector]) -> Self {
        let mut m = IntMatrix::zeros(n, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for i in 0..n {
                m[(i, j)] = c[i];
            }
        }
        m
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> LatticeVector {
        LatticeVector((0..self.rows).map(|i| self[(i, j)]).collect())
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn apply(&self, v: &LatticeVector) -> Result<LatticeVector> {
        if v.rank() != self.cols {
            return Err(Error::RankMismatch {
                expected: self.cols,
                got: v.rank(),
            });
        }
        Ok(LatticeVector(
            (0..self.rows)
                .map(|i| self.row(i).iter().zip(v.iter()).map(|(a, b)| a * b).sum())
                .collect(),
        ))
    }

    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::RankMismatch {
                expected: self.cols,
                got: rhs.rows,
            });
        }
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                out[(i, j)] = (0..self.cols).map(|k| self[(i, k)] * rhs[(k, j)]).sum();
            }
        }
        Ok(out)
    }

    pub fn determinant(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::RankMismatch {
                expected: self.rows,
                got: self.cols,
            });
        }
        Ok(linalg::det(&linalg::to_big(&self.to_rows())))
    }

    pub fn is_unimodular(&self) -> bool {
        self.determinant().is_ok_and(|d| d.abs().is_one())
    }

    /// Errors unless the matrix is square with determinant `+1` or `-1`.
    pub fn require_unimodular(&self) -> Result<()> {
        let d = self.determinant()?;
        if d.abs().is_one() {
            Ok(())
        } else {
            Err(Error::NotUnimodular(d.to_string()))
        }
    }

    pub fn inverse(&self) -> Result<IntMatrix> {
        let inv = linalg::inverse_unimodular(&linalg::to_big(&self.to_rows()))?;
        IntMatrix::from_rows(linalg::mat_to_i64(&inv)?)
    }

    pub fn rank(&self) -> usize {
        linalg::rank_int(&self.to_rows(), self.cols)
    }

    fn from_big(m: &linalg::BigMat, cols: usize) -> Result<Self> {
        let rows = linalg::mat_to_i64(m)?;
        if rows.is_empty() {
            return Ok(IntMatrix::zeros(0, cols));
        }
        IntMatrix::from_rows(rows)
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_rows())
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<i64>>::deserialize(d)?;
        IntMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

/// Result of [`smith_normal_form`]: `u * mat * v = d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Nonzero diagonal entries `d_1 | d_2 | ...`.
    pub fn invariant_factors(&self) -> Vec<i64> {
        (0..self.d.nrows().min(self.d.ncols()))
            .map(|i| self.d[(i, i)])
            .take_while(|&x| x != 0)
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

pub fn smith_normal_form(mat: &IntMatrix) -> Result<SmithForm> {
    let (m, n) = (mat.nrows(), mat.ncols());
    let s = linalg::smith(&linalg::to_big(&mat.to_rows()), m, n);
    Ok(SmithForm {
        u: IntMatrix::from_big(&s.u, m)?,
        d: IntMatrix::from_big(&s.d, n)?,
        v: IntMatrix::from_big(&s.v, n)?,
    })
}

/// A basis `p_1..p_k, p'_{k+1}..p'_n` of `N` extending given vectors, together
/// with the dual basis `q_1..q_n` of `M`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdaptedBasis {
    pub primal: Vec<LatticeVector>,
    pub dual: Vec<LatticeVector>,
}

impl AdaptedBasis {
    pub fn rank(&self) -> usize {
        self.primal.len()
    }

    /// Coordinates of `m` in the dual basis: `<m, primal_i>`.
    pub fn dual_coords(&self, m: &LatticeVector) -> Vec<i64> {
        self.primal.iter().map(|p| m.dot(p)).collect()
    }
}

/// Extends `vectors` (part of a basis of `N`) to a basis and computes the dual basis.
///
/// The completion is deterministic: column operations bring the input to
/// `[I | 0]`, the remaining rows of the inverse transform complete it, and those
/// rows are put in row-Hermite form.
pub fn extend_to_basis(n: usize, vectors: &[LatticeVector]) -> Result<AdaptedBasis> {
    let k = vectors.len();
    if let Some(v) = vectors.iter().find(|v| v.rank() != n) {
        return Err(Error::RankMismatch {
            expected: n,
            got: v.rank(),
        });
    }
    if k > n {
        return Err(Error::Dependent);
    }
    let p: linalg::BigMat = vectors.iter().map(LatticeVector::to_big).collect();
    let completion = if k == 0 {
        linalg::identity(n)
    } else {
        let s = linalg::smith(&p, k, n);
        if s.rank < k {
            return Err(Error::Dependent);
        }
        let factors: Vec<BigInt> = (0..k).map(|i| s.d[i][i].clone()).collect();
        if factors.iter().any(|d| !d.is_one()) {
            return Err(Error::NotExtendable(
                factors
                    .iter()
                    .map(linalg::to_i64)
                    .collect::<Result<Vec<_>>>()?,
            ));
        }
        // u p v = [I | 0]  =>  p = u^{-1} [I | 0] v^{-1}; the last n-k rows of
        // v^{-1} complete the rows of p to a basis.
        let vinv = linalg::inverse_unimodular(&s.v)?;
        linalg::hermite_rows(vinv[k..].to_vec(), n)
    };
    let mut w = p.clone();
    w.extend(completion);
    let winv = linalg::inverse_unimodular(&w)?;
    // q_i . w_j = delta_ij  =>  Q = (W^{-1})^T
    let dual: Vec<LatticeVector> = (0..n)
        .map(|i| LatticeVector::from_big(&(0..n).map(|r| winv[r][i].clone()).collect::<Vec<_>>()))
        .collect::<Result<_>>()?;
    let primal = w
        .iter()
        .map(|r| LatticeVector::from_big(r))
        .collect::<Result<_>>()?;
    Ok(AdaptedBasis { primal, dual })
}

/// Whether the vectors are part of a basis of `Z^n`.
pub fn is_extendable(n: usize, vectors: &[LatticeVector]) -> bool {
    extend_to_basis(n, vectors).is_ok()
}

/// Saturated integer basis of `{x : <row, x> = 0 for all rows}`.
pub fn integer_kernel(n: usize, rows: &[LatticeVector]) -> Result<Vec<LatticeVector>> {
    let a: linalg::BigMat = rows.iter().map(LatticeVector::to_big).collect();
    linalg::integer_kernel(&a, n)
        .iter()
        .map(|r| LatticeVector::from_big(r))
        .collect()
}

/// The integer matrix `A` with `A s_i = t_i`, if it exists.
///
/// `sources` must be `n` linearly independent vectors; `None` means the
/// unique rational solution is not integral.
pub fn integral_map(sources: &[LatticeVector], images: &[LatticeVector]) -> Result<Option<IntMatrix>> {
    let n = sources.len();
    if images.len() != n || sources.iter().chain(images).any(|v| v.rank() != n) {
        return Err(Error::RankMismatch {
            expected: n,
            got: images.len(),
        });
    }
    // rows of S^T are the sources; A S = T  <=>  S^T A^T = T^T
    let st: linalg::RatMat = sources.iter().map(|v| v.iter().map(|&x| linalg::rat_of(x)).collect()).collect();
    let inv = linalg::inverse_rat(&st).ok_or(Error::Dependent)?;
    let mut rows = vec![vec![0i64; n]; n];
    for (i, row) in rows.iter_mut().enumerate() {
        // A^T = (S^T)^{-1} T^T, so A[i][j] = Σ_l inv[j][l] * t_l[i]
        for (j, entry) in row.iter_mut().enumerate() {
            let x: num_rational::BigRational = (0..n)
                .map(|l| &inv[j][l] * linalg::rat_of(images[l][i]))
                .sum();
            if !x.is_integer() {
                return Ok(None);
            }
            *entry = linalg::to_i64(x.numer())?;
        }
    }
    Ok(Some(IntMatrix::from_rows(rows)?))
}
