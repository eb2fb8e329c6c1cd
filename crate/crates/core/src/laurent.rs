//! Laurent polynomials over `Q` with exponents in `M`, and their tensor powers.
//!
//! [`LaurentPoly`] carries `K[T] ⊇ K[X_σ]`; [`Tensor<2>`] carries
//! `K[X_σ] ⊗ K[X_σ]` (a term `(u, v)` is `χ^u ⊗ χ^v`) and [`Tensor<3>`] the
//! triple tensor used for coassociativity. Terms live in ordered maps with
//! zero coefficients pruned, so structural equality is equality of elements.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice::LatticeVector;
use crate::rational::{self, Rational};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<LatticeVector, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(LatticeVector::zero(rank))
    }

    /// The character `χ^m`.
    pub fn monomial(m: LatticeVector) -> Self {
        Self::term(m, Rational::one())
    }

    pub fn term(m: LatticeVector, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn add_term(&mut self, m: LatticeVector, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &LatticeVector) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LatticeVector, &Rational)> {
        self.terms.iter()
    }

    pub fn exponents(&self) -> impl Iterator<Item = &LatticeVector> {
        self.terms.keys()
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> LaurentPoly {
        let mut out = Self::zero();
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a * c);
        }
        out
    }

    /// `χ^a · χ^b = χ^{a+b}`, extended bilinearly.
    pub fn multiply(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> LaurentPoly {
        let rank = self.terms.keys().next().map_or(0, |m| m.rank());
        (0..e).fold(Self::one(rank), |acc, _| acc.multiply(self))
    }

    /// Substitutes `t_i` for the `i`-th coordinate character and sums exactly.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            total += c * monomial_value(m, point)?;
        }
        Ok(total)
    }
}

/// `∏ t_i^{m_i}` with `0^0 = 1`.
pub fn monomial_value(m: &LatticeVector, point: &[Rational]) -> Result<Rational> {
    let mut v = Rational::one();
    for (i, &e) in m.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let t = point.get(i).ok_or(Error::MissingValue(i))?;
        if t.is_zero() {
            if e < 0 {
                return Err(Error::DivisionByZero);
            }
            return Ok(Rational::zero());
        }
        v *= num_traits::pow::Pow::pow(t, e as i32);
    }
    Ok(v)
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if !c.is_one() {
                write!(f, "{}*", rational::format(c))?;
            }
            write!(f, "x^{m}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson<E> {
    exp: E,
    #[serde(with = "rational")]
    coeff: Rational,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in &self.terms {
            seq.serialize_element(&TermJson {
                exp: m,
                coeff: c.clone(),
            })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let mut p = LaurentPoly::zero();
        for t in Vec::<TermJson<LatticeVector>>::deserialize(d)? {
            p.add_term(t.exp, t.coeff);
        }
        Ok(p)
    }
}

/// Elements of `K[T]^{⊗K}`: a term `[u_1, ..., u_K]` is `χ^{u_1} ⊗ ... ⊗ χ^{u_K}`.
#[derive(Clone, PartialEq, Eq)]
pub struct Tensor<const K: usize> {
    terms: BTreeMap<[LatticeVector; K], Rational>,
}

pub type TensorPoly = Tensor<2>;

impl<const K: usize> Default for Tensor<K> {
    fn default() -> Self {
        Tensor {
            terms: BTreeMap::new(),
        }
    }
}

impl<const K: usize> Tensor<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one(rank: usize) -> Self {
        Self::pure(std::array::from_fn(|_| LatticeVector::zero(rank)), Rational::one())
    }

    pub fn pure(exps: [LatticeVector; K], c: Rational) -> Self {
        let mut t = Self::zero();
        t.add_term(exps, c);
        t
    }

    pub fn add_term(&mut self, exps: [LatticeVector; K], c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[LatticeVector; K], &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[LatticeVector; K]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (e, a) in &self.terms {
            out.add_term(e.clone(), a * c);
        }
        out
    }

    /// Componentwise exponent addition, extended bilinearly.
    pub fn tensor_multiply(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(std::array::from_fn(|i| &a[i] + &b[i]), x * y);
            }
        }
        out
    }

    pub fn pow(&self, e: u32, rank: usize) -> Self {
        (0..e).fold(Self::one(rank), |acc, _| acc.tensor_multiply(self))
    }

    /// Applies `f` to every term and sums the results.
    pub fn flat_map<const J: usize>(
        &self,
        mut f: impl FnMut(&[LatticeVector; K]) -> Result<Tensor<J>>,
    ) -> Result<Tensor<J>> {
        let mut out = Tensor::<J>::zero();
        for (e, c) in &self.terms {
            for (img, d) in f(e)?.terms {
                out.add_term(img, c * d);
            }
        }
        Ok(out)
    }
}

impl Tensor<2> {
    /// `f ⊗ g`.
    pub fn outer(f: &LaurentPoly, g: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (a, x) in f.terms() {
            for (b, y) in g.terms() {
                out.add_term([a.clone(), b.clone()], x * y);
            }
        }
        out
    }
}

impl<const K: usize> fmt::Debug for Tensor<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<const K: usize> fmt::Display for Tensor<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if !c.is_one() {
                write!(f, "{}*", rational::format(c))?;
            }
            for (j, m) in e.iter().enumerate() {
                if j > 0 {
                    write!(f, "⊗")?;
                }
                write!(f, "x^{m}")?;
            }
        }
        Ok(())
    }
}

impl<const K: usize> Serialize for Tensor<K> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&TermJson {
                exp: e.as_slice(),
                coeff: c.clone(),
            })?;
        }
        seq.end()
    }
}
