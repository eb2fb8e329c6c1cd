//! Root monoids `X_{σ,E}`: the affine toric variety `X_σ` with the monoid
//! structure whose comultiplication is
//! `Δ(χ^u) = χ^u ⊗ χ^u ∏_r (1 ⊗ χ^{e_1^{(r)}} + χ^{e_2^{(r)}} ⊗ 1)^{<p_r, u>}`.

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cones::{Cone, ConeSpec, Face, HilbertBasis, Side};
use crate::demazure::{make_compatible_collection, CollectionSpec, CompatibleCollection};
use crate::error::{Error, Result};
use crate::laurent::{monomial_value, LaurentPoly, Tensor, TensorPoly};
use crate::lattice::{canonical_sort, extend_to_basis, smith_normal_form, AdaptedBasis, IntMatrix, LatticeVector};
use crate::rational::Rational;

/// Default total degree used by [`RootMonoid::verify_bialgebra`].
pub const DEFAULT_VERIFY_DEGREE: usize = 3;

#[derive(Clone, Debug, Serialize)]
pub struct RootMonoid {
    sigma: Cone,
    rays: Vec<LatticeVector>,
    tau: Face,
    collection: CompatibleCollection,
    basis: AdaptedBasis,
    hilbert: HilbertBasis,
    dual_sigma: Cone,
}

/// JSON bundle `{"cone": {...}, "collection": {...}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidSpec {
    pub cone: ConeSpec,
    pub collection: CollectionSpec,
}

impl MonoidSpec {
    pub fn build(&self) -> Result<RootMonoid> {
        let sigma = self.cone.clone().into_cone(Side::N)?;
        let c = self.collection.resolve(&sigma)?;
        RootMonoid::build(sigma, c)
    }

    /// Like [`MonoidSpec::build`] but the roots are taken as given.
    pub fn build_unchecked(&self) -> Result<RootMonoid> {
        let sigma = self.cone.clone().into_cone(Side::N)?;
        let c = self.collection.resolve_unchecked(&sigma)?;
        RootMonoid::assemble_unchecked(sigma, c)
    }
}

impl RootMonoid {
    /// Validates every condition on `σ`, `τ` and `E` and computes the adapted data.
    pub fn build(sigma: Cone, collection: CompatibleCollection) -> Result<Self> {
        if !sigma.is_strongly_convex() {
            return Err(Error::NotStronglyConvex);
        }
        let e1 = collection.e1.iter().map(|r| r.e.clone()).collect();
        let e2 = collection.e2.iter().map(|r| r.e.clone()).collect();
        let collection = make_compatible_collection(&sigma, &collection.face, e1, e2)?;
        Self::assemble(sigma, collection)
    }

    /// Skips the Demazure root and compatibility checks on `E`.
    ///
    /// The result may violate the bialgebra axioms; it exists so that
    /// [`RootMonoid::verify_bialgebra`] can be exercised on broken input.
    pub fn assemble_unchecked(sigma: Cone, collection: CompatibleCollection) -> Result<Self> {
        if !sigma.is_strongly_convex() {
            return Err(Error::NotStronglyConvex);
        }
        if !sigma.is_regular_face(&collection.face) {
            return Err(Error::FaceNotRegular);
        }
        Self::assemble(sigma, collection)
    }

    fn assemble(sigma: Cone, collection: CompatibleCollection) -> Result<Self> {
        if sigma.side() != Side::N {
            return Err(Error::InvalidCone("σ must live in N".into()));
        }
        let n = sigma.rank();
        let rays = sigma.extreme_rays()?;
        let basis = extend_to_basis(n, &collection.face_rays)?;
        let k = collection.k();
        let mut cols: Vec<LatticeVector> = collection.e1.iter().map(|r| -&r.e).collect();
        cols.extend(basis.dual[k..].iter().cloned());
        let m = IntMatrix::from_columns(n, &cols);
        if !m.is_unimodular() {
            return Err(Error::NotUnimodular(format!(
                "-e_1 and q_{{k+1..n}} span a sublattice of index {}",
                m.determinant()?
            )));
        }
        let dual_sigma = sigma.dual_cone()?;
        let hilbert = dual_sigma.hilbert_basis_auto()?;
        Ok(RootMonoid {
            tau: collection.face.clone(),
            sigma,
            rays,
            collection,
            basis,
            hilbert,
            dual_sigma,
        })
    }

    pub fn rank(&self) -> usize {
        self.sigma.rank()
    }

    pub fn k(&self) -> usize {
        self.collection.k()
    }

    pub fn sigma(&self) -> &Cone {
        &self.sigma
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn tau(&self) -> &Face {
        &self.tau
    }

    pub fn collection(&self) -> &CompatibleCollection {
        &self.collection
    }

    pub fn basis(&self) -> &AdaptedBasis {
        &self.basis
    }

    pub fn hilbert_basis(&self) -> &[LatticeVector] {
        &self.hilbert.elements
    }

    pub fn dual_sigma(&self) -> &Cone {
        &self.dual_sigma
    }

    pub fn in_semigroup(&self, u: &LatticeVector) -> bool {
        u.rank() == self.rank() && self.rays.iter().all(|p| u.dot(p) >= 0)
    }

    fn require_semigroup(&self, u: &LatticeVector) -> Result<()> {
        if u.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: u.rank(),
            });
        }
        if !self.in_semigroup(u) {
            return Err(Error::OutsideSemigroup(u.0.clone()));
        }
        Ok(())
    }

    /// Elements of `S_σ` with all coordinates in `[-bound, bound]`, canonically sorted.
    pub fn boxed_semigroup(&self, bound: i64) -> Vec<LatticeVector> {
        let mut out: Vec<LatticeVector> = (0..self.rank())
            .map(|_| -bound..=bound)
            .multi_cartesian_product()
            .map(LatticeVector::new)
            .filter(|u| self.in_semigroup(u))
            .collect();
        canonical_sort(&mut out);
        out
    }

    /// `a_r = <p_r, u>`.
    pub fn face_coords(&self, u: &LatticeVector) -> Vec<i64> {
        self.collection.face_rays.iter().map(|p| p.dot(u)).collect()
    }

    /// Coordinates `(a, c)` with `u = Σ a_r (-e_1^{(r)}) + Σ c_j q_{k+j}`.
    pub fn adapted_coords(&self, u: &LatticeVector) -> (Vec<i64>, Vec<i64>) {
        let a = self.face_coords(u);
        let shifted = self
            .collection
            .e1
            .iter()
            .zip(&a)
            .fold(u.clone(), |acc, (r, &ar)| &acc + &r.e.scale(ar));
        let c = self.basis.primal[self.k()..].iter().map(|p| shifted.dot(p)).collect();
        (a, c)
    }

    /// `C[r][j] = <χ_r, p'_{k+j}>`, so that `χ_r = Σ_j C[r][j] q_{k+j}`.
    pub fn char_matrix(&self) -> IntMatrix {
        let k = self.k();
        let n = self.rank();
        let mut m = IntMatrix::zeros(k, n - k);
        for (r, chi) in self.collection.chars.iter().enumerate() {
            for (j, p) in self.basis.primal[k..].iter().enumerate() {
                m[(r, j)] = chi.dot(p);
            }
        }
        m
    }

    /// `Δ(χ^u)`, fully expanded.
    pub fn comultiply(&self, u: &LatticeVector) -> Result<TensorPoly> {
        self.require_semigroup(u)?;
        Ok(self.expand(u))
    }

    /// Closed form of `Δ(χ^u)`: the sum over `0 <= j_r <= a_r` of
    /// `∏ binom(a_r, j_r) χ^{u + Σ j_r e_2} ⊗ χ^{u + Σ (a_r - j_r) e_1}`.
    /// Negative `a_r` contribute an empty range.
    fn expand(&self, u: &LatticeVector) -> TensorPoly {
        let a = self.face_coords(u);
        let mut out = TensorPoly::zero();
        if a.iter().any(|&x| x < 0) {
            return out;
        }
        let choices = a.iter().map(|&ar| 0..=ar).multi_cartesian_product();
        let choices: Box<dyn Iterator<Item = Vec<i64>>> = if a.is_empty() {
            Box::new(std::iter::once(vec![]))
        } else {
            Box::new(choices)
        };
        for j in choices {
            let mut coeff = BigInt::one();
            let mut left = u.clone();
            let mut right = u.clone();
            for (r, (&jr, &ar)) in j.iter().zip(&a).enumerate() {
                coeff *= num_integer::binomial(BigInt::from(ar), BigInt::from(jr));
                left = &left + &self.collection.e2[r].e.scale(jr);
                right = &right + &self.collection.e1[r].e.scale(ar - jr);
            }
            out.add_term([left, right], Rational::from_integer(coeff));
        }
        out
    }

    fn counit_unchecked(&self, u: &LatticeVector) -> Rational {
        if self.face_coords(u).iter().all(|&a| a == 0) {
            Rational::one()
        } else {
            Rational::zero()
        }
    }

    /// `ε(χ^u)`: the value at the identity `(α, t) = (0, 1)`.
    pub fn counit(&self, u: &LatticeVector) -> Result<Rational> {
        self.require_semigroup(u)?;
        Ok(self.counit_unchecked(u))
    }

    /// Sums of at most `degree` Hilbert basis elements, including `0`.
    pub fn verification_elements(&self, degree: usize) -> Vec<LatticeVector> {
        let h = &self.hilbert.elements;
        let mut out = vec![LatticeVector::zero(self.rank())];
        for d in 1..=degree {
            for combo in h.iter().combinations_with_replacement(d) {
                out.push(combo.into_iter().fold(LatticeVector::zero(self.rank()), |acc, x| &acc + x));
            }
        }
        canonical_sort(&mut out);
        out
    }

    /// Checks closure, coassociativity, counit and multiplicativity of `Δ`.
    ///
    /// `Δ` and `ε` are algebra maps, so agreement on generators extends to all
    /// of `K[X_σ]`; sums of up to `degree` generators are checked in addition.
    pub fn verify_bialgebra(&self, degree: usize) -> BialgebraReport {
        let elements = self.verification_elements(degree);
        let mut closure = AxiomCheck::default();
        let mut coassoc = AxiomCheck::default();
        let mut counit = AxiomCheck::default();
        let mut multiplicative = AxiomCheck::default();

        for u in &elements {
            let d = self.expand(u);
            let outside: Vec<LatticeVector> = d
                .terms()
                .flat_map(|(e, _)| e.iter())
                .filter(|m| !self.in_semigroup(m))
                .cloned()
                .collect();
            if let Some(w) = outside.first() {
                closure.fail(u, format!("Δ(χ^{u}) has exponent {w} outside S_σ"), vec![w.clone()]);
                coassoc.skipped += 1;
                counit.skipped += 1;
                continue;
            }
            closure.ok();

            let left: Tensor<3> = d
                .flat_map(|[a, b]| {
                    Ok(self
                        .expand(a)
                        .terms()
                        .map(|([x, y], c)| Tensor::pure([x.clone(), y.clone(), b.clone()], c.clone()))
                        .fold(Tensor::zero(), |acc, t| acc.add(&t)))
                })
                .expect("infallible");
            let right: Tensor<3> = d
                .flat_map(|[a, b]| {
                    Ok(self
                        .expand(b)
                        .terms()
                        .map(|([x, y], c)| Tensor::pure([a.clone(), x.clone(), y.clone()], c.clone()))
                        .fold(Tensor::zero(), |acc, t| acc.add(&t)))
                })
                .expect("infallible");
            if left == right {
                coassoc.ok();
            } else {
                let diff = left.add(&right.scale(&-Rational::one()));
                let w = diff.terms().next().map(|(e, _)| e.to_vec()).unwrap_or_default();
                coassoc.fail(u, format!("(Δ⊗id)Δ and (id⊗Δ)Δ differ on χ^{u}"), w);
            }

            let mut eps_left = LaurentPoly::zero();
            let mut eps_right = LaurentPoly::zero();
            for ([a, b], c) in d.terms() {
                eps_left.add_term(b.clone(), c * self.counit_unchecked(a));
                eps_right.add_term(a.clone(), c * self.counit_unchecked(b));
            }
            let target = LaurentPoly::monomial(u.clone());
            if eps_left == target && eps_right == target {
                counit.ok();
            } else {
                let bad = if eps_left != target { eps_left } else { eps_right };
                counit.fail(
                    u,
                    format!("counit applied to Δ(χ^{u}) gives {bad}"),
                    bad.exponents().cloned().collect(),
                );
            }
        }

        let h = &self.hilbert.elements;
        for (x, y) in h.iter().tuple_combinations().chain(h.iter().map(|x| (x, x))) {
            let lhs = self.expand(&(x + y));
            let rhs = self.expand(x).tensor_multiply(&self.expand(y));
            if lhs == rhs {
                multiplicative.ok();
            } else {
                multiplicative.fail(
                    &(x + y),
                    format!("Δ(χ^{x}·χ^{y}) differs from Δ(χ^{x})·Δ(χ^{y})"),
                    vec![x.clone(), y.clone()],
                );
            }
        }

        BialgebraReport {
            closure,
            coassoc,
            counit,
            multiplicative,
            degree,
            elements: elements.len(),
            scope: format!(
                "checked on 0, the Hilbert basis of S_σ and sums of up to {degree} of its elements; \
                 Δ and ε are algebra maps, so generator-level identities extend to K[X_σ]"
            ),
        }
    }

    pub fn unit_group(&self) -> Result<UnitGroupData> {
        let k = self.k();
        let n = self.rank();
        let char_matrix = self.char_matrix();
        let char_rank = if k == 0 { 0 } else { char_matrix.rank() };
        let torsion = if k == 0 || n == k {
            vec![]
        } else {
            smith_normal_form(&char_matrix)?
                .invariant_factors()
                .into_iter()
                .filter(|&d| d > 1)
                .collect()
        };
        Ok(UnitGroupData {
            k,
            torus_rank: n - k,
            chars: self.collection.chars.clone(),
            char_matrix,
            quotient_torus_rank: char_rank,
            center: CenterData {
                dimension: n - k - char_rank,
                torsion,
            },
            active: char_rank == k,
        })
    }

    pub fn identity_point(&self) -> MonoidPoint {
        MonoidPoint::Primitive {
            alpha: vec![Rational::zero(); self.k()],
            t: vec![Rational::one(); self.rank() - self.k()],
        }
    }

    pub fn validate_point(&self, x: &MonoidPoint) -> Result<()> {
        let n = self.rank();
        let k = self.k();
        match x {
            MonoidPoint::Primitive { alpha, t } => {
                if alpha.len() != k || t.len() != n - k {
                    return Err(Error::Input(format!(
                        "primitive point needs {k} alpha and {} t coordinates",
                        n - k
                    )));
                }
                if t.iter().any(Zero::is_zero) {
                    return Err(Error::Input("torus coordinates must be nonzero".into()));
                }
            }
            MonoidPoint::Distinguished { v, t } => {
                if v.rank() != n || t.len() != n {
                    return Err(Error::Input(format!("distinguished point needs rank {n} data")));
                }
                if !self.sigma.contains(v)? {
                    return Err(Error::Input(format!("{v} is not in σ")));
                }
                if t.iter().any(Zero::is_zero) {
                    return Err(Error::Input("torus coordinates must be nonzero".into()));
                }
            }
            MonoidPoint::Product(a, b) => {
                self.validate_point(a)?;
                self.validate_point(b)?;
            }
        }
        Ok(())
    }

    /// The value of the regular function `χ^u` at `x`.
    pub fn point_eval(&self, x: &MonoidPoint, u: &LatticeVector) -> Result<Rational> {
        self.require_semigroup(u)?;
        self.validate_point(x)?;
        self.eval(x, u)
    }

    fn eval(&self, x: &MonoidPoint, u: &LatticeVector) -> Result<Rational> {
        match x {
            MonoidPoint::Primitive { alpha, t } => {
                let (a, c) = self.adapted_coords(u);
                let exps = LatticeVector::new([a, c].concat());
                let point: Vec<Rational> = alpha.iter().chain(t).cloned().collect();
                monomial_value(&exps, &point)
            }
            MonoidPoint::Distinguished { v, t } => {
                if u.dot(v) == 0 {
                    monomial_value(u, t)
                } else {
                    Ok(Rational::zero())
                }
            }
            MonoidPoint::Product(a, b) => {
                let mut total = Rational::zero();
                for ([l, r], c) in self.expand(u).terms() {
                    total += c * self.eval(a, l)? * self.eval(b, r)?;
                }
                Ok(total)
            }
        }
    }

    /// `χ̄(t)`: the values `χ_r(t) = ∏_j t_j^{C[r][j]}`.
    pub fn char_values(&self, t: &[Rational]) -> Result<Vec<Rational>> {
        let cm = self.char_matrix();
        (0..self.k())
            .map(|r| monomial_value(&LatticeVector::new(cm.row(r).to_vec()), t))
            .collect()
    }

    /// The product `x · y`.
    ///
    /// Two invertible points multiply by `(α, t)(α', t') = (α + χ̄(t) α', t t')`;
    /// the result is checked against the evaluation of `Product(x, y)` on the
    /// Hilbert basis. Any other pair stays a formal product.
    pub fn point_multiply(&self, x: &MonoidPoint, y: &MonoidPoint) -> Result<MonoidPoint> {
        self.validate_point(x)?;
        self.validate_point(y)?;
        let product = MonoidPoint::Product(Box::new(x.clone()), Box::new(y.clone()));
        let (
            MonoidPoint::Primitive { alpha: a1, t: t1 },
            MonoidPoint::Primitive { alpha: a2, t: t2 },
        ) = (x, y)
        else {
            return Ok(product);
        };
        let chi = self.char_values(t1)?;
        let alpha = a1.iter().zip(a2).zip(&chi).map(|((p, q), c)| p + c * q).collect();
        let t = t1.iter().zip(t2).map(|(p, q)| p * q).collect();
        let normal = MonoidPoint::Primitive { alpha, t };
        for h in &self.hilbert.elements {
            let lhs = self.eval(&normal, h)?;
            let rhs = self.eval(&product, h)?;
            if lhs != rhs {
                return Err(Error::Internal(format!(
                    "semidirect product disagrees with Δ on χ^{h}: {lhs} vs {rhs}"
                )));
            }
        }
        Ok(normal)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub element: LatticeVector,
    pub detail: String,
    pub witness: Vec<LatticeVector>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub pass: bool,
    pub checked: usize,
    pub skipped: usize,
    pub counterexample: Option<Counterexample>,
}

impl Default for AxiomCheck {
    fn default() -> Self {
        AxiomCheck {
            pass: true,
            checked: 0,
            skipped: 0,
            counterexample: None,
        }
    }
}

impl AxiomCheck {
    fn ok(&mut self) {
        self.checked += 1;
    }

    fn fail(&mut self, u: &LatticeVector, detail: String, witness: Vec<LatticeVector>) {
        self.checked += 1;
        self.pass = false;
        if self.counterexample.is_none() {
            self.counterexample = Some(Counterexample {
                element: u.clone(),
                detail,
                witness,
            });
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BialgebraReport {
    pub closure: AxiomCheck,
    pub coassoc: AxiomCheck,
    pub counit: AxiomCheck,
    pub multiplicative: AxiomCheck,
    pub degree: usize,
    pub elements: usize,
    pub scope: String,
}

impl BialgebraReport {
    pub fn all_pass(&self) -> bool {
        self.closure.pass
            && self.coassoc.pass
            && self.counit.pass
            && self.multiplicative.pass
            && self.coassoc.skipped == 0
    }
}

/// `Z(G_χ̄) = ⋂ Ker χ_r`: a torus of the given dimension times finite cyclic factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CenterData {
    pub dimension: usize,
    pub torsion: Vec<i64>,
}

impl CenterData {
    pub fn is_trivial(&self) -> bool {
        self.dimension == 0 && self.torsion.is_empty()
    }

    /// Order of the component group.
    pub fn torsion_order(&self) -> i64 {
        self.torsion.iter().product()
    }
}

/// The unit group `G_χ̄ = G_a^k ⋊ T` of a root monoid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnitGroupData {
    pub k: usize,
    pub torus_rank: usize,
    pub chars: Vec<LatticeVector>,
    /// Row `r` is `χ_r` in the coordinates `q_{k+1..n}`.
    pub char_matrix: IntMatrix,
    /// Rank of `T' = T / ⋂ Ker χ_r`.
    pub quotient_torus_rank: usize,
    pub center: CenterData,
    pub active: bool,
}

/// A point of `X_{σ,E}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MonoidPoint {
    /// `(α, t) ∈ G_a^k ⋊ T`.
    Primitive {
        #[serde(with = "crate::rational::vec")]
        alpha: Vec<Rational>,
        #[serde(with = "crate::rational::vec")]
        t: Vec<Rational>,
    },
    /// `χ^u ↦ t^u` on `u ∈ v^⊥`, zero elsewhere, for `v ∈ σ`.
    Distinguished {
        v: LatticeVector,
        #[serde(with = "crate::rational::vec")]
        t: Vec<Rational>,
    },
    Product(Box<MonoidPoint>, Box<MonoidPoint>),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::demazure::CompatibleCollection;
    use crate::rational::{rat, ratio};

    fn v(c: &[i64]) -> LatticeVector {
        LatticeVector::new(c.to_vec())
    }

    fn orthant(n: usize) -> Cone {
        Cone::new(n, Side::N, (0..n).map(|i| LatticeVector::unit(n, i)).collect()).unwrap()
    }

    fn monoid(n: usize, e1: &[i64], e2: &[i64]) -> RootMonoid {
        let s = orthant(n);
        let tau = s.face(&[0]).unwrap();
        let c = make_compatible_collection(&s, &tau, vec![v(e1)], vec![v(e2)]).unwrap();
        RootMonoid::build(s, c).unwrap()
    }

    fn re1() -> RootMonoid {
        monoid(2, &[-1, 0], &[-1, 1])
    }

    fn re2() -> RootMonoid {
        monoid(3, &[-1, 0, 0], &[-1, 1, 1])
    }

    fn prim(alpha: &[Rational], t: &[Rational]) -> MonoidPoint {
        MonoidPoint::Primitive {
            alpha: alpha.to_vec(),
            t: t.to_vec(),
        }
    }

    #[test]
    fn build_examples() {
        let x = re1();
        assert_eq!((x.k(), x.rank()), (1, 2));
        let x = re2();
        assert_eq!((x.k(), x.rank()), (1, 3));
        assert_eq!(x.hilbert_basis().len(), 3);

        let s = Cone::in_n(2, &[&[1, 1], &[1, -1]]).unwrap();
        let tau = s.face(&[0, 1]).unwrap();
        let c = CompatibleCollection::new_unchecked(&s, &tau, vec![v(&[0, 0]); 2], vec![v(&[0, 0]); 2]).unwrap();
        assert_eq!(RootMonoid::build(s.clone(), c.clone()).unwrap_err(), Error::FaceNotRegular);
        assert_eq!(RootMonoid::assemble_unchecked(s, c).unwrap_err(), Error::FaceNotRegular);

        let spec: MonoidSpec = serde_json::from_str(
            r#"{"cone": {"rank": 2, "rays": [[1, 0], [-1, 0]]},
                "collection": {"face": {"ray_indices": []}, "e1": [], "e2": []}}"#,
        )
        .unwrap();
        assert_eq!(spec.build().unwrap_err(), Error::NotStronglyConvex);
    }

    #[test]
    fn comultiplication_examples() {
        let x = re1();
        let mut expected = TensorPoly::pure([v(&[0, 1]), v(&[1, 0])], rat(1));
        expected.add_term([v(&[1, 0]), v(&[0, 0])], rat(1));
        assert_eq!(x.comultiply(&v(&[1, 0])).unwrap(), expected);
        assert_eq!(
            x.comultiply(&v(&[0, 1])).unwrap(),
            TensorPoly::pure([v(&[0, 1]), v(&[0, 1])], rat(1))
        );
        assert_eq!(x.comultiply(&v(&[0, 0])).unwrap(), TensorPoly::one(2));
        assert_eq!(x.comultiply(&v(&[-1, 0])), Err(Error::OutsideSemigroup(vec![-1, 0])));
    }

    #[test]
    fn counit_examples() {
        let x = re1();
        assert_eq!(x.counit(&v(&[0, 1])).unwrap(), rat(1));
        assert_eq!(x.counit(&v(&[1, 0])).unwrap(), rat(0));
        assert_eq!(x.counit(&v(&[0, 0])).unwrap(), rat(1));
    }

    #[test]
    fn bialgebra_passes_on_valid_monoids() {
        for x in [re1(), re2()] {
            let rep = x.verify_bialgebra(DEFAULT_VERIFY_DEGREE);
            assert!(rep.all_pass(), "{rep:?}");
            assert!(rep.closure.checked > 1);
        }
    }

    #[test]
    fn tampered_collection_fails_closure() {
        let s = orthant(3);
        let tau = s.face(&[0]).unwrap();
        let c = CompatibleCollection::new_unchecked(&s, &tau, vec![v(&[-1, 0, 0])], vec![v(&[-1, -1, 0])]).unwrap();
        let x = RootMonoid::assemble_unchecked(s, c).unwrap();
        let rep = x.verify_bialgebra(DEFAULT_VERIFY_DEGREE);
        assert!(!rep.closure.pass);
        let ce = rep.closure.counterexample.unwrap();
        assert!(ce.witness.iter().all(|w| !x.in_semigroup(w)));
    }

    #[test]
    fn unit_group_examples() {
        let g = re1().unit_group().unwrap();
        assert_eq!((g.k, g.torus_rank), (1, 1));
        assert_eq!(g.char_matrix.to_rows(), vec![vec![1]]);
        assert!(g.center.is_trivial());

        let g = re2().unit_group().unwrap();
        assert_eq!(g.torus_rank, 2);
        assert_eq!(g.char_matrix.to_rows(), vec![vec![1, 1]]);
        assert_eq!(g.center.dimension, 1);
        assert!(g.center.torsion.is_empty());

        let g = monoid(2, &[-1, 0], &[-1, 0]).unit_group().unwrap();
        assert!(!g.active);
        assert_eq!(g.center.dimension, 1);

        let g = monoid(2, &[-1, 0], &[-1, 2]).unit_group().unwrap();
        assert_eq!(g.center, CenterData { dimension: 0, torsion: vec![2] });
    }

    #[test]
    fn point_evaluation_examples() {
        let x = re1();
        let id = x.identity_point();
        assert_eq!(x.point_eval(&id, &v(&[1, 0])).unwrap(), rat(0));
        assert_eq!(x.point_eval(&id, &v(&[0, 1])).unwrap(), rat(1));
        let p = prim(&[rat(1)], &[rat(2)]);
        assert_eq!(x.point_eval(&p, &v(&[1, 0])).unwrap(), rat(1));
        assert_eq!(x.point_eval(&p, &v(&[0, 1])).unwrap(), rat(2));
        let d = MonoidPoint::Distinguished {
            v: v(&[1, 1]),
            t: vec![rat(1), rat(1)],
        };
        assert_eq!(x.point_eval(&d, &v(&[1, 0])).unwrap(), rat(0));
        assert_eq!(x.point_eval(&d, &v(&[0, 0])).unwrap(), rat(1));
        let bad = MonoidPoint::Distinguished {
            v: v(&[-1, 0]),
            t: vec![rat(1), rat(1)],
        };
        assert!(matches!(x.point_eval(&bad, &v(&[0, 0])), Err(Error::Input(_))));
    }

    #[test]
    fn point_multiplication_examples() {
        let x = re1();
        let p = x.point_multiply(&prim(&[rat(1)], &[rat(2)]), &prim(&[rat(3)], &[rat(4)])).unwrap();
        assert_eq!(p, prim(&[rat(7)], &[rat(8)]));

        let y = re2();
        let p = y
            .point_multiply(&prim(&[rat(1)], &[rat(2), rat(3)]), &prim(&[rat(1)], &[rat(1), rat(1)]))
            .unwrap();
        assert_eq!(p, prim(&[rat(7)], &[rat(2), rat(3)]));

        let q = prim(&[ratio(-2, 3)], &[ratio(5, 7)]);
        let r = x.point_multiply(&q, &x.identity_point()).unwrap();
        for h in x.hilbert_basis() {
            assert_eq!(x.point_eval(&r, h).unwrap(), x.point_eval(&q, h).unwrap());
        }
    }

    #[test]
    fn group_like_exactly_on_face_orthogonal() {
        let x = re2();
        for u in x.boxed_semigroup(2) {
            let d = x.comultiply(&u).unwrap();
            let group_like = d == TensorPoly::pure([u.clone(), u.clone()], rat(1));
            assert_eq!(group_like, x.face_coords(&u).iter().all(|&a| a == 0), "{u}");
            assert_eq!(x.counit(&u).unwrap(), x.point_eval(&x.identity_point(), &u).unwrap());
        }
    }

    #[test]
    fn point_json_roundtrip() {
        let p = MonoidPoint::Product(
            Box::new(prim(&[ratio(1, 2)], &[rat(3)])),
            Box::new(MonoidPoint::Distinguished {
                v: v(&[1, 0]),
                t: vec![rat(1), rat(-1)],
            }),
        );
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(serde_json::from_str::<MonoidPoint>(&s).unwrap(), p);
    }
}
