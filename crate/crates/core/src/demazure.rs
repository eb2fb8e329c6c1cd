//! Demazure roots of a cone `σ ⊆ N_Q` and the root subgroups they define.
//!
//! A root `e ∈ M` belongs to the ray `p_i` when `<e, p_i> = -1` and
//! `<e, p_j> >= 0` for every other ray. It defines the locally nilpotent
//! derivation `δ_e(χ^m) = <m, p_i> χ^{m+e}` of `K[X_σ]`.

use itertools::Itertools;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::cones::{double_description, Cone, Face, FaceSpec};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::lattice::{canonical_sort, extend_to_basis, LatticeVector};
use crate::linalg;
use crate::rational::{rat, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DemazureRoot {
    pub e: LatticeVector,
    /// Index into the extreme rays of `σ`.
    pub ray_index: usize,
}

fn ray_at(rays: &[LatticeVector], i: usize) -> Result<&LatticeVector> {
    rays.get(i).ok_or(Error::RayIndex {
        index: i,
        count: rays.len(),
    })
}

fn root_conditions(rays: &[LatticeVector], e: &LatticeVector, i: usize) -> bool {
    rays.iter().enumerate().all(|(j, p)| {
        let v = e.dot(p);
        if j == i {
            v == -1
        } else {
            v >= 0
        }
    })
}

pub fn is_demazure_root(sigma: &Cone, e: &LatticeVector, i: usize) -> Result<bool> {
    let rays = sigma.extreme_rays()?;
    ray_at(&rays, i)?;
    if e.rank() != sigma.rank() {
        return Err(Error::RankMismatch {
            expected: sigma.rank(),
            got: e.rank(),
        });
    }
    Ok(root_conditions(&rays, e, i))
}

impl DemazureRoot {
    pub fn new(sigma: &Cone, e: LatticeVector, ray_index: usize) -> Result<Self> {
        if !is_demazure_root(sigma, &e, ray_index)? {
            return Err(Error::NotDemazureRoot {
                e: e.0,
                ray: ray_index,
            });
        }
        Ok(DemazureRoot { e, ray_index })
    }
}

/// The roots of one ray found inside a box.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootFamily {
    pub ray_index: usize,
    pub ray: LatticeVector,
    pub roots: Vec<LatticeVector>,
    /// Whether the full set of roots for this ray is finite.
    pub finite: bool,
}

/// All Demazure roots with `max |coordinate| <= box_bound`, grouped by ray.
///
/// Solutions of `<e, p_i> = -1` are parametrized as `-q_1 + Σ c_j q_j` in a
/// basis of `M` dual to one starting with `p_i`, so the search runs over the
/// affine hyperplane rather than the whole box.
pub fn enumerate_demazure_roots(sigma: &Cone, box_bound: i64) -> Result<Vec<RootFamily>> {
    let rays = sigma.extreme_rays()?;
    let n = sigma.rank();
    let mut out = Vec::with_capacity(rays.len());
    for (i, p) in rays.iter().enumerate() {
        let basis = extend_to_basis(n, std::slice::from_ref(p))?;
        let ranges: Vec<std::ops::RangeInclusive<i64>> = basis.primal[1..]
            .iter()
            .map(|w| {
                let r = box_bound * w.iter().map(|x| x.abs()).sum::<i64>();
                -r..=r
            })
            .collect();
        let base = -&basis.dual[0];
        let mut roots: Vec<LatticeVector> = if box_bound < 1 {
            vec![]
        } else {
            ranges
                .into_iter()
                .multi_cartesian_product()
                .map(|cs| {
                    cs.iter()
                        .zip(&basis.dual[1..])
                        .fold(base.clone(), |acc, (&c, q)| &acc + &q.scale(c))
                })
                .chain(if n == 1 { Some(base.clone()) } else { None })
                .filter(|e| e.iter().all(|x| x.abs() <= box_bound))
                .filter(|e| root_conditions(&rays, e, i))
                .collect()
        };
        canonical_sort(&mut roots);

        // the root set is finite iff {e : <e,p_i> = 0, <e,p_j> >= 0} is {0}
        let mut rec = rays.clone();
        rec.push(-p);
        let dd = double_description(n, &rec)?;
        let finite = dd.rays.is_empty() && dd.lineality.is_empty();

        out.push(RootFamily {
            ray_index: i,
            ray: p.clone(),
            roots,
            finite,
        });
    }
    Ok(out)
}

/// A collection `{e_1^{(r)}, e_2^{(r)}}` of Demazure roots compatible with a regular face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompatibleCollection {
    pub face: Face,
    /// Primitive rays `p_1..p_k` of the face, in face order.
    pub face_rays: Vec<LatticeVector>,
    pub e1: Vec<DemazureRoot>,
    pub e2: Vec<DemazureRoot>,
    /// `χ_r = e_2^{(r)} - e_1^{(r)}`.
    pub chars: Vec<LatticeVector>,
}

/// JSON form `{"face": {...}, "e1": [[...]], "e2": [[...]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollectionSpec {
    pub face: FaceSpec,
    pub e1: Vec<LatticeVector>,
    pub e2: Vec<LatticeVector>,
}

impl CollectionSpec {
    pub fn resolve(&self, sigma: &Cone) -> Result<CompatibleCollection> {
        let face = self.face.resolve(sigma)?;
        make_compatible_collection(sigma, &face, self.e1.clone(), self.e2.clone())
    }

    pub fn resolve_unchecked(&self, sigma: &Cone) -> Result<CompatibleCollection> {
        let face = self.face.resolve(sigma)?;
        CompatibleCollection::new_unchecked(sigma, &face, self.e1.clone(), self.e2.clone())
    }
}

impl CompatibleCollection {
    pub fn k(&self) -> usize {
        self.face_rays.len()
    }

    /// Builds the collection and its characters without checking any condition.
    pub fn new_unchecked(
        sigma: &Cone,
        tau: &Face,
        e1: Vec<LatticeVector>,
        e2: Vec<LatticeVector>,
    ) -> Result<Self> {
        let face_rays = sigma.face_rays(tau)?;
        if e1.len() != face_rays.len() || e2.len() != face_rays.len() {
            return Err(Error::NotCompatible(format!(
                "face has {} rays but {} + {} roots were given",
                face_rays.len(),
                e1.len(),
                e2.len()
            )));
        }
        let chars = e1.iter().zip(&e2).map(|(a, b)| b - a).collect();
        let wrap = |es: Vec<LatticeVector>| {
            es.into_iter()
                .zip(&tau.ray_indices)
                .map(|(e, &i)| DemazureRoot { e, ray_index: i })
                .collect()
        };
        Ok(CompatibleCollection {
            face: tau.clone(),
            face_rays,
            e1: wrap(e1),
            e2: wrap(e2),
            chars,
        })
    }

    /// Whether the characters `χ_r` are linearly independent.
    pub fn is_active(&self) -> bool {
        let rows: Vec<Vec<i64>> = self.chars.iter().map(|c| c.0.clone()).collect();
        let n = self.face.witness.rank();
        linalg::rank_int(&rows, n) == self.chars.len()
    }

    /// `e_1^{(1)}, ..., e_1^{(k)}, e_2^{(1)}, ..., e_2^{(k)}`.
    pub fn all_roots(&self) -> impl Iterator<Item = &LatticeVector> {
        self.e1.iter().chain(&self.e2).map(|r| &r.e)
    }
}

/// Validates compatibility of `e1`, `e2` with the regular face `tau`.
pub fn make_compatible_collection(
    sigma: &Cone,
    tau: &Face,
    e1: Vec<LatticeVector>,
    e2: Vec<LatticeVector>,
) -> Result<CompatibleCollection> {
    if !sigma.is_regular_face(tau) {
        return Err(Error::FaceNotRegular);
    }
    let c = CompatibleCollection::new_unchecked(sigma, tau, e1, e2)?;
    let rays = sigma.extreme_rays()?;
    for root in c.e1.iter().chain(&c.e2) {
        if root.e.rank() != sigma.rank() {
            return Err(Error::RankMismatch {
                expected: sigma.rank(),
                got: root.e.rank(),
            });
        }
    }
    for (r, (a, b)) in c.e1.iter().zip(&c.e2).enumerate() {
        for (s, root) in [(1, a), (2, b)] {
            for (i, p) in c.face_rays.iter().enumerate() {
                let want = if i == r { -1 } else { 0 };
                let got = p.dot(&root.e);
                if got != want {
                    return Err(Error::NotCompatible(format!(
                        "<p_{}, e_{s}^({})> = {got}, expected {want}",
                        i + 1,
                        r + 1
                    )));
                }
            }
            if !root_conditions(&rays, &root.e, root.ray_index) {
                return Err(Error::NotDemazureRoot {
                    e: root.e.0.clone(),
                    ray: root.ray_index,
                });
            }
        }
    }
    for (r, chi) in c.chars.iter().enumerate() {
        if c.face_rays.iter().any(|p| p.dot(chi) != 0) {
            return Err(Error::NotCompatible(format!("χ_{} is not orthogonal to the face", r + 1)));
        }
    }
    Ok(c)
}

/// Every compatible collection whose roots lie in the box `[-box_bound, box_bound]^n`.
///
/// Pairs are ordered and `e_1^{(r)} = e_2^{(r)}` is allowed.
pub fn search_compatible_collections(
    sigma: &Cone,
    tau: &Face,
    box_bound: i64,
) -> Result<Vec<CompatibleCollection>> {
    if !sigma.is_regular_face(tau) {
        return Err(Error::FaceNotRegular);
    }
    let families = enumerate_demazure_roots(sigma, box_bound)?;
    let face_rays = sigma.face_rays(tau)?;
    let per_ray: Vec<Vec<(LatticeVector, LatticeVector)>> = tau
        .ray_indices
        .iter()
        .enumerate()
        .map(|(r, &idx)| {
            let cands: Vec<LatticeVector> = families[idx]
                .roots
                .iter()
                .filter(|e| {
                    face_rays
                        .iter()
                        .enumerate()
                        .all(|(i, p)| i == r || p.dot(e) == 0)
                })
                .cloned()
                .collect();
            cands
                .iter()
                .cartesian_product(&cands)
                .map(|(a, b)| (a.clone(), b.clone()))
                .collect()
        })
        .collect();
    let combos: Vec<Vec<(LatticeVector, LatticeVector)>> = if per_ray.is_empty() {
        vec![vec![]]
    } else {
        per_ray.into_iter().multi_cartesian_product().collect()
    };
    combos
        .into_iter()
        .map(|choice| {
            let (e1, e2): (Vec<_>, Vec<_>) = choice.into_iter().unzip();
            make_compatible_collection(sigma, tau, e1, e2)
        })
        .collect()
}

/// The derivation `δ_e` of `K[X_σ]` attached to a Demazure root.
#[derive(Clone, Debug)]
pub struct Derivation {
    rays: Vec<LatticeVector>,
    root: DemazureRoot,
}

impl Derivation {
    pub fn new(sigma: &Cone, root: &DemazureRoot) -> Result<Self> {
        let rays = sigma.extreme_rays()?;
        if !root_conditions(&rays, &root.e, root.ray_index) {
            return Err(Error::NotDemazureRoot {
                e: root.e.0.clone(),
                ray: root.ray_index,
            });
        }
        Ok(Derivation {
            rays,
            root: root.clone(),
        })
    }

    fn check_support(&self, f: &LaurentPoly) -> Result<()> {
        for m in f.exponents() {
            if self.rays.iter().any(|p| m.dot(p) < 0) {
                return Err(Error::OutsideSemigroup(m.0.clone()));
            }
        }
        Ok(())
    }

    pub fn apply(&self, f: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_support(f)?;
        Ok(self.apply_unchecked(f))
    }

    fn apply_unchecked(&self, f: &LaurentPoly) -> LaurentPoly {
        let p = &self.rays[self.root.ray_index];
        let mut out = LaurentPoly::zero();
        for (m, c) in f.terms() {
            let w = m.dot(p);
            if w != 0 {
                out.add_term(m + &self.root.e, c * rat(w));
            }
        }
        out
    }

    /// `δ^q(f)`.
    pub fn power(&self, q: usize, f: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_support(f)?;
        Ok((0..q).fold(f.clone(), |g, _| self.apply_unchecked(&g)))
    }

    /// `exp(s δ)(f) = Σ s^i δ^i(f) / i!`; the sum is finite.
    pub fn exp_action(&self, s: &Rational, f: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_support(f)?;
        let mut total = LaurentPoly::zero();
        let mut term = f.clone();
        let mut i: i64 = 0;
        let mut factor = Rational::one();
        while !term.is_zero() {
            total = total.add(&term.scale(&factor));
            i += 1;
            factor = factor * s / rat(i);
            term = self.apply_unchecked(&term);
        }
        Ok(total)
    }
}

pub fn derivation_apply(sigma: &Cone, root: &DemazureRoot, f: &LaurentPoly) -> Result<LaurentPoly> {
    Derivation::new(sigma, root)?.apply(f)
}

pub fn ga_action(sigma: &Cone, root: &DemazureRoot, s: &Rational, f: &LaurentPoly) -> Result<LaurentPoly> {
    Derivation::new(sigma, root)?.exp_action(s, f)
}
