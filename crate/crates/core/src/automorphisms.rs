//! Automorphisms of an active root monoid `X_{σ,E}`.
//!
//! The group splits as `(G_a^k ⋊ T/Z(G_χ̄)) ⋊ Aut(M, σ, τ, E)`. The inner
//! factor is positive-dimensional and described by ranks and torsion; the outer
//! factor is a group of unimodular maps of `M` and is enumerated.
//!
//! Matrices act on column vectors of `M`.

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{integral_map, integer_kernel, IntMatrix, LatticeVector};
use crate::laurent::TensorPoly;
use crate::linalg;
use crate::matrix_group::MatrixGroup;
use crate::root_monoid::{CenterData, RootMonoid};

/// Default coefficient bound for the search used when `σ` is not full-dimensional.
pub const DEFAULT_OUTER_BOUND: i64 = 2;

/// Box half-width of the `S_σ` sample used by [`verify_monoid_automorphism`].
const SAMPLE_BOX: i64 = 2;

fn require_square_unimodular(a: &IntMatrix, n: usize) -> Result<()> {
    if a.nrows() != n || a.ncols() != n {
        return Err(Error::RankMismatch {
            expected: n,
            got: a.nrows(),
        });
    }
    a.require_unimodular()
}

/// The action of `A` on `M(τ) = τ^⊥ ∩ M` in the coordinates `q_{k+1..n}`,
/// or `None` if `A` does not map `M(τ)` into itself.
pub fn restrict_to_face_lattice(x: &RootMonoid, a: &IntMatrix) -> Result<Option<IntMatrix>> {
    let n = x.rank();
    let k = x.k();
    require_square_unimodular(a, n)?;
    let basis = x.basis();
    let mut r = IntMatrix::zeros(n - k, n - k);
    for j in 0..n - k {
        let img = a.apply(&basis.dual[k + j])?;
        if x.face_coords(&img).iter().any(|&c| c != 0) {
            return Ok(None);
        }
        for i in 0..n - k {
            r[(i, j)] = img.dot(&basis.primal[k + i]);
        }
    }
    Ok(Some(r))
}

/// Whether `B ∈ GL(M(τ))`, in the coordinates `q_{k+1..n}`, fixes every `χ_r`.
pub fn is_in_aut_t_chi(x: &RootMonoid, b: &IntMatrix) -> Result<bool> {
    require_square_unimodular(b, x.rank() - x.k())?;
    let cm = x.char_matrix();
    for r in 0..x.k() {
        let chi = LatticeVector::new(cm.row(r).to_vec());
        if b.apply(&chi)? != chi {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `A` preserves `M(τ)` and `σ^∨` and fixes every root of `E`.
///
/// `A(σ^∨) = σ^∨` is tested as `A^T` permuting the primitive rays of `σ`,
/// which is equivalent and does not require `σ^∨` to be pointed.
pub fn is_in_aut_m_sigma_tau_e(x: &RootMonoid, a: &IntMatrix) -> Result<bool> {
    require_square_unimodular(a, x.rank())?;
    satisfies_outer_conditions(x, a)
}

fn satisfies_outer_conditions(x: &RootMonoid, a: &IntMatrix) -> Result<bool> {
    if x.collection().all_roots().any(|e| a.apply(e).map(|ae| &ae != e).unwrap_or(true)) {
        return Ok(false);
    }
    let rays: BTreeSet<&LatticeVector> = x.rays().iter().collect();
    let at = a.transpose();
    for p in x.rays() {
        if !rays.contains(&at.apply(p)?) {
            return Ok(false);
        }
    }
    match restrict_to_face_lattice(x, a)? {
        Some(r) => Ok(r.is_unimodular()),
        None => Ok(false),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OuterEnumeration {
    pub elements: Vec<IntMatrix>,
    /// The list is provably all of `Aut(M, σ, τ, E)`.
    pub complete: bool,
    pub method: String,
}

fn sort_maps(v: &mut Vec<IntMatrix>) {
    v.sort_by_key(|m| m.to_rows().concat());
    v.dedup();
}

/// Enumerates `Aut(M, σ, τ, E)`.
///
/// For full-dimensional `σ` the rays of `σ^∨` span `M`, so every element is
/// determined by where it sends a maximal independent set of them; all
/// injective assignments are tried and the result is complete. Otherwise the
/// maps `I + K` with `K e = 0` for `e ∈ E` are searched with coefficients in
/// `[-bound, bound]` over a basis of such `K`, and the result is flagged as
/// incomplete.
pub fn enumerate_outer(x: &RootMonoid, bound: i64) -> Result<OuterEnumeration> {
    if !x.collection().is_active() {
        return Err(Error::Inactive);
    }
    let n = x.rank();
    if x.sigma().is_full_dimensional() {
        let rays = x.dual_sigma().extreme_rays()?;
        let mut chosen: Vec<LatticeVector> = vec![];
        for r in &rays {
            let mut trial: Vec<Vec<i64>> = chosen.iter().map(|c| c.0.clone()).collect();
            trial.push(r.0.clone());
            if linalg::rank_int(&trial, n) == trial.len() {
                chosen.push(r.clone());
            }
        }
        let mut found = vec![];
        for images in rays.iter().cloned().permutations(chosen.len()) {
            if let Some(a) = integral_map(&chosen, &images)? {
                if a.is_unimodular() && satisfies_outer_conditions(x, &a)? {
                    found.push(a);
                }
            }
        }
        sort_maps(&mut found);
        return Ok(OuterEnumeration {
            elements: found,
            complete: true,
            method: format!(
                "exhaustive: images of {} independent rays of σ^∨ among its {} rays",
                chosen.len(),
                rays.len()
            ),
        });
    }

    let fixed: Vec<LatticeVector> = x.collection().all_roots().cloned().collect();
    let ann = integer_kernel(n, &fixed)?;
    let params = n * ann.len();
    let width = (2 * bound + 1).max(1) as f64;
    if width.powi(params as i32) > 2.0e7 {
        return Err(Error::Input(format!(
            "bounded search over {params} coefficients in [-{bound}, {bound}] is too large"
        )));
    }
    let mut found = vec![];
    let ranges = (0..params).map(|_| -bound..=bound);
    let combos: Box<dyn Iterator<Item = Vec<i64>>> = if params == 0 {
        Box::new(std::iter::once(vec![]))
    } else {
        Box::new(ranges.multi_cartesian_product())
    };
    for cs in combos {
        let mut a = IntMatrix::identity(n);
        for i in 0..n {
            for (l, b) in ann.iter().enumerate() {
                let c = cs[i * ann.len() + l];
                for j in 0..n {
                    a[(i, j)] += c * b[j];
                }
            }
        }
        if a.is_unimodular() && satisfies_outer_conditions(x, &a)? {
            found.push(a);
        }
    }
    sort_maps(&mut found);
    Ok(OuterEnumeration {
        elements: found,
        complete: false,
        method: format!(
            "bounded: σ is not full-dimensional, so σ^∨ has lineality and the search is \
             limited to I + K with K E = 0 and coefficients in [-{bound}, {bound}]"
        ),
    })
}

fn map_tensor(a: &IntMatrix, t: &TensorPoly) -> Result<TensorPoly> {
    let mut out = TensorPoly::zero();
    for ([l, r], c) in t.terms() {
        out.add_term([a.apply(l)?, a.apply(r)?], c.clone());
    }
    Ok(out)
}

/// Whether `χ^u ↦ χ^{A u}` is an automorphism of the root monoid.
///
/// Checks that `A` maps a boxed sample of `S_σ` into `S_σ`, permutes the
/// Hilbert basis, and satisfies `Δ ∘ A^* = (A^* ⊗ A^*) ∘ Δ` on it.
pub fn verify_monoid_automorphism(x: &RootMonoid, a: &IntMatrix) -> bool {
    let n = x.rank();
    if a.nrows() != n || a.ncols() != n || !a.is_unimodular() {
        return false;
    }
    let check = || -> Result<bool> {
        for u in x.boxed_semigroup(SAMPLE_BOX) {
            if !x.in_semigroup(&a.apply(&u)?) {
                return Ok(false);
            }
        }
        let h: BTreeSet<&LatticeVector> = x.hilbert_basis().iter().collect();
        let images: Vec<LatticeVector> = x.hilbert_basis().iter().map(|u| a.apply(u)).collect::<Result<_>>()?;
        if images.iter().collect::<BTreeSet<_>>() != h {
            return Ok(false);
        }
        for (u, au) in x.hilbert_basis().iter().zip(&images) {
            if x.comultiply(au)? != map_tensor(a, &x.comultiply(u)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    check().unwrap_or(false)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InnerDescription {
    /// `G_a^k ⋊ T/Z(G_χ̄)` in symbols.
    pub description: String,
    pub k: usize,
    pub torus_rank: usize,
    /// Rank of the torus `T/Z(G_χ̄)`.
    pub quotient_torus_rank: usize,
    pub char_matrix: IntMatrix,
    pub center: CenterData,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OuterGroup {
    pub elements: Vec<IntMatrix>,
    pub order: usize,
    pub complete: bool,
    pub method: String,
    /// `composition_table[i][j]` is the index of `elements[i] * elements[j]`.
    pub composition_table: Vec<Vec<usize>>,
    pub isomorphism_type: String,
    /// Every element passed [`verify_monoid_automorphism`].
    pub verified: bool,
    /// Every element restricts to `M(τ)` as an element of `Aut(T, χ̄)`.
    pub restrictions_fix_characters: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AutReport {
    pub inner: InnerDescription,
    pub outer: OuterGroup,
    pub notes: Vec<String>,
}

fn power_name(base: &str, e: usize) -> String {
    match e {
        0 => "1".into(),
        1 => base.into(),
        _ => format!("{base}^{e}"),
    }
}

/// Describes `Aut(X_{σ,E})` for an active root monoid.
pub fn aut_report(x: &RootMonoid, bound: i64) -> Result<AutReport> {
    if !x.collection().is_active() {
        return Err(Error::Inactive);
    }
    let g = x.unit_group()?;
    let inner = InnerDescription {
        description: format!(
            "{} ⋊ {}",
            power_name("𝔾_a", g.k),
            power_name("𝔾_m", g.quotient_torus_rank)
        ),
        k: g.k,
        torus_rank: g.torus_rank,
        quotient_torus_rank: g.quotient_torus_rank,
        char_matrix: g.char_matrix,
        center: g.center,
    };

    let outer = enumerate_outer(x, bound)?;
    let group = MatrixGroup::new(outer.elements.clone())?;
    let verified = group.elements.iter().all(|a| verify_monoid_automorphism(x, a));
    let mut restrictions_fix_characters = true;
    for a in &group.elements {
        let ok = match restrict_to_face_lattice(x, a)? {
            Some(r) => is_in_aut_t_chi(x, &r)?,
            None => false,
        };
        restrictions_fix_characters &= ok;
    }
    let mut notes = vec!["the roots of E are fixed pointwise; setwise preservation is not used".to_string()];
    if !outer.complete {
        notes.push("σ is not full-dimensional; the outer list may be incomplete".into());
    }
    Ok(AutReport {
        inner,
        outer: OuterGroup {
            order: group.order(),
            complete: outer.complete,
            method: outer.method,
            isomorphism_type: group.identify(),
            composition_table: group.table.clone(),
            elements: group.elements,
            verified,
            restrictions_fix_characters,
        },
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cones::{Cone, Side};
    use crate::demazure::make_compatible_collection;

    fn v(c: &[i64]) -> LatticeVector {
        LatticeVector::new(c.to_vec())
    }

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn orthant(n: usize) -> Cone {
        Cone::new(n, Side::N, (0..n).map(|i| LatticeVector::unit(n, i)).collect()).unwrap()
    }

    fn build(s: Cone, face: &[usize], e1: &[&[i64]], e2: &[&[i64]]) -> RootMonoid {
        let tau = s.face(face).unwrap();
        let c = make_compatible_collection(
            &s,
            &tau,
            e1.iter().map(|e| v(e)).collect(),
            e2.iter().map(|e| v(e)).collect(),
        )
        .unwrap();
        RootMonoid::build(s, c).unwrap()
    }

    fn re1() -> RootMonoid {
        build(orthant(2), &[0], &[&[-1, 0]], &[&[-1, 1]])
    }

    fn re2() -> RootMonoid {
        build(orthant(3), &[0], &[&[-1, 0, 0]], &[&[-1, 1, 1]])
    }

    fn swap23() -> IntMatrix {
        m(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]])
    }

    #[test]
    fn torus_character_stabilizer() {
        let x = re2();
        assert!(is_in_aut_t_chi(&x, &m(&[&[0, 1], &[1, 0]])).unwrap());
        assert!(!is_in_aut_t_chi(&x, &m(&[&[1, 1], &[0, 1]])).unwrap());
        assert!(is_in_aut_t_chi(&x, &IntMatrix::identity(2)).unwrap());
        assert!(matches!(
            is_in_aut_t_chi(&x, &m(&[&[2, 0], &[0, 1]])),
            Err(Error::NotUnimodular(_))
        ));
    }

    #[test]
    fn outer_membership() {
        let x = re2();
        assert!(is_in_aut_m_sigma_tau_e(&x, &swap23()).unwrap());
        assert!(is_in_aut_m_sigma_tau_e(&x, &IntMatrix::identity(3)).unwrap());
        let y = re1();
        assert!(!is_in_aut_m_sigma_tau_e(&y, &m(&[&[0, 1], &[1, 0]])).unwrap());
        assert!(!is_in_aut_m_sigma_tau_e(&y, &m(&[&[1, 0], &[0, -1]])).unwrap());
        assert!(matches!(
            is_in_aut_m_sigma_tau_e(&y, &m(&[&[2, 0], &[0, 1]])),
            Err(Error::NotUnimodular(_))
        ));
    }

    #[test]
    fn outer_enumeration_examples() {
        let e = enumerate_outer(&re1(), DEFAULT_OUTER_BOUND).unwrap();
        assert!(e.complete);
        assert_eq!(e.elements, vec![IntMatrix::identity(2)]);

        let e = enumerate_outer(&re2(), DEFAULT_OUTER_BOUND).unwrap();
        assert!(e.complete);
        assert_eq!(e.elements.len(), 2);
        assert!(e.elements.contains(&swap23()));

        let ray = Cone::in_n(2, &[&[1, 0]]).unwrap();
        let x = build(ray, &[0], &[&[-1, 0]], &[&[-1, 1]]);
        let e = enumerate_outer(&x, DEFAULT_OUTER_BOUND).unwrap();
        assert!(!e.complete);
        assert_eq!(e.elements, vec![IntMatrix::identity(2)]);

        let inactive = build(orthant(2), &[0], &[&[-1, 0]], &[&[-1, 0]]);
        assert_eq!(enumerate_outer(&inactive, 2).unwrap_err(), Error::Inactive);
        assert_eq!(aut_report(&inactive, 2).unwrap_err(), Error::Inactive);
    }

    #[test]
    fn monoid_automorphism_check() {
        let x = re2();
        assert!(verify_monoid_automorphism(&x, &swap23()));
        assert!(verify_monoid_automorphism(&x, &IntMatrix::identity(3)));
        let cyc = m(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]);
        assert!(!verify_monoid_automorphism(&x, &cyc));
        assert!(!verify_monoid_automorphism(&x, &m(&[&[2, 0, 0], &[0, 1, 0], &[0, 0, 1]])));
    }

    #[test]
    fn reports() {
        let r = aut_report(&re1(), 2).unwrap();
        assert_eq!(r.inner.description, "𝔾_a ⋊ 𝔾_m");
        assert_eq!(r.outer.isomorphism_type, "trivial");
        assert!(r.outer.complete && r.outer.verified);

        let r = aut_report(&re2(), 2).unwrap();
        assert_eq!(r.inner.quotient_torus_rank, 1);
        assert_eq!(r.inner.center.dimension, 1);
        assert_eq!(r.outer.order, 2);
        assert_eq!(r.outer.isomorphism_type, "ℤ/2");
        assert!(r.outer.verified && r.outer.restrictions_fix_characters);
    }
}
