//! Rational polyhedral cones in `M_Q` or `N_Q`.
//!
//! A [`Cone`] is given by generators. Its dual is computed with the double
//! description method: the lineality space of `{m : <m, g> >= 0}` is split off
//! as an integer kernel, and the pointed remainder is built up one inequality
//! at a time with an algebraic adjacency test.
//!
//! Hilbert bases come from a pulling triangulation into simplicial cones and
//! an enumeration of each fundamental parallelepiped.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{canonical_sort, extend_to_basis, integer_kernel, LatticeVector};
use crate::linalg::{self, BigMat};

/// Which lattice a cone lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    M,
    N,
}

impl Side {
    pub fn dual(self) -> Side {
        match self {
            Side::M => Side::N,
            Side::N => Side::M,
        }
    }
}

/// A finitely generated cone. Generators are primitive, deduplicated and in
/// canonical order; they need not be extreme.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cone {
    rank: usize,
    side: Side,
    generators: Vec<LatticeVector>,
}

/// JSON form `{"rank": n, "rays": [[...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeSpec {
    pub rank: usize,
    pub rays: Vec<LatticeVector>,
}

impl ConeSpec {
    pub fn into_cone(self, side: Side) -> Result<Cone> {
        Cone::new(self.rank, side, self.rays)
    }
}

impl Serialize for Cone {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ConeSpec {
            rank: self.rank,
            rays: self.generators.clone(),
        }
        .serialize(s)
    }
}

impl Cone {
    pub fn new(rank: usize, side: Side, generators: Vec<LatticeVector>) -> Result<Cone> {
        if rank == 0 {
            return Err(Error::InvalidCone("rank must be positive".into()));
        }
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            if g.rank() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    got: g.rank(),
                });
            }
            if !g.is_zero() {
                gens.push(g.primitive_part()?);
            }
        }
        canonical_sort(&mut gens);
        Ok(Cone {
            rank,
            side,
            generators: gens,
        })
    }

    /// Shorthand for tests and examples: a cone in `N` from coordinate slices.
    pub fn in_n(rank: usize, gens: &[&[i64]]) -> Result<Cone> {
        Cone::new(rank, Side::N, gens.iter().map(|g| LatticeVector::new(g.to_vec())).collect())
    }

    pub fn in_m(rank: usize, gens: &[&[i64]]) -> Result<Cone> {
        Cone::new(rank, Side::M, gens.iter().map(|g| LatticeVector::new(g.to_vec())).collect())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn generators(&self) -> &[LatticeVector] {
        &self.generators
    }

    /// Dimension of the linear span.
    pub fn dim(&self) -> usize {
        let rows: Vec<Vec<i64>> = self.generators.iter().map(|g| g.0.clone()).collect();
        linalg::rank_int(&rows, self.rank)
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim() == self.rank
    }

    /// `{m : <m, v> >= 0 for all v in self}`, as a generated cone on the other side.
    pub fn dual_cone(&self) -> Result<Cone> {
        let dd = double_description(self.rank, &self.generators)?;
        let mut gens = dd.rays;
        for l in &dd.lineality {
            gens.push(l.clone());
            gens.push(-l);
        }
        Cone::new(self.rank, self.side.dual(), gens)
    }

    /// Normals `d` with `self = {v : <d, v> >= 0 for all d}`.
    pub fn inequalities(&self) -> Result<Vec<LatticeVector>> {
        Ok(self.dual_cone()?.generators)
    }

    /// Integer basis of the largest linear subspace inside the cone.
    pub fn lineality_basis(&self) -> Result<Vec<LatticeVector>> {
        integer_kernel(self.rank, &self.inequalities()?)
    }

    pub fn is_strongly_convex(&self) -> bool {
        // c has no lines iff its dual is full-dimensional
        self.dual_cone().is_ok_and(|d| d.is_full_dimensional())
    }

    pub fn contains(&self, v: &LatticeVector) -> Result<bool> {
        if v.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                got: v.rank(),
            });
        }
        Ok(satisfies(&self.inequalities()?, v))
    }

    /// The primitive generators of the extreme rays, in canonical order.
    pub fn extreme_rays(&self) -> Result<Vec<LatticeVector>> {
        let facets = self.inequalities()?;
        if !integer_kernel(self.rank, &facets)?.is_empty() {
            return Err(Error::NotStronglyConvex);
        }
        Ok(extreme_among(self.rank, &self.generators, &facets))
    }

    /// The face spanned by the given extreme rays (indices into [`Cone::extreme_rays`]).
    pub fn face(&self, ray_indices: &[usize]) -> Result<Face> {
        let rays = self.extreme_rays()?;
        let facets = self.inequalities()?;
        let wanted: BTreeSet<usize> = ray_indices.iter().copied().collect();
        if let Some(&bad) = wanted.iter().find(|&&i| i >= rays.len()) {
            return Err(Error::RayIndex {
                index: bad,
                count: rays.len(),
            });
        }
        let (closed, witness) = closure(&rays, &facets, &wanted);
        if closed != wanted {
            return Err(Error::NotAFace(ray_indices.to_vec()));
        }
        Ok(make_face(self.rank, &rays, closed, witness))
    }

    /// Face spanned by rays given as vectors rather than indices.
    pub fn face_from_rays(&self, face_rays: &[LatticeVector]) -> Result<Face> {
        let rays = self.extreme_rays()?;
        let mut idx = Vec::new();
        for r in face_rays {
            let p = r.primitive_part()?;
            match rays.iter().position(|x| *x == p) {
                Some(i) => idx.push(i),
                None => return Err(Error::InvalidCone(format!("{p:?} is not an extreme ray"))),
            }
        }
        self.face(&idx)
    }

    /// All faces, from `{0}` up to the cone itself, sorted by dimension then rays.
    pub fn all_faces(&self) -> Result<Vec<Face>> {
        let rays = self.extreme_rays()?;
        let facets = self.inequalities()?;
        let mut seen: HashSet<BTreeSet<usize>> = HashSet::new();
        let mut faces = Vec::new();
        let (bottom, w) = closure(&rays, &facets, &BTreeSet::new());
        let mut queue = vec![(bottom, w)];
        while let Some((f, w)) = queue.pop() {
            if !seen.insert(f.clone()) {
                continue;
            }
            for i in 0..rays.len() {
                if !f.contains(&i) {
                    let mut g = f.clone();
                    g.insert(i);
                    let next = closure(&rays, &facets, &g);
                    if !seen.contains(&next.0) {
                        queue.push(next);
                    }
                }
            }
            faces.push(make_face(self.rank, &rays, f, w));
        }
        faces.sort_by(|a, b| (a.dim, &a.ray_indices).cmp(&(b.dim, &b.ray_indices)));
        Ok(faces)
    }

    pub fn faces_of_dimension(&self, d: usize) -> Result<Vec<Face>> {
        Ok(self
            .all_faces()?
            .into_iter()
            .filter(|f| f.dim == d)
            .collect())
    }

    /// Whether the primitive rays of `face` are part of a lattice basis.
    pub fn is_regular_face(&self, face: &Face) -> bool {
        match self.face_rays(face) {
            Ok(r) => crate::lattice::is_extendable(self.rank, &r),
            Err(_) => false,
        }
    }

    pub fn face_rays(&self, face: &Face) -> Result<Vec<LatticeVector>> {
        let rays = self.extreme_rays()?;
        face.ray_indices
            .iter()
            .map(|&i| {
                rays.get(i).cloned().ok_or(Error::RayIndex {
                    index: i,
                    count: rays.len(),
                })
            })
            .collect()
    }

    /// Smallest search box that makes [`Cone::hilbert_basis`] complete.
    pub fn required_degree_bound(&self) -> Result<i64> {
        Ok(self.hilbert_plan()?.required)
    }

    /// Hilbert basis of the semigroup `self ∩ Z^n`.
    ///
    /// For a cone with lineality the result is the generating set
    /// `±b_1..±b_s` plus lifts of the Hilbert basis of the pointed quotient.
    pub fn hilbert_basis(&self, degree_bound: i64) -> Result<HilbertBasis> {
        let plan = self.hilbert_plan()?;
        if plan.required > degree_bound {
            return Err(Error::SearchBoxExceeded {
                bound: degree_bound,
                required: plan.required,
            });
        }
        let mut elements: Vec<LatticeVector> = Vec::new();
        for b in &plan.lineality {
            elements.push(b.clone());
            elements.push(-b);
        }
        let quotient_hb = pointed_hilbert(&plan.quotient, &plan.simplices)?;
        for h in quotient_hb {
            let mut x = LatticeVector::zero(self.rank);
            for (j, c) in h.iter().enumerate() {
                x = &x + &plan.complement[j].scale(*c);
            }
            elements.push(x);
        }
        canonical_sort(&mut elements);
        Ok(HilbertBasis {
            elements,
            degree_bound,
        })
    }

    /// Hilbert basis with the search box sized automatically.
    pub fn hilbert_basis_auto(&self) -> Result<HilbertBasis> {
        self.hilbert_basis(self.required_degree_bound()?)
    }

    fn hilbert_plan(&self) -> Result<HilbertPlan> {
        let lineality = self.lineality_basis()?;
        let s = lineality.len();
        let (quotient, complement) = if s == 0 {
            (self.clone(), (0..self.rank).map(|i| LatticeVector::unit(self.rank, i)).collect())
        } else if s == self.rank {
            (Cone::new(1, self.side, vec![])?, vec![])
        } else {
            let basis = extend_to_basis(self.rank, &lineality)?;
            let gens = self
                .generators
                .iter()
                .map(|g| LatticeVector::new(basis.dual[s..].iter().map(|q| q.dot(g)).collect::<Vec<_>>()))
                .collect();
            (
                Cone::new(self.rank - s, self.side, gens)?,
                basis.primal[s..].to_vec(),
            )
        };
        let simplices = if quotient.generators.is_empty() {
            vec![]
        } else {
            triangulate(&quotient)?
        };
        let required = simplices
            .iter()
            .map(|s| parallelepiped_box(quotient.rank, s).1)
            .max()
            .unwrap_or(1)
            .max(1);
        Ok(HilbertPlan {
            lineality,
            quotient,
            complement,
            simplices,
            required,
        })
    }
}

struct HilbertPlan {
    lineality: Vec<LatticeVector>,
    quotient: Cone,
    complement: Vec<LatticeVector>,
    simplices: Vec<Vec<LatticeVector>>,
    required: i64,
}

/// A face of a cone, identified by the indices of its extreme rays.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Face {
    pub ray_indices: Vec<usize>,
    pub dim: usize,
    /// A vector of the dual cone vanishing exactly on this face.
    pub witness: LatticeVector,
}

/// JSON form of a face: `{"ray_indices": [...]}` or `{"rays": [[...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FaceSpec {
    Indices { ray_indices: Vec<usize> },
    Rays { rays: Vec<LatticeVector> },
}

impl FaceSpec {
    pub fn resolve(&self, cone: &Cone) -> Result<Face> {
        match self {
            FaceSpec::Indices { ray_indices } => cone.face(ray_indices),
            FaceSpec::Rays { rays } => cone.face_from_rays(rays),
        }
    }
}

/// Generators of `S = C ∩ Z^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertBasis {
    pub elements: Vec<LatticeVector>,
    pub degree_bound: i64,
}

pub(crate) fn satisfies(inequalities: &[LatticeVector], v: &LatticeVector) -> bool {
    inequalities.iter().all(|d| d.dot(v) >= 0)
}

fn make_face(n: usize, rays: &[LatticeVector], set: BTreeSet<usize>, witness: LatticeVector) -> Face {
    let rows: Vec<Vec<i64>> = set.iter().map(|&i| rays[i].0.clone()).collect();
    Face {
        dim: linalg::rank_int(&rows, n),
        ray_indices: set.into_iter().collect(),
        witness,
    }
}

/// Smallest face containing the given rays, with a supporting functional.
fn closure(
    rays: &[LatticeVector],
    facets: &[LatticeVector],
    subset: &BTreeSet<usize>,
) -> (BTreeSet<usize>, LatticeVector) {
    let n = rays.first().or(facets.first()).map_or(0, |v| v.rank());
    let tight: Vec<&LatticeVector> = facets
        .iter()
        .filter(|d| subset.iter().all(|&i| d.dot(&rays[i]) == 0))
        .collect();
    let closed = (0..rays.len())
        .filter(|&i| tight.iter().all(|d| d.dot(&rays[i]) == 0))
        .collect();
    let mut w = LatticeVector::zero(n);
    for d in tight {
        w = &w + d;
    }
    let w = w.primitive_part().unwrap_or(w);
    (closed, w)
}

/// Generators of a cone that span extreme rays, given its facet normals.
fn extreme_among(n: usize, gens: &[LatticeVector], facets: &[LatticeVector]) -> Vec<LatticeVector> {
    let mut out: Vec<LatticeVector> = gens
        .iter()
        .filter(|g| {
            let tight: Vec<Vec<i64>> = facets
                .iter()
                .filter(|d| d.dot(g) == 0)
                .map(|d| d.0.clone())
                .collect();
            linalg::rank_int(&tight, n) == n - 1
        })
        .cloned()
        .collect();
    canonical_sort(&mut out);
    out
}

pub(crate) struct DualDescription {
    pub lineality: Vec<LatticeVector>,
    pub rays: Vec<LatticeVector>,
}

/// Double description of `{m : <m, g> >= 0 for all g in gens}`.
pub(crate) fn double_description(n: usize, gens: &[LatticeVector]) -> Result<DualDescription> {
    let g: BigMat = gens.iter().filter(|v| !v.is_zero()).map(LatticeVector::to_big).collect();
    let lin = if g.is_empty() {
        linalg::identity(n)
    } else {
        linalg::integer_kernel(&g, n)
    };
    let d = n - lin.len();
    let lineality = lin
        .iter()
        .map(|r| LatticeVector::from_big(r))
        .collect::<Result<Vec<_>>>()?;
    if d == 0 {
        return Ok(DualDescription {
            lineality,
            rays: vec![],
        });
    }

    let rat_rows = |idx: &[usize]| -> linalg::RatMat {
        let mut rows = lin.clone();
        rows.extend(idx.iter().map(|&i| g[i].clone()));
        linalg::to_rat(&rows)
    };

    // d independent constraints give the initial simplicial cone
    let mut chosen: Vec<usize> = Vec::new();
    for i in 0..g.len() {
        if chosen.len() == d {
            break;
        }
        let mut trial = chosen.clone();
        trial.push(i);
        if linalg::rank_rat(&rat_rows(&trial), n) == lin.len() + trial.len() {
            chosen = trial;
        }
    }
    let inv = linalg::inverse_rat(&rat_rows(&chosen))
        .ok_or_else(|| Error::Internal("initial constraint system is singular".into()))?;
    let mut rays: Vec<Vec<BigInt>> = (0..d)
        .map(|t| {
            let col: Vec<_> = (0..n).map(|i| inv[i][lin.len() + t].clone()).collect();
            linalg::primitive_from_rat(&col)
        })
        .collect();
    let mut processed = chosen.clone();

    for i in 0..g.len() {
        if chosen.contains(&i) {
            continue;
        }
        let vals: Vec<BigInt> = rays.iter().map(|r| linalg::dot(&g[i], r)).collect();
        if vals.iter().all(|v| !v.is_negative()) {
            processed.push(i);
            continue;
        }
        let mut next: Vec<Vec<BigInt>> = Vec::new();
        for (a, va) in vals.iter().enumerate() {
            if !va.is_negative() {
                next.push(rays[a].clone());
            }
        }
        for (a, va) in vals.iter().enumerate() {
            if !va.is_positive() {
                continue;
            }
            for (b, vb) in vals.iter().enumerate() {
                if !vb.is_negative() {
                    continue;
                }
                let common: Vec<usize> = processed
                    .iter()
                    .copied()
                    .filter(|&j| {
                        linalg::dot(&g[j], &rays[a]).is_zero() && linalg::dot(&g[j], &rays[b]).is_zero()
                    })
                    .collect();
                if common.len() + 2 < d {
                    continue;
                }
                if linalg::rank_rat(&rat_rows(&common), n) != n - 2 {
                    continue;
                }
                let r: Vec<BigInt> = rays[b]
                    .iter()
                    .zip(&rays[a])
                    .map(|(x, y)| va * x - vb * y)
                    .collect();
                let gcd = linalg::gcd_all(&r);
                next.push(r.into_iter().map(|x| x / &gcd).collect());
            }
        }
        next.sort();
        next.dedup();
        rays = next;
        processed.push(i);
    }

    let mut out = rays
        .iter()
        .map(|r| LatticeVector::from_big(r))
        .collect::<Result<Vec<_>>>()?;
    canonical_sort(&mut out);
    Ok(DualDescription {
        lineality,
        rays: out,
    })
}

/// Pulling triangulation of a pointed cone into simplicial cones spanned by extreme rays.
fn triangulate(cone: &Cone) -> Result<Vec<Vec<LatticeVector>>> {
    let rays = cone.extreme_rays()?;
    let faces = cone.all_faces()?;
    let top = faces.last().cloned().expect("a cone has at least one face");
    let mut simplices = Vec::new();
    pull(&top, &faces, &mut Vec::new(), &mut simplices);
    Ok(simplices
        .into_iter()
        .map(|s: Vec<usize>| s.into_iter().map(|i| rays[i].clone()).collect())
        .collect())
}

fn pull(face: &Face, faces: &[Face], apex: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if face.ray_indices.len() == face.dim {
        let mut s = apex.clone();
        s.extend(&face.ray_indices);
        s.sort_unstable();
        out.push(s);
        return;
    }
    let r0 = face.ray_indices[0];
    let members: BTreeSet<usize> = face.ray_indices.iter().copied().collect();
    for g in faces {
        if g.dim + 1 == face.dim
            && !g.ray_indices.contains(&r0)
            && g.ray_indices.iter().all(|i| members.contains(i))
        {
            apex.push(r0);
            pull(g, faces, apex, out);
            apex.pop();
        }
    }
}

/// Per-coordinate bounding box of the half-open parallelepiped, and its max |coordinate|.
fn parallelepiped_box(n: usize, rays: &[LatticeVector]) -> (Vec<(i64, i64)>, i64) {
    let bx: Vec<(i64, i64)> = (0..n)
        .map(|j| {
            let lo: i64 = rays.iter().map(|r| r[j].min(0)).sum();
            let hi: i64 = rays.iter().map(|r| r[j].max(0)).sum();
            (lo, hi)
        })
        .collect();
    let m = bx.iter().map(|&(lo, hi)| lo.abs().max(hi.abs())).max().unwrap_or(0);
    (bx, m)
}

/// Lattice points `sum λ_i r_i` with `0 <= λ_i < 1`, including the origin.
fn parallelepiped_points(n: usize, rays: &[LatticeVector]) -> Result<Vec<LatticeVector>> {
    let d = rays.len();
    // d coordinates on which the rays are independent
    let mut coords: Vec<usize> = Vec::new();
    for j in 0..n {
        let mut trial = coords.clone();
        trial.push(j);
        let sub: Vec<Vec<i64>> = trial.iter().map(|&c| rays.iter().map(|r| r[c]).collect()).collect();
        if linalg::rank_int(&sub, d) == trial.len() {
            coords = trial;
        }
        if coords.len() == d {
            break;
        }
    }
    let sub: BigMat = coords
        .iter()
        .map(|&c| rays.iter().map(|r| BigInt::from(r[c])).collect())
        .collect();
    let det = linalg::det(&sub);
    let inv = linalg::inverse_rat(&linalg::to_rat(&sub))
        .ok_or_else(|| Error::Internal("simplicial cone has dependent rays".into()))?;
    let det_r = num_rational::BigRational::from_integer(det.clone());
    let adj: Vec<Vec<i128>> = inv
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| to_i128(&(x * &det_r).to_integer()))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let det = to_i128(&det)?;
    let (bx, _) = parallelepiped_box(n, rays);

    let mut out = Vec::new();
    let mut x: Vec<i64> = bx.iter().map(|&(lo, _)| lo).collect();
    loop {
        // mu = det * λ
        let mu: Vec<i128> = adj
            .iter()
            .map(|row| row.iter().zip(&coords).map(|(a, &c)| a * x[c] as i128).sum())
            .collect();
        let inside = mu.iter().all(|&m| {
            let s = m * det.signum();
            s >= 0 && s < det.abs()
        });
        if inside
            && (0..n).all(|j| {
                rays.iter().zip(&mu).map(|(r, m)| r[j] as i128 * m).sum::<i128>() == det * x[j] as i128
            })
        {
            out.push(LatticeVector::new(x.clone()));
        }
        // odometer
        let mut j = 0;
        loop {
            if j == n {
                return Ok(out);
            }
            if x[j] < bx[j].1 {
                x[j] += 1;
                break;
            }
            x[j] = bx[j].0;
            j += 1;
        }
    }
}

fn to_i128(x: &BigInt) -> Result<i128> {
    num_traits::ToPrimitive::to_i128(x).ok_or_else(|| Error::Overflow(x.to_string()))
}

fn pointed_hilbert(cone: &Cone, simplices: &[Vec<LatticeVector>]) -> Result<Vec<LatticeVector>> {
    let facets = cone.inequalities()?;
    let mut candidates: BTreeSet<LatticeVector> = BTreeSet::new();
    for s in simplices {
        candidates.extend(s.iter().cloned());
        for p in parallelepiped_points(cone.rank, s)? {
            if !p.is_zero() {
                candidates.insert(p);
            }
        }
    }
    let cands: Vec<LatticeVector> = candidates.into_iter().collect();
    let mut out: Vec<LatticeVector> = cands
        .iter()
        .filter(|x| {
            !cands
                .iter()
                .any(|y| y != *x && satisfies(&facets, &(*x - y)))
        })
        .cloned()
        .collect();
    canonical_sort(&mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[i64]) -> LatticeVector {
        LatticeVector::new(c.to_vec())
    }

    fn set(vs: &[&[i64]]) -> BTreeSet<LatticeVector> {
        vs.iter().map(|c| v(c)).collect()
    }

    #[test]
    fn dual_of_orthant_is_orthant() {
        let c = Cone::in_n(2, &[&[1, 0], &[0, 1]]).unwrap();
        assert_eq!(c.dual_cone().unwrap().generators(), &[v(&[1, 0]), v(&[0, 1])]);
    }

    #[test]
    fn dual_of_ray_is_half_plane() {
        let c = Cone::in_n(2, &[&[1, 0]]).unwrap();
        let d = c.dual_cone().unwrap();
        assert_eq!(d.generators(), &[v(&[1, 0]), v(&[0, 1]), v(&[0, -1])]);
        assert_eq!(d.side(), Side::M);
    }

    #[test]
    fn dual_of_a1_singularity() {
        let c = Cone::in_n(2, &[&[2, -1], &[0, 1]]).unwrap();
        let d: BTreeSet<_> = c.dual_cone().unwrap().generators().iter().cloned().collect();
        assert_eq!(d, set(&[&[1, 0], &[1, 2]]));
    }

    #[test]
    fn dual_of_zero_cone_is_everything() {
        let c = Cone::in_n(2, &[]).unwrap();
        assert_eq!(c.dual_cone().unwrap().dim(), 2);
        assert!(c.is_strongly_convex());
        assert!(c.extreme_rays().unwrap().is_empty());
    }

    #[test]
    fn extreme_rays_examples() {
        let c = Cone::in_n(2, &[&[1, 0], &[1, 1], &[0, 1]]).unwrap();
        assert_eq!(c.extreme_rays().unwrap(), vec![v(&[1, 0]), v(&[0, 1])]);
        let c = Cone::in_n(2, &[&[1, 0]]).unwrap();
        assert_eq!(c.extreme_rays().unwrap(), vec![v(&[1, 0])]);
        let c = Cone::in_n(2, &[&[1, 0], &[-1, 0]]).unwrap();
        assert_eq!(c.extreme_rays(), Err(Error::NotStronglyConvex));
    }

    #[test]
    fn strong_convexity() {
        assert!(Cone::in_n(2, &[&[1, 0], &[0, 1]]).unwrap().is_strongly_convex());
        assert!(!Cone::in_n(2, &[&[1, 0], &[-1, 0]]).unwrap().is_strongly_convex());
        assert!(!Cone::in_n(2, &[&[1, 1], &[-1, 0], &[0, -1]]).unwrap().is_strongly_convex());
    }

    #[test]
    fn membership() {
        let c = Cone::in_n(2, &[&[1, 0], &[0, 1]]).unwrap();
        assert!(c.contains(&v(&[3, 5])).unwrap());
        assert!(!c.contains(&v(&[-1, 0])).unwrap());
        let c = Cone::in_m(2, &[&[0, 1], &[2, -1]]).unwrap();
        assert!(c.contains(&v(&[1, 0])).unwrap());
        assert!(matches!(c.contains(&v(&[1])), Err(Error::RankMismatch { .. })));
    }

    #[test]
    fn regular_faces() {
        let orthant = Cone::in_n(2, &[&[1, 0], &[0, 1]]).unwrap();
        assert!(orthant.is_regular_face(&orthant.face(&[0]).unwrap()));
        assert!(orthant.is_regular_face(&orthant.face(&[]).unwrap()));
        let c = Cone::in_n(2, &[&[1, 1], &[1, -1]]).unwrap();
        assert!(!c.is_regular_face(&c.face(&[0, 1]).unwrap()));
        assert!(c.is_regular_face(&c.face(&[0]).unwrap()));
    }

    #[test]
    fn face_rejects_non_faces() {
        // the square cone over (±1, ±1, 1): opposite rays do not span a face
        let c = Cone::in_n(3, &[&[1, 1, 1], &[1, -1, 1], &[-1, 1, 1], &[-1, -1, 1]]).unwrap();
        let rays = c.extreme_rays().unwrap();
        let i = rays.iter().position(|r| *r == v(&[1, 1, 1])).unwrap();
        let j = rays.iter().position(|r| *r == v(&[-1, -1, 1])).unwrap();
        assert!(matches!(c.face(&[i, j]), Err(Error::NotAFace(_))));
        assert!(matches!(c.face(&[7]), Err(Error::RayIndex { .. })));
    }

    #[test]
    fn faces_by_dimension() {
        let q2 = Cone::in_n(2, &[&[1, 0], &[0, 1]]).unwrap();
        assert_eq!(q2.faces_of_dimension(1).unwrap().len(), 2);
        let zero = q2.faces_of_dimension(0).unwrap();
        assert_eq!(zero.len(), 1);
        assert!(zero[0].ray_indices.is_empty());
        let q3 = Cone::in_n(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        let two = q3.faces_of_dimension(2).unwrap();
        assert_eq!(two.len(), 3);
        for f in &two {
            // witness vanishes exactly on the face
            let rays = q3.extreme_rays().unwrap();
            for (i, r) in rays.iter().enumerate() {
                assert_eq!(f.witness.dot(r) == 0, f.ray_indices.contains(&i));
            }
        }
        assert!(q3.faces_of_dimension(4).unwrap().is_empty());
    }

    #[test]
    fn hilbert_examples() {
        let c = Cone::in_m(2, &[&[1, 0], &[0, 1]]).unwrap();
        assert_eq!(c.hilbert_basis(1).unwrap().elements, vec![v(&[1, 0]), v(&[0, 1])]);
        let c = Cone::in_m(2, &[&[0, 1], &[2, -1]]).unwrap();
        let hb: BTreeSet<_> = c.hilbert_basis(2).unwrap().elements.into_iter().collect();
        assert_eq!(hb, set(&[&[0, 1], &[1, 0], &[2, -1]]));
        let c = Cone::in_m(1, &[&[1]]).unwrap();
        assert_eq!(c.hilbert_basis(1).unwrap().elements, vec![v(&[1])]);
    }

    #[test]
    fn hilbert_reports_small_box() {
        let c = Cone::in_m(2, &[&[0, 1], &[2, -1]]).unwrap();
        assert_eq!(
            c.hilbert_basis(1),
            Err(Error::SearchBoxExceeded { bound: 1, required: 2 })
        );
    }

    #[test]
    fn hilbert_of_cone_over_square() {
        // non-simplicial: needs the triangulation
        let c = Cone::in_m(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 0, 1], &[0, 1, 1]]).unwrap();
        let hb: BTreeSet<_> = c.hilbert_basis_auto().unwrap().elements.into_iter().collect();
        assert_eq!(hb, set(&[&[1, 0, 0], &[0, 1, 0], &[1, 0, 1], &[0, 1, 1]]));
    }

    #[test]
    fn hilbert_with_lineality() {
        let c = Cone::in_m(2, &[&[1, 0], &[0, 1], &[0, -1]]).unwrap();
        let hb: BTreeSet<_> = c.hilbert_basis_auto().unwrap().elements.into_iter().collect();
        assert_eq!(hb, set(&[&[1, 0], &[0, 1], &[0, -1]]));
    }

    #[test]
    fn hilbert_of_cyclic_quotient() {
        // cone((0,1),(3,-2)): two interior generators between the rays
        let c = Cone::in_m(2, &[&[0, 1], &[3, -2]]).unwrap();
        let hb: BTreeSet<_> = c.hilbert_basis_auto().unwrap().elements.into_iter().collect();
        assert_eq!(hb, set(&[&[0, 1], &[1, 0], &[2, -1], &[3, -2]]));
    }
}
