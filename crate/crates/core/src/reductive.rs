//! Normal reductive monoids `X` with unit group `G = (T × G_s)/Z`.
//!
//! A root datum is given in a rational space `E^*` containing the character
//! lattice `X*(𝕋)` of a maximal torus, together with the dual space `E`. The
//! monoid is encoded by a cone `𝒞 ⊆ E` generated by the simple coroots and
//! finitely many vectors of the closed negative Weyl chamber `𝒱`; its weight
//! monoid is `𝒞^∨ ∩ X*(𝕋)`.
//!
//! Internally characters are written in a basis of `X*(𝕋)` (x-coordinates)
//! and cocharacters in the dual basis of `X_*(𝕋)` (y-coordinates), where the
//! pairing is the coordinate dot product.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cones::{Cone, Side};
use crate::error::{Error, Result};
use crate::lattice::{
    canonical_sort, extend_to_basis, integer_kernel, integral_map, smith_normal_form, IntMatrix, LatticeVector,
};
use crate::linalg::{self, RatMat};
use crate::matrix_group::MatrixGroup;
use crate::rational::{rat, Rational};

/// Default box half-width for weight monoid samples.
pub const DEFAULT_WEIGHT_BOX: i64 = 3;
/// Default entry bound for the search used when `𝒞` is not full-dimensional.
pub const DEFAULT_PHI_BOUND: i64 = 2;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootDatum {
    /// `n = dim 𝕋`.
    pub rank: usize,
    /// `k = dim T`, the rank of the radical.
    pub radical_rank: usize,
    #[serde(with = "crate::rational::matrix")]
    pub simple_roots: Vec<Vec<Rational>>,
    #[serde(with = "crate::rational::matrix")]
    pub simple_coroots: Vec<Vec<Rational>>,
    /// Rows form a basis of `X*(𝕋)` inside `E^*`.
    #[serde(with = "crate::rational::matrix")]
    pub char_lattice: Vec<Vec<Rational>>,
}

/// A cone in `E` given by rational generators; JSON `{"rank": n, "rays": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VinbergCone {
    pub rank: usize,
    #[serde(with = "crate::rational::matrix")]
    pub rays: Vec<Vec<Rational>>,
}

impl VinbergCone {
    pub fn new(rank: usize, rays: &[&[i64]]) -> Self {
        VinbergCone {
            rank,
            rays: rays.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect(),
        }
    }
}

/// JSON input `{"datum": {...}, "cone": {...}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductiveSpec {
    pub datum: RootDatum,
    pub cone: VinbergCone,
}

fn rvec(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| rat(x)).collect()
}

fn rdot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn integral_vec(v: &[Rational]) -> Option<LatticeVector> {
    v.iter()
        .map(|x| if x.is_integer() { linalg::to_i64(x.numer()).ok() } else { None })
        .collect::<Option<Vec<i64>>>()
        .map(LatticeVector::new)
}

/// Checks that an integer matrix is a Cartan matrix of finite type.
fn check_finite_type(c: &IntMatrix) -> Result<()> {
    let r = c.nrows();
    let e = |i: usize, j: usize| c[(i, j)];
    for i in 0..r {
        if e(i, i) != 2 {
            return Err(Error::InvalidRootDatum(format!("C[{i}][{i}] = {} ≠ 2", e(i, i))));
        }
        for j in 0..r {
            if i != j && e(i, j) > 0 {
                return Err(Error::InvalidRootDatum(format!("C[{i}][{j}] = {} > 0", e(i, j))));
            }
            if (e(i, j) == 0) != (e(j, i) == 0) {
                return Err(Error::InvalidRootDatum(format!("C[{i}][{j}] and C[{j}][{i}] disagree on zero")));
            }
        }
    }
    // symmetrize: d_i C_ij = d_j C_ji
    let mut d: Vec<Option<Rational>> = vec![None; r];
    for s in 0..r {
        if d[s].is_some() {
            continue;
        }
        d[s] = Some(Rational::one());
        let mut queue = VecDeque::from([s]);
        while let Some(i) = queue.pop_front() {
            let di = d[i].clone().expect("set");
            for j in 0..r {
                if i == j || e(i, j) == 0 {
                    continue;
                }
                let dj = &di * rat(e(i, j)) / rat(e(j, i));
                match &d[j] {
                    None => {
                        d[j] = Some(dj);
                        queue.push_back(j);
                    }
                    Some(x) if *x != dj => {
                        return Err(Error::InvalidRootDatum("Cartan matrix is not symmetrizable".into()));
                    }
                    _ => {}
                }
            }
        }
    }
    // positive definiteness by elimination without pivoting: all pivots > 0
    let mut b: RatMat = (0..r)
        .map(|i| (0..r).map(|j| d[i].clone().expect("set") * rat(e(i, j))).collect())
        .collect();
    for p in 0..r {
        if !b[p][p].is_positive() {
            return Err(Error::InvalidRootDatum("Cartan matrix is not of finite type".into()));
        }
        for i in p + 1..r {
            let f = &b[i][p] / &b[p][p];
            for j in p..r {
                let t = &f * &b[p][j];
                b[i][j] -= t;
            }
        }
    }
    Ok(())
}

/// The datum rewritten in lattice coordinates.
#[derive(Clone, Debug)]
struct Lattices {
    n: usize,
    cartan: IntMatrix,
    /// Simple roots in x-coordinates.
    roots: Vec<LatticeVector>,
    /// Simple coroots in y-coordinates.
    coroots: Vec<LatticeVector>,
    /// Basis of `X*(𝕋) ∩ ann(coroots)` in x-coordinates.
    radical_chars: Vec<LatticeVector>,
    char_lattice: RatMat,
    char_lattice_inv: RatMat,
}

impl Lattices {
    /// `λ ∈ E^*` to x-coordinates: `x = λ L^{-1}`.
    fn x_of(&self, lambda: &[Rational]) -> Vec<Rational> {
        (0..self.n).map(|j| (0..self.n).map(|i| &lambda[i] * &self.char_lattice_inv[i][j]).sum()).collect()
    }

    /// `v ∈ E` to y-coordinates: `y = L v`.
    fn y_of(&self, v: &[Rational]) -> Vec<Rational> {
        self.char_lattice.iter().map(|row| rdot(row, v)).collect()
    }

    /// x-coordinates to `E^*`: `λ = x L`.
    fn lambda_of(&self, x: &LatticeVector) -> Vec<Rational> {
        (0..self.n)
            .map(|j| (0..self.n).map(|i| rat(x[i]) * &self.char_lattice[i][j]).sum())
            .collect()
    }

    fn cone(&self, c: &VinbergCone) -> Result<Cone> {
        if c.rank != self.n || c.rays.iter().any(|r| r.len() != self.n) {
            return Err(Error::RankMismatch {
                expected: self.n,
                got: c.rank,
            });
        }
        let gens = c
            .rays
            .iter()
            .map(|v| LatticeVector::from_big(&linalg::primitive_from_rat(&self.y_of(v))))
            .collect::<Result<Vec<_>>>()?;
        Cone::new(self.n, Side::N, gens)
    }
}

impl RootDatum {
    pub fn semisimple_rank(&self) -> usize {
        self.simple_roots.len()
    }

    fn lattices(&self) -> Result<Lattices> {
        let n = self.rank;
        let r = self.semisimple_rank();
        let bad = |s: String| Error::InvalidRootDatum(s);
        if self.simple_coroots.len() != r {
            return Err(bad(format!("{r} simple roots but {} coroots", self.simple_coroots.len())));
        }
        if self
            .simple_roots
            .iter()
            .chain(&self.simple_coroots)
            .chain(&self.char_lattice)
            .any(|v| v.len() != n)
            || self.char_lattice.len() != n
        {
            return Err(bad(format!("all vectors must have length {n} and the lattice {n} rows")));
        }
        if r + self.radical_rank != n {
            return Err(bad(format!(
                "semisimple rank {r} plus radical rank {} is not {n}",
                self.radical_rank
            )));
        }
        let inv = linalg::inverse_rat(&self.char_lattice).ok_or_else(|| bad("character lattice basis is singular".into()))?;
        let mut l = Lattices {
            n,
            cartan: IntMatrix::zeros(r, r),
            roots: vec![],
            coroots: vec![],
            radical_chars: vec![],
            char_lattice: self.char_lattice.clone(),
            char_lattice_inv: inv,
        };
        for (i, a) in self.simple_roots.iter().enumerate() {
            let x = integral_vec(&l.x_of(a)).ok_or_else(|| bad(format!("simple root {} is not in X*(𝕋)", i + 1)))?;
            l.roots.push(x);
        }
        for (i, c) in self.simple_coroots.iter().enumerate() {
            let y = integral_vec(&l.y_of(c)).ok_or_else(|| bad(format!("simple coroot {} is not in X_*(𝕋)", i + 1)))?;
            l.coroots.push(y);
        }
        for i in 0..r {
            for j in 0..r {
                l.cartan[(i, j)] = l.roots[i].dot(&l.coroots[j]);
            }
        }
        check_finite_type(&l.cartan)?;
        l.radical_chars = integer_kernel(n, &l.coroots)?;
        Ok(l)
    }

    pub fn validate(&self) -> Result<()> {
        self.lattices().map(|_| ())
    }

    /// `C_ij = <α_i, α_j^∨>`.
    pub fn cartan_matrix(&self) -> Result<IntMatrix> {
        self.lattices().map(|l| l.cartan)
    }

    /// Simply connected semisimple datum of type `A_r`, `B_r`, `C_r` or `D_r`.
    ///
    /// The lattice is the weight lattice: roots are the rows of the Cartan
    /// matrix in fundamental weight coordinates and coroots the standard basis.
    pub fn simply_connected(kind: char, r: usize) -> Result<Self> {
        let c = standard_cartan(kind, r)?;
        Ok(RootDatum {
            rank: r,
            radical_rank: 0,
            simple_roots: (0..r).map(|i| rvec(c.row(i))).collect(),
            simple_coroots: (0..r).map(|i| rvec(&LatticeVector::unit(r, i))).collect(),
            char_lattice: (0..r).map(|i| rvec(&LatticeVector::unit(r, i))).collect(),
        })
    }

    /// `GL_n` with its diagonal torus.
    pub fn gl(n: usize) -> Self {
        let simple: Vec<Vec<Rational>> = (0..n.saturating_sub(1))
            .map(|i| rvec(&(&LatticeVector::unit(n, i) - &LatticeVector::unit(n, i + 1))))
            .collect();
        RootDatum {
            rank: n,
            radical_rank: 1,
            simple_roots: simple.clone(),
            simple_coroots: simple,
            char_lattice: (0..n).map(|i| rvec(&LatticeVector::unit(n, i))).collect(),
        }
    }

    /// A torus of rank `n`.
    pub fn torus(n: usize) -> Self {
        RootDatum {
            rank: n,
            radical_rank: n,
            simple_roots: vec![],
            simple_coroots: vec![],
            char_lattice: (0..n).map(|i| rvec(&LatticeVector::unit(n, i))).collect(),
        }
    }

    /// Datum of the direct product.
    pub fn product(&self, other: &RootDatum) -> RootDatum {
        let (n1, n2) = (self.rank, other.rank);
        let left = |v: &Vec<Rational>| [v.clone(), vec![Rational::zero(); n2]].concat();
        let right = |v: &Vec<Rational>| [vec![Rational::zero(); n1], v.clone()].concat();
        RootDatum {
            rank: n1 + n2,
            radical_rank: self.radical_rank + other.radical_rank,
            simple_roots: self.simple_roots.iter().map(left).chain(other.simple_roots.iter().map(right)).collect(),
            simple_coroots: self
                .simple_coroots
                .iter()
                .map(left)
                .chain(other.simple_coroots.iter().map(right))
                .collect(),
            char_lattice: self.char_lattice.iter().map(left).chain(other.char_lattice.iter().map(right)).collect(),
        }
    }
}

/// The cone `𝒞` of `Mat_n`: the simple coroots of `GL_n` and `e_n`.
pub fn mat_cone(n: usize) -> VinbergCone {
    let mut rays: Vec<Vec<Rational>> = (0..n.saturating_sub(1))
        .map(|i| rvec(&(&LatticeVector::unit(n, i) - &LatticeVector::unit(n, i + 1))))
        .collect();
    rays.push(rvec(&LatticeVector::unit(n, n - 1)));
    VinbergCone { rank: n, rays }
}

/// Cartan matrix `C_ij = <α_i, α_j^∨>` of a classical type, Bourbaki numbering.
pub fn standard_cartan(kind: char, r: usize) -> Result<IntMatrix> {
    let min = match kind {
        'A' => 1,
        'B' | 'C' => 2,
        'D' => 4,
        _ => return Err(Error::Input(format!("unknown type {kind}"))),
    };
    if r < min {
        return Err(Error::Input(format!("{kind}_{r} needs rank at least {min}")));
    }
    let mut c = IntMatrix::identity(r);
    for i in 0..r {
        c[(i, i)] = 2;
    }
    let path = if kind == 'D' { r - 1 } else { r };
    for i in 0..path - 1 {
        c[(i, i + 1)] = -1;
        c[(i + 1, i)] = -1;
    }
    match kind {
        'B' => c[(r - 2, r - 1)] = -2,
        'C' => c[(r - 1, r - 2)] = -2,
        'D' => {
            c[(r - 3, r - 1)] = -1;
            c[(r - 1, r - 3)] = -1;
        }
        _ => {}
    }
    Ok(c)
}

/// All permutations `π` of the nodes with `C_{π(i)π(j)} = C_ij`.
pub fn diagram_automorphisms(rd: &RootDatum) -> Result<Vec<Vec<usize>>> {
    Ok(cartan_automorphisms(&rd.cartan_matrix()?))
}

fn cartan_automorphisms(c: &IntMatrix) -> Vec<Vec<usize>> {
    let r = c.nrows();
    (0..r)
        .permutations(r)
        .filter(|p| (0..r).all(|i| (0..r).all(|j| c[(p[i], p[j])] == c[(i, j)])))
        .collect()
}

/// Name of the Dynkin diagram, components joined by `×`.
pub fn dynkin_type(c: &IntMatrix) -> String {
    let r = c.nrows();
    if r == 0 {
        return "∅".into();
    }
    let adj = |i: usize| (0..r).filter(move |&j| j != i && c[(i, j)] != 0);
    let mut seen = vec![false; r];
    let mut names = vec![];
    for s in 0..r {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < comp.len() {
            for j in adj(comp[i]) {
                if !seen[j] {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            i += 1;
        }
        names.push(component_type(c, &comp));
    }
    names.sort();
    names.join(" × ")
}

fn component_type(c: &IntMatrix, comp: &[usize]) -> String {
    let m = comp.len();
    let deg = |i: usize| comp.iter().filter(|&&j| j != i && c[(i, j)] != 0).count();
    let edges: Vec<(usize, usize, i64)> = comp
        .iter()
        .tuple_combinations()
        .filter(|(&i, &j)| c[(i, j)] != 0)
        .map(|(&i, &j)| (i, j, c[(i, j)] * c[(j, i)]))
        .collect();
    if m == 1 {
        return "A_1".into();
    }
    if edges.iter().any(|e| e.2 == 3) {
        return "G_2".into();
    }
    if let Some(&(i, j, _)) = edges.iter().find(|e| e.2 == 2) {
        if m == 2 {
            return "B_2".into();
        }
        if m == 4 && deg(i) == 2 && deg(j) == 2 {
            return "F_4".into();
        }
        // C_ij = -2 means α_j is the short root of the pair
        let short = if c[(i, j)] == -2 { j } else { i };
        return if deg(short) == 1 { format!("B_{m}") } else { format!("C_{m}") };
    }
    match comp.iter().find(|&&i| deg(i) == 3) {
        None => format!("A_{m}"),
        Some(&centre) => {
            let mut arms: Vec<usize> = comp
                .iter()
                .filter(|&&j| j != centre && c[(centre, j)] != 0)
                .map(|&start| {
                    let (mut prev, mut cur, mut len) = (centre, start, 1);
                    loop {
                        let next = comp.iter().find(|&&x| x != prev && x != cur && c[(cur, x)] != 0);
                        match next {
                            Some(&x) => {
                                prev = cur;
                                cur = x;
                                len += 1;
                            }
                            None => break len,
                        }
                    }
                })
                .collect();
            arms.sort();
            match arms.as_slice() {
                [1, 1, _] => format!("D_{m}"),
                [1, 2, 2] => "E_6".into(),
                [1, 2, 3] => "E_7".into(),
                [1, 2, 4] => "E_8".into(),
                _ => "unidentified".into(),
            }
        }
    }
}

/// `<λ, α_i^∨> >= 0` for all `i`; `λ` must lie in `X*(𝕋)`.
pub fn is_dominant(rd: &RootDatum, lambda: &[Rational]) -> Result<bool> {
    if lambda.len() != rd.rank {
        return Err(Error::RankMismatch {
            expected: rd.rank,
            got: lambda.len(),
        });
    }
    let l = rd.lattices()?;
    if integral_vec(&l.x_of(lambda)).is_none() {
        return Err(Error::Input("weight is not in X*(𝕋)".into()));
    }
    Ok(rd.simple_coroots.iter().all(|c| !rdot(lambda, c).is_negative()))
}

/// `<α_i, v> <= 0` for all `i`: `v` lies in the closed negative Weyl chamber `𝒱`.
pub fn in_neg_weyl_chamber(rd: &RootDatum, v: &[Rational]) -> Result<bool> {
    if v.len() != rd.rank {
        return Err(Error::RankMismatch {
            expected: rd.rank,
            got: v.len(),
        });
    }
    Ok(rd.simple_roots.iter().all(|a| !rdot(a, v).is_positive()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VinbergReport {
    pub valid: bool,
    pub conditions: Vec<ConditionCheck>,
    /// Generators of `𝒞^∨` in `E^*`.
    #[serde(with = "crate::rational::matrix")]
    pub dual_cone: Vec<Vec<Rational>>,
    /// Weights `λ ∈ 𝒞^∨ ∩ X*(𝕋)` with x-coordinates in `[-box, box]`, in `E^*`.
    #[serde(with = "crate::rational::matrix")]
    pub weight_monoid: Vec<Vec<Rational>>,
    pub weight_box: i64,
}

/// Checks the conditions on `𝒞`: strictly convex, contains the simple
/// coroots, and every other generator lies in `𝒱`.
pub fn validate_vinberg_cone(rd: &RootDatum, c: &VinbergCone, weight_box: i64) -> Result<VinbergReport> {
    let l = rd.lattices()?;
    let cone = l.cone(c)?;
    let mut conditions = vec![];
    let convex = cone.is_strongly_convex();
    conditions.push(ConditionCheck {
        name: "strictly_convex".into(),
        pass: convex,
        detail: if convex {
            "𝒞 contains no line".into()
        } else {
            format!("𝒞 contains the lines spanned by {:?}", cone.lineality_basis()?)
        },
    });
    let missing: Vec<usize> = l
        .coroots
        .iter()
        .enumerate()
        .filter(|(_, y)| !cone.contains(y).unwrap_or(false))
        .map(|(i, _)| i + 1)
        .collect();
    conditions.push(ConditionCheck {
        name: "contains_coroots".into(),
        pass: missing.is_empty(),
        detail: if missing.is_empty() {
            "every simple coroot lies in 𝒞".into()
        } else {
            format!("simple coroots {missing:?} are not in 𝒞")
        },
    });
    let coroot_dirs: BTreeSet<LatticeVector> = l
        .coroots
        .iter()
        .map(|y| y.primitive_part())
        .collect::<Result<_>>()?;
    let mut outside = vec![];
    for (i, g) in c.rays.iter().enumerate() {
        let y = LatticeVector::from_big(&linalg::primitive_from_rat(&l.y_of(g)))?;
        if y.is_zero() || coroot_dirs.contains(&y) {
            continue;
        }
        if !in_neg_weyl_chamber(rd, g)? {
            outside.push(i);
        }
    }
    conditions.push(ConditionCheck {
        name: "extra_generators_in_V".into(),
        pass: outside.is_empty(),
        detail: if outside.is_empty() {
            "every generator other than a coroot lies in the closed negative Weyl chamber".into()
        } else {
            format!("generators {outside:?} have <α_i, v> > 0 for some i")
        },
    });
    let valid = conditions.iter().all(|c| c.pass);
    let (dual_cone, weight_monoid) = if valid {
        let dual = cone.dual_cone()?;
        let rays: Vec<Vec<Rational>> = dual.generators().iter().map(|x| l.lambda_of(x)).collect();
        let mut sample: Vec<LatticeVector> = (0..l.n)
            .map(|_| -weight_box..=weight_box)
            .multi_cartesian_product()
            .map(LatticeVector::new)
            .filter(|x| cone.generators().iter().all(|g| x.dot(g) >= 0))
            .collect();
        if l.n == 0 {
            sample.clear();
        }
        canonical_sort(&mut sample);
        (rays, sample.iter().map(|x| l.lambda_of(x)).collect())
    } else {
        (vec![], vec![])
    };
    Ok(VinbergReport {
        valid,
        conditions,
        dual_cone,
        weight_monoid,
        weight_box,
    })
}

/// An element of `Aut(G, 𝒟, 𝒞)` acting on `X*(𝕋)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AutGdcElement {
    /// `ρ` in x-coordinates: `ρ(x) = R x`.
    pub rho: IntMatrix,
    /// Diagram automorphism: `ρ(α_i) = α_{π(i)}`, zero-based.
    pub pi: Vec<usize>,
    /// Restriction of `ρ` to `X*(𝕋) ∩ ann(α^∨)` in its lattice basis.
    pub phi: IntMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AutGdcEnumeration {
    pub elements: Vec<AutGdcElement>,
    pub complete: bool,
    pub method: String,
    /// Basis of `X*(𝕋) ∩ ann(α^∨)` in x-coordinates, on which `phi` acts.
    pub radical_basis: Vec<LatticeVector>,
}

fn require_valid(rd: &RootDatum, c: &VinbergCone) -> Result<(Lattices, Cone)> {
    let report = validate_vinberg_cone(rd, c, 0)?;
    if !report.valid {
        let failed: Vec<String> = report
            .conditions
            .iter()
            .filter(|c| !c.pass)
            .map(|c| format!("{}: {}", c.name, c.detail))
            .collect();
        return Err(Error::InvalidCone(failed.join("; ")));
    }
    let l = rd.lattices()?;
    let cone = l.cone(c)?;
    Ok((l, cone))
}

/// Tests `R` against every condition and returns its decomposition.
fn classify(l: &Lattices, cone_rays: &BTreeSet<LatticeVector>, r: &IntMatrix) -> Result<Option<AutGdcElement>> {
    if !r.is_unimodular() {
        return Ok(None);
    }
    let q = r.transpose().inverse()?;
    for y in cone_rays {
        if !cone_rays.contains(&q.apply(y)?) {
            return Ok(None);
        }
    }
    let mut pi = vec![];
    for y in &l.coroots {
        let img = q.apply(y)?;
        match l.coroots.iter().position(|z| *z == img) {
            Some(j) => pi.push(j),
            None => return Ok(None),
        }
    }
    let nr = pi.len();
    if (0..nr).any(|i| (0..nr).any(|j| l.cartan[(pi[i], pi[j])] != l.cartan[(i, j)])) {
        return Ok(None);
    }
    for (i, x) in l.roots.iter().enumerate() {
        if r.apply(x)? != l.roots[pi[i]] {
            return Ok(None);
        }
    }
    let k = l.radical_chars.len();
    let mut phi = IntMatrix::zeros(k, k);
    if k > 0 {
        let dual = extend_to_basis(l.n, &l.radical_chars)?.dual;
        for (j, a) in l.radical_chars.iter().enumerate() {
            let img = r.apply(a)?;
            if l.coroots.iter().any(|y| img.dot(y) != 0) {
                return Ok(None);
            }
            for i in 0..k {
                phi[(i, j)] = img.dot(&dual[i]);
            }
        }
    }
    Ok(Some(AutGdcElement { rho: r.clone(), pi, phi }))
}

fn sort_elements(v: &mut Vec<AutGdcElement>) {
    v.sort_by_key(|e| e.rho.to_rows().concat());
    v.dedup();
}

/// Search over pairs `(π, φ)`: `π` a diagram automorphism and `φ` a unimodular
/// `k × k` matrix with entries in `[-bound, bound]` acting on `X*(𝕋) ∩ ann(α^∨)`.
fn pi_phi_search(l: &Lattices, cone: &Cone, bound: i64) -> Result<Vec<AutGdcElement>> {
    let rays: BTreeSet<LatticeVector> = cone.generators().iter().cloned().collect();
    let k = l.radical_chars.len();
    let mut sources = l.radical_chars.clone();
    sources.extend(l.roots.iter().cloned());
    let phis: Vec<IntMatrix> = if k == 0 {
        vec![IntMatrix::zeros(0, 0)]
    } else {
        (0..k * k)
            .map(|_| -bound..=bound)
            .multi_cartesian_product()
            .map(|e| IntMatrix::from_rows(e.chunks(k).map(<[i64]>::to_vec).collect()))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter(IntMatrix::is_unimodular)
            .collect()
    };
    let mut found = vec![];
    for pi in cartan_automorphisms(&l.cartan) {
        for phi in &phis {
            let mut images: Vec<LatticeVector> = (0..k)
                .map(|j| {
                    (0..k).fold(LatticeVector::zero(l.n), |acc, i| &acc + &l.radical_chars[i].scale(phi[(i, j)]))
                })
                .collect();
            images.extend(pi.iter().map(|&p| l.roots[p].clone()));
            if let Some(r) = integral_map(&sources, &images)? {
                if let Some(e) = classify(l, &rays, &r)? {
                    found.push(e);
                }
            }
        }
    }
    sort_elements(&mut found);
    Ok(found)
}

/// Enumerates `Aut(G, 𝒟, 𝒞)`: lattice automorphisms `ρ` of `X*(𝕋)` that
/// permute the simple roots and coroots through a diagram automorphism and
/// satisfy `ρ(𝒞^∨) = 𝒞^∨`.
///
/// When `𝒞` is full-dimensional, the contragredient of `ρ` permutes the rays
/// of `𝒞` and is determined by a spanning subset of them, so trying every
/// assignment is exhaustive. Otherwise pairs `(π, φ)` are searched with
/// entries of `φ` bounded by `bound` and the result is flagged incomplete.
pub fn enumerate_aut_gdc(rd: &RootDatum, c: &VinbergCone, bound: i64) -> Result<AutGdcEnumeration> {
    let (l, cone) = require_valid(rd, c)?;
    if !cone.is_full_dimensional() {
        return Ok(AutGdcEnumeration {
            elements: pi_phi_search(&l, &cone, bound)?,
            complete: false,
            method: format!(
                "bounded: 𝒞 is not full-dimensional; pairs (π, φ) with φ entries in [-{bound}, {bound}]"
            ),
            radical_basis: l.radical_chars,
        });
    }
    let rays: Vec<LatticeVector> = cone.generators().to_vec();
    let ray_set: BTreeSet<LatticeVector> = rays.iter().cloned().collect();
    let mut chosen: Vec<LatticeVector> = vec![];
    for y in &rays {
        let mut trial: Vec<Vec<i64>> = chosen.iter().map(|c| c.0.clone()).collect();
        trial.push(y.0.clone());
        if linalg::rank_int(&trial, l.n) == trial.len() {
            chosen.push(y.clone());
        }
    }
    let mut found = vec![];
    for images in rays.iter().cloned().permutations(chosen.len()) {
        // Q = ρ^∨ sends chosen rays to images; ρ = Q^{-T}
        if let Some(q) = integral_map(&chosen, &images)? {
            if !q.is_unimodular() {
                continue;
            }
            let r = q.inverse()?.transpose();
            if let Some(e) = classify(&l, &ray_set, &r)? {
                found.push(e);
            }
        }
    }
    sort_elements(&mut found);
    Ok(AutGdcEnumeration {
        elements: found,
        complete: true,
        method: format!(
            "exhaustive: images of {} independent rays of 𝒞 among its {} rays",
            chosen.len(),
            rays.len()
        ),
        radical_basis: l.radical_chars,
    })
}

/// Test oracle and fallback: the bounded `(π, φ)` search, regardless of dimension.
pub fn search_aut_gdc_by_pairs(rd: &RootDatum, c: &VinbergCone, bound: i64) -> Result<Vec<AutGdcElement>> {
    let (l, cone) = require_valid(rd, c)?;
    pi_phi_search(&l, &cone, bound)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductiveInner {
    /// `G_s / Z(G_s)` in symbols.
    pub description: String,
    pub dynkin_type: String,
    pub semisimple_rank: usize,
    /// `|Z(G_s)|`.
    pub center_order: i64,
    /// Invariant factors of `Z(G_s)`, all greater than 1.
    pub center_invariants: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductiveOuter {
    pub elements: Vec<AutGdcElement>,
    pub order: usize,
    pub complete: bool,
    pub method: String,
    pub composition_table: Vec<Vec<usize>>,
    pub isomorphism_type: String,
    pub radical_basis: Vec<LatticeVector>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductiveAutReport {
    pub cartan_matrix: IntMatrix,
    pub inner: ReductiveInner,
    pub outer: ReductiveOuter,
    pub notes: Vec<String>,
}

/// `Z(G_s)` from the pairing of the simple roots with a basis of
/// `X_*(𝕋) ∩ span(α^∨)`: its order is the index of the root lattice in `X*(T_s)`.
fn semisimple_center(l: &Lattices) -> Result<(i64, Vec<i64>)> {
    let r = l.roots.len();
    if r == 0 {
        return Ok((1, vec![]));
    }
    let b = integer_kernel(l.n, &l.radical_chars)?;
    let rows: Vec<Vec<i64>> = l.roots.iter().map(|x| b.iter().map(|y| x.dot(y)).collect()).collect();
    let inv = smith_normal_form(&IntMatrix::from_rows(rows)?)?.invariant_factors();
    let order = inv.iter().product::<i64>().abs();
    Ok((order, inv.into_iter().filter(|&d| d > 1).collect()))
}

/// Describes `Aut(X) = G_s/Z(G_s) ⋊ Aut(G, 𝒟, 𝒞)`.
pub fn reductive_aut_report(rd: &RootDatum, c: &VinbergCone, bound: i64) -> Result<ReductiveAutReport> {
    let (l, _) = require_valid(rd, c)?;
    let (center_order, center_invariants) = semisimple_center(&l)?;
    let ty = dynkin_type(&l.cartan);
    let description = match ty.as_str() {
        "∅" => "trivial".to_string(),
        "A_1" => "PGL_2".to_string(),
        t => format!("G_s/Z(G_s), adjoint of type {t}"),
    };
    let e = enumerate_aut_gdc(rd, c, bound)?;
    let group = MatrixGroup::new(e.elements.iter().map(|x| x.rho.clone()).collect())?;
    let by_key: BTreeMap<Vec<i64>, AutGdcElement> =
        e.elements.into_iter().map(|x| (x.rho.to_rows().concat(), x)).collect();
    let elements: Vec<AutGdcElement> =
        group.elements.iter().map(|m| by_key[&m.to_rows().concat()].clone()).collect();
    let mut notes = vec![
        "φ is the restriction of ρ to X*(𝕋) ∩ ann(α^∨); the rational splitting makes (φ, π) unique".to_string(),
    ];
    if !e.complete {
        notes.push("𝒞 is not full-dimensional; the outer list may be incomplete".into());
    }
    Ok(ReductiveAutReport {
        cartan_matrix: l.cartan.clone(),
        inner: ReductiveInner {
            description,
            dynkin_type: ty,
            semisimple_rank: l.roots.len(),
            center_order,
            center_invariants,
        },
        outer: ReductiveOuter {
            order: group.order(),
            complete: e.complete,
            method: e.method,
            composition_table: group.table.clone(),
            isomorphism_type: group.identify(),
            elements,
            radical_basis: e.radical_basis,
        },
        notes,
    })
}

impl AutGdcElement {
    /// `ρ^*` on a character `λ ∈ E^*`.
    pub fn act_on_character(&self, rd: &RootDatum, lambda: &[Rational]) -> Result<Vec<Rational>> {
        let l = rd.lattices()?;
        let x = integral_vec(&l.x_of(lambda)).ok_or_else(|| Error::Input("weight is not in X*(𝕋)".into()))?;
        Ok(l.lambda_of(&self.rho.apply(&x)?))
    }

    /// The contragredient `ρ^∨ = ρ^{-T}` on a cocharacter `v ∈ E`.
    pub fn act_on_cocharacter(&self, rd: &RootDatum, v: &[Rational]) -> Result<Vec<Rational>> {
        let l = rd.lattices()?;
        let q = self.rho.transpose().inverse()?;
        let y = l.y_of(v);
        let qy: Vec<Rational> = (0..l.n).map(|i| (0..l.n).map(|j| rat(q[(i, j)]) * &y[j]).sum()).collect();
        let back = l
            .char_lattice_inv
            .iter()
            .map(|row| rdot(row, &qy))
            .collect();
        Ok(back)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat2() -> (RootDatum, VinbergCone) {
        (RootDatum::gl(2), mat_cone(2))
    }

    fn sl2() -> (RootDatum, VinbergCone) {
        let rd = RootDatum::simply_connected('A', 1).unwrap();
        (rd, VinbergCone::new(1, &[&[1]]))
    }

    fn torus2() -> (RootDatum, VinbergCone) {
        (RootDatum::torus(2), VinbergCone::new(2, &[&[1, 0], &[0, 1]]))
    }

    #[test]
    fn cartan_examples() {
        assert_eq!(RootDatum::gl(2).cartan_matrix().unwrap().to_rows(), vec![vec![2]]);
        assert_eq!(RootDatum::gl(3).cartan_matrix().unwrap().to_rows(), vec![vec![2, -1], vec![-1, 2]]);
        let mut bad = RootDatum::gl(2);
        bad.simple_coroots = vec![vec![rat(3), rat(0)]];
        bad.simple_roots = vec![vec![rat(1), rat(0)]];
        assert!(matches!(bad.cartan_matrix(), Err(Error::InvalidRootDatum(_))));
        let mut half = RootDatum::gl(2);
        half.simple_coroots = vec![vec![crate::rational::ratio(1, 2), crate::rational::ratio(-1, 2)]];
        assert!(matches!(half.validate(), Err(Error::InvalidRootDatum(_))));
    }

    #[test]
    fn affine_types_are_rejected() {
        let mut rd = RootDatum::simply_connected('A', 2).unwrap();
        // affine A_1: [[2,-2],[-2,2]]
        rd.simple_roots = vec![rvec(&[2, -2]), rvec(&[-2, 2])];
        assert!(matches!(rd.validate(), Err(Error::InvalidRootDatum(_))));
    }

    #[test]
    fn standard_data() {
        for (kind, r) in [('A', 3), ('B', 3), ('C', 3), ('D', 4), ('B', 2)] {
            let rd = RootDatum::simply_connected(kind, r).unwrap();
            rd.validate().unwrap();
            let ty = dynkin_type(&rd.cartan_matrix().unwrap());
            assert_eq!(ty, format!("{}_{r}", if (kind, r) == ('C', 2) { 'B' } else { kind }));
        }
        let p = RootDatum::simply_connected('A', 1).unwrap().product(&RootDatum::simply_connected('A', 1).unwrap());
        assert_eq!(dynkin_type(&p.cartan_matrix().unwrap()), "A_1 × A_1");
    }

    #[test]
    fn diagram_automorphism_counts() {
        let count = |rd: RootDatum| diagram_automorphisms(&rd).unwrap().len();
        assert_eq!(count(RootDatum::simply_connected('A', 1).unwrap()), 1);
        assert_eq!(count(RootDatum::simply_connected('A', 2).unwrap()), 2);
        assert_eq!(count(RootDatum::simply_connected('D', 4).unwrap()), 6);
        assert_eq!(count(RootDatum::simply_connected('B', 3).unwrap()), 1);
        let a1 = RootDatum::simply_connected('A', 1).unwrap();
        assert_eq!(count(a1.product(&a1)), 2);
    }

    #[test]
    fn dominance_and_chamber() {
        let rd = RootDatum::gl(2);
        assert!(is_dominant(&rd, &rvec(&[1, 0])).unwrap());
        assert!(!is_dominant(&rd, &rvec(&[0, 1])).unwrap());
        assert!(is_dominant(&rd, &[crate::rational::ratio(1, 2), rat(0)]).is_err());
        assert!(in_neg_weyl_chamber(&rd, &rvec(&[0, 1])).unwrap());
        assert!(!in_neg_weyl_chamber(&rd, &rvec(&[1, 0])).unwrap());
    }

    #[test]
    fn vinberg_validation() {
        let (rd, c) = mat2();
        let rep = validate_vinberg_cone(&rd, &c, 2).unwrap();
        assert!(rep.valid);
        let expected: Vec<Vec<Rational>> = [[2, 2], [2, 1], [2, 0], [1, 1], [1, 0], [0, 0]]
            .iter()
            .map(|v| rvec(v))
            .collect();
        assert_eq!(rep.weight_monoid, expected);

        let line = VinbergCone::new(2, &[&[1, -1], &[-1, 1]]);
        let rep = validate_vinberg_cone(&rd, &line, 2).unwrap();
        assert!(!rep.valid);
        assert!(!rep.conditions[0].pass);

        let no_coroot = VinbergCone::new(2, &[&[0, 1]]);
        let rep = validate_vinberg_cone(&rd, &no_coroot, 2).unwrap();
        assert!(!rep.valid && !rep.conditions[1].pass);

        let bad_extra = VinbergCone::new(2, &[&[1, -1], &[1, 0]]);
        let rep = validate_vinberg_cone(&rd, &bad_extra, 2).unwrap();
        assert!(!rep.conditions[2].pass);
    }

    #[test]
    fn aut_gdc_examples() {
        let (rd, c) = mat2();
        let e = enumerate_aut_gdc(&rd, &c, 2).unwrap();
        assert!(e.complete);
        assert_eq!(e.elements.len(), 1);

        let (rd, c) = sl2();
        let e = enumerate_aut_gdc(&rd, &c, 2).unwrap();
        assert_eq!(e.elements.len(), 1);

        let (rd, c) = torus2();
        let e = enumerate_aut_gdc(&rd, &c, 2).unwrap();
        assert_eq!(e.elements.len(), 2);
        assert!(e.elements.iter().any(|x| x.rho.to_rows() == vec![vec![0, 1], vec![1, 0]]));
    }

    #[test]
    fn bounded_search_agrees_when_complete() {
        for (rd, c) in [mat2(), sl2(), torus2()] {
            let exhaustive = enumerate_aut_gdc(&rd, &c, 2).unwrap().elements;
            assert_eq!(search_aut_gdc_by_pairs(&rd, &c, 2).unwrap(), exhaustive);
        }
        // GL_2 with only the coroot: not full-dimensional, the radical inversion survives
        let rd = RootDatum::gl(2);
        let c = VinbergCone::new(2, &[&[1, -1]]);
        let e = enumerate_aut_gdc(&rd, &c, 2).unwrap();
        assert!(!e.complete);
        assert_eq!(e.elements.len(), 2);
    }

    #[test]
    fn reports() {
        let (rd, c) = mat2();
        let r = reductive_aut_report(&rd, &c, 2).unwrap();
        assert_eq!(r.inner.description, "PGL_2");
        assert_eq!(r.inner.center_order, 2);
        assert_eq!(r.outer.isomorphism_type, "trivial");

        let (rd, c) = torus2();
        let r = reductive_aut_report(&rd, &c, 2).unwrap();
        assert_eq!(r.inner.description, "trivial");
        assert_eq!(r.inner.center_order, 1);
        assert_eq!(r.outer.isomorphism_type, "ℤ/2");

        let (rd, c) = sl2();
        let r = reductive_aut_report(&rd, &c, 2).unwrap();
        assert_eq!(r.inner.description, "PGL_2");
        assert_eq!(r.inner.center_order, 2);
        assert_eq!(r.outer.order, 1);

        let rd = RootDatum::simply_connected('A', 2).unwrap();
        let c = VinbergCone::new(2, &[&[1, 0], &[0, 1]]);
        let r = reductive_aut_report(&rd, &c, 2).unwrap();
        assert_eq!(r.inner.center_order, 3);
        assert_eq!(r.outer.isomorphism_type, "ℤ/2");
    }

    #[test]
    fn contragredient_pairing() {
        let (rd, c) = torus2();
        for e in enumerate_aut_gdc(&rd, &c, 2).unwrap().elements {
            let lam = rvec(&[2, -3]);
            let v = rvec(&[5, 7]);
            let a = e.act_on_character(&rd, &lam).unwrap();
            let b = e.act_on_cocharacter(&rd, &v).unwrap();
            assert_eq!(rdot(&a, &b), rdot(&lam, &v));
        }
    }
}
