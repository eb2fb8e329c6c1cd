//! Shared fixtures and brute-force oracles for the integration tests.
//!
//! Oracles here work on plain `i64` slices and maps and avoid the library's
//! own cone, lattice and polynomial routines wherever the check allows.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use toric_monoids::cones::{Cone, FaceSpec, Side};
use toric_monoids::demazure::{make_compatible_collection, CollectionSpec};
use toric_monoids::lattice::LatticeVector;
use toric_monoids::rational::Rational;
use toric_monoids::root_monoid::RootMonoid;

pub fn v(c: &[i64]) -> LatticeVector {
    LatticeVector::new(c.to_vec())
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn orthant(n: usize) -> Cone {
    Cone::new(n, Side::N, (0..n).map(|i| LatticeVector::unit(n, i)).collect()).unwrap()
}

fn monoid(sigma: Cone, e1: &[i64], e2: &[i64]) -> RootMonoid {
    let tau = sigma.face(&[sigma_index(&sigma, 0)]).unwrap();
    let e = make_compatible_collection(&sigma, &tau, vec![v(e1)], vec![v(e2)]).unwrap();
    RootMonoid::build(sigma, e).unwrap()
}

/// Index of the extreme ray `e_{coord}` of an orthant.
fn sigma_index(sigma: &Cone, coord: usize) -> usize {
    let n = sigma.rank();
    sigma.extreme_rays().unwrap().iter().position(|r| *r == LatticeVector::unit(n, coord)).unwrap()
}

/// ℤ² orthant, τ = ray (1,0), e₁ = (−1,0), e₂ = (−1,1).
pub fn re1() -> RootMonoid {
    monoid(orthant(2), &[-1, 0], &[-1, 1])
}

/// ℤ³ orthant, τ = ray (1,0,0), e₁ = (−1,0,0), e₂ = (−1,1,1).
pub fn re2() -> RootMonoid {
    monoid(orthant(3), &[-1, 0, 0], &[-1, 1, 1])
}

/// ℤ² orthant with χ = (0,2), whose center has a ℤ/2 factor.
pub fn re_torsion() -> RootMonoid {
    monoid(orthant(2), &[-1, 0], &[-1, 2])
}

/// Collection spec on the face given by ray index 0.
pub fn collection(e1: &[i64], e2: &[i64]) -> CollectionSpec {
    CollectionSpec {
        face: FaceSpec::Indices { ray_indices: vec![0] },
        e1: vec![v(e1)],
        e2: vec![v(e2)],
    }
}

/// A random strongly convex cone in `N` of rank 2 or 3 with 1 to 4 generators
/// whose coordinates lie in `[-3, 3]`.
pub fn random_cone(rng: &mut ChaCha8Rng) -> Cone {
    loop {
        let n = rng.gen_range(2..=3);
        let count = rng.gen_range(1..=4);
        let gens: Vec<LatticeVector> = (0..count)
            .map(|_| LatticeVector::new((0..n).map(|_| rng.gen_range(-3..=3)).collect::<Vec<i64>>()))
            .filter(|g| !g.is_zero())
            .collect();
        if gens.is_empty() {
            continue;
        }
        let c = Cone::new(n, Side::N, gens).unwrap();
        if c.is_strongly_convex() {
            return c;
        }
    }
}

/// All integer vectors of length `n` with entries in `[-b, b]`.
pub fn box_points(n: usize, b: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (-b..=b).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// Lattice points of `σ^∨` in a box, tested directly against the rays of `σ`.
pub fn dual_points(rays: &[LatticeVector], b: i64) -> Vec<Vec<i64>> {
    let n = rays[0].rank();
    box_points(n, b).into_iter().filter(|u| rays.iter().all(|p| dot(u, &p.0) >= 0)).collect()
}

/// Demazure roots of ray `i` by their defining pairing conditions.
pub fn is_root_oracle(rays: &[LatticeVector], e: &[i64], i: usize) -> bool {
    rays.iter().enumerate().all(|(j, p)| {
        let w = dot(e, &p.0);
        if j == i {
            w == -1
        } else {
            w >= 0
        }
    })
}

/// Whether `target` is a nonnegative integer combination of `gens`, all of
/// which lie in a pointed cone cut out by `grading > 0`.
pub fn decomposes(target: &[i64], gens: &[Vec<i64>], grading: &[i64]) -> bool {
    fn go(t: &[i64], gens: &[Vec<i64>], g: &[i64], start: usize, memo: &mut BTreeSet<(Vec<i64>, usize)>) -> bool {
        if t.iter().all(|&x| x == 0) {
            return true;
        }
        if dot(t, g) <= 0 || memo.contains(&(t.to_vec(), start)) {
            return false;
        }
        for (i, h) in gens.iter().enumerate().skip(start) {
            let rest: Vec<i64> = t.iter().zip(h).map(|(a, b)| a - b).collect();
            if go(&rest, gens, g, i, memo) {
                return true;
            }
        }
        memo.insert((t.to_vec(), start));
        false
    }
    go(target, gens, grading, 0, &mut BTreeSet::new())
}

/// Tensor polynomials as maps from exponent pairs to integer coefficients.
pub type PlainTensor = BTreeMap<(Vec<i64>, Vec<i64>), BigInt>;

fn plain_mul(a: &PlainTensor, b: &PlainTensor) -> PlainTensor {
    let mut out = PlainTensor::new();
    for ((l1, r1), c1) in a {
        for ((l2, r2), c2) in b {
            let l: Vec<i64> = l1.iter().zip(l2).map(|(x, y)| x + y).collect();
            let r: Vec<i64> = r1.iter().zip(r2).map(|(x, y)| x + y).collect();
            *out.entry((l, r)).or_insert_with(BigInt::zero) += c1 * c2;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `χ^u ⊗ χ^u · ∏_r (1 ⊗ χ^{e_1^{(r)}} + χ^{e_2^{(r)}} ⊗ 1)^{<p_r, u>}`, expanded
/// by repeated multiplication.
pub fn delta_by_product(u: &[i64], face_rays: &[Vec<i64>], e1: &[Vec<i64>], e2: &[Vec<i64>]) -> PlainTensor {
    let n = u.len();
    let zero = vec![0; n];
    let mut acc = PlainTensor::new();
    acc.insert((u.to_vec(), u.to_vec()), BigInt::one());
    for r in 0..face_rays.len() {
        let mut factor = PlainTensor::new();
        factor.insert((zero.clone(), e1[r].clone()), BigInt::one());
        *factor.entry((e2[r].clone(), zero.clone())).or_insert_with(BigInt::zero) += BigInt::one();
        for _ in 0..dot(&face_rays[r], u) {
            acc = plain_mul(&acc, &factor);
        }
    }
    acc
}

pub fn random_rational(rng: &mut ChaCha8Rng, nonzero: bool) -> Rational {
    loop {
        let n = rng.gen_range(-9..=9);
        let d = rng.gen_range(1..=6);
        if !nonzero || n != 0 {
            return Rational::new(BigInt::from(n), BigInt::from(d));
        }
    }
}

/// Number of permutations `π` with `C[π(i)][π(j)] = C[i][j]`, found by
/// backtracking over partial assignments and pruning on node degree.
pub fn graph_automorphism_count(cartan: &[Vec<i64>]) -> usize {
    let r = cartan.len();
    let deg: Vec<usize> = (0..r).map(|i| (0..r).filter(|&j| j != i && cartan[i][j] != 0).count()).collect();
    fn extend(c: &[Vec<i64>], deg: &[usize], image: &mut Vec<usize>, used: &mut Vec<bool>) -> usize {
        let i = image.len();
        if i == c.len() {
            return 1;
        }
        let mut total = 0;
        for t in 0..c.len() {
            if used[t] || deg[t] != deg[i] {
                continue;
            }
            if (0..i).all(|j| c[t][image[j]] == c[i][j] && c[image[j]][t] == c[j][i]) {
                image.push(t);
                used[t] = true;
                total += extend(c, deg, image, used);
                used[t] = false;
                image.pop();
            }
        }
        total
    }
    extend(cartan, &deg, &mut vec![], &mut vec![false; r])
}

/// Cartan matrix of `A_r` (a path) or `D_r` (a path with a fork at the end).
pub fn cartan_oracle(kind: char, r: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0; r]; r];
    let mut link = |i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match kind {
        'A' => (0..r - 1).for_each(|i| link(i, i + 1)),
        'D' => {
            (0..r - 2).for_each(|i| link(i, i + 1));
            link(r - 3, r - 1);
        }
        _ => panic!("no oracle for {kind}"),
    }
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    c
}

pub fn det(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> =
                    m[1..].iter().map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect()).collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

/// `A u` for `A` given by rows.
pub fn apply(m: &[Vec<i64>], u: &[i64]) -> Vec<i64> {
    m.iter().map(|row| dot(row, u)).collect()
}
