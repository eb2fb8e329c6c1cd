mod common;

use common::*;
use proptest::prelude::*;
use toric_monoids::automorphisms::{enumerate_outer, is_in_aut_t_chi, restrict_to_face_lattice};
use toric_monoids::cones::Cone;
use toric_monoids::demazure::{enumerate_demazure_roots, DemazureRoot, Derivation};
use toric_monoids::lattice::{extend_to_basis, integer_kernel, smith_normal_form, IntMatrix, LatticeVector};
use toric_monoids::laurent::{LaurentPoly, TensorPoly};
use toric_monoids::matrix_group::MatrixGroup;
use toric_monoids::rational::{rat, Rational};
use toric_monoids::root_monoid::{MonoidPoint, RootMonoid};

fn monoids() -> Vec<RootMonoid> {
    vec![re1(), re2(), re_torsion()]
}

fn semigroup_element(x: &RootMonoid, raw: &[i64]) -> LatticeVector {
    // Fold an arbitrary vector into S_σ of an orthant.
    v(&raw[..x.rank()].iter().map(|c| c.abs()).collect::<Vec<_>>())
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-7i64..=7, 1i64..=5).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("nonzero", |q| *q != rat(0))
}

fn primitive_point(k: usize, t: usize) -> impl Strategy<Value = MonoidPoint> {
    (prop::collection::vec(small_rational(), k), prop::collection::vec(nonzero_rational(), t))
        .prop_map(|(alpha, t)| MonoidPoint::Primitive { alpha, t })
}

fn counit_left(x: &RootMonoid, d: &TensorPoly) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for ([l, r], c) in d.terms() {
        out.add_term(r.clone(), c * x.counit(l).unwrap());
    }
    out
}

fn counit_right(x: &RootMonoid, d: &TensorPoly) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for ([l, r], c) in d.terms() {
        out.add_term(l.clone(), c * x.counit(r).unwrap());
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn comultiplication_is_multiplicative(which in 0usize..3, a in prop::collection::vec(0i64..=4, 3), b in prop::collection::vec(0i64..=4, 3)) {
        let x = &monoids()[which];
        let (u, w) = (semigroup_element(x, &a), semigroup_element(x, &b));
        let lhs = x.comultiply(&(&u + &w)).unwrap();
        let rhs = x.comultiply(&u).unwrap().tensor_multiply(&x.comultiply(&w).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn comultiplication_matches_product_expansion(which in 0usize..3, a in prop::collection::vec(0i64..=5, 3)) {
        let x = &monoids()[which];
        let u = semigroup_element(x, &a);
        let c = x.collection();
        let rays: Vec<Vec<i64>> = c.face_rays.iter().map(|p| p.0.clone()).collect();
        let e1: Vec<Vec<i64>> = c.e1.iter().map(|r| r.e.0.clone()).collect();
        let e2: Vec<Vec<i64>> = c.e2.iter().map(|r| r.e.0.clone()).collect();
        let oracle = delta_by_product(&u.0, &rays, &e1, &e2);
        let got: PlainTensor = x
            .comultiply(&u)
            .unwrap()
            .terms()
            .map(|([l, r], q)| ((l.0.clone(), r.0.clone()), q.to_integer()))
            .collect();
        prop_assert_eq!(got, oracle);
    }

    #[test]
    fn counit_is_a_two_sided_unit(which in 0usize..3, a in prop::collection::vec(0i64..=4, 3)) {
        let x = &monoids()[which];
        let u = semigroup_element(x, &a);
        let d = x.comultiply(&u).unwrap();
        prop_assert_eq!(counit_left(x, &d), LaurentPoly::monomial(u.clone()));
        prop_assert_eq!(counit_right(x, &d), LaurentPoly::monomial(u));
    }

    #[test]
    fn point_multiplication_is_associative(
        p in primitive_point(1, 2),
        q in primitive_point(1, 2),
        r in primitive_point(1, 2),
    ) {
        let x = re2();
        let left = x.point_multiply(&x.point_multiply(&p, &q).unwrap(), &r).unwrap();
        let right = x.point_multiply(&p, &x.point_multiply(&q, &r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn identity_point_is_neutral(p in primitive_point(1, 1)) {
        let x = re1();
        let e = x.identity_point();
        prop_assert_eq!(x.point_multiply(&e, &p).unwrap(), p.clone());
        prop_assert_eq!(x.point_multiply(&p, &e).unwrap(), p);
    }

    #[test]
    fn derivations_satisfy_leibniz(seed in any::<u64>(), a in prop::collection::vec(0i64..=3, 3), b in prop::collection::vec(0i64..=3, 3)) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let sigma = random_cone(&mut rng);
        let rays = sigma.extreme_rays().unwrap();
        let families = enumerate_demazure_roots(&sigma, 2).unwrap();
        let Some(f) = families.iter().find(|f| !f.roots.is_empty()) else { return Ok(()) };
        let e = f.roots.choose(&mut rng).unwrap().clone();
        let delta = Derivation::new(&sigma, &DemazureRoot::new(&sigma, e, f.ray_index).unwrap()).unwrap();
        let pts = dual_points(&rays, 3);
        let m1 = &pts[(a.iter().sum::<i64>() as usize * 7 + 1) % pts.len()];
        let m2 = &pts[(b.iter().sum::<i64>() as usize * 11 + 3) % pts.len()];
        let g = LaurentPoly::monomial(v(m1)).add(&LaurentPoly::term(v(m2), rat(3)));
        let h = LaurentPoly::term(v(m2), rat(-2));
        let lhs = delta.apply(&g.multiply(&h)).unwrap();
        let rhs = delta.apply(&g).unwrap().multiply(&h).add(&g.multiply(&delta.apply(&h).unwrap()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn double_dual_returns_the_cone(seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let c = random_cone(&mut rng);
        let back = c.dual_cone().unwrap().dual_cone().unwrap();
        prop_assert_eq!(back.extreme_rays().unwrap(), c.extreme_rays().unwrap());
    }

    #[test]
    fn extended_bases_are_unimodular_and_dual(a in -4i64..=4, b in -4i64..=4, c in -4i64..=4) {
        let w = v(&[a, b, c]);
        prop_assume!(!w.is_zero() && w.content() == 1);
        let basis = extend_to_basis(3, std::slice::from_ref(&w)).unwrap();
        prop_assert_eq!(&basis.primal[0], &w);
        let m = IntMatrix::from_columns(3, &basis.primal);
        prop_assert!(m.is_unimodular());
        for (i, q) in basis.dual.iter().enumerate() {
            for (j, p) in basis.primal.iter().enumerate() {
                prop_assert_eq!(dot(&q.0, &p.0), i64::from(i == j));
            }
        }
    }

    #[test]
    fn integer_kernels_are_annihilated(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 1..=3)) {
        let rows: Vec<LatticeVector> = rows.into_iter().map(LatticeVector::new).collect();
        let kernel = integer_kernel(4, &rows).unwrap();
        let rank = IntMatrix::from_rows(rows.iter().map(|r| r.0.clone()).collect()).unwrap().rank();
        prop_assert_eq!(kernel.len(), 4 - rank);
        for k in &kernel {
            for r in &rows {
                prop_assert_eq!(dot(&k.0, &r.0), 0);
            }
        }
    }
}

/// Solutions of `C a ≡ 0 (mod modulus)` with `a ∈ (ℤ/modulus)^cols`.
fn torsion_points(c: &IntMatrix, modulus: i64) -> usize {
    box_points(c.ncols(), modulus)
        .into_iter()
        .filter(|a| a.iter().all(|&x| (0..modulus).contains(&x)))
        .filter(|a| (0..c.nrows()).all(|r| dot(c.row(r), a).rem_euclid(modulus) == 0))
        .count()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn center_matches_torsion_point_count() {
    for x in monoids() {
        let g = x.unit_group().unwrap();
        for modulus in 2i64..=6 {
            let predicted = modulus.pow(g.center.dimension as u32) as usize
                * g.center.torsion.iter().map(|&d| gcd(d, modulus) as usize).product::<usize>();
            assert_eq!(torsion_points(&g.char_matrix, modulus), predicted, "{:?} mod {modulus}", g.char_matrix);
        }
    }
    assert_eq!(re_torsion().unit_group().unwrap().center.torsion, vec![2]);
}

#[test]
fn smith_form_divisibility_chain() {
    let m = IntMatrix::from_rows(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]).unwrap();
    let d = smith_normal_form(&m).unwrap().invariant_factors();
    assert_eq!(d, vec![2, 6, 12]);
    assert!(d.windows(2).all(|w| w[1] % w[0] == 0));
}

#[test]
fn outer_groups_are_closed_and_fix_characters() {
    for x in [re1(), re2()] {
        let outer = enumerate_outer(&x, 2).unwrap();
        let group = MatrixGroup::new(outer.elements.clone()).unwrap();
        for (i, a) in outer.elements.iter().enumerate() {
            for b in &outer.elements {
                assert!(outer.elements.contains(&a.mul(b).unwrap()));
            }
            assert!(outer.elements.contains(&a.inverse().unwrap()));
            let restricted = restrict_to_face_lattice(&x, a).unwrap().unwrap();
            assert!(is_in_aut_t_chi(&x, &restricted).unwrap());
            assert!(group.element_order(i) <= outer.elements.len());
        }
    }
}

#[test]
fn non_full_dimensional_search_is_flagged() {
    let sigma = Cone::in_n(2, &[&[1, 0]]).unwrap();
    let tau = sigma.face(&[0]).unwrap();
    let e = toric_monoids::demazure::make_compatible_collection(&sigma, &tau, vec![v(&[-1, 0])], vec![v(&[-1, 1])]).unwrap();
    let x = RootMonoid::build(sigma, e).unwrap();
    let outer = enumerate_outer(&x, 2).unwrap();
    assert!(!outer.complete);
    assert!(outer.elements.contains(&IntMatrix::identity(2)));
}
