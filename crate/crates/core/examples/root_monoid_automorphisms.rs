//! Inner and outer parts of the automorphism group of a root monoid.

use toric_monoids::automorphisms::{aut_report, DEFAULT_OUTER_BOUND};
use toric_monoids::cones::Cone;
use toric_monoids::demazure::make_compatible_collection;
use toric_monoids::lattice::LatticeVector;
use toric_monoids::root_monoid::RootMonoid;

fn v(c: &[i64]) -> LatticeVector {
    LatticeVector::new(c.to_vec())
}

fn main() -> toric_monoids::Result<()> {
    let z2 = Cone::in_n(2, &[&[1, 0], &[0, 1]])?;
    let z3 = Cone::in_n(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])?;
    let cases = [
        ("Z^2 orthant", z2, vec![v(&[-1, 0])], vec![v(&[-1, 1])]),
        ("Z^3 orthant", z3, vec![v(&[-1, 0, 0])], vec![v(&[-1, 1, 1])]),
    ];
    for (name, sigma, e1, e2) in cases {
        let tau = sigma.face(&[0])?;
        let x = RootMonoid::build(sigma.clone(), make_compatible_collection(&sigma, &tau, e1, e2)?)?;
        let r = aut_report(&x, DEFAULT_OUTER_BOUND)?;
        println!("{name}");
        println!("  inner  {}", r.inner.description);
        println!(
            "  outer  order {} ({}), complete {}, verified {}",
            r.outer.order, r.outer.isomorphism_type, r.outer.complete, r.outer.verified
        );
        for a in &r.outer.elements {
            println!("    {:?}", a);
        }
    }
    Ok(())
}
