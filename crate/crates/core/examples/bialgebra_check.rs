//! Checks closure, coassociativity and the counit axiom on generator products.

use toric_monoids::cones::{ConeSpec, FaceSpec};
use toric_monoids::demazure::CollectionSpec;
use toric_monoids::lattice::LatticeVector;
use toric_monoids::root_monoid::MonoidSpec;

fn v(c: &[i64]) -> LatticeVector {
    LatticeVector::new(c.to_vec())
}

fn main() -> toric_monoids::Result<()> {
    let bundles = [
        (
            "orthant Z^2, e1=(-1,0), e2=(-1,1)",
            ConeSpec { rank: 2, rays: vec![v(&[1, 0]), v(&[0, 1])] },
            vec![v(&[-1, 0])],
            vec![v(&[-1, 1])],
        ),
        (
            "orthant Z^3, e1=(-1,0,0), e2=(-1,1,1)",
            ConeSpec { rank: 3, rays: vec![v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])] },
            vec![v(&[-1, 0, 0])],
            vec![v(&[-1, 1, 1])],
        ),
    ];
    for (name, cone, e1, e2) in bundles {
        let spec = MonoidSpec {
            cone,
            collection: CollectionSpec { face: FaceSpec::Indices { ray_indices: vec![0] }, e1, e2 },
        };
        let x = spec.build()?;
        let r = x.verify_bialgebra(3);
        println!("{name}");
        println!("  elements checked: {}", r.elements);
        println!("  closure {}  coassoc {}  counit {}  multiplicative {}", r.closure.pass, r.coassoc.pass, r.counit.pass, r.multiplicative.pass);
        println!("  all pass: {}", r.all_pass());
    }
    Ok(())
}
