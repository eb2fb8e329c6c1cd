//! The comultiplication Δ and counit ε of a root monoid on a few characters.

use toric_monoids::cones::Cone;
use toric_monoids::demazure::make_compatible_collection;
use toric_monoids::lattice::LatticeVector;
use toric_monoids::root_monoid::RootMonoid;

fn main() -> toric_monoids::Result<()> {
    let sigma = Cone::in_n(2, &[&[1, 0], &[0, 1]])?;
    let tau = sigma.face(&[0])?;
    let e = make_compatible_collection(
        &sigma,
        &tau,
        vec![LatticeVector::new(vec![-1, 0])],
        vec![LatticeVector::new(vec![-1, 1])],
    )?;
    let x = RootMonoid::build(sigma, e)?;
    for u in [[1, 0], [0, 1], [2, 0], [1, 1], [3, 2]] {
        let u = LatticeVector::new(u.to_vec());
        println!("Δ(χ^{u}) = {}", x.comultiply(&u)?);
        println!("ε(χ^{u}) = {}", x.counit(&u)?);
    }
    Ok(())
}
