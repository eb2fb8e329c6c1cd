//! The locally nilpotent derivation of a Demazure root and the additive group
//! action it integrates to.

use toric_monoids::cones::Cone;
use toric_monoids::demazure::{DemazureRoot, Derivation};
use toric_monoids::lattice::LatticeVector;
use toric_monoids::laurent::LaurentPoly;
use toric_monoids::rational::{rat, ratio};

fn main() -> toric_monoids::Result<()> {
    let sigma = Cone::in_n(2, &[&[1, 0], &[0, 1]])?;
    let root = DemazureRoot::new(&sigma, LatticeVector::new(vec![-1, 1]), 0)?;
    let delta = Derivation::new(&sigma, &root)?;

    let f = LaurentPoly::monomial(LatticeVector::new(vec![3, 0]));
    println!("f = {f}");
    for q in 1..=4 {
        println!("δ^{q}(f) = {}", delta.power(q, &f)?);
    }

    let s = ratio(1, 2);
    let t = rat(3);
    let lhs = delta.exp_action(&s, &delta.exp_action(&t, &f)?)?;
    let rhs = delta.exp_action(&(s.clone() + t.clone()), &f)?;
    println!("exp(sδ)f with s = 1/2: {}", delta.exp_action(&s, &f)?);
    println!("exp(sδ)exp(tδ) = exp((s+t)δ): {}", lhs == rhs);
    Ok(())
}
