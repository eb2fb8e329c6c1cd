//! The unit group `G_a^k ⋊ T` of a root monoid and multiplication of points.

use toric_monoids::cones::Cone;
use toric_monoids::demazure::make_compatible_collection;
use toric_monoids::lattice::LatticeVector;
use toric_monoids::rational::{format, rat};
use toric_monoids::root_monoid::{MonoidPoint, RootMonoid};

fn show(p: &MonoidPoint) -> String {
    match p {
        MonoidPoint::Primitive { alpha, t } => {
            let a: Vec<String> = alpha.iter().map(format).collect();
            let t: Vec<String> = t.iter().map(format).collect();
            format!("(α=({}), t=({}))", a.join(", "), t.join(", "))
        }
        other => format!("{other:?}"),
    }
}

fn main() -> toric_monoids::Result<()> {
    let sigma = Cone::in_n(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])?;
    let tau = sigma.face(&[0])?;
    let e = make_compatible_collection(
        &sigma,
        &tau,
        vec![LatticeVector::new(vec![-1, 0, 0])],
        vec![LatticeVector::new(vec![-1, 1, 1])],
    )?;
    let x = RootMonoid::build(sigma, e)?;
    let g = x.unit_group()?;
    println!("k = {}, torus rank = {}, active = {}", g.k, g.torus_rank, g.active);
    println!("character matrix {:?}", g.char_matrix);
    println!("center: dimension {}, torsion {:?}", g.center.dimension, g.center.torsion);

    let a = MonoidPoint::Primitive { alpha: vec![rat(1)], t: vec![rat(2), rat(3)] };
    let b = MonoidPoint::Primitive { alpha: vec![rat(1)], t: vec![rat(1), rat(1)] };
    println!("{} · {} = {}", show(&a), show(&b), show(&x.point_multiply(&a, &b)?));
    Ok(())
}
