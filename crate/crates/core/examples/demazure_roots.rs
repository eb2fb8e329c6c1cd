//! Lists the Demazure roots of a few cones inside a box and flags which ray
//! families are finite.

use toric_monoids::cones::Cone;
use toric_monoids::demazure::enumerate_demazure_roots;

fn main() -> toric_monoids::Result<()> {
    let cones = [
        ("orthant Z^2", Cone::in_n(2, &[&[1, 0], &[0, 1]])?),
        ("cone((0,1),(2,-1))", Cone::in_n(2, &[&[0, 1], &[2, -1]])?),
        ("orthant Z^3", Cone::in_n(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])?),
    ];
    for (name, sigma) in &cones {
        println!("{name}");
        for family in enumerate_demazure_roots(sigma, 2)? {
            let roots: Vec<String> = family.roots.iter().map(|e| e.to_string()).collect();
            println!(
                "  ray {} {}  finite={}  {} roots in box: {}",
                family.ray_index,
                family.ray,
                family.finite,
                roots.len(),
                roots.join(" ")
            );
        }
    }
    Ok(())
}
