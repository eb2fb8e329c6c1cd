//! Dual cones and Hilbert bases of the semigroups `σ∨ ∩ M`.

use toric_monoids::cones::Cone;

fn main() -> toric_monoids::Result<()> {
    let examples = [
        Cone::in_m(2, &[&[0, 1], &[2, -1]])?,
        Cone::in_n(2, &[&[1, 0], &[1, 3]])?.dual_cone()?,
        Cone::in_n(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 2]])?.dual_cone()?,
    ];
    for c in &examples {
        let rays: Vec<String> = c.extreme_rays()?.iter().map(|r| r.to_string()).collect();
        let hb = c.hilbert_basis_auto()?;
        let elems: Vec<String> = hb.elements.iter().map(|r| r.to_string()).collect();
        println!("cone {}", rays.join(" "));
        println!("  dual rays    {}", c.dual_cone()?.extreme_rays()?.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(" "));
        println!("  hilbert      {}", elems.join(" "));
    }
    Ok(())
}
