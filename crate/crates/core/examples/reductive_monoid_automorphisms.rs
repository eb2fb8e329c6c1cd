//! Validation of reductive monoid cones and the finite group `Aut(G, D, C)`.

use toric_monoids::reductive::{
    diagram_automorphisms, mat_cone, reductive_aut_report, validate_vinberg_cone, RootDatum, VinbergCone,
};

fn main() -> toric_monoids::Result<()> {
    let cases = [
        ("Mat_2", RootDatum::gl(2), mat_cone(2)),
        ("torus of rank 2", RootDatum::torus(2), VinbergCone::new(2, &[&[1, 0], &[0, 1]])),
        ("SL_3 with cone of coroots", RootDatum::simply_connected('A', 2)?, VinbergCone::new(2, &[&[1, 0], &[0, 1]])),
        ("Sp_4 with cone of coroots", RootDatum::simply_connected('C', 2)?, VinbergCone::new(2, &[&[1, 0], &[0, 1]])),
    ];
    for (name, rd, c) in &cases {
        println!("{name}");
        let v = validate_vinberg_cone(rd, c, 2)?;
        for cond in &v.conditions {
            println!("  {:<24} {}", cond.name, cond.pass);
        }
        if !v.valid {
            continue;
        }
        let r = reductive_aut_report(rd, c, 2)?;
        println!("  inner  {} (|Z| = {})", r.inner.description, r.inner.center_order);
        println!("  outer  order {} ({}), complete {}", r.outer.order, r.outer.isomorphism_type, r.outer.complete);
    }
    for (kind, r) in [('A', 1), ('A', 2), ('A', 3), ('B', 3), ('D', 4), ('D', 5)] {
        let rd = RootDatum::simply_connected(kind, r)?;
        println!("{kind}{r}: {} diagram automorphisms", diagram_automorphisms(&rd)?.len());
    }
    Ok(())
}
