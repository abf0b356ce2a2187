//! Components of the fiber product for the two degree-7 pairs and their
//! genera by both Riemann-Hurwitz routes.

use fibercover::catalog;
use fibercover::fiber::{fiber_report, ramification_profile};

fn main() -> fibercover::Result<()> {
    for key in ["deg7-pair-1", "deg7-pair-2", "deg7-pair-inf.2^3", "deg7-pair-2^6", "d4-t4-pair"] {
        let pc = catalog::get_pair(key)?;
        let r = fiber_report(&pc)?;
        println!("{key}: joint group order {}", r.group_order);
        for c in &r.components {
            println!(
                "  deg_z {:>2}  J {:?}  I {:?}  genus {} / {}  subgroup index {}",
                c.deg_z, c.j, c.i, c.genus_m1, c.genus_m2, c.subgroup_index
            );
        }
    }
    let pc = catalog::deg7_pair(1)?;
    println!("ramification over the points of deg7-pair-1:");
    for rp in ramification_profile(&pc) {
        println!("  {:?}", rp);
    }
    Ok(())
}
