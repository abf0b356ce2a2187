//! Nielsen class enumeration in the three equivalences, braid orbits and
//! the three-point braid action.

use fibercover::catalog;
use fibercover::nielsen::{braid_orbits, enumerate_in_mode, h3_structure, Mode};

fn main() -> fibercover::Result<()> {
    for key in ["class-2.4.7", "class-3.2.7", "class-inf.2.4", "class-2^3.7"] {
        let spec = catalog::get_nielsen(key)?;
        print!("{key:<14}");
        for mode in [Mode::Raw, Mode::Inner, Mode::Absolute] {
            let e = enumerate_in_mode(&spec, mode)?;
            print!("  {mode} {:>5}", e.elements.len());
        }
        println!("  braid orbits {:?}", braid_orbits(&spec)?.lengths());
    }
    let h3 = h3_structure(&catalog::class_2_4_7()?)?;
    println!("three-point braid action on class-2.4.7: {h3:?}");
    let unordered = catalog::class_2_3_7()?.with_ordered(false);
    println!("class-2^3.7 in any order: braid orbits {:?}", braid_orbits(&unordered)?.lengths());
    Ok(())
}
