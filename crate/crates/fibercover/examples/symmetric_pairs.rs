//! The standard action of S_m paired with its action on unordered pairs.

use fibercover::catalog::build_sm_pair;
use fibercover::fiber::{genus_method1, tensor_components};

fn main() -> fibercover::Result<()> {
    for m in [5, 6, 7, 8, 9] {
        let pc = build_sm_pair(m)?;
        let mut parts = Vec::new();
        for c in tensor_components(&pc) {
            parts.push(format!("(deg_z {}, k {}, genus {})", c.deg_z, c.k, genus_method1(&pc, &c)?));
        }
        println!("m = {m}: {}", parts.join(" "));
    }
    Ok(())
}
