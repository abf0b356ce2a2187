//! Branch cycles of a fiber product component over the y-line, computed
//! from the joint monodromy.

use fibercover::catalog;
use fibercover::fiber::{pry_branch_cycles, tensor_components};

fn main() -> fibercover::Result<()> {
    for j in [1, 2] {
        let pc = catalog::deg7_pair(j)?;
        for (i, comp) in tensor_components(&pc).iter().enumerate() {
            let pry = pry_branch_cycles(&pc, comp)?;
            let cycles: Vec<String> = pry.cycles().iter().map(|c| c.to_string()).collect();
            println!(
                "pair {j} component {}: degree {} group order {} galois genus {} ochar {}",
                i + 1,
                pry.degree(),
                pry.group()?.order(),
                pry.galois_closure_genus()?,
                pry.orbifold_char()?
            );
            for (l, c) in pry.branch_points().iter().zip(cycles) {
                println!("    {l:<10} {c}");
            }
        }
    }
    Ok(())
}
