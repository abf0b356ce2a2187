//! Fixed-point comparisons between two actions of one group, and the
//! multipliers of an n-cycle class.

use fibercover::catalog;
use fibercover::cover::{character_entanglement, multipliers};
use fibercover::{GeneratedGroup, Permutation};

fn main() -> fibercover::Result<()> {
    let pc = catalog::deg7_pair(1)?;
    let e = character_entanglement(pc.sigma().cycles(), pc.tau().cycles())?;
    println!("points vs lines: {e:?}");
    let s5 = [Permutation::parse("(1 2)", 5)?, Permutation::parse("(1 2 3 4 5)", 5)?];
    let pairs: Vec<Permutation> = s5.iter().map(catalog::action_on_pairs).collect();
    println!("S_5 letters vs pairs: {:?}", character_entanglement(&s5, &pairs)?);
    let g = catalog::deg7_group(1)?;
    println!("multipliers of the 7-cycle in the degree-7 group: {:?}", multipliers(&g, &catalog::sigma_infinity())?);
    let s7 = GeneratedGroup::symmetric(7);
    println!("multipliers of the 7-cycle in S_7: {:?}", multipliers(&s7, &catalog::sigma_infinity())?);
    Ok(())
}
