//! Orbits, block systems, coset actions and normalizers of small
//! permutation groups.

use fibercover::{GeneratedGroup, Permutation};

fn main() -> fibercover::Result<()> {
    let d4 = GeneratedGroup::dihedral(4);
    println!("D_4 order {}", d4.order());
    for bs in d4.block_systems()? {
        println!("  blocks {:?}", bs.blocks);
    }
    let s4 = GeneratedGroup::symmetric(4);
    let h = GeneratedGroup::new(4, vec![Permutation::parse("(1 2)(3 4)", 4)?])?;
    let action = s4.coset_action(&h)?;
    println!("S_4 on cosets of a double transposition: index {}", action.index);
    let a5 = GeneratedGroup::alternating(5);
    let x = Permutation::parse("(1 2 3 4 5)", 5)?;
    println!(
        "A_5 order {}, class of (1 2 3 4 5) has {} elements, normalizer in S_5 has order {}",
        a5.order(),
        a5.conjugacy_class(&x)?.len(),
        a5.normalizer_in_symmetric()?.order()
    );
    Ok(())
}
