//! Coalescing adjacent branch points on both sides of a paired cover and
//! following the genus of the smaller fiber product component.

use fibercover::catalog;
use fibercover::fiber::{genus_method1, tensor_components};
use fibercover::nielsen::coalesce_cover;
use fibercover::PairedCover;

fn component_genera(pc: &PairedCover) -> fibercover::Result<Vec<(usize, u64)>> {
    tensor_components(pc)
        .iter()
        .map(|c| Ok((c.deg_z, genus_method1(pc, c)?)))
        .collect()
}

fn main() -> fibercover::Result<()> {
    for j in [1, 2] {
        let src = catalog::coalescing_source(j)?;
        let (merged, restricted) = coalesce_cover(&src, catalog::coalescing_position(j))?;
        let cycles: Vec<String> = merged.cycles().iter().map(|c| c.to_string()).collect();
        println!("source {j} -> {}  restricted {restricted}", cycles.join(", "));
    }
    let mut pc = catalog::c_2_6_pair()?;
    println!("{} branch points: components {:?}", pc.branch_points().len(), component_genera(&pc)?);
    for at in [5, 4, 2] {
        let (s, _) = coalesce_cover(pc.sigma(), at)?;
        let (t, _) = coalesce_cover(pc.tau(), at)?;
        pc = PairedCover::new(s, t)?;
        println!(
            "merge at {at}: {} branch points, components {:?}",
            pc.branch_points().len(),
            component_genera(&pc)?
        );
    }
    Ok(())
}
