//! Dihedral covers: four involutions against the Chebychev class, and a
//! degree-4 pair whose fiber product splits.

use fibercover::catalog::{self, build_dihedral, DihedralClasses};
use fibercover::fiber::{detect_clc, tensor_components};

fn main() -> fibercover::Result<()> {
    for n in [3, 4, 5, 6, 7] {
        let a = build_dihedral(n, DihedralClasses::TwoFour)?;
        let b = build_dihedral(n, DihedralClasses::TwoTwoN)?;
        println!(
            "n = {n}: 2^4 galois genus {} ochar {:>4}   2^2.n galois genus {} ochar {}",
            a.galois_closure_genus()?,
            a.orbifold_char()?.to_string(),
            b.galois_closure_genus()?,
            b.orbifold_char()?
        );
    }
    let pc = catalog::d4_pair()?;
    let sizes: Vec<usize> = tensor_components(&pc).iter().map(|c| c.deg_z).collect();
    println!("d4 pair components {sizes:?}");
    let clc = detect_clc(pc.sigma(), pc.sigma())?;
    println!("common left composites of sigma with itself: {:?}", clc.iter().map(|w| w.degree).collect::<Vec<_>>());
    Ok(())
}
