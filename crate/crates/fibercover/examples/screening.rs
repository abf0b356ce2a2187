//! Screening a composition of a projection cover with a genus-0 cover of
//! the y-line, then tabulating genus as the degree of that cover grows.

use fibercover::catalog::{self, build_dihedral, DihedralClasses};
use fibercover::fiber::{pry_branch_cycles, screen_g1, tensor_components};
use fibercover::growth::{growth_table, G1Family};

fn main() -> fibercover::Result<()> {
    let pc = catalog::deg7_pair(2)?;
    let comps = tensor_components(&pc);
    for (i, comp) in comps.iter().enumerate() {
        let prw = pry_branch_cycles(&pc, comp)?;
        let g1 = build_dihedral(3, DihedralClasses::TwoTwoN)?;
        let g1 = fibercover::Cover::new(3, prw.branch_points()[..3].to_vec(), g1.cycles().to_vec())?;
        let r = screen_g1(&prw, &g1, None)?;
        println!(
            "component {}: ochar {} fail2a {} fail2b {} fail2c {} ({})",
            i + 1,
            r.ochar,
            r.fail2a,
            r.fail2b,
            r.fail2c,
            r.dec_var
        );
        let t = growth_table(&prw, G1Family::Dihedral, 6)?;
        for row in &t.rows {
            println!(
                "  d {}  genus-0 component {:<5}  least unflagged genus {:?}",
                row.degree, row.has_genus0_component, row.min_unflagged_genus
            );
        }
    }
    Ok(())
}
