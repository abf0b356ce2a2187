//! Genus, Galois-closure genus and orbifold characteristic of a few covers
//! given by branch cycles.

use fibercover::catalog;
use fibercover::Cover;

fn show(name: &str, c: &Cover) -> fibercover::Result<()> {
    println!(
        "{name:<22} degree {:>2}  index sum {:>3}  genus {}  group order {:>5}  galois genus {:>3}  ochar {}",
        c.degree(),
        c.index_sum(),
        c.genus()?,
        c.group()?.order(),
        c.galois_closure_genus()?,
        c.orbifold_char()?
    );
    Ok(())
}

fn main() -> fibercover::Result<()> {
    show("deg7-cover-1", &catalog::deg7_sigma(1)?)?;
    show("deg7-cover-2", &catalog::deg7_sigma(2)?)?;
    let quartic = Cover::parse(4, &["a", "b", "c"], &["(1 2)", "(2 3 4)", "(1 2 4 3)"])?;
    show("quartic", &quartic)?;
    show("dihedral-7-2^4", &catalog::get_cover("dihedral-7-2^4")?)?;
    show("chebychev-7", &catalog::get_cover("dihedral-7-2^2.n")?)?;
    Ok(())
}
