//! Genus of fiber products `W x_{P^1_y} g1` as `g1` runs through towers of
//! covers of the y-line branched over the branch points of `prW`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::catalog::{reflection, translation};
use crate::cover::Cover;
use crate::error::{Error, Result};
use crate::fiber::{fiber_of_covers, screen_g1};
use crate::perm::Permutation;

/// Families of `g1` placed on branch points of `prW`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum G1Family {
    /// Chebychev covers `(s_0, s_1, x -> x - 1)` of degree `d`, in any
    /// cyclic rotation, on three branch points of `prW` in label order.
    Dihedral,
    /// `(rho, rho^-1)` with `rho` a `d`-cycle, on two branch points.
    Cyclic,
}

impl FromStr for G1Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dihedral" => Ok(G1Family::Dihedral),
            "cyclic" => Ok(G1Family::Cyclic),
            _ => Err(Error::Parse(format!("unknown g1 family {s:?}"))),
        }
    }
}

impl fmt::Display for G1Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            G1Family::Dihedral => "dihedral",
            G1Family::Cyclic => "cyclic",
        })
    }
}

/// Every member of `family` of degree `d` supported on the labels of `prw`.
pub fn placements(prw: &Cover, family: G1Family, d: usize) -> Result<Vec<Cover>> {
    if d < 2 {
        return Err(Error::Input(format!("g1 degree must be at least 2, got {d}")));
    }
    let labels = prw.branch_points();
    let s = labels.len();
    let mut out = Vec::new();
    match family {
        G1Family::Cyclic => {
            let rho = Permutation::from_cycles(d, &[(1..=d).collect()])?;
            for a in 0..s {
                for b in a + 1..s {
                    out.push(Cover::new(
                        d,
                        vec![labels[a].clone(), labels[b].clone()],
                        vec![rho.clone(), rho.inverse()],
                    )?);
                }
            }
        }
        G1Family::Dihedral => {
            let base = [reflection(d, 0), reflection(d, 1), translation(d, -1)];
            for a in 0..s {
                for b in a + 1..s {
                    for c in b + 1..s {
                        for rot in 0..3 {
                            let cyc: Vec<Permutation> = (0..3).map(|i| base[(i + rot) % 3].clone()).collect();
                            let l = vec![labels[a].clone(), labels[b].clone(), labels[c].clone()];
                            let g1 = Cover::new_dropping_identities(d, l, cyc)?;
                            if !out.contains(&g1) {
                                out.push(g1);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Fiber product data for one placement.
#[derive(Clone, Debug, Serialize)]
pub struct PlacementResult {
    pub g1: Vec<(String, String)>,
    /// `(degree over z, genus)` per component.
    pub components: Vec<(usize, u64)>,
    pub screen_flagged: bool,
}

impl PlacementResult {
    pub fn irreducible(&self) -> bool {
        self.components.len() == 1
    }

    /// Irreducible and clear of the screening flags that depend on `g1`.
    pub fn unflagged(&self) -> bool {
        self.irreducible() && !self.screen_flagged
    }

    pub fn min_genus(&self) -> u64 {
        self.components.iter().map(|c| c.1).min().unwrap_or(0)
    }
}

/// One degree of a growth table.
#[derive(Clone, Debug, Serialize)]
pub struct GrowthRow {
    pub degree: usize,
    pub placements: Vec<PlacementResult>,
    /// Some placement yields a genus-0 component.
    pub has_genus0_component: bool,
    /// Least component genus over unflagged placements.
    pub min_unflagged_genus: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GrowthTable {
    pub family: G1Family,
    pub prw_degree: usize,
    /// Galois closure of `prW` has genus at most 1.
    pub fail2a: bool,
    pub rows: Vec<GrowthRow>,
}

impl GrowthTable {
    /// Minimum unflagged genus strictly increases from row to row.
    pub fn strictly_increasing(&self) -> bool {
        let v: Vec<Option<u64>> = self.rows.iter().map(|r| r.min_unflagged_genus).collect();
        v.iter().all(|x| x.is_some()) && v.windows(2).all(|w| w[0] < w[1])
    }

    pub fn genus0_at_every_degree(&self) -> bool {
        self.rows.iter().all(|r| r.has_genus0_component)
    }
}

/// Growth table for `g1` of degrees `2..=max_degree`.
pub fn growth_table(prw: &Cover, family: G1Family, max_degree: usize) -> Result<GrowthTable> {
    let mut rows = Vec::new();
    let mut fail2a = false;
    for d in 2..=max_degree {
        let mut results = Vec::new();
        for g1 in placements(prw, family, d)? {
            let comps = fiber_of_covers(prw, &g1)?;
            let screen = screen_g1(prw, &g1, None)?;
            fail2a = screen.fail2a;
            results.push(PlacementResult {
                g1: g1
                    .branch_points()
                    .iter()
                    .zip(g1.cycles())
                    .map(|(l, c)| (l.clone(), c.to_string()))
                    .collect(),
                components: comps,
                screen_flagged: screen.fail2b || screen.fail2c,
            });
        }
        let has_genus0_component = results.iter().any(|r| r.components.iter().any(|c| c.1 == 0));
        let min_unflagged_genus = results.iter().filter(|r| r.unflagged()).map(|r| r.min_genus()).min();
        rows.push(GrowthRow {
            degree: d,
            placements: results,
            has_genus0_component,
            min_unflagged_genus,
        });
    }
    Ok(GrowthTable {
        family,
        prw_degree: prw.degree(),
        fail2a,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn placements_are_valid_covers() {
        let prw = Cover::parse(3, &["a", "b", "c"], &["(1 2)", "(2 3)", "(1 2 3)"]).unwrap();
        for fam in [G1Family::Cyclic, G1Family::Dihedral] {
            for d in 2..6 {
                for g in placements(&prw, fam, d).unwrap() {
                    assert!(g.validate().is_valid(), "{g:?}");
                    assert_eq!(g.genus().unwrap(), 0);
                }
            }
        }
    }

    #[test]
    fn family_parse() {
        assert_eq!("cyclic".parse::<G1Family>().unwrap(), G1Family::Cyclic);
        assert!("x".parse::<G1Family>().is_err());
    }
}
