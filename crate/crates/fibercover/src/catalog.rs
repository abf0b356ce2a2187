//! Built-in worked examples: degree-7 pairs, their Nielsen classes and
//! coalescing sources, dihedral and Chebychev covers, the symmetric-group
//! pairs on unordered pairs, and degree metadata.

use serde::Serialize;

use crate::cover::Cover;
use crate::error::{Error, Result};
use crate::fiber::PairedCover;
use crate::group::GeneratedGroup;
use crate::limits;
use crate::nielsen::{NielsenClassSpec, RepresentationMap};
use crate::perm::{self, Permutation};

/// What a catalog key resolves to.
#[derive(Clone, Debug)]
pub enum CatalogItem {
    Cover(Cover),
    Pair(PairedCover),
    Nielsen(NielsenClassSpec),
    Degrees(DavenportDegrees),
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub key: String,
    pub description: String,
    pub item: CatalogItem,
}

impl CatalogEntry {
    /// JSON in the cover, pair or Nielsen spec format, tagged by kind.
    pub fn to_json(&self) -> serde_json::Value {
        let (kind, body) = match &self.item {
            CatalogItem::Cover(c) => ("cover", serde_json::to_value(c.to_json())),
            CatalogItem::Pair(p) => ("pair", serde_json::to_value(p.to_json())),
            CatalogItem::Nielsen(s) => ("nielsen", serde_json::to_value(s.to_json())),
            CatalogItem::Degrees(d) => ("degrees", serde_json::to_value(d)),
        };
        serde_json::json!({
            "key": self.key,
            "kind": kind,
            "description": self.description,
            "data": body.expect("catalog data serializes"),
        })
    }
}

/// Degrees of primitive polynomial covers with a nontrivially reducible
/// fiber product, and the difference sets realizing the smallest ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DavenportDegrees {
    pub degrees: Vec<usize>,
    pub difference_sets: Vec<(usize, Vec<usize>)>,
}

pub fn davenport_degrees() -> DavenportDegrees {
    DavenportDegrees {
        degrees: vec![7, 11, 13, 15, 21, 31],
        difference_sets: vec![(7, vec![1, 2, 4]), (13, vec![1, 2, 4, 10])],
    }
}

fn p(s: &str, n: usize) -> Permutation {
    Permutation::parse(s, n).expect("catalog permutation parses")
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// The 7-cycle `(1 2 3 4 5 6 7)^-1` at infinity.
pub fn sigma_infinity() -> Permutation {
    p("(1 7 6 5 4 3 2)", 7)
}

const DEG7_LABELS: [&str; 3] = ["z1", "z2", "inf"];

/// Points-side branch cycles `_j sigma`, `j = 1, 2`.
pub fn deg7_sigma(j: usize) -> Result<Cover> {
    let s = match j {
        1 => ["(1 3)(4 5)", "(1 4 6 7)(2 3)"],
        2 => ["(1 2 3)(4 5 7)", "(1 4)(6 7)"],
        _ => return Err(Error::UnknownKey(format!("deg7 index {j}"))),
    };
    Cover::new(7, labels(&DEG7_LABELS), vec![p(s[0], 7), p(s[1], 7), sigma_infinity()])
}

/// Lines-side branch cycles `_j tau`, `j = 1, 2`.
pub fn deg7_tau(j: usize) -> Result<Cover> {
    let t = match j {
        1 => ["(1 2)(3 5)", "(1 3 6 7)(4 5)"],
        2 => ["(1 2 7)(3 5 6)", "(3 7)(4 5)"],
        _ => return Err(Error::UnknownKey(format!("deg7 index {j}"))),
    };
    Cover::new(7, labels(&DEG7_LABELS), vec![p(t[0], 7), p(t[1], 7), sigma_infinity()])
}

/// `(_j sigma, _j tau)`.
pub fn deg7_pair(j: usize) -> Result<PairedCover> {
    PairedCover::new(deg7_sigma(j)?, deg7_tau(j)?)
}

/// The order-168 group on points generated by `_j sigma`. Both pairs
/// generate the same subgroup of `S_7` on points.
pub fn deg7_group(j: usize) -> Result<GeneratedGroup> {
    deg7_sigma(j)?.group()
}

/// Points-to-lines isomorphism fixed by pair `j`.
pub fn deg7_points_to_lines(j: usize) -> Result<RepresentationMap> {
    let s = deg7_sigma(j)?;
    let t = deg7_tau(j)?;
    RepresentationMap::new(7, s.cycles(), 7, t.cycles())
}

/// Four-point tuples whose coalescing gives `_j sigma`: entries 2 and 3
/// merge for `j = 1`, entries 1 and 2 for `j = 2`.
pub fn coalescing_source(j: usize) -> Result<Cover> {
    let s = match j {
        1 => ["(1 3)(4 5)", "(1 6)(2 3)", "(4 6)(1 7)"],
        2 => ["(1 3)(4 7)", "(2 3)(5 7)", "(1 4)(6 7)"],
        _ => return Err(Error::UnknownKey(format!("coalescing source {j}"))),
    };
    Cover::new(
        7,
        labels(&["z1", "z2", "z3", "inf"]),
        vec![p(s[0], 7), p(s[1], 7), p(s[2], 7), sigma_infinity()],
    )
}

/// Position merged in [`coalescing_source`].
pub fn coalescing_position(j: usize) -> usize {
    if j == 1 {
        2
    } else {
        1
    }
}

/// Pair built from a points-side cover in the group of pair `j` through
/// that pair's points-to-lines map.
pub fn deg7_pair_from_points(j: usize, c: &Cover) -> Result<PairedCover> {
    PairedCover::new(c.clone(), deg7_points_to_lines(j)?.apply_cover(c)?)
}

/// Involutions `a, b` of the group of pair 2 with `a b = _2 sigma_1` such
/// that `(a, b, _2 sigma_2, sigma_inf)` still generates that group; the
/// least such pair. The printed second source generates `A_7` instead.
pub fn restricted_source_2() -> Result<Cover> {
    let g = deg7_group(2)?;
    let target = deg7_sigma(2)?;
    let inv: Vec<Permutation> = g.elements()?.into_iter().filter(|x| x.order() == 2).collect();
    for a in &inv {
        let b = a.inverse().mul_unchecked(&target.cycles()[0]);
        if b.order() != 2 {
            continue;
        }
        let c = Cover::new(
            7,
            labels(&["z1", "z2", "z3", "inf"]),
            vec![a.clone(), b, target.cycles()[1].clone(), sigma_infinity()],
        )?;
        if c.group()?.order() == g.order() {
            return Ok(c);
        }
    }
    Err(Error::Precondition("no restricted source for pair 2".into()))
}

/// Three involutions and a 7-cycle, paired: the first coalescing source
/// for `j = 1`, [`restricted_source_2`] for `j = 2`.
pub fn c_inf_2_3_pair(j: usize) -> Result<PairedCover> {
    let c = match j {
        1 => coalescing_source(1)?,
        2 => restricted_source_2()?,
        _ => return Err(Error::UnknownKey(format!("deg7 index {j}"))),
    };
    deg7_pair_from_points(j, &c)
}

/// Six involutions: the involutions of the first coalescing source
/// followed by the least involutions `d, e, f` with `d e f = sigma_inf`.
pub fn c_2_6_cover() -> Result<Cover> {
    let g = deg7_group(1)?;
    let inv: Vec<Permutation> = g
        .elements()?
        .into_iter()
        .filter(|x| x.order() == 2)
        .collect();
    let src = coalescing_source(1)?;
    let s_inf = sigma_infinity();
    for d in &inv {
        for e in &inv {
            let f = d.mul_unchecked(e).inverse().mul_unchecked(&s_inf);
            if f.order() == 2 {
                let mut cycles = src.cycles()[..3].to_vec();
                cycles.extend([d.clone(), e.clone(), f]);
                let c = Cover::with_default_labels(7, cycles)?;
                if c.group()?.order() == g.order() {
                    return Ok(c);
                }
            }
        }
    }
    Err(Error::Precondition("no involution factorization of the 7-cycle".into()))
}

pub fn c_2_6_pair() -> Result<PairedCover> {
    deg7_pair_from_points(1, &c_2_6_cover()?)
}

fn deg7_spec(j: usize, classes: Vec<Permutation>, ordered: bool) -> Result<NielsenClassSpec> {
    let g = deg7_group(j)?;
    let t = deg7_tau(j)?;
    NielsenClassSpec::new(g, classes)?
        .with_ordered(ordered)
        .with_second(7, t.cycles().to_vec())
}

/// `C_{2.4.7}`: the classes of `_1 sigma`, any arrangement.
pub fn class_2_4_7() -> Result<NielsenClassSpec> {
    deg7_spec(1, deg7_sigma(1)?.cycles().to_vec(), false)
}

/// `C_{3.2.7}`: the classes of `_2 sigma`, any arrangement.
pub fn class_3_2_7() -> Result<NielsenClassSpec> {
    deg7_spec(2, deg7_sigma(2)?.cycles().to_vec(), false)
}

/// `C_{inf.2.4}`: the classes of `_1 sigma` with the 7-cycle last.
pub fn class_inf_2_4() -> Result<NielsenClassSpec> {
    deg7_spec(1, deg7_sigma(1)?.cycles().to_vec(), true)
}

/// `C_{inf.2.3}`: the classes of `_2 sigma` with the 7-cycle last.
pub fn class_inf_2_3() -> Result<NielsenClassSpec> {
    deg7_spec(2, deg7_sigma(2)?.cycles().to_vec(), true)
}

/// `C_{2^3.7}`: three involutions then the 7-cycle class, in that order.
pub fn class_2_3_7() -> Result<NielsenClassSpec> {
    deg7_spec(1, coalescing_source(1)?.cycles().to_vec(), true)
}

/// `C_{2^6}`: six involutions.
pub fn class_2_6() -> Result<NielsenClassSpec> {
    let t = p("(1 3)(4 5)", 7);
    deg7_spec(1, vec![t; 6], true)
}

/// Action of `x` on unordered pairs `{a < b}` listed lexicographically.
pub fn action_on_pairs(x: &Permutation) -> Permutation {
    let m = x.degree();
    let mut index = vec![vec![0usize; m]; m];
    let mut pairs = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            index[a][b] = pairs.len();
            index[b][a] = pairs.len();
            pairs.push((a, b));
        }
    }
    let img: Vec<usize> = pairs
        .iter()
        .map(|&(a, b)| index[x.image(a + 1) - 1][x.image(b + 1) - 1] + 1)
        .collect();
    Permutation::from_images(&img).expect("pair action is a permutation")
}

/// `S_m` standard cover `((1 2), (1 3 ... m), (1 2 ... m)^-1)` paired with
/// its action on unordered pairs.
pub fn build_sm_pair(m: usize) -> Result<PairedCover> {
    if m < 4 {
        return Err(Error::Input(format!("m must be at least 4, got {m}")));
    }
    let n = m * (m - 1) / 2;
    limits::check("pair degree", (m + n) as u128, limits::order_cap())?;
    let s1 = p("(1 2)", m);
    let long: Vec<usize> = std::iter::once(1).chain(3..=m).collect();
    let s2 = Permutation::from_cycles(m, &[long])?;
    let s3 = Permutation::from_cycles(m, &[(1..=m).collect()])?.inverse();
    let sigma = Cover::new(m, labels(&DEG7_LABELS), vec![s1, s2, s3])?;
    let tau_cycles = sigma.cycles().iter().map(action_on_pairs).collect();
    let tau = Cover::new(n, labels(&DEG7_LABELS), tau_cycles)?;
    PairedCover::new(sigma, tau)
}

/// Dihedral class data on `Z/n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DihedralClasses {
    /// Four involutions.
    TwoFour,
    /// Two involutions and an `n`-cycle (Chebychev).
    TwoTwoN,
}

/// Reflection `x -> a - x` on letters `x + 1`, `x in Z/n`.
pub fn reflection(n: usize, a: i64) -> Permutation {
    let img: Vec<usize> = (0..n as i64)
        .map(|x| ((a - x).rem_euclid(n as i64)) as usize + 1)
        .collect();
    Permutation::from_images(&img).expect("reflection is a permutation")
}

/// Translation `x -> x + b` on letters `x + 1`.
pub fn translation(n: usize, b: i64) -> Permutation {
    let img: Vec<usize> = (0..n as i64)
        .map(|x| ((x + b).rem_euclid(n as i64)) as usize + 1)
        .collect();
    Permutation::from_images(&img).expect("translation is a permutation")
}

/// Degree-`n` dihedral covers: `(s_0, s_1, s_1, s_0)` or the Chebychev
/// tuple `(s_0, s_1, x -> x - 1)`, where `s_a: x -> a - x`.
pub fn build_dihedral(n: usize, classes: DihedralClasses) -> Result<Cover> {
    if n < 3 {
        return Err(Error::Input(format!("dihedral degree must be at least 3, got {n}")));
    }
    let (s0, s1) = (reflection(n, 0), reflection(n, 1));
    match classes {
        DihedralClasses::TwoFour => Cover::with_default_labels(n, vec![s0.clone(), s1.clone(), s1, s0]),
        DihedralClasses::TwoTwoN => Cover::new(n, labels(&["-1", "+1", "inf"]), vec![s0, s1, translation(n, -1)]),
    }
}

/// Degree-4 dihedral pair: the action on cosets of one involution class
/// paired with the action on cosets of the other.
pub fn d4_pair() -> Result<PairedCover> {
    let sigma = Cover::new(
        4,
        labels(&["-1", "+1", "inf"]),
        vec![p("(2 4)", 4), p("(1 2)(3 4)", 4), p("(1 4 3 2)", 4)],
    )?;
    let g = sigma.group()?;
    let h = GeneratedGroup::new(4, vec![p("(1 2)(3 4)", 4)])?;
    let ca = g.coset_action(&h)?;
    let tau = Cover::new(ca.index, sigma.branch_points().to_vec(), ca.images)?;
    PairedCover::new(sigma, tau)
}

/// `S_5` with classes `2, 2, 2^2, 5`, paired with the action on unordered
/// pairs.
pub fn hilbert_siegel_m5() -> Result<NielsenClassSpec> {
    let gens = vec![p("(1 2)", 5), p("(1 2 3 4 5)", 5)];
    let g = GeneratedGroup::new(5, gens.clone())?;
    let classes = vec![p("(1 2)(3 4)", 5), p("(1 2)", 5), p("(1 2)", 5), p("(1 2 3 4 5)", 5)];
    let images = gens.iter().map(action_on_pairs).collect();
    NielsenClassSpec::new(g, classes)?.with_second(10, images)
}

const KEYS: &[(&str, &str)] = &[
    ("deg7-pair-1", "degree-7 points/lines pair, classes 2.4.7"),
    ("deg7-pair-2", "degree-7 points/lines pair, classes 3.2.7"),
    ("deg7-cover-1", "points-side cover of deg7-pair-1"),
    ("deg7-cover-2", "points-side cover of deg7-pair-2"),
    ("coalescing-source-1", "four-point tuple coalescing to deg7-cover-1"),
    ("coalescing-source-2", "four-point tuple coalescing to deg7-cover-2"),
    ("coalescing-source-2r", "restricted four-point tuple coalescing to deg7-cover-2"),
    ("deg7-pair-inf.2^3", "three involutions and a 7-cycle, paired"),
    ("deg7-pair-2^6", "six involutions, paired"),
    ("class-2.4.7", "Nielsen class 2.4.7 in the degree-7 group"),
    ("class-3.2.7", "Nielsen class 3.2.7 in the degree-7 group"),
    ("class-inf.2.4", "class 2.4.7 with the 7-cycle last"),
    ("class-inf.2.3", "class 3.2.7 with the 7-cycle last"),
    ("class-2^3.7", "three involutions then a 7-cycle"),
    ("class-2^6", "six involutions"),
    ("sm-pair-<m>", "S_m standard cover paired with unordered pairs"),
    ("dihedral-<n>-2^4", "dihedral cover with four involutions"),
    ("dihedral-<n>-2^2.n", "Chebychev cover of degree n"),
    ("d4-t4-pair", "degree-4 dihedral pair with two components"),
    ("hilbert-siegel-m5", "S_5 class 2.2.2^2.5 with the pairs representation"),
    ("degrees-davenport", "degrees of primitive polynomial Davenport pairs"),
];

/// Keys with descriptions; `<m>` and `<n>` are integer parameters.
pub fn list() -> Vec<(&'static str, &'static str)> {
    KEYS.to_vec()
}

fn param(key: &str, prefix: &str, suffix: &str) -> Option<usize> {
    key.strip_prefix(prefix)?.strip_suffix(suffix)?.parse().ok()
}

pub fn get(key: &str) -> Result<CatalogEntry> {
    let desc = |k: &str| {
        KEYS.iter()
            .find(|(x, _)| *x == k)
            .map(|(_, d)| d.to_string())
            .unwrap_or_default()
    };
    let item = match key {
        "deg7-pair-1" => CatalogItem::Pair(deg7_pair(1)?),
        "deg7-pair-2" => CatalogItem::Pair(deg7_pair(2)?),
        "deg7-cover-1" => CatalogItem::Cover(deg7_sigma(1)?),
        "deg7-cover-2" => CatalogItem::Cover(deg7_sigma(2)?),
        "coalescing-source-1" => CatalogItem::Cover(coalescing_source(1)?),
        "coalescing-source-2" => CatalogItem::Cover(coalescing_source(2)?),
        "coalescing-source-2r" => CatalogItem::Cover(restricted_source_2()?),
        "deg7-pair-inf.2^3" => CatalogItem::Pair(c_inf_2_3_pair(1)?),
        "deg7-pair-2^6" => CatalogItem::Pair(c_2_6_pair()?),
        "class-2.4.7" => CatalogItem::Nielsen(class_2_4_7()?),
        "class-3.2.7" => CatalogItem::Nielsen(class_3_2_7()?),
        "class-inf.2.4" => CatalogItem::Nielsen(class_inf_2_4()?),
        "class-inf.2.3" => CatalogItem::Nielsen(class_inf_2_3()?),
        "class-2^3.7" => CatalogItem::Nielsen(class_2_3_7()?),
        "class-2^6" => CatalogItem::Nielsen(class_2_6()?),
        "d4-t4-pair" => CatalogItem::Pair(d4_pair()?),
        "hilbert-siegel-m5" => CatalogItem::Nielsen(hilbert_siegel_m5()?),
        "degrees-davenport" => CatalogItem::Degrees(davenport_degrees()),
        _ => {
            if let Some(m) = param(key, "sm-pair-", "") {
                let e = build_sm_pair(m)?;
                return Ok(CatalogEntry {
                    key: key.to_string(),
                    description: desc("sm-pair-<m>"),
                    item: CatalogItem::Pair(e),
                });
            }
            for (suffix, cls, d) in [
                ("-2^4", DihedralClasses::TwoFour, "dihedral-<n>-2^4"),
                ("-2^2.n", DihedralClasses::TwoTwoN, "dihedral-<n>-2^2.n"),
            ] {
                if let Some(n) = param(key, "dihedral-", suffix) {
                    return Ok(CatalogEntry {
                        key: key.to_string(),
                        description: desc(d),
                        item: CatalogItem::Cover(build_dihedral(n, cls)?),
                    });
                }
            }
            return Err(Error::UnknownKey(key.to_string()));
        }
    };
    Ok(CatalogEntry {
        key: key.to_string(),
        description: desc(key),
        item,
    })
}

/// Cover stored under `key`, or the sigma side of a pair.
pub fn get_cover(key: &str) -> Result<Cover> {
    match get(key)?.item {
        CatalogItem::Cover(c) => Ok(c),
        CatalogItem::Pair(p) => Ok(p.sigma().clone()),
        _ => Err(Error::Input(format!("{key} is not a cover"))),
    }
}

pub fn get_pair(key: &str) -> Result<PairedCover> {
    match get(key)?.item {
        CatalogItem::Pair(p) => Ok(p),
        _ => Err(Error::Input(format!("{key} is not a paired cover"))),
    }
}

pub fn get_nielsen(key: &str) -> Result<NielsenClassSpec> {
    match get(key)?.item {
        CatalogItem::Nielsen(s) => Ok(s),
        _ => Err(Error::Input(format!("{key} is not a Nielsen class spec"))),
    }
}

/// Product of a cover's entries, for checks.
pub fn tuple_product(c: &Cover) -> Permutation {
    perm::product(c.degree(), c.cycles())
}
