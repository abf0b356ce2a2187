//! Every catalog entry builds, round-trips through JSON and satisfies the
//! invariants of its kind.

mod common;

use common::{closure, img, Img};
use fibercover::catalog::{self, CatalogItem};
use fibercover::{Cover, PairedCover};

fn concrete_keys() -> Vec<String> {
    catalog::list()
        .into_iter()
        .flat_map(|(k, _)| match k {
            "sm-pair-<m>" => vec!["sm-pair-5".to_string(), "sm-pair-6".to_string()],
            "dihedral-<n>-2^4" => vec!["dihedral-5-2^4".to_string(), "dihedral-6-2^4".to_string()],
            "dihedral-<n>-2^2.n" => vec!["dihedral-5-2^2.n".to_string(), "dihedral-8-2^2.n".to_string()],
            other => vec![other.to_string()],
        })
        .collect()
}

fn joint_order(pc: &PairedCover) -> (usize, usize, usize) {
    let m = pc.m();
    let s: Vec<Img> = pc.sigma().cycles().iter().map(img).collect();
    let t: Vec<Img> = pc.tau().cycles().iter().map(img).collect();
    let joint: Vec<Img> = s
        .iter()
        .zip(&t)
        .map(|(a, b)| {
            let mut v = a.clone();
            v.extend(b.iter().map(|y| y + m));
            v
        })
        .collect();
    (
        closure(m, &s).len(),
        closure(pc.n(), &t).len(),
        closure(m + pc.n(), &joint).len(),
    )
}

#[test]
fn every_key_builds_and_round_trips() {
    for key in concrete_keys() {
        let entry = catalog::get(&key).unwrap_or_else(|e| panic!("{key}: {e}"));
        let json = entry.to_json();
        assert_eq!(json["key"], key.as_str());
        match entry.item {
            CatalogItem::Cover(c) => {
                assert!(c.validate().is_valid(), "{key}");
                assert_eq!(Cover::from_json_str(&c.to_json_string()).unwrap(), c);
            }
            CatalogItem::Pair(p) => {
                let (a, b, j) = joint_order(&p);
                assert!(a == j && b == j, "{key}: orders {a}, {b}, joint {j}");
                assert_eq!(PairedCover::from_json_str(&p.to_json_string()).unwrap(), p);
            }
            CatalogItem::Nielsen(s) => {
                let back = fibercover::nielsen::NielsenClassSpec::from_json_str(&s.to_json_string()).unwrap();
                assert_eq!(back.classes(), s.classes());
                assert_eq!(back.group().order(), s.group().order());
                assert_eq!(back.ordered(), s.ordered());
            }
            CatalogItem::Degrees(d) => {
                assert_eq!(d.degrees, vec![7, 11, 13, 15, 21, 31]);
            }
        }
    }
}

#[test]
fn unknown_and_malformed_keys() {
    assert!(matches!(catalog::get("nope"), Err(fibercover::Error::UnknownKey(_))));
    assert!(catalog::get("sm-pair-x").is_err());
    assert!(catalog::get("sm-pair-3").is_err());
    assert!(catalog::get_pair("deg7-cover-1").is_err());
}

#[test]
fn difference_sets_are_perfect() {
    for (n, set) in catalog::davenport_degrees().difference_sets {
        let modulus = set.len() * (set.len() - 1) + 1;
        assert_eq!(modulus, n);
        let mut seen = vec![0; n];
        for &a in &set {
            for &b in &set {
                if a != b {
                    seen[(a + n - b) % n] += 1;
                }
            }
        }
        assert!(seen[1..].iter().all(|&c| c == 1), "{n}: {seen:?}");
    }
}

#[test]
fn published_branch_cycles() {
    let p1 = catalog::deg7_pair(1).unwrap();
    let strings: Vec<String> = p1.sigma().cycles().iter().map(|c| c.to_string()).collect();
    assert_eq!(strings, ["(1 3)(4 5)", "(1 4 6 7)(2 3)", "(1 7 6 5 4 3 2)"]);
    assert_eq!(catalog::sigma_infinity().to_string(), "(1 7 6 5 4 3 2)");
    for j in [1, 2] {
        assert!(catalog::tuple_product(&catalog::coalescing_source(j).unwrap()).is_identity());
    }
}

#[test]
fn pair_groups_share_points_side() {
    let g1 = catalog::deg7_group(1).unwrap();
    let g2 = catalog::deg7_group(2).unwrap();
    assert_eq!(g1.order(), 168);
    assert_eq!(g2.order(), 168);
    assert!(g1.is_subgroup_of(&g2) && g2.is_subgroup_of(&g1));
    let t1 = catalog::deg7_tau(1).unwrap().group().unwrap();
    let t2 = catalog::deg7_tau(2).unwrap().group().unwrap();
    assert!(t1.is_subgroup_of(&t2) && t2.is_subgroup_of(&t1));
    assert!(!t1.is_subgroup_of(&g1));
    let src2 = catalog::coalescing_source(2).unwrap();
    assert_eq!(src2.group().unwrap().order(), 2520);
    let r = catalog::restricted_source_2().unwrap();
    assert_eq!(r.group().unwrap().order(), 168);
}
