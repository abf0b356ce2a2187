mod common;

use common::oracle_components;
use fibercover::catalog;
use fibercover::fiber::{
    component_correspondence, detect_clc, double_transitive_complement, fiber_of_covers, genus0_witness,
    genus_method1, tensor_components,
};
use fibercover::PairedCover;

fn oracle_sizes_and_genera(pc: &PairedCover) -> Vec<(usize, u64)> {
    let mut v: Vec<(usize, u64)> = oracle_components(pc).iter().map(|c| (c.size, c.genus as u64)).collect();
    v.sort();
    v
}

#[test]
fn complement_of_diagonal_matches_component_genus() {
    for j in [1, 2] {
        let s = catalog::deg7_sigma(j).unwrap();
        let self_pair = PairedCover::new(s.clone(), s.clone()).unwrap();
        let off_diagonal = tensor_components(&self_pair).into_iter().find(|c| c.deg_z == 42).unwrap();
        let direct = genus_method1(&self_pair, &off_diagonal).unwrap();
        assert_eq!(double_transitive_complement(&s).unwrap(), direct);
        let oracle = oracle_components(&self_pair).into_iter().find(|c| c.size == 42).unwrap();
        assert_eq!(direct as i64, oracle.genus);
    }
    let d4 = catalog::d4_pair().unwrap();
    assert!(double_transitive_complement(d4.sigma()).is_err());
}

#[test]
fn shared_quotients_of_dihedral_covers() {
    let d4 = catalog::d4_pair().unwrap();
    let own: Vec<usize> = detect_clc(d4.sigma(), d4.sigma()).unwrap().iter().map(|w| w.degree).collect();
    assert_eq!(own, vec![4, 2]);
    assert!(detect_clc(d4.sigma(), d4.tau()).unwrap().is_empty());
    let deg7 = catalog::deg7_pair(1).unwrap();
    assert!(detect_clc(deg7.sigma(), deg7.tau()).unwrap().is_empty());
}

#[test]
fn genus_zero_components_have_both_projections() {
    let pc = catalog::deg7_pair(1).unwrap();
    for c in tensor_components(&pc) {
        match genus0_witness(&pc, &c) {
            Ok(w) => {
                assert_eq!(w.over_x.degree() * pc.m(), c.deg_z);
                assert_eq!(w.over_y.degree() * pc.n(), c.deg_z);
                assert_eq!(w.over_x.genus().unwrap(), 0);
            }
            Err(_) => assert_ne!(genus_method1(&pc, &c).unwrap(), 0),
        }
    }
}

#[test]
fn correspondence_pairs_orbit_sizes_with_degrees() {
    for pc in [catalog::deg7_pair(1).unwrap(), catalog::d4_pair().unwrap(), catalog::c_2_6_pair().unwrap()] {
        let comps = tensor_components(&pc);
        let corr = component_correspondence(&pc).unwrap();
        assert_eq!(corr.len(), comps.len());
        for c in &corr {
            let comp = &comps[c.component];
            assert_eq!(c.j.len(), comp.k);
            assert_eq!(c.i.len(), comp.l);
        }
    }
}

#[test]
fn fiber_of_covers_matches_brute_force() {
    for pc in [
        catalog::deg7_pair(1).unwrap(),
        catalog::deg7_pair(2).unwrap(),
        catalog::d4_pair().unwrap(),
        catalog::c_2_6_pair().unwrap(),
        catalog::build_sm_pair(5).unwrap(),
    ] {
        let mut lib = fiber_of_covers(pc.sigma(), pc.tau()).unwrap();
        lib.sort();
        assert_eq!(lib, oracle_sizes_and_genera(&pc));
    }
}
