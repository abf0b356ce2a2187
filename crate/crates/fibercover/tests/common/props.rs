//! Randomized invariants shared by the property suite and the acceptance
//! run. Each check builds its own inputs from a strategy and compares the
//! library against the brute-force routines in the parent module.

use std::collections::{BTreeSet, HashMap};

use fibercover::catalog;
use fibercover::fiber::{genus_method1, genus_method2, ramification_profile, tensor_components};
use fibercover::nielsen::{braid_apply, enumerate_raw, BraidGen, BraidWord, NielsenElement};
use fibercover::{BlockSystem, Cover, GeneratedGroup, PairedCover, Permutation};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

use super::{closure, conj, cycle_lengths, img, rh_genus};

#[derive(Clone, Copy, Debug)]
pub enum Family {
    Symmetric,
    Alternating,
    Dihedral,
}

fn group_of(f: Family, n: usize) -> GeneratedGroup {
    match f {
        Family::Symmetric => GeneratedGroup::symmetric(n),
        Family::Alternating => GeneratedGroup::alternating(n),
        Family::Dihedral => GeneratedGroup::dihedral(n),
    }
}

/// Random product-one tuple: `r - 1` uniform group elements and the
/// inverse of their product.
fn random_tuple(g: &GeneratedGroup, picks: &[u128]) -> Vec<Permutation> {
    let n = g.degree();
    let mut entries: Vec<Permutation> = picks.iter().map(|k| g.element_at(k % g.order())).collect();
    let prod = fibercover::perm::product(n, &entries);
    entries.push(prod.inverse());
    entries
}

fn cover_of(n: usize, tuple: Vec<Permutation>) -> Cover {
    let labels = (1..=tuple.len()).map(|i| format!("z{i}")).collect();
    Cover::new_dropping_identities(n, labels, tuple).unwrap()
}

pub fn tuple_strategy() -> impl Strategy<Value = (Family, usize, Vec<u128>)> {
    (
        prop_oneof![Just(Family::Symmetric), Just(Family::Alternating), Just(Family::Dihedral)],
        3usize..=8,
        prop::collection::vec(any::<u128>(), 1..=4),
    )
}

/// Riemann-Hurwitz parity holds for every product-one tuple, and for
/// transitive ones the library genus agrees with the orbit count.
pub fn rh_parity((f, n, picks): (Family, usize, Vec<u128>)) -> Result<(), TestCaseError> {
    let g = group_of(f, n);
    let tuple = random_tuple(&g, &picks);
    let imgs: Vec<_> = tuple.iter().map(img).collect();
    let index_sum: usize = imgs.iter().map(|p| n - cycle_lengths(p).len()).sum();
    prop_assert_eq!(index_sum % 2, 0, "odd index sum for {:?}", tuple);
    if super::orbits(n, &imgs).len() == 1 {
        let cover = cover_of(n, tuple.clone());
        let genus = cover.genus().map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert_eq!(genus as i64, rh_genus(n, index_sum));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug)]
pub enum SecondRep {
    Same,
    Pairs,
    Inverse,
}

/// Transitive paired covers from a common tuple of `S_m`.
pub fn pair_strategy() -> impl Strategy<Value = PairedCover> {
    (
        4usize..=6,
        prop_oneof![Just(SecondRep::Same), Just(SecondRep::Pairs), Just(SecondRep::Inverse)],
        prop::collection::vec(any::<u128>(), 2..=3),
    )
        .prop_filter_map("intransitive tuple", |(m, rep, picks)| random_pair(m, rep, &picks))
}

fn second_image(rep: SecondRep, x: &Permutation) -> Permutation {
    match rep {
        SecondRep::Same => x.clone(),
        SecondRep::Pairs => catalog::action_on_pairs(x),
        SecondRep::Inverse => {
            let n = x.degree();
            let w = Permutation::from_images(&(1..=n).rev().collect::<Vec<_>>()).unwrap();
            x.conjugate(&w).unwrap()
        }
    }
}

/// A transitive random paired cover built from one tuple of `S_m` under
/// two faithful actions, or `None` when the tuple is intransitive.
fn random_pair(m: usize, rep: SecondRep, picks: &[u128]) -> Option<PairedCover> {
    let g = GeneratedGroup::symmetric(m);
    let mu = random_tuple(&g, picks);
    let imgs: Vec<_> = mu.iter().map(img).collect();
    if super::orbits(m, &imgs).len() != 1 {
        return None;
    }
    let tau: Vec<Permutation> = mu.iter().map(|x| second_image(rep, x)).collect();
    let timgs: Vec<_> = tau.iter().map(img).collect();
    if super::orbits(tau[0].degree(), &timgs).len() != 1 {
        return None;
    }
    let s = Cover::with_default_labels(m, mu).ok()?;
    let t = Cover::with_default_labels(tau[0].degree(), tau).ok()?;
    PairedCover::new(s, t).ok()
}

/// Method I and Method II agree on every component and match the
/// brute-force component genera.
pub fn methods_agree(pc: PairedCover) -> Result<(), TestCaseError> {
    let oracle: Vec<(usize, i64)> = {
        let mut v: Vec<_> = super::oracle_components(&pc).iter().map(|c| (c.size, c.genus)).collect();
        v.sort();
        v
    };
    let mut lib = Vec::new();
    for c in tensor_components(&pc) {
        let g1 = genus_method1(&pc, &c).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let g2 = genus_method2(&pc, &c).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert_eq!(g1, g2, "methods differ on {:?}", pc);
        lib.push((c.deg_z, g1 as i64));
    }
    lib.sort();
    prop_assert_eq!(lib, oracle);
    Ok(())
}

/// Over each point of the y-line the ramification indices above it sum to
/// the degree of the x-side.
pub fn ramification_sums(pc: PairedCover) -> Result<(), TestCaseError> {
    let mut sums: HashMap<(usize, usize), usize> = HashMap::new();
    for rp in ramification_profile(&pc) {
        *sums.entry((rp.branch_index, rp.y_cycle)).or_default() += rp.count * rp.ram_index_over_y;
    }
    let expected_points: usize = pc.tau().cycles().iter().map(|t| t.num_cycles()).sum();
    prop_assert_eq!(sums.len(), expected_points);
    for (k, v) in sums {
        prop_assert_eq!(v, pc.m(), "point {:?}", k);
    }
    Ok(())
}

pub fn braid_strategy() -> impl Strategy<Value = (usize, usize, Vec<(u8, usize)>)> {
    (
        0usize..3,
        any::<usize>(),
        prop::collection::vec((0u8..4, 1usize..4), 1..12),
    )
}

/// Braid words keep a Nielsen class element inside its class: product
/// one, same group, same multiset of conjugacy classes.
pub fn braid_membership((which, pick, word): (usize, usize, Vec<(u8, usize)>)) -> Result<(), TestCaseError> {
    let spec = match which {
        0 => catalog::class_2_3_7().unwrap(),
        1 => catalog::class_inf_2_3().unwrap(),
        _ => catalog::class_2_4_7().unwrap(),
    };
    let raw = enumerate_raw(&spec).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let e = &raw[pick % raw.len()];
    let r = e.len();
    let w = BraidWord(
        word.iter()
            .map(|&(k, i)| {
                let i = 1 + (i - 1) % (r - 1);
                match k {
                    0 => BraidGen::Q(i),
                    1 => BraidGen::QInv(i),
                    2 => BraidGen::Sh,
                    _ => BraidGen::ShInv,
                }
            })
            .collect(),
    );
    let out: NielsenElement = braid_apply(e, &w).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let n = spec.group().degree();
    let gens: Vec<_> = spec.group().generators().iter().map(img).collect();
    let g = closure(n, &gens);
    let class = |x: &Permutation| -> BTreeSet<Vec<usize>> { g.iter().map(|h| conj(&img(x), h)).collect() };
    let mut before: Vec<_> = e.entries().iter().map(class).collect();
    let mut after: Vec<_> = out.entries().iter().map(class).collect();
    before.sort();
    after.sort();
    prop_assert_eq!(before, after);
    prop_assert!(fibercover::perm::product(n, out.entries()).is_identity());
    let outs: Vec<_> = out.entries().iter().map(img).collect();
    prop_assert_eq!(closure(n, &outs).len(), g.len());
    Ok(())
}

/// Transitive covers with imprimitive groups: dihedral groups of composite
/// degree and wreath products.
pub fn imprimitive_strategy() -> impl Strategy<Value = Cover> {
    (any::<bool>(), 2usize..=4, 2usize..=4, prop::collection::vec(any::<u128>(), 1..=4)).prop_filter_map(
        "intransitive tuple",
        |(dihedral, a, b, picks)| {
            let g = if dihedral { GeneratedGroup::dihedral(a * b * 2) } else { wreath(a, b) };
            let tuple = random_tuple(&g, &picks);
            let imgs: Vec<_> = tuple.iter().map(img).collect();
            (super::orbits(g.degree(), &imgs).len() == 1).then(|| cover_of(g.degree(), tuple))
        },
    )
}

/// `S_a` wreath `S_b` in its imprimitive action on `a * b` letters.
fn wreath(a: usize, b: usize) -> GeneratedGroup {
    let n = a * b;
    let swap_in_block = Permutation::from_cycles(n, &[vec![1, 2]]).unwrap();
    let cycle_in_block = Permutation::from_cycles(n, &[(1..=a).collect()]).unwrap();
    let block_swap: Vec<usize> = (0..n)
        .map(|x| {
            let (blk, off) = (x / a, x % a);
            let nb = match blk {
                0 => 1,
                1 => 0,
                other => other,
            };
            nb * a + off + 1
        })
        .collect();
    let block_cycle: Vec<usize> = (0..n).map(|x| ((x / a + 1) % b) * a + x % a + 1).collect();
    GeneratedGroup::new(
        n,
        vec![
            swap_in_block,
            cycle_in_block,
            Permutation::from_images(&block_swap).unwrap(),
            Permutation::from_images(&block_cycle).unwrap(),
        ],
    )
    .unwrap()
}

fn refines(fine: &BlockSystem, coarse: &BlockSystem) -> bool {
    fine.blocks
        .iter()
        .all(|b| coarse.blocks.iter().any(|c| b.iter().all(|x| c.contains(x))))
}

/// Quotient genus never increases along a refinement of block systems.
pub fn quotient_monotone(cover: Cover) -> Result<(), TestCaseError> {
    let n = cover.degree();
    let err = |e: fibercover::Error| TestCaseError::fail(e.to_string());
    let mut systems = cover.group().map_err(err)?.block_systems().map_err(err)?;
    systems.push(BlockSystem::discrete(n));
    let genus_of = |bs: &BlockSystem| -> Result<u64, TestCaseError> {
        let q = cover.quotient(bs).map_err(err)?;
        if q.degree() == 1 {
            return Ok(0);
        }
        q.genus().map_err(err)
    };
    for fine in &systems {
        for coarse in &systems {
            if refines(fine, coarse) {
                prop_assert!(genus_of(fine)? >= genus_of(coarse)?, "{:?} vs {:?}", fine.blocks, coarse.blocks);
            }
        }
    }
    Ok(())
}

/// Run `check` on `cases` inputs from a fixed-seed generator; returns the
/// first failure message.
pub fn run_fixed<S: Strategy>(
    cases: u32,
    strategy: S,
    check: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    runner.run(&strategy, check).map_err(|e| e.to_string())
}
