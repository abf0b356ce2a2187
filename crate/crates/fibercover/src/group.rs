//! Permutation groups given by generators.
//!
//! Membership and order come from a stabilizer chain built by the
//! deterministic Schreier-Sims algorithm. Base points are taken in increasing
//! letter order as they are needed.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits;
use crate::perm::Permutation;

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    // trans[b] maps the base point to b; inv[b] is its inverse
    trans: Vec<Option<Permutation>>,
    inv: Vec<Option<Permutation>>,
}

impl Level {
    fn new(base: usize, n: usize) -> Self {
        Level {
            base,
            gens: Vec::new(),
            orbit: Vec::new(),
            trans: vec![None; n],
            inv: vec![None; n],
        }
    }

    fn rebuild_orbit(&mut self, n: usize) {
        self.trans = vec![None; n];
        self.inv = vec![None; n];
        self.orbit.clear();
        let id = Permutation::identity(n);
        self.trans[self.base] = Some(id.clone());
        self.inv[self.base] = Some(id);
        self.orbit.push(self.base);
        let mut k = 0;
        while k < self.orbit.len() {
            let b = self.orbit[k];
            k += 1;
            for s in &self.gens {
                let c = s.at(b);
                if self.trans[c].is_none() {
                    let u = self.trans[b].as_ref().unwrap().mul_unchecked(s);
                    self.inv[c] = Some(u.inverse());
                    self.trans[c] = Some(u);
                    self.orbit.push(c);
                }
            }
        }
    }
}

#[derive(Clone, Debug)]
struct StabChain {
    levels: Vec<Level>,
}

impl StabChain {
    /// Sift `g` through levels `from..`; returns the residue and the level at
    /// which sifting stopped (`levels.len()` if it passed every level).
    fn sift_from(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for (j, lvl) in self.levels.iter().enumerate().skip(from) {
            let b = g.at(lvl.base);
            match &lvl.inv[b] {
                Some(ui) => g = g.mul_unchecked(ui),
                None => return (g, j),
            }
        }
        let k = self.levels.len();
        (g, k)
    }

    fn build(n: usize, gens: &[Permutation], base_prefix: &[usize]) -> StabChain {
        let mut levels: Vec<Level> = base_prefix.iter().map(|&b| Level::new(b, n)).collect();
        let strong: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        for g in &strong {
            if levels.iter().all(|l| g.at(l.base) == l.base) {
                let b = (0..n).find(|&i| g.at(i) != i).unwrap();
                levels.push(Level::new(b, n));
            }
        }
        // distribute generators: level i gets those fixing base[0..i]
        for g in &strong {
            for i in 0..levels.len() {
                if levels[..i].iter().all(|l| g.at(l.base) == l.base) {
                    levels[i].gens.push(g.clone());
                }
            }
        }
        let mut chain = StabChain { levels };
        if chain.levels.is_empty() {
            return chain;
        }
        let mut i = chain.levels.len() as isize - 1;
        for l in chain.levels.iter_mut() {
            l.rebuild_orbit(n);
        }
        while i >= 0 {
            let iu = i as usize;
            chain.levels[iu].rebuild_orbit(n);
            let mut restart: Option<usize> = None;
            let orbit = chain.levels[iu].orbit.clone();
            let sgens = chain.levels[iu].gens.clone();
            'outer: for &b in &orbit {
                for s in &sgens {
                    let lvl = &chain.levels[iu];
                    let c = s.at(b);
                    let h = lvl.trans[b]
                        .as_ref()
                        .unwrap()
                        .mul_unchecked(s)
                        .mul_unchecked(lvl.inv[c].as_ref().unwrap());
                    if h.is_identity() {
                        continue;
                    }
                    let (res, j) = chain.sift_from(h, iu + 1);
                    if res.is_identity() {
                        continue;
                    }
                    let mut j = j;
                    if j == chain.levels.len() {
                        let nb = (0..n).find(|&p| res.at(p) != p).unwrap();
                        let mut lv = Level::new(nb, n);
                        lv.rebuild_orbit(n);
                        chain.levels.push(lv);
                        j = chain.levels.len() - 1;
                    }
                    for l in iu + 1..=j {
                        chain.levels[l].gens.push(res.clone());
                    }
                    for l in iu + 1..=j {
                        chain.levels[l].rebuild_orbit(n);
                    }
                    restart = Some(j);
                    break 'outer;
                }
            }
            match restart {
                Some(j) => i = j as isize,
                None => i -= 1,
            }
        }
        chain
    }

    fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }
}

/// A group generated by permutations of a common degree.
#[derive(Clone, Debug)]
pub struct GeneratedGroup {
    degree: usize,
    gens: Vec<Permutation>,
    chain: StabChain,
}

/// Serializable description: degree plus generators in cycle notation.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GroupSpec {
    pub degree: usize,
    pub generators: Vec<String>,
}

impl GroupSpec {
    pub fn to_group(&self) -> Result<GeneratedGroup> {
        let gens = self
            .generators
            .iter()
            .map(|s| Permutation::parse(s, self.degree))
            .collect::<Result<Vec<_>>>()?;
        GeneratedGroup::new(self.degree, gens)
    }
}

/// A nontrivial system of imprimitivity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BlockSystem {
    /// Blocks of 1-based letters, each sorted, ordered by least letter.
    pub blocks: Vec<Vec<usize>>,
    pub block_size: usize,
}

impl BlockSystem {
    fn from_labels(labels: &[usize]) -> BlockSystem {
        let mut map: HashMap<usize, Vec<usize>> = HashMap::new();
        for (i, &l) in labels.iter().enumerate() {
            map.entry(l).or_default().push(i + 1);
        }
        let mut blocks: Vec<Vec<usize>> = map.into_values().collect();
        blocks.sort();
        let block_size = blocks[0].len();
        BlockSystem { blocks, block_size }
    }

    /// Singleton blocks: the trivial system.
    pub fn discrete(n: usize) -> BlockSystem {
        BlockSystem {
            blocks: (1..=n).map(|i| vec![i]).collect(),
            block_size: 1,
        }
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Permutation induced on block indices (1-based blocks in stored order).
    pub fn action(&self, p: &Permutation) -> Result<Permutation> {
        let n = p.degree();
        let mut which = vec![usize::MAX; n + 1];
        for (k, b) in self.blocks.iter().enumerate() {
            for &a in b {
                if a > n {
                    return Err(Error::OutOfRange { letter: a, degree: n });
                }
                which[a] = k;
            }
        }
        let mut img = Vec::with_capacity(self.blocks.len());
        for b in &self.blocks {
            let t = which[p.image(b[0])];
            if b.iter().any(|&a| which[p.image(a)] != t) {
                return Err(Error::Precondition(format!(
                    "{p} does not preserve the block system"
                )));
            }
            img.push(t as u32);
        }
        Ok(Permutation::from_zero_based(img))
    }
}

/// Result of acting on right cosets of a subgroup.
#[derive(Clone, Debug)]
pub struct CosetAction {
    pub index: usize,
    /// Image of each generator of the big group, in generator order.
    pub images: Vec<Permutation>,
    /// Coset representatives in label order; label 1 is the subgroup itself.
    pub representatives: Vec<Permutation>,
}

/// A conjugacy class with its deterministic representative.
#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    /// Least element in image-sequence order.
    pub representative: Permutation,
    /// All elements, sorted.
    pub elements: Vec<Permutation>,
}

impl ConjugacyClass {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }
}

impl GeneratedGroup {
    /// Group generated by `gens` on `degree` letters. Fails when the order
    /// exceeds the configured cap.
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        Self::with_base_prefix(degree, gens, &[])
    }

    fn with_base_prefix(degree: usize, gens: Vec<Permutation>, prefix: &[usize]) -> Result<Self> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        if degree == 0 {
            return Err(Error::Input("degree must be at least 1".into()));
        }
        let chain = StabChain::build(degree, &gens, prefix);
        limits::check("group order", chain.order(), limits::order_cap())?;
        Ok(GeneratedGroup {
            degree,
            gens,
            chain,
        })
    }

    pub fn trivial(degree: usize) -> Self {
        GeneratedGroup::new(degree, vec![]).expect("trivial group")
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::from_cycles(n, &[vec![1, 2]]).unwrap());
        }
        if n >= 3 {
            gens.push(Permutation::from_cycles(n, &[(1..=n).collect()]).unwrap());
        }
        GeneratedGroup::new(n, gens).expect("symmetric group within cap")
    }

    pub fn alternating(n: usize) -> Self {
        let gens = if n >= 3 {
            (3..=n)
                .map(|k| Permutation::from_cycles(n, &[vec![1, 2, k]]).unwrap())
                .collect()
        } else {
            vec![]
        };
        GeneratedGroup::new(n, gens).expect("alternating group within cap")
    }

    /// Dihedral group of order `2n` acting on the vertices of an `n`-gon.
    pub fn dihedral(n: usize) -> Self {
        let rot: Vec<usize> = (1..=n).map(|i| i % n + 1).collect();
        let refl: Vec<usize> = (1..=n).map(|i| (n + 1 - i) % n + 1).collect();
        GeneratedGroup::new(
            n,
            vec![
                Permutation::from_images(&rot).unwrap(),
                Permutation::from_images(&refl).unwrap(),
            ],
        )
        .expect("dihedral group within cap")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    /// Exact order.
    pub fn order(&self) -> u128 {
        self.chain.order()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        let (res, _) = self.chain.sift_from(p.clone(), 0);
        res.is_identity()
    }

    pub fn is_subgroup_of(&self, other: &GeneratedGroup) -> bool {
        self.degree == other.degree && self.gens.iter().all(|g| other.contains(g))
    }

    /// Base points of the stabilizer chain, 1-based.
    pub fn base(&self) -> Vec<usize> {
        self.chain.levels.iter().map(|l| l.base + 1).collect()
    }

    /// Element number `k` (0-based, `k < order`) in a fixed mixed-radix
    /// enumeration of the chain. Useful for reproducible sampling.
    pub fn element_at(&self, mut k: u128) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for lvl in &self.chain.levels {
            let len = lvl.orbit.len() as u128;
            let b = lvl.orbit[(k % len) as usize];
            k /= len;
            // g = u_k-1 ... u_0, built from the top level down
            g = lvl.trans[b].as_ref().unwrap().mul_unchecked(&g);
        }
        g
    }

    /// Every element, sorted. Fails above the element-list cap.
    pub fn elements(&self) -> Result<Vec<Permutation>> {
        let ord = self.order();
        limits::check("element list", ord, limits::element_list_cap())?;
        let mut out: Vec<Permutation> = vec![Permutation::identity(self.degree)];
        for lvl in self.chain.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * lvl.orbit.len());
            for &b in &lvl.orbit {
                let u = lvl.trans[b].as_ref().unwrap();
                for g in &out {
                    next.push(g.mul_unchecked(u));
                }
            }
            out = next;
        }
        out.sort();
        Ok(out)
    }

    /// Orbits meeting `seeds` (1-based), each sorted, ordered by least letter.
    pub fn orbits(&self, seeds: &[usize]) -> Vec<Vec<usize>> {
        let n = self.degree;
        let mut seen = vec![false; n];
        let mut seeds: Vec<usize> = seeds.iter().copied().filter(|&s| s >= 1 && s <= n).collect();
        seeds.sort_unstable();
        let mut out = Vec::new();
        for s in seeds {
            if seen[s - 1] {
                continue;
            }
            let orb = orbit0(&self.gens, n, s - 1);
            for &a in &orb {
                seen[a] = true;
            }
            let mut o: Vec<usize> = orb.into_iter().map(|a| a + 1).collect();
            o.sort_unstable();
            out.push(o);
        }
        out
    }

    pub fn all_orbits(&self) -> Vec<Vec<usize>> {
        let all: Vec<usize> = (1..=self.degree).collect();
        self.orbits(&all)
    }

    pub fn is_transitive(&self) -> bool {
        orbit0(&self.gens, self.degree, 0).len() == self.degree
    }

    /// Stabilizer of the 1-based letter `i`.
    pub fn point_stabilizer(&self, i: usize) -> Result<GeneratedGroup> {
        if i == 0 || i > self.degree {
            return Err(Error::OutOfRange {
                letter: i,
                degree: self.degree,
            });
        }
        let g = GeneratedGroup::with_base_prefix(self.degree, self.gens.clone(), &[i - 1])?;
        let gens = if g.chain.levels.len() > 1 {
            g.chain.levels[1].gens.clone()
        } else {
            vec![]
        };
        GeneratedGroup::new(self.degree, dedupe(gens))
    }

    /// Stabilizer of several letters at once.
    pub fn pointwise_stabilizer(&self, letters: &[usize]) -> Result<GeneratedGroup> {
        let mut g = self.clone();
        for &i in letters {
            g = g.point_stabilizer(i)?;
        }
        Ok(g)
    }

    /// All nontrivial block systems, ordered by block size then blocks.
    /// Empty exactly when the group is primitive.
    pub fn block_systems(&self) -> Result<Vec<BlockSystem>> {
        if !self.is_transitive() {
            return Err(Error::Precondition("block systems need a transitive group".into()));
        }
        let n = self.degree;
        let mut found: Vec<BlockSystem> = Vec::new();
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut queue: VecDeque<Vec<usize>> = VecDeque::new();
        for b in 1..n {
            queue.push_back(vec![0, b]);
        }
        while let Some(seed) = queue.pop_front() {
            let labels = minimal_block(&self.gens, n, &seed);
            let root = labels[0];
            let block0: Vec<usize> = (0..n).filter(|&i| labels[i] == root).collect();
            if block0.len() == n || !seen.insert(block0.clone()) {
                continue;
            }
            for b in 0..n {
                if labels[b] != root {
                    let mut s = block0.clone();
                    s.push(b);
                    queue.push_back(s);
                }
            }
            found.push(BlockSystem::from_labels(&labels));
        }
        found.sort_by(|a, b| a.block_size.cmp(&b.block_size).then(a.blocks.cmp(&b.blocks)));
        Ok(found)
    }

    /// Setwise stabilizer of the block through letter 1 of a block system.
    pub fn block_stabilizer(&self, bs: &BlockSystem) -> Result<GeneratedGroup> {
        let block = bs
            .blocks
            .iter()
            .find(|b| b.contains(&1))
            .ok_or_else(|| Error::Precondition("block system misses letter 1".into()))?;
        let mut gens = self.point_stabilizer(1)?.gens;
        let trans = self.transversal(1)?;
        for &b in block {
            if let Some(u) = &trans[b - 1] {
                gens.push(u.clone());
            }
        }
        GeneratedGroup::new(self.degree, dedupe(gens))
    }

    /// For each letter `b`, the first element found breadth-first over the
    /// generators (in order) that maps letter `i` to `b`.
    pub fn transversal(&self, i: usize) -> Result<Vec<Option<Permutation>>> {
        if i == 0 || i > self.degree {
            return Err(Error::OutOfRange {
                letter: i,
                degree: self.degree,
            });
        }
        Ok(bfs_transversal(&self.gens, self.degree, i - 1))
    }

    /// Action on the right cosets of `h`. Coset `h` gets label 1; further
    /// labels follow breadth-first discovery over generators in order.
    pub fn coset_action(&self, h: &GeneratedGroup) -> Result<CosetAction> {
        if !h.is_subgroup_of(self) {
            return Err(Error::NotMember("subgroup is not contained in the group".into()));
        }
        let index = (self.order() / h.order()) as usize;
        let mut reps: Vec<Permutation> = vec![Permutation::identity(self.degree)];
        let mut reps_inv: Vec<Permutation> = vec![Permutation::identity(self.degree)];
        let mut table: Vec<Vec<u32>> = vec![vec![0; index]; self.gens.len()];
        let mut k = 0;
        while k < reps.len() {
            for (gi, s) in self.gens.iter().enumerate() {
                let x = reps[k].mul_unchecked(s);
                let found = (0..reps.len()).find(|&j| h.contains(&x.mul_unchecked(&reps_inv[j])));
                let j = match found {
                    Some(j) => j,
                    None => {
                        reps_inv.push(x.inverse());
                        reps.push(x);
                        reps.len() - 1
                    }
                };
                table[gi][k] = j as u32;
            }
            k += 1;
        }
        debug_assert_eq!(reps.len(), index);
        let images = table.into_iter().map(Permutation::from_zero_based).collect();
        Ok(CosetAction {
            index,
            images,
            representatives: reps,
        })
    }

    /// The conjugacy class of `x` in this group.
    pub fn conjugacy_class(&self, x: &Permutation) -> Result<ConjugacyClass> {
        if !self.contains(x) {
            return Err(Error::NotMember(x.to_string()));
        }
        let mut seen: HashSet<Permutation> = HashSet::new();
        seen.insert(x.clone());
        let mut queue = vec![x.clone()];
        while let Some(y) = queue.pop() {
            for g in &self.gens {
                let z = y.conj_unchecked(g);
                if seen.insert(z.clone()) {
                    queue.push(z);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort();
        Ok(ConjugacyClass {
            representative: elements[0].clone(),
            elements,
        })
    }

    pub fn are_conjugate(&self, x: &Permutation, y: &Permutation) -> Result<bool> {
        if !self.contains(y) {
            return Err(Error::NotMember(y.to_string()));
        }
        Ok(self.conjugacy_class(x)?.contains(y))
    }

    /// All conjugacy classes, ordered by representative.
    pub fn conjugacy_classes(&self) -> Result<Vec<ConjugacyClass>> {
        let mut done: HashSet<Permutation> = HashSet::new();
        let mut out = Vec::new();
        for e in self.elements()? {
            if done.contains(&e) {
                continue;
            }
            let c = self.conjugacy_class(&e)?;
            done.extend(c.elements.iter().cloned());
            out.push(c);
        }
        out.sort_by(|a, b| a.representative.cmp(&b.representative));
        Ok(out)
    }

    /// True iff every generator of `self` conjugated by `p` lies in `self`.
    pub fn normalized_by(&self, p: &Permutation) -> bool {
        self.gens.iter().all(|g| self.contains(&g.conj_unchecked(p)))
    }

    /// Normalizer in the full symmetric group, by exhaustive search.
    pub fn normalizer_in_symmetric(&self) -> Result<GeneratedGroup> {
        let n = self.degree;
        limits::check("normalizer degree", n as u128, limits::normalizer_degree())?;
        let mut found = self.clone();
        let mut arr: Vec<u32> = (0..n as u32).collect();
        loop {
            let p = Permutation::from_zero_based(arr.clone());
            if !found.contains(&p) && self.normalized_by(&p) {
                let mut gens = found.gens.clone();
                gens.push(p);
                found = GeneratedGroup::new(n, gens)?;
            }
            if !next_permutation(&mut arr) {
                break;
            }
        }
        Ok(found)
    }

    /// `N_{S_n}(G, C)`: elements of the symmetric normalizer that permute the
    /// given multiset of conjugacy classes (given by representatives).
    pub fn class_stabilizer(&self, classes: &[Permutation]) -> Result<GeneratedGroup> {
        let norm = self.normalizer_in_symmetric()?;
        let cls: Vec<ConjugacyClass> = classes
            .iter()
            .map(|c| self.conjugacy_class(c))
            .collect::<Result<_>>()?;
        let key = |reps: Vec<Permutation>| {
            let mut v = reps;
            v.sort();
            v
        };
        let wanted = key(cls.iter().map(|c| c.representative.clone()).collect());
        let cosets = norm.coset_action(self)?;
        let mut gens = self.gens.clone();
        for r in &cosets.representatives {
            let moved: Vec<Permutation> = classes
                .iter()
                .map(|c| {
                    self.conjugacy_class(&c.conj_unchecked(r))
                        .map(|k| k.representative)
                })
                .collect::<Result<_>>()?;
            if key(moved) == wanted {
                gens.push(r.clone());
            }
        }
        GeneratedGroup::new(self.degree, dedupe(gens))
    }
}

/// Orbit of a 0-based letter under generators, in discovery order.
pub(crate) fn orbit0(gens: &[Permutation], n: usize, start: usize) -> Vec<usize> {
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut orb = vec![start];
    let mut k = 0;
    while k < orb.len() {
        let a = orb[k];
        k += 1;
        for g in gens {
            let b = g.at(a);
            if !seen[b] {
                seen[b] = true;
                orb.push(b);
            }
        }
    }
    orb
}

/// Breadth-first transversal from a 0-based letter: entry `b` maps `start`
/// to `b`.
pub(crate) fn bfs_transversal(gens: &[Permutation], n: usize, start: usize) -> Vec<Option<Permutation>> {
    let mut out: Vec<Option<Permutation>> = vec![None; n];
    out[start] = Some(Permutation::identity(n));
    let mut queue = VecDeque::from([start]);
    while let Some(a) = queue.pop_front() {
        for g in gens {
            let b = g.at(a);
            if out[b].is_none() {
                out[b] = Some(out[a].as_ref().unwrap().mul_unchecked(g));
                queue.push_back(b);
            }
        }
    }
    out
}

/// Atkinson's minimal block: smallest block containing `seed`, as a label
/// per letter.
fn minimal_block(gens: &[Permutation], n: usize, seed: &[usize]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut a: usize) -> usize {
        while p[a] != a {
            p[a] = p[p[a]];
            a = p[a];
        }
        a
    }
    let mut queue: Vec<(usize, usize)> = Vec::new();
    for &s in &seed[1..] {
        let a = find(&mut parent, seed[0]);
        let b = find(&mut parent, s);
        if a != b {
            parent[b.max(a)] = a.min(b);
            queue.push((seed[0], s));
        }
    }
    while let Some((a, b)) = queue.pop() {
        for g in gens {
            let c = find(&mut parent, g.at(a));
            let d = find(&mut parent, g.at(b));
            if c != d {
                parent[c.max(d)] = c.min(d);
                queue.push((c, d));
            }
        }
    }
    (0..n).map(|i| find(&mut parent, i)).collect()
}

pub(crate) fn next_permutation(a: &mut [u32]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

fn dedupe(gens: Vec<Permutation>) -> Vec<Permutation> {
    let mut seen = HashSet::new();
    gens.into_iter()
        .filter(|g| !g.is_identity() && seen.insert(g.clone()))
        .collect()
}

/// Closure of generators by breadth-first multiplication. Independent of the
/// stabilizer chain; capped by the element-list cap.
pub fn closure_elements(degree: usize, gens: &[Permutation]) -> Result<Vec<Permutation>> {
    let cap = limits::element_list_cap();
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    seen.insert(id.clone());
    let mut queue = vec![id];
    while let Some(x) = queue.pop() {
        for g in gens {
            let y = x.mul_unchecked(g);
            if seen.insert(y.clone()) {
                limits::check("closure size", seen.len() as u128, cap)?;
                queue.push(y);
            }
        }
    }
    let mut v: Vec<Permutation> = seen.into_iter().collect();
    v.sort();
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    fn deg7() -> GeneratedGroup {
        GeneratedGroup::new(7, vec![p("(1 3)(4 5)", 7), p("(1 4 6 7)(2 3)", 7)]).unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(deg7().order(), 168);
        assert_eq!(GeneratedGroup::new(2, vec![p("(1 2)", 2)]).unwrap().order(), 2);
        let s5 = GeneratedGroup::new(5, vec![p("(1 2)", 5), p("(1 2 3 4 5)", 5)]).unwrap();
        assert_eq!(s5.order(), 120);
        assert_eq!(GeneratedGroup::symmetric(9).order(), 362880);
        assert_eq!(GeneratedGroup::alternating(6).order(), 360);
        assert_eq!(GeneratedGroup::dihedral(7).order(), 14);
    }

    #[test]
    fn order_matches_closure() {
        for g in [deg7(), GeneratedGroup::dihedral(6), GeneratedGroup::alternating(5)] {
            let c = closure_elements(g.degree(), g.generators()).unwrap();
            assert_eq!(c.len() as u128, g.order());
            assert_eq!(c, g.elements().unwrap());
            for e in &c {
                assert!(g.contains(e));
            }
        }
    }

    #[test]
    fn orbits_examples() {
        let g = GeneratedGroup::trivial(4);
        assert_eq!(g.all_orbits(), vec![vec![1], vec![2], vec![3], vec![4]]);
        assert_eq!(deg7().all_orbits(), vec![(1..=7).collect::<Vec<_>>()]);
        let h = GeneratedGroup::new(5, vec![p("(4 2)", 5)]).unwrap();
        assert_eq!(h.orbits(&[4, 1]), vec![vec![1], vec![2, 4]]);
    }

    #[test]
    fn point_stabilizers() {
        let st = deg7().point_stabilizer(1).unwrap();
        assert_eq!(st.order(), 24);
        for g in st.generators() {
            assert_eq!(g.image(1), 1);
        }
        assert_eq!(GeneratedGroup::trivial(3).point_stabilizer(2).unwrap().order(), 1);
        let s5 = GeneratedGroup::symmetric(5).point_stabilizer(1).unwrap();
        assert_eq!(s5.order(), 24);
        assert_eq!(s5.orbits(&[1]), vec![vec![1]]);
    }

    #[test]
    fn block_systems_examples() {
        assert!(deg7().block_systems().unwrap().is_empty());
        let d4 = GeneratedGroup::new(4, vec![p("(1 2 3 4)", 4), p("(1 3)", 4)]).unwrap();
        let bs = d4.block_systems().unwrap();
        assert_eq!(bs.len(), 1);
        assert_eq!(bs[0].blocks, vec![vec![1, 3], vec![2, 4]]);
        assert!(GeneratedGroup::symmetric(6).block_systems().unwrap().is_empty());
        let intrans = GeneratedGroup::new(4, vec![p("(1 2)", 4)]).unwrap();
        assert!(intrans.block_systems().is_err());
    }

    #[test]
    fn block_systems_of_cyclic_twelve() {
        let c12 = GeneratedGroup::new(12, vec![Permutation::from_cycles(12, &[(1..=12).collect()]).unwrap()]).unwrap();
        let sizes: Vec<usize> = c12.block_systems().unwrap().iter().map(|b| b.block_size).collect();
        assert_eq!(sizes, vec![2, 3, 4, 6]);
    }

    #[test]
    fn coset_actions() {
        let g = deg7();
        let full = g.coset_action(&g).unwrap();
        assert_eq!(full.index, 1);
        assert!(full.images.iter().all(|p| p.degree() == 1));
        let st = g.point_stabilizer(1).unwrap();
        let ca = g.coset_action(&st).unwrap();
        assert_eq!(ca.index, 7);
        let bad = GeneratedGroup::new(7, vec![p("(1 2)", 7)]).unwrap();
        assert!(matches!(g.coset_action(&bad), Err(Error::NotMember(_))));
    }

    #[test]
    fn normalizers() {
        let a5 = GeneratedGroup::alternating(5);
        assert_eq!(a5.normalizer_in_symmetric().unwrap().order(), 120);
        let c5 = GeneratedGroup::new(5, vec![p("(1 2 3 4 5)", 5)]).unwrap();
        assert_eq!(c5.normalizer_in_symmetric().unwrap().order(), 20);
        assert_eq!(deg7().normalizer_in_symmetric().unwrap().order(), 168);
    }

    #[test]
    fn normalizer_cap() {
        let g = GeneratedGroup::dihedral(10);
        assert!(matches!(g.normalizer_in_symmetric(), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn class_stabilizer_keeps_seven_cycle_classes_apart() {
        let g = deg7();
        let c = p("(1 2 3 4 5 6 7)", 7).inverse();
        let st = g.class_stabilizer(&[c.clone()]).unwrap();
        assert!(!st.are_conjugate(&c, &c.inverse()).unwrap());
        let c5 = GeneratedGroup::new(5, vec![p("(1 2 3 4 5)", 5)]).unwrap();
        let x = p("(1 2 3 4 5)", 5);
        assert_eq!(c5.class_stabilizer(&[x.clone()]).unwrap().order(), 5);
        assert_eq!(c5.class_stabilizer(&[x.clone(), x.inverse()]).unwrap().order(), 10);
    }

    #[test]
    fn conjugacy_examples() {
        let g = deg7();
        let inv = g.conjugacy_class(&p("(1 3)(4 5)", 7)).unwrap();
        assert_eq!(inv.len(), 21);
        let c = p("(1 2 3 4 5 6 7)", 7);
        assert!(!g.are_conjugate(&c, &c.inverse()).unwrap());
        let id = Permutation::identity(7);
        assert!(g.are_conjugate(&id, &id).unwrap());
        assert!(g.conjugacy_class(&p("(1 2)", 7)).is_err());
        let total: usize = g.conjugacy_classes().unwrap().iter().map(|c| c.len()).sum();
        assert_eq!(total, 168);
    }

    #[test]
    fn element_at_covers_group() {
        let g = GeneratedGroup::dihedral(5);
        let mut v: Vec<Permutation> = (0..g.order()).map(|k| g.element_at(k)).collect();
        v.sort();
        v.dedup();
        assert_eq!(v.len(), 10);
    }
}
