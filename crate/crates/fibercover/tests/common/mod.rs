//! Brute-force reference computations on plain image vectors. Nothing here
//! calls into the library's group or fiber algorithms.
#![allow(dead_code)]

pub mod props;

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use fibercover::{Cover, PairedCover, Permutation};
use num_rational::Ratio;

pub type Img = Vec<usize>;

pub fn img(p: &Permutation) -> Img {
    p.images().iter().map(|v| v - 1).collect()
}

/// Apply `a` then `b`.
pub fn mul(a: &Img, b: &Img) -> Img {
    a.iter().map(|&x| b[x]).collect()
}

pub fn inv(a: &Img) -> Img {
    let mut r = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        r[x] = i;
    }
    r
}

pub fn ident(n: usize) -> Img {
    (0..n).collect()
}

/// `h^-1 a h`.
pub fn conj(a: &Img, h: &Img) -> Img {
    mul(&mul(&inv(h), a), h)
}

pub fn cycle_lengths(a: &Img) -> Vec<usize> {
    let mut seen = vec![false; a.len()];
    let mut out = Vec::new();
    for s in 0..a.len() {
        if !seen[s] {
            let mut l = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = a[x];
                l += 1;
            }
            out.push(l);
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

pub fn order(a: &Img) -> u64 {
    cycle_lengths(a)
        .iter()
        .fold(1u64, |acc, &l| num_integer::lcm(acc, l as u64))
}

/// Every element of the group generated by `gens`, by breadth-first search.
pub fn closure(n: usize, gens: &[Img]) -> Vec<Img> {
    let mut seen: HashSet<Img> = HashSet::new();
    let mut q = VecDeque::new();
    seen.insert(ident(n));
    q.push_back(ident(n));
    while let Some(x) = q.pop_front() {
        for g in gens {
            let y = mul(&x, g);
            if seen.insert(y.clone()) {
                q.push_back(y);
            }
        }
    }
    let mut v: Vec<Img> = seen.into_iter().collect();
    v.sort();
    v
}

fn find(p: &mut [usize], mut x: usize) -> usize {
    while p[x] != x {
        p[x] = p[p[x]];
        x = p[x];
    }
    x
}

/// Orbits of the group generated by `gens` on `0..n`, by union-find.
pub fn orbits(n: usize, gens: &[Img]) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    for g in gens {
        for x in 0..n {
            let (a, b) = (find(&mut p, x), find(&mut p, g[x]));
            if a != b {
                p[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
    for x in 0..n {
        let r = find(&mut p, x);
        groups.entry(r).or_default().push(x);
    }
    let mut v: Vec<Vec<usize>> = groups.into_values().collect();
    v.sort();
    v
}

/// Genus from Riemann-Hurwitz over the sphere.
pub fn rh_genus(deg: usize, index_sum: usize) -> i64 {
    let twice = index_sum as i64 - 2 * deg as i64 + 2;
    assert_eq!(twice % 2, 0, "parity");
    twice / 2
}

/// Number of cycles of `a` restricted to the invariant set `o`.
pub fn cycles_on(a: &Img, o: &[usize]) -> usize {
    let set: HashSet<usize> = o.iter().copied().collect();
    let mut seen = HashSet::new();
    let mut c = 0;
    for &s in o {
        if seen.contains(&s) {
            continue;
        }
        c += 1;
        let mut x = s;
        while seen.insert(x) {
            assert!(set.contains(&x));
            x = a[x];
        }
    }
    c
}

/// Joint permutation on pairs `(x, y)` encoded as `x * n + y`.
pub fn tensor(a: &Img, b: &Img) -> Img {
    let n = b.len();
    let mut out = vec![0; a.len() * n];
    for x in 0..a.len() {
        for y in 0..n {
            out[x * n + y] = a[x] * n + b[y];
        }
    }
    out
}

/// One fiber product component: size, genus and the per-point index sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleComponent {
    pub letters: Vec<usize>,
    pub size: usize,
    pub indices: Vec<usize>,
    pub genus: i64,
    /// x-letters (1-based) meeting the component over y-letter 1.
    pub j: BTreeSet<usize>,
}

pub fn oracle_components(pc: &PairedCover) -> Vec<OracleComponent> {
    let s: Vec<Img> = pc.sigma().cycles().iter().map(img).collect();
    let t: Vec<Img> = pc.tau().cycles().iter().map(img).collect();
    let n = pc.n();
    let joint: Vec<Img> = s.iter().zip(&t).map(|(a, b)| tensor(a, b)).collect();
    orbits(pc.m() * n, &joint)
        .into_iter()
        .map(|o| {
            let indices: Vec<usize> = joint.iter().map(|g| o.len() - cycles_on(g, &o)).collect();
            let genus = rh_genus(o.len(), indices.iter().sum());
            let j = o.iter().filter(|&&v| v % n == 0).map(|&v| v / n + 1).collect();
            OracleComponent {
                size: o.len(),
                indices,
                genus,
                j,
                letters: o,
            }
        })
        .collect()
}

/// Galois-closure genus `1 + |G| (-2 + sum (1 - 1/ord)) / 2` over the sphere.
pub fn galois_genus(group_order: u64, entry_orders: &[u64]) -> Ratio<i128> {
    let mut chi = Ratio::from_integer(-2i128);
    for &o in entry_orders {
        chi += Ratio::new(o as i128 - 1, o as i128);
    }
    Ratio::from_integer(1) + chi * Ratio::from_integer(group_order as i128) / Ratio::from_integer(2)
}

pub fn ochar(entry_orders: &[u64]) -> Ratio<i128> {
    let mut c = Ratio::from_integer(2i128);
    for &o in entry_orders {
        c += Ratio::new(1, o as i128) - Ratio::from_integer(1);
    }
    c
}

/// The projection of one component to the y-line, described without branch
/// cycles: its degree, monodromy group order and, for each branch point of
/// the y-line that ramifies, the multiset of ramification indices above it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleProjection {
    pub degree: usize,
    pub group_order: u64,
    pub ramification: Vec<Vec<usize>>,
}

impl OracleProjection {
    pub fn entry_orders(&self) -> Vec<u64> {
        self.ramification
            .iter()
            .map(|r| r.iter().fold(1u64, |a, &l| num_integer::lcm(a, l as u64)))
            .collect()
    }
}

/// The component's projection to the y-line, assuming `tau` has genus 0.
/// The group is the stabilizer of y-letter 1 in the joint group acting on
/// the x-letters of the component above it. Ramification over a point of
/// the y-line given by a `t`-cycle of `tau_i` is read off the joint
/// `(sigma_i, tau_i)`-cycles of length `L` above it as `L / t`.
pub fn oracle_projection(pc: &PairedCover, comp: &OracleComponent) -> OracleProjection {
    let (m, n) = (pc.m(), pc.n());
    let s: Vec<Img> = pc.sigma().cycles().iter().map(img).collect();
    let t: Vec<Img> = pc.tau().cycles().iter().map(img).collect();
    let joint: Vec<Img> = s.iter().zip(&t).map(|(a, b)| {
        let mut v = a.clone();
        v.extend(b.iter().map(|y| y + m));
        v
    }).collect();
    let g = closure(m + n, &joint);
    let stab: Vec<&Img> = g.iter().filter(|e| e[m] == m).collect();
    let j: Vec<usize> = comp.j.iter().map(|x| x - 1).collect();
    let pos: HashMap<usize, usize> = j.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let restricted: HashSet<Img> = stab.iter().map(|e| j.iter().map(|x| pos[&e[*x]]).collect()).collect();
    let letters: HashSet<usize> = comp.letters.iter().copied().collect();
    let mut ramification = Vec::new();
    for (a, b) in s.iter().zip(&t) {
        let jt = tensor(a, b);
        for ycyc in cycles_of(b) {
            let tl = ycyc.len();
            let mut above = Vec::new();
            let mut seen = HashSet::new();
            for &y in &ycyc {
                for x in 0..m {
                    let v = x * n + y;
                    if !letters.contains(&v) || seen.contains(&v) {
                        continue;
                    }
                    let mut l = 0;
                    let mut w = v;
                    loop {
                        seen.insert(w);
                        w = jt[w];
                        l += 1;
                        if w == v {
                            break;
                        }
                    }
                    above.push(l / tl);
                }
            }
            above.sort_unstable_by(|a, b| b.cmp(a));
            if above.iter().any(|&e| e > 1) {
                ramification.push(above);
            }
        }
    }
    ramification.sort();
    OracleProjection {
        degree: j.len(),
        group_order: restricted.len() as u64,
        ramification,
    }
}

pub fn cycles_of(a: &Img) -> Vec<Vec<usize>> {
    let mut seen = vec![false; a.len()];
    let mut out = Vec::new();
    for s in 0..a.len() {
        if !seen[s] {
            let mut c = Vec::new();
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                c.push(x);
                x = a[x];
            }
            out.push(c);
        }
    }
    out
}

/// Nonidentity cycle types of a cover, sorted, for comparison with
/// [`OracleProjection::ramification`].
pub fn nontrivial_cycle_types(c: &Cover) -> Vec<Vec<usize>> {
    let mut v: Vec<Vec<usize>> = c
        .cycles()
        .iter()
        .map(|p| cycle_lengths(&img(p)))
        .filter(|l| l.iter().any(|&e| e > 1))
        .collect();
    v.sort();
    v
}

/// All permutations of `0..n` in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Img> {
    let mut out = Vec::new();
    let mut p = ident(n);
    loop {
        out.push(p.clone());
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
        p.swap(i, j);
        p[i + 1..].reverse();
    }
    out
}

/// Count Nielsen class representatives by brute force: tuples from the
/// group with product one, generating the group, whose entries fall in
/// the given classes (position by position when `ordered`, as a multiset
/// otherwise), up to conjugation by the elements of `S_n` that normalize
/// the group and preserve the class multiset. Returns `(raw, reduced)`.
pub fn oracle_nielsen(n: usize, gens: &[Img], classes: &[Img], ordered: bool, absolute: bool) -> (usize, usize) {
    let g = closure(n, gens);
    let gset: HashSet<Img> = g.iter().cloned().collect();
    let class_of = |x: &Img| -> BTreeSet<Img> { g.iter().map(|h| conj(x, h)).collect() };
    let cls: Vec<BTreeSet<Img>> = classes.iter().map(class_of).collect();
    let r = classes.len();
    let mut arrangements: BTreeSet<Vec<usize>> = BTreeSet::new();
    if ordered {
        arrangements.insert((0..r).collect());
    } else {
        for p in all_perms(r) {
            let key: Vec<usize> = p.iter().map(|&i| cls.iter().position(|c| *c == cls[i]).unwrap()).collect();
            arrangements.insert(key);
        }
    }
    let mut tuples: Vec<Vec<Img>> = Vec::new();
    for arr in &arrangements {
        let mut stack: Vec<(Vec<Img>, Img)> = vec![(Vec::new(), ident(n))];
        while let Some((prefix, prod)) = stack.pop() {
            if prefix.len() == r - 1 {
                let last = inv(&prod);
                if cls[arr[r - 1]].contains(&last) {
                    let mut t = prefix.clone();
                    t.push(last);
                    if closure(n, &t).len() == g.len() {
                        tuples.push(t);
                    }
                }
                continue;
            }
            for x in &cls[arr[prefix.len()]] {
                let mut p2 = prefix.clone();
                p2.push(x.clone());
                stack.push((p2, mul(&prod, x)));
            }
        }
    }
    let raw = tuples.len();
    let conjugators: Vec<Img> = if absolute {
        let mut multiset: Vec<BTreeSet<Img>> = cls.clone();
        multiset.sort();
        all_perms(n)
            .into_iter()
            .filter(|s| gens.iter().all(|x| gset.contains(&conj(x, s))))
            .filter(|s| {
                let mut moved: Vec<BTreeSet<Img>> = cls.iter().map(|c| c.iter().map(|x| conj(x, s)).collect()).collect();
                if ordered {
                    moved == cls
                } else {
                    moved.sort();
                    moved == multiset
                }
            })
            .collect()
    } else {
        g.clone()
    };
    let mut reps: HashSet<Vec<Img>> = HashSet::new();
    for t in &tuples {
        let canon = conjugators
            .iter()
            .map(|s| t.iter().map(|x| conj(x, s)).collect::<Vec<Img>>())
            .min()
            .unwrap();
        reps.insert(canon);
    }
    (raw, reps.len())
}
