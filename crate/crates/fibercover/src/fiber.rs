//! Fiber products of two covers sharing branch points.
//!
//! A [`PairedCover`] holds simultaneous branch cycles `(sigma_i, tau_i)` for
//! covers `X -> P^1` of degree `m` and `Y -> P^1` of degree `n`. Components
//! of the normalized fiber product are the orbits of the joint group on the
//! `m*n` tensor letters; tensor letter `(x, y)` is numbered `(x-1)*n + y`.

use std::collections::VecDeque;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::cover::{genus_from_rh, Cover, CoverJson};
use crate::error::{Error, Result};
use crate::group::{orbit0, BlockSystem, GeneratedGroup};
use crate::perm::Permutation;

/// Simultaneous branch cycles of two covers of one abstract monodromy group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairedCover {
    sigma: Cover,
    tau: Cover,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PairedCoverJson {
    pub branch_points: Vec<String>,
    pub sigma: CoverJson,
    pub tau: CoverJson,
}

/// One component of the fiber product, described by its tensor orbit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    /// Tensor letters, 1-based, sorted.
    pub orbit: Vec<usize>,
    pub deg_z: usize,
    /// Degree over the x-line, `|O| / m`.
    pub k: usize,
    /// Degree over the y-line, `|O| / n`.
    pub l: usize,
    /// x-letters paired with y-letter 1 in this orbit.
    pub x_letters: Vec<usize>,
    /// y-letters paired with x-letter 1 in this orbit.
    pub y_letters: Vec<usize>,
}

/// Points of the fiber product over one branch point coming from one pair
/// of disjoint cycles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RamPoint {
    pub branch_index: usize,
    /// Least letter of the x-cycle and of the y-cycle.
    pub x_cycle: usize,
    pub y_cycle: usize,
    pub s: usize,
    pub t: usize,
    pub count: usize,
    pub ram_index_over_y: usize,
    pub ram_index_over_x: usize,
}

/// Pairing of a component with a stabilizer orbit on each side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Correspondence {
    pub component: usize,
    /// Orbit of the stabilizer of y-letter 1 on x-letters.
    pub j: Vec<usize>,
    /// Orbit of the stabilizer of x-letter 1 on y-letters.
    pub i: Vec<usize>,
}

/// Which projection of a component.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    X,
    Y,
}

impl PairedCover {
    /// Checks: both tuples valid and transitive on the same labels, equal
    /// orders entrywise, and a joint group isomorphic to both factors.
    pub fn new(sigma: Cover, tau: Cover) -> Result<Self> {
        if sigma.branch_points() != tau.branch_points() {
            return Err(Error::Input("sigma and tau use different branch point labels".into()));
        }
        for (name, c) in [("sigma", &sigma), ("tau", &tau)] {
            let r = c.validate();
            if !r.product_one || !r.transitive {
                return Err(Error::InvalidCover(format!(
                    "{name}: product-one {} transitive {}",
                    r.product_one, r.transitive
                )));
            }
        }
        for (i, (s, t)) in sigma.cycles().iter().zip(tau.cycles()).enumerate() {
            if s.order() != t.order() {
                return Err(Error::InvalidCover(format!(
                    "orders differ at entry {}: {} vs {}",
                    i + 1,
                    s.order(),
                    t.order()
                )));
            }
        }
        let pc = PairedCover { sigma, tau };
        let gs = pc.sigma.group()?.order();
        let gt = pc.tau.group()?.order();
        let gj = pc.joint_group()?.order();
        if gs != gj || gt != gj {
            return Err(Error::InvalidCover(format!(
                "joint group order {gj} differs from factor orders {gs}, {gt}"
            )));
        }
        Ok(pc)
    }

    pub fn sigma(&self) -> &Cover {
        &self.sigma
    }

    pub fn tau(&self) -> &Cover {
        &self.tau
    }

    pub fn m(&self) -> usize {
        self.sigma.degree()
    }

    pub fn n(&self) -> usize {
        self.tau.degree()
    }

    pub fn branch_points(&self) -> &[String] {
        self.sigma.branch_points()
    }

    /// Joint elements `sigma_i (+) tau_i` on `m + n` letters.
    pub fn joint_cycles(&self) -> Vec<Permutation> {
        self.sigma
            .cycles()
            .iter()
            .zip(self.tau.cycles())
            .map(|(s, t)| s.direct_sum(t))
            .collect()
    }

    pub fn joint_group(&self) -> Result<GeneratedGroup> {
        GeneratedGroup::new(self.m() + self.n(), self.joint_cycles())
    }

    /// The same pair with the roles of the two covers exchanged.
    pub fn swapped(&self) -> PairedCover {
        PairedCover {
            sigma: self.tau.clone(),
            tau: self.sigma.clone(),
        }
    }

    pub fn to_json(&self) -> PairedCoverJson {
        PairedCoverJson {
            branch_points: self.branch_points().to_vec(),
            sigma: self.sigma.to_json(),
            tau: self.tau.to_json(),
        }
    }

    pub fn from_json(j: &PairedCoverJson) -> Result<Self> {
        let fill = |c: &CoverJson| {
            let mut c = c.clone();
            if c.branch_points.is_none() {
                c.branch_points = Some(j.branch_points.clone());
            }
            c
        };
        let s = Cover::from_json(&fill(&j.sigma))?;
        let t = Cover::from_json(&fill(&j.tau))?;
        if s.branch_points() != j.branch_points.as_slice() {
            return Err(Error::Input("sigma labels differ from branch_points".into()));
        }
        PairedCover::new(s, t)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("pair serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: PairedCoverJson = serde_json::from_str(s)?;
        PairedCover::from_json(&j)
    }
}

/// Action of `(s, t)` on tensor letters `x*n + y` (0-based).
pub(crate) fn tensor_perm(s: &Permutation, t: &Permutation) -> Permutation {
    let n = t.degree();
    let m = s.degree();
    let mut img = Vec::with_capacity(m * n);
    for x in 0..m {
        let xs = s.at(x);
        for y in 0..n {
            img.push((xs * n + t.at(y)) as u32);
        }
    }
    Permutation::from_zero_based(img)
}

/// Orbits of the joint action on tensor letters (0-based), each sorted,
/// ordered by least letter.
pub(crate) fn tensor_orbits(sig: &[Permutation], tau: &[Permutation], m: usize, n: usize) -> Vec<Vec<usize>> {
    let gens: Vec<Permutation> = sig.iter().zip(tau).map(|(s, t)| tensor_perm(s, t)).collect();
    let mut seen = vec![false; m * n];
    let mut out = Vec::new();
    for a in 0..m * n {
        if seen[a] {
            continue;
        }
        let mut o = orbit0(&gens, m * n, a);
        for &b in &o {
            seen[b] = true;
        }
        o.sort_unstable();
        out.push(o);
    }
    out
}

fn component_from_orbit(orbit0: &[usize], m: usize, n: usize) -> Component {
    let x_letters: Vec<usize> = orbit0.iter().filter(|&&a| a % n == 0).map(|&a| a / n + 1).collect();
    let y_letters: Vec<usize> = orbit0.iter().filter(|&&a| a / n == 0).map(|&a| a % n + 1).collect();
    Component {
        orbit: orbit0.iter().map(|a| a + 1).collect(),
        deg_z: orbit0.len(),
        k: orbit0.len() / m,
        l: orbit0.len() / n,
        x_letters,
        y_letters,
    }
}

/// Components of the fiber product, ordered by least tensor letter.
pub fn tensor_components(pc: &PairedCover) -> Vec<Component> {
    let (m, n) = (pc.m(), pc.n());
    tensor_orbits(pc.sigma.cycles(), pc.tau.cycles(), m, n)
        .iter()
        .map(|o| component_from_orbit(o, m, n))
        .collect()
}

/// Pair every component with an orbit of the stabilizer of `y_1` on
/// x-letters and an orbit of the stabilizer of `x_1` on y-letters, both
/// computed from the joint group.
pub fn component_correspondence(pc: &PairedCover) -> Result<Vec<Correspondence>> {
    let (m, n) = (pc.m(), pc.n());
    let g = pc.joint_group()?;
    let stab_y = g.point_stabilizer(m + 1)?;
    let stab_x = g.point_stabilizer(1)?;
    let js = stab_y.orbits(&(1..=m).collect::<Vec<_>>());
    let is: Vec<Vec<usize>> = stab_x
        .orbits(&(m + 1..=m + n).collect::<Vec<_>>())
        .into_iter()
        .map(|o| o.into_iter().map(|a| a - m).collect())
        .collect();
    let comps = tensor_components(pc);
    let mut out = Vec::new();
    for (ci, c) in comps.iter().enumerate() {
        let j = js
            .iter()
            .find(|j| c.orbit.contains(&((j[0] - 1) * n + 1)))
            .cloned()
            .ok_or_else(|| Error::Precondition("no stabilizer orbit for component".into()))?;
        let i = is
            .iter()
            .find(|i| c.orbit.contains(&i[0]))
            .cloned()
            .ok_or_else(|| Error::Precondition("no stabilizer orbit for component".into()))?;
        out.push(Correspondence { component: ci, j, i });
    }
    Ok(out)
}

fn method1_on(sig: &[Permutation], tau: &[Permutation], orbit1: &[usize]) -> Result<u64> {
    let z: Vec<usize> = orbit1.iter().map(|a| a - 1).collect();
    let sum: usize = sig
        .iter()
        .zip(tau)
        .map(|(s, t)| tensor_perm(s, t).restrict0(&z).index())
        .sum();
    genus_from_rh(z.len() as i128, sum as i128, 0)
}

/// Genus by Riemann-Hurwitz for the component as a cover of the z-line.
pub fn genus_method1(pc: &PairedCover, comp: &Component) -> Result<u64> {
    method1_on(pc.sigma.cycles(), pc.tau.cycles(), &comp.orbit)
}

/// Every pair (x-cycle, y-cycle) at every branch point, grouped by branch
/// point then y-cycle.
pub fn ramification_profile(pc: &PairedCover) -> Vec<RamPoint> {
    let mut out = Vec::new();
    for (i, (s, t)) in pc.sigma.cycles().iter().zip(pc.tau.cycles()).enumerate() {
        let xc = s.cycles0();
        for yc in t.cycles0() {
            for c in &xc {
                let (sl, tl) = (c.len(), yc.len());
                let l = sl.lcm(&tl);
                out.push(RamPoint {
                    branch_index: i + 1,
                    x_cycle: c[0] + 1,
                    y_cycle: yc[0] + 1,
                    s: sl,
                    t: tl,
                    count: sl.gcd(&tl),
                    ram_index_over_y: l / tl,
                    ram_index_over_x: l / sl,
                });
            }
        }
    }
    out
}

/// Orientation helpers for one side: (base cycles, fiber cycles, fiber
/// letters of the component).
fn side_data<'a>(pc: &'a PairedCover, comp: &Component, side: Side) -> (&'a [Permutation], &'a [Permutation], Vec<usize>) {
    match side {
        Side::Y => (pc.tau.cycles(), pc.sigma.cycles(), comp.x_letters.clone()),
        Side::X => (pc.sigma.cycles(), pc.tau.cycles(), comp.y_letters.clone()),
    }
}

/// Local branch cycle of the projection over each point of the base curve:
/// for branch point `i` and base cycle of length `t` with least letter
/// `b`, conjugate `gamma_i^t` by the first breadth-first word taking `b` to
/// letter 1 and restrict the fiber part to the component's fiber letters.
fn local_projection_cycles(
    base: &[Permutation],
    fiber: &[Permutation],
    fiber_letters: &[usize],
) -> Vec<(usize, usize, Permutation)> {
    let n = base[0].degree();
    let m = fiber[0].degree();
    let joint: Vec<Permutation> = fiber.iter().zip(base).map(|(f, b)| f.direct_sum(b)).collect();
    let z: Vec<usize> = fiber_letters.iter().map(|a| a - 1).collect();
    let mut out = Vec::new();
    for (i, b) in base.iter().enumerate() {
        for c in b.cycles0() {
            let t = c.len();
            let h = first_word_to(&joint, m + c[0], m, m + n);
            let g = joint[i].pow(t as i64).conj_unchecked(&h);
            debug_assert_eq!(g.at(m), m);
            out.push((i, c[0] + 1, g.restrict0(&z)));
        }
    }
    out
}

/// First element, breadth-first over `gens` in order, mapping `from` to `to`.
fn first_word_to(gens: &[Permutation], from: usize, to: usize, deg: usize) -> Permutation {
    let mut word: Vec<Option<Permutation>> = vec![None; deg];
    word[from] = Some(Permutation::identity(deg));
    let mut q = VecDeque::from([from]);
    while let Some(a) = q.pop_front() {
        if a == to {
            break;
        }
        for g in gens {
            let b = g.at(a);
            if word[b].is_none() {
                word[b] = Some(word[a].as_ref().unwrap().mul_unchecked(g));
                q.push_back(b);
            }
        }
    }
    word[to].take().expect("transitive base cover")
}

/// Genus from the local branch data of the projection to the y-line,
/// `2g - 2 = l (2 g_Y - 2) + sum of indices`.
pub fn genus_method2(pc: &PairedCover, comp: &Component) -> Result<u64> {
    genus_via_projection(pc, comp, Side::Y)
}

/// Method II through either projection.
pub fn genus_via_projection(pc: &PairedCover, comp: &Component, side: Side) -> Result<u64> {
    let (base, fiber, letters) = side_data(pc, comp, side);
    let base_cover = match side {
        Side::Y => &pc.tau,
        Side::X => &pc.sigma,
    };
    let gy = base_cover.genus()? as i128;
    let sum: usize = local_projection_cycles(base, fiber, &letters)
        .iter()
        .map(|(_, _, p)| p.index())
        .sum();
    genus_from_rh(letters.len() as i128, sum as i128, gy)
}

/// Branch cycles of the projection of a component to the y-line, as a
/// product-one tuple on the component's x-letters. The y-cover must have
/// genus 0.
pub fn pry_branch_cycles(pc: &PairedCover, comp: &Component) -> Result<Cover> {
    projection_cover(pc, comp, Side::Y)
}

/// Branch cycles of a projection of a component; see [`pry_branch_cycles`].
///
/// The base cover's cell structure (lifts of the branch-cycle loops at each
/// base letter, one face per cycle of each entry and one face per base
/// letter for the outer region) is glued into a disc one face at a time.
/// Each gluing multiplies the disc's boundary word by a conjugate of the new
/// face's boundary, so the face loops come out in an order whose product is
/// the boundary of the finished disc. On a sphere that boundary traces a
/// tree and reduces to the empty word.
pub fn projection_cover(pc: &PairedCover, comp: &Component, side: Side) -> Result<Cover> {
    let (base, fiber, letters) = side_data(pc, comp, side);
    let base_cover = match side {
        Side::Y => &pc.tau,
        Side::X => &pc.sigma,
    };
    if base_cover.genus()? != 0 {
        return Err(Error::Precondition("projection target cover has positive genus".into()));
    }
    let labels = pc.branch_points();
    let tag = match side {
        Side::Y => "y",
        Side::X => "x",
    };
    let loops = puncture_loops(base, fiber)?;
    let z: Vec<usize> = letters.iter().map(|a| a - 1).collect();
    let mut out_labels = Vec::new();
    let mut out_cycles = Vec::new();
    for (i, least, g) in loops {
        out_labels.push(format!("{}:{}{}", labels[i], tag, least));
        out_cycles.push(g.restrict0(&z));
    }
    let c = Cover::new_dropping_identities(letters.len(), out_labels, out_cycles)?;
    let rep = c.validate();
    if !rep.product_one || !rep.transitive {
        return Err(Error::Precondition("projection branch cycles failed validation".into()));
    }
    Ok(c)
}

type Step = (usize, bool); // (edge id, positive direction)

/// Loops around every puncture of the base cover, based at base letter 1,
/// whose product in the returned order is the identity. Each entry is
/// `(branch index, least base letter of the cycle, joint element)`, where
/// the joint element acts on `m + n` letters (fiber first).
fn puncture_loops(base: &[Permutation], fiber: &[Permutation]) -> Result<Vec<(usize, usize, Permutation)>> {
    let r = base.len();
    let n = base[0].degree();
    let m = fiber[0].degree();
    let joint: Vec<Permutation> = fiber.iter().zip(base).map(|(f, b)| f.direct_sum(b)).collect();
    let joint_inv: Vec<Permutation> = joint.iter().map(|p| p.inverse()).collect();
    let edge = |i: usize, j: usize| i * n + j;

    // faces: puncture faces first, then outer faces
    let mut faces: Vec<Vec<Step>> = Vec::new();
    let mut face_info: Vec<Option<(usize, usize)>> = Vec::new();
    let mut pface = vec![0usize; r * n];
    let mut oface = vec![0usize; r * n];
    for (i, b) in base.iter().enumerate() {
        for c in b.cycles0() {
            let f = faces.len();
            let steps: Vec<Step> = c.iter().map(|&j| (edge(i, j), true)).collect();
            for &(e, _) in &steps {
                pface[e] = f;
            }
            faces.push(steps);
            face_info.push(Some((i, c[0] + 1)));
        }
    }
    for k in 0..n {
        let f = faces.len();
        let mut v = k;
        let mut lp = Vec::with_capacity(r);
        for (i, b) in base.iter().enumerate() {
            lp.push(edge(i, v));
            v = b.at(v);
        }
        if v != k {
            return Err(Error::InvalidCover("base cycles fail product-one".into()));
        }
        let steps: Vec<Step> = lp.iter().rev().map(|&e| (e, false)).collect();
        for &(e, _) in &steps {
            oface[e] = f;
        }
        faces.push(steps);
        face_info.push(None);
    }

    let elem = |steps: &[Step]| -> Permutation {
        let mut acc = Permutation::identity(m + n);
        for &(e, pos) in steps {
            let i = e / n;
            acc = acc.mul_unchecked(if pos { &joint[i] } else { &joint_inv[i] });
        }
        acc
    };

    let first_outer = faces.len() - n;
    let mut in_disc = vec![false; faces.len()];
    in_disc[first_outer] = true;
    let mut boundary: Vec<Step> = faces[first_outer].clone();
    let mut added = 1;
    let mut loops = Vec::new();
    while added < faces.len() {
        let pos = boundary.iter().position(|&(e, p)| {
            let other = if p { oface[e] } else { pface[e] };
            !in_disc[other]
        });
        let Some(pos) = pos else {
            return Err(Error::Precondition("cell structure is disconnected".into()));
        };
        let (e, p) = boundary[pos];
        let f = if p { oface[e] } else { pface[e] };
        let fb = &faces[f];
        let at = fb
            .iter()
            .position(|&(e2, p2)| e2 == e && p2 != p)
            .ok_or_else(|| Error::Precondition("inconsistent face orientation".into()))?;
        let mut rotated: Vec<Step> = fb[at..].to_vec();
        rotated.extend_from_slice(&fb[..at]);
        let tail: Vec<Step> = boundary[pos + 1..].to_vec();
        if let Some((i, least)) = face_info[f] {
            let b = elem(&tail);
            let lp = b.inverse().mul_unchecked(&elem(&rotated)).mul_unchecked(&b);
            loops.push((i, least, lp));
        }
        let mut nb: Vec<Step> = boundary[..pos].to_vec();
        nb.extend_from_slice(&rotated[1..]);
        nb.extend_from_slice(&tail);
        boundary = nb;
        in_disc[f] = true;
        added += 1;
    }
    // free reduction of the final boundary word
    let mut stack: Vec<Step> = Vec::new();
    for s in boundary {
        match stack.last() {
            Some(&(e, p)) if e == s.0 && p != s.1 => {
                stack.pop();
            }
            _ => stack.push(s),
        }
    }
    if !stack.is_empty() {
        return Err(Error::Precondition("base cover is not of genus 0".into()));
    }
    Ok(loops)
}

/// Genus of the non-diagonal component of the fiber product of a doubly
/// transitive cover with itself, from pairs of distinct cycles over each
/// branch point.
pub fn double_transitive_complement(c: &Cover) -> Result<u64> {
    let m = c.degree();
    let sub = c.self_fiber_subdegrees()?;
    let expected = if m == 1 { vec![1] } else { vec![1, m - 1] };
    if sub != expected {
        return Err(Error::Precondition("cover is not doubly transitive".into()));
    }
    if m == 1 {
        return Err(Error::Precondition("degree 1 has no complement".into()));
    }
    let mut sum = 0usize;
    for s in c.cycles() {
        let cyc = s.cycles0();
        for (a, c1) in cyc.iter().enumerate() {
            for (b, c2) in cyc.iter().enumerate() {
                if a != b {
                    let (s1, s2) = (c1.len(), c2.len());
                    sum += s1.gcd(&s2) * (s1.lcm(&s2) / s1 - 1);
                }
            }
        }
    }
    let gf = c.genus()? as i128;
    genus_from_rh((m - 1) as i128, sum as i128, gf)
}

/// Two quotient covers of equal degree whose tuples agree up to
/// simultaneous conjugation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClcWitness {
    pub f_blocks: BlockSystem,
    pub g_blocks: BlockSystem,
    pub degree: usize,
}

/// Shared quotients of two covers over the same branch points, ordered by
/// quotient degree descending. Identity (singleton) block systems are
/// included; degree-1 quotients are not.
pub fn detect_clc(f: &Cover, g: &Cover) -> Result<Vec<ClcWitness>> {
    let systems = |c: &Cover| -> Result<Vec<BlockSystem>> {
        let mut v = vec![BlockSystem::discrete(c.degree())];
        v.extend(c.group()?.block_systems()?);
        Ok(v)
    };
    let fs = systems(f)?;
    let gs = systems(g)?;
    let mut out = Vec::new();
    for a in &fs {
        for b in &gs {
            if a.num_blocks() != b.num_blocks() || a.num_blocks() < 2 {
                continue;
            }
            let qa = f.quotient(a)?;
            let qb = g.quotient(b)?;
            let (ta, tb) = align_tuples(&qa, &qb);
            if simultaneous_conjugator(&ta, &tb).is_some() {
                out.push(ClcWitness {
                    f_blocks: a.clone(),
                    g_blocks: b.clone(),
                    degree: a.num_blocks(),
                });
            }
        }
    }
    out.sort_by(|x, y| y.degree.cmp(&x.degree).then(x.f_blocks.cmp(&y.f_blocks)).then(x.g_blocks.cmp(&y.g_blocks)));
    Ok(out)
}

/// Union of labels (first cover's order, then the second's extras) and
/// both tuples on it, with identity where a cover is unbranched.
pub fn aligned_labels(a: &Cover, b: &Cover) -> Vec<String> {
    let mut labels: Vec<String> = a.branch_points().to_vec();
    for l in b.branch_points() {
        if !labels.contains(l) {
            labels.push(l.clone());
        }
    }
    labels
}

fn align_tuples(a: &Cover, b: &Cover) -> (Vec<Permutation>, Vec<Permutation>) {
    let labels = aligned_labels(a, b);
    (
        labels.iter().map(|l| a.cycle_at(l)).collect(),
        labels.iter().map(|l| b.cycle_at(l)).collect(),
    )
}

/// A permutation `p` with `p^-1 a_i p = b_i` for all `i`, if one exists.
/// The tuples must generate transitive groups.
pub fn simultaneous_conjugator(a: &[Permutation], b: &[Permutation]) -> Option<Permutation> {
    if a.len() != b.len() {
        return None;
    }
    let d = match a.first() {
        Some(p) => p.degree(),
        None => return Some(Permutation::identity(1)),
    };
    if b.iter().any(|p| p.degree() != d) {
        return None;
    }
    'target: for k in 0..d {
        let mut map = vec![usize::MAX; d];
        let mut used = vec![false; d];
        map[0] = k;
        used[k] = true;
        let mut q = VecDeque::from([0usize]);
        while let Some(x) = q.pop_front() {
            for (ai, bi) in a.iter().zip(b) {
                let (x2, y2) = (ai.at(x), bi.at(map[x]));
                if map[x2] == usize::MAX {
                    if used[y2] {
                        continue 'target;
                    }
                    map[x2] = y2;
                    used[y2] = true;
                    q.push_back(x2);
                } else if map[x2] != y2 {
                    continue 'target;
                }
            }
        }
        if map.iter().any(|&v| v == usize::MAX) {
            continue;
        }
        return Some(Permutation::from_zero_based(map.into_iter().map(|v| v as u32).collect()));
    }
    None
}

/// Degree-over-each-line covers of a genus-0 component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Genus0Witness {
    pub over_x: Cover,
    pub over_y: Cover,
}

/// For a genus-0 component, its covers of the x-line and the y-line.
pub fn genus0_witness(pc: &PairedCover, comp: &Component) -> Result<Genus0Witness> {
    if genus_method1(pc, comp)? != 0 {
        return Err(Error::Precondition("component genus is not 0".into()));
    }
    let over_y = projection_cover(pc, comp, Side::Y)?;
    let over_x = projection_cover(pc, comp, Side::X)?;
    debug_assert_eq!(over_x.degree() * pc.m(), comp.deg_z);
    debug_assert_eq!(over_y.degree() * pc.n(), comp.deg_z);
    Ok(Genus0Witness { over_x, over_y })
}

/// Components with both genera and the projection cover.
#[derive(Clone, Debug, Serialize)]
pub struct ComponentReport {
    pub orbit: Vec<usize>,
    pub deg_z: usize,
    pub k: usize,
    pub l: usize,
    pub j: Vec<usize>,
    pub i: Vec<usize>,
    pub genus_m1: u64,
    pub genus_m2: u64,
    pub subgroup_index: u128,
    pub pry_cover: Option<CoverJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FiberReport {
    pub m: usize,
    pub n: usize,
    pub branch_points: Vec<String>,
    pub group_order: u128,
    pub components: Vec<ComponentReport>,
}

/// Full analysis of a paired cover.
pub fn fiber_report(pc: &PairedCover) -> Result<FiberReport> {
    let g = pc.joint_group()?;
    let (m, n) = (pc.m(), pc.n());
    let mut comps = Vec::new();
    for c in tensor_components(pc) {
        let first = c.orbit[0] - 1;
        let (x, y) = (first / n + 1, first % n + 1);
        let h = g.point_stabilizer(x)?.point_stabilizer(m + y)?;
        let pry = if pc.tau.genus()? == 0 {
            Some(pry_branch_cycles(pc, &c)?.to_json())
        } else {
            None
        };
        comps.push(ComponentReport {
            genus_m1: genus_method1(pc, &c)?,
            genus_m2: genus_method2(pc, &c)?,
            subgroup_index: g.order() / h.order(),
            pry_cover: pry,
            j: c.x_letters.clone(),
            i: c.y_letters.clone(),
            orbit: c.orbit,
            deg_z: c.deg_z,
            k: c.k,
            l: c.l,
        });
    }
    Ok(FiberReport {
        m,
        n,
        branch_points: pc.branch_points().to_vec(),
        group_order: g.order(),
        components: comps,
    })
}

/// Components of the fiber product of two arbitrary covers whose tuples
/// are taken relative to the same ordered branch points. Labels missing
/// from one cover carry the identity there. Returns `(degree over z,
/// genus)` per component.
pub fn fiber_of_covers(a: &Cover, b: &Cover) -> Result<Vec<(usize, u64)>> {
    let (ta, tb) = align_tuples(a, b);
    let (m, n) = (a.degree(), b.degree());
    for (name, t, d) in [("first", &ta, m), ("second", &tb, n)] {
        if !crate::perm::product(d, t).is_identity() {
            return Err(Error::InvalidCover(format!(
                "{name} cover fails product-one in the aligned label order"
            )));
        }
    }
    tensor_orbits(&ta, &tb, m, n)
        .iter()
        .map(|o| {
            let o1: Vec<usize> = o.iter().map(|a| a + 1).collect();
            method1_on(&ta, &tb, &o1).map(|g| (o.len(), g))
        })
        .collect()
}

/// A proper quotient of a cover through a block system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientInfo {
    pub degree: usize,
    pub blocks: Vec<Vec<usize>>,
    pub genus: u64,
}

/// Screening flags for composing a projection `prW: W -> P^1_y` with a
/// cover `g1` of the y-line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScreenReport {
    /// Orbifold characteristic of `prW` as `p/q`.
    pub ochar: String,
    pub galois_genus: u128,
    /// Galois closure of `prW` has genus at most 1.
    pub fail2a: bool,
    pub genus0_quotients: Vec<QuotientInfo>,
    /// `g1` is equivalent to one of the genus-0 quotients.
    pub fail2b: bool,
    pub genus_w: u64,
    pub labels_contained: bool,
    pub dominated_everywhere: bool,
    /// `genus_w = 1`, branch points of `g1` among those of `prW`, and
    /// domination at every shared point.
    pub fail2c: bool,
    /// `sum (1 - 1/d_i) <= 2` over the entry orders of `g1`.
    pub ordram_bound_holds: bool,
    /// `g1` has exactly four branch points, all of order 2.
    pub four_involutions: bool,
    /// More than one component in the supplied joint data.
    pub fail2d: Option<bool>,
    pub joint_components: Option<usize>,
    pub dec_var: String,
}

impl ScreenReport {
    pub fn any_flag(&self) -> bool {
        self.fail2a || self.fail2b || self.fail2c || self.fail2d.unwrap_or(false)
    }
}

/// Two covers with the same degree whose tuples, aligned on the union of
/// their labels, are simultaneously conjugate.
pub fn covers_equivalent(a: &Cover, b: &Cover) -> bool {
    if a.degree() != b.degree() {
        return false;
    }
    let (ta, tb) = align_tuples(a, b);
    simultaneous_conjugator(&ta, &tb).is_some()
}

/// Screening of `g1` against `prW`; see [`ScreenReport`].
pub fn screen_g1(prw: &Cover, g1: &Cover, joint: Option<&PairedCover>) -> Result<ScreenReport> {
    let ochar = prw.orbifold_char()?;
    let galois_genus = prw.galois_closure_genus()?;
    let group = prw.group()?;
    let systems = group.block_systems()?;
    let mut quotients = Vec::new();
    for bs in &systems {
        let q = prw.quotient(bs)?;
        let g = q.genus()?;
        if g == 0 {
            quotients.push((
                q,
                QuotientInfo {
                    degree: bs.num_blocks(),
                    blocks: bs.blocks.clone(),
                    genus: g,
                },
            ));
        }
    }
    let g1_valid = g1.validate();
    if !g1_valid.product_one || !g1_valid.transitive {
        return Err(Error::InvalidCover("g1 fails product-one or transitivity".into()));
    }
    let fail2b = quotients.iter().any(|(q, _)| covers_equivalent(q, g1));
    let genus_w = prw.genus()?;
    let labels_contained = g1.branch_points().iter().all(|l| prw.branch_points().contains(l));
    let dominated_everywhere = labels_contained
        && g1
            .branch_points()
            .iter()
            .all(|l| prw.cycle_at(l).dominates(&g1.cycle_at(l)));
    let orders: Vec<u64> = g1.cycles().iter().map(|c| c.order()).collect();
    let ordram = crate::cover::orbifold_char_of_orders(orders.iter().copied());
    // sum (1 - 1/d_i) <= 2  iff  2 + sum (1/d_i - 1) >= 0
    let ordram_bound_holds = ordram >= crate::cover::Rational::from_integer(0);
    let four_involutions = orders.len() == 4 && orders.iter().all(|&d| d == 2);
    let (fail2d, joint_components) = match joint {
        Some(pc) => {
            if pc.m() != prw.degree() || pc.n() != g1.degree() {
                return Err(Error::Input(format!(
                    "joint data has degrees ({}, {}), expected ({}, {})",
                    pc.m(),
                    pc.n(),
                    prw.degree(),
                    g1.degree()
                )));
            }
            let c = tensor_components(pc).len();
            (Some(c > 1), Some(c))
        }
        None => (None, None),
    };
    Ok(ScreenReport {
        ochar: ochar.to_string(),
        galois_genus,
        fail2a: ochar >= crate::cover::Rational::from_integer(0),
        genus0_quotients: quotients.into_iter().map(|(_, i)| i).collect(),
        fail2b,
        genus_w,
        labels_contained,
        dominated_everywhere,
        fail2c: genus_w == 1 && dominated_everywhere,
        ordram_bound_holds,
        four_involutions,
        fail2d,
        joint_components,
        dec_var: if systems.is_empty() {
            "prW indecomposable".to_string()
        } else {
            "dec-var not excluded".to_string()
        },
    })
}
