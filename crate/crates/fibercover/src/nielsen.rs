//! Nielsen classes: enumeration, equivalence, braid action and coalescing.
//!
//! A Nielsen class is the set of tuples `(g_1, ..., g_r)` in a group `G`
//! with `g_1 ... g_r = 1`, generating `G`, with entries in prescribed
//! conjugacy classes. A spec is either *ordered* (entry `i` lies in class
//! `i`) or unordered (the entries realize the class multiset in any
//! arrangement).

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cover::Cover;
use crate::error::{Error, Result};
use crate::fiber::PairedCover;
use crate::group::{next_permutation, GeneratedGroup};
use crate::limits;
use crate::perm::{self, Permutation};

/// Equivalence used to reduce a Nielsen class.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Raw,
    Inner,
    #[default]
    Absolute,
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "raw" => Ok(Mode::Raw),
            "inner" => Ok(Mode::Inner),
            "absolute" => Ok(Mode::Absolute),
            _ => Err(Error::Parse(format!("unknown mode {s:?}"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Raw => "raw",
            Mode::Inner => "inner",
            Mode::Absolute => "absolute",
        })
    }
}

/// Group, class multiset and equivalence mode.
#[derive(Clone, Debug)]
pub struct NielsenClassSpec {
    group: GeneratedGroup,
    classes: Vec<Permutation>,
    ordered: bool,
    mode: Mode,
    outer: Vec<Permutation>,
    second: Option<(usize, Vec<Permutation>)>,
}

/// JSON shape of a [`NielsenClassSpec`].
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct NielsenSpecJson {
    pub degree: usize,
    pub generators: Vec<String>,
    pub classes: Vec<String>,
    #[serde(default)]
    pub ordered: bool,
    #[serde(default)]
    pub mode: Mode,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub outer: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub second: Option<SecondRepJson>,
}

/// Images of the group generators under a second permutation representation.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SecondRepJson {
    pub degree: usize,
    pub generators: Vec<String>,
}

impl NielsenClassSpec {
    /// Unordered spec in absolute mode. Class representatives must lie in
    /// the group and differ from the identity.
    pub fn new(group: GeneratedGroup, classes: Vec<Permutation>) -> Result<Self> {
        if classes.is_empty() {
            return Err(Error::Input("empty class list".into()));
        }
        for c in &classes {
            if c.is_identity() {
                return Err(Error::Input("identity class representative".into()));
            }
            if !group.contains(c) {
                return Err(Error::NotMember(c.to_string()));
            }
        }
        Ok(NielsenClassSpec {
            group,
            classes,
            ordered: false,
            mode: Mode::Absolute,
            outer: Vec::new(),
            second: None,
        })
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_ordered(mut self, ordered: bool) -> Self {
        self.ordered = ordered;
        self
    }

    /// Extra elements normalizing the group, used for absolute equivalence
    /// when the degree is beyond the normalizer search.
    pub fn with_outer(mut self, outer: Vec<Permutation>) -> Result<Self> {
        for p in &outer {
            if p.degree() != self.group.degree() || !self.group.normalized_by(p) {
                return Err(Error::Input(format!("{p} does not normalize the group")));
            }
        }
        self.outer = outer;
        Ok(self)
    }

    /// Second representation, as images of the group's generators.
    pub fn with_second(mut self, degree: usize, images: Vec<Permutation>) -> Result<Self> {
        RepresentationMap::new(self.group.degree(), self.group.generators(), degree, &images)?;
        self.second = Some((degree, images));
        Ok(self)
    }

    pub fn group(&self) -> &GeneratedGroup {
        &self.group
    }

    pub fn classes(&self) -> &[Permutation] {
        &self.classes
    }

    pub fn ordered(&self) -> bool {
        self.ordered
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn r(&self) -> usize {
        self.classes.len()
    }

    pub fn second(&self) -> Option<(usize, &[Permutation])> {
        self.second.as_ref().map(|(d, v)| (*d, v.as_slice()))
    }

    pub fn to_json(&self) -> NielsenSpecJson {
        NielsenSpecJson {
            degree: self.group.degree(),
            generators: self.group.generators().iter().map(|g| g.to_string()).collect(),
            classes: self.classes.iter().map(|c| c.to_string()).collect(),
            ordered: self.ordered,
            mode: self.mode,
            outer: self.outer.iter().map(|g| g.to_string()).collect(),
            second: self.second.as_ref().map(|(d, v)| SecondRepJson {
                degree: *d,
                generators: v.iter().map(|g| g.to_string()).collect(),
            }),
        }
    }

    pub fn from_json(j: &NielsenSpecJson) -> Result<Self> {
        let parse = |v: &[String], d: usize| {
            v.iter()
                .map(|s| Permutation::parse(s, d))
                .collect::<Result<Vec<_>>>()
        };
        let g = GeneratedGroup::new(j.degree, parse(&j.generators, j.degree)?)?;
        let mut spec = NielsenClassSpec::new(g, parse(&j.classes, j.degree)?)?
            .with_mode(j.mode)
            .with_ordered(j.ordered)
            .with_outer(parse(&j.outer, j.degree)?)?;
        if let Some(s) = &j.second {
            spec = spec.with_second(s.degree, parse(&s.generators, s.degree)?)?;
        }
        Ok(spec)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("spec serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: NielsenSpecJson = serde_json::from_str(s)?;
        NielsenClassSpec::from_json(&j)
    }
}

/// An `r`-tuple of group elements.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NielsenElement(pub Vec<Permutation>);

impl NielsenElement {
    pub fn entries(&self) -> &[Permutation] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self, h: &Permutation) -> NielsenElement {
        NielsenElement(self.0.iter().map(|g| g.conj_unchecked(h)).collect())
    }

    /// Parse entries separated by commas at top level, e.g.
    /// `(1 2), (1 3)(2 4), ...`.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let mut entries = Vec::new();
        let mut cur = String::new();
        let mut depth = 0i32;
        for ch in text.chars() {
            match ch {
                '(' => {
                    depth += 1;
                    cur.push(ch);
                }
                ')' => {
                    depth -= 1;
                    cur.push(ch);
                }
                ',' | ';' if depth == 0 => {
                    entries.push(Permutation::parse(cur.trim(), degree)?);
                    cur.clear();
                }
                _ => cur.push(ch),
            }
        }
        if !cur.trim().is_empty() {
            entries.push(Permutation::parse(cur.trim(), degree)?);
        }
        if entries.is_empty() {
            return Err(Error::Parse("empty tuple".into()));
        }
        Ok(NielsenElement(entries))
    }
}

impl fmt::Display for NielsenElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for NielsenElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// One generator of the Hurwitz monodromy group or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BraidGen {
    /// `q_i`, 1-based.
    Q(usize),
    QInv(usize),
    Sh,
    ShInv,
}

/// A word in the braid generators, applied left to right.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BraidWord(pub Vec<BraidGen>);

impl FromStr for BraidWord {
    type Err = Error;
    /// Whitespace-separated letters such as `q1 q2^-1 sh sh^-1`.
    fn from_str(s: &str) -> Result<BraidWord> {
        let mut out = Vec::new();
        for tok in s.split_whitespace() {
            let (base, inv) = match tok.strip_suffix("^-1") {
                Some(b) => (b, true),
                None => (tok, false),
            };
            let g = if base == "sh" {
                if inv {
                    BraidGen::ShInv
                } else {
                    BraidGen::Sh
                }
            } else if let Some(i) = base.strip_prefix('q') {
                let i: usize = i
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad braid letter {tok:?}")))?;
                if i == 0 {
                    return Err(Error::Parse("braid indices start at 1".into()));
                }
                if inv {
                    BraidGen::QInv(i)
                } else {
                    BraidGen::Q(i)
                }
            } else {
                return Err(Error::Parse(format!("bad braid letter {tok:?}")));
            };
            out.push(g);
        }
        Ok(BraidWord(out))
    }
}

fn apply_gen(t: &mut Vec<Permutation>, g: BraidGen) {
    match g {
        BraidGen::Q(i) => {
            let (a, b) = (t[i - 1].clone(), t[i].clone());
            t[i - 1] = b.conj_unchecked(&a.inverse());
            t[i] = a;
        }
        BraidGen::QInv(i) => {
            let (a, b) = (t[i - 1].clone(), t[i].clone());
            t[i - 1] = b.clone();
            t[i] = a.conj_unchecked(&b);
        }
        BraidGen::Sh => t.rotate_left(1),
        BraidGen::ShInv => t.rotate_right(1),
    }
}

/// Apply a braid word. Twist indices must satisfy `i < r`.
pub fn braid_apply(e: &NielsenElement, w: &BraidWord) -> Result<NielsenElement> {
    let r = e.len();
    for g in &w.0 {
        if let BraidGen::Q(i) | BraidGen::QInv(i) = g {
            if *i == 0 || *i >= r {
                return Err(Error::Input(format!("twist index {i} out of range for r = {r}")));
            }
        }
    }
    let mut t = e.0.clone();
    for &g in &w.0 {
        apply_gen(&mut t, g);
    }
    Ok(NielsenElement(t))
}

/// Result of an enumeration.
#[derive(Clone, Debug)]
pub struct Enumeration {
    pub elements: Vec<NielsenElement>,
    pub raw_count: usize,
    pub mode: Mode,
    /// How the equivalence group was obtained: `trivial`, `inner`,
    /// `normalizer` or `inner+catalog`.
    pub equivalence: String,
    pub equivalence_order: u128,
}

/// Shared state for enumeration and canonical forms.
struct Context {
    distinct: Vec<Vec<Permutation>>,
    member: Vec<HashSet<Permutation>>,
    pattern: Vec<usize>,
    equivalence: Vec<Permutation>,
    equivalence_name: String,
    equivalence_order: u128,
    ordered: bool,
}

impl Context {
    fn new(spec: &NielsenClassSpec, mode: Mode) -> Result<Context> {
        let g = &spec.group;
        let mut distinct: Vec<Vec<Permutation>> = Vec::new();
        let mut pattern = Vec::new();
        for c in &spec.classes {
            let cls = g.conjugacy_class(c)?.elements;
            let idx = match distinct.iter().position(|d| d[0] == cls[0]) {
                Some(i) => i,
                None => {
                    distinct.push(cls);
                    distinct.len() - 1
                }
            };
            pattern.push(idx);
        }
        let member = distinct.iter().map(|d| d.iter().cloned().collect()).collect();
        let (eq_group, name) = match mode {
            Mode::Raw => (GeneratedGroup::trivial(g.degree()), "trivial"),
            Mode::Inner => (g.clone(), "inner"),
            Mode::Absolute => {
                if g.degree() as u64 <= limits::normalizer_degree() {
                    (g.class_stabilizer(&spec.classes)?, "normalizer")
                } else {
                    let mut gens = g.generators().to_vec();
                    gens.extend(spec.outer.iter().cloned());
                    (GeneratedGroup::new(g.degree(), gens)?, "inner+catalog")
                }
            }
        };
        Ok(Context {
            distinct,
            member,
            pattern,
            equivalence_order: eq_group.order(),
            equivalence: eq_group.elements()?,
            equivalence_name: name.to_string(),
            ordered: spec.ordered,
        })
    }

    fn arrangements(&self) -> Vec<Vec<usize>> {
        if self.ordered {
            return vec![self.pattern.clone()];
        }
        let mut a: Vec<u32> = self.pattern.iter().map(|&i| i as u32).collect();
        a.sort_unstable();
        let mut out = Vec::new();
        loop {
            out.push(a.iter().map(|&i| i as usize).collect());
            if !next_permutation(&mut a) {
                break;
            }
        }
        out
    }

    fn in_class_set(&self, t: &[Permutation]) -> bool {
        if t.len() != self.pattern.len() {
            return false;
        }
        let pat: Option<Vec<usize>> = t
            .iter()
            .map(|g| self.member.iter().position(|m| m.contains(g)))
            .collect();
        let Some(mut pat) = pat else { return false };
        if self.ordered {
            pat == self.pattern
        } else {
            let mut want = self.pattern.clone();
            want.sort_unstable();
            pat.sort_unstable();
            pat == want
        }
    }

    fn canonical(&self, e: &NielsenElement) -> NielsenElement {
        let mut best = e.clone();
        for h in &self.equivalence {
            let c = e.conjugate(h);
            if c < best && (!self.ordered || self.in_class_set(&c.0)) {
                best = c;
            }
        }
        best
    }
}

fn search_size(ctx: &Context) -> u128 {
    ctx.arrangements()
        .iter()
        .map(|a| {
            a[..a.len() - 1]
                .iter()
                .map(|&i| ctx.distinct[i].len() as u128)
                .product::<u128>()
        })
        .sum()
}

fn enumerate_raw_ctx(spec: &NielsenClassSpec, ctx: &Context) -> Result<Vec<NielsenElement>> {
    limits::check("Nielsen search size", search_size(ctx), limits::enumeration_cap())?;
    let n = spec.group.degree();
    let order = spec.group.order();
    let r = spec.r();
    let mut out = Vec::new();
    for arr in ctx.arrangements() {
        let mut stack: Vec<Permutation> = Vec::with_capacity(r);
        let mut prefix = vec![Permutation::identity(n)];
        fn rec(
            depth: usize,
            arr: &[usize],
            ctx: &Context,
            stack: &mut Vec<Permutation>,
            prefix: &mut Vec<Permutation>,
            n: usize,
            order: u128,
            out: &mut Vec<NielsenElement>,
        ) -> Result<()> {
            let r = arr.len();
            if depth == r - 1 {
                let last = prefix[depth].inverse();
                if !ctx.member[arr[r - 1]].contains(&last) {
                    return Ok(());
                }
                stack.push(last);
                let gen = GeneratedGroup::new(n, stack.clone())?;
                if gen.order() == order {
                    out.push(NielsenElement(stack.clone()));
                }
                stack.pop();
                return Ok(());
            }
            for g in &ctx.distinct[arr[depth]] {
                let p = prefix[depth].mul_unchecked(g);
                stack.push(g.clone());
                prefix.push(p);
                rec(depth + 1, arr, ctx, stack, prefix, n, order, out)?;
                prefix.pop();
                stack.pop();
            }
            Ok(())
        }
        rec(0, &arr, ctx, &mut stack, &mut prefix, n, order, &mut out)?;
    }
    out.sort();
    Ok(out)
}

/// Every tuple of the class, without reduction, sorted.
pub fn enumerate_raw(spec: &NielsenClassSpec) -> Result<Vec<NielsenElement>> {
    let ctx = Context::new(spec, Mode::Raw)?;
    enumerate_raw_ctx(spec, &ctx)
}

/// Canonical representatives under the class's mode: the least tuple (by
/// image sequences) in each equivalence class, sorted.
pub fn enumerate(spec: &NielsenClassSpec) -> Result<Enumeration> {
    enumerate_in_mode(spec, spec.mode)
}

/// Like [`enumerate`] with an explicit mode.
pub fn enumerate_in_mode(spec: &NielsenClassSpec, mode: Mode) -> Result<Enumeration> {
    let ctx = Context::new(spec, mode)?;
    let raw = enumerate_raw_ctx(spec, &ctx)?;
    let set: BTreeSet<NielsenElement> = raw.iter().map(|e| ctx.canonical(e)).collect();
    Ok(Enumeration {
        elements: set.into_iter().collect(),
        raw_count: raw.len(),
        mode,
        equivalence: ctx.equivalence_name.clone(),
        equivalence_order: ctx.equivalence_order,
    })
}

/// Partition of the reduced class into orbits of the braid group.
#[derive(Clone, Debug)]
pub struct BraidOrbits {
    pub elements: Vec<NielsenElement>,
    /// Indices into `elements`, each orbit sorted, orbits ordered by least
    /// index.
    pub orbits: Vec<Vec<usize>>,
}

impl BraidOrbits {
    pub fn lengths(&self) -> Vec<usize> {
        self.orbits.iter().map(|o| o.len()).collect()
    }
}

fn braid_closure(spec: &NielsenClassSpec, mode: Mode) -> Result<(Context, BraidOrbits)> {
    let ctx = Context::new(spec, mode)?;
    let raw = enumerate_raw_ctx(spec, &ctx)?;
    let set: BTreeSet<NielsenElement> = raw.iter().map(|e| ctx.canonical(e)).collect();
    let elements: Vec<NielsenElement> = set.into_iter().collect();
    let index: HashMap<&NielsenElement, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let r = spec.r();
    let mut moves: Vec<BraidGen> = (1..r).map(BraidGen::Q).collect();
    moves.push(BraidGen::Sh);
    let mut comp = vec![usize::MAX; elements.len()];
    let mut orbits = Vec::new();
    for s in 0..elements.len() {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        comp[s] = id;
        let mut orbit = vec![s];
        let mut q = VecDeque::from([s]);
        while let Some(a) = q.pop_front() {
            for &m in &moves {
                let mut t = elements[a].0.clone();
                apply_gen(&mut t, m);
                if ctx.ordered && !ctx.in_class_set(&t) {
                    continue;
                }
                let c = ctx.canonical(&NielsenElement(t));
                let b = *index
                    .get(&c)
                    .ok_or_else(|| Error::Precondition("braid move left the Nielsen class".into()))?;
                if comp[b] == usize::MAX {
                    comp[b] = id;
                    orbit.push(b);
                    q.push_back(b);
                }
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    drop(index);
    Ok((ctx, BraidOrbits { elements, orbits }))
}

/// Orbits of the twists `q_1..q_{r-1}` and the shift on the reduced class.
/// For ordered specs only moves that keep the class order are used.
pub fn braid_orbits(spec: &NielsenClassSpec) -> Result<BraidOrbits> {
    braid_closure(spec, spec.mode).map(|(_, b)| b)
}

/// Action of the three-point braid group on a class with `r = 3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct H3Report {
    pub mode: Mode,
    /// `q_1^2` and `q_2^2` fix every reduced element.
    pub squares_trivial: bool,
    pub distinct_classes: usize,
    /// Class orderings realized by the reduced elements.
    pub orderings: usize,
    /// Order of the group induced on those orderings.
    pub induced_order: u128,
    pub orbit_lengths: Vec<usize>,
}

/// Checks that the squares of the twists act trivially and reports the
/// permutation action on class orderings. Raw mode is upgraded to inner.
pub fn h3_structure(spec: &NielsenClassSpec) -> Result<H3Report> {
    if spec.r() != 3 {
        return Err(Error::Precondition(format!("three entries required, got {}", spec.r())));
    }
    let mode = if spec.mode == Mode::Raw { Mode::Inner } else { spec.mode };
    let work = spec.clone().with_mode(mode).with_ordered(false);
    let (ctx, orbits) = braid_closure(&work, mode)?;
    let mut squares_trivial = true;
    for e in &orbits.elements {
        for i in [1, 2] {
            let w = BraidWord(vec![BraidGen::Q(i), BraidGen::Q(i)]);
            squares_trivial &= ctx.canonical(&braid_apply(e, &w)?) == *e;
        }
    }
    let pattern_of = |e: &NielsenElement| -> Vec<usize> {
        e.0.iter()
            .map(|g| ctx.member.iter().position(|m| m.contains(g)).expect("class member"))
            .collect()
    };
    let mut patterns: Vec<Vec<usize>> = orbits.elements.iter().map(pattern_of).collect();
    patterns.sort();
    patterns.dedup();
    let gens: Vec<Permutation> = [(0usize, 1usize), (1, 2)]
        .iter()
        .map(|&(a, b)| {
            let img: Vec<u32> = patterns
                .iter()
                .map(|p| {
                    let mut q = p.clone();
                    q.swap(a, b);
                    patterns.binary_search(&q).expect("orderings closed under swaps") as u32
                })
                .collect();
            Permutation::from_zero_based(img)
        })
        .collect();
    let induced = GeneratedGroup::new(patterns.len(), gens)?;
    Ok(H3Report {
        mode,
        squares_trivial,
        distinct_classes: ctx.distinct.len(),
        orderings: patterns.len(),
        induced_order: induced.order(),
        orbit_lengths: orbits.lengths(),
    })
}

/// Outcome of merging two adjacent entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalesced {
    pub element: NielsenElement,
    /// The merged tuple generates the same group.
    pub restricted: bool,
    /// The product was the identity and its entry was removed.
    pub dropped_identity: bool,
}

/// Replace entries `i` and `i + 1` (1-based) by their product.
pub fn coalesce(e: &NielsenElement, i: usize) -> Result<Coalesced> {
    let r = e.len();
    if i == 0 || i >= r {
        return Err(Error::Input(format!("coalescing position {i} out of range for r = {r}")));
    }
    let n = e.0[0].degree();
    let merged = e.0[i - 1].mul_unchecked(&e.0[i]);
    let mut t: Vec<Permutation> = e.0[..i - 1].to_vec();
    let dropped = merged.is_identity();
    if !dropped {
        t.push(merged);
    }
    t.extend_from_slice(&e.0[i + 1..]);
    let before = GeneratedGroup::new(n, e.0.clone())?.order();
    let after = if t.is_empty() {
        1
    } else {
        GeneratedGroup::new(n, t.clone())?.order()
    };
    Ok(Coalesced {
        element: NielsenElement(t),
        restricted: before == after,
        dropped_identity: dropped,
    })
}

/// Merge entries `i < j` (1-based): entry `j` is first braided leftward,
/// unchanged, to position `i + 1`.
pub fn coalesce_positions(e: &NielsenElement, i: usize, j: usize) -> Result<Coalesced> {
    if i == 0 || j <= i || j > e.len() {
        return Err(Error::Input(format!("bad coalescing positions {i}, {j}")));
    }
    let w = BraidWord((i + 1..j).rev().map(BraidGen::QInv).collect());
    coalesce(&braid_apply(e, &w)?, i)
}

/// Coalesce two adjacent branch points of a cover; the merged label is
/// `a+b`. Returns the cover and whether generation survived.
pub fn coalesce_cover(c: &Cover, i: usize) -> Result<(Cover, bool)> {
    let res = coalesce(&NielsenElement(c.cycles().to_vec()), i)?;
    let labels = c.branch_points();
    let mut l: Vec<String> = labels[..i - 1].to_vec();
    if !res.dropped_identity {
        l.push(format!("{}+{}", labels[i - 1], labels[i]));
    }
    l.extend_from_slice(&labels[i + 1..]);
    Ok((Cover::new(c.degree(), l, res.element.0)?, res.restricted))
}

/// Genus does not increase from `before` to `after`.
pub fn coalesce_genus_check(before: &Cover, after: &Cover) -> Result<bool> {
    Ok(after.genus()? <= before.genus()?)
}

/// Isomorphism between two faithful permutation representations given by
/// images of common generators.
#[derive(Clone, Debug)]
pub struct RepresentationMap {
    map: HashMap<Permutation, Permutation>,
    target_degree: usize,
}

impl RepresentationMap {
    pub fn new(d1: usize, gens1: &[Permutation], d2: usize, gens2: &[Permutation]) -> Result<Self> {
        if gens1.len() != gens2.len() || gens1.is_empty() {
            return Err(Error::Input("representations need equally many generator images".into()));
        }
        if gens1.iter().any(|g| g.degree() != d1) || gens2.iter().any(|g| g.degree() != d2) {
            return Err(Error::Input("generator degree mismatch".into()));
        }
        let g1 = GeneratedGroup::new(d1, gens1.to_vec())?;
        let g2 = GeneratedGroup::new(d2, gens2.to_vec())?;
        let joint: Vec<Permutation> = gens1.iter().zip(gens2).map(|(a, b)| a.direct_sum(b)).collect();
        let gj = GeneratedGroup::new(d1 + d2, joint)?;
        if gj.order() != g1.order() || gj.order() != g2.order() {
            return Err(Error::Input(format!(
                "generator images do not define an isomorphism (orders {}, {}, joint {})",
                g1.order(),
                g2.order(),
                gj.order()
            )));
        }
        let mut map = HashMap::new();
        for e in gj.elements()? {
            let a = e.restrict0(&(0..d1).collect::<Vec<_>>());
            let b = e.restrict0(&(d1..d1 + d2).collect::<Vec<_>>());
            map.insert(a, b);
        }
        Ok(RepresentationMap { map, target_degree: d2 })
    }

    pub fn apply(&self, x: &Permutation) -> Result<Permutation> {
        self.map.get(x).cloned().ok_or_else(|| Error::NotMember(x.to_string()))
    }

    pub fn target_degree(&self) -> usize {
        self.target_degree
    }

    pub fn apply_cover(&self, c: &Cover) -> Result<Cover> {
        let cycles = c.cycles().iter().map(|x| self.apply(x)).collect::<Result<Vec<_>>>()?;
        Cover::new(self.target_degree, c.branch_points().to_vec(), cycles)
    }
}

/// Paired tuples `(T_1(mu), T_2(mu))` over the class reduced by inner
/// conjugation. Requires a second representation.
pub fn paired_enumerate(spec: &NielsenClassSpec) -> Result<Vec<PairedCover>> {
    let (d2, images) = spec
        .second()
        .ok_or_else(|| Error::Precondition("no second representation".into()))?;
    let map = RepresentationMap::new(spec.group.degree(), spec.group.generators(), d2, images)?;
    let n = spec.group.degree();
    enumerate_in_mode(spec, Mode::Inner)?
        .elements
        .iter()
        .map(|e| {
            let s = Cover::with_default_labels(n, e.0.clone())?;
            PairedCover::new(s.clone(), map.apply_cover(&s)?)
        })
        .collect()
}

/// Product of the entries, for checks.
pub fn element_product(e: &NielsenElement) -> Permutation {
    perm::product(e.0[0].degree(), &e.0)
}
