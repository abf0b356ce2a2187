//! Covers of the projective line given by branch-cycle tuples.

use std::collections::HashSet;
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{BlockSystem, GeneratedGroup};
use crate::perm::{self, CycleType, Permutation};

/// Exact rational used for orbifold characteristics.
pub type Rational = Ratio<i128>;

/// A branched cover: degree, ordered branch-point labels and one branch
/// cycle per label. Stored tuples never contain the identity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cover {
    degree: usize,
    branch_points: Vec<String>,
    cycles: Vec<Permutation>,
}

/// JSON shape of a cover.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CoverJson {
    pub degree: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub branch_points: Option<Vec<String>>,
    pub cycles: Vec<String>,
}

/// Outcome of [`Cover::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidityReport {
    pub degree: usize,
    pub product_one: bool,
    pub transitive: bool,
    pub identity_entries: usize,
    pub cycle_types: Vec<String>,
}

impl ValidityReport {
    /// Usable as an irreducible cover.
    pub fn is_valid(&self) -> bool {
        self.product_one && self.transitive && self.identity_entries == 0
    }
}

/// A group with a multiset of conjugacy classes and a representation tag.
#[derive(Clone, Debug)]
pub struct NielsenDatum {
    pub group: GeneratedGroup,
    pub classes: Vec<Permutation>,
    pub representation: String,
}

impl NielsenDatum {
    pub fn new(group: GeneratedGroup, classes: Vec<Permutation>, representation: &str) -> Result<Self> {
        for c in &classes {
            if !group.contains(c) {
                return Err(Error::NotMember(c.to_string()));
            }
        }
        Ok(NielsenDatum {
            group,
            classes,
            representation: representation.to_string(),
        })
    }
}

impl Cover {
    /// Build a cover; labels must be distinct and entries non-identity.
    pub fn new(degree: usize, branch_points: Vec<String>, cycles: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::Input("degree must be at least 1".into()));
        }
        if branch_points.len() != cycles.len() {
            return Err(Error::Input(format!(
                "{} branch points but {} cycles",
                branch_points.len(),
                cycles.len()
            )));
        }
        let mut seen = HashSet::new();
        for l in &branch_points {
            if !seen.insert(l.as_str()) {
                return Err(Error::Input(format!("repeated branch point label {l:?}")));
            }
        }
        for (l, c) in branch_points.iter().zip(&cycles) {
            if c.degree() != degree {
                return Err(Error::DegreeMismatch(degree, c.degree()));
            }
            if c.is_identity() {
                return Err(Error::InvalidCover(format!("identity branch cycle at {l:?}")));
            }
        }
        Ok(Cover {
            degree,
            branch_points,
            cycles,
        })
    }

    /// Like [`Cover::new`] but silently drops identity entries and their
    /// labels.
    pub fn new_dropping_identities(
        degree: usize,
        branch_points: Vec<String>,
        cycles: Vec<Permutation>,
    ) -> Result<Self> {
        if branch_points.len() != cycles.len() {
            return Err(Error::Input("label and cycle counts differ".into()));
        }
        let (l, c): (Vec<String>, Vec<Permutation>) = branch_points
            .into_iter()
            .zip(cycles)
            .filter(|(_, c)| !c.is_identity())
            .unzip();
        Cover::new(degree, l, c)
    }

    /// Labels `z1, z2, ...`.
    pub fn with_default_labels(degree: usize, cycles: Vec<Permutation>) -> Result<Self> {
        let labels = (1..=cycles.len()).map(|i| format!("z{i}")).collect();
        Cover::new(degree, labels, cycles)
    }

    /// Parse cycle strings with the given labels.
    pub fn parse(degree: usize, labels: &[&str], cycles: &[&str]) -> Result<Self> {
        let perms = cycles
            .iter()
            .map(|s| Permutation::parse(s, degree))
            .collect::<Result<Vec<_>>>()?;
        Cover::new(degree, labels.iter().map(|s| s.to_string()).collect(), perms)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn branch_points(&self) -> &[String] {
        &self.branch_points
    }

    pub fn cycles(&self) -> &[Permutation] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Branch cycle at a label, identity if the label is not a branch point.
    pub fn cycle_at(&self, label: &str) -> Permutation {
        self.branch_points
            .iter()
            .position(|l| l == label)
            .map(|i| self.cycles[i].clone())
            .unwrap_or_else(|| Permutation::identity(self.degree))
    }

    pub fn validate(&self) -> ValidityReport {
        let prod = perm::product(self.degree, &self.cycles);
        let transitive =
            crate::group::orbit0(&self.cycles, self.degree, 0).len() == self.degree;
        ValidityReport {
            degree: self.degree,
            product_one: prod.is_identity(),
            transitive,
            identity_entries: self.cycles.iter().filter(|c| c.is_identity()).count(),
            cycle_types: self.cycles.iter().map(|c| c.cycle_type().to_string()).collect(),
        }
    }

    fn require_valid(&self) -> Result<()> {
        let r = self.validate();
        if !r.product_one {
            return Err(Error::InvalidCover("product-one fails".into()));
        }
        if !r.transitive {
            return Err(Error::InvalidCover("branch cycles are not transitive".into()));
        }
        Ok(())
    }

    /// Monodromy group generated by the branch cycles.
    pub fn group(&self) -> Result<GeneratedGroup> {
        GeneratedGroup::new(self.degree, self.cycles.clone())
    }

    pub fn index_sum(&self) -> usize {
        self.cycles.iter().map(|c| c.index()).sum()
    }

    /// Genus from `2(n + g - 1) = sum of indices`.
    pub fn genus(&self) -> Result<u64> {
        self.require_valid()?;
        genus_from_rh(self.degree as i128, self.index_sum() as i128, 0)
    }

    /// Genus of the Galois closure from
    /// `2(|G| + g - 1) = sum |G|/ord (ord - 1)`.
    pub fn galois_closure_genus(&self) -> Result<u128> {
        self.require_valid()?;
        let g = self.group()?.order() as i128;
        let sum: i128 = self
            .cycles
            .iter()
            .map(|c| {
                let o = c.order() as i128;
                g / o * (o - 1)
            })
            .sum();
        genus_from_rh(g, sum, 0).map(|v| v as u128)
    }

    /// `2 + sum (1/ord - 1)` as an exact rational.
    pub fn orbifold_char(&self) -> Result<Rational> {
        self.require_valid()?;
        Ok(orbifold_char_of_orders(self.cycles.iter().map(|c| c.order())))
    }

    /// Cover given by the action on right cosets of `h`. Identity images are
    /// dropped together with their labels.
    pub fn induced_cover(&self, h: &GeneratedGroup) -> Result<Cover> {
        let g = self.group()?;
        let ca = g.coset_action(h)?;
        Cover::new_dropping_identities(ca.index, self.branch_points.clone(), ca.images)
    }

    /// Quotient cover on the blocks of a block system.
    pub fn quotient(&self, bs: &BlockSystem) -> Result<Cover> {
        let images = self
            .cycles
            .iter()
            .map(|c| bs.action(c))
            .collect::<Result<Vec<_>>>()?;
        Cover::new_dropping_identities(bs.num_blocks(), self.branch_points.clone(), images)
    }

    /// Orbit lengths of the stabilizer of letter 1, sorted ascending.
    pub fn self_fiber_subdegrees(&self) -> Result<Vec<usize>> {
        if !self.validate().transitive {
            return Err(Error::InvalidCover("branch cycles are not transitive".into()));
        }
        let st = self.group()?.point_stabilizer(1)?;
        let mut v: Vec<usize> = st.all_orbits().iter().map(|o| o.len()).collect();
        v.sort_unstable();
        Ok(v)
    }

    /// Simultaneous conjugate of every branch cycle.
    pub fn conjugate(&self, h: &Permutation) -> Result<Cover> {
        let cycles = self
            .cycles
            .iter()
            .map(|c| c.conjugate(h))
            .collect::<Result<Vec<_>>>()?;
        Cover::new(self.degree, self.branch_points.clone(), cycles)
    }

    /// Cyclic left shift of entries and labels; preserves product-one.
    pub fn shifted(&self, k: usize) -> Cover {
        let r = self.cycles.len();
        if r == 0 {
            return self.clone();
        }
        let k = k % r;
        let mut cycles = self.cycles.clone();
        let mut labels = self.branch_points.clone();
        cycles.rotate_left(k);
        labels.rotate_left(k);
        Cover {
            degree: self.degree,
            branch_points: labels,
            cycles,
        }
    }

    /// Multiset of cycle types of the entries, in entry order.
    pub fn cycle_types(&self) -> Vec<CycleType> {
        self.cycles.iter().map(|c| c.cycle_type()).collect()
    }

    pub fn to_json(&self) -> CoverJson {
        CoverJson {
            degree: self.degree,
            branch_points: Some(self.branch_points.clone()),
            cycles: self.cycles.iter().map(|c| c.to_string()).collect(),
        }
    }

    pub fn from_json(j: &CoverJson) -> Result<Cover> {
        let labels = match &j.branch_points {
            Some(l) => l.clone(),
            None => (1..=j.cycles.len()).map(|i| format!("z{i}")).collect(),
        };
        let cycles = j
            .cycles
            .iter()
            .map(|s| Permutation::parse(s, j.degree))
            .collect::<Result<Vec<_>>>()?;
        Cover::new(j.degree, labels, cycles)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("cover serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Cover> {
        let j: CoverJson = serde_json::from_str(s)?;
        Cover::from_json(&j)
    }
}

impl fmt::Debug for Cover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cover[{}](", self.degree)?;
        for (i, (l, c)) in self.branch_points.iter().zip(&self.cycles).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{l}: {c}")?;
        }
        write!(f, ")")
    }
}

/// Solve `2g - 2 = deg (2 g_base - 2) + index_sum` for `g`.
pub(crate) fn genus_from_rh(deg: i128, index_sum: i128, base_genus: i128) -> Result<u64> {
    let twice = deg * (2 * base_genus - 2) + index_sum + 2;
    if twice % 2 != 0 {
        return Err(Error::InvalidCover(format!(
            "Riemann-Hurwitz parity fails (degree {deg}, index sum {index_sum})"
        )));
    }
    let g = twice / 2;
    if g < 0 {
        return Err(Error::InvalidCover(format!(
            "negative genus (degree {deg}, index sum {index_sum})"
        )));
    }
    Ok(g as u64)
}

pub fn orbifold_char_of_orders(orders: impl IntoIterator<Item = u64>) -> Rational {
    let mut acc = Rational::from_integer(2);
    for o in orders {
        acc += Rational::new(1, o as i128) - Rational::from_integer(1);
    }
    acc
}

/// Integers `u` in `1..n` coprime to `n` with `x^u` conjugate to `x` in `g`;
/// `x` must be an `n`-cycle of `g`.
pub fn multipliers(g: &GeneratedGroup, x: &Permutation) -> Result<Vec<u64>> {
    let n = g.degree();
    if x.cycle_type().0 != vec![n] {
        return Err(Error::Precondition(format!("{x} is not an {n}-cycle")));
    }
    let class = g.conjugacy_class(x)?;
    Ok((1..n as u64)
        .filter(|u| u.gcd(&(n as u64)) == 1)
        .filter(|&u| class.contains(&x.pow(u as i64)))
        .collect())
}

/// Trace comparison between two actions of one abstract group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Entanglement {
    pub galois_entangled: bool,
    pub davenport_entangled: bool,
}

/// Compare fixed-point counts of two faithful actions given as images of a
/// common generating list.
pub fn character_entanglement(t1: &[Permutation], t2: &[Permutation]) -> Result<Entanglement> {
    if t1.len() != t2.len() || t1.is_empty() {
        return Err(Error::Input("actions need equally many generator images".into()));
    }
    let m = t1[0].degree();
    let n = t2[0].degree();
    let g1 = GeneratedGroup::new(m, t1.to_vec())?;
    let g2 = GeneratedGroup::new(n, t2.to_vec())?;
    let joint: Vec<Permutation> = t1.iter().zip(t2).map(|(a, b)| a.direct_sum(b)).collect();
    let gj = GeneratedGroup::new(m + n, joint)?;
    if gj.order() != g1.order() || gj.order() != g2.order() {
        return Err(Error::Precondition(format!(
            "actions are not of a common group (orders {}, {}, joint {})",
            g1.order(),
            g2.order(),
            gj.order()
        )));
    }
    let mut galois = true;
    let mut davenport = true;
    for e in gj.elements()? {
        let f1 = (0..m).filter(|&i| e.at(i) == i).count();
        let f2 = (m..m + n).filter(|&i| e.at(i) == i).count();
        galois &= f1 == f2;
        davenport &= (f1 > 0) == (f2 > 0);
    }
    Ok(Entanglement {
        galois_entangled: galois,
        davenport_entangled: davenport,
    })
}
