//! Permutations of `{1..n}`.
//!
//! Permutations act on the right: `(i)(p*q) = ((i)p)q`. Letters are 1-based
//! in every public signature and in printed or parsed text.

use std::fmt;
use std::ops::Mul;

use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // 0-based images; ordering on this vector is the "image sequence" order
    img: Vec<u32>,
}

/// Multiset of cycle lengths, fixed points included, sorted descending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType(pub Vec<usize>);

impl CycleType {
    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            img: (0..n as u32).collect(),
        }
    }

    /// Build from a 1-based image list: `images[i-1]` is the image of `i`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut img = Vec::with_capacity(n);
        for &v in images {
            if v == 0 || v > n {
                return Err(Error::OutOfRange { letter: v, degree: n });
            }
            if seen[v - 1] {
                return Err(Error::Repeated(v));
            }
            seen[v - 1] = true;
            img.push((v - 1) as u32);
        }
        Ok(Permutation { img })
    }

    pub(crate) fn from_zero_based(img: Vec<u32>) -> Self {
        debug_assert!({
            let mut s = img.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| v as usize == i)
        });
        Permutation { img }
    }

    /// Build from disjoint 1-based cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut img: Vec<u32> = (0..n as u32).collect();
        let mut seen = vec![false; n];
        for c in cycles {
            for &a in c {
                if a == 0 || a > n {
                    return Err(Error::OutOfRange { letter: a, degree: n });
                }
                if seen[a - 1] {
                    return Err(Error::Repeated(a));
                }
                seen[a - 1] = true;
            }
            for k in 0..c.len() {
                img[c[k] - 1] = (c[(k + 1) % c.len()] - 1) as u32;
            }
        }
        Ok(Permutation { img })
    }

    /// Parse cycle notation such as `"(1 3)(4 5)"`. The empty string and
    /// `"()"` both denote the identity.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut current: Option<Vec<usize>> = None;
        let mut number = String::new();
        let flush = |number: &mut String, current: &mut Option<Vec<usize>>| -> Result<()> {
            if number.is_empty() {
                return Ok(());
            }
            let v: usize = number
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer {number:?}")))?;
            match current {
                Some(c) => c.push(v),
                None => return Err(Error::Parse(format!("integer {v} outside parentheses"))),
            }
            number.clear();
            Ok(())
        };
        for ch in text.chars() {
            match ch {
                '(' => {
                    if current.is_some() {
                        return Err(Error::Parse("nested '('".into()));
                    }
                    current = Some(Vec::new());
                }
                ')' => {
                    flush(&mut number, &mut current)?;
                    match current.take() {
                        Some(c) => {
                            if !c.is_empty() {
                                cycles.push(c)
                            }
                        }
                        None => return Err(Error::Parse("unmatched ')'".into())),
                    }
                }
                c if c.is_ascii_digit() => {
                    if current.is_none() {
                        return Err(Error::Parse("digit outside parentheses".into()));
                    }
                    number.push(c);
                }
                c if c.is_whitespace() || c == ',' => flush(&mut number, &mut current)?,
                c => return Err(Error::Parse(format!("unexpected character {c:?}"))),
            }
        }
        if current.is_some() {
            return Err(Error::Parse("unclosed '('".into()));
        }
        Permutation::from_cycles(n, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    /// Image of the 1-based letter `i`.
    pub fn image(&self, i: usize) -> usize {
        self.img[i - 1] as usize + 1
    }

    /// 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.img.iter().map(|&v| v as usize + 1).collect()
    }

    #[inline]
    pub(crate) fn at(&self, i: usize) -> usize {
        self.img[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &v)| v as usize == i)
    }

    /// `self * other`, i.e. apply `self` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            img: self.img.iter().map(|&v| other.img[v as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut img = vec![0u32; self.img.len()];
        for (i, &v) in self.img.iter().enumerate() {
            img[v as usize] = i as u32;
        }
        Permutation { img }
    }

    pub fn pow(&self, e: i64) -> Permutation {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut k = e.unsigned_abs() % self.order();
        let mut acc = Permutation::identity(self.degree());
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_unchecked(&sq);
            }
            sq = sq.mul_unchecked(&sq);
            k >>= 1;
        }
        acc
    }

    /// `h^-1 * self * h`; relabels the cycles of `self` through `h`.
    pub fn conjugate(&self, h: &Permutation) -> Result<Permutation> {
        if self.degree() != h.degree() {
            return Err(Error::DegreeMismatch(self.degree(), h.degree()));
        }
        Ok(self.conj_unchecked(h))
    }

    pub(crate) fn conj_unchecked(&self, h: &Permutation) -> Permutation {
        let mut img = vec![0u32; self.img.len()];
        for (i, &v) in self.img.iter().enumerate() {
            img[h.img[i] as usize] = h.img[v as usize];
        }
        Permutation { img }
    }

    /// All cycles as 0-based letter lists, fixed points included, each
    /// starting at its least letter, ordered by least letter.
    pub(crate) fn cycles0(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut j = self.at(s);
            while j != s {
                seen[j] = true;
                c.push(j);
                j = self.at(j);
            }
            out.push(c);
        }
        out
    }

    /// Nontrivial cycles in canonical form, 1-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.cycles0()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| c.into_iter().map(|a| a + 1).collect())
            .collect()
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut v: Vec<usize> = self.cycles0().iter().map(|c| c.len()).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        CycleType(v)
    }

    pub fn num_cycles(&self) -> usize {
        self.cycles0().len()
    }

    /// `n - #cycles`, the sum over cycles of `length - 1`.
    pub fn index(&self) -> usize {
        self.degree() - self.num_cycles()
    }

    pub fn order(&self) -> u64 {
        self.cycles0()
            .iter()
            .fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    pub fn fixed_points(&self) -> usize {
        self.img
            .iter()
            .enumerate()
            .filter(|(i, &v)| *i == v as usize)
            .count()
    }

    /// True iff every cycle length of `self` is a multiple of `order(t)`.
    pub fn dominates(&self, t: &Permutation) -> bool {
        let o = t.order() as usize;
        self.cycles0().iter().all(|c| c.len() % o == 0)
    }

    /// Restriction to an invariant letter set (0-based, any order). Letters
    /// are renumbered by their rank in the sorted set.
    pub(crate) fn restrict0(&self, support: &[usize]) -> Permutation {
        let mut sorted = support.to_vec();
        sorted.sort_unstable();
        let mut pos = vec![u32::MAX; self.degree()];
        for (k, &a) in sorted.iter().enumerate() {
            pos[a] = k as u32;
        }
        let img = sorted
            .iter()
            .map(|&a| {
                let p = pos[self.at(a)];
                assert!(p != u32::MAX, "restriction to a non-invariant set");
                p
            })
            .collect();
        Permutation { img }
    }

    /// Restriction to an invariant set of 1-based letters.
    pub fn restrict(&self, letters: &[usize]) -> Result<Permutation> {
        let n = self.degree();
        let mut inset = vec![false; n];
        for &a in letters {
            if a == 0 || a > n {
                return Err(Error::OutOfRange { letter: a, degree: n });
            }
            inset[a - 1] = true;
        }
        for &a in letters {
            if !inset[self.at(a - 1)] {
                return Err(Error::Precondition(format!(
                    "letter set is not invariant under {self}"
                )));
            }
        }
        let z: Vec<usize> = letters.iter().map(|a| a - 1).collect();
        Ok(self.restrict0(&z))
    }

    /// Direct sum on `m + n` letters: `self` on the first block, `other`
    /// shifted onto the second.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let m = self.degree() as u32;
        let mut img = self.img.clone();
        img.extend(other.img.iter().map(|&v| v + m));
        Permutation { img }
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Right-action product. Panics on a degree mismatch; use
    /// [`Permutation::compose`] for a checked version.
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        self.mul_unchecked(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|a| a.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Ordered product of a list, identity of degree `n` when empty.
pub fn product(n: usize, perms: &[Permutation]) -> Permutation {
    perms
        .iter()
        .fold(Permutation::identity(n), |acc, p| acc.mul_unchecked(p))
}
