//! Dominant weights of the classical families and the interlacing
//! conditions that index branching rules.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::halfint::{HalfInt, HalfIntVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// `GL(n)`
    GL,
    /// `B_n = Spin(2n+1)`
    B,
    /// `C_n = Sp(2n)`
    C,
    /// `D_n = Spin(2n)`
    D,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupFamily {
    family: Family,
    rank: usize,
}

impl GroupFamily {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let min = if family == Family::D { 2 } else { 1 };
        if rank < min {
            return Err(Error::InvalidGroup(format!(
                "{family:?} requires rank >= {min}, got {rank}"
            )));
        }
        Ok(GroupFamily { family, rank })
    }

    pub fn gl(n: usize) -> Result<Self> {
        Self::new(Family::GL, n)
    }
    pub fn b(n: usize) -> Result<Self> {
        Self::new(Family::B, n)
    }
    pub fn c(n: usize) -> Result<Self> {
        Self::new(Family::C, n)
    }
    pub fn d(n: usize) -> Result<Self> {
        Self::new(Family::D, n)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.family {
            Family::GL => "GL",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
        };
        write!(f, "{tag}{}", self.rank)
    }
}

impl FromStr for GroupFamily {
    type Err = Error;

    /// `GL3`, `B2`, `C2`, `D4`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (family, rest) = if let Some(r) = s.strip_prefix("GL") {
            (Family::GL, r)
        } else if let Some(r) = s.strip_prefix('B') {
            (Family::B, r)
        } else if let Some(r) = s.strip_prefix('C') {
            (Family::C, r)
        } else if let Some(r) = s.strip_prefix('D') {
            (Family::D, r)
        } else {
            return Err(Error::Parse(format!("unknown group {s:?}")));
        };
        let rank = rest
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad rank in {s:?}")))?;
        GroupFamily::new(family, rank)
    }
}

/// Whether `entries` satisfies the dominance condition of `group`.
pub fn is_dominant(group: GroupFamily, entries: &HalfIntVec) -> Result<bool> {
    if entries.len() != group.rank() {
        return Err(Error::LengthMismatch {
            left: group.rank(),
            right: entries.len(),
        });
    }
    let e = entries.as_slice();
    let decreasing = e.windows(2).all(|w| w[0] >= w[1]);
    let uniform = entries.all_integer() || entries.all_half_odd();
    let last = *e.last().expect("rank >= 1");
    Ok(match group.family() {
        Family::GL => entries.all_integer() && decreasing,
        Family::B => uniform && decreasing && last >= HalfInt::ZERO,
        Family::C => entries.all_integer() && decreasing && last >= HalfInt::ZERO,
        Family::D => {
            let n = e.len();
            uniform && e[..n - 1].windows(2).all(|w| w[0] >= w[1]) && e[n - 2] >= last.abs()
        }
    })
}

/// A highest weight for one of the classical families.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DominantWeight {
    group: GroupFamily,
    entries: HalfIntVec,
}

impl DominantWeight {
    pub fn new(group: GroupFamily, entries: HalfIntVec) -> Result<Self> {
        if !is_dominant(group, &entries)? {
            return Err(Error::NotDominant {
                group: group.to_string(),
                weight: entries.to_string(),
            });
        }
        Ok(DominantWeight { group, entries })
    }

    pub fn parse(group: GroupFamily, s: &str) -> Result<Self> {
        Self::new(group, HalfIntVec::parse_list(s)?)
    }

    pub fn from_ints(group: GroupFamily, e: &[i64]) -> Result<Self> {
        Self::new(group, HalfIntVec::from_ints(e.iter().copied()))
    }

    pub fn zero(group: GroupFamily) -> Self {
        DominantWeight {
            group,
            entries: HalfIntVec::zeros(group.rank()),
        }
    }

    pub fn group(&self) -> GroupFamily {
        self.group
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    pub fn entries(&self) -> &HalfIntVec {
        &self.entries
    }

    pub fn get(&self, i: usize) -> HalfInt {
        self.entries[i]
    }

    pub fn is_integral(&self) -> bool {
        self.entries.all_integer()
    }

    /// Sum of the entries.
    pub fn size(&self) -> HalfInt {
        self.entries.total()
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.entries)
    }
}

impl fmt::Debug for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.group, self.entries)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PairKind {
    /// `GL(n+1) ⊃ GL(n) × GL(1)`
    GlToGl,
    /// `Spin(2n+1) ⊃ Spin(2n)`
    BToD,
    /// `Spin(2n) ⊃ Spin(2n-1)`
    DToB,
    /// `Sp(2n) ⊃ Sp(2) × Sp(2n-2)`
    CToC1xC,
}

/// A group/subgroup pair, identified by kind and the rank of the big group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BranchingPair {
    kind: PairKind,
    big_rank: usize,
}

impl BranchingPair {
    pub fn new(kind: PairKind, big_rank: usize) -> Result<Self> {
        let ok = match kind {
            PairKind::GlToGl => big_rank >= 2,
            PairKind::BToD => big_rank >= 2,
            PairKind::DToB => big_rank >= 2,
            PairKind::CToC1xC => big_rank >= 2,
        };
        if !ok {
            return Err(Error::UnsupportedPair(format!(
                "{kind:?} with big rank {big_rank}"
            )));
        }
        Ok(BranchingPair { kind, big_rank })
    }

    pub fn kind(&self) -> PairKind {
        self.kind
    }

    pub fn big_rank(&self) -> usize {
        self.big_rank
    }

    pub fn big_group(&self) -> GroupFamily {
        let fam = match self.kind {
            PairKind::GlToGl => Family::GL,
            PairKind::BToD => Family::B,
            PairKind::DToB => Family::D,
            PairKind::CToC1xC => Family::C,
        };
        GroupFamily::new(fam, self.big_rank).expect("validated in BranchingPair::new")
    }

    /// The subgroup factor whose weights index the branching table
    /// (the `GL(1)` and `Sp(2)` factors are carried as grades).
    pub fn small_group(&self) -> GroupFamily {
        let (fam, r) = match self.kind {
            PairKind::GlToGl => (Family::GL, self.big_rank - 1),
            PairKind::BToD => (Family::D, self.big_rank),
            PairKind::DToB => (Family::B, self.big_rank - 1),
            PairKind::CToC1xC => (Family::C, self.big_rank - 1),
        };
        GroupFamily::new(fam, r).expect("validated in BranchingPair::new")
    }
}

impl fmt::Display for BranchingPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.big_rank;
        match self.kind {
            PairKind::GlToGl => write!(f, "GL{n}:GL{}", n - 1),
            PairKind::BToD => write!(f, "B{n}:D{n}"),
            PairKind::DToB => write!(f, "D{n}:B{}", n - 1),
            PairKind::CToC1xC => write!(f, "C{n}:C1xC{}", n - 1),
        }
    }
}

impl FromStr for BranchingPair {
    type Err = Error;

    /// `GL{n}:GL{n-1}`, `B{n}:D{n}`, `D{n}:B{n-1}`, `C{n}:C1xC{n-1}`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("unrecognised pair {s:?}"));
        let (big, small) = s.split_once(':').ok_or_else(bad)?;
        let big: GroupFamily = big.parse()?;
        let n = big.rank();
        let (kind, expected) = match big.family() {
            Family::GL => (PairKind::GlToGl, format!("GL{}", n.wrapping_sub(1))),
            Family::B => (PairKind::BToD, format!("D{n}")),
            Family::D => (PairKind::DToB, format!("B{}", n.wrapping_sub(1))),
            Family::C => (PairKind::CToC1xC, format!("C1xC{}", n.wrapping_sub(1))),
        };
        if small.trim() != expected {
            return Err(bad());
        }
        BranchingPair::new(kind, n)
    }
}

fn require_family(w: &DominantWeight, fam: Family, what: &str) -> Result<()> {
    if w.group().family() != fam {
        return Err(Error::RankMismatch(format!(
            "{what}: expected a {fam:?} weight, got {:?}",
            w
        )));
    }
    Ok(())
}

fn require_ranks(big: &DominantWeight, small: &DominantWeight, diff: usize) -> Result<()> {
    if big.rank() != small.rank() + diff {
        return Err(Error::RankMismatch(format!(
            "ranks {} and {} (expected difference {diff})",
            big.rank(),
            small.rank()
        )));
    }
    Ok(())
}

fn require_same_integrality(a: &DominantWeight, b: &DominantWeight) -> Result<()> {
    if a.is_integral() != b.is_integral() {
        return Err(Error::ParityMismatch(format!("{a} and {b}")));
    }
    Ok(())
}

/// Checks `upper_1 ≥ lower_1 ≥ upper_2 ≥ … ≥ lower_k ≥ upper_{k+1}` for the
/// overlapping prefix; with `lower.len() == upper.len() - 1` this is the
/// full interlacing chain.
pub(crate) fn chain_interlaces(upper: &[HalfInt], lower: &[HalfInt]) -> bool {
    lower
        .iter()
        .enumerate()
        .all(|(i, &m)| upper[i] >= m && upper.get(i + 1).is_none_or(|&u| m >= u))
}

/// `λ_1 ≥ μ_1 ≥ λ_2 ≥ … ≥ μ_n ≥ λ_{n+1}` for `λ` of `GL(n+1)` and `μ` of `GL(n)`.
pub fn interlaces_gl(lambda: &DominantWeight, mu: &DominantWeight) -> Result<bool> {
    require_family(lambda, Family::GL, "interlaces_gl")?;
    require_family(mu, Family::GL, "interlaces_gl")?;
    require_ranks(lambda, mu, 1)?;
    Ok(chain_interlaces(
        lambda.entries().as_slice(),
        mu.entries().as_slice(),
    ))
}

/// `λ_1 ≥ μ_1 ≥ … ≥ μ_{n-1} ≥ λ_n ≥ |μ_n|` for `λ` of `B_n`, `μ` of `D_n`.
pub fn interlaces_bd(lambda: &DominantWeight, mu: &DominantWeight) -> Result<bool> {
    require_family(lambda, Family::B, "interlaces_bd")?;
    require_family(mu, Family::D, "interlaces_bd")?;
    require_ranks(lambda, mu, 0)?;
    require_same_integrality(lambda, mu)?;
    let l = lambda.entries().as_slice();
    let m = mu.entries().as_slice();
    let n = l.len();
    Ok(chain_interlaces(l, &m[..n - 1]) && l[n - 1] >= m[n - 1].abs())
}

/// `λ_1 ≥ μ_1 ≥ λ_2 ≥ … ≥ μ_{n-1} ≥ |λ_n|` for `λ` of `D_n`, `μ` of `B_{n-1}`.
pub fn interlaces_db(lambda: &DominantWeight, mu: &DominantWeight) -> Result<bool> {
    require_family(lambda, Family::D, "interlaces_db")?;
    require_family(mu, Family::B, "interlaces_db")?;
    require_ranks(lambda, mu, 1)?;
    require_same_integrality(lambda, mu)?;
    let mut l = lambda.entries().0.clone();
    let n = l.len();
    l[n - 1] = l[n - 1].abs();
    Ok(chain_interlaces(&l, mu.entries().as_slice()))
}

/// `λ_j ≥ μ_j ≥ λ_{j+2}` for `1 ≤ j ≤ n-1`, with `λ_{n+1} = 0`.
pub fn doubly_interlaces_c(lambda: &DominantWeight, mu: &DominantWeight) -> Result<bool> {
    require_family(lambda, Family::C, "doubly_interlaces_c")?;
    require_family(mu, Family::C, "doubly_interlaces_c")?;
    require_ranks(lambda, mu, 1)?;
    let l = lambda.entries().as_slice();
    let m = mu.entries().as_slice();
    let at = |j: usize| l.get(j).copied().unwrap_or(HalfInt::ZERO);
    Ok(m.iter()
        .enumerate()
        .all(|(j, &mj)| l[j] >= mj && mj >= at(j + 2)))
}

/// All vectors `v` with `lo[i] ≤ v[i] ≤ hi[i]`, stepping by one, in
/// decreasing lexicographic order.
pub(crate) fn box_points(lo: &[HalfInt], hi: &[HalfInt]) -> Vec<HalfIntVec> {
    let mut out = Vec::new();
    if lo.iter().zip(hi).any(|(a, b)| a > b) {
        return out;
    }
    let mut cur: Vec<HalfInt> = hi.to_vec();
    loop {
        out.push(HalfIntVec(cur.clone()));
        // decrement like an odometer, last coordinate fastest
        let mut k = cur.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if cur[k] > lo[k] {
                cur[k] -= HalfInt::ONE;
                cur[k + 1..].copy_from_slice(&hi[k + 1..]);
                break;
            }
        }
    }
}

/// All `μ` satisfying the pair's interlacing predicate against `λ`, in
/// decreasing lexicographic order.
pub fn enumerate_interlacing(
    lambda: &DominantWeight,
    pair: BranchingPair,
) -> Result<Vec<DominantWeight>> {
    if lambda.group() != pair.big_group() {
        return Err(Error::UnsupportedPair(format!(
            "{:?} is not a weight of {}",
            lambda,
            pair.big_group()
        )));
    }
    let small = pair.small_group();
    let l = lambda.entries().as_slice();
    let n = l.len();
    let (lo, hi): (Vec<HalfInt>, Vec<HalfInt>) = match pair.kind() {
        PairKind::GlToGl => (
            (1..n).map(|i| l[i]).collect(),
            (0..n - 1).map(|i| l[i]).collect(),
        ),
        PairKind::BToD => {
            let mut lo: Vec<HalfInt> = (1..n).map(|i| l[i]).collect();
            lo.push(-l[n - 1]);
            (lo, l.to_vec())
        }
        PairKind::DToB => {
            let mut lo: Vec<HalfInt> = (1..n).map(|i| l[i]).collect();
            lo[n - 2] = l[n - 1].abs();
            (lo, l[..n - 1].to_vec())
        }
        PairKind::CToC1xC => {
            let at = |j: usize| l.get(j).copied().unwrap_or(HalfInt::ZERO);
            ((0..n - 1).map(|j| at(j + 2)).collect(), l[..n - 1].to_vec())
        }
    };
    let mut out = Vec::new();
    for p in box_points(&lo, &hi) {
        if is_dominant(small, &p)? {
            out.push(DominantWeight {
                group: small,
                entries: p,
            });
        }
    }
    Ok(out)
}

/// Every dominant weight of `group` with all `|entries| ≤ max_entry`, of the
/// requested integrality, in decreasing lex order.
pub fn dominant_weights_bounded(
    group: GroupFamily,
    max_entry: HalfInt,
    half_integral: bool,
) -> Vec<DominantWeight> {
    let n = group.rank();
    let top = if half_integral == max_entry.is_integer() {
        max_entry - HalfInt::HALF
    } else {
        max_entry
    };
    if top.is_negative() {
        return Vec::new();
    }
    let lo = vec![-top; n];
    let hi = vec![top; n];
    box_points(&lo, &hi)
        .into_iter()
        .filter(|p| is_dominant(group, p).unwrap_or(false))
        .map(|entries| DominantWeight { group, entries })
        .collect()
}
