//! Closed-form branching tables and the counting functions behind the
//! `GL` branching proof.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::binomial;

use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::sl2ring::SL2Module;
use crate::weights::{
    doubly_interlaces_c, enumerate_interlacing, BranchingPair, DominantWeight, Family, PairKind,
};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Multiplicity {
    Int(i64),
    Sl2(SL2Module),
}

impl Multiplicity {
    /// Dimension of the multiplicity space.
    pub fn dim(&self) -> i64 {
        match self {
            Multiplicity::Int(m) => *m,
            Multiplicity::Sl2(m) => m.dim(),
        }
    }

    pub fn is_genuine(&self) -> bool {
        match self {
            Multiplicity::Int(m) => *m > 0,
            Multiplicity::Sl2(m) => !m.is_zero() && m.is_genuine(),
        }
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multiplicity::Int(m) => write!(f, "{m}"),
            Multiplicity::Sl2(m) => write!(f, "{m}"),
        }
    }
}

/// Subgroup weight to multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchingTable {
    pub pair: BranchingPair,
    pub entries: BTreeMap<DominantWeight, Multiplicity>,
}

impl BranchingTable {
    pub fn new(pair: BranchingPair) -> Self {
        BranchingTable {
            pair,
            entries: BTreeMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, w: &DominantWeight) -> Option<&Multiplicity> {
        self.entries.get(w)
    }

    /// Entries in decreasing lex order of the weight.
    pub fn iter(&self) -> impl Iterator<Item = (&DominantWeight, &Multiplicity)> {
        self.entries.iter().rev()
    }
}

impl fmt::Display for BranchingTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (w, m)) in self.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{w}: {m}")?;
        }
        Ok(())
    }
}

fn require(w: &DominantWeight, fam: Family) -> Result<()> {
    if w.group().family() != fam {
        return Err(Error::InvalidGroup(format!(
            "expected a {fam:?} weight, got {w:?}"
        )));
    }
    Ok(())
}

fn multiplicity_free(lambda: &DominantWeight, kind: PairKind) -> Result<BranchingTable> {
    let pair = BranchingPair::new(kind, lambda.rank())?;
    let mut t = BranchingTable::new(pair);
    for mu in enumerate_interlacing(lambda, pair)? {
        t.entries.insert(mu, Multiplicity::Int(1));
    }
    Ok(t)
}

/// `GL(n+1) ⊃ GL(n)`: every interlacing `μ`, once.
pub fn branch_gl(lambda: &DominantWeight) -> Result<BranchingTable> {
    require(lambda, Family::GL)?;
    multiplicity_free(lambda, PairKind::GlToGl)
}

/// `Spin(2n+1) ⊃ Spin(2n)`: `λ_1 ≥ μ_1 ≥ … ≥ λ_n ≥ |μ_n|`, once each.
pub fn branch_bd(lambda: &DominantWeight) -> Result<BranchingTable> {
    require(lambda, Family::B)?;
    multiplicity_free(lambda, PairKind::BToD)
}

/// `Spin(2n) ⊃ Spin(2n-1)`: after replacing `λ_n` by `|λ_n|`, every
/// interlacing `μ`, once.
pub fn branch_db(lambda: &DominantWeight) -> Result<BranchingTable> {
    require(lambda, Family::D)?;
    let mut e = lambda.entries().clone();
    let last = e.len() - 1;
    e[last] = e[last].abs();
    multiplicity_free(&DominantWeight::new(lambda.group(), e)?, PairKind::DToB)
}

/// `Sp(2n) ⊃ Sp(2) × Sp(2n-2)`: doubly interlacing `μ` with multiplicity
/// [`sp_rearrangement`].
pub fn branch_sp(lambda: &DominantWeight) -> Result<BranchingTable> {
    require(lambda, Family::C)?;
    let pair = BranchingPair::new(PairKind::CToC1xC, lambda.rank())?;
    let mut t = BranchingTable::new(pair);
    for mu in enumerate_interlacing(lambda, pair)? {
        let v = sp_rearrangement(lambda, &mu)?;
        t.entries.insert(mu, Multiplicity::Sl2(v));
    }
    Ok(t)
}

/// Closed-form table for any supported pair.
pub fn branch(lambda: &DominantWeight, pair: BranchingPair) -> Result<BranchingTable> {
    if lambda.group() != pair.big_group() {
        return Err(Error::UnsupportedPair(format!(
            "{lambda:?} is not a weight of {}",
            pair.big_group()
        )));
    }
    match pair.kind() {
        PairKind::GlToGl => branch_gl(lambda),
        PairKind::BToD => branch_bd(lambda),
        PairKind::DToB => branch_db(lambda),
        PairKind::CToC1xC => branch_sp(lambda),
    }
}

/// Sorts `{λ_1, …, λ_n, μ_1, …, μ_{n-1}, 0}` into `x_1 ≥ y_1 ≥ … ≥ x_n ≥ y_n`
/// and returns `∏ S^(x_i - y_i)`.
pub fn sp_rearrangement(lambda: &DominantWeight, mu: &DominantWeight) -> Result<SL2Module> {
    if !doubly_interlaces_c(lambda, mu)? {
        return Err(Error::Precondition(format!(
            "{mu} does not doubly interlace {lambda}"
        )));
    }
    let mut all: Vec<HalfInt> = lambda
        .entries()
        .iter()
        .chain(mu.entries().iter())
        .copied()
        .collect();
    all.push(HalfInt::ZERO);
    all.sort_by(|a, b| b.cmp(a));
    let mut out = SL2Module::trivial();
    for pair in all.chunks(2) {
        let gap = (pair[0] - pair[1])
            .to_int()
            .expect("C weights are integral");
        out = out.mul(&SL2Module::irrep(gap));
    }
    Ok(out)
}

/// `m` and `m'` of a weakly interlacing `ν`, or `None` when
/// `λ_i ≥ ν_i ≥ λ_{i+1} - 1` fails somewhere.
fn shift_profile(lambda: &DominantWeight, nu: &[i64]) -> Result<Option<(usize, usize)>> {
    require(lambda, Family::GL)?;
    let l: Vec<i64> = lambda
        .entries()
        .iter()
        .map(|h| h.to_int().expect("GL weights are integral"))
        .collect();
    if nu.len() + 1 != l.len() {
        return Err(Error::LengthMismatch {
            left: l.len() - 1,
            right: nu.len(),
        });
    }
    let mut m = 0;
    let mut m_prime = 0;
    for (i, &v) in nu.iter().enumerate() {
        if v > l[i] || v < l[i + 1] - 1 {
            return Ok(None);
        }
        if v == l[i + 1] - 1 {
            m += 1;
        }
        if v == l[i] {
            m_prime += 1;
        }
    }
    Ok(Some((m, m_prime)))
}

/// Number of `ε' ∈ {0,1}^n` with `|ε'| = k` and `ν + ε'` interlacing `λ`:
/// `binom(n-m-m', k-m)` when `ν` weakly interlaces `λ`, else `0`.
pub fn shift_count(lambda: &DominantWeight, nu: &[i64], k: usize) -> Result<i64> {
    let n = nu.len();
    if k > n {
        return Err(Error::Precondition(format!("k = {k} exceeds n = {n}")));
    }
    let Some((m, mp)) = shift_profile(lambda, nu)? else {
        return Ok(0);
    };
    if k < m || k + mp > n {
        return Ok(0);
    }
    Ok(binomial((n - m - mp) as i64, (k - m) as i64))
}

/// `Σ_{k=max(m,1)}^{n-m'} (-1)^k shift_count(λ, ν, k)`.
pub fn signed_shift_sum(lambda: &DominantWeight, nu: &[i64]) -> Result<i64> {
    let n = nu.len();
    let Some((m, mp)) = shift_profile(lambda, nu)? else {
        return Ok(0);
    };
    let mut total = 0;
    for k in m.max(1)..=n.saturating_sub(mp) {
        let c = shift_count(lambda, nu, k)?;
        total += if k % 2 == 0 { c } else { -c };
    }
    Ok(total)
}

/// Case formula for [`signed_shift_sum`]: `-1` if `m = 0` (and `m' < n`),
/// `(-1)^m` if `m + m' = n` with `m > 0`, otherwise `0`.
pub fn signed_shift_closed_form(lambda: &DominantWeight, nu: &[i64]) -> Result<i64> {
    let n = nu.len();
    Ok(match shift_profile(lambda, nu)? {
        None => 0,
        Some((0, mp)) if mp < n => -1,
        Some((m, mp)) if m > 0 && m + mp == n => {
            if m % 2 == 0 {
                1
            } else {
                -1
            }
        }
        Some(_) => 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(g: &str, s: &str) -> DominantWeight {
        DominantWeight::parse(g.parse().unwrap(), s).unwrap()
    }

    fn keys(t: &BranchingTable) -> Vec<String> {
        t.iter().map(|(w, _)| w.to_string()).collect()
    }

    #[test]
    fn gl_example() {
        let t = branch_gl(&w("GL3", "2,1,0")).unwrap();
        assert_eq!(keys(&t), vec!["(2,1)", "(2,0)", "(1,1)", "(1,0)"]);
        assert!(t.entries.values().all(|m| *m == Multiplicity::Int(1)));
        assert_eq!(keys(&branch_gl(&w("GL2", "0,0")).unwrap()), vec!["(0)"]);
    }

    #[test]
    fn bd_examples() {
        assert_eq!(
            keys(&branch_bd(&w("B2", "1,0")).unwrap()),
            vec!["(1,0)", "(0,0)"]
        );
        assert_eq!(
            keys(&branch_bd(&w("B2", "1/2,1/2")).unwrap()),
            vec!["(1/2,1/2)", "(1/2,-1/2)"]
        );
        assert_eq!(
            keys(&branch_bd(&w("B3", "0,0,0")).unwrap()),
            vec!["(0,0,0)"]
        );
    }

    #[test]
    fn db_examples() {
        assert_eq!(
            keys(&branch_db(&w("D2", "1,0")).unwrap()),
            vec!["(1)", "(0)"]
        );
        assert_eq!(
            keys(&branch_db(&w("D3", "1/2,1/2,-1/2")).unwrap()),
            vec!["(1/2,1/2)"]
        );
        assert_eq!(
            branch_db(&w("D3", "2,1,-1")).unwrap(),
            branch_db(&w("D3", "2,1,1")).unwrap()
        );
    }

    #[test]
    fn sp_examples() {
        let t = branch_sp(&w("C2", "1,0")).unwrap();
        assert_eq!(
            t.get(&w("C1", "1")),
            Some(&Multiplicity::Sl2(SL2Module::irrep(0)))
        );
        assert_eq!(
            t.get(&w("C1", "0")),
            Some(&Multiplicity::Sl2(SL2Module::irrep(1)))
        );
        assert_eq!(t.len(), 2);
        let t = branch_sp(&w("C2", "2,1")).unwrap();
        let v = SL2Module::irrep(2).add(&SL2Module::irrep(0));
        assert_eq!(t.get(&w("C1", "1")), Some(&Multiplicity::Sl2(v)));
        assert_eq!(
            branch_sp(&w("C3", "0,0,0")).unwrap().get(&w("C2", "0,0")),
            Some(&Multiplicity::Sl2(SL2Module::trivial()))
        );
    }

    #[test]
    fn rearrangement_examples() {
        assert_eq!(
            sp_rearrangement(&w("C2", "1,0"), &w("C1", "1")).unwrap(),
            SL2Module::irrep(0)
        );
        assert_eq!(
            sp_rearrangement(&w("C2", "1,1"), &w("C1", "1")).unwrap(),
            SL2Module::irrep(1)
        );
        assert_eq!(
            sp_rearrangement(&w("C3", "4,0,0"), &w("C2", "0,0")).unwrap(),
            SL2Module::irrep(4)
        );
        assert!(sp_rearrangement(&w("C3", "3,2,1"), &w("C2", "0,0")).is_err());
    }

    #[test]
    fn counting_examples() {
        let l = w("GL3", "2,1,0");
        assert_eq!(shift_count(&l, &[1, 0], 1).unwrap(), 2);
        assert_eq!(shift_count(&l, &[1, 0], 2).unwrap(), 1);
        assert_eq!(shift_count(&l, &[3, 0], 1).unwrap(), 0);
        assert_eq!(signed_shift_sum(&l, &[1, 0]).unwrap(), -1);
        assert_eq!(signed_shift_sum(&l, &[2, 0]).unwrap(), -1);
        let l = w("GL3", "1,1,0");
        assert_eq!(signed_shift_sum(&l, &[0, -1]).unwrap(), 1);
        assert_eq!(signed_shift_closed_form(&l, &[0, -1]).unwrap(), 1);
        // m = 0 and m' = n: the sum is empty
        assert_eq!(signed_shift_sum(&w("GL3", "2,1,0"), &[2, 1]).unwrap(), 0);
        assert_eq!(
            signed_shift_closed_form(&w("GL3", "2,1,0"), &[2, 1]).unwrap(),
            0
        );
    }
}
