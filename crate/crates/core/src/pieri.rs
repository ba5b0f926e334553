//! Relative Pieri rules: an irreducible subgroup character times the
//! relative Weyl denominator, as a signed graded sum of subgroup characters.

use crate::characters::{Grade, GradedTerm, GradedVirtualSum};
use crate::error::{Error, Result};
use crate::halfint::{HalfInt, HalfIntVec};
use crate::sl2ring::SL2Module;
use crate::weights::{is_dominant, BranchingPair, DominantWeight, Family, PairKind};

fn require(w: &DominantWeight, fam: Family) -> Result<()> {
    if w.group().family() != fam {
        return Err(Error::InvalidGroup(format!(
            "expected a {fam:?} weight, got {w:?}"
        )));
    }
    Ok(())
}

/// `ν + ε` for every `ε ∈ {0,1}^n` with the result dominant, together with `|ε|`.
fn gl_shifts(nu: &DominantWeight) -> Vec<(usize, DominantWeight)> {
    let n = nu.rank();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let e: HalfIntVec = (0..n)
            .map(|i| {
                nu.get(i)
                    + if mask >> i & 1 == 1 {
                        HalfInt::ONE
                    } else {
                        HalfInt::ZERO
                    }
            })
            .collect();
        if let Ok(w) = DominantWeight::new(nu.group(), e) {
            out.push((mask.count_ones() as usize, w));
        }
    }
    out
}

/// `χ_ν · ∏(x_i - t) = Σ_{ε∈{0,1}^n, ν+ε dominant} (-t)^{n-|ε|} χ_{ν+ε}`.
pub fn rel_pieri_gl(nu: &DominantWeight) -> Result<GradedVirtualSum> {
    require(nu, Family::GL)?;
    let n = nu.rank();
    let pair = BranchingPair::new(PairKind::GlToGl, n + 1)?;
    let terms = gl_shifts(nu)
        .into_iter()
        .map(|(k, w)| {
            let r = n - k;
            GradedTerm::new(
                if r.is_multiple_of(2) { 1 } else { -1 },
                Grade::TPow(r as i64),
                w,
            )
        })
        .collect();
    Ok(GradedVirtualSum::new(pair, terms))
}

/// `χ_ν · χ_{ω_i}`: every dominant `ν + ε` with `|ε| = i`, each once.
pub fn dual_pieri_gl(nu: &DominantWeight, i: usize) -> Result<Vec<DominantWeight>> {
    require(nu, Family::GL)?;
    if i > nu.rank() {
        return Err(Error::Precondition(format!(
            "i = {i} exceeds rank {}",
            nu.rank()
        )));
    }
    let mut out: Vec<DominantWeight> = gl_shifts(nu)
        .into_iter()
        .filter(|(k, _)| *k == i)
        .map(|(_, w)| w)
        .collect();
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

/// `μ + ε/2` for `ε ∈ {±1}^n` with the result dominant, with the number of
/// `-1` entries of `ε`.
fn spin_shifts(mu: &DominantWeight) -> Result<Vec<(usize, DominantWeight)>> {
    let n = mu.rank();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let e: HalfIntVec = (0..n)
            .map(|i| {
                mu.get(i)
                    + if mask >> i & 1 == 1 {
                        -HalfInt::HALF
                    } else {
                        HalfInt::HALF
                    }
            })
            .collect();
        if is_dominant(mu.group(), &e)? {
            out.push((
                mask.count_ones() as usize,
                DominantWeight::new(mu.group(), e)?,
            ));
        }
    }
    Ok(out)
}

/// `χ_μ · Δ = Σ_{ε∈{±1}^n, μ+ε/2 dominant} (∏ε_i) χ_{μ+ε/2}` for `Spin(2n)`.
pub fn rel_pieri_spin(mu: &DominantWeight) -> Result<GradedVirtualSum> {
    require(mu, Family::D)?;
    let pair = BranchingPair::new(PairKind::BToD, mu.rank())?;
    let terms = spin_shifts(mu)?
        .into_iter()
        .map(|(neg, w)| GradedTerm::new(if neg % 2 == 0 { 1 } else { -1 }, Grade::Unit, w))
        .collect();
    Ok(GradedVirtualSum::new(pair, terms))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HalfSpin {
    /// highest weight `(½, …, ½)`
    Plus,
    /// highest weight `(½, …, ½, -½)`
    Minus,
}

/// `χ_μ ⊗ S^±`: the dominant `μ + ε/2` whose `ε` has an even (`Plus`) or odd
/// (`Minus`) number of `-1` entries.
pub fn halfspin_tensor(mu: &DominantWeight, which: HalfSpin) -> Result<Vec<DominantWeight>> {
    require(mu, Family::D)?;
    let want = match which {
        HalfSpin::Plus => 0,
        HalfSpin::Minus => 1,
    };
    let mut out: Vec<DominantWeight> = spin_shifts(mu)?
        .into_iter()
        .filter(|(neg, _)| neg % 2 == want)
        .map(|(_, w)| w)
        .collect();
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

/// `Δ · S^(k) χ_η = S^(k) Σ_ν (-S^(1))^{n-1-|ν-η|} χ_ν` for
/// `Sp(2n) ⊃ Sp(2) × Sp(2n-2)`, over dominant `ν` with `ν - η ∈ {0,±1}^{n-1}`.
pub fn rel_pieri_sp(k: u32, eta: &DominantWeight) -> Result<GradedVirtualSum> {
    require(eta, Family::C)?;
    let r = eta.rank();
    let pair = BranchingPair::new(PairKind::CToC1xC, r + 1)?;
    let base = SL2Module::irrep(i64::from(k));
    let s1 = SL2Module::irrep(1);
    let mut terms = Vec::new();
    for code in 0..3usize.pow(r as u32) {
        let mut c = code;
        let mut moved = 0;
        let mut e = eta.entries().clone();
        for i in 0..r {
            let d = (c % 3) as i64 - 1;
            c /= 3;
            if d != 0 {
                moved += 1;
            }
            e[i] += HalfInt::from_int(d);
        }
        if !is_dominant(eta.group(), &e)? {
            continue;
        }
        let m = r - moved;
        let grade = base.mul(&s1.pow(m as u32));
        terms.push(GradedTerm::new(
            if m.is_multiple_of(2) { 1 } else { -1 },
            Grade::Sl2(grade),
            DominantWeight::new(eta.group(), e)?,
        ));
    }
    Ok(GradedVirtualSum::new(pair, terms))
}

/// Exact expansion of `Δ · S^(k) χ_η` without the dominance shortcut: each
/// `d ∈ {-1,0,1}^{n-1}` contributes `S^(k) (-S^(1))^{#zeros(d)}` times the
/// alternant of `η + d + ρ`, which is straightened to a dominant weight (or
/// vanishes). Differs from [`rel_pieri_sp`] exactly when `η` has two equal
/// adjacent entries.
pub fn rel_pieri_sp_straightened(k: u32, eta: &DominantWeight) -> Result<GradedVirtualSum> {
    require(eta, Family::C)?;
    let r = eta.rank();
    let pair = BranchingPair::new(PairKind::CToC1xC, r + 1)?;
    let base = SL2Module::irrep(i64::from(k));
    let s1 = SL2Module::irrep(1);
    let mut acc: std::collections::BTreeMap<DominantWeight, SL2Module> = Default::default();
    for code in 0..3usize.pow(r as u32) {
        let mut c = code;
        let mut zeros = 0;
        // shifted exponents η_i + d_i + (r - i)
        let mut l: Vec<i64> = Vec::with_capacity(r);
        for i in 0..r {
            let d = (c % 3) as i64 - 1;
            c /= 3;
            if d == 0 {
                zeros += 1;
            }
            l.push(eta.get(i).to_int().expect("C weights are integral") + d + (r - i) as i64);
        }
        let Some((sgn, sorted)) = straighten(&l) else {
            continue;
        };
        let nu = HalfIntVec::from_ints(sorted.iter().enumerate().map(|(i, &a)| a - (r - i) as i64));
        let w = DominantWeight::new(eta.group(), nu)?;
        let grade = base
            .mul(&s1.pow(zeros))
            .scale(if zeros % 2 == 0 { sgn } else { -sgn });
        let e = acc.entry(w).or_default();
        *e = e.add(&grade);
    }
    let terms = acc
        .into_iter()
        .filter(|(_, m)| !m.is_zero())
        .map(|(w, m)| {
            let top_negative = m.iter().next_back().is_some_and(|(_, c)| c < 0);
            if top_negative {
                GradedTerm::new(-1, Grade::Sl2(m.neg()), w)
            } else {
                GradedTerm::new(1, Grade::Sl2(m), w)
            }
        })
        .collect();
    Ok(GradedVirtualSum::new(pair, terms))
}

/// Sorts `|l_i|` decreasingly, returning the sign of `det|[x_j]^{l_i}|`
/// relative to the sorted alternant, or `None` if it vanishes.
fn straighten(l: &[i64]) -> Option<(i64, Vec<i64>)> {
    let mut sgn = 1;
    let mut v: Vec<i64> = l
        .iter()
        .map(|&a| {
            if a < 0 {
                sgn = -sgn;
            }
            a.abs()
        })
        .collect();
    if v.contains(&0) {
        return None;
    }
    // bubble sort, tracking the parity of the permutation
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] < v[j + 1] {
                v.swap(j, j + 1);
                sgn = -sgn;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((sgn, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::GroupFamily;

    fn w(g: &str, s: &str) -> DominantWeight {
        DominantWeight::parse(g.parse().unwrap(), s).unwrap()
    }

    fn summary(s: &GradedVirtualSum) -> Vec<(i8, String, String)> {
        s.terms
            .iter()
            .map(|t| (t.sign, t.grade.to_string(), t.weight.to_string()))
            .collect()
    }

    #[test]
    fn gl_examples() {
        let s = rel_pieri_gl(&w("GL2", "1,0")).unwrap();
        assert_eq!(
            summary(&s),
            vec![
                (1, "t^0".into(), "(2,1)".into()),
                (-1, "t^1".into(), "(2,0)".into()),
                (-1, "t^1".into(), "(1,1)".into()),
                (1, "t^2".into(), "(1,0)".into()),
            ]
        );
        let s = rel_pieri_gl(&w("GL2", "1,1")).unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(
            dual_pieri_gl(&w("GL2", "1,0"), 1).unwrap(),
            vec![w("GL2", "2,0"), w("GL2", "1,1")]
        );
        assert_eq!(
            dual_pieri_gl(&w("GL2", "1,1"), 2).unwrap(),
            vec![w("GL2", "2,2")]
        );
        assert_eq!(
            dual_pieri_gl(&w("GL3", "3,1,0"), 0).unwrap(),
            vec![w("GL3", "3,1,0")]
        );
        assert!(dual_pieri_gl(&w("GL2", "1,0"), 3).is_err());
    }

    #[test]
    fn spin_examples() {
        let s = rel_pieri_spin(&w("D2", "0,0")).unwrap();
        assert_eq!(
            summary(&s),
            vec![
                (1, "1".into(), "(1/2,1/2)".into()),
                (-1, "1".into(), "(1/2,-1/2)".into())
            ]
        );
        let s = rel_pieri_spin(&w("D2", "1,0")).unwrap();
        assert_eq!(s.len(), 4);
        let s = rel_pieri_spin(&w("D2", "1/2,1/2")).unwrap();
        assert_eq!(
            summary(&s),
            vec![
                (1, "1".into(), "(1,1)".into()),
                (-1, "1".into(), "(1,0)".into()),
                (1, "1".into(), "(0,0)".into())
            ]
        );
        assert_eq!(
            halfspin_tensor(&w("D2", "0,0"), HalfSpin::Plus).unwrap(),
            vec![w("D2", "1/2,1/2")]
        );
        assert_eq!(
            halfspin_tensor(&w("D2", "0,0"), HalfSpin::Minus).unwrap(),
            vec![w("D2", "1/2,-1/2")]
        );
    }

    #[test]
    fn sp_examples() {
        let s = rel_pieri_sp(0, &w("C1", "0")).unwrap();
        assert_eq!(
            summary(&s),
            vec![
                (1, "[S0]".into(), "(1)".into()),
                (-1, "[S1]".into(), "(0)".into())
            ]
        );
        let s = rel_pieri_sp(0, &w("C1", "1")).unwrap();
        assert_eq!(
            summary(&s),
            vec![
                (1, "[S0]".into(), "(2)".into()),
                (-1, "[S1]".into(), "(1)".into()),
                (1, "[S0]".into(), "(0)".into())
            ]
        );
        let s = rel_pieri_sp(0, &w("C2", "0,0")).unwrap();
        assert_eq!(
            summary(&s),
            vec![
                (1, "[S0]".into(), "(1,1)".into()),
                (-1, "[S1]".into(), "(1,0)".into()),
                (1, "[S2 + S0]".into(), "(0,0)".into())
            ]
        );
        assert_eq!(s.pair.big_group(), GroupFamily::c(3).unwrap());
    }

    #[test]
    fn straightened_agrees_without_repeated_entries() {
        for (k, eta) in [(0, "2,1"), (1, "2,0"), (2, "1,0")] {
            assert_eq!(
                rel_pieri_sp(k, &w("C2", eta)).unwrap(),
                rel_pieri_sp_straightened(k, &w("C2", eta)).unwrap()
            );
        }
        assert_eq!(
            rel_pieri_sp(1, &w("C1", "1")).unwrap(),
            rel_pieri_sp_straightened(1, &w("C1", "1")).unwrap()
        );
        // η = (0,0): the shift (-1,+1) straightens back onto η itself
        let s = rel_pieri_sp_straightened(0, &w("C2", "0,0")).unwrap();
        assert_eq!(
            summary(&s).last().unwrap(),
            &(1, "[S2]".to_string(), "(0,0)".to_string())
        );
    }
}
