//! Brute-force checks: restrict characters as Laurent polynomials, peel off
//! subgroup characters greedily from the lex-largest exponent, and compare
//! with the closed-form rules.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::branching::{branch, BranchingTable, Multiplicity};
use crate::characters::{
    alternant, char_c, character, d_minus, d_plus, rel_weyl, weyl_denominator_product,
    GradedVirtualSum,
};
use crate::error::{Error, Result};
use crate::halfint::{ExpVec, HalfInt, HalfIntVec};
use crate::laurent::LaurentPoly;
use crate::pieri::{rel_pieri_gl, rel_pieri_sp, rel_pieri_spin};
use crate::sl2ring::{sl2_char_in, SL2Module};
use crate::weights::{is_dominant, BranchingPair, DominantWeight, Family, GroupFamily, PairKind};

/// `Σ c_μ χ_μ` with nonzero integer `c_μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirtualCharacter {
    pub group: GroupFamily,
    pub entries: BTreeMap<DominantWeight, i64>,
}

impl VirtualCharacter {
    pub fn new(group: GroupFamily) -> Self {
        VirtualCharacter {
            group,
            entries: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, w: DominantWeight, c: i64) -> Result<()> {
        if w.group() != self.group {
            return Err(Error::InvalidGroup(format!(
                "{w:?} is not a weight of {}",
                self.group
            )));
        }
        let e = self.entries.entry(w.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.entries.remove(&w);
        }
        Ok(())
    }

    pub fn to_poly(&self) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero(self.group.rank());
        for (w, &c) in &self.entries {
            out = out.try_add(&character(w)?.scale(&BigInt::from(c)))?;
        }
        Ok(out)
    }
}

fn check_nvars(p: &LaurentPoly, n: usize) -> Result<()> {
    if p.nvars() != n {
        return Err(Error::VarCountMismatch {
            left: n,
            right: p.nvars(),
        });
    }
    Ok(())
}

/// Restricts a character of the big group of `pair` to the subgroup torus.
///
/// The tori coincide except for `Spin(2n) ⊃ Spin(2n-1)`, where `x_n = 1`.
/// For `GL(n+1) ⊃ GL(n)` the last variable is read as `t`.
pub fn restrict_char(p: &LaurentPoly, pair: BranchingPair) -> Result<LaurentPoly> {
    let n = pair.big_rank();
    check_nvars(p, n)?;
    match pair.kind() {
        PairKind::DToB => p.substitute_one(n - 1),
        _ => Ok(p.clone()),
    }
}

fn to_i64(c: &BigInt) -> Result<i64> {
    c.to_i64().ok_or(Error::Overflow)
}

/// Greedy decomposition of a Weyl-invariant polynomial into irreducible
/// characters of `group`.
pub fn decompose(p: &LaurentPoly, group: GroupFamily) -> Result<VirtualCharacter> {
    check_nvars(p, group.rank())?;
    let cap = 10 * p.num_terms();
    let mut rem = p.clone();
    let mut out = VirtualCharacter::new(group);
    let mut steps = 0;
    while let Some((e, c)) = rem.leading_term() {
        steps += 1;
        if steps > cap {
            return Err(Error::IterationCap(cap));
        }
        if !is_dominant(group, e)? {
            return Err(Error::NonDominantLeading {
                group: group.to_string(),
                exponent: e.to_string(),
            });
        }
        let w = DominantWeight::new(group, e.clone())?;
        let c = c.clone();
        rem = rem.try_sub(&character(&w)?.scale(&c))?;
        out.add(w, to_i64(&c)?)?;
    }
    Ok(out)
}

fn int_table(pair: BranchingPair, v: VirtualCharacter) -> BranchingTable {
    let mut t = BranchingTable::new(pair);
    t.entries = v
        .entries
        .into_iter()
        .map(|(w, c)| (w, Multiplicity::Int(c)))
        .collect();
    t
}

/// For `GL(n+1) ⊃ GL(n)`: the restricted polynomial sliced by the power of
/// `t`, each slice decomposed over `GL(n)`. Keys are `(r, ν)` for `t^r χ_ν`.
pub fn decompose_gl_graded(
    p: &LaurentPoly,
    pair: BranchingPair,
) -> Result<BTreeMap<(i64, DominantWeight), i64>> {
    if pair.kind() != PairKind::GlToGl {
        return Err(Error::UnsupportedPair(pair.to_string()));
    }
    let n = pair.big_rank();
    check_nvars(p, n)?;
    let mut slices: BTreeMap<i64, Vec<(ExpVec, BigInt)>> = BTreeMap::new();
    for (e, c) in p.terms() {
        let r = e[n - 1]
            .to_int()
            .ok_or_else(|| Error::Precondition("GL characters have integer exponents".into()))?;
        slices
            .entry(r)
            .or_default()
            .push((HalfIntVec(e.as_slice()[..n - 1].to_vec()), c.clone()));
    }
    let small = pair.small_group();
    let mut out = BTreeMap::new();
    for (r, terms) in slices {
        let slice = LaurentPoly::from_terms(n - 1, terms)?;
        for (w, c) in decompose(&slice, small)?.entries {
            out.insert((r, w), c);
        }
    }
    Ok(out)
}

/// `Sp(2n) ⊃ Sp(2) × Sp(2n-2)`: repeatedly take the lex-largest exponent `η`
/// in `x_2 … x_n`, decompose its `x_1`-profile as an `SL2` character `V`, and
/// subtract `V(x_1) χ_η(x_2, …)`.
fn decompose_c_pair(p: &LaurentPoly, pair: BranchingPair) -> Result<BranchingTable> {
    let n = pair.big_rank();
    check_nvars(p, n)?;
    let small = pair.small_group();
    let cap = 10 * p.num_terms();
    let mut rem = p.clone();
    let mut table = BranchingTable::new(pair);
    let mut steps = 0;
    while !rem.is_zero() {
        steps += 1;
        if steps > cap {
            return Err(Error::IterationCap(cap));
        }
        let eta = rem
            .terms()
            .map(|(e, _)| HalfIntVec(e.as_slice()[1..].to_vec()))
            .max()
            .expect("nonzero");
        if !is_dominant(small, &eta)? {
            return Err(Error::NonDominantLeading {
                group: small.to_string(),
                exponent: eta.to_string(),
            });
        }
        let profile = LaurentPoly::from_terms(
            1,
            rem.terms()
                .filter(|(e, _)| e.as_slice()[1..] == *eta.as_slice())
                .map(|(e, c)| (HalfIntVec(vec![e[0]]), c.clone())),
        )?;
        let v = SL2Module::decompose(&profile)?;
        let w = DominantWeight::new(small, eta)?;
        let block = char_c(&w)?.embed(n, 1)?.try_mul(&sl2_char_in(&v, n, 0))?;
        rem = rem.try_sub(&block)?;
        let merged = match table.entries.remove(&w) {
            Some(Multiplicity::Sl2(old)) => old.add(&v),
            _ => v,
        };
        if !merged.is_zero() {
            table.entries.insert(w, Multiplicity::Sl2(merged));
        }
    }
    Ok(table)
}

/// Decomposes a restricted character into the subgroup's irreducibles.
pub fn decompose_h_pair(p: &LaurentPoly, pair: BranchingPair) -> Result<BranchingTable> {
    match pair.kind() {
        PairKind::GlToGl => {
            let mut t = BranchingTable::new(pair);
            for ((_, w), c) in decompose_gl_graded(p, pair)? {
                let m = match t.entries.remove(&w) {
                    Some(Multiplicity::Int(old)) => old + c,
                    _ => c,
                };
                if m != 0 {
                    t.entries.insert(w, Multiplicity::Int(m));
                }
            }
            Ok(t)
        }
        PairKind::BToD | PairKind::DToB => {
            check_nvars(p, pair.small_group().rank())?;
            Ok(int_table(pair, decompose(p, pair.small_group())?))
        }
        PairKind::CToC1xC => decompose_c_pair(p, pair),
    }
}

/// Compares the closed-form table of `λ` with the brute-force restriction.
/// For the `GL` pair, additionally checks that each `χ_ν` sits in degree
/// `t^{|λ|-|ν|}`.
pub fn verify_branching(lambda: &DominantWeight, pair: BranchingPair) -> Result<bool> {
    let closed = branch(lambda, pair)?;
    let restricted = restrict_char(&character(lambda)?, pair)?;
    if pair.kind() == PairKind::GlToGl {
        let graded = decompose_gl_graded(&restricted, pair)?;
        let size = lambda.size();
        if graded
            .keys()
            .any(|(r, nu)| HalfInt::from_int(*r) + nu.size() != size)
        {
            return Ok(false);
        }
    }
    Ok(decompose_h_pair(&restricted, pair)? == closed)
}

/// `WD(G) / WD(H)` computed from the root products, with the sign
/// convention of the relative Weyl formulas (`(-1)^{n-1}` for the
/// symplectic pair, `+1` otherwise).
pub fn relative_denominator(pair: BranchingPair) -> Result<LaurentPoly> {
    let n = pair.big_rank();
    let big = weyl_denominator_product(pair.big_group());
    let small = weyl_denominator_product(pair.small_group());
    match pair.kind() {
        PairKind::GlToGl => big.div_exact(&small.embed(n, 0)?),
        PairKind::BToD => big.div_exact(&small),
        PairKind::CToC1xC => {
            let sp2 = weyl_denominator_product(GroupFamily::c(1)?).embed(n, 0)?;
            let q = big.div_exact(&sp2.try_mul(&small.embed(n, 1)?)?)?;
            Ok(if n.is_multiple_of(2) { -&q } else { q })
        }
        PairKind::DToB => Err(Error::UnsupportedPair(format!(
            "{pair} has no relative Weyl denominator"
        ))),
    }
}

/// Input to a relative Pieri check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PieriInput {
    /// `χ_ν` of `GL(n)`
    Gl(DominantWeight),
    /// `χ_μ` of `Spin(2n)`
    Spin(DominantWeight),
    /// `S^(k) χ_η` with `η` a weight of `Sp(2n-2)`
    Sp(u32, DominantWeight),
}

/// The subgroup character of `input` times the relative denominator, as a
/// polynomial in the big group's variables.
pub fn pieri_product(input: &PieriInput) -> Result<LaurentPoly> {
    match input {
        PieriInput::Gl(nu) => {
            let pair = BranchingPair::new(PairKind::GlToGl, nu.rank() + 1)?;
            character(nu)?
                .embed(pair.big_rank(), 0)?
                .try_mul(&relative_denominator(pair)?)
        }
        PieriInput::Spin(mu) => {
            let pair = BranchingPair::new(PairKind::BToD, mu.rank())?;
            character(mu)?.try_mul(&relative_denominator(pair)?)
        }
        PieriInput::Sp(k, eta) => {
            let pair = BranchingPair::new(PairKind::CToC1xC, eta.rank() + 1)?;
            let n = pair.big_rank();
            let chi = character(eta)?.embed(n, 1)?.try_mul(&sl2_char_in(
                &SL2Module::irrep(i64::from(*k)),
                n,
                0,
            ))?;
            chi.try_mul(&relative_denominator(pair)?)
        }
    }
}

/// The closed-form relative Pieri sum for `input`.
pub fn pieri_sum(input: &PieriInput) -> Result<GradedVirtualSum> {
    match input {
        PieriInput::Gl(nu) => rel_pieri_gl(nu),
        PieriInput::Spin(mu) => rel_pieri_spin(mu),
        PieriInput::Sp(k, eta) => rel_pieri_sp(*k, eta),
    }
}

/// Multiplies the subgroup character by the relative denominator and compares
/// with the expanded relative Pieri sum.
pub fn verify_pieri(input: &PieriInput) -> Result<bool> {
    Ok(pieri_sum(input)?.to_poly()? == pieri_product(input)?)
}

/// Checks the relative Weyl formula of `λ`: numerator equals restricted
/// character times denominator, and both forms of the denominator agree with
/// the root-product ratio. For `D_n` weights this checks the identities
/// relating `Spin(2n)` and `Spin(2n-1)` instead.
pub fn verify_rel_weyl(lambda: &DominantWeight) -> Result<bool> {
    let g = lambda.group();
    if g.family() == Family::D {
        let n = g.rank();
        let eta = lambda.entries().checked_add(&crate::characters::rho(g))?;
        let mut normalized = lambda.entries().clone();
        normalized[n - 1] = normalized[n - 1].abs();
        return Ok(even_sign_expansion_holds(&eta)?
            && interlacing_det_identity_holds(&normalized)?
            && denominator_specialization_holds(n)?);
    }
    let data = rel_weyl(lambda)?;
    let pair = data.numerator.pair;
    let restricted = restrict_char(&character(lambda)?, pair)?;
    Ok(data.denominator == relative_denominator(pair)?
        && data.denominator_terms.to_poly()? == data.denominator
        && data.numerator.to_poly()? == restricted.try_mul(&data.denominator)?)
}

/// `D^-(η) + D^+(η) == 2 Σ_{ε∈{±1}^n, ∏ε_i = 1} det|x_j^{ε_i η_i}|`.
pub fn even_sign_expansion_holds(eta: &HalfIntVec) -> Result<bool> {
    let n = eta.len();
    let lhs = d_minus(eta)?.try_add(&d_plus(eta)?)?;
    let mut rhs = LaurentPoly::zero(n);
    for mask in 0u32..(1 << n) {
        if mask.count_ones() % 2 == 1 {
            continue;
        }
        let e: HalfIntVec = (0..n)
            .map(|i| if mask >> i & 1 == 1 { -eta[i] } else { eta[i] })
            .collect();
        rhs = rhs.try_add(&alternant(&e)?)?;
    }
    Ok(lhs == rhs.scale(&BigInt::from(2)))
}

/// For `λ_1 ≥ … ≥ λ_n ≥ 0`, all integers or all half-integers, `n ≥ 2`:
/// `det|x_j^{λ_i+n-i}|` at `x_n = 1` equals
/// `∏_{i<n}(x_i - 1) · Σ_{μ ⪯ λ} det|x_j^{μ_i+n-1-i}|`.
pub fn interlacing_det_identity_holds(lambda: &HalfIntVec) -> Result<bool> {
    let n = lambda.len();
    if n < 2 {
        return Err(Error::Precondition(
            "the identity needs at least two variables".into(),
        ));
    }
    let l = lambda.as_slice();
    let ordered = l.windows(2).all(|w| w[0] >= w[1]) && !l[n - 1].is_negative();
    if !ordered || !(lambda.all_integer() || lambda.all_half_odd()) {
        return Err(Error::Precondition(format!(
            "{lambda} is not a decreasing nonnegative uniform tuple"
        )));
    }
    let shift = |v: &[HalfInt], m: usize| -> HalfIntVec {
        v.iter()
            .enumerate()
            .map(|(i, &a)| a + HalfInt::from_int((m - 1 - i) as i64))
            .collect()
    };
    let lhs = alternant(&shift(l, n))?.substitute_one(n - 1)?;
    let mut sum = LaurentPoly::zero(n - 1);
    for mu in crate::weights::box_points(&l[1..], &l[..n - 1]) {
        sum = sum.try_add(&alternant(&shift(mu.as_slice(), n - 1))?)?;
    }
    let mut factor = LaurentPoly::one(n - 1);
    for i in 0..n - 1 {
        factor = &factor * &(&LaurentPoly::var(n - 1, i) - &LaurentPoly::one(n - 1));
    }
    Ok(lhs == factor.try_mul(&sum)?)
}

/// `WD(D_n)|_{x_n=1} == WD(B_{n-1}) ∏_{i<n}(x_i^{1/2} - x_i^{-1/2})`, both
/// sides in product form.
pub fn denominator_specialization_holds(n: usize) -> Result<bool> {
    let lhs = weyl_denominator_product(GroupFamily::d(n)?).substitute_one(n - 1)?;
    let mut rhs = weyl_denominator_product(GroupFamily::b(n - 1)?);
    for i in 0..n - 1 {
        let f = &LaurentPoly::var_pow(n - 1, i, HalfInt::HALF)
            - &LaurentPoly::var_pow(n - 1, i, -HalfInt::HALF);
        rhs = &rhs * &f;
    }
    Ok(lhs == rhs)
}

/// Sum of coefficients as an `i64`.
pub fn dimension(p: &LaurentPoly) -> Result<i64> {
    to_i64(&p.coeff_sum())
}

/// `Σ_μ dim(mult) · dim χ_μ` for a branching table.
pub fn table_dimension(t: &BranchingTable) -> Result<i64> {
    let mut total = 0i64;
    for (w, m) in &t.entries {
        total += m.dim() * dimension(&character(w)?)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(g: &str, s: &str) -> DominantWeight {
        DominantWeight::parse(g.parse().unwrap(), s).unwrap()
    }

    fn pair(s: &str) -> BranchingPair {
        s.parse().unwrap()
    }

    fn x(n: usize, i: usize, e: i64) -> LaurentPoly {
        LaurentPoly::var_pow(n, i, HalfInt::from_int(e))
    }

    #[test]
    fn restrict_examples() {
        let chi = character(&w("D2", "1,0")).unwrap();
        let r = restrict_char(&chi, pair("D2:B1")).unwrap();
        let e = &(&(&x(1, 0, 1) + &x(1, 0, -1)) + &LaurentPoly::one(1)) + &LaurentPoly::one(1);
        assert_eq!(r, e);
        let chi = character(&w("B2", "1,0")).unwrap();
        assert_eq!(restrict_char(&chi, pair("B2:D2")).unwrap(), chi);
        assert!(restrict_char(&chi, pair("B3:D3")).is_err());
    }

    #[test]
    fn decompose_examples() {
        let p = character(&w("GL2", "2,0")).unwrap();
        let v = decompose(&p, "GL2".parse().unwrap()).unwrap();
        assert_eq!(
            v.entries.into_iter().collect::<Vec<_>>(),
            vec![(w("GL2", "2,0"), 1)]
        );
        let p = &(&x(1, 0, 1) + &LaurentPoly::constant(1, 2)) + &x(1, 0, -1);
        let v = decompose(&p, "B1".parse().unwrap()).unwrap();
        assert_eq!(v.entries.get(&w("B1", "1")), Some(&1));
        assert_eq!(v.entries.get(&w("B1", "0")), Some(&1));
        assert!(decompose(&LaurentPoly::zero(2), "C2".parse().unwrap())
            .unwrap()
            .entries
            .is_empty());
        let bad = x(2, 1, 1);
        assert!(matches!(
            decompose(&bad, "GL2".parse().unwrap()),
            Err(Error::NonDominantLeading { .. })
        ));
    }

    #[test]
    fn h_pair_examples() {
        let t = decompose_h_pair(&character(&w("GL2", "1,0")).unwrap(), pair("GL2:GL1")).unwrap();
        assert_eq!(t.len(), 2);
        let t = decompose_h_pair(&character(&w("C2", "1,0")).unwrap(), pair("C2:C1xC1")).unwrap();
        assert_eq!(
            t.get(&w("C1", "1")),
            Some(&Multiplicity::Sl2(SL2Module::irrep(0)))
        );
        assert_eq!(
            t.get(&w("C1", "0")),
            Some(&Multiplicity::Sl2(SL2Module::irrep(1)))
        );
        let t = decompose_h_pair(&character(&w("B2", "1,0")).unwrap(), pair("B2:D2")).unwrap();
        assert_eq!(t.len(), 2);
    }

    #[test]
    fn verify_examples() {
        assert!(verify_branching(&w("GL3", "2,1,0"), pair("GL3:GL2")).unwrap());
        assert!(verify_branching(&w("B2", "1/2,1/2"), pair("B2:D2")).unwrap());
        assert!(verify_branching(&w("C2", "2,1"), pair("C2:C1xC1")).unwrap());
        assert!(verify_branching(&w("D3", "1,1,-1"), pair("D3:B2")).unwrap());
        assert!(verify_pieri(&PieriInput::Gl(w("GL2", "1,0"))).unwrap());
        assert!(verify_pieri(&PieriInput::Spin(w("D2", "1,0"))).unwrap());
        assert!(verify_pieri(&PieriInput::Sp(1, w("C1", "1"))).unwrap());
        assert!(verify_rel_weyl(&w("GL2", "1,0")).unwrap());
        assert!(verify_rel_weyl(&w("B2", "1,0")).unwrap());
        assert!(verify_rel_weyl(&w("C3", "2,1,0")).unwrap());
        assert!(verify_rel_weyl(&w("D3", "3/2,1/2,-1/2")).unwrap());
        assert!(even_sign_expansion_holds(&HalfIntVec::from_ints([2, 1])).unwrap());
    }

    #[test]
    fn dims() {
        let t = branch(&w("C2", "2,1"), pair("C2:C1xC1")).unwrap();
        assert_eq!(table_dimension(&t).unwrap(), 16);
        assert_eq!(dimension(&character(&w("C2", "2,1")).unwrap()).unwrap(), 16);
    }
}
