//! Weyl character formulas for `GL`, `B`, `C`, `D` and the relative Weyl
//! numerators/denominators of the equal-rank pairs.
//!
//! Variable conventions: `x_1 … x_n` for the big group. For `GL(n+1) ⊃ GL(n)`
//! the last variable plays the role of `t`; for `Sp(2n) ⊃ Sp(2) × Sp(2n-2)` the
//! first variable belongs to `Sp(2)`.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::halfint::{ExpVec, HalfInt, HalfIntVec};
use crate::laurent::{det, LaurentPoly};
use crate::sl2ring::{sl2_char_in, SL2Module};
use crate::weights::{BranchingPair, DominantWeight, Family, GroupFamily, PairKind};

fn require(w: &DominantWeight, fam: Family) -> Result<()> {
    if w.group().family() != fam {
        return Err(Error::InvalidGroup(format!(
            "expected a {fam:?} weight, got {w:?}"
        )));
    }
    Ok(())
}

fn monomial_1(nvars: usize, j: usize, e: HalfInt) -> LaurentPoly {
    LaurentPoly::var_pow(nvars, j, e)
}

/// `det|x_j^{η_i}|`.
pub fn alternant(eta: &HalfIntVec) -> Result<LaurentPoly> {
    let n = eta.len();
    let m: Vec<Vec<LaurentPoly>> = (0..n)
        .map(|i| (0..n).map(|j| monomial_1(n, j, eta[i])).collect())
        .collect();
    det(&m)
}

fn d_pm(eta: &HalfIntVec, plus: bool) -> Result<LaurentPoly> {
    let n = eta.len();
    let m: Vec<Vec<LaurentPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let a = monomial_1(n, j, eta[i]);
                    let b = monomial_1(n, j, -eta[i]);
                    if plus {
                        &a + &b
                    } else {
                        &a - &b
                    }
                })
                .collect()
        })
        .collect();
    det(&m)
}

/// `D^+(η) = det|x_j^{η_i} + x_j^{-η_i}|`.
pub fn d_plus(eta: &HalfIntVec) -> Result<LaurentPoly> {
    d_pm(eta, true)
}

/// `D^-(η) = det|x_j^{η_i} - x_j^{-η_i}|`.
pub fn d_minus(eta: &HalfIntVec) -> Result<LaurentPoly> {
    d_pm(eta, false)
}

/// `(n-1, …, 1, 0)` shifted by `offset`.
fn staircase(n: usize, offset: HalfInt) -> HalfIntVec {
    (0..n)
        .map(|i| HalfInt::from_int((n - 1 - i) as i64) + offset)
        .collect()
}

/// The half sum of positive roots, in the form used by each character formula.
pub fn rho(group: GroupFamily) -> HalfIntVec {
    let n = group.rank();
    match group.family() {
        Family::GL | Family::D => staircase(n, HalfInt::ZERO),
        Family::B => staircase(n, HalfInt::HALF),
        Family::C => staircase(n, HalfInt::ONE),
    }
}

fn plus_rho(w: &DominantWeight) -> HalfIntVec {
    w.entries().checked_add(&rho(w.group())).expect("same rank")
}

/// Bialternant `det|x_j^{λ_i+n-i}| / det|x_j^{n-i}|`.
pub fn char_gl(lambda: &DominantWeight) -> Result<LaurentPoly> {
    require(lambda, Family::GL)?;
    alternant(&plus_rho(lambda))?.div_exact(&alternant(&rho(lambda.group()))?)
}

/// `D^-(λ+ρ) / D^-(ρ)` with `ρ = (n-1/2, …, 1/2)`.
pub fn char_b(lambda: &DominantWeight) -> Result<LaurentPoly> {
    require(lambda, Family::B)?;
    d_minus(&plus_rho(lambda))?.div_exact(&d_minus(&rho(lambda.group()))?)
}

/// `(D^-(μ+ρ) + D^+(μ+ρ)) / D^+(ρ)` with `ρ = (n-1, …, 0)`.
pub fn char_d(mu: &DominantWeight) -> Result<LaurentPoly> {
    require(mu, Family::D)?;
    let eta = plus_rho(mu);
    let num = d_minus(&eta)?.try_add(&d_plus(&eta)?)?;
    num.div_exact(&d_plus(&rho(mu.group()))?)
}

/// `D^-(λ+ρ) / D^-(ρ)` with `ρ = (n, …, 1)`.
pub fn char_c(lambda: &DominantWeight) -> Result<LaurentPoly> {
    require(lambda, Family::C)?;
    d_minus(&plus_rho(lambda))?.div_exact(&d_minus(&rho(lambda.group()))?)
}

/// Character of any supported family.
pub fn character(w: &DominantWeight) -> Result<LaurentPoly> {
    match w.group().family() {
        Family::GL => char_gl(w),
        Family::B => char_b(w),
        Family::C => char_c(w),
        Family::D => char_d(w),
    }
}

/// Positive roots of `B`, `C`, `D` as exponent vectors.
fn positive_roots(group: GroupFamily) -> Vec<ExpVec> {
    let n = group.rank();
    let unit = |i: usize, c: i64| {
        let mut v = ExpVec::zeros(n);
        v[i] = HalfInt::from_int(c);
        v
    };
    let mut roots = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            roots.push(unit(i, 1).checked_sub(&unit(j, 1)).unwrap());
            roots.push(unit(i, 1).checked_add(&unit(j, 1)).unwrap());
        }
        match group.family() {
            Family::B => roots.push(unit(i, 1)),
            Family::C => roots.push(unit(i, 2)),
            _ => {}
        }
    }
    roots
}

/// Product form of the Weyl denominator.
///
/// `GL`: `∏_{i<j}(x_i - x_j)`. `B`, `C`, `D`: `∏_{α>0}(e^{α/2} - e^{-α/2})`,
/// which for `D_n` equals `∏_{i<j}(x_i-x_j)(x_i x_j-1) / (x_1⋯x_n)^{n-1}`.
pub fn weyl_denominator_product(group: GroupFamily) -> LaurentPoly {
    let n = group.rank();
    let mut out = LaurentPoly::one(n);
    if group.family() == Family::GL {
        for i in 0..n {
            for j in i + 1..n {
                out = &out * &(&LaurentPoly::var(n, i) - &LaurentPoly::var(n, j));
            }
        }
        return out;
    }
    for a in positive_roots(group) {
        let half: ExpVec = a
            .iter()
            .map(|h| HalfInt::from_doubled(h.doubled() / 2))
            .collect();
        let factor =
            &LaurentPoly::monomial(half.clone(), 1) - &LaurentPoly::monomial(half.neg(), 1);
        out = &out * &factor;
    }
    out
}

/// Determinantal Weyl denominator of `group`, matching the product form:
/// the Vandermonde for `GL`, `D^-(ρ)` for `B`/`C`, `½D^+(ρ)` for `D`.
pub fn weyl_denominator_det(group: GroupFamily) -> Result<LaurentPoly> {
    let r = rho(group);
    match group.family() {
        Family::GL => alternant(&r),
        Family::B | Family::C => d_minus(&r),
        Family::D => d_plus(&r)?.div_exact(&LaurentPoly::constant(group.rank(), 2)),
    }
}

/// Coefficient attached to a character in a graded sum.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Grade {
    Unit,
    /// `t^r`
    TPow(i64),
    /// A virtual `Sp(2)` character.
    Sl2(SL2Module),
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Grade::Unit => write!(f, "1"),
            Grade::TPow(r) => write!(f, "t^{r}"),
            Grade::Sl2(m) => write!(f, "[{m}]"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GradedTerm {
    /// `+1` or `-1`
    pub sign: i8,
    pub grade: Grade,
    pub weight: DominantWeight,
}

impl GradedTerm {
    pub fn new(sign: i8, grade: Grade, weight: DominantWeight) -> Self {
        GradedTerm {
            sign,
            grade,
            weight,
        }
    }
}

/// `Σ sign · grade · χ_weight`, with characters of the subgroup of `pair`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedVirtualSum {
    pub pair: BranchingPair,
    pub terms: Vec<GradedTerm>,
}

impl GradedVirtualSum {
    pub fn new(pair: BranchingPair, mut terms: Vec<GradedTerm>) -> Self {
        terms.sort_by(|a, b| b.weight.cmp(&a.weight).then_with(|| a.grade.cmp(&b.grade)));
        GradedVirtualSum { pair, terms }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Expands to a Laurent polynomial in the big group's variables.
    pub fn to_poly(&self) -> Result<LaurentPoly> {
        let n = self.pair.big_rank();
        let mut out = LaurentPoly::zero(n);
        for term in &self.terms {
            let p = assemble(self.pair, &term.grade, &term.weight)?;
            out = out.try_add(&p.scale(&BigInt::from(term.sign)))?;
        }
        Ok(out)
    }
}

/// `grade · χ_weight` inside the big group's ring of `pair`.
pub fn assemble(
    pair: BranchingPair,
    grade: &Grade,
    weight: &DominantWeight,
) -> Result<LaurentPoly> {
    let n = pair.big_rank();
    if weight.group() != pair.small_group() {
        return Err(Error::InvalidGroup(format!(
            "{weight:?} is not a weight of {}",
            pair.small_group()
        )));
    }
    match (pair.kind(), grade) {
        (PairKind::GlToGl, Grade::TPow(r)) => {
            let chi = char_gl(weight)?.embed(n, 0)?;
            chi.try_mul(&LaurentPoly::var_pow(n, n - 1, HalfInt::from_int(*r)))
        }
        (PairKind::BToD, Grade::Unit) => char_d(weight),
        (PairKind::DToB, Grade::Unit) => char_b(weight)?.embed(n, 0),
        (PairKind::CToC1xC, Grade::Sl2(m)) => {
            char_c(weight)?.embed(n, 1)?.try_mul(&sl2_char_in(m, n, 0))
        }
        _ => Err(Error::UnsupportedPair(format!("grade {grade} for {pair}"))),
    }
}

impl fmt::Display for GradedVirtualSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let s = if t.sign < 0 { "-" } else { "+" };
            if i > 0 {
                write!(f, " ")?;
            }
            match &t.grade {
                Grade::Unit => write!(f, "{s} chi{}", t.weight)?,
                g => write!(f, "{s} {g} chi{}", t.weight)?,
            }
        }
        Ok(())
    }
}

/// Relative Weyl character formula data: the restricted character equals
/// `numerator / denominator`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelWeylData {
    pub numerator: GradedVirtualSum,
    /// The denominator as a signed sum of subgroup characters.
    pub denominator_terms: GradedVirtualSum,
    /// The denominator in product form.
    pub denominator: LaurentPoly,
}

fn sign(exp: usize) -> i8 {
    if exp.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn fundamental(group: GroupFamily, k: usize) -> DominantWeight {
    let n = group.rank();
    let e = HalfIntVec::from_ints((0..n).map(|i| i64::from(i < k)));
    DominantWeight::new(group, e).expect("fundamental weights are dominant")
}

/// `(λ_1+1, …, λ_{i-1}+1, λ_{i+1}, …)`, dropping the entry at 0-based `i`.
fn drop_and_raise(l: &[HalfInt], i: usize) -> HalfIntVec {
    let mut v: Vec<HalfInt> = l[..i].iter().map(|&a| a + HalfInt::ONE).collect();
    v.extend_from_slice(&l[i + 1..]);
    HalfIntVec(v)
}

/// `GL(n+1) ⊃ GL(n) × GL(1)`, with `t` the last variable and
/// `Δ = ∏(x_i - t)`.
pub fn rel_weyl_gl(lambda: &DominantWeight) -> Result<RelWeylData> {
    require(lambda, Family::GL)?;
    let pair = BranchingPair::new(PairKind::GlToGl, lambda.rank())?;
    let small = pair.small_group();
    let n = small.rank();
    let l = lambda.entries().as_slice();
    let mut num = Vec::new();
    for i in 0..=n {
        // 1-based index i+1: sign (-1)^{n-i}, t^{λ_{i+1} + n - i}
        let w = DominantWeight::new(small, drop_and_raise(l, i))?;
        let r = l[i].to_int().expect("GL weights are integral") + (n - i) as i64;
        num.push(GradedTerm::new(sign(n - i), Grade::TPow(r), w));
    }
    let den_terms = (0..=n)
        .map(|i| GradedTerm::new(sign(i), Grade::TPow(i as i64), fundamental(small, n - i)))
        .collect();
    let t = LaurentPoly::var(n + 1, n);
    let mut den = LaurentPoly::one(n + 1);
    for i in 0..n {
        den = &den * &(&LaurentPoly::var(n + 1, i) - &t);
    }
    Ok(RelWeylData {
        numerator: GradedVirtualSum::new(pair, num),
        denominator_terms: GradedVirtualSum::new(pair, den_terms),
        denominator: den,
    })
}

fn spin_pm(group: GroupFamily, base: &[HalfInt]) -> (DominantWeight, DominantWeight) {
    let plus: HalfIntVec = base.iter().map(|&a| a + HalfInt::HALF).collect();
    let mut minus = plus.clone();
    let last = minus.len() - 1;
    minus[last] = -minus[last];
    (
        DominantWeight::new(group, plus).expect("λ+ is dominant"),
        DominantWeight::new(group, minus).expect("λ- is dominant"),
    )
}

/// `Spin(2n+1) ⊃ Spin(2n)`: `(χ_{λ+} - χ_{λ-}) / ∏(x_i^{1/2} - x_i^{-1/2})`
/// with `λ± = (λ_1+½, …, ±(λ_n+½))`.
pub fn rel_weyl_bd(lambda: &DominantWeight) -> Result<RelWeylData> {
    require(lambda, Family::B)?;
    let n = lambda.rank();
    let pair = BranchingPair::new(PairKind::BToD, n)?;
    let small = pair.small_group();
    let (lp, lm) = spin_pm(small, lambda.entries().as_slice());
    let (sp, sm) = spin_pm(small, &vec![HalfInt::ZERO; n]);
    let mut den = LaurentPoly::one(n);
    for i in 0..n {
        let f = &LaurentPoly::var_pow(n, i, HalfInt::HALF)
            - &LaurentPoly::var_pow(n, i, -HalfInt::HALF);
        den = &den * &f;
    }
    Ok(RelWeylData {
        numerator: GradedVirtualSum::new(
            pair,
            vec![
                GradedTerm::new(1, Grade::Unit, lp),
                GradedTerm::new(-1, Grade::Unit, lm),
            ],
        ),
        denominator_terms: GradedVirtualSum::new(
            pair,
            vec![
                GradedTerm::new(1, Grade::Unit, sp),
                GradedTerm::new(-1, Grade::Unit, sm),
            ],
        ),
        denominator: den,
    })
}

/// `Sp(2n) ⊃ Sp(2) × Sp(2n-2)`: numerator
/// `Σ_{i=0}^{n-1} (-1)^i S^(λ_{n-i}+i) χ_{λ^{(n-i)}}` over
/// `Δ = (-x_1)^{-(n-1)} ∏_{i≥2}(x_1 - x_i)(x_1 - x_i^{-1})`.
pub fn rel_weyl_c(lambda: &DominantWeight) -> Result<RelWeylData> {
    require(lambda, Family::C)?;
    let n = lambda.rank();
    let pair = BranchingPair::new(PairKind::CToC1xC, n)?;
    let small = pair.small_group();
    let l = lambda.entries().as_slice();
    let mut num = Vec::new();
    for i in 0..n {
        let j = n - 1 - i; // 0-based position of λ_{n-i}
        let w = DominantWeight::new(small, drop_and_raise(l, j))?;
        let k = l[j].to_int().expect("C weights are integral") + i as i64;
        num.push(GradedTerm::new(sign(i), Grade::Sl2(SL2Module::irrep(k)), w));
    }
    let den_terms = (0..n)
        .map(|i| {
            GradedTerm::new(
                sign(i),
                Grade::Sl2(SL2Module::irrep(i as i64)),
                fundamental(small, n - 1 - i),
            )
        })
        .collect();
    let x1 = LaurentPoly::var(n, 0);
    let mut den = LaurentPoly::monomial(
        (0..n)
            .map(|k| {
                if k == 0 {
                    HalfInt::from_int(1 - n as i64)
                } else {
                    HalfInt::ZERO
                }
            })
            .collect(),
        i64::from(sign(n - 1)),
    );
    for i in 1..n {
        den = &den * &(&x1 - &LaurentPoly::var(n, i));
        den = &den * &(&x1 - &LaurentPoly::var_pow(n, i, -HalfInt::ONE));
    }
    Ok(RelWeylData {
        numerator: GradedVirtualSum::new(pair, num),
        denominator_terms: GradedVirtualSum::new(pair, den_terms),
        denominator: den,
    })
}

/// Relative Weyl data for the equal-rank pair whose big group is `λ`'s group.
pub fn rel_weyl(lambda: &DominantWeight) -> Result<RelWeylData> {
    match lambda.group().family() {
        Family::GL => rel_weyl_gl(lambda),
        Family::B => rel_weyl_bd(lambda),
        Family::C => rel_weyl_c(lambda),
        Family::D => Err(Error::UnsupportedPair(
            "no relative Weyl formula for D -> B".into(),
        )),
    }
}
