//! Sparse multivariate Laurent polynomials with integer coefficients and
//! half-integer exponents.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::halfint::{ExpVec, HalfInt, HalfIntVec};

/// An element of `ℤ[x_1^{±1/2}, …, x_n^{±1/2}]`.
///
/// Terms are kept in a map ordered lexicographically by exponent, so the
/// last entry is the lex-leading term. No stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<ExpVec, BigInt>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(ExpVec::zeros(nvars), c)
    }

    pub fn monomial(exp: ExpVec, c: impl Into<BigInt>) -> Self {
        let nvars = exp.len();
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { nvars, terms }
    }

    /// `x_i^e` in `nvars` variables (0-based `i`).
    pub fn var_pow(nvars: usize, i: usize, e: HalfInt) -> Self {
        let mut exp = ExpVec::zeros(nvars);
        exp[i] = e;
        Self::monomial(exp, 1)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::var_pow(nvars, i, HalfInt::ONE)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, merging
    /// repeated exponents.
    pub fn from_terms<I, C>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExpVec, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::VarCountMismatch {
                    left: nvars,
                    right: e.len(),
                });
            }
            p.add_term(e, c.into());
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing lex order of exponent.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExpVec, &BigInt)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &ExpVec) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    /// The term with the lexicographically greatest exponent.
    pub fn leading_term(&self) -> Option<(&ExpVec, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// The term with the lexicographically least exponent.
    pub fn trailing_term(&self) -> Option<(&ExpVec, &BigInt)> {
        self.terms.iter().next()
    }

    fn add_term(&mut self, exp: ExpVec, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_same(&self, other: &LaurentPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VarCountMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_same(other)?;
        let mut out = LaurentPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: ExpVec = ea.iter().zip(eb.iter()).map(|(&a, &b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Multiplies by the monomial `x^shift`.
    pub fn shift(&self, shift: &ExpVec) -> Result<LaurentPoly> {
        if shift.len() != self.nvars {
            return Err(Error::VarCountMismatch {
                left: self.nvars,
                right: shift.len(),
            });
        }
        Ok(LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.checked_add(shift).expect("lengths checked"), c.clone()))
                .collect(),
        })
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Sum of all coefficients, i.e. the value at `x_1 = … = x_n = 1`.
    pub fn coeff_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Sets `x_index = 1` (0-based) and drops that variable.
    pub fn substitute_one(&self, index: usize) -> Result<LaurentPoly> {
        if index >= self.nvars {
            return Err(Error::IndexOutOfRange {
                index,
                nvars: self.nvars,
            });
        }
        let mut out = LaurentPoly::zero(self.nvars - 1);
        for (e, c) in &self.terms {
            let mut v = e.0.clone();
            v.remove(index);
            out.add_term(HalfIntVec(v), c.clone());
        }
        Ok(out)
    }

    /// Applies `x_i ↦ x_i^{-1}` (0-based).
    pub fn invert_var(&self, i: usize) -> Result<LaurentPoly> {
        if i >= self.nvars {
            return Err(Error::IndexOutOfRange {
                index: i,
                nvars: self.nvars,
            });
        }
        Ok(self.map_exponents(|e| {
            let mut e = e.clone();
            e[i] = -e[i];
            e
        }))
    }

    /// Swaps variables `i` and `j` (0-based).
    pub fn swap_vars(&self, i: usize, j: usize) -> Result<LaurentPoly> {
        for k in [i, j] {
            if k >= self.nvars {
                return Err(Error::IndexOutOfRange {
                    index: k,
                    nvars: self.nvars,
                });
            }
        }
        Ok(self.map_exponents(|e| {
            let mut e = e.clone();
            e.0.swap(i, j);
            e
        }))
    }

    fn map_exponents(&self, f: impl Fn(&ExpVec) -> ExpVec) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(f(e), c.clone());
        }
        out
    }

    /// Re-reads this polynomial inside a ring of `total` variables, placing
    /// its variable `k` at slot `offset + k`.
    pub fn embed(&self, total: usize, offset: usize) -> Result<LaurentPoly> {
        if offset + self.nvars > total {
            return Err(Error::IndexOutOfRange {
                index: offset + self.nvars,
                nvars: total,
            });
        }
        Ok(LaurentPoly {
            nvars: total,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut v = ExpVec::zeros(total);
                    for (k, &h) in e.iter().enumerate() {
                        v[offset + k] = h;
                    }
                    (v, c.clone())
                })
                .collect(),
        })
    }

    /// Per-variable minimum and maximum exponent over the support.
    fn exponent_box(&self) -> Option<(Vec<HalfInt>, Vec<HalfInt>)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let mut lo = first.0.clone();
        let mut hi = first.0.clone();
        for e in it {
            for (k, &h) in e.iter().enumerate() {
                lo[k] = lo[k].min(h);
                hi[k] = hi[k].max(h);
            }
        }
        Some((lo, hi))
    }

    /// Exact division by lex leading-term elimination.
    ///
    /// Returns `q` with `q * den == self`, or [`Error::InexactDivision`].
    /// Each candidate quotient exponent must lie in the box
    /// `[min(num) - min(den), max(num) - max(den)]` taken per variable, which
    /// every exact quotient satisfies; leaving the box ends the loop.
    pub fn div_exact(&self, den: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_same(den)?;
        let (den_lead_exp, den_lead_c) = match den.leading_term() {
            Some((e, c)) => (e.clone(), c.clone()),
            None => return Err(Error::DivisionByZero),
        };
        let mut quotient = LaurentPoly::zero(self.nvars);
        let Some((num_lo, num_hi)) = self.exponent_box() else {
            return Ok(quotient);
        };
        let (den_lo, den_hi) = den.exponent_box().expect("den is nonzero");
        let q_lo: Vec<HalfInt> = num_lo.iter().zip(&den_lo).map(|(&a, &b)| a - b).collect();
        let q_hi: Vec<HalfInt> = num_hi.iter().zip(&den_hi).map(|(&a, &b)| a - b).collect();

        let mut rem = self.clone();
        while let Some((lead_exp, lead_c)) = rem.leading_term() {
            let (q, r) = lead_c.div_rem(&den_lead_c);
            if !r.is_zero() {
                return Err(Error::InexactDivision(format!(
                    "leading coefficient {lead_c} not divisible by {den_lead_c}"
                )));
            }
            let q_exp = lead_exp.checked_sub(&den_lead_exp)?;
            let in_box = q_exp
                .iter()
                .enumerate()
                .all(|(k, &h)| q_lo[k] <= h && h <= q_hi[k]);
            if !in_box {
                return Err(Error::InexactDivision(format!(
                    "quotient exponent {q_exp} outside the admissible range; remainder has {} terms",
                    rem.num_terms()
                )));
            }
            let step = den.shift(&q_exp)?.scale(&q);
            rem = rem.try_sub(&step)?;
            quotient.add_term(q_exp, q);
        }
        Ok(quotient)
    }

    /// Whether the polynomial is unchanged by `x_i ↦ x_i^{-1}`.
    pub fn is_inversion_invariant(&self, i: usize) -> Result<bool> {
        Ok(&self.invert_var(i)? == self)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    /// Panics if the variable counts differ; use [`LaurentPoly::try_add`] otherwise.
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs).expect("LaurentPoly addition")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_sub(rhs).expect("LaurentPoly subtraction")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_mul(rhs).expect("LaurentPoly multiplication")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

/// Exact determinant by cofactor expansion along the first row.
pub fn det(m: &[Vec<LaurentPoly>]) -> Result<LaurentPoly> {
    let n = m.len();
    for (row, r) in m.iter().enumerate() {
        if r.len() != n {
            return Err(Error::NonSquare {
                rows: n,
                row,
                cols: r.len(),
            });
        }
    }
    if n == 0 {
        return Err(Error::NonSquare {
            rows: 0,
            row: 0,
            cols: 0,
        });
    }
    let nvars = m[0][0].nvars();
    for r in m {
        for p in r {
            if p.nvars() != nvars {
                return Err(Error::VarCountMismatch {
                    left: nvars,
                    right: p.nvars(),
                });
            }
        }
    }
    let cols: Vec<usize> = (0..n).collect();
    Ok(cofactor(m, 0, &cols, nvars))
}

fn cofactor(m: &[Vec<LaurentPoly>], row: usize, cols: &[usize], nvars: usize) -> LaurentPoly {
    if cols.len() == 1 {
        return m[row][cols[0]].clone();
    }
    let mut acc = LaurentPoly::zero(nvars);
    for (k, &c) in cols.iter().enumerate() {
        let entry = &m[row][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&j| j != c).collect();
        let minor = cofactor(m, row + 1, &rest, nvars);
        let term = entry * &minor;
        acc = if k % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

fn fmt_exp(f: &mut fmt::Formatter<'_>, h: HalfInt) -> fmt::Result {
    if h.is_integer() && !h.is_negative() {
        write!(f, "^{h}")
    } else {
        write!(f, "^({h})")
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical form: terms in decreasing lex order of exponent, variables
    /// named `x1 … xn`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let is_const = e.iter().all(|h| *h == HalfInt::ZERO);
            if is_const {
                write!(f, "{mag}")?;
                continue;
            }
            let mut first = true;
            if !mag.is_one() {
                write!(f, "{mag}")?;
                first = false;
            }
            for (k, &h) in e.iter().enumerate() {
                if h == HalfInt::ZERO {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "x{}", k + 1)?;
                if h != HalfInt::ONE {
                    fmt_exp(f, h)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[{}]({})", self.nvars, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(d: i64) -> HalfInt {
        HalfInt::from_doubled(d)
    }

    fn x(n: usize, i: usize) -> LaurentPoly {
        LaurentPoly::var(n, i)
    }

    fn xp(n: usize, i: usize, doubled: i64) -> LaurentPoly {
        LaurentPoly::var_pow(n, i, h(doubled))
    }

    fn c(n: usize, v: i64) -> LaurentPoly {
        LaurentPoly::constant(n, v)
    }

    #[test]
    fn add_examples() {
        assert!((&x(1, 0) + &(-&x(1, 0))).is_zero());
        let s = &(&x(2, 0) + &x(2, 1)) + &x(2, 1);
        assert_eq!(s, &x(2, 0) + &x(2, 1).scale(&2.into()));
        let half = xp(1, 0, 1);
        assert_eq!(&half + &half, half.scale(&2.into()));
        assert!(x(1, 0).try_add(&x(2, 0)).is_err());
    }

    #[test]
    fn mul_examples() {
        // (x1 - t)(x2 - t) with t as the third variable
        let t = x(3, 2);
        let p = &(&x(3, 0) - &t) * &(&x(3, 1) - &t);
        let expected =
            &(&(&(&x(3, 0) * &x(3, 1)) - &(&t * &x(3, 0))) - &(&t * &x(3, 1))) + &(&t * &t);
        assert_eq!(p, expected);

        let a = &xp(1, 0, 2) - &xp(1, 0, -2);
        let b = &xp(1, 0, 2) + &xp(1, 0, -2);
        assert_eq!(&a * &b, &xp(1, 0, 4) - &xp(1, 0, -4));

        // prod_{i=1..3}(x_i - t): 2^3 sign patterns, all distinct monomials
        let t = x(4, 3);
        let mut d = LaurentPoly::one(4);
        for i in 0..3 {
            d = &d * &(&x(4, i) - &t);
        }
        assert_eq!(d.num_terms(), 8);
        assert!(x(1, 0).try_mul(&x(2, 0)).is_err());
    }

    #[test]
    fn substitute_examples() {
        let p = &(&x(2, 0) * &x(2, 1)) - &x(2, 1);
        assert!(p.substitute_one(0).unwrap().is_zero());
        let q = (&x(2, 0) + &x(2, 1)).substitute_one(1).unwrap();
        assert_eq!(q, &x(1, 0) + &c(1, 1));
        let vdm = det(&[vec![x(2, 0), x(2, 1)], vec![c(2, 1), c(2, 1)]]).unwrap();
        assert_eq!(vdm.substitute_one(1).unwrap(), &x(1, 0) - &c(1, 1));
        assert!(p.substitute_one(2).is_err());
    }

    #[test]
    fn div_examples() {
        let num = &xp(1, 0, 4) - &xp(1, 0, -4);
        let den = &x(1, 0) - &xp(1, 0, -2);
        assert_eq!(num.div_exact(&den).unwrap(), &x(1, 0) + &xp(1, 0, -2));

        // lambda = (1,0), n = 2: det|x_j^{lambda_i + 2 - i}| / Vandermonde
        let num = det(&[vec![xp(2, 0, 4), xp(2, 1, 4)], vec![c(2, 1), c(2, 1)]]).unwrap();
        let den = det(&[vec![x(2, 0), x(2, 1)], vec![c(2, 1), c(2, 1)]]).unwrap();
        assert_eq!(num.div_exact(&den).unwrap(), &x(2, 0) + &x(2, 1));

        let err = (&x(2, 0) + &x(2, 1)).div_exact(&(&x(2, 0) - &x(2, 1)));
        assert!(matches!(err, Err(Error::InexactDivision(_))));
        assert_eq!(
            x(1, 0).div_exact(&LaurentPoly::zero(1)),
            Err(Error::DivisionByZero)
        );
        assert!(LaurentPoly::zero(2).div_exact(&x(2, 0)).unwrap().is_zero());
    }

    #[test]
    fn det_examples() {
        let d = det(&[vec![x(2, 0), x(2, 1)], vec![c(2, 1), c(2, 1)]]).unwrap();
        assert_eq!(d, &x(2, 0) - &x(2, 1));
        let d = det(&[vec![xp(2, 0, 6), xp(2, 1, 6)], vec![c(2, 1), c(2, 1)]]).unwrap();
        assert_eq!(d, &xp(2, 0, 6) - &xp(2, 1, 6));
        // D^+((2,0)): rows x_j^2 + x_j^-2 and 2
        let r0: Vec<_> = (0..2).map(|j| &xp(2, j, 4) + &xp(2, j, -4)).collect();
        let r1 = vec![c(2, 2), c(2, 2)];
        let d = det(&[r0.clone(), r1]).unwrap();
        assert_eq!(d, &r0[0].scale(&2.into()) - &r0[1].scale(&2.into()));
        assert!(det(&[vec![x(2, 0)], vec![x(2, 1), x(2, 0)]]).is_err());
        assert!(det(&[vec![x(2, 0)], vec![x(1, 0)]]).is_err());
    }

    #[test]
    fn coeff_sum_examples() {
        assert_eq!(
            LaurentPoly::coeff_sum(&(&x(1, 0) + &xp(1, 0, -2))),
            2.into()
        );
        assert_eq!((&x(2, 0) + &x(2, 1)).coeff_sum(), 2.into());
    }

    #[test]
    fn display_is_canonical() {
        let p = &(&xp(2, 0, -1) + &x(2, 1).scale(&(-2).into())) + &c(2, 3);
        assert_eq!(p.to_string(), "-2*x2 + 3 + x1^(-1/2)");
        assert_eq!(LaurentPoly::zero(3).to_string(), "0");
    }
}
