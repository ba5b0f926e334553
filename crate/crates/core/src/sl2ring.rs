//! The representation ring of `SL2` in the basis of irreducibles `S^(k)`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::halfint::{ExpVec, HalfInt};
use crate::laurent::LaurentPoly;

/// A virtual `SL2`-module `Σ mult(k) S^(k)`.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SL2Module {
    mults: BTreeMap<u32, i64>,
}

impl SL2Module {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `S^(k)`; the zero module when `k < 0`.
    pub fn irrep(k: i64) -> Self {
        Self::irrep_times(k, 1)
    }

    pub fn irrep_times(k: i64, mult: i64) -> Self {
        let mut m = Self::zero();
        if k >= 0 {
            m.add_irrep(k as u32, mult);
        }
        m
    }

    pub fn trivial() -> Self {
        Self::irrep(0)
    }

    pub fn from_pairs<I: IntoIterator<Item = (u32, i64)>>(pairs: I) -> Self {
        let mut m = Self::zero();
        for (k, c) in pairs {
            m.add_irrep(k, c);
        }
        m
    }

    fn add_irrep(&mut self, k: u32, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.mults.entry(k).or_insert(0);
        *e += c;
        if *e == 0 {
            self.mults.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.mults.is_empty()
    }

    /// A module with no negative multiplicity.
    pub fn is_genuine(&self) -> bool {
        self.mults.values().all(|&c| c > 0)
    }

    pub fn mult(&self, k: u32) -> i64 {
        self.mults.get(&k).copied().unwrap_or(0)
    }

    /// `(k, multiplicity)` pairs in increasing `k`.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (u32, i64)> + '_ {
        self.mults.iter().map(|(&k, &c)| (k, c))
    }

    pub fn add(&self, other: &SL2Module) -> SL2Module {
        let mut out = self.clone();
        for (k, c) in other.iter() {
            out.add_irrep(k, c);
        }
        out
    }

    pub fn sub(&self, other: &SL2Module) -> SL2Module {
        let mut out = self.clone();
        for (k, c) in other.iter() {
            out.add_irrep(k, -c);
        }
        out
    }

    pub fn neg(&self) -> SL2Module {
        SL2Module {
            mults: self.mults.iter().map(|(&k, &c)| (k, -c)).collect(),
        }
    }

    pub fn scale(&self, s: i64) -> SL2Module {
        let mut out = SL2Module::zero();
        for (k, c) in self.iter() {
            out.add_irrep(k, c * s);
        }
        out
    }

    /// Clebsch–Gordan: `S^(a)·S^(b) = Σ_{i=0}^{min(a,b)} S^(a+b-2i)`, extended bilinearly.
    pub fn mul(&self, other: &SL2Module) -> SL2Module {
        let mut out = SL2Module::zero();
        for (a, ca) in self.iter() {
            for (b, cb) in other.iter() {
                for i in 0..=a.min(b) {
                    out.add_irrep(a + b - 2 * i, ca * cb);
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> SL2Module {
        (0..e).fold(SL2Module::trivial(), |acc, _| acc.mul(self))
    }

    /// Total dimension `Σ mult(k)·(k+1)`.
    pub fn dim(&self) -> i64 {
        self.iter().map(|(k, c)| c * (k as i64 + 1)).sum()
    }

    /// The character `Σ mult(k)(t^k + t^{k-2} + … + t^{-k})` as a one-variable
    /// Laurent polynomial.
    pub fn char_poly(&self) -> LaurentPoly {
        let mut terms = Vec::new();
        for (k, c) in self.iter() {
            let k = k as i64;
            for j in 0..=k {
                terms.push((ExpVec::from_ints([k - 2 * j]), c));
            }
        }
        LaurentPoly::from_terms(1, terms).expect("one variable")
    }

    /// Inverse of [`SL2Module::char_poly`]: peels `S^(top degree)` until nothing
    /// is left. Errors on input that is not invariant under `t ↦ t^{-1}`.
    pub fn decompose(p: &LaurentPoly) -> Result<SL2Module> {
        if p.nvars() != 1 {
            return Err(Error::VarCountMismatch {
                left: 1,
                right: p.nvars(),
            });
        }
        if !p.is_inversion_invariant(0)? {
            return Err(Error::Asymmetric);
        }
        if p.terms().any(|(e, _)| !e[0].is_integer()) {
            return Err(Error::Precondition(
                "SL2 characters have integer exponents in t".into(),
            ));
        }
        let mut rem = p.clone();
        let mut out = SL2Module::zero();
        while let Some((e, c)) = rem.leading_term() {
            let k = e[0].to_int().expect("checked integral");
            if k < 0 {
                // a symmetric nonzero remainder always has a nonnegative top degree
                return Err(Error::Asymmetric);
            }
            let c = c.to_i64().ok_or(Error::Overflow)?;
            let piece = SL2Module::irrep_times(k, c);
            rem = rem.try_sub(&piece.char_poly())?;
            out = out.add(&piece);
        }
        Ok(out)
    }
}

/// `S^(k)` evaluated as a Laurent polynomial in variable `var` of an
/// `nvars`-variable ring.
pub(crate) fn sl2_char_in(m: &SL2Module, nvars: usize, var: usize) -> LaurentPoly {
    let mut out = LaurentPoly::zero(nvars);
    for (k, c) in m.iter() {
        let k = k as i64;
        for j in 0..=k {
            let t = LaurentPoly::var_pow(nvars, var, HalfInt::from_int(k - 2 * j));
            out = &out + &t.scale(&c.into());
        }
    }
    out
}

impl fmt::Display for SL2Module {
    /// e.g. `S2 + S0`, `S3 - S1`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.iter().rev().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            write!(f, "S{k}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SL2Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SL2[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(k: i64) -> SL2Module {
        SL2Module::irrep(k)
    }

    fn t(d: i64) -> LaurentPoly {
        LaurentPoly::var_pow(1, 0, HalfInt::from_int(d))
    }

    #[test]
    fn mul_examples() {
        assert_eq!(s(1).mul(&s(1)), s(2).add(&s(0)));
        for k in 0..5 {
            assert_eq!(s(0).mul(&s(k)), s(k));
        }
        assert_eq!(s(1).mul(&s(2)), s(3).add(&s(1)));
        assert!(s(-1).mul(&s(3)).is_zero());
    }

    #[test]
    fn sub_examples() {
        assert!(s(2).sub(&s(2)).is_zero());
        assert_eq!(s(2).add(&s(0)).sub(&s(0)), s(2));
        let p = &t(3) + &t(-3);
        assert_eq!(s(3).sub(&s(1)), SL2Module::decompose(&p).unwrap());
    }

    #[test]
    fn char_examples() {
        assert_eq!(s(1).char_poly(), &t(1) + &t(-1));
        assert_eq!(s(0).char_poly(), LaurentPoly::one(1));
        assert_eq!(s(2).char_poly(), &(&t(2) + &t(0)) + &t(-2));
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(SL2Module::decompose(&(&t(1) + &t(-1))).unwrap(), s(1));
        assert_eq!(
            SL2Module::decompose(&(&(&t(2) + &t(0)) + &t(-2))).unwrap(),
            s(2)
        );
        assert_eq!(
            SL2Module::decompose(&(&t(3) + &t(-3))).unwrap(),
            s(3).sub(&s(1))
        );
        assert_eq!(SL2Module::decompose(&t(1)), Err(Error::Asymmetric));
        assert!(SL2Module::decompose(&LaurentPoly::zero(1))
            .unwrap()
            .is_zero());
        let half = &LaurentPoly::var_pow(1, 0, HalfInt::HALF)
            + &LaurentPoly::var_pow(1, 0, -HalfInt::HALF);
        assert!(SL2Module::decompose(&half).is_err());
        assert!(SL2Module::decompose(&LaurentPoly::one(2)).is_err());
    }

    #[test]
    fn dim_examples() {
        assert_eq!(s(3).dim(), 4);
        assert_eq!(s(2).add(&s(0)).dim(), 4);
        assert_eq!(s(1).pow(3).dim(), 8);
    }

    #[test]
    fn display() {
        assert_eq!(s(2).add(&s(0)).to_string(), "S2 + S0");
        assert_eq!(s(3).sub(&s(1)).to_string(), "S3 - S1");
        assert_eq!(s(1).scale(-2).to_string(), "-2*S1");
    }
}
