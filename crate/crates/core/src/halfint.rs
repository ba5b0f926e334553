//! Half-integers and vectors of half-integers, stored as doubled integers.

use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use crate::error::Error;

/// A number in `½ℤ`, held as twice its value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);
    pub const HALF: HalfInt = HalfInt(1);
    pub const ONE: HalfInt = HalfInt(2);

    pub const fn from_doubled(doubled: i64) -> Self {
        HalfInt(doubled)
    }

    pub const fn from_int(n: i64) -> Self {
        HalfInt(2 * n)
    }

    pub const fn doubled(self) -> i64 {
        self.0
    }

    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub const fn is_half_odd(self) -> bool {
        !self.is_integer()
    }

    /// The integer value, if there is one.
    pub const fn to_int(self) -> Option<i64> {
        if self.is_integer() {
            Some(self.0 / 2)
        } else {
            None
        }
    }

    pub const fn abs(self) -> Self {
        HalfInt(self.0.abs())
    }

    pub const fn is_negative(self) -> bool {
        self.0 < 0
    }

    pub fn scale(self, k: i64) -> Self {
        HalfInt(self.0 * k)
    }
}

impl From<i64> for HalfInt {
    fn from(n: i64) -> Self {
        HalfInt::from_int(n)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl AddAssign for HalfInt {
    fn add_assign(&mut self, rhs: HalfInt) {
        self.0 += rhs.0;
    }
}

impl SubAssign for HalfInt {
    fn sub_assign(&mut self, rhs: HalfInt) {
        self.0 -= rhs.0;
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_int() {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "{}/2", self.0),
        }
    }
}

impl fmt::Debug for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    /// Accepts `n`, `p/2` and `p/1`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not an integer or half-integer: {s:?}"));
        match s.split_once('/') {
            None => s.parse::<i64>().map(HalfInt::from_int).map_err(|_| bad()),
            Some((num, den)) => {
                let num: i64 = num.trim().parse().map_err(|_| bad())?;
                match den.trim() {
                    "1" => Ok(HalfInt::from_int(num)),
                    "2" => Ok(HalfInt(num)),
                    _ => Err(bad()),
                }
            }
        }
    }
}

/// A vector of half-integers; used both for monomial exponents and for weights.
///
/// The derived ordering is lexicographic in the entries.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfIntVec(pub Vec<HalfInt>);

/// Monomial exponent vector `x_1^{e_1} ··· x_n^{e_n}`.
pub type ExpVec = HalfIntVec;

impl HalfIntVec {
    pub fn zeros(n: usize) -> Self {
        HalfIntVec(vec![HalfInt::ZERO; n])
    }

    pub fn from_ints<I: IntoIterator<Item = i64>>(it: I) -> Self {
        HalfIntVec(it.into_iter().map(HalfInt::from_int).collect())
    }

    pub fn from_doubled<I: IntoIterator<Item = i64>>(it: I) -> Self {
        HalfIntVec(it.into_iter().map(HalfInt::from_doubled).collect())
    }

    /// `(h, h, …, h)` of length `n`.
    pub fn constant(n: usize, h: HalfInt) -> Self {
        HalfIntVec(vec![h; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, HalfInt> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[HalfInt] {
        &self.0
    }

    pub fn all_integer(&self) -> bool {
        self.0.iter().all(|h| h.is_integer())
    }

    pub fn all_half_odd(&self) -> bool {
        self.0.iter().all(|h| h.is_half_odd())
    }

    /// Sum of entries.
    pub fn total(&self) -> HalfInt {
        self.0.iter().fold(HalfInt::ZERO, |acc, &h| acc + h)
    }

    pub fn checked_add(&self, other: &HalfIntVec) -> Result<HalfIntVec, Error> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(HalfIntVec(
            self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect(),
        ))
    }

    pub fn checked_sub(&self, other: &HalfIntVec) -> Result<HalfIntVec, Error> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(HalfIntVec(
            self.0.iter().zip(&other.0).map(|(&a, &b)| a - b).collect(),
        ))
    }

    pub fn neg(&self) -> HalfIntVec {
        HalfIntVec(self.0.iter().map(|&a| -a).collect())
    }

    /// Parses `"3/2,1/2"` style comma-separated lists.
    pub fn parse_list(s: &str) -> Result<HalfIntVec, Error> {
        if s.trim().is_empty() {
            return Ok(HalfIntVec(Vec::new()));
        }
        s.split(',')
            .map(str::parse)
            .collect::<Result<Vec<_>, _>>()
            .map(HalfIntVec)
    }

    /// Entries rendered as strings, e.g. `["3/2", "1/2"]`.
    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(ToString::to_string).collect()
    }
}

impl std::ops::Index<usize> for HalfIntVec {
    type Output = HalfInt;
    fn index(&self, i: usize) -> &HalfInt {
        &self.0[i]
    }
}

impl std::ops::IndexMut<usize> for HalfIntVec {
    fn index_mut(&mut self, i: usize) -> &mut HalfInt {
        &mut self.0[i]
    }
}

impl FromIterator<HalfInt> for HalfIntVec {
    fn from_iter<I: IntoIterator<Item = HalfInt>>(iter: I) -> Self {
        HalfIntVec(iter.into_iter().collect())
    }
}

impl From<Vec<HalfInt>> for HalfIntVec {
    fn from(v: Vec<HalfInt>) -> Self {
        HalfIntVec(v)
    }
}

impl fmt::Display for HalfIntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, h) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{h}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for HalfIntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Lexicographic comparison of two equal-length vectors.
pub fn lex_cmp(a: &HalfIntVec, b: &HalfIntVec) -> Result<std::cmp::Ordering, Error> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(a.0.cmp(&b.0))
}
