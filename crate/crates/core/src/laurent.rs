//! Exact Laurent polynomials in one variable `q`.
//!
//! Coefficients are stored densely between the lowest and highest nonzero
//! exponent. The exponent windows that occur in Fock space computations are
//! narrow, so the dense layout is both compact and fast to combine.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LaurentError {
    #[error("polynomial {0} is not antisymmetric under q -> q^-1")]
    NotAntisymmetric(String),
    #[error("polynomial {0} has non-integral coefficients")]
    NonIntegral(String),
    #[error("cannot parse polynomial {0:?}")]
    Parse(String),
}

/// Coefficient ring of a [`Laurent`] polynomial.
pub trait Coeff:
    Clone + PartialEq + Zero + One + Signed + fmt::Display + fmt::Debug + Send + Sync
{
}

impl<T> Coeff for T where
    T: Clone + PartialEq + Zero + One + Signed + fmt::Display + fmt::Debug + Send + Sync
{
}

/// A Laurent polynomial `sum_j coeffs[j] q^(min + j)` in canonical form:
/// first and last stored coefficients are nonzero and the zero polynomial
/// has no coefficients and `min == 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent<C> {
    min: i32,
    coeffs: Vec<C>,
}

/// Integral Laurent polynomials, the ring `Z[q, q^-1]`.
pub type LaurentPoly = Laurent<BigInt>;

/// Laurent polynomials with rational coefficients. Only used by the
/// oracle routes that divide by factorials and centralizer orders.
pub type RationalLaurentPoly = Laurent<BigRational>;

impl<C: Coeff> Laurent<C> {
    pub fn zero() -> Self {
        Laurent {
            min: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    /// `c q^exp`.
    pub fn monomial(c: C, exp: i32) -> Self {
        Self::from_coeffs(exp, vec![c])
    }

    /// `q^exp`.
    pub fn q_pow(exp: i32) -> Self {
        Self::monomial(C::one(), exp)
    }

    /// Builds `sum_j coeffs[j] q^(min + j)`, trimming zeros.
    pub fn from_coeffs(min: i32, coeffs: Vec<C>) -> Self {
        let mut p = Laurent { min, coeffs };
        p.normalize();
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i32, C)>>(terms: I) -> Self {
        let mut acc: BTreeMap<i32, C> = BTreeMap::new();
        for (e, c) in terms {
            let slot = acc.entry(e).or_insert_with(C::zero);
            *slot = slot.clone() + c;
        }
        let (Some(&lo), Some(&hi)) = (acc.keys().next(), acc.keys().next_back()) else {
            return Self::zero();
        };
        let mut coeffs = vec![C::zero(); (hi - lo + 1) as usize];
        for (e, c) in acc {
            coeffs[(e - lo) as usize] = c;
        }
        Self::from_coeffs(lo, coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.min += lead as i32;
        }
        if self.coeffs.is_empty() {
            self.min = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.min == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn min_exp(&self) -> i32 {
        self.min
    }

    /// Highest exponent with a nonzero coefficient, `None` for zero.
    pub fn max_exp(&self) -> Option<i32> {
        if self.is_zero() {
            None
        } else {
            Some(self.min + self.coeffs.len() as i32 - 1)
        }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: i32) -> C {
        let idx = exp - self.min;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            C::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &C)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(j, c)| (self.min + j as i32, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms().count()
    }

    /// Multiplication by `q^exp`.
    pub fn shift(&self, exp: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Laurent {
            min: self.min + exp,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_coeffs(self.min, self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    /// The bar involution `q -> q^-1`.
    pub fn bar(&self) -> Self {
        match self.max_exp() {
            None => Self::zero(),
            Some(max) => Laurent {
                min: -max,
                coeffs: self.coeffs.iter().rev().cloned().collect(),
            },
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> C {
        self.coeffs.iter().fold(C::zero(), |a, c| a + c.clone())
    }

    /// True iff every exponent lies in `lo..=hi` (vacuous for zero).
    pub fn exponents_within(&self, lo: i32, hi: i32) -> bool {
        match self.max_exp() {
            None => true,
            Some(max) => self.min >= lo && max <= hi,
        }
    }

    /// For `r` with `bar(r) == -r`, returns `(j, r_j)` for `j > 0` such that
    /// `r = sum_j r_j (q^j - q^-j)`.
    pub fn antisym_split(&self) -> Result<BTreeMap<i32, C>, LaurentError> {
        if self.bar() != -self {
            return Err(LaurentError::NotAntisymmetric(self.to_string()));
        }
        Ok(self
            .terms()
            .filter(|(e, _)| *e > 0)
            .map(|(e, c)| (e, c.clone()))
            .collect())
    }

    fn combine(&self, other: &Self, sign: bool) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if sign { other.clone() } else { -other };
        }
        let lo = self.min.min(other.min);
        let hi = self.max_exp().unwrap().max(other.max_exp().unwrap());
        let mut coeffs = vec![C::zero(); (hi - lo + 1) as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.min - lo) as usize + j] = c.clone();
        }
        for (j, c) in other.coeffs.iter().enumerate() {
            let slot = &mut coeffs[(other.min - lo) as usize + j];
            *slot = if sign {
                slot.clone() + c.clone()
            } else {
                slot.clone() - c.clone()
            };
        }
        Self::from_coeffs(lo, coeffs)
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (a, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in other.coeffs.iter().enumerate() {
                coeffs[a + b] = coeffs[a + b].clone() + x.clone() * y.clone();
            }
        }
        Self::from_coeffs(self.min + other.min, coeffs)
    }

    /// Applies `f` to every coefficient, producing a polynomial over another ring.
    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Laurent<D> {
        Laurent::from_coeffs(self.min, self.coeffs.iter().map(f).collect())
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, latex: bool) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if neg {
                f.write_str("-")?;
            } else if k > 0 {
                f.write_str("+")?;
            }
            let unit = abs.is_one();
            if !unit || e == 0 {
                write!(f, "{abs}")?;
            }
            match e {
                0 => {}
                1 => f.write_str("q")?,
                _ if latex => write!(f, "q^{{{e}}}")?,
                _ => write!(f, "q^{e}")?,
            }
        }
        Ok(())
    }

    /// Same text as `Display` but with braced exponents (`q^{-1}`).
    pub fn to_latex(&self) -> String {
        struct L<'a, C>(&'a Laurent<C>);
        impl<C: Coeff> fmt::Display for L<'_, C> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt_with(f, true)
            }
        }
        L(self).to_string()
    }
}

impl LaurentPoly {
    pub fn from_int(c: i64) -> Self {
        Self::constant(BigInt::from(c))
    }

    /// `q - q^-1`, the recurring antisymmetric unit.
    pub fn q_minus_q_inv() -> Self {
        Self::from_terms([(1, BigInt::one()), (-1, -BigInt::one())])
    }

    pub fn to_rational(&self) -> RationalLaurentPoly {
        self.map_coeffs(|c| BigRational::from_integer(c.clone()))
    }
}

impl RationalLaurentPoly {
    /// Converts back to the integral ring, failing loudly on any denominator.
    pub fn to_integral(&self) -> Result<LaurentPoly, LaurentError> {
        if self.coeffs.iter().any(|c| !c.is_integer()) {
            return Err(LaurentError::NonIntegral(self.to_string()));
        }
        Ok(self.map_coeffs(|c| c.to_integer()))
    }
}

impl<C: Coeff> Default for Laurent<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> fmt::Display for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, false)
    }
}

impl<C: Coeff> fmt::Debug for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

macro_rules! forward_binop {
    ($imp:ident, $method:ident, $body:expr) => {
        impl<C: Coeff> $imp<&Laurent<C>> for &Laurent<C> {
            type Output = Laurent<C>;
            fn $method(self, rhs: &Laurent<C>) -> Laurent<C> {
                let f: fn(&Laurent<C>, &Laurent<C>) -> Laurent<C> = $body;
                f(self, rhs)
            }
        }
        impl<C: Coeff> $imp<Laurent<C>> for Laurent<C> {
            type Output = Laurent<C>;
            fn $method(self, rhs: Laurent<C>) -> Laurent<C> {
                (&self).$method(&rhs)
            }
        }
        impl<C: Coeff> $imp<&Laurent<C>> for Laurent<C> {
            type Output = Laurent<C>;
            fn $method(self, rhs: &Laurent<C>) -> Laurent<C> {
                (&self).$method(rhs)
            }
        }
        impl<C: Coeff> $imp<Laurent<C>> for &Laurent<C> {
            type Output = Laurent<C>;
            fn $method(self, rhs: Laurent<C>) -> Laurent<C> {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.combine(b, true));
forward_binop!(Sub, sub, |a, b| a.combine(b, false));
forward_binop!(Mul, mul, |a, b| a.product(b));

impl<C: Coeff> AddAssign<&Laurent<C>> for Laurent<C> {
    fn add_assign(&mut self, rhs: &Laurent<C>) {
        *self = self.combine(rhs, true);
    }
}

impl<C: Coeff> SubAssign<&Laurent<C>> for Laurent<C> {
    fn sub_assign(&mut self, rhs: &Laurent<C>) {
        *self = self.combine(rhs, false);
    }
}

impl<C: Coeff> Neg for &Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        Laurent {
            min: self.min,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<C: Coeff> Neg for Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        -&self
    }
}

impl<C: Coeff> std::iter::Sum for Laurent<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

impl FromStr for LaurentPoly {
    type Err = LaurentError;

    /// Parses the printed form, e.g. `q^2-1+q^-2`, `-q^{-1}`, `2q`, `(q-q^-1)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || LaurentError::Parse(s.to_string());
        // whitespace may separate tokens but never split one
        let tokens: Vec<&str> = s.split_whitespace().collect();
        if tokens.windows(2).any(|w| {
            let a = w[0].chars().last().unwrap();
            let b = w[1].chars().next().unwrap();
            (a.is_ascii_alphanumeric() || a == '^') && (b.is_ascii_alphanumeric() || b == '^')
        }) {
            return Err(err());
        }
        let cleaned: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && !matches!(c, '{' | '}' | '(' | ')' | '*'))
            .collect();
        if cleaned.is_empty() {
            return Err(err());
        }
        let bytes = cleaned.as_bytes();
        let mut terms = Vec::new();
        let mut pos = 0;
        while pos < bytes.len() {
            let mut negative = false;
            if bytes[pos] == b'+' || bytes[pos] == b'-' {
                negative = bytes[pos] == b'-';
                pos += 1;
            } else if pos > 0 {
                return Err(err());
            }
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let mut coeff = if pos > start {
                cleaned[start..pos].parse::<BigInt>().map_err(|_| err())?
            } else {
                BigInt::one()
            };
            let mut exp = 0;
            if pos < bytes.len() && bytes[pos] == b'q' {
                pos += 1;
                exp = 1;
                if pos < bytes.len() && bytes[pos] == b'^' {
                    pos += 1;
                    let es = pos;
                    if pos < bytes.len() && bytes[pos] == b'-' {
                        pos += 1;
                    }
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    exp = cleaned[es..pos].parse::<i32>().map_err(|_| err())?;
                }
            } else if pos == start {
                return Err(err());
            }
            if negative {
                coeff = -coeff;
            }
            terms.push((exp, coeff));
        }
        Ok(Self::from_terms(terms))
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    min: i32,
    c: Vec<String>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PolyJson {
            min: self.min,
            c: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = PolyJson::deserialize(deserializer)?;
        let coeffs = raw
            .c
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        let p = Laurent::from_coeffs(raw.min, coeffs);
        if p.coeffs.len() != raw.c.len() {
            return Err(serde::de::Error::custom("polynomial is not in canonical form"));
        }
        Ok(p)
    }
}
