use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Coeff, Field, NumError};

/// An element of `Q(√2, √3, √5, …)`.
///
/// Stored as a map from a square-free radicand `k` (with `k = 1` meaning the
/// rational part) to its rational coefficient. Zero coefficients are never
/// stored, so structural equality is numeric equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Scalar {
    terms: BTreeMap<u64, BigRational>,
}

fn big_ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Splits `n = s² · r` with `r` square-free.
fn square_free_split(n: u64) -> (u64, u64) {
    let mut n = n;
    let mut outside = 1u64;
    let mut radicand = 1u64;
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        let mut count = 0u32;
        while n % d == 0 {
            n /= d;
            count += 1;
        }
        outside *= d.pow(count / 2);
        if count % 2 == 1 {
            radicand *= d;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    radicand *= n;
    (outside, radicand)
}

fn smallest_prime_factor(n: u64) -> u64 {
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return d;
        }
        d += 1;
    }
    n
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from(1)
    }

    pub fn from_rational(q: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(1, q);
        }
        Scalar { terms }
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Scalar::from_rational(big_ratio(num, den))
    }

    /// `√k` for a nonnegative integer `k`.
    pub fn sqrt_int(k: u64) -> Self {
        if k == 0 {
            return Scalar::zero();
        }
        let (outside, radicand) = square_free_split(k);
        let mut terms = BTreeMap::new();
        terms.insert(radicand, BigRational::from_integer(BigInt::from(outside)));
        Scalar { terms }
    }

    /// Square root of a nonnegative rational, `√(a/b) = √(ab)/b`.
    pub fn sqrt_rational(q: &BigRational) -> Result<Self, NumError> {
        if q.is_negative() {
            return Err(NumError::NegativeRadicand(q.to_string()));
        }
        if q.is_zero() {
            return Ok(Scalar::zero());
        }
        let prod: BigUint = (q.numer() * q.denom())
            .to_biguint()
            .expect("nonnegative product");
        let as_u64 = prod
            .to_u64()
            .ok_or_else(|| NumError::RadicandOverflow(prod.to_string()))?;
        let root = Scalar::sqrt_int(as_u64);
        Ok(root * Scalar::from_rational(BigRational::from_integer(q.denom().clone()).recip()))
    }

    /// Square root of a scalar; only rational, nonnegative arguments are
    /// supported since the tower is flat.
    pub fn sqrt(&self) -> Result<Self, NumError> {
        match self.as_rational() {
            Some(q) => Scalar::sqrt_rational(&q),
            None => Err(NumError::IrrationalRadicand(self.to_string())),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&1).is_some_and(|c| c.is_one())
    }

    pub fn is_rational(&self) -> bool {
        self.terms.keys().all(|&k| k == 1)
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_rational() {
            Some(self.terms.get(&1).cloned().unwrap_or_else(BigRational::zero))
        } else {
            None
        }
    }

    /// Iterator over `(radicand, coefficient)` pairs, radicand 1 first.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigRational)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    /// Radicands (other than 1) occurring in this scalar.
    pub fn radicands(&self) -> impl Iterator<Item = u64> + '_ {
        self.terms.keys().copied().filter(|&k| k != 1)
    }

    fn insert_term(terms: &mut BTreeMap<u64, BigRational>, key: u64, value: BigRational) {
        if value.is_zero() {
            return;
        }
        match terms.get_mut(&key) {
            Some(existing) => {
                *existing += value;
                if existing.is_zero() {
                    terms.remove(&key);
                }
            }
            None => {
                terms.insert(key, value);
            }
        }
    }

    /// Rebuilds the canonical map, dropping zero coefficients. Values built
    /// through the public API are already canonical; this is idempotent.
    pub fn canon(&self) -> Self {
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            let (outside, radicand) = square_free_split(*k);
            Scalar::insert_term(
                &mut terms,
                radicand,
                c * BigRational::from_integer(BigInt::from(outside)),
            );
        }
        Scalar { terms }
    }

    /// Multiplicative inverse by repeated conjugation.
    ///
    /// Picks a prime `p` dividing some radicand, writes `x = a + b√p` with
    /// `a, b` free of `√p`, and uses `1/x = (a − b√p) / (a² − p b²)`.
    pub fn inv(&self) -> Result<Self, NumError> {
        if self.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Scalar::from_rational(q.recip()));
        }
        let p = self
            .radicands()
            .map(smallest_prime_factor)
            .min()
            .expect("irrational scalar has a radicand");
        let mut conjugate = self.clone();
        for (k, c) in conjugate.terms.iter_mut() {
            if k % p == 0 {
                *c = -c.clone();
            }
        }
        let norm = self * &conjugate;
        Ok(conjugate * norm.inv()?)
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Self, NumError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact sign, decided by refining rational enclosures of each `√k`.
    pub fn signum(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        if let Some(q) = self.as_rational() {
            return if q.is_positive() { 1 } else { -1 };
        }
        let mut bits = 16u32;
        loop {
            let (lo, hi) = self.enclosure(bits);
            if lo.is_positive() {
                return 1;
            }
            if hi.is_negative() {
                return -1;
            }
            bits *= 2;
        }
    }

    fn enclosure(&self, bits: u32) -> (BigRational, BigRational) {
        let scale = BigInt::one() << bits;
        let mut lo = BigRational::zero();
        let mut hi = BigRational::zero();
        for (k, c) in &self.terms {
            if *k == 1 {
                lo += c;
                hi += c;
                continue;
            }
            let shifted = BigInt::from(*k) << (2 * bits);
            let root = shifted.sqrt();
            let below = BigRational::new(root.clone(), scale.clone());
            let above = BigRational::new(root + 1, scale.clone());
            if c.is_positive() {
                lo += c * &below;
                hi += c * &above;
            } else {
                lo += c * &above;
                hi += c * &below;
            }
        }
        (lo, hi)
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(k, c)| c.to_f64().unwrap_or(f64::NAN) * (*k as f64).sqrt())
            .sum()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_rational(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<i32> for Scalar {
    fn from(n: i32) -> Self {
        Scalar::from(n as i64)
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar::from_rational(q)
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl<'a, 'b> Add<&'b Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'b Scalar) -> Scalar {
        let mut terms = self.terms.clone();
        for (k, c) in &rhs.terms {
            Scalar::insert_term(&mut terms, *k, c.clone());
        }
        Scalar { terms }
    }
}

impl<'a, 'b> Sub<&'b Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'b Scalar) -> Scalar {
        let mut terms = self.terms.clone();
        for (k, c) in &rhs.terms {
            Scalar::insert_term(&mut terms, *k, -c.clone());
        }
        Scalar { terms }
    }
}

impl<'a, 'b> Mul<&'b Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'b Scalar) -> Scalar {
        let mut terms = BTreeMap::new();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &rhs.terms {
                let g = k1.gcd(k2);
                let key = (k1 / g)
                    .checked_mul(k2 / g)
                    .expect("radicand product overflows u64");
                let value = c1 * c2 * BigRational::from_integer(BigInt::from(g));
                Scalar::insert_term(&mut terms, key, value);
            }
        }
        Scalar { terms }
    }
}

impl<'a, 'b> Div<&'b Scalar> for &'a Scalar {
    type Output = Scalar;
    /// # Panics
    /// On division by zero; use [`Scalar::checked_div`] to get an error.
    fn div(self, rhs: &'b Scalar) -> Scalar {
        self.checked_div(rhs).expect("scalar division by zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar { (&self).$m(rhs) }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        for (k, c) in &rhs.terms {
            Scalar::insert_term(&mut self.terms, *k, c.clone());
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        for (k, c) in &rhs.terms {
            Scalar::insert_term(&mut self.terms, *k, -c.clone());
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        let mut acc = Scalar::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

impl Coeff for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn from_scalar(s: Scalar) -> Self {
        s
    }
    fn scale(&self, s: &Scalar) -> Self {
        self * s
    }
}

impl Field for Scalar {
    fn inverse(&self) -> Result<Self, NumError> {
        self.inv()
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, radicand: u64, c: &BigRational) -> fmt::Result {
    let num = c.numer().abs();
    let den = c.denom();
    if radicand == 1 {
        write!(f, "{num}")?;
    } else if num.is_one() {
        write!(f, "sqrt({radicand})")?;
    } else {
        write!(f, "{num}*sqrt({radicand})")?;
    }
    if !den.is_one() {
        write!(f, "/{den}")?;
    }
    Ok(())
}

impl fmt::Display for Scalar {
    /// Exact form such as `5/6`, `2*sqrt(5)/5` or `1 - sqrt(2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let negative = c.numer().sign() == Sign::Minus;
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write_term(f, *k, c)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

fn parse_error(input: &str, reason: impl Into<String>) -> NumError {
    NumError::Parse {
        input: input.to_string(),
        reason: reason.into(),
    }
}

fn parse_rational(text: &str, input: &str) -> Result<BigRational, NumError> {
    let text = text.trim();
    if let Some((n, d)) = text.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| parse_error(input, "bad integer"))?;
        let d: BigInt = d.trim().parse().map_err(|_| parse_error(input, "bad integer"))?;
        if d.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        Ok(BigRational::new(n, d))
    } else {
        let n: BigInt = text.parse().map_err(|_| parse_error(input, format!("bad number `{text}`")))?;
        Ok(BigRational::from_integer(n))
    }
}

fn parse_factor(text: &str, input: &str) -> Result<Scalar, NumError> {
    let text = text.trim();
    if let Some(inner) = text.strip_prefix("sqrt(").and_then(|t| t.strip_suffix(')')) {
        return Scalar::sqrt_rational(&parse_rational(inner, input)?);
    }
    if text.is_empty() {
        return Err(parse_error(input, "empty factor"));
    }
    Ok(Scalar::from_rational(parse_rational(text, input)?))
}

/// Parses one signless product of factors separated by `*` and `/`.
fn parse_product(text: &str, input: &str) -> Result<Scalar, NumError> {
    let mut acc = Scalar::one();
    let mut pending_div = false;
    let mut start = 0usize;
    let mut depth = 0i32;
    let bytes = text.as_bytes();
    for i in 0..=bytes.len() {
        let at_end = i == bytes.len();
        let ch = if at_end { b'*' } else { bytes[i] };
        match ch {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'*' | b'/' if depth == 0 => {
                let factor = parse_factor(&text[start..i], input)?;
                acc = if pending_div {
                    acc.checked_div(&factor)?
                } else {
                    &acc * &factor
                };
                pending_div = ch == b'/';
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(parse_error(input, "unbalanced parentheses"));
    }
    Ok(acc)
}

impl FromStr for Scalar {
    type Err = NumError;

    /// Accepts sums of terms such as `2*sqrt(5)/5`, `-3/4 + sqrt(2)`,
    /// `sqrt(6/5)`.
    fn from_str(input: &str) -> Result<Self, NumError> {
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(parse_error(input, "empty input"));
        }
        let mut total = Scalar::zero();
        let mut sign = 1i64;
        let mut start = 0usize;
        let mut depth = 0i32;
        let bytes = compact.as_bytes();
        for i in 0..=bytes.len() {
            let at_end = i == bytes.len();
            let ch = if at_end { b'+' } else { bytes[i] };
            match ch {
                b'(' => depth += 1,
                b')' => depth -= 1,
                b'+' | b'-' if depth == 0 => {
                    let prev = if i == 0 { None } else { Some(bytes[i - 1]) };
                    if !at_end && matches!(prev, None | Some(b'*') | Some(b'/')) && i == start {
                        if ch == b'-' {
                            sign = -sign;
                        }
                        start = i + 1;
                        continue;
                    }
                    let term = parse_product(&compact[start..i], input)?;
                    total += &(term * Scalar::from(sign));
                    sign = if ch == b'-' { -1 } else { 1 };
                    start = i + 1;
                }
                _ => {}
            }
        }
        if depth != 0 {
            return Err(parse_error(input, "unbalanced parentheses"));
        }
        Ok(total)
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Text(String),
            Int(i64),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Text(s) => s.parse().map_err(serde::de::Error::custom),
            Raw::Int(n) => Ok(Scalar::from(n)),
        }
    }
}
