//! Exact scalars: arbitrary-precision rationals, Gaussian rationals, and the
//! Pochhammer machinery that turns every Gamma-function ratio we need into a
//! rational number.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::Axis;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p/q`, `-p/q`, `+p/q` or a bare integer.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::ParseRational(text.to_string());
    let s = text.trim();
    if s.is_empty() {
        return Err(bad());
    }
    let parse_int = |part: &str| -> Result<BigInt> {
        let part = part.trim();
        let digits = part.strip_prefix(['+', '-']).unwrap_or(part);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        part.trim_start_matches('+').parse::<BigInt>().map_err(|_| bad())
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let numer = parse_int(p)?;
            let denom = parse_int(q)?;
            if denom.is_zero() || q.trim().starts_with(['+', '-']) {
                return Err(bad());
            }
            Ok(Rational::new(numer, denom))
        }
        None => Ok(Rational::from_integer(parse_int(s)?)),
    }
}

/// Canonical `p/q` form, `q > 0`; integers keep the explicit `/1`.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn serialize_rational<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

pub fn serialize_rationals<S: Serializer>(
    rs: &[Rational],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(rs.iter().map(format_rational))
}

/// Rising factorial `a (a+1) ... (a+n-1)`; equals 1 for `n = 0`.
pub fn pochhammer(a: &Rational, n: u32) -> Rational {
    let mut acc = Rational::one();
    let mut term = a.clone();
    for _ in 0..n {
        acc *= &term;
        term += Rational::one();
    }
    acc
}

pub fn factorial(n: u32) -> Rational {
    pochhammer(&Rational::one(), n)
}

/// `Γ(a)/Γ(b)` for `a - b` a non-negative integer `m`, i.e. `(b)_m`.
pub fn gamma_ratio(a: &Rational, b: &Rational) -> Result<Rational> {
    let diff = a - b;
    let not_rational = || Error::NonIntegerGammaDifference {
        a: format_rational(a),
        b: format_rational(b),
    };
    if !diff.is_integer() || diff.is_negative() {
        return Err(not_rational());
    }
    let m = diff.to_integer().to_u32().ok_or_else(not_rational)?;
    Ok(pochhammer(b, m))
}

/// Exact complex number with rational real and imaginary parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GRational {
    pub re: Rational,
    pub im: Rational,
}

impl GRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Self { re, im: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(int(n))
    }

    pub fn i() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// `|z|²`
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; panics on zero like rational division does.
    pub fn inv(&self) -> Self {
        let n = self.norm_sqr();
        assert!(!n.is_zero(), "division by zero Gaussian rational");
        Self::new(&self.re / &n, -&self.im / &n)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(&self.re * r, &self.im * r)
    }
}

impl Zero for GRational {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GRational {
    fn one() -> Self {
        Self::real(Rational::one())
    }
}

impl From<Rational> for GRational {
    fn from(r: Rational) -> Self {
        Self::real(r)
    }
}

impl From<&Rational> for GRational {
    fn from(r: &Rational) -> Self {
        Self::real(r.clone())
    }
}

impl From<i64> for GRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl<'a> Add<&'a GRational> for &'a GRational {
    type Output = GRational;
    fn add(self, rhs: &GRational) -> GRational {
        GRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a GRational> for &'a GRational {
    type Output = GRational;
    fn sub(self, rhs: &GRational) -> GRational {
        GRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a GRational> for &'a GRational {
    type Output = GRational;
    fn mul(self, rhs: &GRational) -> GRational {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GRational::real(&self.re * &rhs.re);
        }
        GRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl<'a> Div<&'a GRational> for &'a GRational {
    type Output = GRational;
    fn div(self, rhs: &GRational) -> GRational {
        if rhs.im.is_zero() {
            return GRational::new(&self.re / &rhs.re, &self.im / &rhs.re);
        }
        self * &rhs.inv()
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<GRational> for GRational {
            type Output = GRational;
            fn $method(self, rhs: GRational) -> GRational {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a GRational> for GRational {
            type Output = GRational;
            fn $method(self, rhs: &GRational) -> GRational {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl Neg for GRational {
    type Output = GRational;
    fn neg(self) -> GRational {
        GRational::new(-self.re, -self.im)
    }
}

impl Neg for &GRational {
    type Output = GRational;
    fn neg(self) -> GRational {
        GRational::new(-&self.re, -&self.im)
    }
}

impl AddAssign<&GRational> for GRational {
    fn add_assign(&mut self, rhs: &GRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GRational> for GRational {
    fn sub_assign(&mut self, rhs: &GRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GRational> for GRational {
    fn mul_assign(&mut self, rhs: &GRational) {
        *self = &*self * rhs;
    }
}

impl Sum for GRational {
    fn sum<I: Iterator<Item = GRational>>(iter: I) -> Self {
        iter.fold(GRational::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl Product for GRational {
    fn product<I: Iterator<Item = GRational>>(iter: I) -> Self {
        iter.fold(GRational::one(), |acc, x| &acc * &x)
    }
}

impl fmt::Display for GRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) => {
                if self.im.is_negative() {
                    write!(f, "({} - {}i)", self.re, -&self.im)
                } else {
                    write!(f, "({} + {}i)", self.re, self.im)
                }
            }
        }
    }
}

impl fmt::Debug for GRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for GRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("GRational", 2)?;
        st.serialize_field("re", &format_rational(&self.re))?;
        st.serialize_field("im", &format_rational(&self.im))?;
        st.end()
    }
}

/// Reflection-group multiplicities `μ1, μ2, μ3 ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Params {
    mu: [Rational; 3],
}

impl Params {
    pub fn new(mu1: Rational, mu2: Rational, mu3: Rational) -> Result<Self> {
        let mu = [mu1, mu2, mu3];
        for (i, m) in mu.iter().enumerate() {
            if m.is_negative() {
                return Err(Error::NegativeMu { index: i + 1, value: format_rational(m) });
            }
        }
        Ok(Self { mu })
    }

    /// Convenience constructor from `(numer, denom)` pairs.
    pub fn from_ratios(mu: [(i64, i64); 3]) -> Result<Self> {
        Self::new(rat(mu[0].0, mu[0].1), rat(mu[1].0, mu[1].1), rat(mu[2].0, mu[2].1))
    }

    pub fn zero() -> Self {
        Self { mu: [Rational::zero(), Rational::zero(), Rational::zero()] }
    }

    pub fn mu(&self, axis: Axis) -> &Rational {
        &self.mu[axis.index()]
    }

    pub fn mu1(&self) -> &Rational {
        &self.mu[0]
    }
    pub fn mu2(&self) -> &Rational {
        &self.mu[1]
    }
    pub fn mu3(&self) -> &Rational {
        &self.mu[2]
    }

    pub fn as_array(&self) -> &[Rational; 3] {
        &self.mu
    }

    pub fn mu_sum(&self) -> Rational {
        &self.mu[0] + &self.mu[1] + &self.mu[2]
    }

    /// `γ3 = μ1 + μ2 + μ3 + 3/2`
    pub fn gamma3(&self) -> Rational {
        self.mu_sum() + rat(3, 2)
    }

    /// `γ2 = μ1 + μ2 + 1`
    pub fn gamma2(&self) -> Rational {
        &self.mu[0] + &self.mu[1] + Rational::one()
    }

    /// `(μ1, μ2, μ3) → (μ2, μ3, μ1)`
    pub fn cyclic(&self) -> Self {
        Self { mu: [self.mu[1].clone(), self.mu[2].clone(), self.mu[0].clone()] }
    }

    pub fn to_strings(&self) -> [String; 3] {
        [format_rational(&self.mu[0]), format_rational(&self.mu[1]), format_rational(&self.mu[2])]
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.mu[0], self.mu[1], self.mu[2])
    }
}

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.to_strings())
    }
}

/// Exact `(-1)^n`.
pub fn sign_pow(n: i64) -> Rational {
    if n.is_even() {
        Rational::one()
    } else {
        -Rational::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&rat(3, 2), 0), int(1));
        assert_eq!(pochhammer(&rat(1, 2), 2), rat(3, 4));
        assert_eq!(pochhammer(&int(-2), 3), int(0));
    }

    #[test]
    fn gamma_ratio_examples() {
        assert_eq!(gamma_ratio(&rat(5, 2), &rat(1, 2)).unwrap(), rat(3, 4));
        assert_eq!(gamma_ratio(&rat(7, 3), &rat(7, 3)).unwrap(), int(1));
        assert!(matches!(
            gamma_ratio(&int(2), &rat(5, 2)),
            Err(Error::NonIntegerGammaDifference { .. })
        ));
        assert!(gamma_ratio(&int(1), &int(3)).is_err());
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("1/2").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-3/6").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("+4").unwrap(), int(4));
        assert_eq!(parse_rational(" 0 ").unwrap(), int(0));
        for bad in ["", "1/0", "a", "1/-2", "1//2", "--1", "/3"] {
            assert!(parse_rational(bad).is_err(), "{bad:?} should not parse");
        }
        assert_eq!(format_rational(&rat(-6, 4)), "-3/2");
        assert_eq!(format_rational(&int(3)), "3/1");
    }

    #[test]
    fn gaussian_basics() {
        let i = GRational::i();
        assert_eq!(&i * &i, GRational::from_int(-1));
        let z = GRational::new(rat(1, 2), rat(-3, 4));
        assert_eq!(z.conj().conj(), z);
        assert_eq!(&z / &z, GRational::one());
        assert_eq!(serde_json::to_string(&z).unwrap(), r#"{"re":"1/2","im":"-3/4"}"#);
    }

    #[test]
    fn params_reject_negative() {
        assert!(matches!(
            Params::from_ratios([(-1, 1), (0, 1), (0, 1)]),
            Err(Error::NegativeMu { index: 1, .. })
        ));
        let p = Params::from_ratios([(1, 2), (1, 3), (2, 5)]).unwrap();
        assert_eq!(p.gamma3(), rat(1, 2) + rat(1, 3) + rat(2, 5) + rat(3, 2));
        assert_eq!(p.gamma2(), rat(11, 6));
        assert_eq!(p.cyclic().as_array(), &[rat(1, 3), rat(2, 5), rat(1, 2)]);
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-40i64..=40, 1i64..=13).prop_map(|(p, q)| rat(p, q))
    }

    fn gaussian() -> impl Strategy<Value = GRational> {
        (small_rational(), small_rational()).prop_map(|(a, b)| GRational::new(a, b))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn gaussian_ring_axioms(a in gaussian(), b in gaussian(), c in gaussian()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        }

        #[test]
        fn pochhammer_splits(a in small_rational(), m in 0u32..6, n in 0u32..6) {
            let lhs = pochhammer(&a, m + n);
            let rhs = pochhammer(&a, m) * pochhammer(&(&a + int(m as i64)), n);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn rational_format_roundtrip(r in small_rational()) {
            prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        }
    }
}
