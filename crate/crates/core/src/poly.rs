//! Sparse polynomials in `(x1, x2, x3)` over the Gaussian rationals, their
//! two-spinor and 2×2-matrix valued versions, and the primitive operators
//! that every composite operator is built from.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::{int, GRational, Params, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axis {
    X1,
    X2,
    X3,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X1, Axis::X2, Axis::X3];

    pub fn index(self) -> usize {
        self as usize
    }

    /// 1-based label.
    pub fn number(self) -> usize {
        self.index() + 1
    }

    pub fn from_number(n: usize) -> Result<Self> {
        match n {
            1 => Ok(Axis::X1),
            2 => Ok(Axis::X2),
            3 => Ok(Axis::X3),
            _ => Err(Error::InvalidIndex(format!("axis must be 1, 2 or 3 (got {n})"))),
        }
    }

    /// The next two axes in cyclic order: `(j, k)` with `(i, j, k)` cyclic.
    pub fn cyclic_rest(self) -> (Axis, Axis) {
        match self {
            Axis::X1 => (Axis::X2, Axis::X3),
            Axis::X2 => (Axis::X3, Axis::X1),
            Axis::X3 => (Axis::X1, Axis::X2),
        }
    }
}

/// Exponents `(a1, a2, a3)` of a monomial `x1^a1 x2^a2 x3^a3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct MultiIndex(pub [u32; 3]);

impl MultiIndex {
    pub fn new(a1: u32, a2: u32, a3: u32) -> Self {
        Self([a1, a2, a3])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn get(&self, axis: Axis) -> u32 {
        self.0[axis.index()]
    }

    fn with(mut self, axis: Axis, value: u32) -> Self {
        self.0[axis.index()] = value;
        self
    }

    fn plus(&self, other: &MultiIndex) -> Self {
        Self([self.0[0] + other.0[0], self.0[1] + other.0[1], self.0[2] + other.0[2]])
    }

    /// All exponent triples of total degree `d`, lexicographically ordered.
    pub fn of_degree(d: u32) -> Vec<MultiIndex> {
        let mut out = Vec::new();
        for a1 in (0..=d).rev() {
            for a2 in (0..=d - a1).rev() {
                out.push(MultiIndex::new(a1, a2, d - a1 - a2));
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if wrote {
                write!(f, "*")?;
            }
            if a == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, a)?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Scalar polynomial; zero coefficients are never stored, so structural
/// equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ScalarPoly {
    terms: BTreeMap<MultiIndex, GRational>,
}

impl ScalarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GRational::one())
    }

    pub fn constant(c: GRational) -> Self {
        Self::monomial(MultiIndex::default(), c)
    }

    pub fn monomial(exp: MultiIndex, coef: GRational) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, &coef);
        p
    }

    pub fn var(axis: Axis) -> Self {
        Self::monomial(MultiIndex::default().with(axis, 1), GRational::one())
    }

    /// `x1² + x2² + x3²`
    pub fn norm_sq() -> Self {
        Axis::ALL.iter().map(|&a| Self::var(a).pow(2)).fold(Self::zero(), |acc, p| &acc + &p)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &GRational)> {
        self.terms.iter()
    }

    pub fn coef(&self, exp: &MultiIndex) -> GRational {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exp: MultiIndex, coef: &GRational) {
        if coef.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(coef.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &GRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect() }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, v)| (*e, v.scale(r))).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `Some(d)` if every term has degree `d`; zero counts as homogeneous of
    /// any degree and yields `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(MultiIndex::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn involves(&self, axis: Axis) -> bool {
        self.terms.keys().any(|e| e.get(axis) > 0)
    }

    /// `f(..., x_axis = 0, ...)`
    pub fn restrict_zero(&self, axis: Axis) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.get(axis) == 0)
                .map(|(e, v)| (*e, v.clone()))
                .collect(),
        }
    }

    fn map_terms(&self, mut f: impl FnMut(&MultiIndex, &GRational) -> Option<(MultiIndex, GRational)>) -> Self {
        let mut out = Self::zero();
        for (e, v) in &self.terms {
            if let Some((e2, v2)) = f(e, v) {
                out.add_term(e2, &v2);
            }
        }
        out
    }

    pub fn reflect(&self, axis: Axis) -> Self {
        self.map_terms(|e, v| Some((*e, if e.get(axis) % 2 == 1 { -v } else { v.clone() })))
    }

    pub fn partial(&self, axis: Axis) -> Self {
        self.map_terms(|e, v| {
            let a = e.get(axis);
            (a > 0).then(|| (e.with(axis, a - 1), v.scale(&int(a as i64))))
        })
    }

    pub fn divide_by_coordinate(&self, axis: Axis) -> Result<Self> {
        if self.terms.keys().any(|e| e.get(axis) == 0) {
            return Err(Error::NotDivisible { axis: axis.number() });
        }
        Ok(self.map_terms(|e, v| Some((e.with(axis, e.get(axis) - 1), v.clone()))))
    }

    /// `T_i x^a = (a_i + 2 μ_i [a_i odd]) x^(a - e_i)`, the monomial form of
    /// `∂_i + (μ_i / x_i)(1 - R_i)`.
    pub fn dunkl(&self, axis: Axis, mu: &Rational) -> Self {
        let two_mu = mu * int(2);
        self.map_terms(|e, v| {
            let a = e.get(axis);
            if a == 0 {
                return None;
            }
            let mut factor = int(a as i64);
            if a % 2 == 1 {
                factor += &two_mu;
            }
            Some((e.with(axis, a - 1), v.scale(&factor)))
        })
    }

    /// `∂_i² + (2μ_i/x_i) ∂_i - (μ_i/x_i²)(1 - R_i)` evaluated term by term
    /// with Laurent exponents; the three pieces are individually singular but
    /// their sum is a polynomial.
    pub fn dunkl_second_order(&self, axis: Axis, mu: &Rational) -> Self {
        let i = axis.index();
        let mut laurent: BTreeMap<[i64; 3], GRational> = BTreeMap::new();
        let mut push = |mut exp: [i64; 3], shift: i64, c: GRational| {
            exp[i] += shift;
            if !c.is_zero() {
                let slot = laurent.entry(exp).or_default();
                *slot += &c;
            }
        };
        for (e, v) in &self.terms {
            let exp = [e.0[0] as i64, e.0[1] as i64, e.0[2] as i64];
            let a = exp[i];
            let a_r = int(a);
            // ∂²
            push(exp, -2, v.scale(&(&a_r * int(a - 1))));
            // (2μ/x) ∂
            push(exp, -2, v.scale(&(mu * int(2) * &a_r)));
            // -(μ/x²)(1 - R): (1 - R) x^a = (1 - (-1)^a) x^a
            if a % 2 != 0 {
                push(exp, -2, v.scale(&(-(mu * int(2)))));
            }
        }
        let mut out = Self::zero();
        for (exp, c) in laurent {
            if c.is_zero() {
                continue;
            }
            assert!(
                exp.iter().all(|&a| a >= 0),
                "second-order Dunkl term left a negative power"
            );
            out.add_term(MultiIndex([exp[0] as u32, exp[1] as u32, exp[2] as u32]), &c);
        }
        out
    }

    pub fn euler(&self) -> Self {
        self.map_terms(|e, v| Some((*e, v.scale(&int(e.degree() as i64)))))
    }

    /// Substitutes polynomials for the three variables.
    pub fn substitute(&self, images: &[ScalarPoly; 3]) -> Self {
        let mut out = Self::zero();
        for (e, v) in &self.terms {
            let mut term = ScalarPoly::constant(v.clone());
            for axis in Axis::ALL {
                term = &term * &images[axis.index()].pow(e.get(axis));
            }
            out = &out + &term;
        }
        out
    }
}

impl<'a> Add<&'a ScalarPoly> for &'a ScalarPoly {
    type Output = ScalarPoly;
    fn add(self, rhs: &ScalarPoly) -> ScalarPoly {
        let (mut big, small) = if self.len() >= rhs.len() { (self.clone(), rhs) } else { (rhs.clone(), self) };
        for (e, v) in &small.terms {
            big.add_term(*e, v);
        }
        big
    }
}

impl<'a> Sub<&'a ScalarPoly> for &'a ScalarPoly {
    type Output = ScalarPoly;
    fn sub(self, rhs: &ScalarPoly) -> ScalarPoly {
        let mut out = self.clone();
        for (e, v) in &rhs.terms {
            out.add_term(*e, &-v);
        }
        out
    }
}

impl<'a> Mul<&'a ScalarPoly> for &'a ScalarPoly {
    type Output = ScalarPoly;
    fn mul(self, rhs: &ScalarPoly) -> ScalarPoly {
        let mut out = ScalarPoly::zero();
        for (e1, v1) in &self.terms {
            for (e2, v2) in &rhs.terms {
                out.add_term(e1.plus(e2), &(v1 * v2));
            }
        }
        out
    }
}

impl Neg for &ScalarPoly {
    type Output = ScalarPoly;
    fn neg(self) -> ScalarPoly {
        ScalarPoly { terms: self.terms.iter().map(|(e, v)| (*e, -v)).collect() }
    }
}

impl fmt::Display for ScalarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, v)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{v}*{e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ScalarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

struct TermList<'a>(&'a ScalarPoly);

impl Serialize for TermList<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'b> {
            exp: [u32; 3],
            coef: &'b GRational,
        }
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for (e, v) in self.0.terms() {
            seq.serialize_element(&Term { exp: e.0, coef: v })?;
        }
        seq.end()
    }
}

/// Spinor component label: `χ+ = (1,0)ᵀ` or `χ− = (0,1)ᵀ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Spin {
    Up,
    Down,
}

impl Spin {
    pub const BOTH: [Spin; 2] = [Spin::Up, Spin::Down];

    pub fn sign(self) -> i64 {
        match self {
            Spin::Up => 1,
            Spin::Down => -1,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Spin::Up => "+",
            Spin::Down => "-",
        }
    }
}

impl Serialize for Spin {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.symbol())
    }
}

/// Two-component polynomial `up·χ+ + down·χ−`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SpinorPoly {
    pub up: ScalarPoly,
    pub down: ScalarPoly,
}

impl SpinorPoly {
    pub fn new(up: ScalarPoly, down: ScalarPoly) -> Self {
        Self { up, down }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn chi(spin: Spin) -> Self {
        Self::basis(MultiIndex::default(), spin)
    }

    pub fn chi_plus() -> Self {
        Self::chi(Spin::Up)
    }

    pub fn chi_minus() -> Self {
        Self::chi(Spin::Down)
    }

    /// Monomial times basis spinor.
    pub fn basis(exp: MultiIndex, spin: Spin) -> Self {
        Self::from_scalar(ScalarPoly::monomial(exp, GRational::one()), spin)
    }

    pub fn from_scalar(p: ScalarPoly, spin: Spin) -> Self {
        match spin {
            Spin::Up => Self::new(p, ScalarPoly::zero()),
            Spin::Down => Self::new(ScalarPoly::zero(), p),
        }
    }

    pub fn component(&self, spin: Spin) -> &ScalarPoly {
        match spin {
            Spin::Up => &self.up,
            Spin::Down => &self.down,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.up.is_zero() && self.down.is_zero()
    }

    pub fn map(&self, f: impl Fn(&ScalarPoly) -> ScalarPoly) -> Self {
        Self::new(f(&self.up), f(&self.down))
    }

    pub fn scale(&self, c: &GRational) -> Self {
        self.map(|p| p.scale(c))
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.map(|p| p.scale_rational(r))
    }

    pub fn mul_scalar_poly(&self, q: &ScalarPoly) -> Self {
        self.map(|p| q * p)
    }

    /// Common degree of both components, `None` for zero or inhomogeneous
    /// input.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        match (self.up.homogeneous_degree(), self.down.homogeneous_degree()) {
            (Some(a), Some(b)) if a == b => Some(a),
            (Some(a), None) if self.down.is_zero() => Some(a),
            (None, Some(b)) if self.up.is_zero() => Some(b),
            _ => None,
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms().map(|(_, e, _)| e.degree()).max()
    }

    pub fn involves(&self, axis: Axis) -> bool {
        self.up.involves(axis) || self.down.involves(axis)
    }

    pub fn restrict_zero(&self, axis: Axis) -> Self {
        self.map(|p| p.restrict_zero(axis))
    }

    /// Flattened `(component, exponent, coefficient)` triples, up before down.
    pub fn terms(&self) -> impl Iterator<Item = (Spin, &MultiIndex, &GRational)> {
        self.up
            .terms()
            .map(|(e, v)| (Spin::Up, e, v))
            .chain(self.down.terms().map(|(e, v)| (Spin::Down, e, v)))
    }

    pub fn coef(&self, spin: Spin, exp: &MultiIndex) -> GRational {
        self.component(spin).coef(exp)
    }

    pub fn reflect(&self, axis: Axis) -> Self {
        self.map(|p| p.reflect(axis))
    }

    pub fn partial(&self, axis: Axis) -> Self {
        self.map(|p| p.partial(axis))
    }

    pub fn divide_by_coordinate(&self, axis: Axis) -> Result<Self> {
        Ok(Self::new(self.up.divide_by_coordinate(axis)?, self.down.divide_by_coordinate(axis)?))
    }

    pub fn dunkl(&self, axis: Axis, mu: &Rational) -> Self {
        self.map(|p| p.dunkl(axis, mu))
    }

    pub fn dunkl_second_order(&self, axis: Axis, mu: &Rational) -> Self {
        self.map(|p| p.dunkl_second_order(axis, mu))
    }

    pub fn euler(&self) -> Self {
        self.map(ScalarPoly::euler)
    }

    /// Left action of the Pauli matrix `σ_index`.
    pub fn pauli(&self, index: Axis) -> Self {
        let i = GRational::i();
        match index {
            Axis::X1 => Self::new(self.down.clone(), self.up.clone()),
            Axis::X2 => Self::new(self.down.scale(&-&i), self.up.scale(&i)),
            Axis::X3 => Self::new(self.up.clone(), -&self.down),
        }
    }
}

impl<'a> Add<&'a SpinorPoly> for &'a SpinorPoly {
    type Output = SpinorPoly;
    fn add(self, rhs: &SpinorPoly) -> SpinorPoly {
        SpinorPoly::new(&self.up + &rhs.up, &self.down + &rhs.down)
    }
}

impl<'a> Sub<&'a SpinorPoly> for &'a SpinorPoly {
    type Output = SpinorPoly;
    fn sub(self, rhs: &SpinorPoly) -> SpinorPoly {
        SpinorPoly::new(&self.up - &rhs.up, &self.down - &rhs.down)
    }
}

impl Neg for &SpinorPoly {
    type Output = SpinorPoly;
    fn neg(self) -> SpinorPoly {
        SpinorPoly::new(-&self.up, -&self.down)
    }
}

impl fmt::Display for SpinorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]χ+ + [{}]χ-", self.up, self.down)
    }
}

impl fmt::Debug for SpinorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for SpinorPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("up", &TermList(&self.up))?;
        m.serialize_entry("down", &TermList(&self.down))?;
        m.end()
    }
}

pub fn reflect(f: &SpinorPoly, axis: Axis) -> SpinorPoly {
    f.reflect(axis)
}

pub fn divide_by_coordinate(f: &SpinorPoly, axis: Axis) -> Result<SpinorPoly> {
    f.divide_by_coordinate(axis)
}

pub fn dunkl(f: &SpinorPoly, axis: Axis, params: &Params) -> SpinorPoly {
    f.dunkl(axis, params.mu(axis))
}

pub fn pauli(f: &SpinorPoly, index: Axis) -> SpinorPoly {
    f.pauli(index)
}

pub fn euler(f: &SpinorPoly) -> SpinorPoly {
    f.euler()
}

/// Monomial-times-spinor basis of `P_d ⊗ C²`: exponents in lexicographic
/// order, `χ+` before `χ−` for each exponent.
pub fn spinor_basis(degree: u32) -> Vec<(MultiIndex, Spin)> {
    MultiIndex::of_degree(degree)
        .into_iter()
        .flat_map(|e| Spin::BOTH.into_iter().map(move |s| (e, s)))
        .collect()
}

/// Coordinates of `f` in [`spinor_basis`]`(degree)`; terms of any other
/// degree are ignored.
pub fn coordinates(f: &SpinorPoly, degree: u32) -> Vec<GRational> {
    spinor_basis(degree).iter().map(|(e, s)| f.coef(*s, e)).collect()
}

pub fn from_coordinates(coords: &[GRational], degree: u32) -> SpinorPoly {
    let mut out = SpinorPoly::zero();
    for ((e, s), c) in spinor_basis(degree).into_iter().zip(coords) {
        match s {
            Spin::Up => out.up.add_term(e, c),
            Spin::Down => out.down.add_term(e, c),
        }
    }
    out
}

/// 2×2 matrix with polynomial entries: a Clifford-valued polynomial acting
/// on spinors from the left.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct MatrixPoly {
    entries: [[ScalarPoly; 2]; 2],
}

impl MatrixPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Self::scalar(ScalarPoly::one())
    }

    pub fn scalar(p: ScalarPoly) -> Self {
        Self { entries: [[p.clone(), ScalarPoly::zero()], [ScalarPoly::zero(), p]] }
    }

    pub fn pauli(index: Axis) -> Self {
        let one = ScalarPoly::one();
        let c = |z: GRational| ScalarPoly::constant(z);
        let zero = ScalarPoly::zero;
        let entries = match index {
            Axis::X1 => [[zero(), one.clone()], [one.clone(), zero()]],
            Axis::X2 => [[zero(), c(-GRational::i())], [c(GRational::i()), zero()]],
            Axis::X3 => [[one.clone(), zero()], [zero(), c(GRational::from_int(-1))]],
        };
        Self { entries }
    }

    /// `σ_index · x_index`
    pub fn pauli_var(index: Axis) -> Self {
        &Self::pauli(index) * &Self::scalar(ScalarPoly::var(index))
    }

    pub fn entry(&self, row: usize, col: usize) -> &ScalarPoly {
        &self.entries[row][col]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(ScalarPoly::is_zero)
    }

    pub fn scale(&self, c: &GRational) -> Self {
        let e = &self.entries;
        Self {
            entries: [[e[0][0].scale(c), e[0][1].scale(c)], [e[1][0].scale(c), e[1][1].scale(c)]],
        }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&GRational::real(r.clone()))
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::identity(), |acc, _| &acc * self)
    }

    pub fn apply(&self, f: &SpinorPoly) -> SpinorPoly {
        let e = &self.entries;
        SpinorPoly::new(
            &(&e[0][0] * &f.up) + &(&e[0][1] * &f.down),
            &(&e[1][0] * &f.up) + &(&e[1][1] * &f.down),
        )
    }
}

impl<'a> Add<&'a MatrixPoly> for &'a MatrixPoly {
    type Output = MatrixPoly;
    fn add(self, rhs: &MatrixPoly) -> MatrixPoly {
        let (a, b) = (&self.entries, &rhs.entries);
        MatrixPoly {
            entries: [
                [&a[0][0] + &b[0][0], &a[0][1] + &b[0][1]],
                [&a[1][0] + &b[1][0], &a[1][1] + &b[1][1]],
            ],
        }
    }
}

impl<'a> Sub<&'a MatrixPoly> for &'a MatrixPoly {
    type Output = MatrixPoly;
    fn sub(self, rhs: &MatrixPoly) -> MatrixPoly {
        self + &rhs.scale(&GRational::from_int(-1))
    }
}

impl<'a> Mul<&'a MatrixPoly> for &'a MatrixPoly {
    type Output = MatrixPoly;
    fn mul(self, rhs: &MatrixPoly) -> MatrixPoly {
        let (a, b) = (&self.entries, &rhs.entries);
        let cell = |r: usize, c: usize| &(&a[r][0] * &b[0][c]) + &(&a[r][1] * &b[1][c]);
        MatrixPoly { entries: [[cell(0, 0), cell(0, 1)], [cell(1, 0), cell(1, 1)]] }
    }
}
