//! The named operators of the Dirac–Dunkl calculus as composable linear maps
//! on spinor polynomials, and an exhaustive checker for operator identities.
//!
//! Operators are expression trees over a handful of primitives (Dunkl
//! derivatives, reflections, Pauli matrices, Euler operator, multiplication
//! by polynomials). They mix degrees freely, so no global matrix is formed;
//! [`degree_matrix`] restricts an operator to one homogeneous degree when a
//! matrix is needed.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::exactnum::{int, rat, GRational, Params, Rational};
use crate::linalg::Matrix;
use crate::poly::{coordinates, spinor_basis, Axis, MultiIndex, ScalarPoly, Spin, SpinorPoly};

#[derive(Clone)]
pub struct LinOp(Arc<Node>);

enum Node {
    Identity,
    Scalar(GRational),
    Scale(GRational, LinOp),
    Dunkl(Axis, Rational),
    DunklSecondOrder(Axis, Rational),
    Partial(Axis),
    Reflect(Axis),
    Pauli(Axis),
    Euler,
    MulPoly(ScalarPoly),
    Sum(Vec<LinOp>),
    /// `[A, B, C]` is `A ∘ B ∘ C`: the last factor acts first.
    Compose(Vec<LinOp>),
}

impl LinOp {
    fn node(n: Node) -> Self {
        LinOp(Arc::new(n))
    }

    pub fn identity() -> Self {
        Self::node(Node::Identity)
    }

    /// `c · 1`
    pub fn scalar(c: GRational) -> Self {
        Self::node(Node::Scalar(c))
    }

    pub fn rational(r: Rational) -> Self {
        Self::scalar(GRational::real(r))
    }

    pub fn dunkl(axis: Axis, params: &Params) -> Self {
        Self::node(Node::Dunkl(axis, params.mu(axis).clone()))
    }

    /// Explicit second-order form of `T_i²`.
    pub fn dunkl_second_order(axis: Axis, params: &Params) -> Self {
        Self::node(Node::DunklSecondOrder(axis, params.mu(axis).clone()))
    }

    pub fn partial(axis: Axis) -> Self {
        Self::node(Node::Partial(axis))
    }

    pub fn reflect(axis: Axis) -> Self {
        Self::node(Node::Reflect(axis))
    }

    pub fn pauli(index: Axis) -> Self {
        Self::node(Node::Pauli(index))
    }

    pub fn euler() -> Self {
        Self::node(Node::Euler)
    }

    pub fn mul_poly(p: ScalarPoly) -> Self {
        Self::node(Node::MulPoly(p))
    }

    pub fn coordinate(axis: Axis) -> Self {
        Self::mul_poly(ScalarPoly::var(axis))
    }

    pub fn scale(&self, c: &GRational) -> Self {
        Self::node(Node::Scale(c.clone(), self.clone()))
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&GRational::real(r.clone()))
    }

    pub fn pow(&self, n: u32) -> Self {
        match n {
            0 => Self::identity(),
            _ => Self::node(Node::Compose(vec![self.clone(); n as usize])),
        }
    }

    pub fn sum(ops: impl IntoIterator<Item = LinOp>) -> Self {
        let mut flat = Vec::new();
        for op in ops {
            match &*op.0 {
                Node::Sum(inner) => flat.extend(inner.iter().cloned()),
                _ => flat.push(op),
            }
        }
        Self::node(Node::Sum(flat))
    }

    pub fn compose(ops: impl IntoIterator<Item = LinOp>) -> Self {
        let mut flat = Vec::new();
        for op in ops {
            match &*op.0 {
                Node::Compose(inner) => flat.extend(inner.iter().cloned()),
                Node::Identity => {}
                _ => flat.push(op),
            }
        }
        match flat.len() {
            0 => Self::identity(),
            1 => flat.pop().unwrap(),
            _ => Self::node(Node::Compose(flat)),
        }
    }

    pub fn apply(&self, f: &SpinorPoly) -> SpinorPoly {
        if f.is_zero() {
            return SpinorPoly::zero();
        }
        match &*self.0 {
            Node::Identity => f.clone(),
            Node::Scalar(c) => f.scale(c),
            Node::Scale(c, op) => op.apply(f).scale(c),
            Node::Dunkl(axis, mu) => f.dunkl(*axis, mu),
            Node::DunklSecondOrder(axis, mu) => f.dunkl_second_order(*axis, mu),
            Node::Partial(axis) => f.partial(*axis),
            Node::Reflect(axis) => f.reflect(*axis),
            Node::Pauli(index) => f.pauli(*index),
            Node::Euler => f.euler(),
            Node::MulPoly(p) => f.mul_scalar_poly(p),
            Node::Sum(ops) => ops.iter().fold(SpinorPoly::zero(), |acc, op| &acc + &op.apply(f)),
            Node::Compose(ops) => ops.iter().rev().fold(f.clone(), |acc, op| op.apply(&acc)),
        }
    }
}

impl fmt::Debug for LinOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            Node::Identity => write!(f, "1"),
            Node::Scalar(c) => write!(f, "{c}"),
            Node::Scale(c, op) => write!(f, "{c}·({op:?})"),
            Node::Dunkl(a, _) => write!(f, "T{}", a.number()),
            Node::DunklSecondOrder(a, _) => write!(f, "T{}²'", a.number()),
            Node::Partial(a) => write!(f, "∂{}", a.number()),
            Node::Reflect(a) => write!(f, "R{}", a.number()),
            Node::Pauli(a) => write!(f, "σ{}", a.number()),
            Node::Euler => write!(f, "E"),
            Node::MulPoly(p) => write!(f, "({p})"),
            Node::Sum(ops) => {
                let parts: Vec<String> = ops.iter().map(|o| format!("{o:?}")).collect();
                write!(f, "({})", parts.join(" + "))
            }
            Node::Compose(ops) => {
                let parts: Vec<String> = ops.iter().map(|o| format!("{o:?}")).collect();
                write!(f, "{}", parts.join("·"))
            }
        }
    }
}

impl Add for &LinOp {
    type Output = LinOp;
    fn add(self, rhs: &LinOp) -> LinOp {
        LinOp::sum([self.clone(), rhs.clone()])
    }
}

impl Sub for &LinOp {
    type Output = LinOp;
    fn sub(self, rhs: &LinOp) -> LinOp {
        LinOp::sum([self.clone(), -rhs])
    }
}

/// Composition: `(a * b)(f) = a(b(f))`.
impl Mul for &LinOp {
    type Output = LinOp;
    fn mul(self, rhs: &LinOp) -> LinOp {
        LinOp::compose([self.clone(), rhs.clone()])
    }
}

impl Neg for &LinOp {
    type Output = LinOp;
    fn neg(self) -> LinOp {
        self.scale(&GRational::from_int(-1))
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for LinOp {
            type Output = LinOp;
            fn $method(self, rhs: LinOp) -> LinOp {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&LinOp> for LinOp {
            type Output = LinOp;
            fn $method(self, rhs: &LinOp) -> LinOp {
                (&self).$method(rhs)
            }
        }
        impl $trait<LinOp> for &LinOp {
            type Output = LinOp;
            fn $method(self, rhs: LinOp) -> LinOp {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LinOp {
    type Output = LinOp;
    fn neg(self) -> LinOp {
        -&self
    }
}

/// `[a, b] = ab − ba`
pub fn commutator(a: &LinOp, b: &LinOp) -> LinOp {
    a * b - b * a
}

/// `{a, b} = ab + ba`
pub fn anticommutator(a: &LinOp, b: &LinOp) -> LinOp {
    a * b + b * a
}

fn half() -> Rational {
    rat(1, 2)
}

/// `x̲ = σ1 x1 + σ2 x2 + σ3 x3`
pub fn x_vec() -> LinOp {
    LinOp::sum(Axis::ALL.map(|a| LinOp::pauli(a) * LinOp::coordinate(a)))
}

/// Multiplication by `‖x‖²`.
pub fn norm_sq() -> LinOp {
    LinOp::mul_poly(ScalarPoly::norm_sq())
}

pub fn euler() -> LinOp {
    LinOp::euler()
}

/// `D = σ1 T1 + σ2 T2 + σ3 T3`
pub fn dirac(params: &Params) -> LinOp {
    LinOp::sum(Axis::ALL.map(|a| LinOp::pauli(a) * LinOp::dunkl(a, params)))
}

/// `Δ = T1² + T2² + T3²` composed from Dunkl derivatives.
pub fn laplace(params: &Params) -> LinOp {
    LinOp::sum(Axis::ALL.map(|a| LinOp::dunkl(a, params).pow(2)))
}

/// `Δ = Σ ∂_i² + (2μ_i/x_i)∂_i − (μ_i/x_i²)(1 − R_i)`
pub fn laplace_explicit(params: &Params) -> LinOp {
    LinOp::sum(Axis::ALL.map(|a| LinOp::dunkl_second_order(a, params)))
}

/// `Δ_{S²} = ‖x‖²Δ − E(E + 2μ1 + 2μ2 + 2μ3 + 1)`
pub fn laplace_s2(params: &Params) -> LinOp {
    let shift = params.mu_sum() * int(2) + int(1);
    norm_sq() * laplace(params) - euler() * (euler() + LinOp::rational(shift))
}

/// `L_i = (1/i)(x_j T_k − x_k T_j)`, `(i, j, k)` cyclic.
pub fn angular(params: &Params, i: Axis) -> LinOp {
    let (j, k) = i.cyclic_rest();
    let inner = LinOp::coordinate(j) * LinOp::dunkl(k, params) - LinOp::coordinate(k) * LinOp::dunkl(j, params);
    inner.scale(&-GRational::i())
}

/// `μ·R = μ1 R1 + μ2 R2 + μ3 R3`
pub fn mu_dot_r(params: &Params) -> LinOp {
    LinOp::sum(Axis::ALL.map(|a| LinOp::reflect(a).scale_rational(params.mu(a))))
}

/// `Γ = σ·L + μ·R`
pub fn gamma_op(params: &Params) -> LinOp {
    let spin_orbit = LinOp::sum(Axis::ALL.map(|a| LinOp::pauli(a) * angular(params, a)));
    spin_orbit + mu_dot_r(params)
}

/// `Γ = ½[D, x̲] − 3/2`, the commutator form of `Γ + 1 = ½([D, x̲] − 1)`.
pub fn gamma_from_commutator(params: &Params) -> LinOp {
    commutator(&dirac(params), &x_vec()).scale_rational(&half()) - LinOp::rational(rat(3, 2))
}

/// `Γ + 1`
pub fn gamma_plus_one(params: &Params) -> LinOp {
    gamma_op(params) + LinOp::identity()
}

/// `J_i = L_i + σ_i(μ_j R_j + μ_k R_k + 1/2)`
pub fn symmetry_j(params: &Params, i: Axis) -> LinOp {
    let (j, k) = i.cyclic_rest();
    let bracket = LinOp::reflect(j).scale_rational(params.mu(j))
        + LinOp::reflect(k).scale_rational(params.mu(k))
        + LinOp::rational(half());
    angular(params, i) + LinOp::pauli(i) * bracket
}

/// `Z_i = σ_i R_i`
pub fn involution_z(i: Axis) -> LinOp {
    LinOp::pauli(i) * LinOp::reflect(i)
}

/// `K_i = −i J_i Z_j Z_k`
pub fn bi_generator(params: &Params, i: Axis) -> LinOp {
    let (j, k) = i.cyclic_rest();
    (symmetry_j(params, i) * involution_z(j) * involution_z(k)).scale(&-GRational::i())
}

/// `R1 R2 R3`
pub fn total_reflection() -> LinOp {
    LinOp::compose(Axis::ALL.map(LinOp::reflect))
}

/// The central element `(Γ + 1) R1 R2 R3`.
pub fn central_element(params: &Params) -> LinOp {
    gamma_plus_one(params) * total_reflection()
}

/// `Q = K1² + K2² + K3²`
pub fn casimir(params: &Params) -> LinOp {
    LinOp::sum(Axis::ALL.map(|a| bi_generator(params, a).pow(2)))
}

/// Result of checking `lhs = rhs` on every basis element of a degree range.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub name: String,
    pub degrees: [u32; 2],
    pub basis_size: usize,
    pub status: Status,
    pub counterexample: Option<Counterexample>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    /// Basis element or entry at which the two sides differ.
    pub input: String,
    pub lhs: serde_json::Value,
    pub rhs: serde_json::Value,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn pass(name: impl Into<String>, degrees: [u32; 2], basis_size: usize) -> Self {
        Self { name: name.into(), degrees, basis_size, status: Status::Pass, counterexample: None }
    }

    pub fn fail(name: impl Into<String>, degrees: [u32; 2], basis_size: usize, cx: Counterexample) -> Self {
        Self { name: name.into(), degrees, basis_size, status: Status::Fail, counterexample: Some(cx) }
    }

    /// Renames the report, keeping everything else.
    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "PASS {} (degrees {}..={}, {} basis elements)", self.name, self.degrees[0], self.degrees[1], self.basis_size),
            Some(cx) => write!(f, "FAIL {}: counterexample at {}: lhs = {}, rhs = {}", self.name, cx.input, cx.lhs, cx.rhs),
        }
    }
}

fn describe_basis(e: &MultiIndex, s: Spin) -> String {
    format!("{e}·χ{}", s.symbol())
}

/// Applies `lhs − rhs` to every monomial-times-spinor of degree
/// `0..=max_degree`; the identity passes iff every image vanishes.
pub fn verify_identity(name: &str, lhs: &LinOp, rhs: &LinOp, max_degree: u32) -> IdentityReport {
    verify_identity_range(name, lhs, rhs, 0, max_degree)
}

pub fn verify_identity_range(name: &str, lhs: &LinOp, rhs: &LinOp, min_degree: u32, max_degree: u32) -> IdentityReport {
    let basis: Vec<(MultiIndex, Spin)> = (min_degree..=max_degree).flat_map(spinor_basis).collect();
    let failure = basis.par_iter().find_map_first(|(e, s)| {
        let input = SpinorPoly::basis(*e, *s);
        let l = lhs.apply(&input);
        let r = rhs.apply(&input);
        (l != r).then(|| Counterexample {
            input: describe_basis(e, *s),
            lhs: serde_json::to_value(&l).expect("polynomials serialize"),
            rhs: serde_json::to_value(&r).expect("polynomials serialize"),
        })
    });
    let degrees = [min_degree, max_degree];
    match failure {
        None => IdentityReport::pass(name, degrees, basis.len()),
        Some(cx) => IdentityReport::fail(name, degrees, basis.len(), cx),
    }
}

/// Checks `op(f) = value · f` exactly for a single polynomial.
pub fn verify_eigen(name: &str, op: &LinOp, f: &SpinorPoly, value: &GRational, label: &str) -> IdentityReport {
    let degree = f.max_degree().unwrap_or(0);
    let l = op.apply(f);
    let r = f.scale(value);
    if l == r {
        IdentityReport::pass(name, [degree, degree], 1)
    } else {
        IdentityReport::fail(
            name,
            [degree, degree],
            1,
            Counterexample {
                input: label.to_string(),
                lhs: serde_json::to_value(&l).expect("polynomials serialize"),
                rhs: serde_json::to_value(&r).expect("polynomials serialize"),
            },
        )
    }
}

/// Matrix of `op` from `P_{in}⊗C²` to `P_{out}⊗C²` in the monomial-spinor
/// bases; components of other degrees in the image are dropped.
pub fn degree_matrix(op: &LinOp, in_degree: u32, out_degree: u32) -> Matrix<GRational> {
    let columns: Vec<Vec<GRational>> = spinor_basis(in_degree)
        .par_iter()
        .map(|(e, s)| coordinates(&op.apply(&SpinorPoly::basis(*e, *s)), out_degree))
        .collect();
    let rows = spinor_basis(out_degree).len();
    Matrix::from_columns(rows, &columns)
}

/// `true` if the operator maps degree `d` into itself for every `d ≤ max_degree`.
pub fn preserves_degree(op: &LinOp, max_degree: u32) -> bool {
    (0..=max_degree).all(|d| {
        spinor_basis(d).iter().all(|(e, s)| {
            let image = op.apply(&SpinorPoly::basis(*e, *s));
            image.is_zero() || image.homogeneous_degree() == Some(d)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MultiIndex;

    fn params() -> Params {
        Params::from_ratios([(1, 2), (1, 3), (2, 5)]).unwrap()
    }

    fn c(r: Rational) -> GRational {
        GRational::real(r)
    }

    fn mono(a1: u32, a2: u32, a3: u32, s: Spin) -> SpinorPoly {
        SpinorPoly::basis(MultiIndex::new(a1, a2, a3), s)
    }

    #[test]
    fn dirac_examples() {
        let p = params();
        let d = dirac(&p);
        assert!(d.apply(&SpinorPoly::chi_plus()).is_zero());
        let xchi = x_vec().apply(&SpinorPoly::chi_plus());
        let expected = SpinorPoly::chi_plus().scale(&c(p.mu_sum() * int(2) + int(3)));
        assert_eq!(d.apply(&xchi), expected);
        let f = mono(2, 1, 0, Spin::Down);
        assert_eq!(d.apply(&d.apply(&f)), laplace(&p).apply(&f));
    }

    #[test]
    fn laplace_examples() {
        let p = params();
        let lap = laplace(&p);
        let r2 = SpinorPoly::from_scalar(ScalarPoly::norm_sq(), Spin::Up);
        let expected = p.mu_sum() * int(4) + int(6);
        assert_eq!(lap.apply(&r2), SpinorPoly::chi_plus().scale(&c(expected)));
        assert!(lap.apply(&mono(1, 0, 0, Spin::Up)).is_zero());
        let expected = (int(1) + p.mu1() * int(2)) * int(2);
        assert_eq!(lap.apply(&mono(2, 0, 0, Spin::Up)), SpinorPoly::chi_plus().scale(&c(expected)));
        let report = verify_identity("Δ composed = Δ explicit", &lap, &laplace_explicit(&p), 6);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn laplace_s2_examples() {
        let p = params();
        assert!(laplace_s2(&p).apply(&SpinorPoly::chi_plus()).is_zero());
        let x1 = mono(1, 0, 0, Spin::Up);
        assert_eq!(laplace_s2(&Params::zero()).apply(&x1), x1.scale(&GRational::from_int(-2)));
        assert!(preserves_degree(&laplace_s2(&p), 4));
    }

    #[test]
    fn angular_examples() {
        let p = params();
        let l3 = angular(&p, Axis::X3);
        let x1 = mono(1, 0, 0, Spin::Up);
        let expected = GRational::new(int(0), int(1) + p.mu1() * int(2));
        assert_eq!(l3.apply(&x1), mono(0, 1, 0, Spin::Up).scale(&expected));
        let free = angular(&Params::zero(), Axis::X3);
        assert_eq!(free.apply(&x1), mono(0, 1, 0, Spin::Up).scale(&GRational::i()));
        assert!(l3.apply(&SpinorPoly::chi_minus()).is_zero());
        let f = mono(1, 1, 0, Spin::Up);
        let lhs = commutator(&angular(&p, Axis::X1), &angular(&p, Axis::X2));
        let rhs = (l3 * (LinOp::identity() + LinOp::reflect(Axis::X3).scale_rational(&(p.mu3() * int(2)))))
            .scale(&GRational::i());
        assert_eq!(lhs.apply(&f), rhs.apply(&f));
    }

    #[test]
    fn gamma_examples() {
        let p = params();
        let g = gamma_op(&p);
        for chi in [SpinorPoly::chi_plus(), SpinorPoly::chi_minus()] {
            assert_eq!(g.apply(&chi), chi.scale(&c(p.mu_sum())));
        }
        let report = verify_identity("Γ two forms", &g, &gamma_from_commutator(&p), 4);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn symmetry_and_generator_examples() {
        let p = params();
        let expected = p.mu1() + p.mu2() + rat(1, 2);
        assert_eq!(
            symmetry_j(&p, Axis::X3).apply(&SpinorPoly::chi_plus()),
            SpinorPoly::chi_plus().scale(&c(expected.clone()))
        );
        assert_eq!(involution_z(Axis::X3).apply(&SpinorPoly::chi_plus()), SpinorPoly::chi_plus());
        for chi in [SpinorPoly::chi_plus(), SpinorPoly::chi_minus()] {
            assert_eq!(bi_generator(&p, Axis::X3).apply(&chi), chi.scale(&c(expected.clone())));
        }
    }

    #[test]
    fn casimir_at_degree_zero() {
        let p = params();
        let expected = (p.mu_sum() + int(1)) * (p.mu_sum() + int(1))
            + p.mu1() * p.mu1()
            + p.mu2() * p.mu2()
            + p.mu3() * p.mu3()
            - rat(1, 4);
        assert_eq!(casimir(&p).apply(&SpinorPoly::chi_plus()), SpinorPoly::chi_plus().scale(&c(expected)));
        let zero = Params::zero();
        assert_eq!(casimir(&zero).apply(&SpinorPoly::chi_plus()), SpinorPoly::chi_plus().scale(&c(rat(3, 4))));
    }

    #[test]
    fn verify_identity_examples() {
        let p = params();
        let lhs = anticommutator(&x_vec(), &dirac(&p));
        let rhs = (euler() + LinOp::rational(p.gamma3())).scale_rational(&int(2));
        let ok = verify_identity("{x,D} = 2(E+γ3)", &lhs, &rhs, 5);
        assert!(ok.passed());
        assert_eq!(ok.degrees, [0, 5]);
        assert_eq!(ok.basis_size, 2 * (1 + 3 + 6 + 10 + 15 + 21));

        let sc = verify_identity("{Γ+1, D} = 0", &anticommutator(&gamma_plus_one(&p), &dirac(&p)), &LinOp::rational(int(0)), 5);
        assert!(sc.passed(), "{sc}");

        let bad = (euler() + LinOp::rational(p.gamma3() + int(1))).scale_rational(&int(2));
        let report = verify_identity("{x,D} = 2(E+γ3+1)", &lhs, &bad, 2);
        assert!(!report.passed());
        let cx = report.counterexample.as_ref().unwrap();
        assert_eq!(cx.input, "1·χ+");
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["status"], "fail");
        assert_eq!(json["degrees"], serde_json::json!([0, 2]));
    }

    #[test]
    fn linearity_spot_check() {
        let p = params();
        let g = gamma_op(&p);
        let f = &mono(2, 0, 1, Spin::Up) + &mono(0, 1, 0, Spin::Down);
        let h = mono(1, 1, 1, Spin::Down);
        let a = GRational::new(rat(2, 3), rat(-1, 5));
        let b = GRational::from_int(7);
        let combo = &f.scale(&a) + &h.scale(&b);
        assert_eq!(g.apply(&combo), &g.apply(&f).scale(&a) + &g.apply(&h).scale(&b));
    }

    #[test]
    fn degree_matrix_of_euler_is_diagonal() {
        let m = degree_matrix(&euler(), 3, 3);
        assert!(m.is_diagonal());
        assert!(m.diagonal().iter().all(|v| *v == GRational::from_int(3)));
    }
}
