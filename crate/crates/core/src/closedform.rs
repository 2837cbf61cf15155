//! Jacobi polynomials, the closed-form wavefunctions, their normalized
//! versions and the exact scalar product on the sphere.
//!
//! Every Jacobi polynomial appears homogenized, `(X+Y)^m P_m((X−Y)/(X+Y))`,
//! which is a genuine polynomial in `X` and `Y`. Square roots in the
//! normalization constants are never taken: a normalized wavefunction is a
//! radical-free polynomial together with the exact square of its prefactor.

use std::collections::HashMap;
use std::sync::Mutex;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::ck::Frame;
use crate::exactnum::{factorial, gamma_ratio, int, pochhammer, rat, serialize_rational, sign_pow, GRational, Params, Rational};
use crate::linalg::Matrix;
use crate::poly::{MatrixPoly, MultiIndex, ScalarPoly, Spin, SpinorPoly};

/// Polynomial in one variable, coefficients in ascending degree.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UnivariatePoly {
    coefficients: Vec<Rational>,
}

impl UnivariatePoly {
    pub fn new(mut coefficients: Vec<Rational>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        Self { coefficients }
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coefficients.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }
}

impl Serialize for UnivariatePoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        crate::exactnum::serialize_rationals(&self.coefficients, s)
    }
}

/// Coefficients `c_j` with `P_n^{(α,β)}(x) = Σ_j c_j ((1−x)/2)^j`.
///
/// `(α+1)_n / (α+1)_j` is written as `(α+j+1)_{n−j}`, so degenerate `α`
/// needs no special casing.
pub fn jacobi_coefficients(n: u32, alpha: &Rational, beta: &Rational) -> Vec<Rational> {
    let top = int(n as i64) + alpha + beta + int(1);
    (0..=n)
        .map(|j| {
            let lead = pochhammer(&(alpha + int(j as i64 + 1)), n - j);
            lead * pochhammer(&int(-(n as i64)), j) * pochhammer(&top, j) / (factorial(n) * factorial(j))
        })
        .collect()
}

/// `P_n^{(α,β)}` expanded from its ₂F₁ definition.
pub fn jacobi(n: u32, alpha: &Rational, beta: &Rational) -> UnivariatePoly {
    let mut out = vec![Rational::zero(); n as usize + 1];
    for (j, c) in jacobi_coefficients(n, alpha, beta).iter().enumerate() {
        // ((1−x)/2)^j = 2^{−j} Σ_i C(j,i) (−x)^i
        let scale = c / int(2).pow(j as i32);
        let mut binom = Rational::one();
        for (i, slot) in out.iter_mut().enumerate().take(j + 1) {
            *slot += &scale * &binom * sign_pow(i as i64);
            binom = binom * int((j - i) as i64) / int(i as i64 + 1);
        }
    }
    UnivariatePoly::new(out)
}

/// `(X+Y)^m P_m^{(α,β)}((X−Y)/(X+Y)) = Σ_j c_j Y^j (X+Y)^{m−j}`.
pub fn homogenized_jacobi(m: u32, alpha: &Rational, beta: &Rational, x: &ScalarPoly, y: &ScalarPoly) -> ScalarPoly {
    let sum = x + y;
    jacobi_coefficients(m, alpha, beta)
        .iter()
        .enumerate()
        .fold(ScalarPoly::zero(), |acc, (j, c)| {
            let term = (&y.pow(j as u32) * &sum.pow(m - j as u32)).scale_rational(c);
            &acc + &term
        })
}

/// The same polynomial through
/// `(α+1)_m/m! · X^m ₂F₁(−m, −m−β; α+1; −Y/X)`.
pub fn homogenized_jacobi_hypergeometric(m: u32, alpha: &Rational, beta: &Rational, x: &ScalarPoly, y: &ScalarPoly) -> ScalarPoly {
    let b = -(int(m as i64) + beta);
    (0..=m).fold(ScalarPoly::zero(), |acc, j| {
        let c = pochhammer(&(alpha + int(j as i64 + 1)), m - j) * pochhammer(&int(-(m as i64)), j) * pochhammer(&b, j)
            * sign_pow(j as i64)
            / (factorial(m) * factorial(j));
        &acc + &(&x.pow(m - j) * &y.pow(j)).scale_rational(&c)
    })
}

/// Homogenized Jacobi polynomial of degree `m` in `X, Y`; zero for `m < 0`.
fn hj(m: i64, alpha: &Rational, beta: &Rational, x: &ScalarPoly, y: &ScalarPoly) -> ScalarPoly {
    if m < 0 {
        ScalarPoly::zero()
    } else {
        homogenized_jacobi(m as u32, alpha, beta, x, y)
    }
}

fn scalar(p: ScalarPoly) -> MatrixPoly {
    MatrixPoly::scalar(p)
}

/// Coordinates, Pauli matrices and parameters of a frame, in role order.
struct Roles {
    x: [ScalarPoly; 3],
    sigma: [MatrixPoly; 3],
    mu: [Rational; 3],
}

impl Roles {
    fn new(params: &Params, frame: Frame) -> Self {
        Self {
            x: frame.0.map(ScalarPoly::var),
            sigma: frame.0.map(MatrixPoly::pauli),
            mu: frame.params(params).as_array().clone(),
        }
    }

    fn sigma_x(&self, role: usize) -> MatrixPoly {
        &self.sigma[role] * &scalar(self.x[role].clone())
    }

    /// `σ_1 x_1 + σ_2 x_2` in role labels.
    fn x_tilde(&self) -> MatrixPoly {
        &self.sigma_x(0) + &self.sigma_x(1)
    }

    fn sq(&self, role: usize) -> ScalarPoly {
        self.x[role].pow(2)
    }
}

/// Radical-free bracket of the planar factor: `m_k / (β!/(μ2+1/2)_β)`.
fn planar_bracket(k: u32, r: &Roles) -> MatrixPoly {
    let [m1, m2, _] = &r.mu;
    let half = rat(1, 2);
    let b = (k / 2) as i64;
    let (x1s, x2s) = (r.sq(0), r.sq(1));
    if k.is_multiple_of(2) {
        let main = hj(b, &(m2 - &half), &(m1 - &half), &x1s, &x2s);
        let cross = hj(b - 1, &(m2 + &half), &(m1 + &half), &x1s, &x2s);
        let s21 = &(&r.sigma[1] * &r.sigma[0]) * &scalar(&r.x[0] * &r.x[1]);
        &scalar(main) - &(&s21 * &scalar(cross))
    } else {
        let bq = int(b);
        let main = hj(b, &(m2 - &half), &(m1 + &half), &x1s, &x2s);
        let side = hj(b, &(m2 + &half), &(m1 - &half), &x1s, &x2s);
        let ratio = (&bq + m1 + &half) / (&bq + m2 + &half);
        let s21 = &(&r.sigma[1] * &r.sigma[0]) * &scalar(r.x[1].clone());
        &scalar(&r.x[0] * &main) - &(&s21 * &scalar(side.scale_rational(&ratio)))
    }
}

/// Which lower superscript the even branch of the radial factor uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RadialConvention {
    /// `P_β^{(μ3−1/2, k+μ1+μ2)}`, the one consistent with the CK basis.
    #[default]
    Consistent,
    /// `P_β^{(μ3−1/2, k+μ1+μ2+1)}` as printed for the normalized factor.
    AsPrinted,
}

/// Radical-free bracket of the radial factor: `q_{N−k} / (β!/(μ3+1/2)_β)`.
fn radial_bracket(n: u32, k: u32, r: &Roles, convention: RadialConvention) -> MatrixPoly {
    let [m1, m2, m3] = &r.mu;
    let half = rat(1, 2);
    let d = n - k;
    let b = (d / 2) as i64;
    let g = int(k as i64) + m1 + m2;
    let (planar, axial) = (&r.sq(0) + &r.sq(1), r.sq(2));
    let s3x3 = r.sigma_x(2);
    if d.is_multiple_of(2) {
        let beta_main = match convention {
            RadialConvention::Consistent => g.clone(),
            RadialConvention::AsPrinted => &g + int(1),
        };
        let main = hj(b, &(m3 - &half), &beta_main, &planar, &axial);
        let cross = hj(b - 1, &(m3 + &half), &(&g + int(1)), &planar, &axial);
        &scalar(main) - &(&(&s3x3 * &r.x_tilde()) * &scalar(cross))
    } else {
        let bq = int(b);
        let main = hj(b, &(m3 - &half), &(&g + int(1)), &planar, &axial);
        let side = hj(b, &(m3 + &half), &g, &planar, &axial);
        let ratio = (&g + &bq + int(1)) / (&bq + m3 + &half);
        &(&r.x_tilde() * &scalar(main)) - &(&s3x3 * &scalar(side.scale_rational(&ratio)))
    }
}

/// `m_k(x2, x1)` as a Clifford-valued polynomial.
pub fn closed_m(k: u32, params: &Params) -> MatrixPoly {
    let r = Roles::new(params, Frame::STANDARD);
    let b = k / 2;
    let pref = factorial(b) / pochhammer(&(params.mu2() + rat(1, 2)), b);
    planar_bracket(k, &r).scale_rational(&pref)
}

/// `q_{N−k}(x3, x̃)` as a Clifford-valued polynomial.
pub fn closed_q(n: u32, k: u32, params: &Params) -> MatrixPoly {
    assert!(k <= n, "k = {k} exceeds N = {n}");
    let r = Roles::new(params, Frame::STANDARD);
    let b = (n - k) / 2;
    let pref = factorial(b) / pochhammer(&(params.mu3() + rat(1, 2)), b);
    radial_bracket(n, k, &r, RadialConvention::Consistent).scale_rational(&pref)
}

/// `q_{N−k} m_k χ`
pub fn closed_psi(n: u32, k: u32, spin: Spin, params: &Params) -> SpinorPoly {
    (&closed_q(n, k, params) * &closed_m(k, params)).apply(&SpinorPoly::chi(spin))
}

/// Normalized moments `∫ x1^{2a} x2^{2b} x3^{2c} h dσ / ∫ h dσ`, memoized.
pub struct MomentTable {
    params: Params,
    denominator_shift: Rational,
    cache: Mutex<HashMap<[u32; 3], Rational>>,
}

impl MomentTable {
    pub fn new(params: &Params) -> Self {
        Self::with_shift(params, Rational::zero())
    }

    /// Moments with `γ3` replaced by `γ3 + shift` in the denominator. Only
    /// `shift = 0` is the sphere measure.
    pub fn with_shift(params: &Params, shift: Rational) -> Self {
        Self { params: params.clone(), denominator_shift: shift, cache: Mutex::new(HashMap::new()) }
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn moment(&self, a: u32, b: u32, c: u32) -> Rational {
        if let Some(v) = self.cache.lock().expect("moment cache poisoned").get(&[a, b, c]) {
            return v.clone();
        }
        let p = &self.params;
        let half = rat(1, 2);
        let v = pochhammer(&(p.mu1() + &half), a) * pochhammer(&(p.mu2() + &half), b) * pochhammer(&(p.mu3() + &half), c)
            / pochhammer(&(p.gamma3() + &self.denominator_shift), a + b + c);
        self.cache.lock().expect("moment cache poisoned").insert([a, b, c], v.clone());
        v
    }

    /// Moment of an arbitrary monomial; zero if any exponent is odd.
    pub fn monomial(&self, e: &MultiIndex) -> Rational {
        let [a, b, c] = e.0;
        if a % 2 == 1 || b % 2 == 1 || c % 2 == 1 {
            Rational::zero()
        } else {
            self.moment(a / 2, b / 2, c / 2)
        }
    }

    /// `⟨f, g⟩ = ∫ f†g h dσ`, conjugate-linear in `f`.
    pub fn inner_product(&self, f: &SpinorPoly, g: &SpinorPoly) -> GRational {
        let mut acc = GRational::zero();
        for spin in Spin::BOTH {
            for (ef, cf) in f.component(spin).terms() {
                let cf = cf.conj();
                for (eg, cg) in g.component(spin).terms() {
                    let e = MultiIndex([ef.0[0] + eg.0[0], ef.0[1] + eg.0[1], ef.0[2] + eg.0[2]]);
                    let m = self.monomial(&e);
                    if !m.is_zero() {
                        acc += &(&cf * cg).scale(&m);
                    }
                }
            }
        }
        acc
    }
}

pub fn moment(a: u32, b: u32, c: u32, params: &Params) -> Rational {
    MomentTable::new(params).moment(a, b, c)
}

pub fn inner_product(f: &SpinorPoly, g: &SpinorPoly, params: &Params) -> GRational {
    MomentTable::new(params).inner_product(f, g)
}

#[derive(Clone, Debug, Serialize)]
pub struct NormalizedWavefunction {
    #[serde(rename = "N")]
    pub n: u32,
    pub k: u32,
    pub sign: Spin,
    pub poly: SpinorPoly,
    /// Square of the prefactor, relative to the unit-mass measure: the
    /// normalized wavefunction is `sqrt(squared_norm) · poly`.
    #[serde(serialize_with = "serialize_rational")]
    pub squared_norm: Rational,
}

/// `Γ(a)/Γ(b)` for `a − b` an integer of either sign.
fn gamma_quotient(a: &Rational, b: &Rational) -> Rational {
    if a >= b {
        gamma_ratio(a, b).expect("integer gamma difference")
    } else {
        gamma_ratio(b, a).expect("integer gamma difference").recip()
    }
}

/// Squared prefactor of `Θ_{N,k} Φ_k` for the parameters in role order,
/// including the total mass `2Γ(μ1+½)Γ(μ2+½)Γ(μ3+½)/Γ(μ1+μ2+μ3+3/2)` of the
/// weight on the sphere, so that the result multiplies unit-mass Gram values.
fn squared_prefactor(n: u32, k: u32, mu: &[Rational; 3]) -> Rational {
    let [m1, m2, m3] = mu;
    let half = rat(1, 2);
    let b = int((k / 2) as i64);
    let bp = int(((n - k) / 2) as i64);
    let kq = int(k as i64);
    let total = m1 + m2 + m3;
    let mut factor = factorial(k / 2) * factorial((n - k) / 2);
    factor *= gamma_quotient(&(m1 + &half), &(&b + m1 + &half));
    factor *= gamma_quotient(&(m2 + &half), &(&b + m2 + &half));
    factor *= gamma_quotient(&(m3 + &half), &(&bp + m3 + &half));
    factor *= gamma_quotient(&(&b + m1 + m2 + int(1)), &(&bp + &kq + m1 + m2 + int(1)));
    factor *= gamma_quotient(&(&bp + &kq + &total + rat(3, 2)), &(&total + rat(3, 2)));
    if k % 2 == 1 {
        factor *= (&b + m2 + &half) / (&b + m1 + &half);
    }
    if (n - k) % 2 == 1 {
        factor *= (&bp + m3 + &half) / (&bp + &kq + m1 + m2 + int(1));
    }
    factor
}

pub fn normalized_in_frame(n: u32, k: u32, sign: Spin, params: &Params, frame: Frame, convention: RadialConvention) -> NormalizedWavefunction {
    assert!(k <= n, "k = {k} exceeds N = {n}");
    let r = Roles::new(params, frame);
    let matrix = &radial_bracket(n, k, &r, convention) * &planar_bracket(k, &r);
    NormalizedWavefunction {
        n,
        k,
        sign,
        poly: matrix.apply(&SpinorPoly::chi(sign)),
        squared_norm: squared_prefactor(n, k, &r.mu),
    }
}

/// `Ψ_{k,±}^{(N)}`
pub fn normalized_wavefunction(n: u32, k: u32, sign: Spin, params: &Params) -> NormalizedWavefunction {
    normalized_in_frame(n, k, sign, params, Frame::STANDARD, RadialConvention::Consistent)
}

/// All `Ψ_{k,±}^{(N)}`, ordered by `k` with `+` first.
pub fn psi_wavefunctions(n: u32, params: &Params) -> Vec<NormalizedWavefunction> {
    (0..=n).flat_map(|k| Spin::BOTH.map(|s| normalized_wavefunction(n, k, s, params))).collect()
}

/// `Υ_{s,±}^{(N)}`: the same construction with coordinates, Pauli matrices
/// and μ relabelled cyclically, the spinors `χ±` left as they are.
pub fn upsilon_basis(n: u32, params: &Params) -> Vec<NormalizedWavefunction> {
    (0..=n)
        .flat_map(|s| Spin::BOTH.map(|q| normalized_in_frame(n, s, q, params, Frame::CYCLIC, RadialConvention::Consistent)))
        .collect()
}

/// `Z3` eigenvalue sign `q (−1)^{N−s}` of an element of either basis.
pub fn sector(w: &NormalizedWavefunction) -> i64 {
    w.sign.sign() * if (w.n - w.k).is_multiple_of(2) { 1 } else { -1 }
}

#[derive(Clone, Debug, Serialize)]
pub struct OverlapData {
    #[serde(rename = "N")]
    pub n: u32,
    pub mu: Params,
    /// Row labels `(s, q)` of the `Υ` basis.
    pub rows: Vec<(u32, Spin)>,
    /// Column labels `(k, r)` of the `Ψ` basis.
    pub columns: Vec<(u32, Spin)>,
    /// `⟨Υ_{s,q}, Ψ_{k,r}⟩` on the radical-free representatives.
    #[serde(serialize_with = "serialize_matrix")]
    pub overlaps: Matrix<GRational>,
    pub gram_psi: Vec<GRational>,
    pub gram_upsilon: Vec<GRational>,
}

fn serialize_matrix<S: serde::Serializer>(m: &Matrix<GRational>, s: S) -> Result<S::Ok, S::Error> {
    let rows: Vec<Vec<&GRational>> = (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j)).collect()).collect();
    rows.serialize(s)
}

pub fn overlap_matrix(n: u32, params: &Params) -> OverlapData {
    let table = MomentTable::new(params);
    let psi = psi_wavefunctions(n, params);
    let ups = upsilon_basis(n, params);
    let overlaps = Matrix::from_fn(ups.len(), psi.len(), |i, j| table.inner_product(&ups[i].poly, &psi[j].poly));
    OverlapData {
        n,
        mu: params.clone(),
        rows: ups.iter().map(|w| (w.k, w.sign)).collect(),
        columns: psi.iter().map(|w| (w.k, w.sign)).collect(),
        overlaps,
        gram_psi: psi.iter().map(|w| table.inner_product(&w.poly, &w.poly)).collect(),
        gram_upsilon: ups.iter().map(|w| table.inner_product(&w.poly, &w.poly)).collect(),
    }
}

impl OverlapData {
    /// `Σ_s ⟨Ψ_k,Υ_s⟩⟨Υ_s,Ψ_k'⟩/⟨Υ_s,Υ_s⟩` for every pair `(k, k')`.
    pub fn sum_rule(&self) -> Matrix<GRational> {
        let w = &self.overlaps;
        Matrix::from_fn(w.cols(), w.cols(), |a, b| {
            (0..w.rows())
                .map(|s| &(&w.get(s, a).conj() * w.get(s, b)) / &self.gram_upsilon[s])
                .sum()
        })
    }

    /// First `(s, k)` whose overlap couples different `Z3` sectors.
    pub fn sector_leak(&self) -> Option<(usize, usize)> {
        let value = |(k, spin): (u32, Spin)| spin.sign() * if (self.n - k).is_multiple_of(2) { 1 } else { -1 };
        (0..self.rows.len())
            .flat_map(|s| (0..self.columns.len()).map(move |k| (s, k)))
            .find(|&(s, k)| value(self.rows[s]) != value(self.columns[k]) && !self.overlaps.get(s, k).is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ck::{psi, psi_in_frame};
    use crate::operators::{bi_generator, gamma_op, gamma_plus_one, involution_z};
    use crate::poly::Axis;

    fn params() -> Params {
        Params::from_ratios([(1, 2), (1, 3), (2, 5)]).unwrap()
    }

    #[test]
    fn jacobi_examples() {
        let (a, b) = (rat(2, 3), rat(-1, 4));
        assert_eq!(jacobi(0, &a, &b), UnivariatePoly::new(vec![int(1)]));
        // (α+1) − (α+β+2)(1−x)/2
        let c = &a + &b + int(2);
        let expected = UnivariatePoly::new(vec![&a + int(1) - &c / int(2), &c / int(2)]);
        assert_eq!(jacobi(1, &a, &b), expected);
        assert_eq!(jacobi(1, &int(0), &int(0)), UnivariatePoly::new(vec![int(0), int(1)]));
        // Legendre P_2 = (3x² − 1)/2
        assert_eq!(jacobi(2, &int(0), &int(0)), UnivariatePoly::new(vec![rat(-1, 2), int(0), rat(3, 2)]));
        // Endpoint value P_n(1) = (α+1)_n / n!
        let p = jacobi(4, &a, &b);
        assert_eq!(p.eval(&int(1)), pochhammer(&(&a + int(1)), 4) / factorial(4));
    }

    #[test]
    fn homogenization_routes_agree() {
        let (x, y) = (ScalarPoly::var(Axis::X1), ScalarPoly::var(Axis::X2));
        for m in 0..=4 {
            for (a, b) in [(rat(1, 3), rat(5, 2)), (rat(-1, 2), rat(0, 1)), (rat(7, 5), rat(-1, 2))] {
                assert_eq!(homogenized_jacobi(m, &a, &b, &x, &y), homogenized_jacobi_hypergeometric(m, &a, &b, &x, &y));
            }
        }
    }

    #[test]
    fn closed_m_examples() {
        let p = params();
        assert_eq!(closed_m(0, &p), MatrixPoly::identity());
        let c = (p.mu1() + rat(1, 2)) / (p.mu2() + rat(1, 2));
        let s21x2 = &(&MatrixPoly::pauli(Axis::X2) * &MatrixPoly::pauli(Axis::X1)) * &MatrixPoly::scalar(ScalarPoly::var(Axis::X2));
        let expected = &MatrixPoly::scalar(ScalarPoly::var(Axis::X1)) - &s21x2.scale_rational(&c);
        assert_eq!(closed_m(1, &p), expected);
        for k in 0..=5 {
            for spin in Spin::BOTH {
                let seed = SpinorPoly::from_scalar(ScalarPoly::var(Axis::X1).pow(k), spin);
                let ck = crate::ck::ck_extend_x2(&seed, &p).unwrap();
                assert_eq!(closed_m(k, &p).apply(&SpinorPoly::chi(spin)), ck, "k = {k}");
            }
        }
    }

    #[test]
    fn closed_q_examples() {
        let p = params();
        for k in 0..3 {
            assert_eq!(closed_q(k, k, &p), MatrixPoly::identity());
            let x_tilde = &MatrixPoly::pauli_var(Axis::X1) + &MatrixPoly::pauli_var(Axis::X2);
            let c = (int(k as i64) + p.mu1() + p.mu2() + int(1)) / (p.mu3() + rat(1, 2));
            assert_eq!(closed_q(k + 1, k, &p), &x_tilde - &MatrixPoly::pauli_var(Axis::X3).scale_rational(&c));
        }
    }

    #[test]
    fn closed_psi_matches_ck_basis() {
        let p = params();
        for n in 0..=4 {
            for k in 0..=n {
                for spin in Spin::BOTH {
                    assert_eq!(closed_psi(n, k, spin, &p), psi(n, k, spin, &p), "N = {n}, k = {k}");
                }
            }
        }
    }

    #[test]
    fn printed_even_superscript_breaks_the_match() {
        let p = params();
        let printed = normalized_in_frame(2, 0, Spin::Up, &p, Frame::STANDARD, RadialConvention::AsPrinted);
        let consistent = normalized_wavefunction(2, 0, Spin::Up, &p);
        let d = crate::operators::dirac(&p);
        assert!(d.apply(&consistent.poly).is_zero());
        assert!(!d.apply(&printed.poly).is_zero());
    }

    #[test]
    fn moment_examples() {
        assert_eq!(moment(0, 0, 0, &params()), int(1));
        assert_eq!(moment(1, 0, 0, &Params::zero()), rat(1, 3));
        let half = Params::from_ratios([(1, 2), (1, 2), (1, 2)]).unwrap();
        assert_eq!(moment(1, 1, 0, &half), rat(1, 12));
        let table = MomentTable::new(&params());
        assert!(table.monomial(&MultiIndex::new(1, 2, 0)).is_zero());
    }

    #[test]
    fn inner_product_examples() {
        let p = params();
        let (up, down) = (SpinorPoly::chi_plus(), SpinorPoly::chi_minus());
        assert_eq!(inner_product(&up, &up, &p), GRational::one());
        assert!(inner_product(&up, &down, &p).is_zero());
        assert!(inner_product(&psi(1, 0, Spin::Up, &p), &psi(1, 1, Spin::Up, &p), &p).is_zero());
        let f = up.scale(&GRational::i());
        assert_eq!(inner_product(&f, &up, &p), -GRational::i());
    }

    #[test]
    fn normalization_examples() {
        let p = params();
        let w0 = normalized_wavefunction(0, 0, Spin::Up, &p);
        assert_eq!(w0.poly, SpinorPoly::chi_plus());
        let table = MomentTable::new(&p);
        assert_eq!(table.inner_product(&w0.poly, &w0.poly).scale(&w0.squared_norm), GRational::one());

        let zero = Params::zero();
        let t0 = MomentTable::new(&zero);
        let a = normalized_wavefunction(1, 1, Spin::Up, &zero);
        let b = normalized_wavefunction(1, 0, Spin::Up, &zero);
        // At μ = 0, Ψ_{1,+}^{(1)} is the classical (x1 + i x2) χ+; the raw
        // diagonals differ, the normalized ones agree.
        let norm = |w: &NormalizedWavefunction| t0.inner_product(&w.poly, &w.poly).scale(&w.squared_norm);
        assert_eq!(norm(&a), norm(&b));
        assert_eq!(a.poly, &SpinorPoly::basis(MultiIndex::new(1, 0, 0), Spin::Up) + &SpinorPoly::basis(MultiIndex::new(0, 1, 0), Spin::Up).scale(&GRational::i()));
    }

    #[test]
    fn gram_matrix_is_diagonal_with_unit_norms() {
        let p = params();
        let table = MomentTable::new(&p);
        let all: Vec<NormalizedWavefunction> = (0..=3).flat_map(|n| psi_wavefunctions(n, &p)).collect();
        for (i, a) in all.iter().enumerate() {
            for (j, b) in all.iter().enumerate() {
                let v = table.inner_product(&a.poly, &b.poly);
                if i == j {
                    assert_eq!(v.scale(&a.squared_norm), GRational::one(), "N = {}, k = {}", a.n, a.k);
                } else {
                    assert!(v.is_zero(), "({}, {}) vs ({}, {})", a.n, a.k, b.n, b.k);
                }
            }
        }
    }

    #[test]
    fn upsilon_eigenvalues() {
        let p = params();
        let k1 = bi_generator(&p, Axis::X1);
        let z3 = involution_z(Axis::X3);
        let shifted = gamma_plus_one(&p);
        for n in 0..=2 {
            let energy = GRational::real(int(n as i64) + p.mu_sum() + int(1));
            for w in upsilon_basis(n, &p) {
                let lambda = sign_pow(w.k as i64) * (int(w.k as i64) + p.mu2() + p.mu3() + rat(1, 2));
                assert_eq!(shifted.apply(&w.poly), w.poly.scale(&energy));
                assert_eq!(k1.apply(&w.poly), w.poly.scale(&GRational::real(lambda)));
                assert_eq!(z3.apply(&w.poly), w.poly.scale(&GRational::from_int(sector(&w))));
            }
        }
        let zero = Params::zero();
        let values: Vec<Rational> = (0..=1).map(|s| sign_pow(s) * (int(s) + rat(1, 2))).collect();
        assert_eq!(values, vec![rat(1, 2), rat(-3, 2)]);
        let w = upsilon_basis(0, &zero);
        assert_eq!(w[0].poly, SpinorPoly::chi_plus());
    }

    #[test]
    fn upsilon_agrees_with_cyclic_ck() {
        let p = params();
        let c = p.cyclic();
        for w in upsilon_basis(3, &p) {
            let (b, bp) = (w.k / 2, (3 - w.k) / 2);
            let pref = factorial(b) / pochhammer(&(c.mu2() + rat(1, 2)), b) * factorial(bp)
                / pochhammer(&(c.mu3() + rat(1, 2)), bp);
            let ck = psi_in_frame(3, w.k, w.sign, &p, Frame::CYCLIC);
            assert_eq!(w.poly.scale_rational(&pref), ck, "s = {}", w.k);
        }
    }

    #[test]
    fn overlap_examples() {
        let p = params();
        let o0 = overlap_matrix(0, &p);
        assert!(o0.overlaps.is_diagonal());
        for n in 0..=2 {
            let data = overlap_matrix(n, &p);
            assert_eq!(data.sector_leak(), None);
            assert_eq!(data.sum_rule(), Matrix::from_diagonal(&data.gram_psi));
        }
    }

    #[test]
    fn self_adjointness_spot_check() {
        let p = params();
        let table = MomentTable::new(&p);
        let f = &SpinorPoly::basis(MultiIndex::new(1, 1, 0), Spin::Up) + &SpinorPoly::basis(MultiIndex::new(0, 0, 2), Spin::Down);
        let g = &SpinorPoly::basis(MultiIndex::new(2, 0, 0), Spin::Down) + &SpinorPoly::basis(MultiIndex::new(0, 1, 1), Spin::Up).scale(&GRational::i());
        for op in [gamma_op(&p), bi_generator(&p, Axis::X1), bi_generator(&p, Axis::X2), bi_generator(&p, Axis::X3)] {
            assert_eq!(table.inner_product(&op.apply(&f), &g), table.inner_product(&f, &op.apply(&g)));
        }
    }
}
