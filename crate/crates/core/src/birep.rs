//! The `(N+1)`-dimensional Bannai–Ito representation built with ladder
//! operators, and its comparison with the action of `K1` on the monogenic
//! basis.
//!
//! `K1` is kept in a rational, diagonally similar form: superdiagonal `A_k`,
//! subdiagonal `C_{k+1}`. The symmetric form has off-diagonal entries
//! `U_k = sqrt(A_{k−1} C_k)`, so only `U_k²` is stored.

use num_traits::{One, Signed, Zero};
use serde::Serialize;
use serde_json::json;

use crate::ck::monogenic_basis;
use crate::closedform::UnivariatePoly;
use crate::exactnum::{format_rational, int, rat, serialize_rational, serialize_rationals, sign_pow, GRational, Params, Rational};
use crate::linalg::{anticommutator, Matrix};
use crate::operators::{bi_generator, casimir, Counterexample, IdentityReport};
use crate::poly::{coordinates, spinor_basis, Axis, Spin, SpinorPoly};

/// `μ_N = (−1)^N (N + μ1 + μ2 + μ3 + 1)`
pub fn mu_n(n: u32, params: &Params) -> Rational {
    sign_pow(n as i64) * (int(n as i64) + params.mu_sum() + int(1))
}

/// Structure constants `[ω1, ω2, ω3]`.
pub fn omegas(n: u32, params: &Params) -> [Rational; 3] {
    let m = mu_n(n, params);
    let (m1, m2, m3) = (params.mu1(), params.mu2(), params.mu3());
    let two = int(2);
    [
        &two * m2 * m3 + &two * m1 * &m,
        &two * m3 * m1 + &two * m2 * &m,
        &two * m1 * m2 + &two * m3 * &m,
    ]
}

/// `q_N = (N + μ1 + μ2 + μ3 + 1)² + μ1² + μ2² + μ3² − 1/4`
pub fn casimir_value(n: u32, params: &Params) -> Rational {
    let e = int(n as i64) + params.mu_sum() + int(1);
    let squares: Rational = params.as_array().iter().map(|m| m * m).sum();
    &e * &e + squares - rat(1, 4)
}

/// `λ_k = (−1)^k (k + μ1 + μ2 + 1/2)`
pub fn lambda(k: u32, params: &Params) -> Rational {
    sign_pow(k as i64) * (int(k as i64) + params.mu1() + params.mu2() + rat(1, 2))
}

pub fn coefficient_a(n: u32, k: u32, params: &Params) -> Rational {
    let (m1, m2, m3) = (params.mu1(), params.mu2(), params.mu3());
    let m = mu_n(n, params);
    let kq = int(k as i64);
    let den = int(2) * (&kq + m1 + m2 + int(1));
    if k.is_multiple_of(2) {
        (&kq + int(2) * m2 + int(1)) * (&kq + m1 + m2 + m3 - &m + int(1)) / den
    } else {
        (&kq + int(2) * m1 + int(2) * m2 + int(1)) * (&kq + m1 + m2 + m3 + &m + int(1)) / den
    }
}

/// `C_k`; `C_0 = 0` through its explicit factor `k`.
pub fn coefficient_c(n: u32, k: u32, params: &Params) -> Rational {
    let (m1, m2, m3) = (params.mu1(), params.mu2(), params.mu3());
    let m = mu_n(n, params);
    let kq = int(k as i64);
    if k == 0 {
        return Rational::zero();
    }
    let den = int(2) * (&kq + m1 + m2);
    if k.is_multiple_of(2) {
        -(&kq * (&kq + m1 + m2 - m3 - &m)) / den
    } else {
        -((&kq + int(2) * m1) * (&kq + m1 + m2 - m3 + &m)) / den
    }
}

/// `V_k = μ2 + μ3 + 1/2 − A_k − C_k`
pub fn coefficient_v(n: u32, k: u32, params: &Params) -> Rational {
    params.mu2() + params.mu3() + rat(1, 2) - coefficient_a(n, k, params) - coefficient_c(n, k, params)
}

#[derive(Clone, Debug, Serialize)]
pub struct LadderData {
    #[serde(serialize_with = "serialize_rationals")]
    pub rho: Vec<Rational>,
    #[serde(serialize_with = "serialize_rationals")]
    pub sigma: Vec<Rational>,
}

/// `ρ_k^{(N)}` and `σ_k^{(N)}` for `k = 0..=N+1`.
pub fn ladder_norms(n: u32, params: &Params) -> LadderData {
    let (m1, m2, m3) = (params.mu1(), params.mu2(), params.mu3());
    let m = mu_n(n, params);
    let two = int(2);
    let rho = (0..=n + 1)
        .map(|k| {
            let k = int(k as i64);
            -(&k * (&k + &two * m1 + &two * m2) * (&k + m1 + m2 + m3 + &m) * (&k + m1 + m2 - m3 - &m))
        })
        .collect();
    let sigma = (0..=n + 1)
        .map(|k| {
            let k = int(k as i64);
            -((&k + &two * m1) * (&k + &two * m2) * (&k + m1 + m2 - m3 + &m) * (&k + m1 + m2 + m3 - &m))
        })
        .collect();
    LadderData { rho, sigma }
}

#[derive(Clone, Debug)]
pub struct RepMatrices {
    pub n: u32,
    pub params: Params,
    pub mu_n: Rational,
    pub k3: Matrix<Rational>,
    /// `(V_k, U_k²)` of the symmetric realization; `U_0² = 0`.
    pub k1_sym: Vec<(Rational, Rational)>,
    pub k1_similar: Matrix<Rational>,
    pub k2: Matrix<Rational>,
    pub a: Vec<Rational>,
    pub c: Vec<Rational>,
    pub v: Vec<Rational>,
}

pub fn rep_matrices(n: u32, params: &Params) -> RepMatrices {
    let dim = n as usize + 1;
    let a: Vec<Rational> = (0..=n).map(|k| coefficient_a(n, k, params)).collect();
    let c: Vec<Rational> = (0..=n).map(|k| coefficient_c(n, k, params)).collect();
    let v: Vec<Rational> = (0..=n).map(|k| coefficient_v(n, k, params)).collect();
    let lambdas: Vec<Rational> = (0..=n).map(|k| lambda(k, params)).collect();
    let k3 = Matrix::from_diagonal(&lambdas);
    let k1 = Matrix::from_fn(dim, dim, |i, j| {
        if i == j {
            v[i].clone()
        } else if j == i + 1 {
            a[i].clone()
        } else if i == j + 1 {
            c[i].clone()
        } else {
            Rational::zero()
        }
    });
    let omega = omegas(n, params);
    let k2 = anticommutator(&k3, &k1).shift(&-omega[1].clone());
    let k1_sym = (0..dim)
        .map(|k| {
            let u2 = if k == 0 { Rational::zero() } else { &a[k - 1] * &c[k] };
            (v[k].clone(), u2)
        })
        .collect();
    RepMatrices { n, params: params.clone(), mu_n: mu_n(n, params), k3, k1_sym, k1_similar: k1, k2, a, c, v }
}

impl RepMatrices {
    /// `K+ = (K1 + K2)(K3 − 1/2) − (ω1 + ω2)/2`
    pub fn k_plus(&self) -> Matrix<Rational> {
        let omega = omegas(self.n, &self.params);
        let sum = &self.k1_similar + &self.k2;
        (&sum * &self.k3.shift(&-rat(1, 2))).shift(&-((&omega[0] + &omega[1]) / int(2)))
    }

    /// `K− = (K1 − K2)(K3 + 1/2) + (ω1 − ω2)/2`
    pub fn k_minus(&self) -> Matrix<Rational> {
        let omega = omegas(self.n, &self.params);
        let diff = &self.k1_similar - &self.k2;
        (&diff * &self.k3.shift(&rat(1, 2))).shift(&((&omega[0] - &omega[1]) / int(2)))
    }
}

fn rational_entry(m: &Matrix<Rational>, i: usize, j: usize) -> String {
    format_rational(m.get(i, j))
}

fn matrix_mismatch(name: &str, n: u32, lhs: &Matrix<Rational>, rhs: &Matrix<Rational>) -> Option<IdentityReport> {
    lhs.first_difference(rhs).map(|(i, j)| {
        IdentityReport::fail(
            name,
            [n, n],
            lhs.rows(),
            Counterexample {
                input: format!("entry ({i}, {j})"),
                lhs: json!(rational_entry(lhs, i, j)),
                rhs: json!(rational_entry(rhs, i, j)),
            },
        )
    })
}

fn scalar_failure(name: &str, n: u32, dim: usize, input: String, lhs: &Rational, rhs: &str) -> IdentityReport {
    IdentityReport::fail(name, [n, n], dim, Counterexample { input, lhs: json!(format_rational(lhs)), rhs: json!(rhs) })
}

/// Checks the anticommutation relations, the Casimir value, truncation,
/// positivity of `A_{k−1} C_k` and irreducibility. `omega3_shift` is added
/// to `ω3` in the `{K1, K2}` relation; it is zero except in mutation runs.
pub fn verify_rep_with(n: u32, params: &Params, omega3_shift: &Rational) -> IdentityReport {
    let name = format!("Bannai–Ito representation N={n}");
    let r = rep_matrices(n, params);
    let dim = n as usize + 1;
    let mut omega = omegas(n, params);
    omega[2] += omega3_shift;
    let (k1, k2, k3) = (&r.k1_similar, &r.k2, &r.k3);
    let relations = [
        ("{K1,K2} = K3 + ω3", anticommutator(k1, k2), k3.shift(&omega[2])),
        ("{K2,K3} = K1 + ω1", anticommutator(k2, k3), k1.shift(&omega[0])),
        ("{K3,K1} = K2 + ω2", anticommutator(k3, k1), k2.shift(&omega[1])),
        (
            "K1² + K2² + K3² = q_N",
            &(&(k1 * k1) + &(k2 * k2)) + &(k3 * k3),
            Matrix::identity(dim).scale(&casimir_value(n, params)),
        ),
    ];
    for (label, lhs, rhs) in &relations {
        if let Some(report) = matrix_mismatch(&format!("{name}: {label}"), n, lhs, rhs) {
            return report;
        }
    }
    if !r.a[n as usize].is_zero() {
        return scalar_failure(&format!("{name}: A_N = 0"), n, dim, "A_N".into(), &r.a[n as usize], "0/1");
    }
    if !r.c[0].is_zero() {
        return scalar_failure(&format!("{name}: C_0 = 0"), n, dim, "C_0".into(), &r.c[0], "0/1");
    }
    for (k, (_, u2)) in r.k1_sym.iter().enumerate().skip(1) {
        if !u2.is_positive() {
            return scalar_failure(&format!("{name}: A_(k-1) C_k > 0"), n, dim, format!("k = {k}"), u2, "> 0");
        }
    }
    let ladder = ladder_norms(n, params);
    for k in 1..=n as usize {
        for (label, value) in [("rho", &ladder.rho[k]), ("sigma", &ladder.sigma[k])] {
            if !value.is_positive() {
                return scalar_failure(&format!("{name}: {label}_k > 0"), n, dim, format!("k = {k}"), value, "> 0");
            }
        }
    }
    IdentityReport::pass(name, [n, n], dim)
}

pub fn verify_rep(n: u32, params: &Params) -> IdentityReport {
    verify_rep_with(n, params, &Rational::zero())
}

/// `−K±²`, which is diagonal with entries `‖K±|N,k⟩‖²`.
pub fn ladder_square_norms(rep: &RepMatrices) -> (Matrix<Rational>, Matrix<Rational>) {
    let kp = rep.k_plus();
    let km = rep.k_minus();
    ((&kp * &kp).scale(&-Rational::one()), (&km * &km).scale(&-Rational::one()))
}

/// `(λ−1/2)²(q − λ² + λ + ω3) − (ω1+ω2)²/4`, the value of `K+†K+` on a
/// `K3` eigenvector.
pub fn kp_norm_polynomial(n: u32, params: &Params, l: &Rational) -> Rational {
    let [w1, w2, w3] = omegas(n, params);
    let q = casimir_value(n, params);
    let s = l - rat(1, 2);
    &s * &s * (q - l * l + l + w3) - (&w1 + &w2) * (&w1 + &w2) / int(4)
}

/// `(λ+1/2)²(q − λ² − λ − ω3) − (ω1−ω2)²/4`, the value of `K−†K−`.
pub fn km_norm_polynomial(n: u32, params: &Params, l: &Rational) -> Rational {
    let [w1, w2, w3] = omegas(n, params);
    let q = casimir_value(n, params);
    let s = l + rat(1, 2);
    &s * &s * (q - l * l - l - w3) - (&w1 - &w2) * (&w1 - &w2) / int(4)
}

/// Factorized form of the `K+` positivity condition.
pub fn kp_factorized(n: u32, params: &Params, l: &Rational) -> Rational {
    let (m1, m2, m3) = (params.mu1(), params.mu2(), params.mu3());
    let m = mu_n(n, params);
    let h = rat(1, 2);
    -((m1 + m2 + &h - l) * (&m + m3 + &h - l) * (l + m1 + m2 - &h) * (l + &m + m3 - &h))
}

/// Factorized form of the `K−` positivity condition.
pub fn km_factorized(n: u32, params: &Params, l: &Rational) -> Rational {
    let (m1, m2, m3) = (params.mu1(), params.mu2(), params.mu3());
    let m = mu_n(n, params);
    let h = rat(1, 2);
    -((m1 - m2 - &h - l) * (m3 - &m - &h - l) * (l + m1 - m2 + &h) * (l + m3 - &m + &h))
}

/// Whether `λ` lies in both admissibility windows for `K±`.
pub fn admissible(n: u32, params: &Params, l: &Rational) -> bool {
    let (m1, m2, m3) = (params.mu1(), params.mu2(), params.mu3());
    let nq = int(n as i64);
    let sum = m1 + m2;
    let wide = &nq + &sum + int(2) * m3 + int(1);
    let narrow = &nq + &sum + int(1);
    let (upper_plus, upper_minus) = if n.is_multiple_of(2) { (&wide, &narrow) } else { (&narrow, &wide) };
    let a = (l - rat(1, 2)).abs();
    let b = (l + rat(1, 2)).abs();
    sum <= a && &a <= upper_plus && (m1 - m2).abs() <= b && &b <= upper_minus
}

/// Follows the chain `|0⟩, K−|0⟩, K+K−|0⟩, …` from a trial `λ0` and returns
/// the first obstruction to an `(N+1)`-dimensional unitary representation:
/// `K+|0⟩ ≠ 0`, a negative norm, a vanishing norm before step `N`, or a
/// chain that fails to terminate at step `N`.
pub fn lambda0_obstruction(n: u32, params: &Params, lambda0: &Rational) -> Option<String> {
    let kp0 = kp_norm_polynomial(n, params, lambda0);
    if !kp0.is_zero() {
        return Some(format!("‖K+|0⟩‖² = {} ≠ 0, so |0⟩ is not an end of the chain", format_rational(&kp0)));
    }
    let mut l = lambda0.clone();
    for step in 0..=n {
        let (norm, next) = if step % 2 == 0 {
            (km_norm_polynomial(n, params, &l), -&l - int(1))
        } else {
            (kp_norm_polynomial(n, params, &l), -&l + int(1))
        };
        if norm.is_negative() {
            return Some(format!("negative squared norm {} at step {step}", format_rational(&norm)));
        }
        if step < n && norm.is_zero() {
            return Some(format!("chain terminates early at step {step}"));
        }
        if step == n && !norm.is_zero() {
            return Some(format!("chain does not terminate at step {n} (norm {})", format_rational(&norm)));
        }
        l = next;
    }
    None
}

fn poly_mul(a: &UnivariatePoly, b: &UnivariatePoly) -> UnivariatePoly {
    let (a, b) = (a.coefficients(), b.coefficients());
    if a.is_empty() || b.is_empty() {
        return UnivariatePoly::default();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    UnivariatePoly::new(out)
}

fn poly_sub(a: &UnivariatePoly, b: &UnivariatePoly) -> UnivariatePoly {
    let len = a.coefficients().len().max(b.coefficients().len());
    let get = |p: &UnivariatePoly, i: usize| p.coefficients().get(i).cloned().unwrap_or_else(Rational::zero);
    UnivariatePoly::new((0..len).map(|i| get(a, i) - get(b, i)).collect())
}

fn linear(root: &Rational) -> UnivariatePoly {
    UnivariatePoly::new(vec![-root.clone(), Rational::one()])
}

/// Characteristic polynomial `det(t − K1)` from the three-term recurrence.
pub fn k1_characteristic(rep: &RepMatrices) -> UnivariatePoly {
    let mut prev = UnivariatePoly::new(vec![Rational::one()]);
    let mut cur = linear(&rep.v[0]);
    for k in 1..rep.v.len() {
        let next = poly_sub(&poly_mul(&linear(&rep.v[k]), &cur), &poly_mul(&UnivariatePoly::new(vec![rep.k1_sym[k].1.clone()]), &prev));
        prev = cur;
        cur = next;
    }
    cur
}

/// `Π_s (t − (−1)^s (s + μ2 + μ3 + 1/2))`
pub fn k1_expected_characteristic(n: u32, params: &Params) -> UnivariatePoly {
    (0..=n).fold(UnivariatePoly::new(vec![Rational::one()]), |acc, s| {
        let root = sign_pow(s as i64) * (int(s as i64) + params.mu2() + params.mu3() + rat(1, 2));
        poly_mul(&acc, &linear(&root))
    })
}

/// JSON shape of the `rep` artifact.
#[derive(Clone, Debug, Serialize)]
pub struct RepSummary {
    #[serde(rename = "N")]
    pub n: u32,
    pub mu: Params,
    #[serde(rename = "muN", serialize_with = "serialize_rational")]
    pub mu_n: Rational,
    #[serde(serialize_with = "serialize_rationals")]
    pub lambda: Vec<Rational>,
    #[serde(rename = "A", serialize_with = "serialize_rationals")]
    pub a: Vec<Rational>,
    #[serde(rename = "C", serialize_with = "serialize_rationals")]
    pub c: Vec<Rational>,
    #[serde(rename = "V", serialize_with = "serialize_rationals")]
    pub v: Vec<Rational>,
    #[serde(rename = "U_squared", serialize_with = "serialize_rationals")]
    pub u_squared: Vec<Rational>,
    #[serde(serialize_with = "serialize_rationals")]
    pub omega: Vec<Rational>,
    #[serde(serialize_with = "serialize_rational")]
    pub casimir: Rational,
    pub ladder: LadderData,
}

pub fn rep_summary(n: u32, params: &Params) -> RepSummary {
    let r = rep_matrices(n, params);
    RepSummary {
        n,
        mu: params.clone(),
        mu_n: r.mu_n.clone(),
        lambda: r.k3.diagonal(),
        u_squared: r.k1_sym.iter().map(|(_, u)| u.clone()).collect(),
        a: r.a,
        c: r.c,
        v: r.v,
        omega: omegas(n, params).to_vec(),
        casimir: casimir_value(n, params),
        ladder: ladder_norms(n, params),
    }
}

/// The basis `ψ_{k, ε(−1)^{N−k}}`, `k = 0..=N`, of the `Z3 = ε` sector.
pub fn sector_basis(n: u32, params: &Params, epsilon: Spin) -> Vec<SpinorPoly> {
    let basis = monogenic_basis(n, params);
    (0..=n)
        .map(|k| {
            let flip = (n - k) % 2 == 1;
            let sign = match (epsilon, flip) {
                (Spin::Up, false) | (Spin::Down, true) => Spin::Up,
                _ => Spin::Down,
            };
            basis.get(k, sign).clone()
        })
        .collect()
}

/// Expansion matrix of `op` on a basis: column `k` holds the coefficients of
/// `op(basis[k])`. Fails if some image leaves the span.
pub fn expand_in_basis(op: &crate::operators::LinOp, basis: &[SpinorPoly], degree: u32) -> crate::Result<Matrix<GRational>> {
    let columns: Vec<Vec<GRational>> = basis.iter().map(|b| coordinates(b, degree)).collect();
    let m = Matrix::from_columns(spinor_basis(degree).len(), &columns);
    let mut out = Matrix::zeros(basis.len(), basis.len());
    for (k, b) in basis.iter().enumerate() {
        let coeffs = m.solve(&coordinates(&op.apply(b), degree))?;
        for (j, c) in coeffs.into_iter().enumerate() {
            out.set(j, k, c);
        }
    }
    Ok(out)
}

fn g(r: &Rational) -> GRational {
    GRational::real(r.clone())
}

fn gr_failure(name: &str, n: u32, input: String, lhs: &GRational, rhs: &GRational) -> IdentityReport {
    IdentityReport::fail(
        name,
        [n, n],
        2 * (n as usize + 1),
        Counterexample { input, lhs: serde_json::to_value(lhs).unwrap(), rhs: serde_json::to_value(rhs).unwrap() },
    )
}

/// Compares the action of `K1`, `K3` and `Q` on each `Z3` sector of the
/// monogenic basis with the abstract representation.
pub fn match_function_realization(n: u32, params: &Params) -> IdentityReport {
    let name = format!("function realization N={n}");
    let rep = rep_matrices(n, params);
    let k1 = bi_generator(params, Axis::X1);
    let k3 = bi_generator(params, Axis::X3);
    let q = casimir(params);
    let qn = g(&casimir_value(n, params));
    for epsilon in Spin::BOTH {
        let basis = sector_basis(n, params, epsilon);
        let tag = |k: usize| format!("sector {}, k = {k}", epsilon.symbol());
        for (k, b) in basis.iter().enumerate() {
            let l = g(&lambda(k as u32, params));
            let image = k3.apply(b);
            if image != b.scale(&l) {
                return gr_failure(&format!("{name}: K3 eigenvalue"), n, tag(k), &GRational::zero(), &l);
            }
            if q.apply(b) != b.scale(&qn) {
                return gr_failure(&format!("{name}: Casimir value"), n, tag(k), &GRational::zero(), &qn);
            }
        }
        let m = match expand_in_basis(&k1, &basis, n) {
            Ok(m) => m,
            Err(e) => {
                return IdentityReport::fail(
                    format!("{name}: K1 preserves the sector"),
                    [n, n],
                    basis.len(),
                    Counterexample { input: format!("sector {}", epsilon.symbol()), lhs: json!(e.to_string()), rhs: json!("solvable") },
                )
            }
        };
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                if i.abs_diff(j) > 1 && !m.get(i, j).is_zero() {
                    return gr_failure(&format!("{name}: K1 tridiagonal"), n, format!("{} entry ({i}, {j})", tag(j)), m.get(i, j), &GRational::zero());
                }
            }
            if m.get(i, i) != &g(&rep.v[i]) {
                return gr_failure(&format!("{name}: K1 diagonal V_k"), n, tag(i), m.get(i, i), &g(&rep.v[i]));
            }
            if i + 1 < basis.len() {
                let product = m.get(i + 1, i) * m.get(i, i + 1);
                let expected = g(&(&rep.a[i] * &rep.c[i + 1]));
                if product != expected {
                    return gr_failure(&format!("{name}: off-diagonal product A_k C_(k+1)"), n, tag(i), &product, &expected);
                }
            }
        }
    }
    IdentityReport::pass(name, [n, n], 2 * (n as usize + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params() -> Params {
        Params::from_ratios([(1, 2), (1, 3), (2, 5)]).unwrap()
    }

    #[test]
    fn ladder_examples() {
        for n in 0..4 {
            assert!(ladder_norms(n, &params()).rho[0].is_zero());
        }
        let half = Params::from_ratios([(1, 2), (1, 2), (1, 2)]).unwrap();
        assert_eq!(mu_n(2, &half), rat(9, 2));
        assert_eq!(ladder_norms(2, &half).sigma[1], int(48));
        assert!(ladder_norms(1, &params()).rho[2].is_zero());
        // K−|N,N⟩ = 0 for N even: σ_{N+1} vanishes.
        assert!(ladder_norms(2, &params()).sigma[3].is_zero());
    }

    #[test]
    fn rep_examples() {
        let zero = Params::zero();
        let r = rep_matrices(1, &zero);
        assert_eq!(r.k3.diagonal(), vec![rat(1, 2), rat(-3, 2)]);
        assert_eq!(r.v, vec![int(-1), int(0)]);
        assert_eq!(r.a[0], rat(3, 2));
        assert_eq!(r.c[1], rat(1, 2));
        assert_eq!(r.k1_sym[1].1, rat(3, 4));
        assert_eq!(k1_characteristic(&r), k1_expected_characteristic(1, &zero));

        let p = params();
        let r0 = rep_matrices(0, &p);
        assert_eq!(r0.k3.get(0, 0), &(p.mu1() + p.mu2() + rat(1, 2)));
        assert_eq!(r0.k1_similar.get(0, 0), &(p.mu2() + p.mu3() + rat(1, 2)));
        assert_eq!(r0.k2.get(0, 0), &(p.mu3() + p.mu1() + rat(1, 2)));
    }

    #[test]
    fn verify_rep_examples() {
        let p = params();
        assert!(verify_rep(3, &p).passed(), "{}", verify_rep(3, &p));
        assert!(verify_rep(0, &p).passed());
        let broken = verify_rep_with(2, &p, &int(1));
        assert!(!broken.passed());
        assert!(broken.name.contains("{K1,K2}"), "{}", broken.name);
    }

    #[test]
    fn ladder_operators_and_norms() {
        let p = params();
        for n in 0..=5 {
            let r = rep_matrices(n, &p);
            let (kp, km) = (r.k_plus(), r.k_minus());
            assert_eq!(anticommutator(&r.k3, &kp), kp);
            assert_eq!(anticommutator(&r.k3, &km), km.scale(&-Rational::one()));
            let (np, nm) = ladder_square_norms(&r);
            assert!(np.is_diagonal() && nm.is_diagonal());
            let ladder = ladder_norms(n, &p);
            for k in 0..=n as usize {
                let l = lambda(k as u32, &p);
                let (rho, sigma) = if k % 2 == 0 { (&ladder.rho[k], &ladder.sigma[k + 1]) } else { (&ladder.rho[k + 1], &ladder.sigma[k]) };
                assert_eq!(np.get(k, k), rho, "N = {n}, k = {k}");
                assert_eq!(nm.get(k, k), sigma, "N = {n}, k = {k}");
                assert_eq!(&kp_norm_polynomial(n, &p, &l), rho);
                assert_eq!(&km_norm_polynomial(n, &p, &l), sigma);
            }
        }
    }

    #[test]
    fn factorized_forms_match() {
        let p = params();
        for n in 0..=4 {
            for t in -3..=3 {
                let l = rat(t, 3);
                assert_eq!(kp_norm_polynomial(n, &p, &l), kp_factorized(n, &p, &l));
                assert_eq!(km_norm_polynomial(n, &p, &l), km_factorized(n, &p, &l));
            }
        }
    }

    #[test]
    fn spectrum_of_k1() {
        let p = params();
        for n in 0..=4 {
            assert_eq!(k1_characteristic(&rep_matrices(n, &p)), k1_expected_characteristic(n, &p));
        }
    }

    #[test]
    fn lambda0_choice() {
        let p = params();
        for n in 0..=6 {
            let l0 = p.mu1() + p.mu2() + rat(1, 2);
            assert!(admissible(n, &p, &l0));
            assert_eq!(lambda0_obstruction(n, &p, &l0), None);
        }
        let s = p.mu1() + p.mu2();
        for alt in [-(&s + rat(1, 2)), rat(1, 2) - &s, &s - rat(1, 2)] {
            assert!((1..=4).any(|n| lambda0_obstruction(n, &p, &alt).is_some()));
        }
    }

    #[test]
    fn function_realization_examples() {
        let zero = Params::zero();
        let report = match_function_realization(1, &zero);
        assert!(report.passed(), "{report}");
        assert_eq!(rep_matrices(1, &zero).v, vec![int(-1), int(0)]);
        let report = match_function_realization(2, &params());
        assert!(report.passed(), "{report}");
    }
}
