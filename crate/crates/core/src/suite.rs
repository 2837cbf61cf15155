//! Verification suites: every identity of the calculus, checked exactly for
//! a set of parameter triples, with optional deliberate perturbations that
//! show each suite can fail.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::birep::{
    admissible, k1_characteristic, k1_expected_characteristic, km_factorized, km_norm_polynomial, kp_factorized,
    kp_norm_polynomial, ladder_norms, ladder_square_norms, lambda, lambda0_obstruction, match_function_realization,
    rep_matrices, verify_rep_with,
};
use crate::ck::{ck_extend_x2, fischer_decompose_with, monogenic_basis, partial_dirac, partial_x_vec, psi, Frame};
use crate::closedform::{
    closed_psi, normalized_in_frame, psi_wavefunctions, sector, upsilon_basis, MomentTable, NormalizedWavefunction,
    RadialConvention,
};
use crate::exactnum::{factorial, format_rational, int, parse_rational, pochhammer, rat, sign_pow, GRational, Params, Rational};
use crate::operators::{
    angular, anticommutator, bi_generator, casimir, commutator, degree_matrix, dirac, euler, gamma_from_commutator,
    gamma_op, gamma_plus_one, involution_z, laplace, laplace_explicit, mu_dot_r, norm_sq, symmetry_j, total_reflection,
    verify_eigen, verify_identity, Counterexample, IdentityReport, LinOp,
};
use crate::poly::{spinor_basis, Axis, MultiIndex, ScalarPoly, Spin, SpinorPoly};

/// Deliberate breakages, each aimed at one suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Perturbation {
    /// `γ3 → γ3 + 1` wherever `γ3` enters (osp(1|2), spherical Laplacian).
    Gamma3,
    /// `Γ + 1 → Γ + 2` in the sCasimir relations.
    Scasimir,
    /// `2μ_iμ_j → 2μ_iμ_j + 1` in the centrally extended Bannai–Ito relations.
    BiConstant,
    /// Monogenic basis built with `μ3 + 1`, checked with the true `μ3`.
    CkMu3,
    /// The even-branch superscript of the normalized radial factor as printed.
    ThetaSuperscript,
    /// Moments with `γ3 + 1` in the denominator.
    Measure,
    /// `ω3 → ω3 + 1` in the representation check.
    Omega3,
    /// Fischer decomposition solved against non-monogenic sub-bases.
    FischerBasis,
}

impl Perturbation {
    pub const ALL: [Perturbation; 8] = [
        Perturbation::Gamma3,
        Perturbation::Scasimir,
        Perturbation::BiConstant,
        Perturbation::CkMu3,
        Perturbation::ThetaSuperscript,
        Perturbation::Measure,
        Perturbation::Omega3,
        Perturbation::FischerBasis,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Perturbation::Gamma3 => "gamma3",
            Perturbation::Scasimir => "scasimir",
            Perturbation::BiConstant => "bi-constant",
            Perturbation::CkMu3 => "ck-mu3",
            Perturbation::ThetaSuperscript => "theta-superscript",
            Perturbation::Measure => "measure",
            Perturbation::Omega3 => "omega3",
            Perturbation::FischerBasis => "fischer-basis",
        }
    }

    /// The suite this perturbation is designed to break.
    pub fn target(self) -> SuiteKind {
        match self {
            Perturbation::Gamma3 => SuiteKind::Osp12,
            Perturbation::Scasimir => SuiteKind::Scasimir,
            Perturbation::BiConstant => SuiteKind::Symmetry,
            Perturbation::CkMu3 => SuiteKind::Monogenic,
            Perturbation::ThetaSuperscript => SuiteKind::ClosedForm,
            Perturbation::Measure => SuiteKind::Orthogonality,
            Perturbation::Omega3 => SuiteKind::Representation,
            Perturbation::FischerBasis => SuiteKind::Fischer,
        }
    }
}

impl fmt::Display for Perturbation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Perturbation {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Self::ALL.into_iter().find(|p| p.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Self::ALL.iter().map(|p| p.name()).collect();
            format!("unknown perturbation {s:?}; expected one of {}", names.join(", "))
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteKind {
    Osp12,
    Scasimir,
    Laplace,
    Symmetry,
    Monogenic,
    ClosedForm,
    Orthogonality,
    Representation,
    Fischer,
}

impl SuiteKind {
    pub const ALL: [SuiteKind; 9] = [
        SuiteKind::Osp12,
        SuiteKind::Scasimir,
        SuiteKind::Laplace,
        SuiteKind::Symmetry,
        SuiteKind::Monogenic,
        SuiteKind::ClosedForm,
        SuiteKind::Orthogonality,
        SuiteKind::Representation,
        SuiteKind::Fischer,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteKind::Osp12 => "osp(1|2)",
            SuiteKind::Scasimir => "sCasimir",
            SuiteKind::Laplace => "Laplace and angular momentum",
            SuiteKind::Symmetry => "symmetries and Bannai–Ito relations",
            SuiteKind::Monogenic => "monogenic basis",
            SuiteKind::ClosedForm => "closed-form wavefunctions",
            SuiteKind::Orthogonality => "orthogonality and overlaps",
            SuiteKind::Representation => "Bannai–Ito representation",
            SuiteKind::Fischer => "Fischer decomposition",
        }
    }
}

/// Degree and size limits for one verification run.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteConfig {
    pub identity_degree: u32,
    pub symmetry_degree: u32,
    pub monogenic_max: u32,
    pub closedform_max: u32,
    pub orthogonality_max: u32,
    pub rep_max: u32,
    pub realization_max: u32,
    pub fischer_max: u32,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            identity_degree: 6,
            symmetry_degree: 4,
            monogenic_max: 5,
            closedform_max: 5,
            orthogonality_max: 3,
            rep_max: 6,
            realization_max: 4,
            fischer_max: 4,
            seed: 0,
        }
    }
}

impl SuiteConfig {
    /// Operator identities at `degree`, everything else at default size.
    pub fn with_degree(degree: u32, seed: u64) -> Self {
        Self { identity_degree: degree, symmetry_degree: degree.min(4), seed, ..Self::default() }
    }
}

/// `count` parameter triples with numerators in `0..=12` and denominators in
/// `1..=12`, reproducible from `seed`.
pub fn sample_params(seed: u64, count: usize) -> Vec<Params> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut draw = || rat(rng.gen_range(0..=12), rng.gen_range(1..=12));
            let (a, b, c) = (draw(), draw(), draw());
            Params::new(a, b, c).expect("sampled μ are non-negative")
        })
        .collect()
}

/// Parses `"m1,m2,m3"`.
pub fn parse_params(text: &str) -> crate::Result<Params> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(crate::Error::ParseRational(text.to_string()));
    }
    Params::new(parse_rational(parts[0])?, parse_rational(parts[1])?, parse_rational(parts[2])?)
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: SuiteKind,
    pub mu: Params,
    pub checks: Vec<IdentityReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(IdentityReport::passed)
    }

    pub fn first_failure(&self) -> Option<&IdentityReport> {
        self.checks.iter().find(|c| !c.passed())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub config: SuiteConfig,
    pub perturbation: Option<Perturbation>,
    pub samples: Vec<Params>,
    pub suites: Vec<SuiteReport>,
    pub passed: bool,
}

fn c(r: Rational) -> LinOp {
    LinOp::rational(r)
}

fn zero_op() -> LinOp {
    c(Rational::zero())
}

struct Checker {
    degree: u32,
    checks: Vec<IdentityReport>,
}

impl Checker {
    fn new(degree: u32) -> Self {
        Self { degree, checks: Vec::new() }
    }

    fn identity(&mut self, name: impl Into<String>, lhs: &LinOp, rhs: &LinOp) {
        let name = name.into();
        self.checks.push(verify_identity(&name, lhs, rhs, self.degree));
    }

    fn finish(self, suite: SuiteKind, params: &Params) -> SuiteReport {
        SuiteReport { suite, mu: params.clone(), checks: self.checks }
    }
}

fn shift_if(p: Option<Perturbation>, which: Perturbation) -> Rational {
    if p == Some(which) {
        Rational::one()
    } else {
        Rational::zero()
    }
}

pub fn osp12_suite(params: &Params, degree: u32, perturbation: Option<Perturbation>) -> SuiteReport {
    let x = crate::operators::x_vec();
    let d = dirac(params);
    let r2 = norm_sq();
    let lap = laplace(params);
    let gamma = params.gamma3() + shift_if(perturbation, Perturbation::Gamma3);
    let e_gamma = euler() + c(gamma);
    let two = |op: &LinOp| op.scale_rational(&int(2));
    let mut ch = Checker::new(degree);
    ch.identity("{x, x} = 2‖x‖²", &anticommutator(&x, &x), &two(&r2));
    ch.identity("{D, D} = 2Δ", &anticommutator(&d, &d), &two(&lap));
    ch.identity("{x, D} = 2(E + γ3)", &anticommutator(&x, &d), &two(&e_gamma));
    ch.identity("[D, ‖x‖²] = 2x", &commutator(&d, &r2), &two(&x));
    ch.identity("[E + γ3, x] = x", &commutator(&e_gamma, &x), &x);
    ch.identity("[E + γ3, D] = −D", &commutator(&e_gamma, &d), &-&d);
    ch.identity("[Δ, x] = 2D", &commutator(&lap, &x), &two(&d));
    ch.identity("[E + γ3, Δ] = −2Δ", &commutator(&e_gamma, &lap), &two(&-&lap));
    ch.identity("[E + γ3, ‖x‖²] = 2‖x‖²", &commutator(&e_gamma, &r2), &two(&r2));
    ch.identity("[Δ, ‖x‖²] = 4(E + γ3)", &commutator(&lap, &r2), &e_gamma.scale_rational(&int(4)));
    ch.finish(SuiteKind::Osp12, params)
}

pub fn scasimir_suite(params: &Params, degree: u32, perturbation: Option<Perturbation>) -> SuiteReport {
    let shift = int(1) + shift_if(perturbation, Perturbation::Scasimir);
    let s = gamma_op(params) + c(shift);
    let x = crate::operators::x_vec();
    let d = dirac(params);
    let mut ch = Checker::new(degree);
    ch.identity("{Γ + 1, x} = 0", &anticommutator(&s, &x), &zero_op());
    ch.identity("{Γ + 1, D} = 0", &anticommutator(&s, &d), &zero_op());
    ch.identity("[Γ + 1, E] = 0", &commutator(&s, &euler()), &zero_op());
    ch.identity("[Γ + 1, ‖x‖²] = 0", &commutator(&s, &norm_sq()), &zero_op());
    ch.identity("[Γ + 1, Δ] = 0", &commutator(&s, &laplace(params)), &zero_op());
    ch.identity("σ·L + μ·R = ½[D, x] − 3/2", &gamma_op(params), &gamma_from_commutator(params));
    ch.finish(SuiteKind::Scasimir, params)
}

/// `‖x‖²Δ − E(E + 2μ1 + 2μ2 + 2μ3 + 1)`, with the constant written as
/// `2γ3 − 2` so that a shifted `γ3` reaches it.
fn laplace_s2_with(params: &Params, gamma: &Rational) -> LinOp {
    let shift = gamma * int(2) - int(2);
    norm_sq() * laplace(params) - euler() * (euler() + c(shift))
}

pub fn laplace_suite(params: &Params, degree: u32, perturbation: Option<Perturbation>) -> SuiteReport {
    let gamma = params.gamma3() + shift_if(perturbation, Perturbation::Gamma3);
    let s2 = laplace_s2_with(params, &gamma);
    let d = dirac(params);
    let mut ch = Checker::new(degree);
    ch.identity("D² = Δ", &(&d * &d), &laplace(params));
    ch.identity("Δ = Σ ∂² + (2μ/x)∂ − (μ/x²)(1 − R)", &laplace(params), &laplace_explicit(params));
    for (i, j) in [(Axis::X1, Axis::X2), (Axis::X2, Axis::X3), (Axis::X3, Axis::X1)] {
        let (ti, tj) = (LinOp::dunkl(i, params), LinOp::dunkl(j, params));
        ch.identity(format!("[T{}, T{}] = 0", i.number(), j.number()), &commutator(&ti, &tj), &zero_op());
    }
    let l2 = LinOp::sum(Axis::ALL.map(|a| angular(params, a).pow(2)));
    let pairs = LinOp::sum([(Axis::X1, Axis::X2), (Axis::X1, Axis::X3), (Axis::X2, Axis::X3)].map(|(i, j)| {
        let rr = LinOp::identity() - LinOp::reflect(i) * LinOp::reflect(j);
        rr.scale_rational(&(params.mu(i) * params.mu(j) * int(2)))
    }));
    let singles = LinOp::sum(Axis::ALL.map(|a| (LinOp::identity() - LinOp::reflect(a)).scale_rational(params.mu(a))));
    ch.identity("−Δ_S² = L² − 2Σμiμj(1 − RiRj) − Σμj(1 − Rj)", &-&s2, &(l2 - pairs - singles));
    for i in Axis::ALL {
        let (j, k) = i.cyclic_rest();
        let lhs = commutator(&angular(params, i), &angular(params, j));
        let factor = LinOp::identity() + LinOp::reflect(k).scale_rational(&(params.mu(k) * int(2)));
        let rhs = (angular(params, k) * factor).scale(&GRational::i());
        ch.identity(format!("[L{}, L{}] = i L{}(1 + 2μ{}R{})", i.number(), j.number(), k.number(), k.number(), k.number()), &lhs, &rhs);
        ch.identity(format!("[L{0}, R{0}] = 0", i.number()), &commutator(&angular(params, i), &LinOp::reflect(i)), &zero_op());
        for other in [j, k] {
            ch.identity(
                format!("{{L{}, R{}}} = 0", i.number(), other.number()),
                &anticommutator(&angular(params, i), &LinOp::reflect(other)),
                &zero_op(),
            );
        }
    }
    ch.finish(SuiteKind::Laplace, params)
}

pub fn symmetry_suite(params: &Params, degree: u32, perturbation: Option<Perturbation>) -> SuiteReport {
    let gamma = gamma_op(params);
    let g1 = gamma_plus_one(params);
    let mut ch = Checker::new(degree);
    let j = Axis::ALL.map(|a| symmetry_j(params, a));
    let z = Axis::ALL.map(involution_z);
    let k = Axis::ALL.map(|a| bi_generator(params, a));
    let n = |a: Axis| a.number();
    for a in Axis::ALL {
        ch.identity(format!("[Γ, J{}] = 0", n(a)), &commutator(&gamma, &j[a.index()]), &zero_op());
        ch.identity(format!("[Γ, Z{}] = 0", n(a)), &commutator(&gamma, &z[a.index()]), &zero_op());
        ch.identity(format!("Z{}² = 1", n(a)), &z[a.index()].pow(2), &LinOp::identity());
        ch.identity(format!("[Γ, K{}] = 0", n(a)), &commutator(&gamma, &k[a.index()]), &zero_op());
    }
    let sigma_j = LinOp::sum(Axis::ALL.map(|a| LinOp::pauli(a) * j[a.index()].clone()));
    ch.identity("Γ = σ·J − μ·R − 3/2", &gamma, &(sigma_j - mu_dot_r(params) - c(rat(3, 2))));
    for a in Axis::ALL {
        let (b, cc) = a.cyclic_rest();
        let (ia, ib, ic) = (a.index(), b.index(), cc.index());
        let rhs = &j[ic]
            + &(g1.clone() * LinOp::pauli(cc) * LinOp::reflect(cc)).scale_rational(&(params.mu(cc) * int(2)))
            + (LinOp::pauli(cc) * LinOp::reflect(a) * LinOp::reflect(b)).scale_rational(&(params.mu(a) * params.mu(b) * int(2)));
        ch.identity(
            format!("[J{}, J{}] = i(J{} + 2μ{}(Γ+1)σ{}R{} + 2μ{}μ{}σ{}R{}R{})", n(a), n(b), n(cc), n(cc), n(cc), n(cc), n(a), n(b), n(cc), n(a), n(b)),
            &commutator(&j[ia], &j[ib]),
            &rhs.scale(&GRational::i()),
        );
    }
    for a in Axis::ALL {
        ch.identity(format!("[J{0}, Z{0}] = 0", n(a)), &commutator(&j[a.index()], &z[a.index()]), &zero_op());
        for b in Axis::ALL.into_iter().filter(|b| *b != a) {
            ch.identity(format!("{{J{}, Z{}}} = 0", n(a), n(b)), &anticommutator(&j[a.index()], &z[b.index()]), &zero_op());
            if a.index() < b.index() {
                ch.identity(format!("{{Z{}, Z{}}} = 0", n(a), n(b)), &anticommutator(&z[a.index()], &z[b.index()]), &zero_op());
            }
        }
    }
    let central = g1.clone() * total_reflection();
    let extra = shift_if(perturbation, Perturbation::BiConstant);
    for a in Axis::ALL {
        let (b, cc) = a.cyclic_rest();
        let constant = params.mu(a) * params.mu(b) * int(2) + &extra;
        let rhs = &k[cc.index()] + &central.scale_rational(&(params.mu(cc) * int(2))) + c(constant);
        ch.identity(
            format!("{{K{}, K{}}} = K{} + 2μ{}(Γ+1)R1R2R3 + 2μ{}μ{}", n(a), n(b), n(cc), n(cc), n(a), n(b)),
            &anticommutator(&k[a.index()], &k[b.index()]),
            &rhs,
        );
    }
    for a in Axis::ALL {
        for b in Axis::ALL {
            ch.identity(format!("[K{}, Z{}] = 0", n(a), n(b)), &commutator(&k[a.index()], &z[b.index()]), &zero_op());
        }
    }
    let r = |a: Axis| LinOp::reflect(a);
    let gamma_k = k[0].clone() * r(Axis::X2) * r(Axis::X3)
        + k[1].clone() * r(Axis::X1) * r(Axis::X3)
        + k[2].clone() * r(Axis::X1) * r(Axis::X2)
        - mu_dot_r(params)
        - c(rat(3, 2));
    ch.identity("Γ = K1R2R3 + K2R1R3 + K3R1R2 − μ·R − 3/2", &gamma, &gamma_k);
    let q = casimir(params);
    let squares: Rational = params.as_array().iter().map(|m| m * m).sum();
    ch.identity("Q = (Γ+1)² + μ1² + μ2² + μ3² − 1/4", &q, &(g1.pow(2) + c(squares - rat(1, 4))));
    for a in Axis::ALL {
        ch.identity(format!("[Q, K{}] = 0", n(a)), &commutator(&q, &k[a.index()]), &zero_op());
        ch.identity(format!("[Q, Z{}] = 0", n(a)), &commutator(&q, &z[a.index()]), &zero_op());
    }
    let planar = [Axis::X1, Axis::X2];
    let k3_form = ((commutator(&partial_x_vec(&planar), &partial_dirac(&planar, params)) + LinOp::identity())
        * r(Axis::X1)
        * r(Axis::X2))
    .scale_rational(&rat(-1, 2));
    ch.identity("K3 = −½([x̃, D̃] + 1)R1R2", &k[2], &k3_form);
    let ms = params.mu_sum();
    let quad_rhs = -&laplace_s2_with(params, &params.gamma3()) + c(&ms * (&ms + int(1)));
    ch.identity("Γ² + Γ = −Δ_S² + μΣ(μΣ + 1)", &(gamma.pow(2) + gamma.clone()), &quad_rhs);
    ch.finish(SuiteKind::Symmetry, params)
}

fn poly_json(f: &SpinorPoly) -> serde_json::Value {
    serde_json::to_value(f).expect("polynomials serialize")
}

fn mismatch(name: impl Into<String>, degree: u32, size: usize, input: String, lhs: &SpinorPoly, rhs: &SpinorPoly) -> IdentityReport {
    IdentityReport::fail(name, [degree, degree], size, Counterexample { input, lhs: poly_json(lhs), rhs: poly_json(rhs) })
}

fn label(n: u32, k: u32, s: Spin) -> String {
    format!("ψ_({k},{})^({n})", s.symbol())
}

pub fn monogenic_suite(params: &Params, n_max: u32, perturbation: Option<Perturbation>) -> SuiteReport {
    let build = if perturbation == Some(Perturbation::CkMu3) {
        Params::new(params.mu1().clone(), params.mu2().clone(), params.mu3() + int(1)).expect("shifted μ3 stays non-negative")
    } else {
        params.clone()
    };
    let d = dirac(params);
    let g1 = gamma_plus_one(params);
    let k3 = bi_generator(params, Axis::X3);
    let z3 = involution_z(Axis::X3);
    let mut checks = Vec::new();
    for n in 0..=n_max {
        let basis = monogenic_basis(n, &build);
        let size = basis.len();
        let expected = 2 * (n as usize + 1);
        let rank = basis.coefficient_matrix().rank();
        let kernel = spinor_basis(n).len() - if n == 0 { 0 } else { degree_matrix(&d, n, n - 1).rank() };
        let counts = IdentityReport::pass(format!("N={n}: 2(N+1) independent elements spanning ker D"), [n, n], size);
        checks.push(if size == expected && rank == expected && kernel == expected {
            counts
        } else {
            IdentityReport::fail(
                counts.name.clone(),
                [n, n],
                size,
                Counterexample {
                    input: format!("N = {n}"),
                    lhs: json!({"elements": size, "rank": rank, "kernel": kernel}),
                    rhs: json!(expected),
                },
            )
        });
        let energy = GRational::real(int(n as i64) + params.mu_sum() + int(1));
        for e in &basis.elements {
            let tag = label(n, e.k, e.sign);
            let homogeneous = e.poly.homogeneous_degree() == Some(n);
            let image = d.apply(&e.poly);
            checks.push(if homogeneous && image.is_zero() {
                IdentityReport::pass(format!("D {tag} = 0"), [n, n], 1)
            } else {
                mismatch(format!("D {tag} = 0"), n, 1, tag.clone(), &image, &SpinorPoly::zero())
            });
            checks.push(verify_eigen(&format!("(Γ+1) {tag} = (N+μΣ+1) {tag}"), &g1, &e.poly, &energy, &tag));
            let l = GRational::real(lambda(e.k, params));
            checks.push(verify_eigen(&format!("K3 {tag} = λ_k {tag}"), &k3, &e.poly, &l, &tag));
            let zv = GRational::from_int(e.sign.sign() * if (n - e.k) % 2 == 0 { 1 } else { -1 });
            checks.push(verify_eigen(&format!("Z3 {tag} = ±(−1)^(N−k) {tag}"), &z3, &e.poly, &zv, &tag));
        }
    }
    SuiteReport { suite: SuiteKind::Monogenic, mu: params.clone(), checks }
}

/// `β!/(μ2+½)_β · β'!/(μ3+½)_β'` relating the normalized radical-free
/// polynomial to `ψ`.
fn closed_prefactor(n: u32, k: u32, mu: &Params) -> Rational {
    let (b, bp) = (k / 2, (n - k) / 2);
    factorial(b) / pochhammer(&(mu.mu2() + rat(1, 2)), b) * factorial(bp) / pochhammer(&(mu.mu3() + rat(1, 2)), bp)
}

pub fn closedform_suite(params: &Params, n_max: u32, perturbation: Option<Perturbation>) -> SuiteReport {
    let convention = if perturbation == Some(Perturbation::ThetaSuperscript) {
        RadialConvention::AsPrinted
    } else {
        RadialConvention::Consistent
    };
    let mut checks = Vec::new();
    for k in 0..=n_max {
        for spin in Spin::BOTH {
            let seed = SpinorPoly::from_scalar(ScalarPoly::var(Axis::X1).pow(k), spin);
            let ck = ck_extend_x2(&seed, params).expect("seed is planar");
            let closed = crate::closedform::closed_m(k, params).apply(&SpinorPoly::chi(spin));
            let name = format!("m_{k} χ{} = CK_x2[x1^{k}] χ{}", spin.symbol(), spin.symbol());
            checks.push(if closed == ck { IdentityReport::pass(name, [k, k], 1) } else { mismatch(name, k, 1, format!("k = {k}"), &closed, &ck) });
        }
    }
    for n in 0..=n_max {
        for k in 0..=n {
            for spin in Spin::BOTH {
                let tag = label(n, k, spin);
                let target = psi(n, k, spin, params);
                let closed = closed_psi(n, k, spin, params);
                let name = format!("q m χ = {tag}");
                checks.push(if closed == target { IdentityReport::pass(name, [n, n], 1) } else { mismatch(name, n, 1, tag.clone(), &closed, &target) });
                let w = normalized_in_frame(n, k, spin, params, Frame::STANDARD, convention);
                let scaled = w.poly.scale_rational(&closed_prefactor(n, k, params));
                let name = format!("ΘΦχ ∝ {tag}");
                checks.push(if scaled == target { IdentityReport::pass(name, [n, n], 1) } else { mismatch(name, n, 1, tag, &scaled, &target) });
            }
        }
    }
    SuiteReport { suite: SuiteKind::ClosedForm, mu: params.clone(), checks }
}

fn gr_json(v: &GRational) -> serde_json::Value {
    serde_json::to_value(v).expect("numbers serialize")
}

fn scalar_fail(name: impl Into<String>, n: u32, size: usize, input: String, lhs: &GRational, rhs: &GRational) -> IdentityReport {
    IdentityReport::fail(name, [0, n], size, Counterexample { input, lhs: gr_json(lhs), rhs: gr_json(rhs) })
}

fn w_label(w: &NormalizedWavefunction, basis: &str) -> String {
    format!("{basis}_({},{})^({})", w.k, w.sign.symbol(), w.n)
}

/// Random spinor polynomial of degree `≤ max_degree` with small
/// Gaussian-integer coefficients.
pub fn random_spinor(rng: &mut ChaCha8Rng, max_degree: u32, terms: usize) -> SpinorPoly {
    let mut out = SpinorPoly::zero();
    for _ in 0..terms {
        let d = rng.gen_range(0..=max_degree);
        let exps = MultiIndex::of_degree(d);
        let e = exps[rng.gen_range(0..exps.len())];
        let coef = GRational::new(int(rng.gen_range(-3..=3)), int(rng.gen_range(-3..=3)));
        let spin = if rng.gen_bool(0.5) { Spin::Up } else { Spin::Down };
        out = &out + &SpinorPoly::basis(e, spin).scale(&coef);
    }
    out
}

/// Random homogeneous spinor polynomial of degree `n`.
pub fn random_homogeneous(rng: &mut ChaCha8Rng, n: u32) -> SpinorPoly {
    let mut out = SpinorPoly::zero();
    for (e, s) in spinor_basis(n) {
        let coef = GRational::new(int(rng.gen_range(-4..=4)), int(rng.gen_range(-2..=2)));
        out = &out + &SpinorPoly::basis(e, s).scale(&coef);
    }
    out
}

pub fn orthogonality_suite(params: &Params, n_max: u32, seed: u64, perturbation: Option<Perturbation>) -> SuiteReport {
    let shift = shift_if(perturbation, Perturbation::Measure);
    let table = MomentTable::with_shift(params, shift);
    let mut checks = Vec::new();

    let all: Vec<NormalizedWavefunction> = (0..=n_max).flat_map(|n| psi_wavefunctions(n, params)).collect();
    let size = all.len();
    let name = format!("Gram matrix of Ψ for N ≤ {n_max} is diagonal with one common constant");
    let mut report = IdentityReport::pass(name.clone(), [0, n_max], size);
    let mut common: Option<GRational> = None;
    'outer: for (i, a) in all.iter().enumerate() {
        for (j, b) in all.iter().enumerate().skip(i) {
            let v = table.inner_product(&a.poly, &b.poly);
            if i != j {
                if !v.is_zero() {
                    report = scalar_fail(&name, n_max, size, format!("⟨{}, {}⟩", w_label(a, "Ψ"), w_label(b, "Ψ")), &v, &GRational::zero());
                    break 'outer;
                }
                continue;
            }
            let normalized = v.scale(&a.squared_norm);
            match &common {
                None => common = Some(normalized),
                Some(c0) if *c0 != normalized => {
                    report = scalar_fail(&name, n_max, size, format!("⟨{0}, {0}⟩", w_label(a, "Ψ")), &normalized, c0);
                    break 'outer;
                }
                _ => {}
            }
        }
    }
    checks.push(report);
    let one = GRational::one();
    let unit_name = "normalized Gram constant equals 1 with the sphere measure restored";
    checks.push(match &common {
        Some(c0) if *c0 != one => scalar_fail(unit_name, n_max, size, "common diagonal".into(), c0, &one),
        _ => IdentityReport::pass(unit_name, [0, n_max], size),
    });

    let g1 = gamma_plus_one(params);
    let k1 = bi_generator(params, Axis::X1);
    let z3 = involution_z(Axis::X3);
    for n in 0..=n_max {
        let energy = GRational::real(int(n as i64) + params.mu_sum() + int(1));
        for w in upsilon_basis(n, params) {
            let tag = w_label(&w, "Υ");
            let l = GRational::real(sign_pow(w.k as i64) * (int(w.k as i64) + params.mu2() + params.mu3() + rat(1, 2)));
            checks.push(verify_eigen(&format!("(Γ+1) {tag} = (N+μΣ+1) {tag}"), &g1, &w.poly, &energy, &tag));
            checks.push(verify_eigen(&format!("K1 {tag} = (−1)^s(s+μ2+μ3+½) {tag}"), &k1, &w.poly, &l, &tag));
            checks.push(verify_eigen(&format!("Z3 {tag} = ±(−1)^(N−s) {tag}"), &z3, &w.poly, &GRational::from_int(sector(&w)), &tag));
        }
        let psi = psi_wavefunctions(n, params);
        let ups = upsilon_basis(n, params);
        let gram_u: Vec<GRational> = ups.iter().map(|u| table.inner_product(&u.poly, &u.poly)).collect();
        let w: Vec<Vec<GRational>> = ups.iter().map(|u| psi.iter().map(|p| table.inner_product(&u.poly, &p.poly)).collect()).collect();
        let name = format!("N={n}: overlap sum rule Σ_s ⟨Ψ,Υ_s⟩⟨Υ_s,Ψ'⟩/⟨Υ_s,Υ_s⟩ = δ⟨Ψ,Ψ⟩");
        let mut report = IdentityReport::pass(name.clone(), [n, n], psi.len());
        'pairs: for (a, pa) in psi.iter().enumerate() {
            for (b, pb) in psi.iter().enumerate() {
                let lhs: GRational = (0..ups.len()).map(|s| &(&w[s][a].conj() * &w[s][b]) / &gram_u[s]).sum();
                let rhs = if a == b { table.inner_product(&pa.poly, &pa.poly) } else { GRational::zero() };
                if lhs != rhs {
                    report = scalar_fail(&name, n, psi.len(), format!("({}, {})", w_label(pa, "Ψ"), w_label(pb, "Ψ")), &lhs, &rhs);
                    break 'pairs;
                }
            }
        }
        checks.push(report);
        let name = format!("N={n}: Z3 sectors decouple in the overlaps");
        let leak = ups.iter().enumerate().find_map(|(s, u)| {
            psi.iter().enumerate().find(|(k, p)| sector(u) != sector(p) && !w[s][*k].is_zero()).map(|(k, p)| (s, u, k, p))
        });
        checks.push(match leak {
            None => IdentityReport::pass(name, [n, n], psi.len()),
            Some((s, u, k, p)) => scalar_fail(&name, n, psi.len(), format!("⟨{}, {}⟩", w_label(u, "Υ"), w_label(p, "Ψ")), &w[s][k], &GRational::zero()),
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5e1f_ad70);
    let ops = [
        ("Γ", gamma_op(params)),
        ("K1", bi_generator(params, Axis::X1)),
        ("K2", bi_generator(params, Axis::X2)),
        ("K3", bi_generator(params, Axis::X3)),
        ("Z1", involution_z(Axis::X1)),
        ("Z2", involution_z(Axis::X2)),
        ("Z3", involution_z(Axis::X3)),
    ];
    for trial in 0..3 {
        let f = random_spinor(&mut rng, 3, 6);
        let g = random_spinor(&mut rng, 3, 6);
        for (name, op) in &ops {
            let lhs = table.inner_product(&op.apply(&f), &g);
            let rhs = table.inner_product(&f, &op.apply(&g));
            let title = format!("⟨{name} f, g⟩ = ⟨f, {name} g⟩ (trial {trial})");
            checks.push(if lhs == rhs { IdentityReport::pass(title, [0, 3], 2) } else { scalar_fail(title, 3, 2, format!("trial {trial}"), &lhs, &rhs) });
        }
    }
    SuiteReport { suite: SuiteKind::Orthogonality, mu: params.clone(), checks }
}

fn rational_fail(name: impl Into<String>, n: u32, input: String, lhs: &Rational, rhs: &Rational) -> IdentityReport {
    IdentityReport::fail(name, [n, n], n as usize + 1, Counterexample { input, lhs: json!(format_rational(lhs)), rhs: json!(format_rational(rhs)) })
}

pub fn representation_suite(params: &Params, n_max: u32, realization_max: u32, perturbation: Option<Perturbation>) -> SuiteReport {
    let shift = shift_if(perturbation, Perturbation::Omega3);
    let mut checks = Vec::new();
    for n in 0..=n_max {
        checks.push(verify_rep_with(n, params, &shift));
        let rep = rep_matrices(n, params);
        let ladder = ladder_norms(n, params);
        let boundary_name = format!("N={n}: ladder truncation at k = N+1");
        let boundary = if n % 2 == 1 { &ladder.rho[n as usize + 1] } else { &ladder.sigma[n as usize + 1] };
        checks.push(if boundary.is_zero() {
            IdentityReport::pass(boundary_name, [n, n], n as usize + 1)
        } else {
            rational_fail(boundary_name, n, "k = N+1".into(), boundary, &Rational::zero())
        });
        let kp = rep.k_plus();
        let km = rep.k_minus();
        let name = format!("N={n}: {{K3, K+}} = K+ and {{K3, K−}} = −K−");
        checks.push(
            if crate::linalg::anticommutator(&rep.k3, &kp) == kp && crate::linalg::anticommutator(&rep.k3, &km) == km.scale(&-Rational::one()) {
                IdentityReport::pass(name, [n, n], n as usize + 1)
            } else {
                rational_fail(name, n, "ladder".into(), &Rational::zero(), &Rational::one())
            },
        );
        let (np, nm) = ladder_square_norms(&rep);
        let name = format!("N={n}: ‖K±|N,k⟩‖² from K±†K± formulas equal ρ, σ");
        let mut report = IdentityReport::pass(name.clone(), [n, n], n as usize + 1);
        for k in 0..=n as usize {
            let l = lambda(k as u32, params);
            let (rho, sigma) = if k % 2 == 0 { (&ladder.rho[k], &ladder.sigma[k + 1]) } else { (&ladder.rho[k + 1], &ladder.sigma[k]) };
            let (kpn, kmn) = (kp_norm_polynomial(n, params, &l), km_norm_polynomial(n, params, &l));
            let (kpf, kmf) = (kp_factorized(n, params, &l), km_factorized(n, params, &l));
            let candidates = [
                (np.get(k, k), rho, "−K+²"),
                (nm.get(k, k), sigma, "−K−²"),
                (&kpn, rho, "K+†K+ formula"),
                (&kmn, sigma, "K−†K− formula"),
                (&kpf, rho, "K+ factorized form"),
                (&kmf, sigma, "K− factorized form"),
            ];
            let first = candidates.into_iter().find(|(a, b, _)| a != b);
            if let Some((got, want, what)) = first {
                report = rational_fail(&name, n, format!("{what}, k = {k}"), got, want);
                break;
            }
        }
        if !(np.is_diagonal() && nm.is_diagonal()) {
            report = rational_fail(&name, n, "K±² not diagonal".into(), &Rational::one(), &Rational::zero());
        }
        checks.push(report);
        let l0 = params.mu1() + params.mu2() + rat(1, 2);
        let name = format!("N={n}: λ0 = μ1+μ2+½ admissible and generates the chain");
        checks.push(match (admissible(n, params, &l0), lambda0_obstruction(n, params, &l0)) {
            (true, None) => IdentityReport::pass(name, [n, n], n as usize + 1),
            (ok, why) => IdentityReport::fail(name, [n, n], n as usize + 1, Counterexample {
                input: "λ0".into(),
                lhs: json!({"admissible": ok, "obstruction": why}),
                rhs: json!({"admissible": true, "obstruction": null}),
            }),
        });
        if n <= 4 {
            let name = format!("N={n}: spectrum of K1 is {{(−1)^s(s+μ2+μ3+½)}}");
            let got = k1_characteristic(&rep);
            let want = k1_expected_characteristic(n, params);
            checks.push(if got == want {
                IdentityReport::pass(name, [n, n], n as usize + 1)
            } else {
                IdentityReport::fail(name, [n, n], n as usize + 1, Counterexample {
                    input: "characteristic polynomial".into(),
                    lhs: serde_json::to_value(&got).unwrap(),
                    rhs: serde_json::to_value(&want).unwrap(),
                })
            });
        }
    }
    for n in 0..=realization_max {
        checks.push(match_function_realization(n, params));
    }
    SuiteReport { suite: SuiteKind::Representation, mu: params.clone(), checks }
}

pub fn fischer_suite(params: &Params, n_max: u32, seed: u64, perturbation: Option<Perturbation>) -> SuiteReport {
    let build = if perturbation == Some(Perturbation::FischerBasis) {
        Params::new(params.mu1() + int(1), params.mu2().clone(), params.mu3().clone()).expect("shifted μ1 stays non-negative")
    } else {
        params.clone()
    };
    let provider = |d: u32| monogenic_basis(d, &build).elements.into_iter().map(|e| e.poly).collect::<Vec<_>>();
    let d = dirac(params);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xf15c_0e12);
    let mut checks = Vec::new();
    for n in 0..=n_max {
        let f = random_homogeneous(&mut rng, n);
        let name = format!("N={n}: f = Σ x^k M_(N−k) with D M = 0");
        let size = spinor_basis(n).len();
        let report = match fischer_decompose_with(&f, &provider) {
            Err(e) => IdentityReport::fail(name, [n, n], size, Counterexample { input: "random f".into(), lhs: json!(e.to_string()), rhs: json!("unique solution") }),
            Ok(parts) => {
                let back = parts.reassemble();
                if back != f {
                    mismatch(name, n, size, "reassembly".into(), &back, &f)
                } else if let Some((k, m)) = parts.components.iter().enumerate().find(|(_, m)| !d.apply(m).is_zero()) {
                    mismatch(name, n, size, format!("D M_{}", n as usize - k), &d.apply(m), &SpinorPoly::zero())
                } else {
                    IdentityReport::pass(name, [n, n], size)
                }
            }
        };
        checks.push(report);
        let dims: usize = (0..=n).map(|j| 2 * (j as usize + 1)).sum();
        let name = format!("N={n}: Σ_k dim M_(N−k) = dim P_N ⊗ C²");
        checks.push(if dims == size {
            IdentityReport::pass(name, [n, n], size)
        } else {
            IdentityReport::fail(name, [n, n], size, Counterexample { input: "dimensions".into(), lhs: json!(dims), rhs: json!(size) })
        });
    }
    SuiteReport { suite: SuiteKind::Fischer, mu: params.clone(), checks }
}

pub fn run_suite(kind: SuiteKind, params: &Params, config: &SuiteConfig, perturbation: Option<Perturbation>) -> SuiteReport {
    match kind {
        SuiteKind::Osp12 => osp12_suite(params, config.identity_degree, perturbation),
        SuiteKind::Scasimir => scasimir_suite(params, config.identity_degree, perturbation),
        SuiteKind::Laplace => laplace_suite(params, config.identity_degree, perturbation),
        SuiteKind::Symmetry => symmetry_suite(params, config.symmetry_degree, perturbation),
        SuiteKind::Monogenic => monogenic_suite(params, config.monogenic_max, perturbation),
        SuiteKind::ClosedForm => closedform_suite(params, config.closedform_max, perturbation),
        SuiteKind::Orthogonality => orthogonality_suite(params, config.orthogonality_max, config.seed, perturbation),
        SuiteKind::Representation => representation_suite(params, config.rep_max, config.realization_max, perturbation),
        SuiteKind::Fischer => fischer_suite(params, config.fischer_max, config.seed, perturbation),
    }
}

/// Runs `kinds` for every parameter triple; suites run in parallel and the
/// report keeps the order `(kind, sample)`.
pub fn run_suites(kinds: &[SuiteKind], samples: &[Params], config: &SuiteConfig, perturbation: Option<Perturbation>) -> Report {
    let jobs: Vec<(SuiteKind, &Params)> = kinds.iter().flat_map(|k| samples.iter().map(move |p| (*k, p))).collect();
    let suites: Vec<SuiteReport> = jobs.par_iter().map(|(k, p)| run_suite(*k, p, config, perturbation)).collect();
    let passed = suites.iter().all(SuiteReport::passed);
    Report { config: config.clone(), perturbation, samples: samples.to_vec(), suites, passed }
}

pub fn run_all(samples: &[Params], config: &SuiteConfig, perturbation: Option<Perturbation>) -> Report {
    run_suites(&SuiteKind::ALL, samples, config, perturbation)
}
