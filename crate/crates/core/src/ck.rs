//! Cauchy–Kovalevskaia extension, the monogenic basis `ψ_{k,±}^{(N)}` and the
//! Fischer decomposition of `P_N ⊗ C²`.
//!
//! The extension is evaluated term by term: for `p` homogeneous of degree
//! `n` in the tangent variables,
//! `CK[p] = Σ_α (σ_t x_t)^α p_α` with `p_α` a rational multiple of `D̃^α p`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{factorial, int, pochhammer, rat, sign_pow, GRational, Params, Rational};
use crate::linalg::Matrix;
use crate::operators::{dirac, x_vec, LinOp};
use crate::poly::{coordinates, spinor_basis, Axis, ScalarPoly, Spin, SpinorPoly};

/// Assignment of the roles "first", "second", "third" coordinate to actual
/// axes. Pauli indices and μ follow the same assignment, so a frame is a
/// relabelling that preserves every relation of the calculus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Frame(pub [Axis; 3]);

impl Frame {
    pub const STANDARD: Frame = Frame([Axis::X1, Axis::X2, Axis::X3]);
    /// Roles played by `(x2, x3, x1)`.
    pub const CYCLIC: Frame = Frame([Axis::X2, Axis::X3, Axis::X1]);

    pub fn axis(&self, role: usize) -> Axis {
        self.0[role]
    }

    /// μ listed in role order.
    pub fn params(&self, params: &Params) -> Params {
        let [a, b, c] = self.0.map(|axis| params.mu(axis).clone());
        Params::new(a, b, c).expect("permuted parameters stay non-negative")
    }
}

/// `Σ_{i ∈ axes} σ_i T_i`
pub fn partial_dirac(axes: &[Axis], params: &Params) -> LinOp {
    LinOp::sum(axes.iter().map(|&a| LinOp::pauli(a) * LinOp::dunkl(a, params)))
}

/// `Σ_{i ∈ axes} σ_i x_i`
pub fn partial_x_vec(axes: &[Axis]) -> LinOp {
    LinOp::sum(axes.iter().map(|&a| LinOp::pauli(a) * LinOp::coordinate(a)))
}

/// Coefficient of `D̃^j p` in `p_j`, for the extension along an axis with
/// parameter `mu`.
fn ck_coefficient(j: u32, mu: &Rational) -> Rational {
    let alpha = j / 2;
    let a = mu + rat(1, 2);
    if j.is_multiple_of(2) {
        sign_pow(alpha as i64) / (int(4).pow(alpha as i32) * factorial(alpha) * pochhammer(&a, alpha))
    } else {
        let b = mu + rat(3, 2);
        sign_pow(alpha as i64 + 1) / (int(2).pow(j as i32) * factorial(alpha) * &a * pochhammer(&b, alpha))
    }
}

/// Extends `p`, a homogeneous spinor polynomial in the `tangent` variables,
/// to a polynomial in `tangent ∪ {target}` annihilated by
/// `σ_t T_t + Σ_{i ∈ tangent} σ_i T_i` and equal to `p` at `x_t = 0`.
pub fn ck_extend(p: &SpinorPoly, target: Axis, tangent: &[Axis], params: &Params) -> Result<SpinorPoly> {
    if let Some(axis) = Axis::ALL.into_iter().find(|a| !tangent.contains(a) && p.involves(*a)) {
        return Err(Error::InvolvesVariable { axis: axis.number() });
    }
    if p.is_zero() {
        return Ok(SpinorPoly::zero());
    }
    let n = p.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    let d = partial_dirac(tangent, params);
    let mu = params.mu(target);
    let mut out = SpinorPoly::zero();
    let mut power = p.clone();
    let mut xt = ScalarPoly::one();
    for j in 0..=n {
        if power.is_zero() {
            break;
        }
        let mut term = power.scale_rational(&ck_coefficient(j, mu)).mul_scalar_poly(&xt);
        if j % 2 == 1 {
            term = term.pauli(target);
        }
        out = &out + &term;
        power = d.apply(&power);
        xt = &xt * &ScalarPoly::var(target);
    }
    Ok(out)
}

/// `CK_{x3}^{μ3}` from `P_n(x1, x2) ⊗ C²` to the monogenics in three variables.
pub fn ck_extend_x3(p: &SpinorPoly, params: &Params) -> Result<SpinorPoly> {
    ck_extend(p, Axis::X3, &[Axis::X1, Axis::X2], params)
}

/// `CK_{x2}^{μ2}` from `P_n(x1) ⊗ C²` to the monogenics in `(x1, x2)`.
pub fn ck_extend_x2(p: &SpinorPoly, params: &Params) -> Result<SpinorPoly> {
    ck_extend(p, Axis::X2, &[Axis::X1], params)
}

/// `CK_{x3}[ x̃^{N−k} CK_{x2}[x1^k] ] χ`, with roles assigned by `frame`.
pub fn psi_in_frame(n: u32, k: u32, spin: Spin, params: &Params, frame: Frame) -> SpinorPoly {
    assert!(k <= n, "k = {k} exceeds N = {n}");
    let [a1, a2, a3] = frame.0;
    let seed = SpinorPoly::from_scalar(ScalarPoly::var(a1).pow(k), spin);
    let planar = ck_extend(&seed, a2, &[a1], params).expect("seed involves only the first role");
    let lifted = partial_x_vec(&[a1, a2]).pow(n - k).apply(&planar);
    ck_extend(&lifted, a3, &[a1, a2], params).expect("lift involves only the first two roles")
}

/// `ψ_{k,±}^{(N)}`
pub fn psi(n: u32, k: u32, spin: Spin, params: &Params) -> SpinorPoly {
    psi_in_frame(n, k, spin, params, Frame::STANDARD)
}

#[derive(Clone, Debug, Serialize)]
pub struct BasisElement {
    pub k: u32,
    pub sign: Spin,
    pub poly: SpinorPoly,
}

#[derive(Clone, Debug, Serialize)]
pub struct MonogenicBasis {
    #[serde(rename = "N")]
    pub n: u32,
    #[serde(rename = "mu")]
    pub params: Params,
    pub elements: Vec<BasisElement>,
}

impl MonogenicBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, k: u32, sign: Spin) -> &SpinorPoly {
        &self.elements[(2 * k + if sign == Spin::Up { 0 } else { 1 }) as usize].poly
    }

    /// Coefficient matrix in the monomial-spinor basis of degree `N`, one
    /// column per element.
    pub fn coefficient_matrix(&self) -> Matrix<GRational> {
        let columns: Vec<Vec<GRational>> = self.elements.iter().map(|e| coordinates(&e.poly, self.n)).collect();
        Matrix::from_columns(spinor_basis(self.n).len(), &columns)
    }
}

/// The `2(N+1)` elements `ψ_{k,±}^{(N)}`, ordered by `k` with `+` first.
pub fn monogenic_basis(n: u32, params: &Params) -> MonogenicBasis {
    let elements = (0..=n)
        .flat_map(|k| Spin::BOTH.map(|sign| BasisElement { k, sign, poly: psi(n, k, sign, params) }))
        .collect();
    MonogenicBasis { n, params: params.clone(), elements }
}

#[derive(Clone, Debug, Serialize)]
pub struct FischerComponents {
    #[serde(rename = "N")]
    pub degree: u32,
    /// `components[k]` is the monogenic `M_{N−k}` multiplying `x̲^k`.
    pub components: Vec<SpinorPoly>,
}

impl FischerComponents {
    /// `Σ_k x̲^k M_{N−k}`
    pub fn reassemble(&self) -> SpinorPoly {
        let x = x_vec();
        self.components
            .iter()
            .enumerate()
            .fold(SpinorPoly::zero(), |acc, (k, m)| &acc + &x.pow(k as u32).apply(m))
    }
}

/// Spanning sets of the monogenics of each degree used by the Fischer solve.
pub type MonogenicProvider<'a> = dyn Fn(u32) -> Vec<SpinorPoly> + 'a;

/// Unique `M_{N−k} ∈ ker D` with `f = Σ_k x̲^k M_{N−k}`.
pub fn fischer_decompose(f: &SpinorPoly, params: &Params) -> Result<FischerComponents> {
    let provider = |d: u32| monogenic_basis(d, params).elements.into_iter().map(|e| e.poly).collect();
    fischer_decompose_with(f, &provider)
}

/// Fischer solve against caller-supplied sub-bases of degree `0..=N`.
pub fn fischer_decompose_with(f: &SpinorPoly, basis_of_degree: &MonogenicProvider<'_>) -> Result<FischerComponents> {
    let n = if f.is_zero() { 0 } else { f.homogeneous_degree().ok_or(Error::NotHomogeneous)? };
    let x = x_vec();
    let blocks: Vec<Vec<SpinorPoly>> = (0..=n).map(|k| basis_of_degree(n - k)).collect();
    let mut columns = Vec::new();
    for (k, block) in blocks.iter().enumerate() {
        let lift = x.pow(k as u32);
        columns.extend(block.iter().map(|m| coordinates(&lift.apply(m), n)));
    }
    let matrix = Matrix::from_columns(spinor_basis(n).len(), &columns);
    let solution = matrix.solve(&coordinates(f, n))?;
    let mut offset = 0;
    let components = blocks
        .iter()
        .map(|block| {
            let m = block.iter().zip(&solution[offset..]).fold(SpinorPoly::zero(), |acc, (b, c)| &acc + &b.scale(c));
            offset += block.len();
            m
        })
        .collect();
    Ok(FischerComponents { degree: n, components })
}

/// `D` applied to each component; all vanish for a genuine decomposition.
pub fn components_monogenic(parts: &FischerComponents, params: &Params) -> bool {
    let d = dirac(params);
    parts.components.iter().all(|m| d.apply(m).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::{bi_generator, gamma_plus_one, involution_z};
    use crate::poly::MultiIndex;

    fn params() -> Params {
        Params::from_ratios([(1, 2), (1, 3), (2, 5)]).unwrap()
    }

    fn mono(a1: u32, a2: u32, a3: u32, s: Spin) -> SpinorPoly {
        SpinorPoly::basis(MultiIndex::new(a1, a2, a3), s)
    }

    fn g(r: Rational) -> GRational {
        GRational::real(r)
    }

    #[test]
    fn ck_x3_examples() {
        let p = params();
        assert_eq!(ck_extend_x3(&SpinorPoly::chi_plus(), &p).unwrap(), SpinorPoly::chi_plus());
        let x1 = mono(1, 0, 0, Spin::Up);
        let c = (int(1) + p.mu1() * int(2)) / (int(1) + p.mu3() * int(2));
        let correction = mono(0, 0, 1, Spin::Up).pauli(Axis::X1).pauli(Axis::X3).scale_rational(&c);
        let out = ck_extend_x3(&x1, &p).unwrap();
        assert_eq!(out, &x1 - &correction);
        assert!(dirac(&p).apply(&out).is_zero());
        assert!(matches!(ck_extend_x3(&mono(0, 0, 1, Spin::Up), &p), Err(Error::InvolvesVariable { axis: 3 })));
    }

    #[test]
    fn ck_x2_examples() {
        let p = params();
        assert_eq!(ck_extend_x2(&SpinorPoly::chi_minus(), &p).unwrap(), SpinorPoly::chi_minus());
        let x1 = mono(1, 0, 0, Spin::Up);
        let c = (p.mu1() + rat(1, 2)) / (p.mu2() + rat(1, 2));
        let correction = mono(0, 1, 0, Spin::Up).pauli(Axis::X1).pauli(Axis::X2).scale_rational(&c);
        assert_eq!(ck_extend_x2(&x1, &p).unwrap(), &x1 - &correction);
        assert!(ck_extend_x2(&mono(0, 1, 0, Spin::Up), &p).is_err());
        assert!(ck_extend_x2(&mono(0, 0, 1, Spin::Up), &p).is_err());
    }

    #[test]
    fn classical_ck_when_mu3_vanishes() {
        // For μ3 = 0 the series is the classical exp(−x3 σ3 D̃) truncation,
        // whose image is annihilated by the Dirac operator with T3 = ∂3.
        let p = Params::from_ratios([(1, 2), (1, 3), (0, 1)]).unwrap();
        let m = ck_extend_x2(&mono(2, 0, 0, Spin::Up), &p).unwrap();
        let ext = ck_extend_x3(&m, &p).unwrap();
        let classical = partial_dirac(&[Axis::X1, Axis::X2], &p) + LinOp::pauli(Axis::X3) * LinOp::partial(Axis::X3);
        assert!(classical.apply(&ext).is_zero());
        assert_eq!(ext.restrict_zero(Axis::X3), m);
    }

    #[test]
    fn restriction_recovers_input() {
        let p = params();
        for e in MultiIndex::of_degree(3).into_iter().filter(|e| e.0[2] == 0) {
            let f = SpinorPoly::basis(e, Spin::Down);
            assert_eq!(ck_extend_x3(&f, &p).unwrap().restrict_zero(Axis::X3), f);
        }
    }

    #[test]
    fn basis_examples() {
        let p = params();
        let b0 = monogenic_basis(0, &p);
        assert_eq!(b0.len(), 2);
        assert_eq!(b0.get(0, Spin::Up), &SpinorPoly::chi_plus());
        assert_eq!(b0.get(0, Spin::Down), &SpinorPoly::chi_minus());

        let b2 = monogenic_basis(2, &p);
        let value = g(int(2) + p.mu_sum() + int(1));
        for e in &b2.elements {
            assert!(dirac(&p).apply(&e.poly).is_zero());
            assert_eq!(gamma_plus_one(&p).apply(&e.poly), e.poly.scale(&value));
        }
        assert_eq!(b2.coefficient_matrix().rank(), 6);

        let b3 = monogenic_basis(3, &p);
        let k3 = bi_generator(&p, Axis::X3);
        let z3 = involution_z(Axis::X3);
        for e in &b3.elements {
            let lambda = sign_pow(e.k as i64) * (int(e.k as i64) + p.mu1() + p.mu2() + rat(1, 2));
            assert_eq!(k3.apply(&e.poly), e.poly.scale(&g(lambda)));
            let z = int(e.sign.sign()) * sign_pow(3 - e.k as i64);
            assert_eq!(z3.apply(&e.poly), e.poly.scale(&g(z)));
        }
    }

    #[test]
    fn fischer_examples() {
        let p = params();
        let parts = fischer_decompose(&SpinorPoly::chi_plus(), &p).unwrap();
        assert_eq!(parts.components, vec![SpinorPoly::chi_plus()]);

        let x1 = mono(1, 0, 0, Spin::Up);
        let parts = fischer_decompose(&x1, &p).unwrap();
        let c = (int(1) + p.mu1() * int(2)) / (p.gamma3() * int(2));
        let m0 = SpinorPoly::chi_plus().pauli(Axis::X1).scale_rational(&c);
        let m1 = &x1 - &x_vec().apply(&m0);
        assert_eq!(parts.components, vec![m1, m0]);
        assert!(components_monogenic(&parts, &p));

        let dims: usize = (0..=4).map(|j| 2 * (j + 1)).sum();
        assert_eq!(dims, 2 * 15);
    }
}
