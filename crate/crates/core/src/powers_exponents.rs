//! Hopf automorphisms, (twisted) Hopf powers and (twisted) exponents.
//!
//! The n-th twisted power map `x ↦ Σ x₁(τ·x₂)⋯(τ^{n−1}·x_n)` is the
//! convolution product `id * τ * τ² * ⋯ * τ^{n−1}`, computed with the
//! recurrence `Q₁ = id`, `Q_{k+1} = Q_k * τ^k` on d×d matrices. Tensor powers
//! of the algebra are never formed.

use std::collections::BTreeMap;

use num::integer::{gcd, lcm};

use crate::error::{HopfError, Result};
use crate::exact_math::{Matrix, Scalar, Vector};
use crate::hopf_core::FiniteHopfAlgebra;
use crate::integrals::is_semisimple;
use crate::smash::{HopfAction, SmashCoproduct};

/// Search cap used by [`verify_automorphism`] when computing the order.
pub const DEFAULT_ORDER_CAP: u64 = 1024;

/// A verified Hopf automorphism with its finite multiplicative order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAutomorphism {
    matrix: Matrix,
    order: u64,
}

impl HopfAutomorphism {
    pub fn identity(h: &FiniteHopfAlgebra) -> Self {
        HopfAutomorphism {
            matrix: h.identity(),
            order: 1,
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_identity(&self) -> bool {
        self.order == 1
    }

    /// τ^k for any integer k (negative powers go through the order).
    pub fn power(&self, k: i64) -> HopfAutomorphism {
        let r = self.order as i64;
        let e = k.rem_euclid(r) as u64;
        HopfAutomorphism {
            matrix: self.matrix.pow(e),
            order: self.order / gcd(self.order, e),
        }
    }

    pub fn inverse(&self) -> HopfAutomorphism {
        self.power(-1)
    }

    /// `self ∘ other`; only meaningful when the two commute or when the
    /// caller knows the order of the product, so it is recomputed.
    pub fn compose(&self, other: &HopfAutomorphism, cap: u64) -> Result<HopfAutomorphism> {
        let matrix = self.matrix.mul(&other.matrix);
        let order = matrix_order(&matrix, cap)?;
        Ok(HopfAutomorphism { matrix, order })
    }

    pub fn apply(&self, a: &[Scalar]) -> Vector {
        self.matrix.mul_vec(a)
    }
}

fn matrix_order(m: &Matrix, cap: u64) -> Result<u64> {
    let mut p = m.clone();
    for k in 1..=cap {
        if p.is_identity() {
            return Ok(k);
        }
        p = p.mul(m);
    }
    Err(HopfError::OrderCapExceeded(cap))
}

/// Checks that `m` is a Hopf automorphism and computes its order.
pub fn verify_automorphism(h: &FiniteHopfAlgebra, m: &Matrix) -> Result<HopfAutomorphism> {
    verify_automorphism_with_cap(h, m, DEFAULT_ORDER_CAP)
}

pub fn verify_automorphism_with_cap(
    h: &FiniteHopfAlgebra,
    m: &Matrix,
    cap: u64,
) -> Result<HopfAutomorphism> {
    let d = h.dim();
    if m.rows() != d || m.cols() != d {
        return Err(HopfError::DimensionMismatch(format!(
            "automorphism matrix is {}x{}, algebra dimension {d}",
            m.rows(),
            m.cols()
        )));
    }
    h.field().check_same(m.field())?;
    let fail = |msg: String| Err(HopfError::NotAutomorphism(msg));
    if m.rank() < d {
        return fail("matrix is not invertible".into());
    }
    if m.mul_vec(h.unit()) != *h.unit() {
        return fail("τ(1) ≠ 1".into());
    }
    if m.vec_mul(h.counit()) != *h.counit() {
        return fail("ε∘τ ≠ ε".into());
    }
    let images: Vec<Vector> = (0..d).map(|j| m.column(j)).collect();
    let labels = h.labels();
    for i in 0..d {
        for j in 0..d {
            let prod = h.mul(&h.basis_element(i), &h.basis_element(j));
            if m.mul_vec(&prod) != h.mul(&images[i], &images[j]) {
                return fail(format!("τ({0}·{1}) ≠ τ({0})·τ({1})", labels[i], labels[j]));
            }
        }
    }
    for i in 0..d {
        let direct = h.coproduct(&images[i]);
        let mut via = BTreeMap::new();
        for (j, k, c) in h.basis_coproduct(i) {
            for (p, u) in images[*j].iter().enumerate() {
                if u.is_zero() {
                    continue;
                }
                for (q, v) in images[*k].iter().enumerate() {
                    if v.is_zero() {
                        continue;
                    }
                    let e: &mut Scalar = via.entry((p, q)).or_insert_with(|| h.field().zero());
                    *e += &(&(c * u) * v);
                }
            }
        }
        via.retain(|_, v: &mut Scalar| !v.is_zero());
        if direct != via {
            return fail(format!("Δ(τ({0})) ≠ (τ⊗τ)Δ({0})", labels[i]));
        }
    }
    let order = matrix_order(m, cap)?;
    Ok(HopfAutomorphism {
        matrix: m.clone(),
        order,
    })
}

fn check_divides(order: u64, n: u64) -> Result<()> {
    if n == 0 || !n.is_multiple_of(order) {
        Err(HopfError::OrderDoesNotDivide { order, n })
    } else {
        Ok(())
    }
}

/// Matrix of `x ↦ Σ x₁(τ·x₂)⋯(τ^{n−1}·x_n)` without requiring that the
/// order of τ divides n. The Sweedler sum is well defined for every n ≥ 1;
/// smash coproduct powers need it for twists whose order does not divide n.
pub fn twisted_power_endo_unchecked(h: &FiniteHopfAlgebra, n: u64, tau: &Matrix) -> Matrix {
    assert!(n >= 1, "Hopf powers start at n = 1");
    let mut q = h.identity();
    let mut tau_k = h.identity();
    for _ in 1..n {
        tau_k = tau_k.mul(tau);
        q = h.convolve(&q, &tau_k);
    }
    q
}

/// The matrix Q_n of `x ↦ x^[n,τ]`.
pub fn twisted_power_endo(h: &FiniteHopfAlgebra, n: u64, tau: &HopfAutomorphism) -> Result<Matrix> {
    check_divides(tau.order(), n)?;
    Ok(twisted_power_endo_unchecked(h, n, tau.matrix()))
}

/// x^[n,τ].
pub fn twisted_power(
    h: &FiniteHopfAlgebra,
    x: &[Scalar],
    n: u64,
    tau: &HopfAutomorphism,
) -> Result<Vector> {
    Ok(twisted_power_endo(h, n, tau)?.mul_vec(x))
}

/// The matrix of `x ↦ x^[n]`.
pub fn hopf_power_endo(h: &FiniteHopfAlgebra, n: u64) -> Matrix {
    twisted_power_endo_unchecked(h, n, &h.identity())
}

/// x^[n]: apply Δ n−1 times, then multiply.
pub fn hopf_power(h: &FiniteHopfAlgebra, x: &[Scalar], n: u64) -> Vector {
    hopf_power_endo(h, n).mul_vec(x)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExponentOutcome {
    Found(u64),
    NotFoundUpTo(u64),
}

impl ExponentOutcome {
    pub fn found(self) -> Option<u64> {
        match self {
            ExponentOutcome::Found(n) => Some(n),
            ExponentOutcome::NotFoundUpTo(_) => None,
        }
    }
}

impl std::fmt::Display for ExponentOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExponentOutcome::Found(n) => write!(f, "Found({n})"),
            ExponentOutcome::NotFoundUpTo(b) => write!(f, "NotFoundUpTo({b})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExponentResult {
    pub outcome: ExponentOutcome,
    /// Set when S² ≠ id, where the untwisted definition is not the
    /// standard one; the bounded search still runs.
    pub antipode_warning: bool,
}

/// Default search bound: 16 · dim(H) · order(τ).
pub fn default_bound(h: &FiniteHopfAlgebra, tau: &HopfAutomorphism) -> u64 {
    16 * h.dim() as u64 * tau.order()
}

fn antipode_squared_not_identity(h: &FiniteHopfAlgebra) -> bool {
    !h.antipode().mul(h.antipode()).is_identity()
}

/// Smallest n ≤ bound with x^[n] = ε(x)1 for all x.
pub fn exponent(h: &FiniteHopfAlgebra, bound: u64) -> ExponentResult {
    twisted_exponent(h, &HopfAutomorphism::identity(h), bound)
}

/// Smallest multiple n of order(τ), n ≤ bound, with x^[n,τ] = ε(x)1.
pub fn twisted_exponent(h: &FiniteHopfAlgebra, tau: &HopfAutomorphism, bound: u64) -> ExponentResult {
    let r = tau.order();
    let target = h.unit_counit();
    let powers: Vec<Matrix> = (0..r).map(|k| tau.matrix().pow(k)).collect();
    let mut q = h.identity();
    let mut outcome = ExponentOutcome::NotFoundUpTo(bound);
    for n in 1..=bound {
        if n > 1 {
            q = h.convolve(&q, &powers[((n - 1) % r) as usize]);
        }
        if n % r == 0 && q == target {
            outcome = ExponentOutcome::Found(n);
            break;
        }
    }
    ExponentResult {
        outcome,
        antipode_warning: antipode_squared_not_identity(h),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Q38Verdict {
    Agree,
    PotentialCounterexample,
    /// Every search hit the bound; nothing can be concluded.
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct CoprimePowerReport {
    pub order: u64,
    pub bound: u64,
    /// `(m, exp_{τ^m})` for every m in 1..=order coprime to order.
    pub rows: Vec<(u64, ExponentOutcome)>,
    pub verdict: Q38Verdict,
}

/// For every m coprime to n = order(τ), computes exp_{τ^m}(H) and compares
/// with exp_τ(H). Disagreement is reported, never raised as an error.
pub fn coprime_power_experiment(
    h: &FiniteHopfAlgebra,
    tau: &HopfAutomorphism,
    bound: u64,
) -> CoprimePowerReport {
    let n = tau.order();
    let rows: Vec<(u64, ExponentOutcome)> = (1..=n)
        .filter(|&m| gcd(m, n) == 1)
        .map(|m| (m, twisted_exponent(h, &tau.power(m as i64), bound).outcome))
        .collect();
    let base = rows[0].1;
    let verdict = if rows.iter().all(|(_, o)| o.found().is_none()) {
        Q38Verdict::Inconclusive
    } else if rows.iter().all(|(_, o)| *o == base) {
        Q38Verdict::Agree
    } else {
        Q38Verdict::PotentialCounterexample
    };
    CoprimePowerReport {
        order: n,
        bound,
        rows,
        verdict,
    }
}

/// `S(x^[n,τ]) = τ⁻¹·(S(x)^[n,τ⁻¹])` for all basis x, as a matrix identity.
pub fn lemma36_check(h: &FiniteHopfAlgebra, tau: &HopfAutomorphism, n: u64) -> Result<bool> {
    let inv = tau.inverse();
    let s = h.antipode();
    let left = s.mul(&twisted_power_endo(h, n, tau)?);
    let right = inv.matrix().mul(&twisted_power_endo(h, n, &inv)?).mul(s);
    Ok(left == right)
}

/// `ε(x^[n,τ]) = ε(x)` for all basis x.
pub fn counit_check(h: &FiniteHopfAlgebra, tau: &HopfAutomorphism, n: u64) -> Result<bool> {
    let q = twisted_power_endo(h, n, tau)?;
    Ok(q.vec_mul(h.counit()) == *h.counit())
}

/// For m = 1..=max_m: `Q_{m·r} = uε` iff exp_τ(H) divides m·r.
/// Returns `None` if the exponent is not found within `bound`.
pub fn prop32_check(
    h: &FiniteHopfAlgebra,
    tau: &HopfAutomorphism,
    max_m: u64,
    bound: u64,
) -> Option<bool> {
    let e = twisted_exponent(h, tau, bound).outcome.found()?;
    let r = tau.order();
    let target = h.unit_counit();
    Some((1..=max_m).all(|m| {
        let q = twisted_power_endo_unchecked(h, m * r, tau.matrix());
        (q == target) == (m * r).is_multiple_of(e)
    }))
}

/// Power formula on a smash coproduct, for all basis elements:
/// `(a ♮ p_x)^[n] = Σ_{zⁿ = x} a^[n, z⁻¹] ♮ p_z`.
pub fn lemma33_check(k: &SmashCoproduct, n: u64) -> bool {
    let kalg = k.algebra();
    let action = k.action();
    let a = action.algebra();
    let g = action.group();
    let left = hopf_power_endo(kalg, n);
    let twisted: Vec<Matrix> = (0..g.order())
        .map(|z| twisted_power_endo_unchecked(a, n, action.aut(g.inv(z)).matrix()))
        .collect();
    for x in 0..g.order() {
        for i in 0..a.dim() {
            let mut right = kalg.zero_element();
            for z in (0..g.order()).filter(|&z| g.pow(z, n) == x) {
                let part = twisted[z].column(i);
                let placed = k.embed(&part, z);
                for (r, v) in right.iter_mut().zip(&placed) {
                    *r += v;
                }
            }
            if left.column(k.index(i, x)) != right {
                return false;
            }
        }
    }
    true
}

#[derive(Clone, Debug)]
pub struct Theorem34Report {
    pub group_exponent: u64,
    /// `(z, exp_z(A))` for every group element z (z = identity gives exp(A)).
    pub twisted: Vec<(usize, ExponentOutcome)>,
    pub lcm: Option<u64>,
    pub smash_exponent: ExponentOutcome,
    pub equal: bool,
}

/// exp(A ♮ k^G) against lcm(exp(G), exp_z(A) for z ∈ G).
pub fn theorem34_check(k: &SmashCoproduct, bound: u64) -> Theorem34Report {
    let action: &HopfAction = k.action();
    let g = action.group();
    let group_exponent = g.exponent();
    let twisted: Vec<(usize, ExponentOutcome)> = (0..g.order())
        .map(|z| (z, twisted_exponent(action.algebra(), action.aut(z), bound).outcome))
        .collect();
    let lcm_value = twisted.iter().try_fold(group_exponent, |acc, (_, o)| {
        o.found().map(|e| lcm(acc, e))
    });
    let smash_exponent = exponent(k.algebra(), bound).outcome;
    let equal = lcm_value.is_some() && smash_exponent.found() == lcm_value;
    Theorem34Report {
        group_exponent,
        twisted,
        lcm: lcm_value,
        smash_exponent,
        equal,
    }
}

/// `exp_{τ⁻¹}(H)` alongside `exp_τ(H)`; the two agree.
pub fn inverse_exponent_check(
    h: &FiniteHopfAlgebra,
    tau: &HopfAutomorphism,
    bound: u64,
) -> (ExponentOutcome, ExponentOutcome) {
    (
        twisted_exponent(h, tau, bound).outcome,
        twisted_exponent(h, &tau.inverse(), bound).outcome,
    )
}

/// Whether the algebra satisfies the hypotheses under which the exponent is
/// the standard notion: semisimple, or at least S² = id.
pub fn exponent_hypotheses(h: &FiniteHopfAlgebra) -> Result<(bool, bool)> {
    Ok((is_semisimple(h)?, !antipode_squared_not_identity(h)))
}
