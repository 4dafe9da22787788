//! Frobenius–Schur indicators: regular twisted indicators ν_{m,τ}(H),
//! module indicators ν_m(V) and twisted module indicators ν_{m,x}(W).

use crate::error::{HopfError, Result};
use crate::exact_math::{dot, Matrix, Scalar};
use crate::hopf_core::FiniteHopfAlgebra;
use crate::integrals::{integral_pair, normalized_integral, Side};
use crate::powers_exponents::{twisted_power_endo, HopfAutomorphism};
use crate::representations::{
    character, component_rep, decompose_by_group, restrict_to_base, Representation,
};
use crate::smash::{HopfAction, SmashCoproduct};

/// Method tags used in [`IndicatorValue::methods`].
pub const TRACE: &str = "trace";
pub const LEFT_INTEGRAL: &str = "left-integral";
pub const RIGHT_PAIR: &str = "right-pair";
pub const LEFT_PAIR: &str = "left-pair";
pub const CHARACTER: &str = "character";

/// An indicator value and the formulas that produced it (all agreeing).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndicatorValue {
    pub value: Scalar,
    pub methods: Vec<&'static str>,
}

fn check_divides(tau: &HopfAutomorphism, m: u64) -> Result<()> {
    if m == 0 || !m.is_multiple_of(tau.order()) {
        Err(HopfError::OrderDoesNotDivide {
            order: tau.order(),
            n: m,
        })
    } else {
        Ok(())
    }
}

/// `P_{m−1,τ} = τ^{m−1} * τ^{m−2} * ⋯ * τ`, with `P₀ = uε`.
pub fn p_map(h: &FiniteHopfAlgebra, m: u64, tau: &HopfAutomorphism) -> Result<Matrix> {
    check_divides(tau, m)?;
    let mut p = h.unit_counit();
    for k in (1..m).rev() {
        p = h.convolve(&p, &tau.matrix().pow(k));
    }
    Ok(p)
}

/// ν_{m,τ}(H), evaluated four ways:
/// `Tr(S∘P_{m−1,τ})`, `λ(S(Λ)^[m,τ])` for a left integral Λ and right
/// integral λ, `λ_r(Λ_r^[m,τ])` for the right/right pair and
/// `λ_l(τ⁻¹·Λ_l^[m,τ⁻¹])` for the left/left pair.
pub fn regular_twisted_indicator(h: &FiniteHopfAlgebra, m: u64, tau: &HopfAutomorphism) -> Result<IndicatorValue> {
    let p = p_map(h, m, tau)?;
    let trace = h.antipode().mul(&p).trace()?;

    let q = twisted_power_endo(h, m, tau)?;
    let tau_inv = tau.inverse();
    let q_inv = if tau.is_identity() {
        q.clone()
    } else {
        twisted_power_endo(h, m, &tau_inv)?
    };

    let pair = integral_pair(h, Side::Left, Side::Right)?;
    let s_lambda = h.antipode().mul_vec(&pair.element);
    let left = dot(&pair.functional, &q.mul_vec(&s_lambda));

    let pair = integral_pair(h, Side::Right, Side::Right)?;
    let right = dot(&pair.functional, &q.mul_vec(&pair.element));

    let pair = integral_pair(h, Side::Left, Side::Left)?;
    let moved = tau_inv.apply(&q_inv.mul_vec(&pair.element));
    let left_left = dot(&pair.functional, &moved);

    for (name, v) in [(LEFT_INTEGRAL, &left), (RIGHT_PAIR, &right), (LEFT_PAIR, &left_left)] {
        if *v != trace {
            return Err(HopfError::Inconsistent(format!(
                "indicator formulas disagree: trace gives {trace}, {name} gives {v}"
            )));
        }
    }
    Ok(IndicatorValue {
        value: trace,
        methods: vec![TRACE, LEFT_INTEGRAL, RIGHT_PAIR, LEFT_PAIR],
    })
}

/// ν_m(V) = χ_V(Λ^[m]) for the normalized integral Λ of a semisimple H.
pub fn module_indicator(h: &FiniteHopfAlgebra, rep: &Representation, m: u64) -> Result<IndicatorValue> {
    twisted_module_indicator(h, rep, m, &HopfAutomorphism::identity(h))
}

/// ν_{m,x}(W) = χ_W(Λ^[m,x]) for the normalized integral Λ of a semisimple H.
pub fn twisted_module_indicator(
    h: &FiniteHopfAlgebra,
    rep: &Representation,
    m: u64,
    x: &HopfAutomorphism,
) -> Result<IndicatorValue> {
    check_divides(x, m)?;
    let lambda = normalized_integral(h)?;
    let power = twisted_power_endo(h, m, x)?.mul_vec(&lambda);
    Ok(IndicatorValue {
        value: character(rep, &power),
        methods: vec![CHARACTER],
    })
}

/// Both sides of an indicator identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndicatorIdentityReport {
    pub lhs: Scalar,
    pub rhs: Scalar,
    /// `(group element, contribution)` for every term of the right side.
    pub terms: Vec<(usize, Scalar)>,
}

impl IndicatorIdentityReport {
    pub fn equal(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// ν_m^K(M) against `Σ_{x^m = 1} ν_{m,x⁻¹}^A(M_x)`.
pub fn theorem41_check(k: &SmashCoproduct, rep: &Representation, m: u64) -> Result<IndicatorIdentityReport> {
    let lhs = module_indicator(k.algebra(), rep, m)?.value;
    let g = k.group();
    let a = k.base();
    let dec = decompose_by_group(k, rep)?;
    let mut rhs = a.field().zero();
    let mut terms = Vec::new();
    for comp in &dec.components {
        let x = comp.element;
        if comp.dim() == 0 || g.pow(x, m) != g.identity() {
            continue;
        }
        let mx = restrict_to_base(k, &component_rep(k, rep, comp)?);
        let v = twisted_module_indicator(a, &mx, m, k.action().aut(g.inv(x)))?.value;
        rhs += &v;
        terms.push((x, v));
    }
    Ok(IndicatorIdentityReport { lhs, rhs, terms })
}

/// ν_m(K) against `Σ_{g^m = 1} ν_{m,g}(A)` for `K = A ♮ k^G`.
pub fn theorem54_check(action: &HopfAction, m: u64) -> Result<IndicatorIdentityReport> {
    let k = crate::smash::smash_coproduct(action)?;
    let lhs = regular_twisted_indicator(k.algebra(), m, &HopfAutomorphism::identity(k.algebra()))?.value;
    let g = action.group();
    let a = action.algebra();
    let mut rhs = a.field().zero();
    let mut terms = Vec::new();
    for x in (0..g.order()).filter(|&x| g.pow(x, m) == g.identity()) {
        let v = regular_twisted_indicator(a, m, action.aut(x))?.value;
        rhs += &v;
        terms.push((x, v));
    }
    Ok(IndicatorIdentityReport { lhs, rhs, terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::FieldSpec;
    use crate::representations::{regular, trivial};
    use crate::smash::{group_algebra, GroupTable};

    #[test]
    fn p_map_small_cases() {
        let f = FieldSpec::rationals();
        let h = group_algebra(&GroupTable::cyclic(3), &f);
        let id = HopfAutomorphism::identity(&h);
        assert_eq!(p_map(&h, 1, &id).unwrap(), h.unit_counit());
        assert!(p_map(&h, 2, &id).unwrap().is_identity());
        let p2 = p_map(&h, 3, &id).unwrap();
        // P₂(g) = g²
        assert_eq!(p2.column(1), h.basis_element(2));
    }

    #[test]
    fn regular_indicator_counts_square_roots_of_one() {
        let f = FieldSpec::rationals();
        for (g, expected) in [
            (GroupTable::cyclic(2), 2),
            (GroupTable::cyclic(3), 1),
            (GroupTable::symmetric_group_3(), 4),
        ] {
            let h = group_algebra(&g, &f);
            let id = HopfAutomorphism::identity(&h);
            let nu = regular_twisted_indicator(&h, 2, &id).unwrap();
            assert_eq!(nu.value, f.int(expected));
            assert_eq!(nu.methods.len(), 4);
            assert_eq!(module_indicator(&h, &regular(&h), 2).unwrap().value, f.int(expected));
        }
    }

    #[test]
    fn trivial_module_indicator_is_one() {
        let f = FieldSpec::rationals();
        let h = group_algebra(&GroupTable::symmetric_group_3(), &f);
        for m in 1..=4 {
            assert_eq!(module_indicator(&h, &trivial(&h), m).unwrap().value, f.one());
        }
    }
}
