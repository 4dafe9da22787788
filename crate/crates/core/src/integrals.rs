//! Integrals of A and of A*, pairing normalization and semisimplicity.
//!
//! Integrals are found as one-dimensional kernels of stacked linear systems
//! and scaled so that their first nonzero coordinate is 1.

use crate::error::{HopfError, Result};
use crate::exact_math::{dot, scale_vector, Matrix, Scalar, Vector};
use crate::hopf_core::FiniteHopfAlgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// An integral of A together with an integral of A* paired to 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralPair {
    pub element: Vector,
    pub element_side: Side,
    pub functional: Vector,
    pub functional_side: Side,
}

fn one_dimensional(kernel: Vec<Vector>) -> Result<Vector> {
    if kernel.len() != 1 {
        return Err(HopfError::IntegralSpace(kernel.len()));
    }
    let v = kernel.into_iter().next().unwrap();
    Ok(first_coordinate_one(&v))
}

fn first_coordinate_one(v: &[Scalar]) -> Vector {
    match v.iter().find(|c| !c.is_zero()) {
        Some(lead) => scale_vector(v, &lead.inv().expect("nonzero")),
        None => v.to_vec(),
    }
}

/// Stacks the d matrices produced by `block` into one (d·d) × d system.
fn stacked(h: &FiniteHopfAlgebra, block: impl Fn(usize) -> Matrix) -> Matrix {
    let d = h.dim();
    let mut sys = Matrix::zeros(h.field(), d * d, d);
    for i in 0..d {
        let b = block(i);
        for (r, c, v) in b.entries() {
            sys.set(i * d + r, c, v.clone());
        }
    }
    sys
}

fn integral(h: &FiniteHopfAlgebra, side: Side) -> Result<Vector> {
    let id = h.identity();
    let sys = stacked(h, |i| {
        let mult = match side {
            Side::Left => h.left_mult_matrix(i),
            Side::Right => h.right_mult_matrix(i),
        };
        mult.sub(&id.scale(&h.counit()[i]))
    });
    one_dimensional(sys.kernel())
}

/// Nonzero Λ with `aΛ = ε(a)Λ` for all a.
pub fn left_integral(h: &FiniteHopfAlgebra) -> Result<Vector> {
    integral(h, Side::Left)
}

/// Nonzero Λ with `Λa = ε(a)Λ` for all a.
pub fn right_integral(h: &FiniteHopfAlgebra) -> Result<Vector> {
    integral(h, Side::Right)
}

/// Integral λ ∈ A* as a covector on the basis of A.
///
/// Right: `Σ λ(x₁) x₂ = λ(x)·1`. Left: `Σ x₁ λ(x₂) = λ(x)·1`.
pub fn dual_integral(h: &FiniteHopfAlgebra, side: Side) -> Result<Vector> {
    let d = h.dim();
    let unit = h.unit();
    // equation (i, t): coefficient of b_t in the defining identity at x = b_i
    let mut sys = Matrix::zeros(h.field(), d * d, d);
    for i in 0..d {
        for (j, k, c) in h.basis_coproduct(i) {
            let (unknown, t) = match side {
                Side::Right => (*j, *k),
                Side::Left => (*k, *j),
            };
            sys.add_at(i * d + t, unknown, c);
        }
        for (t, u) in unit.iter().enumerate() {
            if !u.is_zero() {
                sys.add_at(i * d + t, i, &-u);
            }
        }
    }
    one_dimensional(sys.kernel())
}

/// Rescales λ so that λ(Λ) = 1.
pub fn normalize_pair(
    element: &[Scalar],
    element_side: Side,
    functional: &[Scalar],
    functional_side: Side,
) -> Result<IntegralPair> {
    let pairing = dot(functional, element);
    if pairing.is_zero() {
        return Err(HopfError::DegeneratePairing);
    }
    let inv = pairing.inv()?;
    Ok(IntegralPair {
        element: element.to_vec(),
        element_side,
        functional: scale_vector(functional, &inv),
        functional_side,
    })
}

/// Integral pair with the given sides, normalized so that λ(Λ) = 1.
pub fn integral_pair(
    h: &FiniteHopfAlgebra,
    element_side: Side,
    functional_side: Side,
) -> Result<IntegralPair> {
    let element = integral(h, element_side)?;
    let functional = dual_integral(h, functional_side)?;
    normalize_pair(&element, element_side, &functional, functional_side)
}

/// Semisimplicity via ε(Λ) ≠ 0 (characteristic zero).
pub fn is_semisimple(h: &FiniteHopfAlgebra) -> Result<bool> {
    let lambda = left_integral(h)?;
    Ok(!h.apply_counit(&lambda).is_zero())
}

/// The integral with ε(Λ) = 1; fails for non-semisimple algebras.
pub fn normalized_integral(h: &FiniteHopfAlgebra) -> Result<Vector> {
    let lambda = left_integral(h)?;
    let eps = h.apply_counit(&lambda);
    if eps.is_zero() {
        return Err(HopfError::NotSemisimple);
    }
    Ok(scale_vector(&lambda, &eps.inv()?))
}
