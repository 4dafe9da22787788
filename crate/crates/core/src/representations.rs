//! Matrix representations, the group grading of K-modules, twists, tensor
//! and dual modules.

use crate::error::{HopfError, Result};
use crate::exact_math::{Matrix, Scalar, Vector};
use crate::hopf_core::FiniteHopfAlgebra;
use crate::smash::{HopfAction, SmashCoproduct};

/// One r×r matrix per basis element of the algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    algebra: String,
    rank: usize,
    matrices: Vec<Matrix>,
}

impl Representation {
    pub fn algebra_name(&self) -> &str {
        &self.algebra
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    /// ρ(a) for an element a given in coordinates.
    pub fn action(&self, a: &[Scalar]) -> Matrix {
        let field = self.matrices[0].field();
        let mut out = Matrix::zeros(field, self.rank, self.rank);
        for (c, m) in a.iter().zip(&self.matrices) {
            if !c.is_zero() {
                out = out.add(&m.scale(c));
            }
        }
        out
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Representation) -> Representation {
        assert_eq!(self.matrices.len(), other.matrices.len(), "same algebra");
        let r = self.rank + other.rank;
        let matrices = self
            .matrices
            .iter()
            .zip(&other.matrices)
            .map(|(a, b)| {
                let mut m = Matrix::zeros(a.field(), r, r);
                for (i, j, c) in a.entries() {
                    m.set(i, j, c.clone());
                }
                for (i, j, c) in b.entries() {
                    m.set(self.rank + i, self.rank + j, c.clone());
                }
                m
            })
            .collect();
        Representation {
            algebra: self.algebra.clone(),
            rank: r,
            matrices,
        }
    }
}

fn unchecked(h: &FiniteHopfAlgebra, rank: usize, matrices: Vec<Matrix>) -> Representation {
    Representation {
        algebra: h.name().to_string(),
        rank,
        matrices,
    }
}

/// Checks ρ(1) = I and ρ(b_i)ρ(b_j) = Σ_k c_ij^k ρ(b_k) for all i, j.
pub fn verify_representation(h: &FiniteHopfAlgebra, matrices: Vec<Matrix>) -> Result<Representation> {
    let bad = |msg: String| Err(HopfError::InvalidRepresentation(msg));
    if matrices.len() != h.dim() {
        return bad(format!("{} matrices for dimension {}", matrices.len(), h.dim()));
    }
    let rank = matrices.first().map_or(0, Matrix::rows);
    for (i, m) in matrices.iter().enumerate() {
        if m.rows() != rank || m.cols() != rank {
            return bad(format!("matrix for {} is not {rank}×{rank}", h.labels()[i]));
        }
        h.field().check_same(m.field())?;
    }
    let rep = unchecked(h, rank, matrices);
    if !rep.action(h.unit()).is_identity() {
        return bad("ρ(1) ≠ I".into());
    }
    for i in 0..h.dim() {
        for j in 0..h.dim() {
            let lhs = rep.matrices[i].mul(&rep.matrices[j]);
            let mut rhs = Matrix::zeros(h.field(), rank, rank);
            for (k, c) in h.basis_product(i, j) {
                rhs = rhs.add(&rep.matrices[*k].scale(c));
            }
            if lhs != rhs {
                return bad(format!(
                    "ρ({0})ρ({1}) ≠ ρ({0}·{1})",
                    h.labels()[i],
                    h.labels()[j]
                ));
            }
        }
    }
    Ok(rep)
}

/// b ↦ ε(b) on a one-dimensional space.
pub fn trivial(h: &FiniteHopfAlgebra) -> Representation {
    let matrices = h
        .counit()
        .iter()
        .map(|c| Matrix::from_rows(h.field(), &[vec![c.clone()]]))
        .collect();
    unchecked(h, 1, matrices)
}

/// Left multiplication on H itself.
pub fn regular(h: &FiniteHopfAlgebra) -> Representation {
    let matrices = (0..h.dim()).map(|i| h.left_mult_matrix(i)).collect();
    unchecked(h, h.dim(), matrices)
}

/// χ(a) = Tr ρ(a).
pub fn character(rep: &Representation, a: &[Scalar]) -> Scalar {
    rep.action(a).trace().expect("representation matrices are square")
}

/// Traces of ρ(b_i) for every basis element.
pub fn character_vector(rep: &Representation) -> Vector {
    rep.matrices
        .iter()
        .map(|m| m.trace().expect("square"))
        .collect()
}

/// One homogeneous component M_x = ρ(1♮p_x)M.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub element: usize,
    pub basis: Vec<Vector>,
}

impl Component {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// M = ⊕_x M_x, one entry per group element (possibly zero-dimensional).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDecomposition {
    pub components: Vec<Component>,
}

impl GradedDecomposition {
    pub fn dims(&self) -> Vec<usize> {
        self.components.iter().map(Component::dim).collect()
    }

    /// Group elements with a nonzero component.
    pub fn support(&self) -> Vec<usize> {
        self.components
            .iter()
            .filter(|c| c.dim() > 0)
            .map(|c| c.element)
            .collect()
    }
}

/// Images of the idempotents ρ(1♮p_x); checks orthogonality and that
/// they sum to the identity.
pub fn decompose_by_group(k: &SmashCoproduct, rep: &Representation) -> Result<GradedDecomposition> {
    let n = k.group().order();
    let idempotents: Vec<Matrix> = (0..n)
        .map(|x| rep.action(&k.component_idempotent(x)))
        .collect();
    let field = k.algebra().field();
    let mut total = Matrix::zeros(field, rep.rank, rep.rank);
    for (x, e) in idempotents.iter().enumerate() {
        for (y, f) in idempotents.iter().enumerate() {
            let prod = e.mul(f);
            let ok = if x == y { prod == *e } else { prod.is_zero() };
            if !ok {
                return Err(HopfError::InvalidRepresentation(format!(
                    "idempotents for {x} and {y} are not orthogonal"
                )));
            }
        }
        total = total.add(e);
    }
    if !total.is_identity() {
        return Err(HopfError::InvalidRepresentation(
            "component idempotents do not sum to the identity".into(),
        ));
    }
    let components = idempotents
        .iter()
        .enumerate()
        .map(|(x, e)| Component {
            element: x,
            basis: e.column_space(),
        })
        .collect();
    Ok(GradedDecomposition { components })
}

/// Restricted matrices `B⁻¹ρ(b)B` on the span of the columns of B.
fn restrict(rep: &Representation, basis: &[Vector], field: &crate::FieldSpec) -> Result<Vec<Matrix>> {
    let b = Matrix::from_columns(field, rep.rank, basis);
    rep.matrices
        .iter()
        .map(|m| {
            b.solve(&m.mul(&b)).ok_or_else(|| {
                HopfError::InvalidRepresentation("subspace is not invariant".into())
            })
        })
        .collect()
}

/// The A-module structure a ↦ ρ(a♮1) of a K-module.
pub fn restrict_to_base(k: &SmashCoproduct, rep: &Representation) -> Representation {
    let a = k.base();
    let matrices = (0..a.dim())
        .map(|i| rep.action(&k.embed_all(&a.basis_element(i))))
        .collect();
    unchecked(a, rep.rank, matrices)
}

/// The K-submodule M_x with its induced K-action.
pub fn component_rep(k: &SmashCoproduct, rep: &Representation, component: &Component) -> Result<Representation> {
    let matrices = restrict(rep, &component.basis, k.algebra().field())?;
    Ok(unchecked(k.algebra(), component.dim(), matrices))
}

/// Splits a K-module into its nonzero homogeneous summands `(x, M_x)`.
pub fn split_by_degree(k: &SmashCoproduct, rep: &Representation) -> Result<Vec<(usize, Representation)>> {
    let dec = decompose_by_group(k, rep)?;
    dec.components
        .iter()
        .filter(|c| c.dim() > 0)
        .map(|c| Ok((c.element, component_rep(k, rep, c)?)))
        .collect()
}

/// The unique degree of a module concentrated in one component.
pub fn single_degree(k: &SmashCoproduct, rep: &Representation) -> Result<usize> {
    match decompose_by_group(k, rep)?.support().as_slice() {
        [x] => Ok(*x),
        _ => Err(HopfError::NotSingleDegree),
    }
}

/// ^yM: `a ·_y m = (y⁻¹·a)·m`.
pub fn twist_rep(action: &HopfAction, rep: &Representation, y: usize) -> Representation {
    let a = action.algebra();
    let m = action.aut(action.group().inv(y)).matrix();
    let matrices = (0..a.dim()).map(|i| rep.action(&m.column(i))).collect();
    unchecked(a, rep.rank, matrices)
}

/// ρ(b) = Σ ρ₁(b₁) ⊗ ρ₂(b₂), with m⊗n at index `i·r₂ + j`.
pub fn tensor_rep(h: &FiniteHopfAlgebra, r1: &Representation, r2: &Representation) -> Representation {
    let r = r1.rank * r2.rank;
    let matrices = (0..h.dim())
        .map(|i| {
            let mut m = Matrix::zeros(h.field(), r, r);
            for (j, k, c) in h.basis_coproduct(i) {
                m = m.add(&r1.matrices[*j].kron(&r2.matrices[*k]).scale(c));
            }
            m
        })
        .collect();
    unchecked(h, r, matrices)
}

/// ρ*(b) = ρ(S(b))ᵀ in the dual basis.
pub fn dual_rep(h: &FiniteHopfAlgebra, rep: &Representation) -> Representation {
    let s = h.antipode();
    let matrices = (0..h.dim())
        .map(|i| rep.action(&s.column(i)).transpose())
        .collect();
    unchecked(h, rep.rank, matrices)
}

/// The K-module M with M_x = N and all other components zero:
/// `ρ_M(a ♮ p_y) = δ_{y,x} ρ_N(a)`.
pub fn extend_to_smash(k: &SmashCoproduct, n: &Representation, x: usize) -> Result<Representation> {
    let field = k.algebra().field();
    let zero = Matrix::zeros(field, n.rank, n.rank);
    let mut matrices = Vec::with_capacity(k.algebra().dim());
    for y in 0..k.group().order() {
        for m in &n.matrices {
            matrices.push(if y == x { m.clone() } else { zero.clone() });
        }
    }
    verify_representation(k.algebra(), matrices)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem71Pair {
    pub y: usize,
    pub z: usize,
    pub tensor_degree: Option<usize>,
    pub tensor_equal: bool,
    pub dual_degree: Option<usize>,
    pub dual_equal: bool,
}

impl Theorem71Pair {
    pub fn passed(&self) -> bool {
        self.tensor_equal && self.dual_equal
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem71Report {
    pub pairs: Vec<Theorem71Pair>,
}

impl Theorem71Report {
    pub fn all_passed(&self) -> bool {
        self.pairs.iter().all(Theorem71Pair::passed)
    }
}

fn check_pair(k: &SmashCoproduct, y: usize, m: &Representation, z: usize, n: &Representation) -> Result<Theorem71Pair> {
    let a = k.base();
    let g = k.group();
    let action = k.action();
    let m_a = restrict_to_base(k, m);
    let n_a = restrict_to_base(k, n);

    let t = tensor_rep(k.algebra(), m, n);
    let yz = g.mul(y, z);
    let tensor_degree = single_degree(k, &t).ok();
    let expected = extend_to_smash(k, &tensor_rep(a, &m_a, &twist_rep(action, &n_a, y)), yz)?;
    let tensor_equal = tensor_degree == Some(yz) && t == expected;

    let d = dual_rep(k.algebra(), m);
    let yinv = g.inv(y);
    let dual_degree = single_degree(k, &d).ok();
    let expected = extend_to_smash(k, &twist_rep(action, &dual_rep(a, &m_a), yinv), yinv)?;
    let dual_equal = dual_degree == Some(yinv) && d == expected;

    Ok(Theorem71Pair {
        y,
        z,
        tensor_degree,
        tensor_equal,
        dual_degree,
        dual_equal,
    })
}

/// `(M⊗N)_x = ⊕_{yz=x} M_y ⊗ ^yN_z` and `(M*)_x = ^x(M_{x⁻¹})*` as literal
/// matrix equalities, over every pair of homogeneous summands of M and N.
pub fn theorem71_check(k: &SmashCoproduct, m: &Representation, n: &Representation) -> Result<Theorem71Report> {
    let ms = split_by_degree(k, m)?;
    let ns = split_by_degree(k, n)?;
    let mut pairs = Vec::new();
    for (y, my) in &ms {
        for (z, nz) in &ns {
            pairs.push(check_pair(k, *y, my, *z, nz)?);
        }
    }
    Ok(Theorem71Report { pairs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::FieldSpec;
    use crate::smash::{group_algebra, GroupTable};

    #[test]
    fn regular_and_trivial_are_representations() {
        let f = FieldSpec::rationals();
        let h = group_algebra(&GroupTable::symmetric_group_3(), &f);
        let reg = regular(&h);
        verify_representation(&h, reg.matrices().to_vec()).unwrap();
        verify_representation(&h, trivial(&h).matrices().to_vec()).unwrap();
        assert_eq!(character(&reg, h.unit()), f.int(6));
    }

    #[test]
    fn rejects_non_multiplicative_matrices() {
        let f = FieldSpec::rationals();
        let h = group_algebra(&GroupTable::cyclic(2), &f);
        let m = vec![Matrix::identity(&f, 1), Matrix::from_ints(&f, &[&[2]])];
        let err = verify_representation(&h, m).unwrap_err();
        assert!(matches!(err, HopfError::InvalidRepresentation(msg) if msg.contains("ρ(g)ρ(g)")));
    }

    #[test]
    fn direct_sum_characters_add() {
        let f = FieldSpec::rationals();
        let h = group_algebra(&GroupTable::cyclic(3), &f);
        let (a, b) = (regular(&h), trivial(&h));
        let sum = a.direct_sum(&b);
        for i in 0..3 {
            let e = h.basis_element(i);
            assert_eq!(character(&sum, &e), character(&a, &e) + character(&b, &e));
        }
    }
}
