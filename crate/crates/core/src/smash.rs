//! Finite groups acting by Hopf automorphisms and the smash coproduct
//! `K = A ♮ k^G`.
//!
//! `K` has the tensor-product algebra structure of `A ⊗ k^G` and
//!
//! ```text
//! Δ(a ♮ p_x) = Σ_y (a₁ ♮ p_y) ⊗ ((y⁻¹·a₂) ♮ p_{y⁻¹x})
//! ε(a ♮ p_x) = δ_{1,x} ε(a)
//! S(a ♮ p_x) = (x⁻¹·S(a)) ♮ p_{x⁻¹}
//! ```
//!
//! The basis element `a_i ♮ p_x` has flat index `x·dim(A) + i`, so each
//! component idempotent `1 ♮ p_x` lives in one contiguous block.

use crate::error::{HopfError, Result};
use crate::exact_math::{zero_vector, FieldSpec, Matrix, Scalar, Vector};
use crate::hopf_core::{FiniteHopfAlgebra, TensorEntry};
use crate::integrals::left_integral;
use crate::powers_exponents::{verify_automorphism, HopfAutomorphism};

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Vec<String>,
}

impl GroupTable {
    /// Validates closure, identity, inverses and associativity exhaustively.
    #[allow(clippy::needless_range_loop)]
    pub fn new(table: Vec<Vec<usize>>, identity: usize) -> Result<Self> {
        let n = table.len();
        let bad = |msg: String| Err(HopfError::InvalidGroup(msg));
        if n == 0 {
            return bad("empty group".into());
        }
        if identity >= n {
            return bad(format!("identity index {identity} out of range"));
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return bad(format!("row {a} has length {}, expected {n}", row.len()));
            }
            if let Some(&c) = row.iter().find(|&&c| c >= n) {
                return bad(format!("entry {c} in row {a} out of range"));
            }
        }
        for a in 0..n {
            if table[identity][a] != a || table[a][identity] != a {
                return bad(format!("{identity} is not an identity for {a}"));
            }
        }
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            match (0..n).find(|&b| table[a][b] == identity && table[b][a] == identity) {
                Some(b) => inverse.push(b),
                None => return bad(format!("element {a} has no inverse")),
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return bad(format!("associativity fails at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        let labels = (0..n).map(|i| i.to_string()).collect();
        Ok(GroupTable {
            table,
            identity,
            inverse,
            labels,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order(), "one label per element");
        self.labels = labels;
        self
    }

    /// The cyclic group C_n; element k stands for the k-th power of a generator.
    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let labels = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        GroupTable::new(table, 0)
            .expect("cyclic table is a group")
            .with_labels(labels)
    }

    /// S₃ as permutations of {0,1,2} in lexicographic order of their images,
    /// composed as functions: (στ)(i) = σ(τ(i)).
    pub fn symmetric_group_3() -> Self {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let table = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| index([s[t[0]], s[t[1]], s[t[2]]]))
                    .collect()
            })
            .collect();
        let labels = ["e", "(12)", "(01)", "(012)", "(021)", "(02)"]
            .map(String::from)
            .to_vec();
        GroupTable::new(table, 0)
            .expect("S3 table is a group")
            .with_labels(labels)
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn pow(&self, a: usize, n: u64) -> usize {
        let mut acc = self.identity;
        for _ in 0..n {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> u64 {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u64 {
        (0..self.order())
            .map(|a| self.element_order(a))
            .fold(1, num::integer::lcm)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

/// [`GroupTable::cyclic`].
pub fn cyclic_group(n: usize) -> GroupTable {
    GroupTable::cyclic(n)
}

/// [`GroupTable::symmetric_group_3`].
pub fn symmetric_group_3() -> GroupTable {
    GroupTable::symmetric_group_3()
}

fn validated(h: FiniteHopfAlgebra) -> FiniteHopfAlgebra {
    h.validated()
        .unwrap_or_else(|e| panic!("construction produced an invalid Hopf algebra: {e}"))
}

/// The group algebra kG: Δg = g⊗g, ε(g) = 1, S(g) = g⁻¹.
pub fn group_algebra(g: &GroupTable, field: &FieldSpec) -> FiniteHopfAlgebra {
    let n = g.order();
    let one = field.one();
    let mut mult = Vec::new();
    for a in 0..n {
        for b in 0..n {
            mult.push(TensorEntry::new(a, b, g.mul(a, b), one.clone()));
        }
    }
    let comult: Vec<_> = (0..n).map(|a| TensorEntry::new(a, a, a, one.clone())).collect();
    let mut antipode = Matrix::zeros(field, n, n);
    for a in 0..n {
        antipode.set(g.inv(a), a, one.clone());
    }
    let mut unit = zero_vector(field, n);
    unit[g.identity()] = one.clone();
    validated(
        FiniteHopfAlgebra::new(
            format!("kG[{n}]"),
            field,
            g.labels().to_vec(),
            mult,
            comult,
            unit,
            vec![one; n],
            antipode,
        )
        .expect("group algebra data is well formed"),
    )
}

/// The dual group algebra k^G on the basis {p_x}.
pub fn dual_group_algebra(g: &GroupTable, field: &FieldSpec) -> FiniteHopfAlgebra {
    let n = g.order();
    let one = field.one();
    let mult: Vec<_> = (0..n).map(|x| TensorEntry::new(x, x, x, one.clone())).collect();
    // Δ(p_x) = Σ_y p_y ⊗ p_{y⁻¹x}
    let mut comult = Vec::new();
    for x in 0..n {
        for y in 0..n {
            comult.push(TensorEntry::new(x, y, g.mul(g.inv(y), x), one.clone()));
        }
    }
    let mut counit = zero_vector(field, n);
    counit[g.identity()] = one.clone();
    let mut antipode = Matrix::zeros(field, n, n);
    for x in 0..n {
        antipode.set(g.inv(x), x, one.clone());
    }
    validated(
        FiniteHopfAlgebra::new(
            format!("k^G[{n}]"),
            field,
            g.labels().iter().map(|l| format!("p_{l}")).collect(),
            mult,
            comult,
            vec![one; n],
            counit,
            antipode,
        )
        .expect("dual group algebra data is well formed"),
    )
}

/// A finite group acting on A by Hopf automorphisms.
#[derive(Clone, Debug)]
pub struct HopfAction {
    algebra: FiniteHopfAlgebra,
    group: GroupTable,
    auts: Vec<HopfAutomorphism>,
}

impl HopfAction {
    pub fn algebra(&self) -> &FiniteHopfAlgebra {
        &self.algebra
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn aut(&self, x: usize) -> &HopfAutomorphism {
        &self.auts[x]
    }

    pub fn automorphisms(&self) -> &[HopfAutomorphism] {
        &self.auts
    }

    /// x·a.
    pub fn act(&self, x: usize, a: &[Scalar]) -> Vector {
        self.auts[x].apply(a)
    }
}

/// Verifies each matrix as a Hopf automorphism, then the identity and
/// homomorphism laws `1·a = a`, `x·(y·a) = (xy)·a`.
pub fn verify_action(
    algebra: &FiniteHopfAlgebra,
    group: &GroupTable,
    matrices: &[Matrix],
) -> Result<HopfAction> {
    if matrices.len() != group.order() {
        return Err(HopfError::InvalidAction(format!(
            "{} matrices for a group of order {}",
            matrices.len(),
            group.order()
        )));
    }
    let mut auts = Vec::with_capacity(matrices.len());
    for (x, m) in matrices.iter().enumerate() {
        let aut = verify_automorphism(algebra, m).map_err(|e| {
            HopfError::InvalidAction(format!("element {}: {e}", group.labels()[x]))
        })?;
        auts.push(aut);
    }
    if !auts[group.identity()].matrix().is_identity() {
        return Err(HopfError::InvalidAction(
            "identity element does not act trivially".into(),
        ));
    }
    for x in 0..group.order() {
        for y in 0..group.order() {
            let composed = auts[x].matrix().mul(auts[y].matrix());
            if composed != *auts[group.mul(x, y)].matrix() {
                return Err(HopfError::InvalidAction(format!(
                    "homomorphism law fails: {0}·({1}·a) ≠ ({0}{1})·a",
                    group.labels()[x],
                    group.labels()[y]
                )));
            }
        }
    }
    Ok(HopfAction {
        algebra: algebra.clone(),
        group: group.clone(),
        auts,
    })
}

/// The cyclic group ⟨τ⟩ acting through powers of τ; element k acts by τ^k.
pub fn cyclic_action(algebra: &FiniteHopfAlgebra, tau: &HopfAutomorphism) -> Result<HopfAction> {
    let r = tau.order() as usize;
    let group = GroupTable::cyclic(r);
    let matrices: Vec<Matrix> = (0..r).map(|k| tau.matrix().pow(k as u64)).collect();
    verify_action(algebra, &group, &matrices)
}

/// The smash coproduct `A ♮ k^G` with its index bookkeeping.
#[derive(Clone, Debug)]
pub struct SmashCoproduct {
    algebra: FiniteHopfAlgebra,
    action: HopfAction,
    integral: Vector,
}

impl SmashCoproduct {
    pub fn algebra(&self) -> &FiniteHopfAlgebra {
        &self.algebra
    }

    pub fn action(&self) -> &HopfAction {
        &self.action
    }

    pub fn base(&self) -> &FiniteHopfAlgebra {
        &self.action.algebra
    }

    pub fn group(&self) -> &GroupTable {
        &self.action.group
    }

    /// Flat index of `a_i ♮ p_x`.
    pub fn index(&self, i: usize, x: usize) -> usize {
        x * self.base().dim() + i
    }

    /// Inverse of [`SmashCoproduct::index`].
    pub fn split(&self, index: usize) -> (usize, usize) {
        let d = self.base().dim();
        (index % d, index / d)
    }

    /// `a ♮ p_x` for an element a of A.
    pub fn embed(&self, a: &[Scalar], x: usize) -> Vector {
        let d = self.base().dim();
        let mut v = self.algebra.zero_element();
        v[x * d..(x + 1) * d].clone_from_slice(a);
        v
    }

    /// `a ♮ 1 = Σ_x a ♮ p_x`.
    pub fn embed_all(&self, a: &[Scalar]) -> Vector {
        let mut v = Vec::with_capacity(self.algebra.dim());
        for _ in 0..self.group().order() {
            v.extend_from_slice(a);
        }
        v
    }

    /// The idempotent `1_A ♮ p_x`.
    pub fn component_idempotent(&self, x: usize) -> Vector {
        self.embed(self.base().unit(), x)
    }

    /// Λ_K = Λ_A ♮ p₁ with Λ_A the left integral of A.
    pub fn integral(&self) -> &Vector {
        &self.integral
    }

    /// Replaces the structure of K without re-validation; for mutation tests.
    #[doc(hidden)]
    pub fn with_algebra_unchecked(&self, algebra: FiniteHopfAlgebra) -> SmashCoproduct {
        SmashCoproduct {
            algebra,
            ..self.clone()
        }
    }
}

/// Builds `K = A ♮ k^G` and runs the full axiom suite on it.
pub fn smash_coproduct(action: &HopfAction) -> Result<SmashCoproduct> {
    let a = &action.algebra;
    let g = &action.group;
    let field = a.field();
    let d = a.dim();
    let n = g.order();
    let idx = |i: usize, x: usize| x * d + i;

    let mut labels = Vec::with_capacity(d * n);
    for x in 0..n {
        for l in a.labels() {
            labels.push(format!("{l} ♮ p_{}", g.labels()[x]));
        }
    }

    let mut mult = Vec::new();
    for x in 0..n {
        for i in 0..d {
            for j in 0..d {
                for (k, c) in a.basis_product(i, j) {
                    mult.push(TensorEntry::new(idx(i, x), idx(j, x), idx(*k, x), c.clone()));
                }
            }
        }
    }

    let mut comult = Vec::new();
    for x in 0..n {
        for i in 0..d {
            for y in 0..n {
                let yinv = g.inv(y);
                let twist = action.auts[yinv].matrix();
                let target = g.mul(yinv, x);
                for (j, k, c) in a.basis_coproduct(i) {
                    for t in 0..d {
                        let m = twist.get(t, *k);
                        if !m.is_zero() {
                            comult.push(TensorEntry::new(
                                idx(i, x),
                                idx(*j, y),
                                idx(t, target),
                                c * m,
                            ));
                        }
                    }
                }
            }
        }
    }

    let mut unit = Vec::with_capacity(d * n);
    for _ in 0..n {
        unit.extend_from_slice(a.unit());
    }
    let mut counit = zero_vector(field, d * n);
    counit[idx(0, g.identity())..idx(0, g.identity()) + d].clone_from_slice(a.counit());

    let mut antipode = Matrix::zeros(field, d * n, d * n);
    for x in 0..n {
        let xinv = g.inv(x);
        let image = action.auts[xinv].matrix().mul(a.antipode());
        for (t, i, c) in image.entries() {
            antipode.set(idx(t, xinv), idx(i, x), c.clone());
        }
    }

    let k = FiniteHopfAlgebra::new(
        format!("{} ♮ k^G[{n}]", a.name()),
        field,
        labels,
        mult,
        comult,
        unit,
        counit,
        antipode,
    )?
    .validated()?;

    let lambda_a = left_integral(a)?;
    let mut integral = k.zero_element();
    integral[idx(0, g.identity())..idx(0, g.identity()) + d].clone_from_slice(&lambda_a);
    Ok(SmashCoproduct {
        algebra: k,
        action: action.clone(),
        integral,
    })
}

/// The smash product Hopf algebra `A* # kG` on the basis `a_i* # x`
/// (flat index `x·dim(A) + i`).
///
/// Multiplication `(f # x)(h # y) = f·(x·h) # xy` with `(x·h)(a) = h(x⁻¹·a)`;
/// tensor-product coalgebra.
pub fn smash_product(action: &HopfAction) -> Result<FiniteHopfAlgebra> {
    let a = &action.algebra;
    let g = &action.group;
    let dual = a.dual();
    let field = a.field();
    let d = a.dim();
    let n = g.order();
    let idx = |i: usize, x: usize| x * d + i;

    // x·a_l* = Σ_i M_{x⁻¹}[l][i] a_i*
    let act_dual = |x: usize, l: usize| -> Vector { action.auts[g.inv(x)].matrix().row(l) };

    let mut labels = Vec::with_capacity(d * n);
    for x in 0..n {
        for l in dual.labels() {
            labels.push(format!("{l} # {}", g.labels()[x]));
        }
    }

    let mut mult = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let xy = g.mul(x, y);
            for l in 0..d {
                let moved = act_dual(x, l);
                for j in 0..d {
                    for (i, m) in moved.iter().enumerate() {
                        if m.is_zero() {
                            continue;
                        }
                        for (t, c) in dual.basis_product(j, i) {
                            mult.push(TensorEntry::new(idx(j, x), idx(l, y), idx(*t, xy), m * c));
                        }
                    }
                }
            }
        }
    }

    let mut comult = Vec::new();
    for x in 0..n {
        for i in 0..d {
            for (j, k, c) in dual.basis_coproduct(i) {
                comult.push(TensorEntry::new(idx(i, x), idx(*j, x), idx(*k, x), c.clone()));
            }
        }
    }

    let mut unit = zero_vector(field, d * n);
    unit[idx(0, g.identity())..idx(0, g.identity()) + d].clone_from_slice(dual.unit());
    let mut counit = Vec::with_capacity(d * n);
    for _ in 0..n {
        counit.extend_from_slice(dual.counit());
    }

    // S(f # x) = (x⁻¹·S*(f)) # x⁻¹
    let mut antipode = Matrix::zeros(field, d * n, d * n);
    for x in 0..n {
        let xinv = g.inv(x);
        for i in 0..d {
            let s_f = dual.antipode().column(i);
            // (x⁻¹·f)_t = Σ_s f_s M_x[s][t]
            let moved = action.auts[x].matrix().vec_mul(&s_f);
            for (t, c) in moved.into_iter().enumerate() {
                if !c.is_zero() {
                    antipode.set(idx(t, xinv), idx(i, x), c);
                }
            }
        }
    }

    FiniteHopfAlgebra::new(
        format!("{} # k[{n}]", dual.name()),
        field,
        labels,
        mult,
        comult,
        unit,
        counit,
        antipode,
    )?
    .validated()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma21Report {
    pub mult_equal: bool,
    pub comult_equal: bool,
    pub unit_equal: bool,
    pub counit_equal: bool,
    pub antipode_equal: bool,
}

impl Lemma21Report {
    pub fn equal(&self) -> bool {
        self.mult_equal && self.comult_equal && self.unit_equal && self.counit_equal && self.antipode_equal
    }
}

/// Compares `(A ♮ k^G)*` with `A* # kG` under `(a_i ♮ p_x)* ↔ a_i* # x`.
pub fn lemma21_check(action: &HopfAction) -> Result<Lemma21Report> {
    let k = smash_coproduct(action)?;
    let dual = k.algebra().dual();
    let product = smash_product(action)?;
    Ok(Lemma21Report {
        mult_equal: dual.mult_entries() == product.mult_entries(),
        comult_equal: dual.comult_entries() == product.comult_entries(),
        unit_equal: dual.unit() == product.unit(),
        counit_equal: dual.counit() == product.counit(),
        antipode_equal: dual.antipode() == product.antipode(),
    })
}
