//! Finite-dimensional Hopf algebras given by structure constants.
//!
//! Basis `b_0 … b_{d-1}`. Products `b_i b_j = Σ_k c_{ij}^k b_k`, coproducts
//! `Δb_i = Σ_{j,k} e_i^{jk} b_j ⊗ b_k`. The tensor square uses the row-major
//! layout shared with [`Matrix::kron`]: `b_j ⊗ b_k` sits at index `j·d + k`.
//! Linear maps are matrices whose column `j` is the image of `b_j`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{HopfError, Result};
use crate::exact_math::{basis_vector, dot, zero_vector, FieldSpec, Matrix, Scalar, Vector};

/// One coefficient of a 3-tensor: `(i, j, k) ↦ c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: Scalar,
}

impl TensorEntry {
    pub fn new(i: usize, j: usize, k: usize, c: Scalar) -> Self {
        TensorEntry { i, j, k, c }
    }
}

/// Element of A ⊗ A as a sparse map `(j, k) ↦ coefficient`.
pub type TensorSquare = BTreeMap<(usize, usize), Scalar>;

fn accumulate<K: Ord>(map: &mut BTreeMap<K, Scalar>, key: K, value: Scalar) {
    if value.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(value);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += &value;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

fn prune<K: Ord>(mut map: BTreeMap<K, Scalar>) -> BTreeMap<K, Scalar> {
    map.retain(|_, v| !v.is_zero());
    map
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteHopfAlgebra {
    name: String,
    field: FieldSpec,
    labels: Vec<String>,
    /// `products[i * d + j]` lists `(k, c_{ij}^k)`, sorted by k, nonzero.
    products: Vec<Vec<(usize, Scalar)>>,
    /// `coproducts[i]` lists `(j, k, e_i^{jk})`, sorted, nonzero.
    coproducts: Vec<Vec<(usize, usize, Scalar)>>,
    unit: Vector,
    counit: Vector,
    antipode: Matrix,
}

impl FiniteHopfAlgebra {
    /// Assembles an algebra from raw structure data. Duplicate tensor
    /// entries are summed and zeros dropped. No axioms are checked here; see
    /// [`FiniteHopfAlgebra::verify_hopf_axioms`] and [`FiniteHopfAlgebra::validated`].
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        field: &FieldSpec,
        labels: Vec<String>,
        mult: impl IntoIterator<Item = TensorEntry>,
        comult: impl IntoIterator<Item = TensorEntry>,
        unit: Vector,
        counit: Vector,
        antipode: Matrix,
    ) -> Result<Self> {
        let d = labels.len();
        let check_index = |index: usize| {
            if index < d {
                Ok(())
            } else {
                Err(HopfError::IndexOutOfRange { index, dim: d })
            }
        };
        if unit.len() != d || counit.len() != d {
            return Err(HopfError::DimensionMismatch(format!(
                "unit/counit lengths {}/{} for dimension {d}",
                unit.len(),
                counit.len()
            )));
        }
        if antipode.rows() != d || antipode.cols() != d {
            return Err(HopfError::DimensionMismatch(format!(
                "antipode is {}x{}, dimension {d}",
                antipode.rows(),
                antipode.cols()
            )));
        }
        for s in unit.iter().chain(&counit) {
            field.check_same(s.field())?;
        }
        field.check_same(antipode.field())?;

        let mut prod_maps: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); d * d];
        for e in mult {
            check_index(e.i)?;
            check_index(e.j)?;
            check_index(e.k)?;
            field.check_same(e.c.field())?;
            accumulate(&mut prod_maps[e.i * d + e.j], e.k, e.c);
        }
        let mut coprod_maps: Vec<TensorSquare> = vec![BTreeMap::new(); d];
        for e in comult {
            check_index(e.i)?;
            check_index(e.j)?;
            check_index(e.k)?;
            field.check_same(e.c.field())?;
            accumulate(&mut coprod_maps[e.i], (e.j, e.k), e.c);
        }
        Ok(FiniteHopfAlgebra {
            name: name.into(),
            field: field.clone(),
            labels,
            products: prod_maps
                .into_iter()
                .map(|m| prune(m).into_iter().collect())
                .collect(),
            coproducts: coprod_maps
                .into_iter()
                .map(|m| prune(m).into_iter().map(|((j, k), c)| (j, k, c)).collect())
                .collect(),
            unit,
            counit,
            antipode,
        })
    }

    /// Runs the full axiom suite and returns the algebra only if every axiom
    /// holds.
    pub fn validated(self) -> Result<Self> {
        let report = self.verify_hopf_axioms();
        match report.first_failure() {
            None => Ok(self),
            Some(c) => Err(HopfError::Format(format!(
                "{}: {} fails{}",
                self.name,
                c.axiom,
                c.witness.as_deref().map(|w| format!(" ({w})")).unwrap_or_default()
            ))),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn counit(&self) -> &Vector {
        &self.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    /// `b_i b_j` as a sparse list of `(k, c_{ij}^k)`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.products[i * self.dim() + j]
    }

    /// `Δb_i` as a sparse list of `(j, k, e_i^{jk})`.
    pub fn basis_coproduct(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.coproducts[i]
    }

    pub fn mult_entries(&self) -> Vec<TensorEntry> {
        let d = self.dim();
        let mut out = Vec::new();
        for (ij, list) in self.products.iter().enumerate() {
            for (k, c) in list {
                out.push(TensorEntry::new(ij / d, ij % d, *k, c.clone()));
            }
        }
        out
    }

    pub fn comult_entries(&self) -> Vec<TensorEntry> {
        let mut out = Vec::new();
        for (i, list) in self.coproducts.iter().enumerate() {
            for (j, k, c) in list {
                out.push(TensorEntry::new(i, *j, *k, c.clone()));
            }
        }
        out
    }

    pub fn basis_element(&self, i: usize) -> Vector {
        basis_vector(&self.field, self.dim(), i)
    }

    pub fn zero_element(&self) -> Vector {
        zero_vector(&self.field, self.dim())
    }

    fn check_element(&self, a: &[Scalar]) -> Result<()> {
        if a.len() != self.dim() {
            return Err(HopfError::DimensionMismatch(format!(
                "element of length {} in algebra {} of dimension {}",
                a.len(),
                self.name,
                self.dim()
            )));
        }
        for s in a {
            self.field.check_same(s.field())?;
        }
        Ok(())
    }

    /// Product of two elements (bilinear extension of the structure constants).
    pub fn multiply(&self, a: &[Scalar], b: &[Scalar]) -> Result<Vector> {
        self.check_element(a)?;
        self.check_element(b)?;
        Ok(self.mul(a, b))
    }

    pub(crate) fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        let d = self.dim();
        let mut out = self.zero_element();
        for (p, ap) in a.iter().enumerate() {
            if ap.is_zero() {
                continue;
            }
            for (q, bq) in b.iter().enumerate() {
                if bq.is_zero() {
                    continue;
                }
                let coeff = ap * bq;
                for (k, c) in &self.products[p * d + q] {
                    out[*k] += &(&coeff * c);
                }
            }
        }
        out
    }

    /// `Δa` as a dense coordinate vector of length d², index `j·d + k`.
    pub fn comultiply(&self, a: &[Scalar]) -> Result<Vector> {
        self.check_element(a)?;
        let d = self.dim();
        let mut out = zero_vector(&self.field, d * d);
        for ((j, k), c) in self.coproduct(a) {
            out[j * d + k] = c;
        }
        Ok(out)
    }

    /// `Δa` as a sparse tensor.
    pub fn coproduct(&self, a: &[Scalar]) -> TensorSquare {
        let mut out = BTreeMap::new();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, k, c) in &self.coproducts[i] {
                accumulate(&mut out, (*j, *k), ai * c);
            }
        }
        out
    }

    pub fn apply_counit(&self, a: &[Scalar]) -> Scalar {
        dot(&self.counit, a)
    }

    /// Product in A ⊗ A: `(p⊗q)(r⊗s) = b_p b_r ⊗ b_q b_s`.
    pub fn tensor_square_mul(&self, x: &TensorSquare, y: &TensorSquare) -> TensorSquare {
        let d = self.dim();
        let mut out = BTreeMap::new();
        for ((p, q), cx) in x {
            for ((r, s), cy) in y {
                let c = cx * cy;
                for (u, c1) in &self.products[p * d + r] {
                    let c = &c * c1;
                    for (v, c2) in &self.products[q * d + s] {
                        accumulate(&mut out, (*u, *v), &c * c2);
                    }
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by `b_i`: column j is `b_i b_j`.
    pub fn left_mult_matrix(&self, i: usize) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zeros(&self.field, d, d);
        for j in 0..d {
            for (k, c) in self.basis_product(i, j) {
                m.set(*k, j, c.clone());
            }
        }
        m
    }

    /// Matrix of right multiplication by `b_i`: column j is `b_j b_i`.
    pub fn right_mult_matrix(&self, i: usize) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zeros(&self.field, d, d);
        for j in 0..d {
            for (k, c) in self.basis_product(j, i) {
                m.set(*k, j, c.clone());
            }
        }
        m
    }

    /// The convolution unit `uε`: column i is `ε(b_i)·1`.
    pub fn unit_counit(&self) -> Matrix {
        let d = self.dim();
        Matrix::from_fn(&self.field, d, d, |i, j| &self.unit[i] * &self.counit[j])
    }

    pub fn identity(&self) -> Matrix {
        Matrix::identity(&self.field, self.dim())
    }

    /// Convolution `f * g = μ ∘ (f ⊗ g) ∘ Δ`.
    pub fn convolve(&self, f: &Matrix, g: &Matrix) -> Matrix {
        let d = self.dim();
        assert!(
            f.rows() == d && f.cols() == d && g.rows() == d && g.cols() == d,
            "convolve: endomorphisms must be {d}x{d}"
        );
        let fcols: Vec<Vector> = (0..d).map(|j| f.column(j)).collect();
        let gcols: Vec<Vector> = (0..d).map(|k| g.column(k)).collect();
        let mut cache: HashMap<(usize, usize), Vector> = HashMap::new();
        let mut out = Matrix::zeros(&self.field, d, d);
        for i in 0..d {
            for (j, k, c) in &self.coproducts[i] {
                let prod = cache
                    .entry((*j, *k))
                    .or_insert_with(|| self.mul(&fcols[*j], &gcols[*k]));
                for (r, v) in prod.iter().enumerate() {
                    if !v.is_zero() {
                        out.add_at(r, i, &(c * v));
                    }
                }
            }
        }
        out
    }

    /// The dual Hopf algebra on the dual basis `b_i*`.
    pub fn dual(&self) -> FiniteHopfAlgebra {
        let toggle = |s: &str| match s.strip_suffix('*') {
            Some(stripped) => stripped.to_string(),
            None => format!("{s}*"),
        };
        // b_j* b_k* = Σ_i e_i^{jk} b_i*
        let mult = self
            .comult_entries()
            .into_iter()
            .map(|e| TensorEntry::new(e.j, e.k, e.i, e.c));
        // Δ(b_k*) = Σ_{i,j} c_{ij}^k b_i* ⊗ b_j*
        let comult = self
            .mult_entries()
            .into_iter()
            .map(|e| TensorEntry::new(e.k, e.i, e.j, e.c));
        FiniteHopfAlgebra::new(
            toggle(&self.name),
            &self.field,
            self.labels.iter().map(|l| toggle(l)).collect(),
            mult,
            comult,
            self.counit.clone(),
            self.unit.clone(),
            self.antipode.transpose(),
        )
        .expect("dual of a well-formed algebra is well-formed")
    }

    /// True when structure constants agree, ignoring names and labels.
    pub fn same_structure(&self, other: &FiniteHopfAlgebra) -> bool {
        self.field == other.field
            && self.products == other.products
            && self.coproducts == other.coproducts
            && self.unit == other.unit
            && self.counit == other.counit
            && self.antipode == other.antipode
    }

    /// Pretty form of an element, e.g. `1/2*x + -1*xy`.
    pub fn format_element(&self, a: &[Scalar]) -> String {
        let terms: Vec<String> = a
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                if c.is_one() {
                    self.labels[i].clone()
                } else {
                    format!("({c})*{}", self.labels[i])
                }
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }

    /// Verifies every Hopf axiom exhaustively over basis tuples.
    pub fn verify_hopf_axioms(&self) -> AxiomReport {
        let d = self.dim();
        let one = &self.unit;
        let mut checks = Vec::new();

        // associativity
        let mut witness = None;
        'assoc: for i in 0..d {
            for j in 0..d {
                let ij = self.mul(&self.basis_element(i), &self.basis_element(j));
                for k in 0..d {
                    let bk = self.basis_element(k);
                    let left = self.mul(&ij, &bk);
                    let jk = self.mul(&self.basis_element(j), &bk);
                    let right = self.mul(&self.basis_element(i), &jk);
                    if left != right {
                        witness = Some(self.witness3(i, j, k));
                        break 'assoc;
                    }
                }
            }
        }
        checks.push(AxiomCheck::new(Axiom::Associativity, witness));

        // unitality
        let witness = (0..d)
            .find(|&i| {
                let b = self.basis_element(i);
                self.mul(one, &b) != b || self.mul(&b, one) != b
            })
            .map(|i| format!("b = {}", self.labels[i]));
        checks.push(AxiomCheck::new(Axiom::Unitality, witness));

        // coassociativity
        let witness = (0..d)
            .find(|&i| {
                let mut left = BTreeMap::new();
                let mut right = BTreeMap::new();
                for (j, k, c) in &self.coproducts[i] {
                    for (p, q, c2) in &self.coproducts[*j] {
                        accumulate(&mut left, (*p, *q, *k), c * c2);
                    }
                    for (p, q, c2) in &self.coproducts[*k] {
                        accumulate(&mut right, (*j, *p, *q), c * c2);
                    }
                }
                left != right
            })
            .map(|i| format!("b = {}", self.labels[i]));
        checks.push(AxiomCheck::new(Axiom::Coassociativity, witness));

        // counitality
        let witness = (0..d)
            .find(|&i| {
                let mut left = self.zero_element();
                let mut right = self.zero_element();
                for (j, k, c) in &self.coproducts[i] {
                    left[*k] += &(&self.counit[*j] * c);
                    right[*j] += &(&self.counit[*k] * c);
                }
                let b = self.basis_element(i);
                left != b || right != b
            })
            .map(|i| format!("b = {}", self.labels[i]));
        checks.push(AxiomCheck::new(Axiom::Counitality, witness));

        // Δ is an algebra map
        let mut witness = None;
        let mut unit_tensor = BTreeMap::new();
        for (p, a) in one.iter().enumerate() {
            for (q, b) in one.iter().enumerate() {
                accumulate(&mut unit_tensor, (p, q), a * b);
            }
        }
        if self.coproduct(one) != unit_tensor {
            witness = Some("Δ(1) ≠ 1⊗1".to_string());
        }
        let basis_coproducts: Vec<TensorSquare> =
            (0..d).map(|i| self.coproduct(&self.basis_element(i))).collect();
        'bialg: for i in 0..d {
            if witness.is_some() {
                break;
            }
            for j in 0..d {
                let prod = self.mul(&self.basis_element(i), &self.basis_element(j));
                let left = self.coproduct(&prod);
                let right = self.tensor_square_mul(&basis_coproducts[i], &basis_coproducts[j]);
                if left != right {
                    witness = Some(format!("Δ({}·{})", self.labels[i], self.labels[j]));
                    break 'bialg;
                }
            }
        }
        checks.push(AxiomCheck::new(Axiom::ComultiplicationMultiplicative, witness));

        // ε is an algebra map
        let mut witness = None;
        if !self.apply_counit(one).is_one() {
            witness = Some("ε(1) ≠ 1".to_string());
        }
        'counit: for i in 0..d {
            if witness.is_some() {
                break;
            }
            for j in 0..d {
                let prod = self.mul(&self.basis_element(i), &self.basis_element(j));
                if self.apply_counit(&prod) != &self.counit[i] * &self.counit[j] {
                    witness = Some(format!("ε({}·{})", self.labels[i], self.labels[j]));
                    break 'counit;
                }
            }
        }
        checks.push(AxiomCheck::new(Axiom::CounitMultiplicative, witness));

        // antipode
        let ue = self.unit_counit();
        let s = &self.antipode;
        let id = self.identity();
        let left = self.convolve(s, &id);
        let right = self.convolve(&id, s);
        let witness = (0..d)
            .find(|&i| left.column(i) != ue.column(i) || right.column(i) != ue.column(i))
            .map(|i| format!("b = {}", self.labels[i]));
        checks.push(AxiomCheck::new(Axiom::Antipode, witness));

        AxiomReport {
            algebra: self.name.clone(),
            checks,
            antipode_squared_is_identity: s.mul(s).is_identity(),
        }
    }

    fn witness3(&self, i: usize, j: usize, k: usize) -> String {
        format!("({}·{})·{}", self.labels[i], self.labels[j], self.labels[k])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    Associativity,
    Unitality,
    Coassociativity,
    Counitality,
    ComultiplicationMultiplicative,
    CounitMultiplicative,
    Antipode,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Associativity => "associativity",
            Axiom::Unitality => "unitality",
            Axiom::Coassociativity => "coassociativity",
            Axiom::Counitality => "counitality",
            Axiom::ComultiplicationMultiplicative => "comultiplication is an algebra map",
            Axiom::CounitMultiplicative => "counit is an algebra map",
            Axiom::Antipode => "antipode",
        })
    }
}

#[derive(Clone, Debug)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub passed: bool,
    /// First basis tuple where the identity fails.
    pub witness: Option<String>,
}

impl AxiomCheck {
    fn new(axiom: Axiom, witness: Option<String>) -> Self {
        AxiomCheck {
            axiom,
            passed: witness.is_none(),
            witness,
        }
    }
}

#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub algebra: String,
    pub checks: Vec<AxiomCheck>,
    pub antipode_squared_is_identity: bool,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn passed(&self, axiom: Axiom) -> bool {
        self.checks.iter().any(|c| c.axiom == axiom && c.passed)
    }
}
