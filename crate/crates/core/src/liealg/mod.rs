//! Finite-dimensional Lie algebras over the rationals: validation, canonical
//! subspaces, the Killing form and the built-in catalog.

mod catalog;
mod io;
mod module;

pub use catalog::{catalog, catalog_names};
pub use io::{load_lie, BracketEntry, LieFile};
pub use module::{IdealSequence, LieHom, LieModule};

use num::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{inertia, is_zero_vec, zero_vec, QMatrix, Subspace, Q};

/// Lie algebra given by structure constants `[e_i, e_j] = sum_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    labels: Vec<String>,
    dim: usize,
    // c[i][j][k] at (i * dim + j) * dim + k
    constants: Vec<Q>,
}

/// First failing index tuple of a structure-constant check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Violation {
    Antisymmetry { i: usize, j: usize, k: usize },
    Jacobi { i: usize, j: usize, l: usize, k: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::Antisymmetry { i, j, k } => write!(f, "antisymmetry fails at ({i}, {j}, {k})"),
            Violation::Jacobi { i, j, l, k } => write!(f, "Jacobi identity fails at ({i}, {j}, {l}; {k})"),
        }
    }
}

impl LieAlgebra {
    /// Build from a full `dim x dim x dim` tensor without checking the Lie
    /// axioms; only the shape is checked. See [`LieAlgebra::validate`].
    pub fn from_tensor(name: impl Into<String>, labels: Vec<String>, tensor: &[Vec<Vec<Q>>]) -> Result<Self> {
        let dim = tensor.len();
        if labels.len() != dim {
            return Err(Error::MalformedAlgebra(format!("{} labels for dimension {dim}", labels.len())));
        }
        let mut constants = Vec::with_capacity(dim * dim * dim);
        for (i, plane) in tensor.iter().enumerate() {
            if plane.len() != dim {
                return Err(Error::MalformedAlgebra(format!("c[{i}] has {} rows, expected {dim}", plane.len())));
            }
            for (j, row) in plane.iter().enumerate() {
                if row.len() != dim {
                    return Err(Error::MalformedAlgebra(format!(
                        "c[{i}][{j}] has {} entries, expected {dim}",
                        row.len()
                    )));
                }
                constants.extend(row.iter().cloned());
            }
        }
        Ok(LieAlgebra { name: name.into(), labels, dim, constants })
    }

    /// Build from the brackets `[e_i, e_j]` with `i < j`, filling in
    /// antisymmetry, and validate.
    pub fn from_brackets(
        name: impl Into<String>,
        labels: Vec<String>,
        brackets: &[(usize, usize, Vec<(usize, Q)>)],
    ) -> Result<Self> {
        let dim = labels.len();
        let mut constants = vec![Q::zero(); dim * dim * dim];
        for (i, j, terms) in brackets {
            let (i, j) = (*i, *j);
            if i >= dim || j >= dim {
                return Err(Error::MalformedAlgebra(format!("bracket index ({i}, {j}) out of range")));
            }
            if i >= j {
                return Err(Error::MalformedAlgebra(format!("bracket ({i}, {j}) must have i < j")));
            }
            for (k, v) in terms {
                if *k >= dim {
                    return Err(Error::MalformedAlgebra(format!("bracket component {k} out of range")));
                }
                constants[(i * dim + j) * dim + k] += v;
                constants[(j * dim + i) * dim + k] -= v;
            }
        }
        let l = LieAlgebra { name: name.into(), labels, dim, constants };
        l.validate().map_err(|v| Error::InvalidAlgebra(v.to_string()))?;
        Ok(l)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn c(&self, i: usize, j: usize, k: usize) -> &Q {
        &self.constants[(i * self.dim + j) * self.dim + k]
    }

    /// Overwrite one structure constant. No axiom checks; intended for
    /// building negative controls.
    pub fn set_constant(&mut self, i: usize, j: usize, k: usize, value: Q) {
        let d = self.dim;
        self.constants[(i * d + j) * d + k] = value;
    }

    pub fn validate(&self) -> std::result::Result<(), Violation> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if *self.c(i, j, k) != -self.c(j, i, k) {
                        return Err(Violation::Antisymmetry { i, j, k });
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    for k in 0..n {
                        let mut s = Q::zero();
                        for m in 0..n {
                            s += self.c(i, j, m) * self.c(m, l, k);
                            s += self.c(j, l, m) * self.c(m, i, k);
                            s += self.c(l, i, m) * self.c(m, j, k);
                        }
                        if !s.is_zero() {
                            return Err(Violation::Jacobi { i, j, l, k });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    pub(crate) fn require_valid(&self) -> Result<()> {
        self.validate().map_err(|v| Error::InvalidAlgebra(v.to_string()))
    }

    pub fn is_abelian(&self) -> bool {
        self.constants.iter().all(Zero::is_zero)
    }

    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Result<Vec<Q>> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(Error::DimensionError { expected: self.dim, found: v.len() });
            }
        }
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let n = self.dim;
        let mut out = zero_vec(n);
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let xy = xi * yj;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        *o += &xy * c;
                    }
                }
            }
        }
        out
    }

    /// `ad e_i` as a matrix: `(ad e_i)[k][j] = c[i][j][k]`.
    pub fn ad(&self, i: usize) -> QMatrix {
        let n = self.dim;
        QMatrix::from_triplets(
            n,
            n,
            (0..n).flat_map(|j| (0..n).map(move |k| (k, j))).map(|(k, j)| (k, j, self.c(i, j, k).clone())),
        )
    }

    pub fn adjoint_rep(&self) -> Vec<QMatrix> {
        (0..self.dim).map(|i| self.ad(i)).collect()
    }

    /// `ad x` for an arbitrary element.
    pub fn ad_of(&self, x: &[Q]) -> QMatrix {
        let n = self.dim;
        let mut acc = QMatrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            acc = acc.add(&self.ad(i).scale(xi));
        }
        acc
    }

    /// Kernel of `x -> ([x, s_1], ..., [x, s_m])` for the given vectors.
    fn centralizer_of(&self, vectors: &[Vec<Q>]) -> Subspace {
        let n = self.dim;
        // row block for s: entry (k, j) = sum_i s_i c[j][i][k]
        let blocks: Vec<QMatrix> = vectors
            .iter()
            .map(|s| {
                QMatrix::from_triplets(
                    n,
                    n,
                    (0..n).flat_map(|k| (0..n).map(move |j| (k, j))).map(|(k, j)| {
                        let mut v = Q::zero();
                        for (i, si) in s.iter().enumerate() {
                            v += si * self.c(j, i, k);
                        }
                        (k, j, v)
                    }),
                )
            })
            .collect();
        if blocks.is_empty() {
            return Subspace::whole(n);
        }
        let refs: Vec<&QMatrix> = blocks.iter().collect();
        Subspace::span(n, &QMatrix::vstack(&refs).kernel())
    }

    fn basis_vectors(&self) -> Vec<Vec<Q>> {
        (0..self.dim).map(|i| crate::linalg::unit_vec(self.dim, i)).collect()
    }

    /// The center `{x : [x, e_i] = 0 for all i}`.
    pub fn center(&self) -> Subspace {
        self.centralizer_of(&self.basis_vectors())
    }

    /// The commutator ideal `[g, g]`.
    pub fn derived_subalgebra(&self) -> Subspace {
        let n = self.dim;
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let b: Vec<Q> = (0..n).map(|k| self.c(i, j, k).clone()).collect();
                if !is_zero_vec(&b) {
                    brackets.push(b);
                }
            }
        }
        Subspace::span(n, &brackets)
    }

    /// Centralizer of `[g, g]`.
    pub fn commutator_centralizer(&self) -> Subspace {
        let derived = self.derived_subalgebra();
        let c = self.centralizer_of(derived.basis());
        debug_assert!(self.center().is_subspace_of(&c));
        c
    }

    /// Smallest subalgebra containing `s`.
    pub fn generated_subalgebra(&self, s: &Subspace) -> Subspace {
        let mut current = s.clone();
        loop {
            let mut gens: Vec<Vec<Q>> = current.basis().to_vec();
            for a in current.basis() {
                for b in current.basis() {
                    gens.push(self.bracket_unchecked(a, b));
                }
            }
            let next = Subspace::span(self.dim, &gens);
            if next == current {
                return current;
            }
            current = next;
        }
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        s.basis().iter().all(|a| s.basis().iter().all(|b| s.contains(&self.bracket_unchecked(a, b))))
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        s.ambient_dim() == self.dim
            && self.basis_vectors().iter().all(|e| s.basis().iter().all(|a| s.contains(&self.bracket_unchecked(e, a))))
    }

    /// `B[i][j] = trace(ad e_i . ad e_j)`.
    pub fn killing_form(&self) -> QMatrix {
        let n = self.dim;
        let ads = self.adjoint_rep();
        let mut entries = Vec::new();
        for i in 0..n {
            for j in i..n {
                let prod = ads[i].mul(&ads[j]);
                let tr = (0..n).fold(Q::zero(), |acc, d| acc + prod.get(d, d));
                entries.push((i, j, tr.clone()));
                if i != j {
                    entries.push((j, i, tr));
                }
            }
        }
        QMatrix::from_triplets(n, n, entries)
    }

    /// Signature `(positive, negative, zero)` of the Killing form.
    pub fn killing_signature(&self) -> (usize, usize, usize) {
        inertia(&self.killing_form())
    }

    /// Cartan's criterion: the Killing form is nondegenerate.
    pub fn is_semisimple(&self) -> bool {
        self.dim > 0 && !self.killing_form().determinant().is_zero()
    }

    /// Killing form negative definite, by the signs of the leading principal
    /// minors: `(-1)^k det(B_k) > 0` for every `k`.
    pub fn is_compact_type(&self) -> bool {
        if self.dim == 0 {
            return false;
        }
        let b = self.killing_form();
        (1..=self.dim).all(|k| {
            let idx: Vec<usize> = (0..k).collect();
            let minor = b.select_rows(&idx).select_cols(&idx).determinant();
            if k % 2 == 0 {
                minor.is_positive()
            } else {
                minor.is_negative()
            }
        })
    }

    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let (a, b) = (self.dim, other.dim);
        let n = a + b;
        let mut constants = vec![Q::zero(); n * n * n];
        for i in 0..a {
            for j in 0..a {
                for k in 0..a {
                    constants[(i * n + j) * n + k] = self.c(i, j, k).clone();
                }
            }
        }
        for i in 0..b {
            for j in 0..b {
                for k in 0..b {
                    constants[((a + i) * n + a + j) * n + a + k] = other.c(i, j, k).clone();
                }
            }
        }
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        LieAlgebra { name: format!("{}+{}", self.name, other.name), labels, dim: n, constants }
    }

    /// Lie algebra structure on a subalgebra, in the echelon basis of `s`.
    pub fn restrict_to(&self, s: &Subspace) -> Result<LieAlgebra> {
        if !self.is_subalgebra(s) {
            return Err(Error::InvalidInput("subspace is not closed under the bracket".into()));
        }
        let m = s.dim();
        let mut tensor = vec![vec![vec![Q::zero(); m]; m]; m];
        for a in 0..m {
            for b in 0..m {
                let br = self.bracket_unchecked(&s.basis()[a], &s.basis()[b]);
                tensor[a][b] = s.coordinates(&br).expect("closed under bracket");
            }
        }
        let labels = (0..m).map(|i| format!("a{i}")).collect();
        LieAlgebra::from_tensor(format!("sub({})", self.name), labels, &tensor)
    }

    /// Every Jacobi sum is zero for every basis triple, re-checked
    /// by direct bracket evaluation rather than the tensor formula.
    pub fn jacobi_holds_on_basis(&self) -> bool {
        let e = self.basis_vectors();
        for a in &e {
            for b in &e {
                for c in &e {
                    let t1 = self.bracket_unchecked(a, &self.bracket_unchecked(b, c));
                    let t2 = self.bracket_unchecked(b, &self.bracket_unchecked(c, a));
                    let t3 = self.bracket_unchecked(c, &self.bracket_unchecked(a, b));
                    let s: Vec<Q> = (0..self.dim).map(|k| &t1[k] + &t2[k] + &t3[k]).collect();
                    if !is_zero_vec(&s) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Negative of the Killing form, the positive-definite metric used on
    /// compact-type coefficients.
    pub fn negative_killing(&self) -> QMatrix {
        self.killing_form().scale(&-Q::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{q, unit_vec};

    fn h3() -> LieAlgebra {
        catalog("heisenberg3").unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(h3().validate().is_ok());
        assert!(catalog("abelian:3").unwrap().validate().is_ok());
        let mut bad = h3();
        bad.set_constant(1, 0, 2, q(1));
        assert_eq!(bad.validate(), Err(Violation::Antisymmetry { i: 0, j: 1, k: 2 }));
    }

    #[test]
    fn jacobi_violation_is_reported() {
        let mut bad = h3();
        // [X, Z] = X breaks Jacobi while keeping antisymmetry
        bad.set_constant(0, 2, 0, q(1));
        bad.set_constant(2, 0, 0, q(-1));
        assert!(matches!(bad.validate(), Err(Violation::Jacobi { .. })));
    }

    #[test]
    fn malformed_shapes() {
        let t = vec![vec![vec![q(0); 2]; 2]; 3];
        let labels = vec!["a".into(), "b".into(), "c".into()];
        assert!(matches!(LieAlgebra::from_tensor("x", labels, &t), Err(Error::MalformedAlgebra(_))));
    }

    #[test]
    fn bracket_examples() {
        let h = h3();
        assert_eq!(h.bracket(&unit_vec(3, 0), &unit_vec(3, 1)).unwrap(), unit_vec(3, 2));
        let v = vec![q(1), q(-2), q(5)];
        assert!(is_zero_vec(&h.bracket(&v, &v).unwrap()));
        let sl2 = catalog("sl2").unwrap();
        assert_eq!(sl2.bracket(&unit_vec(3, 1), &unit_vec(3, 2)).unwrap(), unit_vec(3, 0));
        assert!(matches!(h.bracket(&[q(1)], &v), Err(Error::DimensionError { .. })));
    }

    #[test]
    fn canonical_subspaces() {
        let h = h3();
        assert_eq!(h.center(), Subspace::span(3, &[unit_vec(3, 2)]));
        assert_eq!(h.derived_subalgebra(), Subspace::span(3, &[unit_vec(3, 2)]));
        assert_eq!(h.commutator_centralizer().dim(), 3);
        let sl2 = catalog("sl2").unwrap();
        assert_eq!(sl2.center().dim(), 0);
        assert_eq!(sl2.derived_subalgebra().dim(), 3);
        assert_eq!(sl2.commutator_centralizer().dim(), 0);
        let ab = catalog("abelian:4").unwrap();
        assert_eq!(ab.center().dim(), 4);
        assert_eq!(ab.derived_subalgebra().dim(), 0);
        assert_eq!(ab.commutator_centralizer().dim(), 4);
    }

    #[test]
    fn killing_forms() {
        let so3 = catalog("so3").unwrap();
        assert_eq!(so3.killing_form(), QMatrix::identity(3).scale(&q(-2)));
        assert!(catalog("abelian:2").unwrap().killing_form().is_zero());
        let sl2 = catalog("sl2").unwrap();
        assert!(!sl2.killing_form().determinant().is_zero());
        assert_eq!(sl2.killing_signature(), (2, 1, 0));
    }

    #[test]
    fn semisimple_and_compact_flags() {
        let flags = |name: &str| {
            let l = catalog(name).unwrap();
            (l.is_semisimple(), l.is_compact_type())
        };
        assert_eq!(flags("so3"), (true, true));
        assert_eq!(flags("sl2"), (true, false));
        assert_eq!(flags("heisenberg3"), (false, false));
    }

    #[test]
    fn adjoint_and_direct_sum() {
        let ab = catalog("abelian:2").unwrap();
        assert!(ab.adjoint_rep().iter().all(QMatrix::is_zero));
        let s = h3().direct_sum(&catalog("abelian:1").unwrap());
        assert_eq!(s.dim(), 4);
        assert!(s.is_valid());
        assert_eq!(s.center().dim(), 2);
    }

    #[test]
    fn generated_subalgebra_of_centralizer_is_itself() {
        for name in catalog_names() {
            let l = catalog(&name).unwrap();
            let c = l.commutator_centralizer();
            assert_eq!(l.generated_subalgebra(&c), c, "{name}");
        }
    }
}
