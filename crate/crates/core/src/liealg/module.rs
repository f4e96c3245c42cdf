use num::Zero;

use crate::error::{Error, Result};
use crate::linalg::{unit_vec, QMatrix, Subspace, Q};

use super::LieAlgebra;

/// Finite-dimensional representation `rho: L -> gl(V)`, stored as the
/// matrices `rho(e_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieModule {
    label: String,
    dim: usize,
    action: Vec<QMatrix>,
}

impl LieModule {
    pub fn new(l: &LieAlgebra, label: impl Into<String>, action: Vec<QMatrix>) -> Result<Self> {
        if action.len() != l.dim() {
            return Err(Error::DimensionError { expected: l.dim(), found: action.len() });
        }
        let dim = action.first().map_or(0, QMatrix::nrows);
        if let Some(bad) = action.iter().find(|m| m.shape() != (dim, dim)) {
            return Err(Error::InvalidInput(format!("action matrix of shape {:?}, expected {dim}x{dim}", bad.shape())));
        }
        let m = LieModule { label: label.into(), dim, action };
        if !m.is_representation_of(l) {
            return Err(Error::InvalidInput("action does not respect the bracket".into()));
        }
        Ok(m)
    }

    pub fn adjoint(l: &LieAlgebra) -> Self {
        LieModule { label: "ad".into(), dim: l.dim(), action: l.adjoint_rep() }
    }

    pub fn trivial(l: &LieAlgebra, dim: usize) -> Self {
        LieModule { label: format!("trivial:{dim}"), dim, action: vec![QMatrix::zeros(dim, dim); l.dim()] }
    }

    /// An ideal under the restricted adjoint action, in its echelon basis.
    pub fn ideal(l: &LieAlgebra, ideal: &Subspace) -> Result<Self> {
        if !l.is_ideal(ideal) {
            return Err(Error::NotAnIdeal);
        }
        let m = ideal.dim();
        let action = (0..l.dim())
            .map(|i| {
                let e = unit_vec(l.dim(), i);
                let cols: Vec<Vec<Q>> = ideal
                    .basis()
                    .iter()
                    .map(|a| ideal.coordinates(&l.bracket_unchecked(&e, a)).expect("ideal"))
                    .collect();
                QMatrix::from_columns(m, &cols)
            })
            .collect();
        Ok(LieModule { label: "ideal".into(), dim: m, action })
    }

    /// `L / ideal` under the induced adjoint action, with basis the unit
    /// vectors at the ideal's non-pivot columns.
    pub fn quotient(l: &LieAlgebra, ideal: &Subspace) -> Result<Self> {
        if !l.is_ideal(ideal) {
            return Err(Error::NotAnIdeal);
        }
        let cols = ideal.complement_columns();
        let action = (0..l.dim())
            .map(|i| {
                let e = unit_vec(l.dim(), i);
                let images: Vec<Vec<Q>> =
                    cols.iter().map(|&c| project(ideal, &l.bracket_unchecked(&e, &unit_vec(l.dim(), c)))).collect();
                QMatrix::from_columns(cols.len(), &images)
            })
            .collect();
        Ok(LieModule { label: "quotient".into(), dim: cols.len(), action })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn acting_dim(&self) -> usize {
        self.action.len()
    }

    pub fn action(&self, i: usize) -> &QMatrix {
        &self.action[i]
    }

    pub fn is_representation_of(&self, l: &LieAlgebra) -> bool {
        let n = l.dim();
        if self.action.len() != n {
            return false;
        }
        for i in 0..n {
            for j in i + 1..n {
                let lhs = (0..n).fold(QMatrix::zeros(self.dim, self.dim), |acc, k| {
                    acc.add(&self.action[k].scale(l.c(i, j, k)))
                });
                let rhs = self.action[i].mul(&self.action[j]).sub(&self.action[j].mul(&self.action[i]));
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

/// Coordinates of `v + ideal` in the quotient basis.
fn project(ideal: &Subspace, v: &[Q]) -> Vec<Q> {
    let r = ideal.reduce(v);
    ideal.complement_columns().iter().map(|&c| r[c].clone()).collect()
}

/// Linear map between Lie algebras, checked to respect brackets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieHom {
    source: LieAlgebra,
    target: LieAlgebra,
    matrix: QMatrix,
}

impl LieHom {
    /// `matrix` has shape `target.dim() x source.dim()`.
    pub fn new(source: LieAlgebra, target: LieAlgebra, matrix: QMatrix) -> Result<Self> {
        if matrix.shape() != (target.dim(), source.dim()) {
            return Err(Error::DimensionError { expected: target.dim() * source.dim(), found: matrix.nrows() * matrix.ncols() });
        }
        let n = source.dim();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = matrix.mul_vec(&source.bracket_unchecked(&unit_vec(n, i), &unit_vec(n, j)));
                let rhs = target.bracket_unchecked(&matrix.column(i), &matrix.column(j));
                if lhs != rhs {
                    return Err(Error::NotAHomomorphism(format!("fails on basis pair ({i}, {j})")));
                }
            }
        }
        Ok(LieHom { source, target, matrix })
    }

    pub fn identity(l: &LieAlgebra) -> Self {
        LieHom { source: l.clone(), target: l.clone(), matrix: QMatrix::identity(l.dim()) }
    }

    pub fn source(&self) -> &LieAlgebra {
        &self.source
    }

    pub fn target(&self) -> &LieAlgebra {
        &self.target
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.matrix
    }

    /// `phi . rho_src(x) = rho_tgt(x) . phi` for every basis element of the
    /// acting algebra.
    pub fn intertwines(&self, src: &LieModule, tgt: &LieModule) -> bool {
        src.dim() == self.matrix.ncols()
            && tgt.dim() == self.matrix.nrows()
            && src.acting_dim() == tgt.acting_dim()
            && (0..src.acting_dim())
                .all(|i| self.matrix.mul(src.action(i)) == tgt.action(i).mul(&self.matrix))
    }
}

/// `0 -> a -> L -> L/a -> 0` for an ideal `a`, with every piece the
/// builders need.
#[derive(Clone, Debug)]
pub struct IdealSequence {
    pub algebra: LieAlgebra,
    pub ideal: Subspace,
    pub sub: LieAlgebra,
    pub quotient: LieAlgebra,
    pub inclusion: LieHom,
    pub projection: LieHom,
    pub ideal_module: LieModule,
    pub adjoint_module: LieModule,
    pub quotient_module: LieModule,
}

impl IdealSequence {
    pub fn new(l: &LieAlgebra, ideal: &Subspace) -> Result<Self> {
        if ideal.ambient_dim() != l.dim() {
            return Err(Error::DimensionError { expected: l.dim(), found: ideal.ambient_dim() });
        }
        if !l.is_ideal(ideal) {
            return Err(Error::NotAnIdeal);
        }
        let n = l.dim();
        let sub = l.restrict_to(ideal)?.with_name(format!("ideal({})", l.name()));
        let cols = ideal.complement_columns();
        let m = cols.len();
        let mut tensor = vec![vec![vec![Q::zero(); m]; m]; m];
        for a in 0..m {
            for b in 0..m {
                tensor[a][b] = project(ideal, &l.bracket_unchecked(&unit_vec(n, cols[a]), &unit_vec(n, cols[b])));
            }
        }
        let qlabels = cols.iter().map(|&c| format!("[{}]", l.labels()[c])).collect();
        let quotient = LieAlgebra::from_tensor(format!("quotient({})", l.name()), qlabels, &tensor)?;
        quotient.require_valid()?;
        let inclusion = LieHom::new(sub.clone(), l.clone(), QMatrix::from_columns(n, ideal.basis()))?;
        let proj_cols: Vec<Vec<Q>> = (0..n).map(|j| project(ideal, &unit_vec(n, j))).collect();
        let projection = LieHom::new(l.clone(), quotient.clone(), QMatrix::from_columns(m, &proj_cols))?;
        Ok(IdealSequence {
            algebra: l.clone(),
            ideal: ideal.clone(),
            sub,
            quotient,
            inclusion,
            projection,
            ideal_module: LieModule::ideal(l, ideal)?,
            adjoint_module: LieModule::adjoint(l),
            quotient_module: LieModule::quotient(l, ideal)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::catalog;
    use crate::linalg::q;

    #[test]
    fn heisenberg_center_sequence() {
        let h = catalog("heisenberg3").unwrap();
        let seq = IdealSequence::new(&h, &h.center()).unwrap();
        assert_eq!(seq.sub.dim(), 1);
        assert_eq!(seq.quotient.dim(), 2);
        assert!(seq.quotient.is_abelian());
        assert!(seq.inclusion.intertwines(&seq.ideal_module, &seq.adjoint_module));
        assert!(seq.projection.intertwines(&seq.adjoint_module, &seq.quotient_module));
        assert!(seq.ideal_module.is_representation_of(&h));
        assert!(seq.quotient_module.is_representation_of(&h));
    }

    #[test]
    fn non_ideal_rejected() {
        let h = catalog("heisenberg3").unwrap();
        let x = Subspace::span(3, &[unit_vec(3, 0)]);
        assert!(matches!(IdealSequence::new(&h, &x), Err(Error::NotAnIdeal)));
    }

    #[test]
    fn non_homomorphism_rejected() {
        let h = catalog("heisenberg3").unwrap();
        let ab = catalog("abelian:3").unwrap();
        assert!(matches!(
            LieHom::new(ab.clone(), h.clone(), QMatrix::identity(3)),
            Err(Error::NotAHomomorphism(_))
        ));
        assert!(matches!(LieHom::new(h.clone(), ab, QMatrix::identity(3)), Err(Error::NotAHomomorphism(_))));
        let line = catalog("abelian:1").unwrap();
        let z = QMatrix::from_columns(3, &[vec![q(0), q(0), q(1)]]);
        assert!(LieHom::new(line, h, z).is_ok());
    }
}
