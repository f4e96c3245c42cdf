//! The graded bracket `[α, β]`: wedge on the form part, Lie bracket on values.

use std::collections::HashMap;

use num::Zero;
use serde::Serialize;

use crate::cochain::FiniteComplex;
use crate::error::{Error, Result};
use crate::liealg::LieAlgebra;
use crate::linalg::{zero_vec, Q};

use super::ce::chevalley_eilenberg;
use super::combin::{index_map, merge, shuffle_sign, subsets};
use super::mesh::SimplicialComplex;
use super::poly::{Monomial, PolyDeRham};
use super::simplicial::simplicial_gvalued;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelKind {
    ChevalleyEilenberg,
    Polynomial,
    Simplicial,
}

/// A homogeneous element of a model, tagged with the model it belongs to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedForm {
    pub model: String,
    pub degree: usize,
    pub coeffs: Vec<Q>,
}

impl GradedForm {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

/// A cochain model with a graded bracket.
pub trait FormModel: Sync {
    fn kind(&self) -> ModelKind;

    /// Identifies the model instance; forms from different instances do not mix.
    fn label(&self) -> &str;

    fn complex(&self) -> &FiniteComplex;

    fn lie(&self) -> &LieAlgebra;

    /// Bracket of coefficient vectors in degrees `p` and `q`.
    fn bracket_coeffs(&self, p: usize, x: &[Q], q: usize, y: &[Q]) -> Result<Vec<Q>>;

    /// Whether super-commutation, Jacobi and Leibniz hold on cochains (and
    /// not only on cohomology classes).
    fn laws_hold_on_cochains(&self) -> bool {
        self.kind() != ModelKind::Simplicial
    }

    fn form(&self, degree: usize, coeffs: Vec<Q>) -> Result<GradedForm> {
        let top = self.complex().top_degree();
        if degree > top {
            return Err(Error::DegreeError { degree, top });
        }
        let expected = self.complex().dim(degree);
        if coeffs.len() != expected {
            return Err(Error::DimensionError { expected, found: coeffs.len() });
        }
        Ok(GradedForm { model: self.label().to_string(), degree, coeffs })
    }

    fn zero_form(&self, degree: usize) -> GradedForm {
        GradedForm { model: self.label().to_string(), degree, coeffs: zero_vec(self.complex().dim(degree)) }
    }

    fn owns(&self, a: &GradedForm) -> Result<()> {
        if a.model != self.label() {
            return Err(Error::ModelMismatch(a.model.clone(), self.label().to_string()));
        }
        Ok(())
    }

    /// Twisted differential; the image of a top-degree form is the empty
    /// vector one degree up.
    fn d(&self, a: &GradedForm) -> Result<GradedForm> {
        self.owns(a)?;
        let coeffs = self.complex().differential(a.degree).mul_vec(&a.coeffs);
        Ok(GradedForm { model: a.model.clone(), degree: a.degree + 1, coeffs })
    }

    fn bracket(&self, a: &GradedForm, b: &GradedForm) -> Result<GradedForm> {
        self.owns(a)?;
        self.owns(b)?;
        let degree = a.degree + b.degree;
        let coeffs = if degree > self.complex().top_degree() {
            Vec::new()
        } else {
            self.bracket_coeffs(a.degree, &a.coeffs, b.degree, &b.coeffs)?
        };
        Ok(GradedForm { model: a.model.clone(), degree, coeffs })
    }
}

/// `[α, β]` within one model.
pub fn wedge_bracket(model: &dyn FormModel, a: &GradedForm, b: &GradedForm) -> Result<GradedForm> {
    if a.model != b.model {
        return Err(Error::ModelMismatch(a.model.clone(), b.model.clone()));
    }
    model.bracket(a, b)
}

fn nonzero(x: &[Q]) -> impl Iterator<Item = (usize, &Q)> {
    x.iter().enumerate().filter(|(_, v)| !v.is_zero())
}

/// Left-invariant `L`-valued forms on the group: `CE(L; ad)`.
#[derive(Clone, Debug)]
pub struct CeModel {
    label: String,
    lie: LieAlgebra,
    complex: FiniteComplex,
    subsets: Vec<Vec<Vec<usize>>>,
    index: Vec<HashMap<Vec<usize>, usize>>,
}

impl CeModel {
    pub fn new(l: &LieAlgebra) -> Result<Self> {
        let complex = chevalley_eilenberg(l)?;
        let subsets: Vec<Vec<Vec<usize>>> = (0..=l.dim()).map(|q| subsets(l.dim(), q)).collect();
        let index = subsets.iter().map(|s| index_map(s)).collect();
        Ok(CeModel { label: format!("ce:{}", l.name()), lie: l.clone(), complex, subsets, index })
    }
}

impl FormModel for CeModel {
    fn kind(&self) -> ModelKind {
        ModelKind::ChevalleyEilenberg
    }

    fn label(&self) -> &str {
        &self.label
    }

    fn complex(&self) -> &FiniteComplex {
        &self.complex
    }

    fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    fn bracket_coeffs(&self, p: usize, x: &[Q], q: usize, y: &[Q]) -> Result<Vec<Q>> {
        let g = self.lie.dim();
        let mut out = zero_vec(self.complex.dim(p + q));
        for (ix, xv) in nonzero(x) {
            let (si, a) = (ix / g, ix % g);
            let set_i = &self.subsets[p][si];
            for (iy, yv) in nonzero(y) {
                let (sj, b) = (iy / g, iy % g);
                let set_j = &self.subsets[q][sj];
                let Some(sign) = shuffle_sign(set_i, set_j) else { continue };
                let k = self.index[p + q][&merge(set_i, set_j)];
                let xy = xv * yv * Q::from_integer(sign.into());
                for (m, slot) in out[k * g..(k + 1) * g].iter_mut().enumerate() {
                    let c = self.lie.c(a, b, m);
                    if !c.is_zero() {
                        *slot += &xy * c;
                    }
                }
            }
        }
        Ok(out)
    }
}

/// `L`-valued polynomial forms on `R^n` up to homogeneity `N`.
#[derive(Clone, Debug)]
pub struct PolyModel {
    label: String,
    lie: LieAlgebra,
    poly: PolyDeRham,
    complex: FiniteComplex,
    basis: Vec<Vec<Monomial>>,
}

impl PolyModel {
    pub fn new(n: usize, l: &LieAlgebra, max_degree: usize) -> Result<Self> {
        l.require_valid()?;
        let poly = PolyDeRham::new(n, l.dim(), max_degree)?;
        let complex = poly.complex();
        let basis = (0..=n).map(|k| poly.scalar_basis(k).into_iter().cloned().collect()).collect();
        Ok(PolyModel { label: format!("poly:{n}:{max_degree}:{}", l.name()), lie: l.clone(), poly, complex, basis })
    }

    pub fn poly(&self) -> &PolyDeRham {
        &self.poly
    }

    /// Scalar monomial of each basis index in degree `k`.
    pub fn monomial(&self, k: usize, index: usize) -> &Monomial {
        &self.basis[k][index / self.lie.dim()]
    }
}

impl FormModel for PolyModel {
    fn kind(&self) -> ModelKind {
        ModelKind::Polynomial
    }

    fn label(&self) -> &str {
        &self.label
    }

    fn complex(&self) -> &FiniteComplex {
        &self.complex
    }

    fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    fn bracket_coeffs(&self, p: usize, x: &[Q], q: usize, y: &[Q]) -> Result<Vec<Q>> {
        let g = self.lie.dim();
        let mut out = zero_vec(self.complex.dim(p + q));
        for (ix, xv) in nonzero(x) {
            let mx = &self.basis[p][ix / g];
            let a = ix % g;
            for (iy, yv) in nonzero(y) {
                let my = &self.basis[q][iy / g];
                let b = iy % g;
                let Some(sign) = shuffle_sign(&mx.dx, &my.dx) else { continue };
                if (0..g).all(|m| self.lie.c(a, b, m).is_zero()) {
                    continue;
                }
                let exponents: Vec<usize> = mx.exponents.iter().zip(&my.exponents).map(|(u, v)| u + v).collect();
                let prod = Monomial { exponents, dx: merge(&mx.dx, &my.dx) };
                let s = prod.homogeneity();
                if s > self.poly.max_degree() {
                    return Err(Error::OutOfTruncation(s));
                }
                let base = self.poly.index_of(&prod, 0).expect("monomial within truncation");
                let xy = xv * yv * Q::from_integer(sign.into());
                for m in 0..g {
                    let c = self.lie.c(a, b, m);
                    if !c.is_zero() {
                        out[base + m] += &xy * c;
                    }
                }
            }
        }
        Ok(out)
    }
}

/// `L`-valued simplicial cochains with the front/back-face cup bracket
/// `(α ⌣ β)(v0..v_{p+q}) = [hol(v_p v_{p+q}) α(v0..v_p), β(v_p..v_{p+q})]`.
#[derive(Clone, Debug)]
pub struct SimplicialModel {
    label: String,
    lie: LieAlgebra,
    mesh: SimplicialComplex,
    complex: FiniteComplex,
}

impl SimplicialModel {
    pub fn new(mesh: &SimplicialComplex, l: &LieAlgebra, name: &str) -> Result<Self> {
        let complex = simplicial_gvalued(mesh, l)?;
        Ok(SimplicialModel { label: format!("simplicial:{name}:{}", l.name()), lie: l.clone(), mesh: mesh.clone(), complex })
    }

    pub fn mesh(&self) -> &SimplicialComplex {
        &self.mesh
    }

    /// Front/back-face product with an arbitrary bilinear map on values.
    pub fn cup_with<F>(&self, p: usize, x: &[Q], q: usize, y: &[Q], out_dim: usize, mut f: F) -> Vec<Q>
    where
        F: FnMut(&[Q], &[Q]) -> Vec<Q>,
    {
        let g = self.lie.dim();
        let mesh = &self.mesh;
        let mut out = Vec::with_capacity(mesh.count(p + q) * out_dim);
        for tau in mesh.simplices(p + q) {
            let front = mesh.index_of(&tau[..=p]).expect("face");
            let back = mesh.index_of(&tau[p..]).expect("face");
            let a = &x[front * g..(front + 1) * g];
            let b = &y[back * g..(back + 1) * g];
            let moved = match (q > 0).then(|| mesh.transport(tau[p], tau[p + q])).flatten() {
                Some(h) => h.mul_vec(a),
                None => a.to_vec(),
            };
            out.extend(f(&moved, b));
        }
        out
    }
}

impl FormModel for SimplicialModel {
    fn kind(&self) -> ModelKind {
        ModelKind::Simplicial
    }

    fn label(&self) -> &str {
        &self.label
    }

    fn complex(&self) -> &FiniteComplex {
        &self.complex
    }

    fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    fn bracket_coeffs(&self, p: usize, x: &[Q], q: usize, y: &[Q]) -> Result<Vec<Q>> {
        let g = self.lie.dim();
        Ok(self.cup_with(p, x, q, y, g, |a, b| self.lie.bracket_unchecked(a, b)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::catalog;
    use crate::linalg::{q, unit_vec};
    use crate::models::bundled_mesh;

    #[test]
    fn degree_zero_bracket_is_pointwise() {
        let l = catalog("heisenberg3").unwrap();
        let m = PolyModel::new(2, &l, 2).unwrap();
        // constant functions X and Y sit at indices 0 and 1 of degree 0
        let x = m.form(0, unit_vec(m.complex().dim(0), 0)).unwrap();
        let y = m.form(0, unit_vec(m.complex().dim(0), 1)).unwrap();
        let z = wedge_bracket(&m, &x, &y).unwrap();
        assert_eq!(z.coeffs, unit_vec(m.complex().dim(0), 2));
    }

    #[test]
    fn abelian_values_bracket_to_zero() {
        let l = catalog("abelian:2").unwrap();
        let m = CeModel::new(&l).unwrap();
        let a = m.form(2, vec![q(1), q(-3)]).unwrap();
        assert!(wedge_bracket(&m, &a, &a).unwrap().is_zero());
    }

    #[test]
    fn mixed_models_rejected() {
        let l = catalog("heisenberg3").unwrap();
        let ce = CeModel::new(&l).unwrap();
        let simp = SimplicialModel::new(&bundled_mesh("triangle_circle").unwrap(), &l, "triangle_circle").unwrap();
        let a = ce.form(0, unit_vec(3, 0)).unwrap();
        let b = simp.form(0, unit_vec(9, 0)).unwrap();
        assert!(matches!(wedge_bracket(&ce, &a, &b), Err(Error::ModelMismatch(..))));
        assert!(matches!(ce.bracket(&b, &b), Err(Error::ModelMismatch(..))));
    }

    #[test]
    fn truncation_overflow_reported() {
        let l = catalog("heisenberg3").unwrap();
        let m = PolyModel::new(1, &l, 1).unwrap();
        let x_times_e0 = m.poly().index_of(&Monomial { exponents: vec![1], dx: vec![] }, 0).unwrap();
        let y = m.poly().index_of(&Monomial { exponents: vec![1], dx: vec![] }, 1).unwrap();
        let a = m.form(0, unit_vec(m.complex().dim(0), x_times_e0)).unwrap();
        let b = m.form(0, unit_vec(m.complex().dim(0), y)).unwrap();
        assert_eq!(m.bracket(&a, &b).unwrap_err(), Error::OutOfTruncation(2));
    }
}
