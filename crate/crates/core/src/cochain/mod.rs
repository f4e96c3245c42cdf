//! Finite cochain complexes over the rationals and their cohomology.

mod les;
mod mv;
mod total;

pub use les::{ExactnessNode, LesNode, LongExactSequence, NodeKind, ShortExactSequence};
pub use mv::{mayer_vietoris, MayerVietoris};
pub use total::{kunneth_convolution, total_complex};

use std::borrow::Cow;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::linalg::{format_q, is_zero_vec, zero_vec, QMatrix, Q};

/// Graded space `C^0 .. C^n` with differentials `D_k: C^k -> C^{k+1}`.
///
/// The last differential `D_n` is the zero map out of the top degree and is
/// not stored. Construction checks shapes and `D_{k+1} D_k = 0` exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteComplex {
    label: String,
    dims: Vec<usize>,
    differentials: Vec<QMatrix>,
    coefficient_dim: usize,
}

impl FiniteComplex {
    pub fn new(dims: Vec<usize>, differentials: Vec<QMatrix>) -> Result<Self> {
        Self::new_with(dims, differentials, Execution::default())
    }

    pub fn new_with(dims: Vec<usize>, differentials: Vec<QMatrix>, exec: Execution) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::InvalidInput("complex needs at least one degree".into()));
        }
        if differentials.len() + 1 != dims.len() {
            return Err(Error::DimensionError { expected: dims.len() - 1, found: differentials.len() });
        }
        for (k, d) in differentials.iter().enumerate() {
            if d.shape() != (dims[k + 1], dims[k]) {
                return Err(Error::DimensionError { expected: dims[k + 1] * dims[k], found: d.nrows() * d.ncols() });
            }
        }
        let c = FiniteComplex { label: String::new(), dims, differentials, coefficient_dim: 1 };
        c.check_d_squared_with(exec)?;
        Ok(c)
    }

    /// Complex concentrated with zero differentials.
    pub fn zero_differentials(dims: Vec<usize>) -> Self {
        let differentials = dims.windows(2).map(|w| QMatrix::zeros(w[1], w[0])).collect();
        FiniteComplex { label: String::new(), dims, differentials, coefficient_dim: 1 }
    }

    /// One-dimensional space in degree zero: the unit for tensor products.
    pub fn unit() -> Self {
        Self::zero_differentials(vec![1])
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Record that each degree's basis is `(form index) x (value index)` with
    /// the value index of size `g` running fastest.
    pub fn with_coefficient_dim(mut self, g: usize) -> Self {
        self.coefficient_dim = g;
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn coefficient_dim(&self) -> usize {
        self.coefficient_dim
    }

    pub fn top_degree(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// `dim C^k`, zero outside `0..=top`.
    pub fn dim(&self, k: usize) -> usize {
        self.dims.get(k).copied().unwrap_or(0)
    }

    /// `D_k`, with the zero map for `k >= top`.
    pub fn differential(&self, k: usize) -> Cow<'_, QMatrix> {
        match self.differentials.get(k) {
            Some(d) => Cow::Borrowed(d),
            None => Cow::Owned(QMatrix::zeros(self.dim(k + 1), self.dim(k))),
        }
    }

    pub fn differentials(&self) -> &[QMatrix] {
        &self.differentials
    }

    pub fn check_d_squared(&self) -> Result<()> {
        self.check_d_squared_with(Execution::default())
    }

    pub fn check_d_squared_with(&self, exec: Execution) -> Result<()> {
        let pairs: Vec<usize> = (0..self.differentials.len().saturating_sub(1)).collect();
        let bad = exec
            .map(pairs, |k| (k, self.differentials[k + 1].mul(&self.differentials[k]).is_zero()))
            .into_iter()
            .find(|(_, ok)| !ok);
        match bad {
            Some((k, _)) => Err(Error::NotAComplex { degree: k }),
            None => Ok(()),
        }
    }

    /// `rank D_k` for `k = 0..top`.
    pub fn ranks(&self, exec: Execution) -> Vec<usize> {
        let idx: Vec<usize> = (0..self.differentials.len()).collect();
        exec.map(idx, |k| self.differentials[k].rank_with(exec))
    }

    pub fn betti(&self) -> CohomologyReport {
        self.betti_with(Execution::default())
    }

    pub fn betti_with(&self, exec: Execution) -> CohomologyReport {
        let ranks = self.ranks(exec);
        let rank = |k: isize| if k < 0 { 0 } else { ranks.get(k as usize).copied().unwrap_or(0) };
        let betti: Vec<usize> =
            (0..self.dims.len()).map(|k| self.dims[k] - rank(k as isize) - rank(k as isize - 1)).collect();
        CohomologyReport::from_betti(betti, None)
    }

    /// Betti numbers plus representative cocycles.
    pub fn betti_with_representatives(&self) -> CohomologyReport {
        let coh = self.cohomology();
        let betti = coh.betti();
        let reps = coh.degrees.iter().map(|d| d.representatives.clone()).collect();
        CohomologyReport::from_betti(betti, Some(reps))
    }

    pub fn euler_of_dims(&self) -> i64 {
        alternating_sum(&self.dims)
    }

    pub fn cohomology(&self) -> Cohomology {
        self.cohomology_with(Execution::default())
    }

    pub fn cohomology_with(&self, exec: Execution) -> Cohomology {
        let idx: Vec<usize> = (0..self.dims.len()).collect();
        let degrees = exec.map(idx, |k| DegreeCohomology::compute(self, k));
        Cohomology { degrees }
    }

    pub fn is_cocycle(&self, k: usize, v: &[Q]) -> bool {
        v.len() == self.dim(k) && is_zero_vec(&self.differential(k).mul_vec(v))
    }

    pub fn is_coboundary(&self, k: usize, v: &[Q]) -> bool {
        if v.len() != self.dim(k) {
            return false;
        }
        if k == 0 {
            return is_zero_vec(v);
        }
        self.differential(k - 1).solve(v).is_some()
    }

    /// Degreewise direct sum; degree `k` of the result lists the summands'
    /// bases in order.
    pub fn direct_sum(parts: &[&FiniteComplex]) -> FiniteComplex {
        let top = parts.iter().map(|c| c.top_degree()).max().unwrap_or(0);
        let dims: Vec<usize> = (0..=top).map(|k| parts.iter().map(|c| c.dim(k)).sum()).collect();
        let differentials = (0..top)
            .map(|k| {
                let blocks: Vec<Cow<'_, QMatrix>> = parts.iter().map(|c| c.differential(k)).collect();
                let refs: Vec<&QMatrix> = blocks.iter().map(|b| b.as_ref()).collect();
                QMatrix::block_diag(&refs)
            })
            .collect();
        let g = parts.first().map_or(1, |c| c.coefficient_dim);
        let same_g = parts.iter().all(|c| c.coefficient_dim == g);
        FiniteComplex {
            label: parts.iter().map(|c| c.label.as_str()).collect::<Vec<_>>().join(" + "),
            dims,
            differentials,
            coefficient_dim: if same_g { g } else { 1 },
        }
    }
}

pub(crate) fn alternating_sum(xs: &[usize]) -> i64 {
    xs.iter().enumerate().map(|(k, &x)| if k % 2 == 0 { x as i64 } else { -(x as i64) }).sum()
}

fn serialize_reps<S: Serializer>(reps: &Option<Vec<Vec<Vec<Q>>>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    let text: Option<Vec<Vec<Vec<String>>>> = reps
        .as_ref()
        .map(|r| r.iter().map(|deg| deg.iter().map(|v| v.iter().map(format_q).collect()).collect()).collect());
    text.serialize(s)
}

/// Betti numbers, Euler characteristic and (optionally) representative
/// cocycles per degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyReport {
    pub betti: Vec<usize>,
    pub euler: i64,
    #[serde(serialize_with = "serialize_reps", skip_serializing_if = "Option::is_none")]
    pub representatives: Option<Vec<Vec<Vec<Q>>>>,
}

impl CohomologyReport {
    pub fn from_betti(betti: Vec<usize>, representatives: Option<Vec<Vec<Vec<Q>>>>) -> Self {
        let euler = alternating_sum(&betti);
        CohomologyReport { betti, euler, representatives }
    }

    pub fn total_dim(&self) -> usize {
        self.betti.iter().sum()
    }
}

/// Cohomology of one degree: representatives spanning a complement of the
/// coboundaries inside the cocycles, chosen by pivoting in column order.
#[derive(Clone, Debug)]
pub struct DegreeCohomology {
    pub degree: usize,
    pub representatives: Vec<Vec<Q>>,
    differential: QMatrix,
    // columns: independent coboundaries, then representatives
    basis: QMatrix,
    boundary_rank: usize,
}

impl DegreeCohomology {
    fn compute(c: &FiniteComplex, k: usize) -> Self {
        let n = c.dim(k);
        let d_out = c.differential(k).into_owned();
        let d_in = if k == 0 { QMatrix::zeros(n, 0) } else { c.differential(k - 1).into_owned() };
        let cocycles = d_out.kernel();
        let z = QMatrix::from_columns(n, &cocycles);
        let joined = QMatrix::hstack(&[&d_in, &z]);
        let pivots = joined.pivot_columns();
        let b_cols: Vec<usize> = pivots.iter().copied().filter(|&p| p < d_in.ncols()).collect();
        let representatives: Vec<Vec<Q>> =
            pivots.iter().filter(|&&p| p >= d_in.ncols()).map(|&p| cocycles[p - d_in.ncols()].clone()).collect();
        let mut cols: Vec<Vec<Q>> = b_cols.iter().map(|&j| d_in.column(j)).collect();
        let boundary_rank = cols.len();
        cols.extend(representatives.iter().cloned());
        DegreeCohomology { degree: k, representatives, differential: d_out, basis: QMatrix::from_columns(n, &cols), boundary_rank }
    }

    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    /// Coordinates of the class of `cocycle` in the representative basis.
    pub fn class_of(&self, cocycle: &[Q]) -> Result<Vec<Q>> {
        self.class_of_many(&[cocycle.to_vec()]).map(|mut v| v.remove(0))
    }

    pub fn class_of_many(&self, cocycles: &[Vec<Q>]) -> Result<Vec<Vec<Q>>> {
        for v in cocycles {
            if v.len() != self.differential.ncols() {
                return Err(Error::DimensionError { expected: self.differential.ncols(), found: v.len() });
            }
            if !is_zero_vec(&self.differential.mul_vec(v)) {
                return Err(Error::NotACocycle { degree: self.degree });
            }
        }
        if self.dim() == 0 {
            return Ok(vec![Vec::new(); cocycles.len()]);
        }
        self.basis
            .solve_columns(cocycles)
            .into_iter()
            .map(|s| {
                let x = s.expect("cocycles lie in coboundaries + span of representatives");
                Ok(x[self.boundary_rank..].to_vec())
            })
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct Cohomology {
    pub degrees: Vec<DegreeCohomology>,
}

impl Cohomology {
    pub fn betti(&self) -> Vec<usize> {
        self.degrees.iter().map(DegreeCohomology::dim).collect()
    }

    /// Cohomology in degree `k`, empty outside the complex.
    pub fn degree(&self, k: usize) -> Option<&DegreeCohomology> {
        self.degrees.get(k)
    }

    pub fn dim(&self, k: usize) -> usize {
        self.degree(k).map_or(0, DegreeCohomology::dim)
    }

    pub fn class_of(&self, k: usize, cocycle: &[Q]) -> Result<Vec<Q>> {
        match self.degree(k) {
            Some(d) => d.class_of(cocycle),
            None if cocycle.is_empty() => Ok(Vec::new()),
            None => Err(Error::DimensionError { expected: 0, found: cocycle.len() }),
        }
    }

    pub fn representatives(&self, k: usize) -> &[Vec<Q>] {
        self.degree(k).map_or(&[], |d| &d.representatives)
    }
}

/// Degree-preserving map `f: source -> target` with `f D = D f`.
#[derive(Clone, Debug)]
pub struct ChainMap {
    source: Arc<FiniteComplex>,
    target: Arc<FiniteComplex>,
    components: Vec<QMatrix>,
}

impl ChainMap {
    /// `components[k]` has shape `target.dim(k) x source.dim(k)`, for
    /// `k = 0..=max(top)`.
    pub fn new(source: Arc<FiniteComplex>, target: Arc<FiniteComplex>, components: Vec<QMatrix>) -> Result<Self> {
        let top = source.top_degree().max(target.top_degree());
        if components.len() != top + 1 {
            return Err(Error::DimensionError { expected: top + 1, found: components.len() });
        }
        for (k, f) in components.iter().enumerate() {
            if f.shape() != (target.dim(k), source.dim(k)) {
                return Err(Error::DimensionError { expected: target.dim(k) * source.dim(k), found: f.nrows() * f.ncols() });
            }
        }
        for k in 0..top {
            let lhs = components[k + 1].mul(&source.differential(k));
            let rhs = target.differential(k).mul(&components[k]);
            if lhs != rhs {
                return Err(Error::NotAChainMap { degree: k });
            }
        }
        Ok(ChainMap { source, target, components })
    }

    pub fn identity(c: Arc<FiniteComplex>) -> Self {
        let components = (0..=c.top_degree()).map(|k| QMatrix::identity(c.dim(k))).collect();
        ChainMap { source: c.clone(), target: c, components }
    }

    pub fn source(&self) -> &Arc<FiniteComplex> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteComplex> {
        &self.target
    }

    pub fn top_degree(&self) -> usize {
        self.components.len() - 1
    }

    /// Component in degree `k`, the zero map outside the stored range.
    pub fn component(&self, k: usize) -> Cow<'_, QMatrix> {
        match self.components.get(k) {
            Some(f) => Cow::Borrowed(f),
            None => Cow::Owned(QMatrix::zeros(self.target.dim(k), self.source.dim(k))),
        }
    }

    pub fn components(&self) -> &[QMatrix] {
        &self.components
    }

    /// `self . first`.
    pub fn compose(&self, first: &ChainMap) -> Result<ChainMap> {
        if first.target.dims() != self.source.dims() {
            return Err(Error::InvalidInput("composition of chain maps with mismatched middle complex".into()));
        }
        let top = first.source.top_degree().max(self.target.top_degree()).max(self.source.top_degree());
        let components = (0..=top).map(|k| self.component(k).mul(&first.component(k))).collect();
        ChainMap::new(first.source.clone(), self.target.clone(), trim(components, &first.source, &self.target))
    }

    /// Matrix of the induced map `H^k(source) -> H^k(target)` in the
    /// representative bases.
    pub fn induced(&self, k: usize, src: &Cohomology, tgt: &Cohomology) -> Result<QMatrix> {
        let f = self.component(k);
        let images: Vec<Vec<Q>> = src.representatives(k).iter().map(|r| f.mul_vec(r)).collect();
        let cols = match tgt.degree(k) {
            Some(d) => d.class_of_many(&images)?,
            None => vec![Vec::new(); images.len()],
        };
        Ok(QMatrix::from_columns(tgt.dim(k), &cols))
    }
}

fn trim(mut comps: Vec<QMatrix>, src: &FiniteComplex, tgt: &FiniteComplex) -> Vec<QMatrix> {
    comps.truncate(src.top_degree().max(tgt.top_degree()) + 1);
    comps
}

/// Zero vector of the right length for degree `k`.
pub fn zero_cochain(c: &FiniteComplex, k: usize) -> Vec<Q> {
    zero_vec(c.dim(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{q, unit_vec};

    /// Triangle boundary: 3 vertices, 3 edges (01, 02, 12).
    pub(crate) fn circle() -> FiniteComplex {
        let rows = vec![vec![q(-1), q(1), q(0)], vec![q(-1), q(0), q(1)], vec![q(0), q(-1), q(1)]];
        FiniteComplex::new(vec![3, 3], vec![QMatrix::from_dense(3, 3, &rows)]).unwrap()
    }

    #[test]
    fn circle_betti() {
        let r = circle().betti();
        assert_eq!(r.betti, vec![1, 1]);
        assert_eq!(r.euler, 0);
    }

    #[test]
    fn zero_differential_betti() {
        let c = FiniteComplex::zero_differentials(vec![2, 5, 3]);
        assert_eq!(c.betti().betti, vec![2, 5, 3]);
        assert_eq!(c.betti().euler, c.euler_of_dims());
    }

    #[test]
    fn rejects_non_complex() {
        let d0 = QMatrix::identity(1);
        let d1 = QMatrix::identity(1);
        assert_eq!(FiniteComplex::new(vec![1, 1, 1], vec![d0, d1]), Err(Error::NotAComplex { degree: 0 }));
        assert!(matches!(
            FiniteComplex::new(vec![1, 2], vec![QMatrix::identity(1)]),
            Err(Error::DimensionError { .. })
        ));
    }

    #[test]
    fn class_of_examples() {
        let c = circle();
        let coh = c.cohomology();
        // coboundary has zero class
        let f = c.differential(0).mul_vec(&[q(1), q(2), q(-3)]);
        assert_eq!(coh.class_of(1, &f).unwrap(), vec![q(0)]);
        for (i, r) in coh.representatives(1).iter().enumerate() {
            assert_eq!(coh.class_of(1, r).unwrap(), unit_vec(1, i));
        }
        // winding cocycle: 01 + 12 - 02
        let winding = vec![q(1), q(-1), q(1)];
        assert_ne!(coh.class_of(1, &winding).unwrap(), vec![q(0)]);
        assert!(matches!(coh.class_of(0, &[q(1), q(0), q(0)]), Err(Error::NotACocycle { degree: 0 })));
        assert!(c.is_coboundary(1, &f));
        assert!(!c.is_coboundary(1, &winding));
        assert!(c.is_cocycle(0, &[q(1), q(1), q(1)]));
    }

    #[test]
    fn direct_sum_adds_betti() {
        let c = circle();
        let s = FiniteComplex::direct_sum(&[&c, &FiniteComplex::zero_differentials(vec![1, 0, 2])]);
        assert_eq!(s.betti().betti, vec![2, 1, 2]);
    }

    #[test]
    fn chain_map_checks_commutation() {
        let c = Arc::new(circle());
        let id = ChainMap::identity(c.clone());
        let coh = c.cohomology();
        assert_eq!(id.induced(1, &coh, &coh).unwrap(), QMatrix::identity(1));
        let bad = vec![QMatrix::identity(3), QMatrix::zeros(3, 3)];
        assert!(matches!(ChainMap::new(c.clone(), c, bad), Err(Error::NotAChainMap { degree: 0 })));
    }
}
