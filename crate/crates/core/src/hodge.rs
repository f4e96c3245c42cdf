//! Hodge theory on finite complexes in floating point, and the Poincaré
//! duality pairing (exact via cup product, float via harmonic forms).

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cochain::FiniteComplex;
use crate::error::{Error, Result};
use crate::liealg::LieAlgebra;
use crate::linalg::{format_q, inertia, QMatrix, Q};
use crate::models::{simplicial_gvalued, SimplicialComplex, SimplicialModel};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Inner product on the form part of each degree, before tensoring with
/// the value form.
#[derive(Clone, Debug, PartialEq)]
pub enum BaseMetric {
    Identity,
    /// Diagonal weights per degree, one per scalar basis element.
    Diagonal(Vec<Vec<f64>>),
}

/// `-Killing` for compact-type algebras, or an explicit override which
/// must be symmetric positive definite.
pub fn value_form(l: &LieAlgebra, override_form: Option<&QMatrix>) -> Result<QMatrix> {
    match override_form {
        Some(w) => {
            let n = l.dim();
            if w.shape() != (n, n) {
                return Err(Error::DimensionError { expected: n * n, found: w.nrows() * w.ncols() });
            }
            if w != &w.transpose() || inertia(w) != (n, 0, 0) {
                return Err(Error::InvalidInput("override metric must be symmetric positive definite".into()));
            }
            Ok(w.clone())
        }
        None if l.is_compact_type() => Ok(l.negative_killing()),
        None => Err(Error::NotCompactType),
    }
}

/// A complex with inner products `G_k` on every degree.
#[derive(Clone, Debug)]
pub struct MetricComplex {
    dims: Vec<usize>,
    d: Vec<DMatrix<f64>>,
    g: Vec<DMatrix<f64>>,
    tolerance: f64,
}

fn condition(m: &DMatrix<f64>) -> f64 {
    let ev = SymmetricEigen::new(m.clone()).eigenvalues;
    let max = ev.iter().fold(0.0f64, |a, &b| a.max(b.abs()));
    let min = ev.iter().fold(f64::INFINITY, |a, &b| a.min(b.abs()));
    if min == 0.0 {
        f64::INFINITY
    } else {
        max / min
    }
}

/// `G_k = B_k ⊗ W` with `W` the value form of `l`.
pub fn metricize(
    c: &FiniteComplex,
    l: &LieAlgebra,
    base: &BaseMetric,
    override_form: Option<&QMatrix>,
    tolerance: f64,
) -> Result<MetricComplex> {
    if tolerance <= 0.0 || !tolerance.is_finite() {
        return Err(Error::InvalidInput(format!("tolerance must be positive, got {tolerance}")));
    }
    let w = value_form(l, override_form)?.to_f64();
    let vdim = l.dim();
    if c.coefficient_dim() != vdim {
        return Err(Error::DimensionError { expected: vdim, found: c.coefficient_dim() });
    }
    let dims = c.dims().to_vec();
    let mut g = Vec::with_capacity(dims.len());
    for (k, &dk) in dims.iter().enumerate() {
        if dk % vdim.max(1) != 0 {
            return Err(Error::DimensionError { expected: vdim, found: dk });
        }
        let blocks = dk / vdim.max(1);
        let b = match base {
            BaseMetric::Identity => DMatrix::identity(blocks, blocks),
            BaseMetric::Diagonal(weights) => {
                let wk = weights.get(k).ok_or(Error::DimensionError { expected: dims.len(), found: weights.len() })?;
                if wk.len() != blocks {
                    return Err(Error::DimensionError { expected: blocks, found: wk.len() });
                }
                DMatrix::from_diagonal(&DVector::from_vec(wk.clone()))
            }
        };
        let gk = b.kronecker(&w);
        if dk > 0 {
            let min = SymmetricEigen::new(gk.clone()).eigenvalues.min();
            if min <= tolerance {
                return Err(Error::NumericalError {
                    message: format!("inner product on degree {k} is not positive definite"),
                    condition: condition(&gk),
                });
            }
        }
        g.push(gk);
    }
    let d = c.differentials().iter().map(QMatrix::to_f64).collect();
    Ok(MetricComplex { dims, d, g, tolerance })
}

impl MetricComplex {
    pub fn top_degree(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn inner_product(&self, k: usize) -> &DMatrix<f64> {
        &self.g[k]
    }

    fn check_degree(&self, k: usize) -> Result<()> {
        if k > self.top_degree() {
            return Err(Error::DegreeError { degree: k, top: self.top_degree() });
        }
        Ok(())
    }

    /// `D_k` as floats, zero out of the top degree.
    pub fn differential(&self, k: usize) -> DMatrix<f64> {
        self.d.get(k).cloned().unwrap_or_else(|| DMatrix::zeros(self.dim(k + 1), self.dim(k)))
    }

    fn dim(&self, k: usize) -> usize {
        self.dims.get(k).copied().unwrap_or(0)
    }

    fn inverse_g(&self, k: usize) -> Result<DMatrix<f64>> {
        let gk = &self.g[k];
        gk.clone().cholesky().map(|c| c.inverse()).ok_or_else(|| Error::NumericalError {
            message: format!("Cholesky factorization failed in degree {k}"),
            condition: condition(gk),
        })
    }

    pub fn inner(&self, k: usize, a: &DVector<f64>, b: &DVector<f64>) -> f64 {
        (a.transpose() * &self.g[k] * b)[(0, 0)]
    }

    pub fn norm(&self, k: usize, a: &DVector<f64>) -> f64 {
        self.inner(k, a, a).max(0.0).sqrt()
    }
}

/// `d*: C^k -> C^{k-1}`, the metric adjoint `G_{k-1}^{-1} D_{k-1}^T G_k`.
pub fn codifferential(mc: &MetricComplex, k: usize) -> Result<DMatrix<f64>> {
    if k == 0 || k > mc.top_degree() {
        return Err(Error::DegreeError { degree: k, top: mc.top_degree() });
    }
    Ok(mc.inverse_g(k - 1)? * mc.differential(k - 1).transpose() * &mc.g[k])
}

/// `Δ_k = d* d + d d*`.
pub fn laplacian(mc: &MetricComplex, k: usize) -> Result<DMatrix<f64>> {
    mc.check_degree(k)?;
    let n = mc.dim(k);
    let mut lap = DMatrix::zeros(n, n);
    if k < mc.top_degree() {
        lap += codifferential(mc, k + 1)? * mc.differential(k);
    }
    if k > 0 {
        lap += mc.differential(k - 1) * codifferential(mc, k)?;
    }
    Ok(lap)
}

/// `ker Δ_k` with a `G_k`-orthonormal basis.
#[derive(Clone, Debug)]
pub struct HarmonicSpace {
    pub degree: usize,
    pub basis: Vec<DVector<f64>>,
    /// Eigenvalues of `Δ_k`, ascending.
    pub eigenvalues: Vec<f64>,
    /// Smallest eigenvalue above the kernel threshold, if any.
    pub spectral_gap: Option<f64>,
    /// Largest eigenvalue counted as zero, if any.
    pub kernel_max: Option<f64>,
    pub threshold: f64,
}

impl HarmonicSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// `G = L L^T` turns `Δ` into the symmetric `L^T Δ L^{-T}`.
fn symmetrized(mc: &MetricComplex, k: usize, lap: &DMatrix<f64>) -> Result<(DMatrix<f64>, DMatrix<f64>)> {
    let gk = &mc.g[k];
    let chol = gk.clone().cholesky().ok_or_else(|| Error::NumericalError {
        message: format!("Cholesky factorization failed in degree {k}"),
        condition: condition(gk),
    })?;
    let l = chol.l();
    let l_inv_t = l.clone().try_inverse().ok_or_else(|| Error::NumericalError {
        message: format!("singular Cholesky factor in degree {k}"),
        condition: condition(gk),
    })?
    .transpose();
    let s = l.transpose() * lap * &l_inv_t;
    Ok(((&s + s.transpose()) * 0.5, l_inv_t))
}

pub fn harmonic_space(mc: &MetricComplex, k: usize) -> Result<HarmonicSpace> {
    let lap = laplacian(mc, k)?;
    let n = lap.nrows();
    if n == 0 {
        return Ok(HarmonicSpace {
            degree: k,
            basis: Vec::new(),
            eigenvalues: Vec::new(),
            spectral_gap: None,
            kernel_max: None,
            threshold: mc.tolerance,
        });
    }
    let (s, l_inv_t) = symmetrized(mc, k, &lap)?;
    let eig = SymmetricEigen::new(s);
    if eig.eigenvalues.iter().any(|v| !v.is_finite()) {
        return Err(Error::NumericalError { message: "eigensolver produced non-finite values".into(), condition: condition(&mc.g[k]) });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let scale = eigenvalues.last().copied().unwrap_or(0.0).max(1.0);
    let threshold = mc.tolerance * scale;
    let kernel: Vec<usize> = order.iter().copied().filter(|&i| eig.eigenvalues[i] <= threshold).collect();
    let basis = kernel.iter().map(|&i| &l_inv_t * eig.eigenvectors.column(i)).collect();
    let spectral_gap = eigenvalues.iter().copied().find(|&v| v > threshold);
    let kernel_max = eigenvalues.iter().copied().rfind(|&v| v <= threshold);
    Ok(HarmonicSpace { degree: k, basis, eigenvalues, spectral_gap, kernel_max, threshold })
}

/// `v = h + d a + d* b` with the three parts mutually orthogonal.
#[derive(Clone, Debug)]
pub struct HodgeDecomposition {
    pub harmonic: DVector<f64>,
    pub exact: DVector<f64>,
    pub coexact: DVector<f64>,
}

/// `max |<dα, β> - <α, d*β>| / (|α| |β|)` over `samples` random pairs in
/// degrees `k`, `k+1`.
pub fn adjointness_residual(mc: &MetricComplex, k: usize, samples: usize, seed: u64) -> Result<f64> {
    let star = codifferential(mc, k + 1)?;
    let d = mc.differential(k);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let a = DVector::from_fn(mc.dim(k), |_, _| rng.gen_range(-1.0..1.0));
        let b = DVector::from_fn(mc.dim(k + 1), |_, _| rng.gen_range(-1.0..1.0));
        let scale = mc.norm(k, &a) * mc.norm(k + 1, &b);
        if scale == 0.0 {
            continue;
        }
        let r = (mc.inner(k + 1, &(&d * &a), &b) - mc.inner(k, &a, &(&star * &b))).abs() / scale;
        worst = worst.max(r);
    }
    Ok(worst)
}

/// `|G Δ - Δ^T G| / |G Δ|` in the Frobenius norm.
pub fn self_adjointness_residual(mc: &MetricComplex, k: usize) -> Result<f64> {
    let lap = laplacian(mc, k)?;
    let gl = &mc.g[k] * &lap;
    let norm = gl.norm();
    Ok(if norm == 0.0 { 0.0 } else { (&gl - lap.transpose() * &mc.g[k]).norm() / norm })
}

/// `G`-orthogonal projection onto the column span of `a`.
fn project_onto(g: &DMatrix<f64>, a: &DMatrix<f64>, v: &DVector<f64>, tol: f64) -> Result<DVector<f64>> {
    if a.ncols() == 0 {
        return Ok(DVector::zeros(v.len()));
    }
    let gram = a.transpose() * g * a;
    let pinv = gram.clone().pseudo_inverse(tol * gram.norm().max(1.0)).map_err(|e| Error::NumericalError {
        message: e.to_string(),
        condition: condition(&gram),
    })?;
    Ok(a * (pinv * (a.transpose() * g * v)))
}

pub fn hodge_decomposition(mc: &MetricComplex, k: usize, v: &DVector<f64>) -> Result<HodgeDecomposition> {
    mc.check_degree(k)?;
    if v.len() != mc.dim(k) {
        return Err(Error::DimensionError { expected: mc.dim(k), found: v.len() });
    }
    let h = harmonic_space(mc, k)?;
    let g = &mc.g[k];
    let mut harmonic = DVector::zeros(v.len());
    for b in &h.basis {
        harmonic += b * (b.transpose() * g * v)[(0, 0)];
    }
    let exact = if k > 0 { project_onto(g, &mc.differential(k - 1), v, mc.tolerance)? } else { DVector::zeros(v.len()) };
    let coexact =
        if k < mc.top_degree() { project_onto(g, &codifferential(mc, k + 1)?, v, mc.tolerance)? } else { DVector::zeros(v.len()) };
    Ok(HodgeDecomposition { harmonic, exact, coexact })
}

/// Exact duality pairing `H^k x H^{n-k} -> Q`.
#[derive(Clone, Debug, Serialize)]
pub struct DualityReport {
    pub degree: usize,
    pub dual_degree: usize,
    pub betti: usize,
    pub dual_betti: usize,
    #[serde(serialize_with = "serialize_matrix")]
    pub matrix: Vec<Vec<Q>>,
    pub rank: usize,
    /// `rank = b_k = b_{n-k}`.
    pub nonsingular: bool,
    /// `b_k = b_{n-k}`; a square pairing is possible at all.
    pub square: bool,
}

fn serialize_matrix<S: serde::Serializer>(m: &[Vec<Q>], s: S) -> std::result::Result<S::Ok, S::Error> {
    let text: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(format_q).collect()).collect();
    text.serialize(s)
}

fn duality_setup<'a>(
    k: &'a SimplicialComplex,
    l: &LieAlgebra,
    degree: usize,
    override_form: Option<&QMatrix>,
) -> Result<(&'a [i64], QMatrix, usize)> {
    let orientation = k.orientation().ok_or_else(|| Error::NotOriented("no fundamental cycle".into()))?;
    if k.has_holonomy() {
        return Err(Error::Unsupported("duality pairing with nontrivial holonomy".into()));
    }
    let n = k.dim();
    if degree > n {
        return Err(Error::DegreeError { degree, top: n });
    }
    Ok((orientation, value_form(l, override_form)?, n))
}

/// `P[a][b] = <B(α_a ⌣ β_b), [K]>` over cohomology bases of degrees `k`
/// and `n-k`, with `B` the value form.
pub fn duality_pairing(
    mesh: &SimplicialComplex,
    l: &LieAlgebra,
    degree: usize,
    override_form: Option<&QMatrix>,
) -> Result<DualityReport> {
    let (orientation, w, n) = duality_setup(mesh, l, degree, override_form)?;
    let model = SimplicialModel::new(mesh, l, "mesh")?;
    let coh = model_cohomology(mesh, l)?;
    let dual = n - degree;
    let (alphas, betas) = (coh.representatives(degree), coh.representatives(dual));
    let matrix: Vec<Vec<Q>> = alphas
        .iter()
        .map(|a| betas.iter().map(|b| evaluate_cup(&model, &w, orientation, degree, a, dual, b)).collect())
        .collect();
    let rank = if alphas.is_empty() || betas.is_empty() {
        0
    } else {
        QMatrix::from_dense(alphas.len(), betas.len(), &matrix).rank()
    };
    let square = alphas.len() == betas.len();
    Ok(DualityReport {
        degree,
        dual_degree: dual,
        betti: alphas.len(),
        dual_betti: betas.len(),
        matrix,
        rank,
        nonsingular: square && rank == alphas.len(),
        square,
    })
}

fn model_cohomology(mesh: &SimplicialComplex, l: &LieAlgebra) -> Result<crate::cochain::Cohomology> {
    Ok(simplicial_gvalued(mesh, l)?.cohomology())
}

fn evaluate_cup(model: &SimplicialModel, w: &QMatrix, orientation: &[i64], p: usize, a: &[Q], q: usize, b: &[Q]) -> Q {
    let values = model.cup_with(p, a, q, b, 1, |x, y| {
        let wy = w.mul_vec(y);
        vec![x.iter().zip(&wy).map(|(u, v)| u * v).sum()]
    });
    values.iter().zip(orientation).map(|(v, &s)| if s > 0 { v.clone() } else { -v.clone() }).sum()
}

/// The same pairing evaluated on harmonic representatives in floating point.
#[derive(Clone, Debug, Serialize)]
pub struct HarmonicDualityReport {
    pub degree: usize,
    pub dual_degree: usize,
    pub matrix: Vec<Vec<f64>>,
    pub rank: usize,
    pub singular_values: Vec<f64>,
}

pub fn duality_pairing_harmonic(
    mesh: &SimplicialComplex,
    l: &LieAlgebra,
    degree: usize,
    override_form: Option<&QMatrix>,
    tolerance: f64,
) -> Result<HarmonicDualityReport> {
    let (orientation, w, n) = duality_setup(mesh, l, degree, override_form)?;
    let c = simplicial_gvalued(mesh, l)?;
    let mc = metricize(&c, l, &BaseMetric::Identity, override_form, tolerance)?;
    let dual = n - degree;
    let (ha, hb) = (harmonic_space(&mc, degree)?, harmonic_space(&mc, dual)?);
    let g = l.dim();
    let wf = w.to_f64();
    let matrix: Vec<Vec<f64>> = ha
        .basis
        .iter()
        .map(|a| {
            hb.basis
                .iter()
                .map(|b| {
                    mesh.simplices(n)
                        .iter()
                        .zip(orientation)
                        .map(|(tau, &s)| {
                            let front = mesh.index_of(&tau[..=degree]).expect("face");
                            let back = mesh.index_of(&tau[degree..]).expect("face");
                            let x = a.rows(front * g, g);
                            let y = b.rows(back * g, g);
                            s as f64 * (x.transpose() * &wf * y)[(0, 0)]
                        })
                        .sum()
                })
                .collect()
        })
        .collect();
    let (rows, cols) = (ha.dim(), hb.dim());
    let singular_values: Vec<f64> = if rows == 0 || cols == 0 {
        Vec::new()
    } else {
        let m = DMatrix::from_fn(rows, cols, |i, j| matrix[i][j]);
        let mut sv: Vec<f64> = m.svd(false, false).singular_values.iter().copied().collect();
        sv.sort_by(|a, b| b.total_cmp(a));
        sv
    };
    let top = singular_values.first().copied().unwrap_or(0.0).max(1.0);
    let rank = singular_values.iter().filter(|&&s| s > tolerance * top * 1e3).count();
    Ok(HarmonicDualityReport { degree, dual_degree: dual, matrix, rank, singular_values })
}

/// Exact `b_k` next to `dim ker Δ_k` for every degree.
#[derive(Clone, Debug, Serialize)]
pub struct HodgeReport {
    pub exact_betti: Vec<usize>,
    pub harmonic_dims: Vec<usize>,
    pub spectral_gaps: Vec<Option<f64>>,
    pub kernel_max: Vec<Option<f64>>,
    pub agrees: bool,
}

pub fn hodge_report(c: &FiniteComplex, mc: &MetricComplex) -> Result<HodgeReport> {
    let exact_betti = c.betti().betti;
    let spaces = (0..=mc.top_degree()).map(|k| harmonic_space(mc, k)).collect::<Result<Vec<_>>>()?;
    let harmonic_dims: Vec<usize> = spaces.iter().map(HarmonicSpace::dim).collect();
    Ok(HodgeReport {
        agrees: harmonic_dims == exact_betti,
        exact_betti,
        harmonic_dims,
        spectral_gaps: spaces.iter().map(|h| h.spectral_gap).collect(),
        kernel_max: spaces.iter().map(|h| h.kernel_max).collect(),
    })
}
