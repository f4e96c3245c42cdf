use serde::Serialize;

use gderham_core::cochain::{mayer_vietoris, ExactnessNode, FiniteComplex};
use gderham_core::hodge::{
    adjointness_residual, duality_pairing, duality_pairing_harmonic, hodge_report, metricize, self_adjointness_residual,
    BaseMetric, DualityReport, HarmonicDualityReport, HodgeReport,
};
use gderham_core::invariants::{bockstein_report, claims_check, g_betti, super_structure, BocksteinModel, IdealChoice};
use gderham_core::liealg::{load_lie, LieAlgebra};
use gderham_core::linalg::QMatrix;
use gderham_core::models::{
    bundled_cover, chevalley_eilenberg, load_mesh, product_model_rn, simplicial_gvalued, simplicial_scalar, ModelSpec,
    PolyDeRham,
};
use gderham_core::{Error, Execution, Result};

use crate::render::{list, opt_f64, Report};
use crate::Common;

const ADJOINTNESS_SAMPLES: usize = 20;

fn setup(common: &Common) -> Result<LieAlgebra> {
    if !(common.tolerance > 0.0 && common.tolerance.is_finite()) {
        return Err(Error::InvalidInput(format!("--tolerance must be positive, got {}", common.tolerance)));
    }
    load_lie(&common.lie)
}

fn override_form(common: &Common, l: &LieAlgebra) -> Option<QMatrix> {
    common.override_metric.then(|| QMatrix::identity(l.dim()))
}

#[derive(Serialize)]
struct LieInfo {
    name: String,
    labels: Vec<String>,
    dim: usize,
    center_dim: usize,
    derived_dim: usize,
    centralizer_dim: usize,
    killing_signature: (usize, usize, usize),
    abelian: bool,
    semisimple: bool,
    compact_type: bool,
}

pub fn lie_info(common: &Common) -> Result<Report> {
    let l = setup(common)?;
    let info = LieInfo {
        name: l.name().to_string(),
        labels: l.labels().to_vec(),
        dim: l.dim(),
        center_dim: l.center().dim(),
        derived_dim: l.derived_subalgebra().dim(),
        centralizer_dim: l.commutator_centralizer().dim(),
        killing_signature: l.killing_signature(),
        abelian: l.is_abelian(),
        semisimple: l.is_semisimple(),
        compact_type: l.is_compact_type(),
    };
    let mut r = Report::new("lie-info", &info);
    let (p, n, z) = info.killing_signature;
    r.line(format!("algebra: {} (basis {})", info.name, info.labels.join(", ")))
        .line(format!(
            "dims (g, center, [g,g], [g,g]'): ({}, {}, {}, {})",
            info.dim, info.center_dim, info.derived_dim, info.centralizer_dim
        ))
        .line(format!("Killing signature (+, -, 0): ({p}, {n}, {z})"))
        .flag("abelian: ", info.abelian)
        .flag("semisimple: ", info.semisimple)
        .flag("compact type: ", info.compact_type);
    Ok(r)
}

#[derive(Serialize)]
struct CohomologyOut {
    lie: String,
    model: String,
    betti: Vec<usize>,
    euler: i64,
    abelian_scaling: Option<bool>,
}

pub fn cohomology(common: &Common, model: &str) -> Result<Report> {
    let l = setup(common)?;
    let spec = ModelSpec::parse(model)?;
    let (betti, abelian_scaling) = match &spec {
        ModelSpec::Simplicial { .. } => {
            let mesh = spec.mesh()?;
            let g = g_betti(&simplicial_gvalued(&mesh, &l)?, &l, (!mesh.has_holonomy()).then(|| simplicial_scalar(&mesh)).transpose()?.as_ref())?;
            (g.report, g.abelian_scaling)
        }
        _ => (spec.betti(&l, Execution::default())?, None),
    };
    let out = CohomologyOut { lie: l.name().to_string(), model: spec.to_string(), betti: betti.betti, euler: betti.euler, abelian_scaling };
    let mut r = Report::new("cohomology", &out);
    r.line(format!("algebra: {}", out.lie))
        .line(format!("model: {}", out.model))
        .line(format!("betti {}", list(&out.betti)))
        .line(format!("euler {}", out.euler));
    if let Some(ok) = out.abelian_scaling {
        r.flag("abelian scaling b_k = g * b_k(scalar): ", ok);
    }
    Ok(r)
}

fn hodge_inputs(spec: &ModelSpec, l: &LieAlgebra) -> Result<(FiniteComplex, BaseMetric)> {
    Ok(match spec {
        ModelSpec::Ce => (chevalley_eilenberg(l)?, BaseMetric::Identity),
        ModelSpec::Rn { n, max_degree } => {
            let p = PolyDeRham::new(*n, l.dim(), *max_degree)?;
            let weights = (0..=*n).map(|k| p.metric_weights(k)).collect();
            (p.complex(), BaseMetric::Diagonal(weights))
        }
        ModelSpec::Product { n, max_degree } => (product_model_rn(*n, *max_degree, l)?.assemble(), BaseMetric::Identity),
        ModelSpec::Simplicial { .. } => (simplicial_gvalued(&spec.mesh()?, l)?, BaseMetric::Identity),
    })
}

#[derive(Serialize)]
struct HodgeOut {
    lie: String,
    model: String,
    tolerance: f64,
    seed: u64,
    #[serde(flatten)]
    report: HodgeReport,
    adjointness_residual: f64,
    self_adjointness_residual: f64,
}

pub fn hodge(common: &Common, model: &str) -> Result<Report> {
    let l = setup(common)?;
    let spec = ModelSpec::parse(model)?;
    let (c, base) = hodge_inputs(&spec, &l)?;
    let w = override_form(common, &l);
    let mc = metricize(&c, &l, &base, w.as_ref(), common.tolerance)?;
    let report = hodge_report(&c, &mc)?;
    let top = mc.top_degree();
    let mut adj: f64 = 0.0;
    let mut selfadj: f64 = 0.0;
    for k in 0..=top {
        if k < top {
            adj = adj.max(adjointness_residual(&mc, k, ADJOINTNESS_SAMPLES, common.seed.wrapping_add(k as u64))?);
        }
        selfadj = selfadj.max(self_adjointness_residual(&mc, k)?);
    }
    let out = HodgeOut {
        lie: l.name().to_string(),
        model: spec.to_string(),
        tolerance: common.tolerance,
        seed: common.seed,
        report,
        adjointness_residual: adj,
        self_adjointness_residual: selfadj,
    };
    let mut r = Report::new("hodge", &out);
    r.line(format!("algebra: {}", out.lie))
        .line(format!("model: {}", out.model))
        .line(format!("exact betti    {}", list(&out.report.exact_betti)))
        .line(format!("dim ker laplace {}", list(&out.report.harmonic_dims)))
        .line(format!(
            "spectral gaps  [{}]",
            out.report.spectral_gaps.iter().map(|g| opt_f64(*g)).collect::<Vec<_>>().join(", ")
        ))
        .line(format!("adjointness residual {:.3e}", out.adjointness_residual))
        .line(format!("self-adjointness residual {:.3e}", out.self_adjointness_residual))
        .flag("hodge theorem holds: ", out.report.agrees);
    Ok(r)
}

#[derive(Serialize)]
struct DualityOut {
    lie: String,
    model: String,
    degrees: Vec<DualityDegree>,
}

#[derive(Serialize)]
struct DualityDegree {
    exact: DualityReport,
    harmonic: HarmonicDualityReport,
}

pub fn duality(common: &Common, model: &str, degree: Option<usize>) -> Result<Report> {
    let l = setup(common)?;
    let spec = ModelSpec::parse(model)?;
    let mesh = spec.mesh()?;
    let w = override_form(common, &l);
    let degrees: Vec<usize> = match degree {
        Some(d) => vec![d],
        None => (0..=mesh.dim()).collect(),
    };
    let degrees = degrees
        .into_iter()
        .map(|k| {
            Ok(DualityDegree {
                exact: duality_pairing(&mesh, &l, k, w.as_ref())?,
                harmonic: duality_pairing_harmonic(&mesh, &l, k, w.as_ref(), common.tolerance)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let out = DualityOut { lie: l.name().to_string(), model: spec.to_string(), degrees };
    let mut r = Report::new("duality", &out);
    r.line(format!("algebra: {}", out.lie)).line(format!("model: {}", out.model));
    for d in &out.degrees {
        let e = &d.exact;
        r.line(format!(
            "H^{} x H^{}: b = ({}, {}), exact rank {}, harmonic rank {}",
            e.degree, e.dual_degree, e.betti, e.dual_betti, e.rank, d.harmonic.rank
        ));
        r.flag(format!("  nonsingular (k={}): ", e.degree), e.nonsingular);
    }
    Ok(r)
}

#[derive(Serialize)]
struct MvOut {
    lie: String,
    model: String,
    betti: Vec<usize>,
    recovered_betti: Vec<usize>,
    exact: bool,
    exactness: Vec<ExactnessNode>,
}

pub fn mv(common: &Common, model: &str, cover: Option<(&str, &str)>) -> Result<Report> {
    let l = setup(common)?;
    let spec = ModelSpec::parse(model)?;
    let mesh = spec.mesh()?;
    let (u, v) = match cover {
        Some((u, v)) => (load_mesh(u)?, load_mesh(v)?),
        None => match &spec {
            ModelSpec::Simplicial { mesh } => bundled_cover(mesh)?,
            _ => unreachable!("mesh() succeeded"),
        },
    };
    let seq = mayer_vietoris(&mesh, &u, &v, &l)?;
    let exactness = seq.les.exactness();
    let out = MvOut {
        lie: l.name().to_string(),
        model: spec.to_string(),
        exact: seq.is_exact(),
        betti: seq.betti,
        recovered_betti: seq.recovered_betti,
        exactness,
    };
    let mut r = Report::new("mv", &out);
    r.line(format!("algebra: {}", out.lie))
        .line(format!("model: {}", out.model))
        .line(format!("betti (direct)    {}", list(&out.betti)))
        .line(format!("betti (recovered) {}", list(&out.recovered_betti)))
        .flag("LES exact: ", out.exact);
    Ok(r)
}

pub fn bockstein(common: &Common, model: &str, ideal: &str) -> Result<Report> {
    let l = setup(common)?;
    let choice: IdealChoice = ideal.parse()?;
    let spec = ModelSpec::parse(model)?;
    let mesh;
    let which = match &spec {
        ModelSpec::Ce => BocksteinModel::ChevalleyEilenberg,
        ModelSpec::Simplicial { .. } => {
            mesh = spec.mesh()?;
            BocksteinModel::Simplicial(&mesh)
        }
        other => return Err(Error::InvalidInput(format!("bockstein supports ce and simplicial models, not {other}"))),
    };
    let report = bockstein_report(&l, &choice.subspace(&l), which)?;
    let mut r = Report::new("bockstein", &report);
    r.line(format!("algebra: {}", report.lie))
        .line(format!("ideal: {choice} (dim {})", report.ideal_dim))
        .line(format!("model: {spec}"))
        .line(format!("H(a)   {}", list(&report.sub_betti)))
        .line(format!("H(L)   {}", list(&report.middle_betti)))
        .line(format!("H(L/a) {}", list(&report.quotient_betti)))
        .line(format!("connecting ranks {}", list(&report.connecting_ranks())))
        .flag("LES exact: ", report.exact);
    Ok(r)
}

pub fn claims(common: &Common, n: usize, truncation: Option<usize>) -> Result<Report> {
    let l = setup(common)?;
    let truncation = truncation.unwrap_or(n + l.dim());
    let report = claims_check(&l, n, truncation, Execution::default())?;
    let mut r = Report::new("claims", &report);
    let s = report.structure;
    r.line(format!("algebra: {} (g = {}, g_c = {}, g' = {})", report.lie, s.g, s.g_c, s.g_prime))
        .line(format!("R^{} with polynomial truncation N = {} (stable at N + 1)", report.n, report.truncation))
        .line(format!("product-model betti {}", list(&report.computed_betti)))
        .line(format!(
            "point: paper {}, product model {}, untwisted {}",
            report.point.paper, report.point.product_model, report.point.untwisted
        ))
        .line(format!("{:<16} {:<24} {:>6} {:>9}  verdict", "claim", "inputs", "paper", "computed"));
    for row in &report.rows {
        let claim = serde_json::to_value(row.claim).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default();
        let head = format!("{claim:<16} {:<24} {:>6} {:>9}  ", row.inputs, row.paper, row.computed);
        r.verdict(head, row.agree, "agree", "disagree");
        if let Some(note) = &row.note {
            r.line(format!("    note: {note}"));
        }
    }
    Ok(r)
}

pub fn superalgebra(common: &Common, model: &str) -> Result<Report> {
    let l = setup(common)?;
    let spec = ModelSpec::parse(model)?;
    let m = spec.form_model(&l)?;
    let report = super_structure(m.as_ref(), Execution::default())?;
    let mut r = Report::new("super", &report);
    r.line(format!("model: {}", report.model))
        .line(format!("betti {}", list(&report.betti)))
        .line(format!("even dim {}, odd dim {}", report.even_dim, report.odd_dim))
        .line(format!("nonzero brackets: {}", report.brackets.len()));
    for e in &report.brackets {
        r.line(format!("  [{:?}, {:?}] = {} in H^{}", e.left, e.right, list(&e.result), e.degree));
    }
    r.flag("super-commutative: ", report.super_commutative)
        .flag("graded Jacobi: ", report.graded_jacobi)
        .line(format!("lower central series {}", list(&report.lower_central_series)))
        .flag("nilpotent: ", report.nilpotent)
        .line(format!("even part lower central series {}", list(&report.even_lower_central_series)))
        .flag("even part nilpotent: ", report.even_nilpotent);
    Ok(r)
}
