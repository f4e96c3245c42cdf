//! Property tests. The seed is fixed; override it with `GDERHAM_SEED`.

use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

use gderham_core::cochain::{kunneth_convolution, total_complex, FiniteComplex};
use gderham_core::hodge::{harmonic_space, metricize, BaseMetric, DEFAULT_TOLERANCE};
use gderham_core::liealg::catalog;
use gderham_core::linalg::{add_vec, q, scale_vec, sub_vec, QMatrix, Q};
use gderham_core::models::{
    bundled_mesh, chevalley_eilenberg, simplicial_scalar, CeModel, FormModel, GradedForm, PolyModel,
};
use gderham_core::Execution;

fn config(cases: u32) -> Config {
    let seed = std::env::var("GDERHAM_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(0x5eed);
    Config { cases, rng_seed: RngSeed::Fixed(seed), failure_persistence: None, ..Config::default() }
}

fn small_matrix() -> impl Strategy<Value = QMatrix> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
        prop::collection::vec(-2i64..=2, r * c).prop_map(move |v| {
            let dense: Vec<Vec<Q>> = v.chunks(c).map(|row| row.iter().map(|&x| q(x)).collect()).collect();
            QMatrix::from_dense(r, c, &dense)
        })
    })
}

/// A form whose coefficients are small integers on a random sparse support.
fn form_in(model: &dyn FormModel, degree: usize, allowed: &[usize], values: &[i64]) -> GradedForm {
    let mut coeffs = vec![q(0); model.complex().dim(degree)];
    for (slot, &v) in allowed.iter().zip(values) {
        coeffs[*slot] = q(v);
    }
    model.form(degree, coeffs).unwrap()
}

fn sign(p: usize, r: usize) -> Q {
    if (p * r).is_multiple_of(2) {
        q(1)
    } else {
        q(-1)
    }
}

struct Models {
    ce: Vec<CeModel>,
    poly: PolyModel,
}

fn models() -> Models {
    let ce = ["heisenberg3", "so3", "upper_triangular:2", "sl2"].iter().map(|n| CeModel::new(&catalog(n).unwrap()).unwrap()).collect();
    let poly = PolyModel::new(2, &catalog("heisenberg3").unwrap(), 6).unwrap();
    Models { ce, poly }
}

/// Indices of degree-`k` basis elements a law check may use without
/// leaving the truncated polynomial model.
fn usable(model: &dyn FormModel, poly: Option<&PolyModel>, k: usize) -> Vec<usize> {
    let all = 0..model.complex().dim(k);
    match poly {
        Some(p) => all.filter(|&i| p.monomial(k, i).homogeneity() <= 2).collect(),
        None => all.collect(),
    }
}

fn check_laws(model: &dyn FormModel, poly: Option<&PolyModel>, degrees: [usize; 3], picks: &[Vec<(usize, i64)>; 3]) -> Result<(), TestCaseError> {
    let top = model.complex().top_degree();
    let forms: Vec<GradedForm> = degrees
        .iter()
        .zip(picks)
        .map(|(&k, pick)| {
            let k = k % (top + 1);
            let allowed = usable(model, poly, k);
            if allowed.is_empty() {
                return model.zero_form(k);
            }
            let slots: Vec<usize> = pick.iter().map(|(i, _)| allowed[i % allowed.len()]).collect();
            let vals: Vec<i64> = pick.iter().map(|(_, v)| *v).collect();
            form_in(model, k, &slots, &vals)
        })
        .collect();
    let (a, b, c) = (&forms[0], &forms[1], &forms[2]);
    let (p, qd) = (a.degree, b.degree);
    // super-commutation
    let ab = model.bracket(a, b).unwrap();
    let ba = model.bracket(b, a).unwrap();
    prop_assert_eq!(add_vec(&ab.coeffs, &scale_vec(&sign(p, qd), &ba.coeffs)), vec![q(0); ab.coeffs.len()]);
    // graded Jacobi
    if p + qd + c.degree <= top {
        let lhs = model.bracket(a, &model.bracket(b, c).unwrap()).unwrap();
        let first = model.bracket(&ab, c).unwrap();
        let second = model.bracket(b, &model.bracket(a, c).unwrap()).unwrap();
        let rhs = add_vec(&first.coeffs, &scale_vec(&sign(p, qd), &second.coeffs));
        prop_assert_eq!(lhs.coeffs, rhs);
    }
    // Leibniz
    if p + qd < top {
        let lhs = model.d(&ab).unwrap();
        let da_b = model.bracket(&model.d(a).unwrap(), b).unwrap();
        let a_db = model.bracket(a, &model.d(b).unwrap()).unwrap();
        let p_sign = if p % 2 == 0 { q(1) } else { q(-1) };
        let rhs = add_vec(&da_b.coeffs, &scale_vec(&p_sign, &a_db.coeffs));
        prop_assert_eq!(sub_vec(&lhs.coeffs, &rhs), vec![q(0); lhs.coeffs.len()]);
    }
    Ok(())
}

fn pick() -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0usize..64, -3i64..=3), 1..4)
}

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn rank_nullity_and_transpose(m in small_matrix()) {
        let r = m.rank();
        prop_assert_eq!(r, m.transpose().rank());
        prop_assert_eq!(r + m.kernel().len(), m.ncols());
        prop_assert_eq!(m.rank_with(Execution::Sequential), m.rank_with(Execution::Parallel));
        for v in m.kernel() {
            prop_assert!(m.mul_vec(&v).iter().all(|x| *x == q(0)));
        }
    }

    #[test]
    fn bracket_laws_on_cochains(which in 0usize..5, degrees in prop::array::uniform3(0usize..4), picks in [pick(), pick(), pick()]) {
        let ms = models();
        if which < 4 {
            check_laws(&ms.ce[which], None, degrees, &picks)?;
        } else {
            check_laws(&ms.poly, Some(&ms.poly), degrees, &picks)?;
        }
    }

    #[test]
    fn coboundaries_do_not_change_classes(k in 0usize..3, pick in pick()) {
        let c = chevalley_eilenberg(&catalog("heisenberg3").unwrap()).unwrap();
        let coh = c.cohomology();
        let mut x = vec![q(0); c.dim(k)];
        for (i, v) in &pick {
            x[i % c.dim(k)] = q(*v);
        }
        let dx = c.differential(k).mul_vec(&x);
        prop_assert!(c.is_coboundary(k + 1, &dx));
        prop_assert!(c.is_cocycle(k + 1, &dx));
        for r in coh.representatives(k + 1) {
            prop_assert_eq!(coh.class_of(k + 1, &add_vec(r, &dx)).unwrap(), coh.class_of(k + 1, r).unwrap());
        }
    }

    #[test]
    fn harmonic_dims_are_metric_independent(weights in prop::collection::vec(0.25f64..4.0, 64)) {
        let l = catalog("abelian:1").unwrap();
        let id = QMatrix::identity(1);
        for name in ["hexagon_circle", "torus"] {
            let c = simplicial_scalar(&bundled_mesh(name).unwrap()).unwrap();
            let mut it = weights.iter().cycle();
            let base = BaseMetric::Diagonal(c.dims().iter().map(|&d| (0..d).map(|_| *it.next().unwrap()).collect()).collect());
            let mc = metricize(&c, &l, &base, Some(&id), DEFAULT_TOLERANCE).unwrap();
            let dims: Vec<usize> = (0..c.dims().len()).map(|k| harmonic_space(&mc, k).unwrap().dim()).collect();
            prop_assert_eq!(dims, c.betti().betti);
        }
    }
}

fn pool() -> Vec<FiniteComplex> {
    let mut v: Vec<FiniteComplex> =
        ["interval", "triangle_circle", "point"].iter().map(|n| simplicial_scalar(&bundled_mesh(n).unwrap()).unwrap()).collect();
    v.push(chevalley_eilenberg(&catalog("heisenberg3").unwrap()).unwrap());
    v.push(chevalley_eilenberg(&catalog("abelian:2").unwrap()).unwrap());
    v
}

proptest! {
    #![proptest_config(config(12))]

    #[test]
    fn kunneth_on_tensor_products(i in 0usize..5, j in 0usize..5) {
        let p = pool();
        let t = total_complex(&p[i], &p[j]);
        prop_assert_eq!(t.betti().betti, kunneth_convolution(&p[i].betti().betti, &p[j].betti().betti));
    }
}
