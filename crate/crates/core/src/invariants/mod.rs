//! Closed-form invariants of `L`-valued forms on `R^n`, and the
//! computations they are compared against.

mod bockstein;
mod claims;
mod superalg;

pub use bockstein::{bockstein_report, BocksteinModel, BocksteinReport, IdealChoice};
pub use claims::{claims_check, point_cohomology, ClaimId, ClaimsComparison, ClaimsReport, PointCohomology};
pub use superalg::{super_structure, BracketEntry, SuperalgebraReport};

use serde::Serialize;

use crate::cochain::{CohomologyReport, FiniteComplex};
use crate::error::Result;
use crate::liealg::LieAlgebra;

/// `(g, g_c, g')`: dimensions of the algebra, its center and the
/// centralizer of the commutator ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StructureDims {
    pub g: usize,
    pub g_c: usize,
    pub g_prime: usize,
}

impl StructureDims {
    pub fn of(l: &LieAlgebra) -> Self {
        let center = l.center();
        let centralizer = l.commutator_centralizer();
        debug_assert!(center.is_subspace_of(&centralizer));
        StructureDims { g: l.dim(), g_c: center.dim(), g_prime: centralizer.dim() }
    }
}

/// Claimed `b_k` of `R^n`: `g_c` for `k = 0`, `g' - g_c` for `0 < k < n`,
/// and 0 otherwise.
pub fn paper_betti_rn(l: &LieAlgebra, n: usize, k: usize) -> usize {
    betti_from_dims(StructureDims::of(l), n, k)
}

fn betti_from_dims(d: StructureDims, n: usize, k: usize) -> usize {
    if k == 0 {
        d.g_c
    } else if k < n {
        d.g_prime - d.g_c
    } else {
        0
    }
}

/// Claimed Euler characteristic of `R^n`.
pub fn paper_euler_rn(l: &LieAlgebra, n: usize) -> i64 {
    let d = StructureDims::of(l);
    let (gc, gp) = (d.g_c as i64, d.g_prime as i64);
    if n > 0 && n.is_multiple_of(2) {
        2 * gc - gp
    } else {
        gc
    }
}

/// `sum (-1)^k paper_betti_rn(L, n, k)`.
pub fn paper_betti_alternating_sum(l: &LieAlgebra, n: usize) -> i64 {
    let d = StructureDims::of(l);
    (0..=n).map(|k| if k % 2 == 0 { 1 } else { -1 } * betti_from_dims(d, n, k) as i64).sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PoincareSpaceKind {
    Center,
    CentralizerModCenter,
    Zero,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PoincareSpace {
    pub kind: PoincareSpaceKind,
    pub dim: usize,
}

/// The space the Poincaré lemma assigns to `H^k(R^n)`.
pub fn paper_poincare_spaces(l: &LieAlgebra, n: usize, k: usize) -> PoincareSpace {
    let d = StructureDims::of(l);
    let kind = if k == 0 {
        PoincareSpaceKind::Center
    } else if k < n {
        PoincareSpaceKind::CentralizerModCenter
    } else {
        PoincareSpaceKind::Zero
    };
    PoincareSpace { kind, dim: betti_from_dims(d, n, k) }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GBetti {
    pub report: CohomologyReport,
    /// For abelian `L` with a scalar model given: `b_k = g * b_k(scalar)`.
    pub abelian_scaling: Option<bool>,
}

/// Betti numbers of an `L`-valued model, with the abelian scaling check
/// against the scalar model when one is supplied.
pub fn g_betti(c: &FiniteComplex, l: &LieAlgebra, scalar: Option<&FiniteComplex>) -> Result<GBetti> {
    l.require_valid()?;
    let report = c.betti();
    let abelian_scaling = match scalar {
        Some(s) if l.is_abelian() => {
            let expected: Vec<usize> = s.betti().betti.iter().map(|b| b * l.dim()).collect();
            Some(expected == report.betti)
        }
        _ => None,
    };
    Ok(GBetti { report, abelian_scaling })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{catalog, catalog_names};
    use crate::models::{bundled_mesh, simplicial_gvalued, simplicial_scalar};

    #[test]
    fn calculator_tables() {
        let h = catalog("heisenberg3").unwrap();
        assert_eq!(StructureDims::of(&h), StructureDims { g: 3, g_c: 1, g_prime: 3 });
        assert_eq!(paper_betti_rn(&h, 2, 1), 2);
        assert_eq!(paper_euler_rn(&h, 2), -1);
        let sl2 = catalog("sl2").unwrap();
        assert!((0..6).all(|n| (0..6).all(|k| paper_betti_rn(&sl2, n, k) == 0)));
        let a2 = catalog("abelian:2").unwrap();
        assert_eq!([0, 1, 2].map(|k| paper_betti_rn(&a2, 3, k)), [2, 0, 0]);
        assert_eq!(paper_euler_rn(&a2, 2), 2);
        assert_eq!(paper_euler_rn(&catalog("so3").unwrap(), 0), 0);
    }

    #[test]
    fn euler_is_alternating_sum() {
        for name in catalog_names() {
            let l = catalog(&name).unwrap();
            for n in 0..=5 {
                assert_eq!(paper_betti_alternating_sum(&l, n), paper_euler_rn(&l, n), "{name} n={n}");
            }
        }
    }

    #[test]
    fn poincare_spaces() {
        let h = catalog("heisenberg3").unwrap();
        let s = paper_poincare_spaces(&h, 3, 1);
        assert_eq!((s.kind, s.dim), (PoincareSpaceKind::CentralizerModCenter, 2));
        assert_eq!(paper_poincare_spaces(&h, 1, 5).kind, PoincareSpaceKind::Zero);
        let a = catalog("abelian:3").unwrap();
        assert_eq!(paper_poincare_spaces(&a, 4, 0).dim, 3);
    }

    #[test]
    fn abelian_scaling_on_meshes() {
        let a3 = catalog("abelian:3").unwrap();
        let circle = bundled_mesh("triangle_circle").unwrap();
        let r = g_betti(&simplicial_gvalued(&circle, &a3).unwrap(), &a3, Some(&simplicial_scalar(&circle).unwrap())).unwrap();
        assert_eq!(r.report.betti, vec![3, 3]);
        assert_eq!(r.abelian_scaling, Some(true));
        let h = catalog("heisenberg3").unwrap();
        let point = bundled_mesh("point").unwrap();
        let r = g_betti(&simplicial_gvalued(&point, &h).unwrap(), &h, None).unwrap();
        assert_eq!((r.report.betti, r.abelian_scaling), (vec![3], None));
    }
}
