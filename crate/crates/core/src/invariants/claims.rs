use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::liealg::LieAlgebra;
use crate::models::{chevalley_eilenberg, product_model_rn_with};

use super::{paper_betti_rn, paper_euler_rn, StructureDims};

pub const DISAGREEMENT_NOTE: &str = "paper claim differs from product-model computation";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimId {
    PoincareLemma,
    BettiRn,
    EulerRn,
    AbelianScaling,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimsComparison {
    pub claim: ClaimId,
    pub inputs: String,
    pub degree: Option<usize>,
    pub paper: i64,
    pub computed: i64,
    pub agree: bool,
    pub note: Option<String>,
}

impl ClaimsComparison {
    fn new(claim: ClaimId, inputs: String, degree: Option<usize>, paper: i64, computed: i64) -> Self {
        let agree = paper == computed;
        let note = (!agree).then(|| DISAGREEMENT_NOTE.to_string());
        ClaimsComparison { claim, inputs, degree, paper, computed, agree, note }
    }
}

/// `H^0` of a point under the two readings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PointCohomology {
    /// `n = 0` row of the claimed tables: `dim c g`.
    pub paper: usize,
    /// `b_0` of the product model over a point, i.e. of `CE(L; ad)`.
    pub product_model: usize,
    /// Constant `L`-valued functions with no twist: `dim L`.
    pub untwisted: usize,
}

pub fn point_cohomology(l: &LieAlgebra) -> Result<PointCohomology> {
    let ce = chevalley_eilenberg(l)?;
    Ok(PointCohomology { paper: StructureDims::of(l).g_c, product_model: ce.betti().betti[0], untwisted: l.dim() })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimsReport {
    pub lie: String,
    pub n: usize,
    pub truncation: usize,
    pub structure: StructureDims,
    /// Betti numbers of the product model in all degrees.
    pub computed_betti: Vec<usize>,
    pub computed_euler: i64,
    pub point: PointCohomology,
    pub rows: Vec<ClaimsComparison>,
}

impl ClaimsReport {
    pub fn all_agree(&self) -> bool {
        self.rows.iter().all(|r| r.agree)
    }

    pub fn row(&self, claim: ClaimId, degree: Option<usize>) -> Option<&ClaimsComparison> {
        self.rows.iter().find(|r| r.claim == claim && r.degree == degree)
    }
}

/// Compare the claimed Betti numbers and Euler characteristic of `R^n`
/// with the product model truncated at polynomial degree `N`, checking the
/// result is unchanged at `N + 1`.
pub fn claims_check(l: &LieAlgebra, n: usize, truncation: usize, exec: Execution) -> Result<ClaimsReport> {
    l.require_valid()?;
    let needed = n + l.dim();
    if truncation < needed {
        return Err(Error::InvalidInput(format!("truncation {truncation} below n + dim L = {needed}")));
    }
    let low = product_model_rn_with(n, truncation, l, exec)?.betti_with(exec);
    let high = product_model_rn_with(n, truncation + 1, l, exec)?.betti_with(exec);
    if low.betti != high.betti {
        return Err(Error::Unstable { n_low: truncation, n_high: truncation + 1, low: low.betti, high: high.betti });
    }
    let dims = StructureDims::of(l);
    let inputs = |k: Option<usize>| match k {
        Some(k) => format!("{} n={n} k={k}", l.name()),
        None => format!("{} n={n}", l.name()),
    };
    let mut rows: Vec<ClaimsComparison> = (0..=n)
        .map(|k| {
            let computed = low.betti.get(k).copied().unwrap_or(0);
            ClaimsComparison::new(ClaimId::BettiRn, inputs(Some(k)), Some(k), paper_betti_rn(l, n, k) as i64, computed as i64)
        })
        .collect();
    rows.push(ClaimsComparison::new(ClaimId::EulerRn, inputs(None), None, paper_euler_rn(l, n), low.euler));
    if l.is_abelian() {
        // the scalar polynomial complex of R^n has b = [1, 0, ...]
        for k in 0..=n {
            let scalar_b = usize::from(k == 0);
            let computed = low.betti.get(k).copied().unwrap_or(0);
            rows.push(ClaimsComparison::new(
                ClaimId::AbelianScaling,
                inputs(Some(k)),
                Some(k),
                (dims.g * scalar_b) as i64,
                computed as i64,
            ));
        }
    }
    Ok(ClaimsReport {
        lie: l.name().to_string(),
        n,
        truncation,
        structure: dims,
        computed_euler: low.euler,
        computed_betti: low.betti,
        point: point_cohomology(l)?,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::catalog;

    #[test]
    fn heisenberg_plane() {
        let h = catalog("heisenberg3").unwrap();
        let r = claims_check(&h, 2, 5, Execution::Sequential).unwrap();
        let k0 = r.row(ClaimId::BettiRn, Some(0)).unwrap();
        assert_eq!((k0.paper, k0.computed, k0.agree), (1, 1, true));
        let k1 = r.row(ClaimId::BettiRn, Some(1)).unwrap();
        assert_eq!((k1.paper, k1.computed, k1.agree), (2, 4, false));
        assert_eq!(k1.note.as_deref(), Some(DISAGREEMENT_NOTE));
        // Künneth with H(R^2) = R in degree 0
        assert_eq!(r.computed_betti, vec![1, 4, 5, 2, 0, 0]);
    }

    #[test]
    fn truncation_precondition() {
        let h = catalog("heisenberg3").unwrap();
        assert!(matches!(claims_check(&h, 2, 4, Execution::Sequential), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn point_readings() {
        let p = point_cohomology(&catalog("heisenberg3").unwrap()).unwrap();
        assert_eq!(p, PointCohomology { paper: 1, product_model: 1, untwisted: 3 });
    }
}
