//! Forms on `M x G`: the total complex of scalar forms on `M` with the
//! adjoint Chevalley–Eilenberg complex.

use crate::cochain::{total_complex, FiniteComplex};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::liealg::LieAlgebra;

use super::ce::chevalley_eilenberg;
use super::poly::{PolyDeRham, Stratified};

/// `total(M, CE(L))`; `M` must carry scalar coefficients.
pub fn product_model(m: &FiniteComplex, l: &LieAlgebra) -> Result<FiniteComplex> {
    if m.coefficient_dim() != 1 {
        return Err(Error::BadBase(m.coefficient_dim()));
    }
    let ce = chevalley_eilenberg(l)?;
    Ok(total_complex(m, &ce).with_label(format!("product({}; {})", m.label(), l.name())))
}

/// Product model over `R^n`, one summand per homogeneity stratum.
pub fn product_model_rn(n: usize, max_degree: usize, l: &LieAlgebra) -> Result<Stratified> {
    product_model_rn_with(n, max_degree, l, Execution::default())
}

pub fn product_model_rn_with(n: usize, max_degree: usize, l: &LieAlgebra, exec: Execution) -> Result<Stratified> {
    let ce = chevalley_eilenberg(l)?;
    let base = PolyDeRham::new(n, 1, max_degree)?;
    let parts: Vec<&FiniteComplex> = base.strata().strata.iter().collect();
    let strata = exec.map(parts, |s| total_complex(s, &ce));
    Ok(Stratified { strata })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochain::kunneth_convolution;
    use crate::liealg::catalog;
    use crate::linalg::QMatrix;
    use crate::models::ce::ce_basis;

    #[test]
    fn point_base_reproduces_ce() {
        let l = catalog("heisenberg3").unwrap();
        let p = product_model(&FiniteComplex::unit(), &l).unwrap();
        assert_eq!(p.differentials(), chevalley_eilenberg(&l).unwrap().differentials());
    }

    #[test]
    fn line_base_with_heisenberg() {
        let l = catalog("heisenberg3").unwrap();
        let base = PolyDeRham::new(1, 1, 2).unwrap().complex();
        let p = product_model(&base, &l).unwrap();
        let ce = chevalley_eilenberg(&l).unwrap().betti().betti;
        let predicted = kunneth_convolution(&base.betti().betti, &ce);
        assert_eq!(p.betti().betti, predicted);
        let strat = product_model_rn(1, 2, &l).unwrap();
        assert_eq!(strat.betti().betti, predicted);
    }

    #[test]
    fn rejects_vector_valued_base() {
        let l = catalog("so3").unwrap();
        let base = PolyDeRham::new(1, 3, 1).unwrap().complex();
        assert_eq!(product_model(&base, &l).unwrap_err(), Error::BadBase(3));
    }

    #[test]
    fn degree_zero_row_is_the_twist() {
        // On bidegree (0, 0) the vertical part of D sends x to the 1-cochain
        // e_i -> [e_i, x], i.e. "d alpha + [theta, alpha]" with d alpha = 0.
        let l = catalog("heisenberg3").unwrap();
        let p = product_model(&FiniteComplex::unit(), &l).unwrap();
        let d0 = p.differential(0);
        let basis = ce_basis(&l, l.dim(), 1);
        for x in 0..l.dim() {
            let col = d0.column(x);
            for (row, (subset, a)) in basis.iter().enumerate() {
                assert_eq!(col[row], l.c(subset[0], x, *a).clone());
            }
        }
        assert_ne!(d0.into_owned(), QMatrix::zeros(9, 3));
    }
}
