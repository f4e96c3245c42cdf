//! Polynomial forms on `R^n` with values in a Lie algebra, graded by total
//! homogeneity `s = deg P + |I|` of `P(x) dx^I`.

use std::collections::HashMap;

use crate::cochain::{CohomologyReport, FiniteComplex};
use crate::error::Result;
use crate::exec::Execution;
use crate::liealg::LieAlgebra;
use crate::linalg::{QMatrix, Q};

use super::combin::{monomials, subsets};

/// Scalar basis element `x^alpha dx^I`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub exponents: Vec<usize>,
    pub dx: Vec<usize>,
}

impl Monomial {
    pub fn homogeneity(&self) -> usize {
        self.exponents.iter().sum::<usize>() + self.dx.len()
    }

    /// `alpha!`, the weight used for the monomial inner product.
    pub fn factorial_weight(&self) -> u128 {
        self.exponents.iter().map(|&e| (1..=e as u128).product::<u128>()).product()
    }
}

/// Direct sum of finitely many subcomplexes, kept apart so that cohomology
/// can be computed one summand at a time.
#[derive(Clone, Debug)]
pub struct Stratified {
    pub strata: Vec<FiniteComplex>,
}

impl Stratified {
    pub fn top_degree(&self) -> usize {
        self.strata.iter().map(FiniteComplex::top_degree).max().unwrap_or(0)
    }

    pub fn dims(&self) -> Vec<usize> {
        (0..=self.top_degree()).map(|k| self.strata.iter().map(|c| c.dim(k)).sum()).collect()
    }

    pub fn betti_with(&self, exec: Execution) -> CohomologyReport {
        let parts: Vec<&FiniteComplex> = self.strata.iter().collect();
        let per: Vec<Vec<usize>> = exec.map(parts, |c| c.betti_with(exec).betti);
        let top = self.top_degree();
        let betti = (0..=top).map(|k| per.iter().map(|b| b.get(k).copied().unwrap_or(0)).sum()).collect();
        CohomologyReport::from_betti(betti, None)
    }

    pub fn betti(&self) -> CohomologyReport {
        self.betti_with(Execution::default())
    }

    pub fn assemble(&self) -> FiniteComplex {
        let parts: Vec<&FiniteComplex> = self.strata.iter().collect();
        FiniteComplex::direct_sum(&parts)
    }
}

/// Truncated polynomial de Rham complex `⊕_{s <= N} Ω_s(R^n) ⊗ L`.
#[derive(Clone, Debug)]
pub struct PolyDeRham {
    n: usize,
    max_degree: usize,
    value_dim: usize,
    /// `basis[s][k]`: scalar basis of form degree `k` in stratum `s`.
    basis: Vec<Vec<Vec<Monomial>>>,
    strata: Stratified,
    /// Position of a scalar monomial inside the assembled degree-`k` space
    /// (before tensoring with the value space).
    positions: Vec<HashMap<Monomial, usize>>,
}

fn stratum_basis(n: usize, s: usize) -> Vec<Vec<Monomial>> {
    (0..=n)
        .map(|k| {
            if k > s {
                return Vec::new();
            }
            let mut out = Vec::new();
            for exponents in monomials(n, s - k) {
                for dx in subsets(n, k) {
                    out.push(Monomial { exponents: exponents.clone(), dx });
                }
            }
            out
        })
        .collect()
}

/// Scalar exterior derivative on one stratum, degree `k -> k+1`.
fn stratum_d(n: usize, basis: &[Vec<Monomial>], k: usize) -> QMatrix {
    let target: HashMap<Monomial, usize> = basis[k + 1].iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
    let mut entries = Vec::new();
    for (col, m) in basis[k].iter().enumerate() {
        for i in 0..n {
            if m.exponents[i] == 0 || m.dx.contains(&i) {
                continue;
            }
            let mut exponents = m.exponents.clone();
            exponents[i] -= 1;
            let below = m.dx.iter().filter(|&&j| j < i).count();
            let mut dx = m.dx.clone();
            dx.insert(below, i);
            let sign: i64 = if below % 2 == 0 { 1 } else { -1 };
            let row = target[&Monomial { exponents, dx }];
            entries.push((row, col, Q::from_integer((sign * m.exponents[i] as i64).into())));
        }
    }
    QMatrix::from_triplets(basis[k + 1].len(), basis[k].len(), entries)
}

impl PolyDeRham {
    /// `n` variables, homogeneity at most `max_degree`, values in a space of
    /// dimension `value_dim` on which `d` acts as the identity.
    pub fn new(n: usize, value_dim: usize, max_degree: usize) -> Result<Self> {
        let mut basis = Vec::with_capacity(max_degree + 1);
        let mut strata = Vec::with_capacity(max_degree + 1);
        let id = QMatrix::identity(value_dim);
        for s in 0..=max_degree {
            let b = stratum_basis(n, s);
            let dims = b.iter().map(|l| l.len() * value_dim).collect();
            let ds = (0..n).map(|k| stratum_d(n, &b, k).kron(&id)).collect();
            strata.push(FiniteComplex::new(dims, ds)?.with_coefficient_dim(value_dim).with_label(format!("s={s}")));
            basis.push(b);
        }
        let positions = (0..=n)
            .map(|k| {
                let mut next = 0;
                let mut map = HashMap::new();
                for b in &basis {
                    for m in &b[k] {
                        map.insert(m.clone(), next);
                        next += 1;
                    }
                }
                map
            })
            .collect();
        Ok(PolyDeRham { n, max_degree, value_dim, basis, strata: Stratified { strata }, positions })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn value_dim(&self) -> usize {
        self.value_dim
    }

    pub fn strata(&self) -> &Stratified {
        &self.strata
    }

    pub fn stratum(&self, s: usize) -> &FiniteComplex {
        &self.strata.strata[s]
    }

    pub fn stratum_basis(&self, s: usize, k: usize) -> &[Monomial] {
        &self.basis[s][k]
    }

    /// Scalar basis of the assembled degree-`k` space, stratum by stratum.
    pub fn scalar_basis(&self, k: usize) -> Vec<&Monomial> {
        self.basis.iter().flat_map(|b| b[k].iter()).collect()
    }

    /// Index of `m ⊗ e_a` in the assembled complex.
    pub fn index_of(&self, m: &Monomial, a: usize) -> Option<usize> {
        let k = m.dx.len();
        self.positions.get(k)?.get(m).map(|p| p * self.value_dim + a)
    }

    pub fn complex(&self) -> FiniteComplex {
        self.strata.assemble().with_coefficient_dim(self.value_dim).with_label(format!("poly(n={}, N={})", self.n, self.max_degree))
    }

    /// Diagonal of the monomial inner product (`alpha!` weights) on the
    /// scalar basis of degree `k`.
    pub fn metric_weights(&self, k: usize) -> Vec<f64> {
        self.scalar_basis(k).into_iter().map(|m| m.factorial_weight() as f64).collect()
    }
}

/// `L`-valued polynomial forms, assembled into a single complex.
pub fn poly_derham(n: usize, l: &LieAlgebra, max_degree: usize) -> Result<FiniteComplex> {
    Ok(PolyDeRham::new(n, l.dim(), max_degree)?.complex().with_label(format!("poly(n={n}, N={max_degree}; {})", l.name())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::catalog;

    #[test]
    fn plane_with_abelian_values() {
        let c = poly_derham(2, &catalog("abelian:2").unwrap(), 3).unwrap();
        assert_eq!(c.betti().betti, vec![2, 0, 0]);
    }

    #[test]
    fn point_model() {
        let c = poly_derham(0, &catalog("heisenberg3").unwrap(), 4).unwrap();
        assert_eq!(c.betti().betti, vec![3]);
    }

    #[test]
    fn positive_strata_are_acyclic() {
        for n in 1..=3 {
            let p = PolyDeRham::new(n, 1, 5).unwrap();
            for s in 1..=5 {
                let st = p.stratum(s);
                assert_eq!(st.euler_of_dims(), 0);
                assert!(st.betti().betti.iter().all(|&b| b == 0), "n={n} s={s}");
            }
        }
    }

    #[test]
    fn positions_follow_strata() {
        let p = PolyDeRham::new(2, 1, 2).unwrap();
        let basis = p.scalar_basis(1);
        for (i, m) in basis.iter().enumerate() {
            assert_eq!(p.index_of(m, 0), Some(i));
        }
    }
}
