use num::Zero;
use serde::Serialize;

use crate::error::Result;
use crate::exec::Execution;
use crate::linalg::{add_vec, format_q, is_zero_vec, scale_vec, sub_vec, unit_vec, zero_vec, Subspace, Q};
use crate::models::FormModel;

/// Nonzero structure constant `[left, right] = sum result_i e_i` on
/// cohomology classes, each class named by `(degree, index)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BracketEntry {
    pub left: (usize, usize),
    pub right: (usize, usize),
    pub degree: usize,
    pub result: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuperalgebraReport {
    pub model: String,
    pub betti: Vec<usize>,
    pub even_dim: usize,
    pub odd_dim: usize,
    pub brackets: Vec<BracketEntry>,
    pub super_commutative: bool,
    pub graded_jacobi: bool,
    /// Dimensions of `H, [H,H], [H,[H,H]], ...` until the series stabilizes.
    pub lower_central_series: Vec<usize>,
    pub nilpotent: bool,
    /// Smallest `c` with the `(c+1)`-th term zero.
    pub nilpotency_index: Option<usize>,
    pub even_lower_central_series: Vec<usize>,
    pub even_nilpotent: bool,
    pub even_nilpotency_index: Option<usize>,
}

/// Bracket table of the cohomology in class coordinates.
struct ClassAlgebra {
    degrees: Vec<usize>,
    // table[a][b]: coordinates of [a, b] in the full class basis
    table: Vec<Vec<Vec<Q>>>,
}

impl ClassAlgebra {
    fn dim(&self) -> usize {
        self.degrees.len()
    }

    fn bracket_basis(&self, a: usize, w: &[Q]) -> Vec<Q> {
        let mut out = zero_vec(self.dim());
        for (b, wb) in w.iter().enumerate() {
            if !wb.is_zero() {
                out = add_vec(&out, &scale_vec(wb, &self.table[a][b]));
            }
        }
        out
    }

    fn sign(&self, a: usize, b: usize) -> Q {
        Q::from_integer(if (self.degrees[a] * self.degrees[b]).is_multiple_of(2) { 1.into() } else { (-1).into() })
    }

    fn super_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|a| {
            (0..n).all(|b| is_zero_vec(&add_vec(&self.table[a][b], &scale_vec(&self.sign(a, b), &self.table[b][a]))))
        })
    }

    /// `[a,[b,c]] = [[a,b],c] + (-1)^{pq} [b,[a,c]]`.
    fn graded_jacobi(&self) -> bool {
        let n = self.dim();
        (0..n).all(|a| {
            (0..n).all(|b| {
                (0..n).all(|c| {
                    let lhs = self.bracket_basis(a, &self.table[b][c]);
                    let ab = &self.table[a][b];
                    // [[a,b],c] = sum_i ab_i [i, c]
                    let mut first = zero_vec(n);
                    for (i, x) in ab.iter().enumerate() {
                        if !x.is_zero() {
                            first = add_vec(&first, &scale_vec(x, &self.table[i][c]));
                        }
                    }
                    let second = scale_vec(&self.sign(a, b), &self.bracket_basis(b, &self.table[a][c]));
                    is_zero_vec(&sub_vec(&lhs, &add_vec(&first, &second)))
                })
            })
        })
    }

    /// Dimensions of `L_1 = S`, `L_{i+1} = [S, L_i]`.
    fn lower_central_series(&self, generators: &[usize]) -> (Vec<usize>, Option<usize>) {
        let n = self.dim();
        let mut current = Subspace::span(n, &generators.iter().map(|&i| unit_vec(n, i)).collect::<Vec<_>>());
        let mut dims = vec![current.dim()];
        loop {
            if current.dim() == 0 {
                let index = dims.len() - 1;
                return (dims, Some(index));
            }
            let next_vectors: Vec<Vec<Q>> =
                generators.iter().flat_map(|&a| current.basis().iter().map(move |w| self.bracket_basis(a, w))).collect();
            let next = Subspace::span(n, &next_vectors);
            if next.dim() == current.dim() {
                return (dims, None);
            }
            dims.push(next.dim());
            current = next;
        }
    }
}

/// Structure of the cohomology superalgebra of a model.
pub fn super_structure(model: &dyn FormModel, exec: Execution) -> Result<SuperalgebraReport> {
    let c = model.complex();
    let coh = c.cohomology_with(exec);
    let betti = coh.betti();
    let top = c.top_degree();
    let mut degrees = Vec::new();
    let mut offsets = Vec::new();
    for (k, &b) in betti.iter().enumerate() {
        offsets.push(degrees.len());
        degrees.extend(std::iter::repeat_n(k, b));
    }
    let n = degrees.len();
    let local = |a: usize| a - offsets[degrees[a]];
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
    let computed = exec.map(pairs, |(a, b)| -> Result<Vec<Q>> {
        let (p, q) = (degrees[a], degrees[b]);
        let mut out = zero_vec(n);
        if p + q > top || betti[p + q] == 0 {
            return Ok(out);
        }
        let x = &coh.representatives(p)[local(a)];
        let y = &coh.representatives(q)[local(b)];
        let cocycle = model.bracket_coeffs(p, x, q, y)?;
        let class = coh.class_of(p + q, &cocycle)?;
        out[offsets[p + q]..offsets[p + q] + class.len()].clone_from_slice(&class);
        Ok(out)
    });
    let mut table = vec![Vec::with_capacity(n); n];
    for (i, r) in computed.into_iter().enumerate() {
        table[i / n.max(1)].push(r?);
    }
    let algebra = ClassAlgebra { degrees: degrees.clone(), table };

    let mut brackets = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let v = &algebra.table[a][b];
            if !is_zero_vec(v) {
                let d = degrees[a] + degrees[b];
                let block = &v[offsets[d]..offsets[d] + betti[d]];
                brackets.push(BracketEntry {
                    left: (degrees[a], local(a)),
                    right: (degrees[b], local(b)),
                    degree: d,
                    result: block.iter().map(format_q).collect(),
                });
            }
        }
    }
    let all: Vec<usize> = (0..n).collect();
    let even: Vec<usize> = (0..n).filter(|&a| degrees[a] % 2 == 0).collect();
    let (lcs, index) = algebra.lower_central_series(&all);
    let (even_lcs, even_index) = algebra.lower_central_series(&even);
    Ok(SuperalgebraReport {
        model: model.label().to_string(),
        even_dim: even.len(),
        odd_dim: n - even.len(),
        betti,
        brackets,
        super_commutative: algebra.super_commutative(),
        graded_jacobi: algebra.graded_jacobi(),
        lower_central_series: lcs,
        nilpotent: index.is_some(),
        nilpotency_index: index,
        even_lower_central_series: even_lcs,
        even_nilpotent: even_index.is_some(),
        even_nilpotency_index: even_index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::catalog;
    use crate::models::{bundled_mesh, CeModel, SimplicialModel};

    #[test]
    fn abelian_is_index_one() {
        let m = CeModel::new(&catalog("abelian:2").unwrap()).unwrap();
        let r = super_structure(&m, Execution::Sequential).unwrap();
        assert!(r.brackets.is_empty());
        assert_eq!((r.nilpotent, r.nilpotency_index), (true, Some(1)));
        assert_eq!(r.even_dim + r.odd_dim, r.betti.iter().sum::<usize>());
    }

    #[test]
    fn heisenberg_ce() {
        let m = CeModel::new(&catalog("heisenberg3").unwrap()).unwrap();
        let r = super_structure(&m, Execution::Sequential).unwrap();
        assert_eq!(r.betti, vec![1, 4, 5, 2]);
        assert!(r.super_commutative && r.graded_jacobi);
        for e in &r.brackets {
            assert_eq!(e.degree, e.left.0 + e.right.0);
        }
    }

    #[test]
    fn so3_ce_is_empty() {
        let m = CeModel::new(&catalog("so3").unwrap()).unwrap();
        let r = super_structure(&m, Execution::Sequential).unwrap();
        assert_eq!(r.betti[0], 0);
        assert!(r.brackets.is_empty());
    }

    #[test]
    fn so3_on_sphere_is_not_nilpotent() {
        let l = catalog("so3").unwrap();
        let m = SimplicialModel::new(&bundled_mesh("sphere_octahedron").unwrap(), &l, "sphere").unwrap();
        let r = super_structure(&m, Execution::Sequential).unwrap();
        assert!(r.super_commutative);
        // H^0 is so3 itself, which is perfect
        assert!(!r.even_nilpotent);
        assert_eq!(r.lower_central_series, vec![6]);
    }
}
