//! Chevalley–Eilenberg cochains `Λ^q g* ⊗ V`.
//!
//! The basis element `(I, a)` in degree `q` is the cochain sending the
//! sorted tuple `e_I` to `v_a`; its index is `idx(I) * dim V + a` with `I`
//! in lexicographic order.

use num::{One, Zero};

use crate::cochain::FiniteComplex;
use crate::error::Result;
use crate::liealg::{LieAlgebra, LieModule};
use crate::linalg::{QMatrix, Q};

use super::combin::{index_map, subsets};

fn signed(i: usize) -> Q {
    if i.is_multiple_of(2) {
        Q::one()
    } else {
        -Q::one()
    }
}

/// `(dω)(x_0..x_q) = Σ (-1)^i ρ(x_i) ω(..x̂_i..) + Σ_{i<j} (-1)^{i+j} ω([x_i, x_j], ..x̂_i..x̂_j..)`.
fn differential(l: &LieAlgebra, action: &[QMatrix], v: usize, q: usize) -> QMatrix {
    let n = l.dim();
    let src = subsets(n, q);
    let tgt = subsets(n, q + 1);
    let src_index = index_map(&src);
    let mut entries: Vec<(usize, usize, Q)> = Vec::new();
    for (jt, j) in tgt.iter().enumerate() {
        for i in 0..j.len() {
            let mut rest = j.clone();
            let x = rest.remove(i);
            let col = src_index[&rest];
            for b in 0..v {
                for (a, val) in action[x].row(b) {
                    entries.push((jt * v + b, col * v + a, signed(i) * val));
                }
            }
        }
        for i in 0..j.len() {
            for k in i + 1..j.len() {
                let rest: Vec<usize> = j.iter().enumerate().filter(|&(t, _)| t != i && t != k).map(|(_, &e)| e).collect();
                for m in 0..n {
                    let c = l.c(j[i], j[k], m);
                    if c.is_zero() || rest.contains(&m) {
                        continue;
                    }
                    let below = rest.iter().filter(|&&r| r < m).count();
                    let mut set = rest.clone();
                    set.insert(below, m);
                    let col = src_index[&set];
                    let coeff = signed(i + k) * signed(below) * c;
                    for a in 0..v {
                        entries.push((jt * v + a, col * v + a, coeff.clone()));
                    }
                }
            }
        }
    }
    QMatrix::from_triplets(tgt.len() * v, src.len() * v, entries)
}

fn build(l: &LieAlgebra, action: &[QMatrix], v: usize) -> Result<FiniteComplex> {
    let n = l.dim();
    let dims: Vec<usize> = (0..=n).map(|q| subsets(n, q).len() * v).collect();
    let differentials = (0..n).map(|q| differential(l, action, v, q)).collect();
    Ok(FiniteComplex::new(dims, differentials)?.with_coefficient_dim(v))
}

/// Adjoint coefficients: the Maurer–Cartan twisted complex on invariant forms.
pub fn chevalley_eilenberg(l: &LieAlgebra) -> Result<FiniteComplex> {
    l.require_valid()?;
    Ok(build(l, &l.adjoint_rep(), l.dim())?.with_label(format!("ce({})", l.name())))
}

/// Coefficients in an arbitrary module.
pub fn chevalley_eilenberg_with(l: &LieAlgebra, module: &LieModule) -> Result<FiniteComplex> {
    l.require_valid()?;
    let action: Vec<QMatrix> = (0..l.dim()).map(|i| module.action(i).clone()).collect();
    Ok(build(l, &action, module.dim())?.with_label(format!("ce({}; {})", l.name(), module.label())))
}

/// Adjoint complex built straight from the structure constants without
/// validating them; a Jacobi failure surfaces as `NotAComplex`.
pub fn chevalley_eilenberg_unchecked(l: &LieAlgebra) -> Result<FiniteComplex> {
    build(l, &l.adjoint_rep(), l.dim())
}

/// Basis of `C^q` as `(subset, value index)` pairs, in index order.
pub fn ce_basis(l: &LieAlgebra, v: usize, q: usize) -> Vec<(Vec<usize>, usize)> {
    subsets(l.dim(), q).into_iter().flat_map(|s| (0..v).map(move |a| (s.clone(), a))).collect()
}
