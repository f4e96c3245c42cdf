//! Independent reference computations for the model builders.

use std::sync::Arc;

use num::{One, Zero};

use gderham_core::liealg::{catalog, catalog_names, LieAlgebra, LieModule};
use gderham_core::linalg::{q, QMatrix, Q};
use gderham_core::models::{
    bundled_mesh, bundled_mesh_names, chevalley_eilenberg, chevalley_eilenberg_with, pullback_with_dim, simplicial_scalar,
    subsets, SimplicialComplex, SimplicialMap,
};
use gderham_core::ChainMap;

/// `ω_{I,a}` evaluated on an ordered tuple of basis vectors.
fn eval_basis(i: &[usize], a: usize, tuple: &[usize], v: usize) -> Vec<Q> {
    let mut out = vec![Q::zero(); v];
    let mut sorted = tuple.to_vec();
    sorted.sort_unstable();
    if sorted != i {
        return out;
    }
    let mut inversions = 0;
    for x in 0..tuple.len() {
        for y in x + 1..tuple.len() {
            if tuple[x] > tuple[y] {
                inversions += 1;
            }
        }
    }
    out[a] = if inversions % 2 == 0 { Q::one() } else { -Q::one() };
    out
}

/// `dω` on sorted `(q+1)`-tuples straight from the alternating-map formula.
fn brute_force_ce(l: &LieAlgebra, module: &LieModule, q: usize) -> Vec<Vec<Q>> {
    let n = l.dim();
    let v = module.dim();
    let src = subsets(n, q);
    let tgt = subsets(n, q + 1);
    let mut dense = vec![vec![Q::zero(); src.len() * v]; tgt.len() * v];
    for (col_set, set) in src.iter().enumerate() {
        for a in 0..v {
            let col = col_set * v + a;
            for (row_set, j) in tgt.iter().enumerate() {
                let mut value = vec![Q::zero(); v];
                for i in 0..=q {
                    let mut rest = j.clone();
                    let x = rest.remove(i);
                    let w = eval_basis(set, a, &rest, v);
                    let acted = module.action(x).mul_vec(&w);
                    let s = if i % 2 == 0 { Q::one() } else { -Q::one() };
                    for b in 0..v {
                        value[b] += &s * &acted[b];
                    }
                }
                for i in 0..=q {
                    for k in i + 1..=q {
                        let rest: Vec<usize> =
                            j.iter().enumerate().filter(|&(t, _)| t != i && t != k).map(|(_, &e)| e).collect();
                        let s = if (i + k) % 2 == 0 { Q::one() } else { -Q::one() };
                        for m in 0..n {
                            let c = l.c(j[i], j[k], m);
                            if c.is_zero() {
                                continue;
                            }
                            let mut tuple = vec![m];
                            tuple.extend(&rest);
                            let w = eval_basis(set, a, &tuple, v);
                            for b in 0..v {
                                value[b] += &s * c * &w[b];
                            }
                        }
                    }
                }
                for b in 0..v {
                    dense[row_set * v + b][col] = value[b].clone();
                }
            }
        }
    }
    dense
}

#[test]
fn ce_differential_matches_alternating_formula() {
    for name in catalog_names() {
        let l = catalog(&name).unwrap();
        let mut modules = vec![LieModule::adjoint(&l), LieModule::trivial(&l, 2)];
        let center = l.center();
        if center.dim() > 0 {
            modules.push(LieModule::ideal(&l, &center).unwrap());
            modules.push(LieModule::quotient(&l, &center).unwrap());
        }
        for m in &modules {
            let c = chevalley_eilenberg_with(&l, m).unwrap();
            for q in 0..l.dim() {
                assert_eq!(c.differential(q).to_dense(), brute_force_ce(&l, m, q), "{name} {} q={q}", m.label());
            }
        }
    }
}

fn derivation_dim(l: &LieAlgebra) -> usize {
    // unknown D_{m,i} at column m * n + i, where D e_i = sum_m D_{m,i} e_m
    let n = l.dim();
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                let mut row = vec![Q::zero(); n * n];
                // D[e_i, e_j] - [D e_i, e_j] - [e_i, D e_j], k-th coordinate
                for m in 0..n {
                    row[k * n + m] += l.c(i, j, m);
                    row[m * n + i] -= l.c(m, j, k);
                    row[m * n + j] -= l.c(i, m, k);
                }
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return n * n;
    }
    n * n - QMatrix::from_dense(rows.len(), n * n, &rows).rank()
}

#[test]
fn first_cohomology_is_outer_derivations() {
    for name in catalog_names() {
        let l = catalog(&name).unwrap();
        let inner = l.dim() - l.center().dim();
        let b = chevalley_eilenberg(&l).unwrap().betti().betti;
        if l.dim() >= 1 {
            assert_eq!(b[1], derivation_dim(&l) - inner, "{name}");
        }
        assert_eq!(b[0], l.center().dim(), "{name}");
    }
    let h = catalog("heisenberg3").unwrap();
    assert_eq!(derivation_dim(&h), 6);
}

#[test]
fn known_lie_algebra_cohomology() {
    let h = catalog("heisenberg3").unwrap();
    assert_eq!(chevalley_eilenberg(&h).unwrap().betti().betti, vec![1, 4, 5, 2]);
    let so3 = catalog("so3").unwrap();
    assert_eq!(chevalley_eilenberg(&so3).unwrap().betti().betti, vec![0, 0, 0, 0]);
    let trivial = chevalley_eilenberg_with(&so3, &LieModule::trivial(&so3, 1)).unwrap();
    assert_eq!(trivial.betti().betti, vec![1, 0, 0, 1]);
    let sl2 = catalog("sl2").unwrap();
    assert_eq!(chevalley_eilenberg(&sl2).unwrap().betti().betti, vec![0, 0, 0, 0]);
}

#[test]
fn mesh_euler_characteristic_from_counts() {
    let expected = [("point", 1), ("interval", 1), ("triangle_circle", 0), ("hexagon_circle", 0), ("sphere_octahedron", 2), ("torus", 0)];
    for (name, chi) in expected {
        let k = bundled_mesh(name).unwrap();
        let counts = k.counts();
        let from_counts: i64 = counts.iter().enumerate().map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) }).sum();
        assert_eq!(from_counts, chi, "{name}");
        assert_eq!(simplicial_scalar(&k).unwrap().betti().euler, chi, "{name}");
    }
    assert_eq!(bundled_mesh_names().len(), expected.len());
}

fn evaluate(k: &SimplicialComplex, cycle: &[(Vec<usize>, i64)], cochain: &[Q]) -> Q {
    cycle.iter().map(|(s, c)| &cochain[k.index_of(s).unwrap()] * Q::from_integer((*c).into())).sum()
}

#[test]
fn double_cover_multiplies_by_two() {
    let hex = bundled_mesh("hexagon_circle").unwrap();
    let tri = bundled_mesh("triangle_circle").unwrap();
    let f = SimplicialMap::new(hex.clone(), tri.clone(), (0..6).map(|v| v % 3).collect()).unwrap();
    let pb = pullback_with_dim(&f, 1).unwrap();
    let tri_cycle = [(vec![0, 1], 1), (vec![1, 2], 1), (vec![0, 2], -1)];
    let hex_cycle = [(vec![0, 1], 1), (vec![1, 2], 1), (vec![2, 3], 1), (vec![3, 4], 1), (vec![4, 5], 1), (vec![0, 5], -1)];
    let h_tri = pb.source().cohomology();
    let alpha = &h_tri.representatives(1)[0];
    let pulled = pb.component(1).mul_vec(alpha);
    assert_eq!(evaluate(&hex, &hex_cycle, &pulled), q(2) * evaluate(&tri, &tri_cycle, alpha));
    assert!(!evaluate(&tri, &tri_cycle, alpha).is_zero());
    // in the representative bases [α] -> ([f*α] / [β]) [β], read off by integrating
    let h_hex = pb.target().cohomology();
    let beta = &h_hex.representatives(1)[0];
    let induced = pb.induced(1, &h_tri, &h_hex).unwrap();
    assert_eq!(induced.shape(), (1, 1));
    let ratio = evaluate(&hex, &hex_cycle, &pulled) / evaluate(&hex, &hex_cycle, beta);
    assert_eq!(induced.get(0, 0), ratio);
}

#[test]
fn pullback_is_contravariant() {
    let hex = bundled_mesh("hexagon_circle").unwrap();
    let tri = bundled_mesh("triangle_circle").unwrap();
    let f = SimplicialMap::new(hex.clone(), tri.clone(), (0..6).map(|v| v % 3).collect()).unwrap();
    let g = SimplicialMap::new(tri.clone(), tri.clone(), vec![1, 2, 0]).unwrap();
    let gf = g.compose(&f).unwrap();
    for dim in [1, 3] {
        let (pf, pg, pgf) = (pullback_with_dim(&f, dim).unwrap(), pullback_with_dim(&g, dim).unwrap(), pullback_with_dim(&gf, dim).unwrap());
        let composed: ChainMap = pf.compose(&pg).unwrap();
        assert_eq!(composed.components(), pgf.components());
        assert!(Arc::ptr_eq(composed.source(), pg.source()));
    }
}
