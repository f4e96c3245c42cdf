//! Lie-algebra-valued simplicial cochains twisted by edge holonomy.
//!
//! A `k`-cochain assigns to each simplex `(v0 < .. < vk)` a vector in the
//! fiber over its last vertex `vk`. The coboundary transports the value of
//! the face that drops the last vertex along the final edge.

use num::{One, Zero};

use crate::cochain::FiniteComplex;
use crate::error::{Error, Result};
use crate::liealg::LieAlgebra;
use crate::linalg::{QMatrix, Q};

use super::mesh::SimplicialComplex;

/// Coboundary `D_k` (rows: `(k+1)`-simplices x fiber, cols: `k`-simplices x fiber).
fn coboundary(k: &SimplicialComplex, g: usize, deg: usize, twisted: bool) -> QMatrix {
    let rows = k.count(deg + 1) * g;
    let cols = k.count(deg) * g;
    let mut entries: Vec<(usize, usize, Q)> = Vec::new();
    for (t, tau) in k.simplices(deg + 1).iter().enumerate() {
        for i in 0..=deg + 1 {
            let mut face = tau.clone();
            face.remove(i);
            let s = k.index_of(&face).expect("closed complex");
            let sign = if i % 2 == 0 { Q::one() } else { -Q::one() };
            let transport = if i == deg + 1 && twisted { k.transport(tau[deg], tau[deg + 1]) } else { None };
            match transport {
                None => {
                    for a in 0..g {
                        entries.push((t * g + a, s * g + a, sign.clone()));
                    }
                }
                Some(h) => {
                    for b in 0..g {
                        for (a, v) in h.row(b) {
                            entries.push((t * g + b, s * g + a, &sign * v));
                        }
                    }
                }
            }
        }
    }
    QMatrix::from_triplets(rows, cols, entries)
}

fn build(k: &SimplicialComplex, g: usize, top: usize, twisted: bool) -> Result<FiniteComplex> {
    let top = top.max(k.dim());
    let dims: Vec<usize> = (0..=top).map(|d| k.count(d) * g).collect();
    let differentials = (0..top).map(|d| coboundary(k, g, d, twisted)).collect();
    Ok(FiniteComplex::new(dims, differentials)?.with_coefficient_dim(g))
}

fn check_holonomy_dim(k: &SimplicialComplex, g: usize) -> Result<()> {
    match k.holonomy().values().next() {
        Some(h) if h.nrows() != g => Err(Error::DimensionError { expected: g, found: h.nrows() }),
        _ => Ok(()),
    }
}

/// `g`-dimensional fiber, transported by the complex's holonomy if it has any.
pub fn simplicial_cochains(k: &SimplicialComplex, g: usize) -> Result<FiniteComplex> {
    check_holonomy_dim(k, g)?;
    build(k, g, k.dim(), true)
}

/// Scalar cochains, ignoring any holonomy.
pub fn simplicial_scalar(k: &SimplicialComplex) -> Result<FiniteComplex> {
    build(k, 1, k.dim(), false)
}

/// Cochains padded with zero spaces up to degree `top`, so that complexes
/// on a complex and its subcomplexes share a degree range.
pub(crate) fn simplicial_padded(k: &SimplicialComplex, g: usize, top: usize) -> Result<FiniteComplex> {
    check_holonomy_dim(k, g)?;
    build(k, g, top, true)
}

/// `L`-valued cochains; every holonomy matrix must be an automorphism of `L`.
pub fn simplicial_gvalued(k: &SimplicialComplex, l: &LieAlgebra) -> Result<FiniteComplex> {
    l.require_valid()?;
    check_holonomy_dim(k, l.dim())?;
    for (&(a, b), h) in k.holonomy() {
        if !is_automorphism(l, h) {
            return Err(Error::NotAutomorphism { edge: [a, b] });
        }
    }
    Ok(build(k, l.dim(), k.dim(), true)?.with_label(format!("simplicial({})", l.name())))
}

/// `h [e_i, e_j] = [h e_i, h e_j]` on all basis pairs.
pub fn is_automorphism(l: &LieAlgebra, h: &QMatrix) -> bool {
    let n = l.dim();
    if h.shape() != (n, n) || h.determinant().is_zero() {
        return false;
    }
    let cols: Vec<Vec<Q>> = (0..n).map(|j| h.column(j)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let e = |m: usize| crate::linalg::unit_vec(n, m);
            let lhs = h.mul_vec(&l.bracket_unchecked(&e(i), &e(j)));
            let rhs = l.bracket_unchecked(&cols[i], &cols[j]);
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Restriction of cochains on `k` to the subcomplex `sub`, in degrees `0..=top`.
pub(crate) fn restriction(k: &SimplicialComplex, sub: &SimplicialComplex, g: usize, top: usize) -> Vec<QMatrix> {
    (0..=top)
        .map(|d| {
            let entries = sub.simplices(d).iter().enumerate().flat_map(|(i, s)| {
                let j = k.index_of(s).expect("subcomplex");
                (0..g).map(move |a| (i * g + a, j * g + a, Q::one()))
            });
            QMatrix::from_triplets(sub.count(d) * g, k.count(d) * g, entries)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::liealg::catalog;
    use crate::models::{bundled_mesh, rational_rotation};

    #[test]
    fn scalar_betti_of_bundled_meshes() {
        let cases = [
            ("point", vec![1]),
            ("interval", vec![1, 0]),
            ("triangle_circle", vec![1, 1]),
            ("hexagon_circle", vec![1, 1]),
            ("sphere_octahedron", vec![1, 0, 1]),
            ("torus", vec![1, 2, 1]),
        ];
        for (name, betti) in cases {
            let k = bundled_mesh(name).unwrap();
            assert_eq!(simplicial_scalar(&k).unwrap().betti().betti, betti, "{name}");
        }
    }

    #[test]
    fn so3_on_sphere() {
        let k = bundled_mesh("sphere_octahedron").unwrap();
        let c = simplicial_gvalued(&k, &catalog("so3").unwrap()).unwrap();
        assert_eq!(c.betti().betti, vec![3, 0, 3]);
    }

    #[test]
    fn twisted_circle_fixes_rotation_axis() {
        let k = bundled_mesh("triangle_circle").unwrap();
        let mut hol = BTreeMap::new();
        hol.insert((0, 2), rational_rotation());
        let k = k.with_holonomy(hol).unwrap();
        let c = simplicial_gvalued(&k, &catalog("so3").unwrap()).unwrap();
        // fixed subspace of the rotation is its axis
        let fixed = rational_rotation().sub(&QMatrix::identity(3)).kernel().len();
        assert_eq!(fixed, 1);
        assert_eq!(c.betti().betti[0], fixed);
    }

    #[test]
    fn rejects_non_automorphism() {
        let k = bundled_mesh("triangle_circle").unwrap();
        let mut hol = BTreeMap::new();
        hol.insert((0, 2), QMatrix::identity(3).scale(&Q::from_integer(2.into())));
        let k = k.with_holonomy(hol).unwrap();
        let err = simplicial_gvalued(&k, &catalog("so3").unwrap()).unwrap_err();
        assert_eq!(err, Error::NotAutomorphism { edge: [0, 2] });
        // abelian algebras accept any invertible transport
        assert!(simplicial_gvalued(&k, &catalog("abelian:3").unwrap()).is_ok());
    }
}
