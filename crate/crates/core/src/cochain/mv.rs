use std::sync::Arc;

use crate::error::{Error, Result};
use crate::liealg::LieAlgebra;
use crate::linalg::{QMatrix, Q};
use crate::models::simplicial::{restriction, simplicial_padded};
use crate::models::SimplicialComplex;

use super::{ChainMap, FiniteComplex, LongExactSequence, NodeKind, ShortExactSequence};

/// `0 -> C(K) -> C(U) + C(V) -> C(U n V) -> 0` and its long exact sequence.
#[derive(Clone, Debug)]
pub struct MayerVietoris {
    pub sequence: ShortExactSequence,
    pub les: LongExactSequence,
    /// Betti numbers of `K` computed directly.
    pub betti: Vec<usize>,
    /// Betti numbers of `K` read off the sequence from the `U`, `V` and
    /// `U n V` terms alone.
    pub recovered_betti: Vec<usize>,
}

impl MayerVietoris {
    pub fn is_exact(&self) -> bool {
        self.les.is_exact()
    }
}

/// Build the Mayer–Vietoris sequence with `L`-valued coefficients. Any
/// holonomy on `K` is inherited by the pieces.
pub fn mayer_vietoris(
    k: &SimplicialComplex,
    u: &SimplicialComplex,
    v: &SimplicialComplex,
    l: &LieAlgebra,
) -> Result<MayerVietoris> {
    if !u.is_subcomplex_of(k) || !v.is_subcomplex_of(k) {
        return Err(Error::BadCover("pieces are not subcomplexes".into()));
    }
    if !u.union(v).same_simplices(k) {
        return Err(Error::BadCover("union of the pieces is not the whole complex".into()));
    }
    let g = l.dim();
    let top = k.dim();
    let with_hol = |sub: &SimplicialComplex| -> Result<SimplicialComplex> {
        let hol = k.holonomy().iter().filter(|((a, b), _)| sub.contains(&[*a, *b])).map(|(e, m)| (*e, m.clone()));
        sub.without_holonomy().with_holonomy(hol.collect())
    };
    let (u, v) = (with_hol(u)?, with_hol(v)?);
    let w = with_hol(&u.intersection(&v))?;
    let ck = simplicial_padded(k, g, top)?;
    let cu = simplicial_padded(&u, g, top)?;
    let cv = simplicial_padded(&v, g, top)?;
    let cw = simplicial_padded(&w, g, top)?;
    let middle = FiniteComplex::direct_sum(&[&cu, &cv]).with_coefficient_dim(g);

    let (ru, rv) = (restriction(k, &u, g, top), restriction(k, &v, g, top));
    let (rwu, rwv) = (restriction(&u, &w, g, top), restriction(&v, &w, g, top));
    let inclusion_parts: Vec<QMatrix> = ru.iter().zip(&rv).map(|(a, b)| QMatrix::vstack(&[a, b])).collect();
    let minus = -Q::from_integer(1.into());
    let difference: Vec<QMatrix> = rwu.iter().zip(&rwv).map(|(a, b)| QMatrix::hstack(&[a, &b.scale(&minus)])).collect();

    let ck = Arc::new(ck);
    let middle = Arc::new(middle);
    let cw = Arc::new(cw);
    let inclusion = ChainMap::new(ck.clone(), middle.clone(), inclusion_parts)?;
    let projection = ChainMap::new(middle, cw, difference)?;
    let sequence = ShortExactSequence::new(inclusion, projection)?;
    let les = sequence.long_exact_sequence()?;

    let recovered_betti = (0..=top)
        .map(|d| {
            let from_connecting = if d == 0 {
                0
            } else {
                let w_dim = les.nodes.iter().find(|n| n.kind == NodeKind::Quotient && n.degree == d - 1).map_or(0, |n| n.dim);
                w_dim - les.map_from(NodeKind::Middle, d - 1).map_or(0, QMatrix::rank)
            };
            let uv_dim = les.nodes.iter().find(|n| n.kind == NodeKind::Middle && n.degree == d).map_or(0, |n| n.dim);
            from_connecting + uv_dim - les.map_from(NodeKind::Middle, d).map_or(0, QMatrix::rank)
        })
        .collect();
    let betti = ck.betti().betti;
    Ok(MayerVietoris { sequence, les, betti, recovered_betti })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::catalog;
    use crate::models::{bundled_cover, bundled_mesh};

    #[test]
    fn circle_from_two_arcs() {
        let k = bundled_mesh("hexagon_circle").unwrap();
        let (u, v) = bundled_cover("hexagon_circle").unwrap();
        let mv = mayer_vietoris(&k, &u, &v, &catalog("abelian:1").unwrap()).unwrap();
        assert!(mv.is_exact());
        assert_eq!(mv.recovered_betti, vec![1, 1]);
        assert_eq!(mv.betti, vec![1, 1]);
    }

    #[test]
    fn disjoint_pieces() {
        let k = SimplicialComplex::from_facets(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        let u = SimplicialComplex::from_facets(4, &[vec![0, 1]]).unwrap();
        let v = SimplicialComplex::from_facets(4, &[vec![2, 3]]).unwrap();
        let mv = mayer_vietoris(&k, &u, &v, &catalog("abelian:1").unwrap()).unwrap();
        assert!(mv.is_exact());
        assert_eq!(mv.recovered_betti, vec![2, 0]);
    }

    #[test]
    fn bad_cover() {
        let k = bundled_mesh("hexagon_circle").unwrap();
        let (u, _) = bundled_cover("hexagon_circle").unwrap();
        let err = mayer_vietoris(&k, &u, &u, &catalog("abelian:1").unwrap()).unwrap_err();
        assert!(matches!(err, Error::BadCover(_)));
    }
}
