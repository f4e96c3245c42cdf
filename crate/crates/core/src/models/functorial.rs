//! Chain maps induced by simplicial maps (contravariant) and by maps of
//! coefficients (covariant).

use std::sync::Arc;

use crate::cochain::{ChainMap, FiniteComplex};
use crate::error::{Error, Result};
use crate::liealg::{LieAlgebra, LieHom, LieModule};
use crate::linalg::{QMatrix, Q};

use super::ce::{chevalley_eilenberg, chevalley_eilenberg_with};
use super::combin::binomial;
use super::mesh::SimplicialComplex;
use super::simplicial::{simplicial_cochains, simplicial_padded};

/// Vertex map sending every simplex of the source onto a simplex of the
/// target, possibly collapsing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    source: SimplicialComplex,
    target: SimplicialComplex,
    vertices: Vec<usize>,
}

impl SimplicialMap {
    pub fn new(source: SimplicialComplex, target: SimplicialComplex, vertices: Vec<usize>) -> Result<Self> {
        if vertices.len() != source.vertex_count() {
            return Err(Error::BadMap(format!("{} images for {} vertices", vertices.len(), source.vertex_count())));
        }
        if let Some(v) = vertices.iter().find(|&&v| v >= target.vertex_count()) {
            return Err(Error::BadMap(format!("image vertex {v} out of range")));
        }
        for d in 0..=source.dim() {
            for s in source.simplices(d) {
                let mut image: Vec<usize> = s.iter().map(|&v| vertices[v]).collect();
                image.sort_unstable();
                image.dedup();
                if !target.contains(&image) {
                    return Err(Error::BadMap(format!("{s:?} maps onto {image:?}, not a simplex")));
                }
            }
        }
        Ok(SimplicialMap { source, target, vertices })
    }

    pub fn identity(k: &SimplicialComplex) -> Self {
        SimplicialMap { source: k.clone(), target: k.clone(), vertices: (0..k.vertex_count()).collect() }
    }

    pub fn constant(source: &SimplicialComplex, target: &SimplicialComplex, v: usize) -> Result<Self> {
        Self::new(source.clone(), target.clone(), vec![v; source.vertex_count()])
    }

    pub fn source(&self) -> &SimplicialComplex {
        &self.source
    }

    pub fn target(&self) -> &SimplicialComplex {
        &self.target
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.vertices
    }

    /// `self . first`.
    pub fn compose(&self, first: &SimplicialMap) -> Result<SimplicialMap> {
        if !first.target.same_simplices(&self.source) {
            return Err(Error::BadMap("composition through different complexes".into()));
        }
        let vertices = first.vertices.iter().map(|&v| self.vertices[v]).collect();
        SimplicialMap::new(first.source.clone(), self.target.clone(), vertices)
    }
}

/// `f^*: C(target; L) -> C(source; L)` with `(f^* ω)(σ) = ±ω(f σ)`, zero
/// on collapsed simplices. Only untwisted complexes are supported.
pub fn pullback(f: &SimplicialMap, l: &LieAlgebra) -> Result<ChainMap> {
    pullback_with_dim(f, l.dim())
}

pub fn pullback_with_dim(f: &SimplicialMap, g: usize) -> Result<ChainMap> {
    if f.source.has_holonomy() || f.target.has_holonomy() {
        return Err(Error::Unsupported("pullback along complexes with holonomy".into()));
    }
    let top = f.source.dim().max(f.target.dim());
    let src = Arc::new(simplicial_padded(&f.target, g, top)?);
    let tgt = Arc::new(simplicial_padded(&f.source, g, top)?);
    let components = (0..=top)
        .map(|d| {
            let mut entries = Vec::new();
            for (i, s) in f.source.simplices(d).iter().enumerate() {
                let image: Vec<usize> = s.iter().map(|&v| f.vertices[v]).collect();
                let mut sorted = image.clone();
                sorted.sort_unstable();
                if sorted.windows(2).any(|w| w[0] == w[1]) {
                    continue;
                }
                let j = f.target.index_of(&sorted).expect("checked simplicial");
                let sign = permutation_sign(&image);
                for a in 0..g {
                    entries.push((i * g + a, j * g + a, Q::from_integer(sign.into())));
                }
            }
            QMatrix::from_triplets(tgt.dim(d), src.dim(d), entries)
        })
        .collect();
    ChainMap::new(src, tgt, components)
}

/// Sign of the permutation sorting distinct values.
fn permutation_sign(v: &[usize]) -> i64 {
    let inversions = (0..v.len()).flat_map(|i| (i + 1..v.len()).map(move |j| (i, j))).filter(|&(i, j)| v[i] > v[j]).count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Which complex a coefficient map acts on.
#[derive(Clone, Copy, Debug)]
pub enum CoefficientModel<'a> {
    ChevalleyEilenberg,
    Simplicial(&'a SimplicialComplex),
}

/// `Id ⊗ φ`. On the Chevalley–Eilenberg model the target carries the
/// source algebra's action through `φ`, so the map is
/// `CE(L; L) -> CE(L; φ^* L')`.
pub fn coefficient_map(phi: &LieHom, model: CoefficientModel<'_>) -> Result<ChainMap> {
    let (l, lt) = (phi.source(), phi.target());
    match model {
        CoefficientModel::ChevalleyEilenberg => {
            let action = (0..l.dim()).map(|i| lt.ad_of(&phi.matrix().column(i))).collect();
            let pulled = LieModule::new(l, format!("{}|{}", lt.name(), l.name()), action)?;
            let src = chevalley_eilenberg(l)?;
            let tgt = chevalley_eilenberg_with(l, &pulled)?;
            values_map(src, tgt, phi.matrix(), |q| binomial(l.dim(), q))
        }
        CoefficientModel::Simplicial(k) => {
            if k.has_holonomy() {
                return Err(Error::Unsupported("coefficient maps on twisted simplicial complexes".into()));
            }
            let src = simplicial_cochains(k, l.dim())?;
            let tgt = simplicial_cochains(k, lt.dim())?;
            values_map(src, tgt, phi.matrix(), |d| k.count(d))
        }
    }
}

/// `Id ⊗ m` between Chevalley–Eilenberg complexes with module coefficients;
/// `m` must intertwine the actions.
pub fn module_map(l: &LieAlgebra, src: &LieModule, tgt: &LieModule, m: &QMatrix) -> Result<ChainMap> {
    let intertwines = m.shape() == (tgt.dim(), src.dim())
        && (0..l.dim()).all(|i| m.mul(src.action(i)) == tgt.action(i).mul(m));
    if !intertwines {
        return Err(Error::NotAHomomorphism("value map does not intertwine the actions".into()));
    }
    let a = chevalley_eilenberg_with(l, src)?;
    let b = chevalley_eilenberg_with(l, tgt)?;
    values_map(a, b, m, |q| binomial(l.dim(), q))
}

/// `Id ⊗ m` between untwisted simplicial cochains with fibers of the two
/// sizes of `m`.
pub fn simplicial_values_map(k: &SimplicialComplex, m: &QMatrix) -> Result<ChainMap> {
    if k.has_holonomy() {
        return Err(Error::Unsupported("coefficient maps on twisted simplicial complexes".into()));
    }
    let plain = k.without_holonomy();
    let src = simplicial_cochains(&plain, m.ncols())?;
    let tgt = simplicial_cochains(&plain, m.nrows())?;
    values_map(src, tgt, m, |d| k.count(d))
}

fn values_map(src: FiniteComplex, tgt: FiniteComplex, m: &QMatrix, count: impl Fn(usize) -> usize) -> Result<ChainMap> {
    let top = src.top_degree().max(tgt.top_degree());
    let components = (0..=top).map(|k| QMatrix::identity(count(k)).kron(m)).collect();
    ChainMap::new(Arc::new(src), Arc::new(tgt), components)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::catalog;
    use crate::models::bundled_mesh;

    #[test]
    fn identity_pullback_is_identity() {
        let k = bundled_mesh("torus").unwrap();
        let f = pullback(&SimplicialMap::identity(&k), &catalog("abelian:2").unwrap()).unwrap();
        for (k, c) in f.components().iter().enumerate() {
            assert_eq!(c, &QMatrix::identity(f.source().dim(k)));
        }
    }

    #[test]
    fn constant_map_to_point() {
        let circle = bundled_mesh("triangle_circle").unwrap();
        let point = bundled_mesh("point").unwrap();
        let f = pullback(&SimplicialMap::constant(&circle, &point, 0).unwrap(), &catalog("abelian:1").unwrap()).unwrap();
        let (hs, ht) = (f.source().cohomology(), f.target().cohomology());
        assert_eq!(f.induced(0, &hs, &ht).unwrap().rank(), 1);
        assert!(f.induced(1, &hs, &ht).unwrap().is_zero());
    }

    #[test]
    fn non_simplicial_map_rejected() {
        let hex = bundled_mesh("hexagon_circle").unwrap();
        let tri = bundled_mesh("triangle_circle").unwrap();
        assert!(SimplicialMap::new(hex.clone(), tri, (0..6).map(|i| i % 3).collect()).is_ok());
        let err = SimplicialMap::new(
            bundled_mesh("triangle_circle").unwrap(),
            hex,
            vec![0, 1, 3],
        );
        assert!(matches!(err, Err(Error::BadMap(_))));
    }

    #[test]
    fn coefficient_identity_and_quotient() {
        let h = catalog("heisenberg3").unwrap();
        let id = coefficient_map(&LieHom::identity(&h), CoefficientModel::ChevalleyEilenberg).unwrap();
        assert!(id.components().iter().all(|c| c == &QMatrix::identity(c.nrows())));
        let seq = crate::liealg::IdealSequence::new(&h, &h.center()).unwrap();
        assert!(coefficient_map(&seq.projection, CoefficientModel::ChevalleyEilenberg).is_ok());
        let torus = bundled_mesh("torus").unwrap();
        assert!(coefficient_map(&seq.inclusion, CoefficientModel::Simplicial(&torus)).is_ok());
        assert!(module_map(&h, &seq.ideal_module, &seq.adjoint_module, seq.inclusion.matrix()).is_ok());
        // projecting onto X does not commute with ad(Y), which sends X to -Z
        let onto_x = QMatrix::from_triplets(3, 3, [(0, 0, Q::from_integer(1.into()))]);
        assert!(matches!(
            module_map(&h, &seq.adjoint_module, &seq.adjoint_module, &onto_x),
            Err(Error::NotAHomomorphism(_))
        ));
    }
}
