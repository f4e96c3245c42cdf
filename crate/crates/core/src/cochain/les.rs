use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{QMatrix, Q};

use super::{ChainMap, Cohomology, FiniteComplex};

/// `0 -> A -> B -> C -> 0`, exact in every degree.
#[derive(Clone, Debug)]
pub struct ShortExactSequence {
    inclusion: ChainMap,
    projection: ChainMap,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeKind {
    Sub,
    Middle,
    Quotient,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LesNode {
    pub kind: NodeKind,
    pub degree: usize,
    pub dim: usize,
}

/// Exactness bookkeeping at one node: `rank_in + rank_out = dim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactnessNode {
    pub index: usize,
    pub kind: NodeKind,
    pub degree: usize,
    pub dim: usize,
    pub rank_in: usize,
    pub rank_out: usize,
    pub exact: bool,
}

/// `H^0(A) -> H^0(B) -> H^0(C) -> H^1(A) -> ...`, with `maps[j]` going from
/// node `j` to node `j + 1`.
#[derive(Clone, Debug)]
pub struct LongExactSequence {
    pub nodes: Vec<LesNode>,
    pub maps: Vec<QMatrix>,
}

impl LongExactSequence {
    pub fn exactness(&self) -> Vec<ExactnessNode> {
        self.nodes
            .iter()
            .enumerate()
            .map(|(j, node)| {
                let rank_in = if j == 0 { 0 } else { self.maps[j - 1].rank() };
                let rank_out = self.maps.get(j).map_or(0, QMatrix::rank);
                let composite_zero = match (j.checked_sub(1).and_then(|i| self.maps.get(i)), self.maps.get(j)) {
                    (Some(a), Some(b)) => b.mul(a).is_zero(),
                    _ => true,
                };
                ExactnessNode {
                    index: j,
                    kind: node.kind,
                    degree: node.degree,
                    dim: node.dim,
                    rank_in,
                    rank_out,
                    exact: composite_zero && rank_in + rank_out == node.dim,
                }
            })
            .collect()
    }

    pub fn is_exact(&self) -> bool {
        self.exactness().iter().all(|n| n.exact)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Map leaving the node of the given kind and degree.
    pub fn map_from(&self, kind: NodeKind, degree: usize) -> Option<&QMatrix> {
        let j = self.nodes.iter().position(|n| n.kind == kind && n.degree == degree)?;
        self.maps.get(j)
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.maps.iter().map(QMatrix::rank).collect()
    }
}

impl ShortExactSequence {
    pub fn new(inclusion: ChainMap, projection: ChainMap) -> Result<Self> {
        if inclusion.target().dims() != projection.source().dims() {
            return Err(Error::InvalidInput("middle complexes of the short sequence differ".into()));
        }
        let top = inclusion.top_degree().max(projection.top_degree());
        for k in 0..=top {
            let i = inclusion.component(k);
            let p = projection.component(k);
            let (a, b, c) = (inclusion.source().dim(k), inclusion.target().dim(k), projection.target().dim(k));
            let ri = i.rank();
            let rp = p.rank();
            let reason = if ri != a {
                Some(format!("inclusion has rank {ri} < {a}"))
            } else if rp != c {
                Some(format!("projection has rank {rp} < {c}"))
            } else if !p.mul(&i).is_zero() {
                Some("projection . inclusion != 0".to_string())
            } else if ri != b - rp {
                Some(format!("image rank {ri} != kernel dimension {}", b - rp))
            } else {
                None
            };
            if let Some(reason) = reason {
                return Err(Error::NotExact { degree: k, reason });
            }
        }
        Ok(ShortExactSequence { inclusion, projection })
    }

    pub fn sub(&self) -> &Arc<FiniteComplex> {
        self.inclusion.source()
    }

    pub fn middle(&self) -> &Arc<FiniteComplex> {
        self.inclusion.target()
    }

    pub fn quotient(&self) -> &Arc<FiniteComplex> {
        self.projection.target()
    }

    pub fn inclusion(&self) -> &ChainMap {
        &self.inclusion
    }

    pub fn projection(&self) -> &ChainMap {
        &self.projection
    }

    /// Connecting map `H^k(C) -> H^{k+1}(A)`: lift through the projection,
    /// apply `D`, pull back through the inclusion.
    pub fn connecting(&self, k: usize, ha: &Cohomology, hc: &Cohomology) -> Result<QMatrix> {
        let p = self.projection.component(k);
        let i_next = self.inclusion.component(k + 1);
        let d = self.middle().differential(k);
        let reps = hc.representatives(k);
        let lifts = p.solve_columns(reps);
        let mut pulled: Vec<Vec<Q>> = Vec::with_capacity(reps.len());
        let images: Vec<Vec<Q>> = lifts
            .into_iter()
            .map(|b| d.mul_vec(&b.expect("projection is surjective")))
            .collect();
        for a in i_next.solve_columns(&images) {
            pulled.push(a.ok_or_else(|| Error::NotExact { degree: k + 1, reason: "boundary of lift outside the sub-complex".into() })?);
        }
        let cols = match ha.degree(k + 1) {
            Some(h) => h.class_of_many(&pulled)?,
            None => vec![Vec::new(); pulled.len()],
        };
        Ok(QMatrix::from_columns(ha.dim(k + 1), &cols))
    }

    pub fn long_exact_sequence(&self) -> Result<LongExactSequence> {
        let (ha, hb, hc) = (self.sub().cohomology(), self.middle().cohomology(), self.quotient().cohomology());
        self.long_exact_sequence_with(&ha, &hb, &hc)
    }

    pub fn long_exact_sequence_with(&self, ha: &Cohomology, hb: &Cohomology, hc: &Cohomology) -> Result<LongExactSequence> {
        let top = self.sub().top_degree().max(self.middle().top_degree()).max(self.quotient().top_degree());
        let mut nodes = Vec::with_capacity(3 * (top + 1));
        let mut maps = Vec::with_capacity(3 * (top + 1));
        for k in 0..=top {
            nodes.push(LesNode { kind: NodeKind::Sub, degree: k, dim: ha.dim(k) });
            nodes.push(LesNode { kind: NodeKind::Middle, degree: k, dim: hb.dim(k) });
            nodes.push(LesNode { kind: NodeKind::Quotient, degree: k, dim: hc.dim(k) });
            maps.push(self.inclusion.induced(k, ha, hb)?);
            maps.push(self.projection.induced(k, hb, hc)?);
            if k < top {
                maps.push(self.connecting(k, ha, hc)?);
            }
        }
        Ok(LongExactSequence { nodes, maps })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochain::tests::circle;
    use crate::linalg::q;

    #[test]
    fn identity_with_zero_quotient() {
        let c = Arc::new(circle());
        let zero = Arc::new(FiniteComplex::zero_differentials(vec![0, 0]));
        let id = ChainMap::identity(c.clone());
        let p = ChainMap::new(c.clone(), zero, vec![QMatrix::zeros(0, 3), QMatrix::zeros(0, 3)]).unwrap();
        let ses = ShortExactSequence::new(id, p).unwrap();
        let les = ses.long_exact_sequence().unwrap();
        assert_eq!(les.len(), 6);
        assert!(les.is_exact());
        assert!(les.map_from(NodeKind::Quotient, 0).unwrap().is_zero());
    }

    #[test]
    fn non_exact_sequence_is_rejected() {
        let c = Arc::new(circle());
        let id = ChainMap::identity(c.clone());
        let also_id = ChainMap::identity(c);
        assert!(matches!(ShortExactSequence::new(id, also_id), Err(Error::NotExact { degree: 0, .. })));
    }

    #[test]
    fn interval_relative_to_endpoints() {
        // 0 -> C(I, boundary) -> C(I) -> C(endpoints) -> 0 on the interval with one edge
        let interval = Arc::new(
            FiniteComplex::new(vec![2, 1], vec![QMatrix::from_dense(1, 2, &[vec![q(-1), q(1)]])]).unwrap(),
        );
        let relative = Arc::new(FiniteComplex::zero_differentials(vec![0, 1]));
        let ends = Arc::new(FiniteComplex::zero_differentials(vec![2, 0]));
        let inc = ChainMap::new(relative, interval.clone(), vec![QMatrix::zeros(2, 0), QMatrix::identity(1)]).unwrap();
        let proj = ChainMap::new(interval, ends, vec![QMatrix::identity(2), QMatrix::zeros(0, 1)]).unwrap();
        let les = ShortExactSequence::new(inc, proj).unwrap().long_exact_sequence().unwrap();
        assert!(les.is_exact());
        // H^0(ends) = Q^2 -> H^1(relative) = Q has rank 1
        assert_eq!(les.map_from(NodeKind::Quotient, 0).unwrap().rank(), 1);
    }
}
