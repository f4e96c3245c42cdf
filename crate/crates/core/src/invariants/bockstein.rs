use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::cochain::{ExactnessNode, NodeKind, ShortExactSequence};
use crate::error::{Error, Result};
use crate::liealg::{IdealSequence, LieAlgebra};
use crate::linalg::Subspace;
use crate::models::{module_map, simplicial_values_map, SimplicialComplex};

/// Named ideals of an algebra.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum IdealChoice {
    #[default]
    Derived,
    Center,
    Zero,
    Whole,
}

impl IdealChoice {
    pub fn subspace(self, l: &LieAlgebra) -> Subspace {
        match self {
            IdealChoice::Derived => l.derived_subalgebra(),
            IdealChoice::Center => l.center(),
            IdealChoice::Zero => Subspace::zero(l.dim()),
            IdealChoice::Whole => Subspace::whole(l.dim()),
        }
    }
}

impl FromStr for IdealChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "derived" => Ok(IdealChoice::Derived),
            "center" => Ok(IdealChoice::Center),
            "zero" => Ok(IdealChoice::Zero),
            "whole" => Ok(IdealChoice::Whole),
            other => Err(Error::InvalidInput(format!("unknown ideal '{other}' (derived, center, zero, whole)"))),
        }
    }
}

impl fmt::Display for IdealChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdealChoice::Derived => "derived",
            IdealChoice::Center => "center",
            IdealChoice::Zero => "zero",
            IdealChoice::Whole => "whole",
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub enum BocksteinModel<'a> {
    /// `CE(L; a) -> CE(L; L) -> CE(L; L/a)`.
    ChevalleyEilenberg,
    /// Untwisted cochains on a mesh with values in `a`, `L`, `L/a`.
    Simplicial(&'a SimplicialComplex),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LesMapRank {
    pub from: NodeKind,
    pub to: NodeKind,
    pub degree: usize,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BocksteinReport {
    pub lie: String,
    pub ideal_dim: usize,
    pub model: String,
    pub sub_betti: Vec<usize>,
    pub middle_betti: Vec<usize>,
    pub quotient_betti: Vec<usize>,
    pub maps: Vec<LesMapRank>,
    pub exactness: Vec<ExactnessNode>,
    pub exact: bool,
}

impl BocksteinReport {
    /// Ranks of the connecting maps `H^k(L/a) -> H^{k+1}(a)`.
    pub fn connecting_ranks(&self) -> Vec<usize> {
        self.maps.iter().filter(|m| m.from == NodeKind::Quotient).map(|m| m.rank).collect()
    }
}

/// The long exact sequence of `0 -> a -> L -> L/a -> 0` in coefficients.
pub fn bockstein_report(l: &LieAlgebra, ideal: &Subspace, model: BocksteinModel<'_>) -> Result<BocksteinReport> {
    l.require_valid()?;
    let seq = IdealSequence::new(l, ideal)?;
    let (inc, proj, label) = match model {
        BocksteinModel::ChevalleyEilenberg => (
            module_map(l, &seq.ideal_module, &seq.adjoint_module, seq.inclusion.matrix())?,
            module_map(l, &seq.adjoint_module, &seq.quotient_module, seq.projection.matrix())?,
            "ce".to_string(),
        ),
        BocksteinModel::Simplicial(k) => (
            simplicial_values_map(k, seq.inclusion.matrix())?,
            simplicial_values_map(k, seq.projection.matrix())?,
            "simplicial".to_string(),
        ),
    };
    let ses = ShortExactSequence::new(inc, proj)?;
    let (ha, hb, hc) = (ses.sub().cohomology(), ses.middle().cohomology(), ses.quotient().cohomology());
    let les = ses.long_exact_sequence_with(&ha, &hb, &hc)?;
    let maps = les
        .maps
        .iter()
        .enumerate()
        .map(|(i, m)| LesMapRank { from: les.nodes[i].kind, to: les.nodes[i + 1].kind, degree: les.nodes[i].degree, rank: m.rank() })
        .collect();
    let exactness = les.exactness();
    Ok(BocksteinReport {
        lie: l.name().to_string(),
        ideal_dim: ideal.dim(),
        model: label,
        sub_betti: ha.betti(),
        middle_betti: hb.betti(),
        quotient_betti: hc.betti(),
        maps,
        exact: exactness.iter().all(|n| n.exact),
        exactness,
    })
}
