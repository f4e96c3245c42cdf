//! Textual model specifications: `ce`, `rn:n:N`, `product:n:N`,
//! `simplicial:<mesh name or path>`.

use std::fmt;
use std::path::Path;

use crate::cochain::{CohomologyReport, FiniteComplex};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::liealg::LieAlgebra;

use super::bracket::{CeModel, FormModel, PolyModel, SimplicialModel};
use super::ce::chevalley_eilenberg;
use super::mesh::{bundled_mesh, MeshFile, SimplicialComplex};
use super::poly::poly_derham;
use super::product::{product_model_rn_with};
use super::simplicial::simplicial_gvalued;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelSpec {
    Ce,
    Rn { n: usize, max_degree: usize },
    Product { n: usize, max_degree: usize },
    Simplicial { mesh: String },
}

impl fmt::Display for ModelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelSpec::Ce => write!(f, "ce"),
            ModelSpec::Rn { n, max_degree } => write!(f, "rn:{n}:{max_degree}"),
            ModelSpec::Product { n, max_degree } => write!(f, "product:{n}:{max_degree}"),
            ModelSpec::Simplicial { mesh } => write!(f, "simplicial:{mesh}"),
        }
    }
}

fn parse_pair(kind: &str, rest: &str) -> Result<(usize, usize)> {
    let parts: Vec<&str> = rest.split(':').collect();
    let bad = || Error::InvalidInput(format!("expected {kind}:<n>:<N>, got {kind}:{rest}"));
    if parts.len() != 2 {
        return Err(bad());
    }
    let n = parts[0].parse().map_err(|_| bad())?;
    let max = parts[1].parse().map_err(|_| bad())?;
    Ok((n, max))
}

impl ModelSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "ce" {
            return Ok(ModelSpec::Ce);
        }
        let (kind, rest) = text.split_once(':').ok_or_else(|| Error::InvalidInput(format!("unknown model {text:?}")))?;
        match kind {
            "rn" => parse_pair(kind, rest).map(|(n, max_degree)| ModelSpec::Rn { n, max_degree }),
            "product" => parse_pair(kind, rest).map(|(n, max_degree)| ModelSpec::Product { n, max_degree }),
            "simplicial" if !rest.is_empty() => Ok(ModelSpec::Simplicial { mesh: rest.to_string() }),
            _ => Err(Error::InvalidInput(format!("unknown model {text:?}"))),
        }
    }

    pub fn mesh(&self) -> Result<SimplicialComplex> {
        match self {
            ModelSpec::Simplicial { mesh } => load_mesh(mesh),
            _ => Err(Error::InvalidInput(format!("model {self} has no mesh"))),
        }
    }

    /// The assembled complex.
    pub fn build(&self, l: &LieAlgebra) -> Result<FiniteComplex> {
        match self {
            ModelSpec::Ce => chevalley_eilenberg(l),
            ModelSpec::Rn { n, max_degree } => poly_derham(*n, l, *max_degree),
            ModelSpec::Product { n, max_degree } => Ok(product_model_rn_with(*n, *max_degree, l, Execution::default())?.assemble()),
            ModelSpec::Simplicial { .. } => simplicial_gvalued(&self.mesh()?, l),
        }
    }

    /// Betti numbers, stratum by stratum where the model splits.
    pub fn betti(&self, l: &LieAlgebra, exec: Execution) -> Result<CohomologyReport> {
        match self {
            ModelSpec::Product { n, max_degree } => Ok(product_model_rn_with(*n, *max_degree, l, exec)?.betti_with(exec)),
            ModelSpec::Rn { n, max_degree } => {
                Ok(super::poly::PolyDeRham::new(*n, l.dim(), *max_degree)?.strata().betti_with(exec))
            }
            _ => Ok(self.build(l)?.betti_with(exec)),
        }
    }

    /// The model together with its bracket, where one is defined.
    pub fn form_model(&self, l: &LieAlgebra) -> Result<Box<dyn FormModel>> {
        Ok(match self {
            ModelSpec::Ce => Box::new(CeModel::new(l)?),
            ModelSpec::Rn { n, max_degree } => Box::new(PolyModel::new(*n, l, *max_degree)?),
            ModelSpec::Simplicial { mesh } => Box::new(SimplicialModel::new(&self.mesh()?, l, mesh)?),
            ModelSpec::Product { .. } => return Err(Error::Unsupported("bracket on the product model".into())),
        })
    }
}

/// A bundled mesh by name, or a mesh file by path.
pub fn load_mesh(source: &str) -> Result<SimplicialComplex> {
    match bundled_mesh(source) {
        Ok(k) => Ok(k),
        Err(Error::NotFound(_)) => {
            let path = Path::new(source);
            if !path.exists() {
                return Err(Error::NotFound(format!("no bundled mesh or file named {source:?}")));
            }
            let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{source}: {e}")))?;
            MeshFile::parse(&text)?.into_complex()
        }
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        for text in ["ce", "rn:2:3", "product:1:4", "simplicial:torus"] {
            assert_eq!(ModelSpec::parse(text).unwrap().to_string(), text);
        }
        for bad in ["", "rn:2", "product:a:b", "simplicial:", "cech"] {
            assert!(matches!(ModelSpec::parse(bad), Err(Error::InvalidInput(_))), "{bad}");
        }
    }

    #[test]
    fn missing_mesh() {
        assert!(matches!(load_mesh("/no/such/mesh.json"), Err(Error::NotFound(_))));
    }
}
