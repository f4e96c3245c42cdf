use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{format_q, parse_q, Q};

use super::LieAlgebra;

/// `[i, j, [[k, "p/q"], ...]]`: the bracket `[e_i, e_j]` for `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketEntry(pub usize, pub usize, pub Vec<(usize, String)>);

/// On-disk Lie algebra description. Unlisted brackets are zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieFile {
    pub dim: usize,
    pub labels: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
}

impl LieFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn into_algebra(self, name: &str) -> Result<LieAlgebra> {
        if self.labels.len() != self.dim {
            return Err(Error::MalformedAlgebra(format!(
                "dim {} but {} labels",
                self.dim,
                self.labels.len()
            )));
        }
        let brackets = self
            .brackets
            .iter()
            .map(|BracketEntry(i, j, terms)| {
                let terms = terms.iter().map(|(k, v)| Ok((*k, parse_q(v)?))).collect::<Result<Vec<(usize, Q)>>>()?;
                Ok((*i, *j, terms))
            })
            .collect::<Result<Vec<_>>>()?;
        LieAlgebra::from_brackets(name, self.labels, &brackets)
    }

    pub fn from_algebra(l: &LieAlgebra) -> Self {
        let n = l.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let terms: Vec<(usize, String)> = (0..n)
                    .filter(|&k| !num::Zero::is_zero(l.c(i, j, k)))
                    .map(|k| (k, format_q(l.c(i, j, k))))
                    .collect();
                if !terms.is_empty() {
                    brackets.push(BracketEntry(i, j, terms));
                }
            }
        }
        LieFile { dim: n, labels: l.labels().to_vec(), brackets }
    }
}

/// A catalog algebra by name, or an algebra file by path (named after the
/// file stem).
pub fn load_lie(source: &str) -> Result<LieAlgebra> {
    match super::catalog(source) {
        Ok(l) => Ok(l),
        Err(Error::NotFound(msg)) => {
            let path = std::path::Path::new(source);
            if !path.is_file() {
                return Err(Error::NotFound(msg));
            }
            let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{source}: {e}")))?;
            let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or(source);
            LieFile::parse(&text)?.into_algebra(name)
        }
        Err(e) => Err(e),
    }
}
