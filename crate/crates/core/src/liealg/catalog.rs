use crate::error::{Error, Result};
use crate::linalg::{q, Q};

use super::LieAlgebra;

/// Representative catalog entries, used by exhaustive tests and reports.
pub fn catalog_names() -> Vec<String> {
    [
        "abelian:1",
        "abelian:2",
        "abelian:3",
        "heisenberg3",
        "sl2",
        "so3",
        "upper_triangular:2",
        "upper_triangular:3",
        "heisenberg3+abelian:1",
        "so3+abelian:1",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect()
}

/// Look up a built-in algebra. Names: `abelian:<n>`, `heisenberg3`, `sl2`,
/// `so3`, `upper_triangular:<n>`, and `a+b` for direct sums.
pub fn catalog(name: &str) -> Result<LieAlgebra> {
    let name = name.trim();
    if name.contains('+') {
        let mut parts = name.split('+');
        let first = catalog(parts.next().unwrap_or_default())?;
        return parts.try_fold(first, |acc, p| Ok(acc.direct_sum(&catalog(p)?))).map(|l| l.with_name(name));
    }
    let (base, arg) = match name.split_once(':') {
        Some((b, a)) => (b, Some(a)),
        None => (name, None),
    };
    let size = |default: Option<usize>| -> Result<usize> {
        match arg {
            Some(a) => a.parse().map_err(|_| Error::NotFound(format!("bad size in {name:?}"))),
            None => default.ok_or_else(|| Error::NotFound(format!("{name:?} needs a size, e.g. {base}:3"))),
        }
    };
    let l = match base {
        "abelian" => abelian(size(None)?),
        "heisenberg3" | "heisenberg" | "h3" => heisenberg3(),
        "sl2" => sl2(),
        "so3" => so3(),
        "upper_triangular" | "b" => upper_triangular(size(None)?),
        _ => return Err(Error::NotFound(format!("unknown algebra {name:?}"))),
    }?;
    Ok(l.with_name(name))
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

pub fn abelian(n: usize) -> Result<LieAlgebra> {
    LieAlgebra::from_brackets(format!("abelian:{n}"), (0..n).map(|i| format!("e{i}")).collect(), &[])
}

pub fn heisenberg3() -> Result<LieAlgebra> {
    LieAlgebra::from_brackets("heisenberg3", labels(&["X", "Y", "Z"]), &[(0, 1, vec![(2, q(1))])])
}

pub fn sl2() -> Result<LieAlgebra> {
    LieAlgebra::from_brackets(
        "sl2",
        labels(&["H", "E", "F"]),
        &[(0, 1, vec![(1, q(2))]), (0, 2, vec![(2, q(-2))]), (1, 2, vec![(0, q(1))])],
    )
}

pub fn so3() -> Result<LieAlgebra> {
    LieAlgebra::from_brackets(
        "so3",
        labels(&["e1", "e2", "e3"]),
        &[(0, 1, vec![(2, q(1))]), (1, 2, vec![(0, q(1))]), (0, 2, vec![(1, q(-1))])],
    )
}

/// Upper triangular `n x n` matrices, basis `E_ij` (`i <= j`) in
/// lexicographic order.
pub fn upper_triangular(n: usize) -> Result<LieAlgebra> {
    let basis: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let index = |p: (usize, usize)| basis.iter().position(|&b| b == p);
    let mut brackets: Vec<(usize, usize, Vec<(usize, Q)>)> = Vec::new();
    for a in 0..basis.len() {
        for b in a + 1..basis.len() {
            let ((i, j), (k, l)) = (basis[a], basis[b]);
            let mut terms = Vec::new();
            if j == k {
                terms.push((index((i, l)).expect("upper triangular"), q(1)));
            }
            if l == i {
                terms.push((index((k, j)).expect("upper triangular"), q(-1)));
            }
            if !terms.is_empty() {
                brackets.push((a, b, terms));
            }
        }
    }
    let labels = basis.iter().map(|(i, j)| format!("E{i}{j}")).collect();
    LieAlgebra::from_brackets(format!("upper_triangular:{n}"), labels, &brackets)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_catalog_entry_is_valid() {
        for name in catalog_names() {
            let l = catalog(&name).unwrap();
            assert!(l.is_valid(), "{name}");
            assert!(l.jacobi_holds_on_basis(), "{name}");
        }
    }

    #[test]
    fn unknown_names() {
        assert!(matches!(catalog("e8"), Err(Error::NotFound(_))));
        assert!(matches!(catalog("abelian"), Err(Error::NotFound(_))));
        assert!(matches!(catalog("abelian:x"), Err(Error::NotFound(_))));
    }

    #[test]
    fn dimensions() {
        assert_eq!(catalog("upper_triangular:3").unwrap().dim(), 6);
        assert_eq!(catalog("so3+abelian:2").unwrap().dim(), 5);
        assert!(catalog("so3").unwrap().is_compact_type());
    }
}
