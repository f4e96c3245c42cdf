//! Finite simplicial complexes with optional orientation and edge holonomy.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{format_q, parse_q, QMatrix, Q};

/// Simplices are sorted vertex tuples, listed per dimension in lexicographic
/// order. `holonomy[(a, b)]` (`a < b`) transports the fiber at `a` to the
/// fiber at `b`; missing edges carry the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    simplices: Vec<Vec<Vec<usize>>>,
    index: Vec<HashMap<Vec<usize>, usize>>,
    orientation: Option<Vec<i64>>,
    holonomy: BTreeMap<(usize, usize), QMatrix>,
}

fn faces_of(s: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    (0..s.len()).map(move |i| {
        let mut f = s.to_vec();
        f.remove(i);
        f
    })
}

impl SimplicialComplex {
    /// Close the given simplices under taking faces.
    pub fn from_facets(vertex_count: usize, facets: &[Vec<usize>]) -> Result<Self> {
        let mut by_dim: Vec<BTreeSet<Vec<usize>>> = Vec::new();
        let mut stack: Vec<Vec<usize>> = Vec::new();
        for f in facets {
            let mut s = f.clone();
            s.sort_unstable();
            s.dedup();
            if s.len() != f.len() || s.is_empty() {
                return Err(Error::InvalidInput(format!("degenerate simplex {f:?}")));
            }
            stack.push(s);
        }
        while let Some(s) = stack.pop() {
            if let Some(&v) = s.iter().find(|&&v| v >= vertex_count) {
                return Err(Error::InvalidInput(format!("vertex {v} out of range (vertex count {vertex_count})")));
            }
            let d = s.len() - 1;
            if by_dim.len() <= d {
                by_dim.resize_with(d + 1, BTreeSet::new);
            }
            if by_dim[d].insert(s.clone()) && d > 0 {
                stack.extend(faces_of(&s));
            }
        }
        Ok(Self::assemble(vertex_count, by_dim.into_iter().map(|s| s.into_iter().collect()).collect()))
    }

    /// Use the simplices exactly as given; every face must be present.
    pub fn from_simplices(vertex_count: usize, by_dim: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        let mut sets: Vec<BTreeSet<Vec<usize>>> = Vec::new();
        for (d, list) in by_dim.into_iter().enumerate() {
            let mut set = BTreeSet::new();
            for s in list {
                let mut t = s.clone();
                t.sort_unstable();
                t.dedup();
                if t.len() != d + 1 {
                    return Err(Error::InvalidInput(format!("simplex {s:?} listed in dimension {d}")));
                }
                if let Some(&v) = t.iter().find(|&&v| v >= vertex_count) {
                    return Err(Error::InvalidInput(format!("vertex {v} out of range")));
                }
                set.insert(t);
            }
            sets.push(set);
        }
        while sets.len() > 1 && sets.last().is_some_and(BTreeSet::is_empty) {
            sets.pop();
        }
        for d in 1..sets.len() {
            for s in &sets[d] {
                if let Some(f) = faces_of(s).find(|f| !sets[d - 1].contains(f)) {
                    return Err(Error::InvalidInput(format!("face {f:?} of {s:?} missing (closure)")));
                }
            }
        }
        Ok(Self::assemble(vertex_count, sets.into_iter().map(|s| s.into_iter().collect()).collect()))
    }

    fn assemble(vertex_count: usize, mut simplices: Vec<Vec<Vec<usize>>>) -> Self {
        if simplices.is_empty() {
            simplices.push(Vec::new());
        }
        let index = simplices
            .iter()
            .map(|list| list.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
            .collect();
        SimplicialComplex { vertex_count, simplices, index, orientation: None, holonomy: BTreeMap::new() }
    }

    pub fn empty(vertex_count: usize) -> Self {
        Self::assemble(vertex_count, vec![Vec::new()])
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Dimension of the top simplices.
    pub fn dim(&self) -> usize {
        self.simplices.len() - 1
    }

    pub fn simplices(&self, d: usize) -> &[Vec<usize>] {
        self.simplices.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn count(&self, d: usize) -> usize {
        self.simplices(d).len()
    }

    pub fn counts(&self) -> Vec<usize> {
        (0..=self.dim()).map(|d| self.count(d)).collect()
    }

    pub fn index_of(&self, s: &[usize]) -> Option<usize> {
        self.index.get(s.len().checked_sub(1)?)?.get(s).copied()
    }

    pub fn contains(&self, s: &[usize]) -> bool {
        self.index_of(s).is_some()
    }

    pub fn orientation(&self) -> Option<&[i64]> {
        self.orientation.as_deref()
    }

    pub fn holonomy(&self) -> &BTreeMap<(usize, usize), QMatrix> {
        &self.holonomy
    }

    pub fn has_holonomy(&self) -> bool {
        !self.holonomy.is_empty()
    }

    /// Transport along the sorted edge `(a, b)`; `None` means identity.
    pub fn transport(&self, a: usize, b: usize) -> Option<&QMatrix> {
        self.holonomy.get(&(a, b))
    }

    pub fn without_holonomy(&self) -> Self {
        let mut k = self.clone();
        k.holonomy.clear();
        k
    }

    /// Boundary of the signed sum of top simplices, as a map on `(dim-1)`-simplices.
    fn boundary_of_top(&self, signs: &[i64]) -> BTreeMap<Vec<usize>, i64> {
        let mut acc: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
        let n = self.dim();
        if n == 0 {
            return acc;
        }
        for (s, &sign) in self.simplices(n).iter().zip(signs) {
            for (i, f) in faces_of(s).enumerate() {
                let inc = if i % 2 == 0 { 1 } else { -1 };
                *acc.entry(f).or_insert(0) += sign * inc;
            }
        }
        acc.retain(|_, v| *v != 0);
        acc
    }

    /// Attach signs (aligned with the sorted top simplices) forming a
    /// fundamental cycle.
    pub fn with_orientation(mut self, signs: Vec<i64>) -> Result<Self> {
        let n = self.dim();
        if signs.len() != self.count(n) {
            return Err(Error::NotOriented(format!("{} signs for {} top simplices", signs.len(), self.count(n))));
        }
        if signs.iter().any(|s| s.abs() != 1) {
            return Err(Error::NotOriented("orientation signs must be +1 or -1".into()));
        }
        if let Some((f, _)) = self.boundary_of_top(&signs).into_iter().next() {
            return Err(Error::NotOriented(format!("signed top simplices have boundary on {f:?}")));
        }
        self.orientation = Some(signs);
        Ok(self)
    }

    /// Find a fundamental cycle by propagating signs across shared facets.
    pub fn oriented(self) -> Result<Self> {
        let n = self.dim();
        let tops = self.simplices(n).to_vec();
        if tops.is_empty() {
            return Err(Error::NotOriented("no top simplices".into()));
        }
        if n == 0 {
            let signs = vec![1; tops.len()];
            return self.with_orientation(signs);
        }
        let mut cofaces: HashMap<Vec<usize>, Vec<(usize, i64)>> = HashMap::new();
        for (t, s) in tops.iter().enumerate() {
            for (i, f) in faces_of(s).enumerate() {
                cofaces.entry(f).or_default().push((t, if i % 2 == 0 { 1 } else { -1 }));
            }
        }
        if let Some((f, c)) = cofaces.iter().find(|(_, c)| c.len() != 2) {
            return Err(Error::NotOriented(format!("facet {f:?} lies in {} top simplices", c.len())));
        }
        let mut signs = vec![0i64; tops.len()];
        for start in 0..tops.len() {
            if signs[start] != 0 {
                continue;
            }
            signs[start] = 1;
            let mut queue = VecDeque::from([start]);
            while let Some(t) = queue.pop_front() {
                for (i, f) in faces_of(&tops[t]).enumerate() {
                    let inc = if i % 2 == 0 { 1 } else { -1 };
                    for &(u, inc_u) in &cofaces[&f] {
                        if u == t {
                            continue;
                        }
                        let want = -signs[t] * inc * inc_u;
                        if signs[u] == 0 {
                            signs[u] = want;
                            queue.push_back(u);
                        } else if signs[u] != want {
                            return Err(Error::NotOriented("complex is not orientable".into()));
                        }
                    }
                }
            }
        }
        self.with_orientation(signs)
    }

    /// Attach edge transports and check flatness on every triangle:
    /// `hol(bc) hol(ab) = hol(ac)`.
    pub fn with_holonomy(mut self, holonomy: BTreeMap<(usize, usize), QMatrix>) -> Result<Self> {
        let g = holonomy.values().next().map_or(0, QMatrix::nrows);
        for (&(a, b), m) in &holonomy {
            if a >= b || !self.contains(&[a, b]) {
                return Err(Error::InvalidInput(format!("holonomy on ({a}, {b}) which is not a sorted edge")));
            }
            if m.shape() != (g, g) {
                return Err(Error::DimensionError { expected: g * g, found: m.nrows() * m.ncols() });
            }
            if m.determinant().is_zero() {
                return Err(Error::InvalidInput(format!("holonomy on ({a}, {b}) is singular")));
            }
        }
        self.holonomy = holonomy;
        if let Some(t) = self.first_curved_triangle() {
            return Err(Error::NotFlat { simplex: t });
        }
        Ok(self)
    }

    fn transport_or_identity(&self, a: usize, b: usize, g: usize) -> QMatrix {
        self.transport(a, b).cloned().unwrap_or_else(|| QMatrix::identity(g))
    }

    fn first_curved_triangle(&self) -> Option<Vec<usize>> {
        let g = self.holonomy.values().next()?.nrows();
        self.simplices(2)
            .iter()
            .find(|t| {
                let (a, b, c) = (t[0], t[1], t[2]);
                self.transport_or_identity(b, c, g).mul(&self.transport_or_identity(a, b, g))
                    != self.transport_or_identity(a, c, g)
            })
            .cloned()
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.simplices.iter().flatten().all(|s| other.contains(s))
    }

    pub fn union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let dims = self.dim().max(other.dim());
        let lists = (0..=dims)
            .map(|d| {
                let set: BTreeSet<Vec<usize>> = self.simplices(d).iter().chain(other.simplices(d)).cloned().collect();
                set.into_iter().collect()
            })
            .collect();
        Self::assemble(self.vertex_count.max(other.vertex_count), lists)
    }

    pub fn intersection(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let dims = self.dim().min(other.dim());
        let mut lists: Vec<Vec<Vec<usize>>> =
            (0..=dims).map(|d| self.simplices(d).iter().filter(|s| other.contains(s)).cloned().collect()).collect();
        while lists.len() > 1 && lists.last().is_some_and(Vec::is_empty) {
            lists.pop();
        }
        Self::assemble(self.vertex_count.min(other.vertex_count), lists)
    }

    pub fn same_simplices(&self, other: &SimplicialComplex) -> bool {
        self.is_subcomplex_of(other) && other.is_subcomplex_of(self)
    }
}

/// `{"vertices": n, "simplices": {"0": [[0], ...], "1": [[0, 1], ...]},
///   "orientation": [1, -1, ...], "holonomy": [[[a, b], [["p/q", ...], ...]], ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeshFile {
    pub vertices: usize,
    pub simplices: BTreeMap<String, Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientation: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub holonomy: Vec<([usize; 2], Vec<Vec<String>>)>,
}

impl MeshFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn into_complex(self) -> Result<SimplicialComplex> {
        let mut by_dim: Vec<Vec<Vec<usize>>> = Vec::new();
        for (key, list) in &self.simplices {
            let d: usize = key.parse().map_err(|_| Error::Parse(format!("bad dimension key {key:?}")))?;
            if by_dim.len() <= d {
                by_dim.resize_with(d + 1, Vec::new);
            }
            by_dim[d] = list.clone();
        }
        // orientation follows the file's listing order of top simplices
        let top_listing: Vec<Vec<usize>> = by_dim
            .last()
            .map(|l| {
                l.iter()
                    .map(|s| {
                        let mut t = s.clone();
                        t.sort_unstable();
                        t
                    })
                    .collect()
            })
            .unwrap_or_default();
        let mut k = SimplicialComplex::from_simplices(self.vertices, by_dim)?;
        if let Some(signs) = self.orientation {
            if signs.len() != top_listing.len() {
                return Err(Error::NotOriented(format!("{} signs for {} top simplices", signs.len(), top_listing.len())));
            }
            let mut aligned = vec![0; signs.len()];
            for (s, sign) in top_listing.iter().zip(&signs) {
                let i = k.index_of(s).ok_or_else(|| Error::Parse(format!("unknown simplex {s:?}")))?;
                aligned[i] = *sign;
            }
            k = k.with_orientation(aligned)?;
        }
        if !self.holonomy.is_empty() {
            let mut map = BTreeMap::new();
            for ([a, b], rows) in &self.holonomy {
                let parsed = rows
                    .iter()
                    .map(|r| r.iter().map(|x| parse_q(x)).collect::<Result<Vec<Q>>>())
                    .collect::<Result<Vec<_>>>()?;
                let n = parsed.len();
                if parsed.iter().any(|r| r.len() != n) {
                    return Err(Error::Parse(format!("holonomy on ({a}, {b}) is not square")));
                }
                let m = QMatrix::from_dense(n, n, &parsed);
                // a reversed edge carries the inverse transport
                let (key, m) = if a < b {
                    ((*a, *b), m)
                } else {
                    ((*b, *a), m.inverse().ok_or_else(|| Error::InvalidInput("singular holonomy".into()))?)
                };
                map.insert(key, m);
            }
            k = k.with_holonomy(map)?;
        }
        Ok(k)
    }

    pub fn from_complex(k: &SimplicialComplex) -> Self {
        let simplices = (0..=k.dim()).map(|d| (d.to_string(), k.simplices(d).to_vec())).collect();
        let holonomy = k
            .holonomy()
            .iter()
            .map(|(&(a, b), m)| ([a, b], m.to_dense().iter().map(|r| r.iter().map(format_q).collect()).collect()))
            .collect();
        MeshFile { vertices: k.vertex_count(), simplices, orientation: k.orientation().map(<[i64]>::to_vec), holonomy }
    }
}

/// Names of the built-in meshes.
pub fn bundled_mesh_names() -> Vec<&'static str> {
    vec!["point", "interval", "triangle_circle", "hexagon_circle", "sphere_octahedron", "torus"]
}

fn circle(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| vec![i, (i + 1) % n]).collect()
}

fn octahedron_faces() -> Vec<Vec<usize>> {
    // 0/1 = +-x, 2/3 = +-y, 4/5 = +-z
    let mut faces = Vec::new();
    for a in [0, 1] {
        for b in [2, 3] {
            for c in [4, 5] {
                faces.push(vec![a, b, c]);
            }
        }
    }
    faces
}

/// Two triangles per square of the periodic 3x3 grid; vertex `(i, j)` is `3i + j`.
fn torus_faces(rows: impl Iterator<Item = usize>) -> Vec<Vec<usize>> {
    let v = |i: usize, j: usize| 3 * (i % 3) + (j % 3);
    let mut faces = Vec::new();
    for i in rows {
        for j in 0..3 {
            faces.push(vec![v(i, j), v(i + 1, j), v(i + 1, j + 1)]);
            faces.push(vec![v(i, j), v(i, j + 1), v(i + 1, j + 1)]);
        }
    }
    faces
}

/// A built-in mesh; closed ones come with a fundamental cycle.
pub fn bundled_mesh(name: &str) -> Result<SimplicialComplex> {
    let k = match name {
        "point" => SimplicialComplex::from_facets(1, &[vec![0]])?.oriented()?,
        "interval" => SimplicialComplex::from_facets(2, &[vec![0, 1]])?,
        "triangle_circle" | "circle" => SimplicialComplex::from_facets(3, &circle(3))?.oriented()?,
        "hexagon_circle" => SimplicialComplex::from_facets(6, &circle(6))?.oriented()?,
        "sphere_octahedron" | "octahedron_sphere" | "sphere" => {
            SimplicialComplex::from_facets(6, &octahedron_faces())?.oriented()?
        }
        "torus" => SimplicialComplex::from_facets(9, &torus_faces(0..3))?.oriented()?,
        _ => return Err(Error::NotFound(format!("unknown mesh {name:?}"))),
    };
    Ok(k)
}

/// Default two-set cover of a bundled mesh for Mayer–Vietoris.
pub fn bundled_cover(name: &str) -> Result<(SimplicialComplex, SimplicialComplex)> {
    let pair = match name {
        "triangle_circle" | "circle" => (
            SimplicialComplex::from_facets(3, &[vec![0, 1], vec![1, 2]])?,
            SimplicialComplex::from_facets(3, &[vec![0, 2]])?,
        ),
        "hexagon_circle" => (
            SimplicialComplex::from_facets(6, &[vec![0, 1], vec![1, 2], vec![2, 3]])?,
            SimplicialComplex::from_facets(6, &[vec![3, 4], vec![4, 5], vec![0, 5]])?,
        ),
        "sphere_octahedron" | "octahedron_sphere" | "sphere" => {
            let faces = octahedron_faces();
            let (upper, lower): (Vec<_>, Vec<_>) = faces.into_iter().partition(|f| f.contains(&4));
            (SimplicialComplex::from_facets(6, &upper)?, SimplicialComplex::from_facets(6, &lower)?)
        }
        "torus" => (
            SimplicialComplex::from_facets(9, &torus_faces(0..1))?,
            SimplicialComplex::from_facets(9, &torus_faces(1..3))?,
        ),
        _ => return Err(Error::NotFound(format!("no bundled cover for {name:?}"))),
    };
    Ok(pair)
}

/// Rotation of `so3` about its third axis by the angle with cosine 3/5,
/// a rational automorphism used for twisted examples.
pub fn rational_rotation() -> QMatrix {
    let r = |n: i64| Q::new(n.into(), 5.into());
    QMatrix::from_dense(
        3,
        3,
        &[vec![r(3), r(-4), Q::zero()], vec![r(4), r(3), Q::zero()], vec![Q::zero(), Q::zero(), Q::one()]],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_counts() {
        assert_eq!(bundled_mesh("triangle_circle").unwrap().counts(), vec![3, 3]);
        assert_eq!(bundled_mesh("hexagon_circle").unwrap().counts(), vec![6, 6]);
        assert_eq!(bundled_mesh("sphere_octahedron").unwrap().counts(), vec![6, 12, 8]);
        assert_eq!(bundled_mesh("torus").unwrap().counts(), vec![9, 27, 18]);
        assert_eq!(bundled_mesh("point").unwrap().counts(), vec![1]);
        assert!(bundled_mesh("interval").unwrap().orientation().is_none());
    }

    #[test]
    fn closure_is_enforced() {
        let err = SimplicialComplex::from_simplices(3, vec![vec![vec![0], vec![1]], vec![vec![1, 2]]]);
        assert!(matches!(err, Err(Error::InvalidInput(_))));
    }

    #[test]
    fn orientation_checks() {
        let k = SimplicialComplex::from_facets(3, &circle(3)).unwrap();
        // sorted edges 01, 02, 12: cycle is 01 - 02 + 12
        assert!(k.clone().with_orientation(vec![1, -1, 1]).is_ok());
        assert!(matches!(k.with_orientation(vec![1, 1, 1]), Err(Error::NotOriented(_))));
        let interval = SimplicialComplex::from_facets(2, &[vec![0, 1]]).unwrap();
        assert!(matches!(interval.oriented(), Err(Error::NotOriented(_))));
    }

    #[test]
    fn flatness_is_enforced() {
        let tri = SimplicialComplex::from_facets(3, &[vec![0, 1, 2]]).unwrap();
        let mut hol = BTreeMap::new();
        hol.insert((0, 1), rational_rotation());
        assert!(matches!(tri.clone().with_holonomy(hol.clone()), Err(Error::NotFlat { .. })));
        hol.insert((0, 2), rational_rotation());
        assert!(tri.with_holonomy(hol).is_ok());
    }

    #[test]
    fn covers_are_covers() {
        for name in ["triangle_circle", "hexagon_circle", "sphere_octahedron", "torus"] {
            let k = bundled_mesh(name).unwrap();
            let (u, v) = bundled_cover(name).unwrap();
            assert!(u.union(&v).same_simplices(&k), "{name}");
        }
    }

    #[test]
    fn mesh_file_round_trip() {
        for name in bundled_mesh_names() {
            let k = bundled_mesh(name).unwrap();
            let file = MeshFile::from_complex(&k);
            let back = MeshFile::parse(&file.to_json()).unwrap().into_complex().unwrap();
            assert_eq!(back, k, "{name}");
        }
    }
}
