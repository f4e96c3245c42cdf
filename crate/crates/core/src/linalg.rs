//! Exact sparse linear algebra over the rationals.
//!
//! Matrices are stored row-wise as sorted `(column, value)` lists with no
//! explicit zeros. All eliminations are fraction-exact; rank computations
//! split the matrix into independent blocks (connected components of its
//! sparsity pattern) and eliminate the blocks independently.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exec::Execution;

pub type Q = BigRational;

pub type SparseRow = Vec<(usize, Q)>;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qr(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Parse `"p/q"` or `"p"`.
pub fn parse_q(s: &str) -> Result<Q> {
    let t = s.trim();
    let parsed = match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
            let d: BigInt = d.trim().parse().map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Q::new(n, d)
        }
        None => {
            let n: BigInt = t.parse().map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
            Q::from_integer(n)
        }
    };
    Ok(parsed)
}

pub fn format_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn q_to_f64(x: &Q) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

pub fn zero_vec(n: usize) -> Vec<Q> {
    vec![Q::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vec<Q> {
    let mut v = zero_vec(n);
    v[i] = Q::one();
    v
}

pub fn is_zero_vec(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add_vec(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec(s: &Q, a: &[Q]) -> Vec<Q> {
    a.iter().map(|x| s * x).collect()
}

fn dense_to_sparse(v: &[Q]) -> SparseRow {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

/// `a - f * b` for sorted sparse rows.
fn row_axpy(a: &[(usize, Q)], f: &Q, b: &[(usize, Q)]) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, -(f * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - f * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn row_scale(row: &mut SparseRow, s: &Q) {
    for (_, v) in row.iter_mut() {
        *v *= s;
    }
}

fn row_get(row: &[(usize, Q)], col: usize) -> Option<&Q> {
    row.binary_search_by_key(&col, |(c, _)| *c).ok().map(|i| &row[i].1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseRow>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let data = (0..n).map(|i| vec![(i, Q::one())]).collect();
        QMatrix { rows: n, cols: n, data }
    }

    /// Build from `(row, col, value)` triplets; duplicates are summed.
    pub fn from_triplets<I>(rows: usize, cols: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Q)>,
    {
        let mut acc: Vec<BTreeMap<usize, Q>> = vec![BTreeMap::new(); rows];
        for (r, c, v) in entries {
            assert!(r < rows && c < cols, "triplet ({r},{c}) outside {rows}x{cols}");
            if v.is_zero() {
                continue;
            }
            let e = acc[r].entry(c).or_insert_with(Q::zero);
            *e += v;
        }
        let data = acc
            .into_iter()
            .map(|m| m.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        QMatrix { rows, cols, data }
    }

    pub fn from_dense(rows: usize, cols: usize, dense: &[Vec<Q>]) -> Self {
        assert_eq!(dense.len(), rows);
        let data = dense
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols);
                dense_to_sparse(r)
            })
            .collect();
        QMatrix { rows, cols, data }
    }

    pub fn from_columns(rows: usize, columns: &[Vec<Q>]) -> Self {
        let cols = columns.len();
        let entries = columns.iter().enumerate().flat_map(|(j, col)| {
            assert_eq!(col.len(), rows);
            col.iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(move |(i, v)| (i, j, v.clone()))
        });
        QMatrix::from_triplets(rows, cols, entries)
    }

    pub fn from_sparse_rows(cols: usize, data: Vec<SparseRow>) -> Self {
        QMatrix { rows: data.len(), cols, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn row(&self, i: usize) -> &[(usize, Q)] {
        &self.data[i]
    }

    pub fn get(&self, i: usize, j: usize) -> Q {
        row_get(&self.data[i], j).cloned().unwrap_or_else(Q::zero)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn column(&self, j: usize) -> Vec<Q> {
        self.data
            .iter()
            .map(|r| row_get(r, j).cloned().unwrap_or_else(Q::zero))
            .collect()
    }

    pub fn to_dense(&self) -> Vec<Vec<Q>> {
        self.data
            .iter()
            .map(|r| {
                let mut d = zero_vec(self.cols);
                for (c, v) in r {
                    d[*c] = v.clone();
                }
                d
            })
            .collect()
    }

    pub fn to_f64(&self) -> DMatrix<f64> {
        let mut m = DMatrix::zeros(self.rows, self.cols);
        for (i, r) in self.data.iter().enumerate() {
            for (j, v) in r {
                m[(i, *j)] = q_to_f64(v);
            }
        }
        m
    }

    pub fn transpose(&self) -> QMatrix {
        let mut data: Vec<SparseRow> = vec![Vec::new(); self.cols];
        for (i, r) in self.data.iter().enumerate() {
            for (j, v) in r {
                data[*j].push((i, v.clone()));
            }
        }
        QMatrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let data = self
            .data
            .iter()
            .map(|r| {
                let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
                for (k, a) in r {
                    for (j, b) in &other.data[*k] {
                        *acc.entry(*j).or_insert_with(Q::zero) += a * b;
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        QMatrix { rows: self.rows, cols: other.cols, data }
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len(), "shape mismatch in matrix-vector product");
        self.data
            .iter()
            .map(|r| r.iter().fold(Q::zero(), |acc, (j, a)| acc + a * &v[*j]))
            .collect()
    }

    pub fn add(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.shape(), other.shape());
        let minus_one = -Q::one();
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| row_axpy(a, &minus_one, b))
            .collect();
        QMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.shape(), other.shape());
        let one = Q::one();
        let data = self.data.iter().zip(&other.data).map(|(a, b)| row_axpy(a, &one, b)).collect();
        QMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &Q) -> QMatrix {
        if s.is_zero() {
            return QMatrix::zeros(self.rows, self.cols);
        }
        let mut out = self.clone();
        for r in &mut out.data {
            row_scale(r, s);
        }
        out
    }

    /// Kronecker product; index `(i, j)` of the result block-row `i_a * b.rows + i_b`.
    pub fn kron(&self, other: &QMatrix) -> QMatrix {
        let mut entries = Vec::with_capacity(self.nnz() * other.nnz());
        for (ia, ra) in self.data.iter().enumerate() {
            for (ja, a) in ra {
                for (ib, rb) in other.data.iter().enumerate() {
                    for (jb, b) in rb {
                        entries.push((ia * other.rows + ib, ja * other.cols + jb, a * b));
                    }
                }
            }
        }
        QMatrix::from_triplets(self.rows * other.rows, self.cols * other.cols, entries)
    }

    pub fn block_diag(blocks: &[&QMatrix]) -> QMatrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut data = Vec::with_capacity(rows);
        let mut off = 0;
        for b in blocks {
            for r in &b.data {
                data.push(r.iter().map(|(c, v)| (c + off, v.clone())).collect());
            }
            off += b.cols;
        }
        QMatrix { rows, cols, data }
    }

    pub fn hstack(blocks: &[&QMatrix]) -> QMatrix {
        let rows = blocks.first().map_or(0, |b| b.rows);
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut data: Vec<SparseRow> = vec![Vec::new(); rows];
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row mismatch");
            for (i, r) in b.data.iter().enumerate() {
                data[i].extend(r.iter().map(|(c, v)| (c + off, v.clone())));
            }
            off += b.cols;
        }
        QMatrix { rows, cols, data }
    }

    pub fn vstack(blocks: &[&QMatrix]) -> QMatrix {
        let cols = blocks.first().map_or(0, |b| b.cols);
        let mut data = Vec::new();
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            data.extend(b.data.iter().cloned());
        }
        QMatrix { rows: data.len(), cols, data }
    }

    pub fn select_rows(&self, idx: &[usize]) -> QMatrix {
        let data = idx.iter().map(|&i| self.data[i].clone()).collect();
        QMatrix { rows: idx.len(), cols: self.cols, data }
    }

    pub fn select_cols(&self, idx: &[usize]) -> QMatrix {
        let mut map = vec![usize::MAX; self.cols];
        for (n, &j) in idx.iter().enumerate() {
            map[j] = n;
        }
        let data = self
            .data
            .iter()
            .map(|r| {
                let mut out: SparseRow = r
                    .iter()
                    .filter(|(c, _)| map[*c] != usize::MAX)
                    .map(|(c, v)| (map[*c], v.clone()))
                    .collect();
                out.sort_by_key(|(c, _)| *c);
                out
            })
            .collect();
        QMatrix { rows: self.rows, cols: idx.len(), data }
    }

    /// Rank, eliminating independent sparsity blocks under `exec`.
    pub fn rank_with(&self, exec: Execution) -> usize {
        let blocks = self.row_blocks();
        if blocks.len() <= 1 {
            return echelon_rank(self.data.iter().filter(|r| !r.is_empty()).cloned().collect());
        }
        let work: Vec<Vec<SparseRow>> = blocks
            .into_iter()
            .map(|rows| rows.into_iter().map(|i| self.data[i].clone()).collect())
            .collect();
        exec.map(work, echelon_rank).into_iter().sum()
    }

    pub fn rank(&self) -> usize {
        self.rank_with(Execution::default())
    }

    /// Group the nonzero rows by connected component of the row/column
    /// incidence graph.
    fn row_blocks(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.cols).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for r in &self.data {
            if let Some((c0, _)) = r.first() {
                let a = find(&mut parent, *c0);
                for (c, _) in &r[1..] {
                    let b = find(&mut parent, *c);
                    if a != b {
                        parent[b] = a;
                    }
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, r) in self.data.iter().enumerate() {
            if let Some((c0, _)) = r.first() {
                let root = find(&mut parent, *c0);
                groups.entry(root).or_default().push(i);
            }
        }
        groups.into_values().collect()
    }

    /// Reduced row echelon form.
    pub fn rref(&self) -> Rref {
        let (pivots, _) = eliminate(self.data.clone(), self.cols);
        back_reduce(pivots, self.cols)
    }

    /// Basis of the right kernel, one vector per free column, in column order.
    pub fn kernel(&self) -> Vec<Vec<Q>> {
        let rref = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &rref.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = zero_vec(self.cols);
                v[f] = Q::one();
                for (row, &p) in rref.rows.iter().zip(&rref.pivots) {
                    if let Some(x) = row_get(row, f) {
                        v[p] = -x.clone();
                    }
                }
                v
            })
            .collect()
    }

    /// One solution of `self * x = b` (free variables set to zero), if any.
    pub fn solve(&self, b: &[Q]) -> Option<Vec<Q>> {
        self.solve_columns(&[b.to_vec()]).pop().flatten()
    }

    /// Solve against several right-hand sides with a single elimination.
    pub fn solve_columns(&self, rhs: &[Vec<Q>]) -> Vec<Option<Vec<Q>>> {
        let n = self.cols;
        let m = rhs.len();
        let aug: Vec<SparseRow> = (0..self.rows)
            .map(|i| {
                let mut r = self.data[i].clone();
                for (j, b) in rhs.iter().enumerate() {
                    assert_eq!(b.len(), self.rows, "rhs length mismatch");
                    if !b[i].is_zero() {
                        r.push((n + j, b[i].clone()));
                    }
                }
                r
            })
            .collect();
        let (pivots, residuals) = eliminate(aug, n);
        let rref = back_reduce(pivots, n);
        let mut consistent = vec![true; m];
        for r in &residuals {
            for (c, _) in r {
                consistent[c - n] = false;
            }
        }
        (0..m)
            .map(|j| {
                if !consistent[j] {
                    return None;
                }
                let mut x = zero_vec(n);
                for (row, &p) in rref.rows.iter().zip(&rref.pivots) {
                    if let Some(v) = row_get(row, n + j) {
                        x[p] = v.clone();
                    }
                }
                Some(x)
            })
            .collect()
    }

    /// Indices of a maximal independent set of columns, greedily in column order.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.rref().pivots
    }

    pub fn determinant(&self) -> Q {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let mut a = self.to_dense();
        let n = self.rows;
        let mut det = Q::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
                return Q::zero();
            };
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            let piv = a[c][c].clone();
            det *= &piv;
            for r in c + 1..n {
                if a[r][c].is_zero() {
                    continue;
                }
                let f = &a[r][c] / &piv;
                for k in c..n {
                    let t = &f * &a[c][k];
                    a[r][k] -= t;
                }
            }
        }
        det
    }

    /// Inverse of a square nonsingular matrix.
    pub fn inverse(&self) -> Option<QMatrix> {
        assert_eq!(self.rows, self.cols);
        let cols: Vec<Vec<Q>> = (0..self.rows).map(|i| unit_vec(self.rows, i)).collect();
        if self.rank() < self.rows {
            return None;
        }
        let sols: Option<Vec<Vec<Q>>> = self.solve_columns(&cols).into_iter().collect();
        sols.map(|s| QMatrix::from_columns(self.rows, &s))
    }
}

/// Reduced row echelon data: `rows[i]` has a leading one at `pivots[i]` and
/// zeros in every other pivot column (within the pivot range).
#[derive(Clone, Debug)]
pub struct Rref {
    pub pivots: Vec<usize>,
    pub rows: Vec<SparseRow>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

fn echelon_rank(rows: Vec<SparseRow>) -> usize {
    let cols = rows.iter().filter_map(|r| r.last().map(|(c, _)| c + 1)).max().unwrap_or(0);
    eliminate(rows, cols).0.len()
}

/// Forward elimination. Rows whose leading column is `< pivot_limit` become
/// pivot rows (normalized to a leading one); rows reduced to a leading column
/// `>= pivot_limit` are returned as residuals.
fn eliminate(mut rows: Vec<SparseRow>, pivot_limit: usize) -> (BTreeMap<usize, SparseRow>, Vec<SparseRow>) {
    rows.retain(|r| !r.is_empty());
    // shorter rows first keeps fill-in down
    rows.sort_by_key(Vec::len);
    let mut pivots: BTreeMap<usize, SparseRow> = BTreeMap::new();
    let mut residuals = Vec::new();
    for mut r in rows {
        loop {
            let Some((lead, val)) = r.first().cloned() else { break };
            if lead >= pivot_limit {
                residuals.push(r);
                break;
            }
            match pivots.get(&lead) {
                Some(p) => r = row_axpy(&r, &val, p),
                None => {
                    let inv = val.recip();
                    row_scale(&mut r, &inv);
                    pivots.insert(lead, r);
                    break;
                }
            }
        }
    }
    (pivots, residuals)
}

fn back_reduce(pivots: BTreeMap<usize, SparseRow>, pivot_limit: usize) -> Rref {
    let cols: Vec<usize> = pivots.keys().copied().collect();
    let mut rows: Vec<SparseRow> = pivots.into_values().collect();
    // eliminate above each pivot, bottom-up so each used row is already reduced
    for i in (0..rows.len()).rev() {
        let (head, tail) = rows.split_at_mut(i);
        let pivot_row = &tail[0];
        let pc = cols[i];
        debug_assert!(pc < pivot_limit);
        for r in head.iter_mut() {
            if let Some(f) = row_get(r, pc).cloned() {
                *r = row_axpy(r, &f, pivot_row);
            }
        }
    }
    Rref { pivots: cols, rows }
}

/// Square rational matrix inertia `(positive, negative, zero)` by symmetric
/// congruence elimination.
pub fn inertia(sym: &QMatrix) -> (usize, usize, usize) {
    assert_eq!(sym.nrows(), sym.ncols());
    let mut a = sym.to_dense();
    let mut n = a.len();
    let (mut pos, mut neg) = (0, 0);
    let mut zero = 0;
    while n > 0 {
        // find a nonzero diagonal entry
        let diag = (0..n).find(|&i| !a[i][i].is_zero());
        let p = match diag {
            Some(p) => p,
            None => {
                let off = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero());
                match off {
                    None => {
                        zero += n;
                        break;
                    }
                    Some((i, j)) => {
                        // row/col i += row/col j makes a_ii = 2 a_ij != 0
                        for k in 0..n {
                            let t = a[j][k].clone();
                            a[i][k] += t;
                        }
                        for k in 0..n {
                            let t = a[k][j].clone();
                            a[k][i] += t;
                        }
                        i
                    }
                }
            }
        };
        a.swap(p, n - 1);
        for row in a.iter_mut() {
            row.swap(p, n - 1);
        }
        let last = n - 1;
        let piv = a[last][last].clone();
        if piv.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in 0..last {
            if a[i][last].is_zero() {
                continue;
            }
            let f = &a[i][last] / &piv;
            for j in 0..last {
                let t = &f * &a[last][j];
                a[i][j] -= t;
            }
        }
        a.truncate(last);
        for row in a.iter_mut() {
            row.truncate(last);
        }
        n = last;
    }
    (pos, neg, zero)
}

/// Subspace of `Q^n` stored by its reduced row echelon basis, so equal
/// subspaces have identical representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    pivots: Vec<usize>,
    basis: Vec<Vec<Q>>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, pivots: Vec::new(), basis: Vec::new() }
    }

    pub fn whole(ambient_dim: usize) -> Self {
        Subspace::span(ambient_dim, &(0..ambient_dim).map(|i| unit_vec(ambient_dim, i)).collect::<Vec<_>>())
    }

    pub fn span(ambient_dim: usize, vectors: &[Vec<Q>]) -> Self {
        let m = QMatrix::from_dense(vectors.len(), ambient_dim, vectors);
        let rref = m.rref();
        let basis = rref
            .rows
            .iter()
            .map(|r| {
                let mut d = zero_vec(ambient_dim);
                for (c, v) in r {
                    d[*c] = v.clone();
                }
                d
            })
            .collect();
        Subspace { ambient_dim, pivots: rref.pivots, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Q>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its components along the basis, which vanishes exactly when
    /// `v` lies in the subspace. The result is zero in every pivot column.
    pub fn reduce(&self, v: &[Q]) -> Vec<Q> {
        let mut r = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, y) in r.iter_mut().zip(b) {
                *x -= &f * y;
            }
        }
        r
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis.iter().all(|b| other.contains(b))
    }

    /// Coordinates of a member vector in the echelon basis.
    pub fn coordinates(&self, v: &[Q]) -> Option<Vec<Q>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Columns not used as pivots; the unit vectors at these columns span a
    /// complement.
    pub fn complement_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient_dim).filter(|&c| !is_pivot[c]).collect()
    }
}
