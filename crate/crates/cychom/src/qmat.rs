//! Exact rational linear algebra on sparse matrices.
//!
//! Everything in the engine reduces to ranks, kernels, and solvability
//! questions over the rationals, so this module provides the one arithmetic
//! backend used everywhere else: arbitrary-precision rational scalars
//! ([`Q`]), sparse row-major matrices ([`QMat`]), Gaussian elimination,
//! kernel bases, and consistency-checked linear solves. All operations are
//! exact; no floating point is involved anywhere.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar used throughout the engine.
pub type Q = BigRational;

/// Builds a rational from an integer.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Renders a rational as `p/q` (or just `p` when the denominator is one).
pub fn format_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses a rational from `p`, `-p`, or `p/q` notation.
pub fn parse_q(s: &str) -> Result<Q, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(num).map_err(|e| format!("bad numerator {num:?}: {e}"))?;
    let d = BigInt::from_str(den).map_err(|e| format!("bad denominator {den:?}: {e}"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Q::new(n, d))
}

/// Sparse matrix over the rationals, stored as sorted `(column, value)` rows.
///
/// Zero entries are never stored; rows keep their entries sorted by column
/// index. The representation favors the matrices that arise from simplicial
/// operators, which have very few entries per row.
#[derive(Clone, PartialEq, Eq)]
pub struct QMat {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, Q)>>,
}

impl fmt::Debug for QMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMat {}x{} [", self.rows, self.cols)?;
        for row in &self.data {
            let cells: Vec<String> = row
                .iter()
                .map(|(j, v)| format!("{}:{}", j, format_q(v)))
                .collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

impl QMat {
    /// Zero matrix of the given shape.
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMat {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    /// Identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = QMat::zero(n, n);
        for i in 0..n {
            m.data[i].push((i, Q::one()));
        }
        m
    }

    /// Builds a matrix from `(row, col, value)` triplets; later triplets for
    /// the same cell are summed.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, Q)>,
    ) -> Self {
        let mut m = QMat::zero(rows, cols);
        for (i, j, v) in triplets {
            m.add_to(i, j, v);
        }
        m
    }

    /// Builds a matrix from dense row data.
    pub fn from_dense(rows: Vec<Vec<Q>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let mut m = QMat::zero(r, c);
        for (i, row) in rows.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                if !v.is_zero() {
                    m.data[i].push((j, v));
                }
            }
        }
        m
    }

    /// Builds a matrix entry-wise from a closure.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Q) -> Self {
        let mut m = QMat::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                let v = f(i, j);
                if !v.is_zero() {
                    m.data[i].push((j, v));
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Number of stored (nonzero) entries.
    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    /// Entry accessor (zero for unstored cells).
    pub fn get(&self, i: usize, j: usize) -> Q {
        assert!(i < self.rows && j < self.cols, "index out of range");
        match self.data[i].binary_search_by_key(&j, |&(c, _)| c) {
            Ok(k) => self.data[i][k].1.clone(),
            Err(_) => Q::zero(),
        }
    }

    /// Adds `v` to entry `(i, j)`, dropping the cell if it becomes zero.
    pub fn add_to(&mut self, i: usize, j: usize, v: Q) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        if v.is_zero() {
            return;
        }
        match self.data[i].binary_search_by_key(&j, |&(c, _)| c) {
            Ok(k) => {
                let sum = &self.data[i][k].1 + &v;
                if sum.is_zero() {
                    self.data[i].remove(k);
                } else {
                    self.data[i][k].1 = sum;
                }
            }
            Err(k) => self.data[i].insert(k, (j, v)),
        }
    }

    /// Overwrites entry `(i, j)`.
    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        match self.data[i].binary_search_by_key(&j, |&(c, _)| c) {
            Ok(k) => {
                if v.is_zero() {
                    self.data[i].remove(k);
                } else {
                    self.data[i][k].1 = v;
                }
            }
            Err(k) => {
                if !v.is_zero() {
                    self.data[i].insert(k, (j, v));
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    /// Iterates over stored entries as `(row, col, value)`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &Q)> + '_ {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn transpose(&self) -> QMat {
        let mut m = QMat::zero(self.cols, self.rows);
        for (i, j, v) in self.iter() {
            m.data[j].push((i, v.clone()));
        }
        for row in &mut m.data {
            row.sort_by_key(|&(c, _)| c);
        }
        m
    }

    pub fn neg(&self) -> QMat {
        let mut m = self.clone();
        for row in &mut m.data {
            for (_, v) in row.iter_mut() {
                *v = -v.clone();
            }
        }
        m
    }

    pub fn scale(&self, s: &Q) -> QMat {
        if s.is_zero() {
            return QMat::zero(self.rows, self.cols);
        }
        let mut m = self.clone();
        for row in &mut m.data {
            for (_, v) in row.iter_mut() {
                *v = &*v * s;
            }
        }
        m
    }

    pub fn add(&self, other: &QMat) -> QMat {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch in add"
        );
        let mut m = self.clone();
        for (i, j, v) in other.iter() {
            m.add_to(i, j, v.clone());
        }
        m
    }

    pub fn sub(&self, other: &QMat) -> QMat {
        self.add(&other.neg())
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &QMat) -> QMat {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let mut m = QMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            // Accumulate the sparse combination of rows of `other`.
            let mut acc: Vec<(usize, Q)> = Vec::new();
            for (k, a) in &self.data[i] {
                for (j, b) in &other.data[*k] {
                    let term = a * b;
                    match acc.binary_search_by_key(j, |&(c, _)| c) {
                        Ok(p) => acc[p].1 += term,
                        Err(p) => acc.insert(p, (*j, term)),
                    }
                }
            }
            acc.retain(|(_, v)| !v.is_zero());
            m.data[i] = acc;
        }
        m
    }

    /// Matrix–vector product.
    pub fn mul_vec(&self, x: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, x.len(), "shape mismatch in mul_vec");
        let mut out = vec![Q::zero(); self.rows];
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                out[i] += v * &x[*j];
            }
        }
        out
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &QMat) -> QMat {
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        let mut m = QMat::zero(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            m.data[i] = self.data[i].clone();
            for (j, v) in &other.data[i] {
                m.data[i].push((self.cols + j, v.clone()));
            }
        }
        m
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &QMat) -> QMat {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut m = QMat::zero(self.rows + other.rows, self.cols);
        m.data[..self.rows].clone_from_slice(&self.data);
        m.data[self.rows..].clone_from_slice(&other.data);
        m
    }

    /// Assembles a block matrix from a grid of optional blocks.
    ///
    /// `row_dims`/`col_dims` give the block sizes; `blocks` maps grid cells to
    /// matrices (absent cells are zero). Shapes are checked exactly.
    pub fn block(
        row_dims: &[usize],
        col_dims: &[usize],
        blocks: &[((usize, usize), &QMat)],
    ) -> QMat {
        let rows: usize = row_dims.iter().sum();
        let cols: usize = col_dims.iter().sum();
        let row_off: Vec<usize> = std::iter::once(0)
            .chain(row_dims.iter().scan(0, |s, d| {
                *s += d;
                Some(*s)
            }))
            .collect();
        let col_off: Vec<usize> = std::iter::once(0)
            .chain(col_dims.iter().scan(0, |s, d| {
                *s += d;
                Some(*s)
            }))
            .collect();
        let mut m = QMat::zero(rows, cols);
        for ((bi, bj), blk) in blocks {
            assert_eq!(
                blk.rows, row_dims[*bi],
                "block row dim mismatch at ({bi},{bj})"
            );
            assert_eq!(
                blk.cols, col_dims[*bj],
                "block col dim mismatch at ({bi},{bj})"
            );
            for (i, j, v) in blk.iter() {
                m.add_to(row_off[*bi] + i, col_off[*bj] + j, v.clone());
            }
        }
        m
    }

    /// Kronecker product `self ⊗ other`, with row-major index pairing:
    /// entry `((i·p + k), (j·q + l)) = self[i,j] * other[k,l]` where `other`
    /// is `p×q`. Matches the convention `(A ⊗ B) vec(X) = vec(A · X · Bᵀ)`
    /// for row-major `vec`, so `A ⊗ B` acts factor-wise on tensors indexed
    /// `(first, second)`.
    pub fn kronecker(&self, other: &QMat) -> QMat {
        let (p, q) = (other.rows, other.cols);
        let mut m = QMat::zero(self.rows * p, self.cols * q);
        for (i, j, a) in self.iter() {
            for (k, l, b) in other.iter() {
                m.data[i * p + k].push((j * q + l, a * b));
            }
        }
        for row in &mut m.data {
            row.sort_by_key(|&(c, _)| c);
        }
        m
    }

    /// Dense copy, mostly for small-matrix tests and debugging.
    pub fn to_dense(&self) -> Vec<Vec<Q>> {
        let mut out = vec![vec![Q::zero(); self.cols]; self.rows];
        for (i, j, v) in self.iter() {
            out[i][j] = v.clone();
        }
        out
    }

    /// Row echelon data: reduced rows and their pivot columns.
    fn echelon(&self) -> Echelon {
        let mut work: Vec<Vec<(usize, Q)>> = self
            .data
            .iter()
            .filter(|r| !r.is_empty())
            .cloned()
            .collect();
        let mut reduced: Vec<Vec<(usize, Q)>> = Vec::new();
        let mut pivots: Vec<usize> = Vec::new();
        while !work.is_empty() {
            // Pivot on the smallest leading column; among candidates prefer
            // the sparsest row, then the one with the smallest pivot height,
            // to keep fill-in and entry growth down.
            let lead = work.iter().map(|r| r[0].0).min().unwrap();
            let mut best: Option<usize> = None;
            for (idx, r) in work.iter().enumerate() {
                if r[0].0 == lead {
                    let better = match best {
                        None => true,
                        Some(b) => {
                            let (lb, lr) = (work[b].len(), r.len());
                            lr < lb
                                || (lr == lb && entry_height(&r[0].1) < entry_height(&work[b][0].1))
                        }
                    };
                    if better {
                        best = Some(idx);
                    }
                }
            }
            let mut pivot_row = work.swap_remove(best.unwrap());
            let inv = pivot_row[0].1.recip();
            for (_, v) in pivot_row.iter_mut() {
                *v = &*v * &inv;
            }
            for r in &mut work {
                if r[0].0 == lead {
                    let factor = r[0].1.clone();
                    *r = row_axpy(r, &pivot_row, &-factor);
                }
            }
            work.retain(|r| !r.is_empty());
            // Back-substitute into previously finished rows for full RREF.
            for r in &mut reduced {
                if let Ok(k) = r.binary_search_by_key(&lead, |&(c, _)| c) {
                    let factor = r[k].1.clone();
                    *r = row_axpy(r, &pivot_row, &-factor);
                }
            }
            reduced.push(pivot_row);
            pivots.push(lead);
        }
        Echelon {
            cols: self.cols,
            rows: reduced,
            pivots,
        }
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Basis of the right kernel `{x : self · x = 0}`.
    ///
    /// The rank–nullity identity `rank + nullity = cols` holds by
    /// construction and is asserted in debug builds, together with an exact
    /// check that every basis vector is annihilated.
    pub fn kernel_basis(&self) -> Vec<Vec<Q>> {
        let ech = self.echelon();
        let mut pivot_of_col = vec![usize::MAX; self.cols];
        for (r, &c) in ech.pivots.iter().enumerate() {
            pivot_of_col[c] = r;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free] != usize::MAX {
                continue;
            }
            let mut v = vec![Q::zero(); self.cols];
            v[free] = Q::one();
            for (r, &pc) in ech.pivots.iter().enumerate() {
                if let Ok(k) = ech.rows[r].binary_search_by_key(&free, |&(c, _)| c) {
                    v[pc] = -ech.rows[r][k].1.clone();
                }
            }
            debug_assert!(
                self.mul_vec(&v).iter().all(Q::is_zero),
                "kernel vector check"
            );
            basis.push(v);
        }
        debug_assert_eq!(ech.pivots.len() + basis.len(), self.cols, "rank-nullity");
        basis
    }

    /// Solves `self · x = b` exactly, returning `None` when `b` is outside
    /// the column space.
    pub fn solve(&self, b: &[Q]) -> Option<Vec<Q>> {
        assert_eq!(self.rows, b.len(), "shape mismatch in solve");
        let rhs = QMat::from_fn(self.rows, 1, |i, _| b[i].clone());
        let aug = self.hstack(&rhs).echelon();
        let mut x = vec![Q::zero(); self.cols];
        for (r, &c) in aug.pivots.iter().enumerate() {
            if c == self.cols {
                return None; // a pivot in the augmented column: inconsistent
            }
            if let Ok(k) = aug.rows[r].binary_search_by_key(&self.cols, |&(cc, _)| cc) {
                x[c] = aug.rows[r][k].1.clone();
            }
        }
        debug_assert_eq!(self.mul_vec(&x), b.to_vec(), "solve verification");
        Some(x)
    }

    /// Returns matrices `(proj, sections)` describing the quotient of the
    /// ambient column space `k^cols`... see [`cokernel_projection`].
    pub fn column_space_rank(&self) -> usize {
        self.rank()
    }
}

struct Echelon {
    #[allow(dead_code)]
    cols: usize,
    rows: Vec<Vec<(usize, Q)>>,
    pivots: Vec<usize>,
}

/// `target + factor * source` on sparse rows.
fn row_axpy(target: &[(usize, Q)], source: &[(usize, Q)], factor: &Q) -> Vec<(usize, Q)> {
    let mut out = Vec::with_capacity(target.len() + source.len());
    let (mut a, mut b) = (0, 0);
    while a < target.len() || b < source.len() {
        let ca = target.get(a).map(|&(c, _)| c);
        let cb = source.get(b).map(|&(c, _)| c);
        match (ca, cb) {
            (Some(x), Some(y)) if x == y => {
                let v = &target[a].1 + &(factor * &source[b].1);
                if !v.is_zero() {
                    out.push((x, v));
                }
                a += 1;
                b += 1;
            }
            (Some(x), Some(y)) if x < y => {
                out.push(target[a].clone());
                a += 1;
                let _ = x;
            }
            (Some(_), Some(y)) => {
                let v = factor * &source[b].1;
                if !v.is_zero() {
                    out.push((y, v));
                }
                b += 1;
            }
            (Some(_), None) => {
                out.push(target[a].clone());
                a += 1;
            }
            (None, Some(y)) => {
                let v = factor * &source[b].1;
                if !v.is_zero() {
                    out.push((y, v));
                }
                b += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Crude size measure used only for pivot selection.
fn entry_height(x: &Q) -> usize {
    x.numer().abs().to_string().len() + x.denom().to_string().len()
}

/// Describes `k^dim / column-space(gens)` by a projection onto coordinates.
///
/// Returns `(proj, incl)` where `proj: k^dim -> k^q` is surjective with
/// kernel exactly the column space of `gens`, and `incl: k^q -> k^dim` picks
/// representative unit vectors, so `proj · incl = id`. Used to build quotient
/// complexes with exact induced differentials.
pub fn cokernel_projection(dim: usize, gens: &[Vec<Q>]) -> (QMat, QMat) {
    for g in gens {
        assert_eq!(g.len(), dim, "generator dimension mismatch");
    }
    // Columns of `m` span the subspace to kill.
    let m = QMat::from_fn(dim, gens.len(), |i, j| gens[j][i].clone());
    // Reduce the transpose so pivots identify the dependent coordinates.
    let ech = m.transpose().echelon();
    let pivot_cols: Vec<usize> = ech.pivots.clone();
    let is_pivot = {
        let mut flags = vec![false; dim];
        for &c in &pivot_cols {
            flags[c] = true;
        }
        flags
    };
    let free_cols: Vec<usize> = (0..dim).filter(|c| !is_pivot[*c]).collect();
    let q = free_cols.len();
    // proj sends e_c (c free) to the corresponding quotient coordinate and
    // rewrites e_p (p pivot) via the echelon relation p = -sum(free terms).
    let mut proj = QMat::zero(q, dim);
    for (qi_, &c) in free_cols.iter().enumerate() {
        proj.set(qi_, c, Q::one());
    }
    for (r, &p) in pivot_cols.iter().enumerate() {
        // Echelon row r: e_p + sum_{c free} coeff_c e_c = 0 in the quotient.
        for (c, v) in &ech.rows[r] {
            if *c == p {
                continue;
            }
            let qi_ = free_cols
                .binary_search(c)
                .expect("non-pivot echelon column");
            proj.set(qi_, p, -v.clone());
        }
    }
    let mut incl = QMat::zero(dim, q);
    for (qi_, &c) in free_cols.iter().enumerate() {
        incl.set(c, qi_, Q::one());
    }
    debug_assert!(
        proj.mul(&incl) == QMat::identity(q),
        "projection section check"
    );
    for g in gens {
        debug_assert!(
            proj.mul_vec(g).iter().all(Q::is_zero),
            "quotient must kill the generators"
        );
    }
    (proj, incl)
}

/// Returns `(incl, corestrict)` for the subspace spanned by the kernel of
/// `m`: `incl: k^q -> k^dim` has the kernel vectors as columns, and any
/// vector `v` in the subspace satisfies `incl · corestrict(v) = v` where
/// `corestrict` solves exactly. Provided as a convenience wrapper used by
/// subcomplex constructions.
pub fn kernel_inclusion(m: &QMat) -> QMat {
    let basis = m.kernel_basis();
    QMat::from_fn(m.cols(), basis.len(), |i, j| basis[j][i].clone())
}
