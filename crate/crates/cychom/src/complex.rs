//! Finite graded complexes of ℚ-vector spaces.
//!
//! A [`ChainComplex`] stores the dimensions of degrees `0..=top` and the
//! connecting maps between consecutive degrees; [`Direction`] says whether
//! the differential lowers degree (chain) or raises it (cochain). The
//! constructor verifies `d ∘ d = 0` exactly. [`Bicomplex`] holds a finite
//! grid with horizontal and vertical differentials that anticommute, either
//! verified directly or produced from commuting squares by the alternating
//! column sign twist; [`Bicomplex::total_complex`] folds the grid into a
//! single complex along antidiagonals.

use thiserror::Error;

use crate::qmat::QMat;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("map between degrees {lower} and {upper} has shape {got_rows}x{got_cols}, expected {want_rows}x{want_cols}")]
    ShapeMismatch {
        lower: usize,
        upper: usize,
        got_rows: usize,
        got_cols: usize,
        want_rows: usize,
        want_cols: usize,
    },
    #[error("d·d != 0 between degrees {from} and {to}")]
    NotAComplex { from: usize, to: usize },
    #[error("horizontal and vertical differentials do not anticommute at position ({p}, {q})")]
    NotAnticommuting { p: usize, q: usize },
    #[error("chain map does not commute with the differentials at degree {degree}")]
    NotChainMap { degree: usize },
    #[error("complexes have different differential directions")]
    DirectionMismatch,
    #[error("degree {degree} out of range (top degree {top})")]
    DegreeOutOfRange { degree: usize, top: usize },
    #[error("vector has length {got}, expected {want} at degree {degree}")]
    VectorLength {
        degree: usize,
        got: usize,
        want: usize,
    },
}

/// Whether the differential lowers degree (chain complex) or raises it
/// (cochain complex).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// `d_k : X_k → X_{k−1}`.
    Down,
    /// `d^k : X_k → X_{k+1}`.
    Up,
}

/// A complex supported in degrees `0..=top()`. `maps[k]` connects degrees
/// `k` and `k+1`: for [`Direction::Down`] it is `X_{k+1} → X_k`, for
/// [`Direction::Up`] it is `X_k → X_{k+1}`. Degrees outside the stored
/// range are zero.
#[derive(Debug, Clone)]
pub struct ChainComplex {
    direction: Direction,
    dims: Vec<usize>,
    maps: Vec<QMat>,
}

impl ChainComplex {
    /// Builds and validates a complex: shapes must match `dims`, and
    /// consecutive maps must compose to zero.
    pub fn new(
        direction: Direction,
        dims: Vec<usize>,
        maps: Vec<QMat>,
    ) -> Result<Self, ComplexError> {
        assert!(!dims.is_empty(), "a complex needs at least one degree");
        assert_eq!(
            maps.len(),
            dims.len() - 1,
            "need exactly one connecting map per consecutive pair"
        );
        for (k, m) in maps.iter().enumerate() {
            let (want_rows, want_cols) = match direction {
                Direction::Down => (dims[k], dims[k + 1]),
                Direction::Up => (dims[k + 1], dims[k]),
            };
            if m.rows() != want_rows || m.cols() != want_cols {
                return Err(ComplexError::ShapeMismatch {
                    lower: k,
                    upper: k + 1,
                    got_rows: m.rows(),
                    got_cols: m.cols(),
                    want_rows,
                    want_cols,
                });
            }
        }
        for k in 0..maps.len().saturating_sub(1) {
            let square = match direction {
                Direction::Down => maps[k].mul(&maps[k + 1]),
                Direction::Up => maps[k + 1].mul(&maps[k]),
            };
            if !square.is_zero() {
                let (from, to) = match direction {
                    Direction::Down => (k + 2, k),
                    Direction::Up => (k, k + 2),
                };
                return Err(ComplexError::NotAComplex { from, to });
            }
        }
        Ok(ChainComplex {
            direction,
            dims,
            maps,
        })
    }

    /// The zero complex concentrated nowhere, supported in degrees `0..=top`.
    pub fn zero(direction: Direction, top: usize) -> Self {
        ChainComplex {
            direction,
            dims: vec![0; top + 1],
            maps: (0..top).map(|_| QMat::zero(0, 0)).collect(),
        }
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    /// Highest stored degree.
    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dim(&self, degree: usize) -> usize {
        self.dims.get(degree).copied().unwrap_or(0)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// The stored map between degrees `k` and `k+1` (direction decides
    /// which way it points).
    pub fn connecting_map(&self, k: usize) -> &QMat {
        &self.maps[k]
    }

    /// The differential leaving degree `k` (a zero map at the boundary of
    /// the stored range).
    pub fn outgoing(&self, k: usize) -> QMat {
        match self.direction {
            Direction::Down => {
                if k == 0 || k > self.top() {
                    QMat::zero(0, self.dim(k))
                } else {
                    self.maps[k - 1].clone()
                }
            }
            Direction::Up => {
                if k >= self.top() {
                    QMat::zero(0, self.dim(k))
                } else {
                    self.maps[k].clone()
                }
            }
        }
    }

    /// The differential arriving at degree `k` (a zero map at the boundary
    /// of the stored range).
    pub fn incoming(&self, k: usize) -> QMat {
        match self.direction {
            Direction::Down => {
                if k >= self.top() {
                    QMat::zero(self.dim(k), 0)
                } else {
                    self.maps[k].clone()
                }
            }
            Direction::Up => {
                if k == 0 || k > self.top() {
                    QMat::zero(self.dim(k), 0)
                } else {
                    self.maps[k - 1].clone()
                }
            }
        }
    }

    /// `dim H_k = dim X_k − rank(out_k) − rank(in_k)`.
    ///
    /// Exact whenever the stored range really is the whole complex; for a
    /// truncation of a larger complex the value is only reliable away from
    /// the truncation edge (the callers in this crate document their safe
    /// windows).
    pub fn homology_dim(&self, k: usize) -> usize {
        if k > self.top() {
            return 0;
        }
        self.dim(k) - self.outgoing(k).rank() - self.incoming(k).rank()
    }

    /// Basis of the cycle subspace at degree `k` (kernel of the outgoing
    /// differential), as vectors.
    pub fn cycles(&self, k: usize) -> Vec<Vec<crate::Q>> {
        self.outgoing(k).kernel_basis()
    }

    /// Is `v` a cycle at degree `k`?
    pub fn is_cycle(&self, k: usize, v: &[crate::Q]) -> Result<bool, ComplexError> {
        self.check_vec(k, v)?;
        Ok(self
            .outgoing(k)
            .mul_vec(v)
            .iter()
            .all(num_traits::Zero::is_zero))
    }

    /// Is `v` a boundary at degree `k` (image of the incoming
    /// differential)?
    pub fn is_boundary(&self, k: usize, v: &[crate::Q]) -> Result<bool, ComplexError> {
        self.check_vec(k, v)?;
        Ok(self.incoming(k).solve(v).is_some())
    }

    /// Do `v` and `w` represent the same homology class at degree `k`?
    /// (Both must be cycles; their difference must be a boundary.)
    pub fn same_class(
        &self,
        k: usize,
        v: &[crate::Q],
        w: &[crate::Q],
    ) -> Result<bool, ComplexError> {
        if !(self.is_cycle(k, v)? && self.is_cycle(k, w)?) {
            return Ok(false);
        }
        let diff: Vec<crate::Q> = v.iter().zip(w).map(|(a, b)| a - b).collect();
        self.is_boundary(k, &diff)
    }

    fn check_vec(&self, k: usize, v: &[crate::Q]) -> Result<(), ComplexError> {
        if k > self.top() {
            return Err(ComplexError::DegreeOutOfRange {
                degree: k,
                top: self.top(),
            });
        }
        if v.len() != self.dim(k) {
            return Err(ComplexError::VectorLength {
                degree: k,
                got: v.len(),
                want: self.dim(k),
            });
        }
        Ok(())
    }
}

/// A degreewise linear map commuting with the differentials.
#[derive(Debug, Clone)]
pub struct ChainMap {
    maps: Vec<QMat>,
}

impl ChainMap {
    /// Validates shapes and commutation `d_Y ∘ f = f ∘ d_X` in every
    /// degree of the shared range.
    pub fn new(
        source: &ChainComplex,
        target: &ChainComplex,
        maps: Vec<QMat>,
    ) -> Result<Self, ComplexError> {
        if source.direction() != target.direction() {
            return Err(ComplexError::DirectionMismatch);
        }
        let top = source.top().min(target.top());
        assert_eq!(maps.len(), top + 1, "one map per shared degree");
        for (k, f) in maps.iter().enumerate() {
            if f.rows() != target.dim(k) || f.cols() != source.dim(k) {
                return Err(ComplexError::ShapeMismatch {
                    lower: k,
                    upper: k,
                    got_rows: f.rows(),
                    got_cols: f.cols(),
                    want_rows: target.dim(k),
                    want_cols: source.dim(k),
                });
            }
        }
        for k in 0..top {
            let (lhs, rhs) = match source.direction() {
                // d_Y: Y_{k+1} → Y_k against f: X → Y.
                Direction::Down => (
                    target.connecting_map(k).mul(&maps[k + 1]),
                    maps[k].mul(source.connecting_map(k)),
                ),
                Direction::Up => (
                    target.connecting_map(k).mul(&maps[k]),
                    maps[k + 1].mul(source.connecting_map(k)),
                ),
            };
            if !lhs.sub(&rhs).is_zero() {
                return Err(ComplexError::NotChainMap { degree: k });
            }
        }
        Ok(ChainMap { maps })
    }

    pub fn degree(&self, k: usize) -> &QMat {
        &self.maps[k]
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }
}

/// Mapping cone of `f : X → Y` between complexes of the same direction:
/// for chain complexes, `C_k = X_{k−1} ⊕ Y_k` with
/// `d(x, y) = (−d_X x, f x + d_Y y)`; for cochain complexes the shifted
/// copy sits on the other side (`C^k = X^{k+1} ⊕ Y^k`,
/// `d(x, y) = (−d_X x, f x + d_Y y)`).
pub fn mapping_cone(
    f: &ChainMap,
    source: &ChainComplex,
    target: &ChainComplex,
) -> Result<ChainComplex, ComplexError> {
    if source.direction() != target.direction() {
        return Err(ComplexError::DirectionMismatch);
    }
    let top = f.len() - 1;
    match source.direction() {
        Direction::Down => {
            let dims: Vec<usize> = (0..=top)
                .map(|k| (if k > 0 { source.dim(k - 1) } else { 0 }) + target.dim(k))
                .collect();
            let mut maps = Vec::new();
            for k in 0..top {
                // C_{k+1} = X_k ⊕ Y_{k+1} → C_k = X_{k−1} ⊕ Y_k.
                let xk = source.dim(k);
                let xkm1 = if k > 0 { source.dim(k - 1) } else { 0 };
                let dx = if k > 0 {
                    source.connecting_map(k - 1).neg()
                } else {
                    QMat::zero(0, xk)
                };
                let dy = target.connecting_map(k).clone();
                let fk = f.degree(k).clone();
                let row_dims = [xkm1, target.dim(k)];
                let col_dims = [xk, target.dim(k + 1)];
                maps.push(QMat::block(
                    &row_dims,
                    &col_dims,
                    &[((0, 0), &dx), ((1, 0), &fk), ((1, 1), &dy)],
                ));
            }
            ChainComplex::new(Direction::Down, dims, maps)
        }
        Direction::Up => {
            let dims: Vec<usize> = (0..=top)
                .map(|k| source.dim(k + 1) + target.dim(k))
                .collect();
            let mut maps = Vec::new();
            for k in 0..top {
                // C^k = X^{k+1} ⊕ Y^k → C^{k+1} = X^{k+2} ⊕ Y^{k+1}.
                let dx = source.outgoing(k + 1).neg();
                let dy = target.connecting_map(k).clone();
                let fk1 = f.degree(k + 1).clone();
                let row_dims = [source.dim(k + 2), target.dim(k + 1)];
                let col_dims = [source.dim(k + 1), target.dim(k)];
                maps.push(QMat::block(
                    &row_dims,
                    &col_dims,
                    &[((0, 0), &dx), ((1, 0), &fk1), ((1, 1), &dy)],
                ));
            }
            ChainComplex::new(Direction::Up, dims, maps)
        }
    }
}

/// Does `f` induce isomorphisms on (co)homology in all shared degrees
/// strictly below the truncation edge? Equivalent (over ℚ) to the cone
/// being exact there.
pub fn is_quasi_iso(
    f: &ChainMap,
    source: &ChainComplex,
    target: &ChainComplex,
) -> Result<bool, ComplexError> {
    let cone = mapping_cone(f, source, target)?;
    // The top stored degree of the cone touches the truncation; stay below.
    Ok((0..cone.top()).all(|k| cone.homology_dim(k) == 0))
}

/// A finite grid of spaces `X_{p,q}` (`p` horizontal, `q` vertical) with
/// differentials `h_{p,q} : X_{p,q} → X_{p−1,q}` and
/// `v_{p,q} : X_{p,q} → X_{p,q−1}` that anticommute: `h v + v h = 0`.
#[derive(Debug, Clone)]
pub struct Bicomplex {
    cols: usize,
    rows: usize,
    dims: Vec<Vec<usize>>, // dims[p][q]
    horiz: Vec<Vec<QMat>>, // horiz[p][q]: X_{p,q} → X_{p−1,q}, p ≥ 1
    vert: Vec<Vec<QMat>>,  // vert[p][q]: X_{p,q} → X_{p,q−1}, q ≥ 1
}

impl Bicomplex {
    /// Builds from anticommuting data and verifies shapes, `h² = 0`,
    /// `v² = 0`, and `hv + vh = 0` on every square.
    pub fn from_anticommuting(
        dims: Vec<Vec<usize>>,
        horiz: Vec<Vec<QMat>>,
        vert: Vec<Vec<QMat>>,
    ) -> Result<Self, ComplexError> {
        let cols = dims.len();
        assert!(cols > 0);
        let rows = dims[0].len();
        assert!(dims.iter().all(|c| c.len() == rows), "ragged grid");
        assert_eq!(horiz.len(), cols);
        assert_eq!(vert.len(), cols);
        for p in 0..cols {
            assert_eq!(horiz[p].len(), rows);
            assert_eq!(vert[p].len(), rows);
            for q in 0..rows {
                let h = &horiz[p][q];
                let want_rows = if p > 0 { dims[p - 1][q] } else { 0 };
                if h.rows() != want_rows || h.cols() != dims[p][q] {
                    return Err(ComplexError::ShapeMismatch {
                        lower: p,
                        upper: q,
                        got_rows: h.rows(),
                        got_cols: h.cols(),
                        want_rows,
                        want_cols: dims[p][q],
                    });
                }
                let v = &vert[p][q];
                let want_rows = if q > 0 { dims[p][q - 1] } else { 0 };
                if v.rows() != want_rows || v.cols() != dims[p][q] {
                    return Err(ComplexError::ShapeMismatch {
                        lower: p,
                        upper: q,
                        got_rows: v.rows(),
                        got_cols: v.cols(),
                        want_rows,
                        want_cols: dims[p][q],
                    });
                }
            }
        }
        let bc = Bicomplex {
            cols,
            rows,
            dims,
            horiz,
            vert,
        };
        for p in 0..cols {
            for q in 0..rows {
                if p >= 2 && !bc.horiz[p - 1][q].mul(&bc.horiz[p][q]).is_zero() {
                    return Err(ComplexError::NotAComplex { from: p, to: p - 2 });
                }
                if q >= 2 && !bc.vert[p][q - 1].mul(&bc.vert[p][q]).is_zero() {
                    return Err(ComplexError::NotAComplex { from: q, to: q - 2 });
                }
                if p >= 1 && q >= 1 {
                    let hv = bc.horiz[p][q - 1].mul(&bc.vert[p][q]);
                    let vh = bc.vert[p - 1][q].mul(&bc.horiz[p][q]);
                    if !hv.add(&vh).is_zero() {
                        return Err(ComplexError::NotAnticommuting { p, q });
                    }
                }
            }
        }
        Ok(bc)
    }

    /// Builds from a grid whose squares commute (`h v = v h`), applying the
    /// alternating sign `(−1)^p` to the vertical maps of column `p` to make
    /// them anticommute.
    pub fn from_commuting(
        dims: Vec<Vec<usize>>,
        horiz: Vec<Vec<QMat>>,
        vert: Vec<Vec<QMat>>,
    ) -> Result<Self, ComplexError> {
        let twisted: Vec<Vec<QMat>> = vert
            .into_iter()
            .enumerate()
            .map(|(p, col)| {
                col.into_iter()
                    .map(|m| if p % 2 == 1 { m.neg() } else { m })
                    .collect()
            })
            .collect();
        Self::from_anticommuting(dims, horiz, twisted)
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn dim(&self, p: usize, q: usize) -> usize {
        self.dims[p][q]
    }

    pub fn horizontal(&self, p: usize, q: usize) -> &QMat {
        &self.horiz[p][q]
    }

    pub fn vertical(&self, p: usize, q: usize) -> &QMat {
        &self.vert[p][q]
    }

    /// Total complex: `T_n = ⊕_{p+q=n} X_{p,q}` ordered by ascending `p`,
    /// with differential the sum of the horizontal and (twisted) vertical
    /// maps. `d² = 0` is re-verified by the [`ChainComplex`] constructor.
    pub fn total_complex(&self) -> Result<ChainComplex, ComplexError> {
        let top = self.cols - 1 + self.rows - 1;
        let antidiag = |n: usize| -> Vec<(usize, usize)> {
            (0..self.cols)
                .filter_map(|p| {
                    let q = n.checked_sub(p)?;
                    (q < self.rows).then_some((p, q))
                })
                .collect()
        };
        let dims: Vec<usize> = (0..=top)
            .map(|n| antidiag(n).iter().map(|&(p, q)| self.dims[p][q]).sum())
            .collect();
        let mut maps = Vec::new();
        for n in 0..top {
            let lower = antidiag(n);
            let upper = antidiag(n + 1);
            let row_dims: Vec<usize> = lower.iter().map(|&(p, q)| self.dims[p][q]).collect();
            let col_dims: Vec<usize> = upper.iter().map(|&(p, q)| self.dims[p][q]).collect();
            let mut blocks: Vec<((usize, usize), &QMat)> = Vec::new();
            for (j, &(p, q)) in upper.iter().enumerate() {
                if p >= 1 {
                    if let Some(i) = lower.iter().position(|&c| c == (p - 1, q)) {
                        blocks.push(((i, j), &self.horiz[p][q]));
                    }
                }
                if q >= 1 {
                    if let Some(i) = lower.iter().position(|&c| c == (p, q - 1)) {
                        blocks.push(((i, j), &self.vert[p][q]));
                    }
                }
            }
            maps.push(QMat::block(&row_dims, &col_dims, &blocks));
        }
        ChainComplex::new(Direction::Down, dims, maps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmat::{qi, QMat};

    fn q(n: i64) -> crate::Q {
        qi(n)
    }

    #[test]
    fn rejects_non_complex() {
        // d1 = d2 = identity on Q: d∘d ≠ 0.
        let id = QMat::identity(1);
        let err = ChainComplex::new(Direction::Down, vec![1, 1, 1], vec![id.clone(), id]);
        assert_eq!(
            err.unwrap_err(),
            ComplexError::NotAComplex { from: 2, to: 0 }
        );
    }

    #[test]
    fn circle_homology() {
        // 0 → Q →0 Q → 0: both homologies are 1-dimensional.
        let c = ChainComplex::new(Direction::Down, vec![1, 1], vec![QMat::zero(1, 1)]).unwrap();
        assert_eq!(c.homology_dim(0), 1);
        assert_eq!(c.homology_dim(1), 1);

        // 0 → Q →id Q → 0: exact.
        let c = ChainComplex::new(Direction::Down, vec![1, 1], vec![QMat::identity(1)]).unwrap();
        assert_eq!(c.homology_dim(0), 0);
        assert_eq!(c.homology_dim(1), 0);
    }

    #[test]
    fn interval_complex_both_directions() {
        // Q² → Q by (x, y) ↦ x + y: full rank, so H_0 = 0 and H_1 = 1.
        let d = QMat::from_dense(vec![vec![q(1), q(1)]]);
        let down = ChainComplex::new(Direction::Down, vec![1, 2], vec![d.clone()]).unwrap();
        assert_eq!(down.homology_dim(0), 0);
        assert_eq!(down.homology_dim(1), 1);

        // Same data as a cochain complex Q² → Q in degrees 0, 1.
        let up = ChainComplex::new(Direction::Up, vec![2, 1], vec![d]).unwrap();
        assert_eq!(up.homology_dim(0), 1);
        assert_eq!(up.homology_dim(1), 0);
    }

    #[test]
    fn cycles_and_classes() {
        let d = QMat::from_dense(vec![vec![q(1), q(1)]]);
        let c = ChainComplex::new(Direction::Down, vec![1, 2], vec![d]).unwrap();
        // Degree 1 cycles: x + y = 0.
        let cyc = c.cycles(1);
        assert_eq!(cyc.len(), 1);
        assert!(c.is_cycle(1, &cyc[0]).unwrap());
        // Degree 0: everything is a cycle, and everything is a boundary.
        assert!(c.is_boundary(0, &[q(5)]).unwrap());
        assert!(c.same_class(0, &[q(2)], &[q(7)]).unwrap());
    }

    #[test]
    fn commuting_grid_twists_to_bicomplex() {
        // 2×2 grid of Q with all maps the identity: squares commute.
        let dims = vec![vec![1, 1], vec![1, 1]];
        let zero_in = |p: usize, q: usize, dims: &Vec<Vec<usize>>, horiz: bool| -> QMat {
            let rows = if horiz {
                if p > 0 {
                    dims[p - 1][q]
                } else {
                    0
                }
            } else if q > 0 {
                dims[p][q - 1]
            } else {
                0
            };
            QMat::zero(rows, dims[p][q])
        };
        let horiz = vec![
            vec![zero_in(0, 0, &dims, true), zero_in(0, 1, &dims, true)],
            vec![QMat::identity(1), QMat::identity(1)],
        ];
        let vert = vec![
            vec![zero_in(0, 0, &dims, false), QMat::identity(1)],
            vec![zero_in(1, 0, &dims, false), QMat::identity(1)],
        ];
        let bc = Bicomplex::from_commuting(dims, horiz, vert).unwrap();
        // Column 1's vertical map got the twist.
        assert_eq!(bc.vertical(1, 1).get(0, 0), q(-1));
        let tot = bc.total_complex().unwrap();
        assert_eq!(tot.dims(), &[1, 2, 1]);
        // The twisted square is exact in the middle.
        assert_eq!(tot.homology_dim(0), 0);
        assert_eq!(tot.homology_dim(1), 0);
        assert_eq!(tot.homology_dim(2), 0);
    }

    #[test]
    fn cone_detects_quasi_isomorphism() {
        // The identity on an exact complex is a quasi-isomorphism.
        let x = ChainComplex::new(Direction::Down, vec![1, 1], vec![QMat::identity(1)]).unwrap();
        let f = ChainMap::new(&x, &x, vec![QMat::identity(1), QMat::identity(1)]).unwrap();
        assert!(is_quasi_iso(&f, &x, &x).unwrap());

        // Zero map on a complex with homology is not a quasi-isomorphism.
        let y = ChainComplex::new(Direction::Down, vec![1, 1], vec![QMat::zero(1, 1)]).unwrap();
        let z = ChainMap::new(&y, &y, vec![QMat::zero(1, 1), QMat::zero(1, 1)]).unwrap();
        assert!(!is_quasi_iso(&z, &y, &y).unwrap());
    }

    #[test]
    fn chain_map_validation() {
        let x = ChainComplex::new(Direction::Down, vec![1, 1], vec![QMat::identity(1)]).unwrap();
        let y = ChainComplex::new(Direction::Down, vec![1, 1], vec![QMat::zero(1, 1)]).unwrap();
        // f = (1, 1) does not commute: d_Y f_1 = 0 but f_0 d_X = 1.
        let bad = ChainMap::new(&x, &y, vec![QMat::identity(1), QMat::identity(1)]);
        assert_eq!(bad.unwrap_err(), ComplexError::NotChainMap { degree: 0 });
    }
}
