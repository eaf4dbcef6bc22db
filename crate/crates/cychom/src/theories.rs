//! Homology theories of a (co)cyclic module representation.
//!
//! Four constructions, all exact over ℚ:
//!
//! * [`hochschild_complex`] — the alternating face sum `b`.
//! * [`connes_model`] — the quotient by the image of `1 − λ` (signed
//!   rotation) on the chain side, or the invariant subspace on the cochain
//!   side, with the induced `b`.
//! * [`cyclic_bicomplex`] / [`bicomplex_total`] — the two-periodic grid
//!   with columns alternating `b`, `b′` and rows alternating `1 − λ`, `N`.
//! * [`mixed_model`] — the degeneracy-normalized spaces with `b` and the
//!   Connes boundary `B = s̄ ∘ N` (extra degeneracy after the norm), folded
//!   into the `b + B` total complex.
//!
//! Truncation honesty: a representation stores levels `0..=N`. Every
//! theory here is exact for (co)homology degrees `k ≤ N − 1` — degree `k`
//! needs differentials in and out, hence level `k + 1` at most (the mixed
//! and bicomplex totals only ever use levels `≤ k + 1` in total degree
//! `k + 1`). [`hc`] and [`hochschild_dims`] refuse degrees beyond that
//! window instead of returning silently wrong numbers.
//!
//! [`s_operator`] implements the degree-two periodicity map on cochain
//! λ-model classes by the two-column shift in the bicomplex, straightened
//! back into column 0 by an explicit staircase (one division by the norm on
//! invariants, one linear solve against `1 − λ`).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::complex::{Bicomplex, ChainComplex, ComplexError, Direction};
use crate::module::{CyclicModuleRep, ModuleError, Variance};
use crate::qmat::{cokernel_projection, kernel_inclusion, qi, QMat};
use crate::Q;

#[derive(Debug, Error)]
pub enum TheoryError {
    #[error(
        "degree {requested} is outside the safe window: truncation {truncation} certifies degrees 0..={safe_max} ({method})"
    )]
    UnsafeDegree {
        requested: usize,
        safe_max: usize,
        truncation: usize,
        method: &'static str,
    },
    #[error("representation must be {expected} for {operation}")]
    WrongVariance {
        expected: &'static str,
        operation: &'static str,
    },
    #[error("vector at degree {degree} is not invariant under the signed rotation")]
    NotInvariant { degree: usize },
    #[error("vector at degree {degree} is not closed under the Hochschild differential")]
    NotClosed { degree: usize },
    #[error("vector at degree {degree} does not lie in the model subspace")]
    NotInModel { degree: usize },
    #[error("internal exactness failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// Which cyclic (co)homology construction to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Method {
    Connes,
    Bicomplex,
    Mixed,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Connes, Method::Bicomplex, Method::Mixed];

    pub fn name(&self) -> &'static str {
        match self {
            Method::Connes => "connes",
            Method::Bicomplex => "bicomplex",
            Method::Mixed => "mixed",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "connes" => Ok(Method::Connes),
            "bicomplex" => Ok(Method::Bicomplex),
            "mixed" => Ok(Method::Mixed),
            other => Err(format!(
                "unknown method {other:?} (expected connes, bicomplex, or mixed)"
            )),
        }
    }
}

// ---------------------------------------------------------------------------
// Operators.
// ---------------------------------------------------------------------------

/// Alternating sum of all faces between levels `n` and `n+1`:
/// `b = Σ_{j=0}^{n+1} (−1)^j ∂_j`. Lowers degree for a cyclic
/// (contravariant) representation, raises it for a cocyclic one.
pub fn hochschild_b(rep: &CyclicModuleRep, n: usize) -> Result<QMat, TheoryError> {
    alternating_faces(rep, n, n + 1)
}

/// The truncated differential `b′ = Σ_{j=0}^{n} (−1)^j ∂_j` (last face
/// omitted), which is acyclic via the extra degeneracy.
pub fn hochschild_b_prime(rep: &CyclicModuleRep, n: usize) -> Result<QMat, TheoryError> {
    alternating_faces(rep, n, n)
}

fn alternating_faces(rep: &CyclicModuleRep, n: usize, last: usize) -> Result<QMat, TheoryError> {
    let mut acc = rep.face(n, 0)?.clone();
    for j in 1..=last {
        let f = rep.face(n, j)?;
        acc = if j % 2 == 0 { acc.add(f) } else { acc.sub(f) };
    }
    Ok(acc)
}

/// The signed rotation `λ_n = (−1)^n τ_n`.
pub fn signed_rotation(rep: &CyclicModuleRep, n: usize) -> Result<QMat, TheoryError> {
    let t = rep.rotation(n)?;
    Ok(if n % 2 == 1 { t.neg() } else { t.clone() })
}

/// The norm `N_n = Σ_{i=0}^{n} λ_n^i`.
pub fn norm_operator(rep: &CyclicModuleRep, n: usize) -> Result<QMat, TheoryError> {
    let lam = signed_rotation(rep, n)?;
    let dim = rep.dim(n);
    let mut acc = QMat::identity(dim);
    let mut pow = QMat::identity(dim);
    for _ in 1..=n {
        pow = lam.mul(&pow);
        acc = acc.add(&pow);
    }
    Ok(acc)
}

fn one_minus_lambda(rep: &CyclicModuleRep, n: usize) -> Result<QMat, TheoryError> {
    Ok(QMat::identity(rep.dim(n)).sub(&signed_rotation(rep, n)?))
}

fn matrix_columns(m: &QMat) -> Vec<Vec<Q>> {
    let mut cols = vec![vec![Q::zero(); m.rows()]; m.cols()];
    for (r, c, v) in m.iter() {
        cols[c][r] = v.clone();
    }
    cols
}

/// Solves `incl · x = v` for every column `v` of `rhs`, i.e. expresses
/// `rhs` through the subspace basis `incl`. Errors if some column is
/// outside the subspace.
fn restrict_through(incl: &QMat, rhs: &QMat, what: &str) -> Result<QMat, TheoryError> {
    let mut cols = Vec::with_capacity(rhs.cols());
    for v in matrix_columns(rhs) {
        let x = incl.solve(&v).ok_or_else(|| {
            TheoryError::Internal(format!("{what}: image left the invariant subspace"))
        })?;
        cols.push(x);
    }
    Ok(QMat::from_fn(incl.cols(), rhs.cols(), |r, c| {
        cols[c][r].clone()
    }))
}

// ---------------------------------------------------------------------------
// Hochschild.
// ---------------------------------------------------------------------------

/// The Hochschild complex of the representation on levels `0..=N`:
/// a chain complex (degree-lowering `b`) for a cyclic representation, a
/// cochain complex for a cocyclic one.
///
/// Safe window: degrees `0..=N−1` (degree `k` needs the differential
/// touching level `k+1`).
pub fn hochschild_complex(rep: &CyclicModuleRep) -> Result<ChainComplex, TheoryError> {
    let n = rep.truncation();
    let dims = rep.dims().to_vec();
    let maps: Result<Vec<QMat>, TheoryError> = (0..n).map(|k| hochschild_b(rep, k)).collect();
    let direction = match rep.variance() {
        Variance::Cyclic => Direction::Down,
        Variance::Cocyclic => Direction::Up,
    };
    Ok(ChainComplex::new(direction, dims, maps?)?)
}

/// Hochschild (co)homology dimensions for degrees `0..=max_degree`.
pub fn hochschild_dims(
    rep: &CyclicModuleRep,
    max_degree: usize,
) -> Result<Vec<usize>, TheoryError> {
    check_window(rep, max_degree, "hochschild")?;
    let c = hochschild_complex(rep)?;
    Ok((0..=max_degree).map(|k| c.homology_dim(k)).collect())
}

fn check_window(
    rep: &CyclicModuleRep,
    max_degree: usize,
    method: &'static str,
) -> Result<(), TheoryError> {
    let truncation = rep.truncation();
    let safe_max = truncation.saturating_sub(1);
    if truncation == 0 || max_degree > safe_max {
        return Err(TheoryError::UnsafeDegree {
            requested: max_degree,
            safe_max,
            truncation,
            method,
        });
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// The Connes λ-model.
// ---------------------------------------------------------------------------

/// The λ-model complex together with the maps between model and ambient
/// coordinates.
///
/// Chain side (cyclic representation): model space at degree `k` is the
/// coinvariant quotient `X_k / im(1 − λ)`; `proj` projects onto it, `incl`
/// is a section. Cochain side (cocyclic): model space is the invariant
/// subspace `ker(1 − λ)`; `incl` embeds it and membership is decided by
/// solving.
pub struct LambdaModel {
    pub complex: ChainComplex,
    incl: Vec<QMat>,
    proj: Vec<Option<QMat>>,
}

impl LambdaModel {
    /// Ambient representative of a model vector at degree `k`.
    pub fn from_model(&self, k: usize, v: &[Q]) -> Vec<Q> {
        self.incl[k].mul_vec(v)
    }

    /// Model coordinates of an ambient vector at degree `k`. On the chain
    /// side this is the projection (always defined); on the cochain side
    /// the vector must lie in the invariant subspace.
    pub fn to_model(&self, k: usize, v: &[Q]) -> Result<Vec<Q>, TheoryError> {
        match &self.proj[k] {
            Some(p) => Ok(p.mul_vec(v)),
            None => self.incl[k]
                .solve(v)
                .ok_or(TheoryError::NotInModel { degree: k }),
        }
    }

    /// Are two ambient vectors at degree `k` the same λ-model class?
    pub fn classes_equal(&self, k: usize, v: &[Q], w: &[Q]) -> Result<bool, TheoryError> {
        let mv = self.to_model(k, v)?;
        let mw = self.to_model(k, w)?;
        Ok(self.complex.same_class(k, &mv, &mw)?)
    }

    /// Is the ambient vector at degree `k` a boundary class in the model?
    pub fn is_trivial_class(&self, k: usize, v: &[Q]) -> Result<bool, TheoryError> {
        let mv = self.to_model(k, v)?;
        Ok(self.complex.is_boundary(k, &mv)?)
    }
}

/// Builds the λ-model on levels `0..=N`. Well-definedness of the induced
/// differential is re-verified exactly (the identity `b(1−λ) = (1−λ)b′`
/// makes it descend / restrict).
///
/// Safe window: degrees `0..=N−1`.
pub fn connes_model(rep: &CyclicModuleRep) -> Result<LambdaModel, TheoryError> {
    let n = rep.truncation();
    match rep.variance() {
        Variance::Cyclic => {
            let mut incls = Vec::new();
            let mut projs = Vec::new();
            for k in 0..=n {
                let one_minus = one_minus_lambda(rep, k)?;
                let (proj, incl) = cokernel_projection(rep.dim(k), &matrix_columns(&one_minus));
                incls.push(incl);
                projs.push(Some(proj));
            }
            let mut maps = Vec::new();
            for k in 0..n {
                let b = hochschild_b(rep, k)?;
                let proj = projs[k].as_ref().unwrap();
                // The induced map must kill the relations of the quotient.
                let leak = proj.mul(&b).mul(&one_minus_lambda(rep, k + 1)?);
                if !leak.is_zero() {
                    return Err(TheoryError::Internal(
                        "quotient differential is not well defined".into(),
                    ));
                }
                maps.push(proj.mul(&b).mul(&incls[k + 1]));
            }
            let dims: Vec<usize> = incls.iter().map(|i| i.cols()).collect();
            let complex = ChainComplex::new(Direction::Down, dims, maps)?;
            Ok(LambdaModel {
                complex,
                incl: incls,
                proj: projs,
            })
        }
        Variance::Cocyclic => {
            let mut incls = Vec::new();
            for k in 0..=n {
                incls.push(kernel_inclusion(&one_minus_lambda(rep, k)?));
            }
            let mut maps = Vec::new();
            for k in 0..n {
                let b = hochschild_b(rep, k)?;
                maps.push(restrict_through(
                    &incls[k + 1],
                    &b.mul(&incls[k]),
                    "invariant cochain differential",
                )?);
            }
            let dims: Vec<usize> = incls.iter().map(|i| i.cols()).collect();
            let complex = ChainComplex::new(Direction::Up, dims, maps)?;
            Ok(LambdaModel {
                complex,
                incl: incls,
                proj: (0..=n).map(|_| None).collect(),
            })
        }
    }
}

// ---------------------------------------------------------------------------
// The cyclic bicomplex.
// ---------------------------------------------------------------------------

/// The first-quadrant cyclic bicomplex of a cyclic (chain-side)
/// representation, truncated to an `(N+1) × (N+1)` grid: `CC_{p,q} = X_q`,
/// columns alternate `b` (even `p`) and `b′` (odd `p`), rows alternate
/// `1 − λ` (into even columns) and `N` (into odd columns). The squares
/// commute on the nose; the alternating column twist (applied by
/// [`Bicomplex::from_commuting`]) makes the grid anticommute.
pub fn cyclic_bicomplex(rep: &CyclicModuleRep) -> Result<Bicomplex, TheoryError> {
    if rep.variance() != Variance::Cyclic {
        return Err(TheoryError::WrongVariance {
            expected: "cyclic (contravariant)",
            operation: "cyclic_bicomplex",
        });
    }
    let n = rep.truncation();
    let size = n + 1;
    let dims: Vec<Vec<usize>> = (0..size).map(|_| rep.dims().to_vec()).collect();
    let mut horiz = Vec::new();
    let mut vert = Vec::new();
    for p in 0..size {
        let mut hcol = Vec::new();
        let mut vcol = Vec::new();
        for q in 0..size {
            // Horizontal X_q → X_q into column p−1.
            let h = if p == 0 {
                QMat::zero(0, rep.dim(q))
            } else if p % 2 == 1 {
                one_minus_lambda(rep, q)?
            } else {
                norm_operator(rep, q)?
            };
            hcol.push(h);
            // Vertical X_q → X_{q−1}.
            let v = if q == 0 {
                QMat::zero(0, rep.dim(0))
            } else if p % 2 == 0 {
                hochschild_b(rep, q - 1)?
            } else {
                hochschild_b_prime(rep, q - 1)?
            };
            vcol.push(v);
        }
        horiz.push(hcol);
        vert.push(vcol);
    }
    Ok(Bicomplex::from_commuting(dims, horiz, vert)?)
}

/// Total complex of the cyclic bicomplex, for either variance. For a
/// cyclic representation this totalizes [`cyclic_bicomplex`]; for a
/// cocyclic one the mirrored (degree-raising) grid is assembled directly,
/// with `d² = 0` re-verified by the complex constructor.
///
/// Safe window: degrees `0..=N−1` (total degree `k` only involves levels
/// `≤ k+1`, and the missing cells beyond the grid edge only affect degrees
/// `≥ N`).
pub fn bicomplex_total(rep: &CyclicModuleRep) -> Result<ChainComplex, TheoryError> {
    match rep.variance() {
        Variance::Cyclic => Ok(cyclic_bicomplex(rep)?.total_complex()?),
        Variance::Cocyclic => {
            let n = rep.truncation();
            let size = n + 1;
            let antidiag = |k: usize| -> Vec<(usize, usize)> {
                (0..size)
                    .filter_map(|p| {
                        let q = k.checked_sub(p)?;
                        (q < size).then_some((p, q))
                    })
                    .collect()
            };
            let top = 2 * n;
            let dims: Vec<usize> = (0..=top)
                .map(|k| antidiag(k).iter().map(|&(_, q)| rep.dim(q)).sum())
                .collect();
            let mut maps = Vec::new();
            for k in 0..top {
                let lower = antidiag(k);
                let upper = antidiag(k + 1);
                let row_dims: Vec<usize> = upper.iter().map(|&(_, q)| rep.dim(q)).collect();
                let col_dims: Vec<usize> = lower.iter().map(|&(_, q)| rep.dim(q)).collect();
                let mut blocks: Vec<((usize, usize), QMat)> = Vec::new();
                for (j, &(p, q)) in lower.iter().enumerate() {
                    // Horizontal (p,q) → (p+1,q): 1−λ out of even columns,
                    // N out of odd ones.
                    if let Some(i) = upper.iter().position(|&c| c == (p + 1, q)) {
                        let h = if p % 2 == 0 {
                            one_minus_lambda(rep, q)?
                        } else {
                            norm_operator(rep, q)?
                        };
                        blocks.push(((i, j), h));
                    }
                    // Vertical (p,q) → (p,q+1): +b in even columns, −b′ in
                    // odd ones (the anticommuting twist).
                    if q + 1 < size {
                        if let Some(i) = upper.iter().position(|&c| c == (p, q + 1)) {
                            let v = if p % 2 == 0 {
                                hochschild_b(rep, q)?
                            } else {
                                hochschild_b_prime(rep, q)?.neg()
                            };
                            blocks.push(((i, j), v));
                        }
                    }
                }
                let borrowed: Vec<((usize, usize), &QMat)> =
                    blocks.iter().map(|(pos, m)| (*pos, m)).collect();
                maps.push(QMat::block(&row_dims, &col_dims, &borrowed));
            }
            Ok(ChainComplex::new(Direction::Up, dims, maps)?)
        }
    }
}

// ---------------------------------------------------------------------------
// The normalized mixed complex.
// ---------------------------------------------------------------------------

/// Degeneracy-normalized spaces with the induced `b` and the Connes
/// boundary `B`, plus the folded `b + B` total complex.
pub struct MixedModel {
    /// The `b + B` total complex: `T_k = ⊕_i  X̄_{k−2i}` (chain side) or
    /// the mirrored cochain version.
    pub complex: ChainComplex,
    /// Normalized dimensions per level.
    pub normalized_dims: Vec<usize>,
    /// Induced Hochschild differential between normalized levels `k+1` and
    /// `k` (chain) or `k` and `k+1` (cochain).
    pub b: Vec<QMat>,
    /// The degree-raising (chain) / degree-lowering (cochain) boundary `B̄`.
    pub bb: Vec<QMat>,
}

/// Builds the normalized mixed complex. The identities `b̄² = 0`,
/// `B̄² = 0`, and `b̄B̄ + B̄b̄ = 0` are verified exactly; the total complex
/// re-checks `d² = 0`.
///
/// Safe window: degrees `0..=N−1`.
pub fn mixed_model(rep: &CyclicModuleRep) -> Result<MixedModel, TheoryError> {
    let n = rep.truncation();
    // The extra degeneracy (unit inserted in front): the morphism
    // σ^k_k ∘ τ_{k+1} evaluated per variance, composed with the norm.
    let extra = |k: usize| -> Result<QMat, TheoryError> {
        let s_last = rep.degeneracy(k, k)?;
        let rot = rep.rotation(k + 1)?;
        Ok(match rep.variance() {
            Variance::Cyclic => rot.mul(s_last),   // X_k → X_{k+1}
            Variance::Cocyclic => s_last.mul(rot), // Y^{k+1} → Y^k
        })
    };
    match rep.variance() {
        Variance::Cyclic => {
            let mut projs = Vec::new();
            let mut incls = Vec::new();
            for k in 0..=n {
                let mut gens: Vec<Vec<Q>> = Vec::new();
                if k >= 1 {
                    for i in 0..k {
                        gens.extend(matrix_columns(rep.degeneracy(k - 1, i)?));
                    }
                }
                let (proj, incl) = cokernel_projection(rep.dim(k), &gens);
                projs.push(proj);
                incls.push(incl);
            }
            let normalized_dims: Vec<usize> = incls.iter().map(|i| i.cols()).collect();
            let mut b_bar = Vec::new();
            for k in 0..n {
                let b = hochschild_b(rep, k)?;
                // b preserves degenerate chains, so it descends; verify.
                for i in 0..=k {
                    let leak = projs[k].mul(&b).mul(rep.degeneracy(k, i)?);
                    if !leak.is_zero() {
                        return Err(TheoryError::Internal(format!(
                            "normalized differential leaks through degeneracy s{k}_{i}"
                        )));
                    }
                }
                b_bar.push(projs[k].mul(&b).mul(&incls[k + 1]));
            }
            let mut bb_bar = Vec::new();
            for k in 0..n {
                let op = extra(k)?.mul(&norm_operator(rep, k)?);
                bb_bar.push(projs[k + 1].mul(&op).mul(&incls[k]));
            }
            verify_mixed_identities(Direction::Down, &b_bar, &bb_bar, &normalized_dims)?;
            let complex = mixed_total(Direction::Down, &normalized_dims, &b_bar, &bb_bar)?;
            Ok(MixedModel {
                complex,
                normalized_dims,
                b: b_bar,
                bb: bb_bar,
            })
        }
        Variance::Cocyclic => {
            let mut incls = Vec::new();
            for k in 0..=n {
                if k == 0 {
                    incls.push(QMat::identity(rep.dim(0)));
                    continue;
                }
                let mut stacked = rep.degeneracy(k - 1, 0)?.clone();
                for i in 1..k {
                    stacked = stacked.vstack(rep.degeneracy(k - 1, i)?);
                }
                incls.push(kernel_inclusion(&stacked));
            }
            let normalized_dims: Vec<usize> = incls.iter().map(|i| i.cols()).collect();
            let mut b_bar = Vec::new();
            for k in 0..n {
                let b = hochschild_b(rep, k)?;
                b_bar.push(restrict_through(
                    &incls[k + 1],
                    &b.mul(&incls[k]),
                    "normalized cochain differential",
                )?);
            }
            let mut bb_bar = Vec::new();
            for k in 0..n {
                let op = norm_operator(rep, k)?.mul(&extra(k)?); // Y^{k+1} → Y^k
                bb_bar.push(restrict_through(
                    &incls[k],
                    &op.mul(&incls[k + 1]),
                    "normalized cochain boundary",
                )?);
            }
            verify_mixed_identities(Direction::Up, &b_bar, &bb_bar, &normalized_dims)?;
            let complex = mixed_total(Direction::Up, &normalized_dims, &b_bar, &bb_bar)?;
            Ok(MixedModel {
                complex,
                normalized_dims,
                b: b_bar,
                bb: bb_bar,
            })
        }
    }
}

/// `b̄² = 0`, `B̄² = 0`, `b̄B̄ + B̄b̄ = 0` on the normalized spaces.
///
/// `b[k]` and `bb[k]` connect normalized levels `k` and `k+1` in opposite
/// directions; which one lowers degree depends on `direction`.
fn verify_mixed_identities(
    direction: Direction,
    b: &[QMat],
    bb: &[QMat],
    dims: &[usize],
) -> Result<(), TheoryError> {
    let n = dims.len() - 1;
    for k in 0..n.saturating_sub(1) {
        let b_sq = match direction {
            Direction::Down => b[k].mul(&b[k + 1]),
            Direction::Up => b[k + 1].mul(&b[k]),
        };
        if !b_sq.is_zero() {
            return Err(TheoryError::Internal(format!("b̄² != 0 at level {k}")));
        }
        let bb_sq = match direction {
            Direction::Down => bb[k + 1].mul(&bb[k]),
            Direction::Up => bb[k].mul(&bb[k + 1]),
        };
        if !bb_sq.is_zero() {
            return Err(TheoryError::Internal(format!("B̄² != 0 at level {k}")));
        }
    }
    // Anticommutation as an endomorphism of level k; at the edges only one
    // of the two composites exists and must vanish alone.
    for k in 0..=n {
        let mut square = QMat::zero(dims[k], dims[k]);
        if k < n {
            square = square.add(&match direction {
                Direction::Down => b[k].mul(&bb[k]),
                Direction::Up => bb[k].mul(&b[k]),
            });
        }
        if k >= 1 {
            square = square.add(&match direction {
                Direction::Down => bb[k - 1].mul(&b[k - 1]),
                Direction::Up => b[k - 1].mul(&bb[k - 1]),
            });
        }
        if !square.is_zero() {
            return Err(TheoryError::Internal(format!("b̄B̄ + B̄b̄ != 0 at level {k}")));
        }
    }
    Ok(())
}

/// Folds normalized `(b, B)` data into the `b + B` total complex:
/// `T_k = ⊕_{i ≥ 0, k−2i ≥ 0} X̄_{k−2i}` with slots ordered by `i`.
fn mixed_total(
    direction: Direction,
    dims: &[usize],
    b: &[QMat],
    bb: &[QMat],
) -> Result<ChainComplex, TheoryError> {
    let n = dims.len() - 1;
    let slots = |k: usize| -> Vec<usize> {
        (0..=k / 2).map(|i| k - 2 * i).collect() // levels k, k−2, …
    };
    let tdims: Vec<usize> = (0..=n)
        .map(|k| slots(k).iter().map(|&l| dims[l]).sum())
        .collect();
    let mut maps = Vec::new();
    for k in 0..n {
        // Connects T_k and T_{k+1}; which is source depends on direction.
        let low = slots(k);
        let high = slots(k + 1);
        let (row_levels, col_levels) = match direction {
            Direction::Down => (low.clone(), high.clone()),
            Direction::Up => (high.clone(), low.clone()),
        };
        let row_dims: Vec<usize> = row_levels.iter().map(|&l| dims[l]).collect();
        let col_dims: Vec<usize> = col_levels.iter().map(|&l| dims[l]).collect();
        let mut blocks: Vec<((usize, usize), &QMat)> = Vec::new();
        for (j, &lvl) in col_levels.iter().enumerate() {
            match direction {
                Direction::Down => {
                    // From T_{k+1} slot at level lvl: b̄ lowers to lvl−1,
                    // B̄ raises to lvl+1; both land in T_k.
                    if lvl >= 1 {
                        if let Some(i) = row_levels.iter().position(|&l| l == lvl - 1) {
                            blocks.push(((i, j), &b[lvl - 1]));
                        }
                    }
                    if lvl < n {
                        if let Some(i) = row_levels.iter().position(|&l| l == lvl + 1) {
                            blocks.push(((i, j), &bb[lvl]));
                        }
                    }
                }
                Direction::Up => {
                    // From T_k slot at level lvl: b̄ raises to lvl+1,
                    // B̄ lowers to lvl−1; both land in T_{k+1}.
                    if lvl < n {
                        if let Some(i) = row_levels.iter().position(|&l| l == lvl + 1) {
                            blocks.push(((i, j), &b[lvl]));
                        }
                    }
                    if lvl >= 1 {
                        if let Some(i) = row_levels.iter().position(|&l| l == lvl - 1) {
                            blocks.push(((i, j), &bb[lvl - 1]));
                        }
                    }
                }
            }
        }
        maps.push(QMat::block(&row_dims, &col_dims, &blocks));
    }
    Ok(ChainComplex::new(direction, tdims, maps)?)
}

// ---------------------------------------------------------------------------
// Cyclic (co)homology dimensions.
// ---------------------------------------------------------------------------

/// Cyclic (co)homology dimensions for degrees `0..=max_degree` by the
/// chosen method. Every method is exact for `max_degree ≤ N − 1`; larger
/// requests are refused.
pub fn hc(
    rep: &CyclicModuleRep,
    method: Method,
    max_degree: usize,
) -> Result<Vec<usize>, TheoryError> {
    check_window(rep, max_degree, method.name())?;
    let complex = match method {
        Method::Connes => connes_model(rep)?.complex,
        Method::Bicomplex => bicomplex_total(rep)?,
        Method::Mixed => mixed_model(rep)?.complex,
    };
    Ok((0..=max_degree).map(|k| complex.homology_dim(k)).collect())
}

/// Runs all three methods and returns their tables keyed by method.
pub fn hc_all_methods(
    rep: &CyclicModuleRep,
    max_degree: usize,
) -> Result<BTreeMap<Method, Vec<usize>>, TheoryError> {
    let mut out = BTreeMap::new();
    for method in Method::ALL {
        out.insert(method, hc(rep, method, max_degree)?);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Periodicity.
// ---------------------------------------------------------------------------

/// The degree-two periodicity map on cochain λ-model classes, computed by
/// shifting the class two columns right in the cyclic bicomplex and
/// straightening back into column 0.
///
/// Input: an ambient vector `xi` at degree `p` that is invariant under the
/// signed rotation and `b`-closed (both verified). Output: the ambient
/// degree `p+2` representative `−b z` where `(1−λ) z = b′ ξ / (p+1)`; it is
/// again invariant and closed (verified). Requires `p + 2 ≤ N`.
pub fn s_operator(rep: &CyclicModuleRep, p: usize, xi: &[Q]) -> Result<Vec<Q>, TheoryError> {
    if rep.variance() != Variance::Cocyclic {
        return Err(TheoryError::WrongVariance {
            expected: "cocyclic (covariant)",
            operation: "s_operator",
        });
    }
    if p + 2 > rep.truncation() {
        return Err(TheoryError::UnsafeDegree {
            requested: p + 2,
            safe_max: rep.truncation().saturating_sub(2),
            truncation: rep.truncation(),
            method: "s_operator",
        });
    }
    let is_zero = |v: &[Q]| v.iter().all(Q::is_zero);
    if !is_zero(&one_minus_lambda(rep, p)?.mul_vec(xi)) {
        return Err(TheoryError::NotInvariant { degree: p });
    }
    if !is_zero(&hochschild_b(rep, p)?.mul_vec(xi)) {
        return Err(TheoryError::NotClosed { degree: p });
    }
    // Staircase: divide by the norm on invariants (N = (p+1)·id there),
    // push along b′, solve one step of 1−λ, finish with −b.
    let scale = Q::one() / qi(p as i64 + 1);
    let w: Vec<Q> = hochschild_b_prime(rep, p)?
        .mul_vec(xi)
        .into_iter()
        .map(|v| v * &scale)
        .collect();
    let z = one_minus_lambda(rep, p + 1)?
        .solve(&w)
        .ok_or_else(|| TheoryError::Internal("periodicity staircase is not exact".into()))?;
    let out: Vec<Q> = hochschild_b(rep, p + 1)?
        .mul_vec(&z)
        .into_iter()
        .map(|v| -v)
        .collect();
    // Certify the output is again a gated class representative.
    if !is_zero(&one_minus_lambda(rep, p + 2)?.mul_vec(&out)) {
        return Err(TheoryError::Internal(
            "periodicity output is not invariant".into(),
        ));
    }
    if !is_zero(&hochschild_b(rep, p + 2)?.mul_vec(&out)) {
        return Err(TheoryError::Internal(
            "periodicity output is not closed".into(),
        ));
    }
    Ok(out)
}
