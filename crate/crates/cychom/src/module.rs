//! Algebras, coalgebras, and their cyclic-module representations.
//!
//! [`AlgebraPresentation`] and [`CoalgebraPresentation`] hold finite-
//! dimensional (co)algebras over ℚ by structure constants, with the axioms
//! (associativity/unit, coassociativity/counit) verified exactly at
//! construction.
//!
//! [`CyclicModuleRep`] is a truncated representation of the cyclic index
//! category: one matrix per generator per level, either contravariant
//! ("cyclic", the differential side of homology) or covariant ("cocyclic").
//! [`canonical_cyclic_module`] builds the standard representation on tensor
//! powers `A^{⊗(n+1)}` — faces multiply adjacent factors with the last one
//! wrapping around, degeneracies insert the unit, and the rotation moves the
//! last factor to the front. [`cocyclic_coalgebra_module`] is the dual
//! picture on `C^{⊗(n+1)}`: cofaces comultiply, codegeneracies apply the
//! counit, and the rotation moves the first factor to the back.

use thiserror::Error;

use crate::lambda::{relation_word_instances, Generator, LambdaMorphism};
use crate::qmat::QMat;
use crate::Q;

use num_traits::{One, Zero};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModuleError {
    #[error("structure constant index out of range: ({i}, {j}, {k}) for dimension {dim}")]
    BadStructureIndex {
        i: usize,
        j: usize,
        k: usize,
        dim: usize,
    },
    #[error("multiplication is not associative: (e{i}·e{j})·e{k} != e{i}·(e{j}·e{k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("unit law fails on basis vector e{i} ({side} side)")]
    UnitLaw { i: usize, side: &'static str },
    #[error("comultiplication is not coassociative")]
    NotCoassociative,
    #[error("counit law fails ({side} side)")]
    CounitLaw { side: &'static str },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("level {level} exceeds truncation {truncation}")]
    TruncationExceeded { level: usize, truncation: usize },
    #[error("representation matrix for {generator} has shape {got_rows}x{got_cols}, expected {want_rows}x{want_cols}")]
    MatrixShape {
        generator: String,
        got_rows: usize,
        got_cols: usize,
        want_rows: usize,
        want_cols: usize,
    },
    #[error("truncations differ: {0} vs {1}")]
    TruncationMismatch(usize, usize),
    #[error("variance mismatch: {0}")]
    VarianceMismatch(String),
}

// ---------------------------------------------------------------------------
// Algebras and coalgebras.
// ---------------------------------------------------------------------------

/// A finite-dimensional associative unital ℚ-algebra given by structure
/// constants: `e_i · e_j = Σ_k c^k_{ij} e_k`.
#[derive(Debug, Clone)]
pub struct AlgebraPresentation {
    labels: Vec<String>,
    /// Multiplication `A ⊗ A → A` as a `dim × dim²` matrix; the column for
    /// `(i, j)` is `i·dim + j` (first tensor factor most significant).
    mult: QMat,
    /// Coefficients of the unit element.
    unit: Vec<Q>,
}

impl AlgebraPresentation {
    pub fn new(
        labels: Vec<String>,
        structure: &[(usize, usize, usize, Q)],
        unit: Vec<Q>,
    ) -> Result<Self, ModuleError> {
        let dim = labels.len();
        assert!(dim > 0, "algebra needs at least one basis vector");
        if unit.len() != dim {
            return Err(ModuleError::Dimension(format!(
                "unit vector has length {}, expected {dim}",
                unit.len()
            )));
        }
        for &(i, j, k, _) in structure {
            if i >= dim || j >= dim || k >= dim {
                return Err(ModuleError::BadStructureIndex { i, j, k, dim });
            }
        }
        let mult = QMat::from_triplets(
            dim,
            dim * dim,
            structure
                .iter()
                .map(|(i, j, k, c)| (*k, i * dim + j, c.clone())),
        );
        let alg = AlgebraPresentation { labels, mult, unit };
        alg.validate()?;
        Ok(alg)
    }

    fn validate(&self) -> Result<(), ModuleError> {
        let dim = self.dim();
        let id = QMat::identity(dim);
        // Associativity: m(m ⊗ id) = m(id ⊗ m) on A⊗A⊗A.
        let lhs = self.mult.mul(&self.mult.kronecker(&id));
        let rhs = self.mult.mul(&id.kronecker(&self.mult));
        if !lhs.sub(&rhs).is_zero() {
            let diff = lhs.sub(&rhs);
            let (_, col, _) = diff.iter().next().expect("nonzero difference");
            let i = col / (dim * dim);
            let j = (col / dim) % dim;
            let k = col % dim;
            return Err(ModuleError::NotAssociative { i, j, k });
        }
        // Unit laws: m(u ⊗ id) = id = m(id ⊗ u).
        let u = self.unit_matrix();
        let left = self.mult.mul(&u.kronecker(&id));
        if !left.sub(&id).is_zero() {
            let (_, i, _) = left.sub(&id).iter().next().unwrap();
            return Err(ModuleError::UnitLaw { i, side: "left" });
        }
        let right = self.mult.mul(&id.kronecker(&u));
        if !right.sub(&id).is_zero() {
            let (_, i, _) = right.sub(&id).iter().next().unwrap();
            return Err(ModuleError::UnitLaw { i, side: "right" });
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Multiplication as a `dim × dim²` matrix.
    pub fn mult(&self) -> &QMat {
        &self.mult
    }

    pub fn unit(&self) -> &[Q] {
        &self.unit
    }

    /// The unit as a `dim × 1` matrix.
    pub fn unit_matrix(&self) -> QMat {
        QMat::from_fn(self.dim(), 1, |i, _| self.unit[i].clone())
    }

    /// The ground field as an algebra.
    pub fn scalar() -> Self {
        AlgebraPresentation::new(vec!["1".into()], &[(0, 0, 0, Q::one())], vec![Q::one()])
            .expect("scalar algebra is valid")
    }

    /// Dual numbers `k[x]/(x²)` with basis `{1, x}`.
    pub fn dual_numbers() -> Self {
        AlgebraPresentation::new(
            vec!["1".into(), "x".into()],
            &[
                (0, 0, 0, Q::one()),
                (0, 1, 1, Q::one()),
                (1, 0, 1, Q::one()),
            ],
            vec![Q::one(), Q::zero()],
        )
        .expect("dual numbers are valid")
    }

    /// Group algebra of a product of cyclic groups with the given orders;
    /// basis = group elements, labeled multiplicatively (`e`, `g0`, `g0^2`,
    /// `g0*g1`, …).
    pub fn group_algebra(orders: &[usize]) -> Self {
        assert!(!orders.is_empty(), "need at least one cyclic factor");
        assert!(orders.iter().all(|&o| o >= 1), "orders must be positive");
        let dim: usize = orders.iter().product();
        let exponents = |mut idx: usize| -> Vec<usize> {
            let mut e = vec![0; orders.len()];
            for (pos, &o) in orders.iter().enumerate().rev() {
                e[pos] = idx % o;
                idx /= o;
            }
            e
        };
        let index = |e: &[usize]| -> usize {
            let mut idx = 0;
            for (pos, &o) in orders.iter().enumerate() {
                idx = idx * o + e[pos] % o;
            }
            idx
        };
        let labels: Vec<String> = (0..dim)
            .map(|i| {
                let e = exponents(i);
                let parts: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &a)| a > 0)
                    .map(|(pos, &a)| {
                        if a == 1 {
                            format!("g{pos}")
                        } else {
                            format!("g{pos}^{a}")
                        }
                    })
                    .collect();
                if parts.is_empty() {
                    "e".to_string()
                } else {
                    parts.join("*")
                }
            })
            .collect();
        let mut structure = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let (ei, ej) = (exponents(i), exponents(j));
                let sum: Vec<usize> = ei
                    .iter()
                    .zip(&ej)
                    .zip(orders)
                    .map(|((a, b), &o)| (a + b) % o)
                    .collect();
                structure.push((i, j, index(&sum), Q::one()));
            }
        }
        let mut unit = vec![Q::zero(); dim];
        unit[0] = Q::one();
        AlgebraPresentation::new(labels, &structure, unit).expect("group algebra is valid")
    }

    /// Direct product `A × B` (componentwise operations, unit `(1, 1)`).
    pub fn product(a: &AlgebraPresentation, b: &AlgebraPresentation) -> Self {
        let (da, db) = (a.dim(), b.dim());
        let labels: Vec<String> = a
            .labels
            .iter()
            .map(|l| format!("({l},0)"))
            .chain(b.labels.iter().map(|l| format!("(0,{l})")))
            .collect();
        let mut structure = Vec::new();
        for (r, c, v) in a.mult.iter() {
            let (i, j) = (c / da, c % da);
            structure.push((i, j, r, v.clone()));
        }
        for (r, c, v) in b.mult.iter() {
            let (i, j) = (c / db, c % db);
            structure.push((da + i, da + j, da + r, v.clone()));
        }
        let unit: Vec<Q> = a.unit.iter().chain(&b.unit).cloned().collect();
        AlgebraPresentation::new(labels, &structure, unit)
            .expect("product of valid algebras is valid")
    }

    /// The matrix algebra `M_n` on the basis of matrix units `e_{ij}`.
    pub fn matrix_algebra(n: usize) -> Self {
        assert!(n >= 1);
        let dim = n * n;
        let labels: Vec<String> = (0..n)
            .flat_map(|i| (0..n).map(move |j| format!("e{i}{j}")))
            .collect();
        let mut structure = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    // e_{ij} · e_{jk} = e_{ik}
                    structure.push((i * n + j, j * n + k, i * n + k, Q::one()));
                }
            }
        }
        let mut unit = vec![Q::zero(); dim];
        for i in 0..n {
            unit[i * n + i] = Q::one();
        }
        AlgebraPresentation::new(labels, &structure, unit).expect("matrix algebra is valid")
    }
}

/// A finite-dimensional coassociative counital ℚ-coalgebra.
#[derive(Debug, Clone)]
pub struct CoalgebraPresentation {
    labels: Vec<String>,
    /// Comultiplication `C → C ⊗ C` as a `dim² × dim` matrix (row `i·dim+j`
    /// is the `e_i ⊗ e_j` coefficient).
    comult: QMat,
    /// Counit `C → k` as a `1 × dim` matrix.
    counit: QMat,
}

impl CoalgebraPresentation {
    pub fn new(labels: Vec<String>, comult: QMat, counit: QMat) -> Result<Self, ModuleError> {
        let dim = labels.len();
        assert!(dim > 0);
        if comult.rows() != dim * dim || comult.cols() != dim {
            return Err(ModuleError::Dimension(format!(
                "comultiplication is {}x{}, expected {}x{dim}",
                comult.rows(),
                comult.cols(),
                dim * dim
            )));
        }
        if counit.rows() != 1 || counit.cols() != dim {
            return Err(ModuleError::Dimension(format!(
                "counit is {}x{}, expected 1x{dim}",
                counit.rows(),
                counit.cols()
            )));
        }
        let c = CoalgebraPresentation {
            labels,
            comult,
            counit,
        };
        c.validate()?;
        Ok(c)
    }

    fn validate(&self) -> Result<(), ModuleError> {
        let dim = self.dim();
        let id = QMat::identity(dim);
        // Coassociativity: (Δ ⊗ id)Δ = (id ⊗ Δ)Δ.
        let lhs = self.comult.kronecker(&id).mul(&self.comult);
        let rhs = id.kronecker(&self.comult).mul(&self.comult);
        if !lhs.sub(&rhs).is_zero() {
            return Err(ModuleError::NotCoassociative);
        }
        // Counit laws: (ε ⊗ id)Δ = id = (id ⊗ ε)Δ.
        let left = self.counit.kronecker(&id).mul(&self.comult);
        if !left.sub(&id).is_zero() {
            return Err(ModuleError::CounitLaw { side: "left" });
        }
        let right = id.kronecker(&self.counit).mul(&self.comult);
        if !right.sub(&id).is_zero() {
            return Err(ModuleError::CounitLaw { side: "right" });
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn comult(&self) -> &QMat {
        &self.comult
    }

    pub fn counit(&self) -> &QMat {
        &self.counit
    }

    /// The dual coalgebra of a finite-dimensional algebra on the dual
    /// basis: `Δ = mᵀ`, `ε = unitᵀ`.
    pub fn dual_of(a: &AlgebraPresentation) -> Self {
        let labels = a.labels().iter().map(|l| format!("{l}^")).collect();
        CoalgebraPresentation::new(labels, a.mult().transpose(), a.unit_matrix().transpose())
            .expect("dual of a valid algebra is valid")
    }

    /// The group-like coalgebra on the given labels: `Δ(g) = g ⊗ g`,
    /// `ε(g) = 1`. (The coalgebra of a group algebra.)
    pub fn group_like(labels: Vec<String>) -> Self {
        let dim = labels.len();
        let comult =
            QMat::from_triplets(dim * dim, dim, (0..dim).map(|g| (g * dim + g, g, Q::one())));
        let counit = QMat::from_fn(1, dim, |_, _| Q::one());
        CoalgebraPresentation::new(labels, comult, counit).expect("group-like coalgebra is valid")
    }
}

// ---------------------------------------------------------------------------
// Cyclic module representations.
// ---------------------------------------------------------------------------

/// Functor variance of a representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variance {
    /// Contravariant: faces map level `n+1` to `n` (chain side);
    /// `rep(f ∘ g) = rep(g) · rep(f)`.
    Cyclic,
    /// Covariant: faces map level `n` to `n+1` (cochain side);
    /// `rep(f ∘ g) = rep(f) · rep(g)`.
    Cocyclic,
}

/// A representation of the cyclic index category truncated at level
/// `truncation`: spaces of dimension `dims[n]` for `n ≤ truncation` and one
/// matrix per generator, oriented by [`Variance`].
#[derive(Debug, Clone)]
pub struct CyclicModuleRep {
    variance: Variance,
    truncation: usize,
    dims: Vec<usize>,
    /// `faces[n][j]` represents `∂^n_j` (needs `n+1 ≤ truncation`).
    faces: Vec<Vec<QMat>>,
    /// `degens[n][i]` represents `σ^n_i` (needs `n+1 ≤ truncation`).
    degens: Vec<Vec<QMat>>,
    /// `cycs[n]` represents `τ_n`.
    cycs: Vec<QMat>,
}

impl CyclicModuleRep {
    /// Validates all matrix shapes against `dims` and the variance.
    pub fn new(
        variance: Variance,
        dims: Vec<usize>,
        faces: Vec<Vec<QMat>>,
        degens: Vec<Vec<QMat>>,
        cycs: Vec<QMat>,
    ) -> Result<Self, ModuleError> {
        let truncation = dims.len().checked_sub(1).expect("need at least level 0");
        assert_eq!(faces.len(), truncation, "faces per consecutive level pair");
        assert_eq!(degens.len(), truncation, "degeneracies per pair");
        assert_eq!(cycs.len(), truncation + 1, "one rotation per level");
        let shape = |m: &QMat, rows: usize, cols: usize, gen: String| -> Result<(), ModuleError> {
            if m.rows() != rows || m.cols() != cols {
                Err(ModuleError::MatrixShape {
                    generator: gen,
                    got_rows: m.rows(),
                    got_cols: m.cols(),
                    want_rows: rows,
                    want_cols: cols,
                })
            } else {
                Ok(())
            }
        };
        for n in 0..truncation {
            assert_eq!(faces[n].len(), n + 2, "∂^{n}_j for j = 0..=n+1");
            assert_eq!(degens[n].len(), n + 1, "σ^{n}_i for i = 0..=n");
            for (j, f) in faces[n].iter().enumerate() {
                let (rows, cols) = match variance {
                    Variance::Cyclic => (dims[n], dims[n + 1]),
                    Variance::Cocyclic => (dims[n + 1], dims[n]),
                };
                shape(f, rows, cols, format!("d{n}_{j}"))?;
            }
            for (i, s) in degens[n].iter().enumerate() {
                let (rows, cols) = match variance {
                    Variance::Cyclic => (dims[n + 1], dims[n]),
                    Variance::Cocyclic => (dims[n], dims[n + 1]),
                };
                shape(s, rows, cols, format!("s{n}_{i}"))?;
            }
        }
        for (n, t) in cycs.iter().enumerate() {
            shape(t, dims[n], dims[n], format!("t{n}"))?;
        }
        Ok(CyclicModuleRep {
            variance,
            truncation,
            dims,
            faces,
            degens,
            cycs,
        })
    }

    pub fn variance(&self) -> Variance {
        self.variance
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn dim(&self, n: usize) -> usize {
        self.dims[n]
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Matrix of `∂^n_j`.
    pub fn face(&self, n: usize, j: usize) -> Result<&QMat, ModuleError> {
        if n + 1 > self.truncation {
            return Err(ModuleError::TruncationExceeded {
                level: n + 1,
                truncation: self.truncation,
            });
        }
        Ok(&self.faces[n][j])
    }

    /// Matrix of `σ^n_i`.
    pub fn degeneracy(&self, n: usize, i: usize) -> Result<&QMat, ModuleError> {
        if n + 1 > self.truncation {
            return Err(ModuleError::TruncationExceeded {
                level: n + 1,
                truncation: self.truncation,
            });
        }
        Ok(&self.degens[n][i])
    }

    /// Matrix of `τ_n` (power 1).
    pub fn rotation(&self, n: usize) -> Result<&QMat, ModuleError> {
        if n > self.truncation {
            return Err(ModuleError::TruncationExceeded {
                level: n,
                truncation: self.truncation,
            });
        }
        Ok(&self.cycs[n])
    }

    fn generator_matrix(&self, g: &Generator) -> Result<QMat, ModuleError> {
        match *g {
            Generator::Face { level, index } => self.face(level, index).cloned(),
            Generator::Degen { level, index } => self.degeneracy(level, index).cloned(),
            Generator::Cyc { level, power } => {
                let t = self.rotation(level)?;
                let mut acc = QMat::identity(self.dims[level]);
                for _ in 0..power {
                    acc = t.mul(&acc);
                }
                Ok(acc)
            }
        }
    }

    /// Evaluates a word of generators (outermost first) with the given
    /// endpoints. For the contravariant variance the result maps
    /// `X_target → X_source`; for the covariant one, `X_source → X_target`.
    pub fn evaluate_word(
        &self,
        word: &[Generator],
        source: usize,
        target: usize,
    ) -> Result<QMat, ModuleError> {
        let needed = word
            .iter()
            .map(|g| g.source().max(g.target()))
            .chain([source, target])
            .max()
            .unwrap();
        if needed > self.truncation {
            return Err(ModuleError::TruncationExceeded {
                level: needed,
                truncation: self.truncation,
            });
        }
        match self.variance {
            Variance::Cyclic => {
                let mut acc = QMat::identity(self.dims[target]);
                for g in word {
                    acc = self.generator_matrix(g)?.mul(&acc);
                }
                Ok(acc)
            }
            Variance::Cocyclic => {
                let mut acc = QMat::identity(self.dims[source]);
                for g in word.iter().rev() {
                    acc = self.generator_matrix(g)?.mul(&acc);
                }
                Ok(acc)
            }
        }
    }

    /// Evaluates a morphism through its normal-form word. Requires the
    /// normal form's top level to fit inside the truncation.
    pub fn evaluate(&self, f: &LambdaMorphism) -> Result<QMat, ModuleError> {
        self.evaluate_word(&f.to_word(), f.source(), f.target())
    }

    /// Checks every defining relation instance degreewise. Instances whose
    /// endpoints fit the truncation but whose words climb past it are
    /// counted as `skipped` rather than silently dropped.
    pub fn check_relations(&self) -> ModuleRelationReport {
        let mut report = ModuleRelationReport {
            checked: 0,
            skipped: 0,
            violations: Vec::new(),
        };
        for inst in relation_word_instances(self.truncation + 1) {
            if inst.source > self.truncation || inst.target > self.truncation {
                continue; // entirely outside the stored range
            }
            if inst.max_level() > self.truncation {
                report.skipped += 1;
                continue;
            }
            report.checked += 1;
            let lhs = self.evaluate_word(&inst.lhs, inst.source, inst.target);
            let rhs = self.evaluate_word(&inst.rhs, inst.source, inst.target);
            match (lhs, rhs) {
                (Ok(l), Ok(r)) => {
                    if !l.sub(&r).is_zero() {
                        report.violations.push(inst.description.clone());
                    }
                }
                (l, r) => report.violations.push(format!(
                    "{}: evaluation error {:?} / {:?}",
                    inst.description,
                    l.err(),
                    r.err()
                )),
            }
        }
        report
    }

    /// The dual representation: transposed matrices, flipped variance.
    pub fn dualize(&self) -> CyclicModuleRep {
        let flip = |m: &QMat| m.transpose();
        CyclicModuleRep {
            variance: match self.variance {
                Variance::Cyclic => Variance::Cocyclic,
                Variance::Cocyclic => Variance::Cyclic,
            },
            truncation: self.truncation,
            dims: self.dims.clone(),
            faces: self
                .faces
                .iter()
                .map(|row| row.iter().map(flip).collect())
                .collect(),
            degens: self
                .degens
                .iter()
                .map(|row| row.iter().map(flip).collect())
                .collect(),
            cycs: self.cycs.iter().map(flip).collect(),
        }
    }
}

/// Outcome of [`CyclicModuleRep::check_relations`].
#[derive(Debug, Clone)]
pub struct ModuleRelationReport {
    pub checked: usize,
    /// Relation instances whose endpoints fit the truncation but whose
    /// words would climb past it.
    pub skipped: usize,
    pub violations: Vec<String>,
}

impl ModuleRelationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

// ---------------------------------------------------------------------------
// Canonical representations.
// ---------------------------------------------------------------------------

/// Kronecker product of a list of matrices (first factor most significant).
fn kron_all(mats: &[QMat]) -> QMat {
    let mut acc = QMat::identity(1);
    for m in mats {
        acc = acc.kronecker(m);
    }
    acc
}

/// Permutation matrix on `dim^factors` basis tensors moving the last factor
/// to the front (`right = true`) or the first factor to the back.
fn rotation_matrix(dim: usize, factors: usize, right: bool) -> QMat {
    let total = dim.pow(factors as u32);
    let stride = dim.pow((factors - 1) as u32);
    QMat::from_triplets(
        total,
        total,
        (0..total).map(|old| {
            let new = if right {
                // (i_0, …, i_{k−1}) ↦ (i_{k−1}, i_0, …, i_{k−2})
                (old % dim) * stride + old / dim
            } else {
                // (i_0, …, i_{k−1}) ↦ (i_1, …, i_{k−1}, i_0)
                (old % stride) * dim + old / stride
            };
            (new, old, Q::one())
        }),
    )
}

/// The canonical contravariant representation on tensor powers
/// `X_n = A^{⊗(n+1)}`, truncated at level `truncation`.
///
/// * `∂^n_j` acts by multiplying factors `j` and `j+1` of `X_{n+1}`; the
///   last face wraps: factors `n+1` and `0` multiply (in that order) into
///   position 0.
/// * `σ^n_i` inserts the unit after factor `i` of `X_n`.
/// * `τ_n` moves the last factor to the front.
pub fn canonical_cyclic_module(a: &AlgebraPresentation, truncation: usize) -> CyclicModuleRep {
    let d = a.dim();
    let dims: Vec<usize> = (0..=truncation).map(|n| d.pow(n as u32 + 1)).collect();
    let mut faces = Vec::new();
    let mut degens = Vec::new();
    for n in 0..truncation {
        // Faces X_{n+1} = A^{⊗(n+2)} → X_n = A^{⊗(n+1)}.
        let mut row = Vec::new();
        for j in 0..=n {
            row.push(kron_all(&[
                QMat::identity(d.pow(j as u32)),
                a.mult().clone(),
                QMat::identity(d.pow((n - j) as u32)),
            ]));
        }
        // Wrap-around: rotate right, then multiply the first two factors.
        let d0 = kron_all(&[a.mult().clone(), QMat::identity(d.pow(n as u32))]);
        row.push(d0.mul(&rotation_matrix(d, n + 2, true)));
        faces.push(row);
        // Degeneracies X_n → X_{n+1} inserting the unit after factor i.
        let mut row = Vec::new();
        for i in 0..=n {
            row.push(kron_all(&[
                QMat::identity(d.pow(i as u32 + 1)),
                a.unit_matrix(),
                QMat::identity(d.pow((n - i) as u32)),
            ]));
        }
        degens.push(row);
    }
    let cycs: Vec<QMat> = (0..=truncation)
        .map(|n| rotation_matrix(d, n + 1, true))
        .collect();
    CyclicModuleRep::new(Variance::Cyclic, dims, faces, degens, cycs)
        .expect("canonical representation shapes are consistent")
}

/// The canonical covariant representation on tensor powers
/// `Y^n = C^{⊗(n+1)}` of a coalgebra, truncated at level `truncation`.
///
/// * `∂^n_j` comultiplies factor `j` of `Y^n` for `j ≤ n`; the last coface
///   comultiplies factor 0 and moves the first leg to the back.
/// * `σ^n_i` applies the counit to factor `i+1` of `Y^{n+1}`.
/// * `τ_n` moves the first factor to the back.
pub fn cocyclic_coalgebra_module(c: &CoalgebraPresentation, truncation: usize) -> CyclicModuleRep {
    let d = c.dim();
    let dims: Vec<usize> = (0..=truncation).map(|n| d.pow(n as u32 + 1)).collect();
    let mut faces = Vec::new();
    let mut degens = Vec::new();
    for n in 0..truncation {
        // Cofaces Y^n = C^{⊗(n+1)} → Y^{n+1} = C^{⊗(n+2)}.
        let mut row = Vec::new();
        for j in 0..=n {
            row.push(kron_all(&[
                QMat::identity(d.pow(j as u32)),
                c.comult().clone(),
                QMat::identity(d.pow((n - j) as u32)),
            ]));
        }
        // Last coface: comultiply factor 0, then rotate left.
        let d0 = kron_all(&[c.comult().clone(), QMat::identity(d.pow(n as u32))]);
        row.push(rotation_matrix(d, n + 2, false).mul(&d0));
        faces.push(row);
        // Codegeneracies Y^{n+1} → Y^n: counit on factor i+1.
        let mut row = Vec::new();
        for i in 0..=n {
            row.push(kron_all(&[
                QMat::identity(d.pow(i as u32 + 1)),
                c.counit().clone(),
                QMat::identity(d.pow((n - i) as u32)),
            ]));
        }
        degens.push(row);
    }
    let cycs: Vec<QMat> = (0..=truncation)
        .map(|n| rotation_matrix(d, n + 1, false))
        .collect();
    CyclicModuleRep::new(Variance::Cocyclic, dims, faces, degens, cycs)
        .expect("canonical representation shapes are consistent")
}

/// Levelwise hom of a covariant representation into a contravariant one:
/// `Z_n = Hom(X^n, Y_n)` with `Z(f)(φ) = Y(f) ∘ φ ∘ X(f)`, again
/// contravariant. Matrices are Kronecker products `Y(g) ⊗ X(g)ᵀ` (row-major
/// vectorization of `φ`).
pub fn diag_hom(
    x_cocyclic: &CyclicModuleRep,
    y_cyclic: &CyclicModuleRep,
) -> Result<CyclicModuleRep, ModuleError> {
    if x_cocyclic.variance() != Variance::Cocyclic {
        return Err(ModuleError::VarianceMismatch(
            "first argument must be covariant".into(),
        ));
    }
    if y_cyclic.variance() != Variance::Cyclic {
        return Err(ModuleError::VarianceMismatch(
            "second argument must be contravariant".into(),
        ));
    }
    if x_cocyclic.truncation() != y_cyclic.truncation() {
        return Err(ModuleError::TruncationMismatch(
            x_cocyclic.truncation(),
            y_cyclic.truncation(),
        ));
    }
    let nmax = x_cocyclic.truncation();
    let dims: Vec<usize> = (0..=nmax)
        .map(|n| y_cyclic.dim(n) * x_cocyclic.dim(n))
        .collect();
    let pair = |ym: &QMat, xm: &QMat| ym.kronecker(&xm.transpose());
    let mut faces = Vec::new();
    let mut degens = Vec::new();
    for n in 0..nmax {
        faces.push(
            (0..=n + 1)
                .map(|j| {
                    pair(
                        y_cyclic.face(n, j).expect("within truncation"),
                        x_cocyclic.face(n, j).expect("within truncation"),
                    )
                })
                .collect(),
        );
        degens.push(
            (0..=n)
                .map(|i| {
                    pair(
                        y_cyclic.degeneracy(n, i).expect("within truncation"),
                        x_cocyclic.degeneracy(n, i).expect("within truncation"),
                    )
                })
                .collect(),
        );
    }
    let cycs: Vec<QMat> = (0..=nmax)
        .map(|n| {
            pair(
                y_cyclic.rotation(n).expect("within truncation"),
                x_cocyclic.rotation(n).expect("within truncation"),
            )
        })
        .collect();
    CyclicModuleRep::new(Variance::Cyclic, dims, faces, degens, cycs)
}
