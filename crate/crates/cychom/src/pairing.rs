//! The pairing between a coalgebra acting on an algebra and traces on the
//! algebra.
//!
//! Data: an algebra `A`, a coalgebra `C`, and an action `▷ : C ⊗ A → A`
//! that *measures* `A`: `c ▷ (ab) = Σ (c⁽¹⁾ ▷ a)(c⁽²⁾ ▷ b)` and
//! `c ▷ 1 = ε(c) 1` ([`MeasuringAction`]). When `C` underlies a Hopf
//! algebra acting on `A`, [`EquivariantAction`] additionally validates the
//! Hopf axioms and the compatibility `h(c ▷ a) = h(c) ▷ a`
//! ([`EquivarianceMode::Verbatim`]; a diagonal variant is opt-in).
//!
//! From this data:
//!
//! * [`phi_map`] — the levelwise map `A^{⊗(n+1)} → Hom(C^{⊗(n+1)}, A^{⊗(n+1)})`
//!   sending a tensor to its pairwise action. It is certified to commute
//!   with **every** structure map of the two canonical representations; a
//!   violation names the offending generator.
//! * [`characteristic_map`] — pairs an invariant closed element
//!   `ξ ∈ C^{⊗(p+1)}` with a trace `ν` on `A` to the functional
//!   `a₀⊗…⊗a_p ↦ ν((c₀▷a₀)(c₁▷a₁)…(c_p▷a_p))`. The gates on `ξ` and `ν`
//!   are hard failures, and the output is re-certified to be invariant and
//!   closed in the dual complex of `A`.
//! * [`external_degree0`] — the independent degree-0 formula
//!   `a ↦ Σ ξ_c ν(c ▷ a)`; [`characteristic_map`] at `p = 0` must agree
//!   with it exactly.
//! * [`well_definedness_probe`] — perturbs `ξ` by seeded random
//!   coboundaries of the invariant complex and checks the output class is
//!   unchanged.
//! * [`s_compatibility_probe`] — transports classes through the
//!   periodicity operator on both sides and records whether they agree.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::module::{
    canonical_cyclic_module, cocyclic_coalgebra_module, diag_hom, AlgebraPresentation,
    CoalgebraPresentation, CyclicModuleRep, ModuleError, Variance,
};
use crate::qmat::{kernel_inclusion, QMat};
use crate::theories::{connes_model, hochschild_b, s_operator, signed_rotation, TheoryError};
use crate::Q;

#[derive(Debug, Error)]
pub enum PairingError {
    #[error("Hopf axiom violated: {0}")]
    HopfAxiom(&'static str),
    #[error("action axiom violated: {0}")]
    ActionAxiom(&'static str),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("pairing map fails to commute with generator {generator}")]
    NotChainMap { generator: String },
    #[error("the functional is not a trace: ν(ab) ≠ ν(ba)")]
    TraceGate,
    #[error("input at degree {degree} is not closed under the coalgebra-side differential")]
    CocycleGate { degree: usize },
    #[error("input at degree {degree} is not invariant under the signed rotation")]
    InvarianceGate { degree: usize },
    #[error("pairing output at degree {degree} failed its own certificate: {what}")]
    OutputCertificate { degree: usize, what: &'static str },
    #[error("representation pair is inconsistent: {0}")]
    RepPair(String),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Theory(#[from] TheoryError),
}

// ---------------------------------------------------------------------------
// Small tensor utilities.
// ---------------------------------------------------------------------------

/// The swap `V_l ⊗ V_r → V_r ⊗ V_l` on basis tensors.
fn tensor_swap(dl: usize, dr: usize) -> QMat {
    QMat::from_triplets(
        dl * dr,
        dl * dr,
        (0..dl).flat_map(|i| (0..dr).map(move |j| (j * dl + i, i * dr + j, Q::one()))),
    )
}

/// `k`-fold Kronecker power.
fn kron_pow(m: &QMat, k: usize) -> QMat {
    let mut acc = QMat::identity(1);
    for _ in 0..k {
        acc = acc.kronecker(m);
    }
    acc
}

/// The permutation `C^{⊗k} ⊗ A^{⊗k} → (C ⊗ A)^{⊗k}` that interleaves the
/// factors pairwise.
fn interleave(dc: usize, da: usize, k: usize) -> QMat {
    let ck = dc.pow(k as u32);
    let ak = da.pow(k as u32);
    let total = ck * ak;
    QMat::from_triplets(
        total,
        total,
        (0..total).map(|old| {
            let (mut x, mut a) = (old / ak, old % ak);
            let mut xd = vec![0usize; k];
            let mut ad = vec![0usize; k];
            for i in (0..k).rev() {
                xd[i] = x % dc;
                x /= dc;
                ad[i] = a % da;
                a /= da;
            }
            let mut new = 0usize;
            for i in 0..k {
                new = new * (dc * da) + (xd[i] * da + ad[i]);
            }
            (new, old, Q::one())
        }),
    )
}

// ---------------------------------------------------------------------------
// Hopf algebras.
// ---------------------------------------------------------------------------

/// A finite-dimensional Hopf algebra: compatible algebra and coalgebra
/// structures on the same basis plus an antipode. All axioms are verified
/// exactly at construction.
#[derive(Debug, Clone)]
pub struct HopfAlgebraPresentation {
    algebra: AlgebraPresentation,
    coalgebra: CoalgebraPresentation,
    antipode: QMat,
}

impl HopfAlgebraPresentation {
    pub fn new(
        algebra: AlgebraPresentation,
        coalgebra: CoalgebraPresentation,
        antipode: QMat,
    ) -> Result<Self, PairingError> {
        let d = algebra.dim();
        if coalgebra.dim() != d {
            return Err(PairingError::Dimension(format!(
                "algebra dimension {} vs coalgebra dimension {}",
                d,
                coalgebra.dim()
            )));
        }
        if antipode.rows() != d || antipode.cols() != d {
            return Err(PairingError::Dimension(format!(
                "antipode must be {d}×{d}, got {}×{}",
                antipode.rows(),
                antipode.cols()
            )));
        }
        let m = algebra.mult();
        let u = algebra.unit_matrix();
        let delta = coalgebra.comult();
        let eps = coalgebra.counit();
        let id = QMat::identity(d);
        // Δ(ab) = Δ(a)Δ(b).
        let lhs = delta.mul(m);
        let mm = m.kronecker(m);
        let mid = id.kronecker(&tensor_swap(d, d)).kronecker(&id);
        let dd = delta.kronecker(delta);
        if lhs != mm.mul(&mid).mul(&dd) {
            return Err(PairingError::HopfAxiom(
                "comultiplication is not an algebra morphism",
            ));
        }
        // ε(ab) = ε(a)ε(b), Δ(1) = 1⊗1, ε(1) = 1.
        if eps.mul(m) != eps.kronecker(eps) {
            return Err(PairingError::HopfAxiom("counit is not an algebra morphism"));
        }
        if delta.mul(&u) != u.kronecker(&u) {
            return Err(PairingError::HopfAxiom(
                "comultiplication of the unit is not grouplike",
            ));
        }
        if eps.mul(&u) != QMat::identity(1) {
            return Err(PairingError::HopfAxiom("counit of the unit is not 1"));
        }
        // m(S⊗1)Δ = uε = m(1⊗S)Δ.
        let target = u.mul(eps);
        if m.mul(&antipode.kronecker(&id)).mul(delta) != target {
            return Err(PairingError::HopfAxiom("antipode fails on the left"));
        }
        if m.mul(&id.kronecker(&antipode)).mul(delta) != target {
            return Err(PairingError::HopfAxiom("antipode fails on the right"));
        }
        Ok(HopfAlgebraPresentation {
            algebra,
            coalgebra,
            antipode,
        })
    }

    /// Group Hopf algebra of a product of cyclic groups: grouplike
    /// comultiplication, antipode `g ↦ g⁻¹`.
    pub fn group_hopf(orders: &[usize]) -> Self {
        let algebra = AlgebraPresentation::group_algebra(orders);
        let coalgebra = CoalgebraPresentation::group_like(algebra.labels().to_vec());
        let dim = algebra.dim();
        // Invert exponentwise in the mixed-radix layout (first factor most
        // significant), matching the group algebra's basis order.
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
        let antipode = QMat::from_triplets(
            dim,
            dim,
            (0..dim).map(|i| {
                let inv: Vec<usize> = exponents(i)
                    .iter()
                    .zip(orders)
                    .map(|(&a, &o)| (o - a) % o)
                    .collect();
                (index(&inv), i, Q::one())
            }),
        );
        HopfAlgebraPresentation::new(algebra, coalgebra, antipode)
            .expect("group Hopf algebra satisfies the axioms")
    }

    pub fn algebra(&self) -> &AlgebraPresentation {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &CoalgebraPresentation {
        &self.coalgebra
    }

    pub fn antipode(&self) -> &QMat {
        &self.antipode
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

// ---------------------------------------------------------------------------
// Actions.
// ---------------------------------------------------------------------------

/// A coalgebra action `▷ : C ⊗ A → A` that measures the algebra:
/// `c ▷ (ab) = Σ (c⁽¹⁾ ▷ a)(c⁽²⁾ ▷ b)` and `c ▷ 1 = ε(c) 1`, both verified
/// exactly at construction.
#[derive(Debug, Clone)]
pub struct MeasuringAction {
    coalgebra: CoalgebraPresentation,
    algebra: AlgebraPresentation,
    /// `dim A × (dim C · dim A)`; column `c·dimA + a` holds `c ▷ e_a`.
    act: QMat,
}

impl MeasuringAction {
    pub fn new(
        coalgebra: CoalgebraPresentation,
        algebra: AlgebraPresentation,
        act: QMat,
    ) -> Result<Self, PairingError> {
        let (dc, da) = (coalgebra.dim(), algebra.dim());
        if act.rows() != da || act.cols() != dc * da {
            return Err(PairingError::Dimension(format!(
                "action must be {da}×{}, got {}×{}",
                dc * da,
                act.rows(),
                act.cols()
            )));
        }
        let m = algebra.mult();
        let u = algebra.unit_matrix();
        let delta = coalgebra.comult();
        let eps = coalgebra.counit();
        let idc = QMat::identity(dc);
        let ida = QMat::identity(da);
        // c ▷ (ab) = Σ (c⁽¹⁾ ▷ a)(c⁽²⁾ ▷ b).
        let lhs = act.mul(&idc.kronecker(m));
        let spread = delta.kronecker(&ida).kronecker(&ida);
        let mid = idc.kronecker(&tensor_swap(dc, da)).kronecker(&ida);
        let rhs = m.mul(&act.kronecker(&act)).mul(&mid).mul(&spread);
        if lhs != rhs {
            return Err(PairingError::ActionAxiom(
                "action does not distribute over products through the comultiplication",
            ));
        }
        // c ▷ 1 = ε(c) 1.
        if act.mul(&idc.kronecker(&u)) != u.mul(eps) {
            return Err(PairingError::ActionAxiom(
                "action on the unit does not factor through the counit",
            ));
        }
        Ok(MeasuringAction {
            coalgebra,
            algebra,
            act,
        })
    }

    /// The trivial action `c ▷ a = ε(c) a`, which measures any algebra.
    pub fn counit_action(coalgebra: CoalgebraPresentation, algebra: AlgebraPresentation) -> Self {
        let eps = coalgebra.counit().clone();
        let act = eps.kronecker(&QMat::identity(algebra.dim()));
        MeasuringAction::new(coalgebra, algebra, act).expect("counit action always measures")
    }

    pub fn coalgebra(&self) -> &CoalgebraPresentation {
        &self.coalgebra
    }

    pub fn algebra(&self) -> &AlgebraPresentation {
        &self.algebra
    }

    pub fn act(&self) -> &QMat {
        &self.act
    }
}

/// How a Hopf action is required to interact with itself when the acting
/// coalgebra is the Hopf algebra's own.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquivarianceMode {
    /// `h(c ▷ a) = (hc) ▷ a` — the action of the product is iterated
    /// action, verbatim.
    Verbatim,
    /// `h(c ▷ a) = Σ (h⁽¹⁾ c) ▷ (h⁽²⁾ ▷ a)` — the product acts through the
    /// diagonal.
    Diagonal,
}

/// A Hopf algebra acting on an algebra: the underlying coalgebra measures
/// the algebra, the unit acts as the identity, and products act according
/// to the selected [`EquivarianceMode`]. All three layers are verified at
/// construction.
#[derive(Debug, Clone)]
pub struct EquivariantAction {
    hopf: HopfAlgebraPresentation,
    measuring: MeasuringAction,
    mode: EquivarianceMode,
}

impl EquivariantAction {
    pub fn new(
        hopf: HopfAlgebraPresentation,
        algebra: AlgebraPresentation,
        act: QMat,
        mode: EquivarianceMode,
    ) -> Result<Self, PairingError> {
        let measuring = MeasuringAction::new(hopf.coalgebra().clone(), algebra, act)?;
        let (dh, da) = (hopf.dim(), measuring.algebra.dim());
        let act = &measuring.act;
        let m = hopf.algebra().mult();
        let u = hopf.algebra().unit_matrix();
        let idh = QMat::identity(dh);
        let ida = QMat::identity(da);
        // 1 ▷ a = a.
        if act.mul(&u.kronecker(&ida)) != ida {
            return Err(PairingError::ActionAxiom(
                "the unit does not act as the identity",
            ));
        }
        let product_side = act.mul(&m.kronecker(&ida));
        match mode {
            EquivarianceMode::Verbatim => {
                if product_side != act.mul(&idh.kronecker(act)) {
                    return Err(PairingError::ActionAxiom(
                        "products do not act by iterated action (verbatim equivariance)",
                    ));
                }
            }
            EquivarianceMode::Diagonal => {
                let delta = hopf.coalgebra().comult();
                let spread = delta.kronecker(&idh).kronecker(&ida);
                let mid = idh.kronecker(&tensor_swap(dh, dh)).kronecker(&ida);
                let rhs = act.mul(&m.kronecker(act)).mul(&mid).mul(&spread);
                if act.mul(&idh.kronecker(act)) != rhs {
                    return Err(PairingError::ActionAxiom(
                        "products do not act through the diagonal (diagonal equivariance)",
                    ));
                }
            }
        }
        Ok(EquivariantAction {
            hopf,
            measuring,
            mode,
        })
    }

    /// The flagship small example: the order-2 group Hopf algebra acting on
    /// `k × k` by swapping the idempotents.
    pub fn swap_example() -> Self {
        let hopf = HopfAlgebraPresentation::group_hopf(&[2]);
        let scalar = AlgebraPresentation::scalar();
        let algebra = AlgebraPresentation::product(&scalar, &scalar);
        let swap = QMat::from_triplets(2, 2, [(0, 1, Q::one()), (1, 0, Q::one())]);
        let act = QMat::identity(2).hstack(&swap);
        EquivariantAction::new(hopf, algebra, act, EquivarianceMode::Verbatim)
            .expect("swap action is equivariant")
    }

    /// The degenerate example: the trivial group acting on the ground
    /// field.
    pub fn trivial_example() -> Self {
        let hopf = HopfAlgebraPresentation::group_hopf(&[1]);
        let algebra = AlgebraPresentation::scalar();
        let act = QMat::identity(1);
        EquivariantAction::new(hopf, algebra, act, EquivarianceMode::Verbatim)
            .expect("trivial action is equivariant")
    }

    pub fn hopf(&self) -> &HopfAlgebraPresentation {
        &self.hopf
    }

    pub fn measuring(&self) -> &MeasuringAction {
        &self.measuring
    }

    pub fn mode(&self) -> EquivarianceMode {
        self.mode
    }
}

// ---------------------------------------------------------------------------
// Representations.
// ---------------------------------------------------------------------------

/// The two canonical representations attached to an equivariant action
/// with trivial one-dimensional coefficients: the algebra side on tensor
/// powers of `A` and the coalgebra side on tensor powers of the Hopf
/// algebra's coalgebra. Both are re-verified against the defining
/// relations before being returned.
pub fn hopf_cyclic_rep(
    action: &EquivariantAction,
    truncation: usize,
) -> Result<(CyclicModuleRep, CyclicModuleRep), PairingError> {
    let a_side = canonical_cyclic_module(action.measuring().algebra(), truncation);
    let c_side = cocyclic_coalgebra_module(action.measuring().coalgebra(), truncation);
    validated_rep_pair(&a_side, &c_side)?;
    Ok((a_side, c_side))
}

/// Checks that a user-supplied representation pair is usable for the
/// pairing: correct variances, equal truncations, matching levelwise
/// dimensions where required, and clean defining relations.
pub fn validated_rep_pair(
    a_side: &CyclicModuleRep,
    c_side: &CyclicModuleRep,
) -> Result<(), PairingError> {
    if a_side.variance() != Variance::Cyclic {
        return Err(PairingError::RepPair(
            "algebra side must be contravariant".into(),
        ));
    }
    if c_side.variance() != Variance::Cocyclic {
        return Err(PairingError::RepPair(
            "coalgebra side must be covariant".into(),
        ));
    }
    if a_side.truncation() != c_side.truncation() {
        return Err(PairingError::RepPair(format!(
            "truncations differ: {} vs {}",
            a_side.truncation(),
            c_side.truncation()
        )));
    }
    for (name, rep) in [("algebra side", a_side), ("coalgebra side", c_side)] {
        let report = rep.check_relations();
        if !report.is_clean() {
            return Err(PairingError::RepPair(format!(
                "{name} violates {} defining relation(s), first: {}",
                report.violations.len(),
                report.violations[0]
            )));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// The pairing map φ.
// ---------------------------------------------------------------------------

/// The levelwise pairing `φ_n : A^{⊗(n+1)} → Hom(C^{⊗(n+1)}, A^{⊗(n+1)})`
/// with every structure-map compatibility certified.
pub struct PhiMap {
    pub a_side: CyclicModuleRep,
    pub c_side: CyclicModuleRep,
    /// The levelwise hom representation the map lands in.
    pub hom: CyclicModuleRep,
    /// `maps[n]`: `dim(hom_n) × dim(A^{⊗(n+1)})`.
    pub maps: Vec<QMat>,
    /// How many generator compatibilities were verified.
    pub checked_generators: usize,
}

/// The matrix of the pairwise action
/// `C^{⊗k} ⊗ A^{⊗k} → A^{⊗k}`, `c⃗ ⊗ a⃗ ↦ (c_0 ▷ a_0) ⊗ … ⊗ (c_{k−1} ▷ a_{k−1})`.
fn pairwise_action(action: &MeasuringAction, k: usize) -> QMat {
    let dc = action.coalgebra().dim();
    let da = action.algebra().dim();
    kron_pow(action.act(), k).mul(&interleave(dc, da, k))
}

/// Builds φ on levels `0..=truncation` and certifies that it commutes with
/// every face, degeneracy, and rotation of the canonical representations.
/// The first failing generator, if any, is named in the error.
#[allow(clippy::needless_range_loop)] // levels index parallel map tables
pub fn phi_map(action: &MeasuringAction, truncation: usize) -> Result<PhiMap, PairingError> {
    let a_side = canonical_cyclic_module(action.algebra(), truncation);
    let c_side = cocyclic_coalgebra_module(action.coalgebra(), truncation);
    let hom = diag_hom(&c_side, &a_side)?;
    let da = action.algebra().dim();
    let mut maps = Vec::new();
    for n in 0..=truncation {
        let k = n + 1;
        let p = pairwise_action(action, k);
        let dx = c_side.dim(n);
        let dy = a_side.dim(n);
        debug_assert_eq!(p.rows(), dy);
        debug_assert_eq!(p.cols(), dx * dy);
        debug_assert_eq!(dy, da.pow(k as u32));
        // vec_r(F_a)[y·dx + x] = P[y, x·dy + a].
        maps.push(QMat::from_triplets(
            dy * dx,
            dy,
            p.iter().map(|(y, col, v)| {
                let (x, a) = (col / dy, col % dy);
                (y * dx + x, a, v.clone())
            }),
        ));
    }
    let mut checked = 0usize;
    let mut check = |name: String, lhs: &QMat, rhs: &QMat| -> Result<(), PairingError> {
        if lhs != rhs {
            return Err(PairingError::NotChainMap { generator: name });
        }
        checked += 1;
        Ok(())
    };
    for n in 0..truncation {
        for j in 0..=n + 1 {
            check(
                format!("d{n}_{j}"),
                &maps[n].mul(a_side.face(n, j)?),
                &hom.face(n, j)?.mul(&maps[n + 1]),
            )?;
        }
        for i in 0..=n {
            check(
                format!("s{n}_{i}"),
                &maps[n + 1].mul(a_side.degeneracy(n, i)?),
                &hom.degeneracy(n, i)?.mul(&maps[n]),
            )?;
        }
    }
    for n in 0..=truncation {
        check(
            format!("t{n}"),
            &maps[n].mul(a_side.rotation(n)?),
            &hom.rotation(n)?.mul(&maps[n]),
        )?;
    }
    Ok(PhiMap {
        a_side,
        c_side,
        hom,
        maps,
        checked_generators: checked,
    })
}

// ---------------------------------------------------------------------------
// Gates.
// ---------------------------------------------------------------------------

/// Is `ν(ab) = ν(ba)` for all basis elements?
pub fn is_trace(algebra: &AlgebraPresentation, nu: &[Q]) -> bool {
    let d = algebra.dim();
    if nu.len() != d {
        return false;
    }
    let row = QMat::from_fn(1, d, |_, j| nu[j].clone());
    let m = algebra.mult();
    row.mul(m) == row.mul(m).mul(&tensor_swap(d, d))
}

/// Basis of the gated degree-`p` space on the coalgebra side: elements of
/// `C^{⊗(p+1)}` that are invariant under the signed rotation **and**
/// closed under the coalgebra-side differential.
pub fn gated_cocycles(c_side: &CyclicModuleRep, p: usize) -> Result<Vec<Vec<Q>>, PairingError> {
    let one_minus = QMat::identity(c_side.dim(p)).sub(&signed_rotation(c_side, p)?);
    let b = hochschild_b(c_side, p)?;
    Ok(one_minus.vstack(&b).kernel_basis())
}

fn gate_input(c_side: &CyclicModuleRep, p: usize, xi: &[Q]) -> Result<(), PairingError> {
    if xi.len() != c_side.dim(p) {
        return Err(PairingError::Dimension(format!(
            "element at degree {p} must have length {}, got {}",
            c_side.dim(p),
            xi.len()
        )));
    }
    let rotated = signed_rotation(c_side, p)?.mul_vec(xi);
    if rotated.as_slice() != xi {
        return Err(PairingError::InvarianceGate { degree: p });
    }
    if !hochschild_b(c_side, p)?.mul_vec(xi).iter().all(Q::is_zero) {
        return Err(PairingError::CocycleGate { degree: p });
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// The characteristic map.
// ---------------------------------------------------------------------------

/// Multiplication collapse `A^{⊗(p+1)} → A` as iterated trailing faces:
/// right-bracketed full product.
fn collapse_product(a_side: &CyclicModuleRep, p: usize) -> Result<QMat, PairingError> {
    let mut acc = QMat::identity(a_side.dim(0));
    for k in 0..p {
        acc = acc.mul(a_side.face(k, k)?);
    }
    Ok(acc)
}

/// Pairs a gated element `ξ ∈ C^{⊗(p+1)}` with a trace `ν` on `A`:
///
/// `(ξ ⌣ ν)(a₀ ⊗ … ⊗ a_p) = Σ ν((c₀ ▷ a₀)(c₁ ▷ a₁)…(c_p ▷ a_p))`
///
/// summed over the tensor components of `ξ`. Hard gates: `ν` must be a
/// trace, `ξ` must be invariant under the signed rotation and closed. The
/// output functional is re-certified to be invariant and closed in the
/// dual complex of the algebra side; failures are errors, never silently
/// wrong classes.
pub fn characteristic_map(
    action: &MeasuringAction,
    p: usize,
    xi: &[Q],
    nu: &[Q],
) -> Result<Vec<Q>, PairingError> {
    if !is_trace(action.algebra(), nu) {
        return Err(PairingError::TraceGate);
    }
    let a_side = canonical_cyclic_module(action.algebra(), p + 1);
    let c_side = cocyclic_coalgebra_module(action.coalgebra(), p + 1);
    gate_input(&c_side, p, xi)?;
    let dy = a_side.dim(p);
    let nu_row = QMat::from_fn(1, action.algebra().dim(), |_, j| nu[j].clone());
    // Row vector over C^{⊗(p+1)} ⊗ A^{⊗(p+1)}: ν ∘ collapse ∘ pairwise.
    let row = nu_row
        .mul(&collapse_product(&a_side, p)?)
        .mul(&pairwise_action(action, p + 1));
    let mut chi = vec![Q::zero(); dy];
    for (_, col, v) in row.iter() {
        let (x, a) = (col / dy, col % dy);
        if !xi[x].is_zero() {
            chi[a] += &xi[x] * v;
        }
    }
    // Certify the output in the dual cochain complex of the algebra side.
    let dual = a_side.dualize();
    if signed_rotation(&dual, p)?.mul_vec(&chi) != chi {
        return Err(PairingError::OutputCertificate {
            degree: p,
            what: "not invariant under the signed rotation",
        });
    }
    if !hochschild_b(&dual, p)?.mul_vec(&chi).iter().all(Q::is_zero) {
        return Err(PairingError::OutputCertificate {
            degree: p,
            what: "not closed",
        });
    }
    Ok(chi)
}

/// Independent degree-0 pairing: `(ξ ⌣ ν)(a) = Σ_c ξ_c · ν(c ▷ a)`.
/// [`characteristic_map`] at `p = 0` must agree with this exactly.
#[allow(clippy::needless_range_loop)] // triple index math over a basis grid
pub fn external_degree0(
    action: &MeasuringAction,
    xi: &[Q],
    nu: &[Q],
) -> Result<Vec<Q>, PairingError> {
    if !is_trace(action.algebra(), nu) {
        return Err(PairingError::TraceGate);
    }
    let (dc, da) = (action.coalgebra().dim(), action.algebra().dim());
    if xi.len() != dc {
        return Err(PairingError::Dimension(format!(
            "coalgebra element must have length {dc}, got {}",
            xi.len()
        )));
    }
    let mut out = vec![Q::zero(); da];
    for a in 0..da {
        let mut sum = Q::zero();
        for c in 0..dc {
            if xi[c].is_zero() {
                continue;
            }
            for b in 0..da {
                let coeff = action.act().get(b, c * da + a);
                if !coeff.is_zero() {
                    sum += &xi[c] * &coeff * &nu[b];
                }
            }
        }
        out[a] = sum;
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Probes.
// ---------------------------------------------------------------------------

/// Outcome of [`well_definedness_probe`].
#[derive(Debug, Clone)]
pub struct ProbeOutcome {
    pub trials: usize,
    pub passes: usize,
    /// True when the perturbation space at degree `p − 1` is zero, so the
    /// trials could not actually move the input.
    pub vacuous: bool,
}

impl ProbeOutcome {
    pub fn all_passed(&self) -> bool {
        self.passes == self.trials
    }
}

/// Perturbs `ξ` by random coboundaries of the invariant complex
/// (`ξ′ = ξ + b η` with `η` invariant at degree `p − 1`, drawn from a
/// seeded generator) and checks that the characteristic class is
/// unchanged in the λ-model of the algebra side's dual.
pub fn well_definedness_probe(
    action: &MeasuringAction,
    p: usize,
    xi: &[Q],
    nu: &[Q],
    trials: usize,
    seed: u64,
) -> Result<ProbeOutcome, PairingError> {
    let base = characteristic_map(action, p, xi, nu)?;
    let a_side = canonical_cyclic_module(action.algebra(), p + 1);
    let c_side = cocyclic_coalgebra_module(action.coalgebra(), p + 1);
    let model = connes_model(&a_side.dualize())?;
    // Invariant elements one degree below, if any.
    let perturbations = if p == 0 {
        QMat::zero(c_side.dim(0), 0)
    } else {
        let one_minus = QMat::identity(c_side.dim(p - 1)).sub(&signed_rotation(&c_side, p - 1)?);
        kernel_inclusion(&one_minus)
    };
    let vacuous = perturbations.cols() == 0;
    let b_below = if p == 0 {
        None
    } else {
        Some(hochschild_b(&c_side, p - 1)?)
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut passes = 0usize;
    for _ in 0..trials {
        let coeffs: Vec<Q> = (0..perturbations.cols())
            .map(|_| crate::qmat::qi(rng.random_range(-3..=3)))
            .collect();
        let eta = perturbations.mul_vec(&coeffs);
        let xi_pert: Vec<Q> = match &b_below {
            Some(b) => {
                let delta = b.mul_vec(&eta);
                xi.iter().zip(&delta).map(|(x, d)| x + d).collect()
            }
            None => xi.to_vec(),
        };
        let chi = characteristic_map(action, p, &xi_pert, nu)?;
        if model.classes_equal(p, &base, &chi)? {
            passes += 1;
        }
    }
    Ok(ProbeOutcome {
        trials,
        passes,
        vacuous,
    })
}

/// Outcome of [`s_compatibility_probe`]: whether pairing-then-shift agrees
/// with shift-then-pairing at the class level. Recorded, not asserted.
#[derive(Debug, Clone)]
pub struct SCompatReport {
    /// `[characteristic_map(S ξ)] = [S characteristic_map(ξ)]` in the
    /// λ-model of the algebra side's dual at degree `p + 2`.
    pub classes_equal: bool,
    /// Is the left side (pairing after shifting ξ) a trivial class?
    pub left_trivial: bool,
    /// Is the right side (shifting the paired class) a trivial class?
    pub right_trivial: bool,
}

/// Transports a gated class through the periodicity operator on both
/// sides — shift `ξ` on the coalgebra side then pair, versus pair then
/// shift on the algebra side — and records whether the two degree-`p+2`
/// classes agree.
pub fn s_compatibility_probe(
    action: &MeasuringAction,
    p: usize,
    xi: &[Q],
    nu: &[Q],
) -> Result<SCompatReport, PairingError> {
    let c_side = cocyclic_coalgebra_module(action.coalgebra(), p + 3);
    gate_input(&c_side, p, xi)?;
    let s_xi = s_operator(&c_side, p, xi)?;
    let left = characteristic_map(action, p + 2, &s_xi, nu)?;
    let chi = characteristic_map(action, p, xi, nu)?;
    let dual = canonical_cyclic_module(action.algebra(), p + 3).dualize();
    let right = s_operator(&dual, p, &chi)?;
    let model = connes_model(&dual)?;
    Ok(SCompatReport {
        classes_equal: model.classes_equal(p + 2, &left, &right)?,
        left_trivial: model.is_trivial_class(p + 2, &left)?,
        right_trivial: model.is_trivial_class(p + 2, &right)?,
    })
}
