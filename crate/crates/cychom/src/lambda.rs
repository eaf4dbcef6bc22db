//! The cyclic index category as a rewriting system.
//!
//! Objects are the finite cyclic ordinals `[n] = {0, …, n}`. Morphisms are
//! generated by faces `∂^n_j : [n] → [n+1]` (the monotone injection missing
//! `j`), degeneracies `σ^n_i : [n+1] → [n]` (the monotone surjection hitting
//! `i` twice), and rotations `τ_n : [n] → [n]` (`x ↦ x−1 mod n+1`), composed
//! as functions (right factor applied first).
//!
//! Every morphism has a unique normal form
//!
//! ```text
//!   σ_{r_1} ∘ … ∘ σ_{r_t} ∘ ∂_{s_k} ∘ … ∘ ∂_{s_1} ∘ τ^a
//! ```
//!
//! with `r_1 < … < r_t`, `s_1 < … < s_k`, `0 ≤ a ≤ n`, factoring through a
//! top object `[h]` (`h = n + k = m + t`), subject to the junction condition
//! that no degeneracy index `r` has `r` or `r+1` among the face indices —
//! otherwise the pair would cancel. [`LambdaMorphism`] stores exactly this
//! data; [`LambdaMorphism::compose`] normalizes words of generators by a
//! phased rewriting strategy (rotations pushed right, cancellation at
//! degeneracy–face junctions, sorted face and degeneracy words).

use std::fmt;

use itertools::Itertools;
use thiserror::Error;

/// Errors from morphism construction, composition, and parsing.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LambdaError {
    #[error(
        "not composable: left factor has source [{left_source}] but right factor has target [{right_target}]"
    )]
    NonComposable {
        left_source: usize,
        right_target: usize,
    },
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    #[error("invalid normal form data: {0}")]
    InvalidNormalForm(String),
    #[error("no transposed form exists for {0}")]
    NoTransposition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid interval representative: {0}")]
    InvalidInterval(String),
}

/// A single generator of the cyclic index category.
///
/// `level` fixes the objects: `Face { level: n, .. }` maps `[n] → [n+1]`,
/// `Degen { level: n, .. }` maps `[n+1] → [n]`, and `Cyc { level: n, .. }`
/// maps `[n] → [n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    /// `∂^n_j`: the monotone injection `[n] → [n+1]` whose image misses `j`.
    Face { level: usize, index: usize },
    /// `σ^n_i`: the monotone surjection `[n+1] → [n]` sending both `i` and
    /// `i+1` to `i`.
    Degen { level: usize, index: usize },
    /// `τ_n^a`: the rotation `x ↦ x − a mod (n+1)`.
    Cyc { level: usize, power: usize },
}

impl Generator {
    /// Object index of the domain.
    pub fn source(&self) -> usize {
        match *self {
            Generator::Face { level, .. } => level,
            Generator::Degen { level, .. } => level + 1,
            Generator::Cyc { level, .. } => level,
        }
    }

    /// Object index of the codomain.
    pub fn target(&self) -> usize {
        match *self {
            Generator::Face { level, .. } => level + 1,
            Generator::Degen { level, .. } => level,
            Generator::Cyc { level, .. } => level,
        }
    }

    /// Checks the index ranges: `0 ≤ j ≤ n+1` for faces, `0 ≤ i ≤ n` for
    /// degeneracies, `0 ≤ a ≤ n` for rotations.
    pub fn validate(&self) -> Result<(), LambdaError> {
        let ok = match *self {
            Generator::Face { level, index } => index <= level + 1,
            Generator::Degen { level, index } => index <= level,
            Generator::Cyc { level, power } => power <= level,
        };
        if ok {
            Ok(())
        } else {
            Err(LambdaError::InvalidGenerator(format!("{self}")))
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Generator::Face { level, index } => write!(f, "d{level}_{index}"),
            Generator::Degen { level, index } => write!(f, "s{level}_{index}"),
            Generator::Cyc { level, power } => write!(f, "t{level}^{power}"),
        }
    }
}

/// A morphism `[source] → [target]` in normal form.
///
/// `faces` is the strictly increasing set of values missed on the way up to
/// the top object, `degens` the strictly increasing set of collapsed
/// positions on the way back down, and `cyc` the rotation power applied
/// first. See the module docs for the exact word the fields denote.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LambdaMorphism {
    source: usize,
    target: usize,
    faces: Vec<usize>,
    degens: Vec<usize>,
    cyc: usize,
}

impl LambdaMorphism {
    /// Builds a morphism from normal-form data, validating every invariant:
    /// strictly ascending index sets in range, consistent top level, the
    /// junction condition, and the rotation power bound.
    pub fn new(
        source: usize,
        target: usize,
        faces: Vec<usize>,
        degens: Vec<usize>,
        cyc: usize,
    ) -> Result<Self, LambdaError> {
        let top = source + faces.len();
        if target + degens.len() != top {
            return Err(LambdaError::InvalidNormalForm(format!(
                "level bookkeeping: source {source} + {} faces != target {target} + {} degeneracies",
                faces.len(),
                degens.len()
            )));
        }
        for w in faces.windows(2) {
            if w[0] >= w[1] {
                return Err(LambdaError::InvalidNormalForm(format!(
                    "face indices not strictly ascending: {faces:?}"
                )));
            }
        }
        for w in degens.windows(2) {
            if w[0] >= w[1] {
                return Err(LambdaError::InvalidNormalForm(format!(
                    "degeneracy indices not strictly ascending: {degens:?}"
                )));
            }
        }
        if faces.last().is_some_and(|&s| s > top) {
            return Err(LambdaError::InvalidNormalForm(format!(
                "face index {} exceeds top level {top}",
                faces.last().unwrap()
            )));
        }
        if degens.last().is_some_and(|&r| r + 1 > top) {
            return Err(LambdaError::InvalidNormalForm(format!(
                "degeneracy index {} exceeds top level {top} minus one",
                degens.last().unwrap()
            )));
        }
        for &r in &degens {
            if faces.binary_search(&r).is_ok() || faces.binary_search(&(r + 1)).is_ok() {
                return Err(LambdaError::InvalidNormalForm(format!(
                    "junction condition violated: degeneracy {r} meets faces {faces:?}"
                )));
            }
        }
        if cyc > source {
            return Err(LambdaError::InvalidNormalForm(format!(
                "rotation power {cyc} exceeds source level {source}"
            )));
        }
        Ok(LambdaMorphism {
            source,
            target,
            faces,
            degens,
            cyc,
        })
    }

    /// The identity of `[n]`.
    pub fn identity(n: usize) -> Self {
        LambdaMorphism {
            source: n,
            target: n,
            faces: Vec::new(),
            degens: Vec::new(),
            cyc: 0,
        }
    }

    /// The face `∂^n_j : [n] → [n+1]`.
    pub fn face(n: usize, j: usize) -> Result<Self, LambdaError> {
        Generator::Face { level: n, index: j }.validate()?;
        Ok(LambdaMorphism {
            source: n,
            target: n + 1,
            faces: vec![j],
            degens: Vec::new(),
            cyc: 0,
        })
    }

    /// The degeneracy `σ^n_i : [n+1] → [n]`.
    pub fn degeneracy(n: usize, i: usize) -> Result<Self, LambdaError> {
        Generator::Degen { level: n, index: i }.validate()?;
        Ok(LambdaMorphism {
            source: n + 1,
            target: n,
            faces: Vec::new(),
            degens: vec![i],
            cyc: 0,
        })
    }

    /// The rotation `τ_n^a : [n] → [n]` (power reduced mod `n+1`).
    pub fn cyclic(n: usize, a: usize) -> Self {
        LambdaMorphism {
            source: n,
            target: n,
            faces: Vec::new(),
            degens: Vec::new(),
            cyc: a % (n + 1),
        }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    /// Face index set (values missed ascending to the top object).
    pub fn faces(&self) -> &[usize] {
        &self.faces
    }

    /// Degeneracy index set (positions collapsed descending from the top).
    pub fn degens(&self) -> &[usize] {
        &self.degens
    }

    /// Rotation power applied first, `0 ≤ cyc ≤ source`.
    pub fn cyc(&self) -> usize {
        self.cyc
    }

    /// The intermediate top object `[h]` the normal form factors through.
    pub fn top_level(&self) -> usize {
        self.source + self.faces.len()
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target
            && self.faces.is_empty()
            && self.degens.is_empty()
            && self.cyc == 0
    }

    /// Invertible morphisms are exactly the rotations (no faces, no
    /// degeneracies).
    pub fn is_isomorphism(&self) -> bool {
        self.faces.is_empty() && self.degens.is_empty()
    }

    /// Normal form as a word of generators, outermost (applied last) first.
    pub fn to_word(&self) -> Vec<Generator> {
        let mut word = Vec::with_capacity(self.degens.len() + self.faces.len() + 1);
        for (k, &r) in self.degens.iter().enumerate() {
            word.push(Generator::Degen {
                level: self.target + k,
                index: r,
            });
        }
        let h = self.top_level();
        for (j, &s) in self.faces.iter().rev().enumerate() {
            word.push(Generator::Face {
                level: h - 1 - j,
                index: s,
            });
        }
        if self.cyc != 0 {
            word.push(Generator::Cyc {
                level: self.source,
                power: self.cyc,
            });
        }
        word
    }

    /// Composes `self ∘ other` (apply `other` first) through the rewriting
    /// normalizer.
    pub fn compose(&self, other: &LambdaMorphism) -> Result<LambdaMorphism, LambdaError> {
        if self.source != other.target {
            return Err(LambdaError::NonComposable {
                left_source: self.source,
                right_target: other.target,
            });
        }
        let mut word = self.to_word();
        word.extend(other.to_word());
        normalize_word(word, other.source, self.target)
    }

    /// The underlying set map `[source] → [target]`.
    ///
    /// Note this forgets winding: distinct morphisms can induce the same set
    /// map (e.g. the two morphisms `[1] → [0]`). Use [`Self::as_interval`]
    /// for a faithful realization.
    pub fn underlying_map(&self) -> Vec<usize> {
        let n = self.source;
        let phi = self.simplicial_map();
        (0..=n)
            .map(|x| phi[(x + n + 1 - self.cyc) % (n + 1)])
            .collect()
    }

    /// The monotone map realized by the face-then-degeneracy part.
    fn simplicial_map(&self) -> Vec<usize> {
        let h = self.top_level();
        // Ascending complement of the face set realizes the injection.
        let mut up = Vec::with_capacity(self.source + 1);
        let mut fi = 0;
        for v in 0..=h {
            if fi < self.faces.len() && self.faces[fi] == v {
                fi += 1;
            } else {
                up.push(v);
            }
        }
        debug_assert_eq!(up.len(), self.source + 1);
        // The surjection subtracts the number of collapsed positions passed.
        up.into_iter()
            .map(|y| y - self.degens.iter().take_while(|&&r| r < y).count())
            .collect()
    }

    /// Faithful realization: the monotone-with-winding representative
    /// `F(0), …, F(source)` of the morphism, normalized so `0 ≤ F(0) ≤
    /// target`. The full map extends by `F(x + source + 1) = F(x) + target
    /// + 1`; two morphisms are equal iff these normalized windows agree.
    pub fn as_interval(&self) -> Vec<i64> {
        let n = self.source as i64;
        let m = self.target as i64;
        let phi = self.simplicial_map();
        let a = self.cyc as i64;
        let raw: Vec<i64> = (0..=n)
            .map(|x| {
                if x >= a {
                    phi[(x - a) as usize] as i64
                } else {
                    phi[(x - a + n + 1) as usize] as i64 - (m + 1)
                }
            })
            .collect();
        let shift = raw[0].div_euclid(m + 1) * (m + 1);
        raw.into_iter().map(|v| v - shift).collect()
    }

    /// Rebuilds the normal form from an interval representative: any window
    /// `F(0..=n)` with `F` monotone and `F(n) ≤ F(0) + m + 1` (shifting `F`
    /// by multiples of `m+1` gives the same morphism).
    pub fn from_interval(
        source: usize,
        target: usize,
        values: &[i64],
    ) -> Result<Self, LambdaError> {
        let n = source as i64;
        let m = target as i64;
        if values.len() != source + 1 {
            return Err(LambdaError::InvalidInterval(format!(
                "expected {} values, got {}",
                source + 1,
                values.len()
            )));
        }
        for w in values.windows(2) {
            if w[0] > w[1] {
                return Err(LambdaError::InvalidInterval(format!(
                    "window not monotone: {values:?}"
                )));
            }
        }
        if values[source] > values[0] + m + 1 {
            return Err(LambdaError::InvalidInterval(format!(
                "window spread exceeds one period: {values:?}"
            )));
        }
        let ext = |x: i64| -> i64 {
            let q = x.div_euclid(n + 1);
            values[x.rem_euclid(n + 1) as usize] + q * (m + 1)
        };
        let mut found: Option<(usize, Vec<usize>)> = None;
        for a in 0..=source {
            let t = ext(a as i64).div_euclid(m + 1);
            let lo = ext(a as i64) - t * (m + 1);
            let hi = ext(a as i64 + n) - t * (m + 1);
            debug_assert!(lo >= 0);
            if hi <= m {
                let phi: Vec<usize> = (0..=n)
                    .map(|x| (ext(a as i64 + x) - t * (m + 1)) as usize)
                    .collect();
                if found.is_some() {
                    return Err(LambdaError::InvalidInterval(
                        "ambiguous rotation extraction (internal invariant)".into(),
                    ));
                }
                found = Some((a, phi));
            }
        }
        let (a, phi) = found.ok_or_else(|| {
            LambdaError::InvalidInterval(format!("no valid rotation for window {values:?}"))
        })?;
        let (faces, degens) = simplicial_factorization(&phi, target);
        LambdaMorphism::new(source, target, faces, degens, a)
    }

    /// Parses a composite expression like `"s1_1 . d1_0 . t1^1"` (rightmost
    /// factor applied first; `id_n` allowed; `tN` means `tN^1`) and returns
    /// its normal form.
    pub fn parse(text: &str) -> Result<Self, LambdaError> {
        let tokens: Vec<&str> = text.split('.').map(str::trim).collect();
        if tokens.iter().any(|t| t.is_empty()) {
            return Err(LambdaError::Parse(format!(
                "empty factor in {text:?} (factors are separated by '.')"
            )));
        }
        let mut word = Vec::new();
        let mut endpoints: Option<(usize, usize)> = None; // (source, target) so far
        for tok in tokens {
            let gen = parse_token(tok)?;
            gen.validate()?;
            match endpoints {
                None => endpoints = Some((gen.source(), gen.target())),
                Some((src, tgt)) => {
                    if src != gen.target() {
                        return Err(LambdaError::Parse(format!(
                            "factor {tok} has target [{}], expected [{src}]",
                            gen.target()
                        )));
                    }
                    endpoints = Some((gen.source(), tgt));
                }
            }
            word.push(gen);
        }
        let (source, target) = endpoints.expect("at least one token");
        normalize_word(word, source, target)
    }
}

impl fmt::Display for LambdaMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = self.to_word();
        if word.is_empty() {
            write!(f, "id_{}", self.source)
        } else {
            write!(f, "{}", word.iter().map(|g| g.to_string()).join(" . "))
        }
    }
}

fn parse_token(tok: &str) -> Result<Generator, LambdaError> {
    let err = |msg: &str| LambdaError::Parse(format!("token {tok:?}: {msg}"));
    let num = |s: &str, what: &str| -> Result<usize, LambdaError> {
        s.parse::<usize>()
            .map_err(|_| err(&format!("bad {what} {s:?}")))
    };
    if let Some(rest) = tok.strip_prefix("id_") {
        let n = num(rest, "level")?;
        return Ok(Generator::Cyc { level: n, power: 0 });
    }
    if let Some(rest) = tok.strip_prefix('d') {
        let (lv, ix) = rest
            .split_once('_')
            .ok_or_else(|| err("expected d<level>_<index>"))?;
        return Ok(Generator::Face {
            level: num(lv, "level")?,
            index: num(ix, "index")?,
        });
    }
    if let Some(rest) = tok.strip_prefix('s') {
        let (lv, ix) = rest
            .split_once('_')
            .ok_or_else(|| err("expected s<level>_<index>"))?;
        return Ok(Generator::Degen {
            level: num(lv, "level")?,
            index: num(ix, "index")?,
        });
    }
    if let Some(rest) = tok.strip_prefix('t') {
        let (lv, pw) = match rest.split_once('^') {
            Some((lv, pw)) => (num(lv, "level")?, num(pw, "power")?),
            None => (num(rest, "level")?, 1),
        };
        return Ok(Generator::Cyc {
            level: lv,
            power: pw,
        });
    }
    Err(err("unknown generator kind (expected d, s, t, or id_)"))
}

// ---------------------------------------------------------------------------
// Transpositions: moving rotations past simplicial generators.
// ---------------------------------------------------------------------------

/// `τ_{n+1}^i ∘ ∂^n_j = ∂^n_q ∘ τ_n^c`: rotation pushed inside a face.
/// Returns `(q, c)`. Total.
fn cyc_past_face(n: usize, i: usize, j: usize) -> (usize, usize) {
    let (ni, ii, jj) = (n as i64, i as i64, j as i64);
    let q = (jj - ii).rem_euclid(ni + 2);
    let p = (ii - jj + q) / (ni + 2);
    debug_assert!(p == 0 || p == 1);
    let c = (ii - p).rem_euclid(ni + 1);
    (q as usize, c as usize)
}

/// `τ_n^s ∘ σ^n_t = σ^n_b ∘ τ_{n+1}^c`: rotation pushed inside a
/// degeneracy. Returns `(b, c)`. Total.
fn cyc_past_degen(n: usize, s: usize, t: usize) -> (usize, usize) {
    let (ni, si, ti) = (n as i64, s as i64, t as i64);
    let b = (ti - si).rem_euclid(ni + 1);
    let a = (b - ti + si) / (ni + 1);
    debug_assert!(a == 0 || a == 1);
    let c = (si + a).rem_euclid(ni + 2);
    (b as usize, c as usize)
}

/// `∂^n_j ∘ τ_n^i = τ_{n+1}^c ∘ ∂^n_q`: rotation pulled outside a face.
/// Returns `(c, q)`. Total.
fn cyc_before_face(n: usize, j: usize, i: usize) -> (usize, usize) {
    let (ni, ii, jj) = (n as i64, i as i64, j as i64);
    let q = (ii + jj).rem_euclid(ni + 1);
    let p = (ii + jj - q) / (ni + 1);
    debug_assert!(p == 0 || p == 1);
    ((ii + p) as usize, q as usize)
}

/// `σ^n_s ∘ τ_{n+1}^t = τ_n^c ∘ σ^n_b` when it exists: rotation pulled
/// outside a degeneracy. Returns `(c, b)`; `None` when the exchanged index
/// would fall outside the degeneracy range (those composites have no such
/// form).
fn cyc_before_degen(n: usize, s: usize, t: usize) -> Option<(usize, usize)> {
    let (ni, si, ti) = (n as i64, s as i64, t as i64);
    let b = (si + ti).rem_euclid(ni + 2);
    if b == ni + 1 {
        return None;
    }
    let a = (si + ti - b) / (ni + 2);
    debug_assert!(a == 0 || a == 1);
    let c = (ti - a).rem_euclid(ni + 1);
    Some((c as usize, b as usize))
}

/// Exchanges a simplicial generator past an inner rotation, pulling the
/// rotation to the outside: given `x ∘ t` returns `(t′, x′)` with
/// `x ∘ t = t′ ∘ x′`.
///
/// Defined for every face input; for a degeneracy input the exchanged pair
/// may not exist ([`LambdaError::NoTransposition`]).
pub fn omega(x: &Generator, t: &Generator) -> Result<(Generator, Generator), LambdaError> {
    t.validate()?;
    x.validate()?;
    let (tl, tp) = match *t {
        Generator::Cyc { level, power } => (level, power),
        _ => {
            return Err(LambdaError::InvalidGenerator(format!(
                "second factor must be a rotation, got {t}"
            )))
        }
    };
    match *x {
        Generator::Face { level, index } => {
            if tl != level {
                return Err(LambdaError::InvalidGenerator(format!(
                    "levels incompatible: {x} cannot follow {t}"
                )));
            }
            let (c, q) = cyc_before_face(level, index, tp);
            Ok((
                Generator::Cyc {
                    level: level + 1,
                    power: c,
                },
                Generator::Face { level, index: q },
            ))
        }
        Generator::Degen { level, index } => {
            if tl != level + 1 {
                return Err(LambdaError::InvalidGenerator(format!(
                    "levels incompatible: {x} cannot follow {t}"
                )));
            }
            let (c, b) = cyc_before_degen(level, index, tp)
                .ok_or_else(|| LambdaError::NoTransposition(format!("{x} . {t}")))?;
            Ok((
                Generator::Cyc { level, power: c },
                Generator::Degen { level, index: b },
            ))
        }
        Generator::Cyc { .. } => Err(LambdaError::InvalidGenerator(format!(
            "first factor must be a face or degeneracy, got {x}"
        ))),
    }
}

/// Inverse exchange: given `t ∘ x` returns `(x′, t′)` with
/// `t ∘ x = x′ ∘ t′`. Total on valid inputs.
pub fn omega_inv(t: &Generator, x: &Generator) -> Result<(Generator, Generator), LambdaError> {
    t.validate()?;
    x.validate()?;
    let (tl, tp) = match *t {
        Generator::Cyc { level, power } => (level, power),
        _ => {
            return Err(LambdaError::InvalidGenerator(format!(
                "first factor must be a rotation, got {t}"
            )))
        }
    };
    match *x {
        Generator::Face { level, index } => {
            if tl != level + 1 {
                return Err(LambdaError::InvalidGenerator(format!(
                    "levels incompatible: {t} cannot follow {x}"
                )));
            }
            let (q, c) = cyc_past_face(level, tp, index);
            Ok((
                Generator::Face { level, index: q },
                Generator::Cyc { level, power: c },
            ))
        }
        Generator::Degen { level, index } => {
            if tl != level {
                return Err(LambdaError::InvalidGenerator(format!(
                    "levels incompatible: {t} cannot follow {x}"
                )));
            }
            let (b, c) = cyc_past_degen(level, tp, index);
            Ok((
                Generator::Degen { level, index: b },
                Generator::Cyc {
                    level: level + 1,
                    power: c,
                },
            ))
        }
        Generator::Cyc { .. } => Err(LambdaError::InvalidGenerator(format!(
            "second factor must be a face or degeneracy, got {x}"
        ))),
    }
}

// ---------------------------------------------------------------------------
// The normalizer.
// ---------------------------------------------------------------------------

const REWRITE_FUEL: usize = 4_000_000;

struct Fuel(usize);

impl Fuel {
    fn burn(&mut self) {
        assert!(self.0 > 0, "rewriting fuel exhausted: normalizer bug");
        self.0 -= 1;
    }
}

/// Normalizes a type-checked word of generators (outermost first) into a
/// [`LambdaMorphism`]. `source`/`target` disambiguate the empty word.
fn normalize_word(
    mut word: Vec<Generator>,
    source: usize,
    target: usize,
) -> Result<LambdaMorphism, LambdaError> {
    // Type-check the chain and the declared endpoints.
    for g in &word {
        g.validate().map_err(|_| {
            LambdaError::InvalidGenerator(format!("index out of range in word: {g}"))
        })?;
    }
    for k in 0..word.len().saturating_sub(1) {
        if word[k].source() != word[k + 1].target() {
            return Err(LambdaError::NonComposable {
                left_source: word[k].source(),
                right_target: word[k + 1].target(),
            });
        }
    }
    if let (Some(first), Some(last)) = (word.first(), word.last()) {
        if last.source() != source || first.target() != target {
            return Err(LambdaError::InvalidNormalForm(format!(
                "word endpoints [{}]→[{}] disagree with declared [{source}]→[{target}]",
                last.source(),
                first.target()
            )));
        }
    } else if source != target {
        return Err(LambdaError::InvalidNormalForm(format!(
            "empty word cannot map [{source}] to [{target}]"
        )));
    }

    let mut fuel = Fuel(REWRITE_FUEL);

    // Phase 1: reduce/merge/drop rotations and push them to the right end.
    loop {
        let mut acted = false;
        let mut k = 0;
        while k < word.len() {
            match word[k] {
                Generator::Cyc { level, power } if power % (level + 1) == 0 => {
                    fuel.burn();
                    word.remove(k);
                    acted = true;
                }
                Generator::Cyc { level, power } if power > level => {
                    fuel.burn();
                    word[k] = Generator::Cyc {
                        level,
                        power: power % (level + 1),
                    };
                    acted = true;
                }
                Generator::Cyc { level, power } if k + 1 < word.len() => match word[k + 1] {
                    Generator::Cyc {
                        level: l2,
                        power: p2,
                    } => {
                        debug_assert_eq!(level, l2);
                        fuel.burn();
                        word[k] = Generator::Cyc {
                            level,
                            power: (power + p2) % (level + 1),
                        };
                        word.remove(k + 1);
                        acted = true;
                    }
                    Generator::Face {
                        level: fl,
                        index: j,
                    } => {
                        debug_assert_eq!(level, fl + 1);
                        fuel.burn();
                        let (q, c) = cyc_past_face(fl, power, j);
                        word[k] = Generator::Face {
                            level: fl,
                            index: q,
                        };
                        word[k + 1] = Generator::Cyc {
                            level: fl,
                            power: c,
                        };
                        acted = true;
                    }
                    Generator::Degen {
                        level: dl,
                        index: t,
                    } => {
                        debug_assert_eq!(level, dl);
                        fuel.burn();
                        let (b, c) = cyc_past_degen(dl, power, t);
                        word[k] = Generator::Degen {
                            level: dl,
                            index: b,
                        };
                        word[k + 1] = Generator::Cyc {
                            level: dl + 1,
                            power: c,
                        };
                        acted = true;
                    }
                },
                _ => {
                    k += 1;
                }
            }
        }
        if !acted {
            break;
        }
    }

    // Split off the (single, trailing) rotation.
    let mut cyc = 0;
    if let Some(&Generator::Cyc { level, power }) = word.last() {
        debug_assert_eq!(level, source);
        cyc = power;
        word.pop();
    }
    debug_assert!(
        word.iter().all(|g| !matches!(g, Generator::Cyc { .. })),
        "phase 1 must remove all rotations"
    );

    // Phase 2: cancel or push down degeneracy-before-face pairs until the
    // word has all faces left of all degeneracies (reduced two-sided form).
    loop {
        let mut acted = false;
        let mut k = 0;
        while k + 1 < word.len() {
            if let (
                Generator::Degen { level: n, index: i },
                Generator::Face {
                    level: nf,
                    index: j,
                },
            ) = (word[k], word[k + 1])
            {
                debug_assert_eq!(n, nf);
                fuel.burn();
                acted = true;
                if j == i || j == i + 1 {
                    word.drain(k..k + 2);
                    k = k.saturating_sub(1);
                    continue;
                }
                let (nj, ni) = if j < i { (j, i - 1) } else { (j - 1, i) };
                word[k] = Generator::Face {
                    level: n - 1,
                    index: nj,
                };
                word[k + 1] = Generator::Degen {
                    level: n - 1,
                    index: ni,
                };
            }
            k += 1;
        }
        if !acted {
            break;
        }
    }

    // Phase 3: interchange face-before-degeneracy pairs upward so the word
    // factors through the top object (degeneracies left of faces). The input
    // here is reduced, so no cancellations can occur and the top level is
    // minimal, which forces the junction condition after sorting.
    loop {
        let mut acted = false;
        let mut k = 0;
        while k + 1 < word.len() {
            if let (
                Generator::Face { level: n, index: i },
                Generator::Degen {
                    level: nd,
                    index: j,
                },
            ) = (word[k], word[k + 1])
            {
                debug_assert_eq!(n, nd);
                fuel.burn();
                acted = true;
                let (dj, fi) = if i <= j { (j + 1, i) } else { (j, i + 1) };
                word[k] = Generator::Degen {
                    level: n + 1,
                    index: dj,
                };
                word[k + 1] = Generator::Face {
                    level: n + 1,
                    index: fi,
                };
            }
            k += 1;
        }
        if !acted {
            break;
        }
    }

    // Phase 4: sort the degeneracy run (ascending outward) and the face run
    // (descending outward) with the quadratic exchange identities.
    loop {
        let mut acted = false;
        let mut k = 0;
        while k + 1 < word.len() {
            match (word[k], word[k + 1]) {
                (
                    Generator::Face {
                        level: lo,
                        index: i,
                    },
                    Generator::Face {
                        level: li,
                        index: j,
                    },
                ) if i <= j => {
                    debug_assert_eq!(lo, li + 1);
                    fuel.burn();
                    acted = true;
                    word[k] = Generator::Face {
                        level: lo,
                        index: j + 1,
                    };
                    word[k + 1] = Generator::Face {
                        level: li,
                        index: i,
                    };
                }
                (
                    Generator::Degen {
                        level: lo,
                        index: a,
                    },
                    Generator::Degen {
                        level: li,
                        index: b,
                    },
                ) if a >= b => {
                    debug_assert_eq!(lo + 1, li);
                    fuel.burn();
                    acted = true;
                    word[k] = Generator::Degen {
                        level: lo,
                        index: b,
                    };
                    word[k + 1] = Generator::Degen {
                        level: li,
                        index: a + 1,
                    };
                }
                _ => {}
            }
            k += 1;
        }
        if !acted {
            break;
        }
    }

    // Extract the normal form.
    let mut degens = Vec::new();
    let mut faces = Vec::new();
    for g in &word {
        match *g {
            Generator::Degen { index, .. } => {
                debug_assert!(faces.is_empty(), "degeneracy right of face after phases");
                degens.push(index);
            }
            Generator::Face { index, .. } => faces.push(index),
            Generator::Cyc { .. } => unreachable!("rotations removed in phase 1"),
        }
    }
    faces.reverse();
    LambdaMorphism::new(source, target, faces, degens, cyc % (source + 1))
}

/// Canonical two-step factorization of a monotone map `phi: [n] → [m]`:
/// returns the face set `S` and degeneracy set `R` with the junction
/// condition, so that injecting past `S` and collapsing at `R` realizes
/// `phi`. New elements (covering the values `phi` misses) are interleaved at
/// the unique monotone positions; adjacent equal values collapse.
fn simplicial_factorization(phi: &[usize], m: usize) -> (Vec<usize>, Vec<usize>) {
    let n = phi.len() - 1;
    debug_assert!(phi.windows(2).all(|w| w[0] <= w[1]), "map must be monotone");
    debug_assert!(phi.iter().all(|&v| v <= m), "values must lie in [0, m]");
    let mut hit = vec![false; m + 1];
    for &v in phi {
        hit[v] = true;
    }
    let missing: Vec<usize> = (0..=m).filter(|&v| !hit[v]).collect();
    let mut faces = Vec::with_capacity(missing.len());
    let mut degens = Vec::with_capacity(n);
    let (mut oi, mut ni, mut pos) = (0usize, 0usize, 0usize);
    while oi <= n || ni < missing.len() {
        let take_new = ni < missing.len() && (oi > n || missing[ni] < phi[oi]);
        if take_new {
            faces.push(pos);
            ni += 1;
        } else {
            if oi < n && phi[oi + 1] == phi[oi] {
                degens.push(pos);
            }
            oi += 1;
        }
        pos += 1;
    }
    (faces, degens)
}

// ---------------------------------------------------------------------------
// Enumeration and relation checking.
// ---------------------------------------------------------------------------

/// All morphisms `[n] → [m]` in normal form, enumerated deterministically
/// (top level ascending, then face set, degeneracy set, rotation power).
pub fn enumerate_basis(n: usize, m: usize) -> Vec<LambdaMorphism> {
    let mut out = Vec::new();
    for h in n.max(m)..=n + m {
        let nf = h - n;
        let nd = h - m;
        for faces in (0..=h).combinations(nf) {
            for degens in (0..h).combinations(nd) {
                let disjoint = degens
                    .iter()
                    .all(|&r| !faces.contains(&r) && !faces.contains(&(r + 1)));
                if !disjoint {
                    continue;
                }
                for a in 0..=n {
                    out.push(
                        LambdaMorphism::new(n, m, faces.clone(), degens.clone(), a)
                            .expect("enumerated data satisfies the invariants"),
                    );
                }
            }
        }
    }
    out
}

/// One defining relation, instantiated: two words of generators denoting
/// the same morphism `[source] → [target]`.
#[derive(Debug, Clone)]
pub struct RelationInstance {
    pub lhs: Vec<Generator>,
    pub rhs: Vec<Generator>,
    pub source: usize,
    pub target: usize,
    pub description: String,
}

impl RelationInstance {
    /// Largest object index any generator of either word touches.
    pub fn max_level(&self) -> usize {
        self.lhs
            .iter()
            .chain(&self.rhs)
            .map(|g| g.source().max(g.target()))
            .max()
            .unwrap_or(self.source.max(self.target))
    }
}

/// Every instance of the defining relations whose objects all lie within
/// `[max_level]`: face and degeneracy exchanges, the five mixed cases, the
/// rotation exchanges, the rotation order, and the rotation power ladder.
///
/// This list is the single source of truth for relation checking — the
/// normalizer is tested against it here, and module representations are
/// tested against it degreewise.
pub fn relation_word_instances(max_level: usize) -> Vec<RelationInstance> {
    let mut out = Vec::new();
    let face = |level: usize, index: usize| Generator::Face { level, index };
    let degen = |level: usize, index: usize| Generator::Degen { level, index };
    // Powers reduce modulo the rotation order so every instance is made of
    // valid generators (τ_0 = id, τ_1² = id, …).
    let cyc = |level: usize, power: usize| Generator::Cyc {
        level,
        power: power % (level + 1),
    };

    for n in 0..max_level {
        // Face exchange: ∂_i ∂_j = ∂_{j+1} ∂_i for i ≤ j (objects up to n+2).
        if n + 2 <= max_level {
            for j in 0..=n + 1 {
                for i in 0..=j {
                    out.push(RelationInstance {
                        lhs: vec![face(n + 1, i), face(n, j)],
                        rhs: vec![face(n + 1, j + 1), face(n, i)],
                        source: n,
                        target: n + 2,
                        description: format!("face exchange n={n} i={i} j={j}"),
                    });
                }
            }
        }
        // Degeneracy exchange: σ_j σ_i = σ_i σ_{j+1} for j ≥ i.
        if n + 2 <= max_level {
            for j in 0..=n {
                for i in 0..=j {
                    out.push(RelationInstance {
                        lhs: vec![degen(n, j), degen(n + 1, i)],
                        rhs: vec![degen(n, i), degen(n + 1, j + 1)],
                        source: n + 2,
                        target: n,
                        description: format!("degeneracy exchange n={n} i={i} j={j}"),
                    });
                }
            }
        }
        // Mixed: σ_i ∂_j with the five classical cases.
        if n < max_level {
            for i in 0..=n {
                for j in 0..=n + 1 {
                    let rhs = if j == i || j == i + 1 {
                        vec![]
                    } else if j < i {
                        vec![face(n - 1, j), degen(n - 1, i - 1)]
                    } else {
                        vec![face(n - 1, j - 1), degen(n - 1, i)]
                    };
                    out.push(RelationInstance {
                        lhs: vec![degen(n, i), face(n, j)],
                        rhs,
                        source: n,
                        target: n,
                        description: format!("mixed n={n} i={i} j={j}"),
                    });
                }
            }
        }
        // Rotation against faces: τ_{n+1} ∂_j = ∂_{j-1} τ_n (j ≥ 1),
        // τ_{n+1} ∂_0 = ∂_{n+1}.
        if n < max_level {
            for j in 0..=n + 1 {
                let rhs = if j == 0 {
                    vec![face(n, n + 1)]
                } else {
                    vec![face(n, j - 1), cyc(n, 1)]
                };
                out.push(RelationInstance {
                    lhs: vec![cyc(n + 1, 1), face(n, j)],
                    rhs,
                    source: n,
                    target: n + 1,
                    description: format!("rotation-face n={n} j={j}"),
                });
            }
        }
        // Rotation against degeneracies: τ_n σ_i = σ_{i-1} τ_{n+1} (i ≥ 1),
        // τ_n σ_0 = σ_n τ_{n+1}².
        if n < max_level {
            for i in 0..=n {
                let rhs = if i == 0 {
                    vec![degen(n, n), cyc(n + 1, 2)]
                } else {
                    vec![degen(n, i - 1), cyc(n + 1, 1)]
                };
                out.push(RelationInstance {
                    lhs: vec![cyc(n, 1), degen(n, i)],
                    rhs,
                    source: n + 1,
                    target: n,
                    description: format!("rotation-degeneracy n={n} i={i}"),
                });
            }
        }
    }
    // Rotation order τ_n^{n+1} = id and power ladder τ^ℓ τ = τ^{ℓ+1}.
    for n in 0..=max_level {
        out.push(RelationInstance {
            lhs: vec![cyc(n, 1); n + 1],
            rhs: vec![],
            source: n,
            target: n,
            description: format!("rotation order n={n}"),
        });
        for l in 0..=n {
            let next = (l + 1) % (n + 1);
            let rhs = if next == 0 {
                vec![]
            } else {
                vec![cyc(n, next)]
            };
            out.push(RelationInstance {
                lhs: vec![cyc(n, l), cyc(n, 1)],
                rhs,
                source: n,
                target: n,
                description: format!("rotation power ladder n={n} l={l}"),
            });
        }
    }
    out
}

/// Outcome of checking the defining relations through the normalizer.
#[derive(Debug, Clone)]
pub struct RelationReport {
    pub checked: usize,
    pub violations: Vec<String>,
}

impl RelationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every defining relation of the category, for all instances whose
/// objects stay within `[max_level]`, by composing both sides through the
/// normalizer and comparing normal forms.
pub fn verify_relations(max_level: usize) -> RelationReport {
    let mut checked = 0;
    let mut violations = Vec::new();
    for inst in relation_word_instances(max_level) {
        checked += 1;
        let lhs = normalize_word(inst.lhs.clone(), inst.source, inst.target);
        let rhs = normalize_word(inst.rhs.clone(), inst.source, inst.target);
        match (lhs, rhs) {
            (Ok(l), Ok(r)) => {
                if l != r {
                    violations.push(format!("{}: {l} != {r}", inst.description));
                }
            }
            (l, r) => violations.push(format!(
                "{}: composition error {l:?} / {r:?}",
                inst.description
            )),
        }
    }
    RelationReport {
        checked,
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: u128, k: u128) -> u128 {
        if k > n {
            return 0;
        }
        let k = k.min(n - k);
        let mut acc = 1u128;
        for i in 0..k {
            acc = acc * (n - i) / (i + 1);
        }
        acc
    }

    #[test]
    fn generator_cancellations() {
        for n in 0..5usize {
            for i in 0..=n {
                for j in [i, i + 1] {
                    let c = LambdaMorphism::degeneracy(n, i)
                        .unwrap()
                        .compose(&LambdaMorphism::face(n, j).unwrap())
                        .unwrap();
                    assert_eq!(c, LambdaMorphism::identity(n));
                }
            }
        }
    }

    #[test]
    fn rotation_order() {
        let t = LambdaMorphism::cyclic(2, 1);
        let sq = t.compose(&t).unwrap();
        assert_eq!(sq, LambdaMorphism::cyclic(2, 2));
        assert_eq!(t.compose(&sq).unwrap(), LambdaMorphism::identity(2));
    }

    #[test]
    fn spec_strings_compose() {
        // The two factorizations below denote the same morphism: the first
        // is the normal form, the second its exchanged (rotation-outside)
        // word.
        let normal = LambdaMorphism::parse("d1_0 . t1^1").unwrap();
        let exchanged = LambdaMorphism::parse("t2^1 . d1_1").unwrap();
        assert_eq!(normal, exchanged);
        assert_eq!(normal.to_string(), "d1_0 . t1^1");

        assert_eq!(
            LambdaMorphism::parse("s1_0 . d1_0").unwrap().to_string(),
            "id_1"
        );
        assert_eq!(
            LambdaMorphism::parse("t2 . t2 . t2").unwrap().to_string(),
            "id_2"
        );
    }

    #[test]
    fn hand_checked_composites() {
        // τ_2 ∘ ∂^1_0 = ∂^1_2 (pointwise (0,1)).
        let c = LambdaMorphism::cyclic(2, 1)
            .compose(&LambdaMorphism::face(1, 0).unwrap())
            .unwrap();
        assert_eq!(c, LambdaMorphism::face(1, 2).unwrap());
        assert_eq!(c.underlying_map(), vec![0, 1]);

        // τ_1 ∘ σ^1_0 = σ^1_1 ∘ τ_2² (pointwise (1,1,0)).
        let lhs = LambdaMorphism::cyclic(1, 1)
            .compose(&LambdaMorphism::degeneracy(1, 0).unwrap())
            .unwrap();
        let rhs = LambdaMorphism::degeneracy(1, 1)
            .unwrap()
            .compose(&LambdaMorphism::cyclic(2, 2))
            .unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.underlying_map(), vec![1, 1, 0]);

        // ∂^1_2 ∘ σ^1_0 = σ^2_0 ∘ ∂^2_3 (top-level factorization of (0,0,1)).
        let lhs = LambdaMorphism::face(1, 2)
            .unwrap()
            .compose(&LambdaMorphism::degeneracy(1, 0).unwrap())
            .unwrap();
        assert_eq!(lhs.underlying_map(), vec![0, 0, 1]);
        assert_eq!(lhs.faces(), &[3]);
        assert_eq!(lhs.degens(), &[0]);
    }

    #[test]
    fn non_composable_is_reported() {
        let f = LambdaMorphism::face(1, 0).unwrap(); // [1] → [2]
        let g = LambdaMorphism::face(0, 0).unwrap(); // [0] → [1]
        assert!(f.compose(&g).is_ok());
        assert_eq!(
            g.compose(&f),
            Err(LambdaError::NonComposable {
                left_source: 0,
                right_target: 2
            })
        );
    }

    #[test]
    fn basis_counts_match_closed_formula() {
        for n in 0..4usize {
            for m in 0..4usize {
                let basis = enumerate_basis(n, m);
                let expect = (n as u128 + 1) * binom((n + m + 1) as u128, (n + 1) as u128);
                assert_eq!(basis.len() as u128, expect, "count at ({n},{m})");
                // No duplicates, and the faithful realizations are distinct.
                let mut keys: Vec<Vec<i64>> =
                    basis.iter().map(LambdaMorphism::as_interval).collect();
                keys.sort();
                keys.dedup();
                assert_eq!(keys.len(), basis.len(), "duplicates at ({n},{m})");
            }
        }
    }

    #[test]
    fn basis_small_cases() {
        assert_eq!(enumerate_basis(0, 0), vec![LambdaMorphism::identity(0)]);
        let b01 = enumerate_basis(0, 1);
        assert_eq!(
            b01,
            vec![
                LambdaMorphism::face(0, 0).unwrap(),
                LambdaMorphism::face(0, 1).unwrap()
            ]
        );
        for n in 0..4usize {
            let autos: Vec<_> = enumerate_basis(n, n)
                .into_iter()
                .filter(LambdaMorphism::is_isomorphism)
                .collect();
            assert_eq!(autos.len(), n + 1);
            for a in 0..=n {
                assert!(autos.contains(&LambdaMorphism::cyclic(n, a)));
            }
        }
    }

    #[test]
    fn interval_round_trip() {
        for n in 0..4usize {
            for m in 0..4usize {
                for f in enumerate_basis(n, m) {
                    let w = f.as_interval();
                    assert!((0..=m as i64).contains(&w[0]), "normalized window start");
                    let back = LambdaMorphism::from_interval(n, m, &w).unwrap();
                    assert_eq!(back, f);
                }
            }
        }
    }

    #[test]
    fn parse_round_trip_and_errors() {
        for n in 0..3usize {
            for m in 0..3usize {
                for f in enumerate_basis(n, m) {
                    let s = f.to_string();
                    assert_eq!(LambdaMorphism::parse(&s).unwrap(), f, "{s}");
                }
            }
        }
        assert!(matches!(
            LambdaMorphism::parse("x1_0"),
            Err(LambdaError::Parse(_))
        ));
        assert!(matches!(
            LambdaMorphism::parse("d1_0 . d1_0"),
            Err(LambdaError::Parse(_))
        ));
        assert!(matches!(
            LambdaMorphism::parse("d1_5"),
            Err(LambdaError::InvalidGenerator(_))
        ));
    }

    #[test]
    fn relations_clean_at_level_three() {
        let report = verify_relations(3);
        assert!(report.checked >= 60, "checked only {}", report.checked);
        assert!(report.is_clean(), "violations: {:?}", report.violations);
    }

    #[test]
    fn associativity_small() {
        // Exhaustive over all composable triples among objects ≤ 2.
        let objs = 0..=2usize;
        for a in objs.clone() {
            for b in objs.clone() {
                for c in objs.clone() {
                    for d in objs.clone() {
                        for f in enumerate_basis(b, a) {
                            for g in enumerate_basis(c, b) {
                                for h in enumerate_basis(d, c) {
                                    let lhs = f.compose(&g).unwrap().compose(&h).unwrap();
                                    let rhs = f.compose(&g.compose(&h).unwrap()).unwrap();
                                    assert_eq!(lhs, rhs, "({f}) ({g}) ({h})");
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn omega_examples_and_partiality() {
        // Exchange of ∂^1_0 with τ_1: rotation comes out with power 1,
        // face index moves to 1.
        let (t, x) = omega(
            &Generator::Face { level: 1, index: 0 },
            &Generator::Cyc { level: 1, power: 1 },
        )
        .unwrap();
        assert_eq!(t, Generator::Cyc { level: 2, power: 1 });
        assert_eq!(x, Generator::Face { level: 1, index: 1 });

        // Zero power and index: nothing moves.
        let (t, x) = omega(
            &Generator::Face { level: 3, index: 0 },
            &Generator::Cyc { level: 3, power: 0 },
        )
        .unwrap();
        assert_eq!(t, Generator::Cyc { level: 4, power: 0 });
        assert_eq!(x, Generator::Face { level: 3, index: 0 });

        // σ^1_0 ∘ τ_2² has no rotation-outside form.
        assert!(matches!(
            omega(
                &Generator::Degen { level: 1, index: 0 },
                &Generator::Cyc { level: 2, power: 2 },
            ),
            Err(LambdaError::NoTransposition(_))
        ));
    }

    #[test]
    fn omega_inverse_round_trip() {
        for n in 0..=5usize {
            // Face pairs: ∂^n_j ∘ τ_n^i for all valid (j, i).
            for j in 0..=n + 1 {
                for i in 0..=n {
                    let x = Generator::Face { level: n, index: j };
                    let t = Generator::Cyc { level: n, power: i };
                    let (t2, x2) = omega(&x, &t).unwrap();
                    let (x3, t3) = omega_inv(&t2, &x2).unwrap();
                    assert_eq!((x3, t3), (x, t));
                }
            }
            // Degeneracy pairs where the exchange exists.
            for s in 0..=n {
                for t_pow in 0..=n + 1 {
                    let x = Generator::Degen { level: n, index: s };
                    let t = Generator::Cyc {
                        level: n + 1,
                        power: t_pow,
                    };
                    match omega(&x, &t) {
                        Ok((t2, x2)) => {
                            let (x3, t3) = omega_inv(&t2, &x2).unwrap();
                            assert_eq!((x3, t3), (x, t));
                        }
                        Err(LambdaError::NoTransposition(_)) => {}
                        Err(e) => panic!("unexpected error {e}"),
                    }
                }
            }
        }
    }

    #[test]
    fn omega_inv_then_omega_round_trip() {
        // The rotation-outside factorization is not unique (for example
        // ∂^n_{n+1} = τ_{n+1} ∘ ∂^n_0), so the round trip is checked at the
        // level of composites rather than of words.
        let comp2 = |a: Generator, b: Generator| {
            normalize_word(vec![a, b], b.source(), a.target()).unwrap()
        };
        for n in 0..=5usize {
            for j in 0..=n + 1 {
                for i in 0..=n + 1 {
                    let t = Generator::Cyc {
                        level: n + 1,
                        power: i,
                    };
                    let x = Generator::Face { level: n, index: j };
                    let original = comp2(t, x);
                    let (x2, t2) = omega_inv(&t, &x).unwrap();
                    assert_eq!(comp2(x2, t2), original, "{t} . {x}");
                    let (t3, x3) = omega(&x2, &t2).unwrap();
                    assert_eq!(comp2(t3, x3), original, "{t} . {x}");
                }
            }
            for s in 0..=n {
                for t_pow in 0..=n {
                    let t = Generator::Cyc {
                        level: n,
                        power: t_pow,
                    };
                    let x = Generator::Degen { level: n, index: s };
                    let original = comp2(t, x);
                    let (x2, t2) = omega_inv(&t, &x).unwrap();
                    assert_eq!(comp2(x2, t2), original, "{t} . {x}");
                    let (t3, x3) = omega(&x2, &t2).unwrap();
                    assert_eq!(comp2(t3, x3), original, "{t} . {x}");
                }
            }
        }
    }

    #[test]
    fn underlying_map_of_generators() {
        assert_eq!(
            LambdaMorphism::face(2, 1).unwrap().underlying_map(),
            vec![0, 2, 3]
        );
        assert_eq!(
            LambdaMorphism::degeneracy(2, 1).unwrap().underlying_map(),
            vec![0, 1, 1, 2]
        );
        assert_eq!(LambdaMorphism::cyclic(2, 1).underlying_map(), vec![2, 0, 1]);
    }
}
