//! Cross-checks of the rewriting engine against braindead reference
//! implementations: pointwise interval-map composition and a one-relation-
//! at-a-time normalizer.

mod common;

use common::{hom_count, naive_normalize, IntervalMap};
use cychom::lambda::{enumerate_basis, verify_relations, Generator, LambdaMorphism};
use proptest::prelude::*;

fn interval_of(f: &LambdaMorphism) -> IntervalMap {
    IntervalMap::new(f.source(), f.target(), f.as_interval())
}

/// The naive fixed point must have shape `faces… degeneracies… rotation?`.
fn assert_epi_mono_rotation_shape(word: &[Generator]) {
    let mut stage = 0; // 0 = faces, 1 = degens, 2 = rotation seen
    for g in word {
        let s = match g {
            Generator::Face { .. } => 0,
            Generator::Degen { .. } => 1,
            Generator::Cyc { .. } => 2,
        };
        assert!(s >= stage, "unexpected shape {word:?}");
        stage = s;
        if s == 2 {
            stage = 3; // at most one rotation
        }
    }
}

#[test]
fn engine_realization_is_coherent() {
    // `as_interval` (computed from the normal-form data) agrees with the
    // generator-by-generator realization of `to_word`.
    for n in 0..=3usize {
        for m in 0..=3usize {
            for f in enumerate_basis(n, m) {
                let via_word = IntervalMap::of_word(&f.to_word(), n, m);
                assert_eq!(via_word, interval_of(&f), "{f}");
            }
        }
    }
}

#[test]
fn compose_agrees_with_both_oracles_exhaustively() {
    // Every composable pair of basis morphisms with objects ≤ 3, checked
    // against (a) pointwise interval composition and (b) the naive
    // single-step relation normalizer.
    let mut pairs = 0usize;
    for m in 0..=3usize {
        let left: Vec<Vec<LambdaMorphism>> = (0..=3).map(|k| enumerate_basis(m, k)).collect();
        let right: Vec<Vec<LambdaMorphism>> = (0..=3).map(|n| enumerate_basis(n, m)).collect();
        for (k, fs) in left.iter().enumerate() {
            for (n, gs) in right.iter().enumerate() {
                for f in fs {
                    let f_int = interval_of(f);
                    for g in gs {
                        let engine = f.compose(g).expect("composable");
                        let engine_int = interval_of(&engine);

                        let pointwise = f_int.compose(&interval_of(g));
                        assert_eq!(engine_int, pointwise, "interval oracle: ({f}) . ({g})");

                        let mut word = f.to_word();
                        word.extend(g.to_word());
                        let naive = naive_normalize(word);
                        assert_epi_mono_rotation_shape(&naive);
                        let naive_int = IntervalMap::of_word(&naive, n, k);
                        assert_eq!(engine_int, naive_int, "rewriting oracle: ({f}) . ({g})");
                        pairs += 1;
                    }
                }
            }
        }
    }
    assert_eq!(pairs, {
        // Σ_m (Σ_k |hom(m,k)|) · (Σ_n |hom(n,m)|)
        let mut total = 0;
        for m in 0..=3usize {
            let out: u128 = (0..=3).map(|k| hom_count(m, k)).sum();
            let inc: u128 = (0..=3).map(|n| hom_count(n, m)).sum();
            total += (out * inc) as usize;
        }
        total
    });
}

#[test]
fn enumeration_matches_closed_count() {
    for n in 0..=4usize {
        for m in 0..=4usize {
            assert_eq!(
                enumerate_basis(n, m).len() as u128,
                hom_count(n, m),
                "({n},{m})"
            );
        }
    }
}

#[test]
fn defining_relations_hold_at_level_four() {
    let report = verify_relations(4);
    assert!(report.is_clean(), "{:?}", report.violations);
}

/// Random generator words with valid level chains, plus their endpoints.
fn word_strategy() -> impl Strategy<Value = (Vec<Generator>, usize, usize)> {
    (
        0usize..=4,
        proptest::collection::vec((0u8..3, 0usize..64), 0..10),
    )
        .prop_map(|(src, raw)| {
            let mut inner_first = Vec::new();
            let mut lvl = src;
            for (kind, seed) in raw {
                match kind {
                    0 => {
                        inner_first.push(Generator::Face {
                            level: lvl,
                            index: seed % (lvl + 2),
                        });
                        lvl += 1;
                    }
                    1 if lvl > 0 => {
                        inner_first.push(Generator::Degen {
                            level: lvl - 1,
                            index: seed % lvl,
                        });
                        lvl -= 1;
                    }
                    _ => {
                        inner_first.push(Generator::Cyc {
                            level: lvl,
                            power: seed % (lvl + 1),
                        });
                    }
                }
            }
            inner_first.reverse();
            (inner_first, src, lvl)
        })
}

proptest! {
    #[test]
    fn random_words_normalize_consistently((word, source, target) in word_strategy()) {
        // Engine: parse the word as a composite of generator morphisms.
        let mut engine = LambdaMorphism::identity(source);
        for g in word.iter().rev() {
            let gm = match *g {
                Generator::Face { level, index } => LambdaMorphism::face(level, index).unwrap(),
                Generator::Degen { level, index } => {
                    LambdaMorphism::degeneracy(level, index).unwrap()
                }
                Generator::Cyc { level, power } => LambdaMorphism::cyclic(level, power),
            };
            engine = gm.compose(&engine).unwrap();
        }
        prop_assert_eq!(engine.source(), source);
        prop_assert_eq!(engine.target(), target);

        let direct = IntervalMap::of_word(&word, source, target);
        prop_assert_eq!(interval_of(&engine), direct.clone());

        let naive = naive_normalize(word);
        assert_epi_mono_rotation_shape(&naive);
        prop_assert_eq!(IntervalMap::of_word(&naive, source, target), direct);
    }
}
