//! Independent reference implementations used to cross-check the engine.
//!
//! Everything here deliberately avoids the library's closed-form rewriting:
//! the interval model composes set maps pointwise, and the naive normalizer
//! applies one defining relation at a time. Agreement between these and the
//! engine is what the oracle tests assert.

#![allow(dead_code)]
#![allow(clippy::needless_range_loop)] // elimination code indexes row/column grids

use cychom::lambda::Generator;
use cychom::Q;
use num_traits::Zero;

/// A morphism of cyclic ordinals realized as a monotone-with-winding map:
/// the window `F(0..=source)` of an `F: ℤ → ℤ` with
/// `F(x + source + 1) = F(x) + target + 1`, normalized so
/// `0 ≤ F(0) ≤ target`. This realization is faithful.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalMap {
    pub source: usize,
    pub target: usize,
    pub window: Vec<i64>,
}

impl IntervalMap {
    pub fn new(source: usize, target: usize, mut window: Vec<i64>) -> Self {
        assert_eq!(window.len(), source + 1);
        let m = target as i64 + 1;
        let shift = window[0].div_euclid(m) * m;
        for v in &mut window {
            *v -= shift;
        }
        for w in window.windows(2) {
            assert!(w[0] <= w[1], "not monotone");
        }
        assert!(window[source] <= window[0] + m, "spread exceeds one period");
        IntervalMap {
            source,
            target,
            window,
        }
    }

    pub fn identity(n: usize) -> Self {
        IntervalMap::new(n, n, (0..=n as i64).collect())
    }

    /// Equivariant extension to all of ℤ.
    pub fn extend(&self, x: i64) -> i64 {
        let n = self.source as i64 + 1;
        let m = self.target as i64 + 1;
        let q = x.div_euclid(n);
        self.window[x.rem_euclid(n) as usize] + q * m
    }

    /// Pointwise composition `self ∘ g`.
    pub fn compose(&self, g: &IntervalMap) -> IntervalMap {
        assert_eq!(self.source, g.target, "not composable");
        let window = (0..=g.source as i64)
            .map(|x| self.extend(g.extend(x)))
            .collect();
        IntervalMap::new(g.source, self.target, window)
    }

    /// Realization of a single generator, straight from the definitions.
    pub fn of_generator(g: &Generator) -> IntervalMap {
        match *g {
            Generator::Face { level, index } => IntervalMap::new(
                level,
                level + 1,
                (0..=level as i64)
                    .map(|x| if x < index as i64 { x } else { x + 1 })
                    .collect(),
            ),
            Generator::Degen { level, index } => IntervalMap::new(
                level + 1,
                level,
                (0..=level as i64 + 1)
                    .map(|x| if x <= index as i64 { x } else { x - 1 })
                    .collect(),
            ),
            Generator::Cyc { level, power } => IntervalMap::new(
                level,
                level,
                (0..=level as i64).map(|x| x - power as i64).collect(),
            ),
        }
    }

    /// Realization of a word of generators (outermost first); `source` and
    /// `target` disambiguate the empty word.
    pub fn of_word(word: &[Generator], source: usize, target: usize) -> IntervalMap {
        let mut acc = IntervalMap::identity(source);
        for g in word.iter().rev() {
            acc = IntervalMap::of_generator(g).compose(&acc);
        }
        assert_eq!(acc.target, target);
        acc
    }
}

/// Number of morphisms `[n] → [m]`: `(n+1) · C(n+m+1, n+1)`.
pub fn hom_count(n: usize, m: usize) -> u128 {
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
    (n as u128 + 1) * binom((n + m + 1) as u128, (n + 1) as u128)
}

/// Brute-force normalizer: applies one defining relation at a time until no
/// rule matches. Single rotation steps only — no closed-form index
/// arithmetic — so it cannot share a formula bug with the engine. The fixed
/// point has shape `faces… degeneracies… rotation?`, compared via
/// [`IntervalMap::of_word`].
pub fn naive_normalize(mut word: Vec<Generator>) -> Vec<Generator> {
    let mut fuel = 10_000_000usize;
    loop {
        fuel -= 1;
        assert!(fuel > 0, "naive normalizer fuel exhausted");

        // Rotation housekeeping: reduce powers, drop identities, merge
        // adjacent rotations (leftmost first).
        if let Some(k) = word
            .iter()
            .position(|g| matches!(g, Generator::Cyc { level, power } if *power > *level))
        {
            let Generator::Cyc { level, power } = word[k] else {
                unreachable!()
            };
            word[k] = Generator::Cyc {
                level,
                power: power % (level + 1),
            };
            continue;
        }
        if let Some(k) = word
            .iter()
            .position(|g| matches!(g, Generator::Cyc { power: 0, .. }))
        {
            word.remove(k);
            continue;
        }
        if let Some(k) = (0..word.len().saturating_sub(1)).find(|&k| {
            matches!(
                (&word[k], &word[k + 1]),
                (Generator::Cyc { .. }, Generator::Cyc { .. })
            )
        }) {
            let (Generator::Cyc { level, power: a }, Generator::Cyc { power: b, .. }) =
                (word[k], word[k + 1])
            else {
                unreachable!()
            };
            word[k] = Generator::Cyc {
                level,
                power: (a + b) % (level + 1),
            };
            word.remove(k + 1);
            continue;
        }

        // Push the rightmost rotation one elementary step to the right.
        if let Some(k) = (0..word.len().saturating_sub(1)).rev().find(|&k| {
            matches!(word[k], Generator::Cyc { .. })
                && !matches!(word[k + 1], Generator::Cyc { .. })
        }) {
            let Generator::Cyc { level, power } = word[k] else {
                unreachable!()
            };
            assert!(power >= 1);
            let residual = Generator::Cyc {
                level,
                power: power - 1,
            };
            match word[k + 1] {
                Generator::Face { level: n, index: j } => {
                    assert_eq!(level, n + 1);
                    let step: Vec<Generator> = if j == 0 {
                        // τ ∂_0 = ∂_{n+1}
                        vec![Generator::Face {
                            level: n,
                            index: n + 1,
                        }]
                    } else {
                        // τ ∂_j = ∂_{j-1} τ
                        vec![
                            Generator::Face {
                                level: n,
                                index: j - 1,
                            },
                            Generator::Cyc { level: n, power: 1 },
                        ]
                    };
                    word.splice(k..k + 2, std::iter::once(residual).chain(step));
                }
                Generator::Degen { level: n, index: i } => {
                    assert_eq!(level, n);
                    let step: Vec<Generator> = if i == 0 {
                        // τ σ_0 = σ_n τ²
                        vec![
                            Generator::Degen { level: n, index: n },
                            Generator::Cyc {
                                level: n + 1,
                                power: 2,
                            },
                        ]
                    } else {
                        // τ σ_i = σ_{i-1} τ
                        vec![
                            Generator::Degen {
                                level: n,
                                index: i - 1,
                            },
                            Generator::Cyc {
                                level: n + 1,
                                power: 1,
                            },
                        ]
                    };
                    word.splice(k..k + 2, std::iter::once(residual).chain(step));
                }
                Generator::Cyc { .. } => unreachable!(),
            }
            continue;
        }

        // Degeneracy-before-face: cancel or push the face out.
        if let Some(k) = (0..word.len().saturating_sub(1)).find(|&k| {
            matches!(
                (&word[k], &word[k + 1]),
                (Generator::Degen { .. }, Generator::Face { .. })
            )
        }) {
            let (Generator::Degen { level: n, index: i }, Generator::Face { index: j, .. }) =
                (word[k], word[k + 1])
            else {
                unreachable!()
            };
            if j == i || j == i + 1 {
                word.drain(k..k + 2);
            } else if j < i {
                word[k] = Generator::Face {
                    level: n - 1,
                    index: j,
                };
                word[k + 1] = Generator::Degen {
                    level: n - 1,
                    index: i - 1,
                };
            } else {
                word[k] = Generator::Face {
                    level: n - 1,
                    index: j - 1,
                };
                word[k + 1] = Generator::Degen {
                    level: n - 1,
                    index: i,
                };
            }
            continue;
        }

        // Sort face and degeneracy runs.
        if let Some(k) = (0..word.len().saturating_sub(1)).find(|&k| {
            matches!(
                (&word[k], &word[k + 1]),
                (Generator::Face { index: i, .. }, Generator::Face { index: j, .. }) if i <= j
            )
        }) {
            let (
                Generator::Face {
                    level: lo,
                    index: i,
                },
                Generator::Face {
                    level: li,
                    index: j,
                },
            ) = (word[k], word[k + 1])
            else {
                unreachable!()
            };
            word[k] = Generator::Face {
                level: lo,
                index: j + 1,
            };
            word[k + 1] = Generator::Face {
                level: li,
                index: i,
            };
            continue;
        }
        if let Some(k) = (0..word.len().saturating_sub(1)).find(|&k| {
            matches!(
                (&word[k], &word[k + 1]),
                (Generator::Degen { index: a, .. }, Generator::Degen { index: b, .. }) if a >= b
            )
        }) {
            let (
                Generator::Degen {
                    level: lo,
                    index: a,
                },
                Generator::Degen {
                    level: li,
                    index: b,
                },
            ) = (word[k], word[k + 1])
            else {
                unreachable!()
            };
            word[k] = Generator::Degen {
                level: lo,
                index: b,
            };
            word[k + 1] = Generator::Degen {
                level: li,
                index: a + 1,
            };
            continue;
        }

        return word;
    }
}

/// Textbook dense Gaussian elimination rank, independent of the sparse
/// echelon inside the library.
pub fn dense_rank(mut rows: Vec<Vec<Q>>) -> usize {
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].clone();
        for r in rank + 1..nrows {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] / &inv;
            for c in col..ncols {
                let sub = &rows[rank][c] * &factor;
                rows[r][c] = &rows[r][c] - &sub;
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}
