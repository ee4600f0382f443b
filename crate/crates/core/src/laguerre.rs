//! Two-colored Motzkin words, Laguerre histories, and the Françon–Viennot
//! correspondence between permutations of `[n]` and histories of length `n - 1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{LetterClass, Permutation};

/// Up, down, blue level, red level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ColoredStep {
    U,
    D,
    HB,
    HR,
}

impl ColoredStep {
    pub const ALL: [ColoredStep; 4] = [
        ColoredStep::U,
        ColoredStep::D,
        ColoredStep::HB,
        ColoredStep::HR,
    ];

    /// Single-letter code: `U`, `D`, `B` (blue level), `R` (red level).
    pub fn code(self) -> char {
        match self {
            ColoredStep::U => 'U',
            ColoredStep::D => 'D',
            ColoredStep::HB => 'B',
            ColoredStep::HR => 'R',
        }
    }

    pub fn from_code(c: char) -> Result<Self> {
        match c {
            'U' => Ok(ColoredStep::U),
            'D' => Ok(ColoredStep::D),
            'B' => Ok(ColoredStep::HB),
            'R' => Ok(ColoredStep::HR),
            other => Err(Error::Parse(format!(
                "history letter must be one of U, D, B, R; got {other:?}"
            ))),
        }
    }

    fn height_change(self) -> isize {
        match self {
            ColoredStep::U => 1,
            ColoredStep::D => -1,
            ColoredStep::HB | ColoredStep::HR => 0,
        }
    }
}

impl From<LetterClass> for ColoredStep {
    fn from(c: LetterClass) -> Self {
        match c {
            LetterClass::Valley => ColoredStep::U,
            LetterClass::Peak => ColoredStep::D,
            LetterClass::DoubleDescent => ColoredStep::HB,
            LetterClass::DoubleAscent => ColoredStep::HR,
        }
    }
}

/// A word over `{U, D, HB, HR}` that never dips below height 0 and ends at 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredMotzkinWord(Vec<ColoredStep>);

impl ColoredMotzkinWord {
    pub fn new(steps: Vec<ColoredStep>) -> Result<Self> {
        let mut height = 0isize;
        for (i, s) in steps.iter().enumerate() {
            height += s.height_change();
            if height < 0 {
                return Err(Error::InvalidWord(format!(
                    "goes below height 0 at step {}",
                    i + 1
                )));
            }
        }
        if height != 0 {
            return Err(Error::InvalidWord(format!(
                "ends at height {height}, not 0"
            )));
        }
        Ok(Self(steps))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn steps(&self) -> &[ColoredStep] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `h_i = 1 + #U − #D` over the steps before `i`.
    pub fn height_profile(&self) -> Vec<usize> {
        let mut h = 1isize;
        self.0
            .iter()
            .map(|s| {
                let cur = h;
                h += s.height_change();
                cur as usize
            })
            .collect()
    }
}

impl fmt::Display for ColoredMotzkinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.code()))
    }
}

impl FromStr for ColoredMotzkinWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .map(ColoredStep::from_code)
            .collect::<Result<Vec<_>>>()?;
        Self::new(steps)
    }
}

/// A Motzkin word with one weight per step. The weight bounds are not
/// enforced on construction; see [`LaguerreHistory::validate`].
///
/// JSON form: `{"word":"URUDDBUD","weights":[1,2,2,2,1,1,1,2]}`; deserializing
/// rejects weights outside `1..=h_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(
    try_from = "crate::json::HistoryRepr",
    into = "crate::json::HistoryRepr"
)]
pub struct LaguerreHistory {
    word: ColoredMotzkinWord,
    weights: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HistoryValidity {
    /// `1 <= μ_i <= h_i` everywhere.
    pub laguerre_ok: bool,
    /// Laguerre, and each weight moves by the step-dependent increment.
    pub baxter_ok: bool,
}

impl LaguerreHistory {
    pub fn new(word: ColoredMotzkinWord, weights: Vec<usize>) -> Result<Self> {
        if word.len() != weights.len() {
            return Err(Error::LengthMismatch {
                word: word.len(),
                weights: weights.len(),
            });
        }
        Ok(Self { word, weights })
    }

    pub fn parse(word: &str, weights: Vec<usize>) -> Result<Self> {
        Self::new(word.parse()?, weights)
    }

    pub fn empty() -> Self {
        Self {
            word: ColoredMotzkinWord::empty(),
            weights: Vec::new(),
        }
    }

    pub fn word(&self) -> &ColoredMotzkinWord {
        &self.word
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn validate(&self) -> HistoryValidity {
        let h = self.word.height_profile();
        let laguerre_ok = self
            .weights
            .iter()
            .zip(&h)
            .all(|(&mu, &hi)| 1 <= mu && mu <= hi);
        let steps_ok = self
            .word
            .steps()
            .iter()
            .zip(self.weights.windows(2))
            .all(|(s, w)| {
                let (cur, next) = (w[0], w[1]);
                match s {
                    ColoredStep::U | ColoredStep::HB => next == cur || next == cur + 1,
                    ColoredStep::D | ColoredStep::HR => next == cur || next + 1 == cur,
                }
            });
        HistoryValidity {
            laguerre_ok,
            baxter_ok: laguerre_ok && steps_ok,
        }
    }
}

impl fmt::Display for LaguerreHistory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ws: Vec<String> = self.weights.iter().map(|w| w.to_string()).collect();
        write!(f, "({}, ({}))", self.word, ws.join(","))
    }
}

/// `ψ_FV`: step `i` records the class of letter `i`; its weight is one plus
/// the number of `31-2` occurrences with `i` playing the role of the `2`.
pub fn psi_fv(p: &Permutation) -> LaguerreHistory {
    let n = p.len();
    let steps = p
        .classify_letters()
        .as_slice()
        .iter()
        .map(|&c| ColoredStep::from(c))
        .collect();
    let w = p.as_slice();
    let mut pos = vec![0; n + 1];
    for (i, &v) in w.iter().enumerate() {
        pos[v] = i;
    }
    let weights = (1..n)
        .map(|letter| {
            // adjacent pairs (w[j-1], w[j]) left of the letter with w[j] < letter < w[j-1]
            1 + (1..pos[letter])
                .filter(|&j| w[j] < letter && letter < w[j - 1])
                .count()
        })
        .collect();
    LaguerreHistory {
        // classification of a genuine permutation always yields a Motzkin word
        word: ColoredMotzkinWord(steps),
        weights,
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Cell {
    Slot,
    Letter(usize),
}

/// Rebuilds the permutation by repeatedly filling the `μ_i`-th open slot.
pub fn psi_fv_inverse(h: &LaguerreHistory) -> Result<Permutation> {
    let n = h.len() + 1;
    let mut cells = vec![Cell::Slot];
    for (i, (&step, &mu)) in h.word.steps().iter().zip(&h.weights).enumerate() {
        let letter = i + 1;
        let at = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| **c == Cell::Slot)
            .nth(mu.wrapping_sub(1))
            .map(|(idx, _)| idx)
            .ok_or_else(|| {
                Error::MalformedHistory(format!(
                    "weight {mu} at step {letter} exceeds the number of open slots"
                ))
            })?;
        let replacement: &[Cell] = match step {
            ColoredStep::U => &[Cell::Slot, Cell::Letter(letter), Cell::Slot],
            ColoredStep::HR => &[Cell::Letter(letter), Cell::Slot],
            ColoredStep::D => &[Cell::Letter(letter)],
            ColoredStep::HB => &[Cell::Slot, Cell::Letter(letter)],
        };
        cells.splice(at..=at, replacement.iter().copied());
    }
    let open = cells.iter().filter(|c| **c == Cell::Slot).count();
    if open != 1 {
        return Err(Error::MalformedHistory(format!(
            "{open} open slots remain at the end"
        )));
    }
    let word = cells
        .into_iter()
        .map(|c| match c {
            Cell::Slot => n,
            Cell::Letter(v) => v,
        })
        .collect();
    Permutation::new(word)
}

/// Every Motzkin word of length `m`, in lexicographic order of [`ColoredStep`].
pub fn motzkin_words(m: usize) -> Vec<ColoredMotzkinWord> {
    fn go(m: usize, height: usize, cur: &mut Vec<ColoredStep>, out: &mut Vec<ColoredMotzkinWord>) {
        let left = m - cur.len();
        if left == 0 {
            if height == 0 {
                out.push(ColoredMotzkinWord(cur.clone()));
            }
            return;
        }
        for s in ColoredStep::ALL {
            let next = height as isize + s.height_change();
            // must be able to come back down in the remaining steps
            if next < 0 || next as usize > left - 1 {
                continue;
            }
            cur.push(s);
            go(m, next as usize, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, 0, &mut Vec::with_capacity(m), &mut out);
    out
}

/// Every Laguerre history of length `m`; there are `(m + 1)!` of them.
pub fn laguerre_histories(m: usize) -> Vec<LaguerreHistory> {
    let mut out = Vec::new();
    for word in motzkin_words(m) {
        let bounds = word.height_profile();
        let mut weights = vec![1; m];
        loop {
            out.push(LaguerreHistory {
                word: word.clone(),
                weights: weights.clone(),
            });
            // odometer over 1..=h_i
            let Some(i) = (0..m).rev().find(|&i| weights[i] < bounds[i]) else {
                break;
            };
            weights[i] += 1;
            weights[i + 1..].iter_mut().for_each(|w| *w = 1);
        }
    }
    out
}

/// Laguerre histories of length `m` satisfying the Baxter increment rule.
pub fn baxter_histories(m: usize) -> Vec<LaguerreHistory> {
    laguerre_histories(m)
        .into_iter()
        .filter(|h| h.validate().baxter_ok)
        .collect()
}
