//! Permutations in one-line notation and the descent statistics carried by them.
//!
//! Positions and letters are 1-based at every public entry point. Letter
//! classification uses the boundary convention `π₀ = π_{n+1} = 0`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A set of positions or letter values, all in `1..=n`.
pub type IndexSet = BTreeSet<usize>;

/// JSON form: an array of letters, e.g. `[2,1]`; the compact string `"21"`
/// is also accepted on input.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "crate::json::PermutationRepr", into = "Vec<usize>")]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    /// Validates that `word` is a permutation of `1..=n` with `n >= 1`.
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        if n == 0 {
            return Err(Error::InvalidPermutation(
                "empty word (n must be at least 1)".into(),
            ));
        }
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!(
                    "letter {v} outside 1..={n}"
                )));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation(format!("letter {v} repeated")));
            }
        }
        Ok(Self { word })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "identity permutation needs n >= 1");
        Self {
            word: (1..=n).collect(),
        }
    }

    /// Compact digit-string form such as `"235419786"`; only for `n <= 9`.
    pub fn from_compact(s: &str) -> Result<Self> {
        if s.is_empty() || s.len() > 9 {
            return Err(Error::Parse(format!(
                "compact form needs 1..=9 digits, got {:?}",
                s
            )));
        }
        let word = s
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::Parse(format!("non-digit {c:?} in compact form")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(word)
    }

    /// Digit string for `n <= 9`, `None` otherwise.
    pub fn to_compact(&self) -> Option<String> {
        (self.len() <= 9).then(|| self.word.iter().map(|v| v.to_string()).collect())
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.word.len()
    }

    /// Always false; permutations have `n >= 1`.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// The letter at 1-based position `i`.
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    /// Letter at position `i` with the virtual zeros at positions `0` and `n + 1`.
    #[inline]
    fn at_padded(&self, i: usize) -> usize {
        if i == 0 || i > self.len() {
            0
        } else {
            self.word[i - 1]
        }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.word
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.word
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (pos, &v) in self.word.iter().enumerate() {
            inv[v - 1] = pos + 1;
        }
        Self { word: inv }
    }

    /// 1-based position of each letter; `positions()[v - 1] = π⁻¹(v)`.
    fn positions(&self) -> Vec<usize> {
        self.inverse().word
    }

    /// Whether the permutation avoids both `2-41-3` and `3-14-2`, where the
    /// middle pair must be adjacent.
    ///
    /// For a descent `π_j > π_{j+1}` a `2-41-3` occurrence needs letters
    /// `a` left of `j` and `b` right of `j + 1`, both strictly between
    /// `π_{j+1}` and `π_j`, with `a < b`; it exists iff the smallest such
    /// `a` is below the largest such `b`. Ascents are handled symmetrically.
    pub fn is_baxter(&self) -> bool {
        let w = &self.word;
        let n = w.len();
        for j in 0..n.saturating_sub(1) {
            let (x, y) = (w[j], w[j + 1]);
            let (lo, hi) = if x > y { (y, x) } else { (x, y) };
            let inside = |v: usize| lo < v && v < hi;
            let left = w[..j].iter().copied().filter(|&v| inside(v));
            let right = w[j + 2..].iter().copied().filter(|&v| inside(v));
            let found = if x > y {
                // 2-41-3: left < right
                match (left.min(), right.max()) {
                    (Some(a), Some(b)) => a < b,
                    _ => false,
                }
            } else {
                // 3-14-2: left > right
                match (left.max(), right.min()) {
                    (Some(a), Some(b)) => a > b,
                    _ => false,
                }
            };
            if found {
                return false;
            }
        }
        true
    }

    /// DES: positions `i` with `π_i > π_{i+1}`.
    pub fn descent_set(&self) -> IndexSet {
        self.descents().map(|i| i + 1).collect()
    }

    /// DT: the letters `π_i` at descents.
    pub fn descent_tops(&self) -> IndexSet {
        self.descents().map(|i| self.word[i]).collect()
    }

    /// DB: the letters `π_{i+1}` at descents.
    pub fn descent_bottoms(&self) -> IndexSet {
        self.descents().map(|i| self.word[i + 1]).collect()
    }

    /// Descent tops shifted down by one, so they land in `1..n`.
    pub fn modified_descent_tops(&self) -> IndexSet {
        self.descents().map(|i| self.word[i] - 1).collect()
    }

    /// `(DT ∪ {π_n}) \ {n}`.
    pub fn hat_descent_tops(&self) -> IndexSet {
        let n = self.len();
        let mut s = self.descent_tops();
        s.insert(self.word[n - 1]);
        s.remove(&n);
        s
    }

    pub fn des(&self) -> usize {
        self.descents().count()
    }

    /// 0-based indices `i` with `word[i] > word[i + 1]`.
    fn descents(&self) -> impl Iterator<Item = usize> + '_ {
        self.word
            .windows(2)
            .enumerate()
            .filter(|(_, p)| p[0] > p[1])
            .map(|(i, _)| i)
    }

    pub fn stat_profile(&self) -> StatProfile {
        let inv = self.inverse();
        let des_set = self.descent_set();
        let idb_set = inv.descent_bottoms();
        let idt_mod_set = inv.modified_descent_tops();
        StatProfile {
            des: des_set.len(),
            maj: des_set.iter().sum(),
            imaj_b: idb_set.iter().sum(),
            imaj_t: idt_mod_set.iter().sum(),
            db_set: self.descent_bottoms(),
            dt_set: self.descent_tops(),
            dt_mod_set: self.modified_descent_tops(),
            dt_hat_set: self.hat_descent_tops(),
            ides_set: inv.descent_set(),
            idt_set: inv.descent_tops(),
            des_set,
            idb_set,
            idt_mod_set,
        }
    }

    /// Class of every letter `1..n` (the letter `n` is always a peak and is omitted).
    pub fn classify_letters(&self) -> LetterClassWord {
        let n = self.len();
        let pos = self.positions();
        let classes = (1..n)
            .map(|letter| {
                let p = pos[letter - 1];
                let before = self.at_padded(p - 1);
                let after = self.at_padded(p + 1);
                match (before > letter, letter < after) {
                    (true, true) => LetterClass::Valley,
                    (false, false) => LetterClass::Peak,
                    (true, false) => LetterClass::DoubleDescent,
                    (false, true) => LetterClass::DoubleAscent,
                }
            })
            .collect();
        LetterClassWord(classes)
    }

    /// Alternating / reverse-alternating / Genocchi flags.
    ///
    /// For `n = 1` there are no comparisons and all three flags are true.
    /// Genocchi uses the pointwise condition: for every `i < n`,
    /// `π_i > π_{i+1}` iff `π_i` is even.
    pub fn shape_flags(&self) -> ShapeFlags {
        let n = self.len();
        let des = self.descent_set();
        let evens: IndexSet = (1..n).filter(|i| i % 2 == 0).collect();
        let odds: IndexSet = (1..n).filter(|i| i % 2 == 1).collect();
        let genocchi = self
            .word
            .windows(2)
            .all(|p| (p[0] > p[1]) == (p[0] % 2 == 0));
        ShapeFlags {
            alternating: des == evens,
            reverse_alternating: des == odds,
            genocchi,
        }
    }

    /// Left-to-right maxima positions (1-based).
    pub fn left_to_right_maxima(&self) -> Vec<usize> {
        let mut best = 0;
        let mut out = Vec::new();
        for (i, &v) in self.word.iter().enumerate() {
            if v > best {
                best = v;
                out.push(i + 1);
            }
        }
        out
    }

    /// Right-to-left maxima positions (1-based), in increasing order.
    pub fn right_to_left_maxima(&self) -> Vec<usize> {
        let mut best = 0;
        let mut out = Vec::new();
        for (i, &v) in self.word.iter().enumerate().rev() {
            if v > best {
                best = v;
                out.push(i + 1);
            }
        }
        out.reverse();
        out
    }

    /// Inserts the letter `n + 1` into gap `gap` (0 = front, n = end).
    pub fn insert_max(&self, gap: usize) -> Self {
        let mut word = Vec::with_capacity(self.len() + 1);
        word.extend_from_slice(&self.word[..gap]);
        word.push(self.len() + 1);
        word.extend_from_slice(&self.word[gap..]);
        Self { word }
    }

    /// Removes the largest letter; `None` when `n = 1`.
    pub fn remove_max(&self) -> Option<Self> {
        let n = self.len();
        (n > 1).then(|| Self {
            word: self.word.iter().copied().filter(|&v| v != n).collect(),
        })
    }

    /// Gaps (0-based, 0 = front) where inserting a new maximum keeps a Baxter
    /// permutation Baxter: just before each left-to-right maximum and just
    /// after each right-to-left maximum.
    pub fn baxter_insertion_gaps(&self) -> Vec<usize> {
        let mut gaps: Vec<usize> = self
            .left_to_right_maxima()
            .into_iter()
            .map(|p| p - 1)
            .chain(self.right_to_left_maxima())
            .collect();
        gaps.sort_unstable();
        gaps.dedup();
        gaps
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.word
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_compact() {
            Some(s) => f.write_str(&s),
            None => {
                let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
                write!(f, "[{}]", parts.join(","))
            }
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts the compact digit form, a JSON array, or comma/space separated letters.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if !s.is_empty() && s.chars().all(|c| c.is_ascii_digit()) {
            return Self::from_compact(s);
        }
        let body = s
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .unwrap_or(s);
        let word = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad letter {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(word)
    }
}

/// Every descent-based statistic of a permutation together with the
/// corresponding statistics of its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatProfile {
    pub des_set: IndexSet,
    pub db_set: IndexSet,
    pub dt_set: IndexSet,
    pub dt_mod_set: IndexSet,
    pub dt_hat_set: IndexSet,
    pub ides_set: IndexSet,
    pub idb_set: IndexSet,
    pub idt_set: IndexSet,
    pub idt_mod_set: IndexSet,
    pub des: usize,
    pub maj: usize,
    pub imaj_b: usize,
    pub imaj_t: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LetterClass {
    Valley,
    Peak,
    DoubleDescent,
    DoubleAscent,
}

/// Letter classes indexed by letter value `1..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LetterClassWord(Vec<LetterClass>);

impl LetterClassWord {
    /// Class of letter `i` (1-based).
    pub fn class_of(&self, i: usize) -> LetterClass {
        self.0[i - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[LetterClass] {
        &self.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShapeFlags {
    pub alternating: bool,
    pub reverse_alternating: bool,
    pub genocchi: bool,
}

/// Quadruple-loop check straight from the pattern definition. Kept for
/// differential testing against [`Permutation::is_baxter`].
pub fn is_baxter_naive(p: &Permutation) -> bool {
    let w = p.as_slice();
    let n = w.len();
    for j in 0..n.saturating_sub(1) {
        for i in 0..j {
            for k in j + 2..n {
                if (w[j + 1] < w[i] && w[i] < w[k] && w[k] < w[j])
                    || (w[j] < w[k] && w[k] < w[i] && w[i] < w[j + 1])
                {
                    return false;
                }
            }
        }
    }
    true
}

/// All Baxter permutations of length `n`, grown level by level from `1` by
/// inserting the new maximum into every admissible gap. Within a level,
/// children follow their parent's order and gaps go left to right.
pub fn generate_baxter(n: usize) -> Vec<Permutation> {
    assert!(n >= 1, "generate_baxter needs n >= 1");
    let mut level = vec![Permutation::identity(1)];
    for _ in 1..n {
        level = level
            .iter()
            .flat_map(|p| {
                p.baxter_insertion_gaps()
                    .into_iter()
                    .map(move |g| p.insert_max(g))
            })
            .collect();
    }
    level
}

/// All of `S_n` in lexicographic order.
pub fn all_permutations(n: usize) -> AllPermutations {
    assert!(n >= 1, "all_permutations needs n >= 1");
    AllPermutations {
        next: Some((1..=n).collect()),
    }
}

pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.next.take()?;
        let mut w = cur.clone();
        // next lexicographic permutation
        if let Some(i) = (0..w.len().saturating_sub(1))
            .rev()
            .find(|&i| w[i] < w[i + 1])
        {
            let j = (i + 1..w.len()).rev().find(|&j| w[j] > w[i]).unwrap();
            w.swap(i, j);
            w[i + 1..].reverse();
            self.next = Some(w);
        }
        Some(Permutation { word: cur })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn set(xs: &[usize]) -> IndexSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn rejects_bad_words() {
        assert!(Permutation::new(vec![]).is_err());
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 3]).is_err());
        assert!("1234567890".parse::<Permutation>().is_err());
        assert_eq!("[2,1]".parse::<Permutation>().unwrap(), p("21"));
        assert_eq!("2, 1".parse::<Permutation>().unwrap(), p("21"));
    }

    #[test]
    fn baxter_examples() {
        assert!(p("235419786").is_baxter());
        assert!(Permutation::identity(7).is_baxter());
        assert!(!p("2413").is_baxter());
        assert!(!p("3142").is_baxter());
        assert!(!is_baxter_naive(&p("2413")));
        assert!(!is_baxter_naive(&p("3142")));
    }

    #[test]
    fn baxter_matches_naive_up_to_7() {
        for n in 1..=7 {
            for q in all_permutations(n) {
                assert_eq!(q.is_baxter(), is_baxter_naive(&q), "{q}");
            }
        }
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(p("235419786").inverse(), p("512439786"));
        assert_eq!(Permutation::identity(5).inverse(), Permutation::identity(5));
        assert_eq!(p("21").inverse(), p("21"));
    }

    #[test]
    fn stat_profile_of_running_example() {
        let s = p("235419786").stat_profile();
        assert_eq!(s.idb_set, set(&[1, 3, 6, 7]));
        assert_eq!(s.des_set, set(&[3, 4, 6, 8]));
        assert_eq!(s.idt_mod_set, set(&[3, 4, 7, 8]));
        assert_eq!(s.maj, 21);
        assert_eq!(s.imaj_b, 17);
        assert_eq!(s.imaj_t, 22);
        assert_eq!(s.dt_hat_set, set(&[4, 5, 6, 8]));
        assert_eq!(s.des, 4);
    }

    #[test]
    fn identity_has_empty_statistics() {
        let s = Permutation::identity(6).stat_profile();
        assert!(s.des_set.is_empty() && s.dt_set.is_empty() && s.idb_set.is_empty());
        assert_eq!((s.des, s.maj, s.imaj_b, s.imaj_t), (0, 0, 0, 0));
        // π_n = n leaves DT unchanged
        assert!(s.dt_hat_set.is_empty());
    }

    #[test]
    fn classify_examples() {
        use LetterClass::*;
        assert_eq!(
            p("512439786").classify_letters().as_slice(),
            &[
                Valley,
                DoubleAscent,
                Valley,
                Peak,
                Peak,
                DoubleDescent,
                Valley,
                Peak
            ]
        );
        assert_eq!(p("21").classify_letters().as_slice(), &[DoubleDescent]);
        assert_eq!(p("12").classify_letters().as_slice(), &[DoubleAscent]);
        assert!(p("1").classify_letters().is_empty());
    }

    #[test]
    fn generator_small_cases() {
        assert_eq!(generate_baxter(1), vec![p("1")]);
        let mut g3 = generate_baxter(3);
        g3.sort();
        assert_eq!(g3, all_permutations(3).collect::<Vec<_>>());
        assert_eq!(generate_baxter(4).len(), 22);
        // deterministic order: parents first, then gaps left to right
        assert_eq!(generate_baxter(2), vec![p("21"), p("12")]);
    }

    #[test]
    fn shape_flag_examples() {
        assert!(p("215463").shape_flags().reverse_alternating);
        assert_eq!(p("215463").inverse(), p("216435"));
        assert!(p("216435").shape_flags().genocchi);
        let id = Permutation::identity(4).shape_flags();
        assert_eq!(
            (id.alternating, id.reverse_alternating, id.genocchi),
            (false, false, false)
        );
        let f = p("21").shape_flags();
        assert!(f.reverse_alternating && !f.alternating && f.genocchi);
        let one = p("1").shape_flags();
        assert!(one.alternating && one.reverse_alternating && one.genocchi);
    }

    #[test]
    fn maxima_and_gaps() {
        let q = p("2413");
        assert_eq!(q.left_to_right_maxima(), vec![1, 2]);
        assert_eq!(q.right_to_left_maxima(), vec![2, 4]);
        assert_eq!(q.baxter_insertion_gaps(), vec![0, 1, 2, 4]);
        assert_eq!(q.insert_max(0), p("52413"));
        assert_eq!(p("52413").remove_max(), Some(q));
        assert_eq!(p("1").remove_max(), None);
    }

    #[test]
    fn lexicographic_enumeration() {
        let all: Vec<_> = all_permutations(3).map(|q| q.to_string()).collect();
        assert_eq!(all, ["123", "132", "213", "231", "312", "321"]);
        assert_eq!(all_permutations(6).count(), 720);
    }
}
