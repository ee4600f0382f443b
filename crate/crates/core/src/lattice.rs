//! North-east lattice paths in the quarter plane and vertex-disjoint triples.
//!
//! A path of length `m` visits `m + 1` points. Every path in a triple starts
//! on the antidiagonal `x + y = 2`, so the `i`-th vertex of each path lies on
//! `x + y = 2 + i`; two such paths can only meet at equal step indices.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::IndexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridPoint {
    pub x: usize,
    pub y: usize,
}

impl GridPoint {
    pub const fn new(x: usize, y: usize) -> Self {
        Self { x, y }
    }

    pub fn squared_distance(self, other: GridPoint) -> usize {
        let dx = self.x.abs_diff(other.x);
        let dy = self.y.abs_diff(other.y);
        dx * dx + dy * dy
    }

    fn advance(self, step: Step) -> Self {
        match step {
            Step::H => Self::new(self.x + 1, self.y),
            Step::V => Self::new(self.x, self.y + 1),
        }
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

pub const BOTTOM_START: GridPoint = GridPoint::new(2, 0);
pub const MIDDLE_START: GridPoint = GridPoint::new(1, 1);
pub const TOP_START: GridPoint = GridPoint::new(0, 2);

/// `H < V`, which fixes the enumeration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    H,
    V,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::H => 'H',
            Step::V => 'V',
        }
    }

    pub fn from_char(c: char) -> Result<Self> {
        match c {
            'H' => Ok(Step::H),
            'V' => Ok(Step::V),
            other => Err(Error::Parse(format!("step must be H or V, got {other:?}"))),
        }
    }
}

/// JSON form: `{"start":[x,y],"steps":"HVVH"}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "crate::json::PathRepr", into = "crate::json::PathRepr")]
pub struct LatticePath {
    pub start: GridPoint,
    pub steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(start: GridPoint, steps: Vec<Step>) -> Self {
        Self { start, steps }
    }

    pub fn from_word(start: GridPoint, word: &str) -> Result<Self> {
        let steps = word.chars().map(Step::from_char).collect::<Result<_>>()?;
        Ok(Self { start, steps })
    }

    pub fn word(&self) -> String {
        self.steps.iter().map(|s| s.as_char()).collect()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Step `i`, 1-based.
    pub fn step(&self, i: usize) -> Step {
        self.steps[i - 1]
    }

    pub fn horizontal_count(&self) -> usize {
        self.steps.iter().filter(|&&s| s == Step::H).count()
    }

    /// The `m + 1` visited points in order.
    pub fn vertices(&self) -> Vec<GridPoint> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut cur = self.start;
        out.push(cur);
        for &s in &self.steps {
            cur = cur.advance(s);
            out.push(cur);
        }
        out
    }

    /// Starting point of step `i` (1-based); `i = m + 1` gives the endpoint.
    pub fn step_start(&self, i: usize) -> GridPoint {
        self.steps[..i - 1]
            .iter()
            .fold(self.start, |p, &s| p.advance(s))
    }

    pub fn end(&self) -> GridPoint {
        self.step_start(self.steps.len() + 1)
    }
}

/// The path of length `length` from `start` whose step `i` is horizontal iff `i ∈ set`.
pub fn encode_set(set: &IndexSet, length: usize, start: GridPoint) -> Result<LatticePath> {
    if let Some(&bad) = set.iter().find(|&&i| i == 0 || i > length) {
        return Err(Error::Domain(format!(
            "element {bad} of the encoded set is outside 1..={length}"
        )));
    }
    let steps = (1..=length)
        .map(|i| if set.contains(&i) { Step::H } else { Step::V })
        .collect();
    Ok(LatticePath { start, steps })
}

/// The set of horizontal step indices.
pub fn decode_path(path: &LatticePath) -> IndexSet {
    path.steps
        .iter()
        .enumerate()
        .filter(|(_, &s)| s == Step::H)
        .map(|(i, _)| i + 1)
        .collect()
}

/// Bottom, middle and top endpoints of a triple in `Tlp_{n,k}`.
pub fn expected_endpoints(n: usize, k: usize) -> (GridPoint, GridPoint, GridPoint) {
    assert!(n >= 1 && k < n, "need 0 <= k <= n-1");
    (
        GridPoint::new(k + 2, n - k - 1),
        GridPoint::new(k + 1, n - k),
        GridPoint::new(k, n - k + 1),
    )
}

/// JSON form: `{"bottom":…,"middle":…,"top":…}`. Deserializing checks the
/// start points and equal lengths; use [`crate::json::triple_from_json_strict`]
/// to also require vertex-disjointness.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "crate::json::TripleRepr", into = "crate::json::TripleRepr")]
pub struct PathTriple {
    pub bottom: LatticePath,
    pub middle: LatticePath,
    pub top: LatticePath,
}

impl PathTriple {
    pub fn new(bottom: LatticePath, middle: LatticePath, top: LatticePath) -> Self {
        Self {
            bottom,
            middle,
            top,
        }
    }

    /// Builds the triple encoding three sets with the standard starts.
    pub fn encode(
        length: usize,
        bottom: &IndexSet,
        middle: &IndexSet,
        top: &IndexSet,
    ) -> Result<Self> {
        Ok(Self {
            bottom: encode_set(bottom, length, BOTTOM_START)?,
            middle: encode_set(middle, length, MIDDLE_START)?,
            top: encode_set(top, length, TOP_START)?,
        })
    }

    pub fn decode(&self) -> (IndexSet, IndexSet, IndexSet) {
        (
            decode_path(&self.bottom),
            decode_path(&self.middle),
            decode_path(&self.top),
        )
    }

    /// Common path length, or `None` if the lengths differ.
    pub fn length(&self) -> Option<usize> {
        let m = self.bottom.len();
        (self.middle.len() == m && self.top.len() == m).then_some(m)
    }

    /// Pairwise vertex-disjointness, endpoints included.
    pub fn is_nonintersecting(&self) -> bool {
        let b: HashSet<_> = self.bottom.vertices().into_iter().collect();
        let m: HashSet<_> = self.middle.vertices().into_iter().collect();
        let t: HashSet<_> = self.top.vertices().into_iter().collect();
        b.is_disjoint(&m) && m.is_disjoint(&t) && b.is_disjoint(&t)
    }

    /// Equal lengths and the standard start points; returns the length.
    pub fn check_shape(&self) -> Result<usize> {
        let m = self
            .length()
            .ok_or_else(|| Error::InvalidTriple("paths have unequal lengths".into()))?;
        let starts = [
            ("bottom", &self.bottom, BOTTOM_START),
            ("middle", &self.middle, MIDDLE_START),
            ("top", &self.top, TOP_START),
        ];
        for (name, path, start) in starts {
            if path.start != start {
                return Err(Error::InvalidTriple(format!(
                    "{name} path starts at {} instead of {start}",
                    path.start
                )));
            }
        }
        Ok(m)
    }

    /// Checks every `Tlp_{n,k}` invariant and returns `(n, k)`.
    pub fn tlp_parameters(&self) -> Result<(usize, usize)> {
        let n = self.check_shape()? + 1;
        let k = self.middle.horizontal_count();
        if self.bottom.horizontal_count() != k || self.top.horizontal_count() != k {
            return Err(Error::InvalidTriple(
                "paths have different numbers of horizontal steps".into(),
            ));
        }
        // equal starts-on-antidiagonal and equal H counts fix the endpoints
        debug_assert_eq!(
            (self.bottom.end(), self.middle.end(), self.top.end()),
            expected_endpoints(n, k)
        );
        if !self.is_nonintersecting() {
            return Err(Error::InvalidTriple("paths are not vertex-disjoint".into()));
        }
        Ok((n, k))
    }

    pub fn is_tlp(&self, n: usize, k: usize) -> bool {
        self.tlp_parameters().is_ok_and(|nk| nk == (n, k))
    }
}

/// Every element of `Tlp_{n,k}` exactly once, ordered lexicographically by
/// the bottom, middle and top step words (`H < V`).
pub fn enumerate_tlp(n: usize, k: usize) -> Vec<PathTriple> {
    assert!(n >= 1 && k < n, "need 0 <= k <= n-1");
    let m = n - 1;
    let mut out = Vec::new();
    let bottoms = paths_avoiding(BOTTOM_START, m, k, None);
    for bottom in &bottoms {
        let bx = xs(bottom);
        for middle in paths_avoiding(MIDDLE_START, m, k, Some(&bx)) {
            let mx = xs(&middle);
            for top in paths_avoiding(TOP_START, m, k, Some(&mx)) {
                out.push(PathTriple::new(bottom.clone(), middle.clone(), top));
            }
        }
    }
    out
}

/// x-coordinate at each vertex index.
fn xs(p: &LatticePath) -> Vec<usize> {
    p.vertices().iter().map(|v| v.x).collect()
}

/// All paths of `len` steps with `h` horizontal steps from `start`, in
/// lexicographic order, staying strictly left of `right_of` (given as an
/// x-coordinate per vertex index). Starting left of it, "strictly left at
/// every index" is the same as "vertex-disjoint" for paths on shared
/// antidiagonals.
fn paths_avoiding(
    start: GridPoint,
    len: usize,
    h: usize,
    right_of: Option<&[usize]>,
) -> Vec<LatticePath> {
    struct Walk<'a> {
        start: GridPoint,
        len: usize,
        bound: Option<&'a [usize]>,
        steps: Vec<Step>,
        out: Vec<LatticePath>,
    }

    impl Walk<'_> {
        fn go(&mut self, x: usize, h_left: usize) {
            let idx = self.steps.len();
            if idx == self.len {
                self.out
                    .push(LatticePath::new(self.start, self.steps.clone()));
                return;
            }
            let v_left = self.len - idx - h_left;
            let fits = |nx: usize| self.bound.is_none_or(|b| nx < b[idx + 1]);
            let (h_ok, v_ok) = (h_left > 0 && fits(x + 1), v_left > 0 && fits(x));
            if h_ok {
                self.steps.push(Step::H);
                self.go(x + 1, h_left - 1);
                self.steps.pop();
            }
            if v_ok {
                self.steps.push(Step::V);
                self.go(x, h_left);
                self.steps.pop();
            }
        }
    }

    if h > len || right_of.is_some_and(|b| start.x >= b[0]) {
        return Vec::new();
    }
    let mut walk = Walk {
        start,
        len,
        bound: right_of,
        steps: Vec::with_capacity(len),
        out: Vec::new(),
    };
    walk.go(start.x, h);
    walk.out
}
