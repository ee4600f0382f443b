//! Wire forms of the domain types. Every conversion from the wire form goes
//! back through the validating constructors, so a deserialized value always
//! satisfies its type invariants.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laguerre::LaguerreHistory;
use crate::lattice::{GridPoint, LatticePath, PathTriple};
use crate::perm::Permutation;

#[derive(Deserialize)]
#[serde(untagged)]
pub enum PermutationRepr {
    Letters(Vec<usize>),
    Compact(String),
}

impl TryFrom<PermutationRepr> for Permutation {
    type Error = Error;

    fn try_from(r: PermutationRepr) -> Result<Self> {
        match r {
            PermutationRepr::Letters(w) => Permutation::new(w),
            PermutationRepr::Compact(s) => Permutation::from_compact(&s),
        }
    }
}

#[derive(Serialize, Deserialize)]
pub struct PathRepr {
    start: [usize; 2],
    steps: String,
}

impl TryFrom<PathRepr> for LatticePath {
    type Error = Error;

    fn try_from(r: PathRepr) -> Result<Self> {
        LatticePath::from_word(GridPoint::new(r.start[0], r.start[1]), &r.steps)
    }
}

impl From<LatticePath> for PathRepr {
    fn from(p: LatticePath) -> Self {
        PathRepr {
            start: [p.start.x, p.start.y],
            steps: p.word(),
        }
    }
}

#[derive(Serialize, Deserialize)]
pub struct TripleRepr {
    bottom: LatticePath,
    middle: LatticePath,
    top: LatticePath,
}

impl TryFrom<TripleRepr> for PathTriple {
    type Error = Error;

    fn try_from(r: TripleRepr) -> Result<Self> {
        let t = PathTriple::new(r.bottom, r.middle, r.top);
        t.check_shape()?;
        Ok(t)
    }
}

impl From<PathTriple> for TripleRepr {
    fn from(t: PathTriple) -> Self {
        TripleRepr {
            bottom: t.bottom,
            middle: t.middle,
            top: t.top,
        }
    }
}

#[derive(Serialize, Deserialize)]
pub struct HistoryRepr {
    word: String,
    weights: Vec<usize>,
}

impl TryFrom<HistoryRepr> for LaguerreHistory {
    type Error = Error;

    fn try_from(r: HistoryRepr) -> Result<Self> {
        let h = LaguerreHistory::parse(&r.word, r.weights)?;
        if !h.validate().laguerre_ok {
            return Err(Error::MalformedHistory(format!(
                "weights of {h} violate 1 <= μ_i <= h_i"
            )));
        }
        Ok(h)
    }
}

impl From<LaguerreHistory> for HistoryRepr {
    fn from(h: LaguerreHistory) -> Self {
        HistoryRepr {
            word: h.word().to_string(),
            weights: h.weights().to_vec(),
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("domain types always serialize")
}

pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// Parses a triple and additionally requires it to lie in some `Tlp_{n,k}`.
pub fn triple_from_json_strict(text: &str) -> Result<PathTriple> {
    let t: PathTriple = from_json(text)?;
    t.tlp_parameters()?;
    Ok(t)
}
