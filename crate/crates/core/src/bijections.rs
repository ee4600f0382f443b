//! Maps between Baxter permutations, Baxter histories and path triples.
//!
//! * `gamma`: bottom, middle, top encode `IDB`, `DES`, modified `IDT`.
//! * `gamma_prime(p) = gamma(p⁻¹)`: `DB`, `IDES`, modified `DT`.
//! * `psi = phi ∘ psi_fv`: `DB`, `IDES`, `(DT ∪ {π_n}) \ {n}`.
//!
//! `gamma_prime` and `psi` share their bottom and middle paths, so inverting
//! `gamma_prime` reduces to recovering the top path of `psi` and then
//! running `psi` backwards.

use crate::error::{Error, Result};
use crate::laguerre::{psi_fv, psi_fv_inverse, ColoredMotzkinWord, ColoredStep, LaguerreHistory};
use crate::lattice::{
    encode_set, GridPoint, LatticePath, PathTriple, Step, BOTTOM_START, MIDDLE_START, TOP_START,
};
use crate::perm::{IndexSet, Permutation};

fn require_baxter(p: &Permutation) -> Result<()> {
    if p.is_baxter() {
        Ok(())
    } else {
        Err(Error::NotBaxter(p.to_string()))
    }
}

pub fn gamma(p: &Permutation) -> Result<PathTriple> {
    require_baxter(p)?;
    Ok(gamma_unchecked(p))
}

/// `gamma` without the Baxter check; the paths may intersect.
pub fn gamma_unchecked(p: &Permutation) -> PathTriple {
    let inv = p.inverse();
    PathTriple::encode(
        p.len() - 1,
        &inv.descent_bottoms(),
        &p.descent_set(),
        &inv.modified_descent_tops(),
    )
    .expect("descent statistics lie in 1..n")
}

pub fn gamma_prime(p: &Permutation) -> Result<PathTriple> {
    require_baxter(p)?;
    Ok(gamma_prime_unchecked(p))
}

pub fn gamma_prime_unchecked(p: &Permutation) -> PathTriple {
    gamma_unchecked(&p.inverse())
}

/// Bottom and top steps come from the Motzkin word; the middle path's step
/// starts sit at `(x - μ_i, y + μ_i)` relative to the bottom path's, and its
/// final point is the bottom endpoint shifted by `(-1, +1)`.
pub fn phi(h: &LaguerreHistory) -> Result<PathTriple> {
    if !h.validate().laguerre_ok {
        return Err(Error::MalformedHistory(format!(
            "{h} violates 1 <= μ_i <= h_i"
        )));
    }
    let steps = h.word().steps();
    let bottom_steps = steps
        .iter()
        .map(|s| match s {
            ColoredStep::U | ColoredStep::HB => Step::H,
            ColoredStep::D | ColoredStep::HR => Step::V,
        })
        .collect();
    let top_steps = steps
        .iter()
        .map(|s| match s {
            ColoredStep::D | ColoredStep::HB => Step::H,
            ColoredStep::U | ColoredStep::HR => Step::V,
        })
        .collect();
    let bottom = LatticePath::new(BOTTOM_START, bottom_steps);
    let top = LatticePath::new(TOP_START, top_steps);

    let bv = bottom.vertices();
    let m = h.len();
    // middle vertex i: bottom vertex i shifted by its weight; weight 1 at the end
    let middle_points: Vec<GridPoint> = (0..=m)
        .map(|i| {
            let mu = if i < m { h.weights()[i] } else { 1 };
            GridPoint::new(bv[i].x - mu, bv[i].y + mu)
        })
        .collect();
    let middle_steps = middle_points
        .windows(2)
        .enumerate()
        .map(|(i, w)| {
            let dx = w[1].x as i64 - w[0].x as i64;
            let dy = w[1].y as i64 - w[0].y as i64;
            match (dx, dy) {
                (1, 0) => Ok(Step::H),
                (0, 1) => Ok(Step::V),
                _ => Err(Error::MalformedMiddle {
                    step: i + 1,
                    dx,
                    dy,
                }),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    debug_assert_eq!(middle_points[0], MIDDLE_START);
    Ok(PathTriple::new(
        bottom,
        LatticePath::new(MIDDLE_START, middle_steps),
        top,
    ))
}

/// Reads the history back off a triple: the step kind from the
/// (bottom, top) step pair, the weight from the bottom-to-middle offset.
pub fn phi_inverse(t: &PathTriple) -> Result<LaguerreHistory> {
    t.tlp_parameters()
        .map_err(|e| Error::NotInImage(e.to_string()))?;
    let word: Vec<ColoredStep> = t
        .bottom
        .steps
        .iter()
        .zip(&t.top.steps)
        .map(|(b, top)| match (b, top) {
            (Step::H, Step::V) => ColoredStep::U,
            (Step::V, Step::H) => ColoredStep::D,
            (Step::V, Step::V) => ColoredStep::HR,
            (Step::H, Step::H) => ColoredStep::HB,
        })
        .collect();
    let word = ColoredMotzkinWord::new(word).map_err(|e| Error::NotInImage(e.to_string()))?;
    let bv = t.bottom.vertices();
    let mv = t.middle.vertices();
    let weights = bv[..t.bottom.len()]
        .iter()
        .zip(&mv)
        .enumerate()
        .map(|(i, (b, m))| {
            let dx = b.x as i64 - m.x as i64;
            let dy = m.y as i64 - b.y as i64;
            if dx != dy || dx < 1 {
                return Err(Error::NotInImage(format!(
                    "middle offset ({},{}) at step {} is not (-μ,+μ) with μ >= 1",
                    -dx,
                    dy,
                    i + 1
                )));
            }
            Ok(dx as usize)
        })
        .collect::<Result<Vec<_>>>()?;
    let h = LaguerreHistory::new(word, weights)?;
    if !h.validate().baxter_ok {
        return Err(Error::NotInImage(format!("{h} is not a Baxter history")));
    }
    if phi(&h)? != *t {
        return Err(Error::NotInImage(
            "triple is not reproduced by its history".into(),
        ));
    }
    Ok(h)
}

pub fn psi(p: &Permutation) -> Result<PathTriple> {
    require_baxter(p)?;
    phi(&psi_fv(p))
}

pub fn psi_inverse(t: &PathTriple) -> Result<Permutation> {
    psi_fv_inverse(&phi_inverse(t)?)
}

/// Which branch of the `gamma_prime` inverse fired, with the chosen `π_n`
/// in the second case.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InverseCase {
    /// Last top step vertical (`π_n = n`).
    LastTopVertical,
    /// Last top step horizontal; `last_letter` is the recovered `π_n`.
    LastTopHorizontal { last_letter: usize },
}

/// Inverts `gamma_prime` on `Tlp_{n,k}`.
pub fn gamma_prime_inverse(t: &PathTriple) -> Result<Permutation> {
    gamma_prime_inverse_traced(t).map(|(p, _)| p)
}

/// [`gamma_prime_inverse`], also reporting which case was used.
///
/// The top path of `gamma_prime` encodes the descent tops minus one; shifting
/// back up gives `DT`. If `n ∉ DT` that already equals the top set of `psi`.
/// Otherwise `n` is replaced by the last letter `j`, which must be the unique
/// index whose candidate top path avoids the middle path and whose `j`-th
/// step start is a diagonal unit away from the middle path's.
pub fn gamma_prime_inverse_traced(t: &PathTriple) -> Result<(Permutation, InverseCase)> {
    let (n, _) = t
        .tlp_parameters()
        .map_err(|e| Error::NotInImage(e.to_string()))?;
    let m = n - 1;
    let shifted: IndexSet = t
        .top
        .steps
        .iter()
        .enumerate()
        .filter(|(_, &s)| s == Step::H)
        .map(|(i, _)| i + 2)
        .collect();
    if t.top.steps.last().is_none_or(|&s| s == Step::V) {
        let top = encode_set(&shifted, m, TOP_START)?;
        let p = psi_inverse(&PathTriple::new(t.bottom.clone(), t.middle.clone(), top))?;
        return Ok((p, InverseCase::LastTopVertical));
    }

    let mut base = shifted;
    base.remove(&n);
    let mut candidates = Vec::new();
    for j in (1..=m).filter(|j| !base.contains(j)) {
        let mut s = base.clone();
        s.insert(j);
        let top = encode_set(&s, m, TOP_START)?;
        let disjoint = top
            .vertices()
            .iter()
            .zip(t.middle.vertices())
            .all(|(a, b)| *a != b);
        if disjoint && t.middle.step_start(j).squared_distance(top.step_start(j)) == 2 {
            candidates.push((j, top));
        }
    }
    match candidates.len() {
        1 => {
            let (j, top) = candidates.pop().unwrap();
            let p = psi_inverse(&PathTriple::new(t.bottom.clone(), t.middle.clone(), top))?;
            Ok((p, InverseCase::LastTopHorizontal { last_letter: j }))
        }
        c => {
            let js: Vec<usize> = candidates.iter().map(|(j, _)| *j).collect();
            Err(Error::NotInImage(format!(
                "expected exactly one candidate last letter, found {c}: {js:?}"
            )))
        }
    }
}

/// Inverts `gamma` on `Tlp_{n,k}`.
pub fn gamma_inverse(t: &PathTriple) -> Result<Permutation> {
    Ok(gamma_prime_inverse(t)?.inverse())
}
