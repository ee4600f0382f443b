//! Reference implementations written directly from the definitions. None of
//! them call into the crate's algorithms, only into its plain data types.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use baxlab_core::perm::Permutation;

pub type Set = BTreeSet<usize>;

/// Quadruple loop over `2-41-3` and `3-14-2` with the middle pair adjacent.
pub fn is_baxter(w: &[usize]) -> bool {
    let n = w.len();
    for j in 0..n.saturating_sub(1) {
        let (b, c) = (w[j], w[j + 1]);
        for i in 0..j {
            for k in j + 2..n {
                let (a, d) = (w[i], w[k]);
                // 2-41-3: c < a < d < b
                if c < a && a < d && d < b {
                    return false;
                }
                // 3-14-2: b < d < a < c
                if b < d && d < a && a < c {
                    return false;
                }
            }
        }
    }
    true
}

pub fn inverse(w: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; w.len()];
    for (i, &v) in w.iter().enumerate() {
        inv[v - 1] = i + 1;
    }
    inv
}

pub fn des_set(w: &[usize]) -> Set {
    (1..w.len()).filter(|&i| w[i - 1] > w[i]).collect()
}

pub fn descent_tops(w: &[usize]) -> Set {
    (1..w.len())
        .filter(|&i| w[i - 1] > w[i])
        .map(|i| w[i - 1])
        .collect()
}

pub fn descent_bottoms(w: &[usize]) -> Set {
    (1..w.len())
        .filter(|&i| w[i - 1] > w[i])
        .map(|i| w[i])
        .collect()
}

pub fn modified_tops(w: &[usize]) -> Set {
    descent_tops(w).into_iter().map(|v| v - 1).collect()
}

/// `(DT ∪ {π_n}) \ {n}`.
pub fn hat_tops(w: &[usize]) -> Set {
    let n = w.len();
    let mut s = descent_tops(w);
    s.insert(w[n - 1]);
    s.remove(&n);
    s
}

pub struct Stats {
    pub des: usize,
    pub maj: usize,
    pub imaj_b: usize,
    pub imaj_t: usize,
}

pub fn stats(w: &[usize]) -> Stats {
    let inv = inverse(w);
    Stats {
        des: des_set(w).len(),
        maj: des_set(w).iter().sum(),
        imaj_b: descent_bottoms(&inv).iter().sum(),
        imaj_t: modified_tops(&inv).iter().sum(),
    }
}

/// `S_n` in lexicographic order, by recursion on the first letter.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: &[usize], prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for (i, &v) in rest.iter().enumerate() {
            let mut r = rest.to_vec();
            r.remove(i);
            prefix.push(v);
            go(&r, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&(1..=n).collect::<Vec<_>>(), &mut Vec::new(), &mut out);
    out
}

pub fn baxter_perms(n: usize) -> Vec<Vec<usize>> {
    permutations(n)
        .into_iter()
        .filter(|w| is_baxter(w))
        .collect()
}

pub fn binom(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `C(n+1,k) C(n+1,k+1) C(n+1,k+2) / (C(n+1,1) C(n+1,2))`.
pub fn tlp_summand(n: u128, k: u128) -> u128 {
    binom(n + 1, k) * binom(n + 1, k + 1) * binom(n + 1, k + 2)
        / (binom(n + 1, 1) * binom(n + 1, 2))
}

pub fn baxter_number(n: u128) -> u128 {
    (0..n).map(|k| tlp_summand(n, k)).sum()
}

pub fn catalan(n: u128) -> u128 {
    binom(2 * n, n) / (n + 1)
}

/// Coefficients of the Gaussian binomial: the coefficient of `q^d` counts the
/// k-subsets of `{1..n}` whose element sum exceeds the minimum by `d`.
pub fn q_binomial(n: usize, k: usize) -> Vec<u64> {
    if k > n {
        return vec![];
    }
    let mut out = vec![0u64; k * (n - k) + 1];
    let base = k * (k + 1) / 2;
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == k {
            let sum: usize = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).sum();
            out[sum - base] += 1;
        }
    }
    out
}

/// Gaussian binomial evaluated at an integer `q >= 2` by the product formula.
pub fn q_binomial_at(n: u32, k: u32, q: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let q = BigInt::from(q);
    let one = BigInt::one();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= q.pow(n - i) - &one;
        den *= q.pow(i + 1) - &one;
    }
    assert!((&num % &den).is_zero());
    num / den
}

/// The closed form of the `(t,q)`-Baxter polynomial evaluated at integers, `q >= 2`.
pub fn baxter_polynomial_at(n: u32, t: u32, q: u32) -> BigInt {
    let (tb, qb) = (BigInt::from(t), BigInt::from(q));
    let num: BigInt = (0..n)
        .map(|k| {
            tb.pow(k)
                * qb.pow(3 * k * (k + 1) / 2)
                * q_binomial_at(n + 1, k, q)
                * q_binomial_at(n + 1, k + 1, q)
                * q_binomial_at(n + 1, k + 2, q)
        })
        .sum();
    let den = q_binomial_at(n + 1, 1, q) * q_binomial_at(n + 1, 2, q);
    assert!((&num % &den).is_zero());
    num / den
}

/// `Σ_{π ∈ Bax_n} t^des q^(imaj_B + maj + imaj_T)` as `(t, q) -> count`.
pub fn baxter_polynomial_brute(n: usize) -> BTreeMap<(u32, u32), u64> {
    let mut out = BTreeMap::new();
    for w in baxter_perms(n) {
        let s = stats(&w);
        *out.entry((s.des as u32, (s.imaj_b + s.maj + s.imaj_t) as u32))
            .or_insert(0) += 1;
    }
    out
}

pub fn class_code(w: &[usize], i: usize) -> char {
    let n = w.len();
    let pos = w.iter().position(|&v| v == i).unwrap();
    let left = if pos == 0 { 0 } else { w[pos - 1] };
    let right = if pos + 1 == n { 0 } else { w[pos + 1] };
    match (left > i, right > i) {
        (true, true) => 'U',
        (false, false) => 'D',
        (true, false) => 'B',
        (false, true) => 'R',
    }
}

/// Laguerre history straight from the definitions of the colour classes and
/// of `μ_i = 1 + #{j : 2 <= j < pos(i), π_j < i < π_{j-1}}`.
pub fn laguerre_history(w: &[usize]) -> (String, Vec<usize>) {
    let n = w.len();
    let word = (1..n).map(|i| class_code(w, i)).collect();
    let weights = (1..n)
        .map(|i| {
            let pos = w.iter().position(|&v| v == i).unwrap() + 1;
            1 + (2..pos).filter(|&j| w[j - 1] < i && i < w[j - 2]).count()
        })
        .collect();
    (word, weights)
}

/// Vertices of a path from `start` following the H/V word.
pub fn vertices(start: (usize, usize), word: &str) -> Vec<(usize, usize)> {
    let mut v = vec![start];
    let (mut x, mut y) = start;
    for c in word.chars() {
        match c {
            'H' => x += 1,
            'V' => y += 1,
            _ => panic!("bad step {c}"),
        }
        v.push((x, y));
    }
    v
}

pub fn words_with(len: usize, h: usize) -> Vec<String> {
    (0u32..(1 << len))
        .filter(|m| m.count_ones() as usize == h)
        .map(|m| {
            (0..len)
                .map(|i| if m >> i & 1 == 1 { 'H' } else { 'V' })
                .collect()
        })
        .collect()
}

/// All vertex-disjoint triples of `Tlp(n, k)` as sorted `(bottom, middle, top)` words.
pub fn tlp_brute(n: usize, k: usize) -> BTreeSet<(String, String, String)> {
    let words = words_with(n - 1, k);
    let mut out = BTreeSet::new();
    for b in &words {
        let vb: HashSet<_> = vertices((2, 0), b).into_iter().collect();
        for m in &words {
            let vm = vertices((1, 1), m);
            if vm.iter().any(|p| vb.contains(p)) {
                continue;
            }
            let vm: HashSet<_> = vm.into_iter().collect();
            for t in &words {
                if vertices((0, 2), t)
                    .iter()
                    .any(|p| vb.contains(p) || vm.contains(p))
                {
                    continue;
                }
                out.insert((b.clone(), m.clone(), t.clone()));
            }
        }
    }
    out
}

pub fn perm(w: &[usize]) -> Permutation {
    Permutation::new(w.to_vec()).unwrap()
}

pub fn permutation_strategy(max_n: usize) -> impl Strategy<Value = Vec<usize>> {
    (1..=max_n).prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
}

/// Random Baxter permutation grown by repeated maximum insertion; each entry
/// of `choices` picks one admissible gap.
pub fn grow_baxter(choices: &[usize]) -> Vec<usize> {
    let mut w = vec![1];
    for &c in choices {
        let n = w.len();
        let mut gaps = Vec::new();
        let mut best = 0;
        for (i, &v) in w.iter().enumerate() {
            if v > best {
                best = v;
                gaps.push(i);
            }
        }
        best = 0;
        for i in (0..n).rev() {
            if w[i] > best {
                best = w[i];
                gaps.push(i + 1);
            }
        }
        gaps.sort_unstable();
        gaps.dedup();
        w.insert(gaps[c % gaps.len()], n + 1);
    }
    w
}

pub fn baxter_strategy(max_n: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(any::<usize>(), 0..max_n).prop_map(|c| grow_baxter(&c))
}
