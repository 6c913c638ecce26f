//! Small enumeration helpers shared by the algebra modules.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exact binomial coefficient; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// All sequences of `parts` non-negative integers summing to `total`.
pub fn weak_compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut cur = vec![0; parts];
    fill_weak(total, 0, &mut cur, &mut out);
    out
}

fn fill_weak(rest: usize, pos: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if pos + 1 == cur.len() {
        cur[pos] = rest;
        out.push(cur.clone());
        return;
    }
    for v in 0..=rest {
        cur[pos] = v;
        fill_weak(rest - v, pos + 1, cur, out);
    }
}

/// All sequences of `parts` positive integers summing to `total`.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts > total {
        return if parts == 0 && total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    weak_compositions(total - parts, parts)
        .into_iter()
        .map(|c| c.into_iter().map(|v| v + 1).collect())
        .collect()
}

/// All compositions of `total` into any number of positive parts.
pub fn all_compositions(total: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    (1..=total).flat_map(|p| compositions(total, p)).collect()
}

/// Ways to cut a sequence of length `len` into `parts` consecutive blocks,
/// returned as the list of block lengths. Blocks may be empty when
/// `allow_empty` is set.
pub fn block_lengths(len: usize, parts: usize, allow_empty: bool) -> Vec<Vec<usize>> {
    if allow_empty {
        weak_compositions(len, parts)
    } else {
        compositions(len, parts)
    }
}

/// Non-decreasing sequences of length `len` with entries in `0..slots`.
pub fn multichoose(slots: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fill_multichoose(slots, len, 0, &mut cur, &mut out);
    out
}

fn fill_multichoose(
    slots: usize,
    len: usize,
    from: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if cur.len() == len {
        out.push(cur.clone());
        return;
    }
    for s in from..slots {
        cur.push(s);
        fill_multichoose(slots, len, s, cur, out);
        cur.pop();
    }
}

/// Strictly increasing sequences of length `k` with entries in `0..n`.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    multichoose(n - k + 1, k)
        .into_iter()
        .map(|m| m.into_iter().enumerate().map(|(j, s)| s + j).collect())
        .collect()
}

/// Cartesian product of a list of choice lists.
pub fn cartesian<T: Clone>(choices: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = vec![Vec::new()];
    for options in choices {
        let mut next = Vec::with_capacity(out.len() * options.len());
        for prefix in &out {
            for o in options {
                let mut p = prefix.clone();
                p.push(o.clone());
                next.push(p);
            }
        }
        out = next;
    }
    out
}
