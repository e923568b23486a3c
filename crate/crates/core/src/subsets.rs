//! k-subsets of `{1, …, l}` and their colexicographic ranks.
//!
//! Subsets are sorted `Vec<usize>`s with 1-based elements. Ranks are 1-based:
//! `{1,2}` has rank 1, `{1,3}` rank 2, `{2,3}` rank 3, `{1,4}` rank 4, …

use crate::error::{Error, Result};

/// Binomial coefficient, `None` on overflow.
pub fn binomial(n: usize, k: usize) -> Option<usize> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

/// 1-based colexicographic rank: `1 + Σ C(s_i − 1, i)` over the sorted
/// elements `s_1 < … < s_k`.
pub fn colex_rank(subset: &[usize]) -> usize {
    1 + subset
        .iter()
        .enumerate()
        .map(|(i, &s)| binomial(s - 1, i + 1).unwrap_or(usize::MAX))
        .sum::<usize>()
}

/// Inverse of [`colex_rank`] for subsets of size `k`.
pub fn colex_unrank(rank: usize, k: usize) -> Vec<usize> {
    let mut rem = rank - 1;
    let mut out = vec![0; k];
    for i in (1..=k).rev() {
        // largest s with C(s - 1, i) <= rem
        let mut s = i;
        while binomial(s, i).is_some_and(|c| c <= rem) {
            s += 1;
        }
        rem -= binomial(s - 1, i).unwrap_or(0);
        out[i - 1] = s;
    }
    out
}

/// All k-subsets of `{1, …, l}` in colex rank order.
pub fn subsets_colex(l: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, l: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for s in start..=l {
            cur.push(s);
            rec(s + 1, l, k, cur, out);
            cur.pop();
        }
    }
    rec(1, l, k, &mut cur, &mut out);
    out.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    out
}

/// Checks that `subset` is a sorted k-subset of `{1, …, l}`.
pub fn check_subset(subset: &[usize], l: usize, k: usize) -> Result<()> {
    if subset.len() != k {
        return Err(Error::Domain(format!(
            "subset has {} elements, expected {k}",
            subset.len()
        )));
    }
    if subset.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Domain("subset elements must be strictly increasing".into()));
    }
    if subset.first().is_some_and(|&s| s == 0) || subset.last().is_some_and(|&s| s > l) {
        return Err(Error::Domain(format!("subset element outside 1..={l}")));
    }
    Ok(())
}

pub fn is_disjoint(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

pub fn format_subset(subset: &[usize]) -> String {
    let parts: Vec<String> = subset.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(","))
}
