//! Ribbon tableaux, the ribbon sign `ε_k`, and evaluation of Kostka–Foulkes
//! polynomials at roots of unity.
//!
//! A semistandard `k`-ribbon tableau of shape `λ/μ` and content `ν` is a chain
//! `μ = λ_0 ⊆ λ_1 ⊆ … ⊆ λ_r = λ` where `λ_i/λ_{i−1}` is a horizontal strip of
//! `ν_i` ribbons: a tiling by `k`-ribbons in which the cell directly above the
//! head (top-right cell) of each ribbon lies outside the strip.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qpoly::{kostka_foulkes, CycloValue};
use crate::shapes::{Composition, Partition, SkewShape};

type Cells = Vec<(usize, usize)>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum StripRule {
    /// No strip cell directly above any head.
    OpenAboveHeads,
    /// Heads in pairwise distinct columns.
    #[cfg_attr(not(test), allow(dead_code))]
    DistinctHeadColumns,
}

fn trim(mut v: Vec<usize>) -> Vec<usize> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Every partition obtained from `lam` by adding one `k`-ribbon, together with
/// the cells of that ribbon. Beads of the beta-set move from `x` to `x + k`.
fn add_ribbon(lam: &[usize], k: usize) -> Vec<(Vec<usize>, Cells)> {
    let len = lam.len() + k;
    let beta: Vec<usize> = (0..len).map(|i| lam.get(i).copied().unwrap_or(0) + (len - 1 - i)).collect();
    let set: HashSet<usize> = beta.iter().copied().collect();
    let mut out = Vec::new();
    for &x in &beta {
        if set.contains(&(x + k)) {
            continue;
        }
        let mut nb: Vec<usize> = beta.iter().map(|&y| if y == x { x + k } else { y }).collect();
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let new: Vec<usize> = nb.iter().enumerate().map(|(i, &y)| y - (len - 1 - i)).collect();
        let mut cells = Vec::new();
        for (r, &p) in new.iter().enumerate() {
            let old = lam.get(r).copied().unwrap_or(0);
            cells.extend((old..p).map(|c| (r, c)));
        }
        out.push((trim(new), cells));
    }
    out
}

fn head(ribbon: &[(usize, usize)]) -> (usize, usize) {
    let top = ribbon.iter().map(|&(r, _)| r).min().expect("ribbons are non-empty");
    let col = ribbon.iter().filter(|&&(r, _)| r == top).map(|&(_, c)| c).max().unwrap();
    (top, col)
}

fn is_horizontal_strip(ribbons: &[Cells], rule: StripRule) -> bool {
    let heads: Vec<_> = ribbons.iter().map(|r| head(r)).collect();
    match rule {
        StripRule::DistinctHeadColumns => {
            let cols: HashSet<usize> = heads.iter().map(|h| h.1).collect();
            cols.len() == heads.len()
        }
        StripRule::OpenAboveHeads => {
            let cells: HashSet<(usize, usize)> = ribbons.iter().flatten().copied().collect();
            heads.iter().all(|&(r, c)| r == 0 || !cells.contains(&(r - 1, c)))
        }
    }
}

fn fits(lam: &[usize], outer: &[usize]) -> bool {
    lam.len() <= outer.len() && lam.iter().zip(outer).all(|(a, b)| a <= b)
}

/// Partitions `λ' ⊆ outer` with `λ'/lam` a horizontal strip of `r` ribbons.
fn strips(lam: &[usize], r: usize, k: usize, outer: &[usize], rule: StripRule) -> BTreeSet<Vec<usize>> {
    let mut found = BTreeSet::new();
    let mut seen: HashSet<Vec<Cells>> = HashSet::new();
    let mut stack: Vec<(Vec<usize>, Vec<Cells>)> = vec![(lam.to_vec(), Vec::new())];
    while let Some((cur, ribbons)) = stack.pop() {
        if ribbons.len() == r {
            if is_horizontal_strip(&ribbons, rule) {
                found.insert(cur);
            }
            continue;
        }
        for (next, cells) in add_ribbon(&cur, k) {
            if !fits(&next, outer) {
                continue;
            }
            let mut rs = ribbons.clone();
            rs.push(cells);
            // Any two ribbons in one strip must already satisfy the rule.
            if !is_horizontal_strip(&rs, StripRule::DistinctHeadColumns) {
                continue;
            }
            let mut key = rs.clone();
            key.sort();
            if seen.insert(key) {
                stack.push((next, rs));
            }
        }
    }
    found
}

fn count_with(shape: &SkewShape, content: &Composition, k: usize, rule: StripRule) -> u128 {
    assert!(k >= 1, "ribbon size must be positive");
    if shape.size() != content.size() * k {
        return 0;
    }
    let outer = shape.outer().parts().to_vec();
    let target = outer.clone();
    let parts = content.parts();
    let mut memo: HashMap<(usize, Vec<usize>), u128> = HashMap::new();
    fn go(
        step: usize,
        cur: Vec<usize>,
        parts: &[usize],
        k: usize,
        outer: &[usize],
        target: &[usize],
        rule: StripRule,
        memo: &mut HashMap<(usize, Vec<usize>), u128>,
    ) -> u128 {
        if step == parts.len() {
            return u128::from(cur == target);
        }
        if let Some(&v) = memo.get(&(step, cur.clone())) {
            return v;
        }
        let total = strips(&cur, parts[step], k, outer, rule)
            .into_iter()
            .map(|next| go(step + 1, next, parts, k, outer, target, rule, memo))
            .sum();
        memo.insert((step, cur), total);
        total
    }
    let start = shape.inner().parts().to_vec();
    go(0, start, parts, k, &outer, &target, rule, &mut memo)
}

/// `K^{(k)}_{λ/μ,ν}`: the number of semistandard `k`-ribbon tableaux.
pub fn count_ribbon_tableaux(shape: &SkewShape, content: &Composition, k: usize) -> u128 {
    count_with(shape, content, k, StripRule::OpenAboveHeads)
}

/// A ribbon tableau as its chain of shapes `λ_0 = μ ⊆ λ_1 ⊆ … ⊆ λ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct RibbonStripSequence {
    pub chain: Vec<Partition>,
}

/// All semistandard `k`-ribbon tableaux of the given shape and content.
pub fn enumerate_ribbon_tableaux(shape: &SkewShape, content: &Composition, k: usize) -> Vec<RibbonStripSequence> {
    let outer = shape.outer().parts().to_vec();
    let mut chains: Vec<Vec<Vec<usize>>> = vec![vec![shape.inner().parts().to_vec()]];
    if shape.size() != content.size() * k {
        return Vec::new();
    }
    for &r in content.parts() {
        let mut next = Vec::new();
        for ch in chains {
            for lam in strips(ch.last().unwrap(), r, k, &outer, StripRule::OpenAboveHeads) {
                let mut c = ch.clone();
                c.push(lam);
                next.push(c);
            }
        }
        chains = next;
    }
    chains
        .into_iter()
        .filter(|c| c.last().map(Vec::as_slice) == Some(&outer[..]))
        .map(|c| RibbonStripSequence {
            chain: c.into_iter().map(|p| Partition::new(p).expect("chain entries are partitions")).collect(),
        })
        .collect()
}

/// Counts of `k`-ribbon tilings of `shape` with sign `+1` and `−1`; a ribbon
/// covering `h` rows has sign `(−1)^{h−1}`.
pub fn tiling_signs(shape: &SkewShape, k: usize) -> (u64, u64) {
    assert!(k >= 1, "ribbon size must be positive");
    let rows = shape.num_rows();
    let mut covered: Vec<Vec<bool>> = (0..rows).map(|r| vec![false; shape.outer().part(r)]).collect();
    for r in 0..rows {
        for c in 0..shape.inner().part(r) {
            covered[r][c] = true;
        }
    }
    let mut counts = (0u64, 0u64);
    fn go(covered: &mut Vec<Vec<bool>>, k: usize, sign: bool, counts: &mut (u64, u64)) {
        // lowest row with a free cell, leftmost free cell in it: the tail of its ribbon
        let Some((r, c)) = (0..covered.len()).rev().find_map(|r| covered[r].iter().position(|&x| !x).map(|c| (r, c)))
        else {
            if sign {
                counts.1 += 1;
            } else {
                counts.0 += 1;
            }
            return;
        };
        let free = |cov: &Vec<Vec<bool>>, r: usize, c: usize| c < cov[r].len() && !cov[r][c];
        // paths of k cells going up or right
        let mut path = vec![(r, c)];
        fn extend(
            covered: &mut Vec<Vec<bool>>,
            path: &mut Vec<(usize, usize)>,
            k: usize,
            sign: bool,
            counts: &mut (u64, u64),
            free: &dyn Fn(&Vec<Vec<bool>>, usize, usize) -> bool,
        ) {
            if path.len() == k {
                for &(r, c) in path.iter() {
                    covered[r][c] = true;
                }
                let ups = path.first().unwrap().0 - path.last().unwrap().0;
                go(covered, k, sign ^ (ups % 2 == 1), counts);
                for &(r, c) in path.iter() {
                    covered[r][c] = false;
                }
                return;
            }
            let &(r, c) = path.last().unwrap();
            let mut moves = vec![(r, c + 1)];
            if r > 0 {
                moves.push((r - 1, c));
            }
            for (nr, nc) in moves {
                if free(covered, nr, nc) {
                    path.push((nr, nc));
                    extend(covered, path, k, sign, counts, free);
                    path.pop();
                }
            }
        }
        extend(covered, &mut path, k, sign, counts, &free);
    }
    go(&mut covered, k, false, &mut counts);
    counts
}

/// `ε_k(λ/μ)`: the sign of any `k`-ribbon tiling, or 0 when none exists.
/// Fails if two tilings disagree.
pub fn epsilon(shape: &SkewShape, k: usize) -> Result<i8> {
    match tiling_signs(shape, k) {
        (0, 0) => Ok(0),
        (_, 0) => Ok(1),
        (0, _) => Ok(-1),
        (p, m) => Err(Error::Invalid {
            what: "ribbon sign",
            detail: format!("{p} tilings of {shape} have sign +1 and {m} have sign -1"),
        }),
    }
}

/// Both sides of `K^{(j)}_{λ/μ,ν} = (−1)^{|ν|(j−1)} ε_j(λ/μ) K_{λ/μ,ν^j}(ξ)`.
#[derive(Debug, Clone, Serialize)]
pub struct DltRecord {
    pub j: usize,
    pub ribbon_count: u128,
    pub epsilon: i8,
    /// `K_{λ/μ,ν^j}(ξ)` in display form.
    pub kf_value: String,
    /// The right-hand side when it is a rational integer.
    pub rhs: Option<i128>,
    pub ok: bool,
}

pub fn dlt_check(shape: &SkewShape, nu: &Composition, j: usize) -> Result<DltRecord> {
    if j == 0 {
        return Err(Error::OutOfRange("root of unity order must be positive".into()));
    }
    let count = count_ribbon_tableaux(shape, nu, j);
    let eps = epsilon(shape, j)?;
    let content = nu.repeat(j).sorted().into_composition();
    let kf = kostka_foulkes::<num_bigint::BigInt>(shape, &content)?;
    let val: CycloValue<num_bigint::BigInt> = kf.eval_at_root(j as u64, 1);
    let parity = if (nu.size() * (j - 1)) % 2 == 0 { 1 } else { -1 };
    let rhs = val.as_integer().map(|v| {
        let v: i128 = num_traits::ToPrimitive::to_i128(&v).expect("value fits in i128");
        v * i128::from(parity) * i128::from(eps)
    });
    let ok = rhs == Some(count as i128);
    Ok(DltRecord { j, ribbon_count: count, epsilon: eps, kf_value: val.to_string(), rhs, ok })
}
