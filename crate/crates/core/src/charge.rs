//! Charge and cocharge of words.
//!
//! Three routes are provided and cross-checked in tests:
//!
//! * standard subwords, with `charge(π) = maj(rev(π⁻¹))` on each subword;
//! * cocharge values `cc(π, j)` on permutations;
//! * depth sequences, valid for rectangular content `k^n`.
//!
//! Charge is only defined here for words whose content is a partition; other
//! words are rejected instead of being silently re-sorted.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableaux::{Tableau, Word};

/// `depth_j` for the letter pairs `(1,2), (2,3), ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DepthSequence(pub Vec<usize>);

impl DepthSequence {
    pub fn depths(&self) -> &[usize] {
        &self.0
    }

    pub fn rotate_left(&self) -> DepthSequence {
        let mut v = self.0.clone();
        if !v.is_empty() {
            v.rotate_left(1);
        }
        DepthSequence(v)
    }
}

fn require_partition_content(w: &Word) -> Result<Vec<usize>> {
    let c = w.content();
    if c.is_partition() {
        Ok(c.parts().to_vec())
    } else {
        Err(Error::NonPartitionContent(c.parts().to_vec()))
    }
}

/// Splits `w` into its standard subwords.
///
/// Subword `r` starts at the rightmost unclaimed 1 and, for each next letter,
/// takes the nearest unclaimed occurrence to the left, wrapping around to the
/// rightmost one when none is left of the current position.
pub fn standard_subwords(w: &Word) -> Result<Vec<Word>> {
    let content = require_partition_content(w)?;
    let letters = w.letters();
    let mut claimed = vec![false; letters.len()];
    let mut out = Vec::with_capacity(content.first().copied().unwrap_or(0));
    let find = |claimed: &[bool], letter: u32, mut range: Box<dyn Iterator<Item = usize>>| {
        range.find(|&p| !claimed[p] && letters[p] == letter)
    };
    for _ in 0..content.first().copied().unwrap_or(0) {
        let Some(mut pos) = find(&claimed, 1, Box::new((0..letters.len()).rev())) else {
            break;
        };
        let mut picked = vec![pos];
        claimed[pos] = true;
        let mut letter = 2;
        loop {
            let next = find(&claimed, letter, Box::new((0..pos).rev()))
                .or_else(|| find(&claimed, letter, Box::new((pos + 1..letters.len()).rev())));
            let Some(p) = next else { break };
            claimed[p] = true;
            picked.push(p);
            pos = p;
            letter += 1;
        }
        picked.sort_unstable();
        out.push(Word(picked.into_iter().map(|p| letters[p]).collect()));
    }
    Ok(out)
}

fn inverse(p: &[u32]) -> Vec<u32> {
    let mut inv = vec![0u32; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x as usize - 1] = i as u32 + 1;
    }
    inv
}

/// Major index: sum of the 1-based positions `i` with `w[i] > w[i+1]`.
pub fn maj(w: &[u32]) -> usize {
    w.windows(2).enumerate().filter(|(_, p)| p[0] > p[1]).map(|(i, _)| i + 1).sum()
}

/// `maj(rev(π⁻¹))` for a permutation word.
pub fn permutation_charge(p: &Word) -> Result<usize> {
    if !p.is_permutation() {
        return Err(Error::NotPermutation(p.0.clone()));
    }
    let mut inv = inverse(p.letters());
    inv.reverse();
    Ok(maj(&inv))
}

pub fn permutation_cocharge(p: &Word) -> Result<usize> {
    let n = p.len();
    Ok(n * n.saturating_sub(1) / 2 - permutation_charge(p)?)
}

/// Sum of the charges of the standard subwords.
pub fn charge(w: &Word) -> Result<usize> {
    standard_subwords(w)?.iter().map(permutation_charge).sum()
}

/// Sum of the cocharges of the standard subwords.
pub fn cocharge(w: &Word) -> Result<usize> {
    standard_subwords(w)?.iter().map(permutation_cocharge).sum()
}

/// Charge and cocharge from a single subword extraction.
pub fn charge_and_cocharge(w: &Word) -> Result<(usize, usize)> {
    let subs = standard_subwords(w)?;
    let mut ch = 0;
    let mut total = 0;
    for s in &subs {
        ch += permutation_charge(s)?;
        total += s.len() * s.len().saturating_sub(1) / 2;
    }
    Ok((ch, total - ch))
}

pub fn tableau_charge(t: &Tableau) -> Result<usize> {
    charge(&t.reading_word())
}

pub fn tableau_cocharge(t: &Tableau) -> Result<usize> {
    cocharge(&t.reading_word())
}

/// `cc(π, j)` for `j = 1..=n`: zero at 1, unchanged when `j − 1` lies left of
/// `j`, otherwise one more than `cc(π, j − 1)`.
pub fn cocharge_values(p: &Word) -> Result<Vec<usize>> {
    if !p.is_permutation() {
        return Err(Error::NotPermutation(p.0.clone()));
    }
    let pos = inverse(p.letters());
    let mut values = Vec::with_capacity(p.len());
    let mut cur = 0;
    for j in 0..p.len() {
        if j > 0 && pos[j - 1] > pos[j] {
            cur += 1;
        }
        values.push(cur);
    }
    Ok(values)
}

/// Depth sequence over the letter pairs `(j, j+1)` for `j < max letter`.
pub fn depth_sequence(w: &Word) -> DepthSequence {
    let k = w.letters().iter().copied().max().unwrap_or(0);
    DepthSequence((1..k).map(|j| depth(w.letters(), j)).collect())
}

/// Surviving `j+1`s after cancelling adjacent `(j+1, j)` pairs in the
/// `{j, j+1}`-subword; works like bracket matching with `j+1` as the opener.
fn depth(w: &[u32], j: u32) -> usize {
    let mut open = 0usize;
    for &x in w {
        if x == j + 1 {
            open += 1;
        } else if x == j && open > 0 {
            open -= 1;
        }
    }
    open
}

/// Charge of a word with content `k^n` (each of `1..=k` exactly `n` times)
/// as `Σ_j depth_j(w)·(k − j)`.
pub fn charge_rectangular(w: &Word, k: usize) -> Result<usize> {
    let c = w.content();
    let parts = c.parts();
    if parts.len() != k || parts.windows(2).any(|p| p[0] != p[1]) {
        return Err(Error::NotRectangularContent(parts.to_vec()));
    }
    Ok(depth_sequence(w).depths().iter().enumerate().map(|(i, &d)| d * (k - (i + 1))).sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn subwords_of_paper_word() {
        let subs = standard_subwords(&w("345223111234455")).unwrap();
        let s: Vec<String> = subs.iter().map(Word::to_string).collect();
        assert_eq!(s, ["35214", "42135", "31245"]);
        assert_eq!(standard_subwords(&w("31524")).unwrap(), vec![w("31524")]);
        assert_eq!(standard_subwords(&w("1122")).unwrap(), vec![w("12"), w("12")]);
    }

    #[test]
    fn charge_examples() {
        assert_eq!(charge(&w("345223111234455")).unwrap(), 13);
        assert_eq!(cocharge(&w("345223111234455")).unwrap(), 17);
        assert_eq!(charge(&w("12345")).unwrap(), 10);
        assert_eq!(cocharge(&w("12345")).unwrap(), 0);
    }

    #[test]
    fn rejects_non_partition_content() {
        assert!(matches!(charge(&w("122")), Err(Error::NonPartitionContent(_))));
        assert!(matches!(standard_subwords(&w("23")), Err(Error::NonPartitionContent(_))));
        assert!(matches!(cocharge_values(&w("112")), Err(Error::NotPermutation(_))));
        assert!(matches!(charge_rectangular(&w("1123"), 3), Err(Error::NotRectangularContent(_))));
    }

    #[test]
    fn cocharge_value_examples() {
        let v = cocharge_values(&w("486972315")).unwrap();
        assert_eq!(v, vec![0, 1, 1, 2, 2, 3, 3, 4, 4]);
        assert_eq!(v.iter().sum::<usize>(), 20);
        assert_eq!(cocharge(&w("486972315")).unwrap(), 20);
        assert_eq!(cocharge_values(&w("1234")).unwrap(), vec![0; 4]);
        assert_eq!(cocharge_values(&w("4321")).unwrap(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn depth_sequences() {
        assert_eq!(depth_sequence(&w("44331122")).0, vec![2, 0, 0]);
        assert_eq!(depth_sequence(&w("1234")).0, vec![1, 1, 1]);
        // Reading word of [[1,1,2,3],[2,3],[4,4]] is 44 23 1123:
        // {1,2}: 2 1 1 2 -> 1 2 (depth 1); {2,3}: 2 3 2 3 -> 2 3 (depth 1);
        // {3,4}: 4 4 3 3 -> empty (depth 0).
        assert_eq!(depth_sequence(&w("44231123")).0, vec![1, 1, 0]);
        assert_eq!(charge_rectangular(&w("44331122"), 4).unwrap(), 6);
        assert_eq!(charge_rectangular(&w("1234"), 4).unwrap(), 6);
        assert_eq!(charge_rectangular(&w("4321"), 4).unwrap(), 0);
    }

    fn all_rect_words(k: usize, n: usize) -> Vec<Word> {
        fn rec(left: &mut Vec<usize>, cur: &mut Vec<u32>, out: &mut Vec<Word>) {
            if left.iter().all(|&x| x == 0) {
                out.push(Word(cur.clone()));
                return;
            }
            for i in 0..left.len() {
                if left[i] > 0 {
                    left[i] -= 1;
                    cur.push(i as u32 + 1);
                    rec(left, cur, out);
                    cur.pop();
                    left[i] += 1;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut vec![n; k], &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn rectangular_content_3_2_exhaustive() {
        let words = all_rect_words(3, 2);
        assert_eq!(words.len(), 90);
        let two = all_rect_words(2, 3);
        assert_eq!(two.len(), 20);
        for word in words.iter().chain(&two) {
            let k = word.content().len();
            assert_eq!(charge_rectangular(word, k).unwrap(), charge(word).unwrap(), "{word}");
        }
    }

    #[test]
    fn charge_plus_cocharge_is_subword_binomial_sum() {
        for word in all_rect_words(3, 2) {
            let subs = standard_subwords(&word).unwrap();
            let total: usize = subs.iter().map(|s| s.len() * (s.len() - 1) / 2).sum();
            let (c, cc) = charge_and_cocharge(&word).unwrap();
            assert_eq!(c + cc, total);
            assert_eq!(c, charge(&word).unwrap());
        }
    }

    fn all_perms(n: usize) -> Vec<Word> {
        all_rect_words(n, 1)
    }

    #[test]
    fn cocharge_values_agree_with_maj_definition() {
        for n in 1..=7 {
            for p in all_perms(n) {
                let via_values: usize = cocharge_values(&p).unwrap().iter().sum();
                let mut inv = inverse(p.letters());
                inv.reverse();
                assert_eq!(via_values, n * (n - 1) / 2 - maj(&inv), "{p}");
            }
        }
    }

    #[test]
    fn cocharge_under_cyclic_shift() {
        for n in 2..=7 {
            for p in all_perms(n) {
                let mut r = p.0.clone();
                r.rotate_right(1);
                let rot = Word(r);
                let (a, b) = (permutation_cocharge(&p).unwrap(), permutation_cocharge(&rot).unwrap());
                if *p.0.last().unwrap() != 1 {
                    assert_eq!(a + 1, b, "{p}");
                } else {
                    assert_eq!(a, b + n - 1, "{p}");
                }
                assert_eq!((a + 1) % n, b % n);
            }
        }
    }
}
