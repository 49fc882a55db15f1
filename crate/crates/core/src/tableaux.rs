//! Semistandard tableaux on skew shapes and their enumeration.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{Composition, Partition, SkewShape};

/// A filling of a skew shape, stored row by row (top row first). Rows of the
/// shape with no cells are stored as empty lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TableauJson", into = "TableauJson")]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
}

/// Wire form: `{ "outer": [...], "inner": [...], "rows": [[...], ...] }`.
#[derive(Serialize, Deserialize)]
struct TableauJson {
    outer: Vec<usize>,
    inner: Vec<usize>,
    rows: Vec<Vec<u32>>,
}

impl TryFrom<TableauJson> for Tableau {
    type Error = Error;
    fn try_from(j: TableauJson) -> Result<Self> {
        let shape = SkewShape::new(Partition::new(j.outer)?, Partition::new(j.inner)?)?;
        Tableau::new(shape, j.rows)
    }
}

impl From<Tableau> for TableauJson {
    fn from(t: Tableau) -> Self {
        TableauJson { outer: t.shape.outer().parts().to_vec(), inner: t.shape.inner().parts().to_vec(), rows: t.rows }
    }
}

impl Tableau {
    /// Validates the filling: row lengths, positive entries, weak rows and strict columns.
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>) -> Result<Self> {
        let t = Tableau { shape, rows };
        t.validate()?;
        Ok(t)
    }

    /// A straight-shape tableau whose shape is read off the row lengths.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape = SkewShape::straight(Partition::new(rows.iter().map(Vec::len).collect())?);
        Tableau::new(shape, rows)
    }

    pub(crate) fn from_parts_unchecked(shape: SkewShape, rows: Vec<Vec<u32>>) -> Self {
        let t = Tableau { shape, rows };
        debug_assert!(t.validate().is_ok(), "invalid tableau {t:?}");
        t
    }

    fn validate(&self) -> Result<()> {
        let s = &self.shape;
        if self.rows.len() != s.num_rows() {
            return Err(Error::ShapeMismatch(format!(
                "{} rows given, shape {} has {}",
                self.rows.len(),
                s,
                s.num_rows()
            )));
        }
        for (r, row) in self.rows.iter().enumerate() {
            if row.len() != s.row_len(r) {
                return Err(Error::ShapeMismatch(format!(
                    "row {} has {} entries, shape {} needs {}",
                    r + 1,
                    row.len(),
                    s,
                    s.row_len(r)
                )));
            }
            if row.contains(&0) {
                return Err(Error::NotSemistandard(format!("row {} has a zero entry", r + 1)));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::NotSemistandard(format!("row {} decreases", r + 1)));
            }
        }
        for (r, c) in s.cells() {
            if r > 0 && s.contains_cell(r - 1, c) && self.get(r - 1, c) >= self.get(r, c) {
                return Err(Error::NotSemistandard(format!(
                    "column {} is not strictly increasing at row {}",
                    c + 1,
                    r + 1
                )));
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry at absolute cell `(row, col)`. Panics if the cell is not in the shape.
    pub fn get(&self, row: usize, col: usize) -> u32 {
        self.rows[row][col - self.shape.inner().part(row)]
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Rows concatenated bottom to top, each left to right.
    pub fn reading_word(&self) -> Word {
        Word(self.rows.iter().rev().flatten().copied().collect())
    }

    /// Multiplicities of `1, 2, ..., max_entry`.
    pub fn content(&self) -> Composition {
        self.reading_word().content()
    }

    /// Content padded (or checked) to exactly `m` letters.
    pub fn content_in(&self, m: usize) -> Composition {
        let mut v = vec![0usize; m.max(self.max_entry() as usize)];
        for &x in self.rows.iter().flatten() {
            v[x as usize - 1] += 1;
        }
        Composition::new(v)
    }

    /// Sum of the entries of the top row.
    pub fn first_row_sum(&self) -> u64 {
        self.rows.first().map_or(0, |r| r.iter().map(|&x| x as u64).sum())
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.max_entry().to_string().len();
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            for _ in 0..self.shape.inner().part(r) {
                write!(f, "{:>w$} ", ".", w = width)?;
            }
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl Tableau {
    /// One-line form: rows separated by `/`, entries by `,`, and `.` for
    /// each skipped cell of the inner shape, e.g. `.,1,1/2,3`.
    pub fn compact(&self) -> String {
        let rows: Vec<String> = self
            .rows
            .iter()
            .enumerate()
            .map(|(r, row)| {
                let mut cells = vec![".".to_string(); self.shape.inner().part(r)];
                cells.extend(row.iter().map(u32::to_string));
                cells.join(",")
            })
            .collect();
        rows.join("/")
    }
}

impl FromStr for Tableau {
    type Err = Error;
    /// Parses [`Tableau::compact`] output; newlines also separate rows and
    /// spaces also separate entries, so the `Display` form is accepted too.
    fn from_str(s: &str) -> Result<Self> {
        let mut inner = Vec::new();
        let mut rows = Vec::new();
        for line in s.trim().split(['/', '\n', ';']) {
            let mut dots = 0;
            let mut row = Vec::new();
            for tok in line.split([',', ' ', '\t']).filter(|t| !t.is_empty()) {
                if tok == "." {
                    if !row.is_empty() {
                        return Err(Error::Parse(format!("`.` after an entry in `{line}`")));
                    }
                    dots += 1;
                } else {
                    row.push(tok.parse::<u32>().map_err(|e| Error::Parse(format!("`{tok}`: {e}")))?);
                }
            }
            inner.push(dots);
            rows.push(row);
        }
        let outer: Vec<usize> = inner.iter().zip(&rows).map(|(i, r)| i + r.len()).collect();
        let shape = SkewShape::new(Partition::new(outer)?, Partition::new(inner)?)?;
        Tableau::new(shape, rows)
    }
}

/// A word in the positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiplicities of `1, 2, ..., max letter`.
    pub fn content(&self) -> Composition {
        let max = self.0.iter().copied().max().unwrap_or(0) as usize;
        let mut v = vec![0usize; max];
        for &x in &self.0 {
            if x > 0 {
                v[x as usize - 1] += 1;
            }
        }
        Composition::new(v)
    }

    pub fn is_permutation(&self) -> bool {
        let n = self.0.len();
        let mut seen = vec![false; n + 1];
        for &x in &self.0 {
            let x = x as usize;
            if x == 0 || x > n || seen[x] {
                return false;
            }
            seen[x] = true;
        }
        true
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&x| x < 10) {
            for x in &self.0 {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
            write!(f, "{}", s.join(","))
        }
    }
}

impl FromStr for Word {
    type Err = Error;
    /// Either comma/space separated letters or a run of single digits.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let letters: Result<Vec<u32>> = if s.contains(',') || s.contains(' ') {
            s.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<u32>().map_err(|e| Error::Parse(format!("`{t}`: {e}"))))
                .collect()
        } else {
            s.chars().map(|c| c.to_digit(10).ok_or_else(|| Error::Parse(format!("bad letter `{c}`")))).collect()
        };
        let letters = letters?;
        if letters.contains(&0) {
            return Err(Error::Parse("letters must be positive".into()));
        }
        Ok(Word(letters))
    }
}

/// All semistandard fillings of `shape` with the given content (letter `i + 1`
/// used `content[i]` times).
///
/// Cells are filled in row-major order trying values in increasing order, so
/// the output is sorted lexicographically by the row-major entry sequence.
pub fn enumerate_ssyt(shape: &SkewShape, content: &Composition) -> Vec<Tableau> {
    if shape.size() != content.size() {
        return Vec::new();
    }
    let cells: Vec<(usize, usize)> = shape.cells().collect();
    // Cells strictly below each cell in its column.
    let below: Vec<u32> = cells
        .iter()
        .map(|&(r, c)| {
            let mut k = 0;
            while shape.contains_cell(r + 1 + k, c) {
                k += 1;
            }
            k as u32
        })
        .collect();
    let mut state = Filler {
        shape,
        cells: &cells,
        below: &below,
        remaining: content.parts().to_vec(),
        grid: (0..shape.num_rows()).map(|r| vec![0u32; shape.row_len(r)]).collect(),
        out: Vec::new(),
    };
    state.fill(0);
    state.out
}

struct Filler<'a> {
    shape: &'a SkewShape,
    cells: &'a [(usize, usize)],
    below: &'a [u32],
    remaining: Vec<usize>,
    grid: Vec<Vec<u32>>,
    out: Vec<Tableau>,
}

impl Filler<'_> {
    fn at(&self, r: usize, c: usize) -> u32 {
        self.grid[r][c - self.shape.inner().part(r)]
    }

    fn fill(&mut self, idx: usize) {
        if idx == self.cells.len() {
            self.out.push(Tableau::from_parts_unchecked(self.shape.clone(), self.grid.clone()));
            return;
        }
        let (r, c) = self.cells[idx];
        let mut lo = 1u32;
        if c > self.shape.inner().part(r) {
            lo = lo.max(self.at(r, c - 1));
        }
        if r > 0 && self.shape.contains_cell(r - 1, c) {
            lo = lo.max(self.at(r - 1, c) + 1);
        }
        let Some(top) = self.remaining.iter().rposition(|&k| k > 0) else {
            return;
        };
        let top = top as u32 + 1;
        let below = self.below[idx];
        if lo + below > top {
            return;
        }
        for v in lo..=top - below {
            let slot = v as usize - 1;
            if self.remaining[slot] == 0 {
                continue;
            }
            self.remaining[slot] -= 1;
            let off = self.shape.inner().part(r);
            self.grid[r][c - off] = v;
            self.fill(idx + 1);
            self.remaining[slot] += 1;
        }
    }
}

/// Standard fillings of the ribbon with `alpha[i]` cells in row `i`.
pub fn enumerate_syt_ribbon(alpha: &Composition) -> Result<Vec<Tableau>> {
    let shape = SkewShape::ribbon(alpha)?;
    Ok(enumerate_ssyt(&shape, &Composition::constant(1, shape.size())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    fn comp(v: &[usize]) -> Composition {
        Composition::new(v.to_vec())
    }

    /// Fill every cell with every letter arrangement and keep the valid ones.
    fn naive_count(shape: &SkewShape, content: &Composition) -> usize {
        let cells: Vec<_> = shape.cells().collect();
        let mut letters: Vec<u32> =
            content.parts().iter().enumerate().flat_map(|(i, &k)| std::iter::repeat(i as u32 + 1).take(k)).collect();
        if letters.len() != cells.len() {
            return 0;
        }
        let mut count = 0;
        loop {
            let mut rows: Vec<Vec<u32>> = (0..shape.num_rows()).map(|_| Vec::new()).collect();
            for (&(r, _), &x) in cells.iter().zip(&letters) {
                rows[r].push(x);
            }
            if Tableau::new(shape.clone(), rows).is_ok() {
                count += 1;
            }
            if !next_permutation(&mut letters) {
                break;
            }
        }
        count
    }

    fn next_permutation(v: &mut [u32]) -> bool {
        let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
            return false;
        };
        let j = v.iter().rposition(|&x| x > v[i]).unwrap();
        v.swap(i, j);
        v[i + 1..].reverse();
        true
    }

    #[test]
    fn reading_words() {
        let t = Tableau::from_rows(vec![vec![1, 1, 2, 3, 4], vec![2, 3], vec![3, 4]]).unwrap();
        assert_eq!(t.reading_word().to_string(), "342311234");
        let t = Tableau::from_rows(vec![vec![1, 1, 1, 2, 3, 4, 4, 5, 5], vec![2, 2, 3], vec![3, 4, 5]]).unwrap();
        assert_eq!(t.reading_word().to_string(), "345223111234455");
        assert_eq!(Tableau::from_rows(vec![vec![5]]).unwrap().reading_word().to_string(), "5");
    }

    #[test]
    fn compact_round_trip() {
        let t: Tableau = ".,.,1,1/.,2,3/1,4".parse().unwrap();
        assert_eq!(t.shape(), &shape("4,3,2/2,1"));
        assert_eq!(t.compact(), ".,.,1,1/.,2,3/1,4");
        assert_eq!(t.to_string().parse::<Tableau>().unwrap(), t);
        assert!("1,2/1".parse::<Tableau>().is_err());
        assert!("1,./2".parse::<Tableau>().is_err());
    }

    #[test]
    fn contents() {
        let t = Tableau::from_rows(vec![vec![1, 1, 2, 2], vec![3, 3], vec![4, 4]]).unwrap();
        assert_eq!(t.content(), comp(&[2, 2, 2, 2]));
        assert_eq!(shape("6,3,3/3").size(), 9);
        let sm = SkewShape::sm_shape(&"2,1,1".parse().unwrap(), 3);
        let t = Tableau::new(sm, vec![vec![1, 1, 2, 3, 3, 4], vec![1, 3, 4], vec![2, 2, 4]]).unwrap();
        assert_eq!(t.content(), comp(&[3, 3, 3, 3]));
        let syt = Tableau::from_rows(vec![vec![1, 3, 4], vec![2, 5]]).unwrap();
        assert_eq!(syt.content(), comp(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn validation_errors() {
        assert!(matches!(Tableau::from_rows(vec![vec![2, 1]]), Err(Error::NotSemistandard(_))));
        assert!(matches!(Tableau::from_rows(vec![vec![1, 2], vec![1]]), Err(Error::NotSemistandard(_))));
        assert!(matches!(Tableau::new(shape("2,1"), vec![vec![1, 1]]), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn shst_122_census() {
        let ts = enumerate_ssyt(&shape("4,2,2"), &comp(&[2, 2, 2, 2]));
        assert_eq!(ts.len(), 6);
        let single = enumerate_ssyt(&shape("3,2"), &comp(&[3, 2]));
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].rows(), &[vec![1, 1, 1], vec![2, 2]]);
        assert!(enumerate_ssyt(&shape("1,1"), &comp(&[2])).is_empty());
    }

    #[test]
    fn large_census_matches_recursive_oracle() {
        // Independent recursion: remove the largest letter as a horizontal strip.
        fn kostka(outer: &[usize], content: &[usize]) -> u64 {
            let Some((&last, rest)) = content.split_last() else {
                return u64::from(outer.iter().all(|&x| x == 0));
            };
            let mut total = 0;
            let mut inner = vec![0usize; outer.len()];
            fn strips(i: usize, outer: &[usize], inner: &mut Vec<usize>, left: usize, rest: &[usize], total: &mut u64) {
                if i == outer.len() {
                    if left == 0 {
                        *total += kostka(inner, rest);
                    }
                    return;
                }
                let lo = outer.get(i + 1).copied().unwrap_or(0);
                for v in (lo..=outer[i]).rev() {
                    let removed = outer[i] - v;
                    if removed > left {
                        break;
                    }
                    if i > 0 && v > inner[i - 1] {
                        continue;
                    }
                    inner[i] = v;
                    strips(i + 1, outer, inner, left - removed, rest, total);
                }
            }
            strips(0, outer, &mut inner, last, rest, &mut total);
            total
        }
        let content = [2, 2, 2, 1, 1, 1, 1];
        let expected = kostka(&[4, 4, 2, 2], &content);
        let got = enumerate_ssyt(&shape("4,4,2,2"), &comp(&content)).len() as u64;
        assert_eq!(got, expected);
        let expected = kostka(&[4, 4, 2, 2], &[2, 2, 2, 1, 1, 1, 1, 1, 1]);
        assert_eq!(enumerate_ssyt(&shape("4,4,2,2"), &comp(&[2, 2, 2, 1, 1, 1, 1, 1, 1])).len() as u64, expected);
    }

    #[test]
    fn enumeration_matches_naive_filter() {
        let shapes = ["3,2", "2,2,1", "3,3/1", "4,2,1/2,1", "3,2,2/1,1", "5,3/3", "2,2,2"];
        for s in shapes {
            let sh = shape(s);
            let n = sh.size();
            for k in 1..=4 {
                for c in Composition::all_weak(n, k) {
                    let got = enumerate_ssyt(&sh, &c);
                    assert_eq!(got.len(), naive_count(&sh, &c), "{s} {c}");
                    assert!(got.windows(2).all(|w| w[0].rows() < w[1].rows()));
                    assert!(got.iter().all(|t| t.content_in(k) == c));
                }
            }
        }
    }

    #[test]
    fn kostka_numbers_invariant_under_content_permutation() {
        for n in 1..=8 {
            for lam in Partition::all_of(n) {
                let sh = SkewShape::straight(lam.clone());
                for nu in Partition::all_of(n).into_iter().filter(|p| p.len() <= 3) {
                    let base = enumerate_ssyt(&sh, &nu.clone().into_composition()).len();
                    let mut parts = nu.parts().to_vec();
                    while next_perm_usize(&mut parts) {
                        let c = Composition::new(parts.clone());
                        assert_eq!(enumerate_ssyt(&sh, &c).len(), base, "{lam} {c}");
                    }
                }
            }
        }
    }

    fn next_perm_usize(v: &mut [usize]) -> bool {
        let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
            return false;
        };
        let j = v.iter().rposition(|&x| x > v[i]).unwrap();
        v.swap(i, j);
        v[i + 1..].reverse();
        true
    }

    #[test]
    fn ribbon_counts() {
        let count = |a: &[usize]| enumerate_syt_ribbon(&comp(a)).unwrap().len();
        assert_eq!(count(&[2, 2]), 5);
        assert_eq!(count(&[4, 2]), 14);
        assert_eq!(count(&[1, 3, 1]), 11);
    }

    #[test]
    fn ribbon_counts_match_descent_compositions() {
        fn descent_composition(p: &[u32]) -> Vec<usize> {
            let mut out = Vec::new();
            let mut run = 1;
            for w in p.windows(2) {
                if w[0] > w[1] {
                    out.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            out.push(run);
            out
        }
        for n in 1..=7usize {
            let mut perm: Vec<u32> = (1..=n as u32).collect();
            let mut census = std::collections::HashMap::<Vec<usize>, usize>::new();
            loop {
                *census.entry(descent_composition(&perm)).or_default() += 1;
                if !next_permutation(&mut perm) {
                    break;
                }
            }
            for (alpha, count) in census {
                assert_eq!(enumerate_syt_ribbon(&comp(&alpha)).unwrap().len(), count, "{alpha:?}");
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let sm = SkewShape::sm_shape(&"2,1".parse().unwrap(), 1);
        let t = Tableau::new(sm, vec![vec![1, 3], vec![2]]).unwrap();
        let j = serde_json::to_string(&t).unwrap();
        assert_eq!(j, r#"{"outer":[3,1],"inner":[1],"rows":[[1,3],[2]]}"#);
        let back: Tableau = serde_json::from_str(&j).unwrap();
        assert_eq!(back, t);
        assert!(serde_json::from_str::<Tableau>(r#"{"outer":[2],"inner":[],"rows":[[2,1]]}"#).is_err());
    }

    #[test]
    fn word_parsing() {
        assert_eq!("3412".parse::<Word>().unwrap(), Word(vec![3, 4, 1, 2]));
        assert_eq!("10,2,1".parse::<Word>().unwrap(), Word(vec![10, 2, 1]));
        assert!("3a".parse::<Word>().is_err());
    }
}
