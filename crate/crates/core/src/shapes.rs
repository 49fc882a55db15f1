//! Partitions, compositions and skew shapes.
//!
//! Cells are `(row, column)` pairs, 0-based and in English notation: row 0 is
//! the top row. Disconnected skew shapes are genuine `outer/inner` pairs built
//! by placing components corner to corner, first component top-right.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing list of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates `parts`; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The rectangle `a^b`: `b` rows of length `a`.
    pub fn rectangle(a: usize, b: usize) -> Self {
        if a == 0 {
            return Partition::empty();
        }
        Partition(vec![a; b])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition((1..=width).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    /// `n(λ) = Σ_j C(λ'_j, 2)`.
    pub fn n_stat(&self) -> usize {
        self.conjugate().0.iter().map(|&c| c * c.saturating_sub(1) / 2).sum()
    }

    /// Every part multiplied by `n`.
    pub fn stretch(&self, n: usize) -> Partition {
        if n == 0 {
            return Partition::empty();
        }
        Partition(self.0.iter().map(|&p| p * n).collect())
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// All partitions of `n`, in reverse lexicographic order (`(n)` first).
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    pub fn into_composition(self) -> Composition {
        Composition(self.0)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

/// A finite list of non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition(parts)
    }

    /// `(n, n, ..., n)` with `len` parts.
    pub fn constant(n: usize, len: usize) -> Self {
        Composition(vec![n; len])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Whether the parts are weakly decreasing with no zero before a positive part.
    pub fn is_partition(&self) -> bool {
        let trimmed = self.0.iter().rposition(|&p| p > 0).map_or(0, |i| i + 1);
        let head = &self.0[..trimmed];
        head.windows(2).all(|w| w[0] >= w[1]) && !head.contains(&0)
    }

    /// The parts sorted into a partition, zeros removed.
    pub fn sorted(&self) -> Partition {
        let mut v: Vec<usize> = self.0.iter().copied().filter(|&p| p > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    /// Cyclic shift to the left by `d` positions: part `d` becomes part 0.
    pub fn rotate_left(&self, d: usize) -> Composition {
        let mut v = self.0.clone();
        if !v.is_empty() {
            let k = d % v.len();
            v.rotate_left(k);
        }
        Composition(v)
    }

    /// `ν^k`: the parts repeated (concatenated) `k` times.
    pub fn repeat(&self, k: usize) -> Composition {
        Composition(self.0.repeat(k))
    }

    pub fn reversed(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// All weak compositions of `total` into exactly `len` parts, lexicographic.
    pub fn all_weak(total: usize, len: usize) -> Vec<Composition> {
        fn rec(rest: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if slots == 1 {
                cur.push(rest);
                out.push(Composition(cur.clone()));
                cur.pop();
                return;
            }
            for p in 0..=rest {
                cur.push(p);
                rec(rest - p, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if len == 0 {
            if total == 0 {
                out.push(Composition(Vec::new()));
            }
            return out;
        }
        rec(total, len, &mut Vec::new(), &mut out);
        out
    }
}

impl From<Partition> for Composition {
    fn from(p: Partition) -> Self {
        Composition(p.0)
    }
}

/// The cells of `outer` not in `inner`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained { outer: outer.0, inner: inner.0 });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    /// Column range occupied by `row`.
    pub fn row_range(&self, row: usize) -> std::ops::Range<usize> {
        self.inner.part(row)..self.outer.part(row)
    }

    pub fn row_len(&self, row: usize) -> usize {
        self.outer.part(row) - self.inner.part(row)
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        row < self.num_rows() && self.row_range(row).contains(&col)
    }

    /// Cells in row-major order (top row first, left to right).
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.num_rows()).flat_map(move |r| self.row_range(r).map(move |c| (r, c)))
    }

    /// Edge-connected components, each as a row-major list of cells, ordered
    /// by their first cell.
    pub fn components(&self) -> Vec<Vec<(usize, usize)>> {
        let cells: Vec<_> = self.cells().collect();
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        for &start in &cells {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some((r, c)) = stack.pop() {
                let mut nbrs = vec![(r + 1, c), (r, c + 1)];
                if r > 0 {
                    nbrs.push((r - 1, c));
                }
                if c > 0 {
                    nbrs.push((r, c - 1));
                }
                for (nr, nc) in nbrs {
                    if self.contains_cell(nr, nc) && seen.insert((nr, nc)) {
                        comp.push((nr, nc));
                        stack.push((nr, nc));
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Places the summands corner to corner, the first one top-right, so that
    /// no two summands share a row or a column.
    pub fn direct_sum(shapes: &[SkewShape]) -> SkewShape {
        let widths: Vec<usize> = shapes.iter().map(|s| s.outer.part(0)).collect();
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        for (k, s) in shapes.iter().enumerate() {
            let offset: usize = widths[k + 1..].iter().sum();
            for r in 0..s.num_rows() {
                outer.push(s.outer.part(r) + offset);
                inner.push(s.inner.part(r) + offset);
            }
        }
        // Corner placement keeps both lists weakly decreasing.
        SkewShape {
            outer: Partition::new(outer).expect("direct sum outer"),
            inner: Partition::new(inner).expect("direct sum inner"),
        }
    }

    /// Disjoint rows of lengths `n·ν_j`, in the order of `ν`.
    pub fn sm_shape(nu: &Partition, n: usize) -> SkewShape {
        let rows: Vec<_> = nu.parts().iter().map(|&p| SkewShape::straight(Partition(vec![p * n]))).collect();
        SkewShape::direct_sum(&rows)
    }

    /// Disjoint union of rectangles `a_k^{b_k}` given as `(a_k, b_k)` pairs.
    pub fn rectangles(rects: &[(usize, usize)]) -> SkewShape {
        let parts: Vec<_> = rects.iter().map(|&(a, b)| SkewShape::straight(Partition::rectangle(a, b))).collect();
        SkewShape::direct_sum(&parts)
    }

    /// The connected ribbon with `alpha[i]` cells in row `i`; row `i + 1`
    /// sits below-left of row `i`, sharing exactly one column.
    pub fn ribbon(alpha: &Composition) -> Result<SkewShape> {
        if alpha.parts().contains(&0) {
            return Err(Error::Invalid {
                what: "ribbon composition",
                detail: format!("{:?} has a zero part", alpha.parts()),
            });
        }
        let l = alpha.len();
        let mut start = vec![0usize; l];
        for i in (0..l.saturating_sub(1)).rev() {
            // Row i starts at the last column of row i + 1.
            start[i] = start[i + 1] + alpha.parts()[i + 1] - 1;
        }
        let outer: Vec<usize> = (0..l).map(|i| start[i] + alpha.parts()[i]).collect();
        SkewShape::new(Partition::new(outer)?, Partition::new(start)?)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, v: &[usize]) -> fmt::Result {
    let s: Vec<String> = v.iter().map(|p| p.to_string()).collect();
    write!(f, "{}", s.join(","))
}

pub(crate) fn parse_list(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("`{t}`: {e}")))).collect()
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_list(s)?)
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(Composition(parse_list(s)?))
    }
}

impl FromStr for SkewShape {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('/') {
            Some((o, i)) => SkewShape::new(o.parse()?, i.parse()?),
            None => Ok(SkewShape::straight(s.parse()?)),
        }
    }
}
