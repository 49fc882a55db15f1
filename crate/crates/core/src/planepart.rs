//! Gelfand–Tsetlin patterns, plane partitions in a box, and the bijection
//! from stretched hook tableaux `SHST(a, b, n)` to `PP(a, b, n)`.
//!
//! `SHST(a, b, n)` is the set of semistandard tableaux of shape
//! `((a+1)n, n^b)` with content `n^{a+b+1}`.

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::shapes::{Composition, Partition, SkewShape};
use crate::tableaux::{enumerate_ssyt, Tableau};

/// Triangular array; `rows[0]` is the top row (length `k`), `rows[k-1]` the
/// bottom one. Entry `(j, i)` (1-based, `i ≤ j`) counts the cells of row `i`
/// whose label is at most `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct GTPattern {
    rows: Vec<Vec<usize>>,
}

impl GTPattern {
    /// Builds a pattern from its rows, top row first, checking interlacing.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let k = rows.len();
        for (t, row) in rows.iter().enumerate() {
            if row.len() != k - t {
                return Err(Error::Invalid { what: "GT-pattern", detail: format!("row {t} has length {}", row.len()) });
            }
        }
        let g = GTPattern { rows };
        for j in 2..=k {
            for i in 1..j {
                let (hi, lo, right) = (g.entry(j, i), g.entry(j - 1, i), g.entry(j, i + 1));
                if !(hi >= lo && lo >= right) {
                    return Err(Error::Invalid {
                        what: "GT-pattern",
                        detail: format!("interlacing fails at row {j}, position {i}"),
                    });
                }
            }
        }
        Ok(g)
    }

    /// Number of rows.
    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry `(j, i)`, both 1-based with `1 ≤ i ≤ j ≤ height`.
    pub fn entry(&self, j: usize, i: usize) -> usize {
        self.rows[self.rows.len() - j][i - 1]
    }

    fn set(&mut self, j: usize, i: usize, v: usize) {
        let k = self.rows.len();
        self.rows[k - j][i - 1] = v;
    }
}

/// Pattern of a straight-shape tableau over the alphabet `1..=k`, where `k`
/// is the larger of the maximal entry and the number of rows.
pub fn gt_pattern(t: &Tableau) -> Result<GTPattern> {
    let k = (t.max_entry() as usize).max(t.shape().num_rows());
    gt_pattern_in(t, k)
}

/// Pattern over an explicit alphabet `1..=k`.
pub fn gt_pattern_in(t: &Tableau, k: usize) -> Result<GTPattern> {
    if !t.shape().is_straight() {
        return Err(Error::ShapeMismatch("GT-patterns need a straight shape".into()));
    }
    if t.max_entry() as usize > k || t.shape().num_rows() > k {
        return Err(Error::EntryOutOfRange { entry: t.max_entry(), max: k as u32 });
    }
    let rows = (1..=k)
        .rev()
        .map(|j| {
            (1..=j).map(|i| t.rows().get(i - 1).map_or(0, |r| r.iter().filter(|&&x| x as usize <= j).count())).collect()
        })
        .collect();
    Ok(GTPattern { rows })
}

/// Inverse of [`gt_pattern`].
pub fn tableau_from_gt(g: &GTPattern) -> Result<Tableau> {
    let k = g.height();
    let mut rows = Vec::new();
    for i in 1..=k {
        let mut row = Vec::new();
        for j in i..=k {
            let prev = if j > i { g.entry(j - 1, i) } else { 0 };
            let cur = g.entry(j, i);
            if cur < prev {
                return Err(Error::Invalid { what: "GT-pattern", detail: format!("row {i} shrinks at label {j}") });
            }
            row.extend(std::iter::repeat_n(j as u32, cur - prev));
        }
        rows.push(row);
    }
    while rows.last().is_some_and(|r| r.is_empty()) {
        rows.pop();
    }
    Tableau::from_rows(rows)
}

/// `a × b` array with entries in `0..=n`, weakly increasing along rows and
/// down columns. Serialised as its array of rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanePartition {
    n: u32,
    b: usize,
    rows: Vec<Vec<u32>>,
}

impl Serialize for PlanePartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

impl PlanePartition {
    pub fn new(rows: Vec<Vec<u32>>, b: usize, n: u32) -> Result<Self> {
        let bad = |detail: String| Error::Invalid { what: "plane partition", detail };
        for (r, row) in rows.iter().enumerate() {
            if row.len() != b {
                return Err(bad(format!("row {r} has length {} instead of {b}", row.len())));
            }
            for (c, &x) in row.iter().enumerate() {
                if x > n {
                    return Err(bad(format!("entry {x} exceeds {n}")));
                }
                if (c > 0 && row[c - 1] > x) || (r > 0 && rows[r - 1][c] > x) {
                    return Err(bad(format!("not weakly increasing at ({r}, {c})")));
                }
            }
        }
        Ok(PlanePartition { n, b, rows })
    }

    pub fn zero(a: usize, b: usize, n: u32) -> Self {
        PlanePartition { n, b, rows: vec![vec![0; b]; a] }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn a(&self) -> usize {
        self.rows.len()
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn bound(&self) -> u32 {
        self.n
    }

    /// Sum of the entries.
    pub fn size(&self) -> u64 {
        self.rows.iter().flatten().map(|&x| x as u64).sum()
    }

    /// Entry at 1-based `(r, c)`, with `n` above the array and `0` below it in
    /// the increasing order.
    fn upper(&self, r: usize, c: usize) -> u32 {
        if r > self.a() || c > self.b {
            self.n
        } else {
            self.rows[r - 1][c - 1]
        }
    }

    fn lower(&self, r: usize, c: usize) -> u32 {
        if r == 0 || c == 0 {
            0
        } else {
            self.rows[r - 1][c - 1]
        }
    }

    /// Piecewise-linear toggle of every cell on the diagonal `r − c = d`.
    fn toggle_diagonal(&mut self, d: i64) {
        for r in 1..=self.a() {
            let c = r as i64 - d;
            if c < 1 || c > self.b as i64 {
                continue;
            }
            let c = c as usize;
            let up = self.upper(r + 1, c).min(self.upper(r, c + 1));
            let down = self.lower(r - 1, c).max(self.lower(r, c - 1));
            self.rows[r - 1][c - 1] = up + down - self.rows[r - 1][c - 1];
        }
    }
}

impl std::fmt::Display for PlanePartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// The parameters `(a, b, n)` of a family of stretched hook tableaux.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Shst {
    pub a: usize,
    pub b: usize,
    pub n: usize,
}

impl Shst {
    pub fn new(a: usize, b: usize, n: usize) -> Self {
        Shst { a, b, n }
    }

    /// Recovers `(a, b, n)` from a tableau that lies in some `SHST(a, b, n)`.
    pub fn of_tableau(t: &Tableau) -> Result<Self> {
        let content = t.content();
        let n = content.parts().first().copied().unwrap_or(0);
        let rows = t.shape().num_rows();
        if n == 0 || rows == 0 {
            return Err(Error::ShapeMismatch("empty tableau is not a stretched hook".into()));
        }
        let m = t.size() / n;
        if m < rows {
            return Err(Error::ShapeMismatch(format!("shape {} is not a stretched hook", t.shape())));
        }
        let p = Shst { a: m - rows, b: rows - 1, n };
        p.check(t)?;
        Ok(p)
    }

    /// Alphabet size `a + b + 1`.
    pub fn alphabet(&self) -> usize {
        self.a + self.b + 1
    }

    pub fn partition(&self) -> Partition {
        let mut parts = vec![(self.a + 1) * self.n];
        parts.extend(std::iter::repeat_n(self.n, self.b));
        Partition::new(parts).expect("hook shape is a partition")
    }

    pub fn shape(&self) -> SkewShape {
        SkewShape::straight(self.partition())
    }

    pub fn content(&self) -> Composition {
        Composition::constant(self.n, self.alphabet())
    }

    pub fn enumerate(&self) -> Vec<Tableau> {
        enumerate_ssyt(&self.shape(), &self.content())
    }

    pub fn check(&self, t: &Tableau) -> Result<()> {
        if *t.shape() != self.shape() {
            return Err(Error::ShapeMismatch(format!("expected shape {}, found {}", self.shape(), t.shape())));
        }
        if t.max_entry() as usize > self.alphabet() || t.content_in(self.alphabet()) != self.content() {
            return Err(Error::NotRectangularContent(t.content().parts().to_vec()));
        }
        Ok(())
    }

    /// GT coordinates `(j, i)` of plane-partition cell `(r, c)`, all 1-based.
    fn gt_coords(&self, r: usize, c: usize) -> (usize, usize) {
        let i = self.b + 2 - c;
        (r + i - 1, i)
    }
}

/// The bijection `SHST(a, b, n) → PP(a, b, n)`: the free part of the
/// GT-pattern, read sideways. Cell `(r, c)` holds GT entry `(r + i − 1, i)`
/// with `i = b + 2 − c`.
pub fn shst_to_pp(t: &Tableau, p: &Shst) -> Result<PlanePartition> {
    p.check(t)?;
    let g = gt_pattern_in(t, p.alphabet())?;
    let rows = (1..=p.a)
        .map(|r| {
            (1..=p.b)
                .map(|c| {
                    let (j, i) = p.gt_coords(r, c);
                    g.entry(j, i) as u32
                })
                .collect()
        })
        .collect();
    PlanePartition::new(rows, p.b, p.n as u32)
}

/// Inverse of [`shst_to_pp`].
pub fn pp_to_shst(pp: &PlanePartition, p: &Shst) -> Result<Tableau> {
    if pp.a() != p.a || pp.b() != p.b || pp.bound() as usize > p.n {
        return Err(Error::Invalid {
            what: "plane partition",
            detail: format!("does not fit in a {}×{} box with bound {}", p.a, p.b, p.n),
        });
    }
    let k = p.alphabet();
    let mut g = GTPattern { rows: (1..=k).rev().map(|j| vec![0; j]).collect() };
    for j in 1..=k {
        for i in 2..=j {
            // zeros right of column b + 1, n below-left of the free band
            let v = if i > p.b + 1 {
                0
            } else if j >= i + p.a {
                p.n
            } else {
                let r = j - i + 1;
                let c = p.b + 2 - i;
                pp.rows()[r - 1][c - 1] as usize
            };
            g.set(j, i, v);
        }
        let rest: usize = (2..=j).map(|i| g.entry(j, i)).sum();
        g.set(j, 1, j * p.n - rest);
    }
    let t = tableau_from_gt(&GTPattern::new(g.rows)?)?;
    p.check(&t)?;
    Ok(t)
}

/// Product of piecewise-linear toggles over the diagonals of the box, from the
/// diagonal with largest `r − c` to the smallest. Toggling the diagonal
/// `r − c = j − b − 1` is the Bender–Knuth involution on GT row `j`, so under
/// [`shst_to_pp`] this action is inverse promotion.
pub fn pp_rowmotion(pp: &PlanePartition) -> PlanePartition {
    let mut out = pp.clone();
    let (a, b) = (pp.a() as i64, pp.b() as i64);
    for d in (1 - b..=a - 1).rev() {
        out.toggle_diagonal(d);
    }
    out
}

/// All of `PP(a, b, n)` in lexicographic order of their rows.
pub fn enumerate_pp(a: usize, b: usize, n: u32) -> Vec<PlanePartition> {
    fn rec(cells: &mut Vec<Vec<u32>>, k: usize, a: usize, b: usize, n: u32, out: &mut Vec<PlanePartition>) {
        if k == a * b {
            out.push(PlanePartition { n, b, rows: cells.clone() });
            return;
        }
        let (r, c) = (k / b, k % b);
        let lo = if c > 0 { cells[r][c - 1] } else { 0 }.max(if r > 0 { cells[r - 1][c] } else { 0 });
        for v in lo..=n {
            cells[r][c] = v;
            rec(cells, k + 1, a, b, n, out);
        }
    }
    let mut out = Vec::new();
    rec(&mut vec![vec![0; b]; a], 0, a, b, n, &mut out);
    out
}
