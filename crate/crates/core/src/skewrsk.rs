//! Tableaux on disjoint stretched rows, their matrix and biword encodings,
//! and RSK insertion.
//!
//! `SM(ν, n)` consists of the semistandard tableaux whose shape is a disjoint
//! union of rows of lengths `nν_1, nν_2, …` (first row top-right) with content
//! `n^m`, `m = |ν|`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::shapes::{Composition, Partition, SkewShape};
use crate::tableaux::{enumerate_ssyt, Tableau, Word};

/// The parameters `(ν, n)` of `SM(ν, n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Sm {
    pub nu: Partition,
    pub n: usize,
}

impl Sm {
    pub fn new(nu: Partition, n: usize) -> Self {
        Sm { nu, n }
    }

    /// Alphabet size `m = |ν|`.
    pub fn m(&self) -> usize {
        self.nu.size()
    }

    pub fn shape(&self) -> SkewShape {
        SkewShape::sm_shape(&self.nu, self.n)
    }

    pub fn content(&self) -> Composition {
        Composition::constant(self.n, self.m())
    }

    pub fn enumerate(&self) -> Vec<Tableau> {
        enumerate_ssyt(&self.shape(), &self.content())
    }

    /// Row sums `nν` of the associated matrices.
    pub fn row_sums(&self) -> Vec<usize> {
        self.nu.parts().iter().map(|&p| p * self.n).collect()
    }

    fn check(&self, t: &Tableau) -> Result<()> {
        if *t.shape() != self.shape() {
            return Err(Error::ShapeMismatch(format!("expected shape {}, found {}", self.shape(), t.shape())));
        }
        if t.max_entry() as usize > self.m() || t.content_in(self.m()) != self.content() {
            return Err(Error::NotRectangularContent(t.content().parts().to_vec()));
        }
        Ok(())
    }
}

/// Non-negative integer matrix, stored as rows. Serialised as its rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ContingencyMatrix {
    rows: Vec<Vec<usize>>,
}

impl ContingencyMatrix {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        if let Some(first) = rows.first() {
            if rows.iter().any(|r| r.len() != first.len()) {
                return Err(Error::Invalid { what: "matrix", detail: "rows of different lengths".into() });
            }
        }
        Ok(ContingencyMatrix { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn row_sums(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<usize> {
        (0..self.num_cols()).map(|j| self.rows.iter().map(|r| r[j]).sum()).collect()
    }
}

impl std::fmt::Display for ContingencyMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(usize::to_string).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// `M_ij` = number of entries equal to `j` in row `i` of `t`.
pub fn tableau_to_matrix(t: &Tableau, sm: &Sm) -> Result<ContingencyMatrix> {
    sm.check(t)?;
    let m = sm.m();
    let rows = t
        .rows()
        .iter()
        .map(|row| {
            let mut counts = vec![0; m];
            for &x in row {
                counts[x as usize - 1] += 1;
            }
            counts
        })
        .collect();
    Ok(ContingencyMatrix { rows })
}

/// Inverse of [`tableau_to_matrix`].
pub fn matrix_to_tableau(mat: &ContingencyMatrix, sm: &Sm) -> Result<Tableau> {
    if mat.row_sums() != sm.row_sums() || mat.col_sums() != vec![sm.n; sm.m()] {
        return Err(Error::Invalid {
            what: "matrix",
            detail: format!("margins {:?}/{:?} do not match SM({}, {})", mat.row_sums(), mat.col_sums(), sm.nu, sm.n),
        });
    }
    let rows = mat
        .rows
        .iter()
        .map(|r| r.iter().enumerate().flat_map(|(j, &c)| std::iter::repeat(j as u32 + 1).take(c)).collect())
        .collect();
    Tableau::new(sm.shape(), rows)
}

/// `rot^steps`: column `j` moves to `j − steps` (mod the number of columns).
pub fn rotate_columns(mat: &ContingencyMatrix, steps: usize) -> ContingencyMatrix {
    let rows = mat
        .rows
        .iter()
        .map(|r| {
            let mut r = r.clone();
            if !r.is_empty() {
                let k = steps % r.len();
                r.rotate_left(k);
            }
            r
        })
        .collect();
    ContingencyMatrix { rows }
}

/// All matrices with the given row and column sums, in lexicographic order.
pub fn enumerate_matrices(row_sums: &[usize], col_sums: &[usize]) -> Vec<ContingencyMatrix> {
    fn fill_row(
        i: usize,
        j: usize,
        left_in_row: usize,
        cols: &mut Vec<usize>,
        rows: &mut Vec<Vec<usize>>,
        row_sums: &[usize],
        out: &mut Vec<ContingencyMatrix>,
    ) {
        let nc = cols.len();
        if i == row_sums.len() {
            if cols.iter().all(|&c| c == 0) {
                out.push(ContingencyMatrix { rows: rows.clone() });
            }
            return;
        }
        if j == nc {
            if left_in_row == 0 {
                let next = row_sums.get(i + 1).copied().unwrap_or(0);
                fill_row(i + 1, 0, next, cols, rows, row_sums, out);
            }
            return;
        }
        let hi = left_in_row.min(cols[j]);
        for v in 0..=hi {
            rows[i][j] = v;
            cols[j] -= v;
            fill_row(i, j + 1, left_in_row - v, cols, rows, row_sums, out);
            cols[j] += v;
        }
        rows[i][j] = 0;
    }
    if row_sums.iter().sum::<usize>() != col_sums.iter().sum::<usize>() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut rows = vec![vec![0; col_sums.len()]; row_sums.len()];
    let first = row_sums.first().copied().unwrap_or(0);
    fill_row(0, 0, first, &mut col_sums.to_vec(), &mut rows, row_sums, &mut out);
    out
}

/// Two-line array sorted lexicographically by `(top, bottom)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Biword {
    pub top: Vec<u32>,
    pub bottom: Vec<u32>,
}

impl Biword {
    pub fn new(top: Vec<u32>, bottom: Vec<u32>) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::Invalid { what: "biword", detail: "rows of different lengths".into() });
        }
        let sorted = top.iter().zip(&bottom).collect::<Vec<_>>().windows(2).all(|p| p[0] <= p[1]);
        if !sorted {
            return Err(Error::Invalid { what: "biword", detail: "pairs are not sorted".into() });
        }
        Ok(Biword { top, bottom })
    }

    pub fn len(&self) -> usize {
        self.top.len()
    }

    pub fn is_empty(&self) -> bool {
        self.top.is_empty()
    }

    pub fn bottom_word(&self) -> Word {
        Word(self.bottom.clone())
    }
}

/// With `ℓ` rows, the pair `(i, j)` appears `M_{ℓ+1−i, j}` times, so the
/// bottom row is the reading word of the corresponding tableau.
pub fn matrix_to_biword(mat: &ContingencyMatrix) -> Biword {
    let l = mat.num_rows();
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    for i in 1..=l {
        for (j, &c) in mat.rows[l - i].iter().enumerate() {
            for _ in 0..c {
                top.push(i as u32);
                bottom.push(j as u32 + 1);
            }
        }
    }
    Biword { top, bottom }
}

/// Row-inserts `x`, bumping the leftmost entry strictly greater than `x`.
/// Returns the row index of the new cell.
fn row_insert(rows: &mut Vec<Vec<u32>>, mut x: u32) -> usize {
    for (i, row) in rows.iter_mut().enumerate() {
        match row.iter().position(|&y| y > x) {
            Some(p) => x = std::mem::replace(&mut row[p], x),
            None => {
                row.push(x);
                return i;
            }
        }
    }
    rows.push(vec![x]);
    rows.len() - 1
}

/// RSK: insert the bottom letters, recording the top letters.
pub fn rsk(w: &Biword) -> (Tableau, Tableau) {
    let mut p: Vec<Vec<u32>> = Vec::new();
    let mut q: Vec<Vec<u32>> = Vec::new();
    for (&a, &b) in w.top.iter().zip(&w.bottom) {
        let r = row_insert(&mut p, b);
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(a);
    }
    let p = Tableau::from_rows(p).expect("insertion tableau is semistandard");
    let q = Tableau::from_rows(q).expect("recording tableau is semistandard for sorted biwords");
    (p, q)
}
