//! Jeu-de-taquin promotion over the alphabet `1..=m`.
//!
//! `promote` removes the 1s, slides the resulting holes out to the outer
//! corners, decrements every entry and writes `m` into the holes. The content
//! rotates one step: letter `i + 1` becomes letter `i` and the 1s become `m`.

use std::collections::HashMap;
use std::hash::Hash;

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::tableaux::Tableau;

/// Working grid indexed by absolute column; `None` marks a hole.
struct Grid<'a> {
    t: &'a Tableau,
    cells: Vec<Vec<Option<u32>>>,
}

impl<'a> Grid<'a> {
    fn new(t: &'a Tableau) -> Self {
        let cells = t.rows().iter().map(|r| r.iter().map(|&x| Some(x)).collect()).collect();
        Grid { t, cells }
    }

    fn offset(&self, r: usize) -> usize {
        self.t.shape().inner().part(r)
    }

    /// Value at an absolute cell; absent cells read as `None` (outside).
    fn get(&self, r: usize, c: usize) -> Option<Option<u32>> {
        if !self.t.shape().contains_cell(r, c) {
            return None;
        }
        Some(self.cells[r][c - self.offset(r)])
    }

    fn set(&mut self, r: usize, c: usize, v: Option<u32>) {
        let off = self.offset(r);
        self.cells[r][c - off] = v;
    }

    /// Slides the hole at `(r, c)` towards the outer corner: it trades places
    /// with the smaller of its right and lower neighbours, the lower one on ties.
    fn slide_out(&mut self, mut r: usize, mut c: usize) {
        loop {
            let right = self.get(r, c + 1).flatten();
            let below = self.get(r + 1, c).flatten();
            let go_down = match (right, below) {
                (None, None) => return,
                (Some(_), None) => false,
                (None, Some(_)) => true,
                (Some(x), Some(y)) => y <= x,
            };
            let (nr, nc) = if go_down { (r + 1, c) } else { (r, c + 1) };
            let v = self.get(nr, nc).flatten();
            self.set(r, c, v);
            self.set(nr, nc, None);
            r = nr;
            c = nc;
        }
    }

    /// Reverse slide towards the inner corner: trades with the larger of the
    /// left and upper neighbours, the upper one on ties.
    fn slide_in(&mut self, mut r: usize, mut c: usize) {
        loop {
            let left = if c > 0 { self.get(r, c - 1).flatten() } else { None };
            let above = if r > 0 { self.get(r - 1, c).flatten() } else { None };
            let go_up = match (left, above) {
                (None, None) => return,
                (Some(_), None) => false,
                (None, Some(_)) => true,
                (Some(x), Some(y)) => y >= x,
            };
            let (nr, nc) = if go_up { (r - 1, c) } else { (r, c - 1) };
            let v = self.get(nr, nc).flatten();
            self.set(r, c, v);
            self.set(nr, nc, None);
            r = nr;
            c = nc;
        }
    }

    fn into_tableau(self, fill: u32, shift: i64) -> Tableau {
        let rows = self
            .cells
            .into_iter()
            .map(|row| row.into_iter().map(|x| x.map_or(fill, |v| (v as i64 + shift) as u32)).collect())
            .collect();
        Tableau::from_parts_unchecked(self.t.shape().clone(), rows)
    }
}

fn check_range(t: &Tableau, m: u32) -> Result<()> {
    let max = t.max_entry();
    if max > m {
        return Err(Error::EntryOutOfRange { entry: max, max: m });
    }
    Ok(())
}

/// Promotion with alphabet `1..=m`.
pub fn promote(t: &Tableau, m: u32) -> Result<Tableau> {
    check_range(t, m)?;
    let mut g = Grid::new(t);
    let mut holes: Vec<(usize, usize)> = t.shape().cells().filter(|&(r, c)| t.get(r, c) == 1).collect();
    // The 1s form a horizontal strip; the rightmost hole moves first.
    holes.sort_unstable_by_key(|h| std::cmp::Reverse(h.1));
    for &(r, c) in &holes {
        g.set(r, c, None);
    }
    for (r, c) in holes {
        g.slide_out(r, c);
    }
    Ok(g.into_tableau(m, -1))
}

/// Inverse promotion: removes the `m`s, slides inward, increments, and fills with 1.
pub fn promote_inverse(t: &Tableau, m: u32) -> Result<Tableau> {
    check_range(t, m)?;
    let mut g = Grid::new(t);
    let mut holes: Vec<(usize, usize)> = t.shape().cells().filter(|&(r, c)| t.get(r, c) == m).collect();
    holes.sort_unstable_by_key(|&(_, c)| c);
    for &(r, c) in &holes {
        g.set(r, c, None);
    }
    for (r, c) in holes {
        g.slide_in(r, c);
    }
    Ok(g.into_tableau(1, 1))
}

/// `promote` applied `k` times.
pub fn promote_pow(t: &Tableau, m: u32, k: usize) -> Result<Tableau> {
    let mut cur = t.clone();
    for _ in 0..k {
        cur = promote(&cur, m)?;
    }
    Ok(cur)
}

/// A promotion orbit, rotated so that its least element comes first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Orbit<T> {
    pub elements: Vec<T>,
}

impl<T> Orbit<T> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn representative(&self) -> &T {
        &self.elements[0]
    }
}

/// Orbits of a bijection together with its order (lcm of the orbit sizes).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitDecomposition<T> {
    pub orbits: Vec<Orbit<T>>,
    pub order: u128,
}

impl<T> OrbitDecomposition<T> {
    pub fn sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(Orbit::len).collect()
    }
}

/// Images of every element under `f` as indices into `xs` (computed in
/// parallel); fails if some image falls outside `xs`.
pub fn successor_indices<T, F>(xs: &[T], f: F) -> Result<Vec<usize>>
where
    T: Eq + Hash + Sync,
    F: Fn(&T) -> Result<T> + Sync,
{
    let index: HashMap<&T, usize> = xs.iter().enumerate().map(|(i, x)| (x, i)).collect();
    xs.par_iter()
        .enumerate()
        .map(|(i, x)| {
            let y = f(x)?;
            index.get(&y).copied().ok_or(Error::NotClosed(i))
        })
        .collect()
}

/// Decomposes `xs` into cycles of `f`. Orbits are listed in order of their
/// least element; `f` must be a bijection of `xs`.
pub fn decompose<T, F>(xs: &[T], f: F) -> Result<OrbitDecomposition<T>>
where
    T: Clone + Eq + Hash + Ord + Sync,
    F: Fn(&T) -> Result<T> + Sync,
{
    let next = successor_indices(xs, f)?;
    let mut seen = vec![false; xs.len()];
    let mut orbits = Vec::new();
    let mut order: u128 = 1;
    for start in 0..xs.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push(i);
            i = next[i];
        }
        if i != start {
            // Only possible when `f` is not injective on `xs`.
            return Err(Error::NotClosed(i));
        }
        let least = (0..cycle.len()).min_by_key(|&k| &xs[cycle[k]]).unwrap_or(0);
        cycle.rotate_left(least);
        order = order.lcm(&(cycle.len() as u128));
        orbits.push(Orbit { elements: cycle.into_iter().map(|k| xs[k].clone()).collect() });
    }
    orbits.sort_by(|a, b| a.representative().cmp(b.representative()));
    Ok(OrbitDecomposition { orbits, order })
}

/// Promotion orbits of a set of tableaux.
pub fn orbit_decomposition(xs: &[Tableau], m: u32) -> Result<OrbitDecomposition<Tableau>> {
    decompose(xs, |t| promote(t, m))
}

/// Lengths of the promotion orbits, without materialising the orbits.
pub fn orbit_sizes(xs: &[Tableau], m: u32) -> Result<(Vec<usize>, u128)> {
    let next = successor_indices(xs, |t| promote(t, m))?;
    let mut seen = vec![false; xs.len()];
    let mut sizes = Vec::new();
    let mut order: u128 = 1;
    for start in 0..xs.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            len += 1;
            i = next[i];
        }
        if i != start {
            return Err(Error::NotClosed(i));
        }
        order = order.lcm(&(len as u128));
        sizes.push(len);
    }
    sizes.sort_unstable();
    Ok((sizes, order))
}
