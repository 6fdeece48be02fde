//! Pipe dreams (rc-graphs): bottom pipe dreams, wire tracing, ladder moves,
//! and the ladder-move closure that enumerates every reduced pipe dream of a
//! permutation.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poly::{ExponentVector, IntPolynomial};

pub const DEFAULT_ENUMERATION_LIMIT: usize = 1_000_000;

/// An `n × n` grid of crosses and elbows. Crosses only occur in cells with
/// `row + col <= n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PipeDream {
    n: usize,
    cells: Vec<bool>,
}

#[derive(Clone, Copy)]
enum Entry {
    Left,
    Bottom,
}

impl PipeDream {
    pub fn empty(n: usize) -> Self {
        PipeDream {
            n,
            cells: vec![false; n * n],
        }
    }

    /// Builds a grid from 1-based `(row, col)` crossings.
    pub fn new(n: usize, crossings: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut d = PipeDream::empty(n);
        for (r, c) in crossings {
            if r == 0 || c == 0 || r + c > n {
                return Err(Error::InvalidPipeDream(format!(
                    "crossing ({r},{c}) lies outside the staircase of size {n}"
                )));
            }
            d.set(r, c, true);
        }
        Ok(d)
    }

    /// The left-justified pipe dream with `L_i` crosses in row `i`.
    pub fn bottom(w: &Permutation) -> Self {
        let n = w.n();
        let mut d = PipeDream::empty(n);
        for (i, &l) in w.lehmer_code().entries().iter().enumerate() {
            for c in 1..=l as usize {
                d.set(i + 1, c, true);
            }
        }
        d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_cross(&self, r: usize, c: usize) -> bool {
        r >= 1 && c >= 1 && r <= self.n && c <= self.n && self.cells[(r - 1) * self.n + c - 1]
    }

    fn set(&mut self, r: usize, c: usize, value: bool) {
        self.cells[(r - 1) * self.n + c - 1] = value;
    }

    /// Crossings sorted by row, then column.
    pub fn crossings(&self) -> Vec<(usize, usize)> {
        (1..=self.n)
            .flat_map(|r| (1..=self.n).map(move |c| (r, c)))
            .filter(|&(r, c)| self.has_cross(r, c))
            .collect()
    }

    pub fn crossing_count(&self) -> usize {
        self.cells.iter().filter(|&&b| b).count()
    }

    pub fn row_count(&self, r: usize) -> usize {
        (1..=self.n).filter(|&c| self.has_cross(r, c)).count()
    }

    /// Exponent of `x_i` is the number of crosses in row `i`.
    pub fn weight(&self) -> ExponentVector {
        ExponentVector::new((1..=self.n).map(|r| self.row_count(r) as u32).collect())
    }

    /// Follows every wire from the left edge to the top edge. Returns the
    /// exit column of each wire and, per cross, the (left, bottom) wires
    /// meeting there.
    fn trace(&self) -> (Vec<u32>, Vec<(usize, usize)>) {
        let n = self.n;
        let mut exits = vec![0; n];
        // Wire index entering each cell from the left / from below.
        let mut from_left = vec![usize::MAX; n * n];
        let mut from_bottom = vec![usize::MAX; n * n];
        for wire in 0..n {
            let (mut r, mut c, mut entry) = (wire + 1, 1, Entry::Left);
            loop {
                if r == 0 {
                    exits[wire] = c as u32;
                    break;
                }
                assert!(c <= n, "wire {} left the grid on the right", wire + 1);
                let idx = (r - 1) * n + c - 1;
                match entry {
                    Entry::Left => from_left[idx] = wire,
                    Entry::Bottom => from_bottom[idx] = wire,
                }
                match (self.cells[idx], entry) {
                    (true, Entry::Left) | (false, Entry::Bottom) => {
                        c += 1;
                        entry = Entry::Left;
                    }
                    (true, Entry::Bottom) | (false, Entry::Left) => {
                        r -= 1;
                        entry = Entry::Bottom;
                    }
                }
            }
        }
        let pairs = (0..n * n)
            .filter(|&idx| self.cells[idx])
            .map(|idx| (from_left[idx], from_bottom[idx]))
            .collect();
        (exits, pairs)
    }

    /// The wire entering at the left of row `i` exits at the top of column
    /// `w_i`.
    pub fn permutation(&self) -> Permutation {
        let (exits, _) = self.trace();
        Permutation::from_word(exits).expect("wire tracing yields a bijection")
    }

    /// No two wires cross more than once.
    pub fn is_reduced(&self) -> bool {
        let (_, pairs) = self.trace();
        let mut seen = HashSet::with_capacity(pairs.len());
        pairs
            .into_iter()
            .all(|(a, b)| seen.insert((a.min(b), a.max(b))))
    }

    pub fn is_left_justified(&self) -> bool {
        (1..=self.n).all(|r| {
            let len = self.row_count(r);
            (1..=len).all(|c| self.has_cross(r, c))
        })
    }

    /// All ladder moves available in this pipe dream, ordered by source.
    pub fn ladder_moves(&self) -> Vec<LadderMove> {
        let mut moves = Vec::new();
        for (r, c) in self.crossings() {
            if self.has_cross(r, c + 1) {
                continue;
            }
            let mut k = 0;
            let mut top = r - 1;
            while top >= 1 && self.has_cross(top, c) && self.has_cross(top, c + 1) {
                k += 1;
                top -= 1;
            }
            if top >= 1 && !self.has_cross(top, c) && !self.has_cross(top, c + 1) {
                moves.push(LadderMove {
                    source: (r, c),
                    order: k,
                    target: (top, c + 1),
                });
            }
        }
        moves
    }

    pub fn apply(&self, m: &LadderMove) -> PipeDream {
        let mut d = self.clone();
        debug_assert!(d.has_cross(m.source.0, m.source.1));
        d.set(m.source.0, m.source.1, false);
        d.set(m.target.0, m.target.1, true);
        d
    }

    /// Undoes [`PipeDream::apply`].
    pub fn unapply(&self, m: &LadderMove) -> PipeDream {
        let mut d = self.clone();
        debug_assert!(d.has_cross(m.target.0, m.target.1));
        d.set(m.target.0, m.target.1, false);
        d.set(m.source.0, m.source.1, true);
        d
    }

    /// Whether the up-right diagonal from the first cross of every nonempty
    /// row avoids all crosses, both on the diagonal and in the cells just
    /// left of it. Only defined for left-justified pipe dreams.
    pub fn diagonal_clearance(&self) -> Result<bool> {
        if let Some(row) = (1..=self.n).find(|&r| {
            let len = self.row_count(r);
            !(1..=len).all(|c| self.has_cross(r, c))
        }) {
            return Err(Error::NotLeftJustified { row });
        }
        for i in (1..=self.n).filter(|&r| self.has_cross(r, 1)) {
            for t in 1..i {
                if self.has_cross(i - t, 1 + t) || self.has_cross(i - t, t) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

impl fmt::Display for PipeDream {
    /// One line per row: `+` for a cross, `.` for an elbow.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 1..=self.n {
            let line: String = (1..=self.n)
                .map(|c| if self.has_cross(r, c) { '+' } else { '.' })
                .collect();
            if r > 1 {
                f.write_char('\n')?;
            }
            f.write_str(&line)?;
        }
        Ok(())
    }
}

impl fmt::Debug for PipeDream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PipeDream(n={}, {:?})", self.n, self.crossings())
    }
}

#[derive(Serialize, Deserialize)]
struct PipeDreamJson {
    n: usize,
    crossings: Vec<[usize; 2]>,
}

impl Serialize for PipeDream {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PipeDreamJson {
            n: self.n,
            crossings: self.crossings().into_iter().map(|(r, c)| [r, c]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PipeDream {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PipeDreamJson::deserialize(d)?;
        PipeDream::new(raw.n, raw.crossings.into_iter().map(|[r, c]| (r, c)))
            .map_err(serde::de::Error::custom)
    }
}

/// A cross at `source` climbs `order` full rows and lands at `target`, one
/// column to the right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LadderMove {
    pub source: (usize, usize),
    pub order: usize,
    pub target: (usize, usize),
}

/// The reduced pipe dreams of a permutation as nodes, ladder moves as edges.
#[derive(Clone, Debug)]
pub struct LadderGraph {
    /// Sorted; index 0 is not necessarily the bottom pipe dream.
    pub dreams: Vec<PipeDream>,
    /// `(from, to, order)` indices into `dreams`.
    pub edges: Vec<(usize, usize, usize)>,
}

impl LadderGraph {
    pub fn to_dot(&self, w: &Permutation) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"RC({w})\" {{");
        let _ = writeln!(out, "  node [shape=box, fontname=\"monospace\"];");
        for (i, d) in self.dreams.iter().enumerate() {
            let label = d.to_string().replace('\n', "\\n");
            let _ = writeln!(out, "  d{i} [label=\"{label}\"];");
        }
        for &(a, b, k) in &self.edges {
            let _ = writeln!(out, "  d{a} -> d{b} [label=\"{k}\"];");
        }
        out.push_str("}\n");
        out
    }
}

/// Breadth-first closure of the bottom pipe dream under ladder moves.
pub fn ladder_graph(w: &Permutation, limit: usize) -> Result<LadderGraph> {
    let bottom = PipeDream::bottom(w);
    let mut index: HashMap<PipeDream, usize> = HashMap::new();
    let mut order = vec![bottom.clone()];
    index.insert(bottom, 0);
    let mut raw_edges = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(at) = queue.pop_front() {
        let current = order[at].clone();
        for m in current.ladder_moves() {
            let next = current.apply(&m);
            let to = match index.get(&next) {
                Some(&to) => to,
                None => {
                    if order.len() >= limit {
                        return Err(Error::EnumerationLimit { limit });
                    }
                    let to = order.len();
                    index.insert(next.clone(), to);
                    order.push(next);
                    queue.push_back(to);
                    to
                }
            };
            raw_edges.push((at, to, m.order));
        }
    }
    // Renumber by canonical order so output is independent of visit order.
    let mut sorted: Vec<usize> = (0..order.len()).collect();
    sorted.sort_by(|&a, &b| order[a].crossings().cmp(&order[b].crossings()));
    let mut rank = vec![0; order.len()];
    for (new, &old) in sorted.iter().enumerate() {
        rank[old] = new;
    }
    let mut edges: Vec<_> = raw_edges
        .into_iter()
        .map(|(a, b, k)| (rank[a], rank[b], k))
        .collect();
    edges.sort_unstable();
    let dreams = sorted.into_iter().map(|i| order[i].clone()).collect();
    Ok(LadderGraph { dreams, edges })
}

/// Every reduced pipe dream of `w`, sorted by crossing list.
pub fn enumerate_reduced(w: &Permutation) -> Result<Vec<PipeDream>> {
    enumerate_reduced_with_limit(w, DEFAULT_ENUMERATION_LIMIT)
}

pub fn enumerate_reduced_with_limit(w: &Permutation, limit: usize) -> Result<Vec<PipeDream>> {
    Ok(ladder_graph(w, limit)?.dreams)
}

/// `𝔖_w` as the sum of the weights of its reduced pipe dreams.
pub fn schubert_from_pipedreams(w: &Permutation) -> Result<IntPolynomial> {
    let mut poly = IntPolynomial::zero();
    for d in enumerate_reduced(w)? {
        poly.add_term(d.weight(), 1.into());
    }
    Ok(poly)
}
