//! Projection of a duplex tiling onto the plane graph of its base.
//!
//! Vertical dominoes become jewels. A horizontal domino on floor `z` becomes
//! an edge of the plane graph tagged `z` and directed by the colors of its
//! endpoints: floor-0 edges run from the black cell to the white cell,
//! floor-1 edges from white to black. Every non-jewel cell then has exactly
//! one incoming and one outgoing edge, so the edges split into oriented
//! cycles. Two stacked parallel horizontal dominoes make a doubled edge (a
//! trivial cycle), which is recorded as two jewels instead.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use thiserror::Error;

use crate::lattice::{vertex_color, Cell};
use crate::region::{BaseShape, DuplexRegion};
use crate::tiling::{Domino, Tiling};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SockError {
    #[error("cycle must have even length at least 4, got {0}")]
    BadLength(usize),
    #[error("cycle has {vertices} vertices but {floors} floor tags")]
    FloorCount { vertices: usize, floors: usize },
    #[error("cycle repeats vertex {0:?}")]
    RepeatedVertex(Cell),
    #[error("consecutive cycle vertices {0:?} and {1:?} are not adjacent")]
    NotAdjacent(Cell, Cell),
    #[error("floor tags must be 0 or 1 and alternate along the cycle")]
    BadFloors,
    #[error("vertex {0:?} appears in more than one place in the sock")]
    SharedVertex(Cell),
    #[error("sock vertex {0:?} is not a base cell")]
    OutsideBase(Cell),
    #[error("base cell {0:?} is neither a jewel nor on a cycle")]
    MissingVertex(Cell),
}

/// Floor a directed edge `from -> to` must come from under the orientation
/// convention.
pub fn floor_of_directed_edge(from: Cell) -> u8 {
    if vertex_color(from) > 0 {
        0
    } else {
        1
    }
}

/// An oriented simple cycle in the plane graph, starting at its smallest
/// vertex. `floors[i]` tags the edge from `vertices[i]` to `vertices[i + 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    vertices: Vec<Cell>,
    floors: Vec<u8>,
}

impl Cycle {
    pub fn new(vertices: Vec<Cell>, floors: Vec<u8>) -> Result<Cycle, SockError> {
        let n = vertices.len();
        if n < 4 || !n.is_multiple_of(2) {
            return Err(SockError::BadLength(n));
        }
        if floors.len() != n {
            return Err(SockError::FloorCount {
                vertices: n,
                floors: floors.len(),
            });
        }
        let mut seen = HashSet::with_capacity(n);
        for &v in &vertices {
            if !seen.insert(v) {
                return Err(SockError::RepeatedVertex(v));
            }
        }
        for i in 0..n {
            let (a, b) = (vertices[i], vertices[(i + 1) % n]);
            if !a.is_adjacent(b) {
                return Err(SockError::NotAdjacent(a, b));
            }
            if floors[i] > 1 || floors[i] == floors[(i + 1) % n] {
                return Err(SockError::BadFloors);
            }
        }
        let start = (0..n).min_by_key(|&i| vertices[i]).unwrap_or(0);
        let mut vertices = vertices;
        let mut floors = floors;
        vertices.rotate_left(start);
        floors.rotate_left(start);
        Ok(Cycle { vertices, floors })
    }

    pub fn vertices(&self) -> &[Cell] {
        &self.vertices
    }

    pub fn floors(&self) -> &[u8] {
        &self.floors
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: Cell) -> bool {
        self.vertices.contains(&v)
    }

    pub fn position(&self, v: Cell) -> Option<usize> {
        self.vertices.iter().position(|&w| w == v)
    }

    /// Directed edges `(from, to, floor)` in cycle order.
    pub fn edges(&self) -> impl Iterator<Item = (Cell, Cell, u8)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n], self.floors[i]))
    }

    /// The horizontal dominoes this cycle was projected from.
    pub fn dominoes(&self) -> Vec<Domino> {
        self.edges()
            .map(|(a, b, z)| {
                Domino::new(a.cube(z as i32), b.cube(z as i32)).expect("cycle edges are adjacent")
            })
            .collect()
    }

    /// Same edges, opposite direction.
    pub fn reversed(&self) -> Cycle {
        let n = self.vertices.len();
        let vertices: Vec<Cell> = (0..n).map(|i| self.vertices[(n - i) % n]).collect();
        // edge i of the reversed cycle is edge n-1-i of the original
        let floors: Vec<u8> = (0..n).map(|i| self.floors[n - 1 - i]).collect();
        Cycle::new(vertices, floors).expect("reversal preserves validity")
    }

    /// Inclusive bounding box `(min, max)` of the vertices.
    pub fn bounds(&self) -> (Cell, Cell) {
        let xs = self.vertices.iter().map(|v| v.x);
        let ys = self.vertices.iter().map(|v| v.y);
        (
            Cell::new(xs.clone().min().unwrap_or(0), ys.clone().min().unwrap_or(0)),
            Cell::new(xs.max().unwrap_or(0), ys.max().unwrap_or(0)),
        )
    }

    /// Whether every edge's floor agrees with the projection's orientation rule.
    pub fn follows_orientation_rule(&self) -> bool {
        self.edges().all(|(a, _, z)| floor_of_directed_edge(a) == z)
    }
}

/// Jewels plus oriented simple cycles.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sock {
    jewels: BTreeSet<Cell>,
    cycles: Vec<Cycle>,
}

impl Sock {
    pub fn new(jewels: BTreeSet<Cell>, mut cycles: Vec<Cycle>) -> Result<Sock, SockError> {
        let mut used: HashSet<Cell> = jewels.iter().copied().collect();
        for c in &cycles {
            for &v in c.vertices() {
                if !used.insert(v) {
                    return Err(SockError::SharedVertex(v));
                }
            }
        }
        cycles.sort();
        Ok(Sock { jewels, cycles })
    }

    pub fn jewels(&self) -> &BTreeSet<Cell> {
        &self.jewels
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    /// Check that jewels and cycle vertices partition the base cells.
    pub fn check_base(&self, base: &BaseShape) -> Result<(), SockError> {
        let vertices = self
            .jewels
            .iter()
            .chain(self.cycles.iter().flat_map(|c| c.vertices()));
        let mut count = 0;
        for &v in vertices {
            if !base.contains(v) {
                return Err(SockError::OutsideBase(v));
            }
            count += 1;
        }
        if count != base.len() {
            let on_sock: HashSet<Cell> = self
                .jewels
                .iter()
                .chain(self.cycles.iter().flat_map(|c| c.vertices()))
                .copied()
                .collect();
            if let Some(&missing) = base.cells().iter().find(|c| !on_sock.contains(c)) {
                return Err(SockError::MissingVertex(missing));
            }
        }
        Ok(())
    }
}

/// The plane graph over base cells, with edges between edge-adjacent cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseGraph {
    pub vertices: Vec<Cell>,
    /// `(a, b)` with `a < b`, sorted.
    pub edges: Vec<(Cell, Cell)>,
}

pub fn base_graph(r: &DuplexRegion) -> BaseGraph {
    let base = r.base();
    let vertices: Vec<Cell> = base.cells().iter().copied().collect();
    let mut edges = Vec::new();
    for &v in &vertices {
        for w in [Cell::new(v.x + 1, v.y), Cell::new(v.x, v.y + 1)] {
            if base.contains(w) {
                edges.push((v, w));
            }
        }
    }
    edges.sort_unstable();
    BaseGraph { vertices, edges }
}

/// Edges of the raw projection, before trivial cycles are replaced by jewels.
#[derive(Clone, Debug, Default)]
pub struct RawProjection {
    pub jewels: BTreeSet<Cell>,
    /// Directed edges `(from, to, floor)`.
    pub edges: Vec<(Cell, Cell, u8)>,
}

/// Project the horizontal dominoes of `t` to directed, floor-tagged edges.
pub fn raw_projection(t: &Tiling) -> RawProjection {
    let mut raw = RawProjection::default();
    for &d in t.dominoes() {
        let [a, b] = d.cubes();
        if d.is_vertical() {
            raw.jewels.insert(a.cell());
            continue;
        }
        let z = a.z as u8;
        let (from, to) = if floor_of_directed_edge(a.cell()) == z {
            (a.cell(), b.cell())
        } else {
            (b.cell(), a.cell())
        };
        raw.edges.push((from, to, z));
    }
    raw
}

pub fn project_sock(t: &Tiling) -> Sock {
    let raw = raw_projection(t);
    let mut jewels = raw.jewels;
    let mut pairs: BTreeMap<(Cell, Cell), u8> = BTreeMap::new();
    for &(a, b, _) in &raw.edges {
        *pairs.entry((a.min(b), a.max(b))).or_default() += 1;
    }
    let mut next: BTreeMap<Cell, (Cell, u8)> = BTreeMap::new();
    for &(a, b, z) in &raw.edges {
        if pairs[&(a.min(b), a.max(b))] == 2 {
            jewels.insert(a);
            jewels.insert(b);
        } else {
            next.insert(a, (b, z));
        }
    }
    let mut cycles = Vec::new();
    let mut visited: HashSet<Cell> = HashSet::new();
    for &start in next.keys() {
        if visited.contains(&start) {
            continue;
        }
        let (mut vertices, mut floors) = (Vec::new(), Vec::new());
        let mut v = start;
        loop {
            visited.insert(v);
            let (w, z) = next[&v];
            vertices.push(v);
            floors.push(z);
            v = w;
            if v == start {
                break;
            }
        }
        cycles.push(Cycle::new(vertices, floors).expect("projection of a tiling is a sock"));
    }
    Sock::new(jewels, cycles).expect("projection of a tiling is a sock")
}
