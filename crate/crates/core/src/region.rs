//! Planar bases and the two-story regions built over them.
//!
//! A base is read from an ASCII grid: `#` at column `x` of line `y` is the
//! cell `(x, y)`, `.` is empty. Line order maps directly to `y`; the math
//! elsewhere treats `(x, y)` as a standard right-handed frame, so only
//! renderers need to care that files are read top-down.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::lattice::{Cell, Cube};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RegionError {
    #[error("EmptyBase: the base has no cells")]
    EmptyBase,
    #[error("BadCharacter: unexpected {ch:?} at line {line}, column {column}")]
    BadCharacter {
        ch: char,
        line: usize,
        column: usize,
    },
    #[error("Disconnected: the base cells are not edge-connected")]
    Disconnected,
    #[error("NotSimplyConnected: the base has a hole")]
    NotSimplyConnected,
}

/// A nonempty, edge-connected, simply connected set of cells.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BaseShape {
    cells: BTreeSet<Cell>,
}

impl BaseShape {
    pub fn new<I: IntoIterator<Item = Cell>>(cells: I) -> Result<BaseShape, RegionError> {
        let cells: BTreeSet<Cell> = cells.into_iter().collect();
        if cells.is_empty() {
            return Err(RegionError::EmptyBase);
        }
        if !is_edge_connected(&cells) {
            return Err(RegionError::Disconnected);
        }
        if !complement_is_connected(&cells) {
            return Err(RegionError::NotSimplyConnected);
        }
        Ok(BaseShape { cells })
    }

    /// An `width × height` rectangle with its corner at the origin.
    pub fn rectangle(width: i32, height: i32) -> Result<BaseShape, RegionError> {
        BaseShape::new((0..height).flat_map(|y| (0..width).map(move |x| Cell::new(x, y))))
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.contains(&c)
    }

    /// Inclusive bounding box `(min, max)`.
    pub fn bounds(&self) -> (Cell, Cell) {
        bounds(&self.cells)
    }

    /// Width and height of the bounding box.
    pub fn dimensions(&self) -> (i32, i32) {
        let (lo, hi) = self.bounds();
        (hi.x - lo.x + 1, hi.y - lo.y + 1)
    }

    /// ASCII form accepted by [`parse_base`]; one line per row from `y = 0`.
    ///
    /// Cells with negative coordinates cannot be represented and are rejected
    /// by `debug_assert`; parsed bases never have them.
    pub fn to_ascii_lines(&self) -> Vec<String> {
        let (lo, hi) = self.bounds();
        debug_assert!(lo.x >= 0 && lo.y >= 0);
        (0..=hi.y)
            .map(|y| {
                let last = (0..=hi.x).rev().find(|&x| self.contains(Cell::new(x, y)));
                match last {
                    None => String::new(),
                    Some(last) => (0..=last)
                        .map(|x| {
                            if self.contains(Cell::new(x, y)) {
                                '#'
                            } else {
                                '.'
                            }
                        })
                        .collect(),
                }
            })
            .collect()
    }

    pub fn to_ascii(&self) -> String {
        let mut s = self.to_ascii_lines().join("\n");
        s.push('\n');
        s
    }
}

impl fmt::Display for BaseShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_ascii())
    }
}

fn bounds(cells: &BTreeSet<Cell>) -> (Cell, Cell) {
    let mut lo = Cell::new(i32::MAX, i32::MAX);
    let mut hi = Cell::new(i32::MIN, i32::MIN);
    for c in cells {
        lo.x = lo.x.min(c.x);
        lo.y = lo.y.min(c.y);
        hi.x = hi.x.max(c.x);
        hi.y = hi.y.max(c.y);
    }
    (lo, hi)
}

fn is_edge_connected(cells: &BTreeSet<Cell>) -> bool {
    let Some(&start) = cells.iter().next() else {
        return true;
    };
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(c) = queue.pop_front() {
        for n in c.neighbors() {
            if cells.contains(&n) && seen.insert(n) {
                queue.push_back(n);
            }
        }
    }
    seen.len() == cells.len()
}

/// Flood fill of the complement inside a margin-1 bounding box, starting from
/// its corner; every complement cell in the box must be reached.
fn complement_is_connected(cells: &BTreeSet<Cell>) -> bool {
    let (lo, hi) = bounds(cells);
    let (lo, hi) = (Cell::new(lo.x - 1, lo.y - 1), Cell::new(hi.x + 1, hi.y + 1));
    let inside = |c: Cell| c.x >= lo.x && c.x <= hi.x && c.y >= lo.y && c.y <= hi.y;
    let total = ((hi.x - lo.x + 1) * (hi.y - lo.y + 1)) as usize - cells.len();
    let mut seen = HashSet::from([lo]);
    let mut queue = VecDeque::from([lo]);
    while let Some(c) = queue.pop_front() {
        for n in c.neighbors() {
            if inside(n) && !cells.contains(&n) && seen.insert(n) {
                queue.push_back(n);
            }
        }
    }
    seen.len() == total
}

/// Parse the `#`/`.` grid format.
pub fn parse_base(text: &str) -> Result<BaseShape, RegionError> {
    let mut cells = Vec::new();
    for (y, line) in text.lines().enumerate() {
        for (x, ch) in line.chars().enumerate() {
            match ch {
                '#' => cells.push(Cell::new(x as i32, y as i32)),
                '.' => {}
                '\r' if x + 1 == line.chars().count() => {}
                _ => {
                    return Err(RegionError::BadCharacter {
                        ch,
                        line: y + 1,
                        column: x + 1,
                    })
                }
            }
        }
    }
    BaseShape::new(cells)
}

/// The base crossed with two floors, `z ∈ {0, 1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DuplexRegion {
    base: BaseShape,
    cubes: BTreeSet<Cube>,
}

pub fn build_duplex(base: BaseShape) -> DuplexRegion {
    DuplexRegion::new(base)
}

impl DuplexRegion {
    pub const FLOORS: i32 = 2;

    pub fn new(base: BaseShape) -> DuplexRegion {
        let cubes = base
            .cells()
            .iter()
            .flat_map(|c| (0..Self::FLOORS).map(move |z| c.cube(z)))
            .collect();
        DuplexRegion { base, cubes }
    }

    pub fn base(&self) -> &BaseShape {
        &self.base
    }

    /// Cubes in lexicographic `(x, y, z)` order.
    pub fn cubes(&self) -> &BTreeSet<Cube> {
        &self.cubes
    }

    pub fn contains(&self, c: Cube) -> bool {
        self.cubes.contains(&c)
    }

    pub fn cube_count(&self) -> usize {
        self.cubes.len()
    }
}
