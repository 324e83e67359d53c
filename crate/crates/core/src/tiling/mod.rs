//! Dominoes, tilings of duplex regions, and flips.

mod enumerate;
mod flip_graph;

pub use enumerate::{count_tilings, enumerate_tilings, enumerate_tilings_parallel, TilingIter};
pub use flip_graph::{flip_components, flip_graph, FlipGraph};

use std::collections::{HashMap, HashSet};
use std::fmt;

use thiserror::Error;

use crate::lattice::{Axis, Cube, Direction};
use crate::region::DuplexRegion;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TilingError {
    #[error("MalformedDomino: cubes {0:?} and {1:?} are not face-adjacent")]
    MalformedDomino(Cube, Cube),
    #[error("CubeOutsideRegion: {0:?}")]
    CubeOutsideRegion(Cube),
    #[error("OverlappingDominoes: cube {0:?} is covered twice")]
    OverlappingDominoes(Cube),
    #[error("UncoveredCube: {0:?}")]
    UncoveredCube(Cube),
    #[error("FlipNotApplicable: the tiling does not contain the flip's dominoes")]
    FlipNotApplicable,
}

/// Two face-adjacent unit cubes, stored with the smaller cube first.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Domino {
    lo: Cube,
    hi: Cube,
}

impl Domino {
    pub fn new(a: Cube, b: Cube) -> Result<Domino, TilingError> {
        let diff = [b.x - a.x, b.y - a.y, b.z - a.z];
        if diff.iter().map(|d| d.abs()).sum::<i32>() != 1 {
            return Err(TilingError::MalformedDomino(a, b));
        }
        Ok(if a < b {
            Domino { lo: a, hi: b }
        } else {
            Domino { lo: b, hi: a }
        })
    }

    /// The domino covering `c` and `c + d`.
    pub fn from_step(c: Cube, d: Direction) -> Domino {
        let other = c.step(d);
        if d.is_positive() {
            Domino { lo: c, hi: other }
        } else {
            Domino { lo: other, hi: c }
        }
    }

    pub fn cubes(self) -> [Cube; 2] {
        [self.lo, self.hi]
    }

    pub fn contains(self, c: Cube) -> bool {
        self.lo == c || self.hi == c
    }

    pub fn axis(self) -> Axis {
        if self.lo.x != self.hi.x {
            Axis::I
        } else if self.lo.y != self.hi.y {
            Axis::J
        } else {
            Axis::K
        }
    }

    pub fn is_vertical(self) -> bool {
        self.axis() == Axis::K
    }

    pub fn is_parallel(self, other: Domino) -> bool {
        self.axis() == other.axis()
    }

    /// Center of the black cube minus center of the white cube.
    pub fn sign_vector(self) -> Direction {
        sign_vector(self)
    }

    pub fn translate(self, d: Direction) -> Domino {
        Domino {
            lo: self.lo.step(d),
            hi: self.hi.step(d),
        }
    }
}

impl fmt::Display for Domino {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = (self.lo, self.hi);
        write!(f, "[({},{},{}),({},{},{})]", a.x, a.y, a.z, b.x, b.y, b.z)
    }
}

/// Center of the black cube of `d` minus center of its white cube.
pub fn sign_vector(d: Domino) -> Direction {
    let (black, white) = if d.lo.color() > 0 {
        (d.lo, d.hi)
    } else {
        (d.hi, d.lo)
    };
    Direction::from_vector([black.x - white.x, black.y - white.y, black.z - white.z])
        .expect("domino cubes are face-adjacent")
}

/// A set of dominoes kept in sorted order; equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tiling {
    dominoes: Vec<Domino>,
}

impl Tiling {
    pub fn new<I: IntoIterator<Item = Domino>>(dominoes: I) -> Tiling {
        let mut dominoes: Vec<Domino> = dominoes.into_iter().collect();
        dominoes.sort_unstable();
        Tiling { dominoes }
    }

    pub fn dominoes(&self) -> &[Domino] {
        &self.dominoes
    }

    pub fn len(&self) -> usize {
        self.dominoes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dominoes.is_empty()
    }

    pub fn contains(&self, d: Domino) -> bool {
        self.dominoes.binary_search(&d).is_ok()
    }

    /// Every base cell covered by one vertical domino.
    pub fn all_vertical(region: &DuplexRegion) -> Tiling {
        Tiling::new(
            region
                .base()
                .cells()
                .iter()
                .map(|c| Domino::from_step(c.cube(0), Direction::PosK)),
        )
    }

    /// Map from each covered cube to the domino covering it.
    pub fn cover_map(&self) -> HashMap<Cube, Domino> {
        self.dominoes
            .iter()
            .flat_map(|&d| d.cubes().map(|c| (c, d)))
            .collect()
    }
}

impl FromIterator<Domino> for Tiling {
    fn from_iter<I: IntoIterator<Item = Domino>>(iter: I) -> Tiling {
        Tiling::new(iter)
    }
}

/// `Ok` iff `t` partitions the cubes of `r`.
pub fn validate_tiling(r: &DuplexRegion, t: &Tiling) -> Result<(), TilingError> {
    let mut covered = HashSet::with_capacity(r.cube_count());
    for d in t.dominoes() {
        for c in d.cubes() {
            if !r.contains(c) {
                return Err(TilingError::CubeOutsideRegion(c));
            }
            if !covered.insert(c) {
                return Err(TilingError::OverlappingDominoes(c));
            }
        }
    }
    match r.cubes().iter().find(|c| !covered.contains(c)) {
        Some(&c) => Err(TilingError::UncoveredCube(c)),
        None => Ok(()),
    }
}

/// Two parallel dominoes filling a 2×2×1 box, replaced by the perpendicular pair.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flip {
    pub removed: [Domino; 2],
    pub placed: [Domino; 2],
}

impl Flip {
    /// The flip with `a` and `a` translated by `offset`; `offset` must be
    /// a positive direction perpendicular to `a`.
    fn in_box(a: Domino, offset: Direction) -> Flip {
        debug_assert!(offset.is_positive() && offset.axis() != a.axis());
        let b = a.translate(offset);
        let [a0, a1] = a.cubes();
        let mut removed = [a, b];
        let mut placed = [Domino::from_step(a0, offset), Domino::from_step(a1, offset)];
        removed.sort_unstable();
        placed.sort_unstable();
        Flip { removed, placed }
    }

    pub fn reverse(self) -> Flip {
        Flip {
            removed: self.placed,
            placed: self.removed,
        }
    }
}

/// All flips available in `t`, sorted.
pub fn find_flips(t: &Tiling) -> Vec<Flip> {
    let mut flips = Vec::new();
    for &d in t.dominoes() {
        for offset in Direction::POSITIVE {
            if offset.axis() == d.axis() {
                continue;
            }
            if t.contains(d.translate(offset)) {
                flips.push(Flip::in_box(d, offset));
            }
        }
    }
    flips.sort_unstable();
    flips
}

pub fn apply_flip(t: &Tiling, f: &Flip) -> Result<Tiling, TilingError> {
    if !f.removed.iter().all(|&d| t.contains(d)) {
        return Err(TilingError::FlipNotApplicable);
    }
    Ok(t.dominoes()
        .iter()
        .copied()
        .filter(|d| !f.removed.contains(d))
        .chain(f.placed)
        .collect())
}
