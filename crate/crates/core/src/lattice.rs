//! Integer lattice primitives: unit cubes, planar cells, the six signed axis
//! directions, cube and vertex colorings, and an exact quarter-integer scalar.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// One of the six signed unit vectors `±i, ±j, ±k`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    PosI,
    NegI,
    PosJ,
    NegJ,
    PosK,
    NegK,
}

/// Coordinate axis of a [`Direction`].
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    I,
    J,
    K,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::I, Axis::J, Axis::K];

    pub fn positive(self) -> Direction {
        match self {
            Axis::I => Direction::PosI,
            Axis::J => Direction::PosJ,
            Axis::K => Direction::PosK,
        }
    }
}

impl Direction {
    pub const ALL: [Direction; 6] = [
        Direction::PosI,
        Direction::NegI,
        Direction::PosJ,
        Direction::NegJ,
        Direction::PosK,
        Direction::NegK,
    ];

    pub const POSITIVE: [Direction; 3] = [Direction::PosI, Direction::PosJ, Direction::PosK];

    pub fn vector(self) -> [i32; 3] {
        match self {
            Direction::PosI => [1, 0, 0],
            Direction::NegI => [-1, 0, 0],
            Direction::PosJ => [0, 1, 0],
            Direction::NegJ => [0, -1, 0],
            Direction::PosK => [0, 0, 1],
            Direction::NegK => [0, 0, -1],
        }
    }

    /// Inverse of [`Direction::vector`]; `None` unless `v` is a signed unit axis vector.
    pub fn from_vector(v: [i32; 3]) -> Option<Direction> {
        Direction::ALL.into_iter().find(|d| d.vector() == v)
    }

    pub fn axis(self) -> Axis {
        match self {
            Direction::PosI | Direction::NegI => Axis::I,
            Direction::PosJ | Direction::NegJ => Axis::J,
            Direction::PosK | Direction::NegK => Axis::K,
        }
    }

    pub fn is_positive(self) -> bool {
        matches!(self, Direction::PosI | Direction::PosJ | Direction::PosK)
    }

    pub fn is_horizontal(self) -> bool {
        self.axis() != Axis::K
    }
}

impl Neg for Direction {
    type Output = Direction;

    fn neg(self) -> Direction {
        match self {
            Direction::PosI => Direction::NegI,
            Direction::NegI => Direction::PosI,
            Direction::PosJ => Direction::NegJ,
            Direction::NegJ => Direction::PosJ,
            Direction::PosK => Direction::NegK,
            Direction::NegK => Direction::PosK,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Direction::PosI => "+i",
            Direction::NegI => "-i",
            Direction::PosJ => "+j",
            Direction::NegJ => "-j",
            Direction::PosK => "+k",
            Direction::NegK => "-k",
        };
        f.write_str(s)
    }
}

/// Determinant of the 3×3 matrix whose rows are `a`, `b`, `c`.
pub fn det3(a: Direction, b: Direction, c: Direction) -> i32 {
    let [a0, a1, a2] = a.vector();
    let [b0, b1, b2] = b.vector();
    let [c0, c1, c2] = c.vector();
    a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) + a2 * (b0 * c1 - b1 * c0)
}

/// A unit cube identified by its minimal corner; its center is `(x+½, y+½, z+½)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cube {
    pub x: i32,
    pub y: i32,
    pub z: i32,
}

impl Cube {
    pub const fn new(x: i32, y: i32, z: i32) -> Cube {
        Cube { x, y, z }
    }

    pub fn step(self, d: Direction) -> Cube {
        self.offset(d, 1)
    }

    pub fn offset(self, d: Direction, m: i32) -> Cube {
        let [dx, dy, dz] = d.vector();
        Cube::new(self.x + m * dx, self.y + m * dy, self.z + m * dz)
    }

    /// Planar cell directly below or above this cube.
    pub fn cell(self) -> Cell {
        Cell::new(self.x, self.y)
    }

    /// `+1` (black) iff `x + y + z` is even, `-1` (white) otherwise.
    pub fn color(self) -> i32 {
        cube_color(self)
    }
}

/// `+1` (black) iff `x + y + z` is even, `-1` (white) otherwise.
pub fn cube_color(c: Cube) -> i32 {
    if (c.x + c.y + c.z).rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// A unit square of the base, also a vertex of the projection graph.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub x: i32,
    pub y: i32,
}

impl Cell {
    pub const fn new(x: i32, y: i32) -> Cell {
        Cell { x, y }
    }

    pub fn cube(self, z: i32) -> Cube {
        Cube::new(self.x, self.y, z)
    }

    /// The four edge-adjacent cells, in the order `+x, -x, +y, -y`.
    pub fn neighbors(self) -> [Cell; 4] {
        [
            Cell::new(self.x + 1, self.y),
            Cell::new(self.x - 1, self.y),
            Cell::new(self.x, self.y + 1),
            Cell::new(self.x, self.y - 1),
        ]
    }

    pub fn is_adjacent(self, other: Cell) -> bool {
        (self.x - other.x).abs() + (self.y - other.y).abs() == 1
    }

    pub fn color(self) -> i32 {
        vertex_color(self)
    }
}

/// `+1` for black vertices (`x + y` odd), `-1` for white ones (`x + y` even).
pub fn vertex_color(v: Cell) -> i32 {
    if (v.x + v.y).rem_euclid(2) == 1 {
        1
    } else {
        -1
    }
}

/// An exact multiple of one quarter, stored as its numerator.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quarter(i64);

impl Quarter {
    pub const ZERO: Quarter = Quarter(0);
    pub const QUARTER: Quarter = Quarter(1);
    pub const HALF: Quarter = Quarter(2);
    pub const ONE: Quarter = Quarter(4);

    /// The value `numerator / 4`.
    pub const fn from_quarters(numerator: i64) -> Quarter {
        Quarter(numerator)
    }

    pub const fn from_int(n: i64) -> Quarter {
        Quarter(4 * n)
    }

    /// `num / den` when that is a multiple of ¼.
    pub fn from_ratio(num: i64, den: i64) -> Option<Quarter> {
        if den == 0 || (4 * num) % den != 0 {
            return None;
        }
        Some(Quarter(4 * num / den))
    }

    pub const fn quarters(self) -> i64 {
        self.0
    }

    pub const fn is_integral(self) -> bool {
        self.0 % 4 == 0
    }

    pub fn to_integer(self) -> Option<i64> {
        self.is_integral().then_some(self.0 / 4)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl From<i64> for Quarter {
    fn from(n: i64) -> Quarter {
        Quarter::from_int(n)
    }
}

impl Add for Quarter {
    type Output = Quarter;
    fn add(self, rhs: Quarter) -> Quarter {
        Quarter(self.0 + rhs.0)
    }
}

impl AddAssign for Quarter {
    fn add_assign(&mut self, rhs: Quarter) {
        self.0 += rhs.0;
    }
}

impl Sub for Quarter {
    type Output = Quarter;
    fn sub(self, rhs: Quarter) -> Quarter {
        Quarter(self.0 - rhs.0)
    }
}

impl SubAssign for Quarter {
    fn sub_assign(&mut self, rhs: Quarter) {
        self.0 -= rhs.0;
    }
}

impl Neg for Quarter {
    type Output = Quarter;
    fn neg(self) -> Quarter {
        Quarter(-self.0)
    }
}

impl Mul<i64> for Quarter {
    type Output = Quarter;
    fn mul(self, rhs: i64) -> Quarter {
        Quarter(self.0 * rhs)
    }
}

impl std::iter::Sum for Quarter {
    fn sum<I: Iterator<Item = Quarter>>(iter: I) -> Quarter {
        iter.fold(Quarter::ZERO, Add::add)
    }
}

impl fmt::Display for Quarter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.0;
        if n % 4 == 0 {
            write!(f, "{}", n / 4)
        } else if n % 2 == 0 {
            write!(f, "{}/2", n / 2)
        } else {
            write!(f, "{}/4", n)
        }
    }
}
