use crate::lattice::Cell;
use crate::sock::Cycle;

use super::ChargeError;

/// The point `(x + ½, y + ½)`, the center of a face of the plane graph.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfPoint {
    pub x: i32,
    pub y: i32,
}

impl HalfPoint {
    pub const fn new(x: i32, y: i32) -> HalfPoint {
        HalfPoint { x, y }
    }

    /// The four points `v + (±½, ±½)`.
    pub fn around(v: Cell) -> [HalfPoint; 4] {
        [
            HalfPoint::new(v.x - 1, v.y - 1),
            HalfPoint::new(v.x, v.y - 1),
            HalfPoint::new(v.x - 1, v.y),
            HalfPoint::new(v.x, v.y),
        ]
    }

    /// The four lattice vertices `p + (±½, ±½)`.
    pub fn corners(self) -> [Cell; 4] {
        [
            Cell::new(self.x, self.y),
            Cell::new(self.x + 1, self.y),
            Cell::new(self.x, self.y + 1),
            Cell::new(self.x + 1, self.y + 1),
        ]
    }
}

/// A point in the plane with coordinates in `½ℤ`.
pub trait PlanePoint: Copy {
    /// Twice the coordinates.
    fn doubled(self) -> (i64, i64);
}

impl PlanePoint for HalfPoint {
    fn doubled(self) -> (i64, i64) {
        (2 * self.x as i64 + 1, 2 * self.y as i64 + 1)
    }
}

impl PlanePoint for Cell {
    fn doubled(self) -> (i64, i64) {
        (2 * self.x as i64, 2 * self.y as i64)
    }
}

/// Signed crossings of the rightward ray from `p`, in doubled coordinates.
fn ray_crossings(cycle: &Cycle, (px, py): (i64, i64)) -> i64 {
    let mut total = 0;
    for (a, b, _) in cycle.edges() {
        if a.x != b.x || 2 * a.x as i64 <= px {
            continue;
        }
        let y0 = 2 * a.y.min(b.y) as i64;
        if y0 <= py && py < y0 + 2 {
            total += if b.y > a.y { 1 } else { -1 };
        }
    }
    total
}

/// Winding number of `cycle` around `p`, by ray casting to the right with
/// half-open edge spans. Fails for a lattice point lying on the cycle.
pub fn winding_number<P: PlanePoint>(cycle: &Cycle, p: P) -> Result<i64, ChargeError> {
    let (px, py) = p.doubled();
    if px % 2 == 0 && py % 2 == 0 {
        let v = Cell::new((px / 2) as i32, (py / 2) as i32);
        if cycle.contains(v) {
            return Err(ChargeError::PointOnCycle(v));
        }
    }
    Ok(ray_crossings(cycle, (px, py)))
}

/// Winding number around a face center; never on the cycle.
pub fn winding_at(cycle: &Cycle, p: HalfPoint) -> i64 {
    ray_crossings(cycle, p.doubled())
}

/// Winding number around a vertex off the cycle.
pub(crate) fn winding_off_cycle(cycle: &Cycle, v: Cell) -> i64 {
    debug_assert!(!cycle.contains(v));
    ray_crossings(cycle, v.doubled())
}
