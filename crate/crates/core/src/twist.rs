//! Effects along a direction, pretwists and the twist, computed directly from
//! the dominoes of a tiling.

use thiserror::Error;

use crate::lattice::{det3, Direction, Quarter};
use crate::tiling::{Domino, Tiling};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TwistError {
    #[error("PretwistMismatch: T^i = {i}, T^j = {j}, T^k = {k}")]
    PretwistMismatch { i: Quarter, j: Quarter, k: Quarter },
    #[error("NonIntegralTwist: common pretwist {0} is not an integer")]
    NonIntegralTwist(Quarter),
}

/// Whether some cube of `d1` lies strictly beyond a cube of `d0` along `u`,
/// i.e. `d1` meets the open shade of `d0` in direction `u`.
pub fn in_shade(d0: Domino, d1: Domino, u: Direction) -> bool {
    let [ux, uy, uz] = u.vector();
    d0.cubes().iter().any(|c0| {
        d1.cubes().iter().any(|c1| {
            let delta = [c1.x - c0.x, c1.y - c0.y, c1.z - c0.z];
            // delta = m * u with m >= 1
            let m = delta[0] * ux + delta[1] * uy + delta[2] * uz;
            m >= 1 && delta == [m * ux, m * uy, m * uz]
        })
    })
}

/// Effect of `d0` on `d1` along `u`.
pub fn tau(d0: Domino, d1: Domino, u: Direction) -> Quarter {
    if in_shade(d0, d1, u) {
        Quarter::from_quarters(det3(d1.sign_vector(), d0.sign_vector(), u) as i64)
    } else {
        Quarter::ZERO
    }
}

/// Sum of `tau` over all ordered pairs of distinct dominoes of `t`.
pub fn pretwist(t: &Tiling, u: Direction) -> Quarter {
    let ds = t.dominoes();
    let mut total = 0i64;
    for (a, &d0) in ds.iter().enumerate() {
        let v0 = d0.sign_vector();
        for (b, &d1) in ds.iter().enumerate() {
            if a == b {
                continue;
            }
            let det = det3(d1.sign_vector(), v0, u);
            // skip the shade test whenever the determinant already vanishes
            if det != 0 && in_shade(d0, d1, u) {
                total += det as i64;
            }
        }
    }
    Quarter::from_quarters(total)
}

/// The three pretwists along `+i`, `+j`, `+k`.
pub fn pretwists(t: &Tiling) -> [Quarter; 3] {
    Direction::POSITIVE.map(|u| pretwist(t, u))
}

/// The common integer value of the three positive-axis pretwists.
pub fn twist(t: &Tiling) -> Result<i64, TwistError> {
    let [i, j, k] = pretwists(t);
    if i != j || j != k {
        return Err(TwistError::PretwistMismatch { i, j, k });
    }
    i.to_integer().ok_or(TwistError::NonIntegralTwist(i))
}
