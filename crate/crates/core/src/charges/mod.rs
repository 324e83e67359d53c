//! Winding numbers, the polynomial `P_t(q)`, vertex angles, metric and
//! topological weights, and interior/boundary charges of sock cycles.
//!
//! All fractional quantities are exact [`Quarter`]s.

mod poly;
mod winding;

pub use poly::{p_derivative_at_one, LaurentPoly};
pub use winding::{winding_at, winding_number, HalfPoint, PlanePoint};

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::lattice::{vertex_color, Cell, Quarter};
use crate::sock::{Cycle, Sock};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChargeError {
    #[error("PointOnCycle: {0:?} lies on the cycle")]
    PointOnCycle(Cell),
    #[error("VertexNotOnCycle: {0:?}")]
    VertexNotOnCycle(Cell),
}

/// Turning of `cycle` at `v`: `1/4` for a left turn, `-1/4` for a right turn,
/// `0` when it goes straight.
pub fn angle(cycle: &Cycle, v: Cell) -> Result<Quarter, ChargeError> {
    let i = cycle.position(v).ok_or(ChargeError::VertexNotOnCycle(v))?;
    let vs = cycle.vertices();
    let n = vs.len();
    let (prev, next) = (vs[(i + n - 1) % n], vs[(i + 1) % n]);
    let incoming = (v.x - prev.x, v.y - prev.y);
    let outgoing = (next.x - v.x, next.y - v.y);
    let cross = incoming.0 * outgoing.1 - incoming.1 * outgoing.0;
    Ok(Quarter::from_quarters(cross as i64))
}

/// Sum of the angles over all vertices of the cycle.
pub fn total_turning(cycle: &Cycle) -> Quarter {
    cycle
        .vertices()
        .iter()
        .map(|&v| angle(cycle, v).expect("vertex of the cycle"))
        .sum()
}

/// `+1` for counterclockwise cycles, `-1` for clockwise ones.
pub fn orientation(cycle: &Cycle) -> i64 {
    total_turning(cycle).quarters().signum()
}

/// A quarter of the sum of the winding numbers at the four points `v + (±½, ±½)`.
pub fn metric_weight(cycle: &Cycle, v: Cell) -> Quarter {
    Quarter::from_quarters(
        HalfPoint::around(v)
            .iter()
            .map(|&p| winding_at(cycle, p))
            .sum(),
    )
}

/// Average of the distinct winding numbers at the four points `v + (±½, ±½)`.
pub fn topological_weight(cycle: &Cycle, v: Cell) -> Quarter {
    let values: BTreeSet<i64> = HalfPoint::around(v)
        .iter()
        .map(|&p| winding_at(cycle, p))
        .collect();
    // a simple cycle passes a vertex at most once, so at most two values occur
    Quarter::from_ratio(values.iter().sum(), values.len() as i64)
        .expect("average of at most two consecutive winding numbers")
}

/// `wind(γ, v)` off the cycle, `±½` on it according to its orientation.
pub fn topological_weight_closed_form(cycle: &Cycle, v: Cell) -> Quarter {
    if cycle.contains(v) {
        Quarter::HALF * orientation(cycle)
    } else {
        Quarter::from_int(winding::winding_off_cycle(cycle, v))
    }
}

/// Vertices of the cycle's bounding box grown by `margin`.
fn box_vertices(cycle: &Cycle, margin: i32) -> impl Iterator<Item = Cell> {
    let (lo, hi) = cycle.bounds();
    (lo.y - margin..=hi.y + margin)
        .flat_map(move |y| (lo.x - margin..=hi.x + margin).map(move |x| Cell::new(x, y)))
}

/// Color-weighted winding over all lattice vertices off the cycle.
pub fn charge_interior(cycle: &Cycle) -> i64 {
    box_vertices(cycle, 0)
        .filter(|&v| !cycle.contains(v))
        .map(|v| vertex_color(v) as i64 * winding::winding_off_cycle(cycle, v))
        .sum()
}

/// Color-weighted angle over the vertices of the cycle.
pub fn charge_boundary(cycle: &Cycle) -> Quarter {
    cycle
        .vertices()
        .iter()
        .map(|&v| angle(cycle, v).expect("vertex of the cycle") * vertex_color(v) as i64)
        .sum()
}

/// `Σ_v ccol(v) q^{e(v)}` over the vertices of the sock, where `e(v)` sums
/// the winding numbers around `v` of the cycles not passing through it.
pub fn p_polynomial(sock: &Sock) -> LaurentPoly {
    let vertices = sock
        .jewels()
        .iter()
        .chain(sock.cycles().iter().flat_map(|c| c.vertices()));
    let mut p = LaurentPoly::zero();
    for &v in vertices {
        let exponent: i64 = sock
            .cycles()
            .iter()
            .filter(|c| !c.contains(v))
            .map(|c| winding::winding_off_cycle(c, v))
            .sum();
        p.add_term(vertex_color(v) as i64, exponent);
    }
    p
}

/// The per-cycle identities relating weights, angles and charges.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CycleLemma {
    /// `Σ_v metricw(v)·ccol(v) = 0`.
    MetricBalance,
    /// `topw(v) − metricw(v)` is the angle on the cycle and zero off it.
    WeightDifference,
    /// The set-average and closed-form topological weights agree.
    TopologicalClosedForm,
    /// `charge_∂ = charge_int`.
    ChargeEquality,
    /// `charge_int = Σ_v topw(v)·ccol(v)`.
    InteriorCharge,
    /// Total turning is `±1`.
    TotalTurning,
    /// `Σ_{v∈γ} ccol(v) = 0`.
    ColorCancellation,
}

impl fmt::Display for CycleLemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CycleLemma::MetricBalance => "metric-balance",
            CycleLemma::WeightDifference => "weight-difference",
            CycleLemma::TopologicalClosedForm => "topological-closed-form",
            CycleLemma::ChargeEquality => "charge-equality",
            CycleLemma::InteriorCharge => "interior-charge",
            CycleLemma::TotalTurning => "total-turning",
            CycleLemma::ColorCancellation => "color-cancellation",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("LemmaViolation: {lemma} fails{}: {detail}", vertex.map(|v| format!(" at ({}, {})", v.x, v.y)).unwrap_or_default())]
pub struct LemmaViolation {
    pub lemma: CycleLemma,
    pub vertex: Option<Cell>,
    pub detail: String,
}

/// Quantities computed while checking one cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleLemmaReport {
    pub charge_interior: i64,
    pub charge_boundary: Quarter,
    pub total_turning: Quarter,
    pub metric_sum: Quarter,
    pub topological_sum: Quarter,
}

/// Check every per-cycle identity with exact arithmetic.
pub fn verify_cycle_lemmas(cycle: &Cycle) -> Result<CycleLemmaReport, LemmaViolation> {
    let fail = |lemma, vertex, detail: String| {
        Err(LemmaViolation {
            lemma,
            vertex,
            detail,
        })
    };

    let color_sum: i64 = cycle
        .vertices()
        .iter()
        .map(|&v| vertex_color(v) as i64)
        .sum();
    if color_sum != 0 {
        return fail(
            CycleLemma::ColorCancellation,
            None,
            format!("color sum {color_sum}"),
        );
    }

    let total_turning = total_turning(cycle);
    if total_turning.quarters().abs() != 4 {
        return fail(
            CycleLemma::TotalTurning,
            None,
            format!("total turning {total_turning}"),
        );
    }

    let mut metric_sum = Quarter::ZERO;
    let mut topological_sum = Quarter::ZERO;
    // windings vanish outside the bounding box, so a one-cell margin covers
    // every vertex with a nonzero weight
    for v in box_vertices(cycle, 1) {
        let color = vertex_color(v) as i64;
        let metric = metric_weight(cycle, v);
        let topological = topological_weight(cycle, v);
        let closed = topological_weight_closed_form(cycle, v);
        if topological != closed {
            return fail(
                CycleLemma::TopologicalClosedForm,
                Some(v),
                format!("set average {topological}, closed form {closed}"),
            );
        }
        let expected = match angle(cycle, v) {
            Ok(a) => a,
            Err(_) => Quarter::ZERO,
        };
        if topological - metric != expected {
            return fail(
                CycleLemma::WeightDifference,
                Some(v),
                format!("topw {topological} - metricw {metric} != {expected}"),
            );
        }
        metric_sum += metric * color;
        topological_sum += topological * color;
    }
    if !metric_sum.is_zero() {
        return fail(
            CycleLemma::MetricBalance,
            None,
            format!("Σ metricw·ccol = {metric_sum}"),
        );
    }

    let charge_interior = charge_interior(cycle);
    if topological_sum != Quarter::from_int(charge_interior) {
        return fail(
            CycleLemma::InteriorCharge,
            None,
            format!("Σ topw·ccol = {topological_sum}, charge_int = {charge_interior}"),
        );
    }
    let charge_boundary = charge_boundary(cycle);
    if charge_boundary != Quarter::from_int(charge_interior) {
        return fail(
            CycleLemma::ChargeEquality,
            None,
            format!("charge_∂ = {charge_boundary}, charge_int = {charge_interior}"),
        );
    }

    Ok(CycleLemmaReport {
        charge_interior,
        charge_boundary,
        total_turning,
        metric_sum,
        topological_sum,
    })
}
