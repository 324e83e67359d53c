//! Property suites run over every tiling of a region, and the report they
//! produce.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::charges::{
    charge_boundary, charge_interior, p_derivative_at_one, p_polynomial, verify_cycle_lemmas,
    winding_number, CycleLemma, LaurentPoly,
};
use crate::lattice::{vertex_color, Cell, Direction, Quarter};
use crate::region::DuplexRegion;
use crate::sock::{project_sock, Cycle, Sock};
use crate::tiling::{Domino, Tiling};
use crate::twist::{pretwist, tau};

/// A family of identities checked on each tiling.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// Jewel crossings: `ccol(v)·wind(γ,v) = 2Σ_{d∈γ} τ^u(d, d_v) = 2Σ_{d∈γ} τ^u(d_v, d)`
    /// for `u ∈ {+i, +j}`, plus `T^u = P'(1)` for the four horizontal `u`.
    JewelCrossing,
    /// `charge_int(γ) = Σ_v topw(v)·ccol(v)` for every cycle.
    InteriorCharge,
    /// `Σ_v metricw(v)·ccol(v) = 0` for every cycle.
    MetricBalance,
    /// `topw − metricw` is the angle on the cycle and zero elsewhere.
    WeightDifference,
    /// `charge_∂(γ) = charge_int(γ)` for every cycle, and `T^k = Σ charge_∂`.
    ChargeEquality,
    /// `P'(1) = T^i = T^j = T^k`, all integral.
    TwistIdentity,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::JewelCrossing,
        Suite::InteriorCharge,
        Suite::MetricBalance,
        Suite::WeightDifference,
        Suite::ChargeEquality,
        Suite::TwistIdentity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::JewelCrossing => "jewel-crossing",
            Suite::InteriorCharge => "interior-charge",
            Suite::MetricBalance => "metric-balance",
            Suite::WeightDifference => "weight-difference",
            Suite::ChargeEquality => "charge-equality",
            Suite::TwistIdentity => "twist-identity",
        }
    }

    /// Which suite owns a failed per-cycle identity.
    fn of_cycle_lemma(lemma: CycleLemma) -> Suite {
        match lemma {
            CycleLemma::MetricBalance => Suite::MetricBalance,
            CycleLemma::WeightDifference | CycleLemma::TopologicalClosedForm => {
                Suite::WeightDifference
            }
            CycleLemma::ChargeEquality | CycleLemma::TotalTurning => Suite::ChargeEquality,
            CycleLemma::InteriorCharge | CycleLemma::ColorCancellation => Suite::InteriorCharge,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The vertical domino standing on `v`.
pub fn jewel_domino(v: Cell) -> Domino {
    Domino::from_step(v.cube(0), Direction::PosK)
}

/// `(Σ_{d∈γ} τ^u(d, d_v), Σ_{d∈γ} τ^u(d_v, d))` for the vertical domino `d_v` on `v`.
pub fn jewel_effects(cycle: &Cycle, v: Cell, u: Direction) -> (Quarter, Quarter) {
    let dv = jewel_domino(v);
    cycle
        .dominoes()
        .into_iter()
        .fold((Quarter::ZERO, Quarter::ZERO), |(into, from), d| {
            (into + tau(d, dv, u), from + tau(dv, d, u))
        })
}

/// All twist-related quantities of one tiling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistEvidence {
    /// `T^u` for `+i, -i, +j, -j, +k, -k`.
    pub pretwists: [Quarter; 6],
    pub polynomial: LaurentPoly,
    pub p_prime: i64,
}

impl TwistEvidence {
    pub fn of(t: &Tiling, sock: &Sock) -> TwistEvidence {
        let polynomial = p_polynomial(sock);
        TwistEvidence {
            pretwists: Direction::ALL.map(|u| pretwist(t, u)),
            p_prime: p_derivative_at_one(&polynomial),
            polynomial,
        }
    }

    pub fn pretwist(&self, u: Direction) -> Quarter {
        let i = Direction::ALL.iter().position(|&d| d == u).expect("listed");
        self.pretwists[i]
    }

    /// `Tw` when `T^i = T^j = T^k = P'(1)`.
    pub fn twist(&self) -> Option<i64> {
        let p = Quarter::from_int(self.p_prime);
        Direction::POSITIVE
            .iter()
            .all(|&u| self.pretwist(u) == p)
            .then_some(self.p_prime)
    }
}

/// A failed check, with the index of the tiling that reproduces it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub tiling_index: usize,
    pub suite: Suite,
    pub message: String,
}

/// Outcome of checking one tiling.
#[derive(Clone, Debug)]
pub struct TilingCheck {
    pub evidence: TwistEvidence,
    pub failures: Vec<(Suite, String)>,
}

/// Run `suites` on one tiling.
pub fn check_tiling(t: &Tiling, suites: &[Suite]) -> TilingCheck {
    let sock = project_sock(t);
    let evidence = TwistEvidence::of(t, &sock);
    let mut failures = Vec::new();
    let wants = |s: Suite| suites.contains(&s);
    let p_prime = Quarter::from_int(evidence.p_prime);

    if wants(Suite::TwistIdentity) {
        let [ti, tj, tk] = Direction::POSITIVE.map(|u| evidence.pretwist(u));
        if evidence.twist().is_none() {
            failures.push((
                Suite::TwistIdentity,
                format!(
                    "P'(1) = {}, T^i = {ti}, T^j = {tj}, T^k = {tk}",
                    evidence.p_prime
                ),
            ));
        }
    }

    let cycle_suites = [
        Suite::InteriorCharge,
        Suite::MetricBalance,
        Suite::WeightDifference,
        Suite::ChargeEquality,
    ];
    if cycle_suites.iter().any(|&s| wants(s)) {
        for c in sock.cycles() {
            if let Err(e) = verify_cycle_lemmas(c) {
                let suite = Suite::of_cycle_lemma(e.lemma);
                if wants(suite) {
                    failures.push((suite, format!("cycle at {:?}: {e}", c.vertices()[0])));
                }
            }
        }
    }

    if wants(Suite::InteriorCharge) {
        let total: i64 = sock.cycles().iter().map(charge_interior).sum();
        if total != evidence.p_prime {
            failures.push((
                Suite::InteriorCharge,
                format!("Σ charge_int = {total}, P'(1) = {}", evidence.p_prime),
            ));
        }
    }

    if wants(Suite::ChargeEquality) {
        let total: Quarter = sock.cycles().iter().map(charge_boundary).sum();
        let tk = evidence.pretwist(Direction::PosK);
        if total != tk {
            failures.push((
                Suite::ChargeEquality,
                format!("Σ charge_∂ = {total}, T^k = {tk}"),
            ));
        }
    }

    if wants(Suite::JewelCrossing) {
        for u in [
            Direction::PosI,
            Direction::NegI,
            Direction::PosJ,
            Direction::NegJ,
        ] {
            let tu = evidence.pretwist(u);
            if tu != p_prime {
                failures.push((
                    Suite::JewelCrossing,
                    format!("T^{u} = {tu}, P'(1) = {}", evidence.p_prime),
                ));
            }
        }
        for c in sock.cycles() {
            for &v in sock.jewels() {
                let lhs = vertex_color(v) as i64 * winding_number(c, v).expect("jewel off cycle");
                for u in [Direction::PosI, Direction::PosJ] {
                    let (into, from) = jewel_effects(c, v, u);
                    if into * 2 != Quarter::from_int(lhs) || from * 2 != Quarter::from_int(lhs) {
                        failures.push((
                            Suite::JewelCrossing,
                            format!(
                                "jewel ({}, {}), u = {u}: ccol·wind = {lhs}, 2Στ(d,d_v) = {}, 2Στ(d_v,d) = {}",
                                v.x,
                                v.y,
                                into * 2,
                                from * 2
                            ),
                        ));
                    }
                }
            }
        }
    }

    TilingCheck { evidence, failures }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegionSummary {
    pub cells: usize,
    pub cubes: usize,
    pub width: i32,
    pub height: i32,
}

impl RegionSummary {
    pub fn of(r: &DuplexRegion) -> RegionSummary {
        let (width, height) = r.base().dimensions();
        RegionSummary {
            cells: r.base().len(),
            cubes: r.cube_count(),
            width,
            height,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PassFail {
    pub pass: u64,
    pub fail: u64,
}

/// Aggregate over all tilings of a region.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub region: RegionSummary,
    pub tiling_count: u64,
    /// Keyed by `Tw`; a tiling whose pretwists disagree is counted under `P'(1)`
    /// and also listed in `failures`.
    pub twist_histogram: BTreeMap<i64, u64>,
    pub suites: BTreeMap<Suite, PassFail>,
    pub failures: Vec<Failure>,
    pub elapsed_ms: u128,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Check `suites` on every tiling, using up to `jobs` threads. Output order
/// and contents do not depend on `jobs`, except for `elapsed_ms`.
pub fn run_suites(
    region: &DuplexRegion,
    tilings: &[Tiling],
    suites: &[Suite],
    jobs: usize,
) -> RunReport {
    let started = Instant::now();
    let work = || -> Vec<TilingCheck> {
        tilings
            .par_iter()
            .map(|t| check_tiling(t, suites))
            .collect()
    };
    let checks = if jobs <= 1 {
        tilings.iter().map(|t| check_tiling(t, suites)).collect()
    } else {
        match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(work),
            Err(_) => work(),
        }
    };

    let mut twist_histogram = BTreeMap::new();
    let mut counts: BTreeMap<Suite, PassFail> =
        suites.iter().map(|&s| (s, PassFail::default())).collect();
    let mut failures = Vec::new();
    for (index, check) in checks.into_iter().enumerate() {
        let key = check.evidence.twist().unwrap_or(check.evidence.p_prime);
        *twist_histogram.entry(key).or_insert(0) += 1;
        for (suite, counter) in counts.iter_mut() {
            if check.failures.iter().any(|(s, _)| s == suite) {
                counter.fail += 1;
            } else {
                counter.pass += 1;
            }
        }
        failures.extend(check.failures.into_iter().map(|(suite, message)| Failure {
            tiling_index: index,
            suite,
            message,
        }));
    }
    RunReport {
        region: RegionSummary::of(region),
        tiling_count: tilings.len() as u64,
        twist_histogram,
        suites: counts,
        failures,
        elapsed_ms: started.elapsed().as_millis(),
    }
}
