//! Domino tilings of duplex regions `D × [0, 2]`.
//!
//! The crate enumerates tilings, finds flips and flip-connected components,
//! projects tilings to their systems of cycles ("socks"), and computes the
//! twist of a tiling three ways: from pairwise domino effects along each
//! axis, and as `P_t'(1)` for the winding polynomial of the sock. The
//! per-cycle identities tying these together (metric and topological
//! weights, vertex angles, interior and boundary charges) are exposed as
//! checks in [`charges`] and [`verify`].

pub mod charges;
pub mod io;
pub mod lattice;
pub mod region;
pub mod render;
pub mod sock;
pub mod tiling;
pub mod twist;
pub mod verify;

pub use charges::{
    angle, charge_boundary, charge_interior, metric_weight, p_derivative_at_one, p_polynomial,
    topological_weight, verify_cycle_lemmas, winding_number, HalfPoint, LaurentPoly,
};
pub use lattice::{cube_color, det3, vertex_color, Axis, Cell, Cube, Direction, Quarter};
pub use region::{build_duplex, parse_base, BaseShape, DuplexRegion, RegionError};
pub use sock::{base_graph, project_sock, Cycle, Sock};
pub use tiling::{
    apply_flip, count_tilings, enumerate_tilings, enumerate_tilings_parallel, find_flips,
    flip_components, sign_vector, validate_tiling, Domino, Flip, Tiling, TilingError,
};
pub use twist::{in_shade, pretwist, tau, twist, TwistError};
