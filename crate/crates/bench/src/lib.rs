//! Regions shared by the benchmarks.

use duplex_twist::{build_duplex, DuplexRegion, Tiling};

pub fn rectangle(width: i32, height: i32) -> DuplexRegion {
    build_duplex(duplex_twist::BaseShape::rectangle(width, height).expect("positive size"))
}

pub fn all_tilings(region: &DuplexRegion) -> Vec<Tiling> {
    duplex_twist::enumerate_tilings(region).collect()
}
