//! Corpus regions and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use duplex_twist::{build_duplex, parse_base, Cell, Cube, Cycle, DuplexRegion, HalfPoint};

pub const CORPUS: &[(&str, &str)] = &[
    ("1x1", "#"),
    ("2x1", "##"),
    ("2x2", "##\n##"),
    ("2x3", "##\n##\n##"),
    ("3x3", "###\n###\n###"),
    ("2x4", "##\n##\n##\n##"),
    ("L-tromino", "#.\n##"),
    ("3x4", "###\n###\n###\n###"),
    ("4x4", "####\n####\n####\n####"),
    ("irregular-10", "###.\n####\n###."),
];

pub fn region(text: &str) -> DuplexRegion {
    build_duplex(parse_base(text).expect("corpus base is valid"))
}

pub fn corpus() -> Vec<(&'static str, DuplexRegion)> {
    CORPUS
        .iter()
        .map(|&(name, text)| (name, region(text)))
        .collect()
}

/// Number of perfect matchings of the cube adjacency graph, as the permanent
/// of the black-by-white biadjacency matrix (Ryser's formula).
pub fn matching_count_oracle(cubes: &[Cube]) -> i128 {
    let parity = |c: &Cube| (c.x + c.y + c.z).rem_euclid(2);
    let black: Vec<&Cube> = cubes.iter().filter(|c| parity(c) == 0).collect();
    let white: Vec<&Cube> = cubes.iter().filter(|c| parity(c) == 1).collect();
    if black.len() != white.len() {
        return 0;
    }
    let n = black.len();
    if n == 0 {
        return 1;
    }
    let adjacent =
        |a: &Cube, b: &Cube| (a.x - b.x).abs() + (a.y - b.y).abs() + (a.z - b.z).abs() == 1;
    let matrix: Vec<Vec<i128>> = black
        .iter()
        .map(|b| white.iter().map(|w| i128::from(adjacent(b, w))).collect())
        .collect();
    let mut total: i128 = 0;
    for subset in 1u64..(1 << n) {
        let mut product: i128 = 1;
        for row in &matrix {
            let s: i128 = (0..n)
                .filter(|j| subset & (1 << j) != 0)
                .map(|j| row[j])
                .sum();
            product *= s;
            if product == 0 {
                break;
            }
        }
        let sign = if (n - subset.count_ones() as usize).is_multiple_of(2) {
            1
        } else {
            -1
        };
        total += sign * product;
    }
    total
}

/// All fixed polyominoes with exactly `size` cells, translated to the origin.
pub fn fixed_polyominoes(size: usize) -> Vec<BTreeSet<Cell>> {
    let normalize = |cells: &BTreeSet<Cell>| -> BTreeSet<Cell> {
        let mx = cells.iter().map(|c| c.x).min().unwrap();
        let my = cells.iter().map(|c| c.y).min().unwrap();
        cells
            .iter()
            .map(|c| Cell::new(c.x - mx, c.y - my))
            .collect()
    };
    let mut level: HashSet<BTreeSet<Cell>> = HashSet::from([BTreeSet::from([Cell::new(0, 0)])]);
    for _ in 1..size {
        let mut next = HashSet::new();
        for shape in &level {
            for c in shape {
                for n in c.neighbors() {
                    if !shape.contains(&n) {
                        let mut grown = shape.clone();
                        grown.insert(n);
                        next.insert(normalize(&grown));
                    }
                }
            }
        }
        level = next;
    }
    let mut out: Vec<_> = level.into_iter().collect();
    out.sort();
    out
}

pub fn to_ascii(cells: &BTreeSet<Cell>) -> String {
    let w = cells.iter().map(|c| c.x).max().unwrap() + 1;
    let h = cells.iter().map(|c| c.y).max().unwrap() + 1;
    (0..h)
        .map(|y| {
            (0..w)
                .map(|x| {
                    if cells.contains(&Cell::new(x, y)) {
                        '#'
                    } else {
                        '.'
                    }
                })
                .collect::<String>()
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// Point in quarter-unit coordinates strictly off every lattice line.
#[derive(Copy, Clone, Debug)]
pub struct QuarterPoint(pub i64, pub i64);

impl QuarterPoint {
    pub fn half(p: HalfPoint) -> QuarterPoint {
        QuarterPoint(4 * p.x as i64 + 2, 4 * p.y as i64 + 2)
    }

    /// An off-cycle lattice point, nudged by (¼, ¼); no cycle edge separates
    /// the two points because none passes through the lattice point.
    pub fn nudged(v: Cell) -> QuarterPoint {
        QuarterPoint(4 * v.x as i64 + 1, 4 * v.y as i64 + 1)
    }
}

/// Winding number by accumulating signed quarter-turns of the direction from
/// `p` to a point moving along the cycle.
pub fn turning_winding_oracle(cycle: &Cycle, p: QuarterPoint) -> i64 {
    let quadrant = |v: &Cell| -> i64 {
        let (dx, dy) = (4 * v.x as i64 - p.0, 4 * v.y as i64 - p.1);
        assert!(dx != 0 && dy != 0);
        match (dx > 0, dy > 0) {
            (true, true) => 0,
            (false, true) => 1,
            (false, false) => 2,
            (true, false) => 3,
        }
    };
    let vs = cycle.vertices();
    let mut quarter_turns = 0i64;
    for i in 0..vs.len() {
        let (a, b) = (quadrant(&vs[i]), quadrant(&vs[(i + 1) % vs.len()]));
        quarter_turns += match (b - a).rem_euclid(4) {
            0 => 0,
            1 => 1,
            3 => -1,
            _ => panic!("a unit edge cannot jump two quadrants"),
        };
    }
    assert_eq!(quarter_turns % 4, 0);
    quarter_turns / 4
}
