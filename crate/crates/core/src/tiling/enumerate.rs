//! Exhaustive tiling enumeration by first-hole backtracking.
//!
//! Cubes are indexed in lexicographic `(x, y, z)` order. The first uncovered
//! cube always pairs with a later cube, tried in the order `+i, +j, +k`, so
//! the output order is fixed by the region alone.

use std::sync::Arc;

use rayon::prelude::*;

use super::{Domino, Tiling};
use crate::lattice::{Cube, Direction};
use crate::region::DuplexRegion;

const STEPS: [Direction; 3] = [Direction::PosI, Direction::PosJ, Direction::PosK];

#[derive(Debug)]
struct CubeIndex {
    cubes: Vec<Cube>,
    partner: Vec<[Option<usize>; 3]>,
}

impl CubeIndex {
    fn new(r: &DuplexRegion) -> CubeIndex {
        let cubes: Vec<Cube> = r.cubes().iter().copied().collect();
        let partner = cubes
            .iter()
            .map(|&c| STEPS.map(|d| cubes.binary_search(&c.step(d)).ok()))
            .collect();
        CubeIndex { cubes, partner }
    }
}

#[derive(Clone, Debug)]
struct Frame {
    cube: usize,
    next: usize,
    chosen: Option<usize>,
}

/// Lazy iterator over all tilings of a region, in enumeration order.
#[derive(Clone, Debug)]
pub struct TilingIter {
    index: Arc<CubeIndex>,
    covered: Vec<bool>,
    fixed: Vec<(usize, usize)>,
    stack: Vec<Frame>,
    // set when the fixed prefix already covers everything
    complete_prefix: bool,
}

impl TilingIter {
    fn from_prefix(index: Arc<CubeIndex>, covered: Vec<bool>, fixed: Vec<(usize, usize)>) -> Self {
        let first = covered.iter().position(|&c| !c);
        let stack = first
            .map(|cube| {
                vec![Frame {
                    cube,
                    next: 0,
                    chosen: None,
                }]
            })
            .unwrap_or_default();
        TilingIter {
            index,
            covered,
            fixed,
            stack,
            complete_prefix: first.is_none(),
        }
    }

    fn new(r: &DuplexRegion) -> Self {
        let index = Arc::new(CubeIndex::new(r));
        let n = index.cubes.len();
        TilingIter::from_prefix(index, vec![false; n], Vec::new())
    }

    /// Step to the next complete tiling; `false` once exhausted.
    fn advance(&mut self) -> bool {
        if self.complete_prefix {
            self.complete_prefix = false;
            return true;
        }
        let idx = &self.index;
        let n = idx.cubes.len();
        while let Some(top) = self.stack.last_mut() {
            if let Some(p) = top.chosen.take() {
                self.covered[top.cube] = false;
                self.covered[p] = false;
            }
            let mut placed = false;
            while top.next < STEPS.len() {
                let step = top.next;
                top.next += 1;
                if let Some(p) = idx.partner[top.cube][step] {
                    if !self.covered[p] {
                        self.covered[top.cube] = true;
                        self.covered[p] = true;
                        top.chosen = Some(p);
                        placed = true;
                        break;
                    }
                }
            }
            if !placed {
                self.stack.pop();
                continue;
            }
            let from = top.cube + 1;
            match (from..n).find(|&i| !self.covered[i]) {
                None => return true,
                Some(cube) => self.stack.push(Frame {
                    cube,
                    next: 0,
                    chosen: None,
                }),
            }
        }
        false
    }

    fn current(&self) -> Tiling {
        let cubes = &self.index.cubes;
        self.fixed
            .iter()
            .copied()
            .chain(
                self.stack
                    .iter()
                    .filter_map(|f| f.chosen.map(|p| (f.cube, p))),
            )
            .map(|(a, b)| Domino::new(cubes[a], cubes[b]).expect("partners are adjacent"))
            .collect()
    }
}

impl Iterator for TilingIter {
    type Item = Tiling;

    fn next(&mut self) -> Option<Tiling> {
        self.advance().then(|| self.current())
    }
}

/// All tilings of `r`, each exactly once, lazily and in deterministic order.
pub fn enumerate_tilings(r: &DuplexRegion) -> TilingIter {
    TilingIter::new(r)
}

/// Number of tilings of `r`, without materializing them.
pub fn count_tilings(r: &DuplexRegion) -> u64 {
    let mut it = TilingIter::new(r);
    let mut n = 0;
    while it.advance() {
        n += 1;
    }
    n
}

type Prefix = (Vec<bool>, Vec<(usize, usize)>);

/// Split the search tree breadth-first, in order, until there are at least
/// `target` subtrees or no open subtree remains.
fn split_prefixes(index: &CubeIndex, target: usize) -> Vec<Prefix> {
    let n = index.cubes.len();
    let mut level: Vec<Prefix> = vec![(vec![false; n], Vec::new())];
    loop {
        if level.len() >= target {
            return level;
        }
        let mut grew = false;
        let mut next = Vec::with_capacity(level.len() * 3);
        for (covered, fixed) in level {
            let Some(first) = covered.iter().position(|&c| !c) else {
                next.push((covered, fixed));
                continue;
            };
            grew = true;
            for p in index.partner[first].iter().flatten().copied() {
                if covered[p] {
                    continue;
                }
                let mut c = covered.clone();
                c[first] = true;
                c[p] = true;
                let mut f = fixed.clone();
                f.push((first, p));
                next.push((c, f));
            }
        }
        level = next;
        if !grew {
            return level;
        }
    }
}

/// Same sequence as [`enumerate_tilings`], computed on `jobs` worker threads.
pub fn enumerate_tilings_parallel(r: &DuplexRegion, jobs: usize) -> Vec<Tiling> {
    let jobs = jobs.max(1);
    if jobs == 1 {
        return enumerate_tilings(r).collect();
    }
    let index = Arc::new(CubeIndex::new(r));
    let prefixes = split_prefixes(&index, jobs * 16);
    let run = || {
        prefixes
            .into_par_iter()
            .map(|(covered, fixed)| {
                TilingIter::from_prefix(index.clone(), covered, fixed).collect::<Vec<_>>()
            })
            .collect::<Vec<_>>()
    };
    let chunks = match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(run),
        Err(_) => run(),
    };
    chunks.into_iter().flatten().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::region::{build_duplex, parse_base, BaseShape};
    use crate::tiling::validate_tiling;
    use std::collections::HashSet;

    fn rect(w: i32, h: i32) -> DuplexRegion {
        build_duplex(BaseShape::rectangle(w, h).unwrap())
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_tilings(&rect(1, 1)), 1);
        assert_eq!(count_tilings(&rect(2, 1)), 2);
        assert_eq!(count_tilings(&rect(2, 2)), 9);
    }

    #[test]
    fn single_cell_is_one_vertical_domino() {
        let r = rect(1, 1);
        let all: Vec<_> = enumerate_tilings(&r).collect();
        assert_eq!(all, vec![Tiling::all_vertical(&r)]);
    }

    #[test]
    fn first_tiling_prefers_i_dominoes() {
        let r = rect(2, 1);
        let all: Vec<_> = enumerate_tilings(&r).collect();
        assert_eq!(all.len(), 2);
        assert!(all[0].dominoes().iter().all(|d| !d.is_vertical()));
        assert_eq!(all[1], Tiling::all_vertical(&r));
    }

    #[test]
    fn tilings_are_valid_and_distinct() {
        let r = build_duplex(parse_base("###\n##.\n#..").unwrap());
        let all: Vec<_> = enumerate_tilings(&r).collect();
        let distinct: HashSet<_> = all.iter().cloned().collect();
        assert_eq!(distinct.len(), all.len());
        for t in &all {
            assert_eq!(validate_tiling(&r, t), Ok(()));
        }
    }

    #[test]
    fn parallel_order_matches_sequential() {
        for r in [rect(1, 1), rect(2, 1), rect(3, 2), rect(3, 3)] {
            let seq: Vec<_> = enumerate_tilings(&r).collect();
            for jobs in [1, 2, 3, 8] {
                assert_eq!(enumerate_tilings_parallel(&r, jobs), seq);
            }
        }
    }
}
