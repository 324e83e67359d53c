use std::collections::HashMap;

use rayon::prelude::*;

use super::{apply_flip, enumerate_tilings, find_flips, Flip, Tiling};
use crate::region::DuplexRegion;

/// Tilings of a region as nodes, flips as undirected edges.
#[derive(Clone, Debug)]
pub struct FlipGraph {
    pub tilings: Vec<Tiling>,
    /// `(i, j, f)` with `i < j` and `apply_flip(tilings[i], f) == tilings[j]`.
    pub edges: Vec<(usize, usize, Flip)>,
}

impl FlipGraph {
    /// Build the graph over an already enumerated tiling list.
    pub fn from_tilings(tilings: Vec<Tiling>) -> FlipGraph {
        let index: HashMap<&Tiling, usize> =
            tilings.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let mut edges: Vec<(usize, usize, Flip)> = tilings
            .par_iter()
            .enumerate()
            .flat_map_iter(|(i, t)| {
                let index = &index;
                find_flips(t).into_iter().filter_map(move |f| {
                    let next = apply_flip(t, &f).expect("flip found in this tiling");
                    let j = *index
                        .get(&next)
                        .expect("flip neighbour missing from the enumeration");
                    (i < j).then_some((i, j, f))
                })
            })
            .collect();
        edges.sort_unstable();
        drop(index);
        FlipGraph { tilings, edges }
    }

    /// Connected components as sorted index lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.tilings.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(i, j, _) in &self.edges {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut slot: HashMap<usize, usize> = HashMap::new();
        for i in 0..self.tilings.len() {
            let root = find(&mut parent, i);
            let g = *slot.entry(root).or_insert_with(|| {
                groups.push(Vec::new());
                groups.len() - 1
            });
            groups[g].push(i);
        }
        groups
    }

    /// For each tiling, the index of its component in [`FlipGraph::components`].
    pub fn component_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.tilings.len()];
        for (c, members) in self.components().iter().enumerate() {
            for &i in members {
                out[i] = c;
            }
        }
        out
    }
}

pub fn flip_graph(r: &DuplexRegion) -> FlipGraph {
    FlipGraph::from_tilings(enumerate_tilings(r).collect())
}

/// Flip-connected components of the tilings of `r`, as indices into
/// [`enumerate_tilings`] order.
pub fn flip_components(r: &DuplexRegion) -> Vec<Vec<usize>> {
    flip_graph(r).components()
}
