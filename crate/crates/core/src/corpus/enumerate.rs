//! Exhaustive generation of small graphs up to isomorphism.
//!
//! Graphs on `n` vertices are produced by attaching a new vertex, with every
//! possible neighbor set, to one representative of each class on `n - 1`
//! vertices. Every graph arises this way (delete any vertex), so after
//! deduplicating by canonical code the classes are complete.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::canonical_form;

pub const MAX_ENUMERATION_VERTICES: usize = 7;

fn extend(reps: &[Graph]) -> Vec<Graph> {
    let n = reps[0].n() + 1;
    let found: Vec<(Vec<u64>, Graph)> = reps
        .par_iter()
        .flat_map_iter(|base| {
            (0u32..1 << (n - 1)).map(move |mask| {
                let mut g = Graph::empty(n).expect("n >= 2");
                for (u, v) in base.edges() {
                    g.add_edge(u, v).expect("in range");
                }
                for u in 0..n - 1 {
                    if mask >> u & 1 == 1 {
                        g.add_edge(u, n - 1).expect("in range");
                    }
                }
                let form = canonical_form(&g);
                let canon = form.graph(&g);
                (form.code, canon)
            })
        })
        .collect();
    let unique: BTreeMap<Vec<u64>, Graph> = found.into_iter().collect();
    unique.into_values().collect()
}

/// One canonical representative of every isomorphism class of graphs on `n`
/// vertices, sorted by canonical code.
pub fn enumerate_all(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_ENUMERATION_VERTICES {
        return Err(Error::TooLarge { n, max: MAX_ENUMERATION_VERTICES });
    }
    let mut reps = vec![Graph::empty(1)?];
    for _ in 1..n {
        reps = extend(&reps);
    }
    Ok(reps)
}

/// Connected graphs on `n` vertices up to isomorphism, in canonical order.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_all(n)?.into_iter().filter(Graph::is_connected).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::is_isomorphic;

    #[test]
    fn class_counts() {
        let all: Vec<usize> = (1..=6).map(|n| enumerate_all(n).unwrap().len()).collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34, 156]);
        let connected: Vec<usize> = (1..=6).map(|n| enumerate_connected(n).unwrap().len()).collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn three_vertices() {
        let g = enumerate_connected(3).unwrap();
        assert!(g.iter().any(|x| is_isomorphic(x, &Graph::path(3).unwrap())));
        assert!(g.iter().any(|x| is_isomorphic(x, &Graph::complete(3).unwrap())));
    }

    #[test]
    fn pairwise_non_isomorphic() {
        let g = enumerate_connected(5).unwrap();
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                assert!(!is_isomorphic(&g[i], &g[j]));
            }
        }
    }

    #[test]
    fn range_guard() {
        assert!(enumerate_all(0).is_err());
        assert!(enumerate_all(8).is_err());
    }
}
