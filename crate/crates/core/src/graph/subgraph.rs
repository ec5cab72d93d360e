//! Backtracking subgraph search (not induced: pattern edges must map to host
//! edges, pattern non-edges are unconstrained).

use super::SimpleGraph;
use crate::bits;
use serde::{Deserialize, Serialize};

/// An injective map from pattern vertices to host vertices. `map[p]` is the
/// host image of pattern vertex `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// Checks injectivity and that every pattern edge lands on a host edge.
    pub fn is_valid(&self, pattern: &SimpleGraph, host: &SimpleGraph) -> bool {
        if self.map.len() != pattern.n() {
            return false;
        }
        let mut seen = std::collections::HashSet::new();
        if !self.map.iter().all(|&w| w < host.n() && seen.insert(w)) {
            return false;
        }
        pattern
            .edges()
            .all(|(u, v)| host.has_edge(self.map[u], self.map[v]))
    }
}

/// Processing order for the pattern: start at a maximum-degree vertex, then
/// repeatedly take the vertex with the most already-ordered neighbors,
/// breaking ties by degree (descending) and then index. Returns for each
/// position the vertex and the list of its already-ordered neighbors.
fn pattern_order(pattern: &SimpleGraph) -> Vec<(usize, Vec<usize>)> {
    let n = pattern.n();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best: Option<(usize, usize, usize)> = None; // (placed_nbrs, degree, vertex)
        for v in 0..n {
            if placed[v] {
                continue;
            }
            let pn = pattern.neighbors(v).filter(|&u| placed[u]).count();
            let key = (pn, pattern.degree(v), v);
            best = match best {
                None => Some(key),
                Some(b) => {
                    // more placed neighbors wins, then higher degree, then lower index
                    if (key.0, key.1, std::cmp::Reverse(key.2))
                        > (b.0, b.1, std::cmp::Reverse(b.2))
                    {
                        Some(key)
                    } else {
                        Some(b)
                    }
                }
            };
        }
        let v = best.unwrap().2;
        placed[v] = true;
        let prior: Vec<usize> = pattern
            .neighbors(v)
            .filter(|&u| u != v && placed[u])
            .collect();
        order.push((v, prior));
    }
    order
}

/// Finds an embedding of `pattern` into `host`, or `None`. Deterministic:
/// pattern vertices follow [`pattern_order`], host candidates are scanned in
/// increasing index and filtered by degree and adjacency to the images of
/// already-placed pattern neighbors.
pub fn find_subgraph(pattern: &SimpleGraph, host: &SimpleGraph) -> Option<Embedding> {
    if pattern.n() > host.n() || pattern.edge_count() > host.edge_count() {
        return None;
    }
    if pattern.n() == 0 {
        return Some(Embedding { map: vec![] });
    }
    // every pattern component must fit in some host component
    let host_comp_max = host
        .components()
        .iter()
        .map(|c| c.len())
        .max()
        .unwrap_or(0);
    if pattern
        .components()
        .iter()
        .any(|c| c.len() > host_comp_max && c.iter().any(|&v| pattern.degree(v) > 0))
    {
        return None;
    }

    let order = pattern_order(pattern);
    let words = bits::words_for(host.n()).max(1);
    let mut image = vec![usize::MAX; pattern.n()];
    let mut used = vec![0u64; words];
    let mut scratch = vec![0u64; words];

    fn extend(
        pattern: &SimpleGraph,
        host: &SimpleGraph,
        order: &[(usize, Vec<usize>)],
        pos: usize,
        image: &mut [usize],
        used: &mut [u64],
        scratch: &mut [u64],
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let (pv, ref prior) = order[pos];
        let need_deg = pattern.degree(pv);
        if let Some((&first, rest)) = prior.split_first() {
            scratch.copy_from_slice(host.row(image[first]));
            for &p in rest {
                for (s, r) in scratch.iter_mut().zip(host.row(image[p])) {
                    *s &= r;
                }
            }
            for (s, u) in scratch.iter_mut().zip(used.iter()) {
                *s &= !u;
            }
            let cands: Vec<usize> = bits::ones(scratch).collect();
            for w in cands {
                if host.degree(w) < need_deg {
                    continue;
                }
                image[pv] = w;
                bits::set_bit(used, w);
                if extend(pattern, host, order, pos + 1, image, used, scratch) {
                    return true;
                }
                bits::clear_bit(used, w);
                image[pv] = usize::MAX;
            }
        } else {
            for w in 0..host.n() {
                if bits::test_bit(used, w) || host.degree(w) < need_deg {
                    continue;
                }
                image[pv] = w;
                bits::set_bit(used, w);
                if extend(pattern, host, order, pos + 1, image, used, scratch) {
                    return true;
                }
                bits::clear_bit(used, w);
                image[pv] = usize::MAX;
            }
        }
        false
    }

    if extend(
        pattern,
        host,
        &order,
        0,
        &mut image,
        &mut used,
        &mut scratch,
    ) {
        let emb = Embedding { map: image };
        debug_assert!(emb.is_valid(pattern, host));
        Some(emb)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_in_k4() {
        let emb = find_subgraph(&SimpleGraph::cycle(4), &SimpleGraph::complete(4)).unwrap();
        assert!(emb.is_valid(&SimpleGraph::cycle(4), &SimpleGraph::complete(4)));
    }

    #[test]
    fn no_odd_cycle_in_bipartite_host() {
        assert!(find_subgraph(&SimpleGraph::cycle(5), &SimpleGraph::complete_bipartite(2, 3)).is_none());
    }

    #[test]
    fn chorded_hexagon_in_k55() {
        let d = crate::graph::ChordSet::new(6, vec![(0, 3)]).unwrap();
        let pattern = crate::graph::build_chorded_cycle(6, &d).unwrap();
        let host = SimpleGraph::complete_bipartite(5, 5);
        let emb = find_subgraph(&pattern, &host).expect("bipartite pattern fits");
        assert!(emb.is_valid(&pattern, &host));
    }

    #[test]
    fn identity_embedding_of_cycle_in_chorded_cycle() {
        let d = crate::graph::ChordSet::new(9, vec![(0, 4)]).unwrap();
        let g = crate::graph::build_chorded_cycle(9, &d).unwrap();
        assert!(find_subgraph(&SimpleGraph::cycle(9), &g).is_some());
    }

    #[test]
    fn component_size_prefilter() {
        // pattern connected on 5 vertices, host components of size 4
        let mut edges = Vec::new();
        for u in 0..4 {
            for v in u + 1..4 {
                edges.push((u, v));
                edges.push((u + 4, v + 4));
            }
        }
        let host = SimpleGraph::from_edges(8, edges).unwrap();
        assert!(find_subgraph(&SimpleGraph::cycle(5), &host).is_none());
        assert!(find_subgraph(&SimpleGraph::cycle(4), &host).is_some());
    }

    /// Brute-force oracle: try every injective map.
    fn brute_force_exists(pattern: &SimpleGraph, host: &SimpleGraph) -> bool {
        fn rec(
            pattern: &SimpleGraph,
            host: &SimpleGraph,
            image: &mut Vec<usize>,
        ) -> bool {
            if image.len() == pattern.n() {
                return pattern
                    .edges()
                    .all(|(u, v)| host.has_edge(image[u], image[v]));
            }
            for w in 0..host.n() {
                if image.contains(&w) {
                    continue;
                }
                image.push(w);
                if rec(pattern, host, image) {
                    return true;
                }
                image.pop();
            }
            false
        }
        rec(pattern, host, &mut Vec::new())
    }

    #[test]
    fn agrees_with_brute_force_on_small_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_0001);
        for _ in 0..150 {
            let pn = rng.gen_range(1..=4usize);
            let hn = rng.gen_range(pn..=6usize);
            let pattern = random_graph(&mut rng, pn, 0.5);
            let host = random_graph(&mut rng, hn, 0.5);
            assert_eq!(
                find_subgraph(&pattern, &host).is_some(),
                brute_force_exists(&pattern, &host),
                "pattern {:?} host {:?}",
                pattern,
                host
            );
        }
    }

    fn random_graph(rng: &mut impl rand::Rng, n: usize, p: f64) -> SimpleGraph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        SimpleGraph::from_edges(n, edges).unwrap()
    }
}
