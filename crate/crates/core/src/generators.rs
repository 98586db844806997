//! Lower-bound families and seeded random instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Multigraph, Multiplicity, Orientation, Ordering, VertexId};
use crate::partition::VertexPartition;
use crate::transforms::subdivided_paths;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GenError {
    #[error("x must be an even integer >= 2, got {0}")]
    BadX(u32),
    #[error("y must be >= {min}, got {got}")]
    BadY { got: u32, min: u32 },
    #[error("n must be >= 3, got {0}")]
    BadN(usize),
    #[error("vertex count must be >= 1")]
    NoVertices,
    #[error("class count {classes} must be between 1 and the vertex count {vertices}")]
    BadClassCount { classes: usize, vertices: usize },
    #[error("maximum multiplicity must be >= 1")]
    BadMultiplicity,
    #[error("edge density must lie in [0, 1], got {0}")]
    BadDensity(f64),
}

/// Validated `(x, y)` for the lower-bound families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LowerBoundParams {
    x: u32,
    y: u32,
}

impl LowerBoundParams {
    pub fn new(x: u32, y: u32) -> Result<Self, GenError> {
        if x < 2 || !x.is_multiple_of(2) {
            return Err(GenError::BadX(x));
        }
        if y < 1 {
            return Err(GenError::BadY { got: y, min: 1 });
        }
        Ok(LowerBoundParams { x, y })
    }

    pub fn x(self) -> u32 {
        self.x
    }

    pub fn y(self) -> u32 {
        self.y
    }

    /// `y ≥ 1.5x`, the regime where the graphs reach `1.5x + y` exactly.
    pub fn is_tight(self) -> bool {
        2 * self.y >= 3 * self.x
    }

    /// `min(1.5x + y, max(2y, x))`, integral because `x` is even.
    pub fn closed_form_cutwidth(self) -> u64 {
        let (x, y) = (u64::from(self.x), u64::from(self.y));
        ((3 * x + 2 * y) / 2).min((2 * y).max(x))
    }
}

/// Five-vertex multigraph with edges `{1,3}×x`, `{2,5}×x/2`, `{4,5}×x/2`,
/// `{2,3}×y`, `{3,4}×y` and the partition `{1}, {5}, {2,3,4}`.
pub fn gen_lower_g(x: u32, y: u32) -> Result<(Multigraph, VertexPartition), GenError> {
    let p = LowerBoundParams::new(x, y)?;
    Ok((lower_g_graph(p), lower_g_partition()))
}

fn lower_g_graph(p: LowerBoundParams) -> Multigraph {
    let (x, y) = (p.x, p.y);
    Multigraph::from_edge_list(
        Orientation::Undirected,
        5,
        [(1, 3, x), (2, 5, x / 2), (4, 5, x / 2), (2, 3, y), (3, 4, y)],
    )
    .expect("valid family")
}

fn lower_g_partition() -> VertexPartition {
    VertexPartition::from_ids(5, &[vec![1], vec![5], vec![2, 3, 4]]).expect("valid partition")
}

/// [`gen_lower_g`] with vertex 5 dissolved into `x/2` edges `{2,4}`.
pub fn gen_lower_k(x: u32, y: u32) -> Result<Multigraph, GenError> {
    let LowerBoundParams { x, y } = LowerBoundParams::new(x, y)?;
    Ok(Multigraph::from_edge_list(
        Orientation::Undirected,
        4,
        [(1, 3, x), (2, 3, y), (3, 4, y), (2, 4, x / 2)],
    )
    .expect("valid family"))
}

/// Simple directed graph whose only nontrivial SCC holds `2, 3, 4` and the
/// midpoints between them.
///
/// Every edge occurrence of [`gen_lower_g`] is subdivided (midpoints numbered
/// from 6 in canonical edge order). Paths `1→w→3`, `2→w→5`, `4→w→5` follow
/// the flow from 1 to 5. Between 2 and 3 all paths run `3→w→2` except the
/// last one, `2→w→3`; between 3 and 4 all run `3→w→4` except the last,
/// `4→w→3`.
pub fn gen_lower_h(x: u32, y: u32) -> Result<Multigraph, GenError> {
    let p = LowerBoundParams::new(x, y)?;
    if y < 2 {
        return Err(GenError::BadY { got: y, min: 2 });
    }
    let g = lower_g_graph(p);
    let (n, paths) = subdivided_paths(&g);
    let mut arcs = Vec::with_capacity(2 * paths.len());
    let mut seen = [0u32; 2];
    for (u, w, v) in paths {
        let reversed_pair = match (u, v) {
            (2, 3) => Some(0),
            (3, 4) => Some(1),
            _ => None,
        };
        let (from, to) = match reversed_pair {
            Some(k) => {
                seen[k] += 1;
                let last = seen[k] == y;
                match (k, last) {
                    (0, false) => (3, 2),
                    (0, true) => (2, 3),
                    (_, false) => (3, 4),
                    (_, true) => (4, 3),
                }
            }
            None => (u, v),
        };
        arcs.push((from, w, 1));
        arcs.push((w, to, 1));
    }
    Ok(Multigraph::from_edge_list(Orientation::Directed, n, arcs).expect("valid family"))
}

/// Two directed `n`-cycles `u1→…→un→u1` and `v1→…→vn→v1` plus arcs `ui→vi`.
/// `ui` is vertex `i` and `vi` is vertex `n + i`.
pub fn gen_nolow_gn(n: usize) -> Result<Multigraph, GenError> {
    if n < 3 {
        return Err(GenError::BadN(n));
    }
    let m = n as u32;
    let arcs = (1..=m).flat_map(|i| {
        let next = i % m + 1;
        [(i, next, 1), (m + i, m + next, 1), (i, m + i, 1)]
    });
    Ok(Multigraph::from_edge_list(Orientation::Directed, 2 * n, arcs).expect("valid family"))
}

/// The ordering `u1, v1, u2, v2, …, un, vn` of [`gen_nolow_gn`].
pub fn nolow_interleaved(n: usize) -> Ordering {
    let seq = (0..n).flat_map(|i| [VertexId::from_index(i), VertexId::from_index(n + i)]).collect();
    Ordering::new(seq, 2 * n).expect("interleaving is a permutation")
}

/// Seeded random undirected multigraph with a partition into `class_count`
/// nonempty classes.
///
/// Each pair `u < v` carries an edge with probability `edge_density`, of
/// multiplicity uniform in `1..=max_multiplicity`. Randomness comes from
/// ChaCha8 seeded with `seed`, so instances are identical on every platform.
pub fn gen_random(
    seed: u64,
    vertex_count: usize,
    max_multiplicity: Multiplicity,
    edge_density: f64,
    class_count: usize,
) -> Result<(Multigraph, VertexPartition), GenError> {
    if vertex_count == 0 {
        return Err(GenError::NoVertices);
    }
    if class_count == 0 || class_count > vertex_count {
        return Err(GenError::BadClassCount { classes: class_count, vertices: vertex_count });
    }
    if max_multiplicity == 0 {
        return Err(GenError::BadMultiplicity);
    }
    if !(0.0..=1.0).contains(&edge_density) {
        return Err(GenError::BadDensity(edge_density));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = vertex_count as u32;
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(edge_density) {
                edges.push((u, v, rng.gen_range(1..=max_multiplicity)));
            }
        }
    }
    let g = Multigraph::from_edge_list(Orientation::Undirected, vertex_count, edges)
        .expect("generated edges are valid");
    Ok((g, random_partition(&mut rng, vertex_count, class_count)))
}

/// Seeded random undirected multigraph built from exactly `occurrences`
/// edge occurrences, each between a uniformly random pair of distinct
/// vertices. Needs at least two vertices when `occurrences > 0`.
pub fn gen_random_occurrences(
    seed: u64,
    vertex_count: usize,
    occurrences: usize,
) -> Result<Multigraph, GenError> {
    if vertex_count == 0 || (vertex_count == 1 && occurrences > 0) {
        return Err(GenError::NoVertices);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = vertex_count as u32;
    let edges: Vec<_> = (0..occurrences)
        .map(|_| {
            let u = rng.gen_range(1..=n);
            let mut v = rng.gen_range(1..n);
            if v >= u {
                v += 1;
            }
            (u, v, 1)
        })
        .collect();
    Ok(Multigraph::from_edge_list(Orientation::Undirected, vertex_count, edges)
        .expect("generated edges are valid"))
}

fn random_partition(rng: &mut ChaCha8Rng, vertex_count: usize, class_count: usize) -> VertexPartition {
    let mut vertices: Vec<VertexId> = (0..vertex_count).map(VertexId::from_index).collect();
    vertices.shuffle(rng);
    let mut classes: Vec<Vec<VertexId>> = vec![Vec::new(); class_count];
    for (i, v) in vertices.into_iter().enumerate() {
        let c = if i < class_count { i } else { rng.gen_range(0..class_count) };
        classes[c].push(v);
    }
    // List classes by smallest member for stable output.
    for c in &mut classes {
        c.sort_unstable();
    }
    classes.sort_unstable();
    VertexPartition::new(vertex_count, classes).expect("every class is nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ids;
    use crate::partition::{condensation, quotient_multigraph, scc_partition};
    use crate::solver::{exact_cutwidth, ordering_cutwidth};

    #[test]
    fn parameter_validation() {
        assert_eq!(gen_lower_g(3, 3).unwrap_err(), GenError::BadX(3));
        assert_eq!(gen_lower_g(0, 3).unwrap_err(), GenError::BadX(0));
        assert!(matches!(gen_lower_k(2, 0), Err(GenError::BadY { .. })));
        assert!(matches!(gen_lower_h(2, 1), Err(GenError::BadY { min: 2, .. })));
        assert_eq!(gen_nolow_gn(2).unwrap_err(), GenError::BadN(2));
        assert!(matches!(gen_random(1, 3, 1, 0.5, 4), Err(GenError::BadClassCount { .. })));
        assert!(matches!(gen_random(1, 0, 1, 0.5, 0), Err(GenError::NoVertices)));
        assert!(matches!(gen_random(1, 3, 1, 1.5, 1), Err(GenError::BadDensity(_))));
    }

    #[test]
    fn lower_g_structure() {
        let (g, p) = gen_lower_g(2, 3).unwrap();
        assert_eq!(g.total_multiplicity(), 10);
        let q = quotient_multigraph(&g, &p).unwrap();
        assert_eq!(exact_cutwidth(&q).unwrap().value, 2);
        let (class, _) = g.induced_subgraph(&p.classes()[2]).unwrap();
        assert_eq!(exact_cutwidth(&class).unwrap().value, 3);
        assert_eq!(exact_cutwidth(&g).unwrap().value, 6);
        let (g, _) = gen_lower_g(4, 2).unwrap();
        assert_eq!(exact_cutwidth(&g).unwrap().value, 4);
    }

    #[test]
    fn lower_k_values() {
        for (x, y, want) in [(2, 3, 6), (2, 4, 7), (4, 1, 4)] {
            let k = gen_lower_k(x, y).unwrap();
            assert_eq!(exact_cutwidth(&k).unwrap().value, want, "K({x},{y})");
            assert_eq!(LowerBoundParams::new(x, y).unwrap().closed_form_cutwidth(), want);
        }
    }

    #[test]
    fn lower_h_structure() {
        let h = gen_lower_h(2, 3).unwrap();
        assert_eq!(h.vertex_count(), 15);
        assert_eq!(h.total_multiplicity(), 20);
        assert!(h.edges().iter().all(|e| e.multiplicity == 1));
        let p = scc_partition(&h).unwrap();
        let big: Vec<_> = p.classes().iter().filter(|c| c.len() > 1).collect();
        assert_eq!(big.len(), 1);
        // 2, 3, 4 and the midpoints 8, 9, 10 ({2,3}) and 12, 13, 14 ({3,4}).
        assert_eq!(big[0], &ids(&[2, 3, 4, 8, 9, 10, 12, 13, 14]));
        assert_eq!(h.to_undirected().total_multiplicity(), 20);
        let (c, _) = condensation(&h).unwrap();
        assert_eq!(exact_cutwidth(&c.to_undirected()).unwrap().value, 2);
    }

    #[test]
    fn nolow_structure() {
        let g = gen_nolow_gn(3).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.total_multiplicity(), 9);
        let p = scc_partition(&g).unwrap();
        assert_eq!(p.classes(), &[ids(&[4, 5, 6]), ids(&[1, 2, 3])]);
        let (c, _) = condensation(&g).unwrap();
        assert_eq!(c.entries().collect::<Vec<_>>(), vec![(2, 1, 3)]);
        let u = g.to_undirected();
        assert!(ordering_cutwidth(&u, &nolow_interleaved(3)).unwrap() <= 5);
        let exact = exact_cutwidth(&u).unwrap().value;
        assert!((2..=5).contains(&exact));
        let (cycle, _) = g.induced_subgraph(&ids(&[1, 2, 3])).unwrap();
        assert_eq!(cycle.entries().collect::<Vec<_>>(), vec![(1, 2, 1), (2, 3, 1), (3, 1, 1)]);
    }

    #[test]
    fn random_is_deterministic() {
        let a = gen_random(42, 10, 3, 0.4, 3).unwrap();
        let b = gen_random(42, 10, 3, 0.4, 3).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.1.class_count(), 3);
        let (single, p) = gen_random(1, 1, 1, 0.7, 1).unwrap();
        assert_eq!(single.vertex_count(), 1);
        assert!(single.edges().is_empty());
        assert_eq!(p.class_count(), 1);
        let occ = gen_random_occurrences(9, 5, 14).unwrap();
        assert_eq!(occ.total_multiplicity(), 14);
        assert_eq!(occ, gen_random_occurrences(9, 5, 14).unwrap());
    }
}
