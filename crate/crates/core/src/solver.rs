//! Ordering evaluation and exact minimum cutwidth.
//!
//! The exact solver runs a dynamic program over vertex subsets:
//! `f(∅) = 0` and `f(S) = max(cut(S), min_{v ∈ S} f(S \ {v}))`, where `f(S)` is
//! the best width achievable by an ordering whose prefix is `S`. Connected
//! components are solved independently and their witnesses concatenated.

use thiserror::Error;

use crate::graph::{GraphError, Multigraph, Ordering};

/// Default maximum component size accepted by [`exact_cutwidth`].
pub const DEFAULT_BUDGET: usize = 20;

/// Hard limit imposed by the subset masks.
pub const MAX_SOLVER_VERTICES: usize = 30;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error(
        "component with {size} vertices exceeds the exact-solver budget of {budget}; use a heuristic bound instead"
    )]
    BudgetExceeded { size: usize, budget: usize },
    #[error("exact cutwidth is defined on undirected graphs; convert with underlying_undirected first")]
    DirectedInput,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Exact cutwidth with a witness ordering achieving it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutwidthResult {
    pub value: u64,
    pub witness: Ordering,
}

/// Width of every proper prefix cut of `ordering`, in order.
pub fn prefix_cuts(g: &Multigraph, ordering: &Ordering) -> Result<Vec<u64>, GraphError> {
    check_ordering(g, ordering)?;
    let adj = g.weighted_adjacency();
    let deg = g.degrees();
    let mut left = vec![false; g.vertex_count()];
    let mut current = 0u64;
    let mut cuts = Vec::with_capacity(ordering.len().saturating_sub(1));
    let seq = ordering.as_slice();
    for &v in seq.iter().take(seq.len().saturating_sub(1)) {
        let i = v.index();
        let into_left: u64 = adj[i].iter().filter(|(w, _)| left[*w]).map(|(_, m)| m).sum();
        current = current + deg[i] - 2 * into_left;
        left[i] = true;
        cuts.push(current);
    }
    Ok(cuts)
}

/// Cutwidth of a fixed ordering: the largest proper prefix cut, 0 for graphs
/// with at most one vertex. Orientation is ignored.
pub fn ordering_cutwidth(g: &Multigraph, ordering: &Ordering) -> Result<u64, GraphError> {
    Ok(prefix_cuts(g, ordering)?.into_iter().max().unwrap_or(0))
}

fn check_ordering(g: &Multigraph, ordering: &Ordering) -> Result<(), GraphError> {
    if ordering.len() != g.vertex_count() {
        return Err(GraphError::NotAPermutation(format!(
            "ordering has {} vertices, graph has {}",
            ordering.len(),
            g.vertex_count()
        )));
    }
    Ok(())
}

/// Exact cutwidth with the default budget.
pub fn exact_cutwidth(g: &Multigraph) -> Result<CutwidthResult, SolveError> {
    exact_cutwidth_with_budget(g, DEFAULT_BUDGET)
}

/// Exact cutwidth; every connected component must have at most `budget`
/// vertices.
pub fn exact_cutwidth_with_budget(
    g: &Multigraph,
    budget: usize,
) -> Result<CutwidthResult, SolveError> {
    Ok(solve(g, budget, None)?.expect("no threshold, no pruning"))
}

/// Exact cutwidth, giving up early when it exceeds `threshold`.
///
/// Returns `Ok(None)` when the cutwidth is larger than `threshold`.
pub fn exact_cutwidth_within(
    g: &Multigraph,
    budget: usize,
    threshold: u64,
) -> Result<Option<CutwidthResult>, SolveError> {
    solve(g, budget, Some(threshold))
}

fn solve(
    g: &Multigraph,
    budget: usize,
    threshold: Option<u64>,
) -> Result<Option<CutwidthResult>, SolveError> {
    if g.is_directed() {
        return Err(SolveError::DirectedInput);
    }
    let budget = budget.min(MAX_SOLVER_VERTICES);
    let components = g.connected_components();
    if let Some(c) = components.iter().find(|c| c.len() > budget) {
        return Err(SolveError::BudgetExceeded { size: c.len(), budget });
    }

    let mut value = 0;
    let mut witness = Vec::with_capacity(g.vertex_count());
    for component in &components {
        if component.len() == 1 {
            witness.push(component[0]);
            continue;
        }
        let (sub, id_map) = g.induced_subgraph(component)?;
        match solve_connected(&sub, threshold) {
            Some((v, order)) => {
                value = value.max(v);
                witness.extend(order.into_iter().map(|local| id_map[local]));
            }
            None => return Ok(None),
        }
    }
    let witness = Ordering::new(witness, g.vertex_count())?;
    Ok(Some(CutwidthResult { value, witness }))
}

/// DP table cell. The all-ones value marks pruned states.
trait Cell: Copy + Ord {
    const PRUNED: Self;
    fn from_u64(v: u64) -> Self;
    fn to_u64(self) -> u64;
}

macro_rules! impl_cell {
    ($($t:ty),*) => {$(
        impl Cell for $t {
            const PRUNED: Self = <$t>::MAX;
            fn from_u64(v: u64) -> Self {
                v as $t
            }
            fn to_u64(self) -> u64 {
                self as u64
            }
        }
    )*};
}
impl_cell!(u8, u16, u32, u64);

/// Picks the narrowest cell type whose range holds every cut value.
fn solve_connected(g: &Multigraph, threshold: Option<u64>) -> Option<(u64, Vec<usize>)> {
    let total = g.total_multiplicity();
    if total < u64::from(u8::MAX) {
        solve_table::<u8>(g, threshold)
    } else if total < u64::from(u16::MAX) {
        solve_table::<u16>(g, threshold)
    } else if total < u64::from(u32::MAX) {
        solve_table::<u32>(g, threshold)
    } else {
        solve_table::<u64>(g, threshold)
    }
}

/// Returns the optimum and an optimal ordering as 0-based local indices.
fn solve_table<C: Cell>(g: &Multigraph, threshold: Option<u64>) -> Option<(u64, Vec<usize>)> {
    let n = g.vertex_count();
    let adj = g.weighted_adjacency();
    let deg = g.degrees();
    let neighbour_masks: Vec<Vec<(u32, u64)>> = adj
        .iter()
        .map(|row| row.iter().map(|&(w, m)| (1u32 << w, m)).collect())
        .collect();

    let size = 1usize << n;
    let mut cut = vec![C::from_u64(0); size];
    let mut best = vec![C::from_u64(0); size];
    let limit = threshold.unwrap_or(u64::MAX);

    for s in 1..size {
        let low = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        let into_rest: u64 = neighbour_masks[low]
            .iter()
            .filter(|(bit, _)| rest as u32 & bit != 0)
            .map(|(_, m)| m)
            .sum();
        let c = cut[rest].to_u64() + deg[low] - 2 * into_rest;
        cut[s] = C::from_u64(c);

        if c > limit {
            best[s] = C::PRUNED;
            continue;
        }
        let mut min_prev = C::PRUNED;
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros();
            bits &= bits - 1;
            min_prev = min_prev.min(best[s & !(1 << v)]);
        }
        best[s] = if min_prev == C::PRUNED { C::PRUNED } else { min_prev.max(cut[s]) };
    }

    let full = size - 1;
    if best[full] == C::PRUNED {
        return None;
    }

    // Walk back from the full set, each time removing the smallest vertex
    // whose removal attains the minimum.
    let mut order = vec![0usize; n];
    let mut s = full;
    for slot in (0..n).rev() {
        let mut choice = None;
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let prev = best[s & !(1 << v)];
            if choice.is_none_or(|(_, b)| prev < b) {
                choice = Some((v, prev));
            }
        }
        let (v, _) = choice.expect("nonempty subset");
        order[slot] = v;
        s &= !(1 << v);
    }
    Some((best[full].to_u64(), order))
}

/// Convenience: exact cutwidth value only, converting directed graphs first.
pub fn cutwidth_of(g: &Multigraph) -> Result<u64, SolveError> {
    Ok(exact_cutwidth(&g.to_undirected())?.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{ids, Orientation};

    fn und(n: usize, edges: &[(u32, u32, u32)]) -> Multigraph {
        Multigraph::from_edge_list(Orientation::Undirected, n, edges.iter().copied()).unwrap()
    }

    fn k(x: u32, y: u32) -> Multigraph {
        und(4, &[(1, 3, x), (2, 3, y), (3, 4, y), (2, 4, x / 2)])
    }

    #[test]
    fn k23_orderings() {
        let g = k(2, 3);
        let ord = Ordering::from_ids(&[2, 3, 1, 4], 4).unwrap();
        assert_eq!(prefix_cuts(&g, &ord).unwrap(), vec![4, 6, 4]);
        assert_eq!(ordering_cutwidth(&g, &ord).unwrap(), 6);
        let ord = Ordering::from_ids(&[2, 4, 3, 1], 4).unwrap();
        assert_eq!(prefix_cuts(&g, &ord).unwrap(), vec![4, 6, 2]);
    }

    #[test]
    fn trivial_sizes() {
        let g = Multigraph::edgeless(Orientation::Undirected, 1);
        assert_eq!(ordering_cutwidth(&g, &Ordering::identity(1)).unwrap(), 0);
        assert_eq!(exact_cutwidth(&g).unwrap().value, 0);
        let g = Multigraph::edgeless(Orientation::Undirected, 0);
        let r = exact_cutwidth(&g).unwrap();
        assert_eq!(r.value, 0);
        assert!(r.witness.is_empty());
    }

    #[test]
    fn mismatched_ordering_rejected() {
        let g = k(2, 3);
        assert!(ordering_cutwidth(&g, &Ordering::identity(3)).is_err());
    }

    #[test]
    fn single_edge_and_cycles() {
        assert_eq!(exact_cutwidth(&und(2, &[(1, 2, 1)])).unwrap().value, 1);
        for n in 3..=9u32 {
            let edges: Vec<_> = (1..=n).map(|i| (i, i % n + 1, 1)).collect();
            assert_eq!(exact_cutwidth(&und(n as usize, &edges)).unwrap().value, 2, "C_{n}");
        }
    }

    #[test]
    fn lower_family_examples() {
        assert_eq!(exact_cutwidth(&k(2, 3)).unwrap().value, 6);
        assert_eq!(exact_cutwidth(&k(2, 4)).unwrap().value, 7);
        assert_eq!(exact_cutwidth(&k(4, 6)).unwrap().value, 12);
    }

    #[test]
    fn witness_matches_value() {
        let g = k(4, 1);
        let r = exact_cutwidth(&g).unwrap();
        assert_eq!(ordering_cutwidth(&g, &r.witness).unwrap(), r.value);
    }

    #[test]
    fn deterministic_tie_break() {
        // Path 1-2-3: every optimal ordering is monotone; the smallest
        // last vertex is 1, so the witness is 3 2 1.
        let g = und(3, &[(1, 2, 1), (2, 3, 1)]);
        assert_eq!(exact_cutwidth(&g).unwrap().witness.as_slice(), &ids(&[3, 2, 1])[..]);
    }

    #[test]
    fn disconnected_graph() {
        // Triangle {1,2,4} plus edge {3,5} plus isolated 6.
        let g = und(6, &[(1, 2, 1), (2, 4, 1), (1, 4, 1), (3, 5, 3)]);
        let r = exact_cutwidth(&g).unwrap();
        assert_eq!(r.value, 3);
        let comp: Vec<_> = r.witness.as_slice().iter().map(|v| v.get()).collect();
        let mut first: Vec<_> = comp[..3].to_vec();
        first.sort();
        assert_eq!(first, vec![1, 2, 4]);
        assert_eq!(comp[5], 6);
    }

    #[test]
    fn budget_and_orientation_errors() {
        let edges: Vec<_> = (1..21u32).map(|i| (i, i + 1, 1)).collect();
        let path = und(21, &edges);
        assert_eq!(
            exact_cutwidth(&path),
            Err(SolveError::BudgetExceeded { size: 21, budget: 20 })
        );
        assert_eq!(exact_cutwidth_with_budget(&path, 21).unwrap().value, 1);
        // Many small components are fine.
        let pairs: Vec<_> = (0..15u32).map(|i| (2 * i + 1, 2 * i + 2, 1)).collect();
        assert_eq!(exact_cutwidth(&und(30, &pairs)).unwrap().value, 1);

        let d = Multigraph::from_edge_list(Orientation::Directed, 2, [(1, 2, 1)]).unwrap();
        assert_eq!(exact_cutwidth(&d), Err(SolveError::DirectedInput));
    }

    #[test]
    fn threshold_prune() {
        let g = k(2, 3);
        assert_eq!(exact_cutwidth_within(&g, 20, 5).unwrap(), None);
        let hit = exact_cutwidth_within(&g, 20, 6).unwrap().unwrap();
        assert_eq!(hit.value, 6);
        assert_eq!(ordering_cutwidth(&g, &hit.witness).unwrap(), 6);
    }

    #[test]
    fn wide_cells() {
        // Total multiplicity above the u8 and u16 ranges.
        let g = und(3, &[(1, 2, 300), (2, 3, 200)]);
        assert_eq!(exact_cutwidth(&g).unwrap().value, 300);
        let g = und(3, &[(1, 2, 70_000), (2, 3, 1), (1, 3, 5)]);
        assert_eq!(exact_cutwidth(&g).unwrap().value, 70_001);
    }
}
