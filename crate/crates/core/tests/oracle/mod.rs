//! Reference computations that share no code with the library: plain edge
//! lists, brute force where it is affordable, and naive subset recursion
//! where it is not.

#![allow(dead_code)]

use cutwidth::Multigraph;

/// Undirected view of a multigraph: 0-based endpoints with multiplicity.
#[derive(Clone, Debug)]
pub struct Plain {
    pub n: usize,
    pub edges: Vec<(usize, usize, u64)>,
}

impl Plain {
    pub fn of(g: &Multigraph) -> Self {
        let edges =
            g.entries().map(|(u, v, m)| (u as usize - 1, v as usize - 1, u64::from(m))).collect();
        Plain { n: g.vertex_count(), edges }
    }

    /// Arcs of a directed graph, or both directions of an undirected one.
    pub fn arcs(g: &Multigraph) -> Vec<(usize, usize)> {
        g.entries()
            .flat_map(|(u, v, _)| {
                let (a, b) = (u as usize - 1, v as usize - 1);
                if g.is_directed() { vec![(a, b)] } else { vec![(a, b), (b, a)] }
            })
            .collect()
    }

    pub fn total(&self) -> u64 {
        self.edges.iter().map(|e| e.2).sum()
    }

    /// Multiplicity between `a` and `b`, orientation ignored.
    pub fn between(&self, a: usize, b: usize) -> u64 {
        self.edges
            .iter()
            .filter(|&&(u, v, _)| (u, v) == (a, b) || (u, v) == (b, a))
            .map(|e| e.2)
            .sum()
    }

    /// Crossing multiplicity of the cut `(left, rest)`.
    pub fn cut(&self, left: &[bool]) -> u64 {
        self.edges.iter().filter(|&&(u, v, _)| left[u] != left[v]).map(|e| e.2).sum()
    }

    /// Largest prefix cut of `order`, a permutation of `0..n`.
    pub fn width_of(&self, order: &[usize]) -> u64 {
        assert!(is_permutation(order, self.n), "not a permutation: {order:?}");
        let mut left = vec![false; self.n];
        let mut worst = 0;
        for &v in order.iter().take(self.n.saturating_sub(1)) {
            left[v] = true;
            worst = worst.max(self.cut(&left));
        }
        worst
    }

    /// Minimum width over all `n!` orders (lexicographic enumeration).
    pub fn brute_force(&self) -> u64 {
        let mut order: Vec<usize> = (0..self.n).collect();
        let mut best = self.width_of(&order);
        while next_permutation(&mut order) {
            best = best.min(self.width_of(&order));
        }
        best
    }

    /// Minimum width by recursion over vertex subsets, recomputing each cut
    /// from scratch. Fine up to ~16 vertices.
    pub fn subset_min(&self) -> u64 {
        let n = self.n;
        assert!(n <= 20);
        let full = (1usize << n) - 1;
        let mut best = vec![0u64; 1 << n];
        for s in 1..=full {
            let left: Vec<bool> = (0..n).map(|v| s >> v & 1 == 1).collect();
            let here = if s == full { 0 } else { self.cut(&left) };
            let prior =
                (0..n).filter(|&v| left[v]).map(|v| best[s & !(1 << v)]).min().unwrap_or(0);
            best[s] = here.max(prior);
        }
        best[full]
    }

    /// Subgraph on `members` (0-based), relabelled by their position there.
    pub fn induced(&self, members: &[usize]) -> Plain {
        let local = |v: usize| members.iter().position(|&m| m == v);
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v, m)| Some((local(u)?, local(v)?, m)))
            .collect();
        Plain { n: members.len(), edges }
    }

    /// Quotient by `class_of`: one vertex per class, each edge occurrence
    /// between two classes counted once.
    pub fn quotient(&self, class_of: &[usize], classes: usize) -> Plain {
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v, _)| class_of[u] != class_of[v])
            .map(|&(u, v, m)| (class_of[u], class_of[v], m))
            .collect();
        Plain { n: classes, edges }
    }
}

pub fn is_permutation(order: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    order.len() == n && order.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
}

fn next_permutation(a: &mut [usize]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
        return false;
    };
    let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).expect("pivot exists");
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Strongly connected components from the transitive closure, each sorted,
/// listed by smallest member.
pub fn sccs(n: usize, arcs: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut reach = vec![vec![false; n]; n];
    for (v, row) in reach.iter_mut().enumerate() {
        row[v] = true;
    }
    for &(a, b) in arcs {
        reach[a][b] = true;
    }
    for k in 0..n {
        let via = reach[k].clone();
        for row in reach.iter_mut().filter(|row| row[k]) {
            for (cell, &r) in row.iter_mut().zip(&via) {
                *cell |= r;
            }
        }
    }
    let mut assigned = vec![false; n];
    let mut out = Vec::new();
    for v in 0..n {
        if !assigned[v] {
            let comp: Vec<usize> = (0..n).filter(|&w| reach[v][w] && reach[w][v]).collect();
            for &w in &comp {
                assigned[w] = true;
            }
            out.push(comp);
        }
    }
    out
}

/// External-edge blocks around one class: classes ahead of it are "before",
/// the class splits into `minus` then `plus`, classes behind it are "after".
#[derive(Default, Debug, Clone, Copy, PartialEq, Eq)]
pub struct Blocks {
    pub before_minus: u64,
    pub before_plus: u64,
    pub before_after: u64,
    pub minus_after: u64,
    pub plus_after: u64,
}

impl Blocks {
    pub fn forward(&self) -> u64 {
        self.before_plus + self.minus_after + self.before_after
    }

    pub fn reverse(&self) -> u64 {
        self.before_minus + self.plus_after + self.before_after
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Zone {
    Before,
    Minus,
    Plus,
    After,
}

/// Blocks for class `class` with its first `split` vertices (in
/// `class_order`) on the minus side.
pub fn blocks(
    g: &Plain,
    class_of: &[usize],
    class_rank: &[usize],
    class: usize,
    class_order: &[usize],
    split: usize,
) -> Blocks {
    let zone = |v: usize| {
        if class_of[v] == class {
            if class_order[..split].contains(&v) { Zone::Minus } else { Zone::Plus }
        } else if class_rank[class_of[v]] < class_rank[class] {
            Zone::Before
        } else {
            Zone::After
        }
    };
    let mut b = Blocks::default();
    for &(u, v, m) in &g.edges {
        let (mut p, mut q) = (zone(u), zone(v));
        let rank = |z: Zone| z as u8;
        if rank(p) > rank(q) {
            std::mem::swap(&mut p, &mut q);
        }
        match (p, q) {
            (Zone::Before, Zone::Minus) => b.before_minus += m,
            (Zone::Before, Zone::Plus) => b.before_plus += m,
            (Zone::Before, Zone::After) => b.before_after += m,
            (Zone::Minus, Zone::After) => b.minus_after += m,
            (Zone::Plus, Zone::After) => b.plus_after += m,
            _ => {}
        }
    }
    b
}
