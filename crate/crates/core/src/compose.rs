//! Partition-compatible orderings.
//!
//! An ordering of `G` is compatible with a partition `P` when it lists the
//! classes one after the other, following an ordering of the quotient `G/P`,
//! and orders each class internally. With `x` the cutwidth of the quotient
//! ordering and `y` the largest cutwidth of a class ordering:
//!
//! * keeping every class ordering as given yields width at most `2x + y`;
//! * flipping some classes, chosen per class by [`choose_orientation`], yields
//!   width at most `1.5x + y`.
//!
//! Every comparison against `1.5x` is done in integers as `2·lhs ≤ 3·x`.

use std::fmt;

use thiserror::Error;

use crate::graph::{GraphError, Multigraph, Ordering, VertexId};
use crate::partition::{quotient_multigraph, PartitionError, VertexPartition};
use crate::solver::{exact_cutwidth_with_budget, ordering_cutwidth, SolveError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComposeError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("orderings do not match the partition: {0}")]
    Mismatch(String),
    #[error("class index {index} out of range for {count} classes")]
    ClassOutOfRange { index: usize, count: usize },
    #[error(
        "class {class_index}: neither orientation keeps external crossings within 1.5x \
         (x = {x}, forward max {forward_max}, reverse max {reverse_max})"
    )]
    ClaimViolation { class_index: usize, x: u64, forward_max: u64, reverse_max: u64 },
    #[error("{kind} certificate violated: achieved {achieved} with x = {x}, y = {y}")]
    BoundViolation { kind: BoundKind, achieved: u64, x: u64, y: u64 },
}

/// Whether a class is laid out in its given order or reversed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassDirection {
    Forward,
    Reverse,
}

impl fmt::Display for ClassDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassDirection::Forward => "forward",
            ClassDirection::Reverse => "reverse",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundKind {
    Simple2xPlusY,
    Theorem1_5xPlusY,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::Simple2xPlusY => "simple_2x_plus_y",
            BoundKind::Theorem1_5xPlusY => "theorem_1_5x_plus_y",
        })
    }
}

/// Edge counts, with multiplicity, for a fixed class `C` split into `C−, C+`.
///
/// "Before" is the union of classes preceding `C` in the quotient ordering,
/// "after" the union of classes following it. The eight blocks partition the
/// edge multiset.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct EdgeDecomposition {
    pub before_before: u64,
    pub after_after: u64,
    pub internal: u64,
    pub before_minus: u64,
    pub plus_after: u64,
    pub before_plus: u64,
    pub minus_after: u64,
    pub before_after: u64,
}

impl EdgeDecomposition {
    pub fn total(&self) -> u64 {
        self.before_before
            + self.after_after
            + self.internal
            + self.before_minus
            + self.plus_after
            + self.before_plus
            + self.minus_after
            + self.before_after
    }

    /// External edges crossing the cut when `C` keeps its order.
    pub fn forward_crossing(&self) -> u64 {
        self.before_plus + self.minus_after + self.before_after
    }

    /// External edges crossing the cut when `C` is reversed.
    pub fn reverse_crossing(&self) -> u64 {
        self.before_minus + self.plus_after + self.before_after
    }

    /// Edges crossing the quotient cut just before `C`.
    pub fn cut_before_class(&self) -> u64 {
        self.before_minus + self.before_plus + self.before_after
    }

    /// Edges crossing the quotient cut just after `C`.
    pub fn cut_after_class(&self) -> u64 {
        self.minus_after + self.plus_after + self.before_after
    }
}

/// Result of the per-class orientation test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OrientationChoice {
    pub direction: ClassDirection,
    /// Largest forward external crossing over prefix cuts with `C+` nonempty.
    pub forward_max: u64,
    /// Largest reverse external crossing over all prefix cuts.
    pub reverse_max: u64,
}

/// Both halves of the orientation dichotomy for one class, evaluated over
/// every prefix cut of the class ordering, plus the quotient-cut identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ClassAudit {
    pub forward_holds: bool,
    pub reverse_holds: bool,
    pub before_cut_holds: bool,
    pub after_cut_holds: bool,
    pub partition_holds: bool,
}

impl ClassAudit {
    pub fn all_ok(&self) -> bool {
        (self.forward_holds || self.reverse_holds)
            && self.before_cut_holds
            && self.after_cut_holds
            && self.partition_holds
    }
}

/// An ordering of `G` with the quantities that bound its width.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundCertificate {
    pub ordering: Ordering,
    pub achieved: u64,
    pub x: u64,
    pub y: u64,
    pub kind: BoundKind,
    pub directions: Vec<ClassDirection>,
    /// Per-class orientation tests; empty for the simple construction.
    pub choices: Vec<OrientationChoice>,
}

impl BoundCertificate {
    /// Twice the guaranteed bound, so that `1.5x + y` stays integral.
    pub fn bound_doubled(&self) -> u64 {
        match self.kind {
            BoundKind::Simple2xPlusY => 2 * (2 * self.x + self.y),
            BoundKind::Theorem1_5xPlusY => 3 * self.x + 2 * self.y,
        }
    }

    pub fn holds(&self) -> bool {
        2 * self.achieved <= self.bound_doubled()
    }

    /// The bound as a decimal string (`"6"`, `"7.5"`).
    pub fn bound_display(&self) -> String {
        let d = self.bound_doubled();
        if d.is_multiple_of(2) {
            (d / 2).to_string()
        } else {
            format!("{}.5", d / 2)
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Before,
    Minus,
    Plus,
    After,
}

/// Shared view of `(G, P, quotient ordering)`.
struct Layout<'a> {
    g: Multigraph,
    p: &'a VertexPartition,
    class_rank: Vec<usize>,
}

impl<'a> Layout<'a> {
    fn new(
        g: &Multigraph,
        p: &'a VertexPartition,
        quotient_ord: &Ordering,
    ) -> Result<Self, ComposeError> {
        p.check_against(g)?;
        if quotient_ord.len() != p.class_count() {
            return Err(ComposeError::Mismatch(format!(
                "quotient ordering has {} entries for {} classes",
                quotient_ord.len(),
                p.class_count()
            )));
        }
        Ok(Layout { g: g.to_undirected(), p, class_rank: quotient_ord.positions() })
    }

    fn check_class(&self, index: usize) -> Result<(), ComposeError> {
        if index >= self.p.class_count() {
            return Err(ComposeError::ClassOutOfRange { index, count: self.p.class_count() });
        }
        Ok(())
    }

    /// Validates that `order` permutes class `index`.
    fn check_class_order(&self, index: usize, order: &[VertexId]) -> Result<(), ComposeError> {
        let class = &self.p.classes()[index];
        let mut sorted = order.to_vec();
        sorted.sort_unstable();
        if sorted != *class {
            return Err(ComposeError::Mismatch(format!(
                "ordering for class {index} is not a permutation of that class"
            )));
        }
        Ok(())
    }

    fn sides(&self, class_index: usize, minus: &[VertexId]) -> Vec<Side> {
        let rank = self.class_rank[class_index];
        let mut sides: Vec<Side> = (0..self.g.vertex_count())
            .map(|i| {
                let r = self.class_rank[self.p.class_of(VertexId::from_index(i))];
                match r.cmp(&rank) {
                    std::cmp::Ordering::Less => Side::Before,
                    std::cmp::Ordering::Equal => Side::Plus,
                    std::cmp::Ordering::Greater => Side::After,
                }
            })
            .collect();
        for v in minus {
            sides[v.index()] = Side::Minus;
        }
        sides
    }

    fn decompose(&self, sides: &[Side]) -> EdgeDecomposition {
        use Side::*;
        let mut d = EdgeDecomposition::default();
        for e in self.g.edges() {
            let m = u64::from(e.multiplicity);
            let (a, b) = (sides[e.u.index()], sides[e.v.index()]);
            let slot = match (a, b) {
                (Before, Before) => &mut d.before_before,
                (After, After) => &mut d.after_after,
                (Minus | Plus, Minus | Plus) => &mut d.internal,
                (Before, Minus) | (Minus, Before) => &mut d.before_minus,
                (Plus, After) | (After, Plus) => &mut d.plus_after,
                (Before, Plus) | (Plus, Before) => &mut d.before_plus,
                (Minus, After) | (After, Minus) => &mut d.minus_after,
                (Before, After) | (After, Before) => &mut d.before_after,
            };
            *slot += m;
        }
        d
    }

    /// Decompositions for the prefix cuts of `order`: entry `i` has the first
    /// `i` vertices in `C−`, for `i` in `0..=|C|`.
    fn prefix_decompositions(&self, class_index: usize, order: &[VertexId]) -> Vec<EdgeDecomposition> {
        let mut sides = self.sides(class_index, &[]);
        let mut out = Vec::with_capacity(order.len() + 1);
        out.push(self.decompose(&sides));
        for v in order {
            sides[v.index()] = Side::Minus;
            out.push(self.decompose(&sides));
        }
        out
    }

    fn quotient_width(&self, quotient_ord: &Ordering) -> Result<u64, ComposeError> {
        let q = quotient_multigraph(&self.g, self.p)?;
        Ok(ordering_cutwidth(&q, quotient_ord)?)
    }

    fn class_width(&self, index: usize, order: &[VertexId]) -> Result<u64, ComposeError> {
        let (sub, id_map) = self.g.induced_subgraph(&self.p.classes()[index])?;
        let mut local = vec![0usize; self.g.vertex_count()];
        for (i, v) in id_map.iter().enumerate() {
            local[v.index()] = i;
        }
        let seq = order.iter().map(|v| VertexId::from_index(local[v.index()])).collect();
        Ok(ordering_cutwidth(&sub, &Ordering::new(seq, sub.vertex_count())?)?)
    }
}

/// Concatenates the classes in quotient order, each laid out per its
/// ordering and direction.
pub fn compose_compatible(
    g: &Multigraph,
    p: &VertexPartition,
    quotient_ord: &Ordering,
    class_ords: &[Vec<VertexId>],
    directions: &[ClassDirection],
) -> Result<Ordering, ComposeError> {
    let layout = Layout::new(g, p, quotient_ord)?;
    check_class_orders(&layout, class_ords)?;
    if directions.len() != p.class_count() {
        return Err(ComposeError::Mismatch(format!(
            "{} directions for {} classes",
            directions.len(),
            p.class_count()
        )));
    }
    Ok(concatenate(g, quotient_ord, class_ords, directions)?)
}

fn check_class_orders(layout: &Layout<'_>, class_ords: &[Vec<VertexId>]) -> Result<(), ComposeError> {
    if class_ords.len() != layout.p.class_count() {
        return Err(ComposeError::Mismatch(format!(
            "{} class orderings for {} classes",
            class_ords.len(),
            layout.p.class_count()
        )));
    }
    for (i, order) in class_ords.iter().enumerate() {
        layout.check_class_order(i, order)?;
    }
    Ok(())
}

fn concatenate(
    g: &Multigraph,
    quotient_ord: &Ordering,
    class_ords: &[Vec<VertexId>],
    directions: &[ClassDirection],
) -> Result<Ordering, GraphError> {
    let mut seq = Vec::with_capacity(g.vertex_count());
    for class_vertex in quotient_ord.as_slice() {
        let i = class_vertex.index();
        match directions[i] {
            ClassDirection::Forward => seq.extend(class_ords[i].iter().copied()),
            ClassDirection::Reverse => seq.extend(class_ords[i].iter().rev().copied()),
        }
    }
    Ordering::new(seq, g.vertex_count())
}

/// The eight-block edge decomposition for class `class_index` split into
/// `minus` and `plus`.
pub fn class_edge_decomposition(
    g: &Multigraph,
    p: &VertexPartition,
    quotient_ord: &Ordering,
    class_index: usize,
    minus: &[VertexId],
    plus: &[VertexId],
) -> Result<EdgeDecomposition, ComposeError> {
    let layout = Layout::new(g, p, quotient_ord)?;
    layout.check_class(class_index)?;
    let mut split: Vec<VertexId> = minus.iter().chain(plus).copied().collect();
    split.sort_unstable();
    if split != p.classes()[class_index] {
        return Err(ComposeError::Mismatch(format!(
            "minus and plus do not partition class {class_index}"
        )));
    }
    Ok(layout.decompose(&layout.sides(class_index, minus)))
}

/// Decides whether class `class_index` keeps `class_ord` or is reversed.
///
/// `x` must be the cutwidth of `quotient_ord` on the quotient. Forward wins
/// ties. Fails with [`ComposeError::ClaimViolation`] if neither direction
/// keeps every external crossing within `1.5x`.
pub fn choose_orientation(
    g: &Multigraph,
    p: &VertexPartition,
    quotient_ord: &Ordering,
    class_index: usize,
    class_ord: &[VertexId],
    x: u64,
) -> Result<OrientationChoice, ComposeError> {
    let layout = Layout::new(g, p, quotient_ord)?;
    layout.check_class(class_index)?;
    layout.check_class_order(class_index, class_ord)?;
    orientation_from(&layout, class_index, class_ord, x)
}

fn orientation_from(
    layout: &Layout<'_>,
    class_index: usize,
    class_ord: &[VertexId],
    x: u64,
) -> Result<OrientationChoice, ComposeError> {
    let cuts = layout.prefix_decompositions(class_index, class_ord);
    // The cut with all of C on the left is excluded: C+ must be nonempty.
    let forward_max = cuts[..cuts.len() - 1]
        .iter()
        .map(EdgeDecomposition::forward_crossing)
        .max()
        .unwrap_or(0);
    let reverse_max = cuts.iter().map(EdgeDecomposition::reverse_crossing).max().unwrap_or(0);
    let direction = if 2 * forward_max <= 3 * x {
        ClassDirection::Forward
    } else if 2 * reverse_max <= 3 * x {
        ClassDirection::Reverse
    } else {
        return Err(ComposeError::ClaimViolation { class_index, x, forward_max, reverse_max });
    };
    Ok(OrientationChoice { direction, forward_max, reverse_max })
}

/// Evaluates both orientation inequalities over every prefix cut of
/// `class_ord`, along with the quotient-cut bounds before and after the
/// class and the eight-block total.
pub fn audit_class(
    g: &Multigraph,
    p: &VertexPartition,
    quotient_ord: &Ordering,
    class_index: usize,
    class_ord: &[VertexId],
    x: u64,
) -> Result<ClassAudit, ComposeError> {
    let layout = Layout::new(g, p, quotient_ord)?;
    layout.check_class(class_index)?;
    layout.check_class_order(class_index, class_ord)?;
    let cuts = layout.prefix_decompositions(class_index, class_ord);
    let total = layout.g.total_multiplicity();
    Ok(ClassAudit {
        forward_holds: cuts.iter().all(|d| 2 * d.forward_crossing() <= 3 * x),
        reverse_holds: cuts.iter().all(|d| 2 * d.reverse_crossing() <= 3 * x),
        before_cut_holds: cuts.iter().all(|d| d.cut_before_class() <= x),
        after_cut_holds: cuts.iter().all(|d| d.cut_after_class() <= x),
        partition_holds: cuts.iter().all(|d| d.total() == total),
    })
}

/// Keeps every class ordering as given; width is at most `2x + y`.
pub fn compose_simple(
    g: &Multigraph,
    p: &VertexPartition,
    quotient_ord: &Ordering,
    class_ords: &[Vec<VertexId>],
) -> Result<BoundCertificate, ComposeError> {
    let layout = Layout::new(g, p, quotient_ord)?;
    check_class_orders(&layout, class_ords)?;
    let directions = vec![ClassDirection::Forward; p.class_count()];
    certify(&layout, quotient_ord, class_ords, directions, Vec::new(), BoundKind::Simple2xPlusY)
}

/// Reverses classes where needed; width is at most `1.5x + y`.
pub fn compose_theorem(
    g: &Multigraph,
    p: &VertexPartition,
    quotient_ord: &Ordering,
    class_ords: &[Vec<VertexId>],
) -> Result<BoundCertificate, ComposeError> {
    let layout = Layout::new(g, p, quotient_ord)?;
    check_class_orders(&layout, class_ords)?;
    let x = layout.quotient_width(quotient_ord)?;
    let choices = class_ords
        .iter()
        .enumerate()
        .map(|(i, order)| orientation_from(&layout, i, order, x))
        .collect::<Result<Vec<_>, _>>()?;
    let directions = choices.iter().map(|c| c.direction).collect();
    certify(&layout, quotient_ord, class_ords, directions, choices, BoundKind::Theorem1_5xPlusY)
}

fn certify(
    layout: &Layout<'_>,
    quotient_ord: &Ordering,
    class_ords: &[Vec<VertexId>],
    directions: Vec<ClassDirection>,
    choices: Vec<OrientationChoice>,
    kind: BoundKind,
) -> Result<BoundCertificate, ComposeError> {
    let x = layout.quotient_width(quotient_ord)?;
    let mut y = 0;
    for (i, order) in class_ords.iter().enumerate() {
        y = y.max(layout.class_width(i, order)?);
    }
    let ordering = concatenate(&layout.g, quotient_ord, class_ords, &directions)?;
    let achieved = ordering_cutwidth(&layout.g, &ordering)?;
    let cert = BoundCertificate { ordering, achieved, x, y, kind, directions, choices };
    if !cert.holds() {
        return Err(ComposeError::BoundViolation { kind, achieved, x, y });
    }
    Ok(cert)
}

/// Optimal quotient ordering and optimal per-class orderings from the exact
/// solver. Class orderings use the original vertex ids.
pub fn optimal_orders(
    g: &Multigraph,
    p: &VertexPartition,
    budget: usize,
) -> Result<(Ordering, Vec<Vec<VertexId>>), ComposeError> {
    p.check_against(g)?;
    let und = g.to_undirected();
    let q = quotient_multigraph(&und, p)?;
    let quotient_ord = exact_cutwidth_with_budget(&q, budget)?.witness;
    let mut class_ords = Vec::with_capacity(p.class_count());
    for class in p.classes() {
        let (sub, id_map) = und.induced_subgraph(class)?;
        let witness = exact_cutwidth_with_budget(&sub, budget)?.witness;
        class_ords.push(witness.as_slice().iter().map(|v| id_map[v.index()]).collect());
    }
    Ok((quotient_ord, class_ords))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{ids, Orientation};
    use crate::solver::exact_cutwidth;

    fn g23() -> (Multigraph, VertexPartition) {
        let g = Multigraph::from_edge_list(
            Orientation::Undirected,
            5,
            [(1, 3, 2), (2, 5, 1), (4, 5, 1), (2, 3, 3), (3, 4, 3)],
        )
        .unwrap();
        let p = VertexPartition::from_ids(5, &[vec![1], vec![5], vec![2, 3, 4]]).unwrap();
        (g, p)
    }

    // Classes are {1}, {5}, {2,3,4}: quotient vertices 1, 2, 3.
    fn natural_quotient() -> Ordering {
        Ordering::from_ids(&[1, 3, 2], 3).unwrap()
    }

    fn natural_class_ords() -> Vec<Vec<VertexId>> {
        vec![ids(&[1]), ids(&[5]), ids(&[2, 3, 4])]
    }

    #[test]
    fn compose_forward_and_reversed() {
        let (g, p) = g23();
        let fwd = vec![ClassDirection::Forward; 3];
        let ord = compose_compatible(&g, &p, &natural_quotient(), &natural_class_ords(), &fwd)
            .unwrap();
        assert_eq!(ord.as_slice(), &ids(&[1, 2, 3, 4, 5])[..]);
        let mut dirs = fwd.clone();
        dirs[2] = ClassDirection::Reverse;
        let ord = compose_compatible(&g, &p, &natural_quotient(), &natural_class_ords(), &dirs)
            .unwrap();
        assert_eq!(ord.as_slice(), &ids(&[1, 4, 3, 2, 5])[..]);
    }

    #[test]
    fn singleton_partition_follows_quotient() {
        let (g, _) = g23();
        let p = VertexPartition::singletons(5);
        let q = Ordering::from_ids(&[3, 1, 5, 2, 4], 5).unwrap();
        let class_ords: Vec<_> = (1..=5).map(|i| ids(&[i])).collect();
        let ord = compose_compatible(&g, &p, &q, &class_ords, &[ClassDirection::Forward; 5])
            .unwrap();
        assert_eq!(ord, q);
    }

    #[test]
    fn decomposition_of_fig3_cut() {
        let (g, p) = g23();
        let d = class_edge_decomposition(&g, &p, &natural_quotient(), 2, &ids(&[2]), &ids(&[3, 4]))
            .unwrap();
        assert_eq!(
            d,
            EdgeDecomposition {
                before_before: 0,
                after_after: 0,
                internal: 6,
                before_minus: 0,
                plus_after: 1,
                before_plus: 2,
                minus_after: 1,
                before_after: 0,
            }
        );
        assert_eq!(d.total(), g.total_multiplicity());

        let empty = class_edge_decomposition(&g, &p, &natural_quotient(), 2, &[], &ids(&[2, 3, 4]))
            .unwrap();
        assert_eq!(empty.before_minus, 0);
        assert_eq!(empty.minus_after, 0);

        assert!(class_edge_decomposition(&g, &p, &natural_quotient(), 2, &ids(&[2]), &ids(&[3]))
            .is_err());
        assert!(matches!(
            class_edge_decomposition(&g, &p, &natural_quotient(), 3, &[], &[]),
            Err(ComposeError::ClassOutOfRange { .. })
        ));
    }

    #[test]
    fn fig3_orientation_is_forward() {
        let (g, p) = g23();
        let c = choose_orientation(&g, &p, &natural_quotient(), 2, &ids(&[2, 3, 4]), 2).unwrap();
        assert_eq!(c.forward_max, 3);
        assert_eq!(c.direction, ClassDirection::Forward);
    }

    #[test]
    fn reversal_when_forward_overflows() {
        // Class {2,3} between {1} and {4}. Edges 1-3 and 2-4 (x = 2 on the
        // quotient path) make the forward cut after vertex 2 cross both.
        let g = Multigraph::from_edge_list(Orientation::Undirected, 4, [(1, 3, 2), (2, 4, 2), (2, 3, 1)])
            .unwrap();
        let p = VertexPartition::from_ids(4, &[vec![1], vec![2, 3], vec![4]]).unwrap();
        let q = Ordering::from_ids(&[1, 2, 3], 3).unwrap();
        let class_ords = vec![ids(&[1]), ids(&[2, 3]), ids(&[4])];
        let c = choose_orientation(&g, &p, &q, 1, &class_ords[1], 2).unwrap();
        assert_eq!(c.forward_max, 4);
        assert_eq!(c.direction, ClassDirection::Reverse);
        assert!(2 * c.reverse_max <= 3 * 2);

        let cert = compose_theorem(&g, &p, &q, &class_ords).unwrap();
        assert_eq!(cert.ordering.as_slice(), &ids(&[1, 3, 2, 4])[..]);
        assert_eq!((cert.x, cert.y), (2, 1));
        assert_eq!(cert.achieved, 2);
        let simple = compose_simple(&g, &p, &q, &class_ords).unwrap();
        assert_eq!(simple.achieved, 5);
        assert!(simple.holds());
    }

    #[test]
    fn understated_x_is_rejected() {
        let (g, p) = g23();
        let err = choose_orientation(&g, &p, &natural_quotient(), 2, &ids(&[2, 3, 4]), 1);
        assert!(matches!(err, Err(ComposeError::ClaimViolation { .. })));
    }

    #[test]
    fn simple_and_theorem_on_fig3() {
        let (g, p) = g23();
        let s = compose_simple(&g, &p, &natural_quotient(), &natural_class_ords()).unwrap();
        assert_eq!((s.achieved, s.x, s.y), (6, 2, 3));
        assert!(s.achieved <= 2 * 2 + 3);
        let t = compose_theorem(&g, &p, &natural_quotient(), &natural_class_ords()).unwrap();
        assert_eq!((t.achieved, t.x, t.y), (6, 2, 3));
        assert_eq!(t.bound_display(), "6");
        assert_eq!(exact_cutwidth(&g).unwrap().value, 6);
    }

    #[test]
    fn trivial_partitions() {
        let (g, _) = g23();
        let opt = exact_cutwidth(&g).unwrap();
        let whole = VertexPartition::whole(5);
        let cert = compose_simple(
            &g,
            &whole,
            &Ordering::identity(1),
            &[opt.witness.as_slice().to_vec()],
        )
        .unwrap();
        assert_eq!((cert.achieved, cert.x), (opt.value, 0));

        let single = VertexPartition::singletons(5);
        let class_ords: Vec<_> = (1..=5).map(|i| ids(&[i])).collect();
        let cert = compose_theorem(&g, &single, &opt.witness, &class_ords).unwrap();
        assert_eq!((cert.achieved, cert.y), (opt.value, 0));
        assert_eq!(cert.achieved, cert.x);
    }

    #[test]
    fn mismatched_inputs() {
        let (g, p) = g23();
        let bad = vec![ids(&[1]), ids(&[5]), ids(&[2, 3])];
        assert!(matches!(
            compose_simple(&g, &p, &natural_quotient(), &bad),
            Err(ComposeError::Mismatch(_))
        ));
        assert!(compose_simple(&g, &p, &Ordering::identity(2), &natural_class_ords()).is_err());
        assert!(compose_compatible(
            &g,
            &p,
            &natural_quotient(),
            &natural_class_ords(),
            &[ClassDirection::Forward]
        )
        .is_err());
    }

    #[test]
    fn optimal_orders_on_fig3() {
        let (g, p) = g23();
        let (q, classes) = optimal_orders(&g, &p, 20).unwrap();
        let cert = compose_theorem(&g, &p, &q, &classes).unwrap();
        assert_eq!((cert.x, cert.y, cert.achieved), (2, 3, 6));
    }

    #[test]
    fn odd_bound_display() {
        let cert = BoundCertificate {
            ordering: Ordering::identity(0),
            achieved: 0,
            x: 3,
            y: 1,
            kind: BoundKind::Theorem1_5xPlusY,
            directions: vec![],
            choices: vec![],
        };
        assert_eq!(cert.bound_display(), "5.5");
    }
}
