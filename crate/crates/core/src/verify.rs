//! Property suites run by `cutwidth verify`.
//!
//! Every suite is deterministic given its seed. Each check reports the seed of
//! the first failing instance so it can be regenerated with `cutwidth gen`.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::compose::{audit_class, compose_simple, compose_theorem, optimal_orders};
use crate::generators::{
    gen_lower_g, gen_lower_h, gen_lower_k, gen_nolow_gn, gen_random, gen_random_occurrences,
    nolow_interleaved, LowerBoundParams,
};
use crate::graph::{Multigraph, Ordering, VertexId};
use crate::partition::{condensation, quotient_multigraph, scc_partition, VertexPartition};
use crate::solver::{exact_cutwidth, ordering_cutwidth, DEFAULT_BUDGET};
use crate::transforms::multiedge_subdivide;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Prop1,
    Thm1,
    Claim1,
    Claim2,
    Prop2,
    Prop3,
    Fig1,
    All,
}

impl Suite {
    pub const ALL: [Suite; 7] =
        [Suite::Claim1, Suite::Claim2, Suite::Fig1, Suite::Prop1, Suite::Prop2, Suite::Prop3, Suite::Thm1];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Prop1 => "prop1",
            Suite::Thm1 => "thm1",
            Suite::Claim1 => "claim1",
            Suite::Claim2 => "claim2",
            Suite::Prop2 => "prop2",
            Suite::Prop3 => "prop3",
            Suite::Fig1 => "fig1",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite '{s}'"))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Suite options; `None` picks the per-suite default.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyConfig {
    pub trials: Option<usize>,
    pub seed: u64,
    pub max_n: Option<usize>,
}


#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub instances: usize,
    /// Seed and description of the first failing instance.
    pub failure: Option<(u64, String)>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS {} instances={}", self.name, self.instances),
            Some((seed, detail)) => {
                write!(f, "FAIL {} instances={} seed={} {}", self.name, self.instances, seed, detail)
            }
        }
    }
}

struct Check {
    name: &'static str,
    instances: usize,
    failure: Option<(u64, String)>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check { name, instances: 0, failure: None }
    }

    fn record(&mut self, seed: u64, ok: bool, detail: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some((seed, detail()));
        }
    }

    fn report(self) -> CheckReport {
        CheckReport { name: self.name.to_string(), instances: self.instances, failure: self.failure }
    }
}

/// Runs `suite` and returns one report per check, sorted by check name.
pub fn run(suite: Suite, config: &VerifyConfig) -> Vec<CheckReport> {
    let mut reports = match suite {
        Suite::Prop1 => prop1(config),
        Suite::Thm1 => thm1(config),
        Suite::Claim1 => claim1(config),
        Suite::Claim2 => claim2(),
        Suite::Prop2 => prop2(),
        Suite::Prop3 => prop3(config),
        Suite::Fig1 => fig1(),
        Suite::All => Suite::ALL.iter().flat_map(|&s| run(s, config)).collect(),
    };
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    reports
}

/// Seed of trial `i` under base seed `seed`.
pub fn trial_seed(seed: u64, i: usize) -> u64 {
    seed.wrapping_mul(1_000_003).wrapping_add(i as u64)
}

fn width(g: &Multigraph) -> u64 {
    exact_cutwidth(&g.to_undirected()).expect("instance within solver budget").value
}

fn prop1(config: &VerifyConfig) -> Vec<CheckReport> {
    let trials = config.trials.unwrap_or(200);
    let max_n = config.max_n.unwrap_or(8).max(2);
    let mut invariance = Check::new("prop1/cutwidth-invariance");
    let mut insertion = Check::new("prop1/witness-insertion");
    let mut deletion = Check::new("prop1/witness-deletion");

    for i in 0..trials {
        let seed = trial_seed(config.seed, i);
        let (g, edge, count) = subdivision_instance(seed, max_n);
        let (h, step) = multiedge_subdivide(&g, edge, count).expect("valid subdivision");
        let before = exact_cutwidth(&g).expect("small instance");
        let after = exact_cutwidth(&h).expect("small instance");
        invariance.record(seed, before.value == after.value, || {
            format!("cutwidth {} became {}", before.value, after.value)
        });

        // Insert w anywhere strictly after u and no later than v.
        let mut seq = before.witness.as_slice().to_vec();
        let at = |s: &[VertexId], v| s.iter().position(|&x| x == v).expect("vertex in ordering");
        if at(&seq, step.edge.0) > at(&seq, step.edge.1) {
            seq.reverse();
        }
        let (a, b) = (at(&seq, step.edge.0), at(&seq, step.edge.1));
        let worst = (a + 1..=b)
            .map(|pos| {
                let mut s = seq.clone();
                s.insert(pos, step.fresh_vertex);
                ordering_cutwidth(&h, &Ordering::new(s, h.vertex_count()).expect("permutation"))
                    .expect("matching sizes")
            })
            .max()
            .unwrap_or(0);
        insertion.record(seed, worst <= before.value, || {
            format!("inserting the fresh vertex gave width {worst} > {}", before.value)
        });

        let dropped: Vec<_> =
            after.witness.as_slice().iter().copied().filter(|&v| v != step.fresh_vertex).collect();
        let dropped = Ordering::new(dropped, g.vertex_count()).expect("permutation");
        let w = ordering_cutwidth(&g, &dropped).expect("matching sizes");
        deletion.record(seed, w <= after.value, || {
            format!("deleting the fresh vertex gave width {w} > {}", after.value)
        });
    }
    vec![invariance.report(), insertion.report(), deletion.report()]
}

/// Random multigraph with at most 14 edge occurrences, plus a random edge and
/// occurrence count to subdivide.
pub fn subdivision_instance(seed: u64, max_n: usize) -> (Multigraph, (VertexId, VertexId), u32) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=max_n);
    let occurrences = rng.gen_range(1..=14);
    let g = gen_random_occurrences(seed, n, occurrences).expect("n >= 2");
    let e = g.edges()[rng.gen_range(0..g.edges().len())];
    let count = rng.gen_range(1..=e.multiplicity);
    (g, (e.u, e.v), count)
}

/// Parameters of a random `(graph, partition)` instance.
#[derive(Clone, Debug, PartialEq)]
pub struct InstanceParams {
    pub seed: u64,
    pub vertex_count: usize,
    pub max_multiplicity: u32,
    pub edge_density: f64,
    pub class_count: usize,
}

impl fmt::Display for InstanceParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(gen random --seed {} --n {} --max-mult {} --density {} --classes {})",
            self.seed, self.vertex_count, self.max_multiplicity, self.edge_density, self.class_count
        )
    }
}

pub fn partition_instance(seed: u64, max_n: usize) -> (InstanceParams, Multigraph, VertexPartition) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let vertex_count = rng.gen_range(1..=max_n);
    let params = InstanceParams {
        seed,
        vertex_count,
        max_multiplicity: rng.gen_range(1..=3),
        edge_density: f64::from(rng.gen_range(15u32..=80)) / 100.0,
        class_count: rng.gen_range(1..=vertex_count),
    };
    let (g, p) = gen_random(
        seed,
        params.vertex_count,
        params.max_multiplicity,
        params.edge_density,
        params.class_count,
    )
    .expect("valid parameters");
    (params, g, p)
}

fn thm1(config: &VerifyConfig) -> Vec<CheckReport> {
    let trials = config.trials.unwrap_or(300);
    let max_n = config.max_n.unwrap_or(12).max(1);
    let mut theorem = Check::new("thm1/theorem-certificate");
    let mut simple = Check::new("thm1/simple-certificate");
    let mut floor = Check::new("thm1/not-below-exact");
    for i in 0..trials {
        let seed = trial_seed(config.seed, i);
        let (params, g, p) = partition_instance(seed, max_n);
        let exact = width(&g);
        let (q, classes) = optimal_orders(&g, &p, DEFAULT_BUDGET).expect("small instance");
        match compose_theorem(&g, &p, &q, &classes) {
            Ok(cert) => {
                theorem.record(seed, 2 * cert.achieved <= 3 * cert.x + 2 * cert.y, || {
                    format!("{params} achieved {} x {} y {}", cert.achieved, cert.x, cert.y)
                });
                floor.record(seed, cert.achieved >= exact, || {
                    format!("{params} theorem ordering {} below exact {exact}", cert.achieved)
                });
            }
            Err(e) => theorem.record(seed, false, || format!("{params} {e}")),
        }
        match compose_simple(&g, &p, &q, &classes) {
            Ok(cert) => {
                simple.record(seed, cert.achieved <= 2 * cert.x + cert.y, || {
                    format!("{params} achieved {} x {} y {}", cert.achieved, cert.x, cert.y)
                });
                floor.record(seed, cert.achieved >= exact, || {
                    format!("{params} simple ordering {} below exact {exact}", cert.achieved)
                });
            }
            Err(e) => simple.record(seed, false, || format!("{params} {e}")),
        }
    }
    vec![theorem.report(), simple.report(), floor.report()]
}

fn claim1(config: &VerifyConfig) -> Vec<CheckReport> {
    let trials = config.trials.unwrap_or(300);
    let max_n = config.max_n.unwrap_or(12).max(1);
    let mut dichotomy = Check::new("claim1/dichotomy");
    let mut before = Check::new("claim1/cut-before-class");
    let mut after = Check::new("claim1/cut-after-class");
    let mut blocks = Check::new("claim1/block-partition");
    for i in 0..trials {
        let seed = trial_seed(config.seed, i);
        let (params, g, p) = partition_instance(seed, max_n);
        let (q, classes) = optimal_orders(&g, &p, DEFAULT_BUDGET).expect("small instance");
        let x = ordering_cutwidth(&quotient_multigraph(&g, &p).expect("partition"), &q)
            .expect("matching sizes");
        for (ci, order) in classes.iter().enumerate() {
            let a = audit_class(&g, &p, &q, ci, order, x).expect("consistent inputs");
            let ctx = || format!("{params} class {ci}");
            dichotomy.record(seed, a.forward_holds || a.reverse_holds, ctx);
            before.record(seed, a.before_cut_holds, ctx);
            after.record(seed, a.after_cut_holds, ctx);
            blocks.record(seed, a.partition_holds, ctx);
        }
    }
    vec![dichotomy.report(), before.report(), after.report(), blocks.report()]
}

fn claim2() -> Vec<CheckReport> {
    let mut check = Check::new("claim2/closed-form");
    for x in [2u32, 4, 6] {
        for y in 1u32..=9 {
            let expected = LowerBoundParams::new(x, y).expect("valid").closed_form_cutwidth();
            let got = width(&gen_lower_k(x, y).expect("valid"));
            check.record(0, got == expected, || format!("K(x={x}, y={y}) has {got}, want {expected}"));
        }
    }
    vec![check.report()]
}

fn prop2() -> Vec<CheckReport> {
    let mut check = Check::new("prop2/tightness");
    for (x, y) in [(2u32, 3u32), (2, 4), (4, 6)] {
        let (g, p) = gen_lower_g(x, y).expect("valid");
        let target = u64::from(3 * x / 2 + y);
        let exact = width(&g);
        let (q, classes) = optimal_orders(&g, &p, DEFAULT_BUDGET).expect("small");
        let ok = match compose_theorem(&g, &p, &q, &classes) {
            Ok(c) => c.achieved == target && exact == target,
            Err(_) => false,
        };
        check.record(0, ok, || format!("G(x={x}, y={y}) exact {exact}, want {target}"));
    }
    vec![check.report()]
}

fn prop3(config: &VerifyConfig) -> Vec<CheckReport> {
    let max_n = config.max_n.unwrap_or(8).max(3);
    let mut cond = Check::new("prop3/condensation-width");
    let mut scc = Check::new("prop3/scc-width");
    let mut interleaved = Check::new("prop3/interleaved-ordering");
    let mut exact = Check::new("prop3/exact-width");
    for n in 3..=max_n {
        let g = gen_nolow_gn(n).expect("n >= 3");
        let (c, p) = condensation(&g).expect("directed");
        let cw = width(&c);
        cond.record(n as u64, cw == n as u64, || format!("n={n}: condensation width {cw}"));
        let widths: Vec<u64> = p
            .classes()
            .iter()
            .map(|class| width(&g.induced_subgraph(class).expect("class").0))
            .collect();
        scc.record(n as u64, widths.iter().all(|&w| w == 2), || format!("n={n}: {widths:?}"));
        let und = g.to_undirected();
        let iw = ordering_cutwidth(&und, &nolow_interleaved(n)).expect("sizes");
        interleaved.record(n as u64, iw <= 5, || format!("n={n}: width {iw}"));
        let ew = width(&und);
        exact.record(n as u64, ew <= 5, || format!("n={n}: width {ew}"));
    }
    vec![cond.report(), scc.report(), interleaved.report(), exact.report()]
}

fn fig1() -> Vec<CheckReport> {
    let h = gen_lower_h(2, 3).expect("valid");
    let mut total = Check::new("fig1/cutwidth");
    let w = width(&h);
    total.record(0, w == 6, || format!("width {w}, want 6"));

    let mut scc = Check::new("fig1/max-scc-width");
    let p = scc_partition(&h).expect("directed");
    let max_scc = p
        .classes()
        .iter()
        .map(|class| width(&h.induced_subgraph(class).expect("class").0))
        .max()
        .unwrap_or(0);
    scc.record(0, max_scc == 3, || format!("max SCC width {max_scc}, want 3"));

    let mut cond = Check::new("fig1/condensation-width");
    let (c, _) = condensation(&h).expect("directed");
    let cw = width(&c);
    cond.record(0, cw == 2, || format!("condensation width {cw}, want 2"));
    vec![total.report(), scc.report(), cond.report()]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn small_runs_pass() {
        let config = VerifyConfig { trials: Some(10), seed: 3, max_n: None };
        for suite in [Suite::Prop1, Suite::Thm1, Suite::Claim1] {
            let reports = run(suite, &config);
            assert!(reports.iter().all(CheckReport::passed), "{reports:?}");
        }
    }

    #[test]
    fn reports_are_sorted() {
        let reports = run(Suite::Prop3, &VerifyConfig { max_n: Some(4), ..Default::default() });
        let names: Vec<_> = reports.iter().map(|r| r.name.clone()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
        assert!(reports[0].to_string().starts_with("PASS prop3/"));
    }
}
