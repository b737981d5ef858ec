//! The verification driver: per-graph invariants and the registered theorem
//! check suite, evaluated deterministically across any worker count.

use rayon::prelude::*;
use serde::Serialize;

use total_forcing::construct::{
    packing_tf, tf_add_vertex_back, tf_delete_vertex, tf_doubling, tf_from_dominating,
    tf_from_power_dominating, tf_from_total_dominating, PackingTfOptions,
};
use total_forcing::forcing::{forcing_closure, is_power_dominating};
use total_forcing::gadget::{build_gadget, lift_forcing_set, project_tf_set};
use total_forcing::graph6::write_graph6;
use total_forcing::solve::{all_min_tf_sets, min_domination, min_forcing};
use total_forcing::{
    classify_set, ConstructError, DominationVariant, ForcingVariant, Graph, SolveError,
    SolverLimits, VertexSet,
};

/// Exhaustive-search cutoff for the subset-quantified checks
/// (`power_lemma` and the perfect-dominating-set equality directions).
const SUBSET_CHECK_MAX_N: usize = 12;

/// Order cutoff for `gadget_budget`, which solves a 4n-vertex instance.
const GADGET_CHECK_MAX_N: usize = 5;

/// One row of computed invariants for a graph.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantRow {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub f: usize,
    pub ft: Option<usize>,
    pub fc: Option<usize>,
    pub gamma: usize,
    pub gamma_t: Option<usize>,
    pub gamma_c: Option<usize>,
    pub gamma_2: usize,
    pub gamma_p: usize,
    /// Size of the certified packing-construction TF-set, when applicable.
    pub packing_tf_size: Option<usize>,
    /// Size of the doubling-construction TF-set, when applicable.
    pub doubling_size: Option<usize>,
}

fn feasible(r: Result<total_forcing::SolveResult, SolveError>) -> Result<Option<usize>, SolveError> {
    match r {
        Ok(r) => Ok(Some(r.value)),
        Err(SolveError::Infeasible { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Compute the full invariant row for one graph.
pub fn compute_invariants(g: &Graph, limits: &SolverLimits) -> Result<InvariantRow, SolveError> {
    let f = min_forcing(g, ForcingVariant::Plain, limits)?.value;
    let ft = feasible(min_forcing(g, ForcingVariant::Total, limits))?;
    let fc = feasible(min_forcing(g, ForcingVariant::Connected, limits))?;
    let gamma = min_domination(g, DominationVariant::Plain, limits)?.value;
    let gamma_t = feasible(min_domination(g, DominationVariant::Total, limits))?;
    let gamma_c = feasible(min_domination(g, DominationVariant::Connected, limits))?;
    let gamma_2 = min_domination(g, DominationVariant::TwoStep, limits)?.value;
    let gamma_p = min_domination(g, DominationVariant::Power, limits)?.value;
    let packing_tf_size = if g.is_connected() && g.n() >= 3 {
        let opts = PackingTfOptions {
            limits: *limits,
            ..PackingTfOptions::default()
        };
        packing_tf(g, &opts).ok().map(|c| c.tf_set.len())
    } else {
        None
    };
    let doubling_size = if g.is_isolate_free() {
        let w = min_forcing(g, ForcingVariant::Plain, limits)?.witness;
        tf_doubling(g, &w).ok().map(|c| c.tf_set.len())
    } else {
        None
    };
    Ok(InvariantRow {
        graph6: write_graph6(g),
        n: g.n(),
        m: g.m(),
        max_degree: g.max_degree(),
        min_degree: g.min_degree(),
        f,
        ft,
        fc,
        gamma,
        gamma_t,
        gamma_c,
        gamma_2,
        gamma_p,
        packing_tf_size,
        doubling_size,
    })
}

/// Outcome of one check on one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    /// The graph does not satisfy the check's hypotheses.
    Skip,
}

/// Every registered check, in report order.
pub const CHECKS: &[&str] = &[
    "chain_forcing",
    "chain_domination",
    "tf_ge_2",
    "tf_le_2f",
    "tf_le_nminus1_connected",
    "extremal_nminus1",
    "leaf_lemma",
    "gamma_delta",
    "gammat_delta",
    "two_dom_sum",
    "power_lemma",
    "power_upper",
    "power_lower",
    "vertex_removal",
    "leaf_removal",
    "upper_main",
    "upper_main_equality",
    "construction_validity",
    "gadget_budget",
];

/// Evaluate one named check.
pub fn run_check(id: &str, g: &Graph, inv: &InvariantRow, limits: &SolverLimits) -> Outcome {
    match id {
        "chain_forcing" => chain_forcing(g, inv),
        "chain_domination" => chain_domination(g, inv),
        "tf_ge_2" => tf_ge_2(g, inv),
        "tf_le_2f" => tf_le_2f(g, inv),
        "tf_le_nminus1_connected" => tf_le_nminus1_connected(g, inv),
        "extremal_nminus1" => extremal_nminus1(g, inv),
        "leaf_lemma" => leaf_lemma(g, limits),
        "gamma_delta" => gamma_delta(g, inv),
        "gammat_delta" => gammat_delta(g, inv),
        "two_dom_sum" => two_dom_sum(g, inv),
        "power_lemma" => power_lemma(g),
        "power_upper" => power_upper(g, inv),
        "power_lower" => power_lower(g, inv),
        "vertex_removal" => vertex_removal(g, inv, limits),
        "leaf_removal" => leaf_removal(g, inv, limits),
        "upper_main" => upper_main(g, inv),
        "upper_main_equality" => upper_main_equality(g, inv),
        "construction_validity" => construction_validity(g, inv, limits),
        "gadget_budget" => gadget_budget(g, inv, limits),
        other => Outcome::Fail(format!("unknown check id: {other}")),
    }
}

fn fail(msg: String) -> Outcome {
    Outcome::Fail(msg)
}

fn chain_forcing(g: &Graph, inv: &InvariantRow) -> Outcome {
    // stated for connected non-path graphs
    if !g.is_connected() || g.is_path_graph() {
        return Outcome::Skip;
    }
    let (Some(ft), Some(fc)) = (inv.ft, inv.fc) else {
        return Outcome::Skip;
    };
    if inv.gamma_p <= inv.f && inv.f <= ft && ft <= fc {
        Outcome::Pass
    } else {
        fail(format!(
            "chain gamma_p={} f={} ft={ft} fc={fc} broken",
            inv.gamma_p, inv.f
        ))
    }
}

fn chain_domination(g: &Graph, inv: &InvariantRow) -> Outcome {
    // stated for connected graphs of order >= 3 with gamma_c >= 2
    let Some(gc) = inv.gamma_c else {
        return Outcome::Skip;
    };
    if !g.is_connected() || g.n() < 3 || gc < 2 {
        return Outcome::Skip;
    }
    let gt = inv.gamma_t.expect("connected n >= 3 is isolate-free");
    if inv.gamma_p <= inv.gamma && inv.gamma <= gt && gt <= gc {
        Outcome::Pass
    } else {
        fail(format!(
            "chain gamma_p={} gamma={} gamma_t={gt} gamma_c={gc} broken",
            inv.gamma_p, inv.gamma
        ))
    }
}

fn tf_ge_2(g: &Graph, inv: &InvariantRow) -> Outcome {
    match (g.is_isolate_free(), inv.ft) {
        (true, Some(ft)) if ft >= 2 => Outcome::Pass,
        (true, ft) => fail(format!("ft={ft:?} below 2")),
        (false, _) => Outcome::Skip,
    }
}

fn tf_le_2f(g: &Graph, inv: &InvariantRow) -> Outcome {
    match (g.is_isolate_free(), inv.ft) {
        (true, Some(ft)) if ft <= 2 * inv.f => Outcome::Pass,
        (true, ft) => fail(format!("ft={ft:?} exceeds 2f={}", 2 * inv.f)),
        (false, _) => Outcome::Skip,
    }
}

fn tf_le_nminus1_connected(g: &Graph, inv: &InvariantRow) -> Outcome {
    // the bound is often stated for isolate-free graphs, but it fails on
    // 2K_2; checked with the connectivity amendment
    if !g.is_connected() || g.n() < 3 {
        return Outcome::Skip;
    }
    let ft = inv.ft.expect("connected n >= 3 is isolate-free");
    if ft <= g.n() - 1 {
        Outcome::Pass
    } else {
        fail(format!("ft={ft} exceeds n-1={}", g.n() - 1))
    }
}

fn extremal_nminus1(g: &Graph, inv: &InvariantRow) -> Outcome {
    if !g.is_connected() || g.n() < 3 {
        return Outcome::Skip;
    }
    let ft = inv.ft.expect("connected n >= 3 is isolate-free");
    let extremal = ft == g.n() - 1;
    let characterized = g.is_complete() || g.is_star();
    if extremal == characterized {
        Outcome::Pass
    } else {
        fail(format!(
            "ft={ft} vs n-1: extremal={extremal} but complete-or-star={characterized}"
        ))
    }
}

fn leaf_lemma(g: &Graph, limits: &SolverLimits) -> Outcome {
    if !g.is_isolate_free() {
        return Outcome::Skip;
    }
    let supports: Vec<usize> = g
        .vertices()
        .filter(|&v| g.leaf_neighbors(v).len() >= 2)
        .collect();
    if supports.is_empty() {
        return Outcome::Skip;
    }
    let Ok(r) = all_min_tf_sets(g, limits) else {
        return Outcome::Skip;
    };
    for s in r.all_witnesses.expect("enumeration requested") {
        for &v in &supports {
            if !s.contains(v) {
                return fail(format!("support {v} absent from minimum TF-set {s:?}"));
            }
            let missing = g.leaf_neighbors(v).difference(&s).len();
            if missing > 1 {
                return fail(format!(
                    "{missing} leaves of support {v} absent from minimum TF-set {s:?}"
                ));
            }
        }
    }
    Outcome::Pass
}

/// Is there a perfect packing (perfect dominating set) whose members all
/// have degree Delta?
fn has_perfect_dominating_all_delta(g: &Graph) -> Option<bool> {
    let n = g.n();
    if n > SUBSET_CHECK_MAX_N {
        return None;
    }
    let delta = g.max_degree();
    Some((0u64..1 << n).any(|mask| {
        let s = VertexSet::from_mask(n, mask);
        s.iter().all(|v| g.degree(v) == delta) && g.is_perfect_packing(&s)
    }))
}

/// Is there a set S with every vertex having exactly one neighbor in S,
/// all members of degree Delta?
fn has_perfect_total_dominating_all_delta(g: &Graph) -> Option<bool> {
    let n = g.n();
    if n > SUBSET_CHECK_MAX_N {
        return None;
    }
    let delta = g.max_degree();
    Some((0u64..1 << n).any(|mask| {
        let s = VertexSet::from_mask(n, mask);
        s.iter().all(|v| g.degree(v) == delta)
            && g.vertices().all(|v| g.neighbors(v).intersection(&s).len() == 1)
    }))
}

fn gamma_delta(g: &Graph, inv: &InvariantRow) -> Outcome {
    if g.min_degree() < 3 {
        return Outcome::Skip;
    }
    let ft = inv.ft.expect("min degree 3 is isolate-free");
    let bound = inv.gamma * inv.max_degree;
    if ft > bound {
        return fail(format!("ft={ft} exceeds gamma*delta={bound}"));
    }
    // equality direction: equality forces a perfect dominating set of
    // maximum-degree vertices
    if ft == bound {
        if let Some(false) = has_perfect_dominating_all_delta(g) {
            return fail(String::from(
                "equality without a perfect dominating set of maximum-degree vertices",
            ));
        }
    }
    Outcome::Pass
}

fn gammat_delta(g: &Graph, inv: &InvariantRow) -> Outcome {
    if !g.is_isolate_free() || g.max_degree() < 2 {
        return Outcome::Skip;
    }
    let (Some(ft), Some(gt)) = (inv.ft, inv.gamma_t) else {
        return Outcome::Skip;
    };
    let bound = gt * (inv.max_degree - 1);
    if ft > bound {
        return fail(format!("ft={ft} exceeds gamma_t*(delta-1)={bound}"));
    }
    // the equality argument needs every witness member of degree >= 2 and a
    // strictly shrinkable recoloring, i.e. delta >= 2 and Delta >= 3; P_3
    // and K_3 reach equality without the claimed structure otherwise
    if ft == bound && g.min_degree() >= 2 && inv.max_degree >= 3 {
        if let Some(false) = has_perfect_total_dominating_all_delta(g) {
            return fail(String::from(
                "equality without a perfect total dominating set of maximum-degree vertices",
            ));
        }
    }
    Outcome::Pass
}

fn two_dom_sum(g: &Graph, inv: &InvariantRow) -> Outcome {
    if g.min_degree() < 2 {
        return Outcome::Skip;
    }
    let ft = inv.ft.expect("min degree 2 is isolate-free");
    if ft + inv.gamma_2 <= g.n() {
        Outcome::Pass
    } else {
        fail(format!("ft={ft} + gamma_2={} exceeds n={}", inv.gamma_2, g.n()))
    }
}

fn power_lemma(g: &Graph) -> Outcome {
    let n = g.n();
    if n == 0 || n > SUBSET_CHECK_MAX_N {
        return Outcome::Skip;
    }
    for mask in 0u64..1 << n {
        let s = VertexSet::from_mask(n, mask);
        let w = g.closed_neighborhood(&s);
        let lhs = is_power_dominating(g, &s);
        let rhs = w.len() == n || (!w.is_empty() && forcing_closure(g, &w).is_complete());
        if lhs != rhs {
            return fail(format!(
                "set {s:?}: power dominating={lhs} but N[S] forcing={rhs}"
            ));
        }
    }
    Outcome::Pass
}

fn power_upper(g: &Graph, inv: &InvariantRow) -> Outcome {
    match (g.is_isolate_free(), inv.ft) {
        (true, Some(ft)) if ft <= inv.gamma_p * (inv.max_degree + 1) => Outcome::Pass,
        (true, Some(ft)) => fail(format!(
            "ft={ft} exceeds gamma_p*(delta+1)={}",
            inv.gamma_p * (inv.max_degree + 1)
        )),
        _ => Outcome::Skip,
    }
}

fn power_lower(g: &Graph, inv: &InvariantRow) -> Outcome {
    match (g.is_isolate_free(), inv.ft) {
        (true, Some(ft)) if ft >= 2 * inv.gamma_p => Outcome::Pass,
        (true, Some(ft)) => fail(format!("ft={ft} below 2*gamma_p={}", 2 * inv.gamma_p)),
        _ => Outcome::Skip,
    }
}

fn vertex_removal(g: &Graph, inv: &InvariantRow, limits: &SolverLimits) -> Outcome {
    let Some(ft) = inv.ft else {
        return Outcome::Skip;
    };
    if !g.is_isolate_free() {
        return Outcome::Skip;
    }
    let mut any = false;
    for v in g.vertices() {
        let del = g.delete_vertex(v).expect("vertex in range");
        if del.graph.n() == 0 || !del.graph.is_isolate_free() {
            continue;
        }
        any = true;
        let ft_gv = match min_forcing(&del.graph, ForcingVariant::Total, limits) {
            Ok(r) => r.value,
            Err(e) => return fail(format!("removal of {v}: {e}")),
        };
        if ft_gv + 2 < ft || ft_gv > ft + inv.max_degree {
            return fail(format!(
                "removal of {v}: ft(G-v)={ft_gv} outside [{}-2, {}+{}]",
                ft, ft, inv.max_degree
            ));
        }
    }
    if any {
        Outcome::Pass
    } else {
        Outcome::Skip
    }
}

fn leaf_removal(g: &Graph, inv: &InvariantRow, limits: &SolverLimits) -> Outcome {
    if !g.is_connected() || g.n() < 3 {
        return Outcome::Skip;
    }
    let ft = inv.ft.expect("connected n >= 3 is isolate-free");
    let leaves: Vec<usize> = g.vertices().filter(|&v| g.degree(v) == 1).collect();
    if leaves.is_empty() {
        return Outcome::Skip;
    }
    for v in leaves {
        let del = g.delete_vertex(v).expect("vertex in range");
        let ft_gv = match min_forcing(&del.graph, ForcingVariant::Total, limits) {
            Ok(r) => r.value,
            Err(e) => return fail(format!("removal of leaf {v}: {e}")),
        };
        if ft_gv > ft {
            return fail(format!("leaf {v}: ft(G-v)={ft_gv} exceeds ft={ft}"));
        }
    }
    Outcome::Pass
}

fn upper_main(g: &Graph, inv: &InvariantRow) -> Outcome {
    if !g.is_connected() || g.n() < 3 {
        return Outcome::Skip;
    }
    let ft = inv.ft.expect("connected n >= 3 is isolate-free");
    // ft <= delta*n/(delta+1), in exact integers
    if ft * (inv.max_degree + 1) <= inv.max_degree * g.n() {
        Outcome::Pass
    } else {
        fail(format!(
            "ft={ft} exceeds {}*{}/{}",
            inv.max_degree,
            g.n(),
            inv.max_degree + 1
        ))
    }
}

fn upper_main_equality(g: &Graph, inv: &InvariantRow) -> Outcome {
    if !g.is_connected() || g.n() < 3 {
        return Outcome::Skip;
    }
    let ft = inv.ft.expect("connected n >= 3 is isolate-free");
    let equality = ft * (inv.max_degree + 1) == inv.max_degree * g.n();
    let characterized = g.is_complete() || g.is_star();
    if equality == characterized {
        Outcome::Pass
    } else {
        fail(format!(
            "bound equality={equality} but complete-or-star={characterized}"
        ))
    }
}

fn construction_validity(g: &Graph, inv: &InvariantRow, limits: &SolverLimits) -> Outcome {
    let mut ran = false;
    let report = |what: &str, e: ConstructError| fail(format!("{what}: {e}"));
    if g.is_isolate_free() {
        ran = true;
        let f = match min_forcing(g, ForcingVariant::Plain, limits) {
            Ok(r) => r.witness,
            Err(e) => return fail(format!("forcing solver: {e}")),
        };
        if let Err(e) = tf_doubling(g, &f) {
            return report("doubling", e);
        }
        let gp = min_domination(g, DominationVariant::Power, limits)
            .expect("feasible on any graph")
            .witness;
        if let Err(e) = tf_from_power_dominating(g, &gp) {
            return report("power construction", e);
        }
    }
    if g.min_degree() >= 3 {
        ran = true;
        let d = min_domination(g, DominationVariant::Plain, limits)
            .expect("feasible on any graph")
            .witness;
        if let Err(e) = tf_from_dominating(g, &d) {
            return report("dominating construction", e);
        }
    }
    if g.is_isolate_free() && g.max_degree() >= 2 {
        ran = true;
        let d = min_domination(g, DominationVariant::Total, limits)
            .expect("isolate-free")
            .witness;
        if let Err(e) = tf_from_total_dominating(g, &d) {
            return report("total dominating construction", e);
        }
    }
    if g.is_connected() && g.n() >= 3 {
        ran = true;
        let opts = PackingTfOptions {
            limits: *limits,
            ..PackingTfOptions::default()
        };
        match packing_tf(g, &opts) {
            Ok(c) => {
                if !c.claimed_bound.admits(c.tf_set.len()) {
                    return fail(String::from("packing construction exceeded its bound"));
                }
            }
            Err(e) => return report("packing construction", e),
        }
    }
    if let Some(_ft) = inv.ft {
        let s = min_forcing(g, ForcingVariant::Total, limits)
            .expect("ft is feasible")
            .witness;
        for v in g.vertices() {
            let del = g.delete_vertex(v).expect("vertex in range");
            if del.graph.n() == 0 || !del.graph.is_isolate_free() {
                continue;
            }
            ran = true;
            if let Err(e) = tf_delete_vertex(g, &s, v) {
                return report(&format!("delete vertex {v}"), e);
            }
            let t_small = min_forcing(&del.graph, ForcingVariant::Total, limits)
                .expect("isolate-free")
                .witness;
            let t = del.unmap_set(&t_small);
            if let Err(e) = tf_add_vertex_back(g, &t, v) {
                return report(&format!("add vertex {v} back"), e);
            }
        }
    }
    if ran {
        Outcome::Pass
    } else {
        Outcome::Skip
    }
}

fn gadget_budget(g: &Graph, inv: &InvariantRow, limits: &SolverLimits) -> Outcome {
    if !g.is_connected() || g.n() == 0 || g.n() > GADGET_CHECK_MAX_N {
        return Outcome::Skip;
    }
    let m = build_gadget(g);
    let ft_gadget = match min_forcing(&m.gadget, ForcingVariant::Total, limits) {
        Ok(r) => r,
        Err(e) => return fail(format!("gadget solve: {e}")),
    };
    let expected = inv.f + m.budget_shift;
    if ft_gadget.value != expected {
        return fail(format!(
            "ft(gadget)={} but f+2n={expected}",
            ft_gadget.value
        ));
    }
    let base_witness = min_forcing(&m.base, ForcingVariant::Plain, limits)
        .expect("feasible")
        .witness;
    let lifted = match lift_forcing_set(&m, &base_witness) {
        Ok(s) => s,
        Err(e) => return fail(format!("lift: {e}")),
    };
    if lifted.len() != base_witness.len() + m.budget_shift {
        return fail(String::from("lifted set has the wrong size"));
    }
    match project_tf_set(&m, &lifted) {
        Ok(projected) if projected == base_witness => {}
        Ok(_) => return fail(String::from("lift/project round-trip is not the identity")),
        Err(e) => return fail(format!("project: {e}")),
    }
    // the minimum gadget TF-set projects to a forcing set of the base
    match project_tf_set(&m, &ft_gadget.witness) {
        Ok(projected) => {
            if !classify_set(&m.base, &projected).forcing {
                return fail(String::from("projected minimum witness is not forcing"));
            }
        }
        Err(e) => return fail(format!("project minimum witness: {e}")),
    }
    Outcome::Pass
}

/// Summary of one check over a whole run.
#[derive(Clone, Debug, Serialize)]
pub struct CheckSummary {
    pub check: String,
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
    /// graph6 strings plus the failure message, capped at 50 entries.
    pub failures: Vec<(String, String)>,
}

/// Full deterministic report of one census run.
#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    pub source: String,
    pub graphs: usize,
    /// `(line, message)` for corpus lines that failed to parse, plus graphs
    /// that exceeded the solver guard.
    pub errors: Vec<(usize, String)>,
    pub rows: Vec<InvariantRow>,
    pub checks: Vec<CheckSummary>,
    /// Documented paper discrepancies observed in this run (not failures).
    pub discrepancies: Vec<String>,
}

impl CensusReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.fail == 0) && self.errors.is_empty()
    }
}

const FAILURE_CAP: usize = 50;

/// Run the suite over `graphs` with `jobs` workers. The report content is
/// independent of the worker count.
pub fn run_census(
    source: &str,
    graphs: &[(usize, String, Graph)],
    checks: &[String],
    jobs: usize,
    limits: &SolverLimits,
) -> CensusReport {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    struct PerGraph {
        row: Option<InvariantRow>,
        error: Option<(usize, String)>,
        outcomes: Vec<Outcome>,
        discrepancy: Option<String>,
    }
    let per_graph: Vec<PerGraph> = pool.install(|| {
        graphs
            .par_iter()
            .map(|(line, g6, g)| match compute_invariants(g, limits) {
                Err(e) => PerGraph {
                    row: None,
                    error: Some((*line, format!("{g6}: {e}"))),
                    outcomes: Vec::new(),
                    discrepancy: None,
                },
                Ok(inv) => {
                    let outcomes = checks
                        .iter()
                        .map(|c| run_check(c, g, &inv, limits))
                        .collect();
                    let discrepancy = literal_pipeline_discrepancy(g, g6, limits);
                    PerGraph {
                        row: Some(inv),
                        error: None,
                        outcomes,
                        discrepancy,
                    }
                }
            })
            .collect()
    });

    let mut report = CensusReport {
        source: source.to_string(),
        graphs: graphs.len(),
        errors: Vec::new(),
        rows: Vec::new(),
        checks: checks
            .iter()
            .map(|c| CheckSummary {
                check: c.clone(),
                pass: 0,
                fail: 0,
                skip: 0,
                failures: Vec::new(),
            })
            .collect(),
        discrepancies: Vec::new(),
    };
    for (pg, (_, g6, _)) in per_graph.into_iter().zip(graphs) {
        if let Some(e) = pg.error {
            report.errors.push(e);
            continue;
        }
        report.rows.push(pg.row.expect("no error"));
        for (summary, outcome) in report.checks.iter_mut().zip(pg.outcomes) {
            match outcome {
                Outcome::Pass => summary.pass += 1,
                Outcome::Skip => summary.skip += 1,
                Outcome::Fail(msg) => {
                    summary.fail += 1;
                    if summary.failures.len() < FAILURE_CAP {
                        summary.failures.push((g6.clone(), msg));
                    }
                }
            }
        }
        if let Some(d) = pg.discrepancy {
            report.discrepancies.push(d);
        }
    }
    report
        .discrepancies
        .push(String::from(
            "note: the n-1 upper bound fails on disconnected isolate-free graphs \
             (2K_2 reaches n); it is checked on connected graphs only",
        ));
    report
}

/// Does the literal packing pipeline (paper tiebreak, no repair) fail on
/// this graph? Recorded as a documented discrepancy, not a suite failure.
fn literal_pipeline_discrepancy(g: &Graph, g6: &str, limits: &SolverLimits) -> Option<String> {
    if !g.is_connected() || g.n() < 3 || g.max_degree() < 3 {
        return None;
    }
    let opts = PackingTfOptions {
        repair: false,
        limits: *limits,
        ..PackingTfOptions::default()
    };
    match packing_tf(g, &opts) {
        Err(ConstructError::PipelineFailed { stage, .. }) => Some(format!(
            "{g6}: literal packing pipeline failed at stage {stage} (repair succeeds)"
        )),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use total_forcing::families::{all_connected_graphs, generate, Family};

    fn as_corpus(graphs: Vec<Graph>) -> Vec<(usize, String, Graph)> {
        graphs
            .into_iter()
            .enumerate()
            .map(|(i, g)| (i + 1, write_graph6(&g), g))
            .collect()
    }

    fn all_checks() -> Vec<String> {
        CHECKS.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn invariants_examples() {
        let lim = SolverLimits::default();
        let fig = generate(&Family::Fig1b).unwrap();
        assert_eq!(compute_invariants(&fig, &lim).unwrap().ft, Some(5));
        let spider = generate(&Family::Spider(4)).unwrap();
        assert_eq!(compute_invariants(&spider, &lim).unwrap().ft, Some(4));
        let k6 = generate(&Family::Complete(6)).unwrap();
        assert_eq!(compute_invariants(&k6, &lim).unwrap().ft, Some(5));
    }

    #[test]
    fn census_n4_all_checks_pass() {
        let graphs = as_corpus(all_connected_graphs(4).unwrap().collect());
        assert_eq!(graphs.len(), 38);
        let report = run_census("n4", &graphs, &all_checks(), 2, &SolverLimits::default());
        for c in &report.checks {
            assert_eq!(c.fail, 0, "{}: {:?}", c.check, c.failures);
        }
        assert!(report.all_passed());
    }

    #[test]
    fn census_deterministic_across_worker_counts() {
        let graphs = as_corpus(all_connected_graphs(5).unwrap().collect());
        let lim = SolverLimits::default();
        // skip the expensive gadget solve here; determinism is about report
        // assembly, not any one check
        let checks: Vec<String> = CHECKS
            .iter()
            .filter(|&&c| c != "gadget_budget")
            .map(|s| s.to_string())
            .collect();
        let a = run_census("n5", &graphs, &checks, 1, &lim);
        let b = run_census("n5", &graphs, &checks, 8, &lim);
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }

    #[test]
    fn spider_discrepancy_recorded() {
        let graphs = as_corpus(vec![generate(&Family::Spider(3)).unwrap()]);
        let report = run_census("spider", &graphs, &all_checks(), 1, &SolverLimits::default());
        assert!(report
            .discrepancies
            .iter()
            .any(|d| d.contains("literal packing pipeline failed")));
        assert!(report.all_passed());
    }
}
