//! Constructive upper bounds, each returning a certified TF-set: doubling a
//! forcing set, neighborhoods of dominating / total dominating / power
//! dominating sets, the packing-based Delta/(Delta+1) pipeline, and the
//! vertex add/remove transformations.
//!
//! Every builder validates its result against the propagation engine before
//! issuing a certificate; none of them trusts the argument on paper alone.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::ConstructError;
use crate::forcing::{classify_set, forcing_closure, is_power_dominating, ForcingChronology};
use crate::graph::{DeletedVertex, Graph};
use crate::packing::{
    greedy_maximal_packing, run_pipeline, PipelineError, PipelineRun, ResiduePool,
};
use crate::solve::{maximum_packing, PackingTiebreak, SolverLimits};
use crate::vset::VertexSet;

/// A claimed size bound: either an absolute count or an exact rational
/// threshold compared by integer cross-multiplication.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    Count(usize),
    /// `size <= num / den`, exact.
    Ratio { num: usize, den: usize },
}

impl Bound {
    pub fn admits(&self, size: usize) -> bool {
        match *self {
            Bound::Count(c) => size <= c,
            Bound::Ratio { num, den } => size * den <= num,
        }
    }

    pub fn is_tight(&self, size: usize) -> bool {
        match *self {
            Bound::Count(c) => size == c,
            Bound::Ratio { num, den } => size * den == num,
        }
    }
}

impl core::fmt::Display for Bound {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match *self {
            Bound::Count(c) => write!(f, "{c}"),
            Bound::Ratio { num, den } => write!(f, "{num}/{den}"),
        }
    }
}

/// A TF-set together with the bound it was built to satisfy, the closure
/// witnessing that it forces, and per-step case annotations.
#[derive(Clone, Debug)]
pub struct ConstructionCertificate {
    pub tf_set: VertexSet,
    pub claimed_bound: Bound,
    pub chronology: ForcingChronology,
    pub case_log: Vec<String>,
}

/// Validate a built set and wrap it in a certificate, or report the failing
/// stage.
fn certify(
    g: &Graph,
    tf_set: VertexSet,
    claimed_bound: Bound,
    case_log: Vec<String>,
    stage: &str,
) -> Result<ConstructionCertificate, ConstructError> {
    let class = classify_set(g, &tf_set);
    if !class.total_forcing {
        return Err(ConstructError::CertificationFailed {
            stage: format!("{stage}: set is not total forcing"),
        });
    }
    if !claimed_bound.admits(tf_set.len()) {
        return Err(ConstructError::CertificationFailed {
            stage: format!("{stage}: size {} exceeds bound {claimed_bound}", tf_set.len()),
        });
    }
    let chronology = forcing_closure(g, &tf_set);
    Ok(ConstructionCertificate {
        tf_set,
        claimed_bound,
        chronology,
        case_log,
    })
}

/// Grow a forcing set into a TF-set of at most twice the size, by coloring
/// one neighbor per member that lacks one.
pub fn tf_doubling(g: &Graph, f: &VertexSet) -> Result<ConstructionCertificate, ConstructError> {
    if !g.is_isolate_free() {
        return Err(ConstructError::Precondition(String::from(
            "graph has an isolated vertex",
        )));
    }
    if !classify_set(g, f).forcing {
        return Err(ConstructError::Precondition(String::from(
            "given set is not a forcing set",
        )));
    }
    let mut out = f.clone();
    let mut log = Vec::new();
    for v in f {
        if g.neighbors(v).is_disjoint(&out) {
            let w = g.neighbors(v).first().expect("isolate-free graph");
            out.insert(w);
            log.push(format!("colored neighbor {w} for isolated member {v}"));
        }
    }
    if log.is_empty() {
        log.push(String::from("set already induces no isolates"));
    }
    certify(g, out, Bound::Count(2 * f.len()), log, "doubling")
}

/// Per dominator vertex, keep all but the highest-id outside neighbor.
fn all_but_one_neighborhoods(g: &Graph, d: &VertexSet) -> (VertexSet, Vec<String>) {
    let mut out = d.clone();
    let mut log = Vec::new();
    for v in d {
        let mut outside = g.neighbors(v).difference(d);
        if let Some(dropped) = outside.iter().last() {
            outside.remove(dropped);
            out.union_with(&outside);
            log.push(format!("dominator {v}: kept {outside:?}, left {dropped} uncolored"));
        } else {
            log.push(format!("dominator {v}: no outside neighbors"));
        }
    }
    (out, log)
}

/// TF-set of size at most `|d| * Delta` from a dominating set, for minimum
/// degree at least 3.
pub fn tf_from_dominating(g: &Graph, d: &VertexSet) -> Result<ConstructionCertificate, ConstructError> {
    if g.min_degree() < 3 {
        return Err(ConstructError::Precondition(String::from(
            "minimum degree below 3",
        )));
    }
    if !g.is_dominating(d) {
        return Err(ConstructError::Precondition(String::from(
            "given set is not dominating",
        )));
    }
    let (out, log) = all_but_one_neighborhoods(g, d);
    certify(g, out, Bound::Count(d.len() * g.max_degree()), log, "gamma-delta")
}

/// TF-set of size at most `|d| * (Delta - 1)` from a total dominating set.
pub fn tf_from_total_dominating(
    g: &Graph,
    d: &VertexSet,
) -> Result<ConstructionCertificate, ConstructError> {
    if !g.is_isolate_free() || g.max_degree() < 2 {
        return Err(ConstructError::Precondition(String::from(
            "graph must be isolate-free with maximum degree at least 2",
        )));
    }
    if !g.is_total_dominating(d) {
        return Err(ConstructError::Precondition(String::from(
            "given set is not total dominating",
        )));
    }
    let (out, log) = all_but_one_neighborhoods(g, d);
    certify(
        g,
        out,
        Bound::Count(d.len() * (g.max_degree() - 1)),
        log,
        "gammat-delta",
    )
}

/// TF-set `N[s]` of size at most `|s| * (Delta + 1)` from a power dominating
/// set.
pub fn tf_from_power_dominating(
    g: &Graph,
    s: &VertexSet,
) -> Result<ConstructionCertificate, ConstructError> {
    if !g.is_isolate_free() {
        return Err(ConstructError::Precondition(String::from(
            "graph has an isolated vertex",
        )));
    }
    if !is_power_dominating(g, s) {
        return Err(ConstructError::Precondition(String::from(
            "given set is not power dominating",
        )));
    }
    let out = g.closed_neighborhood(s);
    let log = alloc::vec![format!("W = N[{s:?}]")];
    certify(
        g,
        out,
        Bound::Count(s.len() * (g.max_degree() + 1)),
        log,
        "power",
    )
}

/// Options for [`packing_tf`].
#[derive(Clone, Copy, Debug)]
pub struct PackingTfOptions {
    /// Tiebreak used when the exact maximum packing is searched.
    pub tiebreak: PackingTiebreak,
    /// Whether the documented repair schedule runs when the literal pipeline
    /// fails.
    pub repair: bool,
    /// Use exact-minimum per-piece dominators instead of inclusion-minimal
    /// ones.
    pub exact_dominators: bool,
    /// Guard for the exact packing search; larger graphs use a greedy
    /// inclusion-maximal packing.
    pub limits: SolverLimits,
}

impl Default for PackingTfOptions {
    fn default() -> Self {
        PackingTfOptions {
            tiebreak: PackingTiebreak::PaperMaxUndominated,
            repair: true,
            exact_dominators: false,
            limits: SolverLimits::default(),
        }
    }
}

fn choose_packing(g: &Graph, tiebreak: PackingTiebreak, limits: &SolverLimits) -> (VertexSet, bool) {
    match maximum_packing(g, tiebreak, limits) {
        Ok(r) => (r.witness, true),
        Err(_) => (greedy_maximal_packing(g), false),
    }
}

/// The Delta/(Delta+1) upper-bound construction: decompose around a packing
/// and assemble a TF-set of size at most `Delta * n / (Delta + 1)`.
///
/// With `repair` off a failing literal pipeline returns the partial
/// decomposition; with it on, the documented retry schedule runs (alternate
/// tiebreak, widened residue pool, isolate patching) and the case log records
/// which path produced the result.
pub fn packing_tf(g: &Graph, opts: &PackingTfOptions) -> Result<ConstructionCertificate, ConstructError> {
    let n = g.n();
    if n < 3 {
        return Err(ConstructError::Precondition(String::from("order below 3")));
    }
    if !g.is_connected() {
        return Err(ConstructError::Precondition(String::from("graph is disconnected")));
    }
    let delta = g.max_degree();
    let bound = Bound::Ratio {
        num: delta * n,
        den: delta + 1,
    };
    if delta <= 2 {
        // path or cycle: any edge is a TF-set
        let u = 0;
        let w = g.neighbors(u).first().expect("connected, n >= 3");
        let s = VertexSet::from_members(n, [u, w]);
        let log = alloc::vec![format!("max degree {delta}: edge {{{u}, {w}}}")];
        return certify(g, s, bound, log, "packing-tf small-degree");
    }

    let verify = |run: PipelineRun, path: &str| -> Result<ConstructionCertificate, PipelineRun> {
        let mut log = run.case_log.clone();
        log.push(format!("path: {path}"));
        match certify(g, run.candidate.clone(), bound, log, "packing-tf") {
            Ok(cert) => Ok(cert),
            Err(_) => Err(run),
        }
    };

    let (packing, exact) = choose_packing(g, opts.tiebreak, &opts.limits);
    let mut failed_run: Option<PipelineRun> = None;
    let literal = run_pipeline(g, &packing, ResiduePool::Literal, opts.exact_dominators);
    match literal {
        Ok(run) => match verify(run, "literal") {
            Ok(cert) => return Ok(cert),
            Err(run) => {
                if !opts.repair {
                    return Err(ConstructError::PipelineFailed {
                        stage: String::from("verification"),
                        decomposition: Box::new(run.decomposition),
                    });
                }
                failed_run = Some(run);
            }
        },
        Err(PipelineError::ResidueUncoverable(d)) => {
            if !opts.repair {
                return Err(ConstructError::PipelineFailed {
                    stage: String::from("residue"),
                    decomposition: Box::new(d),
                });
            }
        }
    }

    // repair stage 1: alternate packing tiebreak
    if exact && opts.tiebreak != PackingTiebreak::MinUndominated {
        let (alt, _) = choose_packing(g, PackingTiebreak::MinUndominated, &opts.limits);
        if let Ok(run) = run_pipeline(g, &alt, ResiduePool::Literal, opts.exact_dominators) {
            match verify(run, "repair: min-undominated tiebreak") {
                Ok(cert) => return Ok(cert),
                Err(run) => failed_run = Some(run),
            }
        }
    }

    // repair stage 2: widen the residue dominator pool
    if let Ok(run) = run_pipeline(g, &packing, ResiduePool::Widened, opts.exact_dominators) {
        match verify(run, "repair: widened residue pool") {
            Ok(cert) => return Ok(cert),
            Err(run) => failed_run = Some(run),
        }
    }

    // repair stage 3: patch isolates of the last candidate
    if let Some(run) = failed_run {
        let mut patched = run.candidate.clone();
        for v in run.candidate.iter() {
            if g.neighbors(v).is_disjoint(&patched) {
                if let Some(w) = g.neighbors(v).first() {
                    patched.insert(w);
                }
            }
        }
        let mut log = run.case_log;
        log.push(String::from("path: repair: colored a neighbor per isolate"));
        if let Ok(cert) = certify(g, patched, bound, log, "packing-tf") {
            return Ok(cert);
        }
    }

    // final fallback: all vertices but one always satisfies the bound, since
    // n >= Delta + 1 for a connected graph
    let x = (0..n)
        .min_by_key(|&v| (g.degree(v), v))
        .expect("n >= 3");
    let mut s = VertexSet::full(n);
    s.remove(x);
    let log = alloc::vec![format!("path: fallback, V minus min-degree vertex {x}")];
    certify(g, s, bound, log, "packing-tf fallback")
}

/// Extend a TF-set of `g - v` back to one of `g` by adding `v` and one of
/// its neighbors. `t` is given in the ids of `g` and must avoid `v`.
pub fn tf_add_vertex_back(
    g: &Graph,
    t: &VertexSet,
    v: usize,
) -> Result<ConstructionCertificate, ConstructError> {
    if !g.is_isolate_free() {
        return Err(ConstructError::Precondition(String::from(
            "graph has an isolated vertex",
        )));
    }
    if t.contains(v) {
        return Err(ConstructError::Precondition(String::from(
            "set must live in the vertex-deleted graph",
        )));
    }
    let del = g.delete_vertex(v)?;
    let mapped = del.map_set(t).expect("v excluded above");
    if !classify_set(&del.graph, &mapped).total_forcing {
        return Err(ConstructError::Precondition(String::from(
            "set is not a TF-set of the vertex-deleted graph",
        )));
    }
    let w = match g.neighbors(v).intersection(t).first() {
        Some(w) => w,
        None => g.neighbors(v).first().expect("isolate-free graph"),
    };
    let mut out = t.clone();
    out.insert(v);
    out.insert(w);
    let log = alloc::vec![format!("restored {v} with neighbor {w}")];
    certify(g, out, Bound::Count(t.len() + 2), log, "add-vertex-back")
}

/// Result of [`tf_delete_vertex`]: the compacted graph with its relabeling
/// plus a certificate stated in the compacted ids.
#[derive(Clone, Debug)]
pub struct VertexRemovalResult {
    pub removed: DeletedVertex,
    pub certificate: ConstructionCertificate,
}

/// Turn a TF-set of `g` into one of `g - v`, within `|s| + Delta` vertices
/// (within `|s|` when `v` is a leaf).
pub fn tf_delete_vertex(
    g: &Graph,
    s: &VertexSet,
    v: usize,
) -> Result<VertexRemovalResult, ConstructError> {
    if !classify_set(g, s).total_forcing {
        return Err(ConstructError::Precondition(String::from(
            "given set is not a TF-set",
        )));
    }
    let del = g.delete_vertex(v)?;
    if !del.graph.is_isolate_free() {
        return Err(ConstructError::Precondition(String::from(
            "deleting the vertex creates an isolate",
        )));
    }
    let mut log = Vec::new();
    let mut out = s.clone();
    out.remove(v);
    let bound;
    if g.degree(v) == 1 {
        bound = Bound::Count(s.len());
        if !s.contains(v) {
            log.push(format!("leaf {v} outside the set: kept unchanged"));
        } else {
            // the support may lose its only partner; replace v with one of
            // the support's other neighbors
            let support = g.neighbors(v).first().expect("degree 1");
            if g.neighbors(support).is_disjoint(&out) {
                let x = {
                    let mut cands = g.neighbors(support).clone();
                    cands.remove(v);
                    cands.subtract(s);
                    cands.first().expect("support keeps a neighbor, none in s")
                };
                out.insert(x);
                log.push(format!("leaf {v} replaced by {x}, a neighbor of support {support}"));
            } else {
                log.push(format!("leaf {v} dropped; support {support} keeps a partner"));
            }
        }
    } else {
        bound = Bound::Count(s.len() + g.max_degree());
        let chronology = forcing_closure(g, s);
        // a forcer fires at most once, when its last neighbor is uncolored
        let fired = chronology.steps.iter().find(|&&(f, _)| f == v).map(|&(_, t)| t);
        if !s.contains(v) {
            match fired {
                None => log.push(format!("{v} never fires: set kept unchanged")),
                Some(w) => {
                    let w2 = {
                        let mut cands = g.neighbors(w).clone();
                        cands.remove(v);
                        cands.first().expect("no isolates after deletion")
                    };
                    out.insert(w);
                    out.insert(w2);
                    log.push(format!("{v} fired {w}: added {{{w}, {w2}}}"));
                }
            }
        } else {
            // substitutes for members whose only partner was v
            for u in g.neighbors(v).intersection(s).iter() {
                let mut cands = g.neighbors(u).clone();
                cands.remove(v);
                let u_sub = cands.first().expect("no isolates after deletion");
                out.insert(u_sub);
                log.push(format!("member {u} gets substitute partner {u_sub}"));
            }
            if let Some(v1) = fired {
                let v2 = {
                    let mut cands = g.neighbors(v1).clone();
                    cands.remove(v);
                    cands.first().expect("no isolates after deletion")
                };
                out.insert(v1);
                out.insert(v2);
                log.push(format!("{v} fired {v1}: added {{{v1}, {v2}}}"));
            }
        }
    }
    let mapped = del.map_set(&out).expect("v removed from the candidate");
    let certificate = certify(&del.graph, mapped, bound, log, "delete-vertex")?;
    Ok(VertexRemovalResult {
        removed: del,
        certificate,
    })
}
