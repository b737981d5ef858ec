//! Propagation semantics: forcing closure with a step-by-step chronology,
//! classification of a set as forcing / total forcing / connected forcing,
//! and the power-domination monitoring recursion.
//!
//! A colored vertex with exactly one uncolored neighbor forces that neighbor.
//! The final colored set is independent of the firing order; the engine fires
//! the lowest-id eligible forcer so chronologies are reproducible.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::vset::VertexSet;

/// Ordered witness of one propagation run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcingChronology {
    pub initial: VertexSet,
    /// `(forcer, forced)` pairs in firing order.
    pub steps: Vec<(usize, usize)>,
    pub final_set: VertexSet,
}

impl ForcingChronology {
    /// Did the run color the entire graph?
    pub fn is_complete(&self) -> bool {
        self.final_set.len() == self.final_set.capacity()
    }

    /// Line-based text form, one `forcer->forced` per step.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for &(f, t) in &self.steps {
            out.push_str(&format!("{f}->{t}\n"));
        }
        out
    }

    /// Re-derive the final set by replaying the steps one at a time against
    /// the forcing rule. Returns `None` if any step is illegal.
    pub fn replay(&self, g: &Graph) -> Option<VertexSet> {
        let mut colored = self.initial.clone();
        for &(forcer, forced) in &self.steps {
            if !colored.contains(forcer) || colored.contains(forced) {
                return None;
            }
            let uncolored = g.neighbors(forcer).difference(&colored);
            if uncolored.len() != 1 || !uncolored.contains(forced) {
                return None;
            }
            colored.insert(forced);
        }
        Some(colored)
    }
}

/// Run the forcing process to its closure, firing the lowest-id eligible
/// forcer first.
pub fn forcing_closure(g: &Graph, s: &VertexSet) -> ForcingChronology {
    assert_eq!(s.capacity(), g.n(), "set interpreted against the wrong graph");
    let mut colored = s.clone();
    let mut steps = Vec::new();
    loop {
        let mut fired = false;
        for v in colored.clone().iter() {
            let uncolored = g.neighbors(v).difference(&colored);
            if uncolored.len() == 1 {
                let w = uncolored.first().unwrap();
                colored.insert(w);
                steps.push((v, w));
                fired = true;
                break;
            }
        }
        if !fired {
            break;
        }
    }
    ForcingChronology {
        initial: s.clone(),
        steps,
        final_set: colored,
    }
}

/// Like [`forcing_closure`] but, among eligible forcers, fires the one with
/// the highest `priority` value. Exists to check order-independence of the
/// closure.
pub fn forcing_closure_with_priority(g: &Graph, s: &VertexSet, priority: &[usize]) -> ForcingChronology {
    let mut colored = s.clone();
    let mut steps = Vec::new();
    loop {
        let mut best: Option<(usize, usize)> = None;
        for v in colored.iter() {
            let uncolored = g.neighbors(v).difference(&colored);
            if uncolored.len() == 1 {
                match best {
                    Some((b, _)) if priority[b] >= priority[v] => {}
                    _ => best = Some((v, uncolored.first().unwrap())),
                }
            }
        }
        match best {
            Some((v, w)) => {
                colored.insert(w);
                steps.push((v, w));
            }
            None => break,
        }
    }
    ForcingChronology {
        initial: s.clone(),
        steps,
        final_set: colored,
    }
}

/// Classification flags for a candidate set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SetClass {
    pub forcing: bool,
    pub total_forcing: bool,
    pub connected_forcing: bool,
}

/// Classify `s` as forcing / total forcing / connected forcing.
///
/// On the empty graph all flags are vacuously true. On a nonempty graph the
/// empty set is non-forcing, and a singleton is never total forcing.
pub fn classify_set(g: &Graph, s: &VertexSet) -> SetClass {
    if g.n() == 0 {
        return SetClass {
            forcing: true,
            total_forcing: true,
            connected_forcing: true,
        };
    }
    let forcing = !s.is_empty() && forcing_closure(g, s).is_complete();
    SetClass {
        forcing,
        total_forcing: forcing && !g.has_isolate_within(s),
        connected_forcing: forcing && g.is_connected_within(s),
    }
}

/// Layered trace of the power-domination monitoring recursion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerTrace {
    /// Layer 0 is the closed neighborhood of the seed; each later layer adds
    /// the closed neighborhoods of monitored vertices with at most one
    /// unmonitored neighbor. Layers are non-decreasing and end at the
    /// fixpoint.
    pub layers: Vec<VertexSet>,
}

impl PowerTrace {
    pub fn fixpoint(&self) -> &VertexSet {
        self.layers.last().expect("at least layer 0 exists")
    }
}

/// Compute the monitored-set recursion to its fixpoint.
pub fn power_closure(g: &Graph, s: &VertexSet) -> PowerTrace {
    assert_eq!(s.capacity(), g.n());
    let mut layers = Vec::new();
    let mut current = g.closed_neighborhood(s);
    layers.push(current.clone());
    loop {
        let mut next = current.clone();
        for v in current.iter() {
            if g.neighbors(v).difference(&current).len() <= 1 {
                next.union_with(g.neighbors(v));
            }
        }
        if next == current {
            break;
        }
        layers.push(next.clone());
        current = next;
    }
    PowerTrace { layers }
}

/// Does the monitoring recursion starting at `s` reach all of V?
pub fn is_power_dominating(g: &Graph, s: &VertexSet) -> bool {
    power_closure(g, s).fixpoint().len() == g.n()
}
