//! State graphs of the all-A and all-B states, adequacy predicates and the
//! Jones-polynomial statements that hold for (semi)adequate diagrams.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bracket::{jones, loop_partition, Smoothing};
use crate::checker::Outcome;
use crate::diagram::Diagram;
use crate::laurent::LaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdequacyError {
    #[error("diagram is neither +adequate nor -adequate")]
    NotSemiadequate,
}

/// One crossing seen as an edge between the loops its smoothing touches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct StateEdge {
    pub crossing: usize,
    pub u: usize,
    pub v: usize,
}

impl StateEdge {
    pub fn is_self_loop(&self) -> bool {
        self.u == self.v
    }
}

/// Loops of the all-A (or all-B) state as vertices, crossings as edges.
/// Vertices are numbered by the smallest edge label on each loop; edges
/// keep their crossing index and `u <= v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StateGraph {
    pub kind: Smoothing,
    pub vertex_count: usize,
    pub edges: Vec<StateEdge>,
}

pub fn state_graph(d: &Diagram, kind: Smoothing) -> StateGraph {
    let loops = loop_partition(d, &vec![kind; d.crossing_count()]).expect("length matches");
    let loop_of = |l: u32| loops.loop_of[l as usize - 1];
    let edges = d
        .crossings()
        .iter()
        .enumerate()
        .map(|(k, &[a, b, c, _])| {
            let (p, q) = match kind {
                Smoothing::A => (loop_of(a), loop_of(c)),
                Smoothing::B => (loop_of(a), loop_of(b)),
            };
            StateEdge { crossing: k, u: p.min(q), v: p.max(q) }
        })
        .collect();
    StateGraph { kind, vertex_count: loops.count, edges }
}

/// No crossing joins an all-A loop to itself.
pub fn is_plus_adequate(d: &Diagram) -> bool {
    !state_graph(d, Smoothing::A).edges.iter().any(StateEdge::is_self_loop)
}

/// No crossing joins an all-B loop to itself.
pub fn is_minus_adequate(d: &Diagram) -> bool {
    !state_graph(d, Smoothing::B).edges.iter().any(StateEdge::is_self_loop)
}

pub fn is_adequate(d: &Diagram) -> bool {
    is_plus_adequate(d) && is_minus_adequate(d)
}

pub fn is_semiadequate(d: &Diagram) -> bool {
    is_plus_adequate(d) || is_minus_adequate(d)
}

/// Edge statistics of a state graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SemiadequacyData {
    pub loop_count: usize,
    pub self_loop_edges: usize,
    /// Distinct pairs of different loops joined by at least one crossing.
    pub parallel_edge_classes: usize,
    /// Classes containing a single crossing.
    pub simple_edge_count: usize,
    /// Crossings per class, ascending.
    pub class_multiplicities: Vec<usize>,
    /// Vertex degrees, ascending; a self-loop adds 2.
    pub degrees: Vec<usize>,
}

impl SemiadequacyData {
    pub fn from_graph(g: &StateGraph) -> Self {
        let mut classes: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut degrees = vec![0; g.vertex_count];
        let mut self_loop_edges = 0;
        for e in &g.edges {
            degrees[e.u] += 1;
            degrees[e.v] += 1;
            if e.is_self_loop() {
                self_loop_edges += 1;
            } else {
                *classes.entry((e.u, e.v)).or_default() += 1;
            }
        }
        let mut class_multiplicities: Vec<usize> = classes.into_values().collect();
        class_multiplicities.sort_unstable();
        degrees.sort_unstable();
        SemiadequacyData {
            loop_count: g.vertex_count,
            self_loop_edges,
            parallel_edge_classes: class_multiplicities.len(),
            simple_edge_count: class_multiplicities.iter().filter(|&&m| m == 1).count(),
            class_multiplicities,
            degrees,
        }
    }
}

pub fn semiadequacy_data(d: &Diagram, kind: Smoothing) -> SemiadequacyData {
    SemiadequacyData::from_graph(&state_graph(d, kind))
}

/// Extreme Jones coefficients against the `+-1` statement. The `plus` side
/// is the lowest power of `t` (governed by the all-A state), the `minus`
/// side the highest.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremeCoefficientReport {
    pub lowest: BigInt,
    pub highest: BigInt,
    pub plus_side: Outcome,
    pub minus_side: Outcome,
}

impl ExtremeCoefficientReport {
    pub fn passed(&self) -> bool {
        self.plus_side != Outcome::Fail && self.minus_side != Outcome::Fail
    }
}

pub fn extreme_coefficient_check_with(d: &Diagram, v: &LaurentPoly<BigInt>) -> ExtremeCoefficientReport {
    let (lowest, highest) = v.extreme_coeffs().expect("Jones polynomial of a knot is nonzero");
    let side = |adequate: bool, c: &BigInt| match (adequate, c.abs().is_one()) {
        (false, _) => Outcome::NotApplicable,
        (true, true) => Outcome::Pass,
        (true, false) => Outcome::Fail,
    };
    ExtremeCoefficientReport {
        plus_side: side(is_plus_adequate(d), &lowest),
        minus_side: side(is_minus_adequate(d), &highest),
        lowest,
        highest,
    }
}

pub fn extreme_coefficient_check(d: &Diagram) -> ExtremeCoefficientReport {
    extreme_coefficient_check_with(d, &jones(d))
}

/// `span V`, a lower bound for the crossing number.
pub fn crossing_lower_bound(d: &Diagram) -> i64 {
    jones(d).span().expect("Jones polynomial of a knot is nonzero")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NontrivialityCheck {
    pub nontrivial: bool,
    /// Greedy simplification reaches the 0-crossing diagram, so a trivial
    /// Jones polynomial is expected rather than a counterexample.
    pub unknot_diagram: bool,
}

pub fn jones_nontriviality_check_with(
    d: &Diagram,
    v: &LaurentPoly<BigInt>,
) -> Result<NontrivialityCheck, AdequacyError> {
    if !is_semiadequate(d) {
        return Err(AdequacyError::NotSemiadequate);
    }
    Ok(NontrivialityCheck {
        nontrivial: !v.is_one(),
        unknot_diagram: crate::moves::greedy_simplify(d).is_unknot_diagram(),
    })
}

pub fn jones_nontriviality_check(d: &Diagram) -> Result<NontrivialityCheck, AdequacyError> {
    jones_nontriviality_check_with(d, &jones(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
    const FIGURE8: &str = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";
    const KINKED_TREFOIL: &str = "X[1,4,2,5] X[3,8,4,1] X[5,2,6,3] X[6,7,7,8]";
    // one kink of each handedness
    const DOUBLE_KINK: &str = "X[1,3,2,2] X[3,4,4,1]";

    fn d(s: &str) -> Diagram {
        s.parse().unwrap()
    }

    #[test]
    fn trefoil_state_graphs() {
        let a = state_graph(&d(TREFOIL), Smoothing::A);
        assert_eq!((a.vertex_count, a.edges.len()), (3, 3));
        let b = state_graph(&d(TREFOIL), Smoothing::B);
        assert_eq!((b.vertex_count, b.edges.len()), (2, 3));
        let u = state_graph(&Diagram::unknot(), Smoothing::A);
        assert_eq!((u.vertex_count, u.edges.len()), (1, 0));
    }

    #[test]
    fn trefoil_statistics() {
        let b = semiadequacy_data(&d(TREFOIL), Smoothing::B);
        assert_eq!(b.loop_count, 2);
        assert_eq!(b.self_loop_edges, 0);
        assert_eq!(b.parallel_edge_classes, 1);
        assert_eq!(b.class_multiplicities, vec![3]);
        assert_eq!(b.simple_edge_count, 0);
        assert_eq!(b.degrees, vec![3, 3]);
        let a = semiadequacy_data(&d(TREFOIL), Smoothing::A);
        assert_eq!(a.class_multiplicities, vec![1, 1, 1]);
        assert_eq!(a.degrees, vec![2, 2, 2]);
        let u = semiadequacy_data(&Diagram::unknot(), Smoothing::A);
        assert_eq!((u.loop_count, u.self_loop_edges, u.parallel_edge_classes, u.simple_edge_count), (1, 0, 0, 0));
    }

    #[test]
    fn adequacy_predicates() {
        for s in [TREFOIL, FIGURE8, ""] {
            assert!(is_adequate(&d(s)), "{s}");
        }
        let kink = d("X[1,1,2,2]");
        assert!(is_plus_adequate(&kink) != is_minus_adequate(&kink));
        assert_eq!(semiadequacy_data(&kink, Smoothing::B).self_loop_edges, 1);
        let kt = d(KINKED_TREFOIL);
        assert!(is_semiadequate(&kt) && !is_adequate(&kt));
        assert!(!is_semiadequate(&d(DOUBLE_KINK)));
    }

    #[test]
    fn extreme_coefficients() {
        for s in [TREFOIL, FIGURE8, ""] {
            let r = extreme_coefficient_check(&d(s));
            assert_eq!((r.plus_side, r.minus_side), (Outcome::Pass, Outcome::Pass), "{s}");
        }
        let r = extreme_coefficient_check(&d(TREFOIL));
        assert_eq!((r.lowest, r.highest), (BigInt::from(-1), BigInt::from(1)));
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(crossing_lower_bound(&d(TREFOIL)), 3);
        assert_eq!(crossing_lower_bound(&d(FIGURE8)), 4);
        assert_eq!(crossing_lower_bound(&Diagram::unknot()), 0);
    }

    #[test]
    fn nontriviality() {
        let t = jones_nontriviality_check(&d(TREFOIL)).unwrap();
        assert!(t.nontrivial && !t.unknot_diagram);
        assert!(jones_nontriviality_check(&d(FIGURE8)).unwrap().nontrivial);
        let k = jones_nontriviality_check(&d("X[1,1,2,2]")).unwrap();
        assert!(!k.nontrivial && k.unknot_diagram);
        assert_eq!(jones_nontriviality_check(&d(DOUBLE_KINK)), Err(AdequacyError::NotSemiadequate));
    }
}
