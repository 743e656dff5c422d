//! The PBS problem instance: a weighted bipartite demand graph plus the
//! per-reconfiguration setup cost `d`.
//!
//! An instance is a simple bipartite graph: at most one edge per
//! (source, destination) pair, every stored weight strictly positive.
//! Zero-weight demand is represented by the absence of an edge. The matrix
//! view pads the instance to a square nonnegative matrix, which is the form
//! the decomposition algorithms operate on.

use crate::rational::{q, Q};
use num::Zero;
use thiserror::Error;

/// One demand: transmit for `weight` time units from `source` to `dest`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub source: usize,
    pub dest: usize,
    pub weight: Q,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("edge ({source}, {dest}) out of range for a {n_sources}x{n_dests} instance")]
    EdgeOutOfRange {
        source: usize,
        dest: usize,
        n_sources: usize,
        n_dests: usize,
    },
    #[error("duplicate edge ({source}, {dest})")]
    DuplicateEdge { source: usize, dest: usize },
    #[error("edge ({source}, {dest}) has negative weight {weight}")]
    NegativeWeight {
        source: usize,
        dest: usize,
        weight: Q,
    },
    #[error("setup cost must be nonnegative, got {0}")]
    NegativeSetupCost(Q),
}

/// A PBS instance. Immutable after construction; edges are kept sorted by
/// (source, dest) so every algorithm sees a canonical edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PbsInstance {
    n_sources: usize,
    n_dests: usize,
    setup_cost: Q,
    edges: Vec<Edge>,
}

/// Δ, W and the combined lower bound `L = W + d·Δ` of an instance.
///
/// `delta` is the maximum node degree, `big_w` the maximum total demand
/// incident to any single node. Every feasible schedule costs at least
/// `lower_bound`, which the benchmark harness uses as the optimum proxy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InstanceMetrics {
    pub delta: usize,
    pub big_w: Q,
    pub lower_bound: Q,
}

impl PbsInstance {
    /// Builds an instance from `(source, dest, weight)` triples.
    ///
    /// Zero-weight triples are dropped (absent-edge semantics); negative
    /// weights, out-of-range indices and duplicate pairs are errors.
    pub fn new(
        n_sources: usize,
        n_dests: usize,
        setup_cost: Q,
        edges: impl IntoIterator<Item = (usize, usize, Q)>,
    ) -> Result<Self, InstanceError> {
        if setup_cost < Q::zero() {
            return Err(InstanceError::NegativeSetupCost(setup_cost));
        }
        let mut out: Vec<Edge> = Vec::new();
        for (source, dest, weight) in edges {
            if source >= n_sources || dest >= n_dests {
                return Err(InstanceError::EdgeOutOfRange {
                    source,
                    dest,
                    n_sources,
                    n_dests,
                });
            }
            if weight < Q::zero() {
                return Err(InstanceError::NegativeWeight {
                    source,
                    dest,
                    weight,
                });
            }
            if weight.is_zero() {
                continue;
            }
            out.push(Edge {
                source,
                dest,
                weight,
            });
        }
        out.sort_by_key(|e| (e.source, e.dest));
        if let Some(w) = out.windows(2).find(|w| {
            (w[0].source, w[0].dest) == (w[1].source, w[1].dest)
        }) {
            return Err(InstanceError::DuplicateEdge {
                source: w[0].source,
                dest: w[0].dest,
            });
        }
        Ok(Self {
            n_sources,
            n_dests,
            setup_cost,
            edges: out,
        })
    }

    /// Builds an instance from a demand matrix; zero entries become absent
    /// edges. The matrix need not be square.
    pub fn from_matrix(weights: &[Vec<Q>], setup_cost: Q) -> Result<Self, InstanceError> {
        let n_sources = weights.len();
        let n_dests = weights.iter().map(Vec::len).max().unwrap_or(0);
        let edges = weights.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(move |(j, &w)| (i, j, w))
        });
        Self::new(n_sources, n_dests, setup_cost, edges)
    }

    pub fn n_sources(&self) -> usize {
        self.n_sources
    }

    pub fn n_dests(&self) -> usize {
        self.n_dests
    }

    pub fn setup_cost(&self) -> Q {
        self.setup_cost
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Side length of the square matrix view.
    pub fn size(&self) -> usize {
        self.n_sources.max(self.n_dests)
    }

    /// Same demands, different setup cost. Used by the d-sweeps, where the
    /// generated weights are shared across the whole setup-cost grid.
    pub fn with_setup_cost(&self, setup_cost: Q) -> Self {
        let mut clone = self.clone();
        clone.setup_cost = setup_cost;
        clone
    }

    pub fn edge_weight(&self, source: usize, dest: usize) -> Option<Q> {
        self.edges
            .binary_search_by_key(&(source, dest), |e| (e.source, e.dest))
            .ok()
            .map(|idx| self.edges[idx].weight)
    }

    /// Computes Δ, W and `L = W + d·Δ`. An empty instance yields all zeros.
    pub fn metrics(&self) -> InstanceMetrics {
        let mut src_degree = vec![0usize; self.n_sources];
        let mut dst_degree = vec![0usize; self.n_dests];
        let mut src_load = vec![Q::zero(); self.n_sources];
        let mut dst_load = vec![Q::zero(); self.n_dests];
        for e in &self.edges {
            src_degree[e.source] += 1;
            dst_degree[e.dest] += 1;
            src_load[e.source] += e.weight;
            dst_load[e.dest] += e.weight;
        }
        let delta = src_degree
            .iter()
            .chain(dst_degree.iter())
            .copied()
            .max()
            .unwrap_or(0);
        let big_w = src_load
            .iter()
            .chain(dst_load.iter())
            .copied()
            .max()
            .unwrap_or_else(Q::zero);
        let lower_bound = big_w + self.setup_cost * q(delta as i64);
        InstanceMetrics {
            delta,
            big_w,
            lower_bound,
        }
    }

    /// The square matrix view: an s×s matrix, s = max(sources, dests), with
    /// entry (i, k) equal to the demand from source i to destination k and
    /// all-zero padding rows/columns.
    pub fn to_matrix(&self) -> Vec<Vec<Q>> {
        let s = self.size();
        let mut m = vec![vec![Q::zero(); s]; s];
        for e in &self.edges {
            m[e.source][e.dest] = e.weight;
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn demo_2x2() -> PbsInstance {
        PbsInstance::new(
            2,
            2,
            q(4),
            [(0, 0, q(3)), (0, 1, q(2)), (1, 0, q(2)), (1, 1, q(3))],
        )
        .unwrap()
    }

    #[test]
    fn metrics_single_edge() {
        let inst = PbsInstance::new(1, 1, q(2), [(0, 0, q(5))]).unwrap();
        let m = inst.metrics();
        assert_eq!(m.delta, 1);
        assert_eq!(m.big_w, q(5));
        assert_eq!(m.lower_bound, q(7));
    }

    #[test]
    fn metrics_2x2() {
        let m = demo_2x2().metrics();
        assert_eq!(m.delta, 2);
        assert_eq!(m.big_w, q(5));
        assert_eq!(m.lower_bound, q(13));
    }

    #[test]
    fn metrics_empty() {
        let inst = PbsInstance::new(3, 3, q(7), []).unwrap();
        let m = inst.metrics();
        assert_eq!(m.delta, 0);
        assert_eq!(m.big_w, q(0));
        assert_eq!(m.lower_bound, q(0));
    }

    #[test]
    fn matrix_view_2x2() {
        let m = demo_2x2().to_matrix();
        assert_eq!(
            m,
            vec![vec![q(3), q(2)], vec![q(2), q(3)]]
        );
    }

    #[test]
    fn matrix_view_pads_to_square() {
        let inst = PbsInstance::new(1, 2, q(0), [(0, 0, q(4)), (0, 1, q(1))]).unwrap();
        assert_eq!(
            inst.to_matrix(),
            vec![vec![q(4), q(1)], vec![q(0), q(0)]]
        );
    }

    #[test]
    fn matrix_view_empty() {
        let inst = PbsInstance::new(0, 0, q(1), []).unwrap();
        assert!(inst.to_matrix().is_empty());
    }

    #[test]
    fn zero_weight_edges_are_absent() {
        let inst = PbsInstance::new(2, 2, q(1), [(0, 0, q(0)), (1, 1, q(2))]).unwrap();
        assert_eq!(inst.edges().len(), 1);
        assert_eq!(inst.edge_weight(0, 0), None);
        assert_eq!(inst.edge_weight(1, 1), Some(q(2)));
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            PbsInstance::new(1, 1, q(0), [(0, 1, q(1))]),
            Err(InstanceError::EdgeOutOfRange {
                source: 0,
                dest: 1,
                n_sources: 1,
                n_dests: 1
            })
        );
        assert_eq!(
            PbsInstance::new(2, 2, q(0), [(0, 0, q(1)), (0, 0, q(2))]),
            Err(InstanceError::DuplicateEdge { source: 0, dest: 0 })
        );
        assert!(matches!(
            PbsInstance::new(1, 1, q(0), [(0, 0, q(-1))]),
            Err(InstanceError::NegativeWeight { .. })
        ));
        assert!(matches!(
            PbsInstance::new(1, 1, q(-3), []),
            Err(InstanceError::NegativeSetupCost(_))
        ));
    }

    #[test]
    fn matrix_round_trip_preserves_demand() {
        let inst = demo_2x2();
        let total: Q = inst.edges().iter().map(|e| e.weight).sum();
        let matrix_total: Q = inst.to_matrix().iter().flatten().copied().sum();
        assert_eq!(total, matrix_total);
    }
}
