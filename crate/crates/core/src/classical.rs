//! Exact classical inference by enumeration of the full joint.

use crate::error::{Error, Result};
use crate::network::BayesianNetwork;
use crate::query::{enumerate_outcome, Query};

/// Normalized posterior over the target's states.
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution {
    pub target: String,
    pub states: Vec<String>,
    pub probabilities: Vec<f64>,
    /// The `α` that rescaled the per-outcome sums.
    pub normalizer: f64,
}

impl Distribution {
    pub fn get(&self, state: &str) -> Option<f64> {
        self.states
            .iter()
            .position(|s| s == state)
            .map(|i| self.probabilities[i])
    }
}

/// Product of every variable's local probability under a full assignment of
/// state indices (indexed by variable).
pub fn joint_probability(network: &BayesianNetwork, assignment: &[usize]) -> Result<f64> {
    if assignment.len() != network.len() {
        return Err(Error::IncompleteAssignment {
            expected: network.len(),
            got: assignment.len(),
        });
    }
    Ok(joint_unchecked(network, assignment))
}

pub(crate) fn joint_unchecked(network: &BayesianNetwork, assignment: &[usize]) -> f64 {
    network
        .topological_order()
        .iter()
        .map(|&v| network.local_probability(v, assignment))
        .product()
}

/// Joint probability of an assignment given by names, e.g. `[("A", "t"), ...]`.
pub fn joint_probability_named(
    network: &BayesianNetwork,
    assignment: &[(&str, &str)],
) -> Result<f64> {
    let mut states = vec![None; network.len()];
    for &(name, state) in assignment {
        let v = network.require(name)?;
        states[v] = Some(network.state_index(v, state)?);
    }
    let got = states.iter().flatten().count();
    let states: Option<Vec<usize>> = states.into_iter().collect();
    match states {
        Some(states) => joint_probability(network, &states),
        None => Err(Error::IncompleteAssignment {
            expected: network.len(),
            got,
        }),
    }
}

/// `Pr(target | evidence)`, summing joint terms in canonical order.
pub fn infer_classical(network: &BayesianNetwork, query: &Query) -> Result<Distribution> {
    let target = network.variable(query.target());
    let scores: Vec<f64> = (0..target.cardinality())
        .map(|outcome| {
            enumerate_outcome(network, query, outcome)
                .iter()
                .map(|term| joint_unchecked(network, &term.states))
                .sum()
        })
        .collect();
    let total: f64 = scores.iter().sum();
    if total <= 0.0 {
        return Err(Error::ZeroLikelihood);
    }
    let normalizer = 1.0 / total;
    Ok(Distribution {
        target: target.name().to_string(),
        states: target.states().to_vec(),
        probabilities: scores.iter().map(|s| s / total).collect(),
        normalizer,
    })
}
