//! Queries and the canonical enumeration of joint-assignment terms.

use crate::error::{Error, Result};
use crate::network::BayesianNetwork;

/// A target variable, the observed evidence, and the implied unobserved set.
///
/// The target may itself be observed. Outcomes that disagree with the
/// observation then have no consistent terms, so the posterior collapses onto
/// the observed state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Query {
    target: usize,
    evidence: Vec<(usize, usize)>,
    unobserved: Vec<usize>,
}

impl Query {
    pub fn new(network: &BayesianNetwork, target: &str, evidence: &[(&str, &str)]) -> Result<Self> {
        let target = network.require(target)?;
        let mut resolved = Vec::with_capacity(evidence.len());
        for &(name, state) in evidence {
            let var = network.require(name)?;
            resolved.push((var, network.state_index(var, state)?));
        }
        Self::from_indices(network, target, resolved)
    }

    pub fn from_indices(
        network: &BayesianNetwork,
        target: usize,
        mut evidence: Vec<(usize, usize)>,
    ) -> Result<Self> {
        evidence.sort_unstable();
        evidence.dedup();
        for pair in evidence.windows(2) {
            if pair[0].0 == pair[1].0 {
                return Err(Error::ConflictingEvidence(
                    network.variable(pair[0].0).name().to_string(),
                ));
            }
        }
        let unobserved = network
            .topological_order()
            .iter()
            .copied()
            .filter(|&v| v != target && evidence.binary_search_by_key(&v, |e| e.0).is_err())
            .collect();
        Ok(Query {
            target,
            evidence,
            unobserved,
        })
    }

    pub fn target(&self) -> usize {
        self.target
    }

    /// `(variable, state)` pairs sorted by variable index.
    pub fn evidence(&self) -> &[(usize, usize)] {
        &self.evidence
    }

    /// The unobserved variables `Y`, in topological order.
    pub fn unobserved(&self) -> &[usize] {
        &self.unobserved
    }

    pub fn observed_state(&self, variable: usize) -> Option<usize> {
        self.evidence
            .binary_search_by_key(&variable, |e| e.0)
            .ok()
            .map(|i| self.evidence[i].1)
    }

    /// Terms per outcome: the product of unobserved cardinalities.
    pub fn term_count(&self, network: &BayesianNetwork) -> usize {
        self.unobserved
            .iter()
            .map(|&v| network.variable(v).cardinality())
            .product()
    }
}

/// One full joint assignment, with its position in the canonical term order
/// of its outcome block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermAssignment {
    pub index: usize,
    /// State index per variable, indexed by variable.
    pub states: Vec<usize>,
}

impl TermAssignment {
    pub fn state(&self, variable: usize) -> usize {
        self.states[variable]
    }

    pub fn named<'a>(&self, network: &'a BayesianNetwork) -> Vec<(&'a str, &'a str)> {
        network
            .variables()
            .iter()
            .zip(&self.states)
            .map(|(v, &s)| (v.name(), v.states()[s].as_str()))
            .collect()
    }
}

/// Terms contributing to `Pr(target = outcome, e)`.
///
/// Ordered lexicographically over the unobserved variables in topological
/// order (earliest most significant), each running through its states in
/// declared order.
pub fn enumerate_terms(
    network: &BayesianNetwork,
    query: &Query,
    outcome: &str,
) -> Result<Vec<TermAssignment>> {
    let outcome = network.state_index(query.target, outcome)?;
    Ok(enumerate_outcome(network, query, outcome))
}

pub(crate) fn enumerate_outcome(
    network: &BayesianNetwork,
    query: &Query,
    outcome: usize,
) -> Vec<TermAssignment> {
    if query.observed_state(query.target).is_some_and(|s| s != outcome) {
        return Vec::new();
    }
    let mut states = vec![0usize; network.len()];
    states[query.target] = outcome;
    for &(v, s) in &query.evidence {
        states[v] = s;
    }

    let count = query.term_count(network);
    let mut terms = Vec::with_capacity(count);
    for index in 0..count {
        terms.push(TermAssignment {
            index,
            states: states.clone(),
        });
        // Odometer step, least significant digit last.
        for &v in query.unobserved.iter().rev() {
            states[v] += 1;
            if states[v] < network.variable(v).cardinality() {
                break;
            }
            states[v] = 0;
        }
    }
    terms
}
