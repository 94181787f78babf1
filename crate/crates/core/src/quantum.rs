//! Quantum-like inference with interference between joint terms.
//!
//! Each joint term of an outcome block becomes an amplitude whose magnitude
//! is the square root of the term's classical probability and whose phase is
//! chosen by a [`PhaseStrategy`]. A block's unnormalized score is the squared
//! modulus of the summed amplitudes, evaluated through the expansion
//!
//! ```text
//! score = Σ ψ_i² + 2 · Σ_{i<j} ψ_i ψ_j cos(θ_i − θ_j)
//! ```
//!
//! and the scores of all outcome blocks are normalized to a posterior.
//! Phases belong to terms, so blocks for different outcomes carry
//! independent phase vectors.

use std::collections::BTreeMap;
use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::classical::joint_unchecked;
use crate::error::{Error, Result};
use crate::network::BayesianNetwork;
use crate::query::{enumerate_outcome, Query, TermAssignment};
use crate::sync::{term_phase, SyncPairSet};

/// Scores at or above this are float noise and clamp to zero.
pub const NEGATIVE_SCORE_LIMIT: f64 = -1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TermAmplitude {
    pub index: usize,
    pub magnitude: f64,
    pub phase: f64,
}

impl TermAmplitude {
    pub fn new(index: usize, magnitude: f64, phase: f64) -> Self {
        TermAmplitude {
            index,
            magnitude,
            phase: phase.rem_euclid(TAU),
        }
    }
}

/// Amplitude magnitude of a term: `sqrt(Pr(term))`.
pub fn term_amplitude(network: &BayesianNetwork, term: &TermAssignment) -> f64 {
    joint_unchecked(network, &term.states).sqrt()
}

/// `Σ_{i<j} ψ_i ψ_j cos(θ_i − θ_j)` over pairs in index order. The caller
/// applies the factor 2.
pub fn interference(amplitudes: &[TermAmplitude]) -> f64 {
    let mut total = 0.0;
    for (i, a) in amplitudes.iter().enumerate() {
        for b in &amplitudes[i + 1..] {
            total += a.magnitude * b.magnitude * (a.phase - b.phase).cos();
        }
    }
    total
}

/// `|Σ ψ_i e^{iθ_i}|²` by direct complex accumulation.
pub fn phasor_oracle(amplitudes: &[TermAmplitude]) -> f64 {
    amplitudes
        .iter()
        .map(|a| Complex64::from_polar(a.magnitude, a.phase))
        .sum::<Complex64>()
        .norm_sqr()
}

/// Explicit phase vectors keyed by outcome state, each in canonical term
/// order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ExplicitPhases {
    by_outcome: BTreeMap<String, Vec<f64>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PhaseEntry {
    outcome: String,
    phases: Vec<f64>,
}

impl ExplicitPhases {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, outcome: impl Into<String>, phases: Vec<f64>) -> Self {
        self.by_outcome.insert(outcome.into(), phases);
        self
    }

    pub fn get(&self, outcome: &str) -> Option<&[f64]> {
        self.by_outcome.get(outcome).map(Vec::as_slice)
    }

    /// Parses a phase file: `[{"outcome": "t", "phases": [0.0, 0.785]}, ...]`.
    pub fn from_json(text: &str) -> Result<Self> {
        let entries: Vec<PhaseEntry> = serde_json::from_str(text).map_err(Error::from_json)?;
        Ok(ExplicitPhases {
            by_outcome: entries.into_iter().map(|e| (e.outcome, e.phases)).collect(),
        })
    }

    pub fn to_json(&self) -> String {
        let entries: Vec<PhaseEntry> = self
            .by_outcome
            .iter()
            .map(|(outcome, phases)| PhaseEntry {
                outcome: outcome.clone(),
                phases: phases.clone(),
            })
            .collect();
        serde_json::to_string_pretty(&entries).expect("phase lists always serialize")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum PhaseStrategy {
    /// Drops the interference term; recovers classical inference.
    ZeroInterference,
    /// Every term gets the same phase.
    Uniform(f64),
    Explicit(ExplicitPhases),
    Synchronicity(SyncPairSet),
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuantumDistribution {
    pub target: String,
    pub states: Vec<String>,
    pub probabilities: Vec<f64>,
    /// Pre-normalization scores per state, after clamping.
    pub scores: Vec<f64>,
    /// `2 · interference` per state, the part of each score that is not
    /// classical.
    pub interference: Vec<f64>,
    pub normalizer: f64,
}

impl QuantumDistribution {
    pub fn get(&self, state: &str) -> Option<f64> {
        self.states
            .iter()
            .position(|s| s == state)
            .map(|i| self.probabilities[i])
    }
}

/// Amplitudes for one outcome block with phases assigned by the strategy.
/// The zero-interference strategy yields zero phases; it is honoured in
/// [`block_score`] instead.
pub fn block_amplitudes(
    network: &BayesianNetwork,
    query: &Query,
    outcome: usize,
    strategy: &PhaseStrategy,
) -> Result<Vec<TermAmplitude>> {
    let terms = enumerate_outcome(network, query, outcome);
    let phases: Vec<f64> = match strategy {
        PhaseStrategy::ZeroInterference => vec![0.0; terms.len()],
        PhaseStrategy::Uniform(theta) => vec![*theta; terms.len()],
        PhaseStrategy::Explicit(explicit) => {
            let label = &network.variable(query.target()).states()[outcome];
            let phases = match explicit.get(label) {
                Some(p) => p,
                // An empty block needs no phases.
                None if terms.is_empty() => &[],
                None => return Err(Error::MissingPhases(label.clone())),
            };
            if phases.len() != terms.len() {
                return Err(Error::PhaseLength {
                    outcome: label.clone(),
                    expected: terms.len(),
                    got: phases.len(),
                });
            }
            phases.to_vec()
        }
        PhaseStrategy::Synchronicity(pairs) => terms
            .iter()
            .map(|t| term_phase(pairs, network, t))
            .collect::<Result<_>>()?,
    };
    Ok(terms
        .iter()
        .zip(phases)
        .map(|(term, phase)| TermAmplitude::new(term.index, term_amplitude(network, term), phase))
        .collect())
}

/// Unclamped score of one block and its `2 · interference` part.
pub fn block_score(amplitudes: &[TermAmplitude], zero_interference: bool) -> (f64, f64) {
    let classical: f64 = amplitudes.iter().map(|a| a.magnitude * a.magnitude).sum();
    let cross = if zero_interference {
        0.0
    } else {
        2.0 * interference(amplitudes)
    };
    (classical + cross, cross)
}

pub(crate) fn clamp_score(score: f64, outcome: &str) -> Result<f64> {
    if score < NEGATIVE_SCORE_LIMIT {
        return Err(Error::NegativeScore {
            outcome: outcome.to_string(),
            score,
        });
    }
    Ok(score.max(0.0))
}

/// Normalizes clamped block scores; also used by the sweep so that both paths
/// produce bit-identical posteriors.
pub(crate) fn normalize(scores: &[f64]) -> Result<(Vec<f64>, f64)> {
    let total: f64 = scores.iter().sum();
    if total <= 0.0 {
        return Err(Error::ZeroTotalScore);
    }
    Ok((scores.iter().map(|s| s / total).collect(), 1.0 / total))
}

pub fn infer_quantum(
    network: &BayesianNetwork,
    query: &Query,
    strategy: &PhaseStrategy,
) -> Result<QuantumDistribution> {
    let target = network.variable(query.target());
    let zero = matches!(strategy, PhaseStrategy::ZeroInterference);
    let mut scores = Vec::with_capacity(target.cardinality());
    let mut cross_terms = Vec::with_capacity(target.cardinality());
    for (outcome, label) in target.states().iter().enumerate() {
        let amplitudes = block_amplitudes(network, query, outcome, strategy)?;
        let (score, cross) = block_score(&amplitudes, zero);
        scores.push(clamp_score(score, label)?);
        cross_terms.push(cross);
    }
    let (probabilities, normalizer) = normalize(&scores)?;
    Ok(QuantumDistribution {
        target: target.name().to_string(),
        states: target.states().to_vec(),
        probabilities,
        scores,
        interference: cross_terms,
        normalizer,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParameterCount {
    /// Terms, hence phase parameters, per outcome.
    pub terms: usize,
    /// Interference pairs per outcome.
    pub pairs: usize,
}

pub fn parameter_count(network: &BayesianNetwork, query: &Query) -> ParameterCount {
    let terms = query.term_count(network);
    ParameterCount {
        terms,
        pairs: terms * terms.saturating_sub(1) / 2,
    }
}
