//! Posterior envelopes under phase variation.
//!
//! Without a rule for choosing phases a quantum-like query yields an interval
//! of attainable posteriors. [`sweep`] estimates that interval on a phase
//! lattice: exhaustively when every outcome block is small, by seeded
//! sampling otherwise. [`analytic_bounds`] gives the exact unnormalized range
//! of a single block over all real phases.

use std::f64::consts::{FRAC_PI_4, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::network::BayesianNetwork;
use crate::quantum::{
    block_amplitudes, block_score, clamp_score, normalize, PhaseStrategy, TermAmplitude,
};
use crate::query::Query;
use crate::sync::SyncPairSet;

/// Probes whose total score falls below this fraction of the classical total
/// cancel out entirely and define no posterior.
const CANCELLATION_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    /// Lattice spacing in radians; must divide 2π.
    pub step: f64,
    /// Largest per-outcome term count that is still swept exhaustively.
    pub max_exhaustive_terms: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            step: FRAC_PI_4,
            max_exhaustive_terms: 4,
            samples: 20_000,
            seed: 0,
        }
    }
}

impl SweepConfig {
    /// Number of lattice points per phase.
    pub fn lattice_size(&self) -> Result<usize> {
        if !(self.step.is_finite() && self.step > 0.0) {
            return Err(Error::SweepConfig(format!("step {} is not positive", self.step)));
        }
        let ratio = TAU / self.step;
        let points = ratio.round();
        if (ratio - points).abs() > 1e-9 {
            return Err(Error::SweepConfig(format!("step {} does not divide 2π", self.step)));
        }
        if self.samples == 0 {
            return Err(Error::SweepConfig("sample count must be positive".into()));
        }
        Ok(points as usize)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMode {
    Exhaustive,
    Sampled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProbeKind {
    /// Every phase zero: all amplitudes aligned.
    Aligned,
    /// Phases from the synchronicity heuristic.
    Synchronicity,
    /// Block-wise lattice extreme combination (exhaustive mode).
    Lattice,
    /// Uniform lattice sample (sampled mode).
    Sample,
}

impl ProbeKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ProbeKind::Aligned => "aligned",
            ProbeKind::Synchronicity => "sync",
            ProbeKind::Lattice => "lattice",
            ProbeKind::Sample => "sample",
        }
    }
}

/// One evaluated phase vector.
#[derive(Debug, Clone, PartialEq)]
pub struct Probe {
    pub id: usize,
    pub kind: ProbeKind,
    /// Phases per outcome block, in canonical term order.
    pub phases: Vec<Vec<f64>>,
    /// Clamped pre-normalization scores per outcome.
    pub scores: Vec<f64>,
    /// Normalized posterior per outcome.
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StateRange {
    pub state: String,
    pub min: f64,
    pub max: f64,
    pub min_witness: Vec<Vec<f64>>,
    pub max_witness: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Envelope {
    pub target: String,
    pub mode: SweepMode,
    pub ranges: Vec<StateRange>,
    pub probes: Vec<Probe>,
    /// Probes dropped because every block cancelled.
    pub undefined_probes: usize,
}

impl Envelope {
    /// Envelope spanned by a set of probes. Panics if `probes` is empty.
    pub fn from_probes(
        target: &str,
        states: &[String],
        mode: SweepMode,
        probes: Vec<Probe>,
        undefined_probes: usize,
    ) -> Self {
        assert!(!probes.is_empty(), "an envelope needs at least one probe");
        let ranges = states
            .iter()
            .enumerate()
            .map(|(s, state)| {
                let mut lo = &probes[0];
                let mut hi = &probes[0];
                for p in &probes[1..] {
                    if p.values[s] < lo.values[s] {
                        lo = p;
                    }
                    if p.values[s] > hi.values[s] {
                        hi = p;
                    }
                }
                StateRange {
                    state: state.clone(),
                    min: lo.values[s],
                    max: hi.values[s],
                    min_witness: lo.phases.clone(),
                    max_witness: hi.phases.clone(),
                }
            })
            .collect();
        Envelope {
            target: target.to_string(),
            mode,
            ranges,
            probes,
            undefined_probes,
        }
    }

    pub fn range(&self, state: &str) -> Option<&StateRange> {
        self.ranges.iter().find(|r| r.state == state)
    }
}

/// `true` iff `min − tol ≤ value ≤ max + tol`.
pub fn envelope_contains(range: &StateRange, value: f64, tol: f64) -> bool {
    range.min - tol <= value && value <= range.max + tol
}

/// Exact range of `|Σ ψ_i e^{iθ_i}|²` over all phase vectors.
///
/// The maximum aligns every phasor. The minimum is zero whenever the longest
/// phasor is no longer than the rest combined (the phasors close into a
/// polygon); otherwise the rest all oppose the longest one.
pub fn analytic_bounds(magnitudes: &[f64]) -> (f64, f64) {
    let sum: f64 = magnitudes.iter().sum();
    let longest = magnitudes.iter().copied().fold(0.0, f64::max);
    let gap = (2.0 * longest - sum).max(0.0);
    (gap * gap, sum * sum)
}

struct Blocks {
    amplitudes: Vec<Vec<TermAmplitude>>,
    classical_total: f64,
}

impl Blocks {
    fn new(network: &BayesianNetwork, query: &Query) -> Result<Self> {
        let outcomes = network.variable(query.target()).cardinality();
        let amplitudes = (0..outcomes)
            .map(|o| block_amplitudes(network, query, o, &PhaseStrategy::Uniform(0.0)))
            .collect::<Result<Vec<_>>>()?;
        let classical_total = amplitudes
            .iter()
            .flatten()
            .map(|a| a.magnitude * a.magnitude)
            .sum();
        Ok(Blocks {
            amplitudes,
            classical_total,
        })
    }

    fn with_phases(&self, block: usize, phases: &[f64]) -> Vec<TermAmplitude> {
        self.amplitudes[block]
            .iter()
            .zip(phases)
            .map(|(a, &p)| TermAmplitude::new(a.index, a.magnitude, p))
            .collect()
    }

    /// Evaluates a full phase assignment the same way `infer_quantum` does
    /// with explicit phases. `None` when the posterior is undefined.
    fn evaluate(
        &self,
        states: &[String],
        id: usize,
        kind: ProbeKind,
        phases: Vec<Vec<f64>>,
    ) -> Result<Option<Probe>> {
        let scores = (0..self.amplitudes.len())
            .map(|b| {
                let (score, _) = block_score(&self.with_phases(b, &phases[b]), false);
                clamp_score(score, &states[b])
            })
            .collect::<Result<Vec<_>>>()?;
        let total: f64 = scores.iter().sum();
        if total <= CANCELLATION_FLOOR * self.classical_total {
            return Ok(None);
        }
        let (values, _) = normalize(&scores)?;
        Ok(Some(Probe {
            id,
            kind,
            phases,
            scores,
            values,
        }))
    }

    /// Lattice vectors of one block minimizing and maximizing its score. The
    /// first phase is pinned to zero since scores depend only on differences.
    fn block_extremes(&self, block: usize, lattice: usize, step: f64) -> (Vec<f64>, Vec<f64>) {
        let n = self.amplitudes[block].len();
        let mut digits = vec![0usize; n];
        let mut lo = (f64::INFINITY, Vec::new());
        let mut hi = (f64::NEG_INFINITY, Vec::new());
        loop {
            let phases: Vec<f64> = digits.iter().map(|&k| k as f64 * step).collect();
            let (score, _) = block_score(&self.with_phases(block, &phases), false);
            if score < lo.0 {
                lo = (score, phases.clone());
            }
            if score > hi.0 {
                hi = (score, phases);
            }
            let mut position = n;
            loop {
                if position <= 1 {
                    return (lo.1, hi.1);
                }
                position -= 1;
                digits[position] += 1;
                if digits[position] < lattice {
                    break;
                }
                digits[position] = 0;
            }
        }
    }
}

/// Sweeps phase vectors for every outcome block jointly and records the
/// attainable normalized posterior per target state.
///
/// The aligned probe and, when `pairs` is non-empty, the synchronicity probe
/// are always evaluated. Above the exhaustive threshold the remaining probes
/// are `config.samples` uniform lattice draws from a ChaCha8 stream seeded
/// with `config.seed`, so a longer run extends a shorter one.
pub fn sweep(
    network: &BayesianNetwork,
    query: &Query,
    config: &SweepConfig,
    pairs: &SyncPairSet,
) -> Result<Envelope> {
    let lattice = config.lattice_size()?;
    let target = network.variable(query.target());
    let states = target.states();
    let blocks = Blocks::new(network, query)?;

    let mut probes = Vec::new();
    let mut undefined = 0usize;
    let push = |probe: Option<Probe>, probes: &mut Vec<Probe>, undefined: &mut usize| {
        match probe {
            Some(p) => probes.push(p),
            None => *undefined += 1,
        }
    };

    let aligned: Vec<Vec<f64>> = blocks.amplitudes.iter().map(|b| vec![0.0; b.len()]).collect();
    push(blocks.evaluate(states, 0, ProbeKind::Aligned, aligned)?, &mut probes, &mut undefined);
    if !pairs.is_empty() {
        let sync = PhaseStrategy::Synchronicity(pairs.clone());
        let phases = (0..states.len())
            .map(|o| {
                Ok(block_amplitudes(network, query, o, &sync)?
                    .iter()
                    .map(|a| a.phase)
                    .collect())
            })
            .collect::<Result<Vec<Vec<f64>>>>()?;
        push(blocks.evaluate(states, 1, ProbeKind::Synchronicity, phases)?, &mut probes, &mut undefined);
    }

    let exhaustive = query.term_count(network) <= config.max_exhaustive_terms;
    if exhaustive {
        // A posterior rises with its own block's score and falls with every
        // other block's, so its lattice extremes pair one block's extreme with
        // the opposite extreme of all others.
        let extremes: Vec<(Vec<f64>, Vec<f64>)> = (0..states.len())
            .map(|b| blocks.block_extremes(b, lattice, config.step))
            .collect();
        for own in 0..states.len() {
            for own_high in [false, true] {
                let phases = extremes
                    .iter()
                    .enumerate()
                    .map(|(b, (lo, hi))| if (b == own) == own_high { hi.clone() } else { lo.clone() })
                    .collect();
                let id = probes.len() + undefined;
                push(blocks.evaluate(states, id, ProbeKind::Lattice, phases)?, &mut probes, &mut undefined);
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        for _ in 0..config.samples {
            let phases = blocks
                .amplitudes
                .iter()
                .map(|b| {
                    (0..b.len())
                        .map(|_| rng.random_range(0..lattice) as f64 * config.step)
                        .collect()
                })
                .collect();
            let id = probes.len() + undefined;
            push(blocks.evaluate(states, id, ProbeKind::Sample, phases)?, &mut probes, &mut undefined);
        }
    }

    let mode = if exhaustive {
        SweepMode::Exhaustive
    } else {
        SweepMode::Sampled
    };
    Ok(Envelope::from_probes(target.name(), states, mode, probes, undefined))
}
