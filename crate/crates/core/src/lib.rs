//! Exact classical and quantum-like inference on discrete Bayesian networks.
//!
//! Classical posteriors come from enumerating the full joint. The quantum-like
//! engine turns every joint term into an amplitude (`sqrt` of its
//! probability) with a phase, so that marginalizing adds pairwise
//! interference terms before normalization. Phases can be fixed explicitly,
//! drawn from the synchronicity heuristic over declared variable pairs, or
//! swept to map out the interval of attainable posteriors.
//!
//! ```
//! use qlbn::{infer_classical, infer_quantum, parse_network, load_sync_pairs, PhaseStrategy, Query};
//!
//! let doc = include_str!("../data/alarm.json");
//! let net = parse_network(doc).unwrap();
//! let query = Query::new(&net, "Burglar", &[("JohnCalls", "t")]).unwrap();
//!
//! let classical = infer_classical(&net, &query).unwrap();
//! assert!((classical.get("t").unwrap() - 0.1333).abs() < 5e-5);
//!
//! let pairs = load_sync_pairs(doc, &net).unwrap();
//! let quantum = infer_quantum(&net, &query, &PhaseStrategy::Synchronicity(pairs)).unwrap();
//! assert!((quantum.probabilities.iter().sum::<f64>() - 1.0).abs() < 1e-9);
//! ```

pub mod classical;
pub mod cli;
pub mod error;
pub mod network;
pub mod quantum;
pub mod query;
pub mod report;
pub mod sweep;
pub mod sync;

pub use classical::{infer_classical, joint_probability, joint_probability_named, Distribution};
pub use error::{Error, Result};
pub use network::{parse_network, validate, BayesianNetwork, NetworkDocument, ValidationReport};
pub use quantum::{
    infer_quantum, interference, parameter_count, phasor_oracle, term_amplitude, ExplicitPhases,
    ParameterCount, PhaseStrategy, QuantumDistribution, TermAmplitude,
};
pub use query::{enumerate_terms, Query, TermAssignment};
pub use report::{comparison_report, comparison_report_with, relative_increase, ComparisonReport};
pub use sweep::{analytic_bounds, envelope_contains, sweep, Envelope, SweepConfig};
pub use sync::{load_sync_pairs, pair_angle, term_phase, SyncPair, SyncPairSet};

/// The burglar/alarm network with its two synchronized pairs.
pub const ALARM_NETWORK: &str = include_str!("../data/alarm.json");
