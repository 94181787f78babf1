//! Synchronized variable pairs and the phase heuristic built on them.
//!
//! Two binary variables declared as synchronized contribute an angle to every
//! joint term according to their joint state: both occur gives 0, neither
//! occurs gives π, and a mixed state gives π/4. A term's phase is the sum of
//! its pair angles modulo 2π. A binary variable "occurs" in its second
//! declared state (`t` for `[f, t]`).

use std::collections::BTreeSet;
use std::f64::consts::{FRAC_PI_4, PI, TAU};

use crate::error::{Error, Result};
use crate::network::{BayesianNetwork, NetworkDocument};
use crate::query::TermAssignment;

/// Unordered pair of distinct variables, stored with the lower index first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SyncPair {
    first: usize,
    second: usize,
}

impl SyncPair {
    pub fn new(network: &BayesianNetwork, a: &str, b: &str) -> Result<Self> {
        let (a, b) = (network.require(a)?, network.require(b)?);
        if a == b {
            return Err(Error::SelfPair(network.variable(a).name().to_string()));
        }
        Ok(SyncPair {
            first: a.min(b),
            second: a.max(b),
        })
    }

    pub fn first(&self) -> usize {
        self.first
    }

    pub fn second(&self) -> usize {
        self.second
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SyncPairSet {
    pairs: BTreeSet<SyncPair>,
}

impl SyncPairSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_names<S: AsRef<str>>(network: &BayesianNetwork, pairs: &[[S; 2]]) -> Result<Self> {
        let mut set = Self::new();
        for [a, b] in pairs {
            let pair = SyncPair::new(network, a.as_ref(), b.as_ref())?;
            if !set.pairs.insert(pair) {
                return Err(Error::DuplicatePair(
                    a.as_ref().to_string(),
                    b.as_ref().to_string(),
                ));
            }
        }
        Ok(set)
    }

    pub fn insert(&mut self, pair: SyncPair) -> bool {
        self.pairs.insert(pair)
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &SyncPair> {
        self.pairs.iter()
    }
}

/// Reads the `sync_pairs` field of a network document; absent means empty.
pub fn load_sync_pairs(document: &str, network: &BayesianNetwork) -> Result<SyncPairSet> {
    let doc = NetworkDocument::from_json(document)?;
    SyncPairSet::from_names(network, &doc.sync_pairs)
}

/// Angle between two synchronized binary variables in the given joint state.
pub fn pair_angle(first_occurs: bool, second_occurs: bool) -> f64 {
    match (first_occurs, second_occurs) {
        (true, true) => 0.0,
        (false, false) => PI,
        _ => FRAC_PI_4,
    }
}

fn occurs(network: &BayesianNetwork, variable: usize, state: usize) -> Result<bool> {
    let var = network.variable(variable);
    if !var.is_binary() {
        return Err(Error::NonBinary {
            variable: var.name().to_string(),
            states: var.cardinality(),
        });
    }
    Ok(state == 1)
}

/// Sum of the pair angles under a full assignment, reduced into `[0, 2π)`.
pub fn term_phase(
    pairs: &SyncPairSet,
    network: &BayesianNetwork,
    term: &TermAssignment,
) -> Result<f64> {
    let mut phase = 0.0;
    for pair in pairs.iter() {
        let a = occurs(network, pair.first, term.state(pair.first))?;
        let b = occurs(network, pair.second, term.state(pair.second))?;
        phase += pair_angle(a, b);
    }
    Ok(phase.rem_euclid(TAU))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::parse_network;

    const ALARM: &str = include_str!("../data/alarm.json");

    fn term(states: [usize; 5]) -> TermAssignment {
        TermAssignment {
            index: 0,
            states: states.to_vec(),
        }
    }

    #[test]
    fn angle_table() {
        assert_eq!(pair_angle(true, true), 0.0);
        assert_eq!(pair_angle(false, false), PI);
        assert_eq!(pair_angle(true, false), FRAC_PI_4);
        assert_eq!(pair_angle(false, true), FRAC_PI_4);
        for a in [false, true] {
            for b in [false, true] {
                assert_eq!(pair_angle(a, b), pair_angle(b, a));
                let quarter_turns = pair_angle(a, b) / FRAC_PI_4;
                assert_eq!(quarter_turns.fract(), 0.0);
                assert!(quarter_turns != 2.0 && quarter_turns != 6.0);
            }
        }
    }

    #[test]
    fn loads_alarm_pairs() {
        let net = parse_network(ALARM).unwrap();
        let pairs = load_sync_pairs(ALARM, &net).unwrap();
        assert_eq!(pairs.len(), 2);
        let expected = SyncPairSet::from_names(
            &net,
            &[["Burglar", "Earthquake"], ["JohnCalls", "MaryCalls"]],
        )
        .unwrap();
        assert_eq!(pairs, expected);
    }

    #[test]
    fn absent_field_is_empty() {
        let net = parse_network(ALARM).unwrap();
        let doc = net.to_json();
        assert!(!doc.contains("sync_pairs"));
        assert!(load_sync_pairs(&doc, &net).unwrap().is_empty());
    }

    #[test]
    fn bad_pairs() {
        let net = parse_network(ALARM).unwrap();
        assert!(matches!(
            SyncPairSet::from_names(&net, &[["Burglar", "Burglar"]]),
            Err(Error::SelfPair(_))
        ));
        assert!(matches!(
            SyncPairSet::from_names(&net, &[["Burglar", "Nobody"]]),
            Err(Error::UnknownVariable(_))
        ));
        assert!(matches!(
            SyncPairSet::from_names(&net, &[["Burglar", "Alarm"], ["Alarm", "Burglar"]]),
            Err(Error::DuplicatePair(..))
        ));
    }

    #[test]
    fn term_phases() {
        let net = parse_network(ALARM).unwrap();
        // Variable order: Burglar, Earthquake, Alarm, JohnCalls, MaryCalls.
        assert_eq!(term_phase(&SyncPairSet::new(), &net, &term([0; 5])).unwrap(), 0.0);

        let eb = SyncPairSet::from_names(&net, &[["Earthquake", "Burglar"]]).unwrap();
        assert_eq!(term_phase(&eb, &net, &term([1, 1, 0, 0, 0])).unwrap(), 0.0);

        let both = load_sync_pairs(ALARM, &net).unwrap();
        assert_eq!(term_phase(&both, &net, &term([0; 5])).unwrap(), 0.0);
        assert_eq!(term_phase(&both, &net, &term([1, 0, 0, 0, 0])).unwrap(), PI + FRAC_PI_4);
    }

    #[test]
    fn non_binary_rejected() {
        let net = parse_network(
            r#"{"variables":[{"name":"A","states":["lo","mid","hi"]},{"name":"B","states":["f","t"]}],
                "cpts":[{"child":"A","parents":[],"rows":[{"given":{},"dist":{"lo":0.2,"mid":0.3,"hi":0.5}}]},
                        {"child":"B","parents":[],"rows":[{"given":{},"dist":{"f":0.5,"t":0.5}}]}]}"#,
        )
        .unwrap();
        let pairs = SyncPairSet::from_names(&net, &[["A", "B"]]).unwrap();
        let t = TermAssignment {
            index: 0,
            states: vec![2, 1],
        };
        assert!(matches!(
            term_phase(&pairs, &net, &t),
            Err(Error::NonBinary { states: 3, .. })
        ));
    }
}
