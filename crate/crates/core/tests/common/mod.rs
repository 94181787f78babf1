#![allow(dead_code)]

use std::collections::BTreeMap;

use proptest::prelude::*;
use qlbn::network::{CptDoc, RowDoc, VariableDoc};
use qlbn::{parse_network, BayesianNetwork, ComparisonReport, NetworkDocument};

pub const ALARM: &str = include_str!("../../data/alarm.json");
pub const CHAIN: &str = include_str!("../../data/chain.json");
pub const REFERENCE: &str = include_str!("../../data/alarm_reference.csv");

pub fn alarm() -> BayesianNetwork {
    parse_network(ALARM).unwrap()
}

pub fn reference() -> ComparisonReport {
    ComparisonReport::from_csv(REFERENCE.as_bytes()).unwrap()
}

/// Variable names in the column order of the reference table.
pub const TABLE_ORDER: [&str; 5] = ["Alarm", "Earthquake", "Burglar", "JohnCalls", "MaryCalls"];
/// Evidence rows in the order of the reference table.
pub const TABLE_ROWS: [&str; 5] = ["JohnCalls", "MaryCalls", "Earthquake", "Burglar", "Alarm"];

/// Two-node chain `A -> B` with the given priors and conditionals.
pub fn two_node(p_a: f64, p_b_given_not_a: f64, p_b_given_a: f64) -> BayesianNetwork {
    let text = format!(
        r#"{{"variables":[{{"name":"A","states":["f","t"]}},{{"name":"B","states":["f","t"]}}],
            "cpts":[{{"child":"A","parents":[],"rows":[{{"given":{{}},"dist":{{"f":{},"t":{}}}}}]}},
                    {{"child":"B","parents":["A"],"rows":[
                       {{"given":{{"A":"f"}},"dist":{{"f":{},"t":{}}}}},
                       {{"given":{{"A":"t"}},"dist":{{"f":{},"t":{}}}}}]}}]}}"#,
        1.0 - p_a,
        p_a,
        1.0 - p_b_given_not_a,
        p_b_given_not_a,
        1.0 - p_b_given_a,
        p_b_given_a
    );
    parse_network(&text).unwrap()
}

/// Shape of a random network: per variable its cardinality and parent
/// choices among earlier variables, then raw weights for every CPT row.
fn doc_from_parts(cards: &[usize], parent_sets: &[Vec<usize>], weights: &[f64]) -> NetworkDocument {
    let names: Vec<String> = (0..cards.len()).map(|i| format!("V{i}")).collect();
    let states = |k: usize| -> Vec<String> { (0..k).map(|s| format!("s{s}")).collect() };
    let variables = names
        .iter()
        .zip(cards)
        .map(|(n, &k)| VariableDoc {
            name: n.clone(),
            states: states(k),
        })
        .collect();

    let mut w = weights.iter().cycle();
    let mut cpts = Vec::new();
    for (child, &k) in cards.iter().enumerate() {
        let parents = &parent_sets[child];
        let combos: usize = parents.iter().map(|&p| cards[p]).product();
        let mut rows = Vec::new();
        for slot in 0..combos {
            let mut given = BTreeMap::new();
            let mut rest = slot;
            for &p in parents.iter().rev() {
                given.insert(names[p].clone(), format!("s{}", rest % cards[p]));
                rest /= cards[p];
            }
            let raw: Vec<f64> = (0..k).map(|_| *w.next().unwrap()).collect();
            let total: f64 = raw.iter().sum();
            let dist = (0..k).map(|s| (format!("s{s}"), raw[s] / total)).collect();
            rows.push(RowDoc { given, dist });
        }
        cpts.push(CptDoc {
            child: names[child].clone(),
            parents: parents.iter().map(|&p| names[p].clone()).collect(),
            rows,
        });
    }
    NetworkDocument {
        variables,
        cpts,
        sync_pairs: Vec::new(),
    }
}

/// Random valid networks of 1..=5 variables with 2 or 3 states each and up
/// to two parents drawn from earlier variables. All probabilities positive.
pub fn arb_network() -> impl Strategy<Value = NetworkDocument> {
    (1usize..=5)
        .prop_flat_map(|n| {
            (
                proptest::collection::vec(2usize..=3, n),
                proptest::collection::vec(proptest::collection::vec(any::<prop::sample::Index>(), 0..=2), n),
                proptest::collection::vec(0.05f64..1.0, 16..64),
            )
        })
        .prop_map(|(cards, picks, weights)| {
            let parent_sets: Vec<Vec<usize>> = picks
                .iter()
                .enumerate()
                .map(|(i, picks)| {
                    let mut ps: Vec<usize> = if i == 0 {
                        Vec::new()
                    } else {
                        picks.iter().map(|ix| ix.index(i)).collect()
                    };
                    ps.sort_unstable();
                    ps.dedup();
                    ps
                })
                .collect();
            doc_from_parts(&cards, &parent_sets, &weights)
        })
}

/// Same as [`arb_network`] but every variable is binary.
pub fn arb_binary_network() -> impl Strategy<Value = NetworkDocument> {
    (2usize..=5)
        .prop_flat_map(|n| {
            (
                proptest::collection::vec(proptest::collection::vec(any::<prop::sample::Index>(), 0..=2), n),
                proptest::collection::vec(0.05f64..1.0, 16..64),
            )
        })
        .prop_map(|(picks, weights)| {
            let n = picks.len();
            let parent_sets: Vec<Vec<usize>> = picks
                .iter()
                .enumerate()
                .map(|(i, picks)| {
                    let mut ps: Vec<usize> = if i == 0 {
                        Vec::new()
                    } else {
                        picks.iter().map(|ix| ix.index(i)).collect()
                    };
                    ps.sort_unstable();
                    ps.dedup();
                    ps
                })
                .collect();
            doc_from_parts(&vec![2; n], &parent_sets, &weights)
        })
}
