//! Discrete Bayesian network model and its JSON document form.
//!
//! A network document lists `variables` (name plus ordered state labels),
//! one conditional table per variable under `cpts`, and optionally the
//! synchronized variable pairs under `sync_pairs`:
//!
//! ```json
//! {
//!   "variables": [{ "name": "X", "states": ["f", "t"] }],
//!   "cpts": [{ "child": "X", "parents": [], "rows": [{ "given": {}, "dist": { "f": 0.7, "t": 0.3 } }] }],
//!   "sync_pairs": []
//! }
//! ```
//!
//! List order is significant: it fixes the declared variable order (used to
//! break ties in the topological order) and each variable's state order.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance on the sum of every conditional table row.
pub const ROW_SUM_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VariableDoc {
    pub name: String,
    pub states: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RowDoc {
    pub given: BTreeMap<String, String>,
    pub dist: BTreeMap<String, f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CptDoc {
    pub child: String,
    #[serde(default)]
    pub parents: Vec<String>,
    pub rows: Vec<RowDoc>,
}

/// Serde mirror of the network document. Unvalidated.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NetworkDocument {
    pub variables: Vec<VariableDoc>,
    pub cpts: Vec<CptDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub sync_pairs: Vec<[String; 2]>,
}

impl NetworkDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(Error::from_json)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("network documents always serialize")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Variable {
    name: String,
    states: Vec<String>,
}

impl Variable {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn cardinality(&self) -> usize {
        self.states.len()
    }

    pub fn state_index(&self, state: &str) -> Option<usize> {
        self.states.iter().position(|s| s == state)
    }

    pub fn is_binary(&self) -> bool {
        self.states.len() == 2
    }
}

/// `Pr(child | parents)`, one row per parent-state combination.
///
/// Rows are indexed in mixed radix over the parents in declared order, the
/// first parent being the most significant digit.
#[derive(Debug, Clone, PartialEq)]
pub struct ConditionalTable {
    child: usize,
    parents: Vec<usize>,
    rows: Vec<Vec<f64>>,
}

impl ConditionalTable {
    pub fn child(&self) -> usize {
        self.child
    }

    pub fn parents(&self) -> &[usize] {
        &self.parents
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    /// Row index for the parent states found in a full assignment.
    pub fn row_index(&self, network: &BayesianNetwork, assignment: &[usize]) -> usize {
        self.parents.iter().fold(0, |acc, &p| {
            acc * network.variables[p].cardinality() + assignment[p]
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BayesianNetwork {
    variables: Vec<Variable>,
    tables: Vec<ConditionalTable>,
    order: Vec<usize>,
}

impl BayesianNetwork {
    /// Validates a document and builds the network from it.
    pub fn from_document(doc: &NetworkDocument) -> Result<Self> {
        let report = validate(doc);
        if !report.is_empty() {
            return Err(Error::Invalid(report));
        }

        let variables: Vec<Variable> = doc
            .variables
            .iter()
            .map(|v| Variable {
                name: v.name.clone(),
                states: v.states.clone(),
            })
            .collect();
        let index: HashMap<&str, usize> = variables
            .iter()
            .enumerate()
            .map(|(i, v)| (v.name.as_str(), i))
            .collect();

        let mut tables: Vec<Option<ConditionalTable>> = vec![None; variables.len()];
        for cpt in &doc.cpts {
            let child = index[cpt.child.as_str()];
            let parents: Vec<usize> = cpt.parents.iter().map(|p| index[p.as_str()]).collect();
            let combos: usize = parents.iter().map(|&p| variables[p].cardinality()).product();
            let mut rows = vec![Vec::new(); combos];
            for row in &cpt.rows {
                let slot = parents.iter().fold(0, |acc, &p| {
                    let var = &variables[p];
                    acc * var.cardinality() + var.state_index(&row.given[&var.name]).unwrap()
                });
                rows[slot] = variables[child]
                    .states
                    .iter()
                    .map(|s| row.dist[s])
                    .collect();
            }
            tables[child] = Some(ConditionalTable {
                child,
                parents,
                rows,
            });
        }
        let tables: Vec<ConditionalTable> = tables.into_iter().map(Option::unwrap).collect();
        let edges = tables.iter().map(|t| t.parents.clone()).collect::<Vec<_>>();
        let order = topological_order(&edges).expect("validated network is acyclic");

        Ok(BayesianNetwork {
            variables,
            tables,
            order,
        })
    }

    /// Serializes back into document form; rows are emitted in canonical
    /// parent-combination order.
    pub fn to_document(&self) -> NetworkDocument {
        let variables = self
            .variables
            .iter()
            .map(|v| VariableDoc {
                name: v.name.clone(),
                states: v.states.clone(),
            })
            .collect();
        let cpts = self
            .tables
            .iter()
            .map(|table| {
                let child = &self.variables[table.child];
                let parent_vars: Vec<&Variable> =
                    table.parents.iter().map(|&p| &self.variables[p]).collect();
                let rows = table
                    .rows
                    .iter()
                    .enumerate()
                    .map(|(slot, dist)| {
                        let mut given = BTreeMap::new();
                        let mut rest = slot;
                        for var in parent_vars.iter().rev() {
                            given.insert(
                                var.name.clone(),
                                var.states[rest % var.cardinality()].clone(),
                            );
                            rest /= var.cardinality();
                        }
                        RowDoc {
                            given,
                            dist: child.states.iter().cloned().zip(dist.iter().copied()).collect(),
                        }
                    })
                    .collect();
                CptDoc {
                    child: child.name.clone(),
                    parents: parent_vars.iter().map(|v| v.name.clone()).collect(),
                    rows,
                }
            })
            .collect();
        NetworkDocument {
            variables,
            cpts,
            sync_pairs: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        self.to_document().to_json()
    }

    pub fn len(&self) -> usize {
        self.variables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.variables.is_empty()
    }

    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    pub fn variable(&self, index: usize) -> &Variable {
        &self.variables[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v.name == name)
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn state_index(&self, variable: usize, state: &str) -> Result<usize> {
        let var = &self.variables[variable];
        var.state_index(state).ok_or_else(|| Error::UnknownState {
            variable: var.name.clone(),
            state: state.to_string(),
        })
    }

    pub fn tables(&self) -> &[ConditionalTable] {
        &self.tables
    }

    pub fn table(&self, variable: usize) -> &ConditionalTable {
        &self.tables[variable]
    }

    /// Variables in topological order; ties go to the earlier declaration.
    pub fn topological_order(&self) -> &[usize] {
        &self.order
    }

    /// `Pr(X_v = assignment[v] | parents)` read from the full assignment.
    pub fn local_probability(&self, variable: usize, assignment: &[usize]) -> f64 {
        let table = &self.tables[variable];
        table.rows[table.row_index(self, assignment)][assignment[variable]]
    }
}

/// Parses and validates a network document.
pub fn parse_network(document: &str) -> Result<BayesianNetwork> {
    BayesianNetwork::from_document(&NetworkDocument::from_json(document)?)
}

/// One violated invariant in a network document.
#[derive(Debug, Clone, PartialEq)]
pub enum Finding {
    EmptyNetwork,
    DuplicateVariable(String),
    TooFewStates { variable: String, count: usize },
    DuplicateState { variable: String, state: String },
    MissingTable(String),
    DuplicateTable(String),
    TableForUnknownVariable(String),
    UnknownParent { child: String, parent: String },
    DuplicateParent { child: String, parent: String },
    Cycle(Vec<String>),
    MalformedGiven { child: String, given: String },
    DuplicateRow { child: String, given: String },
    MissingRow { child: String, given: String },
    UnknownChildState { child: String, given: String, state: String },
    MissingChildState { child: String, given: String, state: String },
    ProbabilityOutOfRange { child: String, given: String, state: String, value: f64 },
    RowSum { child: String, given: String, sum: f64 },
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Finding::EmptyNetwork => write!(f, "network declares no variables"),
            Finding::DuplicateVariable(name) => write!(f, "duplicate variable `{name}`"),
            Finding::TooFewStates { variable, count } => {
                write!(f, "variable `{variable}` has {count} states, needs at least 2")
            }
            Finding::DuplicateState { variable, state } => {
                write!(f, "variable `{variable}` repeats state `{state}`")
            }
            Finding::MissingTable(name) => write!(f, "no table for variable `{name}`"),
            Finding::DuplicateTable(name) => write!(f, "more than one table for `{name}`"),
            Finding::TableForUnknownVariable(name) => {
                write!(f, "table for undeclared variable `{name}`")
            }
            Finding::UnknownParent { child, parent } => {
                write!(f, "unknown parent `{parent}` of `{child}`")
            }
            Finding::DuplicateParent { child, parent } => {
                write!(f, "`{child}` lists parent `{parent}` twice")
            }
            Finding::Cycle(names) => write!(f, "cycle: {}", names.join(",")),
            Finding::MalformedGiven { child, given } => {
                write!(f, "table `{child}`: row given {given} does not match the parents")
            }
            Finding::DuplicateRow { child, given } => {
                write!(f, "table `{child}`: duplicate row for {given}")
            }
            Finding::MissingRow { child, given } => {
                write!(f, "table `{child}`: missing row for {given}")
            }
            Finding::UnknownChildState { child, given, state } => {
                write!(f, "table `{child}` row {given}: unknown state `{state}`")
            }
            Finding::MissingChildState { child, given, state } => {
                write!(f, "table `{child}` row {given}: no probability for state `{state}`")
            }
            Finding::ProbabilityOutOfRange {
                child,
                given,
                state,
                value,
            } => write!(
                f,
                "table `{child}` row {given}: probability {value} for `{state}` outside [0, 1]"
            ),
            Finding::RowSum { child, given, sum } => {
                write!(f, "table `{child}` row {given}: row sum {sum} ≠ 1")
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ValidationReport {
    pub findings: Vec<Finding>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.findings.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for finding in &self.findings {
            writeln!(f, "  - {finding}")?;
        }
        Ok(())
    }
}

fn describe_given(given: &BTreeMap<String, String>) -> String {
    if given.is_empty() {
        return "{}".to_string();
    }
    let parts: Vec<String> = given.iter().map(|(k, v)| format!("{k}={v}")).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Checks every structural and numeric invariant of a document. Findings are
/// data; an empty report means the document builds a valid network.
pub fn validate(doc: &NetworkDocument) -> ValidationReport {
    let mut findings = Vec::new();

    if doc.variables.is_empty() {
        findings.push(Finding::EmptyNetwork);
    }

    let mut index: HashMap<&str, usize> = HashMap::new();
    for (i, var) in doc.variables.iter().enumerate() {
        if index.contains_key(var.name.as_str()) {
            findings.push(Finding::DuplicateVariable(var.name.clone()));
        } else {
            index.insert(&var.name, i);
        }
        if var.states.len() < 2 {
            findings.push(Finding::TooFewStates {
                variable: var.name.clone(),
                count: var.states.len(),
            });
        }
        for (j, state) in var.states.iter().enumerate() {
            if var.states[..j].contains(state) {
                findings.push(Finding::DuplicateState {
                    variable: var.name.clone(),
                    state: state.clone(),
                });
            }
        }
    }

    // First table per declared variable; its resolved parent list (None when
    // a parent is unresolvable) drives the cycle and row checks.
    let mut table_of: Vec<Option<&CptDoc>> = vec![None; doc.variables.len()];
    let mut edges: Vec<Vec<usize>> = vec![Vec::new(); doc.variables.len()];
    for cpt in &doc.cpts {
        let Some(&child) = index.get(cpt.child.as_str()) else {
            findings.push(Finding::TableForUnknownVariable(cpt.child.clone()));
            continue;
        };
        if table_of[child].is_some() {
            findings.push(Finding::DuplicateTable(cpt.child.clone()));
            continue;
        }
        table_of[child] = Some(cpt);

        let mut resolved = true;
        for (j, parent) in cpt.parents.iter().enumerate() {
            if cpt.parents[..j].contains(parent) {
                findings.push(Finding::DuplicateParent {
                    child: cpt.child.clone(),
                    parent: parent.clone(),
                });
                resolved = false;
            }
            match index.get(parent.as_str()) {
                Some(&p) => edges[child].push(p),
                None => {
                    findings.push(Finding::UnknownParent {
                        child: cpt.child.clone(),
                        parent: parent.clone(),
                    });
                    resolved = false;
                }
            }
        }
        if resolved {
            check_rows(doc, &index, cpt, &mut findings);
        }
    }

    for (i, table) in table_of.iter().enumerate() {
        if table.is_none() && index.get(doc.variables[i].name.as_str()) == Some(&i) {
            findings.push(Finding::MissingTable(doc.variables[i].name.clone()));
        }
    }

    if let Err(cycle) = topological_order(&edges) {
        let names = cycle
            .into_iter()
            .map(|i| doc.variables[i].name.clone())
            .collect();
        findings.push(Finding::Cycle(names));
    }

    ValidationReport { findings }
}

fn check_rows(
    doc: &NetworkDocument,
    index: &HashMap<&str, usize>,
    cpt: &CptDoc,
    findings: &mut Vec<Finding>,
) {
    let child = &doc.variables[index[cpt.child.as_str()]];
    let parents: Vec<&VariableDoc> = cpt
        .parents
        .iter()
        .map(|p| &doc.variables[index[p.as_str()]])
        .collect();
    let combos: usize = parents.iter().map(|p| p.states.len()).product();
    let mut seen = vec![false; combos];

    for row in &cpt.rows {
        let given = describe_given(&row.given);
        let slot = if row.given.len() == parents.len() {
            parents.iter().try_fold(0usize, |acc, p| {
                let state = row.given.get(&p.name)?;
                let s = p.states.iter().position(|x| x == state)?;
                Some(acc * p.states.len() + s)
            })
        } else {
            None
        };
        match slot {
            None => findings.push(Finding::MalformedGiven {
                child: cpt.child.clone(),
                given: given.clone(),
            }),
            Some(slot) if seen[slot] => findings.push(Finding::DuplicateRow {
                child: cpt.child.clone(),
                given: given.clone(),
            }),
            Some(slot) => seen[slot] = true,
        }

        for (state, &value) in &row.dist {
            if !child.states.contains(state) {
                findings.push(Finding::UnknownChildState {
                    child: cpt.child.clone(),
                    given: given.clone(),
                    state: state.clone(),
                });
            }
            if !(0.0..=1.0).contains(&value) {
                findings.push(Finding::ProbabilityOutOfRange {
                    child: cpt.child.clone(),
                    given: given.clone(),
                    state: state.clone(),
                    value,
                });
            }
        }
        for state in &child.states {
            if !row.dist.contains_key(state) {
                findings.push(Finding::MissingChildState {
                    child: cpt.child.clone(),
                    given: given.clone(),
                    state: state.clone(),
                });
            }
        }
        let sum: f64 = row.dist.values().sum();
        if (sum - 1.0).abs() > ROW_SUM_TOLERANCE {
            findings.push(Finding::RowSum {
                child: cpt.child.clone(),
                given,
                sum,
            });
        }
    }

    for (slot, _) in seen.iter().enumerate().filter(|(_, seen)| !**seen) {
        let mut given = BTreeMap::new();
        let mut rest = slot;
        for p in parents.iter().rev() {
            given.insert(p.name.clone(), p.states[rest % p.states.len()].clone());
            rest /= p.states.len();
        }
        findings.push(Finding::MissingRow {
            child: cpt.child.clone(),
            given: describe_given(&given),
        });
    }
}

/// Kahn's algorithm over `parents[child]` edge lists, always emitting the
/// lowest ready index first. On failure returns the members of one cycle in
/// ascending index order.
fn topological_order(parents: &[Vec<usize>]) -> std::result::Result<Vec<usize>, Vec<usize>> {
    let n = parents.len();
    let mut children = vec![Vec::new(); n];
    let mut indegree = vec![0usize; n];
    for (child, ps) in parents.iter().enumerate() {
        for &p in ps {
            children[p].push(child);
            indegree[child] += 1;
        }
    }
    let mut ready: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&i| indegree[i] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(v)) = ready.pop() {
        order.push(v);
        for &c in &children[v] {
            indegree[c] -= 1;
            if indegree[c] == 0 {
                ready.push(Reverse(c));
            }
        }
    }
    if order.len() == n {
        return Ok(order);
    }

    // Every leftover node has a leftover parent; walking parents from any of
    // them must revisit a node, which closes a cycle.
    let leftover: Vec<bool> = (0..n).map(|i| indegree[i] > 0).collect();
    let start = leftover.iter().position(|&l| l).unwrap();
    let mut path = vec![start];
    let mut node = start;
    loop {
        node = *parents[node].iter().find(|&&p| leftover[p]).unwrap();
        if let Some(pos) = path.iter().position(|&x| x == node) {
            let mut cycle = path.split_off(pos);
            cycle.sort_unstable();
            return Err(cycle);
        }
        path.push(node);
    }
}
