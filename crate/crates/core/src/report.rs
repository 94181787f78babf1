//! Classical/quantum comparison tables, relative increases and CSV output.

use std::fmt::Write as _;
use std::io;

use crate::classical::infer_classical;
use crate::error::{Error, Result};
use crate::network::BayesianNetwork;
use crate::quantum::{infer_quantum, PhaseStrategy};
use crate::query::Query;
use crate::sweep::{envelope_contains, sweep, Envelope, SweepConfig};
use crate::sync::SyncPairSet;

/// Percent change of `quantum` relative to `classical`.
pub fn relative_increase(classical: f64, quantum: f64) -> Result<f64> {
    if classical == 0.0 {
        return Err(Error::UndefinedRatio);
    }
    Ok(100.0 * (quantum / classical - 1.0))
}

/// Rounds half away from zero to four decimals, e.g. `0.1333`.
pub fn format_probability(value: f64) -> String {
    format!("{:.4}", (value * 1e4).round() / 1e4)
}

/// Signed percent with two decimals, e.g. `+56.37%`.
pub fn format_percent(value: f64) -> String {
    // `+ 0.0` folds a negative zero after rounding into `+0.00%`.
    format!("{:+.2}%", (value * 100.0).round() / 100.0 + 0.0)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReportCell {
    /// Variable observed in its occurring state; `None` for the prior row.
    pub evidence: Option<String>,
    pub query: String,
    pub classical: f64,
    pub quantum: f64,
}

/// Which rows and columns a comparison report contains.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportLayout {
    pub evidence: Vec<String>,
    pub queries: Vec<String>,
    /// Adds a first row with no evidence.
    pub include_prior: bool,
}

impl ReportLayout {
    /// All variables in declaration order, with the prior row.
    pub fn declaration(network: &BayesianNetwork) -> Self {
        let names: Vec<String> = network
            .variables()
            .iter()
            .map(|v| v.name().to_string())
            .collect();
        ReportLayout {
            evidence: names.clone(),
            queries: names,
            include_prior: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub queries: Vec<String>,
    pub cells: Vec<ReportCell>,
}

/// Occurring state of a binary variable (its second declared state).
fn occurring_state(network: &BayesianNetwork, variable: usize) -> Result<usize> {
    let var = network.variable(variable);
    if !var.is_binary() {
        return Err(Error::NonBinary {
            variable: var.name().to_string(),
            states: var.cardinality(),
        });
    }
    Ok(1)
}

pub fn comparison_report(
    network: &BayesianNetwork,
    strategy: &PhaseStrategy,
) -> Result<ComparisonReport> {
    comparison_report_with(network, strategy, &ReportLayout::declaration(network))
}

pub fn comparison_report_with(
    network: &BayesianNetwork,
    strategy: &PhaseStrategy,
    layout: &ReportLayout,
) -> Result<ComparisonReport> {
    let rows: Vec<Option<&String>> = layout
        .include_prior
        .then_some(None)
        .into_iter()
        .chain(layout.evidence.iter().map(Some))
        .collect();

    let mut cells = Vec::with_capacity(rows.len() * layout.queries.len());
    for evidence in rows {
        let observed = match evidence {
            Some(name) => {
                let v = network.require(name)?;
                vec![(v, occurring_state(network, v)?)]
            }
            None => Vec::new(),
        };
        for query in &layout.queries {
            let target = network.require(query)?;
            let state = occurring_state(network, target)?;
            let q = Query::from_indices(network, target, observed.clone())?;
            cells.push(ReportCell {
                evidence: evidence.cloned(),
                query: query.clone(),
                classical: infer_classical(network, &q)?.probabilities[state],
                quantum: infer_quantum(network, &q, strategy)?.probabilities[state],
            });
        }
    }
    Ok(ComparisonReport {
        queries: layout.queries.clone(),
        cells,
    })
}

impl ComparisonReport {
    pub fn cell(&self, evidence: Option<&str>, query: &str) -> Option<&ReportCell> {
        self.cells
            .iter()
            .find(|c| c.evidence.as_deref() == evidence && c.query == query)
    }

    /// Two stacked blocks, classical then quantum, rounded to four decimals.
    pub fn render_table(&self) -> String {
        let label = |e: &Option<String>| match e {
            Some(name) => format!("{name} = t"),
            None => "(none)".to_string(),
        };
        let mut rows: Vec<&Option<String>> = Vec::new();
        for cell in &self.cells {
            if !rows.contains(&&cell.evidence) {
                rows.push(&cell.evidence);
            }
        }
        let headers: Vec<String> = self.queries.iter().map(|q| format!("Pr({q} = t)")).collect();
        let first_width = rows
            .iter()
            .map(|e| label(e).len())
            .chain(["Evidence".len(), "QUANTUM".len()])
            .max()
            .unwrap_or(0);

        let mut out = String::new();
        for (block, pick) in [
            ("CLASSICAL", (|c: &ReportCell| c.classical) as fn(&ReportCell) -> f64),
            ("QUANTUM", |c: &ReportCell| c.quantum),
        ] {
            let _ = write!(out, "{block:<first_width$}");
            for h in &headers {
                let _ = write!(out, "  {h:>w$}", w = h.len().max(6));
            }
            out.push('\n');
            for evidence in &rows {
                let _ = write!(out, "{:<first_width$}", label(evidence));
                for (query, h) in self.queries.iter().zip(&headers) {
                    let value = self
                        .cell(evidence.as_deref(), query)
                        .map(|c| format_probability(pick(c)))
                        .unwrap_or_default();
                    let _ = write!(out, "  {value:>w$}", w = h.len().max(6));
                }
                out.push('\n');
            }
            out.push('\n');
        }
        out
    }

    /// Columns `evidence,query,classical,quantum` at full precision; the prior
    /// row has an empty evidence field.
    pub fn write_csv<W: io::Write>(&self, writer: W) -> Result<()> {
        let mut csv = csv::Writer::from_writer(writer);
        csv.write_record(["evidence", "query", "classical", "quantum"])?;
        for c in &self.cells {
            csv.write_record([
                c.evidence.clone().unwrap_or_default(),
                c.query.clone(),
                c.classical.to_string(),
                c.quantum.to_string(),
            ])?;
        }
        csv.flush()?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv output is utf-8")
    }

    pub fn from_csv<R: io::Read>(reader: R) -> Result<Self> {
        let mut csv = csv::Reader::from_reader(reader);
        let mut cells = Vec::new();
        let mut queries: Vec<String> = Vec::new();
        for record in csv.records() {
            let record = record?;
            let field = |i: usize| record.get(i).unwrap_or_default().trim();
            let number = |i: usize| {
                field(i).parse::<f64>().map_err(|e| {
                    Error::Io(io::Error::new(
                        io::ErrorKind::InvalidData,
                        format!("bad number `{}`: {e}", field(i)),
                    ))
                })
            };
            let query = field(1).to_string();
            if !queries.contains(&query) {
                queries.push(query.clone());
            }
            cells.push(ReportCell {
                evidence: Some(field(0)).filter(|e| !e.is_empty()).map(str::to_string),
                query,
                classical: number(2)?,
                quantum: number(3)?,
            });
        }
        Ok(ComparisonReport { queries, cells })
    }
}

/// One cell of a heuristic-versus-reference comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct AuditRow {
    pub evidence: Option<String>,
    pub query: String,
    pub reference: f64,
    pub heuristic: f64,
    pub abs_diff: f64,
    pub within_tolerance: bool,
    pub envelope_min: f64,
    pub envelope_max: f64,
    pub in_envelope: bool,
}

/// Compares synchronicity-heuristic posteriors against reference quantum
/// values cell by cell, and checks each reference value against the phase
/// envelope of its query.
pub fn audit_heuristic(
    network: &BayesianNetwork,
    pairs: &SyncPairSet,
    reference: &ComparisonReport,
    tolerance: f64,
    envelope_tolerance: f64,
    config: &SweepConfig,
) -> Result<Vec<AuditRow>> {
    let strategy = PhaseStrategy::Synchronicity(pairs.clone());
    let mut rows = Vec::with_capacity(reference.cells.len());
    for cell in &reference.cells {
        let target = network.require(&cell.query)?;
        let state = occurring_state(network, target)?;
        let observed = match &cell.evidence {
            Some(name) => {
                let v = network.require(name)?;
                vec![(v, occurring_state(network, v)?)]
            }
            None => Vec::new(),
        };
        let query = Query::from_indices(network, target, observed)?;
        let heuristic = infer_quantum(network, &query, &strategy)?.probabilities[state];
        let envelope = sweep(network, &query, config, pairs)?;
        let range = &envelope.ranges[state];
        let abs_diff = (heuristic - cell.quantum).abs();
        rows.push(AuditRow {
            evidence: cell.evidence.clone(),
            query: cell.query.clone(),
            reference: cell.quantum,
            heuristic,
            abs_diff,
            within_tolerance: abs_diff <= tolerance,
            envelope_min: range.min,
            envelope_max: range.max,
            in_envelope: envelope_contains(range, cell.quantum, envelope_tolerance),
        });
    }
    Ok(rows)
}

pub fn write_audit_csv<W: io::Write>(rows: &[AuditRow], writer: W) -> Result<()> {
    let mut csv = csv::Writer::from_writer(writer);
    csv.write_record([
        "evidence",
        "query",
        "reference",
        "heuristic",
        "abs_diff",
        "within_tolerance",
        "envelope_min",
        "envelope_max",
        "in_envelope",
    ])?;
    for r in rows {
        csv.write_record([
            r.evidence.clone().unwrap_or_default(),
            r.query.clone(),
            r.reference.to_string(),
            r.heuristic.to_string(),
            r.abs_diff.to_string(),
            r.within_tolerance.to_string(),
            r.envelope_min.to_string(),
            r.envelope_max.to_string(),
            r.in_envelope.to_string(),
        ])?;
    }
    csv.flush()?;
    Ok(())
}

/// Columns `target,state,probe_id,probe_kind,value`, one row per probe and
/// target state.
pub fn write_sweep_csv<W: io::Write>(envelope: &Envelope, writer: W) -> Result<()> {
    let mut csv = csv::Writer::from_writer(writer);
    csv.write_record(["target", "state", "probe_id", "probe_kind", "value"])?;
    for probe in &envelope.probes {
        for (range, value) in envelope.ranges.iter().zip(&probe.values) {
            csv.write_record([
                envelope.target.as_str(),
                range.state.as_str(),
                &probe.id.to_string(),
                probe.kind.as_str(),
                &value.to_string(),
            ])?;
        }
    }
    csv.flush()?;
    Ok(())
}
