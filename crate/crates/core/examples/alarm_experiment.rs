// Full classical/quantum comparison on the alarm network, with relative
// increases for the JohnCalls and MaryCalls rows.
//
// `cargo run --example alarm_experiment`

use qlbn::report::{format_percent, ReportLayout};
use qlbn::{
    comparison_report_with, load_sync_pairs, parse_network, relative_increase, PhaseStrategy,
    ALARM_NETWORK,
};

fn run_example() -> qlbn::Result<()> {
    let net = parse_network(ALARM_NETWORK)?;
    let pairs = load_sync_pairs(ALARM_NETWORK, &net)?;
    let layout = ReportLayout {
        evidence: ["JohnCalls", "MaryCalls", "Earthquake", "Burglar", "Alarm"].map(String::from).to_vec(),
        queries: ["Alarm", "Earthquake", "Burglar", "JohnCalls", "MaryCalls"].map(String::from).to_vec(),
        include_prior: true,
    };
    let report = comparison_report_with(&net, &PhaseStrategy::Synchronicity(pairs), &layout)?;
    print!("{}", report.render_table());

    println!();
    for evidence in ["JohnCalls", "MaryCalls"] {
        for query in ["Earthquake", "Burglar"] {
            let cell = report.cell(Some(evidence), query).unwrap();
            println!(
                "Pr({query}=t | {evidence}=t): {:.4} -> {:.4} ({})",
                cell.classical,
                cell.quantum,
                format_percent(relative_increase(cell.classical, cell.quantum)?)
            );
        }
    }
    assert_eq!(report.cells.len(), 30);
    Ok(())
}

fn main() -> qlbn::Result<()> {
    run_example()
}
