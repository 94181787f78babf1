// Validate a network document and list every violated invariant.
//
// `cargo run --example validate_network`

use qlbn::{validate, BayesianNetwork, NetworkDocument, ALARM_NETWORK};

const BROKEN: &str = r#"{
  "variables": [
    {"name": "Rain", "states": ["no", "yes"]},
    {"name": "Wet", "states": ["no", "yes"]}
  ],
  "cpts": [
    {"child": "Rain", "parents": ["Wet"], "rows": [
      {"given": {"Wet": "no"}, "dist": {"no": 0.8, "yes": 0.3}},
      {"given": {"Wet": "yes"}, "dist": {"no": 0.5, "yes": 0.5}}
    ]},
    {"child": "Wet", "parents": ["Rain"], "rows": [
      {"given": {"Rain": "no"}, "dist": {"no": 0.9, "yes": 0.1}}
    ]}
  ]
}"#;

fn run_example() -> qlbn::Result<()> {
    let doc = NetworkDocument::from_json(ALARM_NETWORK)?;
    assert!(validate(&doc).is_empty());
    let net = BayesianNetwork::from_document(&doc)?;
    let order: Vec<&str> = net
        .topological_order()
        .iter()
        .map(|&i| net.variables()[i].name())
        .collect();
    println!("alarm: valid, topological order {}", order.join(" -> "));

    let report = validate(&NetworkDocument::from_json(BROKEN)?);
    println!("broken: {} finding(s)", report.findings.len());
    print!("{report}");
    assert!(report.findings.len() >= 3);

    match NetworkDocument::from_json("{\n  \"variables\": [,]\n}") {
        Err(e) => println!("syntax: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}

fn main() -> qlbn::Result<()> {
    run_example()
}
