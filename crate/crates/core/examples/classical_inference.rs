// Exact posteriors by enumeration, and the joint of a full assignment.
//
// `cargo run --example classical_inference`

use qlbn::report::format_probability;
use qlbn::{infer_classical, joint_probability_named, parse_network, Query, ALARM_NETWORK};

fn run_example() -> qlbn::Result<()> {
    let net = parse_network(ALARM_NETWORK)?;

    let joint = joint_probability_named(
        &net,
        &[
            ("Burglar", "f"),
            ("Earthquake", "f"),
            ("Alarm", "t"),
            ("JohnCalls", "t"),
            ("MaryCalls", "t"),
        ],
    )?;
    println!("Pr(¬b, ¬e, a, j, m) = {joint:.6}");

    for (target, evidence) in [
        ("Burglar", vec![]),
        ("Burglar", vec![("JohnCalls", "t")]),
        ("Burglar", vec![("JohnCalls", "t"), ("MaryCalls", "t")]),
        ("Alarm", vec![("Earthquake", "t")]),
    ] {
        let q = Query::new(&net, target, &evidence)?;
        let d = infer_classical(&net, &q)?;
        let given: Vec<String> = evidence.iter().map(|(v, s)| format!("{v}={s}")).collect();
        println!(
            "Pr({target}=t | {}) = {}   ({} terms per outcome)",
            if given.is_empty() { "-".to_string() } else { given.join(", ") },
            format_probability(d.get("t").unwrap()),
            q.term_count(&net)
        );
    }

    let q = Query::new(&net, "Burglar", &[("JohnCalls", "t")])?;
    assert!((infer_classical(&net, &q)?.get("t").unwrap() - 0.1333).abs() < 5e-4);
    Ok(())
}

fn main() -> qlbn::Result<()> {
    run_example()
}
