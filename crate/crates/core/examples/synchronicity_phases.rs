// Phases assigned by the synchronicity heuristic over declared pairs.
//
// `cargo run --example synchronicity_phases`

use qlbn::quantum::block_amplitudes;
use qlbn::report::format_probability;
use qlbn::{
    enumerate_terms, infer_classical, infer_quantum, load_sync_pairs, pair_angle,
    parse_network, term_phase, PhaseStrategy, Query, ALARM_NETWORK,
};

fn run_example() -> qlbn::Result<()> {
    let net = parse_network(ALARM_NETWORK)?;
    let pairs = load_sync_pairs(ALARM_NETWORK, &net)?;
    for p in pairs.iter() {
        println!("pair {} ~ {}", net.variables()[p.first()].name(), net.variables()[p.second()].name());
    }
    for (a, b) in [(true, true), (true, false), (false, true), (false, false)] {
        println!("angle(occurs={a}, occurs={b}) = {:.4}", pair_angle(a, b));
    }

    let q = Query::new(&net, "Burglar", &[("JohnCalls", "t")])?;
    println!("\nterms of Burglar=t given JohnCalls=t:");
    for term in enumerate_terms(&net, &q, "t")? {
        let named: Vec<String> = term.named(&net).iter().map(|(v, s)| format!("{v}={s}")).collect();
        println!("  #{} {:<60} θ = {:.4}", term.index, named.join(" "), term_phase(&pairs, &net, &term)?);
    }

    let strategy = PhaseStrategy::Synchronicity(pairs);
    let amps = block_amplitudes(&net, &q, 1, &strategy)?;
    assert_eq!(amps.len(), q.term_count(&net));

    let classical = infer_classical(&net, &q)?;
    let quantum = infer_quantum(&net, &q, &strategy)?;
    println!(
        "\nPr(Burglar=t | JohnCalls=t): classical {}, synchronicity {}",
        format_probability(classical.get("t").unwrap()),
        format_probability(quantum.get("t").unwrap())
    );
    Ok(())
}

fn main() -> qlbn::Result<()> {
    run_example()
}
