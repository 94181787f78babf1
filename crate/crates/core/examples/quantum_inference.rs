// Quantum-like posteriors under different phase strategies.
//
// `cargo run --example quantum_inference`

use std::f64::consts::PI;

use qlbn::quantum::block_amplitudes;
use qlbn::report::{format_percent, format_probability};
use qlbn::{
    infer_classical, infer_quantum, interference, parse_network, phasor_oracle,
    relative_increase, ExplicitPhases, PhaseStrategy, Query, ALARM_NETWORK,
};

fn run_example() -> qlbn::Result<()> {
    let net = parse_network(ALARM_NETWORK)?;
    let q = Query::new(&net, "Burglar", &[("JohnCalls", "t")])?;
    let classical = infer_classical(&net, &q)?.get("t").unwrap();
    println!("classical          {}", format_probability(classical));

    let n = q.term_count(&net);
    let strategies = [
        ("zero interference", PhaseStrategy::ZeroInterference),
        ("uniform 0", PhaseStrategy::Uniform(0.0)),
        (
            "alternating 0/π",
            PhaseStrategy::Explicit(
                ExplicitPhases::new()
                    .with("f", (0..n).map(|i| if i % 2 == 0 { 0.0 } else { PI }).collect())
                    .with("t", (0..n).map(|i| if i % 2 == 0 { 0.0 } else { PI }).collect()),
            ),
        ),
    ];
    for (label, strategy) in &strategies {
        let d = infer_quantum(&net, &q, strategy)?;
        let p = d.get("t").unwrap();
        println!(
            "{label:<18} {}  {}  cross terms {:?}",
            format_probability(p),
            format_percent(relative_increase(classical, p)?),
            d.interference.iter().map(|x| format!("{x:+.5}")).collect::<Vec<_>>()
        );
    }

    // The pairwise expansion agrees with the squared modulus of the phasor sum.
    let amps = block_amplitudes(&net, &q, 1, &strategies[2].1)?;
    let expansion: f64 =
        amps.iter().map(|a| a.magnitude * a.magnitude).sum::<f64>() + 2.0 * interference(&amps);
    println!("expansion {expansion:.12} vs phasor {:.12}", phasor_oracle(&amps));
    assert!((expansion - phasor_oracle(&amps)).abs() < 1e-12);

    let zero = infer_quantum(&net, &q, &PhaseStrategy::ZeroInterference)?;
    assert!((zero.get("t").unwrap() - classical).abs() < 1e-12);
    Ok(())
}

fn main() -> qlbn::Result<()> {
    run_example()
}
