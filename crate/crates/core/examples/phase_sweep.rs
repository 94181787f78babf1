// Envelope of attainable posteriors when phases are left free.
//
// `cargo run --example phase_sweep`

use qlbn::quantum::block_amplitudes;
use qlbn::sweep::SweepMode;
use qlbn::{
    analytic_bounds, infer_classical, load_sync_pairs, parse_network, sweep, PhaseStrategy,
    Query, SweepConfig, ALARM_NETWORK,
};

const CHAIN: &str = include_str!("../data/chain.json");

fn run_example() -> qlbn::Result<()> {
    // Two terms per outcome: swept exhaustively over the π/4 lattice.
    let chain = parse_network(CHAIN)?;
    let q = Query::new(&chain, "C", &[])?;
    let env = sweep(&chain, &q, &SweepConfig::default(), &load_sync_pairs(CHAIN, &chain)?)?;
    assert_eq!(env.mode, SweepMode::Exhaustive);
    for r in &env.ranges {
        println!("chain C={}: [{:.4}, {:.4}]", r.state, r.min, r.max);
    }

    // Eight terms per outcome: seeded sampling plus aligned and sync probes.
    let net = parse_network(ALARM_NETWORK)?;
    let pairs = load_sync_pairs(ALARM_NETWORK, &net)?;
    let q = Query::new(&net, "Burglar", &[("JohnCalls", "t")])?;
    let config = SweepConfig { samples: 5_000, seed: 7, ..SweepConfig::default() };
    let env = sweep(&net, &q, &config, &pairs)?;
    let classical = infer_classical(&net, &q)?.get("t").unwrap();
    let range = env.range("t").unwrap();
    println!(
        "alarm Burglar=t | JohnCalls=t: classical {classical:.4}, envelope [{:.4}, {:.4}] over {} probes",
        range.min,
        range.max,
        env.probes.len()
    );
    assert!(range.min <= classical && classical <= range.max);

    let amps = block_amplitudes(&net, &q, 1, &PhaseStrategy::Uniform(0.0))?;
    let (lo, hi) = analytic_bounds(&amps.iter().map(|a| a.magnitude).collect::<Vec<_>>());
    println!("score bounds for the t block: [{lo:.3e}, {hi:.3e}]");
    Ok(())
}

fn main() -> qlbn::Result<()> {
    run_example()
}
