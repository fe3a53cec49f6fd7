//! Validated ranges: lenient evaluation warns, strict evaluation refuses.

use mmwave_channel::{check_applicability, evaluate, Frequency, LinkGeometry, Mode, ModelId};

fn main() -> mmwave_channel::Result<()> {
    let metis: ModelId = "metis:umi-street:nlos:standard".parse().unwrap();
    let g = LinkGeometry::new(150.0, 10.0, 1.5)?;

    for f in [3.5, 28.0] {
        let fc = Frequency::from_ghz(f)?;
        let violations = check_applicability(metis, fc, &g)?;
        println!("{metis} at {fc}: {} violation(s)", violations.len());
        for v in &violations {
            println!("  {v}");
        }
        let ev = evaluate(metis, fc, &g, None, Mode::Lenient)?;
        println!("  lenient: {:.2} dB with {} warning(s)", ev.mean_db, ev.warnings.len());
        match evaluate(metis, fc, &g, None, Mode::Strict) {
            Ok(ev) => println!("  strict:  {:.2} dB", ev.mean_db),
            Err(e) => println!("  strict:  {e}"),
        }
    }
    Ok(())
}
