//! Indoor office NLOS models at 28 GHz, and the 802.11ad rows at 60 GHz.

use mmwave_channel::{evaluate, Frequency, LinkGeometry, Mode, ModelId};

fn show(ids: &[&str], f: f64, distances: &[f64]) -> mmwave_channel::Result<()> {
    let fc = Frequency::from_ghz(f)?;
    println!("-- {f} GHz");
    for id in ids {
        let m: ModelId = id.parse().unwrap();
        let mut line = format!("{id:<32}");
        for &d in distances {
            let g = LinkGeometry::from_d3d(d, 3.0, 1.0)?;
            let ev = evaluate(m, fc, &g, None, Mode::Lenient)?;
            line += &format!(" {:>7.2}{}", ev.mean_db, if ev.warnings.is_empty() { ' ' } else { '*' });
        }
        println!("{line}");
    }
    Ok(())
}

fn main() -> mmwave_channel::Result<()> {
    let distances = [3.0, 5.0, 10.0, 20.0, 50.0, 90.0];
    show(
        &[
            "tr38901:inh-mixed:nlos:standard",
            "5gcm:inh-mixed:nlos:cif",
            "5gcm:inh-mixed:nlos:abg",
            "5gcm:inh-mixed:nlos:dual-cif",
            "5gcm:inh-mixed:nlos:dual-abg",
            "mmmagic:inh-mixed:nlos:standard",
        ],
        28.0,
        &distances,
    )?;
    show(
        &["80211ad:inh-mixed:los:sta-ap", "80211ad:inh-mixed:nlos:sta-ap"],
        60.0,
        &distances,
    )?;
    println!("(* outside the model's validated range)");
    Ok(())
}
