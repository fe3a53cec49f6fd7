//! Fits CI, CIF, ABG and a dual-slope CIF model to synthetic multi-band
//! measurements with 8 dB shadowing.

use mmwave_channel::fitting::{fit_abg, fit_ci, fit_cif, fit_dual_slope, DualFamily, FitResult, MeasurementRecord};
use mmwave_channel::pathloss::{pl_abg, AbgParams};
use mmwave_channel::stochastic::RandomSource;
use mmwave_channel::Frequency;

fn report(name: &str, fit: &FitResult) {
    let params: Vec<String> = fit.params.named().iter().map(|(k, v)| format!("{k}={v:.3}")).collect();
    println!("{name:<9} {:<60} σ={:.2} dB  N={}", params.join(" "), fit.sigma, fit.count);
}

fn main() -> mmwave_channel::Result<()> {
    let truth = AbgParams { alpha: 3.53, beta: 22.4, gamma: 2.13 };
    let mut rng = RandomSource::new(1);
    let mut records = Vec::new();
    for f in [28.0, 38.0, 73.0] {
        for k in 0..400 {
            let d = 20.0 + k as f64;
            let pl = pl_abg(Frequency::from_ghz(f)?, d, &truth)? + 8.0 * rng.standard_normal();
            records.push(MeasurementRecord::new(f, d, pl)?);
        }
    }

    report("CI", &fit_ci(&records)?);
    report("CIF", &fit_cif(&records)?);
    report("ABG", &fit_abg(&records)?);
    let candidates: Vec<f64> = (3..=40).map(|k| k as f64 * 10.0).collect();
    report("dual-CIF", &fit_dual_slope(&records, DualFamily::Cif, &candidates)?);
    Ok(())
}
