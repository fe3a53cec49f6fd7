//! Breakpoint distances across frequency. At mmWave the 3GPP breakpoint
//! usually lies beyond the cell edge, so UMi LOS links stay on the first
//! slope.

use mmwave_channel::pathloss::{breakpoint_itur_rma, breakpoint_metis, breakpoint_tr38901};
use mmwave_channel::Frequency;

fn main() -> mmwave_channel::Result<()> {
    println!("{:>6} {:>14} {:>14} {:>16}", "fc", "3GPP UMi", "METIS UMi", "ITU-R RMa");
    for f in [2.0, 6.0, 9.1, 28.0, 39.0, 60.0, 73.0] {
        let fc = Frequency::from_ghz(f)?;
        println!(
            "{f:>6} {:>14.1} {:>14.1} {:>16.1}",
            breakpoint_tr38901(fc, 10.0, 1.5)?,
            breakpoint_metis(fc, 10.0, 1.5)?,
            breakpoint_itur_rma(fc, 35.0, 1.5)?,
        );
    }
    // Smallest UMi BS height still keeps d'BP above 500 m at 28 GHz.
    let low = breakpoint_tr38901(Frequency::from_ghz(28.0)?, 4.0, 1.5)?;
    println!("\n3GPP d'BP at 28 GHz, hBS = 4 m: {low:.0} m");
    Ok(())
}
