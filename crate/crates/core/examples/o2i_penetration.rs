//! Building and car penetration loss from 6 to 100 GHz.

use mmwave_channel::o2i::O2iVariant;
use mmwave_channel::Frequency;

fn main() -> mmwave_channel::Result<()> {
    print!("{:>5}", "fc");
    for v in O2iVariant::ALL {
        print!(" {:>14}", v.token());
    }
    println!();
    for f in [6.0, 10.0, 28.0, 39.0, 60.0, 73.0, 100.0] {
        let fc = Frequency::from_ghz(f)?;
        print!("{f:>5}");
        for v in O2iVariant::ALL {
            // Penetration only: zero outdoor loss, zero indoor depth.
            let (mean, sigma) = v.params().total(0.0, fc, 0.0)?;
            print!(" {:>8.2}±{sigma:<5.2}", mean);
        }
        println!();
    }

    let (total, sigma) = O2iVariant::Tr38901High.params().total(110.0, Frequency::from_ghz(28.0)?, 15.0)?;
    println!("\n110 dB outdoor + high-loss wall + 15 m indoors at 28 GHz: {total:.2} dB (σ {sigma} dB)");
    Ok(())
}
