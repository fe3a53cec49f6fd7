use std::fs;
use std::path::Path;

use super::run;
use crate::geometry::LinkGeometry;
use crate::model::{Frequency, ModelId};
use crate::pathloss::mean_path_loss;

struct Output {
    code: i32,
    out: String,
    err: String,
}

fn call(args: &[&str]) -> Output {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("mmwchan").chain(args.iter().copied()), &mut out, &mut err);
    Output {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn ok(args: &[&str]) -> String {
    let o = call(args);
    assert_eq!(o.code, 0, "{args:?}: {}", o.err);
    o.out
}

fn field<'a>(out: &'a str, key: &str) -> &'a str {
    out.lines()
        .find_map(|l| l.strip_prefix(key))
        .unwrap_or_else(|| panic!("no {key} in {out}"))
        .trim()
}

fn table(csv: &str) -> (Vec<String>, Vec<Vec<f64>>) {
    let mut lines = csv.lines();
    let header = lines.next().unwrap().split(',').map(String::from).collect();
    let rows = lines
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect();
    (header, rows)
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn pathloss_report() {
    let out = ok(&[
        "pathloss", "--org", "5gcm", "--scenario", "umi-street", "--vis", "los", "--family", "ci", "--fc", "28",
        "--d3d", "100",
    ]);
    assert_eq!(field(&out, "mean_db:"), "103.343");
    assert_eq!(field(&out, "sigma_db:"), "3.76000");
    assert_eq!(field(&out, "model:"), "5gcm:umi-street:los:ci");
}

#[test]
fn pathloss_below_reference_distance() {
    let o = call(&["pathloss", "--model", "5gcm:umi-street:los:ci", "--fc", "28", "--d3d", "0.5"]);
    assert_eq!(o.code, 3);
    assert!(o.err.contains("below the 1 m reference"), "{}", o.err);
}

#[test]
fn strict_mode_rejects_out_of_range_frequency() {
    let o = call(&["pathloss", "--org", "metis", "--scenario", "umi-street", "--vis", "nlos", "--fc", "28", "--strict"]);
    assert_eq!(o.code, 3);
    assert!(o.err.contains("0.45–6 GHz"), "{}", o.err);

    // Lenient mode reports the same violation as a warning.
    let out = ok(&["pathloss", "--org", "metis", "--scenario", "umi-street", "--vis", "nlos", "--fc", "28", "--d2d", "100"]);
    assert!(field(&out, "warning:").contains("0.45–6 GHz"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(call(&["pathloss", "--fc", "28", "--bogus"]).code, 2);
    assert_eq!(call(&["pathloss", "--fc", "abc", "--model", "5gcm:umi-street:los:ci"]).code, 2);
    assert_eq!(call(&["pathloss", "--fc", "28", "--model", "5gcm:umi-street:los:ci"]).code, 2);
    assert_eq!(call(&["pathloss", "--fc", "28", "--model", "5gcm:uma:los:dual-cif", "--d2d", "10"]).code, 2);
    assert_eq!(call(&["nosuch"]).code, 2);
    assert_eq!(call(&["--help"]).code, 0);
}

#[test]
fn o2i_report() {
    let out = ok(&["o2i", "--variant", "tr38901-low", "--fc", "28", "--plb", "100", "--din", "10"]);
    let mean: f64 = field(&out, "mean_db:").parse().unwrap();
    assert!((mean - 122.83).abs() < 0.01);
    assert_eq!(field(&out, "sigma_db:"), "4.40000");
    assert_eq!(call(&["o2i", "--variant", "tr38901-low", "--fc", "28", "--plb", "100", "--din", "-1"]).code, 3);
}

#[test]
fn sweep_matches_single_evaluations() {
    let ids = [
        "tr38901:umi-street:los:standard",
        "5gcm:umi-street:los:ci",
        "metis:umi-street:los:standard",
        "mmmagic:umi-street:los:abg",
    ];
    let models = ids.join(",");
    let csv = ok(&["sweep", "--fc", "28", "--min", "10", "--max", "500", "--count", "25", "--model", &models]);
    let (header, rows) = table(&csv);
    assert_eq!(header[0], "d_m");
    assert_eq!(&header[1..], ids);
    assert_eq!(rows.len(), 25);
    let f = Frequency::from_ghz(28.0).unwrap();
    for row in &rows {
        for (j, id) in ids.iter().enumerate() {
            let id: ModelId = id.parse().unwrap();
            let g = LinkGeometry::new(row[0], 10.0, 1.5).unwrap();
            assert_eq!(row[j + 1], mean_path_loss(id, f, &g, None).unwrap());
        }
    }
}

#[test]
fn sweep_edge_cases() {
    let o = call(&["sweep", "--fc", "28"]);
    assert_eq!(o.code, 2);
    let csv = ok(&["sweep", "--fc", "28", "--model", "5gcm:umi-street:los:ci", "--min", "1", "--max", "2", "--count", "2"]);
    assert_eq!(csv.lines().count(), 3);
    assert_eq!(call(&["sweep", "--fc", "28", "--model", "5gcm:umi-street:los:ci", "--min", "0.5"]).code, 2);
    assert_eq!(call(&["sweep", "--fc", "28", "--model", "5gcm:umi-street:los:ci", "--count", "1"]).code, 2);
    let strict = call(&["sweep", "--fc", "28", "--model", "metis:umi-street:los:standard", "--strict"]);
    assert_eq!(strict.code, 3);
}

#[test]
fn sweep_shows_breakpoint_slope() {
    // d'BP = 180 m at 3 GHz for the default UMi heights.
    let csv = ok(&[
        "sweep", "--fc", "3", "--model", "tr38901:umi-street:los:standard", "--min", "10", "--max", "5000", "--count",
        "200", "--spacing", "log",
    ]);
    let (_, rows) = table(&csv);
    let slope = |a: &[f64], b: &[f64]| (b[1] - a[1]) / (b[0] / a[0]).log10();
    let near = rows.iter().position(|r| r[0] > 80.0).unwrap();
    let far = rows.iter().position(|r| r[0] > 1000.0).unwrap();
    assert!((slope(&rows[near], &rows[near + 1]) - 21.0).abs() < 1.0);
    assert!((slope(&rows[far], &rows[far + 1]) - 40.0).abs() < 1.0);
}

#[test]
fn sweep_round_trips_through_fit() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("sweep.csv");
    ok(&[
        "sweep", "--fc", "28", "--model", "5gcm:umi-street:nlos:ci,5gcm:inh-mixed:nlos:dual-cif", "--min", "1.5",
        "--max", "40", "--count", "60", "--spacing", "log", "--axis", "3d", "--hbs", "1.5", "--hue", "1.5", "--output",
        path(&file),
    ]);
    let out = ok(&[
        "fit", "--family", "ci", "--input", path(&file), "--sweep-column", "5gcm:umi-street:nlos:ci", "--fc", "28",
        "--axis", "3d",
    ]);
    assert_eq!(field(&out, "n="), "3.170000");
    assert_eq!(field(&out, "sigma="), "0.000000");
    assert_eq!(field(&out, "N="), "60");

    let out = ok(&[
        "fit", "--family", "dual-cif", "--input", path(&file), "--sweep-column", "5gcm:inh-mixed:nlos:dual-cif",
        "--fc", "28", "--axis", "3d", "--candidates", "5,6,7,7.8,9,10",
    ]);
    // One carrier: the fitted slopes are the frequency-adjusted exponents.
    assert_eq!(field(&out, "dbp="), "7.800000");
    assert_eq!(field(&out, "n1="), format!("{:.6}", 2.51 * (1.0 + 0.06 * (28.0 - 24.1) / 24.1)));
    assert_eq!(field(&out, "n2="), format!("{:.6}", 4.25 * (1.0 + 0.04 * (28.0 - 24.1) / 24.1)));
    assert_eq!(field(&out, "sigma="), "0.000000");

    // 2D sweeps need the heights to convert back.
    let file2 = dir.path().join("sweep2d.csv");
    ok(&["sweep", "--fc", "28", "--model", "5gcm:umi-street:los:ci", "--output", path(&file2)]);
    let args = ["fit", "--family", "ci", "--input", path(&file2), "--sweep-column", "5gcm:umi-street:los:ci", "--fc", "28"];
    assert_eq!(call(&args).code, 2);
    let mut with_heights = args.to_vec();
    with_heights.extend(["--hbs", "10", "--hue", "1.5"]);
    assert_eq!(field(&ok(&with_heights), "n="), "2.100000");
}

#[test]
fn fit_measurement_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("synth.csv");
    let mut text = String::from("fc_ghz,d_m,pl_db\n");
    for d in [1.5, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0] {
        let pl = 32.4 + 20.0 * 28f64.log10() + 20.0 * f64::log10(d);
        text.push_str(&format!("28,{d},{pl}\n"));
    }
    fs::write(&file, &text).unwrap();
    let out = ok(&["fit", "--family", "ci", "--input", path(&file)]);
    assert_eq!(field(&out, "family="), "ci");
    assert_eq!(field(&out, "n="), "2.000000");
    assert_eq!(field(&out, "sigma="), "0.000000");
    assert_eq!(field(&out, "N="), "7");

    let abg = call(&["fit", "--family", "abg", "--input", path(&file)]);
    assert_eq!(abg.code, 3);
    assert!(abg.err.contains("gamma"), "{}", abg.err);

    fs::write(&file, "fc_ghz,d_m,pl_db\n28,10,80\n28,x,90\n").unwrap();
    let bad = call(&["fit", "--family", "ci", "--input", path(&file)]);
    assert_eq!(bad.code, 2);
    assert!(bad.err.contains("line 3"), "{}", bad.err);
    assert_eq!(call(&["fit", "--family", "ci", "--input", "/nonexistent.csv"]).code, 2);
}

#[test]
fn losprob_curves_and_comparison() {
    let ids = "tr38901:uma:los:d1d2,5gcm:uma:los:d1d2,5gcm:uma:los:nyu-squared";
    let csv = ok(&["losprob", "--model", ids, "--hue", "1.5"]);
    let (header, rows) = table(&csv);
    assert_eq!(header.len(), 4);
    assert_eq!(rows.len(), 1001);
    assert_eq!((rows[0][0], rows[1000][0]), (0.0, 1000.0));
    for r in &rows {
        if r[0] <= 18.0 {
            assert!(r[1..].iter().all(|&p| p == 1.0));
        }
        if r[0] >= 200.0 {
            assert!(r[3] < r[2], "NYU-squared above 5GCM at {}", r[0]);
            // The NYU-squared curve crosses below TR 38.901 just past 200 m.
            if r[0] > 200.0 {
                assert!(r[3] < r[1], "NYU-squared above TR 38.901 at {}", r[0]);
            } else {
                assert!(r[3] - r[1] < 2e-5);
            }
        }
    }

    let dir = tempfile::tempdir().unwrap();
    let reference = dir.path().join("tr.csv");
    ok(&["losprob", "--model", "tr38901:uma:los:d1d2", "--output", path(&reference)]);
    let out = ok(&["losprob", "--model", ids, "--reference", path(&reference)]);
    let mse: Vec<f64> = out.lines().skip(1).map(|l| l.split(',').nth(1).unwrap().parse().unwrap()).collect();
    assert_eq!(mse[0], 0.0);
    assert!(mse[0] < mse[1] && mse[0] < mse[2]);

    fs::write(&reference, "d_m,p_los\n10,0.5\n20,1.5\n").unwrap();
    let bad = call(&["losprob", "--model", ids, "--reference", path(&reference)]);
    assert_eq!(bad.code, 2);
    fs::write(&reference, "d_m,p_los\n10\n").unwrap();
    assert_eq!(call(&["losprob", "--model", ids, "--reference", path(&reference)]).code, 2);

    let scenario = ok(&["losprob", "--scenario", "umi-street", "--count", "3"]);
    assert!(scenario.starts_with("d_m,tr38901:umi-street:los:d1d2,"));
    assert_eq!(call(&["losprob", "--model", "5gcm:umi-street:los:ci"]).code, 2);
}

#[test]
fn map_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.csv"), dir.path().join("b.csv"));
    let args = |p: &Path| {
        ["map", "--scenario", "umi-street", "--size", "512", "--cell", "2", "--seed", "7", "--output", path(p)]
            .map(String::from)
    };
    for p in [&a, &b] {
        let o = call(&args(p).iter().map(String::as_str).collect::<Vec<_>>());
        assert_eq!(o.code, 0, "{}", o.err);
    }
    let (x, y) = (fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert_eq!(x, y);
    let text = String::from_utf8(x).unwrap();
    assert!(text.starts_with("x_m,y_m,los,shadow_db\n"));
    assert_eq!(text.lines().count(), 512 * 512 + 1);

    let other = ok(&["map", "--scenario", "umi-street", "--size", "8", "--cell", "2", "--seed", "8"]);
    assert_ne!(other, ok(&["map", "--scenario", "umi-street", "--size", "8", "--cell", "2", "--seed", "7"]));
    assert_eq!(call(&["map", "--scenario", "umi-street", "--size", "8", "--cell", "7"]).code, 3);
    ok(&["map", "--scenario", "rma", "--size", "4", "--cell", "5"]);
}

#[test]
fn config_file_supplies_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    fs::write(
        &cfg,
        "org = \"5gcm\"\nscenario = \"umi-street\"\nvis = \"los\"\nfamily = \"ci\"\nfc = 28\nd3d = 100.0\n",
    )
    .unwrap();
    let out = ok(&["pathloss", "--config", path(&cfg)]);
    assert_eq!(field(&out, "mean_db:"), "103.343");
    // Flags win over the file.
    let out = ok(&["pathloss", "--config", path(&cfg), "--d3d", "10"]);
    assert_eq!(field(&out, "mean_db:"), "82.3432");

    fs::write(&cfg, "model = [\"5gcm:umi-street:los:ci\"]\nfc = 28.0\ncount = 2\nstrict = true\n").unwrap();
    let csv = ok(&["sweep", "--config", path(&cfg)]);
    assert_eq!(csv.lines().count(), 3);

    fs::write(&cfg, "nonsense = 1\n").unwrap();
    assert_eq!(call(&["pathloss", "--config", path(&cfg)]).code, 2);
    assert_eq!(call(&["pathloss", "--config", "/nonexistent.toml"]).code, 2);
}
