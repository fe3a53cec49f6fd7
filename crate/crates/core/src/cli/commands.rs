use std::collections::BTreeSet;
use std::fs::File;
use std::io::{BufReader, Write};
use std::path::Path;

use super::{
    sig6, usage, Command, Failure, FitArgs, FitFamily, HeightArgs, LosprobArgs, MapArgs, ModelArgs,
    O2iArgs, PathlossArgs, Spacing, SweepArgs,
};
use crate::applicability::Mode;
use crate::error::Error;
use crate::fitting::{self, DualFamily, FitResult, MeasurementRecord};
use crate::geometry::{EnvironmentConstants, LinkGeometry};
use crate::los_probability::los_probability;
use crate::model::{Frequency, ModelId, Org, Scenario, Visibility};
use crate::pathloss::{check_reference_distance, evaluate, mean_path_loss};
use crate::registry::{self, Entry, EntryKind};
use crate::stochastic::{generate_consistency_map, MapSpec, RandomSource};

type CmdResult = Result<(), Failure>;

pub(super) fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match command {
        Command::Pathloss(a) => pathloss(a, out),
        Command::Sweep(a) => sweep(a, out, err),
        Command::Losprob(a) => losprob(a, out),
        Command::O2i(a) => o2i(a, out),
        Command::Fit(a) => fit(a, out),
        Command::Map(a) => map(a, out),
    }
}

fn path_loss_entry(id: ModelId) -> Result<&'static Entry, Failure> {
    let entry = registry::lookup(id)?;
    match entry.kind {
        EntryKind::PathLoss(_) => Ok(entry),
        ref other => Err(Error::WrongKind {
            id,
            expected: "path loss",
            actual: other.name(),
        }
        .into()),
    }
}

fn resolve_path_loss(a: &ModelArgs) -> Result<&'static Entry, Failure> {
    if let Some(id) = a.model {
        return path_loss_entry(id);
    }
    let (Some(org), Some(scenario), Some(vis)) = (a.org, a.scenario, a.vis) else {
        return Err(usage("give --model, or --org, --scenario and --vis"));
    };
    registry::entries()
        .iter()
        .find(|e| {
            matches!(e.kind, EntryKind::PathLoss(_))
                && e.id.org == org
                && e.id.scenario == scenario
                && e.id.visibility == vis
                && a.family.is_none_or(|f| e.id.family == f)
        })
        .ok_or_else(|| {
            let family = a.family.map_or("any".to_string(), |f| f.to_string());
            usage(format!("no path loss model {org}:{scenario}:{vis}:{family}"))
        })
}

fn heights(entry: &Entry, h: &HeightArgs) -> (f64, f64) {
    (h.hbs.unwrap_or(entry.heights.0), h.hue.unwrap_or(entry.heights.1))
}

fn environment(entry: &Entry, h: &HeightArgs) -> Option<EnvironmentConstants> {
    if h.street_width.is_none() && h.building_height.is_none() {
        return entry.env;
    }
    let base = entry.env.unwrap_or(EnvironmentConstants::RMA_DEFAULT);
    Some(EnvironmentConstants {
        street_width: h.street_width.unwrap_or(base.street_width),
        building_height: h.building_height.unwrap_or(base.building_height),
    })
}

fn sink<'a>(output: Option<&Path>, out: &'a mut dyn Write) -> Result<Box<dyn Write + 'a>, Failure> {
    Ok(match output {
        Some(p) => Box::new(File::create(p)?),
        None => Box::new(out),
    })
}

fn csv_error(e: csv::Error) -> Failure {
    Failure::Model(Error::Io(e.into()))
}

fn pathloss(a: PathlossArgs, out: &mut dyn Write) -> CmdResult {
    let entry = resolve_path_loss(&a.model)?;
    let fc = Frequency::from_ghz(a.fc)?;
    let mode = if a.strict { Mode::Strict } else { Mode::Lenient };
    if a.strict {
        // Reported before the geometry is even looked at.
        let v = entry.range.check_frequency(fc);
        if !v.is_empty() {
            return Err(Error::NotApplicable(v).into());
        }
    }
    let (hbs, hue) = heights(entry, &a.heights);
    let geom = match (a.d2d, a.d3d) {
        (Some(d), _) => LinkGeometry::new(d, hbs, hue)?,
        (None, Some(d)) => {
            check_reference_distance(d)?;
            LinkGeometry::from_d3d(d, hbs, hue)?
        }
        (None, None) => return Err(usage("one of --d2d or --d3d is required")),
    };
    let env = environment(entry, &a.heights);
    let ev = evaluate(entry.id, fc, &geom, env.as_ref(), mode)?;
    writeln!(out, "model: {}", entry.id)?;
    writeln!(out, "mean_db: {}", sig6(ev.mean_db))?;
    match ev.sigma_db {
        Some(s) => writeln!(out, "sigma_db: {}", sig6(s))?,
        None => writeln!(out, "sigma_db: none")?,
    }
    for w in &ev.warnings {
        writeln!(out, "warning: {w}")?;
    }
    Ok(())
}

fn grid(min: f64, max: f64, count: usize, spacing: Spacing) -> Vec<f64> {
    let last = (count - 1) as f64;
    (0..count)
        .map(|i| {
            if i == 0 {
                return min;
            }
            if i + 1 == count {
                return max;
            }
            let t = i as f64 / last;
            match spacing {
                Spacing::Linear => min + (max - min) * t,
                Spacing::Log => (min.ln() + (max.ln() - min.ln()) * t).exp(),
            }
        })
        .collect()
}

fn check_grid(min: f64, max: f64, count: usize, floor: f64) -> CmdResult {
    if !(min >= floor) || !min.is_finite() {
        return Err(usage(format!("--min must be >= {floor} m, got {min}")));
    }
    if !(max > min) || !max.is_finite() {
        return Err(usage(format!("--max must exceed --min, got {max}")));
    }
    if count < 2 {
        return Err(usage(format!("--count must be >= 2, got {count}")));
    }
    Ok(())
}

fn sweep(a: SweepArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    if a.models.is_empty() {
        return Err(usage("no models given; pass --model at least once"));
    }
    check_grid(a.min, a.max, a.count, 1.0)?;
    let fc = Frequency::from_ghz(a.fc)?;
    let entries = a
        .models
        .iter()
        .map(|&id| path_loss_entry(id))
        .collect::<Result<Vec<_>, _>>()?;
    let distances = grid(a.min, a.max, a.count, a.spacing);

    let mut rows = Vec::with_capacity(distances.len());
    let mut warned = BTreeSet::new();
    for &d in &distances {
        let mut row = vec![d.to_string()];
        for entry in &entries {
            let (hbs, hue) = heights(entry, &a.heights);
            let geom = match a.axis {
                super::Axis::TwoD => LinkGeometry::new(d, hbs, hue)?,
                super::Axis::ThreeD => LinkGeometry::from_d3d(d, hbs, hue)?,
            };
            let env = environment(entry, &a.heights);
            let violations = entry.range.check(fc, &geom, env.as_ref());
            if !violations.is_empty() {
                if a.strict {
                    return Err(Error::NotApplicable(violations).into());
                }
                warned.insert(entry.id);
            }
            row.push(mean_path_loss(entry.id, fc, &geom, env.as_ref())?.to_string());
        }
        rows.push(row);
    }

    let mut w = csv::Writer::from_writer(sink(a.output.as_deref(), out)?);
    let header = std::iter::once("d_m".to_string()).chain(entries.iter().map(|e| e.id.to_string()));
    w.write_record(header).map_err(csv_error)?;
    for row in rows {
        w.write_record(row).map_err(csv_error)?;
    }
    w.flush()?;
    for id in warned {
        writeln!(err, "warning: part of the sweep lies outside the applicability range of {id}")?;
    }
    Ok(())
}

fn los_entries(a: &LosprobArgs) -> Result<Vec<&'static Entry>, Failure> {
    if a.models.is_empty() {
        let scenario = a
            .scenario
            .ok_or_else(|| usage("give --scenario or at least one --model"))?;
        let found: Vec<_> = registry::entries()
            .iter()
            .filter(|e| e.id.scenario == scenario && matches!(e.kind, EntryKind::LosProbability { .. }))
            .collect();
        if found.is_empty() {
            return Err(usage(format!("no LOS probability models for {scenario}")));
        }
        return Ok(found);
    }
    a.models
        .iter()
        .map(|&id| {
            let entry = registry::lookup(id)?;
            match entry.kind {
                EntryKind::LosProbability { .. } => Ok(entry),
                ref other => Err(Error::WrongKind {
                    id,
                    expected: "LOS probability",
                    actual: other.name(),
                }
                .into()),
            }
        })
        .collect()
}

fn p_los(entry: &Entry, d: f64, hue: Option<f64>) -> Result<f64, Failure> {
    let geom = LinkGeometry::new(d, entry.heights.0, hue.unwrap_or(entry.heights.1))?;
    Ok(los_probability(entry.id, &geom)?)
}

/// `(d, P)` pairs; a non-numeric first row is taken as a header.
fn read_reference(path: &Path) -> Result<Vec<(f64, f64)>, Failure> {
    let parse_err = |line: u64, message: String| Failure::Model(Error::Parse { line, message });
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(BufReader::new(File::open(path)?));
    let mut pairs = Vec::new();
    for rec in reader.records() {
        let rec = rec.map_err(|e| parse_err(e.position().map_or(0, |p| p.line()), e.to_string()))?;
        let line = rec.position().map_or(0, |p| p.line());
        if rec.len() != 2 {
            return Err(parse_err(line, format!("expected 2 fields (d_m,p_los), got {}", rec.len())));
        }
        let d = rec[0].trim().parse::<f64>();
        let p = rec[1].trim().parse::<f64>();
        match (d, p) {
            (Ok(d), Ok(p)) => {
                if !(d >= 0.0) || !d.is_finite() {
                    return Err(parse_err(line, format!("distance {d} must be finite and >= 0")));
                }
                if !(0.0..=1.0).contains(&p) {
                    return Err(parse_err(line, format!("probability {p} outside [0, 1]")));
                }
                pairs.push((d, p));
            }
            (Err(_), _) if line == 1 => {}
            _ => return Err(parse_err(line, format!("'{}' is not a (d, P) pair", rec.iter().collect::<Vec<_>>().join(",")))),
        }
    }
    if pairs.is_empty() {
        return Err(parse_err(1, "reference has no data rows".into()));
    }
    Ok(pairs)
}

fn losprob(a: LosprobArgs, out: &mut dyn Write) -> CmdResult {
    let entries = los_entries(&a)?;
    if let Some(path) = &a.reference {
        let reference = read_reference(path)?;
        writeln!(out, "model,mse")?;
        for entry in entries {
            let mut sum = 0.0;
            for &(d, p) in &reference {
                sum += (p_los(entry, d, a.hue)? - p).powi(2);
            }
            writeln!(out, "{},{}", entry.id, sig6(sum / reference.len() as f64))?;
        }
        return Ok(());
    }

    check_grid(a.min, a.max, a.count, 0.0)?;
    let distances = grid(a.min, a.max, a.count, Spacing::Linear);
    let mut rows = Vec::with_capacity(distances.len());
    for &d in &distances {
        let mut row = vec![d.to_string()];
        for entry in &entries {
            row.push(p_los(entry, d, a.hue)?.to_string());
        }
        rows.push(row);
    }
    let mut w = csv::Writer::from_writer(sink(a.output.as_deref(), out)?);
    let header = std::iter::once("d_m".to_string()).chain(entries.iter().map(|e| e.id.to_string()));
    w.write_record(header).map_err(csv_error)?;
    for row in rows {
        w.write_record(row).map_err(csv_error)?;
    }
    w.flush()?;
    Ok(())
}

fn o2i(a: O2iArgs, out: &mut dyn Write) -> CmdResult {
    let fc = Frequency::from_ghz(a.fc)?;
    if !a.plb.is_finite() {
        return Err(Error::Domain(format!("outdoor path loss must be finite, got {}", a.plb)).into());
    }
    let mut params = a.variant.params();
    if let Some(slope) = a.indoor_slope {
        params = params.with_indoor_slope(slope);
    }
    let (mean, sigma) = params.total(a.plb, fc, a.din)?;
    writeln!(out, "variant: {}", a.variant)?;
    writeln!(out, "mean_db: {}", sig6(mean))?;
    writeln!(out, "sigma_db: {}", sig6(sigma))?;
    Ok(())
}

/// Every distinct measured distance strictly between the smallest and the
/// largest.
fn default_candidates(records: &[MeasurementRecord]) -> Vec<f64> {
    let distinct: BTreeSet<u64> = records.iter().map(|r| r.d.to_bits()).collect();
    let sorted: Vec<f64> = distinct.into_iter().map(f64::from_bits).collect();
    match sorted.len() {
        0..=2 => Vec::new(),
        n => sorted[1..n - 1].to_vec(),
    }
}

fn fit(a: FitArgs, out: &mut dyn Write) -> CmdResult {
    let heights = a.hbs.zip(a.hue);
    let file = BufReader::new(File::open(&a.input)?);
    let records = match (&a.sweep_column, a.fc) {
        (Some(column), Some(fc)) => fitting::read_sweep_column(file, column, fc, a.axis.into(), heights)?,
        _ => fitting::read_measurements(file, heights)?,
    };
    let result: FitResult = match a.family {
        FitFamily::Ci => fitting::fit_ci(&records)?,
        FitFamily::Cif => match a.f0 {
            Some(f0) => fitting::fit_cif_with_f0(&records, f0)?,
            None => fitting::fit_cif(&records)?,
        },
        FitFamily::Abg => fitting::fit_abg(&records)?,
        FitFamily::DualCif | FitFamily::DualAbg => {
            let candidates = if a.candidates.is_empty() {
                default_candidates(&records)
            } else {
                a.candidates.clone()
            };
            let family = if a.family == FitFamily::DualCif { DualFamily::Cif } else { DualFamily::Abg };
            fitting::fit_dual_slope(&records, family, &candidates)?
        }
    };
    writeln!(out, "family={}", result.params.family())?;
    for (name, value) in result.params.named() {
        writeln!(out, "{name}={value:.6}")?;
    }
    writeln!(out, "sigma={:.6}", result.sigma)?;
    writeln!(out, "N={}", result.count)?;
    Ok(())
}

/// LOS shadow-fading σ for the map: the 3GPP value where registered,
/// otherwise the first LOS model of the scenario that publishes one.
fn default_map_sigma(scenario: Scenario) -> Option<f64> {
    let los = |e: &&Entry| {
        e.id.scenario == scenario
            && e.id.visibility == Visibility::Los
            && matches!(e.kind, EntryKind::PathLoss(_))
            && e.sigma_db.is_some()
    };
    let all = registry::entries();
    all.iter()
        .filter(los)
        .find(|e| e.id.org == Org::Tr38901)
        .or_else(|| all.iter().find(los))
        .and_then(|e| e.sigma_db)
}

fn map(a: MapArgs, out: &mut dyn Write) -> CmdResult {
    let entry = registry::entries()
        .iter()
        .find(|e| e.id.org == a.org && e.id.scenario == a.scenario && matches!(e.kind, EntryKind::LosProbability { .. }))
        .ok_or_else(|| usage(format!("no {} LOS probability model for {}", a.org, a.scenario)))?;
    let EntryKind::LosProbability { model, .. } = &entry.kind else {
        unreachable!("filtered above")
    };
    let sigma = match a.sigma {
        Some(s) => s,
        None => default_map_sigma(a.scenario)
            .ok_or_else(|| usage(format!("no default shadow σ for {}; pass --sigma", a.scenario)))?,
    };
    let mut spec = MapSpec::centered(a.scenario, a.size, a.cell);
    if let Some(d) = a.dcor {
        spec.correlation_distance = d;
    }
    if let Some(h) = a.hue {
        spec.hue = h;
    }
    let grid = generate_consistency_map(model, sigma, &spec, (0.0, 0.0), &mut RandomSource::new(a.seed))?;
    let mut w = sink(a.output.as_deref(), out)?;
    grid.write_csv(&mut w)?;
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids_hit_both_ends() {
        let g = grid(10.0, 500.0, 50, Spacing::Log);
        assert_eq!((g[0], g[49]), (10.0, 500.0));
        assert!(g.windows(2).all(|w| w[1] > w[0]));
        assert_eq!(grid(1.0, 2.0, 2, Spacing::Linear), [1.0, 2.0]);
    }

    #[test]
    fn default_candidates_are_interior() {
        let r: Vec<_> = [5.0, 1.0, 3.0, 3.0, 9.0]
            .iter()
            .map(|&d| MeasurementRecord::new(28.0, d, 80.0).unwrap())
            .collect();
        assert_eq!(default_candidates(&r), [3.0, 5.0]);
    }
}
