use std::io::Write;

use serde::ser::{Serialize, SerializeMap, Serializer};
use serde::Serialize as DeriveSerialize;
use spincorr::{Measure, MeasureSeries, UnitMode};

use crate::CliError;

/// Text form of a value in the CSV output: 17 significant digits.
pub fn format_value(v: f64) -> String {
    format!("{v:.16e}")
}

fn header(measures: &[Measure]) -> Vec<String> {
    let mut h: Vec<String> = ["tJ", "tau", "s1", "s2"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    h.extend(measures.iter().map(|m| m.id().to_string()));
    h
}

fn shared_measures(runs: &[MeasureSeries]) -> Result<Vec<Measure>, CliError> {
    let first = runs
        .first()
        .ok_or_else(|| CliError::Invalid("nothing to write".into()))?;
    let measures: Vec<Measure> = first.columns.iter().map(|(m, _)| *m).collect();
    for run in runs {
        let these: Vec<Measure> = run.columns.iter().map(|(m, _)| *m).collect();
        if these != measures {
            return Err(CliError::Invalid(
                "sweeps in one file must share their measure columns".into(),
            ));
        }
    }
    Ok(measures)
}

/// Long-format CSV: one header row, then every row of every sweep in order.
pub fn write_csv<W: Write>(out: W, runs: &[MeasureSeries]) -> Result<(), CliError> {
    let measures = shared_measures(runs)?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header(&measures))?;
    for run in runs {
        let (s1, s2) = (run.cfg.s1().to_string(), run.cfg.s2().to_string());
        for (i, (tau, tj)) in run.taus.iter().zip(run.tj()).enumerate() {
            let mut record = vec![
                format_value(tj),
                format_value(tau.tau),
                s1.clone(),
                s2.clone(),
            ];
            record.extend(run.columns.iter().map(|(_, v)| format_value(v[i])));
            w.write_record(&record)?;
        }
    }
    w.flush()?;
    Ok(())
}

#[derive(DeriveSerialize)]
struct SweepMeta {
    s1: String,
    s2: String,
    tj_max: f64,
    steps: usize,
}

#[derive(DeriveSerialize)]
struct Metadata<'a> {
    kind: &'static str,
    program: &'static str,
    version: &'static str,
    units: &'static str,
    beta: Option<f64>,
    figure: Option<u8>,
    measures: Vec<&'static str>,
    sweeps: &'a [SweepMeta],
}

struct Row<'a> {
    run: &'a MeasureSeries,
    index: usize,
    tj: f64,
    s1: &'a str,
    s2: &'a str,
}

impl Serialize for Row<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(4 + self.run.columns.len()))?;
        map.serialize_entry("tJ", &self.tj)?;
        map.serialize_entry("tau", &self.run.taus[self.index].tau)?;
        map.serialize_entry("s1", self.s1)?;
        map.serialize_entry("s2", self.s2)?;
        for (m, values) in &self.run.columns {
            map.serialize_entry(m.id(), &values[self.index])?;
        }
        map.end()
    }
}

/// JSON lines: a metadata object, then one object per row.
pub fn write_json<W: Write>(
    mut out: W,
    runs: &[MeasureSeries],
    figure: Option<u8>,
) -> Result<(), CliError> {
    let measures = shared_measures(runs)?;
    let unit_mode = runs[0].unit_mode;
    let sweeps: Vec<SweepMeta> = runs
        .iter()
        .map(|r| SweepMeta {
            s1: r.cfg.s1().to_string(),
            s2: r.cfg.s2().to_string(),
            tj_max: r.taus.last().map_or(0.0, |t| t.tj(&r.cfg)),
            steps: r.len(),
        })
        .collect();
    let meta = Metadata {
        kind: "metadata",
        program: "spincorr",
        version: env!("CARGO_PKG_VERSION"),
        units: unit_mode.id(),
        beta: match unit_mode {
            UnitMode::Bits { beta } => Some(beta),
            _ => None,
        },
        figure,
        measures: measures.iter().map(|m| m.id()).collect(),
        sweeps: &sweeps,
    };
    serde_json::to_writer(&mut out, &meta)?;
    writeln!(out)?;
    for run in runs {
        let (s1, s2) = (run.cfg.s1().to_string(), run.cfg.s2().to_string());
        for (index, tj) in run.tj().into_iter().enumerate() {
            serde_json::to_writer(
                &mut out,
                &Row {
                    run,
                    index,
                    tj,
                    s1: &s1,
                    s2: &s2,
                },
            )?;
            writeln!(out)?;
        }
    }
    out.flush()?;
    Ok(())
}
