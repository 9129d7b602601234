//! Flat-file writers for plot data.
//!
//! All files are CSV by default, with a JSON mirror (an array of row
//! objects with the same keys) available instead. Floats use Rust's
//! shortest round-trip formatting.
//!
//! | file                 | columns                                                   |
//! |----------------------|-----------------------------------------------------------|
//! | `landscape_k<k>.csv` | `x,f_obj,f_sub_p1,f_sub_p2`                               |
//! | `measures.csv`       | `generation,population,measure,mean,ci_lo,ci_hi`          |
//! | `trajectory.csv`     | `generation,best_p1,best_p2,fitness_best_p1,fitness_best_p2` |

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::evolution::CoevoState;
use crate::experiment::MeasureSeries;
use crate::landscape::LandscapeSnapshot;

pub const SNAPSHOT_HEADER: [&str; 4] = ["x", "f_obj", "f_sub_p1", "f_sub_p2"];
pub const MEASURES_HEADER: [&str; 6] = ["generation", "population", "measure", "mean", "ci_lo", "ci_hi"];
pub const TRAJECTORY_HEADER: [&str; 5] =
    ["generation", "best_p1", "best_p2", "fitness_best_p1", "fitness_best_p2"];

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Cell {
    Int(usize),
    Float(f64),
    Text(&'static str),
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => v.to_string(),
            Cell::Text(s) => (*s).to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => Value::from(*v),
            Cell::Float(v) => Value::from(*v),
            Cell::Text(s) => Value::from(*s),
        }
    }
}

/// A header plus rows, ready to be written in either format.
#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    header: &'static [&'static str],
    rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn header(&self) -> &[&'static str] {
        self.header
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(self.header)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::render))?;
        }
        w.flush().map_err(csv::Error::from)?;
        Ok(())
    }

    pub fn write_json<W: Write>(&self, out: W) -> Result<()> {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .header
                    .iter()
                    .zip(row)
                    .map(|(k, c)| ((*k).to_string(), c.json()))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        serde_json::to_writer_pretty(out, &rows)?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("CSV output is UTF-8")
    }

    /// Writes `<dir>/<stem>.<ext>` and checks the result can be read back.
    pub fn save(&self, dir: &Path, stem: &str, format: Format) -> Result<PathBuf> {
        let path = dir.join(format!("{stem}.{}", format.extension()));
        let io = |source| Error::Io { path: path.clone(), source };
        let file = File::create(&path).map_err(io)?;
        let mut out = BufWriter::new(file);
        match format {
            Format::Csv => self.write_csv(&mut out)?,
            Format::Json => self.write_json(&mut out)?,
        }
        out.flush().map_err(io)?;
        drop(out);
        self.verify(&path, format)?;
        Ok(path)
    }

    fn verify(&self, path: &Path, format: Format) -> Result<()> {
        let bad = |message: String| Error::Parse { path: path.to_path_buf(), message };
        let file = File::open(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
        match format {
            Format::Csv => {
                let mut first = String::new();
                BufReader::new(file)
                    .read_line(&mut first)
                    .map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
                if first.trim_end() != self.header.join(",") {
                    return Err(bad(format!("unexpected header {:?}", first.trim_end())));
                }
            }
            Format::Json => {
                let v: Value = serde_json::from_reader(BufReader::new(file))?;
                if v.as_array().map(Vec::len) != Some(self.rows.len()) {
                    return Err(bad("row count mismatch".into()));
                }
            }
        }
        Ok(())
    }
}

pub fn snapshot_table(s: &LandscapeSnapshot) -> Table {
    let rows = (0..s.x.len())
        .map(|j| {
            vec![
                Cell::Float(s.x[j]),
                Cell::Float(s.f_obj[j]),
                Cell::Float(s.f_sub_p1[j]),
                Cell::Float(s.f_sub_p2[j]),
            ]
        })
        .collect();
    Table { header: &SNAPSHOT_HEADER, rows }
}

pub fn measures_table(series: &MeasureSeries) -> Table {
    let rows = series
        .points
        .iter()
        .map(|p| {
            vec![
                Cell::Int(p.generation),
                Cell::Text(p.population.as_str()),
                Cell::Text(p.measure.as_str()),
                Cell::Float(p.mean),
                Cell::Float(p.ci_lo),
                Cell::Float(p.ci_hi),
            ]
        })
        .collect();
    Table { header: &MEASURES_HEADER, rows }
}

pub fn trajectory_table(states: &[CoevoState]) -> Result<Table> {
    let rows = states
        .iter()
        .map(|s| {
            let (b1, f1) = s.pop1.best()?;
            let (b2, f2) = s.pop2.best()?;
            Ok(vec![
                Cell::Int(s.generation),
                Cell::Float(b1.value()),
                Cell::Float(b2.value()),
                Cell::Float(f1),
                Cell::Float(f2),
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Table { header: &TRAJECTORY_HEADER, rows })
}

pub fn snapshot_stem(generation: usize) -> String {
    format!("landscape_k{generation}")
}
