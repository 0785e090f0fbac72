use std::io::Write;

use anyhow::Result;
use knoedel_core::exact::to_decimal;
use knoedel_core::{ExactRational, ModelKind, State};
use serde::{Serialize, Serializer};

use crate::args::{Format, Render};

/// State as emitted: its index, or the token `beta`.
#[derive(Clone, Copy, Debug)]
pub struct StateField(pub State);

impl Serialize for StateField {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0 {
            State::Numbered(i) => s.serialize_u64(i as u64),
            State::Beta => s.serialize_str("beta"),
        }
    }
}

/// Exact value plus its advisory decimal rendering.
#[derive(Clone, Debug)]
pub struct Exact {
    pub num: String,
    pub den: String,
    pub decimal: Option<String>,
}

impl Exact {
    pub fn new(r: &ExactRational, render: &Render) -> Self {
        Exact {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
            decimal: (!render.no_decimal).then(|| to_decimal(r, render.digits as usize)),
        }
    }

    pub fn value(&self) -> String {
        format!("{}/{}", self.num, self.den)
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SourceTag {
    Dp,
    ClosedForm,
    MonteCarlo,
}

/// One exact probability, as emitted by `table` and `coeff`.
#[derive(Clone, Debug)]
pub struct OutputRecord {
    pub model: ModelKind,
    pub step: usize,
    pub state: State,
    pub exact: Exact,
    pub source: SourceTag,
}

#[derive(Serialize)]
struct CsvRecord<'a> {
    model: &'static str,
    step: usize,
    state: StateField,
    num: &'a str,
    den: &'a str,
    decimal: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    source: Option<SourceTag>,
}

#[derive(Serialize)]
struct JsonRecord<'a> {
    model: &'static str,
    step: usize,
    state: StateField,
    value: String,
    num: &'a str,
    den: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    decimal: Option<&'a str>,
    source: SourceTag,
}

/// Writes records; CSV gets a `source` column only when `with_source`.
pub fn write_records(out: &mut impl Write, records: &[OutputRecord], format: Format, with_source: bool) -> Result<()> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in records {
                w.serialize(CsvRecord {
                    model: r.model.name(),
                    step: r.step,
                    state: StateField(r.state),
                    num: &r.exact.num,
                    den: &r.exact.den,
                    decimal: r.exact.decimal.as_deref().unwrap_or(""),
                    source: with_source.then_some(r.source),
                })?;
            }
            w.flush()?;
        }
        Format::Json => {
            let rows: Vec<JsonRecord> = records
                .iter()
                .map(|r| JsonRecord {
                    model: r.model.name(),
                    step: r.step,
                    state: StateField(r.state),
                    value: r.exact.value(),
                    num: &r.exact.num,
                    den: &r.exact.den,
                    decimal: r.exact.decimal.as_deref(),
                    source: r.source,
                })
                .collect();
            serde_json::to_writer_pretty(&mut *out, &rows)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

/// Any serializable rows in the chosen format.
pub fn write_rows<T: Serialize>(out: &mut impl Write, rows: &[T], format: Format) -> Result<()> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in rows {
                w.serialize(r)?;
            }
            w.flush()?;
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, rows)?;
            writeln!(out)?;
        }
    }
    Ok(())
}
