//! JSON and CSV forms of tables, spectra and verdicts.
//!
//! Big numbers are decimal strings and rationals are reduced `"p/q"` (or
//! just `"p"` when integral), so nothing is truncated to 64 bits. Field
//! order is fixed by the struct definitions.

use std::io::Write;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::characters::CharacterTable;
use crate::error::{Error, Result};
use crate::oracle::{Method, Verdict};
use crate::partitions::Partition;
use crate::spectrum::{SpectrumLine, SpectrumReport};
use crate::symgroup::ClassSpec;

pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den == BigInt::from(0) {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

fn parse_uint(s: &str) -> Result<BigUint> {
    s.parse()
        .map_err(|_| Error::Parse(format!("bad non-negative integer {s:?}")))
}

fn parse_int(s: &str) -> Result<BigInt> {
    s.parse().map_err(|_| Error::Parse(format!("bad integer {s:?}")))
}

fn parse_partitions(items: &[String]) -> Result<Vec<Partition>> {
    items.iter().map(|s| s.parse()).collect()
}

fn texts(ps: &[Partition]) -> Vec<String> {
    ps.iter().map(Partition::to_text).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub n: usize,
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub values: Vec<Vec<String>>,
    pub class_sizes: Vec<String>,
}

impl TableJson {
    pub fn from_table(table: &CharacterTable) -> Self {
        TableJson {
            n: table.n(),
            rows: texts(table.partitions()),
            cols: texts(table.partitions()),
            values: table
                .values()
                .iter()
                .map(|row| row.iter().map(BigInt::to_string).collect())
                .collect(),
            class_sizes: table.class_sizes().iter().map(BigUint::to_string).collect(),
        }
    }

    pub fn into_table(self) -> Result<CharacterTable> {
        let rows = parse_partitions(&self.rows)?;
        if parse_partitions(&self.cols)? != rows {
            return Err(Error::Integrity("row and column labels differ".into()));
        }
        let values = self
            .values
            .iter()
            .map(|row| row.iter().map(|v| parse_int(v)).collect())
            .collect::<Result<Vec<Vec<BigInt>>>>()?;
        let class_sizes = self
            .class_sizes
            .iter()
            .map(|v| parse_uint(v))
            .collect::<Result<Vec<_>>>()?;
        CharacterTable::from_parts(self.n, rows, values, class_sizes)
    }
}

pub fn table_to_json(table: &CharacterTable) -> Result<String> {
    Ok(serde_json::to_string_pretty(&TableJson::from_table(table))?)
}

pub fn table_from_json(text: &str) -> Result<CharacterTable> {
    serde_json::from_str::<TableJson>(text)?.into_table()
}

/// Header `partition,(n),...,(1^n)`; one row per character, then a
/// `class_size` row.
pub fn write_table_csv<W: Write>(table: &CharacterTable, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["partition".to_string()];
    header.extend(table.partitions().iter().map(Partition::to_string));
    w.write_record(&header)?;
    for (alpha, row) in table.partitions().iter().zip(table.values()) {
        let mut record = vec![alpha.to_string()];
        record.extend(row.iter().map(BigInt::to_string));
        w.write_record(&record)?;
    }
    let mut sizes = vec!["class_size".to_string()];
    sizes.extend(table.class_sizes().iter().map(BigUint::to_string));
    w.write_record(&sizes)?;
    w.flush()?;
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineJson {
    pub eigenvalue: String,
    pub multiplicity: String,
    pub contributors: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumJson {
    pub n: usize,
    pub classes: Vec<String>,
    pub vertices: String,
    pub degree: String,
    pub lines: Vec<LineJson>,
    pub energy: String,
    pub nullity: String,
    pub integral: bool,
    pub hyperenergetic: bool,
}

impl SpectrumJson {
    pub fn from_report(report: &SpectrumReport) -> Self {
        SpectrumJson {
            n: report.n(),
            classes: texts(report.spec.cycle_types()),
            vertices: report.vertex_count.to_string(),
            degree: report.degree.to_string(),
            lines: report
                .lines
                .iter()
                .map(|l| LineJson {
                    eigenvalue: format_rational(&l.eigenvalue),
                    multiplicity: l.multiplicity.to_string(),
                    contributors: texts(&l.contributors),
                })
                .collect(),
            energy: format_rational(&report.energy),
            nullity: report.nullity.to_string(),
            integral: report.is_integral,
            hyperenergetic: report.is_hyperenergetic,
        }
    }

    pub fn into_report(self) -> Result<SpectrumReport> {
        let spec = ClassSpec::new(self.n, parse_partitions(&self.classes)?)?;
        let lines = self
            .lines
            .into_iter()
            .map(|l| {
                Ok(SpectrumLine {
                    eigenvalue: parse_rational(&l.eigenvalue)?,
                    multiplicity: parse_uint(&l.multiplicity)?,
                    contributors: parse_partitions(&l.contributors)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SpectrumReport {
            spec,
            lines,
            vertex_count: parse_uint(&self.vertices)?,
            degree: parse_uint(&self.degree)?,
            energy: parse_rational(&self.energy)?,
            nullity: parse_uint(&self.nullity)?,
            is_integral: self.integral,
            is_hyperenergetic: self.hyperenergetic,
        })
    }
}

pub fn spectrum_to_json(report: &SpectrumReport) -> Result<String> {
    Ok(serde_json::to_string_pretty(&SpectrumJson::from_report(report))?)
}

pub fn spectrum_from_json(text: &str) -> Result<SpectrumReport> {
    serde_json::from_str::<SpectrumJson>(text)?.into_report()
}

/// One row per spectrum line: `eigenvalue,multiplicity,contributors`, with
/// contributors separated by `;`.
pub fn write_spectrum_csv<W: Write>(report: &SpectrumReport, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["eigenvalue", "multiplicity", "contributors"])?;
    for l in &report.lines {
        w.write_record([
            format_rational(&l.eigenvalue),
            l.multiplicity.to_string(),
            texts(&l.contributors).join(";"),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecJson {
    pub n: usize,
    pub classes: Vec<String>,
}

impl SpecJson {
    pub fn from_spec(spec: &ClassSpec) -> Self {
        SpecJson {
            n: spec.n(),
            classes: texts(spec.cycle_types()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub spec: SpecJson,
    pub method: String,
    #[serde(rename = "match")]
    pub matched: bool,
    #[serde(rename = "K", skip_serializing_if = "Option::is_none", default)]
    pub max_moment: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub tol: Option<f64>,
    pub detail: Option<String>,
}

impl VerdictJson {
    pub fn from_verdict(v: &Verdict) -> Self {
        VerdictJson {
            spec: SpecJson::from_spec(&v.spec),
            method: v.method.as_str().to_string(),
            matched: v.matched,
            max_moment: v.max_moment,
            tol: v.tol,
            detail: v.detail.clone(),
        }
    }

    pub fn into_verdict(self) -> Result<Verdict> {
        let method = match self.method.as_str() {
            "exact-moments" => Method::ExactMoments,
            "float-eigensolve" => Method::FloatEigensolve,
            other => return Err(Error::Parse(format!("unknown method {other:?}"))),
        };
        Ok(Verdict {
            spec: ClassSpec::new(self.spec.n, parse_partitions(&self.spec.classes)?)?,
            method,
            matched: self.matched,
            detail: self.detail,
            max_moment: self.max_moment,
            tol: self.tol,
        })
    }
}
