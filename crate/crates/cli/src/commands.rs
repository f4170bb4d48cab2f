use std::fmt::Write as _;
use std::fs;

use serde::Serialize;
use symcay::characters::cache::TableCache;
use symcay::characters::{character_table, CharacterTable, TABLE_CAP};
use symcay::oracle::{default_moment_depth, verify_exact, verify_float, OracleLimits, Verdict};
use symcay::report::{
    format_rational, spectrum_to_json, table_to_json, write_spectrum_csv, write_table_csv, VerdictJson,
};
use symcay::spectrum::{
    closed_form_energy, closed_form_nullity, corollary_a, energy_bound_check, spectrum,
    theorem_hypothesis_holds, vandermonde_check, SpectrumReport,
};
use symcay::symgroup::{build_adjacency, ClassSpec, ORACLE_CAP, ORACLE_CAP_EXTENDED};
use symcay::{Error, Partition};

use crate::args::{ChartableArgs, Format, IdentitiesArgs, SpectrumArgs, VerifyArgs};

/// Rendered output plus whether every requested check passed.
pub struct Outcome {
    pub text: String,
    pub passed: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, passed: true }
    }
}

fn json_line<T: Serialize>(value: &T) -> Result<String, Error> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn csv_text(f: impl FnOnce(&mut Vec<u8>) -> Result<(), Error>) -> Result<String, Error> {
    let mut buf = Vec::new();
    f(&mut buf)?;
    Ok(String::from_utf8(buf).expect("csv output is utf-8"))
}

/// Left-aligned columns separated by two spaces.
fn grid(header: &[&str], rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let mut line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, cell) in cells.iter().enumerate() {
            if i + 1 == cols {
                s.push_str(cell);
            } else {
                let _ = write!(s, "{cell:<width$}  ", width = widths[i]);
            }
        }
        out.push_str(s.trim_end());
        out.push('\n');
    };
    line(header.to_vec());
    for row in rows {
        line(row.iter().map(String::as_str).collect());
    }
    out
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn spectrum_cmd(args: &SpectrumArgs, format: Format) -> Result<Outcome, Error> {
    let spec = ClassSpec::parse(args.n, &args.classes)?;
    let report = spectrum(&spec)?;
    if let Some(path) = &args.export_edges {
        let cap = if args.enable_n7 { ORACLE_CAP_EXTENDED } else { ORACLE_CAP };
        let adj = build_adjacency(&spec, cap)?;
        adj.write_edge_list(fs::File::create(path)?)?;
    }
    let text = match format {
        Format::Json => spectrum_to_json(&report)? + "\n",
        Format::Csv => csv_text(|buf| write_spectrum_csv(&report, buf))?,
        Format::Table => render_spectrum(&report),
    };
    Ok(Outcome::ok(text))
}

fn render_spectrum(r: &SpectrumReport) -> String {
    let mut out = format!("{}: {} vertices, degree {}\n\n", r.spec, r.vertex_count, r.degree);
    let rows: Vec<Vec<String>> = r
        .lines
        .iter()
        .map(|l| {
            vec![
                format_rational(&l.eigenvalue),
                l.multiplicity.to_string(),
                l.contributors.iter().map(Partition::to_string).collect::<Vec<_>>().join(" "),
            ]
        })
        .collect();
    out += &grid(&["eigenvalue", "multiplicity", "contributors"], &rows);
    let _ = writeln!(out);
    let _ = writeln!(out, "energy          {}", format_rational(&r.energy));
    let _ = writeln!(out, "nullity         {}", r.nullity);
    let _ = writeln!(out, "integral        {}", yes_no(r.is_integral));
    let _ = writeln!(out, "hyperenergetic  {}", yes_no(r.is_hyperenergetic));
    out
}

pub fn chartable_cmd(args: &ChartableArgs, cache: &TableCache, format: Format) -> Result<Outcome, Error> {
    let table = if args.no_cache {
        character_table(args.n, TABLE_CAP)?
    } else {
        cache.get_or_compute(args.n, TABLE_CAP)?
    };
    let text = match format {
        Format::Json => table_to_json(&table)? + "\n",
        Format::Csv => csv_text(|buf| write_table_csv(&table, buf))?,
        Format::Table => render_table(&table),
    };
    Ok(Outcome::ok(text))
}

fn render_table(t: &CharacterTable) -> String {
    let labels: Vec<String> = t.partitions().iter().map(Partition::to_string).collect();
    let mut header = vec!["chi \\ class"];
    header.extend(labels.iter().map(String::as_str));
    let mut rows: Vec<Vec<String>> = t
        .values()
        .iter()
        .zip(&labels)
        .map(|(row, label)| {
            let mut cells = vec![label.clone()];
            cells.extend(row.iter().map(ToString::to_string));
            cells
        })
        .collect();
    let mut sizes = vec!["|class|".to_string()];
    sizes.extend(t.class_sizes().iter().map(ToString::to_string));
    rows.push(sizes);
    format!("Character table of Sym({})\n\n{}", t.n(), grid(&header, &rows))
}

#[derive(Serialize)]
struct ClosedFormCheck {
    energy: String,
    expected_energy: String,
    nullity: String,
    expected_nullity: String,
    #[serde(rename = "match")]
    matched: bool,
}

#[derive(Serialize)]
struct VerifyRun {
    n: usize,
    classes: Vec<String>,
    closed_form: ClosedFormCheck,
    integral: bool,
    hyperenergetic: bool,
    hypothesis_n_ge_4: bool,
    verdicts: Vec<VerdictJson>,
    passed: bool,
}

#[derive(Serialize)]
struct VerifyOutput {
    runs: Vec<VerifyRun>,
    all_passed: bool,
}

pub fn verify_cmd(args: &VerifyArgs, format: Format) -> Result<Outcome, Error> {
    let mut limits = OracleLimits::default();
    if args.enable_exact_n6 {
        limits = limits.with_exact_n6();
    }
    if args.enable_n7 {
        limits = limits.with_n7();
    }
    let mut runs = Vec::new();
    for n in args.n.iter() {
        if n < 2 {
            return Err(Error::InvalidClass(format!(
                "Sym({n}) has no n-cycle class distinct from the identity"
            )));
        }
        let spec = ClassSpec::n_cycles(n)?;
        let report = spectrum(&spec)?;
        let expected_energy = closed_form_energy(n);
        let expected_nullity = closed_form_nullity(n);
        let closed_form = ClosedFormCheck {
            energy: format_rational(&report.energy),
            expected_energy: expected_energy.to_string(),
            nullity: report.nullity.to_string(),
            expected_nullity: expected_nullity.to_string(),
            matched: report.energy_equals(&expected_energy) && report.nullity == expected_nullity,
        };
        let mut verdicts: Vec<Verdict> = Vec::new();
        if n <= limits.exact_max_n {
            let k = args.k.unwrap_or_else(|| default_moment_depth(n));
            log::info!("n = {n}: exact moment matching up to K = {k}");
            verdicts.push(verify_exact(&spec, k, &limits)?);
        }
        if args.with_float && n <= limits.float_max_n {
            log::info!("n = {n}: Jacobi eigensolve of {} vertices", report.vertex_count);
            verdicts.push(verify_float(&spec, args.tol, &limits)?);
        }
        let hypothesis = theorem_hypothesis_holds(n);
        let passed = closed_form.matched
            && report.is_integral
            && (!hypothesis || report.is_hyperenergetic)
            && verdicts.iter().all(|v| v.matched);
        runs.push(VerifyRun {
            n,
            classes: spec.cycle_types().iter().map(Partition::to_text).collect(),
            closed_form,
            integral: report.is_integral,
            hyperenergetic: report.is_hyperenergetic,
            hypothesis_n_ge_4: hypothesis,
            verdicts: verdicts.iter().map(VerdictJson::from_verdict).collect(),
            passed,
        });
    }
    let all_passed = runs.iter().all(|r| r.passed);
    let output = VerifyOutput { runs, all_passed };
    let text = match format {
        Format::Json => json_line(&output)?,
        Format::Csv => csv_text(|buf| verify_csv(&output, buf))?,
        Format::Table => render_verify(&output),
    };
    Ok(Outcome { text, passed: all_passed })
}

fn verify_rows(output: &VerifyOutput) -> Vec<Vec<String>> {
    let mut rows = Vec::new();
    for run in &output.runs {
        let cf = &run.closed_form;
        rows.push(vec![
            run.n.to_string(),
            "closed-form".into(),
            cf.matched.to_string(),
            format!(
                "energy {} (expected {}), nullity {} (expected {})",
                cf.energy, cf.expected_energy, cf.nullity, cf.expected_nullity
            ),
        ]);
        rows.push(vec![run.n.to_string(), "integral".into(), run.integral.to_string(), String::new()]);
        rows.push(vec![
            run.n.to_string(),
            "hyperenergetic".into(),
            run.hyperenergetic.to_string(),
            if run.hypothesis_n_ge_4 {
                String::new()
            } else {
                "n < 4: reported, not required".into()
            },
        ]);
        for v in &run.verdicts {
            let param = match (v.max_moment, v.tol) {
                (Some(k), _) => format!("K = {k}"),
                (_, Some(tol)) => format!("tol = {tol:e}"),
                _ => String::new(),
            };
            let detail = match &v.detail {
                Some(d) => format!("{param}: {d}"),
                None => param,
            };
            rows.push(vec![run.n.to_string(), v.method.clone(), v.matched.to_string(), detail]);
        }
    }
    rows
}

fn verify_csv(output: &VerifyOutput, buf: &mut Vec<u8>) -> Result<(), Error> {
    let mut w = csv::Writer::from_writer(buf);
    w.write_record(["n", "check", "passed", "detail"])?;
    for row in verify_rows(output) {
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

fn render_verify(output: &VerifyOutput) -> String {
    let mut out = grid(&["n", "check", "passed", "detail"], &verify_rows(output));
    let _ = writeln!(out, "\n{}", if output.all_passed { "all checks passed" } else { "SOME CHECKS FAILED" });
    out
}

#[derive(Serialize)]
struct IdentityRow {
    n: usize,
    a_n: String,
    a_n_closed_form: String,
    a_n_non_negative: bool,
    vandermonde: bool,
    /// `None` below n = 3, where the bound is not claimed.
    energy_bound: Option<bool>,
}

impl IdentityRow {
    fn passed(&self) -> bool {
        self.a_n_non_negative && self.vandermonde && self.energy_bound.unwrap_or(true)
    }
}

#[derive(Serialize)]
struct IdentitiesOutput {
    rows: Vec<IdentityRow>,
    all_passed: bool,
}

pub fn identities_cmd(args: &IdentitiesArgs, format: Format) -> Result<Outcome, Error> {
    if args.n.start == 0 {
        return Err(Error::Parse("identities are defined for n >= 1".into()));
    }
    let rows = args
        .n
        .iter()
        .map(|n| {
            let a = corollary_a(n)?;
            Ok(IdentityRow {
                n,
                a_n: a.sum_form.to_string(),
                a_n_closed_form: a.closed_form.to_string(),
                a_n_non_negative: a.is_non_negative(),
                vandermonde: vandermonde_check(n),
                energy_bound: (n >= 3).then(|| energy_bound_check(n)),
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let all_passed = rows.iter().all(IdentityRow::passed);
    let output = IdentitiesOutput { rows, all_passed };
    let text = match format {
        Format::Json => json_line(&output)?,
        Format::Csv => csv_text(|buf| identities_csv(&output, buf))?,
        Format::Table => render_identities(&output),
    };
    Ok(Outcome { text, passed: all_passed })
}

fn identity_cells(row: &IdentityRow) -> Vec<String> {
    vec![
        row.n.to_string(),
        row.a_n.clone(),
        row.a_n_closed_form.clone(),
        row.a_n_non_negative.to_string(),
        row.vandermonde.to_string(),
        row.energy_bound.map_or_else(|| "n/a".to_string(), |b| b.to_string()),
    ]
}

const IDENTITY_HEADER: [&str; 6] = ["n", "a_n", "a_n_closed_form", "non_negative", "vandermonde", "energy_bound"];

fn identities_csv(output: &IdentitiesOutput, buf: &mut Vec<u8>) -> Result<(), Error> {
    let mut w = csv::Writer::from_writer(buf);
    w.write_record(IDENTITY_HEADER)?;
    for row in &output.rows {
        w.write_record(identity_cells(row))?;
    }
    w.flush()?;
    Ok(())
}

fn render_identities(output: &IdentitiesOutput) -> String {
    let rows: Vec<Vec<String>> = output.rows.iter().map(identity_cells).collect();
    let mut out = grid(&IDENTITY_HEADER, &rows);
    let _ = writeln!(out, "\n{}", if output.all_passed { "all identities hold" } else { "SOME IDENTITIES FAILED" });
    out
}

pub fn cache_clear_cmd(cache: &TableCache) -> Result<Outcome, Error> {
    let removed = cache.clear()?;
    Ok(Outcome::ok(format!(
        "removed {removed} cached table(s) from {}\n",
        cache.dir().display()
    )))
}
