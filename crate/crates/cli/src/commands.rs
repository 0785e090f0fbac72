use std::io::{self, Write};

use anyhow::{bail, Context, Result};
use knoedel_core::closed_form::{self as cf, require_balanced};
use knoedel_core::exact::parse_rational;
use knoedel_core::montecarlo::{compare, simulate, SimConfig};
use knoedel_core::verify::{run_all, VerifyConfig};
use knoedel_core::walk::dp_distribution;
use knoedel_core::{CoefficientQuery, ModelKind, TruncatedSeries, WalkModel};
use serde::Serialize;

use crate::args::{
    CoeffArgs, Command, Cli, Model, SeriesArgs, SimulateArgs, Source, TableArgs, VerifyArgs, Which,
};
use crate::output::{write_records, write_rows, Exact, OutputRecord, SourceTag, StateField};

const DEFAULT_MAX_STEPS: usize = 200;
const MAX_STEPS_ENV: &str = "KNOEDEL_MAX_STEPS";

pub fn run(cli: Cli) -> Result<u8> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Table(a) => table(&mut out, a),
        Command::Coeff(a) => coeff(&mut out, a),
        Command::Verify(a) => verify(&mut out, a),
        Command::Simulate(a) => simulate_cmd(&mut out, a),
        Command::Series(a) => series(&mut out, a),
    }
}

/// Safety cap on step counts and series orders.
fn step_cap() -> Result<usize> {
    match std::env::var(MAX_STEPS_ENV) {
        Ok(v) => v.trim().parse().with_context(|| format!("{MAX_STEPS_ENV}={v:?} is not a count")),
        Err(_) => Ok(DEFAULT_MAX_STEPS),
    }
}

fn check_cap(what: &str, value: usize) -> Result<()> {
    let cap = step_cap()?;
    if value > cap {
        bail!("{what} {value} exceeds the limit {cap} (set {MAX_STEPS_ENV} to raise it)");
    }
    Ok(())
}

fn model(m: Model, p: Option<&str>) -> Result<WalkModel> {
    let kind = ModelKind::from(m);
    Ok(match p {
        None => WalkModel::balanced(kind),
        Some(s) => WalkModel::with_p(kind, parse_rational(s)?)?,
    })
}

fn table(out: &mut impl Write, a: TableArgs) -> Result<u8> {
    check_cap("--steps", a.steps)?;
    let m = model(a.model, a.p.as_deref())?;
    let records: Vec<OutputRecord> = dp_distribution(&m, a.steps)
        .iter()
        .flat_map(|row| {
            row.iter()
                .map(|(s, mass)| OutputRecord {
                    model: m.kind(),
                    step: row.step(),
                    state: s,
                    exact: Exact::new(mass, &a.render),
                    source: SourceTag::Dp,
                })
                .collect::<Vec<_>>()
        })
        .collect();
    write_records(out, &records, a.render.format, false)?;
    Ok(0)
}

fn coeff(out: &mut impl Write, a: CoeffArgs) -> Result<u8> {
    let m = model(a.model, a.p.as_deref())?;
    let q = CoefficientQuery::new(m.kind(), a.state, a.steps);
    let (value, source) = match a.source {
        Source::Dp => {
            check_cap("--steps", a.steps)?;
            (q.dp(&m), SourceTag::Dp)
        }
        Source::ClosedForm => {
            require_balanced(&m)?;
            (q.closed_form(), SourceTag::ClosedForm)
        }
    };
    if !q.in_residue_class() {
        eprintln!(
            "note: state {} of {} is unreachable after {} steps (residue class {} mod 3)",
            a.state,
            m.kind(),
            a.steps,
            m.residue_class(a.state)
        );
    }
    let record = OutputRecord {
        model: m.kind(),
        step: a.steps,
        state: a.state,
        exact: Exact::new(&value, &a.render),
        source,
    };
    write_records(out, &[record], a.render.format, true)?;
    Ok(0)
}

fn verify(out: &mut impl Write, a: VerifyArgs) -> Result<u8> {
    let report = run_all(&VerifyConfig { order: a.order as usize, max_steps: a.max_steps });
    writeln!(out, "{report}")?;
    Ok(report.exit_code() as u8)
}

#[derive(Serialize)]
struct SimRow {
    model: &'static str,
    step: usize,
    state: StateField,
    count: u64,
    trials: u64,
    empirical: f64,
    exact_num: String,
    exact_den: String,
    exact_decimal: String,
    deviation: f64,
    bound: f64,
    within: bool,
    source: SourceTag,
}

fn simulate_cmd(out: &mut impl Write, a: SimulateArgs) -> Result<u8> {
    check_cap("--steps", a.steps)?;
    if a.trials == 0 {
        bail!("--trials must be at least 1");
    }
    let m = model(a.model, a.p.as_deref())?;
    let cfg = SimConfig::new(m.clone(), a.steps, a.trials).with_seed(a.seed);
    let empirical = simulate(&cfg)?;
    let exact = &dp_distribution(&m, a.steps)[a.steps];
    let rows: Vec<SimRow> = compare(&empirical, exact)
        .into_iter()
        .map(|c| {
            let e = Exact::new(&c.exact, &a.render);
            SimRow {
                model: m.kind().name(),
                step: a.steps,
                state: StateField(c.state),
                count: c.count,
                trials: a.trials,
                empirical: c.empirical,
                exact_num: e.num,
                exact_den: e.den,
                exact_decimal: e.decimal.unwrap_or_default(),
                deviation: c.deviation,
                bound: c.bound,
                within: c.within_bound(),
                source: SourceTag::MonteCarlo,
            }
        })
        .collect();
    write_rows(out, &rows, a.render.format)?;
    Ok(0)
}

#[derive(Serialize)]
struct SeriesRow {
    series: &'static str,
    power: usize,
    value: String,
    num: String,
    den: String,
    decimal: String,
}

fn series(out: &mut impl Write, a: SeriesArgs) -> Result<u8> {
    check_cap("--order", a.order)?;
    let order = a.order;
    let s: TruncatedSeries = match a.which {
        Which::T => cf::t_series(order),
        Which::Inv1mt => cf::inv_one_minus_t_series(order),
        Which::U1 => cf::bad_root_series(order),
        Which::F0 => cf::f0_series(order),
        Which::G0 => cf::g0_series(order),
    };
    let rows: Vec<SeriesRow> = s
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let e = Exact::new(c, &a.render);
            SeriesRow {
                series: a.which.name(),
                power: k,
                value: e.value(),
                num: e.num,
                den: e.den,
                decimal: e.decimal.unwrap_or_default(),
            }
        })
        .collect();
    write_rows(out, &rows, a.render.format)?;
    Ok(0)
}
