//! The `qshape` subcommands. Each writes its whole output to the given
//! writer so the binary and the tests share one code path.

use std::fmt;
use std::io::{self, Write};
use std::path::Path;
use std::str::FromStr;

use num_traits::ToPrimitive;
use qshape_core::exactnum::{rat, BigInt, RatPoly, Rational};
use qshape_core::quasi::RegionDecomposition;
use qshape_core::shape::evaluate_shape;
use qshape_core::{
    convergence_table, limit_shape, measure_from_polynomial, q_binomial, region_decomposition, BinomialForm,
    Polynomial, QBinomialQuery,
};
use serde_json::{json, Number, Value};

use crate::plot::{render_svg, BarColor, PlotSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Coeffs,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShapeMode {
    Exact,
    Samples(usize),
}

#[derive(Debug)]
pub enum CommandError {
    /// Bad arguments; the binary exits with status 2.
    Usage(String),
    Io(io::Error),
    Internal(qshape_core::Error),
}

impl fmt::Display for CommandError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CommandError::Usage(msg) => write!(f, "usage error: {msg}"),
            CommandError::Io(e) => write!(f, "i/o error: {e}"),
            CommandError::Internal(e) => write!(f, "internal error: {e}"),
        }
    }
}

impl std::error::Error for CommandError {}

impl From<io::Error> for CommandError {
    fn from(e: io::Error) -> Self {
        CommandError::Io(e)
    }
}

impl From<qshape_core::Error> for CommandError {
    fn from(e: qshape_core::Error) -> Self {
        match e {
            qshape_core::Error::InvalidArguments(msg) => CommandError::Usage(msg),
            other => CommandError::Internal(other),
        }
    }
}

pub type CommandResult = Result<(), CommandError>;

fn json_int(v: &BigInt) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("integer literal"))
}

fn write_json(out: &mut dyn Write, value: &Value) -> CommandResult {
    let text = serde_json::to_string_pretty(value).expect("json values serialize");
    writeln!(out, "{text}")?;
    Ok(())
}

fn shifted(n: usize, k: usize) -> Result<Polynomial, CommandError> {
    Ok(q_binomial(QBinomialQuery::new(n, k), BinomialForm::Shifted)?)
}

/// Coefficients of `[n+k choose k]_q` in ascending order.
pub fn cmd_qbinom(n: usize, k: usize, format: Format, out: &mut dyn Write) -> CommandResult {
    let poly = shifted(n, k)?;
    match format {
        Format::Coeffs => {
            for c in poly.coeffs() {
                writeln!(out, "{c}")?;
            }
        }
        Format::Csv => {
            writeln!(out, "index,coefficient")?;
            for (i, c) in poly.coeffs().iter().enumerate() {
                writeln!(out, "{i},{c}")?;
            }
        }
        Format::Json => {
            let rows: Vec<Value> = poly
                .coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| json!({ "index": i, "coefficient": json_int(c) }))
                .collect();
            write_json(out, &Value::Array(rows))?;
        }
    }
    Ok(())
}

fn residue_strings(formula: &qshape_core::Quasipolynomial) -> Vec<String> {
    formula.polys().iter().map(|p| p.display_in("m")).collect()
}

fn write_regions_text(d: &RegionDecomposition, out: &mut dyn Write) -> CommandResult {
    writeln!(out, "[{}+{} choose {}]_q: {} regions", d.n, d.k, d.k, d.regions.len())?;
    let mut zones = d.transition_zones.iter();
    for region in &d.regions {
        if region.label > 0 {
            if let Some(zone) = zones.next() {
                let values: Vec<String> = zone.values.iter().map(ToString::to_string).collect();
                writeln!(out, "transition [{}, {}]: {}", zone.start, zone.end, values.join(", "))?;
            }
        }
        let f = &region.formula;
        writeln!(
            out,
            "region {} [{}, {}] period {} degree {} valid from {}",
            region.label,
            region.left_end,
            region.right_end,
            f.period(),
            f.degree(),
            region.validity_start
        )?;
        for (r, text) in residue_strings(f).iter().enumerate() {
            writeln!(out, "  m = {r} mod {}: {text}", f.period())?;
        }
    }
    Ok(())
}

/// Per-region quasipolynomial formulas and the exact values inside each
/// transition zone.
pub fn cmd_regions(n: usize, k: usize, format: Format, out: &mut dyn Write) -> CommandResult {
    let d = region_decomposition(n, k)?;
    match format {
        Format::Coeffs => write_regions_text(&d, out)?,
        Format::Csv => {
            writeln!(out, "kind,index,start,end,valid_from,period,residue,expression")?;
            for region in &d.regions {
                let f = &region.formula;
                for (r, text) in residue_strings(f).iter().enumerate() {
                    writeln!(
                        out,
                        "region,{},{},{},{},{},{r},{text}",
                        region.label,
                        region.left_end,
                        region.right_end,
                        region.validity_start,
                        f.period()
                    )?;
                }
            }
            for (z, zone) in d.transition_zones.iter().enumerate() {
                for (m, v) in (zone.start..=zone.end).zip(&zone.values) {
                    writeln!(out, "transition,{z},{m},{m},,,,{v}")?;
                }
            }
        }
        Format::Json => {
            let regions: Vec<Value> = d
                .regions
                .iter()
                .map(|r| {
                    json!({
                        "index": r.label,
                        "start": r.left_end,
                        "end": r.right_end,
                        "valid_from": r.validity_start,
                        "period": r.formula.period(),
                        "degree": r.formula.degree(),
                        "residues": residue_strings(&r.formula),
                    })
                })
                .collect();
            let zones: Vec<Value> = d
                .transition_zones
                .iter()
                .map(|z| {
                    json!({
                        "start": z.start,
                        "end": z.end,
                        "values": z.values.iter().map(json_int).collect::<Vec<_>>(),
                    })
                })
                .collect();
            write_json(out, &json!({ "n": d.n, "k": d.k, "regions": regions, "transition_zones": zones }))?;
        }
    }
    Ok(())
}

/// Exact pieces of `L_k`, or exact samples at evenly spaced `x`.
pub fn cmd_shape(k: usize, mode: ShapeMode, format: Format, out: &mut dyn Write) -> CommandResult {
    if k == 0 {
        return Err(CommandError::Usage("k must be at least 1".into()));
    }
    let shape = limit_shape(k)?;
    match mode {
        ShapeMode::Exact => {
            let rows: Vec<(Rational, Rational, &RatPoly)> = shape
                .pieces()
                .iter()
                .enumerate()
                .map(|(i, p)| (shape.breakpoint(i), shape.breakpoint(i + 1), p))
                .collect();
            if format == Format::Json {
                let pieces: Vec<Value> = rows
                    .iter()
                    .enumerate()
                    .map(|(i, (lo, hi, p))| {
                        json!({
                            "piece": i,
                            "start": lo.to_string(),
                            "end": hi.to_string(),
                            "polynomial": p.display_in("x"),
                            "coefficients": p.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                write_json(out, &json!({ "k": k, "pieces": pieces }))?;
            } else {
                writeln!(out, "piece,start,end,polynomial")?;
                for (i, (lo, hi, p)) in rows.iter().enumerate() {
                    writeln!(out, "{i},{lo},{hi},{}", p.display_in("x"))?;
                }
            }
        }
        ShapeMode::Samples(count) => {
            if count == 0 {
                return Err(CommandError::Usage("need at least one sample".into()));
            }
            let denom = (count - 1).max(1) as i64;
            let samples: Vec<(Rational, Rational)> = (0..count as i64)
                .map(|j| {
                    let x = rat(j, denom);
                    let y = evaluate_shape(&shape, &x)?;
                    Ok((x, y))
                })
                .collect::<Result<_, qshape_core::Error>>()?;
            if format == Format::Json {
                let rows: Vec<Value> = samples
                    .iter()
                    .map(|(x, y)| json!({ "x": x.to_string(), "density": y.to_string() }))
                    .collect();
                write_json(out, &Value::Array(rows))?;
            } else {
                writeln!(out, "x,density")?;
                for (x, y) in samples {
                    writeln!(out, "{x},{y}")?;
                }
            }
        }
    }
    Ok(())
}

/// KS distance of each normalized `[n+k choose k]_q` to `L_k`.
pub fn cmd_converge(k: usize, n_list: &[usize], format: Format, out: &mut dyn Write) -> CommandResult {
    if k == 0 {
        return Err(CommandError::Usage("k must be at least 1".into()));
    }
    let rows = convergence_table(k, n_list)?;
    if format == Format::Json {
        let rows: Vec<Value> = rows.iter().map(|r| json!({ "n": r.n, "ks": r.ks })).collect();
        write_json(out, &Value::Array(rows))?;
    } else {
        writeln!(out, "n,ks")?;
        for r in rows {
            writeln!(out, "{},{}", r.n, r.ks)?;
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlotOptions {
    pub overlay: bool,
    pub color_regions: bool,
    pub width_px: u32,
    pub height_px: u32,
}

impl Default for PlotOptions {
    fn default() -> Self {
        PlotOptions {
            overlay: false,
            color_regions: false,
            width_px: 800,
            height_px: 400,
        }
    }
}

/// Number of points in the sampled limit-shape overlay.
const OVERLAY_SAMPLES: i64 = 400;

/// Builds the bar graph of `[n+k choose k]_q`. Bar `i` has height
/// `mass_i * (nk + 1)`, so a measure matching `L_k` exactly would trace the
/// overlay curve `L_k(x)` drawn in the same units.
pub fn plot_spec(n: usize, k: usize, options: &PlotOptions) -> Result<PlotSpec, CommandError> {
    if options.width_px == 0 || options.height_px == 0 {
        return Err(CommandError::Usage("plot dimensions must be positive".into()));
    }
    let poly = shifted(n, k)?;
    let em = measure_from_polynomial(&poly)?;
    let bars = BigInt::from(em.atoms().len());
    let bar_heights = em
        .atoms()
        .iter()
        .map(|(_, mass)| (mass * &bars).to_f64().expect("finite"))
        .collect();

    let overlay = if options.overlay {
        if k == 0 {
            return Err(CommandError::Usage("the overlay needs k >= 1".into()));
        }
        let shape = limit_shape(k)?;
        let curve = (0..=OVERLAY_SAMPLES)
            .map(|j| {
                let x = rat(j, OVERLAY_SAMPLES);
                let y = evaluate_shape(&shape, &x)?;
                Ok((x.to_f64().expect("finite"), y.to_f64().expect("finite")))
            })
            .collect::<Result<Vec<_>, qshape_core::Error>>()?;
        Some(curve)
    } else {
        None
    };

    let region_colors = if options.color_regions {
        let d = region_decomposition(n, k)?;
        Some(
            (0..=(n * k) as i64)
                .map(|m| d.label_at(m).map_or(BarColor::Transition, BarColor::Region))
                .collect(),
        )
    } else {
        None
    };

    Ok(PlotSpec {
        bar_heights,
        width_px: options.width_px,
        height_px: options.height_px,
        overlay,
        region_colors,
        title: format!("coefficients of [{n}+{k} choose {k}]_q"),
    })
}

pub fn cmd_plot(n: usize, k: usize, out_path: &Path, options: &PlotOptions) -> CommandResult {
    let spec = plot_spec(n, k, options)?;
    std::fs::write(out_path, render_svg(&spec))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(f: impl FnOnce(&mut Vec<u8>) -> CommandResult) -> String {
        let mut buf = Vec::new();
        f(&mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn qbinom_formats() {
        assert_eq!(run(|o| cmd_qbinom(2, 2, Format::Coeffs, o)), "1\n1\n2\n1\n1\n");
        assert_eq!(run(|o| cmd_qbinom(0, 5, Format::Coeffs, o)), "1\n");
        assert_eq!(run(|o| cmd_qbinom(1, 1, Format::Csv, o)), "index,coefficient\n0,1\n1,1\n");
        let json: Value = serde_json::from_str(&run(|o| cmd_qbinom(2, 2, Format::Json, o))).unwrap();
        assert_eq!(json[2]["index"], 2);
        assert_eq!(json[2]["coefficient"], 2);
    }

    #[test]
    fn regions_text_and_errors() {
        let text = run(|o| cmd_regions(50, 4, Format::Coeffs, o));
        assert!(text.contains("m = 0 mod 12: 1/144 m^3 + 5/48 m^2 + 1/2 m + 1"));
        assert_eq!(text.matches("\nregion ").count(), 4);
        assert_eq!(text.matches("\ntransition ").count(), 3);

        let one = run(|o| cmd_regions(50, 1, Format::Csv, o));
        assert_eq!(one, "kind,index,start,end,valid_from,period,residue,expression\nregion,0,0,50,0,1,0,1\n");

        let mut sink = Vec::new();
        assert!(matches!(cmd_regions(5, 4, Format::Coeffs, &mut sink), Err(CommandError::Usage(_))));
    }

    #[test]
    fn regions_json_round_trips() {
        let json: Value = serde_json::from_str(&run(|o| cmd_regions(30, 3, Format::Json, o))).unwrap();
        assert_eq!(json["regions"].as_array().unwrap().len(), 3);
        assert_eq!(json["regions"][0]["period"], 6);
        assert_eq!(json["transition_zones"][0]["start"], 31);
    }

    #[test]
    fn shape_modes() {
        let exact = run(|o| cmd_shape(3, ShapeMode::Exact, Format::Csv, o));
        assert_eq!(
            exact,
            "piece,start,end,polynomial\n0,0,1/3,27/2 x^2\n1,1/3,2/3,-27 x^2 + 27 x - 9/2\n2,2/3,1,27/2 x^2 - 27 x + 27/2\n"
        );
        let two = run(|o| cmd_shape(2, ShapeMode::Exact, Format::Csv, o));
        assert!(two.contains("0,0,1/2,4 x\n") && two.contains("1,1/2,1,-4 x + 4\n"));
        assert_eq!(run(|o| cmd_shape(1, ShapeMode::Samples(3), Format::Csv, o)), "x,density\n0,1\n1/2,1\n1,1\n");
        let mut sink = Vec::new();
        assert!(matches!(cmd_shape(0, ShapeMode::Exact, Format::Csv, &mut sink), Err(CommandError::Usage(_))));
        assert!(matches!(cmd_shape(2, ShapeMode::Samples(0), Format::Csv, &mut sink), Err(CommandError::Usage(_))));
    }

    #[test]
    fn converge_rows() {
        let text = run(|o| cmd_converge(1, &[10], Format::Csv, o));
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("n,ks"));
        let ks: f64 = lines.next().unwrap().split(',').nth(1).unwrap().parse().unwrap();
        assert!(ks <= 0.1);
        let mut sink = Vec::new();
        assert!(matches!(cmd_converge(3, &[], Format::Csv, &mut sink), Err(CommandError::Usage(_))));
    }

    #[test]
    fn plot_bars_follow_coefficients() {
        let spec = plot_spec(2, 2, &PlotOptions::default()).unwrap();
        let ratios: Vec<f64> = spec.bar_heights.iter().map(|h| h / spec.bar_heights[0]).collect();
        assert_eq!(ratios, vec![1.0, 1.0, 2.0, 1.0, 1.0]);
        assert!(spec.overlay.is_none() && spec.region_colors.is_none());
        assert!(matches!(
            plot_spec(2, 2, &PlotOptions { width_px: 0, ..PlotOptions::default() }),
            Err(CommandError::Usage(_))
        ));
    }
}
