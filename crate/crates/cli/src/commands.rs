use std::fmt;
use std::fs;
use std::path::Path;

use harmonic_qubits::defects::{
    detect_halos, extract_defects, factorizable_qubits, is_separable_geometric, is_separable_tensor,
};
use harmonic_qubits::field::{
    basis_fields, check_laurent_independence, check_linear_independence, evaluation_matrix, four_qubit_points,
    map_state, necessary_charge_bound, nonsingularity_gap, sufficient_charge_bound, two_qubit_points,
    variable_particle_fields, Field, RepresentationConfig,
};
use harmonic_qubits::inner::build_gram;
use harmonic_qubits::qubit::{make_named_state, parse_bits, qft, Circuit, QubitState};
use harmonic_qubits::render::{
    north_pole_classify, render_svg, sample_grid, stereographic_project, write_csv, BBox, FieldGrid,
};
use harmonic_qubits::Error;
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::args::*;

#[derive(Debug)]
pub struct CliError {
    pub message: String,
    pub numerical: bool,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        Self {
            numerical: e.is_numerical(),
            message: e.to_string(),
        }
    }
}

fn invalid(message: impl Into<String>) -> CliError {
    CliError {
        message: message.into(),
        numerical: false,
    }
}

type CliResult<T> = Result<T, CliError>;

pub fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::State(a) => state(a),
        Command::Map(a) => map(a),
        Command::Analyze(a) => analyze(a),
        Command::Gram(a) => gram(a),
        Command::Circuit(a) => circuit(a),
        Command::Render(a) => render(a),
        Command::Sphere(a) => sphere(a),
        Command::Bounds(a) => bounds(a),
        Command::Checkli(a) => checkli(a),
    }
}

fn read_text(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> CliResult<T> {
    serde_json::from_str(&read_text(path)?).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn write_text(path: &Path, text: &str) -> CliResult<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| invalid(format!("{}: {e}", dir.display())))?;
    }
    fs::write(path, text).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn pretty<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// Prints JSON to stdout or writes it to `output`.
fn emit<T: serde::Serialize>(value: &T, output: Option<&Path>) -> CliResult<()> {
    match output {
        Some(path) => write_text(path, &pretty(value)),
        None => {
            print!("{}", pretty(value));
            Ok(())
        }
    }
}

fn parse_numbers(text: &str, what: &str) -> CliResult<Vec<f64>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| invalid(format!("{what}: `{}` is not a number", t.trim())))
        })
        .collect()
}

/// `re,im;re,im;…`
pub fn parse_complex_list(text: &str, what: &str) -> CliResult<Vec<Complex64>> {
    text.split(';')
        .filter(|t| !t.trim().is_empty())
        .enumerate()
        .map(|(k, pair)| match parse_numbers(pair, what)?.as_slice() {
            [re, im] => Ok(Complex64::new(*re, *im)),
            [re] => Ok(Complex64::new(*re, 0.0)),
            _ => Err(invalid(format!("{what}: entry {} must be `re,im`", k + 1))),
        })
        .collect()
}

fn config(rep: &RepArgs, n: usize) -> CliResult<RepresentationConfig> {
    Ok(match rep.rep {
        Rep::Charge => {
            if rep.defects.is_some() {
                return Err(invalid("--defects only applies to the position representation"));
            }
            RepresentationConfig::charge(n, rep.d.unwrap_or(3))?
        }
        Rep::Position => position_config(rep.d, rep.defects.as_deref(), n)?,
    })
}

fn position_config(d: Option<u32>, defects: Option<&str>, n: usize) -> CliResult<RepresentationConfig> {
    let defects = match defects {
        Some(text) => parse_complex_list(text, "--defects")?,
        None => RepresentationConfig::default_defects(n).ok_or_else(|| {
            invalid(format!(
                "no default defect layout for {n} qubits; pass --defects and --d"
            ))
        })?,
    };
    if defects.len() != n {
        return Err(invalid(format!("{} defects given for {n} qubits", defects.len())));
    }
    let d = match d.or_else(|| RepresentationConfig::default_charge(n)) {
        Some(d) => d,
        None => return Err(invalid(format!("no default charge for {n} qubits; pass --d"))),
    };
    let cfg = RepresentationConfig::position(defects, d)?;
    Ok(cfg)
}

fn state(a: StateArgs) -> CliResult<()> {
    let mut s = if let Some(name) = &a.named {
        let n = a.n.ok_or_else(|| invalid("--named needs --n"))?;
        make_named_state(name, n)?
    } else if let Some(bits) = &a.basis {
        let bits = parse_bits(bits)?;
        if a.n.is_some_and(|n| n != bits.len()) {
            return Err(invalid("--n disagrees with the bitstring length"));
        }
        QubitState::basis(bits.len(), &bits)?
    } else if let Some(text) = &a.amplitudes {
        let amps = parse_complex_list(text, "--amplitudes")?;
        let n = amps.len().trailing_zeros() as usize;
        if !amps.len().is_power_of_two() || n == 0 {
            return Err(invalid("--amplitudes needs 2^n entries with n ≥ 1"));
        }
        QubitState::new(n, amps)?
    } else {
        return Err(invalid("give one of --named, --basis or --amplitudes"));
    };
    if a.qft {
        s = qft(&s);
    }
    if a.normalize {
        s = s.normalized()?;
    }
    emit(&s, a.output.as_deref())
}

fn map(a: MapArgs) -> CliResult<()> {
    let s: QubitState = read_json(&a.state)?;
    let cfg = config(&a.rep, s.n())?;
    emit(&map_state(&s, &cfg)?, a.output.as_deref())
}

fn analyze(a: AnalyzeArgs) -> CliResult<()> {
    let s: QubitState = read_json(&a.state)?;
    let cfg = position_config(a.d, a.defects.as_deref(), s.n())?;
    let verdict = is_separable_geometric(&s, &cfg)?;
    let report = json!({
        "n": s.n(),
        "d": cfg.d,
        "defect_positions": cfg.defects,
        "separable": verdict.separable,
        "tensor_separable": is_separable_tensor(&s)?,
        "factorizable_qubits": factorizable_qubits(&s)?,
        "witness": verdict.witness,
        "witness_error": verdict.witness_error,
        "defects": verdict.defects,
        "halos": verdict.halos,
    });
    emit(&report, a.output.as_deref())
}

fn gram(a: GramArgs) -> CliResult<()> {
    let cfg = config(&a.rep, a.n)?;
    let ctx = build_gram(&cfg)?;
    if let Some(path) = &a.output {
        write_text(path, &pretty(&ctx))?;
    }
    let summary = json!({
        "n": a.n,
        "d": cfg.d,
        "alpha": ctx.alpha,
        "condition_estimate": ctx.condition_estimate,
    });
    emit(&summary, None)
}

fn default_bbox(field: &Field) -> BBox {
    let reach = field.pole_candidates().iter().map(|a| a.norm()).fold(0.0, f64::max);
    BBox::square(reach + 1.5).expect("positive width")
}

fn grid_for(field: &Field, g: &GridArgs) -> CliResult<FieldGrid> {
    let bbox = match &g.bbox {
        Some(text) => match parse_numbers(text, "--bbox")?.as_slice() {
            [x0, x1, y0, y1] => BBox::new(*x0, *x1, *y0, *y1)?,
            _ => return Err(invalid("--bbox needs x_min,x_max,y_min,y_max")),
        },
        None => default_bbox(field),
    };
    let res = parse_numbers(&g.res, "--res")?;
    let (nx, ny) = match res.as_slice() {
        [n] => (*n, *n),
        [nx, ny] => (*nx, *ny),
        _ => return Err(invalid("--res needs N or NX,NY")),
    };
    if nx.fract() != 0.0 || ny.fract() != 0.0 || nx < 0.0 || ny < 0.0 {
        return Err(invalid("--res entries must be whole numbers"));
    }
    Ok(sample_grid(field, bbox, nx as usize, ny as usize, g.clip)?)
}

/// Position configuration implied by a rational field, if any.
fn implied_config(field: &Field) -> Option<RepresentationConfig> {
    match field {
        Field::Rational(r) => RepresentationConfig::position(r.defects.clone(), r.d).ok(),
        Field::Laurent(_) => None,
    }
}

fn svg_for(field: &Field, grid: &FieldGrid, halos: bool) -> CliResult<String> {
    let defects = extract_defects(field)?;
    let report = match implied_config(field).filter(|_| halos) {
        Some(cfg) => Some(detect_halos(&defects, &cfg)?),
        None => None,
    };
    Ok(render_svg(grid, &defects, report.as_ref()))
}

fn circuit(a: CircuitArgs) -> CliResult<()> {
    let text = read_text(&a.circuit)?;
    let c = Circuit::from_json(&text).map_err(|e| invalid(format!("{}: {e}", a.circuit.display())))?;
    let initial = match &a.initial {
        Some(path) => read_json(path)?,
        None => QubitState::basis(c.n, &vec![0; c.n])?,
    };
    let cfg = config(&a.rep, c.n)?;
    let states = c.run(&initial)?;
    let mut steps = Vec::with_capacity(states.len());
    for (k, s) in states.iter().enumerate() {
        let field = map_state(s, &cfg)?;
        let label = if k == 0 {
            "initial".to_string()
        } else {
            let op = &c.ops[k - 1];
            format!("{} {:?}", op.gate, op.targets)
        };
        if let Some(dir) = &a.render {
            let grid = grid_for(&field, &a.grid)?;
            let svg = if field.is_zero() {
                render_svg(&grid, &Default::default(), None)
            } else {
                svg_for(&field, &grid, true)?
            };
            write_text(&dir.join(format!("frame_{k:02}.svg")), &svg)?;
        }
        steps.push(json!({ "step": k, "label": label, "state": s, "field": field }));
    }
    match (&a.output, &a.render) {
        (Some(path), _) => write_text(path, &pretty(&Value::Array(steps))),
        (None, Some(dir)) => {
            println!("wrote {} frames to {}", states.len(), dir.display());
            Ok(())
        }
        (None, None) => emit(&Value::Array(steps), None),
    }
}

fn render(a: RenderArgs) -> CliResult<()> {
    if a.svg.is_none() && a.csv.is_none() {
        return Err(invalid("give --svg and/or --csv"));
    }
    let field: Field = read_json(&a.field)?;
    let grid = grid_for(&field, &a.grid)?;
    if let Some(path) = &a.csv {
        let mut buf = Vec::new();
        write_csv(&grid, &mut buf)?;
        write_text(path, &String::from_utf8(buf).expect("csv is utf-8"))?;
    }
    if let Some(path) = &a.svg {
        write_text(path, &svg_for(&field, &grid, !a.no_halos)?)?;
    }
    Ok(())
}

fn sphere(a: SphereArgs) -> CliResult<()> {
    let field: Field = read_json(&a.field)?;
    let report = north_pole_classify(&field)?;
    if let Some(path) = &a.output {
        let samples = stereographic_project(&field, a.n_theta, a.n_phi)?;
        write_text(path, &pretty(&samples))?;
    }
    emit(&report, None)
}

fn bounds(a: BoundsArgs) -> CliResult<()> {
    let necessary = necessary_charge_bound(a.n)?;
    let sufficient = sufficient_charge_bound(a.n)?;
    let report = json!({
        "n": a.n,
        "necessary_d": necessary.to_string(),
        "sufficient_d": sufficient.to_string(),
    });
    emit(&report, None)
}

fn checkli(a: CheckliArgs) -> CliResult<()> {
    if a.variable_particle {
        if a.rep.rep != Rep::Charge || a.rep.defects.is_some() {
            return Err(invalid("--variable-particle needs --rep charge"));
        }
        let fields = variable_particle_fields(a.n, a.rep.d.unwrap_or(3))?;
        let report = check_laurent_independence(&fields)?;
        return emit(&report, None);
    }
    let cfg = config(&a.rep, a.n)?;
    let fields = basis_fields(&cfg)?;
    let report = check_linear_independence(&fields)?;
    let mut value = serde_json::to_value(&report).expect("serializable");
    let points = match (a.rep.rep, a.n) {
        (Rep::Position, 2) => Some(two_qubit_points()),
        (Rep::Position, 4) => Some(four_qubit_points()),
        _ => None,
    };
    if let Some(points) = points {
        if let Ok(m) = evaluation_matrix(&fields, &points) {
            value["evaluation_gap"] = serde_json::to_value(nonsingularity_gap(&m)).expect("serializable");
        }
    }
    emit(&value, None)
}
