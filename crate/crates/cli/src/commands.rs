use serde::Serialize;
use sitepc::enumeration::{
    class_count, enumerate_cycles, polynomial_in_omega, short_cycle_pi0_polynomial, walk_counts, OmegaPolynomial,
    ProbabilityPolynomial, UnionBudget, DEFAULT_WALK_BUDGET,
};
use sitepc::json::{BigNum, Sig17};
use sitepc::lace::{oze_residual, pi_hat_estimate};
use sitepc::percolation::{
    double_connection, entropy_seed, theta_and_pc, triangle_diagrams, two_point, two_point_table, TwoPointVariant,
};
use sitepc::series::{lace_coefficient_inputs, solve_pc_fixed_point, SeriesJson, TruncatedSeries, Variable};
use sitepc::{Execution, Point, TorusGeometry};

use crate::args::*;
use crate::error::CliError;
use crate::output::{csv, f, pair, pairs, point_cell, EstimateJson, Output};

/// Largest box for the wrapping sweep.
const MAX_SWEEP_SITES: u64 = 1 << 26;
/// Largest box for the dense two-point table and its transforms.
const MAX_TABLE_SITES: u64 = 1 << 22;

fn usage<T>(message: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Usage(message.into()))
}

fn check_p(p: f64) -> Result<f64, CliError> {
    if !(0.0..=1.0).contains(&p) {
        return usage(format!("p = {p} is not a probability"));
    }
    Ok(p)
}

fn geometry(b: &BoxArgs) -> Result<TorusGeometry, CliError> {
    Ok(TorusGeometry::new(b.d, b.side)?)
}

fn size_guard(g: &TorusGeometry, limit: u64) -> Result<(), CliError> {
    if g.num_sites() > limit {
        return Err(CliError::Budget(format!("{} sites exceed the limit of {limit} for this command", g.num_sites())));
    }
    Ok(())
}

fn point(text: &str, d: Option<usize>) -> Result<Point, CliError> {
    let x = Point::parse(text).ok_or_else(|| CliError::Usage(format!("cannot parse point {text:?}")))?;
    if let Some(d) = d {
        if x.dim() != d {
            return usage(format!("point {x} has {} coordinates, expected {d}", x.dim()));
        }
    }
    Ok(x)
}

fn seed(run: &RunArgs) -> u64 {
    if run.seed == 0 {
        entropy_seed()
    } else {
        run.seed
    }
}

fn check_samples(run: &RunArgs) -> Result<(), CliError> {
    if run.samples == 0 {
        return usage("--samples must be at least 1");
    }
    if run.threads == Some(0) {
        return usage("--threads must be at least 1");
    }
    Ok(())
}

/// Run one subcommand and return its rendered output and output options.
pub fn run(command: &Command) -> Result<(Output, &OutputArgs), CliError> {
    match command {
        Command::Expand(a) => Ok((expand(a)?, &a.output)),
        Command::Convert(a) => Ok((convert(a)?, &a.output)),
        Command::Count(a) => Ok((count(a)?, &a.output)),
        Command::Cycles(a) => Ok((cycles(a)?, &a.output)),
        Command::Pc(a) => Ok((stochastic(&a.run, || pc(a))?, &a.output)),
        Command::Tau(a) => Ok((stochastic(&a.run, || tau(a))?, &a.output)),
        Command::Double(a) => Ok((stochastic(&a.run, || double(a))?, &a.output)),
        Command::Triangle(a) => Ok((stochastic(&a.run, || triangle(a))?, &a.output)),
        Command::Pi(a) => Ok((stochastic(&a.run, || pi(a))?, &a.output)),
        Command::Oze(a) => Ok((stochastic(&a.run, || oze(a))?, &a.output)),
    }
}

fn stochastic<F>(run: &RunArgs, f: F) -> Result<Output, CliError>
where
    F: FnOnce() -> Result<Output, CliError> + Send,
{
    check_samples(run)?;
    sitepc::exec::with_threads(run.threads, f)
}

#[derive(Serialize)]
struct ExpandJson {
    schema: &'static str,
    order: usize,
    variable: Variable,
    q: Vec<[BigNum; 2]>,
    pc: Vec<[BigNum; 2]>,
    q_text: String,
    pc_text: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    at_d: Option<AtDimension>,
}

#[derive(Serialize)]
struct AtDimension {
    d: u32,
    pc: [BigNum; 2],
    pc_float: Sig17,
}

fn expand(a: &ExpandArgs) -> Result<Output, CliError> {
    let sol = solve_pc_fixed_point(&lace_coefficient_inputs(), a.order)?;
    let at_d = match a.d {
        Some(d) => {
            let v = sol.pc.evaluate(d)?;
            let x = num_traits::ToPrimitive::to_f64(&v).unwrap_or(f64::NAN);
            Some(AtDimension { d, pc: pair(&v), pc_float: Sig17(x) })
        }
        None => None,
    };
    let rows = (0..=sol.pc.order()).map(|k| {
        let q = sol.q.coefficient(k);
        let pc = sol.pc.coefficient(k).expect("pc has order + 1 terms");
        vec![
            k.to_string(),
            q.map(|r| r.numer().to_string()).unwrap_or_default(),
            q.map(|r| r.denom().to_string()).unwrap_or_default(),
            pc.numer().to_string(),
            pc.denom().to_string(),
        ]
    });
    let table = csv(&["power", "q_num", "q_den", "pc_num", "pc_den"], rows);
    let payload = ExpandJson {
        schema: "sitepc/expand/v1",
        order: a.order,
        variable: Variable::T,
        q: pairs(sol.q.coefficients()),
        pc: pairs(sol.pc.coefficients()),
        q_text: sol.q.to_string(),
        pc_text: sol.pc.to_string(),
        at_d,
    };
    Ok(Output::new(&payload, table, None))
}

#[derive(Serialize)]
struct ConvertJson {
    schema: &'static str,
    input: SeriesJson,
    output: SeriesJson,
    text: String,
}

fn convert(a: &ConvertArgs) -> Result<Output, CliError> {
    let text = std::fs::read_to_string(&a.input)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", a.input.display())))?;
    let json: SeriesJson = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("{} is not a series file: {e}", a.input.display())))?;
    let input = TruncatedSeries::from_json(&json)?;
    let output = match input.variable() {
        Variable::S => input.substitute_sigma_to_2d()?,
        Variable::T => input.substitute_2d_to_sigma()?,
    };
    let rows = output
        .coefficients()
        .iter()
        .enumerate()
        .map(|(k, c)| vec![k.to_string(), c.numer().to_string(), c.denom().to_string()]);
    let table = csv(&["power", "num", "den"], rows);
    let payload =
        ConvertJson { schema: "sitepc/convert/v1", input: json, output: output.to_json(), text: output.to_string() };
    Ok(Output::new(&payload, table, None))
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum CountQuery {
    Class { l1: u32, linf: u32 },
    Walk { steps: u32, x: String },
}

#[derive(Serialize)]
struct OmegaJson {
    coefficients: Vec<[BigNum; 2]>,
    text: String,
    fitted_from_d: usize,
    held_out_d: usize,
}

#[derive(Serialize)]
struct CountJson {
    schema: &'static str,
    query: CountQuery,
    d: usize,
    value: BigNum,
    #[serde(skip_serializing_if = "Option::is_none")]
    omega_polynomial: Option<OmegaJson>,
}

fn omega_json(poly: OmegaPolynomial, from: usize, degree: usize) -> OmegaJson {
    OmegaJson {
        coefficients: pairs(poly.coefficients()),
        text: poly.to_string(),
        fitted_from_d: from,
        held_out_d: from + degree + 1,
    }
}

fn count(a: &CountArgs) -> Result<Output, CliError> {
    if a.d == 0 {
        return usage("--d must be at least 1");
    }
    let (query, value, omega) = match (a.l1, a.linf, a.steps, &a.x) {
        (Some(l1), Some(linf), None, None) => {
            let value = class_count(a.d, l1, linf)?;
            let omega = match a.omega_degree {
                Some(k) => {
                    let count = |d: usize| class_count(d, l1, linf).map(Into::into).unwrap_or_default();
                    Some(omega_json(polynomial_in_omega(count, k, 1)?, 1, k))
                }
                None => None,
            };
            (CountQuery::Class { l1, linf }, value.into(), omega)
        }
        (None, None, Some(steps), Some(text)) => {
            let x = point(text, Some(a.d))?;
            let value = walk_counts(a.d, steps, DEFAULT_WALK_BUDGET)?.count(&x);
            let omega = match a.omega_degree {
                Some(k) => {
                    // walk counts depend only on the nonzero coordinates, padded with zeros
                    let mut shape = x.coords().to_vec();
                    shape.retain(|&v| v != 0);
                    let from = shape.len().max(1);
                    let count = |d: usize| {
                        let mut c = shape.clone();
                        c.resize(d, 0);
                        walk_counts(d, steps, DEFAULT_WALK_BUDGET)
                            .map(|t| t.count(&Point(c)).into())
                            .unwrap_or_default()
                    };
                    Some(omega_json(polynomial_in_omega(count, k, from)?, from, k))
                }
                None => None,
            };
            (CountQuery::Walk { steps, x: x.to_string() }, value.into(), omega)
        }
        _ => return usage("give either --l1 and --linf, or --steps and --x"),
    };
    let value = BigNum(value);
    let table = csv(&["d", "value"], [vec![a.d.to_string(), value.0.to_string()]]);
    let payload = CountJson { schema: "sitepc/count/v1", query, d: a.d, value, omega_polynomial: omega };
    Ok(Output::new(&payload, table, None))
}

#[derive(Serialize)]
struct PolynomialJson {
    /// Integer coefficients of `p^0, p^1, ...`
    coefficients: Vec<BigNum>,
    text: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    p: Option<Sig17>,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<Sig17>,
}

fn polynomial_json(poly: &ProbabilityPolynomial, p: Option<f64>) -> PolynomialJson {
    PolynomialJson {
        coefficients: poly.coefficients().iter().cloned().map(BigNum).collect(),
        text: poly.to_string(),
        p: p.map(Sig17),
        value: p.map(|p| Sig17(poly.eval(p))),
    }
}

#[derive(Serialize)]
struct CyclesJson {
    schema: &'static str,
    x: String,
    length: usize,
    n_cycles: usize,
    cycles: Vec<Vec<String>>,
    interiors: Vec<Vec<String>>,
    polynomial: PolynomialJson,
}

#[derive(Serialize)]
struct ShortCyclesJson {
    schema: &'static str,
    d: usize,
    max_length: usize,
    polynomial: PolynomialJson,
}

fn cycles(a: &CyclesArgs) -> Result<Output, CliError> {
    if let Some(p) = a.p {
        check_p(p)?;
    }
    match (&a.x, a.d) {
        (Some(text), None) => {
            let x = point(text, None)?;
            let family = enumerate_cycles(&x, a.l)?;
            let poly = family.union_probability(UnionBudget::default())?;
            let show = |v: &[Point]| v.iter().map(|p| p.to_string()).collect::<Vec<_>>();
            let rows = family
                .cycles()
                .iter()
                .enumerate()
                .map(|(i, c)| vec![i.to_string(), format!("\"{}\"", show(c).join(" "))]);
            let table = csv(&["cycle", "vertices"], rows);
            let payload = CyclesJson {
                schema: "sitepc/cycles/v1",
                x: x.to_string(),
                length: a.l,
                n_cycles: family.len(),
                cycles: family.cycles().iter().map(|c| show(c)).collect(),
                interiors: family.interiors().iter().map(|s| s.iter().map(|p| p.to_string()).collect()).collect(),
                polynomial: polynomial_json(&poly, a.p),
            };
            Ok(Output::new(&payload, table, None))
        }
        (None, Some(d)) => {
            if d == 0 {
                return usage("--d must be at least 1");
            }
            let poly = short_cycle_pi0_polynomial(d, a.l, UnionBudget::default())?;
            let rows = poly.coefficients().iter().enumerate().map(|(k, c)| vec![k.to_string(), c.to_string()]);
            let table = csv(&["power", "coefficient"], rows);
            let payload = ShortCyclesJson {
                schema: "sitepc/short-cycles/v1",
                d,
                max_length: a.l,
                polynomial: polynomial_json(&poly, a.p),
            };
            Ok(Output::new(&payload, table, None))
        }
        _ => usage("give exactly one of --x or --d"),
    }
}

#[derive(Serialize)]
struct ThetaJson {
    p: Sig17,
    #[serde(flatten)]
    estimate: EstimateJson,
}

#[derive(Serialize)]
struct PcJson {
    schema: &'static str,
    d: usize,
    #[serde(rename = "L")]
    side: u32,
    seed: u64,
    pc: EstimateJson,
    theta: Vec<ThetaJson>,
}

fn pc(a: &PcArgs) -> Result<Output, CliError> {
    let g = geometry(&a.geometry)?;
    size_guard(&g, MAX_SWEEP_SITES)?;
    for &p in &a.p {
        check_p(p)?;
    }
    let seed = seed(&a.run);
    let r = theta_and_pc(&g, &a.p, a.run.samples, seed, Execution::default());
    let mut rows = vec![vec!["pc".into(), String::new(), f(r.pc.mean), f(r.pc.stderr), r.pc.n.to_string()]];
    for (p, e) in &r.theta {
        rows.push(vec!["theta".into(), f(*p), f(e.mean), f(e.stderr), e.n.to_string()]);
    }
    let table = csv(&["quantity", "p", "mean", "stderr", "samples"], rows);
    let payload = PcJson {
        schema: "sitepc/pc/v1",
        d: g.dim(),
        side: g.side(),
        seed,
        pc: r.pc.into(),
        theta: r.theta.iter().map(|(p, e)| ThetaJson { p: Sig17(*p), estimate: (*e).into() }).collect(),
    };
    Ok(Output::new(&payload, table, None))
}

/// Warn when `x` is at least half the box away along some axis.
fn wrap_warning(g: &TorusGeometry, x: &Point) -> Option<String> {
    (x.linf_norm() >= g.side() / 2)
        .then(|| format!("{x} is at least L/2 = {} from the origin along some axis; enlarge L", g.side() / 2))
}

#[derive(Serialize)]
struct TauJson {
    schema: &'static str,
    d: usize,
    #[serde(rename = "L")]
    side: u32,
    p: Sig17,
    x: String,
    variant: TwoPointVariant,
    seed: u64,
    #[serde(flatten)]
    estimate: EstimateJson,
    warning: Option<String>,
}

fn tau(a: &TauArgs) -> Result<Output, CliError> {
    let g = geometry(&a.geometry)?;
    let p = check_p(a.p)?;
    let x = point(&a.x, Some(g.dim()))?;
    if x.is_origin() {
        return usage("--x must differ from the origin");
    }
    let variant = match (a.variant, a.l) {
        (VariantArg::Plain, None) => TwoPointVariant::Plain,
        (VariantArg::Plain, Some(_)) => return usage("--l only applies to the chemical-distance variants"),
        (_, None) | (_, Some(0)) => return usage("the chemical-distance variants need --l >= 1"),
        (VariantArg::AtLeast, Some(l)) => TwoPointVariant::AtLeast(l),
        (VariantArg::AtMost, Some(l)) => TwoPointVariant::AtMost(l),
        (VariantArg::Exactly, Some(l)) => TwoPointVariant::Exactly(l),
    };
    let seed = seed(&a.run);
    let e = two_point(&g, p, &x, variant, a.run.samples, seed, Execution::default());
    let warning = wrap_warning(&g, &x);
    let label = serde_json::to_string(&variant).expect("plain enum").replace('"', "\"\"");
    let table = csv(
        &["x", "variant", "p", "mean", "stderr", "samples"],
        [vec![point_cell(&x), format!("\"{label}\""), f(p), f(e.mean), f(e.stderr), e.n.to_string()]],
    );
    let payload = TauJson {
        schema: "sitepc/tau/v1",
        d: g.dim(),
        side: g.side(),
        p: Sig17(p),
        x: x.to_string(),
        variant,
        seed,
        estimate: e.into(),
        warning: warning.clone(),
    };
    Ok(Output::new(&payload, table, warning))
}

#[derive(Serialize)]
struct DoubleJson {
    schema: &'static str,
    d: usize,
    #[serde(rename = "L")]
    side: u32,
    p: Sig17,
    x: String,
    seed: u64,
    #[serde(flatten)]
    estimate: EstimateJson,
    warning: Option<String>,
}

fn double(a: &DoubleArgs) -> Result<Output, CliError> {
    let g = geometry(&a.geometry)?;
    let p = check_p(a.p)?;
    let x = point(&a.x, Some(g.dim()))?;
    let seed = seed(&a.run);
    let e = double_connection(&g, p, &x, a.run.samples, seed, Execution::default());
    let warning = wrap_warning(&g, &x);
    let table = csv(
        &["x", "p", "mean", "stderr", "samples"],
        [vec![point_cell(&x), f(p), f(e.mean), f(e.stderr), e.n.to_string()]],
    );
    let payload = DoubleJson {
        schema: "sitepc/double/v1",
        d: g.dim(),
        side: g.side(),
        p: Sig17(p),
        x: x.to_string(),
        seed,
        estimate: e.into(),
        warning: warning.clone(),
    };
    Ok(Output::new(&payload, table, warning))
}

#[derive(Serialize)]
struct TriangleJson {
    schema: &'static str,
    d: usize,
    #[serde(rename = "L")]
    side: u32,
    p: Sig17,
    seed: u64,
    samples: u64,
    bases: u64,
    observations: u64,
    bullet: Sig17,
    bullet_circ: Sig17,
    bullet_bullet_circ: Sig17,
    bullet_at_origin: Sig17,
    bullet_circ_at_origin: Sig17,
    antipodal_tau: Sig17,
    floor: Sig17,
    warning: Option<String>,
}

fn triangle(a: &TriangleArgs) -> Result<Output, CliError> {
    let g = geometry(&a.geometry)?;
    size_guard(&g, MAX_TABLE_SITES)?;
    let p = check_p(a.p.unwrap_or(1.0 / (2.0 * g.dim() as f64)))?;
    if a.bases == 0 {
        return usage("--bases must be at least 1");
    }
    let seed = seed(&a.run);
    let table = two_point_table(&g, p, a.run.samples, a.bases, seed, Execution::default());
    let r = triangle_diagrams(&table, p, a.floor);
    let rows = [
        ("bullet", r.bullet),
        ("bullet_circ", r.bullet_circ),
        ("bullet_bullet_circ", r.bullet_bullet_circ),
        ("bullet_at_origin", r.bullet_at_origin),
        ("bullet_circ_at_origin", r.bullet_circ_at_origin),
        ("antipodal_tau", r.antipodal_tau),
    ]
    .map(|(k, v)| vec![k.to_string(), f(v)]);
    let text = csv(&["quantity", "value"], rows);
    let payload = TriangleJson {
        schema: "sitepc/triangle/v1",
        d: g.dim(),
        side: g.side(),
        p: Sig17(p),
        seed,
        samples: a.run.samples,
        bases: a.bases,
        observations: r.observations,
        bullet: Sig17(r.bullet),
        bullet_circ: Sig17(r.bullet_circ),
        bullet_bullet_circ: Sig17(r.bullet_bullet_circ),
        bullet_at_origin: Sig17(r.bullet_at_origin),
        bullet_circ_at_origin: Sig17(r.bullet_circ_at_origin),
        antipodal_tau: Sig17(r.antipodal_tau),
        floor: Sig17(a.floor),
        warning: r.warning.clone(),
    };
    Ok(Output::new(&payload, text, r.warning))
}

#[derive(Serialize)]
struct PiJson {
    schema: &'static str,
    n: usize,
    d: usize,
    #[serde(rename = "L")]
    side: u32,
    p: Sig17,
    radius: u32,
    seed: u64,
    estimate: Sig17,
    stderr: Sig17,
    samples: u64,
    low_norm_max_abs: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    by_shortest_cycle: Option<ByCycleJson>,
}

#[derive(Serialize)]
struct ByCycleJson {
    at_most_4: EstimateJson,
    exactly_6: EstimateJson,
    at_least_8: EstimateJson,
}

fn pi(a: &PiArgs) -> Result<Output, CliError> {
    let g = geometry(&a.geometry)?;
    let p = check_p(a.p.unwrap_or(1.0 / (2.0 * g.dim() as f64)))?;
    let seed = seed(&a.run);
    let r = pi_hat_estimate(a.n, &g, p, a.run.samples, seed, a.radius, Execution::default())?;
    let e = r.estimate;
    let mut rows = vec![vec!["total".to_string(), f(e.mean), f(e.stderr), e.n.to_string()]];
    if let Some(parts) = &r.by_cycle_length {
        for (name, part) in ["at_most_4", "exactly_6", "at_least_8"].iter().zip(parts) {
            rows.push(vec![name.to_string(), f(part.mean), f(part.stderr), part.n.to_string()]);
        }
    }
    let table = csv(&["part", "mean", "stderr", "samples"], rows);
    let payload = PiJson {
        schema: "sitepc/pi/v1",
        n: a.n,
        d: g.dim(),
        side: g.side(),
        p: Sig17(p),
        radius: a.radius,
        seed,
        estimate: Sig17(e.mean),
        stderr: Sig17(e.stderr),
        samples: e.n,
        low_norm_max_abs: r.low_norm_max_abs,
        by_shortest_cycle: r.by_cycle_length.map(|[a, b, c]| ByCycleJson {
            at_most_4: a.into(),
            exactly_6: b.into(),
            at_least_8: c.into(),
        }),
    };
    Ok(Output::new(&payload, table, None))
}

#[derive(Serialize)]
struct OzeJson {
    schema: &'static str,
    d: usize,
    #[serde(rename = "L")]
    side: u32,
    p: Sig17,
    radius: u32,
    seed: u64,
    chi: EstimateJson,
    pi: [EstimateJson; 3],
    pi_hat: Sig17,
    lhs: Sig17,
    rhs: Sig17,
    residual: Sig17,
}

fn oze(a: &OzeArgs) -> Result<Output, CliError> {
    let g = geometry(&a.geometry)?;
    let p = check_p(a.p.unwrap_or(0.8 / (2.0 * g.dim() as f64)))?;
    let seed = seed(&a.run);
    let r = oze_residual(&g, p, a.run.samples, seed, a.radius, Execution::default())?;
    let rows = [
        ("chi", r.chi.mean, r.chi.stderr),
        ("pi0", r.pi[0].mean, r.pi[0].stderr),
        ("pi1", r.pi[1].mean, r.pi[1].stderr),
        ("pi2", r.pi[2].mean, r.pi[2].stderr),
        ("pi_hat", r.pi_hat, f64::NAN),
        ("lhs", r.lhs, f64::NAN),
        ("rhs", r.rhs, f64::NAN),
        ("residual", r.residual, f64::NAN),
    ]
    .map(|(k, m, s)| vec![k.to_string(), f(m), f(s)]);
    let table = csv(&["quantity", "value", "stderr"], rows);
    let payload = OzeJson {
        schema: "sitepc/oze/v1",
        d: g.dim(),
        side: g.side(),
        p: Sig17(p),
        radius: a.radius,
        seed,
        chi: r.chi.into(),
        pi: r.pi.map(Into::into),
        pi_hat: Sig17(r.pi_hat),
        lhs: Sig17(r.lhs),
        rhs: Sig17(r.rhs),
        residual: Sig17(r.residual),
    };
    Ok(Output::new(&payload, table, None))
}
