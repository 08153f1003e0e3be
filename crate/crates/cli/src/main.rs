use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use newtonpoly::curve::{
    briancon_speder_polygons, dual_degree, invariants_from_polygon, jacobian_polygon_direct,
    merle_polygon, milnor_number, semigroup_from_polygon, validate_semigroup, InvariantReport,
    JacobianPolygon, DEFAULT_SEED,
};
use newtonpoly::field::describe_tower;
use newtonpoly::par::Exec;
use newtonpoly::polyhedra::{mixed_covolume, NewtonPolyhedron};
use newtonpoly::product::product;
use newtonpoly::puiseux::{puiseux_expand_with, PuiseuxOptions, DEFAULT_TOWER_BOUND};
use newtonpoly::render::{render_ascii, render_svg};
use newtonpoly::series::TruncatedSeries;
use newtonpoly::text::{
    parse_polygon, parse_semigroup, parse_ypoly, print_declarations, print_semigroup, print_ypoly,
};
use newtonpoly::verify::{run_all, run_suite, Outcome, SUITES};
use newtonpoly::ypoly::{
    intersection_number, newton_polygon_of, shifted_resultant, sylvester_resultant,
};
use newtonpoly::{Error, NewtonPolygon, Result};

/// Newton polygons, Newton-Puiseux expansions and jacobian polygons of plane
/// curves.
#[derive(Parser)]
#[command(name = "newtonpoly", version)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for every randomized procedure.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Polygon arithmetic.
    #[command(subcommand)]
    Polygon(PolygonCmd),
    /// Newton polyhedra of monomial ideals.
    #[command(subcommand)]
    Polyhedron(PolyhedronCmd),
    /// Polynomials in y over truncated series in x.
    #[command(subcommand)]
    Series(SeriesCmd),
    /// Newton-Puiseux expansion.
    #[command(subcommand)]
    Puiseux(PuiseuxCmd),
    /// Invariants of plane curve singularities.
    #[command(subcommand)]
    Curve(CurveCmd),
    /// Run verification suites.
    Verify {
        /// `all` or one suite name.
        suite: String,
        /// Run sequentially.
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Subcommand)]
enum PolygonCmd {
    /// Minkowski sum of the polygons.
    Sum { polygons: Vec<String> },
    /// Product `*` of the polygons.
    Product { polygons: Vec<String> },
    /// Canonical decomposition into elementary polygons.
    Decompose { polygon: String },
    /// Whether the region of the first lies inside the region of the second.
    Dominates { first: String, second: String },
    /// Draw polygons; ASCII takes exactly one.
    Render {
        polygons: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Svg,
}

#[derive(Subcommand)]
enum PolyhedronCmd {
    /// Covolume of a polyhedron given as JSON.
    Covolume { polyhedron: String },
    /// Mixed covolume with multi-index `--alpha`.
    Mixed {
        polyhedra: Vec<String>,
        /// Comma-separated multi-index; defaults to all ones.
        #[arg(long, value_delimiter = ',')]
        alpha: Vec<usize>,
    },
    /// Multiplicity `d!·covolume` of the monomial ideal.
    Multiplicity { polyhedron: String },
}

#[derive(Subcommand)]
enum SeriesCmd {
    /// Newton polygon of a polynomial.
    Polygon { f: String },
    /// Resultant eliminating `y`.
    Resultant { f: String, g: String },
    /// `Res_U(P1(T+U), P2(U))`, printed with `y` standing for `T`.
    ShiftedResultant { f: String, g: String },
    /// Intersection multiplicity at the origin.
    Intersect { f: String, g: String },
}

#[derive(Subcommand)]
enum PuiseuxCmd {
    /// Expand every root of `f` as a Puiseux series.
    Expand {
        f: String,
        #[command(flatten)]
        opts: ExpandOpts,
    },
}

#[derive(Args)]
struct ExpandOpts {
    /// Precision in `t` of every series.
    #[arg(long, env = "NEWTONPOLY_PRECISION")]
    precision: Option<u32>,
    /// Largest degree of a field extension to build.
    #[arg(long, default_value_t = DEFAULT_TOWER_BOUND)]
    max_tower_degree: usize,
    /// Only roots through the origin.
    #[arg(long)]
    origin_only: bool,
}

#[derive(Subcommand)]
enum CurveCmd {
    /// Jacobian polygon of a branch from its semigroup, e.g. `<4,6,13>`.
    Merle {
        semigroup: String,
        #[arg(long)]
        report: bool,
    },
    /// Semigroup of a branch from its jacobian polygon.
    Invert { polygon: String },
    /// Jacobian polygon of a reduced curve computed from its polar.
    Jacobian {
        f: String,
        #[arg(long)]
        report: bool,
    },
    /// Invariant report from a polynomial, a semigroup or a jacobian polygon.
    Invariants { input: String },
    /// Degree of the dual of a degree `d` hypersurface in `P^n` with the
    /// given `(μ^(n), μ^(n-1))` singularities.
    DualDegree {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        n: u32,
        /// Repeatable `MU_N,MU_N1` pair.
        #[arg(long = "sing", value_parser = parse_pair)]
        sing: Vec<(u64, u64)>,
    },
    /// Jacobian polygons of the special and generic Briançon-Speder curves.
    BsExample {
        #[arg(long, default_value_t = 4)]
        beta: u64,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
}

fn parse_pair(s: &str) -> std::result::Result<(u64, u64), String> {
    let (a, b) = s.split_once(',').ok_or("expected MU_N,MU_N1")?;
    let p = |t: &str| t.trim().parse::<u64>().map_err(|e| e.to_string());
    Ok((p(a)?, p(b)?))
}

/// Result of a command: text for humans, JSON for `--json`.
struct Output {
    text: String,
    json: Value,
}

impl Output {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Output {
            text: text.into(),
            json,
        }
    }
}

fn polygon_json(p: &NewtonPolygon) -> Value {
    serde_json::from_str(&p.to_json()).expect("polygon JSON")
}

fn polygons(args: &[String]) -> Result<Vec<NewtonPolygon>> {
    if args.is_empty() {
        return Err(Error::Parse("expected at least one polygon".into()));
    }
    args.iter().map(|s| parse_polygon(s)).collect()
}

fn polygon_out(p: &NewtonPolygon) -> Output {
    Output::new(p.to_string(), polygon_json(p))
}

fn jacobian_from_polygon(p: &NewtonPolygon) -> Result<JacobianPolygon> {
    let edges = p.canonical_decomposition()?;
    Ok(JacobianPolygon::from_pairs(
        edges
            .iter()
            .map(|e| (e.length().finite().unwrap(), e.height().finite().unwrap()))
            .collect(),
    ))
}

fn jacobian_json(j: &JacobianPolygon) -> Value {
    json!({ "pairs": j.pairs(), "polygon": polygon_json(&j.view()) })
}

fn report_text(r: &InvariantReport) -> String {
    [
        format!("mu_n             {}", r.mu_n),
        format!("mu_n1            {}", r.mu_n1),
        format!("class_diminution {}", r.class_diminution),
        format!("theta1           {}", r.theta1),
        format!("theta2           {}", r.theta2),
        format!("determinacy      {}", r.determinacy),
        format!("2*delta in       ({}, {}]", r.delta_lower, r.delta_upper),
        format!("is_Ak            {}", r.is_ak),
    ]
    .join("\n")
}

fn jacobian_out(j: &JacobianPolygon, report: bool) -> Result<Output> {
    let pairs: Vec<String> = j
        .pairs()
        .iter()
        .map(|(e, m)| format!("({e},{m})"))
        .collect();
    let mut text = format!("{}\npairs {}", j.view(), pairs.join(" "));
    let mut value = jacobian_json(j);
    if report {
        let r = invariants_from_polygon(j)?;
        text = format!("{text}\n{}", report_text(&r));
        value["report"] = r.to_json();
    }
    Ok(Output::new(text, value))
}

fn series_text(s: &TruncatedSeries) -> String {
    format!("{}{}", print_declarations(&s.tower()), s.display_in("x"))
}

fn outcome_line(o: &Outcome) -> String {
    format!(
        "{:<20} {} ({} checks, {:.2} s)",
        o.suite,
        if o.passed() { "PASS" } else { "FAIL" },
        o.cases,
        o.elapsed.as_secs_f64()
    )
}

fn outcome_json(o: &Outcome) -> Value {
    json!({
        "suite": o.suite,
        "pass": o.passed(),
        "checks": o.cases,
        "failures": o.failures,
        "seconds": o.elapsed.as_secs_f64(),
    })
}

fn run(cli: &Cli) -> Result<(Output, bool)> {
    let seed = cli.seed;
    let out = match &cli.command {
        Command::Polygon(cmd) => match cmd {
            PolygonCmd::Sum { polygons: ps } => {
                let ps = polygons(ps)?;
                polygon_out(&ps.iter().fold(NewtonPolygon::empty(), |a, p| a.sum(p)))
            }
            PolygonCmd::Product { polygons: ps } => {
                let ps = polygons(ps)?;
                let mut acc = ps[0].clone();
                for p in &ps[1..] {
                    acc = product(&acc, p)?;
                }
                polygon_out(&acc)
            }
            PolygonCmd::Decompose { polygon } => {
                let edges = parse_polygon(polygon)?.canonical_decomposition()?;
                let text: Vec<String> = edges.iter().map(ToString::to_string).collect();
                let value: Vec<Value> = edges
                    .iter()
                    .map(|e| json!({ "l": e.length(), "h": e.height() }))
                    .collect();
                Output::new(text.join("\n"), json!({ "edges": value }))
            }
            PolygonCmd::Dominates { first, second } => {
                let d = parse_polygon(first)?.dominates(&parse_polygon(second)?);
                Output::new(d.to_string(), json!({ "dominates": d }))
            }
            PolygonCmd::Render {
                polygons: ps,
                format,
            } => {
                let ps = polygons(ps)?;
                let s = match format {
                    Format::Ascii if ps.len() == 1 => render_ascii(&ps[0])?,
                    Format::Ascii => return Err(Error::Parse("ascii renders one polygon".into())),
                    Format::Svg => render_svg(&ps)?,
                };
                Output::new(s.trim_end(), json!({ "render": s }))
            }
        },
        Command::Polyhedron(cmd) => match cmd {
            PolyhedronCmd::Covolume { polyhedron } => {
                let v = NewtonPolyhedron::from_json(polyhedron)?.covolume()?;
                Output::new(v.to_string(), json!({ "covolume": v.to_string() }))
            }
            PolyhedronCmd::Mixed { polyhedra, alpha } => {
                let ns: Vec<NewtonPolyhedron> = polyhedra
                    .iter()
                    .map(|s| NewtonPolyhedron::from_json(s))
                    .collect::<Result<_>>()?;
                let alpha = if alpha.is_empty() {
                    vec![1; ns.len()]
                } else {
                    alpha.clone()
                };
                let v = mixed_covolume(&ns, &alpha)?;
                Output::new(v.to_string(), json!({ "mixed_covolume": v.to_string() }))
            }
            PolyhedronCmd::Multiplicity { polyhedron } => {
                let e = NewtonPolyhedron::from_json(polyhedron)?.monomial_multiplicity()?;
                Output::new(e.to_string(), json!({ "multiplicity": e }))
            }
        },
        Command::Series(cmd) => match cmd {
            SeriesCmd::Polygon { f } => polygon_out(&newton_polygon_of(&parse_ypoly(f)?)?),
            SeriesCmd::Resultant { f, g } => {
                let r = sylvester_resultant(&parse_ypoly(f)?, &parse_ypoly(g)?)?;
                let text = series_text(&r);
                Output::new(
                    text.clone(),
                    json!({ "resultant": text, "order": r.order() }),
                )
            }
            SeriesCmd::ShiftedResultant { f, g } => {
                let s = shifted_resultant(&parse_ypoly(f)?, &parse_ypoly(g)?)?;
                let text = print_ypoly(&s);
                let n = newton_polygon_of(&s).ok();
                Output::new(
                    text.clone(),
                    json!({ "shifted_resultant": text, "polygon": n.as_ref().map(polygon_json) }),
                )
            }
            SeriesCmd::Intersect { f, g } => {
                let i = intersection_number(&parse_ypoly(f)?, &parse_ypoly(g)?)?;
                Output::new(i.to_string(), json!({ "intersection_number": i }))
            }
        },
        Command::Puiseux(PuiseuxCmd::Expand { f, opts }) => {
            let options = PuiseuxOptions {
                t_precision: opts.precision,
                max_tower_degree: opts.max_tower_degree,
                origin_only: opts.origin_only,
            };
            let bs = puiseux_expand_with(&parse_ypoly(f)?, &options)?;
            let text: Vec<String> = bs.iter().map(ToString::to_string).collect();
            let value: Vec<Value> = bs
                .iter()
                .map(|b| {
                    json!({
                        "branch": b.to_string(),
                        "e": b.e,
                        "conj": b.conj,
                        "valuation": b.valuation().map(|v| v.to_string()),
                        "field": describe_tower(&b.tower),
                    })
                })
                .collect();
            Output::new(text.join("\n"), json!({ "branches": value }))
        }
        Command::Curve(cmd) => match cmd {
            CurveCmd::Merle { semigroup, report } => {
                let s = validate_semigroup(&parse_semigroup(semigroup)?)?;
                let j = merle_polygon(&s);
                let mut o = jacobian_out(&j, *report)?;
                o.text = format!("{}\nmu {}", o.text, j.length());
                o.json["mu"] = json!(j.length());
                o
            }
            CurveCmd::Invert { polygon } => {
                let s = semigroup_from_polygon(&jacobian_from_polygon(&parse_polygon(polygon)?)?)?;
                let g = print_semigroup(s.generators());
                Output::new(
                    g.clone(),
                    json!({ "semigroup": g, "generators": s.generators() }),
                )
            }
            CurveCmd::Jacobian { f, report } => {
                let j = jacobian_polygon_direct(&parse_ypoly(f)?, seed)?;
                jacobian_out(&j, *report)?
            }
            CurveCmd::Invariants { input } => {
                let s = input.trim_start();
                let j = if s.starts_with('<') {
                    merle_polygon(&validate_semigroup(&parse_semigroup(s)?)?)
                } else if s.starts_with('{') || s.starts_with('(') {
                    jacobian_from_polygon(&parse_polygon(s)?)?
                } else {
                    let f = parse_ypoly(s)?;
                    let j = jacobian_polygon_direct(&f, seed)?;
                    let mu = milnor_number(&f, seed)?;
                    if mu != j.length() {
                        return Err(Error::GenericityFailure(
                            mu.to_string(),
                            j.length().to_string(),
                        ));
                    }
                    j
                };
                jacobian_out(&j, true)?
            }
            CurveCmd::DualDegree { d, n, sing } => {
                let v = dual_degree(*d, *n, sing)?;
                Output::new(v.to_string(), json!({ "dual_degree": v }))
            }
            CurveCmd::BsExample { beta, format } => {
                let (special, generic) = briancon_speder_polygons(*beta)?;
                let (sv, gv) = (special.view(), generic.view());
                let dominates = sv.dominates(&gv);
                let text = match format {
                    Some(Format::Svg) => render_svg(&[sv.clone(), gv.clone()])?.trim_end().to_string(),
                    Some(Format::Ascii) => {
                        format!("special\n{}generic\n{}", render_ascii(&sv)?, render_ascii(&gv)?)
                            .trim_end()
                            .to_string()
                    }
                    None => format!(
                        "special {} (length {}, height {})\ngeneric {} (length {}, height {})\nspecial dominates generic: {dominates}",
                        sv,
                        special.length(),
                        special.height(),
                        gv,
                        generic.length(),
                        generic.height()
                    ),
                };
                Output::new(
                    text,
                    json!({
                        "special": jacobian_json(&special),
                        "generic": jacobian_json(&generic),
                        "special_dominates_generic": dominates,
                    }),
                )
            }
        },
        Command::Verify { suite, sequential } => {
            let exec = if *sequential {
                Exec::Sequential
            } else {
                Exec::Parallel
            };
            let outcomes = if suite == "all" {
                run_all(seed, exec)
            } else {
                vec![run_suite(suite, seed, exec).map_err(|_| {
                    Error::Parse(format!(
                        "unknown suite '{suite}'; expected all or one of {}",
                        SUITES.join(", ")
                    ))
                })?]
            };
            let ok = outcomes.iter().all(Outcome::passed);
            let mut lines: Vec<String> = Vec::new();
            for o in &outcomes {
                lines.push(outcome_line(o));
                lines.extend(o.failures.iter().map(|f| format!("    {f}")));
            }
            let value: Vec<Value> = outcomes.iter().map(outcome_json).collect();
            return Ok((
                Output::new(lines.join("\n"), json!({ "seed": seed, "suites": value })),
                ok,
            ));
        }
    };
    Ok((out, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, ok)) => {
            let text = if cli.json {
                serde_json::to_string_pretty(&out.json).expect("JSON output")
            } else {
                out.text
            };
            // A closed pipe downstream is not an error of ours.
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {}: {e}", e.kind());
            ExitCode::from(if e.is_parse() { 2 } else { 1 })
        }
    }
}
