use std::fmt::Write;

use serde_json::{json, Value};

use nca::bidet::{decompose_bideterminant, realize};
use nca::combinat::{enumerate_nct_restated, enumerate_snct, enumerate_ssyt, enumerate_syt_restated, Filling, Tableau};
use nca::exactmath::LinComb;
use nca::grass::{element_string, straighten_g2n, GrassElementJson, Grassmannian};
use nca::json::{rational_short, rational_string};
use nca::specht::{specht_poly, PolyBasis, Relations, SpechtElement};
use nca::tlalg::resolve_crossings;
use nca::verify::{run_suites, Bounds, Suite};
use nca::Rational;

use crate::render::{side_by_side, young};
use crate::{input, BijectArgs, Cli, CliError, CmdResult, DecomposeArgs, Direction, EnumerateArgs, Kind, Output, StraightenArgs, Target, VerifyArgs};

pub const ENUMERATE: &str = "standard and non-crossing tableaux are both indexed by Yamanouchi readings";
pub const BIJECT: &str = "a standard tableau and a non-crossing tableau correspond when they have the same reading";
pub const STRAIGHTEN: &str = "crossing Plücker monomials of G(2,n) rewrite by the three-term relation into non-crossing ones";
pub const VERIFY: &str = "exhaustive checks of the counting and basis statements";

pub fn decompose_provenance(t: Target) -> &'static str {
    match t {
        Target::SpechtNct => "Specht polynomials of non-crossing tableaux form a basis of the Specht module",
        Target::SpechtSyt => "Specht polynomials of standard tableaux form a basis of the Specht module",
        Target::Bitableau => "bideterminants of non-crossing bitableaux form a basis",
        Target::Tl => "resolving crossings of a two-row tableau gives its non-crossing coordinates",
    }
}

fn check_size(size: usize, cli: &Cli) -> Result<(), CliError> {
    let limit = cli.input_limit();
    if size > limit {
        return Err(CliError::new("out_of_range", format!("size {size} exceeds the bound {limit} (raise with --max-n or NCA_MAX_N)")));
    }
    Ok(())
}

fn diagrams(ts: &[Tableau]) -> String {
    let blocks: Vec<String> = ts.iter().map(young).collect();
    // a few per line keeps wide shapes readable
    blocks.chunks(6).map(side_by_side).collect::<Vec<_>>().join("\n")
}

pub fn enumerate(a: &EnumerateArgs, cli: &Cli) -> CmdResult {
    let lam = input::shape(&a.shape)?;
    check_size(lam.size(), cli)?;
    let weight = a.weight.as_deref().map(input::weight).transpose()?;
    let tableaux = match (a.kind, &weight) {
        (Kind::Syt, _) => enumerate_syt_restated(&lam),
        (Kind::Nct, _) => enumerate_nct_restated(&lam),
        (Kind::Ssyt, Some(w)) => enumerate_ssyt(&lam, w)?,
        (Kind::Snct, Some(w)) => enumerate_snct(&lam, w)?,
        (_, None) => return Err(CliError::new("bad_input", "--weight is required for ssyt and snct")),
    };
    let kind = format!("{:?}", a.kind).to_lowercase();
    let payload = json!({
        "shape": lam,
        "kind": kind,
        "weight": weight,
        "count": tableaux.len(),
        "tableaux": tableaux,
    });
    let pretty = format!("{} {kind} tableaux of shape {lam}\n\n{}", tableaux.len(), diagrams(&tableaux));
    Ok(Output { payload, pretty })
}

pub fn biject(a: &BijectArgs, cli: &Cli) -> CmdResult {
    let t = input::tableau(&a.input)?;
    check_size(t.size(), cli)?;
    let direction = match a.direction {
        Direction::Auto if t.is_standard() => Direction::SytToNct,
        Direction::Auto if t.is_nct() => Direction::NctToSyt,
        Direction::Auto => return Err(CliError::new("classification", format!("{t} is neither standard nor non-crossing"))),
        d => d,
    };
    let reading = t.reading()?;
    let (image, back) = match direction {
        Direction::SytToNct => {
            if !t.is_standard() {
                return Err(nca::Error::Classification { expected: "standard" }.into());
            }
            let image = reading.to_nct();
            let back = image.reading()?.to_syt();
            (image, back)
        }
        _ => {
            if !t.is_nct() {
                return Err(nca::Error::Classification { expected: "non-crossing" }.into());
            }
            let image = reading.to_syt();
            let back = image.reading()?.to_nct();
            (image, back)
        }
    };
    let name = if direction == Direction::SytToNct { "syt-to-nct" } else { "nct-to-syt" };
    let round_trip = a.round_trip.then(|| back.canonical() == t.canonical());
    if round_trip == Some(false) {
        return Err(CliError::new("round_trip", format!("{t} came back as {back}")));
    }
    let payload = json!({
        "direction": name,
        "input": t,
        "image": image,
        "reading": reading.labels(),
        "round_trip": round_trip,
    });
    let labels: Vec<String> = reading.labels().iter().map(u32::to_string).collect();
    let pretty = format!("{name}, reading {}\n\n{}", labels.join(""), side_by_side(&[young(&t), " -> ".into(), young(&image)]));
    Ok(Output { payload, pretty })
}

fn terms_text(terms: &LinComb<Tableau, Rational>) -> String {
    let mut out = String::new();
    for (t, c) in terms {
        let _ = writeln!(out, "{:>6}  {t}", rational_short(c));
    }
    out
}

pub fn decompose(a: &DecomposeArgs, cli: &Cli) -> CmdResult {
    if a.target == Target::Bitableau {
        let b = input::bitableau(&a.input)?;
        check_size(b.size(), cli)?;
        let d = decompose_bideterminant(&b)?;
        let x = b.fitting_matrix();
        let exact = realize(&d, &x)? == b.bideterminant(&x)?;
        let terms: Vec<Value> = d.iter().map(|(k, c)| json!({"coeff": rational_string(c), "bitableau": k})).collect();
        let mut pretty = format!("{b} =\n");
        for (k, c) in &d {
            let _ = writeln!(pretty, "{:>6}  {k}", rational_short(c));
        }
        return Ok(Output { payload: json!({"target": "bitableau", "input": b, "terms": terms, "exact": exact}), pretty });
    }
    let t = input::tableau(&a.input)?;
    check_size(t.size(), cli)?;
    if a.target == Target::Tl {
        let terms = resolve_crossings(&t)?;
        let exact = SpechtElement::from_terms(terms.clone()).realize()? == specht_poly(&t)?;
        let element = SpechtElement::from_terms(terms);
        let pretty = format!("{t} =\n{}", terms_text(element.terms()));
        return Ok(Output { payload: json!({"target": "tl", "input": t, "terms": element, "exact": exact}), pretty });
    }
    let f = Filling::canonical(&t.shape(), None)?;
    let basis = if a.target == Target::SpechtNct { PolyBasis::nct(&f)? } else { PolyBasis::syt(&f)? };
    let d = basis.decompose(&t)?;
    let full = nca::specht::lift(&t, &f)?;
    let rest = specht_poly(&full)? - d.realize()?;
    // outside rectangles the identity holds modulo the relations of the filling
    let exact = rest.is_zero();
    let modulo_relations = exact || Relations::new(&f)?.contains(&rest);
    let target = if a.target == Target::SpechtNct { "specht-nct" } else { "specht-syt" };
    let payload = json!({
        "target": target,
        "input": t,
        "completed": full,
        "filling": f,
        "terms": d,
        "exact": exact,
        "modulo_relations": modulo_relations,
    });
    let pretty = format!("{full} =\n{}", terms_text(d.terms()));
    Ok(Output { payload, pretty })
}

pub fn straighten(a: &StraightenArgs, cli: &Cli) -> CmdResult {
    let g = Grassmannian::new(a.m, a.n)?;
    check_size(a.n, cli)?;
    let mon = input::monomial(a.m, &a.monomial)?;
    g.check(&mon)?;
    if a.explore {
        let e = g.explore_rewrite(&mon, a.max_steps)?;
        let exact = g.expand_element(&e.result)? == g.expand(&mon)?;
        let steps: Vec<Value> = e
            .steps
            .iter()
            .map(|s| {
                let rep: Vec<Value> = s.replacement.iter().map(|(k, c)| json!({"coeff": rational_string(c), "monomial": k})).collect();
                json!({"monomial": s.monomial, "pair": s.pair, "replacement": rep})
            })
            .collect();
        let mut pretty = String::new();
        for (i, s) in e.steps.iter().enumerate() {
            let rep: LinComb<_, Rational> = s.replacement.iter().cloned().collect();
            let _ = writeln!(pretty, "step {}: in {} replace {} = {}", i + 1, s.monomial, s.pair, element_string(&rep));
        }
        let _ = writeln!(pretty, "{} = {}{}", mon, element_string(&e.result), if e.finished { "" } else { "  (unfinished)" });
        let payload = json!({
            "m": a.m,
            "n": a.n,
            "input": mon,
            "result": GrassElementJson(&e.result),
            "display": element_string(&e.result),
            "finished": e.finished,
            "steps": steps,
            "exact": exact,
        });
        return Ok(Output { payload, pretty });
    }
    if a.m != 2 {
        return Err(CliError::new(
            "unsupported",
            format!("straightening is implemented for m = 2; use --explore for pairwise rewriting with m = {}", a.m),
        ));
    }
    let s = straighten_g2n(&mon)?;
    let exact = g.expand_element(&s)? == g.expand(&mon)?;
    let display = element_string(&s);
    let payload = json!({
        "m": a.m,
        "n": a.n,
        "input": mon,
        "result": GrassElementJson(&s),
        "display": display,
        "exact": exact,
    });
    Ok(Output { payload, pretty: format!("{mon} = {display}\n") })
}

pub fn verify(a: &VerifyArgs, cli: &Cli) -> CmdResult {
    let suites: Vec<Suite> = if a.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        a.suite.split(',').map(|s| s.trim().parse()).collect::<Result<_, _>>()?
    };
    let bounds = cli.max_n.map_or_else(Bounds::desk, Bounds::with_max_n);
    let reports = run_suites(&suites, &bounds);
    let passed = reports.iter().all(|r| r.passed);
    let mut pretty = String::new();
    for r in &reports {
        let _ = writeln!(pretty, "{:<13} {}  {:>6} checks  {:>9.1} ms  {}", r.suite.name(), if r.passed { "pass" } else { "FAIL" }, r.checks, r.elapsed_ms, r.bounds);
        for f in &r.failures {
            let _ = writeln!(pretty, "    {f}");
        }
    }
    let payload = json!({"bounds": bounds, "passed": passed, "suites": reports});
    if !passed {
        let failed: Vec<&str> = reports.iter().filter(|r| !r.passed).map(|r| r.suite.name()).collect();
        return Err(CliError { code: "verification_failed", message: format!("failed suites: {}", failed.join(", ")), payload: Some(payload) });
    }
    Ok(Output { payload, pretty })
}
