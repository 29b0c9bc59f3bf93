//! Executing a parsed session and rendering its reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::adjunction::{
    center_bijection_check, enumerate_centers, purity_transfer_check, restrict,
    restriction_theorem_check, seed_ideal, tau_outside, tau_smallest_ideal, tau_triple,
    CenterMode, TauOptions, TauResult, DEFAULT_EMAX,
};
use crate::algebra::{Counters, Poly};
use crate::error::{Error, Result};
use crate::frobenius::{bracket_power, frobenius_root, trace_eval};
use crate::groebner::Ideal;
use crate::maps::rational::integral_level;
use crate::maps::{
    codim1_colon_check, divisor_of_map, extract_generator, fedder_colon, is_fpure,
    map_of_divisor, MapDatum, PurityVerdict, DEFAULT_NMAX,
};
use crate::oracles::{
    candidate_center_bruteforce, colon_agrees, colon_by_linear_algebra,
    monomial_tau_formula, multinomial_fpure_check, multinomial_top_coefficient,
    tau_by_direct_sum,
};

use super::cache::DiskCache;
use super::parse::{Command, Op, Session, Target, Verb};

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub cache: bool,
    /// Overrides `$FCALC_CACHE_DIR`.
    pub cache_dir: Option<PathBuf>,
    pub budget: Option<u64>,
    pub emax: u32,
    pub nmax: u32,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            cache: true,
            cache_dir: None,
            budget: None,
            emax: DEFAULT_EMAX,
            nmax: DEFAULT_NMAX,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ErrorReport {
    pub code: String,
    pub message: String,
}

/// Wall time and Gröbner-basis activity of one command. Everything that
/// can differ between otherwise identical runs (the disk cache changes how
/// many bases are recomputed) lives here.
#[derive(Clone, Debug, Serialize)]
pub struct Timings {
    pub millis: f64,
    pub gb_computed: u64,
    pub cache_hits: u64,
    pub reductions: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Budget {
    pub limit: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CommandReport {
    pub line: usize,
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub result: Value,
    pub certificates: Value,
    pub timings: Timings,
    pub budget: Budget,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorReport>,
    #[serde(skip)]
    refusal: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SessionReport {
    pub session: Option<String>,
    pub reports: Vec<CommandReport>,
}

impl SessionReport {
    /// 0 when every command succeeded, 1 when the worst failure is a
    /// mathematical refusal, 2 for resource and other errors.
    pub fn exit_code(&self) -> i32 {
        self.reports
            .iter()
            .filter(|r| r.error.is_some())
            .map(|r| if r.refusal { 1 } else { 2 })
            .max()
            .unwrap_or(0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Human-readable blocks, one per command.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            let _ = writeln!(out, "[line {}] {}", r.line, r.command);
            match &r.error {
                Some(e) => {
                    let _ = writeln!(out, "  error[{}]: {}", e.code, e.message);
                }
                None => {
                    let _ = writeln!(out, "  {}", render(&r.result, 2));
                    if let Value::Object(map) = &r.certificates {
                        for (k, v) in map {
                            let _ = writeln!(out, "  {k}: {}", render(v, 4));
                        }
                    }
                }
            }
        }
        out
    }
}

fn render(v: &Value, indent: usize) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|i| !i.is_object()) => {
            let parts: Vec<String> = items.iter().map(|i| render(i, indent)).collect();
            format!("[{}]", parts.join(", "))
        }
        Value::Array(items) => {
            let pad = " ".repeat(indent);
            items
                .iter()
                .map(|i| format!("\n{pad}{}", render(i, indent + 2)))
                .collect()
        }
        Value::Object(map) => {
            let parts: Vec<String> = map.iter().map(|(k, v)| format!("{k}={}", render(v, indent))).collect();
            parts.join(" ")
        }
        other => other.to_string(),
    }
}

fn ideal_text(i: &Ideal) -> Result<String> {
    i.canonical_string()
}

fn map_text(m: &MapDatum) -> Result<String> {
    Ok(format!(
        "level {} mult {} modulo {}",
        m.level(),
        m.multiplier(),
        ideal_text(m.modulus())?
    ))
}

fn poly_list(polys: &[Poly]) -> Value {
    Value::from(polys.iter().map(|p| p.to_string()).collect::<Vec<_>>())
}

fn tau_certificates(t: &TauResult) -> Value {
    let mut c = json!({
        "minimality": t.minimality_certificate,
        "levels_used": t.levels_used,
        "iterations": t.iterations,
        "stable": t.stable,
        "seeds": poly_list(&t.seeds),
    });
    if let Some(sc) = t.seed_check {
        c["seed_check"] = json!(sc);
    }
    c
}

struct Outcome {
    inputs: Vec<(&'static str, String)>,
    result: Value,
    certificates: Value,
}

impl Outcome {
    fn new(inputs: Vec<(&'static str, String)>, result: Value) -> Outcome {
        Outcome {
            inputs,
            result,
            certificates: json!({}),
        }
    }

    fn with(mut self, certificates: Value) -> Outcome {
        self.certificates = certificates;
        self
    }
}

fn target_inputs(t: &Target) -> Result<Vec<(&'static str, String)>> {
    Ok(match t {
        Target::Map(m) => vec![("map", map_text(m)?)],
        Target::Triple(s) => vec![
            ("map", map_text(&s.datum)?),
            ("a", s.g.to_string()),
            ("t", s.t.to_string()),
        ],
    })
}

fn execute(op: &Op, opts: &RunOptions) -> Result<Outcome> {
    let tau_opts = TauOptions {
        emax: opts.emax,
        ..TauOptions::default()
    };
    Ok(match op {
        Op::FrobPower { ideal, q } => Outcome::new(
            vec![("ideal", ideal_text(ideal)?), ("q", q.to_string())],
            ideal_text(&bracket_power(ideal, *q)?)?.into(),
        ),
        Op::FrobRoot { ideal, q } => Outcome::new(
            vec![("ideal", ideal_text(ideal)?), ("q", q.to_string())],
            ideal_text(&frobenius_root(ideal, *q)?)?.into(),
        ),
        Op::Trace { f, e } => Outcome::new(
            vec![("f", f.to_string()), ("e", e.to_string())],
            trace_eval(f, *e)?.to_string().into(),
        ),
        Op::Fedder { ideal, e } => Outcome::new(
            vec![("ideal", ideal_text(ideal)?), ("e", e.to_string())],
            ideal_text(&fedder_colon(ideal, *e)?)?.into(),
        ),
        Op::FPure { ideal, e, at } => {
            let mut inputs = vec![("ideal", ideal_text(ideal)?), ("e", e.to_string())];
            if let Some(m) = at {
                inputs.push(("at", ideal_text(m)?));
            }
            Outcome::new(inputs, is_fpure(ideal, *e, at.as_ref())?.into())
        }
        Op::ExtractGen { ideal, e } => Outcome::new(
            vec![("ideal", ideal_text(ideal)?), ("e", e.to_string())],
            extract_generator(ideal, *e)?.to_string().into(),
        ),
        Op::Compose { map, n } => Outcome::new(
            vec![("map", map_text(map)?), ("n", n.to_string())],
            map_text(&map.compose(*n)?)?.into(),
        ),
        Op::Compat { map, ideal } => {
            let c = map.compatibility(ideal)?;
            Outcome::new(
                vec![("map", map_text(map)?), ("ideal", ideal_text(ideal)?)],
                c.compatible.into(),
            )
            .with(json!({ "radical_verified": c.radical_verified }))
        }
        Op::Image { map, ideal } => {
            let mut inputs = vec![("map", map_text(map)?)];
            let image = match ideal {
                Some(j) => {
                    inputs.push(("ideal", ideal_text(j)?));
                    map.phi_image(j)?
                }
                None => map.image_ideal()?,
            };
            Outcome::new(inputs, ideal_text(&image)?.into())
        }
        Op::SurjectiveAt { map, prime } => Outcome::new(
            vec![("map", map_text(map)?), ("prime", ideal_text(prime)?)],
            map.is_surjective_at(prime)?.into(),
        ),
        Op::Divisor { map, attested } => {
            let d = divisor_of_map(map, attested)?;
            let comps: Vec<Value> = d
                .components()
                .iter()
                .map(|(h, c)| json!({ "component": h.to_string(), "coefficient": c.to_string() }))
                .collect();
            Outcome::new(vec![("map", map_text(map)?)], d.to_string().into())
                .with(json!({ "components": comps }))
        }
        Op::MapOfDivisor { divisor } => {
            let ring = divisor
                .components()
                .first()
                .map(|(h, _)| h.ring().clone())
                .ok_or_else(|| Error::InvalidArgument("empty divisor".into()))?;
            Outcome::new(
                vec![("divisor", divisor.to_string())],
                map_text(&map_of_divisor(divisor, &ring)?)?.into(),
            )
        }
        Op::Restrict { map, q } => Outcome::new(
            vec![("map", map_text(map)?), ("q", ideal_text(q)?)],
            map_text(&restrict(map, q)?)?.into(),
        ),
        Op::PurityTransfer { map, q, m } => Outcome::new(
            vec![
                ("map", map_text(map)?),
                ("q", ideal_text(q)?),
                ("m", ideal_text(m)?),
            ],
            purity_transfer_check(map, q, m)?.into(),
        ),
        Op::CenterBijection { map, q, candidates } => {
            let rep = center_bijection_check(map, q, candidates)?;
            Outcome::new(
                vec![("map", map_text(map)?), ("q", ideal_text(q)?)],
                rep.violations.is_empty().into(),
            )
            .with(json!(rep))
        }
        Op::SharpPure { triple, m } => {
            let verdict = triple.sharp_purity_at(m, opts.nmax)?;
            let mut inputs = target_inputs(&Target::Triple(triple.clone()))?;
            inputs.push(("m", ideal_text(m)?));
            let (pure, cert) = match verdict {
                PurityVerdict::Pure { composite } => (true, json!({ "composite": composite })),
                PurityVerdict::NotDetected { nmax } => {
                    (false, json!({ "not_detected_up_to": nmax }))
                }
            };
            Outcome::new(inputs, pure.into()).with(cert)
        }
        Op::TestIdeal { target, seeds } => {
            let t = match target {
                Target::Map(m) => tau_smallest_ideal(m, seeds.as_ref(), &tau_opts)?,
                Target::Triple(s) => tau_triple(s, seeds.as_ref(), &tau_opts)?,
            };
            Outcome::new(target_inputs(target)?, ideal_text(&t.ideal)?.into())
                .with(tau_certificates(&t))
        }
        Op::TestIdealOutside { triple, q, seed } => {
            let t = tau_outside(triple, q, seed.as_ref(), &tau_opts)?;
            let mut inputs = target_inputs(&Target::Triple(triple.clone()))?;
            inputs.push(("q", ideal_text(q)?));
            Outcome::new(inputs, ideal_text(&t.ideal)?.into()).with(tau_certificates(&t))
        }
        Op::RestrictionCheck { triple, q, seed } => {
            let c = restriction_theorem_check(triple, q, seed.as_ref(), &tau_opts)?;
            let mut inputs = target_inputs(&Target::Triple(triple.clone()))?;
            inputs.push(("q", ideal_text(q)?));
            Outcome::new(inputs, c.holds.into()).with(json!({
                "outside_plus_q": ideal_text(&c.outside_plus_q)?,
                "restricted": ideal_text(&c.restricted)?,
                "seed": c.seed.to_string(),
            }))
        }
        Op::Enumerate { map, mode } => {
            let reports = enumerate_centers(map, mode)?;
            let mut centers = Vec::new();
            let mut details = Vec::new();
            for r in &reports {
                let text = ideal_text(&r.prime)?;
                if r.is_center() {
                    centers.push(text.clone());
                }
                details.push(json!({
                    "prime": text,
                    "compatible": r.compatible,
                    "pure_at_generic_point": r.pure_at_generic_point,
                }));
            }
            let mode_text = match mode {
                CenterMode::Auto { .. } => "auto",
                CenterMode::Candidates(_) => "candidates",
            };
            Outcome::new(
                vec![("map", map_text(map)?), ("mode", mode_text.to_string())],
                centers.into(),
            )
            .with(json!({ "reports": details }))
        }
        Op::Codim1 { ideal, h, e } => Outcome::new(
            vec![
                ("ideal", ideal_text(ideal)?),
                ("h", h.to_string()),
                ("e", e.to_string()),
            ],
            codim1_colon_check(ideal, h, *e)?.into(),
        ),
        Op::ColonLa { i, j, bound } => {
            let colon = i.colon(j)?;
            let la = colon_by_linear_algebra(i, j, *bound)?;
            let dims: Vec<usize> = (0..=*bound).map(|d| la.dimension(d)).collect();
            Outcome::new(
                vec![
                    ("i", ideal_text(i)?),
                    ("j", ideal_text(j)?),
                    ("bound", bound.to_string()),
                ],
                colon_agrees(i, j, &colon, *bound)?.into(),
            )
            .with(json!({ "colon": ideal_text(&colon)?, "dimensions": dims }))
        }
        Op::DirectSum { target, seeds } => {
            let (datum, g, t, default_seeds) = match target {
                Target::Map(m) => (
                    m.clone(),
                    Poly::one(m.ring()),
                    crate::maps::Rational::from_integer(0),
                    seed_ideal(m)?.gens().to_vec(),
                ),
                Target::Triple(s) => {
                    let d = &s.datum;
                    let (level, _) = integral_level(&s.t, d.p(), d.level(), opts.emax)?;
                    (
                        d.compose(level / d.level())?,
                        s.g.clone(),
                        s.t,
                        crate::adjunction::default_triple_seeds(s)?,
                    )
                }
            };
            let seeds = seeds.as_ref().map_or(default_seeds, |s| s.gens().to_vec());
            let sum = tau_by_direct_sum(&datum, &seeds, &g, &t, opts.nmax)?;
            Outcome::new(target_inputs(target)?, ideal_text(&sum.ideal)?.into()).with(json!({
                "stabilized": sum.stabilized,
                "terms": sum.terms,
                "seeds": poly_list(&seeds),
            }))
        }
        Op::BruteCenters {
            map,
            family,
            attested,
        } => {
            let found = candidate_center_bruteforce(map, family, attested)?;
            let texts = found.iter().map(ideal_text).collect::<Result<Vec<_>>>()?;
            Outcome::new(vec![("map", map_text(map)?)], texts.into())
        }
        Op::Multinomial { h } => Outcome::new(
            vec![("h", h.to_string())],
            multinomial_fpure_check(h)?.into(),
        )
        .with(json!({ "coefficient": multinomial_top_coefficient(h)? })),
        Op::MonomialTau { g, t } => Outcome::new(
            vec![("g", g.to_string()), ("t", t.to_string())],
            ideal_text(&monomial_tau_formula(g, t)?)?.into(),
        ),
    })
}

fn delta(after: Counters, before: Counters) -> Counters {
    Counters {
        reductions: after.reductions - before.reductions,
        gb_runs: after.gb_runs - before.gb_runs,
        cache_hits: after.cache_hits - before.cache_hits,
    }
}

fn run_command(session: &Session, cmd: &Command, opts: &RunOptions) -> CommandReport {
    let ctx = session.ring.context();
    let before = ctx.counters();
    let start = Instant::now();
    let outcome = execute(&cmd.op, opts);
    let millis = start.elapsed().as_secs_f64() * 1e3;
    let used = delta(ctx.counters(), before);
    let verb = match cmd.verb {
        Verb::Check => "check",
        Verb::Compute => "compute",
        Verb::Verify => "verify",
    };
    let mut report = CommandReport {
        line: cmd.line,
        command: format!("{verb} {}", cmd.text),
        inputs: BTreeMap::new(),
        result: Value::Null,
        certificates: json!({}),
        timings: Timings {
            millis,
            gb_computed: used.gb_runs,
            cache_hits: used.cache_hits,
            reductions: used.reductions,
        },
        budget: Budget {
            limit: ctx.budget(),
        },
        error: None,
        refusal: false,
    };
    match outcome {
        Ok(o) => {
            report.inputs = o.inputs.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
            report.result = o.result;
            report.certificates = o.certificates;
        }
        Err(e) => {
            report.refusal = e.is_refusal();
            report.error = Some(ErrorReport {
                code: e.code().to_string(),
                message: e.to_string(),
            });
        }
    }
    report
}

/// Runs every command in order. Commands share the session ring, so
/// Gröbner bases computed for one command are reused by later ones.
pub fn run_session(session: &Session, name: Option<&str>, opts: &RunOptions) -> SessionReport {
    let ctx = session.ring.context();
    if let Some(b) = opts.budget {
        ctx.set_budget(b);
    }
    if opts.cache {
        let dir = opts.cache_dir.clone().unwrap_or_else(DiskCache::default_dir);
        match DiskCache::new(&dir) {
            Ok(cache) => ctx.set_store(Some(Arc::new(cache))),
            Err(e) => log::warn!("cache directory {} unavailable: {e}", dir.display()),
        }
    } else {
        ctx.set_store(None);
    }
    let reports = session
        .commands
        .iter()
        .map(|c| run_command(session, c, opts))
        .collect();
    SessionReport {
        session: name.map(str::to_string),
        reports,
    }
}
