use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use wpolar::benzenoid::external_tally_from_hexes;
use wpolar::polarity::{
    wp_armchair_closed, wp_benzenoid_closed, wp_bruteforce, wp_cut_method, wp_zigzag_closed,
};
use wpolar::tubulene::TubeKind;
use wpolar::Error;

use crate::structure::Structure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Brute,
    Cut,
    Formula,
    All,
}

impl Method {
    pub fn expand(self) -> Vec<Method> {
        match self {
            Method::All => vec![Method::Brute, Method::Cut, Method::Formula],
            m => vec![m],
        }
    }

    fn name(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Cut => "cut",
            Method::Formula => "formula",
            Method::All => "all",
        }
    }
}

#[derive(Debug, Serialize)]
pub struct MethodResult {
    pub method: &'static str,
    pub value: u64,
    pub wall_us: f64,
}

/// Everything `wp` computed, in one object.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub structure: Value,
    pub results: Vec<MethodResult>,
    pub agreement: bool,
    pub stats: Value,
}

impl RunReport {
    pub fn new(structure: Value, results: Vec<MethodResult>, stats: Value) -> Self {
        let agreement = results.windows(2).all(|w| w[0].value == w[1].value);
        Self {
            structure,
            results,
            agreement,
            stats,
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            out.push_str(&format!(
                "{:<8} {:>12}   {:>10.1} us\n",
                r.method, r.value, r.wall_us
            ));
        }
        if self.results.len() > 1 {
            out.push_str(&format!("agreement: {}\n", self.agreement));
        }
        out
    }
}

fn timed(method: Method, f: impl FnOnce() -> Result<u64, Error>) -> Result<MethodResult, Error> {
    let start = Instant::now();
    let value = f()?;
    Ok(MethodResult {
        method: method.name(),
        value,
        wall_us: start.elapsed().as_secs_f64() * 1e6,
    })
}

/// Runs the requested methods. `all` on a raw graph skips the closed
/// formula, which needs family metadata.
pub fn run_structure(s: &Structure, method: Method) -> Result<Vec<MethodResult>, Error> {
    let mut methods = method.expand();
    if method == Method::All && matches!(s, Structure::Raw(_)) {
        methods.retain(|&m| m != Method::Formula);
    }
    methods
        .into_iter()
        .map(|m| match m {
            Method::Brute => timed(m, || Ok(wp_bruteforce(s.graph()))),
            Method::Cut => timed(m, || {
                let (h, tally) = s.cut_inputs()?;
                wp_cut_method(s.graph(), h, tally)
            }),
            Method::Formula => timed(m, || closed_formula(s)),
            Method::All => unreachable!(),
        })
        .collect()
}

fn closed_formula(s: &Structure) -> Result<u64, Error> {
    match s {
        Structure::Benzenoid(b) => {
            let t = external_tally_from_hexes(b.hexes())?;
            wp_benzenoid_closed(
                b.hexagon_count() as u64,
                t.h1 as u64,
                t.h2 as u64,
                t.h3 as u64,
            )
        }
        Structure::Tube(t) => match t.kind() {
            TubeKind::ZigZag { r, h } => wp_zigzag_closed(r as u64, h as u64),
            TubeKind::Armchair { r, h } => wp_armchair_closed(r as u64, h as u64),
        },
        Structure::Raw(_) => Err(Error::FormulaUnavailable(
            "a raw graph carries no family metadata; use a benzenoid or tube structure".into(),
        )),
    }
}

/// `wp --benzenoid-params H H1 H2 H3`: closed formula only.
pub fn run_params(params: [i64; 4], method: Method) -> Result<RunReport, Error> {
    if !matches!(method, Method::Formula | Method::All) {
        return Err(Error::FormulaUnavailable(
            "--benzenoid-params supplies no graph; only --method formula applies".into(),
        ));
    }
    let [h, h1, h2, h3] = params.map(|v| u64::try_from(v).ok());
    let (Some(h), Some(h1), Some(h2), Some(h3)) = (h, h1, h2, h3) else {
        return Err(Error::ParamOutOfRange(
            "benzenoid parameters must be non-negative".into(),
        ));
    };
    let result = timed(Method::Formula, || wp_benzenoid_closed(h, h1, h2, h3))?;
    Ok(RunReport::new(
        json!({"family": "benzenoid-params", "h": h, "h1": h1, "h2": h2, "h3": h3}),
        vec![result],
        json!({"h": h, "external": [h1, h2, h3]}),
    ))
}
