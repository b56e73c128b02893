use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use wpolar::benzenoid::random_benzenoid;
use wpolar::checks::{check_benzenoid, check_graph, check_tubulene, CheckResult};
use wpolar::hexcore::MolGraph;
use wpolar::tubulene::{build_armchair, build_zigzag};

#[derive(Debug, Clone)]
enum Instance {
    Random { h: usize, seed: u64 },
    ZigZag { r: usize, h: usize },
    Armchair { r: usize, h: usize },
}

impl Instance {
    fn label(&self) -> String {
        match self {
            Instance::Random { h, seed } => format!("random h={h} seed={seed}"),
            Instance::ZigZag { r, h } => format!("zigzag r={r} h={h}"),
            Instance::Armchair { r, h } => format!("armchair r={r} h={h}"),
        }
    }

    fn run(&self) -> Vec<CheckResult> {
        match *self {
            Instance::Random { h, seed } => {
                check_benzenoid(&random_benzenoid(h, seed).expect("h >= 1"))
            }
            Instance::ZigZag { r, h } => {
                check_tubulene(&build_zigzag(r, h).expect("grid in range"))
            }
            Instance::Armchair { r, h } => {
                check_tubulene(&build_armchair(r, h).expect("grid in range"))
            }
        }
    }
}

/// Random instance parameters drawn from a single master seed; the order of
/// draws fixes the corpus.
fn corpus(count: usize, max_h: usize, seed: u64) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<Instance> = (0..count)
        .map(|_| Instance::Random {
            h: rng.gen_range(1..=max_h),
            seed: rng.gen(),
        })
        .collect();
    for r in 1..=6 {
        for h in 3..=8 {
            out.push(Instance::ZigZag { r, h });
        }
    }
    for r in [4, 6, 8] {
        for h in 1..=6 {
            out.push(Instance::Armchair { r, h });
        }
    }
    out
}

#[derive(Debug, Default, Serialize)]
pub struct Tally {
    pub name: String,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Serialize)]
pub struct Violation {
    pub instance: String,
    pub check: String,
    pub detail: String,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub seed: Option<u64>,
    pub count: usize,
    pub max_h: usize,
    pub instances: usize,
    pub checks: Vec<Tally>,
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    fn from_results(
        seed: Option<u64>,
        count: usize,
        max_h: usize,
        results: Vec<(String, Vec<CheckResult>)>,
    ) -> Self {
        let mut tallies: BTreeMap<&'static str, Tally> = BTreeMap::new();
        let mut violations = Vec::new();
        for (label, checks) in &results {
            for c in checks {
                let t = tallies.entry(c.name).or_insert_with(|| Tally {
                    name: c.name.to_string(),
                    ..Tally::default()
                });
                if c.passed {
                    t.passed += 1;
                } else {
                    t.failed += 1;
                    violations.push(Violation {
                        instance: label.clone(),
                        check: c.name.to_string(),
                        detail: c.detail.clone().unwrap_or_default(),
                    });
                }
            }
        }
        Self {
            seed,
            count,
            max_h,
            instances: results.len(),
            checks: tallies.into_values().collect(),
            violations,
        }
    }

    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        match self.seed {
            Some(seed) => out.push_str(&format!(
                "verified {} instances ({} random benzenoids, seed {seed}, max h {}, plus tube grid)\n",
                self.instances, self.count, self.max_h
            )),
            None => out.push_str(&format!("verified {} input graph(s)\n", self.instances)),
        }
        out.push_str(&format!(
            "{:<34} {:>7} {:>7}\n",
            "check", "passed", "failed"
        ));
        for t in &self.checks {
            out.push_str(&format!("{:<34} {:>7} {:>7}\n", t.name, t.passed, t.failed));
        }
        out.push_str(&format!("violations: {}\n", self.violations.len()));
        for v in &self.violations {
            out.push_str(&format!("  {} [{}]: {}\n", v.instance, v.check, v.detail));
        }
        out
    }
}

pub fn verify_corpus(count: usize, max_h: usize, seed: u64) -> VerifyReport {
    let instances = corpus(count, max_h, seed);
    let results: Vec<(String, Vec<CheckResult>)> = instances
        .par_iter()
        .map(|inst| (inst.label(), inst.run()))
        .collect();
    VerifyReport::from_results(Some(seed), count, max_h, results)
}

pub fn verify_graph(label: String, g: &MolGraph) -> VerifyReport {
    VerifyReport::from_results(None, 0, 0, vec![(label, check_graph(g))])
}
