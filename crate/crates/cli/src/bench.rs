use std::time::Instant;

use serde::{Deserialize, Serialize};

use wpolar::benzenoid::{
    classify_external_hexagons, external_tally_from_hexes, random_benzenoid, BenzenoidSystem,
};
use wpolar::polarity::{wp_benzenoid_closed, wp_bruteforce, wp_cut_method};
use wpolar::Error;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub h: usize,
    pub instances: usize,
    pub brute_us: f64,
    pub cut_us: f64,
    pub formula_us: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchTable {
    pub rows: Vec<BenchRow>,
}

impl BenchTable {
    pub fn render_text(&self) -> String {
        let mut out = format!(
            "{:>6} {:>9} {:>14} {:>14} {:>14}\n",
            "h", "instances", "brute (us)", "cut (us)", "formula (us)"
        );
        for r in &self.rows {
            out.push_str(&format!(
                "{:>6} {:>9} {:>14.1} {:>14.1} {:>14.1}\n",
                r.h, r.instances, r.brute_us, r.cut_us, r.formula_us
            ));
        }
        out
    }
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(|a, b| a.total_cmp(b));
    let n = xs.len();
    if n % 2 == 1 {
        xs[n / 2]
    } else {
        (xs[n / 2 - 1] + xs[n / 2]) / 2.0
    }
}

fn time<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed().as_secs_f64() * 1e6)
}

/// Times the three methods on one system. The cut timing includes
/// classifying external hexagons on the graph; the formula timing includes
/// the tally read off the hexagon set, which is all the formula needs.
fn time_methods(b: &BenzenoidSystem) -> Result<[f64; 3], Error> {
    let h = b.hexagon_count() as u64;
    let (brute, t_brute) = time(|| wp_bruteforce(b.graph()));
    let (cut, t_cut) = time(|| -> Result<u64, Error> {
        let tally = classify_external_hexagons(b)?;
        wp_cut_method(b.graph(), h, tally)
    });
    let (closed, t_formula) = time(|| -> Result<u64, Error> {
        let t = external_tally_from_hexes(b.hexes())?;
        wp_benzenoid_closed(h, t.h1 as u64, t.h2 as u64, t.h3 as u64)
    });
    let (cut, closed) = (cut?, closed?);
    if cut != brute || closed != brute {
        return Err(Error::Validation(format!(
            "methods disagree on a {h}-hexagon system: brute={brute} cut={cut} closed={closed}"
        )));
    }
    Ok([t_brute, t_cut, t_formula])
}

pub fn run_bench(sizes: &[usize], instances: usize, seed: u64) -> Result<BenchTable, Error> {
    let mut rows = Vec::with_capacity(sizes.len());
    for &h in sizes {
        let mut cols: [Vec<f64>; 3] = Default::default();
        for i in 0..instances {
            let b = random_benzenoid(h, seed.wrapping_add(i as u64))?;
            for (col, t) in cols.iter_mut().zip(time_methods(&b)?) {
                col.push(t);
            }
        }
        let [brute, cut, formula] = cols.map(median);
        rows.push(BenchRow {
            h,
            instances,
            brute_us: brute,
            cut_us: cut,
            formula_us: formula,
        });
    }
    Ok(BenchTable { rows })
}
