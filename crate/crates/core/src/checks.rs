//! Structural and numerical validators. Each returns named pass/fail
//! records instead of panicking so a driver can tally violations.

use serde::Serialize;

use crate::benzenoid::{
    boundary_cut_counts, classify_external_hexagons, cut_stats, external_tally_from_hexes,
    internal_vertex_count, BenzenoidSystem, ExternalHexTally,
};
use crate::hexcore::{
    component_shape, connected_components, delete_direction, girth, is_bipartite,
    same_class_edges_disjoint, ComponentShape, DirectionClass, MolGraph,
};
use crate::polarity::{
    cut_decomposition, distance_distribution, wp_armchair_closed, wp_benzenoid_closed,
    wp_bruteforce, wp_zigzag_closed,
};
use crate::tubulene::{classify_external_hexagons_tub, TubeKind, Tubulene};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckResult {
    fn new(name: &'static str, passed: bool, detail: impl FnOnce() -> String) -> Self {
        let detail = if passed { None } else { Some(detail()) };
        Self {
            name,
            passed,
            detail,
        }
    }

    fn fail(name: &'static str, detail: String) -> Self {
        Self {
            name,
            passed: false,
            detail: Some(detail),
        }
    }
}

fn shapes_of(g: &MolGraph, d: DirectionClass) -> Vec<ComponentShape> {
    let cut = delete_direction(g, d);
    connected_components(&cut)
        .iter()
        .map(|c| component_shape(&cut, c).expect("component is connected"))
        .collect()
}

/// Checks every lattice-embedded graph must pass.
pub fn check_structure(g: &MolGraph) -> Vec<CheckResult> {
    let max_degree = (0..g.vertex_count())
        .map(|v| g.degree(v))
        .max()
        .unwrap_or(0);
    vec![
        CheckResult::new("max-degree-3", max_degree <= 3, || {
            format!("max degree {max_degree}")
        }),
        CheckResult::new("class-edges-disjoint", same_class_edges_disjoint(g), || {
            "two edges of one class share a vertex".into()
        }),
        CheckResult::new("bipartite", is_bipartite(g), || "odd cycle found".into()),
    ]
}

/// Checks for an arbitrary graph read from JSON: structure plus a cut
/// decomposition in which every component must be a path or a cycle.
pub fn check_graph(g: &MolGraph) -> Vec<CheckResult> {
    let mut out = check_structure(g);
    out.push(match cut_decomposition(g, 0, ExternalHexTally::default()) {
        Ok(_) => CheckResult::new("components-path-or-cycle", true, String::new),
        Err(e) => CheckResult::fail("components-path-or-cycle", format!("{}: {e}", e.kind())),
    });
    out
}

fn distance_check(g: &MolGraph, brute: u64) -> CheckResult {
    let dist = distance_distribution(g, 3).expect("cap is positive");
    CheckResult::new("distance3-matches-brute", dist[2] == brute, || {
        format!("distribution gives {}, brute force {brute}", dist[2])
    })
}

pub fn check_benzenoid(b: &BenzenoidSystem) -> Vec<CheckResult> {
    let g = b.graph();
    let mut out = check_structure(g);
    let h = b.hexagon_count();
    let n = g.vertex_count();
    let z = b.boundary().len();
    let internal = internal_vertex_count(b);
    let alpha = cut_stats(b).alpha;

    out.push(CheckResult::new(
        "vertex-count-identity",
        n + internal == 4 * h + 2,
        || format!("n={n}, h={h}, internal={internal}"),
    ));
    out.push(CheckResult::new(
        "internal-off-boundary",
        internal + z == n,
        || format!("internal={internal}, |Z|={z}, n={n}"),
    ));
    out.push(CheckResult::new(
        "boundary-cut-sum",
        z == 2 * alpha.iter().sum::<usize>(),
        || format!("|Z|={z}, alpha={alpha:?}"),
    ));
    let crossings = boundary_cut_counts(b);
    out.push(CheckResult::new(
        "cut-component-count",
        crossings == alpha,
        || format!("components-1 per class {alpha:?}, boundary crossings/2 {crossings:?}"),
    ));

    let mut long_paths = true;
    let mut identity = true;
    for d in DirectionClass::ALL {
        let shapes = shapes_of(g, d);
        let mut excess: i64 = 0;
        for s in &shapes {
            match s {
                ComponentShape::Path(k) if *k >= 3 => excess += *k as i64 - 3,
                _ => long_paths = false,
            }
        }
        if excess != n as i64 - 3 * (alpha[d.index()] as i64 + 1) {
            identity = false;
        }
    }
    out.push(CheckResult::new(
        "components-are-long-paths",
        long_paths,
        || "a component of G - E_i is not a path on at least 3 vertices".into(),
    ));
    out.push(CheckResult::new("component-sum-identity", identity, || {
        "sum of (n_j - 3) differs from n - 3(alpha_i + 1)".into()
    }));

    let tally = match classify_external_hexagons(b) {
        Ok(t) => {
            out.push(CheckResult::new("external-at-most-p6", true, String::new));
            t
        }
        Err(e) => {
            out.push(CheckResult::fail("external-at-most-p6", e.to_string()));
            return out;
        }
    };
    let from_hexes = external_tally_from_hexes(b.hexes());
    out.push(CheckResult::new(
        "external-tally-routes-agree",
        from_hexes.as_ref() == Ok(&tally),
        || format!("graph tally {tally:?}, hexagon-set tally {from_hexes:?}"),
    ));

    let brute = wp_bruteforce(g);
    let cut = cut_decomposition(g, h as u64, tally).map(|d| d.total());
    let closed = wp_benzenoid_closed(h as u64, tally.h1 as u64, tally.h2 as u64, tally.h3 as u64);
    out.push(CheckResult::new(
        "methods-agree",
        cut.as_ref().ok() == Some(&brute) && closed.as_ref().ok() == Some(&brute),
        || format!("brute={brute}, cut={cut:?}, closed={closed:?}"),
    ));
    out.push(distance_check(g, brute));
    out
}

pub fn check_tubulene(t: &Tubulene) -> Vec<CheckResult> {
    let g = t.graph();
    let mut out = check_structure(g);
    let n = g.vertex_count();
    let (r, h) = t.kind().params();

    let (want_n, want_tally) = match t.kind() {
        TubeKind::ZigZag { .. } => (2 * h * (r + 1), ExternalHexTally::new(0, 0, 0)),
        TubeKind::Armchair { .. } => (r * (2 * h + 2), ExternalHexTally::new(r, 0, 0)),
    };
    out.push(CheckResult::new(
        "tube-size",
        n == want_n && t.hexagon_count() == r * h,
        || {
            format!(
                "n={n} (want {want_n}), hexagons={} (want {})",
                t.hexagon_count(),
                r * h
            )
        },
    ));

    let shapes = DirectionClass::ALL.map(|d| shapes_of(g, d));
    let path_or_cycle = shapes
        .iter()
        .flatten()
        .all(|s| !matches!(s, ComponentShape::Other));
    out.push(CheckResult::new(
        "components-path-or-cycle",
        path_or_cycle,
        || "a component of G - E_i is neither a path nor a cycle".into(),
    ));

    let family = match t.kind() {
        TubeKind::ZigZag { .. } => {
            shapes[0] == vec![ComponentShape::Cycle(2 * h); r + 1]
                && shapes[1] == vec![ComponentShape::Path(2 * r + 2); h]
                && shapes[2] == vec![ComponentShape::Path(2 * r + 2); h]
        }
        TubeKind::Armchair { .. } => {
            let half_paths = |s: &[ComponentShape]| {
                s.len() == r / 2
                    && s.iter()
                        .map(|c| match c {
                            ComponentShape::Path(k) if *k >= 3 => Some(*k),
                            _ => None,
                        })
                        .sum::<Option<usize>>()
                        == Some(n)
            };
            shapes[1] == vec![ComponentShape::Path(2 * h + 2); r]
                && half_paths(&shapes[0])
                && half_paths(&shapes[2])
        }
    };
    out.push(CheckResult::new("family-decomposition", family, || {
        format!("component shapes per class: {shapes:?}")
    }));

    let g6 = girth(g);
    out.push(CheckResult::new(
        "girth-at-least-6",
        g6.is_some_and(|x| x >= 6),
        || format!("girth {g6:?}"),
    ));

    let mut share_ok = true;
    let hex_edges: Vec<Vec<(usize, usize)>> = t
        .hexes()
        .iter()
        .map(|hx| {
            hx.edges()
                .iter()
                .map(|&(a, b)| {
                    let (u, v) = (g.vertex_id(a).unwrap(), g.vertex_id(b).unwrap());
                    (u.min(v), u.max(v))
                })
                .collect()
        })
        .collect();
    for i in 0..hex_edges.len() {
        for j in i + 1..hex_edges.len() {
            let common = hex_edges[i]
                .iter()
                .filter(|e| hex_edges[j].contains(e))
                .count();
            if common > 1 {
                share_ok = false;
            }
        }
    }
    out.push(CheckResult::new(
        "hexagons-share-at-most-one-edge",
        share_ok,
        || "two hexagons share more than one edge".into(),
    ));

    let tally = match classify_external_hexagons_tub(t) {
        Ok(tally) => tally,
        Err(e) => {
            out.push(CheckResult::fail("external-at-most-p6", e.to_string()));
            return out;
        }
    };
    out.push(CheckResult::new(
        "external-tally",
        tally == want_tally,
        || format!("tally {tally:?}, expected {want_tally:?}"),
    ));

    let brute = wp_bruteforce(g);
    let cut = cut_decomposition(g, t.hexagon_count() as u64, tally).map(|d| d.total());
    let closed = match t.kind() {
        TubeKind::ZigZag { r, h } => wp_zigzag_closed(r as u64, h as u64),
        TubeKind::Armchair { r, h } => wp_armchair_closed(r as u64, h as u64),
    };
    out.push(CheckResult::new(
        "methods-agree",
        cut.as_ref().ok() == Some(&brute) && closed.as_ref().ok() == Some(&brute),
        || format!("brute={brute}, cut={cut:?}, closed={closed:?}"),
    ));
    out.push(distance_check(g, brute));
    out
}
