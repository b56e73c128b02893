//! Benzenoid systems: simply connected unions of lattice hexagons.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hexcore::{
    build_graph, connected_components, delete_direction, DirectionClass, HexCoord, MolGraph, Wrap,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenzenoidSystem {
    hexes: BTreeSet<HexCoord>,
    graph: MolGraph,
    boundary: Vec<usize>,
}

impl BenzenoidSystem {
    pub fn hexes(&self) -> &BTreeSet<HexCoord> {
        &self.hexes
    }

    pub fn graph(&self) -> &MolGraph {
        &self.graph
    }

    pub fn hexagon_count(&self) -> usize {
        self.hexes.len()
    }

    /// The boundary cycle `Z` as a cyclic vertex-id list.
    pub fn boundary(&self) -> &[usize] {
        &self.boundary
    }
}

/// Number of elementary cuts per direction class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CutStats {
    pub alpha: [usize; 3],
}

impl CutStats {
    pub fn total(&self) -> usize {
        self.alpha.iter().sum()
    }
}

/// External hexagons whose largest intersection with the graph is a path on
/// 4, 5 and 6 vertices respectively.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ExternalHexTally {
    pub h1: usize,
    pub h2: usize,
    pub h3: usize,
}

impl ExternalHexTally {
    pub fn new(h1: usize, h2: usize, h3: usize) -> Self {
        Self { h1, h2, h3 }
    }

    pub fn as_array(&self) -> [usize; 3] {
        [self.h1, self.h2, self.h3]
    }

    /// Pairs at distance three contributed by external hexagons.
    pub fn weighted(&self) -> usize {
        self.h1 + 2 * self.h2 + 3 * self.h3
    }
}

pub fn hexes_connected(hexes: &BTreeSet<HexCoord>) -> bool {
    let Some(&start) = hexes.first() else {
        return false;
    };
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(h) = stack.pop() {
        for nb in h.neighbors() {
            if hexes.contains(&nb) && seen.insert(nb) {
                stack.push(nb);
            }
        }
    }
    seen.len() == hexes.len()
}

/// Dense membership bitmap over the bounding box of a hexagon set, grown
/// by `margin` on every side. Cells outside the box read as empty.
struct HexGrid {
    q0: i64,
    r0: i64,
    width: i64,
    height: i64,
    cells: Vec<bool>,
}

impl HexGrid {
    fn covering(hexes: &BTreeSet<HexCoord>, margin: i64) -> Self {
        let (mut qmin, mut qmax, mut rmin, mut rmax) = (i64::MAX, i64::MIN, i64::MAX, i64::MIN);
        for h in hexes {
            qmin = qmin.min(h.q);
            qmax = qmax.max(h.q);
            rmin = rmin.min(h.r);
            rmax = rmax.max(h.r);
        }
        let (q0, r0) = (qmin - margin, rmin - margin);
        let width = qmax - qmin + 1 + 2 * margin;
        let height = rmax - rmin + 1 + 2 * margin;
        let mut grid = HexGrid {
            q0,
            r0,
            width,
            height,
            cells: vec![false; (width * height) as usize],
        };
        for &h in hexes {
            grid.set(h);
        }
        grid
    }

    fn index(&self, h: HexCoord) -> Option<usize> {
        let (dq, dr) = (h.q - self.q0, h.r - self.r0);
        ((0..self.width).contains(&dq) && (0..self.height).contains(&dr))
            .then(|| (dr * self.width + dq) as usize)
    }

    fn get(&self, h: HexCoord) -> bool {
        self.index(h).is_some_and(|i| self.cells[i])
    }

    fn set(&mut self, h: HexCoord) {
        let i = self.index(h).expect("hexagon inside grid");
        self.cells[i] = true;
    }

    fn area(&self) -> usize {
        self.cells.len()
    }
}

/// `true` if some non-member hexagon cannot reach the outside through other
/// non-member hexagons.
pub fn has_hole(hexes: &BTreeSet<HexCoord>) -> bool {
    if hexes.is_empty() {
        return false;
    }
    let grid = HexGrid::covering(hexes, 1);
    let mut seen = HexGrid {
        cells: vec![false; grid.area()],
        ..grid
    };
    let start = HexCoord::new(seen.q0, seen.r0);
    seen.set(start);
    let mut reached = 1;
    let mut stack = vec![start];
    while let Some(h) = stack.pop() {
        for nb in h.neighbors() {
            if seen.index(nb).is_some() && !grid.get(nb) && !seen.get(nb) {
                seen.set(nb);
                reached += 1;
                stack.push(nb);
            }
        }
    }
    reached < seen.area() - hexes.len()
}

pub fn build_benzenoid(hexes: &BTreeSet<HexCoord>) -> Result<BenzenoidSystem> {
    if hexes.is_empty() {
        return Err(Error::EmptyHexSet);
    }
    if !hexes_connected(hexes) {
        return Err(Error::DisconnectedHexes);
    }
    if has_hole(hexes) {
        return Err(Error::HasHoles);
    }
    let graph = build_graph(hexes);
    let boundary = trace_boundary(hexes, &graph)?;

    let per_vertex = hexagons_per_vertex(hexes, &graph);
    let on_boundary: BTreeSet<usize> = boundary.iter().copied().collect();
    if let Some(v) =
        (0..graph.vertex_count()).find(|v| !on_boundary.contains(v) && per_vertex[*v] != 3)
    {
        return Err(Error::Validation(format!(
            "vertex {} is off the boundary but lies on {} hexagons",
            graph.coord(v),
            per_vertex[v]
        )));
    }

    Ok(BenzenoidSystem {
        hexes: hexes.clone(),
        graph,
        boundary,
    })
}

fn hexagons_per_vertex(hexes: &BTreeSet<HexCoord>, g: &MolGraph) -> Vec<usize> {
    let mut count = vec![0; g.vertex_count()];
    for h in hexes {
        for v in h.vertices() {
            count[g.vertex_id(v).expect("hexagon vertex in graph")] += 1;
        }
    }
    count
}

/// Edges on exactly one member hexagon form the boundary; for a hole-free
/// system they make up a single cycle.
fn trace_boundary(hexes: &BTreeSet<HexCoord>, g: &MolGraph) -> Result<Vec<usize>> {
    let mut on_hexes: HashMap<(usize, usize), usize> = HashMap::new();
    for h in hexes {
        for (a, b) in h.edges() {
            let (u, v) = (g.vertex_id(a).unwrap(), g.vertex_id(b).unwrap());
            *on_hexes.entry((u.min(v), u.max(v))).or_default() += 1;
        }
    }
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut edge_total = 0;
    for (&(u, v), &c) in &on_hexes {
        if c == 1 {
            adj.entry(u).or_default().push(v);
            adj.entry(v).or_default().push(u);
            edge_total += 1;
        }
    }
    if let Some((v, nb)) = adj.iter().find(|(_, nb)| nb.len() != 2) {
        return Err(Error::Validation(format!(
            "boundary vertex {} has {} boundary edges",
            g.coord(*v),
            nb.len()
        )));
    }
    let (&start, nbs) = adj
        .iter()
        .next()
        .ok_or_else(|| Error::Validation("no boundary".into()))?;
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = *nbs.iter().min().unwrap();
    while cur != start {
        cycle.push(cur);
        let next = adj[&cur].iter().copied().find(|&w| w != prev).unwrap();
        prev = cur;
        cur = next;
    }
    if cycle.len() != edge_total {
        return Err(Error::Validation(format!(
            "boundary splits into several cycles ({} of {} edges traced)",
            cycle.len(),
            edge_total
        )));
    }
    Ok(cycle)
}

/// Boundary cycle starting at its minimum id, heading to the smaller
/// neighbour.
pub fn boundary_cycle(b: &BenzenoidSystem) -> Vec<usize> {
    b.boundary.clone()
}

/// Vertices lying on three hexagons of the system.
pub fn internal_vertex_count(b: &BenzenoidSystem) -> usize {
    hexagons_per_vertex(&b.hexes, &b.graph)
        .into_iter()
        .filter(|&c| c == 3)
        .count()
}

pub fn cut_stats(b: &BenzenoidSystem) -> CutStats {
    let alpha =
        DirectionClass::ALL.map(|d| connected_components(&delete_direction(&b.graph, d)).len() - 1);
    CutStats { alpha }
}

/// Elementary cuts per class counted from the boundary: every cut crosses
/// `Z` in exactly two edges of its class.
pub fn boundary_cut_counts(b: &BenzenoidSystem) -> [usize; 3] {
    let mut crossings = [0usize; 3];
    let n = b.boundary.len();
    for i in 0..n {
        let (u, v) = (b.boundary[i], b.boundary[(i + 1) % n]);
        let class = b.graph.edge_class(u, v).expect("boundary edge in graph");
        crossings[class.index()] += 1;
    }
    crossings.map(|c| c / 2)
}

pub fn classify_external_hexagons(b: &BenzenoidSystem) -> Result<ExternalHexTally> {
    tally_external(&b.graph, &b.hexes, None)
}

/// External tally read off the hexagon set alone: a non-member hexagon
/// meets the system in one path per run of consecutive member neighbours,
/// and a run of `k` neighbours is a path on `k + 1` vertices.
pub fn external_tally_from_hexes(hexes: &BTreeSet<HexCoord>) -> Result<ExternalHexTally> {
    let mut tally = ExternalHexTally::default();
    if hexes.is_empty() {
        return Ok(tally);
    }
    let grid = HexGrid::covering(hexes, 1);
    let mut visited = HexGrid {
        cells: vec![false; grid.area()],
        ..grid
    };
    for h in hexes {
        for c in h.neighbors() {
            if grid.get(c) || visited.get(c) {
                continue;
            }
            visited.set(c);
            let member = c.neighbors().map(|nb| grid.get(nb));
            let Some(gap) = member.iter().position(|&m| !m) else {
                return Err(Error::Validation(format!(
                    "hexagon {c} is enclosed by the system"
                )));
            };
            let (mut best, mut run) = (0, 0);
            for i in 1..=6 {
                if member[(gap + i) % 6] {
                    run += 1;
                    best = best.max(run);
                } else {
                    run = 0;
                }
            }
            match best {
                3 => tally.h1 += 1,
                4 => tally.h2 += 1,
                5 => tally.h3 += 1,
                _ => {}
            }
        }
    }
    Ok(tally)
}

/// Classifies every non-member hexagon that shares an edge with `g` by the
/// size of the largest component of its intersection with `g`. With a wrap,
/// `members` must hold canonical hexagons.
pub(crate) fn tally_external(
    g: &MolGraph,
    members: &BTreeSet<HexCoord>,
    wrap: Option<Wrap>,
) -> Result<ExternalHexTally> {
    let canon = |h: HexCoord| match wrap {
        Some(w) => w.canonical_hex(h),
        None => h,
    };
    let candidates: BTreeSet<HexCoord> = members
        .iter()
        .flat_map(|h| h.neighbors())
        .map(canon)
        .filter(|h| !members.contains(h))
        .collect();

    let mut tally = ExternalHexTally::default();
    for h in candidates {
        let Some(largest) = largest_intersection(g, h) else {
            continue;
        };
        match largest {
            Intersection::Path(4) => tally.h1 += 1,
            Intersection::Path(5) => tally.h2 += 1,
            Intersection::Path(6) => tally.h3 += 1,
            Intersection::Path(_) => {}
            Intersection::Cycle => {
                return Err(Error::Validation(format!(
                    "external hexagon {h} has all six edges in the graph"
                )))
            }
        }
    }
    Ok(tally)
}

enum Intersection {
    Path(usize),
    Cycle,
}

/// Largest component of `h ∩ g`, or `None` when they share no edge.
fn largest_intersection(g: &MolGraph, h: HexCoord) -> Option<Intersection> {
    let present: [bool; 6] = h.edges().map(|(a, b)| g.has_lattice_edge(a, b));
    let count = present.iter().filter(|&&p| p).count();
    if count == 0 {
        return None;
    }
    if count == 6 {
        return Some(Intersection::Cycle);
    }
    // Longest cyclic run of present edges; a run of k edges is a path on
    // k + 1 vertices.
    let start = present.iter().position(|&p| !p).unwrap();
    let (mut best, mut run) = (0, 0);
    for i in 1..=6 {
        if present[(start + i) % 6] {
            run += 1;
            best = best.max(run);
        } else {
            run = 0;
        }
    }
    Some(Intersection::Path(best + 1))
}

fn creates_hole(hexes: &mut BTreeSet<HexCoord>, candidate: HexCoord) -> bool {
    // Touching the system along one contiguous arc cannot enclose anything.
    let member = candidate.neighbors().map(|nb| hexes.contains(&nb));
    let arcs = (0..6)
        .filter(|&i| member[i] && !member[(i + 5) % 6])
        .count();
    if arcs <= 1 {
        return false;
    }
    hexes.insert(candidate);
    let hole = has_hole(hexes);
    hexes.remove(&candidate);
    hole
}

/// Grows a random hole-free system of `h` hexagons from a single hexagon at
/// the origin. Each step draws uniformly from the non-member hexagons
/// adjacent to the system (in coordinate order), redrawing when the pick
/// would enclose a hole. Deterministic for a given `(h, seed)`.
pub fn random_benzenoid(h: usize, seed: u64) -> Result<BenzenoidSystem> {
    if h == 0 {
        return Err(Error::ParamOutOfRange(
            "hexagon count must be at least 1".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let origin = HexCoord::new(0, 0);
    let mut hexes = BTreeSet::from([origin]);
    let mut frontier: BTreeSet<HexCoord> = origin.neighbors().into_iter().collect();
    while hexes.len() < h {
        let mut candidates: Vec<HexCoord> = frontier.iter().copied().collect();
        let pick = loop {
            let c = candidates.swap_remove(rng.gen_range(0..candidates.len()));
            if !creates_hole(&mut hexes, c) {
                break c;
            }
        };
        hexes.insert(pick);
        frontier.remove(&pick);
        frontier.extend(
            pick.neighbors()
                .into_iter()
                .filter(|nb| !hexes.contains(nb)),
        );
    }
    build_benzenoid(&hexes)
}

/// Stats record emitted for a benzenoid system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BenzenoidStats {
    pub h: usize,
    pub n: usize,
    pub m: usize,
    pub boundary: usize,
    pub internal: usize,
    pub alpha: [usize; 3],
    pub external: [usize; 3],
}

pub fn benzenoid_stats(b: &BenzenoidSystem) -> Result<BenzenoidStats> {
    Ok(BenzenoidStats {
        h: b.hexagon_count(),
        n: b.graph.vertex_count(),
        m: b.graph.edge_count(),
        boundary: b.boundary.len(),
        internal: internal_vertex_count(b),
        alpha: cut_stats(b).alpha,
        external: classify_external_hexagons(b)?.as_array(),
    })
}
