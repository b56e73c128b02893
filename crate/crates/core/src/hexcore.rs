//! Hexagonal lattice coordinates, lattice-embedded graphs and the elementary
//! graph algorithms everything else is built on.
//!
//! Hexagons are addressed by axial coordinates `(q, r)`. Vertices live in a
//! brick-wall frame: every `(x, y)` is a lattice point, horizontal edges
//! `(x, y)-(x + 1, y)` always exist and the vertical edge `(x, y)-(x, y + 1)`
//! exists iff `x + y` is even. Hexagon `(q, r)` is the 3x2 brick anchored at
//! `(2q + r, r)`.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HexCoord {
    pub q: i64,
    pub r: i64,
}

impl HexCoord {
    pub const fn new(q: i64, r: i64) -> Self {
        Self { q, r }
    }

    /// Lower-left corner of the hexagon's brick.
    pub fn anchor(self) -> LatticeVertex {
        LatticeVertex::new(2 * self.q + self.r, self.r)
    }

    /// The six neighbouring hexagons. Neighbour `i` shares edge `i` of
    /// [`HexCoord::edges`].
    pub fn neighbors(self) -> [HexCoord; 6] {
        let HexCoord { q, r } = self;
        [
            HexCoord::new(q, r - 1),
            HexCoord::new(q + 1, r - 1),
            HexCoord::new(q + 1, r),
            HexCoord::new(q, r + 1),
            HexCoord::new(q - 1, r + 1),
            HexCoord::new(q - 1, r),
        ]
    }

    /// The six vertices in cyclic order, starting at the anchor and walking
    /// along the bottom row.
    pub fn vertices(self) -> [LatticeVertex; 6] {
        let a = self.anchor();
        [
            LatticeVertex::new(a.x, a.y),
            LatticeVertex::new(a.x + 1, a.y),
            LatticeVertex::new(a.x + 2, a.y),
            LatticeVertex::new(a.x + 2, a.y + 1),
            LatticeVertex::new(a.x + 1, a.y + 1),
            LatticeVertex::new(a.x, a.y + 1),
        ]
    }

    /// The six edges in cyclic order; edge `i` joins vertex `i` and `i + 1`.
    pub fn edges(self) -> [(LatticeVertex, LatticeVertex); 6] {
        let v = self.vertices();
        std::array::from_fn(|i| (v[i], v[(i + 1) % 6]))
    }

    pub fn translate(self, by: HexCoord) -> HexCoord {
        HexCoord::new(self.q + by.q, self.r + by.r)
    }
}

impl fmt::Display for HexCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.q, self.r)
    }
}

/// Vertices of hexagon `h` in cyclic order.
pub fn hexagon_vertices(h: HexCoord) -> [LatticeVertex; 6] {
    h.vertices()
}

/// A lattice point in the brick-wall frame. Orders by `(y, x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LatticeVertex {
    pub x: i64,
    pub y: i64,
}

impl LatticeVertex {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    fn parity_even(self) -> bool {
        (self.x + self.y).rem_euclid(2) == 0
    }
}

impl Ord for LatticeVertex {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.y, self.x).cmp(&(other.y, other.x))
    }
}

impl PartialOrd for LatticeVertex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LatticeVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DirectionClass {
    D1,
    D2,
    D3,
}

impl DirectionClass {
    pub const ALL: [DirectionClass; 3] =
        [DirectionClass::D1, DirectionClass::D2, DirectionClass::D3];

    pub fn index(self) -> usize {
        match self {
            DirectionClass::D1 => 0,
            DirectionClass::D2 => 1,
            DirectionClass::D3 => 2,
        }
    }
}

impl fmt::Display for DirectionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DirectionClass::D1 => "D1",
            DirectionClass::D2 => "D2",
            DirectionClass::D3 => "D3",
        };
        f.write_str(s)
    }
}

/// Direction class of the lattice edge `u-v`.
pub fn edge_direction(u: LatticeVertex, v: LatticeVertex) -> Result<DirectionClass> {
    let (lo, hi) = if u <= v { (u, v) } else { (v, u) };
    if lo.x == hi.x && hi.y - lo.y == 1 && lo.parity_even() {
        Ok(DirectionClass::D1)
    } else if lo.y == hi.y && hi.x - lo.x == 1 {
        if lo.parity_even() {
            Ok(DirectionClass::D2)
        } else {
            Ok(DirectionClass::D3)
        }
    } else {
        Err(Error::InvalidEdge(u, v))
    }
}

/// A lattice translation that rolls the plane into a cylinder, given as a
/// hexagon offset. The matching vertex offset is `(2q + r, r)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Wrap {
    hex: HexCoord,
}

impl Wrap {
    /// `hex.q` must be positive: the canonical representative of a class is
    /// the one with `0 <= q < hex.q` (for hexagons) or `0 <= x < 2q + r` (for
    /// vertices).
    pub fn new(hex: HexCoord) -> Result<Self> {
        if hex.q <= 0 || 2 * hex.q + hex.r <= 0 {
            return Err(Error::ParamOutOfRange(format!(
                "wrap vector {hex} must point towards increasing x"
            )));
        }
        Ok(Self { hex })
    }

    pub fn hex_offset(self) -> HexCoord {
        self.hex
    }

    pub fn vertex_offset(self) -> LatticeVertex {
        self.hex.anchor()
    }

    pub fn canonical_vertex(self, v: LatticeVertex) -> LatticeVertex {
        let w = self.vertex_offset();
        let k = v.x.div_euclid(w.x);
        LatticeVertex::new(v.x - k * w.x, v.y - k * w.y)
    }

    pub fn canonical_hex(self, h: HexCoord) -> HexCoord {
        let k = h.q.div_euclid(self.hex.q);
        HexCoord::new(h.q - k * self.hex.q, h.r - k * self.hex.r)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub class: DirectionClass,
}

/// Finite simple graph whose vertices carry lattice coordinates and whose
/// edges carry a direction class.
#[derive(Clone, Debug)]
pub struct MolGraph {
    coords: Vec<LatticeVertex>,
    adjacency: Vec<Vec<usize>>,
    edges: Vec<Edge>,
    index: HashMap<LatticeVertex, usize>,
    wrap: Option<Wrap>,
}

impl PartialEq for MolGraph {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords && self.edges == other.edges && self.wrap == other.wrap
    }
}

impl Eq for MolGraph {}

impl MolGraph {
    /// Assembles a graph from explicit parts. Edges are normalised to
    /// `u < v` and sorted; loops, duplicates and out-of-range ids are
    /// rejected. Direction classes are taken as given.
    pub fn from_parts(
        coords: Vec<LatticeVertex>,
        edges: impl IntoIterator<Item = (usize, usize, DirectionClass)>,
    ) -> Result<Self> {
        let n = coords.len();
        let mut index = HashMap::with_capacity(n);
        for (id, &c) in coords.iter().enumerate() {
            if index.insert(c, id).is_some() {
                return Err(Error::Validation(format!(
                    "duplicate vertex coordinate {c}"
                )));
            }
        }
        let mut list = Vec::new();
        let mut seen = BTreeSet::new();
        for (a, b, class) in edges {
            if a >= n {
                return Err(Error::InvalidVertex(a));
            }
            if b >= n {
                return Err(Error::InvalidVertex(b));
            }
            if a == b {
                return Err(Error::Validation(format!("loop at vertex {a}")));
            }
            let (u, v) = (a.min(b), a.max(b));
            if !seen.insert((u, v)) {
                return Err(Error::Validation(format!("parallel edge {u}-{v}")));
            }
            list.push(Edge { u, v, class });
        }
        list.sort();
        let mut adjacency = vec![Vec::new(); n];
        for e in &list {
            adjacency[e.u].push(e.v);
            adjacency[e.v].push(e.u);
        }
        for nb in &mut adjacency {
            nb.sort_unstable();
        }
        Ok(Self {
            coords,
            adjacency,
            edges: list,
            index,
            wrap: None,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.coords.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn coords(&self) -> &[LatticeVertex] {
        &self.coords
    }

    pub fn coord(&self, id: usize) -> LatticeVertex {
        self.coords[id]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, id: usize) -> &[usize] {
        &self.adjacency[id]
    }

    pub fn degree(&self, id: usize) -> usize {
        self.adjacency[id].len()
    }

    pub fn wrap(&self) -> Option<Wrap> {
        self.wrap
    }

    /// Id of the vertex at lattice point `v`, reducing modulo the wrap first.
    pub fn vertex_id(&self, v: LatticeVertex) -> Option<usize> {
        let v = match self.wrap {
            Some(w) => w.canonical_vertex(v),
            None => v,
        };
        self.index.get(&v).copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency
            .get(u)
            .is_some_and(|nb| nb.binary_search(&v).is_ok())
    }

    pub fn edge_class(&self, u: usize, v: usize) -> Option<DirectionClass> {
        let key = (u.min(v), u.max(v));
        self.edges
            .binary_search_by_key(&key, |e| (e.u, e.v))
            .ok()
            .map(|i| self.edges[i].class)
    }

    /// Whether the lattice edge `a-b` is an edge of this graph.
    pub fn has_lattice_edge(&self, a: LatticeVertex, b: LatticeVertex) -> bool {
        match (self.vertex_id(a), self.vertex_id(b)) {
            (Some(u), Some(v)) => self.has_edge(u, v),
            _ => false,
        }
    }

    fn check_id(&self, id: usize) -> Result<()> {
        if id < self.coords.len() {
            Ok(())
        } else {
            Err(Error::InvalidVertex(id))
        }
    }
}

/// Graph induced by a union of hexagons on the plane lattice.
pub fn build_graph(hexes: &BTreeSet<HexCoord>) -> MolGraph {
    assemble(hexes, None)
}

/// Graph induced by a union of hexagons on the cylinder obtained by
/// identifying lattice points that differ by a multiple of `wrap`.
pub fn build_graph_wrapped(hexes: &BTreeSet<HexCoord>, wrap: Wrap) -> MolGraph {
    assemble(hexes, Some(wrap))
}

fn assemble(hexes: &BTreeSet<HexCoord>, wrap: Option<Wrap>) -> MolGraph {
    let canon = |v: LatticeVertex| match wrap {
        Some(w) => w.canonical_vertex(v),
        None => v,
    };
    let mut edge_set: BTreeMap<(LatticeVertex, LatticeVertex), DirectionClass> = BTreeMap::new();
    for h in hexes {
        for (a, b) in h.edges() {
            let class = edge_direction(a, b).expect("hexagon sides are lattice edges");
            let (a, b) = (canon(a), canon(b));
            debug_assert_ne!(a, b, "wrap collapses an edge");
            let key = if a < b { (a, b) } else { (b, a) };
            edge_set.insert(key, class);
        }
    }
    let vertices: BTreeSet<LatticeVertex> = edge_set.keys().flat_map(|&(a, b)| [a, b]).collect();
    let coords: Vec<LatticeVertex> = vertices.into_iter().collect();
    let index: HashMap<LatticeVertex, usize> =
        coords.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let edges = edge_set
        .into_iter()
        .map(|((a, b), class)| (index[&a], index[&b], class));
    let mut g = MolGraph::from_parts(coords, edges).expect("lattice union is a simple graph");
    g.wrap = wrap;
    g
}

/// Lattice hexagons whose six edges all belong to `g`. Only meaningful for
/// plane (unwrapped) graphs.
pub fn hexagonal_faces(g: &MolGraph) -> BTreeSet<HexCoord> {
    let mut out = BTreeSet::new();
    for v in g.coords() {
        for ay in [v.y - 1, v.y] {
            for ax in v.x - 2..=v.x {
                if (ax + ay).rem_euclid(2) != 0 {
                    continue;
                }
                let h = HexCoord::new((ax - ay).div_euclid(2), ay);
                if h.edges().iter().all(|&(a, b)| g.has_lattice_edge(a, b)) {
                    out.insert(h);
                }
            }
        }
    }
    out
}

/// Exact distances from `src` to every vertex within distance `cap`.
pub fn bfs_distances_capped(g: &MolGraph, src: usize, cap: u32) -> Result<BTreeMap<usize, u32>> {
    g.check_id(src)?;
    let mut dist = BTreeMap::new();
    dist.insert(src, 0);
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        let d = dist[&u];
        if d == cap {
            continue;
        }
        for &v in g.neighbors(u) {
            if let std::collections::btree_map::Entry::Vacant(e) = dist.entry(v) {
                e.insert(d + 1);
                queue.push_back(v);
            }
        }
    }
    Ok(dist)
}

/// `G - E_d`: same vertices, edges of class `d` removed.
pub fn delete_direction(g: &MolGraph, d: DirectionClass) -> MolGraph {
    let edges = g
        .edges
        .iter()
        .filter(|e| e.class != d)
        .map(|e| (e.u, e.v, e.class));
    let mut out =
        MolGraph::from_parts(g.coords.clone(), edges).expect("subgraph of a simple graph");
    out.wrap = g.wrap;
    out
}

/// Connected components, each sorted, ordered by smallest contained id.
pub fn connected_components(g: &MolGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                    stack.push(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "shape", content = "n")]
pub enum ComponentShape {
    Path(usize),
    Cycle(usize),
    Other,
}

/// Shape of a connected vertex set, from its degree census.
pub fn component_shape(g: &MolGraph, comp: &[usize]) -> Result<ComponentShape> {
    if comp.is_empty() {
        return Err(Error::NotConnected);
    }
    for &v in comp {
        g.check_id(v)?;
    }
    let members: BTreeSet<usize> = comp.iter().copied().collect();
    let inner_degree = |v: usize| {
        g.neighbors(v)
            .iter()
            .filter(|w| members.contains(w))
            .count()
    };

    let mut seen = BTreeSet::from([comp[0]]);
    let mut stack = vec![comp[0]];
    while let Some(u) = stack.pop() {
        for &v in g.neighbors(u) {
            if members.contains(&v) && seen.insert(v) {
                stack.push(v);
            }
        }
    }
    if seen.len() != members.len() {
        return Err(Error::NotConnected);
    }

    let n = members.len();
    let degrees: Vec<usize> = members.iter().map(|&v| inner_degree(v)).collect();
    let m = degrees.iter().sum::<usize>() / 2;
    if degrees.iter().any(|&d| d > 2) {
        return Ok(ComponentShape::Other);
    }
    Ok(if m + 1 == n {
        ComponentShape::Path(n)
    } else if m == n && n >= 3 {
        ComponentShape::Cycle(n)
    } else {
        ComponentShape::Other
    })
}

/// Two-colouring by BFS; `true` iff the graph has no odd cycle.
pub fn is_bipartite(g: &MolGraph) -> bool {
    let n = g.vertex_count();
    let mut colour: Vec<Option<bool>> = vec![None; n];
    for s in 0..n {
        if colour[s].is_some() {
            continue;
        }
        colour[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let cu = colour[u].unwrap();
            for &v in g.neighbors(u) {
                match colour[v] {
                    None => {
                        colour[v] = Some(!cu);
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

/// Length of a shortest cycle, or `None` for a forest.
pub fn girth(g: &MolGraph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        parent[s] = usize::MAX;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                break;
            }
            for &v in g.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if parent[u] != v {
                    let len = dist[u] + dist[v] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// `true` iff no two edges of the same class share an endpoint.
pub fn same_class_edges_disjoint(g: &MolGraph) -> bool {
    let mut used = vec![[false; 3]; g.vertex_count()];
    for e in g.edges() {
        let c = e.class.index();
        if used[e.u][c] || used[e.v][c] {
            return false;
        }
        used[e.u][c] = true;
        used[e.v][c] = true;
    }
    true
}
