//! Wiener polarity index: the number of unordered vertex pairs at distance
//! three, computed by brute force, by the cut decomposition, and by closed
//! formulas for the supported families.

use rayon::prelude::*;
use serde::Serialize;

use crate::benzenoid::ExternalHexTally;
use crate::error::{Error, Result};
use crate::hexcore::{
    component_shape, connected_components, delete_direction, ComponentShape, DirectionClass,
    MolGraph,
};

/// Scratch space for repeated capped BFS runs.
struct Frontier {
    stamp: Vec<u32>,
    dist: Vec<u32>,
    round: u32,
    queue: Vec<usize>,
}

impl Frontier {
    fn new(n: usize) -> Self {
        Self {
            stamp: vec![0; n],
            dist: vec![0; n],
            round: 0,
            queue: Vec::new(),
        }
    }

    /// Adds `1` to `counts[d - 1]` for every vertex at distance `1 <= d <= cap`
    /// from `src`.
    fn census(&mut self, g: &MolGraph, src: usize, cap: u32, counts: &mut [u64]) {
        self.round += 1;
        let round = self.round;
        self.queue.clear();
        self.queue.push(src);
        self.stamp[src] = round;
        self.dist[src] = 0;
        let mut head = 0;
        while head < self.queue.len() {
            let u = self.queue[head];
            head += 1;
            let du = self.dist[u];
            if du == cap {
                continue;
            }
            for &v in g.neighbors(u) {
                if self.stamp[v] != round {
                    self.stamp[v] = round;
                    self.dist[v] = du + 1;
                    counts[du as usize] += 1;
                    self.queue.push(v);
                }
            }
        }
    }
}

/// Ordered pair counts at distances `1..=cap`, summed over all sources.
fn ordered_census(g: &MolGraph, cap: u32) -> Vec<u64> {
    let n = g.vertex_count();
    let width = cap as usize;
    (0..n)
        .into_par_iter()
        .fold(
            || (Frontier::new(n), vec![0u64; width]),
            |(mut f, mut counts), src| {
                f.census(g, src, cap, &mut counts);
                (f, counts)
            },
        )
        .map(|(_, counts)| counts)
        .reduce(
            || vec![0u64; width],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        )
}

/// Unordered pair counts at each distance `1..=cap`.
pub fn distance_distribution(g: &MolGraph, cap: u32) -> Result<Vec<u64>> {
    if cap < 1 {
        return Err(Error::ParamOutOfRange(
            "distance cap must be at least 1".into(),
        ));
    }
    let ordered = ordered_census(g, cap);
    Ok(ordered
        .into_iter()
        .map(|c| {
            assert!(c % 2 == 0, "ordered pair count {c} is odd");
            c / 2
        })
        .collect())
}

pub fn wp_bruteforce(g: &MolGraph) -> u64 {
    let ordered = ordered_census(g, 3)[2];
    assert!(
        ordered.is_multiple_of(2),
        "ordered pair count {ordered} is odd"
    );
    ordered / 2
}

/// Polarity of the path on `n` vertices.
pub fn wp_path_formula(n: u64) -> Result<u64> {
    match n {
        0 => Err(Error::ParamOutOfRange(
            "path needs at least one vertex".into(),
        )),
        1..=2 => Ok(0),
        _ => Ok(n - 3),
    }
}

/// Polarity of the cycle on `n` vertices.
pub fn wp_cycle_formula(n: u64) -> Result<u64> {
    match n {
        0..=2 => Err(Error::ParamOutOfRange(format!(
            "cycle needs at least 3 vertices, got {n}"
        ))),
        3..=5 => Ok(0),
        6 => Ok(3),
        _ => Ok(n),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentScore {
    pub shape: ComponentShape,
    pub wp: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutDecomposition {
    /// Components of `G - E_i`, indexed by [`DirectionClass::index`].
    pub classes: [Vec<ComponentScore>; 3],
    pub hexagon_count: u64,
    pub external: ExternalHexTally,
}

impl CutDecomposition {
    pub fn components(&self, d: DirectionClass) -> &[ComponentScore] {
        &self.classes[d.index()]
    }

    /// Sum of the polarities of all components over all three classes.
    pub fn component_term(&self) -> u64 {
        self.classes.iter().flatten().map(|c| c.wp).sum()
    }

    pub fn total(&self) -> u64 {
        3 * self.hexagon_count + self.external.weighted() as u64 + self.component_term()
    }
}

pub fn cut_decomposition(
    g: &MolGraph,
    hexagon_count: u64,
    external: ExternalHexTally,
) -> Result<CutDecomposition> {
    let mut classes: [Vec<ComponentScore>; 3] = Default::default();
    for d in DirectionClass::ALL {
        let cut = delete_direction(g, d);
        for comp in connected_components(&cut) {
            let shape = component_shape(&cut, &comp)?;
            let wp = match shape {
                ComponentShape::Path(n) => wp_path_formula(n as u64)?,
                ComponentShape::Cycle(n) => wp_cycle_formula(n as u64)?,
                ComponentShape::Other => {
                    return Err(Error::MalformedComponent {
                        direction: d,
                        vertex: comp[0],
                    })
                }
            };
            classes[d.index()].push(ComponentScore { shape, wp });
        }
    }
    Ok(CutDecomposition {
        classes,
        hexagon_count,
        external,
    })
}

pub fn wp_cut_method(g: &MolGraph, hexagon_count: u64, external: ExternalHexTally) -> Result<u64> {
    Ok(cut_decomposition(g, hexagon_count, external)?.total())
}

/// Closed form for any benzenoid system with `h` hexagons and external
/// tally `(h1, h2, h3)`.
pub fn wp_benzenoid_closed(h: u64, h1: u64, h2: u64, h3: u64) -> Result<u64> {
    if h < 1 {
        return Err(Error::ParamOutOfRange(
            "benzenoid needs at least one hexagon".into(),
        ));
    }
    Ok(9 * h + h1 + 2 * h2 + 3 * h3 - 6)
}

pub fn wp_zigzag_closed(r: u64, h: u64) -> Result<u64> {
    if r < 1 || h < 3 {
        return Err(Error::ParamOutOfRange(format!(
            "zigzag tube needs r >= 1 and h >= 3, got r={r} h={h}"
        )));
    }
    Ok(if h == 3 { 24 * r - 3 } else { 9 * r * h })
}

pub fn wp_armchair_closed(r: u64, h: u64) -> Result<u64> {
    if r < 4 || !r.is_multiple_of(2) || h < 1 {
        return Err(Error::ParamOutOfRange(format!(
            "armchair tube needs an even r >= 4 and h >= 1, got r={r} h={h}"
        )));
    }
    Ok(9 * r * h + r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::benzenoid::{build_benzenoid, classify_external_hexagons};
    use crate::hexcore::{build_graph, HexCoord, LatticeVertex};
    use crate::tubulene::build_zigzag;
    use std::collections::BTreeSet;

    fn hexes(hs: &[(i64, i64)]) -> BTreeSet<HexCoord> {
        hs.iter().map(|&(q, r)| HexCoord::new(q, r)).collect()
    }

    fn path(n: usize) -> MolGraph {
        let coords = (0..n as i64).map(|x| LatticeVertex::new(x, 0)).collect();
        let edges = (1..n).map(|i| {
            let class = if i % 2 == 1 {
                DirectionClass::D2
            } else {
                DirectionClass::D3
            };
            (i - 1, i, class)
        });
        MolGraph::from_parts(coords, edges).unwrap()
    }

    #[test]
    fn path_and_cycle_formulas() {
        assert_eq!(wp_path_formula(2), Ok(0));
        assert_eq!(wp_path_formula(3), Ok(0));
        assert_eq!(wp_path_formula(10), Ok(7));
        assert!(wp_path_formula(0).is_err());
        assert_eq!(wp_cycle_formula(5), Ok(0));
        assert_eq!(wp_cycle_formula(6), Ok(3));
        assert_eq!(wp_cycle_formula(9), Ok(9));
        assert!(wp_cycle_formula(2).is_err());
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(wp_bruteforce(&build_graph(&hexes(&[(0, 0)]))), 3);
        assert_eq!(wp_bruteforce(&path(2)), 0);
        assert_eq!(wp_bruteforce(&build_graph(&hexes(&[(0, 0), (1, 0)]))), 12);
    }

    #[test]
    fn distributions() {
        let benzene = build_graph(&hexes(&[(0, 0)]));
        assert_eq!(distance_distribution(&benzene, 3), Ok(vec![6, 6, 3]));
        assert_eq!(distance_distribution(&path(4), 3), Ok(vec![3, 2, 1]));
        let naph = build_graph(&hexes(&[(0, 0), (1, 0)]));
        assert_eq!(distance_distribution(&naph, 3), Ok(vec![11, 14, 12]));
        assert!(distance_distribution(&naph, 0).is_err());
    }

    #[test]
    fn decomposition_of_benzene_and_naphthalene() {
        let b = build_benzenoid(&hexes(&[(0, 0)])).unwrap();
        let dec = cut_decomposition(b.graph(), 1, ExternalHexTally::default()).unwrap();
        for d in DirectionClass::ALL {
            let want = vec![
                ComponentScore {
                    shape: ComponentShape::Path(3),
                    wp: 0
                };
                2
            ];
            assert_eq!(dec.components(d), want.as_slice());
        }
        assert_eq!(dec.component_term(), 0);
        assert_eq!(dec.total(), 3);

        let n = build_benzenoid(&hexes(&[(0, 0), (1, 0)])).unwrap();
        let tally = classify_external_hexagons(&n).unwrap();
        let dec = cut_decomposition(n.graph(), 2, tally).unwrap();
        let d1 = dec.components(DirectionClass::D1);
        assert_eq!(
            d1,
            vec![
                ComponentScore {
                    shape: ComponentShape::Path(5),
                    wp: 2
                };
                2
            ]
            .as_slice()
        );
        for d in [DirectionClass::D2, DirectionClass::D3] {
            assert_eq!(dec.components(d).iter().map(|c| c.wp).sum::<u64>(), 1);
        }
        assert_eq!(wp_cut_method(n.graph(), 2, tally), Ok(12));
    }

    #[test]
    fn decomposition_of_zigzag_3_4() {
        let t = build_zigzag(3, 4).unwrap();
        let dec = cut_decomposition(t.graph(), 12, ExternalHexTally::default()).unwrap();
        assert_eq!(
            dec.components(DirectionClass::D1),
            vec![
                ComponentScore {
                    shape: ComponentShape::Cycle(8),
                    wp: 8
                };
                4
            ]
            .as_slice()
        );
        for d in [DirectionClass::D2, DirectionClass::D3] {
            assert_eq!(
                dec.components(d),
                vec![
                    ComponentScore {
                        shape: ComponentShape::Path(8),
                        wp: 5
                    };
                    4
                ]
                .as_slice()
            );
        }
        assert_eq!(dec.component_term(), 72);
        assert_eq!(dec.total(), 108);
    }

    #[test]
    fn malformed_component_is_an_error() {
        // All three edges at the centre share class D2, so removing D1 leaves
        // a claw.
        let coords = vec![
            LatticeVertex::new(0, 0),
            LatticeVertex::new(1, 0),
            LatticeVertex::new(2, 0),
            LatticeVertex::new(0, 1),
        ];
        let g = MolGraph::from_parts(
            coords,
            [
                (0, 1, DirectionClass::D2),
                (0, 2, DirectionClass::D2),
                (0, 3, DirectionClass::D2),
            ],
        )
        .unwrap();
        assert_eq!(
            wp_cut_method(&g, 0, ExternalHexTally::default()),
            Err(Error::MalformedComponent {
                direction: DirectionClass::D1,
                vertex: 0
            })
        );
    }

    #[test]
    fn closed_formulas() {
        assert_eq!(wp_benzenoid_closed(8, 1, 1, 1), Ok(72));
        assert_eq!(wp_benzenoid_closed(1, 0, 0, 0), Ok(3));
        assert_eq!(wp_benzenoid_closed(7, 0, 0, 0), Ok(57));
        assert!(wp_benzenoid_closed(0, 0, 0, 0).is_err());

        assert_eq!(wp_zigzag_closed(3, 4), Ok(108));
        assert_eq!(wp_zigzag_closed(2, 3), Ok(45));
        assert_eq!(wp_zigzag_closed(1, 3), Ok(21));
        assert!(wp_zigzag_closed(1, 2).is_err());
        assert!(wp_zigzag_closed(0, 4).is_err());

        assert_eq!(wp_armchair_closed(6, 4), Ok(222));
        assert_eq!(wp_armchair_closed(4, 1), Ok(40));
        assert!(wp_armchair_closed(5, 1).is_err());
        assert!(wp_armchair_closed(4, 0).is_err());
    }
}
