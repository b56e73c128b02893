//! Zig-zag and armchair open-ended nanotubes, built as quotients of the
//! plane lattice under a wrap translation.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::benzenoid::{tally_external, ExternalHexTally};
use crate::error::{Error, Result};
use crate::hexcore::{build_graph_wrapped, HexCoord, MolGraph, Wrap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TubeKind {
    /// `r` layers of `h` hexagons; each layer is a ring around the axis.
    ZigZag { r: usize, h: usize },
    /// `r` columns of `h` hexagons running along the axis.
    Armchair { r: usize, h: usize },
}

impl TubeKind {
    pub fn name(self) -> &'static str {
        match self {
            TubeKind::ZigZag { .. } => "zigzag",
            TubeKind::Armchair { .. } => "armchair",
        }
    }

    pub fn params(self) -> (usize, usize) {
        match self {
            TubeKind::ZigZag { r, h } | TubeKind::Armchair { r, h } => (r, h),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tubulene {
    kind: TubeKind,
    hexes: BTreeSet<HexCoord>,
    graph: MolGraph,
    wrap: Wrap,
}

impl Tubulene {
    pub fn kind(&self) -> TubeKind {
        self.kind
    }

    pub fn graph(&self) -> &MolGraph {
        &self.graph
    }

    pub fn wrap(&self) -> Wrap {
        self.wrap
    }

    /// Canonical representatives of the tube's hexagons.
    pub fn hexes(&self) -> &BTreeSet<HexCoord> {
        &self.hexes
    }

    pub fn hexagon_count(&self) -> usize {
        self.hexes.len()
    }
}

fn to_i64(v: usize) -> i64 {
    i64::try_from(v).expect("tube parameter fits in i64")
}

/// `ZT(r, h)`: hexagons `(q, row)` for `q < h`, `row < r`, wrapped by `h`
/// hexagons along the `q` axis.
pub fn build_zigzag(r: usize, h: usize) -> Result<Tubulene> {
    if r < 1 {
        return Err(Error::ParamOutOfRange(format!(
            "zigzag tube needs r >= 1, got {r}"
        )));
    }
    if h < 3 {
        return Err(Error::ParamOutOfRange(format!(
            "zigzag tube needs h >= 3, got {h}"
        )));
    }
    let (r, h) = (to_i64(r), to_i64(h));
    let wrap = Wrap::new(HexCoord::new(h, 0))?;
    let hexes: BTreeSet<HexCoord> = (0..r)
        .flat_map(|row| (0..h).map(move |q| HexCoord::new(q, row)))
        .collect();
    Ok(Tubulene {
        kind: TubeKind::ZigZag {
            r: r as usize,
            h: h as usize,
        },
        graph: build_graph_wrapped(&hexes, wrap),
        hexes,
        wrap,
    })
}

/// `AT(r, h)`: column `c` starts at `(c, -(c / 2))` and stacks `h` hexagons
/// along `(0, 1)`; odd columns sit half a hexagon above their neighbours.
/// Wrapped by `(r, -r / 2)`.
pub fn build_armchair(r: usize, h: usize) -> Result<Tubulene> {
    if r < 4 || !r.is_multiple_of(2) {
        return Err(Error::ParamOutOfRange(format!(
            "armchair tube needs an even r >= 4, got {r}"
        )));
    }
    if h < 1 {
        return Err(Error::ParamOutOfRange(format!(
            "armchair tube needs h >= 1, got {h}"
        )));
    }
    let (r, h) = (to_i64(r), to_i64(h));
    let wrap = Wrap::new(HexCoord::new(r, -r / 2))?;
    let hexes: BTreeSet<HexCoord> = (0..r)
        .flat_map(|c| (0..h).map(move |k| HexCoord::new(c, k - c.div_euclid(2))))
        .collect();
    Ok(Tubulene {
        kind: TubeKind::Armchair {
            r: r as usize,
            h: h as usize,
        },
        graph: build_graph_wrapped(&hexes, wrap),
        hexes,
        wrap,
    })
}

/// External hexagons at the two open ends, tallied by largest intersection.
pub fn classify_external_hexagons_tub(t: &Tubulene) -> Result<ExternalHexTally> {
    tally_external(&t.graph, &t.hexes, Some(t.wrap))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TubuleneStats {
    pub kind: &'static str,
    pub r: usize,
    pub h: usize,
    pub n: usize,
    pub hexagons: usize,
    pub external: [usize; 3],
}

pub fn tubulene_stats(t: &Tubulene) -> Result<TubuleneStats> {
    let (r, h) = t.kind.params();
    Ok(TubuleneStats {
        kind: t.kind.name(),
        r,
        h,
        n: t.graph.vertex_count(),
        hexagons: t.hexagon_count(),
        external: classify_external_hexagons_tub(t)?.as_array(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hexcore::{
        component_shape, connected_components, delete_direction, girth, is_bipartite,
        ComponentShape, DirectionClass,
    };

    fn shapes(g: &MolGraph, d: DirectionClass) -> Vec<ComponentShape> {
        let cut = delete_direction(g, d);
        connected_components(&cut)
            .iter()
            .map(|c| component_shape(&cut, c).unwrap())
            .collect()
    }

    #[test]
    fn zigzag_3_4() {
        let t = build_zigzag(3, 4).unwrap();
        assert_eq!(t.graph().vertex_count(), 32);
        assert_eq!(t.hexagon_count(), 12);
        assert_eq!(
            shapes(t.graph(), DirectionClass::D1),
            vec![ComponentShape::Cycle(8); 4]
        );
        assert_eq!(
            shapes(t.graph(), DirectionClass::D2),
            vec![ComponentShape::Path(8); 4]
        );
        assert_eq!(
            shapes(t.graph(), DirectionClass::D3),
            vec![ComponentShape::Path(8); 4]
        );
    }

    #[test]
    fn zigzag_small_and_invalid() {
        let t = build_zigzag(1, 3).unwrap();
        assert_eq!((t.graph().vertex_count(), t.hexagon_count()), (12, 3));
        assert!(matches!(build_zigzag(1, 2), Err(Error::ParamOutOfRange(_))));
        assert!(matches!(build_zigzag(0, 5), Err(Error::ParamOutOfRange(_))));
    }

    #[test]
    fn armchair_6_4() {
        let t = build_armchair(6, 4).unwrap();
        assert_eq!(t.graph().vertex_count(), 60);
        assert_eq!(t.hexagon_count(), 24);
        assert_eq!(
            shapes(t.graph(), DirectionClass::D2),
            vec![ComponentShape::Path(10); 6]
        );
        for d in [DirectionClass::D1, DirectionClass::D3] {
            let s = shapes(t.graph(), d);
            assert_eq!(s.len(), 3);
            let total: usize = s
                .iter()
                .map(|c| match c {
                    ComponentShape::Path(n) => *n,
                    other => panic!("{other:?}"),
                })
                .sum();
            assert_eq!(total, 60);
        }
    }

    #[test]
    fn armchair_small_and_invalid() {
        let t = build_armchair(4, 1).unwrap();
        assert_eq!((t.graph().vertex_count(), t.hexagon_count()), (16, 4));
        assert!(matches!(
            build_armchair(5, 2),
            Err(Error::ParamOutOfRange(_))
        ));
        assert!(matches!(
            build_armchair(2, 2),
            Err(Error::ParamOutOfRange(_))
        ));
        assert!(matches!(
            build_armchair(4, 0),
            Err(Error::ParamOutOfRange(_))
        ));
    }

    #[test]
    fn external_tallies() {
        for (r, h) in [(1, 3), (3, 4), (2, 7)] {
            let t = build_zigzag(r, h).unwrap();
            assert_eq!(
                classify_external_hexagons_tub(&t),
                Ok(ExternalHexTally::new(0, 0, 0))
            );
        }
        for (r, h) in [(4, 1), (6, 4), (8, 2)] {
            let t = build_armchair(r, h).unwrap();
            assert_eq!(
                classify_external_hexagons_tub(&t),
                Ok(ExternalHexTally::new(r, 0, 0))
            );
        }
    }

    #[test]
    fn bipartite_with_girth_six() {
        for t in [build_zigzag(2, 3).unwrap(), build_armchair(4, 2).unwrap()] {
            assert!(is_bipartite(t.graph()));
            assert_eq!(girth(t.graph()), Some(6));
        }
    }

    #[test]
    fn wrap_vectors() {
        assert_eq!(build_zigzag(2, 5).unwrap().wrap().vertex_offset().x, 10);
        let w = build_armchair(6, 1).unwrap().wrap().vertex_offset();
        assert_eq!((w.x, w.y), (9, -3));
    }
}
