//! `wpolar` computes the Wiener polarity index (the number of vertex pairs at
//! distance three) of benzenoid systems and zig-zag/armchair nanotubes.
//!
//! Every value is available three ways: brute-force BFS over the graph, the
//! cut decomposition over the three edge-direction classes, and closed
//! formulas in the hexagon count and the external-hexagon tally. The
//! [`checks`] module cross-validates the three along with the structural
//! identities they rely on.
//!
//! ```
//! use std::collections::BTreeSet;
//! use wpolar::benzenoid::{build_benzenoid, classify_external_hexagons};
//! use wpolar::hexcore::HexCoord;
//! use wpolar::polarity::{wp_benzenoid_closed, wp_bruteforce, wp_cut_method};
//!
//! let hexes: BTreeSet<_> = [HexCoord::new(0, 0), HexCoord::new(1, 0)].into_iter().collect();
//! let naphthalene = build_benzenoid(&hexes).unwrap();
//! let tally = classify_external_hexagons(&naphthalene).unwrap();
//!
//! assert_eq!(wp_bruteforce(naphthalene.graph()), 12);
//! assert_eq!(wp_cut_method(naphthalene.graph(), 2, tally).unwrap(), 12);
//! assert_eq!(wp_benzenoid_closed(2, 0, 0, 0).unwrap(), 12);
//! ```

pub mod benzenoid;
pub mod checks;
pub mod error;
pub mod hexcore;
pub mod io;
pub mod polarity;
pub mod tubulene;

pub use error::{Error, Result};
