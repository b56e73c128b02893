use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::Subcommand;
use serde_json::{json, Value};

use wpolar::benzenoid::{
    benzenoid_stats, build_benzenoid, classify_external_hexagons, random_benzenoid,
    BenzenoidSystem, ExternalHexTally,
};
use wpolar::hexcore::{hexagonal_faces, MolGraph};
use wpolar::io::{graph_from_json, parse_hex_set};
use wpolar::tubulene::{
    build_armchair, build_zigzag, classify_external_hexagons_tub, tubulene_stats, Tubulene,
};
use wpolar::Error;

use crate::CliError;

#[derive(Debug, Clone, Subcommand)]
pub enum StructureArg {
    /// Benzenoid system from a hexagon-set file (one `q r` pair per line).
    Benzenoid {
        #[arg(long, value_name = "PATH")]
        hexes: PathBuf,
    },
    /// Random benzenoid system with H hexagons.
    Random {
        #[arg(allow_negative_numbers = true)]
        h: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Zig-zag nanotube with R layers of H hexagons.
    Zigzag {
        #[arg(allow_negative_numbers = true)]
        r: i64,
        #[arg(allow_negative_numbers = true)]
        h: i64,
    },
    /// Armchair nanotube with R columns of H hexagons.
    Armchair {
        #[arg(allow_negative_numbers = true)]
        r: i64,
        #[arg(allow_negative_numbers = true)]
        h: i64,
    },
    /// Graph exchange JSON (`-` reads standard input).
    Graph { path: PathBuf },
}

pub enum Structure {
    Benzenoid(BenzenoidSystem),
    Tube(Tubulene),
    Raw(MolGraph),
}

impl Structure {
    pub fn graph(&self) -> &MolGraph {
        match self {
            Structure::Benzenoid(b) => b.graph(),
            Structure::Tube(t) => t.graph(),
            Structure::Raw(g) => g,
        }
    }

    /// Hexagon count and external tally. Raw graphs use the hexagonal faces
    /// found in the graph itself.
    pub fn cut_inputs(&self) -> Result<(u64, ExternalHexTally), Error> {
        match self {
            Structure::Benzenoid(b) => {
                Ok((b.hexagon_count() as u64, classify_external_hexagons(b)?))
            }
            Structure::Tube(t) => {
                Ok((t.hexagon_count() as u64, classify_external_hexagons_tub(t)?))
            }
            Structure::Raw(g) => {
                let faces = hexagonal_faces(g);
                let tally = match build_benzenoid(&faces) {
                    Ok(b) if b.graph() == g => classify_external_hexagons(&b)?,
                    _ => ExternalHexTally::default(),
                };
                Ok((faces.len() as u64, tally))
            }
        }
    }

    pub fn stats(&self) -> Result<Value, Error> {
        Ok(match self {
            Structure::Benzenoid(b) => serde_json::to_value(benzenoid_stats(b)?).unwrap(),
            Structure::Tube(t) => serde_json::to_value(tubulene_stats(t)?).unwrap(),
            Structure::Raw(g) => json!({"n": g.vertex_count(), "m": g.edge_count()}),
        })
    }
}

fn non_negative(name: &str, v: i64) -> Result<usize, Error> {
    usize::try_from(v)
        .map_err(|_| Error::ParamOutOfRange(format!("{name} must be non-negative, got {v}")))
}

pub fn read_input(path: &Path) -> Result<String, CliError> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::io(path, e))
    }
}

pub fn describe(arg: &StructureArg) -> Value {
    match arg {
        StructureArg::Benzenoid { hexes } => {
            json!({"family": "benzenoid", "hexes": hexes.display().to_string()})
        }
        StructureArg::Random { h, seed } => {
            json!({"family": "benzenoid", "random": {"h": h, "seed": seed}})
        }
        StructureArg::Zigzag { r, h } => json!({"family": "zigzag", "r": r, "h": h}),
        StructureArg::Armchair { r, h } => json!({"family": "armchair", "r": r, "h": h}),
        StructureArg::Graph { path } => {
            json!({"family": "graph", "path": path.display().to_string()})
        }
    }
}

pub fn load(arg: &StructureArg) -> Result<Structure, CliError> {
    Ok(match arg {
        StructureArg::Benzenoid { hexes } => {
            let set = parse_hex_set(&read_input(hexes)?)?;
            Structure::Benzenoid(build_benzenoid(&set)?)
        }
        StructureArg::Random { h, seed } => {
            let h = non_negative("h", *h)?;
            Structure::Benzenoid(random_benzenoid(h, *seed)?)
        }
        StructureArg::Zigzag { r, h } => Structure::Tube(build_zigzag(
            non_negative("r", *r)?,
            non_negative("h", *h)?,
        )?),
        StructureArg::Armchair { r, h } => Structure::Tube(build_armchair(
            non_negative("r", *r)?,
            non_negative("h", *h)?,
        )?),
        StructureArg::Graph { path } => Structure::Raw(graph_from_json(&read_input(path)?)?),
    })
}
