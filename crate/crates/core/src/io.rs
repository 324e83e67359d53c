//! JSON file formats for tilings, socks and polynomials.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::charges::LaurentPoly;
use crate::lattice::{Cell, Cube};
use crate::region::{build_duplex, parse_base, DuplexRegion, RegionError};
use crate::sock::{Cycle, Sock, SockError};
use crate::tiling::{validate_tiling, Domino, Tiling, TilingError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Region(#[from] RegionError),
    #[error(transparent)]
    Tiling(#[from] TilingError),
    #[error(transparent)]
    Sock(#[from] SockError),
}

/// `{"base": [...ascii lines...], "dominoes": [[[x,y,z],[x,y,z]], ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TilingFile {
    pub base: Vec<String>,
    pub dominoes: Vec<[[i32; 3]; 2]>,
}

fn cube_triple(c: Cube) -> [i32; 3] {
    [c.x, c.y, c.z]
}

impl TilingFile {
    pub fn new(region: &DuplexRegion, tiling: &Tiling) -> TilingFile {
        TilingFile {
            base: region.base().to_ascii_lines(),
            dominoes: tiling
                .dominoes()
                .iter()
                .map(|d| d.cubes().map(cube_triple))
                .collect(),
        }
    }

    /// Rebuild and validate the region and tiling.
    pub fn decode(&self) -> Result<(DuplexRegion, Tiling), FormatError> {
        let region = build_duplex(parse_base(&self.base.join("\n"))?);
        let tiling = self
            .dominoes
            .iter()
            .map(|[a, b]| Domino::new(Cube::new(a[0], a[1], a[2]), Cube::new(b[0], b[1], b[2])))
            .collect::<Result<Tiling, _>>()?;
        validate_tiling(&region, &tiling)?;
        Ok((region, tiling))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<TilingFile, FormatError> {
        Ok(serde_json::from_str(text)?)
    }
}

/// One tiling as a JSON line.
pub fn tiling_to_json(region: &DuplexRegion, tiling: &Tiling) -> String {
    TilingFile::new(region, tiling).to_json()
}

pub fn tiling_from_json(text: &str) -> Result<(DuplexRegion, Tiling), FormatError> {
    TilingFile::from_json(text)?.decode()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleFile {
    pub vertices: Vec<[i32; 2]>,
    pub floors: Vec<u8>,
}

/// `{"jewels": [[x,y],...], "cycles": [{"vertices": [...], "floors": [...]}, ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SockFile {
    pub jewels: Vec<[i32; 2]>,
    pub cycles: Vec<CycleFile>,
}

impl SockFile {
    pub fn new(sock: &Sock) -> SockFile {
        SockFile {
            jewels: sock.jewels().iter().map(|v| [v.x, v.y]).collect(),
            cycles: sock
                .cycles()
                .iter()
                .map(|c| CycleFile {
                    vertices: c.vertices().iter().map(|v| [v.x, v.y]).collect(),
                    floors: c.floors().to_vec(),
                })
                .collect(),
        }
    }

    pub fn decode(&self) -> Result<Sock, FormatError> {
        let jewels: BTreeSet<Cell> = self.jewels.iter().map(|&[x, y]| Cell::new(x, y)).collect();
        let cycles = self
            .cycles
            .iter()
            .map(|c| {
                Cycle::new(
                    c.vertices.iter().map(|&[x, y]| Cell::new(x, y)).collect(),
                    c.floors.clone(),
                )
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Sock::new(jewels, cycles)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<SockFile, FormatError> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Sorted `[exponent, coefficient]` pairs.
pub fn poly_to_pairs(p: &LaurentPoly) -> Vec<[i64; 2]> {
    p.terms().map(|(e, c)| [e, c]).collect()
}

pub fn poly_from_pairs(pairs: &[[i64; 2]]) -> LaurentPoly {
    LaurentPoly::from_terms(pairs.iter().map(|&[e, c]| (e, c)))
}
