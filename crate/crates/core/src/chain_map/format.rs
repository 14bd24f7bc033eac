//! `.cm` chain-map files.
//!
//! One line per source face:
//!
//! ```text
//! face 0 1 -> 0 3 ; 3 1
//! face 2 ->  2
//! face 1 2 ->
//! ```
//!
//! The right-hand side is a `;`-separated list of target simplices (empty
//! for the zero chain). Every source face must appear exactly once.

use std::collections::BTreeMap;

use crate::chain_map::{Chain, ChainMap};
use crate::error::{Error, Result};
use crate::homology::{Simplex, SimplicialComplex};
use crate::set_system::parse_usize;

fn simplex(text: &str, line: usize) -> Result<Simplex> {
    let vs = text
        .split_whitespace()
        .map(|w| parse_usize(Some(w), line, "vertex"))
        .collect::<Result<Vec<_>>>()?;
    Simplex::new(vs).map_err(|e| Error::parse(line, e.to_string()))
}

pub fn parse_chain_map(text: &str, source: &SimplicialComplex, target: &SimplicialComplex) -> Result<ChainMap> {
    let mut images = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let rest = body
            .strip_prefix("face")
            .filter(|r| r.starts_with(char::is_whitespace))
            .ok_or_else(|| Error::parse(line, "expected `face <vertices> -> <chain>`"))?;
        let (lhs, rhs) = rest.split_once("->").ok_or_else(|| Error::parse(line, "missing `->`"))?;
        let face = simplex(lhs, line)?;
        if !source.contains(face) {
            return Err(Error::parse(line, format!("{face:?} is not a face of the source")));
        }
        let parts: Vec<&str> = rhs.split(';').map(str::trim).collect();
        let simplices = if parts.len() == 1 && parts[0].is_empty() {
            Vec::new()
        } else {
            parts.iter().map(|p| simplex(p, line)).collect::<Result<Vec<_>>>()?
        };
        let chain = Chain::new(face.dim(), simplices).map_err(|e| Error::parse(line, e.to_string()))?;
        if images.insert(face, chain).is_some() {
            return Err(Error::parse(line, format!("duplicate image for {face:?}")));
        }
    }
    ChainMap::new(source.clone(), target.clone(), images)
}

pub fn chain_map_to_text(f: &ChainMap) -> String {
    let join = |s: Simplex| s.vertices().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
    let mut out = String::new();
    for (face, chain) in f.images() {
        let rhs: Vec<String> = chain.simplices().map(join).collect();
        out.push_str(&format!("face {} -> {}\n", join(face), rhs.join(" ; ")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{named, skeleton_simplex};

    #[test]
    fn roundtrip() {
        let k4 = skeleton_simplex(3, 1).unwrap();
        let f = ChainMap::induced(k4.clone(), named::disk4(), &[0, 1, 2, 3]).unwrap();
        let text = chain_map_to_text(&f);
        assert!(text.contains("face 0 1 -> 0 1\n"));
        assert_eq!(parse_chain_map(&text, &k4, &named::disk4()).unwrap(), f);
    }

    #[test]
    fn zero_chain_and_errors() {
        let edge = SimplicialComplex::from_lists(2, [vec![0, 1]]).unwrap();
        let ok = "face 0 -> 0\nface 1 -> 0\nface 0 1 ->\n";
        let f = parse_chain_map(ok, &edge, &edge).unwrap();
        assert!(f.image(Simplex::new([0, 1]).unwrap()).unwrap().is_zero());

        assert!(parse_chain_map("face 0 -> 0\nface 1 -> 1\n", &edge, &edge).is_err());
        assert!(parse_chain_map("face 0 -> 0\nface 0 -> 1\nface 1 -> 1\nface 0 1 ->\n", &edge, &edge).is_err());
        assert!(parse_chain_map("face 0 1 -> 0\nface 0 -> 0\nface 1 -> 1\n", &edge, &edge).is_err());
        assert!(parse_chain_map("map 0 -> 0\n", &edge, &edge).is_err());
        assert!(parse_chain_map("face 0 0\n", &edge, &edge).is_err());
        assert!(parse_chain_map("face 0 -> 0 ; 0\nface 1 -> 1\nface 0 1 -> 0 1\n", &edge, &edge).is_err());
    }
}
