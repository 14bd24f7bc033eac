//! `.sc` complex files and `.scf` subcomplex-family files.
//!
//! ```text
//! vertices 3
//! simplex 0 1
//! simplex 1 2
//! member A        # .scf only
//! msimplex 0 1
//! ```

use crate::error::{Error, Result};
use crate::homology::{Simplex, SimplicialComplex, SubcomplexFamily};
use crate::set_system::parse_usize;

fn simplex_from<'a>(words: impl Iterator<Item = &'a str>, line: usize, n: usize) -> Result<Simplex> {
    let mut vs = Vec::new();
    for w in words {
        let v = parse_usize(Some(w), line, "vertex")?;
        if v >= n {
            return Err(Error::parse(line, format!("vertex {v} out of range for {n} vertices")));
        }
        vs.push(v);
    }
    Simplex::new(vs).map_err(|e| Error::parse(line, e.to_string()))
}

fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then(|| (i + 1, line.split_whitespace().collect()))
    })
}

struct Reader {
    vertices: Option<usize>,
    base: Vec<Simplex>,
    members: Vec<(String, Vec<Simplex>)>,
}

fn read(text: &str, allow_members: bool) -> Result<Reader> {
    let mut r = Reader { vertices: None, base: Vec::new(), members: Vec::new() };
    for (line, words) in lines(text) {
        match (words[0], r.vertices) {
            ("vertices", None) => {
                if words.len() != 2 {
                    return Err(Error::parse(line, "expected `vertices <n>`"));
                }
                let n = parse_usize(Some(words[1]), line, "vertex count")?;
                if n > crate::homology::complex::MAX_VERTICES {
                    return Err(Error::parse(line, "at most 64 vertices are supported"));
                }
                r.vertices = Some(n);
            }
            ("vertices", Some(_)) => return Err(Error::parse(line, "duplicate `vertices` line")),
            (_, None) => return Err(Error::parse(line, "expected `vertices <n>` first")),
            ("simplex", Some(n)) => {
                if !r.members.is_empty() {
                    return Err(Error::parse(line, "`simplex` after the first `member`"));
                }
                r.base.push(simplex_from(words[1..].iter().copied(), line, n)?);
            }
            ("member", Some(_)) if allow_members => {
                if words.len() != 2 {
                    return Err(Error::parse(line, "expected `member <name>`"));
                }
                r.members.push((words[1].to_string(), Vec::new()));
            }
            ("msimplex", Some(n)) if allow_members => {
                let s = simplex_from(words[1..].iter().copied(), line, n)?;
                match r.members.last_mut() {
                    Some((_, gens)) => gens.push(s),
                    None => return Err(Error::parse(line, "`msimplex` before any `member`")),
                }
            }
            (other, _) => return Err(Error::parse(line, format!("unknown directive `{other}`"))),
        }
    }
    if r.vertices.is_none() {
        return Err(Error::parse(0, "missing `vertices` line"));
    }
    Ok(r)
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let r = read(text, false)?;
    SimplicialComplex::from_generators(r.vertices.expect("checked"), r.base)
}

pub fn parse_family(text: &str) -> Result<SubcomplexFamily> {
    let r = read(text, true)?;
    let n = r.vertices.expect("checked");
    let base = SimplicialComplex::from_generators(n, r.base)?;
    let members = r
        .members
        .into_iter()
        .map(|(name, gens)| Ok((name, SimplicialComplex::from_generators(n, gens)?)))
        .collect::<Result<Vec<_>>>()?;
    SubcomplexFamily::new(base, members)
}

pub fn family_to_text(fam: &SubcomplexFamily) -> String {
    let mut out = fam.base().to_text();
    for (name, m) in fam.members() {
        out.push_str(&format!("member {name}\n"));
        for s in m.maximal_faces() {
            out.push_str("msimplex");
            for v in s.vertices() {
                out.push_str(&format!(" {v}"));
            }
            out.push('\n');
        }
    }
    out
}
