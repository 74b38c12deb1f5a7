//! Reference models: the Desargues configuration, the doily, the Fano plane.
//!
//! The Desargues model lives on the ten 2-element subsets (duads) of five
//! symbols, one line per 3-element symbol subset. The doily lives on the
//! fifteen duads of six symbols, one line per partition of the six symbols
//! into three duads (syntheme). Both constructions are deterministic, and the
//! doily in this labeling is the reference target for every isomorphism
//! claim in the crate.

use crate::error::Result;
use crate::structure::IncidenceStructure;

/// Identifies a catalog model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CatalogId {
    Desargues,
    Doily,
    Fano,
}

impl CatalogId {
    pub fn name(&self) -> &'static str {
        match self {
            CatalogId::Desargues => "desargues",
            CatalogId::Doily => "doily",
            CatalogId::Fano => "fano",
        }
    }

    /// Parses a catalog name as used on the command line.
    pub fn parse(name: &str) -> Option<CatalogId> {
        match name {
            "desargues" => Some(CatalogId::Desargues),
            "doily" => Some(CatalogId::Doily),
            "fano" => Some(CatalogId::Fano),
            _ => None,
        }
    }
}

/// A catalog structure together with human-readable point labels.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: CatalogId,
    pub structure: IncidenceStructure,
    /// One label per point, e.g. `{0,1}` for a duad point.
    pub labels: Vec<String>,
}

/// Duads of `0..n` in lexicographic order.
pub fn duads(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            out.push((a, b));
        }
    }
    out
}

/// Position of duad `(a, b)` in `duads(n)`.
pub fn duad_index(n: usize, a: usize, b: usize) -> usize {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    duads(n)
        .iter()
        .position(|&d| d == (a, b))
        .expect("duad within symbol range")
}

fn duad_label(d: (usize, usize)) -> String {
    format!("{{{},{}}}", d.0, d.1)
}

/// The Desargues configuration on the duads of five symbols.
///
/// A point is a duad of `{0..4}`; the line of a symbol triple `T` consists of
/// the three duads inside `T`. Two duads are collinear exactly when they share
/// a symbol.
pub fn desargues() -> CatalogEntry {
    let pts = duads(5);
    let mut lines = Vec::new();
    for a in 0..5 {
        for b in a + 1..5 {
            for c in b + 1..5 {
                let triple = [a, b, c];
                let line: Vec<usize> = pts
                    .iter()
                    .enumerate()
                    .filter(|(_, &(x, y))| triple.contains(&x) && triple.contains(&y))
                    .map(|(i, _)| i)
                    .collect();
                lines.push(line);
            }
        }
    }
    let structure = IncidenceStructure::new("desargues", pts.len(), lines)
        .expect("desargues model is well-formed");
    CatalogEntry {
        id: CatalogId::Desargues,
        structure,
        labels: pts.into_iter().map(duad_label).collect(),
    }
}

/// All partitions of `0..6` into three duads, as duad-index triples.
fn synthemes() -> Vec<Vec<usize>> {
    let pts = duads(6);
    let mut out = Vec::new();
    // Symbol 0 pairs with some b; the remaining four symbols split two ways
    // around their smallest element.
    for (i, &(a1, b1)) in pts.iter().enumerate() {
        if a1 != 0 {
            continue;
        }
        let rest: Vec<usize> = (1..6).filter(|&s| s != b1).collect();
        for k in 1..4 {
            let (a2, b2) = (rest[0], rest[k]);
            let others: Vec<usize> = rest[1..].iter().copied().filter(|&s| s != b2).collect();
            let (a3, b3) = (others[0], others[1]);
            out.push(vec![
                i,
                duad_index(6, a2, b2),
                duad_index(6, a3, b3),
            ]);
        }
    }
    out
}

/// The generalized quadrangle of order two on the duads of six symbols.
///
/// Lines are the synthemes; a duad lies on a syntheme exactly when the
/// syntheme contains it, so two duads are collinear iff they are disjoint.
pub fn doily() -> CatalogEntry {
    let pts = duads(6);
    let structure = IncidenceStructure::new("doily", pts.len(), synthemes())
        .expect("doily model is well-formed");
    CatalogEntry {
        id: CatalogId::Doily,
        structure,
        labels: pts.into_iter().map(duad_label).collect(),
    }
}

/// The Fano plane: points `0..7`, lines `{i, i+1, i+3}` mod 7.
pub fn fano() -> CatalogEntry {
    let lines: Vec<Vec<usize>> = (0..7)
        .map(|i| vec![i, (i + 1) % 7, (i + 3) % 7])
        .collect();
    let structure =
        IncidenceStructure::new("fano", 7, lines).expect("fano model is well-formed");
    CatalogEntry {
        id: CatalogId::Fano,
        structure,
        labels: (0..7).map(|i| i.to_string()).collect(),
    }
}

/// Looks up a catalog entry by name.
pub fn entry(id: CatalogId) -> CatalogEntry {
    match id {
        CatalogId::Desargues => desargues(),
        CatalogId::Doily => doily(),
        CatalogId::Fano => fano(),
    }
}

/// Convenience for error contexts that want a `Result`.
pub fn entry_by_name(name: &str) -> Result<CatalogEntry> {
    CatalogId::parse(name)
        .map(entry)
        .ok_or_else(|| crate::error::GeometryError::Domain(format!("unknown catalog entry '{name}'")))
}
