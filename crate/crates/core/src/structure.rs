//! Point-line incidence structures and the queries every other module builds on.

use std::collections::BTreeSet;

use crate::error::{GeometryError, Result};
use crate::pointset::{PointSet, MAX_POINTS};

/// A finite point-line incidence structure.
///
/// Points are the indices `0..v`. Lines are subsets of the points, kept in a
/// canonical form: members ascending within a line, lines sorted
/// lexicographically by their member lists, no two lines equal as sets.
/// Structures are immutable once constructed.
#[derive(Clone, PartialEq, Eq)]
pub struct IncidenceStructure {
    name: String,
    v: usize,
    lines: Vec<PointSet>,
    lines_through: Vec<Vec<usize>>,
    collinear_bits: Vec<u64>,
}

impl IncidenceStructure {
    /// Normalizes and validates a line list into a structure.
    ///
    /// Rejects out-of-range indices, repeated points within a line, and two
    /// lines that are equal as sets. Member order within the input lines is
    /// irrelevant; the canonical ordering is applied here.
    pub fn new(name: impl Into<String>, v: usize, lines: Vec<Vec<usize>>) -> Result<Self> {
        if v > MAX_POINTS {
            return Err(GeometryError::Capacity(format!(
                "{v} points exceed the {MAX_POINTS}-point universe cap"
            )));
        }
        let mut normalized: Vec<PointSet> = Vec::with_capacity(lines.len());
        for (idx, line) in lines.iter().enumerate() {
            let as_set: BTreeSet<usize> = line.iter().copied().collect();
            if as_set.len() != line.len() {
                return Err(GeometryError::Malformed(format!(
                    "line {idx} {line:?} repeats a point"
                )));
            }
            normalized.push(PointSet::from_indices(v, line).map_err(|_| {
                GeometryError::Malformed(format!(
                    "line {idx} {line:?} contains a point outside 0..{v}"
                ))
            })?);
        }
        normalized.sort();
        for pair in normalized.windows(2) {
            if pair[0] == pair[1] {
                return Err(GeometryError::Malformed(format!(
                    "duplicate line {}",
                    pair[0]
                )));
            }
        }

        let mut lines_through = vec![Vec::new(); v];
        let mut collinear_bits = vec![0u64; v];
        for (j, line) in normalized.iter().enumerate() {
            for p in line.iter() {
                lines_through[p].push(j);
                collinear_bits[p] |= line.bits();
            }
        }
        for (p, bits) in collinear_bits.iter_mut().enumerate() {
            *bits &= !(1u64 << p);
        }

        Ok(IncidenceStructure {
            name: name.into(),
            v,
            lines: normalized,
            lines_through,
            collinear_bits,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Same structure under a different label.
    pub fn renamed(&self, name: impl Into<String>) -> Self {
        let mut s = self.clone();
        s.name = name.into();
        s
    }

    pub fn point_count(&self) -> usize {
        self.v
    }

    pub fn line_count(&self) -> usize {
        self.lines.len()
    }

    pub fn lines(&self) -> &[PointSet] {
        &self.lines
    }

    pub fn line(&self, index: usize) -> &PointSet {
        &self.lines[index]
    }

    /// Lines as ascending index lists, in canonical order.
    pub fn line_lists(&self) -> Vec<Vec<usize>> {
        self.lines.iter().map(|l| l.indices()).collect()
    }

    /// Indices of the lines through a point.
    pub fn lines_through(&self, point: usize) -> &[usize] {
        &self.lines_through[point]
    }

    pub fn degree(&self, point: usize) -> usize {
        self.lines_through[point].len()
    }

    /// Index of the line equal to `set`, if present.
    pub fn line_index_of(&self, set: &PointSet) -> Option<usize> {
        self.lines.binary_search(set).ok()
    }

    /// Every incident (point, line) pair.
    pub fn flags(&self) -> Vec<Flag> {
        let mut flags = Vec::new();
        for (j, line) in self.lines.iter().enumerate() {
            for p in line.iter() {
                flags.push(Flag { point: p, line: j });
            }
        }
        flags
    }

    fn check_point(&self, p: usize) -> Result<()> {
        if p >= self.v {
            return Err(GeometryError::Domain(format!(
                "point {p} out of range for {} points",
                self.v
            )));
        }
        Ok(())
    }

    /// Whether two distinct points lie on a common line.
    ///
    /// Collinearity of a point with itself is undefined here, so `p == q` is
    /// a domain error rather than an answer.
    pub fn collinear(&self, p: usize, q: usize) -> Result<bool> {
        self.check_point(p)?;
        self.check_point(q)?;
        if p == q {
            return Err(GeometryError::Domain(format!(
                "collinearity is only defined for distinct points (got {p} twice)"
            )));
        }
        Ok(self.collinear_bits[p] >> q & 1 == 1)
    }

    /// All points distinct from `p` and not collinear with it.
    pub fn non_collinear_set(&self, p: usize) -> Result<PointSet> {
        self.check_point(p)?;
        let full = PointSet::full(self.v);
        let bits = full.bits() & !self.collinear_bits[p] & !(1u64 << p);
        Ok(PointSet::from_bits(self.v, bits))
    }

    /// Points collinear with `p` (excluding `p`), as a set.
    pub fn collinear_set(&self, p: usize) -> Result<PointSet> {
        self.check_point(p)?;
        Ok(PointSet::from_bits(self.v, self.collinear_bits[p]))
    }

    /// Any two distinct points on at most one common line?
    pub fn is_linear(&self) -> bool {
        let mut seen_pairs = vec![0u64; self.v];
        for line in &self.lines {
            let members = line.indices();
            for (i, &p) in members.iter().enumerate() {
                for &q in &members[i + 1..] {
                    if seen_pairs[p] >> q & 1 == 1 {
                        return false;
                    }
                    seen_pairs[p] |= 1 << q;
                }
            }
        }
        true
    }

    /// Swap the roles of points and lines.
    ///
    /// Dual point `j` is line `j` of `self`; dual line `p` collects the lines
    /// through point `p`. A point on no line would leave the dual ill-defined,
    /// so isolated points are rejected.
    pub fn dual(&self) -> Result<IncidenceStructure> {
        for p in 0..self.v {
            if self.lines_through[p].is_empty() {
                return Err(GeometryError::Domain(format!(
                    "point {p} lies on no line; dual is undefined"
                )));
            }
        }
        let dual_lines: Vec<Vec<usize>> = (0..self.v)
            .map(|p| self.lines_through[p].clone())
            .collect();
        IncidenceStructure::new(
            format!("dual({})", self.name),
            self.lines.len(),
            dual_lines,
        )
    }

    /// The bipartite point/line incidence graph.
    pub fn levi_graph(&self) -> LeviGraph {
        let mut edges = Vec::new();
        for (j, line) in self.lines.iter().enumerate() {
            for p in line.iter() {
                edges.push((p, j));
            }
        }
        LeviGraph {
            point_count: self.v,
            line_count: self.lines.len(),
            edges,
        }
    }
}

impl std::fmt::Debug for IncidenceStructure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} (v={}, lines={:?})", self.name, self.v, self.lines)
    }
}

/// An incident point-line pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flag {
    pub point: usize,
    pub line: usize,
}

/// What `validate_configuration` reports about a structure.
///
/// Describes rather than rejects: a structure that is not a configuration
/// still gets a truthful report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigurationCheck {
    /// `Some(k)` when every line has exactly `k` points; `None` otherwise.
    /// Vacuously uniform (no lines) reports `Some` of nothing to disagree
    /// with, encoded as `None` paired with `line_size_uniform = true`.
    pub line_size: Option<usize>,
    pub line_size_uniform: bool,
    /// `Some(k)` when every point lies on exactly `k` lines.
    pub point_degree: Option<usize>,
    pub point_degree_uniform: bool,
    /// Any two distinct points on at most one common line.
    pub linear: bool,
    pub flags: usize,
}

impl ConfigurationCheck {
    /// True for a `v_3`-configuration: 3 points per line, 3 lines per point,
    /// linear, and as many lines as points.
    pub fn is_v3_configuration(&self, structure: &IncidenceStructure) -> bool {
        self.line_size == Some(3)
            && self.point_degree == Some(3)
            && self.linear
            && structure.line_count() == structure.point_count()
    }
}

/// Reports line-size uniformity, point-degree regularity, linearity, and the
/// flag count of a structure.
pub fn validate_configuration(s: &IncidenceStructure) -> ConfigurationCheck {
    let sizes: Vec<usize> = s.lines().iter().map(|l| l.len()).collect();
    let line_size_uniform = sizes.windows(2).all(|w| w[0] == w[1]);
    let line_size = if line_size_uniform { sizes.first().copied() } else { None };

    let degrees: Vec<usize> = (0..s.point_count()).map(|p| s.degree(p)).collect();
    let point_degree_uniform = degrees.windows(2).all(|w| w[0] == w[1]);
    let point_degree = if point_degree_uniform {
        degrees.first().copied()
    } else {
        None
    };

    ConfigurationCheck {
        line_size,
        line_size_uniform,
        point_degree,
        point_degree_uniform,
        linear: s.is_linear(),
        flags: sizes.iter().sum(),
    }
}

/// Bipartite graph on point-vertices and line-vertices with an edge per flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviGraph {
    pub point_count: usize,
    pub line_count: usize,
    /// `(point index, line index)` per incidence.
    pub edges: Vec<(usize, usize)>,
}

impl LeviGraph {
    pub fn vertex_count(&self) -> usize {
        self.point_count + self.line_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Both vertex classes regular of the given degrees?
    pub fn is_biregular(&self, point_degree: usize, line_degree: usize) -> bool {
        let mut pd = vec![0usize; self.point_count];
        let mut ld = vec![0usize; self.line_count];
        for &(p, l) in &self.edges {
            pd[p] += 1;
            ld[l] += 1;
        }
        pd.iter().all(|&d| d == point_degree) && ld.iter().all(|&d| d == line_degree)
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut adj = vec![Vec::new(); n];
        for &(p, l) in &self.edges {
            let lv = self.point_count + l;
            adj[p].push(lv);
            adj[lv].push(p);
        }
        adj
    }

    /// Length of a shortest cycle, or `None` if the graph is acyclic.
    pub fn girth(&self) -> Option<usize> {
        let adj = self.adjacency();
        let n = self.vertex_count();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for start in 0..n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        let cycle = dist[x] + dist[y] + 1;
                        if best.map_or(true, |b| cycle < b) {
                            best = Some(cycle);
                        }
                    }
                }
            }
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single_line() -> IncidenceStructure {
        IncidenceStructure::new("line", 3, vec![vec![0, 1, 2]]).unwrap()
    }

    #[test]
    fn normalization_sorts_lines_and_members() {
        let s = IncidenceStructure::new("s", 5, vec![vec![4, 2, 3], vec![1, 0, 2]]).unwrap();
        assert_eq!(s.line_lists(), vec![vec![0, 1, 2], vec![2, 3, 4]]);
    }

    #[test]
    fn malformed_inputs_name_the_line() {
        let dup_point = IncidenceStructure::new("s", 4, vec![vec![0, 0, 1]]);
        assert!(matches!(dup_point, Err(GeometryError::Malformed(m)) if m.contains("line 0")));
        let oob = IncidenceStructure::new("s", 3, vec![vec![0, 1, 3]]);
        assert!(matches!(oob, Err(GeometryError::Malformed(m)) if m.contains("line 0")));
        let dup_line = IncidenceStructure::new("s", 4, vec![vec![0, 1, 2], vec![2, 1, 0]]);
        assert!(matches!(dup_line, Err(GeometryError::Malformed(m)) if m.contains("duplicate")));
    }

    #[test]
    fn collinear_rejects_equal_points() {
        let s = single_line();
        assert!(s.collinear(0, 0).is_err());
        assert!(s.collinear(0, 1).unwrap());
    }

    #[test]
    fn collinear_is_symmetric() {
        let s = IncidenceStructure::new("s", 6, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        for p in 0..6 {
            for q in 0..6 {
                if p != q {
                    assert_eq!(s.collinear(p, q).unwrap(), s.collinear(q, p).unwrap());
                }
            }
        }
    }

    #[test]
    fn non_collinear_set_on_single_line_is_empty() {
        let s = single_line();
        assert!(s.non_collinear_set(0).unwrap().is_empty());
    }

    #[test]
    fn absent_point_is_non_collinear() {
        let s = IncidenceStructure::new("s", 4, vec![vec![0, 1, 2]]).unwrap();
        assert!(!s.collinear(0, 3).unwrap());
        assert!(s.non_collinear_set(0).unwrap().contains(3));
    }

    #[test]
    fn trivial_validation_cases() {
        let lonely = IncidenceStructure::new("v1", 1, vec![]).unwrap();
        let check = validate_configuration(&lonely);
        assert!(check.line_size_uniform);
        assert!(check.point_degree_uniform);
        assert_eq!(check.flags, 0);
        assert!(check.linear);
    }

    #[test]
    fn nonlinear_pair_detected() {
        let s = IncidenceStructure::new("s", 4, vec![vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
        assert!(!validate_configuration(&s).linear);
        // Two lines through a shared pair force a 4-cycle in the Levi graph.
        assert_eq!(s.levi_graph().girth(), Some(4));
    }

    #[test]
    fn levi_graph_of_empty_structure() {
        let s = IncidenceStructure::new("empty", 0, vec![]).unwrap();
        let g = s.levi_graph();
        assert_eq!(g.vertex_count(), 0);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.girth(), None);
    }

    #[test]
    fn dual_requires_covered_points() {
        let s = IncidenceStructure::new("s", 4, vec![vec![0, 1, 2]]).unwrap();
        assert!(matches!(s.dual(), Err(GeometryError::Domain(_))));
    }

    #[test]
    fn dual_of_triangle_is_triangle() {
        let s =
            IncidenceStructure::new("k3", 3, vec![vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap();
        let d = s.dual().unwrap();
        assert_eq!(d.point_count(), 3);
        assert_eq!(d.line_lists(), s.line_lists());
    }

    #[test]
    fn dual_rejects_points_with_equal_pencils() {
        // Both points of the repeated pair lie on exactly the same lines, so
        // the dual would repeat a line.
        let s = IncidenceStructure::new("s", 2, vec![vec![0, 1]]).unwrap();
        assert!(s.dual().is_err());
    }
}
