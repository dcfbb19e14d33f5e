//! Exact arithmetic for the Farey tessellation of the open disk.
//!
//! Vertices are rationals in lowest terms together with the single point at
//! infinity, written 1/0. Two vertices p/q and r/s span an edge of the
//! tessellation exactly when |ps - rq| = 1, and the triangles are the triples
//! of mutually adjacent vertices. The dual graph of the tessellation is an
//! infinite trivalent tree; we root it at the triangle (0/1, 1/1, 1/0) and
//! name every triangle by the path that reaches it from the root.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Labels for the three edges of a triangle, in the order used when the
/// dual tree is expanded. For a triangle with vertices a < b < c the edge
/// (a, b) is `L`, (b, c) is `R` and (a, c) is `M`.
pub const EDGE_LABELS: [char; 3] = ['L', 'R', 'M'];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FareyError {
    #[error("{0} and {1} are not Farey neighbors")]
    NotNeighbors(FareyVertex, FareyVertex),
    #[error("({0}, {1}) is not an edge of triangle {2}")]
    NotAnEdge(FareyVertex, FareyVertex, String),
    #[error("malformed triangle id {0:?}")]
    BadId(String),
}

/// A vertex of the Farey tessellation: a rational number p/q in lowest terms
/// with q > 0, or the point at infinity represented canonically as 1/0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FareyVertex {
    p: BigInt,
    q: BigInt,
}

impl FareyVertex {
    /// Builds the canonical representative of p/q. Both arguments zero is
    /// rejected; q = 0 canonicalizes to infinity.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Self {
        let (mut p, mut q): (BigInt, BigInt) = (p.into(), q.into());
        assert!(
            !(p.is_zero() && q.is_zero()),
            "0/0 is not a Farey vertex"
        );
        if q.is_zero() {
            return Self {
                p: BigInt::from(1),
                q: BigInt::from(0),
            };
        }
        if q.is_negative() {
            p = -p;
            q = -q;
        }
        let g = p.gcd(&q);
        if !g.is_zero() {
            p /= &g;
            q /= &g;
        }
        Self { p, q }
    }

    pub fn infinity() -> Self {
        Self::new(1, 0)
    }

    pub fn is_infinity(&self) -> bool {
        self.q.is_zero()
    }

    pub fn numer(&self) -> &BigInt {
        &self.p
    }

    pub fn denom(&self) -> &BigInt {
        &self.q
    }

    /// The image of this vertex under x -> (x - i)/(x + i), which maps the
    /// extended real line onto the unit circle. Infinity goes to (1, 0).
    pub fn disk_embed(&self) -> (f64, f64) {
        // For p/q the image is ((p^2 - q^2) - 2pq i) / (p^2 + q^2).
        let pp = &self.p * &self.p;
        let qq = &self.q * &self.q;
        let denom = (&pp + &qq).to_f64().expect("finite");
        let re = (&pp - &qq).to_f64().expect("finite") / denom;
        let im = -(BigInt::from(2) * &self.p * &self.q)
            .to_f64()
            .expect("finite")
            / denom;
        (re, im)
    }
}

impl fmt::Display for FareyVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl fmt::Debug for FareyVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl PartialOrd for FareyVertex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FareyVertex {
    /// Total order on vertices: finite rationals in their usual order, with
    /// infinity greater than everything.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinity(), other.is_infinity()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => (&self.p * &other.q).cmp(&(&other.p * &self.q)),
        }
    }
}

/// True iff a and b span an edge of the tessellation: |p_a q_b - p_b q_a| = 1.
pub fn are_neighbors(a: &FareyVertex, b: &FareyVertex) -> bool {
    let det = a.numer() * b.denom() - b.numer() * a.denom();
    det.abs() == BigInt::from(1)
}

/// The mediant (p_a + p_b)/(q_a + q_b) of two Farey neighbors. The result is
/// automatically in lowest terms and is a neighbor of both inputs.
pub fn mediant(a: &FareyVertex, b: &FareyVertex) -> Result<FareyVertex, FareyError> {
    if !are_neighbors(a, b) {
        return Err(FareyError::NotNeighbors(a.clone(), b.clone()));
    }
    Ok(FareyVertex::new(
        a.numer() + b.numer(),
        a.denom() + b.denom(),
    ))
}

/// The co-mediant (p_a - p_b)/(q_a - q_b), canonicalized. Together with the
/// mediant these are the two common neighbors of the edge (a, b).
pub fn co_mediant(a: &FareyVertex, b: &FareyVertex) -> Result<FareyVertex, FareyError> {
    if !are_neighbors(a, b) {
        return Err(FareyError::NotNeighbors(a.clone(), b.clone()));
    }
    Ok(FareyVertex::new(
        a.numer() - b.numer(),
        a.denom() - b.denom(),
    ))
}

/// A triangle of the tessellation. Vertices are kept sorted; the id is the
/// path from the base triangle in the dual tree, starting with `*` and
/// followed by letters from {L, R, M}. Ids are stable across enumeration
/// depths.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FareyTriangle {
    vertices: [FareyVertex; 3],
    id: String,
}

impl fmt::Debug for FareyTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({}, {}, {})",
            self.id, self.vertices[0], self.vertices[1], self.vertices[2]
        )
    }
}

impl FareyTriangle {
    /// The base triangle (0/1, 1/1, 1/0) with id `*`.
    pub fn base() -> Self {
        Self {
            vertices: [
                FareyVertex::new(0, 1),
                FareyVertex::new(1, 1),
                FareyVertex::infinity(),
            ],
            id: "*".to_string(),
        }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn vertices(&self) -> &[FareyVertex; 3] {
        &self.vertices
    }

    /// Edge with the given label index (0 = L, 1 = R, 2 = M) as a vertex pair.
    pub fn edge(&self, label: usize) -> (FareyVertex, FareyVertex) {
        let (i, j) = Self::edge_indices(label);
        (self.vertices[i].clone(), self.vertices[j].clone())
    }

    fn edge_indices(label: usize) -> (usize, usize) {
        match label {
            0 => (0, 1),
            1 => (1, 2),
            2 => (0, 2),
            _ => panic!("edge label out of range"),
        }
    }

    /// Which labeled edge the unordered pair {a, b} is, if any.
    pub fn edge_label(&self, a: &FareyVertex, b: &FareyVertex) -> Option<usize> {
        (0..3).find(|&l| {
            let (x, y) = self.edge(l);
            (&x == a && &y == b) || (&x == b && &y == a)
        })
    }

    /// The vertex not on the given labeled edge.
    pub fn opposite(&self, label: usize) -> &FareyVertex {
        match label {
            0 => &self.vertices[2],
            1 => &self.vertices[0],
            2 => &self.vertices[1],
            _ => panic!("edge label out of range"),
        }
    }

    fn from_parts(mut vs: [FareyVertex; 3], id: String) -> Self {
        vs.sort();
        Self { vertices: vs, id }
    }

    /// Depth of this triangle in the dual tree (length of its path).
    pub fn depth(&self) -> usize {
        self.id.len().saturating_sub(1)
    }
}

fn child_across(t: &FareyTriangle, label: usize) -> Result<FareyTriangle, FareyError> {
    let (a, b) = t.edge(label);
    let m = mediant(&a, &b)?;
    let c = co_mediant(&a, &b)?;
    let old = t.opposite(label);
    let third = if &m == old { c } else { m };
    let id = format!("{}{}", t.id, EDGE_LABELS[label]);
    Ok(FareyTriangle::from_parts([a, b, third], id))
}

/// Reconstructs a triangle from its path id by walking from the base.
/// Returns the triangle together with the labeled edge it shares with its
/// parent (None for the base).
pub fn triangle_by_id(id: &str) -> Result<(FareyTriangle, Option<usize>), FareyError> {
    let mut chars = id.chars();
    if chars.next() != Some('*') {
        return Err(FareyError::BadId(id.to_string()));
    }
    let mut cur = FareyTriangle::base();
    let mut parent_edge: Option<(FareyVertex, FareyVertex)> = None;
    for ch in chars {
        let label = EDGE_LABELS
            .iter()
            .position(|&l| l == ch)
            .ok_or_else(|| FareyError::BadId(id.to_string()))?;
        let edge = t_edge(&cur, label);
        cur = child_across(&cur, label)?;
        parent_edge = Some(edge);
    }
    let parent_label = parent_edge.and_then(|(a, b)| cur.edge_label(&a, &b));
    Ok((cur, parent_label))
}

fn t_edge(t: &FareyTriangle, label: usize) -> (FareyVertex, FareyVertex) {
    t.edge(label)
}

/// The unique other triangle sharing the edge e = {a, b} with t. Applying the
/// map twice returns the original triangle.
pub fn neighbor_across(
    t: &FareyTriangle,
    e: (&FareyVertex, &FareyVertex),
) -> Result<FareyTriangle, FareyError> {
    let label = t
        .edge_label(e.0, e.1)
        .ok_or_else(|| FareyError::NotAnEdge(e.0.clone(), e.1.clone(), t.id().to_string()))?;
    let (_, parent_label) = triangle_by_id(t.id())?;
    if Some(label) == parent_label {
        // Crossing the parent edge walks one step back toward the base.
        let parent_id = &t.id()[..t.id().len() - 1];
        let (parent, _) = triangle_by_id(parent_id)?;
        Ok(parent)
    } else {
        child_across(t, label)
    }
}

/// Breadth-first ball of the given radius around the base triangle in the
/// dual tree. The output order is deterministic and the output at depth d is
/// a prefix of the output at depth d + 1.
pub fn enumerate_triangles(depth: usize) -> Vec<FareyTriangle> {
    prefix_enumeration(depth, usize::MAX)
}

/// Number of triangles in the ball of the given radius: 1 + 3(2^d - 1).
pub fn ball_size(depth: usize) -> usize {
    1 + 3 * ((1usize << depth) - 1)
}

/// First `count` triangles of the canonical enumeration (capped by `depth`
/// levels when `count` is `usize::MAX`). Every prefix of the enumeration is a
/// connected subtree of the dual tree because each triangle appears after its
/// parent.
pub fn prefix_enumeration(depth: usize, count: usize) -> Vec<FareyTriangle> {
    let mut out = Vec::new();
    let mut frontier = vec![(FareyTriangle::base(), None::<usize>)];
    let mut level = 0;
    while !frontier.is_empty() && level <= depth && out.len() < count {
        let mut next = Vec::new();
        for (t, parent_label) in frontier {
            if out.len() >= count {
                return out;
            }
            if level < depth {
                for label in 0..3 {
                    if Some(label) == parent_label {
                        continue;
                    }
                    let child = child_across(&t, label).expect("triangle edges are Farey edges");
                    let back = child
                        .edge_label(&t.edge(label).0, &t.edge(label).1)
                        .expect("shared edge");
                    next.push((child, Some(back)));
                }
            }
            out.push(t);
        }
        frontier = next;
        level += 1;
    }
    out
}

/// Enumeration prefix of exactly `count` triangles.
pub fn first_triangles(count: usize) -> Vec<FareyTriangle> {
    if count == 0 {
        return Vec::new();
    }
    // Find a depth whose ball is large enough, then cut.
    let mut d = 0;
    while ball_size(d) < count {
        d += 1;
    }
    prefix_enumeration(d, count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn v(p: i64, q: i64) -> FareyVertex {
        FareyVertex::new(p, q)
    }

    #[test]
    fn mediant_examples() {
        assert_eq!(mediant(&v(0, 1), &v(1, 1)).unwrap(), v(1, 2));
        assert_eq!(mediant(&v(1, 2), &v(1, 1)).unwrap(), v(2, 3));
        assert_eq!(mediant(&v(0, 1), &v(1, 0)).unwrap(), v(1, 1));
        assert!(mediant(&v(1, 4), &v(1, 2)).is_err());
    }

    #[test]
    fn neighbor_examples() {
        assert!(are_neighbors(&v(0, 1), &v(1, 0)));
        assert!(are_neighbors(&v(1, 3), &v(1, 2)));
        assert!(!are_neighbors(&v(1, 4), &v(1, 2)));
    }

    #[test]
    fn neighbor_across_base_examples() {
        let base = FareyTriangle::base();
        // Across (0/1, 1/1): third vertex 1/2.
        let t = neighbor_across(&base, (&v(0, 1), &v(1, 1))).unwrap();
        assert_eq!(t.vertices(), &[v(0, 1), v(1, 2), v(1, 1)]);
        // Across (1/1, 1/0): third vertex 2/1.
        let t = neighbor_across(&base, (&v(1, 1), &v(1, 0))).unwrap();
        assert_eq!(t.vertices(), &[v(1, 1), v(2, 1), v(1, 0)]);
        // Across (0/1, 1/0): third vertex -1/1.
        let t = neighbor_across(&base, (&v(0, 1), &v(1, 0))).unwrap();
        assert_eq!(t.vertices(), &[v(-1, 1), v(0, 1), v(1, 0)]);
        // All pairs of every result are neighbors.
        for t in enumerate_triangles(3) {
            let vs = t.vertices();
            for i in 0..3 {
                for j in (i + 1)..3 {
                    assert!(are_neighbors(&vs[i], &vs[j]), "{:?}", t);
                }
            }
        }
    }

    #[test]
    fn non_edge_rejected() {
        let base = FareyTriangle::base();
        assert!(neighbor_across(&base, (&v(1, 2), &v(1, 1))).is_err());
    }

    #[test]
    fn enumeration_counts_and_prefix() {
        assert_eq!(enumerate_triangles(0).len(), 1);
        assert_eq!(enumerate_triangles(1).len(), 4);
        assert_eq!(enumerate_triangles(2).len(), 10);
        for d in 0..=6 {
            assert_eq!(enumerate_triangles(d).len(), ball_size(d));
        }
        let deep = enumerate_triangles(5);
        for d in 0..5 {
            let shallow = enumerate_triangles(d);
            assert_eq!(&deep[..shallow.len()], &shallow[..]);
        }
    }

    #[test]
    fn ids_unique() {
        let ts = enumerate_triangles(6);
        let ids: HashSet<_> = ts.iter().map(|t| t.id().to_string()).collect();
        assert_eq!(ids.len(), ts.len());
        // Distinct ids also means distinct vertex triples.
        let keys: HashSet<_> = ts
            .iter()
            .map(|t| format!("{:?}", t.vertices()))
            .collect();
        assert_eq!(keys.len(), ts.len());
    }

    #[test]
    fn involution_on_interior() {
        let d = 5;
        let ts = enumerate_triangles(d);
        for t in ts.iter().filter(|t| t.depth() < d) {
            for label in 0..3 {
                let (a, b) = t.edge(label);
                let s = neighbor_across(t, (&a, &b)).unwrap();
                assert_ne!(s, *t, "fixed point at {:?}", t);
                let back = neighbor_across(&s, (&a, &b)).unwrap();
                assert_eq!(back, *t);
            }
        }
    }

    #[test]
    fn small_rationals_all_appear() {
        // Brute-force oracle: every reduced p/q with |p| <= 5, 1 <= q <= 5
        // shows up as a triangle vertex at some finite depth.
        let mut wanted = Vec::new();
        for p in -5i64..=5 {
            for q in 1i64..=5 {
                if num_integer::gcd(p.abs(), q) == 1 {
                    wanted.push(v(p, q));
                }
            }
        }
        let mut depth = 0;
        let mut seen: HashSet<FareyVertex> = HashSet::new();
        while depth <= 12 && !wanted.iter().all(|w| seen.contains(w)) {
            for t in enumerate_triangles(depth) {
                for vert in t.vertices() {
                    seen.insert(vert.clone());
                }
            }
            depth += 1;
        }
        for w in &wanted {
            assert!(seen.contains(w), "{} never appeared", w);
        }
    }

    #[test]
    fn disk_embed_examples() {
        let eps = 1e-12;
        let (x, y) = v(0, 1).disk_embed();
        assert!((x + 1.0).abs() < eps && y.abs() < eps);
        let (x, y) = FareyVertex::infinity().disk_embed();
        assert!((x - 1.0).abs() < eps && y.abs() < eps);
        let (x, y) = v(1, 1).disk_embed();
        assert!(x.abs() < eps && (y + 1.0).abs() < eps);
    }

    #[test]
    fn disk_embed_injective_on_circle() {
        let ts = enumerate_triangles(5);
        let mut verts: Vec<FareyVertex> = Vec::new();
        for t in ts {
            for vert in t.vertices() {
                if !verts.contains(vert) {
                    verts.push(vert.clone());
                }
            }
        }
        let mut points = Vec::new();
        for vert in &verts {
            let (x, y) = vert.disk_embed();
            assert!((x * x + y * y - 1.0).abs() < 1e-12, "{} off circle", vert);
            points.push((x, y));
        }
        for i in 0..points.len() {
            for j in (i + 1)..points.len() {
                let (dx, dy) = (points[i].0 - points[j].0, points[i].1 - points[j].1);
                assert!(
                    dx.abs() > 1e-12 || dy.abs() > 1e-12,
                    "{} and {} collide",
                    verts[i],
                    verts[j]
                );
            }
        }
    }

    #[test]
    fn first_triangles_prefix_of_enumeration() {
        let full = enumerate_triangles(4);
        for n in [0, 1, 2, 5, 9, 17] {
            assert_eq!(first_triangles(n)[..], full[..n]);
        }
    }
}
