//! Finite loop-free multigraphs and their Laplacians.
//!
//! Vertices are `0..vertex_count`; edges are stored once per unordered pair as
//! `(min, max) -> multiplicity`. Self-loops cannot be represented.
//!
//! Two conventions matter to everything downstream:
//!
//! * `C_2` is a *double* edge between its two vertices, so that `K_m x C_2`
//!   has every vertex joined to its partner layer by two parallel edges.
//!   `C_1` is a single vertex with no edges.
//! * In `K_m x C_n` the vertex `v_{i,j}` (layer `i` of the cycle, position `j`
//!   of the complete graph) has flat index `i * m + j`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;

use crate::error::{invalid, Error, Result};
use crate::zmatrix::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    vertex_count: usize,
    edges: BTreeMap<(usize, usize), u64>,
}

/// Position of a vertex of `K_m x C_n`: `layer` in `Z_n`, `position` in `Z_m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexLabel {
    pub layer: usize,
    pub position: usize,
}

impl VertexLabel {
    pub fn new(layer: usize, position: usize) -> Self {
        VertexLabel { layer, position }
    }

    pub fn flat_index(self, m: usize) -> usize {
        self.layer * m + self.position
    }

    pub fn from_flat(index: usize, m: usize) -> Self {
        VertexLabel {
            layer: index / m,
            position: index % m,
        }
    }
}

fn key(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Multigraph {
    /// A graph with `vertex_count` vertices and no edges.
    pub fn empty(vertex_count: usize) -> Self {
        Multigraph {
            vertex_count,
            edges: BTreeMap::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Adds `mult` parallel edges between `u` and `v`.
    pub fn add_edge(&mut self, u: usize, v: usize, mult: u64) -> Result<()> {
        if u == v {
            return invalid(format!("self-loop at vertex {u}"));
        }
        if u >= self.vertex_count || v >= self.vertex_count {
            return invalid(format!(
                "edge {{{u}, {v}}} out of range for {} vertices",
                self.vertex_count
            ));
        }
        if mult == 0 {
            return invalid("edge multiplicity must be at least 1");
        }
        *self.edges.entry(key(u, v)).or_insert(0) += mult;
        Ok(())
    }

    /// Number of edges joining `u` and `v` (0 when absent).
    pub fn multiplicity(&self, u: usize, v: usize) -> u64 {
        self.edges.get(&key(u, v)).copied().unwrap_or(0)
    }

    /// Iterates `((u, v), mult)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.edges.iter().map(|(&k, &m)| (k, m))
    }

    /// Number of distinct adjacent pairs.
    pub fn distinct_edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Number of edges counted with multiplicity.
    pub fn edge_count(&self) -> u64 {
        self.edges.values().sum()
    }

    pub fn degree(&self, v: usize) -> u64 {
        self.edges
            .iter()
            .filter(|(&(a, b), _)| a == v || b == v)
            .map(|(_, &m)| m)
            .sum()
    }

    pub fn degrees(&self) -> Vec<u64> {
        let mut deg = vec![0u64; self.vertex_count];
        for (&(a, b), &m) in &self.edges {
            deg[a] += m;
            deg[b] += m;
        }
        deg
    }

    pub fn complete(m: usize) -> Result<Self> {
        if m == 0 {
            return invalid("complete graph needs at least one vertex");
        }
        let mut g = Multigraph::empty(m);
        for u in 0..m {
            for v in u + 1..m {
                g.edges.insert((u, v), 1);
            }
        }
        Ok(g)
    }

    /// The cycle `C_n`. `C_2` is a double edge and `C_1` is a bare vertex.
    pub fn cycle(n: usize) -> Result<Self> {
        let mut g = Multigraph::empty(n);
        match n {
            0 => return invalid("cycle needs at least one vertex"),
            1 => {}
            2 => {
                g.edges.insert((0, 1), 2);
            }
            _ => {
                for i in 0..n {
                    g.edges.insert(key(i, (i + 1) % n), 1);
                }
            }
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self> {
        if n == 0 {
            return invalid("path needs at least one vertex");
        }
        let mut g = Multigraph::empty(n);
        for i in 0..n - 1 {
            g.edges.insert((i, i + 1), 1);
        }
        Ok(g)
    }

    /// Cartesian product `self x other`: a copy of `self` for every vertex of
    /// `other`. Vertex `(u, v)` gets flat index `v * |self| + u`.
    pub fn cartesian_product(&self, other: &Multigraph) -> Result<Self> {
        let n1 = self.vertex_count;
        let n2 = other.vertex_count;
        if n1 == 0 || n2 == 0 {
            return invalid("cartesian product of an empty graph");
        }
        let mut g = Multigraph::empty(n1 * n2);
        for v in 0..n2 {
            for (&(a, b), &m) in &self.edges {
                g.edges.insert((v * n1 + a, v * n1 + b), m);
            }
        }
        for (&(a, b), &m) in &other.edges {
            for u in 0..n1 {
                g.edges.insert((a * n1 + u, b * n1 + u), m);
            }
        }
        Ok(g)
    }

    /// Direct constructor for `K_m x C_n`, identical to
    /// `complete(m).cartesian_product(&cycle(n))`.
    pub fn km_cn(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return invalid(format!("K_m x C_n needs m, n >= 1 (got m={m}, n={n})"));
        }
        let mut g = Multigraph::empty(m * n);
        for i in 0..n {
            for j in 0..m {
                let here = VertexLabel::new(i, j).flat_index(m);
                for k in j + 1..m {
                    g.edges.insert((here, VertexLabel::new(i, k).flat_index(m)), 1);
                }
            }
        }
        let layer_mult = if n == 2 { 2 } else { 1 };
        if n >= 2 {
            // n == 2 visits layer 0 only; the double edge covers both directions.
            let layers = if n == 2 { 1 } else { n };
            for i in 0..layers {
                let next = (i + 1) % n;
                for j in 0..m {
                    let a = VertexLabel::new(i, j).flat_index(m);
                    let b = VertexLabel::new(next, j).flat_index(m);
                    g.edges.insert(key(a, b), layer_mult);
                }
            }
        }
        Ok(g)
    }

    /// `L_uu = deg(u)`, `L_uv = -a_uv`.
    pub fn laplacian(&self) -> IntMatrix {
        let n = self.vertex_count;
        let mut l = IntMatrix::zeros(n, n);
        for (u, d) in self.degrees().into_iter().enumerate() {
            l.set(u, u, BigInt::from(d));
        }
        for (&(a, b), &m) in &self.edges {
            let w = -BigInt::from(m);
            l.set(a, b, w.clone());
            l.set(b, a, w);
        }
        l
    }

    pub fn is_connected(&self) -> Result<bool> {
        let n = self.vertex_count;
        if n == 0 {
            return invalid("connectivity of the empty graph is undefined");
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in self.edges.keys() {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        Ok(reached == n)
    }

    /// Serializes to the edge-list text format read by [`Multigraph::parse_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.vertex_count);
        for (&(a, b), &m) in &self.edges {
            if m == 1 {
                let _ = writeln!(out, "{a} {b}");
            } else {
                let _ = writeln!(out, "{a} {b} {m}");
            }
        }
        out
    }

    /// Parses the edge-list format: the first line holds the vertex count,
    /// every further line `u v` or `u v mult`. `#` starts a comment. Repeated
    /// pairs accumulate.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut graph: Option<Multigraph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            let g = match graph.as_mut() {
                None => {
                    if fields.len() != 1 {
                        return Err(parse_err(format!("expected vertex count, got {line:?}")));
                    }
                    let n: usize = fields[0]
                        .parse()
                        .map_err(|_| parse_err(format!("bad vertex count {:?}", fields[0])))?;
                    graph = Some(Multigraph::empty(n));
                    continue;
                }
                Some(g) => g,
            };
            if fields.len() != 2 && fields.len() != 3 {
                return Err(parse_err(format!("expected \"u v\" or \"u v mult\", got {line:?}")));
            }
            let mut nums = [0u64; 3];
            nums[2] = 1;
            for (slot, f) in nums.iter_mut().zip(&fields) {
                *slot = f
                    .parse()
                    .map_err(|_| parse_err(format!("not a nonnegative integer: {f:?}")))?;
            }
            let (u, v, mult) = (nums[0] as usize, nums[1] as usize, nums[2]);
            if u == v {
                return Err(parse_err(format!("self-loop at vertex {u}")));
            }
            if u >= g.vertex_count || v >= g.vertex_count {
                return Err(parse_err(format!(
                    "vertex index out of range for {} vertices",
                    g.vertex_count
                )));
            }
            if mult == 0 {
                return Err(parse_err("multiplicity must be at least 1".into()));
            }
            *g.edges.entry(key(u, v)).or_insert(0) += mult;
        }
        graph.ok_or(Error::Parse {
            line: 1,
            message: "missing vertex count".into(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(l: &IntMatrix, r: usize) -> Vec<i64> {
        (0..l.cols()).map(|c| l.get(r, c).try_into().unwrap()).collect()
    }

    #[test]
    fn complete_graphs() {
        let k1 = Multigraph::complete(1).unwrap();
        assert_eq!((k1.vertex_count(), k1.edge_count()), (1, 0));
        let k3 = Multigraph::complete(3).unwrap();
        assert_eq!(k3.vertex_count(), 3);
        assert_eq!(k3.distinct_edge_count(), 3);
        assert!(k3.edges().all(|(_, m)| m == 1));
        assert_eq!(Multigraph::complete(5).unwrap().distinct_edge_count(), 10);
        assert!(Multigraph::complete(0).is_err());
    }

    #[test]
    fn cycles_and_paths() {
        assert_eq!(Multigraph::cycle(1).unwrap().edge_count(), 0);
        let c2 = Multigraph::cycle(2).unwrap();
        assert_eq!(c2.multiplicity(0, 1), 2);
        assert_eq!(c2.distinct_edge_count(), 1);
        let c4 = Multigraph::cycle(4).unwrap();
        assert_eq!(c4.distinct_edge_count(), 4);
        assert!(c4.edges().all(|(_, m)| m == 1));
        assert!(Multigraph::cycle(0).is_err());

        assert_eq!(Multigraph::path(1).unwrap().edge_count(), 0);
        assert_eq!(Multigraph::path(2).unwrap().edge_count(), 1);
        assert_eq!(Multigraph::path(5).unwrap().edge_count(), 4);
        assert!(Multigraph::path(0).is_err());
    }

    #[test]
    fn products_with_trivial_factors() {
        let k1 = Multigraph::complete(1).unwrap();
        for n in 1..7 {
            let c = Multigraph::cycle(n).unwrap();
            assert_eq!(k1.cartesian_product(&c).unwrap(), c);
        }
        let c1 = Multigraph::cycle(1).unwrap();
        for m in 1..7 {
            let k = Multigraph::complete(m).unwrap();
            assert_eq!(k.cartesian_product(&c1).unwrap(), k);
        }
        assert!(k1.cartesian_product(&Multigraph::empty(0)).is_err());
    }

    #[test]
    fn k3_c4_is_regular() {
        let g = Multigraph::complete(3)
            .unwrap()
            .cartesian_product(&Multigraph::cycle(4).unwrap())
            .unwrap();
        assert_eq!(g.vertex_count(), 12);
        assert!(g.degrees().iter().all(|&d| d == 4));
    }

    #[test]
    fn km_cn_examples() {
        let g = Multigraph::km_cn(3, 3).unwrap();
        assert_eq!(g.vertex_count(), 9);
        assert_eq!(g.edge_count(), 18);
        assert!(g.degrees().iter().all(|&d| d == 4));

        assert_eq!(Multigraph::km_cn(1, 5).unwrap(), Multigraph::cycle(5).unwrap());

        let g = Multigraph::km_cn(4, 2).unwrap();
        assert!(g.degrees().iter().all(|&d| d == 5));
        for j in 0..4 {
            assert_eq!(g.multiplicity(j, 4 + j), 2);
        }
        assert!(Multigraph::km_cn(0, 3).is_err());
        assert!(Multigraph::km_cn(3, 0).is_err());
    }

    #[test]
    fn km_cn_matches_product() {
        for m in 1..=6 {
            for n in 1..=8 {
                let direct = Multigraph::km_cn(m, n).unwrap();
                let prod = Multigraph::complete(m)
                    .unwrap()
                    .cartesian_product(&Multigraph::cycle(n).unwrap())
                    .unwrap();
                assert_eq!(direct, prod, "m={m} n={n}");
                if m >= 3 && n >= 3 {
                    assert!(direct.degrees().iter().all(|&d| d == m as u64 + 1));
                }
            }
        }
    }

    #[test]
    fn vertex_labels_round_trip() {
        let m = 4;
        for idx in 0..28 {
            let label = VertexLabel::from_flat(idx, m);
            assert!(label.position < m);
            assert_eq!(label.flat_index(m), idx);
        }
        assert_eq!(VertexLabel::new(2, 1).flat_index(m), 9);
    }

    #[test]
    fn laplacian_examples() {
        let l = Multigraph::complete(3).unwrap().laplacian();
        assert_eq!(row(&l, 0), vec![2, -1, -1]);
        assert_eq!(row(&l, 1), vec![-1, 2, -1]);
        assert_eq!(row(&l, 2), vec![-1, -1, 2]);

        let l = Multigraph::cycle(2).unwrap().laplacian();
        assert_eq!(row(&l, 0), vec![2, -2]);
        assert_eq!(row(&l, 1), vec![-2, 2]);

        let l = Multigraph::complete(1).unwrap().laplacian();
        assert_eq!((l.rows(), l.cols()), (1, 1));
        assert_eq!(row(&l, 0), vec![0]);
    }

    #[test]
    fn connectivity() {
        assert!(Multigraph::complete(5).unwrap().is_connected().unwrap());
        assert!(!Multigraph::empty(2).is_connected().unwrap());
        assert!(Multigraph::km_cn(3, 7).unwrap().is_connected().unwrap());
        assert!(Multigraph::complete(1).unwrap().is_connected().unwrap());
        assert!(Multigraph::empty(0).is_connected().is_err());
    }

    #[test]
    fn parse_examples() {
        let g = Multigraph::parse_edge_list("3\n0 1\n1 2\n0 2\n").unwrap();
        assert_eq!(g, Multigraph::complete(3).unwrap());
        let g = Multigraph::parse_edge_list("2\n0 1 2\n").unwrap();
        assert_eq!(g, Multigraph::cycle(2).unwrap());
        match Multigraph::parse_edge_list("2\n0 0\n") {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("expected self-loop error, got {other:?}"),
        }
    }

    #[test]
    fn parse_comments_and_accumulation() {
        let text = "# a doubled edge\n2 # vertices\n\n0 1\n1 0 # again\n";
        assert_eq!(
            Multigraph::parse_edge_list(text).unwrap(),
            Multigraph::cycle(2).unwrap()
        );
    }

    #[test]
    fn parse_errors_name_the_line() {
        let cases = [
            ("3\n0 1\n0 5\n", 3),
            ("3\n0 x\n", 2),
            ("3\n0 1 2 3\n", 2),
            ("3\n0 1 0\n", 2),
            ("three\n", 1),
        ];
        for (text, line) in cases {
            match Multigraph::parse_edge_list(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
        assert!(Multigraph::parse_edge_list("").is_err());
    }
}
