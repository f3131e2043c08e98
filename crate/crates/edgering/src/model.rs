//! Graph and monomial data model: mixed signed, directed graphs, exponent
//! vectors, the rho map, and the text/JSON/monomial input formats.
//!
//! Vertices are 0-based internally and 1-based in all I/O.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // 1-based in output
        write!(f, "{}", self.0 + 1)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn val(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn from_val(v: i64) -> Result<Sign> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(Error::structural(format!("invalid sign {v}"))),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

/// Undirected signed edge; endpoints are stored with `u <= v`. Loops (`u == v`)
/// are allowed.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct SignedEdge {
    pub u: VertexId,
    pub v: VertexId,
    pub sign: Sign,
}

impl SignedEdge {
    pub fn new(a: VertexId, b: VertexId, sign: Sign) -> SignedEdge {
        let (u, v) = if a.0 <= b.0 { (a, b) } else { (b, a) };
        SignedEdge { u, v, sign }
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct DirectedEdge {
    pub tail: VertexId,
    pub head: VertexId,
}

/// Reference to an edge of a particular graph, by kind and index into the
/// corresponding edge list.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum EdgeRef {
    Signed(usize),
    Directed(usize),
}

/// Integer exponent vector in Z^n; coordinate i is the exponent of x_{i+1}.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(pub Vec<i64>);

impl ExponentVector {
    pub fn zero(dim: usize) -> ExponentVector {
        ExponentVector(vec![0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn l1_norm(&self) -> i64 {
        self.0.iter().map(|c| c.abs()).sum()
    }

    pub fn coord_sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        assert_eq!(self.dim(), other.dim());
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &ExponentVector) -> ExponentVector {
        assert_eq!(self.dim(), other.dim());
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> ExponentVector {
        ExponentVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn scaled(&self, k: i64) -> ExponentVector {
        ExponentVector(self.0.iter().map(|a| a * k).collect())
    }
}

/// A mixed signed, directed graph: `n` vertices, a list of signed edges
/// (loops allowed) and a list of directed edges (no directed loops).
///
/// For a pair of distinct vertices i, j any subset of {+ij, -ij, (i,j), (j,i)}
/// may be present; duplicates of a single edge are rejected.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MixedGraph {
    n: usize,
    signed: Vec<SignedEdge>,
    directed: Vec<DirectedEdge>,
}

impl MixedGraph {
    pub fn new(n: usize) -> MixedGraph {
        MixedGraph { n, signed: Vec::new(), directed: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn signed_edges(&self) -> &[SignedEdge] {
        &self.signed
    }

    pub fn directed_edges(&self) -> &[DirectedEdge] {
        &self.directed
    }

    pub fn edge_count(&self) -> usize {
        self.signed.len() + self.directed.len()
    }

    pub fn is_signed(&self) -> bool {
        self.directed.is_empty()
    }

    pub fn edge_refs(&self) -> impl Iterator<Item = EdgeRef> {
        let ns = self.signed.len();
        let nd = self.directed.len();
        (0..ns).map(EdgeRef::Signed).chain((0..nd).map(EdgeRef::Directed))
    }

    pub fn add_signed(&mut self, a: VertexId, b: VertexId, sign: Sign) -> Result<EdgeRef> {
        if a.0 >= self.n || b.0 >= self.n {
            return Err(Error::structural(format!(
                "vertex out of range: edge {}{}{} on {} vertices",
                sign, a, b, self.n
            )));
        }
        let e = SignedEdge::new(a, b, sign);
        if self.signed.contains(&e) {
            return Err(Error::structural(format!("duplicate edge {}{}{}", sign, e.u, e.v)));
        }
        self.signed.push(e);
        Ok(EdgeRef::Signed(self.signed.len() - 1))
    }

    pub fn add_directed(&mut self, tail: VertexId, head: VertexId) -> Result<EdgeRef> {
        if tail.0 >= self.n || head.0 >= self.n {
            return Err(Error::structural(format!(
                "vertex out of range: edge ({},{}) on {} vertices",
                tail, head, self.n
            )));
        }
        if tail == head {
            return Err(Error::structural(format!("directed loop ({},{}) not allowed", tail, head)));
        }
        let e = DirectedEdge { tail, head };
        if self.directed.contains(&e) {
            return Err(Error::structural(format!("duplicate edge ({},{})", tail, head)));
        }
        self.directed.push(e);
        Ok(EdgeRef::Directed(self.directed.len() - 1))
    }

    /// Endpoints of an edge as an (unordered for signed, (tail, head) for
    /// directed) pair.
    pub fn endpoints(&self, e: EdgeRef) -> Result<(VertexId, VertexId)> {
        match e {
            EdgeRef::Signed(i) => {
                let e = self.signed.get(i).ok_or_else(|| Error::structural("unknown signed edge reference"))?;
                Ok((e.u, e.v))
            }
            EdgeRef::Directed(i) => {
                let e = self.directed.get(i).ok_or_else(|| Error::structural("unknown directed edge reference"))?;
                Ok((e.tail, e.head))
            }
        }
    }

    /// The sign of a signed edge; None for directed edges.
    pub fn sign_of(&self, e: EdgeRef) -> Option<Sign> {
        match e {
            EdgeRef::Signed(i) => self.signed.get(i).map(|e| e.sign),
            EdgeRef::Directed(_) => None,
        }
    }

    /// Human-readable edge label in 1-based coordinates: `+12`, `-33`, `(1,2)`.
    pub fn edge_label(&self, e: EdgeRef) -> String {
        match e {
            EdgeRef::Signed(i) => {
                let e = &self.signed[i];
                format!("{}{},{}", e.sign, e.u, e.v)
            }
            EdgeRef::Directed(i) => {
                let e = &self.directed[i];
                format!("({},{})", e.tail, e.head)
            }
        }
    }

    /// Per-vertex incidence lists: (edge, other endpoint). A loop appears once
    /// in its vertex's list, with the vertex itself as the other endpoint.
    pub fn incidence(&self) -> Vec<Vec<(EdgeRef, VertexId)>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.signed.iter().enumerate() {
            let r = EdgeRef::Signed(i);
            inc[e.u.0].push((r, e.v));
            if !e.is_loop() {
                inc[e.v.0].push((r, e.u));
            }
        }
        for (i, e) in self.directed.iter().enumerate() {
            let r = EdgeRef::Directed(i);
            inc[e.tail.0].push((r, e.head));
            inc[e.head.0].push((r, e.tail));
        }
        inc
    }

    /// Connected components of the underlying undirected graph, each sorted,
    /// ordered by smallest vertex. Isolated vertices form singleton components.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let ids = self.component_ids();
        let k = ids.iter().copied().max().map_or(0, |m| m + 1);
        let mut comps = vec![Vec::new(); k];
        for v in 0..self.n {
            comps[ids[v]].push(VertexId(v));
        }
        comps
    }

    /// Component index per vertex; components are numbered by smallest vertex.
    pub fn component_ids(&self) -> Vec<usize> {
        let inc = self.incidence();
        let mut ids = vec![usize::MAX; self.n];
        let mut next = 0;
        for start in 0..self.n {
            if ids[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            ids[start] = next;
            while let Some(v) = stack.pop() {
                for &(_, w) in &inc[v] {
                    if ids[w.0] == usize::MAX {
                        ids[w.0] = next;
                        stack.push(w.0);
                    }
                }
            }
            next += 1;
        }
        ids
    }
}

/// The exponent-vector map: signed non-loop +-ij -> +-(e_i + e_j), signed loop
/// +-ii -> +-2 e_i, directed (i,j) -> e_j - e_i.
pub fn rho(g: &MixedGraph, e: EdgeRef) -> Result<ExponentVector> {
    let mut v = ExponentVector::zero(g.vertex_count());
    match e {
        EdgeRef::Signed(i) => {
            let e = g
                .signed
                .get(i)
                .ok_or_else(|| Error::structural("unknown signed edge reference"))?;
            v.0[e.u.0] += e.sign.val();
            v.0[e.v.0] += e.sign.val();
        }
        EdgeRef::Directed(i) => {
            let e = g
                .directed
                .get(i)
                .ok_or_else(|| Error::structural("unknown directed edge reference"))?;
            v.0[e.tail.0] -= 1;
            v.0[e.head.0] += 1;
        }
    }
    Ok(v)
}

fn parse_vertex(tok: &str, n: usize, line: usize) -> Result<VertexId> {
    let idx: usize = tok
        .parse()
        .map_err(|_| Error::parse(line, format!("invalid vertex '{tok}'")))?;
    if idx == 0 || idx > n {
        return Err(Error::parse(line, format!("vertex {idx} out of range 1..={n}")));
    }
    Ok(VertexId(idx - 1))
}

/// Parse the line-oriented graph text format:
/// header `vertices N`, then edge lines `+ i j`, `- i j`, `> i j`.
/// `#` starts a comment; blank lines are ignored. Vertices are 1-based.
pub fn parse_graph(text: &str) -> Result<MixedGraph> {
    let mut graph: Option<MixedGraph> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if graph.is_none() {
            if toks.len() == 2 && toks[0] == "vertices" {
                let n: usize = toks[1]
                    .parse()
                    .map_err(|_| Error::parse(lineno, "invalid vertex count"))?;
                graph = Some(MixedGraph::new(n));
                continue;
            }
            return Err(Error::parse(lineno, "expected header 'vertices N'"));
        }
        let g = graph.as_mut().unwrap();
        if toks.len() != 3 {
            return Err(Error::parse(lineno, format!("malformed edge line '{line}'")));
        }
        let a = parse_vertex(toks[1], g.vertex_count(), lineno)?;
        let b = parse_vertex(toks[2], g.vertex_count(), lineno)?;
        let res = match toks[0] {
            "+" => g.add_signed(a, b, Sign::Plus),
            "-" => g.add_signed(a, b, Sign::Minus),
            ">" => g.add_directed(a, b),
            other => return Err(Error::parse(lineno, format!("unknown edge kind '{other}'"))),
        };
        res.map_err(|e| Error::parse(lineno, e.to_string()))?;
    }
    graph.ok_or_else(|| Error::parse(0, "empty input; expected 'vertices N'"))
}

/// Render a graph in the text format parsed by [`parse_graph`].
pub fn render_graph(g: &MixedGraph) -> String {
    let mut out = format!("vertices {}\n", g.vertex_count());
    for e in g.signed_edges() {
        out.push_str(&format!("{} {} {}\n", e.sign, e.u, e.v));
    }
    for e in g.directed_edges() {
        out.push_str(&format!("> {} {}\n", e.tail, e.head));
    }
    out
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: usize,
    signed: Vec<[i64; 3]>,
    directed: Vec<[i64; 2]>,
}

/// Parse the JSON mirror format
/// `{"vertices": N, "signed": [[i,j,s],...], "directed": [[i,j],...]}`.
pub fn parse_graph_json(text: &str) -> Result<MixedGraph> {
    let raw: GraphJson =
        serde_json::from_str(text).map_err(|e| Error::parse(0, format!("invalid JSON: {e}")))?;
    let mut g = MixedGraph::new(raw.vertices);
    let vid = |x: i64| -> Result<VertexId> {
        if x < 1 || x as usize > raw.vertices {
            return Err(Error::structural(format!("vertex {x} out of range")));
        }
        Ok(VertexId(x as usize - 1))
    };
    for [i, j, s] in raw.signed {
        g.add_signed(vid(i)?, vid(j)?, Sign::from_val(s)?)?;
    }
    for [i, j] in raw.directed {
        g.add_directed(vid(i)?, vid(j)?)?;
    }
    Ok(g)
}

pub fn render_graph_json(g: &MixedGraph) -> String {
    let raw = GraphJson {
        vertices: g.vertex_count(),
        signed: g
            .signed_edges()
            .iter()
            .map(|e| [e.u.0 as i64 + 1, e.v.0 as i64 + 1, e.sign.val()])
            .collect(),
        directed: g
            .directed_edges()
            .iter()
            .map(|e| [e.tail.0 as i64 + 1, e.head.0 as i64 + 1])
            .collect(),
    };
    serde_json::to_string(&raw).expect("graph JSON serialization")
}

/// Render an exponent vector as a Laurent monomial, e.g. `x1*x3^-1`; the
/// constant monomial renders as `1`.
pub fn render_monomial(v: &ExponentVector) -> String {
    let factors: Vec<String> = v
        .0
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| {
            if c == 1 {
                format!("x{}", i + 1)
            } else {
                format!("x{}^{}", i + 1, c)
            }
        })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

fn parse_monomial_line(line: &str, lineno: usize) -> Result<BTreeMap<usize, i64>> {
    let mut exps: BTreeMap<usize, i64> = BTreeMap::new();
    let compact: String = line.chars().filter(|c| !c.is_whitespace()).collect();
    for factor in compact.split('*') {
        let rest = factor
            .strip_prefix('x')
            .ok_or_else(|| Error::parse(lineno, format!("expected variable, got '{factor}'")))?;
        let (idx_str, exp) = match rest.split_once('^') {
            Some((i, e)) => {
                let exp: i64 = e
                    .parse()
                    .map_err(|_| Error::parse(lineno, format!("invalid exponent '{e}'")))?;
                (i, exp)
            }
            None => (rest, 1),
        };
        let idx: usize = idx_str
            .parse()
            .map_err(|_| Error::parse(lineno, format!("invalid variable index '{idx_str}'")))?;
        if idx == 0 {
            return Err(Error::parse(lineno, "variable indices are 1-based"));
        }
        *exps.entry(idx - 1).or_insert(0) += exp;
    }
    exps.retain(|_, e| *e != 0);
    Ok(exps)
}

/// Parse one Laurent monomial per line into a graph. Supported exponent
/// patterns: x_i x_j -> +ij, x_i^-1 x_j^-1 -> -ij, x_i^2 -> +ii,
/// x_i^-2 -> -ii, x_i^-1 x_j -> directed (i,j).
///
/// An optional leading `vertices N` line declares the ambient dimension;
/// otherwise it is the largest variable index seen.
pub fn parse_monomials(text: &str) -> Result<MixedGraph> {
    struct Gen {
        lineno: usize,
        kind: GenKind,
    }
    enum GenKind {
        Signed(usize, usize, Sign),
        Directed(usize, usize),
    }

    let mut declared: Option<usize> = None;
    let mut max_idx = 0usize;
    let mut gens: Vec<Gen> = Vec::new();
    let mut saw_content = false;

    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if !saw_content {
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() == 2 && toks[0] == "vertices" {
                declared = Some(
                    toks[1]
                        .parse()
                        .map_err(|_| Error::parse(lineno, "invalid vertex count"))?,
                );
                saw_content = true;
                continue;
            }
        }
        saw_content = true;
        let exps = parse_monomial_line(line, lineno)?;
        let entries: Vec<(usize, i64)> = exps.into_iter().collect();
        let kind = match entries.as_slice() {
            [(i, 2)] => GenKind::Signed(*i, *i, Sign::Plus),
            [(i, -2)] => GenKind::Signed(*i, *i, Sign::Minus),
            [(i, 1), (j, 1)] => GenKind::Signed(*i, *j, Sign::Plus),
            [(i, -1), (j, -1)] => GenKind::Signed(*i, *j, Sign::Minus),
            [(i, -1), (j, 1)] => GenKind::Directed(*i, *j),
            [(i, 1), (j, -1)] => GenKind::Directed(*j, *i),
            _ => {
                return Err(Error::parse(
                    lineno,
                    format!("unsupported generator '{line}': not of quadratic shape"),
                ))
            }
        };
        match &kind {
            GenKind::Signed(i, j, _) => max_idx = max_idx.max(*i + 1).max(*j + 1),
            GenKind::Directed(i, j) => max_idx = max_idx.max(*i + 1).max(*j + 1),
        }
        gens.push(Gen { lineno, kind });
    }

    let n = match declared {
        Some(n) => {
            if max_idx > n {
                return Err(Error::parse(0, format!("variable index {max_idx} exceeds declared {n}")));
            }
            n
        }
        None => max_idx,
    };
    let mut g = MixedGraph::new(n);
    for gen in gens {
        let res = match gen.kind {
            GenKind::Signed(i, j, s) => g.add_signed(VertexId(i), VertexId(j), s),
            GenKind::Directed(i, j) => g.add_directed(VertexId(i), VertexId(j)),
        };
        res.map_err(|e| Error::parse(gen.lineno, e.to_string()))?;
    }
    Ok(g)
}

/// Render a graph as monomial generators, one per line, headed by a
/// `vertices N` line so isolated vertices survive a round trip.
pub fn render_monomials(g: &MixedGraph) -> String {
    let mut out = format!("vertices {}\n", g.vertex_count());
    for e in g.signed_edges() {
        let line = match (e.is_loop(), e.sign) {
            (true, Sign::Plus) => format!("x{}^2", e.u),
            (true, Sign::Minus) => format!("x{}^-2", e.u),
            (false, Sign::Plus) => format!("x{}*x{}", e.u, e.v),
            (false, Sign::Minus) => format!("x{}^-1*x{}^-1", e.u, e.v),
        };
        out.push_str(&line);
        out.push('\n');
    }
    for e in g.directed_edges() {
        out.push_str(&format!("x{}^-1*x{}\n", e.tail, e.head));
    }
    out
}

/// Seeded random mixed graph for test corpora: up to `max_vertices` vertices
/// and `max_edges` distinct edges; directed edges only if `allow_directed`.
pub fn random_graph<R: rand::Rng>(
    rng: &mut R,
    max_vertices: usize,
    max_edges: usize,
    allow_directed: bool,
) -> MixedGraph {
    let n = rng.gen_range(1..=max_vertices.max(1));
    let mut g = MixedGraph::new(n);
    let target = rng.gen_range(0..=max_edges);
    for _ in 0..target {
        // A rejected duplicate just skips one slot.
        let kind = if allow_directed { rng.gen_range(0..3) } else { rng.gen_range(0..2) };
        let a = VertexId(rng.gen_range(0..n));
        let b = VertexId(rng.gen_range(0..n));
        let _ = match kind {
            0 => g.add_signed(a, b, Sign::Plus),
            1 => g.add_signed(a, b, Sign::Minus),
            _ => {
                if a == b {
                    continue;
                }
                g.add_directed(a, b)
            }
        };
    }
    g
}

/// Seeded random purely directed graph.
pub fn random_directed_graph<R: rand::Rng>(
    rng: &mut R,
    max_vertices: usize,
    max_edges: usize,
) -> MixedGraph {
    let n = rng.gen_range(2..=max_vertices.max(2));
    let mut g = MixedGraph::new(n);
    let target = rng.gen_range(0..=max_edges);
    for _ in 0..target {
        let a = VertexId(rng.gen_range(0..n));
        let b = VertexId(rng.gen_range(0..n));
        if a == b {
            continue;
        }
        let _ = g.add_directed(a, b);
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn figure1_g() -> MixedGraph {
        parse_graph("vertices 3\n+ 1 1\n+ 1 2\n+ 2 3\n- 3 3\n").unwrap()
    }

    #[test]
    fn rho_examples() {
        let g = figure1_g();
        // +12 is the second signed edge
        assert_eq!(rho(&g, EdgeRef::Signed(1)).unwrap(), ExponentVector(vec![1, 1, 0]));
        // -33
        assert_eq!(rho(&g, EdgeRef::Signed(3)).unwrap(), ExponentVector(vec![0, 0, -2]));
        // +11
        assert_eq!(rho(&g, EdgeRef::Signed(0)).unwrap(), ExponentVector(vec![2, 0, 0]));

        let mut d = MixedGraph::new(2);
        let e = d.add_directed(VertexId(0), VertexId(1)).unwrap();
        assert_eq!(rho(&d, e).unwrap(), ExponentVector(vec![-1, 1]));
    }

    #[test]
    fn rho_coordinate_sum_parity() {
        let mut g = MixedGraph::new(4);
        g.add_signed(VertexId(0), VertexId(1), Sign::Plus).unwrap();
        g.add_signed(VertexId(1), VertexId(2), Sign::Minus).unwrap();
        g.add_signed(VertexId(3), VertexId(3), Sign::Minus).unwrap();
        g.add_directed(VertexId(0), VertexId(3)).unwrap();
        for e in g.edge_refs() {
            let s = rho(&g, e).unwrap().coord_sum();
            match e {
                EdgeRef::Signed(_) => assert_eq!(s.abs(), 2),
                EdgeRef::Directed(_) => assert_eq!(s, 0),
            }
        }
    }

    #[test]
    fn parse_graph_figure1() {
        let g = figure1_g();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.signed_edges().len(), 4);
        assert!(g.is_signed());
    }

    #[test]
    fn parse_graph_errors() {
        assert!(parse_graph("vertices 2\n> 1 1\n").is_err()); // directed loop
        assert!(parse_graph("vertices 2\n+ 1 3\n").is_err()); // out of range
        assert!(parse_graph("vertices 2\n+ 1 2\n+ 2 1\n").is_err()); // duplicate
        assert!(parse_graph("vertices 1\n").is_ok()); // no edges
        match parse_graph("vertices 2\nbogus\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn parse_monomials_figure1() {
        let g = parse_monomials("x1*x2\nx2*x3\nx1^2\nx3^-2\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.signed_edges().len(), 4);
        let h = figure1_g();
        let mut a: Vec<_> = g.signed_edges().to_vec();
        let mut b: Vec<_> = h.signed_edges().to_vec();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn parse_monomials_directed_and_errors() {
        let g = parse_monomials("x1^-1*x2\n").unwrap();
        assert_eq!(g.directed_edges(), &[DirectedEdge { tail: VertexId(0), head: VertexId(1) }]);
        assert!(parse_monomials("x1*x2*x3\n").is_err());
        assert!(parse_monomials("x1^3\n").is_err());
        assert!(parse_monomials("x1*x2^-2\n").is_err());
    }

    #[test]
    fn round_trips() {
        let texts = [
            "vertices 3\n+ 1 1\n+ 1 2\n+ 2 3\n- 3 3\n",
            "vertices 4\n- 1 2\n> 2 3\n> 3 2\n",
            "vertices 1\n",
        ];
        for t in texts {
            let g = parse_graph(t).unwrap();
            assert_eq!(parse_graph(&render_graph(&g)).unwrap(), g);
            assert_eq!(parse_monomials(&render_monomials(&g)).unwrap(), g);
            assert_eq!(parse_graph_json(&render_graph_json(&g)).unwrap(), g);
        }
    }

    #[test]
    fn components_examples() {
        let g = figure1_g();
        assert_eq!(g.components(), vec![vec![VertexId(0), VertexId(1), VertexId(2)]]);

        let mut h = MixedGraph::new(4);
        h.add_signed(VertexId(0), VertexId(1), Sign::Plus).unwrap();
        assert_eq!(
            h.components(),
            vec![vec![VertexId(0), VertexId(1)], vec![VertexId(2)], vec![VertexId(3)]]
        );
    }

    #[test]
    fn rho_injective_on_edges() {
        let g = parse_graph("vertices 3\n+ 1 2\n- 1 2\n> 1 2\n> 2 1\n+ 1 1\n- 3 3\n").unwrap();
        let mut seen = std::collections::BTreeSet::new();
        for e in g.edge_refs() {
            assert!(seen.insert(rho(&g, e).unwrap()), "rho not injective at {}", g.edge_label(e));
        }
    }
}
