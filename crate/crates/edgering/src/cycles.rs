//! Simple-cycle enumeration for mixed multigraphs, signed-edge parity, and
//! vertex signatures.
//!
//! Cycles are simple closed walks in the underlying undirected multigraph.
//! Loops are length-1 cycles. The four possible edges +ij, -ij, (i,j), (j,i)
//! between a vertex pair are distinct, so a 2-cycle through two distinct
//! parallel edges is a legitimate simple cycle.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{EdgeRef, MixedGraph, VertexId};

pub const DEFAULT_CYCLE_CAP: usize = 100_000;

/// A simple cycle: `edges[k]` joins `vertices[k]` and `vertices[k+1 mod len]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct CycleDesc {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeRef>,
    pub signed_count: usize,
    /// Per-vertex signature: half the sum of the incident cycle-edge signs,
    /// where a directed edge counts -1 at its tail and +1 at its head. For a
    /// loop the signature is the loop's sign. For signed graphs this is the
    /// usual signature; for mixed cycles it matches the augmented graph's.
    pub signatures: BTreeMap<VertexId, i64>,
}

/// Sign contribution of a cycle edge at one of its endpoints.
fn endpoint_sign(g: &MixedGraph, e: EdgeRef, v: VertexId) -> Result<i64> {
    match e {
        EdgeRef::Signed(_) => Ok(g.sign_of(e).unwrap().val()),
        EdgeRef::Directed(_) => {
            let (tail, head) = g.endpoints(e)?;
            if v == tail {
                Ok(-1)
            } else if v == head {
                Ok(1)
            } else {
                Err(Error::structural("vertex not incident to directed edge"))
            }
        }
    }
}

impl CycleDesc {
    pub fn new(g: &MixedGraph, vertices: Vec<VertexId>, edges: Vec<EdgeRef>) -> Result<CycleDesc> {
        if vertices.is_empty() || vertices.len() != edges.len() {
            return Err(Error::structural("cycle vertex/edge lengths mismatch"));
        }
        let len = vertices.len();
        for k in 0..len {
            let (a, b) = g.endpoints(edges[k])?;
            let (u, v) = (vertices[k], vertices[(k + 1) % len]);
            if !((a == u && b == v) || (a == v && b == u)) {
                return Err(Error::structural(format!(
                    "edge {} does not join cycle vertices {} and {}",
                    g.edge_label(edges[k]),
                    u,
                    v
                )));
            }
        }
        let mut sorted = vertices.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != len {
            return Err(Error::structural("cycle vertices are not pairwise distinct"));
        }
        if len == 1 && g.sign_of(edges[0]).is_none() {
            return Err(Error::structural("directed loops do not exist"));
        }
        if len == 2 && edges[0] == edges[1] {
            return Err(Error::structural("2-cycle must use two distinct edges"));
        }

        let signed_count = edges.iter().filter(|e| matches!(e, EdgeRef::Signed(_))).count();
        let mut signatures = BTreeMap::new();
        if len == 1 {
            signatures.insert(vertices[0], g.sign_of(edges[0]).unwrap().val());
        } else {
            for k in 0..len {
                let v = vertices[k];
                let e_in = edges[(k + len - 1) % len];
                let e_out = edges[k];
                let s = (endpoint_sign(g, e_in, v)? + endpoint_sign(g, e_out, v)?) / 2;
                signatures.insert(v, s);
            }
        }
        Ok(CycleDesc { vertices, edges, signed_count, signatures })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_odd(&self) -> bool {
        self.signed_count % 2 == 1
    }

    pub fn min_vertex(&self) -> VertexId {
        *self.vertices.iter().min().unwrap()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn vertex_disjoint(&self, other: &CycleDesc) -> bool {
        self.vertices.iter().all(|v| !other.contains_vertex(*v))
    }

    /// Resolve a cyclic vertex list to a cycle, taking for each consecutive
    /// pair the first edge (in edge-list order) joining it.
    pub fn from_vertex_list(g: &MixedGraph, vertices: &[VertexId]) -> Result<CycleDesc> {
        let len = vertices.len();
        if len == 0 {
            return Err(Error::structural("empty cycle vertex list"));
        }
        let mut edges = Vec::with_capacity(len);
        let mut used: Vec<EdgeRef> = Vec::new();
        for k in 0..len {
            let (u, v) = (vertices[k], vertices[(k + 1) % len]);
            let e = g
                .edge_refs()
                .find(|&e| {
                    if used.contains(&e) {
                        return false;
                    }
                    let (a, b) = g.endpoints(e).unwrap();
                    (a == u && b == v) || (a == v && b == u)
                })
                .ok_or_else(|| {
                    Error::structural(format!("no unused edge joins {} and {}", u, v))
                })?;
            used.push(e);
            edges.push(e);
        }
        CycleDesc::new(g, vertices.to_vec(), edges)
    }

    fn sort_key(&self) -> (Vec<VertexId>, Vec<VertexId>, Vec<EdgeRef>) {
        let mut sorted = self.vertices.clone();
        sorted.sort();
        (sorted, self.vertices.clone(), self.edges.clone())
    }
}

/// An unordered pair of cycles with the relations used by the odd cycle
/// condition.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CyclePair {
    pub c1: CycleDesc,
    pub c2: CycleDesc,
    pub same_component: bool,
    pub vertex_disjoint: bool,
}

struct Enumerator<'a> {
    g: &'a MixedGraph,
    inc: Vec<Vec<(EdgeRef, VertexId)>>,
    cap: usize,
    out: Vec<CycleDesc>,
}

impl<'a> Enumerator<'a> {
    fn emit(&mut self, vertices: Vec<VertexId>, edges: Vec<EdgeRef>) -> Result<()> {
        if self.out.len() >= self.cap {
            return Err(Error::CycleCap { cap: self.cap });
        }
        self.out.push(CycleDesc::new(self.g, vertices, edges)?);
        Ok(())
    }

    fn run(&mut self) -> Result<()> {
        // Loops.
        for (i, e) in self.g.signed_edges().iter().enumerate() {
            if e.is_loop() {
                self.emit(vec![e.u], vec![EdgeRef::Signed(i)])?;
            }
        }
        // 2-cycles through distinct parallel edges.
        let refs: Vec<EdgeRef> = self.g.edge_refs().collect();
        for (a, &e1) in refs.iter().enumerate() {
            let (u1, v1) = self.g.endpoints(e1)?;
            if u1 == v1 {
                continue;
            }
            let p1 = if u1.0 <= v1.0 { (u1, v1) } else { (v1, u1) };
            for &e2 in refs.iter().skip(a + 1) {
                let (u2, v2) = self.g.endpoints(e2)?;
                if u2 == v2 {
                    continue;
                }
                let p2 = if u2.0 <= v2.0 { (u2, v2) } else { (v2, u2) };
                if p1 == p2 {
                    self.emit(vec![p1.0, p1.1], vec![e1, e2])?;
                }
            }
        }
        // Length >= 3: DFS rooted at the cycle's minimum vertex.
        for s in 0..self.g.vertex_count() {
            let mut on_path = vec![false; self.g.vertex_count()];
            on_path[s] = true;
            let mut path_v = vec![VertexId(s)];
            let mut path_e = Vec::new();
            self.dfs(VertexId(s), VertexId(s), &mut path_v, &mut path_e, &mut on_path)?;
        }
        self.out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        Ok(())
    }

    fn dfs(
        &mut self,
        v: VertexId,
        s: VertexId,
        path_v: &mut Vec<VertexId>,
        path_e: &mut Vec<EdgeRef>,
        on_path: &mut Vec<bool>,
    ) -> Result<()> {
        let neighbors = self.inc[v.0].clone();
        for (e, w) in neighbors {
            if w == s && path_v.len() >= 3 && path_v[1].0 < v.0 {
                let mut edges = path_e.clone();
                edges.push(e);
                self.emit(path_v.clone(), edges)?;
            } else if w.0 > s.0 && !on_path[w.0] {
                on_path[w.0] = true;
                path_v.push(w);
                path_e.push(e);
                self.dfs(w, s, path_v, path_e, on_path)?;
                path_e.pop();
                path_v.pop();
                on_path[w.0] = false;
            }
        }
        Ok(())
    }
}

/// All simple cycles of `g`, in a deterministic order (sorted vertex set,
/// then canonical rotation). Errors with a capacity error if more than `cap`
/// cycles exist.
pub fn enumerate_cycles(g: &MixedGraph, cap: usize) -> Result<Vec<CycleDesc>> {
    let mut en = Enumerator { g, inc: g.incidence(), cap, out: Vec::new() };
    en.run()?;
    Ok(en.out)
}

/// The simple cycles with an odd number of signed edges.
pub fn enumerate_odd_cycles(g: &MixedGraph, cap: usize) -> Result<Vec<CycleDesc>> {
    Ok(enumerate_cycles(g, cap)?.into_iter().filter(|c| c.is_odd()).collect())
}

/// All unordered pairs of vertex-disjoint odd cycles lying in the same
/// component, sorted by (min vertex of c1, min vertex of c2).
pub fn disjoint_odd_pairs(g: &MixedGraph, cap: usize) -> Result<Vec<CyclePair>> {
    let odd = enumerate_odd_cycles(g, cap)?;
    let comp = g.component_ids();
    let mut pairs = Vec::new();
    for i in 0..odd.len() {
        for j in i + 1..odd.len() {
            let (c1, c2) = (&odd[i], &odd[j]);
            if !c1.vertex_disjoint(c2) {
                continue;
            }
            if comp[c1.min_vertex().0] != comp[c2.min_vertex().0] {
                continue;
            }
            let (c1, c2) = if c1.min_vertex() <= c2.min_vertex() { (c1, c2) } else { (c2, c1) };
            pairs.push(CyclePair {
                c1: c1.clone(),
                c2: c2.clone(),
                same_component: true,
                vertex_disjoint: true,
            });
        }
    }
    pairs.sort_by_key(|p| (p.c1.min_vertex(), p.c2.min_vertex(), p.c1.sort_key(), p.c2.sort_key()));
    Ok(pairs)
}
