//! Sign-alternating walk reachability in signed graphs, and generalized
//! alternating connections in mixed graphs via the augmented graph.
//!
//! Reachability runs on the state graph with states (vertex, sign of the last
//! edge used), so it is exact and O(|V|*|E|). Returned walks are shortest and
//! deterministic.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::augment::AugmentedGraph;
use crate::cycles::CycleDesc;
use crate::error::{Error, Result};
use crate::model::{EdgeRef, MixedGraph, Sign, VertexId};

/// A sign-alternating walk. Walks may repeat vertices and edges.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct AltWalk {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeRef>,
    pub first_sign: Sign,
    pub last_sign: Sign,
}

fn state(v: VertexId, s: Sign) -> usize {
    v.0 * 2 + if s == Sign::Plus { 0 } else { 1 }
}

fn state_sign(id: usize) -> Sign {
    if id % 2 == 0 {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// BFS for an alternating walk from some source (with its required first
/// sign) to some target (with its required last sign) in a signed graph.
pub fn alternating_reachable(
    g: &MixedGraph,
    sources: &[(VertexId, Sign)],
    targets: &[(VertexId, Sign)],
) -> Result<Option<AltWalk>> {
    if !g.is_signed() {
        return Err(Error::precondition("alternating_reachable requires a signed graph"));
    }
    let n = g.vertex_count();
    let inc = g.incidence();

    let mut is_target = vec![false; 2 * n];
    for &(v, s) in targets {
        is_target[state(v, s)] = true;
    }

    // pred[state] = (previous state, edge); origin[state] = (source vertex,
    // first edge) for seed states.
    let mut pred: Vec<Option<(usize, EdgeRef)>> = vec![None; 2 * n];
    let mut origin: Vec<Option<(VertexId, EdgeRef)>> = vec![None; 2 * n];
    let mut seen = vec![false; 2 * n];
    let mut queue = VecDeque::new();

    let accept = |id: usize,
                  pred: &Vec<Option<(usize, EdgeRef)>>,
                  origin: &Vec<Option<(VertexId, EdgeRef)>>|
     -> Option<AltWalk> {
        if !is_target[id] {
            return None;
        }
        // reconstruct backwards
        let mut edges = Vec::new();
        let mut cur = id;
        while let Some((prev, e)) = pred[cur] {
            edges.push(e);
            cur = prev;
        }
        let (start, first_edge) = origin[cur].expect("seed state has an origin");
        edges.push(first_edge);
        edges.reverse();
        let mut vertices = vec![start];
        let mut at = start;
        for &e in &edges {
            let (a, b) = g.endpoints(e).unwrap();
            at = if a == at { b } else { a };
            vertices.push(at);
        }
        Some(AltWalk {
            first_sign: g.sign_of(edges[0]).unwrap(),
            last_sign: g.sign_of(*edges.last().unwrap()).unwrap(),
            vertices,
            edges,
        })
    };

    // Seed: one edge out of each source with the required first sign.
    for &(v, first) in sources {
        for &(e, w) in &inc[v.0] {
            if g.sign_of(e) != Some(first) {
                continue;
            }
            let id = state(w, first);
            if seen[id] {
                continue;
            }
            seen[id] = true;
            origin[id] = Some((v, e));
            if let Some(walk) = accept(id, &pred, &origin) {
                return Ok(Some(walk));
            }
            queue.push_back(id);
        }
    }

    while let Some(id) = queue.pop_front() {
        let v = VertexId(id / 2);
        let next_sign = state_sign(id).flip();
        for &(e, w) in &inc[v.0] {
            if g.sign_of(e) != Some(next_sign) {
                continue;
            }
            let nid = state(w, next_sign);
            if seen[nid] {
                continue;
            }
            seen[nid] = true;
            pred[nid] = Some((id, e));
            if let Some(walk) = accept(nid, &pred, &origin) {
                return Ok(Some(walk));
            }
            queue.push_back(nid);
        }
    }
    Ok(None)
}

/// Attachment requirements for one cycle: a vertex with nonzero signature
/// requires that sign; a zero-signature vertex offers both signs (the walk
/// can always be extended inside the cycle to a nonzero-signature vertex).
fn cycle_endpoints(c: &CycleDesc, skip_above: Option<usize>) -> Vec<(VertexId, Sign)> {
    let mut out = Vec::new();
    for (&v, &s) in &c.signatures {
        if let Some(limit) = skip_above {
            if v.0 >= limit {
                continue;
            }
        }
        match s {
            1 => out.push((v, Sign::Plus)),
            -1 => out.push((v, Sign::Minus)),
            _ => {
                out.push((v, Sign::Plus));
                out.push((v, Sign::Minus));
            }
        }
    }
    out
}

fn check_pair_preconditions(g: &MixedGraph, c1: &CycleDesc, c2: &CycleDesc) -> Result<()> {
    if !c1.vertex_disjoint(c2) {
        return Err(Error::precondition("cycles are not vertex-disjoint"));
    }
    let comp = g.component_ids();
    if comp[c1.min_vertex().0] != comp[c2.min_vertex().0] {
        return Err(Error::precondition("cycles lie in distinct components"));
    }
    if !c1.is_odd() || !c2.is_odd() {
        return Err(Error::precondition("cycles must have odd signed-edge count"));
    }
    Ok(())
}

/// Whether two vertex-disjoint odd cycles of a signed graph are connected by
/// an alternating walk with cycle-compatible end signs.
pub fn cycles_alternating_connected(
    g: &MixedGraph,
    c1: &CycleDesc,
    c2: &CycleDesc,
) -> Result<Option<AltWalk>> {
    check_pair_preconditions(g, c1, c2)?;
    let sources = cycle_endpoints(c1, None);
    let targets = cycle_endpoints(c2, None);
    alternating_reachable(g, &sources, &targets)
}

/// Lift a cycle of the base mixed graph to its cycle in the augmented signed
/// graph, expanding each directed edge into its two-edge artificial path.
pub fn lift_cycle(a: &AugmentedGraph, c: &CycleDesc) -> Result<CycleDesc> {
    let len = c.vertices.len();
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for k in 0..len {
        let v = c.vertices[k];
        vertices.push(v);
        let e = c.edges[k];
        let augs = a.edge_map.get(&e).ok_or_else(|| Error::structural("edge not in edge map"))?;
        match (e, augs.as_slice()) {
            (EdgeRef::Signed(_), [single]) => edges.push(*single),
            (EdgeRef::Directed(i), [neg, pos]) => {
                let d = a.base.directed_edges()[i];
                let t = a.artificial[&d];
                if v == d.tail {
                    edges.push(*neg);
                    vertices.push(t);
                    edges.push(*pos);
                } else {
                    edges.push(*pos);
                    vertices.push(t);
                    edges.push(*neg);
                }
            }
            _ => unreachable!(),
        }
    }
    CycleDesc::new(&a.signed_graph, vertices, edges)
}

/// Translate an alternating walk of the augmented graph back to base edges:
/// the two halves of each artificial detour collapse to one directed edge.
/// Walk endpoints must be original (non-artificial) vertices.
pub fn collapse_walk(a: &AugmentedGraph, w: &AltWalk) -> Result<AltWalk> {
    let mut vertices = vec![w.vertices[0]];
    let mut edges = Vec::new();
    let mut k = 0;
    while k < w.edges.len() {
        let base = a.base_edge_of(w.edges[k]);
        match base {
            EdgeRef::Signed(_) => {
                edges.push(base);
                vertices.push(w.vertices[k + 1]);
                k += 1;
            }
            EdgeRef::Directed(_) => {
                if k + 1 >= w.edges.len() || a.base_edge_of(w.edges[k + 1]) != base {
                    return Err(Error::structural(
                        "walk ends inside an artificial detour; cannot collapse",
                    ));
                }
                edges.push(base);
                vertices.push(w.vertices[k + 2]);
                k += 2;
            }
        }
    }
    Ok(AltWalk { vertices, edges, first_sign: w.first_sign, last_sign: w.last_sign })
}

/// Generalized alternating connection between two odd cycles of a mixed
/// graph, decided in the augmented graph and translated back. Attachment
/// points are restricted to original vertices, which does not change
/// existence: a walk attaching at an artificial vertex extends by the other
/// half of its pair into a walk attaching at an original vertex.
pub fn generalized_alternating_connected(
    g: &MixedGraph,
    c1: &CycleDesc,
    c2: &CycleDesc,
    a: &AugmentedGraph,
) -> Result<Option<AltWalk>> {
    check_pair_preconditions(g, c1, c2)?;
    let l1 = lift_cycle(a, c1)?;
    let l2 = lift_cycle(a, c2)?;
    let n = g.vertex_count();
    let sources = cycle_endpoints(&l1, Some(n));
    let targets = cycle_endpoints(&l2, Some(n));
    match alternating_reachable(&a.signed_graph, &sources, &targets)? {
        Some(w) => Ok(Some(collapse_walk(a, &w)?)),
        None => Ok(None),
    }
}

/// Direct checker for the generalized-alternating-path conditions on a walk
/// in a mixed graph: the signed subsequence alternates; a signed edge before
/// a forward-traversed directed edge is positive and one after is negative
/// (reversed for backward traversal); consecutive directed edges traversed in
/// opposite directions have an odd number of signed edges between them, in
/// the same direction an even number.
pub fn verify_generalized_alternating(g: &MixedGraph, w: &AltWalk) -> Result<()> {
    #[derive(Clone, Copy, PartialEq)]
    enum Step {
        Signed(Sign),
        Directed { forward: bool },
    }
    let mut steps = Vec::new();
    for (k, &e) in w.edges.iter().enumerate() {
        let from = w.vertices[k];
        let to = w.vertices[k + 1];
        let (a, b) = g.endpoints(e)?;
        match e {
            EdgeRef::Signed(_) => {
                if !((a == from && b == to) || (a == to && b == from)) {
                    return Err(Error::structural("walk edge does not join its vertices"));
                }
                steps.push(Step::Signed(g.sign_of(e).unwrap()));
            }
            EdgeRef::Directed(_) => {
                let forward = a == from && b == to;
                if !forward && !(a == to && b == from) {
                    return Err(Error::structural("walk edge does not join its vertices"));
                }
                steps.push(Step::Directed { forward });
            }
        }
    }

    // signed subsequence alternates
    let mut last_sign: Option<Sign> = None;
    for s in &steps {
        if let Step::Signed(sgn) = s {
            if last_sign == Some(*sgn) {
                return Err(Error::structural("signed subsequence does not alternate"));
            }
            last_sign = Some(*sgn);
        }
    }

    // sign rules adjacent to directed edges
    for k in 0..steps.len() {
        if let Step::Directed { forward } = steps[k] {
            let (before, after) =
                if forward { (Sign::Plus, Sign::Minus) } else { (Sign::Minus, Sign::Plus) };
            if k > 0 {
                if let Step::Signed(sgn) = steps[k - 1] {
                    if sgn != before {
                        return Err(Error::structural("signed edge before directed edge has wrong sign"));
                    }
                }
            }
            if k + 1 < steps.len() {
                if let Step::Signed(sgn) = steps[k + 1] {
                    if sgn != after {
                        return Err(Error::structural("signed edge after directed edge has wrong sign"));
                    }
                }
            }
        }
    }

    // parity between consecutive directed edges
    let mut prev: Option<(bool, usize)> = None; // (forward, index)
    for k in 0..steps.len() {
        if let Step::Directed { forward } = steps[k] {
            if let Some((pf, pk)) = prev {
                let signed_between = steps[pk + 1..k]
                    .iter()
                    .filter(|s| matches!(s, Step::Signed(_)))
                    .count();
                let want_even = pf == forward;
                if want_even != (signed_between % 2 == 0) {
                    return Err(Error::structural(
                        "directed-edge parity rule violated between directed edges",
                    ));
                }
            }
            prev = Some((forward, k));
        }
    }
    Ok(())
}
