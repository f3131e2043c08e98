//! The augmented signed graph: each directed edge (i,j) is replaced by an
//! artificial vertex t and the signed pair {-it, +tj}, so that
//! rho((i,j)) = rho(-it) + rho(+tj) with the t-coordinate cancelling.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::model::{DirectedEdge, EdgeRef, ExponentVector, MixedGraph, Sign, VertexId};

#[derive(Clone, Debug)]
pub struct AugmentedGraph {
    pub base: MixedGraph,
    /// The augmented signed graph; vertices 0..n are the base vertices,
    /// artificial vertices follow in (tail, head) order of the base's
    /// directed edge list after sorting.
    pub signed_graph: MixedGraph,
    /// directed edge -> its artificial vertex in `signed_graph`
    pub artificial: BTreeMap<DirectedEdge, VertexId>,
    /// base edge -> the 1 or 2 corresponding edges of `signed_graph`
    pub edge_map: BTreeMap<EdgeRef, Vec<EdgeRef>>,
}

pub fn augment(g: &MixedGraph) -> AugmentedGraph {
    let n = g.vertex_count();
    let mut directed: Vec<(usize, DirectedEdge)> =
        g.directed_edges().iter().copied().enumerate().collect();
    directed.sort_by_key(|&(_, e)| (e.tail, e.head));

    let mut sg = MixedGraph::new(n + directed.len());
    let mut edge_map = BTreeMap::new();
    for (i, e) in g.signed_edges().iter().enumerate() {
        let r = sg.add_signed(e.u, e.v, e.sign).expect("copying signed edge");
        edge_map.insert(EdgeRef::Signed(i), vec![r]);
    }
    let mut artificial = BTreeMap::new();
    for (k, &(orig_idx, e)) in directed.iter().enumerate() {
        let t = VertexId(n + k);
        let neg = sg.add_signed(e.tail, t, Sign::Minus).expect("artificial edge");
        let pos = sg.add_signed(t, e.head, Sign::Plus).expect("artificial edge");
        artificial.insert(e, t);
        edge_map.insert(EdgeRef::Directed(orig_idx), vec![neg, pos]);
    }
    AugmentedGraph { base: g.clone(), signed_graph: sg, artificial, edge_map }
}

impl AugmentedGraph {
    pub fn artificial_count(&self) -> usize {
        self.artificial.len()
    }

    pub fn is_artificial(&self, v: VertexId) -> bool {
        v.0 >= self.base.vertex_count()
    }

    /// The base edge an augmented edge came from.
    pub fn base_edge_of(&self, aug_edge: EdgeRef) -> EdgeRef {
        for (&base, augs) in &self.edge_map {
            if augs.contains(&aug_edge) {
                return base;
            }
        }
        unreachable!("augmented edge without preimage")
    }

    /// Restrict an exponent vector over the augmented graph to the base
    /// coordinates; errors if any artificial coordinate is nonzero.
    pub fn project_exponents(&self, v: &ExponentVector) -> Result<ExponentVector> {
        let n = self.base.vertex_count();
        if v.dim() != self.signed_graph.vertex_count() {
            return Err(Error::precondition("exponent vector has wrong dimension"));
        }
        for k in n..v.dim() {
            if v.0[k] != 0 {
                return Err(Error::NotInSubring(k + 1));
            }
        }
        Ok(ExponentVector(v.0[..n].to_vec()))
    }

    /// Pull edge weights on the augmented graph back to the base: signed
    /// edges keep their weight, a directed edge receives the common weight of
    /// its artificial pair. Mismatched pairs error (a mismatch means the
    /// weighted rho sum has a nonzero artificial coordinate).
    pub fn pull_back_weights<T>(&self, w: &BTreeMap<EdgeRef, T>) -> Result<BTreeMap<EdgeRef, T>>
    where
        T: Copy + PartialEq + Default,
    {
        let zero = T::default();
        let mut out = BTreeMap::new();
        for (&base, augs) in &self.edge_map {
            match augs.as_slice() {
                [single] => {
                    let val = w.get(single).copied().unwrap_or(zero);
                    if val != zero {
                        out.insert(base, val);
                    }
                }
                [neg, pos] => {
                    let wn = w.get(neg).copied().unwrap_or(zero);
                    let wp = w.get(pos).copied().unwrap_or(zero);
                    if wn != wp {
                        let (t, h) = self.base.endpoints(base)?;
                        return Err(Error::InconsistentPair(t.0 + 1, h.0 + 1));
                    }
                    if wn != zero {
                        out.insert(base, wn);
                    }
                }
                _ => unreachable!(),
            }
        }
        Ok(out)
    }

    /// Push base edge weights forward: signed edges copy over; both
    /// artificial edges of a directed edge receive that edge's weight.
    pub fn push_forward_weights<T>(&self, w: &BTreeMap<EdgeRef, T>) -> BTreeMap<EdgeRef, T>
    where
        T: Copy + PartialEq + Default,
    {
        let zero = T::default();
        let mut out = BTreeMap::new();
        for (&base, augs) in &self.edge_map {
            if let Some(&val) = w.get(&base) {
                if val != zero {
                    for &a in augs {
                        out.insert(a, val);
                    }
                }
            }
        }
        out
    }
}

/// CLI rendering of an augmented graph: the plain graph format plus one
/// `# artificial t k = (i,j)` comment per artificial vertex.
pub fn render_augmented(a: &AugmentedGraph) -> String {
    let mut out = crate::model::render_graph(&a.signed_graph);
    for (e, t) in &a.artificial {
        out.push_str(&format!("# artificial t {} = ({},{})\n", t, e.tail, e.head));
    }
    out
}
