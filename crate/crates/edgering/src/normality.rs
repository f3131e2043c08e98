//! Normality decisions for edge rings: the odd cycle condition for signed
//! graphs, its generalization to mixed graphs via the augmented graph,
//! exceptional pairs and their monomials, normalization generators, and the
//! constructive certificates behind each verdict.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::altpath::{
    cycles_alternating_connected, generalized_alternating_connected, lift_cycle, AltWalk,
};
use crate::augment::augment;
use crate::cycles::{disjoint_odd_pairs, CycleDesc, CyclePair};
use crate::error::{Error, Result};
use crate::model::{rho, EdgeRef, ExponentVector, MixedGraph, Sign, VertexId};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphKind {
    Signed,
    Mixed,
}

/// A vertex-disjoint same-component pair of odd cycles with no (generalized)
/// alternating connection; the absence of a connecting walk is the defining
/// property, so there is no certificate beyond the pair itself.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ExceptionalPair {
    pub pair: CyclePair,
    /// The monomial exponent: signature of each cycle vertex, 0 elsewhere.
    pub m_pi: ExponentVector,
    /// Equals `m_pi`; kept under its cone-description name.
    pub half_rho_pi: ExponentVector,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct NormalityReport {
    pub normal: bool,
    pub exceptional_pairs: Vec<ExceptionalPair>,
    /// Deduplicated, sorted monomial exponents of the exceptional pairs.
    pub generators: Vec<ExponentVector>,
    pub checked_pairs: usize,
    pub graph_kind: GraphKind,
}

/// M_Pi of a disjoint cycle pair: coordinate v is the signature of v in
/// whichever cycle contains it.
pub fn pair_monomial(n: usize, c1: &CycleDesc, c2: &CycleDesc) -> ExponentVector {
    let mut m = ExponentVector::zero(n);
    for (&v, &s) in c1.signatures.iter().chain(c2.signatures.iter()) {
        m.0[v.0] = s;
    }
    m
}

fn assemble_report(
    n: usize,
    kind: GraphKind,
    checked_pairs: usize,
    exceptional: Vec<ExceptionalPair>,
) -> NormalityReport {
    let _ = n;
    let mut generators: Vec<ExponentVector> =
        exceptional.iter().map(|p| p.m_pi.clone()).collect();
    generators.sort();
    generators.dedup();
    NormalityReport {
        normal: exceptional.is_empty(),
        exceptional_pairs: exceptional,
        generators,
        checked_pairs,
        graph_kind: kind,
    }
}

/// Decide normality of a signed graph's edge ring by the odd cycle condition.
pub fn odd_cycle_condition(g: &MixedGraph, cycle_cap: usize) -> Result<NormalityReport> {
    if !g.is_signed() {
        return Err(Error::precondition("odd_cycle_condition requires a signed graph"));
    }
    let pairs = disjoint_odd_pairs(g, cycle_cap)?;
    let mut exceptional = Vec::new();
    for p in &pairs {
        if cycles_alternating_connected(g, &p.c1, &p.c2)?.is_none() {
            let m = pair_monomial(g.vertex_count(), &p.c1, &p.c2);
            exceptional.push(ExceptionalPair {
                pair: p.clone(),
                half_rho_pi: m.clone(),
                m_pi: m,
            });
        }
    }
    Ok(assemble_report(g.vertex_count(), GraphKind::Signed, pairs.len(), exceptional))
}

/// Decide normality of a mixed graph's edge ring by the generalized odd cycle
/// condition: odd cycles are those with an odd number of signed edges, and
/// connections are decided in the augmented graph. The report is phrased over
/// the input graph's own vertices and edges.
pub fn generalized_odd_cycle_condition(
    g: &MixedGraph,
    cycle_cap: usize,
) -> Result<NormalityReport> {
    if g.is_signed() {
        let mut r = odd_cycle_condition(g, cycle_cap)?;
        r.graph_kind = GraphKind::Signed;
        return Ok(r);
    }
    let a = augment(g);
    let pairs = disjoint_odd_pairs(g, cycle_cap)?;
    let mut exceptional = Vec::new();
    for p in &pairs {
        if generalized_alternating_connected(g, &p.c1, &p.c2, &a)?.is_none() {
            // The signature vector over G equals the augmented M_Pi projected:
            // artificial vertices always have signature 0.
            let m = pair_monomial(g.vertex_count(), &p.c1, &p.c2);
            exceptional.push(ExceptionalPair {
                pair: p.clone(),
                half_rho_pi: m.clone(),
                m_pi: m,
            });
        }
    }
    Ok(assemble_report(g.vertex_count(), GraphKind::Mixed, pairs.len(), exceptional))
}

/// Deduplicated normalization generators: the M_Pi of all exceptional pairs.
/// Empty exactly when the edge ring is normal.
pub fn normalization_generators(
    g: &MixedGraph,
    cycle_cap: usize,
) -> Result<Vec<ExponentVector>> {
    Ok(generalized_odd_cycle_condition(g, cycle_cap)?.generators)
}

/// Extend an alternating walk endpoint into its cycle until it attaches at a
/// vertex with nonzero signature; `front` selects which end to extend.
/// Returns the additional edges in walk order.
fn extend_into_cycle(
    g: &MixedGraph,
    c: &CycleDesc,
    mut at: VertexId,
    mut sign_at: Sign,
    front: bool,
) -> Result<(VertexId, Vec<EdgeRef>)> {
    let mut extra: Vec<EdgeRef> = Vec::new();
    let mut steps = 0;
    while c.signatures[&at] == 0 {
        steps += 1;
        if steps > c.len() + 1 {
            return Err(Error::structural("cycle extension did not terminate"));
        }
        // The two cycle edges at a zero-signature vertex carry opposite
        // signs; exactly one continues the alternation.
        let want = sign_at.flip();
        let k = c.vertices.iter().position(|&v| v == at).unwrap();
        let len = c.len();
        let candidates = [c.edges[(k + len - 1) % len], c.edges[k]];
        let e = *candidates
            .iter()
            .find(|&&e| g.sign_of(e) == Some(want))
            .ok_or_else(|| Error::structural("no alternating cycle edge at zero-signature vertex"))?;
        let (x, y) = g.endpoints(e)?;
        let next = if x == at { y } else { x };
        extra.push(e);
        at = next;
        sign_at = want;
    }
    if front {
        extra.reverse();
    }
    Ok((at, extra))
}

/// Nonnegative integer edge weights realizing the pair monomial M_Pi of a
/// connected (non-exceptional) disjoint odd pair: weight 1 per occurrence on
/// the maximally extended connecting walk, plus 0/1 weights on each cycle
/// minus its attachment vertex.
pub fn express_pair_product(
    g: &MixedGraph,
    c1: &CycleDesc,
    c2: &CycleDesc,
    w: &AltWalk,
) -> Result<BTreeMap<EdgeRef, u64>> {
    if !g.is_signed() {
        return Err(Error::precondition("express_pair_product requires a signed graph"));
    }
    if !c1.vertex_disjoint(c2) {
        return Err(Error::precondition("cycles are not vertex-disjoint"));
    }
    let start = w.vertices[0];
    let end = *w.vertices.last().unwrap();
    if !c1.contains_vertex(start) || !c2.contains_vertex(end) {
        return Err(Error::precondition("walk endpoints do not lie on the cycles"));
    }

    let (i1, front_ext) = extend_into_cycle(g, c1, start, w.first_sign, true)?;
    let (j2, back_ext) = extend_into_cycle(g, c2, end, w.last_sign, false)?;

    let mut weights: BTreeMap<EdgeRef, u64> = BTreeMap::new();
    for &e in front_ext.iter().chain(w.edges.iter()).chain(back_ext.iter()) {
        *weights.entry(e).or_insert(0) += 1;
    }
    for (c, attach) in [(c1, i1), (c2, j2)] {
        for e in cycle_arc_weights(g, c, attach)? {
            *weights.entry(e).or_insert(0) += 1;
        }
    }
    Ok(weights)
}

/// Weights of 0 and 1 on a cycle whose rho sum realizes the signature
/// product over C \ {attach}: pair up the nonzero-signature vertices of the
/// cut-open cycle in order and put weight 1 on each connecting arc.
fn cycle_arc_weights(_g: &MixedGraph, c: &CycleDesc, attach: VertexId) -> Result<Vec<EdgeRef>> {
    if c.signatures[&attach] == 0 {
        return Err(Error::precondition("attachment vertex must have nonzero signature"));
    }
    let len = c.len();
    if len == 1 {
        return Ok(Vec::new());
    }
    let k = c.vertices.iter().position(|&v| v == attach).unwrap();
    // path after cutting at `attach`: vertices in cycle order, edges between
    // consecutive ones (the two edges incident to `attach` are dropped)
    let path_v: Vec<VertexId> = (1..len).map(|d| c.vertices[(k + d) % len]).collect();
    let path_e: Vec<EdgeRef> = (1..len - 1).map(|d| c.edges[(k + d) % len]).collect();
    let marked: Vec<usize> =
        (0..path_v.len()).filter(|&i| c.signatures[&path_v[i]] != 0).collect();
    if marked.len() % 2 != 0 {
        return Err(Error::structural("odd number of nonzero signatures off the attachment"));
    }
    let mut out = Vec::new();
    for pair in marked.chunks(2) {
        let (a, b) = (pair[0], pair[1]);
        for e in &path_e[a..b] {
            out.push(*e);
        }
    }
    Ok(out)
}

/// The three certificates that exhibit M_Pi in T1 \ T2 for an exceptional
/// pair, phrased over the input graph's edges.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct WitnessEvidence {
    pub m_pi: ExponentVector,
    /// Edges of C and C', each carrying weight exactly one half; their
    /// weighted rho sum is M_Pi, showing cone membership.
    pub half_weight_edges: Vec<EdgeRef>,
    /// Integer (possibly negative) weights with rho sum M_Pi, showing
    /// lattice membership.
    pub lattice_weights: Vec<(EdgeRef, i64)>,
    /// Weight 1 on the edges of C and C'; rho sum 2*M_Pi, showing the square
    /// lies in the edge semigroup.
    pub doubled_weights: Vec<(EdgeRef, u64)>,
}

/// If the graph fails the (generalized) odd cycle condition, returns M_Pi of
/// the first exceptional pair together with constructive evidence; None if
/// the edge ring is normal.
pub fn non_normality_witness(
    g: &MixedGraph,
    cycle_cap: usize,
) -> Result<Option<WitnessEvidence>> {
    let report = generalized_odd_cycle_condition(g, cycle_cap)?;
    let Some(first) = report.exceptional_pairs.first() else {
        return Ok(None);
    };
    let a = augment(g);
    let l1 = lift_cycle(&a, &first.pair.c1)?;
    let l2 = lift_cycle(&a, &first.pair.c2)?;
    let s = &a.signed_graph;

    // (a)+(c): the cycle edges themselves, at weight 1/2 and weight 1.
    let mut cycle_edges: BTreeMap<EdgeRef, u64> = BTreeMap::new();
    for &e in l1.edges.iter().chain(l2.edges.iter()) {
        cycle_edges.insert(e, 1);
    }
    let doubled = a.pull_back_weights(&cycle_edges)?;
    let half_weight_edges: Vec<EdgeRef> = doubled.keys().copied().collect();

    // (b): integer lattice weights via a parity-controlled connecting walk
    // plus 0/1 arc weights on each cycle minus its endpoint.
    let lattice = lattice_witness_weights(s, &l1, &l2)?;
    let lattice = a.pull_back_weights(&lattice)?;

    Ok(Some(WitnessEvidence {
        m_pi: first.m_pi.clone(),
        half_weight_edges,
        lattice_weights: lattice.into_iter().collect(),
        doubled_weights: doubled.into_iter().collect(),
    }))
}

/// Shortest path between two vertices in the underlying undirected graph.
fn any_path(g: &MixedGraph, from: VertexId, to: VertexId) -> Result<Vec<EdgeRef>> {
    let inc = g.incidence();
    let mut pred: Vec<Option<(VertexId, EdgeRef)>> = vec![None; g.vertex_count()];
    let mut seen = vec![false; g.vertex_count()];
    seen[from.0] = true;
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        if v == to {
            let mut edges = Vec::new();
            let mut cur = v;
            while let Some((p, e)) = pred[cur.0] {
                edges.push(e);
                cur = p;
            }
            edges.reverse();
            return Ok(edges);
        }
        for &(e, w) in &inc[v.0] {
            if !seen[w.0] {
                seen[w.0] = true;
                pred[w.0] = Some((v, e));
                queue.push_back(w);
            }
        }
    }
    Err(Error::precondition("vertices lie in distinct components"))
}

/// Integer weights on a signed graph realizing M_Pi of a disjoint odd pair in
/// the edge lattice: a walk of controlled parity between nonzero-signature
/// vertices i, j with +-1 coefficients whose sign-products alternate, plus
/// 0/1 arc weights on C \ i and C' \ j.
fn lattice_witness_weights(
    s: &MixedGraph,
    c1: &CycleDesc,
    c2: &CycleDesc,
) -> Result<BTreeMap<EdgeRef, i64>> {
    let (&i, &si) = c1.signatures.iter().find(|(_, &v)| v != 0).unwrap();
    let (&j, &sj) = c2.signatures.iter().find(|(_, &v)| v != 0).unwrap();

    let mut walk = any_path(s, i, j)?;
    // same end signatures need odd length, opposite need even
    let want_odd = si == sj;
    if (walk.len() % 2 == 1) != want_odd {
        // append one lap around c2, which has odd length, starting and
        // ending at j
        let len = c2.len();
        let k = c2.vertices.iter().position(|&v| v == j).unwrap();
        for d in 0..len {
            walk.push(c2.edges[(k + d) % len]);
        }
    }

    let mut weights: BTreeMap<EdgeRef, i64> = BTreeMap::new();
    for (idx, &e) in walk.iter().enumerate() {
        let target = if idx % 2 == 0 { si } else { -si };
        let a = target * s.sign_of(e).expect("signed graph").val();
        *weights.entry(e).or_insert(0) += a;
    }
    for (c, attach) in [(c1, i), (c2, j)] {
        for e in cycle_arc_weights(s, c, attach)? {
            *weights.entry(e).or_insert(0) += 1;
        }
    }
    weights.retain(|_, v| *v != 0);
    Ok(weights)
}

/// Exact evaluation helper: the weighted rho sum of integer edge weights.
pub fn weighted_rho_sum<'a, I>(g: &MixedGraph, weights: I) -> Result<ExponentVector>
where
    I: IntoIterator<Item = (&'a EdgeRef, &'a i64)>,
{
    let mut sum = ExponentVector::zero(g.vertex_count());
    for (&e, &c) in weights {
        sum = sum.add(&rho(g, e)?.scaled(c));
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::{enumerate_odd_cycles, DEFAULT_CYCLE_CAP};
    use crate::model::parse_graph;

    const CAP: usize = DEFAULT_CYCLE_CAP;

    fn fig1(which: char) -> MixedGraph {
        match which {
            'G' => parse_graph("vertices 3\n+ 1 1\n+ 1 2\n+ 2 3\n- 3 3\n").unwrap(),
            _ => parse_graph("vertices 3\n+ 1 1\n+ 1 2\n- 2 3\n- 3 3\n").unwrap(),
        }
    }

    fn eval_u64(g: &MixedGraph, w: &BTreeMap<EdgeRef, u64>) -> ExponentVector {
        let as_i64: BTreeMap<EdgeRef, i64> =
            w.iter().map(|(&e, &c)| (e, c as i64)).collect();
        weighted_rho_sum(g, &as_i64).unwrap()
    }

    #[test]
    fn figure1_decisions() {
        let g = fig1('G');
        let rg = odd_cycle_condition(&g, CAP).unwrap();
        assert!(!rg.normal);
        assert_eq!(rg.exceptional_pairs.len(), 1);
        assert_eq!(rg.generators, vec![ExponentVector(vec![1, 0, -1])]);
        assert_eq!(rg.checked_pairs, 1);

        let h = fig1('H');
        let rh = odd_cycle_condition(&h, CAP).unwrap();
        assert!(rh.normal);
        assert!(rh.generators.is_empty());
    }

    #[test]
    fn bipartite_graph_vacuously_normal() {
        let g = parse_graph("vertices 4\n+ 1 2\n- 2 3\n+ 3 4\n").unwrap();
        let r = odd_cycle_condition(&g, CAP).unwrap();
        assert!(r.normal);
        assert_eq!(r.checked_pairs, 0);
    }

    #[test]
    fn bridged_triangles_two_edge_path_not_normal() {
        // two all-positive triangles joined by a path of two positive edges
        let g = parse_graph(
            "vertices 7\n+ 1 2\n+ 2 3\n+ 1 3\n+ 3 7\n+ 7 4\n+ 4 5\n+ 5 6\n+ 4 6\n",
        )
        .unwrap();
        let r = odd_cycle_condition(&g, CAP).unwrap();
        assert!(!r.normal);
        assert_eq!(r.generators, vec![ExponentVector(vec![1, 1, 1, 1, 1, 1, 0])]);
    }

    #[test]
    fn purely_directed_graphs_are_normal() {
        let g = parse_graph("vertices 4\n> 1 2\n> 2 3\n> 3 1\n> 2 4\n> 4 2\n").unwrap();
        let r = generalized_odd_cycle_condition(&g, CAP).unwrap();
        assert!(r.normal);
        assert_eq!(r.graph_kind, GraphKind::Mixed);
    }

    #[test]
    fn mixed_loops_with_directed_bridge() {
        let g = parse_graph("vertices 2\n+ 1 1\n- 2 2\n> 1 2\n").unwrap();
        let r = generalized_odd_cycle_condition(&g, CAP).unwrap();
        assert!(r.normal, "the directed edge provides the connection");
    }

    #[test]
    fn express_pair_product_figure1_h() {
        let h = fig1('H');
        let odd = enumerate_odd_cycles(&h, CAP).unwrap();
        let w = cycles_alternating_connected(&h, &odd[0], &odd[1]).unwrap().unwrap();
        let weights = express_pair_product(&h, &odd[0], &odd[1], &w).unwrap();
        let mut expect = BTreeMap::new();
        expect.insert(EdgeRef::Signed(1), 1u64); // +12
        expect.insert(EdgeRef::Signed(2), 1u64); // -23
        assert_eq!(weights, expect);
        assert_eq!(eval_u64(&h, &weights), ExponentVector(vec![1, 0, -1]));
    }

    #[test]
    fn express_pair_product_bridged_triangles() {
        let g = parse_graph(
            "vertices 6\n+ 1 2\n+ 2 3\n+ 1 3\n+ 4 5\n+ 5 6\n+ 4 6\n+ 3 4\n",
        )
        .unwrap();
        let odd = enumerate_odd_cycles(&g, CAP).unwrap();
        let w = cycles_alternating_connected(&g, &odd[0], &odd[1]).unwrap().unwrap();
        let weights = express_pair_product(&g, &odd[0], &odd[1], &w).unwrap();
        let m = pair_monomial(g.vertex_count(), &odd[0], &odd[1]);
        assert_eq!(eval_u64(&g, &weights), m);
        assert_eq!(m, ExponentVector(vec![1, 1, 1, 1, 1, 1]));
    }

    #[test]
    fn express_pair_product_rejects_same_cycle() {
        let g = fig1('H');
        let odd = enumerate_odd_cycles(&g, CAP).unwrap();
        let w = cycles_alternating_connected(&g, &odd[0], &odd[1]).unwrap().unwrap();
        assert!(express_pair_product(&g, &odd[0], &odd[0], &w).is_err());
    }

    #[test]
    fn witness_figure1_g() {
        let g = fig1('G');
        let w = non_normality_witness(&g, CAP).unwrap().unwrap();
        assert_eq!(w.m_pi, ExponentVector(vec![1, 0, -1]));
        // half weights: exactly the loops +11 and -33
        assert_eq!(w.half_weight_edges, vec![EdgeRef::Signed(0), EdgeRef::Signed(3)]);
        let half_sum: ExponentVector = w
            .half_weight_edges
            .iter()
            .map(|&e| rho(&g, e).unwrap())
            .fold(ExponentVector::zero(3), |a, b| a.add(&b));
        assert_eq!(half_sum, w.m_pi.scaled(2)); // twice the half-weighted sum

        // lattice weights re-evaluate to m_pi
        let lw: BTreeMap<EdgeRef, i64> = w.lattice_weights.iter().copied().collect();
        assert_eq!(weighted_rho_sum(&g, &lw).unwrap(), w.m_pi);

        // doubled weights re-evaluate to 2*m_pi
        let dw: BTreeMap<EdgeRef, i64> =
            w.doubled_weights.iter().map(|&(e, c)| (e, c as i64)).collect();
        assert_eq!(weighted_rho_sum(&g, &dw).unwrap(), w.m_pi.scaled(2));

        assert!(non_normality_witness(&fig1('H'), CAP).unwrap().is_none());
    }

    /// Two odd cycles on disjoint vertex sets joined through a spare vertex,
    /// with randomized signs and an optional directed chord: dense enough in
    /// exceptional pairs to exercise the witness machinery.
    fn sample_pair_heavy(rng: &mut impl rand::Rng) -> MixedGraph {
        use crate::model::Sign;
        fn rs(rng: &mut impl rand::Rng, g: &mut MixedGraph, a: usize, b: usize) {
            let s = if rng.gen_bool(0.7) { Sign::Plus } else { Sign::Minus };
            let _ = g.add_signed(VertexId(a), VertexId(b), s);
        }
        let mut g = MixedGraph::new(8);
        let k1 = if rng.gen_bool(0.5) { 1 } else { 3 };
        if k1 == 1 {
            rs(rng, &mut g, 0, 0);
        } else {
            rs(rng, &mut g, 0, 1);
            rs(rng, &mut g, 1, 2);
            rs(rng, &mut g, 0, 2);
        }
        rs(rng, &mut g, 3, 4);
        rs(rng, &mut g, 4, 5);
        rs(rng, &mut g, 3, 5);
        // connect through vertex 7 (and sometimes directly)
        rs(rng, &mut g, k1 - 1, 7);
        rs(rng, &mut g, 7, 3);
        if rng.gen_bool(0.3) {
            rs(rng, &mut g, 0, 3);
        }
        if rng.gen_bool(0.3) {
            let _ = g.add_directed(VertexId(6), VertexId(7));
        }
        g
    }

    #[test]
    fn witness_certificates_on_random_graphs() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        let mut witnessed = 0;
        for _ in 0..400 {
            let g = sample_pair_heavy(&mut rng);
            let Ok(Some(w)) = non_normality_witness(&g, 50_000) else { continue };
            witnessed += 1;
            let lw: BTreeMap<EdgeRef, i64> = w.lattice_weights.iter().copied().collect();
            assert_eq!(weighted_rho_sum(&g, &lw).unwrap(), w.m_pi, "graph {g:?}");
            let dw: BTreeMap<EdgeRef, i64> =
                w.doubled_weights.iter().map(|&(e, c)| (e, c as i64)).collect();
            assert_eq!(weighted_rho_sum(&g, &dw).unwrap(), w.m_pi.scaled(2), "graph {g:?}");
            let hw: BTreeMap<EdgeRef, i64> =
                w.half_weight_edges.iter().map(|&e| (e, 1)).collect();
            assert_eq!(weighted_rho_sum(&g, &hw).unwrap(), w.m_pi.scaled(2), "graph {g:?}");
        }
        assert!(witnessed > 20, "too few non-normal graphs sampled: {witnessed}");
    }

    #[test]
    fn exceptional_pair_total_degree_is_odd_per_cycle() {
        use crate::model::random_graph;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..300 {
            let g = random_graph(&mut rng, 7, 9, false);
            let Ok(r) = odd_cycle_condition(&g, 50_000) else { continue };
            for p in &r.exceptional_pairs {
                for c in [&p.pair.c1, &p.pair.c2] {
                    let deg: i64 = c.signatures.values().map(|s| s.abs()).sum();
                    assert_eq!(deg % 2, 1);
                }
            }
        }
    }

    #[test]
    fn duplicate_generators_collapse() {
        // two side-by-side copies of the figure-1 pattern sharing vertices 1
        // and 3 via parallel negative structure: build two exceptional pairs
        // with equal monomials by doubling the middle path.
        let g = parse_graph("vertices 4\n+ 1 1\n+ 1 2\n+ 2 3\n- 3 3\n+ 1 4\n+ 4 3\n").unwrap();
        let r = odd_cycle_condition(&g, CAP).unwrap();
        assert!(!r.normal);
        assert_eq!(r.generators.len(), 1);
        assert_eq!(r.generators[0], ExponentVector(vec![1, 0, -1, 0]));
    }

    #[test]
    fn non_exceptional_pairs_express_in_t2() {
        use crate::model::random_graph;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(77);
        let mut checked = 0;
        for _ in 0..300 {
            let g = random_graph(&mut rng, 7, 9, false);
            let odd = enumerate_odd_cycles(&g, 50_000).unwrap();
            let comp = g.component_ids();
            for i in 0..odd.len() {
                for j in i + 1..odd.len() {
                    if !odd[i].vertex_disjoint(&odd[j])
                        || comp[odd[i].min_vertex().0] != comp[odd[j].min_vertex().0]
                    {
                        continue;
                    }
                    if let Some(w) =
                        cycles_alternating_connected(&g, &odd[i], &odd[j]).unwrap()
                    {
                        let weights =
                            express_pair_product(&g, &odd[i], &odd[j], &w).unwrap();
                        let m = pair_monomial(g.vertex_count(), &odd[i], &odd[j]);
                        let as_i64: BTreeMap<EdgeRef, i64> =
                            weights.iter().map(|(&e, &c)| (e, c as i64)).collect();
                        assert_eq!(
                            weighted_rho_sum(&g, &as_i64).unwrap(),
                            m,
                            "pair ({:?},{:?}) walk {:?} in {:?}",
                            odd[i],
                            odd[j],
                            w,
                            g
                        );
                        checked += 1;
                    }
                }
            }
        }
        assert!(checked > 30, "too few connected pairs exercised: {checked}");
    }
}
