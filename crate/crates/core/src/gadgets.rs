//! Colour-prescribed homomorphism counting and host transformations that
//! undo one MR-minor step of the pattern while preserving the count.
//!
//! Each gadget takes a host coloured by the minor H' and returns a host
//! coloured by H with #Hom(H' → (G', c')) = #Hom(H → (G, c)).

use std::collections::BTreeSet;

use crate::digraph::{contract_arc_with_map, delete_loop, sink_delete_with_map, Digraph};
use crate::error::{Error, Result};
use crate::hom::{build_csp_filtered, count_join};
use crate::hypergraph::star_decomposition;
use crate::rational::Count;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredDigraph {
    pub graph: Digraph,
    /// Pattern vertex of every host vertex.
    pub color: Vec<usize>,
}

impl ColoredDigraph {
    pub fn new(graph: Digraph, color: Vec<usize>) -> Self {
        assert_eq!(graph.vertex_count(), color.len());
        ColoredDigraph { graph, color }
    }

    /// Every host arc maps to a pattern arc.
    pub fn validate(&self, h: &Digraph) -> Result<()> {
        if let Some(&c) = self.color.iter().find(|&&c| c >= h.vertex_count()) {
            return Err(Error::VertexOutOfRange {
                vertex: c,
                n: h.vertex_count(),
            });
        }
        for (x, y) in self.graph.arcs() {
            if !h.has_arc(self.color[x], self.color[y]) {
                return Err(Error::NotAHomomorphism(x, y));
            }
        }
        Ok(())
    }

    /// Smallest pattern vertex with no host vertex of that colour.
    pub fn missing_color(&self, pattern_size: usize) -> Option<usize> {
        let used: BTreeSet<usize> = self.color.iter().copied().collect();
        (0..pattern_size).find(|c| !used.contains(c))
    }

    pub fn is_surjective(&self, pattern_size: usize) -> bool {
        self.missing_color(pattern_size).is_none()
    }

    fn require_surjective(&self, h: &Digraph) -> Result<()> {
        self.validate(h)?;
        match self.missing_color(h.vertex_count()) {
            Some(c) => Err(Error::NotSurjective(c)),
            None => Ok(()),
        }
    }
}

/// Homomorphisms φ: H → G with colour(φ(v)) = v for every v.
pub fn count_cp_hom(h: &Digraph, colored: &ColoredDigraph) -> Result<Count> {
    let csp = build_csp_filtered(h, &colored.graph, Some(&colored.color));
    count_join(&csp, &star_decomposition(h))
}

/// Reference count by backtracking over colour classes.
pub fn brute_cp_hom(h: &Digraph, colored: &ColoredDigraph) -> Count {
    let k = h.vertex_count();
    let mut classes = vec![Vec::new(); k];
    for (x, &c) in colored.color.iter().enumerate() {
        if c < k {
            classes[c].push(x);
        }
    }
    fn go(h: &Digraph, g: &Digraph, classes: &[Vec<usize>], image: &mut Vec<usize>) -> u128 {
        let i = image.len();
        if i == h.vertex_count() {
            return 1;
        }
        let mut total = 0;
        for &x in &classes[i] {
            if h.has_loop(i) && !g.has_loop(x) {
                continue;
            }
            let ok = (0..i)
                .all(|j| (!h.has_arc(j, i) || g.has_arc(image[j], x)) && (!h.has_arc(i, j) || g.has_arc(x, image[j])));
            if ok {
                image.push(x);
                total += go(h, g, classes, image);
                image.pop();
            }
        }
        total
    }
    Count::from(go(h, &colored.graph, &classes, &mut Vec::new()))
}

fn check_outdegree(g: &Digraph, bound: usize, what: &str) -> Result<()> {
    if g.max_outdegree() > bound {
        return Err(Error::Defect(format!(
            "{what} produced outdegree {} above {bound}",
            g.max_outdegree()
        )));
    }
    Ok(())
}

/// Undoes the deletion of sink class `t`: `colored` is coloured by H ∖ T in
/// the vertex numbering of `sink_delete`.
pub fn gadget_sink_deletion(h: &Digraph, t: &[usize], colored: &ColoredDigraph) -> Result<ColoredDigraph> {
    let (minor, map) = sink_delete_with_map(h, t)?;
    colored.require_surjective(&minor)?;
    let mut back = vec![0; minor.vertex_count()];
    for (old, new) in map.iter().enumerate() {
        if let Some(new) = *new {
            back[new] = old;
        }
    }
    let mut t_sorted = t.to_vec();
    t_sorted.sort_unstable();
    t_sorted.dedup();
    let n0 = colored.graph.vertex_count();
    let slot = |ti: usize| n0 + t_sorted.binary_search(&ti).unwrap();

    let mut arcs: Vec<(usize, usize)> = colored.graph.arcs().collect();
    for &a in &t_sorted {
        for &b in h.out_neighbors(a) {
            // T is a sink, so every out-neighbour of T lies in T
            arcs.push((slot(a), slot(b)));
        }
    }
    for (x, &c) in colored.color.iter().enumerate() {
        let c = back[c];
        for &w in h.out_neighbors(c) {
            if t_sorted.binary_search(&w).is_ok() {
                arcs.push((x, slot(w)));
            }
        }
    }
    let graph = Digraph::from_arcs_merged(n0 + t_sorted.len(), arcs);
    let mut color: Vec<usize> = colored.color.iter().map(|&c| back[c]).collect();
    color.extend(&t_sorted);
    check_outdegree(
        &graph,
        colored.graph.max_outdegree() + h.vertex_count(),
        "sink-deletion gadget",
    )?;
    Ok(ColoredDigraph { graph, color })
}

/// Undoes the contraction of arc (u, v): `colored` is coloured by H/(u, v)
/// in the vertex numbering of `contract_arc`.
///
/// Every vertex w of colour uv is split into w_u → w_v. Arcs between w and a
/// vertex y of another colour x are copied to w_u or w_v according to the
/// pattern arcs between x and u or v. Arcs among the colour class itself are
/// copied according to the pattern arcs (v, u), (u, u) and (v, v); these carry
/// the loop at uv that a reverse arc or a loop at u or v leaves behind.
pub fn gadget_contraction(h: &Digraph, (u, v): (usize, usize), colored: &ColoredDigraph) -> Result<ColoredDigraph> {
    let (minor, map) = contract_arc_with_map(h, (u, v))?;
    colored.require_surjective(&minor)?;
    let uv = map[u];
    let mut back = vec![usize::MAX; minor.vertex_count()];
    for (old, &new) in map.iter().enumerate() {
        if old != u && old != v {
            back[new] = old;
        }
    }
    let g0 = &colored.graph;
    let merged: Vec<usize> = (0..g0.vertex_count()).filter(|&x| colored.color[x] == uv).collect();
    let kept: Vec<usize> = (0..g0.vertex_count()).filter(|&x| colored.color[x] != uv).collect();
    let mut id = vec![usize::MAX; g0.vertex_count()];
    for (i, &x) in kept.iter().enumerate() {
        id[x] = i;
    }
    let base_u = kept.len();
    let base_v = base_u + merged.len();
    let mut copy = vec![usize::MAX; g0.vertex_count()];
    for (i, &w) in merged.iter().enumerate() {
        copy[w] = i;
    }
    let cu = |w: usize| base_u + copy[w];
    let cv = |w: usize| base_v + copy[w];

    let mut arcs = Vec::new();
    for (a, b) in g0.arcs() {
        match (colored.color[a] == uv, colored.color[b] == uv) {
            (false, false) => arcs.push((id[a], id[b])),
            (false, true) => {
                let x = back[colored.color[a]];
                if h.has_arc(x, u) {
                    arcs.push((id[a], cu(b)));
                }
                if h.has_arc(x, v) {
                    arcs.push((id[a], cv(b)));
                }
            }
            (true, false) => {
                let x = back[colored.color[b]];
                if h.has_arc(u, x) {
                    arcs.push((cu(a), id[b]));
                }
                if h.has_arc(v, x) {
                    arcs.push((cv(a), id[b]));
                }
            }
            (true, true) => {
                if h.has_arc(v, u) {
                    arcs.push((cv(a), cu(b)));
                }
                if h.has_loop(u) {
                    arcs.push((cu(a), cu(b)));
                }
                if h.has_loop(v) {
                    arcs.push((cv(a), cv(b)));
                }
            }
        }
    }
    for &w in &merged {
        arcs.push((cu(w), cv(w)));
    }
    let graph = Digraph::from_arcs_merged(base_v + merged.len(), arcs);
    let mut color: Vec<usize> = kept.iter().map(|&x| back[colored.color[x]]).collect();
    color.extend(std::iter::repeat_n(u, merged.len()));
    color.extend(std::iter::repeat_n(v, merged.len()));
    check_outdegree(&graph, 2 * g0.max_outdegree() + 1, "contraction gadget")?;
    Ok(ColoredDigraph { graph, color })
}

/// Undoes the deletion of the loop at `u`.
pub fn gadget_loop_deletion(h: &Digraph, u: usize, colored: &ColoredDigraph) -> Result<ColoredDigraph> {
    let minor = delete_loop(h, u)?;
    colored.require_surjective(&minor)?;
    let g0 = &colored.graph;
    let loops = (0..g0.vertex_count())
        .filter(|&x| colored.color[x] == u)
        .map(|x| (x, x));
    let graph = Digraph::from_arcs_merged(g0.vertex_count(), g0.arcs().chain(loops));
    check_outdegree(&graph, g0.max_outdegree() + 1, "loop-deletion gadget")?;
    Ok(ColoredDigraph {
        graph,
        color: colored.color.clone(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinorOp {
    SinkDeletion(Vec<usize>),
    Contraction(usize, usize),
    LoopDeletion(usize),
}

impl MinorOp {
    pub fn apply(&self, h: &Digraph) -> Result<Digraph> {
        match self {
            MinorOp::SinkDeletion(t) => Ok(sink_delete_with_map(h, t)?.0),
            MinorOp::Contraction(a, b) => Ok(contract_arc_with_map(h, (*a, *b))?.0),
            MinorOp::LoopDeletion(a) => delete_loop(h, *a),
        }
    }

    pub fn gadget(&self, h: &Digraph, colored: &ColoredDigraph) -> Result<ColoredDigraph> {
        match self {
            MinorOp::SinkDeletion(t) => gadget_sink_deletion(h, t, colored),
            MinorOp::Contraction(a, b) => gadget_contraction(h, (*a, *b), colored),
            MinorOp::LoopDeletion(a) => gadget_loop_deletion(h, *a, colored),
        }
    }
}

/// Applies `ops` to `h` in order and returns the resulting minor.
pub fn minor_of(h: &Digraph, ops: &[MinorOp]) -> Result<Digraph> {
    ops.iter().try_fold(h.clone(), |acc, op| op.apply(&acc))
}

/// Lifts a host coloured by the minor `ops` produce from `h` back to a host
/// coloured by `h`, one gadget per operation, checking surjectivity at every
/// step.
pub fn lift_through_minors(h: &Digraph, ops: &[MinorOp], colored: &ColoredDigraph) -> Result<ColoredDigraph> {
    let mut chain = vec![h.clone()];
    for op in ops {
        let next = op.apply(chain.last().unwrap())?;
        chain.push(next);
    }
    ops.iter()
        .zip(&chain)
        .rev()
        .try_fold(colored.clone(), |acc, (op, pattern)| op.gadget(pattern, &acc))
}
