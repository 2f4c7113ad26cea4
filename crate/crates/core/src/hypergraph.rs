//! Hypergraphs built from digraphs and their structural invariants.
//!
//! Every linear program is solved exactly; invariants are compared for exact
//! equality throughout the test suite.

use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::digraph::{scc, Digraph, UGraph};
use crate::error::{Error, Result};
use crate::limits::check;
use crate::lp::{Cmp, LinearProgram, LpOutcome, Sense};
use crate::rational::{fraction_string, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HyperEdge {
    pub label: usize,
    pub vertices: Vec<usize>,
}

/// Vertex set `0..n` plus labelled hyperedges. Empty edges may be present as
/// records; they never enter a linear program.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<HyperEdge>,
}

impl Hypergraph {
    pub fn new(n: usize, edges: Vec<HyperEdge>) -> Result<Self> {
        let mut labels: Vec<usize> = edges.iter().map(|e| e.label).collect();
        labels.sort_unstable();
        if labels.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Parse {
                line: 0,
                message: "hyperedge labels must be unique".into(),
            });
        }
        let mut normalized = Vec::with_capacity(edges.len());
        for mut e in edges {
            if let Some(&v) = e.vertices.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            e.vertices.sort_unstable();
            e.vertices.dedup();
            normalized.push(e);
        }
        Ok(Hypergraph { n, edges: normalized })
    }

    /// Edges labelled by position.
    pub fn from_sets(n: usize, sets: Vec<Vec<usize>>) -> Result<Self> {
        Hypergraph::new(
            n,
            sets.into_iter()
                .enumerate()
                .map(|(label, vertices)| HyperEdge { label, vertices })
                .collect(),
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[HyperEdge] {
        &self.edges
    }

    pub fn nonempty_edges(&self) -> impl Iterator<Item = &HyperEdge> {
        self.edges.iter().filter(|e| !e.vertices.is_empty())
    }

    pub fn empty_edge_labels(&self) -> Vec<usize> {
        self.edges
            .iter()
            .filter(|e| e.vertices.is_empty())
            .map(|e| e.label)
            .collect()
    }

    /// Largest edge size.
    pub fn arity(&self) -> usize {
        self.edges.iter().map(|e| e.vertices.len()).max().unwrap_or(0)
    }

    /// Vertices lying in no nonempty edge.
    pub fn uncovered_vertices(&self) -> Vec<usize> {
        let mut covered = vec![false; self.n];
        for e in &self.edges {
            for &v in &e.vertices {
                covered[v] = true;
            }
        }
        (0..self.n).filter(|&v| !covered[v]).collect()
    }

    /// Two distinct vertices conflict when some edge contains both.
    fn conflict_masks(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.n];
        for e in &self.edges {
            for &a in &e.vertices {
                for &b in &e.vertices {
                    if a != b {
                        adj[a] |= 1 << b;
                    }
                }
            }
        }
        adj
    }
}

/// Reachability hypergraph: one edge per source class, holding everything
/// reachable from it. Edge labels are the class indices of the SCC decomposition.
pub fn reachability_hypergraph(d: &Digraph) -> Hypergraph {
    let dec = scc(d);
    let edges = dec
        .source_classes
        .iter()
        .map(|&c| HyperEdge {
            label: c,
            vertices: d.reachable_from(&dec.classes.blocks()[c]),
        })
        .collect();
    Hypergraph {
        n: d.vertex_count(),
        edges,
    }
}

/// The contour together with the map back to digraph vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contour {
    pub hypergraph: Hypergraph,
    /// `vertex_map[i]` is the digraph vertex behind contour vertex `i`.
    pub vertex_map: Vec<usize>,
}

/// Reachability hypergraph with every source-class vertex removed.
pub fn contour(d: &Digraph) -> Contour {
    let dec = scc(d);
    let reach = reachability_hypergraph(d);
    let source_vertices = dec.source_vertices();
    let mut index = vec![usize::MAX; d.vertex_count()];
    let vertex_map: Vec<usize> = (0..d.vertex_count())
        .filter(|v| source_vertices.binary_search(v).is_err())
        .collect();
    for (i, &v) in vertex_map.iter().enumerate() {
        index[v] = i;
    }
    let edges = reach
        .edges
        .into_iter()
        .map(|e| HyperEdge {
            label: e.label,
            vertices: e
                .vertices
                .into_iter()
                .filter(|&v| index[v] != usize::MAX)
                .map(|v| index[v])
                .collect(),
        })
        .collect();
    Contour {
        hypergraph: Hypergraph {
            n: vertex_map.len(),
            edges,
        },
        vertex_map,
    }
}

/// ρ*_H(X) and an optimal weighting (indexed like `H.edges()`).
pub fn fractional_edge_cover(h: &Hypergraph, x: &[usize]) -> Result<(Rational, Vec<Rational>)> {
    let mut targets = x.to_vec();
    targets.sort_unstable();
    targets.dedup();
    if let Some(&v) = targets.iter().find(|&&v| v >= h.n) {
        return Err(Error::VertexOutOfRange { vertex: v, n: h.n });
    }
    let m = h.edges.len();
    let mut lp = LinearProgram::new(m, Sense::Minimize, vec![Rational::one(); m]);
    for &v in &targets {
        let coeffs: Vec<(usize, Rational)> = h
            .edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.vertices.binary_search(&v).is_ok())
            .map(|(i, _)| (i, Rational::one()))
            .collect();
        if coeffs.is_empty() {
            return Err(Error::UncoverableVertex(v));
        }
        lp.add(coeffs, Cmp::Ge, Rational::one());
    }
    match lp.solve() {
        LpOutcome::Optimal { value, x } => Ok((value, x)),
        other => Err(Error::Defect(format!("edge cover LP returned {other:?}"))),
    }
}

/// α*(H) and an optimal fractional independent set.
pub fn fractional_independence(h: &Hypergraph) -> Result<(Rational, Vec<Rational>)> {
    fractional_independence_with_zeros(h, &[])
}

/// α*(H) with the weights of `forced_zero` fixed to 0.
pub fn fractional_independence_with_zeros(h: &Hypergraph, forced_zero: &[usize]) -> Result<(Rational, Vec<Rational>)> {
    let mut free = vec![true; h.n];
    for &v in forced_zero {
        free[v] = false;
    }
    if let Some(v) = h.uncovered_vertices().into_iter().find(|&v| free[v]) {
        return Err(Error::Unbounded(v));
    }
    let mut lp = LinearProgram::new(
        h.n,
        Sense::Maximize,
        (0..h.n)
            .map(|v| if free[v] { Rational::one() } else { Rational::zero() })
            .collect(),
    );
    for e in h.nonempty_edges() {
        let coeffs: Vec<(usize, Rational)> = e
            .vertices
            .iter()
            .filter(|&&v| free[v])
            .map(|&v| (v, Rational::one()))
            .collect();
        if !coeffs.is_empty() {
            lp.add(coeffs, Cmp::Le, Rational::one());
        }
    }
    for v in (0..h.n).filter(|&v| !free[v]) {
        lp.add(vec![(v, Rational::one())], Cmp::Eq, Rational::zero());
    }
    match lp.solve() {
        LpOutcome::Optimal { value, x } => Ok((value, x)),
        other => Err(Error::Defect(format!("independence LP returned {other:?}"))),
    }
}

/// Maximum independent set size in a graph given by adjacency bitmasks.
fn max_independent(adj: &[u64]) -> usize {
    fn go(adj: &[u64], cand: u64, size: usize, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        // branch on a vertex of maximum degree within the candidates; take
        // degree-0 vertices for free
        let mut pick = None;
        let mut free = 0u64;
        let mut best_deg = 0;
        let mut c = cand;
        while c != 0 {
            let v = c.trailing_zeros() as usize;
            c &= c - 1;
            let deg = (adj[v] & cand).count_ones();
            if deg == 0 {
                free |= 1 << v;
            } else if pick.is_none() || deg > best_deg {
                pick = Some(v);
                best_deg = deg;
            }
        }
        if free != 0 {
            go(adj, cand & !free, size + free.count_ones() as usize, best);
            return;
        }
        let v = pick.unwrap();
        go(adj, cand & !(1 << v) & !adj[v], size + 1, best);
        go(adj, cand & !(1 << v), size, best);
    }
    let n = adj.len();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0;
    go(adj, all, 0, &mut best);
    best
}

/// α(H): largest vertex set no two of whose members share an edge.
pub fn independence_number(h: &Hypergraph, limit: usize) -> Result<usize> {
    check("independence-number vertex", h.n, limit.min(64))?;
    Ok(max_independent(&h.conflict_masks()))
}

/// Minimum vertex cover of an undirected graph, as n - α(G).
pub fn vertex_cover_number(g: &UGraph, limit: usize) -> Result<usize> {
    check("vertex-cover vertex", g.vertex_count(), limit.min(64))?;
    let mut adj = vec![0u64; g.vertex_count()];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    Ok(g.vertex_count() - max_independent(&adj))
}

/// max(1, ρ* of the contour).
pub fn fractional_cover_number(d: &Digraph) -> Rational {
    let c = contour(d);
    let all: Vec<usize> = (0..c.hypergraph.n).collect();
    let (rho, _) = fractional_edge_cover(&c.hypergraph, &all).expect("every contour vertex is reachable from a source");
    rho.max(Rational::one())
}

pub fn source_number(d: &Digraph) -> usize {
    scc(d).source_classes.len()
}

/// A tree decomposition: bags plus the edges of the tree joining them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeDecomposition {
    pub bags: Vec<Vec<usize>>,
    pub tree_edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    /// Checks that the tree is a tree, that bags cover the vertices and every
    /// edge, and that each vertex occupies a connected subtree.
    pub fn validate(&self, n: usize, edges: &[Vec<usize>]) -> Result<()> {
        let b = self.bags.len();
        let fail = |m: String| Err(Error::InvalidDecomposition(m));
        if b == 0 {
            if n == 0 && edges.iter().all(Vec::is_empty) {
                return Ok(());
            }
            return fail("no bags".into());
        }
        if self.tree_edges.len() != b - 1 {
            return fail(format!("{} tree edges for {} bags", self.tree_edges.len(), b));
        }
        let mut adj = vec![Vec::new(); b];
        for &(x, y) in &self.tree_edges {
            if x >= b || y >= b {
                return fail(format!("tree edge ({x}, {y}) out of range"));
            }
            adj[x].push(y);
            adj[y].push(x);
        }
        let mut seen = vec![false; b];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return fail("tree is disconnected".into());
        }
        let mut contains = vec![vec![false; b]; n];
        for (i, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                if v >= n {
                    return fail(format!("bag vertex {v} out of range"));
                }
                contains[v][i] = true;
            }
        }
        for (v, row) in contains.iter().enumerate() {
            let holders: Vec<usize> = (0..b).filter(|&i| row[i]).collect();
            if holders.is_empty() {
                return fail(format!("vertex {v} in no bag"));
            }
            let mut reached = vec![false; b];
            reached[holders[0]] = true;
            let mut stack = vec![holders[0]];
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if row[y] && !reached[y] {
                        reached[y] = true;
                        stack.push(y);
                    }
                }
            }
            if holders.iter().any(|&i| !reached[i]) {
                return fail(format!("bags containing {v} are not connected"));
            }
        }
        for e in edges {
            let inside = self.bags.iter().any(|bag| e.iter().all(|v| bag.contains(v)));
            if !inside {
                return fail(format!("edge {e:?} in no bag"));
            }
        }
        Ok(())
    }

    /// max over bags of ρ*_H(bag).
    pub fn fractional_width(&self, h: &Hypergraph) -> Result<Rational> {
        let mut w = Rational::zero();
        for bag in &self.bags {
            let (rho, _) = fractional_edge_cover(h, bag)?;
            w = w.max(rho);
        }
        Ok(w)
    }
}

fn mask_to_vec(mask: u32) -> Vec<usize> {
    (0..32).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Exact fractional hypertree width by subset DP over elimination orderings,
/// with the witness decomposition of the optimal ordering.
pub fn fhtw(h: &Hypergraph, limit: usize) -> Result<(Rational, TreeDecomposition)> {
    let n = h.n;
    check("fhtw vertex", n, limit.min(20))?;
    if let Some(&v) = h.uncovered_vertices().first() {
        return Err(Error::UncoverableVertex(v));
    }
    if n == 0 {
        return Ok((
            Rational::zero(),
            TreeDecomposition {
                bags: Vec::new(),
                tree_edges: Vec::new(),
            },
        ));
    }
    let mut primal = vec![0u32; n];
    for e in h.nonempty_edges() {
        let m = e.vertices.iter().fold(0u32, |m, &v| m | 1 << v);
        for &v in &e.vertices {
            primal[v] |= m & !(1 << v);
        }
    }
    // Q(done, v): vertices outside done ∪ {v} reachable from v through done
    let q = |done: u32, v: usize| -> u32 {
        let mut visited = 1u32 << v;
        let mut frontier = 1u32 << v;
        let mut out = 0u32;
        while frontier != 0 {
            let x = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let nb = primal[x] & !visited;
            visited |= nb;
            out |= nb & !done;
            frontier |= nb & done;
        }
        out
    };
    let mut rho_memo: HashMap<u32, Rational> = HashMap::new();
    let mut rho = |bag: u32| -> Result<Rational> {
        if let Some(r) = rho_memo.get(&bag) {
            return Ok(r.clone());
        }
        let (r, _) = fractional_edge_cover(h, &mask_to_vec(bag))?;
        rho_memo.insert(bag, r.clone());
        Ok(r)
    };

    let full = (1u32 << n) - 1;
    let mut width: Vec<Option<Rational>> = vec![None; 1 << n];
    let mut choice = vec![usize::MAX; 1 << n];
    width[0] = Some(Rational::zero());
    for s in 1..=full {
        let mut best: Option<Rational> = None;
        for v in mask_to_vec(s) {
            let rest = s & !(1 << v);
            let bag = (1u32 << v) | q(rest, v);
            let prev = width[rest as usize].as_ref().unwrap();
            let r = rho(bag)?;
            let w = if &r > prev { r } else { prev.clone() };
            if best.as_ref().is_none_or(|b| w < *b) {
                best = Some(w);
                choice[s as usize] = v;
            }
        }
        width[s as usize] = best;
    }

    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let v = choice[s as usize];
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut bags = Vec::with_capacity(n);
    let mut tree_edges = Vec::new();
    let mut done = 0u32;
    for (i, &v) in order.iter().enumerate() {
        let later = q(done, v);
        let mut bag = mask_to_vec(later | 1 << v);
        bag.sort_unstable();
        bags.push(bag);
        let parent = mask_to_vec(later).into_iter().map(|w| position[w]).min();
        match parent {
            Some(p) => tree_edges.push((i, p)),
            None if i + 1 < n => tree_edges.push((i, n - 1)),
            None => {}
        }
        done |= 1 << v;
    }
    let td = TreeDecomposition { bags, tree_edges };
    Ok((width[full as usize].clone().unwrap(), td))
}

/// One center bag (all vertices outside source classes) with one leaf per
/// reachability edge. The center is dropped when it is empty and there is
/// at most one leaf.
pub fn star_decomposition(d: &Digraph) -> TreeDecomposition {
    let reach = reachability_hypergraph(d);
    let source_vertices = scc(d).source_vertices();
    let center: Vec<usize> = (0..d.vertex_count())
        .filter(|v| source_vertices.binary_search(v).is_err())
        .collect();
    let leaves: Vec<Vec<usize>> = reach.edges.into_iter().map(|e| e.vertices).collect();
    if center.is_empty() && leaves.len() <= 1 {
        return TreeDecomposition {
            bags: leaves,
            tree_edges: Vec::new(),
        };
    }
    let mut bags = vec![center];
    let mut tree_edges = Vec::new();
    for leaf in leaves {
        tree_edges.push((0, bags.len()));
        bags.push(leaf);
    }
    TreeDecomposition { bags, tree_edges }
}

/// Largest induced matching gadget of the condensation: targets of
/// source arcs, no two reachable from a common source.
pub fn img(d: &Digraph, limit: usize) -> Result<usize> {
    let dec = scc(d);
    let dag = &dec.condensation;
    let candidates: Vec<usize> = (0..dag.vertex_count())
        .filter(|&w| dag.in_neighbors(w).iter().any(|s| dec.source_classes.contains(s)))
        .collect();
    check("img candidate", candidates.len(), limit.min(64))?;
    let reach: Vec<Vec<usize>> = dec.source_classes.iter().map(|&s| dag.reachable_from(&[s])).collect();
    let mut adj = vec![0u64; candidates.len()];
    for (i, &a) in candidates.iter().enumerate() {
        for (j, &b) in candidates.iter().enumerate() {
            if i != j && reach.iter().any(|r| r.contains(&a) && r.contains(&b)) {
                adj[i] |= 1 << j;
            }
        }
    }
    Ok(max_independent(&adj))
}

/// All invariants of a pattern digraph. α, α*, ρ*, fhtw refer to the contour;
/// `reachability_fhtw` is the width of the reachability hypergraph.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantReport {
    pub alpha: usize,
    pub alpha_star: Rational,
    pub rho_star_edge_cover: Rational,
    pub fhtw: Rational,
    pub fhtw_witness: TreeDecomposition,
    pub reachability_fhtw: Rational,
    pub source_number: usize,
    pub fractional_cover_number: Rational,
    pub img: usize,
    pub vertex_cover_number: usize,
}

impl InvariantReport {
    pub fn compute(d: &Digraph, limits: &crate::limits::Limits) -> Result<Self> {
        let c = contour(d);
        let h = &c.hypergraph;
        let all: Vec<usize> = (0..h.vertex_count()).collect();
        let (alpha_star, _) = fractional_independence(h)?;
        let (rho, _) = fractional_edge_cover(h, &all)?;
        let (width, witness) = fhtw(h, limits.fhtw)?;
        let (reach_width, _) = fhtw(&reachability_hypergraph(d), limits.fhtw)?;
        Ok(InvariantReport {
            alpha: independence_number(h, limits.brute_independence)?,
            alpha_star,
            rho_star_edge_cover: rho,
            fhtw: width,
            fhtw_witness: witness,
            reachability_fhtw: reach_width,
            source_number: source_number(d),
            fractional_cover_number: fractional_cover_number(d),
            img: img(d, limits.brute_independence)?,
            vertex_cover_number: vertex_cover_number(&UGraph::from_digraph(d), limits.brute_independence)?,
        })
    }

    /// Flat `key: value` block.
    pub fn to_text(&self) -> String {
        format!(
            "alpha: {}\nalpha_star: {}\nrho_star_edge_cover: {}\nfhtw: {}\nreachability_fhtw: {}\nsource_number: {}\nfractional_cover_number: {}\nimg: {}\nvertex_cover_number: {}\n",
            self.alpha,
            self.alpha_star,
            self.rho_star_edge_cover,
            self.fhtw,
            self.reachability_fhtw,
            self.source_number,
            self.fractional_cover_number,
            self.img,
            self.vertex_cover_number
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "alpha": self.alpha,
            "alpha_star": fraction_string(&self.alpha_star),
            "rho_star_edge_cover": fraction_string(&self.rho_star_edge_cover),
            "fhtw": fraction_string(&self.fhtw),
            "fhtw_witness": self.fhtw_witness,
            "reachability_fhtw": fraction_string(&self.reachability_fhtw),
            "source_number": self.source_number,
            "fractional_cover_number": fraction_string(&self.fractional_cover_number),
            "img": self.img,
            "vertex_cover_number": self.vertex_cover_number,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::named::*;
    use crate::digraph::{directed_split, UGraph};
    use crate::rational::{int, rat};

    fn k3() -> Hypergraph {
        Hypergraph::from_sets(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap()
    }

    fn edge_sets(h: &Hypergraph) -> Vec<Vec<usize>> {
        h.edges().iter().map(|e| e.vertices.clone()).collect()
    }

    #[test]
    fn reachability_examples() {
        assert_eq!(
            edge_sets(&reachability_hypergraph(&transitive_triangle())),
            vec![vec![0, 1, 2]]
        );
        let k = 3;
        let r = reachability_hypergraph(&copies(&cyclic_triangle(), k));
        assert_eq!(r.edges().len(), k);
        for (i, e) in r.edges().iter().enumerate() {
            assert_eq!(e.vertices, vec![3 * i, 3 * i + 1, 3 * i + 2]);
        }
        let split = directed_split(&UGraph::complete(2));
        assert_eq!(edge_sets(&reachability_hypergraph(&split)), vec![vec![0, 1, 2]]);
        let iso = reachability_hypergraph(&Digraph::empty(2));
        assert_eq!(edge_sets(&iso), vec![vec![0], vec![1]]);
    }

    #[test]
    fn contour_examples() {
        let c = contour(&transitive_triangle());
        assert_eq!(c.vertex_map, vec![1, 2]);
        assert_eq!(edge_sets(&c.hypergraph), vec![vec![0, 1]]);

        let c = contour(&copies(&cyclic_triangle(), 3));
        assert_eq!(c.hypergraph.vertex_count(), 0);
        assert_eq!(c.hypergraph.empty_edge_labels().len(), 3);

        let c = contour(&directed_split(&UGraph::complete(3)));
        assert_eq!(c.vertex_map, vec![0, 1, 2]);
        let mut sets = edge_sets(&c.hypergraph);
        sets.sort();
        assert_eq!(sets, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn edge_cover_examples() {
        assert_eq!(fractional_edge_cover(&k3(), &[0, 1, 2]).unwrap().0, rat(3, 2));
        let single = Hypergraph::from_sets(3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(fractional_edge_cover(&single, &[0, 1, 2]).unwrap().0, int(1));
        let c = contour(&subset_incidence(2)).hypergraph;
        let all: Vec<usize> = (0..c.vertex_count()).collect();
        let (value, weights) = fractional_edge_cover(&c, &all).unwrap();
        assert_eq!(value, int(2));
        assert_eq!(weights.iter().sum::<Rational>(), int(2));
        let lonely = Hypergraph::from_sets(2, vec![vec![0]]).unwrap();
        assert_eq!(fractional_edge_cover(&lonely, &[1]), Err(Error::UncoverableVertex(1)));
    }

    #[test]
    fn independence_examples() {
        assert_eq!(fractional_independence(&k3()).unwrap().0, rat(3, 2));
        let single = Hypergraph::from_sets(4, vec![vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(fractional_independence(&single).unwrap().0, int(1));
        let two = Hypergraph::from_sets(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(fractional_independence(&two).unwrap().0, int(2));
        let lonely = Hypergraph::from_sets(2, vec![vec![0]]).unwrap();
        assert_eq!(fractional_independence(&lonely), Err(Error::Unbounded(1)));

        assert_eq!(independence_number(&k3(), 20).unwrap(), 1);
        assert_eq!(independence_number(&two, 20).unwrap(), 2);
        let k = 4;
        let c = contour(&copies(&transitive_triangle(), k)).hypergraph;
        assert_eq!(independence_number(&c, 20).unwrap(), k);
    }

    #[test]
    fn cover_and_source_numbers() {
        for k in 1..=4 {
            assert_eq!(
                fractional_cover_number(&copies(&transitive_triangle(), k)),
                int(k as i64)
            );
            assert_eq!(fractional_cover_number(&copies(&cyclic_triangle(), k)), int(1));
            assert_eq!(source_number(&copies(&cyclic_triangle(), k)), k);
        }
        assert_eq!(fractional_cover_number(&out_star(3)), int(1));
        assert_eq!(source_number(&Digraph::empty(1)), 1);
        assert_eq!(source_number(&directed_split(&UGraph::complete(3))), 3);
    }

    #[test]
    fn fhtw_examples() {
        let single = Hypergraph::from_sets(3, vec![vec![0, 1, 2]]).unwrap();
        let (w, td) = fhtw(&single, 12).unwrap();
        assert_eq!(w, int(1));
        td.validate(3, &edge_sets(&single)).unwrap();

        let (w, td) = fhtw(&k3(), 12).unwrap();
        assert_eq!(w, rat(3, 2));
        td.validate(3, &edge_sets(&k3())).unwrap();

        let k4 = contour(&directed_split(&UGraph::complete(4))).hypergraph;
        let (w, td) = fhtw(&k4, 12).unwrap();
        assert_eq!(w, int(2));
        td.validate(4, &edge_sets(&k4)).unwrap();
        assert_eq!(td.fractional_width(&k4).unwrap(), int(2));

        assert!(matches!(
            fhtw(&Hypergraph::from_sets(13, vec![(0..13).collect()]).unwrap(), 12),
            Err(Error::LimitExceeded { .. })
        ));
    }

    #[test]
    fn fhtw_of_a_cycle_is_two() {
        // 6-cycle as a graph: treewidth 2, each bag of 3 vertices needs cover 2
        let c6 = Hypergraph::from_sets(6, (0..6).map(|i| vec![i, (i + 1) % 6]).collect()).unwrap();
        let (w, td) = fhtw(&c6, 12).unwrap();
        assert_eq!(w, int(2));
        td.validate(6, &edge_sets(&c6)).unwrap();
    }

    #[test]
    fn star_decomposition_examples() {
        let td = star_decomposition(&transitive_triangle());
        assert_eq!(td.bags, vec![vec![1, 2], vec![0, 1, 2]]);
        let td = star_decomposition(&copies(&cyclic_triangle(), 2));
        assert_eq!(td.bags.len(), 3);
        assert!(td.bags[0].is_empty());
        let td = star_decomposition(&Digraph::empty(1));
        assert_eq!(td.bags, vec![vec![0]]);
        assert!(td.tree_edges.is_empty());
    }

    #[test]
    fn img_examples() {
        for k in 1..=4 {
            assert_eq!(img(&copies(&transitive_triangle(), k), 20).unwrap(), k);
        }
        assert_eq!(img(&single_arc(), 20).unwrap(), 1);
        assert_eq!(img(&transitive_triangle(), 20).unwrap(), 1);
        assert_eq!(img(&cyclic_triangle(), 20).unwrap(), 0);
    }

    #[test]
    fn vertex_cover_examples() {
        assert_eq!(vertex_cover_number(&UGraph::complete(3), 20).unwrap(), 2);
        let star = UGraph::new(5, (1..5).map(|i| (0, i))).unwrap();
        assert_eq!(vertex_cover_number(&star, 20).unwrap(), 1);
        let matching = UGraph::new(6, [(0, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!(vertex_cover_number(&matching, 20).unwrap(), 3);
    }

    #[test]
    fn report_for_transitive_triangle() {
        let r = InvariantReport::compute(&transitive_triangle(), &Default::default()).unwrap();
        assert_eq!(r.fractional_cover_number, int(1));
        assert_eq!(r.alpha_star, r.rho_star_edge_cover);
        assert!(r.fhtw <= r.rho_star_edge_cover);
        assert!(r.to_text().contains("fractional_cover_number: 1\n"));
        assert_eq!(r.to_json()["alpha_star"], "1/1");
    }
}
