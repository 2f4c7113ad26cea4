//! Directed graphs with loops, partitions, quotients and the MR-minor
//! operations (sink deletion, loop-suppressing contraction, loop deletion).

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// A digraph on the vertices `0..n`. Loops are allowed, parallel arcs are not.
///
/// Adjacency lists are kept sorted, so two digraphs compare equal exactly when
/// they have the same vertex count and the same arc set.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Digraph {
    n: usize,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    arcs: usize,
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, arcs={:?})", self.n, self.arcs().collect::<Vec<_>>())
    }
}

impl Digraph {
    /// Builds a digraph, rejecting duplicate arcs and out-of-range endpoints.
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Digraph::empty(n);
        for (u, v) in arcs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if !g.insert_arc(u, v) {
                return Err(Error::DuplicateArc(u, v));
            }
        }
        Ok(g)
    }

    /// Builds a digraph from arcs that may repeat; repeats are merged.
    ///
    /// Panics on out-of-range endpoints, which only internal callers can produce.
    pub fn from_arcs_merged(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Digraph::empty(n);
        for (u, v) in arcs {
            assert!(u < n && v < n, "arc ({u}, {v}) out of range for n={n}");
            g.insert_arc(u, v);
        }
        g
    }

    pub fn empty(n: usize) -> Self {
        Digraph {
            n,
            out: vec![Vec::new(); n],
            inn: vec![Vec::new(); n],
            arcs: 0,
        }
    }

    /// Inserts an arc, returning false if it was already present.
    fn insert_arc(&mut self, u: usize, v: usize) -> bool {
        match self.out[u].binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.out[u].insert(pos, v);
                let ipos = self.inn[v].binary_search(&u).unwrap_err();
                self.inn[v].insert(ipos, u);
                self.arcs += 1;
                true
            }
        }
    }

    fn remove_arc(&mut self, u: usize, v: usize) -> bool {
        match self.out[u].binary_search(&v) {
            Ok(pos) => {
                self.out[u].remove(pos);
                let ipos = self.inn[v].binary_search(&u).unwrap();
                self.inn[v].remove(ipos);
                self.arcs -= 1;
                true
            }
            Err(_) => false,
        }
    }

    /// Returns a copy with the arc added (no-op if already present).
    pub fn with_arc(&self, u: usize, v: usize) -> Self {
        let mut g = self.clone();
        g.insert_arc(u, v);
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }

    pub fn has_loop(&self, u: usize) -> bool {
        self.has_arc(u, u)
    }

    pub fn has_loops(&self) -> bool {
        (0..self.n).any(|u| self.has_loop(u))
    }

    pub fn loop_count(&self) -> usize {
        (0..self.n).filter(|&u| self.has_loop(u)).count()
    }

    pub fn out_neighbors(&self, u: usize) -> &[usize] {
        &self.out[u]
    }

    pub fn in_neighbors(&self, u: usize) -> &[usize] {
        &self.inn[u]
    }

    pub fn outdegree(&self, u: usize) -> usize {
        self.out[u].len()
    }

    pub fn indegree(&self, u: usize) -> usize {
        self.inn[u].len()
    }

    /// Maximum outdegree d(G); loops count towards it.
    pub fn max_outdegree(&self) -> usize {
        self.out.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, vs)| vs.iter().map(move |&v| (u, v)))
    }

    /// The subgraph induced by `vertices`, renumbered in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Digraph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Digraph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for &v in &self.out[u] {
                if index[v] != usize::MAX {
                    g.insert_arc(i, index[v]);
                }
            }
        }
        g
    }

    /// Removes the given vertices, renumbering the survivors in increasing order.
    /// Returns the new digraph and the old-to-new map (`None` for deleted vertices).
    pub fn remove_vertices(&self, removed: &[usize]) -> (Digraph, Vec<Option<usize>>) {
        let mut gone = vec![false; self.n];
        for &v in removed {
            gone[v] = true;
        }
        let keep: Vec<usize> = (0..self.n).filter(|&v| !gone[v]).collect();
        let mut map = vec![None; self.n];
        for (i, &v) in keep.iter().enumerate() {
            map[v] = Some(i);
        }
        (self.induced_subgraph(&keep), map)
    }

    /// Copy of the digraph with every loop removed.
    pub fn without_loops(&self) -> Digraph {
        Digraph::from_arcs_merged(self.n, self.arcs().filter(|(u, v)| u != v))
    }

    /// True iff the digraph has no directed cycle (a loop is a cycle).
    pub fn is_acyclic(&self) -> bool {
        let mut indeg: Vec<usize> = (0..self.n).map(|v| self.indegree(v)).collect();
        let mut queue: VecDeque<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(u) = queue.pop_front() {
            seen += 1;
            for &v in &self.out[u] {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    queue.push_back(v);
                }
            }
        }
        seen == self.n
    }

    /// All vertices reachable from `start` (including the start vertices).
    pub fn reachable_from(&self, start: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut stack = Vec::new();
        for &s in start {
            if !seen[s] {
                seen[s] = true;
                stack.push(s);
            }
        }
        while let Some(u) = stack.pop() {
            for &v in &self.out[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        (0..self.n).filter(|&v| seen[v]).collect()
    }

    /// N_k(v): vertices reachable from `v` by directed walks of length at most `k`.
    pub fn ball(&self, v: usize, k: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[v] = 0;
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            if dist[u] == k {
                continue;
            }
            for &w in &self.out[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        (0..self.n).filter(|&w| dist[w] != usize::MAX).collect()
    }

    /// Edges of the underlying simple undirected graph (loops dropped).
    pub fn underlying_edges(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<(usize, usize)> = self
            .arcs()
            .filter(|(u, v)| u != v)
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        edges
    }
}

/// A simple undirected graph on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl UGraph {
    /// Builds an undirected graph; edges are unordered pairs of distinct vertices.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut normalized = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("undirected graphs may not have loops ({u}, {v})"),
                });
            }
            normalized.push((u.min(v), u.max(v)));
        }
        let mut sorted = normalized.clone();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateArc(w[0].0, w[0].1));
            }
        }
        Ok(UGraph { n, edges: normalized })
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        UGraph { n, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn from_digraph(d: &Digraph) -> Self {
        UGraph {
            n: d.vertex_count(),
            edges: d.underlying_edges(),
        }
    }
}

/// A partition of `0..n` into nonempty blocks.
///
/// Blocks are stored sorted, and ordered by their smallest element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        let mut normalized = Vec::with_capacity(blocks.len());
        for mut b in blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition(n));
            }
            for &v in &b {
                if v >= n || seen[v] {
                    return Err(Error::InvalidPartition(n));
                }
                seen[v] = true;
            }
            b.sort_unstable();
            normalized.push(b);
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidPartition(n));
        }
        normalized.sort_by_key(|b| b[0]);
        Ok(Partition { n, blocks: normalized })
    }

    pub fn singletons(n: usize) -> Self {
        Partition {
            n,
            blocks: (0..n).map(|v| vec![v]).collect(),
        }
    }

    /// Partition from a restricted growth string (`labels[v]` = block of `v`).
    fn from_labels(labels: &[usize]) -> Self {
        let k = labels.iter().copied().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); k];
        for (v, &b) in labels.iter().enumerate() {
            blocks[b].push(v);
        }
        Partition {
            n: labels.len(),
            blocks,
        }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// `result[v]` is the index of the block containing `v`.
    pub fn block_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.n];
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in b {
                idx[v] = i;
            }
        }
        idx
    }
}

/// Streams all Bell(n) set partitions of `0..n` via restricted growth strings.
pub fn set_partitions(n: usize) -> SetPartitions {
    SetPartitions {
        labels: vec![0; n],
        maxima: vec![0; n],
        done: false,
    }
}

pub struct SetPartitions {
    labels: Vec<usize>,
    // maxima[i] = max(labels[0..i]) (0 for i = 0)
    maxima: Vec<usize>,
    done: bool,
}

impl Iterator for SetPartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let current = Partition::from_labels(&self.labels);
        let n = self.labels.len();
        // advance to the next restricted growth string
        let mut i = n;
        loop {
            if i <= 1 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.labels[i] <= self.maxima[i] {
                self.labels[i] += 1;
                for j in i + 1..n {
                    self.maxima[j] = self.maxima[j - 1].max(self.labels[j - 1]);
                    self.labels[j] = 0;
                }
                break;
            }
        }
        Some(current)
    }
}

/// Strongly connected components together with the condensation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SccDecomposition {
    /// Components, ordered by smallest vertex.
    pub classes: Partition,
    /// Loop-free DAG on the component indices.
    pub condensation: Digraph,
    /// Components with indegree 0 in the condensation.
    pub source_classes: Vec<usize>,
}

impl SccDecomposition {
    pub fn class_of(&self) -> Vec<usize> {
        self.classes.block_index()
    }

    pub fn sink_classes(&self) -> Vec<usize> {
        (0..self.condensation.vertex_count())
            .filter(|&c| self.condensation.outdegree(c) == 0)
            .collect()
    }

    /// All vertices lying in a source class.
    pub fn source_vertices(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self
            .source_classes
            .iter()
            .flat_map(|&c| self.classes.blocks()[c].iter().copied())
            .collect();
        vs.sort_unstable();
        vs
    }
}

/// Tarjan's algorithm, iterative.
pub fn scc(d: &Digraph) -> SccDecomposition {
    let n = d.vertex_count();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comps: Vec<Vec<usize>> = Vec::new();
    let mut counter = 0;
    // (vertex, next out-neighbour position)
    let mut call: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        call.push((root, 0));
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (u, ref mut pos)) = call.last_mut() {
            if *pos < d.out[u].len() {
                let w = d.out[u][*pos];
                *pos += 1;
                if index[w] == usize::MAX {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[u] = low[u].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[u]);
                }
                if low[u] == index[u] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        comp.push(w);
                        if w == u {
                            break;
                        }
                    }
                    comps.push(comp);
                }
            }
        }
    }

    let classes = Partition::new(n, comps).expect("components partition the vertex set");
    let class_of = classes.block_index();
    let k = classes.block_count();
    let condensation = Digraph::from_arcs_merged(
        k,
        d.arcs()
            .map(|(u, v)| (class_of[u], class_of[v]))
            .filter(|(a, b)| a != b),
    );
    let source_classes = (0..k).filter(|&c| condensation.indegree(c) == 0).collect();
    SccDecomposition {
        classes,
        condensation,
        source_classes,
    }
}

/// Quotient digraph: one vertex per block, an arc between blocks whenever some
/// arc joins their members. Arcs inside a block become loops.
pub fn quotient(d: &Digraph, sigma: &Partition) -> Result<Digraph> {
    if sigma.ground_size() != d.vertex_count() {
        return Err(Error::InvalidPartition(d.vertex_count()));
    }
    let idx = sigma.block_index();
    Ok(Digraph::from_arcs_merged(
        sigma.block_count(),
        d.arcs().map(|(u, v)| (idx[u], idx[v])),
    ))
}

/// Contracts the arc `(u, v)` without creating the loop it would induce.
/// Returns the contracted digraph and the old-to-new vertex map; the merged
/// vertex takes the position of `min(u, v)` in the stable renumbering.
pub fn contract_arc_with_map(d: &Digraph, (u, v): (usize, usize)) -> Result<(Digraph, Vec<usize>)> {
    if u >= d.vertex_count() || v >= d.vertex_count() || !d.has_arc(u, v) {
        return Err(Error::ArcNotPresent(u, v));
    }
    if u == v {
        // contracting a loop is a no-op identification; MR minors delete loops instead
        return Err(Error::ArcNotPresent(u, v));
    }
    let n = d.vertex_count();
    let (keep, gone) = (u.min(v), u.max(v));
    let map: Vec<usize> = (0..n)
        .map(|w| {
            let w = if w == gone { keep } else { w };
            if w > gone {
                w - 1
            } else {
                w
            }
        })
        .collect();
    let g = Digraph::from_arcs_merged(
        n - 1,
        d.arcs().filter(|&arc| arc != (u, v)).map(|(a, b)| (map[a], map[b])),
    );
    Ok((g, map))
}

pub fn contract_arc(d: &Digraph, arc: (usize, usize)) -> Result<Digraph> {
    contract_arc_with_map(d, arc).map(|(g, _)| g)
}

/// Deletes a sink class `t` of the condensation. Returns the remaining digraph
/// and the old-to-new map.
pub fn sink_delete_with_map(d: &Digraph, t: &[usize]) -> Result<(Digraph, Vec<Option<usize>>)> {
    let mut t_sorted = t.to_vec();
    t_sorted.sort_unstable();
    t_sorted.dedup();
    if t_sorted.is_empty() || t_sorted.iter().any(|&w| w >= d.vertex_count()) {
        return Err(Error::NotASink);
    }
    let dec = scc(d);
    let is_sink_class = dec
        .sink_classes()
        .into_iter()
        .any(|c| dec.classes.blocks()[c] == t_sorted);
    if !is_sink_class {
        return Err(Error::NotASink);
    }
    Ok(d.remove_vertices(&t_sorted))
}

pub fn sink_delete(d: &Digraph, t: &[usize]) -> Result<Digraph> {
    sink_delete_with_map(d, t).map(|(g, _)| g)
}

pub fn delete_loop(d: &Digraph, u: usize) -> Result<Digraph> {
    if u >= d.vertex_count() || !d.has_loop(u) {
        return Err(Error::LoopNotPresent(u));
    }
    let mut g = d.clone();
    g.remove_arc(u, u);
    Ok(g)
}

/// Categorical product; vertex `(a, b)` is numbered `a * |V(d2)| + b`.
pub fn tensor(d1: &Digraph, d2: &Digraph) -> Digraph {
    let n2 = d2.vertex_count();
    let mut g = Digraph::empty(d1.vertex_count() * n2);
    for (a, c) in d1.arcs() {
        for (b, e) in d2.arcs() {
            g.insert_arc(a * n2 + b, c * n2 + e);
        }
    }
    g
}

/// Directed split: the 1-subdivision with every arc pointing from the
/// subdivision vertex to an original vertex. Original vertices keep their ids,
/// subdivision vertices follow in edge order.
pub fn directed_split(g: &UGraph) -> Digraph {
    let n = g.vertex_count();
    let mut d = Digraph::empty(n + g.edges().len());
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        d.insert_arc(n + i, u);
        d.insert_arc(n + i, v);
    }
    d
}

/// Acyclic and every vertex is a source or a sink.
pub fn is_canonical_dag(d: &Digraph) -> bool {
    d.is_acyclic() && (0..d.vertex_count()).all(|v| d.indegree(v) == 0 || d.outdegree(v) == 0)
}

/// Streams every loop-free digraph on V(d) whose arc set contains E(d), in
/// order of the bitmask over the missing arcs.
pub fn arc_supergraphs(d: &Digraph, max_free_arcs: usize) -> Result<ArcSupergraphs> {
    if d.has_loops() {
        return Err(Error::LoopedPattern);
    }
    let n = d.vertex_count();
    let missing: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v && !d.has_arc(u, v))
        .collect();
    crate::limits::check("arc-supergraph free arcs", missing.len(), max_free_arcs.min(63))?;
    Ok(ArcSupergraphs {
        base: d.clone(),
        total: 1u64 << missing.len(),
        missing,
        next: 0,
    })
}

pub struct ArcSupergraphs {
    base: Digraph,
    missing: Vec<(usize, usize)>,
    next: u64,
    total: u64,
}

impl ArcSupergraphs {
    pub fn free_arcs(&self) -> usize {
        self.missing.len()
    }
}

impl Iterator for ArcSupergraphs {
    type Item = Digraph;

    fn next(&mut self) -> Option<Digraph> {
        if self.next >= self.total {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let mut g = self.base.clone();
        for (i, &(u, v)) in self.missing.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g.insert_arc(u, v);
            }
        }
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

/// Some small named digraphs used throughout the tests and the CLI.
pub mod named {
    use super::*;

    /// Cyclic triangle 0→1→2→0.
    pub fn cyclic_triangle() -> Digraph {
        Digraph::from_arcs_merged(3, [(0, 1), (1, 2), (2, 0)])
    }

    /// Transitive triangle 0→1, 0→2, 1→2.
    pub fn transitive_triangle() -> Digraph {
        Digraph::from_arcs_merged(3, [(0, 1), (0, 2), (1, 2)])
    }

    pub fn single_arc() -> Digraph {
        Digraph::from_arcs_merged(2, [(0, 1)])
    }

    pub fn loop_vertex() -> Digraph {
        Digraph::from_arcs_merged(1, [(0, 0)])
    }

    /// Directed path 0→1→…→n-1.
    pub fn path(n: usize) -> Digraph {
        Digraph::from_arcs_merged(n, (1..n).map(|i| (i - 1, i)))
    }

    /// Directed cycle on n ≥ 2 vertices.
    pub fn cycle(n: usize) -> Digraph {
        Digraph::from_arcs_merged(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Out-star: vertex 0 with arcs to 1..=k.
    pub fn out_star(k: usize) -> Digraph {
        Digraph::from_arcs_merged(k + 1, (1..=k).map(|i| (0, i)))
    }

    /// Disjoint union of `k` copies.
    pub fn copies(d: &Digraph, k: usize) -> Digraph {
        let n = d.vertex_count();
        Digraph::from_arcs_merged(
            n * k,
            (0..k).flat_map(|c| d.arcs().map(move |(u, v)| (c * n + u, c * n + v))),
        )
    }

    /// U_k ∪ D_k: sources 0..2k, one sink per k-subset of the sources, arcs
    /// from each source to every sink whose subset contains it.
    pub fn subset_incidence(k: usize) -> Digraph {
        let sources = 2 * k;
        let mut subsets = Vec::new();
        for mask in 0u64..(1 << sources) {
            if mask.count_ones() as usize == k {
                subsets.push(mask);
            }
        }
        let n = sources + subsets.len();
        Digraph::from_arcs_merged(
            n,
            subsets.iter().enumerate().flat_map(|(j, &mask)| {
                (0..sources)
                    .filter(move |&i| mask >> i & 1 == 1)
                    .map(move |i| (i, sources + j))
            }),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    fn arcs(d: &Digraph) -> Vec<(usize, usize)> {
        d.arcs().collect()
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(Digraph::new(2, [(0, 1), (0, 1)]), Err(Error::DuplicateArc(0, 1)));
        assert!(matches!(
            Digraph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
        let l = Digraph::new(1, [(0, 0)]).unwrap();
        assert!(l.has_loop(0));
        let both = Digraph::new(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(both.arc_count(), 2);
    }

    #[test]
    fn adjacency_indexes_agree() {
        let d = Digraph::new(4, [(0, 1), (1, 2), (2, 0), (3, 3), (0, 3)]).unwrap();
        for (u, v) in d.arcs() {
            assert!(d.in_neighbors(v).contains(&u));
        }
        let total_in: usize = (0..4).map(|v| d.indegree(v)).sum();
        assert_eq!(total_in, d.arc_count());
    }

    #[test]
    fn scc_examples() {
        let c = scc(&cyclic_triangle());
        assert_eq!(c.classes.blocks(), &[vec![0, 1, 2]]);
        assert_eq!(c.condensation.vertex_count(), 1);
        assert_eq!(c.condensation.arc_count(), 0);
        assert_eq!(c.source_classes, vec![0]);

        let t = scc(&transitive_triangle());
        assert_eq!(t.classes.block_count(), 3);
        assert_eq!(t.condensation, transitive_triangle());
        assert_eq!(t.source_classes, vec![0]);

        let k = 4;
        let many = scc(&copies(&transitive_triangle(), k));
        assert_eq!(many.classes.block_count(), 3 * k);
        assert_eq!(many.source_classes.len(), k);
    }

    #[test]
    fn scc_of_mixed_graph() {
        // 0→1, 1⇄2, 2→3
        let d = Digraph::new(4, [(0, 1), (1, 2), (2, 1), (2, 3)]).unwrap();
        let s = scc(&d);
        assert_eq!(s.classes.blocks(), &[vec![0], vec![1, 2], vec![3]]);
        assert_eq!(arcs(&s.condensation), vec![(0, 1), (1, 2)]);
        assert_eq!(s.source_classes, vec![0]);
        assert_eq!(s.sink_classes(), vec![2]);
    }

    #[test]
    fn quotient_examples() {
        let p = path(3);
        let sigma = Partition::new(3, vec![vec![0, 2], vec![1]]).unwrap();
        let q = quotient(&p, &sigma).unwrap();
        assert_eq!(arcs(&q), vec![(0, 1), (1, 0)]);

        let d = Digraph::new(4, [(0, 1), (2, 3), (3, 3)]).unwrap();
        assert_eq!(quotient(&d, &Partition::singletons(4)).unwrap(), d);

        let merged = quotient(&single_arc(), &Partition::new(2, vec![vec![0, 1]]).unwrap()).unwrap();
        assert_eq!(merged, loop_vertex());
    }

    #[test]
    fn contraction_examples() {
        let c = contract_arc(&single_arc(), (0, 1)).unwrap();
        assert_eq!(c, Digraph::empty(1));

        let c = contract_arc(&path(3), (0, 1)).unwrap();
        assert_eq!(arcs(&c), vec![(0, 1)]);

        let two_cycle = Digraph::new(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(contract_arc(&two_cycle, (0, 1)).unwrap(), loop_vertex());

        assert_eq!(contract_arc(&path(3), (0, 2)), Err(Error::ArcNotPresent(0, 2)));
    }

    #[test]
    fn sink_deletion_examples() {
        assert_eq!(sink_delete(&transitive_triangle(), &[2]).unwrap(), single_arc());
        assert_eq!(sink_delete(&cyclic_triangle(), &[0, 1, 2]).unwrap(), Digraph::empty(0));
        let d = Digraph::new(3, [(0, 1), (1, 2), (2, 1)]).unwrap();
        assert_eq!(sink_delete(&d, &[1, 2]).unwrap(), Digraph::empty(1));
        assert_eq!(sink_delete(&d, &[0]), Err(Error::NotASink));
        assert_eq!(sink_delete(&d, &[2]), Err(Error::NotASink));
    }

    #[test]
    fn loop_deletion_examples() {
        assert_eq!(delete_loop(&loop_vertex(), 0).unwrap(), Digraph::empty(1));
        let looped = cyclic_triangle().with_arc(0, 0);
        let once = delete_loop(&looped, 0).unwrap();
        assert_eq!(once, cyclic_triangle());
        assert_eq!(delete_loop(&once, 0), Err(Error::LoopNotPresent(0)));
    }

    #[test]
    fn tensor_examples() {
        let d = Digraph::new(3, [(0, 1), (1, 1), (2, 0)]).unwrap();
        assert_eq!(tensor(&d, &loop_vertex()), d);

        let t = tensor(&single_arc(), &single_arc());
        assert_eq!(t.vertex_count(), 4);
        assert_eq!(arcs(&t), vec![(0, 3)]);

        assert!(tensor(&transitive_triangle(), &path(3)).is_acyclic());
    }

    #[test]
    fn directed_split_examples() {
        let k2 = directed_split(&UGraph::complete(2));
        assert_eq!(arcs(&k2), vec![(2, 0), (2, 1)]);
        let k3 = directed_split(&UGraph::complete(3));
        assert_eq!(k3.vertex_count(), 6);
        assert_eq!(k3.arc_count(), 6);
        assert_eq!(directed_split(&UGraph::new(4, []).unwrap()), Digraph::empty(4));
    }

    #[test]
    fn canonical_dag_examples() {
        assert!(is_canonical_dag(&directed_split(&UGraph::complete(3))));
        assert!(!is_canonical_dag(&transitive_triangle()));
        assert!(!is_canonical_dag(&cyclic_triangle()));
    }

    #[test]
    fn arc_supergraph_counts() {
        assert_eq!(arc_supergraphs(&Digraph::empty(2), 14).unwrap().count(), 4);
        assert_eq!(arc_supergraphs(&single_arc(), 14).unwrap().count(), 2);
        let full = Digraph::new(
            3,
            (0..3).flat_map(|u| (0..3).filter(move |&v| v != u).map(move |v| (u, v))),
        )
        .unwrap();
        assert_eq!(arc_supergraphs(&full, 14).unwrap().collect::<Vec<_>>(), vec![full]);
        assert!(matches!(
            arc_supergraphs(&Digraph::empty(5), 14),
            Err(Error::LimitExceeded { .. })
        ));
        for sup in arc_supergraphs(&path(3), 14).unwrap() {
            assert!(path(3).arcs().all(|(u, v)| sup.has_arc(u, v)));
            assert!(!sup.has_loops());
        }
    }

    #[test]
    fn bell_numbers() {
        let bell = [1, 1, 2, 5, 15, 52, 203, 877];
        for (n, &b) in bell.iter().enumerate() {
            let parts: Vec<Partition> = set_partitions(n).collect();
            assert_eq!(parts.len(), b, "Bell({n})");
            let mut uniq = parts.clone();
            uniq.sort_by(|a, b| a.blocks().cmp(b.blocks()));
            uniq.dedup();
            assert_eq!(uniq.len(), b);
        }
    }

    #[test]
    fn ball_respects_radius() {
        let p = path(5);
        assert_eq!(p.ball(0, 2), vec![0, 1, 2]);
        assert_eq!(p.ball(3, 10), vec![3, 4]);
    }
}
