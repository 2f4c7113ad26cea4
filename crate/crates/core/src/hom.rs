//! Homomorphism counting through a #CSP instance with one relation per source
//! of the pattern, counted by dynamic programming over a tree decomposition.
//!
//! For a source class S of the pattern H, the relation lists the images of
//! the reach set R(S) under all homomorphisms H[R(S)] → G. Every vertex of
//! R(S) is reachable from S in at most |V(H)| - 1 steps, so each image lies
//! in the bounded out-ball of the image of the source. With host outdegree d
//! that keeps every relation at |V(G)| · d^O(|V(H)|) tuples.

use std::collections::{HashMap, HashSet, VecDeque};

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::digraph::{scc, Digraph};
use crate::error::{Error, Result};
use crate::hypergraph::{star_decomposition, TreeDecomposition};
use crate::rational::Count;

/// Hosts at least this large enumerate root images in parallel.
const PARALLEL_HOST_SIZE: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    /// Source class index this relation was built for.
    pub label: usize,
    /// Pattern vertices, ascending.
    pub scope: Vec<usize>,
    /// Host-vertex tuples aligned with `scope`, sorted.
    pub tuples: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CspInstance {
    pub pattern_vertices: usize,
    pub host_vertices: usize,
    pub relations: Vec<Relation>,
}

/// Images of the reach set of `source_class` under all homomorphisms of the
/// induced pattern into `g`.
pub fn enumerate_partial_homs(h: &Digraph, source_class: &[usize], g: &Digraph) -> Relation {
    enumerate_filtered(h, source_class, g, None, 0)
}

/// Same as [`enumerate_partial_homs`]; when `colors` is given, pattern vertex
/// `u` may only map to host vertices `x` with `colors[x] == u`.
pub(crate) fn enumerate_filtered(
    h: &Digraph,
    source_class: &[usize],
    g: &Digraph,
    colors: Option<&[usize]>,
    label: usize,
) -> Relation {
    let scope = h.reachable_from(source_class);
    let mut local = vec![usize::MAX; h.vertex_count()];
    for (i, &v) in scope.iter().enumerate() {
        local[v] = i;
    }
    // BFS from the smallest source vertex; every later vertex has its BFS
    // parent assigned before it
    let root = *source_class.iter().min().expect("nonempty source class");
    let mut order = vec![root];
    let mut parent = vec![usize::MAX; h.vertex_count()];
    let mut seen = vec![false; h.vertex_count()];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &w in h.out_neighbors(u) {
            if local[w] != usize::MAX && !seen[w] {
                seen[w] = true;
                parent[w] = u;
                order.push(w);
                queue.push_back(w);
            }
        }
    }
    debug_assert_eq!(order.len(), scope.len());
    // arcs to check when placing order[i]: (earlier position, forward?) plus loop
    let pos_in_order: HashMap<usize, usize> = order.iter().enumerate().map(|(i, &u)| (u, i)).collect();
    let checks: Vec<(bool, Vec<(usize, bool)>)> = order
        .iter()
        .enumerate()
        .map(|(i, &u)| {
            let mut c = Vec::new();
            for (j, &w) in order.iter().enumerate().take(i) {
                if h.has_arc(w, u) {
                    c.push((j, true));
                }
                if h.has_arc(u, w) {
                    c.push((j, false));
                }
            }
            (h.has_loop(u), c)
        })
        .collect();
    let parent_pos: Vec<usize> = order
        .iter()
        .map(|&u| {
            if u == root {
                usize::MAX
            } else {
                pos_in_order[&parent[u]]
            }
        })
        .collect();

    let search = Search {
        g,
        order: &order,
        checks: &checks,
        parent_pos: &parent_pos,
        colors,
    };
    let roots = 0..g.vertex_count();
    let per_root = |v: usize| -> Vec<Vec<u32>> {
        if colors.is_some_and(|c| c[v] != root) {
            return Vec::new();
        }
        let mut image = vec![u32::MAX; order.len()];
        let mut out = Vec::new();
        search.extend(0, v, &mut image, &mut out);
        out
    };
    let images: Vec<Vec<u32>> = if g.vertex_count() >= PARALLEL_HOST_SIZE {
        roots.into_par_iter().flat_map_iter(per_root).collect()
    } else {
        roots.flat_map(per_root).collect()
    };
    // re-order each image from BFS order to scope order
    let mut tuples: Vec<Vec<u32>> = images
        .into_iter()
        .map(|img| {
            let mut t = vec![0u32; scope.len()];
            for (i, &u) in order.iter().enumerate() {
                t[local[u]] = img[i];
            }
            t
        })
        .collect();
    tuples.sort_unstable();
    Relation { label, scope, tuples }
}

struct Search<'a> {
    g: &'a Digraph,
    order: &'a [usize],
    checks: &'a [(bool, Vec<(usize, bool)>)],
    parent_pos: &'a [usize],
    colors: Option<&'a [usize]>,
}

impl Search<'_> {
    fn fits(&self, i: usize, x: usize, image: &[u32]) -> bool {
        if let Some(c) = self.colors {
            if c[x] != self.order[i] {
                return false;
            }
        }
        let (looped, arcs) = &self.checks[i];
        if *looped && !self.g.has_loop(x) {
            return false;
        }
        arcs.iter().all(|&(j, forward)| {
            let y = image[j] as usize;
            if forward {
                self.g.has_arc(y, x)
            } else {
                self.g.has_arc(x, y)
            }
        })
    }

    fn extend(&self, i: usize, x: usize, image: &mut [u32], out: &mut Vec<Vec<u32>>) {
        if !self.fits(i, x, image) {
            return;
        }
        image[i] = x as u32;
        if i + 1 == self.order.len() {
            out.push(image.to_vec());
        } else {
            let p = image[self.parent_pos[i + 1]] as usize;
            for &y in self.g.out_neighbors(p) {
                self.extend(i + 1, y, image, out);
            }
        }
        image[i] = u32::MAX;
    }
}

/// One relation per source class of `h`.
pub fn build_csp(h: &Digraph, g: &Digraph) -> CspInstance {
    build_csp_filtered(h, g, None)
}

pub(crate) fn build_csp_filtered(h: &Digraph, g: &Digraph, colors: Option<&[usize]>) -> CspInstance {
    let dec = scc(h);
    let relations = dec
        .source_classes
        .iter()
        .map(|&c| enumerate_filtered(h, &dec.classes.blocks()[c], g, colors, c))
        .collect();
    CspInstance {
        pattern_vertices: h.vertex_count(),
        host_vertices: g.vertex_count(),
        relations,
    }
}

/// A relation projected onto the bag, prepared for backtracking.
struct BagProjection {
    /// bag positions already bound when this projection is joined
    bound: Vec<usize>,
    /// bag positions this projection binds
    fresh: Vec<usize>,
    index: HashMap<Vec<u32>, Vec<Vec<u32>>>,
}

struct ChildTable {
    /// bag positions (in the parent bag) of the separator variables
    positions: Vec<usize>,
    counts: HashMap<Vec<u32>, Count>,
}

/// Number of assignments of all pattern vertices satisfying every relation.
pub fn count_join(instance: &CspInstance, td: &TreeDecomposition) -> Result<Count> {
    let scopes: Vec<Vec<usize>> = instance.relations.iter().map(|r| r.scope.clone()).collect();
    for s in &scopes {
        if !td.bags.iter().any(|bag| s.iter().all(|v| bag.contains(v))) {
            return Err(Error::ScopeNotCovered(s.clone()));
        }
    }
    for bag in &td.bags {
        for &v in bag {
            if !scopes.iter().any(|s| s.contains(&v)) {
                return Err(Error::UncoveredBagVertex(v));
            }
        }
    }
    td.validate(instance.pattern_vertices, &scopes)?;
    let b = td.bags.len();
    if b == 0 {
        return Ok(Count::one());
    }

    // root the tree at bag 0
    let mut adj = vec![Vec::new(); b];
    for &(x, y) in &td.tree_edges {
        adj[x].push(y);
        adj[y].push(x);
    }
    let mut parent = vec![usize::MAX; b];
    let mut order = vec![0];
    let mut visited = vec![false; b];
    visited[0] = true;
    let mut i = 0;
    while i < order.len() {
        let x = order[i];
        i += 1;
        for &y in &adj[x] {
            if !visited[y] {
                visited[y] = true;
                parent[y] = x;
                order.push(y);
            }
        }
    }

    let mut tables: Vec<Option<HashMap<Vec<u32>, Count>>> = vec![None; b];
    for &t in order.iter().rev() {
        let bag = &td.bags[t];
        let sep_to_parent: Vec<usize> = if parent[t] == usize::MAX {
            Vec::new()
        } else {
            let pb = &td.bags[parent[t]];
            (0..bag.len()).filter(|&i| pb.contains(&bag[i])).collect()
        };
        let children: Vec<ChildTable> = adj[t]
            .iter()
            .filter(|&&c| parent[c] == t)
            .map(|&c| {
                let cb = &td.bags[c];
                let cpb = &td.bags[t];
                let positions = cb
                    .iter()
                    .filter(|v| cpb.contains(v))
                    .map(|v| cpb.iter().position(|w| w == v).unwrap())
                    .collect();
                ChildTable {
                    positions,
                    counts: tables[c].take().expect("child processed first"),
                }
            })
            .collect();
        let projections = prepare_projections(instance, bag);
        let mut table: HashMap<Vec<u32>, Count> = HashMap::new();
        let mut assignment = vec![u32::MAX; bag.len()];
        join_bag(&projections, 0, &mut assignment, &children, &sep_to_parent, &mut table);
        tables[t] = Some(table);
    }
    let root = tables[0].take().unwrap();
    Ok(root.get(&Vec::new()).cloned().unwrap_or_else(Count::zero))
}

fn prepare_projections(instance: &CspInstance, bag: &[usize]) -> Vec<BagProjection> {
    // (bag positions, distinct projected tuples)
    let mut raw: Vec<(Vec<usize>, Vec<Vec<u32>>)> = Vec::new();
    for r in &instance.relations {
        let cols: Vec<(usize, usize)> = r
            .scope
            .iter()
            .enumerate()
            .filter_map(|(j, v)| bag.iter().position(|w| w == v).map(|p| (j, p)))
            .collect();
        if cols.is_empty() {
            continue;
        }
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        let mut tuples = Vec::new();
        for t in &r.tuples {
            let p: Vec<u32> = cols.iter().map(|&(j, _)| t[j]).collect();
            if seen.insert(p.clone()) {
                tuples.push(p);
            }
        }
        raw.push((cols.iter().map(|&(_, p)| p).collect(), tuples));
    }
    // greedy join order: most already-bound positions first, then widest, then smallest
    let mut bound = vec![false; bag.len()];
    let mut out = Vec::with_capacity(raw.len());
    while !raw.is_empty() {
        let best = (0..raw.len())
            .max_by(|&a, &b| {
                let key = |i: usize| {
                    let (pos, tuples) = &raw[i];
                    let overlap = pos.iter().filter(|&&p| bound[p]).count();
                    (
                        overlap,
                        pos.len(),
                        std::cmp::Reverse(tuples.len()),
                        std::cmp::Reverse(i),
                    )
                };
                key(a).cmp(&key(b))
            })
            .unwrap();
        let (positions, tuples) = raw.swap_remove(best);
        let bound_idx: Vec<usize> = (0..positions.len()).filter(|&k| bound[positions[k]]).collect();
        let fresh_idx: Vec<usize> = (0..positions.len()).filter(|&k| !bound[positions[k]]).collect();
        let mut index: HashMap<Vec<u32>, Vec<Vec<u32>>> = HashMap::new();
        for t in tuples {
            let key = bound_idx.iter().map(|&k| t[k]).collect();
            let val = fresh_idx.iter().map(|&k| t[k]).collect();
            index.entry(key).or_default().push(val);
        }
        for &k in &fresh_idx {
            bound[positions[k]] = true;
        }
        out.push(BagProjection {
            bound: bound_idx.iter().map(|&k| positions[k]).collect(),
            fresh: fresh_idx.iter().map(|&k| positions[k]).collect(),
            index,
        });
    }
    out
}

fn join_bag(
    projections: &[BagProjection],
    depth: usize,
    assignment: &mut Vec<u32>,
    children: &[ChildTable],
    sep_to_parent: &[usize],
    table: &mut HashMap<Vec<u32>, Count>,
) {
    if depth == projections.len() {
        let mut weight = Count::one();
        for child in children {
            let key: Vec<u32> = child.positions.iter().map(|&p| assignment[p]).collect();
            match child.counts.get(&key) {
                Some(c) => weight *= c,
                None => return,
            }
        }
        let key: Vec<u32> = sep_to_parent.iter().map(|&p| assignment[p]).collect();
        *table.entry(key).or_insert_with(Count::zero) += weight;
        return;
    }
    let proj = &projections[depth];
    let key: Vec<u32> = proj.bound.iter().map(|&p| assignment[p]).collect();
    let Some(extensions) = proj.index.get(&key) else {
        return;
    };
    for ext in extensions {
        for (&p, &x) in proj.fresh.iter().zip(ext) {
            assignment[p] = x;
        }
        join_bag(projections, depth + 1, assignment, children, sep_to_parent, table);
    }
    for &p in &proj.fresh {
        assignment[p] = u32::MAX;
    }
}

/// #Hom(H → G) via the source-relation CSP and the star decomposition.
pub fn count_hom(h: &Digraph, g: &Digraph) -> Result<Count> {
    count_join(&build_csp(h, g), &star_decomposition(h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brute::brute_hom;
    use crate::digraph::named::*;
    use crate::hypergraph::{fhtw, reachability_hypergraph};
    use crate::limits::Limits;

    fn c(n: u64) -> Count {
        Count::from(n)
    }

    #[test]
    fn partial_hom_examples() {
        let r = enumerate_partial_homs(&single_arc(), &[0], &single_arc());
        assert_eq!(r.scope, vec![0, 1]);
        assert_eq!(r.tuples, vec![vec![0, 1]]);

        let r = enumerate_partial_homs(&cyclic_triangle(), &[0, 1, 2], &cyclic_triangle());
        assert_eq!(r.tuples, vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]);

        let r = enumerate_partial_homs(&transitive_triangle(), &[0], &transitive_triangle());
        assert_eq!(r.tuples, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn csp_shapes() {
        let g = cycle(5);
        assert_eq!(build_csp(&transitive_triangle(), &g).relations.len(), 1);
        assert_eq!(build_csp(&copies(&cyclic_triangle(), 3), &g).relations.len(), 3);
        let with_isolated = Digraph::new(3, [(0, 1)]).unwrap();
        let csp = build_csp(&with_isolated, &g);
        let lonely = csp.relations.iter().find(|r| r.scope == vec![2]).unwrap();
        assert_eq!(lonely.tuples.len(), 5);
    }

    #[test]
    fn count_examples() {
        let tt = transitive_triangle();
        let csp = build_csp(&tt, &tt);
        assert_eq!(count_join(&csp, &star_decomposition(&tt)).unwrap(), c(1));
        assert_eq!(count_hom(&cyclic_triangle(), &cyclic_triangle()).unwrap(), c(3));
        assert_eq!(count_hom(&Digraph::empty(1), &cycle(7)).unwrap(), c(7));
        assert_eq!(count_hom(&tt, &cycle(6)).unwrap(), c(0));
        assert_eq!(count_hom(&Digraph::empty(0), &cycle(3)).unwrap(), c(1));
        assert_eq!(count_hom(&single_arc(), &Digraph::empty(0)).unwrap(), c(0));
    }

    #[test]
    fn loops_are_respected() {
        let host = Digraph::new(3, [(0, 0), (0, 1), (1, 1), (2, 0)]).unwrap();
        assert_eq!(count_hom(&loop_vertex(), &host).unwrap(), c(2));
        let arc_loop = Digraph::new(2, [(0, 1), (1, 1)]).unwrap();
        let l = Limits::default();
        assert_eq!(
            count_hom(&arc_loop, &host).unwrap(),
            brute_hom(&arc_loop, &host, &l).unwrap()
        );
    }

    #[test]
    fn join_rejects_bad_decompositions() {
        let tt = transitive_triangle();
        let csp = build_csp(&tt, &tt);
        let td = TreeDecomposition {
            bags: vec![vec![0, 1], vec![1, 2]],
            tree_edges: vec![(0, 1)],
        };
        assert_eq!(count_join(&csp, &td), Err(Error::ScopeNotCovered(vec![0, 1, 2])));
        let td = TreeDecomposition {
            bags: vec![vec![0, 1, 2, 3]],
            tree_edges: vec![],
        };
        assert_eq!(count_join(&csp, &td), Err(Error::UncoveredBagVertex(3)));
    }

    #[test]
    fn decomposition_independence_on_two_sources() {
        // two sources sharing a sink: 0→2, 1→2, 1→3
        let h = Digraph::new(4, [(0, 2), (1, 2), (1, 3)]).unwrap();
        let g = Digraph::new(6, [(0, 1), (1, 2), (2, 0), (3, 1), (4, 5), (5, 3), (0, 4)]).unwrap();
        let csp = build_csp(&h, &g);
        let star = count_join(&csp, &star_decomposition(&h)).unwrap();
        let (_, td) = fhtw(&reachability_hypergraph(&h), 12).unwrap();
        assert_eq!(count_join(&csp, &td).unwrap(), star);
        assert_eq!(star, brute_hom(&h, &g, &Limits::default()).unwrap());
    }
}
