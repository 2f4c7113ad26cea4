//! Canonical forms and automorphism counts for small digraphs.
//!
//! Vertices are first coloured by iterated degree refinement; the canonical
//! form is then the lexicographically smallest adjacency string over all
//! orderings that list colour classes in canonical order. Twin vertices are
//! interchangeable and only one representative per twin class is branched on.

use std::collections::{BTreeMap, HashMap};

use crate::digraph::Digraph;
use crate::error::Result;
use crate::limits::check;

/// Isomorphism-invariant key; equal keys iff isomorphic digraphs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonKey {
    n: usize,
    bits: Vec<u64>,
}

#[derive(Debug, Clone)]
pub struct CanonicalForm {
    /// `labeling[v]` is the canonical position of vertex `v`.
    pub labeling: Vec<usize>,
    pub key: CanonKey,
    /// The digraph relabelled by `labeling`.
    pub graph: Digraph,
}

/// Stable refined colouring: equal colours for vertices that cannot be told
/// apart by iterated (loop, outdegree, indegree, neighbour colour) signatures.
fn refined_colors(d: &Digraph) -> Vec<usize> {
    let n = d.vertex_count();
    let mut colors: Vec<usize> = {
        let sig: Vec<(bool, usize, usize)> = (0..n).map(|v| (d.has_loop(v), d.outdegree(v), d.indegree(v))).collect();
        rank(&sig)
    };
    let mut classes = count_distinct(&colors);
    loop {
        let sig: Vec<(usize, Vec<usize>, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut outs: Vec<usize> = d.out_neighbors(v).iter().map(|&w| colors[w]).collect();
                let mut ins: Vec<usize> = d.in_neighbors(v).iter().map(|&w| colors[w]).collect();
                outs.sort_unstable();
                ins.sort_unstable();
                (colors[v], outs, ins)
            })
            .collect();
        let next = rank(&sig);
        let next_classes = count_distinct(&next);
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

fn rank<T: Ord + Clone>(sig: &[T]) -> Vec<usize> {
    let mut distinct: Vec<T> = sig.to_vec();
    distinct.sort();
    distinct.dedup();
    sig.iter().map(|s| distinct.binary_search(s).unwrap()).collect()
}

fn count_distinct(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// `twin[v]` = smallest vertex `w` such that swapping `v` and `w` is an automorphism
/// because they have identical neighbourhoods.
fn twin_representatives(d: &Digraph) -> Vec<usize> {
    let n = d.vertex_count();
    let strip = |list: &[usize], a: usize, b: usize| -> Vec<usize> {
        list.iter().copied().filter(|&x| x != a && x != b).collect()
    };
    let mut rep: Vec<usize> = (0..n).collect();
    for v in 0..n {
        for w in 0..v {
            if rep[w] != w {
                continue;
            }
            let same = d.has_loop(v) == d.has_loop(w)
                && d.has_arc(v, w) == d.has_arc(w, v)
                && strip(d.out_neighbors(v), v, w) == strip(d.out_neighbors(w), v, w)
                && strip(d.in_neighbors(v), v, w) == strip(d.in_neighbors(w), v, w);
            if same {
                rep[v] = w;
                break;
            }
        }
    }
    rep
}

struct Search<'a> {
    d: &'a Digraph,
    /// colour required at each canonical position
    slot_color: Vec<usize>,
    colors: Vec<usize>,
    twins: Vec<usize>,
    order: Vec<usize>,
    used: Vec<bool>,
    current: Vec<bool>,
    best: Option<(Vec<bool>, Vec<usize>)>,
}

impl Search<'_> {
    fn emit_bits(&mut self, p: usize, x: usize) {
        self.current.push(self.d.has_loop(x));
        for q in 0..p {
            let y = self.order[q];
            self.current.push(self.d.has_arc(y, x));
            self.current.push(self.d.has_arc(x, y));
        }
    }

    fn run(&mut self, p: usize) {
        let n = self.d.vertex_count();
        if p == n {
            let better = match &self.best {
                None => true,
                Some((best, _)) => self.current < *best,
            };
            if better {
                self.best = Some((self.current.clone(), self.order.clone()));
            }
            return;
        }
        let mut tried_twin_classes: Vec<usize> = Vec::new();
        for x in 0..n {
            if self.used[x] || self.colors[x] != self.slot_color[p] {
                continue;
            }
            // twins of an already-tried candidate yield the same strings
            let t = self.twins[x];
            if tried_twin_classes.contains(&t) {
                continue;
            }
            tried_twin_classes.push(t);

            let start = self.current.len();
            self.emit_bits(p, x);
            let pruned = match &self.best {
                Some((best, _)) => self.current[..] > best[..self.current.len()],
                None => false,
            };
            if !pruned {
                self.used[x] = true;
                self.order.push(x);
                self.run(p + 1);
                self.order.pop();
                self.used[x] = false;
            }
            self.current.truncate(start);
        }
    }
}

/// Canonical labelling, key and relabelled digraph.
pub fn canonical_form(d: &Digraph, limit: usize) -> Result<CanonicalForm> {
    let n = d.vertex_count();
    check("canonical-form vertex", n, limit)?;
    let colors = refined_colors(d);
    let mut slot_color = colors.clone();
    slot_color.sort_unstable();
    let mut search = Search {
        d,
        slot_color,
        colors,
        twins: twin_representatives(d),
        order: Vec::with_capacity(n),
        used: vec![false; n],
        current: Vec::new(),
        best: None,
    };
    search.run(0);
    let (bits, order) = search.best.expect("at least one ordering exists");
    let mut labeling = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        labeling[v] = pos;
    }
    let graph = Digraph::from_arcs_merged(n, d.arcs().map(|(u, v)| (labeling[u], labeling[v])));
    let mut words = vec![0u64; bits.len().div_ceil(64)];
    for (i, &b) in bits.iter().enumerate() {
        if b {
            words[i / 64] |= 1 << (i % 64);
        }
    }
    Ok(CanonicalForm {
        labeling,
        key: CanonKey { n, bits: words },
        graph,
    })
}

pub fn canonical_key(d: &Digraph, limit: usize) -> Result<CanonKey> {
    canonical_form(d, limit).map(|c| c.key)
}

pub fn isomorphic(a: &Digraph, b: &Digraph, limit: usize) -> Result<bool> {
    if a.vertex_count() != b.vertex_count() || a.arc_count() != b.arc_count() {
        return Ok(false);
    }
    Ok(canonical_key(a, limit)? == canonical_key(b, limit)?)
}

/// |Aut(D)| by backtracking over colour-preserving permutations.
pub fn automorphism_count(d: &Digraph, limit: usize) -> Result<u64> {
    let n = d.vertex_count();
    check("automorphism vertex", n, limit)?;
    let colors = refined_colors(d);
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(count_automorphisms(d, &colors, 0, &mut image, &mut used))
}

fn count_automorphisms(d: &Digraph, colors: &[usize], v: usize, image: &mut [usize], used: &mut [bool]) -> u64 {
    let n = d.vertex_count();
    if v == n {
        return 1;
    }
    let mut total = 0;
    for x in 0..n {
        if used[x] || colors[x] != colors[v] || d.has_loop(v) != d.has_loop(x) {
            continue;
        }
        let consistent =
            (0..v).all(|u| d.has_arc(u, v) == d.has_arc(image[u], x) && d.has_arc(v, u) == d.has_arc(x, image[u]));
        if !consistent {
            continue;
        }
        image[v] = x;
        used[x] = true;
        total += count_automorphisms(d, colors, v + 1, image, used);
        used[x] = false;
    }
    image[v] = usize::MAX;
    total
}

/// One representative per isomorphism class of digraphs on exactly `n`
/// vertices, optionally with loops. Representatives are canonical graphs,
/// sorted by key.
pub fn all_digraphs(n: usize, loops: bool) -> Vec<Digraph> {
    let mut level: BTreeMap<CanonKey, Digraph> = BTreeMap::new();
    level.insert(
        canonical_key(&Digraph::empty(0), usize::MAX).unwrap(),
        Digraph::empty(0),
    );
    for size in 1..=n {
        let mut next: HashMap<CanonKey, Digraph> = HashMap::new();
        let new = size - 1;
        let choices = 2 * new + usize::from(loops);
        for base in level.values() {
            for mask in 0u64..(1 << choices) {
                let mut arcs: Vec<(usize, usize)> = base.arcs().collect();
                for u in 0..new {
                    if mask >> u & 1 == 1 {
                        arcs.push((u, new));
                    }
                    if mask >> (new + u) & 1 == 1 {
                        arcs.push((new, u));
                    }
                }
                if loops && mask >> (2 * new) & 1 == 1 {
                    arcs.push((new, new));
                }
                let g = Digraph::from_arcs_merged(size, arcs);
                let cf = canonical_form(&g, usize::MAX).unwrap();
                next.entry(cf.key).or_insert(cf.graph);
            }
        }
        level = next.into_iter().collect();
    }
    level.into_values().collect()
}
