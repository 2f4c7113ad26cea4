//! Brute-force reference counts, independent of the CSP engine and of the
//! homomorphism basis.

use crate::canon::{automorphism_count, canonical_key};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::rational::Count;

fn check_budget(h: &Digraph, g: &Digraph, limits: &Limits) -> Result<()> {
    let bits = (g.vertex_count().max(2) as f64).log2() * h.vertex_count() as f64;
    if bits > limits.oracle_log2 as f64 {
        return Err(Error::LimitExceeded {
            what: "brute-force oracle log2 size",
            limit: limits.oracle_log2,
            actual: bits.ceil() as usize,
        });
    }
    Ok(())
}

/// Maps `0..k` of `h` to `g` in vertex order, checking arcs against earlier
/// vertices as soon as both endpoints are placed.
fn backtrack(h: &Digraph, g: &Digraph, injective: bool, induced: bool) -> u128 {
    fn go(
        h: &Digraph,
        g: &Digraph,
        injective: bool,
        induced: bool,
        i: usize,
        image: &mut Vec<usize>,
        used: &mut [bool],
    ) -> u128 {
        if i == h.vertex_count() {
            return 1;
        }
        let mut total = 0;
        for x in 0..g.vertex_count() {
            if injective && used[x] {
                continue;
            }
            if h.has_loop(i) && !g.has_loop(x) || induced && g.has_loop(x) && !h.has_loop(i) {
                continue;
            }
            let ok = (0..i).all(|j| {
                let y = image[j];
                let fwd = !h.has_arc(j, i) || g.has_arc(y, x);
                let bwd = !h.has_arc(i, j) || g.has_arc(x, y);
                let exact = !induced || (h.has_arc(j, i) == g.has_arc(y, x) && h.has_arc(i, j) == g.has_arc(x, y));
                fwd && bwd && exact
            });
            if !ok {
                continue;
            }
            image.push(x);
            used[x] = true;
            total += go(h, g, injective, induced, i + 1, image, used);
            used[x] = false;
            image.pop();
        }
        total
    }
    let mut used = vec![false; g.vertex_count()];
    go(h, g, injective, induced, 0, &mut Vec::new(), &mut used)
}

/// #Hom(H → G) over all |V(G)|^|V(H)| maps.
pub fn brute_hom(h: &Digraph, g: &Digraph, limits: &Limits) -> Result<Count> {
    check_budget(h, g, limits)?;
    Ok(Count::from(backtrack(h, g, false, false)))
}

/// #Sub(H → G): injective homomorphisms divided by |Aut(H)|.
pub fn brute_sub(h: &Digraph, g: &Digraph, limits: &Limits) -> Result<Count> {
    check_budget(h, g, limits)?;
    let emb = backtrack(h, g, true, false);
    let aut = automorphism_count(h, limits.canon)? as u128;
    debug_assert_eq!(emb % aut, 0);
    Ok(Count::from(emb / aut))
}

/// #IndSub(H → G): vertex subsets whose induced digraph (loops included) is
/// isomorphic to H.
pub fn brute_indsub(h: &Digraph, g: &Digraph, limits: &Limits) -> Result<Count> {
    check_budget(h, g, limits)?;
    let k = h.vertex_count();
    let n = g.vertex_count();
    if k > n {
        return Ok(Count::from(0u32));
    }
    let target = canonical_key(h, limits.canon)?;
    let mut subset: Vec<usize> = (0..k).collect();
    let mut count = 0u64;
    loop {
        let sub = g.induced_subgraph(&subset);
        if sub.arc_count() == h.arc_count() && canonical_key(&sub, limits.canon)? == target {
            count += 1;
        }
        // next k-combination in lexicographic order
        let Some(i) = (0..k).rev().find(|&i| subset[i] < n - k + i) else {
            break;
        };
        subset[i] += 1;
        for j in i + 1..k {
            subset[j] = subset[j - 1] + 1;
        }
    }
    Ok(Count::from(count))
}

/// Number of induced copies counted as induced embeddings / |Aut(H)|; a second
/// route used to cross-check [`brute_indsub`].
pub fn brute_indsub_by_embeddings(h: &Digraph, g: &Digraph, limits: &Limits) -> Result<Count> {
    check_budget(h, g, limits)?;
    let emb = backtrack(h, g, true, true);
    let aut = automorphism_count(h, limits.canon)? as u128;
    Ok(Count::from(emb / aut))
}
