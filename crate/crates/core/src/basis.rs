//! Subgraph and induced-subgraph counts as finite rational combinations of
//! homomorphism counts.
//!
//! `sub_basis(H)` sums the partition-lattice Möbius function over all
//! quotients of H. `indsub_basis(H)` first expands induced copies into
//! ordinary copies of arc supergraphs by inclusion-exclusion over the added
//! arcs, then pushes every supergraph through `sub_basis`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::canon::{automorphism_count, canonical_form, CanonKey};
use crate::digraph::{arc_supergraphs, quotient, set_partitions, Digraph};
use crate::error::{Error, Result};
use crate::hom::count_hom;
use crate::hypergraph::source_number;
use crate::limits::{check, Limits};
use crate::rational::{from_count, to_count, Count, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisKind {
    Sub,
    IndSub,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BasisExpansion {
    pub kind: BasisKind,
    /// Canonical digraphs with nonzero coefficients, pairwise non-isomorphic.
    pub terms: Vec<(Digraph, Rational)>,
}

impl BasisExpansion {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient_of(&self, key: &CanonKey, limits: &Limits) -> Result<Option<Rational>> {
        for (g, c) in &self.terms {
            if canonical_form(g, limits.canon)?.key == *key {
                return Ok(Some(c.clone()));
            }
        }
        Ok(None)
    }

    /// Σ coefficient · #Hom(term → g), exact.
    pub fn evaluate(&self, g: &Digraph) -> Result<Rational> {
        let parts: Result<Vec<Rational>> = self
            .terms
            .par_iter()
            .map(|(f, c)| Ok(c * from_count(&count_hom(f, g)?)))
            .collect();
        Ok(parts?.into_iter().sum())
    }
}

/// Collects coefficient mass per isomorphism class.
struct Accumulator {
    classes: BTreeMap<CanonKey, (Digraph, Rational)>,
}

impl Accumulator {
    fn new() -> Self {
        Accumulator {
            classes: BTreeMap::new(),
        }
    }

    fn add(&mut self, key: CanonKey, graph: impl FnOnce() -> Digraph, c: Rational) {
        self.classes.entry(key).or_insert_with(|| (graph(), Rational::zero())).1 += c;
    }

    fn finish(self, kind: BasisKind) -> BasisExpansion {
        let mut terms: Vec<(CanonKey, Digraph, Rational)> = self
            .classes
            .into_iter()
            .filter(|(_, (_, c))| !c.is_zero())
            .map(|(k, (g, c))| (k, g, c))
            .collect();
        // larger digraphs first; the pattern (or its largest supergraph) leads
        terms.sort_by(|a, b| {
            (b.1.vertex_count(), a.1.arc_count(), &a.0).cmp(&(a.1.vertex_count(), b.1.arc_count(), &b.0))
        });
        BasisExpansion {
            kind,
            terms: terms.into_iter().map(|(_, g, c)| (g, c)).collect(),
        }
    }
}

/// Π over blocks of (-1)^(|B|-1) (|B|-1)!.
fn mobius(block_sizes: impl Iterator<Item = usize>) -> BigInt {
    block_sizes.fold(BigInt::one(), |acc, s| {
        let f: BigInt = (1..s).map(BigInt::from).product();
        if s % 2 == 0 {
            -acc * f
        } else {
            acc * f
        }
    })
}

fn require_loop_free(h: &Digraph) -> Result<()> {
    if h.has_loops() {
        Err(Error::LoopedPattern)
    } else {
        Ok(())
    }
}

pub fn sub_basis(h: &Digraph, limits: &Limits) -> Result<BasisExpansion> {
    require_loop_free(h)?;
    check("sub pattern vertices", h.vertex_count(), limits.sub_pattern)?;
    sub_basis_unchecked(h, limits)
}

fn sub_basis_unchecked(h: &Digraph, limits: &Limits) -> Result<BasisExpansion> {
    let aut = BigInt::from(automorphism_count(h, limits.canon)?);
    let mut acc = Accumulator::new();
    for sigma in set_partitions(h.vertex_count()) {
        let q = quotient(h, &sigma)?;
        let form = canonical_form(&q, limits.canon)?;
        let mu = mobius(sigma.blocks().iter().map(Vec::len));
        acc.add(form.key, || form.graph, Rational::new(mu, aut.clone()));
    }
    Ok(acc.finish(BasisKind::Sub))
}

/// Inclusion-exclusion over arc supergraphs: #IndSub(H → G) as a combination
/// of #Sub(F' → G), grouped by isomorphism class of F'.
pub fn indsub_star(h: &Digraph, limits: &Limits) -> Result<BasisExpansion> {
    require_loop_free(h)?;
    check("indsub pattern vertices", h.vertex_count(), limits.indsub_pattern)?;
    let aut_h = BigInt::from(automorphism_count(h, limits.canon)?);
    let base_arcs = h.arc_count();
    // labeled supergraphs of one class all have the same sign and |Aut|
    let mut labeled: HashMap<CanonKey, (Digraph, u64, usize)> = HashMap::new();
    for f in arc_supergraphs(h, limits.supergraph_free_arcs)? {
        let form = canonical_form(&f, limits.canon)?;
        labeled
            .entry(form.key)
            .or_insert_with(|| (form.graph, 0, f.arc_count()))
            .1 += 1;
    }
    let mut acc = Accumulator::new();
    for (key, (graph, copies, arcs)) in labeled {
        let aut_f = automorphism_count(&graph, limits.canon)?;
        let sign = if (arcs - base_arcs).is_multiple_of(2) { 1 } else { -1 };
        let c = Rational::new(
            BigInt::from(sign) * BigInt::from(copies) * BigInt::from(aut_f),
            aut_h.clone(),
        );
        acc.add(key, || graph, c);
    }
    Ok(acc.finish(BasisKind::IndSub))
}

pub fn indsub_basis(h: &Digraph, limits: &Limits) -> Result<BasisExpansion> {
    let star = indsub_star(h, limits)?;
    let mut acc = Accumulator::new();
    for (f, c) in &star.terms {
        for (q, s) in sub_basis_unchecked(f, limits)?.terms {
            let key = canonical_form(&q, limits.canon)?.key;
            acc.add(key, || q, c * s);
        }
    }
    Ok(acc.finish(BasisKind::IndSub))
}

fn integral(value: Rational, what: &str) -> Result<Count> {
    to_count(&value).ok_or_else(|| Error::Defect(format!("{what} evaluated to non-integral {value}")))
}

/// #Sub(H → G).
pub fn count_sub(h: &Digraph, g: &Digraph, limits: &Limits) -> Result<Count> {
    evaluate_sub(&sub_basis(h, limits)?, g)
}

/// Evaluates a precomputed `sub_basis` on one host.
pub fn evaluate_sub(basis: &BasisExpansion, g: &Digraph) -> Result<Count> {
    integral(basis.evaluate(g)?, "subgraph basis")
}

/// Every term of an induced-subgraph basis has at most as many sources as
/// the pattern.
pub fn check_source_bound(h: &Digraph, basis: &BasisExpansion) -> Result<()> {
    let bound = source_number(h);
    for (f, _) in &basis.terms {
        let s = source_number(f);
        if s > bound {
            return Err(Error::Defect(format!(
                "basis term with {s} sources exceeds pattern source number {bound}"
            )));
        }
    }
    Ok(())
}

/// #IndSub(H → G) for loop-free H. Looped host vertices can never lie in an
/// induced copy of a loop-free pattern, so they are removed first.
pub fn count_indsub(h: &Digraph, g: &Digraph, limits: &Limits) -> Result<Count> {
    let basis = indsub_basis(h, limits)?;
    check_source_bound(h, &basis)?;
    evaluate_indsub(&basis, g)
}

/// Evaluates a precomputed `indsub_basis` on one host.
pub fn evaluate_indsub(basis: &BasisExpansion, g: &Digraph) -> Result<Count> {
    let host = if g.has_loops() {
        let looped: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.has_loop(v)).collect();
        g.remove_vertices(&looped).0
    } else {
        g.clone()
    };
    integral(basis.evaluate(&host)?, "induced subgraph basis")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brute::{brute_indsub, brute_sub};
    use crate::canon::canonical_key;
    use crate::digraph::named::*;
    use crate::rational::{int, rat};

    fn key(d: &Digraph) -> CanonKey {
        canonical_key(d, 10).unwrap()
    }

    fn coefficients(b: &BasisExpansion) -> HashMap<CanonKey, Rational> {
        b.terms.iter().map(|(g, c)| (key(g), c.clone())).collect()
    }

    #[test]
    fn sub_basis_examples() {
        let l = Limits::default();
        let b = coefficients(&sub_basis(&single_arc(), &l).unwrap());
        assert_eq!(b.len(), 2);
        assert_eq!(b[&key(&single_arc())], int(1));
        assert_eq!(b[&key(&loop_vertex())], int(-1));

        let b = coefficients(&sub_basis(&Digraph::empty(1), &l).unwrap());
        assert_eq!(b.len(), 1);

        let b = coefficients(&sub_basis(&path(3), &l).unwrap());
        assert_eq!(b.len(), 5);
        assert_eq!(b[&key(&path(3))], int(1));
        assert_eq!(b[&key(&Digraph::new(2, [(0, 0), (0, 1)]).unwrap())], int(-1));
        assert_eq!(b[&key(&Digraph::new(2, [(0, 1), (1, 1)]).unwrap())], int(-1));
        assert_eq!(b[&key(&cycle(2))], int(-1));
        assert_eq!(b[&key(&loop_vertex())], int(2));

        let b = coefficients(&sub_basis(&Digraph::empty(2), &l).unwrap());
        assert_eq!(b[&key(&Digraph::empty(2))], rat(1, 2));
        assert_eq!(b[&key(&Digraph::empty(1))], rat(-1, 2));

        assert_eq!(sub_basis(&loop_vertex(), &l), Err(Error::LoopedPattern));
    }

    #[test]
    fn indsub_star_examples() {
        let l = Limits::default();
        let b = coefficients(&indsub_star(&Digraph::empty(2), &l).unwrap());
        assert_eq!(b[&key(&Digraph::empty(2))], int(1));
        assert_eq!(b[&key(&single_arc())], int(-1));
        assert_eq!(b[&key(&cycle(2))], int(1));

        let b = coefficients(&indsub_star(&cycle(2), &l).unwrap());
        assert_eq!(b.len(), 1);

        let b = coefficients(&indsub_star(&single_arc(), &l).unwrap());
        assert_eq!(b[&key(&single_arc())], int(1));
        // one labeled supergraph with sign -1, and a 2-cycle holds two arc copies
        assert_eq!(b[&key(&cycle(2))], int(-2));
    }

    #[test]
    fn count_examples() {
        let l = Limits::default();
        let tt4 = Digraph::new(4, (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v)))).unwrap();
        assert_eq!(count_sub(&single_arc(), &cycle(5), &l).unwrap(), Count::from(5u32));
        assert_eq!(
            count_sub(&cyclic_triangle(), &cyclic_triangle(), &l).unwrap(),
            Count::from(1u32)
        );
        assert_eq!(count_sub(&transitive_triangle(), &tt4, &l).unwrap(), Count::from(4u32));
        assert_eq!(
            count_indsub(&cyclic_triangle(), &cyclic_triangle(), &l).unwrap(),
            Count::from(1u32)
        );
        assert_eq!(
            count_indsub(&Digraph::empty(2), &single_arc(), &l).unwrap(),
            Count::from(0u32)
        );
        assert_eq!(
            count_indsub(&single_arc(), &transitive_triangle(), &l).unwrap(),
            Count::from(3u32)
        );
    }

    #[test]
    fn agrees_with_brute_force_on_small_cases() {
        let l = Limits::default();
        let hosts = [
            Digraph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 4), (0, 3)]).unwrap(),
            Digraph::new(4, [(0, 1), (1, 0), (1, 2), (2, 3), (3, 1)]).unwrap(),
        ];
        for p in crate::canon::all_digraphs(3, false) {
            for g in &hosts {
                assert_eq!(count_sub(&p, g, &l).unwrap(), brute_sub(&p, g, &l).unwrap());
                assert_eq!(count_indsub(&p, g, &l).unwrap(), brute_indsub(&p, g, &l).unwrap());
            }
        }
    }

    #[test]
    fn every_supergraph_is_supported() {
        let l = Limits::default();
        let h = path(3);
        let basis = coefficients(&indsub_basis(&h, &l).unwrap());
        for f in arc_supergraphs(&h, 14).unwrap() {
            assert!(basis.contains_key(&key(&f)));
        }
    }
}
