//! Recovering individual homomorphism counts from an oracle that only
//! evaluates a fixed linear combination of them.
//!
//! The functions F ↦ #Hom(F → ·) are multiplicative over the tensor product
//! and pairwise distinct for non-isomorphic F, so Dedekind's independence
//! argument applies: querying g ⊗ h for a distinguishing g cancels one term
//! at a time. Query hosts depend only on the support, never on the
//! coefficients.

use std::cell::RefCell;
use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use num_traits::Zero;
use serde::Serialize;

use crate::basis::{sub_basis, BasisExpansion};
use crate::brute::{brute_hom, brute_sub};
use crate::canon::{canonical_form, isomorphic};
use crate::digraph::{quotient, tensor, Digraph, Partition};
use crate::error::{Error, Result};
use crate::hom::count_hom;
use crate::limits::Limits;
use crate::rational::{from_count, to_count, Count, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QueryRecord {
    pub vertices: usize,
    pub arcs: usize,
    pub max_outdegree: usize,
    /// Hash of the exact arc list, for comparing query sequences.
    pub fingerprint: u64,
}

impl QueryRecord {
    pub fn of(g: &Digraph) -> Self {
        let mut hasher = DefaultHasher::new();
        g.vertex_count().hash(&mut hasher);
        for arc in g.arcs() {
            arc.hash(&mut hasher);
        }
        QueryRecord {
            vertices: g.vertex_count(),
            arcs: g.arc_count(),
            max_outdegree: g.max_outdegree(),
            fingerprint: hasher.finish(),
        }
    }
}

type Evaluate<'a> = Box<dyn FnMut(&Digraph) -> Result<Rational> + 'a>;

/// g ↦ Σ aᵢ · #Hom(Fᵢ → g) for unknown aᵢ over a known support.
pub struct LinearHomOracle<'a> {
    support: Vec<Digraph>,
    evaluate: Evaluate<'a>,
    query_log: Vec<QueryRecord>,
}

impl<'a> LinearHomOracle<'a> {
    pub fn new(
        support: Vec<Digraph>,
        evaluate: impl FnMut(&Digraph) -> Result<Rational> + 'a,
        limits: &Limits,
    ) -> Result<Self> {
        let mut keys = Vec::with_capacity(support.len());
        for f in &support {
            let key = canonical_form(f, limits.canon)?.key;
            if keys.contains(&key) {
                return Err(Error::IsomorphicInputs);
            }
            keys.push(key);
        }
        Ok(LinearHomOracle {
            support,
            evaluate: Box::new(evaluate),
            query_log: Vec::new(),
        })
    }

    /// An oracle with known coefficients, evaluated by the counting engine.
    pub fn planted(support: Vec<Digraph>, coefficients: Vec<Rational>, limits: &Limits) -> Result<Self> {
        assert_eq!(support.len(), coefficients.len());
        let terms: Vec<(Digraph, Rational)> = support.iter().cloned().zip(coefficients).collect();
        Self::new(
            support,
            move |g: &Digraph| {
                let mut total = Rational::zero();
                for (f, a) in &terms {
                    total += a * from_count(&count_hom(f, g)?);
                }
                Ok(total)
            },
            limits,
        )
    }

    pub fn support(&self) -> &[Digraph] {
        &self.support
    }

    pub fn query_log(&self) -> &[QueryRecord] {
        &self.query_log
    }

    pub fn query(&mut self, g: &Digraph) -> Result<Rational> {
        self.query_log.push(QueryRecord::of(g));
        (self.evaluate)(g)
    }
}

fn hom(f: &Digraph, g: &Digraph) -> Result<Rational> {
    Ok(from_count(&count_hom(f, g)?))
}

/// A digraph W with #Hom(F₁ → W) ≠ #Hom(F₂ → W), taken from the induced
/// subgraphs of F₁ and F₂. Candidates are tried by increasing outdegree, then
/// size, which keeps nested tensor queries sparse.
pub fn distinguisher(f1: &Digraph, f2: &Digraph, limits: &Limits) -> Result<Digraph> {
    if isomorphic(f1, f2, limits.canon)? {
        return Err(Error::IsomorphicInputs);
    }
    let mut candidates = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for f in [f1, f2] {
        let n = f.vertex_count();
        for mask in 1u64..(1u64 << n) {
            let subset: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let sub = f.induced_subgraph(&subset);
            let form = canonical_form(&sub, limits.canon)?;
            if seen.insert(form.key.clone()) {
                candidates.push((
                    form.graph.max_outdegree(),
                    form.graph.vertex_count(),
                    form.graph.arc_count(),
                    form.key,
                    form.graph,
                ));
            }
        }
    }
    candidates.sort_by(|a, b| (a.0, a.1, a.2, &a.3).cmp(&(b.0, b.1, b.2, &b.3)));
    for (_, _, _, _, w) in candidates {
        if brute_hom(f1, &w, limits)? != brute_hom(f2, &w, limits)? {
            return Ok(w);
        }
    }
    Err(Error::Defect(
        "no induced subgraph distinguishes two non-isomorphic digraphs".into(),
    ))
}

struct Interpolator<'s> {
    support: &'s [Digraph],
    limits: &'s Limits,
    distinguishers: RefCell<HashMap<(usize, usize), Digraph>>,
}

type Oracle<'o> = dyn FnMut(&Digraph) -> Result<Rational> + 'o;

impl Interpolator<'_> {
    fn distinguisher(&self, i: usize, j: usize) -> Result<Digraph> {
        if let Some(g) = self.distinguishers.borrow().get(&(i, j)) {
            return Ok(g.clone());
        }
        let g = distinguisher(&self.support[i], &self.support[j], self.limits)?;
        self.distinguishers.borrow_mut().insert((i, j), g.clone());
        Ok(g)
    }

    /// Coefficient of the first active support element.
    fn first(&self, active: &[usize], oracle: &mut Oracle<'_>) -> Result<Rational> {
        let one = active[0];
        if active.len() == 1 {
            let g1 = &self.support[one];
            return Ok(oracle(g1)? / hom(g1, g1)?);
        }
        let k = *active.last().unwrap();
        let g = self.distinguisher(one, k)?;
        let at_1 = hom(&self.support[one], &g)?;
        let at_k = hom(&self.support[k], &g)?;
        let mut reduced = |h: &Digraph| -> Result<Rational> {
            let shifted = oracle(&tensor(&g, h))?;
            Ok(shifted - &at_k * oracle(h)?)
        };
        let hat = self.first(&active[..active.len() - 1], &mut reduced)?;
        Ok(hat / (at_1 - at_k))
    }

    fn all(&self, active: &[usize], oracle: &mut Oracle<'_>) -> Result<Vec<Rational>> {
        if active.is_empty() {
            return Ok(Vec::new());
        }
        let a1 = self.first(active, oracle)?;
        let f1 = &self.support[active[0]];
        let mut peeled = |h: &Digraph| -> Result<Rational> { Ok(oracle(h)? - &a1 * hom(f1, h)?) };
        let mut rest = self.all(&active[1..], &mut peeled)?;
        rest.insert(0, a1);
        Ok(rest)
    }
}

/// #Hom(F → A ⊗ B) = #Hom(F → A) · #Hom(F → B) on one product per support
/// element.
fn check_multiplicativity(support: &[Digraph]) -> Result<()> {
    let (a, b) = (&support[0], &support[support.len() - 1]);
    let ab = tensor(a, b);
    for f in support {
        if hom(f, &ab)? != hom(f, a)? * hom(f, b)? {
            return Err(Error::Defect(
                "hom counts not multiplicative over the tensor product".into(),
            ));
        }
    }
    Ok(())
}

/// Recovers every coefficient of the oracle, in support order.
pub fn dedekind_interpolate(oracle: &mut LinearHomOracle<'_>, limits: &Limits) -> Result<Vec<(Digraph, Rational)>> {
    if oracle.support.is_empty() {
        return Ok(Vec::new());
    }
    let support = oracle.support.clone();
    check_multiplicativity(&support)?;
    let interp = Interpolator {
        support: &support,
        limits,
        distinguishers: RefCell::new(HashMap::new()),
    };
    let active: Vec<usize> = (0..support.len()).collect();
    let mut base = |g: &Digraph| oracle.query(g);
    let coefficients = interp.all(&active, &mut base)?;
    Ok(support.into_iter().zip(coefficients).collect())
}

#[derive(Debug, Clone)]
pub struct Extraction {
    /// (support digraph, #Hom(F → G')) in basis order.
    pub homs: Vec<(Digraph, Count)>,
    /// Hosts actually handed to the combined oracle, i.e. G' ⊗ query.
    pub query_log: Vec<QueryRecord>,
    /// d(G') · max outdegree over the support.
    pub support_outdegree_bound: usize,
}

/// Hom counts #Hom(Fᵢ → G') for every basis term, using only an oracle for
/// G ↦ Σ ι(Fᵢ) · #Hom(Fᵢ → G). Each interpolation query h is answered with
/// combined(G' ⊗ h), whose outdegree is d(G') · d(h).
pub fn extract_homs(
    g_prime: &Digraph,
    basis: &BasisExpansion,
    mut combined: impl FnMut(&Digraph) -> Result<Rational>,
    limits: &Limits,
) -> Result<Extraction> {
    if basis.terms.iter().any(|(_, c)| c.is_zero()) {
        return Err(Error::ZeroCoefficient);
    }
    let support: Vec<Digraph> = basis.terms.iter().map(|(f, _)| f.clone()).collect();
    let d = g_prime.max_outdegree();
    let support_outdegree_bound = d * support.iter().map(Digraph::max_outdegree).max().unwrap_or(0);
    let mut log = Vec::new();
    let recovered = {
        let mut oracle = LinearHomOracle::new(
            support,
            |h: &Digraph| {
                let host = tensor(g_prime, h);
                let record = QueryRecord::of(&host);
                if record.max_outdegree > d * h.max_outdegree() {
                    return Err(Error::Defect("tensor query exceeds d(G')·d(h)".into()));
                }
                log.push(record);
                combined(&host)
            },
            limits,
        )?;
        dedekind_interpolate(&mut oracle, limits)?
    };
    let mut homs = Vec::with_capacity(recovered.len());
    for ((f, a), (_, iota)) in recovered.into_iter().zip(&basis.terms) {
        let value = a / iota;
        let count =
            to_count(&value).ok_or_else(|| Error::Defect(format!("recovered non-integral hom count {value}")))?;
        homs.push((f, count));
    }
    Ok(Extraction {
        homs,
        query_log: log,
        support_outdegree_bound,
    })
}

#[derive(Debug, Clone)]
pub struct HomFromSub {
    pub hom: Count,
    pub extraction: Extraction,
}

/// #Hom(H' → G') for a quotient H' = H/σ, computed with brute-force #Sub(H → ·)
/// as the only counting oracle.
pub fn hom_from_sub_demo(
    h_quotient: &Digraph,
    h: &Digraph,
    g_prime: &Digraph,
    sigma: &Partition,
    limits: &Limits,
) -> Result<HomFromSub> {
    if !isomorphic(&quotient(h, sigma)?, h_quotient, limits.canon)? {
        return Err(Error::NotAQuotient);
    }
    let basis = sub_basis(h, limits)?;
    let extraction = extract_homs(
        g_prime,
        &basis,
        |host| Ok(from_count(&brute_sub(h, host, limits)?)),
        limits,
    )?;
    let target = canonical_form(h_quotient, limits.canon)?.key;
    let mut hom = None;
    for (f, c) in &extraction.homs {
        if canonical_form(f, limits.canon)?.key == target {
            hom = Some(c.clone());
        }
    }
    let hom = hom.ok_or_else(|| Error::Defect("quotient missing from the subgraph basis".into()))?;
    Ok(HomFromSub { hom, extraction })
}
