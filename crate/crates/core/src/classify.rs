//! Class-level tractability criteria evaluated on one pattern, and a
//! bounded-outdegree host generator.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::digraph::{Digraph, UGraph};
use crate::error::Result;
use crate::hypergraph::{fractional_cover_number, source_number, vertex_cover_number};
use crate::limits::Limits;
use crate::rational::{fraction_string, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternSummary {
    pub vertices: usize,
    pub arcs: usize,
    pub loops: usize,
    pub acyclic: bool,
}

/// Invariant values behind the dichotomies. Tractability is a property of a
/// pattern class: a class is tractable when the reported value stays bounded
/// over the class. For a single pattern every value is finite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub pattern: PatternSummary,
    pub rho_star: Rational,
    pub source_number: usize,
    pub sub_fpt: bool,
    pub indsub_fpt_bounded_source: bool,
    /// #Sub in bounded-outdegree hosts runs in |G|^(ρ* + O(1)).
    pub predicted_sub_exponent: Rational,
    /// #IndSub in bounded-outdegree hosts runs in |G|^(α_s + O(1)).
    pub predicted_indsub_exponent: usize,
    pub vertex_cover_number: usize,
}

pub const SUB_CRITERION: &str = "bounded fractional cover number";
pub const INDSUB_CRITERION: &str = "bounded source number";
pub const UNBOUNDED_HOM_CRITERION: &str = "bounded treewidth";
pub const UNBOUNDED_SUB_CRITERION: &str = "bounded vertex cover number";
pub const UNBOUNDED_INDSUB_CRITERION: &str = "finite class";

pub fn classify(h: &Digraph, limits: &Limits) -> Result<Verdict> {
    let rho = fractional_cover_number(h);
    let s = source_number(h);
    Ok(Verdict {
        pattern: PatternSummary {
            vertices: h.vertex_count(),
            arcs: h.arc_count(),
            loops: h.loop_count(),
            acyclic: h.is_acyclic(),
        },
        rho_star: rho.clone(),
        source_number: s,
        sub_fpt: true,
        indsub_fpt_bounded_source: true,
        predicted_sub_exponent: rho,
        predicted_indsub_exponent: s,
        vertex_cover_number: vertex_cover_number(&UGraph::from_digraph(h), limits.brute_independence)?,
    })
}

impl Verdict {
    pub fn to_text(&self) -> String {
        let p = &self.pattern;
        format!(
            "vertices: {}\narcs: {}\nloops: {}\nacyclic: {}\nrho_star: {}\nsource_number: {}\n\
             sub_criterion: {SUB_CRITERION} (value {})\nindsub_criterion: {INDSUB_CRITERION} (value {})\n\
             predicted_sub_exponent: {}\npredicted_indsub_exponent: {}\nvertex_cover_number: {}\n\
             unbounded_outdegree_hom: {UNBOUNDED_HOM_CRITERION}\n\
             unbounded_outdegree_sub: {UNBOUNDED_SUB_CRITERION} (value {})\n\
             unbounded_outdegree_indsub: {UNBOUNDED_INDSUB_CRITERION}\n",
            p.vertices,
            p.arcs,
            p.loops,
            p.acyclic,
            self.rho_star,
            self.source_number,
            self.rho_star,
            self.source_number,
            self.predicted_sub_exponent,
            self.predicted_indsub_exponent,
            self.vertex_cover_number,
            self.vertex_cover_number,
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        let p = &self.pattern;
        serde_json::json!({
            "pattern": {
                "vertices": p.vertices,
                "arcs": p.arcs,
                "loops": p.loops,
                "acyclic": p.acyclic,
            },
            "rho_star": fraction_string(&self.rho_star),
            "source_number": self.source_number,
            "sub_fpt": self.sub_fpt,
            "indsub_fpt_bounded_source": self.indsub_fpt_bounded_source,
            "predicted_sub_exponent": fraction_string(&self.predicted_sub_exponent),
            "predicted_indsub_exponent": self.predicted_indsub_exponent,
            "vertex_cover_number": self.vertex_cover_number,
            "criteria": {
                "sub": SUB_CRITERION,
                "indsub": INDSUB_CRITERION,
                "unbounded_outdegree": {
                    "hom": UNBOUNDED_HOM_CRITERION,
                    "sub": UNBOUNDED_SUB_CRITERION,
                    "indsub": UNBOUNDED_INDSUB_CRITERION,
                },
            },
        })
    }
}

/// Seeded random digraph with maximum outdegree at most `d`. Each vertex
/// draws an outdegree uniformly from 0..=d and that many distinct targets;
/// with `loops`, a vertex takes a loop with probability 1/4 out of the same
/// budget. With `acyclic`, targets have larger ids.
pub fn gen_host(n: usize, d: usize, seed: u64, acyclic: bool, loops: bool) -> Digraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs = Vec::new();
    let mut pool: Vec<usize> = Vec::new();
    for u in 0..n {
        let mut budget = rng.gen_range(0..=d);
        if loops && budget > 0 && rng.gen_bool(0.25) {
            arcs.push((u, u));
            budget -= 1;
        }
        pool.clear();
        if acyclic {
            pool.extend(u + 1..n);
        } else {
            pool.extend((0..n).filter(|&v| v != u));
        }
        for &v in pool.partial_shuffle(&mut rng, budget).0.iter() {
            arcs.push((u, v));
        }
    }
    Digraph::from_arcs_merged(n, arcs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::named::*;
    use crate::rational::int;

    #[test]
    fn worked_examples() {
        let l = Limits::default();
        for k in 1..=4 {
            let v = classify(&copies(&transitive_triangle(), k), &l).unwrap();
            assert_eq!(v.rho_star, int(k as i64));
            assert_eq!(v.source_number, k);
            let v = classify(&copies(&cyclic_triangle(), k), &l).unwrap();
            assert_eq!(v.rho_star, int(1));
            assert_eq!(v.source_number, k);
        }
        assert_eq!(classify(&subset_incidence(2), &l).unwrap().rho_star, int(2));
        assert!(classify(&transitive_triangle(), &l)
            .unwrap()
            .to_text()
            .contains("rho_star: 1\n"));
    }

    #[test]
    fn host_generation() {
        let g = gen_host(5, 0, 1, false, false);
        assert_eq!(g.arc_count(), 0);
        assert_eq!(gen_host(50, 3, 9, false, true), gen_host(50, 3, 9, false, true));
        let dag = gen_host(100, 3, 4, true, false);
        assert!(dag.is_acyclic());
        assert!(dag.max_outdegree() <= 3);
        let looped = gen_host(200, 2, 5, false, true);
        assert!(looped.has_loops());
        assert!(looped.max_outdegree() <= 2);
    }
}
