//! Size limits for the exponential parts of the pipeline.
//!
//! Every limit can be raised through the `DPC_LIMITS` environment variable,
//! a comma separated list of `key=value` pairs, e.g.
//! `DPC_LIMITS=sub_pattern=8,fhtw=14`.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest digraph handed to the permutation-based canonical form.
    pub canon: usize,
    /// Largest pattern accepted by `sub_basis` / `count_sub`.
    pub sub_pattern: usize,
    /// Largest pattern accepted by `indsub_basis` / `count_indsub`.
    pub indsub_pattern: usize,
    /// Largest number of addable arcs n(n-1)-|E| for arc-supergraph streams.
    pub supergraph_free_arcs: usize,
    /// Largest hypergraph handed to the fhtw subset DP.
    pub fhtw: usize,
    /// Largest hypergraph for exact independence / vertex cover search.
    pub brute_independence: usize,
    /// Largest pattern for structural invariants that enumerate subsets.
    pub pattern: usize,
    /// Upper bound on |V(H)| * log2 |V(G)| for brute-force oracles.
    pub oracle_log2: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            canon: 10,
            sub_pattern: 7,
            indsub_pattern: 5,
            supergraph_free_arcs: 14,
            fhtw: 12,
            brute_independence: 20,
            pattern: 10,
            oracle_log2: 64,
        }
    }
}

impl Limits {
    /// Defaults overridden by `DPC_LIMITS`, if set.
    pub fn from_env() -> Result<Self> {
        match std::env::var("DPC_LIMITS") {
            Ok(spec) => Self::default().with_overrides(&spec),
            Err(_) => Ok(Self::default()),
        }
    }

    pub fn with_overrides(mut self, spec: &str) -> Result<Self> {
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item.split_once('=').ok_or_else(|| Error::Parse {
                line: 0,
                message: format!("DPC_LIMITS entry `{item}` is not key=value"),
            })?;
            let value: usize = value.trim().parse().map_err(|_| Error::Parse {
                line: 0,
                message: format!("DPC_LIMITS value `{value}` is not an integer"),
            })?;
            let slot = match key.trim() {
                "canon" => &mut self.canon,
                "sub_pattern" => &mut self.sub_pattern,
                "indsub_pattern" => &mut self.indsub_pattern,
                "supergraph_free_arcs" => &mut self.supergraph_free_arcs,
                "fhtw" => &mut self.fhtw,
                "brute_independence" => &mut self.brute_independence,
                "pattern" => &mut self.pattern,
                "oracle_log2" => &mut self.oracle_log2,
                other => {
                    return Err(Error::Parse {
                        line: 0,
                        message: format!("unknown DPC_LIMITS key `{other}`"),
                    })
                }
            };
            *slot = value;
        }
        Ok(self)
    }
}

/// `LimitExceeded` when `actual` is above `limit`.
pub fn check(what: &'static str, actual: usize, limit: usize) -> Result<()> {
    if actual > limit {
        Err(Error::LimitExceeded { what, limit, actual })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides_parse() {
        let l = Limits::default().with_overrides("fhtw=14, sub_pattern=8").unwrap();
        assert_eq!(l.fhtw, 14);
        assert_eq!(l.sub_pattern, 8);
        assert_eq!(l.canon, 10);
        assert!(Limits::default().with_overrides("bogus=1").is_err());
        assert!(Limits::default().with_overrides("fhtw").is_err());
    }
}
