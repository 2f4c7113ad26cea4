//! Plain-text formats.
//!
//! * `.dg`: `n m`, then m lines `u v` (u = v is a loop).
//! * `.ug`: the same with unordered pairs, u ≠ v.
//! * `.hg`: `n k`, then k lines `s v1 … vs`.
//! * `.cdg`: a `.dg` block, a line `colors`, then n lines `v c`.
//!
//! Lines starting with `#` and blank lines are ignored everywhere.

use std::fmt::Write as _;

use crate::digraph::{Digraph, UGraph};
use crate::error::{Error, Result};
use crate::gadgets::ColoredDigraph;
use crate::hypergraph::Hypergraph;

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate(),
            last: 0,
        }
    }

    /// Next meaningful line with its 1-based number.
    fn next_line(&mut self) -> Option<(usize, &'a str)> {
        for (i, line) in self.inner.by_ref() {
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            self.last = i + 1;
            return Some((i + 1, t));
        }
        None
    }

    fn expect(&mut self, what: &str) -> Result<(usize, &'a str)> {
        self.next_line().ok_or_else(|| Error::Parse {
            line: self.last + 1,
            message: format!("unexpected end of input, expected {what}"),
        })
    }

    fn finish(&mut self) -> Result<()> {
        match self.next_line() {
            None => Ok(()),
            Some((line, _)) => Err(Error::Parse {
                line,
                message: "trailing content".into(),
            }),
        }
    }
}

fn numbers(line: usize, text: &str, count: Option<usize>) -> Result<Vec<usize>> {
    let values: Vec<usize> = text
        .split_whitespace()
        .map(|tok| {
            tok.parse().map_err(|_| Error::Parse {
                line,
                message: format!("expected a nonnegative integer, found {tok:?}"),
            })
        })
        .collect::<Result<_>>()?;
    if let Some(c) = count {
        if values.len() != c {
            return Err(Error::Parse {
                line,
                message: format!("expected {c} integers, found {}", values.len()),
            });
        }
    }
    Ok(values)
}

fn pairs(lines: &mut Lines<'_>, what: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let (line, header) = lines.expect("header `n m`")?;
    let h = numbers(line, header, Some(2))?;
    let (n, m) = (h[0], h[1]);
    let mut out = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, text) = lines.expect(what)?;
        let p = numbers(line, text, Some(2))?;
        for &x in &p {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        out.push((p[0], p[1]));
    }
    Ok((n, out))
}

fn digraph_block(lines: &mut Lines<'_>) -> Result<Digraph> {
    let (n, arcs) = pairs(lines, "arc `u v`")?;
    Digraph::new(n, arcs)
}

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let mut lines = Lines::new(text);
    let d = digraph_block(&mut lines)?;
    lines.finish()?;
    Ok(d)
}

pub fn write_digraph(d: &Digraph) -> String {
    let mut s = format!("{} {}\n", d.vertex_count(), d.arc_count());
    for (u, v) in d.arcs() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

pub fn parse_ugraph(text: &str) -> Result<UGraph> {
    let mut lines = Lines::new(text);
    let (n, edges) = pairs(&mut lines, "edge `u v`")?;
    lines.finish()?;
    UGraph::new(n, edges)
}

pub fn write_ugraph(g: &UGraph) -> String {
    let edges = g.edges();
    let mut s = format!("{} {}\n", g.vertex_count(), edges.len());
    for (u, v) in edges {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut lines = Lines::new(text);
    let (line, header) = lines.expect("header `n k`")?;
    let h = numbers(line, header, Some(2))?;
    let (n, k) = (h[0], h[1]);
    let mut sets = Vec::with_capacity(k);
    for _ in 0..k {
        let (line, text) = lines.expect("edge `s v1 … vs`")?;
        let values = numbers(line, text, None)?;
        let Some((&size, rest)) = values.split_first() else {
            return Err(Error::Parse {
                line,
                message: "empty edge line".into(),
            });
        };
        if rest.len() != size {
            return Err(Error::Parse {
                line,
                message: format!("edge declares {size} vertices but lists {}", rest.len()),
            });
        }
        let mut set = rest.to_vec();
        set.sort_unstable();
        if set.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Parse {
                line,
                message: "repeated vertex in edge".into(),
            });
        }
        if let Some(&x) = set.iter().find(|&&x| x >= n) {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
        sets.push(set);
    }
    lines.finish()?;
    Hypergraph::from_sets(n, sets)
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut s = format!("{} {}\n", h.vertex_count(), h.edges().len());
    for e in h.edges() {
        s.push_str(&e.vertices.len().to_string());
        for v in &e.vertices {
            write!(s, " {v}").unwrap();
        }
        s.push('\n');
    }
    s
}

pub fn parse_colored(text: &str) -> Result<ColoredDigraph> {
    let mut lines = Lines::new(text);
    let graph = digraph_block(&mut lines)?;
    let (line, marker) = lines.expect("`colors`")?;
    if marker != "colors" {
        return Err(Error::Parse {
            line,
            message: format!("expected `colors`, found {marker:?}"),
        });
    }
    let n = graph.vertex_count();
    let mut color = vec![None; n];
    for _ in 0..n {
        let (line, text) = lines.expect("colour `v c`")?;
        let p = numbers(line, text, Some(2))?;
        if p[0] >= n {
            return Err(Error::VertexOutOfRange { vertex: p[0], n });
        }
        if color[p[0]].replace(p[1]).is_some() {
            return Err(Error::Parse {
                line,
                message: format!("vertex {} coloured twice", p[0]),
            });
        }
    }
    lines.finish()?;
    // n lines without repeats cover every vertex
    let color = color.into_iter().map(Option::unwrap).collect();
    Ok(ColoredDigraph::new(graph, color))
}

pub fn write_colored(c: &ColoredDigraph) -> String {
    let mut s = write_digraph(&c.graph);
    s.push_str("colors\n");
    for (v, col) in c.color.iter().enumerate() {
        writeln!(s, "{v} {col}").unwrap();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digraph_examples() {
        assert_eq!(parse_digraph("2 1\n0 1").unwrap(), Digraph::new(2, [(0, 1)]).unwrap());
        assert_eq!(parse_digraph("1 1\n0 0").unwrap(), Digraph::new(1, [(0, 0)]).unwrap());
        assert_eq!(parse_digraph("2 2\n0 1\n0 1"), Err(Error::DuplicateArc(0, 1)));
        assert_eq!(
            parse_digraph("2 1\n0 2"),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
        let commented = "# a comment\n3 2\n\n0 1\n# another\n1 2\n";
        assert_eq!(parse_digraph(commented).unwrap().arc_count(), 2);
        assert!(matches!(parse_digraph("2 1\n0 x"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_digraph("2 2\n0 1\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(
            parse_digraph("2 1\n0 1\n1 0\n"),
            Err(Error::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn round_trips() {
        let d = Digraph::new(4, [(0, 1), (1, 1), (3, 0), (2, 3)]).unwrap();
        assert_eq!(parse_digraph(&write_digraph(&d)).unwrap(), d);
        let g = UGraph::new(3, [(0, 1), (2, 1)]).unwrap();
        assert_eq!(parse_ugraph(&write_ugraph(&g)).unwrap().edges(), g.edges());
        let h = parse_hypergraph("4 3\n2 0 1\n3 1 2 3\n0\n").unwrap();
        assert_eq!(h.edges().len(), 3);
        assert_eq!(write_hypergraph(&h), "4 3\n2 0 1\n3 1 2 3\n0\n");
        let c = ColoredDigraph::new(d.clone(), vec![0, 1, 1, 0]);
        assert_eq!(parse_colored(&write_colored(&c)).unwrap(), c);
    }

    #[test]
    fn rejections() {
        assert!(matches!(
            parse_hypergraph("3 1\n2 0\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(parse_hypergraph("3 1\n2 0 0\n"), Err(Error::Parse { .. })));
        assert!(parse_ugraph("2 1\n1 1\n").is_err());
        assert!(matches!(
            parse_colored("1 0\nkolors\n0 0\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_colored("2 0\ncolors\n0 0\n0 1\n"),
            Err(Error::Parse { line: 4, .. })
        ));
    }
}
