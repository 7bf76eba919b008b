//! DOT export with a deterministic vertex order. Vertices can be labeled
//! by exponent vector, by divisor, or by the subfield of F_{p^n} the
//! divisor corresponds to under the subfield-lattice reading.

use super::DivGraph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DotLabels {
    Exponents,
    Divisors,
    /// Divisor d of n labels the subfield F_{2^d} of F_{2^n}.
    Subfields,
}

pub fn to_dot(g: &DivGraph, labels: DotLabels) -> Result<String> {
    use std::fmt::Write;
    let label_of = |i: usize| -> Result<String> {
        match labels {
            DotLabels::Exponents => {
                let coords = g.vertex(i);
                let parts: Vec<String> = coords.coords().iter().map(|c| c.to_string()).collect();
                Ok(format!("({})", parts.join(",")))
            }
            DotLabels::Divisors | DotLabels::Subfields => {
                let Some(divs) = g.labels() else {
                    return Err(Error::InvalidInput(
                        "divisor labels need a graph built from an integer".into(),
                    ));
                };
                Ok(match labels {
                    DotLabels::Subfields => format!("F_{{2^{}}}", divs[i]),
                    _ => divs[i].to_string(),
                })
            }
        }
    };
    let mut out = String::new();
    writeln!(out, "graph divisibility {{").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for i in 0..g.vertex_count() {
        writeln!(out, "  v{} [label=\"{}\"];", i, label_of(i)?).unwrap();
    }
    for (a, b) in g.adj().edges() {
        writeln!(out, "  v{a} -- v{b};").unwrap();
    }
    writeln!(out, "}}").unwrap();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_is_deterministic_and_labeled() {
        let g = DivGraph::build_from_integer(6).unwrap();
        let dot = to_dot(&g, DotLabels::Divisors).unwrap();
        assert!(dot.starts_with("graph divisibility {"));
        assert!(dot.contains("v0 [label=\"1\"]"));
        assert!(dot.contains("v3 [label=\"6\"]"));
        assert!(dot.contains("v0 -- v1;"));
        assert!(!dot.contains("v1 -- v2;")); // 2 and 3 not adjacent
        assert_eq!(dot, to_dot(&g, DotLabels::Divisors).unwrap());

        let sub = to_dot(&g, DotLabels::Subfields).unwrap();
        assert!(sub.contains("F_{2^6}"));

        let gt = DivGraph::build(g.ftype()).unwrap();
        let exps = to_dot(&gt, DotLabels::Exponents).unwrap();
        assert!(exps.contains("(1,1)"));
        assert!(to_dot(&gt, DotLabels::Divisors).is_err());
    }
}
