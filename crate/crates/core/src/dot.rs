//! DOT export of Veldkamp spaces. Hyperplanes become nodes; each 3-point
//! Veldkamp line is drawn through one auxiliary junction node connected
//! to its three members.

use crate::hyperplanes::{HyperplaneGeometry, VeldkampSpace};

pub fn emit_veldkamp_dot(vs: &VeldkampSpace, labels: Option<&[HyperplaneGeometry]>) -> String {
    let mut out = String::from("graph veldkamp {\n");
    if vs.hyperplanes.is_empty() {
        out.push_str("}\n");
        return out;
    }
    out.push_str("  node [shape=circle];\n");
    for (k, h) in vs.hyperplanes.iter().enumerate() {
        let label = match labels {
            Some(tags) => tags[k].label.clone(),
            None => format!("H{k} ({})", h.len()),
        };
        out.push_str(&format!("  h{k} [label=\"{label}\"];\n"));
    }
    for (j, line) in vs.lines.iter().enumerate() {
        out.push_str(&format!("  j{j} [shape=point, label=\"\"];\n"));
        for &member in line {
            out.push_str(&format!("  h{member} -- j{j};\n"));
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::desargues;
    use crate::hyperplanes::veldkamp_space;
    use crate::incidence::Configuration;
    use crate::label::PointLabel;

    fn count(haystack: &str, needle: &str) -> usize {
        haystack.matches(needle).count()
    }

    #[test]
    fn single_line_gives_three_nodes_one_junction() {
        // 3 points, 1 line: the Veldkamp space is PG(1,2)
        let labels = (0..3).map(|i| PointLabel::Atom(format!("p{i}"))).collect();
        let cfg = Configuration::new(labels, vec![vec![0, 1, 2]]).unwrap();
        let vs = veldkamp_space(&cfg).unwrap();
        let dot = emit_veldkamp_dot(&vs, None);
        assert_eq!(count(&dot, "[label=\"H"), 3);
        assert_eq!(count(&dot, "shape=point"), 1);
        assert_eq!(count(&dot, " -- "), 3);
    }

    #[test]
    fn desargues_covers_the_pg32_line_count() {
        let vs = veldkamp_space(&desargues(5).unwrap()).unwrap();
        let dot = emit_veldkamp_dot(&vs, None);
        assert_eq!(count(&dot, "[label=\"H"), 15);
        assert_eq!(count(&dot, "shape=point"), 35);
        assert_eq!(count(&dot, " -- "), 105);
    }

    #[test]
    fn empty_veldkamp_is_header_only() {
        let labels = vec![PointLabel::Atom("p0".into())];
        // one point, no lines: the only hyperplane is the empty set,
        // so use a configuration with no hyperplanes instead
        let cfg = Configuration::new(labels, vec![]).unwrap();
        let vs = veldkamp_space(&cfg).unwrap();
        // a single point with no lines has the empty set as hyperplane
        assert_eq!(vs.hyperplanes.len(), 1);
        let empty = VeldkampSpace {
            hyperplanes: vec![],
            lines: vec![],
            dimension: -1,
        };
        assert_eq!(emit_veldkamp_dot(&empty, None), "graph veldkamp {\n}\n");
        let _ = cfg;
    }
}
