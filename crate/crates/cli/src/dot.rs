//! Deterministic DOT rendering: tolerance graphs without loops, Hasse
//! diagrams of quasiorders with dashed segments between mutually comparable
//! elements, and inclusion diagrams of definable-set lattices.

use tolrel::{FiniteLattice, Quasiorder, SetLattice, Tolerance};

fn quote(label: &str) -> String {
    format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
}

/// The tolerance as an undirected graph. Loops are implicit and not drawn.
pub fn tolerance_graph(t: &Tolerance) -> String {
    let universe = t.universe();
    let mut nodes: Vec<&str> = universe.labels().iter().map(String::as_str).collect();
    nodes.sort_unstable();
    let mut edges: Vec<(&str, &str)> = t
        .strict_pairs()
        .into_iter()
        .map(|(i, j)| {
            let (a, b) = (universe.label(i), universe.label(j));
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    edges.sort_unstable();

    let mut out = String::from("graph tolerance {\n");
    for node in nodes {
        out.push_str(&format!("  {};\n", quote(node)));
    }
    for (a, b) in edges {
        out.push_str(&format!("  {} -- {};\n", quote(a), quote(b)));
    }
    out.push_str("}\n");
    out
}

/// The Hasse diagram of the quasiorder's partial-order quotient, drawn on
/// the original elements: solid arrows along cover pairs of the quotient,
/// dashed segments chaining the elements of each equivalence class.
pub fn quasiorder_hasse(q: &Quasiorder) -> String {
    let universe = q.universe();
    let n = q.len();

    // Equivalence classes of mutual comparability, keyed by smallest label.
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let members: Vec<usize> = (0..n)
            .filter(|&y| q.leq_at(x, y) && q.leq_at(y, x))
            .collect();
        for &y in &members {
            class_of[y] = id;
        }
        classes.push(members);
    }

    // Strict order between classes, via any representatives.
    let below = |a: usize, b: usize| -> bool {
        let x = classes[a][0];
        let y = classes[b][0];
        a != b && q.leq_at(x, y)
    };
    let mut solid: Vec<(String, String)> = Vec::new();
    for a in 0..classes.len() {
        for b in 0..classes.len() {
            if !below(a, b) {
                continue;
            }
            let covered = (0..classes.len()).any(|c| below(a, c) && below(c, b));
            if covered {
                continue;
            }
            for &x in &classes[a] {
                for &y in &classes[b] {
                    solid.push((universe.label(x).to_string(), universe.label(y).to_string()));
                }
            }
        }
    }
    solid.sort();

    // Dashed chains inside each class, in label order.
    let mut dashed: Vec<(String, String)> = Vec::new();
    for class in &classes {
        let mut labels: Vec<&str> = class.iter().map(|&x| universe.label(x)).collect();
        labels.sort_unstable();
        for pair in labels.windows(2) {
            dashed.push((pair[0].to_string(), pair[1].to_string()));
        }
    }
    dashed.sort();

    let mut nodes: Vec<&str> = universe.labels().iter().map(String::as_str).collect();
    nodes.sort_unstable();

    let mut out = String::from("digraph quasiorder {\n  rankdir=BT;\n");
    for node in nodes {
        out.push_str(&format!("  {};\n", quote(node)));
    }
    for (a, b) in solid {
        out.push_str(&format!("  {} -> {};\n", quote(&a), quote(&b)));
    }
    for (a, b) in dashed {
        out.push_str(&format!(
            "  {} -> {} [dir=none, style=dashed];\n",
            quote(&a),
            quote(&b)
        ));
    }
    out.push_str("}\n");
    out
}

/// The Hasse diagram of a finite lattice.
pub fn lattice_hasse(l: &FiniteLattice) -> String {
    let mut nodes: Vec<&str> = l.labels().iter().map(String::as_str).collect();
    nodes.sort_unstable();
    let mut covers: Vec<(String, String)> = l
        .cover_pairs()
        .into_iter()
        .map(|(i, j)| (l.label(i).to_string(), l.label(j).to_string()))
        .collect();
    covers.sort();

    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n");
    for node in nodes {
        out.push_str(&format!("  {};\n", quote(node)));
    }
    for (a, b) in covers {
        out.push_str(&format!("  {} -> {};\n", quote(&a), quote(&b)));
    }
    out.push_str("}\n");
    out
}

/// The inclusion diagram of a set lattice, members rendered as label sets.
pub fn set_lattice_hasse(l: &SetLattice) -> String {
    let render = |i: usize| format!("{{{}}}", l.member(i).labels().join(" "));
    let m = l.len();
    let mut nodes: Vec<String> = (0..m).map(render).collect();
    nodes.sort();
    let mut covers: Vec<(String, String)> = Vec::new();
    for i in 0..m {
        for j in 0..m {
            if i == j || !l.member(i).is_subset_of(l.member(j)) {
                continue;
            }
            let between = (0..m).any(|k| {
                k != i
                    && k != j
                    && l.member(i).is_subset_of(l.member(k))
                    && l.member(k).is_subset_of(l.member(j))
            });
            if !between {
                covers.push((render(i), render(j)));
            }
        }
    }
    covers.sort();

    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n");
    for node in nodes {
        out.push_str(&format!("  {};\n", quote(&node)));
    }
    for (a, b) in covers {
        out.push_str(&format!("  {} -> {};\n", quote(&a), quote(&b)));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use tolrel::{Tolerance, Universe};

    #[test]
    fn identity_graph_has_isolated_nodes() {
        let u = Universe::letters(2).unwrap();
        let dot = tolerance_graph(&Tolerance::identity(&u));
        assert_eq!(dot, "graph tolerance {\n  \"a\";\n  \"b\";\n}\n");
    }

    #[test]
    fn triangle_tail_graph() {
        let dot = tolerance_graph(&tolrel::fixture::triangle_with_tail());
        assert_eq!(dot.matches(" -- ").count(), 4);
        assert!(dot.contains("\"a\" -- \"b\";"));
        assert!(dot.contains("\"c\" -- \"d\";"));
    }

    #[test]
    fn triangle_tail_hasse_has_dashed_pair() {
        let q = tolrel::fixture::triangle_with_tail().quasiorder();
        let dot = quasiorder_hasse(&q);
        assert!(dot.contains("\"a\" -> \"b\" [dir=none, style=dashed];"));
        assert!(dot.contains("\"a\" -> \"c\";"));
        assert!(dot.contains("\"b\" -> \"c\";"));
        assert!(dot.contains("\"d\" -> \"c\";"));
        assert_eq!(dot.matches("dashed").count(), 1);
    }

    #[test]
    fn lattice_hasse_of_square() {
        let square = FiniteLattice::boolean(2);
        let dot = lattice_hasse(&square);
        assert_eq!(dot.matches(" -> ").count(), 4);
        assert!(dot.contains("\"{}\" -> \"{1}\";"));
    }
}
