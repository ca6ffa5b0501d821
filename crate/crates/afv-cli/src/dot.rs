//! DOT export. Nodes and edges come out sorted by name, self-loops included,
//! so the output is byte-stable for a given framework.

use afv_core::Af;

pub fn write_dot(af: &Af) -> String {
    let mut names: Vec<&str> = af.table().names().collect();
    names.sort_unstable();
    let mut edges: Vec<(&str, &str)> = af
        .attack_pairs()
        .map(|(a, b)| (af.table().name(a), af.table().name(b)))
        .collect();
    edges.sort_unstable();

    if names.is_empty() {
        return "digraph af {}\n".to_string();
    }
    let mut out = String::from("digraph af {\n");
    for name in names {
        out.push_str(&format!("  \"{name}\";\n"));
    }
    for (src, dst) in edges {
        out.push_str(&format!("  \"{src}\" -> \"{dst}\";\n"));
    }
    out.push_str("}\n");
    out
}
