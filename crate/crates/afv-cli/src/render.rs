//! Text rendering of extensions and verification classes. Everything is
//! ordered by argument name (cardinality first), independent of internal id
//! assignment, so identical inputs give identical bytes.

use afv_core::{Af, ArgSet, ExtensionSet, VerificationClass};

pub fn sorted_names(af: &Af, set: &ArgSet) -> Vec<String> {
    let mut names: Vec<String> = set.iter().map(|i| af.table().name(i).to_string()).collect();
    names.sort_unstable();
    names
}

/// `{a, c}` renders as `[a,c]`.
pub fn format_set(af: &Af, set: &ArgSet) -> String {
    format!("[{}]", sorted_names(af, set).join(","))
}

fn name_ordered(af: &Af, extensions: &ExtensionSet) -> Vec<Vec<String>> {
    let mut families: Vec<Vec<String>> =
        extensions.iter().map(|s| sorted_names(af, s)).collect();
    families.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    families
}

/// One extension per line.
pub fn format_extensions(af: &Af, extensions: &ExtensionSet) -> String {
    let mut out = String::new();
    for family in name_ordered(af, extensions) {
        out.push_str(&format!("[{}]\n", family.join(",")));
    }
    out
}

/// The nested single-line form used by solver competitions.
pub fn format_extensions_iccma(af: &Af, extensions: &ExtensionSet) -> String {
    let inner: Vec<String> = name_ordered(af, extensions)
        .into_iter()
        .map(|family| format!("[{}]", family.join(",")))
        .collect();
    format!("[{}]\n", inner.join(","))
}

/// One class tuple per line: the conflict-free set, then its images.
pub fn format_class(af: &Af, class: &VerificationClass) -> String {
    let mut rows: Vec<(Vec<String>, String)> = class
        .tuples()
        .iter()
        .map(|t| {
            let mut parts = vec![format_set(af, &t.set)];
            parts.extend(t.images.iter().map(|img| format_set(af, img)));
            (sorted_names(af, &t.set), format!("({})\n", parts.join(", ")))
        })
        .collect();
    rows.sort_by(|(a, _), (b, _)| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    rows.into_iter().map(|(_, line)| line).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use afv_core::{build_af, extensions, verification_class, NeighborhoodFn, SemanticsKind};

    #[test]
    fn extensions_are_ordered_by_name_not_id() {
        // Declaration order b, d, c, a gives ids out of alphabetical order.
        let af = build_af(&["b", "d", "c", "a"], &[("b", "b"), ("d", "c")]);
        let na = extensions(&af, SemanticsKind::Naive);
        assert_eq!(format_extensions(&af, &na), "[a,c]\n[a,d]\n");
        assert_eq!(format_extensions_iccma(&af, &na), "[[a,c],[a,d]]\n");
    }

    #[test]
    fn empty_family_and_empty_set_render_distinctly() {
        let af = build_af(&["a"], &[("a", "a")]);
        let stable = extensions(&af, SemanticsKind::Stable);
        assert_eq!(format_extensions(&af, &stable), "");
        assert_eq!(format_extensions_iccma(&af, &stable), "[]\n");
        let stage = extensions(&af, SemanticsKind::Stage);
        assert_eq!(format_extensions(&af, &stage), "[]\n");
    }

    #[test]
    fn class_tuples_show_every_image() {
        let af = build_af(&["a", "b"], &[("a", "b")]);
        let class = verification_class(&af, NeighborhoodFn::PlusMinus);
        let text = format_class(&af, &class);
        assert!(text.starts_with("([], [], [])\n"));
        assert!(text.contains("([a], [a,b], [a])\n"));
    }
}
