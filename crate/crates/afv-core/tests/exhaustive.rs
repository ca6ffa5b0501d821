//! Bounded-exhaustive invariants over every framework with up to three
//! arguments (65,536-framework sweeps live in the acceptance suite).

use afv_core::*;

fn all_afs(n: usize) -> impl Iterator<Item = Af> {
    enumerate_afs(&standard_arg_names(n).unwrap()).unwrap()
}

fn family_subset(small: &ExtensionSet, big: &ExtensionSet) -> bool {
    small.iter().all(|s| big.contains(s))
}

#[test]
fn conflict_free_sets_avoid_self_loops() {
    for n in 0..=3 {
        for af in all_afs(n) {
            let loops = af.self_loops();
            for s in af.conflict_free_sets().iter() {
                assert!(s.is_disjoint(&loops), "{af:?}");
            }
        }
    }
}

#[test]
fn inclusion_chains_between_semantics() {
    use SemanticsKind::*;
    for n in 0..=3 {
        for af in all_afs(n) {
            let chain = [Stable, SemiStable, Preferred, Complete, Admissible];
            for pair in chain.windows(2) {
                assert!(
                    family_subset(&extensions(&af, pair[0]), &extensions(&af, pair[1])),
                    "{:?} ⊆ {:?} fails on {af:?}",
                    pair[0],
                    pair[1]
                );
            }
            let stable = extensions(&af, Stable);
            let stagle = extensions(&af, Stagle);
            let stage = extensions(&af, Stage);
            assert!(family_subset(&stable, &stagle), "{af:?}");
            assert!(family_subset(&stagle, &stage), "{af:?}");
        }
    }
}

#[test]
fn singleton_semantics_stay_singleton() {
    use SemanticsKind::*;
    for n in 0..=3 {
        for af in all_afs(n) {
            assert_eq!(extensions(&af, Grounded).len(), 1, "{af:?}");
            assert_eq!(extensions(&af, Ideal).len(), 1, "{af:?}");
            assert_eq!(extensions(&af, Eager).len(), 1, "{af:?}");
            assert!(!extensions(&af, Preferred).is_empty(), "{af:?}");
        }
    }
}

#[test]
fn strong_admissibility_sits_between_grounded_and_admissible() {
    use SemanticsKind::*;
    for n in 0..=3 {
        for af in all_afs(n) {
            let gr = extensions(&af, Grounded);
            let sad = extensions(&af, StronglyAdmissible);
            let ad = extensions(&af, Admissible);
            assert!(family_subset(&gr, &sad), "{af:?}");
            assert!(family_subset(&sad, &ad), "{af:?}");
            let grounded = grounded_fixpoint(&af);
            for s in sad.iter() {
                assert!(s.is_subset(&grounded), "{af:?}");
            }
        }
    }
}

#[test]
fn constructive_and_recursive_strong_admissibility_agree() {
    for n in 0..=3 {
        for af in all_afs(n) {
            let constructed = extensions(&af, SemanticsKind::StronglyAdmissible);
            for s in af.conflict_free_sets().iter() {
                assert_eq!(
                    is_strongly_admissible_recursive(&af, s).unwrap(),
                    constructed.contains(s),
                    "{af:?} {s:?}"
                );
            }
        }
    }
}

#[test]
fn grounded_fixpoint_is_the_least_complete_extension() {
    for n in 0..=3 {
        for af in all_afs(n) {
            let fix = grounded_fixpoint(&af);
            let complete = extensions(&af, SemanticsKind::Complete);
            assert!(complete.contains(&fix), "{af:?}");
            for c in complete.iter() {
                assert!(fix.is_subset(c), "{af:?}");
            }
        }
    }
}

#[test]
fn grounded_kernel_preserves_strongly_admissible_sets() {
    for n in 0..=3 {
        for af in all_afs(n) {
            let kerneled = apply_kernel(&af, KernelKind::Grounded);
            assert_eq!(
                extensions(&af, SemanticsKind::StronglyAdmissible),
                extensions(&kerneled, SemanticsKind::StronglyAdmissible),
                "{af:?}"
            );
        }
    }
}

#[test]
fn kernels_are_idempotent_and_preserve_nodes_and_loops() {
    for n in 0..=3 {
        for af in all_afs(n) {
            for kernel in KernelKind::ALL {
                let once = apply_kernel(&af, kernel);
                assert_eq!(once.arg_count(), af.arg_count());
                assert_eq!(once.self_loops(), af.self_loops(), "{af:?} {kernel}");
                assert!(apply_kernel(&once, kernel).same_as(&once), "{af:?} {kernel}");
            }
        }
    }
}

#[test]
fn grounded_and_naive_kernels_preserve_conflict_free_sets() {
    for n in 0..=3 {
        for af in all_afs(n) {
            for kernel in [KernelKind::Grounded, KernelKind::Naive] {
                assert_eq!(
                    af.conflict_free_sets(),
                    apply_kernel(&af, kernel).conflict_free_sets(),
                    "{af:?} {kernel}"
                );
            }
        }
    }
}

#[test]
fn every_supported_semantics_is_insensitive_to_its_kernel() {
    for n in 0..=3 {
        for af in all_afs(n) {
            for kind in SemanticsKind::ALL {
                let Ok(kernel) = kernel_for(kind) else { continue };
                assert_eq!(
                    extensions(&af, kind),
                    extensions(&apply_kernel(&af, kernel), kind),
                    "{af:?} {kind}"
                );
            }
        }
    }
}

#[test]
fn loop_reduct_is_idempotent_and_preserving() {
    for n in 0..=3 {
        for af in all_afs(n) {
            let reduct = af.loop_reduct();
            assert!(reduct.loop_reduct().same_as(&reduct), "{af:?}");
            assert_eq!(reduct.arg_count(), af.arg_count());
            assert_eq!(reduct.self_loops(), af.self_loops(), "{af:?}");
            assert_eq!(reduct.conflict_free_sets(), af.conflict_free_sets(), "{af:?}");
        }
    }
}

/// The four-argument pass of the invariants above, fused into one sweep so
/// each framework's families are computed once.
#[test]
fn four_argument_sweep() {
    use SemanticsKind::*;
    for af in all_afs(4) {
        let stable = extensions(&af, Stable);
        let semi = extensions(&af, SemiStable);
        let preferred = extensions(&af, Preferred);
        let complete = extensions(&af, Complete);
        let admissible = extensions(&af, Admissible);
        let stagle = extensions(&af, Stagle);
        let stage = extensions(&af, Stage);
        assert!(family_subset(&stable, &semi), "{af:?}");
        assert!(family_subset(&semi, &preferred), "{af:?}");
        assert!(family_subset(&preferred, &complete), "{af:?}");
        assert!(family_subset(&complete, &admissible), "{af:?}");
        assert!(family_subset(&stable, &stagle), "{af:?}");
        assert!(family_subset(&stagle, &stage), "{af:?}");

        assert_eq!(extensions(&af, Ideal).len(), 1, "{af:?}");
        assert_eq!(extensions(&af, Eager).len(), 1, "{af:?}");
        assert!(!preferred.is_empty(), "{af:?}");

        let fix = grounded_fixpoint(&af);
        assert!(complete.contains(&fix), "{af:?}");
        assert!(complete.iter().all(|c| fix.is_subset(c)), "{af:?}");

        let sad = extensions(&af, StronglyAdmissible);
        let gr_kernel = apply_kernel(&af, KernelKind::Grounded);
        assert_eq!(sad, extensions(&gr_kernel, StronglyAdmissible), "{af:?}");

        let cf = af.conflict_free_sets();
        assert_eq!(cf, gr_kernel.conflict_free_sets(), "{af:?}");
        assert_eq!(cf, apply_kernel(&af, KernelKind::Naive).conflict_free_sets(), "{af:?}");

        let reduct = af.loop_reduct();
        assert!(reduct.loop_reduct().same_as(&reduct), "{af:?}");
        assert_eq!(reduct.self_loops(), af.self_loops(), "{af:?}");
        assert_eq!(reduct.conflict_free_sets(), cf, "{af:?}");

        let ad_kernel = apply_kernel(&af, KernelKind::Admissible);
        assert!(apply_kernel(&ad_kernel, KernelKind::Admissible).same_as(&ad_kernel), "{af:?}");
        assert_eq!(ad_kernel.self_loops(), af.self_loops(), "{af:?}");
    }
}

#[test]
fn all_semantics_are_rational_at_three_arguments() {
    for kind in SemanticsKind::ALL {
        assert!(check_rational(kind, 3).unwrap().is_none(), "{kind}");
    }
}

#[test]
fn kernel_equality_is_a_union_congruence_on_two_arguments() {
    let names = standard_arg_names(2).unwrap();
    let afs: Vec<Af> = enumerate_afs(&names).unwrap().collect();
    for kernel in KernelKind::ALL {
        for f in &afs {
            for g in &afs {
                if !kernels_equal(f, g, kernel) {
                    continue;
                }
                for h in &afs {
                    assert!(
                        kernels_equal(&union_af(f, h), &union_af(g, h), kernel),
                        "{f:?} {g:?} {h:?} {kernel}"
                    );
                }
            }
        }
    }
}

#[test]
fn kernel_equality_is_a_union_congruence_on_random_triples() {
    // Wider frameworks with partially overlapping argument sets; the
    // kernel-equal partner is the framework's own kernel.
    let mut state = 0x9e3779b97f4a7c15u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let f_names = standard_arg_names(4).unwrap();
    let h_names = ["c", "d", "e", "f"];
    for _ in 0..300 {
        let f_mask = next() & 0xffff;
        let h_mask = next() & 0xffff;
        let f = enumerate_afs(&f_names).unwrap().nth(f_mask as usize).unwrap();
        let h = enumerate_afs(&h_names).unwrap().nth(h_mask as usize).unwrap();
        for kernel in KernelKind::ALL {
            let g = apply_kernel(&f, kernel);
            assert!(kernels_equal(&f, &g, kernel));
            assert!(
                kernels_equal(&union_af(&f, &h), &union_af(&g, &h), kernel),
                "{f:?} {h:?} {kernel}"
            );
        }
    }
}
