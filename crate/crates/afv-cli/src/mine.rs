//! `afv mine`: runs the whole bounded theorem suite and prints one verdict
//! line per check. Checks are independent, so they can run on a small worker
//! pool; output order stays fixed regardless of scheduling.

use std::io::Write;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use afv_core::{
    apply_kernel, canonicalization_confluent, check_intermediate_theorem, check_rational,
    enumerate_afs, exact_class_for, extensions, gamma, kernel_for, kernels_equal,
    lattice_agrees_with_oracle, minimal_classes, standard_arg_names, verification_class,
    Error, IntermediateViolation, KernelKind, SemanticsKind,
};

use crate::{EXIT_FINDING, EXIT_OK};

struct Check {
    label: String,
    run: Box<dyn Fn() -> Result<bool, Error> + Send + Sync>,
}

fn kernel_supported() -> Vec<SemanticsKind> {
    SemanticsKind::ALL.into_iter().filter(|&k| kernel_for(k).is_ok()).collect()
}

fn gamma_supported() -> Vec<SemanticsKind> {
    SemanticsKind::ALL.into_iter().filter(|&k| exact_class_for(k).is_some()).collect()
}

fn checks(bound: usize) -> Vec<Check> {
    let mut checks: Vec<Check> = Vec::new();
    let oracle_bound = bound.min(afv_core::equivalence::MAX_ORACLE_ARGS);

    for kind in SemanticsKind::ALL {
        checks.push(Check {
            label: format!("rational {kind} n={bound}"),
            run: Box::new(move || Ok(check_rational(kind, bound)?.is_none())),
        });
    }

    for kind in kernel_supported() {
        checks.push(Check {
            label: format!("kernel-insensitive {kind} n={bound}"),
            run: Box::new(move || {
                let kernel = kernel_for(kind)?;
                let names = standard_arg_names(bound)?;
                for af in enumerate_afs(&names)? {
                    if extensions(&af, kind) != extensions(&apply_kernel(&af, kernel), kind) {
                        return Ok(false);
                    }
                }
                Ok(true)
            }),
        });
    }

    for kernel in KernelKind::ALL {
        checks.push(Check {
            label: format!("kernel-idempotent {kernel} n={bound}"),
            run: Box::new(move || {
                let names = standard_arg_names(bound)?;
                for af in enumerate_afs(&names)? {
                    let once = apply_kernel(&af, kernel);
                    if !apply_kernel(&once, kernel).same_as(&once) {
                        return Ok(false);
                    }
                }
                Ok(true)
            }),
        });
    }

    checks.push(Check {
        label: "lattice-oracle agreement (225 pairs)".to_string(),
        run: Box::new(|| Ok(lattice_agrees_with_oracle())),
    });
    checks.push(Check {
        label: "canonicalization confluent (127 subsets)".to_string(),
        run: Box::new(|| Ok(canonicalization_confluent())),
    });

    for kind in gamma_supported() {
        checks.push(Check {
            label: format!("gamma {kind} n={bound}"),
            run: Box::new(move || {
                let class_fn = exact_class_for(kind).expect("filtered above");
                let names = standard_arg_names(bound)?;
                for af in enumerate_afs(&names)? {
                    let class = verification_class(&af, class_fn);
                    if gamma(kind, &class, &af.all_args())? != extensions(&af, kind) {
                        return Ok(false);
                    }
                }
                Ok(true)
            }),
        });
    }

    for kind in gamma_supported() {
        let expected = exact_class_for(kind).expect("filtered above");
        if bound >= 3 {
            // Three arguments are enough to refute every strictly weaker
            // class, so the minimal set must be exactly the known one.
            checks.push(Check {
                label: format!("exact-class {kind} = {} n={bound}", expected.ascii_name()),
                run: Box::new(move || Ok(minimal_classes(kind, bound)? == vec![expected])),
            });
        } else {
            checks.push(Check {
                label: format!("verifiable-by {} {kind} n={bound}", expected.ascii_name()),
                run: Box::new(move || {
                    Ok(afv_core::find_verifiability_counterexample(kind, expected, bound)?
                        .is_none())
                }),
            });
        }
    }

    for kind in kernel_supported() {
        checks.push(Check {
            label: format!("intermediate {kind} n={oracle_bound}"),
            run: Box::new(move || Ok(check_intermediate_theorem(kind, oracle_bound)?.holds)),
        });
    }

    checks.push(Check {
        label: "stagle incompatible with the stable kernel".to_string(),
        run: Box::new(move || {
            let report = check_intermediate_theorem(SemanticsKind::Stagle, oracle_bound)?;
            match report.violation {
                Some(IntermediateViolation::Distinguished { f, g, .. }) if !report.holds => {
                    Ok(kernels_equal(&f, &g, KernelKind::Stable))
                }
                _ => Ok(false),
            }
        }),
    });

    checks
}

pub fn run(bound: usize, threads: usize, out: &mut dyn Write) -> Result<i32, Error> {
    if bound == 0 || bound > afv_core::equivalence::MAX_CLASS_SEARCH_ARGS {
        return Err(Error::BoundExceeded {
            requested: bound,
            limit: afv_core::equivalence::MAX_CLASS_SEARCH_ARGS,
        });
    }
    let checks = checks(bound);
    let results: Mutex<Vec<Option<Result<bool, Error>>>> =
        Mutex::new((0..checks.len()).map(|_| None).collect());
    let cursor = AtomicUsize::new(0);
    let workers = threads.max(1).min(checks.len());

    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = cursor.fetch_add(1, Ordering::Relaxed);
                if i >= checks.len() {
                    break;
                }
                let outcome = (checks[i].run)();
                results.lock().unwrap()[i] = Some(outcome);
            });
        }
    });

    let mut all_ok = true;
    let results = results.into_inner().unwrap();
    for (check, outcome) in checks.iter().zip(results) {
        let line = match outcome.expect("every check ran") {
            Ok(true) => "PASS".to_string(),
            Ok(false) => {
                all_ok = false;
                "FAIL".to_string()
            }
            Err(e) => {
                all_ok = false;
                format!("ERROR ({e})")
            }
        };
        let _ = writeln!(out, "{}: {}", check.label, line);
    }
    let _ = writeln!(out, "{}", if all_ok { "all checks passed" } else { "FAILURES found" });
    Ok(if all_ok { EXIT_OK } else { EXIT_FINDING })
}
