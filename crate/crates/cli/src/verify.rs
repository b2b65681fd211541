//! The verify subcommands: sweep an invariant over its stated range, name
//! the first failing instance, and report pass/fail.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde_json::{json, Value};
use window_calculus::graderestrict::{
    gamma_weight_range, grade_restriction_check, GammaSpec, GradedTerm,
};
use window_calculus::lascoux::{pushforward_terms, resolution_terms};
use window_calculus::tensorcalc::{decompose_wedge_gl, lr_coefficients};
use window_calculus::weights::{enumerate_dominant_in_interval, enumerate_in_box, DominantWeight};

/// Reads the optional thread cap; `None` means the variable is unset.
pub fn thread_cap() -> Result<Option<usize>, String> {
    match std::env::var("WINDOWCALC_THREADS") {
        Err(_) => Ok(None),
        Ok(s) => s
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n >= 1)
            .map(Some)
            .ok_or_else(|| format!("WINDOWCALC_THREADS must be a positive integer, got {s:?}")),
    }
}

fn worker_count(items: usize) -> usize {
    let default = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .min(8);
    thread_cap()
        .unwrap_or(None)
        .unwrap_or(default)
        .min(items.max(1))
}

/// Applies `f` to every item on a capped pool of scoped threads, preserving
/// input order in the output.
fn parallel_map<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let workers = worker_count(items.len());
    if workers <= 1 || items.len() <= 1 {
        return items.iter().map(&f).collect();
    }
    let chunk_size = items.len().div_ceil(workers);
    let chunks: Vec<&[T]> = items.chunks(chunk_size).collect();
    let mut results: Vec<Vec<R>> = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = chunks
            .into_iter()
            .map(|chunk| scope.spawn(|| chunk.iter().map(&f).collect::<Vec<R>>()))
            .collect();
        for h in handles {
            results.push(h.join().expect("verification worker panicked"));
        }
    });
    results.into_iter().flatten().collect()
}

pub struct VerifyOutcome {
    pub pass: bool,
    pub results: Value,
}

/// Invariance of window membership: every Schur constituent of a window
/// weight tensored with any wedge power of gl(k) stays inside `[-k, N-k)`.
pub fn verify_window_invariance(k: usize, ambient: usize, r_max: u64) -> Result<VerifyOutcome, String> {
    if 2 * k > ambient {
        return Err(format!("need 2k <= N, got k={k} N={ambient}"));
    }
    let lambdas = enumerate_dominant_in_interval(k, -1, ambient as i64 - 2 * k as i64 + 1)
        .map_err(|e| e.to_string())?;
    let r_top = r_max.min((k * k) as u64);
    let wedges: Vec<_> = (0..=r_top)
        .map(|r| decompose_wedge_gl(r, k).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    let lo = -(k as i64);
    let hi = ambient as i64 - k as i64;
    let per_lambda = parallel_map(lambdas, |lambda| {
        let mut checked = 0u64;
        let mut violation: Option<Value> = None;
        'outer: for (r, wedge) in wedges.iter().enumerate() {
            for mu in wedge.support() {
                let product = match lr_coefficients(mu, lambda, k) {
                    Ok(p) => p,
                    Err(e) => {
                        violation = Some(json!({ "error": e.to_string() }));
                        break 'outer;
                    }
                };
                for nu in product.support() {
                    checked += 1;
                    if nu.entries().iter().any(|&e| e < lo || e >= hi) {
                        violation = Some(json!({
                            "lambda": lambda.entries(),
                            "r": r,
                            "mu": mu.entries(),
                            "nu": nu.entries(),
                        }));
                        break 'outer;
                    }
                }
            }
        }
        (checked, violation)
    });
    let checked: u64 = per_lambda.iter().map(|(c, _)| c).sum();
    let violations: Vec<Value> = per_lambda.into_iter().filter_map(|(_, v)| v).collect();
    Ok(VerifyOutcome {
        pass: violations.is_empty(),
        results: json!({
            "window": format!("[{lo}, {hi})"),
            "checked": checked,
            "violations": violations,
        }),
    })
}

/// Box property of the stratum resolutions: every weight on the primed space
/// lies in the `[0, k]` box.
pub fn verify_resolution_box(k_max: usize) -> Result<VerifyOutcome, String> {
    let mut checked = 0u64;
    let mut violations = Vec::new();
    for k in 1..=k_max {
        for i in 0..=k {
            let terms = resolution_terms(k, i).map_err(|e| e.to_string())?;
            for term in &terms {
                for c in &term.contributions {
                    let lam = &c.weights["V'"];
                    checked += 1;
                    if lam.entries().iter().any(|&e| e < 0 || e > k as i64) {
                        violations.push(json!({
                            "k": k,
                            "i": i,
                            "homologicalIndex": term.homological_index,
                            "lambda": lam.entries(),
                        }));
                    }
                }
            }
        }
    }
    Ok(VerifyOutcome {
        pass: violations.is_empty(),
        results: json!({ "checked": checked, "violations": violations }),
    })
}

/// Grade restriction: the `[0, k)` generators pass at kappa = 0, and the
/// combinatorial gamma ranges agree with the weight-multiset brute force.
pub fn verify_grade_restriction(k_max: usize, brute_force_k_max: usize) -> Result<VerifyOutcome, String> {
    let mut violations = Vec::new();
    let mut checked = 0u64;
    for k in 1..=k_max {
        let gens =
            enumerate_dominant_in_interval(k, 0, k as i64).map_err(|e| e.to_string())?;
        let terms: Vec<GradedTerm> = gens
            .iter()
            .map(|g| GradedTerm {
                mu: DominantWeight::zero(k),
                lambda: g.clone(),
                multiplicity: BigInt::from(1),
            })
            .collect();
        let report = grade_restriction_check(&terms, k, &vec![0; k]).map_err(|e| e.to_string())?;
        checked += report.per_gamma.len() as u64;
        if !report.window_pass {
            for g in &report.per_gamma {
                if !g.window_pass {
                    violations.push(json!({
                        "k": k,
                        "i": g.i,
                        "range": g.range.map(|r| vec![r.min, r.max]),
                    }));
                }
            }
        }
    }
    for k in 1..=brute_force_k_max.min(k_max) {
        let zero = DominantWeight::zero(k);
        for lambda in
            enumerate_dominant_in_interval(k, 0, 5).map_err(|e| e.to_string())?
        {
            let weights =
                window_calculus::characters::weight_multiset(&lambda, k).map_err(|e| e.to_string())?;
            for i in 1..=k {
                let g = GammaSpec::new(k, i).map_err(|e| e.to_string())?;
                let range = gamma_weight_range(g, &zero, &lambda).map_err(|e| e.to_string())?;
                let gammas: Vec<i64> = weights
                    .keys()
                    .map(|e| e[k - i..].iter().sum::<i64>())
                    .collect();
                let min = *gammas.iter().min().expect("nonempty weight multiset");
                let max = *gammas.iter().max().expect("nonempty weight multiset");
                checked += 1;
                if (range.min, range.max) != (min, max) {
                    violations.push(json!({
                        "k": k,
                        "i": i,
                        "lambda": lambda.entries(),
                        "combinatorial": [range.min, range.max],
                        "bruteForce": [min, max],
                    }));
                }
            }
        }
    }
    Ok(VerifyOutcome {
        pass: violations.is_empty(),
        results: json!({ "checked": checked, "violations": violations }),
    })
}

/// Window property of the pushforward terms: every contracted weight on the
/// primed space lies in `[0, N)`.
pub fn verify_pushforward_window(k: usize, ambients: &[usize]) -> Result<VerifyOutcome, String> {
    let mus: Vec<DominantWeight> = enumerate_in_box(k, k as u64)
        .into_iter()
        .map(|p| p.to_weight(k).expect("box partition fits rank"))
        .collect();
    let lambdas = enumerate_dominant_in_interval(k, 0, k as i64).map_err(|e| e.to_string())?;
    let mut jobs = Vec::new();
    for &ambient in ambients {
        if 2 * k > ambient {
            return Err(format!("need 2k <= N, got k={k} N={ambient}"));
        }
        for mu in &mus {
            for lambda in &lambdas {
                jobs.push((ambient, mu.clone(), lambda.clone()));
            }
        }
    }
    let outcomes = parallel_map(jobs, |(ambient, mu, lambda)| {
        let mut checked = 0u64;
        let mut violation = None;
        match pushforward_terms(k, *ambient, mu, lambda) {
            Err(e) => violation = Some(json!({ "error": e.to_string() })),
            Ok(terms) => {
                'outer: for term in &terms {
                    for c in &term.contributions {
                        let xi = &c.weights["V'"];
                        checked += 1;
                        if xi.entries().iter().any(|&e| e < 0 || e >= *ambient as i64) {
                            violation = Some(json!({
                                "N": ambient,
                                "mu": mu.entries(),
                                "lambda": lambda.entries(),
                                "xi": xi.entries(),
                            }));
                            break 'outer;
                        }
                    }
                }
            }
        }
        (checked, violation)
    });
    let checked: u64 = outcomes.iter().map(|(c, _)| c).sum();
    let violations: Vec<Value> = outcomes.into_iter().filter_map(|(_, v)| v).collect();
    let mut results = BTreeMap::new();
    results.insert("checked".to_string(), json!(checked));
    results.insert("violations".to_string(), json!(violations));
    Ok(VerifyOutcome {
        pass: violations.is_empty(),
        results: json!(results),
    })
}
