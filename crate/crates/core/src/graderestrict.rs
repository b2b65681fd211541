//! Weight ranges of Schur bundles under the rank-i one-parameter subgroups
//! and membership in the grade-restriction window.

use num_bigint::BigInt;

use crate::error::Result;
use crate::weights::DominantWeight;

/// The one-parameter subgroup diag(1,...,1,t,...,t) of GL(k) with `k - i`
/// ones on the diagonal, acting on the primed space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GammaSpec {
    pub k: usize,
    pub i: usize,
}

impl GammaSpec {
    pub fn new(k: usize, i: usize) -> Result<Self> {
        if i == 0 || i > k {
            return Err(crate::error::Error::RankOrder(format!(
                "need 1 <= i <= k, got i={i} k={k}"
            )));
        }
        Ok(GammaSpec { k, i })
    }
}

/// A closed integer interval of weights.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeightRange {
    pub min: i64,
    pub max: i64,
}

/// The width of the grade-restriction window at gamma_i: `i * k`.
pub fn eta(g: GammaSpec) -> i64 {
    (g.i * g.k) as i64
}

/// The range of gamma_i-weights of the bundle S^mu(V-dual) tensor
/// S^lambda(V'). The subgroup acts only on the primed factor, so only
/// `lambda` contributes: the extremes are the sums of its `i` smallest and
/// `i` largest entries.
pub fn gamma_weight_range(
    g: GammaSpec,
    mu: &DominantWeight,
    lambda: &DominantWeight,
) -> Result<WeightRange> {
    mu.check_rank(g.k)?;
    lambda.check_rank(g.k)?;
    let e = lambda.entries();
    let min: i64 = e[g.k - g.i..].iter().sum();
    let max: i64 = e[..g.i].iter().sum();
    Ok(WeightRange { min, max })
}

/// One graded summand handed to the grade-restriction check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedTerm {
    pub mu: DominantWeight,
    pub lambda: DominantWeight,
    pub multiplicity: BigInt,
}

/// The verdict at one value of `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaReport {
    pub i: usize,
    /// Union of the term ranges; `None` when no terms were given.
    pub range: Option<WeightRange>,
    /// Containment in the half-open window `[kappa_i, kappa_i + ik)`.
    pub window_pass: bool,
    /// Containment in the closed variant `[kappa_i, kappa_i + ik]`.
    pub closed_pass: bool,
}

/// The full grade-restriction report over `i = 1..=k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradeRestrictionReport {
    pub per_gamma: Vec<GammaReport>,
    pub window_pass: bool,
    pub closed_pass: bool,
}

/// Checks every gamma_i-weight range of the given terms against the windows
/// `[kappa_i, kappa_i + ik)` and `[kappa_i, kappa_i + ik]`. An empty term
/// list passes vacuously.
pub fn grade_restriction_check(
    terms: &[GradedTerm],
    k: usize,
    kappa: &[i64],
) -> Result<GradeRestrictionReport> {
    if kappa.len() != k {
        return Err(crate::error::Error::LengthMismatch {
            expected: k,
            found: kappa.len(),
        });
    }
    let mut per_gamma = Vec::with_capacity(k);
    for i in 1..=k {
        let g = GammaSpec::new(k, i)?;
        let mut union: Option<WeightRange> = None;
        for term in terms {
            let r = gamma_weight_range(g, &term.mu, &term.lambda)?;
            union = Some(match union {
                None => r,
                Some(u) => WeightRange {
                    min: u.min.min(r.min),
                    max: u.max.max(r.max),
                },
            });
        }
        let lo = kappa[i - 1];
        let hi = lo + eta(g);
        let (window_pass, closed_pass) = match union {
            None => (true, true),
            Some(u) => (u.min >= lo && u.max < hi, u.min >= lo && u.max <= hi),
        };
        per_gamma.push(GammaReport {
            i,
            range: union,
            window_pass,
            closed_pass,
        });
    }
    Ok(GradeRestrictionReport {
        window_pass: per_gamma.iter().all(|r| r.window_pass),
        closed_pass: per_gamma.iter().all(|r| r.closed_pass),
        per_gamma,
    })
}

#[cfg(test)]
mod tests {
    use num_traits::One;

    use super::*;
    use crate::characters::weight_multiset;
    use crate::weights::enumerate_dominant_in_interval;

    fn w(entries: &[i64]) -> DominantWeight {
        DominantWeight::new(entries.to_vec()).unwrap()
    }

    fn term(mu: &[i64], lambda: &[i64]) -> GradedTerm {
        GradedTerm {
            mu: w(mu),
            lambda: w(lambda),
            multiplicity: BigInt::one(),
        }
    }

    #[test]
    fn eta_examples() {
        assert_eq!(eta(GammaSpec::new(3, 1).unwrap()), 3);
        assert_eq!(eta(GammaSpec::new(3, 3).unwrap()), 9);
        assert_eq!(eta(GammaSpec::new(1, 1).unwrap()), 1);
        assert!(GammaSpec::new(2, 0).is_err());
        assert!(GammaSpec::new(2, 3).is_err());
    }

    #[test]
    fn range_examples() {
        let k = 3;
        let zero = DominantWeight::zero(k);
        for i in 1..=k {
            let g = GammaSpec::new(k, i).unwrap();
            let vector = w(&[1, 0, 0]);
            let r = gamma_weight_range(g, &zero, &vector).unwrap();
            // at i = k the subgroup rescales every coordinate at once
            let expected_min = if i == k { 1 } else { 0 };
            assert_eq!((r.min, r.max), (expected_min, 1));

            let det_power = w(&[k as i64, k as i64, k as i64]);
            let r = gamma_weight_range(g, &zero, &det_power).unwrap();
            assert_eq!((r.min, r.max), ((i * k) as i64, (i * k) as i64));
        }
    }

    #[test]
    fn range_matches_weight_multiset_brute_force() {
        for k in 1..=3usize {
            let zero = DominantWeight::zero(k);
            for lambda in enumerate_dominant_in_interval(k, 0, 5).unwrap() {
                let weights = weight_multiset(&lambda, k).unwrap();
                for i in 1..=k {
                    let g = GammaSpec::new(k, i).unwrap();
                    let combinatorial = gamma_weight_range(g, &zero, &lambda).unwrap();
                    let gamma_weights: Vec<i64> = weights
                        .keys()
                        .map(|e| e[k - i..].iter().sum::<i64>())
                        .collect();
                    let min = *gamma_weights.iter().min().unwrap();
                    let max = *gamma_weights.iter().max().unwrap();
                    assert_eq!((combinatorial.min, combinatorial.max), (min, max));
                }
            }
        }
    }

    #[test]
    fn box_bounded_weights_stay_in_range() {
        for k in 1..=4usize {
            let zero = DominantWeight::zero(k);
            for lambda in enumerate_dominant_in_interval(k, 0, k as i64 + 1).unwrap() {
                for i in 1..=k {
                    let g = GammaSpec::new(k, i).unwrap();
                    let r = gamma_weight_range(g, &zero, &lambda).unwrap();
                    assert!(r.min >= 0 && r.max <= (i * k) as i64, "{lambda:?} i={i}");
                }
            }
        }
    }

    #[test]
    fn window_generators_pass() {
        for k in 1..=4usize {
            let gens = enumerate_dominant_in_interval(k, 0, k as i64).unwrap();
            let terms: Vec<GradedTerm> = gens
                .iter()
                .map(|g| GradedTerm {
                    mu: DominantWeight::zero(k),
                    lambda: g.clone(),
                    multiplicity: BigInt::one(),
                })
                .collect();
            let report = grade_restriction_check(&terms, k, &vec![0; k]).unwrap();
            assert!(report.window_pass, "k={k}");
            assert!(report.closed_pass, "k={k}");
        }
    }

    #[test]
    fn full_row_fails_half_open_but_passes_closed() {
        let k = 3;
        let mut lam = vec![0i64; k];
        lam[0] = k as i64;
        let terms = vec![term(&[0, 0, 0], &lam)];
        let report = grade_restriction_check(&terms, k, &[0, 0, 0]).unwrap();
        let first = &report.per_gamma[0];
        assert_eq!(first.i, 1);
        assert!(!first.window_pass);
        assert!(first.closed_pass);
        assert!(!report.window_pass);
        assert!(report.closed_pass);
    }

    #[test]
    fn empty_terms_pass_vacuously() {
        let report = grade_restriction_check(&[], 2, &[0, 0]).unwrap();
        assert!(report.window_pass && report.closed_pass);
        assert!(report.per_gamma.iter().all(|g| g.range.is_none()));
    }

    #[test]
    fn resolution_output_fits_the_closed_windows() {
        // the resolution engine produces primed weights in the [0, k] box,
        // so its terms must pass the closed check at kappa = 0; the strict
        // half-open check is allowed to fail exactly when some weight
        // reaches the box boundary
        for k in 1..=3usize {
            for i in 0..=k {
                let terms = crate::lascoux::resolution_terms(k, i).unwrap();
                let graded: Vec<GradedTerm> = terms
                    .iter()
                    .flat_map(|t| t.contributions.iter())
                    .map(|c| GradedTerm {
                        mu: c.weights["V"].dual(),
                        lambda: c.weights["V'"].clone(),
                        multiplicity: c.multiplicity.clone(),
                    })
                    .collect();
                let report = grade_restriction_check(&graded, k, &vec![0; k]).unwrap();
                assert!(report.closed_pass, "k={k} i={i}");
                let boundary =
                    crate::lascoux::boundary_contributions(&terms, "V'", k as i64);
                assert_eq!(
                    report.window_pass,
                    boundary.is_empty(),
                    "k={k} i={i}: strict check fails exactly on boundary terms"
                );
            }
        }
    }
}
