//! The graded term catalog of the rank-filtered kernel complex, Grassmannian
//! Betti copies, and the first-column cancellation involution.
//!
//! Internal degrees here follow the merged normalization in which the
//! cohomological shift [-i] and the internal shift <-i^2> are carried as a
//! single integer; the split bookkeeping (which keeps them separate and
//! produces <-i^2 - 1> for the surviving copy) is reported alongside and not
//! adjudicated.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::qpoly::{gaussian_binomial, QPolynomial};
use crate::weights::{enumerate_in_box, Partition};

/// One term of the graded catalog: index `i` runs from k down to 0, the term
/// carries internal shift `-i^2 - i` and is supported on the stratum of
/// corank at least `i` (rank at most `k - i`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RickardTerm {
    pub i: usize,
    pub internal_shift: i64,
    pub support_rank_bound: usize,
}

/// One copy in the restriction of a catalog term, indexed by a partition
/// inside the `(i-l) x l` box.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BettiCopy {
    pub l: usize,
    pub lambda: Partition,
    pub boxes: u64,
    pub total_degree: i64,
}

/// The cancellation structure on all copies at a fixed `i`: a
/// degree-preserving pairing plus the unique surviving copy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pub pairs: Vec<(BettiCopy, BettiCopy)>,
    pub leftover: BettiCopy,
    /// The surviving copy's degree in the split bookkeeping that keeps the
    /// cohomological shift separate: `-i^2 - 1`.
    pub leftover_split_degree: i64,
}

/// The number of partitions with at most `i - l` rows, at most `l` columns
/// and exactly `r` boxes, counted directly.
pub fn betti(i: usize, l: usize, r: u64) -> u64 {
    assert!(l <= i, "betti requires l <= i");
    enumerate_in_box(i - l, l as u64)
        .into_iter()
        .filter(|p| p.size() == r)
        .count() as u64
}

/// The Poincare polynomial of the Grassmannian of `m`-planes in `n`-space,
/// centered so that `P(q) = P(1/q)`: the Gaussian binomial in `q^2` shifted
/// to be symmetric about degree zero.
pub fn poincare_centered(m: usize, n: usize) -> Result<QPolynomial> {
    if m > n {
        return Err(Error::RankOrder(format!("need m <= n, got m={m} n={n}")));
    }
    let g = gaussian_binomial(n as u64, m as u64);
    let center = (m * (n - m)) as i64;
    Ok(g.stretched(2).shifted(-center))
}

/// The catalog terms for rank `k`, listed from `i = k` down to `i = 0`.
pub fn term_catalog(k: usize) -> Vec<RickardTerm> {
    (0..=k)
        .rev()
        .map(|i| RickardTerm {
            i,
            internal_shift: -((i * i + i) as i64),
            support_rank_bound: k - i,
        })
        .collect()
}

fn copy_degree(i: usize, l: usize, r: u64) -> i64 {
    let (i, l, r) = (i as i64, l as i64, r as i64);
    -l * l - l - 2 * i * (i - l) - 2 * r
}

/// All copies contributed at level `l < i`: one per partition in the
/// `(i-l) x l` box, with the catalog degree.
pub fn copies_of_term(i: usize, l: usize) -> Result<Vec<BettiCopy>> {
    if l >= i {
        return Err(Error::RankOrder(format!("need l < i, got l={l} i={i}")));
    }
    Ok(enumerate_in_box(i - l, l as u64)
        .into_iter()
        .map(|lambda| {
            let boxes = lambda.size();
            BettiCopy {
                l,
                boxes,
                total_degree: copy_degree(i, l, boxes),
                lambda,
            }
        })
        .collect())
}

/// The partner of a copy under the first-column involution, or `None` for
/// the unique leftover `(l = i-1, empty)`. A copy whose diagram has a full
/// first column pairs one level down by deleting that column; otherwise it
/// pairs one level up by prepending a full column.
fn partner(i: usize, copy: &BettiCopy) -> Option<BettiCopy> {
    let rows = i - copy.l;
    if copy.lambda.num_parts() == rows {
        // full first column: delete it and descend to level l - 1
        debug_assert!(copy.l >= 1, "a column of height i at l = 0 cannot occur");
        let l = copy.l - 1;
        let parts: Vec<u64> = copy
            .lambda
            .parts()
            .iter()
            .map(|&p| p - 1)
            .take_while(|&p| p > 0)
            .collect();
        let lambda = Partition::new(parts).expect("deleting a column keeps a partition");
        let boxes = lambda.size();
        Some(BettiCopy {
            l,
            boxes,
            total_degree: copy_degree(i, l, boxes),
            lambda,
        })
    } else {
        // short first column: prepend a full column of height i - l - 1
        let l = copy.l + 1;
        if l >= i {
            return None;
        }
        let height = i - l;
        let mut parts: Vec<u64> = vec![1; height];
        for (row, &p) in copy.lambda.parts().iter().enumerate() {
            parts[row] += p;
        }
        let lambda = Partition::new(parts).expect("prepending a column keeps a partition");
        let boxes = lambda.size();
        Some(BettiCopy {
            l,
            boxes,
            total_degree: copy_degree(i, l, boxes),
            lambda,
        })
    }
}

/// Pairs every copy over `l = 0..i-1` with its first-column partner and
/// verifies the pairing is a degree-preserving involution with the single
/// leftover `(l = i-1, empty)`.
pub fn cancellation_matching(i: usize) -> Result<Matching> {
    assert!(i >= 1, "cancellation requires i >= 1");
    let mut all: BTreeMap<(usize, Partition), BettiCopy> = BTreeMap::new();
    for l in 0..i {
        for copy in copies_of_term(i, l)? {
            all.insert((copy.l, copy.lambda.clone()), copy);
        }
    }
    let mut pairs = Vec::new();
    let mut leftover: Option<BettiCopy> = None;
    let mut seen: BTreeMap<(usize, Partition), bool> = BTreeMap::new();
    for copy in all.values() {
        let key = (copy.l, copy.lambda.clone());
        if seen.contains_key(&key) {
            continue;
        }
        match partner(i, copy) {
            None => {
                if copy.l != i - 1 || !copy.lambda.parts().is_empty() {
                    return Err(Error::MatchingFailure(format!(
                        "unpaired copy {copy:?} is not the expected leftover"
                    )));
                }
                if leftover.is_some() {
                    return Err(Error::MatchingFailure("two leftover copies".into()));
                }
                seen.insert(key, true);
                leftover = Some(copy.clone());
            }
            Some(other) => {
                let other_key = (other.l, other.lambda.clone());
                let stored = all.get(&other_key).ok_or_else(|| {
                    Error::MatchingFailure(format!("partner {other:?} of {copy:?} missing"))
                })?;
                if stored != &other {
                    return Err(Error::MatchingFailure(format!(
                        "partner mismatch: {stored:?} vs {other:?}"
                    )));
                }
                if other.total_degree != copy.total_degree {
                    return Err(Error::MatchingFailure(format!(
                        "degrees differ: {copy:?} vs {other:?}"
                    )));
                }
                let back = partner(i, &other).ok_or_else(|| {
                    Error::MatchingFailure(format!("partner of {other:?} vanished"))
                })?;
                if &back != copy {
                    return Err(Error::MatchingFailure(format!(
                        "not an involution: {copy:?} -> {other:?} -> {back:?}"
                    )));
                }
                seen.insert(key, true);
                seen.insert(other_key, true);
                pairs.push((copy.clone(), other));
            }
        }
    }
    let leftover = leftover
        .ok_or_else(|| Error::MatchingFailure("no leftover copy found".into()))?;
    let expected = -((i * i + i) as i64);
    if leftover.total_degree != expected {
        return Err(Error::MatchingFailure(format!(
            "leftover degree {} differs from {expected}",
            leftover.total_degree
        )));
    }
    Ok(Matching {
        pairs,
        leftover,
        leftover_split_degree: -((i * i) as i64) - 1,
    })
}

/// Which of the two composition families to expand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompositionKind {
    E,
    F,
}

/// The graded multiplicity space appearing when two raising (resp. lowering)
/// kernels compose through an intermediate rank: the centered Poincare
/// polynomial of the relevant Grassmannian.
pub fn sl2_composition(
    kind: CompositionKind,
    l: usize,
    m: usize,
    n: usize,
) -> Result<QPolynomial> {
    if l > m || m > n {
        return Err(Error::RankOrder(format!(
            "need l <= m <= n, got l={l} m={m} n={n}"
        )));
    }
    match kind {
        CompositionKind::E => poincare_centered(n - m, n - l),
        CompositionKind::F => poincare_centered(m - l, n - l),
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;

    #[test]
    fn betti_examples() {
        // middle Betti number of Gr(2,4): two partitions of 2 in a 2x2 box
        assert_eq!(betti(4, 2, 2), 2);
        for i in 0..=6usize {
            for l in 0..=i {
                assert_eq!(betti(i, l, 0), 1);
                assert_eq!(betti(i, l, (l * (i - l)) as u64 + 1), 0);
            }
        }
    }

    #[test]
    fn betti_matches_gaussian_binomial() {
        for i in 0..=10usize {
            for l in 0..=i {
                let g = gaussian_binomial(i as u64, l as u64);
                let mut total = 0u64;
                for r in 0..=((l * (i - l)) as u64 + 2) {
                    let b = betti(i, l, r);
                    assert_eq!(BigInt::from(b), g.coefficient(r as i64), "i={i} l={l} r={r}");
                    total += b;
                }
                assert_eq!(BigInt::from(total), g.evaluate_at_one());
            }
        }
    }

    #[test]
    fn poincare_examples() {
        let p = poincare_centered(2, 4).unwrap();
        let got: Vec<(i64, i64)> = p
            .terms()
            .map(|(&e, c)| (e, i64::try_from(c).unwrap()))
            .collect();
        assert_eq!(got, vec![(-4, 1), (-2, 1), (0, 2), (2, 1), (4, 1)]);

        for n in 0..=6usize {
            assert_eq!(poincare_centered(0, n).unwrap(), QPolynomial::one());
        }

        let p = poincare_centered(1, 2).unwrap();
        let got: Vec<(i64, i64)> = p
            .terms()
            .map(|(&e, c)| (e, i64::try_from(c).unwrap()))
            .collect();
        assert_eq!(got, vec![(-1, 1), (1, 1)]);

        assert!(poincare_centered(3, 2).is_err());
    }

    #[test]
    fn poincare_is_centered_and_counts_cells() {
        fn binomial(n: usize, m: usize) -> i64 {
            let mut out = 1i64;
            for i in 0..m {
                out = out * (n - i) as i64 / (i + 1) as i64;
            }
            out
        }
        for n in 0..=8usize {
            for m in 0..=n {
                let p = poincare_centered(m, n).unwrap();
                assert_eq!(p, p.reciprocal(), "not centered at ({m},{n})");
                assert_eq!(p.evaluate_at_one(), BigInt::from(binomial(n, m)));
            }
        }
    }

    #[test]
    fn catalog_shifts() {
        let catalog = term_catalog(3);
        assert_eq!(catalog.len(), 4);
        assert_eq!(catalog[0].i, 3);
        assert_eq!(catalog[0].internal_shift, -12);
        assert_eq!(catalog[0].support_rank_bound, 0);
        assert_eq!(catalog.last().unwrap().i, 0);
        assert_eq!(catalog.last().unwrap().internal_shift, 0);
        assert_eq!(catalog.last().unwrap().support_rank_bound, 3);
        let i1 = catalog.iter().find(|t| t.i == 1).unwrap();
        assert_eq!(i1.internal_shift, -2);
    }

    #[test]
    fn copies_examples() {
        let copies = copies_of_term(2, 1).unwrap();
        assert_eq!(copies.len(), 2);
        assert_eq!(copies[0].lambda, Partition::empty());
        assert_eq!(copies[0].total_degree, -6);
        assert_eq!(copies[1].lambda, Partition::new(vec![1]).unwrap());
        assert_eq!(copies[1].total_degree, -8);

        let copies = copies_of_term(2, 0).unwrap();
        assert_eq!(copies.len(), 1);
        assert_eq!(copies[0].total_degree, -8);

        assert!(copies_of_term(2, 2).is_err());

        // copy count over r equals the binomial coefficient C(i, l)
        fn binomial(n: usize, m: usize) -> usize {
            let mut out = 1usize;
            for i in 0..m {
                out = out * (n - i) / (i + 1);
            }
            out
        }
        for i in 1..=8usize {
            for l in 0..i {
                assert_eq!(copies_of_term(i, l).unwrap().len(), binomial(i, l));
            }
        }
    }

    #[test]
    fn matching_small_cases() {
        let m = cancellation_matching(1).unwrap();
        assert!(m.pairs.is_empty());
        assert_eq!(m.leftover.l, 0);
        assert_eq!(m.leftover.lambda, Partition::empty());
        assert_eq!(m.leftover.total_degree, -2);

        let m = cancellation_matching(2).unwrap();
        assert_eq!(m.pairs.len(), 1);
        let (a, b) = &m.pairs[0];
        assert_eq!((a.l, b.l), (0, 1));
        assert_eq!(a.total_degree, -8);
        assert_eq!(b.total_degree, -8);
        assert_eq!(b.lambda, Partition::new(vec![1]).unwrap());
        assert_eq!(m.leftover.l, 1);
        assert_eq!(m.leftover.total_degree, -6);
        assert_eq!(m.leftover_split_degree, -5);
    }

    #[test]
    fn matching_is_perfect_up_to_eight() {
        for i in 1..=8usize {
            let m = cancellation_matching(i).unwrap();
            let total: usize = (0..i).map(|l| copies_of_term(i, l).unwrap().len()).sum();
            assert_eq!(2 * m.pairs.len() + 1, total, "i={i}");
            assert_eq!(m.leftover.l, i - 1);
            assert_eq!(m.leftover.lambda, Partition::empty());
            assert_eq!(m.leftover.total_degree, -((i * i + i) as i64));
            for (a, b) in &m.pairs {
                assert_eq!(a.total_degree, b.total_degree);
                assert_eq!(b.l, a.l + 1);
            }
        }
    }

    #[test]
    fn three_way_degree_identity() {
        for i in 1..=9usize {
            for l in 1..i {
                for r in 0..=(l * (i - l)) as i64 {
                    let (ii, ll) = (i as i64, l as i64);
                    let base = -ll * ll - ll - 2 * ii * (ii - ll) - 2 * r;
                    let down = {
                        let l2 = ll - 1;
                        let r2 = r - ii + ll;
                        -l2 * l2 - l2 - 2 * ii * (ii - l2) - 2 * r2
                    };
                    let up = {
                        let l2 = ll + 1;
                        let r2 = r + ii - ll - 1;
                        -l2 * l2 - l2 - 2 * ii * (ii - l2) - 2 * r2
                    };
                    assert_eq!(base, down);
                    assert_eq!(base, up);
                }
            }
        }
    }

    #[test]
    fn composition_examples() {
        let e = sl2_composition(CompositionKind::E, 0, 2, 4).unwrap();
        assert_eq!(e, poincare_centered(2, 4).unwrap());
        // m = n collapses the E-side multiplicity space to a point
        assert_eq!(
            sl2_composition(CompositionKind::E, 1, 3, 3).unwrap(),
            QPolynomial::one()
        );
        // F with (m-l, n-l) = (1, n-l)
        let f = sl2_composition(CompositionKind::F, 1, 2, 5).unwrap();
        assert_eq!(f, poincare_centered(1, 4).unwrap());
        assert!(sl2_composition(CompositionKind::F, 3, 2, 5).is_err());
    }
}
