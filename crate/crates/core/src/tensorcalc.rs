//! Littlewood-Richardson products by the tableau rule, Cauchy-type exterior
//! power decompositions of Hom slots, and the wedge powers of gl(k).
//!
//! The tableau rule here is deliberately independent of the character-ring
//! oracle in [`crate::characters`]; their agreement is asserted in tests.

use std::collections::BTreeMap;

use crate::characters::Decomposition;
use crate::error::{Error, Result};
use crate::weights::{conjugate, enumerate_in_box, DominantWeight, Partition};

/// One formal tensor factor of a Hom-type slot: a named space or one of the
/// two tautological bundles of a Grassmannian base, possibly dualized, with
/// an internal-degree weight contributed per box of its Schur data.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SlotSpace {
    pub label: SlotLabel,
    pub dual: bool,
    pub rank: usize,
    pub degree_weight: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SlotLabel {
    /// Tautological subbundle of the base Grassmannian.
    Sub,
    /// Tautological quotient bundle of the base Grassmannian.
    Quot,
    /// A named coefficient space carried through unchanged.
    Space(String),
    /// A rank-one trivial factor; Schur data on it is dropped.
    One,
}

impl SlotSpace {
    pub fn new(label: SlotLabel, dual: bool, rank: usize, degree_weight: i64) -> Self {
        SlotSpace {
            label,
            dual,
            rank,
            degree_weight,
        }
    }

    pub fn space(name: &str, rank: usize) -> Self {
        SlotSpace::new(SlotLabel::Space(name.to_string()), false, rank, 0)
    }
}

/// One summand of an expanded exterior power: per slot pair the Cauchy datum
/// `(alpha, alpha')`, plus the internal degree accumulated from the slots'
/// per-box weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlotTerm {
    pub factors: Vec<(Partition, Partition)>,
    pub internal_degree: i64,
}

/// Decomposes the tensor product of the irreducibles of highest weights
/// `lambda` and `mu` by the Littlewood-Richardson tableau rule, after
/// shifting both factors into partition range by determinant twists.
pub fn lr_coefficients(
    lambda: &DominantWeight,
    mu: &DominantWeight,
    k: usize,
) -> Result<Decomposition> {
    lambda.check_rank(k)?;
    mu.check_rank(k)?;
    let shift_l = lambda.entries().iter().min().copied().unwrap_or(0).min(0);
    let shift_m = mu.entries().iter().min().copied().unwrap_or(0).min(0);
    let lam: Vec<u64> = lambda
        .shifted(-shift_l)
        .entries()
        .iter()
        .map(|&e| e as u64)
        .collect();
    let mu_parts: Vec<u64> = mu
        .shifted(-shift_m)
        .entries()
        .iter()
        .map(|&e| e as u64)
        .collect();
    let mut out = Decomposition::new();
    for (shape, count) in lr_fillings(&lam, &mu_parts, k) {
        let entries: Vec<i64> = shape.iter().map(|&p| p as i64 + shift_l + shift_m).collect();
        out.insert_constant(DominantWeight::new(entries)?, count as i64);
    }
    Ok(out)
}

/// Counts Littlewood-Richardson skew fillings: all ways of growing `lam` by
/// horizontal strips of sizes `mu[0], mu[1], ...` within `k` rows whose
/// reverse reading word is a ballot sequence. Returns shape -> multiplicity.
fn lr_fillings(lam: &[u64], mu: &[u64], k: usize) -> BTreeMap<Vec<u64>, u64> {
    let letters: Vec<u64> = mu.iter().copied().take_while(|&m| m > 0).collect();
    let mut search = LrSearch {
        letters: &letters,
        k,
        // shapes[t] is the shape after placing letters 1..=t
        shapes: vec![lam.to_vec()],
        result: BTreeMap::new(),
    };
    search.place_letter(0);
    search.result
}

struct LrSearch<'a> {
    letters: &'a [u64],
    k: usize,
    shapes: Vec<Vec<u64>>,
    result: BTreeMap<Vec<u64>, u64>,
}

impl LrSearch<'_> {
    fn place_letter(&mut self, t: usize) {
        if t == self.letters.len() {
            if ballot_word_ok(&self.shapes) {
                let shape = self.shapes.last().unwrap().clone();
                *self.result.entry(shape).or_insert(0) += 1;
            }
            return;
        }
        let before = self.shapes.last().unwrap().clone();
        let mut next = before.clone();
        self.place_rows(t, 0, self.letters[t], &before, &mut next);
    }

    // choose, row by row, how many boxes of letter t+1 go into each row
    fn place_rows(&mut self, t: usize, row: usize, remaining: u64, before: &[u64], next: &mut Vec<u64>) {
        if row == self.k {
            if remaining == 0 {
                self.shapes.push(next.clone());
                self.place_letter(t + 1);
                self.shapes.pop();
            }
            return;
        }
        // letter t+1 (1-based value) never sits above row t+1
        let max_add = if row < t {
            0
        } else {
            let row_cap = if row == 0 {
                u64::MAX
            } else {
                // horizontal strip: stay weakly under the previous shape's
                // row above; the new shape stays a partition automatically
                before[row - 1].min(next[row - 1])
            };
            row_cap.saturating_sub(before[row]).min(remaining)
        };
        for add in 0..=max_add {
            next[row] = before[row] + add;
            self.place_rows(t, row + 1, remaining - add, before, next);
        }
        next[row] = before[row];
    }
}

/// Checks the ballot condition on the reverse reading word of the filling
/// described by the shape sequence.
#[allow(clippy::needless_range_loop)]
fn ballot_word_ok(shapes: &[Vec<u64>]) -> bool {
    let num_letters = shapes.len() - 1;
    let k = shapes[0].len();
    let mut counts = vec![0i64; num_letters];
    for row in 0..k {
        // row entries right to left: letters in decreasing column position
        for t in (0..num_letters).rev() {
            let added = shapes[t + 1][row] - shapes[t][row];
            for _ in 0..added {
                if t > 0 && counts[t] + 1 > counts[t - 1] {
                    return false;
                }
                counts[t] += 1;
            }
        }
    }
    true
}

/// The Cauchy decomposition of the r-th exterior power of a Hom space:
/// all pairs `(alpha, alpha')` with `|alpha| = r` and `alpha` inside the
/// `rank_a x rank_b` box.
pub fn exterior_power_hom(r: u64, rank_a: usize, rank_b: usize) -> Vec<(Partition, Partition)> {
    enumerate_in_box(rank_a, rank_b as u64)
        .into_iter()
        .filter(|p| p.size() == r)
        .map(|p| {
            let conj = conjugate(&p);
            (p, conj)
        })
        .collect()
}

/// Expands the r-th exterior power of a direct sum of Hom-type slots:
/// distributes `r` over the summands and applies the Cauchy decomposition to
/// each. Every returned term has total box count `r`.
pub fn exterior_power_sum(r: u64, slots: &[(SlotSpace, SlotSpace)]) -> Vec<SlotTerm> {
    let mut out = Vec::new();
    let mut factors: Vec<(Partition, Partition)> = Vec::new();
    fn rec(
        r: u64,
        slots: &[(SlotSpace, SlotSpace)],
        idx: usize,
        factors: &mut Vec<(Partition, Partition)>,
        degree: i64,
        out: &mut Vec<SlotTerm>,
    ) {
        if idx == slots.len() {
            if r == 0 {
                out.push(SlotTerm {
                    factors: factors.clone(),
                    internal_degree: degree,
                });
            }
            return;
        }
        let (left, right) = &slots[idx];
        let cap = (left.rank * right.rank) as u64;
        for p in 0..=cap.min(r) {
            for (alpha, alpha_conj) in exterior_power_hom(p, left.rank, right.rank) {
                factors.push((alpha, alpha_conj));
                let per_box = left.degree_weight + right.degree_weight;
                rec(
                    r - p,
                    slots,
                    idx + 1,
                    factors,
                    degree + per_box * p as i64,
                    out,
                );
                factors.pop();
            }
        }
    }
    rec(r, slots, 0, &mut factors, 0, &mut out);
    out
}

/// Decomposes the r-th exterior power of gl(k) into irreducibles, via the
/// Cauchy formula followed by Littlewood-Richardson contraction.
pub fn decompose_wedge_gl(r: u64, k: usize) -> Result<Decomposition> {
    let max = (k * k) as u64;
    if r > max {
        return Err(Error::DegreeOutOfRange {
            degree: r as usize,
            max: max as usize,
        });
    }
    let mut out = Decomposition::new();
    for (alpha, alpha_conj) in exterior_power_hom(r, k, k) {
        let dual = alpha.to_weight(k)?.dual();
        let straight = alpha_conj.to_weight(k)?;
        let product = lr_coefficients(&dual, &straight, k)?;
        for (w, mult) in product.iter() {
            out.add_graded(w.clone(), mult);
        }
    }
    Ok(out)
}
