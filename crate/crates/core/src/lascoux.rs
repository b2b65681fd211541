//! A combinatorial engine for equivariant resolutions of pushforwards from
//! sub-bundle geometries over a Grassmannian base: expand exterior powers of
//! the conormal slots, contract everything living on the same space, take
//! fiberwise cohomology, and collect the surviving summands by homological
//! index.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::bwb::{bwb, BwbResult, GrWeight};
use crate::error::{Error, Result};
use crate::tensorcalc::{exterior_power_sum, lr_coefficients, SlotLabel, SlotSpace};
use crate::weights::DominantWeight;

type ContributionKey = (i64, BTreeMap<String, DominantWeight>);

/// The input datum: a Grassmannian base (sub of rank `sub_rank` inside
/// `ambient_rank`), a single Schur-bundle summand on the fiber and
/// coefficient spaces, and the list of Hom-type conormal slots whose
/// exterior algebra drives the resolution.
#[derive(Clone, Debug)]
pub struct LascouxSetup {
    pub sub_rank: usize,
    pub ambient_rank: usize,
    /// Output label for the GL(ambient) content produced by cohomology.
    pub ambient_label: String,
    /// Named coefficient spaces with their ranks.
    pub coeff_ranks: BTreeMap<String, usize>,
    /// Weight of the bundle on the tautological subbundle.
    pub bundle_sub: DominantWeight,
    /// Weight of the bundle on the tautological quotient.
    pub bundle_quot: DominantWeight,
    /// Weights of the bundle on coefficient spaces; absent spaces are
    /// treated as carrying the zero weight.
    pub bundle_coeff: BTreeMap<String, DominantWeight>,
    pub cotangent_slots: Vec<(SlotSpace, SlotSpace)>,
}

impl LascouxSetup {
    fn quot_rank(&self) -> usize {
        self.ambient_rank - self.sub_rank
    }

    fn validate(&self) -> Result<()> {
        if self.sub_rank > self.ambient_rank {
            return Err(Error::RankOrder(format!(
                "sub rank {} exceeds ambient rank {}",
                self.sub_rank, self.ambient_rank
            )));
        }
        self.bundle_sub.check_rank(self.sub_rank)?;
        self.bundle_quot.check_rank(self.quot_rank())?;
        for (name, w) in &self.bundle_coeff {
            let rank = self.coeff_ranks.get(name).ok_or_else(|| {
                Error::InconsistentRanks(format!("bundle weight on undeclared space {name}"))
            })?;
            w.check_rank(*rank)?;
        }
        for (left, right) in &self.cotangent_slots {
            for slot in [left, right] {
                let expected = match &slot.label {
                    SlotLabel::Sub => Some(self.sub_rank),
                    SlotLabel::Quot => Some(self.quot_rank()),
                    SlotLabel::Space(name) => Some(*self.coeff_ranks.get(name).ok_or_else(
                        || Error::InconsistentRanks(format!("undeclared slot space {name}")),
                    )?),
                    SlotLabel::One => Some(1),
                };
                if let Some(expected) = expected {
                    if slot.rank != expected {
                        return Err(Error::InconsistentRanks(format!(
                            "slot {:?} has rank {}, expected {expected}",
                            slot.label, slot.rank
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// One surviving summand: its Schur data per output space, internal degree,
/// and multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Contribution {
    pub internal_degree: i64,
    pub weights: BTreeMap<String, DominantWeight>,
    pub multiplicity: BigInt,
}

/// All contributions at one homological index `-n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LascouxTerm {
    pub homological_index: i64,
    pub contributions: Vec<Contribution>,
}

/// Runs the engine: for every exterior-power degree of the conormal slots,
/// contract the slot data with the bundle on each space, evaluate fiberwise
/// cohomology on the base, and file each surviving summand under
/// `-(boxes - cohomological degree)`.
pub fn lascoux_terms(setup: &LascouxSetup) -> Result<Vec<LascouxTerm>> {
    setup.validate()?;
    let quot_rank = setup.quot_rank();
    let max_r: u64 = setup
        .cotangent_slots
        .iter()
        .map(|(l, r)| (l.rank * r.rank) as u64)
        .sum();

    let mut collected: BTreeMap<i64, BTreeMap<ContributionKey, BigInt>> = BTreeMap::new();

    for r in 0..=max_r {
        for slot_term in exterior_power_sum(r, &setup.cotangent_slots) {
            // gather the factors living on each space
            let mut sub_factors = vec![setup.bundle_sub.clone()];
            let mut quot_factors = vec![setup.bundle_quot.clone()];
            let mut coeff_factors: BTreeMap<String, Vec<DominantWeight>> = setup
                .coeff_ranks
                .iter()
                .map(|(name, &rank)| {
                    let base = setup
                        .bundle_coeff
                        .get(name)
                        .cloned()
                        .unwrap_or_else(|| DominantWeight::zero(rank));
                    (name.clone(), vec![base])
                })
                .collect();
            for (pair_idx, (alpha, alpha_conj)) in slot_term.factors.iter().enumerate() {
                let (left, right) = &setup.cotangent_slots[pair_idx];
                for (slot, part) in [(left, alpha), (right, alpha_conj)] {
                    let mut weight = match &slot.label {
                        SlotLabel::One => continue,
                        _ => part.to_weight(slot.rank)?,
                    };
                    if slot.dual {
                        weight = weight.dual();
                    }
                    match &slot.label {
                        SlotLabel::Sub => sub_factors.push(weight),
                        SlotLabel::Quot => quot_factors.push(weight),
                        SlotLabel::Space(name) => {
                            coeff_factors.get_mut(name).expect("validated").push(weight)
                        }
                        SlotLabel::One => unreachable!(),
                    }
                }
            }

            // contract per space
            let sub_dec = lr_fold(&sub_factors, setup.sub_rank)?;
            let quot_dec = lr_fold(&quot_factors, quot_rank)?;
            let mut coeff_decs: Vec<(String, Vec<(DominantWeight, BigInt)>)> = Vec::new();
            for (name, factors) in coeff_factors {
                let rank = setup.coeff_ranks[&name];
                coeff_decs.push((name, lr_fold(&factors, rank)?));
            }

            // cartesian product over the per-space decompositions
            for (quot_w, quot_m) in &quot_dec {
                for (sub_w, sub_m) in &sub_dec {
                    let gw = GrWeight::new(
                        setup.sub_rank,
                        setup.ambient_rank,
                        quot_w.clone(),
                        sub_w.clone(),
                    )?;
                    let (degree, ambient_w) = match bwb(&gw) {
                        BwbResult::Zero => continue,
                        BwbResult::Cohomology { degree, weight } => (degree, weight),
                    };
                    let index = -((r as i64) - degree as i64);
                    let fiber_mult = quot_m * sub_m;
                    let mut stack: Vec<(BTreeMap<String, DominantWeight>, BigInt)> = vec![(
                        BTreeMap::from([(setup.ambient_label.clone(), ambient_w)]),
                        fiber_mult,
                    )];
                    for (name, dec) in &coeff_decs {
                        let mut next = Vec::new();
                        for (weights, mult) in &stack {
                            for (w, m) in dec {
                                let mut weights = weights.clone();
                                weights.insert(name.clone(), w.clone());
                                next.push((weights, mult * m));
                            }
                        }
                        stack = next;
                    }
                    for (weights, mult) in stack {
                        let slot = collected
                            .entry(index)
                            .or_default()
                            .entry((slot_term.internal_degree, weights))
                            .or_insert_with(BigInt::zero);
                        *slot += mult;
                    }
                }
            }
        }
    }

    let mut out = Vec::new();
    for (index, contribs) in collected.into_iter().rev() {
        let contributions: Vec<Contribution> = contribs
            .into_iter()
            .filter(|(_, m)| !m.is_zero())
            .map(|((internal_degree, weights), multiplicity)| Contribution {
                internal_degree,
                weights,
                multiplicity,
            })
            .collect();
        if !contributions.is_empty() {
            out.push(LascouxTerm {
                homological_index: index,
                contributions,
            });
        }
    }
    Ok(out)
}

/// Iterated Littlewood-Richardson contraction of a list of weights on one
/// space, as (weight, multiplicity) pairs.
fn lr_fold(factors: &[DominantWeight], rank: usize) -> Result<Vec<(DominantWeight, BigInt)>> {
    let mut acc: Vec<(DominantWeight, BigInt)> = vec![(
        factors
            .first()
            .cloned()
            .unwrap_or_else(|| DominantWeight::zero(rank)),
        BigInt::from(1),
    )];
    for f in &factors[1.min(factors.len())..] {
        let mut next: BTreeMap<DominantWeight, BigInt> = BTreeMap::new();
        for (w, m) in &acc {
            let product = lr_coefficients(w, f, rank)?;
            for (nu, mult) in product.iter() {
                let slot = next.entry(nu.clone()).or_insert_with(BigInt::zero);
                *slot += m * mult.evaluate_at_one();
            }
        }
        acc = next.into_iter().collect();
    }
    Ok(acc)
}

/// The terms of the resolution of the rank-stratum pushforward over the
/// quasi-symmetric model: Koszul data on Hom(V', Sub) together with the
/// conormal slots of the sub-flag geometry, over the base of
/// `(k-i)`-dimensional subspaces of the rank-k space. Every weight produced
/// on the primed space lies in the `[0, k]` box.
pub fn resolution_terms(k: usize, i: usize) -> Result<Vec<LascouxTerm>> {
    if i > k {
        return Err(Error::Precondition(format!("need i <= k, got i={i} k={k}")));
    }
    let sub_rank = k - i;
    let setup = LascouxSetup {
        sub_rank,
        ambient_rank: k,
        ambient_label: "V".to_string(),
        coeff_ranks: BTreeMap::from([("V'".to_string(), k)]),
        bundle_sub: DominantWeight::zero(sub_rank),
        bundle_quot: DominantWeight::zero(i),
        bundle_coeff: BTreeMap::new(),
        cotangent_slots: vec![
            (
                SlotSpace::new(SlotLabel::Space("V'".into()), false, k, -2),
                SlotSpace::new(SlotLabel::Sub, true, sub_rank, 0),
            ),
            (
                SlotSpace::new(SlotLabel::Space("V'".into()), false, k, -2),
                SlotSpace::new(SlotLabel::Quot, true, i, 0),
            ),
            (
                SlotSpace::new(SlotLabel::Sub, false, sub_rank, -2),
                SlotSpace::new(SlotLabel::Quot, true, i, 0),
            ),
        ],
    };
    lascoux_terms(&setup)
}

/// The graded terms of the resolution produced by pushing a twisted Schur
/// bundle down from the sub-space geometry over the rank-k Grassmannian of
/// the ambient N-space: the bundle is S^mu on the dual tautological sub
/// tensored with S^lambda on the primed coefficient space. After
/// contraction, every weight on the primed space lies in `[0, N)`.
pub fn pushforward_terms(
    k: usize,
    ambient: usize,
    mu: &DominantWeight,
    lambda: &DominantWeight,
) -> Result<Vec<LascouxTerm>> {
    if 2 * k > ambient {
        return Err(Error::Precondition(format!(
            "need 2k <= N, got k={k} N={ambient}"
        )));
    }
    mu.check_rank(k)?;
    lambda.check_rank(k)?;
    if lambda
        .entries()
        .iter()
        .any(|&e| e < 0 || e >= k as i64)
    {
        return Err(Error::Precondition(format!(
            "coefficient weight {lambda:?} must have entries in [0, {k})"
        )));
    }
    let setup = LascouxSetup {
        sub_rank: k,
        ambient_rank: ambient,
        ambient_label: "V".to_string(),
        coeff_ranks: BTreeMap::from([("V'".to_string(), k)]),
        bundle_sub: mu.dual(),
        bundle_quot: DominantWeight::zero(ambient - k),
        bundle_coeff: BTreeMap::from([("V'".to_string(), lambda.clone())]),
        cotangent_slots: vec![(
            SlotSpace::new(SlotLabel::Space("V'".into()), false, k, -2),
            SlotSpace::new(SlotLabel::Quot, true, ambient - k, 0),
        )],
    };
    lascoux_terms(&setup)
}

/// Contributions whose weight on `space` reaches `bound` in some entry:
/// the summands a strict window `[0, bound)` does not generate, reported so
/// a caller can resolve them further.
pub fn boundary_contributions(
    terms: &[LascouxTerm],
    space: &str,
    bound: i64,
) -> Vec<(i64, Contribution)> {
    let mut out = Vec::new();
    for term in terms {
        for c in &term.contributions {
            if let Some(w) = c.weights.get(space) {
                if w.entries().iter().any(|&e| e >= bound) {
                    out.push((term.homological_index, c.clone()));
                }
            }
        }
    }
    out
}
