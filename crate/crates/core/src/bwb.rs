//! Borel-Weil-Bott on Grassmannians: cohomology of Schur bundles built from
//! the tautological sub and quotient bundles, via the rho-shifted sort, with
//! a character-ring Euler characteristic as independent cross-check.

use crate::characters::{
    antisymmetrize, decompose_into_schur, divide_by_var_difference, Decomposition,
};
use crate::error::Result;
use crate::weights::DominantWeight;

/// An equivariant Schur bundle on the Grassmannian of `sub_rank`-dimensional
/// subspaces of a `ambient_rank`-dimensional space: a dominant weight on the
/// quotient bundle and one on the subbundle. Quotient weights are listed
/// before sub weights throughout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrWeight {
    sub_rank: usize,
    ambient_rank: usize,
    quotient: DominantWeight,
    sub: DominantWeight,
}

impl GrWeight {
    pub fn new(
        sub_rank: usize,
        ambient_rank: usize,
        quotient: DominantWeight,
        sub: DominantWeight,
    ) -> Result<Self> {
        if sub_rank > ambient_rank {
            return Err(crate::error::Error::RankOrder(format!(
                "sub rank {sub_rank} exceeds ambient rank {ambient_rank}"
            )));
        }
        quotient.check_rank(ambient_rank - sub_rank)?;
        sub.check_rank(sub_rank)?;
        Ok(GrWeight {
            sub_rank,
            ambient_rank,
            quotient,
            sub,
        })
    }

    pub fn sub_rank(&self) -> usize {
        self.sub_rank
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn quotient(&self) -> &DominantWeight {
        &self.quotient
    }

    pub fn sub(&self) -> &DominantWeight {
        &self.sub
    }

    /// The concatenated GL(ambient) weight, quotient part first.
    fn concat(&self) -> Vec<i64> {
        let mut c = self.quotient.entries().to_vec();
        c.extend_from_slice(self.sub.entries());
        c
    }

    /// The dual bundle twisted by the canonical bundle of the Grassmannian,
    /// the Serre-duality partner of `self`.
    pub fn serre_dual(&self) -> GrWeight {
        let a = self.sub_rank as i64;
        let q = self.ambient_rank as i64 - a;
        GrWeight {
            sub_rank: self.sub_rank,
            ambient_rank: self.ambient_rank,
            quotient: self.quotient.dual().shifted(-a),
            sub: self.sub.dual().shifted(q),
        }
    }
}

/// The cohomology of a Schur bundle: either zero, or concentrated in a
/// single degree with an irreducible GL(ambient) content.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BwbResult {
    Zero,
    Cohomology {
        degree: usize,
        weight: DominantWeight,
    },
}

/// Runs the Borel-Weil-Bott algorithm: add rho to the concatenated weight;
/// a repeated entry means vanishing, otherwise the sorting permutation gives
/// the degree (its inversion count) and the dominant weight.
pub fn bwb(w: &GrWeight) -> BwbResult {
    let b = w.ambient_rank;
    let mut v = w.concat();
    for (i, e) in v.iter_mut().enumerate() {
        *e += (b - 1 - i) as i64;
    }
    // repeated entry: the dotted Weyl orbit is singular
    let mut sorted = v.clone();
    sorted.sort_unstable_by(|x, y| y.cmp(x));
    if sorted.windows(2).any(|p| p[0] == p[1]) {
        return BwbResult::Zero;
    }
    let mut inversions = 0usize;
    for i in 0..v.len() {
        for j in (i + 1)..v.len() {
            if v[i] < v[j] {
                inversions += 1;
            }
        }
    }
    let entries: Vec<i64> = sorted
        .iter()
        .enumerate()
        .map(|(i, &e)| e - (b - 1 - i) as i64)
        .collect();
    BwbResult::Cohomology {
        degree: inversions,
        weight: DominantWeight::new(entries).expect("sorted minus rho is dominant"),
    }
}

/// The Euler characteristic of the bundle as a virtual GL(ambient)
/// character, computed in the character ring by antisymmetrization and exact
/// Vandermonde division, then expanded in the Schur basis. This is the
/// independent oracle for [`bwb`]: the result must equal
/// `(-1)^degree * [weight]` when the cohomology is nonzero and vanish
/// otherwise.
pub fn euler_characteristic(w: &GrWeight) -> Result<Decomposition> {
    let b = w.ambient_rank;
    let mut c = w.concat();
    for (i, e) in c.iter_mut().enumerate() {
        *e += (b - 1 - i) as i64;
    }
    let min = c.iter().min().copied().unwrap_or(0).min(0);
    let shifted: Vec<i64> = c.iter().map(|e| e - min).collect();
    let mut numerator = antisymmetrize(&shifted);
    if numerator.is_zero() {
        return Ok(Decomposition::new());
    }
    for i in 0..b {
        for j in (i + 1)..b {
            numerator = divide_by_var_difference(&numerator, i, j);
        }
    }
    let character = numerator.det_twist(min);
    decompose_into_schur(&character, b)
}
