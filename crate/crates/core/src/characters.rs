//! The character ring of GL(k) as symmetric Laurent polynomials, with exact
//! Schur expansion. This module is the brute-force oracle that every
//! decomposition computed elsewhere in the crate is checked against, so it
//! deliberately goes through polynomial arithmetic (antisymmetrization and
//! exact division by the Vandermonde factors) rather than any tableau rule.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::qpoly::QPolynomial;
use crate::weights::DominantWeight;

type TermMap = BTreeMap<Vec<i64>, BigInt>;

/// A Laurent polynomial in k variables, finitely supported, with integer
/// coefficients. The constructors used below always produce symmetric
/// polynomials; symmetry is checked where an operation requires it.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SymLaurentPoly {
    k: usize,
    terms: TermMap,
}

impl SymLaurentPoly {
    pub fn zero(k: usize) -> Self {
        SymLaurentPoly {
            k,
            terms: TermMap::new(),
        }
    }

    pub fn one(k: usize) -> Self {
        let mut terms = TermMap::new();
        terms.insert(vec![0; k], BigInt::one());
        SymLaurentPoly { k, terms }
    }

    pub fn monomial(exps: Vec<i64>, coeff: impl Into<BigInt>) -> Self {
        let k = exps.len();
        let coeff = coeff.into();
        let mut terms = TermMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        SymLaurentPoly { k, terms }
    }

    pub fn num_vars(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exps: &[i64]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    /// The lexicographically greatest exponent vector and its coefficient.
    pub fn leading_term(&self) -> Option<(&Vec<i64>, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn add_assign_term(&mut self, exps: Vec<i64>, coeff: &BigInt) {
        debug_assert_eq!(exps.len(), self.k);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.k, rhs.k);
        let mut out = self.clone();
        for (e, c) in rhs.terms.iter() {
            out.add_assign_term(e.clone(), c);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.k, rhs.k);
        let mut out = self.clone();
        for (e, c) in rhs.terms.iter() {
            out.add_assign_term(e.clone(), &(-c));
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.k, rhs.k);
        let mut out = SymLaurentPoly::zero(self.k);
        for (e1, c1) in self.terms.iter() {
            for (e2, c2) in rhs.terms.iter() {
                let exps: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_assign_term(exps, &(c1 * c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return SymLaurentPoly::zero(self.k);
        }
        SymLaurentPoly {
            k: self.k,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Multiplies by `(x_1 ... x_k)^d`, shifting every exponent by `d`.
    pub fn det_twist(&self, d: i64) -> Self {
        SymLaurentPoly {
            k: self.k,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|x| x + d).collect(), c.clone()))
                .collect(),
        }
    }

    /// The sum of all coefficients, i.e. the value at `x_i = 1`.
    pub fn evaluate_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Checks invariance under every adjacent transposition of variables.
    pub fn is_symmetric(&self) -> bool {
        for t in 0..self.k.saturating_sub(1) {
            for (e, c) in self.terms.iter() {
                if e[t] == e[t + 1] {
                    continue;
                }
                let mut swapped = e.clone();
                swapped.swap(t, t + 1);
                if self.coefficient(&swapped) != *c {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Debug for SymLaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*x^{e:?}")?;
        }
        Ok(())
    }
}

/// A finite map from dominant weights to graded multiplicities. Plain
/// (ungraded) decompositions use constant polynomials.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Decomposition {
    terms: BTreeMap<DominantWeight, QPolynomial>,
}

impl Decomposition {
    pub fn new() -> Self {
        Decomposition::default()
    }

    pub fn insert_constant(&mut self, w: DominantWeight, mult: impl Into<BigInt>) {
        self.add_graded(w, &QPolynomial::constant(mult));
    }

    pub fn add_graded(&mut self, w: DominantWeight, mult: &QPolynomial) {
        if mult.is_zero() {
            return;
        }
        let slot = self.terms.entry(w).or_default();
        *slot = &*slot + mult;
        if slot.is_zero() {
            self.terms.retain(|_, p| !p.is_zero());
        }
    }

    pub fn get(&self, w: &DominantWeight) -> Option<&QPolynomial> {
        self.terms.get(w)
    }

    /// The total multiplicity of `w`, summing over internal degrees.
    pub fn multiplicity(&self, w: &DominantWeight) -> BigInt {
        self.terms
            .get(w)
            .map(|p| p.evaluate_at_one())
            .unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&DominantWeight, &QPolynomial)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &DominantWeight> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn all_nonnegative(&self) -> bool {
        self.terms
            .values()
            .all(|p| p.terms().all(|(_, c)| c >= &BigInt::zero()))
    }
}

impl FromIterator<(DominantWeight, i64)> for Decomposition {
    fn from_iter<T: IntoIterator<Item = (DominantWeight, i64)>>(iter: T) -> Self {
        let mut d = Decomposition::new();
        for (w, m) in iter {
            d.insert_constant(w, m);
        }
        d
    }
}

impl fmt::Debug for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (w, p)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w:?}: {p:?}")?;
        }
        write!(f, "}}")
    }
}

/// Sums `sgn(w) * x^{w(mu)}` over all permutations `w` of the k coordinates.
/// Cancels to zero when `mu` has a repeated entry.
pub(crate) fn antisymmetrize(mu: &[i64]) -> SymLaurentPoly {
    let k = mu.len();
    let mut out = SymLaurentPoly::zero(k);
    let mut perm: Vec<usize> = (0..k).collect();
    // Heap's algorithm, tracking parity with each swap.
    let mut c = vec![0usize; k];
    let mut sign = BigInt::one();
    let exps = |perm: &[usize]| -> Vec<i64> { perm.iter().map(|&p| mu[p]).collect() };
    out.add_assign_term(exps(&perm), &sign);
    let mut i = 0;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            out.add_assign_term(exps(&perm), &sign);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Exact division of `p` by `(x_i - x_j)`, via synthetic division in the
/// variable `x_i`. Panics when the division is not exact; callers only pass
/// antisymmetric numerators, for which exactness is guaranteed.
pub(crate) fn divide_by_var_difference(p: &SymLaurentPoly, i: usize, j: usize) -> SymLaurentPoly {
    let k = p.k;
    // layer the terms by their x_i-degree
    let mut layers: BTreeMap<i64, TermMap> = BTreeMap::new();
    for (e, c) in p.terms.iter() {
        debug_assert!(e[i] >= 0, "division requires polynomial exponents");
        let mut rest = e.clone();
        let d = rest[i];
        rest[i] = 0;
        layers.entry(d).or_default().insert(rest, c.clone());
    }
    let top = layers.keys().next_back().copied().unwrap_or(0);
    let mut quotient = SymLaurentPoly::zero(k);
    let mut carry: TermMap = TermMap::new(); // B_d while descending
    for d in (1..=top).rev() {
        // B_{d-1} = A_d + x_j * B_d
        let mut next: TermMap = layers.remove(&d).unwrap_or_default();
        for (e, c) in carry.iter() {
            let mut shifted = e.clone();
            shifted[j] += 1;
            let slot = next.entry(shifted).or_insert_with(BigInt::zero);
            *slot += c;
        }
        next.retain(|_, c| !c.is_zero());
        for (e, c) in next.iter() {
            let mut full = e.clone();
            full[i] = d - 1;
            quotient.add_assign_term(full, c);
        }
        carry = next;
    }
    // remainder A_0 + x_j * B_0 must vanish
    let mut remainder: TermMap = layers.remove(&0).unwrap_or_default();
    for (e, c) in carry.iter() {
        let mut shifted = e.clone();
        shifted[j] += 1;
        let slot = remainder.entry(shifted).or_insert_with(BigInt::zero);
        *slot += c;
    }
    remainder.retain(|_, c| !c.is_zero());
    assert!(remainder.is_empty(), "inexact division by x_{i} - x_{j}");
    quotient
}

/// The Weyl character of the irreducible GL(k) representation of highest
/// weight `lambda`, computed as the bialternant ratio. Negative entries are
/// handled by factoring out a determinant power first.
pub fn schur_polynomial(lambda: &DominantWeight, k: usize) -> Result<SymLaurentPoly> {
    lambda.check_rank(k)?;
    if k == 0 {
        return Ok(SymLaurentPoly::one(0));
    }
    let min = lambda.entries().iter().min().copied().unwrap_or(0);
    let twist = if min < 0 { min } else { 0 };
    let shifted = lambda.shifted(-twist);
    let mu: Vec<i64> = shifted
        .entries()
        .iter()
        .enumerate()
        .map(|(idx, &e)| e + (k - 1 - idx) as i64)
        .collect();
    let mut poly = antisymmetrize(&mu);
    for i in 0..k {
        for j in (i + 1)..k {
            poly = divide_by_var_difference(&poly, i, j);
        }
    }
    Ok(poly.det_twist(twist))
}

/// Expands a symmetric Laurent polynomial in the Schur basis by repeated
/// subtraction of the lexicographically-leading term. Coefficients may be
/// negative (virtual characters).
pub fn decompose_into_schur(f: &SymLaurentPoly, k: usize) -> Result<Decomposition> {
    assert_eq!(f.num_vars(), k);
    if !f.is_symmetric() {
        return Err(Error::NotSymmetric { k });
    }
    let mut rest = f.clone();
    let mut out = Decomposition::new();
    while !rest.is_zero() {
        let (lead, coeff) = rest
            .terms
            .iter()
            .next_back()
            .map(|(e, c)| (e.clone(), c.clone()))
            .expect("nonzero polynomial has a leading term");
        let weight = DominantWeight::new(lead)
            .expect("leading exponent of a symmetric polynomial is dominant");
        let schur = schur_polynomial(&weight, k)?;
        rest = rest.sub(&schur.scale(&coeff));
        out.add_graded(weight, &QPolynomial::constant(coeff));
    }
    Ok(out)
}

/// The multiset of torus weights of the irreducible of highest weight
/// `lambda`: exponent vectors of the Weyl character with multiplicities.
pub fn weight_multiset(lambda: &DominantWeight, k: usize) -> Result<BTreeMap<Vec<i64>, BigInt>> {
    let poly = schur_polynomial(lambda, k)?;
    Ok(poly.terms)
}

/// The Weyl dimension formula for GL(k): the product over pairs i < j of
/// (lambda_i - lambda_j + j - i) / (j - i), exactly.
pub fn weyl_dimension(lambda: &DominantWeight) -> BigInt {
    let e = lambda.entries();
    let k = e.len();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        for j in (i + 1)..k {
            num *= BigInt::from(e[i] - e[j] + (j - i) as i64);
            den *= BigInt::from((j - i) as i64);
        }
    }
    num / den
}
