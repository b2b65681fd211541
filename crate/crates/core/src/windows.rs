//! Window-interval arithmetic, generator enumeration for the weight windows,
//! kernel descriptors, and adjunction-shift bookkeeping.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::weights::{enumerate_dominant_in_interval, DominantWeight};

/// A half-open integer interval `[lo, hi)` of width `width`, optionally
/// remembering the generic rational parameter it was centered on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowSpec {
    width: usize,
    lo: i64,
    hi: i64,
    delta: Option<Rational64>,
}

impl WindowSpec {
    /// Builds a window directly from its endpoints.
    pub fn from_bounds(lo: i64, hi: i64) -> Result<Self> {
        if lo >= hi {
            return Err(Error::EmptyInterval { lo, hi });
        }
        Ok(WindowSpec {
            width: (hi - lo) as usize,
            lo,
            hi,
            delta: None,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn delta(&self) -> Option<Rational64> {
        self.delta
    }
}

impl fmt::Display for WindowSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {})", self.lo, self.hi)
    }
}

/// The width-`n` half-open window centered at the generic parameter `delta`:
/// `[ceil(delta - n/2), ceil(delta + n/2))`. Fails when either boundary
/// meets the integer lattice.
pub fn window_interval(n: usize, delta: Rational64) -> Result<WindowSpec> {
    let half = Rational64::new(n as i64, 2);
    let upper = delta + half;
    let lower = delta - half;
    if upper.is_integer() || lower.is_integer() {
        return Err(Error::NonGenericDelta {
            delta: delta.to_string(),
            width: n,
        });
    }
    let lo = lower.ceil().to_integer();
    let hi = upper.ceil().to_integer();
    Ok(WindowSpec {
        width: n,
        lo,
        hi,
        delta: Some(delta),
    })
}

/// True when every entry of `lambda` lies in `[lo, hi)`.
pub fn in_window(lambda: &DominantWeight, w: &WindowSpec) -> bool {
    lambda.entries().iter().all(|&e| w.lo <= e && e < w.hi)
}

/// The generators of the window subcategory: all dominant GL(k) weights with
/// entries in the window interval.
pub fn magic_generators(k: usize, w: &WindowSpec) -> Vec<DominantWeight> {
    enumerate_dominant_in_interval(k, w.lo, w.hi).expect("window interval is nonempty")
}

/// Translates the window by `d`, the effect on windows of tensoring every
/// generator by the d-th determinant power.
pub fn shift_window_by_det(w: &WindowSpec, d: i64) -> WindowSpec {
    WindowSpec {
        width: w.width,
        lo: w.lo + d,
        hi: w.hi + d,
        delta: w.delta.map(|delta| delta + Rational64::from_integer(d)),
    }
}

/// Determinant factors appearing in kernel descriptors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum DetFactor {
    /// The smaller tautological space (V_m, or V_{k-i}).
    VSmall,
    /// The larger tautological space (V_n).
    VLarge,
    /// The primed tautological space (V_k').
    VPrime,
    /// The ambient fixed space (C^N).
    Ambient,
}

impl fmt::Display for DetFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DetFactor::VSmall => write!(f, "V_m"),
            DetFactor::VLarge => write!(f, "V_n"),
            DetFactor::VPrime => write!(f, "V'"),
            DetFactor::Ambient => write!(f, "C^N"),
        }
    }
}

/// The determinant-exponent data and internal shift of an integral kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelDescriptor {
    pub det_exponents: BTreeMap<DetFactor, i64>,
    pub internal_shift: i64,
}

/// Which of the three kernel families to describe.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelKind {
    /// The raising kernel between ranks n and m.
    E,
    /// The lowering kernel between ranks m and n.
    F,
    /// The lowering kernel transported to the primed side; here `m = k - i`
    /// and `n = k`.
    FPrime,
}

/// The determinant twists and internal shift of the kernel of the given
/// kind, for ranks `m <= n <= ambient`.
pub fn kernel_descriptor(
    kind: KernelKind,
    m: usize,
    n: usize,
    ambient: usize,
) -> Result<KernelDescriptor> {
    if m > n || n > ambient {
        return Err(Error::RankOrder(format!(
            "need m <= n <= N, got m={m} n={n} N={ambient}"
        )));
    }
    let (m, n, big_n) = (m as i64, n as i64, ambient as i64);
    let mut det_exponents = BTreeMap::new();
    let internal_shift = match kind {
        KernelKind::E => {
            det_exponents.insert(DetFactor::VSmall, -m);
            det_exponents.insert(DetFactor::VLarge, n);
            det_exponents.insert(DetFactor::Ambient, m - n);
            m * n - n * n
        }
        KernelKind::F => {
            det_exponents.insert(DetFactor::VSmall, m - big_n);
            det_exponents.insert(DetFactor::VLarge, big_n - n);
            m * n - m * m
        }
        KernelKind::FPrime => {
            let i = n - m;
            let k = n;
            det_exponents.insert(DetFactor::VSmall, k - i);
            det_exponents.insert(DetFactor::VPrime, -k);
            det_exponents.insert(DetFactor::Ambient, i);
            i * k - i * i
        }
    };
    Ok(KernelDescriptor {
        det_exponents,
        internal_shift,
    })
}

/// The homological shift in the adjunctions between the raising and lowering
/// kernels: `(n - m)(N - n - m)`.
pub fn adjunction_shift(m: usize, n: usize, ambient: usize) -> Result<i64> {
    if m > n || n > ambient {
        return Err(Error::RankOrder(format!(
            "need m <= n <= N, got m={m} n={n} N={ambient}"
        )));
    }
    let (m, n, big_n) = (m as i64, n as i64, ambient as i64);
    Ok((n - m) * (big_n - n - m))
}
