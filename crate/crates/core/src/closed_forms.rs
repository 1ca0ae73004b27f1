//! Closed-form predictions for K₀(C(n,p)) and a three-way cross-check.
//!
//! Type A ladder (first match wins), after reducing `p` modulo the period
//! `n + 1` (n odd) or `2(n + 1)` (n even):
//!
//! 1. `p ≡ 0` gives `Z^n`.
//! 2. `p ≡ ±1` gives `Z` (n odd) or `0` (n even).
//! 3. n even and `p ≡ n + 1` gives `(Z/2)^n`.
//! 4. Otherwise the residue (or its dual `period − p`) lies in the range of the
//!    presentation theorems and a presentation on `m` generators is returned.
//!
//! Type D only has closed forms for `p ≡ 0, 1, n − 1 (mod 2(n − 1))`; every
//! other residue is reported as not covered.
//!
//! The statements are encoded as published. Several of them disagree with the
//! two computational routes; [`verify`] reports those cases as failures rather
//! than patching the formulas.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::abelian::{FgAbelianGroup, Presentation};
use crate::ar;
use crate::coxeter_k0::{k0_repetitive, K0Job};
use crate::dynkin::{DynkinSpec, Family};
use crate::error::Error;

/// Orbit-vertex budget above which the AR route is skipped.
pub const DEFAULT_MAX_VERTICES: u64 = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PredictionKind {
    ExplicitGroup,
    ExplicitPresentation,
    NotCovered,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prediction {
    kind: PredictionKind,
    group: Option<FgAbelianGroup>,
    presentation: Option<Presentation>,
    source: String,
}

impl Prediction {
    fn group(group: FgAbelianGroup, source: String) -> Self {
        Prediction {
            kind: PredictionKind::ExplicitGroup,
            group: Some(group),
            presentation: None,
            source,
        }
    }

    fn presentation(p: Presentation, source: String) -> Self {
        Prediction {
            kind: PredictionKind::ExplicitPresentation,
            group: None,
            presentation: Some(p),
            source,
        }
    }

    fn not_covered(source: String) -> Self {
        Prediction {
            kind: PredictionKind::NotCovered,
            group: None,
            presentation: None,
            source,
        }
    }

    pub fn kind(&self) -> PredictionKind {
        self.kind
    }

    pub fn explicit_group(&self) -> Option<&FgAbelianGroup> {
        self.group.as_ref()
    }

    pub fn explicit_presentation(&self) -> Option<&Presentation> {
        self.presentation.as_ref()
    }

    /// Human-readable name of the statement that produced the prediction.
    pub fn source(&self) -> &str {
        &self.source
    }

    /// The predicted group, evaluating a presentation if needed.
    pub fn resolved_group(&self) -> Option<FgAbelianGroup> {
        match self.kind {
            PredictionKind::ExplicitGroup => self.group.clone(),
            PredictionKind::ExplicitPresentation => {
                self.presentation.as_ref().map(Presentation::evaluate)
            }
            PredictionKind::NotCovered => None,
        }
    }
}

/// Parameters of the presentation theorems for type A.
///
/// For `0 < p ≤ bound`: `k ≡ L (mod p)` with `0 < k ≤ p`, where `L = n + 1` for
/// odd `n` and `L = 2(n + 1)` for even `n`; `m = gcd(p, k)`; `n = a·m + b` with
/// `0 ≤ b < m`; `n + 1 − p = t·m + c` with `0 < c ≤ m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TheoremParams {
    pub n: u64,
    pub p: u64,
    pub k: u64,
    pub m: u64,
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub t: i64,
}

impl TheoremParams {
    /// `None` when `p` is outside `0 < p ≤ (n+1)/2` (n odd) or `0 < p ≤ n+1` (n even).
    pub fn new(n: u64, p: u64) -> Option<Self> {
        let (bound, modulus) = if n % 2 == 1 {
            (n.div_ceil(2), n + 1)
        } else {
            (n + 1, 2 * (n + 1))
        };
        if p == 0 || p > bound {
            return None;
        }
        let k = match modulus % p {
            0 => p,
            r => r,
        };
        let m = p.gcd(&k);
        let (a, b) = n.div_rem(&m);
        let diff = n as i64 + 1 - p as i64;
        let mut c = diff.rem_euclid(m as i64);
        if c == 0 {
            c = m as i64;
        }
        let t = (diff - c) / m as i64;
        Some(TheoremParams {
            n,
            p,
            k,
            m,
            a,
            b,
            c: c as u64,
            t,
        })
    }

    /// The presentation for even `p`: `x_c + Σ α_j x_j = 0` with
    /// `α_j = a + 1` for `j ≤ b` and `α_j = a` otherwise.
    pub fn even_presentation(&self) -> Presentation {
        let m = self.m as usize;
        let mut rel = vec![BigInt::zero(); m];
        rel[self.c as usize - 1] += 1;
        for (j, r) in rel.iter_mut().enumerate() {
            *r += if (j as u64) < self.b {
                self.a + 1
            } else {
                self.a
            };
        }
        Presentation::new(m, vec![rel]).expect("length m")
    }

    /// The presentation for odd `p`: `(−1)^t x_c − Σ_{j ∈ J} x_j = 0` with
    /// `J = 1..=b` (a even) or `J = b+1..=m` (a odd), plus `2 x_j = 0` for every
    /// generator when `p / m` is odd.
    pub fn odd_presentation(&self) -> Presentation {
        let m = self.m as usize;
        let b = self.b as usize;
        let mut rel = vec![BigInt::zero(); m];
        rel[self.c as usize - 1] += if self.t.is_even() { 1 } else { -1 };
        let range = if self.a.is_multiple_of(2) { 0..b } else { b..m };
        for j in range {
            rel[j] -= 1;
        }
        let mut rels = vec![rel];
        if (self.p / self.m) % 2 == 1 {
            for j in 0..m {
                let mut r = vec![BigInt::zero(); m];
                r[j] = BigInt::from(2);
                rels.push(r);
            }
        }
        Presentation::new(m, rels).expect("length m")
    }

    pub fn presentation(&self) -> Presentation {
        if self.p.is_multiple_of(2) {
            self.even_presentation()
        } else {
            self.odd_presentation()
        }
    }
}

impl fmt::Display for TheoremParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={}, c={}, a={}, b={}", self.m, self.c, self.a, self.b)?;
        if self.p % 2 == 1 {
            write!(f, ", t={}", self.t)?;
        }
        Ok(())
    }
}

fn parity(n: u64) -> &'static str {
    if n % 2 == 1 {
        "odd"
    } else {
        "even"
    }
}

pub fn predict(spec: &DynkinSpec, p: u64) -> Prediction {
    match spec.family() {
        Family::A => predict_a(spec.n() as u64, p),
        Family::D => predict_d(spec.n() as u64, p),
    }
}

fn predict_a(n: u64, p: u64) -> Prediction {
    let odd = n % 2 == 1;
    let (period, period_name) = if odd {
        (n + 1, "(n+1)")
    } else {
        (2 * (n + 1), "2(n+1)")
    };
    let r = p % period;
    let nz = n as usize;

    if r == 0 {
        return Prediction::group(FgAbelianGroup::free(nz), format!("p ≡ 0 mod {period_name}"));
    }
    if r == 1 || r == period - 1 {
        let g = if odd {
            FgAbelianGroup::free(1)
        } else {
            FgAbelianGroup::trivial()
        };
        return Prediction::group(g, format!("p ≡ ±1 mod {period_name}, n {}", parity(n)));
    }
    if !odd && r == n + 1 {
        let g = FgAbelianGroup::from_cyclic_orders(0, &vec![2; nz]);
        return Prediction::group(g, String::from("p ≡ n+1 mod 2(n+1), n even"));
    }

    let reduced = if r == p {
        String::new()
    } else {
        format!("p ≡ {r} mod {period}; ")
    };
    let (q, via) = match TheoremParams::new(n, r) {
        Some(_) => (r, String::new()),
        None => (
            period - r,
            format!("dual q = {period} − {r} = {}; ", period - r),
        ),
    };
    let Some(params) = TheoremParams::new(n, q) else {
        return Prediction::not_covered(format!(
            "{reduced}{via}residue outside every stated range"
        ));
    };
    Prediction::presentation(
        params.presentation(),
        format!(
            "{reduced}{via}presentation, n {}, p {} ({params})",
            parity(n),
            parity(q)
        ),
    )
}

fn predict_d(n: u64, p: u64) -> Prediction {
    let period = 2 * (n - 1);
    let r = p % period;
    let nz = n as usize;
    let odd = n % 2 == 1;
    if r == 0 {
        return Prediction::group(FgAbelianGroup::free(nz), String::from("p ≡ 0 mod 2(n−1)"));
    }
    if r == n - 1 {
        let g = if odd {
            FgAbelianGroup::free(nz)
        } else {
            FgAbelianGroup::from_cyclic_orders(0, &vec![2; nz])
        };
        return Prediction::group(g, format!("p ≡ n−1 mod 2(n−1), n {}", parity(n)));
    }
    if r == 1 {
        let g = FgAbelianGroup::free(if odd { 1 } else { 2 });
        return Prediction::group(g, format!("p ≡ 1 mod 2(n−1), n {}", parity(n)));
    }
    Prediction::not_covered(format!("no closed form for p ≡ {r} mod {period} in type D"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Snf,
    Ar,
    Predict,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Snf => "snf",
            Method::Ar => "ar",
            Method::Predict => "predict",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArOutcome {
    Computed(FgAbelianGroup),
    SkippedBudget { vertices: u64, budget: u64 },
    Failed(Error),
}

impl ArOutcome {
    pub fn group(&self) -> Option<&FgAbelianGroup> {
        match self {
            ArOutcome::Computed(g) => Some(g),
            _ => None,
        }
    }
}

/// Whether the answers of two methods are isomorphic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub left: Method,
    pub right: Method,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub spec: DynkinSpec,
    pub p: u64,
    pub snf: FgAbelianGroup,
    pub ar: ArOutcome,
    pub prediction: Prediction,
    pub predicted_group: Option<FgAbelianGroup>,
    pub verdicts: Vec<Verdict>,
    pub pass: bool,
}

/// Runs all three routes. The AR route is skipped when its orbit quiver would
/// exceed `max_vertices`. PASS iff every available answer agrees and the AR
/// route did not fail.
pub fn verify(spec: &DynkinSpec, p: u64, max_vertices: u64) -> Result<VerificationReport, Error> {
    let job = K0Job::new(*spec, p)?;
    let snf = k0_repetitive(&job);
    let vertices = ar::orbit_vertex_count(spec, p);
    let ar = if vertices > max_vertices {
        ArOutcome::SkippedBudget {
            vertices,
            budget: max_vertices,
        }
    } else {
        match ar::k0_via_ar(spec, p) {
            Ok(g) => ArOutcome::Computed(g),
            Err(e) => ArOutcome::Failed(e),
        }
    };
    let prediction = predict(spec, p);
    let predicted_group = prediction.resolved_group();

    let answers: Vec<(Method, &FgAbelianGroup)> = [
        Some((Method::Snf, &snf)),
        ar.group().map(|g| (Method::Ar, g)),
        predicted_group.as_ref().map(|g| (Method::Predict, g)),
    ]
    .into_iter()
    .flatten()
    .collect();
    let mut verdicts = Vec::new();
    for (i, (lm, lg)) in answers.iter().enumerate() {
        for (rm, rg) in &answers[i + 1..] {
            verdicts.push(Verdict {
                left: *lm,
                right: *rm,
                agree: lg.is_isomorphic(rg),
            });
        }
    }
    let pass = verdicts.iter().all(|v| v.agree) && !matches!(ar, ArOutcome::Failed(_));
    Ok(VerificationReport {
        spec: *spec,
        p,
        snf,
        ar,
        prediction,
        predicted_group,
        verdicts,
        pass,
    })
}
