//! K₀(C(n,p)) as the cokernel of `1 + Φ^p` (p odd) or `1 − Φ^p` (p even).

use crate::abelian::FgAbelianGroup;
use crate::dynkin::{self, DynkinSpec, K0Vector};
use crate::error::Error;
use crate::linalg::{cokernel, IntMatrix};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct K0Job {
    pub spec: DynkinSpec,
    pub p: u64,
}

impl K0Job {
    pub fn new(spec: DynkinSpec, p: u64) -> Result<Self> {
        if p == 0 {
            return Err(Error::InvalidRepetition(p));
        }
        Ok(K0Job { spec, p })
    }
}

/// `I − (−1)^p Φ^p`, with `Φ^p` computed directly (no reduction of `p`).
pub fn relation_matrix(job: &K0Job) -> IntMatrix {
    let phi_p = dynkin::coxeter_matrix(&job.spec)
        .pow(job.p)
        .expect("square");
    let id = IntMatrix::identity(job.spec.n());
    if job.p % 2 == 1 {
        id.add(&phi_p)
    } else {
        id.sub(&phi_p)
    }
    .expect("same shape")
}

pub fn k0_repetitive(job: &K0Job) -> FgAbelianGroup {
    cokernel(&relation_matrix(job))
}

/// Same answer as [`k0_repetitive`], but first reduces `p` using the Coxeter
/// order `Φ^h = ±I`. Not used on any verification path.
pub fn k0_repetitive_reduced(job: &K0Job) -> Result<FgAbelianGroup> {
    let order = dynkin::order_identities(&job.spec)?;
    // Φ^p = sign^(p div h) Φ^(p mod h); fold the sign into the parity rule.
    let (q, r) = (job.p / order.h, job.p % order.h);
    let flip = order.sign < 0 && q % 2 == 1;
    let phi_r = dynkin::coxeter_matrix(&job.spec).pow(r)?;
    let id = IntMatrix::identity(job.spec.n());
    let plus = (job.p % 2 == 1) != flip;
    let rel = if plus {
        id.add(&phi_r)?
    } else {
        id.sub(&phi_r)?
    };
    Ok(cokernel(&rel))
}

/// `Φ^p · v`.
pub fn apply_phi_power(job: &K0Job, v: &K0Vector) -> Result<K0Vector> {
    if v.len() != job.spec.n() {
        return Err(Error::DimensionMismatch {
            expected: job.spec.n(),
            found: v.len(),
        });
    }
    let phi_p = dynkin::coxeter_matrix(&job.spec).pow(job.p)?;
    Ok(K0Vector(phi_p.mul_vec(v.coords())?))
}
