//! The two quiver families, their projective and injective classes in K₀, and
//! the Cartan and Coxeter matrices in the basis of simple modules.
//!
//! Orientations are fixed: type A has arrows `i → i+1` on vertices `1..=n`;
//! type D has vertices `0..n`, arrows `0 → 2`, `1 → 2` and `i-1 → i` for
//! `3 ≤ i ≤ n-1`. K₀ of the orbit category does not depend on the
//! orientation, but the coordinates of projectives and injectives do.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::linalg::IntMatrix;
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    D,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::D => 'D',
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DynkinSpec {
    family: Family,
    n: usize,
}

impl DynkinSpec {
    /// Type A needs `n ≥ 1`, type D needs `n ≥ 3` (`D_3` is kept in its own
    /// coordinates even though it is isomorphic to `A_3`).
    pub fn new(family: Family, n: usize) -> Result<Self> {
        let min = match family {
            Family::A => 1,
            Family::D => 3,
        };
        if n < min {
            return Err(Error::InvalidRank {
                family: family.letter(),
                n,
            });
        }
        Ok(DynkinSpec { family, n })
    }

    pub fn a(n: usize) -> Result<Self> {
        Self::new(Family::A, n)
    }

    pub fn d(n: usize) -> Result<Self> {
        Self::new(Family::D, n)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Vertex labels in basis order: `1..=n` for A, `0..n` for D.
    pub fn simple_index_set(&self) -> Vec<usize> {
        match self.family {
            Family::A => (1..=self.n).collect(),
            Family::D => (0..self.n).collect(),
        }
    }

    /// Position of a vertex label in the basis.
    pub fn position(&self, label: usize) -> Option<usize> {
        match self.family {
            Family::A => (1..=self.n).contains(&label).then(|| label - 1),
            Family::D => (label < self.n).then_some(label),
        }
    }

    fn label(&self, position: usize) -> usize {
        match self.family {
            Family::A => position + 1,
            Family::D => position,
        }
    }

    /// Arrows of the fixed orientation, as label pairs.
    pub fn arrows(&self) -> Vec<(usize, usize)> {
        match self.family {
            Family::A => (1..self.n).map(|i| (i, i + 1)).collect(),
            Family::D => {
                let mut arrows = vec![(0, 2), (1, 2)];
                arrows.extend((3..self.n).map(|i| (i - 1, i)));
                arrows
            }
        }
    }

    /// Coxeter number: `n + 1` for `A_n`, `2(n − 1)` for `D_n`.
    pub fn coxeter_number(&self) -> usize {
        match self.family {
            Family::A => self.n + 1,
            Family::D => 2 * (self.n - 1),
        }
    }

    /// Number of indecomposables of the classical cluster category.
    pub fn cluster_vertex_count(&self) -> usize {
        match self.family {
            Family::A => self.n * (self.n + 3) / 2,
            Family::D => self.n * self.n,
        }
    }
}

impl fmt::Display for DynkinSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.n)
    }
}

/// Coordinates of a class of K₀ in the basis of simples.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct K0Vector(pub Vec<BigInt>);

impl K0Vector {
    pub fn zero(spec: &DynkinSpec) -> Self {
        K0Vector(vec![BigInt::zero(); spec.n()])
    }

    /// `[S_label]`.
    pub fn simple(spec: &DynkinSpec, label: usize) -> Option<Self> {
        let pos = spec.position(label)?;
        let mut v = Self::zero(spec);
        v.0[pos] = BigInt::one();
        Some(v)
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        K0Vector(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }
}

/// Vertices reachable from `start` along arrows (reversed when `backward`).
/// Dynkin quivers are trees, so each reachable vertex is hit by exactly one path.
fn reachable(spec: &DynkinSpec, start: usize, backward: bool) -> K0Vector {
    let arrows = spec.arrows();
    let mut seen = vec![false; spec.n()];
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        let pos = spec.position(v).expect("label in range");
        if seen[pos] {
            continue;
        }
        seen[pos] = true;
        for &(s, t) in &arrows {
            let (from, to) = if backward { (t, s) } else { (s, t) };
            if from == v {
                stack.push(to);
            }
        }
    }
    K0Vector(
        seen.into_iter()
            .map(|b| if b { BigInt::one() } else { BigInt::zero() })
            .collect(),
    )
}

/// `[P_i]` for every vertex in basis order: the top `S_i` together with every
/// vertex reached by a path starting at `i`.
pub fn projective_classes(spec: &DynkinSpec) -> Vec<K0Vector> {
    spec.simple_index_set()
        .into_iter()
        .map(|i| reachable(spec, i, false))
        .collect()
}

/// `[I_i]` for every vertex in basis order: the socle `S_i` together with every
/// vertex that has a path ending at `i`.
pub fn injective_classes(spec: &DynkinSpec) -> Vec<K0Vector> {
    spec.simple_index_set()
        .into_iter()
        .map(|i| reachable(spec, i, true))
        .collect()
}

/// Column `i` is `[P_i]` in the simple basis.
pub fn cartan_matrix(spec: &DynkinSpec) -> IntMatrix {
    let cols: Vec<Vec<BigInt>> = projective_classes(spec).into_iter().map(|v| v.0).collect();
    IntMatrix::from_columns(spec.n(), &cols).expect("columns have length n")
}

/// `Φ = −Cᵀ C⁻¹`, the matrix of `[X] ↦ [τX]`. It sends `[P_i]` to `−[I_i]`.
pub fn coxeter_matrix(spec: &DynkinSpec) -> IntMatrix {
    let c = cartan_matrix(spec);
    let c_inv = c
        .inverse_unimodular()
        .expect("Cartan matrices of Dynkin quivers are unimodular");
    c.transpose().mul(&c_inv).expect("square").neg()
}

/// Least `h ≥ 1` with `Φ^h = sign · I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoxeterOrder {
    pub h: u64,
    pub sign: i8,
}

pub fn order_identities(spec: &DynkinSpec) -> Result<CoxeterOrder> {
    let phi = coxeter_matrix(spec);
    let n = spec.n();
    let bound = 2 * (n as u64 + 1);
    let minus_id = IntMatrix::identity(n).neg();
    let mut power = IntMatrix::identity(n);
    for h in 1..=bound {
        power = power.mul(&phi)?;
        if power.is_identity() {
            return Ok(CoxeterOrder { h, sign: 1 });
        }
        if power == minus_id {
            return Ok(CoxeterOrder { h, sign: -1 });
        }
    }
    Err(Error::NoCoxeterPeriod { bound })
}

/// Label of the vertex at basis position `pos`, exposed for formatting.
pub fn label_at(spec: &DynkinSpec, pos: usize) -> usize {
    spec.label(pos)
}
