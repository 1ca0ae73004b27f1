//! Finitely generated abelian groups in invariant-factor form.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::Error;
use crate::linalg::{cokernel, IntMatrix};
use crate::Result;

/// `Z^rank ⊕ Z/d_1 ⊕ … ⊕ Z/d_k` with `2 ≤ d_1 | d_2 | … | d_k`.
///
/// The representation is canonical, so structural equality is isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FgAbelianGroup {
    rank: usize,
    torsion: Vec<BigUint>,
}

impl FgAbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        FgAbelianGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    /// `Z^rank ⊕ ⊕_i Z/orders[i]` for arbitrary positive orders, normalized to
    /// invariant factors (so `Z/2 ⊕ Z/3` becomes `Z/6`). Orders of 1 vanish;
    /// an order of 0 contributes a free summand.
    pub fn from_cyclic_orders(rank: usize, orders: &[u64]) -> Self {
        let diag: Vec<BigInt> = orders.iter().map(|&d| BigInt::from(d)).collect();
        let g = cokernel(&IntMatrix::from_diagonal(diag.len(), diag.len(), &diag));
        FgAbelianGroup {
            rank: rank + g.rank,
            torsion: g.torsion,
        }
    }

    /// Trusts the caller that `torsion` already forms a divisibility chain of
    /// entries ≥ 2.
    pub(crate) fn from_canonical_parts(rank: usize, torsion: Vec<BigUint>) -> Self {
        debug_assert!(torsion.windows(2).all(|w| (&w[1] % &w[0]).is_zero()));
        FgAbelianGroup { rank, torsion }
    }

    /// Checked constructor for externally supplied canonical data.
    pub fn from_invariant_factors(rank: usize, torsion: Vec<BigUint>) -> Option<Self> {
        let two = BigUint::from(2u32);
        let ok = torsion.iter().all(|d| *d >= two)
            && torsion.windows(2).all(|w| (&w[1] % &w[0]).is_zero());
        ok.then_some(FgAbelianGroup { rank, torsion })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[BigUint] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Group order, `None` when infinite.
    pub fn order(&self) -> Option<BigUint> {
        (self.rank == 0).then(|| self.torsion.iter().fold(BigUint::one(), |acc, d| acc * d))
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self == other
    }

    /// One generator per summand, torsion generators killed by their order.
    pub fn canonical_presentation(&self) -> Presentation {
        let m = self.rank + self.torsion.len();
        let relations = self
            .torsion
            .iter()
            .enumerate()
            .map(|(i, d)| {
                let mut r = alloc::vec![BigInt::zero(); m];
                r[self.rank + i] = BigInt::from(d.clone());
                r
            })
            .collect();
        Presentation {
            num_generators: m,
            relations,
        }
    }
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| {
            if !core::mem::replace(&mut first, false) {
                f.write_str(" ⊕ ")?;
            }
            Ok(())
        };
        match self.rank {
            0 => {}
            1 => {
                sep(f)?;
                f.write_str("Z")?;
            }
            r => {
                sep(f)?;
                write!(f, "Z^{r}")?;
            }
        }
        for d in &self.torsion {
            sep(f)?;
            write!(f, "Z/{d}")?;
        }
        Ok(())
    }
}

/// `⟨x_1, …, x_m | r_1, …, r_k⟩`: the free abelian group on `m` generators
/// modulo the subgroup spanned by the relation vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    num_generators: usize,
    relations: Vec<Vec<BigInt>>,
}

impl Presentation {
    pub fn new(num_generators: usize, relations: Vec<Vec<BigInt>>) -> Result<Self> {
        if let Some(bad) = relations.iter().find(|r| r.len() != num_generators) {
            return Err(Error::DimensionMismatch {
                expected: num_generators,
                found: bad.len(),
            });
        }
        Ok(Presentation {
            num_generators,
            relations,
        })
    }

    pub fn from_i64(num_generators: usize, relations: &[&[i64]]) -> Result<Self> {
        let rels = relations
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        Self::new(num_generators, rels)
    }

    pub fn num_generators(&self) -> usize {
        self.num_generators
    }

    pub fn relations(&self) -> &[Vec<BigInt>] {
        &self.relations
    }

    /// Generators × relations matrix; column `j` is relation `j`.
    pub fn relation_matrix(&self) -> IntMatrix {
        IntMatrix::from_columns(self.num_generators, &self.relations)
            .expect("lengths validated on construction")
    }

    pub fn evaluate(&self) -> FgAbelianGroup {
        cokernel(&self.relation_matrix())
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("⟨")?;
        for i in 1..=self.num_generators {
            if i > 1 {
                f.write_str(", ")?;
            }
            write!(f, "x{i}")?;
        }
        if !self.relations.is_empty() {
            f.write_str(" | ")?;
        }
        for (k, rel) in self.relations.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            let mut wrote = false;
            for (i, c) in rel.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let neg = c < &BigInt::zero();
                let mag = c.magnitude();
                match (wrote, neg) {
                    (false, true) => f.write_str("-")?,
                    (true, true) => f.write_str(" - ")?,
                    (true, false) => f.write_str(" + ")?,
                    (false, false) => {}
                }
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                }
                write!(f, "x{}", i + 1)?;
                wrote = true;
            }
            if !wrote {
                f.write_str("0")?;
            }
            f.write_str(" = 0")?;
        }
        f.write_str("⟩")
    }
}

/// Cokernel of the relation matrix of `p`.
pub fn from_presentation(p: &Presentation) -> FgAbelianGroup {
    p.evaluate()
}
