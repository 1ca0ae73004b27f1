//! Brute-force K₀ from the Auslander–Reiten quiver of C(n,p).
//!
//! The AR quiver of the derived category is the stable translation quiver
//! `ZΔ` with vertices `(x, level)`. For every edge `{ℓ, ℓ'}` of Δ, oriented as
//! the quiver arrow `ℓ → ℓ'`, there are arrows `(x, ℓ) → (x, ℓ')` and
//! `(x, ℓ') → (x + 1, ℓ)`; `τ(x, ℓ) = (x − 1, ℓ)`. The AR quiver of C(n,p) is
//! the quotient by the glide `G = (τ⁻¹Σ)^p`, and K₀ is the free group on its
//! vertices modulo one mesh relation `[τZ] − Σ[E] + [Z]` per vertex `Z`.
//!
//! The shift Σ on `ZΔ`:
//!
//! * type A: `(x, y) ↦ (x + y, n + 1 − y)`,
//! * type D: `(x, ℓ) ↦ (x + n − 1, σ(ℓ))`, where σ swaps the fork levels 0 and 1
//!   iff `n` is odd.
//!
//! Both satisfy `Σ² = τ^{−h}` with `h` the Coxeter number; the tests check this
//! vertexwise and also that `[ΣX] = −[X]` comes out of the mesh relations.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::abelian::FgAbelianGroup;
use crate::dynkin::{DynkinSpec, Family};
use crate::error::Error;
use crate::linalg::{cokernel, column_span_contains, IntMatrix};
use crate::Result;

/// A vertex of `ZΔ`. Ordered lexicographically on `(x, level)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZVertex {
    pub x: i64,
    pub level: usize,
}

impl ZVertex {
    pub const fn new(x: i64, level: usize) -> Self {
        ZVertex { x, level }
    }
}

impl fmt::Display for ZVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.level)
    }
}

/// Levels of `ZΔ` in the order used for vertices: A uses `1..=n`, D uses `0..n`.
pub fn levels(spec: &DynkinSpec) -> Vec<usize> {
    spec.simple_index_set()
}

/// Oriented edges `ℓ → ℓ'` of Δ; shared with the quiver orientation.
fn edges(spec: &DynkinSpec) -> Vec<(usize, usize)> {
    spec.arrows()
}

pub fn tau(v: ZVertex) -> ZVertex {
    ZVertex::new(v.x - 1, v.level)
}

pub fn tau_inv(v: ZVertex) -> ZVertex {
    ZVertex::new(v.x + 1, v.level)
}

pub fn shift_sigma(spec: &DynkinSpec, v: ZVertex) -> ZVertex {
    let n = spec.n();
    match spec.family() {
        Family::A => ZVertex::new(v.x + v.level as i64, n + 1 - v.level),
        Family::D => {
            let level = match v.level {
                0 if n % 2 == 1 => 1,
                1 if n % 2 == 1 => 0,
                l => l,
            };
            ZVertex::new(v.x + n as i64 - 1, level)
        }
    }
}

/// Sources of the `ZΔ` arrows ending at `v`.
pub fn predecessors(spec: &DynkinSpec, v: ZVertex) -> Vec<ZVertex> {
    let mut out = Vec::new();
    for (a, b) in edges(spec) {
        // (x, a) -> (x, b) and (x, b) -> (x + 1, a)
        if v.level == b {
            out.push(ZVertex::new(v.x, a));
        }
        if v.level == a {
            out.push(ZVertex::new(v.x - 1, b));
        }
    }
    out
}

/// Targets of the `ZΔ` arrows starting at `v`.
pub fn successors(spec: &DynkinSpec, v: ZVertex) -> Vec<ZVertex> {
    let mut out = Vec::new();
    for (a, b) in edges(spec) {
        if v.level == a {
            out.push(ZVertex::new(v.x, b));
        }
        if v.level == b {
            out.push(ZVertex::new(v.x + 1, a));
        }
    }
    out
}

/// The glide `(τ⁻¹Σ)^p` as an affine map: each level is shifted in `x` and
/// permuted.
#[derive(Clone, Debug)]
struct Glide {
    /// image of `(0, ℓ)` for each level
    images: BTreeMap<usize, ZVertex>,
    /// `G²` is translation by `period` in `x`
    period: i64,
}

impl Glide {
    fn new(spec: DynkinSpec, p: u64) -> Result<Self> {
        let mut images = BTreeMap::new();
        for l in levels(&spec) {
            let mut v = ZVertex::new(0, l);
            for _ in 0..p {
                v = tau_inv(shift_sigma(&spec, v));
            }
            images.insert(l, v);
        }
        let g = Glide { images, period: 0 };
        let mut period = None;
        for l in levels(&spec) {
            let twice = g.apply(g.apply(ZVertex::new(0, l)));
            if twice.level != l {
                return Err(Error::InconsistentGlide(
                    "square of the glide permutes levels",
                ));
            }
            match period {
                None => period = Some(twice.x),
                Some(w) if w != twice.x => {
                    return Err(Error::InconsistentGlide(
                        "square of the glide is not a translation",
                    ))
                }
                _ => {}
            }
        }
        let period = period.unwrap_or(0);
        if period <= 0 {
            return Err(Error::InconsistentGlide("glide does not move to the right"));
        }
        Ok(Glide { period, ..g })
    }

    fn apply(&self, v: ZVertex) -> ZVertex {
        let img = self.images[&v.level];
        ZVertex::new(img.x + v.x, img.level)
    }

    fn reduce(&self, v: ZVertex) -> ZVertex {
        ZVertex::new(v.x.rem_euclid(self.period), v.level)
    }

    /// Least of the two representatives of the orbit inside the strip
    /// `[0, period)`.
    fn canonical(&self, v: ZVertex) -> ZVertex {
        let a = self.reduce(v);
        let b = self.reduce(self.apply(v));
        a.min(b)
    }
}

/// The AR quiver of C(n,p): `ZΔ` modulo `(τ⁻¹Σ)^p`.
#[derive(Clone, Debug)]
pub struct OrbitQuiver {
    spec: DynkinSpec,
    p: u64,
    glide: Glide,
    vertices: Vec<ZVertex>,
    index: BTreeMap<ZVertex, usize>,
    tau: Vec<usize>,
    /// `(source, target)` pairs of orbit vertex indices.
    arrows: Vec<(usize, usize)>,
}

/// `τZ → E → Z`, with the middle term given by its indecomposable summands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeshRelation {
    pub start: ZVertex,
    pub middles: Vec<ZVertex>,
    pub end: ZVertex,
}

impl OrbitQuiver {
    pub fn spec(&self) -> &DynkinSpec {
        &self.spec
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Orbit representatives, in lexicographic `(x, level)` order.
    pub fn vertices(&self) -> &[ZVertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn index_of(&self, v: ZVertex) -> usize {
        self.index[&self.glide.canonical(v)]
    }

    /// Representative of the orbit of an arbitrary `ZΔ` vertex.
    pub fn representative(&self, v: ZVertex) -> ZVertex {
        self.glide.canonical(v)
    }

    /// `τ` as a permutation of vertex indices.
    pub fn tau_permutation(&self) -> &[usize] {
        &self.tau
    }

    /// `x`-width of the strip that holds the representatives (translation of `G²`).
    pub fn strip_width(&self) -> i64 {
        self.glide.period
    }
}

pub fn build_orbit_quiver(spec: &DynkinSpec, p: u64) -> Result<OrbitQuiver> {
    if p == 0 {
        return Err(Error::InvalidRepetition(p));
    }
    let glide = Glide::new(*spec, p)?;
    let mut index = BTreeMap::new();
    for x in 0..glide.period {
        for l in levels(spec) {
            index.insert(glide.canonical(ZVertex::new(x, l)), 0);
        }
    }
    let vertices: Vec<ZVertex> = index.keys().copied().collect();
    for (i, v) in vertices.iter().enumerate() {
        index.insert(*v, i);
    }
    for &v in &vertices {
        if glide.canonical(v) != v || glide.canonical(glide.apply(v)) != v {
            return Err(Error::InconsistentGlide(
                "vertex maps to two representatives",
            ));
        }
    }

    let tau_perm: Vec<usize> = vertices
        .iter()
        .map(|&v| index[&glide.canonical(tau(v))])
        .collect();
    let mut seen = alloc::vec![false; vertices.len()];
    for &t in &tau_perm {
        if core::mem::replace(&mut seen[t], true) {
            return Err(Error::InconsistentGlide("tau is not a bijection on orbits"));
        }
    }

    let mut arrows = Vec::new();
    for (j, &z) in vertices.iter().enumerate() {
        for e in predecessors(spec, z) {
            arrows.push((index[&glide.canonical(e)], j));
        }
    }

    Ok(OrbitQuiver {
        spec: *spec,
        p,
        glide,
        vertices,
        index,
        tau: tau_perm,
        arrows,
    })
}

/// One relation per vertex `Z`, in vertex order.
pub fn mesh_relations(q: &OrbitQuiver) -> Vec<MeshRelation> {
    q.vertices
        .iter()
        .enumerate()
        .map(|(j, &z)| MeshRelation {
            start: q.vertices[q.tau[j]],
            middles: predecessors(&q.spec, z)
                .into_iter()
                .map(|e| q.glide.canonical(e))
                .collect(),
            end: z,
        })
        .collect()
}

/// Vertices × relations matrix of the mesh relations.
pub fn mesh_relation_matrix(q: &OrbitQuiver) -> IntMatrix {
    let rels = mesh_relations(q);
    let mut m = IntMatrix::zeros(q.len(), rels.len());
    for (j, r) in rels.iter().enumerate() {
        m[(q.index[&r.start], j)] += BigInt::one();
        m[(q.index[&r.end], j)] += BigInt::one();
        for e in &r.middles {
            m[(q.index[e], j)] -= BigInt::one();
        }
    }
    m
}

pub fn k0_via_ar(spec: &DynkinSpec, p: u64) -> Result<FgAbelianGroup> {
    let q = build_orbit_quiver(spec, p)?;
    Ok(cokernel(&mesh_relation_matrix(&q)))
}

/// Vertex count of the orbit quiver without building it.
pub fn orbit_vertex_count(spec: &DynkinSpec, p: u64) -> u64 {
    p.saturating_mul(spec.cluster_vertex_count() as u64)
}

/// Whether two integer combinations of vertices have the same class in K₀.
pub fn equal_in_k0(q: &OrbitQuiver, lhs: &[(ZVertex, i64)], rhs: &[(ZVertex, i64)]) -> bool {
    let mut diff = alloc::vec![BigInt::zero(); q.len()];
    for &(v, c) in lhs {
        diff[q.index_of(v)] += c;
    }
    for &(v, c) in rhs {
        diff[q.index_of(v)] -= c;
    }
    column_span_contains(&mesh_relation_matrix(q), &diff)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter_k0::{k0_repetitive, K0Job};

    fn specs(max_n: usize) -> Vec<DynkinSpec> {
        let mut out: Vec<DynkinSpec> = (1..=max_n).map(|n| DynkinSpec::a(n).unwrap()).collect();
        out.extend((3..=max_n).map(|n| DynkinSpec::d(n).unwrap()));
        out
    }

    #[test]
    fn sigma_examples() {
        let a3 = DynkinSpec::a(3).unwrap();
        assert_eq!(shift_sigma(&a3, ZVertex::new(0, 1)), ZVertex::new(1, 3));
        let d5 = DynkinSpec::d(5).unwrap();
        assert_eq!(shift_sigma(&d5, ZVertex::new(0, 0)), ZVertex::new(4, 1));
        let d6 = DynkinSpec::d(6).unwrap();
        assert_eq!(shift_sigma(&d6, ZVertex::new(0, 0)), ZVertex::new(5, 0));
    }

    #[test]
    fn sigma_squared_is_tau_power() {
        for spec in specs(10) {
            let h = spec.coxeter_number() as i64;
            for l in levels(&spec) {
                for x in -3..3 {
                    let v = ZVertex::new(x, l);
                    let twice = shift_sigma(&spec, shift_sigma(&spec, v));
                    assert_eq!(twice, ZVertex::new(x + h, l), "{spec} at {v}");
                }
            }
        }
    }

    #[test]
    fn sigma_is_a_quiver_automorphism() {
        for spec in specs(8) {
            for l in levels(&spec) {
                let v = ZVertex::new(0, l);
                let mut image: Vec<ZVertex> = successors(&spec, v)
                    .into_iter()
                    .map(|w| shift_sigma(&spec, w))
                    .collect();
                let mut expected = successors(&spec, shift_sigma(&spec, v));
                image.sort();
                expected.sort();
                assert_eq!(image, expected, "{spec} level {l}");
            }
        }
    }

    #[test]
    fn vertex_counts() {
        assert_eq!(
            build_orbit_quiver(&DynkinSpec::a(1).unwrap(), 1)
                .unwrap()
                .len(),
            2
        );
        assert_eq!(
            build_orbit_quiver(&DynkinSpec::a(3).unwrap(), 3)
                .unwrap()
                .len(),
            27
        );
        assert_eq!(
            build_orbit_quiver(&DynkinSpec::d(3).unwrap(), 2)
                .unwrap()
                .len(),
            18
        );
        for spec in specs(8) {
            for p in 1..=8 {
                let q = build_orbit_quiver(&spec, p).unwrap();
                assert_eq!(q.len() as u64, orbit_vertex_count(&spec, p), "{spec} p={p}");
            }
        }
    }

    #[test]
    fn tau_permutes_and_meshes_are_symmetric() {
        for spec in specs(6) {
            for p in 1..=4 {
                let q = build_orbit_quiver(&spec, p).unwrap();
                let mut t = q.tau_permutation().to_vec();
                t.sort_unstable();
                assert_eq!(t, (0..q.len()).collect::<Vec<_>>());
                // E -> Z implies tau Z -> E, with multiplicity
                let mut arrows = q.arrows().to_vec();
                let mut partners: Vec<(usize, usize)> = q
                    .arrows()
                    .iter()
                    .map(|&(e, z)| (q.tau_permutation()[z], e))
                    .collect();
                arrows.sort_unstable();
                partners.sort_unstable();
                assert_eq!(arrows, partners, "{spec} p={p}");
            }
        }
    }

    #[test]
    fn a1_relations() {
        let spec = DynkinSpec::a(1).unwrap();
        let q = build_orbit_quiver(&spec, 1).unwrap();
        assert!(q.arrows().is_empty());
        let m = mesh_relation_matrix(&q);
        assert_eq!(m, IntMatrix::from_rows(&[[1, 1], [1, 1]]));
        assert_eq!(mesh_relations(&q).len(), 2);
    }

    #[test]
    fn d3_middles() {
        let spec = DynkinSpec::d(3).unwrap();
        let q = build_orbit_quiver(&spec, 2).unwrap();
        let rels = mesh_relations(&q);
        assert_eq!(rels.len(), q.len());
        for r in &rels {
            let mut lv: Vec<usize> = r.middles.iter().map(|v| v.level).collect();
            lv.sort_unstable();
            match r.end.level {
                2 => assert_eq!(lv, [0, 1]),
                _ => assert_eq!(lv, [2]),
            }
        }
    }

    #[test]
    fn shift_acts_as_minus_one_in_k0() {
        for spec in specs(6) {
            for p in 1..=3 {
                let q = build_orbit_quiver(&spec, p).unwrap();
                for &v in q.vertices() {
                    let sv = shift_sigma(&spec, v);
                    assert!(
                        equal_in_k0(&q, &[(sv, 1)], &[(v, -1)]),
                        "{spec} p={p} at {v}"
                    );
                }
            }
        }
    }

    #[test]
    fn examples_agree_with_coxeter_route() {
        let a2 = DynkinSpec::a(2).unwrap();
        assert!(k0_via_ar(&a2, 1).unwrap().is_trivial());
        let a3 = DynkinSpec::a(3).unwrap();
        assert_eq!(k0_via_ar(&a3, 4).unwrap(), FgAbelianGroup::free(3));
        let d3 = DynkinSpec::d(3).unwrap();
        let job = K0Job::new(d3, 2).unwrap();
        assert_eq!(k0_via_ar(&d3, 2).unwrap(), k0_repetitive(&job));
    }

    #[test]
    fn rejects_p_zero() {
        assert!(build_orbit_quiver(&DynkinSpec::a(2).unwrap(), 0).is_err());
    }
}
