//! Exact rational polyhedral cones: H-representation, V-representation via
//! the double description method, dimension, membership and containment.
//!
//! All arithmetic is exact. Rays are normalised to primitive integer vectors
//! with their geometric orientation preserved (flipping a ray would change
//! the cone); lineality generators are sign-normalised since they are
//! direction free. Output is deterministic: the lineality basis is the RREF
//! basis of the lineality space and rays are reduced modulo lineality,
//! deduplicated and sorted.

use std::collections::BTreeSet;

use num::{BigInt, Zero};

use crate::linalg::{
    canonical_basis, dot, ints_to_rats, primitive_integer, rank, rref, sign_normalized_primitive,
    sub_scaled, Rat,
};
use crate::{Error, Result};

/// Cone as equalities `⟨e, v⟩ = 0` and inequalities `⟨b, v⟩ ≤ 0`.
#[derive(Clone, Debug)]
pub struct ConeH {
    ambient: usize,
    equalities: Vec<Vec<Rat>>,
    inequalities: Vec<Vec<Rat>>,
}

impl ConeH {
    pub fn new(ambient: usize) -> Self {
        ConeH {
            ambient,
            equalities: Vec::new(),
            inequalities: Vec::new(),
        }
    }

    pub fn with_constraints(
        ambient: usize,
        equalities: Vec<Vec<Rat>>,
        inequalities: Vec<Vec<Rat>>,
    ) -> Result<Self> {
        let mut c = ConeH::new(ambient);
        for e in equalities {
            c.push_equality(e)?;
        }
        for b in inequalities {
            c.push_inequality(b)?;
        }
        Ok(c)
    }

    pub fn push_equality(&mut self, v: Vec<Rat>) -> Result<()> {
        if v.len() != self.ambient {
            return Err(Error::AmbientMismatch {
                expected: self.ambient,
                got: v.len(),
            });
        }
        self.equalities.push(v);
        Ok(())
    }

    pub fn push_inequality(&mut self, v: Vec<Rat>) -> Result<()> {
        if v.len() != self.ambient {
            return Err(Error::AmbientMismatch {
                expected: self.ambient,
                got: v.len(),
            });
        }
        self.inequalities.push(v);
        Ok(())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn equalities(&self) -> &[Vec<Rat>] {
        &self.equalities
    }

    pub fn inequalities(&self) -> &[Vec<Rat>] {
        &self.inequalities
    }

    /// Equalities as sign-normalised primitive integer vectors, deduplicated
    /// and sorted.
    pub fn canonical_equalities(&self) -> Vec<Vec<BigInt>> {
        let set: BTreeSet<Vec<BigInt>> = self
            .equalities
            .iter()
            .map(|e| sign_normalized_primitive(e))
            .collect();
        set.into_iter().collect()
    }

    /// Inequalities as primitive integer vectors (orientation preserved),
    /// deduplicated and sorted.
    pub fn canonical_inequalities(&self) -> Vec<Vec<BigInt>> {
        let set: BTreeSet<Vec<BigInt>> = self
            .inequalities
            .iter()
            .map(|b| primitive_integer(b))
            .collect();
        set.into_iter().collect()
    }
}

/// Cone as a lineality basis plus extreme rays modulo lineality, all
/// primitive integer vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeV {
    pub ambient: usize,
    pub lineality: Vec<Vec<BigInt>>,
    pub rays: Vec<Vec<BigInt>>,
}

impl ConeV {
    pub fn dim(&self) -> usize {
        let mut rows: Vec<Vec<Rat>> = self.lineality.iter().map(|v| ints_to_rats(v)).collect();
        rows.extend(self.rays.iter().map(|v| ints_to_rats(v)));
        rank(&rows)
    }
}

#[derive(Clone)]
struct DdRay {
    v: Vec<Rat>,
    active: BTreeSet<usize>,
}

/// Incremental double description state: the represented cone is always
/// `span(lineality) + cone(rays)`, with each ray carrying the set of
/// processed inequalities it satisfies with equality.
#[derive(Clone)]
pub struct DdState {
    ambient: usize,
    equalities: Vec<Vec<Rat>>,
    inequalities: Vec<Vec<Rat>>,
    lineality: Vec<Vec<Rat>>,
    rays: Vec<DdRay>,
}

impl DdState {
    pub fn new(ambient: usize) -> Self {
        let mut lineality = Vec::with_capacity(ambient);
        for i in 0..ambient {
            let mut e = vec![Rat::zero(); ambient];
            e[i] = crate::linalg::rat(1);
            lineality.push(e);
        }
        DdState {
            ambient,
            equalities: Vec::new(),
            inequalities: Vec::new(),
            lineality,
            rays: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Values of a linear functional on all current generators. Used by the
    /// arrangement code to decide whether a hyperplane splits the cone.
    pub fn generator_values(&self, normal: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
        let lin = self.lineality.iter().map(|l| dot(normal, l)).collect();
        let ray = self.rays.iter().map(|r| dot(normal, &r.v)).collect();
        (lin, ray)
    }

    /// Sum of all extreme rays: a relative-interior point (interior when the
    /// cone is full dimensional), with zero lineality component.
    pub fn interior_witness(&self) -> Vec<Rat> {
        let mut w = vec![Rat::zero(); self.ambient];
        for r in &self.rays {
            for (acc, x) in w.iter_mut().zip(&r.v) {
                *acc += x;
            }
        }
        w
    }

    pub fn lineality_generators(&self) -> &[Vec<Rat>] {
        &self.lineality
    }

    /// Intersect with `⟨normal, v⟩ = 0` (equality) or `⟨normal, v⟩ ≤ 0`.
    pub fn insert(&mut self, normal: &[Rat], is_equality: bool) {
        assert_eq!(normal.len(), self.ambient);
        let lin_vals: Vec<Rat> = self.lineality.iter().map(|l| dot(normal, l)).collect();
        if let Some(idx) = lin_vals.iter().position(|x| !x.is_zero()) {
            self.insert_hitting_lineality(normal, is_equality, idx, &lin_vals);
        } else {
            self.insert_splitting_rays(normal, is_equality);
        }
        if is_equality {
            self.equalities.push(normal.to_vec());
        } else {
            self.inequalities.push(normal.to_vec());
        }
    }

    fn insert_hitting_lineality(
        &mut self,
        normal: &[Rat],
        is_equality: bool,
        idx: usize,
        lin_vals: &[Rat],
    ) {
        let l0 = self.lineality.remove(idx);
        let v0 = lin_vals[idx].clone();
        let mut new_lin = Vec::with_capacity(self.lineality.len());
        for (j, l) in self.lineality.iter().enumerate() {
            let val = if j < idx {
                &lin_vals[j]
            } else {
                &lin_vals[j + 1]
            };
            new_lin.push(sub_scaled(l, &l0, &(val / &v0)));
        }
        self.lineality = new_lin;
        let k = self.inequalities.len();
        for r in &mut self.rays {
            let c = dot(normal, &r.v) / &v0;
            r.v = sub_scaled(&r.v, &l0, &c);
            if !is_equality {
                r.active.insert(k);
            }
        }
        if !is_equality {
            // l0 was in the lineality, hence orthogonal to everything
            // processed so far
            let active: BTreeSet<usize> = (0..k).collect();
            let v = if v0 < Rat::zero() {
                l0
            } else {
                l0.iter().map(|x| -x).collect()
            };
            self.rays.push(DdRay { v, active });
        }
    }

    fn insert_splitting_rays(&mut self, normal: &[Rat], is_equality: bool) {
        let vals: Vec<Rat> = self.rays.iter().map(|r| dot(normal, &r.v)).collect();
        let k = self.inequalities.len();
        let mut kept: Vec<DdRay> = Vec::new();
        let mut new_rays: Vec<DdRay> = Vec::new();
        let pos: Vec<usize> = (0..self.rays.len())
            .filter(|&i| vals[i] > Rat::zero())
            .collect();
        let neg: Vec<usize> = (0..self.rays.len())
            .filter(|&i| vals[i] < Rat::zero())
            .collect();
        for (p, m) in pos.iter().flat_map(|&p| neg.iter().map(move |&m| (p, m))) {
            if !self.adjacent(p, m) {
                continue;
            }
            let rp = &self.rays[p];
            let rm = &self.rays[m];
            // positive combination landing on the hyperplane
            let v: Vec<Rat> =
                rp.v.iter()
                    .zip(&rm.v)
                    .map(|(xp, xm)| &vals[p] * xm - &vals[m] * xp)
                    .collect();
            let mut active: BTreeSet<usize> = rp.active.intersection(&rm.active).copied().collect();
            if !is_equality {
                active.insert(k);
            }
            new_rays.push(DdRay { v, active });
        }
        for (i, r) in std::mem::take(&mut self.rays).into_iter().enumerate() {
            if vals[i].is_zero() {
                let mut r = r;
                if !is_equality {
                    r.active.insert(k);
                }
                kept.push(r);
            } else if vals[i] < Rat::zero() && !is_equality {
                kept.push(r);
            }
        }
        kept.extend(new_rays);
        self.rays = kept;
    }

    /// Combinatorial adjacency test on the pointed quotient cone.
    fn adjacent(&self, p: usize, m: usize) -> bool {
        let z: BTreeSet<usize> = self.rays[p]
            .active
            .intersection(&self.rays[m].active)
            .copied()
            .collect();
        for (i, r) in self.rays.iter().enumerate() {
            if i == p || i == m {
                continue;
            }
            if z.is_subset(&r.active) {
                return false;
            }
        }
        true
    }

    /// Canonical V-representation: RREF lineality basis; rays reduced modulo
    /// lineality, scaled primitive, filtered to the extreme ones,
    /// deduplicated and sorted.
    pub fn to_cone_v(&self) -> ConeV {
        let lineality = canonical_basis(&self.lineality);
        let lin_dim = lineality.len();
        let mut lin_rref: Vec<Vec<Rat>> = self.lineality.to_vec();
        let pivots = rref(&mut lin_rref);

        let mut rays: BTreeSet<Vec<BigInt>> = BTreeSet::new();
        for r in &self.rays {
            let mut v = r.v.clone();
            for (row, &p) in lin_rref.iter().zip(&pivots) {
                let c = v[p].clone();
                if !c.is_zero() {
                    v = sub_scaled(&v, row, &c);
                }
            }
            if v.iter().all(|x| x.is_zero()) {
                continue;
            }
            if self.ray_is_extreme(&v, lin_dim) {
                rays.insert(primitive_integer(&v));
            }
        }
        ConeV {
            ambient: self.ambient,
            lineality,
            rays: rays.into_iter().collect(),
        }
    }

    fn ray_is_extreme(&self, v: &[Rat], lin_dim: usize) -> bool {
        let mut active_rows: Vec<Vec<Rat>> = self.equalities.to_vec();
        for b in &self.inequalities {
            if dot(b, v).is_zero() {
                active_rows.push(b.clone());
            }
        }
        self.ambient - rank(&active_rows) == lin_dim + 1
    }
}

/// Exact V-representation of an H-cone, deterministic up to nothing — the
/// output is canonical.
pub fn double_description(c: &ConeH) -> ConeV {
    let mut dd = DdState::new(c.ambient_dim());
    for e in c.equalities() {
        dd.insert(e, true);
    }
    for b in c.inequalities() {
        dd.insert(b, false);
    }
    dd.to_cone_v()
}

/// Dimension of the linear span of the cone.
pub fn cone_dim(c: &ConeH) -> usize {
    double_description(c).dim()
}

/// Exact membership test.
pub fn contains_point(c: &ConeH, p: &[Rat]) -> Result<bool> {
    if p.len() != c.ambient_dim() {
        return Err(Error::AmbientMismatch {
            expected: c.ambient_dim(),
            got: p.len(),
        });
    }
    Ok(c.equalities().iter().all(|e| dot(e, p).is_zero())
        && c.inequalities().iter().all(|b| dot(b, p) <= Rat::zero()))
}

/// `a ⊆ b`, decided by checking every extreme ray and ± every lineality
/// generator of `a` against the constraints of `b`.
pub fn cone_subset(a: &ConeH, b: &ConeH) -> Result<bool> {
    if a.ambient_dim() != b.ambient_dim() {
        return Err(Error::AmbientMismatch {
            expected: a.ambient_dim(),
            got: b.ambient_dim(),
        });
    }
    let va = double_description(a);
    for l in &va.lineality {
        let p = ints_to_rats(l);
        let q: Vec<Rat> = p.iter().map(|x| -x).collect();
        if !contains_point(b, &p)? || !contains_point(b, &q)? {
            return Ok(false);
        }
    }
    for r in &va.rays {
        if !contains_point(b, &ints_to_rats(r))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Cone equality by mutual containment.
pub fn cone_eq(a: &ConeH, b: &ConeH) -> Result<bool> {
    Ok(cone_subset(a, b)? && cone_subset(b, a)?)
}

/// Constraint representation recovered from a V-representation, by running
/// double description on the polar cone.
pub fn v_to_h(v: &ConeV) -> ConeH {
    let polar = ConeH {
        ambient: v.ambient,
        equalities: v.lineality.iter().map(|l| ints_to_rats(l)).collect(),
        inequalities: v.rays.iter().map(|r| ints_to_rats(r)).collect(),
    };
    let polar_v = double_description(&polar);
    ConeH {
        ambient: v.ambient,
        equalities: polar_v.lineality.iter().map(|l| ints_to_rats(l)).collect(),
        inequalities: polar_v.rays.iter().map(|r| ints_to_rats(r)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat_vec;

    fn cone(ambient: usize, eqs: &[&[i64]], ineqs: &[&[i64]]) -> ConeH {
        ConeH::with_constraints(
            ambient,
            eqs.iter().map(|e| rat_vec(e)).collect(),
            ineqs.iter().map(|b| rat_vec(b)).collect(),
        )
        .unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn dd_single_ray() {
        let v = double_description(&cone(2, &[&[1, 1]], &[&[1, 0]]));
        assert!(v.lineality.is_empty());
        assert_eq!(v.rays, vec![ints(&[-1, 1])]);
    }

    #[test]
    fn dd_origin() {
        let v = double_description(&cone(2, &[&[1, 0], &[0, 1]], &[]));
        assert!(v.lineality.is_empty());
        assert!(v.rays.is_empty());
        assert_eq!(v.dim(), 0);
    }

    #[test]
    fn dd_two_rays() {
        let v = double_description(&cone(3, &[&[1, 1, 1]], &[&[1, 0, 0], &[0, 0, 1]]));
        assert!(v.lineality.is_empty());
        assert_eq!(v.rays, vec![ints(&[-1, 1, 0]), ints(&[0, 1, -1])]);
    }

    #[test]
    fn dd_octant() {
        let v = double_description(&cone(3, &[], &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]));
        assert!(v.lineality.is_empty());
        assert_eq!(
            v.rays,
            vec![ints(&[-1, 0, 0]), ints(&[0, -1, 0]), ints(&[0, 0, -1])]
        );
    }

    #[test]
    fn dd_halfspace_keeps_lineality() {
        let v = double_description(&cone(3, &[], &[&[1, 0, 0]]));
        assert_eq!(v.lineality.len(), 2);
        assert_eq!(v.rays, vec![ints(&[-1, 0, 0])]);
        assert_eq!(v.dim(), 3);
    }

    #[test]
    fn dd_implicit_equality() {
        // x <= 0, y <= 0, x + y >= 0 pins x = y = 0; z stays free
        let v = double_description(&cone(3, &[], &[&[1, 0, 0], &[0, 1, 0], &[-1, -1, 0]]));
        assert_eq!(v.lineality, vec![ints(&[0, 0, 1])]);
        assert!(v.rays.is_empty());
        assert_eq!(v.dim(), 1);
    }

    #[test]
    fn dd_redundant_constraints_do_not_change_output() {
        let base = double_description(&cone(3, &[&[1, 1, 1]], &[&[1, 0, 0], &[0, 0, 1]]));
        let redundant = double_description(&cone(
            3,
            &[&[1, 1, 1], &[2, 2, 2]],
            &[&[1, 0, 0], &[0, 0, 1], &[1, 0, 1], &[1, 0, 0]],
        ));
        assert_eq!(base, redundant);
    }

    #[test]
    fn cone_dim_examples() {
        assert_eq!(cone_dim(&cone(2, &[&[1, 0]], &[])), 1);
        assert_eq!(cone_dim(&cone(2, &[&[1, 0], &[0, 1]], &[])), 0);
        assert_eq!(cone_dim(&cone(3, &[], &[])), 3);
    }

    #[test]
    fn cone_dim_monotone_under_constraints() {
        let mut c = cone(3, &[&[1, 1, 1]], &[]);
        let mut prev = cone_dim(&c);
        for extra in [&[1i64, 0, 0], &[0, 0, 1], &[0, 1, 0]] {
            c.push_inequality(rat_vec(extra)).unwrap();
            let d = cone_dim(&c);
            assert!(d <= prev);
            prev = d;
        }
    }

    #[test]
    fn membership_examples() {
        let c = cone(3, &[&[1, 1, 1]], &[&[1, 0, 0], &[0, 0, 1]]);
        assert!(contains_point(&c, &rat_vec(&[-1, 1, 0])).unwrap());
        assert!(contains_point(&c, &rat_vec(&[0, 0, 0])).unwrap());
        assert!(!contains_point(&c, &rat_vec(&[1, -1, 0])).unwrap());
        assert!(contains_point(&c, &rat_vec(&[1, -1])).is_err());
    }

    #[test]
    fn subset_examples() {
        let ray = cone(2, &[&[1, 1]], &[&[1, 0]]);
        let line = cone(2, &[&[1, 1]], &[]);
        assert!(cone_subset(&ray, &line).unwrap());
        assert!(!cone_subset(&line, &ray).unwrap());
        assert!(cone_eq(&ray, &ray).unwrap());
    }

    #[test]
    fn rays_and_lineality_satisfy_constraints() {
        let cones = [
            cone(3, &[&[1, 1, 1]], &[&[1, 0, 0], &[0, 0, 1]]),
            cone(3, &[], &[&[1, 0, 0], &[0, 1, 0]]),
            cone(4, &[&[1, 1, 0, 0]], &[&[0, 1, 1, 0], &[0, 0, 1, 1]]),
        ];
        for c in &cones {
            let v = double_description(c);
            for r in &v.rays {
                assert!(contains_point(c, &ints_to_rats(r)).unwrap());
            }
            for l in &v.lineality {
                let p = ints_to_rats(l);
                let q: Vec<Rat> = p.iter().map(|x| -x).collect();
                assert!(contains_point(c, &p).unwrap());
                assert!(contains_point(c, &q).unwrap());
            }
        }
    }

    #[test]
    fn polar_round_trip() {
        let cones = [
            cone(2, &[&[1, 1]], &[&[1, 0]]),
            cone(3, &[&[1, 1, 1]], &[&[1, 0, 0], &[0, 0, 1]]),
            cone(3, &[], &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
            cone(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]], &[]),
            cone(4, &[], &[&[1, 2, 0, 0], &[0, -1, 1, 0]]),
        ];
        for c in &cones {
            let v = double_description(c);
            let back = v_to_h(&v);
            assert!(cone_eq(c, &back).unwrap());
        }
    }

    /// Seeded random cones in dimensions 2..=5: every generator must lie in
    /// the cone and the polar round trip must reproduce it, which catches
    /// both missing and spurious extreme rays.
    #[test]
    fn randomized_polar_round_trips() {
        use crate::linalg::rat;
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for ambient in 2..=5 {
            for _ in 0..40 {
                let mut c = ConeH::new(ambient);
                for _ in 0..(next() % 2) {
                    let v: Vec<Rat> = (0..ambient).map(|_| rat((next() % 5) as i64 - 2)).collect();
                    if v.iter().any(|x| !x.is_zero()) {
                        c.push_equality(v).unwrap();
                    }
                }
                for _ in 0..=(next() % 5) {
                    let v: Vec<Rat> = (0..ambient).map(|_| rat((next() % 5) as i64 - 2)).collect();
                    if v.iter().any(|x| !x.is_zero()) {
                        c.push_inequality(v).unwrap();
                    }
                }
                let v = double_description(&c);
                for r in &v.rays {
                    assert!(contains_point(&c, &ints_to_rats(r)).unwrap());
                }
                for l in &v.lineality {
                    let p = ints_to_rats(l);
                    let q: Vec<Rat> = p.iter().map(|x| -x).collect();
                    assert!(contains_point(&c, &p).unwrap());
                    assert!(contains_point(&c, &q).unwrap());
                }
                let back = v_to_h(&v);
                assert!(cone_eq(&c, &back).unwrap());
            }
        }
    }
}
