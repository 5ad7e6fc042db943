//! Finite permutation groups: closure, cyclic subgroups, subnormality,
//! conjugacy statistics.
//!
//! Groups are materialized fully (every group in scope has modest order;
//! the sporadic Hurwitz groups are handled as data and never built). The
//! canonical element ordering is lexicographic on one-line images, and
//! closure enumerates breadth-first by word length so element lists are
//! reproducible.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A permutation of `{0, ..., deg-1}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u16>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        assert!(degree <= u16::MAX as usize, "degree out of range");
        Perm {
            images: (0..degree as u16).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let deg = images.len();
        if deg > u16::MAX as usize {
            return Err(Error::InvalidPerm(format!("degree {deg} is out of range")));
        }
        let mut seen = vec![false; deg];
        for &x in &images {
            if x >= deg {
                return Err(Error::InvalidPerm(format!("image {x} out of range for degree {deg}")));
            }
            if seen[x] {
                return Err(Error::InvalidPerm(format!("image {x} repeated")));
            }
            seen[x] = true;
        }
        Ok(Perm {
            images: images.into_iter().map(|x| x as u16).collect(),
        })
    }

    /// Builds a permutation from disjoint cycles on `0..degree`.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Self {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                let y = cycle[(i + 1) % cycle.len()];
                assert!(x < degree && y < degree);
                images[x] = y as u16;
            }
        }
        let p = Perm { images };
        debug_assert!(p.is_valid(), "cycles were not disjoint");
        p
    }

    fn is_valid(&self) -> bool {
        let mut seen = vec![false; self.images.len()];
        self.images.iter().all(|&x| {
            let ok = (x as usize) < self.images.len() && !seen[x as usize];
            if ok {
                seen[x as usize] = true;
            }
            ok
        })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u16; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u16;
        }
        Perm { images }
    }

    /// `k^-1 * self * k`.
    pub fn conjugate_by(&self, k: &Perm) -> Perm {
        k.inverse().compose(self).compose(k)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u16 == x)
    }

    pub fn order(&self) -> u64 {
        let mut order = 1u64;
        let mut seen = vec![false; self.images.len()];
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            order = num_integer::lcm(order, len);
        }
        order
    }

    pub fn pow(&self, e: u64) -> Perm {
        let mut acc = Perm::identity(self.degree());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.compose(&base);
            }
        }
        acc
    }

    /// Number of fixed points of the permutation.
    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|&(i, &x)| i as u16 == x).count()
    }
}

impl std::fmt::Debug for Perm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

impl Serialize for Perm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.images().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(d)?;
        Perm::from_images(images).map_err(serde::de::Error::custom)
    }
}

pub const DEFAULT_ORDER_CAP: usize = 1_000_000;

/// A fully materialized permutation group.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Vec<u16>, usize>,
}

/// Conjugacy statistics used for feature extraction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConjStats {
    pub class_count: usize,
    pub involution_count: usize,
    pub involution_class_count: usize,
}

impl PermGroup {
    /// Closes a generating set under composition and inverse.
    ///
    /// Enumeration is BFS by word length with each new level sorted
    /// lexicographically, so the element list is deterministic.
    pub fn closure(generators: &[Perm], cap: usize) -> Result<PermGroup> {
        let degree = generators.first().map_or(1, Perm::degree);
        if generators.iter().any(|g| g.degree() != degree) {
            return Err(Error::InvalidPerm("generators have mixed degrees".into()));
        }
        let gens: Vec<Perm> = generators.iter().filter(|g| !g.is_identity()).cloned().collect();
        let id = Perm::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::new();
        index.insert(id.images.clone(), 0usize);
        let mut frontier = vec![id];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for w in &frontier {
                for g in &gens {
                    let p = w.compose(g);
                    if !index.contains_key(&p.images) {
                        index.insert(p.images.clone(), usize::MAX); // placeholder
                        next.push(p);
                    }
                }
            }
            next.sort();
            next.dedup();
            for p in &next {
                if elements.len() >= cap {
                    return Err(Error::OrderCapExceeded { cap });
                }
                *index.get_mut(&p.images).unwrap() = elements.len();
                elements.push(p.clone());
            }
            frontier = next;
        }
        Ok(PermGroup {
            degree,
            generators: gens,
            elements,
            index,
        })
    }

    pub fn from_generators(generators: &[Perm]) -> Result<PermGroup> {
        PermGroup::closure(generators, DEFAULT_ORDER_CAP)
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::from_generators(&[Perm::identity(degree)]).expect("trivial closure")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn contains(&self, p: &Perm) -> bool {
        p.degree() == self.degree && self.index.contains_key(&p.images)
    }

    pub fn element_index(&self, p: &Perm) -> Option<usize> {
        self.index.get(&p.images).copied()
    }

    pub fn is_subgroup_of(&self, g: &PermGroup) -> bool {
        self.degree == g.degree && self.elements.iter().all(|e| g.contains(e))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..]
                .iter()
                .all(|b| a.compose(b) == b.compose(a))
        })
    }

    /// One entry per distinct cyclic subgroup, `(generator, order)`, sorted by
    /// order and then by the generator's one-line images. The generator is the
    /// least element (canonical ordering) generating that subgroup.
    pub fn cyclic_subgroups(&self) -> Vec<(Perm, u64)> {
        let mut by_key: BTreeMap<Vec<usize>, (Perm, u64)> = BTreeMap::new();
        for g in &self.elements {
            let order = g.order();
            // elements of <g>, as sorted indices
            let mut members = Vec::new();
            let mut p = Perm::identity(self.degree);
            loop {
                members.push(self.element_index(&p).expect("closed group"));
                p = p.compose(g);
                if p.is_identity() {
                    break;
                }
            }
            members.sort_unstable();
            match by_key.get_mut(&members) {
                Some((best, _)) => {
                    if g < best {
                        *best = g.clone();
                    }
                }
                None => {
                    by_key.insert(members, (g.clone(), order));
                }
            }
        }
        let mut out: Vec<(Perm, u64)> = by_key.into_values().collect();
        out.sort_by(|a, b| (a.1, &a.0).cmp(&(b.1, &b.0)));
        out
    }

    /// Conjugacy classes as lists of element indices, ordered by their least
    /// element index.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut class = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for k in &self.generators {
                    let c = self.elements[i].conjugate_by(k);
                    let j = self.element_index(&c).expect("closed under conjugation");
                    if !seen[j] {
                        seen[j] = true;
                        class.push(j);
                        stack.push(j);
                    }
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    pub fn conjugacy_and_involutions(&self) -> ConjStats {
        let classes = self.conjugacy_classes();
        let mut involution_count = 0;
        let mut involution_class_count = 0;
        for class in &classes {
            if self.elements[class[0]].order() == 2 {
                involution_class_count += 1;
                involution_count += class.len();
            }
        }
        ConjStats {
            class_count: classes.len(),
            involution_count,
            involution_class_count,
        }
    }

    /// `[G, G] = G`?
    pub fn is_perfect(&self) -> Result<bool> {
        let mut comms = Vec::new();
        for a in &self.generators {
            for b in &self.generators {
                let c = a.inverse().compose(&b.inverse()).compose(a).compose(b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        if comms.is_empty() {
            // abelian (or trivial): perfect only if trivial
            return Ok(self.order() == 1);
        }
        let derived = normal_closure_in(&comms, &self.generators, self.order())?;
        Ok(derived.order() == self.order())
    }
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PermGroup(degree {}, order {})", self.degree, self.order())
    }
}

/// Smallest subgroup containing `seed` and closed under conjugation by
/// `conjugators` (which must normalize some common overgroup of order
/// at most `cap`).
fn normal_closure_in(seed: &[Perm], conjugators: &[Perm], cap: usize) -> Result<PermGroup> {
    let mut gens: Vec<Perm> = seed.to_vec();
    loop {
        let group = PermGroup::closure(&gens, cap)?;
        let mut grew = false;
        let mut new_gens = gens.clone();
        for e in group.elements() {
            for k in conjugators {
                let c = e.conjugate_by(k);
                if !group.contains(&c) {
                    new_gens.push(c);
                    grew = true;
                }
            }
        }
        if !grew {
            return Ok(group);
        }
        gens = new_gens;
    }
}

/// True iff the chain `K_0 = G`, `K_{i+1} = <H^{K_i}>` stabilizes at `H`.
pub fn is_subnormal(h: &PermGroup, g: &PermGroup) -> Result<bool> {
    if !h.is_subgroup_of(g) {
        return Err(Error::NotASubgroup(format!(
            "order-{} group is not contained in the order-{} group",
            h.order(),
            g.order()
        )));
    }
    if h.order() == g.order() || h.order() == 1 {
        return Ok(true);
    }
    let mut k_gens: Vec<Perm> = g.generators().to_vec();
    let mut k_order = g.order();
    loop {
        let nc = normal_closure_in(h.generators(), &k_gens, k_order)?;
        if nc.order() == h.order() {
            return Ok(true);
        }
        if nc.order() == k_order {
            return Ok(false); // stabilized above H
        }
        k_gens = nc.elements().to_vec();
        k_order = nc.order();
    }
}

/// Direct conjugation check `k H k^-1 = H` for all generators `k` of `G`.
/// Retained as an independent oracle for [`is_subnormal`].
pub fn is_normal(h: &PermGroup, g: &PermGroup) -> Result<bool> {
    if !h.is_subgroup_of(g) {
        return Err(Error::NotASubgroup("normality test".into()));
    }
    for k in g.generators() {
        for e in h.elements() {
            if !h.contains(&e.conjugate_by(k)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Constructors for the specific groups the bundled tables need.
pub mod standard {
    use super::*;

    pub fn cyclic(n: usize) -> Vec<Perm> {
        assert!(n >= 1);
        vec![Perm::from_cycles(n, &[&(0..n).collect::<Vec<_>>()])]
    }

    /// Dihedral group of order `2n` acting on `n` points.
    pub fn dihedral(n: usize) -> Vec<Perm> {
        assert!(n >= 3);
        let rot = Perm::from_cycles(n, &[&(0..n).collect::<Vec<_>>()]);
        let refl = Perm::from_images((0..n).map(|i| (n - i) % n).collect()).unwrap();
        vec![rot, refl]
    }

    pub fn symmetric(n: usize) -> Vec<Perm> {
        assert!(n >= 2);
        vec![
            Perm::from_cycles(n, &[&[0, 1]]),
            Perm::from_cycles(n, &[&(0..n).collect::<Vec<_>>()]),
        ]
    }

    pub fn alternating(n: usize) -> Vec<Perm> {
        assert!(n >= 3);
        let three = Perm::from_cycles(n, &[&[0, 1, 2]]);
        let long = if n % 2 == 1 {
            Perm::from_cycles(n, &[&(0..n).collect::<Vec<_>>()])
        } else {
            Perm::from_cycles(n, &[&(1..n).collect::<Vec<_>>()])
        };
        vec![three, long]
    }

    /// Generators of `A x B` acting on the disjoint union of the two domains.
    pub fn direct_product(a: &[Perm], b: &[Perm]) -> Vec<Perm> {
        let da = a.first().map_or(0, Perm::degree);
        let db = b.first().map_or(0, Perm::degree);
        let mut gens = Vec::new();
        for g in a {
            let mut images: Vec<usize> = (0..da + db).collect();
            for (i, img) in images.iter_mut().enumerate().take(da) {
                *img = g.apply(i);
            }
            gens.push(Perm::from_images(images).unwrap());
        }
        for g in b {
            let mut images: Vec<usize> = (0..da + db).collect();
            for i in 0..db {
                images[da + i] = da + g.apply(i);
            }
            gens.push(Perm::from_images(images).unwrap());
        }
        gens
    }

    pub fn klein_four() -> Vec<Perm> {
        vec![
            Perm::from_cycles(4, &[&[0, 1]]),
            Perm::from_cycles(4, &[&[2, 3]]),
        ]
    }

    /// `PSL(2, p)` on the projective line over `F_p`, for odd prime `p`.
    /// Points are `0..p` for the field and `p` for infinity; generated by
    /// `x -> x + 1` and `x -> -1/x`.
    pub fn psl2(p: usize) -> Vec<Perm> {
        assert!(p >= 3 && p % 2 == 1);
        let inf = p;
        let inv = |x: usize| -> usize {
            // modular inverse by Fermat
            let mut acc = 1usize;
            let mut base = x % p;
            let mut e = p - 2;
            while e > 0 {
                if e & 1 == 1 {
                    acc = acc * base % p;
                }
                base = base * base % p;
                e >>= 1;
            }
            acc
        };
        let t = Perm::from_images((0..=p).map(|x| if x == inf { inf } else { (x + 1) % p }).collect())
            .unwrap();
        let s = Perm::from_images(
            (0..=p)
                .map(|x| {
                    if x == inf {
                        0
                    } else if x == 0 {
                        inf
                    } else {
                        (p - inv(x)) % p
                    }
                })
                .collect(),
        )
        .unwrap();
        vec![t, s]
    }

    /// `PSL(2, 8)` on the projective line over `F_8` (9 points).
    /// `F_8 = F_2[t]/(t^3 + t + 1)`, elements encoded as bit masks 0..8.
    pub fn psl2_8() -> Vec<Perm> {
        fn mul(a: u8, b: u8) -> u8 {
            let mut r = 0u8;
            for k in 0..3 {
                if (b >> k) & 1 == 1 {
                    r ^= a << k;
                }
            }
            // reduce degree-4 and degree-3 terms by t^3 = t + 1
            for d in [4, 3] {
                if (r >> d) & 1 == 1 {
                    r ^= 1 << d;
                    r ^= 0b011 << (d - 3);
                }
            }
            r & 7
        }
        fn inv(x: u8) -> u8 {
            // x^6 in the multiplicative group of order 7
            let x2 = mul(x, x);
            let x4 = mul(x2, x2);
            mul(x4, x2)
        }
        let inf = 8usize;
        let add_one =
            Perm::from_images((0..=8).map(|x| if x == inf { inf } else { x ^ 1 }).collect()).unwrap();
        let scale = Perm::from_images(
            (0..=8)
                .map(|x| if x == inf { inf } else { mul(x as u8, 0b010) as usize })
                .collect(),
        )
        .unwrap();
        let invert = Perm::from_images(
            (0..=8)
                .map(|x| {
                    if x == inf {
                        0
                    } else if x == 0 {
                        inf
                    } else {
                        inv(x as u8) as usize
                    }
                })
                .collect(),
        )
        .unwrap();
        vec![add_one, scale, invert]
    }

    /// `GL(2, 3)` on the 8 nonzero vectors of `F_3^2`; this is the full
    /// automorphism group of the genus-2 curve `y^2 = x(x^4 - 1)`.
    pub fn gl2_3() -> Vec<Perm> {
        let idx = |x: usize, y: usize| 3 * x + y - 1;
        let coords = |i: usize| ((i + 1) / 3, (i + 1) % 3);
        let lin = |m: [[usize; 2]; 2]| {
            Perm::from_images(
                (0..8)
                    .map(|i| {
                        let (x, y) = coords(i);
                        idx((m[0][0] * x + m[0][1] * y) % 3, (m[1][0] * x + m[1][1] * y) % 3)
                    })
                    .collect(),
            )
            .unwrap()
        };
        vec![
            lin([[1, 1], [0, 1]]),
            lin([[0, 2], [1, 0]]),
            lin([[1, 0], [0, 2]]),
        ]
    }

    /// The Pauli group `C_4 . D_4` of order 16 (SmallGroup(16,13)) acting on
    /// the 8 states `{i^k e_j}`.
    pub fn pauli_16() -> Vec<Perm> {
        let idx = |k: usize, phase: usize| 4 * k + phase;
        let x = Perm::from_images((0..8).map(|i| idx(1 - i / 4, i % 4)).collect()).unwrap();
        let z = Perm::from_images(
            (0..8)
                .map(|i| if i / 4 == 1 { idx(1, (i + 2) % 4) } else { i })
                .collect(),
        )
        .unwrap();
        let phase = Perm::from_images((0..8).map(|i| idx(i / 4, (i + 1) % 4)).collect()).unwrap();
        vec![x, z, phase]
    }

    /// The reduced projective automorphism group of the Fermat quartic,
    /// `(C_4 x C_4) : S_3` of order 96, as affine maps of `Z_4^2`.
    pub fn fermat_96() -> Vec<Perm> {
        let idx = |u: usize, v: usize| 4 * (u % 4) + (v % 4);
        let t1 = Perm::from_images((0..16).map(|i| idx(i / 4 + 1, i % 4)).collect()).unwrap();
        let t2 = Perm::from_images((0..16).map(|i| idx(i / 4, i % 4 + 1)).collect()).unwrap();
        let swap = Perm::from_images((0..16).map(|i| idx(i % 4, i / 4)).collect()).unwrap();
        let rot = Perm::from_images(
            (0..16).map(|i| idx(4 - i % 4, i / 4 + 4 - i % 4)).collect(),
        )
        .unwrap();
        vec![t1, t2, swap, rot]
    }

    /// `S_3 wr C_2` of order 72 (SmallGroup(72,40)) on 3 + 3 points.
    pub fn s3_wreath_c2() -> Vec<Perm> {
        vec![
            Perm::from_cycles(6, &[&[0, 1, 2]]),
            Perm::from_cycles(6, &[&[0, 1]]),
            Perm::from_cycles(6, &[&[0, 3], &[1, 4], &[2, 5]]),
        ]
    }

    /// The order-24 central `C_2`-extension of the order-12 dihedral group
    /// that acts on a genus-2 curve with signature `(0; 2, 4, 6)`: generated
    /// by an order-6 rotation `a` and an order-4 element `b` with `b^2` the
    /// central (hyperelliptic) involution and `b a b^-1 = a^-1 b^2`.
    ///
    /// Points are `(j, t, s)` in `Z_6 x Z_2 x Z_2`, indexed `12t + 2j + s`.
    pub fn extended_dihedral_24() -> Vec<Perm> {
        let idx = |j: usize, t: usize, s: usize| 12 * t + 2 * (j % 6) + (s % 2);
        let coords = |p: usize| (p % 12 / 2, p / 12, p % 2);
        let a = Perm::from_images(
            (0..24)
                .map(|p| {
                    let (j, t, s) = coords(p);
                    idx(j + 1, t, s)
                })
                .collect(),
        )
        .unwrap();
        let b = Perm::from_images(
            (0..24)
                .map(|p| {
                    let (j, t, s) = coords(p);
                    if t == 0 {
                        idx(6 - j, 1, s + j)
                    } else {
                        idx(6 - j, 0, s + j + 1)
                    }
                })
                .collect(),
        )
        .unwrap();
        vec![a, b]
    }

    /// Frobenius group `C_p : C_k` on `p` points, `x -> x + 1` and `x -> a x`
    /// where `a` has multiplicative order `k` mod `p`.
    pub fn frobenius(p: usize, a: usize) -> Vec<Perm> {
        assert!(p >= 3 && a > 1 && a < p);
        vec![
            Perm::from_images((0..p).map(|x| (x + 1) % p).collect()).unwrap(),
            Perm::from_images((0..p).map(|x| a * x % p).collect()).unwrap(),
        ]
    }
}
