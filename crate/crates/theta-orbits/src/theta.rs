//! The affine action of automorphisms on theta characteristics.
//!
//! Characteristics are identified with vectors `x` in `GF(2)^{2g}`; an
//! automorphism with integer symplectic matrix `R` acts by
//! `x -> R^T x + v mod 2` where `v_i = sum_{j<j'} R_ji R_j'i J_jj'`.
//! Writing `x = (u, w)`, the parity of the characteristic is the quadratic
//! form `q(x) = u . w`, which every such map preserves.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::gf2::{vstack, GF2Matrix, GF2Vector};
use crate::intmat::IntMatrix;
use crate::{Error, Result};

/// Enumeration bound: orbit decompositions walk all `2^{2g}` vectors.
pub const MAX_ORBIT_GENUS: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// The canonical intersection matrix `J = [[0, I_g], [-I_g, 0]]`.
pub fn canonical_j(genus: usize) -> IntMatrix {
    let mut j = IntMatrix::zeros(2 * genus, 2 * genus);
    for i in 0..genus {
        j[(i, genus + i)] = 1.into();
        j[(genus + i, i)] = (-1).into();
    }
    j
}

/// Does `R` preserve the canonical pairing, `R^T J R = J`?
pub fn is_symplectic(r: &IntMatrix) -> bool {
    if r.rows() != r.cols() || !r.rows().is_multiple_of(2) {
        return false;
    }
    let j = canonical_j(r.rows() / 2);
    r.transpose().mul(&j).mul(r) == j
}

/// The translation vector of the affine action:
/// `v_i = sum_{j<j'} R_ji R_j'i J_jj' mod 2`, evaluated literally.
///
/// The formula is meaningful for symplectic `R`; callers may warn on
/// non-symplectic input but the sum is always computable.
pub fn translation_vector(r: &IntMatrix) -> GF2Vector {
    assert_eq!(r.rows(), r.cols());
    assert_eq!(r.rows() % 2, 0);
    let n = r.rows();
    let j = canonical_j(n / 2);
    let mut v = GF2Vector::zeros(n);
    for i in 0..n {
        let mut acc = num_bigint::BigInt::zero();
        for jj in 0..n {
            for jp in jj + 1..n {
                if !j[(jj, jp)].is_zero() {
                    acc += &r[(jj, i)] * &r[(jp, i)] * &j[(jj, jp)];
                }
            }
        }
        if num_integer::Integer::is_odd(&acc) {
            v.set(i, true);
        }
    }
    v
}

/// One automorphism's action on characteristics: `x -> linear x + translation`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AffineMapGF2 {
    linear: GF2Matrix,
    translation: GF2Vector,
}

impl AffineMapGF2 {
    pub fn new(linear: GF2Matrix, translation: GF2Vector) -> Result<Self> {
        if linear.rows() != linear.cols() || linear.rows() != translation.len() {
            return Err(Error::DimensionMismatch("affine map shape".into()));
        }
        if linear.inverse().is_err() {
            return Err(Error::NotInvertible);
        }
        Ok(AffineMapGF2 { linear, translation })
    }

    pub fn identity(dim: usize) -> Self {
        AffineMapGF2 {
            linear: GF2Matrix::identity(dim),
            translation: GF2Vector::zeros(dim),
        }
    }

    /// Builds the characteristic action of an integer symplectic matrix:
    /// linear part `R^T mod 2`, translation from [`translation_vector`].
    pub fn from_symplectic(r: &IntMatrix) -> Result<Self> {
        if r.rows() != r.cols() || !r.rows().is_multiple_of(2) {
            return Err(Error::DimensionMismatch(format!(
                "expected a square 2g x 2g matrix, got {}x{}",
                r.rows(),
                r.cols()
            )));
        }
        AffineMapGF2::new(r.transpose().mod2(), translation_vector(r))
    }

    pub fn dim(&self) -> usize {
        self.translation.len()
    }

    pub fn linear(&self) -> &GF2Matrix {
        &self.linear
    }

    pub fn translation(&self) -> &GF2Vector {
        &self.translation
    }

    pub fn act(&self, x: &GF2Vector) -> Result<GF2Vector> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "map of dimension {} applied to vector of length {}",
                self.dim(),
                x.len()
            )));
        }
        let mut y = self.linear.mul_vec(x);
        y.xor_assign(&self.translation);
        Ok(y)
    }

    /// `self` after `other` as functions on characteristics.
    ///
    /// The linear parts are transposes, so the map of a group word
    /// `g1 g2 ... gk` is `map(gk) . ... . map(g1)`: fold with
    /// `acc = m.compose(&acc)`.
    pub fn compose(&self, other: &AffineMapGF2) -> AffineMapGF2 {
        let linear = self.linear.mul(&other.linear);
        let mut translation = self.linear.mul_vec(&other.translation);
        translation.xor_assign(&self.translation);
        AffineMapGF2 { linear, translation }
    }

    pub fn is_identity(&self) -> bool {
        self.linear.is_identity() && self.translation.is_zero()
    }

    /// Number of fixed points, via the linear system `(A + I) x = v`.
    pub fn fixed_point_space(&self) -> Option<(GF2Vector, Vec<GF2Vector>)> {
        let a_plus_i = self.linear.add(&GF2Matrix::identity(self.dim()));
        a_plus_i
            .solve_affine(&self.translation)
            .expect("dimensions match")
    }
}

impl std::fmt::Debug for AffineMapGF2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "AffineMapGF2(dim {}, v {:?})", self.dim(), self.translation)
    }
}

/// Parity `q(x) = u . w` for `x = (u, w)`.
pub fn parity(x: &GF2Vector) -> Result<Parity> {
    if !x.len().is_multiple_of(2) {
        return Err(Error::DimensionMismatch("parity needs an even-length vector".into()));
    }
    let g = x.len() / 2;
    let mut acc = false;
    for i in 0..g {
        acc ^= x.get(i) & x.get(g + i);
    }
    Ok(if acc { Parity::Odd } else { Parity::Even })
}

fn parity_of_code(code: u32, g: usize) -> Parity {
    let u = code & ((1u32 << g) - 1);
    let w = code >> g;
    if (u & w).count_ones() % 2 == 1 {
        Parity::Odd
    } else {
        Parity::Even
    }
}

/// Orbit decomposition of `GF(2)^{2g}` under the group generated by the maps,
/// split by parity. Sizes are reported as `(size, multiplicity)` pairs in
/// `a_b` multiset form, ascending in `a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitTable {
    pub genus: usize,
    pub odd: Vec<(u64, u64)>,
    pub even: Vec<(u64, u64)>,
    #[serde(rename = "I")]
    pub invariant_count: u64,
}

impl OrbitTable {
    pub fn odd_total(&self) -> u64 {
        self.odd.iter().map(|(a, b)| a * b).sum()
    }

    pub fn even_total(&self) -> u64 {
        self.even.iter().map(|(a, b)| a * b).sum()
    }

    fn side_string(side: &[(u64, u64)]) -> String {
        if side.is_empty() {
            return "-".to_string();
        }
        side.iter()
            .map(|(a, b)| format!("{a}_{b}"))
            .collect::<Vec<_>>()
            .join(", ")
    }

    /// `"1_1, 5_1 | 5_2 | 1"` — the row body `odd | even | I`.
    pub fn table_row(&self) -> String {
        format!(
            "{} | {} | {}",
            Self::side_string(&self.odd),
            Self::side_string(&self.even),
            self.invariant_count
        )
    }
}

/// BFS over packed `2g`-bit integers, seeds in numeric order; deterministic.
pub fn orbit_decomposition(maps: &[AffineMapGF2], genus: usize) -> Result<OrbitTable> {
    if genus > MAX_ORBIT_GENUS {
        return Err(Error::GenusBound { genus, bound: MAX_ORBIT_GENUS });
    }
    let dim = 2 * genus;
    for m in maps {
        if m.dim() != dim {
            return Err(Error::DimensionMismatch(format!(
                "map of dimension {} in a genus-{} decomposition",
                m.dim(),
                genus
            )));
        }
    }
    let masks: Vec<(Vec<u64>, u64)> = maps
        .iter()
        .map(|m| (m.linear.row_masks(), m.translation.to_code()))
        .collect();
    let apply = |code: u64, (rows, v): &(Vec<u64>, u64)| -> u64 {
        let mut out = 0u64;
        for (i, row) in rows.iter().enumerate() {
            out |= u64::from((row & code).count_ones() % 2) << i;
        }
        out ^ v
    };

    let total = 1usize << dim;
    let mut visited = vec![false; total];
    let mut odd = std::collections::BTreeMap::new();
    let mut even = std::collections::BTreeMap::new();
    let mut invariant_count = 0u64;
    let mut stack = Vec::new();
    for seed in 0..total as u64 {
        if visited[seed as usize] {
            continue;
        }
        let seed_parity = parity_of_code(seed as u32, genus);
        visited[seed as usize] = true;
        stack.push(seed);
        let mut size = 0u64;
        while let Some(x) = stack.pop() {
            size += 1;
            if parity_of_code(x as u32, genus) != seed_parity {
                return Err(Error::ParityNotConstant);
            }
            for m in &masks {
                let y = apply(x, m);
                if !visited[y as usize] {
                    visited[y as usize] = true;
                    stack.push(y);
                }
            }
        }
        if size == 1 {
            invariant_count += 1;
        }
        *match seed_parity {
            Parity::Odd => odd.entry(size).or_insert(0u64),
            Parity::Even => even.entry(size).or_insert(0u64),
        } += 1;
    }
    Ok(OrbitTable {
        genus,
        odd: odd.into_iter().collect(),
        even: even.into_iter().collect(),
        invariant_count,
    })
}

/// Number of vectors fixed by every map, via the stacked linear system
/// `(A_k + I) x = v_k`: zero if inconsistent, else `2^(dim common kernel)`.
///
/// Independent of the orbit-enumeration path; the two must agree.
pub fn invariant_count(maps: &[AffineMapGF2], genus: usize) -> Result<u64> {
    let dim = 2 * genus;
    if maps.is_empty() {
        return Ok(1u64 << dim);
    }
    let mut stacked_rows = Vec::new();
    let mut rhs = GF2Vector::zeros(dim * maps.len());
    for (k, m) in maps.iter().enumerate() {
        if m.dim() != dim {
            return Err(Error::DimensionMismatch("inconsistent map sizes".into()));
        }
        let block = m.linear.add(&GF2Matrix::identity(dim));
        stacked_rows.push(block);
        for i in 0..dim {
            if m.translation.get(i) {
                rhs.set(k * dim + i, true);
            }
        }
    }
    let refs: Vec<&GF2Matrix> = stacked_rows.iter().collect();
    let stacked = vstack(&refs);
    match stacked.solve_affine(&rhs)? {
        None => Ok(0),
        Some((_, kernel)) => Ok(1u64 << kernel.len()),
    }
}

/// `dim H^1(C_n, V) = dim ker(I + A + ... + A^{n-1}) - rank(A - I)`,
/// valid because `Im(A - I)` is contained in `ker(sum A^k)`.
pub fn cyclic_h1(a: &GF2Matrix, n: u64) -> Result<usize> {
    if a.rows() != a.cols() {
        return Err(Error::DimensionMismatch("cyclic_h1 needs a square matrix".into()));
    }
    if n == 0 || !a.pow(n).is_identity() {
        return Err(Error::NotPeriodic);
    }
    let mut sum = GF2Matrix::zeros(a.rows(), a.cols());
    let mut pw = GF2Matrix::identity(a.rows());
    for _ in 0..n {
        sum = sum.add(&pw);
        pw = pw.mul(a);
    }
    let ker_sum = sum.nullity();
    let rank_a_minus_i = a.add(&GF2Matrix::identity(a.rows())).rank();
    debug_assert!(ker_sum >= rank_a_minus_i);
    Ok(ker_sum - rank_a_minus_i)
}

/// Scott's lower bound for `dim H^0(G, V)` from generators with product one:
/// `sum_i dim H^0(<gamma_i>, V) - 2g(r - 2) - dim H^0(G, V*)`.
///
/// The dual module acts by the contragredient (inverse-transpose) linear
/// part; translations do not affect it.
pub fn scott_lower_bound(maps: &[AffineMapGF2], genus: usize) -> Result<i64> {
    let dim = 2 * genus;
    let composed = maps
        .iter()
        .fold(AffineMapGF2::identity(dim), |acc, m| m.compose(&acc));
    if !composed.is_identity() {
        return Err(Error::ProductNotIdentity);
    }
    let r = maps.len() as i64;
    let mut sum_fixed = 0i64;
    let mut dual_blocks = Vec::new();
    for m in maps {
        sum_fixed += m.linear.add(&GF2Matrix::identity(dim)).nullity() as i64;
        let contragredient = m.linear.inverse()?.transpose();
        dual_blocks.push(contragredient.add(&GF2Matrix::identity(dim)));
    }
    let refs: Vec<&GF2Matrix> = dual_blocks.iter().collect();
    let dual_fixed = vstack(&refs).nullity() as i64;
    Ok(sum_fixed - 2 * (genus as i64) * (r - 2) - dual_fixed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn translation_vector_sense_checks() {
        // R = I and R = -I both give v = 0.
        for n in [2usize, 4, 6] {
            let id = IntMatrix::identity(n);
            assert!(translation_vector(&id).is_zero());
            assert!(translation_vector(&id.neg()).is_zero());
        }
        // g = 1 shear: hand evaluation of the double sum gives (0, 1).
        let shear = IntMatrix::from_i64_rows(&[vec![1, 1], vec![0, 1]]);
        assert!(is_symplectic(&shear));
        assert_eq!(translation_vector(&shear), GF2Vector::from_bits(&[0, 1]));
    }

    #[test]
    fn act_examples() {
        let id = AffineMapGF2::identity(4);
        let x = GF2Vector::from_bits(&[1, 0, 1, 1]);
        assert_eq!(id.act(&x).unwrap(), x);

        // pure translation by e1
        let t = AffineMapGF2::new(GF2Matrix::identity(2), GF2Vector::from_bits(&[1, 0])).unwrap();
        assert_eq!(t.act(&GF2Vector::zeros(2)).unwrap(), GF2Vector::from_bits(&[1, 0]));

        // hyperelliptic involution: R = -I gives the identity map, fixing all
        let hyper = AffineMapGF2::from_symplectic(&IntMatrix::identity(4).neg()).unwrap();
        assert!(hyper.is_identity());
        assert_eq!(invariant_count(&[hyper], 2).unwrap(), 16);

        let wrong = GF2Vector::zeros(3);
        assert!(id.act(&wrong).is_err());
    }

    #[test]
    fn parity_examples_and_counts() {
        assert_eq!(parity(&GF2Vector::zeros(4)).unwrap(), Parity::Even);
        assert_eq!(parity(&GF2Vector::from_bits(&[1, 1])).unwrap(), Parity::Odd);
        assert!(parity(&GF2Vector::zeros(3)).is_err());
        // Exactly 2^{g-1}(2^g - 1) odd characteristics, for g <= 6.
        for g in 0..=6u32 {
            let odd = (0..1u32 << (2 * g))
                .filter(|&c| parity_of_code(c, g as usize) == Parity::Odd)
                .count() as u64;
            let expected = if g == 0 { 0 } else { (1u64 << (g - 1)) * ((1u64 << g) - 1) };
            assert_eq!(odd, expected, "genus {g}");
        }
    }

    #[test]
    fn trivial_group_orbits() {
        let table = orbit_decomposition(&[], 2).unwrap();
        assert_eq!(table.odd, vec![(1, 6)]);
        assert_eq!(table.even, vec![(1, 10)]);
        assert_eq!(table.invariant_count, 16);
        assert_eq!(table.table_row(), "1_6 | 1_10 | 16");
        assert_eq!(invariant_count(&[], 2).unwrap(), 16);
    }

    #[test]
    fn genus_zero_orbits() {
        let table = orbit_decomposition(&[], 0).unwrap();
        assert_eq!(table.odd, vec![]);
        assert_eq!(table.even, vec![(1, 1)]);
        assert_eq!(table.invariant_count, 1);
    }

    #[test]
    fn orbit_bound_is_enforced() {
        assert!(matches!(
            orbit_decomposition(&[], 13),
            Err(Error::GenusBound { genus: 13, bound: 12 })
        ));
    }

    #[test]
    fn shear_orbits_match_hand_enumeration() {
        // g = 1, R = [[1,1],[0,1]]: A = R^T mod 2, v = (0,1).
        // 0 -> (0,1) -> (1,1)+... walk the four vectors by hand:
        // map: (x1,x2) -> (x1, x1+x2) + (0,1).
        // 00 -> 01, 01 -> 00: orbit {00, 01} (even, even)
        // 10 -> 10+01+...: (1, 1+0)+(0,1) = (1,0)? compute: A x = (x1, x1+x2);
        // x=10: Ax=(1,1), +v=(1,0): fixed! x=11: Ax=(1,0)+v=(1,1): fixed.
        // (1,0) and (1,1) are fixed (parities even and odd); {00, 01} is a
        // 2-cycle of even characteristics.
        let m =
            AffineMapGF2::from_symplectic(&IntMatrix::from_i64_rows(&[vec![1, 1], vec![0, 1]]))
                .unwrap();
        let table = orbit_decomposition(std::slice::from_ref(&m), 1).unwrap();
        assert_eq!(table.even, vec![(1, 1), (2, 1)]);
        assert_eq!(table.odd, vec![(1, 1)]);
        assert_eq!(table.invariant_count, 2);
        assert_eq!(invariant_count(&[m], 1).unwrap(), 2);
    }

    #[test]
    fn cyclic_h1_examples() {
        // A = I, n = 2: H^1(C_2, V) = V.
        let id = GF2Matrix::identity(4);
        assert_eq!(cyclic_h1(&id, 2).unwrap(), 4);

        // Companion matrix of 1 + t + t^2 + t^3 + t^4 over GF(2): A^5 = I,
        // A - I invertible, and sum A^k = 0, so H^1 = 0.
        let a = GF2Matrix::from_rows(&[
            vec![0, 0, 0, 1],
            vec![1, 0, 0, 1],
            vec![0, 1, 0, 1],
            vec![0, 0, 1, 1],
        ]);
        assert!(a.pow(5).is_identity());
        assert_eq!(a.add(&GF2Matrix::identity(4)).rank(), 4);
        assert_eq!(cyclic_h1(&a, 5).unwrap(), 0);

        // A^n != I is rejected.
        assert!(matches!(cyclic_h1(&a, 3), Err(Error::NotPeriodic)));
    }

    #[test]
    fn composition_matches_cocycle_rule() {
        let r = IntMatrix::from_i64_rows(&[vec![1, 1], vec![0, 1]]);
        let m = AffineMapGF2::from_symplectic(&r).unwrap();
        let m2 = m.compose(&m);
        let from_r2 = AffineMapGF2::from_symplectic(&r.mul(&r)).unwrap();
        assert_eq!(m2, from_r2);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        /// Random element of Sp_{2g}(Z) as a short product of generators.
        fn random_symplectic(g: usize, seed: u64) -> IntMatrix {
            let mut state = seed.wrapping_mul(0x9E3779B97F4A7C15).wrapping_add(1);
            let mut next = move || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                state
            };
            let n = 2 * g;
            let mut r = IntMatrix::identity(n);
            let j = canonical_j(g);
            for _ in 0..6 {
                let factor = match next() % 3 {
                    0 => j.clone(),
                    1 => {
                        // [[I, B], [0, I]] with B symmetric
                        let mut f = IntMatrix::identity(n);
                        let (a, b) = ((next() % g as u64) as usize, (next() % g as u64) as usize);
                        let val = (next() % 5) as i64 - 2;
                        f[(a, g + b)] = val.into();
                        f[(b, g + a)] = val.into();
                        f
                    }
                    _ => {
                        // [[U, 0], [0, U^-T]] with U an elementary transvection
                        let mut f = IntMatrix::identity(n);
                        let a = (next() % g as u64) as usize;
                        let b = (next() % g as u64) as usize;
                        if a != b {
                            let val = (next() % 5) as i64 - 2;
                            f[(a, b)] = val.into();
                            f[(g + b, g + a)] = (-val).into();
                        }
                        f
                    }
                };
                r = r.mul(&factor);
            }
            r
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            /// The affine action built from any symplectic matrix preserves
            /// parity, and any single map has at least one fixed point.
            #[test]
            fn parity_preserved_and_fixed_point_exists(g in 1usize..=3, seed in 0u64..100_000) {
                let r = random_symplectic(g, seed);
                prop_assert!(is_symplectic(&r));
                let m = AffineMapGF2::from_symplectic(&r).unwrap();
                for code in 0..1u64 << (2 * g) {
                    let x = GF2Vector::from_code(code, 2 * g);
                    let y = m.act(&x).unwrap();
                    prop_assert_eq!(parity(&x).unwrap(), parity(&y).unwrap());
                }
                prop_assert!(m.fixed_point_space().is_some(), "Atiyah fixed point missing");
            }

            /// The linear-system invariant count agrees with orbit
            /// enumeration, and both are 0 or a power of 2.
            #[test]
            fn invariant_count_agrees_with_orbit_path(g in 1usize..=3, s1 in 0u64..100_000, s2 in 0u64..100_000) {
                let maps = vec![
                    AffineMapGF2::from_symplectic(&random_symplectic(g, s1)).unwrap(),
                    AffineMapGF2::from_symplectic(&random_symplectic(g, s2)).unwrap(),
                ];
                let table = orbit_decomposition(&maps, g).unwrap();
                let count = invariant_count(&maps, g).unwrap();
                prop_assert_eq!(table.invariant_count, count);
                prop_assert!(count == 0 || count.is_power_of_two());
                prop_assert_eq!(table.odd_total() + table.even_total(), 1u64 << (2 * g));
            }

            /// Orbit sizes divide the order of the group the maps generate.
            #[test]
            fn orbit_sizes_divide_group_order(g in 1usize..=2, s1 in 0u64..100_000, s2 in 0u64..100_000) {
                let maps = vec![
                    AffineMapGF2::from_symplectic(&random_symplectic(g, s1)).unwrap(),
                    AffineMapGF2::from_symplectic(&random_symplectic(g, s2)).unwrap(),
                ];
                // materialize the affine group (small in these dimensions)
                let mut elems = std::collections::HashSet::new();
                elems.insert(AffineMapGF2::identity(2 * g));
                let mut frontier: Vec<AffineMapGF2> = vec![AffineMapGF2::identity(2 * g)];
                while let Some(e) = frontier.pop() {
                    for m in &maps {
                        let p = e.compose(m);
                        if elems.insert(p.clone()) {
                            frontier.push(p);
                        }
                    }
                }
                let order = elems.len() as u64;
                let table = orbit_decomposition(&maps, g).unwrap();
                for (size, _) in table.odd.iter().chain(&table.even) {
                    prop_assert_eq!(order % size, 0);
                }
            }
        }
    }

    #[test]
    fn orbit_table_serde_round_trip() {
        let t = OrbitTable {
            genus: 2,
            odd: vec![(1, 1), (5, 1)],
            even: vec![(5, 2)],
            invariant_count: 1,
        };
        let json = serde_json::to_string(&t).unwrap();
        assert!(json.contains("\"I\":1"));
        let back: OrbitTable = serde_json::from_str(&json).unwrap();
        assert_eq!(t, back);
        assert_eq!(t.table_row(), "1_1, 5_1 | 5_2 | 1");
    }
}
