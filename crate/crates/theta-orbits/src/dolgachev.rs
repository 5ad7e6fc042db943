//! Structure of the linearised Picard group of a genus-zero quotient, its
//! 2-torsion, and invariant-characteristic counts for Hurwitz curves with
//! simple automorphism group.
//!
//! Schur multiplier orders and lifting orders are bundled as a static
//! dataset; they are inputs here, not something the engine computes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::sync::OnceLock;

use crate::intmat::{invariant_factors, smith_normal_form, IntMatrix};
use crate::{Error, Result};

/// `Pic(G; C) = Z + sum Z/(d_i/d_{i-1})` for a `(0; c_1, ..., c_r)` action,
/// where `d_i` is the gcd of all i-fold products of branch orders. The free
/// generator satisfies `K_C = N(r - 2 - sum 1/c_i) Gamma` with `N = lcm(c_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearisedPicStructure {
    pub free_rank: u32,
    /// `(d_1/d_0, ..., d_{r-1}/d_{r-2})` with entries 1 dropped.
    pub torsion_invariants: Vec<u64>,
    pub n_lcm: u64,
    /// `N(r - 2 - sum 1/c_i)`; positive exactly when the signature belongs
    /// to a curve of genus >= 2.
    pub canonical_coefficient: i64,
}

/// The gcd-formula route: `d_i` computed by dynamic programming over
/// prefixes, so no explicit subset enumeration.
pub fn linearised_pic(branch_orders: &[u64]) -> Result<LinearisedPicStructure> {
    let r = branch_orders.len();
    if r < 3 {
        return Err(Error::InvalidInput(
            "the structure theorem needs at least three branch points".into(),
        ));
    }
    if branch_orders.iter().any(|&c| c < 2) {
        return Err(Error::InvalidInput("branch orders must be >= 2".into()));
    }
    // dp[k] = gcd of all k-subset products among the entries seen so far
    let mut dp: Vec<BigInt> = vec![BigInt::zero(); r + 1];
    dp[0] = BigInt::one();
    for (i, &c) in branch_orders.iter().enumerate() {
        let c = BigInt::from(c);
        for k in (1..=i + 1).rev() {
            let with_c = &dp[k - 1] * &c;
            dp[k] = if dp[k].is_zero() { with_c } else { dp[k].gcd(&with_c) };
        }
    }
    let mut torsion = Vec::new();
    for i in 1..r {
        let q = (&dp[i] / &dp[i - 1]).to_u64().ok_or_else(|| {
            Error::Internal("torsion invariant does not fit in a machine word".into())
        })?;
        if q > 1 {
            torsion.push(q);
        }
    }
    let n_lcm = branch_orders.iter().fold(1u64, |acc, &c| acc.lcm(&c));
    // N(r - 2 - sum 1/c_i) = N(r - 2) - sum N/c_i, a positive integer for g >= 2
    let coeff = (n_lcm as i128) * (r as i128 - 2)
        - branch_orders.iter().map(|&c| (n_lcm / c) as i128).sum::<i128>();
    let canonical_coefficient = i64::try_from(coeff)
        .map_err(|_| Error::Internal(format!("canonical coefficient {coeff} overflows")))?;
    let result = LinearisedPicStructure {
        free_rank: 1,
        torsion_invariants: invariant_factors(&torsion),
        n_lcm,
        canonical_coefficient,
    };
    debug_assert_eq!(
        result.torsion_invariants,
        linearised_pic_torsion_via_snf(branch_orders),
        "gcd and Smith-form routes disagree for {branch_orders:?}"
    );
    Ok(result)
}

/// The independent route: Smith normal form of the relation matrix
/// `{c_i D_i - c_j D_j}` on the generators `D_1, ..., D_r`. Returns the
/// canonical torsion invariant factors.
pub fn linearised_pic_torsion_via_snf(branch_orders: &[u64]) -> Vec<u64> {
    let r = branch_orders.len();
    let mut rows = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            let mut row = vec![0i64; r];
            row[i] = branch_orders[i] as i64;
            row[j] = -(branch_orders[j] as i64);
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return Vec::new();
    }
    // quotient Z^r / (row lattice): invariant factors are the nonzero
    // diagonal entries; the quotient keeps one free rank
    let snf = smith_normal_form(&IntMatrix::from_i64_rows(&rows).transpose());
    let torsion: Vec<u64> = snf
        .d
        .diagonal()
        .iter()
        .filter(|x| !x.is_zero() && !x.is_one())
        .map(|x| x.to_u64().expect("small invariant"))
        .collect();
    invariant_factors(&torsion)
}

/// `(2-torsion rank, cokernel rank)` of `Pic(G; C)` from the count `e` of
/// even branch orders: cokernel `Z_2` if `e = 0` else `Z_2^e`; 2-torsion
/// trivial if `e = 0` else `Z_2^{e-1}`.
pub fn two_torsion_cokernel(branch_orders: &[u64]) -> (u32, u32) {
    let e = branch_orders.iter().filter(|&&c| c % 2 == 0).count() as u32;
    if e == 0 {
        (0, 1)
    } else {
        (e - 1, e)
    }
}

/// One simple Hurwitz group: its Schur multiplier order and, when that is
/// even, the lifting order (2 or 4) of the stabilizer involution in the
/// double cover.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HurwitzGroupRecord {
    pub name: String,
    pub schur_multiplier_order: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lifting_order: Option<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comment: Option<String>,
}

/// Invariant characteristics of a Hurwitz curve with simple automorphism
/// group: 0 unless the multiplier has even order and the involution lifts
/// with order 4, in which case exactly 1.
pub fn hurwitz_invariant_count(rec: &HurwitzGroupRecord) -> Result<u8> {
    if rec.schur_multiplier_order == 0 {
        return Err(Error::InvalidInput("multiplier order must be positive".into()));
    }
    if rec.schur_multiplier_order % 2 == 1 {
        return Ok(0);
    }
    match rec.lifting_order {
        Some(2) => Ok(0),
        Some(4) => Ok(1),
        Some(other) => Err(Error::InvalidInput(format!("lifting order {other} is not 2 or 4"))),
        None => Err(Error::InvalidInput(format!(
            "{}: even multiplier needs a lifting order",
            rec.name
        ))),
    }
}

/// Lifting order of an `A_n` involution written as `t` disjoint
/// transpositions (`t` even): 2 when `t/2` is even, 4 when odd.
pub fn an_lifting_order(transpositions: u64) -> Result<u8> {
    if transpositions == 0 {
        return Err(Error::InvalidInput("the identity has no lifting order here".into()));
    }
    if !transpositions.is_multiple_of(2) {
        return Err(Error::InvalidInput(
            "an odd number of transpositions is not an element of A_n".into(),
        ));
    }
    Ok(if (transpositions / 2).is_multiple_of(2) { 2 } else { 4 })
}

/// `I = h - 1 + f1 + f2 + f3 mod 2` for an `A_n` Hurwitz action, after
/// validating `n = 84(h-1) + 21 f1 + 28 f2 + 36 f3`.
pub fn an_hurwitz_invariant(n: u64, h: u64, f1: u64, f2: u64, f3: u64) -> Result<u8> {
    let rhs = 84 * (h as i128 - 1) + 21 * f1 as i128 + 28 * f2 as i128 + 36 * f3 as i128;
    if rhs != n as i128 {
        return Err(Error::InvalidInput(format!(
            "n = {n} but 84(h-1) + 21 f1 + 28 f2 + 36 f3 = {rhs}"
        )));
    }
    Ok(((h as i128 - 1 + f1 as i128 + f2 as i128 + f3 as i128).rem_euclid(2)) as u8)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HurwitzDataset {
    /// The 14 simple Hurwitz groups of order < 10^6, with genera.
    pub prediction_table: Vec<HurwitzGroupRecord>,
    /// The remaining rows of the simple-Hurwitz-group table.
    pub other_groups: Vec<HurwitzGroupRecord>,
}

static DATASET: OnceLock<HurwitzDataset> = OnceLock::new();

/// The bundled dataset of simple Hurwitz groups.
pub fn hurwitz_dataset() -> &'static HurwitzDataset {
    DATASET.get_or_init(|| {
        serde_json::from_str(include_str!("../data/hurwitz_groups.json"))
            .expect("bundled dataset parses")
    })
}

fn normalize_name(name: &str) -> String {
    name.chars()
        .filter(|c| c.is_ascii_alphanumeric() || *c == ',')
        .collect::<String>()
        .to_ascii_lowercase()
}

/// Looks a group up by name (whitespace, underscores and parentheses are
/// ignored, so `PSL(2,7)`, `PSL_2(7)` and `psl27` all match... the comma is
/// kept, so `PSL(2,7)` normalizes to `psl2,7`).
pub fn lookup_hurwitz(name: &str) -> Option<&'static HurwitzGroupRecord> {
    let key = normalize_name(name);
    let ds = hurwitz_dataset();
    ds.prediction_table
        .iter()
        .chain(&ds.other_groups)
        .find(|rec| normalize_name(&rec.name) == key)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hurwitz_signature_gives_free_pic() {
        let pic = linearised_pic(&[2, 3, 7]).unwrap();
        assert_eq!(pic.free_rank, 1);
        assert!(pic.torsion_invariants.is_empty());
        assert_eq!(pic.n_lcm, 42);
        // K_C = 1 * Gamma
        assert_eq!(pic.canonical_coefficient, 1);
    }

    #[test]
    fn wiman_5_signature_has_z5_squared_torsion() {
        // Torsion identity oracle: Z_N + T = Z_5^3, so T = Z_5 + Z_5.
        let pic = linearised_pic(&[5, 5, 5]).unwrap();
        assert_eq!(pic.torsion_invariants, vec![5, 5]);
        let mut lhs = vec![pic.n_lcm];
        lhs.extend(&pic.torsion_invariants);
        assert_eq!(invariant_factors(&lhs), invariant_factors(&[5, 5, 5]));
    }

    #[test]
    fn four_twos_match_snf_oracle() {
        // d_1 = 2, d_2 = 4, d_3 = 8: invariants (2, 2, 2).
        let pic = linearised_pic(&[2, 2, 2, 2]).unwrap();
        assert_eq!(pic.torsion_invariants, vec![2, 2, 2]);
        assert_eq!(linearised_pic_torsion_via_snf(&[2, 2, 2, 2]), vec![2, 2, 2]);
    }

    #[test]
    fn structure_needs_three_branch_points() {
        assert!(linearised_pic(&[2, 3]).is_err());
    }

    #[test]
    fn two_torsion_examples() {
        assert_eq!(two_torsion_cokernel(&[2, 3, 7]), (0, 1));
        assert_eq!(two_torsion_cokernel(&[5, 5, 5]), (0, 1));
        assert_eq!(two_torsion_cokernel(&[2, 2, 3]), (1, 2));
    }

    #[test]
    fn hurwitz_invariant_cases() {
        let psl27 = lookup_hurwitz("PSL(2,7)").unwrap();
        assert_eq!(hurwitz_invariant_count(psl27).unwrap(), 1);
        let psl28 = lookup_hurwitz("PSL(2,8)").unwrap();
        assert_eq!(hurwitz_invariant_count(psl28).unwrap(), 0);
        let fi22 = lookup_hurwitz("Fi22").unwrap();
        assert_eq!(fi22.schur_multiplier_order, 6);
        assert_eq!(hurwitz_invariant_count(fi22).unwrap(), 0);
        // odd multiplier > 1: Fi24' has C_3
        let fi24 = lookup_hurwitz("Fi24'").unwrap();
        assert_eq!(fi24.schur_multiplier_order, 3);
        assert_eq!(hurwitz_invariant_count(fi24).unwrap(), 0);
        // missing lifting order on an even multiplier is an error
        let bad = HurwitzGroupRecord {
            name: "X".into(),
            schur_multiplier_order: 2,
            lifting_order: None,
            genus: None,
            comment: None,
        };
        assert!(hurwitz_invariant_count(&bad).is_err());
    }

    #[test]
    fn an_lifting_order_cases() {
        assert_eq!(an_lifting_order(2).unwrap(), 4);
        assert_eq!(an_lifting_order(4).unwrap(), 2);
        assert_eq!(an_lifting_order(6).unwrap(), 4);
        assert!(an_lifting_order(0).is_err());
        assert!(an_lifting_order(3).is_err());
    }

    #[test]
    fn an_table_rows() {
        assert_eq!(an_hurwitz_invariant(15, 0, 3, 0, 1).unwrap(), 1);
        assert_eq!(an_hurwitz_invariant(21, 0, 1, 3, 0).unwrap(), 1);
        assert_eq!(an_hurwitz_invariant(22, 0, 2, 1, 1).unwrap(), 1);
        assert_eq!(an_hurwitz_invariant(28, 0, 4, 1, 0).unwrap(), 0);
        assert_eq!(an_hurwitz_invariant(29, 0, 1, 2, 1).unwrap(), 1);
        assert!(an_hurwitz_invariant(15, 0, 3, 0, 2).is_err());
    }

    #[test]
    fn an_table_agrees_with_lifting_order() {
        // 4l = n - f1 relates the witness cycle type to the table data.
        for (n, h, f1, f2, f3) in [
            (15u64, 0, 3, 0, 1),
            (21, 0, 1, 3, 0),
            (22, 0, 2, 1, 1),
            (28, 0, 4, 1, 0),
            (29, 0, 1, 2, 1),
        ] {
            let i = an_hurwitz_invariant(n, h, f1, f2, f3).unwrap();
            let transpositions = (n - f1) / 2;
            let by_lift = if an_lifting_order(transpositions).unwrap() == 4 { 1 } else { 0 };
            assert_eq!(i, by_lift, "n = {n}");
        }
    }

    #[test]
    fn dataset_reproduces_paper_counts() {
        let expected = [
            ("PSL(2,7)", 3u64, 1u8),
            ("PSL(2,8)", 7, 0),
            ("PSL(2,13)", 14, 1),
            ("PSL(2,27)", 118, 1),
            ("PSL(2,29)", 146, 1),
            ("PSL(2,41)", 411, 1),
            ("PSL(2,43)", 474, 1),
            ("J1", 2091, 0),
            ("PSL(2,71)", 2131, 1),
            ("PSL(2,83)", 3404, 1),
            ("PSL(2,97)", 5433, 1),
            ("J2", 7201, 1),
            ("PSL(2,113)", 8589, 1),
            ("PSL(2,125)", 11626, 1),
        ];
        assert_eq!(hurwitz_dataset().prediction_table.len(), 14);
        for (name, genus, count) in expected {
            let rec = lookup_hurwitz(name).unwrap_or_else(|| panic!("{name} missing"));
            assert_eq!(rec.genus, Some(genus), "{name}");
            assert_eq!(hurwitz_invariant_count(rec).unwrap(), count, "{name}");
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(200))]

            /// gcd route vs Smith route, the torsion identity
            /// `Z_N + T = sum Z_{c_i}`, and the corollary ranks, on random
            /// signatures with r <= 6 and c_i <= 12.
            #[test]
            fn random_signatures_are_coherent(
                orders in proptest::collection::vec(2u64..=12, 3..=6)
            ) {
                let pic = linearised_pic(&orders).unwrap();
                prop_assert_eq!(&pic.torsion_invariants, &linearised_pic_torsion_via_snf(&orders));

                let mut lhs = vec![pic.n_lcm];
                lhs.extend(&pic.torsion_invariants);
                prop_assert_eq!(invariant_factors(&lhs), invariant_factors(&orders));

                let (t2, cok) = two_torsion_cokernel(&orders);
                let even_invariants =
                    pic.torsion_invariants.iter().filter(|&&d| d % 2 == 0).count() as u32;
                prop_assert_eq!(t2, even_invariants);
                // cokernel rank = free part + even invariants
                prop_assert_eq!(cok, 1 + even_invariants);
            }
        }
    }
}
