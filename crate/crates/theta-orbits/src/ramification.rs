//! Signature-level reasoning: Riemann-Hurwitz, the SOC criterion, the parity
//! of a SOC invariant characteristic, and the feature vector for external
//! classifiers.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::cover::{subgroup_action, RamificationData};
use crate::perm::{is_subnormal, Perm, PermGroup};
use crate::theta::Parity;
use crate::{Error, Result};

/// `(g0; c1, ..., cr)`: quotient genus and branch orders.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Signature {
    #[serde(default)]
    pub quotient_genus: usize,
    pub branch_orders: Vec<u64>,
}

impl Signature {
    pub fn new(quotient_genus: usize, branch_orders: Vec<u64>) -> Result<Self> {
        if branch_orders.iter().any(|&c| c < 2) {
            return Err(Error::InvalidRamification("branch orders must all be >= 2".into()));
        }
        Ok(Signature { quotient_genus, branch_orders })
    }

    pub fn genus_zero(branch_orders: Vec<u64>) -> Result<Self> {
        Signature::new(0, branch_orders)
    }

    pub fn r(&self) -> usize {
        self.branch_orders.len()
    }
}

impl std::fmt::Display for Signature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let orders: Vec<String> = self.branch_orders.iter().map(u64::to_string).collect();
        write!(f, "({}; {})", self.quotient_genus, orders.join(", "))
    }
}

/// Genus from `2g - 2 = |G| [(2g0 - 2) + sum (1 - 1/c_i)]`.
pub fn rh_genus(group_order: u64, sig: &Signature) -> Result<u64> {
    if group_order == 0 {
        return Err(Error::InvalidInput("group order must be positive".into()));
    }
    if sig.branch_orders.iter().any(|&c| c < 2) {
        return Err(Error::InvalidRamification("branch orders must all be >= 2".into()));
    }
    // 2g - 2 = |G|(2g0 - 2) + sum_i (|G| - |G|/c_i), exactly.
    let mut num: i128 = group_order as i128 * (2 * sig.quotient_genus as i128 - 2);
    for &c in &sig.branch_orders {
        let (q, rem) = (group_order as i128).div_rem(&(c as i128));
        if rem != 0 {
            return Err(Error::InvalidRamification(format!(
                "branch order {c} does not divide the group order {group_order}"
            )));
        }
        num += group_order as i128 - q;
    }
    if num % 2 != 0 {
        return Err(Error::InvalidRamification(format!(
            "Riemann-Hurwitz gives a non-integral genus for {sig} with group order {group_order}"
        )));
    }
    let two_g = num + 2;
    if two_g < 0 {
        return Err(Error::InvalidRamification(format!(
            "Riemann-Hurwitz gives a negative genus for {sig} with group order {group_order}"
        )));
    }
    Ok((two_g / 2) as u64)
}

/// A witness that the action is Subnormal Odd Cyclic: `f` of odd order with
/// `<f>` subnormal in `G` and genus-zero quotient.
#[derive(Clone, Debug)]
pub struct SocWitness {
    pub generator: Perm,
    pub order: u64,
    /// Signature of the `<f>` action on the curve (branch orders only).
    pub induced_signature: Vec<u64>,
}

/// Scans cyclic subgroups of odd order > 1 in canonical order and returns the
/// first that is subnormal with genus-zero quotient.
pub fn is_soc(data: &RamificationData) -> Result<Option<SocWitness>> {
    for (generator, order) in data.group.cyclic_subgroups() {
        if order % 2 == 0 || order == 1 {
            continue;
        }
        let h = PermGroup::from_generators(std::slice::from_ref(&generator))?;
        if !is_subnormal(&h, &data.group)? {
            continue;
        }
        let (quotient_genus, induced_signature) = subgroup_action(&h, data)?;
        if quotient_genus == 0 {
            return Ok(Some(SocWitness { generator, order, induced_signature }));
        }
    }
    Ok(None)
}

/// Parity of the unique invariant characteristic of a SOC action:
/// `n * sum (c_i - 1/c_i) / 8 mod 2`, evaluated as the integer-exact
/// rearrangement `sum (n/c_i) (c_i^2 - 1)/8 mod 2`.
pub fn soc_parity(n: u64, branch_orders: &[u64]) -> Result<Parity> {
    if n.is_multiple_of(2) {
        return Err(Error::InvalidInput("SOC order must be odd".into()));
    }
    let mut total: u64 = 0;
    for &c in branch_orders {
        if c % 2 == 0 {
            return Err(Error::InvalidInput(format!("branch order {c} is even")));
        }
        if !n.is_multiple_of(c) {
            return Err(Error::InvalidInput(format!("branch order {c} does not divide {n}")));
        }
        // c odd => c^2 = 1 mod 8
        total = (total + (n / c) % 2 * ((c * c - 1) / 8) % 2) % 2;
    }
    Ok(if total == 1 { Parity::Odd } else { Parity::Even })
}

/// The ten features fed to external classifiers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeatureVector {
    pub genus: u64,
    pub group_order: u64,
    pub is_large: bool,
    pub max_pow2_exponent: u32,
    pub involution_count: u64,
    pub involution_class_count: u64,
    pub signature_length: u64,
    pub even_entry_count: u64,
    pub max_entry: u64,
    pub family_dimension: i64,
}

impl FeatureVector {
    pub fn csv_header() -> &'static str {
        "genus,group_order,is_large,max_pow2_exponent,involution_count,\
         involution_class_count,signature_length,even_entry_count,max_entry,family_dimension"
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.genus,
            self.group_order,
            self.is_large,
            self.max_pow2_exponent,
            self.involution_count,
            self.involution_class_count,
            self.signature_length,
            self.even_entry_count,
            self.max_entry,
            self.family_dimension
        )
    }
}

pub fn extract_features(group: &PermGroup, sig: &Signature, genus: u64) -> Result<FeatureVector> {
    if group.order() == 1 {
        return Err(Error::InvalidInput(
            "feature extraction needs a nontrivial group action".into(),
        ));
    }
    let order = group.order() as u64;
    let stats = group.conjugacy_and_involutions();
    Ok(FeatureVector {
        genus,
        group_order: order,
        is_large: order > 4 * genus.saturating_sub(1),
        max_pow2_exponent: order.trailing_zeros(),
        involution_count: stats.involution_count as u64,
        involution_class_count: stats.involution_class_count as u64,
        signature_length: sig.r() as u64,
        even_entry_count: sig.branch_orders.iter().filter(|&&c| c % 2 == 0).count() as u64,
        max_entry: sig.branch_orders.iter().copied().max().unwrap_or(0),
        family_dimension: 3 * sig.quotient_genus as i64 - 3 + sig.r() as i64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::standard;

    #[test]
    fn rh_genus_examples() {
        let klein = Signature::genus_zero(vec![2, 3, 7]).unwrap();
        assert_eq!(rh_genus(168, &klein).unwrap(), 3);
        assert_eq!(rh_genus(504, &klein).unwrap(), 7);
        let c5 = Signature::genus_zero(vec![5, 5, 5]).unwrap();
        assert_eq!(rh_genus(5, &c5).unwrap(), 2);
        // two more table rows
        assert_eq!(rh_genus(120, &Signature::genus_zero(vec![2, 4, 5]).unwrap()).unwrap(), 4);
        assert_eq!(rh_genus(2, &Signature::new(1, vec![2, 2]).unwrap()).unwrap(), 2);
    }

    #[test]
    fn rh_genus_rejects_bad_signatures() {
        // (C2, (2,2,2)): non-integral genus
        let sig = Signature::genus_zero(vec![2, 2, 2]).unwrap();
        assert!(rh_genus(2, &sig).is_err());
        // branch order not dividing the group order
        let sig = Signature::genus_zero(vec![3, 3, 3]).unwrap();
        assert!(rh_genus(4, &sig).is_err());
        // negative genus
        let sig = Signature::genus_zero(vec![2, 2]).unwrap();
        assert!(matches!(rh_genus(2, &sig), Ok(0)));
        let sig2 = Signature::genus_zero(vec![]).unwrap();
        assert!(rh_genus(2, &sig2).is_err());
    }

    #[test]
    fn soc_parity_examples() {
        // n = 5, (5,5,5): value 9, odd
        assert_eq!(soc_parity(5, &[5, 5, 5]).unwrap(), Parity::Odd);
        // n = 7, (7,7,7): value 18, even
        assert_eq!(soc_parity(7, &[7, 7, 7]).unwrap(), Parity::Even);
        // n = 1: empty signature, even
        assert_eq!(soc_parity(1, &[]).unwrap(), Parity::Even);
        assert!(soc_parity(5, &[2]).is_err());
        assert!(soc_parity(5, &[3]).is_err());
    }

    #[test]
    fn soc_parity_matches_rational_form() {
        // n sum (c_i - 1/c_i)/8 computed in exact rationals must agree with
        // the integer rearrangement, and with the p = +-1 / +-3 mod 8 rule
        // for the Wiman signatures (0; p^3).
        for (n, orders) in [
            (5u64, vec![5u64, 5, 5]),
            (7, vec![7, 7, 7]),
            (9, vec![3, 9, 9]),
            (11, vec![11, 11, 11]),
            (13, vec![13, 13, 13]),
            (15, vec![3, 5, 15, 15]),
        ] {
            // rational evaluation with denominator 8 * prod(c)
            let prod: u128 = orders.iter().map(|&c| c as u128).product();
            let mut num: u128 = 0;
            for &c in &orders {
                // n * (c - 1/c) / 8 => n * (c^2 - 1) * (prod/c) / (8 prod)
                num += n as u128 * ((c * c - 1) as u128) * (prod / c as u128);
            }
            assert_eq!(num % (8 * prod), 0, "not an integer for n={n}");
            let value = num / (8 * prod);
            let expected = if value % 2 == 1 { Parity::Odd } else { Parity::Even };
            assert_eq!(soc_parity(n, &orders).unwrap(), expected, "n={n}");
        }
        for p in [5u64, 7, 11, 13, 17, 19, 23] {
            let by_rule = match p % 8 {
                1 | 7 => Parity::Even,
                3 | 5 => Parity::Odd,
                _ => unreachable!(),
            };
            assert_eq!(soc_parity(p, &[p, p, p]).unwrap(), by_rule, "p={p}");
        }
    }

    #[test]
    fn soc_witness_examples() {
        use crate::cover::{find_generating_vectors, GeneratingVector, RamificationData};
        // C5 on genus 2: witness of order 5
        let c5 = PermGroup::from_generators(&standard::cyclic(5)).unwrap();
        let gamma = c5.generators()[0].clone();
        let data = RamificationData::new(
            c5,
            Signature::genus_zero(vec![5, 5, 5]).unwrap(),
            GeneratingVector::from_branch(vec![gamma.clone(), gamma.clone(), gamma.pow(3)]),
        );
        let witness = is_soc(&data).unwrap().expect("C5 action is SOC");
        assert_eq!(witness.order, 5);
        assert_eq!(witness.induced_signature, vec![5, 5, 5]);

        // the Klein action is not SOC: the C7 quotients to genus 0 but is
        // not subnormal in the simple group
        let psl = PermGroup::from_generators(&standard::psl2(7)).unwrap();
        let sig = Signature::genus_zero(vec![2, 3, 7]).unwrap();
        let v = find_generating_vectors(&psl, &sig, 10_000_000).unwrap()[0].clone();
        let data = RamificationData::new(psl, sig, v);
        assert!(is_soc(&data).unwrap().is_none());

        // trivial group: no odd-order element > 1
        let trivial = PermGroup::trivial(1);
        let id = crate::perm::Perm::identity(1);
        let data = RamificationData::new(
            trivial,
            Signature::new(2, vec![]).unwrap(),
            GeneratingVector {
                handles: vec![(id.clone(), id.clone()), (id.clone(), id)],
                branch: vec![],
            },
        );
        assert!(is_soc(&data).unwrap().is_none());
    }

    #[test]
    fn feature_vector_for_klein() {
        let group = PermGroup::from_generators(&standard::psl2(7)).unwrap();
        let sig = Signature::genus_zero(vec![2, 3, 7]).unwrap();
        let fv = extract_features(&group, &sig, 3).unwrap();
        assert_eq!(
            fv,
            FeatureVector {
                genus: 3,
                group_order: 168,
                is_large: true,
                max_pow2_exponent: 3,
                involution_count: 21,
                involution_class_count: 1,
                signature_length: 3,
                even_entry_count: 1,
                max_entry: 7,
                family_dimension: 0,
            }
        );
        assert_eq!(fv.csv_row(), "3,168,true,3,21,1,3,1,7,0");
    }

    #[test]
    fn feature_vector_for_hyperelliptic_c2() {
        let group = PermGroup::from_generators(&standard::cyclic(2)).unwrap();
        let sig = Signature::new(1, vec![2, 2]).unwrap();
        let fv = extract_features(&group, &sig, 2).unwrap();
        assert_eq!(
            fv,
            FeatureVector {
                genus: 2,
                group_order: 2,
                is_large: false,
                max_pow2_exponent: 1,
                involution_count: 1,
                involution_class_count: 1,
                signature_length: 2,
                even_entry_count: 2,
                max_entry: 2,
                family_dimension: 2,
            }
        );
    }

    #[test]
    fn feature_vector_rejects_trivial_group() {
        let trivial = PermGroup::trivial(1);
        let sig = Signature::genus_zero(vec![]).unwrap();
        assert!(extract_features(&trivial, &sig, 0).is_err());
    }
}
