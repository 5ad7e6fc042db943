//! Job files: one JSON document per batch entry, dispatched to the engine.

use serde::{Deserialize, Serialize};

use theta_orbits::cover::{
    build_symplectic_rep, find_generating_vectors, subgroup_action, validate, GeneratingVector,
    RamificationData,
};
use theta_orbits::dolgachev::{
    an_hurwitz_invariant, hurwitz_invariant_count, linearised_pic, lookup_hurwitz,
    two_torsion_cokernel,
};
use theta_orbits::intmat::{int_kernel_rank, IntMatrix};
use theta_orbits::perm::{Perm, PermGroup};
use theta_orbits::ramification::{extract_features, is_soc, rh_genus, soc_parity, Signature};
use theta_orbits::theta::{
    invariant_count, is_symplectic, orbit_decomposition, translation_vector, OrbitTable,
};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Markdown,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum JobKind {
    Orbits,
    Invariants,
    Soc,
    Dolgachev,
    Hurwitz,
    Features,
    Repbuild,
    SearchGv,
}

/// Ramification input: permutations are 0-based one-line image arrays.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RamificationInput {
    pub degree: usize,
    pub group_generators: Vec<Vec<usize>>,
    pub signature: Vec<u64>,
    #[serde(default)]
    pub quotient_genus: usize,
    /// `2 * quotient_genus` handle entries followed by the branch entries.
    #[serde(default)]
    pub generating_vector: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitInput {
    pub genus: usize,
    pub matrices: Vec<Vec<Vec<i64>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum JobInput {
    Ramification(RamificationInput),
    Explicit(ExplicitInput),
    /// Branch orders of a genus-zero quotient (dolgachev jobs).
    Signature { branch_orders: Vec<u64> },
    /// A named simple Hurwitz group (hurwitz jobs).
    Group { name: String },
    /// `A_n` Hurwitz data (hurwitz jobs).
    AnData { n: u64, h: u64, f1: u64, f2: u64, f3: u64 },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Job {
    pub kind: JobKind,
    pub input: JobInput,
    #[serde(default)]
    pub output_format: OutputFormat,
    /// Orbit-enumeration bound; jobs above it are rejected.
    #[serde(default = "default_max_genus")]
    pub max_genus: usize,
    /// Group-closure cap.
    #[serde(default = "default_order_cap")]
    pub group_order_cap: usize,
    /// Candidate cap for search-gv jobs.
    #[serde(default = "default_search_cap")]
    pub search_cap: u64,
}

fn default_max_genus() -> usize {
    9
}

fn default_order_cap() -> usize {
    theta_orbits::perm::DEFAULT_ORDER_CAP
}

fn default_search_cap() -> u64 {
    50_000_000
}

impl RamificationInput {
    pub fn to_data(&self, order_cap: usize) -> Result<RamificationData, CliError> {
        let gens = self
            .group_generators
            .iter()
            .map(|imgs| {
                if imgs.len() != self.degree {
                    return Err(CliError::Schema(format!(
                        "generator of degree {} in a degree-{} job",
                        imgs.len(),
                        self.degree
                    )));
                }
                Perm::from_images(imgs.clone()).map_err(|e| CliError::Schema(e.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if gens.is_empty() {
            return Err(CliError::Schema("group_generators must be nonempty".into()));
        }
        let group = PermGroup::closure(&gens, order_cap).map_err(CliError::Engine)?;
        let signature = Signature::new(self.quotient_genus, self.signature.clone())
            .map_err(CliError::Engine)?;
        let expected = 2 * self.quotient_genus + self.signature.len();
        if self.generating_vector.len() != expected {
            return Err(CliError::Schema(format!(
                "generating_vector has {} entries, expected {expected} \
                 (2 * quotient_genus handles then branch entries)",
                self.generating_vector.len()
            )));
        }
        let perms = self
            .generating_vector
            .iter()
            .map(|imgs| Perm::from_images(imgs.clone()).map_err(|e| CliError::Schema(e.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        let handles = (0..self.quotient_genus)
            .map(|i| (perms[2 * i].clone(), perms[2 * i + 1].clone()))
            .collect();
        let branch = perms[2 * self.quotient_genus..].to_vec();
        Ok(RamificationData::new(group, signature, GeneratingVector { handles, branch }))
    }
}

impl ExplicitInput {
    pub fn to_matrices(&self) -> Result<Vec<IntMatrix>, CliError> {
        let dim = 2 * self.genus;
        self.matrices
            .iter()
            .map(|rows| {
                if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
                    return Err(CliError::Schema(format!(
                        "matrices must be {dim}x{dim} for genus {}",
                        self.genus
                    )));
                }
                Ok(IntMatrix::from_i64_rows(rows))
            })
            .collect()
    }
}

/// The deterministic result of one job, serialized per the output format.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(rename_all = "snake_case")]
pub enum Report {
    Orbits {
        /// group order and signature, when built from ramification input
        #[serde(default, skip_serializing_if = "Option::is_none")]
        action: Option<String>,
        table: OrbitTable,
        /// warnings are part of the report so runs stay reproducible
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        warnings: Vec<String>,
    },
    Invariants {
        genus: usize,
        invariant_count: u64,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        warnings: Vec<String>,
    },
    Soc {
        genus: u64,
        is_soc: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        witness_order: Option<u64>,
        #[serde(skip_serializing_if = "Option::is_none")]
        witness_signature: Option<Vec<u64>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        invariant_parity: Option<theta_orbits::theta::Parity>,
    },
    Dolgachev {
        free_rank: u32,
        torsion_invariants: Vec<u64>,
        n_lcm: u64,
        canonical_coefficient: i64,
        two_torsion_rank: u32,
        cokernel_rank: u32,
    },
    Hurwitz {
        name: String,
        invariant_count: u8,
    },
    Features {
        features: theta_orbits::ramification::FeatureVector,
    },
    Repbuild {
        genus: u64,
        matrices: Vec<Vec<Vec<String>>>,
        translations: Vec<Vec<u8>>,
        symplectic_ok: bool,
        lefschetz_ok: bool,
        homomorphism_ok: bool,
        quotient_genus_ok: bool,
    },
    SearchGv {
        classes: Vec<Vec<Vec<usize>>>,
    },
}

impl Report {
    pub fn render(&self, format: OutputFormat) -> Result<String, CliError> {
        match format {
            OutputFormat::Json => {
                serde_json::to_string_pretty(self).map_err(|e| CliError::Schema(e.to_string()))
            }
            OutputFormat::Markdown => Ok(self.to_markdown()),
            OutputFormat::Csv => Ok(self.to_csv()),
        }
    }

    fn to_markdown(&self) -> String {
        match self {
            Report::Orbits { action, table, warnings } => {
                let mut out = String::new();
                for w in warnings {
                    out.push_str(&format!("<!-- warning: {w} -->\n"));
                }
                let label = action.clone().unwrap_or_else(|| "-".into());
                out.push_str("| group, signature | odd | even | I |\n|---|---|---|---|\n");
                out.push_str(&format!("| {label} | {} |\n", table.table_row()));
                out
            }
            Report::Invariants { genus, invariant_count, .. } => {
                format!("| genus | I |\n|---|---|\n| {genus} | {invariant_count} |\n")
            }
            Report::Soc { genus, is_soc, witness_order, witness_signature, invariant_parity } => {
                let order = witness_order.map_or("-".into(), |o| o.to_string());
                let sig = witness_signature
                    .as_ref()
                    .map_or("-".into(), |s| format!("{s:?}"));
                let parity = invariant_parity.map_or("-".into(), |p| format!("{p:?}"));
                format!(
                    "| genus | SOC | witness order | witness signature | parity |\n\
                     |---|---|---|---|---|\n| {genus} | {is_soc} | {order} | {sig} | {parity} |\n"
                )
            }
            Report::Dolgachev {
                free_rank,
                torsion_invariants,
                n_lcm,
                canonical_coefficient,
                two_torsion_rank,
                cokernel_rank,
            } => format!(
                "| free rank | torsion | N | K coefficient | 2-torsion | cokernel |\n\
                 |---|---|---|---|---|---|\n| {free_rank} | {torsion_invariants:?} | {n_lcm} \
                 | {canonical_coefficient} | {two_torsion_rank} | {cokernel_rank} |\n"
            ),
            Report::Hurwitz { name, invariant_count } => {
                format!("| group | I |\n|---|---|\n| {name} | {invariant_count} |\n")
            }
            Report::Features { features } => {
                format!(
                    "| {} |\n| {} |\n",
                    theta_orbits::ramification::FeatureVector::csv_header().replace(',', " | "),
                    features.csv_row().replace(',', " | ")
                )
            }
            Report::Repbuild {
                genus,
                symplectic_ok,
                lefschetz_ok,
                homomorphism_ok,
                quotient_genus_ok,
                ..
            } => format!(
                "| genus | symplectic | lefschetz | homomorphism | quotient genus |\n\
                 |---|---|---|---|---|\n| {genus} | {symplectic_ok} | {lefschetz_ok} \
                 | {homomorphism_ok} | {quotient_genus_ok} |\n"
            ),
            Report::SearchGv { classes } => {
                let mut out = String::from("| class | vector |\n|---|---|\n");
                for (i, v) in classes.iter().enumerate() {
                    out.push_str(&format!("| {i} | {v:?} |\n"));
                }
                out
            }
        }
    }

    fn to_csv(&self) -> String {
        match self {
            Report::Features { features } => format!(
                "{}\n{}\n",
                theta_orbits::ramification::FeatureVector::csv_header(),
                features.csv_row()
            ),
            Report::Orbits { table, .. } => {
                format!("odd,even,I\n\"{}\"\n", table.table_row().replace(" | ", "\",\""))
            }
            other => {
                // fall back to one JSON cell per line
                format!("report\n\"{}\"\n", serde_json::to_string(other).unwrap().replace('"', "\"\""))
            }
        }
    }
}

/// (genus, generator maps, warnings, action label)
type PreparedMaps = (usize, Vec<theta_orbits::theta::AffineMapGF2>, Vec<String>, Option<String>);

fn affine_maps_for(
    input: &JobInput,
    max_genus: usize,
    order_cap: usize,
) -> Result<PreparedMaps, CliError> {
    match input {
        JobInput::Ramification(ram) => {
            let data = ram.to_data(order_cap)?;
            let rep = build_symplectic_rep(&data).map_err(CliError::Engine)?;
            let genus = rep.genus() as usize;
            if genus > max_genus {
                return Err(CliError::Engine(theta_orbits::Error::GenusBound {
                    genus,
                    bound: max_genus,
                }));
            }
            let maps = rep
                .affine_maps_of(&data.vector.entries())
                .map_err(CliError::Engine)?;
            let action = format!("order {}, {}", data.group.order(), data.signature);
            Ok((genus, maps, Vec::new(), Some(action)))
        }
        JobInput::Explicit(explicit) => {
            let mut warnings = Vec::new();
            if explicit.genus > max_genus {
                return Err(CliError::Engine(theta_orbits::Error::GenusBound {
                    genus: explicit.genus,
                    bound: max_genus,
                }));
            }
            let mut maps = Vec::new();
            for (i, m) in explicit.to_matrices()?.iter().enumerate() {
                if !is_symplectic(m) {
                    warnings.push(format!(
                        "matrix {i} does not preserve the canonical pairing; \
                         the translation vector is still computed from the defining sum"
                    ));
                }
                // the tool always computes v itself
                let v = translation_vector(m);
                let map = theta_orbits::theta::AffineMapGF2::new(m.transpose().mod2(), v)
                    .map_err(CliError::Engine)?;
                if !map.is_identity() {
                    maps.push(map);
                }
            }
            Ok((explicit.genus, maps, warnings, None))
        }
        _ => Err(CliError::Schema("this job kind needs matrices or ramification input".into())),
    }
}

pub fn run_job(job: &Job) -> Result<Report, CliError> {
    match job.kind {
        JobKind::Orbits => {
            let (genus, maps, warnings, action) =
                affine_maps_for(&job.input, job.max_genus, job.group_order_cap)?;
            let table = orbit_decomposition(&maps, genus).map_err(CliError::Engine)?;
            let by_system = invariant_count(&maps, genus).map_err(CliError::Engine)?;
            if by_system != table.invariant_count {
                return Err(CliError::Engine(theta_orbits::Error::Internal(format!(
                    "invariant count mismatch: {by_system} by linear system, {} by orbits",
                    table.invariant_count
                ))));
            }
            Ok(Report::Orbits { action, table, warnings })
        }
        JobKind::Invariants => {
            let (genus, maps, warnings, _) =
                affine_maps_for(&job.input, job.max_genus, job.group_order_cap)?;
            let count = invariant_count(&maps, genus).map_err(CliError::Engine)?;
            Ok(Report::Invariants { genus, invariant_count: count, warnings })
        }
        JobKind::Soc => {
            let JobInput::Ramification(ram) = &job.input else {
                return Err(CliError::Schema("soc jobs need ramification input".into()));
            };
            let data = ram.to_data(job.group_order_cap)?;
            let genus = validate(&data).map_err(CliError::Engine)?;
            let witness = is_soc(&data).map_err(CliError::Engine)?;
            match witness {
                None => Ok(Report::Soc {
                    genus,
                    is_soc: false,
                    witness_order: None,
                    witness_signature: None,
                    invariant_parity: None,
                }),
                Some(w) => {
                    let parity =
                        soc_parity(w.order, &w.induced_signature).map_err(CliError::Engine)?;
                    Ok(Report::Soc {
                        genus,
                        is_soc: true,
                        witness_order: Some(w.order),
                        witness_signature: Some(w.induced_signature),
                        invariant_parity: Some(parity),
                    })
                }
            }
        }
        JobKind::Dolgachev => {
            let JobInput::Signature { branch_orders } = &job.input else {
                return Err(CliError::Schema("dolgachev jobs need signature input".into()));
            };
            let pic = linearised_pic(branch_orders).map_err(CliError::Engine)?;
            let (two_torsion_rank, cokernel_rank) = two_torsion_cokernel(branch_orders);
            Ok(Report::Dolgachev {
                free_rank: pic.free_rank,
                torsion_invariants: pic.torsion_invariants,
                n_lcm: pic.n_lcm,
                canonical_coefficient: pic.canonical_coefficient,
                two_torsion_rank,
                cokernel_rank,
            })
        }
        JobKind::Hurwitz => match &job.input {
            JobInput::Group { name } => {
                let rec = lookup_hurwitz(name).ok_or_else(|| {
                    CliError::Engine(theta_orbits::Error::InvalidInput(format!(
                        "unknown Hurwitz group {name}"
                    )))
                })?;
                let count = hurwitz_invariant_count(rec).map_err(CliError::Engine)?;
                Ok(Report::Hurwitz { name: rec.name.clone(), invariant_count: count })
            }
            JobInput::AnData { n, h, f1, f2, f3 } => {
                let count = an_hurwitz_invariant(*n, *h, *f1, *f2, *f3).map_err(CliError::Engine)?;
                Ok(Report::Hurwitz { name: format!("A{n}"), invariant_count: count })
            }
            _ => Err(CliError::Schema("hurwitz jobs need a group name or A_n data".into())),
        },
        JobKind::Features => {
            let JobInput::Ramification(ram) = &job.input else {
                return Err(CliError::Schema("features jobs need ramification input".into()));
            };
            // the generating vector is optional here: the features only need
            // the group and the signature
            let (group, sig, genus) = if ram.generating_vector.is_empty() {
                let gens = ram
                    .group_generators
                    .iter()
                    .map(|imgs| {
                        Perm::from_images(imgs.clone()).map_err(|e| CliError::Schema(e.to_string()))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let group =
                    PermGroup::closure(&gens, job.group_order_cap).map_err(CliError::Engine)?;
                let sig = Signature::new(ram.quotient_genus, ram.signature.clone())
                    .map_err(CliError::Engine)?;
                let genus = rh_genus(group.order() as u64, &sig).map_err(CliError::Engine)?;
                (group, sig, genus)
            } else {
                let data = ram.to_data(job.group_order_cap)?;
                let genus = validate(&data).map_err(CliError::Engine)?;
                (data.group, data.signature, genus)
            };
            let features = extract_features(&group, &sig, genus).map_err(CliError::Engine)?;
            Ok(Report::Features { features })
        }
        JobKind::Repbuild => {
            let JobInput::Ramification(ram) = &job.input else {
                return Err(CliError::Schema("repbuild jobs need ramification input".into()));
            };
            let data = ram.to_data(job.group_order_cap)?;
            // build_symplectic_rep verifies symplecticity and Lefschetz
            let rep = build_symplectic_rep(&data).map_err(CliError::Engine)?;
            let group = rep.group();
            let n = group.order();
            // homomorphism spot-checks on a deterministic pair sample
            let mut state = 0x243F6A8885A308D3u64;
            let mut homomorphism_ok = true;
            for _ in 0..100 {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                let a = (state % n as u64) as usize;
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                let b = (state % n as u64) as usize;
                let ab = group
                    .element_index(&group.element(a).compose(group.element(b)))
                    .expect("closed");
                if rep.matrix_by_index(a).mul(rep.matrix_by_index(b)) != *rep.matrix_by_index(ab) {
                    homomorphism_ok = false;
                }
            }
            // integer kernel rank of R_f - I equals twice the quotient genus
            // of <f>, for every cyclic subgroup
            let mut quotient_genus_ok = true;
            let dim = 2 * rep.genus() as usize;
            for (gen, _) in group.cyclic_subgroups() {
                let h = PermGroup::from_generators(std::slice::from_ref(&gen)).map_err(CliError::Engine)?;
                let (qg, _) = subgroup_action(&h, &data).map_err(CliError::Engine)?;
                let m = rep.matrix(&gen).map_err(CliError::Engine)?;
                let kr = int_kernel_rank(&m.sub(&IntMatrix::identity(dim)));
                if kr != 2 * qg as usize {
                    quotient_genus_ok = false;
                }
            }
            let matrices: Vec<Vec<Vec<String>>> = (0..n)
                .map(|i| {
                    let m = rep.matrix_by_index(i);
                    (0..m.rows())
                        .map(|r| (0..m.cols()).map(|c| m[(r, c)].to_string()).collect())
                        .collect()
                })
                .collect();
            let translations: Vec<Vec<u8>> = (0..n)
                .map(|i| {
                    translation_vector(rep.matrix_by_index(i))
                        .iter_bits()
                        .map(u8::from)
                        .collect()
                })
                .collect();
            Ok(Report::Repbuild {
                genus: rep.genus(),
                matrices,
                translations,
                symplectic_ok: true,
                lefschetz_ok: true,
                homomorphism_ok,
                quotient_genus_ok,
            })
        }
        JobKind::SearchGv => {
            let JobInput::Ramification(ram) = &job.input else {
                return Err(CliError::Schema("search-gv jobs need ramification input".into()));
            };
            let gens = ram
                .group_generators
                .iter()
                .map(|imgs| Perm::from_images(imgs.clone()).map_err(|e| CliError::Schema(e.to_string())))
                .collect::<Result<Vec<_>, _>>()?;
            let group = PermGroup::closure(&gens, job.group_order_cap).map_err(CliError::Engine)?;
            let signature = Signature::new(ram.quotient_genus, ram.signature.clone())
                .map_err(CliError::Engine)?;
            let found = find_generating_vectors(&group, &signature, job.search_cap)
                .map_err(CliError::Engine)?;
            let classes = found
                .iter()
                .map(|v| v.entries().iter().map(Perm::images).collect())
                .collect();
            Ok(Report::SearchGv { classes })
        }
    }
}
