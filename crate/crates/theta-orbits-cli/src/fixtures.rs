//! The bundled fixture corpus: each file pins a group action (with an
//! explicit generating vector) and the expected orbit table, or a dataset of
//! expected invariant counts. The suite rebuilds everything and diffs.

use std::path::Path;

use serde::{Deserialize, Serialize};

use theta_orbits::cover::{build_symplectic_rep, validate};
use theta_orbits::dolgachev::{an_hurwitz_invariant, hurwitz_invariant_count, lookup_hurwitz};
use theta_orbits::theta::{invariant_count, orbit_decomposition};

use crate::job::RamificationInput;
use crate::CliError;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Fixture {
    Orbits(OrbitFixture),
    Hurwitz(HurwitzFixture),
    AnTable(AnTableFixture),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OrbitFixture {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub input: RamificationInput,
    pub expected: ExpectedTable,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ExpectedTable {
    pub genus: u64,
    pub odd: Vec<(u64, u64)>,
    pub even: Vec<(u64, u64)>,
    #[serde(rename = "I")]
    pub invariant_count: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HurwitzFixture {
    pub name: String,
    pub cases: Vec<HurwitzCase>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HurwitzCase {
    pub group: String,
    pub expected_i: u8,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AnTableFixture {
    pub name: String,
    pub rows: Vec<AnRow>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AnRow {
    pub n: u64,
    pub h: u64,
    pub f1: u64,
    pub f2: u64,
    pub f3: u64,
    pub expected_i: u8,
}

#[derive(Debug)]
pub struct FixtureOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn run_orbit_fixture(fx: &OrbitFixture) -> Result<FixtureOutcome, CliError> {
    let data = fx.input.to_data(theta_orbits::perm::DEFAULT_ORDER_CAP)?;
    let genus = validate(&data).map_err(CliError::Engine)?;
    let rep = build_symplectic_rep(&data).map_err(CliError::Engine)?;
    let maps = rep.affine_maps_of(&data.vector.entries()).map_err(CliError::Engine)?;
    let table = orbit_decomposition(&maps, genus as usize).map_err(CliError::Engine)?;
    let by_system = invariant_count(&maps, genus as usize).map_err(CliError::Engine)?;
    let got = ExpectedTable {
        genus,
        odd: table.odd.clone(),
        even: table.even.clone(),
        invariant_count: table.invariant_count,
    };
    let passed = got == fx.expected && by_system == table.invariant_count;
    let detail = if passed {
        format!("genus {genus}: {}", table.table_row())
    } else {
        format!(
            "expected genus {} {:?}/{:?}/I={}, got genus {} {}",
            fx.expected.genus,
            fx.expected.odd,
            fx.expected.even,
            fx.expected.invariant_count,
            genus,
            table.table_row()
        )
    };
    Ok(FixtureOutcome { name: fx.name.clone(), passed, detail })
}

fn run_hurwitz_fixture(fx: &HurwitzFixture) -> FixtureOutcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for case in &fx.cases {
        checked += 1;
        match lookup_hurwitz(&case.group) {
            None => failures.push(format!("{}: not in the dataset", case.group)),
            Some(rec) => match hurwitz_invariant_count(rec) {
                Ok(i) if i == case.expected_i => {}
                Ok(i) => failures.push(format!("{}: expected {}, got {i}", case.group, case.expected_i)),
                Err(e) => failures.push(format!("{}: {e}", case.group)),
            },
        }
    }
    FixtureOutcome {
        name: fx.name.clone(),
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("{checked}/{checked} invariant counts match")
        } else {
            failures.join("; ")
        },
    }
}

fn run_an_fixture(fx: &AnTableFixture) -> FixtureOutcome {
    let mut failures = Vec::new();
    for row in &fx.rows {
        match an_hurwitz_invariant(row.n, row.h, row.f1, row.f2, row.f3) {
            Ok(i) if i == row.expected_i => {}
            Ok(i) => failures.push(format!("n={}: expected {}, got {i}", row.n, row.expected_i)),
            Err(e) => failures.push(format!("n={}: {e}", row.n)),
        }
    }
    FixtureOutcome {
        name: fx.name.clone(),
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("{}/{} rows match", fx.rows.len(), fx.rows.len())
        } else {
            failures.join("; ")
        },
    }
}

pub fn run_fixture(fx: &Fixture) -> Result<FixtureOutcome, CliError> {
    match fx {
        Fixture::Orbits(f) => run_orbit_fixture(f),
        Fixture::Hurwitz(f) => Ok(run_hurwitz_fixture(f)),
        Fixture::AnTable(f) => Ok(run_an_fixture(f)),
    }
}

/// Runs every `.json` fixture in the directory (sorted by file name).
/// Returns the outcomes; an empty directory is an error.
pub fn run_fixture_suite(dir: &Path) -> Result<Vec<FixtureOutcome>, CliError> {
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .map_err(|e| CliError::Schema(format!("cannot read fixture directory: {e}")))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    paths.sort();
    if paths.is_empty() {
        return Err(CliError::Schema(format!("no fixtures found in {}", dir.display())));
    }
    let mut outcomes = Vec::new();
    for path in paths {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| CliError::Schema(format!("{}: {e}", path.display())))?;
        let fx: Fixture = serde_json::from_str(&text)
            .map_err(|e| CliError::Schema(format!("{}: {e}", path.display())))?;
        outcomes.push(run_fixture(&fx)?);
    }
    Ok(outcomes)
}
