#![no_main]

use libfuzzer_sys::fuzz_target;
use theta_orbits::theta::OrbitTable;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(table) = serde_json::from_str::<OrbitTable>(text) else { return };
    let json = serde_json::to_string(&table).unwrap();
    let back: OrbitTable = serde_json::from_str(&json).unwrap();
    assert_eq!(table, back);
    let _ = table.table_row();
});
