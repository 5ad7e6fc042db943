#![no_main]

use libfuzzer_sys::fuzz_target;
use theta_orbits_cli::fixtures::Fixture;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(fx) = serde_json::from_str::<Fixture>(text) else { return };
    let reserialized = serde_json::to_string(&fx).unwrap();
    let _: Fixture = serde_json::from_str(&reserialized).unwrap();
});
