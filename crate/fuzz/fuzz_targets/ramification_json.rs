#![no_main]

use libfuzzer_sys::fuzz_target;
use theta_orbits::perm::Perm;

// One-line permutation arrays are the innermost untrusted format; the
// deserializer must reject non-bijections without panicking.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = serde_json::from_str::<Perm>(text) {
        assert!(p.inverse().compose(&p).is_identity());
        let json = serde_json::to_string(&p).unwrap();
        let back: Perm = serde_json::from_str(&json).unwrap();
        assert_eq!(p, back);
    }
});
