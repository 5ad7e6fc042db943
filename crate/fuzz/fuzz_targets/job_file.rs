#![no_main]

use libfuzzer_sys::fuzz_target;
use theta_orbits_cli::{Job, JobInput};

// Parsing a job file must never panic, and a parsed job must re-serialize
// and re-parse to an equivalent document. Ramification inputs additionally
// go through group closure and validation under small caps.
fn check_job(job: &Job) {
    let reserialized = serde_json::to_string(job).unwrap();
    let reparsed: Job = serde_json::from_str(&reserialized).unwrap();
    assert_eq!(serde_json::to_string(&reparsed).unwrap(), reserialized);

    if let JobInput::Ramification(ram) = &job.input {
        if ram.degree <= 6 && ram.group_generators.len() <= 4 {
            if let Ok(data) = ram.to_data(720) {
                let _ = theta_orbits::cover::validate(&data);
            }
        }
    }
}

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    // a job file is one job or a batch array
    if let Ok(job) = serde_json::from_str::<Job>(text) {
        check_job(&job);
    } else if let Ok(batch) = serde_json::from_str::<Vec<Job>>(text) {
        for job in batch.iter().take(8) {
            check_job(job);
        }
    }
});
