#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    // Must never panic; accepted policies must yield a k list for any n.
    if let Ok(policy) = kac_cli::parse_k_spec(data) {
        assert!(!policy.ks_for(7).is_empty());
    }
});
