#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    // Must never panic; an accepted route set is nonempty by contract.
    if let Ok(routes) = kac_cli::parse_routes(data) {
        assert!(!routes.is_empty());
    }
});
