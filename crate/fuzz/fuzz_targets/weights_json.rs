#![no_main]

use kac_core::weights::WeightSequence;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(doc) = std::str::from_utf8(data) else {
        return;
    };
    // Parsing may reject the document, but it must never panic, and any
    // accepted weights must satisfy the type invariants and round-trip.
    if let Ok(w) = WeightSequence::from_json_str(doc) {
        assert!(w.n() >= 1);
        assert_eq!(w.a_weights().len(), w.b_weights().len());
        assert_eq!(w.products().len(), w.n());
        let again = WeightSequence::from_json_str(&w.to_json().to_string())
            .expect("serialized weights must re-parse");
        assert_eq!(again, w);
    }
});
