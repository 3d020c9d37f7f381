#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(src) = std::str::from_utf8(data) {
        if let Ok(f) = onsager_ace::text::parse_ratfunc(src) {
            // Canonical form invariants.
            assert!(!f.den().is_zero());
            assert!(f.den().leading_coeff().is_one());
            let rendered = onsager_ace::text::render_ratfunc(&f);
            let reparsed = onsager_ace::text::parse_ratfunc(&rendered)
                .expect("rendered rational function must reparse");
            assert_eq!(reparsed, f);
        }
    }
});
