#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(src) = std::str::from_utf8(data) {
        if let Ok(ast) = onsager_ace::dsl::parse(src) {
            // Canonical rendering must reparse to the identical tree.
            let rendered = onsager_ace::dsl::render_suite(&ast);
            let reparsed =
                onsager_ace::dsl::parse(&rendered).expect("rendered suite must reparse");
            assert_eq!(reparsed, ast);
        }
    }
});
