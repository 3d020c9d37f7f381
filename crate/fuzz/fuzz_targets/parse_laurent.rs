#![no_main]

use libfuzzer_sys::fuzz_target;

// The Laurent parser must be total: any input either parses or returns a
// positioned error, and a successful parse round-trips through rendering.
fuzz_target!(|data: &[u8]| {
    if let Ok(src) = std::str::from_utf8(data) {
        if let Ok(poly) = onsager_ace::text::parse_laurent(src) {
            let rendered = onsager_ace::text::render_laurent(&poly);
            let reparsed = onsager_ace::text::parse_laurent(&rendered)
                .expect("rendered polynomial must reparse");
            assert_eq!(reparsed, poly);
        }
    }
});
