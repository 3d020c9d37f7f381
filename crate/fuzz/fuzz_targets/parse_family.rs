#![no_main]

use libfuzzer_sys::fuzz_target;
use onsager_ace::loop_algebra::FamilyName;

fuzz_target!(|data: &[u8]| {
    if let Ok(src) = std::str::from_utf8(data) {
        if let Ok(name) = src.parse::<FamilyName>() {
            // Display round-trips and element construction never panics.
            let rendered = name.to_string();
            assert_eq!(rendered.parse::<FamilyName>().unwrap(), name);
            // Keep matrix construction bounded: huge indices are legal names
            // but their ladder matrices are exponentially large.
            if name.index.abs() <= 64 {
                let _ = name.element();
            }
        }
    }
});
