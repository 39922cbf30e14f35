#![no_main]

use epoly_core::fforacle::TraceStratum;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(t) = s.parse::<TraceStratum>() {
            assert_eq!(t.to_string().parse::<TraceStratum>().ok(), Some(t));
        }
    }
});
