#![no_main]

use epoly_core::fforacle::{is_supported, parse_q_list};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(qs) = parse_q_list(s) {
            assert!(!qs.is_empty());
            assert!(qs.iter().all(|&q| is_supported(q)));
        }
    }
});
