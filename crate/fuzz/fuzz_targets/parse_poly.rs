#![no_main]

use epoly_core::IntPoly;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    // cap the size so pathological exponents stay cheap
    if s.len() > 512 {
        return;
    }
    if let Ok(p) = s.parse::<IntPoly>() {
        let shown = p.to_string();
        let back: IntPoly = shown.parse().expect("printed polynomial parses");
        assert_eq!(back, p);
    }
});
