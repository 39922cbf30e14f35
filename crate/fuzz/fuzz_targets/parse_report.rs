#![no_main]

use epoly_core::report::ReportFile;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(file) = ReportFile::from_json(s) {
        // re-serialized output is a fixed point
        let json = file.to_json();
        let again = ReportFile::from_json(&json).expect("own output parses");
        assert_eq!(again, file);
        assert_eq!(again.to_json(), json);
        let _ = file.to_text();
    }
});
