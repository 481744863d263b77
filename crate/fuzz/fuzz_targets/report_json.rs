#![no_main]

use kfree::harness::VerificationReport;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(r) = VerificationReport::parse(text) {
        assert_eq!(VerificationReport::parse(&r.to_json()).unwrap(), r);
    }
});
