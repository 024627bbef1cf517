#![no_main]
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(req) = afl_core::parse::parse_shtuka_request(s) {
            let _ = afl_core::parse::shtuka_tuple(&req);
        }
    }
});
