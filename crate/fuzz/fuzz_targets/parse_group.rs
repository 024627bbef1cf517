#![no_main]
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(d) = afl_core::parse::parse_group(s) {
            let _ = afl_core::affine_weyl::AffineWeylGroup::new(d);
        }
    }
});
