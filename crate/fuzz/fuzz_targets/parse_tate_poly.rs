#![no_main]
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(p) = afl_core::parse::parse_tate_poly(s) {
            let again = afl_core::parse::parse_tate_poly(&p.to_string()).expect("display parses");
            assert_eq!(p, again);
        }
    }
});
