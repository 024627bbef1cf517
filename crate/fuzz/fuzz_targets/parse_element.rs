#![no_main]
use afl_core::affine_weyl::AffineWeylGroup;
use afl_core::parse::parse_group;
use libfuzzer_sys::fuzz_target;

// first line selects the group, the rest is the input
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let (spec, s) = text.split_once('\n').unwrap_or(("SL3", text));
    let Ok(d) = parse_group(spec) else { return };
    let g = AffineWeylGroup::new(d);
    if let Ok(w) = afl_core::parse::parse_element(&g, s) { let _ = g.length(&w); }
});
