//! Replays the checked-in fuzz seeds through the same entry points as the
//! fuzz targets.

use std::fs;
use std::path::PathBuf;

use afl_core::affine_weyl::AffineWeylGroup;
use afl_core::parse;

fn seeds(target: &str) -> Vec<String> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut paths: Vec<PathBuf> = fs::read_dir(&dir).unwrap().map(|e| e.unwrap().path()).collect();
    paths.sort();
    assert!(!paths.is_empty(), "no seeds in {}", dir.display());
    paths.iter().map(|p| fs::read_to_string(p).unwrap()).collect()
}

fn with_group(text: &str) -> Option<(AffineWeylGroup, &str)> {
    let (spec, s) = text.split_once('\n').unwrap_or(("SL3", text));
    Some((AffineWeylGroup::new(parse::parse_group(spec).ok()?), s))
}

#[test]
fn group_seeds() {
    let ok = seeds("parse_group").iter().filter(|s| parse::parse_group(s).is_ok()).count();
    assert!(ok >= 5);
    let err = parse::parse_group("SL99").unwrap_err();
    assert_eq!(err.code(), "E_LIMIT");
}

#[test]
fn facet_seeds() {
    let results: Vec<bool> = seeds("parse_facet")
        .iter()
        .map(|s| {
            let (g, s) = with_group(s).unwrap();
            parse::parse_facet_pair(&g, s).is_ok()
        })
        .collect();
    // a lone facet is not a pair
    assert_eq!(results, [true, true, true, true, false, true]);
}

#[test]
fn element_seeds() {
    let mut ok = 0;
    for s in seeds("parse_element") {
        let (g, s) = with_group(&s).unwrap();
        if let Ok(w) = parse::parse_element(&g, s) {
            let _ = g.length(&w);
            ok += 1;
        }
    }
    assert!(ok >= 5);
}

#[test]
fn mu_list_seeds() {
    for s in seeds("parse_mu_list") {
        let (g, s) = with_group(&s).unwrap();
        let _ = parse::parse_mu_list(g.datum(), s);
    }
}

#[test]
fn tate_poly_seeds_round_trip() {
    for s in seeds("parse_tate_poly") {
        let p = parse::parse_tate_poly(&s).unwrap();
        assert_eq!(parse::parse_tate_poly(&p.to_string()).unwrap(), p, "{s}");
    }
}

#[test]
fn shtuka_request_seeds() {
    let mut results = Vec::new();
    for s in seeds("parse_shtuka_request") {
        results.push(parse::parse_shtuka_request(&s).and_then(|r| parse::shtuka_tuple(&r)).is_ok());
    }
    // the seed with an unknown field is rejected
    assert_eq!(results, [true, true, false, true]);
}
