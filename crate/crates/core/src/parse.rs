//! Text formats: group specs, facets, cocharacters, elements, Tate
//! polynomials and shtuka requests.
//!
//! Every parser returns an error on malformed input and never panics;
//! numeric inputs are bounded so that downstream arithmetic cannot overflow.

use crate::affine_weyl::{AffineWeylGroup, ElementJson, IwElement};
use crate::error::{Error, Result};
use crate::flag_cells::Facet;
use crate::motive::TatePoly;
use crate::root_datum::{Cocharacter, DynkinType, Factor, Isogeny, RootDatum};
use crate::shtuka::{BoundTuple, ShtukaRequest};

/// Largest total rank accepted in a group spec.
pub const MAX_RANK: usize = 16;
/// Largest absolute value of a cocharacter coordinate.
pub const MAX_COORD: i64 = 1_000_000;
const MAX_DEGREE: i64 = 1_000_000;
const MAX_COEFF: i64 = 1_000_000_000_000;

fn parse_int(what: &'static str, s: &str, bound: i64) -> Result<i64> {
    let v: i64 = s.trim().parse().map_err(|_| Error::parse(what, format!("not an integer: {s:?}")))?;
    if v.abs() > bound {
        return Err(Error::parse(what, format!("{v} is out of range")));
    }
    Ok(v)
}

/// Group spec such as `SL2`, `PGL3`, `GL2`, `G2`, `B3ad`, `T1`, or a product
/// `SL2xGL2`.
pub fn parse_group(s: &str) -> Result<RootDatum> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::parse("group", "empty spec"));
    }
    let factors = s.split('x').map(parse_factor).collect::<Result<Vec<_>>>()?;
    let rank: usize = factors.iter().map(|f| f.rank).sum();
    if rank > MAX_RANK {
        return Err(Error::Limit { what: "rank", value: rank, cap: MAX_RANK });
    }
    RootDatum::from_factors(&factors)
}

fn parse_factor(tok: &str) -> Result<Factor> {
    let (body, iso) = if let Some(b) = tok.strip_suffix("sc") {
        (b, Some(Isogeny::SimplyConnected))
    } else if let Some(b) = tok.strip_suffix("ad") {
        (b, Some(Isogeny::Adjoint))
    } else {
        (tok, None)
    };
    let split = body.find(|c: char| c.is_ascii_digit()).ok_or_else(|| Error::parse("group", format!("missing rank in {tok:?}")))?;
    let (name, digits) = body.split_at(split);
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) || digits.len() > 3 {
        return Err(Error::parse("group", format!("bad rank in {tok:?}")));
    }
    let n: usize = digits.parse().map_err(|_| Error::parse("group", format!("bad rank in {tok:?}")))?;
    if n > MAX_RANK + 1 {
        return Err(Error::Limit { what: "rank", value: n, cap: MAX_RANK });
    }
    let bad_iso = || Error::InvalidDatum(format!("{tok}: isogeny suffix does not fit the group"));
    let (ty, rank, isogeny) = match name {
        "SL" => {
            if iso == Some(Isogeny::Adjoint) {
                return Err(bad_iso());
            }
            if n < 2 {
                return Err(Error::InvalidDatum(format!("{tok}: SL_n needs n >= 2")));
            }
            (DynkinType::A, n - 1, Isogeny::SimplyConnected)
        }
        "PGL" => {
            if iso == Some(Isogeny::SimplyConnected) {
                return Err(bad_iso());
            }
            if n < 2 {
                return Err(Error::InvalidDatum(format!("{tok}: PGL_n needs n >= 2")));
            }
            (DynkinType::A, n - 1, Isogeny::Adjoint)
        }
        "GL" => {
            if iso.is_some() {
                return Err(bad_iso());
            }
            (DynkinType::GL, n, Isogeny::General)
        }
        "T" => {
            if iso.is_some() {
                return Err(bad_iso());
            }
            (DynkinType::T, n, Isogeny::General)
        }
        "A" => (DynkinType::A, n, iso.unwrap_or(Isogeny::SimplyConnected)),
        "B" => (DynkinType::B, n, iso.unwrap_or(Isogeny::SimplyConnected)),
        "C" => (DynkinType::C, n, iso.unwrap_or(Isogeny::SimplyConnected)),
        "D" => (DynkinType::D, n, iso.unwrap_or(Isogeny::SimplyConnected)),
        "E" => (DynkinType::E, n, iso.unwrap_or(Isogeny::SimplyConnected)),
        "F" => (DynkinType::F, n, iso.unwrap_or(Isogeny::SimplyConnected)),
        "G" => (DynkinType::G, n, iso.unwrap_or(Isogeny::SimplyConnected)),
        _ => return Err(Error::parse("group", format!("unknown group {tok:?}"))),
    };
    Factor::new(ty, rank, isogeny)
}

/// `a0` (base alcove), `0` (base point) or `J=i,j,..` / `J=i+j` with labels
/// of simple affine reflections (`0`, `1`, .., or `0_c` for several
/// components).
pub fn parse_facet(g: &AffineWeylGroup, s: &str) -> Result<Facet> {
    let s = s.trim();
    match s {
        "a0" => return Ok(Facet::alcove()),
        "0" => return Ok(Facet::base_point(g)),
        _ => {}
    }
    let body = s.strip_prefix("J=").ok_or_else(|| Error::parse("facet", format!("expected a0, 0 or J=..., got {s:?}")))?;
    let mut nodes = Vec::new();
    for tok in body.split([',', '+', ' ']).filter(|t| !t.is_empty()) {
        let i = g.generator_index(tok).ok_or_else(|| Error::InvalidFacet(format!("no simple reflection {tok:?}")))?;
        nodes.push(i);
    }
    Facet::new(g, nodes)
}

/// Pair `f',f` (or `f';f`).
pub fn parse_facet_pair(g: &AffineWeylGroup, s: &str) -> Result<(Facet, Facet)> {
    let parts: Vec<&str> = if s.contains(';') { s.split(';').collect() } else { s.split(',').collect() };
    if parts.len() != 2 {
        return Err(Error::parse("facets", format!("expected two facets separated by ',' or ';', got {s:?}")));
    }
    Ok((parse_facet(g, parts[0])?, parse_facet(g, parts[1])?))
}

fn is_symbolic(s: &str) -> bool {
    s.contains(['w', 'a'])
}

/// Cocharacter in coordinates (`1,0`, `(1,0)`, `[1,0]`) or as a combination
/// of fundamental coweights and simple coroots (`w`, `w1`, `a2`, `2w1+a2`).
pub fn parse_cocharacter(d: &RootDatum, s: &str) -> Result<Cocharacter> {
    let s = s.trim();
    if s == "0" {
        return Ok(Cocharacter::zero(d.rank()));
    }
    let mu = if is_symbolic(s) {
        parse_symbolic(d, s)?
    } else {
        let body = s.trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        let coords = body.split(',').map(|t| parse_int("cocharacter", t, MAX_COORD)).collect::<Result<Vec<_>>>()?;
        if coords.len() != d.rank() {
            return Err(Error::RankMismatch { expected: d.rank(), got: coords.len() });
        }
        Cocharacter(coords)
    };
    if mu.0.iter().any(|c| c.abs() > MAX_COORD) {
        return Err(Error::parse("cocharacter", "coordinates out of range"));
    }
    Ok(mu)
}

fn parse_symbolic(d: &RootDatum, s: &str) -> Result<Cocharacter> {
    let mut acc = vec![0i64; d.rank()];
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut rest = compact.as_str();
    if rest.is_empty() {
        return Err(Error::parse("cocharacter", "empty"));
    }
    while !rest.is_empty() {
        let mut sign = 1;
        if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        } else if let Some(r) = rest.strip_prefix('-') {
            rest = r;
            sign = -1;
        }
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let (term, tail) = rest.split_at(end);
        rest = tail;
        let letter = term.find(['w', 'a']).ok_or_else(|| Error::parse("cocharacter", format!("bad term {term:?}")))?;
        let (coef, sym) = term.split_at(letter);
        let coef = coef.trim_end_matches('*');
        let c = if coef.is_empty() { 1 } else { parse_int("cocharacter", coef, MAX_COORD)? };
        let (kind, idx) = sym.split_at(1);
        let ell = d.semisimple_rank();
        let i = if idx.is_empty() {
            if ell != 1 {
                return Err(Error::parse("cocharacter", format!("{sym:?} needs an index")));
            }
            0
        } else {
            let i = parse_int("cocharacter", idx, MAX_RANK as i64)?;
            if i < 1 || i as usize > ell {
                return Err(Error::parse("cocharacter", format!("index {i} out of range 1..={ell}")));
            }
            i as usize - 1
        };
        let v: Vec<i64> = if kind == "a" {
            d.simple_coroots()[i].clone()
        } else {
            d.integral_fundamental_coweight(i)
                .ok_or_else(|| Error::Domain(format!("fundamental coweight w{} is not a cocharacter of {}", i + 1, d.label())))?
                .0
        };
        for (a, x) in acc.iter_mut().zip(v) {
            *a += sign * c * x;
            if a.abs() > MAX_COORD {
                return Err(Error::parse("cocharacter", "coordinates out of range"));
            }
        }
    }
    Ok(Cocharacter(acc))
}

/// Legs separated by `;`. Without `;`, commas separate legs when the
/// coordinates cannot be meant (rank one, or symbolic legs).
pub fn parse_mu_list(d: &RootDatum, s: &str) -> Result<Vec<Cocharacter>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let legs: Vec<&str> = if s.contains(';') {
        s.split(';').collect()
    } else if d.rank() == 1 || s.split(',').all(is_symbolic) {
        s.split(',').collect()
    } else {
        vec![s]
    };
    legs.into_iter().map(|t| parse_cocharacter(d, t)).collect()
}

/// Word in finite simple reflections: `e`, `s1 s2`, `s1s2`, `1,2`.
pub fn parse_finite_word(s: &str, semisimple_rank: usize) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for tok in s.split(|c: char| c.is_whitespace() || c == ',' || c == '*' || c == 's').filter(|t| !t.is_empty()) {
        let i: usize = tok.parse().map_err(|_| Error::parse("word", format!("bad letter {tok:?}")))?;
        if i == 0 || i > semisimple_rank {
            return Err(Error::parse("word", format!("no finite simple reflection s{i}")));
        }
        out.push(i - 1);
    }
    Ok(out)
}

/// Word in the simple affine reflections, e.g. `s0 s1`, `0,1` or `s0_2s1`.
pub fn parse_affine_word(g: &AffineWeylGroup, s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(Vec::new());
    }
    s.split(|c: char| c.is_whitespace() || c == ',' || c == '*' || c == 's')
        .filter(|t| !t.is_empty())
        .map(|tok| g.generator_index(tok).ok_or_else(|| Error::parse("word", format!("no simple reflection {tok:?}"))))
        .collect()
}

/// Element given as JSON `{"t": [..], "w": ".."}`, as `word:<affine word>`,
/// or as a cocharacter `mu` (the element of the point `varpi^mu`).
pub fn parse_element(g: &AffineWeylGroup, s: &str) -> Result<IwElement> {
    let s = s.trim();
    if s.starts_with('{') {
        let e: ElementJson = serde_json::from_str(s).map_err(|e| Error::parse("element", e.to_string()))?;
        if e.t.iter().any(|c| c.abs() > MAX_COORD) {
            return Err(Error::parse("element", "coordinates out of range"));
        }
        return g.from_json(&e);
    }
    if let Some(w) = s.strip_prefix("word:") {
        return Ok(g.product(&parse_affine_word(g, w)?));
    }
    Ok(g.loop_translation(&parse_cocharacter(g.datum(), s)?))
}

/// Laurent polynomial in `L`, e.g. `1 + 2*L + L^2` or `-L^-1 + 3`.
pub fn parse_tate_poly(s: &str) -> Result<TatePoly> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::parse("polynomial", "empty"));
    }
    let bytes = compact.as_bytes();
    let mut terms = Vec::new();
    let mut start = 0;
    for i in 1..bytes.len() {
        // a sign starts a new term unless it belongs to an exponent
        if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
            terms.push(&compact[start..i]);
            start = i;
        }
    }
    terms.push(&compact[start..]);
    let mut p = TatePoly::zero();
    let mut acc: std::collections::BTreeMap<i64, i64> = Default::default();
    for term in terms {
        let (sign, body) = match term.as_bytes().first() {
            Some(b'+') => (1, &term[1..]),
            Some(b'-') => (-1, &term[1..]),
            _ => (1, term),
        };
        if body.is_empty() {
            return Err(Error::parse("polynomial", format!("dangling sign in {s:?}")));
        }
        let (coef, degree) = match body.find('L') {
            None => (parse_int("polynomial", body, MAX_COEFF)?, 0),
            Some(pos) => {
                let c = body[..pos].trim_end_matches('*');
                if c.len() + 1 < pos {
                    return Err(Error::parse("polynomial", format!("bad term {term:?}")));
                }
                let c = if c.is_empty() { 1 } else { parse_int("polynomial", c, MAX_COEFF)? };
                let rest = &body[pos + 1..];
                let d = if rest.is_empty() {
                    1
                } else {
                    let e = rest.strip_prefix('^').ok_or_else(|| Error::parse("polynomial", format!("bad term {term:?}")))?;
                    parse_int("polynomial", e, MAX_DEGREE)?
                };
                (c, d)
            }
        };
        let slot = acc.entry(degree).or_insert(0);
        *slot += sign * coef;
        if slot.abs() > MAX_COEFF {
            return Err(Error::parse("polynomial", "coefficient out of range"));
        }
    }
    for (d, c) in acc {
        p.add_term(d, c);
    }
    Ok(p)
}

/// JSON request `{"group", "I", "partition", "mu", "level_degree"}`.
pub fn parse_shtuka_request(s: &str) -> Result<ShtukaRequest> {
    let req: ShtukaRequest = serde_json::from_str(s).map_err(|e| Error::parse("shtuka request", e.to_string()))?;
    if req.mu.iter().flat_map(|m| m.0.iter()).any(|c| c.abs() > MAX_COORD) {
        return Err(Error::parse("shtuka request", "coordinates out of range"));
    }
    Ok(req)
}

/// Resolves a request into its group and bound tuple.
pub fn shtuka_tuple(req: &ShtukaRequest) -> Result<(AffineWeylGroup, BoundTuple)> {
    let g = AffineWeylGroup::new(parse_group(&req.group)?);
    let n = req.mu.len();
    if let Some(index) = &req.index_set {
        if *index != (1..=n).collect::<Vec<_>>() {
            return Err(Error::Domain(format!("I must be 1..{n}")));
        }
    }
    let partition = req.partition.clone().unwrap_or_else(|| if n == 0 { Vec::new() } else { vec![(1..=n).collect()] });
    let b = BoundTuple::with_partition(g.datum(), req.mu.clone(), partition, req.level_degree)?;
    Ok((g, b))
}
