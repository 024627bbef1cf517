//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::collections::{BTreeSet, HashSet};
use std::process::Command;
use std::time::{Duration, Instant};

use afl_core::affine_weyl::{AffineWeylGroup, IwElement};
use afl_core::flag_cells::{self, CellTable, DoubleCoset, Facet};
use afl_core::kl_hecke::{ic_class, KazhdanLusztig};
use afl_core::motive::{class_of_cell_table, localization_split, TatePoly};
use afl_core::oracle::{self, BfsBall, RPolynomials};
use afl_core::parse::parse_group;
use afl_core::root_datum::Cocharacter;
use afl_core::shtuka::{bound_dimension, is_admissible, local_model_class, BoundTuple};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Check = Result<String, String>;

const AFFINE_GROUPS: [&str; 4] = ["SL2", "SL3", "C2", "G2"];

fn group(spec: &str) -> AffineWeylGroup {
    AffineWeylGroup::new(parse_group(spec).expect("group spec"))
}

fn lengths(g: &AffineWeylGroup) -> Check {
    let ball = BfsBall::new(g, 8, &[g.identity()]);
    let n = oracle::check_lengths(g, &ball)?;
    let listed = g.enumerate_by_length(8, &[g.identity()], 8).map_err(|e| e.to_string())?;
    if listed.len() != n {
        return Err(format!("{}: enumeration has {} elements, search {n}", g.datum().label(), listed.len()));
    }
    Ok(format!("{n}"))
}

fn c1() -> Check {
    let mut total = 0;
    let mut parts = Vec::new();
    for spec in AFFINE_GROUPS {
        let n: usize = lengths(&group(spec))?.parse().unwrap();
        total += n;
        parts.push(format!("{spec} {n}"));
    }
    Ok(format!("{total} elements ({})", parts.join(", ")))
}

fn c2() -> Check {
    let mut total = 0;
    for spec in AFFINE_GROUPS {
        let g = group(spec);
        let ball = BfsBall::new(&g, 6, &[g.identity()]);
        for f in Facet::all(&g) {
            total += oracle::check_root_counts(&g, &f, 6, &[g.identity()], &ball)?;
        }
    }
    Ok(format!("{total} minimal representatives"))
}

fn c3() -> Check {
    let mut total = 0;
    for spec in AFFINE_GROUPS {
        let g = group(spec);
        let ball = BfsBall::new(&g, 6, &[g.identity()]);
        total += oracle::check_bruhat(&g, &ball, 6)?;
    }
    Ok(format!("{total} pairs"))
}

fn c4() -> Check {
    let g = group("GL2");
    let t = flag_cells::schubert_cells(&g, &flag_cells::grassmannian_coset(&g, &Cocharacter(vec![1, 0])).map_err(|e| e.to_string())?);
    let dims: Vec<usize> = t.rows.iter().map(|r| r.dim).collect();
    if dims != [0, 1] {
        return Err(format!("cell dimensions {dims:?}"));
    }
    let m = class_of_cell_table(&t);
    if m.poly != TatePoly::from_coeffs([(0, 1), (1, 1)]) {
        return Err(format!("class {}", m.poly));
    }
    for q in [2i64, 3, 5] {
        let n = m.point_count(q).map_err(|e| e.to_string())?;
        if n != (q + 1).into() {
            return Err(format!("{n} points over F_{q}"));
        }
    }
    Ok(format!("cells A^0, A^1; class {}", m.poly))
}

fn c5() -> Check {
    let mut pairs = 0;
    for spec in ["SL2", "SL3", "PGL2"] {
        let g = group(spec);
        let d = g.datum();
        let mus = d.dominant_cocharacters(12).map_err(|e| e.to_string())?;
        let cosets: Vec<DoubleCoset> =
            mus.iter().map(|m| flag_cells::grassmannian_coset(&g, m)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
        for (a, ca) in mus.iter().zip(&cosets) {
            for (b, cb) in mus.iter().zip(&cosets) {
                let induced = flag_cells::coset_bruhat_leq(&g, ca, cb).map_err(|e| e.to_string())?;
                let dom = d.dominance_leq(a, b).map_err(|e| e.to_string())?;
                if induced != dom {
                    return Err(format!("{spec}: {a} vs {b}: Bruhat {induced}, dominance {dom}"));
                }
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs"))
}

/// Distinct double cosets with a minimal representative of length at most
/// `max_len`, over all facet pairs.
fn small_cosets(g: &AffineWeylGroup, max_len: usize, omegas: &[IwElement]) -> Vec<DoubleCoset> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let facets = Facet::all(g);
    for right in &facets {
        let reps = flag_cells::min_reps_by_length(g, right, max_len, omegas).unwrap();
        for left in &facets {
            for w in &reps {
                let c = flag_cells::double_coset_of(g, w, left, right);
                if seen.insert((left.nodes().to_vec(), right.nodes().to_vec(), c.min_rep.clone())) {
                    out.push(c);
                }
            }
        }
    }
    out
}

fn omegas_of(g: &AffineWeylGroup, mus: &[&[i64]]) -> Vec<IwElement> {
    let mut out: Vec<IwElement> = Vec::new();
    for m in mus {
        let tau = g.omega_part(&g.loop_translation(&Cocharacter(m.to_vec())));
        if !out.contains(&tau) {
            out.push(tau);
        }
    }
    out
}

fn localization(g: &AffineWeylGroup, t: &CellTable) -> Result<usize, String> {
    let n = t.rows.len();
    let whole = class_of_cell_table(t).poly;
    let below: Vec<Vec<bool>> =
        t.rows.iter().map(|a| t.rows.iter().map(|b| g.bruhat_leq(&b.rep, &a.rep)).collect()).collect();
    let mut closed_count = 0;
    for mask in 0u32..(1 << n) {
        let subset: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let closed = subset.iter().all(|&i| (0..n).all(|j| !below[i][j] || mask >> j & 1 == 1));
        match localization_split(t, &subset) {
            Ok((z, u)) => {
                if !closed {
                    return Err(format!("subset {subset:?} accepted but not closed"));
                }
                let mut direct = TatePoly::zero();
                for &i in &subset {
                    direct.add_term(t.rows[i].dim as i64, 1);
                }
                if z.poly != direct || &z.poly + &u.poly != whole {
                    return Err(format!("subset {subset:?}: {} + {} != {whole}", z.poly, u.poly));
                }
                closed_count += 1;
            }
            Err(_) if !closed => {}
            Err(e) => return Err(format!("subset {subset:?} rejected: {e}")),
        }
    }
    Ok(closed_count)
}

fn c6() -> Check {
    let mut tables = 0;
    let mut subsets = 0;
    for (spec, omegas) in [
        ("SL2", vec![]),
        ("PGL2", vec![&[0i64][..], &[1][..]]),
        ("GL2", vec![&[0, 0][..], &[1, 0][..]]),
        ("SL3", vec![]),
        ("C2", vec![]),
        ("G2", vec![]),
    ] {
        let g = group(spec);
        let omegas = if omegas.is_empty() { vec![g.identity()] } else { omegas_of(&g, &omegas) };
        for c in small_cosets(&g, 5, &omegas) {
            let t = flag_cells::schubert_cells(&g, &c);
            if t.len() > 12 {
                continue;
            }
            subsets += localization(&g, &t)?;
            tables += 1;
        }
    }
    Ok(format!("{tables} tables, {subsets} closed subsets"))
}

fn c7() -> Check {
    let mut total = 0;
    for spec in AFFINE_GROUPS {
        let g = group(spec);
        for f in Facet::all(&g) {
            for w in flag_cells::min_reps_by_length(&g, &f, 6, &[g.identity()]).map_err(|e| e.to_string())? {
                oracle::check_fiber_identity(&g, &w, &f)?;
                total += 1;
            }
        }
    }
    Ok(format!("{total} cosets"))
}

fn kl_basic(kl: &KazhdanLusztig<'_>, ball: &BfsBall) -> Result<usize, String> {
    let g = kl.group();
    let mut n = 0;
    for w in ball.elements() {
        let lw = g.length(w);
        for (x, p) in kl.column_of(w).map_err(|e| e.to_string())? {
            let lx = g.length(&x);
            let ok = if &x == w {
                p.0 == [1]
            } else {
                p.coeff(0) == 1 && 2 * p.degree().unwrap_or(0) < lw - lx
            };
            if !ok {
                return Err(format!("P({}, {}) = {p}", g.display(&x), g.display(w)));
            }
            n += 1;
        }
    }
    Ok(n)
}

fn translation_invariance(kl: &KazhdanLusztig<'_>, ball: &BfsBall, taus: &[IwElement]) -> Result<usize, String> {
    let g = kl.group();
    let mut n = 0;
    for w in ball.elements() {
        let col = kl.column_of(w).map_err(|e| e.to_string())?;
        for tau in taus {
            let wt = g.multiply(w, tau);
            let shifted = kl.column_of(&wt).map_err(|e| e.to_string())?;
            if shifted.len() != col.len() {
                return Err(format!("interval below {} changes size under Omega", g.display(w)));
            }
            for (x, p) in &col {
                let q = kl.kl_polynomial(&g.multiply(x, tau), &wt).map_err(|e| e.to_string())?;
                if &q != p {
                    return Err(format!("P changes under Omega at {}", g.display(x)));
                }
                n += 1;
            }
        }
    }
    Ok(n)
}

fn c8() -> Check {
    let mut pairs = 0;
    for (spec, radius) in [("SL2", 8), ("SL3", 6), ("C2", 6), ("G2", 5)] {
        let g = group(spec);
        let kl = KazhdanLusztig::new(&g, 8);
        pairs += kl_basic(&kl, &BfsBall::new(&g, radius, &[g.identity()]))?;
    }
    for (spec, mus) in [("PGL2", vec![&[1i64][..]]), ("PGL3", vec![&[1, 0][..], &[0, 1][..]])] {
        let g = group(spec);
        let kl = KazhdanLusztig::new(&g, 8);
        let taus = omegas_of(&g, &mus);
        pairs += translation_invariance(&kl, &BfsBall::new(&g, 4, &[g.identity()]), &taus)?;
    }
    // affine A1: all polynomials equal 1, checked through R-polynomials
    let g = group("SL2");
    let kl = KazhdanLusztig::new(&g, 8);
    let mut rp = RPolynomials::new(&g);
    let ball = BfsBall::new(&g, 8, &[g.identity()]);
    for w in ball.elements() {
        for (x, p) in kl.column_of(w).map_err(|e| e.to_string())? {
            if p.0 != [1] {
                return Err(format!("affine A1: P({}, {}) = {p}", g.display(&x), g.display(w)));
            }
        }
        pairs += oracle::check_kl_inversion(&kl, &mut rp, w)?;
    }
    let mut ics = 0;
    for spec in ["SL2", "PGL2", "SL3", "C2", "G2"] {
        let g = group(spec);
        let kl = KazhdanLusztig::new(&g, 16);
        for c in small_cosets(&g, 4, &[g.identity()]) {
            let t = flag_cells::schubert_cells(&g, &c);
            let ic = ic_class(&g, &kl, &t).map_err(|e| e.to_string())?;
            if ic.schubert != class_of_cell_table(&t).poly {
                return Err(format!("{spec}: specialization of IC at {} differs", t.bound_label(&g)));
            }
            ics += 1;
        }
    }
    Ok(format!("{pairs} pairs, {ics} IC classes"))
}

fn c9() -> Check {
    let g = group("PGL2");
    let d = g.datum();
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut admissible = 0;
    for _ in 0..1000 {
        let n = rng.gen_range(0..=5);
        let mu: Vec<Cocharacter> = (0..n).map(|_| Cocharacter(vec![rng.gen_range(0..=4)])).collect();
        let sum = mu.iter().fold(Cocharacter(vec![0]), |a, m| a.add(m));
        let direct = d.coroot_coordinates(&sum.0).ok_or("no coroot coordinates")?.iter().all(|x| x.is_integer());
        let got = is_admissible(d, &mu).map_err(|e| e.to_string())?;
        if got != direct {
            return Err(format!("{mu:?}: admissible {got}, coroot lattice {direct}"));
        }
        if got {
            admissible += 1;
            let b = BoundTuple::new(d, mu).map_err(|e| e.to_string())?;
            let m = local_model_class(&g, &b).map_err(|e| e.to_string())?;
            if m.poly.degree() != Some(bound_dimension(d, &b) as i64) {
                return Err(format!("dimension {} but class {}", bound_dimension(d, &b), m.poly));
            }
        }
    }
    Ok(format!("1000 tuples, {admissible} admissible"))
}

const GOLDEN: &[&[&str]] = &[
    &["group", "--group", "G2", "--format", "json"],
    &["enumerate", "--group", "SL3", "--maxlen", "5", "--format", "json"],
    &["enumerate", "--group", "PGL2", "--maxlen", "4", "--omega", "0;1", "--format", "tsv"],
    &["cells", "--group", "GL2", "--facets", "0,0", "--bound", "1,0", "--format", "tsv"],
    &["cells", "--group", "SL3", "--facets", "a0,a0", "--bound", "word:s0 s1 s2 s1", "--format", "json"],
    &["cells", "--group", "C2", "--facets", "0,a0", "--bound", "2,0", "--format", "dot"],
    &["cells", "--group", "G2", "--facets", "0,0", "--bound", "0,1", "--verify"],
    &["motive", "--group", "SL2", "--facets", "a0,0", "--maxlen", "0"],
    &["motive", "--group", "SL3", "--facets", "a0,a0", "--maxlen", "4", "--format", "json", "--q", "2,3"],
    &["motive", "--group", "C2", "--facets", "0,0", "--bound", "1,1", "--q", "2"],
    &["bruhat", "--group", "SL3", "--v", "word:s1", "--w", "word:s0 s1 s2", "--format", "json"],
    &["kl", "--group", "SL3", "--w", "word:s1 s2 s0 s1 s2", "--verify"],
    &["ic", "--group", "SL3", "--facets", "0,0", "--bound", "2,-1", "--format", "json"],
    &["shtuka", "--group", "PGL2", "--mu", "w,w,w"],
    &["shtuka", "--group", "SL3", "--mu", "1,1;2,1", "--partition", "1;2"],
    &["cells", "--group", "SL2", "--bound", "x"],
];

fn run_cli(args: &[&str], threads: &str) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_afl"))
        .args(args)
        .args(["--threads", threads])
        .output()
        .map_err(|e| e.to_string())?;
    let mut bytes = out.stdout;
    bytes.extend_from_slice(&out.stderr);
    bytes.extend_from_slice(format!("{:?}", out.status.code()).as_bytes());
    Ok(bytes)
}

fn c10() -> Check {
    for args in GOLDEN {
        let a = run_cli(args, "1")?;
        let b = run_cli(args, "1")?;
        let c = run_cli(args, "4")?;
        if a != b || a != c {
            return Err(format!("output of `afl {}` varies", args.join(" ")));
        }
    }
    Ok(format!("{} invocations", GOLDEN.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Check, Option<u64>); 10] = [
        ("length equals breadth-first word length", c1, Some(30)),
        ("root count equals coset length", c2, Some(60)),
        ("Bruhat recursion equals subword search", c3, None),
        ("GL2 Grassmannian cell is the projective line", c4, None),
        ("induced order on dominant coweights is dominance", c5, None),
        ("localization additivity over closed subsets", c6, None),
        ("fiber product formula for parabolic cosets", c7, None),
        ("Kazhdan-Lusztig sanity suite", c8, Some(60)),
        ("PGL2 admissibility and bound dimension", c9, None),
        ("CLI determinism across runs and threads", c10, None),
    ];
    let mut failed = 0;
    let mut seen = HashSet::new();
    for (i, (name, f, limit)) in criteria.iter().enumerate() {
        assert!(seen.insert(name));
        let start = Instant::now();
        let result = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let result = match (result, limit) {
            (Ok(_), Some(s)) if took > Duration::from_secs(*s) => Err(format!("took {took:.1?}, limit {s} s")),
            (r, _) => r,
        };
        match result {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{took:.2?}]", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {e} [{took:.2?}]", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
