//! `afl`: reports on affine flag varieties, their cells, motives and
//! Kazhdan-Lusztig classes.

use std::fmt::Write as _;
use std::process::ExitCode;

use afl_core::affine_weyl::{AffineWeylGroup, IwElement};
use afl_core::flag_cells;
use afl_core::kl_hecke::{ic_class, KazhdanLusztig};
use afl_core::motive::{class_of_cell_table, truncated_flag_class, MotiveClass};
use afl_core::oracle;
use afl_core::parse;
use afl_core::shtuka::{shtuka_report, BoundTuple};
use afl_core::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

/// Hard cap on lengths unless `AFL_MAX_LEN` says otherwise.
const DEFAULT_CAP: usize = 40;

#[derive(Parser)]
#[command(name = "afl", version, about = "Cells, motives and KL classes of affine flag varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Dot,
    Text,
}

#[derive(Args)]
struct Common {
    /// group spec, e.g. SL2, PGL3, GL2, G2, B3ad, SL2xGL2
    #[arg(long)]
    group: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// worker threads (output does not depend on it)
    #[arg(long)]
    threads: Option<usize>,
    /// rerun the independent oracles and fail on any mismatch
    #[arg(long)]
    verify: bool,
    /// cap on lengths and dimensions
    #[arg(long)]
    maxlen: Option<usize>,
    /// cap on lengths for Kazhdan-Lusztig polynomials
    #[arg(long)]
    max_kl_len: Option<usize>,
    /// components of pi_0 to include, as cocharacters separated by ';'
    #[arg(long)]
    omega: Option<String>,
    #[arg(long, env = "AFL_MAX_LEN", hide_env_values = true)]
    cap: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Root datum of a group
    Group(Common),
    /// Elements of the extended affine Weyl group by length
    Enumerate(Common),
    /// Schubert cells below a bound
    Cells {
        #[command(flatten)]
        common: Common,
        /// facet pair f',f: a0, 0 or J=i+j
        #[arg(long, default_value = "0,0")]
        facets: String,
        /// cocharacter, word:<affine word> or {"t":[..],"w":".."}
        #[arg(long, allow_hyphen_values = true)]
        bound: String,
    },
    /// Class in the Grothendieck ring of a Schubert variety or a truncated flag variety
    Motive {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "a0,0")]
        facets: String,
        #[arg(long, allow_hyphen_values = true)]
        bound: Option<String>,
        /// point counts at these q, comma separated
        #[arg(long)]
        q: Option<String>,
    },
    /// Bruhat order test v <= w
    Bruhat {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
    },
    /// Kazhdan-Lusztig polynomials P_{v,w} for all v <= w
    Kl {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
    },
    /// Class of the intersection motive of a Schubert variety
    Ic {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "0,0")]
        facets: String,
        #[arg(long, allow_hyphen_values = true)]
        bound: String,
        #[arg(long, default_value_t = 0)]
        twist: i64,
    },
    /// Bound combinatorics for iterated shtukas
    Shtuka {
        #[command(flatten)]
        common: Common,
        /// legs separated by ';' (or ',' in rank one)
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        /// ordered partition of I, blocks separated by ';', e.g. 1,2;3
        #[arg(long)]
        partition: Option<String>,
        #[arg(long, default_value_t = 0)]
        level_degree: u64,
        /// full request as JSON {"group","I","partition","mu","level_degree"}
        #[arg(long)]
        request: Option<String>,
    },
}

struct Failure {
    code: &'static str,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: e.code(), message: e.to_string() }
    }
}

fn verify_failed(message: String) -> Failure {
    Failure { code: "E_VERIFY", message }
}

type Out = Result<String, Failure>;

impl Common {
    fn cap(&self) -> usize {
        self.cap.unwrap_or(DEFAULT_CAP)
    }

    fn group(&self) -> Result<AffineWeylGroup, Failure> {
        let spec = self.group.as_deref().ok_or_else(|| Failure { code: "E_PARSE", message: "--group is required".into() })?;
        Ok(AffineWeylGroup::new(parse::parse_group(spec)?))
    }

    fn max_len(&self, default: usize) -> Result<usize, Failure> {
        let cap = self.cap();
        let v = self.maxlen.unwrap_or(default.min(cap));
        if v > cap {
            return Err(Error::Limit { what: "maxlen", value: v, cap }.into());
        }
        Ok(v)
    }

    fn kl(&self) -> Result<usize, Failure> {
        let cap = self.cap();
        let v = self.max_kl_len.unwrap_or(cap.min(16));
        if v > cap {
            return Err(Error::Limit { what: "max-kl-len", value: v, cap }.into());
        }
        Ok(v)
    }

    fn omegas(&self, g: &AffineWeylGroup) -> Result<Vec<IwElement>, Failure> {
        let Some(spec) = &self.omega else { return Ok(vec![g.identity()]) };
        let mut out: Vec<IwElement> = Vec::new();
        for part in spec.split(';') {
            let mu = parse::parse_cocharacter(g.datum(), part)?;
            let tau = g.omega_part(&g.loop_translation(&mu));
            if !out.contains(&tau) {
                out.push(tau);
            }
        }
        Ok(out)
    }

    fn only(&self, allowed: &[Format]) -> Result<(), Failure> {
        if allowed.contains(&self.format) {
            Ok(())
        } else {
            Err(Failure { code: "E_PARSE", message: "output format not available for this subcommand".into() })
        }
    }
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json");
    s.push('\n');
    s
}

fn run_group(c: &Common) -> Out {
    c.only(&[Format::Json, Format::Text])?;
    let g = c.group()?;
    let d = g.datum();
    if c.format == Format::Json {
        return Ok(pretty(&serde_json::to_value(d.to_json()).expect("json")));
    }
    let mut s = String::new();
    let _ = writeln!(s, "group {}", d.label());
    let _ = writeln!(s, "rank {} (semisimple {})", d.rank(), d.semisimple_rank());
    for (i, (a, av)) in d.simple_roots().iter().zip(d.simple_coroots()).enumerate() {
        let _ = writeln!(s, "alpha_{} = {:?}  coroot = {:?}", i + 1, a, av);
    }
    let _ = writeln!(s, "positive roots {}", d.positive_roots().count());
    let _ = writeln!(s, "pi_1 invariant factors {:?}", d.pi1_invariant_factors());
    let labels: Vec<&str> = g.generators().iter().map(|s| s.label.as_str()).collect();
    let _ = writeln!(s, "simple affine reflections {}", labels.join(" "));
    Ok(s)
}

fn run_enumerate(c: &Common) -> Out {
    c.only(&[Format::Json, Format::Tsv, Format::Text])?;
    let g = c.group()?;
    g.simple_reflections()?;
    let len = c.max_len(4)?;
    let omegas = c.omegas(&g)?;
    let elems = g.enumerate_by_length(len, &omegas, c.cap())?;
    if c.verify {
        let ball = oracle::BfsBall::new(&g, len, &omegas);
        oracle::check_lengths(&g, &ball).map_err(verify_failed)?;
        if ball.len() != elems.len() {
            return Err(verify_failed(format!("{} elements enumerated, {} reached by search", elems.len(), ball.len())));
        }
    }
    let mut s = String::new();
    if c.format == Format::Tsv {
        s.push_str("element\tlength\n");
    }
    for w in &elems {
        let l = g.length(w);
        match c.format {
            Format::Json => {
                let e = g.to_json(w);
                let _ = writeln!(s, "{}", json!({"t": e.t, "w": e.w, "length": l}));
            }
            Format::Tsv => {
                let _ = writeln!(s, "{}\t{l}", g.display(w));
            }
            _ => {
                let _ = writeln!(s, "{l} {}", g.display(w));
            }
        }
    }
    Ok(s)
}

fn coset(c: &Common, g: &AffineWeylGroup, facets: &str, bound: &str) -> Result<flag_cells::DoubleCoset, Failure> {
    let (left, right) = parse::parse_facet_pair(g, facets)?;
    let w = parse::parse_element(g, bound)?;
    let dc = flag_cells::double_coset_of(g, &w, &left, &right);
    let dim = flag_cells::coset_length(g, &dc);
    if dim > c.cap() {
        return Err(Error::Limit { what: "dimension of the bound", value: dim, cap: c.cap() }.into());
    }
    Ok(dc)
}

fn verify_table(g: &AffineWeylGroup, t: &flag_cells::CellTable) -> Result<(), Failure> {
    let right = &t.bound.right;
    for r in &t.rows {
        let by_roots = flag_cells::cell_dimension_by_roots(g, &r.rep, right);
        if by_roots != r.dim {
            return Err(verify_failed(format!("cell {}: dimension {} but root count {by_roots}", t.label(g, &r.rep), r.dim)));
        }
    }
    let a = flag_cells::coset_length(g, &t.bound);
    let b = flag_cells::cell_dimension(g, &t.bound);
    let top = t.rows.iter().map(|r| r.dim).max().unwrap_or(0);
    if a != b || a != top {
        return Err(verify_failed(format!("orbit dimension {a}, largest Iwahori cell {b}, top row {top}")));
    }
    for (i, r) in t.rows.iter().enumerate() {
        for (j, s) in t.rows.iter().enumerate() {
            let (word, tau) = g.reduced_word(&s.rep);
            let below = oracle::subword_products(g, &word, &tau)
                .iter()
                .any(|x| flag_cells::coset_min_rep(g, x, right) == r.rep);
            if below != g.bruhat_leq(&r.rep, &s.rep) {
                return Err(verify_failed(format!("order of rows {i} and {j} disagrees with subwords")));
            }
        }
    }
    Ok(())
}

fn run_cells(c: &Common, facets: &str, bound: &str) -> Out {
    let g = c.group()?;
    g.simple_reflections()?;
    let dc = coset(c, &g, facets, bound)?;
    let t = flag_cells::schubert_cells(&g, &dc);
    if c.verify {
        verify_table(&g, &t)?;
    }
    Ok(match c.format {
        Format::Json => pretty(&serde_json::to_value(t.to_json(&g)).expect("json")),
        Format::Tsv => t.to_tsv(&g),
        Format::Dot => t.to_dot(&g),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "{} {} bound {}: {} cells", g.datum().label(), facets, t.bound_label(&g), t.len());
            for (i, r) in t.rows.iter().enumerate() {
                let _ = writeln!(s, "{i:>4}  dim {:>3}  {}  orbit {}", r.dim, t.label(&g, &r.rep), t.label(&g, &r.orbit));
            }
            s
        }
    })
}

fn point_counts(m: &MotiveClass, q: &Option<String>) -> Result<Vec<(i64, String)>, Failure> {
    let Some(list) = q else { return Ok(Vec::new()) };
    list.split(',')
        .map(|t| {
            let q: i64 = t.trim().parse().map_err(|_| Error::Parse { what: "q", detail: format!("not an integer: {t:?}") })?;
            Ok((q, m.point_count(q)?.to_string()))
        })
        .collect()
}

fn run_motive(c: &Common, facets: &str, bound: &Option<String>, q: &Option<String>) -> Out {
    c.only(&[Format::Json, Format::Text])?;
    let g = c.group()?;
    g.simple_reflections()?;
    let m = match bound {
        Some(b) => {
            let dc = coset(c, &g, facets, b)?;
            let t = flag_cells::schubert_cells(&g, &dc);
            if c.verify {
                verify_table(&g, &t)?;
            }
            class_of_cell_table(&t)
        }
        None => {
            let (left, right) = parse::parse_facet_pair(&g, facets)?;
            let len = c.max_len(4)?;
            let omegas = c.omegas(&g)?;
            let m = truncated_flag_class(&g, &left, &right, len, &omegas)?;
            if c.verify && left.is_alcove() {
                // histogram of lengths by breadth-first search over W, pushed to W/W_J
                let w0 = flag_cells::longest_element(&g, &right);
                let ball = oracle::BfsBall::new(&g, len + g.length(&w0), &omegas);
                let mut expect = afl_core::motive::TatePoly::zero();
                for w in ball.elements() {
                    let d = ball.distance(w).unwrap();
                    if d <= len && flag_cells::is_min_rep(&g, w, &right) {
                        expect.add_term(d as i64, 1);
                    }
                }
                if expect != m.poly {
                    return Err(verify_failed(format!("class {} but search gives {}", m.poly, expect)));
                }
            }
            m
        }
    };
    let counts = point_counts(&m, q)?;
    Ok(match c.format {
        Format::Json => {
            let mut v = json!({"class": m.poly, "source": m.source});
            if !counts.is_empty() {
                let pc: serde_json::Map<String, serde_json::Value> =
                    counts.iter().map(|(q, n)| (q.to_string(), json!(n))).collect();
                v["point_counts"] = serde_json::Value::Object(pc);
            }
            pretty(&v)
        }
        _ => {
            let mut s = format!("{}\n", m.poly);
            for (q, n) in counts {
                let _ = writeln!(s, "q={q}: {n}");
            }
            s
        }
    })
}

fn run_bruhat(c: &Common, v: &str, w: &str) -> Out {
    c.only(&[Format::Json, Format::Text])?;
    let g = c.group()?;
    let (v, w) = (parse::parse_element(&g, v)?, parse::parse_element(&g, w)?);
    let lw = g.length(&w);
    if lw > c.cap() {
        return Err(Error::Limit { what: "length", value: lw, cap: c.cap() }.into());
    }
    let leq = g.bruhat_leq(&v, &w);
    if c.verify {
        let (word, tau) = g.reduced_word(&w);
        if oracle::subword_products(&g, &word, &tau).contains(&v) != leq {
            return Err(verify_failed("recursion and subword search disagree".into()));
        }
    }
    Ok(match c.format {
        Format::Json => pretty(&json!({
            "v": g.to_json(&v), "w": g.to_json(&w),
            "length_v": g.length(&v), "length_w": lw, "leq": leq
        })),
        _ => format!("{leq}\n"),
    })
}

fn run_kl(c: &Common, w: &str) -> Out {
    c.only(&[Format::Json, Format::Tsv, Format::Text])?;
    let g = c.group()?;
    let w = parse::parse_element(&g, w)?;
    let kl = KazhdanLusztig::new(&g, c.kl()?);
    let column = kl.column_of(&w)?;
    if c.verify {
        let mut rp = oracle::RPolynomials::new(&g);
        oracle::check_kl_inversion(&kl, &mut rp, &w).map_err(verify_failed)?;
    }
    let wl = g.display(&w);
    Ok(match c.format {
        Format::Json => {
            let rows: Vec<_> = column
                .iter()
                .map(|(x, p)| json!({"v": g.to_json(x), "w": g.to_json(&w), "P": p.0}))
                .collect();
            pretty(&json!(rows))
        }
        _ => {
            let mut s = String::from("v\tw\tP\n");
            for (x, p) in &column {
                let _ = writeln!(s, "{}\t{wl}\t{p}", g.display(x));
            }
            s
        }
    })
}

fn run_ic(c: &Common, facets: &str, bound: &str, n: i64) -> Out {
    c.only(&[Format::Json, Format::Text])?;
    let g = c.group()?;
    g.simple_reflections()?;
    let dc = coset(c, &g, facets, bound)?;
    let t = flag_cells::schubert_cells(&g, &dc);
    let kl = KazhdanLusztig::new(&g, c.kl()?);
    let ic = afl_core::kl_hecke::twist(&ic_class(&g, &kl, &t)?, n);
    if c.verify && ic.schubert != class_of_cell_table(&t).poly.shift(n) {
        return Err(verify_failed("specialization P -> 1 differs from the Schubert class".into()));
    }
    Ok(match c.format {
        Format::Json => pretty(&serde_json::to_value(&ic).expect("json")),
        _ => format!("{}\n", ic.poly),
    })
}

fn parse_partition(s: &str) -> Result<Vec<Vec<usize>>, Failure> {
    s.split(';')
        .map(|block| {
            block
                .split(',')
                .map(|t| {
                    t.trim().parse::<usize>().map_err(|_| Failure {
                        code: "E_PARSE",
                        message: format!("cannot parse partition: bad index {t:?}"),
                    })
                })
                .collect()
        })
        .collect()
}

fn run_shtuka(c: &Common, mu: &Option<String>, partition: &Option<String>, level: u64, request: &Option<String>) -> Out {
    c.only(&[Format::Json, Format::Text])?;
    let (g, b) = match request {
        Some(r) => {
            let text = if r.trim_start().starts_with('{') {
                r.clone()
            } else {
                std::fs::read_to_string(r).map_err(|e| Failure { code: "E_PARSE", message: format!("cannot read {r}: {e}") })?
            };
            parse::shtuka_tuple(&parse::parse_shtuka_request(&text)?)?
        }
        None => {
            let g = c.group()?;
            let legs = parse::parse_mu_list(g.datum(), mu.as_deref().unwrap_or(""))?;
            let part = match partition {
                Some(p) => parse_partition(p)?,
                None if legs.is_empty() => Vec::new(),
                None => vec![(1..=legs.len()).collect()],
            };
            let b = BoundTuple::with_partition(g.datum(), legs, part, level)?;
            (g, b)
        }
    };
    let kl = KazhdanLusztig::new(&g, c.kl()?);
    let report = shtuka_report(&g, &kl, &b)?;
    if c.verify {
        if let (Some(d), Some(m)) = (report.dimension, &report.local_model_class) {
            if m.degree() != Some(d as i64) {
                return Err(verify_failed(format!("dimension {d} but class {m}")));
            }
        }
        if let (Some(ic), Some(m)) = (&report.ic_class, &report.local_model_class) {
            if &ic.schubert != m {
                return Err(verify_failed("specialization P -> 1 differs from the local model class".into()));
            }
        }
    }
    Ok(pretty(&serde_json::to_value(&report).expect("json")))
}

fn run(cli: &Cli) -> Out {
    let common = match &cli.command {
        Command::Group(c) | Command::Enumerate(c) => c,
        Command::Cells { common, .. }
        | Command::Motive { common, .. }
        | Command::Bruhat { common, .. }
        | Command::Kl { common, .. }
        | Command::Ic { common, .. }
        | Command::Shtuka { common, .. } => common,
    };
    if let Some(n) = common.threads {
        if n == 0 {
            return Err(Failure { code: "E_PARSE", message: "--threads must be positive".into() });
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure { code: "E_DOMAIN", message: e.to_string() })?;
    }
    match &cli.command {
        Command::Group(c) => run_group(c),
        Command::Enumerate(c) => run_enumerate(c),
        Command::Cells { common, facets, bound } => run_cells(common, facets, bound),
        Command::Motive { common, facets, bound, q } => run_motive(common, facets, bound, q),
        Command::Bruhat { common, v, w } => run_bruhat(common, v, w),
        Command::Kl { common, w } => run_kl(common, w),
        Command::Ic { common, facets, bound, twist } => run_ic(common, facets, bound, *twist),
        Command::Shtuka { common, mu, partition, level_degree, request } => {
            run_shtuka(common, mu, partition, *level_degree, request)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            let line = msg.lines().next().unwrap_or("invalid arguments").trim_start_matches("error: ");
            eprintln!("E_PARSE: {line}");
            return ExitCode::from(2);
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("{}: {}", f.code, f.message.replace('\n', " "));
            ExitCode::from(match f.code {
                "E_PARSE" => 2,
                "E_LIMIT" => 4,
                "E_VERIFY" => 5,
                _ => 3,
            })
        }
    }
}
