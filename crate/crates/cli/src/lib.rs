//! The `fatdual` command line: argument parsing, the subcommands and their
//! table and document renderings. [`run`] is the whole program; `main` only
//! forwards its output.

pub mod doc;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fatdual::bimod::BimoduleElement;
use fatdual::degen::default_probes;
use fatdual::roots::classify_root;
use fatdual::{
    census, classify, delta, fat_signature, generic_element, hom_order_leq, positive_roots, quiver_form, search_witness,
    tube_parameters, verify_witness, Error, Field, Gf4, HomOrder, Matrix, OrbitCensus, P1Point, PathAlgebra, Quiver,
    RootKind, TriangularAlgebra, F2, F3, F31,
};
use serde::Serialize;
use serde_json::{json, Value};

use doc::{
    element_doc, element_from_doc, f31_to_rational, parse_quiver, parse_vector, print_quiver, print_vector,
    rational_string, AlgebraDoc, DegenInput, Envelope, QuiverDoc, SignatureDoc,
};

/// Used when neither `--seed` nor `FATDUAL_SEED` is given.
pub const DEFAULT_SEED: u64 = 20_240_101;
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "fatdual", version, about = "Invariants of linear groups over Dynkinian and Euclidean algebras")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Doc,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dynkin, Euclidean or wild type of the underlying graph.
    Classify(QuiverArg),
    /// The Euler form matrix, and q(d) when `--p` is given.
    EulerForm {
        #[command(flatten)]
        quiver: QuiverArg,
        #[arg(long)]
        p: Option<String>,
    },
    /// The null root of a Euclidean quiver.
    Delta(QuiverArg),
    /// Positive roots with coordinates at most `--bound`.
    Roots {
        #[command(flatten)]
        quiver: QuiverArg,
        #[arg(long, default_value_t = 6)]
        bound: u64,
    },
    /// Generic element of a shape and its decomposition.
    Decompose {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long)]
        p: String,
        #[arg(long, default_value_t = 4)]
        trials: usize,
    },
    /// Degeneration check for two elements of one shape.
    DegenCheck {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// A JSON document `{"w": element, "w2": element}`, inline or a path.
        #[arg(long)]
        input: String,
        /// Largest module dimension of the complement `v` in the witness search.
        #[arg(long, default_value_t = 6)]
        bound: usize,
    },
    /// Every element of a shape over a field with at most four elements.
    Census {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: u32,
        /// Append the witness-certified degeneration relation as a DOT digraph.
        #[arg(long)]
        dot: bool,
    },
    /// The fat-subset signature of GL(P, A).
    FatSubset {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long)]
        p: String,
        #[arg(long, default_value_t = fatdual::fatsig::DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long)]
        trace: bool,
    },
}

#[derive(Args, Debug)]
struct QuiverArg {
    /// A name (`kronecker`, `a3`, ...), `n:s>t,...` or a quiver document.
    #[arg(long)]
    quiver: String,
}

#[derive(Args, Debug)]
struct AlgebraArg {
    /// A name, a quiver, or an algebra document with its split vertex.
    #[arg(long)]
    algebra: String,
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

struct Report {
    table: String,
    doc: Value,
}

type Res<T> = std::result::Result<T, Failure>;

fn usage<T>(msg: impl Into<String>) -> Res<T> {
    Err(Failure::Usage(msg.into()))
}

/// Runs one invocation. Exit code 0 on success, 1 on usage errors and 2 when
/// the library rejects the input.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Output { code, stdout: text, stderr: String::new() }
            } else {
                Output { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let seed = match resolve_seed(cli.seed) {
        Ok(s) => s,
        Err(msg) => return Output { code: 1, stdout: String::new(), stderr: format!("error: {msg}\n") },
    };
    let name = command_name(&cli.command);
    match execute(&cli.command, seed) {
        Ok(r) => Output { code: 0, stdout: render(cli.format, name, seed, r), stderr: String::new() },
        Err(Failure::Usage(m)) => Output { code: 1, stdout: String::new(), stderr: format!("error: {m}\n") },
        Err(Failure::Domain(e)) => Output { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn resolve_seed(flag: Option<u64>) -> std::result::Result<u64, String> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var("FATDUAL_SEED") {
        Ok(v) => v.trim().parse().map_err(|_| format!("FATDUAL_SEED is not an integer: {v:?}")),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Classify(_) => "classify",
        Command::EulerForm { .. } => "euler-form",
        Command::Delta(_) => "delta",
        Command::Roots { .. } => "roots",
        Command::Decompose { .. } => "decompose",
        Command::DegenCheck { .. } => "degen-check",
        Command::Census { .. } => "census",
        Command::FatSubset { .. } => "fat-subset",
    }
}

fn render(format: Format, command: &str, seed: u64, r: Report) -> String {
    match format {
        Format::Table => format!("# fatdual {VERSION} seed {seed}\n{}", r.table),
        Format::Doc => {
            let env = Envelope {
                tool: "fatdual".into(),
                version: VERSION.into(),
                seed,
                command: command.into(),
                result: r.doc,
            };
            serde_json::to_string_pretty(&env).expect("documents serialize") + "\n"
        }
    }
}

fn execute(c: &Command, seed: u64) -> Res<Report> {
    match c {
        Command::Classify(q) => cmd_classify(&quiver(&q.quiver)?),
        Command::EulerForm { quiver: q, p } => cmd_euler(&quiver(&q.quiver)?, p.as_deref()),
        Command::Delta(q) => cmd_delta(&quiver(&q.quiver)?),
        Command::Roots { quiver: q, bound } => cmd_roots(&quiver(&q.quiver)?, *bound),
        Command::Decompose { algebra, p, trials } => cmd_decompose(&algebra.algebra, &vector(p)?, *trials, seed),
        Command::DegenCheck { algebra, input, bound } => cmd_degen(&algebra.algebra, input, *bound, seed),
        Command::Census { algebra, p, q, dot } => {
            let shape = vector(p)?;
            let a = algebra_doc(&algebra.algebra)?;
            match q {
                2 => cmd_census::<F2>(&a, &shape, *dot, seed),
                3 => cmd_census::<F3>(&a, &shape, *dot, seed),
                4 => cmd_census::<Gf4>(&a, &shape, *dot, seed),
                _ => Err(Error::CensusTooLarge(format!("no census field with {q} elements; use 2, 3 or 4")).into()),
            }
        }
        Command::FatSubset { algebra, p, trials, trace } => {
            cmd_fat_subset(&algebra.algebra, &vector(p)?, *trials, *trace, seed)
        }
    }
}

fn quiver(s: &str) -> Res<Quiver> {
    parse_quiver(s).map_err(Failure::Usage)
}

fn vector(s: &str) -> Res<Vec<usize>> {
    parse_vector(s).map_err(Failure::Usage)
}

/// Names and quivers split at their lowest sink; documents name the vertex.
fn algebra_doc(s: &str) -> Res<AlgebraDoc> {
    if s.trim_start().starts_with('{') && s.contains("split_vertex") {
        return serde_json::from_str(s).or_else(|e| usage(format!("bad algebra document: {e}")));
    }
    let q = quiver(s)?;
    let e = match q.sinks().first() {
        Some(&e) => e,
        None => return Err(Error::InvalidAlgebra("quiver has no sink".into()).into()),
    };
    Ok(AlgebraDoc { quiver: QuiverDoc::from_quiver(&q), split_vertex: e })
}

fn triangular<F: Field>(a: &AlgebraDoc) -> Res<TriangularAlgebra<F>> {
    let q = a.quiver.to_quiver().map_err(Failure::Usage)?;
    let pa = PathAlgebra::<F>::new(&q)?;
    Ok(TriangularAlgebra::new(pa.algebra, a.split_vertex)?)
}

fn check_shape<F: Field>(t: &TriangularAlgebra<F>, shape: &[usize]) -> Res<()> {
    if shape.len() != t.num_vertices() {
        return usage(format!("expected {} multiplicities, got {}", t.num_vertices(), shape.len()));
    }
    Ok(())
}

fn table(rows: &[(&str, String)]) -> String {
    let w = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
    rows.iter().map(|(k, v)| format!("{k:<w$}  {v}\n")).collect()
}

fn tuple(v: &[u64]) -> String {
    format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

fn cmd_classify(q: &Quiver) -> Res<Report> {
    let c = classify(q)?;
    let relabeling: Vec<usize> = c.relabeling.clone();
    Ok(Report {
        table: table(&[
            ("quiver", print_quiver(q)),
            ("class", c.tag.to_string()),
            ("relabeling", if relabeling.is_empty() { "-".into() } else { print_vector(&relabeling) }),
        ]),
        doc: json!({
            "quiver": QuiverDoc::from_quiver(q),
            "class": c.tag.to_string(),
            "dynkin": c.is_dynkin(),
            "euclidean": c.is_euclidean(),
            "relabeling": relabeling,
        }),
    })
}

fn cmd_euler(q: &Quiver, p: Option<&str>) -> Res<Report> {
    let f = quiver_form(q);
    let mut t = String::new();
    for row in &f.entries {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
        writeln!(t, "{}", cells.join(" ")).unwrap();
    }
    let mut doc = json!({ "quiver": QuiverDoc::from_quiver(q), "matrix": f.entries });
    if let Some(p) = p {
        let d = vector(p)?;
        if d.len() != q.vertex_count() {
            return usage(format!("dimension vector has {} entries, quiver has {} vertices", d.len(), q.vertex_count()));
        }
        let d: Vec<i64> = d.iter().map(|&x| x as i64).collect();
        let v = f.quadratic(&d);
        writeln!(t, "q({}) = {v}", doc::print_vector(&d.iter().map(|&x| x as usize).collect::<Vec<_>>())).unwrap();
        doc["dimension_vector"] = json!(d);
        doc["tits"] = json!(v);
    }
    Ok(Report { table: t, doc })
}

fn cmd_delta(q: &Quiver) -> Res<Report> {
    let d = delta(q)?;
    Ok(Report {
        table: table(&[("delta", tuple(&d))]),
        doc: json!({ "quiver": QuiverDoc::from_quiver(q), "delta": d }),
    })
}

fn cmd_roots(q: &Quiver, bound: u64) -> Res<Report> {
    let roots = positive_roots(q, bound)?;
    let euclidean = classify(q)?.is_euclidean();
    let mut t = format!("{} positive roots with coordinates <= {bound}\n", roots.len());
    let mut out = Vec::new();
    for r in &roots {
        let kind = match r.kind {
            RootKind::Real => "real",
            RootKind::Imaginary => "imaginary",
        };
        let class = if euclidean { Some(format!("{:?}", classify_root(q, &r.d)?).to_lowercase()) } else { None };
        let defect = r.defect.map_or("-".to_string(), |x| x.to_string());
        writeln!(t, "{:<16} {kind:<9} defect {defect:>3}  {}", tuple(&r.d), class.as_deref().unwrap_or("-")).unwrap();
        out.push(json!({ "d": r.d, "kind": kind, "defect": r.defect, "class": class }));
    }
    Ok(Report { table: t, doc: json!({ "quiver": QuiverDoc::from_quiver(q), "bound": bound, "roots": out }) })
}

#[derive(Serialize)]
struct SummandDoc {
    shape: Vec<usize>,
    dim_vector: Vec<usize>,
    multiplicity: usize,
    end_dim: usize,
    self_ext: usize,
}

fn point_string(p: &P1Point<F31>) -> String {
    match p {
        P1Point::Finite(x) => rational_string(&f31_to_rational(x)),
        P1Point::Infinity => "inf".into(),
    }
}

fn cmd_decompose(alg: &str, shape: &[usize], trials: usize, seed: u64) -> Res<Report> {
    let a = algebra_doc(alg)?;
    let t = triangular::<F31>(&a)?;
    check_shape(&t, shape)?;
    let (w, dec) = generic_element(&t, shape, trials, seed)?;
    let summand = |s: &fatdual::generic::SummandData<F31>| SummandDoc {
        shape: s.element.shape.clone(),
        dim_vector: s.dim_vector.clone(),
        multiplicity: s.multiplicity,
        end_dim: s.end_dim,
        self_ext: s.self_ext,
    };
    let rigid: Vec<SummandDoc> = dec.rigid.iter().map(summand).collect();
    let bricks: Vec<SummandDoc> = dec.delta_bricks.iter().map(summand).collect();
    let params = if bricks.is_empty() {
        None
    } else {
        match tube_parameters(&t, &w, &dec) {
            Ok(p) => Some(p.iter().map(point_string).collect::<Vec<_>>()),
            Err(Error::Unsupported(_)) => None,
            Err(e) => return Err(e.into()),
        }
    };
    let mut tb = table(&[
        ("algebra", format!("{} split at {}", print_quiver(&a.quiver.to_quiver().unwrap()), a.split_vertex)),
        ("shape", print_vector(shape)),
        ("dim End", dec.end_dim.to_string()),
        ("dim Ext^1", dec.self_ext.to_string()),
        ("m", bricks.len().to_string()),
        ("parameters", params.as_ref().map_or("-".into(), |p| p.join(" "))),
    ]);
    tb.push_str("kind    shape      dim vector   mult  End  Ext\n");
    for (kind, list) in [("rigid", &rigid), ("delta", &bricks)] {
        for s in list.iter() {
            writeln!(
                tb,
                "{kind:<7} {:<10} {:<12} {:>4} {:>4} {:>4}",
                print_vector(&s.shape),
                print_vector(&s.dim_vector),
                s.multiplicity,
                s.end_dim,
                s.self_ext
            )
            .unwrap();
        }
    }
    Ok(Report {
        table: tb,
        doc: json!({
            "algebra": a,
            "shape": shape,
            "element": element_doc(&w),
            "end_dim": dec.end_dim,
            "self_ext": dec.self_ext,
            "rigid": rigid,
            "delta_bricks": bricks,
            "m": dec.delta_brick_count(),
            "parameters": params,
        }),
    })
}

fn read_input(s: &str) -> Res<String> {
    if s.trim_start().starts_with('{') {
        return Ok(s.to_string());
    }
    std::fs::read_to_string(s).or_else(|e| usage(format!("cannot read {s}: {e}")))
}

fn element(t: &TriangularAlgebra<F31>, d: &doc::ElementDoc) -> Res<BimoduleElement<F31>> {
    let (shape, data) = element_from_doc(d).map_err(Failure::Usage)?;
    check_shape(t, &shape)?;
    Ok(t.element(&shape, data)?)
}

fn strings(m: &Matrix<F31>) -> Vec<Vec<String>> {
    (0..m.rows()).map(|r| m.row(r).iter().map(|x| rational_string(&f31_to_rational(x))).collect()).collect()
}

fn cmd_degen(alg: &str, input: &str, bound: usize, seed: u64) -> Res<Report> {
    let a = algebra_doc(alg)?;
    let t = triangular::<F31>(&a)?;
    let inp: DegenInput =
        serde_json::from_str(&read_input(input)?).or_else(|e| usage(format!("bad degen-check input: {e}")))?;
    let (w, w2) = (element(&t, &inp.w)?, element(&t, &inp.w2)?);
    let ends = (t.hom_ext(&w, &w).0, t.hom_ext(&w2, &w2).0);
    let probes = default_probes(&t, &w, &w2, seed)?;
    let order = hom_order_leq(&t, &w, &w2, &probes)?;
    let (verdict, probe, witness) = match order {
        HomOrder::Refuted(z) => ("not a degeneration", Some(element_doc(&z)), None),
        HomOrder::Consistent => match search_witness(&t, &w, &w2, bound, seed)? {
            Some(cw) if verify_witness(&t, &w, &w2, &cw)? => ("degeneration", None, Some(cw)),
            Some(_) => return Err(Error::Internal("search returned an invalid witness".into()).into()),
            None => ("inconclusive", None, None),
        },
    };
    let wdoc = witness.as_ref().map(|cw| {
        json!({
            "v": element_doc(&cw.v),
            "alpha": { "alpha1": strings(&cw.alpha.alpha1), "alpha2": cw.alpha.alpha2.iter().map(|x| rational_string(&f31_to_rational(x))).collect::<Vec<_>>() },
            "beta": { "alpha1": strings(&cw.beta.alpha1), "alpha2": cw.beta.alpha2.iter().map(|x| rational_string(&f31_to_rational(x))).collect::<Vec<_>>() },
        })
    });
    let tb = table(&[
        ("shape", print_vector(&w.shape)),
        ("dim End", format!("{} -> {}", ends.0, ends.1)),
        ("hom order", if probe.is_some() { "refuted".into() } else { "consistent".into() }),
        ("witness", witness.as_ref().map_or("-".into(), |cw| format!("verified, v of shape {}", print_vector(&cw.v.shape)))),
        ("verdict", verdict.into()),
    ]);
    Ok(Report {
        table: tb,
        doc: json!({
            "algebra": a,
            "end_dims": [ends.0, ends.1],
            "hom_order": if probe.is_some() { "refuted" } else { "consistent" },
            "refuting_probe": probe,
            "witness": wdoc,
            "verdict": verdict,
        }),
    })
}

fn field_rows<F: Field>(m: &Matrix<F>) -> Vec<Vec<String>> {
    (0..m.rows()).map(|r| m.row(r).iter().map(|x| x.to_string()).collect()).collect()
}

/// Pairs `i -> j` with `j` a verified degeneration of `i`; only pairs with
/// strictly larger End on the target can qualify.
fn degeneration_edges<F: Field>(t: &TriangularAlgebra<F>, c: &OrbitCensus<F>, seed: u64) -> Res<Vec<(usize, usize)>> {
    let bound = c.shape.iter().sum::<usize>() + t.element_space_dim(&c.shape);
    let mut edges = Vec::new();
    for (i, a) in c.orbits.iter().enumerate() {
        for (j, b) in c.orbits.iter().enumerate() {
            if a.end_dim >= b.end_dim {
                continue;
            }
            if let Some(cw) = search_witness(t, &a.representative, &b.representative, bound, seed)? {
                if verify_witness(t, &a.representative, &b.representative, &cw)? {
                    edges.push((i, j));
                }
            }
        }
    }
    Ok(edges)
}

fn cmd_census<F: Field>(a: &AlgebraDoc, shape: &[usize], dot: bool, seed: u64) -> Res<Report> {
    let t = triangular::<F>(a)?;
    check_shape(&t, shape)?;
    let c = census(&t, shape, seed)?;
    if !c.check_counts() {
        return Err(Error::Internal("census counts do not add up".into()).into());
    }
    let mut tb = table(&[
        ("field", F::name()),
        ("shape", print_vector(shape)),
        ("N", c.element_space_dim.to_string()),
        ("|G|", c.group_order.to_string()),
        ("orbits", c.orbits.len().to_string()),
        ("total", format!("{} = {}^{}", c.total(), c.q, c.element_space_dim)),
    ]);
    tb.push_str("orbit  size  End  |Aut|  representative\n");
    for (i, o) in c.orbits.iter().enumerate() {
        let rep: Vec<String> = field_rows(&o.representative.data).iter().map(|r| r.join(" ")).collect();
        writeln!(tb, "{i:>5} {:>5} {:>4} {:>6}  [{}]", o.size, o.end_dim, o.aut_order, rep.join("; ")).unwrap();
    }
    let edges = if dot { Some(degeneration_edges(&t, &c, seed)?) } else { None };
    if let Some(e) = &edges {
        tb.push_str("digraph degenerations {\n");
        for i in 0..c.orbits.len() {
            writeln!(tb, "  o{i} [label=\"{i}: End {}\"];", c.orbits[i].end_dim).unwrap();
        }
        for (i, j) in e {
            writeln!(tb, "  o{i} -> o{j};").unwrap();
        }
        tb.push_str("}\n");
    }
    let orbits: Vec<Value> = c
        .orbits
        .iter()
        .map(|o| {
            json!({
                "representative": field_rows(&o.representative.data),
                "size": o.size.to_string(),
                "end_dim": o.end_dim,
                "aut_order": o.aut_order.to_string(),
            })
        })
        .collect();
    Ok(Report {
        table: tb,
        doc: json!({
            "algebra": a,
            "field": F::name(),
            "shape": shape,
            "element_space_dim": c.element_space_dim,
            "group_order": c.group_order.to_string(),
            "orbits": orbits,
            "hom": c.hom,
            "degenerations": edges,
        }),
    })
}

fn cmd_fat_subset(alg: &str, p: &[usize], trials: usize, trace: bool, seed: u64) -> Res<Report> {
    let a = algebra_doc(alg)?;
    let q = a.quiver.to_quiver().map_err(Failure::Usage)?;
    if p.len() != q.vertex_count() {
        return usage(format!("expected {} multiplicities, got {}", q.vertex_count(), p.len()));
    }
    let pa = PathAlgebra::<F31>::new(&q)?;
    let sig = fat_signature(Arc::clone(&pa.algebra), p, seed, trials)?;
    let mut d = SignatureDoc::from_signature(&sig, trace);
    if let Some(c) = d.config_space.as_mut() {
        if let Some(obs) = c.observed_parameters.as_mut() {
            for s in obs.iter_mut() {
                if let Ok(v) = s.parse::<u64>() {
                    *s = rational_string(&f31_to_rational(&F31::new(v)));
                }
            }
        }
    }
    let mut tb = table(&[
        ("p", print_vector(p)),
        ("gl_degrees", format!("[{}]", print_vector(&d.gl_degrees))),
        ("m", d.torus_rank.to_string()),
        (
            "config",
            d.config_space.as_ref().map_or("none".into(), |c| {
                let obs = c.observed_parameters.as_ref().map_or("-".into(), |o| o.join(" "));
                format!("{}; parameters {obs}", c.description)
            }),
        ),
    ]);
    if let Some(steps) = &d.trace {
        tb.push_str("step  vertices  mult          dim W  dim G  dim Stab  torus  gl_split  decomposition\n");
        for (k, s) in steps.iter().enumerate() {
            let dec: Vec<String> = s
                .decomposition
                .iter()
                .map(|x| format!("{}x({}) End {} Ext {}", x.multiplicity, print_vector(&x.shape), x.end_dim, x.self_ext))
                .collect();
            writeln!(
                tb,
                "{k:>4}  {:>8}  {:<12} {:>6} {:>6} {:>9} {:>6}  {:<8}  {}",
                s.vertices,
                print_vector(&s.multiplicities),
                s.element_space_dim,
                s.group_dim,
                s.stabilizer_dim,
                s.torus_split,
                if s.gl_split.is_empty() { "-".into() } else { print_vector(&s.gl_split) },
                dec.join(", ")
            )
            .unwrap();
        }
    }
    Ok(Report { table: tb, doc: json!({ "algebra": a, "p": p, "signature": d }) })
}
