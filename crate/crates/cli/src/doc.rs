//! The interchange schema: JSON documents for quivers, algebras, multiplicity
//! vectors, elements and signatures. Scalars travel as `"num/den"` strings.

use fatdual::bimod::BimoduleElement;
use fatdual::fatsig::{FatSignature, TraceStep};
use fatdual::{Field, Matrix, Quiver, Rational, F31};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverDoc {
    pub vertices: usize,
    pub arrows: Vec<[usize; 2]>,
}

impl QuiverDoc {
    pub fn from_quiver(q: &Quiver) -> Self {
        QuiverDoc { vertices: q.vertex_count(), arrows: q.arrows().iter().map(|&(s, t)| [s, t]).collect() }
    }

    pub fn to_quiver(&self) -> Result<Quiver, String> {
        Quiver::new(self.vertices, self.arrows.iter().map(|a| (a[0], a[1])).collect()).map_err(|e| e.to_string())
    }
}

/// A triangular algebra: the path algebra of `quiver` split at `split_vertex`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDoc {
    pub quiver: QuiverDoc,
    pub split_vertex: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementDoc {
    pub shape: Vec<usize>,
    /// Rows of the matrix `W ⊗ P2 -> P1`.
    pub data: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegenInput {
    pub w: ElementDoc,
    pub w2: ElementDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandTypeDoc {
    pub shape: Vec<usize>,
    pub multiplicity: usize,
    pub end_dim: usize,
    pub self_ext: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStepDoc {
    pub vertices: usize,
    pub multiplicities: Vec<usize>,
    pub split_vertex: usize,
    pub opposite: bool,
    pub element_space_dim: usize,
    pub group_dim: usize,
    pub stabilizer_dim: usize,
    pub decomposition: Vec<SummandTypeDoc>,
    pub torus_split: usize,
    pub gl_split: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigSpaceDoc {
    pub m: usize,
    pub description: String,
    pub observed_parameters: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureDoc {
    pub gl_degrees: Vec<usize>,
    pub torus_rank: usize,
    pub config_space: Option<ConfigSpaceDoc>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub trace: Option<Vec<TraceStepDoc>>,
}

impl SignatureDoc {
    pub fn from_signature(s: &FatSignature, with_trace: bool) -> Self {
        SignatureDoc {
            gl_degrees: s.gl_degrees.clone(),
            torus_rank: s.torus_rank,
            config_space: s.config_space.as_ref().map(|c| ConfigSpaceDoc {
                m: c.m,
                description: format!("X^({m})/S_{m}, X cofinite in P^1", m = c.m),
                observed_parameters: c.observed.clone(),
            }),
            trace: with_trace.then(|| s.trace.iter().map(trace_doc).collect()),
        }
    }
}

fn trace_doc(s: &TraceStep) -> TraceStepDoc {
    TraceStepDoc {
        vertices: s.vertices,
        multiplicities: s.multiplicities.clone(),
        split_vertex: s.split_vertex,
        opposite: s.opposite,
        element_space_dim: s.element_space_dim,
        group_dim: s.group_dim,
        stabilizer_dim: s.stabilizer_dim,
        decomposition: s
            .decomposition
            .iter()
            .map(|(shape, multiplicity, end_dim, self_ext)| SummandTypeDoc {
                shape: shape.clone(),
                multiplicity: *multiplicity,
                end_dim: *end_dim,
                self_ext: *self_ext,
            })
            .collect(),
        torus_split: s.torus_split,
        gl_split: s.gl_split.clone(),
    }
}

/// The tool name, version, seed and command around every result.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Envelope {
    pub tool: String,
    pub version: String,
    pub seed: u64,
    pub command: String,
    pub result: serde_json::Value,
}

pub fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational, String> {
    Rational::parse(s).ok_or_else(|| format!("not a rational number: {s:?}"))
}

const P31: i128 = (1 << 31) - 1;

/// The residue of a rational with denominator prime to `p`.
pub fn rational_to_f31(r: &Rational) -> Result<F31, String> {
    let p = BigInt::from(P31);
    let num = r.numer().mod_floor(&p).to_u64().unwrap();
    let den = r.denom().mod_floor(&p).to_u64().unwrap();
    let d = F31::new(den).inv().ok_or_else(|| format!("denominator of {} vanishes mod p", rational_string(r)))?;
    Ok(F31::new(num) * d)
}

/// The rational of smallest height reducing to `x`, by the extended Euclidean
/// algorithm stopped below `sqrt(p/2)`; the residue itself when none exists.
pub fn f31_to_rational(x: &F31) -> Rational {
    let bound: i128 = 32767;
    let (mut r0, mut r1) = (P31, x.value() as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 > bound {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if t1 == 0 || t1.abs() > bound {
        return Rational::new(x.value() as i64, 1);
    }
    let (n, d) = if t1 < 0 { (-r1, -t1) } else { (r1, t1) };
    Rational::new(n as i64, d as i64)
}

pub fn element_doc(w: &BimoduleElement<F31>) -> ElementDoc {
    ElementDoc {
        shape: w.shape.clone(),
        data: (0..w.data.rows())
            .map(|r| w.data.row(r).iter().map(|x| rational_string(&f31_to_rational(x))).collect())
            .collect(),
    }
}

/// Rows and columns are checked against the algebra by the caller.
pub fn element_from_doc(d: &ElementDoc) -> Result<(Vec<usize>, Matrix<F31>), String> {
    let rows = d.data.len();
    let cols = d.data.first().map_or(0, |r| r.len());
    if d.data.iter().any(|r| r.len() != cols) {
        return Err("element rows have different lengths".into());
    }
    let mut v = Vec::with_capacity(rows * cols);
    for r in &d.data {
        for s in r {
            v.push(rational_to_f31(&parse_rational(s)?)?);
        }
    }
    Ok((d.shape.clone(), Matrix::from_vec(rows, cols, v)))
}

/// `"1,2,3"`.
pub fn parse_vector(s: &str) -> Result<Vec<usize>, String> {
    s.split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| format!("not a multiplicity vector: {s:?}")))
        .collect()
}

pub fn print_vector(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// A named quiver, `"n:s>t,s>t"`, or a JSON quiver document.
pub fn parse_quiver(s: &str) -> Result<Quiver, String> {
    if let Some(q) = Quiver::named(s) {
        return Ok(q);
    }
    if s.trim_start().starts_with('{') {
        let d: QuiverDoc = serde_json::from_str(s).map_err(|e| format!("bad quiver document: {e}"))?;
        return d.to_quiver();
    }
    let (n, arrows) = s.split_once(':').ok_or_else(|| format!("unknown quiver {s:?}"))?;
    let n: usize = n.trim().parse().map_err(|_| format!("bad vertex count in {s:?}"))?;
    let mut out = Vec::new();
    for a in arrows.split(',').map(str::trim).filter(|a| !a.is_empty()) {
        let (x, y) = a.split_once('>').ok_or_else(|| format!("bad arrow {a:?}"))?;
        let x = x.trim().parse().map_err(|_| format!("bad arrow {a:?}"))?;
        let y = y.trim().parse().map_err(|_| format!("bad arrow {a:?}"))?;
        out.push((x, y));
    }
    Quiver::new(n, out).map_err(|e| e.to_string())
}

pub fn print_quiver(q: &Quiver) -> String {
    let arrows: Vec<String> = q.arrows().iter().map(|(s, t)| format!("{s}>{t}")).collect();
    format!("{}:{}", q.vertex_count(), arrows.join(","))
}
