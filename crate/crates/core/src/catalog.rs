//! Frozen fixtures: the sixteen cubic foliations with a flat Legendre web,
//! their expected invariants, auxiliary families, isotropy samples and the
//! conjugations that bring normal forms onto the listed 1-forms.
//!
//! The data lives in a plain-text manifest (`data/catalog.txt`), one block per
//! fixture:
//!
//! ```text
//! [H1]
//! kind = primary
//! form = y^3*dx - x^3*dy
//! flat = true
//! type = 2·R2
//! cs = (lambda-1)^2*(lambda+1/2)^2
//! convex = true
//! sing = unknown
//! criteria = convex
//! notes = ...
//! ```

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::exactfield::FieldElem;
use crate::foliation::{AffineOneForm, Foliation, Mat3};
use crate::homogeneous::{HomFoliation, HomType};
use crate::multipoly::MPoly;
use crate::parse::{parse_constant, parse_poly};
use crate::web::{Chart, ImplicitWeb};

pub const MANIFEST: &str = include_str!("../data/catalog.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixtureKind {
    Primary,
    Auxiliary,
}

/// A flatness criterion that can be evaluated without curvature.
#[derive(Clone, Debug, PartialEq)]
pub enum Criterion {
    /// The type has no transverse part.
    Convex,
    /// `d omega` vanishes on the line `a x + b y = 0`.
    Divergence(FieldElem, FieldElem),
    /// The barycentre quantity vanishes for the line `a x + b y = 0`.
    Barycentre(FieldElem, FieldElem),
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Criterion::Convex => write!(f, "convex"),
            Criterion::Divergence(a, b) => write!(f, "divergence {} {}", a, b),
            Criterion::Barycentre(a, b) => write!(f, "barycentre {} {}", a, b),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Expected {
    pub flat: Option<bool>,
    pub hom_type: Option<HomType>,
    pub cs_poly: Option<MPoly>,
    pub convex: Option<bool>,
    pub sing_count: Option<usize>,
    pub notes: String,
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub id: String,
    pub kind: FixtureKind,
    /// The 1-form exactly as written in the manifest.
    pub text: String,
    pub form: AffineOneForm,
    pub expected: Expected,
    pub criteria: Vec<Criterion>,
}

impl Fixture {
    pub fn foliation(&self) -> Foliation {
        self.form.to_foliation().expect("catalog forms are valid")
    }

    pub fn homogeneous(&self) -> Option<HomFoliation> {
        HomFoliation::from_affine(&self.form).ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("manifest line {line}: {msg}")]
pub struct ManifestError {
    pub line: usize,
    pub msg: String,
}

fn opt_bool(v: &str) -> Result<Option<bool>, String> {
    match v {
        "true" => Ok(Some(true)),
        "false" => Ok(Some(false)),
        "unknown" | "n/a" => Ok(None),
        _ => Err(format!("expected true/false/unknown, got `{}`", v)),
    }
}

fn parse_criterion(s: &str) -> Result<Criterion, String> {
    let words: Vec<&str> = s.split_whitespace().collect();
    let two = |w: &[&str]| -> Result<(FieldElem, FieldElem), String> {
        match w {
            [a, b] => Ok((parse_constant(a).map_err(|e| e.to_string())?, parse_constant(b).map_err(|e| e.to_string())?)),
            _ => Err(format!("criterion `{}` needs two coefficients", s)),
        }
    };
    match words.first() {
        Some(&"convex") if words.len() == 1 => Ok(Criterion::Convex),
        Some(&"divergence") => two(&words[1..]).map(|(a, b)| Criterion::Divergence(a, b)),
        Some(&"barycentre") => two(&words[1..]).map(|(a, b)| Criterion::Barycentre(a, b)),
        _ => Err(format!("unknown criterion `{}`", s)),
    }
}

#[derive(Default)]
struct Block {
    id: String,
    start: usize,
    fields: Vec<(String, String, usize)>,
}

impl Block {
    fn get(&self, key: &str) -> Option<(&str, usize)> {
        self.fields.iter().find(|(k, _, _)| k == key).map(|(_, v, l)| (v.as_str(), *l))
    }

    fn build(&self) -> Result<Fixture, ManifestError> {
        let err = |line: usize, msg: String| ManifestError { line, msg };
        let need = |key: &str| self.get(key).ok_or_else(|| err(self.start, format!("[{}] lacks `{}`", self.id, key)));
        let (kind, l) = need("kind")?;
        let kind = match kind {
            "primary" => FixtureKind::Primary,
            "aux" => FixtureKind::Auxiliary,
            k => return Err(err(l, format!("unknown kind `{}`", k))),
        };
        let (text, l) = need("form")?;
        let form = AffineOneForm::parse(text).map_err(|e| err(l, e.to_string()))?;
        let (v, l) = need("flat")?;
        let flat = opt_bool(v).map_err(|m| err(l, m))?;
        let (v, l) = need("convex")?;
        let convex = opt_bool(v).map_err(|m| err(l, m))?;
        let hom_type = match self.get("type") {
            None | Some(("n/a", _)) => None,
            Some((v, l)) => Some(HomType::from_str(v).map_err(|e| err(l, e.to_string()))?),
        };
        let cs_poly = match self.get("cs") {
            None | Some(("n/a", _)) => None,
            Some((v, l)) => Some(parse_poly(v, &["lambda"]).map_err(|e| err(l, e.to_string()))?),
        };
        let sing_count = match self.get("sing") {
            None | Some(("unknown", _)) => None,
            Some((v, l)) => Some(v.parse().map_err(|_| err(l, format!("bad count `{}`", v)))?),
        };
        let criteria = match self.get("criteria") {
            None => Vec::new(),
            Some((v, l)) => v.split(';').map(|s| parse_criterion(s.trim()).map_err(|m| err(l, m))).collect::<Result<_, _>>()?,
        };
        let notes = self.get("notes").map(|(v, _)| v.to_string()).unwrap_or_default();
        Ok(Fixture {
            id: self.id.clone(),
            kind,
            text: text.to_string(),
            form,
            expected: Expected { flat, hom_type, cs_poly, convex, sing_count, notes },
            criteria,
        })
    }
}

/// Parse a manifest in the format of [`MANIFEST`].
pub fn parse_manifest(text: &str) -> Result<Vec<Fixture>, ManifestError> {
    let mut out = Vec::new();
    let mut cur: Option<Block> = None;
    for (n, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lno = n + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(id) = line.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
            if let Some(b) = cur.take() {
                out.push(b.build()?);
            }
            cur = Some(Block { id: id.to_string(), start: lno, fields: Vec::new() });
            continue;
        }
        let b = cur.as_mut().ok_or(ManifestError { line: lno, msg: "field outside a block".into() })?;
        let (k, v) = line.split_once('=').ok_or(ManifestError { line: lno, msg: "expected `key = value`".into() })?;
        b.fields.push((k.trim().to_string(), v.trim().to_string(), lno));
    }
    if let Some(b) = cur {
        out.push(b.build()?);
    }
    let mut ids: Vec<&str> = out.iter().map(|f| f.id.as_str()).collect();
    ids.sort_unstable();
    if let Some(w) = ids.windows(2).find(|w| w[0] == w[1]) {
        return Err(ManifestError { line: 0, msg: format!("duplicate id `{}`", w[0]) });
    }
    Ok(out)
}

/// Every fixture, primary ones first, in manifest order.
pub fn load_catalog() -> Vec<Fixture> {
    parse_manifest(MANIFEST).expect("bundled manifest is valid")
}

pub fn primary_fixtures() -> Vec<Fixture> {
    load_catalog().into_iter().filter(|f| f.kind == FixtureKind::Primary).collect()
}

pub fn fixture(id: &str) -> Option<Fixture> {
    load_catalog().into_iter().find(|f| f.id == id)
}

/// Serialize fixtures back to manifest text.
pub fn write_manifest(fixtures: &[Fixture]) -> String {
    let opt = |b: Option<bool>| b.map_or("unknown".to_string(), |b| b.to_string());
    let mut s = String::new();
    for f in fixtures {
        let e = &f.expected;
        s.push_str(&format!("[{}]\n", f.id));
        s.push_str(&format!("kind = {}\n", if f.kind == FixtureKind::Primary { "primary" } else { "aux" }));
        s.push_str(&format!("form = {}\n", f.form));
        s.push_str(&format!("flat = {}\n", opt(e.flat)));
        s.push_str(&format!("type = {}\n", e.hom_type.as_ref().map_or("n/a".into(), |t| t.to_string())));
        s.push_str(&format!("cs = {}\n", e.cs_poly.as_ref().map_or("n/a".into(), |p| p.to_string())));
        s.push_str(&format!("convex = {}\n", opt(e.convex)));
        s.push_str(&format!("sing = {}\n", e.sing_count.map_or("unknown".into(), |n| n.to_string())));
        if !f.criteria.is_empty() {
            let c: Vec<String> = f.criteria.iter().map(|c| c.to_string()).collect();
            s.push_str(&format!("criteria = {}\n", c.join("; ")));
        }
        if !e.notes.is_empty() {
            s.push_str(&format!("notes = {}\n", e.notes));
        }
        s.push('\n');
    }
    s
}

// ---------------------------------------------------------------------------
// families

fn binom(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

fn mono(c: i64, i: u32, j: u32) -> String {
    format!("{}*x^{}*y^{}", c, i, j)
}

fn sum(terms: Vec<String>) -> String {
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// The flat homogeneous families of degree `d`: `k` in `1..=6`; `nu` is used
/// by `k = 3, 4` and must satisfy `1 <= nu <= d - 2`.
pub fn flat_family(k: u32, d: u32, nu: u32) -> Option<AffineOneForm> {
    if d < 3 {
        return None;
    }
    let text = match k {
        1 => format!("y^{d}*dx - x^{d}*dy"),
        2 => format!("x^{d}*dx - y^{d}*dy"),
        3 | 4 => {
            if nu == 0 || nu + 2 > d {
                return None;
            }
            let hi = sum((nu + 1..=d).map(|i| mono(binom(d, i), d - i, i)).collect());
            let lo = sum((0..=nu).map(|i| mono(binom(d, i), d - i, i)).collect());
            if k == 3 {
                format!("({hi})*dx - ({lo})*dy")
            } else {
                format!("{}*({hi})*dx + {}*({lo})*dy", d - nu - 1, nu)
            }
        }
        5 => format!("2*y^{d}*dx + x^{}*({d}*y - {}*x)*dy", d - 1, d - 1),
        6 => format!(
            "({}*x^{d} - {}*x^{}*y + {}*y^{d})*dx + x^{}*({d}*y - {}*x)*dy",
            (d - 1) * (d - 1),
            d * (d - 1),
            d - 1,
            d + 1,
            d - 1,
            d - 1
        ),
        _ => return None,
    };
    Some(AffineOneForm::parse(&text).expect("family text parses"))
}

/// Expected type of [`flat_family`].
pub fn flat_family_type(k: u32, d: u32, nu: u32) -> Option<HomType> {
    let mut t = HomType::default();
    let mut r = |k: u32| *t.radial.entry(k).or_insert(0) += 1;
    match k {
        1 => {
            r(d - 1);
            r(d - 1);
        }
        3 => {
            r(nu);
            r(d - nu - 1);
            r(d - 1);
        }
        4 => {
            r(nu);
            r(d - nu - 1);
        }
        5 => {
            r(d - 2);
            r(d - 1);
        }
        6 => r(d - 2),
        2 => {}
        _ => return None,
    }
    let tr: &[u32] = match k {
        2 => &[d - 1, d - 1],
        4 => &[d - 1],
        5 => &[1],
        6 => &[1, d - 1],
        _ => &[],
    };
    for &j in tr {
        *t.transverse.entry(j).or_insert(0) += 1;
    }
    Some(t)
}

/// `x^3 dx + y^2 (c x + y)(x dy - y dx)`, flat exactly when `c = 0`.
pub fn c_family() -> AffineOneForm {
    AffineOneForm::parse("x^3*dx + y^2*(c*x+y)*(x*dy-y*dx)").expect("parses")
}

// ---------------------------------------------------------------------------
// isotropies and conjugations

/// A sampled element of the isotropy group of a fixture, as the map
/// `[x:y:z] -> M [x:y:z]`.
#[derive(Clone, Debug)]
pub struct IsotropySample {
    pub id: &'static str,
    pub label: &'static str,
    pub matrix: Mat3,
}

fn c(s: &str) -> FieldElem {
    parse_constant(s).expect("constant parses")
}

fn m3(rows: [[&str; 3]; 3]) -> Mat3 {
    rows.map(|r| r.map(c))
}

/// One or two sampled elements per listed generator, with `alpha`, `beta`
/// fixed to small nonzero values.
pub fn isotropy_samples() -> Vec<IsotropySample> {
    // xi = e^{i pi / 6}
    let xi = "(sqrt3 + i)/2";
    let xi4 = "(-1 + i*sqrt3)/2";
    let xi5 = "(-sqrt3 + i)/2";
    let xim1 = "(sqrt3 - i)/2";
    let j = "(-1 + i*sqrt3)/2";
    let j2 = "(-1 - i*sqrt3)/2";
    let s = |id, label, rows| IsotropySample { id, label, matrix: m3(rows) };
    vec![
        s("H1", "[-x:y:2z]", [["-1", "0", "0"], ["0", "1", "0"], ["0", "0", "2"]]),
        s("H1", "[y:x:3z]", [["0", "1", "0"], ["1", "0", "0"], ["0", "0", "3"]]),
        s("H2", "[i x:y:z]", [["i", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]),
        s("H2", "[-i y:x:5z]", [["0", "-i", "0"], ["1", "0", "0"], ["0", "0", "5"]]),
        s("H3", "[y:x:2z]", [["0", "1", "0"], ["1", "0", "0"], ["0", "0", "2"]]),
        s("H4", "[y:x:-z]", [["0", "1", "0"], ["1", "0", "0"], ["0", "0", "-1"]]),
        s("H5", "[x:y:7z]", [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "7"]]),
        s("H6", "[x:y:i z]", [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "i"]]),
        s("H7", "[-x:y:2z]", [["-1", "0", "0"], ["0", "1", "0"], ["0", "0", "2"]]),
        s("H8", "[x:y:3z]", [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "3"]]),
        s("H8", "[-x:y:2z]", [["-1", "0", "0"], ["0", "1", "0"], ["0", "0", "2"]]),
        s("H9", "[x-y:x:2z]", [["1", "-1", "0"], ["1", "0", "0"], ["0", "0", "2"]]),
        s("H9", "[y:y-x:z]", [["0", "1", "0"], ["-1", "1", "0"], ["0", "0", "1"]]),
        s("H10", "[-y:x:3z]", [["0", "-1", "0"], ["1", "0", "0"], ["0", "0", "3"]]),
        s("H11", "[y:x:2z]", [["0", "1", "0"], ["1", "0", "0"], ["0", "0", "2"]]),
        s("H11", "[xi^5 x:x+xi y:z]", [[xi5, "0", "0"], ["1", xi, "0"], ["0", "0", "1"]]),
        s("H11", "[xi^5 x-y:x+xi^-1 y:z]", [[xi5, "-1", "0"], ["1", xim1, "0"], ["0", "0", "1"]]),
        s("H11", "[xi^5 y+xi^4 x:y:2z]", [[xi4, xi5, "0"], ["0", "1", "0"], ["0", "0", "2"]]),
        s("F1", "[4x:8y:z+3x]", [["4", "0", "0"], ["0", "8", "0"], ["3", "0", "1"]]),
        s("F2", "[16x:8y:z-x]", [["16", "0", "0"], ["0", "8", "0"], ["-1", "0", "1"]]),
        s("F3", "[-y:x:z]", [["0", "-1", "0"], ["1", "0", "0"], ["0", "0", "1"]]),
        s("F3", "[z:-x:y]", [["0", "0", "1"], ["-1", "0", "0"], ["0", "1", "0"]]),
        s("F4", "[j x:y:z+2x]", [[j, "0", "0"], ["0", "1", "0"], ["2", "0", "1"]]),
        s("F4", "[j^2 x:y:z-x]", [[j2, "0", "0"], ["0", "1", "0"], ["-1", "0", "1"]]),
        s("F5", "[i^2 x:i^3 y:z]", [["-1", "0", "0"], ["0", "-i", "0"], ["0", "0", "1"]]),
    ]
}

/// `target = factor * phi^* model`, with `phi(x, y) = M (x, y)`.
#[derive(Clone, Debug)]
pub struct Conjugation {
    pub target: &'static str,
    pub model: AffineOneForm,
    pub map: [[FieldElem; 2]; 2],
    pub factor: FieldElem,
}

impl Conjugation {
    pub fn holds(&self) -> bool {
        let t = fixture(self.target).expect("known fixture").form;
        let pulled = self.model.pullback_linear(self.map.clone()).scale(&self.factor);
        pulled.p() == t.p() && pulled.q() == t.q()
    }
}

/// The degree-3 normal forms with reduced transverse divisor, parameters
/// `r, s, t, u` as in their standard presentation.
pub fn normal_form(k: u32) -> Option<AffineOneForm> {
    let text = match k {
        1 => "y^2*((2*r+3)*x-(r+2)*y)*dx - x^2*(x+r*y)*dy",
        2 => "s*y^2*((2*r+3)*x-(r+2)*y)*dx - x^2*(x+r*y)*dy",
        3 => "t*y^2*((2*r+3)*x-(r+2)*y)*dx - x^2*(x+r*y)*(s*dy-dx)",
        4 => "u*y^2*((2*r+3)*x-(r+2)*y)*(dy-s*dx) - x^2*(x+r*y)*(t*dy-dx)",
        _ => return None,
    };
    Some(AffineOneForm::parse(text).expect("parses"))
}

fn specialize(k: u32, vals: &[(&str, &str)]) -> AffineOneForm {
    let v: Vec<(&str, FieldElem)> = vals.iter().map(|(n, s)| (*n, c(s))).collect();
    normal_form(k).unwrap().specialize(&v).expect("parameters exist")
}

pub fn conjugations() -> Vec<Conjugation> {
    let one = FieldElem::one();
    let zero = FieldElem::zero();
    let id = [[one.clone(), zero.clone()], [zero.clone(), one.clone()]];
    let swap = [[zero.clone(), one.clone()], [one.clone(), zero.clone()]];
    let flip_y = [[one.clone(), zero.clone()], [zero.clone(), -&one]];
    let rot = |e: &str| [[one.clone(), zero.clone()], [zero.clone(), c(e)]];
    vec![
        Conjugation {
            target: "H9",
            model: specialize(1, &[("r", "-3/2 - i*sqrt3/2")]),
            map: id.clone(),
            factor: c("-(1 + i*sqrt3)"),
        },
        Conjugation { target: "H9", model: specialize(1, &[("r", "-3/2 + i*sqrt3/2")]), map: swap, factor: c("-2") },
        Conjugation {
            target: "H10",
            model: specialize(2, &[("r", "-sqrt3"), ("s", "-2 - sqrt3")]),
            map: id,
            factor: c("sqrt3"),
        },
        Conjugation {
            target: "H10",
            model: specialize(2, &[("r", "sqrt3"), ("s", "-2 + sqrt3")]),
            map: flip_y,
            factor: c("-sqrt3"),
        },
        Conjugation {
            target: "H11",
            model: specialize(4, &[("r", "-3/2 + i*sqrt3/2"), ("s", "1/2 + i*sqrt3/6"), ("t", "1/2 - i*sqrt3/6"), ("u", "1")]),
            map: rot("-sqrt3/2 - i/2"),
            factor: c("3"),
        },
        Conjugation {
            target: "H11",
            model: specialize(4, &[("r", "-3/2 - i*sqrt3/2"), ("s", "1/2 - i*sqrt3/6"), ("t", "1/2 + i*sqrt3/6"), ("u", "1")]),
            map: rot("-sqrt3/2 + i/2"),
            factor: c("3"),
        },
    ]
}

// ---------------------------------------------------------------------------
// verification

/// One recomputed field of a fixture.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub field: String,
    pub expected: String,
    pub computed: String,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FixtureReport {
    pub id: String,
    pub checks: Vec<Check>,
}

impl FixtureReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.ok)
    }
}

impl fmt::Display for FixtureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", if self.passed() { "PASS" } else { "FAIL" }, self.id)?;
        for c in self.failures() {
            write!(f, "; {}: expected {}, got {}", c.field, c.expected, c.computed)?;
        }
        Ok(())
    }
}

/// Curvature of the Legendre web in the first dual chart where the fiber
/// degree does not drop.
pub fn legendre_flat(fol: &Foliation) -> Result<bool, String> {
    let mut last = String::new();
    for ch in Chart::duals() {
        match ImplicitWeb::legendre(fol, ch) {
            Ok(w) => return w.is_flat().map_err(|e| e.to_string()),
            Err(e) => last = e.to_string(),
        }
    }
    Err(last)
}

fn show<T: fmt::Display, E: fmt::Display>(r: &Result<T, E>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {}", e),
    }
}

fn criterion_holds(h: &HomFoliation, c: &Criterion) -> Result<bool, String> {
    match c {
        Criterion::Convex => h.hom_type().map(|t| t.is_convex()).map_err(|e| e.to_string()),
        Criterion::Divergence(a, b) => h.divergence_test(a, b).map_err(|e| e.to_string()),
        Criterion::Barycentre(a, b) => h.barycentre_q(a, b).map(|q| q.is_zero()).map_err(|e| e.to_string()),
    }
}

/// Recompute every expected field and diff. Unknown expectations are
/// recomputed when cheap and reported without being judged.
pub fn verify_fixture(fx: &Fixture) -> FixtureReport {
    let mut checks = Vec::new();
    let mut push = |field: &str, expected: String, computed: String, ok: bool| {
        checks.push(Check { field: field.into(), expected, computed, ok });
    };
    let fol = match fx.form.to_foliation() {
        Ok(f) => f,
        Err(e) => {
            push("form", fx.text.clone(), format!("error: {}", e), false);
            return FixtureReport { id: fx.id.clone(), checks };
        }
    };
    let e = &fx.expected;
    let hom = fx.homogeneous();

    if let Some(want) = e.flat {
        if fol.degree() == 3 {
            let got = legendre_flat(&fol);
            push("flat", want.to_string(), show(&got), got == Ok(want));
        }
    }
    if let Some(h) = &hom {
        for c in &fx.criteria {
            let got = criterion_holds(h, c);
            push(&format!("criterion {}", c), "true".into(), show(&got), got == Ok(true));
        }
        if h.degree() == 3 {
            if let Some(want) = e.flat {
                let got = h.flat_homog3();
                push("flat_homog3", want.to_string(), show(&got), got == Ok(want));
            }
        }
    } else if !fx.criteria.is_empty() {
        push("criteria", "homogeneous form".into(), "not homogeneous".into(), false);
    }
    if let Some(want) = &e.hom_type {
        let got = hom.as_ref().ok_or("not homogeneous".to_string()).and_then(|h| h.hom_type().map_err(|e| e.to_string()));
        push("type", want.to_string(), show(&got), got.as_ref() == Ok(want));
    }
    if let Some(want) = &e.cs_poly {
        let got = hom.as_ref().ok_or("not homogeneous".to_string()).and_then(|h| h.cs_polynomial().map_err(|e| e.to_string()));
        let ok = matches!(&got, Ok(p) if p == want);
        push("cs", want.to_string(), show(&got), ok);
    }
    if let Some(want) = e.convex {
        let got = fol.is_convex();
        push("convex", want.to_string(), show(&got), got == Ok(want));
    }
    if let Some(want) = e.sing_count {
        let got = fol.singular_points().map_err(|e| e.to_string()).and_then(|s| {
            if s.is_complete() {
                Ok(s.points.len())
            } else {
                Err(format!("{} points plus unsplit factors", s.points.len()))
            }
        });
        push("sing", want.to_string(), show(&got), got == Ok(want));
    }
    FixtureReport { id: fx.id.clone(), checks }
}

/// Verify fixtures on all available cores; the output order follows the input.
/// A panic in a worker (such as a resource limit) is re-raised with its
/// original payload once every worker has stopped.
pub fn verify_all(fixtures: &[Fixture]) -> Vec<FixtureReport> {
    use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
    use std::sync::atomic::{AtomicUsize, Ordering};
    use std::sync::Mutex;

    type Slot = Mutex<Option<std::thread::Result<FixtureReport>>>;
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(fixtures.len().max(1));
    let next = AtomicUsize::new(0);
    let slots: Vec<Slot> = fixtures.iter().map(|_| Mutex::new(None)).collect();
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= fixtures.len() {
                    break;
                }
                let r = catch_unwind(AssertUnwindSafe(|| verify_fixture(&fixtures[i])));
                let failed = r.is_err();
                *slots[i].lock().unwrap() = Some(r);
                if failed {
                    next.store(fixtures.len(), Ordering::Relaxed);
                    break;
                }
            });
        }
    });
    let mut out = Vec::with_capacity(fixtures.len());
    for m in slots {
        match m.into_inner().unwrap() {
            Some(Ok(r)) => out.push(r),
            Some(Err(payload)) => resume_unwind(payload),
            None => {}
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_parses() {
        let all = load_catalog();
        assert_eq!(primary_fixtures().len(), 16);
        assert!(all.len() > 16);
        let h10 = fixture("H10").unwrap();
        assert_eq!(h10.text, "(3*x+sqrt3*y)*y^2*dx + (3*y-sqrt3*x)*x^2*dy");
        assert_eq!(fixture("F3").unwrap().expected.sing_count, Some(13));
        assert_eq!(fixture("F1").unwrap().expected.convex, Some(true));
    }

    #[test]
    fn manifest_round_trip() {
        let all = load_catalog();
        let again = parse_manifest(&write_manifest(&all)).unwrap();
        assert_eq!(all.len(), again.len());
        for (a, b) in all.iter().zip(&again) {
            assert_eq!(a.id, b.id);
            assert!(a.form.proportional(&b.form));
            assert_eq!(a.expected, b.expected);
            assert_eq!(a.criteria, b.criteria);
        }
    }

    #[test]
    fn bad_manifest() {
        assert!(parse_manifest("kind = primary").is_err());
        assert!(parse_manifest("[A]\nkind = primary\nform = x*dy\nflat = maybe\nconvex = true").is_err());
        let dup = "[A]\nkind = aux\nform = dx\nflat = unknown\nconvex = unknown\n[A]\nkind = aux\nform = dy\nflat = unknown\nconvex = unknown\n";
        assert!(parse_manifest(dup).is_err());
    }

    #[test]
    fn family_types_at_degree_three() {
        for (k, nu, id) in [(1, 0, "H1"), (2, 0, "H2"), (3, 1, "H3"), (4, 1, "H4"), (5, 0, "H5"), (6, 0, "H6")] {
            let w = flat_family(k, 3, nu).unwrap();
            let h = fixture(id).unwrap();
            assert!(w.proportional(&h.form), "{} vs {}", w, h.form);
            assert_eq!(flat_family_type(k, 3, nu), h.expected.hom_type);
        }
    }

    #[test]
    fn h1_report() {
        let r = verify_fixture(&fixture("H1").unwrap());
        assert!(r.passed(), "{}", r);
        assert!(r.checks.iter().any(|c| c.field == "cs"));
    }

    #[test]
    fn whole_catalog_verifies() {
        for r in verify_all(&load_catalog()) {
            assert!(r.passed(), "{}", r);
        }
    }

    #[test]
    fn isotropies_fix_their_foliations() {
        for s in isotropy_samples() {
            let f = fixture(s.id).unwrap().foliation();
            assert!(f.is_isotropy(&s.matrix).unwrap(), "{} {}", s.id, s.label);
        }
        let h1 = fixture("H1").unwrap().foliation();
        assert!(!h1.is_isotropy(&m3([["2", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]])).unwrap());
    }

    #[test]
    fn conjugations_hold() {
        for cj in conjugations() {
            assert!(cj.holds(), "{}", cj.target);
        }
    }
}

