//! The JSON input document and its exact interpretation.
//!
//! ```json
//! {
//!   "version": 1,
//!   "vertices": ["v1", "v2"],
//!   "arcs": [{"id": "a1", "tail": "v1", "head": "v2", "tau": "2/3", "upsilon": "1 - q"}],
//!   "scheme": {"preset": "GENERAL"}
//! }
//! ```
//!
//! An undirected graph may be given with `"edges": [{"u": .., "v": .., "w_uv": .., "w_vu": ..}]`
//! instead of `"arcs"`; it is read as its symmetric digraph. Weight strings are
//! exact rationals or polynomial expressions in `q`; decimals are refused.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::algebra::{Field, Poly, QFunc, Rational, Ring, Scalar};
use crate::digraph::{Digraph, EdgeArcs, Graph, Vertex};
use crate::error::{Error, Result};
use crate::weights::{Preset, WeightScheme};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecDocument {
    pub version: u32,
    pub vertices: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub arcs: Vec<ArcEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub edges: Vec<EdgeEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scheme: Option<SchemeEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArcEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    pub tail: String,
    pub head: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub upsilon: Option<String>,
}

/// `w_uv` is `tau` of the arc `u -> v`, `w_vu` of the arc `v -> u`. A loop
/// uses `w_uv` only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeEntry {
    pub u: String,
    pub v: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w_uv: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w_vu: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SchemeEntry {
    pub preset: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<String>,
}

/// Command-line adjustments applied while resolving a document.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SchemeOverride {
    pub preset: Option<Preset>,
    /// Substitutes this value for `q`.
    pub eval_q: Option<Rational>,
}

/// A weight scheme over whichever field the document needs.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyScheme {
    Rational(WeightScheme<Rational>),
    Symbolic(WeightScheme<QFunc>),
}

impl AnyScheme {
    pub fn preset(&self) -> Preset {
        match self {
            AnyScheme::Rational(s) => s.preset(),
            AnyScheme::Symbolic(s) => s.preset(),
        }
    }

    pub fn field_name(&self) -> &'static str {
        match self {
            AnyScheme::Rational(_) => Rational::field_name(),
            AnyScheme::Symbolic(_) => QFunc::field_name(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ParsedSpec {
    pub vertex_names: Vec<String>,
    /// Arc names in arc-id order.
    pub arc_names: Vec<String>,
    pub digraph: Digraph,
    /// Present when the document used `"edges"`.
    pub graph: Option<Graph>,
    pub scheme: AnyScheme,
    /// Bartholdi `q` when it is a number rather than the indeterminate.
    pub q: Option<Rational>,
}

/// A weight string read into `Q(q)`, remembering whether `q` occurred.
#[derive(Clone, Debug, PartialEq)]
pub struct ParsedScalar {
    pub value: QFunc,
    pub mentions_q: bool,
}

/// Parses `+ - * / ^`, parentheses, integers and `q` into `Q(q)`.
pub fn parse_scalar(text: &str) -> Result<ParsedScalar> {
    if text.contains(['.', 'e', 'E']) {
        return Err(Error::Parse(format!(
            "{text:?}: decimal numbers are not accepted, write an exact fraction"
        )));
    }
    let tokens = tokenize(text)?;
    let mut p = ScalarParser {
        tokens: &tokens,
        pos: 0,
        mentions_q: false,
        source: text,
    };
    let value = p.expr()?;
    if p.pos != tokens.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(ParsedScalar {
        value,
        mentions_q: p.mentions_q,
    })
}

/// An exact rational; `q` is refused.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = parse_scalar(text)?;
    if s.mentions_q {
        return Err(Error::Parse(format!("{text:?}: expected a rational number")));
    }
    Ok(constant_of(&s.value))
}

fn constant_of(v: &QFunc) -> Rational {
    v.num().coeff(0).div(&v.den().coeff(0)).expect("constant denominator")
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Q,
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some((i, c)) = chars.next() {
        match c {
            c if c.is_whitespace() => {}
            '0'..='9' => {
                let mut end = i + 1;
                while let Some(&(j, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    end = j + 1;
                    chars.next();
                }
                out.push(Token::Int(text[i..end].parse().expect("digits")));
            }
            'q' => out.push(Token::Q),
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => out.push(Token::Op(c)),
            _ => {
                return Err(Error::Parse(format!(
                    "{text:?}: unexpected character {c:?}"
                )))
            }
        }
    }
    Ok(out)
}

struct ScalarParser<'a> {
    tokens: &'a [Token],
    pos: usize,
    mentions_q: bool,
    source: &'a str,
}

impl ScalarParser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{:?}: {what}", self.source))
    }

    fn peek_op(&self) -> Option<char> {
        match self.tokens.get(self.pos) {
            Some(Token::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<QFunc> {
        let mut acc = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' { acc.add(&rhs) } else { acc.sub(&rhs) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<QFunc> {
        let mut acc = self.unary()?;
        while let Some(op @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if op == '*' {
                acc.mul(&rhs)
            } else {
                acc.div(&rhs).ok_or_else(|| self.error("division by zero"))?
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<QFunc> {
        match self.peek_op() {
            Some('-') => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<QFunc> {
        let base = self.atom()?;
        if self.peek_op() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        match self.tokens.get(self.pos) {
            Some(Token::Int(n)) => {
                let e: u32 = n
                    .try_into()
                    .map_err(|_| self.error("exponent too large"))?;
                self.pos += 1;
                Ok(base.pow(e))
            }
            _ => Err(self.error("expected a non-negative integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<QFunc> {
        let token = self
            .tokens
            .get(self.pos)
            .cloned()
            .ok_or_else(|| self.error("unexpected end of input"))?;
        self.pos += 1;
        match token {
            Token::Int(n) => Ok(QFunc::constant(Rational::from_integer(n))),
            Token::Q => {
                self.mentions_q = true;
                Ok(QFunc::var())
            }
            Token::Op('(') => {
                let inner = self.expr()?;
                if self.peek_op() != Some(')') {
                    return Err(self.error("missing closing parenthesis"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Token::Op(c) => Err(self.error(&format!("unexpected {c:?}"))),
        }
    }
}

pub fn parse_document(text: &str) -> Result<SpecDocument> {
    let doc: SpecDocument =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if doc.version != FORMAT_VERSION {
        return Err(Error::Parse(format!(
            "unsupported version {}, expected {FORMAT_VERSION}",
            doc.version
        )));
    }
    Ok(doc)
}

pub fn parse_spec(text: &str) -> Result<ParsedSpec> {
    parse_spec_with(text, &SchemeOverride::default())
}

pub fn parse_spec_with(text: &str, overrides: &SchemeOverride) -> Result<ParsedSpec> {
    resolve(&parse_document(text)?, overrides)
}

/// Raw per-arc weights before the preset fills in defaults.
struct RawArc {
    tau: Option<ParsedScalar>,
    upsilon: Option<ParsedScalar>,
}

fn optional_scalar(s: &Option<String>) -> Result<Option<ParsedScalar>> {
    s.as_deref().map(parse_scalar).transpose()
}

pub fn resolve(doc: &SpecDocument, overrides: &SchemeOverride) -> Result<ParsedSpec> {
    let mut index = BTreeMap::new();
    for (i, name) in doc.vertices.iter().enumerate() {
        if index.insert(name.as_str(), i).is_some() {
            return Err(Error::Parse(format!("duplicate vertex name {name:?}")));
        }
    }
    let vertex = |name: &str| -> Result<Vertex> {
        index
            .get(name)
            .copied()
            .ok_or_else(|| Error::Parse(format!("unknown vertex {name:?}")))
    };

    if !doc.arcs.is_empty() && !doc.edges.is_empty() {
        return Err(Error::Parse("give either \"arcs\" or \"edges\", not both".into()));
    }

    let mut raw = Vec::new();
    let mut arc_names = Vec::new();
    let (digraph, graph) = if doc.edges.is_empty() {
        let mut arcs = Vec::with_capacity(doc.arcs.len());
        for (i, a) in doc.arcs.iter().enumerate() {
            arcs.push((vertex(&a.tail)?, vertex(&a.head)?));
            arc_names.push(a.id.clone().unwrap_or_else(|| format!("a{}", i + 1)));
            raw.push(RawArc {
                tau: optional_scalar(&a.tau)?,
                upsilon: optional_scalar(&a.upsilon)?,
            });
        }
        let mut seen = std::collections::BTreeSet::new();
        for name in &arc_names {
            if !seen.insert(name) {
                return Err(Error::Parse(format!("duplicate arc id {name:?}")));
            }
        }
        (Digraph::new(doc.vertices.len(), arcs)?, None)
    } else {
        let mut edges = Vec::with_capacity(doc.edges.len());
        for e in &doc.edges {
            edges.push((vertex(&e.u)?, vertex(&e.v)?));
        }
        let graph = Graph::new(doc.vertices.len(), edges)?;
        let sym = graph.symmetric_digraph();
        raw.resize_with(sym.digraph.arc_count(), || RawArc {
            tau: None,
            upsilon: None,
        });
        for (e, prov) in doc.edges.iter().zip(&sym.provenance) {
            match *prov {
                EdgeArcs::Loop(a) => {
                    if e.w_vu.is_some() {
                        return Err(Error::Parse(format!(
                            "loop at {:?} takes only w_uv",
                            e.u
                        )));
                    }
                    raw[a].tau = optional_scalar(&e.w_uv)?;
                }
                EdgeArcs::Pair { forward, backward } => {
                    let (uv, vu) = if vertex(&e.u)? < vertex(&e.v)? {
                        (forward, backward)
                    } else {
                        (backward, forward)
                    };
                    raw[uv].tau = optional_scalar(&e.w_uv)?;
                    raw[vu].tau = optional_scalar(&e.w_vu)?;
                }
            }
        }
        let names = &doc.vertices;
        arc_names = sym
            .digraph
            .arcs()
            .iter()
            .map(|&(t, h)| format!("{}>{}", names[t], names[h]))
            .collect();
        (sym.digraph, Some(graph))
    };

    let preset = match (overrides.preset, &doc.scheme) {
        (Some(p), _) => p,
        (None, Some(s)) => s.preset.parse()?,
        (None, None) => Preset::General,
    };
    let doc_q = doc
        .scheme
        .as_ref()
        .and_then(|s| s.q.as_deref())
        .map(parse_rational)
        .transpose()?;
    let weights_mention_q = raw
        .iter()
        .flat_map(|r| [&r.tau, &r.upsilon])
        .flatten()
        .any(|s| s.mentions_q);
    if overrides.eval_q.is_some() && (weights_mention_q || doc_q.is_some()) {
        return Err(Error::Parse(
            "--eval-q cannot be combined with a literal q or a q value in the file".into(),
        ));
    }
    let q_value = overrides.eval_q.clone().or(doc_q);
    let symbolic = weights_mention_q || (preset == Preset::Bartholdi && q_value.is_none());

    let q = match &q_value {
        Some(r) => QFunc::constant(r.clone()),
        None => QFunc::var(),
    };
    let (tau, upsilon) = fill_defaults(preset, &q, raw)?;
    let eval = |v: &QFunc| -> Result<Rational> {
        match &q_value {
            Some(r) => v
                .eval(r)
                .ok_or_else(|| Error::Parse("weight has a pole at the given q".into())),
            None => Ok(constant_of(v)),
        }
    };
    let scheme = if symbolic {
        AnyScheme::Symbolic(WeightScheme::new(preset, tau, upsilon)?)
    } else {
        let tau = tau.iter().map(eval).collect::<Result<Vec<_>>>()?;
        let upsilon = upsilon.iter().map(eval).collect::<Result<Vec<_>>>()?;
        AnyScheme::Rational(WeightScheme::new(preset, tau, upsilon)?)
    };
    Ok(ParsedSpec {
        vertex_names: doc.vertices.clone(),
        arc_names,
        digraph,
        graph,
        scheme,
        q: if preset == Preset::Bartholdi { q_value } else { None },
    })
}

/// Missing `tau` is one; missing `upsilon` follows the preset: zero for
/// Bowen-Lanford, `tau` for Mizuno-Sato, `1 - q` for Bartholdi, otherwise one.
fn fill_defaults(preset: Preset, q: &QFunc, raw: Vec<RawArc>) -> Result<(Vec<QFunc>, Vec<QFunc>)> {
    let mut tau = Vec::with_capacity(raw.len());
    let mut upsilon = Vec::with_capacity(raw.len());
    let bartholdi_upsilon = QFunc::one().sub(q);
    for r in raw {
        let t = r.tau.map_or_else(QFunc::one, |s| s.value);
        let u = match r.upsilon {
            Some(s) => s.value,
            None => match preset {
                Preset::BowenLanford => QFunc::zero(),
                Preset::MizunoSato => t.clone(),
                Preset::Bartholdi => bartholdi_upsilon.clone(),
                _ => QFunc::one(),
            },
        };
        if preset == Preset::Bartholdi && u != bartholdi_upsilon {
            return Err(Error::Scheme(format!(
                "BARTHOLDI needs upsilon = {}, got {}",
                Scalar::render(&bartholdi_upsilon),
                Scalar::render(&u)
            )));
        }
        tau.push(t);
        upsilon.push(u);
    }
    Ok((tau, upsilon))
}

/// The canonical document for a parsed spec: every arc explicit with its id
/// and both weights, the scheme always present.
pub fn to_document(spec: &ParsedSpec) -> SpecDocument {
    let (taus, upsilons): (Vec<String>, Vec<String>) = match &spec.scheme {
        AnyScheme::Rational(s) => (render_all(s.taus()), render_all(s.upsilons())),
        AnyScheme::Symbolic(s) => (render_all(s.taus()), render_all(s.upsilons())),
    };
    let names = &spec.vertex_names;
    let arcs = spec
        .digraph
        .arcs()
        .iter()
        .enumerate()
        .map(|(a, &(t, h))| ArcEntry {
            id: Some(spec.arc_names[a].clone()),
            tail: names[t].clone(),
            head: names[h].clone(),
            tau: Some(taus[a].clone()),
            upsilon: Some(upsilons[a].clone()),
        })
        .collect();
    SpecDocument {
        version: FORMAT_VERSION,
        vertices: names.clone(),
        arcs,
        edges: Vec::new(),
        scheme: Some(SchemeEntry {
            preset: spec.scheme.preset().name().to_string(),
            q: spec.q.as_ref().map(Scalar::render),
        }),
    }
}

fn render_all<K: Scalar>(xs: &[K]) -> Vec<String> {
    xs.iter().map(Scalar::render).collect()
}

pub fn to_canonical_json(spec: &ParsedSpec) -> String {
    serde_json::to_string_pretty(&to_document(spec)).expect("document serializes")
}

/// Coefficients in ascending order as exact strings.
pub fn coefficient_strings<K: Scalar>(p: &Poly<K>) -> Vec<String> {
    if p.coeffs().is_empty() {
        return vec!["0".to_string()];
    }
    p.coeffs().iter().map(Scalar::render).collect()
}
