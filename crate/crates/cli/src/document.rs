//! Text format for product polynomials.
//!
//! A document is the line `cubecalc-poly v1` followed by a JSON object:
//!
//! ```text
//! cubecalc-poly v1
//! {
//!   "kind": "prodsum",
//!   "num_vars": 2,
//!   "degree_bound": 2,
//!   "factors": [
//!     { "constant": "0", "parts": [ { "var": 0, "coeffs": ["0", "2"] } ] }
//!   ]
//! }
//! ```
//!
//! `prodmulti` factors are `{ "terms": [ { "coeff": "3/2", "monomial": [[0, 1], [2, 2]] } ] }`.
//! Coefficients are strings in `num/den` form and part coefficients are
//! listed from degree 0 upwards. Variables are zero-based.

use std::str::FromStr;

use cubecalc_core::{Monomial, MultiPoly, ProdMulti, ProdSumUni, Rat, SumFactor, UniPoly, VarId};
use serde::{Deserialize, Serialize};

use crate::error::ParseError;

pub const HEADER: &str = "cubecalc-poly v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Prodsum,
    Prodmulti,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Body {
    ProdSum(ProdSumUni),
    ProdMulti(ProdMulti),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyDocument {
    pub num_vars: usize,
    pub body: Body,
}

fn vars_needed<'a>(vars: impl IntoIterator<Item = &'a VarId>) -> usize {
    vars.into_iter().map(|v| v.index() + 1).max().unwrap_or(0)
}

impl PolyDocument {
    pub fn from_prodsum(p: ProdSumUni) -> Self {
        PolyDocument {
            num_vars: vars_needed(&p.variables()),
            body: Body::ProdSum(p),
        }
    }

    pub fn from_prodmulti(p: ProdMulti) -> Self {
        PolyDocument {
            num_vars: vars_needed(&p.variables()),
            body: Body::ProdMulti(p),
        }
    }

    /// Widens the declared variable range; never narrows it.
    pub fn with_num_vars(mut self, n: usize) -> Self {
        self.num_vars = self.num_vars.max(n);
        self
    }

    pub fn kind(&self) -> Kind {
        match self.body {
            Body::ProdSum(_) => Kind::Prodsum,
            Body::ProdMulti(_) => Kind::Prodmulti,
        }
    }

    pub fn degree_bound(&self) -> u32 {
        match &self.body {
            Body::ProdSum(p) => p.degree_bound(),
            Body::ProdMulti(p) => p.degree_bound(),
        }
    }

    /// The document as a general product, converting if needed.
    pub fn to_prodmulti(&self) -> ProdMulti {
        match &self.body {
            Body::ProdSum(p) => ProdMulti::from(p),
            Body::ProdMulti(p) => p.clone(),
        }
    }

    pub fn vars(&self) -> Vec<VarId> {
        (0..self.num_vars).map(VarId::from).collect()
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Envelope {
    kind: Kind,
    num_vars: usize,
    degree_bound: u32,
    factors: serde_json::Value,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SumWire {
    constant: String,
    parts: Vec<PartWire>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PartWire {
    var: u32,
    coeffs: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MultiWire {
    terms: Vec<TermWire>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermWire {
    coeff: String,
    monomial: Vec<(u32, u32)>,
}

pub fn serialize_poly(doc: &PolyDocument) -> String {
    let factors = match &doc.body {
        Body::ProdSum(p) => serde_json::to_value(
            p.factors()
                .iter()
                .map(|f| SumWire {
                    constant: f.constant().to_string(),
                    parts: f
                        .parts()
                        .iter()
                        .map(|(v, q)| PartWire {
                            var: v.0,
                            coeffs: q.coeffs().iter().map(ToString::to_string).collect(),
                        })
                        .collect(),
                })
                .collect::<Vec<_>>(),
        ),
        Body::ProdMulti(p) => serde_json::to_value(
            p.factors()
                .iter()
                .map(|f| MultiWire {
                    terms: f
                        .terms()
                        .map(|(m, c)| TermWire {
                            coeff: c.to_string(),
                            monomial: m.pairs().iter().map(|&(v, e)| (v.0, e)).collect(),
                        })
                        .collect(),
                })
                .collect::<Vec<_>>(),
        ),
    }
    .expect("plain data serializes");
    let env = Envelope {
        kind: doc.kind(),
        num_vars: doc.num_vars,
        degree_bound: doc.degree_bound(),
        factors,
    };
    format!(
        "{HEADER}\n{}\n",
        serde_json::to_string_pretty(&env).expect("plain data serializes")
    )
}

pub fn parse_poly(text: &str) -> Result<PolyDocument, ParseError> {
    let (first, body) = text.split_once('\n').unwrap_or((text, ""));
    if first.trim_end() != HEADER {
        return Err(ParseError::doc("<header>", format!("expected `{HEADER}`")));
    }

    let mut de = serde_json::Deserializer::from_str(body);
    let env: Envelope = json_at(&mut de, "")?;
    de.end().map_err(|e| ParseError::doc("<body>", e))?;
    let num_vars = env.num_vars;
    let var = |v: u32, path: &str| -> Result<VarId, ParseError> {
        if (v as usize) < num_vars {
            Ok(VarId(v))
        } else {
            Err(ParseError::doc(
                path,
                format!("variable {v} not below num_vars = {num_vars}"),
            ))
        }
    };

    let body = match env.kind {
        Kind::Prodsum => {
            let wire: Vec<SumWire> = json_at(env.factors, "factors")?;
            let mut factors = Vec::with_capacity(wire.len());
            for (i, f) in wire.into_iter().enumerate() {
                let constant = rat(&f.constant, &format!("factors[{i}].constant"))?;
                let mut parts = Vec::with_capacity(f.parts.len());
                for (j, part) in f.parts.into_iter().enumerate() {
                    let at = format!("factors[{i}].parts[{j}]");
                    let v = var(part.var, &format!("{at}.var"))?;
                    let coeffs = part
                        .coeffs
                        .iter()
                        .enumerate()
                        .map(|(k, c)| rat(c, &format!("{at}.coeffs[{k}]")))
                        .collect::<Result<Vec<_>, _>>()?;
                    parts.push((v, UniPoly::from_coeffs(coeffs)));
                }
                factors.push(SumFactor::new(constant, parts));
            }
            let p = ProdSumUni::new(factors, env.degree_bound)
                .map_err(|e| ParseError::doc("degree_bound", e))?;
            Body::ProdSum(p)
        }
        Kind::Prodmulti => {
            let wire: Vec<MultiWire> = json_at(env.factors, "factors")?;
            let mut factors = Vec::with_capacity(wire.len());
            for (i, f) in wire.into_iter().enumerate() {
                let mut terms = Vec::with_capacity(f.terms.len());
                for (j, t) in f.terms.into_iter().enumerate() {
                    let at = format!("factors[{i}].terms[{j}]");
                    let c = rat(&t.coeff, &format!("{at}.coeff"))?;
                    let mut pairs = Vec::with_capacity(t.monomial.len());
                    for (k, (v, e)) in t.monomial.into_iter().enumerate() {
                        pairs.push((var(v, &format!("{at}.monomial[{k}]"))?, e));
                    }
                    terms.push((Monomial::from_pairs(pairs), c));
                }
                factors.push(MultiPoly::from_terms(terms));
            }
            let p = ProdMulti::new(factors, env.degree_bound)
                .map_err(|e| ParseError::doc("degree_bound", e))?;
            Body::ProdMulti(p)
        }
    };
    Ok(PolyDocument { num_vars, body })
}

fn rat(s: &str, path: &str) -> Result<Rat, ParseError> {
    Rat::from_str(s.trim()).map_err(|e| ParseError::doc(path, format!("{s:?}: {e}")))
}

fn json_at<'de, T, D>(de: D, prefix: &str) -> Result<T, ParseError>
where
    T: Deserialize<'de>,
    D: serde::Deserializer<'de>,
    D::Error: std::fmt::Display,
{
    serde_path_to_error::deserialize(de).map_err(|e| {
        let inner = e.path().to_string();
        let path = match (prefix.is_empty(), inner.as_str()) {
            (true, _) => inner.clone(),
            (false, ".") => prefix.to_string(),
            (false, rest) if rest.starts_with('[') => format!("{prefix}{rest}"),
            (false, rest) => format!("{prefix}.{rest}"),
        };
        ParseError::doc(path, e.into_inner())
    })
}
