use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;

use super::ast::{eval_const, Expr, ExprKind};
use super::parser::parse_expression;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::interval::Interval;

const ENDPOINT_PREC: u32 = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Less,
    Greater,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Less => "<",
            Relation::Greater => ">",
        })
    }
}

/// One end of a domain. `Infinite` is only legal on the right.
#[derive(Debug, Clone, PartialEq)]
pub enum Bound {
    Finite { expr: Expr, closed: bool },
    Infinite,
}

impl Bound {
    pub fn expr(&self) -> Option<&Expr> {
        match self {
            Bound::Finite { expr, .. } => Some(expr),
            Bound::Infinite => None,
        }
    }

    pub fn is_closed(&self) -> bool {
        matches!(self, Bound::Finite { closed: true, .. })
    }

    /// Certified enclosure of a finite endpoint.
    pub fn enclosure(&self, prec: u32) -> Option<Interval> {
        self.expr().map(|e| eval_const(e, prec).expect("validated at parse time"))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct InequalitySpec {
    pub name: String,
    pub lo: Bound,
    pub hi: Bound,
    pub lhs: Expr,
    pub relation: Relation,
    pub rhs: Expr,
    pub tags: Vec<String>,
}

impl InequalitySpec {
    /// The expression claimed positive on the open domain.
    pub fn difference(&self) -> Expr {
        match self.relation {
            Relation::Less => Expr::sub(self.rhs.clone(), self.lhs.clone()),
            Relation::Greater => Expr::sub(self.lhs.clone(), self.rhs.clone()),
        }
    }

    /// Value of a `key:value` tag.
    pub fn tag(&self, key: &str) -> Option<&str> {
        find_tag(&self.tags, key)
    }

    pub fn expects_refutation(&self) -> bool {
        self.tag("expected") == Some("refuted")
    }
}

/// Expected outcome of an exact sequence check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceSpec {
    pub name: String,
    pub id: String,
    pub mode: String,
    pub n_min: Option<u32>,
    pub n_max: u32,
    pub tags: Vec<String>,
}

impl SequenceSpec {
    pub fn tag(&self, key: &str) -> Option<&str> {
        find_tag(&self.tags, key)
    }
}

/// Expected outcome of an exact identity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentitySpec {
    pub name: String,
    pub id: String,
    pub n_max: u32,
    pub tags: Vec<String>,
}

impl IdentitySpec {
    pub fn tag(&self, key: &str) -> Option<&str> {
        find_tag(&self.tags, key)
    }
}

fn find_tag<'a>(tags: &'a [String], key: &str) -> Option<&'a str> {
    tags.iter().find_map(|t| {
        let (k, v) = t.split_once(':')?;
        (k.trim() == key).then(|| v.trim())
    })
}

/// Every stanza of a corpus file, in source order per kind.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Corpus {
    pub inequalities: Vec<InequalitySpec>,
    pub sequences: Vec<SequenceSpec>,
    pub identities: Vec<IdentitySpec>,
}

impl Corpus {
    pub fn parse(text: &str) -> Result<Self> {
        parse_full(text)
    }

    pub fn inequality(&self, name: &str) -> Option<&InequalitySpec> {
        self.inequalities.iter().find(|s| s.name == name)
    }

    pub fn sequence(&self, id: &str, mode: &str, n_min: Option<u32>) -> Option<&SequenceSpec> {
        self.sequences.iter().find(|s| s.id == id && s.mode == mode && s.n_min == n_min)
    }

    pub fn identity(&self, id: &str) -> Option<&IdentitySpec> {
        self.identities.iter().find(|s| s.id == id)
    }
}

/// The corpus shipped with the crate.
pub const BUNDLED_CORPUS: &str = include_str!("../../corpus/paper.ineq");

pub fn bundled() -> Corpus {
    parse_full(BUNDLED_CORPUS).expect("bundled corpus parses")
}

/// Parses the inequality stanzas of a corpus file.
pub fn parse_corpus(text: &str) -> Result<Vec<InequalitySpec>> {
    Ok(parse_full(text)?.inequalities)
}

fn valid_name(s: &str) -> bool {
    let mut cs = s.chars();
    cs.next().is_some_and(|c| c.is_ascii_alphabetic())
        && cs.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '.')
}

struct Stanza {
    kind: String,
    name: String,
    line: usize,
    fields: Vec<(String, String)>,
}

impl Stanza {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Corpus { stanza: self.name.clone(), message: message.into() }
    }

    fn get(&self, key: &str) -> Option<&str> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    fn require(&self, key: &str) -> Result<&str> {
        self.get(key).ok_or_else(|| self.err(format!("missing `{key}`")))
    }

    fn expr(&self, key: &str) -> Result<Expr> {
        parse_expression(self.require(key)?)
            .map_err(|e| self.err(format!("`{key}`: {e}")))
    }

    fn count(&self, key: &str) -> Result<Option<u32>> {
        self.get(key)
            .map(|v| v.parse::<u32>().map_err(|_| self.err(format!("`{key}` must be a non-negative integer"))))
            .transpose()
    }

    fn tags(&self) -> Vec<String> {
        self.get("tags")
            .map(|v| v.split(',').map(|t| t.trim().to_string()).filter(|t| !t.is_empty()).collect())
            .unwrap_or_default()
    }

    fn allow(&self, keys: &[&str]) -> Result<()> {
        match self.fields.iter().find(|(k, _)| !keys.contains(&k.as_str())) {
            Some((k, _)) => Err(self.err(format!("unknown field `{k}`"))),
            None => Ok(()),
        }
    }
}

fn stanzas(text: &str) -> Result<Vec<Stanza>> {
    let mut out = Vec::new();
    let mut open: Option<Stanza> = None;
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let at_line = |message: String| Error::Corpus { stanza: format!("line {lineno}"), message };
        match open.as_mut() {
            None => {
                let header = line
                    .strip_suffix('{')
                    .ok_or_else(|| at_line(format!("expected `<kind> NAME {{`, found {line:?}")))?;
                let mut words = header.split_whitespace();
                let (Some(kind), Some(name), None) = (words.next(), words.next(), words.next()) else {
                    return Err(at_line(format!("malformed stanza header {line:?}")));
                };
                if !matches!(kind, "inequality" | "sequence" | "identity") {
                    return Err(at_line(format!("unknown stanza kind `{kind}`")));
                }
                if !valid_name(name) {
                    return Err(at_line(format!("invalid stanza name `{name}`")));
                }
                open = Some(Stanza { kind: kind.into(), name: name.into(), line: lineno, fields: Vec::new() });
            }
            Some(st) => {
                if line == "}" {
                    out.push(open.take().unwrap());
                    continue;
                }
                let (k, v) = line
                    .split_once('=')
                    .ok_or_else(|| st.err(format!("line {lineno}: expected `key = value`")))?;
                let k = k.trim().to_string();
                if st.get(&k).is_some() {
                    return Err(st.err(format!("duplicate field `{k}`")));
                }
                st.fields.push((k, v.trim().to_string()));
            }
        }
    }
    if let Some(st) = open {
        return Err(st.err(format!("stanza opened on line {} is never closed", st.line)));
    }
    Ok(out)
}

fn is_endpoint_expr(e: &Expr) -> bool {
    use ExprKind::*;
    match &e.kind {
        Lit(_) | Pi => true,
        Neg(a) => is_endpoint_expr(a),
        Add(a, b) | Sub(a, b) | Mul(a, b) | Div(a, b) => is_endpoint_expr(a) && is_endpoint_expr(b),
        X | Pow(..) | Apply(..) => false,
    }
}

fn parse_domain(st: &Stanza) -> Result<(Bound, Bound)> {
    let text = st.require("domain")?;
    let closed_lo = match text.chars().next() {
        Some('(') => false,
        Some('[') => true,
        _ => return Err(st.err("domain must start with `(` or `[`")),
    };
    let closed_hi = match text.chars().last() {
        Some(')') => false,
        Some(']') => true,
        _ => return Err(st.err("domain must end with `)` or `]`")),
    };
    let inner = &text[1..text.len() - 1];
    let (a, b) = inner
        .split_once(',')
        .ok_or_else(|| st.err("domain needs two comma-separated endpoints"))?;
    let endpoint = |s: &str, closed: bool, right: bool| -> Result<Bound> {
        let s = s.trim();
        if s == "inf" {
            if !right {
                return Err(st.err("left endpoint cannot be infinite"));
            }
            if closed {
                return Err(st.err("infinite endpoint must be open"));
            }
            return Ok(Bound::Infinite);
        }
        let expr = parse_expression(s).map_err(|e| st.err(format!("domain endpoint {s:?}: {e}")))?;
        if !is_endpoint_expr(&expr) {
            return Err(st.err(format!("domain endpoint {s:?} may use only rationals, pi and + - * /")));
        }
        eval_const(&expr, ENDPOINT_PREC).map_err(|e| st.err(format!("domain endpoint {s:?}: {e}")))?;
        Ok(Bound::Finite { expr, closed })
    };
    let lo = endpoint(a, closed_lo, false)?;
    let hi = endpoint(b, closed_hi, true)?;
    if let (Some(l), Some(h)) = (lo.enclosure(ENDPOINT_PREC), hi.enclosure(ENDPOINT_PREC)) {
        if l.hi() >= h.lo() {
            return Err(st.err("domain endpoints are not increasing"));
        }
    }
    Ok((lo, hi))
}

fn inequality(st: &Stanza) -> Result<InequalitySpec> {
    st.allow(&["domain", "lhs", "relation", "rhs", "tags"])?;
    let (lo, hi) = parse_domain(st)?;
    let relation = match st.require("relation")? {
        "<" => Relation::Less,
        ">" => Relation::Greater,
        other => return Err(st.err(format!("relation must be `<` or `>`, found {other:?}"))),
    };
    Ok(InequalitySpec {
        name: st.name.clone(),
        lo,
        hi,
        lhs: st.expr("lhs")?,
        relation,
        rhs: st.expr("rhs")?,
        tags: st.tags(),
    })
}

fn sequence(st: &Stanza) -> Result<SequenceSpec> {
    st.allow(&["id", "mode", "nmin", "nmax", "tags"])?;
    Ok(SequenceSpec {
        name: st.name.clone(),
        id: st.get("id").unwrap_or(&st.name).to_string(),
        mode: st.require("mode")?.to_string(),
        n_min: st.count("nmin")?,
        n_max: st.count("nmax")?.ok_or_else(|| st.err("missing `nmax`"))?,
        tags: st.tags(),
    })
}

fn identity(st: &Stanza) -> Result<IdentitySpec> {
    st.allow(&["id", "nmax", "tags"])?;
    Ok(IdentitySpec {
        name: st.name.clone(),
        id: st.get("id").unwrap_or(&st.name).to_string(),
        n_max: st.count("nmax")?.ok_or_else(|| st.err("missing `nmax`"))?,
        tags: st.tags(),
    })
}

fn parse_full(text: &str) -> Result<Corpus> {
    let mut corpus = Corpus::default();
    let mut seen = BTreeSet::new();
    for st in stanzas(text)? {
        if !seen.insert(st.name.clone()) {
            return Err(st.err("duplicate stanza name"));
        }
        match st.kind.as_str() {
            "inequality" => corpus.inequalities.push(inequality(&st)?),
            "sequence" => corpus.sequences.push(sequence(&st)?),
            _ => corpus.identities.push(identity(&st)?),
        }
    }
    Ok(corpus)
}

/// Exact left endpoint when it is a plain rational.
pub fn rational_endpoint(b: &Bound) -> Option<Rational> {
    match b.expr().map(|e| &e.kind) {
        Some(ExprKind::Lit(q)) => Some(q.clone()),
        _ => None,
    }
}

/// True when the bound is the literal 0.
pub fn is_zero_endpoint(b: &Bound) -> bool {
    rational_endpoint(b).is_some_and(|q| q.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    const THM31_LO: &str = "
inequality THM31_LO {
  domain   = (0, pi/2)
  lhs      = 3 + (1/60)*x^3*sin(x)
  relation = <
  rhs      = 2*x/sin(x) + x/tan(x)
  tags     = expected:proved, theorem:3.1
}
";

    #[test]
    fn parses_reference_stanza() {
        let specs = parse_corpus(THM31_LO).unwrap();
        assert_eq!(specs.len(), 1);
        let s = &specs[0];
        assert_eq!(s.name, "THM31_LO");
        assert_eq!(s.relation, Relation::Less);
        assert_eq!(s.lhs, parse_expression("3 + (1/60)*x^3*sin(x)").unwrap());
        assert_eq!(s.rhs, parse_expression("2*x/sin(x)+x/tan(x)").unwrap());
        assert!(is_zero_endpoint(&s.lo) && !s.lo.is_closed());
        assert_eq!(s.hi.expr().unwrap(), &parse_expression("pi/2").unwrap());
        assert_eq!(s.tag("theorem"), Some("3.1"));
        assert_eq!(s.tag("expected"), Some("proved"));
    }

    #[test]
    fn empty_and_comment_only() {
        assert!(parse_corpus("").unwrap().is_empty());
        assert!(parse_corpus("# nothing\n\n").unwrap().is_empty());
    }

    #[test]
    fn missing_relation_names_stanza() {
        let text = THM31_LO.replace("relation = <", "");
        match parse_corpus(&text) {
            Err(Error::Corpus { stanza, message }) => {
                assert_eq!(stanza, "THM31_LO");
                assert!(message.contains("relation"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn duplicate_names_rejected() {
        let text = format!("{THM31_LO}{THM31_LO}");
        assert!(matches!(parse_corpus(&text), Err(Error::Corpus { .. })));
    }

    #[test]
    fn bad_domains() {
        for d in ["(pi/2, 0)", "(0, x)", "(0, sin(1))", "(inf, 1)", "(0, inf]", "0, 1", "(1/0, 2)"] {
            let text = THM31_LO.replace("(0, pi/2)", d);
            assert!(parse_corpus(&text).is_err(), "{d}");
        }
        let text = THM31_LO.replace("(0, pi/2)", "[1/10, inf)");
        let s = &parse_corpus(&text).unwrap()[0];
        assert!(s.lo.is_closed() && s.hi == Bound::Infinite);
    }

    #[test]
    fn sequence_and_identity_stanzas() {
        let text = "
sequence S_T33_C { 
  mode = increasing
  nmax = 500
  tags = expected:violation, violation_at:2
}
identity ID_T32_BDIFF {
  nmax = 500
}
";
        let c = Corpus::parse(text).unwrap();
        let s = c.sequence("S_T33_C", "increasing", None).unwrap();
        assert_eq!(s.n_max, 500);
        assert_eq!(s.tag("violation_at"), Some("2"));
        assert_eq!(c.identity("ID_T32_BDIFF").unwrap().n_max, 500);
    }

    #[test]
    fn unclosed_stanza() {
        let text = THM31_LO.replace('}', "");
        assert!(parse_corpus(&text).is_err());
    }
}
