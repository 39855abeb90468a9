use serde::Serialize;

use crate::exact::{fmt_decimal_rounded, fmt_rational, Rounding};
use crate::interval::{Dyadic, Interval};
use crate::prove::{ProofResult, Witness};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Serialize)]
pub struct WitnessRecord {
    pub lo: String,
    pub hi: String,
    pub midpoint_value: String,
}

impl From<&Witness> for WitnessRecord {
    fn from(w: &Witness) -> Self {
        WitnessRecord {
            lo: dyadic_text(w.interval.lo()),
            hi: dyadic_text(w.interval.hi()),
            midpoint_value: interval_text(&w.midpoint_value),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Sharp {
    pub paper_value: String,
    pub computed_enclosure: String,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Claim {
    pub name: String,
    pub status: String,
    pub expected: Option<String>,
    pub witness: Option<WitnessRecord>,
    pub leaves: Option<usize>,
    pub max_depth: Option<u32>,
    pub sharp: Option<Sharp>,
    pub findings: Vec<String>,
    pub ms: Option<u64>,
}

impl Claim {
    pub fn new(name: impl Into<String>, status: impl Into<String>) -> Self {
        Claim {
            name: name.into(),
            status: status.into(),
            expected: None,
            witness: None,
            leaves: None,
            max_depth: None,
            sharp: None,
            findings: Vec::new(),
            ms: None,
        }
    }

    pub fn from_proof(name: &str, r: &ProofResult, timing: bool) -> Self {
        let mut c = Claim::new(name, r.status.name());
        c.witness = r.witness.as_ref().map(WitnessRecord::from);
        c.leaves = Some(r.stats.leaves);
        c.max_depth = Some(r.stats.max_depth);
        c.findings = r.findings.clone();
        if let Some(reason) = &r.reason {
            c.findings.push(format!("reason: {reason}"));
        }
        c.ms = timing.then_some(r.stats.elapsed.as_millis() as u64);
        c
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub version: &'static str,
    pub config: Vec<(String, String)>,
    pub claims: Vec<Claim>,
}

impl Report {
    pub fn new(config: Vec<(String, String)>, mut claims: Vec<Claim>) -> Self {
        claims.sort_by(|a, b| a.name.cmp(&b.name));
        Report { version: VERSION, config, claims }
    }

    pub fn to_json(&self) -> String {
        let config: serde_json::Map<String, serde_json::Value> =
            self.config.iter().map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone()))).collect();
        let value = serde_json::json!({
            "version": self.version,
            "config": config,
            "claims": self.claims,
        });
        let mut s = serde_json::to_string_pretty(&value).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.claims {
            let mut line = format!("{:<16} {:<9}", c.name, c.status);
            if let Some(e) = &c.expected {
                line.push_str(&format!(" expected={e}"));
            }
            if let Some(n) = c.leaves {
                line.push_str(&format!(" leaves={n}"));
            }
            if let Some(w) = &c.witness {
                line.push_str(&format!(" witness=[{}, {}]", decimal_of(&w.lo), decimal_of(&w.hi)));
            }
            if let Some(s) = &c.sharp {
                line.push_str(&format!(" sharp={} ~ {} match={}", s.paper_value, s.computed_enclosure, s.matches));
            }
            if let Some(ms) = c.ms {
                line.push_str(&format!(" ms={ms}"));
            }
            out.push_str(line.trim_end());
            out.push('\n');
            for f in &c.findings {
                out.push_str(&format!("    {f}\n"));
            }
        }
        out
    }
}

pub fn dyadic_text(d: &Dyadic) -> String {
    fmt_rational(&d.to_rational())
}

pub fn interval_text(i: &Interval) -> String {
    if i.is_point() && i.lo().exponent() >= -64 {
        return fmt_rational(&i.lo_rational());
    }
    let lo = fmt_decimal_rounded(&i.lo_rational(), 20, Rounding::Down);
    let hi = fmt_decimal_rounded(&i.hi_rational(), 20, Rounding::Up);
    format!("[{lo}, {hi}]")
}

pub fn dyadic_decimal(d: &Dyadic) -> String {
    crate::exact::fmt_decimal(&d.to_rational(), 12)
}

fn decimal_of(exact: &str) -> String {
    match crate::exact::parse_rational(exact) {
        Ok(q) => crate::exact::fmt_decimal(&q, 12),
        Err(_) => exact.to_string(),
    }
}
