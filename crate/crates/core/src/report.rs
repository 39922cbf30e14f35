//! Machine-readable reports of pipeline values, and the regression run
//! against every published value.

use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::expected::{self, is_known_misprint, misprint_delta, Value, REFERENCES};
use crate::poly::IntPoly;

pub const REPORT_VERSION: u32 = 1;

/// An integer serialized as a decimal string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decimal(pub BigInt);

impl Serialize for Decimal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Decimal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        let canonical = !s.is_empty()
            && s.strip_prefix('-')
                .unwrap_or(&s)
                .bytes()
                .all(|b| b.is_ascii_digit())
            && !(s.len() > 1 && s.starts_with('0'))
            && !s.starts_with("-0");
        if !canonical {
            return Err(serde::de::Error::custom(format!(
                "not a canonical integer: {s:?}"
            )));
        }
        s.parse().map(Decimal).map_err(serde::de::Error::custom)
    }
}

fn to_decimals(p: &IntPoly) -> Vec<Decimal> {
    p.coeffs().iter().cloned().map(Decimal).collect()
}

fn from_decimals(c: &[Decimal]) -> IntPoly {
    IntPoly::from_big(c.iter().map(|d| d.0.clone()).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Polynomial,
    MonodromyRep,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CharacterCoeffs {
    pub character: String,
    pub coeffs: Vec<Decimal>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StratumReport {
    pub name: String,
    pub kind: Kind,
    /// Ascending coefficients, for polynomials.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coeffs: Option<Vec<Decimal>>,
    /// Ascending coefficients per character, for representations.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub characters: Option<Vec<CharacterCoeffs>>,
    pub citation: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_match: Option<bool>,
    /// `computed - printed` when the printed value is a recorded misprint.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub misprint_delta: Option<Vec<Decimal>>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportFile {
    pub version: u32,
    pub reports: Vec<StratumReport>,
}

fn citation(name: &str) -> String {
    if let Some(r) = expected::reference(name) {
        return r.citation.to_string();
    }
    let prefix = format!("{name}.");
    if let Some(r) = REFERENCES.iter().find(|r| r.name.starts_with(&prefix)) {
        return r.citation.to_string();
    }
    match name {
        "twisted.R_Zbar" => "one shared eigenvector, monodromy over the two-torus",
        "twisted.R_Zbar_prime" => "two shared eigenvectors, monodromy over the order-16 group",
        _ => "",
    }
    .to_string()
}

impl StratumReport {
    pub fn new(name: &str, value: &Value, elapsed_ms: u64) -> Self {
        let (kind, coeffs, characters) = match value {
            Value::Poly(p) => (Kind::Polynomial, Some(to_decimals(p)), None),
            Value::Rep(r) => {
                let chars = r
                    .group()
                    .characters()
                    .filter(|&c| !r.coeff(c).is_zero())
                    .map(|c| CharacterCoeffs {
                        character: r.group().character_name(c),
                        coeffs: to_decimals(&r.coeff(c)),
                    })
                    .collect();
                (Kind::MonodromyRep, None, Some(chars))
            }
        };
        let expected_match = expected::matches(name, value);
        let misprint = (expected_match == Some(false) && is_known_misprint(name, value))
            .then(|| misprint_delta(name).map(|d| to_decimals(&d)))
            .flatten();
        StratumReport {
            name: name.to_string(),
            kind,
            coeffs,
            characters,
            citation: citation(name),
            expected_match,
            misprint_delta: misprint,
            elapsed_ms,
        }
    }

    pub fn polynomial(&self) -> Option<IntPoly> {
        self.coeffs.as_deref().map(from_decimals)
    }

    /// Per-character polynomials, in report order.
    pub fn character_polys(&self) -> Vec<(String, IntPoly)> {
        self.characters
            .iter()
            .flatten()
            .map(|c| (c.character.clone(), from_decimals(&c.coeffs)))
            .collect()
    }

    /// Agrees with the published value, up to a recorded misprint.
    pub fn is_acceptable(&self) -> bool {
        self.expected_match != Some(false) || self.misprint_delta.is_some()
    }
}

impl fmt::Display for StratumReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match (self.expected_match, &self.misprint_delta) {
            (None, _) => "",
            (Some(true), _) => "  [matches]",
            (Some(false), Some(_)) => "  [differs from a misprinted display]",
            (Some(false), None) => "  [MISMATCH]",
        };
        match self.kind {
            Kind::Polynomial => {
                let p = self.polynomial().unwrap_or_default();
                write!(f, "{} = {p}{tag}", self.name)
            }
            Kind::MonodromyRep => {
                let parts: Vec<String> = self
                    .character_polys()
                    .iter()
                    .map(|(c, p)| format!("({p}){c}"))
                    .collect();
                let body = if parts.is_empty() {
                    "0".to_string()
                } else {
                    parts.join(" + ")
                };
                write!(f, "{} = {body}{tag}", self.name)
            }
        }
    }
}

impl ReportFile {
    pub fn new(reports: Vec<StratumReport>) -> Self {
        ReportFile {
            version: REPORT_VERSION,
            reports,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    pub fn from_json(s: &str) -> std::result::Result<Self, serde_json::Error> {
        let f: ReportFile = serde_json::from_str(s)?;
        if f.version != REPORT_VERSION {
            return Err(serde::de::Error::custom(format!(
                "unsupported version {}",
                f.version
            )));
        }
        for r in &f.reports {
            let ok = match r.kind {
                Kind::Polynomial => r.coeffs.is_some() && r.characters.is_none(),
                Kind::MonodromyRep => r.coeffs.is_none() && r.characters.is_some(),
            };
            if !ok {
                return Err(serde::de::Error::custom(format!(
                    "{}: coefficients do not fit its kind",
                    r.name
                )));
            }
        }
        Ok(f)
    }

    pub fn to_text(&self) -> String {
        self.reports.iter().map(|r| format!("{r}\n")).collect()
    }

    pub fn all_acceptable(&self) -> bool {
        self.reports.iter().all(StratumReport::is_acceptable)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    M1,
    M,
    Genus2Monodromy,
    All,
}

impl std::str::FromStr for Target {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "m1" => Ok(Target::M1),
            "m" => Ok(Target::M),
            "genus2-monodromy" => Ok(Target::Genus2Monodromy),
            "all" => Ok(Target::All),
            _ => Err(format!("unknown target {s:?}")),
        }
    }
}

fn timed<T>(f: impl FnOnce() -> Result<T>) -> Result<(T, u64)> {
    let t = Instant::now();
    let v = f()?;
    Ok((v, t.elapsed().as_millis() as u64))
}

/// A computed value with the time of the pipeline stage that produced it.
pub type Entry = (&'static str, Value, u64);

fn stamp(entries: Vec<(&'static str, Value)>, ms: u64, out: &mut Vec<Entry>) {
    out.extend(entries.into_iter().map(|(n, v)| (n, v, ms)));
}

/// Every value of a target, in pipeline order.
pub fn compute_entries(target: Target) -> Result<Vec<Entry>> {
    use crate::{blocks::Blocks, genus2, twisted::TwistedPipeline, untwisted::UntwistedPipeline};
    let mut out = Vec::new();
    let (tw, ms) = timed(TwistedPipeline::compute)?;
    if matches!(target, Target::M1 | Target::All) {
        stamp(tw.entries(), ms, &mut out);
    }
    let (g2, g2_ms) = timed(|| genus2::entries(&tw.e_w))?;
    if matches!(target, Target::Genus2Monodromy | Target::All) {
        stamp(g2.clone(), g2_ms, &mut out);
    }
    if matches!(target, Target::M | Target::All) {
        let lift = g2
            .iter()
            .find_map(|(n, v)| match (*n, v) {
                ("genus2.R_Ybar4_Z2", Value::Rep(r)) => Some(r.clone()),
                _ => None,
            })
            .expect("genus-2 lift is an entry");
        let (u, ms) = timed(|| UntwistedPipeline::compute_with(&Blocks::load()?, &lift))?;
        stamp(u.entries(), ms, &mut out);
    }
    Ok(out)
}

pub fn compute_reports(target: Target) -> Result<ReportFile> {
    let entries = compute_entries(target)?;
    Ok(ReportFile::new(
        entries
            .iter()
            .map(|(n, v, ms)| StratumReport::new(n, v, *ms))
            .collect(),
    ))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RegressionStatus {
    Match,
    /// Differs from the printed value by exactly the recorded misprint.
    Misprint(IntPoly),
    Mismatch {
        expected: String,
        computed: String,
    },
    /// A published value that no pipeline produced.
    NotComputed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegressionRow {
    pub name: String,
    pub status: RegressionStatus,
}

impl fmt::Display for RegressionRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            RegressionStatus::Match => write!(f, "ok        {}", self.name),
            RegressionStatus::Misprint(d) => {
                write!(f, "misprint  {} (computed - printed = {d})", self.name)
            }
            RegressionStatus::Mismatch { expected, computed } => {
                write!(
                    f,
                    "MISMATCH  {}: expected {expected}, computed {computed}",
                    self.name
                )
            }
            RegressionStatus::NotComputed => write!(f, "MISSING   {}", self.name),
        }
    }
}

/// Every published value, with its status against the full pipeline.
pub fn paper_regression() -> Result<Vec<RegressionRow>> {
    let entries = compute_entries(Target::All)?;
    let mut names: Vec<&str> = Vec::new();
    for r in REFERENCES {
        // per-character values are checked through their representation
        let base = match r.name.rsplit_once('.') {
            Some((head, _)) if entries.iter().any(|(n, ..)| *n == head) => head,
            _ => r.name,
        };
        if !names.contains(&base) {
            names.push(base);
        }
    }
    Ok(names
        .into_iter()
        .map(|name| {
            let status = match entries.iter().find(|(n, ..)| *n == name) {
                None => RegressionStatus::NotComputed,
                Some((_, value, _)) => match expected::matches(name, value) {
                    Some(true) => RegressionStatus::Match,
                    _ if is_known_misprint(name, value) => {
                        RegressionStatus::Misprint(misprint_delta(name).unwrap_or_default())
                    }
                    _ => RegressionStatus::Mismatch {
                        expected: expected::expected_display(name, value).unwrap_or_default(),
                        computed: value.to_string(),
                    },
                },
            };
            RegressionRow {
                name: name.to_string(),
                status,
            }
        })
        .collect())
}

/// Fails when a published value is not reproduced (misprints aside).
pub fn verify_paper() -> Result<Vec<RegressionRow>> {
    let rows = paper_regression()?;
    let bad: Vec<String> = rows
        .iter()
        .filter(|r| {
            matches!(
                r.status,
                RegressionStatus::Mismatch { .. } | RegressionStatus::NotComputed
            )
        })
        .map(|r| r.to_string())
        .collect();
    if bad.is_empty() {
        Ok(rows)
    } else {
        Err(Error::VerificationFailed(bad))
    }
}
