//! JSON interchange for spaces, maps and sequences, and the check report.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Q};
use crate::supervec::{SuperMap, SuperSpace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceJson {
    pub even: usize,
    pub odd: usize,
}

/// A rational entry: `"p/q"`, `"p"`, or a bare JSON integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EntryJson {
    Text(String),
    Integer(i64),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapJson {
    pub domain: SpaceJson,
    pub codomain: SpaceJson,
    pub even_block: Vec<Vec<EntryJson>>,
    pub odd_block: Vec<Vec<EntryJson>>,
}

/// Two maps `M' -> M -> M''`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SequenceJson {
    pub i: MapJson,
    pub p: MapJson,
}

impl From<SuperSpace> for SpaceJson {
    fn from(s: SuperSpace) -> Self {
        SpaceJson { even: s.even(), odd: s.odd() }
    }
}

impl From<SpaceJson> for SuperSpace {
    fn from(s: SpaceJson) -> Self {
        SuperSpace::new(s.even, s.odd)
    }
}

fn block_to_json(m: &Matrix) -> Vec<Vec<EntryJson>> {
    (0..m.rows()).map(|r| m.row(r).iter().map(|x| EntryJson::Text(x.to_string())).collect()).collect()
}

fn block_from_json(rows: &[Vec<EntryJson>], shape: (usize, usize), path: &str) -> Result<Matrix> {
    if rows.len() != shape.0 {
        return Err(Error::Parse(format!("{path}: expected {} rows, found {}", shape.0, rows.len())));
    }
    let mut m = Matrix::zeros(shape.0, shape.1);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != shape.1 {
            return Err(Error::Parse(format!("{path}[{r}]: expected {} entries, found {}", shape.1, row.len())));
        }
        for (c, entry) in row.iter().enumerate() {
            m[(r, c)] = match entry {
                EntryJson::Integer(i) => Q::from_integer((*i).into()),
                EntryJson::Text(t) => t
                    .trim()
                    .parse::<Q>()
                    .map_err(|_| Error::Parse(format!("{path}[{r}][{c}]: invalid rational {t:?}")))?,
            };
        }
    }
    Ok(m)
}

impl From<&SuperMap> for MapJson {
    fn from(f: &SuperMap) -> Self {
        MapJson {
            domain: f.domain().into(),
            codomain: f.codomain().into(),
            even_block: block_to_json(f.even_block()),
            odd_block: block_to_json(f.odd_block()),
        }
    }
}

impl MapJson {
    pub fn to_map(&self, path: &str) -> Result<SuperMap> {
        let dom: SuperSpace = self.domain.into();
        let cod: SuperSpace = self.codomain.into();
        let even = block_from_json(&self.even_block, (cod.even(), dom.even()), &format!("{path}even_block"))?;
        let odd = block_from_json(&self.odd_block, (cod.odd(), dom.odd()), &format!("{path}odd_block"))?;
        SuperMap::new(dom, cod, even, odd)
    }
}

pub fn parse_map(text: &str) -> Result<SuperMap> {
    let json: MapJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    json.to_map("")
}

pub fn parse_sequence(text: &str) -> Result<(SuperMap, SuperMap)> {
    let json: SequenceJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    Ok((json.i.to_map("i.")?, json.p.to_map("p.")?))
}

pub fn map_to_json(f: &SuperMap) -> String {
    serde_json::to_string_pretty(&MapJson::from(f)).expect("maps serialize")
}

pub fn sequence_to_json(i: &SuperMap, p: &SuperMap) -> String {
    serde_json::to_string_pretty(&SequenceJson { i: i.into(), p: p.into() }).expect("sequences serialize")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl Verdict {
    pub fn from_bool(pass: bool) -> Self {
        if pass {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Entry {
    pub check: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inputs: Option<serde_json::Value>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub details: String,
}

impl Entry {
    pub fn new(check: impl Into<String>, verdict: Verdict, details: impl Into<String>) -> Self {
        Entry {
            check: check.into(),
            index: None,
            seed: None,
            inputs: None,
            verdict,
            witness: None,
            details: details.into(),
        }
    }

    pub fn at(mut self, index: usize, seed: u64) -> Self {
        self.index = Some(index);
        self.seed = Some(seed);
        self
    }

    pub fn with_inputs(mut self, inputs: serde_json::Value) -> Self {
        self.inputs = Some(inputs);
        self
    }

    pub fn with_witness(mut self, witness: Option<String>) -> Self {
        self.witness = witness;
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub entries: Vec<Entry>,
}

impl Report {
    pub fn push(&mut self, entry: Entry) {
        self.entries.push(entry);
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.verdict == Verdict::Pass)
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.entries.iter().filter(|e| e.verdict == verdict).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.entries).expect("reports serialize")
    }

    /// One line per entry, then a summary line.
    pub fn to_table(&self) -> String {
        let width = self.entries.iter().map(|e| e.check.len()).max().unwrap_or(5).max(5);
        let mut out = String::new();
        let _ = writeln!(out, "{:<width$}  {:>5}  {:<12}  details", "check", "index", "verdict");
        for e in &self.entries {
            let index = e.index.map(|i| i.to_string()).unwrap_or_else(|| "-".into());
            let mut details = e.details.clone();
            if let Some(w) = &e.witness {
                details = format!("witness {w}; {details}");
            }
            let _ = writeln!(out, "{:<width$}  {:>5}  {:<12}  {}", e.check, index, e.verdict.as_str(), details);
        }
        let _ = writeln!(
            out,
            "{} checks: {} pass, {} fail, {} inconclusive",
            self.entries.len(),
            self.count(Verdict::Pass),
            self.count(Verdict::Fail),
            self.count(Verdict::Inconclusive)
        );
        out
    }
}
