//! Curve records and the append-only JSON-lines store.

use std::collections::HashSet;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::exactmath::v_p_rat;
use crate::families::{primality, Verdict};
use crate::igusa::IgusaInvariants;
use crate::serial::rat_to_string;
use crate::weierstrass::{EquationJson, GenusTwoEquation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyTag {
    pub name: String,
    #[serde(with = "crate::serial::int_string")]
    pub t: BigInt,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub eps: Vec<i64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub extra: Vec<String>,
}

fn pow2_rat(v: i64) -> BigRational {
    let p = BigRational::from_integer(crate::exactmath::pow2(v.unsigned_abs() as u32));
    if v < 0 {
        p.recip()
    } else {
        p
    }
}

/// `Δ = sign * 2^two_valuation * odd_part`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscriminantReport {
    #[serde(with = "crate::serial::rat_string")]
    pub value: BigRational,
    pub sign: i8,
    /// `None` when `Δ = 0`.
    pub two_valuation: Option<i64>,
    #[serde(with = "crate::serial::rat_string")]
    pub odd_part: BigRational,
    pub smooth: bool,
}

impl DiscriminantReport {
    pub fn of(e: &GenusTwoEquation) -> Self {
        let value = e.discriminant().clone();
        if value.is_zero() {
            return DiscriminantReport {
                value,
                sign: 0,
                two_valuation: None,
                odd_part: BigRational::zero(),
                smooth: false,
            };
        }
        let v = v_p_rat(&value, 2).expect("nonzero");
        let odd_part = value.abs() / pow2_rat(v);
        DiscriminantReport {
            sign: if value.is_negative() { -1 } else { 1 },
            two_valuation: Some(v),
            odd_part,
            smooth: true,
            value,
        }
    }

    /// `sign * 2^v * odd == value`.
    pub fn consistent(&self) -> bool {
        match self.two_valuation {
            None => self.value.is_zero() && self.sign == 0,
            Some(v) => {
                BigRational::from_integer(self.sign.into()) * pow2_rat(v) * &self.odd_part == self.value
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveRecord {
    /// SHA-256 of the canonical equation JSON.
    pub id: String,
    #[serde(flatten)]
    pub equation: EquationJson,
    pub discriminant: DiscriminantReport,
    /// `[J2, J4, J6, J8, J10]`.
    #[serde(rename = "J")]
    pub j: [String; 5],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilyTag>,
    /// Primality of the odd part of `|Δ|`, when it is an integer.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub odd_part_prime: Option<Verdict>,
}

pub fn record_id(e: &GenusTwoEquation) -> String {
    hex::encode(Sha256::digest(e.canonical_json().as_bytes()))
}

impl CurveRecord {
    pub fn new(e: &GenusTwoEquation, family: Option<FamilyTag>) -> Result<Self> {
        let inv = IgusaInvariants::of(e)?;
        let discriminant = DiscriminantReport::of(e);
        let odd_part_prime = (discriminant.smooth && discriminant.odd_part.is_integer())
            .then(|| primality(&discriminant.odd_part.to_integer()));
        Ok(CurveRecord {
            id: record_id(e),
            equation: e.to_json(),
            j: inv.as_array().map(rat_to_string),
            discriminant,
            family,
            odd_part_prime,
        })
    }

    pub fn curve(&self) -> Result<GenusTwoEquation> {
        GenusTwoEquation::from_json(&self.equation)
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_line(line: &str) -> Result<Self> {
        serde_json::from_str(line).map_err(|e| Error::Parse(format!("record: {e}")))
    }
}

/// One JSON object per line; existing ids are never written twice.
pub struct JsonlStore {
    path: PathBuf,
}

impl JsonlStore {
    pub fn open(path: impl AsRef<Path>) -> Self {
        JsonlStore {
            path: path.as_ref().to_path_buf(),
        }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn load(&self) -> Result<Vec<CurveRecord>> {
        if !self.path.exists() {
            return Ok(Vec::new());
        }
        let f = BufReader::new(File::open(&self.path)?);
        let mut out = Vec::new();
        for line in f.lines() {
            let line = line?;
            if !line.trim().is_empty() {
                out.push(CurveRecord::from_line(&line)?);
            }
        }
        Ok(out)
    }

    /// Appends the records whose ids are new; returns how many were written.
    pub fn append(&self, records: &[CurveRecord]) -> Result<usize> {
        let mut seen: HashSet<String> = self.load()?.into_iter().map(|r| r.id).collect();
        let mut f = OpenOptions::new().create(true).append(true).open(&self.path)?;
        let mut n = 0;
        for r in records {
            if seen.insert(r.id.clone()) {
                writeln!(f, "{}", r.to_line())?;
                n += 1;
            }
        }
        Ok(n)
    }
}

pub const CSV_HEADER: [&str; 12] = [
    "id", "P", "Q", "disc", "sign", "v2", "odd_part", "smooth", "J", "family", "t", "eps",
];

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn write_csv<W: Write>(records: &[CurveRecord], w: W) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    let err = |e: csv::Error| Error::Io(e.to_string());
    out.write_record(CSV_HEADER).map_err(err)?;
    for r in records {
        let d = &r.discriminant;
        let fam = r.family.as_ref();
        out.write_record([
            r.id.clone(),
            join(r.equation.p.iter().map(|c| rat_to_string(&c.0))),
            join(r.equation.q.iter().map(|c| rat_to_string(&c.0))),
            rat_to_string(&d.value),
            d.sign.to_string(),
            d.two_valuation.map(|v| v.to_string()).unwrap_or_default(),
            rat_to_string(&d.odd_part),
            d.smooth.to_string(),
            join(r.j.iter()),
            fam.map(|f| f.name.clone()).unwrap_or_default(),
            fam.map(|f| f.t.to_string()).unwrap_or_default(),
            fam.map(|f| join(&f.eps)).unwrap_or_default(),
        ])
        .map_err(err)?;
    }
    out.flush()?;
    Ok(())
}
