//! Bundled example data and the JSON schemas it is stored in: number
//! fields, classical newforms, Hilbert candidate tables, and family tables.
//! The same schemas are used by the ingestion client's payloads and by the
//! CLI's file inputs.

use std::collections::BTreeMap;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::characters::character_from_generator_values;
use crate::error::{Error, Result};
use crate::hida::{FamilyMember, HidaFamilyTable};
use crate::lift::HilbertCandidate;
use crate::newform::{AlgebraicNumber, CoefficientField, NewformSpec};
use crate::numberfield::{AbelianData, NumberFieldSpec};

const FIELDS_JSON: &str = include_str!("../fixtures/fields.json");
const NEWFORMS_JSON: &str = include_str!("../fixtures/newforms.json");
const CANDIDATES_JSON: &str = include_str!("../fixtures/hilbert_candidates.json");
const FAMILIES_JSON: &str = include_str!("../fixtures/families.json");

/// Recorded response payloads, used by the ingestion client tests.
pub const PAYLOAD_CLASSICAL_11_2_A_A: &str =
    include_str!("../fixtures/payloads/classical_11.2.a.a.json");
pub const PAYLOAD_HILBERT_2_2_8_1: &str = include_str!("../fixtures/payloads/hilbert_2.2.8.1.json");

/// A rational number in JSON: either an integer or a "num/den" string.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalRepr {
    Int(i64),
    Text(String),
}

impl RationalRepr {
    pub fn to_rational(&self) -> Result<BigRational> {
        match self {
            RationalRepr::Int(n) => Ok(BigRational::from_integer(BigInt::from(*n))),
            RationalRepr::Text(s) => {
                let parse_int = |t: &str| {
                    BigInt::from_str(t.trim()).map_err(|e| Error::Parse {
                        context: format!("rational literal '{s}'"),
                        message: e.to_string(),
                    })
                };
                match s.split_once('/') {
                    None => Ok(BigRational::from_integer(parse_int(s)?)),
                    Some((n, d)) => {
                        let den = parse_int(d)?;
                        if den == BigInt::from(0) {
                            return Err(Error::Parse {
                                context: format!("rational literal '{s}'"),
                                message: "zero denominator".into(),
                            });
                        }
                        Ok(BigRational::new(parse_int(n)?, den))
                    }
                }
            }
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FieldDoc {
    pub label: String,
    pub defining_poly: Vec<i64>,
    #[serde(default)]
    pub conductor: Option<u64>,
    #[serde(rename = "subgroup_H", default)]
    pub subgroup_h: Option<Vec<u64>>,
    #[serde(default)]
    pub lmfdb_label: Option<String>,
}

impl FieldDoc {
    pub fn to_spec(&self) -> Result<NumberFieldSpec> {
        let poly = self
            .defining_poly
            .iter()
            .map(|&c| BigInt::from(c))
            .collect();
        let abelian = match (self.conductor, &self.subgroup_h) {
            (Some(m), Some(h)) => Some(AbelianData {
                conductor: m,
                subgroup: h.clone(),
            }),
            (None, None) => None,
            _ => {
                return Err(Error::Parse {
                    context: format!("field {}", self.label),
                    message: "conductor and subgroup_H must be given together".into(),
                })
            }
        };
        NumberFieldSpec::new(self.label.clone(), poly, abelian)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NewformDoc {
    pub label: String,
    pub level: u64,
    pub weight: u32,
    pub char_modulus: u64,
    #[serde(default)]
    pub char_values: Vec<(u64, u64, u64)>,
    pub field_poly: Vec<RationalRepr>,
    pub ap: Vec<(u64, Vec<RationalRepr>)>,
    pub ap_bound: u64,
}

impl NewformDoc {
    pub fn to_spec(&self) -> Result<NewformSpec> {
        let nebentypus = character_from_generator_values(self.char_modulus, &self.char_values)?;
        let poly = self
            .field_poly
            .iter()
            .map(|c| c.to_rational())
            .collect::<Result<Vec<_>>>()?;
        let field = CoefficientField::new(poly)?;
        let mut ap = BTreeMap::new();
        for (p, coords) in &self.ap {
            let coords = coords
                .iter()
                .map(|c| c.to_rational())
                .collect::<Result<Vec<_>>>()?;
            ap.insert(*p, field.element(coords));
        }
        NewformSpec::new(
            self.label.clone(),
            self.level,
            self.weight,
            nebentypus,
            field,
            ap,
            self.ap_bound,
        )
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CandidateDoc {
    pub label: String,
    pub field_label: String,
    pub level_norm: u64,
    pub weight: u32,
    pub hecke_field_poly: Vec<RationalRepr>,
    /// entries [p, r, coords]
    pub eigenvalues: Vec<(u64, u32, Vec<RationalRepr>)>,
}

impl CandidateDoc {
    pub fn to_candidate(&self) -> Result<HilbertCandidate> {
        let poly = self
            .hecke_field_poly
            .iter()
            .map(|c| c.to_rational())
            .collect::<Result<Vec<_>>>()?;
        let hecke_field = CoefficientField::new(poly)?;
        let mut eigenvalues: BTreeMap<(u64, u32), AlgebraicNumber> = BTreeMap::new();
        for (p, r, coords) in &self.eigenvalues {
            let coords = coords
                .iter()
                .map(|c| c.to_rational())
                .collect::<Result<Vec<_>>>()?;
            eigenvalues.insert((*p, *r), hecke_field.element(coords));
        }
        Ok(HilbertCandidate {
            label: self.label.clone(),
            field_label: self.field_label.clone(),
            level_norm: self.level_norm,
            weight: self.weight,
            hecke_field,
            eigenvalues,
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum NewformRef {
    Label(String),
    Inline(Box<NewformDoc>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FamilyWeightDoc {
    pub k: u32,
    pub newform: NewformRef,
    pub factor_index: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FamilyDoc {
    pub label: String,
    pub tame_level: u64,
    pub p: u64,
    pub weights: Vec<FamilyWeightDoc>,
}

impl FamilyDoc {
    pub fn to_table<R>(&self, mut resolve: R) -> Result<HidaFamilyTable>
    where
        R: FnMut(&str) -> Result<NewformSpec>,
    {
        let mut members = Vec::new();
        for w in &self.weights {
            let form = match &w.newform {
                NewformRef::Label(label) => resolve(label)?,
                NewformRef::Inline(doc) => doc.to_spec()?,
            };
            if form.weight() != w.k {
                return Err(Error::Parse {
                    context: format!("family {}", self.label),
                    message: format!(
                        "weight entry k={} references form {} of weight {}",
                        w.k,
                        form.label(),
                        form.weight()
                    ),
                });
            }
            members.push(FamilyMember {
                form,
                factor_index: w.factor_index,
            });
        }
        HidaFamilyTable::new(self.label.clone(), self.tame_level, self.p, members)
    }
}

fn parse_docs<T: for<'de> Deserialize<'de>>(raw: &str, what: &str) -> Result<Vec<T>> {
    serde_json::from_str(raw).map_err(|e| Error::Parse {
        context: what.to_string(),
        message: e.to_string(),
    })
}

fn field_docs() -> &'static Vec<FieldDoc> {
    static DOCS: OnceLock<Vec<FieldDoc>> = OnceLock::new();
    DOCS.get_or_init(|| parse_docs(FIELDS_JSON, "bundled fields").expect("bundled fields parse"))
}

fn newform_docs() -> &'static Vec<NewformDoc> {
    static DOCS: OnceLock<Vec<NewformDoc>> = OnceLock::new();
    DOCS.get_or_init(|| {
        parse_docs(NEWFORMS_JSON, "bundled newforms").expect("bundled newforms parse")
    })
}

fn candidate_docs() -> &'static Vec<CandidateDoc> {
    static DOCS: OnceLock<Vec<CandidateDoc>> = OnceLock::new();
    DOCS.get_or_init(|| {
        parse_docs(CANDIDATES_JSON, "bundled candidates").expect("bundled candidates parse")
    })
}

fn family_docs() -> &'static Vec<FamilyDoc> {
    static DOCS: OnceLock<Vec<FamilyDoc>> = OnceLock::new();
    DOCS.get_or_init(|| {
        parse_docs(FAMILIES_JSON, "bundled families").expect("bundled families parse")
    })
}

pub fn field_labels() -> Vec<String> {
    field_docs().iter().map(|d| d.label.clone()).collect()
}

/// A bundled field by its short label or its LMFDB label.
pub fn load_field(label: &str) -> Result<NumberFieldSpec> {
    field_docs()
        .iter()
        .find(|d| d.label == label || d.lmfdb_label.as_deref() == Some(label))
        .ok_or_else(|| Error::DataSource(format!("no bundled field '{label}'")))?
        .to_spec()
}

pub fn newform_labels() -> Vec<String> {
    newform_docs().iter().map(|d| d.label.clone()).collect()
}

pub fn load_newform(label: &str) -> Result<NewformSpec> {
    newform_docs()
        .iter()
        .find(|d| d.label == label)
        .ok_or_else(|| Error::DataSource(format!("no bundled newform '{label}'")))?
        .to_spec()
}

/// All bundled candidates attached to an LMFDB field label.
pub fn load_candidates(field_label: &str) -> Result<Vec<HilbertCandidate>> {
    candidate_docs()
        .iter()
        .filter(|d| d.field_label == field_label)
        .map(|d| d.to_candidate())
        .collect()
}

pub fn load_family(label: &str) -> Result<HidaFamilyTable> {
    family_docs()
        .iter()
        .find(|d| d.label == label)
        .ok_or_else(|| Error::DataSource(format!("no bundled family '{label}'")))?
        .to_table(load_newform)
}

/// The LMFDB field label attached to a bundled field, when present.
pub fn lmfdb_field_label(label: &str) -> Option<String> {
    field_docs()
        .iter()
        .find(|d| d.label == label || d.lmfdb_label.as_deref() == Some(label))
        .and_then(|d| d.lmfdb_label.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_fields_load() {
        for label in field_labels() {
            let field = load_field(&label).unwrap();
            assert_eq!(field.label(), label);
        }
        let f = load_field("Qsqrt2").unwrap();
        assert_eq!(f.degree(), 2);
        let by_lmfdb = load_field("3.3.49.1").unwrap();
        assert_eq!(by_lmfdb.label(), "Qzeta7plus");
        assert!(load_field("nope").is_err());
    }

    #[test]
    fn bundled_newforms_load_clean() {
        for label in newform_labels() {
            let form = load_newform(&label).unwrap();
            assert!(form.deligne_violations().is_empty(), "{label}");
        }
        let f = load_newform("11.2.a.a").unwrap();
        assert_eq!(f.level(), 11);
        assert_eq!(f.ap(3).unwrap(), f.field().from_integer(-1));
        let g = load_newform("147.2.a.c").unwrap();
        assert_eq!(g.ap(2).unwrap(), g.field().from_integer(2));
    }

    #[test]
    fn bundled_candidates_load() {
        let cands = load_candidates("2.2.8.1").unwrap();
        assert_eq!(cands.len(), 3);
        let a = cands.iter().find(|c| c.label.ends_with("121.1-a")).unwrap();
        assert_eq!(a.eigenvalue(3, 2), Some(&a.hecke_field.from_integer(-5)));
        assert!(load_candidates("9.9.9.9").unwrap().is_empty());
    }

    #[test]
    fn bundled_family_loads() {
        let fam = load_family("fam11").unwrap();
        assert_eq!(fam.p(), 5);
        assert_eq!(fam.weights().collect::<Vec<_>>(), vec![2, 6]);
    }

    #[test]
    fn rational_repr_parsing() {
        assert_eq!(
            RationalRepr::Int(-3).to_rational().unwrap(),
            BigRational::from_integer(BigInt::from(-3))
        );
        assert_eq!(
            RationalRepr::Text("5/2".into()).to_rational().unwrap(),
            BigRational::new(BigInt::from(5), BigInt::from(2))
        );
        assert!(RationalRepr::Text("1/0".into()).to_rational().is_err());
        assert!(RationalRepr::Text("x".into()).to_rational().is_err());
    }
}
