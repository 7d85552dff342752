//! JSON forms of classes, functionals and the numeric models.
//!
//! Rationals are always `"p/q"` strings. Partition keys are JSON arrays
//! rendered as strings (`"[3,1]"`); entries are written with keys in
//! ascending lexicographic order of parts, so `[1,1,1]` precedes `[3]`.

use std::collections::BTreeMap;

use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bundles::{BundleModel, SurfaceModel};
use crate::cobordism::{CobordismClass, Functional};
use crate::error::{Error, Result};
use crate::genus::{ParametricFunctional, Poly};
use crate::rational::{parse_pq, to_pq, Rational};
use crate::symfun::{enumerate_partitions, Partition};

/// Dense coordinates keyed by partition, in output order.
fn ordered_entries(dim: usize, lookup: impl Fn(&Partition) -> String) -> Vec<(String, String)> {
    enumerate_partitions(dim)
        .into_iter()
        .rev()
        .map(|p| (p.to_key(), lookup(&p)))
        .collect()
}

struct Coeffs<'a, V: Serialize>(&'a [(String, V)]);

impl<V: Serialize> Serialize for Coeffs<'_, V> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

fn serialize_vector<S: Serializer>(
    s: S,
    dim: usize,
    entries: &[(String, String)],
    label: Option<&str>,
) -> std::result::Result<S::Ok, S::Error> {
    let mut m = s.serialize_map(None)?;
    m.serialize_entry("dim", &dim)?;
    m.serialize_entry("coeffs", &Coeffs(entries))?;
    if let Some(l) = label {
        m.serialize_entry("label", l)?;
    }
    m.end()
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawVector {
    dim: usize,
    coeffs: BTreeMap<String, String>,
    #[serde(default)]
    label: Option<String>,
}

impl RawVector {
    fn into_parts(self) -> Result<(usize, BTreeMap<Partition, Rational>, Option<String>)> {
        let mut map = BTreeMap::new();
        for (k, v) in &self.coeffs {
            let p = Partition::from_key(k)?;
            if p.weight() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: p.weight(),
                });
            }
            map.insert(p, parse_pq(v)?);
        }
        Ok((self.dim, map, self.label))
    }
}

impl Serialize for CobordismClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries = ordered_entries(self.dim(), |p| to_pq(&self.chern_number(p)));
        serialize_vector(s, self.dim(), &entries, self.label())
    }
}

impl<'de> Deserialize<'de> for CobordismClass {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (dim, map, label) = RawVector::deserialize(d)?
            .into_parts()
            .map_err(D::Error::custom)?;
        let class = CobordismClass::new(dim, map).map_err(D::Error::custom)?;
        Ok(match label {
            Some(l) => class.with_label(l),
            None => class,
        })
    }
}

impl Serialize for Functional {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries = ordered_entries(self.dim(), |p| to_pq(&self.coeff(p)));
        serialize_vector(s, self.dim(), &entries, self.label())
    }
}

impl<'de> Deserialize<'de> for Functional {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (dim, map, label) = RawVector::deserialize(d)?
            .into_parts()
            .map_err(D::Error::custom)?;
        let f = Functional::new(dim, map).map_err(D::Error::custom)?;
        Ok(match label {
            Some(l) => f.with_label(l),
            None => f,
        })
    }
}

pub fn poly_to_strings(p: &Poly) -> Vec<String> {
    p.coeffs().iter().map(to_pq).collect()
}

pub fn poly_from_strings(v: &[String]) -> Result<Poly> {
    Ok(Poly::new(
        v.iter().map(|s| parse_pq(s)).collect::<Result<_>>()?,
    ))
}

impl Serialize for ParametricFunctional {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<(String, Vec<String>)> = enumerate_partitions(self.dim())
            .into_iter()
            .rev()
            .map(|p| {
                let poly = self.coeffs().get(&p).cloned().unwrap_or_default();
                (p.to_key(), poly_to_strings(&poly))
            })
            .collect();
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("dim", &self.dim())?;
        m.serialize_entry("coeffs", &Coeffs(&entries))?;
        m.end()
    }
}

impl<'de> Deserialize<'de> for ParametricFunctional {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            dim: usize,
            coeffs: BTreeMap<String, Vec<String>>,
        }
        let raw = Raw::deserialize(d)?;
        let mut map = BTreeMap::new();
        for (k, v) in &raw.coeffs {
            let p = Partition::from_key(k).map_err(D::Error::custom)?;
            map.insert(p, poly_from_strings(v).map_err(D::Error::custom)?);
        }
        ParametricFunctional::new(raw.dim, map).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSurface {
    c1sq: String,
    c2: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

impl Serialize for SurfaceModel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawSurface {
            c1sq: to_pq(&self.c1sq),
            c2: to_pq(&self.c2),
            label: self.label.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SurfaceModel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawSurface::deserialize(d)?;
        Ok(SurfaceModel {
            c1sq: parse_pq(&raw.c1sq).map_err(D::Error::custom)?,
            c2: parse_pq(&raw.c2).map_err(D::Error::custom)?,
            label: raw.label,
        })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBundle {
    rank: usize,
    c2: String,
}

impl Serialize for BundleModel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawBundle {
            rank: self.rank(),
            c2: to_pq(&self.c2),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BundleModel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawBundle::deserialize(d)?;
        BundleModel::new(raw.rank, parse_pq(&raw.c2).map_err(D::Error::custom)?)
            .map_err(D::Error::custom)
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("in-memory serialization cannot fail")
}

pub fn from_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}
