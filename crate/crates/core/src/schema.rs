//! JSON file formats.
//!
//! * Ring files: `{"dimension", "basis": [{name, degree}], "products":
//!   [{left, right, result: [{symbol, coeff}]}], "top"}`.
//! * Functionals and Chern vectors: `{"dimension", "entries": [{"partition",
//!   "value"}]}`.
//! * Bundles: `{"base": <catalog name | ring file>, "tangent": [class...],
//!   "bundle": {"rank", "classes": [class...]}}`, where a class is a list of
//!   `{symbol, coeff}` and the i-th entry is `c_{i+1}`.
//! * Family models: `{"w", "t", "genus", "polarization"}`.
//!
//! Coefficients are strings `"p/q"` or JSON integers.

use std::sync::Arc;

use serde::{Deserialize, Serialize, Serializer};

use crate::catalog;
use crate::charclass::{ChernData, ChernVector, LinearFunctional};
use crate::error::{Error, Result};
use crate::families::{DolgachevModel, ModelConfig};
use crate::partition::Partition;
use crate::pbundle::{Base, BundleOnBase};
use crate::ring::{BasisSymbol, RingElement, RingPresentation};
use crate::scalar::Scalar;

pub(crate) fn ser_scalar<S: Scalar, Z: Serializer>(v: &S, s: Z) -> std::result::Result<Z::Ok, Z::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coeff {
    Int(i64),
    Text(String),
}

impl Coeff {
    pub fn parse<S: Scalar>(&self) -> Result<S> {
        match self {
            Coeff::Int(v) => Ok(S::from_int(*v)),
            Coeff::Text(t) => S::parse_ratio(t).ok_or_else(|| Error::Parse(format!("bad rational `{t}`"))),
        }
    }

    pub fn from_scalar<S: Scalar>(v: &S) -> Self {
        Coeff::Text(v.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SymbolEntry {
    pub name: String,
    pub degree: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Term {
    pub symbol: String,
    pub coeff: Coeff,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProductEntry {
    pub left: String,
    pub right: String,
    pub result: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RingFile {
    pub dimension: u32,
    pub basis: Vec<SymbolEntry>,
    #[serde(default)]
    pub products: Vec<ProductEntry>,
    pub top: String,
}

impl RingFile {
    /// Presentation without validation, for reporting.
    pub fn to_unchecked<S: Scalar>(&self) -> Result<RingPresentation<S>> {
        let basis: Vec<BasisSymbol> = self.basis.iter().map(|b| BasisSymbol::new(&b.name, b.degree)).collect();
        let index = |name: &str| {
            basis
                .iter()
                .position(|b| b.name == name)
                .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
        };
        let mut products = Vec::new();
        for p in &self.products {
            let combo = p
                .result
                .iter()
                .map(|t| Ok((index(&t.symbol)?, t.coeff.parse()?)))
                .collect::<Result<Vec<_>>>()?;
            products.push((index(&p.left)?, index(&p.right)?, combo));
        }
        let top = index(&self.top)?;
        Ok(RingPresentation::unchecked(self.dimension, basis, products, Some(top)))
    }

    pub fn to_presentation<S: Scalar>(&self) -> Result<RingPresentation<S>> {
        let ring = self.to_unchecked()?;
        ring.validate()?;
        Ok(ring)
    }

    /// Lists every nonzero product with `left <= right`, units omitted.
    pub fn from_presentation<S: Scalar>(ring: &RingPresentation<S>) -> Result<Self> {
        let top = ring.top().ok_or(Error::NoFundamentalClass)?;
        let unit = ring.unit();
        let names = ring.basis();
        let mut products = Vec::new();
        for i in 0..ring.len() {
            for j in i..ring.len() {
                if i == unit || j == unit || ring.product(i, j).is_empty() {
                    continue;
                }
                products.push(ProductEntry {
                    left: names[i].name.clone(),
                    right: names[j].name.clone(),
                    result: ring
                        .product(i, j)
                        .iter()
                        .map(|(k, c)| Term { symbol: names[*k].name.clone(), coeff: Coeff::from_scalar(c) })
                        .collect(),
                });
            }
        }
        Ok(RingFile {
            dimension: ring.dimension(),
            basis: names.iter().map(|b| SymbolEntry { name: b.name.clone(), degree: b.degree }).collect(),
            products,
            top: names[top].name.clone(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PartitionEntry {
    pub partition: Partition,
    pub value: Coeff,
}

/// Shared wire form of [`LinearFunctional`] and [`ChernVector`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PartitionTable {
    pub dimension: u32,
    pub entries: Vec<PartitionEntry>,
}

impl PartitionTable {
    fn from_entries<'a, S: Scalar>(dimension: u32, entries: impl Iterator<Item = (&'a Partition, &'a S)>) -> Self {
        PartitionTable {
            dimension,
            entries: entries
                .map(|(m, v)| PartitionEntry { partition: m.clone(), value: Coeff::from_scalar(v) })
                .collect(),
        }
    }

    fn parsed<S: Scalar>(&self) -> Result<Vec<(Partition, S)>> {
        self.entries.iter().map(|e| Ok((e.partition.clone(), e.value.parse()?))).collect()
    }

    pub fn from_vector<S: Scalar>(v: &ChernVector<S>) -> Self {
        Self::from_entries(v.dimension(), v.entries())
    }

    pub fn from_functional<S: Scalar>(f: &LinearFunctional<S>) -> Self {
        Self::from_entries(f.dimension(), f.entries())
    }

    pub fn to_vector<S: Scalar>(&self) -> Result<ChernVector<S>> {
        ChernVector::from_entries(self.dimension, self.parsed()?)
    }

    pub fn to_functional<S: Scalar>(&self) -> Result<LinearFunctional<S>> {
        LinearFunctional::from_entries(self.dimension, self.parsed()?)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BaseSpec {
    Catalog(String),
    File(RingFile),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BundleSpec {
    pub rank: u32,
    #[serde(default)]
    pub classes: Vec<Vec<Term>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BundleFile {
    pub base: BaseSpec,
    /// Defaults to the catalog tangent classes for catalog bases, and to
    /// zero for ring files.
    #[serde(default)]
    pub tangent: Option<Vec<Vec<Term>>>,
    pub bundle: BundleSpec,
}

fn classes<S: Scalar>(ring: &Arc<RingPresentation<S>>, spec: &[Vec<Term>]) -> Result<Vec<RingElement<S>>> {
    spec.iter()
        .map(|terms| {
            let parsed = terms
                .iter()
                .map(|t| Ok((t.symbol.as_str(), t.coeff.parse()?)))
                .collect::<Result<Vec<_>>>()?;
            RingElement::from_terms(ring, &parsed)
        })
        .collect()
}

impl BundleFile {
    pub fn to_bundle<S: Scalar>(&self) -> Result<BundleOnBase<S>> {
        let catalog_base = match &self.base {
            BaseSpec::Catalog(name) => Some(catalog::parse::<S>(name)?),
            BaseSpec::File(_) => None,
        };
        let ring = match (&self.base, &catalog_base) {
            (_, Some(b)) => b.ring().clone(),
            (BaseSpec::File(f), None) => Arc::new(f.to_presentation()?),
            (BaseSpec::Catalog(_), None) => unreachable!(),
        };
        let base = match (&self.tangent, catalog_base) {
            (Some(t), _) => {
                let tangent = ChernData::new(&ring, ring.dimension().max(1), classes(&ring, t)?)?;
                Base::new(ring.clone(), tangent)?
            }
            (None, Some(b)) => b,
            (None, None) => Base::parallelizable(ring.clone())?,
        };
        let bundle = ChernData::new(&ring, self.bundle.rank, classes(&ring, &self.bundle.classes)?)?;
        BundleOnBase::new(base, bundle)
    }
}

fn default_one() -> Coeff {
    Coeff::Int(1)
}

fn default_polarization() -> Coeff {
    Coeff::Int(2)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModelFile {
    #[serde(default = "default_one")]
    pub w: Coeff,
    #[serde(default = "default_one")]
    pub t: Coeff,
    #[serde(default)]
    pub genus: u32,
    #[serde(default = "default_polarization")]
    pub polarization: Coeff,
}

impl Default for ModelFile {
    fn default() -> Self {
        ModelFile { w: default_one(), t: default_one(), genus: 0, polarization: default_polarization() }
    }
}

impl ModelFile {
    pub fn to_config<S: Scalar>(&self) -> Result<ModelConfig<S>> {
        Ok(ModelConfig {
            dolgachev: DolgachevModel::new(self.w.parse()?, self.t.parse()?)?,
            genus: self.genus,
            polarization: self.polarization.parse()?,
        })
    }
}

pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}
