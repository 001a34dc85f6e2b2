//! Product-form polynomials: products of sums of univariate parts, and
//! products of general sparse factors.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::multipoly::{MultiPoly, VarId};
use crate::rat::Rat;
use crate::unipoly::UniPoly;

/// `constant + Σ_v parts[v](x_v)`.
///
/// Every stored part is nonzero and has a zero constant term; constant
/// terms are folded into `constant`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SumFactor {
    parts: BTreeMap<VarId, UniPoly>,
    constant: Rat,
}

impl SumFactor {
    /// Parts for the same variable are added together.
    pub fn new(constant: Rat, parts: impl IntoIterator<Item = (VarId, UniPoly)>) -> Self {
        let mut merged: BTreeMap<VarId, UniPoly> = BTreeMap::new();
        for (v, p) in parts {
            let slot = merged.entry(v).or_default();
            *slot = &*slot + &p;
        }
        let mut constant = constant;
        let mut stored = BTreeMap::new();
        for (v, p) in merged {
            constant += p.constant_term();
            let rest = p.without_constant();
            if !rest.is_zero() {
                stored.insert(v, rest);
            }
        }
        SumFactor {
            parts: stored,
            constant,
        }
    }

    pub fn from_constant(c: Rat) -> Self {
        Self::new(c, [])
    }

    pub fn parts(&self) -> &BTreeMap<VarId, UniPoly> {
        &self.parts
    }

    pub fn constant(&self) -> &Rat {
        &self.constant
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty() && self.constant.is_zero()
    }

    /// Largest degree among the parts; 0 for a pure constant.
    pub fn max_degree(&self) -> u32 {
        self.parts
            .values()
            .filter_map(UniPoly::degree)
            .max()
            .unwrap_or(0) as u32
    }

    pub fn scale(&self, k: &Rat) -> Self {
        SumFactor {
            parts: self
                .parts
                .iter()
                .filter_map(|(&v, p)| {
                    let q = p.scale(k);
                    (!q.is_zero()).then_some((v, q))
                })
                .collect(),
            constant: &self.constant * k,
        }
    }

    pub fn to_multi(&self) -> MultiPoly {
        self.parts.iter().fold(
            MultiPoly::constant(self.constant.clone()),
            |acc, (&v, p)| &acc + &p.to_multi(v),
        )
    }
}

/// Product of [`SumFactor`]s whose univariate parts all have degree at most
/// `degree_bound`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProdSumUni {
    factors: Vec<SumFactor>,
    degree_bound: u32,
}

impl ProdSumUni {
    pub fn new(factors: Vec<SumFactor>, degree_bound: u32) -> Result<Self> {
        for (i, f) in factors.iter().enumerate() {
            let degree = f.max_degree();
            if degree > degree_bound {
                return Err(Error::DegreeBound {
                    factor: i,
                    degree,
                    bound: degree_bound,
                });
            }
        }
        Ok(ProdSumUni {
            factors,
            degree_bound,
        })
    }

    pub fn factors(&self) -> &[SumFactor] {
        &self.factors
    }

    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    pub fn variables(&self) -> BTreeSet<VarId> {
        self.factors
            .iter()
            .flat_map(|f| f.parts.keys().copied())
            .collect()
    }

    /// The same product with factors reordered by `order` (a permutation of
    /// factor indices).
    pub fn permuted(&self, order: &[usize]) -> Self {
        ProdSumUni {
            factors: order.iter().map(|&i| self.factors[i].clone()).collect(),
            degree_bound: self.degree_bound,
        }
    }
}

/// Product of sparse multivariate factors, each of total degree at most
/// `degree_bound`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProdMulti {
    factors: Vec<MultiPoly>,
    degree_bound: u32,
}

impl ProdMulti {
    pub fn new(factors: Vec<MultiPoly>, degree_bound: u32) -> Result<Self> {
        for (i, f) in factors.iter().enumerate() {
            let degree = f.total_degree();
            if degree > degree_bound {
                return Err(Error::DegreeBound {
                    factor: i,
                    degree,
                    bound: degree_bound,
                });
            }
        }
        Ok(ProdMulti {
            factors,
            degree_bound,
        })
    }

    pub fn factors(&self) -> &[MultiPoly] {
        &self.factors
    }

    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    pub fn variables(&self) -> BTreeSet<VarId> {
        self.factors.iter().flat_map(MultiPoly::variables).collect()
    }

    pub fn permuted(&self, order: &[usize]) -> Self {
        ProdMulti {
            factors: order.iter().map(|&i| self.factors[i].clone()).collect(),
            degree_bound: self.degree_bound,
        }
    }
}

impl From<&ProdSumUni> for ProdMulti {
    fn from(p: &ProdSumUni) -> Self {
        ProdMulti {
            factors: p.factors.iter().map(SumFactor::to_multi).collect(),
            degree_bound: p.degree_bound,
        }
    }
}
