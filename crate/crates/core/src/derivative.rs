//! Mixed partial derivative `∂ⁿ/∂x₁⋯∂xₙ` at the origin.
//!
//! At the origin every monomial other than `x₁⋯xₙ` vanishes after the
//! differentiation, so the derivative equals the coefficient of that
//! multilinear monomial in the expanded product. We multiply factors left to
//! right and throw away any term with an exponent of two or more: such a
//! term only ever produces further non-multilinear terms.
//!
//! Two further reductions keep the state small without changing the value:
//!
//! * A variable that occurs in exactly one factor must be taken from that
//!   factor, so the factor is restricted to its terms containing the
//!   variable and the variable is dropped.
//! * Identical factors that are homogeneous linear forms `L = Σ ℓ_x x` are
//!   set aside. `p` copies of `L` fill the missing set `C` (with `|C| = p`)
//!   in `p! · Π_{x∈C} ℓ_x` ways, so they are applied in closed form at the
//!   end instead of being multiplied in one by one.
//!
//! Once no remaining factor (nor the set-aside block) mentions a variable,
//! states that lack it can never be completed and are dropped.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::integrate::expand_prodmulti;
use crate::limits::Limits;
use crate::multipoly::{Monomial, VarId};
use crate::rat::Rat;
use crate::structured::ProdMulti;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(words: usize) -> Self {
        Bits(vec![0; words])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn disjoint(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & b == 0)
    }

    fn union(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a | b).collect())
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            (0..64)
                .filter(move |b| word >> b & 1 == 1)
                .map(move |b| w * 64 + b)
        })
    }
}

/// A factor restricted to its multilinear terms, over variable positions.
type Sparse = Vec<(Bits, Rat)>;

fn index_vars(p: &ProdMulti, vars: &[VarId]) -> Result<HashMap<VarId, usize>> {
    let mut index = HashMap::with_capacity(vars.len());
    for (i, &v) in vars.iter().enumerate() {
        if index.insert(v, i).is_some() {
            return Err(Error::DuplicateVar(v));
        }
    }
    if let Some(v) = p.variables().into_iter().find(|v| !index.contains_key(v)) {
        return Err(Error::MissingVar(v));
    }
    Ok(index)
}

fn sparse_factors(p: &ProdMulti, index: &HashMap<VarId, usize>, words: usize) -> Vec<Sparse> {
    p.factors()
        .iter()
        .map(|f| {
            f.terms()
                .filter(|(m, _)| m.is_multilinear())
                .map(|(m, c)| {
                    let mut bits = Bits::empty(words);
                    for v in m.vars() {
                        bits.set(index[&v]);
                    }
                    (bits, c.clone())
                })
                .collect()
        })
        .collect()
}

/// Multiplies `states` by `factor`, keeping only multilinear products.
fn absorb(
    states: &HashMap<Bits, Rat>,
    factor: &Sparse,
    limits: &Limits,
) -> Result<HashMap<Bits, Rat>> {
    let mut next: HashMap<Bits, Rat> = HashMap::with_capacity(states.len());
    for (s, c) in states {
        for (t, d) in factor {
            if s.disjoint(t) {
                *next.entry(s.union(t)).or_insert_with(Rat::zero) += c * d;
            }
        }
        if next.len() > limits.max_terms {
            return Err(Error::TermLimit {
                limit: limits.max_terms,
            });
        }
    }
    next.retain(|_, c| !c.is_zero());
    Ok(next)
}

/// Coefficient of `Π vars` in the expansion of `p`, which is the mixed
/// derivative `∂ⁿp/∂x₁⋯∂xₙ` at the origin. `vars` must list every variable
/// of `p` exactly once; it may also list variables `p` does not use.
pub fn multilinear_coefficient(p: &ProdMulti, vars: &[VarId], limits: &Limits) -> Result<Rat> {
    let index = index_vars(p, vars)?;
    let words = vars.len().div_ceil(64).max(1);
    let mut factors = sparse_factors(p, &index, words);
    let mut target = Bits::empty(words);
    for i in 0..vars.len() {
        target.set(i);
    }

    // Strip variables that live in a single factor.
    loop {
        let mut seen: Vec<Vec<usize>> = vec![Vec::new(); vars.len()];
        for (fi, f) in factors.iter().enumerate() {
            let mut support = Bits::empty(words);
            for (t, _) in f {
                support = support.union(t);
            }
            for v in support.ones() {
                seen[v].push(fi);
            }
        }
        let mut changed = false;
        for v in target.ones().collect::<Vec<_>>() {
            match seen[v].as_slice() {
                [] => return Ok(Rat::zero()),
                &[fi] => {
                    factors[fi].retain(|(t, _)| t.get(v));
                    for (t, _) in factors[fi].iter_mut() {
                        t.clear(v);
                    }
                    target.clear(v);
                    changed = true;
                    // supports of other variables in fi may have shrunk
                    break;
                }
                _ => {}
            }
        }
        if !changed {
            break;
        }
    }

    // Set aside the largest group of identical homogeneous linear factors.
    let mut groups: BTreeMap<Sparse, Vec<usize>> = BTreeMap::new();
    for (fi, f) in factors.iter().enumerate() {
        if !f.is_empty() && f.iter().all(|(t, _)| t.count() == 1) {
            let mut key = f.clone();
            key.sort();
            groups.entry(key).or_default().push(fi);
        }
    }
    let block = groups
        .into_iter()
        .filter(|(_, members)| members.len() >= 2)
        .max_by_key(|(_, members)| members.len());
    let (block_form, block_members) = match block {
        Some((form, members)) => (Some(form), members),
        None => (None, Vec::new()),
    };
    let in_block: HashSet<usize> = block_members.iter().copied().collect();
    let mut block_weight: HashMap<usize, Rat> = HashMap::new();
    if let Some(form) = &block_form {
        for (t, c) in form {
            let v = t.ones().next().expect("linear term has one variable");
            block_weight.insert(v, c.clone());
        }
    }

    let order: Vec<usize> = (0..factors.len())
        .filter(|fi| !in_block.contains(fi))
        .collect();

    // After which step each target variable stops appearing.
    let mut retire_after: Vec<Vec<usize>> = vec![Vec::new(); order.len()];
    for v in target.ones() {
        if block_weight.contains_key(&v) {
            continue;
        }
        let last = order
            .iter()
            .rposition(|&fi| factors[fi].iter().any(|(t, _)| t.get(v)));
        match last {
            Some(step) => retire_after[step].push(v),
            None => return Ok(Rat::zero()),
        }
    }

    let mut states: HashMap<Bits, Rat> = HashMap::from([(Bits::empty(words), Rat::one())]);
    for (step, &fi) in order.iter().enumerate() {
        states = absorb(&states, &factors[fi], limits)?;
        for &v in &retire_after[step] {
            states.retain(|s, _| s.get(v));
        }
        if states.is_empty() {
            return Ok(Rat::zero());
        }
    }

    if block_form.is_none() {
        return Ok(states.remove(&target).unwrap_or_else(Rat::zero));
    }

    let p_count = block_members.len();
    let fact: BigInt = (1..=p_count).map(BigInt::from).product();
    let mut total = Rat::zero();
    for (s, c) in &states {
        let mut rest = Bits::empty(words);
        for v in target.ones().filter(|&v| !s.get(v)) {
            rest.set(v);
        }
        if !s.union(&target).eq(&target) || rest.count() != p_count {
            continue;
        }
        let mut weight = c.clone();
        for v in rest.ones() {
            match block_weight.get(&v) {
                Some(l) => weight *= l,
                None => {
                    weight = Rat::zero();
                    break;
                }
            }
        }
        total += weight;
    }
    Ok(total * Rat::from_integer(fact))
}

/// Same quantity as [`multilinear_coefficient`], read off the full,
/// unpruned expansion.
pub fn derivative_at_origin_oracle(p: &ProdMulti, vars: &[VarId], limits: &Limits) -> Result<Rat> {
    index_vars(p, vars)?;
    let expanded = expand_prodmulti(p, limits)?;
    Ok(expanded.coefficient(&Monomial::multilinear(vars.iter().copied())))
}

/// Whether any multilinear monomial (the constant monomial included)
/// survives in the expansion of `p` with a nonzero coefficient.
pub fn has_multilinear_term(p: &ProdMulti, limits: &Limits) -> Result<bool> {
    let vars: Vec<VarId> = p.variables().into_iter().collect();
    let index = index_vars(p, &vars)?;
    let words = vars.len().div_ceil(64).max(1);
    let mut states: HashMap<Bits, Rat> = HashMap::from([(Bits::empty(words), Rat::one())]);
    for f in sparse_factors(p, &index, words) {
        states = absorb(&states, &f, limits)?;
        if states.is_empty() {
            return Ok(false);
        }
    }
    Ok(!states.is_empty())
}
