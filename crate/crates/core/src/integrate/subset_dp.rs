//! Dynamic program over factor assignments.
//!
//! Expanding `Π_i (c_i + Σ_v q_{i,v}(x_v))` picks, for every factor, either
//! its constant or one of its univariate parts. Grouping the picks by
//! variable, each term integrates to `Π_i∈const c_i · Π_v ∫ Π_{i→v} q_{i,v}`.
//! We walk the variables one at a time and keep, for every set of factors
//! that are still unassigned, the accumulated weight. A factor only enters
//! the state once one of its variables has been visited and leaves it (by
//! taking its constant) after the last one, so the state size is governed
//! by the number of simultaneously open factors rather than by the total.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::limits::{Limits, DP_FACTOR_CEILING};
use crate::multipoly::VarId;
use crate::rat::Rat;
use crate::structured::ProdSumUni;
use crate::unipoly::UniPoly;

/// Exact integral of `p` over the unit cube.
pub fn integrate_prodsum(p: &ProdSumUni, limits: &Limits) -> Result<Rat> {
    let factors = p.factors();
    let cap = limits.max_dp_factors.min(DP_FACTOR_CEILING);

    let mut occ: BTreeMap<VarId, Vec<usize>> = BTreeMap::new();
    for (i, f) in factors.iter().enumerate() {
        for &v in f.parts().keys() {
            occ.entry(v).or_default().push(i);
        }
    }

    let mut pending: Vec<usize> = factors.iter().map(|f| f.parts().len()).collect();
    let mut scale = Rat::one();
    for (f, _) in factors.iter().zip(&pending).filter(|(_, &n)| n == 0) {
        scale *= f.constant();
    }
    if scale.is_zero() {
        return Ok(scale);
    }

    let order = elimination_order(&occ, &pending);

    let mut slot_of: Vec<Option<u32>> = vec![None; factors.len()];
    let mut factor_at = [usize::MAX; DP_FACTOR_CEILING];
    let mut free_slots: Vec<u32> = (0..DP_FACTOR_CEILING as u32).rev().collect();
    let mut open = 0usize;

    // key: bit s set <=> the factor in slot s is open and still unassigned
    let mut states: HashMap<u64, Rat> = HashMap::from([(0, Rat::one())]);

    for v in order {
        let touching = &occ[&v];

        let mut vmask = 0u64;
        for &i in touching {
            let s = match slot_of[i] {
                Some(s) => s,
                None => {
                    open += 1;
                    if open > cap {
                        return Err(Error::FactorLimit {
                            needed: open,
                            limit: cap,
                        });
                    }
                    let s = free_slots.pop().expect("slot available below the ceiling");
                    slot_of[i] = Some(s);
                    factor_at[s as usize] = i;
                    let bit = 1u64 << s;
                    states = states.into_iter().map(|(m, c)| (m | bit, c)).collect();
                    s
                }
            };
            vmask |= 1u64 << s;
        }

        // ∫ of the product of v's parts for every subset of the factors touching v
        let mut weights: Vec<(u64, Rat)> = Vec::new();
        let mut sub = vmask;
        loop {
            let mut prod = UniPoly::constant(Rat::one());
            let mut bits = sub;
            while bits != 0 {
                let s = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                prod = &prod * &factors[factor_at[s]].parts()[&v];
            }
            let w = prod.integrate01();
            if !w.is_zero() {
                weights.push((sub, w));
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & vmask;
        }

        let mut next: HashMap<u64, Rat> = HashMap::with_capacity(states.len());
        for (mask, val) in &states {
            let avail = mask & vmask;
            for (sub, w) in &weights {
                if sub & !avail == 0 {
                    *next.entry(mask & !sub).or_insert_with(Rat::zero) += val * w;
                }
            }
        }
        next.retain(|_, c| !c.is_zero());
        if next.len() > limits.max_terms {
            return Err(Error::TermLimit {
                limit: limits.max_terms,
            });
        }
        states = next;

        for &i in touching {
            pending[i] -= 1;
            if pending[i] > 0 {
                continue;
            }
            let s = slot_of[i].expect("touched factor has a slot");
            let bit = 1u64 << s;
            let constant = factors[i].constant();
            let mut retired: HashMap<u64, Rat> = HashMap::with_capacity(states.len());
            for (mask, val) in states {
                let (key, val) = if mask & bit != 0 {
                    (mask & !bit, val * constant)
                } else {
                    (mask, val)
                };
                *retired.entry(key).or_insert_with(Rat::zero) += val;
            }
            retired.retain(|_, c| !c.is_zero());
            states = retired;
            free_slots.push(s);
            open -= 1;
        }
    }

    debug_assert!(states.keys().all(|&m| m == 0));
    Ok(scale * states.remove(&0).unwrap_or_else(Rat::zero))
}

/// Greedy variable order that keeps few factors open: repeatedly take the
/// variable that opens the fewest new factors net of those it closes.
fn elimination_order(occ: &BTreeMap<VarId, Vec<usize>>, pending: &[usize]) -> Vec<VarId> {
    let mut opened = vec![false; pending.len()];
    let mut remaining = pending.to_vec();
    let mut left: Vec<VarId> = occ.keys().copied().collect();
    let mut order = Vec::with_capacity(left.len());

    while !left.is_empty() {
        let cost = |v: &VarId| -> isize {
            occ[v]
                .iter()
                .map(|&i| isize::from(!opened[i]) - isize::from(remaining[i] == 1))
                .sum()
        };
        let (pos, _) = left
            .iter()
            .enumerate()
            .min_by_key(|(_, v)| (cost(v), **v))
            .expect("nonempty");
        let v = left.remove(pos);
        for &i in &occ[&v] {
            opened[i] = true;
            remaining[i] -= 1;
        }
        order.push(v);
    }
    order
}
