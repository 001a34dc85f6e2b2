//! Divide-and-conquer integration of bounded-width products.
//!
//! A product `f_1 ⋯ f_m` is c-wide when every variable occurs only inside
//! some window of `c` consecutive factors. Splitting out a middle window
//! `G` of `c` factors leaves a left part and a right part that share no
//! variables with each other; every variable is either private to the left,
//! private to the right, or seen by `G`. The private variables are
//! integrated out recursively, each side returning a polynomial in its
//! boundary variables, and the three pieces are multiplied and integrated
//! over whatever is private to the whole range.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::integrate::expand_factors;
use crate::limits::Limits;
use crate::multipoly::{MultiPoly, VarId};
use crate::rat::Rat;
use crate::structured::ProdMulti;

/// First and last factor index containing each variable.
fn spans(p: &ProdMulti) -> BTreeMap<VarId, (usize, usize)> {
    let mut spans: BTreeMap<VarId, (usize, usize)> = BTreeMap::new();
    for (i, f) in p.factors().iter().enumerate() {
        for v in f.variables() {
            spans.entry(v).and_modify(|s| s.1 = i).or_insert((i, i));
        }
    }
    spans
}

/// Smallest `c` for which `p` is c-wide. A product without variables
/// (or without factors) has width 1.
pub fn width_of(p: &ProdMulti) -> usize {
    spans(p)
        .values()
        .map(|&(first, last)| last - first + 1)
        .max()
        .unwrap_or(1)
}

/// Exact integral of `p` over the unit cube, given that `p` is c-wide.
pub fn integrate_cwide(p: &ProdMulti, c: usize, limits: &Limits) -> Result<Rat> {
    if c == 0 {
        return Err(Error::ZeroWidth);
    }
    let width = width_of(p);
    if width > c {
        return Err(Error::WidthExceeded { width, c });
    }
    let solver = Eliminator {
        factors: p.factors(),
        spans: spans(p),
        c,
        limits,
    };
    let rest = solver.eliminate(0, p.factors().len())?;
    // everything is private to the full range, so only a constant remains
    Ok(rest.integrate01_all())
}

struct Eliminator<'a> {
    factors: &'a [MultiPoly],
    spans: BTreeMap<VarId, (usize, usize)>,
    c: usize,
    limits: &'a Limits,
}

impl Eliminator<'_> {
    /// `∫ f_lo ⋯ f_{hi-1}` over the variables private to `[lo, hi)`, as a
    /// polynomial in the variables shared with factors outside the range.
    fn eliminate(&self, lo: usize, hi: usize) -> Result<MultiPoly> {
        let private = |v: VarId| {
            let (first, last) = self.spans[&v];
            first >= lo && last < hi
        };

        let len = hi - lo;
        if len <= 2 * self.c {
            let prod = expand_factors(&self.factors[lo..hi], self.limits)?;
            return Ok(prod.integrate_out(private));
        }

        let g_lo = lo + (len - self.c).div_ceil(2);
        let g_hi = g_lo + self.c;
        let left = self.eliminate(lo, g_lo)?;
        let right = self.eliminate(g_hi, hi)?;

        let max_terms = self.limits.max_terms;
        let middle = expand_factors(&self.factors[g_lo..g_hi], self.limits)?;
        let prod = middle
            .mul_limited(&left, max_terms)?
            .mul_limited(&right, max_terms)?;
        Ok(prod.integrate_out(private))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::integrate::expand_prodmulti;
    use crate::multipoly::Monomial;
    use crate::rat::{frac, int};

    fn x(i: u32) -> MultiPoly {
        MultiPoly::var(VarId(i))
    }

    fn chain(n: u32) -> ProdMulti {
        ProdMulti::new((0..n).map(|i| &x(i) + &x(i + 1)).collect(), 1).unwrap()
    }

    #[test]
    fn widths() {
        assert_eq!(width_of(&chain(3)), 2);
        let same = ProdMulti::new(vec![&x(0) + &x(1); 4], 1).unwrap();
        assert_eq!(width_of(&same), 4);
        assert_eq!(width_of(&ProdMulti::new(vec![x(0)], 1).unwrap()), 1);
    }

    #[test]
    fn short_chain_matches_oracle() {
        let p = chain(3);
        let oracle = expand_prodmulti(&p, &Limits::default())
            .unwrap()
            .integrate01_all();
        assert_eq!(oracle, frac(7, 6));
        assert_eq!(integrate_cwide(&p, 2, &Limits::default()), Ok(frac(7, 6)));
    }

    #[test]
    fn long_chain_matches_oracle() {
        let p = chain(11);
        let oracle = expand_prodmulti(&p, &Limits::default())
            .unwrap()
            .integrate01_all();
        assert_eq!(
            integrate_cwide(&p, 2, &Limits::default()),
            Ok(oracle.clone())
        );
        assert_eq!(integrate_cwide(&p, 3, &Limits::default()), Ok(oracle));
    }

    #[test]
    fn disjoint_factors_multiply() {
        let sq = MultiPoly::term(Monomial::power(VarId(0), 2), int(1));
        let cube = MultiPoly::term(Monomial::power(VarId(1), 3), int(1));
        let p = ProdMulti::new(vec![sq, cube, &x(2) + &MultiPoly::one()], 3).unwrap();
        assert_eq!(
            integrate_cwide(&p, 1, &Limits::default()),
            Ok(frac(1, 12) * frac(3, 2))
        );
    }

    #[test]
    fn rejects_narrow_c() {
        let p = chain(4);
        assert_eq!(
            integrate_cwide(&p, 1, &Limits::default()),
            Err(Error::WidthExceeded { width: 2, c: 1 })
        );
        assert_eq!(
            integrate_cwide(&p, 0, &Limits::default()),
            Err(Error::ZeroWidth)
        );
    }
}
