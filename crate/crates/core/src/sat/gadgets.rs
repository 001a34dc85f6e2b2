//! The literal gadgets: univariate polynomials whose unit-interval
//! integrals make an inconsistent choice of literals vanish.

use num_traits::Zero;

use crate::rat::{is_positive_integer, Rat};
use crate::unipoly::UniPoly;

/// `g1` replaces a variable's first positive occurrence, `g2` its second,
/// and `f` its negative occurrence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetSet {
    pub g1: UniPoly,
    pub g2: UniPoly,
    pub f: UniPoly,
}

impl Default for GadgetSet {
    fn default() -> Self {
        default_gadgets()
    }
}

/// `g1 = 30x² − 36x + 9`, `g2 = −6x + 4`, `f = 2x`.
pub fn default_gadgets() -> GadgetSet {
    GadgetSet {
        g1: UniPoly::from_ints(&[9, -36, 30]),
        g2: UniPoly::from_ints(&[4, -6]),
        f: UniPoly::from_ints(&[0, 2]),
    }
}

/// What an integral must equal for the gadget set to work.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Requirement {
    PositiveInteger,
    Zero,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetCheck {
    pub name: &'static str,
    pub value: Rat,
    pub requirement: Requirement,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetReport {
    pub checks: Vec<GadgetCheck>,
}

impl GadgetReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&GadgetCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Evaluates the seven unit-interval integrals the reduction depends on.
pub fn verify_gadgets(g: &GadgetSet) -> GadgetReport {
    use Requirement::*;
    let (g1, g2, f) = (&g.g1, &g.g2, &g.f);
    let g1g2 = g1 * g2;
    let cases = [
        ("int f", f.clone(), PositiveInteger),
        ("int g1", g1.clone(), PositiveInteger),
        ("int g2", g2.clone(), PositiveInteger),
        ("int g1*g2", g1g2.clone(), PositiveInteger),
        ("int g1*f", g1 * f, Zero),
        ("int g2*f", g2 * f, Zero),
        ("int g1*g2*f", &g1g2 * f, Zero),
    ];
    GadgetReport {
        checks: cases
            .into_iter()
            .map(|(name, poly, requirement)| {
                let value = poly.integrate01();
                let pass = match requirement {
                    PositiveInteger => is_positive_integer(&value),
                    Zero => value.is_zero(),
                };
                GadgetCheck {
                    name,
                    value,
                    requirement,
                    pass,
                }
            })
            .collect(),
    }
}
