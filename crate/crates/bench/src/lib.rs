//! Fixed inputs shared by the benchmarks.

use dreg_core::{ExtremalArea, MonomialIdeal};

fn ideal(n: usize, gens: &str) -> MonomialIdeal {
    MonomialIdeal::parse_inline(n, gens).expect("fixture parses")
}

/// `(x1x2, x3x4)` in four variables.
pub fn two_edges() -> MonomialIdeal {
    ideal(4, "x1*x2, x3*x4")
}

/// Strongly stable ideal in five variables whose lexification has regularity 17.
pub fn stable_five() -> MonomialIdeal {
    ideal(5, "x1^2, x1*x2, x1*x3, x1*x4, x2^2, x2*x3^3, x3^4")
}

/// Squarefree ideal in six variables.
pub fn squarefree_six() -> MonomialIdeal {
    ideal(6, "x1*x3*x5, x1*x3*x6, x1*x4*x6, x2*x4*x6")
}

/// Non-stable ideal for the Koszul oracle.
pub fn cycle_five() -> MonomialIdeal {
    ideal(5, "x1*x2, x2*x3, x3*x4, x4*x5, x1*x5")
}

/// `(x_1, ..., x_n)^d`.
pub fn borel_power(n: usize, d: usize) -> MonomialIdeal {
    let ring = dreg_core::GroundRing::new(n).expect("ring");
    let gens: Vec<_> = dreg_core::monomial::LexIter::new(n, n, d).collect();
    MonomialIdeal::new(ring, gens).expect("ideal")
}

pub fn area_b() -> ExtremalArea {
    ExtremalArea::parse("(2,4);(3,3);(4,2)", Some(5)).expect("area")
}
