//! Exact graded Betti numbers of arbitrary monomial ideals from Koszul homology.
//!
//! `Tor_i(S/I, K)` is the homology of `K(x_1, ..., x_n) ⊗ S/I`. The complex is
//! `Z^n`-graded and only multidegrees in the lcm lattice of the generators carry
//! homology, so each such multidegree `a` gives a tiny strand: the basis of the
//! `i`-th term is the set of `F ⊆ supp(a)` with `|F| = i` and `x^{a - F} ∉ I`.
//! Ranks are computed exactly by fraction-free elimination.

use std::collections::{HashMap, HashSet};

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use rayon::prelude::*;

use crate::betti::BettiDiagram;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::Limits;

/// Bounds on the computed part of the diagram (ideal-side indices).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankWindow {
    pub max_homological: usize,
    pub max_internal: usize,
    /// Grow `max_internal` by `n` while the top band of width `n` is nonzero.
    pub auto_extend: bool,
}

impl RankWindow {
    /// `i <= n` and `j <= (max generator degree) + n`, auto-extending.
    pub fn for_ideal(ideal: &MonomialIdeal) -> Self {
        let n = ideal.num_vars();
        RankWindow {
            max_homological: n,
            max_internal: ideal.max_degree().unwrap_or(0) + n,
            auto_extend: true,
        }
    }
}

/// The lcm lattice of the generators (lcms of all nonempty subsets).
fn lcm_lattice(gens: &[Monomial], limits: &Limits) -> Result<Vec<Monomial>> {
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut frontier: Vec<Monomial> = Vec::new();
    for g in gens {
        if seen.insert(g.clone()) {
            frontier.push(g.clone());
        }
    }
    while let Some(x) = frontier.pop() {
        for g in gens {
            let l = x.lcm(g);
            if seen.insert(l.clone()) {
                if seen.len() > limits.enum_cap {
                    return Err(Error::CapExceeded {
                        needed: format!("more than {}", limits.enum_cap),
                        cap: limits.enum_cap,
                    });
                }
                frontier.push(l);
            }
        }
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// `dim Tor_i(S/I)_a` for `i = 0..=|supp a|`.
fn strand_homology(ideal: &MonomialIdeal, a: &Monomial) -> Vec<usize> {
    let supp = a.support();
    let s = supp.len();
    // basis[i]: masks over supp of size i whose complement monomial is standard
    let mut basis: Vec<Vec<u32>> = vec![Vec::new(); s + 1];
    for mask in 0u32..(1u32 << s) {
        let mut m = a.clone();
        for (p, &v) in supp.iter().enumerate() {
            if mask >> p & 1 == 1 {
                m = m.div_var(v).expect("v in supp(a)");
            }
        }
        if !ideal.contains(&m) {
            basis[mask.count_ones() as usize].push(mask);
        }
    }
    // masks ascend, which is the colex order of the index sets
    let index: Vec<HashMap<u32, usize>> = basis
        .iter()
        .map(|b| b.iter().enumerate().map(|(k, &m)| (m, k)).collect())
        .collect();
    // rank of d_i: K_i -> K_{i-1}, i = 1..=s
    let mut ranks = vec![0usize; s + 2];
    for i in 1..=s {
        if basis[i].is_empty() || basis[i - 1].is_empty() {
            continue;
        }
        let rows = basis[i - 1].len();
        let mut mat = vec![vec![0i64; basis[i].len()]; rows];
        for (c, &mask) in basis[i].iter().enumerate() {
            let mut sign = 1i64;
            for p in 0..s {
                if mask >> p & 1 == 1 {
                    if let Some(&r) = index[i - 1].get(&(mask & !(1 << p))) {
                        mat[r][c] = sign;
                    }
                    sign = -sign;
                }
            }
        }
        ranks[i] = rank(mat);
    }
    (0..=s)
        .map(|i| {
            let out = ranks[i] + ranks[i + 1];
            assert!(out <= basis[i].len(), "rank-nullity violated in strand");
            basis[i].len() - out
        })
        .collect()
}

/// Exact rank by Bareiss elimination: `i64` first, `BigInt` after an overflow.
pub fn rank(mat: Vec<Vec<i64>>) -> usize {
    match rank_i64(mat.clone()) {
        Some(r) => r,
        None => rank_big(
            mat.into_iter()
                .map(|row| row.into_iter().map(BigInt::from).collect())
                .collect(),
        ),
    }
}

fn rank_i64(mut m: Vec<Vec<i64>>) -> Option<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    let mut prev = 1i64;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&p| m[p][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = m[i][j]
                    .checked_mul(m[r][c])?
                    .checked_sub(m[i][c].checked_mul(m[r][j])?)?;
                m[i][j] = v / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        r += 1;
        if r == rows {
            break;
        }
    }
    Some(r)
}

fn rank_big(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    let mut prev = BigInt::from(1);
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&p| !m[p][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &m[i][j] * &m[r][c] - &m[i][c] * &m[r][j];
                m[i][j] = v / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// `β_{i,j}(I)` for `i <= max_homological`, `j <= max_internal` (after any extension).
pub fn koszul_betti(
    ideal: &MonomialIdeal,
    window: RankWindow,
    limits: &Limits,
) -> Result<BettiDiagram> {
    ideal.nonunit()?;
    let n = ideal.num_vars();
    let mut diagram = BettiDiagram::new(ideal.ring());
    if ideal.is_zero() {
        return Ok(diagram);
    }
    let lattice = lcm_lattice(ideal.generators(), limits)?;
    let full = lattice.iter().map(|a| a.degree()).max().unwrap_or(0);
    let mut max_j = window.max_internal;
    loop {
        let strands: Vec<(usize, Vec<usize>)> = lattice
            .par_iter()
            .filter(|a| a.degree() <= max_j)
            .map(|a| (a.degree(), strand_homology(ideal, a)))
            .collect();
        diagram = BettiDiagram::new(ideal.ring());
        for (j, h) in strands {
            for (q, &dim) in h.iter().enumerate().skip(1) {
                if q - 1 <= window.max_homological {
                    diagram.add(q - 1, j, BigUint::from(dim));
                }
            }
        }
        let band_hit = diagram
            .entries()
            .any(|(&(_, j), _)| j + n > max_j);
        if max_j >= full || !band_hit {
            break;
        }
        if !window.auto_extend {
            return Err(Error::pre(format!(
                "window j <= {max_j} too small and auto-extension is off"
            )));
        }
        max_j += n;
    }
    Ok(diagram)
}

/// [`koszul_betti`] with the default window.
pub fn betti(ideal: &MonomialIdeal, limits: &Limits) -> Result<BettiDiagram> {
    koszul_betti(ideal, RankWindow::for_ideal(ideal), limits)
}

/// Which backend produced a diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    EliahouKervaire,
    AramovaHerzogHibi,
    Koszul,
}

/// Closed form when one applies (stable, then squarefree strongly stable),
/// otherwise Koszul homology.
pub fn auto_betti(ideal: &MonomialIdeal, limits: &Limits) -> Result<(BettiDiagram, Method)> {
    if ideal.is_stable() {
        Ok((crate::betti::ek_betti(ideal)?, Method::EliahouKervaire))
    } else if ideal.is_squarefree_strongly_stable() {
        Ok((crate::betti::ahh_betti(ideal)?, Method::AramovaHerzogHibi))
    } else {
        Ok((betti(ideal, limits)?, Method::Koszul))
    }
}

/// `reg(I)` through [`auto_betti`].
pub fn regularity(ideal: &MonomialIdeal, limits: &Limits) -> Result<usize> {
    auto_betti(ideal, limits)?.0.regularity()
}
