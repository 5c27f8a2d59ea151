//! The squarefree operation `Φ` and squarefree d-lexsegment ideals.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::betti::ahh_betti;
use crate::dreg::{dlinear_set, LSequence};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::koszul::regularity;
use crate::macaulay::binomial;
use crate::monomial::{check_cap, GroundRing, Monomial, SquarefreeLexIter};
use crate::Limits;

/// `Φ(x_{i_1} x_{i_2} ... x_{i_d}) = x_{i_1} x_{i_2 + 1} ... x_{i_d + d - 1}` in `target` variables.
pub fn phi(u: &Monomial, target: usize) -> Result<Monomial> {
    let idx: Vec<usize> = u
        .index_sequence()
        .into_iter()
        .enumerate()
        .map(|(k, i)| i + k)
        .collect();
    if idx.last().is_some_and(|&m| m > target) {
        return Err(Error::pre(format!(
            "Φ({u}) needs {} variables, only {target} available",
            idx.last().unwrap()
        )));
    }
    Ok(Monomial::from_indices(target, &idx))
}

/// Inverse of [`phi`] on squarefree monomials, into `target` variables.
pub fn phi_inv(v: &Monomial, target: usize) -> Result<Monomial> {
    if !v.is_squarefree() {
        return Err(Error::pre(format!("Φ⁻¹ needs a squarefree monomial, got {v}")));
    }
    let idx: Vec<usize> = v
        .index_sequence()
        .into_iter()
        .enumerate()
        .map(|(k, j)| j - k)
        .collect();
    if idx.last().is_some_and(|&m| m > target) {
        return Err(Error::pre(format!(
            "Φ⁻¹({v}) does not live in {target} variables"
        )));
    }
    Ok(Monomial::from_indices(target, &idx))
}

fn single_degree(ideal: &MonomialIdeal) -> Result<usize> {
    let d = ideal
        .min_degree()
        .ok_or_else(|| Error::pre("the zero ideal is not allowed here"))?;
    if !ideal.is_generated_in_degree(d) || d == 0 {
        return Err(Error::pre("the ideal must be generated in one positive degree"));
    }
    Ok(d)
}

/// `Φ(I) ⊂ K[x_1, ..., x_{n+d-1}]` for a strongly stable `I` generated in degree `d`.
pub fn phi_ideal(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let d = single_degree(ideal)?;
    if !ideal.is_strongly_stable() {
        return Err(Error::pre("Φ of an ideal needs a strongly stable ideal"));
    }
    let target = ideal.num_vars() + d - 1;
    let ring = GroundRing::new(target)?;
    MonomialIdeal::new(
        ring,
        ideal
            .generators()
            .iter()
            .map(|u| phi(u, target))
            .collect::<Result<Vec<_>>>()?,
    )
}

/// `Φ⁻¹(J) ⊂ K[x_1, ..., x_{N-d+1}]` for a squarefree strongly stable `J` generated
/// in degree `d` inside `N` variables.
pub fn phi_inv_ideal(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let d = single_degree(ideal)?;
    if !ideal.is_squarefree_strongly_stable() {
        return Err(Error::pre(
            "Φ⁻¹ of an ideal needs a squarefree strongly stable ideal",
        ));
    }
    if d > ideal.num_vars() {
        return Err(Error::pre("degree exceeds the number of variables"));
    }
    let target = ideal.num_vars() + 1 - d;
    let ring = GroundRing::new(target)?;
    MonomialIdeal::new(
        ring,
        ideal
            .generators()
            .iter()
            .map(|u| phi_inv(u, target))
            .collect::<Result<Vec<_>>>()?,
    )
}

/// `Φ̃(I)`: generator-wise `Φ` inside the same ring, for strongly stable `I`
/// with `max(u) + deg(u) - 1 <= n` on every generator.
pub fn phi_tilde(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    if !ideal.is_strongly_stable() {
        return Err(Error::pre("Φ̃ needs a strongly stable ideal"));
    }
    ideal.nonunit()?;
    let n = ideal.num_vars();
    if let Some(u) = ideal
        .generators()
        .iter()
        .find(|u| u.max_index() + u.degree() > n + 1)
    {
        return Err(Error::pre(format!(
            "max({u}) + deg({u}) - 1 exceeds n = {n}"
        )));
    }
    MonomialIdeal::new(
        ideal.ring(),
        ideal
            .generators()
            .iter()
            .map(|u| phi(u, n))
            .collect::<Result<Vec<_>>>()?,
    )
}

/// Inverse of [`phi_tilde`] on squarefree strongly stable ideals.
pub fn phi_tilde_inv(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    if !ideal.is_squarefree_strongly_stable() {
        return Err(Error::pre("Φ̃⁻¹ needs a squarefree strongly stable ideal"));
    }
    let n = ideal.num_vars();
    MonomialIdeal::new(
        ideal.ring(),
        ideal
            .generators()
            .iter()
            .map(|u| phi_inv(u, n))
            .collect::<Result<Vec<_>>>()?,
    )
}

/// `(ℓ*_1, ..., ℓ*_{N-d+1})`: generators counted by `max(u) - d + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LStarSequence {
    pub degree: usize,
    pub entries: Vec<BigUint>,
}

impl LStarSequence {
    pub fn from_u64(degree: usize, entries: &[u64]) -> Self {
        LStarSequence {
            degree,
            entries: entries.iter().map(|&e| BigUint::from(e)).collect(),
        }
    }

    /// The same numbers read as an ℓ-sequence in `N - d + 1` variables.
    pub fn as_l(&self) -> LSequence {
        LSequence::new(self.degree, self.entries.clone())
    }
}

impl fmt::Display for LStarSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.as_l(), f)
    }
}

/// The ℓ*-sequence of a squarefree strongly stable ideal generated in degree `d`.
pub fn l_star(ideal: &MonomialIdeal) -> Result<LStarSequence> {
    let d = single_degree(ideal)?;
    if !ideal.is_squarefree_strongly_stable() {
        return Err(Error::pre("ℓ* needs a squarefree strongly stable ideal"));
    }
    let n = ideal.num_vars();
    if d > n {
        return Err(Error::pre("degree exceeds the number of variables"));
    }
    let mut entries = vec![BigUint::zero(); n + 1 - d];
    for u in ideal.generators() {
        entries[u.max_index() - d] += 1u8;
    }
    Ok(LStarSequence { degree: d, entries })
}

/// Number of squarefree monomials of degree `t` in `I`.
pub fn squarefree_count(ideal: &MonomialIdeal, t: usize, limits: &Limits) -> Result<usize> {
    let n = ideal.num_vars();
    check_cap(&binomial(n as u64, t as u64), limits)?;
    Ok(SquarefreeLexIter::new(n, t)
        .filter(|u| ideal.contains(u))
        .count())
}

/// Solves `c(t) = Σ_k ℓ*_k C(m-k, t-d)` for `t = d..d+m-1` by back substitution,
/// where `m = N - d + 1`.
fn l_star_from_counts(counts: &[usize], d: usize, m: usize) -> Result<LStarSequence> {
    let mut l = vec![BigInt::zero(); m + 1];
    for s in (0..m).rev() {
        let k = m - s;
        let mut v = BigInt::from(counts[d + s]);
        for j in 1..k {
            v -= &l[j] * BigInt::from(binomial((m - j) as u64, s as u64));
        }
        if v.is_negative() {
            return Err(Error::Inadmissible(format!(
                "squarefree counts force ℓ*_{k} = {v} < 0"
            )));
        }
        l[k] = v;
    }
    Ok(LStarSequence {
        degree: d,
        entries: l[1..].iter().map(|v| v.to_biguint().unwrap()).collect(),
    })
}

/// `SqLex^(d)(I)`: the squarefree d-lexsegment ideal with the Hilbert function of
/// the squarefree ideal `I`, assuming `reg(I) <= d`.
pub fn sq_lexd(ideal: &MonomialIdeal, d: usize, limits: &Limits) -> Result<MonomialIdeal> {
    if !ideal.is_squarefree() {
        return Err(Error::pre("SqLex^(d) needs a squarefree ideal"));
    }
    ideal.nonunit()?;
    let n = ideal.num_vars();
    if d == 0 || d > n {
        return Err(Error::IndexOutOfRange { index: d, max: n });
    }
    if ideal.is_zero() {
        return Ok(ideal.clone());
    }
    let reg = regularity(ideal, limits)?;
    if reg > d {
        return Err(Error::RegularityTooLarge { reg, bound: d });
    }
    let counts: Vec<usize> = (0..=n)
        .map(|t| squarefree_count(ideal, t, limits))
        .collect::<Result<_>>()?;
    let m = n + 1 - d;
    let star = l_star_from_counts(&counts, d, m)?;
    let mut gens: Vec<Monomial> = Vec::new();
    for t in 0..d {
        gens.extend(SquarefreeLexIter::new(n, t).take(counts[t]));
    }
    let small = GroundRing::new(m)?;
    for u in dlinear_set(&star.as_l(), small, limits)?.iter() {
        gens.push(phi(u, n)?);
    }
    MonomialIdeal::new(ideal.ring(), gens)
}

/// `{reg(I), ..., reg(SqLex(I))}` with squarefree witnesses of each regularity.
pub fn sq_regularity_range(
    ideal: &MonomialIdeal,
    limits: &Limits,
) -> Result<crate::dreg::RegularityRange> {
    if !ideal.is_squarefree() {
        return Err(Error::pre("needs a squarefree ideal"));
    }
    ideal.nonunit()?;
    if ideal.is_zero() {
        return Err(Error::pre("the zero ideal has no regularity"));
    }
    let min = regularity(ideal, limits)?;
    let max = ahh_betti(&ideal.sq_lexify(limits)?)?.regularity()?;
    let mut witnesses = Vec::new();
    for r in min..=max {
        let w = sq_lexd(ideal, r, limits)?;
        let got = ahh_betti(&w)?.regularity()?;
        if got != r {
            return Err(Error::pre(format!(
                "SqLex^({r}) has regularity {got}, expected {r}"
            )));
        }
        witnesses.push((r, w));
    }
    Ok(crate::dreg::RegularityRange {
        min,
        max,
        witnesses,
    })
}
