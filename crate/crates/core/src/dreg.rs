//! ℓ-sequences, d-linear lexsegment ideals and d-lexsegment ideals.
//!
//! A d-regular ideal with Hilbert function `H` has a canonical representative
//! `Lex^(d)`: lexsegment below degree `d`, and from degree `d` on the unique
//! d-linear lexsegment ideal with the ℓ-sequence read off from the tail of `H`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive, Zero};

use crate::betti::{ek_betti, BettiDiagram};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::koszul::regularity;
use crate::macaulay::{binomial, is_m_vector, to_usize, up, HilbertSpec, Role};
use crate::monomial::{check_cap, lex_prefix, GroundRing, LexIter, Monomial, MonomialSet};
use crate::Limits;

/// `(ℓ_1, ..., ℓ_n)` together with the generating degree `d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LSequence {
    pub degree: usize,
    pub entries: Vec<BigUint>,
}

impl LSequence {
    pub fn new(degree: usize, entries: Vec<BigUint>) -> Self {
        LSequence { degree, entries }
    }

    pub fn from_u64(degree: usize, entries: &[u64]) -> Self {
        LSequence {
            degree,
            entries: entries.iter().map(|&e| BigUint::from(e)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `ℓ_k`, 1-based.
    pub fn get(&self, k: usize) -> &BigUint {
        &self.entries[k - 1]
    }

    pub fn total(&self) -> BigUint {
        self.entries.iter().sum()
    }
}

impl fmt::Display for LSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `ℓ_k(V) = |D_k(V)|` for a single-degree set.
pub fn l_sequence_of_set(v: &MonomialSet) -> LSequence {
    let n = v.ring().num_vars();
    LSequence {
        degree: v.degree(),
        entries: (1..=n).map(|k| BigUint::from(v.count_eq(k))).collect(),
    }
}

/// The ℓ-sequence of a strongly stable ideal generated in one degree.
pub fn l_sequence(ideal: &MonomialIdeal) -> Result<LSequence> {
    let d = ideal
        .min_degree()
        .ok_or_else(|| Error::pre("the zero ideal has no ℓ-sequence"))?;
    if !ideal.is_generated_in_degree(d) {
        return Err(Error::pre("ℓ-sequences need generators of a single degree"));
    }
    if !ideal.is_strongly_stable() {
        return Err(Error::pre("ℓ-sequences need a strongly stable ideal"));
    }
    let set = MonomialSet::from_monomials(ideal.ring(), d, ideal.generators().iter().cloned())?;
    Ok(l_sequence_of_set(&set))
}

/// `ℓ` is an M-vector with `ℓ_2 <= d`.
pub fn is_admissible_l(l: &LSequence) -> bool {
    is_m_vector(&l.entries) && l.entries.get(1).is_none_or(|l2| *l2 <= BigUint::from(l.degree))
}

/// The d-linear lexsegment set with ℓ-sequence `ℓ`, without the admissibility test:
/// `⋃_k x_k B_k` with `B_k` the first `ℓ_k` monomials of degree `d-1` in `x_1..x_k`.
pub(crate) fn dlinear_set(l: &LSequence, ring: GroundRing, limits: &Limits) -> Result<MonomialSet> {
    let n = ring.num_vars();
    if l.len() != n {
        return Err(Error::pre(format!(
            "ℓ has {} entries but the ring has {n} variables",
            l.len()
        )));
    }
    let d = l.degree;
    if d == 0 {
        return Err(Error::pre("d-linear sets need d >= 1"));
    }
    check_cap(&l.total(), limits)?;
    let mut out = MonomialSet::empty(ring, d);
    for k in 1..=n {
        let want = l.get(k);
        let avail = binomial((k + d - 2) as u64, (d - 1) as u64);
        if *want > avail {
            return Err(Error::Inadmissible(format!(
                "ℓ_{k} = {want} exceeds C({}, {}) = {avail}",
                k + d - 2,
                d - 1
            )));
        }
        for u in lex_prefix(n, k, d - 1, to_usize(want)?)? {
            out.insert(u.mul_var(k))?;
        }
    }
    Ok(out)
}

/// The unique d-linear lexsegment ideal with ℓ-sequence `ℓ`.
pub fn dlinear_lex_from_l(l: &LSequence, ring: GroundRing, limits: &Limits) -> Result<MonomialIdeal> {
    if !is_admissible_l(l) {
        return Err(Error::Inadmissible(format!(
            "{l} is not an M-vector with ℓ_2 <= {}",
            l.degree
        )));
    }
    let set = dlinear_set(l, ring, limits)?;
    MonomialIdeal::new(ring, set.iter().cloned())
}

/// Strongly stable with every `D_k(V)` a lexsegment in `K[x_1..x_k]`.
pub fn is_dlinear_lex(v: &MonomialSet) -> bool {
    if v.is_empty() {
        return true;
    }
    if v.degree() == 0 || !v.is_strongly_stable() {
        return v.degree() == 0;
    }
    v.dk_decompose()
        .expect("degree >= 1")
        .iter()
        .enumerate()
        .all(|(k, dk)| dk.is_lexsegment_in(k + 1))
}

/// `H(I, t) = Σ_k ℓ_k C(n-k+t-d, n-k)` for `t >= d`.
pub fn hilbert_from_l(l: &LSequence, n: usize, t: usize) -> Result<BigUint> {
    if t < l.degree {
        return Err(Error::pre(format!(
            "the ℓ-formula holds for t >= d = {}, got t = {t}",
            l.degree
        )));
    }
    let s = (t - l.degree) as u64;
    Ok((1..=n.min(l.len()))
        .map(|k| l.get(k) * binomial((n - k) as u64 + s, (n - k) as u64))
        .sum())
}

/// `β_{i,i+d} = Σ_k ℓ_k C(k-1, i)`, the diagram of any strongly stable ideal
/// generated in degree `d` with ℓ-sequence `ℓ`.
pub fn betti_from_l(l: &LSequence, ring: GroundRing) -> BettiDiagram {
    let mut out = BettiDiagram::new(ring);
    for k in 1..=l.len() {
        for i in 0..k {
            out.add(i, i + l.degree, l.get(k) * binomial((k - 1) as u64, i as u64));
        }
    }
    out
}

/// Solves `H(d+s) = Σ_k ℓ_k C(n-k+s, n-k)`, `s = 0..n-1`, as a signed vector.
fn solve_tail(tail: &[BigUint], n: usize) -> Vec<BigInt> {
    // (1-z)^n Σ_s H(d+s) z^s = Σ_k ℓ_k (1-z)^{k-1}; expand the left side mod z^n,
    // then read off coefficients in w = 1 - z
    let h: Vec<BigInt> = tail.iter().map(|v| BigInt::from(v.clone())).collect();
    let c: Vec<BigInt> = (0..n)
        .map(|m| {
            (0..=m)
                .map(|s| {
                    let b = BigInt::from(binomial(n as u64, (m - s) as u64)) * &h[s];
                    if (m - s) % 2 == 0 {
                        b
                    } else {
                        -b
                    }
                })
                .sum()
        })
        .collect();
    (0..n)
        .map(|r| {
            let v: BigInt = (r..n)
                .map(|m| &c[m] * BigInt::from(binomial(m as u64, r as u64)))
                .sum();
            if r % 2 == 0 {
                v
            } else {
                -v
            }
        })
        .collect()
}

/// The ℓ-sequence reproducing `H(d), ..., H(d+n-1)`; values beyond that are
/// checked against the formula.
pub fn l_from_hilbert_tail(h: &HilbertSpec, d: usize) -> Result<LSequence> {
    let h = h.to_role(Role::Ideal)?;
    let n = h.ring.num_vars();
    if h.values.len() < d + n {
        return Err(Error::pre(format!(
            "need H(t) for t = {d}..={}, only {} values supplied",
            d + n - 1,
            h.values.len()
        )));
    }
    let raw = solve_tail(&h.values[d..d + n], n);
    if let Some((k, v)) = raw.iter().enumerate().find(|(_, v)| v.is_negative()) {
        return Err(Error::Inadmissible(format!(
            "the tail forces ℓ_{} = {v} < 0",
            k + 1
        )));
    }
    let l = LSequence::new(d, raw.into_iter().map(|v| v.to_biguint().unwrap()).collect());
    for t in d + n..h.values.len() {
        if hilbert_from_l(&l, n, t)? != h.values[t] {
            return Err(Error::Inadmissible(format!(
                "H({t}) = {} does not follow the polynomial tail of {l}",
                h.values[t]
            )));
        }
    }
    Ok(l)
}

/// Outcome of the Hilbert-function characterization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub admissible: bool,
    pub witness: Option<LSequence>,
    /// `l-vector`, `tail`, `top-degree`, `growth` or `exact-jump`.
    pub failed: Option<&'static str>,
    pub detail: Option<String>,
}

impl Verdict {
    fn fail(tag: &'static str, detail: String, witness: Option<LSequence>) -> Self {
        Verdict {
            admissible: false,
            witness,
            failed: Some(tag),
            detail: Some(detail),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.admissible {
            write!(f, "admissible")?;
        } else {
            write!(f, "inadmissible at {}", self.failed.unwrap_or("?"))?;
            if let Some(d) = &self.detail {
                write!(f, ": {d}")?;
            }
        }
        if let Some(l) = &self.witness {
            write!(f, "\nl = {l}")?;
        }
        Ok(())
    }
}

/// Tests whether `H` is the Hilbert function of a nonzero nonunit ideal with
/// regularity at most `d`; the tail `H(d..d+n-1)` must be supplied.
pub fn characterize(h: &HilbertSpec, d: usize) -> Result<Verdict> {
    characterize_inner(h, d, false)
}

/// As [`characterize`], for regularity exactly `d`.
pub fn characterize_exact(h: &HilbertSpec, d: usize) -> Result<Verdict> {
    characterize_inner(h, d, true)
}

fn characterize_inner(h: &HilbertSpec, d: usize, exact: bool) -> Result<Verdict> {
    if d == 0 {
        return Err(Error::pre("d must be positive"));
    }
    let h = h.to_role(Role::Ideal)?;
    let n = h.ring.num_vars();
    if h.values.len() < d + n {
        return Err(Error::pre(format!(
            "need H(t) for t = 0..={}, only {} values supplied",
            d + n - 1,
            h.values.len()
        )));
    }
    let l = match l_from_hilbert_tail(&h, d) {
        Ok(l) => l,
        Err(Error::Inadmissible(msg)) => return Ok(Verdict::fail("tail", msg, None)),
        Err(e) => return Err(e),
    };
    if !is_admissible_l(&l) {
        return Ok(Verdict::fail(
            "l-vector",
            format!("{l} is not an M-vector with ℓ_2 <= {d}"),
            Some(l),
        ));
    }
    let v = &h.values;
    if v[d - 1] > *l.get(n) {
        return Ok(Verdict::fail(
            "top-degree",
            format!("H({}) = {} > ℓ_n = {}", d - 1, v[d - 1], l.get(n)),
            Some(l),
        ));
    }
    if !v[0].is_zero() {
        return Ok(Verdict::fail("growth", format!("H(0) = {} ≠ 0", v[0]), Some(l)));
    }
    for t in 0..d.saturating_sub(1) {
        let grow = up(&v[t], n - 1);
        if grow > v[t + 1] {
            return Ok(Verdict::fail(
                "growth",
                format!("H({t})↑ = {grow} > H({}) = {}", t + 1, v[t + 1]),
                Some(l),
            ));
        }
    }
    if exact {
        let grow = up(&v[d - 1], n - 1);
        if grow >= v[d] {
            return Ok(Verdict::fail(
                "exact-jump",
                format!("H({})↑ = {grow} is not below H({d}) = {}", d - 1, v[d]),
                Some(l),
            ));
        }
    }
    Ok(Verdict {
        admissible: true,
        witness: Some(l),
        failed: None,
        detail: None,
    })
}

/// The d-lexsegment ideal with Hilbert function `H`.
pub fn dlex_from_hilbert(h: &HilbertSpec, d: usize, limits: &Limits) -> Result<MonomialIdeal> {
    let verdict = characterize(h, d)?;
    let Some(tag) = verdict.failed else {
        let l = verdict.witness.expect("admissible verdict carries ℓ");
        return assemble(h, &l, limits);
    };
    Err(Error::Characterization {
        tag,
        detail: verdict.detail.unwrap_or_default(),
    })
}

fn assemble(h: &HilbertSpec, l: &LSequence, limits: &Limits) -> Result<MonomialIdeal> {
    let h = h.to_role(Role::Ideal)?;
    let ring = h.ring;
    let n = ring.num_vars();
    let d = l.degree;
    let mut gens: Vec<Monomial> = Vec::new();
    let mut prev = BigUint::zero();
    for t in 0..d {
        let cur = &h.values[t];
        let from = up(&prev, n - 1);
        if *cur > from {
            check_cap(cur, limits)?;
            let (from, to) = (to_usize(&from)?, to_usize(cur)?);
            gens.extend(LexIter::new(n, n, t).skip(from).take(to - from));
        }
        prev = cur.clone();
    }
    gens.extend(dlinear_set(l, ring, limits)?.iter().cloned());
    MonomialIdeal::new(ring, gens)
}

/// `Lex^(d)(I)`: the d-lexsegment ideal with the Hilbert function of `I`.
pub fn lexd(ideal: &MonomialIdeal, d: usize, limits: &Limits) -> Result<MonomialIdeal> {
    ideal.nonunit()?;
    if ideal.is_zero() {
        return Ok(ideal.clone());
    }
    let reg = regularity(ideal, limits)?;
    if reg > d {
        return Err(Error::RegularityTooLarge { reg, bound: d });
    }
    let h = ideal.hilbert_spec(d + ideal.num_vars() - 1, Role::Ideal, limits)?;
    dlex_from_hilbert(&h, d, limits)
}

/// `{reg(I), ..., reg(Lex(I))}` with a witness `Lex^(r)(I)` of regularity exactly `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityRange {
    pub min: usize,
    pub max: usize,
    pub witnesses: Vec<(usize, MonomialIdeal)>,
}

impl RegularityRange {
    pub fn values(&self) -> Vec<usize> {
        (self.min..=self.max).collect()
    }
}

/// Regularities realized by the Hilbert function of `I`, starting from `reg(I)`.
pub fn regularity_range(ideal: &MonomialIdeal, limits: &Limits) -> Result<RegularityRange> {
    ideal.nonunit()?;
    if ideal.is_zero() {
        return Err(Error::pre("the zero ideal has no regularity"));
    }
    let min = regularity(ideal, limits)?;
    let max = ek_betti(&ideal.lexify(limits)?)?.regularity()?;
    let mut witnesses = Vec::new();
    for r in min..=max {
        let w = lexd(ideal, r, limits)?;
        let got = ek_betti(&w)?.regularity()?;
        if got != r {
            return Err(Error::pre(format!(
                "Lex^({r}) has regularity {got}, expected {r}"
            )));
        }
        witnesses.push((r, w));
    }
    Ok(RegularityRange {
        min,
        max,
        witnesses,
    })
}


/// `ℓ` as machine integers, for callers that materialize sets.
pub fn l_to_usize(l: &LSequence) -> Result<Vec<usize>> {
    l.entries
        .iter()
        .map(|e| {
            e.to_usize()
                .ok_or_else(|| Error::pre(format!("ℓ entry {e} is too large")))
        })
        .collect()
}
