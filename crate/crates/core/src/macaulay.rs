//! Binomial arithmetic, Macaulay representations and the `↑` / `↓` operators.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::monomial::GroundRing;

/// `C(n, k)` as an exact integer.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(n, k)` with the convention that it vanishes whenever `k < 0`, `n < 0`
/// or `k > n`.
pub fn binomial_signed(n: i64, k: i64) -> BigUint {
    if k < 0 || n < 0 || k > n {
        return BigUint::zero();
    }
    binomial(n as u64, k as u64)
}

/// The `d`-th Macaulay representation `a = C(a_d, d) + C(a_{d-1}, d-1) + ... + C(a_j, j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacaulayRep {
    degree: usize,
    terms: Vec<(u64, usize)>,
}

impl MacaulayRep {
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Pairs `(a_i, i)` with `i` descending from `d`.
    pub fn terms(&self) -> &[(u64, usize)] {
        &self.terms
    }

    pub fn value(&self) -> BigUint {
        self.shifted(0, 0)
    }

    fn shifted(&self, top: u64, bottom: u64) -> BigUint {
        self.terms
            .iter()
            .map(|&(a, i)| binomial(a + top, i as u64 + bottom))
            .sum()
    }
}

/// Largest `x >= k` with `C(x, k) <= a`; `a >= 1`, `k >= 1`.
fn largest_top(a: &BigUint, k: u64) -> Result<u64> {
    let mut hi = k;
    let mut step = 1u64;
    while binomial(hi, k) <= *a {
        hi = hi
            .checked_add(step)
            .ok_or_else(|| Error::pre("Macaulay representation out of range"))?;
        step = step.saturating_mul(2);
    }
    // C(lo, k) <= a < C(hi, k)
    let mut lo = k;
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if binomial(mid, k) <= *a {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

/// Greedy construction of the `d`-th Macaulay representation of `a >= 1`.
pub fn macaulay_rep(a: &BigUint, d: usize) -> Result<MacaulayRep> {
    if d == 0 {
        return Err(Error::pre("Macaulay representations need d >= 1"));
    }
    if a.is_zero() {
        return Err(Error::pre("0 has no Macaulay representation"));
    }
    let mut rest = a.clone();
    let mut terms = Vec::new();
    let mut i = d;
    while !rest.is_zero() && i >= 1 {
        let top = largest_top(&rest, i as u64)?;
        rest -= binomial(top, i as u64);
        terms.push((top, i));
        i -= 1;
    }
    debug_assert!(rest.is_zero());
    Ok(MacaulayRep { degree: d, terms })
}

/// `a↑d`: every top raised by one, bottoms kept. `0↑d = 0`.
pub fn up(a: &BigUint, d: usize) -> BigUint {
    if a.is_zero() {
        return BigUint::zero();
    }
    if d == 0 {
        return a.clone();
    }
    macaulay_rep(a, d)
        .expect("a >= 1, d >= 1")
        .shifted(1, 0)
}

/// `a↓d`: tops and bottoms raised by one. `0↓d = 0`.
pub fn down(a: &BigUint, d: usize) -> BigUint {
    if a.is_zero() || d == 0 {
        return BigUint::zero();
    }
    macaulay_rep(a, d)
        .expect("a >= 1, d >= 1")
        .shifted(1, 1)
}

/// A candidate M-vector `(h_0, ..., h_p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MVector(pub Vec<BigUint>);

impl MVector {
    pub fn is_valid(&self) -> bool {
        is_m_vector(&self.0)
    }
}

/// `h_0 = 1` and `h_t↓t >= h_{t+1}` for every `t >= 1`.
pub fn is_m_vector(h: &[BigUint]) -> bool {
    if h.first() != Some(&BigUint::one()) {
        return false;
    }
    // h_1 is unconstrained beyond nonnegativity
    (1..h.len().saturating_sub(1)).all(|t| down(&h[t], t) >= h[t + 1])
}

/// Which side of `0 -> I -> S -> S/I -> 0` the values describe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    Ideal,
    Quotient,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Role::Ideal => "ideal",
            Role::Quotient => "quotient",
        })
    }
}

impl FromStr for Role {
    type Err = Error;

    fn from_str(s: &str) -> Result<Role> {
        match s {
            "ideal" => Ok(Role::Ideal),
            "quotient" => Ok(Role::Quotient),
            other => Err(Error::parse(format!("unknown role `{other}`"))),
        }
    }
}

/// Finitely many values `H(0), ..., H(T)` of a Hilbert function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSpec {
    pub ring: GroundRing,
    pub values: Vec<BigUint>,
    pub role: Role,
}

impl HilbertSpec {
    pub fn new(ring: GroundRing, values: Vec<BigUint>, role: Role) -> Self {
        HilbertSpec { ring, values, role }
    }

    /// Largest degree with a supplied value, or `None` if empty.
    pub fn top(&self) -> Option<usize> {
        self.values.len().checked_sub(1)
    }

    pub fn get(&self, t: usize) -> Option<&BigUint> {
        self.values.get(t)
    }

    /// The same data seen from the other side of `S`.
    pub fn flip(&self) -> Result<HilbertSpec> {
        let values = self
            .values
            .iter()
            .enumerate()
            .map(|(t, v)| {
                let s = self.ring.dim(t);
                if *v > s {
                    Err(Error::pre(format!("H({t}) = {v} exceeds dim S_{t} = {s}")))
                } else {
                    Ok(s - v)
                }
            })
            .collect::<Result<_>>()?;
        let role = match self.role {
            Role::Ideal => Role::Quotient,
            Role::Quotient => Role::Ideal,
        };
        Ok(HilbertSpec {
            ring: self.ring,
            values,
            role,
        })
    }

    pub fn to_role(&self, role: Role) -> Result<HilbertSpec> {
        if role == self.role {
            Ok(self.clone())
        } else {
            self.flip()
        }
    }

    /// Parses the header `n=<int> role=<ideal|quotient>` followed by one value per line.
    pub fn parse(text: &str) -> Result<HilbertSpec> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::parse("missing header line"))?;
        let mut n = None;
        let mut role = None;
        for field in header.split_whitespace() {
            match field.split_once('=') {
                Some(("n", v)) => {
                    n = Some(
                        v.parse::<usize>()
                            .map_err(|_| Error::parse(format!("bad n `{v}`")))?,
                    )
                }
                Some(("role", v)) => role = Some(v.parse::<Role>()?),
                _ => return Err(Error::parse(format!("bad header field `{field}`"))),
            }
        }
        let n = n.ok_or_else(|| Error::parse("header lacks n="))?;
        let role = role.ok_or_else(|| Error::parse("header lacks role="))?;
        let ring = GroundRing::new(n).map_err(|_| Error::parse("n must be positive"))?;
        let values = lines
            .map(|l| {
                l.parse::<BigUint>()
                    .map_err(|_| Error::parse(format!("bad value `{l}`")))
            })
            .collect::<Result<_>>()?;
        Ok(HilbertSpec { ring, values, role })
    }
}

impl fmt::Display for HilbertSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={} role={}", self.ring.num_vars(), self.role)?;
        for v in &self.values {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

/// `H(0) = 1`, `H(1) <= n` and `H(t)↓t >= H(t+1)` over the supplied range.
pub fn admissible_quotient(h: &HilbertSpec) -> bool {
    if h.role != Role::Quotient {
        return false;
    }
    let v = &h.values;
    if v.first() != Some(&BigUint::one()) {
        return false;
    }
    if v.len() > 1 && v[1] > BigUint::from(h.ring.num_vars()) {
        return false;
    }
    is_m_vector(v)
}

/// `H(0) = 0` and `H(t)↑^{n-1} <= H(t+1) <= H(S, t+1)` over the supplied range.
pub fn admissible_ideal(h: &HilbertSpec) -> bool {
    if h.role != Role::Ideal {
        return false;
    }
    let v = &h.values;
    if v.first().is_some_and(|h0| !h0.is_zero()) {
        return false;
    }
    let n = h.ring.num_vars();
    (0..v.len().saturating_sub(1))
        .all(|t| up(&v[t], n - 1) <= v[t + 1] && v[t + 1] <= h.ring.dim(t + 1))
}

pub(crate) fn to_usize(v: &BigUint) -> Result<usize> {
    v.to_usize()
        .ok_or_else(|| Error::pre(format!("{v} does not fit a machine integer")))
}
