//! Graded Betti diagrams and the closed-form formulas for (squarefree)
//! strongly stable ideals.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::macaulay::{binomial, binomial_signed};
use crate::monomial::{GroundRing, SquarefreeLexIter};
use crate::Limits;

/// Sparse table of `β_{i,j}(I)`, indexed on the ideal side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiDiagram {
    ring: GroundRing,
    entries: BTreeMap<(usize, usize), BigUint>,
}

impl BettiDiagram {
    pub fn new(ring: GroundRing) -> Self {
        BettiDiagram {
            ring,
            entries: BTreeMap::new(),
        }
    }

    pub fn ring(&self) -> GroundRing {
        self.ring
    }

    /// Adds `value` to `β_{i,j}`; zero values leave the diagram unchanged.
    pub fn add(&mut self, i: usize, j: usize, value: BigUint) {
        if value.is_zero() {
            return;
        }
        *self.entries.entry((i, j)).or_default() += value;
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigUint) {
        if value.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), value);
        }
    }

    /// `β_{i,j}(I)`.
    pub fn get(&self, i: usize, j: usize) -> BigUint {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// `β_{i,i+k}(I)`.
    pub fn get_row(&self, i: usize, k: usize) -> BigUint {
        self.get(i, i + k)
    }

    /// Nonzero entries `((i, j), β_{i,j})` in `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &BigUint)> + '_ {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    fn nonzero(&self) -> Result<()> {
        if self.is_zero() {
            return Err(Error::pre("the zero ideal has an empty Betti diagram"));
        }
        Ok(())
    }

    /// `max{ j - i : β_{i,j} ≠ 0 }`.
    pub fn regularity(&self) -> Result<usize> {
        self.nonzero()?;
        Ok(self.entries.keys().map(|&(i, j)| j - i).max().unwrap())
    }

    /// Projective dimension of the ideal.
    pub fn projdim(&self) -> Result<usize> {
        self.nonzero()?;
        Ok(self.entries.keys().map(|&(i, _)| i).max().unwrap())
    }

    /// `depth(S/I) = n - projdim(S/I) = n - projdim(I) - 1`.
    pub fn depth_quotient(&self) -> Result<usize> {
        Ok(self.ring.num_vars() - self.projdim()? - 1)
    }

    /// Nonzero `β_{i,j}` such that `β_{p,p+q} = 0` for every other `(p, q)` with
    /// `p >= i` and `q >= j - i`.
    pub fn extremal_points(&self) -> Vec<(usize, usize, BigUint)> {
        self.entries
            .iter()
            .filter(|(&(i, j), _)| {
                let k = j - i;
                !self
                    .entries
                    .keys()
                    .any(|&(p, jj)| (p, jj) != (i, j) && p >= i && jj - p >= k)
            })
            .map(|(&(i, j), v)| (i, j, v.clone()))
            .collect()
    }

    /// `Σ_j β_{i,j}` for `i = 0..=projdim`.
    pub fn totals(&self) -> Vec<BigUint> {
        let Ok(p) = self.projdim() else {
            return Vec::new();
        };
        let mut out = vec![BigUint::zero(); p + 1];
        for (&(i, _), v) in &self.entries {
            out[i] += v;
        }
        out
    }

    /// `β_{i,j}(S/I)`: `β_{0,0} = 1` and `β_{i,j}(S/I) = β_{i-1,j}(I)`.
    pub fn quotient_entries(&self) -> BTreeMap<(usize, usize), BigUint> {
        let mut out = BTreeMap::new();
        out.insert((0, 0), BigUint::from(1u8));
        for (&(i, j), v) in &self.entries {
            out.insert((i + 1, j), v.clone());
        }
        out
    }

    /// Coefficients of `K(t) = Σ_j Σ_i (-1)^i β_{i,j}(S/I) t^j`.
    pub fn k_polynomial(&self) -> Vec<BigInt> {
        let top = self.entries.keys().map(|&(_, j)| j).max().unwrap_or(0);
        let mut k = vec![BigInt::zero(); top + 1];
        for ((i, j), v) in self.quotient_entries() {
            let v = BigInt::from(v);
            if i % 2 == 0 {
                k[j] += v;
            } else {
                k[j] -= v;
            }
        }
        k
    }

    /// `dim_K (S/I)_t` read off from `K(t) / (1 - t)^n`.
    pub fn quotient_hilbert(&self, t: usize) -> Result<BigUint> {
        let n = self.ring.num_vars() as i64;
        let mut acc = BigInt::zero();
        for (j, c) in self.k_polynomial().iter().enumerate() {
            if j <= t {
                acc += c * BigInt::from(binomial_signed(n - 1 + (t - j) as i64, n - 1));
            }
        }
        if acc.is_negative() {
            return Err(Error::pre("diagram yields a negative Hilbert value"));
        }
        Ok(acc.to_biguint().unwrap())
    }

    /// `β_{i,j}(self) <= β_{i,j}(other)` for every `(i, j)`.
    pub fn dominated_by(&self, other: &BettiDiagram) -> bool {
        self.entries.iter().all(|(&(i, j), v)| *v <= other.get(i, j))
    }

    /// Rows `k: β_{0,k} β_{1,1+k} ...` with `-` for zero, then a `total:` row.
    pub fn to_table(&self) -> String {
        if self.is_zero() {
            return "total:\n".to_string();
        }
        let p = self.projdim().unwrap();
        let kmin = self.entries.keys().map(|&(i, j)| j - i).min().unwrap();
        let kmax = self.regularity().unwrap();
        let mut out = String::new();
        for k in kmin..=kmax {
            let cells: Vec<String> = (0..=p)
                .map(|i| {
                    let v = self.get(i, i + k);
                    if v.is_zero() {
                        "-".to_string()
                    } else {
                        v.to_string()
                    }
                })
                .collect();
            out.push_str(&format!("{k}: {}\n", cells.join(" ")));
        }
        let totals: Vec<String> = self.totals().iter().map(|v| v.to_string()).collect();
        out.push_str(&format!("total: {}\n", totals.join(" ")));
        out
    }

    /// One `(i, j, value)` line per entry, sorted by `(j - i, i)`.
    pub fn to_triples(&self) -> String {
        let mut items: Vec<(&(usize, usize), &BigUint)> = self.entries.iter().collect();
        items.sort_by_key(|(&(i, j), _)| (j - i, i));
        items
            .into_iter()
            .map(|((i, j), v)| format!("({i}, {j}, {v})\n"))
            .collect()
    }

    /// Row `k` as `(β_{0,k}, β_{1,1+k}, ...)` trimmed after the last nonzero entry.
    pub fn row(&self, k: usize) -> Vec<BigUint> {
        let mut row: Vec<BigUint> = (0..self.ring.num_vars())
            .map(|i| self.get(i, i + k))
            .collect();
        while row.last().is_some_and(|v| v.is_zero()) {
            row.pop();
        }
        row
    }
}

impl fmt::Display for BettiDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_table())
    }
}

/// `β_{i,i+k}(I) = Σ_{u ∈ G(I), deg u = k} C(max(u) - 1, i)` for stable `I`.
pub fn ek_betti(ideal: &MonomialIdeal) -> Result<BettiDiagram> {
    if !ideal.is_stable() {
        return Err(Error::pre("the closed form needs a stable ideal"));
    }
    ideal.nonunit()?;
    let mut d = BettiDiagram::new(ideal.ring());
    for u in ideal.generators() {
        let m = u.max_index() as u64;
        let k = u.degree();
        for i in 0..m {
            d.add(i as usize, i as usize + k, binomial(m - 1, i));
        }
    }
    Ok(d)
}

/// `β_{i,i+k}(I) = Σ_{u ∈ G(I), deg u = k} C(max(u) - k, i)` for squarefree strongly stable `I`.
pub fn ahh_betti(ideal: &MonomialIdeal) -> Result<BettiDiagram> {
    if !ideal.is_squarefree_strongly_stable() {
        return Err(Error::pre(
            "the closed form needs a squarefree strongly stable ideal",
        ));
    }
    ideal.nonunit()?;
    let mut d = BettiDiagram::new(ideal.ring());
    for u in ideal.generators() {
        let k = u.degree();
        let spread = (u.max_index() - k) as u64;
        for i in 0..=spread {
            d.add(i as usize, i as usize + k, binomial(spread, i));
        }
    }
    Ok(d)
}

/// `|M_{<=q}(J, k)|` for `q = 0..=n`.
fn m_le_counts(ideal: &MonomialIdeal, k: usize, limits: &Limits) -> Result<Vec<i64>> {
    let n = ideal.num_vars();
    let slice = ideal.degree_slice(k, limits)?;
    Ok((0..=n).map(|q| slice.count_le(q) as i64).collect())
}

/// `|M*_{<=t}(J, k)|` (squarefree members) for `t = 0..=n`.
fn sq_m_le_counts(ideal: &MonomialIdeal, k: usize) -> Vec<i64> {
    let n = ideal.num_vars();
    let mut counts = vec![0i64; n + 1];
    for u in SquarefreeLexIter::new(n, k).filter(|u| ideal.contains(u)) {
        for c in &mut counts[u.max_index()..] {
            *c += 1;
        }
    }
    counts
}

fn to_count(v: BigInt) -> Result<BigUint> {
    v.to_biguint()
        .ok_or_else(|| Error::pre("degreewise formula produced a negative value"))
}

fn big(c: i64) -> BigInt {
    BigInt::from(c)
}

/// The degreewise Betti formula for strongly stable ideals, from `dim J_k` and
/// the counts `|M_{<=q}(J, k)|`, `|M_{<=q}(J, k-1)|`.
pub fn bigatti_degreewise(
    ideal: &MonomialIdeal,
    i: usize,
    k: usize,
    limits: &Limits,
) -> Result<BigUint> {
    if !ideal.is_strongly_stable() {
        return Err(Error::pre("the degreewise formula needs a strongly stable ideal"));
    }
    if ideal.is_zero() || k == 0 {
        return Ok(BigUint::zero());
    }
    let at_k = m_le_counts(ideal, k, limits)?;
    let below = m_le_counts(ideal, k - 1, limits)?;
    bigatti_value(ideal.num_vars(), i, &at_k, &below)
}

fn bigatti_value(n: usize, i: usize, at_k: &[i64], below: &[i64]) -> Result<BigUint> {
    let (n, i) = (n as i64, i as i64);
    let mut acc = big(at_k[n as usize]) * BigInt::from(binomial_signed(n - 1, i));
    for q in i..n {
        acc -= big(at_k[q as usize]) * BigInt::from(binomial_signed(q - 1, i - 1));
    }
    for q in (i + 1)..=n {
        acc -= big(below[q as usize]) * BigInt::from(binomial_signed(q - 1, i));
    }
    to_count(acc)
}

/// Squarefree analogue of [`bigatti_degreewise`] built from squarefree member counts.
pub fn sq_degreewise(ideal: &MonomialIdeal, i: usize, k: usize) -> Result<BigUint> {
    if !ideal.is_squarefree_strongly_stable() {
        return Err(Error::pre(
            "the degreewise formula needs a squarefree strongly stable ideal",
        ));
    }
    if ideal.is_zero() || k == 0 {
        return Ok(BigUint::zero());
    }
    let at_k = sq_m_le_counts(ideal, k);
    let below = sq_m_le_counts(ideal, k - 1);
    sq_degreewise_value(ideal.num_vars(), i, k, &at_k, &below)
}

fn sq_degreewise_value(n: usize, i: usize, k: usize, at_k: &[i64], below: &[i64]) -> Result<BigUint> {
    let (n, i, k) = (n as i64, i as i64, k as i64);
    let mut acc = big(at_k[n as usize]) * BigInt::from(binomial_signed(n - k, i));
    for t in k..n {
        acc -= big(at_k[t as usize]) * BigInt::from(binomial_signed(t - k, i - 1));
    }
    for t in k..=n {
        acc -= big(below[(t - 1) as usize]) * BigInt::from(binomial_signed(t - k, i));
    }
    to_count(acc)
}

/// The whole diagram of a strongly stable ideal from the degreewise formula.
pub fn bigatti_diagram(ideal: &MonomialIdeal, limits: &Limits) -> Result<BettiDiagram> {
    if !ideal.is_strongly_stable() {
        return Err(Error::pre("the degreewise formula needs a strongly stable ideal"));
    }
    ideal.nonunit()?;
    let n = ideal.num_vars();
    let mut d = BettiDiagram::new(ideal.ring());
    let (Some(lo), Some(hi)) = (ideal.min_degree(), ideal.max_degree()) else {
        return Ok(d);
    };
    let mut below = m_le_counts(ideal, lo - 1, limits)?;
    for k in lo..=hi {
        let at_k = m_le_counts(ideal, k, limits)?;
        for i in 0..n {
            d.add(i, i + k, bigatti_value(n, i, &at_k, &below)?);
        }
        below = at_k;
    }
    Ok(d)
}

/// The whole diagram of a squarefree strongly stable ideal from the degreewise formula.
pub fn sq_degreewise_diagram(ideal: &MonomialIdeal) -> Result<BettiDiagram> {
    if !ideal.is_squarefree_strongly_stable() {
        return Err(Error::pre(
            "the degreewise formula needs a squarefree strongly stable ideal",
        ));
    }
    ideal.nonunit()?;
    let n = ideal.num_vars();
    let mut d = BettiDiagram::new(ideal.ring());
    let (Some(lo), Some(hi)) = (ideal.min_degree(), ideal.max_degree()) else {
        return Ok(d);
    };
    for k in lo..=hi {
        let at_k = sq_m_le_counts(ideal, k);
        let below = sq_m_le_counts(ideal, k - 1);
        for i in 0..n {
            d.add(i, i + k, sq_degreewise_value(n, i, k, &at_k, &below)?);
        }
    }
    Ok(d)
}

/// Builds a diagram from rows: `rows[r] = (k, [β_{0,k}, β_{1,1+k}, ...])`.
pub fn diagram_from_rows(ring: GroundRing, rows: &[(usize, &[u64])]) -> BettiDiagram {
    let mut d = BettiDiagram::new(ring);
    for &(k, vals) in rows {
        for (i, &v) in vals.iter().enumerate() {
            d.add(i, i + k, BigUint::from(v));
        }
    }
    d
}

/// Converts a small count to `u64`, for display and tests.
pub fn small(v: &BigUint) -> u64 {
    v.to_u64().expect("small Betti number")
}
