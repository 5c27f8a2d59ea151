//! Monomials over a fixed number of variables, single-degree monomial sets,
//! the degree-lex order and strong stability.
//!
//! Within one degree the canonical iteration order is lex-descending, so the
//! first `m` elements of an enumeration form the lexsegment of size `m`.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::macaulay::binomial;
use crate::Limits;

/// The polynomial ring `K[x_1, ..., x_n]`; only the number of variables matters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroundRing {
    num_vars: usize,
}

impl GroundRing {
    pub fn new(num_vars: usize) -> Result<Self> {
        if num_vars == 0 {
            return Err(Error::pre("a ring needs at least one variable"));
        }
        Ok(GroundRing { num_vars })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// `dim_K S_t = C(n-1+t, n-1)`.
    pub fn dim(&self, t: usize) -> BigUint {
        binomial((self.num_vars - 1 + t) as u64, (self.num_vars - 1) as u64)
    }

    pub(crate) fn check(&self, m: &Monomial) -> Result<()> {
        if m.num_vars() != self.num_vars {
            return Err(Error::RingMismatch {
                expected: self.num_vars,
                found: m.num_vars(),
            });
        }
        Ok(())
    }
}

/// A monomial `x_1^{a_1} ... x_n^{a_n}` stored as a dense exponent vector.
///
/// `Ord` is the degree-lex order induced by `x_1 > x_2 > ... > x_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(num_vars: usize) -> Self {
        Monomial {
            exps: vec![0; num_vars],
        }
    }

    /// The variable `x_i` (1-based).
    pub fn var(num_vars: usize, i: usize) -> Self {
        let mut m = Self::one(num_vars);
        m.exps[i - 1] = 1;
        m
    }

    /// Builds `x_{i_1} x_{i_2} ... x_{i_d}` from a list of 1-based indices
    /// (repetitions allowed).
    pub fn from_indices(num_vars: usize, indices: &[usize]) -> Self {
        let mut m = Self::one(num_vars);
        for &i in indices {
            m.exps[i - 1] += 1;
        }
        m
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent of `x_i`, 1-based.
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i - 1]
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    /// Largest `i` with `x_i | u`; `0` for the unit monomial.
    pub fn max_index(&self) -> usize {
        self.exps
            .iter()
            .rposition(|&e| e > 0)
            .map_or(0, |p| p + 1)
    }

    /// Smallest `i` with `x_i | u`; `0` for the unit monomial.
    pub fn min_index(&self) -> usize {
        self.exps.iter().position(|&e| e > 0).map_or(0, |p| p + 1)
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Sorted 1-based indices with multiplicity: `i_1 <= i_2 <= ... <= i_d`.
    pub fn index_sequence(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.degree());
        for (p, &e) in self.exps.iter().enumerate() {
            out.extend(std::iter::repeat_n(p + 1, e as usize));
        }
        out
    }

    /// 1-based indices of the variables dividing the monomial.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(p, _)| p + 1)
            .collect()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    /// `u * x_i`.
    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.exps[i - 1] += 1;
        m
    }

    /// `u / x_i`, if `x_i` divides `u`.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exps[i - 1] == 0 {
            return None;
        }
        let mut m = self.clone();
        m.exps[i - 1] -= 1;
        Some(m)
    }

    /// `u * x_p / x_q`, if `x_q` divides `u`.
    pub fn exchange(&self, q: usize, p: usize) -> Option<Monomial> {
        let mut m = self.div_var(q)?;
        m.exps[p - 1] += 1;
        Some(m)
    }

    /// The same exponents viewed in a ring with `num_vars` variables.
    /// Fails if a variable beyond the new ring divides the monomial.
    pub fn embed(&self, num_vars: usize) -> Result<Monomial> {
        if self.max_index() > num_vars {
            return Err(Error::pre(format!(
                "{} does not live in {} variables",
                self, num_vars
            )));
        }
        let mut exps = vec![0; num_vars];
        let k = num_vars.min(self.exps.len());
        exps[..k].copy_from_slice(&self.exps[..k]);
        Ok(Monomial { exps })
    }

    /// Parses `x1^2*x3`, `1`, ... over `num_vars` variables. Whitespace is ignored.
    pub fn parse(num_vars: usize, text: &str) -> Result<Monomial> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::parse("empty monomial"));
        }
        let mut m = Monomial::one(num_vars);
        if compact == "1" {
            return Ok(m);
        }
        for factor in compact.split('*') {
            let body = factor
                .strip_prefix('x')
                .ok_or_else(|| Error::parse(format!("bad factor `{factor}` in `{text}`")))?;
            let (idx, exp) = match body.split_once('^') {
                Some((i, e)) => (i, e),
                None => (body, "1"),
            };
            let idx: usize = idx
                .parse()
                .map_err(|_| Error::parse(format!("bad variable index in `{factor}`")))?;
            let exp: u32 = exp
                .parse()
                .map_err(|_| Error::parse(format!("bad exponent in `{factor}`")))?;
            if idx == 0 || idx > num_vars {
                return Err(Error::parse(format!(
                    "variable x{idx} outside x1..x{num_vars}"
                )));
            }
            m.exps[idx - 1] += exp;
        }
        Ok(m)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (p, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", p + 1)?;
            } else {
                write!(f, "x{}^{}", p + 1, e)?;
            }
        }
        Ok(())
    }
}

/// Degree-lex comparison of two monomials of the same ring and degree.
pub fn lex_compare(u: &Monomial, v: &Monomial) -> Result<Ordering> {
    if u.num_vars() != v.num_vars() {
        return Err(Error::RingMismatch {
            expected: u.num_vars(),
            found: v.num_vars(),
        });
    }
    if u.degree() != v.degree() {
        return Err(Error::DegreeMismatch {
            expected: u.degree(),
            found: v.degree(),
        });
    }
    Ok(u.exps.cmp(&v.exps))
}

/// Lex-descending iterator over the monomials of degree `d` supported on
/// `x_1 .. x_k`, embedded in `n` variables.
#[derive(Debug, Clone)]
pub struct LexIter {
    k: usize,
    n: usize,
    cur: Option<Vec<u32>>,
}

impl LexIter {
    pub fn new(n: usize, k: usize, d: usize) -> Self {
        let cur = if k == 0 {
            (d == 0).then(|| vec![0; n])
        } else {
            let mut e = vec![0; n];
            e[0] = d as u32;
            Some(e)
        };
        LexIter { k, n, cur }
    }
}

impl Iterator for LexIter {
    type Item = Monomial;

    fn next(&mut self) -> Option<Monomial> {
        let cur = self.cur.take()?;
        let out = Monomial { exps: cur.clone() };
        // successor: move one unit from the rightmost nonzero slot j < k-1 to j+1,
        // and collect everything to the right of j into slot j+1
        let mut next = cur;
        let k = self.k.min(self.n);
        if k >= 2 {
            if let Some(j) = (0..k - 1).rev().find(|&j| next[j] > 0) {
                let tail: u32 = next[j + 1..k].iter().sum();
                next[j] -= 1;
                for e in &mut next[j + 1..k] {
                    *e = 0;
                }
                next[j + 1] = tail + 1;
                self.cur = Some(next);
            }
        }
        Some(out)
    }
}

/// Lex-descending iterator over squarefree monomials of degree `d` in `n` variables.
#[derive(Debug, Clone)]
pub struct SquarefreeLexIter {
    n: usize,
    cur: Option<Vec<usize>>,
}

impl SquarefreeLexIter {
    pub fn new(n: usize, d: usize) -> Self {
        let cur = (d <= n).then(|| (1..=d).collect());
        SquarefreeLexIter { n, cur }
    }
}

impl Iterator for SquarefreeLexIter {
    type Item = Monomial;

    fn next(&mut self) -> Option<Monomial> {
        let cur = self.cur.take()?;
        let out = Monomial::from_indices(self.n, &cur);
        let d = cur.len();
        let mut next = cur;
        if let Some(p) = (0..d).rev().find(|&p| next[p] < self.n - (d - 1 - p)) {
            next[p] += 1;
            for q in p + 1..d {
                next[q] = next[q - 1] + 1;
            }
            self.cur = Some(next);
        }
        Some(out)
    }
}

/// Number of monomials of degree `d` in `k` variables.
pub fn count_degree(k: usize, d: usize) -> BigUint {
    if k == 0 {
        return BigUint::from((d == 0) as u8);
    }
    binomial((k - 1 + d) as u64, d as u64)
}

pub(crate) fn check_cap(count: &BigUint, limits: &Limits) -> Result<usize> {
    match count.to_usize() {
        Some(c) if c <= limits.enum_cap => Ok(c),
        _ => Err(Error::CapExceeded {
            needed: count.to_string(),
            cap: limits.enum_cap,
        }),
    }
}

/// The first `m` monomials (lex-descending) of degree `d` in `x_1..x_k`,
/// embedded in `n` variables. Fails if fewer than `m` exist.
pub fn lex_prefix(n: usize, k: usize, d: usize, m: usize) -> Result<Vec<Monomial>> {
    let out: Vec<Monomial> = LexIter::new(n, k, d).take(m).collect();
    if out.len() < m {
        return Err(Error::pre(format!(
            "only {} monomials of degree {d} in {k} variables, {m} requested",
            out.len()
        )));
    }
    Ok(out)
}

/// The first `m` squarefree monomials of degree `d` in `x_1..x_k`, embedded in `n` variables.
pub fn squarefree_lex_prefix(n: usize, k: usize, d: usize, m: usize) -> Result<Vec<Monomial>> {
    let out: Vec<Monomial> = SquarefreeLexIter::new(k, d)
        .take(m)
        .map(|u| u.embed(n))
        .collect::<Result<_>>()?;
    if out.len() < m {
        return Err(Error::pre(format!(
            "only {} squarefree monomials of degree {d} in {k} variables, {m} requested",
            out.len()
        )));
    }
    Ok(out)
}

/// A finite set of monomials, all of one degree, over one ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialSet {
    ring: GroundRing,
    degree: usize,
    members: BTreeSet<Monomial>,
}

impl MonomialSet {
    pub fn empty(ring: GroundRing, degree: usize) -> Self {
        MonomialSet {
            ring,
            degree,
            members: BTreeSet::new(),
        }
    }

    pub fn from_monomials<I>(ring: GroundRing, degree: usize, monomials: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let mut set = Self::empty(ring, degree);
        for m in monomials {
            set.insert(m)?;
        }
        Ok(set)
    }

    pub fn insert(&mut self, m: Monomial) -> Result<bool> {
        self.ring.check(&m)?;
        if m.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: m.degree(),
            });
        }
        Ok(self.members.insert(m))
    }

    pub fn ring(&self) -> GroundRing {
        self.ring
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.members.contains(m)
    }

    /// Members in lex-descending order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = &Monomial> + '_ {
        self.members.iter().rev()
    }

    pub fn to_vec(&self) -> Vec<Monomial> {
        self.iter().cloned().collect()
    }

    pub fn is_subset(&self, other: &MonomialSet) -> bool {
        self.members.is_subset(&other.members)
    }

    /// `ux_q ∈ V` and `p < q` imply `ux_p ∈ V`.
    pub fn is_strongly_stable(&self) -> bool {
        self.members.iter().all(|u| {
            u.support().into_iter().all(|q| {
                (1..q).all(|p| self.members.contains(&u.exchange(q, p).expect("x_q | u")))
            })
        })
    }

    /// Squarefree analogue: exchanges `x_q -> x_p` with `p < q`, `x_p ∤ u`.
    pub fn is_squarefree_strongly_stable(&self) -> bool {
        self.members.iter().all(|u| {
            u.is_squarefree()
                && u.support().into_iter().all(|q| {
                    (1..q)
                        .filter(|&p| u.exponent(p) == 0)
                        .all(|p| self.members.contains(&u.exchange(q, p).expect("x_q | u")))
                })
        })
    }

    /// Smallest strongly stable superset in the same degree.
    pub fn strongly_stable_closure(&self) -> MonomialSet {
        let mut members = self.members.clone();
        let mut work: Vec<Monomial> = members.iter().cloned().collect();
        while let Some(u) = work.pop() {
            for q in u.support() {
                for p in 1..q {
                    let v = u.exchange(q, p).expect("x_q | u");
                    if members.insert(v.clone()) {
                        work.push(v);
                    }
                }
            }
        }
        MonomialSet {
            ring: self.ring,
            degree: self.degree,
            members,
        }
    }

    /// `D_k(V) = { u / x_k : u ∈ V, max(u) = k }` for `k = 1..n`.
    pub fn dk_decompose(&self) -> Result<Vec<MonomialSet>> {
        if self.degree == 0 {
            return Err(Error::pre("D_k is undefined in degree 0"));
        }
        let n = self.ring.num_vars();
        let mut parts = vec![MonomialSet::empty(self.ring, self.degree - 1); n];
        for u in &self.members {
            let k = u.max_index();
            parts[k - 1]
                .members
                .insert(u.div_var(k).expect("x_max divides u"));
        }
        Ok(parts)
    }

    /// `M_{<=k}(V) = { u ∈ V : max(u) <= k }`.
    pub fn m_le_k(&self, k: usize) -> Result<MonomialSet> {
        let n = self.ring.num_vars();
        if k == 0 || k > n {
            return Err(Error::IndexOutOfRange { index: k, max: n });
        }
        Ok(self.filter_max(|m| m <= k))
    }

    pub(crate) fn filter_max(&self, keep: impl Fn(usize) -> bool) -> MonomialSet {
        MonomialSet {
            ring: self.ring,
            degree: self.degree,
            members: self
                .members
                .iter()
                .filter(|u| keep(u.max_index()))
                .cloned()
                .collect(),
        }
    }

    /// Number of members with `max(u) <= k` (0 <= k <= n).
    pub fn count_le(&self, k: usize) -> usize {
        self.members.iter().filter(|u| u.max_index() <= k).count()
    }

    /// Number of members with `max(u) = k`.
    pub fn count_eq(&self, k: usize) -> usize {
        self.members.iter().filter(|u| u.max_index() == k).count()
    }

    /// True iff the set is an initial segment of the lex-descending
    /// enumeration of degree-`d` monomials in `x_1..x_k`.
    pub fn is_lexsegment_in(&self, k: usize) -> bool {
        if self.members.iter().any(|u| u.max_index() > k) {
            return false;
        }
        LexIter::new(self.ring.num_vars(), k, self.degree)
            .take(self.len())
            .all(|u| self.members.contains(&u))
    }

    pub fn is_lexsegment(&self) -> bool {
        self.is_lexsegment_in(self.ring.num_vars())
    }

    /// Squarefree members form an initial segment of the squarefree lex order in `x_1..x_k`.
    pub fn is_squarefree_lexsegment_in(&self, k: usize) -> bool {
        if self
            .members
            .iter()
            .any(|u| !u.is_squarefree() || u.max_index() > k)
        {
            return false;
        }
        SquarefreeLexIter::new(k, self.degree)
            .take(self.len())
            .all(|u| {
                u.embed(self.ring.num_vars())
                    .is_ok_and(|u| self.members.contains(&u))
            })
    }

    /// `{ x_i u : u ∈ V, 1 <= i <= n }`, the degree `d+1` span.
    pub fn shadow(&self) -> MonomialSet {
        let n = self.ring.num_vars();
        let mut out: HashSet<Monomial> = HashSet::new();
        for u in &self.members {
            for i in 1..=n {
                out.insert(u.mul_var(i));
            }
        }
        MonomialSet {
            ring: self.ring,
            degree: self.degree + 1,
            members: out.into_iter().collect(),
        }
    }
}

/// All monomials of degree `d`, lex-descending.
pub fn enumerate_degree(ring: GroundRing, d: usize, limits: &Limits) -> Result<MonomialSet> {
    let n = ring.num_vars();
    check_cap(&count_degree(n, d), limits)?;
    Ok(MonomialSet {
        ring,
        degree: d,
        members: LexIter::new(n, n, d).collect(),
    })
}
