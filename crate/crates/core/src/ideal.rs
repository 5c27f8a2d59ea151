//! Monomial ideals given by their minimal generators.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::macaulay::{binomial, to_usize, up, HilbertSpec, Role};
use crate::monomial::{
    check_cap, count_degree, GroundRing, LexIter, Monomial, MonomialSet, SquarefreeLexIter,
};
use crate::Limits;

const INCLUSION_EXCLUSION_MAX: usize = 20;

/// A monomial ideal stored by its minimal generators, sorted by degree and
/// lex-descending within each degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: GroundRing,
    gens: Vec<Monomial>,
}

fn canonical_order(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| b.exponents().cmp(a.exponents()))
}

impl MonomialIdeal {
    /// The ideal generated by `gens`, minimalized.
    pub fn new<I>(ring: GroundRing, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        for g in &all {
            ring.check(g)?;
        }
        all.sort_by(canonical_order);
        all.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
        for g in all {
            if !kept.iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        Ok(MonomialIdeal { ring, gens: kept })
    }

    pub fn zero(ring: GroundRing) -> Self {
        MonomialIdeal {
            ring,
            gens: Vec::new(),
        }
    }

    pub fn ring(&self) -> GroundRing {
        self.ring
    }

    pub fn num_vars(&self) -> usize {
        self.ring.num_vars()
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn generators_of_degree(&self, d: usize) -> impl Iterator<Item = &Monomial> + '_ {
        self.gens.iter().filter(move |g| g.degree() == d)
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.gens.iter().map(|g| g.degree()).max()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.gens.iter().map(|g| g.degree()).min()
    }

    /// All generators share the degree `d` (the zero ideal qualifies).
    pub fn is_generated_in_degree(&self, d: usize) -> bool {
        self.gens.iter().all(|g| g.degree() == d)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    pub fn contains(&self, u: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }

    /// `I + J`.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                expected: self.num_vars(),
                found: other.num_vars(),
            });
        }
        MonomialIdeal::new(self.ring, self.gens.iter().chain(&other.gens).cloned())
    }

    pub(crate) fn nonunit(&self) -> Result<()> {
        if self.is_unit() {
            return Err(Error::pre("the unit ideal is not allowed here"));
        }
        Ok(())
    }

    /// `dim_K I_t`.
    pub fn hilbert(&self, t: usize, limits: &Limits) -> Result<BigUint> {
        let live: Vec<&Monomial> = self.gens.iter().filter(|g| g.degree() <= t).collect();
        if live.len() <= INCLUSION_EXCLUSION_MAX {
            return Ok(self.hilbert_inclusion_exclusion(&live, t));
        }
        check_cap(&count_degree(self.num_vars(), t), limits)?;
        let n = self.num_vars();
        Ok(BigUint::from(
            LexIter::new(n, n, t).filter(|u| self.contains(u)).count(),
        ))
    }

    fn hilbert_inclusion_exclusion(&self, gens: &[&Monomial], t: usize) -> BigUint {
        let n = self.num_vars();
        // depth-first over subsets; a superset of a subset whose lcm exceeds t contributes nothing
        fn walk(
            gens: &[&Monomial],
            start: usize,
            lcm: &Monomial,
            size: usize,
            t: usize,
            n: usize,
            acc: &mut BigInt,
        ) {
            for k in start..gens.len() {
                let l = lcm.lcm(gens[k]);
                let deg = l.degree();
                if deg > t {
                    continue;
                }
                let term = BigInt::from(binomial((n - 1 + t - deg) as u64, (n - 1) as u64));
                if size.is_multiple_of(2) {
                    *acc += term;
                } else {
                    *acc -= term;
                }
                walk(gens, k + 1, &l, size + 1, t, n, acc);
            }
        }
        let mut acc = BigInt::zero();
        walk(gens, 0, &Monomial::one(n), 0, t, n, &mut acc);
        debug_assert!(!acc.is_negative());
        acc.to_biguint().expect("nonnegative count")
    }

    /// Enumeration-only count of `I_t`, independent of inclusion–exclusion.
    pub fn hilbert_by_enumeration(&self, t: usize, limits: &Limits) -> Result<BigUint> {
        check_cap(&count_degree(self.num_vars(), t), limits)?;
        let n = self.num_vars();
        Ok(BigUint::from(
            LexIter::new(n, n, t).filter(|u| self.contains(u)).count(),
        ))
    }

    /// `dim_K (S/I)_t`.
    pub fn quotient_hilbert(&self, t: usize, limits: &Limits) -> Result<BigUint> {
        Ok(self.ring.dim(t) - self.hilbert(t, limits)?)
    }

    /// Values for `t = 0..=top` on the requested side.
    pub fn hilbert_spec(&self, top: usize, role: Role, limits: &Limits) -> Result<HilbertSpec> {
        let values = (0..=top)
            .map(|t| match role {
                Role::Ideal => self.hilbert(t, limits),
                Role::Quotient => self.quotient_hilbert(t, limits),
            })
            .collect::<Result<_>>()?;
        Ok(HilbertSpec::new(self.ring, values, role))
    }

    /// All monomials of degree `t` in `I`, lex-descending.
    pub fn degree_slice(&self, t: usize, limits: &Limits) -> Result<MonomialSet> {
        let n = self.num_vars();
        let estimate: BigUint = self
            .gens
            .iter()
            .filter(|g| g.degree() <= t)
            .map(|g| count_degree(n, t - g.degree()))
            .sum();
        if check_cap(&estimate, limits).is_err() {
            check_cap(&count_degree(n, t), limits)?;
            return MonomialSet::from_monomials(
                self.ring,
                t,
                LexIter::new(n, n, t).filter(|u| self.contains(u)),
            );
        }
        let mut out: BTreeSet<Monomial> = BTreeSet::new();
        for g in self.gens.iter().filter(|g| g.degree() <= t) {
            for m in LexIter::new(n, n, t - g.degree()) {
                out.insert(g.mul(&m));
            }
        }
        MonomialSet::from_monomials(self.ring, t, out)
    }

    /// `I_{>=k}`: the degree-`k` slice plus the generators above `k`.
    pub fn truncate_geq(&self, k: usize, limits: &Limits) -> Result<MonomialIdeal> {
        let slice = self.degree_slice(k, limits)?;
        MonomialIdeal::new(
            self.ring,
            slice
                .iter()
                .cloned()
                .chain(self.gens.iter().filter(|g| g.degree() > k).cloned()),
        )
    }

    /// `I_{<=k}`: the ideal generated by the generators of degree at most `k`.
    pub fn truncate_leq(&self, k: usize) -> MonomialIdeal {
        MonomialIdeal {
            ring: self.ring,
            gens: self
                .gens
                .iter()
                .filter(|g| g.degree() <= k)
                .cloned()
                .collect(),
        }
    }

    /// `u ∈ I`, `k < max(u)` imply `u x_k / x_{max(u)} ∈ I`; checked on generators.
    pub fn is_stable(&self) -> bool {
        self.gens.iter().all(|u| {
            let m = u.max_index();
            (1..m).all(|k| self.contains(&u.exchange(m, k).expect("x_max | u")))
        })
    }

    /// Closure under every exchange `x_q -> x_p`, `p < q`; checked on generators.
    pub fn is_strongly_stable(&self) -> bool {
        self.gens.iter().all(|u| {
            u.support().into_iter().all(|q| {
                (1..q).all(|p| self.contains(&u.exchange(q, p).expect("x_q | u")))
            })
        })
    }

    /// Squarefree strong stability: squarefree generators, closed under exchanges
    /// `x_q -> x_p` with `p < q` and `x_p ∤ u`.
    pub fn is_squarefree_strongly_stable(&self) -> bool {
        self.is_squarefree()
            && self.gens.iter().all(|u| {
                u.support().into_iter().all(|q| {
                    (1..q)
                        .filter(|&p| u.exponent(p) == 0)
                        .all(|p| self.contains(&u.exchange(q, p).expect("x_q | u")))
                })
            })
    }

    /// Every degree slice is an initial lex segment. Slices are checked up to the
    /// largest generator degree, beyond which shadows of lexsegments stay lexsegment.
    pub fn is_lexsegment_ideal(&self, limits: &Limits) -> Result<bool> {
        let (Some(lo), Some(hi)) = (self.min_degree(), self.max_degree()) else {
            return Ok(true);
        };
        let n = self.num_vars();
        for t in lo..=hi {
            if check_cap(&count_degree(n, t), limits).is_err() {
                return Err(Error::Undecided {
                    what: "lexsegment property",
                    cap: limits.enum_cap,
                });
            }
            if !is_prefix_pattern(LexIter::new(n, n, t).map(|u| self.contains(&u))) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Squarefree ideal whose squarefree part in each degree is an initial
    /// segment of the squarefree lex order.
    pub fn is_squarefree_lexsegment(&self, limits: &Limits) -> Result<bool> {
        if !self.is_squarefree() {
            return Ok(false);
        }
        let n = self.num_vars();
        for t in 0..=n {
            if check_cap(&binomial(n as u64, t as u64), limits).is_err() {
                return Err(Error::Undecided {
                    what: "squarefree lexsegment property",
                    cap: limits.enum_cap,
                });
            }
            if !is_prefix_pattern(SquarefreeLexIter::new(n, t).map(|u| self.contains(&u))) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Macaulay's lexsegment ideal `Lex(I)` with the same Hilbert function.
    pub fn lexify(&self, limits: &Limits) -> Result<MonomialIdeal> {
        self.nonunit()?;
        let Some(top) = self.max_degree() else {
            return Ok(self.clone());
        };
        let n = self.num_vars();
        let mut gens = Vec::new();
        let mut prev = BigUint::zero();
        let mut t = 0usize;
        loop {
            if t > limits.max_degree {
                return Err(Error::DegreeCap {
                    cap: limits.max_degree,
                    reached: t - 1,
                });
            }
            let h = self.hilbert(t, limits)?;
            let shadow = up(&prev, n - 1);
            if h > shadow {
                let count = to_usize(&h)?;
                check_cap(&h, limits)?;
                let from = to_usize(&shadow)?;
                gens.extend(LexIter::new(n, n, t).skip(from).take(count - from));
            }
            // minimal growth from a degree at or above every generator persists
            if t >= top && up(&h, n - 1) == self.hilbert(t + 1, limits)? {
                break;
            }
            prev = h;
            t += 1;
        }
        Ok(MonomialIdeal {
            ring: self.ring,
            gens,
        })
    }

    /// The squarefree lexsegment ideal with the same Hilbert function as the
    /// squarefree ideal `I`.
    pub fn sq_lexify(&self, limits: &Limits) -> Result<MonomialIdeal> {
        if !self.is_squarefree() {
            return Err(Error::pre("SqLex needs a squarefree ideal"));
        }
        self.nonunit()?;
        let n = self.num_vars();
        let mut all = Vec::new();
        for t in 0..=n {
            check_cap(&binomial(n as u64, t as u64), limits)?;
            let count = SquarefreeLexIter::new(n, t)
                .filter(|u| self.contains(u))
                .count();
            all.extend(SquarefreeLexIter::new(n, t).take(count));
        }
        MonomialIdeal::new(self.ring, all)
    }

    /// Parses the ideal file format: header `n=<int>`, then one monomial per line.
    pub fn parse(text: &str) -> Result<MonomialIdeal> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::parse("missing `n=` header"))?;
        let n = parse_header(header, "n")?;
        let ring = GroundRing::new(n).map_err(|_| Error::parse("n must be positive"))?;
        let gens = lines
            .map(|l| Monomial::parse(n, l))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(ring, gens)
    }

    /// Parses a comma-separated generator list such as `x1*x2, x3*x4`.
    pub fn parse_inline(n: usize, text: &str) -> Result<MonomialIdeal> {
        let ring = GroundRing::new(n).map_err(|_| Error::parse("n must be positive"))?;
        let gens = text
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| Monomial::parse(n, s))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(ring, gens)
    }
}

fn is_prefix_pattern(mut flags: impl Iterator<Item = bool>) -> bool {
    flags.by_ref().find(|&b| !b);
    flags.all(|b| !b)
}

pub(crate) fn parse_header(line: &str, key: &str) -> Result<usize> {
    let compact: String = line.chars().filter(|c| !c.is_whitespace()).collect();
    compact
        .strip_prefix(key)
        .and_then(|r| r.strip_prefix('='))
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| Error::parse(format!("expected `{key}=<int>`, found `{line}`")))
}

impl fmt::Display for MonomialIdeal {
    /// The ideal file format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.num_vars())?;
        for g in &self.gens {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Generators as `(g1, g2, ...)`.
pub fn format_generators(ideal: &MonomialIdeal) -> String {
    let parts: Vec<String> = ideal.generators().iter().map(|g| g.to_string()).collect();
    format!("({})", parts.join(", "))
}
