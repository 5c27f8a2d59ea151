//! Extremal and semi-convex areas, and the maximal-Betti ideal `Lex(I, A)`.
//!
//! An area lives in `{0..n-1} × {1, 2, ...}`; the pair `(i, j)` stands for the
//! Betti position `β_{i,i+j}` of an ideal.

use std::collections::BTreeSet;
use std::fmt;

use crate::betti::{ek_betti, BettiDiagram};
use crate::dreg::{dlinear_set, LSequence};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{lex_prefix, Monomial, MonomialSet};
use crate::Limits;

use num_bigint::BigUint;

/// Largest `j` an area may reach.
pub const MAX_ROW: usize = 64;

/// A staircase-closed finite area, stored by its extremal points.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtremalArea {
    bound: usize,
    corners: Vec<(usize, usize)>,
}

impl ExtremalArea {
    /// The smallest extremal area containing `points`, inside `{0..n-1} × Z_{>0}`.
    pub fn new(n: usize, points: &[(usize, usize)]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::pre("an extremal area needs at least one point"));
        }
        for &(i, j) in points {
            if i >= n {
                return Err(Error::pre(format!("point ({i},{j}) has i >= n = {n}")));
            }
            if j == 0 || j > MAX_ROW {
                return Err(Error::pre(format!("point ({i},{j}) needs 1 <= j <= {MAX_ROW}")));
            }
        }
        let mut corners: Vec<(usize, usize)> = points
            .iter()
            .copied()
            .filter(|&(i, j)| !points.iter().any(|&(a, b)| (a, b) != (i, j) && a >= i && b >= j))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        corners.sort();
        Ok(ExtremalArea { bound: n, corners })
    }

    /// `⟨(i, j)⟩`.
    pub fn point(n: usize, i: usize, j: usize) -> Result<Self> {
        ExtremalArea::new(n, &[(i, j)])
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// The standard representation: `i` ascending, `j` descending.
    pub fn standard_representation(&self) -> &[(usize, usize)] {
        &self.corners
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        j > 0 && self.corners.iter().any(|&(a, b)| i <= a && j <= b)
    }

    /// Every cell, ordered by `(i, j)`.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out: BTreeSet<(usize, usize)> = BTreeSet::new();
        for &(a, b) in &self.corners {
            for i in 0..=a {
                for j in 1..=b {
                    out.insert((i, j));
                }
            }
        }
        out.into_iter().collect()
    }

    /// `j_1`, the tallest column.
    pub fn max_row(&self) -> usize {
        self.corners[0].1
    }

    /// `p_j = max { i : (i, j) ∈ A }`, `None` above `j_1`.
    pub fn p(&self, j: usize) -> Option<usize> {
        self.corners
            .iter()
            .rev()
            .find(|&&(_, b)| j <= b)
            .map(|&(a, _)| a)
    }

    fn chain_at(&self, r: usize) -> bool {
        let c = &self.corners;
        (0..r).all(|k| c[k].1 == c[k + 1].1 + 1) && (r + 1..c.len()).all(|k| c[k].0 == c[k - 1].0 + 1)
    }

    pub fn is_semi_convex(&self) -> bool {
        (0..self.corners.len()).any(|r| self.chain_at(r))
    }

    /// Corners at which the semi-convexity chains split; empty when not semi-convex.
    pub fn top_points(&self) -> Vec<(usize, usize)> {
        (0..self.corners.len())
            .filter(|&r| self.chain_at(r))
            .map(|r| self.corners[r])
            .collect()
    }

    /// Cells with `i > 0` and `(i - 1, j + 1) ∉ A`.
    pub fn reducible_points(&self) -> Vec<(usize, usize)> {
        self.cells()
            .into_iter()
            .filter(|&(i, j)| i > 0 && !self.contains(i - 1, j + 1))
            .collect()
    }

    /// `Ǎ`: the cells that are not reducible.
    pub fn a_check(&self) -> Vec<(usize, usize)> {
        self.cells()
            .into_iter()
            .filter(|&(i, j)| i == 0 || self.contains(i - 1, j + 1))
            .collect()
    }

    /// The smallest semi-convex area containing `A`.
    pub fn conv_hull(&self) -> ExtremalArea {
        let c = &self.corners;
        let top = c.iter().map(|&(i, j)| i + j).max().expect("nonempty");
        let r = c.iter().position(|&(i, j)| i + j == top).expect("argmax exists");
        let (ir, jr) = c[r];
        let mut pts = vec![(ir, jr)];
        for &(i, j) in &c[..r] {
            pts.extend((0..j - jr).map(|p| (i + p, j - p)));
        }
        for &(i, j) in &c[r + 1..] {
            pts.extend((0..i - ir).map(|p| (i - p, j + p)));
        }
        ExtremalArea::new(self.bound, &pts).expect("hull stays inside the bounds")
    }

    /// `A ∩ { (i, j) : i + j <= n }`.
    pub fn intersect_squarefree(&self) -> ExtremalArea {
        let n = self.bound;
        let pts: Vec<(usize, usize)> = self
            .cells()
            .into_iter()
            .filter(|&(i, j)| i + j <= n)
            .collect();
        ExtremalArea::new(n, &pts).expect("(0,1) always survives")
    }

    /// Parses `(i,j);(i,j);...`. Without `n`, the bound is `max i + 1`.
    pub fn parse(text: &str, n: Option<usize>) -> Result<ExtremalArea> {
        let mut pts = Vec::new();
        for part in text.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            let inner = part
                .strip_prefix('(')
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| Error::parse(format!("expected `(i,j)`, got `{part}`")))?;
            let (a, b) = inner
                .split_once(',')
                .ok_or_else(|| Error::parse(format!("expected `(i,j)`, got `{part}`")))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::parse(format!("bad coordinate `{s}`")))
            };
            pts.push((parse(a)?, parse(b)?));
        }
        if pts.is_empty() {
            return Err(Error::parse("empty area"));
        }
        let n = n.unwrap_or_else(|| pts.iter().map(|p| p.0).max().unwrap_or(0) + 1);
        ExtremalArea::new(n, &pts).map_err(|e| Error::parse(e.to_string()))
    }
}

impl fmt::Display for ExtremalArea {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .corners
            .iter()
            .map(|(i, j)| format!("({i},{j})"))
            .collect();
        write!(f, "{}", parts.join(";"))
    }
}

/// `β_{i,i+j} = 0` for every `(i, j) ∉ A`.
pub fn admits(diagram: &BettiDiagram, area: &ExtremalArea) -> bool {
    diagram
        .entries()
        .all(|(&(i, j), v)| *v == BigUint::ZERO || (j >= i && area.contains(i, j - i)))
}

/// The d-linear lexsegment `W` with `ℓ_k(W) = ℓ_k(V)` for `k >= r` and
/// `M_{<=r-1}(W)` the lexsegment of size `|M_{<=r-1}(V)|` in `x_1..x_{r-1}`.
pub fn relex_above(v: &MonomialSet, r: usize, limits: &Limits) -> Result<MonomialSet> {
    let ring = v.ring();
    let n = ring.num_vars();
    let d = v.degree();
    if r < 2 || r > n + 1 {
        return Err(Error::pre(format!("relex_above needs 1 < r <= {}", n + 1)));
    }
    if !v.is_strongly_stable() {
        return Err(Error::pre("relex_above needs a strongly stable set"));
    }
    if d == 0 {
        return Err(Error::pre("relex_above needs positive degree"));
    }
    let w1 = MonomialSet::from_monomials(ring, d, lex_prefix(n, r - 1, d, v.count_le(r - 1))?)?;
    let entries = (1..=n)
        .map(|k| BigUint::from(if k < r { w1.count_eq(k) } else { v.count_eq(k) }))
        .collect();
    dlinear_set(&LSequence::new(d, entries), ring, limits)
}

/// `Lex(I, A)` with the smallest-`i` top point.
pub fn lex_i_a(ideal: &MonomialIdeal, area: &ExtremalArea, limits: &Limits) -> Result<MonomialIdeal> {
    let top = *area
        .top_points()
        .first()
        .ok_or_else(|| Error::pre(format!("area {area} is not semi-convex")))?;
    lex_i_a_with_top(ideal, area, top, limits)
}

/// `Lex(I, A)` built around a chosen top point of `A`.
pub fn lex_i_a_with_top(
    ideal: &MonomialIdeal,
    area: &ExtremalArea,
    top: (usize, usize),
    limits: &Limits,
) -> Result<MonomialIdeal> {
    if !area.top_points().contains(&top) {
        return Err(Error::pre(format!("{top:?} is not a top point of {area}")));
    }
    ideal.nonunit()?;
    if !ideal.is_strongly_stable() {
        return Err(Error::pre("Lex(I, A) needs a strongly stable ideal"));
    }
    let n = ideal.num_vars();
    if area.bound() > n {
        return Err(Error::pre(format!(
            "area bound {} exceeds the {n} variables of the ring",
            area.bound()
        )));
    }
    if !admits(&ek_betti(ideal)?, area) {
        return Err(Error::pre(format!("the ideal does not admit {area}")));
    }
    let ring = ideal.ring();
    let jr = top.1;
    let mut gens: Vec<Monomial> = Vec::new();
    for j in 1..=area.max_row() {
        let p = area.p(j).expect("j <= j_1");
        let v = ideal.degree_slice(j, limits)?.filter_max(|k| k <= p + 1);
        if j < jr {
            gens.extend(lex_prefix(n, p + 1, j, v.len())?);
        } else {
            let r = area.p(j + 1).map_or(2, |q| q + 3);
            if r > p + 2 {
                return Err(Error::pre(format!("{area} breaks the chain at j = {j}")));
            }
            gens.extend(relex_above(&v, r, limits)?.iter().cloned());
        }
    }
    MonomialIdeal::new(ring, gens)
}
