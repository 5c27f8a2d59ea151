//! Simplicial complexes on `{1, ..., n}`, Stanley–Reisner ideals and Alexander duality.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ideal::{parse_header, MonomialIdeal};
use crate::koszul::auto_betti;
use crate::macaulay::binomial;
use crate::monomial::{check_cap, GroundRing, Monomial};
use crate::Limits;

const MAX_VERTICES: usize = 63;

/// A simplicial complex stored by its facets (bit `k - 1` of a mask is vertex `k`).
/// Vertices need not be faces; the void complex has no faces at all.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertices: usize,
    facets: Vec<u64>,
}

fn maximal(masks: impl IntoIterator<Item = u64>) -> Vec<u64> {
    let all: BTreeSet<u64> = masks.into_iter().collect();
    let mut out: Vec<u64> = all
        .iter()
        .copied()
        .filter(|&f| !all.iter().any(|&g| g != f && g & f == f))
        .collect();
    out.sort_by_key(|&f| (std::cmp::Reverse(f.count_ones()), f));
    out
}

fn mask_of(indices: &[usize], n: usize) -> Result<u64> {
    let mut m = 0u64;
    for &i in indices {
        if i == 0 || i > n {
            return Err(Error::pre(format!("vertex {i} outside 1..={n}")));
        }
        m |= 1 << (i - 1);
    }
    Ok(m)
}

fn indices_of(mask: u64) -> Vec<usize> {
    (0..64).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect()
}

impl SimplicialComplex {
    /// The complex generated by `facets` (non-maximal sets are dropped).
    pub fn new(vertices: usize, facets: &[Vec<usize>]) -> Result<Self> {
        if vertices > MAX_VERTICES {
            return Err(Error::pre(format!(
                "at most {MAX_VERTICES} vertices are supported"
            )));
        }
        let masks = facets
            .iter()
            .map(|f| mask_of(f, vertices))
            .collect::<Result<Vec<_>>>()?;
        Ok(SimplicialComplex {
            vertices,
            facets: maximal(masks),
        })
    }

    pub fn void(vertices: usize) -> Self {
        SimplicialComplex {
            vertices,
            facets: Vec::new(),
        }
    }

    /// The full simplex on `{1, ..., n}`.
    pub fn simplex(vertices: usize) -> Self {
        SimplicialComplex {
            vertices,
            facets: vec![full_mask(vertices)],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Facets as sorted vertex lists.
    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&f| indices_of(f)).collect()
    }

    pub fn contains(&self, face: &[usize]) -> bool {
        let Ok(m) = mask_of(face, self.vertices) else {
            return false;
        };
        self.has_mask(m)
    }

    fn has_mask(&self, m: u64) -> bool {
        self.facets.iter().any(|&f| f & m == m)
    }

    /// `dim Γ = max |F| - 1`; `None` for the void complex.
    pub fn dim(&self) -> Option<isize> {
        self.facets
            .iter()
            .map(|f| f.count_ones() as isize - 1)
            .max()
    }

    fn faces(&self, limits: &Limits) -> Result<BTreeSet<u64>> {
        let bound: BigUint = self
            .facets
            .iter()
            .map(|f| BigUint::from(1u8) << f.count_ones())
            .sum();
        check_cap(&bound, limits)?;
        let mut out = BTreeSet::new();
        for &f in &self.facets {
            // all submasks of f
            let mut s = f;
            loop {
                out.insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & f;
            }
        }
        Ok(out)
    }

    /// `(f_0, f_1, ..., f_{dim})`; `f_{-1} = 1` is implicit. Empty for void and `{∅}`.
    pub fn f_vector(&self, limits: &Limits) -> Result<Vec<BigUint>> {
        let Some(dim) = self.dim() else {
            return Ok(Vec::new());
        };
        let mut f = vec![BigUint::zero(); (dim + 1) as usize];
        for face in self.faces(limits)? {
            let k = face.count_ones() as usize;
            if k > 0 {
                f[k - 1] += 1u8;
            }
        }
        Ok(f)
    }

    /// `h_k = Σ_{i<=k} (-1)^{k-i} C(d-i, k-i) f_{i-1}` for `k = 0..=d`, `d = dim + 1`.
    pub fn h_vector(&self, limits: &Limits) -> Result<Vec<BigInt>> {
        let Some(dim) = self.dim() else {
            return Err(Error::pre("the void complex has no h-vector"));
        };
        let d = (dim + 1) as usize;
        let f = self.f_vector(limits)?;
        let f_shift = |i: usize| -> BigInt {
            if i == 0 {
                BigInt::from(1)
            } else {
                BigInt::from(f[i - 1].clone())
            }
        };
        Ok((0..=d)
            .map(|k| {
                (0..=k)
                    .map(|i| {
                        let t = BigInt::from(binomial((d - i) as u64, (k - i) as u64)) * f_shift(i);
                        if (k - i) % 2 == 0 {
                            t
                        } else {
                            -t
                        }
                    })
                    .sum()
            })
            .collect())
    }

    /// Minimal subsets of `{1..n}` that are not faces.
    pub fn minimal_nonfaces(&self, limits: &Limits) -> Result<Vec<u64>> {
        let n = self.vertices;
        check_cap(&(BigUint::from(1u8) << n), limits)?;
        let mut out = Vec::new();
        for m in 0..(1u64 << n) {
            if self.has_mask(m) {
                continue;
            }
            if indices_of(m).iter().all(|&v| self.has_mask(m & !(1 << (v - 1)))) {
                out.push(m);
            }
        }
        Ok(out)
    }

    /// `Γ* = { F : [n] \ F ∉ Γ }`.
    pub fn alexander_dual(&self, limits: &Limits) -> Result<SimplicialComplex> {
        let full = full_mask(self.vertices);
        let non = self.minimal_nonfaces(limits)?;
        Ok(SimplicialComplex {
            vertices: self.vertices,
            facets: maximal(non.into_iter().map(|m| full & !m)),
        })
    }

    /// `I_Γ`, generated by the minimal nonfaces.
    pub fn stanley_reisner(&self, limits: &Limits) -> Result<MonomialIdeal> {
        let n = self.vertices;
        let ring = GroundRing::new(n.max(1))?;
        let gens = self
            .minimal_nonfaces(limits)?
            .into_iter()
            .map(|m| Monomial::from_indices(ring.num_vars(), &indices_of(m)));
        MonomialIdeal::new(ring, gens)
    }

    /// Parses `vertices=<n>` and one comma-separated facet per line; `{}` is the empty facet.
    pub fn parse(text: &str) -> Result<SimplicialComplex> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::parse("missing `vertices=` header"))?;
        let n = parse_header(header, "vertices")?;
        let mut facets = Vec::new();
        for line in lines {
            if line == "{}" {
                facets.push(Vec::new());
                continue;
            }
            let f = line
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::parse(format!("bad vertex `{s}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            facets.push(f);
        }
        SimplicialComplex::new(n, &facets).map_err(|e| Error::parse(e.to_string()))
    }
}

impl fmt::Display for SimplicialComplex {
    /// The complex file format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices={}", self.vertices)?;
        for facet in self.facets() {
            if facet.is_empty() {
                writeln!(f, "{{}}")?;
            } else {
                let parts: Vec<String> = facet.iter().map(|v| v.to_string()).collect();
                writeln!(f, "{}", parts.join(","))?;
            }
        }
        Ok(())
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// The complex whose faces are the squarefree monomials outside `I`.
pub fn complex_from_ideal(ideal: &MonomialIdeal, limits: &Limits) -> Result<SimplicialComplex> {
    if !ideal.is_squarefree() {
        return Err(Error::pre("Stanley–Reisner correspondence needs a squarefree ideal"));
    }
    let n = ideal.num_vars();
    if n > MAX_VERTICES {
        return Err(Error::pre(format!("at most {MAX_VERTICES} vertices are supported")));
    }
    check_cap(&(BigUint::from(1u8) << n), limits)?;
    let faces = (0..(1u64 << n))
        .filter(|&m| !ideal.contains(&Monomial::from_indices(n, &indices_of(m))));
    Ok(SimplicialComplex {
        vertices: n,
        facets: maximal(faces),
    })
}

/// Cohen–Macaulayness through the dual: `I_{Γ*}` must be generated in one degree
/// `d` and have regularity `d`.
pub fn eagon_reiner_cm(complex: &SimplicialComplex, limits: &Limits) -> Result<bool> {
    if complex.is_void() {
        return Err(Error::pre("the void complex is not covered by the test"));
    }
    let dual_ideal = complex.alexander_dual(limits)?.stanley_reisner(limits)?;
    if dual_ideal.is_unit() {
        // Γ is the full simplex
        return Ok(true);
    }
    let d = dual_ideal.min_degree().expect("Γ* is not the full simplex");
    if !dual_ideal.is_generated_in_degree(d) {
        return Ok(false);
    }
    Ok(auto_betti(&dual_ideal, limits)?.0.regularity()? == d)
}
