//! Seeded generators of random monomial ideals for the integration tests.
#![allow(dead_code)]

use dreg_core::monomial::{LexIter, SquarefreeLexIter};
use dreg_core::{GroundRing, Monomial, MonomialIdeal, MonomialSet};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ring(n: usize) -> GroundRing {
    GroundRing::new(n).unwrap()
}

fn prefix_sums(u: &Monomial) -> Vec<u32> {
    u.exponents()
        .iter()
        .scan(0, |s, &e| {
            *s += e;
            Some(*s)
        })
        .collect()
}

/// `v` is reachable from `u` by moves `x_j u / x_i` with `j < i`.
pub fn borel_above(v: &Monomial, u: &Monomial) -> bool {
    v.degree() == u.degree()
        && prefix_sums(v)
            .iter()
            .zip(prefix_sums(u))
            .all(|(a, b)| *a >= b)
}

/// Squarefree analogue: sorted index sequences compare entrywise.
pub fn squarefree_borel_above(v: &Monomial, u: &Monomial) -> bool {
    v.degree() == u.degree()
        && v.is_squarefree()
        && v
            .index_sequence()
            .iter()
            .zip(u.index_sequence())
            .all(|(a, b)| *a <= b)
}

pub fn random_monomial(rng: &mut ChaCha8Rng, n: usize, d: usize) -> Monomial {
    let mut e = vec![0u32; n];
    for _ in 0..d {
        e[rng.gen_range(0..n)] += 1;
    }
    Monomial::new(e)
}

pub fn random_squarefree(rng: &mut ChaCha8Rng, n: usize, d: usize) -> Monomial {
    let mut idx: Vec<usize> = (1..=n).collect();
    idx.shuffle(rng);
    let mut pick = idx[..d].to_vec();
    pick.sort();
    Monomial::from_indices(n, &pick)
}

/// The strongly stable closure of a few random monomials with degrees in `1..=max_deg`.
pub fn random_strongly_stable(rng: &mut ChaCha8Rng, n: usize, max_deg: usize, seeds: usize) -> MonomialIdeal {
    let mut gens = Vec::new();
    for _ in 0..seeds {
        let d = rng.gen_range(1..=max_deg);
        let u = random_monomial(rng, n, d);
        gens.extend(LexIter::new(n, n, d).filter(|v| borel_above(v, &u)));
    }
    MonomialIdeal::new(ring(n), gens).unwrap()
}

/// Strongly stable and generated in degree `d`.
pub fn random_strongly_stable_in_degree(rng: &mut ChaCha8Rng, n: usize, d: usize, seeds: usize) -> MonomialIdeal {
    let set = random_strongly_stable_set(rng, n, d, seeds);
    MonomialIdeal::new(ring(n), set.iter().cloned()).unwrap()
}

pub fn random_strongly_stable_set(rng: &mut ChaCha8Rng, n: usize, d: usize, seeds: usize) -> MonomialSet {
    let us: Vec<Monomial> = (0..seeds).map(|_| random_monomial(rng, n, d)).collect();
    MonomialSet::from_monomials(
        ring(n),
        d,
        LexIter::new(n, n, d).filter(|v| us.iter().any(|u| borel_above(v, u))),
    )
    .unwrap()
}

/// A uniformly random subset of the degree-`d` monomials (each kept with probability `p`).
pub fn random_set(rng: &mut ChaCha8Rng, n: usize, d: usize, p: f64) -> MonomialSet {
    MonomialSet::from_monomials(ring(n), d, LexIter::new(n, n, d).filter(|_| rng.gen_bool(p))).unwrap()
}

/// Squarefree strongly stable closure of random squarefree monomials with degrees in `1..=max_deg`.
pub fn random_squarefree_strongly_stable(
    rng: &mut ChaCha8Rng,
    n: usize,
    max_deg: usize,
    seeds: usize,
) -> MonomialIdeal {
    let mut gens = Vec::new();
    for _ in 0..seeds {
        let d = rng.gen_range(1..=max_deg.min(n));
        let u = random_squarefree(rng, n, d);
        gens.extend(SquarefreeLexIter::new(n, d).filter(|v| squarefree_borel_above(v, &u)));
    }
    MonomialIdeal::new(ring(n), gens).unwrap()
}

pub fn random_squarefree_strongly_stable_set(
    rng: &mut ChaCha8Rng,
    n: usize,
    d: usize,
    seeds: usize,
) -> MonomialSet {
    let us: Vec<Monomial> = (0..seeds).map(|_| random_squarefree(rng, n, d)).collect();
    MonomialSet::from_monomials(
        ring(n),
        d,
        SquarefreeLexIter::new(n, d).filter(|v| us.iter().any(|u| squarefree_borel_above(v, u))),
    )
    .unwrap()
}

/// Arbitrary monomial ideal from random generators.
pub fn random_ideal(rng: &mut ChaCha8Rng, n: usize, max_deg: usize, gens: usize) -> MonomialIdeal {
    let gs: Vec<Monomial> = (0..gens)
        .map(|_| {
            let d = rng.gen_range(1..=max_deg);
            random_monomial(rng, n, d)
        })
        .collect();
    MonomialIdeal::new(ring(n), gs).unwrap()
}

/// Arbitrary squarefree monomial ideal.
pub fn random_squarefree_ideal(rng: &mut ChaCha8Rng, n: usize, max_deg: usize, gens: usize) -> MonomialIdeal {
    let gs: Vec<Monomial> = (0..gens)
        .map(|_| {
            let d = rng.gen_range(1..=max_deg.min(n));
            random_squarefree(rng, n, d)
        })
        .collect();
    MonomialIdeal::new(ring(n), gs).unwrap()
}
