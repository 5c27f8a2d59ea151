//! Combinatorics of d-regular graded monomial ideals.
//!
//! The crate works with monomial ideals in `K[x_1, ..., x_n]` without ever
//! materializing the field: every quantity it computes (Hilbert functions,
//! graded Betti numbers, lexsegment constructions) is characteristic free.
//!
//! The main pieces are
//!
//! - [`monomial`]: monomials, single-degree monomial sets, degree-lex order,
//!   strong stability and the `D_k` / `M_{<=k}` decompositions;
//! - [`macaulay`]: Macaulay representations, the `↑`/`↓` operators and
//!   admissibility of Hilbert functions;
//! - [`ideal`]: monomial ideals, Hilbert functions, `Lex(I)` and `SqLex(I)`;
//! - [`betti`]: Betti diagrams and the Eliahou–Kervaire /
//!   Aramova–Herzog–Hibi closed forms;
//! - [`koszul`]: exact Betti numbers of arbitrary monomial ideals from
//!   Koszul homology;
//! - [`dreg`]: ℓ-sequences, d-linear lexsegment ideals, `Lex^(d)(I)` and
//!   the regularity range of a Hilbert function;
//! - [`squarefree`] and [`complex`]: the squarefree operation, squarefree
//!   d-lexsegment ideals, simplicial complexes and Alexander duality;
//! - [`area`]: extremal and semi-convex areas and the maximal-Betti ideal
//!   `Lex(I, A)`.

pub mod area;
pub mod betti;
pub mod complex;
pub mod dreg;
pub mod error;
pub mod ideal;
pub mod koszul;
pub mod macaulay;
pub mod monomial;
pub mod squarefree;

pub use area::ExtremalArea;
pub use betti::BettiDiagram;
pub use complex::SimplicialComplex;
pub use dreg::{LSequence, Verdict};
pub use error::{Error, Result};
pub use ideal::MonomialIdeal;
pub use koszul::RankWindow;
pub use macaulay::{HilbertSpec, MVector, MacaulayRep, Role};
pub use monomial::{GroundRing, Monomial, MonomialSet};
pub use squarefree::LStarSequence;

/// Resource limits shared by every operation that enumerates monomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest number of monomials a single enumeration may produce.
    pub enum_cap: usize,
    /// Hard degree bound for the degree-by-degree `Lex(I)` construction.
    pub max_degree: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enum_cap: 1_000_000,
            max_degree: 64,
        }
    }
}
