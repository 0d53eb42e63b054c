//! Outcast (Aizerman) choice functions on finite universes and their
//! hyper-order representations.
//!
//! A *choice function* assigns to every subset `A` of a finite base set a
//! chosen subset `f(A) ⊆ A`. It satisfies the *Outcast* (Aizerman) condition
//! when discarding non-chosen elements never changes the choice:
//! `f(A) ⊆ B ⊆ A` implies `f(A) = f(B)`. Every total order `≤` on the
//! powerset (a *hyper-order*) induces such a function,
//! `f_≤(A) = max_≤ {B | B ⊆ A}`, and this crate works the correspondence in
//! both directions:
//!
//! - [`order::HyperOrder::induced_choice`] evaluates `f_≤`, which is always
//!   Outcast;
//! - [`synthesis::synthesize_order`] constructs a witnessing hyper-order for
//!   an Outcast function, step by step through fixpoints, their domains and
//!   a linear extension of the precedence the function reveals — or proves
//!   that no inducing order exists by exhibiting a precedence cycle. Outcast
//!   alone does not guarantee representability: the smallest
//!   counterexamples live on a three-element universe
//!   ([`synthesis::SynthesisError::PrecedenceCycle`]);
//! - [`oracle`] checks all of this exhaustively at small sizes and provides
//!   the brute-force reference scans.
//!
//! Universes are capped at 16 elements ([`subset::MAX_UNIVERSE`]); subsets
//! are bitmasks ([`subset::SubsetId`]) and hyper-orders are rank permutations
//! ([`order::HyperOrder`]).

pub mod choice;
pub mod oracle;
pub mod order;
pub mod subset;
pub mod synthesis;

pub use choice::{ChoiceError, ChoiceFunction, DomainPartition, NotOutcast, OutcastWitness};
pub use oracle::{CensusReport, UniverseTooLarge};
pub use order::{HyperOrder, OrderError};
pub use subset::{SubsetId, Universe, UniverseError, MAX_UNIVERSE};
pub use synthesis::{synthesize_order, verify_representation, SynthesisError, SynthesisTrace};
