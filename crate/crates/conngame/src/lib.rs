//! Game engines, exact solvers, and verification campaigns for the graph
//! marking game, the graph coloring game, and their connected variants.
//!
//! The marking game: Alice and Bob alternately mark vertices (Alice first);
//! a vertex scores the number of neighbors marked before it, and the play
//! score is the maximum vertex score. Alice minimizes, Bob maximizes; the
//! game coloring number is one more than the score Alice can guarantee.
//! The coloring game: the players properly color vertices with `t` colors;
//! Alice wins iff the whole graph gets colored. In the connected variants
//! the played set must induce a connected subgraph after every move.
//!
//! The crate provides:
//!
//! * [`graph`]: small immutable graphs, file I/O, graph constructions
//!   (spiders, fan-triangle 2-trees, random k-trees), treedepth machinery.
//! * [`engine`]: game state, legality, scoring, and strategy-vs-strategy
//!   play with reproducible transcripts.
//! * [`solver`]: exact minimax values for both games on small graphs,
//!   exhaustive best-response evaluation of fixed strategies, and the
//!   restricted pattern game.
//! * [`strategies`]: the treedepth and activation strategies for Alice,
//!   scripted spoiler strategies for Bob, and baselines.
//! * [`patterns`]: partially colored patterns and a matcher that finds
//!   them inside live game states.
//! * [`harness`]: named verification campaigns with JSON reports.

pub mod engine;
pub mod error;
pub mod graph;
pub mod harness;
pub mod patterns;
pub mod solver;
pub mod strategies;
pub mod tree;

pub use engine::{GameKind, GameState, Move, Player, Rules, Strategy, Transcript};
pub use error::{Error, MoveRejection, Result};
pub use graph::Graph;
pub use solver::{SolveResult, SolverConfig};
