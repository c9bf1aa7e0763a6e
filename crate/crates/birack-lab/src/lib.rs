//! Birack colorings, birack bracket state sums, and coloring quivers for
//! blackboard-framed oriented classical and virtual knots and links, all in
//! exact arithmetic.
//!
//! The crate is organized around the pipeline:
//!
//! 1. [`ring`] — exact coefficient rings (Z/n, Gaussian integers, Laurent
//!    polynomials over the Gaussian integers).
//! 2. [`birack`] — finite biracks given by operation tables, axiom
//!    validation, kink maps, (t,s,r)-constructions and endomorphisms.
//! 3. [`diagram`] — framed link diagrams as signed Gauss codes or PD codes,
//!    writhe and framing changes, Kauffman state loop counting, and random
//!    framed-move perturbations for invariance testing.
//! 4. [`homset`] — enumeration of birack colorings and the counting
//!    invariant.
//! 5. [`bracket`] — birack bracket validation and the skein state-sum
//!    invariant with its multiset/polynomial forms.
//! 6. [`search`] — backtracking search for brackets over finite rings.
//! 7. [`quiver`] — coloring quivers, their decategorified polynomials and
//!    DOT export.
//!
//! See the `examples/` directory for one runnable example per capability;
//! the thin `birack-lab` binary exposes the same operations on files.

pub mod birack;
pub mod bracket;
pub mod cli;
pub mod diagram;
pub mod homset;
pub mod quiver;
pub mod ring;
pub mod search;

pub use birack::FiniteBirack;
pub use bracket::{BirackBracket, InvariantMultiset};
pub use diagram::{FramedDiagram, SmoothingState};
pub use homset::Coloring;
pub use quiver::ColoringQuiver;
pub use ring::{GaussInt, RElem, RingSpec};
