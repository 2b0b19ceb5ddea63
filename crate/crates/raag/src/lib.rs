//! Equality and conjugacy decisions in right-angled Artin groups (RAAGs).
//!
//! A RAAG is presented by a generator count `N` and a list of generator
//! pairs that commute; all other pairs satisfy no relation. Words are
//! sequences of nonzero integers: `k` is the `k`-th generator and `-k` its
//! inverse. The crate converts words into pilings — canonical stacks of
//! beads, one column per generator — and builds the word problem, cyclic
//! reduction, factorisation into non-split factors, pyramidal forms and
//! the conjugacy decision on top of them. Positive conjugacy answers come
//! with a conjugating element that is verified before being returned.
//! Every stage of the pipeline runs in time roughly linear in the input
//! length for a fixed group.
//!
//! ```
//! use raag::conjugacy::is_conjugate;
//! use raag::words::{GroupSpec, Word};
//!
//! let spec = GroupSpec::new(4, vec![(1, 4), (2, 3), (2, 4)]).unwrap();
//! let w1 = Word::new(vec![-2, -2, -4, 3, 2, 4, 1, 2, -1, 2, 2, -4]);
//! let w2 = Word::new(vec![4, 3, -4, 2, 1, 2, -1, -4]);
//! let result = is_conjugate(&w1, &w2, &spec).unwrap();
//! assert!(result.conjugate);
//! ```

mod error;

pub mod conjugacy;
pub mod graphs;
pub mod oracle;
pub mod pilings;
pub mod pyramidal;
pub mod render;
pub mod words;

pub use error::Error;
pub use pilings::{CyclicReduction, Piling};
pub use words::{GroupSpec, Word};
