//! Partitions, alphabets and tuples of alphabets.

mod alphabet;
mod partition;

pub use alphabet::{refined_alphabet, stable_tail, Alphabet, AlphabetSequence, Sequence, StableTail, Tail};
pub use partition::Partition;
