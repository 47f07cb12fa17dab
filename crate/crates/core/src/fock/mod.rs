//! Charged free-fermion Fock space with exact coefficients.

mod basis;
mod ops;
mod state;

pub use basis::{
    bra_general_pair_at, bra_refined_pair, bra_refined_pair_at, direct_expectation, ket_general, ket_partition,
    ket_refined, standard_ket, vacuum_image, wick_expectation,
};
pub use ops::{
    apply_dressed_fermion, apply_exp_h, apply_fermion, apply_h, apply_heisenberg, apply_word, Dressing, Mode, Operator,
};
pub use state::{FockVector, MayaState};
