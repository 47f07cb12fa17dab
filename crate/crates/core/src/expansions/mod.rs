//! Symmetric functions in the Schur basis, the closed-form determinant
//! expansions, and verification suites tying them to the Fock engine.

mod formulas;
mod symfunc;
pub mod verify;

pub use formulas::{
    expand_in_refined_basis, flagged_schur, multi_schur, refined_dual_grothendieck, schur_expand_multischur,
    skew_function, skew_hpoly, skew_multi_schur, stable_dual_in_g, stable_dual_in_g_sized, stable_grothendieck_schur,
    truncated_dual_expansion, CoefficientMatrixSpec,
};
pub use symfunc::{
    coefficients_json, eval_symfunc, h_product_in_schur, hall_inner, horizontal_strips, pieri_mult_h,
    schur_tableau_oracle, Coefficients, HPoly, SymFunc,
};
pub use verify::{verify_branching, verify_branching_general, verify_cauchy, Report};
