//! Bent-function constructions.

pub mod agw;
pub mod families;
pub mod ndcor;
pub mod sporadic;
pub mod sums;

pub use agw::{agw_combine, agw_dual_formula, agw_walsh_identity_check};
pub use families::{cm_bent, cor1_family, monomial_bent, trace_monomial, FamilyOutput, PowerMap};
pub use ndcor::{ndcor_condition_sum, ndcor_function, product_form, NdCorSpec};
pub use sporadic::{claim_holds, scan_primitive, sporadic, G2Coeff, Sporadic};
pub use sums::{
    direct_sum, sds_dual_formula, sds_is_bent_condition, sds_walsh_factorization, semi_direct_sum,
    SdsCondition, SdsSpec,
};
