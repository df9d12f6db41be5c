//! Exact symmetric-function arithmetic: sparse expressions over the h, p, s,
//! ht, st bases, characters, scalar products, Kronecker product and the
//! Frobenius map.

pub mod character;
pub mod convert;
pub mod expr;
pub mod inner;
pub mod json;

pub use character::sn_character;
pub use convert::change_basis;
pub use expr::{coeff_int, BasisTag, Coeff, SymExpr};
pub use inner::{
    character_inner, character_inner_at, eval_at_cycle_type, frobenius_image, hall_inner,
    kronecker_product, power_sum_at_cycle_type,
};
pub use json::{from_json_str, to_json, to_json_string};
