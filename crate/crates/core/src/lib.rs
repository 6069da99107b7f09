#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod barnes;
pub mod error;
pub mod explicit;
pub mod higher_zeta;
pub mod numerics;
pub mod sequences;
pub mod series;
pub mod verify;
