//! E-polynomials of SL(2,C)-character varieties of surface groups, computed
//! through Hodge monodromy representations of fibrations.

pub mod blocks;
pub mod error;
pub mod expected;
pub mod fforacle;
pub mod fibcalc;
pub mod genus2;
pub mod poly;
pub mod report;
pub mod repring;
pub mod twisted;
pub mod untwisted;

pub use error::{Error, Result};
pub use poly::{poly, IntPoly};
pub use repring::{CharMap, Character, EvalTable, HMRep, MonodromyGroup};
