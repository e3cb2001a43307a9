//! RS and RSK correspondences of types A and C, with their recording objects.

mod oscillating;
mod ssot;
mod type_a;
mod type_c;

pub use oscillating::{enumerate_ot, OscillatingTableau};
pub use ssot::{enumerate_ssot, Ssot};
pub use type_a::{inverse_rs_a, inverse_rsk_a, rs_a, rsk_a};
pub use type_c::{inverse_rs_c, inverse_rsk_c, rs_c, rsk_c, rsk_c_steps, RskOutputC};
