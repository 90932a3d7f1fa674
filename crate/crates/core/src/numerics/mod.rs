//! Scalar numerical kernels shared by the rest of the crate.

pub mod gauss;
pub mod golden;
pub mod poly;
pub mod rk45;
pub mod roots;
pub mod tanhsinh;
