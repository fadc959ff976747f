pub mod cli;
pub mod error;
pub mod families;
pub mod kappa;
pub mod poly;
pub mod roots;
pub mod theorems;
