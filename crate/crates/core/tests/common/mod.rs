//! Oracles and checks shared by the integration suites and the acceptance
//! run.
#![allow(dead_code)]

pub mod finite;
pub mod ring;
pub mod shared_maximal;
pub mod truncation;
