//! Front end for the `qr` binary: command runners, report rendering and the
//! parallel enumeration driver.

pub mod commands;
pub mod parallel;
pub mod report;

pub use report::{Format, Report};

/// Process exit codes.
pub mod exit {
    pub const PASS: i32 = 0;
    pub const CHECK_FAILED: i32 = 1;
    pub const DOMAIN: i32 = 2;
    pub const BUDGET: i32 = 3;
}

/// Exit code for a library error.
pub fn error_exit_code(e: &qrgp_core::Error) -> i32 {
    match e {
        qrgp_core::Error::Domain(_) | qrgp_core::Error::Arithmetic(_) => exit::DOMAIN,
        qrgp_core::Error::Budget { .. } => exit::BUDGET,
        qrgp_core::Error::Consistency(_) => exit::CHECK_FAILED,
    }
}
