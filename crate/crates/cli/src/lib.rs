//! Command line front end: scenario ingestion, report emission, verification
//! suites and search campaigns.

pub mod run;
pub mod schema;

use futaki_core::Error;

/// Process exit code for an error: 2 for invalid input, 1 for a refused or
/// failed computation.
pub fn exit_code(err: &Error) -> i32 {
    if err.is_input_error() {
        2
    } else {
        1
    }
}
