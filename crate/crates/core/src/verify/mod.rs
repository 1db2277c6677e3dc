//! Named identity checks grouped into suites.

mod report;
mod suites;

pub use report::CheckResult;
pub use suites::{
    check_alcove, check_ic, check_qbg, check_semimod, mountain_listings, run_suite, Listing, Suite, SuiteRun,
};
