//! Worked-example catalog, randomized check harness, the sfm file format,
//! and the `sfm` command-line front end over the invariant crates.

pub mod catalog;
pub mod checks;
pub mod cli;
pub mod random;
pub mod report;
pub mod sfm_format;

pub use catalog::{catalog, catalog_get, CatalogEntry, CatalogError, Payload};
pub use checks::{
    check_additivity, check_alexander_basics, check_congruence_invariance, check_doubles_slice,
    check_levine, check_oracles, check_prop12, check_properties, CheckFailure, CheckReport,
};
pub use random::{random_form, GiveUp, GIVE_UP_ATTEMPTS};
pub use report::{check_rows, Format, Report};
pub use sfm_format::{parse_sfm, write_sfm, SfmError};
