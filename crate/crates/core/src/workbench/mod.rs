//! Model files, the example gallery, seeded random instances and the
//! verification suites behind the command-line tool.

pub mod compute;
pub mod gallery;
pub mod model;
pub mod random;
pub mod report;
pub mod suites;

pub use compute::compute;
pub use gallery::{gallery, gallery_file, write_gallery, GalleryFile};
pub use model::{parse_model, print_model, Entry, Kind, ModelFile, Object};
pub use report::VerdictReport;
pub use suites::{run_suite, validate_model, Suite, SuiteConfig};
