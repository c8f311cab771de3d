pub mod arch;
pub mod error;
pub mod gf2;
pub mod pipeline;
pub mod placer;
pub mod rewrite;
pub mod router;
pub mod synth;

pub use error::{Error, Result};
