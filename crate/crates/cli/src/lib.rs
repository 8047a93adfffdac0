//! Command-line tool and HTTP/JSON service over `kmdesign_core`.

pub mod api;
pub mod cli;
pub mod error;
pub mod server;

pub use error::ApiError;
