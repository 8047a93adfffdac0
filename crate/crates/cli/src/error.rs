use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::Json;
use serde::Serialize;

/// Error surfaced to CLI users and HTTP clients.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ApiError {
    #[error("{0}")]
    Domain(String),
    #[error("invalid JSON: {0}")]
    InvalidJson(String),
    #[error("numerical failure: {0}")]
    Numeric(String),
    #[error("no route for {0}")]
    NotFound(String),
}

impl ApiError {
    pub fn domain(msg: impl Into<String>) -> Self {
        ApiError::Domain(msg.into())
    }

    pub fn code(&self) -> &'static str {
        match self {
            ApiError::Domain(_) => "domain_error",
            ApiError::InvalidJson(_) => "invalid_json",
            ApiError::Numeric(_) => "numeric_error",
            ApiError::NotFound(_) => "not_found",
        }
    }

    pub fn status(&self) -> StatusCode {
        match self {
            ApiError::Domain(_) | ApiError::InvalidJson(_) => StatusCode::BAD_REQUEST,
            ApiError::Numeric(_) => StatusCode::INTERNAL_SERVER_ERROR,
            ApiError::NotFound(_) => StatusCode::NOT_FOUND,
        }
    }
}

impl From<kmdesign_core::Error> for ApiError {
    fn from(e: kmdesign_core::Error) -> Self {
        match e {
            kmdesign_core::Error::Domain(msg) => ApiError::Domain(msg),
            e @ kmdesign_core::Error::DivergentIntegral { .. } => ApiError::Domain(e.to_string()),
            e @ kmdesign_core::Error::Quadrature { .. } => ApiError::Numeric(e.to_string()),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ErrorBody {
    pub error: &'static str,
    pub message: String,
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let body = ErrorBody { error: self.code(), message: self.to_string() };
        (self.status(), Json(body)).into_response()
    }
}
