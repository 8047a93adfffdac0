//! HTTP service. Stateless; every handler is a thin wrapper over [`crate::api`].

use std::convert::Infallible;
use std::net::SocketAddr;

use axum::body::{Body, Bytes};
use axum::extract::Request;
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::de::DeserializeOwned;
use serde::Serialize;
use tokio::sync::mpsc;

use crate::api::{self, DesignRequest, PowerRequest, SimPlan, SimulateRequest};
use crate::error::ApiError;

pub fn router() -> Router {
    Router::new()
        .route("/api/health", get(health))
        .route("/api/presets", get(presets))
        .route("/api/sample-size", post(sample_size))
        .route("/api/power", post(power))
        .route("/api/power-curve", post(power_curve))
        .route("/api/simulate", post(simulate))
        .fallback(not_found)
}

pub async fn serve(port: u16) -> std::io::Result<()> {
    let addr = SocketAddr::from(([0, 0, 0, 0], port));
    let listener = tokio::net::TcpListener::bind(addr).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router()).await
}

/// Parse the body ourselves so every malformed payload maps to a 400 with the
/// shared error shape, whatever the content type header says.
fn parse<T: DeserializeOwned>(body: &Bytes) -> Result<T, ApiError> {
    serde_json::from_slice(body).map_err(|e| ApiError::InvalidJson(e.to_string()))
}

async fn health() -> impl IntoResponse {
    Json(serde_json::json!({ "status": "ok", "version": env!("CARGO_PKG_VERSION") }))
}

async fn presets() -> impl IntoResponse {
    Json(api::presets())
}

async fn sample_size(body: Bytes) -> Result<Json<api::DesignResponse>, ApiError> {
    let req: DesignRequest = parse(&body)?;
    Ok(Json(api::sample_size(&req)?))
}

async fn power(body: Bytes) -> Result<Json<api::PowerResponse>, ApiError> {
    let req: PowerRequest = parse(&body)?;
    Ok(Json(api::power(&req)?))
}

async fn power_curve(body: Bytes) -> Result<Json<api::CurveResponse>, ApiError> {
    let req: DesignRequest = parse(&body)?;
    Ok(Json(api::power_curve(&req)?))
}

#[derive(Serialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum SimEvent {
    Progress { done: u64, total: u64 },
    Result(api::SimulateResponse),
    Error { error: &'static str, message: String },
}

fn ndjson_line(event: &SimEvent) -> Bytes {
    let mut line = serde_json::to_vec(event).expect("simulation events serialize");
    line.push(b'\n');
    Bytes::from(line)
}

/// Streams newline-delimited JSON: progress events while replications run,
/// then a single result (or error) event. Request validation failures are
/// answered with a plain 400 before streaming starts.
async fn simulate(body: Bytes) -> Result<Response, ApiError> {
    let req: SimulateRequest = parse(&body)?;
    let plan = SimPlan::new(&req)?;
    let total = plan.total_reps();
    let (tx, rx) = mpsc::unbounded_channel::<Bytes>();
    tokio::task::spawn_blocking(move || {
        let progress_tx = tx.clone();
        let outcome = plan.run(&move |done| {
            let _ = progress_tx.send(ndjson_line(&SimEvent::Progress { done, total }));
        });
        let last = match outcome {
            Ok(resp) => SimEvent::Result(resp),
            Err(e) => SimEvent::Error { error: e.code(), message: e.to_string() },
        };
        let _ = tx.send(ndjson_line(&last));
    });
    let stream = futures::stream::unfold(rx, |mut rx| async move {
        rx.recv().await.map(|chunk| (Ok::<_, Infallible>(chunk), rx))
    });
    Ok((StatusCode::OK, [(header::CONTENT_TYPE, "application/x-ndjson")], Body::from_stream(stream)).into_response())
}

async fn not_found(req: Request) -> ApiError {
    ApiError::NotFound(format!("{} {}", req.method(), req.uri().path()))
}
