pub mod cli;
pub mod jspaces;
pub mod komplex;
pub mod linalg;
pub mod presentation;
pub mod tensoralg;
pub mod yoneda;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("word-count cap exceeded: {0}")]
    Cap(String),
    #[error("internal error: {0}")]
    Internal(String),
}
