/// Placeholder.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("shape mismatch")]
    Shape,
}
