use thiserror::Error;

#[derive(Debug, Error, Clone, Copy, PartialEq)]
pub enum CostError {
    #[error("invalid cost parameters: {0}")]
    InvalidParams(&'static str),

    #[error("recursion did not terminate within {max_depth} steps (buffer scale too small?)")]
    DepthLimit { max_depth: u32 },

    #[error("argument outside the operation's domain: {0}")]
    Domain(&'static str),
}

pub type Result<T> = std::result::Result<T, CostError>;
