use alloc::string::String;

use crate::freeness::PatternWitness;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("undefined intersection: empty vertex set")]
    EmptyIntersection,
    #[error("invalid pattern parameters s={s}, t={t}: need 1 <= s <= t")]
    InvalidPattern { s: usize, t: usize },
    #[error("graph contains K_(1,{s},{t})", s = .0.side_s.len(), t = .0.side_t.len())]
    NotFree(PatternWitness),
    #[error("unsupported parameters: {0}")]
    Unsupported(&'static str),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("set member {value} outside [1, {bound}]")]
    MemberOutOfRange { value: usize, bound: usize },
    #[error("set contains a 3-term arithmetic progression {0}, {1}, {2}")]
    NotProgressionFree(usize, usize, usize),
    #[error("n = {n} exceeds the limit of {limit} for this search")]
    TooLarge { n: usize, limit: usize },
    #[error("malformed certificate: {0}")]
    Structural(String),
}
