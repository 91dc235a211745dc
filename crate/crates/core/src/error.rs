use crate::intersection::VarietyId;
use crate::rational::Rat;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("variety mismatch: {0} vs {1}")]
    VarietyMismatch(VarietyId, VarietyId),

    #[error("class is not unital: degree-0 coefficient is {0}, expected 1")]
    NonUnital(Rat),

    #[error("Todd expansion is only implemented through degree 4; not available on {0}")]
    ToddUnsupported(VarietyId),

    #[error("character has c1 = {0} < 0 at the working twist; pass the shifted (negated) character")]
    NotInHeart(Rat),

    #[error("coordinates ({0}, {1}, {2}) are not integral")]
    Integrality(Rat, Rat, Rat),

    #[error("degenerate lattice basis")]
    DegenerateBasis,

    #[error("{0}")]
    InvalidInput(String),
}
