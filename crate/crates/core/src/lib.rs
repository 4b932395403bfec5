pub mod chain;
pub mod error;
pub mod exact;
pub mod gold;
pub mod hermite;
pub mod json;
pub mod maya;
pub mod painleve;
pub mod pipeline;
pub mod tau;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/exact.md")]
    pub struct Exact;
    #[doc = include_str!("../../../book/src/maya.md")]
    pub struct Maya;
    #[doc = include_str!("../../../book/src/tau.md")]
    pub struct Tau;
    #[doc = include_str!("../../../book/src/chains.md")]
    pub struct Chains;
    #[doc = include_str!("../../../book/src/painleve.md")]
    pub struct Painleve;
    #[doc = include_str!("../../../book/src/certificates.md")]
    pub struct Certificates;
}
