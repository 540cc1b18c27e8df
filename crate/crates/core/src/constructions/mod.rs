//! Presentation compilers: RAAGs, direct products, the Rips construction,
//! fibre-product generators, coset enumeration, Reidemeister–Schreier and
//! wreath-product embeddings.

pub mod coset;
pub mod fibre;
pub mod products;
pub mod rips;
pub mod schreier;
pub mod wreath;

pub use coset::{todd_coxeter, CosetError, CosetTable};
pub use fibre::{fibre_product_generators, FibreData, FibreError, PairWord};
pub use products::{build_raag, direct_product, DirectProduct};
pub use rips::{rips, RipsError, RipsOutput};
pub use schreier::{reidemeister_schreier, schreier_rewrite, SchreierBasis, SchreierError};
pub use wreath::{wreath_embed, WreathBase, WreathElement, WreathError};
