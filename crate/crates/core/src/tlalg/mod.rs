//! Temperley-Lieb diagrams, the map `s_i -> t_i + 1` into `TL_l(-2)`, and crossing
//! resolution for two-row tableaux.

pub mod diagram;
pub mod matching;
pub mod resolve;

pub use diagram::{tl_multiply, tl_product, TLDiagram, TLElement, TLElementJson};
pub use matching::{catalan, catalan_dimension, noncrossing_matchings, Matching};
pub use resolve::{
    inversions, reduced_word, resolve_crossings, resolve_sequential, theta, tl_coefficient_check, uncrossings,
    wiring_permutation, word_permutation, Theta, Uncrossing,
};
