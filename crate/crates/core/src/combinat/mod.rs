//! Shapes, fillings, readings and the standard/non-crossing tableau families.

pub mod enumerate;
pub mod filling;
pub mod pairs;
pub mod partition;
pub mod reading;
pub mod semistandard;
pub mod tableau;

pub use enumerate::{
    agreeing_readings, enumerate_nct, enumerate_nct_full, enumerate_nct_restated, enumerate_syt,
    enumerate_syt_full, enumerate_syt_restated, fillings_of_shape, nct_to_syt, syt_to_nct,
};
pub use filling::Filling;
pub use pairs::{is_noncrossing_pair, is_nonnesting_pair, segments_noncrossing};
pub use partition::Partition;
pub use reading::{is_yamanouchi, lexmax_words, yamanouchi_words, Reading};
pub use semistandard::{
    count_snct, count_ssyt, enumerate_snct, enumerate_ssyt, is_semi_noncrossing, semi_lift, snct_to_ssyt, ssyt_to_snct,
};
pub use tableau::Tableau;
