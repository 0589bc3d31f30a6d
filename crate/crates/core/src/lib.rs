//! Exact arithmetic for point-pushing pseudo-Anosov braids.
//!
//! * [`braid`]: braid words, permutations and text formats.
//! * [`lamination`]: integer curve coordinates, the braid action on them and
//!   dilatation estimates from norm growth.
//! * [`pointpush`]: loops on the punctured sphere and their push braids.
//! * [`bounds`]: closed-form dilatation bounds and exact threshold checks.
//! * [`strands`]: strand-count simulators for figure-eight chains.
//! * [`selfcheck`]: the consistency checks run by `pushpa verify`.

pub mod bounds;
pub mod braid;
pub mod error;
pub mod format;
pub mod lamination;
pub mod pointpush;
pub mod selfcheck;
pub mod strands;

pub use bounds::SurfaceType;
pub use braid::{band_generator, BraidWord, Generator, Permutation, Sign};
pub use error::{Error, Result};
pub use lamination::{
    apply_generator, apply_word, classify, coord_norm, estimate_dilatation, estimate_dilatation_from, standard_curve,
    Classification, GrowthOptions, GrowthReport, GrowthStatus, LamCoord,
};
pub use pointpush::{chain_loop, classify_loop, push_braid, push_word, LoopClass, LoopLetter, LoopWord, PushResult};
pub use strands::{simulate_lower, simulate_upper, StrandModel, StrandTrace};
