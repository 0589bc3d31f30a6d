//! Benchmark inputs shared by the criterion targets.

use pushpa_core::{chain_loop, push_braid, BraidWord};

/// Push braid of the figure-eight chain on `n - 1` sphere punctures.
pub fn chain_braid(n: usize) -> BraidWord {
    push_braid(&chain_loop(n).expect("n >= 4")).expect("chain loop is nontrivial").braid
}
