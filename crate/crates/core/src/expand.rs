//! Deterministic seed expansion.
//!
//! A 64-bit seed is stretched into an arbitrarily long bit string by a
//! splitmix-style counter-mode mixer. This is the crate's only source of
//! "randomness": samplers, list builders, and the resampling colorer all
//! draw from it, which is what makes every run replayable from (seed,
//! position) alone. The mixer has no pseudorandomness guarantee; it stands
//! where a genuine generator would be slotted in.

use crate::bits::BitVec;

const GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// Streaming source of bits derived from a 64-bit seed.
///
/// Each 64-bit block is produced by advancing the state by a fixed
/// increment and scrambling it; the block's bits are consumed lowest bit
/// first.
#[derive(Clone, Debug)]
pub struct SplitMixStream {
    state: u64,
    block: u64,
    bits_left: u32,
}

impl SplitMixStream {
    pub fn new(seed: u64) -> Self {
        SplitMixStream {
            state: seed,
            block: 0,
            bits_left: 0,
        }
    }

    /// Next raw 64-bit block. Discards any partially consumed block.
    pub fn next_block(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GAMMA);
        let mut x = self.state;
        x ^= x >> 30;
        x = x.wrapping_mul(0xBF58_476D_1CE4_E5B9);
        x ^= x >> 27;
        x = x.wrapping_mul(0x94D0_49BB_1331_11EB);
        x ^= x >> 31;
        self.bits_left = 0;
        x
    }

    /// Next bit of the stream.
    #[inline]
    pub fn next_bit(&mut self) -> bool {
        if self.bits_left == 0 {
            self.block = self.next_block();
            self.bits_left = 64;
        }
        let bit = self.block & 1 == 1;
        self.block >>= 1;
        self.bits_left -= 1;
        bit
    }

    /// Next `nbits` bits as a bit string.
    pub fn take_bits(&mut self, nbits: usize) -> BitVec {
        BitVec::from_fn(nbits, |_| self.next_bit())
    }
}

/// Expands `seed` into the first `nbits` bits of its stream.
pub fn expand_seed(seed: u64, nbits: usize) -> BitVec {
    SplitMixStream::new(seed).take_bits(nbits)
}
