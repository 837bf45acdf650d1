//! Deterministic sub-seed derivation.
//!
//! One global seed is expanded into per-component seeds by hashing a
//! component label into the seed. The same (seed, label) pair always
//! yields the same sub-seed, so adding a component never perturbs the
//! random streams of the others.

/// Derive the seed for a named component from the global seed.
pub fn sub_seed(seed: u64, label: &str) -> u64 {
    splitmix64(seed ^ fnv1a64(label.as_bytes()))
}

/// Sub-seed for an indexed worker or restart within a component.
pub fn sub_seed_indexed(seed: u64, label: &str, index: u64) -> u64 {
    splitmix64(sub_seed(seed, label).wrapping_add(index))
}

fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut hash = 0xcbf2_9ce4_8422_2325u64;
    for &b in bytes {
        hash ^= u64::from(b);
        hash = hash.wrapping_mul(0x1000_0000_01b3);
    }
    hash
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}
