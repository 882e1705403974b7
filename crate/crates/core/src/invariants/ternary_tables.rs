//! Coefficient tables for the Aronhold invariants of a ternary cubic.
//!
//! A cubic f = sum c_e x^e0 y^e1 z^e2 is indexed by the ten degree-3
//! exponent triples in `TERNARY_EXPONENTS` order. `S = (1/S_SCALE) * sum
//! coeff * prod c_(slot)^pow` over `S_TERMS`, likewise for T. Normalized so
//! that on a(x^3+y^3+z^3) + 6b xyz: S = a^3 b - b^4, T = a^6 - 20a^3b^3 - 8b^6.

pub(crate) const TERNARY_EXPONENTS: [[u8; 3]; 10] = [
    [0, 0, 3],
    [0, 1, 2],
    [0, 2, 1],
    [0, 3, 0],
    [1, 0, 2],
    [1, 1, 1],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
    [3, 0, 0],
];

pub(crate) const S_SCALE: i64 = 1296;

pub(crate) const S_TERMS: &[([u8; 10], i64)] = &[
    ([1, 0, 1, 0, 0, 0, 1, 0, 0, 1], -144),
    ([1, 0, 1, 0, 0, 0, 0, 0, 2, 0], 48),
    ([1, 0, 0, 1, 0, 1, 0, 0, 0, 1], 216),
    ([1, 0, 0, 1, 0, 0, 0, 1, 1, 0], -144),
    ([1, 0, 0, 0, 0, 1, 1, 0, 1, 0], -24),
    ([1, 0, 0, 0, 0, 0, 2, 1, 0, 0], 48),
    ([0, 2, 0, 0, 0, 0, 1, 0, 0, 1], 48),
    ([0, 2, 0, 0, 0, 0, 0, 0, 2, 0], -16),
    ([0, 1, 1, 0, 0, 1, 0, 0, 0, 1], -24),
    ([0, 1, 1, 0, 0, 0, 0, 1, 1, 0], 16),
    ([0, 1, 0, 1, 1, 0, 0, 0, 0, 1], -144),
    ([0, 1, 0, 1, 0, 0, 0, 2, 0, 0], 48),
    ([0, 1, 0, 0, 1, 0, 1, 0, 1, 0], 16),
    ([0, 1, 0, 0, 0, 2, 0, 0, 1, 0], 8),
    ([0, 1, 0, 0, 0, 1, 1, 1, 0, 0], -24),
    ([0, 0, 2, 0, 1, 0, 0, 0, 0, 1], 48),
    ([0, 0, 2, 0, 0, 0, 0, 2, 0, 0], -16),
    ([0, 0, 1, 0, 1, 1, 0, 0, 1, 0], -24),
    ([0, 0, 1, 0, 1, 0, 1, 1, 0, 0], 16),
    ([0, 0, 1, 0, 0, 2, 0, 1, 0, 0], 8),
    ([0, 0, 0, 1, 2, 0, 0, 0, 1, 0], 48),
    ([0, 0, 0, 1, 1, 1, 0, 1, 0, 0], -24),
    ([0, 0, 0, 0, 2, 0, 2, 0, 0, 0], -16),
    ([0, 0, 0, 0, 1, 2, 1, 0, 0, 0], 8),
    ([0, 0, 0, 0, 0, 4, 0, 0, 0, 0], -1),
];

pub(crate) const T_SCALE: i64 = 5832;

pub(crate) const T_TERMS: &[([u8; 10], i64)] = &[
    ([2, 0, 0, 2, 0, 0, 0, 0, 0, 2], 5832),
    ([2, 0, 0, 1, 0, 0, 1, 0, 1, 1], -3888),
    ([2, 0, 0, 1, 0, 0, 0, 0, 3, 0], 864),
    ([2, 0, 0, 0, 0, 0, 3, 0, 0, 1], 864),
    ([2, 0, 0, 0, 0, 0, 2, 0, 2, 0], -216),
    ([1, 1, 1, 1, 0, 0, 0, 0, 0, 2], -3888),
    ([1, 1, 1, 0, 0, 0, 1, 0, 1, 1], 1296),
    ([1, 1, 1, 0, 0, 0, 0, 0, 3, 0], -288),
    ([1, 1, 0, 1, 0, 1, 0, 0, 1, 1], 1296),
    ([1, 1, 0, 1, 0, 0, 1, 1, 0, 1], 1296),
    ([1, 1, 0, 1, 0, 0, 0, 1, 2, 0], -864),
    ([1, 1, 0, 0, 0, 1, 2, 0, 0, 1], -864),
    ([1, 1, 0, 0, 0, 1, 1, 0, 2, 0], 144),
    ([1, 1, 0, 0, 0, 0, 2, 1, 1, 0], 144),
    ([1, 0, 3, 0, 0, 0, 0, 0, 0, 2], 864),
    ([1, 0, 2, 0, 0, 1, 0, 0, 1, 1], -864),
    ([1, 0, 2, 0, 0, 0, 1, 1, 0, 1], -864),
    ([1, 0, 2, 0, 0, 0, 0, 1, 2, 0], 576),
    ([1, 0, 1, 1, 1, 0, 0, 0, 1, 1], 1296),
    ([1, 0, 1, 1, 0, 1, 0, 1, 0, 1], 1296),
    ([1, 0, 1, 1, 0, 0, 0, 2, 1, 0], -864),
    ([1, 0, 1, 0, 1, 0, 2, 0, 0, 1], -864),
    ([1, 0, 1, 0, 1, 0, 1, 0, 2, 0], 144),
    ([1, 0, 1, 0, 0, 2, 1, 0, 0, 1], 648),
    ([1, 0, 1, 0, 0, 2, 0, 0, 2, 0], 72),
    ([1, 0, 1, 0, 0, 1, 1, 1, 1, 0], -720),
    ([1, 0, 1, 0, 0, 0, 2, 2, 0, 0], 576),
    ([1, 0, 0, 2, 1, 0, 0, 1, 0, 1], -3888),
    ([1, 0, 0, 2, 0, 0, 0, 3, 0, 0], 864),
    ([1, 0, 0, 1, 1, 1, 1, 0, 0, 1], 1296),
    ([1, 0, 0, 1, 1, 1, 0, 0, 2, 0], -864),
    ([1, 0, 0, 1, 1, 0, 1, 1, 1, 0], 1296),
    ([1, 0, 0, 1, 0, 3, 0, 0, 0, 1], -540),
    ([1, 0, 0, 1, 0, 2, 0, 1, 1, 0], 648),
    ([1, 0, 0, 1, 0, 1, 1, 2, 0, 0], -864),
    ([1, 0, 0, 0, 1, 1, 2, 0, 1, 0], 144),
    ([1, 0, 0, 0, 1, 0, 3, 1, 0, 0], -288),
    ([1, 0, 0, 0, 0, 3, 1, 0, 1, 0], -36),
    ([1, 0, 0, 0, 0, 2, 2, 1, 0, 0], 72),
    ([0, 3, 0, 1, 0, 0, 0, 0, 0, 2], 864),
    ([0, 3, 0, 0, 0, 0, 1, 0, 1, 1], -288),
    ([0, 3, 0, 0, 0, 0, 0, 0, 3, 0], 64),
    ([0, 2, 2, 0, 0, 0, 0, 0, 0, 2], -216),
    ([0, 2, 1, 0, 0, 1, 0, 0, 1, 1], 144),
    ([0, 2, 1, 0, 0, 0, 1, 1, 0, 1], 144),
    ([0, 2, 1, 0, 0, 0, 0, 1, 2, 0], -96),
    ([0, 2, 0, 1, 1, 0, 0, 0, 1, 1], -864),
    ([0, 2, 0, 1, 0, 1, 0, 1, 0, 1], -864),
    ([0, 2, 0, 1, 0, 0, 0, 2, 1, 0], 576),
    ([0, 2, 0, 0, 1, 0, 2, 0, 0, 1], 576),
    ([0, 2, 0, 0, 1, 0, 1, 0, 2, 0], -96),
    ([0, 2, 0, 0, 0, 2, 1, 0, 0, 1], 72),
    ([0, 2, 0, 0, 0, 2, 0, 0, 2, 0], -48),
    ([0, 2, 0, 0, 0, 1, 1, 1, 1, 0], 144),
    ([0, 2, 0, 0, 0, 0, 2, 2, 0, 0], -216),
    ([0, 1, 2, 0, 1, 0, 0, 0, 1, 1], 144),
    ([0, 1, 2, 0, 0, 1, 0, 1, 0, 1], 144),
    ([0, 1, 2, 0, 0, 0, 0, 2, 1, 0], -96),
    ([0, 1, 1, 1, 1, 0, 0, 1, 0, 1], 1296),
    ([0, 1, 1, 1, 0, 0, 0, 3, 0, 0], -288),
    ([0, 1, 1, 0, 1, 1, 1, 0, 0, 1], -720),
    ([0, 1, 1, 0, 1, 1, 0, 0, 2, 0], 144),
    ([0, 1, 1, 0, 1, 0, 1, 1, 1, 0], -48),
    ([0, 1, 1, 0, 0, 3, 0, 0, 0, 1], -36),
    ([0, 1, 1, 0, 0, 2, 0, 1, 1, 0], -24),
    ([0, 1, 1, 0, 0, 1, 1, 2, 0, 0], 144),
    ([0, 1, 0, 1, 2, 0, 1, 0, 0, 1], -864),
    ([0, 1, 0, 1, 2, 0, 0, 0, 2, 0], 576),
    ([0, 1, 0, 1, 1, 2, 0, 0, 0, 1], 648),
    ([0, 1, 0, 1, 1, 1, 0, 1, 1, 0], -720),
    ([0, 1, 0, 1, 1, 0, 1, 2, 0, 0], 144),
    ([0, 1, 0, 1, 0, 2, 0, 2, 0, 0], 72),
    ([0, 1, 0, 0, 2, 0, 2, 0, 1, 0], -96),
    ([0, 1, 0, 0, 1, 2, 1, 0, 1, 0], -24),
    ([0, 1, 0, 0, 1, 1, 2, 1, 0, 0], 144),
    ([0, 1, 0, 0, 0, 4, 0, 0, 1, 0], 12),
    ([0, 1, 0, 0, 0, 3, 1, 1, 0, 0], -36),
    ([0, 0, 3, 0, 1, 0, 0, 1, 0, 1], -288),
    ([0, 0, 3, 0, 0, 0, 0, 3, 0, 0], 64),
    ([0, 0, 2, 0, 2, 0, 1, 0, 0, 1], 576),
    ([0, 0, 2, 0, 2, 0, 0, 0, 2, 0], -216),
    ([0, 0, 2, 0, 1, 2, 0, 0, 0, 1], 72),
    ([0, 0, 2, 0, 1, 1, 0, 1, 1, 0], 144),
    ([0, 0, 2, 0, 1, 0, 1, 2, 0, 0], -96),
    ([0, 0, 2, 0, 0, 2, 0, 2, 0, 0], -48),
    ([0, 0, 1, 1, 2, 1, 0, 0, 0, 1], -864),
    ([0, 0, 1, 1, 2, 0, 0, 1, 1, 0], 144),
    ([0, 0, 1, 1, 1, 1, 0, 2, 0, 0], 144),
    ([0, 0, 1, 0, 2, 1, 1, 0, 1, 0], 144),
    ([0, 0, 1, 0, 2, 0, 2, 1, 0, 0], -96),
    ([0, 0, 1, 0, 1, 3, 0, 0, 1, 0], -36),
    ([0, 0, 1, 0, 1, 2, 1, 1, 0, 0], -24),
    ([0, 0, 1, 0, 0, 4, 0, 1, 0, 0], 12),
    ([0, 0, 0, 2, 3, 0, 0, 0, 0, 1], 864),
    ([0, 0, 0, 2, 2, 0, 0, 2, 0, 0], -216),
    ([0, 0, 0, 1, 3, 0, 1, 0, 1, 0], -288),
    ([0, 0, 0, 1, 2, 2, 0, 0, 1, 0], 72),
    ([0, 0, 0, 1, 2, 1, 1, 1, 0, 0], 144),
    ([0, 0, 0, 1, 1, 3, 0, 1, 0, 0], -36),
    ([0, 0, 0, 0, 3, 0, 3, 0, 0, 0], 64),
    ([0, 0, 0, 0, 2, 2, 2, 0, 0, 0], -48),
    ([0, 0, 0, 0, 1, 4, 1, 0, 0, 0], 12),
    ([0, 0, 0, 0, 0, 6, 0, 0, 0, 0], -1),
];

