//! Igusa–Clebsch invariants of a binary sextic as coefficient polynomials.
//!
//! Each entry is `(e, k)` for the monomial `k * c0^e[0] * ... * c6^e[6]`, where `c_i`
//! is the coefficient of `x^i`.

pub(super) const I2: [([u8; 7], i64); 4] = [
    ([0, 0, 0, 2, 0, 0, 0], 6),
    ([0, 0, 1, 0, 1, 0, 0], -16),
    ([0, 1, 0, 0, 0, 1, 0], 40),
    ([1, 0, 0, 0, 0, 0, 1], -240),
];

pub(super) const I4: [([u8; 7], i64); 16] = [
    ([0, 0, 2, 0, 2, 0, 0], 4),
    ([0, 0, 2, 1, 0, 1, 0], -12),
    ([0, 0, 3, 0, 0, 0, 1], 48),
    ([0, 1, 0, 1, 2, 0, 0], -12),
    ([0, 1, 0, 2, 0, 1, 0], 36),
    ([0, 1, 1, 0, 1, 1, 0], 4),
    ([0, 1, 1, 1, 0, 0, 1], -180),
    ([0, 2, 0, 0, 0, 2, 0], -80),
    ([0, 2, 0, 0, 1, 0, 1], 300),
    ([1, 0, 0, 0, 3, 0, 0], 48),
    ([1, 0, 0, 1, 1, 1, 0], -180),
    ([1, 0, 0, 2, 0, 0, 1], 324),
    ([1, 0, 1, 0, 0, 2, 0], 300),
    ([1, 0, 1, 0, 1, 0, 1], -504),
    ([1, 1, 0, 0, 0, 1, 1], -540),
    ([2, 0, 0, 0, 0, 0, 2], 1620),
];

pub(super) const I6: [([u8; 7], i64); 56] = [
    ([0, 0, 2, 2, 2, 0, 0], 8),
    ([0, 0, 2, 3, 0, 1, 0], -24),
    ([0, 0, 3, 0, 3, 0, 0], -24),
    ([0, 0, 3, 1, 1, 1, 0], 76),
    ([0, 0, 3, 2, 0, 0, 1], 60),
    ([0, 0, 4, 0, 0, 2, 0], -36),
    ([0, 0, 4, 0, 1, 0, 1], -160),
    ([0, 1, 0, 3, 2, 0, 0], -24),
    ([0, 1, 0, 4, 0, 1, 0], 72),
    ([0, 1, 1, 1, 3, 0, 0], 76),
    ([0, 1, 1, 2, 1, 1, 0], -238),
    ([0, 1, 1, 3, 0, 0, 1], -198),
    ([0, 1, 2, 0, 2, 1, 0], 28),
    ([0, 1, 2, 1, 0, 2, 0], 26),
    ([0, 1, 2, 1, 1, 0, 1], 492),
    ([0, 1, 3, 0, 0, 1, 1], 616),
    ([0, 2, 0, 0, 4, 0, 0], -36),
    ([0, 2, 0, 1, 2, 1, 0], 26),
    ([0, 2, 0, 2, 0, 2, 0], 176),
    ([0, 2, 0, 2, 1, 0, 1], 330),
    ([0, 2, 1, 0, 1, 2, 0], 64),
    ([0, 2, 1, 0, 2, 0, 1], -640),
    ([0, 2, 1, 1, 0, 1, 1], -1860),
    ([0, 2, 2, 0, 0, 0, 2], -900),
    ([0, 3, 0, 0, 0, 3, 0], -320),
    ([0, 3, 0, 0, 1, 1, 1], 1600),
    ([0, 3, 0, 1, 0, 0, 2], 2250),
    ([1, 0, 0, 2, 3, 0, 0], 60),
    ([1, 0, 0, 3, 1, 1, 0], -198),
    ([1, 0, 0, 4, 0, 0, 1], 162),
    ([1, 0, 1, 0, 4, 0, 0], -160),
    ([1, 0, 1, 1, 2, 1, 0], 492),
    ([1, 0, 1, 2, 0, 2, 0], 330),
    ([1, 0, 1, 2, 1, 0, 1], -468),
    ([1, 0, 2, 0, 1, 2, 0], -640),
    ([1, 0, 2, 0, 2, 0, 1], 424),
    ([1, 0, 2, 1, 0, 1, 1], -876),
    ([1, 0, 3, 0, 0, 0, 2], -96),
    ([1, 1, 0, 0, 3, 1, 0], 616),
    ([1, 1, 0, 1, 1, 2, 0], -1860),
    ([1, 1, 0, 1, 2, 0, 1], -876),
    ([1, 1, 0, 2, 0, 1, 1], 1818),
    ([1, 1, 1, 0, 0, 3, 0], 1600),
    ([1, 1, 1, 0, 1, 1, 1], 3472),
    ([1, 1, 1, 1, 0, 0, 2], 3060),
    ([1, 2, 0, 0, 0, 2, 1], -2240),
    ([1, 2, 0, 0, 1, 0, 2], -18600),
    ([2, 0, 0, 0, 2, 2, 0], -900),
    ([2, 0, 0, 0, 3, 0, 1], -96),
    ([2, 0, 0, 1, 0, 3, 0], 2250),
    ([2, 0, 0, 1, 1, 1, 1], 3060),
    ([2, 0, 0, 2, 0, 0, 2], -10044),
    ([2, 0, 1, 0, 0, 2, 1], -18600),
    ([2, 0, 1, 0, 1, 0, 2], 20664),
    ([2, 1, 0, 0, 0, 1, 2], 59940),
    ([3, 0, 0, 0, 0, 0, 3], -119880),
];
