//! Closed-form polynomial tables in the graph coefficients a2..a8, b2..b8.
//!
//! Exponent layout: indices 0..6 are a2..a8, indices 7..13 are b2..b8.
//! Q denotes a2^2 + b2^2 throughout.

use super::AbTerm;

/// Numerator of kappa_1 = kappa_0 * KAPPA1_NUM / Q^1.
pub const KAPPA1_NUM: &[AbTerm] = &[
    AbTerm { c: 3.0, e: [1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: 3.0, e: [0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0] },
];

/// Numerator of kappa_2 = kappa_0 * KAPPA2_NUM / Q^2.
pub const KAPPA2_NUM: &[AbTerm] = &[
    AbTerm { c: -12.0, e: [6, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: -36.0, e: [4, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: 12.0, e: [3, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: -36.0, e: [2, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: 12.0, e: [2, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0] },
    AbTerm { c: 9.0, e: [2, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0] },
    AbTerm { c: -18.0, e: [1, 1, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0] },
    AbTerm { c: 12.0, e: [1, 0, 1, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: 9.0, e: [0, 2, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: -12.0, e: [0, 0, 0, 0, 0, 0, 0, 6, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: 12.0, e: [0, 0, 0, 0, 0, 0, 0, 3, 0, 1, 0, 0, 0, 0] },
];

/// Numerator of kappa_3 = kappa_0 * KAPPA3_NUM / Q^3.
pub const KAPPA3_NUM: &[AbTerm] = &[
    AbTerm { c: -228.0, e: [7, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: -228.0, e: [6, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0] },
    AbTerm { c: -684.0, e: [5, 1, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: 60.0, e: [5, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: -684.0, e: [4, 0, 0, 0, 0, 0, 0, 3, 1, 0, 0, 0, 0, 0] },
    AbTerm { c: 60.0, e: [4, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0] },
    AbTerm { c: 108.0, e: [4, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0] },
    AbTerm { c: -684.0, e: [3, 1, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: -108.0, e: [3, 1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0] },
    AbTerm { c: -81.0, e: [3, 1, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0] },
    AbTerm { c: -108.0, e: [3, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0] },
    AbTerm { c: 120.0, e: [3, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: 162.0, e: [2, 2, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0] },
    AbTerm { c: 108.0, e: [2, 1, 1, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: -684.0, e: [2, 0, 0, 0, 0, 0, 0, 5, 1, 0, 0, 0, 0, 0] },
    AbTerm { c: 120.0, e: [2, 0, 0, 0, 0, 0, 0, 3, 0, 0, 1, 0, 0, 0] },
    AbTerm { c: 108.0, e: [2, 0, 0, 0, 0, 0, 0, 2, 1, 1, 0, 0, 0, 0] },
    AbTerm { c: -81.0, e: [2, 0, 0, 0, 0, 0, 0, 1, 3, 0, 0, 0, 0, 0] },
    AbTerm { c: -81.0, e: [1, 3, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: -228.0, e: [1, 1, 0, 0, 0, 0, 0, 6, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: -108.0, e: [1, 1, 0, 0, 0, 0, 0, 3, 0, 1, 0, 0, 0, 0] },
    AbTerm { c: 162.0, e: [1, 1, 0, 0, 0, 0, 0, 2, 2, 0, 0, 0, 0, 0] },
    AbTerm { c: -108.0, e: [1, 0, 1, 0, 0, 0, 0, 3, 1, 0, 0, 0, 0, 0] },
    AbTerm { c: 60.0, e: [1, 0, 0, 1, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: -81.0, e: [0, 2, 0, 0, 0, 0, 0, 3, 1, 0, 0, 0, 0, 0] },
    AbTerm { c: 108.0, e: [0, 1, 1, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: -228.0, e: [0, 0, 0, 0, 0, 0, 0, 7, 1, 0, 0, 0, 0, 0] },
    AbTerm { c: 60.0, e: [0, 0, 0, 0, 0, 0, 0, 5, 0, 0, 1, 0, 0, 0] },
];

/// Numerator of tau_0 = TAU0_NUM / Q^1.
pub const TAU0_NUM: &[AbTerm] = &[
    AbTerm { c: 3.0, e: [1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0] },
    AbTerm { c: -3.0, e: [0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0] },
];

/// Numerator of tau_1 = TAU1_NUM / Q^2.
pub const TAU1_NUM: &[AbTerm] = &[
    AbTerm { c: 12.0, e: [3, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0] },
    AbTerm { c: -18.0, e: [2, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0] },
    AbTerm { c: -12.0, e: [2, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: 18.0, e: [1, 2, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: 12.0, e: [1, 0, 0, 0, 0, 0, 0, 2, 0, 1, 0, 0, 0, 0] },
    AbTerm { c: -18.0, e: [1, 0, 0, 0, 0, 0, 0, 1, 2, 0, 0, 0, 0, 0] },
    AbTerm { c: 18.0, e: [0, 1, 0, 0, 0, 0, 0, 2, 1, 0, 0, 0, 0, 0] },
    AbTerm { c: -12.0, e: [0, 0, 1, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0, 0] },
];

/// Numerator of tau_2 = TAU2_NUM / Q^3.
pub const TAU2_NUM: &[AbTerm] = &[
    AbTerm { c: 60.0, e: [5, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0] },
    AbTerm { c: -108.0, e: [4, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0] },
    AbTerm { c: -108.0, e: [4, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0] },
    AbTerm { c: -60.0, e: [4, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: 162.0, e: [3, 2, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0] },
    AbTerm { c: 216.0, e: [3, 1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: 120.0, e: [3, 0, 0, 0, 0, 0, 0, 2, 0, 0, 1, 0, 0, 0] },
    AbTerm { c: -216.0, e: [3, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0] },
    AbTerm { c: -54.0, e: [3, 0, 0, 0, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0] },
    AbTerm { c: -162.0, e: [2, 3, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: 486.0, e: [2, 1, 0, 0, 0, 0, 0, 1, 2, 0, 0, 0, 0, 0] },
    AbTerm { c: -120.0, e: [2, 0, 0, 1, 0, 0, 0, 3, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: -486.0, e: [1, 2, 0, 0, 0, 0, 0, 2, 1, 0, 0, 0, 0, 0] },
    AbTerm { c: 216.0, e: [1, 1, 1, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: 60.0, e: [1, 0, 0, 0, 0, 0, 0, 4, 0, 0, 1, 0, 0, 0] },
    AbTerm { c: -216.0, e: [1, 0, 0, 0, 0, 0, 0, 3, 1, 1, 0, 0, 0, 0] },
    AbTerm { c: 162.0, e: [1, 0, 0, 0, 0, 0, 0, 2, 3, 0, 0, 0, 0, 0] },
    AbTerm { c: 54.0, e: [0, 3, 0, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: 108.0, e: [0, 1, 0, 0, 0, 0, 0, 4, 0, 1, 0, 0, 0, 0] },
    AbTerm { c: -162.0, e: [0, 1, 0, 0, 0, 0, 0, 3, 2, 0, 0, 0, 0, 0] },
    AbTerm { c: 108.0, e: [0, 0, 1, 0, 0, 0, 0, 4, 1, 0, 0, 0, 0, 0] },
    AbTerm { c: -60.0, e: [0, 0, 0, 1, 0, 0, 0, 5, 0, 0, 0, 0, 0, 0] },
];

/// Numerator of tau_3 = TAU3_NUM / Q^4.
pub const TAU3_NUM: &[AbTerm] = &[
    AbTerm { c: -48.0, e: [9, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0] },
    AbTerm { c: 72.0, e: [8, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0] },
    AbTerm { c: 48.0, e: [8, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: -72.0, e: [7, 2, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: -192.0, e: [7, 0, 0, 0, 0, 0, 0, 2, 0, 1, 0, 0, 0, 0] },
    AbTerm { c: 72.0, e: [7, 0, 0, 0, 0, 0, 0, 1, 2, 0, 0, 0, 0, 0] },
    AbTerm { c: 360.0, e: [7, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0] },
    AbTerm { c: 144.0, e: [6, 1, 0, 0, 0, 0, 0, 2, 1, 0, 0, 0, 0, 0] },
    AbTerm { c: -720.0, e: [6, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0] },
    AbTerm { c: 192.0, e: [6, 0, 1, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: -864.0, e: [6, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0] },
    AbTerm { c: -720.0, e: [6, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0] },
    AbTerm { c: -360.0, e: [6, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: -216.0, e: [5, 2, 0, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: 1296.0, e: [5, 2, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0] },
    AbTerm { c: 2592.0, e: [5, 1, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0] },
    AbTerm { c: 1440.0, e: [5, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: 864.0, e: [5, 0, 2, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: -288.0, e: [5, 0, 0, 0, 0, 0, 0, 4, 0, 1, 0, 0, 0, 0] },
    AbTerm { c: 216.0, e: [5, 0, 0, 0, 0, 0, 0, 3, 2, 0, 0, 0, 0, 0] },
    AbTerm { c: 1080.0, e: [5, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0] },
    AbTerm { c: -1440.0, e: [5, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 0, 0] },
    AbTerm { c: -864.0, e: [5, 0, 0, 0, 0, 0, 0, 1, 0, 2, 0, 0, 0, 0] },
    AbTerm { c: -1296.0, e: [5, 0, 0, 0, 0, 0, 0, 0, 2, 1, 0, 0, 0, 0] },
    AbTerm { c: -1944.0, e: [4, 3, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0] },
    AbTerm { c: -3888.0, e: [4, 2, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: -720.0, e: [4, 1, 0, 0, 0, 0, 0, 2, 0, 0, 1, 0, 0, 0] },
    AbTerm { c: 7776.0, e: [4, 1, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0] },
    AbTerm { c: 1944.0, e: [4, 1, 0, 0, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0] },
    AbTerm { c: 288.0, e: [4, 0, 1, 0, 0, 0, 0, 5, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: -864.0, e: [4, 0, 1, 0, 0, 0, 0, 2, 0, 1, 0, 0, 0, 0] },
    AbTerm { c: 3888.0, e: [4, 0, 1, 0, 0, 0, 0, 1, 2, 0, 0, 0, 0, 0] },
    AbTerm { c: -720.0, e: [4, 0, 0, 1, 0, 0, 0, 2, 1, 0, 0, 0, 0, 0] },
    AbTerm { c: -1080.0, e: [4, 0, 0, 0, 1, 0, 0, 3, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: 1944.0, e: [3, 4, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: -216.0, e: [3, 2, 0, 0, 0, 0, 0, 5, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: -2592.0, e: [3, 2, 0, 0, 0, 0, 0, 2, 0, 1, 0, 0, 0, 0] },
    AbTerm { c: -11664.0, e: [3, 2, 0, 0, 0, 0, 0, 1, 2, 0, 0, 0, 0, 0] },
    AbTerm { c: -5184.0, e: [3, 1, 1, 0, 0, 0, 0, 2, 1, 0, 0, 0, 0, 0] },
    AbTerm { c: 2880.0, e: [3, 1, 0, 1, 0, 0, 0, 3, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: 1728.0, e: [3, 0, 2, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: -192.0, e: [3, 0, 0, 0, 0, 0, 0, 6, 0, 1, 0, 0, 0, 0] },
    AbTerm { c: 216.0, e: [3, 0, 0, 0, 0, 0, 0, 5, 2, 0, 0, 0, 0, 0] },
    AbTerm { c: 1080.0, e: [3, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 1, 0, 0] },
    AbTerm { c: -2880.0, e: [3, 0, 0, 0, 0, 0, 0, 3, 1, 0, 1, 0, 0, 0] },
    AbTerm { c: -1728.0, e: [3, 0, 0, 0, 0, 0, 0, 3, 0, 2, 0, 0, 0, 0] },
    AbTerm { c: 2592.0, e: [3, 0, 0, 0, 0, 0, 0, 2, 2, 1, 0, 0, 0, 0] },
    AbTerm { c: 1944.0, e: [3, 0, 0, 0, 0, 0, 0, 1, 4, 0, 0, 0, 0, 0] },
    AbTerm { c: 11664.0, e: [2, 3, 0, 0, 0, 0, 0, 2, 1, 0, 0, 0, 0, 0] },
    AbTerm { c: -2592.0, e: [2, 2, 1, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: -144.0, e: [2, 1, 0, 0, 0, 0, 0, 6, 1, 0, 0, 0, 0, 0] },
    AbTerm { c: 720.0, e: [2, 1, 0, 0, 0, 0, 0, 4, 0, 0, 1, 0, 0, 0] },
    AbTerm { c: 5184.0, e: [2, 1, 0, 0, 0, 0, 0, 3, 1, 1, 0, 0, 0, 0] },
    AbTerm { c: -11664.0, e: [2, 1, 0, 0, 0, 0, 0, 2, 3, 0, 0, 0, 0, 0] },
    AbTerm { c: 192.0, e: [2, 0, 1, 0, 0, 0, 0, 7, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: 864.0, e: [2, 0, 1, 0, 0, 0, 0, 4, 0, 1, 0, 0, 0, 0] },
    AbTerm { c: 2592.0, e: [2, 0, 1, 0, 0, 0, 0, 3, 2, 0, 0, 0, 0, 0] },
    AbTerm { c: 720.0, e: [2, 0, 0, 1, 0, 0, 0, 4, 1, 0, 0, 0, 0, 0] },
    AbTerm { c: -1080.0, e: [2, 0, 0, 0, 1, 0, 0, 5, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: -1944.0, e: [1, 4, 0, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: -72.0, e: [1, 2, 0, 0, 0, 0, 0, 7, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: -3888.0, e: [1, 2, 0, 0, 0, 0, 0, 4, 0, 1, 0, 0, 0, 0] },
    AbTerm { c: 11664.0, e: [1, 2, 0, 0, 0, 0, 0, 3, 2, 0, 0, 0, 0, 0] },
    AbTerm { c: -7776.0, e: [1, 1, 1, 0, 0, 0, 0, 4, 1, 0, 0, 0, 0, 0] },
    AbTerm { c: 1440.0, e: [1, 1, 0, 1, 0, 0, 0, 5, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: 864.0, e: [1, 0, 2, 0, 0, 0, 0, 5, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: -48.0, e: [1, 0, 0, 0, 0, 0, 0, 8, 0, 1, 0, 0, 0, 0] },
    AbTerm { c: 72.0, e: [1, 0, 0, 0, 0, 0, 0, 7, 2, 0, 0, 0, 0, 0] },
    AbTerm { c: 360.0, e: [1, 0, 0, 0, 0, 0, 0, 6, 0, 0, 0, 1, 0, 0] },
    AbTerm { c: -1440.0, e: [1, 0, 0, 0, 0, 0, 0, 5, 1, 0, 1, 0, 0, 0] },
    AbTerm { c: -864.0, e: [1, 0, 0, 0, 0, 0, 0, 5, 0, 2, 0, 0, 0, 0] },
    AbTerm { c: 3888.0, e: [1, 0, 0, 0, 0, 0, 0, 4, 2, 1, 0, 0, 0, 0] },
    AbTerm { c: -1944.0, e: [1, 0, 0, 0, 0, 0, 0, 3, 4, 0, 0, 0, 0, 0] },
    AbTerm { c: -1944.0, e: [0, 3, 0, 0, 0, 0, 0, 4, 1, 0, 0, 0, 0, 0] },
    AbTerm { c: 1296.0, e: [0, 2, 1, 0, 0, 0, 0, 5, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: -72.0, e: [0, 1, 0, 0, 0, 0, 0, 8, 1, 0, 0, 0, 0, 0] },
    AbTerm { c: 720.0, e: [0, 1, 0, 0, 0, 0, 0, 6, 0, 0, 1, 0, 0, 0] },
    AbTerm { c: -2592.0, e: [0, 1, 0, 0, 0, 0, 0, 5, 1, 1, 0, 0, 0, 0] },
    AbTerm { c: 1944.0, e: [0, 1, 0, 0, 0, 0, 0, 4, 3, 0, 0, 0, 0, 0] },
    AbTerm { c: 48.0, e: [0, 0, 1, 0, 0, 0, 0, 9, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: 864.0, e: [0, 0, 1, 0, 0, 0, 0, 6, 0, 1, 0, 0, 0, 0] },
    AbTerm { c: -1296.0, e: [0, 0, 1, 0, 0, 0, 0, 5, 2, 0, 0, 0, 0, 0] },
    AbTerm { c: 720.0, e: [0, 0, 0, 1, 0, 0, 0, 6, 1, 0, 0, 0, 0, 0] },
    AbTerm { c: -360.0, e: [0, 0, 0, 0, 1, 0, 0, 7, 0, 0, 0, 0, 0, 0] },
];

/// Single-layer pointwise residue at s = -1.
pub const RES_SINGLE_M1: &[AbTerm] = &[
    AbTerm { c: 2.0, e: [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0] },
];

/// Single-layer pointwise residue at s = -3.
pub const RES_SINGLE_M3: &[AbTerm] = &[
    AbTerm { c: 1.0, e: [2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: 1.0, e: [0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0] },
];

/// Single-layer pointwise residue at s = -5.
pub const RES_SINGLE_M5: &[AbTerm] = &[
    AbTerm { c: -5.25, e: [4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: -10.5, e: [2, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: 6.0, e: [1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: 4.0, e: [0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: -5.25, e: [0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: 6.0, e: [0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0] },
    AbTerm { c: 4.0, e: [0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0] },
];

/// Mean-curvature-term pointwise residue at s = +1.
pub const RES_COAXIAL_P1: &[AbTerm] = &[
    AbTerm { c: -8.0, e: [2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: -8.0, e: [0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0] },
];

/// Mean-curvature-term pointwise residue at s = -1.
pub const RES_COAXIAL_M1: &[AbTerm] = &[
    AbTerm { c: -36.0, e: [4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: -72.0, e: [2, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: 48.0, e: [1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: -36.0, e: [0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0] },
    AbTerm { c: 48.0, e: [0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0] },
];
