//! The classification tables, embedded as literal fixture data with their
//! citations so a failing check can name its source row.

/// A `(χ - 1, K²)` cell; tables are multisets (one entry per realizing
/// family of configurations).
pub type ChiKsqCell = (i64, i64);

/// Table of `(χ(S) - 1, K²_S)` for the line configurations with `n ≥ 2`:
/// one cell per `(n, delta1, delta2)` with `n + delta1 + delta2 ≤ 6`,
/// arranged by rows of constant `χ - 1`.
pub const MULTILINE_KSQ_TABLE: &[ChiKsqCell] = &[
    (4, 8),
    (3, 6),
    (3, 7),
    (3, 8),
    (2, 4),
    (2, 5),
    (2, 6),
    (2, 6),
    (2, 7),
    (2, 8),
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 4),
    (1, 5),
    (1, 5),
    (1, 6),
    (1, 6),
    (1, 7),
    (1, 8),
    (0, 0),
    (0, 1),
    (0, 2),
    (0, 2),
    (0, 3),
    (0, 3),
    (0, 4),
    (0, 4),
    (0, 4),
    (0, 5),
    (0, 5),
    (0, 6),
    (0, 6),
    (0, 7),
    (0, 8),
];

pub const MULTILINE_KSQ_CITATION: &str =
    "Prop. 4.4 table: chi-1 against K² = 8 - delta1 - 2*delta2 for n >= 2";

/// Table of `(χ(S) - 1, K²_S)` for `n ≤ 1` with `γ` an honest plane point:
/// the `n = 0` column and the two `n = 1` columns (`delta2 = 0` and
/// `delta2 = 1`).
pub const FEWLINE_KSQ_TABLE: &[ChiKsqCell] = &[
    (6, 8),
    (5, 7),
    (5, 8),
    (4, 6),
    (4, 6),
    (4, 7),
    (3, 5),
    (3, 5),
    (3, 6),
    (2, 4),
    (2, 4),
    (2, 5),
    (1, 3),
    (1, 3),
    (1, 4),
    (0, 2),
    (0, 2),
    (0, 3),
];

pub const FEWLINE_KSQ_CITATION: &str =
    "Prop. 4.7 table: chi-1 against K² for n <= 1 (the n = 1 columns follow Remark 4.6)";

/// `(K², admissible n values)` for `p_g = q = 0`.
pub const PG0_TABLE: &[(i64, &[u32])] = &[
    (2, &[0, 1, 2, 3]),
    (3, &[1, 2, 3]),
    (4, &[2, 3, 4]),
    (5, &[3, 4]),
    (6, &[4, 5]),
    (7, &[5]),
    (8, &[6]),
];

pub const PG0_CITATION: &str = "Prop. 5.3 table (p_g = 0): K² = 2..8 against n";

/// `(K², admissible n values)` for `p_g = 1, q = 0`.
pub const PG1_REGULAR_TABLE: &[(i64, &[u32])] = &[
    (2, &[2]),
    (3, &[0, 1, 2]),
    (4, &[1, 2, 3]),
    (5, &[2, 3]),
    (6, &[3, 4]),
    (7, &[4]),
    (8, &[5]),
];

pub const PG1_REGULAR_CITATION: &str = "Prop. 5.4 table (p_g = 1, q = 0): K² = 2..8 against n";

/// `(K², (n, delta1, delta2))` for `p_g = q = 1` with `7 ≤ K² ≤ 8`.
pub const IRREGULAR_TABLE: &[(i64, (u32, u32, u32))] = &[(7, (5, 1, 0)), (8, (6, 0, 0))];

pub const IRREGULAR_CITATION: &str =
    "Prop. 5.5 (p_g = q = 1): K² = 7 needs five lines and a [3,3]-point, K² = 8 six lines";
