//! Reference counts the table commands diff against. These are the
//! published values for the cubic Lehman catalogues; everything the desk
//! runs can reach is recomputed from scratch and compared.

/// Positive catalogue (k = 1): (n, s, l, l') with r = 3.
pub const POSITIVE_COUNTS: &[(usize, usize, usize, usize)] = &[
    (5, 2, 1, 1),
    (8, 3, 2, 2),
    (11, 4, 4, 4),
    (14, 5, 17, 18),
    (17, 6, 71, 98),
    (20, 7, 491, 785),
];

/// Negative catalogue (k = -1): (n, s, l, l') with r = 3.
pub const NEGATIVE_COUNTS: &[(usize, usize, usize, usize)] = &[
    (4, 1, 1, 1),
    (7, 2, 1, 1),
    (10, 3, 2, 2),
    (13, 4, 5, 5),
    (16, 5, 19, 21),
    (19, 6, 105, 154),
    (22, 7, 853, 1488),
];

/// Numbers of square minimally nonideal matrices among the positive
/// catalogue: (n, count).
pub const MNI_COUNTS: &[(usize, usize)] = &[(5, 1), (8, 2), (11, 4), (14, 9), (17, 4), (20, 0)];

pub fn expected_positive(n: usize) -> Option<(usize, usize)> {
    POSITIVE_COUNTS.iter().find(|row| row.0 == n).map(|row| (row.2, row.3))
}

pub fn expected_negative(n: usize) -> Option<(usize, usize)> {
    NEGATIVE_COUNTS.iter().find(|row| row.0 == n).map(|row| (row.2, row.3))
}

pub fn expected_mni(n: usize) -> Option<usize> {
    MNI_COUNTS.iter().find(|row| row.0 == n).map(|row| row.1)
}
