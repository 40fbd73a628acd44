//! Known values of the equivariant Chow polynomials for `n <= 6`,
//! used as golden data.

use std::collections::BTreeMap;

use crate::export::SchurTable;
use crate::partition::Partition;
use crate::poly::TPoly;

/// `(lambda, coefficients of t^0, t^1, ...)`.
type Row = (&'static [u32], &'static [i64]);

const ROWS: &[(usize, &[Row])] = &[
    (2, &[(&[2], &[1])]),
    (3, &[(&[3], &[1, 1])]),
    (4, &[(&[4], &[1, 3, 1]), (&[3, 1], &[0, 1]), (&[2, 2], &[0, 1])]),
    (5, &[(&[5], &[1, 5, 5, 1]), (&[4, 1], &[0, 4, 4]), (&[3, 2], &[0, 3, 3]), (&[2, 2, 1], &[0, 1, 1])]),
    (
        6,
        &[
            (&[6], &[1, 9, 19, 9, 1]),
            (&[5, 1], &[0, 7, 21, 7]),
            (&[4, 2], &[0, 9, 28, 9]),
            (&[4, 1, 1], &[0, 1, 7, 1]),
            (&[3, 3], &[0, 2, 8, 2]),
            (&[3, 2, 1], &[0, 2, 12, 2]),
            (&[3, 1, 1, 1], &[0, 0, 1]),
            (&[2, 2, 2], &[0, 2, 7, 2]),
            (&[2, 2, 1, 1], &[0, 0, 1]),
        ],
    ),
];

/// Schur coefficients of `H_n(t)` for `2 <= n <= 6`.
pub fn reference_tables() -> BTreeMap<usize, SchurTable> {
    ROWS.iter()
        .map(|(n, row)| {
            let table = row
                .iter()
                .map(|(lam, c)| (Partition::new(lam.to_vec()).expect("valid partition"), TPoly::from_ints(c)))
                .collect();
            (*n, table)
        })
        .collect()
}

pub const REFERENCE_MAX_N: usize = 6;
