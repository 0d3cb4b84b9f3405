//! Zig-zag traversal of the 8x8 frequency grid.

use crate::error::{Error, Result};

use super::tables::QuantTable;

/// The standard JPEG zig-zag scan order as (row, col) positions, low to high
/// frequency.
pub const ZIGZAG: [(usize, usize); 64] = [
    (0, 0), (0, 1), (1, 0), (2, 0), (1, 1), (0, 2), (0, 3), (1, 2),
    (2, 1), (3, 0), (4, 0), (3, 1), (2, 2), (1, 3), (0, 4), (0, 5),
    (1, 4), (2, 3), (3, 2), (4, 1), (5, 0), (6, 0), (5, 1), (4, 2),
    (3, 3), (2, 4), (1, 5), (0, 6), (0, 7), (1, 6), (2, 5), (3, 4),
    (4, 3), (5, 2), (6, 1), (7, 0), (7, 1), (6, 2), (5, 3), (4, 4),
    (3, 5), (2, 6), (1, 7), (2, 7), (3, 6), (4, 5), (5, 4), (6, 3),
    (7, 2), (7, 3), (6, 4), (5, 5), (4, 6), (3, 7), (4, 7), (5, 6),
    (6, 5), (7, 4), (7, 5), (6, 6), (5, 7), (6, 7), (7, 6), (7, 7),
];

/// Returns the first `n` entries of the table in zig-zag order.
pub fn zigzag_scan(table: &QuantTable, n: usize) -> Result<Vec<u16>> {
    if n < 1 || n > 64 {
        return Err(Error::ZigzagCountOutOfRange(n));
    }
    Ok(ZIGZAG[..n]
        .iter()
        .map(|&(r, c)| table.steps[r][c])
        .collect())
}
