//! Exact rank of sparse integer matrices by fraction-free row reduction.
//!
//! Each incoming row is cleared against stored pivots with integer
//! combinations `b*row - a*pivot`, then divided by its content, so entries
//! stay integral and small.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Sorted by column, no zero entries.
pub type SparseRow = Vec<(usize, BigInt)>;

#[derive(Debug, Clone)]
struct Reduced {
    row: SparseRow,
    /// Coefficients on the original rows; tracked only on request.
    combo: SparseRow,
}

/// Outcome of [`row_rank`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankOutcome {
    pub rank: usize,
    /// A nontrivial vanishing combination of input rows, if one was
    /// requested and exists.
    pub dependency: Option<SparseRow>,
}

/// `x*a - y*b` over sparse rows.
fn combine(x: &BigInt, a: &SparseRow, y: &BigInt, b: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        let (col, v) = if take_a {
            i += 1;
            (a[i - 1].0, x * &a[i - 1].1)
        } else if take_b {
            j += 1;
            (b[j - 1].0, -(y * &b[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (a[i - 1].0, x * &a[i - 1].1 - y * &b[j - 1].1)
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    out
}

fn content(rows: &[&SparseRow]) -> BigInt {
    let mut g = BigInt::zero();
    for row in rows {
        for (_, v) in row.iter() {
            g = g.gcd(v);
            if g == BigInt::from(1) {
                return g;
            }
        }
    }
    g
}

fn divide(row: &mut SparseRow, g: &BigInt) {
    for (_, v) in row.iter_mut() {
        *v /= g;
    }
}

/// Rank of the matrix whose rows are `rows`. With `track`, the first row
/// found dependent yields its vanishing combination.
pub fn row_rank(rows: &[SparseRow], track: bool) -> RankOutcome {
    let mut pivots: HashMap<usize, Reduced> = HashMap::new();
    let mut dependency = None;
    for (index, row) in rows.iter().enumerate() {
        let mut cur = Reduced {
            row: row.clone(),
            combo: if track {
                vec![(index, BigInt::from(1))]
            } else {
                Vec::new()
            },
        };
        while let Some((col, lead)) = cur.row.first().cloned() {
            let Some(pivot) = pivots.get(&col) else { break };
            let p_lead = &pivot.row[0].1;
            let g = lead.gcd(p_lead);
            let x = p_lead / &g;
            let y = &lead / &g;
            cur.row = combine(&x, &cur.row, &y, &pivot.row);
            if track {
                cur.combo = combine(&x, &cur.combo, &y, &pivot.combo);
            }
            let g = if track {
                content(&[&cur.row, &cur.combo])
            } else {
                content(&[&cur.row])
            };
            if g > BigInt::from(1) {
                divide(&mut cur.row, &g);
                divide(&mut cur.combo, &g);
            }
        }
        match cur.row.first() {
            None => {
                if track && dependency.is_none() {
                    dependency = Some(cur.combo);
                }
            }
            Some(&(col, ref lead)) => {
                if lead.is_negative() {
                    for (_, v) in cur.row.iter_mut().chain(cur.combo.iter_mut()) {
                        *v = -&*v;
                    }
                }
                pivots.insert(col, cur);
            }
        }
    }
    RankOutcome {
        rank: pivots.len(),
        dependency,
    }
}
