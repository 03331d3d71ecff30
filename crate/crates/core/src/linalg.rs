//! Exact linear algebra over a [`Scalar`] domain.

use crate::field::Scalar;

/// Solves `A x = b` for an `m x n` matrix by Gaussian elimination. Returns
/// one solution (free variables set to zero) or `None` when inconsistent.
pub fn solve<S: Scalar>(ctx: &S::Ctx, a: &[Vec<S>], b: &[S]) -> Option<Vec<S>> {
    let m = a.len();
    let n = a.first().map_or(0, |r| r.len());
    let mut rows: Vec<Vec<S>> = a
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut row = r.clone();
            row.push(bi.clone());
            row
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&k| !rows[k][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        rows[r] = rows[r].iter().map(|x| x.mul(&inv)).collect();
        for k in 0..m {
            if k != r && !rows[k][c].is_zero() {
                let f = rows[k][c].clone();
                let pivot_row = rows[r].clone();
                rows[k] = rows[k].iter().zip(&pivot_row).map(|(x, y)| x.sub(&f.mul(y))).collect();
            }
        }
        pivots.push((r, c));
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut x = vec![S::zero(ctx); n];
    for (r, c) in pivots {
        x[c] = rows[r][n].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldElement;

    fn f(c: i128) -> FieldElement {
        FieldElement::integer(c)
    }

    #[test]
    fn small_systems() {
        let a = vec![vec![f(1), f(2)], vec![f(3), f(4)]];
        let x = solve(&(), &a, &[f(5), f(6)]).unwrap();
        assert_eq!(x, vec![f(-4), FieldElement::rational(9, 2)]);
        let singular = vec![vec![f(1), f(1)], vec![f(2), f(2)]];
        assert!(solve(&(), &singular, &[f(1), f(3)]).is_none());
        assert!(solve(&(), &singular, &[f(1), f(2)]).is_some());
    }
}
