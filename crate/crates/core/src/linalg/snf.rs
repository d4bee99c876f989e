use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `U · M · V = D` with `D` diagonal, `d_i | d_{i+1}`, and `U`, `V`
/// unimodular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub d: Vec<Vec<BigInt>>,
    pub u: Vec<Vec<BigInt>>,
    pub v: Vec<Vec<BigInt>>,
}

impl SmithForm {
    /// Nonzero diagonal entries, in order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.len().min(self.d.first().map_or(0, Vec::len)))
            .map(|i| self.d[i][i].clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

// row[a] -= q * row[b]
fn row_axpy(m: &mut [Vec<BigInt>], a: usize, b: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let (src, dst) = if a < b {
        let (lo, hi) = m.split_at_mut(b);
        (&hi[0], &mut lo[a])
    } else {
        let (lo, hi) = m.split_at_mut(a);
        (&lo[b], &mut hi[0])
    };
    for (x, y) in dst.iter_mut().zip(src.iter()) {
        *x -= q * y;
    }
}

fn col_axpy(m: &mut [Vec<BigInt>], a: usize, b: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for row in m.iter_mut() {
        let t = q * &row[b];
        row[a] -= t;
    }
}

fn col_swap(m: &mut [Vec<BigInt>], a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

fn col_negate(m: &mut [Vec<BigInt>], a: usize) {
    for row in m.iter_mut() {
        row[a] = -std::mem::take(&mut row[a]);
    }
}

/// Smith normal form of an integer matrix given by rows (all of length `cols`).
pub fn smith_normal_form(m: &[Vec<BigInt>], cols: usize) -> Result<SmithForm> {
    if m.iter().any(|r| r.len() != cols) {
        return Err(Error::DimensionMismatch("ragged integer matrix".into()));
    }
    let rows = m.len();
    let mut d: Vec<Vec<BigInt>> = m.to_vec();
    let mut u = identity(rows);
    let mut v = identity(cols);

    for t in 0..rows.min(cols) {
        // Pivot on the smallest nonzero entry of the trailing block.
        let Some((pr, pc)) = (t..rows)
            .flat_map(|r| (t..cols).map(move |c| (r, c)))
            .filter(|&(r, c)| !d[r][c].is_zero())
            .min_by(|&(a, b), &(c, e)| d[a][b].abs().cmp(&d[c][e].abs()))
        else {
            break;
        };
        d.swap(t, pr);
        u.swap(t, pr);
        col_swap(&mut d, t, pc);
        col_swap(&mut v, t, pc);

        loop {
            let mut changed = false;
            for r in t + 1..rows {
                if d[r][t].is_zero() {
                    continue;
                }
                let q = d[r][t].div_floor(&d[t][t]);
                row_axpy(&mut d, r, t, &q);
                row_axpy(&mut u, r, t, &q);
                if !d[r][t].is_zero() {
                    d.swap(t, r);
                    u.swap(t, r);
                    changed = true;
                }
            }
            for c in t + 1..cols {
                if d[t][c].is_zero() {
                    continue;
                }
                let q = d[t][c].div_floor(&d[t][t]);
                col_axpy(&mut d, c, t, &q);
                col_axpy(&mut v, c, t, &q);
                if !d[t][c].is_zero() {
                    col_swap(&mut d, t, c);
                    col_swap(&mut v, t, c);
                    changed = true;
                }
            }
            if changed {
                continue;
            }
            // Divisibility: fold an offending row into the pivot row.
            let bad = (t + 1..rows).find(|&r| (t + 1..cols).any(|c| !d[r][c].is_multiple_of(&d[t][t])));
            match bad {
                Some(r) => {
                    let minus_one = -BigInt::one();
                    row_axpy(&mut d, t, r, &minus_one);
                    row_axpy(&mut u, t, r, &minus_one);
                }
                None => break,
            }
        }
        if d[t][t].is_negative() {
            col_negate(&mut d, t);
            col_negate(&mut v, t);
        }
    }
    Ok(SmithForm { d, u, v })
}

/// Some integer `x` with `M x = b`, decided through the Smith normal form.
pub fn solve_integer(m: &[Vec<BigInt>], cols: usize, b: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    if b.len() != m.len() {
        return Err(Error::DimensionMismatch(format!("{} rows but right side of length {}", m.len(), b.len())));
    }
    let snf = smith_normal_form(m, cols)?;
    let ub: Vec<BigInt> = snf.u.iter().map(|row| row.iter().zip(b).map(|(x, y)| x * y).sum()).collect();
    let mut y = vec![BigInt::zero(); cols];
    for (i, c) in ub.iter().enumerate() {
        let di = if i < cols { &snf.d[i][i] } else { &BigInt::ZERO };
        if di.is_zero() {
            if !c.is_zero() {
                return Ok(None);
            }
        } else {
            let (q, r) = c.div_rem(di);
            if !r.is_zero() {
                return Ok(None);
            }
            y[i] = q;
        }
    }
    let x = snf.v.iter().map(|row| row.iter().zip(&y).map(|(a, b)| a * b).sum()).collect();
    Ok(Some(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn matmul(a: &[Vec<BigInt>], b: &[Vec<BigInt>], inner: usize, cols: usize) -> Vec<Vec<BigInt>> {
        a.iter().map(|row| (0..cols).map(|j| (0..inner).map(|k| &row[k] * &b[k][j]).sum()).collect()).collect()
    }

    #[test]
    fn diagonal_example() {
        let snf = smith_normal_form(&big(&[&[2, 0], &[0, 3]]), 2).unwrap();
        assert_eq!(snf.invariant_factors(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn integer_solving() {
        assert_eq!(solve_integer(&big(&[&[2]]), 1, &[BigInt::from(1)]).unwrap(), None);
        let b: Vec<BigInt> = [4, -7, 9].iter().map(|&x| BigInt::from(x)).collect();
        let id = big(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(solve_integer(&id, 3, &b).unwrap(), Some(b.clone()));
        assert!(solve_integer(&id, 3, &b[..2]).is_err());
    }

    proptest! {
        #[test]
        fn transforms_reproduce_the_diagonal(
            entries in proptest::collection::vec(-6i64..7, 12),
            rows in 1usize..5,
        ) {
            let cols = 12 / rows.max(1);
            let cols = cols.min(4);
            let m: Vec<Vec<BigInt>> = (0..rows)
                .map(|r| (0..cols).map(|c| BigInt::from(entries[(r * cols + c) % 12])).collect())
                .collect();
            let snf = smith_normal_form(&m, cols).unwrap();
            let umv = matmul(&matmul(&snf.u, &m, rows, cols), &snf.v, cols, cols);
            prop_assert_eq!(&umv, &snf.d);
            for i in 0..rows {
                for j in 0..cols {
                    if i != j {
                        prop_assert!(snf.d[i][j].is_zero());
                    }
                }
            }
            let f = snf.invariant_factors();
            for w in f.windows(2) {
                prop_assert!(w[1].is_multiple_of(&w[0]));
            }
        }

        #[test]
        fn solutions_are_solutions(entries in proptest::collection::vec(-4i64..5, 9), x0 in proptest::collection::vec(-3i64..4, 3)) {
            let m: Vec<Vec<BigInt>> = (0..3).map(|r| (0..3).map(|c| BigInt::from(entries[r * 3 + c])).collect()).collect();
            let x0: Vec<BigInt> = x0.into_iter().map(BigInt::from).collect();
            let b: Vec<BigInt> = m.iter().map(|row| row.iter().zip(&x0).map(|(a, b)| a * b).sum()).collect();
            let x = solve_integer(&m, 3, &b).unwrap().expect("b is in the image");
            let mx: Vec<BigInt> = m.iter().map(|row| row.iter().zip(&x).map(|(a, b)| a * b).sum()).collect();
            prop_assert_eq!(mx, b);
        }
    }
}
