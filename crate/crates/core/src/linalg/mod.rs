//! Exact linear algebra over prime fields and the integers.

mod f2;
mod field;
mod generic;
mod snf;

pub use f2::{rank_f2, solve_f2, BitRow};
pub use field::{is_prime, Fp, DEFAULT_PRIME};
pub use generic::{stable_generic_run, GenericConfig, GenericMatrixSource, Stable};
pub use snf::{smith_normal_form, solve_integer, SmithForm};

use crate::error::{Error, Result};

/// Dense row-major matrix over `F_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeFieldMatrix {
    field: Fp,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl PrimeFieldMatrix {
    pub fn zeros(field: Fp, rows: usize, cols: usize) -> Self {
        PrimeFieldMatrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: Fp, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from rows, reducing every entry mod `p`.
    pub fn from_rows(field: Fp, cols: usize, rows: &[Vec<u64>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!("row of length {} in a {cols}-column matrix", r.len())));
            }
            data.extend(r.iter().map(|x| x % field.p()));
        }
        Ok(PrimeFieldMatrix { field, rows: rows.len(), cols, data })
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: u64) {
        self.data[r * self.cols + c] = x % self.field.p();
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = f.add(out.data[idx], f.mul(a, other.get(k, j)));
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn rank(&self) -> usize {
        let mut basis = EchelonBasis::new(self.field, self.cols);
        (0..self.rows).filter(|&r| basis.insert(self.row(r).to_vec())).count()
    }

    /// Some `x` with `M x = b`, if one exists.
    pub fn solve(&self, b: &[u64]) -> Result<Option<Vec<u64>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!("{} rows but right side of length {}", self.rows, b.len())));
        }
        let f = self.field;
        let w = self.cols + 1;
        let mut a: Vec<u64> = Vec::with_capacity(self.rows * w);
        for (r, &x) in b.iter().enumerate() {
            a.extend_from_slice(self.row(r));
            a.push(x % f.p());
        }
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            let Some(pr) = (row..self.rows).find(|&r| a[r * w + col] != 0) else { continue };
            for c in 0..w {
                a.swap(row * w + c, pr * w + c);
            }
            let inv = f.inv(a[row * w + col]);
            for c in 0..w {
                a[row * w + c] = f.mul(a[row * w + c], inv);
            }
            for r in 0..self.rows {
                if r != row && a[r * w + col] != 0 {
                    let factor = a[r * w + col];
                    for c in 0..w {
                        let sub = f.mul(factor, a[row * w + c]);
                        a[r * w + c] = f.sub(a[r * w + c], sub);
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == self.rows {
                break;
            }
        }
        if (row..self.rows).any(|r| a[r * w + self.cols] != 0) {
            return Ok(None);
        }
        let mut x = vec![0; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = a[r * w + self.cols];
        }
        Ok(Some(x))
    }

    /// Matrix-vector product.
    pub fn apply(&self, x: &[u64]) -> Vec<u64> {
        let f = self.field;
        (0..self.rows).map(|r| self.row(r).iter().zip(x).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))).collect()
    }
}

/// Outcome of offering a row to an [`EchelonBasis`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Insertion {
    Independent,
    Dependent,
}

/// Incrementally maintained row-echelon basis: every stored row has a
/// normalized pivot and is zero at the pivots of the rows stored before it.
#[derive(Debug, Clone)]
pub struct EchelonBasis {
    field: Fp,
    width: usize,
    rows: Vec<(usize, Vec<u64>)>,
}

impl EchelonBasis {
    pub fn new(field: Fp, width: usize) -> Self {
        EchelonBasis { field, width, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Reduces `row` against the basis in place; returns the first nonzero
    /// column of the residue.
    pub fn reduce(&self, row: &mut [u64]) -> Option<usize> {
        let f = self.field;
        for (pivot, b) in &self.rows {
            let factor = row[*pivot];
            if factor == 0 {
                continue;
            }
            for (x, &y) in row.iter_mut().zip(b.iter()).skip(*pivot) {
                if y != 0 {
                    *x = f.sub(*x, f.mul(factor, y));
                }
            }
        }
        row.iter().position(|&x| x != 0)
    }

    pub fn echelon_insert(&mut self, mut row: Vec<u64>) -> Result<Insertion> {
        if row.len() != self.width {
            return Err(Error::DimensionMismatch(format!("row of length {} for width {}", row.len(), self.width)));
        }
        let p = self.field.p();
        row.iter_mut().for_each(|x| *x %= p);
        Ok(if self.insert(row) { Insertion::Independent } else { Insertion::Dependent })
    }

    /// Adds `row` (entries already reduced, correct width) if it is
    /// independent of the basis; returns whether it was added.
    pub fn insert(&mut self, mut row: Vec<u64>) -> bool {
        debug_assert_eq!(row.len(), self.width);
        match self.reduce(&mut row) {
            None => false,
            Some(pivot) => {
                let f = self.field;
                let inv = f.inv(row[pivot]);
                row.iter_mut().skip(pivot).for_each(|x| *x = f.mul(*x, inv));
                self.rows.push((pivot, row));
                true
            }
        }
    }

    pub fn contains(&self, row: &[u64]) -> bool {
        let mut r = row.to_vec();
        self.reduce(&mut r).is_none()
    }
}

/// Result of a greedy independence scan over labelled candidate rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyScanReport<L> {
    pub candidates: Vec<L>,
    pub accepted: Vec<L>,
    pub rank: usize,
}

/// Scans `rows` in order, accepting each row that enlarges the span, and
/// stops early once `limit` rows are accepted.
pub fn greedy_scan<L: Clone, I>(field: Fp, width: usize, rows: I, limit: Option<usize>) -> GreedyScanReport<L>
where
    I: IntoIterator<Item = (L, Vec<u64>)>,
{
    let mut basis = EchelonBasis::new(field, width);
    let mut candidates = Vec::new();
    let mut accepted = Vec::new();
    for (label, row) in rows {
        if limit.is_some_and(|l| accepted.len() >= l) || basis.rank() == width {
            break;
        }
        candidates.push(label.clone());
        if basis.insert(row) {
            accepted.push(label);
        }
    }
    GreedyScanReport { candidates, rank: accepted.len(), accepted }
}

/// Determinant of a square matrix given row-major, by elimination.
pub fn determinant(field: Fp, size: usize, mut a: Vec<u64>) -> u64 {
    let f = field;
    let mut det = 1 % f.p();
    for col in 0..size {
        let Some(pr) = (col..size).find(|&r| a[r * size + col] != 0) else { return 0 };
        if pr != col {
            for c in 0..size {
                a.swap(col * size + c, pr * size + c);
            }
            det = f.neg(det);
        }
        let pivot = a[col * size + col];
        det = f.mul(det, pivot);
        let inv = f.inv(pivot);
        for r in col + 1..size {
            let factor = f.mul(a[r * size + col], inv);
            if factor == 0 {
                continue;
            }
            for c in col..size {
                let sub = f.mul(factor, a[col * size + c]);
                a[r * size + c] = f.sub(a[r * size + c], sub);
            }
        }
    }
    det
}

/// `det A[R, T]` for 0-based index lists; the empty minor is 1.
pub fn minor_det(a: &PrimeFieldMatrix, rows: &[usize], cols: &[usize]) -> Result<u64> {
    if rows.len() != cols.len() {
        return Err(Error::SizeMismatch(format!("{} rows and {} columns", rows.len(), cols.len())));
    }
    let k = rows.len();
    let mut sub = Vec::with_capacity(k * k);
    for &r in rows {
        for &c in cols {
            sub.push(a.get(r, c));
        }
    }
    Ok(determinant(a.field(), k, sub))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn f7() -> Fp {
        Fp::new(7).unwrap()
    }

    fn random_matrix(seed: u64, p: u64, rows: usize, cols: usize, zero_bias: bool) -> PrimeFieldMatrix {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let data: Vec<Vec<u64>> = (0..rows)
            .map(|_| (0..cols).map(|_| if zero_bias && rng.gen_bool(0.6) { 0 } else { rng.gen_range(0..p) }).collect())
            .collect();
        PrimeFieldMatrix::from_rows(Fp::new(p).unwrap(), cols, &data).unwrap()
    }

    // Laplace expansion along the first row, as an independent oracle.
    fn laplace(f: Fp, m: &[Vec<u64>]) -> u64 {
        if m.is_empty() {
            return 1;
        }
        let mut acc = 0;
        for j in 0..m.len() {
            let minor: Vec<Vec<u64>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, &x)| x).collect())
                .collect();
            let term = f.mul(m[0][j], laplace(f, &minor));
            acc = if j % 2 == 0 { f.add(acc, term) } else { f.sub(acc, term) };
        }
        acc
    }

    #[test]
    fn small_ranks() {
        assert_eq!(PrimeFieldMatrix::identity(f7(), 3).rank(), 3);
        assert_eq!(PrimeFieldMatrix::zeros(f7(), 3, 4).rank(), 0);
    }

    #[test]
    fn minors_of_identity() {
        let i = PrimeFieldMatrix::identity(f7(), 3);
        assert_eq!(minor_det(&i, &[], &[]).unwrap(), 1);
        assert_eq!(minor_det(&i, &[0, 1], &[0, 1]).unwrap(), 1);
        assert_eq!(minor_det(&i, &[0, 1], &[0, 2]).unwrap(), 0);
        assert!(minor_det(&i, &[0], &[0, 1]).is_err());
    }

    #[test]
    fn solves_coboundary_equations_over_f2() {
        let m = random_matrix(11, 2, 6, 5, false);
        let x0 = vec![1, 0, 1, 1, 0];
        let w = m.apply(&x0);
        let x = m.solve(&w).unwrap().expect("w is in the image");
        assert_eq!(m.apply(&x), w);
    }

    #[test]
    fn echelon_insert_reports_dependence() {
        let mut b = EchelonBasis::new(f7(), 3);
        assert_eq!(b.echelon_insert(vec![1, 2, 3]).unwrap(), Insertion::Independent);
        assert_eq!(b.echelon_insert(vec![2, 4, 6]).unwrap(), Insertion::Dependent);
        assert_eq!(b.echelon_insert(vec![0, 0, 1]).unwrap(), Insertion::Independent);
        assert!(b.echelon_insert(vec![1]).is_err());
    }

    proptest! {
        #[test]
        fn rank_of_transpose(seed in any::<u64>(), r in 1usize..7, c in 1usize..7) {
            let m = random_matrix(seed, 5, r, c, true);
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn determinant_matches_laplace(seed in any::<u64>(), k in 0usize..5) {
            let m = random_matrix(seed, 13, k, k, true);
            let rows: Vec<Vec<u64>> = (0..k).map(|r| m.row(r).to_vec()).collect();
            let idx: Vec<usize> = (0..k).collect();
            prop_assert_eq!(minor_det(&m, &idx, &idx).unwrap(), laplace(m.field(), &rows));
        }

        #[test]
        fn solve_finds_preimages(seed in any::<u64>(), r in 1usize..6, c in 1usize..6) {
            let m = random_matrix(seed, 3, r, c, true);
            let x0: Vec<u64> = (0..c as u64).map(|i| (seed >> i) % 3).collect();
            let b = m.apply(&x0);
            let x = m.solve(&b).unwrap().unwrap();
            prop_assert_eq!(m.apply(&x), b);
        }

        #[test]
        fn greedy_scan_rank(seed in any::<u64>()) {
            let m = random_matrix(seed, 7, 8, 5, true);
            let rows = (0..8).map(|r| (r, m.row(r).to_vec()));
            let report = greedy_scan(m.field(), 5, rows, None);
            prop_assert_eq!(report.rank, m.rank());
            prop_assert_eq!(report.accepted.len(), report.rank);
        }
    }
}
