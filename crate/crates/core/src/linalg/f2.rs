//! Bit-packed linear algebra over `F_2`.

/// A row over `F_2`, one bit per column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitRow {
    words: Vec<u64>,
}

impl BitRow {
    pub fn zeros(cols: usize) -> Self {
        BitRow { words: vec![0; cols.div_ceil(64)] }
    }

    pub fn get(&self, c: usize) -> bool {
        self.words[c / 64] >> (c % 64) & 1 == 1
    }

    pub fn flip(&mut self, c: usize) {
        self.words[c / 64] ^= 1 << (c % 64);
    }

    fn xor_with(&mut self, other: &BitRow) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    fn first_one(&self) -> Option<usize> {
        self.words.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }
}

/// Some `x` with `A x = b` over `F_2`, where `rows[i]` is row `i` of `A`.
pub fn solve_f2(rows: &[BitRow], cols: usize, b: &[bool]) -> Option<Vec<bool>> {
    assert_eq!(rows.len(), b.len(), "one right-hand side per row");
    // Column `cols` of the augmented row holds the right-hand side.
    let mut aug: Vec<BitRow> = rows
        .iter()
        .zip(b)
        .map(|(r, &rhs)| {
            let mut row = BitRow::zeros(cols + 1);
            row.words[..r.words.len()].copy_from_slice(&r.words);
            if rhs {
                row.flip(cols);
            }
            row
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut next = 0;
    for c in 0..cols {
        let Some(p) = (next..aug.len()).find(|&r| aug[r].get(c)) else { continue };
        aug.swap(next, p);
        let pivot = aug[next].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r != next && row.get(c) {
                row.xor_with(&pivot);
            }
        }
        pivots.push((next, c));
        next += 1;
    }
    if aug[next..].iter().any(|r| r.first_one() == Some(cols)) {
        return None;
    }
    let mut x = vec![false; cols];
    for (r, c) in pivots {
        x[c] = aug[r].get(cols);
    }
    Some(x)
}

/// Rank over `F_2`.
pub fn rank_f2(rows: &[BitRow]) -> usize {
    let mut basis: Vec<BitRow> = Vec::new();
    let mut leads: Vec<usize> = Vec::new();
    for row in rows {
        let mut r = row.clone();
        while let Some(lead) = r.first_one() {
            match leads.iter().position(|&l| l == lead) {
                Some(i) => r.xor_with(&basis[i]),
                None => {
                    basis.push(r);
                    leads.push(lead);
                    break;
                }
            }
        }
    }
    basis.len()
}
