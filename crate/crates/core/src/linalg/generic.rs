use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{EchelonBasis, Fp, PrimeFieldMatrix, DEFAULT_PRIME};
use crate::error::{Error, Result};

/// Seeded `n × n` matrix over `F_p` standing in for a generic matrix.
///
/// The same `(p, seed, n)` always gives the same matrix. Singular draws are
/// rejected and redrawn from the same stream. For `p > 100` every entry is
/// also nonzero, since some uses divide by individual entries.
#[derive(Debug, Clone)]
pub struct GenericMatrixSource {
    seed: u64,
    matrix: PrimeFieldMatrix,
}

impl GenericMatrixSource {
    pub fn new(field: Fp, seed: u64, n: usize) -> Self {
        let mut key = [0u8; 32];
        key[..8].copy_from_slice(&field.p().to_le_bytes());
        key[8..16].copy_from_slice(&seed.to_le_bytes());
        key[16..24].copy_from_slice(&(n as u64).to_le_bytes());
        let mut rng = ChaCha8Rng::from_seed(key);
        let low = u64::from(field.p() > 100);
        loop {
            let rows: Vec<Vec<u64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(low..field.p())).collect()).collect();
            let matrix = PrimeFieldMatrix::from_rows(field, n, &rows).expect("square");
            if matrix.rank() == n {
                return GenericMatrixSource { seed, matrix };
            }
        }
    }

    pub fn field(&self) -> Fp {
        self.matrix.field()
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &PrimeFieldMatrix {
        &self.matrix
    }

    /// `α_{ij}` with 1-based indices.
    #[inline]
    pub fn alpha(&self, i: u32, j: u32) -> u64 {
        self.matrix.get(i as usize - 1, j as usize - 1)
    }

    /// Row `i` (1-based) as the coefficients of `f_i = Σ_j α_{ij} e_j`.
    pub fn row(&self, i: u32) -> &[u64] {
        self.matrix.row(i as usize - 1)
    }

    /// Checks that the rows are independent (always true by construction).
    pub fn is_invertible(&self) -> bool {
        let mut b = EchelonBasis::new(self.field(), self.n());
        (0..self.n()).all(|r| b.insert(self.matrix.row(r).to_vec()))
    }
}

/// Parameters for the two-seed genericity protocol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericConfig {
    pub prime: u64,
    pub seeds: [u64; 2],
    pub max_retries: u32,
}

impl Default for GenericConfig {
    fn default() -> Self {
        GenericConfig { prime: DEFAULT_PRIME, seeds: [1, 2], max_retries: 3 }
    }
}

impl GenericConfig {
    pub fn with_prime(prime: u64) -> Self {
        GenericConfig { prime, ..Self::default() }
    }

    pub fn with_seed(self, seed: u64) -> Self {
        GenericConfig { seeds: [seed, seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(1)], ..self }
    }

    pub fn field(&self) -> Result<Fp> {
        Fp::new(self.prime)
    }
}

/// A value agreed on by two independent seeds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stable<T> {
    pub value: T,
    pub seeds: [u64; 2],
    pub attempts: u32,
}

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Runs `compute` under two seeds and returns the value if both agree.
///
/// Disagreement, or a [`Error::ClosureViolation`] or [`Error::NonGeneric`]
/// from either run, triggers a
/// retry with fresh seeds derived deterministically from the old ones; after
/// `max_retries` retries the run fails with [`Error::GenericInstability`].
pub fn stable_generic_run<T, F>(cfg: &GenericConfig, compute: F) -> Result<Stable<T>>
where
    T: PartialEq,
    F: Fn(u64) -> Result<T>,
{
    cfg.field()?;
    let mut seeds = cfg.seeds;
    for attempt in 0..=cfg.max_retries {
        let a = compute(seeds[0]);
        let b = compute(seeds[1]);
        match (a, b) {
            (Ok(x), Ok(y)) if x == y => return Ok(Stable { value: x, seeds, attempts: attempt + 1 }),
            (Err(e), _) | (_, Err(e)) if !matches!(e, Error::ClosureViolation(_) | Error::NonGeneric(_)) => {
                return Err(e)
            }
            _ => {}
        }
        seeds = [splitmix(seeds[0] ^ 0xA5A5), splitmix(seeds[1] ^ 0x5A5A)];
    }
    Err(Error::GenericInstability { attempts: cfg.max_retries + 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible_and_invertible() {
        let f = Fp::new(DEFAULT_PRIME).unwrap();
        let a = GenericMatrixSource::new(f, 5, 6);
        let b = GenericMatrixSource::new(f, 5, 6);
        assert_eq!(a.matrix(), b.matrix());
        assert!(a.is_invertible());
        assert_ne!(a.matrix(), GenericMatrixSource::new(f, 6, 6).matrix());
        let small = GenericMatrixSource::new(Fp::new(2).unwrap(), 0, 3);
        assert!(small.is_invertible());
    }

    #[test]
    fn protocol_outcomes() {
        let cfg = GenericConfig::default();
        let constant = stable_generic_run(&cfg, |_| Ok(42)).unwrap();
        assert_eq!(constant.value, 42);
        assert_eq!(constant.attempts, 1);

        let f = cfg.field().unwrap();
        let rank = stable_generic_run(&cfg, |s| Ok(GenericMatrixSource::new(f, s, 5).matrix().rank())).unwrap();
        assert_eq!(rank.value, 5);

        let unstable = stable_generic_run(&cfg, Ok);
        assert_eq!(unstable, Err(Error::GenericInstability { attempts: 4 }));

        let failing: Result<Stable<u8>> = stable_generic_run(&cfg, |_| Err(Error::NotShifted));
        assert_eq!(failing, Err(Error::NotShifted));
    }

    #[test]
    fn deterministic_given_seeds() {
        let cfg = GenericConfig::default().with_seed(17);
        let f = cfg.field().unwrap();
        let run = || stable_generic_run(&cfg, |s| Ok(GenericMatrixSource::new(f, s, 3).matrix().get(0, 0) % 2));
        assert_eq!(run(), run());
    }
}
