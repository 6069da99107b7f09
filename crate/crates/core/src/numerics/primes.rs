use crate::error::{Error, Result};

/// All primes up to `bound`, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeList {
    pub bound: u64,
    pub primes: Vec<u64>,
}

impl PrimeList {
    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.primes.iter().copied()
    }
}

/// Sieve of Eratosthenes over odd numbers.
pub fn primes_up_to(n: u64) -> Result<PrimeList> {
    if n < 2 {
        return Err(Error::domain(format!("primes_up_to needs n >= 2, got {n}")));
    }
    // index i stands for 2i+1
    let half = ((n - 1) / 2 + 1) as usize;
    let mut composite = vec![false; half];
    composite[0] = true; // 1
    let mut i = 1usize;
    while {
        let p = 2 * i as u64 + 1;
        p * p <= n
    } {
        if !composite[i] {
            let p = 2 * i + 1;
            let mut j = (p * p) / 2;
            while j < half {
                composite[j] = true;
                j += p;
            }
        }
        i += 1;
    }
    let mut primes = Vec::with_capacity(estimate_count(n));
    primes.push(2);
    primes.extend(
        composite
            .iter()
            .enumerate()
            .filter(|(_, &c)| !c)
            .map(|(k, _)| 2 * k as u64 + 1)
            .filter(|&p| p <= n),
    );
    Ok(PrimeList { bound: n, primes })
}

fn estimate_count(n: u64) -> usize {
    let x = n as f64;
    (1.3 * x / x.ln().max(1.0)) as usize + 8
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division(n: u64) -> Vec<u64> {
        (2..=n)
            .filter(|&k| (2..k).take_while(|d| d * d <= k).all(|d| k % d != 0))
            .collect()
    }

    #[test]
    fn small_bounds() {
        assert_eq!(primes_up_to(10).unwrap().primes, vec![2, 3, 5, 7]);
        assert_eq!(primes_up_to(2).unwrap().primes, vec![2]);
        assert_eq!(primes_up_to(3).unwrap().primes, vec![2, 3]);
        assert!(primes_up_to(1).is_err());
        assert!(primes_up_to(0).is_err());
    }

    #[test]
    fn matches_trial_division() {
        let hundred = primes_up_to(100).unwrap();
        assert_eq!(hundred.len(), 25);
        assert_eq!(hundred.primes, trial_division(100));
        for n in 2..300 {
            assert_eq!(primes_up_to(n).unwrap().primes, trial_division(n), "n={n}");
        }
    }

    #[test]
    fn prime_counting_checkpoints() {
        assert_eq!(primes_up_to(1_000_000).unwrap().len(), 78_498);
    }
}
