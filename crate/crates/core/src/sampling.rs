//! Seeded random data used by the polynomial-identity test suites and by the
//! internal stabilization checks of the ordinary integrals.

use crate::{rat, Rat};
use rand::Rng;

/// Pairwise distinct integer weights of the given length, entries in
/// `[-bound, bound]`.
pub fn distinct_weights(rng: &mut impl Rng, len: usize, bound: i64) -> Vec<i64> {
    assert!(2 * bound + 1 >= len as i64, "bound too small for distinct weights");
    let mut ws: Vec<i64> = Vec::with_capacity(len);
    while ws.len() < len {
        let w = rng.gen_range(-bound..=bound);
        if !ws.contains(&w) {
            ws.push(w);
        }
    }
    ws
}

/// Pairwise distinct, trace-zero, nontrivial integer weights.
pub fn distinct_sl_weights(rng: &mut impl Rng, len: usize, bound: i64) -> Vec<i64> {
    assert!(len >= 2);
    loop {
        let mut ws = distinct_weights(rng, len - 1, bound);
        let last: i64 = -ws.iter().sum::<i64>();
        if ws.contains(&last) || last.abs() > bound {
            continue;
        }
        ws.push(last);
        return ws;
    }
}

/// Trace-zero nontrivial integer weights, repetitions allowed.
pub fn sl_weights(rng: &mut impl Rng, len: usize, bound: i64) -> Vec<i64> {
    assert!(len >= 2);
    loop {
        let mut ws: Vec<i64> = (0..len - 1).map(|_| rng.gen_range(-bound..=bound)).collect();
        let last: i64 = -ws.iter().sum::<i64>();
        if last.abs() > bound {
            continue;
        }
        ws.push(last);
        if ws.iter().any(|&w| w != ws[0]) {
            return ws;
        }
    }
}

/// A nonzero rational with numerator in `[-num_bound, num_bound]` and
/// denominator in `[1, den_bound]`.
pub fn rat_nonzero(rng: &mut impl Rng, num_bound: i64, den_bound: i64) -> Rat {
    let mut n = 0;
    while n == 0 {
        n = rng.gen_range(-num_bound..=num_bound);
    }
    rat(n, rng.gen_range(1..=den_bound))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn sl_weights_are_traceless_and_nontrivial() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let ws = distinct_sl_weights(&mut rng, 5, 10);
            assert_eq!(ws.iter().sum::<i64>(), 0);
            let mut sorted = ws.clone();
            sorted.dedup();
            assert_eq!(sorted.len(), ws.len());
        }
        for _ in 0..50 {
            let ws = sl_weights(&mut rng, 4, 6);
            assert_eq!(ws.iter().sum::<i64>(), 0);
            assert!(ws.iter().any(|&w| w != ws[0]));
        }
    }
}
