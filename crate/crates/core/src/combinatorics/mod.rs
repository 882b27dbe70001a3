//! Shared combinatorial subroutines.

pub mod cliques;
pub mod flow;
pub mod matching;
pub mod sunflower;
pub mod vclp;

use num_bigint::BigUint;
use num_traits::One;

pub use cliques::{clique_number, count_maximal_cliques, max_clique, maximal_cliques};
pub use matching::{is_induced_matching, is_matching, maximum_matching, Matching};
pub use sunflower::{find_sunflower, Sunflower};
pub use vclp::{vclp_half_integral, HalfIntegralSolution};

/// Exact binomial coefficient; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Sum of `C(n, i)` for `i` in `0..=upto`.
pub fn binomial_prefix_sum(n: u64, upto: u64) -> BigUint {
    (0..=upto).map(|i| binomial(n, i)).sum()
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials_match_pascal() {
        for n in 0..20u64 {
            for k in 1..=n {
                assert_eq!(binomial(n + 1, k), binomial(n, k) + binomial(n, k - 1));
            }
            assert_eq!(binomial(n, n + 1), BigUint::default());
        }
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial_prefix_sum(4, 4), BigUint::from(16u32));
        assert_eq!(factorial(5), BigUint::from(120u32));
    }
}
