//! Littlewood-Richardson coefficients by two independent rules, and products
//! of several Schur functions via chain sums.

use std::collections::{BTreeMap, HashMap};
use std::sync::{LazyLock, Mutex};

use crate::partition::{partitions_of, Partition};
use crate::tableau::cst::{enumerate_cst, enumerate_fillings, FillConstraints};
use crate::tableau::skew::{SkewShape, SkewTableau};
use crate::word::LatticeCounter;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LrMethod {
    /// Pairs (S, T) of straight tableaux of shapes (lambda, mu) whose
    /// concatenated reading word is lattice of content nu.
    LatticePair,
    /// Column-strict fillings of nu/mu that rectify to the superstandard
    /// tableau of shape lambda.
    Jdt,
}

/// The coefficient of `s_nu` in `s_lambda * s_mu`; 0 when the sizes do not
/// add up.
pub fn lr_coefficient(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    method: LrMethod,
) -> u64 {
    if lambda.size() + mu.size() != nu.size() {
        return 0;
    }
    match method {
        LrMethod::LatticePair => lattice_pair_count(lambda, mu, nu),
        LrMethod::Jdt => jdt_count(lambda, mu, nu),
    }
}

fn lattice_pair_count(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let max_letter = nu.len() as u32;
    let nu_counts: Vec<u32> = nu.parts().to_vec();
    let first = enumerate_fillings(
        &SkewShape::straight(lambda.clone()),
        FillConstraints {
            max_letter,
            exact: None,
            bound: Some(&nu_counts),
            lattice: Some(LatticeCounter::new(max_letter)),
        },
    );
    let mut total = 0u64;
    for s in &first {
        let mut second_content = nu_counts.clone();
        let mut carried = vec![0u32; max_letter as usize];
        for (i, &c) in s.content().iter().enumerate() {
            second_content[i] -= c;
            carried[i] = c;
        }
        total += enumerate_fillings(
            &SkewShape::straight(mu.clone()),
            FillConstraints {
                max_letter,
                exact: Some(&second_content),
                bound: None,
                lattice: Some(LatticeCounter::with_counts(carried)),
            },
        )
        .len() as u64;
    }
    total
}

fn jdt_count(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let shape = match SkewShape::new(nu.clone(), mu.clone()) {
        Ok(shape) => shape,
        Err(_) => return 0,
    };
    let target = SkewTableau::superstandard(lambda);
    enumerate_cst(&shape, lambda.parts())
        .into_iter()
        .filter(|t| t.rectify() == target)
        .count() as u64
}

type LrKey = (Partition, Partition, Partition);

static LR_MEMO: LazyLock<Mutex<HashMap<LrKey, u64>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Memoized coefficient used by chain sums. A nonzero coefficient forces both
/// factors inside `nu`, which prunes most lookups.
pub(crate) fn lr_memo(a: &Partition, b: &Partition, nu: &Partition) -> u64 {
    if a.size() + b.size() != nu.size() || !nu.contains(a) || !nu.contains(b) {
        return 0;
    }
    let key = if a <= b {
        (a.clone(), b.clone(), nu.clone())
    } else {
        (b.clone(), a.clone(), nu.clone())
    };
    if let Some(&c) = LR_MEMO.lock().unwrap().get(&key) {
        return c;
    }
    // enumerate the smaller shape first
    let c = if a.size() <= b.size() {
        lattice_pair_count(a, b, nu)
    } else {
        lattice_pair_count(b, a, nu)
    };
    LR_MEMO.lock().unwrap().insert(key, c);
    c
}

/// Coefficient of `s_target` in the product `s_{taus[0]} s_{taus[1]} ...`,
/// computed as a sum over chains of intermediate partitions.
pub fn multi_lr(taus: &[Partition], target: &Partition) -> u64 {
    match taus.first() {
        None => return u64::from(target.is_empty()),
        Some(first) => {
            if !target.contains(first) {
                return 0;
            }
        }
    }
    let mut layer: BTreeMap<Partition, u64> = BTreeMap::new();
    layer.insert(taus[0].clone(), 1);
    for tau in &taus[1..] {
        let mut next: BTreeMap<Partition, u64> = BTreeMap::new();
        for (kappa, mult) in &layer {
            for rho in partitions_of(kappa.size() + tau.size()) {
                if !rho.contains(kappa) || !target.contains(&rho) {
                    continue;
                }
                let c = lr_memo(tau, kappa, &rho);
                if c > 0 {
                    *next.entry(rho).or_insert(0) += mult * c;
                }
            }
        }
        layer = next;
    }
    layer.get(target).copied().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lr_example_both_methods_and_orders() {
        let a = Partition::of(&[2, 1]);
        let b = Partition::of(&[3, 1, 1]);
        let nu = Partition::of(&[4, 2, 1, 1]);
        for method in [LrMethod::LatticePair, LrMethod::Jdt] {
            assert_eq!(lr_coefficient(&a, &b, &nu, method), 2);
            assert_eq!(lr_coefficient(&b, &a, &nu, method), 2);
        }
    }

    #[test]
    fn lr_trivial_cases() {
        let lam = Partition::of(&[3, 1]);
        for method in [LrMethod::LatticePair, LrMethod::Jdt] {
            assert_eq!(
                lr_coefficient(&lam, &Partition::empty(), &lam, method),
                1
            );
            assert_eq!(
                lr_coefficient(
                    &Partition::of(&[1]),
                    &Partition::of(&[1]),
                    &Partition::of(&[2]),
                    method
                ),
                1
            );
            // size mismatch gives zero
            assert_eq!(
                lr_coefficient(&lam, &lam, &Partition::of(&[4]), method),
                0
            );
        }
    }

    #[test]
    fn multi_lr_examples() {
        assert_eq!(
            multi_lr(
                &[
                    Partition::of(&[5, 1]),
                    Partition::of(&[2]),
                    Partition::of(&[1])
                ],
                &Partition::of(&[5, 4])
            ),
            1
        );
        assert_eq!(
            multi_lr(
                &[
                    Partition::of(&[5, 1]),
                    Partition::of(&[2]),
                    Partition::of(&[1])
                ],
                &Partition::of(&[5, 2, 2])
            ),
            1
        );
        let lam = Partition::of(&[2, 2, 1]);
        assert_eq!(multi_lr(std::slice::from_ref(&lam), &lam), 1);
        assert_eq!(
            multi_lr(
                &[Partition::of(&[1]), Partition::of(&[1])],
                &Partition::of(&[2])
            ),
            1
        );
    }
}
