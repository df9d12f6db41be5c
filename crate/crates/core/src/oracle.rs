//! Independent brute-force routes: finite-n Kronecker coefficients by
//! character sums, the double Littlewood-Richardson sum for stable
//! coefficients, tableau-sequence count identities, and the dimension and
//! entanglement applications.
//!
//! These deliberately avoid the multiset-tableau code paths (characters and
//! LR enumeration only), so agreement with the tableau rules is evidence
//! rather than tautology.

use num::{BigRational, Zero};

use crate::error::Result;
use crate::multiset::{enumerate_multiset_partitions, Multiset};
use crate::partition::{partitions_of, Composition, Partition};
use crate::stable::{coeff_to_u64, product_ht_multi_st, product_st_multi_st};
use crate::symfunc::character::sn_character;
use crate::symfunc::expr::{coeff_int, Coeff};
use crate::tableau::bset::enumerate_tableau_sequences;
use crate::tableau::lr::multi_lr;

/// Kronecker coefficient of the padded triple ((n-|a|,a), (n-|b|,b),
/// (n-|c|,c)) via the normalized triple character sum over cycle types.
pub fn finite_n_kronecker(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    n: usize,
) -> Result<u64> {
    let lp = lambda.padded(n)?;
    let mp = mu.padded(n)?;
    let np = nu.padded(n)?;
    let mut total = Coeff::zero();
    for rho in partitions_of(n) {
        let a = sn_character(&lp, &rho)?;
        if a == 0 {
            continue;
        }
        let b = sn_character(&mp, &rho)?;
        if b == 0 {
            continue;
        }
        let c = sn_character(&np, &rho)?;
        if c == 0 {
            continue;
        }
        total += coeff_int(a) * coeff_int(b) * coeff_int(c)
            / BigRational::from_integer(rho.zee());
    }
    assert!(total.is_integer(), "character sum must be integral");
    Ok(coeff_to_u64(&total))
}

/// The double LR sum for the coefficient of st_gamma in ht_mu st_lambda:
/// sum over tau^(0) |- n-|mu| and tau^(i) |- mu_i of
/// c^{(n-|gamma|,gamma)} * c^{(n-|lambda|,lambda)} over the tau chain.
pub fn stable_coeff_lr_sum(
    mu: &Partition,
    lambda: &Partition,
    gamma: &Partition,
    n: usize,
) -> Result<u64> {
    let gp = gamma.padded(n)?;
    let lp = lambda.padded(n)?;
    if n < mu.size() {
        return Ok(0);
    }
    let mut total = 0u64;
    let mut chain: Vec<Partition> = Vec::with_capacity(mu.len() + 1);
    for tau0 in partitions_of(n - mu.size()) {
        chain.push(tau0);
        rec_tau_tuples(mu, 0, &mut chain, &gp, &lp, &mut total);
        chain.pop();
    }
    Ok(total)
}

fn rec_tau_tuples(
    mu: &Partition,
    idx: usize,
    chain: &mut Vec<Partition>,
    gp: &Partition,
    lp: &Partition,
    total: &mut u64,
) {
    if idx == mu.len() {
        let left = multi_lr(chain, gp);
        if left > 0 {
            *total += left * multi_lr(chain, lp);
        }
        return;
    }
    for tau in partitions_of(mu.part(idx + 1) as usize) {
        chain.push(tau);
        rec_tau_tuples(mu, idx + 1, chain, gp, lp, total);
        chain.pop();
    }
}

/// Check that the number of tableau sequences equals the product of the two
/// chain LR coefficients.
pub fn verify_bset_identity(
    taus: &[Partition],
    gamma: &Partition,
    lambda: &Partition,
) -> Result<bool> {
    let count = enumerate_tableau_sequences(taus, gamma, lambda)?.len() as u64;
    Ok(count == multi_lr(taus, gamma) * multi_lr(taus, lambda))
}

/// Dimension of the irreducible partition-algebra module indexed by lambda
/// at r tensor factors: the st_lambda coefficient of (ht_1)^r.
pub fn partition_algebra_dim(lambda: &Partition, r: usize) -> u64 {
    let alpha = Composition::from_parts(vec![1; r]).expect("unit parts");
    coeff_to_u64(&product_ht_multi_st(&alpha, &Partition::empty()).coefficient(lambda))
}

/// Dimension of the irreducible quasi-partition module indexed by lambda:
/// the st_lambda coefficient of (st_1)^r.
pub fn quasi_partition_algebra_dim(lambda: &Partition, r: usize) -> u64 {
    let alpha = Composition::from_parts(vec![1; r]).expect("unit parts");
    coeff_to_u64(&product_st_multi_st(&alpha, &Partition::empty()).coefficient(lambda))
}

/// Single-row set-valued tableaux of length at most 2d with content
/// {{1^d, ..., a^d, (a+1)^{d-1}, ..., k^{d-1}}}. Each sorted row corresponds
/// to one multiset partition with set blocks, so this counts those with at
/// most 2d blocks.
pub fn entanglement_coeff(d: u32, k: u32, a: u32) -> u64 {
    assert!(a <= k, "a ranges over 0..=k");
    let mut content = Multiset::empty();
    for letter in 1..=k {
        let copies = if letter <= a { d } else { d - 1 };
        content.insert(letter, copies);
    }
    enumerate_multiset_partitions(&content, true)
        .into_iter()
        .filter(|pi| pi.len() <= 2 * d as usize)
        .count() as u64
}

/// Bell numbers by the triangle recurrence.
pub fn bell_number(n: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for &x in &row {
            let prev = *next.last().unwrap();
            next.push(prev + x);
        }
        row = next;
    }
    row[0]
}
