//! Self-test suites runnable from the command line: each suite re-checks a
//! family of identities up to a caller-chosen degree.

use num::Zero;

use crate::multiset::{enumerate_multiset_partitions, Multiset};
use crate::oracle;
use crate::partition::{compositions_of, partitions_of, partitions_up_to, Composition, Partition};
use crate::stable;
use crate::symfunc::convert::change_basis;
use crate::symfunc::expr::{coeff_int, BasisTag, SymExpr};
use crate::symfunc::{character_inner_at, hall_inner, sn_character};
use crate::tableau::lr::{lr_coefficient, LrMethod};

pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Run every suite with sizes capped by `max_degree`; returns one result per
/// suite.
pub fn run_all(max_degree: usize) -> Vec<SuiteResult> {
    let d = max_degree;
    vec![
        suite("conjugate-involution", conjugate_involution(d + 2)),
        suite("multiset-partition-counts", multiset_partition_counts(d.min(6))),
        suite("lr-symmetry-and-methods", lr_two_routes(d.min(4))),
        suite("basis-round-trips", basis_round_trips(d.min(4))),
        suite("character-oracle", character_oracle(d.min(5))),
        suite("st-orthonormality", st_orthonormality(d.min(3))),
        suite("st-table-routes", st_table_routes(d.min(4))),
        suite("product-route-agreement", product_route_agreement(d.min(4))),
        suite("positivity", positivity(d.min(4))),
        suite("dimension-identity", dimension_identity(d.clamp(1, 3))),
    ]
}

fn suite(name: &'static str, outcome: std::result::Result<(), String>) -> SuiteResult {
    match outcome {
        Ok(()) => SuiteResult {
            name,
            passed: true,
            detail: "ok".to_string(),
        },
        Err(detail) => SuiteResult {
            name,
            passed: false,
            detail,
        },
    }
}

fn conjugate_involution(max: usize) -> std::result::Result<(), String> {
    for lam in partitions_up_to(max) {
        if lam.conjugate().conjugate() != lam {
            return Err(format!("conjugate not an involution at {}", lam));
        }
    }
    Ok(())
}

fn multiset_partition_counts(max: usize) -> std::result::Result<(), String> {
    for r in 0..=max {
        let content = Multiset::from_counts(&[r as u32]);
        let count = enumerate_multiset_partitions(&content, false).len();
        let expected = partitions_of(r).len();
        if count != expected {
            return Err(format!("p({}) = {} but enumerated {}", r, expected, count));
        }
        let distinct = Multiset::from_counts(&vec![1; r]);
        let bell = enumerate_multiset_partitions(&distinct, true).len() as u64;
        if bell != oracle::bell_number(r) {
            return Err(format!("Bell({}) mismatch: {}", r, bell));
        }
    }
    Ok(())
}

fn lr_two_routes(max: usize) -> std::result::Result<(), String> {
    for a in partitions_up_to(max) {
        for b in partitions_up_to(max) {
            for nu in partitions_of(a.size() + b.size()) {
                let pair = lr_coefficient(&a, &b, &nu, LrMethod::LatticePair);
                let jdt = lr_coefficient(&a, &b, &nu, LrMethod::Jdt);
                let swapped = lr_coefficient(&b, &a, &nu, LrMethod::LatticePair);
                if pair != jdt || pair != swapped {
                    return Err(format!(
                        "c({},{};{}) lattice={} jdt={} swapped={}",
                        a, b, nu, pair, jdt, swapped
                    ));
                }
            }
        }
    }
    Ok(())
}

fn basis_round_trips(max: usize) -> std::result::Result<(), String> {
    use BasisTag::*;
    for lam in partitions_up_to(max) {
        for (from, via) in [(H, P), (H, S), (S, P), (H, St), (H, Ht), (S, St)] {
            let f = SymExpr::atom(from, lam.clone());
            let back = change_basis(&change_basis(&f, via), from);
            if back != f {
                return Err(format!("round trip {:?}->{:?} failed at {}", from, via, lam));
            }
        }
    }
    Ok(())
}

fn character_oracle(max: usize) -> std::result::Result<(), String> {
    for n in 0..=max {
        for lam in partitions_of(n) {
            for mu in partitions_of(n) {
                let direct = sn_character(&lam, &mu).map_err(|e| e.to_string())?;
                let via_inner = hall_inner(
                    &SymExpr::atom(BasisTag::S, lam.clone()),
                    &SymExpr::atom(BasisTag::P, mu.clone()),
                );
                if via_inner != coeff_int(direct) {
                    return Err(format!("character mismatch at ({}, {})", lam, mu));
                }
            }
        }
    }
    Ok(())
}

fn st_orthonormality(max: usize) -> std::result::Result<(), String> {
    let n = 2 * max;
    for a in partitions_up_to(max) {
        for b in partitions_up_to(max) {
            let fa = SymExpr::atom(BasisTag::St, a.clone());
            let fb = SymExpr::atom(BasisTag::St, b.clone());
            let value = character_inner_at(&fa, &fb, n.max(1));
            let expected = if a == b { coeff_int(1) } else { coeff_int(0) };
            if value != expected {
                return Err(format!("<st{}, st{}>@ = {}", a, b, value));
            }
        }
    }
    Ok(())
}

fn st_table_routes(max: usize) -> std::result::Result<(), String> {
    for lam in partitions_up_to(max) {
        if stable::st_to_h_expansion(&lam) != stable::st_to_h_via_pieri(&lam) {
            return Err(format!("inversion and recursion disagree at {}", lam));
        }
    }
    Ok(())
}

fn product_route_agreement(max: usize) -> std::result::Result<(), String> {
    for lam in partitions_up_to(max) {
        for alpha_size in 0..=(max - lam.size().min(max)) {
            for alpha in compositions_of(alpha_size) {
                let tableau_route = stable::product_h_st(&alpha, &lam);
                let mut algebraic = stable::st_to_h_expansion(&lam);
                for &part in alpha.parts() {
                    let h = SymExpr::atom(BasisTag::H, Partition::of(&[part]));
                    algebraic = algebraic.multiply(&h);
                }
                if tableau_route != stable::expand_in_st(&algebraic) {
                    return Err(format!("h-product route mismatch at ({}, {})", alpha, lam));
                }
            }
        }
    }
    Ok(())
}

fn positivity(max: usize) -> std::result::Result<(), String> {
    for lam in partitions_up_to(max) {
        for mu in partitions_up_to(max - lam.size().min(max)) {
            let expansion = stable::stable_kronecker_expansion(&lam, &mu);
            for (nu, c) in expansion.terms() {
                if !c.is_integer() || c < &num::BigRational::zero() {
                    return Err(format!(
                        "negative or fractional coefficient {} of st{} in st{} st{}",
                        c, nu, lam, mu
                    ));
                }
            }
            let alpha = Composition::from(&mu);
            for product in [
                stable::product_h_st(&alpha, &lam),
                stable::product_ht_st(&alpha, &lam),
                stable::product_ht_multi_st(&alpha, &lam),
                stable::product_st_multi_st(&alpha, &lam),
            ] {
                for (_, c) in product.terms() {
                    if !c.is_integer() || c < &num::BigRational::zero() {
                        return Err("tableau count came out non-integral".to_string());
                    }
                }
            }
        }
    }
    Ok(())
}

fn dimension_identity(max_r: usize) -> std::result::Result<(), String> {
    for r in 0..=max_r {
        let mut total = 0u64;
        for lam in partitions_up_to(r) {
            let d = oracle::partition_algebra_dim(&lam, r);
            total += d * d;
        }
        if total != oracle::bell_number(2 * r) {
            return Err(format!(
                "sum of squared dims at r = {} is {}, Bell(2r) = {}",
                r,
                total,
                oracle::bell_number(2 * r)
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_at_small_degree() {
        for result in run_all(2) {
            assert!(result.passed, "{}: {}", result.name, result.detail);
        }
    }
}
