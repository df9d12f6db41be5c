//! The ht and st bases: exact triangular conversions against h, the tableau
//! product rules, stable Kronecker coefficients, and restriction
//! multiplicities.
//!
//! Internally every st/ht element is stored through its integer h-expansion;
//! scalar products and Kronecker products then reduce to p-basis arithmetic
//! in the symfunc module.

use std::collections::HashMap;
use std::sync::{LazyLock, Mutex};

use num::Signed;

use crate::error::{Error, Result};
use crate::multiset::{enumerate_multiset_partitions, Multiset, MultisetPartition};
use crate::partition::{is_horizontal_strip, partitions_of, partitions_up_to, Composition, Partition};
use crate::symfunc::convert::change_basis;
use crate::symfunc::expr::{coeff_int, BasisTag, Coeff, SymExpr};
use crate::tableau::cst::kostka_unchecked;
use crate::tableau::label::FillProfile;
use crate::tableau::mct::{
    enumerate_multiset_tableaux, enumerate_multiset_tableaux_with_blocks,
};

/// Partitions lambda such that nu/lambda is a horizontal strip: one
/// independent choice lambda_i in [nu_{i+1}, nu_i] per row.
fn strip_complements(nu: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut acc: Vec<u32> = Vec::new();
    fn rec(nu: &Partition, row: usize, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if row > nu.len() {
            let parts: Vec<u32> = acc.iter().copied().take_while(|&p| p > 0).collect();
            out.push(Partition::from_parts(parts).expect("weakly decreasing"));
            return;
        }
        let lo = nu.part(row + 1);
        let hi = nu.part(row);
        for v in lo..=hi {
            acc.push(v);
            rec(nu, row + 1, acc, out);
            acc.pop();
        }
    }
    rec(nu, 1, &mut acc, &mut out);
    out.sort();
    out.dedup();
    out
}

/// Expansion of ht_mu in the st basis:
/// sum over nu |- |mu| of K_{nu mu} sum over horizontal-strip complements
/// lambda of nu of st_lambda.
pub fn ht_to_st_expansion(mu: &Partition) -> SymExpr {
    let mut out = SymExpr::zero(BasisTag::St);
    for nu in partitions_of(mu.size()) {
        let k = kostka_unchecked(&nu, mu.parts());
        if k == 0 {
            continue;
        }
        for lambda in strip_complements(&nu) {
            debug_assert!(is_horizontal_strip(&nu, &lambda));
            out.add_term(lambda, coeff_int(k as i64));
        }
    }
    out
}

/// Expansion of h_mu in the ht basis: one ht_{m(pi)} per multiset partition
/// pi of {{1^{mu_1}, 2^{mu_2}, ...}}.
pub fn h_to_ht_expansion(mu: &Partition) -> SymExpr {
    let content = Multiset::from_counts(mu.parts());
    let mut out = SymExpr::zero(BasisTag::Ht);
    for pi in enumerate_multiset_partitions(&content, false) {
        out.add_term(pi.multiplicity_partition(), coeff_int(1));
    }
    out
}

static HT_IN_H: LazyLock<Mutex<HashMap<Partition, SymExpr>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));
static ST_IN_H: LazyLock<Mutex<HashMap<Partition, SymExpr>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));
static ST_IN_H_PIERI: LazyLock<Mutex<HashMap<Partition, SymExpr>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Exact h-expansion of ht_mu, by inverting the multiset-partition expansion:
/// the all-singletons partition contributes ht_mu itself, everything else has
/// strictly fewer blocks.
pub fn ht_to_h_expansion(mu: &Partition) -> SymExpr {
    if let Some(hit) = HT_IN_H.lock().unwrap().get(mu) {
        return hit.clone();
    }
    let mut out = SymExpr::atom(BasisTag::H, mu.clone());
    for (nu, c) in h_to_ht_expansion(mu).terms() {
        if nu == mu {
            continue;
        }
        debug_assert!(nu.size() < mu.size());
        out = out
            .sub(&ht_to_h_expansion(nu).scale(c))
            .expect("same basis");
    }
    HT_IN_H.lock().unwrap().insert(mu.clone(), out.clone());
    out
}

/// Exact integer h-expansion of st_mu by triangular inversion: subtract every
/// non-leading term of the st-expansion of ht_mu. Same-size terms climb the
/// dominance order, smaller terms drop the degree, so the recursion grounds
/// out.
pub fn st_to_h_expansion(mu: &Partition) -> SymExpr {
    if let Some(hit) = ST_IN_H.lock().unwrap().get(mu) {
        return hit.clone();
    }
    let mut out = ht_to_h_expansion(mu);
    for (lambda, c) in ht_to_st_expansion(mu).terms() {
        if lambda == mu {
            continue;
        }
        out = out
            .sub(&st_to_h_expansion(lambda).scale(c))
            .expect("same basis");
    }
    ST_IN_H.lock().unwrap().insert(mu.clone(), out.clone());
    out
}

/// Exact h-expansion of st_lambda by the one-row Pieri recursion:
/// st_lambda = h_{lambda_1} st_{tail} - sum over lattice multiset tableaux
/// with barred content tail(lambda) and a single unbarred letter repeated
/// lambda_1 times, excluding the leading shape lambda itself.
pub fn st_to_h_via_pieri(lambda: &Partition) -> SymExpr {
    if lambda.is_empty() {
        return SymExpr::constant(BasisTag::H, coeff_int(1));
    }
    if let Some(hit) = ST_IN_H_PIERI.lock().unwrap().get(lambda) {
        return hit.clone();
    }
    let head = SymExpr::atom(BasisTag::H, Partition::of(&[lambda.first_part()]));
    let tail = lambda.tail();
    let mut out = head.multiply(&st_to_h_via_pieri(&tail));
    let alpha = Composition::of(&[lambda.first_part()]);
    for gamma in partitions_up_to(lambda.size()) {
        if &gamma == lambda {
            continue;
        }
        let count =
            enumerate_multiset_tableaux(&gamma, &tail, &alpha, FillProfile::Multiset, true).len();
        if count > 0 {
            out = out
                .sub(&st_to_h_via_pieri(&gamma).scale(&coeff_int(count as i64)))
                .expect("same basis");
        }
    }
    ST_IN_H_PIERI
        .lock()
        .unwrap()
        .insert(lambda.clone(), out.clone());
    out
}

/// Coordinates of an arbitrary expression in the st basis, peeling the
/// triangular leading terms degree by degree: st_lambda equals s_lambda plus
/// lower-degree terms, so the top homogeneous layer of the Schur expansion
/// reads off the st coefficients directly.
pub fn expand_in_st(f: &SymExpr) -> SymExpr {
    let mut rem = change_basis(f, BasisTag::S);
    let mut out = SymExpr::zero(BasisTag::St);
    while !rem.is_zero() {
        let d = rem.degree();
        let layer: Vec<(Partition, Coeff)> = rem
            .terms()
            .filter(|(p, _)| p.size() == d)
            .map(|(p, c)| (p.clone(), c.clone()))
            .collect();
        for (lambda, c) in layer {
            let st_in_s = change_basis(&st_to_h_expansion(&lambda), BasisTag::S);
            rem = rem.sub(&st_in_s.scale(&c)).expect("same basis");
            out.add_term(lambda, c);
        }
    }
    out
}

/// Tableau-rule expansion over a fill profile: the st_gamma coefficient is
/// the number of lattice tableaux with block shape gamma.
fn product_by_profile(
    barred: &Partition,
    alpha: &Composition,
    profile: FillProfile,
) -> SymExpr {
    let bound = barred.size() + alpha.size();
    let mut out = SymExpr::zero(BasisTag::St);
    for gamma in partitions_up_to(bound) {
        let count = enumerate_multiset_tableaux(&gamma, barred, alpha, profile, true).len();
        if count > 0 {
            out.add_term(gamma, coeff_int(count as i64));
        }
    }
    out
}

/// st-expansion of h_{alpha_1} h_{alpha_2} ... st_lambda (multiset cells).
pub fn product_h_st(alpha: &Composition, lambda: &Partition) -> SymExpr {
    product_by_profile(lambda, alpha, FillProfile::Multiset)
}

/// st-expansion of ht_mu st_lambda (set cells with at most one barred and at
/// most one unbarred entry). Compositions are accepted and sorted.
pub fn product_ht_st(mu: &Composition, lambda: &Partition) -> SymExpr {
    product_by_profile(lambda, mu, FillProfile::Pair)
}

/// st-expansion of ht_{alpha_1} ht_{alpha_2} ... st_lambda (set cells).
pub fn product_ht_multi_st(alpha: &Composition, lambda: &Partition) -> SymExpr {
    product_by_profile(lambda, alpha, FillProfile::Set)
}

/// st-expansion of st_{alpha_1} st_{alpha_2} ... st_lambda (set cells, no
/// singleton labels in the first row).
pub fn product_st_multi_st(alpha: &Composition, lambda: &Partition) -> SymExpr {
    product_by_profile(lambda, alpha, FillProfile::SetNoSingletonRow1)
}

/// st-expansion of ht_{m(pi)} st_lambda through tableaux whose unbarred cell
/// contents realize the blocks of pi exactly.
pub fn product_ht_blocks_st(pi: &MultisetPartition, lambda: &Partition) -> SymExpr {
    let bound = lambda.size() + pi.len();
    let mut out = SymExpr::zero(BasisTag::St);
    for gamma in partitions_up_to(bound) {
        let count = enumerate_multiset_tableaux_with_blocks(&gamma, lambda, pi, true).len();
        if count > 0 {
            out.add_term(gamma, coeff_int(count as i64));
        }
    }
    out
}

/// Full st-expansion of st_lambda st_mu; the coefficients are the stable
/// Kronecker coefficients. Computed through the h basis; no tableau rule is
/// known for the general product.
pub fn stable_kronecker_expansion(lambda: &Partition, mu: &Partition) -> SymExpr {
    let product = st_to_h_expansion(lambda).multiply(&st_to_h_expansion(mu));
    expand_in_st(&product)
}

/// The coefficient of st_nu in st_lambda st_mu.
pub fn stable_kronecker_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    coeff_to_u64(&stable_kronecker_expansion(lambda, mu).coefficient(nu))
}

/// Multiplicity of st_lambda in the st-expansion of the Schur function s_nu:
/// the stable restriction coefficient.
pub fn restriction_multiplicity(nu: &Partition, lambda: &Partition) -> u64 {
    let expansion = expand_in_st(&SymExpr::atom(BasisTag::S, nu.clone()));
    coeff_to_u64(&expansion.coefficient(lambda))
}

/// Extract a nonnegative integer coefficient.
pub(crate) fn coeff_to_u64(c: &Coeff) -> u64 {
    assert!(c.is_integer(), "expected an integer coefficient, got {}", c);
    assert!(!c.is_negative(), "expected a nonnegative coefficient, got {}", c);
    let (digits_sign, digits) = c.numer().to_u64_digits();
    match (digits_sign, digits.len()) {
        (num::bigint::Sign::NoSign, 0) => 0,
        (_, 1) => digits[0],
        _ => panic!("coefficient {} does not fit in u64", c),
    }
}

/// Coefficient extraction that errors instead of panicking; used by the CLI.
pub fn coefficient_as_integer(c: &Coeff) -> Result<i64> {
    if !c.is_integer() {
        return Err(Error::InvalidPartition(format!(
            "coefficient {} is not an integer",
            c
        )));
    }
    let n = c.numer();
    i64::try_from(n.clone()).map_err(|_| {
        Error::InvalidPartition(format!("coefficient {} does not fit in i64", c))
    })
}
