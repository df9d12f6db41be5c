//! Exact basis conversions between h, p, s (and, through the stable module,
//! ht and st).
//!
//! h is the pivot: every conversion routes through the h basis. The
//! generator relation h_m = sum_{lambda |- m} p_lambda / z_lambda gives
//! h -> p; Newton's identity p_m = m h_m - sum_{i<m} p_i h_{m-i} gives the
//! inverse. Kostka numbers give h -> s, inverted triangularly along the
//! dominance order.

use std::collections::HashMap;
use std::sync::{LazyLock, Mutex};

use num::{BigRational, One};

use crate::partition::{partitions_of, Partition};
use crate::symfunc::expr::{coeff_int, BasisTag, Coeff, SymExpr};
use crate::tableau::cst::kostka_unchecked;

pub fn change_basis(f: &SymExpr, to: BasisTag) -> SymExpr {
    if f.basis() == to {
        return f.clone();
    }
    from_h(&to_h(f), to)
}

/// Rewrite in the h basis.
pub fn to_h(f: &SymExpr) -> SymExpr {
    match f.basis() {
        BasisTag::H => f.clone(),
        BasisTag::P => map_terms(f, BasisTag::H, p_in_h),
        BasisTag::S => map_terms(f, BasisTag::H, s_in_h),
        BasisTag::Ht => map_terms(f, BasisTag::H, crate::stable::ht_to_h_expansion),
        BasisTag::St => map_terms(f, BasisTag::H, crate::stable::st_to_h_expansion),
    }
}

/// Rewrite an h-basis expression in the target basis.
fn from_h(f: &SymExpr, to: BasisTag) -> SymExpr {
    debug_assert_eq!(f.basis(), BasisTag::H);
    match to {
        BasisTag::H => f.clone(),
        BasisTag::P => map_terms(f, BasisTag::P, h_in_p),
        BasisTag::S => map_terms(f, BasisTag::S, h_in_s),
        BasisTag::Ht => map_terms(f, BasisTag::Ht, crate::stable::h_to_ht_expansion),
        BasisTag::St => crate::stable::expand_in_st(f),
    }
}

/// Substitute an expansion for every indexing partition and recombine.
fn map_terms(
    f: &SymExpr,
    target: BasisTag,
    expand: impl Fn(&Partition) -> SymExpr,
) -> SymExpr {
    let mut out = SymExpr::zero(target);
    for (index, c) in f.terms() {
        let image = expand(index);
        debug_assert_eq!(image.basis(), target);
        for (p, ic) in image.terms() {
            out.add_term(p.clone(), ic * c);
        }
    }
    out
}

fn memo_lookup<K: std::hash::Hash + Eq + Clone>(
    memo: &Mutex<HashMap<K, SymExpr>>,
    key: &K,
) -> Option<SymExpr> {
    memo.lock().unwrap().get(key).cloned()
}

fn memo_store<K: std::hash::Hash + Eq + Clone>(
    memo: &Mutex<HashMap<K, SymExpr>>,
    key: K,
    value: &SymExpr,
) {
    memo.lock().unwrap().insert(key, value.clone());
}

static H_M_IN_P: LazyLock<Mutex<HashMap<u32, SymExpr>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));
static P_M_IN_H: LazyLock<Mutex<HashMap<u32, SymExpr>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));
static S_IN_H: LazyLock<Mutex<HashMap<Partition, SymExpr>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));
static H_IN_S: LazyLock<Mutex<HashMap<Partition, SymExpr>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// h_m = sum_{lambda |- m} p_lambda / z_lambda.
fn h_m_in_p(m: u32) -> SymExpr {
    if let Some(hit) = memo_lookup(&H_M_IN_P, &m) {
        return hit;
    }
    let mut out = SymExpr::zero(BasisTag::P);
    for lambda in partitions_of(m as usize) {
        let z = BigRational::from_integer(lambda.zee());
        out.add_term(lambda, Coeff::one() / z);
    }
    memo_store(&H_M_IN_P, m, &out);
    out
}

fn h_in_p(mu: &Partition) -> SymExpr {
    let mut out = SymExpr::constant(BasisTag::P, Coeff::one());
    for &m in mu.parts() {
        out = out.multiply(&h_m_in_p(m));
    }
    out
}

/// Newton's identity: p_m = m h_m - sum_{i=1}^{m-1} p_i h_{m-i}.
fn p_m_in_h(m: u32) -> SymExpr {
    if let Some(hit) = memo_lookup(&P_M_IN_H, &m) {
        return hit;
    }
    let mut out = SymExpr::atom(BasisTag::H, Partition::of(&[m])).scale(&coeff_int(m as i64));
    for i in 1..m {
        let h_rest = SymExpr::atom(BasisTag::H, Partition::of(&[m - i]));
        out = out
            .sub(&p_m_in_h(i).multiply(&h_rest))
            .expect("same basis");
    }
    memo_store(&P_M_IN_H, m, &out);
    out
}

fn p_in_h(mu: &Partition) -> SymExpr {
    let mut out = SymExpr::constant(BasisTag::H, Coeff::one());
    for &m in mu.parts() {
        out = out.multiply(&p_m_in_h(m));
    }
    out
}

/// h_mu = sum_lambda K_{lambda mu} s_lambda.
fn h_in_s(mu: &Partition) -> SymExpr {
    if let Some(hit) = memo_lookup(&H_IN_S, mu) {
        return hit;
    }
    let mut out = SymExpr::zero(BasisTag::S);
    for lambda in partitions_of(mu.size()) {
        let k = kostka_unchecked(&lambda, mu.parts());
        if k > 0 {
            out.add_term(lambda, coeff_int(k as i64));
        }
    }
    memo_store(&H_IN_S, mu.clone(), &out);
    out
}

/// Triangular inversion of the Kostka expansion: nonzero K_{lambda mu} with
/// lambda != mu forces lambda strictly above mu in dominance order, so the
/// recursion climbs to the single-row partition and stops.
fn s_in_h(mu: &Partition) -> SymExpr {
    if let Some(hit) = memo_lookup(&S_IN_H, mu) {
        return hit;
    }
    let mut out = SymExpr::atom(BasisTag::H, mu.clone());
    for lambda in partitions_of(mu.size()) {
        if &lambda == mu {
            continue;
        }
        let k = kostka_unchecked(&lambda, mu.parts());
        if k > 0 {
            out = out
                .sub(&s_in_h(&lambda).scale(&coeff_int(k as i64)))
                .expect("same basis");
        }
    }
    memo_store(&S_IN_H, mu.clone(), &out);
    out
}
