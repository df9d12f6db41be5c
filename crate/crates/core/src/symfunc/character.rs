//! Symmetric group characters by the border-strip recursion.

use std::collections::HashMap;
use std::sync::{LazyLock, Mutex};

use crate::error::{Error, Result};
use crate::partition::Partition;

static CHAR_MEMO: LazyLock<Mutex<HashMap<(Partition, Partition), i64>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// The irreducible character chi^lambda evaluated at cycle type mu; strips
/// are removed for the parts of mu from the largest down.
pub fn sn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.to_string(),
            left_size: lambda.size(),
            right: mu.to_string(),
            right_size: mu.size(),
        });
    }
    Ok(character_rec(lambda, mu))
}

fn character_rec(lambda: &Partition, mu: &Partition) -> i64 {
    if lambda.is_empty() {
        return 1;
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(&hit) = CHAR_MEMO.lock().unwrap().get(&key) {
        return hit;
    }
    let k = mu.first_part();
    let rest = mu.tail();
    let mut value = 0i64;
    for (smaller, rows_spanned) in border_strip_removals(lambda, k) {
        let sign = if (rows_spanned - 1) % 2 == 0 { 1 } else { -1 };
        value += sign * character_rec(&smaller, &rest);
    }
    CHAR_MEMO.lock().unwrap().insert(key, value);
    value
}

/// All ways to remove a border strip of `k` cells, with the number of rows
/// each strip spans. Computed on beta-numbers: lambda_j + (l - j) for row j;
/// removing a strip subtracts k from one beta-number, and the strip spans
/// one more row than the number of beta-numbers jumped over.
fn border_strip_removals(lambda: &Partition, k: u32) -> Vec<(Partition, u32)> {
    let ell = lambda.len();
    let betas: Vec<u32> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(j, &p)| p + (ell - 1 - j) as u32)
        .collect();
    let mut out = Vec::new();
    for j in 0..ell {
        let b = betas[j];
        if b < k {
            continue;
        }
        let nb = b - k;
        if betas.contains(&nb) {
            continue;
        }
        let jumped = betas.iter().filter(|&&m| nb < m && m < b).count() as u32;
        let mut new_betas = betas.clone();
        new_betas[j] = nb;
        new_betas.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = new_betas
            .iter()
            .enumerate()
            .map(|(i, &beta)| beta - (ell - 1 - i) as u32)
            .filter(|&p| p > 0)
            .collect();
        let smaller = Partition::from_parts(parts).expect("beta-numbers give a partition");
        out.push((smaller, jumped + 1));
    }
    out
}
