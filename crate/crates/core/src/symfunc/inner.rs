//! Scalar products, evaluation at permutation-matrix eigenvalues, the
//! Kronecker product, and the Frobenius map.

use num::{BigRational, One, Zero};

use crate::partition::{partitions_of, Partition};
use crate::symfunc::convert::change_basis;
use crate::symfunc::expr::{BasisTag, Coeff, SymExpr};

/// p_k evaluated at the eigenvalue multiset of a permutation matrix of cycle
/// type mu: sum of d * m_d(mu) over divisors d of k.
pub fn power_sum_at_cycle_type(k: u32, mu: &Partition) -> i64 {
    let mut total = 0i64;
    for d in 1..=k {
        if k.is_multiple_of(d) {
            total += (d as i64) * (mu.multiplicity(d) as i64);
        }
    }
    total
}

/// Evaluate a symmetric function at the eigenvalues of a permutation matrix
/// of cycle type `mu`, through the p-basis expansion.
pub fn eval_at_cycle_type(f: &SymExpr, mu: &Partition) -> Coeff {
    let fp = change_basis(f, BasisTag::P);
    eval_p_expr(&fp, mu)
}

fn eval_p_expr(fp: &SymExpr, mu: &Partition) -> Coeff {
    let mut total = Coeff::zero();
    for (rho, c) in fp.terms() {
        let mut value = Coeff::one();
        for &k in rho.parts() {
            value *= Coeff::from_integer(power_sum_at_cycle_type(k, mu).into());
        }
        total += value * c;
    }
    total
}

/// Hall scalar product: <p_lambda, p_mu> = z_lambda delta_{lambda,mu},
/// extended bilinearly.
pub fn hall_inner(f: &SymExpr, g: &SymExpr) -> Coeff {
    let fp = change_basis(f, BasisTag::P);
    let gp = change_basis(g, BasisTag::P);
    let mut total = Coeff::zero();
    for (rho, a) in fp.terms() {
        let b = gp.coefficient(rho);
        if !b.is_zero() {
            total += a * b * BigRational::from_integer(rho.zee());
        }
    }
    total
}

/// The character scalar product evaluated with an explicit symmetric group
/// size n: sum over nu |- n of `f[Xi_nu] g[Xi_nu] / z_nu`.
pub fn character_inner_at(f: &SymExpr, g: &SymExpr, n: usize) -> Coeff {
    let fp = change_basis(f, BasisTag::P);
    let gp = change_basis(g, BasisTag::P);
    let mut total = Coeff::zero();
    for nu in partitions_of(n) {
        let fv = eval_p_expr(&fp, &nu);
        if fv.is_zero() {
            continue;
        }
        let gv = eval_p_expr(&gp, &nu);
        if gv.is_zero() {
            continue;
        }
        total += fv * gv / BigRational::from_integer(nu.zee());
    }
    total
}

/// The character scalar product at the default n = 2 max(deg f, deg g); the
/// value is independent of any larger choice.
pub fn character_inner(f: &SymExpr, g: &SymExpr) -> Coeff {
    let n = 2 * f.degree().max(g.degree());
    character_inner_at(f, g, n)
}

/// Kronecker product: p_lambda * p_mu = delta z_lambda p_lambda extended
/// bilinearly; components of different degrees vanish. Result in the Schur
/// basis.
pub fn kronecker_product(f: &SymExpr, g: &SymExpr) -> SymExpr {
    let fp = change_basis(f, BasisTag::P);
    let gp = change_basis(g, BasisTag::P);
    let mut out = SymExpr::zero(BasisTag::P);
    for (rho, a) in fp.terms() {
        let b = gp.coefficient(rho);
        if !b.is_zero() {
            out.add_term(rho.clone(), a * b * BigRational::from_integer(rho.zee()));
        }
    }
    change_basis(&out, BasisTag::S)
}

/// Frobenius image: `phi_n(f) = sum_{nu |- n} f[Xi_nu] p_nu / z_nu`, a
/// degree-n homogeneous expression in the p basis.
pub fn frobenius_image(f: &SymExpr, n: usize) -> SymExpr {
    let fp = change_basis(f, BasisTag::P);
    let mut out = SymExpr::zero(BasisTag::P);
    for nu in partitions_of(n) {
        let value = eval_p_expr(&fp, &nu);
        if !value.is_zero() {
            out.add_term(nu.clone(), value / BigRational::from_integer(nu.zee()));
        }
    }
    out
}
