//! Sparse exact-rational linear combinations of basis elements indexed by
//! partitions.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigRational, One, Zero};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::tableau::lr::lr_memo;

/// Exact coefficient type; integral in the h/s/ht/st bases, rational in p.
pub type Coeff = BigRational;

pub fn coeff_int(value: i64) -> Coeff {
    Coeff::from_integer(value.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisTag {
    /// Complete homogeneous basis h.
    H,
    /// Power sum basis p.
    P,
    /// Schur basis s.
    S,
    /// Induced trivial character basis ht.
    Ht,
    /// Irreducible character basis st.
    St,
}

impl BasisTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            BasisTag::H => "h",
            BasisTag::P => "p",
            BasisTag::S => "s",
            BasisTag::Ht => "ht",
            BasisTag::St => "st",
        }
    }

    pub fn parse(text: &str) -> Option<BasisTag> {
        match text {
            "h" => Some(BasisTag::H),
            "p" => Some(BasisTag::P),
            "s" => Some(BasisTag::S),
            "ht" => Some(BasisTag::Ht),
            "st" => Some(BasisTag::St),
            _ => None,
        }
    }
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A tagged sparse linear combination; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymExpr {
    basis: BasisTag,
    terms: BTreeMap<Partition, Coeff>,
}

impl SymExpr {
    pub fn zero(basis: BasisTag) -> Self {
        SymExpr {
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The basis element indexed by `index`, coefficient 1.
    pub fn atom(basis: BasisTag, index: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(index, Coeff::one());
        SymExpr { basis, terms }
    }

    /// A constant: `c` times the empty-partition element.
    pub fn constant(basis: BasisTag, c: Coeff) -> Self {
        let mut e = SymExpr::zero(basis);
        e.add_term(Partition::empty(), c);
        e
    }

    pub fn from_terms<I>(basis: BasisTag, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, Coeff)>,
    {
        let mut e = SymExpr::zero(basis);
        for (p, c) in terms {
            e.add_term(p, c);
        }
        e
    }

    pub fn basis(&self) -> BasisTag {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Coeff)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, index: &Partition) -> Coeff {
        self.terms.get(index).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Largest partition size carrying a nonzero coefficient; 0 when zero.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Partition::size).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut sizes = self.terms.keys().map(Partition::size);
        match sizes.next() {
            None => true,
            Some(first) => sizes.all(|s| s == first),
        }
    }

    /// The part of the expression of the given degree.
    pub fn homogeneous_component(&self, degree: usize) -> SymExpr {
        SymExpr {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.size() == degree)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    pub(crate) fn add_term(&mut self, index: Partition, c: Coeff) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(index);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Termwise sum; both operands must carry the same basis tag.
    pub fn add(&self, other: &SymExpr) -> Result<SymExpr> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch {
                left: self.basis.to_string(),
                right: other.basis.to_string(),
            });
        }
        let mut out = self.clone();
        for (p, c) in other.terms() {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymExpr) -> Result<SymExpr> {
        self.add(&other.scale(&-Coeff::one()))
    }

    pub fn scale(&self, c: &Coeff) -> SymExpr {
        if c.is_zero() {
            return SymExpr::zero(self.basis);
        }
        SymExpr {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(p, coeff)| (p.clone(), coeff * c))
                .collect(),
        }
    }

    /// Product of two expressions. A mismatched right operand is converted
    /// into the left basis first. h and p multiply by merging indices, s by
    /// Littlewood-Richardson coefficients, ht and st through their exact
    /// h-expansions.
    pub fn multiply(&self, other: &SymExpr) -> SymExpr {
        let converted;
        let rhs = if other.basis == self.basis {
            other
        } else {
            converted = crate::symfunc::convert::change_basis(other, self.basis);
            &converted
        };
        match self.basis {
            BasisTag::H | BasisTag::P => self.multiply_multiplicative(rhs),
            BasisTag::S => self.multiply_schur(rhs),
            BasisTag::Ht | BasisTag::St => {
                let lh = crate::symfunc::convert::to_h(self);
                let rh = crate::symfunc::convert::to_h(rhs);
                crate::symfunc::convert::change_basis(&lh.multiply(&rh), self.basis)
            }
        }
    }

    fn multiply_multiplicative(&self, other: &SymExpr) -> SymExpr {
        let mut out = SymExpr::zero(self.basis);
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                let mut parts = a.parts().to_vec();
                parts.extend_from_slice(b.parts());
                let index = Partition::from_unsorted(parts).expect("positive parts");
                out.add_term(index, ca * cb);
            }
        }
        out
    }

    fn multiply_schur(&self, other: &SymExpr) -> SymExpr {
        let mut out = SymExpr::zero(BasisTag::S);
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                let c = ca * cb;
                for nu in partitions_of(a.size() + b.size()) {
                    let lr = lr_memo(a, b, &nu);
                    if lr > 0 {
                        out.add_term(nu, &c * coeff_int(lr as i64));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for SymExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{}*{}{}", c, self.basis, p)?;
            first = false;
        }
        Ok(())
    }
}
