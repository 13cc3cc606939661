//! The contraction coefficients `w_1, ..., w_N` and exact sparse
//! polynomials in them.
//!
//! Each coefficient is either a free symbol or a fixed exact rational.
//! Two-index products `w_ab = w_{a+1} w_{a+2} ... w_b` (with `w_aa := 1`)
//! are the building blocks of every structure constant in the family.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::error::CkError;

/// Exact arbitrary-precision rational.
pub type Rational = num_rational::BigRational;

/// Convenience constructor for small rationals.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

/// One coefficient `w_a`: a free symbol or a fixed exact rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OmegaEntry {
    Symbolic,
    Fixed(Rational),
}

/// The `N` contraction coefficients of `so_{w1,...,wN}(N+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaSpec {
    entries: Vec<OmegaEntry>,
}

impl OmegaSpec {
    pub fn new(entries: Vec<OmegaEntry>) -> Self {
        assert!(!entries.is_empty(), "N must be positive");
        OmegaSpec { entries }
    }

    /// Fully symbolic family `so_{w1..wN}(N+1)`.
    pub fn symbolic(n: usize) -> Self {
        Self::new(vec![OmegaEntry::Symbolic; n])
    }

    /// Fixed spec from integer coefficients.
    pub fn fixed_ints(values: &[i64]) -> Self {
        Self::new(
            values
                .iter()
                .map(|&v| OmegaEntry::Fixed(rat(v, 1)))
                .collect(),
        )
    }

    /// Fixed spec from exact rationals.
    pub fn fixed(values: &[Rational]) -> Self {
        Self::new(values.iter().cloned().map(OmegaEntry::Fixed).collect())
    }

    /// Mixed spec: `Some` entries are fixed, `None` entries symbolic.
    pub fn mixed(values: &[Option<Rational>]) -> Self {
        Self::new(
            values
                .iter()
                .map(|v| match v {
                    Some(r) => OmegaEntry::Fixed(r.clone()),
                    None => OmegaEntry::Symbolic,
                })
                .collect(),
        )
    }

    /// The `N` of `so_{w1..wN}(N+1)`.
    pub fn n(&self) -> usize {
        self.entries.len()
    }

    /// Entry for `w_a`, `a` in `1..=N`.
    pub fn entry(&self, a: usize) -> &OmegaEntry {
        &self.entries[a - 1]
    }

    pub fn entries(&self) -> &[OmegaEntry] {
        &self.entries
    }

    pub fn is_fully_fixed(&self) -> bool {
        self.entries
            .iter()
            .all(|e| matches!(e, OmegaEntry::Fixed(_)))
    }

    /// Numeric value of `w_a`; errors on symbolic entries.
    pub fn value(&self, a: usize) -> Result<Rational, CkError> {
        match self.entry(a) {
            OmegaEntry::Fixed(r) => Ok(r.clone()),
            OmegaEntry::Symbolic => Err(CkError::SymbolicEntry { index: a }),
        }
    }

    /// Fix some symbolic entries, leaving the rest untouched.
    /// Keys are the omega subscripts `a` in `1..=N`.
    pub fn substitute(&self, assignment: &BTreeMap<usize, Rational>) -> Result<OmegaSpec, CkError> {
        let mut entries = self.entries.clone();
        for (&a, v) in assignment {
            if a == 0 || a > self.n() {
                return Err(CkError::UnknownVariable { index: a });
            }
            match &entries[a - 1] {
                OmegaEntry::Symbolic => entries[a - 1] = OmegaEntry::Fixed(v.clone()),
                OmegaEntry::Fixed(_) => return Err(CkError::UnknownVariable { index: a }),
            }
        }
        Ok(OmegaSpec::new(entries))
    }

    /// The two-index product `w_ab = w_{a+1} ... w_b` (`w_aa := 1`).
    pub fn omega_product(&self, a: usize, b: usize) -> Result<OmegaPoly, CkError> {
        let n = self.n();
        if a > b || b > n {
            return Err(CkError::IndexOutOfRange {
                index: a.max(b),
                n,
            });
        }
        let mut coeff = Rational::one();
        let mut exps = vec![0u32; n];
        for k in (a + 1)..=b {
            match self.entry(k) {
                OmegaEntry::Fixed(r) => {
                    if r.is_zero() {
                        return Ok(OmegaPoly::zero(n));
                    }
                    coeff *= r;
                }
                OmegaEntry::Symbolic => exps[k - 1] += 1,
            }
        }
        Ok(OmegaPoly::monomial(n, exps, coeff))
    }

    /// `w_ab` with the orientation convention `w_xy := w_yx` for `x > y`.
    pub fn omega_oriented(&self, x: usize, y: usize) -> Result<OmegaPoly, CkError> {
        if x <= y {
            self.omega_product(x, y)
        } else {
            self.omega_product(y, x)
        }
    }
}

/// Exponent vector on `w_1..w_N` for `w_ab`: ones at slots `a+1..=b`.
/// Pure combinatorics, independent of which entries are fixed.
pub fn omega_exponents(n: usize, a: usize, b: usize) -> Vec<i64> {
    let mut e = vec![0i64; n];
    for k in (a + 1)..=b {
        e[k - 1] += 1;
    }
    e
}

/// Sparse exact polynomial in the symbolic `w_a`.
///
/// Exponent vectors are dense arrays of length `N` (one slot per `w_a`);
/// slots of fixed entries always carry exponent zero, their values being
/// folded into the rational coefficient. No zero coefficient is stored,
/// so equality is canonical-form identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaPoly {
    n: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl OmegaPoly {
    pub fn zero(n: usize) -> Self {
        OmegaPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rational::one())
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Self::monomial(n, vec![0; n], c)
    }

    pub fn monomial(n: usize, exps: Vec<u32>, c: Rational) -> Self {
        assert_eq!(exps.len(), n);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        OmegaPoly { n, terms }
    }

    /// The single variable `w_a`, `a` in `1..=N`.
    pub fn var(n: usize, a: usize) -> Self {
        let mut exps = vec![0u32; n];
        exps[a - 1] = 1;
        Self::monomial(n, exps, Rational::one())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(e, c)| e.iter().all(|&x| x == 0) && c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    /// The constant term, if the polynomial is constant; `None` otherwise.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            if e.iter().all(|&x| x == 0) {
                return Some(c.clone());
            }
        }
        None
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn add(&self, other: &OmegaPoly) -> OmegaPoly {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &OmegaPoly) -> OmegaPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> OmegaPoly {
        OmegaPoly {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &OmegaPoly) -> OmegaPoly {
        assert_eq!(self.n, other.n);
        let mut out = OmegaPoly::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exps: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(exps, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> OmegaPoly {
        if c.is_zero() {
            return OmegaPoly::zero(self.n);
        }
        OmegaPoly {
            n: self.n,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    /// Partial evaluation: keys are omega subscripts in `1..=N`.
    pub fn substitute(&self, assignment: &BTreeMap<usize, Rational>) -> Result<OmegaPoly, CkError> {
        for &a in assignment.keys() {
            if a == 0 || a > self.n {
                return Err(CkError::UnknownVariable { index: a });
            }
        }
        let mut out = OmegaPoly::zero(self.n);
        for (e, c) in &self.terms {
            let mut coeff = c.clone();
            let mut exps = e.clone();
            for (&a, v) in assignment {
                let p = exps[a - 1];
                if p > 0 {
                    if v.is_zero() {
                        coeff = Rational::zero();
                        break;
                    }
                    let mut pow = Rational::one();
                    for _ in 0..p {
                        pow *= v;
                    }
                    coeff *= pow;
                    exps[a - 1] = 0;
                }
            }
            out.add_term(exps, coeff);
        }
        Ok(out)
    }

    /// Full evaluation; every variable with nonzero exponent must be covered.
    pub fn eval(&self, assignment: &BTreeMap<usize, Rational>) -> Result<Rational, CkError> {
        let p = self.substitute(assignment)?;
        match p.as_constant() {
            Some(c) => Ok(c),
            None => {
                let (e, _) = p.terms.iter().next().unwrap();
                let a = e.iter().position(|&x| x > 0).unwrap() + 1;
                Err(CkError::SymbolicEntry { index: a })
            }
        }
    }

    /// Total degree of the highest monomial, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
    }

    /// True if every coefficient is `+1` or `-1`.
    pub fn coefficients_unit(&self) -> bool {
        self.terms.values().all(|c| c.abs().is_one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_product_symbolic() {
        // all-symbolic N=3, (0,3) -> w1 w2 w3
        let spec = OmegaSpec::symbolic(3);
        let p = spec.omega_product(0, 3).unwrap();
        let expected = OmegaPoly::monomial(3, vec![1, 1, 1], rat(1, 1));
        assert_eq!(p, expected);
    }

    #[test]
    fn omega_product_diagonal_is_one() {
        let spec = OmegaSpec::symbolic(4);
        assert!(spec.omega_product(2, 2).unwrap().is_one());
    }

    #[test]
    fn omega_product_with_zero_factor() {
        // (0, w2 symbolic, -1): w_03 = 0
        let spec = OmegaSpec::new(vec![
            OmegaEntry::Fixed(rat(0, 1)),
            OmegaEntry::Symbolic,
            OmegaEntry::Fixed(rat(-1, 1)),
        ]);
        assert!(spec.omega_product(0, 3).unwrap().is_zero());
        // w_13 = -w2
        let p = spec.omega_product(1, 3).unwrap();
        assert_eq!(p, OmegaPoly::monomial(3, vec![0, 1, 0], rat(-1, 1)));
    }

    #[test]
    fn omega_cocycle_identity() {
        // w_ac = w_ab * w_bc for all a < b < c
        for n in 1..=6 {
            let spec = OmegaSpec::symbolic(n);
            for a in 0..=n {
                for b in a..=n {
                    for c in b..=n {
                        let lhs = spec.omega_product(a, c).unwrap();
                        let rhs = spec
                            .omega_product(a, b)
                            .unwrap()
                            .mul(&spec.omega_product(b, c).unwrap());
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn substitution_is_ring_hom() {
        let spec = OmegaSpec::symbolic(3);
        let u = spec.omega_product(0, 2).unwrap();
        let v = spec.omega_product(1, 3).unwrap();
        let mut asg = BTreeMap::new();
        asg.insert(2usize, rat(5, 3));
        let lhs = u.mul(&v).substitute(&asg).unwrap();
        let rhs = u.substitute(&asg).unwrap().mul(&v.substitute(&asg).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitute_rejects_fixed_slot() {
        let spec = OmegaSpec::fixed_ints(&[1, -1]);
        let mut asg = BTreeMap::new();
        asg.insert(1usize, rat(0, 1));
        assert!(spec.substitute(&asg).is_err());
    }
}
