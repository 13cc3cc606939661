//! Exact arithmetic in the universal enveloping algebra: PBW-ordered
//! monomials, normal ordering of free words, products, commutators,
//! adjoint action and contraction by substitution.
//!
//! The canonical generator order is lexicographic on `(a, b)`; a PBW
//! monomial is a strictly sorted list of `(generator, power)` pairs and
//! elements are sparse sums of monomials with `OmegaPoly` coefficients.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::{self, Generator};
use crate::error::CkError;
use crate::omega::{OmegaPoly, OmegaSpec, Rational};

/// PBW basis monomial: generators strictly increasing, positive powers.
/// The empty list is the unit monomial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PbwMonomial {
    factors: Vec<(Generator, u32)>,
}

impl PbwMonomial {
    pub fn unit() -> Self {
        PbwMonomial { factors: Vec::new() }
    }

    pub fn single(g: Generator) -> Self {
        PbwMonomial {
            factors: vec![(g, 1)],
        }
    }

    /// Builds from a sorted word, aggregating repeated generators.
    pub fn from_sorted_word(word: &[Generator]) -> Self {
        debug_assert!(word.windows(2).all(|w| w[0] <= w[1]));
        let mut factors: Vec<(Generator, u32)> = Vec::new();
        for &g in word {
            match factors.last_mut() {
                Some((last, p)) if *last == g => *p += 1,
                _ => factors.push((g, 1)),
            }
        }
        PbwMonomial { factors }
    }

    /// Builds from explicit `(generator, power)` pairs; must be strictly
    /// sorted with positive powers.
    pub fn from_pairs(pairs: &[(Generator, u32)]) -> Self {
        assert!(pairs.windows(2).all(|w| w[0].0 < w[1].0));
        assert!(pairs.iter().all(|&(_, p)| p > 0));
        PbwMonomial {
            factors: pairs.to_vec(),
        }
    }

    pub fn factors(&self) -> &[(Generator, u32)] {
        &self.factors
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|(_, p)| p).sum()
    }

    /// Expands powers into the underlying sorted word.
    pub fn word(&self) -> Vec<Generator> {
        let mut out = Vec::with_capacity(self.degree() as usize);
        for &(g, p) in &self.factors {
            for _ in 0..p {
                out.push(g);
            }
        }
        out
    }
}

/// Element of the enveloping algebra in canonical (PBW) form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnvelopingElement {
    n: usize,
    terms: BTreeMap<PbwMonomial, OmegaPoly>,
}

impl EnvelopingElement {
    pub fn zero(n: usize) -> Self {
        EnvelopingElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        let mut e = Self::zero(n);
        e.add_term(PbwMonomial::unit(), OmegaPoly::one(n));
        e
    }

    pub fn generator(n: usize, g: Generator) -> Self {
        let mut e = Self::zero(n);
        e.add_term(PbwMonomial::single(g), OmegaPoly::one(n));
        e
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &OmegaPoly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &PbwMonomial) -> OmegaPoly {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| OmegaPoly::zero(self.n))
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: OmegaPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing = existing.add(&c);
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &EnvelopingElement) -> EnvelopingElement {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &EnvelopingElement) -> EnvelopingElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> EnvelopingElement {
        EnvelopingElement {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn scale_poly(&self, p: &OmegaPoly) -> EnvelopingElement {
        let mut out = EnvelopingElement::zero(self.n);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.mul(p));
        }
        out
    }

    pub fn scale_rat(&self, r: &Rational) -> EnvelopingElement {
        if r.is_zero() {
            return EnvelopingElement::zero(self.n);
        }
        EnvelopingElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.scale(r)))
                .collect(),
        }
    }

    /// True if every monomial has the given total degree.
    pub fn is_homogeneous(&self, degree: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == degree)
    }

    /// Substitutes rationals for omega variables in every coefficient.
    /// Keys are omega subscripts in `1..=N`.
    pub fn substitute_coeffs(
        &self,
        assignment: &BTreeMap<usize, Rational>,
    ) -> Result<EnvelopingElement, CkError> {
        let mut out = EnvelopingElement::zero(self.n);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.substitute(assignment)?);
        }
        Ok(out)
    }
}

/// Which adjacent out-of-order pair the straightening loop rewrites next.
/// Both strategies must agree on the canonical result (confluence).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RewriteStrategy {
    LeftmostSwap,
    RightmostSwap,
}

/// Rewrites a free word of generators into the PBW basis by repeatedly
/// replacing an adjacent out-of-order pair `g h` with `h g + [g, h]`.
/// Each rewrite strictly decreases the (length, inversions) measure, so
/// the worklist terminates.
pub fn normal_order(spec: &OmegaSpec, word: &[Generator]) -> Result<EnvelopingElement, CkError> {
    normal_order_with(spec, word, OmegaPoly::one(spec.n()), RewriteStrategy::LeftmostSwap)
}

pub fn normal_order_with(
    spec: &OmegaSpec,
    word: &[Generator],
    coeff: OmegaPoly,
    strategy: RewriteStrategy,
) -> Result<EnvelopingElement, CkError> {
    let n = spec.n();
    for g in word {
        if g.b() > n {
            return Err(CkError::MismatchedAlgebra {
                expected: n,
                found: g.b(),
            });
        }
    }
    let mut result = EnvelopingElement::zero(n);
    let mut worklist: Vec<(Vec<Generator>, OmegaPoly)> = vec![(word.to_vec(), coeff)];
    while let Some((w, c)) = worklist.pop() {
        if c.is_zero() {
            continue;
        }
        let swap_at = match strategy {
            RewriteStrategy::LeftmostSwap => (0..w.len().saturating_sub(1))
                .find(|&i| w[i] > w[i + 1]),
            RewriteStrategy::RightmostSwap => (0..w.len().saturating_sub(1))
                .rev()
                .find(|&i| w[i] > w[i + 1]),
        };
        match swap_at {
            None => result.add_term(PbwMonomial::from_sorted_word(&w), c),
            Some(i) => {
                let mut swapped = w.clone();
                swapped.swap(i, i + 1);
                if let Some((bc, bg)) = algebra::bracket_term(spec, &w[i], &w[i + 1])? {
                    let mut contracted = Vec::with_capacity(w.len() - 1);
                    contracted.extend_from_slice(&w[..i]);
                    contracted.push(bg);
                    contracted.extend_from_slice(&w[i + 2..]);
                    worklist.push((contracted, c.mul(&bc)));
                }
                worklist.push((swapped, c));
            }
        }
    }
    Ok(result)
}

/// PBW-normal-ordered associative product.
pub fn multiply(
    spec: &OmegaSpec,
    u: &EnvelopingElement,
    v: &EnvelopingElement,
) -> Result<EnvelopingElement, CkError> {
    let n = spec.n();
    if u.n != n || v.n != n {
        return Err(CkError::MismatchedAlgebra {
            expected: n,
            found: u.n.max(v.n),
        });
    }
    let mut out = EnvelopingElement::zero(n);
    for (mu, cu) in &u.terms {
        for (mv, cv) in &v.terms {
            let mut word = mu.word();
            word.extend(mv.word());
            let c = cu.mul(cv);
            if c.is_zero() {
                continue;
            }
            let prod = normal_order_with(spec, &word, c, RewriteStrategy::LeftmostSwap)?;
            out = out.add(&prod);
        }
    }
    Ok(out)
}

/// `[u, v] = uv - vu`.
pub fn commutator(
    spec: &OmegaSpec,
    u: &EnvelopingElement,
    v: &EnvelopingElement,
) -> Result<EnvelopingElement, CkError> {
    Ok(multiply(spec, u, v)?.sub(&multiply(spec, v, u)?))
}

/// Adjoint action `ad O_g (u) = [O_g, u]`.
pub fn adjoint_action(
    spec: &OmegaSpec,
    g: &Generator,
    u: &EnvelopingElement,
) -> Result<EnvelopingElement, CkError> {
    commutator(spec, &EnvelopingElement::generator(spec.n(), *g), u)
}

/// Validates a substitution against the spec: every targeted variable
/// must be a symbolic entry. Realizes the contraction `w_a := 0` with no
/// generator rescaling.
pub fn substitute(
    spec: &OmegaSpec,
    u: &EnvelopingElement,
    assignment: &BTreeMap<usize, Rational>,
) -> Result<EnvelopingElement, CkError> {
    for &a in assignment.keys() {
        if a == 0 || a > spec.n() {
            return Err(CkError::UnknownVariable { index: a });
        }
        if !matches!(spec.entry(a), crate::omega::OmegaEntry::Symbolic) {
            return Err(CkError::UnknownVariable { index: a });
        }
    }
    u.substitute_coeffs(assignment)
}

/// Outcome of a centrality check. On failure carries the first offending
/// generator and the nonzero normal-ordered remainder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Centrality {
    Central,
    NotCentral {
        generator: Generator,
        remainder: EnvelopingElement,
    },
}

impl Centrality {
    pub fn is_central(&self) -> bool {
        matches!(self, Centrality::Central)
    }
}

/// True iff `[O_g, u]` normal-orders to zero for every generator.
pub fn is_central(spec: &OmegaSpec, u: &EnvelopingElement) -> Result<Centrality, CkError> {
    for g in algebra::generators(spec.n()) {
        let r = adjoint_action(spec, &g, u)?;
        if !r.is_zero() {
            return Ok(Centrality::NotCentral {
                generator: g,
                remainder: r,
            });
        }
    }
    Ok(Centrality::Central)
}

/// Symmetrization map: the average of all orderings of the word, as an
/// element of the enveloping algebra.
pub fn symmetrize(spec: &OmegaSpec, word: &[Generator]) -> Result<EnvelopingElement, CkError> {
    let n = spec.n();
    let mut out = EnvelopingElement::zero(n);
    let mut perm = word.to_vec();
    let len = perm.len();
    let mut count: u64 = 0;
    // Heap's algorithm, iterative
    let mut stack = vec![0usize; len];
    out = out.add(&normal_order(spec, &perm)?);
    count += 1;
    let mut i = 1;
    while i < len {
        if stack[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(stack[i], i);
            }
            out = out.add(&normal_order(spec, &perm)?);
            count += 1;
            stack[i] += 1;
            i = 1;
        } else {
            stack[i] = 0;
            i += 1;
        }
    }
    let inv = Rational::new(1.into(), count.into());
    Ok(out.scale_rat(&inv))
}
