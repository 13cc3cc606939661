//! W-symbols: the Pauli-Lubanski-type elements of the enveloping algebra,
//! built by the two-index-removal recursion, plus the closed-form rule
//! for their brackets with generators.
//!
//! A symbol over `2s` strictly increasing indices is homogeneous of
//! degree `s`; for `2s = 2` it is the generator itself. Squares of
//! W-symbols with omega prefactors assemble the even-order Casimirs.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::One;

use crate::algebra::{bracket_term, Generator};
use crate::enveloping::{self, EnvelopingElement};
use crate::error::CkError;
use crate::omega::{omega_exponents, OmegaEntry, OmegaPoly, OmegaSpec, Rational};

/// Strictly increasing list of `2s` indices from `0..=N`, positionally
/// partitioned as `a_1 < ... < a_s < b_1 < ... < b_s`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct WIndexSet {
    indices: Vec<usize>,
}

impl WIndexSet {
    pub fn new(indices: Vec<usize>, n: usize) -> Result<Self, CkError> {
        if indices.len() < 2 || indices.len() % 2 != 0 {
            return Err(CkError::BadIndexSet);
        }
        if !indices.windows(2).all(|w| w[0] < w[1]) {
            return Err(CkError::BadIndexSet);
        }
        if *indices.last().unwrap() > n {
            return Err(CkError::BadIndexSet);
        }
        Ok(WIndexSet { indices })
    }

    /// The full set `{0, 1, ..., N}`; requires odd `N`.
    pub fn full(n: usize) -> Result<Self, CkError> {
        if n % 2 == 0 {
            return Err(CkError::EvenN { n });
        }
        Self::new((0..=n).collect(), n)
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// Half the index count.
    pub fn s(&self) -> usize {
        self.indices.len() / 2
    }

    /// First half `a_1..a_s`.
    pub fn a_block(&self) -> &[usize] {
        &self.indices[..self.s()]
    }

    /// Second half `b_1..b_s`.
    pub fn b_block(&self) -> &[usize] {
        &self.indices[self.s()..]
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    /// Removes two indices; the remaining sorted list re-partitions
    /// positionally into new a- and b-blocks.
    fn remove_two(&self, x: usize, y: usize) -> WIndexSet {
        let indices: Vec<usize> = self
            .indices
            .iter()
            .copied()
            .filter(|&i| i != x && i != y)
            .collect();
        debug_assert_eq!(indices.len(), self.indices.len() - 2);
        WIndexSet { indices }
    }

    /// Exponent vector (over `w_1..w_N`) of the crossed prefactor
    /// `w_{a_1 b_s} w_{a_2 b_{s-1}} ... w_{a_s b_1}`.
    pub fn crossed_omega_exponents(&self, n: usize) -> Vec<i64> {
        let s = self.s();
        let a = self.a_block();
        let b = self.b_block();
        let mut e = alloc::vec![0i64; n];
        for i in 0..s {
            for (k, v) in omega_exponents(n, a[i], b[s - 1 - i]).iter().enumerate() {
                e[k] += v;
            }
        }
        e
    }

    /// The crossed prefactor as a polynomial of the given spec.
    pub fn crossed_omega(&self, spec: &OmegaSpec) -> Result<OmegaPoly, CkError> {
        let s = self.s();
        let a = self.a_block();
        let b = self.b_block();
        let mut p = OmegaPoly::one(spec.n());
        for i in 0..s {
            p = p.mul(&spec.omega_product(a[i], b[s - 1 - i])?);
        }
        Ok(p)
    }
}

/// A constructed W-symbol: its index set and its enveloping element,
/// homogeneous of degree `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WSymbol {
    pub index_set: WIndexSet,
    pub element: EnvelopingElement,
}

/// Memo table for W-symbols of one algebra. The recursion re-derives
/// shared sub-symbols exponentially often without it. Not shared across
/// tasks; build one per worker.
pub struct WTable {
    spec: OmegaSpec,
    memo: BTreeMap<Vec<usize>, EnvelopingElement>,
}

impl WTable {
    pub fn new(spec: &OmegaSpec) -> Self {
        WTable {
            spec: spec.clone(),
            memo: BTreeMap::new(),
        }
    }

    pub fn spec(&self) -> &OmegaSpec {
        &self.spec
    }

    /// The W-symbol element for an index set, memoized.
    pub fn w(&mut self, ix: &WIndexSet) -> Result<EnvelopingElement, CkError> {
        if let Some(e) = self.memo.get(ix.indices()) {
            return Ok(e.clone());
        }
        let n = self.spec.n();
        let element = if ix.s() == 1 {
            let g = Generator::new(ix.indices()[0], ix.indices()[1], n)?;
            EnvelopingElement::generator(n, g)
        } else {
            let s = ix.s();
            let a = ix.a_block().to_vec();
            let b = ix.b_block().to_vec();
            let b_s = b[s - 1];
            let mut acc = EnvelopingElement::zero(n);
            for mu in 1..=s {
                let g = Generator::new(a[mu - 1].min(b_s), a[mu - 1].max(b_s), n)?;
                let sub = self.w(&ix.remove_two(a[mu - 1], b_s))?;
                let term = enveloping::multiply(
                    &self.spec,
                    &EnvelopingElement::generator(n, g),
                    &sub,
                )?;
                let sign = if mu % 2 == 1 {
                    Rational::one()
                } else {
                    -Rational::one()
                };
                acc = acc.add(&term.scale_rat(&sign));
            }
            for nu in 1..=(s - 1) {
                let pref = self.spec.omega_oriented(a[s - 1], b[nu - 1])?;
                let g = Generator::new(b[nu - 1], b_s, n)?;
                let sub = self.w(&ix.remove_two(b[nu - 1], b_s))?;
                let term = enveloping::multiply(
                    &self.spec,
                    &EnvelopingElement::generator(n, g),
                    &sub,
                )?;
                let sign = if (s + nu) % 2 == 1 {
                    Rational::one()
                } else {
                    -Rational::one()
                };
                acc = acc.add(&term.scale_poly(&pref.scale(&sign)));
            }
            debug_assert!(monomials_pairwise_commute(&self.spec, &acc));
            acc
        };
        self.memo.insert(ix.indices().to_vec(), element.clone());
        Ok(element)
    }

    pub fn w_symbol(&mut self, ix: &WIndexSet) -> Result<WSymbol, CkError> {
        Ok(WSymbol {
            index_set: ix.clone(),
            element: self.w(ix)?,
        })
    }

    /// Bracket of two W-symbols, computed by the engine and normal-ordered.
    pub fn w_w_bracket(
        &mut self,
        ix1: &WIndexSet,
        ix2: &WIndexSet,
    ) -> Result<EnvelopingElement, CkError> {
        let u = self.w(ix1)?;
        let v = self.w(ix2)?;
        enveloping::commutator(&self.spec, &u, &v)
    }

    /// Closed form of `[O_ab, W_ix]`: zero if both or neither index of the
    /// generator occurs in the set; otherwise a signed omega monomial times
    /// the merged W-symbol. The omega factor is the exact square root of
    /// `w_ab * crossed(ix) / crossed(ix')`, taken by halving an even
    /// exponent vector, never by polynomial factorization.
    pub fn w_gen_bracket_closed_form(
        &mut self,
        g: &Generator,
        ix: &WIndexSet,
    ) -> Result<EnvelopingElement, CkError> {
        let n = self.spec.n();
        let in_a = ix.contains(g.a());
        let in_b = ix.contains(g.b());
        if in_a == in_b {
            return Ok(EnvelopingElement::zero(n));
        }
        let common = if in_a { g.a() } else { g.b() };
        let other = if in_a { g.b() } else { g.a() };

        // transposition parity of the sequence {a, b; ix}
        let mut seq = alloc::vec![g.a(), g.b()];
        seq.extend_from_slice(ix.indices());
        let p = inversions(&seq);

        // merged set: insert the non-common index, drop the common one
        let mut merged: Vec<usize> = ix
            .indices()
            .iter()
            .copied()
            .filter(|&i| i != common)
            .collect();
        let pos = merged.partition_point(|&i| i < other);
        merged.insert(pos, other);
        let merged = WIndexSet::new(merged, n)?;

        // exponent arithmetic on w_1..w_N: the ratio is a perfect square
        let mut e = omega_exponents(n, g.a(), g.b());
        for (k, v) in ix.crossed_omega_exponents(n).iter().enumerate() {
            e[k] += v;
        }
        for (k, v) in merged.crossed_omega_exponents(n).iter().enumerate() {
            e[k] -= v;
        }
        if e.iter().any(|&x| x < 0 || x % 2 != 0) {
            return Err(CkError::CancellationFailure);
        }
        // evaluate the half-exponent monomial against the spec
        let mut coeff = Rational::one();
        let mut exps = alloc::vec![0u32; n];
        for (k, &x) in e.iter().enumerate() {
            let half = (x / 2) as u32;
            if half == 0 {
                continue;
            }
            match self.spec.entry(k + 1) {
                OmegaEntry::Symbolic => exps[k] = half,
                OmegaEntry::Fixed(r) => {
                    for _ in 0..half {
                        coeff *= r;
                    }
                }
            }
        }
        let factor = OmegaPoly::monomial(n, exps, coeff);
        let sign = if (p + 1) % 2 == 0 {
            Rational::one()
        } else {
            -Rational::one()
        };
        Ok(self.w(&merged)?.scale_poly(&factor.scale(&sign)))
    }
}

/// Number of strict inversions in a sequence; the minimum transposition
/// count needed to sort it.
pub fn inversions(seq: &[usize]) -> usize {
    let mut p = 0;
    for i in 0..seq.len() {
        for j in (i + 1)..seq.len() {
            if seq[i] > seq[j] {
                p += 1;
            }
        }
    }
    p
}

/// Every PBW monomial of the element consists of pairwise-commuting
/// generators. Validates the substitution-for-symmetrization claim.
pub fn monomials_pairwise_commute(spec: &OmegaSpec, e: &EnvelopingElement) -> bool {
    e.terms().all(|(m, _)| {
        let f = m.factors();
        for i in 0..f.len() {
            for j in (i + 1)..f.len() {
                match bracket_term(spec, &f[i].0, &f[j].0) {
                    Ok(None) => {}
                    _ => return false,
                }
            }
        }
        true
    })
}

/// The common omega-weight of every term (doubled so generator
/// half-weights stay integral): a generator contributes the exponent
/// vector of `w_ab`, a coefficient monomial twice its own exponents.
/// Returns `None` if the element is not weight-homogeneous.
pub fn dimensional_weight(e: &EnvelopingElement) -> Option<Vec<i64>> {
    let n = e.n();
    let mut weight: Option<Vec<i64>> = None;
    for (m, c) in e.terms() {
        let mut base = alloc::vec![0i64; n];
        for &(g, p) in m.factors() {
            for (k, v) in omega_exponents(n, g.a(), g.b()).iter().enumerate() {
                base[k] += v * p as i64;
            }
        }
        for (exps, _) in c.terms() {
            let mut w = base.clone();
            for (k, &x) in exps.iter().enumerate() {
                w[k] += 2 * x as i64;
            }
            match &weight {
                None => weight = Some(w),
                Some(prev) if *prev == w => {}
                Some(_) => return None,
            }
        }
    }
    weight
}

/// Every even-size strictly increasing subset of `0..=n`.
#[cfg(test)]
pub(crate) fn all_index_sets(n: usize) -> alloc::vec::Vec<WIndexSet> {
    let mut out = alloc::vec::Vec::new();
    let total = n + 1;
    for mask in 1u32..(1 << total) {
        let count = mask.count_ones() as usize;
        if count < 2 || count % 2 != 0 {
            continue;
        }
        let indices: alloc::vec::Vec<usize> =
            (0..total).filter(|i| mask & (1 << i) != 0).collect();
        out.push(WIndexSet::new(indices, n).unwrap());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::generators;
    use crate::omega::rat;
    use crate::enveloping::PbwMonomial;

    fn gen(a: usize, b: usize, n: usize) -> Generator {
        Generator::new(a, b, n).unwrap()
    }

    fn ix(indices: &[usize], n: usize) -> WIndexSet {
        WIndexSet::new(indices.to_vec(), n).unwrap()
    }

    #[test]
    fn base_case_is_generator() {
        let spec = OmegaSpec::symbolic(3);
        let mut t = WTable::new(&spec);
        let w = t.w(&ix(&[1, 3], 3)).unwrap();
        assert_eq!(w, EnvelopingElement::generator(3, gen(1, 3, 3)));
    }

    #[test]
    fn w_0123_matches_printed_form() {
        // W_0123 = w_2 O_01 O_23 - O_02 O_13 + O_03 O_12 (PBW order)
        let spec = OmegaSpec::symbolic(3);
        let mut t = WTable::new(&spec);
        let w = t.w(&ix(&[0, 1, 2, 3], 3)).unwrap();
        let mut expected = EnvelopingElement::zero(3);
        expected.add_term(
            PbwMonomial::from_pairs(&[(gen(0, 1, 3), 1), (gen(2, 3, 3), 1)]),
            OmegaPoly::var(3, 2),
        );
        expected.add_term(
            PbwMonomial::from_pairs(&[(gen(0, 2, 3), 1), (gen(1, 3, 3), 1)]),
            OmegaPoly::constant(3, rat(-1, 1)),
        );
        expected.add_term(
            PbwMonomial::from_pairs(&[(gen(0, 3, 3), 1), (gen(1, 2, 3), 1)]),
            OmegaPoly::one(3),
        );
        assert_eq!(w, expected);
    }

    #[test]
    fn w_1234_matches_printed_form() {
        // W_1234 = w_3 O_12 O_34 - O_13 O_24 + O_14 O_23 (N = 4)
        let spec = OmegaSpec::symbolic(4);
        let mut t = WTable::new(&spec);
        let w = t.w(&ix(&[1, 2, 3, 4], 4)).unwrap();
        let mut expected = EnvelopingElement::zero(4);
        expected.add_term(
            PbwMonomial::from_pairs(&[(gen(1, 2, 4), 1), (gen(3, 4, 4), 1)]),
            OmegaPoly::var(4, 3),
        );
        expected.add_term(
            PbwMonomial::from_pairs(&[(gen(1, 3, 4), 1), (gen(2, 4, 4), 1)]),
            OmegaPoly::constant(4, rat(-1, 1)),
        );
        expected.add_term(
            PbwMonomial::from_pairs(&[(gen(1, 4, 4), 1), (gen(2, 3, 4), 1)]),
            OmegaPoly::one(4),
        );
        assert_eq!(w, expected);
    }

    #[test]
    fn transposition_parity_examples() {
        assert_eq!(inversions(&[1, 3, 0, 2, 3, 4]), 3);
        assert_eq!(inversions(&[1, 5, 1, 2, 3, 4]), 4);
    }

    #[test]
    fn closed_form_bracket_examples() {
        // [O_04, W_0123] = -w_1 w_2 W_1234 at N = 4
        let spec = OmegaSpec::symbolic(4);
        let mut t = WTable::new(&spec);
        let got = t
            .w_gen_bracket_closed_form(&gen(0, 4, 4), &ix(&[0, 1, 2, 3], 4))
            .unwrap();
        let w1234 = t.w(&ix(&[1, 2, 3, 4], 4)).unwrap();
        let factor = OmegaPoly::var(4, 1).mul(&OmegaPoly::var(4, 2)).neg();
        assert_eq!(got, w1234.scale_poly(&factor));

        // both indices present: zero
        let z = t
            .w_gen_bracket_closed_form(&gen(2, 3, 4), &ix(&[0, 1, 2, 3], 4))
            .unwrap();
        assert!(z.is_zero());
        // neither present at N = 5
        let spec5 = OmegaSpec::symbolic(5);
        let mut t5 = WTable::new(&spec5);
        let z5 = t5
            .w_gen_bracket_closed_form(&gen(4, 5, 5), &ix(&[0, 1, 2, 3], 5))
            .unwrap();
        assert!(z5.is_zero());
    }

    #[test]
    fn closed_form_agrees_with_engine_small() {
        for n in 2..=4 {
            let spec = OmegaSpec::symbolic(n);
            let mut t = WTable::new(&spec);
            let sets = all_index_sets(n);
            for s in &sets {
                let w = t.w(s).unwrap();
                for g in generators(n) {
                    let closed = t.w_gen_bracket_closed_form(&g, s).unwrap();
                    let engine = enveloping::commutator(
                        &spec,
                        &EnvelopingElement::generator(n, g),
                        &w,
                    )
                    .unwrap();
                    assert_eq!(closed, engine, "N={n} g={:?} ix={:?}", g, s.indices());
                }
            }
        }
    }

    #[test]
    fn homogeneity_and_unit_coefficients() {
        for n in 2..=5 {
            let spec = OmegaSpec::symbolic(n);
            let mut t = WTable::new(&spec);
            for s in &all_index_sets(n) {
                let w = t.w(s).unwrap();
                assert!(w.is_homogeneous(s.s() as u32));
                for (_, c) in w.terms() {
                    assert!(c.coefficients_unit());
                }
                assert!(monomials_pairwise_commute(&spec, &w));
                assert!(dimensional_weight(&w).is_some());
            }
        }
    }

}
