//! The Cayley-Klein Lie algebra `so_{w1..wN}(N+1)`: generators, basis
//! brackets, vector representation, metric and Killing form.
//!
//! Generators are `Omega_ab` with `0 <= a < b <= N`; `Omega_ba` is never
//! materialized. The nonzero basis brackets (no sum over indices) are
//!
//! ```text
//! [O_ab, O_ac] =  w_ab O_bc
//! [O_ab, O_bc] = -O_ac          a < b < c
//! [O_ac, O_bc] =  w_bc O_ab
//! ```
//!
//! with every four-distinct-index bracket equal to zero.

use alloc::vec::Vec;

use num_traits::One;

use crate::enveloping::EnvelopingElement;
use crate::error::CkError;
use crate::matrix::RatMatrix;
use crate::omega::{OmegaPoly, OmegaSpec, Rational};

/// Generator `Omega_ab` with `0 <= a < b <= N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    a: usize,
    b: usize,
}

impl Generator {
    pub fn new(a: usize, b: usize, n: usize) -> Result<Self, CkError> {
        if a >= b || b > n {
            return Err(CkError::IndexOutOfRange { index: b.max(a), n });
        }
        Ok(Generator { a, b })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn indices(&self) -> (usize, usize) {
        (self.a, self.b)
    }

    pub fn shares_index(&self, other: &Generator) -> bool {
        self.a == other.a || self.a == other.b || self.b == other.a || self.b == other.b
    }
}

/// All `N(N+1)/2` generators in canonical (lexicographic) order.
pub fn generators(n: usize) -> Vec<Generator> {
    let mut out = Vec::with_capacity(n * (n + 1) / 2);
    for a in 0..n {
        for b in (a + 1)..=n {
            out.push(Generator { a, b });
        }
    }
    out
}

/// The bracket `[g1, g2]` in structure-constant form: `None` for zero,
/// otherwise the coefficient and the single resulting generator.
pub fn bracket_term(
    spec: &OmegaSpec,
    g1: &Generator,
    g2: &Generator,
) -> Result<Option<(OmegaPoly, Generator)>, CkError> {
    let n = spec.n();
    if g1.b > n || g2.b > n {
        return Err(CkError::MismatchedAlgebra {
            expected: n,
            found: g1.b.max(g2.b),
        });
    }
    if g1 == g2 || !g1.shares_index(g2) {
        return Ok(None);
    }
    // reduce to the three ordered patterns, tracking an overall sign
    let (x, y, sign) = if g1 < g2 {
        (*g1, *g2, Rational::one())
    } else {
        (*g2, *g1, -Rational::one())
    };
    // x < y lexicographically and they share exactly one index
    let (coeff, gen) = if x.a == y.a {
        // [O_ab, O_ac] = w_ab O_bc, with b < c since x < y
        let c = spec.omega_product(x.a, x.b)?;
        (c, Generator { a: x.b, b: y.b })
    } else if x.b == y.a {
        // [O_ab, O_bc] = -O_ac
        (
            OmegaPoly::constant(n, -Rational::one()),
            Generator { a: x.a, b: y.b },
        )
    } else if x.b == y.b {
        // [O_ac, O_bc] = w_bc O_ab, with x.a < y.a
        let c = spec.omega_product(y.a, y.b)?;
        (c, Generator { a: x.a, b: y.a })
    } else {
        // x.a == y.b is impossible for x < y with a < b inside each pair
        unreachable!("unordered generator pair after sorting");
    };
    let coeff = coeff.scale(&sign);
    if coeff.is_zero() {
        return Ok(None);
    }
    Ok(Some((coeff, gen)))
}

/// The basis bracket as a degree-<=1 enveloping element.
pub fn bracket_basis(
    spec: &OmegaSpec,
    g1: &Generator,
    g2: &Generator,
) -> Result<EnvelopingElement, CkError> {
    match bracket_term(spec, g1, g2)? {
        None => Ok(EnvelopingElement::zero(spec.n())),
        Some((coeff, g)) => Ok(EnvelopingElement::generator(spec.n(), g).scale_poly(&coeff)),
    }
}

/// Vector representation `O_ab -> -w_ab e_ab + e_ba` for fully numeric specs.
pub fn vector_rep(spec: &OmegaSpec, g: &Generator) -> Result<RatMatrix, CkError> {
    let n = spec.n();
    let wab = spec
        .omega_product(g.a, g.b)?
        .as_constant()
        .ok_or(CkError::SymbolicEntry { index: 0 })?;
    let mut m = RatMatrix::zeros(n + 1, n + 1);
    m[(g.a, g.b)] = -wab;
    m[(g.b, g.a)] = Rational::one();
    Ok(m)
}

/// The diagonal of the metric `I_k = diag(1, w_01, w_02, ..., w_0N)`.
pub fn metric_matrix(spec: &OmegaSpec) -> Vec<OmegaPoly> {
    let n = spec.n();
    (0..=n)
        .map(|b| spec.omega_product(0, b).expect("indices in range"))
        .collect()
}

/// Numeric metric as a diagonal matrix; errors on symbolic entries.
pub fn metric_matrix_numeric(spec: &OmegaSpec) -> Result<RatMatrix, CkError> {
    let n = spec.n();
    let mut m = RatMatrix::zeros(n + 1, n + 1);
    for b in 0..=n {
        m[(b, b)] = spec
            .omega_product(0, b)?
            .as_constant()
            .ok_or(CkError::SymbolicEntry { index: b })?;
    }
    Ok(m)
}

/// Killing form `beta(g1, g2) = Tr(ad g1 . ad g2)`, computed from the
/// structure constants. Diagonal with entries `-2(N-1) w_ab`.
pub fn killing_form(
    spec: &OmegaSpec,
    g1: &Generator,
    g2: &Generator,
) -> Result<OmegaPoly, CkError> {
    let n = spec.n();
    let mut trace = OmegaPoly::zero(n);
    for g in generators(n) {
        // coefficient of O_g in [g1, [g2, O_g]]
        if let Some((c2, h)) = bracket_term(spec, g2, &g)? {
            if let Some((c1, k)) = bracket_term(spec, g1, &h)? {
                if k == g {
                    trace = trace.add(&c1.mul(&c2));
                }
            }
        }
    }
    Ok(trace)
}

/// Closed form of the Killing form diagonal: `-2(N-1) w_ab`.
pub fn killing_closed_form(spec: &OmegaSpec, g: &Generator) -> Result<OmegaPoly, CkError> {
    let n = spec.n();
    let factor = Rational::from_integer((-2 * (n as i64 - 1)).into());
    Ok(spec.omega_product(g.a, g.b)?.scale(&factor))
}

/// The reversal isomorphism `so_{w1..wN} ~ so_{wN..w1}` together with the
/// generator relabeling that realizes it.
#[derive(Debug, Clone)]
pub struct ReversalMap {
    n: usize,
}

impl ReversalMap {
    /// Image of a generator: `O_ab -> -O_{N-b, N-a}` (the sign makes the
    /// relabeling a Lie algebra homomorphism, checked exhaustively in tests).
    pub fn map_generator(&self, g: &Generator) -> (Rational, Generator) {
        (
            -Rational::one(),
            Generator {
                a: self.n - g.b,
                b: self.n - g.a,
            },
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// Reversed spec `(wN, ..., w1)` and the generator relabeling under which
/// all brackets are preserved.
pub fn reverse_isomorphism(spec: &OmegaSpec) -> (OmegaSpec, ReversalMap) {
    let mut entries: Vec<_> = spec.entries().to_vec();
    entries.reverse();
    (OmegaSpec::new(entries), ReversalMap { n: spec.n() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::omega::rat;
    use alloc::collections::BTreeMap;

    fn gen(a: usize, b: usize, n: usize) -> Generator {
        Generator::new(a, b, n).unwrap()
    }

    #[test]
    fn bracket_shared_first_index() {
        // [O_01, O_02] = w_1 O_12
        let spec = OmegaSpec::symbolic(2);
        let got = bracket_basis(&spec, &gen(0, 1, 2), &gen(0, 2, 2)).unwrap();
        let expected =
            EnvelopingElement::generator(2, gen(1, 2, 2)).scale_poly(&OmegaPoly::var(2, 1));
        assert_eq!(got, expected);
    }

    #[test]
    fn bracket_four_distinct_indices_is_zero() {
        let spec = OmegaSpec::symbolic(3);
        let got = bracket_basis(&spec, &gen(0, 1, 3), &gen(2, 3, 3)).unwrap();
        assert!(got.is_zero());
    }

    #[test]
    fn bracket_shared_second_index() {
        // [O_02, O_12] = w_2 O_01
        let spec = OmegaSpec::symbolic(2);
        let got = bracket_basis(&spec, &gen(0, 2, 2), &gen(1, 2, 2)).unwrap();
        let expected =
            EnvelopingElement::generator(2, gen(0, 1, 2)).scale_poly(&OmegaPoly::var(2, 2));
        assert_eq!(got, expected);
    }

    #[test]
    fn bracket_antisymmetry_exhaustive() {
        for n in 1..=6 {
            let spec = OmegaSpec::symbolic(n);
            let gens = generators(n);
            for g1 in &gens {
                for g2 in &gens {
                    let lhs = bracket_basis(&spec, g1, g2).unwrap();
                    let rhs = bracket_basis(&spec, g2, g1).unwrap().neg();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn vector_rep_entries() {
        // N=2, all w=1: O_01 has -1 at (0,1) and +1 at (1,0)
        let spec = OmegaSpec::fixed_ints(&[1, 1]);
        let m = vector_rep(&spec, &gen(0, 1, 2)).unwrap();
        assert_eq!(m[(0, 1)], rat(-1, 1));
        assert_eq!(m[(1, 0)], rat(1, 1));
        assert_eq!(m[(0, 0)], rat(0, 1));

        // contraction kills the e_ab term
        let spec0 = OmegaSpec::fixed_ints(&[0, 1]);
        let m0 = vector_rep(&spec0, &gen(0, 1, 2)).unwrap();
        assert_eq!(m0[(0, 1)], rat(0, 1));
        assert_eq!(m0[(1, 0)], rat(1, 1));
    }

    #[test]
    fn vector_rep_is_homomorphism() {
        // matrix commutators match bracket_basis images, N=4, w=(1,-1,1,1)
        let spec = OmegaSpec::fixed_ints(&[1, -1, 1, 1]);
        let gens = generators(4);
        for g1 in &gens {
            for g2 in &gens {
                let m1 = vector_rep(&spec, g1).unwrap();
                let m2 = vector_rep(&spec, g2).unwrap();
                let comm = m1.mul(&m2).sub(&m2.mul(&m1));
                let mut image = RatMatrix::zeros(5, 5);
                if let Some((c, g)) = bracket_term(&spec, g1, g2).unwrap() {
                    let c = c.as_constant().unwrap();
                    let mg = vector_rep(&spec, &g).unwrap();
                    for i in 0..5 {
                        for j in 0..5 {
                            image[(i, j)] = &c * &mg[(i, j)];
                        }
                    }
                }
                assert_eq!(comm, image);
            }
        }
    }

    #[test]
    fn vector_rep_metric_antisymmetry() {
        // X^t I_k + I_k X = 0 for every generator
        for (n, vals) in [(2, &[1, -1][..]), (4, &[1, -1, 0, 2][..])] {
            let spec = OmegaSpec::fixed_ints(vals);
            let ik = metric_matrix_numeric(&spec).unwrap();
            for g in generators(n) {
                let x = vector_rep(&spec, &g).unwrap();
                let lhs = x.transpose().mul(&ik).add(&ik.mul(&x));
                assert!(lhs.is_zero());
            }
        }
    }

    #[test]
    fn metric_diagonal_symbolic() {
        let spec = OmegaSpec::symbolic(2);
        let diag = metric_matrix(&spec);
        assert!(diag[0].is_one());
        assert_eq!(diag[1], OmegaPoly::var(2, 1));
        assert_eq!(diag[2], OmegaPoly::var(2, 1).mul(&OmegaPoly::var(2, 2)));

        let flat = OmegaSpec::fixed_ints(&[0, 0]);
        let d0 = metric_matrix(&flat);
        assert!(d0[0].is_one());
        assert!(d0[1].is_zero());
        assert!(d0[2].is_zero());
    }

    #[test]
    fn killing_form_closed_form() {
        // N=4: beta(O_01, O_01) = -6 w_1; off-diagonal zero
        let spec = OmegaSpec::symbolic(4);
        let b = killing_form(&spec, &gen(0, 1, 4), &gen(0, 1, 4)).unwrap();
        assert_eq!(b, OmegaPoly::var(4, 1).scale(&rat(-6, 1)));
        let off = killing_form(&spec, &gen(0, 1, 4), &gen(2, 3, 4)).unwrap();
        assert!(off.is_zero());

        // N=3: beta(O_13, O_13) = -4 w_2 w_3
        let spec3 = OmegaSpec::symbolic(3);
        let b13 = killing_form(&spec3, &gen(1, 3, 3), &gen(1, 3, 3)).unwrap();
        assert_eq!(
            b13,
            OmegaPoly::var(3, 2).mul(&OmegaPoly::var(3, 3)).scale(&rat(-4, 1))
        );
    }

    #[test]
    fn killing_form_matches_closed_form_everywhere() {
        for n in 2..=5 {
            let spec = OmegaSpec::symbolic(n);
            let gens = generators(n);
            for g1 in &gens {
                for g2 in &gens {
                    let beta = killing_form(&spec, g1, g2).unwrap();
                    let expected = if g1 == g2 {
                        killing_closed_form(&spec, g1).unwrap()
                    } else {
                        OmegaPoly::zero(n)
                    };
                    assert_eq!(beta, expected);
                }
            }
        }
    }

    #[test]
    fn reversal_spec() {
        let spec = OmegaSpec::fixed_ints(&[0, 1, 1]);
        let (rev, _) = reverse_isomorphism(&spec);
        assert_eq!(rev, OmegaSpec::fixed_ints(&[1, 1, 0]));

        // palindromic spec is fixed by reversal
        let pal = OmegaSpec::fixed_ints(&[1, -1, 1]);
        let (rev, _) = reverse_isomorphism(&pal);
        assert_eq!(rev, pal);
    }

    #[test]
    fn reversal_is_homomorphism() {
        // phi([x, y]) = [phi(x), phi(y)] over all generator pairs, symbolic w
        for n in 2..=4 {
            let spec = OmegaSpec::symbolic(n);
            let (rev, map) = reverse_isomorphism(&spec);
            // under reversal w_k -> w_{N+1-k}, as an exponent relabeling
            let relabel = |p: &OmegaPoly| -> OmegaPoly {
                let mut out = OmegaPoly::zero(n);
                for (e, c) in p.terms() {
                    let mut re: alloc::vec::Vec<u32> = e.clone();
                    re.reverse();
                    out = out.add(&OmegaPoly::monomial(n, re, c.clone()));
                }
                out
            };
            let gens = generators(n);
            for g1 in &gens {
                for g2 in &gens {
                    let (s1, h1) = map.map_generator(g1);
                    let (s2, h2) = map.map_generator(g2);
                    let rhs = bracket_basis(&rev, &h1, &h2).unwrap().scale_rat(&(s1 * s2));
                    // image of [g1, g2]: relabel coefficients, map the generator
                    let lhs = match bracket_term(&spec, g1, g2).unwrap() {
                        None => EnvelopingElement::zero(n),
                        Some((c, g)) => {
                            let (s, h) = map.map_generator(&g);
                            EnvelopingElement::generator(n, h)
                                .scale_poly(&relabel(&c))
                                .scale_rat(&s)
                        }
                    };
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn bracket_substitution_commutes() {
        // substituting w then bracketing equals bracketing then substituting
        let spec = OmegaSpec::symbolic(3);
        let mut asg = BTreeMap::new();
        asg.insert(1usize, rat(0, 1));
        asg.insert(3usize, rat(-2, 1));
        let sub_spec = spec.substitute(&asg).unwrap();
        let gens = generators(3);
        for g1 in &gens {
            for g2 in &gens {
                let direct = bracket_basis(&sub_spec, g1, g2).unwrap();
                let then = bracket_basis(&spec, g1, g2)
                    .unwrap()
                    .substitute_coeffs(&asg)
                    .unwrap();
                assert_eq!(direct, then);
            }
        }
    }
}
