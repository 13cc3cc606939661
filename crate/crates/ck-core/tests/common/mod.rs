#![allow(dead_code)]

use ck_core::{EnvelopingElement, Generator, OmegaPoly, OmegaSpec, PbwMonomial, Rational};

pub fn gen(a: usize, b: usize, n: usize) -> Generator {
    Generator::new(a, b, n).unwrap()
}

pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

/// Product of the named omega variables, e.g. `om(4, &[2, 3])` = w2 w3.
pub fn om(n: usize, vars: &[usize]) -> OmegaPoly {
    let mut exps = vec![0u32; n];
    for &v in vars {
        exps[v - 1] += 1;
    }
    OmegaPoly::monomial(n, exps, rat(1, 1))
}

/// The two-index coefficient `w_{lo,hi} = w_{lo+1} w_{lo+2} ... w_{hi}`.
pub fn omrange(n: usize, lo: usize, hi: usize) -> OmegaPoly {
    let vars: Vec<usize> = (lo + 1..=hi).collect();
    om(n, &vars)
}

/// Builds an element from `(a, b, power)` factor lists with omega-poly
/// coefficients; factors must be in increasing generator order.
pub fn elem(n: usize, terms: &[(&[(usize, usize, u32)], OmegaPoly)]) -> EnvelopingElement {
    let mut e = EnvelopingElement::zero(n);
    for (factors, coeff) in terms {
        let pairs: Vec<(Generator, u32)> = factors
            .iter()
            .map(|&(a, b, p)| (gen(a, b, n), p))
            .collect();
        e.add_term(PbwMonomial::from_pairs(&pairs), coeff.clone());
    }
    e
}

pub fn symbolic(n: usize) -> OmegaSpec {
    OmegaSpec::symbolic(n)
}
