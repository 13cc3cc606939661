//! Independent verification machinery: the Gel'fand T-matrix route to the
//! invariants (valid whenever every omega is nonzero), the perfect-square
//! identity behind the W-symbols, and the rank bound on the number of
//! algebraically independent Casimirs.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};
use rand_core::RngCore;

use crate::algebra::{bracket_term, generators, Generator};
use crate::enveloping::{self, EnvelopingElement, PbwMonomial};
use crate::error::CkError;
use crate::matrix::RatMatrix;
use crate::omega::{OmegaSpec, Rational};
use crate::wsymbols::{WIndexSet, WTable};

/// Values for the commuting symmetric-algebra variables `alpha_ab`,
/// one per generator slot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaAssignment {
    n: usize,
    values: BTreeMap<Generator, Rational>,
}

impl AlphaAssignment {
    pub fn new(n: usize, values: BTreeMap<Generator, Rational>) -> Result<Self, CkError> {
        let gens = generators(n);
        for g in &gens {
            if !values.contains_key(g) {
                return Err(CkError::IndexOutOfRange { index: g.b(), n });
            }
        }
        if values.len() != gens.len() {
            return Err(CkError::MismatchedAlgebra {
                expected: gens.len(),
                found: values.len(),
            });
        }
        Ok(AlphaAssignment { n, values })
    }

    /// Random exact rationals with numerator and denominator magnitudes
    /// bounded by `max_mag`.
    pub fn random(n: usize, rng: &mut impl RngCore, max_mag: u64) -> Self {
        let values = generators(n)
            .into_iter()
            .map(|g| (g, rand_rational(rng, max_mag)))
            .collect();
        AlphaAssignment { n, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, g: &Generator) -> &Rational {
        &self.values[g]
    }

    /// Evaluates an enveloping element by the substitution `O_ab -> alpha_ab`.
    /// Valid for W-symbols and their combinations, where every monomial has
    /// commuting factors; requires a fully fixed spec.
    pub fn eval_element(&self, e: &EnvelopingElement) -> Result<Rational, CkError> {
        let mut acc = Rational::zero();
        for (m, c) in e.terms() {
            let coeff = c
                .as_constant()
                .ok_or(CkError::SymbolicEntry { index: 0 })?;
            let mut prod = coeff;
            for &(g, p) in m.factors() {
                for _ in 0..p {
                    prod *= self.get(&g);
                }
            }
            acc += prod;
        }
        Ok(acc)
    }
}

/// Uniform-ish random rational in `[-max_mag, max_mag]` with denominator
/// in `1..=max_mag`.
pub fn rand_rational(rng: &mut impl RngCore, max_mag: u64) -> Rational {
    let span = 2 * max_mag + 1;
    let num = (rng.next_u64() % span) as i64 - max_mag as i64;
    let den = (rng.next_u64() % max_mag) as i64 + 1;
    Rational::new(num.into(), den.into())
}

fn require_nonzero_fixed(spec: &OmegaSpec) -> Result<(), CkError> {
    for a in 1..=spec.n() {
        let v = spec.value(a)?;
        if v.is_zero() {
            return Err(CkError::ZeroOmega { index: a });
        }
    }
    Ok(())
}

/// The `I_k`-antisymmetric T-matrix over an index subset `u_1 < ... < u_K`:
/// entry `(i, j)` for `i < j` is `-alpha_{u_i u_j} / w_{u_i u_j}`, entry
/// `(j, i)` is `alpha_{u_i u_j}`, diagonal zero. Requires every omega
/// nonzero.
pub fn t_matrix(
    spec: &OmegaSpec,
    alpha: &AlphaAssignment,
    subset: &[usize],
) -> Result<RatMatrix, CkError> {
    require_nonzero_fixed(spec)?;
    let n = spec.n();
    assert!(!subset.is_empty() && subset.windows(2).all(|w| w[0] < w[1]));
    let k = subset.len();
    let mut m = RatMatrix::zeros(k, k);
    for i in 0..k {
        for j in (i + 1)..k {
            let g = Generator::new(subset[i], subset[j], n)?;
            let a = alpha.get(&g).clone();
            let w = spec
                .omega_product(subset[i], subset[j])?
                .as_constant()
                .expect("fully fixed spec");
            m[(i, j)] = -(&a / &w);
            m[(j, i)] = a;
        }
    }
    Ok(m)
}

/// Checks the perfect-square identity for one index set:
/// `w_{a_1 b_s} ... w_{a_s b_1} . det(T over ix)` equals the square of the
/// evaluated W-symbol. Exact rational equality.
pub fn w_squared_identity_check(
    spec: &OmegaSpec,
    alpha: &AlphaAssignment,
    ix: &WIndexSet,
) -> Result<bool, CkError> {
    require_nonzero_fixed(spec)?;
    let t = t_matrix(spec, alpha, ix.indices())?;
    let crossed = ix
        .crossed_omega(spec)?
        .as_constant()
        .expect("fully fixed spec");
    let lhs = crossed * t.det();
    let mut table = WTable::new(spec);
    let w = table.w(ix)?;
    let wv = alpha.eval_element(&w)?;
    Ok(lhs == &wv * &wv)
}

/// Classical trace-form invariants (and the epsilon-contracted one for
/// odd `N`), built through the symmetric algebra with the extension
/// `O_ba := -O_ab / w_ab` and symmetrized into the enveloping algebra.
/// Requires every omega nonzero.
pub fn gelfand_classical_casimirs(spec: &OmegaSpec) -> Result<Vec<EnvelopingElement>, CkError> {
    require_nonzero_fixed(spec)?;
    let n = spec.n();
    let mut out = Vec::new();
    for s in 1..=n / 2 {
        out.push(trace_form_casimir(spec, s)?);
    }
    if n % 2 == 1 && n > 1 {
        out.push(epsilon_form_casimir(spec)?);
    } else if n == 1 {
        out.push(EnvelopingElement::generator(
            1,
            Generator::new(0, 1, 1)?,
        ));
    }
    Ok(out)
}

/// Polynomial in the commuting `alpha_ab`: sparse map monomial -> rational.
type AlphaPoly = BTreeMap<PbwMonomial, Rational>;

fn alpha_poly_add(p: &mut AlphaPoly, m: PbwMonomial, c: Rational) {
    if c.is_zero() {
        return;
    }
    match p.get_mut(&m) {
        Some(v) => {
            *v += c;
            if v.is_zero() {
                p.remove(&m);
            }
        }
        None => {
            p.insert(m, c);
        }
    }
}

/// Signed generator factor `O_ij` with the `O_ba := -O_ab/w_ab` extension.
/// Returns `None` for `i == j`.
fn oriented_factor(
    spec: &OmegaSpec,
    i: usize,
    j: usize,
) -> Result<Option<(Rational, Generator)>, CkError> {
    if i == j {
        return Ok(None);
    }
    let n = spec.n();
    if i < j {
        Ok(Some((Rational::one(), Generator::new(i, j, n)?)))
    } else {
        let w = spec
            .omega_product(j, i)?
            .as_constant()
            .expect("fully fixed spec");
        Ok(Some((-(Rational::one() / w), Generator::new(j, i, n)?)))
    }
}

/// `C_s = sum O_{i1 i2} O_{i2 i3} ... O_{i_{2s} i1}` over all index tuples.
fn trace_form_casimir(spec: &OmegaSpec, s: usize) -> Result<EnvelopingElement, CkError> {
    let n = spec.n();
    let len = 2 * s;
    let mut poly: AlphaPoly = BTreeMap::new();
    let mut tuple = alloc::vec![0usize; len];
    loop {
        // product of factors O_{t_k t_{k+1}}, cyclically closed
        let mut coeff = Rational::one();
        let mut word: Vec<Generator> = Vec::with_capacity(len);
        let mut nonzero = true;
        for k in 0..len {
            let i = tuple[k];
            let j = tuple[(k + 1) % len];
            match oriented_factor(spec, i, j)? {
                None => {
                    nonzero = false;
                    break;
                }
                Some((c, g)) => {
                    coeff *= c;
                    word.push(g);
                }
            }
        }
        if nonzero {
            word.sort();
            alpha_poly_add(&mut poly, PbwMonomial::from_sorted_word(&word), coeff);
        }
        // advance the odometer
        let mut k = 0;
        loop {
            if k == len {
                return symmetrize_alpha_poly(spec, &poly);
            }
            tuple[k] += 1;
            if tuple[k] <= n {
                break;
            }
            tuple[k] = 0;
            k += 1;
        }
    }
}

/// Odd-`N` invariant: `sum eps_{i0...iN} O_{i0 i1} ... O_{i_{N-1} i_N}`.
fn epsilon_form_casimir(spec: &OmegaSpec) -> Result<EnvelopingElement, CkError> {
    let n = spec.n();
    let mut poly: AlphaPoly = BTreeMap::new();
    let mut perm: Vec<usize> = (0..=n).collect();
    permute_with_sign(&mut perm, &mut |p, sign| {
        let mut coeff = if sign {
            Rational::one()
        } else {
            -Rational::one()
        };
        let mut word: Vec<Generator> = Vec::with_capacity((n + 1) / 2);
        for k in (0..=n).step_by(2) {
            match oriented_factor(spec, p[k], p[k + 1]).expect("valid indices") {
                None => return,
                Some((c, g)) => {
                    coeff *= c;
                    word.push(g);
                }
            }
        }
        word.sort();
        alpha_poly_add(&mut poly, PbwMonomial::from_sorted_word(&word), coeff);
    });
    symmetrize_alpha_poly(spec, &poly)
}

/// Calls `f` on every permutation with its parity (true = even).
fn permute_with_sign(items: &mut [usize], f: &mut impl FnMut(&[usize], bool)) {
    fn rec(items: &mut [usize], k: usize, even: bool, f: &mut impl FnMut(&[usize], bool)) {
        if k == items.len() {
            f(items, even);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            rec(items, k + 1, even == (i == k), f);
            items.swap(k, i);
        }
    }
    rec(items, 0, true, f);
}

/// Applies the symmetrization map to each alpha monomial and sums up.
fn symmetrize_alpha_poly(
    spec: &OmegaSpec,
    poly: &AlphaPoly,
) -> Result<EnvelopingElement, CkError> {
    let n = spec.n();
    let mut out = EnvelopingElement::zero(n);
    for (m, c) in poly {
        let word = m.word();
        let sym = enveloping::symmetrize(spec, &word)?;
        out = out.add(&sym.scale_rat(c));
    }
    Ok(out)
}

/// If `u = r . v` for a single nonzero rational `r`, returns it.
pub fn proportionality_ratio(
    u: &EnvelopingElement,
    v: &EnvelopingElement,
) -> Option<Rational> {
    if u.is_zero() || v.is_zero() || u.num_terms() != v.num_terms() {
        return None;
    }
    let mut ratio: Option<Rational> = None;
    for (m, cv) in v.terms() {
        let cu = u.coefficient(m);
        let cu = cu.as_constant()?;
        let cv = cv.as_constant()?;
        if cv.is_zero() {
            return None;
        }
        let r = cu / cv;
        match &ratio {
            None => ratio = Some(r),
            Some(prev) if *prev == r => {}
            Some(_) => return None,
        }
    }
    ratio.filter(|r| !r.is_zero())
}

/// One evaluated instance of the matrix `M_g` with entries
/// `sum C_{ab,cd}^{mn} alpha_mn`. Symbolic omegas are drawn at random
/// per call; fixed omegas (including zeros) are kept exactly.
pub fn mg_matrix_at(
    spec: &OmegaSpec,
    alpha: &AlphaAssignment,
    omega_draw: &BTreeMap<usize, Rational>,
) -> Result<RatMatrix, CkError> {
    let n = spec.n();
    let gens = generators(n);
    let d = gens.len();
    let mut m = RatMatrix::zeros(d, d);
    for (i, g1) in gens.iter().enumerate() {
        for (j, g2) in gens.iter().enumerate() {
            if let Some((c, g)) = bracket_term(spec, g1, g2)? {
                let cval = c.eval(omega_draw)?;
                m[(i, j)] = cval * alpha.get(&g);
            }
        }
    }
    Ok(m)
}

fn symbolic_draw(spec: &OmegaSpec, rng: &mut impl RngCore, max_mag: u64) -> BTreeMap<usize, Rational> {
    (1..=spec.n())
        .filter(|&a| matches!(spec.entry(a), crate::omega::OmegaEntry::Symbolic))
        .map(|a| {
            // nonzero draw: zero would contract rather than stay generic
            let mut v = rand_rational(rng, max_mag);
            while v.is_zero() {
                v = rand_rational(rng, max_mag);
            }
            (a, v)
        })
        .collect()
}

/// Randomized rank of `M_g`: entries are linear in alpha, so evaluation
/// at random rationals preserves rank with overwhelming probability.
/// Runs `trials` independent draws and returns the maximum observed
/// (randomization can only under-estimate).
pub fn mg_rank(spec: &OmegaSpec, rng: &mut impl RngCore, trials: usize) -> Result<usize, CkError> {
    let mut best = 0;
    for _ in 0..trials.max(1) {
        let alpha = AlphaAssignment::random(spec.n(), rng, 1000);
        let draw = symbolic_draw(spec, rng, 1000);
        let m = mg_matrix_at(spec, &alpha, &draw)?;
        best = best.max(m.rank());
    }
    Ok(best)
}

/// Upper bound on the number of algebraically independent Casimirs:
/// `dim(g) - rank(M_g)`.
pub fn tau_bound(spec: &OmegaSpec, rng: &mut impl RngCore, trials: usize) -> Result<usize, CkError> {
    let n = spec.n();
    let dim = n * (n + 1) / 2;
    Ok(dim - mg_rank(spec, rng, trials)?)
}

/// The rank every CK algebra attains: `N^2/2` for even `N`,
/// `(N^2 - 1)/2` for odd `N`.
pub fn expected_mg_rank(n: usize) -> usize {
    if n % 2 == 0 {
        n * n / 2
    } else {
        (n * n - 1) / 2
    }
}

/// The row/column variables deleted to expose the constructive minor:
/// `alpha_{0N}, alpha_{1,N-1}, ...` (`l` of them, pairing `k` with `N-k`).
pub fn witness_deleted_variables(n: usize) -> Vec<Generator> {
    let l = (n + 1) / 2;
    (0..l)
        .map(|k| Generator::new(k, n - k, n).expect("k < n - k"))
        .collect()
}

/// Exponent of each variable in the expected witness monomial:
/// `alpha_{0N}^{2(N-1)} alpha_{1,N-1}^{2(N-3)} ...`, stopping above zero.
pub fn witness_expected_exponents(n: usize) -> Vec<(Generator, u32)> {
    witness_deleted_variables(n)
        .into_iter()
        .enumerate()
        .filter_map(|(k, g)| {
            let e = 2 * (n as i64 - 1 - 2 * k as i64);
            if e > 0 {
                Some((g, e as u32))
            } else {
                None
            }
        })
        .collect()
}

/// Determinant of the constructive minor: `M_g` with the rows and columns
/// of the designated variables removed, evaluated at the given data.
pub fn witness_minor_det(
    spec: &OmegaSpec,
    alpha: &AlphaAssignment,
    omega_draw: &BTreeMap<usize, Rational>,
) -> Result<Rational, CkError> {
    let n = spec.n();
    let gens = generators(n);
    let deleted = witness_deleted_variables(n);
    let idx: Vec<usize> = deleted
        .iter()
        .map(|d| gens.iter().position(|g| g == d).unwrap())
        .collect();
    let m = mg_matrix_at(spec, alpha, omega_draw)?;
    let minor = m.delete_rows_cols(&idx, &idx);
    Ok(minor.det())
}

/// Weights `w_j` with `sum_j w_j p(j) = [x^e] p` for every polynomial `p`
/// of degree at most `d` (row `e` of the inverse Vandermonde at nodes
/// `0..=d`), read off the Lagrange basis.
fn coefficient_weights(d: usize, e: usize) -> Vec<Rational> {
    let mut weights = Vec::with_capacity(d + 1);
    for j in 0..=d {
        // L_j(x) = prod_{m != j} (x - m) / (j - m), low-to-high coefficients
        let mut num = alloc::vec![Rational::one()];
        let mut den = Rational::one();
        for m in 0..=d {
            if m == j {
                continue;
            }
            let mr = Rational::from_integer((m as i64).into());
            let mut next = alloc::vec![Rational::zero(); num.len() + 1];
            for (k, c) in num.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * &mr;
            }
            num = next;
            den *= Rational::from_integer((j as i64 - m as i64).into());
        }
        weights.push(&num[e] / &den);
    }
    weights
}

fn coefficient_rec(
    spec: &OmegaSpec,
    alpha: &mut AlphaAssignment,
    omega_draw: &BTreeMap<usize, Rational>,
    vars: &[(Generator, u32)],
    d: usize,
) -> Result<Rational, CkError> {
    match vars.split_first() {
        None => witness_minor_det(spec, alpha, omega_draw),
        Some((&(g, e), rest)) => {
            let w = coefficient_weights(d, e as usize);
            let mut acc = Rational::zero();
            for (j, wj) in w.iter().enumerate() {
                if wj.is_zero() {
                    continue;
                }
                alpha
                    .values
                    .insert(g, Rational::from_integer((j as i64).into()));
                acc += wj * coefficient_rec(spec, alpha, omega_draw, rest, d)?;
            }
            Ok(acc)
        }
    }
}

/// Coefficient of the designated monomial in the minor determinant, viewed
/// as a polynomial in the deleted alphas. The remaining alphas and any
/// symbolic omegas are drawn at random; the monomial exhausts the total
/// degree of the determinant, so no other variable contributes to it.
/// Extracted exactly by interpolation on an integer grid.
pub fn witness_monomial_coefficient(
    spec: &OmegaSpec,
    rng: &mut impl RngCore,
) -> Result<Rational, CkError> {
    let n = spec.n();
    let mut alpha = AlphaAssignment::random(n, rng, 100);
    let draw = symbolic_draw(spec, rng, 100);
    let exps = witness_expected_exponents(n);
    let d: u32 = exps.iter().map(|&(_, e)| e).sum();
    coefficient_rec(spec, &mut alpha, &draw, &exps, d as usize)
}

/// The constructive rank proof, verified exactly: the minor determinant
/// contains the designated monomial with coefficient `+1` or `-1`, for
/// this spec's omega values.
pub fn witness_monomial_check(
    spec: &OmegaSpec,
    rng: &mut impl RngCore,
) -> Result<bool, CkError> {
    let c = witness_monomial_coefficient(spec, rng)?;
    Ok(c.abs() == Rational::one())
}
