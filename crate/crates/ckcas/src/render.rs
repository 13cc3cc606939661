//! Deterministic text and LaTeX rendering of enveloping elements and
//! Casimir sets, with optional kinematical generator aliases.

use anyhow::{bail, Result};
use ck_core::casimirs::{casimir_s, casimir_terms, CasimirSet};
use ck_core::wsymbols::WIndexSet;
use ck_core::{EnvelopingElement, Generator, OmegaPoly, PbwMonomial, Rational, WTable};
use num_traits::{One, Signed};

use crate::registry::{AliasTable, OmegaArg, OmegaToken};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Latex,
    Json,
}

impl std::str::FromStr for Format {
    type Err = anyhow::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "latex" => Ok(Format::Latex),
            "json" => Ok(Format::Json),
            _ => bail!("unknown format `{s}` (expected text, latex or json)"),
        }
    }
}

/// A rendered scalar: overall sign, and the magnitude body (`None` for 1).
struct Scalar {
    sign: i32,
    body: Option<String>,
}

fn rational_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Renders one omega monomial `r * w^exps` under the token naming.
/// Kappa slots print as `k`; each `-1/c^2` power flips the sign and
/// lands in a `c^2` denominator.
fn scalar(format: Format, omega: &OmegaArg, exps: &[u32], r: &Rational) -> Scalar {
    let latex = format == Format::Latex;
    let mut sign = if r.is_negative() { -1 } else { 1 };
    let mag = r.abs();
    let mut num_syms: Vec<String> = Vec::new();
    let mut c_power = 0u32;
    for (slot, &e) in exps.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let name = match &omega.tokens[slot] {
            OmegaToken::Fixed(_) => unreachable!("fixed slots never appear in exponents"),
            OmegaToken::Symbolic => {
                if latex {
                    format!("\\omega_{{{}}}", slot + 1)
                } else {
                    format!("w{}", slot + 1)
                }
            }
            OmegaToken::Kappa => {
                if latex {
                    "\\kappa".into()
                } else {
                    "k".into()
                }
            }
            OmegaToken::InvC2 => {
                if e % 2 == 1 {
                    sign = -sign;
                }
                c_power += 2 * e;
                continue;
            }
        };
        if e == 1 {
            num_syms.push(name);
        } else if latex {
            num_syms.push(format!("{name}^{{{e}}}"));
        } else {
            num_syms.push(format!("{name}^{e}"));
        }
    }
    let mut num_parts: Vec<String> = Vec::new();
    if !mag.is_one() || (num_syms.is_empty() && c_power == 0) {
        num_parts.push(rational_string(&mag));
    }
    num_parts.extend(num_syms);
    let body = if c_power == 0 {
        if num_parts.is_empty() || (num_parts.len() == 1 && num_parts[0] == "1") {
            None
        } else if latex {
            Some(num_parts.join(""))
        } else {
            Some(num_parts.join("*"))
        }
    } else {
        let num = if num_parts.is_empty() {
            "1".to_string()
        } else if latex {
            num_parts.join("")
        } else {
            num_parts.join("*")
        };
        let den = if c_power == 2 {
            "c^2".to_string()
        } else if latex {
            format!("c^{{{c_power}}}")
        } else {
            format!("c^{c_power}")
        };
        if latex {
            Some(format!("\\frac{{{num}}}{{{den}}}"))
        } else {
            Some(format!("{num}/{den}"))
        }
    };
    Scalar { sign, body }
}

fn generator_name(format: Format, aliases: &AliasTable, g: &Generator) -> (String, i32) {
    if let Some(alias) = aliases.get(g) {
        let name = if format == Format::Latex {
            alias.latex.clone()
        } else {
            alias.name.clone()
        };
        (name, alias.sign)
    } else if format == Format::Latex {
        (format!("\\Omega_{{{}{}}}", g.a(), g.b()), 1)
    } else {
        (format!("O_{}{}", g.a(), g.b()), 1)
    }
}

fn monomial_string(format: Format, aliases: &AliasTable, m: &PbwMonomial) -> (String, i32) {
    if m.is_unit() {
        return ("1".into(), 1);
    }
    let mut sign = 1;
    let mut parts = Vec::new();
    for &(g, p) in m.factors() {
        let (name, s) = generator_name(format, aliases, &g);
        if s < 0 && p % 2 == 1 {
            sign = -sign;
        }
        if p == 1 {
            parts.push(name);
        } else if format == Format::Latex {
            parts.push(format!("{name}^{{{p}}}"));
        } else {
            parts.push(format!("{name}^{p}"));
        }
    }
    let joined = if format == Format::Latex {
        parts.join(" ")
    } else {
        parts.join("*")
    };
    (joined, sign)
}

fn push_term(out: &mut String, sign: i32, body: Option<&str>, atom: &str) {
    let lead = if sign < 0 {
        "-"
    } else if out.is_empty() {
        ""
    } else {
        "+"
    };
    if sign < 0 && !out.is_empty() {
        out.push_str(" - ");
    } else if !out.is_empty() {
        out.push_str(" + ");
    } else {
        out.push_str(lead);
    }
    match body {
        Some(b) => {
            out.push_str(b);
            out.push('*');
            out.push_str(atom);
        }
        None => out.push_str(atom),
    }
}

fn push_term_latex(out: &mut String, sign: i32, body: Option<&str>, atom: &str) {
    if sign < 0 {
        out.push('-');
    } else if !out.is_empty() {
        out.push('+');
    }
    if let Some(b) = body {
        out.push_str(b);
    }
    out.push_str(atom);
}

fn emit(format: Format, out: &mut String, sign: i32, body: Option<&str>, atom: &str) {
    if format == Format::Latex {
        push_term_latex(out, sign, body, atom);
    } else {
        push_term(out, sign, body, atom);
    }
}

/// Generic expanded rendering: PBW terms in canonical order.
pub fn render_element(
    format: Format,
    omega: &OmegaArg,
    aliases: &AliasTable,
    e: &EnvelopingElement,
) -> String {
    if e.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (m, c) in e.terms() {
        let (atom, msign) = monomial_string(format, aliases, m);
        let poly_terms: Vec<_> = c.terms().collect();
        if poly_terms.len() == 1 {
            let (exps, r) = poly_terms[0];
            let s = scalar(format, omega, exps, r);
            emit(format, &mut out, s.sign * msign, s.body.as_deref(), &atom);
        } else {
            // sum coefficient: parenthesize the whole polynomial
            let mut inner = String::new();
            for (exps, r) in poly_terms {
                let s = scalar(format, omega, exps, r);
                emit(format, &mut inner, s.sign, s.body.as_deref(), "1");
            }
            emit(format, &mut out, msign, Some(&format!("({inner})")), &atom);
        }
    }
    out
}

fn w_name(format: Format, ix: &WIndexSet) -> String {
    let digits: String = ix.indices().iter().map(|i| i.to_string()).collect();
    if format == Format::Latex {
        format!("W_{{{digits}}}")
    } else {
        format!("W_{digits}")
    }
}

fn squared(format: Format, atom: &str) -> String {
    if format == Format::Latex {
        format!("{atom}^2")
    } else {
        format!("{atom}^2")
    }
}

/// `C_s` for `s >= 2` in W-form: prefactors times squared W-symbols.
pub fn render_casimir_w_form(
    format: Format,
    omega: &OmegaArg,
    spec: &ck_core::OmegaSpec,
    s: usize,
) -> Result<String> {
    let mut out = String::new();
    for (pref, ix) in casimir_terms(spec, s)? {
        if pref.is_zero() {
            continue;
        }
        let terms: Vec<_> = pref.terms().collect();
        assert_eq!(terms.len(), 1, "prefactors are monomials");
        let (exps, r) = terms[0];
        let sc = scalar(format, omega, exps, r);
        let atom = squared(format, &w_name(format, &ix));
        emit(format, &mut out, sc.sign, sc.body.as_deref(), &atom);
    }
    if out.is_empty() {
        out.push('0');
    }
    Ok(out)
}

/// Kinematical `C_1` at n=4: grouped as P-block, H, K-block, J-block.
fn render_c1_kinematical(
    format: Format,
    omega: &OmegaArg,
    spec: &ck_core::OmegaSpec,
) -> Result<String> {
    let mut table = WTable::new(spec);
    let c1 = casimir_s(&mut table, 1)?;
    let coeff_of = |a: usize, b: usize| -> OmegaPoly {
        let g = Generator::new(a, b, 4).unwrap();
        c1.coefficient(&PbwMonomial::from_pairs(&[(g, 2)]))
    };
    // space isotropy makes each block share one coefficient
    assert_eq!(coeff_of(0, 2), coeff_of(0, 3));
    assert_eq!(coeff_of(0, 2), coeff_of(0, 4));
    assert_eq!(coeff_of(1, 2), coeff_of(1, 3));
    assert_eq!(coeff_of(1, 2), coeff_of(1, 4));
    assert_eq!(coeff_of(2, 3), coeff_of(2, 4));
    assert_eq!(coeff_of(2, 3), coeff_of(3, 4));
    let p = coeff_of(0, 2);
    let h = coeff_of(0, 1);
    let k = coeff_of(1, 2);
    let j = coeff_of(2, 3);
    assert!(p.is_one(), "P-block is normalized");
    let names = ["P", "H", "K", "J"];
    let mut out = String::new();
    for (idx, coeff) in [p, h, k, j].into_iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let terms: Vec<_> = coeff.terms().collect();
        assert_eq!(terms.len(), 1);
        let (exps, r) = terms[0];
        let sc = scalar(format, omega, exps, r);
        let base = names[idx];
        let atoms: Vec<String> = if idx == 1 {
            vec!["H^2".into()]
        } else if format == Format::Latex {
            (1..=3).map(|i| format!("{base}_{i}^2")).collect()
        } else {
            (1..=3).map(|i| format!("{base}{i}^2")).collect()
        };
        if sc.body.is_none() || atoms.len() == 1 {
            // distribute the sign over the block
            for atom in &atoms {
                emit(format, &mut out, sc.sign, sc.body.as_deref(), atom);
            }
        } else {
            let inner = atoms.join("+");
            let grouped = format!("({inner})");
            emit(format, &mut out, sc.sign, sc.body.as_deref(), &grouped);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    Ok(out)
}

/// Labeled renderings of the full Casimir set of one spec.
pub fn render_casimir_set(
    format: Format,
    omega: &OmegaArg,
    aliases: &AliasTable,
    spec: &ck_core::OmegaSpec,
) -> Result<Vec<(String, String)>> {
    let set = CasimirSet::generate(spec)?;
    let kinematical = !aliases.is_empty() && spec.n() == 4;
    let mut out = Vec::new();
    for (label, element) in set.members() {
        let s = order_of(&label);
        let text = match s {
            Some(1) => {
                if kinematical {
                    render_c1_kinematical(format, omega, spec)?
                } else {
                    render_element(format, omega, aliases, element)
                }
            }
            Some(s) => render_casimir_w_form(format, omega, spec, s)?,
            None => {
                // the odd-N extra Casimir, named as one W-symbol
                if spec.n() == 1 {
                    render_element(format, omega, aliases, element)
                } else {
                    w_name(format, &WIndexSet::full(spec.n())?)
                }
            }
        };
        out.push((label, text));
    }
    Ok(out)
}

fn order_of(label: &str) -> Option<usize> {
    label.strip_prefix("C_").and_then(|s| s.parse().ok())
}
