//! Named algebras: omega signatures, generator aliases for the (3+1)
//! kinematical family, and name resolution.

use anyhow::{anyhow, bail, Result};
use ck_core::{Generator, OmegaSpec, Rational};

/// Symbolic tokens accepted in an omega list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OmegaToken {
    Fixed(Rational),
    Symbolic,
    /// Spacetime curvature kappa (slot 1 of the kinematical family).
    Kappa,
    /// -1/c^2 (slot 2 of the kinematical family).
    InvC2,
}

/// Parsed `--omega` argument: one token per slot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaArg {
    pub tokens: Vec<OmegaToken>,
}

fn parse_rational(s: &str) -> Result<Rational> {
    match s {
        "+" => return Ok(int(1)),
        "-" => return Ok(int(-1)),
        _ => {}
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: i64 = p.trim().parse()?;
        let q: i64 = q.trim().parse()?;
        if q == 0 {
            bail!("zero denominator in `{s}`");
        }
        Ok(Rational::new(p.into(), q.into()))
    } else {
        let p: i64 = s.trim().parse().map_err(|_| anyhow!("bad rational `{s}`"))?;
        Ok(Rational::from_integer(p.into()))
    }
}

fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

impl OmegaArg {
    pub fn parse(list: &str) -> Result<Self> {
        let mut tokens = Vec::new();
        for part in list.split(',') {
            let part = part.trim();
            let token = match part {
                "k" | "kappa" => OmegaToken::Kappa,
                "-1/c2" | "-1/c^2" => OmegaToken::InvC2,
                "sym" | "symbolic" | "w" | "*" => OmegaToken::Symbolic,
                _ => OmegaToken::Fixed(parse_rational(part)?),
            };
            tokens.push(token);
        }
        if tokens.is_empty() {
            bail!("empty omega list");
        }
        Ok(OmegaArg { tokens })
    }

    pub fn symbolic(n: usize) -> Self {
        OmegaArg {
            tokens: vec![OmegaToken::Symbolic; n],
        }
    }

    pub fn fixed(spec: &OmegaSpec) -> Self {
        let tokens = (1..=spec.n())
            .map(|a| match spec.entry(a) {
                ck_core::OmegaEntry::Symbolic => OmegaToken::Symbolic,
                ck_core::OmegaEntry::Fixed(r) => OmegaToken::Fixed(r.clone()),
            })
            .collect();
        OmegaArg { tokens }
    }

    /// Tokens for a contracted spec: fixed slots take their exact
    /// values, still-symbolic slots keep the base tokens (so kappa /
    /// -1/c^2 naming survives a partial contraction).
    pub fn fixed_and_tokens(spec: &OmegaSpec, base: &OmegaArg) -> Self {
        let tokens = (1..=spec.n())
            .map(|a| match spec.entry(a) {
                ck_core::OmegaEntry::Fixed(r) => OmegaToken::Fixed(r.clone()),
                ck_core::OmegaEntry::Symbolic => base.tokens[a - 1].clone(),
            })
            .collect();
        OmegaArg { tokens }
    }

    pub fn n(&self) -> usize {
        self.tokens.len()
    }

    /// The engine spec: kinematical tokens count as symbolic slots.
    pub fn to_spec(&self) -> OmegaSpec {
        let entries: Vec<Option<Rational>> = self
            .tokens
            .iter()
            .map(|t| match t {
                OmegaToken::Fixed(r) => Some(r.clone()),
                _ => None,
            })
            .collect();
        OmegaSpec::mixed(&entries)
    }

    /// True if any slot uses the kappa / -1/c^2 parameterization.
    pub fn kinematical_tokens(&self) -> bool {
        self.tokens
            .iter()
            .any(|t| matches!(t, OmegaToken::Kappa | OmegaToken::InvC2))
    }
}

/// Rendering name for one generator, with a sign applied on output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alias {
    pub name: String,
    pub latex: String,
    pub sign: i32,
}

/// Generator renaming for the (3+1) kinematical algebras at n=4:
/// H, P_i, K_i, J_i with J_2 = -O_24.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AliasTable {
    entries: Vec<((usize, usize), Alias)>,
}

impl AliasTable {
    pub fn kinematical() -> Self {
        let mk = |name: &str, latex: &str, sign: i32| Alias {
            name: name.into(),
            latex: latex.into(),
            sign,
        };
        AliasTable {
            entries: vec![
                ((0, 1), mk("H", "H", 1)),
                ((0, 2), mk("P1", "P_1", 1)),
                ((0, 3), mk("P2", "P_2", 1)),
                ((0, 4), mk("P3", "P_3", 1)),
                ((1, 2), mk("K1", "K_1", 1)),
                ((1, 3), mk("K2", "K_2", 1)),
                ((1, 4), mk("K3", "K_3", 1)),
                ((3, 4), mk("J1", "J_1", 1)),
                ((2, 4), mk("J2", "J_2", -1)),
                ((2, 3), mk("J3", "J_3", 1)),
            ],
        }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, g: &Generator) -> Option<&Alias> {
        self.entries
            .iter()
            .find(|(ab, _)| *ab == g.indices())
            .map(|(_, a)| a)
    }
}

/// One registry entry.
#[derive(Debug, Clone)]
pub struct AlgebraEntry {
    pub name: String,
    pub n: usize,
    pub omega: OmegaArg,
    pub aliases: AliasTable,
    pub description: String,
    /// Further omega signatures realizing the same algebra.
    pub alternates: Vec<Vec<i64>>,
}

fn fixed_ints(vals: &[i64]) -> OmegaArg {
    OmegaArg {
        tokens: vals.iter().map(|&v| OmegaToken::Fixed(int(v))).collect(),
    }
}

fn entry(
    name: &str,
    vals: &[i64],
    aliases: AliasTable,
    description: &str,
    alternates: Vec<Vec<i64>>,
) -> AlgebraEntry {
    AlgebraEntry {
        name: name.into(),
        n: vals.len(),
        omega: fixed_ints(vals),
        aliases,
        description: description.into(),
        alternates,
    }
}

/// The fixed-name catalog at n=4 (kinematical) plus the n-parameterized
/// families resolved on demand.
pub fn catalog() -> Vec<AlgebraEntry> {
    let kin = AliasTable::kinematical;
    vec![
        entry(
            "anti-desitter",
            &[1, -1, 1, 1],
            kin(),
            "so(3,2), anti-DeSitter spacetime (k=1, c=1)",
            vec![],
        ),
        entry(
            "desitter",
            &[-1, -1, 1, 1],
            kin(),
            "so(4,1), DeSitter spacetime (k=-1, c=1)",
            vec![],
        ),
        entry(
            "poincare",
            &[0, -1, 1, 1],
            kin(),
            "iso(3,1), Minkowski spacetime (k=0, c=1)",
            vec![
                vec![0, 1, 1, -1],
                vec![0, -1, -1, 1],
                vec![0, 1, -1, -1],
            ],
        ),
        entry(
            "newton-hooke-osc",
            &[1, 0, 1, 1],
            kin(),
            "oscillating Newton-Hooke (k=1, c=inf)",
            vec![],
        ),
        entry(
            "newton-hooke-exp",
            &[-1, 0, 1, 1],
            kin(),
            "expanding Newton-Hooke (k=-1, c=inf)",
            vec![],
        ),
        entry(
            "galilei",
            &[0, 0, 1, 1],
            kin(),
            "iiso(3), Galilei spacetime (k=0, c=inf)",
            vec![],
        ),
    ]
}

/// Resolves a name at dimension `n`. Fixed-name entries pin their own
/// `n`; family names (euclidean, carroll, flag, so(p,q), iso(p,q))
/// work for any compatible `n`.
pub fn resolve(name: &str, n: usize) -> Result<AlgebraEntry> {
    if n < 1 {
        bail!("n must be at least 1");
    }
    for e in catalog() {
        if e.name == name {
            if e.n != n {
                bail!("`{name}` is defined at n={}, got n={n}", e.n);
            }
            return Ok(e);
        }
    }
    match name {
        "euclidean" => {
            let mut vals = ones_with(n, &[]);
            vals[0] = 0;
            Ok(entry(
                "euclidean",
                &vals,
                AliasTable::default(),
                "iso(n), Euclidean motions",
                vec![],
            ))
        }
        "carroll" => {
            if n < 2 {
                bail!("carroll needs n >= 2");
            }
            let mut vals = ones_with(n, &[]);
            vals[0] = 0;
            vals[n - 1] = 0;
            Ok(entry(
                "carroll",
                &vals,
                AliasTable::default(),
                "ii'so(n-1), Carroll algebra",
                vec![],
            ))
        }
        "flag" => Ok(entry(
            "flag",
            &vec![0i64; n],
            AliasTable::default(),
            "most contracted member, flag space algebra",
            vec![],
        )),
        _ => {
            if let Some((p, q)) = parse_pq(name, "so") {
                if p + q != n + 1 || p < 1 {
                    bail!("so({p},{q}) needs p+q = n+1 = {}", n + 1);
                }
                // single sign flip at slot p gives p pluses, q minuses
                let vals = if q == 0 {
                    ones_with(n, &[])
                } else {
                    ones_with(n, &[p])
                };
                return Ok(entry(
                    name,
                    &vals,
                    AliasTable::default(),
                    "pseudo-orthogonal algebra",
                    vec![],
                ));
            }
            if let Some((p, q)) = parse_pq(name, "iso") {
                if p + q != n || p < 1 {
                    bail!("iso({p},{q}) needs p+q = n = {n}");
                }
                let mut vals = if q == 0 {
                    ones_with(n, &[])
                } else {
                    ones_with(n, &[p + 1])
                };
                vals[0] = 0;
                return Ok(entry(
                    name,
                    &vals,
                    AliasTable::default(),
                    "inhomogeneous pseudo-orthogonal algebra",
                    vec![],
                ));
            }
            bail!("unknown algebra `{name}`")
        }
    }
}

fn ones_with(n: usize, minus_slots: &[usize]) -> Vec<i64> {
    (1..=n)
        .map(|a| if minus_slots.contains(&a) { -1 } else { 1 })
        .collect()
}

fn parse_pq(name: &str, prefix: &str) -> Option<(usize, usize)> {
    let rest = name.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?;
    let (p, q) = rest.split_once(',')?;
    Some((p.trim().parse().ok()?, q.trim().parse().ok()?))
}
