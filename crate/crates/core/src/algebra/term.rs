use std::borrow::Cow;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::ops;
use crate::error::{Error, Result};
use crate::inclusion::{k0, k1, k2, kst, InclusionFunction};
use crate::rational::Rational;
use crate::space::GranularSpace;

/// Expression over named inclusion functions and the algebra's operators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraTerm {
    Base(String),
    Top,
    Product(Box<AlgebraTerm>, Box<AlgebraTerm>),
    AlphaSum(Rational, Box<AlgebraTerm>, Box<AlgebraTerm>),
    Sharp(Box<AlgebraTerm>),
    Flat(Box<AlgebraTerm>),
    Sigma(Box<AlgebraTerm>),
    Power(Box<AlgebraTerm>, u32),
    /// Threshold rescaling `kst(term, s, t)`.
    Kst(Box<AlgebraTerm>, Rational, Rational),
}

impl AlgebraTerm {
    pub fn base(name: impl Into<String>) -> Self {
        AlgebraTerm::Base(name.into())
    }

    pub fn product(f: AlgebraTerm, g: AlgebraTerm) -> Self {
        AlgebraTerm::Product(Box::new(f), Box::new(g))
    }

    pub fn alpha_sum(alpha: Rational, f: AlgebraTerm, g: AlgebraTerm) -> Self {
        AlgebraTerm::AlphaSum(alpha, Box::new(f), Box::new(g))
    }

    pub fn sharp(f: AlgebraTerm) -> Self {
        AlgebraTerm::Sharp(Box::new(f))
    }

    pub fn flat(f: AlgebraTerm) -> Self {
        AlgebraTerm::Flat(Box::new(f))
    }

    pub fn sigma(f: AlgebraTerm) -> Self {
        AlgebraTerm::Sigma(Box::new(f))
    }

    pub fn power(f: AlgebraTerm, n: u32) -> Self {
        AlgebraTerm::Power(Box::new(f), n)
    }

    pub fn kst(f: AlgebraTerm, s: Rational, t: Rational) -> Self {
        AlgebraTerm::Kst(Box::new(f), s, t)
    }

    pub fn parse(text: &str) -> Result<Self> {
        super::parse::parse_term(text)
    }

    /// Names of the base functions the term mentions, sorted and deduplicated.
    pub fn base_names(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_names(&mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_names<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            AlgebraTerm::Base(n) => out.push(n),
            AlgebraTerm::Top => {}
            AlgebraTerm::Product(f, g) | AlgebraTerm::AlphaSum(_, f, g) => {
                f.collect_names(out);
                g.collect_names(out);
            }
            AlgebraTerm::Sharp(f)
            | AlgebraTerm::Flat(f)
            | AlgebraTerm::Sigma(f)
            | AlgebraTerm::Power(f, _)
            | AlgebraTerm::Kst(f, _, _) => f.collect_names(out),
        }
    }
}

impl fmt::Display for AlgebraTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraTerm::Base(n) => f.write_str(n),
            AlgebraTerm::Top => f.write_str("top"),
            AlgebraTerm::Product(a, b) => write!(f, "otimes({a}, {b})"),
            AlgebraTerm::AlphaSum(alpha, a, b) => write!(f, "oplus({alpha}, {a}, {b})"),
            AlgebraTerm::Sharp(a) => write!(f, "sharp({a})"),
            AlgebraTerm::Flat(a) => write!(f, "flat({a})"),
            AlgebraTerm::Sigma(a) => write!(f, "sigma({a})"),
            AlgebraTerm::Power(a, n) => write!(f, "pow({a}, {n})"),
            AlgebraTerm::Kst(a, s, t) => write!(f, "kst({a}, {s}, {t})"),
        }
    }
}

/// Named inclusion functions over one space. With built-ins enabled, the
/// unbound names `k0`, `k1` and `k2` resolve to the carrier-based functions.
#[derive(Clone, Debug)]
pub struct Environment {
    space: Arc<GranularSpace>,
    bound: BTreeMap<String, InclusionFunction>,
    builtins: bool,
}

pub const BUILTINS: [&str; 3] = ["k0", "k1", "k2"];

impl Environment {
    pub fn new(space: &Arc<GranularSpace>) -> Self {
        Environment {
            space: Arc::clone(space),
            bound: BTreeMap::new(),
            builtins: false,
        }
    }

    pub fn with_builtins(space: &Arc<GranularSpace>) -> Self {
        Environment {
            builtins: true,
            ..Self::new(space)
        }
    }

    pub fn space(&self) -> &Arc<GranularSpace> {
        &self.space
    }

    pub fn bind(&mut self, name: impl Into<String>, f: InclusionFunction) -> Result<()> {
        if !Arc::ptr_eq(f.space(), &self.space) && **f.space() != *self.space {
            return Err(Error::MismatchedSpaces);
        }
        self.bound.insert(name.into(), f);
        Ok(())
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.bound.keys().map(String::as_str)
    }

    pub fn resolve(&self, name: &str) -> Result<Cow<'_, InclusionFunction>> {
        if let Some(f) = self.bound.get(name) {
            return Ok(Cow::Borrowed(f));
        }
        if self.builtins {
            let f = match name {
                "k0" => Some(k0(&self.space)?),
                "k1" => Some(k1(&self.space)?),
                "k2" => Some(k2(&self.space)?),
                _ => None,
            };
            if let Some(f) = f {
                return Ok(Cow::Owned(f));
            }
        }
        Err(Error::Unbound(name.to_string()))
    }
}

/// Evaluates `term` structurally. The result is labelled with the term's
/// canonical text.
pub fn eval_term(term: &AlgebraTerm, env: &Environment) -> Result<InclusionFunction> {
    let f = eval(term, env)?;
    Ok(f.with_label(term.to_string()))
}

fn eval(term: &AlgebraTerm, env: &Environment) -> Result<InclusionFunction> {
    match term {
        AlgebraTerm::Base(name) => Ok(env.resolve(name)?.into_owned()),
        AlgebraTerm::Top => ops::top(env.space()),
        AlgebraTerm::Product(f, g) => ops::otimes(&eval(f, env)?, &eval(g, env)?),
        AlgebraTerm::AlphaSum(alpha, f, g) => {
            ops::check_alpha(alpha)?;
            ops::oplus(alpha, &eval(f, env)?, &eval(g, env)?)
        }
        AlgebraTerm::Sharp(f) => ops::sharp(&eval(f, env)?),
        AlgebraTerm::Flat(f) => ops::flat(&eval(f, env)?),
        AlgebraTerm::Sigma(f) => ops::sigma(&eval(f, env)?),
        AlgebraTerm::Power(f, n) => ops::power(&eval(f, env)?, *n),
        AlgebraTerm::Kst(f, s, t) => kst(&eval(f, env)?, s, t),
    }
}
