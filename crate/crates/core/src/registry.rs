//! Named families of exact values, resolved from tokens such as `omega:2`,
//! `rational:59/100`, `real:0.59` or `lambda-star`.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebraic::poly::Q;
use crate::algebraic::{
    lambda_star, multinacci, multinacci_inverse, sigma, small_pisot, tau, ExactReal,
};
use crate::error::{Error, Result};

/// A family of exact values indexed by an argument string.
pub trait ValueFamily: Send + Sync {
    fn name(&self) -> &'static str;
    /// One-line summary including the argument syntax.
    fn describe(&self) -> &'static str;
    /// Resolves the argument after `name:`; `None` when the token is bare.
    fn resolve(&self, arg: Option<&str>) -> Result<ExactReal>;
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn need_arg<'a>(family: &str, arg: Option<&'a str>) -> Result<&'a str> {
    arg.ok_or_else(|| parse_err(format!("`{family}` needs an argument, as in `{family}:<arg>`")))
}

fn no_arg(family: &str, arg: Option<&str>) -> Result<()> {
    match arg {
        None => Ok(()),
        Some(a) => Err(parse_err(format!("`{family}` takes no argument, got `{a}`"))),
    }
}

fn parse_index(family: &str, arg: &str) -> Result<usize> {
    arg.trim()
        .parse()
        .map_err(|_| parse_err(format!("`{family}` needs an integer index, got `{arg}`")))
}

/// `p/q` or an integer.
pub fn parse_fraction(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || parse_err(format!("not a fraction: `{s}`"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
    let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(parse_err("zero denominator"));
    }
    Ok(Q::new(n, d))
}

/// A decimal such as `-0.59`, `1.25e-1` or `3`, converted exactly.
pub fn parse_decimal(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || parse_err(format!("not a decimal: `{s}`"));
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    let neg = int.starts_with('-');
    let int = int.trim_start_matches(['-', '+']);
    if (int.is_empty() && frac.is_empty()) || !(int.chars().chain(frac.chars())).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = BigInt::from_str(&format!("0{int}{frac}")).map_err(|_| bad())?;
    let shift = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    let scale = num_traits::pow(ten, shift.unsigned_abs() as usize);
    let mut v = if shift >= 0 {
        Q::from_integer(digits * scale)
    } else {
        Q::new(digits, scale)
    };
    if neg {
        v = -v;
    }
    Ok(v)
}

struct Omega;
struct OmegaInverse;
struct Rational;
struct Real;
struct LambdaStar;
struct Golden;
struct Pisot;
struct Tau;
struct Sigma;

impl ValueFamily for Omega {
    fn name(&self) -> &'static str {
        "omega"
    }
    fn describe(&self) -> &'static str {
        "omega:<m>  multinacci number, root of x^m + ... + x = 1 in (1/2, 1)"
    }
    fn resolve(&self, arg: Option<&str>) -> Result<ExactReal> {
        let m = parse_index("omega", need_arg("omega", arg)?)?;
        Ok(ExactReal::algebraic(multinacci(m)?, format!("omega:{m}")))
    }
}

impl ValueFamily for OmegaInverse {
    fn name(&self) -> &'static str {
        "omega-inv"
    }
    fn describe(&self) -> &'static str {
        "omega-inv:<m>  reciprocal 1/omega_m in (1, 2)"
    }
    fn resolve(&self, arg: Option<&str>) -> Result<ExactReal> {
        let m = parse_index("omega-inv", need_arg("omega-inv", arg)?)?;
        Ok(ExactReal::algebraic(multinacci_inverse(m)?, format!("omega-inv:{m}")))
    }
}

impl ValueFamily for Rational {
    fn name(&self) -> &'static str {
        "rational"
    }
    fn describe(&self) -> &'static str {
        "rational:<p>/<q>  exact fraction"
    }
    fn resolve(&self, arg: Option<&str>) -> Result<ExactReal> {
        let r = parse_fraction(need_arg("rational", arg)?)?;
        Ok(ExactReal::rational_labeled(r.clone(), format!("rational:{r}")))
    }
}

impl ValueFamily for Real {
    fn name(&self) -> &'static str {
        "real"
    }
    fn describe(&self) -> &'static str {
        "real:<decimal>  decimal converted to the exact fraction it denotes"
    }
    fn resolve(&self, arg: Option<&str>) -> Result<ExactReal> {
        let r = parse_decimal(need_arg("real", arg)?)?;
        Ok(ExactReal::rational_labeled(r.clone(), format!("rational:{r}")))
    }
}

impl ValueFamily for LambdaStar {
    fn name(&self) -> &'static str {
        "lambda-star"
    }
    fn describe(&self) -> &'static str {
        "lambda-star  real root of x^3 - x^2 + x = 1/2, about 0.6478"
    }
    fn resolve(&self, arg: Option<&str>) -> Result<ExactReal> {
        no_arg("lambda-star", arg)?;
        Ok(ExactReal::algebraic(lambda_star(), "lambda-star"))
    }
}

impl ValueFamily for Golden {
    fn name(&self) -> &'static str {
        "golden"
    }
    fn describe(&self) -> &'static str {
        "golden  the golden ratio (1 + sqrt 5)/2 = 1/omega_2"
    }
    fn resolve(&self, arg: Option<&str>) -> Result<ExactReal> {
        no_arg("golden", arg)?;
        Ok(ExactReal::algebraic(multinacci_inverse(2)?, "golden"))
    }
}

impl ValueFamily for Pisot {
    fn name(&self) -> &'static str {
        "pisot"
    }
    fn describe(&self) -> &'static str {
        "pisot:<k>  k-th smallest Pisot number, k = 1..4"
    }
    fn resolve(&self, arg: Option<&str>) -> Result<ExactReal> {
        let k = parse_index("pisot", need_arg("pisot", arg)?)?;
        Ok(ExactReal::algebraic(small_pisot(k)?, format!("pisot:{k}")))
    }
}

impl ValueFamily for Tau {
    fn name(&self) -> &'static str {
        "tau"
    }
    fn describe(&self) -> &'static str {
        "tau:<m>,<d>  dimension root of 1 - (d+1)t + d t^(m+1) = 0"
    }
    fn resolve(&self, arg: Option<&str>) -> Result<ExactReal> {
        let a = need_arg("tau", arg)?;
        let (m, d) = a
            .split_once(',')
            .ok_or_else(|| parse_err(format!("`tau` needs `<m>,<d>`, got `{a}`")))?;
        let (m, d) = (parse_index("tau", m)?, parse_index("tau", d)?);
        Ok(ExactReal::algebraic(tau(m, d)?, format!("tau:{m},{d}")))
    }
}

impl ValueFamily for Sigma {
    fn name(&self) -> &'static str {
        "sigma"
    }
    fn describe(&self) -> &'static str {
        "sigma:<m>  root of 2(t^(m-1) + ... + t) = 1"
    }
    fn resolve(&self, arg: Option<&str>) -> Result<ExactReal> {
        let m = parse_index("sigma", need_arg("sigma", arg)?)?;
        Ok(ExactReal::algebraic(sigma(m)?, format!("sigma:{m}")))
    }
}

/// Families by name.
pub struct Registry {
    families: BTreeMap<&'static str, Box<dyn ValueFamily>>,
}

impl Default for Registry {
    fn default() -> Self {
        Self::with_defaults()
    }
}

impl Registry {
    pub fn empty() -> Self {
        Registry {
            families: BTreeMap::new(),
        }
    }

    pub fn with_defaults() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(Omega));
        r.register(Box::new(OmegaInverse));
        r.register(Box::new(Rational));
        r.register(Box::new(Real));
        r.register(Box::new(LambdaStar));
        r.register(Box::new(Golden));
        r.register(Box::new(Pisot));
        r.register(Box::new(Tau));
        r.register(Box::new(Sigma));
        r
    }

    pub fn register(&mut self, family: Box<dyn ValueFamily>) {
        self.families.insert(family.name(), family);
    }

    pub fn families(&self) -> impl Iterator<Item = &dyn ValueFamily> {
        self.families.values().map(|f| f.as_ref())
    }

    /// Resolves `name`, `name:arg`, or a bare fraction or decimal.
    pub fn parse(&self, token: &str) -> Result<ExactReal> {
        let token = token.trim();
        let (name, arg) = match token.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (token, None),
        };
        if let Some(f) = self.families.get(name) {
            return f.resolve(arg);
        }
        if arg.is_none() {
            let r = if token.contains('/') {
                parse_fraction(token)
            } else {
                parse_decimal(token)
            };
            if let Ok(r) = r {
                return Ok(ExactReal::rational_labeled(r.clone(), format!("rational:{r}")));
            }
        }
        let known: Vec<&str> = self.families.keys().copied().collect();
        Err(parse_err(format!(
            "unknown value `{token}`; expected one of {} or a fraction",
            known.join(", ")
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebraic::poly::q;

    #[test]
    fn resolves_tokens() {
        let r = Registry::with_defaults();
        assert!((r.parse("omega:2").unwrap().approx() - 0.6180339887).abs() < 1e-9);
        assert_eq!(r.parse("rational:59/100").unwrap().as_rational(), Some(&q(59, 100)));
        assert_eq!(r.parse("real:0.59").unwrap().as_rational(), Some(&q(59, 100)));
        assert_eq!(r.parse("3/5").unwrap().as_rational(), Some(&q(3, 5)));
        assert_eq!(r.parse("1.8").unwrap().as_rational(), Some(&q(9, 5)));
        assert!((r.parse("golden").unwrap().approx() - 1.6180339887).abs() < 1e-9);
        assert!((r.parse("lambda-star").unwrap().approx() - 0.647798871).abs() < 1e-8);
        assert!((r.parse("pisot:1").unwrap().approx() - 1.3247179572).abs() < 1e-9);
        assert!((r.parse("sigma:2").unwrap().approx() - 0.5).abs() < 1e-15);
        assert!(r.parse("tau:2,2").is_ok());
    }

    #[test]
    fn rejects_bad_tokens() {
        let r = Registry::with_defaults();
        for t in ["omega", "omega:x", "golden:2", "nope:1", "rational:1/0", "real:1.2.3", "", "pisot:9"] {
            assert!(r.parse(t).is_err(), "{t}");
        }
    }

    #[test]
    fn decimals_are_exact() {
        assert_eq!(parse_decimal("-0.125").unwrap(), q(-1, 8));
        assert_eq!(parse_decimal("1.5e2").unwrap(), q(150, 1));
        assert_eq!(parse_decimal("25e-3").unwrap(), q(1, 40));
    }

    #[test]
    fn lists_families() {
        let names: Vec<_> = Registry::with_defaults().families().map(|f| f.name()).collect();
        assert_eq!(names.len(), 9);
        assert!(names.contains(&"omega"));
    }
}
