//! Textual and JSON forms of monomials and ideals.
//!
//! Inline grammar: comma-separated monomials; a monomial is factors joined by
//! `*`; a factor is `var` or `var^k` with `k` a positive decimal integer. The
//! literal `1` denotes the empty monomial and `0` (or blank input) the zero
//! ideal, so every ideal prints in a re-parseable form.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exponent::ExponentVector;
use crate::ideal::MonomialIdeal;

/// Ordered variable names. Only presentation depends on them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Variables(Vec<String>);

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Variables {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidVariables("empty variable list".into()));
        }
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) {
                return Err(Error::InvalidVariables(format!("`{n}` is not an identifier")));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidVariables(format!("`{n}` listed twice")));
            }
        }
        Ok(Variables(names))
    }

    /// Parse a comma-separated list such as `x,y,z`.
    pub fn parse(list: &str) -> Result<Self> {
        Self::new(list.split(',').map(|s| s.trim().to_string()))
    }

    /// `x, y, z` for up to three variables, `x1, ..., xd` beyond.
    pub fn standard(dim: usize) -> Self {
        let names: Vec<String> = if dim <= 3 {
            ["x", "y", "z"][..dim].iter().map(|s| s.to_string()).collect()
        } else {
            (1..=dim).map(|i| format!("x{i}")).collect()
        };
        Variables(names)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    vars: &'a Variables,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += self.peek().map_or(0, char::len_utf8);
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn identifier(&mut self) -> Result<(String, usize)> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        let name = &self.src[start..self.pos];
        if !is_identifier(name) {
            self.pos = start;
            return self.err("expected a variable name");
        }
        Ok((name.to_string(), start))
    }

    fn exponent(&mut self) -> Result<u32> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a positive integer exponent");
        }
        match self.src[start..self.pos].parse::<u32>() {
            Ok(0) => {
                self.pos = start;
                self.err("exponent must be positive")
            }
            Ok(k) => Ok(k),
            Err(_) => {
                self.pos = start;
                self.err("exponent out of range")
            }
        }
    }

    fn monomial(&mut self) -> Result<ExponentVector> {
        let mut exps = vec![0u32; self.vars.dim()];
        self.skip_ws();
        if self.peek() == Some('1') {
            self.pos += 1;
            return Ok(ExponentVector::new(exps));
        }
        loop {
            self.skip_ws();
            let (name, at) = self.identifier()?;
            let var = self
                .vars
                .index_of(&name)
                .ok_or(Error::UnknownVariable { name, pos: at })?;
            self.skip_ws();
            let k = if self.peek() == Some('^') {
                self.pos += 1;
                self.skip_ws();
                self.exponent()?
            } else {
                1
            };
            exps[var] = exps[var].checked_add(k).ok_or(Error::Overflow)?;
            self.skip_ws();
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                return Ok(ExponentVector::new(exps));
            }
        }
    }
}

pub fn parse_monomial(text: &str, vars: &Variables) -> Result<ExponentVector> {
    let mut p = Parser { src: text, pos: 0, vars };
    let m = p.monomial()?;
    p.skip_ws();
    if p.pos != text.len() {
        return p.err("unexpected trailing input");
    }
    Ok(m)
}

pub fn parse_ideal(text: &str, vars: &Variables) -> Result<MonomialIdeal> {
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed == "0" {
        return Ok(MonomialIdeal::zero(vars.dim()));
    }
    let mut p = Parser { src: text, pos: 0, vars };
    let mut gens = Vec::new();
    loop {
        gens.push(p.monomial()?);
        p.skip_ws();
        match p.peek() {
            Some(',') => p.pos += 1,
            None => break,
            Some(c) => return p.err(format!("unexpected character `{c}`")),
        }
    }
    MonomialIdeal::new(vars.dim(), gens)
}

pub fn format_monomial(m: &ExponentVector, vars: &Variables) -> String {
    let factors: Vec<String> = m
        .entries()
        .iter()
        .zip(vars.names())
        .filter(|(&e, _)| e > 0)
        .map(|(&e, name)| if e == 1 { name.clone() } else { format!("{name}^{e}") })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

pub fn format_ideal(ideal: &MonomialIdeal, vars: &Variables) -> String {
    if ideal.is_zero() {
        return "0".to_string();
    }
    ideal
        .generators()
        .iter()
        .map(|g| format_monomial(g, vars))
        .collect::<Vec<_>>()
        .join(", ")
}

/// JSON form `{"vars": [...], "generators": [[...], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealFile {
    pub vars: Vec<String>,
    pub generators: Vec<Vec<u32>>,
}

impl IdealFile {
    pub fn from_ideal(ideal: &MonomialIdeal, vars: &Variables) -> Self {
        IdealFile {
            vars: vars.names().to_vec(),
            generators: ideal.generators().iter().map(|g| g.entries().to_vec()).collect(),
        }
    }

    pub fn into_ideal(self) -> Result<(MonomialIdeal, Variables)> {
        let vars = Variables::new(self.vars)?;
        for (i, g) in self.generators.iter().enumerate() {
            if g.len() != vars.dim() {
                return Err(Error::InvalidFile(format!(
                    "generator {i} has {} entries, expected {}",
                    g.len(),
                    vars.dim()
                )));
            }
        }
        let ideal = MonomialIdeal::new(vars.dim(), self.generators.into_iter().map(ExponentVector::new))?;
        Ok((ideal, vars))
    }

    pub fn from_json(text: &str) -> Result<(MonomialIdeal, Variables)> {
        let file: IdealFile = serde_json::from_str(text).map_err(|e| Error::InvalidFile(e.to_string()))?;
        file.into_ideal()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xyz() -> Variables {
        Variables::parse("x,y,z").unwrap()
    }

    #[test]
    fn parses_generator_list() {
        let i = parse_ideal("x^7, y^3, z^2", &xyz()).unwrap();
        assert_eq!(i, MonomialIdeal::from_exponents(&[[7, 0, 0], [0, 3, 0], [0, 0, 2]]));
        let xy = Variables::parse("x,y").unwrap();
        assert_eq!(parse_ideal("x*y", &xy).unwrap(), MonomialIdeal::from_exponents(&[[1, 1]]));
    }

    #[test]
    fn negative_exponent_is_a_syntax_error() {
        let err = parse_ideal("x^-1", &Variables::parse("x").unwrap()).unwrap_err();
        assert!(matches!(err, Error::Syntax { pos: 2, .. }), "{err:?}");
    }

    #[test]
    fn zero_exponent_and_garbage_rejected() {
        assert!(matches!(parse_ideal("x^0", &xyz()), Err(Error::Syntax { .. })));
        assert!(matches!(parse_ideal("x y", &xyz()), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_ideal("x,,y", &xyz()), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_ideal("x*", &xyz()), Err(Error::Syntax { .. })));
    }

    #[test]
    fn unknown_variable_reports_position() {
        let err = parse_ideal("x^2, w", &xyz()).unwrap_err();
        assert_eq!(err, Error::UnknownVariable { name: "w".into(), pos: 5 });
    }

    #[test]
    fn repeated_factors_accumulate() {
        let i = parse_ideal("x*x^2*z", &xyz()).unwrap();
        assert_eq!(i, MonomialIdeal::from_exponents(&[[3, 0, 1]]));
    }

    #[test]
    fn degenerate_ideals_round_trip() {
        let v = xyz();
        for i in [MonomialIdeal::zero(3), MonomialIdeal::unit(3)] {
            assert_eq!(parse_ideal(&format_ideal(&i, &v), &v).unwrap(), i);
        }
        assert_eq!(format_ideal(&MonomialIdeal::unit(3), &v), "1");
    }

    #[test]
    fn formats_in_descending_lex_order() {
        let v = xyz();
        let i = parse_ideal("z^2, y^2*z, x^7, x^2*y*z", &v).unwrap();
        assert_eq!(format_ideal(&i, &v), "x^7, x^2*y*z, y^2*z, z^2");
    }

    #[test]
    fn variable_list_validation() {
        assert!(Variables::parse("x,x").is_err());
        assert!(Variables::parse("x,1y").is_err());
        assert!(Variables::parse("").is_err());
        assert_eq!(Variables::standard(4).names()[3], "x4");
    }

    #[test]
    fn json_form() {
        let text = r#"{"vars": ["x", "z"], "generators": [[2, 0], [1, 2], [0, 4], [3, 3]]}"#;
        let (i, v) = IdealFile::from_json(text).unwrap();
        assert_eq!(i, MonomialIdeal::from_exponents(&[[2, 0], [1, 2], [0, 4]]));
        let back = serde_json::to_string(&IdealFile::from_ideal(&i, &v)).unwrap();
        assert_eq!(back, r#"{"vars":["x","z"],"generators":[[2,0],[1,2],[0,4]]}"#);
        let bad = r#"{"vars": ["x", "z"], "generators": [[2, 0, 1]]}"#;
        assert!(matches!(IdealFile::from_json(bad), Err(Error::InvalidFile(_))));
    }
}
