//! Exact evaluation of scalar expressions such as `-1/36*mu^2` or
//! `sqrt(6*R)`.

use std::collections::BTreeMap;

use exactnum::Scalar;

use crate::CatalogError;

pub type Bindings = BTreeMap<String, Scalar>;

pub fn eval(input: &str, params: &Bindings) -> Result<Scalar, CatalogError> {
    let tokens = tokenize(input)?;
    let mut p = Parser { tokens: &tokens, pos: 0, params, input };
    let v = p.sum()?;
    if p.pos != tokens.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(v)
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(Scalar),
    Ident(String),
    Op(char),
}

fn tokenize(input: &str) -> Result<Vec<Token>, CatalogError> {
    let mut out = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            out.push(Token::Num(decimal(&chars[start..i].iter().collect::<String>())?));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) || c == '−' {
            out.push(Token::Op(if c == '−' { '-' } else { c }));
            i += 1;
        } else {
            return Err(CatalogError::Malformed(format!("unexpected `{c}` in `{input}`")));
        }
    }
    Ok(out)
}

/// `12`, `0.25` → exact rationals.
fn decimal(s: &str) -> Result<Scalar, CatalogError> {
    let bad = || CatalogError::Malformed(format!("bad number `{s}`"));
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    if frac.contains('.') || (int.is_empty() && frac.is_empty()) || frac.len() > 18 {
        return Err(bad());
    }
    let digits = format!("{int}{frac}");
    let num: i64 = digits.parse().map_err(|_| bad())?;
    Ok(Scalar::ratio(num, 10i64.pow(frac.len() as u32)))
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    params: &'a Bindings,
    input: &'a str,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> CatalogError {
        CatalogError::Malformed(format!("{what} in `{}`", self.input))
    }

    fn eat(&mut self, op: char) -> bool {
        if self.tokens.get(self.pos) == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<Scalar, CatalogError> {
        let mut acc = self.product()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.product()?;
            } else if self.eat('-') {
                acc = &acc - &self.product()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<Scalar, CatalogError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                acc = acc.checked_div(&self.unary()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar, CatalogError> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let exp = self.unary()?;
        let n = exp
            .as_rational()
            .filter(|q| q.is_integer())
            .and_then(|q| i32::try_from(q.to_integer()).ok())
            .ok_or_else(|| self.error("exponent must be an integer"))?;
        let p = base.pow(n.unsigned_abs());
        Ok(if n < 0 { p.inv()? } else { p })
    }

    fn atom(&mut self) -> Result<Scalar, CatalogError> {
        match self.tokens.get(self.pos).cloned() {
            Some(Token::Num(v)) => {
                self.pos += 1;
                Ok(v)
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                if self.eat('(') {
                    let arg = self.sum()?;
                    if !self.eat(')') {
                        return Err(self.error("missing `)`"));
                    }
                    return match name.as_str() {
                        "sqrt" => Ok(arg.sqrt()?),
                        _ => Err(self.error(&format!("unknown function `{name}`"))),
                    };
                }
                self.params.get(&name).cloned().ok_or_else(|| self.error(&format!("unbound parameter `{name}`")))
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let v = self.sum()?;
                if !self.eat(')') {
                    return Err(self.error("missing `)`"));
                }
                Ok(v)
            }
            _ => Err(self.error("expected a number, parameter or `(`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn with(name: &str, v: i64) -> Bindings {
        [(name.to_string(), Scalar::from(v))].into_iter().collect()
    }

    #[test]
    fn arithmetic() {
        let p = with("mu", 6);
        assert_eq!(eval("-1/36*mu^2", &p).unwrap(), Scalar::from(-1));
        assert_eq!(eval("−4/36 * mu^2", &p).unwrap(), Scalar::from(-4));
        assert_eq!(eval("2^-2", &p).unwrap(), Scalar::ratio(1, 4));
        assert_eq!(eval("0.25 + (1 - 1/2)", &p).unwrap(), Scalar::ratio(3, 4));
        assert_eq!(eval("sqrt(6*R)", &with("R", 6)).unwrap(), Scalar::from(6));
        assert_eq!(eval("sqrt(8)/2", &p).unwrap(), Scalar::sqrt_int(2));
    }

    #[test]
    fn errors() {
        let p = Bindings::new();
        for bad in ["1/0", "mu", "2^(1/2)", "(1", "1 2", "cos(1)", "1 $ 2", "1..2"] {
            assert!(eval(bad, &p).is_err(), "{bad}");
        }
    }
}
