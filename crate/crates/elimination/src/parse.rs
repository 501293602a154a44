//! Parser for plane-curve equations such as `x^2/4 + y^2 - 1` or
//! `(x - 1)^3 + 2*x*y - 7/3`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::EliminationError;
use crate::sparse::Sparse;

/// Bivariate polynomial in `x`, `y` with rational coefficients.
pub type RationalPoly2 = BTreeMap<[u32; 2], BigRational>;

pub fn parse_curve(src: &str) -> Result<RationalPoly2, EliminationError> {
    let tokens = tokenize(src)?;
    let mut p = Parser { tokens, pos: 0 };
    let out = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(EliminationError::Parse(format!(
            "unexpected token {:?} in {src:?}",
            p.tokens[p.pos]
        )));
    }
    Ok(out)
}

/// Multiply through by the lcm of denominators and divide by the integer content.
pub fn clear_denominators(p: &RationalPoly2) -> Sparse<2> {
    let lcm = p
        .values()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<([u32; 2], BigInt)> = p
        .iter()
        .map(|(e, c)| (*e, (c * BigRational::from_integer(lcm.clone())).to_integer()))
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |g, (_, c)| g.gcd(c));
    if content.is_zero() {
        return Sparse::zero();
    }
    Sparse::from_terms(ints.into_iter().map(|(e, c)| (e, c / &content)))
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<Token>, EliminationError> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => {}
            '+' => out.push(Token::Plus),
            '-' => out.push(Token::Minus),
            '*' => out.push(Token::Star),
            '/' => out.push(Token::Slash),
            '^' => out.push(Token::Caret),
            '(' => out.push(Token::LParen),
            ')' => out.push(Token::RParen),
            'x' => out.push(Token::Var(0)),
            'y' => out.push(Token::Var(1)),
            '0'..='9' => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..=i].iter().collect();
                out.push(Token::Num(digits.parse().expect("ascii digits")));
            }
            other => {
                return Err(EliminationError::Parse(format!(
                    "unexpected character {other:?} in {src:?}"
                )))
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<RationalPoly2, EliminationError> {
        let mut acc = match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                neg(&self.term()?)
            }
            Some(Token::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = add(&acc, &self.term()?);
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = add(&acc, &neg(&self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RationalPoly2, EliminationError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = mul(&acc, &self.power()?);
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    let divisor = self.power()?;
                    let c = as_constant(&divisor).ok_or_else(|| {
                        EliminationError::Parse("division is only allowed by a constant".into())
                    })?;
                    if c.is_zero() {
                        return Err(EliminationError::Parse("division by zero".into()));
                    }
                    acc = acc.into_iter().map(|(e, v)| (e, v / &c)).collect();
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<RationalPoly2, EliminationError> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            let Some(Token::Num(n)) = self.bump() else {
                return Err(EliminationError::Parse("exponent must be a non-negative integer".into()));
            };
            let n: u32 = n
                .try_into()
                .map_err(|_| EliminationError::Parse("exponent too large".into()))?;
            let mut acc = constant(BigRational::one());
            for _ in 0..n {
                acc = mul(&acc, &base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RationalPoly2, EliminationError> {
        match self.bump() {
            Some(Token::Num(n)) => Ok(constant(BigRational::from_integer(n))),
            Some(Token::Var(v)) => {
                let mut e = [0; 2];
                e[v] = 1;
                Ok(BTreeMap::from([(e, BigRational::one())]))
            }
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(EliminationError::Parse("missing ')'".into())),
                }
            }
            Some(Token::Minus) => Ok(neg(&self.power()?)),
            other => Err(EliminationError::Parse(format!("unexpected {other:?}"))),
        }
    }
}

fn constant(c: BigRational) -> RationalPoly2 {
    let mut m = BTreeMap::new();
    if !c.is_zero() {
        m.insert([0, 0], c);
    }
    m
}

fn as_constant(p: &RationalPoly2) -> Option<BigRational> {
    match p.len() {
        0 => Some(BigRational::zero()),
        1 => p.get(&[0, 0]).cloned(),
        _ => None,
    }
}

fn add(a: &RationalPoly2, b: &RationalPoly2) -> RationalPoly2 {
    let mut out = a.clone();
    for (e, c) in b {
        let v = out.entry(*e).or_insert_with(BigRational::zero);
        *v += c;
        if v.is_zero() {
            out.remove(e);
        }
    }
    out
}

fn neg(a: &RationalPoly2) -> RationalPoly2 {
    a.iter().map(|(e, c)| (*e, -c)).collect()
}

fn mul(a: &RationalPoly2, b: &RationalPoly2) -> RationalPoly2 {
    let mut out = BTreeMap::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e = [ea[0] + eb[0], ea[1] + eb[1]];
            let v = out.entry(e).or_insert_with(BigRational::zero);
            *v += ca * cb;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_ellipse_with_fractions() {
        let p = parse_curve("x^2/4 + y^2 - 1").unwrap();
        assert_eq!(clear_denominators(&p).to_text(["x", "y"]), "x^2 + 4*y^2 - 4");
    }

    #[test]
    fn parses_parentheses_and_unary_minus() {
        let p = parse_curve("-(x - y)^2 + 2*x*y").unwrap();
        assert_eq!(clear_denominators(&p).to_text(["x", "y"]), "-x^2 + 4*x*y - y^2");
        let p = parse_curve("y^2 - x^2*(x + 1)").unwrap();
        assert_eq!(clear_denominators(&p).to_text(["x", "y"]), "-x^3 - x^2 + y^2");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_curve("x + z").is_err());
        assert!(parse_curve("x / y").is_err());
        assert!(parse_curve("(x + 1").is_err());
        assert!(parse_curve("x^y").is_err());
    }
}
