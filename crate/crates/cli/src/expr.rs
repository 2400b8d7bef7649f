//! A small expression language for linear combinations of symmetric
//! functions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('.' | '#') factor)*
//! factor := rational '*' factor | rational | '-' factor | atom | '(' expr ')'
//! atom   := BASIS '[' INT (',' INT)* ']'   BASIS ∈ {m, e, h, p, s}
//! rational := INT ('/' INT)?
//! ```
//!
//! `.` is the ordinary (outer) product and `#` the internal (Kronecker)
//! product. Whitespace is ignored. A bare rational is a scalar of degree 0,
//! and `b[]` is the degree-0 unit written in basis `b`; both are needed so that
//! every rendered [`SymFunc`] parses back.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use symkron::kronecker::kronecker;
use symkron::symfunc::{basis_element, convert, multiply};
use symkron::{Basis, Partition, Rational, SymFunc};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expression {
    Scalar(Rational),
    Atom { basis: Basis, partition: Partition },
    Neg(Box<Expression>),
    Scaled(Rational, Box<Expression>),
    Add(Box<Expression>, Box<Expression>),
    Sub(Box<Expression>, Box<Expression>),
    Outer(Box<Expression>, Box<Expression>),
    Internal(Box<Expression>, Box<Expression>),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("parse error at offset {offset}: {message}")]
pub struct ParseError {
    /// 1-based character offset.
    pub offset: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Basis(Basis),
    Sym(char),
}

struct Lexer {
    tokens: Vec<(usize, Token)>,
    end: usize,
}

fn lex(input: &str) -> Result<Lexer, ParseError> {
    let chars: Vec<char> = input.chars().collect();
    let mut tokens = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let offset = k + 1;
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let digits: String = chars[start..k].iter().collect();
            tokens.push((offset, Token::Int(digits.parse().expect("ascii digits"))));
        } else if let Some(b) = Basis::from_symbol(c) {
            tokens.push((offset, Token::Basis(b)));
            k += 1;
        } else if "+-*/.#()[],".contains(c) {
            tokens.push((offset, Token::Sym(c)));
            k += 1;
        } else {
            return Err(ParseError {
                offset,
                message: format!("unexpected character {c:?}"),
            });
        }
    }
    Ok(Lexer {
        tokens,
        end: chars.len() + 1,
    })
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn describe(&self) -> String {
        match self.peek() {
            None => "end of input".to_owned(),
            Some(Token::Int(n)) => format!("number {n}"),
            Some(Token::Basis(b)) => format!("basis {b}"),
            Some(Token::Sym(c)) => format!("{c:?}"),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Token::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.error(format!("expected {c:?}, found {}", self.describe()))
        }
    }

    fn expr(&mut self) -> Result<Expression, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expression::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expression::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expression, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            if self.eat('.') {
                lhs = Expression::Outer(Box::new(lhs), Box::new(self.factor()?));
            } else if self.eat('#') {
                lhs = Expression::Internal(Box::new(lhs), Box::new(self.factor()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn factor(&mut self) -> Result<Expression, ParseError> {
        match self.peek().cloned() {
            Some(Token::Int(_)) => {
                let q = self.rational()?;
                if self.eat('*') {
                    Ok(Expression::Scaled(q, Box::new(self.factor()?)))
                } else {
                    Ok(Expression::Scalar(q))
                }
            }
            Some(Token::Sym('-')) => {
                self.pos += 1;
                Ok(Expression::Neg(Box::new(self.factor()?)))
            }
            Some(Token::Sym('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(inner)
            }
            Some(Token::Basis(basis)) => self.atom(basis),
            _ => self.error(format!("expected a term, found {}", self.describe())),
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        match self.peek().cloned() {
            Some(Token::Int(n)) => {
                self.pos += 1;
                Ok(n)
            }
            _ => self.error(format!("expected an integer, found {}", self.describe())),
        }
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let numer = self.integer()?;
        if !self.eat('/') {
            return Ok(Rational::from_integer(numer));
        }
        let at = self.offset();
        let denom = self.integer()?;
        if denom.is_zero() {
            return Err(ParseError {
                offset: at,
                message: "zero denominator".to_owned(),
            });
        }
        Ok(Rational::new(numer, denom))
    }

    fn atom(&mut self, basis: Basis) -> Result<Expression, ParseError> {
        let start = self.offset();
        self.pos += 1;
        self.expect('[')?;
        let mut parts = Vec::new();
        if !self.eat(']') {
            loop {
                let at = self.offset();
                let n = self.integer()?;
                let part = usize::try_from(&n).map_err(|_| ParseError {
                    offset: at,
                    message: format!("part {n} is too large"),
                })?;
                parts.push(part);
                if self.eat(']') {
                    break;
                }
                self.expect(',')?;
            }
        }
        let text = format!(
            "{basis}[{}]",
            parts
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",")
        );
        if parts.contains(&0) {
            return Err(ParseError {
                offset: start,
                message: format!("partition parts must be positive in atom {text}"),
            });
        }
        let partition = Partition::new(parts).map_err(|_| ParseError {
            offset: start,
            message: format!("partition parts must be weakly decreasing in atom {text}"),
        })?;
        Ok(Expression::Atom { basis, partition })
    }
}

pub fn parse(input: &str) -> Result<Expression, ParseError> {
    let Lexer { tokens, end } = lex(input)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end,
    };
    let e = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return parser.error(format!("unexpected {}", parser.describe()));
    }
    Ok(e)
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("cannot add terms of degree {left} and {right}")]
    MixedDegreeSum { left: usize, right: usize },
    #[error(transparent)]
    Core(#[from] symkron::Error),
}

/// Evaluates `e` exactly, with the result expressed in `basis`.
///
/// Sums of nonzero terms of different degrees are rejected; zero is
/// homogeneous of every degree. `#` needs operands of equal degree.
pub fn evaluate(e: &Expression, basis: Basis) -> Result<SymFunc, EvalError> {
    Ok(match e {
        Expression::Scalar(q) => SymFunc::one(basis).scale(q),
        Expression::Atom {
            basis: b,
            partition,
        } => convert(&basis_element(*b, partition.clone()), basis),
        Expression::Neg(inner) => evaluate(inner, basis)?.scale(&-Rational::one()),
        Expression::Scaled(q, inner) => evaluate(inner, basis)?.scale(q),
        Expression::Add(a, b) => sum(&evaluate(a, basis)?, &evaluate(b, basis)?)?,
        Expression::Sub(a, b) => sum(
            &evaluate(a, basis)?,
            &evaluate(b, basis)?.scale(&-Rational::one()),
        )?,
        Expression::Outer(a, b) => multiply(&evaluate(a, basis)?, &evaluate(b, basis)?),
        Expression::Internal(a, b) => kronecker(&evaluate(a, basis)?, &evaluate(b, basis)?)?,
    })
}

fn sum(a: &SymFunc, b: &SymFunc) -> Result<SymFunc, EvalError> {
    a.checked_add(b).map_err(|e| match e {
        symkron::Error::DegreeMismatch { left, right } => EvalError::MixedDegreeSum { left, right },
        other => EvalError::Core(other),
    })
}

impl fmt::Display for Expression {
    /// Fully parenthesised rendering that parses back to the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expression::Scalar(q) => write!(f, "{q}"),
            Expression::Atom { basis, partition } => write!(
                f,
                "{basis}[{}]",
                partition
                    .parts()
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            ),
            Expression::Neg(e) => write!(f, "-({e})"),
            Expression::Scaled(q, e) => write!(f, "{q}*({e})"),
            Expression::Add(a, b) => write!(f, "({a}) + ({b})"),
            Expression::Sub(a, b) => write!(f, "({a}) - ({b})"),
            Expression::Outer(a, b) => write!(f, "({a}) . ({b})"),
            Expression::Internal(a, b) => write!(f, "({a}) # ({b})"),
        }
    }
}
