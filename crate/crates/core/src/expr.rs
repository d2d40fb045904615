//! Expression language over elements.
//!
//! ```text
//! expr  := term ('*' term)*
//! term  := atom ('\'' | '^' int)*
//! atom  := 'id' | 'shift(' int ')' | 'idem{' nats '}' | 'perm' ('(' nats ')')+
//!        | 'cfinj{k=' int '; N=' nat '; t=[' rows ']}' | '(' expr ')'
//! ```
//!
//! `*` is left-to-right composition, `'` inversion, and `^n` a power (a
//! negative power is a power of the inverse). Whitespace is ignored.

use std::fmt;
use std::str::FromStr;

use crate::chain::ChainSpec;
use crate::element::CofiniteInjection;
use crate::error::Error;
use crate::scalar::Scalar;
use crate::set::FiniteSet;

#[derive(Clone, PartialEq, Eq)]
pub enum Expr<T: Scalar> {
    /// Already validated and normalized.
    Literal(CofiniteInjection<T>),
    Compose(Box<Expr<T>>, Box<Expr<T>>),
    Invert(Box<Expr<T>>),
    Power(Box<Expr<T>>, i64),
}

impl<T: Scalar> fmt::Debug for Expr<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Literal(e) => write!(f, "{e}"),
            Expr::Compose(a, b) => write!(f, "compose({a:?}, {b:?})"),
            Expr::Invert(a) => write!(f, "invert({a:?})"),
            Expr::Power(a, n) => write!(f, "power({a:?}, {n})"),
        }
    }
}

pub fn parse<T: Scalar>(text: &str) -> Result<Expr<T>, Error> {
    let mut p = Parser::new(text)?;
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

pub fn eval<T: Scalar>(e: &Expr<T>) -> Result<CofiniteInjection<T>, Error> {
    match e {
        Expr::Literal(x) => Ok(x.clone()),
        Expr::Compose(a, b) => eval(a)?.compose(&eval(b)?),
        Expr::Invert(a) => eval(a)?.invert(),
        Expr::Power(a, n) => eval(a)?.pow(*n),
    }
}

/// Canonical text of an element.
pub fn format<T: Scalar>(a: &CofiniteInjection<T>) -> String {
    a.to_string()
}

/// Parses and evaluates an expression.
pub fn parse_element<T: Scalar>(text: &str) -> Result<CofiniteInjection<T>, Error> {
    eval(&parse(text)?)
}

/// `{a,b,...}`
pub fn parse_set<T: Scalar>(text: &str) -> Result<FiniteSet<T>, Error> {
    let mut p = Parser::new(text)?;
    p.expect(Tok::LBrace)?;
    let items = p.nat_list(Tok::Comma, Tok::RBrace)?;
    p.finish()?;
    Ok(items.into_iter().collect())
}

/// `[a,b,...]`, order kept.
pub fn parse_point_list<T: Scalar>(text: &str) -> Result<Vec<T>, Error> {
    let mut p = Parser::new(text)?;
    p.expect(Tok::LBracket)?;
    let items = p.nat_list(Tok::Comma, Tok::RBracket)?;
    p.finish()?;
    Ok(items)
}

/// `chain{start=<expr>; prefix=[a,b,...]}`
pub fn parse_chain<T: Scalar>(text: &str) -> Result<ChainSpec<T>, Error> {
    let mut p = Parser::new(text)?;
    p.keyword("chain")?;
    p.expect(Tok::LBrace)?;
    p.keyword("start")?;
    p.expect(Tok::Eq)?;
    let start = eval(&p.expr()?)?;
    p.expect(Tok::Semi)?;
    p.keyword("prefix")?;
    p.expect(Tok::Eq)?;
    p.expect(Tok::LBracket)?;
    let prefix = p.nat_list(Tok::Comma, Tok::RBracket)?;
    p.expect(Tok::RBrace)?;
    p.finish()?;
    ChainSpec::new(start, prefix)
}

impl<T: Scalar> FromStr for CofiniteInjection<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_element(s)
    }
}

impl<T: Scalar> FromStr for ChainSpec<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_chain(s)
    }
}

impl<T: Scalar> FromStr for FiniteSet<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_set(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(String),
    LParen,
    RParen,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Star,
    Quote,
    Caret,
    Comma,
    Semi,
    Eq,
    Minus,
    Gt,
    Underscore,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "identifier {s:?}"),
            Tok::Num(s) => write!(f, "number {s}"),
            Tok::End => f.write_str("end of input"),
            other => {
                let s = match other {
                    Tok::LParen => "(",
                    Tok::RParen => ")",
                    Tok::LBrace => "{",
                    Tok::RBrace => "}",
                    Tok::LBracket => "[",
                    Tok::RBracket => "]",
                    Tok::Star => "*",
                    Tok::Quote => "'",
                    Tok::Caret => "^",
                    Tok::Comma => ",",
                    Tok::Semi => ";",
                    Tok::Eq => "=",
                    Tok::Minus => "-",
                    Tok::Gt => ">",
                    _ => "_",
                };
                write!(f, "'{s}'")
            }
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, Error> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let tok = if c.is_ascii_digit() || c.is_ascii_alphabetic() {
            let mut word = String::new();
            let digits = c.is_ascii_digit();
            while let Some(&(_, d)) = chars.peek() {
                let fits = if digits { d.is_ascii_digit() } else { d.is_ascii_alphanumeric() };
                if !fits {
                    break;
                }
                word.push(d);
                chars.next();
            }
            out.push((pos, if digits { Tok::Num(word) } else { Tok::Ident(word) }));
            continue;
        } else {
            match c {
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '{' => Tok::LBrace,
                '}' => Tok::RBrace,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                '*' => Tok::Star,
                '\'' => Tok::Quote,
                '^' => Tok::Caret,
                ',' => Tok::Comma,
                ';' => Tok::Semi,
                '=' => Tok::Eq,
                '-' => Tok::Minus,
                '>' => Tok::Gt,
                '_' => Tok::Underscore,
                other => return Err(Error::Parse { pos, msg: format!("unexpected character {other:?}") }),
            }
        };
        chars.next();
        out.push((pos, tok));
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self, Error> {
        Ok(Parser { toks: tokenize(text)?, at: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn error<X>(&self, msg: impl Into<String>) -> Result<X, Error> {
        Err(Error::Parse { pos: self.pos(), msg: msg.into() })
    }

    fn expect(&mut self, want: Tok) -> Result<(), Error> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            self.error(format!("expected {want}, found {}", self.peek()))
        }
    }

    fn keyword(&mut self, word: &str) -> Result<(), Error> {
        match self.peek() {
            Tok::Ident(w) if w == word => {
                self.bump();
                Ok(())
            }
            other => self.error(format!("expected {word:?}, found {other}")),
        }
    }

    fn finish(&self) -> Result<(), Error> {
        match self.peek() {
            Tok::End => Ok(()),
            other => self.error(format!("unexpected {other} after end of expression")),
        }
    }

    fn int<N: FromStr>(&mut self) -> Result<N, Error> {
        let pos = self.pos();
        let negative = *self.peek() == Tok::Minus;
        if negative {
            self.bump();
        }
        match self.bump() {
            Tok::Num(digits) => {
                let text = if negative { format!("-{digits}") } else { digits };
                text.parse().map_err(|_| Error::Parse { pos, msg: format!("number {text} out of range") })
            }
            other => Err(Error::Parse { pos, msg: format!("expected integer, found {other}") }),
        }
    }

    fn nat<T: Scalar>(&mut self) -> Result<T, Error> {
        if *self.peek() == Tok::Minus {
            return self.error("expected a natural number");
        }
        self.int()
    }

    /// Naturals separated by `sep` (optional when `sep` is a comma inside a
    /// cycle) up to and including `close`.
    fn nat_list<T: Scalar>(&mut self, sep: Tok, close: Tok) -> Result<Vec<T>, Error> {
        let mut items = Vec::new();
        if *self.peek() == close {
            self.bump();
            return Ok(items);
        }
        loop {
            items.push(self.nat()?);
            if *self.peek() == sep {
                self.bump();
            } else if *self.peek() == close {
                self.bump();
                return Ok(items);
            } else {
                return self.error(format!("expected {sep} or {close}, found {}", self.peek()));
            }
        }
    }

    fn expr<T: Scalar>(&mut self) -> Result<Expr<T>, Error> {
        let mut lhs = self.term()?;
        while *self.peek() == Tok::Star {
            self.bump();
            let rhs = self.term()?;
            lhs = Expr::Compose(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term<T: Scalar>(&mut self) -> Result<Expr<T>, Error> {
        let mut e = self.atom()?;
        loop {
            match self.peek() {
                Tok::Quote => {
                    self.bump();
                    e = Expr::Invert(Box::new(e));
                }
                Tok::Caret => {
                    self.bump();
                    let n = self.int()?;
                    e = Expr::Power(Box::new(e), n);
                }
                _ => return Ok(e),
            }
        }
    }

    fn atom<T: Scalar>(&mut self) -> Result<Expr<T>, Error> {
        let pos = self.pos();
        let literal = match self.bump() {
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                return Ok(e);
            }
            Tok::Ident(word) => match word.as_str() {
                "id" => CofiniteInjection::identity(),
                "shift" => {
                    self.expect(Tok::LParen)?;
                    let k = self.int()?;
                    self.expect(Tok::RParen)?;
                    CofiniteInjection::translation(k)?
                }
                "idem" => {
                    self.expect(Tok::LBrace)?;
                    let holes: FiniteSet<T> = self.nat_list(Tok::Comma, Tok::RBrace)?.into_iter().collect();
                    CofiniteInjection::idempotent_on_complement(&holes)?
                }
                "perm" => self.perm()?,
                "cfinj" => self.cfinj()?,
                other => return Err(Error::Parse { pos, msg: format!("unknown literal {other:?}") }),
            },
            other => return Err(Error::Parse { pos, msg: format!("expected an element, found {other}") }),
        };
        Ok(Expr::Literal(literal))
    }

    fn perm<T: Scalar>(&mut self) -> Result<CofiniteInjection<T>, Error> {
        if *self.peek() != Tok::LParen {
            return self.error("perm needs at least one cycle");
        }
        let mut cycles = Vec::new();
        while *self.peek() == Tok::LParen {
            self.bump();
            let mut cycle = Vec::new();
            while *self.peek() != Tok::RParen {
                cycle.push(self.nat()?);
                if *self.peek() == Tok::Comma {
                    self.bump();
                }
            }
            self.bump();
            cycles.push(cycle);
        }
        CofiniteInjection::from_cycles(&cycles)
    }

    fn cfinj<T: Scalar>(&mut self) -> Result<CofiniteInjection<T>, Error> {
        self.expect(Tok::LBrace)?;
        self.keyword("k")?;
        self.expect(Tok::Eq)?;
        let shift: T = self.int()?;
        self.expect(Tok::Semi)?;
        self.keyword("N")?;
        self.expect(Tok::Eq)?;
        let threshold: usize = self.int()?;
        self.expect(Tok::Semi)?;
        self.keyword("t")?;
        self.expect(Tok::Eq)?;
        self.expect(Tok::LBracket)?;
        let mut listed: Vec<(usize, Option<T>)> = Vec::new();
        if *self.peek() != Tok::RBracket {
            loop {
                let row: usize = self.nat::<T>()?.index().expect("naturals index");
                self.expect(Tok::Minus)?;
                self.expect(Tok::Gt)?;
                let value = if *self.peek() == Tok::Underscore {
                    self.bump();
                    None
                } else {
                    Some(self.nat()?)
                };
                listed.push((row, value));
                if *self.peek() == Tok::Comma {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        self.expect(Tok::RBracket)?;
        self.expect(Tok::RBrace)?;
        if listed.len() != threshold {
            return Err(Error::Validation(format!("table lists {} rows but N = {threshold}", listed.len())));
        }
        let mut table: Vec<Option<Option<T>>> = vec![None; threshold];
        for (row, value) in listed {
            match table.get_mut(row) {
                None => return Err(Error::Validation(format!("row {row} is outside 0..{threshold}"))),
                Some(Some(_)) => return Err(Error::Validation(format!("row {row} listed twice"))),
                Some(slot) => *slot = Some(value),
            }
        }
        let rows = table.into_iter().map(|v| v.expect("every row listed once")).collect();
        CofiniteInjection::new(shift, rows)
    }
}
