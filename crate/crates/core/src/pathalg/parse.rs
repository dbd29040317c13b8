use num_bigint::BigInt;

use super::{FreeElement, Path, Quiver};
use crate::error::{Error, Result};
use crate::exactla::FieldSpec;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Name(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Open,
    Close,
}

struct Lexed {
    toks: Vec<(Tok, usize)>,
    end: usize,
}

fn lex(text: &str, line: usize, col0: usize) -> Result<Lexed> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '/' => Some(Tok::Slash),
            '(' => Some(Tok::Open),
            ')' => Some(Tok::Close),
            _ => None,
        };
        if let Some(t) = single {
            toks.push((t, col));
            i += 1;
        } else if c.is_ascii_digit() {
            let s = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[s..i].iter().collect();
            toks.push((Tok::Int(digits.parse().expect("digits")), col));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let s = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || matches!(chars[i], '_' | ':' | '.' | '\'')) {
                i += 1;
            }
            toks.push((Tok::Name(chars[s..i].iter().collect()), col));
        } else {
            return Err(Error::parse(line, col, format!("unexpected character `{c}`")));
        }
    }
    Ok(Lexed {
        toks,
        end: col0 + chars.len(),
    })
}

struct Parser<'a> {
    quiver: &'a Quiver,
    field: FieldSpec,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, c)| *c)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.line, self.col(), msg)
    }

    fn expr(&mut self) -> Result<FreeElement> {
        let mut acc = FreeElement::zero(self.field);
        let mut negative = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                true
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let t = self.term()?;
            let sign = if negative { -self.field.one() } else { self.field.one() };
            acc.add_assign_scaled(&sign, &t);
            match self.peek() {
                Some(Tok::Plus) => negative = false,
                Some(Tok::Minus) => negative = true,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn exponent(&mut self) -> Result<usize> {
        if self.peek() != Some(&Tok::Caret) {
            return Ok(1);
        }
        self.pos += 1;
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                let n: usize = n.try_into().map_err(|_| self.err("exponent too large"))?;
                if n == 0 {
                    return Err(self.err("exponent must be positive"));
                }
                Ok(n)
            }
            _ => Err(self.err("expected an exponent")),
        }
    }

    fn term(&mut self) -> Result<FreeElement> {
        let start_col = self.col();
        let mut coef = self.field.one();
        let mut product: Option<FreeElement> = None;
        let mut literal = true;
        loop {
            match self.peek().cloned() {
                Some(Tok::Int(n)) => {
                    self.pos += 1;
                    let mut c = self.field.from_bigint(&n);
                    if self.peek() == Some(&Tok::Slash) {
                        self.pos += 1;
                        let Some(Tok::Int(d)) = self.peek().cloned() else {
                            return Err(self.err("expected a denominator"));
                        };
                        let dinv = self
                            .field
                            .from_bigint(&d)
                            .inv()
                            .ok_or_else(|| self.err("denominator is zero in the field"))?;
                        self.pos += 1;
                        c = &c * &dinv;
                    }
                    coef = &coef * &c;
                }
                Some(Tok::Name(name)) => {
                    let p = self.atom_path(&name)?;
                    self.pos += 1;
                    let k = self.exponent()?;
                    let f = power(&FreeElement::from_path(self.field, p), k);
                    product = Some(match product {
                        None => f,
                        Some(acc) => acc.multiply(&f),
                    });
                }
                Some(Tok::Open) => {
                    self.pos += 1;
                    let inner = self.expr()?;
                    if self.peek() != Some(&Tok::Close) {
                        return Err(self.err("expected `)`"));
                    }
                    self.pos += 1;
                    let k = self.exponent()?;
                    literal = false;
                    let f = power(&inner, k);
                    product = Some(match product {
                        None => f,
                        Some(acc) => acc.multiply(&f),
                    });
                }
                _ => return Err(self.err("expected a coefficient, path, or `(`")),
            }
            if self.peek() == Some(&Tok::Star) {
                self.pos += 1;
            } else {
                break;
            }
        }
        let Some(prod) = product else {
            return Err(Error::parse(self.line, start_col, "a term needs at least one path"));
        };
        if literal && prod.is_zero() {
            return Err(Error::parse(self.line, start_col, "path literal is not composable"));
        }
        Ok(prod.scale(&coef))
    }

    fn atom_path(&self, name: &str) -> Result<Path> {
        if let Some(a) = self.quiver.arrow_id(name) {
            return Ok(self.quiver.arrow_path(a));
        }
        if let Some(v) = name.strip_prefix("e_").and_then(|v| self.quiver.vertex_id(v)) {
            return Ok(Path::trivial(v));
        }
        Err(self.err(format!("unknown arrow `{name}`")))
    }
}

fn power(f: &FreeElement, k: usize) -> FreeElement {
    let mut acc = f.clone();
    for _ in 1..k {
        acc = acc.multiply(f);
    }
    acc
}

/// Parses an expression such as `x^3 + y*x^2` or `a1*a2 - b1*b2`, written
/// right to left.
pub fn parse_element(quiver: &Quiver, field: FieldSpec, text: &str) -> Result<FreeElement> {
    parse_element_at(quiver, field, text, 1, 1)
}

/// As [`parse_element`], reporting errors relative to `line` and starting column `col0`.
pub(crate) fn parse_element_at(
    quiver: &Quiver,
    field: FieldSpec,
    text: &str,
    line: usize,
    col0: usize,
) -> Result<FreeElement> {
    let lexed = lex(text, line, col0)?;
    let mut p = Parser {
        quiver,
        field,
        toks: lexed.toks,
        pos: 0,
        line,
        end: lexed.end,
    };
    if p.toks.is_empty() {
        return Err(p.err("empty expression"));
    }
    let f = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(f)
}
