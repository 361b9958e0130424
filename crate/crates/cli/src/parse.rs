//! Text grammar for polynomials and field elements.
//!
//! Expressions are built from integers, the indeterminate `x`
//! (case-insensitive), the generator symbol `g` inside an extension
//! field, the operators `+ - * / ^`, and parentheses. `*` is optional
//! before a symbol or parenthesis, so `3/2*x^4 - x + 7`, `3x^2` and
//! `(g+1)(x-g)` all parse. Division is only by nonzero constants.

use polyconj_core::arith::Field;
use polyconj_core::poly::{self, Poly};

/// Hard cap on exponents in the text form.
const MAX_EXPONENT: u64 = 512;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
    pub position: usize,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "parse error at {}: {}", self.position, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Number(u64, usize),
    Var(usize),
    Generator(usize),
    Plus(usize),
    Minus(usize),
    Star(usize),
    Slash(usize),
    Caret(usize),
    LParen(usize),
    RParen(usize),
}

impl Token {
    fn pos(&self) -> usize {
        match *self {
            Token::Number(_, p)
            | Token::Var(p)
            | Token::Generator(p)
            | Token::Plus(p)
            | Token::Minus(p)
            | Token::Star(p)
            | Token::Slash(p)
            | Token::Caret(p)
            | Token::LParen(p)
            | Token::RParen(p) => p,
        }
    }
}

fn tokenize(input: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0usize;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Token::Plus(i));
                i += 1;
            }
            '-' => {
                out.push(Token::Minus(i));
                i += 1;
            }
            '*' => {
                out.push(Token::Star(i));
                i += 1;
            }
            '/' => {
                out.push(Token::Slash(i));
                i += 1;
            }
            '^' => {
                out.push(Token::Caret(i));
                i += 1;
            }
            '(' => {
                out.push(Token::LParen(i));
                i += 1;
            }
            ')' => {
                out.push(Token::RParen(i));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                let mut value: u64 = 0;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    value = value
                        .checked_mul(10)
                        .and_then(|v| v.checked_add((bytes[i] - b'0') as u64))
                        .ok_or(ParseError {
                            message: "integer literal too large".into(),
                            position: start,
                        })?;
                    i += 1;
                }
                out.push(Token::Number(value, start));
            }
            'x' | 'X' => {
                out.push(Token::Var(i));
                i += 1;
            }
            'g' | 'G' => {
                out.push(Token::Generator(i));
                i += 1;
            }
            _ => {
                return Err(ParseError {
                    message: format!("unexpected character '{c}'"),
                    position: i,
                })
            }
        }
    }
    Ok(out)
}

/// Parses an expression into a polynomial in `x` over the given field.
/// The generator symbol is only legal when `generator` is provided.
pub struct PolyParser<'f, F: Field> {
    field: &'f F,
    generator: Option<F::Elem>,
}

impl<'f, F: Field> PolyParser<'f, F> {
    pub fn new(field: &'f F, generator: Option<F::Elem>) -> Self {
        PolyParser { field, generator }
    }

    pub fn parse(&self, input: &str) -> Result<Poly<F::Elem>, ParseError> {
        let tokens = tokenize(input)?;
        if tokens.is_empty() {
            return Err(ParseError { message: "empty expression".into(), position: 0 });
        }
        let mut cursor = Cursor { tokens: &tokens, index: 0 };
        let value = self.expr(&mut cursor)?;
        if let Some(tok) = cursor.peek() {
            return Err(ParseError {
                message: "trailing input".into(),
                position: tok.pos(),
            });
        }
        Ok(value)
    }

    fn expr(&self, c: &mut Cursor<'_>) -> Result<Poly<F::Elem>, ParseError> {
        let mut negate = false;
        match c.peek() {
            Some(Token::Minus(_)) => {
                c.advance();
                negate = true;
            }
            Some(Token::Plus(_)) => {
                c.advance();
            }
            _ => {}
        }
        let mut acc = self.term(c)?;
        if negate {
            acc = poly::neg(self.field, &acc);
        }
        loop {
            match c.peek() {
                Some(Token::Plus(_)) => {
                    c.advance();
                    let rhs = self.term(c)?;
                    acc = poly::add(self.field, &acc, &rhs);
                }
                Some(Token::Minus(_)) => {
                    c.advance();
                    let rhs = self.term(c)?;
                    acc = poly::sub(self.field, &acc, &rhs);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&self, c: &mut Cursor<'_>) -> Result<Poly<F::Elem>, ParseError> {
        let mut acc = self.factor(c)?;
        loop {
            match c.peek() {
                Some(Token::Star(_)) => {
                    c.advance();
                    let rhs = self.factor(c)?;
                    acc = poly::mul(self.field, &acc, &rhs);
                }
                Some(Token::Slash(pos)) => {
                    let pos = *pos;
                    c.advance();
                    let rhs = self.factor(c)?;
                    if !rhs.is_constant() || rhs.is_zero() {
                        return Err(ParseError {
                            message: "division only by nonzero constants".into(),
                            position: pos,
                        });
                    }
                    let inv = self.field.inv(&rhs.coeffs()[0]).map_err(|_| ParseError {
                        message: "division by zero".into(),
                        position: pos,
                    })?;
                    acc = poly::scale(self.field, &acc, &inv);
                }
                // Juxtaposition: a symbol or parenthesis right after a
                // factor multiplies, so "3x^2" and "(x+1)(x-1)" work.
                Some(Token::Var(_)) | Some(Token::Generator(_)) | Some(Token::LParen(_)) => {
                    let rhs = self.factor(c)?;
                    acc = poly::mul(self.field, &acc, &rhs);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&self, c: &mut Cursor<'_>) -> Result<Poly<F::Elem>, ParseError> {
        let base = self.atom(c)?;
        if let Some(Token::Caret(pos)) = c.peek() {
            let pos = *pos;
            c.advance();
            match c.peek() {
                Some(Token::Number(k, _)) => {
                    let k = *k;
                    c.advance();
                    if k > MAX_EXPONENT {
                        return Err(ParseError {
                            message: format!("exponent exceeds {MAX_EXPONENT}"),
                            position: pos,
                        });
                    }
                    return Ok(poly::pow(self.field, &base, k as usize));
                }
                _ => {
                    return Err(ParseError {
                        message: "expected an integer exponent after '^'".into(),
                        position: pos,
                    })
                }
            }
        }
        Ok(base)
    }

    fn atom(&self, c: &mut Cursor<'_>) -> Result<Poly<F::Elem>, ParseError> {
        match c.peek().cloned() {
            Some(Token::Number(n, pos)) => {
                c.advance();
                let n = i64::try_from(n).map_err(|_| ParseError {
                    message: "integer literal too large".into(),
                    position: pos,
                })?;
                Ok(poly::constant(self.field, self.field.from_i64(n)))
            }
            Some(Token::Var(_)) => {
                c.advance();
                Ok(poly::x(self.field))
            }
            Some(Token::Generator(pos)) => {
                c.advance();
                match &self.generator {
                    Some(gen) => Ok(poly::constant(self.field, gen.clone())),
                    None => Err(ParseError {
                        message: "the generator symbol 'g' is not available here".into(),
                        position: pos,
                    }),
                }
            }
            Some(Token::LParen(pos)) => {
                c.advance();
                let inner = self.expr(c)?;
                match c.peek() {
                    Some(Token::RParen(_)) => {
                        c.advance();
                        Ok(inner)
                    }
                    _ => Err(ParseError {
                        message: "unbalanced parenthesis".into(),
                        position: pos,
                    }),
                }
            }
            Some(tok) => Err(ParseError {
                message: "expected a number, symbol or parenthesis".into(),
                position: tok.pos(),
            }),
            None => Err(ParseError {
                message: "unexpected end of input".into(),
                position: usize::MAX,
            }),
        }
    }
}

struct Cursor<'t> {
    tokens: &'t [Token],
    index: usize,
}

impl<'t> Cursor<'t> {
    fn peek(&self) -> Option<&'t Token> {
        self.tokens.get(self.index)
    }

    fn advance(&mut self) {
        self.index += 1;
    }
}

/// Comma-separated list of nonnegative indices.
pub fn parse_indices(input: &str) -> Result<Vec<usize>, ParseError> {
    let mut out = Vec::new();
    for (i, part) in input.split(',').enumerate() {
        let trimmed = part.trim();
        let value = trimmed.parse::<usize>().map_err(|_| ParseError {
            message: format!("invalid index '{trimmed}'"),
            position: i,
        })?;
        out.push(value);
    }
    Ok(out)
}

/// Comma-separated list of integers.
pub fn parse_integer_list(input: &str) -> Result<Vec<i64>, ParseError> {
    let mut out = Vec::new();
    for (i, part) in input.split(',').enumerate() {
        let trimmed = part.trim();
        let value = trimmed.parse::<i64>().map_err(|_| ParseError {
            message: format!("invalid integer '{trimmed}'"),
            position: i,
        })?;
        out.push(value);
    }
    Ok(out)
}
