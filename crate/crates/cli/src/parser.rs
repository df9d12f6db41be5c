//! Expression parser for the command line.
//!
//! Grammar: atoms `h[...]`, `ht[...]`, `s[...]`, `st[...]`, `p[...]`,
//! integer literals, `*` for the ordinary product, `@` for the Kronecker
//! product, parentheses; `*` binds tighter than `@`; whitespace is
//! insignificant.

use charbasis::error::{Error, Result};
use charbasis::partition::Partition;
use charbasis::symfunc::BasisTag;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Atom(BasisTag, Partition),
    IntegerLiteral(i64),
    Scale(i64, Box<Expr>),
    Product(Vec<Expr>),
    Kronecker(Box<Expr>, Box<Expr>),
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Basis(BasisTag),
    Int(i64),
    Star,
    At,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
}

struct Lexer<'a> {
    text: &'a [u8],
    pos: usize,
}

fn err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

impl<'a> Lexer<'a> {
    fn tokenize(text: &'a str) -> Result<Vec<(usize, Token)>> {
        let mut lexer = Lexer {
            text: text.as_bytes(),
            pos: 0,
        };
        let mut tokens = Vec::new();
        while let Some((pos, tok)) = lexer.next_token()? {
            tokens.push((pos, tok));
        }
        Ok(tokens)
    }

    fn next_token(&mut self) -> Result<Option<(usize, Token)>> {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos >= self.text.len() {
            return Ok(None);
        }
        let start = self.pos;
        let c = self.text[start];
        let token = match c {
            b'*' => {
                self.pos += 1;
                Token::Star
            }
            b'@' => {
                self.pos += 1;
                Token::At
            }
            b'(' => {
                self.pos += 1;
                Token::LParen
            }
            b')' => {
                self.pos += 1;
                Token::RParen
            }
            b'[' => {
                self.pos += 1;
                Token::LBracket
            }
            b']' => {
                self.pos += 1;
                Token::RBracket
            }
            b',' => {
                self.pos += 1;
                Token::Comma
            }
            b'0'..=b'9' => {
                let mut end = start;
                while end < self.text.len() && self.text[end].is_ascii_digit() {
                    end += 1;
                }
                let digits = std::str::from_utf8(&self.text[start..end]).unwrap();
                self.pos = end;
                Token::Int(
                    digits
                        .parse::<i64>()
                        .map_err(|_| err(start, format!("integer {} out of range", digits)))?,
                )
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                let mut end = start;
                while end < self.text.len() && self.text[end].is_ascii_alphabetic() {
                    end += 1;
                }
                let word = std::str::from_utf8(&self.text[start..end]).unwrap();
                self.pos = end;
                match BasisTag::parse(word) {
                    Some(basis) => Token::Basis(basis),
                    None => {
                        return Err(err(
                            start,
                            format!("unknown basis {:?} (expected h, ht, s, st or p)", word),
                        ))
                    }
                }
            }
            other => {
                return Err(err(start, format!("unexpected character {:?}", other as char)))
            }
        };
        Ok(Some((start, token)))
    }
}

pub fn parse_expr(text: &str) -> Result<Expr> {
    let tokens = Lexer::tokenize(text)?;
    let mut parser = Parser {
        tokens,
        index: 0,
        end: text.len(),
    };
    let expr = parser.parse_kronecker()?;
    if let Some((pos, _)) = parser.peek() {
        return Err(err(pos, "trailing input"));
    }
    Ok(expr)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    index: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<(usize, Token)> {
        self.tokens.get(self.index).cloned()
    }

    fn advance(&mut self) -> Option<(usize, Token)> {
        let tok = self.tokens.get(self.index).cloned();
        if tok.is_some() {
            self.index += 1;
        }
        tok
    }

    fn expect(&mut self, token: Token, what: &str) -> Result<usize> {
        match self.advance() {
            Some((pos, tok)) if tok == token => Ok(pos),
            Some((pos, tok)) => Err(err(pos, format!("expected {}, found {:?}", what, tok))),
            None => Err(err(self.end, format!("expected {}, found end of input", what))),
        }
    }

    /// kron := product ('@' product)*, left associative.
    fn parse_kronecker(&mut self) -> Result<Expr> {
        let mut left = self.parse_product()?;
        while matches!(self.peek(), Some((_, Token::At))) {
            self.advance();
            let right = self.parse_product()?;
            left = Expr::Kronecker(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    /// product := factor ('*' factor)*; integer literals in a product with
    /// other factors fold into a Scale node.
    fn parse_product(&mut self) -> Result<Expr> {
        let start = match self.peek() {
            Some((pos, _)) => pos,
            None => self.end,
        };
        let mut factors = vec![self.parse_factor()?];
        while matches!(self.peek(), Some((_, Token::Star))) {
            self.advance();
            factors.push(self.parse_factor()?);
        }
        if factors.len() == 1 {
            return Ok(factors.pop().unwrap());
        }
        let mut scale = 1i64;
        let mut rest = Vec::new();
        for factor in factors {
            match factor {
                Expr::IntegerLiteral(n) => {
                    scale = scale
                        .checked_mul(n)
                        .ok_or_else(|| err(start, "integer product overflows"))?;
                }
                other => rest.push(other),
            }
        }
        let body = match rest.len() {
            0 => return Ok(Expr::IntegerLiteral(scale)),
            1 => rest.pop().unwrap(),
            _ => Expr::Product(rest),
        };
        if scale == 1 {
            Ok(body)
        } else {
            Ok(Expr::Scale(scale, Box::new(body)))
        }
    }

    fn parse_factor(&mut self) -> Result<Expr> {
        match self.advance() {
            Some((_, Token::Int(n))) => Ok(Expr::IntegerLiteral(n)),
            Some((pos, Token::Basis(basis))) => {
                self.expect(Token::LBracket, "'['")?;
                let mut parts = Vec::new();
                if matches!(self.peek(), Some((_, Token::RBracket))) {
                    self.advance();
                } else {
                    loop {
                        match self.advance() {
                            Some((p, Token::Int(n))) => {
                                let part = u32::try_from(n)
                                    .ok()
                                    .filter(|&x| x > 0)
                                    .ok_or_else(|| err(p, "partition parts are positive"))?;
                                parts.push(part);
                            }
                            Some((p, tok)) => {
                                return Err(err(p, format!("expected a part, found {:?}", tok)))
                            }
                            None => return Err(err(self.end, "expected a part")),
                        }
                        match self.advance() {
                            Some((_, Token::Comma)) => continue,
                            Some((_, Token::RBracket)) => break,
                            Some((p, tok)) => {
                                return Err(err(
                                    p,
                                    format!("expected ',' or ']', found {:?}", tok),
                                ))
                            }
                            None => return Err(err(self.end, "expected ',' or ']'")),
                        }
                    }
                }
                let partition = Partition::from_parts(parts)
                    .map_err(|e| err(pos, format!("invalid index: {}", e)))?;
                Ok(Expr::Atom(basis, partition))
            }
            Some((_, Token::LParen)) => {
                let inner = self.parse_kronecker()?;
                self.expect(Token::RParen, "')'")?;
                Ok(inner)
            }
            Some((pos, tok)) => Err(err(pos, format!("expected a factor, found {:?}", tok))),
            None => Err(err(self.end, "expected a factor, found end of input")),
        }
    }
}
