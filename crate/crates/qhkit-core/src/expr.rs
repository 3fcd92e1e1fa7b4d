//! Parser for algebra-element expressions in generator names.
//!
//! Grammar:
//! ```text
//! expr  := ['-'] term (('+' | '-') term)*
//! term  := coeff ('*' word)? | word
//! coeff := int | int '/' int
//! word  := factor ('*' factor)*
//! factor:= name ('^' int)?
//! ```
//! Examples: `x + 4*y`, `x^2 - 3*x*y`, `5/2*x^3`, `1`.

use crate::algebra::NcPoly;
use crate::field::FieldSpec;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExprError {
    #[error("unexpected character {0:?} at byte {1}")]
    UnexpectedChar(char, usize),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("empty expression")]
    Empty,
    #[error("malformed number {0:?}")]
    BadNumber(String),
    #[error("zero denominator in coefficient")]
    ZeroDenominator,
    #[error("exponent must be a positive integer")]
    BadExponent,
    #[error("expected {0} at byte {1}")]
    Expected(&'static str, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(i64),
    Name(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn tokenize(text: &str) -> Result<Vec<Token>, ExprError> {
    let mut tokens = Vec::new();
    let bytes: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                tokens.push(Token::Plus);
                i += 1;
            }
            '-' => {
                tokens.push(Token::Minus);
                i += 1;
            }
            '*' => {
                tokens.push(Token::Star);
                i += 1;
            }
            '^' => {
                tokens.push(Token::Caret);
                i += 1;
            }
            '/' => {
                tokens.push(Token::Slash);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = bytes[start..i].iter().collect();
                let v = s.parse().map_err(|_| ExprError::BadNumber(s))?;
                tokens.push(Token::Int(v));
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_alphanumeric() || bytes[i] == '_')
                {
                    i += 1;
                }
                tokens.push(Token::Name(bytes[start..i].iter().collect()));
            }
            _ => return Err(ExprError::UnexpectedChar(c, i)),
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    field: &'a FieldSpec,
    generators: &'a [String],
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn gen_index(&self, name: &str) -> Result<usize, ExprError> {
        self.generators
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| ExprError::UnknownGenerator(name.to_string()))
    }

    /// factor := name ('^' int)?; appends letters to `word`.
    fn factor(&mut self, word: &mut Vec<usize>) -> Result<(), ExprError> {
        let Some(Token::Name(name)) = self.peek().cloned() else {
            return Err(ExprError::Expected("generator name", self.pos));
        };
        self.pos += 1;
        let g = self.gen_index(&name)?;
        let mut power = 1usize;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            match self.peek() {
                Some(&Token::Int(e)) if e >= 1 => {
                    power = e as usize;
                    self.pos += 1;
                }
                _ => return Err(ExprError::BadExponent),
            }
        }
        word.extend(std::iter::repeat(g).take(power));
        Ok(())
    }

    /// term := coeff ('*' word)? | word
    fn term(&mut self, negate: bool) -> Result<(crate::field::Scalar, Vec<usize>), ExprError> {
        let f = self.field;
        let mut coeff = f.one();
        let mut word = Vec::new();
        match self.peek().cloned() {
            Some(Token::Int(n)) => {
                self.pos += 1;
                let mut num = n;
                let mut den = 1i64;
                if self.peek() == Some(&Token::Slash) {
                    self.pos += 1;
                    match self.peek() {
                        Some(&Token::Int(d)) if d != 0 => {
                            den = d;
                            self.pos += 1;
                        }
                        Some(&Token::Int(_)) => return Err(ExprError::ZeroDenominator),
                        _ => return Err(ExprError::Expected("denominator", self.pos)),
                    }
                }
                if negate {
                    num = -num;
                }
                coeff = f.fraction(num, den);
                if self.peek() == Some(&Token::Star) {
                    self.pos += 1;
                    self.factor(&mut word)?;
                    while self.peek() == Some(&Token::Star) {
                        self.pos += 1;
                        self.factor(&mut word)?;
                    }
                }
            }
            Some(Token::Name(_)) => {
                if negate {
                    coeff = f.from_i64(-1);
                }
                self.factor(&mut word)?;
                while self.peek() == Some(&Token::Star) {
                    self.pos += 1;
                    self.factor(&mut word)?;
                }
            }
            _ => return Err(ExprError::Expected("term", self.pos)),
        }
        Ok((coeff, word))
    }

    fn expr(&mut self) -> Result<NcPoly, ExprError> {
        let mut terms = Vec::new();
        let negate = if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        terms.push(self.term(negate)?);
        while let Some(tok) = self.peek().cloned() {
            let negate = match tok {
                Token::Plus => false,
                Token::Minus => true,
                _ => return Err(ExprError::Expected("'+' or '-'", self.pos)),
            };
            self.pos += 1;
            terms.push(self.term(negate)?);
        }
        Ok(NcPoly { terms })
    }
}

/// Parse an expression over the named generators into a polynomial.
pub fn parse_expression(
    text: &str,
    generators: &[String],
    field: &FieldSpec,
) -> Result<NcPoly, ExprError> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(ExprError::Empty);
    }
    let mut parser = Parser {
        tokens,
        pos: 0,
        field,
        generators,
    };
    parser.expr()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens() -> Vec<String> {
        vec!["x".to_string(), "y".to_string()]
    }

    #[test]
    fn parses_the_grammar() {
        let f = FieldSpec::Rationals;
        let p = parse_expression("x + 4*y", &gens(), &f).unwrap();
        assert_eq!(p.terms.len(), 2);
        assert_eq!(p.terms[0], (f.one(), vec![0]));
        assert_eq!(p.terms[1], (f.from_i64(4), vec![1]));

        let p = parse_expression("x^2 - 3*x*y", &gens(), &f).unwrap();
        assert_eq!(p.terms[0], (f.one(), vec![0, 0]));
        assert_eq!(p.terms[1], (f.from_i64(-3), vec![0, 1]));

        let p = parse_expression("5/2*x^3", &gens(), &f).unwrap();
        assert_eq!(p.terms[0], (f.fraction(5, 2), vec![0, 0, 0]));

        let p = parse_expression("1", &gens(), &f).unwrap();
        assert_eq!(p.terms[0], (f.one(), Vec::new()));

        let p = parse_expression("-x + 1", &gens(), &f).unwrap();
        assert_eq!(p.terms[0], (f.from_i64(-1), vec![0]));
        assert_eq!(p.terms[1], (f.one(), Vec::new()));
    }

    #[test]
    fn parses_over_prime_fields() {
        let f = FieldSpec::prime_field(13).unwrap();
        let p = parse_expression("x + 4*y", &gens(), &f).unwrap();
        assert_eq!(p.terms[1].0, f.from_i64(4));
        // 1/2 = 7 mod 13.
        let p = parse_expression("1/2*x", &gens(), &f).unwrap();
        assert_eq!(p.terms[0].0, f.from_i64(7));
    }

    #[test]
    fn rejects_malformed_input() {
        let f = FieldSpec::Rationals;
        assert_eq!(
            parse_expression("z", &gens(), &f),
            Err(ExprError::UnknownGenerator("z".into()))
        );
        assert!(parse_expression("", &gens(), &f).is_err());
        assert!(parse_expression("x +", &gens(), &f).is_err());
        assert!(parse_expression("x^0", &gens(), &f).is_err());
        assert!(parse_expression("1/0", &gens(), &f).is_err());
        assert!(parse_expression("x ? y", &gens(), &f).is_err());
    }

    #[test]
    fn round_trips_through_render() {
        let f = FieldSpec::Rationals;
        let g = gens();
        for text in ["x + 4*y", "x^2 - 3*x*y", "5/2*x^3", "1", "x^2*y - y"] {
            let p = parse_expression(text, &g, &f).unwrap();
            let rendered = p.render(&f, &g);
            let reparsed = parse_expression(&rendered, &g, &f).unwrap();
            assert_eq!(p, reparsed, "render of {text:?} was {rendered:?}");
        }
    }
}
