//! Text syntax for elements: `coeff*word + coeff*word`, words as
//! whitespace-separated letters, `1` for the unit word, `0` for zero.
//!
//! Letter syntax is supplied per algebra by [`crate::front::Front`].

use std::str::FromStr;

use cha_core::{Element, Scalar, Word};

use crate::front::Front;

/// Syntax error with the character column where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at column {column}: {message}")]
pub struct ParseError {
    pub column: usize,
    pub message: String,
}

/// Byte cursor over the input text.
pub struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    pub fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    pub fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    pub fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    /// Consumes `c` if it is next.
    pub fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(match self.peek() {
                Some(found) => format!("expected '{c}', found '{found}'"),
                None => format!("expected '{c}', found end of input"),
            }))
        }
    }

    /// Consumes the longest run of characters satisfying `pred`.
    pub fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(&pred) {
            self.bump();
        }
        &self.src[start..self.pos]
    }

    pub fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError { column: self.src[..self.pos].chars().count() + 1, message: message.into() }
    }

    pub fn error_at(&self, pos: usize, message: impl Into<String>) -> ParseError {
        ParseError { column: self.src[..pos].chars().count() + 1, message: message.into() }
    }

    pub fn position(&self) -> usize {
        self.pos
    }
}

fn parse_number(cur: &mut Cursor<'_>) -> Result<Scalar, ParseError> {
    let start = cur.position();
    let num = cur.take_while(|c| c.is_ascii_digit());
    if num.is_empty() {
        return Err(cur.error("expected a number"));
    }
    let text = if cur.eat('/') {
        let den = cur.take_while(|c| c.is_ascii_digit());
        if den.is_empty() {
            return Err(cur.error("expected a denominator"));
        }
        format!("{num}/{den}")
    } else {
        num.to_string()
    };
    let value = Scalar::from_str(&text).map_err(|_| cur.error_at(start, format!("invalid number {text:?}")))?;
    Ok(value)
}

fn parse_word<F: Front>(front: &F, cur: &mut Cursor<'_>) -> Result<Word<F::Letter>, ParseError> {
    let mut word = Vec::new();
    let mut factors = 0;
    loop {
        cur.skip_ws();
        match cur.peek() {
            None | Some('+') | Some('-') => break,
            _ => word.extend(front.parse_factor(cur)?),
        }
        factors += 1;
    }
    if factors == 0 {
        return Err(cur.error("expected a word"));
    }
    Ok(word)
}

fn parse_term<F: Front>(front: &F, cur: &mut Cursor<'_>) -> Result<(Word<F::Letter>, Scalar), ParseError> {
    cur.skip_ws();
    let mut sign = Scalar::from_integer(1.into());
    if cur.eat('-') {
        sign = -sign;
        cur.skip_ws();
    }
    if cur.peek().is_some_and(|c| c.is_ascii_digit()) {
        let c = parse_number(cur)?;
        cur.skip_ws();
        if cur.eat('*') {
            cur.skip_ws();
            if cur.peek() == Some('1') {
                cur.bump();
                return Ok((Vec::new(), sign * c));
            }
            let w = parse_word(front, cur)?;
            return Ok((w, sign * c));
        }
        // a bare number is a multiple of the unit word
        return Ok((Vec::new(), sign * c));
    }
    let w = parse_word(front, cur)?;
    Ok((w, sign))
}

/// Parses a linear combination of words.
pub fn parse_expr<F: Front>(front: &F, text: &str) -> Result<Element<F::Letter>, ParseError> {
    let mut cur = Cursor::new(text);
    let mut out = Element::zero();
    let (w, c) = parse_term(front, &mut cur)?;
    out.add_term(w, c);
    loop {
        cur.skip_ws();
        if cur.at_end() {
            break;
        }
        let negate = match cur.bump() {
            Some('+') => false,
            Some('-') => true,
            Some(other) => return Err(cur.error(format!("unexpected '{other}'"))),
            None => unreachable!(),
        };
        let (w, c) = parse_term(front, &mut cur)?;
        out.add_term(w, if negate { -c } else { c });
    }
    Ok(out)
}

/// Parses a single word (no coefficients, no sums).
pub fn parse_word_only<F: Front>(front: &F, text: &str) -> Result<Word<F::Letter>, ParseError> {
    let e = parse_expr(front, text)?;
    let mut terms = e.iter();
    match (terms.next(), terms.next()) {
        (Some((w, c)), None) if c == &Scalar::from_integer(1.into()) => Ok(w.clone()),
        _ => Err(ParseError { column: 1, message: format!("expected a single word, got {e}") }),
    }
}

/// Parses a single letter.
pub fn parse_letter<F: Front>(front: &F, text: &str) -> Result<F::Letter, ParseError> {
    let w = parse_word_only(front, text)?;
    match <[F::Letter; 1]>::try_from(w) {
        Ok([l]) => Ok(l),
        Err(w) => Err(ParseError {
            column: 1,
            message: format!("expected a single letter, got a word of length {}", w.len()),
        }),
    }
}

/// An identifier: a letter or `_` followed by letters, digits, `_` or `'`.
pub fn identifier<'a>(cur: &mut Cursor<'a>) -> Result<&'a str, ParseError> {
    match cur.peek() {
        Some(c) if c.is_alphabetic() || c == '_' => {}
        Some(c) => return Err(cur.error(format!("expected a name, found '{c}'"))),
        None => return Err(cur.error("expected a name, found end of input")),
    }
    Ok(cur.take_while(|c| c.is_alphanumeric() || c == '_' || c == '\''))
}

#[cfg(test)]
mod tests {
    use super::*;
    use cha_core::fdb::{FaaDiBruno, FdbLetter};
    use cha_core::linear::{int, ratio};

    fn v(n: u32) -> FdbLetter {
        FdbLetter::new(n).unwrap()
    }

    #[test]
    fn fdb_expressions() {
        let e = parse_expr(&FaaDiBruno, "2*v1 v1 + v2").unwrap();
        let expected = Element::term(vec![v(1), v(1)], int(2)) + Element::from_letter(v(2));
        assert_eq!(e, expected);
        assert_eq!(parse_expr(&FaaDiBruno, "1").unwrap(), Element::one());
        assert!(parse_expr(&FaaDiBruno, "0").unwrap().is_zero());
        assert_eq!(
            parse_expr(&FaaDiBruno, "-1*1 + 3/2*v2 - v1").unwrap(),
            Element::term(vec![], int(-1)) + Element::term(vec![v(2)], ratio(3, 2)) + Element::term(vec![v(1)], int(-1))
        );
    }

    #[test]
    fn errors_carry_columns() {
        let err = parse_expr(&FaaDiBruno, "v1 + v0").unwrap_err();
        assert_eq!(err.column, 7);
        let err = parse_expr(&FaaDiBruno, "v1 +").unwrap_err();
        assert_eq!(err.column, 5);
        assert!(parse_expr(&FaaDiBruno, "2*").is_err());
        assert!(parse_expr(&FaaDiBruno, "w3").is_err());
    }

    #[test]
    fn single_letters() {
        assert_eq!(parse_letter(&FaaDiBruno, "v4").unwrap(), v(4));
        assert!(parse_letter(&FaaDiBruno, "v1 v2").is_err());
        assert!(parse_letter(&FaaDiBruno, "2*v1").is_err());
    }
}
