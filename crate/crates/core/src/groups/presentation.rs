//! Words in group generators, e.g. `RST = R^2 = S^3 = T^5` or `(RS)^2`.
//!
//! A relation is a chain of words separated by `=`; it holds when every word
//! in the chain evaluates to the same element. `1` denotes the identity and
//! exponents may be negative.

use std::collections::HashMap;

use super::finite::FiniteGroup;
use crate::error::{Error, Result};

/// True iff every chained relation holds under `assignment`.
pub fn verify_presentation(
    group: &FiniteGroup,
    assignment: &HashMap<char, usize>,
    relations: &[&str],
) -> Result<bool> {
    for relation in relations {
        let mut values = relation
            .split('=')
            .map(|word| evaluate_word(group, assignment, word));
        let first = values
            .next()
            .ok_or_else(|| Error::Parse(format!("empty relation {relation:?}")))??;
        for value in values {
            if value? != first {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Element represented by a single word.
pub fn evaluate_word(
    group: &FiniteGroup,
    assignment: &HashMap<char, usize>,
    word: &str,
) -> Result<usize> {
    let chars: Vec<char> = word.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(Error::Parse(format!("empty word in {word:?}")));
    }
    let mut parser = WordParser {
        group,
        assignment,
        chars: &chars,
        pos: 0,
    };
    let value = parser.word()?;
    if parser.pos != chars.len() {
        return Err(Error::Parse(format!(
            "unexpected {:?} in {word:?}",
            chars[parser.pos]
        )));
    }
    Ok(value)
}

struct WordParser<'a> {
    group: &'a FiniteGroup,
    assignment: &'a HashMap<char, usize>,
    chars: &'a [char],
    pos: usize,
}

impl WordParser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn word(&mut self) -> Result<usize> {
        let mut acc = 0;
        while let Some(c) = self.peek() {
            if c == ')' {
                break;
            }
            let term = self.term()?;
            acc = self.group.mul(acc, term);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<usize> {
        let c = self.peek().expect("caller checked");
        self.pos += 1;
        let base = match c {
            '1' => 0,
            '(' => {
                let inner = self.word()?;
                if self.peek() != Some(')') {
                    return Err(Error::Parse("unbalanced parenthesis".into()));
                }
                self.pos += 1;
                inner
            }
            c if c.is_alphabetic() => *self
                .assignment
                .get(&c)
                .ok_or_else(|| Error::Parse(format!("unassigned symbol {c:?}")))?,
            c => return Err(Error::Parse(format!("unexpected {c:?}"))),
        };
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let start = self.pos;
        if self.peek() == Some('-') {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        let exp: i64 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad exponent {digits:?}")))?;
        Ok(self.group.pow(base, exp))
    }
}
