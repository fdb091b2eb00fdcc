//! Parser for the term s-expression syntax:
//!
//! ```text
//! term := gen(NAME) | id([NAME,...]) | perm([NAME,...],[INT,...])
//!       | comp(term,term) | ten(term,term)
//! ```

use crate::error::{Error, Result};
use crate::fssmc::{ObjectWord, Term};

/// Nesting limit; deeper inputs are rejected rather than risking the stack.
pub const MAX_DEPTH: usize = 256;

pub fn parse_term(text: &str) -> Result<Term> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        line: 1,
        column: 1,
    };
    let term = p.term(0)?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error("trailing input after term"));
    }
    Ok(term)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    column: usize,
}

fn is_name_char(c: char) -> bool {
    !c.is_whitespace() && !matches!(c, '(' | ')' | '[' | ']' | ',' | '"')
}

impl Parser {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected `{want}`, found `{c}`"))),
            None => Err(self.error(format!("expected `{want}`, found end of input"))),
        }
    }

    fn name(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(is_name_char) {
            self.bump();
        }
        if self.pos == start {
            return Err(self.error("expected a name"));
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn list<T>(&mut self, mut item: impl FnMut(&mut Self) -> Result<T>) -> Result<Vec<T>> {
        self.expect('[')?;
        let mut out = Vec::new();
        self.skip_ws();
        if self.peek() == Some(']') {
            self.bump();
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            self.skip_ws();
            match self.bump() {
                Some(',') => continue,
                Some(']') => return Ok(out),
                _ => return Err(self.error("expected `,` or `]` in list")),
            }
        }
    }

    fn index(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits
            .parse()
            .map_err(|_| self.error("expected a permutation index"))
    }

    fn term(&mut self, depth: usize) -> Result<Term> {
        if depth > MAX_DEPTH {
            return Err(self.error(format!("term nested deeper than {MAX_DEPTH}")));
        }
        self.skip_ws();
        let (line, column) = (self.line, self.column);
        let head = self.name()?;
        if !matches!(head.as_str(), "gen" | "id" | "perm" | "comp" | "ten") {
            return Err(Error::Parse {
                line,
                column,
                message: format!("unknown constructor `{head}`"),
            });
        }
        self.expect('(')?;
        let term = match head.as_str() {
            "gen" => Term::Gen(self.name()?),
            "id" => Term::Id(ObjectWord(self.list(Self::name)?)),
            "perm" => {
                let word = ObjectWord(self.list(Self::name)?);
                self.expect(',')?;
                let p = self.list(Self::index)?;
                Term::Perm(word, p)
            }
            "comp" | "ten" => {
                let a = self.term(depth + 1)?;
                self.expect(',')?;
                let b = self.term(depth + 1)?;
                if head == "comp" {
                    a.comp(b)
                } else {
                    a.ten(b)
                }
            }
            _ => unreachable!("constructor checked above"),
        };
        self.expect(')')?;
        Ok(term)
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::testing::{arb_term_over, word};

    #[test]
    fn parses_each_constructor() {
        assert_eq!(parse_term("gen(g)").unwrap(), Term::gen("g"));
        assert_eq!(parse_term(" id( [A, B] ) ").unwrap(), Term::id(word("A B")));
        assert_eq!(parse_term("id([])").unwrap(), Term::id(word("")));
        assert_eq!(
            parse_term("perm([A,B],[1,0])").unwrap(),
            Term::Perm(word("A B"), vec![1, 0])
        );
        assert_eq!(
            parse_term("comp(ten(gen(g),gen(h)),ten(gen(k),id([F])))").unwrap(),
            Term::gen("g")
                .ten(Term::gen("h"))
                .comp(Term::gen("k").ten(Term::id(word("F"))))
        );
        assert_eq!(parse_term("gen(g;k)").unwrap(), Term::gen("g;k"));
    }

    #[test]
    fn errors_carry_positions() {
        match parse_term("comp(gen(g),\n  bogus(x))") {
            Err(Error::Parse {
                line,
                column,
                message,
            }) => {
                assert_eq!(line, 2);
                assert_eq!(column, 3);
                assert!(message.contains("bogus"));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_term("gen(g) x"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_term("perm([A],[x])"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(parse_term(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn depth_is_limited() {
        let deep = "comp(".repeat(MAX_DEPTH + 2) + "gen(a)";
        assert!(matches!(parse_term(&deep), Err(Error::Parse { .. })));
    }

    proptest! {
        #[test]
        fn display_round_trips((_, t) in arb_term_over()) {
            prop_assert_eq!(parse_term(&t.to_string()).unwrap(), t);
        }

        #[test]
        fn never_panics(s in "\\PC{0,64}") {
            let _ = parse_term(&s);
        }
    }
}
