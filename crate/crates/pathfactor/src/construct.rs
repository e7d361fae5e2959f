//! Tiny expression language for building graphs out of complete graphs,
//! paths, cycles, coronas, disjoint unions and joins.
//!
//! Grammar (whitespace is ignored):
//!
//! ```text
//! expr  := union ("+" union)*          join
//! union := term ("|" term)*            disjoint union
//! term  := [int "*"] atom | "(" expr ")"
//! atom  := "K" int | "P" int | "C" int | "corona(" expr ")"
//! ```
//!
//! `3*K1` is three isolated vertices; `K3+(3*K1|K2)` joins a triangle to
//! three isolated vertices plus one edge.

use thiserror::Error;

use crate::graph::{Graph, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("zero-order atom at position {position}")]
    ZeroOrderAtom { position: usize },
    #[error("graph too large at position {position}: order {order} exceeds {MAX_ORDER}")]
    TooLarge { position: usize, order: usize },
}

pub fn parse_construction(expr: &str) -> Result<Graph, ParseError> {
    let mut p = Parser {
        chars: expr.char_indices().collect(),
        pos: 0,
    };
    let g = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(g)
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl Parser {
    fn error(&self, message: &str) -> ParseError {
        ParseError::Syntax {
            position: self.byte_pos(),
            message: message.to_string(),
        }
    }

    fn byte_pos(&self) -> usize {
        self.chars
            .get(self.pos)
            .map(|&(b, _)| b)
            .unwrap_or_else(|| self.chars.last().map(|&(b, c)| b + c.len_utf8()).unwrap_or(0))
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
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
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn integer(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an integer"));
        }
        let text: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        text.parse::<usize>().map_err(|_| ParseError::Syntax {
            position: self.chars[start].0,
            message: "integer out of range".to_string(),
        })
    }

    fn expr(&mut self) -> Result<Graph, ParseError> {
        let mut g = self.union()?;
        while self.eat('+') {
            let rhs = self.union()?;
            self.check_order(g.order() + rhs.order())?;
            g = g.join(&rhs);
        }
        Ok(g)
    }

    fn union(&mut self) -> Result<Graph, ParseError> {
        let mut g = self.term()?;
        while self.eat('|') {
            let rhs = self.term()?;
            self.check_order(g.order() + rhs.order())?;
            g = g.disjoint_union(&rhs);
        }
        Ok(g)
    }

    fn term(&mut self) -> Result<Graph, ParseError> {
        self.skip_ws();
        if self.eat('(') {
            let g = self.expr()?;
            self.expect(')')?;
            return Ok(g);
        }
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            let at = self.byte_pos();
            let count = self.integer()?;
            if count == 0 {
                return Err(ParseError::Syntax {
                    position: at,
                    message: "multiplier must be at least 1".to_string(),
                });
            }
            self.expect('*')?;
            let atom = self.atom()?;
            self.check_order(count * atom.order())?;
            let mut g = atom.clone();
            for _ in 1..count {
                g = g.disjoint_union(&atom);
            }
            return Ok(g);
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Graph, ParseError> {
        self.skip_ws();
        let at = self.byte_pos();
        match self.peek() {
            Some('K') => {
                self.pos += 1;
                let n = self.sized_atom_order(at)?;
                Ok(Graph::complete(n))
            }
            Some('P') => {
                self.pos += 1;
                let n = self.sized_atom_order(at)?;
                Ok(Graph::path(n))
            }
            Some('C') => {
                self.pos += 1;
                let n = self.sized_atom_order(at)?;
                if n < 3 {
                    return Err(ParseError::Syntax {
                        position: at,
                        message: format!("cycle needs at least 3 vertices, got {n}"),
                    });
                }
                Ok(Graph::cycle(n))
            }
            Some('c') => {
                for expected in "corona".chars() {
                    if self.peek() != Some(expected) {
                        return Err(self.error("expected 'corona'"));
                    }
                    self.pos += 1;
                }
                self.expect('(')?;
                let inner = self.expr()?;
                self.expect(')')?;
                if inner.order() == 0 {
                    return Err(ParseError::ZeroOrderAtom { position: at });
                }
                self.check_order(2 * inner.order())?;
                Ok(inner.corona().expect("non-empty base"))
            }
            _ => Err(self.error("expected an atom (K/P/C/corona)")),
        }
    }

    fn sized_atom_order(&mut self, at: usize) -> Result<usize, ParseError> {
        let n = self.integer()?;
        if n == 0 {
            return Err(ParseError::ZeroOrderAtom { position: at });
        }
        self.check_order(n)?;
        Ok(n)
    }

    fn check_order(&self, order: usize) -> Result<(), ParseError> {
        if order > MAX_ORDER {
            Err(ParseError::TooLarge {
                position: self.byte_pos(),
                order,
            })
        } else {
            Ok(())
        }
    }
}
