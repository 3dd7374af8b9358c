//! The group-expression language.
//!
//! ```text
//! expr := term ('x' term)*
//! term := atom | '(' expr ')'
//! atom := NAME '(' int-list ')' | 'Perm' '[' perm (',' perm)* ']' | 'cex3'
//! perm := '(' ')' | cycle+
//! ```
//!
//! Whitespace is ignored between tokens. `Q(n)` is read as `Dic(n/4)`, so
//! printing a parsed `Q(8)` gives `Dic(2)`.

use std::fmt;

use sotype_core::ClassicalFamily;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Atom {
    Cyclic(u64),
    Dihedral(u64),
    Dicyclic(u64),
    Symmetric(u64),
    Alternating(u64),
    Frobenius {
        m: u64,
        n: u64,
        k: u64,
    },
    Classical {
        family: ClassicalFamily,
        n: u64,
        q: u64,
    },
    Cex3,
    /// Generators as lists of 1-indexed cycles.
    Perm(Vec<Vec<Vec<u64>>>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupExpr {
    Atom(Atom),
    Product(Box<GroupExpr>, Box<GroupExpr>),
}

impl GroupExpr {
    pub fn product(left: GroupExpr, right: GroupExpr) -> Self {
        GroupExpr::Product(Box::new(left), Box::new(right))
    }

    /// The atoms from left to right.
    pub fn atoms(&self) -> Vec<&Atom> {
        match self {
            GroupExpr::Atom(a) => vec![a],
            GroupExpr::Product(l, r) => {
                let mut out = l.atoms();
                out.extend(r.atoms());
                out
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: expected {}, found {found}", .expected.join(" or "))]
    Syntax {
        offset: usize,
        expected: Vec<String>,
        found: String,
    },

    #[error("unknown group family `{name}` at byte {offset}")]
    UnknownFamily { offset: usize, name: String },

    #[error("{family} takes {expected} parameter(s), got {found} (at byte {offset})")]
    Arity {
        offset: usize,
        family: String,
        expected: usize,
        found: usize,
    },

    #[error("bad parameter at byte {offset}: {message}")]
    Parameter { offset: usize, message: String },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. }
            | ParseError::UnknownFamily { offset, .. }
            | ParseError::Arity { offset, .. }
            | ParseError::Parameter { offset, .. } => *offset,
        }
    }
}

pub fn parse_expr(text: &str) -> Result<GroupExpr, ParseError> {
    let mut p = Parser { src: text, pos: 0 };
    let expr = p.expr()?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(p.syntax(&["'x'", "end of input"]));
    }
    Ok(expr)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn syntax(&self, expected: &[&str]) -> ParseError {
        let found = match self.rest().chars().next() {
            Some(c) => format!("'{c}'"),
            None => "end of input".to_string(),
        };
        ParseError::Syntax {
            offset: self.pos,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found,
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.syntax(&[&format!("'{c}'")]))
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<GroupExpr, ParseError> {
        let mut left = self.term()?;
        // The multiplication sign may be glued to the next name, as in
        // `C(7)xC(3)`, so it is matched as a single character.
        while self.eat('x') || self.eat('×') {
            let right = self.term()?;
            left = GroupExpr::product(left, right);
        }
        Ok(left)
    }

    fn term(&mut self) -> Result<GroupExpr, ParseError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.syntax(&["'x'", "')'"]));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_alphabetic() => Ok(GroupExpr::Atom(self.atom()?)),
            _ => Err(self.syntax(&["group name", "'('"])),
        }
    }

    fn ident(&mut self) -> &'a str {
        self.skip_ws();
        let rest = self.rest();
        let len = rest
            .find(|c: char| !c.is_ascii_alphanumeric())
            .unwrap_or(rest.len());
        self.pos += len;
        &rest[..len]
    }

    fn int(&mut self) -> Result<(usize, u64), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let rest = self.rest();
        let len = rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len());
        if len == 0 {
            return Err(self.syntax(&["integer"]));
        }
        let value = rest[..len].parse().map_err(|_| ParseError::Parameter {
            offset: start,
            message: format!("{} does not fit in 64 bits", &rest[..len]),
        })?;
        self.pos += len;
        Ok((start, value))
    }

    fn int_list(&mut self) -> Result<Vec<(usize, u64)>, ParseError> {
        self.expect('(')?;
        let mut out = Vec::new();
        if self.eat(')') {
            return Ok(out);
        }
        loop {
            out.push(self.int()?);
            if self.eat(')') {
                return Ok(out);
            }
            if !self.eat(',') {
                return Err(self.syntax(&["','", "')'"]));
            }
        }
    }

    fn atom(&mut self) -> Result<Atom, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let name = self.ident();
        let arity = |n: usize| (name, n);
        let (family, expected) = match name {
            "C" | "D" | "Dic" | "Q" | "S" | "A" => arity(1),
            "F" => arity(3),
            "SL" | "PSL" | "SU" | "PSU" => arity(2),
            "cex3" => {
                // Bare or with an empty parameter list.
                if self.peek() == Some('(') {
                    let params = self.int_list()?;
                    if !params.is_empty() {
                        return Err(ParseError::Arity {
                            offset: start,
                            family: name.to_string(),
                            expected: 0,
                            found: params.len(),
                        });
                    }
                }
                return Ok(Atom::Cex3);
            }
            "Perm" => return self.perm_list(),
            _ => {
                return Err(ParseError::UnknownFamily {
                    offset: start,
                    name: name.to_string(),
                })
            }
        };
        let params = self.int_list()?;
        if params.len() != expected {
            return Err(ParseError::Arity {
                offset: start,
                family: family.to_string(),
                expected,
                found: params.len(),
            });
        }
        let v: Vec<u64> = params.iter().map(|&(_, v)| v).collect();
        Ok(match family {
            "C" => Atom::Cyclic(v[0]),
            "D" => Atom::Dihedral(v[0]),
            "Dic" => Atom::Dicyclic(v[0]),
            "Q" => {
                if v[0] == 0 || v[0] % 4 != 0 {
                    return Err(ParseError::Parameter {
                        offset: params[0].0,
                        message: format!("Q(n) needs n divisible by 4, got {}", v[0]),
                    });
                }
                Atom::Dicyclic(v[0] / 4)
            }
            "S" => Atom::Symmetric(v[0]),
            "A" => Atom::Alternating(v[0]),
            "F" => Atom::Frobenius {
                m: v[0],
                n: v[1],
                k: v[2],
            },
            _ => Atom::Classical {
                family: family.parse().expect("name matched above"),
                n: v[0],
                q: v[1],
            },
        })
    }

    fn perm_list(&mut self) -> Result<Atom, ParseError> {
        self.expect('[')?;
        let mut perms = vec![self.perm()?];
        while self.eat(',') {
            perms.push(self.perm()?);
        }
        if !self.eat(']') {
            return Err(self.syntax(&["','", "']'"]));
        }
        Ok(Atom::Perm(perms))
    }

    fn perm(&mut self) -> Result<Vec<Vec<u64>>, ParseError> {
        let mut cycles = Vec::new();
        while self.peek() == Some('(') {
            let cycle = self.int_list()?;
            if let Some(&(offset, _)) = cycle.iter().find(|&&(_, v)| v == 0) {
                return Err(ParseError::Parameter {
                    offset,
                    message: "points are numbered from 1".into(),
                });
            }
            if !cycle.is_empty() {
                cycles.push(cycle.into_iter().map(|(_, v)| v).collect());
            } else if !cycles.is_empty() {
                return Err(self.syntax(&["integer"]));
            } else {
                // `()` is the identity and stands alone.
                return Ok(cycles);
            }
        }
        if cycles.is_empty() {
            return Err(self.syntax(&["'('"]));
        }
        Ok(cycles)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Cyclic(n) => write!(f, "C({n})"),
            Atom::Dihedral(n) => write!(f, "D({n})"),
            Atom::Dicyclic(n) => write!(f, "Dic({n})"),
            Atom::Symmetric(n) => write!(f, "S({n})"),
            Atom::Alternating(n) => write!(f, "A({n})"),
            Atom::Frobenius { m, n, k } => write!(f, "F({m},{n},{k})"),
            Atom::Classical { family, n, q } => write!(f, "{family}({n},{q})"),
            Atom::Cex3 => f.write_str("cex3"),
            Atom::Perm(perms) => {
                f.write_str("Perm[")?;
                for (i, cycles) in perms.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    if cycles.is_empty() {
                        f.write_str("()")?;
                    }
                    for c in cycles {
                        let pts: Vec<String> = c.iter().map(u64::to_string).collect();
                        write!(f, "({})", pts.join(","))?;
                    }
                }
                f.write_str("]")
            }
        }
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Atom(a) => write!(f, "{a}"),
            GroupExpr::Product(l, r) => match **r {
                GroupExpr::Product(..) => write!(f, "{l} x ({r})"),
                GroupExpr::Atom(_) => write!(f, "{l} x {r}"),
            },
        }
    }
}
