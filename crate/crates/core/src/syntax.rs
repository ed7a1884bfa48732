//! Concrete concept syntax.
//!
//! ```text
//! concept := "top" | "bot" | name | "not" concept
//!          | "(" concept ("and" concept)+ ")" | "(" concept ("or" concept)+ ")"
//!          | "exists" role "." concept | "forall" role "." concept
//! name, role := [A-Za-z][A-Za-z0-9_]*
//! ```
//!
//! The parser is more permissive than the printer: `and`/`or` chains may appear
//! without enclosing parentheses (`and` binds tighter than `or`, quantifiers and
//! `not` bind tighter than both) and any concept may be parenthesized. The
//! symbols `⊤ ⊥ ¬ ⊓ ⊔ ∃ ∀` are accepted as aliases for the keywords. The
//! printer always emits the fully parenthesized ASCII form.

use std::fmt;
use std::str::FromStr;

use crate::concept::Concept;
use crate::error::{Error, Result};
use crate::signature::Signature;

pub(crate) const KEYWORDS: [&str; 7] = ["top", "bot", "not", "and", "or", "exists", "forall"];

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Ident(String),
    Top,
    Bot,
    Not,
    And,
    Or,
    Exists,
    Forall,
    LParen,
    RParen,
    Dot,
    End,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Ident(name) => format!("`{name}`"),
            Token::Top => "`top`".into(),
            Token::Bot => "`bot`".into(),
            Token::Not => "`not`".into(),
            Token::And => "`and`".into(),
            Token::Or => "`or`".into(),
            Token::Exists => "`exists`".into(),
            Token::Forall => "`forall`".into(),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
            Token::Dot => "`.`".into(),
            Token::End => "end of input".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let mut tokens = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, ch)) = chars.peek() {
        if ch.is_whitespace() {
            chars.next();
            continue;
        }
        if ch.is_ascii_alphabetic() {
            let mut end = pos;
            while let Some(&(i, c)) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    end = i + c.len_utf8();
                    chars.next();
                } else {
                    break;
                }
            }
            let word = &text[pos..end];
            let token = match word {
                "top" => Token::Top,
                "bot" => Token::Bot,
                "not" => Token::Not,
                "and" => Token::And,
                "or" => Token::Or,
                "exists" => Token::Exists,
                "forall" => Token::Forall,
                _ => Token::Ident(word.to_owned()),
            };
            tokens.push((pos, token));
            continue;
        }
        let token = match ch {
            '(' => Token::LParen,
            ')' => Token::RParen,
            '.' => Token::Dot,
            '⊤' => Token::Top,
            '⊥' => Token::Bot,
            '¬' => Token::Not,
            '⊓' => Token::And,
            '⊔' => Token::Or,
            '∃' => Token::Exists,
            '∀' => Token::Forall,
            other => {
                return Err(Error::Syntax {
                    position: pos,
                    expected: vec!["a concept".into()],
                    found: format!("`{other}`"),
                })
            }
        };
        chars.next();
        tokens.push((pos, token));
    }
    tokens.push((text.len(), Token::End));
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    cursor: usize,
    sig: Option<&'a Signature>,
}

impl Parser<'_> {
    fn peek(&self) -> &Token {
        &self.tokens[self.cursor].1
    }

    fn position(&self) -> usize {
        self.tokens[self.cursor].0
    }

    fn bump(&mut self) -> Token {
        let token = self.tokens[self.cursor].1.clone();
        if token != Token::End {
            self.cursor += 1;
        }
        token
    }

    fn error(&self, expected: &[&str]) -> Error {
        Error::Syntax {
            position: self.position(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().describe(),
        }
    }

    fn expect(&mut self, token: Token, describe: &str) -> Result<()> {
        if *self.peek() == token {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[describe]))
        }
    }

    fn disjunction(&mut self) -> Result<Concept> {
        let mut items = vec![self.conjunction()?];
        while *self.peek() == Token::Or {
            self.bump();
            items.push(self.conjunction()?);
        }
        Ok(if items.len() == 1 {
            items.pop().unwrap()
        } else {
            Concept::Or(items)
        })
    }

    fn conjunction(&mut self) -> Result<Concept> {
        let mut items = vec![self.unary()?];
        while *self.peek() == Token::And {
            self.bump();
            items.push(self.unary()?);
        }
        Ok(if items.len() == 1 {
            items.pop().unwrap()
        } else {
            Concept::And(items)
        })
    }

    fn unary(&mut self) -> Result<Concept> {
        match self.peek().clone() {
            Token::Not => {
                self.bump();
                Ok(Concept::not(self.unary()?))
            }
            Token::Exists | Token::Forall => {
                let quantifier = self.bump();
                let role = self.role()?;
                self.expect(Token::Dot, "`.`")?;
                let filler = self.unary()?;
                Ok(if quantifier == Token::Exists {
                    Concept::exists(role, filler)
                } else {
                    Concept::forall(role, filler)
                })
            }
            _ => self.atom(),
        }
    }

    fn role(&mut self) -> Result<String> {
        match self.peek().clone() {
            Token::Ident(name) => {
                if let Some(sig) = self.sig {
                    if !sig.has_role(&name) {
                        return Err(Error::UndeclaredName { kind: "role", name });
                    }
                }
                self.bump();
                Ok(name)
            }
            _ => Err(self.error(&["a role name"])),
        }
    }

    fn atom(&mut self) -> Result<Concept> {
        match self.peek().clone() {
            Token::Top => {
                self.bump();
                Ok(Concept::Top)
            }
            Token::Bot => {
                self.bump();
                Ok(Concept::Bot)
            }
            Token::Ident(name) => {
                if let Some(sig) = self.sig {
                    if !sig.has_concept(&name) {
                        return Err(Error::UndeclaredName {
                            kind: "concept",
                            name,
                        });
                    }
                }
                self.bump();
                Ok(Concept::Name(name))
            }
            Token::LParen => {
                self.bump();
                let inner = self.disjunction()?;
                self.expect(Token::RParen, "`)`")?;
                Ok(inner)
            }
            _ => Err(self.error(&[
                "`top`",
                "`bot`",
                "a concept name",
                "`not`",
                "`exists`",
                "`forall`",
                "`(`",
            ])),
        }
    }
}

fn parse(text: &str, sig: Option<&Signature>) -> Result<Concept> {
    let mut parser = Parser {
        tokens: tokenize(text)?,
        cursor: 0,
        sig,
    };
    let concept = parser.disjunction()?;
    if *parser.peek() != Token::End {
        return Err(parser.error(&["`and`", "`or`", "end of input"]));
    }
    Ok(concept.normalize())
}

/// Parses `text` and returns the normalized concept; every name must be
/// declared in `sig`.
pub fn parse_concept(text: &str, sig: &Signature) -> Result<Concept> {
    parse(text, Some(sig))
}

/// Parses without a signature: every identifier is accepted.
impl FromStr for Concept {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        parse(text, None)
    }
}

/// Canonical, fully parenthesized text of a concept.
pub fn print_concept(c: &Concept) -> String {
    c.to_string()
}

impl fmt::Display for Concept {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Concept::Top => f.write_str("top"),
            Concept::Bot => f.write_str("bot"),
            Concept::Name(a) => f.write_str(a),
            Concept::Not(c) => write!(f, "(not {c})"),
            Concept::Exists(r, c) => write!(f, "(exists {r}.{c})"),
            Concept::Forall(r, c) => write!(f, "(forall {r}.{c})"),
            Concept::And(items) | Concept::Or(items) => {
                let op = if matches!(self, Concept::And(_)) {
                    " and "
                } else {
                    " or "
                };
                f.write_str("(")?;
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(op)?;
                    }
                    write!(f, "{item}")?;
                }
                f.write_str(")")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig() -> Signature {
        Signature::new(["A", "B", "Egg", "Mammal"], ["r", "s", "lays"]).unwrap()
    }

    #[test]
    fn parses_nested_existentials() {
        let c = parse_concept("exists r. exists r. exists r. top", &sig()).unwrap();
        assert_eq!(c, Concept::exists_chain("r", 3, Concept::Top));
        assert_eq!(c.to_string(), "(exists r.(exists r.(exists r.top)))");
    }

    #[test]
    fn parses_atoms() {
        assert_eq!(parse_concept("top", &sig()).unwrap(), Concept::Top);
        assert_eq!(parse_concept("⊥", &sig()).unwrap(), Concept::Bot);
    }

    #[test]
    fn parses_infix_conjunction() {
        let c = parse_concept("B and (exists r.(A and B))", &sig()).unwrap();
        let expected = Concept::And(vec![
            Concept::name("B"),
            Concept::exists("r", Concept::And(vec![Concept::name("A"), Concept::name("B")])),
        ])
        .normalize();
        assert_eq!(c, expected);
        let unicode = parse_concept("B ⊓ ∃r.(A ⊓ B)", &sig()).unwrap();
        assert_eq!(unicode, expected);
    }

    #[test]
    fn precedence() {
        let c = parse_concept("Mammal and exists lays.Egg", &sig()).unwrap();
        assert_eq!(
            c,
            Concept::and([
                Concept::name("Mammal"),
                Concept::exists("lays", Concept::name("Egg"))
            ])
        );
        let c = parse_concept("A and B or not A", &sig()).unwrap();
        assert_eq!(
            c,
            Concept::or([
                Concept::and([Concept::name("A"), Concept::name("B")]),
                Concept::not(Concept::name("A"))
            ])
        );
    }

    #[test]
    fn prints_sorted() {
        let c = Concept::And(vec![Concept::name("B"), Concept::name("A")]).normalize();
        assert_eq!(print_concept(&c), "(A and B)");
        assert_eq!(print_concept(&Concept::Top), "top");
    }

    #[test]
    fn syntax_errors_carry_position() {
        match parse_concept("exists r A", &sig()) {
            Err(Error::Syntax {
                position, expected, ..
            }) => {
                assert_eq!(position, 9);
                assert_eq!(expected, vec!["`.`".to_string()]);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_concept("(A and", &sig()),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(parse_concept("A B", &sig()), Err(Error::Syntax { .. })));
        assert!(matches!(
            parse_concept("A & B", &sig()),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn undeclared_names() {
        assert!(matches!(
            parse_concept("C", &sig()),
            Err(Error::UndeclaredName { kind: "concept", .. })
        ));
        assert!(matches!(
            parse_concept("exists t.A", &sig()),
            Err(Error::UndeclaredName { kind: "role", .. })
        ));
        // a role name in concept position is still undeclared as a concept
        assert!(parse_concept("r", &sig()).is_err());
    }
}
