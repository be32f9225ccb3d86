//! Recursive-descent parser for the model text format.

use super::{State, Transition};
use crate::error::ModelError;
use crate::number::{parse_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(String),
    LBrace,
    RBrace,
    Semi,
    Arrow,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Num(s) => format!("number `{s}`"),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Arrow => "`->`".into(),
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> ModelError {
    ModelError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

fn lex(text: &str) -> Result<(Vec<Spanned>, (usize, usize)), ModelError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1, 1);
    macro_rules! bump {
        () => {{
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                column = 1;
            } else if c.is_some() {
                column += 1;
            }
            c
        }};
    }
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        if c.is_whitespace() {
            bump!();
        } else if c == '#' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                bump!();
            }
        } else if c == '{' || c == '}' || c == ';' {
            bump!();
            let tok = match c {
                '{' => Tok::LBrace,
                '}' => Tok::RBrace,
                _ => Tok::Semi,
            };
            out.push(Spanned {
                tok,
                line: l,
                column: col,
            });
        } else if c == '-' || c == '+' || c == '.' || c.is_ascii_digit() {
            let mut s = String::new();
            s.push(c);
            bump!();
            if c == '-' && chars.peek() == Some(&'>') {
                bump!();
                out.push(Spanned {
                    tok: Tok::Arrow,
                    line: l,
                    column: col,
                });
                continue;
            }
            while chars
                .peek()
                .is_some_and(|&c| c.is_ascii_digit() || c == '.' || c == '/')
            {
                s.push(bump!().unwrap());
            }
            out.push(Spanned {
                tok: Tok::Num(s),
                line: l,
                column: col,
            });
        } else if is_ident_start(c) {
            let mut s = String::new();
            while chars.peek().is_some_and(|&c| is_ident_char(c)) {
                s.push(bump!().unwrap());
            }
            out.push(Spanned {
                tok: Tok::Ident(s),
                line: l,
                column: col,
            });
        } else {
            return Err(syntax(l, col, format!("unexpected character `{c}`")));
        }
    }
    Ok((out, (line, column)))
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn next(&mut self, expected: &str) -> Result<Spanned, ModelError> {
        match self.toks.get(self.pos) {
            Some(s) => {
                self.pos += 1;
                Ok(s.clone())
            }
            None => Err(syntax(
                self.end.0,
                self.end.1,
                format!("expected {expected}, found end of input"),
            )),
        }
    }

    fn unexpected(s: &Spanned, expected: &str) -> ModelError {
        syntax(
            s.line,
            s.column,
            format!("expected {expected}, found {}", s.tok.describe()),
        )
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ModelError> {
        let expected = tok.describe();
        let s = self.next(&expected)?;
        if s.tok == tok {
            Ok(())
        } else {
            Err(Parser::unexpected(&s, &expected))
        }
    }

    fn keyword(&mut self, word: &str) -> Result<(), ModelError> {
        self.expect(Tok::Ident(word.to_string()))
    }

    fn at_keyword(&self, word: &str) -> bool {
        matches!(self.peek(), Some(Spanned { tok: Tok::Ident(w), .. }) if w == word)
    }

    fn ident(&mut self) -> Result<String, ModelError> {
        let s = self.next("a name")?;
        match s.tok {
            Tok::Ident(name) => Ok(name),
            _ => Err(Parser::unexpected(&s, "a name")),
        }
    }

    fn number(&mut self) -> Result<Rational, ModelError> {
        let s = self.next("a number")?;
        match &s.tok {
            Tok::Num(text) => parse_rational(text).map_err(|source| ModelError::Number {
                line: s.line,
                column: s.column,
                source,
            }),
            _ => Err(Parser::unexpected(&s, "a number")),
        }
    }

    fn state(&mut self) -> Result<State, ModelError> {
        let name = self.ident()?;
        self.keyword("rate")?;
        let rate = self.number()?;
        let mut state = State {
            name,
            rate,
            initial: false,
            accepting: false,
        };
        if self.at_keyword("initial") {
            self.pos += 1;
            state.initial = true;
        }
        if self.at_keyword("accepting") {
            self.pos += 1;
            state.accepting = true;
        }
        self.expect(Tok::Semi)?;
        Ok(state)
    }

    fn transition(&mut self) -> Result<Transition, ModelError> {
        let src = self.ident()?;
        self.expect(Tok::Arrow)?;
        let dst = self.ident()?;
        self.keyword("price")?;
        let price = self.number()?;
        self.keyword("bound")?;
        let bound = self.number()?;
        self.expect(Tok::Semi)?;
        Ok(Transition {
            src,
            dst,
            price,
            bound,
        })
    }
}

pub(super) fn parse(text: &str) -> Result<(Vec<State>, Vec<Transition>), ModelError> {
    let (toks, end) = lex(text)?;
    let mut p = Parser { toks, pos: 0, end };
    p.keyword("rtea")?;
    p.expect(Tok::LBrace)?;
    let mut states = Vec::new();
    let mut transitions = Vec::new();
    loop {
        let s = p.next("`state`, `trans` or `}`")?;
        match &s.tok {
            Tok::RBrace => break,
            Tok::Ident(w) if w == "state" => states.push(p.state()?),
            Tok::Ident(w) if w == "trans" => transitions.push(p.transition()?),
            _ => return Err(Parser::unexpected(&s, "`state`, `trans` or `}`")),
        }
    }
    if let Some(s) = p.peek() {
        return Err(Parser::unexpected(s, "end of input"));
    }
    Ok((states, transitions))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::{q, qi};

    fn err_at(text: &str) -> (usize, usize, String) {
        match parse(text).unwrap_err() {
            ModelError::Syntax {
                line,
                column,
                message,
            } => (line, column, message),
            ModelError::Number {
                line,
                column,
                source,
            } => (line, column, source.to_string()),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn parses_items_and_comments() {
        let (states, trans) = parse(
            "# header\nrtea {\n  state s0 rate 2.5 initial accepting; # trailing\n  trans s0 -> s0 price -5/2 bound 3;\n}\n",
        )
        .unwrap();
        assert_eq!(
            states,
            vec![State {
                name: "s0".into(),
                rate: q(5, 2),
                initial: true,
                accepting: true
            }]
        );
        assert_eq!(trans[0].price, q(-5, 2));
        assert_eq!(trans[0].bound, qi(3));
    }

    #[test]
    fn primed_names() {
        let (states, _) = parse("rtea { state closed' rate 0 initial; }").unwrap();
        assert_eq!(states[0].name, "closed'");
    }

    #[test]
    fn syntax_errors_have_positions() {
        assert_eq!(err_at("rtea {\n  state s rate 1 initial\n}").0, 3);
        let (line, column, _) = err_at("rtea {\n  trans a => b price 0 bound 0; }");
        assert_eq!((line, column), (2, 11));
        let (line, column, msg) = err_at("rtea { state s rate 1/0 initial; }");
        assert_eq!((line, column), (1, 21));
        assert!(msg.contains("zero denominator"));
        assert!(err_at("model { }").2.contains("`rtea`"));
        assert!(err_at("rtea { ").2.contains("end of input"));
        assert!(err_at("rtea { } extra").2.contains("end of input"));
        assert!(err_at("rtea { state s rate 1 final; }").2.contains("`;`"));
        assert!(err_at("rtea { state s rate 1 initial; } @").2.contains('@'));
    }
}
