//! Hand-written lexer and recursive-descent parser for `.lp` program files
//! and formulas (`.n4f` files hold `.`-terminated formulas).
//!
//! Program grammar:
//!
//! ```text
//! program     := (declaration | clause)*
//! declaration := "#const" IDENT "." | "#pred" IDENT "/" NAT "."
//! clause      := atom (":-" bodylit ("," bodylit)*)? "."
//! bodylit     := atom | "not" atom
//! atom        := LIDENT ("(" term ("," term)* ")")?
//! term        := UIDENT | LIDENT ("(" term ("," term)* ")")?
//! ```
//!
//! Formulas add `bot`, `top`, `~`, `&`, `|`, `->`, `<->`, `forall X`,
//! `exists X` and parentheses. Binding strength is `~` (and quantifiers) >
//! `&` > `|` > `->` > `<->`; `->` associates to the right, the others to
//! the left. The Unicode forms `¬ ∧ ∨ → ↔ ⊥ ⊤ ∀ ∃` are accepted too.
//! `%` starts a comment that runs to the end of the line.

use std::fmt;

use crate::syntax::{ArityConflict, Atom, BodyLiteral, Formula, Program, ProgramClause, Signature, Term};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("{at}: {message}")]
    Syntax { at: Position, message: String },
    #[error("{at}: `not` must be applied to an atom")]
    NotOnNonAtom { at: Position },
    #[error(transparent)]
    Arity(#[from] ArityConflict),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    LIdent(String),
    UIdent(String),
    Nat(usize),
    LParen,
    RParen,
    Comma,
    Dot,
    Slash,
    If,
    Tilde,
    Amp,
    Bar,
    Arrow,
    DArrow,
    HashConst,
    HashPred,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::LIdent(s) | Tok::UIdent(s) => write!(f, "`{s}`"),
            Tok::Nat(n) => write!(f, "`{n}`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Dot => f.write_str("`.`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::If => f.write_str("`:-`"),
            Tok::Tilde => f.write_str("`~`"),
            Tok::Amp => f.write_str("`&`"),
            Tok::Bar => f.write_str("`|`"),
            Tok::Arrow => f.write_str("`->`"),
            Tok::DArrow => f.write_str("`<->`"),
            Tok::HashConst => f.write_str("`#const`"),
            Tok::HashPred => f.write_str("`#pred`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, Position)>, ParseError> {
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
        let at = Position { line, column };
        let err = |message: String| ParseError::Syntax { at: at.clone(), message };
        if c.is_whitespace() {
            bump!();
            continue;
        }
        if c == '%' {
            while let Some(&c) = chars.peek() {
                if c == '\n' {
                    break;
                }
                bump!();
            }
            continue;
        }
        let tok = if c.is_ascii_alphabetic() || c == '_' {
            let mut ident = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    ident.push(c);
                    bump!();
                } else {
                    break;
                }
            }
            if ident.starts_with(|c: char| c.is_ascii_uppercase() || c == '_') {
                Tok::UIdent(ident)
            } else {
                Tok::LIdent(ident)
            }
        } else if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_digit() {
                    digits.push(c);
                    bump!();
                } else {
                    break;
                }
            }
            Tok::Nat(digits.parse().map_err(|_| err(format!("number `{digits}` is too large")))?)
        } else {
            bump!();
            match c {
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                ',' => Tok::Comma,
                '.' => Tok::Dot,
                '/' => Tok::Slash,
                '~' | '¬' => Tok::Tilde,
                '&' | '∧' => Tok::Amp,
                '|' | '∨' => Tok::Bar,
                '→' => Tok::Arrow,
                '↔' => Tok::DArrow,
                '⊥' => Tok::LIdent("bot".into()),
                '⊤' => Tok::LIdent("top".into()),
                '∀' => Tok::LIdent("forall".into()),
                '∃' => Tok::LIdent("exists".into()),
                ':' if chars.peek() == Some(&'-') => {
                    bump!();
                    Tok::If
                }
                '-' if chars.peek() == Some(&'>') => {
                    bump!();
                    Tok::Arrow
                }
                '<' if chars.peek() == Some(&'-') => {
                    bump!();
                    if bump!() != Some('>') {
                        return Err(err("expected `<->`".into()));
                    }
                    Tok::DArrow
                }
                '#' => {
                    let mut word = String::new();
                    while let Some(&c) = chars.peek() {
                        if c.is_ascii_alphabetic() {
                            word.push(c);
                            bump!();
                        } else {
                            break;
                        }
                    }
                    match word.as_str() {
                        "const" => Tok::HashConst,
                        "pred" => Tok::HashPred,
                        _ => return Err(err(format!("unknown directive `#{word}`"))),
                    }
                }
                other => return Err(err(format!("unexpected character `{other}`"))),
            }
        };
        out.push((tok, at));
    }
    out.push((Tok::Eof, Position { line, column }));
    Ok(out)
}

const KEYWORDS: &[&str] = &["bot", "top", "forall", "exists", "not"];

struct Parser {
    toks: Vec<(Tok, Position)>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self, ParseError> {
        Ok(Parser { toks: lex(text)?, pos: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn at(&self) -> Position {
        self.toks[self.pos].1.clone()
    }

    fn advance(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, expected: &str) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            at: self.at(),
            message: format!("expected {expected}, found {}", self.peek()),
        })
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.advance();
            Ok(())
        } else {
            self.error(&tok.to_string())
        }
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.advance();
            true
        } else {
            false
        }
    }

    fn lident(&mut self, what: &str) -> Result<String, ParseError> {
        match self.peek() {
            Tok::LIdent(s) if !KEYWORDS.contains(&s.as_str()) => {
                let s = s.clone();
                self.advance();
                Ok(s)
            }
            _ => self.error(what),
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        match self.peek().clone() {
            Tok::UIdent(v) => {
                self.advance();
                Ok(Term::Variable(v))
            }
            Tok::LIdent(_) => {
                let name = self.lident("a term")?;
                if self.eat(&Tok::LParen) {
                    let args = self.term_list()?;
                    Ok(Term::Application(name, args))
                } else {
                    Ok(Term::Constant(name))
                }
            }
            _ => self.error("a term"),
        }
    }

    fn term_list(&mut self) -> Result<Vec<Term>, ParseError> {
        let mut args = vec![self.term()?];
        while self.eat(&Tok::Comma) {
            args.push(self.term()?);
        }
        self.expect(Tok::RParen)?;
        Ok(args)
    }

    fn atom(&mut self) -> Result<Atom, ParseError> {
        let predicate = self.lident("an atom")?;
        let args = if self.eat(&Tok::LParen) { self.term_list()? } else { Vec::new() };
        Ok(Atom { predicate, args })
    }

    fn body_literal(&mut self) -> Result<BodyLiteral, ParseError> {
        if matches!(self.peek(), Tok::LIdent(s) if s == "not") {
            self.advance();
            let at = self.at();
            return match self.peek() {
                Tok::LIdent(s) if !KEYWORDS.contains(&s.as_str()) => Ok(BodyLiteral::neg(self.atom()?)),
                _ => Err(ParseError::NotOnNonAtom { at }),
            };
        }
        Ok(BodyLiteral::pos(self.atom()?))
    }

    fn program(&mut self) -> Result<Program, ParseError> {
        let mut signature = Signature::default();
        let mut clauses = Vec::new();
        loop {
            match self.peek() {
                Tok::Eof => break,
                Tok::HashConst => {
                    self.advance();
                    let name = self.lident("a constant name")?;
                    self.expect(Tok::Dot)?;
                    signature.add_constant(&name)?;
                }
                Tok::HashPred => {
                    self.advance();
                    let name = self.lident("a predicate name")?;
                    self.expect(Tok::Slash)?;
                    let arity = match self.advance() {
                        Tok::Nat(n) => n,
                        _ => {
                            self.pos -= 1;
                            return self.error("an arity");
                        }
                    };
                    self.expect(Tok::Dot)?;
                    signature.add_predicate(&name, arity)?;
                }
                _ => {
                    let head = self.atom()?;
                    let mut body = Vec::new();
                    if self.eat(&Tok::If) {
                        body.push(self.body_literal()?);
                        while self.eat(&Tok::Comma) {
                            body.push(self.body_literal()?);
                        }
                    }
                    self.expect(Tok::Dot)?;
                    signature.add_atom(&head)?;
                    body.iter().try_for_each(|l| signature.add_atom(&l.atom))?;
                    clauses.push(ProgramClause { head, body });
                }
            }
        }
        signature.ensure_constant();
        Ok(Program { clauses, signature })
    }

    // iff := imp ("<->" imp)*
    fn formula(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.implication()?;
        while self.eat(&Tok::DArrow) {
            let rhs = self.implication()?;
            lhs = lhs.iff(rhs);
        }
        Ok(lhs)
    }

    // imp := disj ("->" imp)?
    fn implication(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disjunction()?;
        if self.eat(&Tok::Arrow) {
            let rhs = self.implication()?;
            return Ok(lhs.implies(rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.conjunction()?;
        while self.eat(&Tok::Bar) {
            lhs = lhs.or(self.conjunction()?);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while self.eat(&Tok::Amp) {
            lhs = lhs.and(self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Tok::Tilde => {
                self.advance();
                Ok(self.unary()?.negate())
            }
            Tok::LParen => {
                self.advance();
                let f = self.formula()?;
                self.expect(Tok::RParen)?;
                Ok(f)
            }
            Tok::LIdent(word) if word == "bot" => {
                self.advance();
                Ok(Formula::Bottom)
            }
            Tok::LIdent(word) if word == "top" => {
                self.advance();
                Ok(Formula::top())
            }
            Tok::LIdent(word) if word == "forall" || word == "exists" => {
                self.advance();
                let mut vars = Vec::new();
                while let Tok::UIdent(v) = self.peek().clone() {
                    self.advance();
                    vars.push(v);
                }
                if vars.is_empty() {
                    return self.error("a variable after the quantifier");
                }
                let body = self.unary()?;
                Ok(vars.into_iter().rev().fold(body, |f, v| {
                    if word == "forall" {
                        Formula::forall(v, f)
                    } else {
                        Formula::exists(v, f)
                    }
                }))
            }
            Tok::LIdent(_) => Ok(Formula::Atom(self.atom()?)),
            _ => self.error("a formula"),
        }
    }
}

pub fn parse_program(text: &str) -> Result<Program, ParseError> {
    Parser::new(text)?.program()
}

/// Parses a single formula with all shorthands expanded.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser::new(text)?;
    let f = p.formula()?;
    if *p.peek() != Tok::Eof {
        return p.error("end of formula");
    }
    Ok(f)
}

/// Parses a `.`-separated formula set; the final `.` is optional.
pub fn parse_formula_set(text: &str) -> Result<Vec<Formula>, ParseError> {
    let mut p = Parser::new(text)?;
    let mut out = Vec::new();
    while *p.peek() != Tok::Eof {
        out.push(p.formula()?);
        if !p.eat(&Tok::Dot) && *p.peek() != Tok::Eof {
            return p.error("`.` after formula");
        }
    }
    Ok(out)
}
