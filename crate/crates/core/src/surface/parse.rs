//! Lexer and recursive-descent parser for the surface syntax.
//!
//! ```text
//! doc   ::= expr (':' expr)?
//! expr  ::= 'fun' binder+ '=>' expr
//!         | 'elim' app 'at' binder '=>' expr '|' expr '|' expr
//!         | '(' binder ':' expr ')' '->' expr
//!         | app ('->' expr)?
//! app   ::= atom+
//! atom  ::= ident | 'Bool' | 'true' | 'false' | 'U'n | '(' expr ')'
//!         | ('El' | 'code' | 'Lift' | 'lift' | 'unlift') atom
//! ```
//!
//! `--` starts a comment running to the end of the line.

use thiserror::Error;

use super::syntax::{Document, Span, SurfaceKind, SurfaceTerm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{}:{}: {message}", span.line, span.col)]
pub struct ParseError {
    pub span: Span,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(span: Span, message: impl Into<String>) -> ParseError {
        ParseError {
            span,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Under,
    Fun,
    Elim,
    At,
    Bool,
    True,
    False,
    Universe(usize),
    El,
    Code,
    Lift,
    LiftTm,
    Unlift,
    LParen,
    RParen,
    Colon,
    Arrow,
    FatArrow,
    Bar,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Eof => "end of input".to_string(),
            other => format!("`{}`", other.text()),
        }
    }

    fn text(&self) -> &'static str {
        match self {
            Tok::Ident(_) => "identifier",
            Tok::Under => "_",
            Tok::Fun => "fun",
            Tok::Elim => "elim",
            Tok::At => "at",
            Tok::Bool => "Bool",
            Tok::True => "true",
            Tok::False => "false",
            Tok::Universe(_) => "universe",
            Tok::El => "El",
            Tok::Code => "code",
            Tok::Lift => "Lift",
            Tok::LiftTm => "lift",
            Tok::Unlift => "unlift",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::Colon => ":",
            Tok::Arrow => "->",
            Tok::FatArrow => "=>",
            Tok::Bar => "|",
            Tok::Eof => "end of input",
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(
            self,
            Tok::Ident(_)
                | Tok::Bool
                | Tok::True
                | Tok::False
                | Tok::Universe(_)
                | Tok::LParen
                | Tok::El
                | Tok::Code
                | Tok::Lift
                | Tok::LiftTm
                | Tok::Unlift
        )
    }
}

fn keyword(word: &str) -> Option<Tok> {
    Some(match word {
        "_" => Tok::Under,
        "fun" => Tok::Fun,
        "elim" => Tok::Elim,
        "at" => Tok::At,
        "Bool" => Tok::Bool,
        "true" => Tok::True,
        "false" => Tok::False,
        "El" => Tok::El,
        "code" => Tok::Code,
        "Lift" => Tok::Lift,
        "lift" => Tok::LiftTm,
        "unlift" => Tok::Unlift,
        _ => {
            let digits = word.strip_prefix('U')?;
            if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
                return None;
            }
            Tok::Universe(digits.parse().ok()?)
        }
    })
}

fn lex(src: &str) -> Result<Vec<(Tok, Span)>, ParseError> {
    let mut toks = Vec::new();
    let mut chars = src.chars().peekable();
    let (mut line, mut col) = (1, 1);
    macro_rules! bump {
        () => {{
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                col = 1;
            } else if c.is_some() {
                col += 1;
            }
            c
        }};
    }
    while let Some(&c) = chars.peek() {
        let span = Span { line, col };
        if c.is_whitespace() {
            bump!();
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let mut word = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_alphanumeric() || c == '_' || c == '\'' || c == '•' {
                    word.push(c);
                    bump!();
                } else {
                    break;
                }
            }
            let tok = keyword(&word).unwrap_or(Tok::Ident(word));
            toks.push((tok, span));
            continue;
        }
        bump!();
        let tok = match c {
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ':' => Tok::Colon,
            '|' => Tok::Bar,
            '=' if chars.peek() == Some(&'>') => {
                bump!();
                Tok::FatArrow
            }
            '-' if chars.peek() == Some(&'>') => {
                bump!();
                Tok::Arrow
            }
            '-' if chars.peek() == Some(&'-') => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    bump!();
                }
                continue;
            }
            other => return Err(ParseError::new(span, format!("unexpected character `{other}`"))),
        };
        toks.push((tok, span));
    }
    toks.push((Tok::Eof, Span { line, col }));
    Ok(toks)
}

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn peek_at(&self, offset: usize) -> &Tok {
        let i = (self.pos + offset).min(self.toks.len() - 1);
        &self.toks[i].0
    }

    fn span(&self) -> Span {
        self.toks[self.pos].1
    }

    fn advance(&mut self) -> (Tok, Span) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<Span, ParseError> {
        if *self.peek() == want {
            Ok(self.advance().1)
        } else {
            Err(self.unexpected(&format!("`{}`", want.text())))
        }
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        ParseError::new(
            self.span(),
            format!("expected {wanted}, found {}", self.peek().describe()),
        )
    }

    fn binder(&mut self) -> Result<String, ParseError> {
        match self.advance() {
            (Tok::Ident(name), _) => Ok(name),
            (Tok::Under, _) => Ok("_".to_string()),
            (tok, span) => Err(ParseError::new(
                span,
                format!("expected a variable name, found {}", tok.describe()),
            )),
        }
    }

    fn expr(&mut self) -> Result<SurfaceTerm, ParseError> {
        let span = self.span();
        match self.peek() {
            Tok::Fun => {
                self.advance();
                let mut names = vec![self.binder()?];
                while matches!(self.peek(), Tok::Ident(_) | Tok::Under) {
                    names.push(self.binder()?);
                }
                self.expect(Tok::FatArrow)?;
                let body = self.expr()?;
                Ok(names.into_iter().rev().fold(body, |body, name| {
                    SurfaceTerm::new(SurfaceKind::Lam(name, Box::new(body)), span)
                }))
            }
            Tok::Elim => {
                self.advance();
                let scrut = self.app()?;
                self.expect(Tok::At)?;
                let binder = self.binder()?;
                self.expect(Tok::FatArrow)?;
                let motive = self.expr()?;
                self.expect(Tok::Bar)?;
                let tcase = self.expr()?;
                self.expect(Tok::Bar)?;
                let fcase = self.expr()?;
                Ok(SurfaceTerm::new(
                    SurfaceKind::Elim {
                        scrut: Box::new(scrut),
                        binder,
                        motive: Box::new(motive),
                        tcase: Box::new(tcase),
                        fcase: Box::new(fcase),
                    },
                    span,
                ))
            }
            Tok::LParen
                if matches!(self.peek_at(1), Tok::Ident(_) | Tok::Under)
                    && *self.peek_at(2) == Tok::Colon =>
            {
                self.advance();
                let name = self.binder()?;
                self.expect(Tok::Colon)?;
                let dom = self.expr()?;
                self.expect(Tok::RParen)?;
                self.expect(Tok::Arrow)?;
                let cod = self.expr()?;
                Ok(SurfaceTerm::new(
                    SurfaceKind::Pi(name, Box::new(dom), Box::new(cod)),
                    span,
                ))
            }
            _ => {
                let lhs = self.app()?;
                if *self.peek() == Tok::Arrow {
                    self.advance();
                    let cod = self.expr()?;
                    Ok(SurfaceTerm::new(
                        SurfaceKind::Pi("_".to_string(), Box::new(lhs), Box::new(cod)),
                        span,
                    ))
                } else {
                    Ok(lhs)
                }
            }
        }
    }

    fn app(&mut self) -> Result<SurfaceTerm, ParseError> {
        let span = self.span();
        let mut head = self.atom()?;
        while self.peek().starts_atom() {
            let arg = self.atom()?;
            head = SurfaceTerm::new(SurfaceKind::App(Box::new(head), Box::new(arg)), span);
        }
        Ok(head)
    }

    fn atom(&mut self) -> Result<SurfaceTerm, ParseError> {
        let span = self.span();
        let prefix = |p: &mut Parser, wrap: fn(Box<SurfaceTerm>) -> SurfaceKind| {
            p.advance();
            let arg = p.atom()?;
            Ok(SurfaceTerm::new(wrap(Box::new(arg)), span))
        };
        match self.peek().clone() {
            Tok::Ident(name) => {
                self.advance();
                Ok(SurfaceTerm::new(SurfaceKind::Var(name), span))
            }
            Tok::Bool => {
                self.advance();
                Ok(SurfaceTerm::new(SurfaceKind::Bool, span))
            }
            Tok::True => {
                self.advance();
                Ok(SurfaceTerm::new(SurfaceKind::True, span))
            }
            Tok::False => {
                self.advance();
                Ok(SurfaceTerm::new(SurfaceKind::False, span))
            }
            Tok::Universe(i) => {
                self.advance();
                Ok(SurfaceTerm::new(SurfaceKind::U(i), span))
            }
            Tok::LParen => {
                self.advance();
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Tok::El => prefix(self, SurfaceKind::El),
            Tok::Code => prefix(self, SurfaceKind::Code),
            Tok::Lift => prefix(self, SurfaceKind::Lift),
            Tok::LiftTm => prefix(self, SurfaceKind::LiftTm),
            Tok::Unlift => prefix(self, SurfaceKind::Unlift),
            _ => Err(self.unexpected("a term")),
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            Err(self.unexpected("end of input"))
        }
    }
}

/// Parses a single expression.
pub fn parse(src: &str) -> Result<SurfaceTerm, ParseError> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
    };
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

/// Parses a file: one expression with an optional `: type` ascription.
pub fn parse_document(src: &str) -> Result<Document, ParseError> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
    };
    let term = p.expr()?;
    let ty = if *p.peek() == Tok::Colon {
        p.advance();
        Some(p.expr()?)
    } else {
        None
    };
    p.finish()?;
    Ok(Document { term, ty })
}
