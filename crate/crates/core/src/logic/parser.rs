//! Recursive-descent parser for the ASCII formula syntax.

use super::{Formula, LogicError};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Ident(String),
    Not,
    And,
    Or,
    Xor,
    Implies,
    Iff,
    Open,
    Close,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Ident(s) => format!("atom '{s}'"),
            Token::Not => "'!'".into(),
            Token::And => "'&'".into(),
            Token::Or => "'|'".into(),
            Token::Xor => "'^'".into(),
            Token::Implies => "'->'".into(),
            Token::Iff => "'<->'".into(),
            Token::Open => "'('".into(),
            Token::Close => "')'".into(),
        }
    }
}

fn syntax(position: usize, message: impl Into<String>) -> LogicError {
    LogicError::Syntax {
        position,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<Token>, LogicError> {
    let mut tokens = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(_, ch)) = chars.peek() {
        let position = tokens.len() + 1;
        if ch.is_whitespace() {
            chars.next();
            continue;
        }
        if ch.is_ascii_alphabetic() || ch == '_' {
            let mut ident = String::new();
            while let Some(&(_, c)) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    ident.push(c);
                    chars.next();
                } else {
                    break;
                }
            }
            tokens.push(Token::Ident(ident));
            continue;
        }
        chars.next();
        let token = match ch {
            '!' => Token::Not,
            '&' => Token::And,
            '|' => Token::Or,
            '^' => Token::Xor,
            '(' => Token::Open,
            ')' => Token::Close,
            '-' => match chars.next() {
                Some((_, '>')) => Token::Implies,
                _ => return Err(syntax(position, "expected '->'")),
            },
            '<' => match (chars.next(), chars.next()) {
                (Some((_, '-')), Some((_, '>'))) => Token::Iff,
                _ => return Err(syntax(position, "expected '<->'")),
            },
            other => return Err(syntax(position, format!("unexpected character '{other}'"))),
        };
        tokens.push(token);
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn error_here(&self, expected: &str) -> LogicError {
        match self.peek() {
            Some(t) => syntax(self.pos + 1, format!("expected {expected}, found {}", t.describe())),
            None => syntax(self.pos + 1, format!("expected {expected}, found end of input")),
        }
    }

    fn iff(&mut self) -> Result<Formula, LogicError> {
        let mut left = self.implies()?;
        while self.peek() == Some(&Token::Iff) {
            self.pos += 1;
            left = Formula::iff(left, self.implies()?);
        }
        Ok(left)
    }

    fn implies(&mut self) -> Result<Formula, LogicError> {
        let mut left = self.or()?;
        while self.peek() == Some(&Token::Implies) {
            self.pos += 1;
            left = Formula::implies(left, self.or()?);
        }
        Ok(left)
    }

    fn or(&mut self) -> Result<Formula, LogicError> {
        let mut left = self.and()?;
        loop {
            match self.peek() {
                Some(Token::Or) => {
                    self.pos += 1;
                    left = Formula::or(left, self.and()?);
                }
                Some(Token::Xor) => {
                    self.pos += 1;
                    left = Formula::xor(left, self.and()?);
                }
                _ => return Ok(left),
            }
        }
    }

    fn and(&mut self) -> Result<Formula, LogicError> {
        let mut left = self.not()?;
        while self.peek() == Some(&Token::And) {
            self.pos += 1;
            left = Formula::and(left, self.not()?);
        }
        Ok(left)
    }

    fn not(&mut self) -> Result<Formula, LogicError> {
        if self.peek() == Some(&Token::Not) {
            self.pos += 1;
            return Ok(Formula::not(self.not()?));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Formula, LogicError> {
        match self.peek().cloned() {
            Some(Token::Ident(name)) => {
                self.pos += 1;
                Ok(Formula::Atom(name))
            }
            Some(Token::Open) => {
                self.pos += 1;
                let inner = self.iff()?;
                if self.peek() != Some(&Token::Close) {
                    return Err(self.error_here("')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(self.error_here("an atom, '!' or '('")),
        }
    }
}

/// Parses a formula; errors carry the 1-based index of the offending token.
pub fn parse_formula(text: &str) -> Result<Formula, LogicError> {
    let mut parser = Parser {
        tokens: lex(text)?,
        pos: 0,
    };
    let f = parser.iff()?;
    if parser.pos < parser.tokens.len() {
        return Err(parser.error_here("an operator or end of input"));
    }
    Ok(f)
}
