use crate::error::LexError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Keyword {
    Procedure,
    Int,
    Qureg,
    Quvoid,
    For,
    To,
    If,
    Else,
    Until,
    Input,
    Print,
    Measure,
    Reset,
    Not,
}

impl Keyword {
    fn from_ident(word: &str) -> Option<Keyword> {
        Some(match word {
            "procedure" => Keyword::Procedure,
            "int" => Keyword::Int,
            "qureg" => Keyword::Qureg,
            "quvoid" => Keyword::Quvoid,
            "for" => Keyword::For,
            "to" => Keyword::To,
            "if" => Keyword::If,
            "else" => Keyword::Else,
            "until" => Keyword::Until,
            "input" => Keyword::Input,
            "print" => Keyword::Print,
            "measure" => Keyword::Measure,
            "reset" => Keyword::Reset,
            "not" => Keyword::Not,
            _ => return None,
        })
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Keyword::Procedure => "procedure",
            Keyword::Int => "int",
            Keyword::Qureg => "qureg",
            Keyword::Quvoid => "quvoid",
            Keyword::For => "for",
            Keyword::To => "to",
            Keyword::If => "if",
            Keyword::Else => "else",
            Keyword::Until => "until",
            Keyword::Input => "input",
            Keyword::Print => "print",
            Keyword::Measure => "measure",
            Keyword::Reset => "reset",
            Keyword::Not => "not",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum TokenKind {
    Ident(String),
    Int(i64),
    Str(String),
    Keyword(Keyword),
    Assign,
    EqEq,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Bang,
    Hash,
    Comma,
    Semi,
    LParen,
    RParen,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
}

impl TokenKind {
    /// Human-readable form for diagnostics.
    pub fn describe(&self) -> String {
        match self {
            TokenKind::Ident(name) => format!("identifier `{name}`"),
            TokenKind::Int(v) => format!("integer `{v}`"),
            TokenKind::Str(_) => "string literal".into(),
            TokenKind::Keyword(k) => format!("`{}`", k.as_str()),
            other => format!("`{}`", other.glyph()),
        }
    }

    fn glyph(&self) -> &'static str {
        match self {
            TokenKind::Assign => "=",
            TokenKind::EqEq => "==",
            TokenKind::Plus => "+",
            TokenKind::Minus => "-",
            TokenKind::Star => "*",
            TokenKind::Slash => "/",
            TokenKind::Caret => "^",
            TokenKind::Bang => "!",
            TokenKind::Hash => "#",
            TokenKind::Comma => ",",
            TokenKind::Semi => ";",
            TokenKind::LParen => "(",
            TokenKind::RParen => ")",
            TokenKind::LBrace => "{",
            TokenKind::RBrace => "}",
            TokenKind::LBracket => "[",
            TokenKind::RBracket => "]",
            _ => unreachable!("glyph() is only called for operator tokens"),
        }
    }
}

/// One lexeme with its 1-based source position.
#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub kind: TokenKind,
    pub line: usize,
    pub column: usize,
}

struct Lexer {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    column: usize,
}

impl Lexer {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn peek_next(&self) -> Option<char> {
        self.chars.get(self.pos + 1).copied()
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

    fn error(&self, line: usize, column: usize, message: impl Into<String>) -> LexError {
        LexError {
            line,
            column,
            message: message.into(),
        }
    }
}

/// Split `source` into tokens. `//` comments run to end of line; strings
/// have no escape sequences and must close on the same line.
pub fn tokenize(source: &str) -> Result<Vec<Token>, LexError> {
    let mut lx = Lexer {
        chars: source.chars().collect(),
        pos: 0,
        line: 1,
        column: 1,
    };
    let mut tokens = Vec::new();

    while let Some(c) = lx.peek() {
        if c.is_whitespace() {
            lx.bump();
            continue;
        }
        if c == '/' && lx.peek_next() == Some('/') {
            while let Some(c) = lx.peek() {
                if c == '\n' {
                    break;
                }
                lx.bump();
            }
            continue;
        }

        let (line, column) = (lx.line, lx.column);
        let kind = if c.is_ascii_alphabetic() || c == '_' {
            let mut word = String::new();
            while let Some(c) = lx.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    word.push(c);
                    lx.bump();
                } else {
                    break;
                }
            }
            match Keyword::from_ident(&word) {
                Some(kw) => TokenKind::Keyword(kw),
                None => TokenKind::Ident(word),
            }
        } else if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(c) = lx.peek() {
                if c.is_ascii_digit() {
                    digits.push(c);
                    lx.bump();
                } else {
                    break;
                }
            }
            let value: i64 = digits.parse().map_err(|_| {
                lx.error(
                    line,
                    column,
                    format!("integer literal `{digits}` out of range"),
                )
            })?;
            TokenKind::Int(value)
        } else if c == '"' {
            lx.bump();
            let mut text = String::new();
            loop {
                match lx.peek() {
                    Some('"') => {
                        lx.bump();
                        break;
                    }
                    Some('\n') | None => {
                        return Err(lx.error(line, column, "unterminated string literal"));
                    }
                    Some(c) => {
                        text.push(c);
                        lx.bump();
                    }
                }
            }
            TokenKind::Str(text)
        } else {
            lx.bump();
            match c {
                '=' => {
                    if lx.peek() == Some('=') {
                        lx.bump();
                        TokenKind::EqEq
                    } else {
                        TokenKind::Assign
                    }
                }
                '+' => TokenKind::Plus,
                '-' => TokenKind::Minus,
                '*' => TokenKind::Star,
                '/' => TokenKind::Slash,
                '^' => TokenKind::Caret,
                '!' => TokenKind::Bang,
                '#' => TokenKind::Hash,
                ',' => TokenKind::Comma,
                ';' => TokenKind::Semi,
                '(' => TokenKind::LParen,
                ')' => TokenKind::RParen,
                '{' => TokenKind::LBrace,
                '}' => TokenKind::RBrace,
                '[' => TokenKind::LBracket,
                ']' => TokenKind::RBracket,
                other => {
                    return Err(lx.error(line, column, format!("unexpected character `{other}`")));
                }
            }
        };
        tokens.push(Token { kind, line, column });
    }

    Ok(tokens)
}
