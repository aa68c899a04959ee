use std::fmt;

use super::{DslError, Pos};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(String),
    LParen,
    RParen,
    Comma,
    Semicolon,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Eq,
    Newline,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "identifier `{s}`"),
            Tok::Int(s) => write!(f, "integer `{s}`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::Comma => write!(f, "`,`"),
            Tok::Semicolon => write!(f, "`;`"),
            Tok::Plus => write!(f, "`+`"),
            Tok::Minus => write!(f, "`-`"),
            Tok::Star => write!(f, "`*`"),
            Tok::Slash => write!(f, "`/`"),
            Tok::Caret => write!(f, "`^`"),
            Tok::Eq => write!(f, "`=`"),
            Tok::Newline => write!(f, "end of line"),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

pub fn tokenize(src: &str) -> Result<Vec<Token>, DslError> {
    let mut out = Vec::new();
    for (ln, line) in src.lines().enumerate() {
        let line_no = ln + 1;
        let chars: Vec<(usize, char)> = line.chars().enumerate().collect();
        let mut k = 0;
        while k < chars.len() {
            let (col, c) = chars[k];
            let pos = Pos { line: line_no, col: col + 1 };
            let single = match c {
                '#' => break,
                c if c.is_whitespace() => {
                    k += 1;
                    continue;
                }
                '(' => Some(Tok::LParen),
                ')' => Some(Tok::RParen),
                ',' => Some(Tok::Comma),
                ';' => Some(Tok::Semicolon),
                '+' => Some(Tok::Plus),
                '-' | '−' => Some(Tok::Minus),
                '*' | '∧' => Some(Tok::Star),
                '/' => Some(Tok::Slash),
                '^' => Some(Tok::Caret),
                '=' => Some(Tok::Eq),
                _ => None,
            };
            if let Some(tok) = single {
                out.push(Token { tok, pos });
                k += 1;
                continue;
            }
            if c.is_ascii_digit() {
                let start = k;
                while k < chars.len() && chars[k].1.is_ascii_digit() {
                    k += 1;
                }
                let s: String = chars[start..k].iter().map(|&(_, c)| c).collect();
                out.push(Token { tok: Tok::Int(s), pos });
                continue;
            }
            if c.is_ascii_alphabetic() || c == '_' {
                let start = k;
                while k < chars.len() && (chars[k].1.is_ascii_alphanumeric() || chars[k].1 == '_' || chars[k].1 == '\'') {
                    k += 1;
                }
                let s: String = chars[start..k].iter().map(|&(_, c)| c).collect();
                out.push(Token { tok: Tok::Ident(s), pos });
                continue;
            }
            return Err(DslError::syntax(pos, format!("unexpected character `{c}`"), vec![]));
        }
        out.push(Token { tok: Tok::Newline, pos: Pos { line: line_no, col: chars.len() + 1 } });
    }
    let last = src.lines().count() + 1;
    out.push(Token { tok: Tok::Eof, pos: Pos { line: last, col: 1 } });
    Ok(out)
}
