use super::ParseError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    LBrace,
    RBrace,
    LParen,
    RParen,
    Comma,
    /// `->`
    Right,
    /// `<-`
    Left,
    /// `<->`
    Both,
    Eq,
    Caret,
    Underscore,
    Lt,
    Label(String),
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Right => "`->`".into(),
            Tok::Left => "`<-`".into(),
            Tok::Both => "`<->`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Caret => "`^`".into(),
            Tok::Underscore => "`_`".into(),
            Tok::Lt => "`<`".into(),
            Tok::Label(l) => format!("label `{l}`"),
        }
    }
}

pub(crate) fn is_label_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '*' || c == '\''
}

/// Splits `text` into tokens paired with their byte offsets.
pub(crate) fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        let tok = match c {
            c if c.is_ascii_whitespace() => {
                i += 1;
                continue;
            }
            '{' => Tok::LBrace,
            '}' => Tok::RBrace,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            '=' => Tok::Eq,
            '^' => Tok::Caret,
            '_' => Tok::Underscore,
            '-' if text[i..].starts_with("->") => {
                i += 1;
                Tok::Right
            }
            '<' if text[i..].starts_with("<->") => {
                i += 2;
                Tok::Both
            }
            '<' if text[i..].starts_with("<-") => {
                i += 1;
                Tok::Left
            }
            '<' => Tok::Lt,
            c if is_label_char(c) => {
                while i < bytes.len() && is_label_char(bytes[i] as char) {
                    i += 1;
                }
                out.push((start, Tok::Label(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(ParseError::new(start, "a token", format!("`{ch}`")));
            }
        };
        i += 1;
        out.push((start, tok));
    }
    Ok(out)
}
