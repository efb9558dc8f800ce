use super::{Code, Diagnostic};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(super) enum Tok {
    Ident(String),
    Int(usize),
    Str(String),
    Punct(&'static str),
    Eof,
}

#[derive(Clone, Debug)]
pub(super) struct Token {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

const PUNCT: [&str; 16] = [
    "|-", "->", "{", "}", "(", ")", "[", "]", "<", ">", ";", ",", "=", "/", "|", ":",
];

pub(super) fn lex(text: &str) -> Result<Vec<Token>, Diagnostic> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let err = |line, col, msg: String| Diagnostic::new(Code::Lexical, line, col, msg);
    while i < chars.len() {
        let c = chars[i];
        let (start_line, start_col) = (line, col);
        let bump = |i: &mut usize, line: &mut usize, col: &mut usize| {
            if chars[*i] == '\n' {
                *line += 1;
                *col = 1;
            } else {
                *col += 1;
            }
            *i += 1;
        };
        if c.is_whitespace() {
            bump(&mut i, &mut line, &mut col);
        } else if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                bump(&mut i, &mut line, &mut col);
            }
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '.') {
                s.push(chars[i]);
                bump(&mut i, &mut line, &mut col);
            }
            out.push(Token { tok: Tok::Ident(s), line: start_line, col: start_col });
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while i < chars.len() && chars[i].is_ascii_digit() {
                s.push(chars[i]);
                bump(&mut i, &mut line, &mut col);
            }
            let n = s
                .parse()
                .map_err(|_| err(start_line, start_col, format!("integer `{s}` is too large")))?;
            out.push(Token { tok: Tok::Int(n), line: start_line, col: start_col });
        } else if c == '"' {
            bump(&mut i, &mut line, &mut col);
            let mut s = String::new();
            loop {
                match chars.get(i) {
                    None | Some('\n') => return Err(err(start_line, start_col, "unterminated string".into())),
                    Some('"') => {
                        bump(&mut i, &mut line, &mut col);
                        break;
                    }
                    Some('\\') => {
                        bump(&mut i, &mut line, &mut col);
                        match chars.get(i) {
                            Some(&e @ ('"' | '\\')) => s.push(e),
                            _ => return Err(err(line, col, "unknown escape in string".into())),
                        }
                        bump(&mut i, &mut line, &mut col);
                    }
                    Some(&ch) => {
                        s.push(ch);
                        bump(&mut i, &mut line, &mut col);
                    }
                }
            }
            out.push(Token { tok: Tok::Str(s), line: start_line, col: start_col });
        } else {
            let rest: String = chars[i..chars.len().min(i + 2)].iter().collect();
            let Some(p) = PUNCT.iter().find(|p| rest.starts_with(**p)) else {
                return Err(err(line, col, format!("unexpected character `{c}`")));
            };
            for _ in 0..p.len() {
                bump(&mut i, &mut line, &mut col);
            }
            out.push(Token { tok: Tok::Punct(p), line: start_line, col: start_col });
        }
    }
    out.push(Token { tok: Tok::Eof, line, col });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_and_positions() {
        let toks = lex("op join/2; # note\n  x1 |- \"a\\\"b\"").unwrap();
        let kinds: Vec<&Tok> = toks.iter().map(|t| &t.tok).collect();
        assert_eq!(
            kinds,
            [
                &Tok::Ident("op".into()),
                &Tok::Ident("join".into()),
                &Tok::Punct("/"),
                &Tok::Int(2),
                &Tok::Punct(";"),
                &Tok::Ident("x1".into()),
                &Tok::Punct("|-"),
                &Tok::Str("a\"b".into()),
                &Tok::Eof,
            ]
        );
        assert_eq!((toks[5].line, toks[5].col), (2, 3));
    }

    #[test]
    fn stray_characters_are_lexical_errors() {
        let d = lex("signature S {\n  op @;\n}").unwrap_err();
        assert_eq!((d.code, d.line, d.col), (Code::Lexical, 2, 6));
    }
}
