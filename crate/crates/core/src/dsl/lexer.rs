use super::{Diagnostic, SourceSpan};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Tok {
    Ident(String),
    Int(i64),
    Str(String),
    /// Punctuation, including the two-character `>=`, `<=`, `!=`, `=>`.
    Sym(&'static str),
    Newline,
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub span: SourceSpan,
}

const SYMS: [&str; 20] = [
    ">=", "<=", "!=", "=>", "(", ")", "[", "]", "{", "}", ",", ":", "=", "&", "*", "^", "-", "+", "/", "@",
];

/// Splits source text into tokens; `#` starts a comment that runs to the
/// end of the line.
pub fn lex(file: &str, src: &str) -> Result<Vec<Token>, Diagnostic> {
    let mut out = Vec::new();
    for (ln, line) in src.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let span = SourceSpan::new(ln + 1, i + 1);
            if c == '#' {
                break;
            }
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            if c.is_ascii_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Token { tok: Tok::Ident(chars[start..i].iter().collect()), span });
                continue;
            }
            if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let n = text
                    .parse()
                    .map_err(|_| Diagnostic::new(file, span, format!("integer `{text}` out of range")))?;
                out.push(Token { tok: Tok::Int(n), span });
                continue;
            }
            if c == '"' {
                let start = i + 1;
                i = start;
                while i < chars.len() && chars[i] != '"' {
                    i += 1;
                }
                if i == chars.len() {
                    return Err(Diagnostic::new(file, span, "unterminated string"));
                }
                out.push(Token { tok: Tok::Str(chars[start..i].iter().collect()), span });
                i += 1;
                continue;
            }
            let rest: String = chars[i..chars.len().min(i + 2)].iter().collect();
            match SYMS.iter().find(|s| rest.starts_with(**s)) {
                Some(s) => {
                    out.push(Token { tok: Tok::Sym(s), span });
                    i += s.len();
                }
                None => return Err(Diagnostic::new(file, span, format!("unexpected character `{c}`"))),
            }
        }
        out.push(Token { tok: Tok::Newline, span: SourceSpan::new(ln + 1, chars.len() + 1) });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(s: &str) -> Vec<Tok> {
        lex("t", s).unwrap().into_iter().map(|t| t.tok).collect()
    }

    #[test]
    fn symbols_and_comments() {
        assert_eq!(
            toks("rule linear: deg(y) >= deg(t[*]) # tail"),
            vec![
                Tok::Ident("rule".into()),
                Tok::Ident("linear".into()),
                Tok::Sym(":"),
                Tok::Ident("deg".into()),
                Tok::Sym("("),
                Tok::Ident("y".into()),
                Tok::Sym(")"),
                Tok::Sym(">="),
                Tok::Ident("deg".into()),
                Tok::Sym("("),
                Tok::Ident("t".into()),
                Tok::Sym("["),
                Tok::Sym("*"),
                Tok::Sym("]"),
                Tok::Sym(")"),
                Tok::Newline,
            ]
        );
    }

    #[test]
    fn spans_and_errors() {
        let t = lex("f", "a\n  \"s\" 12").unwrap();
        assert_eq!(t[2].span, SourceSpan::new(2, 3));
        assert_eq!(t[3].tok, Tok::Int(12));
        assert_eq!(lex("f", "x $").unwrap_err().to_string(), "f:1:3: unexpected character `$`");
        assert!(lex("f", "\"open").is_err());
    }
}
