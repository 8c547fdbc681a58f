use std::fmt;

/// A position in a scenario file (1-based line and column).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct SourceSpan {
    pub line: usize,
    pub col: usize,
}

impl SourceSpan {
    pub fn new(line: usize, col: usize) -> Self {
        SourceSpan { line, col }
    }
}

/// A located error, printed as `file:line:col: message`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Diagnostic {
    pub file: String,
    pub span: SourceSpan,
    pub message: String,
}

impl Diagnostic {
    pub fn new(file: &str, span: SourceSpan, message: impl Into<String>) -> Self {
        Diagnostic { file: file.to_string(), span, message: message.into() }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}: {}", self.file, self.span.line, self.span.col, self.message)
    }
}
