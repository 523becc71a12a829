//! Text notation for power-sum equations.
//!
//! ```text
//! equation := term ('+' term)* '=' integer
//! term     := 'x' index ('^' power)?
//! ```
//!
//! Whitespace between tokens is ignored. Each index `1..=n` appears exactly
//! once, in any order; the parsed powers are ordered by index. A term without
//! `^` has power 1.

use std::fmt;

use crate::equation::DiophantineEquation;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    DuplicateVariable,
    NonContiguousIndex,
    NonPositiveLiteral,
    Unsupported,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ParseErrorKind::Syntax => "syntax error",
            ParseErrorKind::DuplicateVariable => "duplicate variable",
            ParseErrorKind::NonContiguousIndex => "non-contiguous variable index",
            ParseErrorKind::NonPositiveLiteral => "non-positive literal",
            ParseErrorKind::Unsupported => "unsupported construct",
        };
        f.write_str(s)
    }
}

/// A parse failure; `position` is a character offset into the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} at position {}: {}",
            self.kind, self.position, self.message
        )
    }
}

impl std::error::Error for ParseError {}

struct Term {
    index: u64,
    index_pos: usize,
    power: u32,
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Self {
        Self {
            chars: text.chars().collect(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    /// Offset for errors reported at the cursor; stays inside the input.
    fn here(&self) -> usize {
        self.pos.min(self.chars.len().saturating_sub(1))
    }

    fn err(&self, kind: ParseErrorKind, position: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            kind,
            position: position.min(self.chars.len().saturating_sub(1)),
            message: message.into(),
        }
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        match self.chars.get(self.pos) {
            Some(c) => self.err(
                ParseErrorKind::Syntax,
                self.pos,
                format!("expected {expected}, found `{c}`"),
            ),
            None => self.err(
                ParseErrorKind::Syntax,
                self.here(),
                format!("expected {expected}, found end of input"),
            ),
        }
    }

    /// Unsigned decimal literal starting at the cursor (no leading whitespace skip).
    fn integer(&mut self, what: &str) -> Result<(u64, usize), ParseError> {
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(d) = self.chars.get(self.pos).and_then(|c| c.to_digit(10)) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(d as u64))
                .ok_or_else(|| {
                    self.err(
                        ParseErrorKind::Syntax,
                        start,
                        format!("{what} is too large"),
                    )
                })?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.unexpected(what));
        }
        Ok((value, start))
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        match self.peek() {
            Some('x') => self.pos += 1,
            Some(c) if c.is_ascii_digit() => {
                return Err(self.err(
                    ParseErrorKind::Unsupported,
                    self.pos,
                    "coefficients and constant terms are not supported",
                ))
            }
            Some('-') => {
                return Err(self.err(
                    ParseErrorKind::Unsupported,
                    self.pos,
                    "negative terms are not supported",
                ))
            }
            _ => return Err(self.unexpected("a variable `x<index>`")),
        }
        if !self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            return Err(self.unexpected("a variable index"));
        }
        let (index, index_pos) = self.integer("a variable index")?;
        if index == 0 {
            return Err(self.err(
                ParseErrorKind::NonContiguousIndex,
                index_pos,
                "variable indices start at 1",
            ));
        }
        let mut power = 1;
        if self.peek() == Some('^') {
            self.pos += 1;
            match self.peek() {
                Some('-') => {
                    return Err(self.err(
                        ParseErrorKind::NonPositiveLiteral,
                        self.pos,
                        "powers must be at least 1",
                    ))
                }
                Some(c) if c.is_ascii_digit() => {}
                _ => return Err(self.unexpected("a power")),
            }
            let (p, p_pos) = self.integer("a power")?;
            if p == 0 {
                return Err(self.err(
                    ParseErrorKind::NonPositiveLiteral,
                    p_pos,
                    "powers must be at least 1",
                ));
            }
            power = u32::try_from(p)
                .map_err(|_| self.err(ParseErrorKind::Syntax, p_pos, "power is too large"))?;
        }
        Ok(Term {
            index,
            index_pos,
            power,
        })
    }

    fn equation(&mut self) -> Result<DiophantineEquation, ParseError> {
        let mut terms = vec![self.term()?];
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    terms.push(self.term()?);
                }
                Some('=') => {
                    self.pos += 1;
                    break;
                }
                Some('-') => {
                    return Err(self.err(
                        ParseErrorKind::Unsupported,
                        self.pos,
                        "subtraction is not supported",
                    ))
                }
                Some('x' | '*' | '(' | '·') => {
                    return Err(self.err(
                        ParseErrorKind::Unsupported,
                        self.pos,
                        "products of variables are not supported",
                    ))
                }
                _ => return Err(self.unexpected("`+` or `=`")),
            }
        }

        let target = match self.peek() {
            Some('-') => {
                return Err(self.err(
                    ParseErrorKind::NonPositiveLiteral,
                    self.pos,
                    "target must be at least 1",
                ))
            }
            Some(c) if c.is_ascii_digit() => {
                let (t, t_pos) = self.integer("a target")?;
                if t == 0 {
                    return Err(self.err(
                        ParseErrorKind::NonPositiveLiteral,
                        t_pos,
                        "target must be at least 1",
                    ));
                }
                t
            }
            _ => return Err(self.unexpected("an integer target")),
        };
        if self.peek().is_some() {
            return Err(self.unexpected("end of input"));
        }

        let n = terms.len();
        let mut powers: Vec<Option<u32>> = vec![None; n];
        for t in &terms {
            if t.index > n as u64 {
                continue;
            }
            let slot = &mut powers[(t.index - 1) as usize];
            if slot.is_some() {
                return Err(self.err(
                    ParseErrorKind::DuplicateVariable,
                    t.index_pos,
                    format!("x{} appears more than once", t.index),
                ));
            }
            *slot = Some(t.power);
        }
        if let Some(t) = terms.iter().find(|t| t.index > n as u64) {
            let missing = powers.iter().position(Option::is_none).map_or(n, |i| i + 1);
            return Err(self.err(
                ParseErrorKind::NonContiguousIndex,
                t.index_pos,
                format!("x{} used but x{missing} is missing", t.index),
            ));
        }
        let powers = powers.into_iter().map(|p| p.unwrap_or(1)).collect();
        DiophantineEquation::new(powers, target)
            .map_err(|e| self.err(ParseErrorKind::Syntax, 0, e.to_string()))
    }
}

pub fn parse_equation(text: &str) -> Result<DiophantineEquation, ParseError> {
    Parser::new(text).equation()
}

/// Canonical text, e.g. `x1^2 + x2^2 = 149`. Parses back to the same equation.
pub fn format_equation(eq: &DiophantineEquation) -> String {
    let mut out = String::new();
    for (i, p) in eq.powers().iter().enumerate() {
        if i > 0 {
            out.push_str(" + ");
        }
        out.push_str(&format!("x{}^{}", i + 1, p));
    }
    out.push_str(&format!(" = {}", eq.target()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn kind(text: &str) -> ParseErrorKind {
        parse_equation(text).unwrap_err().kind
    }

    #[test]
    fn parses_table_notation() {
        let eq = parse_equation("x1^2 + x2^2 = 149").unwrap();
        assert_eq!(eq.powers(), &[2, 2]);
        assert_eq!(eq.target(), 149);
    }

    #[test]
    fn default_power_is_one() {
        let eq = parse_equation("x1 = 5").unwrap();
        assert_eq!(eq.powers(), &[1]);
        assert_eq!(eq.target(), 5);
    }

    #[test]
    fn out_of_order_indices() {
        let eq = parse_equation("x2^3 + x1^2 = 149").unwrap();
        assert_eq!(eq.powers(), &[2, 3]);
        let eq = parse_equation("x3+x1^4+x2^2=7").unwrap();
        assert_eq!(eq.powers(), &[4, 2, 1]);
    }

    #[test]
    fn error_kinds() {
        assert_eq!(kind("x1^2 + x1^2 = 10"), ParseErrorKind::DuplicateVariable);
        assert_eq!(kind("x1^2 + x3^2 = 10"), ParseErrorKind::NonContiguousIndex);
        assert_eq!(kind("x0 = 10"), ParseErrorKind::NonContiguousIndex);
        assert_eq!(kind("x1^0 = 10"), ParseErrorKind::NonPositiveLiteral);
        assert_eq!(kind("x1^-2 = 10"), ParseErrorKind::NonPositiveLiteral);
        assert_eq!(kind("x1^2 = 0"), ParseErrorKind::NonPositiveLiteral);
        assert_eq!(kind("x1^2 = -4"), ParseErrorKind::NonPositiveLiteral);
        assert_eq!(kind("3x1^2 = 12"), ParseErrorKind::Unsupported);
        assert_eq!(kind("x1^2 - x2^2 = 12"), ParseErrorKind::Unsupported);
        assert_eq!(kind("x1 x2 = 12"), ParseErrorKind::Unsupported);
        assert_eq!(kind("x1*x2 = 12"), ParseErrorKind::Unsupported);
        assert_eq!(kind("x1^ + = 5"), ParseErrorKind::Syntax);
        assert_eq!(kind(""), ParseErrorKind::Syntax);
        assert_eq!(kind("x1^2 + x2^2"), ParseErrorKind::Syntax);
        assert_eq!(kind("x1^2 = 5 6"), ParseErrorKind::Syntax);
        assert_eq!(kind("y1 = 5"), ParseErrorKind::Syntax);
        assert_eq!(kind("x1 = 99999999999999999999999"), ParseErrorKind::Syntax);
    }

    #[test]
    fn syntax_error_position() {
        let e = parse_equation("x1^ + = 5").unwrap_err();
        assert_eq!(e.position, 4);
        let e = parse_equation("x1^2 + x1^2 = 10").unwrap_err();
        assert_eq!(e.position, 8);
    }

    #[test]
    fn format_examples() {
        let f = |p: Vec<u32>, n| format_equation(&DiophantineEquation::new(p, n).unwrap());
        assert_eq!(f(vec![2, 2], 149), "x1^2 + x2^2 = 149");
        assert_eq!(f(vec![1], 5), "x1^1 = 5");
        assert_eq!(f(vec![3, 3], 1008), "x1^3 + x2^3 = 1008");
    }

    fn arb_equation() -> impl Strategy<Value = DiophantineEquation> {
        (prop::collection::vec(1u32..=20, 1..=12), 1u64..=u64::MAX)
            .prop_map(|(p, n)| DiophantineEquation::new(p, n).unwrap())
    }

    proptest! {
        #[test]
        fn errors_point_inside_input(text in "[x0-9^+= *-]{0,24}") {
            if let Err(e) = parse_equation(&text) {
                prop_assert!(text.is_empty() || e.position < text.chars().count());
            }
        }

        #[test]
        fn whitespace_insensitive(eq in arb_equation(), pad in prop::collection::vec(0usize..3, 64)) {
            let canon = format_equation(&eq);
            let squeezed: String = canon.chars().filter(|c| !c.is_whitespace()).collect();
            // re-insert random runs of spaces at token boundaries
            let mut spaced = String::new();
            let mut pads = pad.iter().cycle();
            for c in squeezed.chars() {
                if matches!(c, '+' | '=' | '^') {
                    spaced.push_str(&" ".repeat(*pads.next().unwrap()));
                    spaced.push(c);
                    spaced.push_str(&" ".repeat(*pads.next().unwrap()));
                } else if c == 'x' {
                    // `x<index>` is a single token
                    spaced.push_str(&" ".repeat(*pads.next().unwrap()));
                    spaced.push(c);
                } else {
                    spaced.push(c);
                }
            }
            prop_assert_eq!(parse_equation(&squeezed).unwrap(), eq.clone());
            prop_assert_eq!(parse_equation(&spaced).unwrap(), eq);
        }
    }
}
