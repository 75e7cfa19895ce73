//! Surface syntax for terms and formulas.
//!
//! Terms: `0`, `1`, numerals, `w1`, `K`, `I`, `w`, `E + E`, `w^E`,
//! `phi(E, E)`, `E * n`, `w*E`, `reg+(E)`, postfix `E+`, `tower(n, E)`,
//! `psi(E; n; E)`, `psiI(n; E)` and `psiK(n; [E, ...]; {E, ...}; E)`.
//! `+` builds a literal sum of the flattened parts; `*`, `w*` and `tower`
//! evaluate to normal form.
//!
//! Formulas: `in(t, t)`, `P(t, t, t)`, `PI(n; t)`, `Reg(t)`,
//! `R(b#tag, E; t)`, `X(i; t)`, `~F`, `F | F`, `F & F`, `ex x<E. F`,
//! `all x<E. F`, `EX Xi<E. F` and `ALL Xi<E. F`, with `LI` as the
//! unbounded quantifier bound.

use std::fmt;

use crate::arith::{mul_nat, omega_mul, omega_tower};
use crate::formula::{Bound, FTerm, Formula};
use crate::term::{check_node, OrdSeq, Term, ThetaSet};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub expected: Vec<String>,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(u64),
    Ident(String),
    Sym(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(n) => write!(f, "`{n}`"),
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Pos {
    line: usize,
    col: usize,
}

fn lex(src: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, col };
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let start = i;
        if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            let n = text.parse().map_err(|_| ParseError {
                line,
                col,
                expected: Vec::new(),
                message: format!("numeral `{text}` out of range"),
            })?;
            out.push((Tok::Num(n), pos));
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), pos));
        } else if "+^*(),;[]{}<.~|&#".contains(c) {
            i += 1;
            out.push((Tok::Sym(c), pos));
        } else {
            return Err(ParseError {
                line,
                col,
                expected: Vec::new(),
                message: format!("unexpected character `{c}`"),
            });
        }
        col += i - start;
    }
    out.push((Tok::Eof, Pos { line, col }));
    Ok(out)
}

const TERM_WORDS: &[&str] = &[
    "w", "w1", "K", "I", "phi", "reg", "tower", "psi", "psiI", "psiK", "LI",
];

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    big_n: Option<usize>,
}

type PResult<T> = Result<T, ParseError>;

impl Parser {
    fn new(src: &str, big_n: Option<usize>) -> PResult<Self> {
        Ok(Parser {
            toks: lex(src)?,
            at: 0,
            big_n,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.at + k).min(self.toks.len() - 1)].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error_at(&self, pos: Pos, expected: &[&str], message: String) -> ParseError {
        ParseError {
            line: pos.line,
            col: pos.col,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            message,
        }
    }

    fn unexpected(&self, expected: &[&str]) -> ParseError {
        self.error_at(self.pos(), expected, format!("unexpected {}", self.peek()))
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect_sym(&mut self, c: char) -> PResult<()> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            Err(self.unexpected(&[&format!("`{c}`")]))
        }
    }

    fn expect_num(&mut self) -> PResult<u64> {
        match self.peek() {
            Tok::Num(n) => {
                let n = *n;
                self.bump();
                Ok(n)
            }
            _ => Err(self.unexpected(&["numeral"])),
        }
    }

    fn expect_small(&mut self) -> PResult<u32> {
        let pos = self.pos();
        let n = self.expect_num()?;
        u32::try_from(n).map_err(|_| self.error_at(pos, &[], format!("{n} is too large")))
    }

    fn expect_end(&self) -> PResult<()> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            Err(self.unexpected(&["end of input"]))
        }
    }

    fn checked(&self, t: Term, pos: Pos) -> PResult<Term> {
        let big_n = match (&t, self.big_n) {
            (_, Some(n)) => n,
            (Term::PsiK { seq, .. }, None) => seq.0.len(),
            _ => 0,
        };
        check_node(&t, big_n, false).map_err(|reason| self.error_at(pos, &[], reason))?;
        Ok(t)
    }

    fn op_result(&self, r: crate::Result<Term>, pos: Pos) -> PResult<Term> {
        r.map_err(|e| self.error_at(pos, &[], e.to_string()))
    }

    fn starts_expr(tok: &Tok) -> bool {
        match tok {
            Tok::Num(_) => true,
            Tok::Ident(s) => TERM_WORDS.contains(&s.as_str()) && s != "LI",
            Tok::Sym(c) => *c == '(',
            Tok::Eof => false,
        }
    }

    fn expr(&mut self) -> PResult<Term> {
        let pos = self.pos();
        let first = self.product()?;
        if *self.peek() != Tok::Sym('+') {
            return Ok(first);
        }
        let mut parts: Vec<Term> = first.parts().to_vec();
        while *self.peek() == Tok::Sym('+') {
            self.bump();
            parts.extend_from_slice(self.product()?.parts());
        }
        let t = match parts.len() {
            0 => Term::Zero,
            1 => parts.pop().unwrap(),
            _ => Term::sum(parts),
        };
        self.checked(t, pos)
    }

    fn product(&mut self) -> PResult<Term> {
        let pos = self.pos();
        let mut t = self.power()?;
        while *self.peek() == Tok::Sym('*') {
            self.bump();
            let m = self.expect_num()?;
            t = self.op_result(mul_nat(&t, m as usize), pos)?;
        }
        Ok(t)
    }

    fn power(&mut self) -> PResult<Term> {
        let pos = self.pos();
        if *self.peek() == Tok::Ident("w".into()) {
            match self.peek_at(1) {
                Tok::Sym('^') => {
                    self.bump();
                    self.bump();
                    let e = self.power()?;
                    let t = if e.is_zero() { Term::One } else { Term::wexp(e) };
                    return self.checked(t, pos);
                }
                Tok::Sym('*') if !matches!(self.peek_at(2), Tok::Num(_)) => {
                    self.bump();
                    self.bump();
                    let e = self.power()?;
                    return self.op_result(omega_mul(&e), pos);
                }
                _ => {}
            }
        }
        self.postfix()
    }

    fn postfix(&mut self) -> PResult<Term> {
        let pos = self.pos();
        let mut t = self.atom()?;
        while *self.peek() == Tok::Sym('+') && !Self::starts_expr(self.peek_at(1)) {
            self.bump();
            t = self.checked(Term::reg_succ(t), pos)?;
        }
        Ok(t)
    }

    fn term_list(&mut self, close: char) -> PResult<Vec<Term>> {
        let mut out = Vec::new();
        if self.eat_sym(close) {
            return Ok(out);
        }
        loop {
            out.push(self.expr()?);
            if self.eat_sym(close) {
                return Ok(out);
            }
            if !self.eat_sym(',') {
                return Err(self.unexpected(&["`,`", &format!("`{close}`")]));
            }
        }
    }

    fn atom(&mut self) -> PResult<Term> {
        let pos = self.pos();
        let tok = self.peek().clone();
        match tok {
            Tok::Num(n) => {
                self.bump();
                let k = usize::try_from(n)
                    .ok()
                    .filter(|&k| k <= 1 << 16)
                    .ok_or_else(|| self.error_at(pos, &[], format!("numeral {n} too large")))?;
                Ok(Term::nat(k))
            }
            Tok::Sym('(') => {
                self.bump();
                let t = self.expr()?;
                self.expect_sym(')')?;
                Ok(t)
            }
            Tok::Ident(word) => {
                self.bump();
                match word.as_str() {
                    "w" => Ok(Term::omega()),
                    "w1" => Ok(Term::Omega1),
                    "K" => Ok(Term::BigK),
                    "I" => Ok(Term::BigI),
                    "phi" => {
                        self.expect_sym('(')?;
                        let a = self.expr()?;
                        self.expect_sym(',')?;
                        let b = self.expr()?;
                        self.expect_sym(')')?;
                        let t = if a.is_zero() {
                            if b.is_zero() {
                                Term::One
                            } else {
                                Term::wexp(b)
                            }
                        } else {
                            Term::veblen(a, b)
                        };
                        self.checked(t, pos)
                    }
                    "reg" => {
                        self.expect_sym('+')?;
                        self.expect_sym('(')?;
                        let b = self.expr()?;
                        self.expect_sym(')')?;
                        self.checked(Term::reg_succ(b), pos)
                    }
                    "tower" => {
                        self.expect_sym('(')?;
                        let m = self.expect_small()?;
                        self.expect_sym(',')?;
                        let b = self.expr()?;
                        self.expect_sym(')')?;
                        self.op_result(omega_tower(m, &b), pos)
                    }
                    "psi" => {
                        self.expect_sym('(')?;
                        let kappa = self.expr()?;
                        self.expect_sym(';')?;
                        let n = self.expect_small()?;
                        self.expect_sym(';')?;
                        let arg = self.expr()?;
                        self.expect_sym(')')?;
                        self.checked(Term::psi_reg(kappa, n, arg), pos)
                    }
                    "psiI" => {
                        self.expect_sym('(')?;
                        let n = self.expect_small()?;
                        self.expect_sym(';')?;
                        let arg = self.expr()?;
                        self.expect_sym(')')?;
                        self.checked(Term::psi_i(n, arg), pos)
                    }
                    "psiK" => {
                        self.expect_sym('(')?;
                        let n = self.expect_small()?;
                        self.expect_sym(';')?;
                        self.expect_sym('[')?;
                        let seq = self.term_list(']')?;
                        self.expect_sym(';')?;
                        self.expect_sym('{')?;
                        let theta = self.term_list('}')?;
                        self.expect_sym(';')?;
                        let arg = self.expr()?;
                        self.expect_sym(')')?;
                        let t = Term::psi_k(
                            n,
                            OrdSeq(seq),
                            ThetaSet::from_vec_unchecked(theta),
                            arg,
                        );
                        self.checked(t, pos)
                    }
                    _ => Err(self.error_at(pos, &["term"], format!("unknown word `{word}`"))),
                }
            }
            _ => Err(self.unexpected(&["term"])),
        }
    }

    fn top_term(&mut self) -> PResult<Term> {
        let pos = self.pos();
        let t = self.expr()?;
        self.expect_end()?;
        crate::arith::check_ceiling_lenient(&t).map_err(|r| self.error_at(pos, &[], r))?;
        Ok(t)
    }

    fn formula(&mut self) -> PResult<Formula> {
        let mut f = self.conjunction()?;
        while self.eat_sym('|') {
            f = Formula::or(f, self.conjunction()?);
        }
        Ok(f)
    }

    fn conjunction(&mut self) -> PResult<Formula> {
        let mut f = self.unary()?;
        while self.eat_sym('&') {
            f = Formula::and(f, self.unary()?);
        }
        Ok(f)
    }

    fn fterm(&mut self) -> PResult<FTerm> {
        if let Tok::Ident(s) = self.peek() {
            if !TERM_WORDS.contains(&s.as_str()) {
                let name = s.clone();
                self.bump();
                return Ok(FTerm::Var(name));
            }
        }
        Ok(FTerm::Const(self.expr()?))
    }

    fn pred_var(&mut self) -> PResult<u32> {
        let pos = self.pos();
        match self.bump() {
            Tok::Ident(s) if s.starts_with('X') => {
                let digits = &s[1..];
                if digits.is_empty() {
                    Ok(0)
                } else {
                    digits
                        .parse()
                        .map_err(|_| self.error_at(pos, &["X<index>"], format!("bad predicate variable `{s}`")))
                }
            }
            _ => Err(self.error_at(pos, &["predicate variable"], "expected a predicate variable".into())),
        }
    }

    fn unary(&mut self) -> PResult<Formula> {
        let pos = self.pos();
        if self.eat_sym('~') {
            return Ok(self.unary()?.negate());
        }
        if self.eat_sym('(') {
            let f = self.formula()?;
            self.expect_sym(')')?;
            return Ok(f);
        }
        let word = match self.peek() {
            Tok::Ident(s) => s.clone(),
            _ => return Err(self.unexpected(&["formula"])),
        };
        self.bump();
        match word.as_str() {
            "ex" | "all" => {
                let var = match self.bump() {
                    Tok::Ident(s) if !TERM_WORDS.contains(&s.as_str()) => s,
                    _ => return Err(self.error_at(pos, &["variable"], "expected a variable".into())),
                };
                self.expect_sym('<')?;
                let bound = if *self.peek() == Tok::Ident("LI".into()) {
                    self.bump();
                    Bound::LI
                } else {
                    Bound::Term(self.expr()?)
                };
                self.expect_sym('.')?;
                let body = self.formula()?;
                Ok(if word == "ex" {
                    Formula::ex(&var, bound, body)
                } else {
                    Formula::all(&var, bound, body)
                })
            }
            "EX" | "ALL" => {
                let i = self.pred_var()?;
                self.expect_sym('<')?;
                let kappa = self.expr()?;
                self.expect_sym('.')?;
                let body = self.formula()?;
                Ok(if word == "EX" {
                    Formula::ex2(i, kappa, body)
                } else {
                    Formula::all2(i, kappa, body)
                })
            }
            "in" => {
                self.expect_sym('(')?;
                let a = self.fterm()?;
                self.expect_sym(',')?;
                let b = self.fterm()?;
                self.expect_sym(')')?;
                Ok(Formula::In { a, b, pos: true })
            }
            "P" => {
                self.expect_sym('(')?;
                let a = self.fterm()?;
                self.expect_sym(',')?;
                let b = self.fterm()?;
                self.expect_sym(',')?;
                let c = self.fterm()?;
                self.expect_sym(')')?;
                Ok(Formula::P {
                    args: [a, b, c],
                    pos: true,
                })
            }
            "PI" => {
                self.expect_sym('(')?;
                let n = self.expect_small()?;
                self.expect_sym(';')?;
                let t = self.fterm()?;
                self.expect_sym(')')?;
                Ok(Formula::PI { n, t, pos: true })
            }
            "Reg" => {
                self.expect_sym('(')?;
                let t = self.fterm()?;
                self.expect_sym(')')?;
                Ok(Formula::Reg { t, pos: true })
            }
            "R" => {
                self.expect_sym('(')?;
                if self.bump() != Tok::Ident("b".into()) {
                    return Err(self.error_at(pos, &["`b#tag`"], "expected a subset label".into()));
                }
                self.expect_sym('#')?;
                let tag = match self.bump() {
                    Tok::Ident(s) => s,
                    Tok::Num(n) => n.to_string(),
                    _ => return Err(self.error_at(pos, &["tag"], "expected a subset tag".into())),
                };
                self.expect_sym(',')?;
                let kappa = self.expr()?;
                self.expect_sym(';')?;
                let t = self.fterm()?;
                self.expect_sym(')')?;
                Ok(Formula::R {
                    tag,
                    kappa,
                    t,
                    pos: true,
                })
            }
            "X" => {
                self.expect_sym('(')?;
                let i = self.expect_small()?;
                self.expect_sym(';')?;
                let t = self.fterm()?;
                self.expect_sym(')')?;
                Ok(Formula::X { i, t, pos: true })
            }
            _ => Err(self.error_at(pos, &["formula"], format!("unknown formula word `{word}`"))),
        }
    }
}

/// Parses and validates a term. `PsiK` sequences are checked against their
/// own length.
pub fn parse_term(src: &str) -> Result<Term, ParseError> {
    Parser::new(src, None)?.top_term()
}

/// Parses a term, requiring `PsiK` sequences of length `big_n`.
pub fn parse_term_with(src: &str, big_n: usize) -> Result<Term, ParseError> {
    Parser::new(src, Some(big_n))?.top_term()
}

pub fn parse_formula(src: &str) -> Result<Formula, ParseError> {
    let mut p = Parser::new(src, None)?;
    let f = p.formula()?;
    p.expect_end()?;
    Ok(f)
}

fn is_simple(t: &Term) -> bool {
    !matches!(t, Term::Sum { .. })
}

pub fn print_term(t: &Term) -> String {
    let mut s = String::new();
    write_term(&mut s, t);
    s
}

fn write_list(out: &mut String, items: &[Term]) {
    for (i, t) in items.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        write_term(out, t);
    }
}

fn write_term(out: &mut String, t: &Term) {
    use std::fmt::Write;
    match t {
        Term::Zero => out.push('0'),
        Term::One => out.push('1'),
        Term::Omega1 => out.push_str("w1"),
        Term::BigK => out.push('K'),
        Term::BigI => out.push('I'),
        Term::Sum { parts } => {
            let ones = parts.iter().rev().take_while(|p| **p == Term::One).count();
            let head = &parts[..parts.len() - ones];
            for (i, p) in head.iter().enumerate() {
                if i > 0 {
                    out.push_str(" + ");
                }
                write_term(out, p);
            }
            if ones > 0 {
                if !head.is_empty() {
                    out.push_str(" + ");
                }
                let _ = write!(out, "{ones}");
            }
        }
        Term::WExp { exponent } if **exponent == Term::One => out.push('w'),
        Term::WExp { exponent } => {
            out.push_str("w^");
            if is_simple(exponent) && !matches!(**exponent, Term::RegSucc { .. }) {
                write_term(out, exponent);
            } else {
                out.push('(');
                write_term(out, exponent);
                out.push(')');
            }
        }
        Term::Veblen { index, arg } => {
            out.push_str("phi(");
            write_term(out, index);
            out.push_str(", ");
            write_term(out, arg);
            out.push(')');
        }
        Term::RegSucc { base } if **base == Term::BigK => out.push_str("K+"),
        Term::RegSucc { base } => {
            out.push_str("reg+(");
            write_term(out, base);
            out.push(')');
        }
        Term::PsiReg { kappa, n, arg } => {
            out.push_str("psi(");
            write_term(out, kappa);
            let _ = write!(out, "; {n}; ");
            write_term(out, arg);
            out.push(')');
        }
        Term::PsiI { n, arg } => {
            let _ = write!(out, "psiI({n}; ");
            write_term(out, arg);
            out.push(')');
        }
        Term::PsiK {
            n,
            seq,
            theta,
            arg,
        } => {
            let _ = write!(out, "psiK({n}; [");
            write_list(out, &seq.0);
            out.push_str("]; {");
            write_list(out, theta.elements());
            out.push_str("}; ");
            write_term(out, arg);
            out.push(')');
        }
    }
}

fn fterm_str(t: &FTerm) -> String {
    match t {
        FTerm::Const(c) => print_term(c),
        FTerm::Var(v) => v.clone(),
    }
}

pub fn print_formula(f: &Formula) -> String {
    let mut s = String::new();
    write_formula(&mut s, f);
    s
}

fn write_operand(out: &mut String, f: &Formula, same: fn(&Formula) -> bool) {
    if f.is_literal() || same(f) {
        write_formula(out, f);
    } else {
        out.push('(');
        write_formula(out, f);
        out.push(')');
    }
}

fn write_formula(out: &mut String, f: &Formula) {
    use std::fmt::Write;
    let neg = |pos: &bool| if *pos { "" } else { "~" };
    match f {
        Formula::In { a, b, pos } => {
            let _ = write!(out, "{}in({}, {})", neg(pos), fterm_str(a), fterm_str(b));
        }
        Formula::P { args, pos } => {
            let _ = write!(
                out,
                "{}P({}, {}, {})",
                neg(pos),
                fterm_str(&args[0]),
                fterm_str(&args[1]),
                fterm_str(&args[2])
            );
        }
        Formula::PI { n, t, pos } => {
            let _ = write!(out, "{}PI({n}; {})", neg(pos), fterm_str(t));
        }
        Formula::Reg { t, pos } => {
            let _ = write!(out, "{}Reg({})", neg(pos), fterm_str(t));
        }
        Formula::R {
            tag,
            kappa,
            t,
            pos,
        } => {
            let _ = write!(
                out,
                "{}R(b#{tag}, {}; {})",
                neg(pos),
                print_term(kappa),
                fterm_str(t)
            );
        }
        Formula::X { i, t, pos } => {
            let _ = write!(out, "{}X({i}; {})", neg(pos), fterm_str(t));
        }
        Formula::Or { l, r } => {
            write_operand(out, l, |f| matches!(f, Formula::Or { .. }));
            out.push_str(" | ");
            write_operand(out, r, |_| false);
        }
        Formula::And { l, r } => {
            write_operand(out, l, |f| matches!(f, Formula::And { .. }));
            out.push_str(" & ");
            write_operand(out, r, |_| false);
        }
        Formula::ExB { var, bound, body } | Formula::AllB { var, bound, body } => {
            let q = if matches!(f, Formula::ExB { .. }) { "ex" } else { "all" };
            let b = match bound {
                Bound::Term(t) => print_term(t),
                Bound::LI => "LI".to_string(),
            };
            let _ = write!(out, "{q} {var}<{b}. ");
            write_formula(out, body);
        }
        Formula::Ex2 { var, kappa, body } | Formula::All2 { var, kappa, body } => {
            let q = if matches!(f, Formula::Ex2 { .. }) { "EX" } else { "ALL" };
            let _ = write!(out, "{q} X{var}<{}. ", print_term(kappa));
            write_formula(out, body);
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_formula(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mahlo::abgam;

    #[test]
    fn constants() {
        assert_eq!(parse_term("0").unwrap(), Term::Zero);
        assert_eq!(parse_term(" w1 ").unwrap(), Term::Omega1);
        assert_eq!(parse_term("3").unwrap(), Term::nat(3));
        assert_eq!(parse_term("w^0").unwrap(), Term::One);
    }

    #[test]
    fn b_one() {
        let t = parse_term("psi(K+;1; tower(0, I+1))").unwrap();
        assert_eq!(t, abgam(1, 2).unwrap().b);
    }

    #[test]
    fn increasing_sum_has_position() {
        let e = parse_term("phi(w1, 0) + K").unwrap_err();
        assert_eq!((e.line, e.col), (1, 1));
        assert!(e.message.contains("parts not non-increasing"), "{e}");
    }

    #[test]
    fn syntax_error_lists_expected() {
        let e = parse_term("phi(1 2)").unwrap_err();
        assert_eq!(e.col, 7);
        assert_eq!(e.expected, vec!["`,`".to_string()]);
    }

    #[test]
    fn omega_multiples() {
        let a = parse_term("w*3").unwrap();
        let b = parse_term("w * 3").unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_term("w*K").unwrap(), Term::BigK);
    }

    #[test]
    fn printing_round_trips() {
        for src in [
            "I + 2",
            "w^(I + 1)",
            "K+ + 1",
            "reg+(K+)",
            "psiK(1; [0, 0]; {0, K}; 1)",
            "phi(1, 0)",
            "w^(K+)",
        ] {
            let t = parse_term(src).unwrap();
            assert_eq!(print_term(&t), src);
            assert_eq!(parse_term(&print_term(&t)).unwrap(), t);
        }
    }

    #[test]
    fn formulas_round_trip() {
        for src in [
            "in(0, 1)",
            "ex x<I. in(K, x) & PI(1; x)",
            "~in(x, y) | (all y<LI. R(b#0, K; y))",
            "EX X0<K. X(0; 1) & ~Reg(w1)",
            "(ex x<K. in(x, 1)) & in(0, 1)",
        ] {
            let f = parse_formula(src).unwrap();
            assert_eq!(parse_formula(&print_formula(&f)).unwrap(), f, "{src}");
        }
    }

    #[test]
    fn negation_is_pushed_inward() {
        let f = parse_formula("~(in(0, 1) | in(1, 0))").unwrap();
        assert_eq!(print_formula(&f), "~in(0, 1) & ~in(1, 0)");
    }
}
