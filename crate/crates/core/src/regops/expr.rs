use std::fmt;

use super::{
    catenation_k, left_quotient, left_quotient_of_star, op_catenation, op_intersection, op_reversal,
    op_star, op_union, star_of_left_quotient,
};
use crate::automata::{Automaton, Dfa, Recognizer};
use crate::error::{Error, Result};

/// The operations an expression node can apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OpKind {
    Union,
    Intersection,
    Catenation,
    Star,
    Reversal,
    LeftQuotient,
    StarOfLeftQuotient,
    LeftQuotientOfStar,
    CatenationK,
}

impl OpKind {
    pub const ALL: [OpKind; 9] = [
        OpKind::Union,
        OpKind::Intersection,
        OpKind::Catenation,
        OpKind::Star,
        OpKind::Reversal,
        OpKind::LeftQuotient,
        OpKind::StarOfLeftQuotient,
        OpKind::LeftQuotientOfStar,
        OpKind::CatenationK,
    ];

    /// Short name used in the textual form.
    pub fn name(self) -> &'static str {
        match self {
            OpKind::Union => "union",
            OpKind::Intersection => "inter",
            OpKind::Catenation => "cat",
            OpKind::Star => "star",
            OpKind::Reversal => "rev",
            OpKind::LeftQuotient => "lq",
            OpKind::StarOfLeftQuotient => "slq",
            OpKind::LeftQuotientOfStar => "lqs",
            OpKind::CatenationK => "catk",
        }
    }

    /// Accepts the short names and the long ones (`intersection`,
    /// `left_quotient_of_star`, …).
    pub fn parse(name: &str) -> Option<OpKind> {
        Some(match name {
            "union" => OpKind::Union,
            "inter" | "intersection" => OpKind::Intersection,
            "cat" | "catenation" => OpKind::Catenation,
            "star" => OpKind::Star,
            "rev" | "reversal" => OpKind::Reversal,
            "lq" | "left_quotient" => OpKind::LeftQuotient,
            "slq" | "star_of_left_quotient" => OpKind::StarOfLeftQuotient,
            "lqs" | "left_quotient_of_star" => OpKind::LeftQuotientOfStar,
            "catk" | "catenation_k" => OpKind::CatenationK,
            _ => return None,
        })
    }

    fn arity_ok(self, n: usize) -> bool {
        match self {
            OpKind::Star | OpKind::Reversal => n == 1,
            OpKind::Catenation | OpKind::CatenationK => n >= 2,
            _ => n == 2,
        }
    }

    fn arity_text(self) -> &'static str {
        match self {
            OpKind::Star | OpKind::Reversal => "exactly one argument",
            OpKind::Catenation | OpKind::CatenationK => "at least two arguments",
            _ => "exactly two arguments",
        }
    }
}

impl fmt::Display for OpKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An operation tree whose leaves are automaton references of type `L`:
/// file paths on the command line, argument slots in the search harness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OpExpr<L> {
    Leaf(L),
    Node { kind: OpKind, args: Vec<OpExpr<L>> },
}

impl<L> OpExpr<L> {
    /// Builds a node, checking the arity.
    pub fn node(kind: OpKind, args: Vec<OpExpr<L>>) -> Result<Self> {
        if !kind.arity_ok(args.len()) {
            return Err(crate::error::invalid(format!(
                "{kind} takes {}, got {}",
                kind.arity_text(),
                args.len()
            )));
        }
        Ok(OpExpr::Node { kind, args })
    }

    /// The leaves in left-to-right order.
    pub fn leaves(&self) -> Vec<&L> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a L>) {
        match self {
            OpExpr::Leaf(l) => out.push(l),
            OpExpr::Node { args, .. } => args.iter().for_each(|a| a.collect_leaves(out)),
        }
    }

    /// Replaces every leaf through `f`, keeping the shape.
    pub fn map_leaves<M>(&self, f: &mut impl FnMut(&L) -> M) -> OpExpr<M> {
        match self {
            OpExpr::Leaf(l) => OpExpr::Leaf(f(l)),
            OpExpr::Node { kind, args } => OpExpr::Node {
                kind: *kind,
                args: args.iter().map(|a| a.map_leaves(f)).collect(),
            },
        }
    }
}

impl OpExpr<String> {
    /// Parses the textual form `kind(arg, …)` where an argument is either a
    /// nested expression or a file reference `@path`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut p = Parser { text, pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != text.len() {
            return Err(p.error("trailing input"));
        }
        Ok(e)
    }
}

impl<L: fmt::Display> fmt::Display for OpExpr<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OpExpr::Leaf(l) => write!(f, "@{l}"),
            OpExpr::Node { kind, args } => {
                write!(f, "{kind}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    a.fmt(f)?;
                }
                f.write_str(")")
            }
        }
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &str {
        let start = self.pos;
        let len = self.rest().find(|c| !pred(c)).unwrap_or(self.rest().len());
        self.pos += len;
        &self.text[start..self.pos]
    }

    fn expr(&mut self) -> Result<OpExpr<String>> {
        self.skip_ws();
        if self.eat('@') {
            let path = self.take_while(|c| !matches!(c, ',' | ')' | '(') && !c.is_whitespace());
            if path.is_empty() {
                return Err(self.error("expected a file path after `@`"));
            }
            return Ok(OpExpr::Leaf(path.to_owned()));
        }
        let at = self.pos;
        let name = self.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
        if name.is_empty() {
            return Err(self.error("expected an operation name or `@file`"));
        }
        let kind = OpKind::parse(name).ok_or_else(|| Error::Parse {
            offset: at,
            message: format!("unknown operation `{name}`"),
        })?;
        if !self.eat('(') {
            return Err(self.error("expected `(`"));
        }
        let mut args = vec![self.expr()?];
        while self.eat(',') {
            args.push(self.expr()?);
        }
        if !self.eat(')') {
            return Err(self.error("expected `,` or `)`"));
        }
        if !kind.arity_ok(args.len()) {
            return Err(Error::Parse {
                offset: at,
                message: format!("{kind} takes {}, got {}", kind.arity_text(), args.len()),
            });
        }
        Ok(OpExpr::Node { kind, args })
    }
}

fn dfa_of(a: Automaton) -> Dfa {
    match a {
        Automaton::Dfa(d) => d,
        n => n.to_dfa(),
    }
}

/// Evaluates an expression, resolving each leaf through `resolve`.
///
/// Arguments that must be DFAs (Boolean operations, quotient languages,
/// k-catenation) are determinized when they come out of a sub-expression
/// as NFAs. Each node returns exactly what its construction builds.
pub fn eval<L>(expr: &OpExpr<L>, resolve: &mut impl FnMut(&L) -> Result<Automaton>) -> Result<Automaton> {
    let (kind, args) = match expr {
        OpExpr::Leaf(l) => return resolve(l),
        OpExpr::Node { kind, args } => (*kind, args),
    };
    let vals = args
        .iter()
        .map(|a| eval(a, resolve))
        .collect::<Result<Vec<_>>>()?;
    Ok(match kind {
        OpKind::Star => op_star(&vals[0]).into(),
        OpKind::Reversal => op_reversal(&vals[0]).into(),
        OpKind::Catenation if vals.len() == 2 => op_catenation(&vals[0], &vals[1])?.into(),
        _ => {
            let ds: Vec<Dfa> = vals.into_iter().map(dfa_of).collect();
            match kind {
                OpKind::Union => op_union(&ds[0], &ds[1])?.into(),
                OpKind::Intersection => op_intersection(&ds[0], &ds[1])?.into(),
                OpKind::LeftQuotient => left_quotient(&ds[0], &ds[1])?.into(),
                OpKind::StarOfLeftQuotient => star_of_left_quotient(&ds[0], &ds[1])?.into(),
                OpKind::LeftQuotientOfStar => left_quotient_of_star(&ds[0], &ds[1])?.into(),
                _ => catenation_k(&ds)?.into(),
            }
        }
    })
}
