//! Recursive-descent parser for suite files.
//!
//! Comments run from `#` to end of line. The index grammar is deliberately
//! affine: anything else (such as `k*k`) is rejected with a dedicated error
//! rather than a generic syntax failure.

use super::ast::{
    AffineIndex, ExprTree, FamilyDecl, IndexDomain, Param, RelationDecl, SuiteAst,
};
use crate::text::{lex, Lexed, Parser, SyntaxError, Tok};
use num_bigint::BigInt;
use num_rational::BigRational;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("{0}")]
    Syntax(#[from] SyntaxError),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("unknown parameter {0:?}")]
    UnknownParam(String),
    #[error("line {line}, col {col}: non-affine index expression")]
    NonAffineIndex { line: usize, col: usize },
    #[error("duplicate declaration {0:?}")]
    Duplicate(String),
}

const MAX_EXPR_DEPTH: usize = 64;

/// Blank out comments while preserving source positions.
fn strip_comments(src: &str) -> String {
    let mut out = String::with_capacity(src.len());
    let mut in_comment = false;
    for ch in src.chars() {
        if ch == '\n' {
            in_comment = false;
            out.push('\n');
        } else if in_comment {
            out.push(' ');
        } else if ch == '#' {
            in_comment = true;
            out.push(' ');
        } else {
            out.push(ch);
        }
    }
    out
}

pub fn parse(src: &str) -> Result<SuiteAst, ParseError> {
    let cleaned = strip_comments(src);
    let toks = lex(&cleaned)?;
    let mut p = SuiteParser {
        inner: Parser::new(&toks),
    };
    let ast = p.parse_suite()?;
    validate(&ast)?;
    Ok(ast)
}

struct SuiteParser<'a> {
    inner: Parser<'a>,
}

impl<'a> SuiteParser<'a> {
    fn non_affine(&self) -> ParseError {
        let at = self.inner.peek();
        ParseError::NonAffineIndex {
            line: at.line,
            col: at.col,
        }
    }

    fn parse_suite(&mut self) -> Result<SuiteAst, ParseError> {
        let mut ast = SuiteAst::default();
        loop {
            match &self.inner.peek().tok {
                Tok::Eof => return Ok(ast),
                Tok::Ident(word) if word == "family" => {
                    self.inner.next_tok();
                    ast.families.push(self.parse_family_decl()?);
                }
                Tok::Ident(word) if word == "rel" => {
                    self.inner.next_tok();
                    ast.relations.push(self.parse_relation_decl()?);
                }
                _ => return Err(self.inner.error("'family' or 'rel'").into()),
            }
        }
    }

    fn parse_name(&mut self) -> Result<String, ParseError> {
        match self.inner.next_tok().tok {
            Tok::Ident(name) => Ok(name),
            _ => Err(self.inner.error("a name").into()),
        }
    }

    fn parse_family_decl(&mut self) -> Result<FamilyDecl, ParseError> {
        let name = self.parse_name()?;
        self.inner.expect(Tok::Colon)?;
        let domain = match self.inner.next_tok().tok {
            Tok::Ident(word) if word == "Z" => IndexDomain::Int,
            Tok::Ident(word) if word == "N" => {
                if self.inner.peek().tok == Tok::Plus {
                    self.inner.next_tok();
                    IndexDomain::PosNat
                } else {
                    IndexDomain::Nat
                }
            }
            _ => return Err(self.inner.error("'Z', 'N' or 'N+'").into()),
        };
        self.inner.expect(Tok::Semi)?;
        Ok(FamilyDecl { name, domain })
    }

    fn parse_relation_decl(&mut self) -> Result<RelationDecl, ParseError> {
        let name = self.parse_name()?;
        let mut params = Vec::new();
        if self.inner.peek().tok == Tok::LParen {
            self.inner.next_tok();
            loop {
                let pname = self.parse_name()?;
                let lower = if self.inner.peek().tok == Tok::Ge {
                    self.inner.next_tok();
                    self.inner.parse_sint()?
                } else {
                    0
                };
                params.push(Param { name: pname, lower });
                match self.inner.next_tok().tok {
                    Tok::Comma => continue,
                    Tok::RParen => break,
                    _ => return Err(self.inner.error("',' or ')'").into()),
                }
            }
        }
        self.inner.expect(Tok::Colon)?;
        let lhs = self.parse_expr(MAX_EXPR_DEPTH)?;
        self.inner.expect(Tok::Eq)?;
        let rhs = self.parse_expr(MAX_EXPR_DEPTH)?;
        self.inner.expect(Tok::Semi)?;
        Ok(RelationDecl {
            name,
            params,
            lhs,
            rhs,
        })
    }

    fn parse_expr(&mut self, depth: usize) -> Result<ExprTree, ParseError> {
        let mut negative = false;
        if self.inner.peek().tok == Tok::Minus {
            self.inner.next_tok();
            negative = true;
        }
        let mut acc = self.parse_term(negative, depth)?;
        loop {
            let negative = match self.inner.peek().tok {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => return Ok(acc),
            };
            self.inner.next_tok();
            let term = self.parse_term(negative, depth)?;
            acc = ExprTree::sum(acc, term);
        }
    }

    /// One signed term: an optional rational prefix folded together with the
    /// sign from the enclosing sum.
    fn parse_term(&mut self, negative: bool, depth: usize) -> Result<ExprTree, ParseError> {
        if let Tok::Int(_) = self.inner.peek().tok {
            // Either a scalar prefix `RATIONAL *` or the literal zero atom.
            let digits = match self.inner.next_tok().tok {
                Tok::Int(d) => d,
                _ => unreachable!(),
            };
            let numer: i64 = digits
                .parse()
                .map_err(|_| SyntaxError::from_parser(&self.inner, "an integer in range"))?;
            match self.inner.peek().tok {
                Tok::Slash => {
                    self.inner.next_tok();
                    let denom = match self.inner.next_tok().tok {
                        Tok::Int(d) => d
                            .parse::<i64>()
                            .map_err(|_| SyntaxError::from_parser(&self.inner, "an integer in range"))?,
                        _ => return Err(self.inner.error("denominator").into()),
                    };
                    if denom == 0 {
                        return Err(self.inner.error("a nonzero denominator").into());
                    }
                    self.inner.expect(Tok::Star)?;
                    let atom = self.parse_atom(depth)?;
                    let mut c = BigRational::new(BigInt::from(numer), BigInt::from(denom));
                    if negative {
                        c = -c;
                    }
                    Ok(ExprTree::scale(c, atom))
                }
                Tok::Star => {
                    self.inner.next_tok();
                    let atom = self.parse_atom(depth)?;
                    let mut c = BigRational::from_integer(BigInt::from(numer));
                    if negative {
                        c = -c;
                    }
                    Ok(ExprTree::scale(c, atom))
                }
                _ if numer == 0 => {
                    if negative {
                        Ok(ExprTree::scale(
                            BigRational::from_integer(BigInt::from(-1)),
                            ExprTree::Zero,
                        ))
                    } else {
                        Ok(ExprTree::Zero)
                    }
                }
                _ => Err(self.inner.error("'*' after a scalar literal").into()),
            }
        } else {
            let atom = self.parse_atom(depth)?;
            if negative {
                Ok(ExprTree::scale(
                    BigRational::from_integer(BigInt::from(-1)),
                    atom,
                ))
            } else {
                Ok(atom)
            }
        }
    }

    fn parse_atom(&mut self, depth: usize) -> Result<ExprTree, ParseError> {
        if depth == 0 {
            return Err(self
                .inner
                .error("a shallower expression (nesting too deep)")
                .into());
        }
        match self.inner.peek().tok.clone() {
            Tok::Ident(name) => {
                self.inner.next_tok();
                self.inner.expect(Tok::LParen)?;
                let index = self.parse_affine()?;
                self.inner.expect(Tok::RParen)?;
                Ok(ExprTree::generator(&name, index))
            }
            Tok::LBracket => {
                self.inner.next_tok();
                let lhs = self.parse_expr(depth - 1)?;
                self.inner.expect(Tok::Comma)?;
                let rhs = self.parse_expr(depth - 1)?;
                self.inner.expect(Tok::RBracket)?;
                Ok(ExprTree::bracket(lhs, rhs))
            }
            Tok::LParen => {
                self.inner.next_tok();
                let e = self.parse_expr(depth - 1)?;
                self.inner.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Int(digits) if digits == "0" => {
                self.inner.next_tok();
                Ok(ExprTree::Zero)
            }
            _ => Err(self.inner.error("generator, bracket, '0' or '('").into()),
        }
    }

    fn parse_affine(&mut self) -> Result<AffineIndex, ParseError> {
        let mut acc = AffineIndex::default();
        let mut negative = if self.inner.peek().tok == Tok::Minus {
            self.inner.next_tok();
            true
        } else {
            false
        };
        loop {
            let mut part = self.parse_affine_term()?;
            if negative {
                part.negate();
            }
            acc.add(&part);
            match self.inner.peek().tok {
                Tok::Plus => {
                    self.inner.next_tok();
                    negative = false;
                }
                Tok::Minus => {
                    self.inner.next_tok();
                    negative = true;
                }
                Tok::Star => return Err(self.non_affine()),
                _ => return Ok(acc),
            }
        }
    }

    fn parse_affine_term(&mut self) -> Result<AffineIndex, ParseError> {
        match self.inner.peek().tok.clone() {
            Tok::Ident(name) => {
                self.inner.next_tok();
                if self.inner.peek().tok == Tok::Star {
                    // A parameter can only be scaled by an integer on the left.
                    return Err(self.non_affine());
                }
                Ok(AffineIndex::param(&name))
            }
            Tok::Int(digits) => {
                self.inner.next_tok();
                let value: i64 = digits
                    .parse()
                    .map_err(|_| SyntaxError::from_parser(&self.inner, "an integer in range"))?;
                if self.inner.peek().tok == Tok::Star {
                    self.inner.next_tok();
                    match self.inner.peek().tok.clone() {
                        Tok::Ident(name) => {
                            self.inner.next_tok();
                            if self.inner.peek().tok == Tok::Star {
                                return Err(self.non_affine());
                            }
                            let mut idx = AffineIndex::default();
                            idx.add_multiple(&name, value);
                            Ok(idx)
                        }
                        _ => Err(self.non_affine()),
                    }
                } else {
                    Ok(AffineIndex::constant(value))
                }
            }
            _ => Err(self.inner.error("integer or parameter").into()),
        }
    }
}

impl SyntaxError {
    fn from_parser(p: &Parser<'_>, expected: &str) -> Self {
        let at: &Lexed = p.peek();
        SyntaxError {
            line: at.line,
            col: at.col,
            expected: expected.to_string(),
        }
    }
}

/// Check reference integrity: generator families declared, index parameters
/// bound, declarations unique.
fn validate(ast: &SuiteAst) -> Result<(), ParseError> {
    let mut seen = BTreeSet::new();
    for fam in &ast.families {
        if !seen.insert(fam.name.clone()) {
            return Err(ParseError::Duplicate(fam.name.clone()));
        }
    }
    let mut seen_rel = BTreeSet::new();
    for rel in &ast.relations {
        if !seen_rel.insert(rel.name.clone()) {
            return Err(ParseError::Duplicate(rel.name.clone()));
        }
        let declared: BTreeSet<&str> = rel.params.iter().map(|p| p.name.as_str()).collect();
        for side in [&rel.lhs, &rel.rhs] {
            for (family, index) in side.generators() {
                if ast.family(family).is_none() {
                    return Err(ParseError::UnknownFamily(family.to_string()));
                }
                for p in index.params() {
                    if !declared.contains(p) {
                        return Err(ParseError::UnknownParam(p.to_string()));
                    }
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::super::ast::render_suite;
    use super::*;

    #[test]
    fn parses_a_two_declaration_suite() {
        let ast = parse(
            "family W : Z; family Gt : N+;\n\
             rel com1(k,l): [W(-k), W(l+1)] = Gt(k+l+1);",
        )
        .unwrap();
        assert_eq!(ast.families.len(), 2);
        assert_eq!(ast.relations.len(), 1);
        assert_eq!(ast.families[1].domain, IndexDomain::PosNat);
        let rel = &ast.relations[0];
        assert_eq!(rel.params.len(), 2);
        assert_eq!(rel.lhs.render(), "[W(-k), W(l+1)]");
        assert_eq!(rel.rhs.render(), "Gt(k+l+1)");
    }

    #[test]
    fn rejects_quadratic_indices() {
        let err = parse("family W : Z; rel bad(k): [W(k*k), W(0)] = 0;").unwrap_err();
        assert!(matches!(err, ParseError::NonAffineIndex { .. }));
    }

    #[test]
    fn parses_nested_brackets_and_scalars() {
        let ast = parse(
            "family W : Z;\n\
             rel dg1: [W(0), [W(0), [W(0), W(1)]]] = 4*[W(0), W(1)];",
        )
        .unwrap();
        let rel = &ast.relations[0];
        assert!(rel.params.is_empty());
        assert_eq!(rel.rhs.render(), "4*[W(0), W(1)]");
    }

    #[test]
    fn reports_unknown_family_and_param() {
        assert_eq!(
            parse("family W : Z; rel r: [W(0), G(1)] = 0;").unwrap_err(),
            ParseError::UnknownFamily("G".to_string())
        );
        assert_eq!(
            parse("family W : Z; rel r(k): W(j) = 0;").unwrap_err(),
            ParseError::UnknownParam("j".to_string())
        );
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse("family W : Z;\nrel r(k): [W(k), W(0) = 0;").unwrap_err();
        match err {
            ParseError::Syntax(s) => assert_eq!(s.line, 2),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn comments_are_ignored() {
        let ast = parse(
            "# a comment line\n\
             family W : Z; # trailing comment\n\
             rel r(k): [W(k), W(0)] = 0; # done",
        )
        .unwrap();
        assert_eq!(ast.relations.len(), 1);
    }

    #[test]
    fn parameter_lower_bounds() {
        let ast = parse("family G : N+; rel r(k >= 1, l): [G(k), G(l+1)] = 0;").unwrap();
        assert_eq!(ast.relations[0].params[0].lower, 1);
        assert_eq!(ast.relations[0].params[1].lower, 0);
    }

    #[test]
    fn render_parse_round_trip() {
        let src = "family W : Z;\n\
                   family Gt : N+;\n\
                   rel com1(k, l): [W(-k), W(l+1)] = Gt(k+l+1);\n\
                   rel com2(k >= 1): [Gt(k), W(0)] = 4*W(-k) - 4*W(k) + 1/2*[W(0), W(1)];\n\
                   rel zero(k): [W(k), W(k)] = 0;\n";
        let ast = parse(src).unwrap();
        let rendered = render_suite(&ast);
        let reparsed = parse(&rendered).unwrap();
        assert_eq!(ast, reparsed);
    }
}
