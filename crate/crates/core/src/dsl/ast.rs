//! Syntax tree of the relation language.
//!
//! A suite declares indexed generator families and bracket relations whose
//! indices are integer-affine forms in the relation parameters. Rendering is
//! canonical: `parse(render(ast)) == ast`.

use num_rational::BigRational;
use num_traits::{One, Signed};
use std::collections::BTreeMap;
use std::fmt;

/// Index domain of a declared family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexDomain {
    /// All integers (`Z`).
    Int,
    /// Non-negative integers (`N`).
    Nat,
    /// Positive integers (`N+`).
    PosNat,
}

impl IndexDomain {
    pub fn keyword(&self) -> &'static str {
        match self {
            IndexDomain::Int => "Z",
            IndexDomain::Nat => "N",
            IndexDomain::PosNat => "N+",
        }
    }

    pub fn contains(&self, index: i64) -> bool {
        match self {
            IndexDomain::Int => true,
            IndexDomain::Nat => index >= 0,
            IndexDomain::PosNat => index >= 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyDecl {
    pub name: String,
    pub domain: IndexDomain,
}

/// A relation parameter with its lower instantiation bound (0 by default).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Param {
    pub name: String,
    pub lower: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationDecl {
    pub name: String,
    pub params: Vec<Param>,
    pub lhs: ExprTree,
    pub rhs: ExprTree,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SuiteAst {
    pub families: Vec<FamilyDecl>,
    pub relations: Vec<RelationDecl>,
}

impl SuiteAst {
    pub fn family(&self, name: &str) -> Option<&FamilyDecl> {
        self.families.iter().find(|f| f.name == name)
    }
}

/// An integer-affine form `constant + sum(coeff * param)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AffineIndex {
    pub constant: i64,
    pub coeffs: BTreeMap<String, i64>,
}

impl AffineIndex {
    pub fn constant(value: i64) -> Self {
        AffineIndex {
            constant: value,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn param(name: &str) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(name.to_string(), 1);
        AffineIndex {
            constant: 0,
            coeffs,
        }
    }

    pub fn add_multiple(&mut self, name: &str, coeff: i64) {
        let entry = self.coeffs.entry(name.to_string()).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.coeffs.remove(name);
        }
    }

    pub fn negate(&mut self) {
        self.constant = -self.constant;
        for c in self.coeffs.values_mut() {
            *c = -*c;
        }
    }

    pub fn add(&mut self, other: &AffineIndex) {
        self.constant += other.constant;
        for (name, c) in &other.coeffs {
            self.add_multiple(name, *c);
        }
    }

    /// Free parameter names referenced by the form.
    pub fn params(&self) -> impl Iterator<Item = &str> {
        self.coeffs.keys().map(|s| s.as_str())
    }

    pub fn eval(&self, env: &BTreeMap<String, i64>) -> Option<i64> {
        let mut total = self.constant;
        for (name, coeff) in &self.coeffs {
            let value = *env.get(name)?;
            total = total.checked_add(coeff.checked_mul(value)?)?;
        }
        Some(total)
    }
}

impl fmt::Display for AffineIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, &coeff) in &self.coeffs {
            if coeff == 0 {
                continue;
            }
            if first {
                if coeff < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if coeff < 0 { "-" } else { "+" })?;
            }
            if coeff.abs() != 1 {
                write!(f, "{}*", coeff.abs())?;
            }
            write!(f, "{name}")?;
            first = false;
        }
        if self.constant != 0 || first {
            if first {
                write!(f, "{}", self.constant)?;
            } else if self.constant < 0 {
                write!(f, "-{}", -self.constant)?;
            } else {
                write!(f, "+{}", self.constant)?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprTree {
    Zero,
    Generator {
        family: String,
        index: AffineIndex,
    },
    Bracket(Box<ExprTree>, Box<ExprTree>),
    Scale(BigRational, Box<ExprTree>),
    Sum(Box<ExprTree>, Box<ExprTree>),
}

impl ExprTree {
    pub fn generator(family: &str, index: AffineIndex) -> Self {
        ExprTree::Generator {
            family: family.to_string(),
            index,
        }
    }

    pub fn bracket(lhs: ExprTree, rhs: ExprTree) -> Self {
        ExprTree::Bracket(Box::new(lhs), Box::new(rhs))
    }

    pub fn scale(c: BigRational, e: ExprTree) -> Self {
        ExprTree::Scale(c, Box::new(e))
    }

    pub fn sum(lhs: ExprTree, rhs: ExprTree) -> Self {
        ExprTree::Sum(Box::new(lhs), Box::new(rhs))
    }

    /// Every generator reference in the tree.
    pub fn generators(&self) -> Vec<(&str, &AffineIndex)> {
        let mut out = Vec::new();
        self.collect_generators(&mut out);
        out
    }

    fn collect_generators<'a>(&'a self, out: &mut Vec<(&'a str, &'a AffineIndex)>) {
        match self {
            ExprTree::Zero => {}
            ExprTree::Generator { family, index } => out.push((family, index)),
            ExprTree::Bracket(l, r) | ExprTree::Sum(l, r) => {
                l.collect_generators(out);
                r.collect_generators(out);
            }
            ExprTree::Scale(_, e) => e.collect_generators(out),
        }
    }

    /// Render in atom position: sums and scalings need parentheses there.
    fn render_atom(&self) -> String {
        match self {
            ExprTree::Zero => "0".to_string(),
            ExprTree::Generator { family, index } => format!("{family}({index})"),
            ExprTree::Bracket(l, r) => format!("[{}, {}]", l.render(), r.render()),
            ExprTree::Sum(..) | ExprTree::Scale(..) => format!("({})", self.render()),
        }
    }

    /// Render in term position: a scaling prints its rational prefix.
    /// Returns the sign separately so sums can join with `+`/`-`.
    fn render_term(&self) -> (bool, String) {
        match self {
            ExprTree::Scale(c, e) => {
                let negative = c.is_negative();
                let abs = if negative { -c.clone() } else { c.clone() };
                if abs.is_one() && !matches!(**e, ExprTree::Sum(..) | ExprTree::Scale(..)) {
                    (negative, e.render_atom())
                } else {
                    (negative, format!("{}*{}", abs, e.render_atom()))
                }
            }
            other => (false, other.render_atom()),
        }
    }

    pub fn render(&self) -> String {
        match self {
            ExprTree::Sum(l, r) => {
                let left = l.render();
                let (neg, right) = r.render_term();
                format!("{} {} {}", left, if neg { "-" } else { "+" }, right)
            }
            other => {
                let (neg, text) = other.render_term();
                if neg {
                    format!("-{text}")
                } else {
                    text
                }
            }
        }
    }
}

impl fmt::Display for ExprTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Canonical text of a whole suite.
pub fn render_suite(ast: &SuiteAst) -> String {
    let mut out = String::new();
    for fam in &ast.families {
        out.push_str(&format!("family {} : {};\n", fam.name, fam.domain.keyword()));
    }
    for rel in &ast.relations {
        let params = if rel.params.is_empty() {
            String::new()
        } else {
            let inner = rel
                .params
                .iter()
                .map(|p| {
                    if p.lower == 0 {
                        p.name.clone()
                    } else {
                        format!("{} >= {}", p.name, p.lower)
                    }
                })
                .collect::<Vec<_>>()
                .join(", ");
            format!("({inner})")
        };
        out.push_str(&format!(
            "rel {}{params}: {} = {};\n",
            rel.name,
            rel.lhs.render(),
            rel.rhs.render()
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn affine_rendering() {
        let mut idx = AffineIndex::param("k");
        idx.add_multiple("l", 1);
        idx.constant = 1;
        assert_eq!(idx.to_string(), "k+l+1");
        idx.negate();
        assert_eq!(idx.to_string(), "-k-l-1");
        assert_eq!(AffineIndex::constant(0).to_string(), "0");
        let mut two_k = AffineIndex::default();
        two_k.add_multiple("k", 2);
        two_k.constant = -1;
        assert_eq!(two_k.to_string(), "2*k-1");
    }

    #[test]
    fn affine_eval() {
        let mut idx = AffineIndex::param("k");
        idx.add_multiple("l", -1);
        let mut env = BTreeMap::new();
        env.insert("k".to_string(), 5);
        env.insert("l".to_string(), 2);
        assert_eq!(idx.eval(&env), Some(3));
        env.remove("l");
        assert_eq!(idx.eval(&env), None);
    }

    #[test]
    fn expr_rendering() {
        let g = |f: &str, k: i64| ExprTree::generator(f, AffineIndex::constant(k));
        let e = ExprTree::sum(
            ExprTree::bracket(g("W", 0), g("W", 1)),
            ExprTree::scale(
                BigRational::from_integer(BigInt::from(-4)),
                g("W", 2),
            ),
        );
        assert_eq!(e.render(), "[W(0), W(1)] - 4*W(2)");
    }
}
