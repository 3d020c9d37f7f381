//! Instantiation of parsed relation suites against the concrete matrix
//! families.
//!
//! Every relation is evaluated at every admissible parameter tuple up to the
//! requested bound; left minus right must be the zero matrix. Out-of-range
//! generator indices (such as a G-type family at index 0) skip the instance
//! and are reported, never fatal.

use super::ast::{ExprTree, RelationDecl, SuiteAst};
use crate::gaussian::GaussianRational;
use crate::loop_algebra::{bracket, family, FamilyTag, LoopElement};
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SuiteError {
    #[error("no binding for family {0:?}")]
    UnboundFamily(String),
}

/// Maps each declared family name to a concrete matrix family.
#[derive(Clone, Debug, Default)]
pub struct Bindings {
    map: BTreeMap<String, FamilyTag>,
}

impl Bindings {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn bind(mut self, name: &str, tag: FamilyTag) -> Self {
        self.map.insert(name.to_string(), tag);
        self
    }

    pub fn get(&self, name: &str) -> Option<FamilyTag> {
        self.map.get(name).copied()
    }

    /// Bind every declared family to the tag of the same name.
    pub fn identity_for(ast: &SuiteAst) -> Result<Self, SuiteError> {
        let mut b = Bindings::new();
        for fam in &ast.families {
            let tag = FamilyTag::by_name(&fam.name)
                .ok_or_else(|| SuiteError::UnboundFamily(fam.name.clone()))?;
            b.map.insert(fam.name.clone(), tag);
        }
        Ok(b)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum InstanceStatus {
    Pass,
    Fail,
    Skipped,
}

/// One relation instance: the relation name, the parameter tuple, and the
/// outcome. Failures carry the rendered nonzero matrix as a witness.
#[derive(Clone, Debug, Serialize)]
pub struct InstanceReport {
    pub relation: String,
    pub params: BTreeMap<String, i64>,
    pub status: InstanceStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteReport {
    pub instances: Vec<InstanceReport>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.instances
            .iter()
            .all(|i| i.status != InstanceStatus::Fail)
    }

    pub fn count(&self, status: InstanceStatus) -> usize {
        self.instances
            .iter()
            .filter(|i| i.status == status)
            .count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &InstanceReport> {
        self.instances
            .iter()
            .filter(|i| i.status == InstanceStatus::Fail)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(&self.instances).expect("report serializes")
    }
}

enum EvalOutcome {
    Element(LoopElement),
    Skip(String),
}

fn eval_expr(
    expr: &ExprTree,
    ast: &SuiteAst,
    bindings: &Bindings,
    env: &BTreeMap<String, i64>,
) -> Result<EvalOutcome, SuiteError> {
    Ok(match expr {
        ExprTree::Zero => EvalOutcome::Element(LoopElement::zero()),
        ExprTree::Generator { family: name, index } => {
            let decl = ast
                .family(name)
                .ok_or_else(|| SuiteError::UnboundFamily(name.clone()))?;
            let tag = bindings
                .get(name)
                .ok_or_else(|| SuiteError::UnboundFamily(name.clone()))?;
            let idx = match index.eval(env) {
                Some(i) => i,
                None => {
                    return Ok(EvalOutcome::Skip(format!(
                        "index {index} does not evaluate"
                    )))
                }
            };
            if !decl.domain.contains(idx) {
                return Ok(EvalOutcome::Skip(format!(
                    "{name}({idx}) outside the declared domain {}",
                    decl.domain.keyword()
                )));
            }
            match family(tag, idx) {
                Ok(elem) => EvalOutcome::Element(elem),
                Err(err) => EvalOutcome::Skip(err.to_string()),
            }
        }
        ExprTree::Bracket(l, r) => {
            let l = eval_expr(l, ast, bindings, env)?;
            let r = eval_expr(r, ast, bindings, env)?;
            match (l, r) {
                (EvalOutcome::Element(a), EvalOutcome::Element(b)) => {
                    EvalOutcome::Element(bracket(&a, &b))
                }
                (EvalOutcome::Skip(s), _) | (_, EvalOutcome::Skip(s)) => EvalOutcome::Skip(s),
            }
        }
        ExprTree::Scale(c, e) => match eval_expr(e, ast, bindings, env)? {
            EvalOutcome::Element(a) => {
                EvalOutcome::Element(a.scale(&GaussianRational::from_rational(c.clone())))
            }
            skip => skip,
        },
        ExprTree::Sum(l, r) => {
            let l = eval_expr(l, ast, bindings, env)?;
            let r = eval_expr(r, ast, bindings, env)?;
            match (l, r) {
                (EvalOutcome::Element(a), EvalOutcome::Element(b)) => {
                    EvalOutcome::Element(&a + &b)
                }
                (EvalOutcome::Skip(s), _) | (_, EvalOutcome::Skip(s)) => EvalOutcome::Skip(s),
            }
        }
    })
}

/// Public single-expression evaluation, used by tests and tooling.
pub fn eval_instance(
    expr: &ExprTree,
    ast: &SuiteAst,
    bindings: &Bindings,
    env: &BTreeMap<String, i64>,
) -> Result<Option<LoopElement>, SuiteError> {
    Ok(match eval_expr(expr, ast, bindings, env)? {
        EvalOutcome::Element(e) => Some(e),
        EvalOutcome::Skip(_) => None,
    })
}

fn param_tuples(rel: &RelationDecl, kmax: i64) -> Vec<BTreeMap<String, i64>> {
    let mut tuples = vec![BTreeMap::new()];
    for p in &rel.params {
        let mut next = Vec::new();
        for tuple in &tuples {
            for value in p.lower..=kmax {
                let mut t = tuple.clone();
                t.insert(p.name.clone(), value);
                next.push(t);
            }
        }
        tuples = next;
    }
    tuples
}

/// Evaluate every relation of the suite over all parameter tuples in
/// `[lower, kmax]^arity` and report each instance. The report is sorted by
/// relation name, then parameters.
pub fn instantiate_and_check(
    ast: &SuiteAst,
    bindings: &Bindings,
    kmax: i64,
) -> Result<SuiteReport, SuiteError> {
    let mut instances = Vec::new();
    for rel in &ast.relations {
        for env in param_tuples(rel, kmax) {
            let lhs = eval_expr(&rel.lhs, ast, bindings, &env)?;
            let rhs = eval_expr(&rel.rhs, ast, bindings, &env)?;
            let (status, witness, note) = match (lhs, rhs) {
                (EvalOutcome::Element(a), EvalOutcome::Element(b)) => {
                    let diff = &a - &b;
                    if diff.is_zero() {
                        (InstanceStatus::Pass, None, None)
                    } else {
                        (InstanceStatus::Fail, Some(diff.to_string()), None)
                    }
                }
                (EvalOutcome::Skip(s), _) | (_, EvalOutcome::Skip(s)) => {
                    (InstanceStatus::Skipped, None, Some(s))
                }
            };
            instances.push(InstanceReport {
                relation: rel.name.clone(),
                params: env,
                status,
                witness,
                note,
            });
        }
    }
    instances.sort_by(|a, b| {
        a.relation
            .cmp(&b.relation)
            .then_with(|| a.params.cmp(&b.params))
    });
    Ok(SuiteReport { instances })
}

#[cfg(test)]
mod tests {
    use super::super::parser::parse;
    use super::*;

    #[test]
    fn onsager_wg_relations_hold() {
        let ast = parse(
            "family W : Z; family Gt : N+;\n\
             rel com1(k,l): [W(-k), W(l+1)] = Gt(k+l+1);\n\
             rel com2(k,l): [Gt(k+1), W(-l)] = 4*W(-k-l-1) - 4*W(k+l+1);",
        )
        .unwrap();
        let bindings = Bindings::identity_for(&ast).unwrap();
        let report = instantiate_and_check(&ast, &bindings, 3).unwrap();
        assert!(report.all_passed());
        assert_eq!(report.count(InstanceStatus::Pass), 2 * 16);
        assert_eq!(report.count(InstanceStatus::Skipped), 0);
    }

    #[test]
    fn perturbed_coefficient_is_flagged() {
        let ast = parse(
            "family W : Z; family Gt : N+;\n\
             rel com2(k,l): [Gt(k+1), W(-l)] = 5*W(-k-l-1) - 4*W(k+l+1);",
        )
        .unwrap();
        let bindings = Bindings::identity_for(&ast).unwrap();
        let report = instantiate_and_check(&ast, &bindings, 2).unwrap();
        assert!(!report.all_passed());
        assert_eq!(report.count(InstanceStatus::Fail), 9);
        assert!(report.failures().all(|f| f.witness.is_some()));
    }

    #[test]
    fn out_of_range_instances_skip() {
        // Gt(k) hits index 0 at k = 0.
        let ast = parse("family W : Z; family Gt : N+; rel r(k): [Gt(k), W(0)] = 0;").unwrap();
        let bindings = Bindings::identity_for(&ast).unwrap();
        let report = instantiate_and_check(&ast, &bindings, 2).unwrap();
        assert_eq!(report.count(InstanceStatus::Skipped), 1);
        // [Gt(k), W(0)] is not zero for k >= 1, so those instances fail;
        // skipping must not hide them.
        assert_eq!(report.count(InstanceStatus::Fail), 2);
    }

    #[test]
    fn evaluation_is_linear() {
        let ast = parse(
            "family W : Z;\n\
             rel r(k): [W(k), W(0)] + 2*W(k) = 0;",
        )
        .unwrap();
        let bindings = Bindings::identity_for(&ast).unwrap();
        let env: BTreeMap<String, i64> = [("k".to_string(), 2)].into();
        let rel = &ast.relations[0];
        let whole = eval_instance(&rel.lhs, &ast, &bindings, &env)
            .unwrap()
            .unwrap();
        let (left, right) = match &rel.lhs {
            ExprTree::Sum(l, r) => (
                eval_instance(l, &ast, &bindings, &env).unwrap().unwrap(),
                eval_instance(r, &ast, &bindings, &env).unwrap().unwrap(),
            ),
            _ => panic!("expected a sum"),
        };
        assert_eq!(whole, &left + &right);
    }

    #[test]
    fn binding_to_other_families() {
        // The W relations hold verbatim for the extended W family.
        let ast = parse("family W : Z; rel r(k,l): [W(-k), W(-l)] = 0;").unwrap();
        let bindings = Bindings::new().bind("W", FamilyTag::CW);
        let report = instantiate_and_check(&ast, &bindings, 3).unwrap();
        assert!(report.all_passed());
    }

    #[test]
    fn missing_binding_is_an_error() {
        let ast = parse("family Q : Z; rel r(k): [Q(k), Q(0)] = 0;").unwrap();
        assert!(Bindings::identity_for(&ast).is_err());
        let report = instantiate_and_check(&ast, &Bindings::new(), 1);
        assert_eq!(report.unwrap_err(), SuiteError::UnboundFamily("Q".into()));
    }
}
