//! Green's relations ℛ, ℒ, 𝒟, the natural preorder/partial order, quotient
//! algebras, handedness tests, and the two decomposition theorems: every
//! 𝒟-class is a maximal rectangular subalgebra with S/𝒟 the maximal lattice
//! image, and x ↦ (ℛ_x, ℒ_x) is an isomorphism onto the fibered product
//! S/ℛ ×_{S/𝒟} S/ℒ.

use crate::algebra::{ElementId, FiniteSkewLattice, OpTable};
use crate::subalg;
use thiserror::Error;

/// A partition of the carrier with a constant-time class lookup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceRelation {
    order: usize,
    class_of: Vec<usize>,
    classes: Vec<Vec<ElementId>>,
}

impl EquivalenceRelation {
    /// Builds the partition induced by `related`, verifying along the way
    /// that `related` is in fact an equivalence.
    pub fn from_predicate(
        order: usize,
        related: impl Fn(ElementId, ElementId) -> bool,
    ) -> Result<Self, StructureError> {
        let mut class_of = vec![usize::MAX; order];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for a in 0..order {
            if class_of[a] != usize::MAX {
                continue;
            }
            let idx = classes.len();
            let mut cls = vec![a];
            class_of[a] = idx;
            for b in a + 1..order {
                if class_of[b] == usize::MAX && related(a, b) {
                    class_of[b] = idx;
                    cls.push(b);
                }
            }
            classes.push(cls);
        }
        for a in 0..order {
            for b in 0..order {
                if related(a, b) != (class_of[a] == class_of[b]) {
                    return Err(StructureError::NotAnEquivalence { a, b });
                }
            }
        }
        Ok(EquivalenceRelation {
            order,
            class_of,
            classes,
        })
    }

    pub fn identity(order: usize) -> Self {
        EquivalenceRelation {
            order,
            class_of: (0..order).collect(),
            classes: (0..order).map(|x| vec![x]).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn related(&self, a: ElementId, b: ElementId) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    pub fn class_of(&self, a: ElementId) -> usize {
        self.class_of[a]
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn members(&self, class: usize) -> &[ElementId] {
        &self.classes[class]
    }

    pub fn classes(&self) -> &[Vec<ElementId>] {
        &self.classes
    }

    pub fn is_identity(&self) -> bool {
        self.classes.len() == self.order
    }

    fn is_congruence(&self, alg: &FiniteSkewLattice) -> Option<(ElementId, ElementId, ElementId)> {
        // a ~ b must give a∧c ~ b∧c, c∧a ~ c∧b, and the same for ∨.
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                if !self.related(a, b) {
                    continue;
                }
                for c in 0..n {
                    let ok = self.related(alg.meet(a, c), alg.meet(b, c))
                        && self.related(alg.meet(c, a), alg.meet(c, b))
                        && self.related(alg.join(a, c), alg.join(b, c))
                        && self.related(alg.join(c, a), alg.join(c, b));
                    if !ok {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructureError {
    #[error("relation is not an equivalence at ({a}, {b})")]
    NotAnEquivalence { a: ElementId, b: ElementId },
    #[error("the two defining forms of {relation} disagree at ({a}, {b})")]
    DefinitionMismatch {
        relation: &'static str,
        a: ElementId,
        b: ElementId,
    },
    #[error("{relation} is not a congruence: witness ({a}, {b}) with context {c}")]
    NotACongruence {
        relation: &'static str,
        a: ElementId,
        b: ElementId,
        c: ElementId,
    },
    #[error("composition law ℒ∘ℛ = ℛ∘ℒ = 𝒟 fails at ({a}, {b})")]
    CompositionMismatch { a: ElementId, b: ElementId },
    #[error("ℒ ∩ ℛ is not the identity relation: ({a}, {b})")]
    IntersectionNotTrivial { a: ElementId, b: ElementId },
}

/// All three Green's relations, computed definitionally and verified to be
/// congruences satisfying ℒ∘ℛ = ℛ∘ℒ = 𝒟 and ℒ∩ℛ = Δ.
#[derive(Clone, Debug)]
pub struct GreenStructure {
    pub r: EquivalenceRelation,
    pub l: EquivalenceRelation,
    pub d: EquivalenceRelation,
}

pub fn green(alg: &FiniteSkewLattice) -> Result<GreenStructure, StructureError> {
    let n = alg.order();

    let r_meet = |a: usize, b: usize| alg.meet(a, b) == b && alg.meet(b, a) == a;
    let r_join = |a: usize, b: usize| alg.join(a, b) == a && alg.join(b, a) == b;
    let l_meet = |a: usize, b: usize| alg.meet(a, b) == a && alg.meet(b, a) == b;
    let l_join = |a: usize, b: usize| alg.join(a, b) == b && alg.join(b, a) == a;
    let d_meet = |a: usize, b: usize| {
        alg.meet(alg.meet(a, b), a) == a && alg.meet(alg.meet(b, a), b) == b
    };
    let d_join = |a: usize, b: usize| {
        alg.join(alg.join(a, b), a) == a && alg.join(alg.join(b, a), b) == b
    };

    for (name, f, g) in [
        ("ℛ", &r_meet as &dyn Fn(usize, usize) -> bool, &r_join as &dyn Fn(usize, usize) -> bool),
        ("ℒ", &l_meet, &l_join),
        ("𝒟", &d_meet, &d_join),
    ] {
        for a in 0..n {
            for b in 0..n {
                if f(a, b) != g(a, b) {
                    return Err(StructureError::DefinitionMismatch { relation: name, a, b });
                }
            }
        }
    }

    let r = EquivalenceRelation::from_predicate(n, r_meet)?;
    let l = EquivalenceRelation::from_predicate(n, l_meet)?;
    let d = EquivalenceRelation::from_predicate(n, d_meet)?;

    for (name, rel) in [("ℛ", &r), ("ℒ", &l), ("𝒟", &d)] {
        if let Some((a, b, c)) = rel.is_congruence(alg) {
            return Err(StructureError::NotACongruence {
                relation: name,
                a,
                b,
                c,
            });
        }
    }

    // ℒ∘ℛ = ℛ∘ℒ = 𝒟 and ℒ∩ℛ = Δ.
    for a in 0..n {
        for b in 0..n {
            let lr = (0..n).any(|m| l.related(a, m) && r.related(m, b));
            let rl = (0..n).any(|m| r.related(a, m) && l.related(m, b));
            if lr != d.related(a, b) || rl != d.related(a, b) {
                return Err(StructureError::CompositionMismatch { a, b });
            }
            if a != b && l.related(a, b) && r.related(a, b) {
                return Err(StructureError::IntersectionNotTrivial { a, b });
            }
        }
    }

    Ok(GreenStructure { r, l, d })
}

pub fn relation_r(alg: &FiniteSkewLattice) -> Result<EquivalenceRelation, StructureError> {
    green(alg).map(|g| g.r)
}

pub fn relation_l(alg: &FiniteSkewLattice) -> Result<EquivalenceRelation, StructureError> {
    green(alg).map(|g| g.l)
}

pub fn relation_d(alg: &FiniteSkewLattice) -> Result<EquivalenceRelation, StructureError> {
    green(alg).map(|g| g.d)
}

// ---------------------------------------------------------------------------
// Quotients
// ---------------------------------------------------------------------------

/// The algebra induced on the classes of a congruence.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    pub relation: EquivalenceRelation,
    pub algebra: FiniteSkewLattice,
}

#[derive(Debug, Error)]
pub enum QuotientError {
    #[error("not a congruence: representatives ({a}, {b}) under {op} with {c} land in different classes")]
    NotACongruence {
        a: ElementId,
        b: ElementId,
        c: ElementId,
        op: &'static str,
    },
    #[error("quotient tables do not form a skew lattice: {0}")]
    NotASkewLattice(#[from] Box<crate::algebra::ValidationError>),
}

/// Collapses the algebra along `rel`, verifying well-definedness
/// exhaustively: the class of x∧y may depend only on the classes of x and y.
pub fn quotient(
    alg: &FiniteSkewLattice,
    rel: &EquivalenceRelation,
) -> Result<QuotientAlgebra, QuotientError> {
    let k = rel.class_count();
    let mut meet_rows = vec![vec![usize::MAX; k]; k];
    let mut join_rows = vec![vec![usize::MAX; k]; k];
    for x in alg.elements() {
        for y in alg.elements() {
            let (cx, cy) = (rel.class_of(x), rel.class_of(y));
            let m = rel.class_of(alg.meet(x, y));
            let j = rel.class_of(alg.join(x, y));
            if meet_rows[cx][cy] == usize::MAX {
                meet_rows[cx][cy] = m;
            } else if meet_rows[cx][cy] != m {
                return Err(QuotientError::NotACongruence {
                    a: x,
                    b: y,
                    c: rel.members(cx)[0],
                    op: "∧",
                });
            }
            if join_rows[cx][cy] == usize::MAX {
                join_rows[cx][cy] = j;
            } else if join_rows[cx][cy] != j {
                return Err(QuotientError::NotACongruence {
                    a: x,
                    b: y,
                    c: rel.members(cx)[0],
                    op: "∨",
                });
            }
        }
    }
    let meet = OpTable::from_rows(meet_rows).expect("classes are in range");
    let join = OpTable::from_rows(join_rows).expect("classes are in range");
    let algebra = FiniteSkewLattice::new(meet, join)?;
    Ok(QuotientAlgebra {
        relation: rel.clone(),
        algebra,
    })
}

// ---------------------------------------------------------------------------
// Natural orders
// ---------------------------------------------------------------------------

/// The natural preorder a ≽ b (a∨b∨a = a, equivalently b∧a∧b = b) and the
/// natural partial order a ≥ b (a∧b = b∧a = b, equivalently a∨b = b∨a = a)
/// as boolean matrices.
#[derive(Clone, Debug)]
pub struct NaturalOrderData {
    order: usize,
    pre: Vec<bool>,
    leq: Vec<bool>,
}

impl NaturalOrderData {
    /// a ≽ b
    pub fn pre(&self, a: ElementId, b: ElementId) -> bool {
        self.pre[a * self.order + b]
    }

    /// a ≥ b
    pub fn geq(&self, a: ElementId, b: ElementId) -> bool {
        self.leq[a * self.order + b]
    }

    /// a > b
    pub fn gt(&self, a: ElementId, b: ElementId) -> bool {
        a != b && self.geq(a, b)
    }

    /// a ≻ b: a ≽ b without a 𝒟 b.
    pub fn strictly_pre(&self, a: ElementId, b: ElementId) -> bool {
        self.pre(a, b) && !self.pre(b, a)
    }
}

/// Computes both order matrices and cross-checks every invariant that ties
/// them together: agreement of the dual defining forms, reflexivity,
/// transitivity, antisymmetry of ≥, ≥ refining ≽, a ≽ b matching 𝒟_a ≥ 𝒟_b
/// in the maximal lattice image, and the existence of the witnesses
/// b_a = a∧b∧a ≤ a and a_b = b∨a∨b ≥ b whenever a ≽ b.
pub fn natural_orders(alg: &FiniteSkewLattice) -> NaturalOrderData {
    let structure = green(alg).expect("validated algebra has Green structure");
    let quot = quotient(alg, &structure.d).expect("𝒟 is a congruence");
    natural_orders_with(alg, &structure, &quot)
}

pub(crate) fn natural_orders_with(
    alg: &FiniteSkewLattice,
    structure: &GreenStructure,
    quot: &QuotientAlgebra,
) -> NaturalOrderData {
    let n = alg.order();
    let mut pre = vec![false; n * n];
    let mut leq = vec![false; n * n];
    for a in 0..n {
        for b in 0..n {
            let by_join = alg.join(alg.join(a, b), a) == a;
            let by_meet = alg.meet(alg.meet(b, a), b) == b;
            assert_eq!(by_join, by_meet, "preorder forms disagree at ({a}, {b})");
            pre[a * n + b] = by_join;

            let po_meet = alg.meet(a, b) == b && alg.meet(b, a) == b;
            let po_join = alg.join(a, b) == a && alg.join(b, a) == a;
            assert_eq!(po_meet, po_join, "partial order forms disagree at ({a}, {b})");
            leq[a * n + b] = po_meet;
        }
    }
    let data = NaturalOrderData { order: n, pre, leq };

    for a in 0..n {
        assert!(data.pre(a, a) && data.geq(a, a), "reflexivity");
        for b in 0..n {
            if data.geq(a, b) {
                assert!(data.pre(a, b), "≥ must refine ≽");
                if data.geq(b, a) {
                    assert_eq!(a, b, "antisymmetry of ≥");
                }
            }
            // a ≽ b exactly when 𝒟_a ≥ 𝒟_b in S/𝒟.
            let (ca, cb) = (structure.d.class_of(a), structure.d.class_of(b));
            let class_leq = quot.algebra.meet(ca, cb) == cb;
            assert_eq!(data.pre(a, b), class_leq, "≽ vs quotient order at ({a}, {b})");

            if data.pre(a, b) {
                let b_a = alg.meet(alg.meet(a, b), a);
                let a_b = alg.join(alg.join(b, a), b);
                assert!(data.geq(a, b_a) && structure.d.related(b_a, b));
                assert!(data.geq(a_b, b) && structure.d.related(a_b, a));
            }
            for c in 0..n {
                if data.pre(a, b) && data.pre(b, c) {
                    assert!(data.pre(a, c), "transitivity of ≽");
                }
                if data.geq(a, b) && data.geq(b, c) {
                    assert!(data.geq(a, c), "transitivity of ≥");
                }
            }
        }
    }
    data
}

// ---------------------------------------------------------------------------
// Shape tests
// ---------------------------------------------------------------------------

/// x∧y∧x = x everywhere; equivalently a single 𝒟-class.
pub fn is_rectangular(alg: &FiniteSkewLattice) -> bool {
    alg.elements()
        .all(|x| alg.elements().all(|y| alg.meet(alg.meet(x, y), x) == x))
}

/// x∧y∧x = x∧y and x∨y∨x = y∨x; cross-checked against the per-𝒟-class form
/// (x∧y = x and x∨y = y inside each class).
pub fn is_left_handed(alg: &FiniteSkewLattice) -> bool {
    let by_identity = alg.elements().all(|x| {
        alg.elements().all(|y| {
            alg.meet(alg.meet(x, y), x) == alg.meet(x, y)
                && alg.join(alg.join(x, y), x) == alg.join(y, x)
        })
    });
    let d = green(alg).expect("validated").d;
    let by_classes = alg.elements().all(|x| {
        alg.elements().all(|y| {
            !d.related(x, y) || (alg.meet(x, y) == x && alg.join(x, y) == y)
        })
    });
    assert_eq!(by_identity, by_classes, "handedness methods disagree");
    by_identity
}

/// x∧y∧x = y∧x and x∨y∨x = x∨y; cross-checked like [`is_left_handed`].
pub fn is_right_handed(alg: &FiniteSkewLattice) -> bool {
    let by_identity = alg.elements().all(|x| {
        alg.elements().all(|y| {
            alg.meet(alg.meet(x, y), x) == alg.meet(y, x)
                && alg.join(alg.join(x, y), x) == alg.join(x, y)
        })
    });
    let d = green(alg).expect("validated").d;
    let by_classes = alg.elements().all(|x| {
        alg.elements().all(|y| {
            !d.related(x, y) || (alg.meet(x, y) == y && alg.join(x, y) == x)
        })
    });
    assert_eq!(by_identity, by_classes, "handedness methods disagree");
    by_identity
}

/// Both operations commutative, i.e. an ordinary lattice.
pub fn is_lattice(alg: &FiniteSkewLattice) -> bool {
    alg.meet_table().is_commutative() && alg.join_table().is_commutative()
}

// ---------------------------------------------------------------------------
// Decomposition theorems
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct ClassCheck {
    pub class: usize,
    pub closed: bool,
    pub rectangular: bool,
    /// No rectangular subalgebra strictly contains the class; tested by
    /// adjoining each outside element and closing.
    pub maximal: bool,
}

/// Outcome of checking that each 𝒟-class is a maximal rectangular
/// subalgebra and that S/𝒟 is a lattice.
#[derive(Clone, Debug)]
pub struct FirstDecomposition {
    pub classes: Vec<ClassCheck>,
    pub quotient_commutative: bool,
}

impl FirstDecomposition {
    pub fn holds(&self) -> bool {
        self.quotient_commutative
            && self
                .classes
                .iter()
                .all(|c| c.closed && c.rectangular && c.maximal)
    }
}

pub fn verify_first_decomposition(alg: &FiniteSkewLattice) -> FirstDecomposition {
    let structure = green(alg).expect("validated");
    let quot = quotient(alg, &structure.d).expect("𝒟 is a congruence");
    let rect_within = |elements: &[ElementId]| {
        elements.iter().all(|&x| {
            elements
                .iter()
                .all(|&y| alg.meet(alg.meet(x, y), x) == x)
        })
    };
    let classes = (0..structure.d.class_count())
        .map(|ci| {
            let members = structure.d.members(ci);
            let closed = members.iter().all(|&x| {
                members.iter().all(|&y| {
                    structure.d.class_of(alg.meet(x, y)) == ci
                        && structure.d.class_of(alg.join(x, y)) == ci
                })
            });
            let rectangular = rect_within(members);
            let maximal = alg.elements().filter(|e| structure.d.class_of(*e) != ci).all(|e| {
                let mut seed: Vec<usize> = members.to_vec();
                seed.push(e);
                let closed_set = subalg::closure(alg, &seed).elements;
                !rect_within(&closed_set)
            });
            ClassCheck {
                class: ci,
                closed,
                rectangular,
                maximal,
            }
        })
        .collect();
    FirstDecomposition {
        classes,
        quotient_commutative: is_lattice(&quot.algebra),
    }
}

/// Outcome of checking x ↦ (ℛ_x, ℒ_x) against the fibered product
/// S/ℛ ×_{S/𝒟} S/ℒ with componentwise tables.
#[derive(Clone, Debug)]
pub struct SecondDecomposition {
    pub left_factor_order: usize,
    pub right_factor_order: usize,
    pub fibered_order: usize,
    pub injective: bool,
    pub surjective: bool,
    pub homomorphic: bool,
}

impl SecondDecomposition {
    pub fn holds(&self) -> bool {
        self.injective && self.surjective && self.homomorphic
    }
}

pub fn verify_second_decomposition(alg: &FiniteSkewLattice) -> SecondDecomposition {
    let structure = green(alg).expect("validated");
    let by_r = quotient(alg, &structure.r).expect("ℛ is a congruence");
    let by_l = quotient(alg, &structure.l).expect("ℒ is a congruence");
    let by_d = quotient(alg, &structure.d).expect("𝒟 is a congruence");

    // Image of an ℛ-class (ℒ-class) in S/𝒟 is the 𝒟-class of any member.
    let r_to_d: Vec<usize> = by_r
        .relation
        .classes()
        .iter()
        .map(|cls| structure.d.class_of(cls[0]))
        .collect();
    let l_to_d: Vec<usize> = by_l
        .relation
        .classes()
        .iter()
        .map(|cls| structure.d.class_of(cls[0]))
        .collect();

    let mut fibered: Vec<(usize, usize)> = Vec::new();
    for i in 0..r_to_d.len() {
        for j in 0..l_to_d.len() {
            if r_to_d[i] == l_to_d[j] {
                fibered.push((i, j));
            }
        }
    }
    let index_of = |p: (usize, usize)| fibered.iter().position(|&q| q == p);

    let embed = |x: ElementId| (structure.r.class_of(x), structure.l.class_of(x));
    let mut seen = vec![false; fibered.len()];
    let mut injective = true;
    for x in alg.elements() {
        let idx = index_of(embed(x)).expect("image lies in the fibered product");
        if seen[idx] {
            injective = false;
        }
        seen[idx] = true;
    }
    let surjective = seen.iter().all(|&s| s);

    let homomorphic = alg.elements().all(|x| {
        alg.elements().all(|y| {
            let (mx, my) = (embed(x), embed(y));
            let meet_img = embed(alg.meet(x, y));
            let join_img = embed(alg.join(x, y));
            meet_img
                == (
                    by_r.algebra.meet(mx.0, my.0),
                    by_l.algebra.meet(mx.1, my.1),
                )
                && join_img
                    == (
                        by_r.algebra.join(mx.0, my.0),
                        by_l.algebra.join(mx.1, my.1),
                    )
        })
    });

    let _ = by_d;
    SecondDecomposition {
        left_factor_order: by_r.algebra.order(),
        right_factor_order: by_l.algebra.order(),
        fibered_order: fibered.len(),
        injective,
        surjective,
        homomorphic,
    }
}

// ---------------------------------------------------------------------------
// Shared analysis bundle
// ---------------------------------------------------------------------------

/// Green structure, the 𝒟-quotient, and the order matrices of one algebra,
/// computed once and threaded through the coset and property machinery.
pub struct Analysis<'a> {
    pub alg: &'a FiniteSkewLattice,
    pub green: GreenStructure,
    pub quot: QuotientAlgebra,
    pub orders: NaturalOrderData,
}

impl<'a> Analysis<'a> {
    pub fn new(alg: &'a FiniteSkewLattice) -> Self {
        let structure = green(alg).expect("validated algebra has Green structure");
        let quot = quotient(alg, &structure.d).expect("𝒟 is a congruence");
        let orders = natural_orders_with(alg, &structure, &quot);
        Analysis {
            alg,
            green: structure,
            quot,
            orders,
        }
    }

    /// 𝒟-class index of an element.
    pub fn dclass(&self, x: ElementId) -> usize {
        self.green.d.class_of(x)
    }

    /// Class order in the maximal lattice image: A ≥ B.
    pub fn class_geq(&self, a: usize, b: usize) -> bool {
        self.quot.algebra.meet(a, b) == b
    }

    pub fn class_gt(&self, a: usize, b: usize) -> bool {
        a != b && self.class_geq(a, b)
    }

    /// Meet class of two 𝒟-classes in the quotient lattice.
    pub fn class_meet(&self, a: usize, b: usize) -> usize {
        self.quot.algebra.meet(a, b)
    }

    pub fn class_join(&self, a: usize, b: usize) -> usize {
        self.quot.algebra.join(a, b)
    }

    pub fn class_count(&self) -> usize {
        self.green.d.class_count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn spinks9_dclasses() {
        let alg = corpus::builtin("spinks9").unwrap();
        let d = relation_d(&alg).unwrap();
        let mut classes: Vec<Vec<usize>> = d.classes().to_vec();
        classes.sort();
        assert_eq!(
            classes,
            vec![vec![0], vec![1], vec![2], vec![3, 4], vec![5, 6], vec![7, 8]]
        );
    }

    #[test]
    fn lattice_relations_are_trivial() {
        let alg = corpus::builtin("m3").unwrap();
        let g = green(&alg).unwrap();
        assert!(g.r.is_identity() && g.l.is_identity() && g.d.is_identity());
    }

    #[test]
    fn spinks9_quotient_is_a_six_element_lattice() {
        let alg = corpus::builtin("spinks9").unwrap();
        let g = green(&alg).unwrap();
        let q = quotient(&alg, &g.d).unwrap();
        assert_eq!(q.algebra.order(), 6);
        assert!(is_lattice(&q.algebra));
    }

    #[test]
    fn quotient_by_identity_is_isomorphic_copy() {
        let alg = corpus::builtin("spinks9").unwrap();
        let q = quotient(&alg, &EquivalenceRelation::identity(alg.order())).unwrap();
        assert_eq!(q.algebra.meet_table(), alg.meet_table());
        assert_eq!(q.algebra.join_table(), alg.join_table());
    }

    #[test]
    fn non_congruence_is_rejected_with_witness() {
        // Lump {0,1} together in chain3: 0∧2 = 0 vs 1∧2 = 1 land in
        // different blocks, so the quotient must refuse.
        let alg = corpus::builtin("chain3").unwrap();
        let rel = EquivalenceRelation::from_predicate(3, |a, b| (a < 2) == (b < 2)).unwrap();
        assert!(matches!(
            quotient(&alg, &rel),
            Err(QuotientError::NotACongruence { .. })
        ));
    }

    #[test]
    fn spinks9_natural_order_edges() {
        let alg = corpus::builtin("spinks9").unwrap();
        let orders = natural_orders(&alg);
        assert!(orders.geq(2, 5) && orders.geq(2, 6));
        assert!(!orders.geq(2, 7) && !orders.geq(2, 8));
        assert!(orders.pre(2, 7), "2 ≽ 7 via the class order");
    }

    #[test]
    fn rectangular_partial_order_is_identity() {
        let alg = corpus::builtin("rect(2,3)").unwrap();
        let orders = natural_orders(&alg);
        for a in alg.elements() {
            for b in alg.elements() {
                assert_eq!(orders.geq(a, b), a == b);
            }
        }
    }

    #[test]
    fn handedness_of_corpus_algebras() {
        let spinks9 = corpus::builtin("spinks9").unwrap();
        assert!(is_left_handed(&spinks9));
        assert!(!is_right_handed(&spinks9));

        let rh = corpus::transpose_dual(&spinks9);
        assert!(is_right_handed(&rh));
        assert!(!is_left_handed(&rh));

        let m3 = corpus::builtin("m3").unwrap();
        assert!(is_lattice(&m3) && is_left_handed(&m3) && is_right_handed(&m3));
    }

    #[test]
    fn first_decomposition_on_corpus() {
        for name in ["spinks9", "u2", "m3", "rect(2,3)", "chain3"] {
            let alg = corpus::builtin(name).unwrap();
            let report = verify_first_decomposition(&alg);
            assert!(report.holds(), "first decomposition on {name}");
        }
    }

    #[test]
    fn second_decomposition_on_corpus_and_a_two_sided_product() {
        for name in ["spinks9", "u2", "m3", "chain3"] {
            let alg = corpus::builtin(name).unwrap();
            assert!(verify_second_decomposition(&alg).holds(), "{name}");
        }
        // Left-handed: ℒ = 𝒟 so the right factor is S/𝒟 and the left is S.
        let spinks9 = corpus::builtin("spinks9").unwrap();
        let rep = verify_second_decomposition(&spinks9);
        assert_eq!(rep.left_factor_order, 9);
        assert_eq!(rep.right_factor_order, 6);

        let two_sided = corpus::direct_product(&spinks9, &corpus::transpose_dual(&spinks9));
        let rep = verify_second_decomposition(&two_sided);
        assert!(rep.holds());
        assert!(rep.left_factor_order > 6 && rep.right_factor_order > 6);
    }
}
