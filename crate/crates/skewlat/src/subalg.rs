//! Subset closure, subalgebra enumeration, and embedding detection for
//! forbidden/benchmark algebras (M3, N5, the nine-element spinks9, or any
//! user-supplied pattern).

use crate::algebra::{ElementId, FiniteSkewLattice, OpTable};
use std::collections::HashSet;
use thiserror::Error;

/// A subset closed under both operations, stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subalgebra {
    pub elements: Vec<ElementId>,
}

impl Subalgebra {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: ElementId) -> bool {
        self.elements.binary_search(&x).is_ok()
    }
}

/// Least closed superset of `seed`, by fixed-point iteration.
pub fn closure(alg: &FiniteSkewLattice, seed: &[ElementId]) -> Subalgebra {
    assert!(!seed.is_empty(), "closure needs a nonempty seed");
    let mut member = vec![false; alg.order()];
    let mut worklist: Vec<ElementId> = Vec::new();
    for &s in seed {
        if !member[s] {
            member[s] = true;
            worklist.push(s);
        }
    }
    let mut all: Vec<ElementId> = worklist.clone();
    while let Some(x) = worklist.pop() {
        // `all` grows during iteration; index-based loop keeps new pairs.
        let mut i = 0;
        while i < all.len() {
            let y = all[i];
            for v in [alg.meet(x, y), alg.meet(y, x), alg.join(x, y), alg.join(y, x)] {
                if !member[v] {
                    member[v] = true;
                    all.push(v);
                    worklist.push(v);
                }
            }
            i += 1;
        }
    }
    all.sort_unstable();
    Subalgebra { elements: all }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SubalgError {
    #[error("subalgebra enumeration is capped at order {cap}, algebra has order {order}")]
    CapExceeded { order: usize, cap: usize },
}

/// Complete list of (nonempty) subalgebras, deduplicated. Proceeds by
/// closing singletons first and then growing each found subalgebra by one
/// outside element at a time; most subalgebras of interest are
/// few-generated, so the frontier stays small.
pub fn all_subalgebras(
    alg: &FiniteSkewLattice,
    cap: usize,
) -> Result<Vec<Subalgebra>, SubalgError> {
    if alg.order() > cap {
        return Err(SubalgError::CapExceeded {
            order: alg.order(),
            cap,
        });
    }
    let mut seen: HashSet<Vec<ElementId>> = HashSet::new();
    let mut frontier: Vec<Subalgebra> = Vec::new();
    for x in alg.elements() {
        let sub = closure(alg, &[x]);
        if seen.insert(sub.elements.clone()) {
            frontier.push(sub);
        }
    }
    let mut out: Vec<Subalgebra> = frontier.clone();
    while let Some(sub) = frontier.pop() {
        for e in alg.elements() {
            if sub.contains(e) {
                continue;
            }
            let mut seed = sub.elements.clone();
            seed.push(e);
            let bigger = closure(alg, &seed);
            if seen.insert(bigger.elements.clone()) {
                out.push(bigger.clone());
                frontier.push(bigger);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// The standalone algebra induced on a closed subset; element i of the
/// result is `elements[i]`. Panics if the subset is not closed.
pub fn induced(alg: &FiniteSkewLattice, elements: &[ElementId]) -> FiniteSkewLattice {
    let index_of = |x: ElementId| {
        elements
            .iter()
            .position(|&e| e == x)
            .expect("subset must be closed under both operations")
    };
    let k = elements.len();
    let mut meet_rows = vec![vec![0; k]; k];
    let mut join_rows = vec![vec![0; k]; k];
    for (i, &x) in elements.iter().enumerate() {
        for (j, &y) in elements.iter().enumerate() {
            meet_rows[i][j] = index_of(alg.meet(x, y));
            join_rows[i][j] = index_of(alg.join(x, y));
        }
    }
    FiniteSkewLattice::new(
        OpTable::from_rows(meet_rows).unwrap(),
        OpTable::from_rows(join_rows).unwrap(),
    )
    .expect("induced algebra of a validated algebra validates")
}

/// Searches for an injective homomorphism `pattern → alg` by backtracking
/// over partial maps with operation-consistency pruning. Pattern elements
/// are tried in descending degree in the pattern's operation graph (number
/// of distinct products the element participates in), the usual
/// subgraph-isomorphism ordering. Returns the map `pattern index → alg
/// element`, or None after exhausting the search.
pub fn find_embedding(
    alg: &FiniteSkewLattice,
    pattern: &FiniteSkewLattice,
) -> Option<Vec<ElementId>> {
    let p = pattern.order();
    if p > alg.order() {
        return None;
    }

    let degree = |e: ElementId| {
        let mut outcomes: HashSet<(bool, ElementId)> = HashSet::new();
        for q in pattern.elements() {
            outcomes.insert((true, pattern.meet(e, q)));
            outcomes.insert((true, pattern.meet(q, e)));
            outcomes.insert((false, pattern.join(e, q)));
            outcomes.insert((false, pattern.join(q, e)));
        }
        outcomes.len()
    };
    let mut try_order: Vec<ElementId> = pattern.elements().collect();
    try_order.sort_by_key(|&e| std::cmp::Reverse(degree(e)));

    let mut map: Vec<Option<ElementId>> = vec![None; p];
    let mut used = vec![false; alg.order()];

    fn consistent(
        alg: &FiniteSkewLattice,
        pattern: &FiniteSkewLattice,
        map: &[Option<ElementId>],
        e: ElementId,
        img: ElementId,
    ) -> bool {
        for (q, &mq) in map.iter().enumerate() {
            let Some(mq) = mq else { continue };
            let checks = [
                (pattern.meet(e, q), alg.meet(img, mq)),
                (pattern.meet(q, e), alg.meet(mq, img)),
                (pattern.join(e, q), alg.join(img, mq)),
                (pattern.join(q, e), alg.join(mq, img)),
            ];
            for (pe, ae) in checks {
                if let Some(mpe) = map[pe] {
                    if mpe != ae {
                        return false;
                    }
                } else if pe == e && ae != img {
                    return false;
                }
            }
        }
        true
    }

    fn backtrack(
        alg: &FiniteSkewLattice,
        pattern: &FiniteSkewLattice,
        try_order: &[ElementId],
        depth: usize,
        map: &mut Vec<Option<ElementId>>,
        used: &mut Vec<bool>,
    ) -> bool {
        if depth == try_order.len() {
            return true;
        }
        let e = try_order[depth];
        for img in alg.elements() {
            if used[img] || !consistent(alg, pattern, map, e, img) {
                continue;
            }
            map[e] = Some(img);
            used[img] = true;
            if backtrack(alg, pattern, try_order, depth + 1, map, used) {
                return true;
            }
            map[e] = None;
            used[img] = false;
        }
        false
    }

    if backtrack(alg, pattern, &try_order, 0, &mut map, &mut used) {
        let found: Vec<ElementId> = map.into_iter().map(Option::unwrap).collect();
        // An embedding must preserve both operations on all pattern pairs.
        for a in pattern.elements() {
            for b in pattern.elements() {
                debug_assert_eq!(found[pattern.meet(a, b)], alg.meet(found[a], found[b]));
                debug_assert_eq!(found[pattern.join(a, b)], alg.join(found[a], found[b]));
            }
        }
        Some(found)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn closure_of_a_point_is_the_point() {
        let alg = corpus::builtin("spinks9").unwrap();
        for x in alg.elements() {
            assert_eq!(closure(&alg, &[x]).elements, vec![x]);
        }
    }

    #[test]
    fn closure_of_full_carrier_is_full() {
        let alg = corpus::builtin("u2").unwrap();
        let all: Vec<usize> = alg.elements().collect();
        assert_eq!(closure(&alg, &all).elements, all);
    }

    #[test]
    fn spinks9_closure_of_key_triple() {
        let alg = corpus::builtin("spinks9").unwrap();
        let got = closure(&alg, &[2, 5, 8]).elements;
        for needed in [0, 2, 3, 4, 5, 6] {
            assert!(got.contains(&needed), "{needed} must appear in the closure");
        }
        // Independent fixed-point oracle: stability under all products.
        for &x in &got {
            for &y in &got {
                assert!(got.contains(&alg.meet(x, y)) && got.contains(&alg.join(x, y)));
            }
        }
    }

    #[test]
    fn two_chain_has_three_subalgebras() {
        let alg = corpus::builtin("chain2").unwrap();
        let subs = all_subalgebras(&alg, 10).unwrap();
        let sets: Vec<Vec<usize>> = subs.into_iter().map(|s| s.elements).collect();
        assert_eq!(sets, vec![vec![0], vec![0, 1], vec![1]]);
    }

    #[test]
    fn enumeration_matches_subset_filter_oracle_on_m3() {
        let alg = corpus::builtin("m3").unwrap();
        let subs = all_subalgebras(&alg, 10).unwrap();
        let mut oracle: Vec<Vec<usize>> = Vec::new();
        for mask in 1u32..(1 << alg.order()) {
            let set: Vec<usize> = alg.elements().filter(|&e| mask & (1 << e) != 0).collect();
            let closed = set.iter().all(|&x| {
                set.iter().all(|&y| {
                    set.contains(&alg.meet(x, y)) && set.contains(&alg.join(x, y))
                })
            });
            if closed {
                oracle.push(set);
            }
        }
        oracle.sort();
        let sets: Vec<Vec<usize>> = subs.into_iter().map(|s| s.elements).collect();
        assert_eq!(sets, oracle);
    }

    #[test]
    fn cap_is_enforced() {
        let alg = corpus::builtin("u2").unwrap();
        assert_eq!(
            all_subalgebras(&alg, 10),
            Err(SubalgError::CapExceeded { order: 12, cap: 10 })
        );
    }

    #[test]
    fn n5_embeds_in_itself_but_not_in_a_distributive_lattice() {
        let n5 = corpus::builtin("n5").unwrap();
        assert!(find_embedding(&n5, &n5).is_some());
        let chain = corpus::builtin("chain3").unwrap();
        assert!(find_embedding(&chain, &n5).is_none());
        let m3 = corpus::builtin("m3").unwrap();
        assert!(find_embedding(&chain, &m3).is_none());
        assert!(find_embedding(&m3, &n5).is_none());
        assert!(find_embedding(&n5, &m3).is_none());
    }

    #[test]
    fn embedding_into_quotient_of_spinks9_is_absent() {
        let alg = corpus::builtin("spinks9").unwrap();
        let g = crate::green::green(&alg).unwrap();
        let q = crate::green::quotient(&alg, &g.d).unwrap();
        assert!(find_embedding(&q.algebra, &corpus::builtin("m3").unwrap()).is_none());
        assert!(find_embedding(&q.algebra, &corpus::builtin("n5").unwrap()).is_none());
    }

    #[test]
    fn returned_embeddings_preserve_operations() {
        let alg = corpus::builtin("spinks9").unwrap();
        let pattern = corpus::builtin("chain3").unwrap();
        let map = find_embedding(&alg, &pattern).expect("chain3 embeds: 0 < 5 < 1");
        for a in pattern.elements() {
            for b in pattern.elements() {
                assert_eq!(map[pattern.meet(a, b)], alg.meet(map[a], map[b]));
                assert_eq!(map[pattern.join(a, b)], alg.join(map[a], map[b]));
            }
        }
    }
}
