//! Built-in benchmark algebras and constructors: the forbidden lattices M3
//! and N5, the nine-element spinks9 pair, the twelve-element chains u2/v2,
//! chains, rectangular algebras, duals, direct products, and a builder that
//! assembles a skew chain from explicit coset partitions and bijections.
//!
//! Element orderings of the builtins are fixed so that witness tuples in
//! reports stay stable; u2/v2 carry labels a1, a2, b1…b4, d1…d4, c1, c2 in
//! that order.

use crate::algebra::{ElementId, FiniteSkewLattice, OpTable, RawAlgebra};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("unknown builtin {0:?} (try `corpus list`)")]
    UnknownName(String),
    #[error("golden file for {name}: {source}")]
    BadGoldenFile {
        name: String,
        source: crate::algebra::ParseError,
    },
    #[error("golden file for {name} does not validate")]
    InvalidGoldenFile { name: String },
    #[error(transparent)]
    IncoherentSpec(#[from] CosetSpecError),
}

/// Names accepted by [`builtin`]; `rect(m,n)` takes any positive m, n.
pub fn list() -> Vec<&'static str> {
    vec![
        "chain2", "chain3", "m3", "n5", "rect(m,n)", "spinks9", "spinks9_rh", "u2", "v2",
    ]
}

/// Returns a validated benchmark algebra by name.
pub fn builtin(name: &str) -> Result<FiniteSkewLattice, CorpusError> {
    match name {
        "chain2" => Ok(chain(2).with_name("chain2")),
        "chain3" => Ok(chain(3).with_name("chain3")),
        "m3" => Ok(m3()),
        "n5" => Ok(n5()),
        "spinks9" => Ok(spinks9()),
        "spinks9_rh" => Ok(transpose_dual(&spinks9()).with_name("spinks9_rh")),
        "u2" => u2(),
        "v2" => Ok(transpose_dual(&u2()?).with_name("v2")),
        other => {
            if let Some(dims) = other.strip_prefix("rect(").and_then(|s| s.strip_suffix(')')) {
                let parts: Vec<&str> = dims.split(',').map(str::trim).collect();
                if let [m, n] = parts[..] {
                    if let (Ok(m), Ok(n)) = (m.parse::<usize>(), n.parse::<usize>()) {
                        if m > 0 && n > 0 {
                            return Ok(rect(m, n).with_name(other));
                        }
                    }
                }
            }
            Err(CorpusError::UnknownName(other.to_string()))
        }
    }
}

/// The n-element chain lattice: meet = min, join = max.
pub fn chain(n: usize) -> FiniteSkewLattice {
    let rows = |f: fn(usize, usize) -> usize| {
        (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect()
    };
    FiniteSkewLattice::new(
        OpTable::from_rows(rows(std::cmp::min)).unwrap(),
        OpTable::from_rows(rows(std::cmp::max)).unwrap(),
    )
    .expect("chains validate")
}

/// Height-two modular lattice: 0 at the bottom, atoms 1, 2, 3, top 4.
pub fn m3() -> FiniteSkewLattice {
    lattice_from_leq(5, |x, y| x == y || x == 0 || y == 4).with_name("m3")
}

/// The pentagon: 0 < 1 < 2 < 4 on one side, 0 < 3 < 4 on the other.
pub fn n5() -> FiniteSkewLattice {
    lattice_from_leq(5, |x, y| {
        x == y || x == 0 || y == 4 || (x == 1 && y == 2)
    })
    .with_name("n5")
}

/// Builds a lattice from `leq` (x ≤ y) when meets and joins exist; panics
/// otherwise. Only used for the tiny fixed builtins.
fn lattice_from_leq(n: usize, leq: impl Fn(usize, usize) -> bool) -> FiniteSkewLattice {
    let bound = |x: usize, y: usize, lower: bool| -> usize {
        let below = |a: usize, b: usize| if lower { leq(a, b) } else { leq(b, a) };
        let candidates: Vec<usize> = (0..n)
            .filter(|&c| below(c, x) && below(c, y))
            .collect();
        *candidates
            .iter()
            .find(|&&c| candidates.iter().all(|&other| below(other, c)))
            .expect("bounds exist in a lattice")
    };
    let meet_rows = (0..n)
        .map(|i| (0..n).map(|j| bound(i, j, true)).collect())
        .collect();
    let join_rows = (0..n)
        .map(|i| (0..n).map(|j| bound(i, j, false)).collect())
        .collect();
    FiniteSkewLattice::new(
        OpTable::from_rows(meet_rows).unwrap(),
        OpTable::from_rows(join_rows).unwrap(),
    )
    .expect("lattice builtins validate")
}

/// Rectangular algebra on an m×n grid: element (i,j) is i·n + j,
/// (i,j)∧(i′,j′) = (i,j′) and (i,j)∨(i′,j′) = (i′,j). `rect(m,1)` is
/// left-handed, `rect(1,n)` right-handed.
pub fn rect(m: usize, n: usize) -> FiniteSkewLattice {
    let total = m * n;
    let mut meet_rows = vec![vec![0; total]; total];
    let mut join_rows = vec![vec![0; total]; total];
    for a in 0..total {
        let (i, j) = (a / n, a % n);
        for b in 0..total {
            let (ip, jp) = (b / n, b % n);
            meet_rows[a][b] = i * n + jp;
            join_rows[a][b] = ip * n + j;
        }
    }
    FiniteSkewLattice::new(
        OpTable::from_rows(meet_rows).unwrap(),
        OpTable::from_rows(join_rows).unwrap(),
    )
    .expect("rectangular algebras validate")
}

/// The left-handed nine-element algebra where join-distributivity holds but
/// meet-distributivity does not; tables are bit-exact.
pub fn spinks9() -> FiniteSkewLattice {
    const MEET: [[usize; 9]; 9] = [
        [0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 1, 2, 3, 4, 5, 6, 7, 8],
        [0, 2, 2, 5, 6, 5, 6, 0, 0],
        [0, 3, 5, 3, 3, 5, 5, 7, 7],
        [0, 4, 6, 4, 4, 6, 6, 8, 8],
        [0, 5, 5, 5, 5, 5, 5, 0, 0],
        [0, 6, 6, 6, 6, 6, 6, 0, 0],
        [0, 7, 0, 7, 7, 0, 0, 7, 7],
        [0, 8, 0, 8, 8, 0, 0, 8, 8],
    ];
    const JOIN: [[usize; 9]; 9] = [
        [0, 1, 2, 3, 4, 5, 6, 7, 8],
        [1, 1, 1, 1, 1, 1, 1, 1, 1],
        [2, 1, 2, 1, 1, 2, 2, 1, 1],
        [3, 1, 1, 3, 4, 3, 4, 3, 4],
        [4, 1, 1, 3, 4, 3, 4, 3, 4],
        [5, 1, 2, 3, 4, 5, 6, 3, 4],
        [6, 1, 2, 3, 4, 5, 6, 3, 4],
        [7, 1, 1, 3, 4, 3, 4, 7, 8],
        [8, 1, 1, 3, 4, 3, 4, 7, 8],
    ];
    FiniteSkewLattice::new(
        OpTable::from_rows(MEET.iter().map(|r| r.to_vec()).collect()).unwrap(),
        OpTable::from_rows(JOIN.iter().map(|r| r.to_vec()).collect()).unwrap(),
    )
    .expect("spinks9 validates")
    .with_name("spinks9")
}

fn u2() -> Result<FiniteSkewLattice, CorpusError> {
    // A > B > C with |A| = |C| = 2 and |B| = 8. In B, elements pair into
    // cosets of A as {b1,b2},{b3,b4},{d1,d2},{d3,d4} and into cosets of C
    // as {b_i,d_j} exactly when i + j ≡ 0 (mod 4); cosets between A and C
    // are trivial, with every a above every c.
    let spec = CosetSpec {
        handedness: Handedness::Left,
        class_sizes: vec![2, 8, 2],
        pairs: vec![
            (
                (0, 1),
                PairCosets {
                    upper_cosets: vec![vec![0, 1]],
                    lower_cosets: vec![vec![0, 1], vec![2, 3], vec![4, 5], vec![6, 7]],
                    bijections: vec![vec![vec![0, 1]; 4]],
                },
            ),
            (
                (1, 2),
                PairCosets {
                    upper_cosets: vec![vec![0, 6], vec![1, 5], vec![2, 4], vec![3, 7]],
                    lower_cosets: vec![vec![0, 1]],
                    bijections: vec![vec![vec![0, 1]]; 4],
                },
            ),
            (
                (0, 2),
                PairCosets {
                    upper_cosets: vec![vec![0], vec![1]],
                    lower_cosets: vec![vec![0], vec![1]],
                    bijections: vec![vec![vec![0], vec![0]]; 2],
                },
            ),
        ],
    };
    let labels = ["a1", "a2", "b1", "b2", "b3", "b4", "d1", "d2", "d3", "d4", "c1", "c2"];
    Ok(from_coset_spec(&spec)?
        .with_name("u2")
        .with_labels(labels.iter().map(|s| s.to_string()).collect()))
}

/// Swaps the two operations. An involution; exchanges the meet- and
/// join-sided properties.
pub fn op_dual(alg: &FiniteSkewLattice) -> FiniteSkewLattice {
    let out = FiniteSkewLattice::new(alg.join_table().clone(), alg.meet_table().clone())
        .expect("the operation dual of a skew lattice validates");
    match alg.labels() {
        Some(ls) => out.with_labels(ls.to_vec()),
        None => out,
    }
}

/// Transposes both tables (x ∘′ y = y ∘ x); exchanges left- and
/// right-handedness.
pub fn transpose_dual(alg: &FiniteSkewLattice) -> FiniteSkewLattice {
    let out = FiniteSkewLattice::new(
        alg.meet_table().transposed(),
        alg.join_table().transposed(),
    )
    .expect("the transpose dual of a skew lattice validates");
    match alg.labels() {
        Some(ls) => out.with_labels(ls.to_vec()),
        None => out,
    }
}

/// Componentwise product; element (x, y) is x·|b| + y.
pub fn direct_product(a: &FiniteSkewLattice, b: &FiniteSkewLattice) -> FiniteSkewLattice {
    let (na, nb) = (a.order(), b.order());
    let total = na * nb;
    let mut meet_rows = vec![vec![0; total]; total];
    let mut join_rows = vec![vec![0; total]; total];
    for p in 0..total {
        let (xa, xb) = (p / nb, p % nb);
        for q in 0..total {
            let (ya, yb) = (q / nb, q % nb);
            meet_rows[p][q] = a.meet(xa, ya) * nb + b.meet(xb, yb);
            join_rows[p][q] = a.join(xa, ya) * nb + b.join(xb, yb);
        }
    }
    FiniteSkewLattice::new(
        OpTable::from_rows(meet_rows).unwrap(),
        OpTable::from_rows(join_rows).unwrap(),
    )
    .expect("products of skew lattices validate")
}

// ---------------------------------------------------------------------------
// Coset-specified skew chains
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Handedness {
    Left,
    Right,
}

/// Coset data for one comparable class pair (upper, lower): a partition of
/// the upper class into lower-class cosets, a partition of the lower class
/// into upper-class cosets, and one bijection per coset pair.
/// `bijections[u][l][p]` is the position inside `lower_cosets[l]` of the
/// image of position p of `upper_cosets[u]`.
#[derive(Clone, Debug)]
pub struct PairCosets {
    pub upper_cosets: Vec<Vec<usize>>,
    pub lower_cosets: Vec<Vec<usize>>,
    pub bijections: Vec<Vec<Vec<usize>>>,
}

/// A skew chain presented by class sizes (top class first) and per-pair
/// coset data. Local indices inside a class run 0..size.
#[derive(Clone, Debug)]
pub struct CosetSpec {
    pub handedness: Handedness,
    pub class_sizes: Vec<usize>,
    pub pairs: Vec<((usize, usize), PairCosets)>,
}

#[derive(Debug, Error)]
pub enum CosetSpecError {
    #[error("pair ({upper}, {lower}): {problem}")]
    Malformed {
        upper: usize,
        lower: usize,
        problem: String,
    },
    #[error("coset data for pair ({upper}, {lower}) is missing")]
    MissingPair { upper: usize, lower: usize },
    #[error("assembled tables are not a skew lattice: {summary}")]
    Incoherent { summary: String },
    #[error("assembled algebra has the wrong 𝒟-classes")]
    WrongClasses,
}

/// Assembles the operation tables of a skew chain from coset bijections:
/// inside a class the handedness fixes both operations, and across classes
/// a∧b is read off the bijection that carries a into b's coset, with
/// a∨b its inverse image. The result is validated in full; a failure means
/// the spec is not coherent and is reported as such.
pub fn from_coset_spec(spec: &CosetSpec) -> Result<FiniteSkewLattice, CosetSpecError> {
    let k = spec.class_sizes.len();
    let n: usize = spec.class_sizes.iter().sum();
    let mut offset = vec![0usize; k];
    for c in 1..k {
        offset[c] = offset[c - 1] + spec.class_sizes[c - 1];
    }
    let class_of = |x: usize| (0..k).rev().find(|&c| x >= offset[c]).unwrap();

    let check_partition = |cosets: &Vec<Vec<usize>>, size: usize| -> Result<usize, String> {
        let mut seen = vec![false; size];
        let width = cosets.first().map(|c| c.len()).unwrap_or(0);
        for coset in cosets {
            if coset.len() != width {
                return Err("cosets of unequal size".into());
            }
            for &e in coset {
                if e >= size || seen[e] {
                    return Err(format!("bad or repeated local index {e}"));
                }
                seen[e] = true;
            }
        }
        if seen.iter().all(|&s| s) {
            Ok(width)
        } else {
            Err("cosets do not cover the class".into())
        }
    };

    let mut meet = vec![vec![usize::MAX; n]; n];
    let mut join = vec![vec![usize::MAX; n]; n];

    // Within-class products are fixed by handedness.
    for c in 0..k {
        for i in 0..spec.class_sizes[c] {
            for j in 0..spec.class_sizes[c] {
                let (x, y) = (offset[c] + i, offset[c] + j);
                match spec.handedness {
                    Handedness::Left => {
                        meet[x][y] = x;
                        join[x][y] = y;
                    }
                    Handedness::Right => {
                        meet[x][y] = y;
                        join[x][y] = x;
                    }
                }
            }
        }
    }

    for upper in 0..k {
        for lower in upper + 1..k {
            let data = spec
                .pairs
                .iter()
                .find(|((u, l), _)| (*u, *l) == (upper, lower))
                .map(|(_, d)| d)
                .ok_or(CosetSpecError::MissingPair { upper, lower })?;
            let err = |problem: String| CosetSpecError::Malformed {
                upper,
                lower,
                problem,
            };
            let wu = check_partition(&data.upper_cosets, spec.class_sizes[upper])
                .map_err(err)?;
            let wl = check_partition(&data.lower_cosets, spec.class_sizes[lower])
                .map_err(err)?;
            if wu != wl {
                return Err(err(format!(
                    "coset sizes differ between the classes ({wu} vs {wl})"
                )));
            }
            if data.bijections.len() != data.upper_cosets.len()
                || data
                    .bijections
                    .iter()
                    .any(|per_lower| per_lower.len() != data.lower_cosets.len())
            {
                return Err(err("one bijection per coset pair is required".into()));
            }
            for per_lower in &data.bijections {
                for bij in per_lower {
                    let mut seen = vec![false; wu];
                    if bij.len() != wu {
                        return Err(err("bijection length mismatch".into()));
                    }
                    for &p in bij {
                        if p >= wu || seen[p] {
                            return Err(err("pairing is not bijective".into()));
                        }
                        seen[p] = true;
                    }
                }
            }

            let upper_coset_of: Vec<(usize, usize)> = {
                let mut v = vec![(0, 0); spec.class_sizes[upper]];
                for (ci, coset) in data.upper_cosets.iter().enumerate() {
                    for (pos, &e) in coset.iter().enumerate() {
                        v[e] = (ci, pos);
                    }
                }
                v
            };
            let lower_coset_of: Vec<(usize, usize)> = {
                let mut v = vec![(0, 0); spec.class_sizes[lower]];
                for (ci, coset) in data.lower_cosets.iter().enumerate() {
                    for (pos, &e) in coset.iter().enumerate() {
                        v[e] = (ci, pos);
                    }
                }
                v
            };

            for la in 0..spec.class_sizes[upper] {
                let a = offset[upper] + la;
                let (ua, pa) = upper_coset_of[la];
                for lb in 0..spec.class_sizes[lower] {
                    let b = offset[lower] + lb;
                    let (ub, pb) = lower_coset_of[lb];
                    let bij = &data.bijections[ua][ub];
                    let image_of_a = offset[lower] + data.lower_cosets[ub][bij[pa]];
                    let preimage_of_b = {
                        let pos = bij.iter().position(|&q| q == pb).unwrap();
                        offset[upper] + data.upper_cosets[ua][pos]
                    };
                    match spec.handedness {
                        Handedness::Left => {
                            meet[a][b] = image_of_a;
                            meet[b][a] = b;
                            join[a][b] = preimage_of_b;
                            join[b][a] = a;
                        }
                        Handedness::Right => {
                            meet[a][b] = b;
                            meet[b][a] = image_of_a;
                            join[a][b] = a;
                            join[b][a] = preimage_of_b;
                        }
                    }
                }
            }
        }
    }

    let raw = RawAlgebra {
        meet: OpTable::from_rows(meet).expect("cells filled in range"),
        join: OpTable::from_rows(join).expect("cells filled in range"),
        name: None,
        labels: None,
    };
    let report = raw.validate();
    if !report.all_passed() {
        return Err(CosetSpecError::Incoherent {
            summary: report.summary(),
        });
    }
    let alg = raw.into_validated().expect("just validated");

    // The skeleton must come back out as the 𝒟-classes, in chain order.
    let d = crate::green::relation_d(&alg).map_err(|_| CosetSpecError::WrongClasses)?;
    if d.class_count() != k {
        return Err(CosetSpecError::WrongClasses);
    }
    for x in 0..n {
        for y in 0..n {
            if d.related(x, y) != (class_of(x) == class_of(y)) {
                return Err(CosetSpecError::WrongClasses);
            }
        }
    }
    Ok(alg)
}

// ---------------------------------------------------------------------------
// Golden files
// ---------------------------------------------------------------------------

/// Frozen algebra files for the reconstructed builtins. `SKEWLAT_CORPUS_DIR`
/// overrides the embedded copies.
pub fn golden(name: &str) -> Result<FiniteSkewLattice, CorpusError> {
    let text: String = match std::env::var("SKEWLAT_CORPUS_DIR") {
        Ok(dir) => std::fs::read_to_string(std::path::Path::new(&dir).join(format!("{name}.skt")))
            .map_err(|_| CorpusError::UnknownName(name.to_string()))?,
        Err(_) => match name {
            "spinks9" => include_str!("../data/spinks9.skt").to_string(),
            "u2" => include_str!("../data/u2.skt").to_string(),
            "v2" => include_str!("../data/v2.skt").to_string(),
            _ => return Err(CorpusError::UnknownName(name.to_string())),
        },
    };
    let raw = crate::algebra::parse_algebra(&text).map_err(|source| CorpusError::BadGoldenFile {
        name: name.to_string(),
        source,
    })?;
    raw.into_validated()
        .map_err(|_| CorpusError::InvalidGoldenFile {
            name: name.to_string(),
        })
}

/// The benchmark set driven through the cross-validation harness.
pub fn harness_algebras() -> Vec<FiniteSkewLattice> {
    let names = [
        "chain2", "chain3", "m3", "n5", "spinks9", "spinks9_rh", "u2", "v2", "rect(2,2)",
        "rect(2,3)", "rect(3,2)", "rect(1,4)", "rect(4,1)",
    ];
    let mut out: Vec<FiniteSkewLattice> = names
        .iter()
        .map(|n| builtin(n).expect("builtin"))
        .collect();
    let spinks9 = builtin("spinks9").unwrap();
    out.push(op_dual(&spinks9).with_name("op_dual(spinks9)"));
    out.push(
        direct_product(&spinks9, &op_dual(&spinks9)).with_name("spinks9 × op_dual(spinks9)"),
    );
    out.push(direct_product(&builtin("chain2").unwrap(), &builtin("rect(2,1)").unwrap())
        .with_name("chain2 × rect(2,1)"));
    out.push(direct_product(&builtin("chain2").unwrap(), &builtin("chain2").unwrap())
        .with_name("chain2 × chain2"));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_builtin_validates() {
        for name in ["chain2", "chain3", "m3", "n5", "spinks9", "spinks9_rh", "u2", "v2"] {
            assert!(builtin(name).is_ok(), "{name}");
        }
        for (m, n) in [(1, 1), (2, 3), (4, 2)] {
            assert_eq!(rect(m, n).order(), m * n);
        }
    }

    #[test]
    fn spinks9_spot_values() {
        let alg = builtin("spinks9").unwrap();
        assert_eq!(alg.meet(2, 3), 5);
        assert_eq!(alg.join(7, 2), 1);
    }

    #[test]
    fn unknown_name_is_an_error() {
        assert!(matches!(builtin("m4"), Err(CorpusError::UnknownName(_))));
        assert!(matches!(builtin("rect(0,2)"), Err(CorpusError::UnknownName(_))));
    }

    #[test]
    fn m3_join_of_bottom_with_atom() {
        let alg = builtin("m3").unwrap();
        for atom in [1, 2, 3] {
            assert_eq!(alg.join(0, atom), atom);
            assert_eq!(alg.meet(atom, 4), atom);
        }
        assert_eq!(alg.join(1, 2), 4);
        assert_eq!(alg.meet(1, 2), 0);
    }

    #[test]
    fn u2_reproduces_the_published_products() {
        let alg = builtin("u2").unwrap();
        let (a1, b2, c2, d1, d2, d3, b1) = (0, 3, 11, 6, 7, 8, 2);
        assert_eq!(alg.join(b2, c2), d2);
        assert_eq!(alg.meet(a1, d2), d1);
        assert_eq!(alg.meet(a1, b2), b1);
        assert_eq!(alg.join(b1, c2), d3);
        assert_eq!(alg.meet(a1, alg.join(b2, c2)), d1);
        assert_eq!(alg.join(alg.meet(a1, b2), alg.meet(a1, c2)), d3);
        assert_eq!(alg.label(6), "d1");
    }

    #[test]
    fn builtins_match_their_golden_files() {
        for name in ["spinks9", "u2", "v2"] {
            let constructed = builtin(name).unwrap();
            let frozen = golden(name).unwrap();
            assert_eq!(constructed.meet_table(), frozen.meet_table(), "{name} meet");
            assert_eq!(constructed.join_table(), frozen.join_table(), "{name} join");
        }
    }

    #[test]
    fn op_dual_is_an_involution() {
        let alg = builtin("spinks9").unwrap();
        let twice = op_dual(&op_dual(&alg));
        assert_eq!(twice.meet_table(), alg.meet_table());
        assert_eq!(twice.join_table(), alg.join_table());
    }

    #[test]
    fn trivial_coset_spec_gives_a_chain_lattice() {
        let spec = CosetSpec {
            handedness: Handedness::Left,
            class_sizes: vec![1, 1, 1],
            pairs: vec![
                ((0, 1), trivial_pair(1, 1)),
                ((1, 2), trivial_pair(1, 1)),
                ((0, 2), trivial_pair(1, 1)),
            ],
        };
        let alg = from_coset_spec(&spec).unwrap();
        assert!(crate::green::is_lattice(&alg));
        assert_eq!(alg.order(), 3);
        // Chain order is reversed relative to chain3 (top class first here).
        assert_eq!(alg.meet(0, 2), 2);
        assert_eq!(alg.join(2, 0), 0);
    }

    fn trivial_pair(u: usize, l: usize) -> PairCosets {
        PairCosets {
            upper_cosets: (0..u).map(|i| vec![i]).collect(),
            lower_cosets: (0..l).map(|i| vec![i]).collect(),
            bijections: vec![vec![vec![0]; l]; u],
        }
    }

    #[test]
    fn mismatched_block_sizes_are_rejected() {
        let spec = CosetSpec {
            handedness: Handedness::Left,
            class_sizes: vec![2, 4],
            pairs: vec![(
                (0, 1),
                PairCosets {
                    upper_cosets: vec![vec![0, 1]],
                    lower_cosets: vec![vec![0], vec![1], vec![2], vec![3]],
                    bijections: vec![vec![vec![0]; 4]],
                },
            )],
        };
        assert!(matches!(
            from_coset_spec(&spec),
            Err(CosetSpecError::Malformed { .. })
        ));
    }
}
