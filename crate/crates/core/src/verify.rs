//! The self-verification suite: every structural claim the library rests on,
//! checked exhaustively over a bounded slice of the tree.
//!
//! [`run_verification`] produces a [`VerifyReport`] with one named
//! [`CheckOutcome`] per claim. The checks deliberately compare *independent*
//! computations — closed forms against mutation replay, extended-gcd
//! decomposition against direct search, symbolic degrees against g-matrix
//! columns — so a defect in either side surfaces as a disagreement.
//!
//! For exercising the failure path, [`VerifyOptions::corrupt_closed_form`]
//! injects a one-entry error into the closed-form c-matrix before the oracle
//! comparison; a healthy suite then fails exactly that check.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::closedform::{c_matrix, classify, g_matrix, CaseLabel};
use crate::exchange::{g_from_c, matrix_by_path, ExtendedMatrix, Mat3, VertexCycle};
use crate::farey::{
    enumerate, phi_edge_relabel, psi_edge_relabel, ExtRational, FareyError, FareyTriple,
    MutationWord, ParityClass,
};
use crate::symbolic::{verify_word, SymbolicSeed};

/// Tuning knobs for [`run_verification`].
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Tree depth for the exhaustive matrix checks.
    pub depth: usize,
    /// Tree depth for the symbolic checks (each word costs polynomial
    /// arithmetic, so this is kept much smaller).
    pub symbolic_depth: usize,
    /// Deliberately corrupt one closed-form matrix entry to demonstrate
    /// that the oracle comparison catches it.
    pub corrupt_closed_form: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { depth: 12, symbolic_depth: 5, corrupt_closed_form: false }
    }
}

/// One named check: what was verified and, in `detail`, either the scope of
/// the passing check or the first counterexample.
#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// The outcome of every check, in a fixed order.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    /// Whether every check passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            let status = if check.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{status}  {:<24}  {}", check.name, check.detail)?;
        }
        write!(f, "{}", if self.passed() { "verification passed" } else { "verification FAILED" })
    }
}

/// Builds a [`CheckOutcome`] from a `Result` whose `Ok` is the pass detail
/// and whose `Err` is the first counterexample.
fn outcome(name: &str, result: Result<String, String>) -> CheckOutcome {
    match result {
        Ok(detail) => CheckOutcome { name: name.to_string(), passed: true, detail },
        Err(detail) => CheckOutcome { name: name.to_string(), passed: false, detail },
    }
}

/// Adds one to the top-left complementary entry — the injected fault used to
/// demonstrate the failure path.
fn corrupt(matrix: &ExtendedMatrix) -> ExtendedMatrix {
    let mut rows = matrix.complementary_mat3().rows().clone();
    rows[0][0] += 1;
    ExtendedMatrix::from_parts(matrix.principal_mat3(), Mat3::new(rows))
        .expect("corruption only touches the complementary part")
}

type Tree = [(FareyTriple, MutationWord)];

/// Closed-form c- and g-matrices against replaying the mutation word.
fn check_oracle_equality(tree: &Tree, corrupt_closed_form: bool) -> Result<String, String> {
    for (t, word) in tree {
        let oracle = matrix_by_path(t).map_err(|e| format!("no path for {t}: {e}"))?;
        let mut closed = c_matrix(t).map_err(|e| format!("no closed form for {t}: {e}"))?;
        if corrupt_closed_form && classify(t) == CaseLabel::I {
            closed = corrupt(&closed);
        }
        if closed != oracle {
            return Err(format!(
                "closed-form c-matrix differs from mutation replay at {t} (word {word})"
            ));
        }
        let g = g_matrix(t).map_err(|e| format!("no closed form for {t}: {e}"))?;
        let from_oracle = g_from_c(&oracle.complementary_mat3())
            .map_err(|e| format!("oracle c-matrix not unimodular at {t}: {e}"))?;
        if g != from_oracle {
            return Err(format!(
                "closed-form g-matrix differs from the inverse transpose at {t} (word {word})"
            ));
        }
    }
    Ok(format!("{} triples match the mutation-replay oracle", tree.len()))
}

/// Mutating twice in the same direction restores triples, matrices, and
/// symbolic seeds.
fn check_involutions(tree: &Tree) -> Result<String, String> {
    let mut checked = 0usize;
    for (t, word) in tree.iter().filter(|(_, w)| w.len() <= 6) {
        let matrix = matrix_by_path(t).map_err(|e| format!("no path for {t}: {e}"))?;
        for k in ParityClass::ALL {
            if t.mutate(k).mutate(k) != *t {
                return Err(format!("triple mutation at {k} is not an involution at {t}"));
            }
            if matrix.mutate_class(k).mutate_class(k) != matrix {
                return Err(format!("matrix mutation at {k} is not an involution at {t} ({word})"));
            }
            checked += 1;
        }
    }
    for text in ["", "0", "-1,0", "inf,0,-1"] {
        let word: MutationWord = text.parse().expect("static word");
        let seed = SymbolicSeed::initial()
            .apply_word(&word)
            .map_err(|e| format!("seed word {text:?} failed: {e}"))?;
        for k in ParityClass::ALL {
            let back = seed
                .mutate(k)
                .and_then(|s| s.mutate(k))
                .map_err(|e| format!("seed double mutation at {k} after {text:?} failed: {e}"))?;
            if back != seed {
                return Err(format!("seed mutation at {k} is not an involution after {text:?}"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} double mutations restored their object"))
}

/// Every c-vector has all entries of one sign.
fn check_sign_coherence(tree: &Tree) -> Result<String, String> {
    let mut vectors = 0usize;
    for (t, word) in tree {
        let matrix = c_matrix(t).map_err(|e| format!("no closed form for {t}: {e}"))?;
        for (j, c) in matrix.c_vectors().iter().enumerate() {
            if c.is_zero() || !c.is_sign_coherent() {
                return Err(format!(
                    "c-vector {} of {t} (word {word}) mixes signs: {:?}",
                    ParityClass::ALL[j],
                    c.0.iter().map(ToString::to_string).collect::<Vec<_>>()
                ));
            }
            vectors += 1;
        }
    }
    Ok(format!("{vectors} c-vectors are sign-coherent and nonzero"))
}

/// C- and g-matrices stay invertible over the integers.
fn check_unimodularity(tree: &Tree) -> Result<String, String> {
    for (t, word) in tree {
        let c_det = c_matrix(t)
            .map_err(|e| format!("no closed form for {t}: {e}"))?
            .complementary_mat3()
            .det();
        if !c_det.abs().is_one() {
            return Err(format!("det C = {c_det} at {t} (word {word})"));
        }
        let g_det = g_matrix(t).map_err(|e| format!("no closed form for {t}: {e}"))?.det();
        if !g_det.abs().is_one() {
            return Err(format!("det G = {g_det} at {t} (word {word})"));
        }
    }
    Ok(format!("|det C| = |det G| = 1 on all {} triples", tree.len()))
}

/// Every g-matrix column sums to one.
fn check_column_sums(tree: &Tree) -> Result<String, String> {
    let one = BigInt::one();
    for (t, word) in tree {
        let sums = g_matrix(t).map_err(|e| format!("no closed form for {t}: {e}"))?.column_sums();
        if sums.iter().any(|s| *s != one) {
            return Err(format!(
                "g-matrix columns of {t} (word {word}) sum to ({}, {}, {})",
                sums[0], sums[1], sums[2]
            ));
        }
    }
    Ok(format!("all g-vector coordinate sums equal 1 on {} triples", tree.len()))
}

/// The tree isomorphisms act on matrices by the matching cyclic relabeling.
fn check_equivariance(tree: &Tree, depth: usize) -> Result<String, String> {
    let mut checked = 0usize;
    for (t, word) in branch(tree, depth) {
        let c = c_matrix(t).map_err(|e| format!("no closed form for {t}: {e}"))?;
        let g = g_matrix(t).map_err(|e| format!("no closed form for {t}: {e}"))?;
        for (name, image, cycle) in [
            ("phi", t.phi(), VertexCycle::CycA),
            ("psi", t.psi(), VertexCycle::CycB),
        ] {
            let image = image.map_err(|e| format!("{name} undefined at {t} ({word}): {e}"))?;
            let c_image = c_matrix(&image).map_err(|e| format!("no closed form for {image}: {e}"))?;
            if c_image != c.act(cycle) {
                return Err(format!("c-matrix of {name}({t}) is not the relabeled c-matrix of {t}"));
            }
            let g_image = g_matrix(&image).map_err(|e| format!("no closed form for {image}: {e}"))?;
            if g_image != g.act(cycle) {
                return Err(format!("g-matrix of {name}({t}) is not the relabeled g-matrix of {t}"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} isomorphism images matched the relabeled matrices"))
}

/// The tree isomorphisms carry mutation edges to mutation edges with
/// cyclically relabeled directions.
fn check_edge_relabeling(tree: &Tree, depth: usize) -> Result<String, String> {
    let mut checked = 0usize;
    for (t, word) in branch(tree, depth) {
        for k in ParityClass::ALL {
            let neighbor = t.mutate(k);
            if neighbor.is_initial() {
                continue; // the root is outside the branch, so it has no image
            }
            let phi_t = t.phi().map_err(|e| format!("phi undefined at {t} ({word}): {e}"))?;
            let phi_n = neighbor.phi().map_err(|e| format!("phi undefined at {neighbor}: {e}"))?;
            if phi_t.mutate(phi_edge_relabel(k)) != phi_n {
                return Err(format!("phi does not carry the {k}-edge at {t} to a relabeled edge"));
            }
            let psi_t = t.psi().map_err(|e| format!("psi undefined at {t} ({word}): {e}"))?;
            let psi_n = neighbor.psi().map_err(|e| format!("psi undefined at {neighbor}: {e}"))?;
            if psi_t.mutate(psi_edge_relabel(k)) != psi_n {
                return Err(format!("psi does not carry the {k}-edge at {t} to a relabeled edge"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} edges mapped to relabeled edges under both isomorphisms"))
}

/// Triples on the branch below the first `MinusOne` edge, where the
/// isomorphisms are defined, capped at `depth` letters.
fn branch(tree: &Tree, depth: usize) -> impl Iterator<Item = &(FareyTriple, MutationWord)> {
    tree.iter()
        .filter(move |(_, w)| w.len() <= depth && w.letters().first() == Some(&ParityClass::MinusOne))
}

/// Extended-gcd decomposition against a direct search over denominators.
fn check_decomposition(bound: i64) -> Result<String, String> {
    let mut checked = 0usize;
    for den in 1..=bound {
        for num in -bound..=bound {
            if num.abs() + den > bound || num_integer::gcd(num, den) != 1 {
                continue;
            }
            let q = ExtRational::new(num, den).map_err(|e| format!("bad input {num}/{den}: {e}"))?;
            let (q1, q2) = q.farey_decompose().map_err(|e| format!("{q} failed: {e}"))?;
            let summed = q1.farey_sum(&q2).map_err(|e| format!("parents of {q} not neighbors: {e}"))?;
            if summed != q || q1 >= q2 {
                return Err(format!("decomposition of {q} returned a non-canonical pair ({q1}, {q2})"));
            }
            match decompose_by_scan(&q) {
                Some(pair) if pair == (q1.clone(), q2.clone()) => {}
                Some((s1, s2)) => {
                    return Err(format!(
                        "decomposition of {q} gave ({q1}, {q2}) but the search found ({s1}, {s2})"
                    ));
                }
                None => return Err(format!("direct search found no parents for {q}")),
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} decompositions matched the direct search"))
}

/// Finds the canonical neighbor pair of a finite `q` by trying every
/// denominator from 0 to `q`'s own — an independent path to the same answer
/// as the extended-gcd construction.
fn decompose_by_scan(q: &ExtRational) -> Option<(ExtRational, ExtRational)> {
    let mut candidates = Vec::new();
    let den = q.den().to_string().parse::<i64>().ok()?;
    let num = q.num().to_string().parse::<i64>().ok()?;
    for y in 0..=den {
        for sign in [1i64, -1] {
            // Solve num*y - den*x = sign for x.
            if (num * y - sign) % den != 0 {
                continue;
            }
            let x = (num * y - sign) / den;
            if y == 0 && x.abs() != 1 {
                continue;
            }
            let Ok(q1) = ExtRational::new(x, y) else { continue };
            if !q1.is_neighbor(q) {
                continue;
            }
            let Ok(q2) = q.farey_diff(&q1) else { continue };
            if q1 < q2 && q1.is_neighbor(&q2) && q1.farey_sum(&q2).ok() == Some(q.clone()) {
                if !candidates.contains(&(q1.clone(), q2.clone())) {
                    candidates.push((q1, q2));
                }
            }
        }
    }
    match candidates.len() {
        1 => candidates.pop(),
        _ => None,
    }
}

/// Every triple off the root has exactly one complexity-decreasing direction.
fn check_descent(tree: &Tree) -> Result<String, String> {
    for (t, word) in tree {
        if t.is_initial() {
            if !matches!(t.descent_direction(), Err(FareyError::IsInitial)) {
                return Err("the root reported a descent direction".to_string());
            }
            continue;
        }
        let direction = t
            .descent_direction()
            .map_err(|e| format!("descent not unique at {t} (word {word}): {e}"))?;
        if direction != word.last().expect("non-root words are nonempty") {
            return Err(format!("descent at {t} contradicts its construction word {word}"));
        }
    }
    Ok(format!("unique descent on all {} non-root triples", tree.len() - 1))
}

/// Level sizes and distinctness of the enumerated tree.
fn check_tree_counts(tree: &Tree, depth: usize) -> Result<String, String> {
    let mut by_level = vec![0usize; depth + 1];
    let mut seen = HashSet::new();
    for (t, word) in tree {
        if word.len() > depth {
            return Err(format!("enumeration emitted {t} beyond the requested depth"));
        }
        by_level[word.len()] += 1;
        if !seen.insert(t.to_string()) {
            return Err(format!("triple {t} appears twice in the enumeration"));
        }
        if t.path_to_initial().map_err(|e| e.to_string())? != word.reversed() {
            return Err(format!("stored word {word} for {t} disagrees with its descent path"));
        }
    }
    for (level, &count) in by_level.iter().enumerate() {
        let expected = if level == 0 { 1 } else { 3 << (level - 1) };
        if count != expected {
            return Err(format!("level {level} has {count} triples, expected {expected}"));
        }
    }
    Ok(format!("{} distinct triples in the expected level sizes", tree.len()))
}

/// Symbolic mutation along every reduced word: Laurent, homogeneous, and
/// graded by the g-matrix columns.
fn check_symbolic(symbolic_depth: usize) -> Result<String, String> {
    let words = enumerate(symbolic_depth).map_err(|e| e.to_string())?;
    for (_, word) in &words {
        let check = verify_word(word).map_err(|e| format!("word {word} rejected: {e}"))?;
        if !check.passed {
            return Err(format!("word {word}: {}", check.failures.join("; ")));
        }
    }
    Ok(format!("{} reduced words verified symbolically", words.len()))
}

/// Runs every check and collects the outcomes; failures are recorded, not
/// raised. Only an unusable configuration (depth beyond the enumeration cap)
/// errors.
pub fn run_verification(options: &VerifyOptions) -> Result<VerifyReport, FareyError> {
    let tree = enumerate(options.depth)?;
    let equivariance_depth = options.depth.min(10);
    let checks = vec![
        outcome("oracle_equality", check_oracle_equality(&tree, options.corrupt_closed_form)),
        outcome("involutions", check_involutions(&tree)),
        outcome("sign_coherence", check_sign_coherence(&tree)),
        outcome("unimodularity", check_unimodularity(&tree)),
        outcome("column_sums", check_column_sums(&tree)),
        outcome("equivariance", check_equivariance(&tree, equivariance_depth)),
        outcome("edge_relabeling", check_edge_relabeling(&tree, equivariance_depth)),
        outcome("decomposition_round_trip", check_decomposition(100)),
        outcome("descent_uniqueness", check_descent(&tree)),
        outcome("tree_counts", check_tree_counts(&tree, options.depth)),
        outcome("symbolic_degrees", check_symbolic(options.symbolic_depth)),
    ];
    Ok(VerifyReport { checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shallow_verification_passes_every_check() {
        let options = VerifyOptions { depth: 5, symbolic_depth: 3, ..VerifyOptions::default() };
        let report = run_verification(&options).unwrap();
        assert!(report.passed(), "failing checks: {report}");
        assert_eq!(report.checks.len(), 11);
        let rendered = report.to_string();
        assert!(rendered.contains("PASS  oracle_equality"));
        assert!(rendered.ends_with("verification passed"));
    }

    #[test]
    fn injected_corruption_is_caught_and_named() {
        let options =
            VerifyOptions { depth: 4, symbolic_depth: 2, corrupt_closed_form: true };
        let report = run_verification(&options).unwrap();
        assert!(!report.passed());
        let failed: Vec<_> = report.checks.iter().filter(|c| !c.passed).collect();
        assert_eq!(failed.len(), 1, "only the oracle comparison should fail");
        assert_eq!(failed[0].name, "oracle_equality");
        // Breadth-first order reaches this triple first among the corrupted
        // shapes.
        assert!(
            failed[0].detail.contains("-2/1,-1/1,-3/2"),
            "unexpected counterexample: {}",
            failed[0].detail
        );
    }

    #[test]
    fn reports_serialize_with_stable_field_names() {
        let report = VerifyReport {
            checks: vec![CheckOutcome {
                name: "demo".into(),
                passed: true,
                detail: "ok".into(),
            }],
        };
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["checks"][0]["name"], "demo");
        assert_eq!(json["checks"][0]["passed"], true);
    }

    #[test]
    fn depth_beyond_the_enumeration_cap_is_rejected() {
        let options = VerifyOptions { depth: 99, ..VerifyOptions::default() };
        assert!(matches!(
            run_verification(&options),
            Err(FareyError::DepthTooLarge { depth: 99, .. })
        ));
    }

    #[test]
    fn direct_decomposition_search_agrees_on_examples() {
        for (text, left, right) in
            [("1/2", "0/1", "1/1"), ("2/5", "1/3", "1/2"), ("5/1", "4/1", "1/0"), ("0/1", "-1/1", "1/0")]
        {
            let q: ExtRational = text.parse().unwrap();
            let found = decompose_by_scan(&q).unwrap();
            assert_eq!(found.0.to_string(), left);
            assert_eq!(found.1.to_string(), right);
            assert_eq!(found, q.farey_decompose().unwrap());
        }
    }
}
