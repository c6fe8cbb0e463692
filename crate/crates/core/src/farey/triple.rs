//! Farey triples and the trivalent mutation tree they span.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{ExtRational, FareyError, MutationWord, ParityClass};

/// Enumeration beyond this depth is refused: the tree has `1 + 3·(2^d - 1)`
/// vertices at depth `d`, so 20 already means over three million triples.
pub const MAX_ENUMERATION_DEPTH: usize = 20;

/// An unordered triple of pairwise Farey-neighbor extended rationals, one
/// from each parity class.
///
/// The triple is stored by parity slot in the order
/// `(Zero, MinusOne, Infinity)`; mutation in direction `k` replaces exactly
/// the slot-`k` component, so the slots are stable along any mutation path.
/// Which slot is largest or smallest *by value* varies and is reported by
/// [`FareyTriple::positions`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FareyTriple {
    q0: ExtRational,
    qm1: ExtRational,
    qinf: ExtRational,
}

impl FareyTriple {
    /// Builds a triple from three values given in any order, slotting each by
    /// its parity class.
    ///
    /// Rejects inputs where two values share a parity class
    /// ([`FareyError::DuplicateParity`]) or where some pair is not at Farey
    /// distance 1 ([`FareyError::NotNeighbors`]).
    pub fn new(a: ExtRational, b: ExtRational, c: ExtRational) -> Result<Self, FareyError> {
        let mut slots: [Option<ExtRational>; 3] = [None, None, None];
        for q in [a, b, c] {
            let slot = &mut slots[q.parity_class().column()];
            match slot {
                Some(existing) => {
                    return Err(FareyError::DuplicateParity {
                        class: q.parity_class(),
                        a: existing.clone(),
                        b: q,
                    })
                }
                None => *slot = Some(q),
            }
        }
        let [q0, qm1, qinf] = slots.map(|s| s.expect("three values across three distinct classes"));
        for (x, y) in [(&q0, &qm1), (&q0, &qinf), (&qm1, &qinf)] {
            let delta = x.delta(y);
            if !delta.is_one() {
                return Err(FareyError::NotNeighbors { a: x.clone(), b: y.clone(), delta });
            }
        }
        Ok(FareyTriple { q0, qm1, qinf })
    }

    /// The initial triple `[0/1, -1/1, 1/0]`, the root of the mutation tree.
    pub fn initial() -> Self {
        FareyTriple {
            q0: ExtRational::from(0),
            qm1: ExtRational::from(-1),
            qinf: ExtRational::infinity(),
        }
    }

    /// Whether this is the initial triple.
    pub fn is_initial(&self) -> bool {
        *self == FareyTriple::initial()
    }

    /// The component of parity class `Zero`.
    pub fn q0(&self) -> &ExtRational {
        &self.q0
    }

    /// The component of parity class `MinusOne`.
    pub fn qm1(&self) -> &ExtRational {
        &self.qm1
    }

    /// The component of parity class `Infinity`.
    pub fn qinf(&self) -> &ExtRational {
        &self.qinf
    }

    /// The component of the given parity class.
    pub fn get(&self, class: ParityClass) -> &ExtRational {
        match class {
            ParityClass::Zero => &self.q0,
            ParityClass::MinusOne => &self.qm1,
            ParityClass::Infinity => &self.qinf,
        }
    }

    fn with_slot(&self, class: ParityClass, value: ExtRational) -> Self {
        let mut next = self.clone();
        match class {
            ParityClass::Zero => next.q0 = value,
            ParityClass::MinusOne => next.qm1 = value,
            ParityClass::Infinity => next.qinf = value,
        }
        debug_assert_eq!(next.get(class).parity_class(), class, "replacement changed parity class");
        next
    }

    /// The parity classes ordered by component value: `(first, second,
    /// third)` with `first < second < third` and infinity largest.
    pub fn positions(&self) -> (ParityClass, ParityClass, ParityClass) {
        let mut order = ParityClass::ALL;
        order.sort_by(|x, y| self.get(*x).cmp(self.get(*y)));
        (order[0], order[1], order[2])
    }

    /// Mutates in direction `k`, replacing the class-`k` component:
    ///
    /// - the *smallest* component is replaced by the mediant of the other two,
    /// - the *middle* component by the Farey difference smallest ⊖ largest,
    /// - the *largest* component by the mediant of the other two.
    ///
    /// The replacement always lands back in class `k`, and mutating twice in
    /// the same direction restores the original triple.
    pub fn mutate(&self, k: ParityClass) -> Self {
        let (first, second, third) = self.positions();
        let (f, s, t) = (self.get(first), self.get(second), self.get(third));
        let replacement = if k == first {
            s.farey_sum(t)
        } else if k == second {
            f.farey_diff(t)
        } else {
            f.farey_sum(s)
        };
        let replacement = replacement.expect("triple components are pairwise neighbors");
        let next = self.with_slot(k, replacement);
        debug_assert!(
            FareyTriple::new(next.q0.clone(), next.qm1.clone(), next.qinf.clone()).is_ok(),
            "mutation must preserve the triple invariants"
        );
        next
    }

    /// Applies a word letter by letter, left to right.
    pub fn apply_word(&self, word: &MutationWord) -> Self {
        word.iter().fold(self.clone(), |triple, letter| triple.mutate(letter))
    }

    /// The complexity `|num| + den` of the middle component. The initial
    /// triple is the unique triple of complexity 1.
    pub fn complexity(&self) -> BigInt {
        let (_, second, _) = self.positions();
        let middle = self.get(second);
        middle.num().abs() + middle.den()
    }

    /// The unique direction whose mutation strictly decreases complexity.
    ///
    /// All three directions are tried. Exactly one decreasing direction
    /// exists for every non-initial triple; the initial triple yields
    /// [`FareyError::IsInitial`], and finding several decreasing directions
    /// would falsify the descent argument, reported loudly as
    /// [`FareyError::NonUniqueDescent`].
    pub fn descent_direction(&self) -> Result<ParityClass, FareyError> {
        if self.is_initial() {
            return Err(FareyError::IsInitial);
        }
        let complexity = self.complexity();
        let decreasing: Vec<ParityClass> = ParityClass::ALL
            .into_iter()
            .filter(|&k| self.mutate(k).complexity() < complexity)
            .collect();
        match decreasing.as_slice() {
            [unique] => Ok(*unique),
            found => Err(FareyError::NonUniqueDescent { triple: self.to_string(), count: found.len() }),
        }
    }

    /// The descent word from this triple to the initial triple; applying it
    /// left to right via [`FareyTriple::apply_word`] reaches the root.
    /// Its reverse is the unique reduced word from the root to this triple.
    pub fn path_to_initial(&self) -> Result<MutationWord, FareyError> {
        let mut word = MutationWord::empty();
        let mut triple = self.clone();
        while !triple.is_initial() {
            let k = triple.descent_direction()?;
            triple = triple.mutate(k);
            word.push(k);
        }
        Ok(word)
    }

    /// Which branch of the tree holds this triple: `None` for the root
    /// itself, otherwise the direction of the root's edge toward it (the
    /// last letter of [`FareyTriple::path_to_initial`]).
    pub fn component(&self) -> Result<Option<ParityClass>, FareyError> {
        Ok(self.path_to_initial()?.last())
    }

    fn require_component(&self, expected: Option<ParityClass>) -> Result<(), FareyError> {
        let found = self.component()?;
        if found == expected {
            Ok(())
        } else {
            let name = |c: Option<ParityClass>| c.map_or_else(|| "root".to_string(), |k| k.to_string());
            Err(FareyError::WrongComponent {
                triple: self.to_string(),
                expected: name(expected),
                found: name(found),
            })
        }
    }

    /// The tree isomorphism from the `MinusOne` branch onto the `Infinity`
    /// branch: every slot receives the [`ExtRational::moebius`] image of the
    /// slot one step back in the cycle `Zero ← Infinity ← MinusOne ← Zero`.
    ///
    /// Fails with [`FareyError::WrongComponent`] off the `MinusOne` branch.
    pub fn phi(&self) -> Result<Self, FareyError> {
        self.require_component(Some(ParityClass::MinusOne))?;
        Ok(FareyTriple {
            q0: self.qinf.moebius(),
            qm1: self.q0.moebius(),
            qinf: self.qm1.moebius(),
        })
    }

    /// Inverse of [`FareyTriple::phi`]; defined on the `Infinity` branch.
    pub fn phi_inv(&self) -> Result<Self, FareyError> {
        self.require_component(Some(ParityClass::Infinity))?;
        Ok(FareyTriple {
            q0: self.qm1.moebius_inv(),
            qm1: self.qinf.moebius_inv(),
            qinf: self.q0.moebius_inv(),
        })
    }

    /// The tree isomorphism from the `MinusOne` branch onto the `Zero`
    /// branch, built from [`ExtRational::moebius_inv`] the same way
    /// [`FareyTriple::phi`] is built from the forward rotation.
    ///
    /// Fails with [`FareyError::WrongComponent`] off the `MinusOne` branch.
    pub fn psi(&self) -> Result<Self, FareyError> {
        self.require_component(Some(ParityClass::MinusOne))?;
        Ok(FareyTriple {
            q0: self.qm1.moebius_inv(),
            qm1: self.qinf.moebius_inv(),
            qinf: self.q0.moebius_inv(),
        })
    }

    /// Inverse of [`FareyTriple::psi`]; defined on the `Zero` branch.
    pub fn psi_inv(&self) -> Result<Self, FareyError> {
        self.require_component(Some(ParityClass::Zero))?;
        Ok(FareyTriple {
            q0: self.qinf.moebius(),
            qm1: self.q0.moebius(),
            qinf: self.qm1.moebius(),
        })
    }
}

/// How `phi` relabels tree edges: for a triple on the `MinusOne` branch,
/// mutating in direction `k` and then applying `phi` equals applying `phi`
/// first and mutating in direction `phi_edge_relabel(k)`.
pub fn phi_edge_relabel(k: ParityClass) -> ParityClass {
    match k {
        ParityClass::MinusOne => ParityClass::Infinity,
        ParityClass::Zero => ParityClass::MinusOne,
        ParityClass::Infinity => ParityClass::Zero,
    }
}

/// How `psi` relabels tree edges; the counterpart of [`phi_edge_relabel`].
pub fn psi_edge_relabel(k: ParityClass) -> ParityClass {
    match k {
        ParityClass::MinusOne => ParityClass::Zero,
        ParityClass::Zero => ParityClass::Infinity,
        ParityClass::Infinity => ParityClass::MinusOne,
    }
}

/// Renders the slots in order `(Zero, MinusOne, Infinity)`, e.g.
/// `0/1,-1/1,1/0`.
impl fmt::Display for FareyTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.q0, self.qm1, self.qinf)
    }
}

/// Parses three comma-separated fractions in any slot order.
impl FromStr for FareyTriple {
    type Err = FareyError;

    fn from_str(s: &str) -> Result<Self, FareyError> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 3 {
            return Err(FareyError::ParseTripleArity { input: s.to_string(), found: parts.len() });
        }
        FareyTriple::new(parts[0].parse()?, parts[1].parse()?, parts[2].parse()?)
    }
}

/// Walks the mutation tree breadth-first to the given depth, returning each
/// triple together with the reduced word that produces it from the root
/// (applied left to right). The root comes first with the empty word; no
/// branch ever reuses the letter that was just applied, so every listed
/// triple is distinct and the list has `1 + 3·(2^depth - 1)` entries.
pub fn enumerate(depth: usize) -> Result<Vec<(FareyTriple, MutationWord)>, FareyError> {
    if depth > MAX_ENUMERATION_DEPTH {
        return Err(FareyError::DepthTooLarge { depth, max: MAX_ENUMERATION_DEPTH });
    }
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    queue.push_back((FareyTriple::initial(), MutationWord::empty()));
    while let Some((triple, word)) = queue.pop_front() {
        if word.len() < depth {
            for k in ParityClass::ALL {
                if word.last() == Some(k) {
                    continue;
                }
                let mut next_word = word.clone();
                next_word.push(k);
                queue.push_back((triple.mutate(k), next_word));
            }
        }
        out.push((triple, word));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;
    use ParityClass::{Infinity, MinusOne, Zero};

    fn rat(num: i64, den: i64) -> ExtRational {
        ExtRational::new(num, den).unwrap()
    }

    fn triple(s: &str) -> FareyTriple {
        s.parse().unwrap()
    }

    #[test]
    fn construction_slots_by_parity_in_any_order() {
        let t = FareyTriple::new(ExtRational::infinity(), rat(-1, 1), rat(0, 1)).unwrap();
        assert_eq!(t, FareyTriple::initial());
        assert_eq!(t.q0(), &rat(0, 1));
        assert_eq!(t.qm1(), &rat(-1, 1));
        assert_eq!(t.qinf(), &ExtRational::infinity());
    }

    #[test]
    fn construction_rejects_duplicate_classes_and_non_neighbors() {
        let err = FareyTriple::new(rat(0, 1), rat(2, 1), rat(1, 1)).unwrap_err();
        assert!(matches!(err, FareyError::DuplicateParity { class: Zero, .. }));

        let err = FareyTriple::new(rat(0, 1), rat(3, 1), ExtRational::infinity()).unwrap_err();
        assert!(matches!(err, FareyError::NotNeighbors { .. }));
    }

    #[test]
    fn positions_order_by_value_with_infinity_last() {
        assert_eq!(FareyTriple::initial().positions(), (MinusOne, Zero, Infinity));
        assert_eq!(triple("0/1,1/1,1/0").positions(), (Zero, MinusOne, Infinity));
        assert_eq!(triple("0/1,-1/1,-1/2").positions(), (MinusOne, Infinity, Zero));
    }

    #[test]
    fn mutating_the_root_gives_the_three_depth_one_triples() {
        let root = FareyTriple::initial();
        assert_eq!(root.mutate(MinusOne), triple("0/1,1/1,1/0"));
        assert_eq!(root.mutate(Zero), triple("-2/1,-1/1,1/0"));
        assert_eq!(root.mutate(Infinity), triple("0/1,-1/1,-1/2"));
    }

    #[test]
    fn mutation_is_an_involution_that_preserves_slots() {
        let samples = [
            FareyTriple::initial(),
            triple("0/1,1/1,1/0"),
            triple("2/1,1/1,1/0"),
            triple("0/1,1/1,1/2"),
            triple("2/1,7/3,5/2"),
        ];
        for t in &samples {
            for k in ParityClass::ALL {
                let once = t.mutate(k);
                assert_eq!(once.mutate(k), *t, "mutating {t} twice at {k}");
                for other in ParityClass::ALL {
                    if other != k {
                        assert_eq!(once.get(other), t.get(other), "slot {other} moved");
                    }
                }
            }
        }
    }

    #[test]
    fn middle_replacement_with_equal_denominators_restores_infinity() {
        // [0/1, 1/2, 1/1] mutated at its middle slot (class Infinity)
        // subtracts 1/1 from 0/1 and must produce the canonical 1/0.
        let t = FareyTriple::new(rat(0, 1), rat(1, 2), rat(1, 1)).unwrap();
        assert_eq!(t.mutate(Infinity), triple("0/1,1/1,1/0"));
    }

    #[test]
    fn complexity_reads_the_middle_component() {
        assert_eq!(FareyTriple::initial().complexity(), BigInt::from(1));
        assert_eq!(triple("0/1,1/1,1/0").complexity(), BigInt::from(2));
        assert_eq!(triple("2/1,1/1,1/0").complexity(), BigInt::from(3));
        assert_eq!(triple("0/1,-1/1,-1/2").complexity(), BigInt::from(3));
    }

    #[test]
    fn descent_picks_the_unique_decreasing_direction() {
        assert_eq!(triple("0/1,1/1,1/0").descent_direction().unwrap(), MinusOne);
        assert_eq!(triple("0/1,-1/1,-1/2").descent_direction().unwrap(), Infinity);
        assert_eq!(triple("-2/1,-1/1,1/0").descent_direction().unwrap(), Zero);
        assert_eq!(FareyTriple::initial().descent_direction(), Err(FareyError::IsInitial));
    }

    #[test]
    fn negative_integer_triples_descend_through_their_smallest_component() {
        // Triples [(-z-1)/1, -z/1, 1/0] descend through the class of the
        // value-smallest component.
        for z in 1..=6i64 {
            let t = FareyTriple::new(rat(-z - 1, 1), rat(-z, 1), ExtRational::infinity()).unwrap();
            let (first, _, _) = t.positions();
            assert_eq!(t.descent_direction().unwrap(), first);
        }
    }

    #[test]
    fn paths_descend_to_the_root() {
        assert_eq!(FareyTriple::initial().path_to_initial().unwrap(), MutationWord::empty());
        assert_eq!(
            triple("2/1,1/1,1/0").path_to_initial().unwrap(),
            MutationWord::new(vec![Zero, MinusOne])
        );
        let t = triple("2/1,7/3,5/2");
        let path = t.path_to_initial().unwrap();
        assert!(t.apply_word(&path).is_initial());
        assert!(path.is_reduced());
    }

    #[test]
    fn component_is_the_last_descent_letter() {
        assert_eq!(FareyTriple::initial().component().unwrap(), None);
        assert_eq!(triple("0/1,1/1,1/0").component().unwrap(), Some(MinusOne));
        assert_eq!(triple("2/1,1/1,1/0").component().unwrap(), Some(MinusOne));
        assert_eq!(triple("-2/1,-1/1,1/0").component().unwrap(), Some(Zero));
        assert_eq!(triple("0/1,-1/1,-1/2").component().unwrap(), Some(Infinity));
    }

    #[test]
    fn phi_and_psi_map_the_base_point() {
        let base = triple("0/1,1/1,1/0");
        assert_eq!(base.phi().unwrap(), triple("0/1,-1/1,-1/2"));
        assert_eq!(base.psi().unwrap(), triple("-2/1,-1/1,1/0"));
        assert_eq!(triple("0/1,-1/1,-1/2").phi_inv().unwrap(), base);
        assert_eq!(triple("-2/1,-1/1,1/0").psi_inv().unwrap(), base);
    }

    #[test]
    fn phi_and_psi_require_their_branches() {
        let err = FareyTriple::initial().phi().unwrap_err();
        assert!(matches!(err, FareyError::WrongComponent { .. }));
        assert!(triple("-2/1,-1/1,1/0").phi().is_err());
        assert!(triple("0/1,1/1,1/0").phi_inv().is_err());
        assert!(triple("0/1,-1/1,-1/2").psi_inv().is_err());
    }

    #[test]
    fn phi_and_psi_invert_and_relabel_edges() {
        for (t, word) in enumerate(5).unwrap() {
            if word.letters().first() != Some(&MinusOne) {
                continue;
            }
            let phi_image = t.phi().unwrap();
            let psi_image = t.psi().unwrap();
            assert_eq!(phi_image.phi_inv().unwrap(), t);
            assert_eq!(psi_image.psi_inv().unwrap(), t);
            for k in ParityClass::ALL {
                let mutated = t.mutate(k);
                if mutated.is_initial() {
                    continue;
                }
                assert_eq!(mutated.phi().unwrap(), phi_image.mutate(phi_edge_relabel(k)));
                assert_eq!(mutated.psi().unwrap(), psi_image.mutate(psi_edge_relabel(k)));
            }
        }
    }

    #[test]
    fn enumeration_counts_and_distinctness() {
        for depth in 0..=6 {
            let listed = enumerate(depth).unwrap();
            assert_eq!(listed.len(), 1 + 3 * ((1 << depth) - 1));
            let distinct: HashSet<_> = listed.iter().map(|(t, _)| t.clone()).collect();
            assert_eq!(distinct.len(), listed.len(), "duplicate triple at depth {depth}");
            for (t, word) in &listed {
                assert!(word.is_reduced());
                assert_eq!(&FareyTriple::initial().apply_word(word), t);
                assert_eq!(&t.path_to_initial().unwrap(), &word.reversed());
            }
        }
    }

    #[test]
    fn enumeration_depth_is_capped() {
        assert_eq!(
            enumerate(MAX_ENUMERATION_DEPTH + 1),
            Err(FareyError::DepthTooLarge { depth: 21, max: 20 })
        );
    }

    #[test]
    fn triple_parsing_accepts_any_order_and_aliases() {
        assert_eq!(triple("inf,-1,0"), FareyTriple::initial());
        assert_eq!(triple("0/1,-1/1,1/0"), FareyTriple::initial());
        assert!("0/1,-1/1".parse::<FareyTriple>().is_err());
        assert!("0/1,3/1,1/0".parse::<FareyTriple>().is_err());
        assert_eq!(triple("7/3,2/1,5/2").to_string(), "2/1,7/3,5/2");
    }
}
