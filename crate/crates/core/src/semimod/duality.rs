use rayon::prelude::*;

use super::factors::{product_rational, psi, psi_product};
use crate::rings::NovikovSeries;
use crate::verify::CheckResult;
use crate::weyl::LetterSet;

const SUITE: &str = "semimod";

/// `I = A ⊔ B̄ ⊔ K ⊔ K̄` with `A`, `B`, `K ⊆ [1, n]` pairwise disjoint; each
/// part is stored increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub k: Vec<usize>,
}

impl Decomposition {
    pub fn of(set: &LetterSet) -> Self {
        let mut d = Decomposition { a: Vec::new(), b: Vec::new(), k: Vec::new() };
        for m in 1..=set.rank() {
            let x = m as i32;
            match (set.contains(x), set.contains(-x)) {
                (true, false) => d.a.push(m),
                (false, true) => d.b.push(m),
                (true, true) => d.k.push(m),
                (false, false) => {}
            }
        }
        d
    }

    /// `M = max(A ⊔ B)`, or `0` when both are empty.
    pub fn top(&self) -> usize {
        self.a.iter().chain(&self.b).copied().max().unwrap_or(0)
    }
}

fn build(n: usize, a: &[usize], b: &[usize], pairs: &[usize]) -> LetterSet {
    let mut s = LetterSet::empty(n);
    for &m in a {
        s.insert(m as i32);
    }
    for &m in b {
        s.insert(-(m as i32));
    }
    for &m in pairs {
        s.insert(m as i32);
        s.insert(-(m as i32));
    }
    s
}

/// `I* = A ⊔ B̄ ⊔ U ⊔ Ū` where `U = [1, n] ∖ (A ⊔ B ⊔ K)`.
pub fn star_map(set: &LetterSet) -> LetterSet {
    let n = set.rank();
    let d = Decomposition::of(set);
    let others: Vec<usize> =
        (1..=n).filter(|m| !d.a.contains(m) && !d.b.contains(m) && !d.k.contains(m)).collect();
    build(n, &d.a, &d.b, &others)
}

/// `𝒥_{A,B}^k`: subsets `I` of size `k` with `ε_I = ε_A − ε_B`.
pub fn jab_sets(n: usize, a: &[usize], b: &[usize], k: usize) -> Vec<LetterSet> {
    let fixed = a.len() + b.len();
    if k < fixed || (k - fixed) % 2 == 1 {
        return Vec::new();
    }
    let r = (k - fixed) / 2;
    let free: Vec<usize> = (1..=n).filter(|m| !a.contains(m) && !b.contains(m)).collect();
    choose(&free, r).into_iter().map(|pairs| build(n, a, b, &pairs)).collect()
}

fn choose(items: &[usize], r: usize) -> Vec<Vec<usize>> {
    if r == 0 {
        return vec![Vec::new()];
    }
    if items.len() < r {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in choose(&items[i + 1..], r - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

/// All disjoint pairs `(A, B)` of subsets of `[1, n]`.
fn disjoint_pairs(n: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for code in 0..3usize.pow(n as u32) {
        let (mut a, mut b, mut c) = (Vec::new(), Vec::new(), code);
        for m in 1..=n {
            match c % 3 {
                1 => a.push(m),
                2 => b.push(m),
                _ => {}
            }
            c /= 3;
        }
        out.push((a, b));
    }
    out
}

fn psi_sum<'a>(n: usize, sets: impl Iterator<Item = &'a LetterSet>) -> NovikovSeries {
    let mut acc = NovikovSeries::zero(n, None);
    for s in sets {
        acc = &acc + &psi_product(s, None);
    }
    acc
}

/// `(I*)* = I` and `I* ∈ 𝒥_{A,B}^{2n−k}` for every `I ⊆ [1, 1̄]`.
pub fn check_star_involution(n: usize) -> CheckResult {
    let fails: Vec<String> = (0u32..1 << (2 * n))
        .into_par_iter()
        .filter_map(|bits| {
            let set = LetterSet::from_bits(n, bits);
            let star = star_map(&set);
            let d = Decomposition::of(&set);
            let ds = Decomposition::of(&star);
            if star_map(&star) != set {
                Some(format!("(I*)* != I for I={set}"))
            } else if ds.a != d.a || ds.b != d.b || star.len() != 2 * n - set.len() {
                Some(format!("I*={star} not in J_(A,B)^(2n-k) for I={set}"))
            } else {
                None
            }
        })
        .collect();
    CheckResult::from_failures(SUITE, format!("I -> I* is an involution J^k -> J^(2n-k) (n={n})"), 1 << (2 * n), &fails)
}

/// Both sides of the symmetric sum `Σ_{I ∈ 𝒥^k} Π ψ_I = Σ_{I ∈ 𝒥^{2n−k}} Π ψ_I`
/// for every disjoint `(A, B)` and every `k`.
pub fn check_duality(n: usize) -> CheckResult {
    let pairs = disjoint_pairs(n);
    let results: Vec<(usize, Vec<String>)> = pairs
        .par_iter()
        .map(|(a, b)| {
            let mut count = 0;
            let mut fails = Vec::new();
            for k in 0..=2 * n {
                let lhs = jab_sets(n, a, b, k);
                if lhs.is_empty() {
                    continue;
                }
                count += 1;
                let rhs = jab_sets(n, a, b, 2 * n - k);
                if psi_sum(n, lhs.iter()) != psi_sum(n, rhs.iter()) {
                    fails.push(format!("A={a:?}, B={b:?}, k={k}"));
                }
            }
            (count, fails)
        })
        .collect();
    let count = results.iter().map(|r| r.0).sum();
    let fails: Vec<String> = results.into_iter().flat_map(|r| r.1).collect();
    CheckResult::from_failures(SUITE, format!("psi sums over J_(A,B)^k and J_(A,B)^(2n-k) agree (n={n})"), count, &fails)
}

/// `S(J, p) = T(J, p)` for every disjoint `(A, B)`, `1 ≤ p ≤ n − M − 1` and
/// `J ∈ 𝒥_{A,B}(0)` of any size.
pub fn check_s_equals_t(n: usize) -> CheckResult {
    let pairs = disjoint_pairs(n);
    let results: Vec<(usize, Vec<String>)> = pairs
        .par_iter()
        .map(|(a, b)| {
            let top = a.iter().chain(b).copied().max().unwrap_or(0);
            let low: Vec<usize> = (1..=top).filter(|m| !a.contains(m) && !b.contains(m)).collect();
            let high: Vec<usize> = (top + 1..=n).collect();
            let mut count = 0;
            let mut fails = Vec::new();
            for r in 0..=low.len() {
                for kj in choose(&low, r) {
                    let j = build(n, a, b, &kj);
                    for p in 1..(n - top) {
                        count += 1;
                        let extended: Vec<LetterSet> =
                            choose(&high, p).into_iter().map(|ks| j.union(&build(n, &[], &[], &ks))).collect();
                        let s = psi_sum(n, extended.iter());
                        let starred: Vec<LetterSet> = extended.iter().map(star_map).collect();
                        let t = psi_sum(n, starred.iter());
                        if s != t {
                            fails.push(format!("A={a:?}, B={b:?}, J={j}, p={p}"));
                        }
                    }
                }
            }
            (count, fails)
        })
        .collect();
    let count = results.iter().map(|r| r.0).sum();
    let fails: Vec<String> = results.into_iter().flat_map(|r| r.1).collect();
    CheckResult::from_failures(SUITE, format!("S(J,p) = T(J,p) (n={n})"), count, &fails)
}

fn lemma_hypothesis(set: &LetterSet) -> bool {
    let d = Decomposition::of(set);
    let top = d.top();
    let tail = (top + 1..=set.rank()).all(|m| set.contains(m as i32));
    match d.k.last() {
        None => true,
        Some(&kr) => kr < top || tail,
    }
}

/// `Π_{j ∉ I, j+1 ∈ I} (1 − 𝒯_j) · Π_{2 ≤ j ≤ n, j̄ ∉ I, \overline{j−1} ∈ I} (1 − 𝒯_{j−1})`.
fn boundary_product(set: &LetterSet) -> NovikovSeries {
    let n = set.rank();
    let mut acc = NovikovSeries::one(n, None);
    for j in 1..=n {
        let next = if j < n { j as i32 + 1 } else { -(n as i32) };
        if !set.contains(j as i32) && set.contains(next) {
            acc = &acc * &NovikovSeries::one_minus_var(n, j, None);
        }
    }
    for j in 2..=n {
        if !set.contains(-(j as i32)) && set.contains(-(j as i32 - 1)) {
            acc = &acc * &NovikovSeries::one_minus_var(n, j - 1, None);
        }
    }
    acc
}

/// Under the hypothesis `k_r < max(A ⊔ B)` or `{M+1, …, n} ⊆ I`, the three
/// products `Π ψ_I`, the boundary product and `Π ψ_{I*}` coincide.
pub fn check_lemma_duality(n: usize) -> CheckResult {
    let results: Vec<Option<String>> = (0u32..1 << (2 * n))
        .into_par_iter()
        .map(|bits| {
            let set = LetterSet::from_bits(n, bits);
            if !lemma_hypothesis(&set) {
                return None;
            }
            let lhs = product_rational(&set, psi);
            let mid = psi_product(&set, None);
            if mid != boundary_product(&set) || lhs.numerator() != &mid {
                return Some(format!("boundary product differs at I={set}"));
            }
            (psi_product(&star_map(&set), None) != mid).then(|| format!("I={set} vs I*={}", star_map(&set)))
        })
        .collect();
    let fails: Vec<String> = results.iter().flatten().cloned().collect();
    CheckResult::from_failures(SUITE, format!("psi products agree on I and I* under the lemma hypothesis (n={n})"), 1 << (2 * n), &fails)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example_rank_seven() {
        let i = LetterSet::from_letters(7, &[2, 4, 5, -6, -5, -2]);
        let d = Decomposition::of(&i);
        assert_eq!((d.a.clone(), d.b.clone(), d.k.clone()), (vec![4], vec![6], vec![2, 5]));
        let star = star_map(&i);
        assert_eq!(star, LetterSet::from_letters(7, &[4, -6, 1, 3, 7, -1, -3, -7]));
        assert!(jab_sets(7, &[4], &[6], 6).contains(&i));
        assert!(jab_sets(7, &[4], &[6], 8).contains(&star));
    }

    #[test]
    fn jab_sizes() {
        assert_eq!(jab_sets(3, &[], &[], 2).len(), 3);
        assert!(jab_sets(3, &[1], &[], 2).is_empty());
        assert_eq!(jab_sets(3, &[1], &[2], 4).len(), 1);
    }

    #[test]
    fn duality_checks_small_ranks() {
        for n in 1..=3 {
            assert!(check_star_involution(n).passed);
            assert!(check_duality(n).passed);
            let st = check_s_equals_t(n);
            assert!(st.passed, "{st:?}");
            let lemma = check_lemma_duality(n);
            assert!(lemma.passed, "{lemma:?}");
        }
    }
}
