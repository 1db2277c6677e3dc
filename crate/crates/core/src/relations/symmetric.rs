//! Complete and elementary symmetric polynomials in monomial variables
//! `e^{μ_1}, …, e^{μ_d}`, and the type C specializations `H_l^k`, `E_l^n`.

use num_bigint::BigInt;

use crate::rings::{GroupRingElement, Weight};

/// `e^{ε_1}, …, e^{ε_k}, e^{−ε_k}, …, e^{−ε_1}` as exponent vectors of rank `n`.
pub fn doubled_variables(n: usize, lo: usize, hi: usize) -> Vec<Weight> {
    let mut vars: Vec<Weight> = (lo..=hi).map(|i| Weight::epsilon(n, i as i32)).collect();
    vars.extend((lo..=hi).rev().map(|i| Weight::epsilon(n, -(i as i32))));
    vars
}

/// `h_0, …, h_top` of the given monomials; `h_0 = 1`.
pub fn complete_table(rank: usize, vars: &[Weight], top: usize) -> Vec<GroupRingElement> {
    let mut h = vec![GroupRingElement::zero(rank); top + 1];
    h[0] = GroupRingElement::one(rank);
    for x in vars {
        // h^{(j)}_l = h^{(j-1)}_l + x·h^{(j)}_{l-1}
        for l in 1..=top {
            let prev = h[l - 1].shift(x);
            h[l] = &h[l] + &prev;
        }
    }
    h
}

/// `e_0, …, e_d` of the given monomials.
pub fn elementary_table(rank: usize, vars: &[Weight]) -> Vec<GroupRingElement> {
    let d = vars.len();
    let mut e = vec![GroupRingElement::zero(rank); d + 1];
    e[0] = GroupRingElement::one(rank);
    for (j, x) in vars.iter().enumerate() {
        for l in (1..=j + 1).rev() {
            let prev = e[l - 1].shift(x);
            e[l] = &e[l] + &prev;
        }
    }
    e
}

/// `h_l` with `h_l = 0` for `l < 0`.
pub fn complete_h_vars(rank: usize, vars: &[Weight], l: i64) -> GroupRingElement {
    if l < 0 {
        return GroupRingElement::zero(rank);
    }
    complete_table(rank, vars, l as usize).pop().expect("nonempty table")
}

/// `e_l`, zero outside `0..=d`.
pub fn elementary_vars(rank: usize, vars: &[Weight], l: i64) -> GroupRingElement {
    if l < 0 || l as usize > vars.len() {
        return GroupRingElement::zero(rank);
    }
    elementary_table(rank, vars)[l as usize].clone()
}

/// `H_l^k = h_l(e^{ε_1}, …, e^{ε_k}, e^{−ε_k}, …, e^{−ε_1})` in rank `n`.
pub fn complete_h(n: usize, l: i64, k: usize) -> GroupRingElement {
    complete_h_vars(n, &doubled_variables(n, 1, k), l)
}

/// `E_l^n = e_l(e^{ε_1}, …, e^{ε_n}, e^{−ε_n}, …, e^{−ε_1})`.
pub fn elementary_e(n: usize, l: i64) -> GroupRingElement {
    elementary_vars(n, &doubled_variables(n, 1, n), l)
}

/// `h_l` by brute force over multisets, for cross-checking the recurrence.
pub fn complete_h_bruteforce(rank: usize, vars: &[Weight], l: usize) -> GroupRingElement {
    fn go(rank: usize, vars: &[Weight], l: usize, start: usize, acc: Weight, out: &mut GroupRingElement) {
        if l == 0 {
            out.add_term_in_place(acc, BigInt::from(1));
            return;
        }
        for i in start..vars.len() {
            go(rank, vars, l - 1, i, &acc + &vars[i], out);
        }
    }
    let mut out = GroupRingElement::zero(rank);
    go(rank, vars, l, 0, Weight::zero(rank), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_agree_with_bruteforce() {
        let vars = doubled_variables(3, 1, 3);
        let table = complete_table(3, &vars, 5);
        for (l, h) in table.iter().enumerate() {
            assert_eq!(h, &complete_h_bruteforce(3, &vars, l));
        }
    }

    #[test]
    fn elementary_counts() {
        let e = elementary_table(2, &doubled_variables(2, 1, 2));
        assert_eq!(e.len(), 5);
        assert!(e[0].is_one());
        assert!(e[4].is_one());
        // e_2(x, y, 1/y, 1/x) has six monomials, two of which equal 1.
        assert_eq!(e[2].coeff(&Weight::zero(2)), BigInt::from(2));
        assert_eq!(e[2].len(), 5);
    }
}
