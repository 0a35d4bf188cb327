#![allow(dead_code)]

use proptest::prelude::*;
use troplectra::{Rational, SMatrixQ, SScalarQ};

pub fn magnitude() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=2).prop_map(|(n, d)| Rational::new(n, d))
}

pub fn signed_scalar() -> impl Strategy<Value = SScalarQ> {
    prop_oneof![
        1 => Just(SScalarQ::Zero),
        3 => magnitude().prop_map(SScalarQ::pos),
        3 => magnitude().prop_map(SScalarQ::neg),
    ]
}

pub fn scalar() -> impl Strategy<Value = SScalarQ> {
    prop_oneof![
        6 => signed_scalar(),
        1 => magnitude().prop_map(SScalarQ::bal),
    ]
}

pub fn matrix_of(n: usize, entry: impl Strategy<Value = SScalarQ>) -> impl Strategy<Value = SMatrixQ> {
    proptest::collection::vec(entry, n * n).prop_map(move |d| SMatrixQ::new(n, n, d).expect("square"))
}

pub fn signed_matrix(max_n: usize) -> impl Strategy<Value = SMatrixQ> {
    (1..=max_n).prop_flat_map(|n| matrix_of(n, signed_scalar()))
}

pub fn any_matrix(max_n: usize) -> impl Strategy<Value = SMatrixQ> {
    (1..=max_n).prop_flat_map(|n| matrix_of(n, scalar()))
}

/// All permutations of `0..n` with their parity (true = odd).
pub fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<(Vec<usize>, bool)>) {
        if prefix.len() == n {
            let mut inv = 0;
            for i in 0..n {
                for j in i + 1..n {
                    inv += usize::from(prefix[i] > prefix[j]);
                }
            }
            out.push((prefix.clone(), inv % 2 == 1));
            return;
        }
        for j in 0..n {
            if !prefix.contains(&j) {
                prefix.push(j);
                go(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

/// Signed determinant by full permutation expansion.
pub fn brute_det(a: &SMatrixQ) -> SScalarQ {
    let n = a.rows();
    let mut acc = SScalarQ::Zero;
    for (p, odd) in permutations(n) {
        let mut term = SScalarQ::p(0);
        for (i, &j) in p.iter().enumerate() {
            term = term * a[(i, j)];
        }
        acc = acc + if odd { -term } else { term };
    }
    acc
}
