//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's reduction code.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Determinant by fraction-free elimination with row swaps.
pub fn det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut prev = BigInt::one();
    let mut negate = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let d = if n == 0 { BigInt::one() } else { a[n - 1][n - 1].clone() };
    if negate {
        -d
    } else {
        d
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// gcd of all `k×k` minors (the `k`-th determinantal divisor).
pub fn minor_gcd(m: &[Vec<BigInt>], k: usize) -> BigInt {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut g = BigInt::zero();
    for rs in subsets(rows, k) {
        for cs in subsets(cols, k) {
            let sub: Vec<Vec<BigInt>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c].clone()).collect()).collect();
            g = g.gcd(&det(&sub));
        }
    }
    g
}

/// Plain triple-loop product.
pub fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>], inner: usize, cols: usize) -> Vec<Vec<BigInt>> {
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| &row[k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

fn sign(e: u64) -> BigInt {
    if e % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `n_j = Σ_{k=max(j,1)}^{p−1} C(p,k)(−1)^k C(k,j)(−1)^j` for `j = 1..p−1`.
pub fn lambda_binomial(p: u64) -> Vec<BigInt> {
    (1..p)
        .map(|j| {
            (j..p)
                .map(|k| binomial(p, k) * sign(k) * binomial(k, j) * sign(j))
                .sum()
        })
        .collect()
}

/// Product in `Z[σ]/(σᵖ − 1)`, coefficient vectors of length `p`.
pub fn cyclic_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let p = a.len();
    let mut out = vec![BigInt::zero(); p];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[(i + j) % p] += x * y;
        }
    }
    out
}

/// `λ = 1 − σ` in `Z[σ]/(σᵖ − 1)`.
pub fn lambda(p: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); p];
    v[0] = BigInt::one();
    if p > 1 {
        v[1] = -BigInt::one();
    } else {
        v[0] = BigInt::zero();
    }
    v
}

pub fn cyclic_pow(x: &[BigInt], e: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); x.len()];
    out[0] = BigInt::one();
    for _ in 0..e {
        out = cyclic_mul(&out, x);
    }
    out
}

/// Divisibility chain `d₁ | d₂ | …` of positive entries.
pub fn is_divisor_chain(d: &[BigInt]) -> bool {
    d.iter().all(|x| x.is_positive()) && d.windows(2).all(|w| w[1].is_multiple_of(&w[0]))
}
