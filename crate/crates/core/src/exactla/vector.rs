//! Free functions on [`Vector`]s. Callers are responsible for matching
//! lengths; mismatches are a programming error and panic.

use num_traits::Zero;

use super::{Rational, Vector};

pub fn zeros(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

pub fn unit(n: usize, i: usize) -> Vector {
    let mut v = zeros(n);
    v[i] = super::int(1);
    v
}

pub fn is_zero(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add(a: &[Rational], b: &[Rational]) -> Vector {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Rational], b: &[Rational]) -> Vector {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn neg(a: &[Rational]) -> Vector {
    a.iter().map(|x| -x).collect()
}

pub fn scale(c: &Rational, a: &[Rational]) -> Vector {
    a.iter().map(|x| c * x).collect()
}

pub fn add_assign(acc: &mut [Rational], b: &[Rational]) {
    assert_eq!(acc.len(), b.len());
    for (x, y) in acc.iter_mut().zip(b) {
        *x += y;
    }
}

pub fn sub_assign(acc: &mut [Rational], b: &[Rational]) {
    assert_eq!(acc.len(), b.len());
    for (x, y) in acc.iter_mut().zip(b) {
        *x -= y;
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Concatenation `(a, b)`.
pub fn concat(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().chain(b).cloned().collect()
}

/// Sums a list of terms of equal length `n`.
pub fn sum<'a>(n: usize, terms: impl IntoIterator<Item = &'a Vector>) -> Vector {
    let mut acc = zeros(n);
    for t in terms {
        add_assign(&mut acc, t);
    }
    acc
}
