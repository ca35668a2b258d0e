//! Left scan and left fold over sequences.
//!
//! `scan` prepends the initial value, so the output is one element longer
//! than the input. The `_same` variants take the first element of the input
//! as the initial value. These are the building blocks every row kernel in
//! this crate is phrased in.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Left scan: `[init, f(init, x1), f(f(init, x1), x2), ...]`.
///
/// Output length is `xs.len() + 1`; an empty input yields `[init]`.
pub fn scan<A, X, F>(mut f: F, init: A, xs: &[X]) -> Vec<A>
where
    A: Clone,
    F: FnMut(&A, &X) -> A,
{
    let mut out = Vec::with_capacity(xs.len() + 1);
    let mut acc = init;
    for x in xs {
        let next = f(&acc, x);
        out.push(core::mem::replace(&mut acc, next));
    }
    out.push(acc);
    out
}

/// Left scan taking `xs[0]` as the initial value. Output length equals
/// `xs.len()`.
pub fn scan_same<T, F>(mut f: F, xs: &[T]) -> Result<Vec<T>>
where
    T: Clone,
    F: FnMut(&T, &T) -> T,
{
    let (first, rest) = xs.split_first().ok_or(Error::EmptySequence)?;
    Ok(scan(|a, x| f(a, x), first.clone(), rest))
}

/// In-place variant of [`scan_same`]: `a[j] <- f(a[j-1]', a[j])` left to
/// right, `a[0]` unchanged. Matches the allocating version element for
/// element.
pub fn scan_same_in_place<T, F>(mut f: F, a: &mut [T])
where
    T: Clone,
    F: FnMut(&T, &T) -> T,
{
    for j in 1..a.len() {
        a[j] = f(&a[j - 1], &a[j]);
    }
}

/// Left fold; equals the last element of [`scan`].
pub fn fold<A, X, F>(mut f: F, init: A, xs: &[X]) -> A
where
    F: FnMut(A, &X) -> A,
{
    let mut acc = init;
    for x in xs {
        acc = f(acc, x);
    }
    acc
}

/// Left fold taking `xs[0]` as the initial value.
pub fn fold_same<T, F>(mut f: F, xs: &[T]) -> Result<T>
where
    T: Clone,
    F: FnMut(T, &T) -> T,
{
    let (first, rest) = xs.split_first().ok_or(Error::EmptySequence)?;
    Ok(fold(|a, x| f(a, x), first.clone(), rest))
}
