//! Small permutation helpers: parity and signed enumeration of `S_n`.

use alloc::vec::Vec;

/// Parity of a permutation given in one-line notation (`perm[i]` is the image
/// of `i`). Returns `true` for odd permutations.
///
/// Panics if `perm` is not a permutation of `0..perm.len()`.
pub fn is_odd(perm: &[usize]) -> bool {
    let n = perm.len();
    let mut seen = alloc::vec![false; n];
    let mut transpositions = 0usize;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0usize;
        let mut i = start;
        while !seen[i] {
            assert!(perm[i] < n, "not a permutation");
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        transpositions += len - 1;
    }
    transpositions % 2 == 1
}

/// Parity of the permutation that rearranges `from` into `to`. Both slices
/// must hold the same distinct values (they need not be `0..n`).
pub fn relative_parity_odd(from: &[usize], to: &[usize]) -> bool {
    assert_eq!(from.len(), to.len());
    let max = from.iter().copied().max().map_or(0, |m| m + 1);
    let mut pos = alloc::vec![usize::MAX; max];
    for (i, &x) in from.iter().enumerate() {
        pos[x] = i;
    }
    let perm: Vec<usize> = to
        .iter()
        .map(|&x| {
            let p = *pos.get(x).unwrap_or(&usize::MAX);
            assert!(p != usize::MAX, "sequences hold different values");
            p
        })
        .collect();
    is_odd(&perm)
}

/// Inverse permutation.
pub fn inverse(perm: &[usize]) -> Vec<usize> {
    let mut inv = alloc::vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}

/// All permutations of `0..n` together with their parity, in a fixed
/// deterministic order (Heap's algorithm).
pub fn signed_permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    let mut out = Vec::new();
    let mut a: Vec<usize> = (0..n).collect();
    let mut c = alloc::vec![0usize; n];
    let mut odd = false;
    out.push((a.clone(), odd));
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            odd = !odd;
            out.push((a.clone(), odd));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_of_small_permutations() {
        assert!(!is_odd(&[0, 1, 2]));
        assert!(is_odd(&[1, 0, 2]));
        assert!(!is_odd(&[1, 2, 0]));
        // (0 3)(1 2): two transpositions
        assert!(!is_odd(&[3, 2, 1, 0, 4]));
    }

    #[test]
    fn heap_enumerates_all_with_correct_sign() {
        for n in 0..6 {
            let all = signed_permutations(n);
            let expected: usize = (1..=n).product();
            assert_eq!(all.len(), expected.max(1));
            let mut sorted: Vec<_> = all.iter().map(|(p, _)| p.clone()).collect();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), all.len());
            for (p, odd) in &all {
                assert_eq!(is_odd(p), *odd);
            }
        }
    }

    #[test]
    fn relative_parity_matches_inversion_count() {
        assert!(relative_parity_odd(&[0, 1, 2, 3, 4, 5], &[0, 2, 4, 1, 3, 5]));
        assert!(!relative_parity_odd(&[0, 1, 2, 3, 4, 5], &[0, 2, 4, 1, 5, 3]));
        assert!(!relative_parity_odd(&[7, 9], &[7, 9]));
        assert!(relative_parity_odd(&[7, 9], &[9, 7]));
    }
}
