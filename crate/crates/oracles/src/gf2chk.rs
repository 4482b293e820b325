//! Independent GF(2) linear algebra on u64 row bitmasks (bit j of row i is
//! entry (i,j)). Kept separate from the byte-matrix implementation so the two
//! can cross-check each other.

/// Rank of the span of `rows`, each a bitmask of width `n`.
pub fn rank_u64(rows: &[u64], n: usize) -> usize {
    assert!(n <= 64);
    let mut work: Vec<u64> = rows.to_vec();
    let mut rank = 0;
    for c in 0..n {
        if let Some(k) = (rank..work.len()).find(|&k| work[k] >> c & 1 == 1) {
            work.swap(rank, k);
            let pivot = work[rank];
            for (idx, w) in work.iter_mut().enumerate() {
                if idx != rank && *w >> c & 1 == 1 {
                    *w ^= pivot;
                }
            }
            rank += 1;
        }
    }
    rank
}

/// Basis of { v : (row . v) = 0 for every row }, as width-`n` bitmasks.
pub fn nullspace_u64(rows: &[u64], n: usize) -> Vec<u64> {
    assert!(n <= 64);
    let mut work: Vec<u64> = rows.to_vec();
    let mut pivot_cols: Vec<usize> = Vec::new();
    for c in 0..n {
        let r = pivot_cols.len();
        if let Some(k) = (r..work.len()).find(|&k| work[k] >> c & 1 == 1) {
            work.swap(r, k);
            let pivot = work[r];
            for (idx, w) in work.iter_mut().enumerate() {
                if idx != r && *w >> c & 1 == 1 {
                    *w ^= pivot;
                }
            }
            pivot_cols.push(c);
        }
    }
    let mut basis = Vec::new();
    for c in 0..n {
        if pivot_cols.contains(&c) {
            continue;
        }
        let mut v = 1u64 << c;
        for (i, &pc) in pivot_cols.iter().enumerate() {
            if work[i] >> c & 1 == 1 {
                v |= 1 << pc;
            }
        }
        basis.push(v);
    }
    basis
}

/// True when the two families span the same subspace of GF(2)^n.
pub fn same_span(a: &[u64], b: &[u64], n: usize) -> bool {
    let ra = rank_u64(a, n);
    let rb = rank_u64(b, n);
    if ra != rb {
        return false;
    }
    let combined: Vec<u64> = a.iter().chain(b.iter()).copied().collect();
    rank_u64(&combined, n) == ra
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactalg::SplitMix64;

    #[test]
    fn rank_and_nullspace_golden() {
        // rows of the bidiagonal pairing with radical (1,0,1)
        let rows = [0b010u64, 0b101, 0b010];
        assert_eq!(rank_u64(&rows, 3), 2);
        let ns = nullspace_u64(&rows, 3);
        assert_eq!(ns, vec![0b101]);
        assert_eq!(rank_u64(&[], 4), 0);
        assert_eq!(nullspace_u64(&[], 3), vec![0b001, 0b010, 0b100]);
        assert_eq!(nullspace_u64(&[0b11, 0b01], 2), Vec::<u64>::new());
    }

    #[test]
    fn nullspace_annihilates_and_fills_rank() {
        let mut rng = SplitMix64::new(99);
        for _ in 0..200 {
            let n = rng.below(9) as usize;
            let m = rng.below(9) as usize;
            let rows: Vec<u64> = (0..m).map(|_| rng.next_u64() & ((1 << n) - 1)).collect();
            let ns = nullspace_u64(&rows, n);
            for &v in &ns {
                for &r in &rows {
                    assert_eq!((r & v).count_ones() % 2, 0);
                }
            }
            assert_eq!(rank_u64(&ns, n) + rank_u64(&rows, n), n);
            assert_eq!(ns.len() + rank_u64(&rows, n), n);
        }
    }

    #[test]
    fn span_comparison() {
        assert!(same_span(&[0b01, 0b10], &[0b11, 0b01], 2));
        assert!(!same_span(&[0b01], &[0b10], 2));
        assert!(!same_span(&[0b01], &[0b01, 0b10], 2));
        assert!(same_span(&[], &[0], 2));
    }
}
