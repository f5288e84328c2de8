//! Minor expansions of the Hessenberg-Toeplitz determinant as explicit sums
//! over integer partitions (multiplicity form) and over compositions.
//!
//! Both sums reproduce `hessenberg::det_recurrence` term-for-term; they exist
//! as independent evaluation routes, so neither is ever implemented in terms
//! of the other.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::{multinomial, signed_power, Integer};

/// Hard ceiling on the expansion size. Compositions of `n` number
/// `2^(n-1)`, so anything much past this is not a desk computation.
pub const DEFAULT_EXPANSION_CAP: usize = 22;

/// A partition of `n` in multiplicity form: `mult[i]` copies of part `i+1`,
/// with `sum (i+1)*mult[i] == n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionMultiplicity {
    pub mult: Vec<u64>,
}

impl PartitionMultiplicity {
    /// Number of parts, counted with multiplicity.
    pub fn part_count(&self) -> u64 {
        self.mult.iter().sum()
    }

    /// The integer being partitioned.
    pub fn weight(&self) -> u64 {
        self.mult
            .iter()
            .enumerate()
            .map(|(i, &m)| (i as u64 + 1) * m)
            .sum()
    }
}

/// Streams the partitions of `n` as multiplicity vectors, in lexicographically
/// decreasing order of the vector itself:
/// `partitions_of(4)` yields `[4,0,0,0], [2,1,0,0], [1,0,1,0], [0,2,0,0],
/// [0,0,0,1]`.
pub fn partitions_of(n: u64) -> Partitions {
    Partitions {
        n,
        stack: Vec::new(),
        started: false,
        done: false,
    }
}

#[derive(Clone, Debug)]
struct PartFrame {
    part: u64,
    count: u64,
    // remaining weight before any copies of `part` were taken
    rem_before: u64,
}

pub struct Partitions {
    n: u64,
    stack: Vec<PartFrame>,
    started: bool,
    done: bool,
}

impl Partitions {
    // Greedy max-first descent from `part` with `rem` still to place.
    // Pushes one frame per part size actually used. Returns false when the
    // descent strands weight it cannot place; the caller then backtracks.
    fn descend(&mut self, mut part: u64, mut rem: u64) -> bool {
        while rem > 0 {
            if part > rem {
                return false;
            }
            let count = rem / part;
            self.stack.push(PartFrame {
                part,
                count,
                rem_before: rem,
            });
            rem -= part * count;
            part += 1;
        }
        true
    }

    fn current(&self) -> PartitionMultiplicity {
        let mut mult = vec![0u64; self.n as usize];
        for f in &self.stack {
            mult[(f.part - 1) as usize] = f.count;
        }
        PartitionMultiplicity { mult }
    }
}

impl Iterator for Partitions {
    type Item = PartitionMultiplicity;

    fn next(&mut self) -> Option<PartitionMultiplicity> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.n == 0 {
                self.done = true;
                return Some(PartitionMultiplicity { mult: vec![] });
            }
            let ok = self.descend(1, self.n);
            debug_assert!(ok, "greedy descent from part 1 cannot fail");
            return Some(self.current());
        }
        while let Some(top) = self.stack.pop() {
            let count = top.count - 1;
            let rem = top.rem_before - top.part * count;
            if count > 0 {
                self.stack.push(PartFrame {
                    part: top.part,
                    count,
                    rem_before: top.rem_before,
                });
            }
            if self.descend(top.part + 1, rem) {
                return Some(self.current());
            }
        }
        self.done = true;
        None
    }
}

/// Streams the compositions of `n` (ordered tuples of positive parts) in
/// lexicographically decreasing order:
/// `compositions_of(3)` yields `[3], [2,1], [1,2], [1,1,1]`.
pub fn compositions_of(n: u64) -> Compositions {
    Compositions {
        n,
        current: Vec::new(),
        started: false,
        done: false,
    }
}

pub struct Compositions {
    n: u64,
    current: Vec<u64>,
    started: bool,
    done: bool,
}

impl Iterator for Compositions {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.n == 0 {
                self.done = true;
                return Some(vec![]);
            }
            self.current = vec![self.n];
            return Some(self.current.clone());
        }
        // Successor: strip trailing 1-parts, decrement the new last part,
        // close with a single part carrying everything stripped plus 1.
        let mut stripped = 0u64;
        while self.current.last() == Some(&1) {
            self.current.pop();
            stripped += 1;
        }
        match self.current.last_mut() {
            None => {
                self.done = true;
                None
            }
            Some(last) => {
                *last -= 1;
                self.current.push(stripped + 1);
                Some(self.current.clone())
            }
        }
    }
}

/// Count of partitions of `n`, by the standard two-variable table. Used as
/// the independent check that the stream above is complete and duplicate
/// free.
pub fn partition_count(n: u64) -> Integer {
    let n = n as usize;
    // ways[m] = partitions of m into parts of size <= current k
    let mut ways = vec![Integer::zero(); n + 1];
    ways[0] = Integer::one();
    for k in 1..=n {
        for m in k..=n {
            let add = ways[m - k].clone();
            ways[m] += add;
        }
    }
    ways[n].clone()
}

fn check_cap(n: usize, cap: usize, what: &str) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded(format!(
            "{what} over n = {n} exceeds the cap of {cap}"
        )));
    }
    Ok(())
}

/// Determinant of the order-`n` Hessenberg-Toeplitz matrix as a sum over
/// partitions of `n`:
///
/// `sum over v with weight n of (-a0)^(n-|v|) * multinomial(|v|; v) *
/// prod a_i^(v_i)`
///
/// where `|v|` is the number of parts. Capped because the partition count
/// grows superpolynomially.
pub fn trudi_partition_sum(a0: &Integer, entries: &[Integer]) -> Result<Integer> {
    trudi_partition_sum_with_cap(a0, entries, DEFAULT_EXPANSION_CAP)
}

pub fn trudi_partition_sum_with_cap(
    a0: &Integer,
    entries: &[Integer],
    cap: usize,
) -> Result<Integer> {
    check_cap(entries.len(), cap, "partition expansion")?;
    let n = entries.len() as u64;
    let neg_a0 = -a0;
    let mut total = Integer::zero();
    for p in partitions_of(n) {
        let parts = p.part_count();
        let mut term = signed_power(&neg_a0, n - parts);
        term *= multinomial(&p.mult);
        for (i, &m) in p.mult.iter().enumerate() {
            if m > 0 {
                term *= signed_power(&entries[i], m);
            }
        }
        total += term;
    }
    Ok(total)
}

/// The same determinant as a sum over compositions of `n`:
///
/// `sum over k of (-a0)^(n-k) * sum over (i1,...,ik) with i1+...+ik = n of
/// a_{i1} * ... * a_{ik}`.
pub fn trudi_composition_sum(a0: &Integer, entries: &[Integer]) -> Result<Integer> {
    trudi_composition_sum_with_cap(a0, entries, DEFAULT_EXPANSION_CAP)
}

pub fn trudi_composition_sum_with_cap(
    a0: &Integer,
    entries: &[Integer],
    cap: usize,
) -> Result<Integer> {
    check_cap(entries.len(), cap, "composition expansion")?;
    let n = entries.len() as u64;
    let neg_a0 = -a0;
    let mut total = Integer::zero();
    for comp in compositions_of(n) {
        let k = comp.len() as u64;
        let mut term = signed_power(&neg_a0, n - k);
        for &part in &comp {
            term *= &entries[(part - 1) as usize];
        }
        total += term;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_of_4_in_order() {
        let got: Vec<Vec<u64>> = partitions_of(4).map(|p| p.mult).collect();
        assert_eq!(
            got,
            vec![
                vec![4, 0, 0, 0],
                vec![2, 1, 0, 0],
                vec![1, 0, 1, 0],
                vec![0, 2, 0, 0],
                vec![0, 0, 0, 1],
            ]
        );
    }

    #[test]
    fn partitions_are_valid_and_strictly_decreasing() {
        for n in 0..=15u64 {
            let all: Vec<PartitionMultiplicity> = partitions_of(n).collect();
            for p in &all {
                assert_eq!(p.weight(), n);
            }
            for w in all.windows(2) {
                assert!(w[0].mult > w[1].mult, "order breaks at n={n}");
            }
            assert_eq!(Integer::from(all.len()), partition_count(n));
        }
    }

    #[test]
    fn partition_counts_match_table() {
        // p(0)..p(10) = 1,1,2,3,5,7,11,15,22,30,42
        let expect = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, e) in expect.iter().enumerate() {
            assert_eq!(partition_count(n as u64), Integer::from(*e));
        }
    }

    #[test]
    fn compositions_of_3_in_order() {
        let got: Vec<Vec<u64>> = compositions_of(3).collect();
        assert_eq!(got, vec![vec![3], vec![2, 1], vec![1, 2], vec![1, 1, 1]]);
    }

    #[test]
    fn composition_counts_are_powers_of_two() {
        assert_eq!(compositions_of(0).count(), 1);
        for n in 1..=14u64 {
            assert_eq!(compositions_of(n).count(), 1usize << (n - 1), "n={n}");
            for c in compositions_of(n) {
                assert_eq!(c.iter().sum::<u64>(), n);
                assert!(c.iter().all(|&p| p >= 1));
            }
        }
    }

    #[test]
    fn expansions_agree_on_small_specs() {
        // a0 = 2, entries 3, -1, 4, 1, -5: both sums must coincide.
        let a0 = Integer::from(2);
        let entries: Vec<Integer> = [3, -1, 4, 1, -5].map(Integer::from).to_vec();
        for n in 1..=entries.len() {
            let p = trudi_partition_sum(&a0, &entries[..n]).unwrap();
            let c = trudi_composition_sum(&a0, &entries[..n]).unwrap();
            assert_eq!(p, c, "n={n}");
        }
    }

    #[test]
    fn hand_checked_values() {
        // a0 = 1, entries (2, 6): partitions of 2 are {1+1, 2}, giving
        // multinomial(2;2)*2^2*(-1)^0 + multinomial(1;1)*6*(-1)^1 = 4 - 6.
        let d2 = trudi_partition_sum(&Integer::from(1), &[2.into(), 6.into()]).unwrap();
        assert_eq!(d2, Integer::from(-2));
        let d2c = trudi_composition_sum(&Integer::from(1), &[2.into(), 6.into()]).unwrap();
        assert_eq!(d2c, Integer::from(-2));
    }

    #[test]
    fn cap_is_enforced() {
        let entries = vec![Integer::from(1); DEFAULT_EXPANSION_CAP + 1];
        assert!(matches!(
            trudi_composition_sum(&Integer::from(1), &entries),
            Err(crate::error::Error::CapExceeded(_))
        ));
        assert!(trudi_composition_sum_with_cap(&Integer::from(1), &entries, 30).is_ok());
    }
}
