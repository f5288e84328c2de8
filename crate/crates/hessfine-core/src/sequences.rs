//! The integer sequences the determinant identities are stated over, each
//! with at least two computation routes so that no value rests on a single
//! formula.
//!
//! Indexing follows the combinatorial convention used throughout the crate:
//! `catalan(0) == 1`, `large_schroeder(0) == 1`, `small_schroeder(0) == 1`,
//! `fine(0) == 0`, while `u_sequence` and `a137398` start at index 1.
//! Growable prefix tables back the recurrences; extension happens under a
//! write lock, so concurrent readers never observe a partially computed
//! term.

use std::sync::{LazyLock, RwLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::{binomial, signed_power, Integer, Rational};
use crate::{paths, series};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SequenceId {
    LargeSchroeder,
    SmallSchroeder,
    Fine,
    Catalan,
    U,
    A137398,
    A134425,
    A225887,
    A114710,
    A030238,
}

impl SequenceId {
    pub const ALL: [SequenceId; 10] = [
        SequenceId::LargeSchroeder,
        SequenceId::SmallSchroeder,
        SequenceId::Fine,
        SequenceId::Catalan,
        SequenceId::U,
        SequenceId::A137398,
        SequenceId::A134425,
        SequenceId::A225887,
        SequenceId::A114710,
        SequenceId::A030238,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            SequenceId::LargeSchroeder => "large-schroeder",
            SequenceId::SmallSchroeder => "small-schroeder",
            SequenceId::Fine => "fine",
            SequenceId::Catalan => "catalan",
            SequenceId::U => "u",
            SequenceId::A137398 => "a137398",
            SequenceId::A134425 => "a134425",
            SequenceId::A225887 => "a225887",
            SequenceId::A114710 => "a114710",
            SequenceId::A030238 => "a030238",
        }
    }

    /// OEIS cross-reference where one exists; the u-sequence has none.
    pub fn a_number(&self) -> Option<&'static str> {
        match self {
            SequenceId::LargeSchroeder => Some("A006318"),
            SequenceId::SmallSchroeder => Some("A001003"),
            SequenceId::Fine => Some("A000957"),
            SequenceId::Catalan => Some("A000108"),
            SequenceId::U => None,
            SequenceId::A137398 => Some("A137398"),
            SequenceId::A134425 => Some("A134425"),
            SequenceId::A225887 => Some("A225887"),
            SequenceId::A114710 => Some("A114710"),
            SequenceId::A030238 => Some("A030238"),
        }
    }

    /// Index of the first defined term.
    pub fn first_index(&self) -> usize {
        match self {
            SequenceId::U | SequenceId::A137398 => 1,
            _ => 0,
        }
    }

    pub fn parse(s: &str) -> Result<SequenceId> {
        let norm = s.trim().to_ascii_lowercase().replace(['-', '_'], "");
        let found = SequenceId::ALL.iter().copied().find(|id| {
            id.tag().replace('-', "") == norm
                || id
                    .a_number()
                    .is_some_and(|a| a.to_ascii_lowercase() == norm)
        });
        found.ok_or_else(|| Error::UnknownId(format!("sequence {s:?}")))
    }
}

/// Which route produced a prefix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    ClosedForm,
    Recurrence,
    Series,
    Enumeration,
    Determinant,
}

#[derive(Clone, Debug)]
pub struct SequencePrefix {
    pub id: SequenceId,
    /// Index of `values[0]`; matches `id.first_index()`.
    pub first_index: usize,
    pub values: Vec<Integer>,
    pub source: Source,
}

// ---------------------------------------------------------------------------
// memoized tables

struct MemoTable {
    vals: RwLock<Vec<Integer>>,
}

impl MemoTable {
    fn new(seed: &[i64]) -> MemoTable {
        MemoTable {
            vals: RwLock::new(seed.iter().map(|&v| Integer::from(v)).collect()),
        }
    }

    /// Clones the first `len` stored terms, extending the table first if
    /// needed. `next` maps the current prefix to the following term.
    fn prefix(&self, len: usize, next: impl Fn(&[Integer]) -> Integer) -> Vec<Integer> {
        {
            let r = self.vals.read().unwrap();
            if r.len() >= len {
                return r[..len].to_vec();
            }
        }
        let mut w = self.vals.write().unwrap();
        while w.len() < len {
            let t = next(&w);
            w.push(t);
        }
        w[..len].to_vec()
    }

    fn term(&self, idx: usize, next: impl Fn(&[Integer]) -> Integer) -> Integer {
        self.prefix(idx + 1, next).pop().unwrap()
    }
}

static FINE_CONV: LazyLock<MemoTable> = LazyLock::new(|| MemoTable::new(&[0]));
static U_SEQ: LazyLock<MemoTable> = LazyLock::new(|| MemoTable::new(&[1, 1]));
static B_SEQ: LazyLock<MemoTable> = LazyLock::new(|| MemoTable::new(&[0, 1]));

// ---------------------------------------------------------------------------
// closed forms

/// `binomial(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> Integer {
    let n = n as u64;
    binomial(2 * n, n as i64) / Integer::from(n + 1)
}

/// `(1/n) * sum_{k=1}^{n} 2^k binomial(n,k) binomial(n,k-1)` for n >= 1;
/// the empty path gives 1 at n = 0.
pub fn large_schroeder(n: usize) -> Integer {
    if n == 0 {
        return Integer::one();
    }
    let n = n as u64;
    let mut sum = Integer::zero();
    let two = Integer::from(2);
    for k in 1..=n {
        sum += signed_power(&two, k) * binomial(n, k as i64) * binomial(n, k as i64 - 1);
    }
    sum / Integer::from(n)
}

/// Half the large Schroder number for n >= 1; 1 at n = 0.
pub fn small_schroeder(n: usize) -> Integer {
    if n == 0 {
        return Integer::one();
    }
    large_schroeder(n) / Integer::from(2)
}

/// `3 * sum_{k=1}^{floor((n+1)/2)} binomial(2n-2k, n-1) - binomial(2n, n)`
/// for n >= 1; 0 at n = 0.
pub fn fine(n: usize) -> Integer {
    if n == 0 {
        return Integer::zero();
    }
    let n = n as u64;
    let mut sum = Integer::zero();
    for k in 1..=n.div_ceil(2) {
        sum += binomial(2 * n - 2 * k, n as i64 - 1);
    }
    sum * Integer::from(3) - binomial(2 * n, n as i64)
}

// ---------------------------------------------------------------------------
// recurrence and relation routes

/// Fine numbers from the Catalan convolution
/// `t_{m} = C_{m-1} - sum_{k=0}^{m-2} C_k t_{m-1-k}`, an independent check
/// on the closed form above.
pub fn fine_via_catalan(n: usize) -> Integer {
    FINE_CONV.term(n, |vals| {
        let m = vals.len(); // computing t_m, m >= 1
        let mut t = catalan(m - 1);
        for k in 0..m.saturating_sub(1) {
            t -= catalan(k) * &vals[m - 1 - k];
        }
        t
    })
}

/// The alternating half-sum `(1/2) sum_{k=2}^{n} C_k / (-2)^(n-k)`, which
/// telescopes to `fine(n + 1)`. Rejects n = 0, where the empty sum is not a
/// Fine value.
pub fn fine_half_alternating(n: usize) -> Result<Integer> {
    if n == 0 {
        return Err(Error::Domain(
            "the alternating half-sum starts at n = 1".into(),
        ));
    }
    let mut sum = Rational::zero();
    let neg2 = Integer::from(-2);
    for k in 2..=n {
        sum += Rational::new(catalan(k), signed_power(&neg2, (n - k) as u64));
    }
    let half = sum / Rational::from(Integer::from(2));
    assert!(
        half.denom().is_one(),
        "alternating Catalan half-sum must be integral"
    );
    Ok(half.numer().clone())
}

/// `sum_k binomial(n+k, 2k) * C_k`, the Catalan route to the large Schroder
/// numbers.
pub fn schroeder_via_catalan(n: usize) -> Integer {
    let n = n as u64;
    let mut sum = Integer::zero();
    for k in 0..=n {
        sum += binomial(n + k, 2 * k as i64) * catalan(k as usize);
    }
    sum
}

// vals[j] = u_{j+1}; computes u_m with m = vals.len() + 1 >= 3 from
// `u_m = u_{m-1} + sum_{i=1}^{m-2} (-1)^(i+1) C_i u_{m-i-1}`.
fn u_next(vals: &[Integer]) -> Integer {
    let m = vals.len() + 1;
    let mut t = vals[m - 2].clone();
    for i in 1..=m - 2 {
        let term = catalan(i) * &vals[m - i - 2];
        if i % 2 == 1 {
            t += term;
        } else {
            t -= term;
        }
    }
    t
}

/// `u_1 = u_2 = 1`, then
/// `u_n = u_{n-1} + sum_{i=1}^{n-2} (-1)^(i+1) C_i u_{n-i-1}`.
pub fn u_sequence(n: usize) -> Result<Integer> {
    if n == 0 {
        return Err(Error::Domain("the u-sequence starts at index 1".into()));
    }
    Ok(U_SEQ.term(n - 1, u_next))
}

/// `b_1 = 0, b_2 = 1`, then
/// `b_n = C_{n-1} + 2 sum_{k=1}^{n-3} C_k b_{n-k-1}`.
pub fn a137398(n: usize) -> Result<Integer> {
    if n == 0 {
        return Err(Error::Domain("a137398 starts at index 1".into()));
    }
    Ok(B_SEQ.term(n - 1, |vals| {
        // vals[j] = b_{j+1}; computing b_m with m = vals.len() + 1 >= 3
        let m = vals.len() + 1;
        let mut t = catalan(m - 1);
        for k in 1..=m - 3 {
            t += Integer::from(2) * catalan(k) * &vals[m - k - 2];
        }
        t
    }))
}

/// The same sequence from its other recurrence,
/// `b_n = 2 b_{n-1} + 2 b_{n-2} + sum_{k=1}^{n-3} C_k b_{n-k-1}` for n >= 4,
/// seeded with 0, 1, 2. Kept free of the primary table so the two routes
/// stay independent.
pub fn a137398_alt(n: usize) -> Result<Integer> {
    if n == 0 {
        return Err(Error::Domain("a137398 starts at index 1".into()));
    }
    let mut vals: Vec<Integer> = [0, 1, 2].map(Integer::from).to_vec();
    while vals.len() < n {
        let m = vals.len() + 1; // computing b_m, m >= 4
        let mut t = Integer::from(2) * (&vals[m - 2] + &vals[m - 3]);
        for k in 1..=m - 3 {
            t += catalan(k) * &vals[m - k - 2];
        }
        vals.push(t);
    }
    Ok(vals[n - 1].clone())
}

// ---------------------------------------------------------------------------
// auxiliary sequences defined by path counts or generating functions

/// Weighted walk over (x-span consumed, height) counting paths of length n
/// with each low h step carrying `colors` choices. This scales where the
/// exhaustive generator in `paths` cannot; the two are cross-checked in
/// tests.
fn colored_schroeder_count(n: usize, colors: u32) -> Integer {
    let span = 2 * n;
    let mut ways = vec![vec![Integer::zero(); n + 2]; span + 1];
    ways[0][0] = Integer::one();
    for x in 0..span {
        for h in 0..=n {
            if ways[x][h].is_zero() {
                continue;
            }
            let w = ways[x][h].clone();
            ways[x + 1][h + 1] += &w; // u
            if h >= 1 {
                ways[x + 1][h - 1] += &w; // d
            }
            if x + 2 <= span {
                let mult = if h == 0 { colors } else { 1 };
                ways[x + 2][h] += w * Integer::from(mult); // h
            }
        }
    }
    ways[span][0].clone()
}

/// Walk counting paths of length n with no low h step and no short unit.
/// The extra state bit remembers "the previous step was a u off the axis",
/// whose immediate d would close a forbidden ud unit.
fn no_low_h_no_short_unit_count(n: usize) -> Integer {
    let span = 2 * n;
    let mut ways = vec![vec![[Integer::zero(), Integer::zero()]; n + 2]; span + 1];
    ways[0][0][0] = Integer::one();
    for x in 0..span {
        for h in 0..=n {
            for flag in 0..2usize {
                if ways[x][h][flag].is_zero() {
                    continue;
                }
                let w = ways[x][h][flag].clone();
                ways[x + 1][h + 1][usize::from(h == 0)] += &w; // u
                if h >= 1 && flag == 0 {
                    ways[x + 1][h - 1][0] += &w; // d
                }
                if h >= 1 && x + 2 <= span {
                    ways[x + 2][h][0] += &w; // h
                }
            }
        }
    }
    ways[span][0][0].clone()
}

/// Terms of the four auxiliary sequences, each produced by the construction
/// that defines it: a134425 by expanding its generating function, a225887
/// and a114710 by counting the path classes they enumerate, a030238 by the
/// diagonal sum over exhaustively generated Dyck return counts (and capped
/// accordingly).
pub fn auxiliary_sequence(id: SequenceId, n: usize) -> Result<Integer> {
    match id {
        SequenceId::A134425 => {
            let gf = series::gf_catalog(series::GfId::A134425, n + 1);
            let c = gf.coeff(n).expect("requested order covers n");
            assert!(c.denom().is_one(), "integer generating function");
            Ok(c.numer().clone())
        }
        SequenceId::A225887 => Ok(colored_schroeder_count(n, 3)),
        SequenceId::A114710 => Ok(no_low_h_no_short_unit_count(n)),
        SequenceId::A030238 => paths::a030238_sum(n),
        other => Err(Error::Domain(format!(
            "{} is not an auxiliary sequence",
            other.tag()
        ))),
    }
}

// ---------------------------------------------------------------------------
// uniform access

/// Single term under the sequence's own indexing.
pub fn term(id: SequenceId, n: usize) -> Result<Integer> {
    match id {
        SequenceId::LargeSchroeder => Ok(large_schroeder(n)),
        SequenceId::SmallSchroeder => Ok(small_schroeder(n)),
        SequenceId::Fine => Ok(fine(n)),
        SequenceId::Catalan => Ok(catalan(n)),
        SequenceId::U => u_sequence(n),
        SequenceId::A137398 => a137398(n),
        _ => auxiliary_sequence(id, n),
    }
}

/// The first `len` terms starting at the sequence's first index, tagged
/// with the route that produced them.
pub fn prefix(id: SequenceId, len: usize) -> Result<SequencePrefix> {
    let first_index = id.first_index();
    let (values, source): (Vec<Integer>, Source) = match id {
        SequenceId::LargeSchroeder => ((0..len).map(large_schroeder).collect(), Source::ClosedForm),
        SequenceId::SmallSchroeder => ((0..len).map(small_schroeder).collect(), Source::ClosedForm),
        SequenceId::Fine => ((0..len).map(fine).collect(), Source::ClosedForm),
        SequenceId::Catalan => ((0..len).map(catalan).collect(), Source::ClosedForm),
        SequenceId::U => (U_SEQ.prefix(len, u_next), Source::Recurrence),
        SequenceId::A137398 => (
            (1..=len).map(a137398).collect::<Result<_>>()?,
            Source::Recurrence,
        ),
        SequenceId::A134425 => {
            let gf = series::gf_catalog(series::GfId::A134425, len.max(1));
            let vals = (0..len)
                .map(|i| {
                    let c = gf.coeff(i).expect("order covers prefix");
                    assert!(c.denom().is_one());
                    c.numer().clone()
                })
                .collect();
            (vals, Source::Series)
        }
        SequenceId::A225887 => (
            (0..len).map(|n| colored_schroeder_count(n, 3)).collect(),
            Source::Enumeration,
        ),
        SequenceId::A114710 => (
            (0..len).map(no_low_h_no_short_unit_count).collect(),
            Source::Enumeration,
        ),
        SequenceId::A030238 => (
            (0..len)
                .map(paths::a030238_sum)
                .collect::<Result<_>>()?,
            Source::Enumeration,
        ),
    };
    Ok(SequencePrefix {
        id,
        first_index,
        values,
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&x| Integer::from(x)).collect()
    }

    #[test]
    fn catalan_small() {
        let got: Vec<Integer> = (0..10).map(catalan).collect();
        assert_eq!(got, ints(&[1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]));
    }

    #[test]
    fn catalan_matches_ballot_recurrence() {
        // independent oracle: C_0 = 1, C_{m+1} = sum C_k C_{m-k}
        let mut c = vec![Integer::one()];
        for m in 0..30 {
            let mut next = Integer::zero();
            for k in 0..=m {
                next += &c[k] * &c[m - k];
            }
            c.push(next);
            assert_eq!(c[m + 1], catalan(m + 1), "n={}", m + 1);
        }
    }

    #[test]
    fn schroeder_small() {
        let got: Vec<Integer> = (0..11).map(large_schroeder).collect();
        assert_eq!(
            got,
            ints(&[1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098, 1037718])
        );
        let got: Vec<Integer> = (0..11).map(small_schroeder).collect();
        assert_eq!(
            got,
            ints(&[1, 1, 3, 11, 45, 197, 903, 4279, 20793, 103049, 518859])
        );
    }

    #[test]
    fn schroeder_catalan_route_agrees() {
        for n in 1..=40 {
            assert_eq!(schroeder_via_catalan(n), large_schroeder(n), "n={n}");
        }
    }

    #[test]
    fn fine_small_and_conv_route() {
        let got: Vec<Integer> = (0..11).map(fine).collect();
        assert_eq!(got, ints(&[0, 1, 0, 1, 2, 6, 18, 57, 186, 622, 2120]));
        for n in 0..=40 {
            assert_eq!(fine_via_catalan(n), fine(n), "n={n}");
        }
    }

    #[test]
    fn fine_half_alternating_route() {
        assert!(fine_half_alternating(0).is_err());
        for n in 1..=40 {
            assert_eq!(fine_half_alternating(n).unwrap(), fine(n + 1), "n={n}");
        }
    }

    #[test]
    fn u_sequence_small() {
        let got: Vec<Integer> = (1..=8).map(|n| u_sequence(n).unwrap()).collect();
        assert_eq!(got, ints(&[1, 1, 2, 1, 6, -6, 36, -95]));
        assert!(u_sequence(0).is_err());
    }

    #[test]
    fn a137398_both_recurrences() {
        let got: Vec<Integer> = (1..=6).map(|n| a137398(n).unwrap()).collect();
        assert_eq!(got, ints(&[0, 1, 2, 7, 22, 74]));
        for n in 1..=40 {
            assert_eq!(a137398(n).unwrap(), a137398_alt(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn auxiliary_small_values() {
        assert_eq!(
            auxiliary_sequence(SequenceId::A134425, 1).unwrap(),
            Integer::from(5)
        );
        let got: Vec<Integer> = (0..4)
            .map(|n| auxiliary_sequence(SequenceId::A134425, n).unwrap())
            .collect();
        assert_eq!(got, ints(&[1, 5, 27, 151]));
        let got: Vec<Integer> = (0..4)
            .map(|n| auxiliary_sequence(SequenceId::A225887, n).unwrap())
            .collect();
        assert_eq!(got, ints(&[1, 4, 18, 86]));
        let got: Vec<Integer> = (0..4)
            .map(|n| auxiliary_sequence(SequenceId::A114710, n).unwrap())
            .collect();
        assert_eq!(got, ints(&[1, 0, 2, 6]));
        let got: Vec<Integer> = (0..6)
            .map(|n| auxiliary_sequence(SequenceId::A030238, n).unwrap())
            .collect();
        assert_eq!(got, ints(&[1, 1, 3, 7, 20, 59]));
        assert!(auxiliary_sequence(SequenceId::Catalan, 1).is_err());
    }

    #[test]
    fn counting_walks_match_exhaustive_generation() {
        use crate::paths::{family_cardinality, PathFamily};
        for n in 0..=6 {
            assert_eq!(
                colored_schroeder_count(n, 3),
                family_cardinality(PathFamily::Pstar3, n).unwrap(),
                "3-colored, n={n}"
            );
            assert_eq!(
                colored_schroeder_count(n, 4),
                family_cardinality(PathFamily::Ptilde4, n).unwrap(),
                "4-colored, n={n}"
            );
            assert_eq!(
                colored_schroeder_count(n, 1),
                large_schroeder(n),
                "plain, n={n}"
            );
        }
        // no-low-h, no-short-unit walk vs filtered generation
        for n in 0..=7 {
            let mut count = 0u64;
            crate::paths::for_each_member(
                PathFamily::Q,
                n,
                &crate::paths::EnumerationCaps::default(),
                |m| {
                    if let crate::paths::FamilyMember::Path(p) = m {
                        if p.stats().peaks_h1 == 0 {
                            count += 1;
                        }
                    }
                },
            )
            .unwrap();
            assert_eq!(
                no_low_h_no_short_unit_count(n),
                Integer::from(count),
                "n={n}"
            );
        }
    }

    #[test]
    fn prefix_has_indexing_and_source() {
        let p = prefix(SequenceId::U, 5).unwrap();
        assert_eq!(p.first_index, 1);
        assert_eq!(p.values, ints(&[1, 1, 2, 1, 6]));
        assert_eq!(p.source, Source::Recurrence);
        let p = prefix(SequenceId::Catalan, 3).unwrap();
        assert_eq!(p.first_index, 0);
        assert_eq!(p.values, ints(&[1, 1, 2]));
        assert_eq!(p.source, Source::ClosedForm);
        let p = prefix(SequenceId::A134425, 4).unwrap();
        assert_eq!(p.values, ints(&[1, 5, 27, 151]));
        assert_eq!(p.source, Source::Series);
    }

    #[test]
    fn id_parsing() {
        assert_eq!(
            SequenceId::parse("large-schroeder").unwrap(),
            SequenceId::LargeSchroeder
        );
        assert_eq!(
            SequenceId::parse("A006318").unwrap(),
            SequenceId::LargeSchroeder
        );
        assert_eq!(SequenceId::parse("u").unwrap(), SequenceId::U);
        assert_eq!(SequenceId::parse("a000108").unwrap(), SequenceId::Catalan);
        assert!(SequenceId::parse("nope").is_err());
    }
}
