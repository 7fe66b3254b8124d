//! Compositions, partitions, diagram statistics and the orderings on them.
//!
//! Diagram coordinates are 1-based: node `(i, j)` sits in row `i`, column `j`,
//! and exists iff `1 <= j <= parts[i - 1]`. Zero parts are empty rows but still
//! count in the leg statistics, so the ambient length `N` is always explicit.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalars::AlphaRational;

/// A finite sequence of non-negative integers of fixed length `N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<u32>);

/// A weakly decreasing composition, padded with zeros to length `N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

/// Statistics of a single cell of a composition diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiagramNode {
    pub row: usize,
    pub col: usize,
    pub arm: u32,
    pub arm_colength: u32,
    pub leg: u32,
    pub leg_colength: u32,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(!parts.is_empty(), "a composition needs at least one part");
        Composition(parts)
    }

    pub fn zero(n: usize) -> Self {
        Composition::new(vec![0; n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn modulus(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&p| p == 0)
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Pad with zeros (or keep) to exactly `n` parts. Fails if a nonzero part
    /// would have to be dropped.
    pub fn padded(&self, n: usize) -> Result<Composition> {
        if self.0.iter().skip(n).any(|&p| p != 0) {
            return Err(Error::PartitionTooLong {
                partition: self.to_string(),
                n,
            });
        }
        let mut parts = self.0.clone();
        parts.resize(n, 0);
        Ok(Composition(parts))
    }

    pub fn into_partition(self) -> Result<Partition> {
        Partition::new(self.0)
    }

    /// Interchange parts `i` and `p` (1-based).
    pub fn swap_parts(&self, i: usize, p: usize) -> Result<Composition> {
        let n = self.n();
        for idx in [i, p] {
            if idx == 0 || idx > n {
                return Err(Error::IndexOutOfRange { index: idx, n });
            }
        }
        let mut parts = self.0.clone();
        parts.swap(i - 1, p - 1);
        Ok(Composition(parts))
    }

    /// Number of pairs `j < k` with `parts[j] > parts[k]`.
    pub fn inversions(&self) -> usize {
        self.0.iter().tuple_combinations().filter(|(a, b)| a > b).count()
    }

    /// Every cell of the diagram together with its statistics, row by row.
    pub fn nodes(&self) -> impl Iterator<Item = DiagramNode> + '_ {
        (1..=self.n())
            .flat_map(move |i| (1..=self.0[i - 1] as usize).map(move |j| node_stats_unchecked(self, i, j)))
    }

    /// All distinct rearrangements, sorted.
    pub fn rearrangements(&self) -> Vec<Composition> {
        let mut out: Vec<Composition> = self
            .0
            .iter()
            .copied()
            .permutations(self.n())
            .map(Composition)
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']']);
        if trimmed.trim().is_empty() {
            return Err(Error::Parse(format!("empty composition {s:?}")));
        }
        let parts = trimmed
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad part {p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Composition::new(parts))
    }
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::NotAPartition("()".into()));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::NotAPartition(Composition(parts).to_string()));
        }
        Ok(Partition(parts))
    }

    pub fn zero(n: usize) -> Self {
        Partition(vec![0; n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn modulus(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.iter().take_while(|&&p| p > 0).count()
    }

    pub fn as_composition(&self) -> Composition {
        Composition(self.0.clone())
    }

    pub fn padded(&self, n: usize) -> Result<Partition> {
        Ok(Partition(self.as_composition().padded(n)?.0))
    }

    /// The conjugate partition, as a plain list of column heights.
    pub fn conjugate(&self) -> Vec<u32> {
        let first = self.0.first().copied().unwrap_or(0);
        (1..=first)
            .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.as_composition().fmt(f)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// The weakly decreasing rearrangement `η⁺`.
pub fn sort_to_partition(eta: &Composition) -> Partition {
    let mut parts = eta.0.clone();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition(parts)
}

/// The weakly increasing rearrangement `η^R`.
pub fn reverse_partition(eta: &Composition) -> Composition {
    let mut parts = eta.0.clone();
    parts.sort_unstable();
    Composition(parts)
}

fn check_modulus(a: &[u32], b: &[u32]) -> Result<()> {
    let (ma, mb) = (a.iter().sum::<u32>(), b.iter().sum::<u32>());
    if ma != mb {
        return Err(Error::ModulusMismatch(ma, mb));
    }
    Ok(())
}

/// Partial sums of `a` bounded by those of `b`; shorter vectors are zero padded.
fn partial_sums_leq(a: &[u32], b: &[u32]) -> bool {
    let len = a.len().max(b.len());
    let (mut sa, mut sb) = (0u32, 0u32);
    for idx in 0..len {
        sa += a.get(idx).copied().unwrap_or(0);
        sb += b.get(idx).copied().unwrap_or(0);
        if sa > sb {
            return false;
        }
    }
    true
}

pub fn dominance_leq(kappa: &Partition, mu: &Partition) -> Result<bool> {
    check_modulus(&kappa.0, &mu.0)?;
    Ok(partial_sums_leq(&kappa.0, &mu.0))
}

/// The strict order on compositions of equal modulus used for the triangular
/// structure of `E_η`.
pub fn composition_lt(nu: &Composition, eta: &Composition) -> Result<bool> {
    check_modulus(&nu.0, &eta.0)?;
    if nu == eta {
        return Ok(false);
    }
    let (np, ep) = (sort_to_partition(nu), sort_to_partition(eta));
    if np != ep {
        return Ok(partial_sums_leq(&np.0, &ep.0));
    }
    Ok(partial_sums_leq(&nu.0, &eta.0))
}

fn node_stats_unchecked(eta: &Composition, i: usize, j: usize) -> DiagramNode {
    let parts = &eta.0;
    let ei = parts[i - 1];
    let j32 = j as u32;
    let mut leg = 0;
    let mut leg_colength = 0;
    for (k, &ek) in parts.iter().enumerate() {
        let k = k + 1;
        if k > i {
            if j32 <= ek && ek <= ei {
                leg += 1;
            }
            if ek > ei {
                leg_colength += 1;
            }
        } else if k < i {
            if j32 <= ek + 1 && ek < ei {
                leg += 1;
            }
            if ek >= ei {
                leg_colength += 1;
            }
        }
    }
    DiagramNode {
        row: i,
        col: j,
        arm: ei - j32,
        arm_colength: j32 - 1,
        leg,
        leg_colength,
    }
}

pub fn node_stats(eta: &Composition, (i, j): (usize, usize)) -> Result<DiagramNode> {
    if i == 0 || i > eta.n() || j == 0 || j > eta.0[i - 1] as usize {
        return Err(Error::NodeOutsideDiagram {
            row: i,
            col: j,
            composition: eta.to_string(),
        });
    }
    Ok(node_stats_unchecked(eta, i, j))
}

/// `η̄_j` written as `α·coeff + offset`; handy for fast collision checks.
pub fn eigenvalue_parts(eta: &Composition) -> Vec<(i64, i64)> {
    let p = &eta.0;
    (0..p.len())
        .map(|j| {
            let before = p[..j].iter().filter(|&&e| e >= p[j]).count();
            let after = p[j + 1..].iter().filter(|&&e| e > p[j]).count();
            (p[j] as i64, -((before + after) as i64))
        })
        .collect()
}

/// Cherednik eigenvalues `η̄_j = α η_j − #{k<j | η_k ≥ η_j} − #{k>j | η_k > η_j}`.
pub fn eigenvalue_vector(eta: &Composition) -> Vec<AlphaRational> {
    eigenvalue_parts(eta)
        .into_iter()
        .map(|(a, c)| AlphaRational::linear(a, c))
        .collect()
}

/// `Φη = (η₂, …, η_N, η₁ + 1)`.
pub fn phi_composition(eta: &Composition) -> Composition {
    let mut parts: Vec<u32> = eta.0[1..].to_vec();
    parts.push(eta.0[0] + 1);
    Composition(parts)
}

/// Multiplicities of the nonzero parts.
pub fn frequencies(kappa: &Partition) -> BTreeMap<u32, u32> {
    kappa
        .0
        .iter()
        .filter(|&&p| p > 0)
        .copied()
        .counts()
        .into_iter()
        .map(|(k, v)| (k, v as u32))
        .collect()
}

/// `δ = (N−1, N−2, …, 0)`.
pub fn staircase(n: usize) -> Partition {
    assert!(n >= 1);
    Partition((0..n as u32).rev().collect())
}

pub fn has_distinct_parts(rho: &Composition) -> bool {
    rho.0.iter().all_unique()
}

/// All compositions of `modulus` into exactly `n` parts, in lexicographic order.
pub fn compositions(modulus: u32, n: usize) -> Vec<Composition> {
    fn rec(rem: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if slots == 1 {
            cur.push(rem);
            out.push(Composition(cur.clone()));
            cur.pop();
            return;
        }
        for first in 0..=rem {
            cur.push(first);
            rec(rem - first, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(modulus, n, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Compositions of every modulus up to `max_modulus` into `n` parts.
pub fn compositions_up_to(max_modulus: u32, n: usize) -> Vec<Composition> {
    (0..=max_modulus).flat_map(|m| compositions(m, n)).collect()
}

/// Partitions of `modulus` with at most `n` nonzero parts, padded to length
/// `n`, in increasing lexicographic order (a linear extension of dominance).
pub fn partitions(modulus: u32, n: usize) -> Vec<Partition> {
    fn rec(rem: u32, max: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            let mut parts = cur.clone();
            parts.resize(cur.len() + slots, 0);
            out.push(Partition(parts));
            return;
        }
        if slots == 0 {
            return;
        }
        for first in (1..=rem.min(max)).rev() {
            cur.push(first);
            rec(rem - first, first, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(modulus, modulus, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

pub fn partitions_up_to(max_modulus: u32, n: usize) -> Vec<Partition> {
    (0..=max_modulus).flat_map(|m| partitions(m, n)).collect()
}

/// All permutations of `0..n` with their sign `(−1)^{inversions}`.
pub fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i32)> {
    (0..n)
        .permutations(n)
        .map(|perm| {
            let inv = perm.iter().tuple_combinations().filter(|(a, b)| a > b).count();
            let sign = if inv % 2 == 0 { 1 } else { -1 };
            (perm, sign)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(p: &[u32]) -> Composition {
        Composition::new(p.to_vec())
    }

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn sorting() {
        assert_eq!(sort_to_partition(&c(&[0, 2, 1])), part(&[2, 1, 0]));
        assert_eq!(sort_to_partition(&c(&[0, 0])), part(&[0, 0]));
        assert_eq!(sort_to_partition(&c(&[1, 0, 3, 1])), part(&[3, 1, 1, 0]));
        assert_eq!(reverse_partition(&c(&[2, 1, 0])), c(&[0, 1, 2]));
        assert_eq!(reverse_partition(&c(&[1, 1])), c(&[1, 1]));
        assert_eq!(
            reverse_partition(&c(&[8, 7, 7, 2, 4, 3, 3, 1, 0])),
            c(&[0, 1, 2, 3, 3, 4, 7, 7, 8])
        );
    }

    #[test]
    fn dominance() {
        assert!(dominance_leq(&part(&[1, 1, 1]), &part(&[3, 0, 0])).unwrap());
        assert!(dominance_leq(&part(&[2, 2, 0]), &part(&[3, 1, 0])).unwrap());
        assert!(!dominance_leq(&part(&[3, 1]), &part(&[2, 2])).unwrap());
        assert_eq!(
            dominance_leq(&part(&[3, 1]), &part(&[2, 1])),
            Err(Error::ModulusMismatch(4, 3))
        );
    }

    #[test]
    fn composition_order() {
        assert!(composition_lt(&c(&[0, 1]), &c(&[1, 0])).unwrap());
        assert!(!composition_lt(&c(&[1, 0]), &c(&[1, 0])).unwrap());
        assert!(composition_lt(&c(&[1, 1, 0]), &c(&[2, 0, 0])).unwrap());
        assert!(!composition_lt(&c(&[1, 0]), &c(&[0, 1])).unwrap());
        assert!(composition_lt(&c(&[1, 0]), &c(&[0, 2])).is_err());
    }

    #[test]
    fn composition_order_is_strict_partial_order() {
        for n in 1..=4 {
            for m in 0..=5u32 {
                let all = compositions(m, n);
                for a in &all {
                    assert!(!composition_lt(a, a).unwrap());
                    for b in &all {
                        let ab = composition_lt(a, b).unwrap();
                        if ab {
                            assert!(!composition_lt(b, a).unwrap(), "{a} {b}");
                        }
                        for cc in &all {
                            if ab && composition_lt(b, cc).unwrap() {
                                assert!(composition_lt(a, cc).unwrap(), "{a} {b} {cc}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn node_statistics() {
        let s = node_stats(&c(&[0, 1]), (2, 1)).unwrap();
        assert_eq!((s.arm, s.arm_colength, s.leg, s.leg_colength), (0, 0, 1, 0));
        let s = node_stats(&c(&[1, 0]), (1, 1)).unwrap();
        assert_eq!((s.arm, s.arm_colength, s.leg, s.leg_colength), (0, 0, 0, 0));
        let s = node_stats(&c(&[2, 0]), (1, 1)).unwrap();
        assert_eq!((s.arm, s.arm_colength, s.leg, s.leg_colength), (1, 0, 0, 0));
        assert!(matches!(
            node_stats(&c(&[2, 0]), (2, 1)),
            Err(Error::NodeOutsideDiagram { .. })
        ));
        assert!(node_stats(&c(&[2, 0]), (1, 3)).is_err());
        assert!(node_stats(&c(&[2, 0]), (0, 1)).is_err());
    }

    #[test]
    fn partition_stats_are_classical() {
        for n in 1..=4 {
            for k in partitions_up_to(6, n) {
                let conj = k.conjugate();
                for s in k.as_composition().nodes() {
                    assert_eq!(s.leg_colength as usize, s.row - 1);
                    assert_eq!(s.leg, conj[s.col - 1] - s.row as u32);
                    assert_eq!(s.arm, k.parts()[s.row - 1] - s.col as u32);
                }
            }
        }
    }

    #[test]
    fn eigenvalues() {
        let ev = eigenvalue_parts(&c(&[0, 0, 0]));
        assert_eq!(ev, vec![(0, 0), (0, -1), (0, -2)]);
        assert_eq!(eigenvalue_parts(&c(&[1, 0])), vec![(1, 0), (0, -1)]);
        assert_eq!(eigenvalue_parts(&c(&[0, 1])), vec![(0, -1), (1, 0)]);
        let ev = eigenvalue_vector(&c(&[1, 0]));
        assert_eq!(ev[0], AlphaRational::alpha());
        assert_eq!(ev[1], AlphaRational::from_int(-1));
    }

    #[test]
    fn phi_and_friends() {
        assert_eq!(phi_composition(&c(&[0, 0])), c(&[0, 1]));
        assert_eq!(phi_composition(&c(&[0, 1])), c(&[1, 1]));
        assert_eq!(phi_composition(&c(&[1, 1])), c(&[1, 2]));
        assert_eq!(frequencies(&part(&[1, 0])), BTreeMap::from([(1, 1)]));
        assert_eq!(frequencies(&part(&[1, 1])), BTreeMap::from([(1, 2)]));
        assert_eq!(
            frequencies(&part(&[2, 1, 1, 0])),
            BTreeMap::from([(1, 2), (2, 1)])
        );
        assert_eq!(staircase(2), part(&[1, 0]));
        assert_eq!(staircase(1), part(&[0]));
        assert_eq!(staircase(4), part(&[3, 2, 1, 0]));
        assert!(has_distinct_parts(&c(&[1, 0])));
        assert!(!has_distinct_parts(&c(&[1, 1])));
        assert!(has_distinct_parts(&c(&[3, 0, 2])));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(compositions(5, 3).len(), 21);
        assert_eq!(compositions(0, 2), vec![c(&[0, 0])]);
        assert_eq!(partitions(4, 4).len(), 5);
        assert_eq!(partitions(4, 2).len(), 3);
        assert_eq!(partitions(0, 2), vec![part(&[0, 0])]);
        assert_eq!(c(&[1, 0, 1]).rearrangements().len(), 3);
        assert_eq!(signed_permutations(3).iter().filter(|(_, s)| *s == -1).count(), 3);
    }

    #[test]
    fn parse_and_pad() {
        assert_eq!("1,0,2".parse::<Composition>().unwrap(), c(&[1, 0, 2]));
        assert_eq!("(2, 1)".parse::<Composition>().unwrap(), c(&[2, 1]));
        assert!("1,x".parse::<Composition>().is_err());
        assert_eq!(c(&[2]).padded(3).unwrap(), c(&[2, 0, 0]));
        assert!(c(&[2, 1]).padded(1).is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
        let json = serde_json::to_string(&c(&[1, 0])).unwrap();
        assert_eq!(json, "[1,0]");
        assert!(serde_json::from_str::<Partition>("[0,1]").is_err());
    }
}
