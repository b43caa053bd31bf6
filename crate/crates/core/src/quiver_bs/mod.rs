//! The quiver `Γ_n`, its decorated extension `Γ̃_n`, the ordering
//! `β_1 < … < β_N` of its vertices and the column lookup `(β_k : ℓ)`.
//!
//! Signed indices are used throughout: `β_s` for `1 ≤ s ≤ N` are the
//! vertices of `Γ_n`, and `β_0, β_{−1}, …, β_{−2n}` are the decorated ones,
//! with `β_{−t}` on column `t`.

mod resolution;

pub use resolution::{
    count_bn, count_rn, desing_check, enumerate_bn, enumerate_rn, pn, psi, rho_of_psi,
    rn_fiber_histogram, theta, zeta_quiver, BnPoint, BsPoint, DesingSummary, RnPoint,
    TOWER_MAX_POINTS,
};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `n` accepted by [`lemma_check`].
pub const LEMMA_MAX_N: usize = 8;

/// The vertex `α_{i,j}`; `i = 0` or `j = n + 1` for decorated vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuiverVertex {
    pub i: usize,
    pub j: usize,
}

impl QuiverVertex {
    pub fn new(i: usize, j: usize) -> Self {
        Self { i, j }
    }

    /// `ℓ = i + j − 1`.
    pub fn column(self) -> usize {
        self.i + self.j - 1
    }

    /// `r = j − i + 1`.
    pub fn row(self) -> usize {
        self.j + 1 - self.i
    }

    /// `α_{i−1,j}`, or `None` when `i = 0`.
    pub fn minus(self) -> Option<Self> {
        (self.i > 0).then(|| Self::new(self.i - 1, self.j))
    }

    /// `α_{i,j+1}`.
    pub fn plus(self) -> Self {
        Self::new(self.i, self.j + 1)
    }

    /// JSON key `a_i_j`.
    pub fn label(self) -> String {
        format!("a_{}_{}", self.i, self.j)
    }

    pub fn from_label(label: &str) -> Option<Self> {
        let rest = label.strip_prefix("a_")?;
        let (i, j) = rest.split_once('_')?;
        Some(Self::new(i.parse().ok()?, j.parse().ok()?))
    }
}

impl fmt::Display for QuiverVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "α_{},{}", self.i, self.j)
    }
}

/// The extended order `β_{−2n} … β_0 < β_1 < … < β_N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaOrder {
    n: usize,
    // β_s is stored at s + 2n
    extended: Vec<QuiverVertex>,
}

impl BetaOrder {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroRank);
        }
        let big_n = n * (n + 1) / 2;
        let mut extended = Vec::with_capacity(2 * n + 1 + big_n);
        for k in (1..=n).rev() {
            extended.push(QuiverVertex::new(k, n + 1));
        }
        for k in (0..=n).rev() {
            extended.push(QuiverVertex::new(0, k + 1));
        }
        let mut current = QuiverVertex::new(1, n);
        extended.push(current);
        for _ in 1..big_n {
            current = if current.j < n {
                QuiverVertex::new(current.i + 1, current.j + 1)
            } else {
                QuiverVertex::new(1, n - current.i)
            };
            extended.push(current);
        }
        Ok(Self { n, extended })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `N = n(n+1)/2`.
    pub fn len(&self) -> usize {
        self.extended.len() - (2 * self.n + 1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `β_s` for `−2n ≤ s ≤ N`.
    pub fn vertex(&self, s: isize) -> QuiverVertex {
        self.extended[(s + 2 * self.n as isize) as usize]
    }

    /// `β_1, …, β_N`.
    pub fn vertices(&self) -> &[QuiverVertex] {
        &self.extended[2 * self.n + 1..]
    }

    /// The signed index of `v` in the extended order.
    pub fn position(&self, v: QuiverVertex) -> Option<isize> {
        self.extended
            .iter()
            .position(|&w| w == v)
            .map(|p| p as isize - 2 * self.n as isize)
    }

    /// `(β_k : ℓ)` as a signed index: the largest `s ≤ k` with `β_s` on
    /// column `ℓ`.
    pub fn lookup(&self, k: isize, column: usize) -> Result<isize> {
        if k > self.len() as isize || column > 2 * self.n {
            return Err(Error::IndexOutOfRange {
                index: column,
                bound: 2 * self.n,
            });
        }
        (-(2 * self.n as isize)..=k)
            .rev()
            .find(|&s| self.vertex(s).column() == column)
            .ok_or(Error::IndexOutOfRange {
                index: column,
                bound: 2 * self.n,
            })
    }
}

/// `Γ_n` and `Γ̃_n` together with the β-order.
#[derive(Debug, Clone)]
pub struct Quiver {
    pub order: BetaOrder,
    pub edges: Vec<(QuiverVertex, QuiverVertex)>,
    pub decorated_vertices: Vec<QuiverVertex>,
    pub decorated_edges: Vec<(QuiverVertex, QuiverVertex)>,
}

pub fn build_quiver(n: usize) -> Result<Quiver> {
    let order = BetaOrder::new(n)?;
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i..=n {
            if i < j {
                edges.push((QuiverVertex::new(i, j), QuiverVertex::new(i + 1, j)));
            }
            if j < n {
                edges.push((QuiverVertex::new(i, j), QuiverVertex::new(i, j + 1)));
            }
        }
    }
    let decorated_vertices = (0..=2 * n).map(|t| order.vertex(-(t as isize))).collect();
    let mut decorated_edges = Vec::new();
    for i in 1..=n {
        decorated_edges.push((QuiverVertex::new(0, i), QuiverVertex::new(1, i)));
    }
    for i in 1..=n {
        decorated_edges.push((QuiverVertex::new(i, n), QuiverVertex::new(i, n + 1)));
    }
    Ok(Quiver {
        order,
        edges,
        decorated_vertices,
        decorated_edges,
    })
}

/// The vertex `(β_k : ℓ)`.
pub fn beta_lookup(order: &BetaOrder, k: usize, column: usize) -> Result<QuiverVertex> {
    if k == 0 || k > order.len() {
        return Err(Error::IndexOutOfRange {
            index: k,
            bound: order.len(),
        });
    }
    if column == 0 || column >= 2 * order.n() {
        return Err(Error::IndexOutOfRange {
            index: column,
            bound: 2 * order.n() - 1,
        });
    }
    Ok(order.vertex(order.lookup(k as isize, column)?))
}

/// For all `1 ≤ k ≤ N`, `1 ≤ t ≤ 2n − 2`: `(β_k : t+1) = (β_k : t)^+` or
/// `(β_k : t+1)^− = (β_k : t)`.
pub fn lemma_check(n: usize) -> Result<bool> {
    if n > LEMMA_MAX_N {
        return Err(Error::BoundExceeded {
            what: "lemma check".into(),
            limit: LEMMA_MAX_N,
        });
    }
    let order = BetaOrder::new(n)?;
    for k in 1..=order.len() {
        for t in 1..2 * n - 1 {
            let here = beta_lookup(&order, k, t)?;
            let next = beta_lookup(&order, k, t + 1)?;
            if next != here.plus() && next.minus() != Some(here) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `(ℓ_{β_1}, …, ℓ_{β_N})`, a reduced word for `σ_n`.
pub fn reduced_word_sigma(n: usize) -> Result<Vec<usize>> {
    Ok(BetaOrder::new(n)?
        .vertices()
        .iter()
        .map(|v| v.column())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::{sigma_n, word_to_perm};

    fn a(i: usize, j: usize) -> QuiverVertex {
        QuiverVertex::new(i, j)
    }

    #[test]
    fn order_n2() {
        let order = BetaOrder::new(2).unwrap();
        assert_eq!(order.vertices(), &[a(1, 2), a(1, 1), a(2, 2)]);
        assert_eq!(order.vertex(0), a(0, 1));
        assert_eq!(order.vertex(-2), a(0, 3));
        assert_eq!(order.vertex(-3), a(1, 3));
        assert_eq!(order.vertex(-4), a(2, 3));
    }

    #[test]
    fn order_anchors() {
        for n in 1..=8 {
            let order = BetaOrder::new(n).unwrap();
            let big_n = order.len();
            assert_eq!(big_n, n * (n + 1) / 2);
            assert_eq!(order.vertex(1), a(1, n));
            for k in 0..n {
                assert_eq!(order.vertex((big_n - k) as isize), a(n - k, n - k));
            }
            for t in 0..=2 * n {
                assert_eq!(order.vertex(-(t as isize)).column(), t);
            }
            // rows are traversed top to bottom, left to right
            let keys: Vec<(std::cmp::Reverse<usize>, usize)> = order
                .vertices()
                .iter()
                .map(|v| (std::cmp::Reverse(v.row()), v.column()))
                .collect();
            assert!(keys.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn neighbours_are_earlier() {
        for n in 1..=6 {
            let order = BetaOrder::new(n).unwrap();
            for (k, &v) in order.vertices().iter().enumerate() {
                let k = k as isize + 1;
                let minus = order.position(v.minus().unwrap()).unwrap();
                let plus = order.position(v.plus()).unwrap();
                assert!(minus < k && plus < k);
                assert_eq!(order.vertex(minus).column() + 1, v.column());
                assert_eq!(order.vertex(plus).column(), v.column() + 1);
            }
        }
    }

    #[test]
    fn quiver_n4() {
        let q = build_quiver(4).unwrap();
        assert_eq!(q.order.len(), 10);
        assert_eq!(q.decorated_vertices.len(), 9);
        // 3+2+1 edges down-right, 3+2+1 up-right
        assert_eq!(q.edges.len(), 12);
        assert!(q.edges.contains(&(a(1, 3), a(2, 3))));
        assert!(q.edges.contains(&(a(1, 3), a(1, 4))));
        assert!(q.decorated_edges.contains(&(a(0, 3), a(1, 3))));
        assert!(q.decorated_edges.contains(&(a(3, 4), a(3, 5))));
        assert!(q.decorated_vertices.contains(&a(4, 5)));
        assert!(q.decorated_vertices.contains(&a(0, 5)));
    }

    #[test]
    fn lookup_identities() {
        for n in 1..=6 {
            let order = BetaOrder::new(n).unwrap();
            let big_n = order.len();
            for k in 1..=big_n {
                let v = order.vertex(k as isize);
                assert_eq!(beta_lookup(&order, k, v.column()).unwrap(), v);
                let ki = k as isize;
                assert_eq!(
                    order.vertex(order.lookup(ki, v.column() - 1).unwrap()),
                    v.minus().unwrap()
                );
                assert_eq!(
                    order.vertex(order.lookup(ki, v.column() + 1).unwrap()),
                    v.plus()
                );
                for t in (1..2 * n).filter(|&t| t != v.column()) {
                    assert_eq!(
                        order.lookup(ki, t).unwrap(),
                        order.lookup(ki - 1, t).unwrap()
                    );
                }
                if v.i == 1 {
                    for l in 0..v.j {
                        assert_eq!(order.lookup(ki, l).unwrap(), -(l as isize));
                    }
                }
            }
            for k in 1..=n {
                let s = order.lookup(big_n as isize, 2 * k - 1).unwrap();
                assert_eq!(s, (big_n - (n - k)) as isize);
            }
        }
    }

    #[test]
    fn lemma_and_word() {
        assert!(lemma_check(1).unwrap());
        assert!(lemma_check(LEMMA_MAX_N + 1).is_err());
        assert_eq!(reduced_word_sigma(2).unwrap(), vec![2, 1, 3]);
        for n in 1..=5 {
            let word = reduced_word_sigma(n).unwrap();
            let (perm, reduced) = word_to_perm(&word, 2 * n).unwrap();
            assert!(reduced);
            assert_eq!(perm, sigma_n(n).unwrap());
        }
    }

    #[test]
    fn labels_round_trip() {
        let v = a(3, 12);
        assert_eq!(v.label(), "a_3_12");
        assert_eq!(QuiverVertex::from_label("a_3_12"), Some(v));
        assert_eq!(QuiverVertex::from_label("b_3_12"), None);
        assert_eq!(QuiverVertex::from_label("a_3"), None);
    }
}
