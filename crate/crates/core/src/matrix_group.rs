//! Finite groups of integer matrices: composition tables and identification
//! of small isomorphism types.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatrixGroup {
    /// Sorted by entries; the identity is not necessarily first.
    pub elements: Vec<IntMatrix>,
    /// `table[i][j]` is the index of `elements[i] * elements[j]`.
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
}

fn key(m: &IntMatrix) -> Vec<i64> {
    m.to_rows().concat()
}

impl MatrixGroup {
    /// Builds the composition table; fails unless the set is a group.
    pub fn new(mut elements: Vec<IntMatrix>) -> Result<Self> {
        elements.sort_by_key(key);
        elements.dedup();
        let n = elements.first().map(IntMatrix::nrows).ok_or_else(|| Error::Internal("empty group".into()))?;
        let index: BTreeMap<Vec<i64>, usize> = elements.iter().enumerate().map(|(i, m)| (key(m), i)).collect();
        let identity = *index
            .get(&key(&IntMatrix::identity(n)))
            .ok_or_else(|| Error::Internal("identity missing".into()))?;
        let mut table = vec![vec![0; elements.len()]; elements.len()];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                let c = a.mul(b)?;
                table[i][j] = *index
                    .get(&key(&c))
                    .ok_or_else(|| Error::Internal("set not closed under composition".into()))?;
            }
            if !table[i].contains(&identity) {
                return Err(Error::Internal("element without inverse".into()));
            }
        }
        Ok(MatrixGroup {
            elements,
            table,
            identity,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| (0..n).all(|j| self.table[i][j] == self.table[j][i]))
    }

    pub fn element_order(&self, i: usize) -> usize {
        let mut x = i;
        let mut k = 1;
        while x != self.identity {
            x = self.table[x][i];
            k += 1;
        }
        k
    }

    /// Number of elements of each order.
    pub fn order_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for i in 0..self.order() {
            *h.entry(self.element_order(i)).or_insert(0) += 1;
        }
        h
    }

    /// Isomorphism type for groups of order at most 16, `"unidentified"` otherwise.
    ///
    /// Abelian groups are determined by their element-order counts. Nonabelian
    /// groups are matched by order and counts; order 16 is left unidentified.
    pub fn identify(&self) -> String {
        let n = self.order();
        if n == 1 {
            return "trivial".into();
        }
        if n > 16 {
            return "unidentified".into();
        }
        let hist = self.order_histogram();
        if self.is_abelian() {
            for factors in invariant_factor_lists(n) {
                if abelian_histogram(&factors) == hist {
                    return factors.iter().map(|d| format!("ℤ/{d}")).collect::<Vec<_>>().join(" × ");
                }
            }
            return "unidentified".into();
        }
        for (name, order, counts) in NONABELIAN {
            if *order == n && counts.iter().copied().collect::<BTreeMap<_, _>>() == hist {
                return (*name).into();
            }
        }
        "unidentified".into()
    }
}

/// Name, order and `(element order, count)` pairs.
type Signature = (&'static str, usize, &'static [(usize, usize)]);

const NONABELIAN: &[Signature] = &[
    ("S_3", 6, &[(1, 1), (2, 3), (3, 2)]),
    ("D_4", 8, &[(1, 1), (2, 5), (4, 2)]),
    ("Q_8", 8, &[(1, 1), (2, 1), (4, 6)]),
    ("D_5", 10, &[(1, 1), (2, 5), (5, 4)]),
    ("A_4", 12, &[(1, 1), (2, 3), (3, 8)]),
    ("D_6", 12, &[(1, 1), (2, 7), (3, 2), (6, 2)]),
    ("Dic_3", 12, &[(1, 1), (2, 1), (3, 2), (4, 6), (6, 2)]),
    ("D_7", 14, &[(1, 1), (2, 7), (7, 6)]),
];

/// All chains `d_1 | d_2 | ... | d_s` with `d_1 > 1` and product `n`.
fn invariant_factor_lists(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, last: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 1 {
            out.push(acc.clone());
            return;
        }
        for d in 2..=rest {
            if rest.is_multiple_of(d) && d % last == 0 {
                acc.push(d);
                go(rest / d, d, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = vec![];
    go(n, 1, &mut vec![], &mut out);
    out
}

fn abelian_histogram(factors: &[usize]) -> BTreeMap<usize, usize> {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    let mut h = BTreeMap::new();
    let total: usize = factors.iter().product();
    for mut idx in 0..total {
        let mut ord = 1;
        for &d in factors {
            let x = idx % d;
            idx /= d;
            let o = d / gcd(x, d);
            ord = ord / gcd(ord, o) * o;
        }
        *h.entry(ord).or_insert(0) += 1;
    }
    h
}
