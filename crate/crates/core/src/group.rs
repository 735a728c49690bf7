//! Finite groups with dense element indices.
//!
//! Every group is stored as a full Cayley table, whether it was built from a
//! cyclic-product spec (`"Z2xZ4"`) or loaded from an explicit table. Elements
//! of cyclic products use a mixed-radix encoding with the first factor most
//! significant, so in `Z2xZ4` the pair `(a, b)` has index `4 * a + b`.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported group order. Element sets are stored as `u64` masks.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("invalid group spec `{0}`")]
    BadSpec(String),
    #[error("modulus {0} is below 2")]
    ModulusTooSmall(usize),
    #[error("group order {0} exceeds the supported maximum of {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("operation table is not square (row {row} has {len} entries, expected {order})")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("operation table is empty")]
    EmptyTable,
    #[error("table entry {value} at ({row}, {col}) is outside the group")]
    NotClosed { row: usize, col: usize, value: usize },
    #[error("table has no two-sided identity")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("operation is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("element index {index} out of range for group of order {order}")]
    ElementOutOfRange { index: usize, order: usize },
    #[error("cannot read group table: {0}")]
    Io(String),
}

/// An element of some [`Group`], identified by its dense index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(u8);

impl Elem {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Builds an element without checking it against a group.
    #[inline]
    pub(crate) fn raw(index: usize) -> Elem {
        debug_assert!(index < MAX_ORDER);
        Elem(index as u8)
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A set of group elements as a bit mask over element indices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElemSet(u64);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn full(order: usize) -> ElemSet {
        if order >= 64 {
            ElemSet(u64::MAX)
        } else {
            ElemSet((1u64 << order) - 1)
        }
    }

    #[inline]
    pub fn from_bits(bits: u64) -> ElemSet {
        ElemSet(bits)
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn contains(self, e: Elem) -> bool {
        self.0 >> e.0 & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, e: Elem) {
        self.0 |= 1 << e.0;
    }

    #[inline]
    pub fn remove(&mut self, e: Elem) {
        self.0 &= !(1 << e.0);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest element, if any.
    #[inline]
    pub fn first(self) -> Option<Elem> {
        (self.0 != 0).then(|| Elem(self.0.trailing_zeros() as u8))
    }

    pub fn iter(self) -> ElemSetIter {
        ElemSetIter(self.0)
    }
}

impl FromIterator<Elem> for ElemSet {
    fn from_iter<I: IntoIterator<Item = Elem>>(iter: I) -> Self {
        let mut s = ElemSet::EMPTY;
        for e in iter {
            s.insert(e);
        }
        s
    }
}

pub struct ElemSetIter(u64);

impl Iterator for ElemSetIter {
    type Item = Elem;

    #[inline]
    fn next(&mut self) -> Option<Elem> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(Elem(i as u8))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupKind {
    CyclicProduct { moduli: Vec<usize> },
    Table,
}

/// JSON layout of an explicit group table file.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableFile {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    name: String,
    kind: GroupKind,
    order: usize,
    identity: Elem,
    table: Vec<u8>,
    inverse: Vec<u8>,
}

impl Group {
    /// Parses `Z<n>`, an `x`-joined product such as `Z2xZ4`, or `S3`.
    pub fn parse(spec: &str) -> Result<Group, GroupError> {
        let spec = spec.trim();
        if spec.eq_ignore_ascii_case("S3") {
            return Ok(Group::symmetric3());
        }
        if let Some(path) = spec.strip_prefix("file:") {
            return Group::from_json_file(path);
        }
        let mut moduli = Vec::new();
        for factor in spec.split(['x', 'X']) {
            let digits = factor
                .strip_prefix('Z')
                .ok_or_else(|| GroupError::BadSpec(spec.to_string()))?;
            let n: usize = digits
                .parse()
                .map_err(|_| GroupError::BadSpec(spec.to_string()))?;
            moduli.push(n);
        }
        Group::cyclic_product(&moduli)
    }

    pub fn cyclic(n: usize) -> Result<Group, GroupError> {
        Group::cyclic_product(&[n])
    }

    pub fn cyclic_product(moduli: &[usize]) -> Result<Group, GroupError> {
        if moduli.is_empty() {
            return Err(GroupError::BadSpec(String::new()));
        }
        if let Some(&m) = moduli.iter().find(|&&m| m < 2) {
            return Err(GroupError::ModulusTooSmall(m));
        }
        let order = moduli
            .iter()
            .try_fold(1usize, |acc, &m| acc.checked_mul(m).filter(|&o| o <= MAX_ORDER))
            .ok_or(GroupError::OrderTooLarge(moduli.iter().product()))?;
        let decode = |mut x: usize| {
            let mut digits = vec![0; moduli.len()];
            for (d, &m) in digits.iter_mut().zip(moduli).rev() {
                *d = x % m;
                x /= m;
            }
            digits
        };
        let encode = |digits: &[usize]| digits.iter().zip(moduli).fold(0, |acc, (&d, &m)| acc * m + d);
        let mut table = vec![0u8; order * order];
        for a in 0..order {
            let da = decode(a);
            for b in 0..order {
                let db = decode(b);
                let sum: Vec<usize> = da
                    .iter()
                    .zip(&db)
                    .zip(moduli)
                    .map(|((x, y), m)| (x + y) % m)
                    .collect();
                table[a * order + b] = encode(&sum) as u8;
            }
        }
        let inverse = (0..order)
            .map(|a| {
                let inv: Vec<usize> = decode(a).iter().zip(moduli).map(|(&x, &m)| (m - x) % m).collect();
                encode(&inv) as u8
            })
            .collect();
        let name = moduli.iter().map(|m| format!("Z{m}")).collect::<Vec<_>>().join("x");
        Ok(Group {
            name,
            kind: GroupKind::CyclicProduct { moduli: moduli.to_vec() },
            order,
            identity: Elem(0),
            table,
            inverse,
        })
    }

    /// Validates an explicit operation table against the group axioms.
    pub fn from_table(name: impl Into<String>, rows: &[Vec<usize>]) -> Result<Group, GroupError> {
        let order = rows.len();
        if order == 0 {
            return Err(GroupError::EmptyTable);
        }
        if order > MAX_ORDER {
            return Err(GroupError::OrderTooLarge(order));
        }
        let mut table = vec![0u8; order * order];
        for (r, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(GroupError::NotSquare { row: r, len: row.len(), order });
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= order {
                    return Err(GroupError::NotClosed { row: r, col: c, value: v });
                }
                table[r * order + c] = v as u8;
            }
        }
        let at = |a: usize, b: usize| table[a * order + b] as usize;
        let identity = (0..order)
            .find(|&e| (0..order).all(|a| at(e, a) == a && at(a, e) == a))
            .ok_or(GroupError::NoIdentity)?;
        let mut inverse = vec![0u8; order];
        for a in 0..order {
            let inv = (0..order)
                .find(|&b| at(a, b) == identity && at(b, a) == identity)
                .ok_or(GroupError::NoInverse(a))?;
            inverse[a] = inv as u8;
        }
        for a in 0..order {
            for b in 0..order {
                let ab = at(a, b);
                for c in 0..order {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        Ok(Group {
            name: name.into(),
            kind: GroupKind::Table,
            order,
            identity: Elem(identity as u8),
            table,
            inverse,
        })
    }

    pub fn from_json_file(path: impl AsRef<Path>) -> Result<Group, GroupError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| GroupError::Io(format!("{}: {e}", path.display())))?;
        let file: TableFile = serde_json::from_str(&text).map_err(|e| GroupError::Io(e.to_string()))?;
        if file.order != file.table.len() {
            return Err(GroupError::NotSquare { row: 0, len: file.table.len(), order: file.order });
        }
        let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        Group::from_table(name, &file.table)
    }

    /// The symmetric group on three points, as permutations composed right to left.
    pub fn symmetric3() -> Group {
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [0, 2, 1], [2, 1, 0], [1, 0, 2]];
        let rows: Vec<Vec<usize>> = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| {
                        let composed = [p[q[0]], p[q[1]], p[q[2]]];
                        perms.iter().position(|r| *r == composed).unwrap()
                    })
                    .collect()
            })
            .collect();
        Group::from_table("S3", &rows).expect("S3 table is a group")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> Elem {
        self.identity
    }

    pub fn elem(&self, index: usize) -> Result<Elem, GroupError> {
        if index < self.order {
            Ok(Elem(index as u8))
        } else {
            Err(GroupError::ElementOutOfRange { index, order: self.order })
        }
    }

    #[inline]
    pub fn op(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.table[a.index() * self.order + b.index()])
    }

    #[inline]
    pub fn inverse(&self, a: Elem) -> Elem {
        Elem(self.inverse[a.index()])
    }

    /// `a - b`, that is `op(a, inverse(b))`.
    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.op(a, self.inverse(b))
    }

    pub fn checked_op(&self, a: Elem, b: Elem) -> Result<Elem, GroupError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.op(a, b))
    }

    pub fn checked_inverse(&self, a: Elem) -> Result<Elem, GroupError> {
        self.check(a)?;
        Ok(self.inverse(a))
    }

    fn check(&self, a: Elem) -> Result<(), GroupError> {
        self.elem(a.index()).map(|_| ())
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.order).map(|i| Elem(i as u8))
    }

    pub fn full_set(&self) -> ElemSet {
        ElemSet::full(self.order)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.op(a, b) == self.op(b, a)))
    }

    /// Left translate of a set: `{ t * x : x in s }`.
    pub fn translate(&self, t: Elem, s: ElemSet) -> ElemSet {
        s.iter().map(|x| self.op(t, x)).collect()
    }

    /// Components of an element of a cyclic product, first factor first.
    pub fn components(&self, a: Elem) -> Option<Vec<usize>> {
        let GroupKind::CyclicProduct { moduli } = &self.kind else {
            return None;
        };
        let mut x = a.index();
        let mut digits = vec![0; moduli.len()];
        for (d, &m) in digits.iter_mut().zip(moduli).rev() {
            *d = x % m;
            x /= m;
        }
        Some(digits)
    }

    pub fn from_components(&self, digits: &[usize]) -> Result<Elem, GroupError> {
        let GroupKind::CyclicProduct { moduli } = &self.kind else {
            return Err(GroupError::BadSpec(self.name.clone()));
        };
        if digits.len() != moduli.len() || digits.iter().zip(moduli).any(|(&d, &m)| d >= m) {
            return Err(GroupError::BadSpec(format!("{digits:?}")));
        }
        let index = digits.iter().zip(moduli).fold(0, |acc, (&d, &m)| acc * m + d);
        self.elem(index)
    }

    /// The operation table as nested rows, in the layout of [`TableFile`].
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.table[a * self.order + b] as usize).collect())
            .collect()
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}
