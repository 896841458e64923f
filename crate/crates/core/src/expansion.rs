//! Finite linear combinations of basis elements indexed by partitions.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

use crate::algebra::{BigRational, TRational};
use crate::error::Result;
use crate::partition::{Partition, StrictPartition};

/// Index types usable as basis labels.
pub trait BasisKey: Ord + Clone + fmt::Display + Serialize {
    /// JSON field name for the label.
    const FIELD: &'static str;
}

impl BasisKey for StrictPartition {
    const FIELD: &'static str = "strict_partition";
}

impl BasisKey for Partition {
    const FIELD: &'static str = "partition";
}

/// `Σ c_λ B_λ` for some basis `B`; no stored coefficient is zero.
#[derive(Clone, PartialEq, Eq)]
pub struct Expansion<K: BasisKey> {
    terms: BTreeMap<K, TRational>,
}

/// Coefficients in the Schur Q-basis.
pub type QExpansion = Expansion<StrictPartition>;

/// Coefficients in the Hall-Littlewood basis `H_λ.1 = Q_λ(t)`.
pub type HExpansion = Expansion<Partition>;

impl<K: BasisKey> Default for Expansion<K> {
    fn default() -> Self {
        Expansion { terms: BTreeMap::new() }
    }
}

impl<K: BasisKey> Expansion<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_terms<I: IntoIterator<Item = (K, TRational)>>(terms: I) -> Self {
        let mut out = Self::new();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn add_term(&mut self, key: K, c: TRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Expansion<K>, c: &TRational) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn coeff(&self, key: &K) -> TRational {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&K, &TRational)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn into_map(self) -> BTreeMap<K, TRational> {
        self.terms
    }

    /// Evaluates every coefficient at `t = t0`.
    pub fn specialize(&self, t0: &BigRational) -> Result<Self> {
        let mut out = Self::new();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), TRational::from_rational(c.eval(t0)?));
        }
        Ok(out)
    }

    /// A JSON-friendly view with a custom field name for the label.
    pub fn with_field<'a>(&'a self, field: &'static str) -> Labelled<'a, K> {
        Labelled { exp: self, field }
    }
}

impl<K: BasisKey> fmt::Display for Expansion<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}*{}", c, k)?;
        }
        Ok(())
    }
}

impl<K: BasisKey> fmt::Debug for Expansion<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<K: BasisKey> Serialize for Expansion<K> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.with_field(K::FIELD).serialize(serializer)
    }
}

/// Serializes an [`Expansion`] as `[{"<field>": [...], "coeff": "..."}]`.
pub struct Labelled<'a, K: BasisKey> {
    exp: &'a Expansion<K>,
    field: &'static str,
}

struct Item<'a, K> {
    field: &'static str,
    key: &'a K,
    coeff: &'a TRational,
}

impl<K: Serialize> Serialize for Item<'_, K> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry(self.field, self.key)?;
        map.serialize_entry("coeff", self.coeff)?;
        map.end()
    }
}

impl<K: BasisKey> Serialize for Labelled<'_, K> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.exp.terms.len()))?;
        for (key, coeff) in &self.exp.terms {
            seq.serialize_element(&Item { field: self.field, key, coeff })?;
        }
        seq.end()
    }
}
