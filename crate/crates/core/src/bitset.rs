//! Fixed-width bitsets used for vertex sets and basis-index sets.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

macro_rules! bitset {
    ($(#[$meta:meta])* $name:ident, $word:ty) => {
        $(#[$meta])*
        #[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
        pub struct $name($word);

        impl $name {
            /// Number of representable elements.
            pub const CAPACITY: usize = <$word>::BITS as usize;

            pub const fn empty() -> Self {
                Self(0)
            }

            pub const fn from_bits(bits: $word) -> Self {
                Self(bits)
            }

            pub const fn bits(self) -> $word {
                self.0
            }

            /// The set `{0, 1, ..., n - 1}`.
            pub fn full(n: usize) -> Self {
                assert!(n <= Self::CAPACITY, "{} exceeds capacity {}", n, Self::CAPACITY);
                if n == Self::CAPACITY {
                    Self(<$word>::MAX)
                } else {
                    Self((1 << n) - 1)
                }
            }

            pub fn singleton(x: usize) -> Self {
                let mut s = Self::empty();
                s.insert(x);
                s
            }

            #[inline]
            pub fn contains(self, x: usize) -> bool {
                x < Self::CAPACITY && (self.0 >> x) & 1 == 1
            }

            #[inline]
            pub fn insert(&mut self, x: usize) {
                assert!(x < Self::CAPACITY, "element {} out of range", x);
                self.0 |= 1 << x;
            }

            #[inline]
            pub fn remove(&mut self, x: usize) {
                if x < Self::CAPACITY {
                    self.0 &= !(1 << x);
                }
            }

            #[inline]
            pub fn with(mut self, x: usize) -> Self {
                self.insert(x);
                self
            }

            #[inline]
            pub fn without(mut self, x: usize) -> Self {
                self.remove(x);
                self
            }

            #[inline]
            pub fn len(self) -> usize {
                self.0.count_ones() as usize
            }

            #[inline]
            pub fn is_empty(self) -> bool {
                self.0 == 0
            }

            #[inline]
            pub fn union(self, other: Self) -> Self {
                Self(self.0 | other.0)
            }

            #[inline]
            pub fn intersection(self, other: Self) -> Self {
                Self(self.0 & other.0)
            }

            #[inline]
            pub fn difference(self, other: Self) -> Self {
                Self(self.0 & !other.0)
            }

            #[inline]
            pub fn is_subset(self, other: Self) -> bool {
                self.0 & !other.0 == 0
            }

            #[inline]
            pub fn is_disjoint(self, other: Self) -> bool {
                self.0 & other.0 == 0
            }

            /// Smallest element, if any.
            #[inline]
            pub fn first(self) -> Option<usize> {
                if self.0 == 0 {
                    None
                } else {
                    Some(self.0.trailing_zeros() as usize)
                }
            }

            pub fn iter(self) -> impl Iterator<Item = usize> {
                let mut bits = self.0;
                std::iter::from_fn(move || {
                    if bits == 0 {
                        None
                    } else {
                        let x = bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        Some(x)
                    }
                })
            }

            pub fn to_vec(self) -> Vec<usize> {
                self.iter().collect()
            }

            /// Compares by sorted member list.
            pub fn lex_cmp(self, other: Self) -> std::cmp::Ordering {
                self.iter().cmp(other.iter())
            }
        }

        impl FromIterator<usize> for $name {
            fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
                let mut s = Self::empty();
                for x in iter {
                    s.insert(x);
                }
                s
            }
        }

        impl<'a> FromIterator<&'a usize> for $name {
            fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
                iter.into_iter().copied().collect()
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.debug_set().entries(self.iter()).finish()
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{{")?;
                for (i, x) in self.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", x)?;
                }
                write!(f, "}}")
            }
        }

        impl Serialize for $name {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                serializer.collect_seq(self.iter())
            }
        }

        impl<'de> Deserialize<'de> for $name {
            fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
                let items = Vec::<usize>::deserialize(deserializer)?;
                if let Some(&bad) = items.iter().find(|&&x| x >= Self::CAPACITY) {
                    return Err(serde::de::Error::custom(format!("element {} out of range", bad)));
                }
                Ok(items.into_iter().collect())
            }
        }
    };
}

bitset!(
    /// A set of vertex ids, at most [`VertexSet::CAPACITY`] vertices.
    VertexSet,
    u128
);

bitset!(
    /// A set of basis positions (indices into an ordered γ-set).
    IndexSet,
    u64
);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iteration_is_ascending() {
        let s: VertexSet = [127, 3, 64, 0].iter().collect();
        assert_eq!(s.to_vec(), vec![0, 3, 64, 127]);
        assert_eq!(s.len(), 4);
        assert_eq!(s.first(), Some(0));
    }

    #[test]
    fn full_at_capacity() {
        assert_eq!(VertexSet::full(128).len(), 128);
        assert_eq!(IndexSet::full(64).len(), 64);
        assert!(VertexSet::full(0).is_empty());
    }

    #[test]
    fn lex_order_on_members() {
        let a: IndexSet = [0, 3].iter().collect();
        let b: IndexSet = [1, 2].iter().collect();
        assert_eq!(a.lex_cmp(b), std::cmp::Ordering::Less);
        assert_eq!(format!("{}", a), "{0,3}");
    }

    #[test]
    fn serde_as_sorted_list() {
        let s: IndexSet = [5, 1].iter().collect();
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, "[1,5]");
        let back: IndexSet = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<IndexSet>("[64]").is_err());
    }
}
