use std::fmt;

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// Largest supported ground set; elements live in 1..=GROUND_CAP.
pub const GROUND_CAP: u32 = 128;

/// A subset of [n] packed into a 128-bit mask: element i occupies bit i-1.
///
/// The derived `Ord` compares masks as integers, which is the fixed total
/// order used everywhere (family member order, candidate scan order,
/// canonical forms): the highest element where two subsets differ decides.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(pub(crate) u128);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_mask(mask: u128) -> Subset {
        Subset(mask)
    }

    pub fn mask(self) -> u128 {
        self.0
    }

    pub fn singleton(e: u32) -> Subset {
        debug_assert!((1..=GROUND_CAP).contains(&e));
        Subset(1u128 << (e - 1))
    }

    /// Inclusive interval {a, a+1, ..., b}; empty when a > b.
    pub fn interval(a: u32, b: u32) -> Subset {
        if a > b {
            return Subset::EMPTY;
        }
        debug_assert!(a >= 1 && b <= GROUND_CAP);
        let width = b - a + 1;
        let block = if width == 128 { u128::MAX } else { (1u128 << width) - 1 };
        Subset(block << (a - 1))
    }

    pub fn try_from_elems(elems: &[u32]) -> Result<Subset> {
        let mut mask = 0u128;
        for &e in elems {
            if e == 0 || e > GROUND_CAP {
                return Err(invalid(format!("element {e} outside 1..={GROUND_CAP}")));
            }
            let bit = 1u128 << (e - 1);
            if mask & bit != 0 {
                return Err(invalid(format!("repeated element {e}")));
            }
            mask |= bit;
        }
        Ok(Subset(mask))
    }

    pub fn from_elems(elems: &[u32]) -> Subset {
        Subset::try_from_elems(elems).expect("valid elements")
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: u32) -> bool {
        e >= 1 && e <= GROUND_CAP && self.0 & (1u128 << (e - 1)) != 0
    }

    pub fn with(self, e: u32) -> Subset {
        Subset(self.0 | (1u128 << (e - 1)))
    }

    pub fn without(self, e: u32) -> Subset {
        Subset(self.0 & !(1u128 << (e - 1)))
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn inter(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn minus(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: Subset) -> bool {
        self.0 & other.0 != 0
    }

    pub fn min_elem(self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() + 1)
        }
    }

    pub fn max_elem(self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(128 - self.0.leading_zeros())
        }
    }

    pub fn elems(self) -> ElemIter {
        ElemIter(self.0)
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.elems().collect()
    }
}

pub struct ElemIter(u128);

impl Iterator for ElemIter {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() + 1;
        self.0 &= self.0 - 1;
        Some(e)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elems().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len() as usize))?;
        for e in self.elems() {
            seq.serialize_element(&e)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Subset {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Subset, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Subset;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a strictly increasing list of elements in 1..=128")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<Subset, A::Error> {
                let mut elems: Vec<u32> = Vec::new();
                while let Some(e) = seq.next_element::<u32>()? {
                    if let Some(&last) = elems.last() {
                        if e <= last {
                            return Err(de::Error::custom(format!(
                                "elements must be strictly increasing, got {e} after {last}"
                            )));
                        }
                    }
                    elems.push(e);
                }
                Subset::try_from_elems(&elems).map_err(de::Error::custom)
            }
        }
        deserializer.deserialize_seq(V)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_and_membership() {
        let s = Subset::interval(3, 6);
        assert_eq!(s.to_vec(), vec![3, 4, 5, 6]);
        assert!(s.contains(4));
        assert!(!s.contains(2));
        assert!(Subset::interval(5, 4).is_empty());
        assert_eq!(Subset::interval(1, 128).len(), 128);
    }

    #[test]
    fn order_is_mask_order() {
        // {1} < {2} < {1,2} < {3}: the top differing element decides.
        let a = Subset::from_elems(&[1]);
        let b = Subset::from_elems(&[2]);
        let ab = Subset::from_elems(&[1, 2]);
        let c = Subset::from_elems(&[3]);
        assert!(a < b && b < ab && ab < c);
    }

    #[test]
    fn set_algebra() {
        let a = Subset::from_elems(&[1, 2, 5]);
        let b = Subset::from_elems(&[2, 5, 7]);
        assert_eq!(a.inter(b).to_vec(), vec![2, 5]);
        assert_eq!(a.union(b).to_vec(), vec![1, 2, 5, 7]);
        assert_eq!(a.minus(b).to_vec(), vec![1]);
        assert!(a.inter(b).is_subset_of(a));
        assert_eq!(a.min_elem(), Some(1));
        assert_eq!(a.max_elem(), Some(5));
    }

    #[test]
    fn rejects_bad_elems() {
        assert!(Subset::try_from_elems(&[0]).is_err());
        assert!(Subset::try_from_elems(&[129]).is_err());
        assert!(Subset::try_from_elems(&[3, 3]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let s = Subset::from_elems(&[1, 4, 9]);
        let js = serde_json::to_string(&s).unwrap();
        assert_eq!(js, "[1,4,9]");
        let back: Subset = serde_json::from_str(&js).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<Subset>("[4,1]").is_err());
        assert!(serde_json::from_str::<Subset>("[2,2]").is_err());
    }
}
