//! Plain permutations of `[m]`, used as the type A avatars of signed permutations.

use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;

/// A bijection of `{1, ..., m}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self, ParseError> {
        let m = images.len();
        let mut seen = vec![false; m + 1];
        for &x in &images {
            let x = x as usize;
            if x == 0 || x > m || seen[x] {
                return Err(ParseError::NotAPermutation(format!("{images:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn identity(m: usize) -> Self {
        Permutation {
            images: (1..=m as u32).collect(),
        }
    }

    /// The longest element `i -> m + 1 - i`.
    pub fn longest(m: usize) -> Self {
        Permutation {
            images: (1..=m as u32).rev().collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Image of `i` (1-based).
    pub fn apply(&self, i: usize) -> u32 {
        self.images[i - 1]
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.size(), other.size(), "permutation sizes differ");
        Permutation {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize - 1])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.size()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize - 1] = i as u32 + 1;
        }
        Permutation { images }
    }

    pub fn inversions(&self) -> usize {
        let a = &self.images;
        let mut count = 0;
        for i in 0..a.len() {
            for j in i + 1..a.len() {
                if a[i] > a[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Bruhat order via the tableau criterion: for every `d`, the sorted
    /// prefix `self(1..d)` is dominated entrywise by the sorted prefix of `other`.
    pub fn bruhat_leq(&self, other: &Permutation) -> bool {
        assert_eq!(self.size(), other.size(), "permutation sizes differ");
        let m = self.size();
        let mut a = Vec::with_capacity(m);
        let mut b = Vec::with_capacity(m);
        for d in 0..m.saturating_sub(1) {
            a.push(self.images[d]);
            b.push(other.images[d]);
            a.sort_unstable();
            b.sort_unstable();
            if a.iter().zip(&b).any(|(x, y)| x > y) {
                return false;
            }
        }
        true
    }

    /// Digits run together, as in `51236784`. Only unambiguous for `m <= 9`.
    pub fn compact(&self) -> String {
        if self.size() <= 9 {
            self.images.iter().map(|x| x.to_string()).collect()
        } else {
            self.to_string()
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Permutation {
    type Err = ParseError;

    /// Accepts `5,1,2,3,6,7,8,4` or, for sizes up to nine, `51236784`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let images: Option<Vec<u32>> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse::<u32>().ok()).collect()
        } else {
            s.chars().map(|c| c.to_digit(10)).collect()
        };
        let images = images.ok_or_else(|| ParseError::NotAPermutation(s.to_string()))?;
        Permutation::new(images)
    }
}
