//! Permutations of `{1, ..., n}` in one-line notation.
//!
//! This is the single definition of the group action shared by the symbolic
//! tableau layer and the group-algebra oracle: a permutation acts on a
//! numbering by relabelling its entries, and `a.compose(&b)` applies `b`
//! first.

use std::fmt;

/// A permutation `σ` of `{1, ..., n}`, stored as `images[x - 1] = σ(x)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n as u16).collect(),
        }
    }

    /// Builds a permutation from its one-line notation. Returns `None` if the
    /// images are not a rearrangement of `1..=n`.
    pub fn from_images(images: Vec<u16>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x == 0 || x > n || seen[x - 1] {
                return None;
            }
            seen[x - 1] = true;
        }
        Some(Permutation { images })
    }

    /// The transposition exchanging `a` and `b`.
    pub fn transposition(n: usize, a: u16, b: u16) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(a as usize - 1, b as usize - 1);
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: u16) -> u16 {
        self.images[x as usize - 1]
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.apply(x)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u16; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize - 1] = i as u16 + 1;
        }
        Permutation { images }
    }

    /// +1 for even permutations, -1 for odd ones.
    pub fn sign(&self) -> i64 {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut parity = 0usize;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize - 1;
                len += 1;
            }
            parity += len - 1;
        }
        if parity.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// The unique permutation sending `from[k]` to `to[k]` for every `k`.
    /// Both slices must list the same `n` distinct labels.
    pub fn mapping(from: &[u16], to: &[u16]) -> Option<Permutation> {
        if from.len() != to.len() {
            return None;
        }
        let n = from.len();
        let mut images = vec![0u16; n];
        for (&a, &b) in from.iter().zip(to) {
            let a = a as usize;
            if a == 0 || a > n || images[a - 1] != 0 {
                return None;
            }
            images[a - 1] = b;
        }
        Permutation::from_images(images)
    }

    /// Every permutation of the given labels, each extended by the identity
    /// to a permutation of `{1, ..., n}`.
    pub fn all_on(n: usize, labels: &[u16]) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut order: Vec<u16> = labels.to_vec();
        heap_permutations(&mut order, labels.len(), &mut |arrangement| {
            let mut p = Permutation::identity(n);
            for (&from, &to) in labels.iter().zip(arrangement) {
                p.images[from as usize - 1] = to;
            }
            out.push(p);
        });
        out
    }

    /// All `n!` permutations of `{1, ..., n}`.
    pub fn all(n: usize) -> Vec<Permutation> {
        let labels: Vec<u16> = (1..=n as u16).collect();
        Self::all_on(n, &labels)
    }
}

fn heap_permutations(items: &mut [u16], k: usize, visit: &mut impl FnMut(&[u16])) {
    if k <= 1 {
        visit(items);
        return;
    }
    heap_permutations(items, k - 1, visit);
    for i in 0..k - 1 {
        if k.is_multiple_of(2) {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
        heap_permutations(items, k - 1, visit);
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_right_factor_first() {
        let a = Permutation::transposition(3, 1, 2);
        let b = Permutation::transposition(3, 2, 3);
        // (12)(23) sends 3 -> 2 -> 1
        assert_eq!(a.compose(&b).apply(3), 1);
        assert_eq!(b.compose(&a).apply(3), 2);
    }

    #[test]
    fn all_has_factorial_size_and_balanced_signs() {
        let all = Permutation::all(5);
        assert_eq!(all.len(), 120);
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 120);
        assert_eq!(all.iter().map(|p| p.sign()).sum::<i64>(), 0);
    }

    #[test]
    fn inverse_and_mapping() {
        let p = Permutation::from_images(vec![3, 1, 4, 2]).unwrap();
        assert_eq!(p.compose(&p.inverse()), Permutation::identity(4));
        let m = Permutation::mapping(&[1, 2, 3, 4], &[3, 1, 4, 2]).unwrap();
        assert_eq!(m, p);
        assert!(Permutation::from_images(vec![1, 1]).is_none());
    }
}
