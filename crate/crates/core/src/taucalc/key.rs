use std::fmt;

/// One correlator `<tau_{d_1} ... tau_{d_n}>_g`, indices sorted descending
/// so every permutation of the same insertions maps to the same key.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TauKey {
    genus: u32,
    indices: Vec<u32>,
}

impl TauKey {
    pub fn new(genus: u32, mut indices: Vec<u32>) -> Self {
        indices.sort_unstable_by(|a, b| b.cmp(a));
        Self { genus, indices }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn n(&self) -> usize {
        self.indices.len()
    }

    /// `2g - 2 + n > 0`
    pub fn is_stable(&self) -> bool {
        2 * self.genus as i64 - 2 + self.n() as i64 > 0
    }

    /// `sum d_i = 3g - 3 + n`
    pub fn satisfies_dimension(&self) -> bool {
        let sum: i64 = self.indices.iter().map(|&d| d as i64).sum();
        sum == 3 * self.genus as i64 - 3 + self.n() as i64
    }

    /// Stable and dimensionally admissible; every other key evaluates to 0.
    pub fn is_admissible(&self) -> bool {
        self.is_stable() && self.satisfies_dimension()
    }

    pub(crate) fn contains(&self, d: u32) -> bool {
        self.indices.contains(&d)
    }

    /// The key with one occurrence of `d` removed.
    pub(crate) fn without(&self, d: u32) -> Option<TauKey> {
        let pos = self.indices.iter().position(|&x| x == d)?;
        let mut indices = self.indices.clone();
        indices.remove(pos);
        Some(TauKey {
            genus: self.genus,
            indices,
        })
    }
}

impl fmt::Debug for TauKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, d) in self.indices.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "t{d}")?;
        }
        write!(f, ">_{}", self.genus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order() {
        assert_eq!(TauKey::new(1, vec![0, 2, 1]), TauKey::new(1, vec![2, 1, 0]));
        assert_eq!(TauKey::new(1, vec![0, 2, 1]).indices(), &[2, 1, 0]);
    }

    #[test]
    fn stability_and_dimension() {
        assert!(TauKey::new(0, vec![0, 0, 0]).is_admissible());
        assert!(!TauKey::new(0, vec![0, 0]).is_stable());
        assert!(!TauKey::new(1, vec![]).is_stable());
        assert!(TauKey::new(1, vec![1]).is_admissible());
        assert!(!TauKey::new(0, vec![0, 0, 1]).satisfies_dimension());
        assert!(TauKey::new(2, vec![4]).is_admissible());
    }

    #[test]
    fn without_removes_one_occurrence() {
        let k = TauKey::new(0, vec![0, 0, 0, 1]);
        assert_eq!(k.without(0), Some(TauKey::new(0, vec![1, 0, 0])));
        assert_eq!(k.without(5), None);
    }
}
