//! Dense GF(2) rows packed into 64-bit words, with just enough linear algebra
//! for rank and orthogonality checks.

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitRow {
    len: usize,
    words: Vec<u64>,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        BitRow {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        let mut row = BitRow::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b & 1 == 1 {
                row.set(i);
            }
        }
        row
    }

    pub fn from_support(len: usize, support: &[usize]) -> Self {
        let mut row = BitRow::zeros(len);
        for &i in support {
            row.flip(i);
        }
        row
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitRow) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Inner product over GF(2).
    pub fn dot(&self, other: &BitRow) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    fn leading_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn to_bits(&self) -> Vec<u8> {
        (0..self.len).map(|i| self.get(i) as u8).collect()
    }
}

/// Incremental row-echelon basis; `insert` reports whether a row was independent.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    rows: Vec<(usize, BitRow)>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        EchelonBasis { rows: Vec::new() }
    }

    pub fn reduce(&self, row: &BitRow) -> BitRow {
        let mut r = row.clone();
        for (pivot, b) in &self.rows {
            if r.get(*pivot) {
                r.xor_assign(b);
            }
        }
        r
    }

    pub fn insert(&mut self, row: &BitRow) -> bool {
        let r = self.reduce(row);
        match r.leading_one() {
            None => false,
            Some(pivot) => {
                // keep earlier rows reduced with respect to the new pivot
                for (_, b) in self.rows.iter_mut() {
                    if b.get(pivot) {
                        b.xor_assign(&r);
                    }
                }
                self.rows.push((pivot, r));
                true
            }
        }
    }

    pub fn contains(&self, row: &BitRow) -> bool {
        self.reduce(row).is_zero()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

pub fn rank<'a>(rows: impl IntoIterator<Item = &'a BitRow>) -> usize {
    let mut basis = EchelonBasis::new();
    for r in rows {
        basis.insert(r);
    }
    basis.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_small_matrix() {
        let rows = [
            BitRow::from_bits(&[1, 1, 0]),
            BitRow::from_bits(&[0, 1, 1]),
            BitRow::from_bits(&[1, 0, 1]),
        ];
        assert_eq!(rank(rows.iter()), 2);
    }

    #[test]
    fn dot_and_weight() {
        let a = BitRow::from_support(130, &[0, 64, 129]);
        let b = BitRow::from_support(130, &[64, 129, 5]);
        assert!(!a.dot(&b));
        assert_eq!(a.count_ones(), 3);
        assert_eq!(a.to_bits().iter().filter(|&&x| x == 1).count(), 3);
    }

    #[test]
    fn membership() {
        let mut basis = EchelonBasis::new();
        basis.insert(&BitRow::from_bits(&[1, 1, 0, 0]));
        basis.insert(&BitRow::from_bits(&[0, 1, 1, 0]));
        assert!(basis.contains(&BitRow::from_bits(&[1, 0, 1, 0])));
        assert!(!basis.contains(&BitRow::from_bits(&[0, 0, 0, 1])));
    }
}
