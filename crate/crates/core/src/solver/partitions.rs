//! Set partitions as restricted growth strings: `a[0] = 0` and
//! `a[i] <= 1 + max(a[0..i])`. Lexicographic order on the strings gives a
//! duplicate-free enumeration.

/// Lexicographic iterator over the restricted growth strings of length `n`.
#[derive(Clone, Debug)]
pub struct RestrictedGrowth {
    labels: Vec<usize>,
    /// `prefix_max[i] = max(labels[0..=i])`
    prefix_max: Vec<usize>,
    started: bool,
    done: bool,
}

impl RestrictedGrowth {
    pub fn new(n: usize) -> Self {
        RestrictedGrowth {
            labels: vec![0; n],
            prefix_max: vec![0; n],
            started: false,
            done: false,
        }
    }

    /// Advances to the next string; `false` once exhausted.
    pub fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if !self.started {
            self.started = true;
            return true;
        }
        let n = self.labels.len();
        for i in (1..n).rev() {
            if self.labels[i] <= self.prefix_max[i - 1] {
                self.labels[i] += 1;
                self.prefix_max[i] = self.prefix_max[i - 1].max(self.labels[i]);
                for j in i + 1..n {
                    self.labels[j] = 0;
                    self.prefix_max[j] = self.prefix_max[i];
                }
                return true;
            }
        }
        self.done = true;
        false
    }

    /// The current string. Only meaningful after `advance` returned `true`.
    #[inline]
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Number of blocks in the current string.
    #[inline]
    pub fn block_count(&self) -> usize {
        self.prefix_max.last().map_or(0, |m| m + 1)
    }
}

/// Bell numbers `B(0..=25)` fit in a `u64`; larger `n` returns `None`.
pub fn bell_number(n: usize) -> Option<u64> {
    // Bell triangle
    let mut row: Vec<u64> = vec![1];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for &x in &row {
            let last = *next.last().unwrap();
            next.push(last.checked_add(x)?);
        }
        row = next;
    }
    Some(row[0])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all(n: usize) -> Vec<Vec<usize>> {
        let mut it = RestrictedGrowth::new(n);
        let mut out = Vec::new();
        while it.advance() {
            out.push(it.labels().to_vec());
        }
        out
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(all(0), vec![Vec::<usize>::new()]);
        assert_eq!(all(1), vec![vec![0]]);
        assert_eq!(
            all(3),
            vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 0], vec![0, 1, 1], vec![0, 1, 2]]
        );
    }

    #[test]
    fn counts_match_bell_numbers() {
        let bell = [1u64, 1, 2, 5, 15, 52, 203, 877, 4140, 21147];
        for (n, &b) in bell.iter().enumerate() {
            let strings = all(n);
            assert_eq!(strings.len() as u64, b, "n = {n}");
            assert_eq!(bell_number(n), Some(b));
            assert!(strings.windows(2).all(|w| w[0] < w[1]), "lexicographic order");
        }
        assert_eq!(bell_number(15), Some(1_382_958_545));
    }

    #[test]
    fn block_count_tracks_prefix_max() {
        let mut it = RestrictedGrowth::new(4);
        while it.advance() {
            let expected = it.labels().iter().max().unwrap() + 1;
            assert_eq!(it.block_count(), expected);
        }
    }
}
