//! Words over the positive integers and the lattice condition.

/// A word is a sequence of positive letters.
pub type Word = Vec<u32>;

/// True when every prefix contains at least as many i's as (i+1)'s, for all i.
pub fn is_lattice(word: &[u32]) -> bool {
    let max = word.iter().copied().max().unwrap_or(0) as usize;
    let mut counts = vec![0u32; max + 1];
    for &letter in word {
        let l = letter as usize;
        counts[l - 1] += 1;
        if l >= 2 && counts[l - 1] > counts[l - 2] {
            return false;
        }
    }
    true
}

/// Incremental lattice checker used by backtracking enumerations.
#[derive(Debug, Clone)]
pub struct LatticeCounter {
    counts: Vec<u32>,
}

impl LatticeCounter {
    pub fn new(max_letter: u32) -> Self {
        LatticeCounter {
            counts: vec![0; max_letter as usize],
        }
    }

    /// Start from the counts of an already-read prefix.
    pub fn with_counts(counts: Vec<u32>) -> Self {
        LatticeCounter { counts }
    }

    pub fn count(&self, letter: u32) -> u32 {
        self.counts[letter as usize - 1]
    }

    /// True when appending `letter` keeps the word lattice.
    pub fn can_push(&self, letter: u32) -> bool {
        let l = letter as usize;
        l == 1 || self.counts[l - 1] < self.counts[l - 2]
    }

    pub fn push(&mut self, letter: u32) {
        self.counts[letter as usize - 1] += 1;
    }

    pub fn pop(&mut self, letter: u32) {
        self.counts[letter as usize - 1] -= 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_examples() {
        assert!(is_lattice(&[1, 1, 1, 2, 3, 2, 1, 4]));
        assert!(!is_lattice(&[1, 2, 2, 1]));
        assert!(is_lattice(&[]));
    }

    /// Direct prefix-count checker used as an oracle.
    fn is_lattice_by_prefixes(word: &[u32]) -> bool {
        for end in 0..=word.len() {
            let prefix = &word[..end];
            let max = prefix.iter().copied().max().unwrap_or(0);
            for i in 1..max {
                let ni = prefix.iter().filter(|&&l| l == i).count();
                let nj = prefix.iter().filter(|&&l| l == i + 1).count();
                if ni < nj {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn agrees_with_prefix_oracle_on_short_words() {
        // all words over {1,2,3} of length <= 8
        for len in 0..=8usize {
            let mut word = vec![1u32; len];
            loop {
                assert_eq!(
                    is_lattice(&word),
                    is_lattice_by_prefixes(&word),
                    "word {:?}",
                    word
                );
                // odometer increment
                let mut i = 0;
                while i < len && word[i] == 3 {
                    word[i] = 1;
                    i += 1;
                }
                if i == len {
                    break;
                }
                word[i] += 1;
            }
            if len == 0 {
                continue;
            }
        }
    }

    #[test]
    fn counter_matches_batch_check() {
        let word = [1, 1, 2, 1, 3, 2];
        let mut counter = LatticeCounter::new(4);
        for &l in &word {
            assert!(counter.can_push(l));
            counter.push(l);
        }
        // 1,1,2,1,3,2 has counts (3,2,1); a 4 is fine but popping the 3 first
        // makes a following 4 illegal.
        assert!(counter.can_push(4));
        counter.pop(3);
        assert!(!counter.can_push(4));
        let mut fresh = LatticeCounter::new(3);
        fresh.push(1);
        assert!(!fresh.can_push(3));
    }
}
