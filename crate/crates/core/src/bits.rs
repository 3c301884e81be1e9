//! Square bit matrix with word-level row operations.

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BitMatrix {
    n: usize,
    words: usize, // per row
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        BitMatrix {
            n,
            words,
            data: vec![0; n * words],
        }
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize) {
        self.data[r * self.words + c / 64] |= 1 << (c % 64);
    }

    pub fn clear(&mut self, r: usize, c: usize) {
        self.data[r * self.words + c / 64] &= !(1 << (c % 64));
    }

    /// OR row `src` into row `dst`.
    pub fn or_row_from(&mut self, dst: usize, src: usize) {
        if dst == src {
            return;
        }
        for k in 0..self.words {
            let v = self.data[src * self.words + k];
            self.data[dst * self.words + k] |= v;
        }
    }

    pub fn row_count(&self, r: usize) -> usize {
        self.data[r * self.words..(r + 1) * self.words]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    /// Columns set in row `r`, ascending.
    pub fn row_ones(&self, r: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.data[r * self.words..(r + 1) * self.words];
        row.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + b)
            })
        })
    }

    /// Does row `a` contain every column of row `b`?
    pub fn row_contains(&self, a: usize, b: usize) -> bool {
        let ra = &self.data[a * self.words..(a + 1) * self.words];
        let rb = &self.data[b * self.words..(b + 1) * self.words];
        ra.iter().zip(rb).all(|(x, y)| y & !x == 0)
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::new(self.n);
        for r in 0..self.n {
            for c in self.row_ones(r) {
                t.set(c, r);
            }
        }
        t
    }
}
