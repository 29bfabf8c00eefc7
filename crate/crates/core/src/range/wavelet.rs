// Wavelet matrix over small integer values with rank-based range queries.
// Space is n * ceil(log2 n) bits plus one u32 per 64-bit word.

// Each block pairs a 64-bit word with the number of ones before it, so a
// rank costs one memory access.
#[derive(Clone, Debug)]
struct RankBits {
    blocks: Vec<(u64, u64)>,
}

impl RankBits {
    fn new(bits: &[bool]) -> Self {
        let mut words = vec![0u64; bits.len() / 64 + 1];
        for (i, &b) in bits.iter().enumerate() {
            if b {
                words[i / 64] |= 1 << (i % 64);
            }
        }
        let mut blocks = Vec::with_capacity(words.len());
        let mut acc = 0u64;
        for w in words {
            blocks.push((w, acc));
            acc += u64::from(w.count_ones());
        }
        RankBits { blocks }
    }

    #[inline]
    fn rank1(&self, i: usize) -> usize {
        let (word, before) = self.blocks[i / 64];
        let mask = (1u64 << (i % 64)) - 1;
        before as usize + (word & mask).count_ones() as usize
    }

    #[inline]
    fn rank0(&self, i: usize) -> usize {
        i - self.rank1(i)
    }
}

#[derive(Clone, Debug)]
pub(crate) struct WaveletMatrix {
    len: usize,
    // most significant level first
    levels: Vec<RankBits>,
    zeros: Vec<usize>,
}

impl WaveletMatrix {
    /// `values[k] < 2^bits` where `bits` is the smallest width covering
    /// `values.len()`.
    pub(crate) fn new(values: &[usize]) -> Self {
        let len = values.len();
        let mut width = 1;
        while (1usize << width) < len.max(2) {
            width += 1;
        }
        let mut cur = values.to_vec();
        let mut levels = Vec::with_capacity(width);
        let mut zeros = Vec::with_capacity(width);
        for level in (0..width).rev() {
            let bits: Vec<bool> = cur.iter().map(|&v| (v >> level) & 1 == 1).collect();
            let (lo, hi): (Vec<usize>, Vec<usize>) = cur.iter().partition(|&&v| (v >> level) & 1 == 0);
            zeros.push(lo.len());
            levels.push(RankBits::new(&bits));
            cur = lo;
            cur.extend(hi);
        }
        WaveletMatrix { len, levels, zeros }
    }

    fn width(&self) -> usize {
        self.levels.len()
    }

    /// Number of values `< bound` among positions `[a, b)`.
    pub(crate) fn count_less(&self, mut a: usize, mut b: usize, bound: usize) -> usize {
        debug_assert!(a <= b && b <= self.len);
        if bound >= 1 << self.width() {
            return b - a;
        }
        let mut count = 0;
        for (d, bits) in self.levels.iter().enumerate() {
            let level = self.width() - 1 - d;
            let (ra, rb) = (bits.rank0(a), bits.rank0(b));
            if (bound >> level) & 1 == 1 {
                count += rb - ra;
                a = self.zeros[d] + (a - ra);
                b = self.zeros[d] + (b - rb);
            } else {
                a = ra;
                b = rb;
            }
        }
        count
    }

    /// The `k`-th smallest value (0-based) among positions `[a, b)`.
    pub(crate) fn kth_smallest(&self, mut a: usize, mut b: usize, mut k: usize) -> usize {
        debug_assert!(k < b - a);
        let mut value = 0;
        for (d, bits) in self.levels.iter().enumerate() {
            let level = self.width() - 1 - d;
            let (ra, rb) = (bits.rank0(a), bits.rank0(b));
            let z = rb - ra;
            if k < z {
                a = ra;
                b = rb;
            } else {
                k -= z;
                value |= 1 << level;
                a = self.zeros[d] + (a - ra);
                b = self.zeros[d] + (b - rb);
            }
        }
        value
    }

    /// Largest value `< bound` among positions `[a, b)`.
    pub(crate) fn prev_value(&self, a: usize, b: usize, bound: usize) -> Option<usize> {
        let c = self.count_less(a, b, bound);
        (c > 0).then(|| self.kth_smallest(a, b, c - 1))
    }

    /// Largest value `< bound` and smallest value `>= bound` among
    /// positions `[a, b)`, sharing one count.
    pub(crate) fn straddle(&self, a: usize, b: usize, bound: usize) -> (Option<usize>, Option<usize>) {
        let c = self.count_less(a, b, bound);
        (
            (c > 0).then(|| self.kth_smallest(a, b, c - 1)),
            (c < b - a).then(|| self.kth_smallest(a, b, c)),
        )
    }

    /// Smallest value `>= bound` among positions `[a, b)`.
    pub(crate) fn next_value(&self, a: usize, b: usize, bound: usize) -> Option<usize> {
        let c = self.count_less(a, b, bound);
        (c < b - a).then(|| self.kth_smallest(a, b, c))
    }
}
