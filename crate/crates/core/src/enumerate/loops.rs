//! Reduced latin squares: unit 0, first row and column the identity.

pub(crate) struct LoopSearch<'v> {
    n: usize,
    cells: Vec<usize>,
    row_used: Vec<u32>,
    col_used: Vec<u32>,
    split: (usize, usize),
    split_counter: usize,
    visit: &'v mut dyn FnMut(&[usize]),
}

/// Depth at which work is divided between threads.
const SPLIT_DEPTH: usize = 2;

impl<'v> LoopSearch<'v> {
    pub(crate) fn new(n: usize, split: (usize, usize), visit: &'v mut dyn FnMut(&[usize])) -> Self {
        let mut cells = vec![0; n * n];
        let mut row_used = vec![0u32; n];
        let mut col_used = vec![0u32; n];
        for i in 0..n {
            cells[i] = i;
            cells[i * n] = i;
            row_used[i] |= 1 << i;
            col_used[i] |= 1 << i;
        }
        LoopSearch {
            n,
            cells,
            row_used,
            col_used,
            split,
            split_counter: 0,
            visit,
        }
    }

    pub(crate) fn run(&mut self) {
        if self.n <= 1 {
            (self.visit)(&self.cells);
        } else {
            self.fill(0);
        }
    }

    fn fill(&mut self, depth: usize) {
        let m = self.n - 1;
        if depth == SPLIT_DEPTH.min(m * m) {
            let idx = self.split_counter;
            self.split_counter += 1;
            if idx % self.split.1 != self.split.0 {
                return;
            }
        }
        if depth == m * m {
            (self.visit)(&self.cells);
            return;
        }
        let r = 1 + depth / m;
        let c = 1 + depth % m;
        let n = self.n;
        let free = !(self.row_used[r] | self.col_used[c]) & ((1u32 << n) - 1);
        let mut bits = free;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            self.cells[r * n + c] = v;
            self.row_used[r] |= 1 << v;
            self.col_used[c] |= 1 << v;
            self.fill(depth + 1);
            self.row_used[r] &= !(1 << v);
            self.col_used[c] &= !(1 << v);
        }
    }
}
