//! Dense GF(2) matrices with bit-packed rows.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<u64>>,
}

/// Solutions of `A x = b`: `particular + span(kernel)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solutions {
    pub particular: Vec<u64>,
    pub kernel: Vec<Vec<u64>>,
}

pub(crate) fn words(bits: usize) -> usize {
    bits.div_ceil(64)
}

#[inline]
pub(crate) fn get(v: &[u64], i: usize) -> bool {
    v[i / 64] >> (i % 64) & 1 == 1
}

#[inline]
pub(crate) fn flip(v: &mut [u64], i: usize) {
    v[i / 64] ^= 1 << (i % 64);
}

pub(crate) fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Gf2Matrix { rows, cols, data: vec![vec![0; words(cols)]; rows] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn set(&mut self, r: usize, c: usize) {
        self.data[r][c / 64] |= 1 << (c % 64);
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        get(&self.data[r], c)
    }

    /// Row echelon form in place; returns the pivot column of each pivot row.
    fn eliminate(data: &mut [Vec<u64>], cols: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..cols {
            if row == data.len() {
                break;
            }
            let Some(p) = (row..data.len()).find(|&r| get(&data[r], col)) else {
                continue;
            };
            data.swap(row, p);
            let (top, rest) = data.split_at_mut(row + 1);
            let pivot_row = &top[row];
            for r in rest.iter_mut() {
                if get(r, col) {
                    xor_into(r, pivot_row);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut data = self.data.clone();
        Self::eliminate(&mut data, self.cols).len()
    }

    /// All solutions of `A x = b` (`b` packed over rows), or `None`.
    pub fn solve(&self, b: &[u64]) -> Option<Solutions> {
        // augment with b as column `cols`
        let aug_cols = self.cols + 1;
        let mut data: Vec<Vec<u64>> = (0..self.rows)
            .map(|r| {
                let mut row = self.data[r].clone();
                row.resize(words(aug_cols), 0);
                if get(b, r) {
                    flip(&mut row, self.cols);
                }
                row
            })
            .collect();
        let pivots = Self::eliminate(&mut data, aug_cols);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        // back-substitute to reduced form
        for (i, &pc) in pivots.iter().enumerate().rev() {
            let (top, bottom) = data.split_at_mut(i);
            let pivot_row = &bottom[0];
            for r in top.iter_mut() {
                if get(r, pc) {
                    xor_into(r, pivot_row);
                }
            }
        }
        let mut particular = vec![0; words(self.cols)];
        for (i, &pc) in pivots.iter().enumerate() {
            if get(&data[i], self.cols) {
                flip(&mut particular, pc);
            }
        }
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let kernel = (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0; words(self.cols)];
                flip(&mut v, free);
                for (i, &pc) in pivots.iter().enumerate() {
                    if get(&data[i], free) {
                        flip(&mut v, pc);
                    }
                }
                v
            })
            .collect();
        Some(Solutions { particular, kernel })
    }

    pub fn mul_vec(&self, x: &[u64]) -> Vec<u64> {
        let mut out = vec![0; words(self.rows)];
        for r in 0..self.rows {
            let parity = self.data[r].iter().zip(x).map(|(a, b)| (a & b).count_ones()).sum::<u32>() & 1;
            if parity == 1 {
                flip(&mut out, r);
            }
        }
        out
    }
}
