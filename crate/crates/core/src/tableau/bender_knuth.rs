use super::Ssyt;
use crate::error::{Error, Result};

impl Ssyt {
    /// `BK_i` for `1 ≤ i < k`.
    pub fn bender_knuth(&self, i: u32) -> Result<Ssyt> {
        if i == 0 || i >= self.k {
            return Err(Error::OutOfBounds(format!("BK_{i} needs 1 <= i < k = {}", self.k)));
        }
        let mut out = self.clone();
        self.bk_into(i, &mut out);
        Ok(out)
    }

    fn bk_into(&self, i: u32, out: &mut Ssyt) {
        let rows = &self.rows;
        for (r, row) in rows.iter().enumerate() {
            let frozen = |c: usize| match row[c] {
                v if v == i => rows.get(r + 1).and_then(|b| b.get(c)) == Some(&(i + 1)),
                v if v == i + 1 => r > 0 && rows[r - 1][c] == i,
                _ => true,
            };
            let free: Vec<usize> = (0..row.len()).filter(|&c| (row[c] == i || row[c] == i + 1) && !frozen(c)).collect();
            let (Some(&start), Some(&end)) = (free.first(), free.last()) else { continue };
            debug_assert_eq!(end + 1 - start, free.len(), "free letters form a contiguous block");
            let n_i = free.iter().filter(|&&c| row[c] == i).count();
            let n_next = free.len() - n_i;
            for (offset, c) in (start..=end).enumerate() {
                out.rows[r][c] = if offset < n_next { i } else { i + 1 };
            }
        }
    }

    /// `ρ = BK_1 ⋯ BK_{k−1}`
    pub fn promotion(&self) -> Ssyt {
        let mut t = self.clone();
        for i in (1..self.k).rev() {
            t = t.bender_knuth(i).expect("in range");
        }
        t
    }

    pub fn promotion_inverse(&self) -> Ssyt {
        let mut t = self.clone();
        for i in 1..self.k {
            t = t.bender_knuth(i).expect("in range");
        }
        t
    }

    /// `ε = (BK_1)(BK_2 BK_1) ⋯ (BK_{k−1} ⋯ BK_1)`
    pub fn evacuation(&self) -> Ssyt {
        let mut t = self.clone();
        for g in (1..self.k).rev() {
            for i in 1..=g {
                t = t.bender_knuth(i).expect("in range");
            }
        }
        t
    }

    /// `ε* = (BK_{k−1})(BK_{k−2} BK_{k−1}) ⋯ (BK_1 ⋯ BK_{k−1})`
    pub fn dual_evacuation(&self) -> Ssyt {
        let mut t = self.clone();
        for g in 1..self.k {
            for i in (g..self.k).rev() {
                t = t.bender_knuth(i).expect("in range");
            }
        }
        t
    }
}
