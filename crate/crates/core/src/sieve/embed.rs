//! Rowmotion-equivariant embeddings of the triangular posets into square boxes.

use std::collections::HashSet;

use super::conjecture::Conjecture;
use super::report::CheckReport;
use crate::error::{Error, Result};
use crate::plane::{BoxSearch, PlanePartition};
use crate::poset::{ElementId, PPartition, Poset};

/// Embedding of one triangular poset, with the posets it needs built once.
pub struct TriangleEmbedding {
    kind: Conjecture,
    n: u32,
    source: Poset,
    /// The wide triangle with `side − 1` rows, for the wide and corner kinds.
    staircase: Option<Poset>,
}

fn cell(id: ElementId) -> (usize, usize) {
    match id {
        ElementId::Cell(i, j) => (i as usize, j as usize),
        ElementId::Index(_) => unreachable!("triangle ids are cells"),
    }
}

impl TriangleEmbedding {
    /// `kind` and `n` are as in the conjectures: the source poset is `kind.poset(n)`.
    pub fn new(kind: Conjecture, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Range("triangle size must be positive".into()));
        }
        let source = kind.poset(n);
        let staircase = match kind {
            Conjecture::Tall => None,
            Conjecture::Wide => Some(source.clone()),
            Conjecture::Corner => Some(Poset::wide_triangle(2 * n - 1)),
        };
        Ok(TriangleEmbedding { kind, n, source, staircase })
    }

    pub fn source(&self) -> &Poset {
        &self.source
    }

    /// Side of the target square.
    pub fn side(&self) -> usize {
        let n = self.n as usize;
        match self.kind {
            Conjecture::Tall => n,
            Conjecture::Wide => n + 1,
            Conjecture::Corner => 2 * n,
        }
    }

    /// Height of the target box for source height `m`.
    pub fn target_height(&self, m: u32) -> u32 {
        match self.kind {
            Conjecture::Tall => m,
            Conjecture::Wide | Conjecture::Corner => 2 * m,
        }
    }

    pub fn embed(&self, pi: &PPartition) -> Result<PlanePartition> {
        self.source.validate(pi)?;
        let side = self.side();
        match self.kind {
            Conjecture::Tall => {
                let mut rows = vec![vec![0; side]; side];
                for (h, &id) in self.source.ids().iter().enumerate() {
                    let (i, j) = cell(id);
                    rows[i - 1][j - 1] = pi.value(h);
                    rows[j - 1][i - 1] = pi.value(h);
                }
                PlanePartition::new(side, side, pi.height, &rows)
            }
            Conjecture::Wide => self.staircase_embed(pi),
            Conjecture::Corner => {
                let stair = self.staircase.as_ref().expect("corner keeps a staircase");
                let values = stair
                    .ids()
                    .iter()
                    .map(|&id| {
                        let (i, j) = cell(id);
                        let folded = ElementId::Cell(i.min(j) as u32, i.max(j) as u32);
                        pi.value(self.source.index_of(folded).expect("folded cell exists"))
                    })
                    .collect();
                self.staircase_embed(&PPartition::new(pi.height, values))
            }
        }
    }

    fn staircase_embed(&self, sigma: &PPartition) -> Result<PlanePartition> {
        let stair = self.staircase.as_ref().expect("wide or corner");
        let side = self.side();
        let half = sigma.height;
        let mut powers = vec![sigma.clone()];
        for k in 1..side {
            let next = stair.rowmotion(&powers[k - 1]);
            powers.push(next);
        }
        let at = |k: usize, i: usize, j: usize| {
            powers[k].value(stair.index_of(ElementId::Cell(i as u32, j as u32)).expect("cell in staircase"))
        };
        let mut rows = vec![vec![0; side]; side];
        for i in 1..=side {
            for j in 1..=side {
                rows[i - 1][j - 1] = match (i + j).cmp(&(side + 1)) {
                    std::cmp::Ordering::Less => at(0, i, j) + half,
                    std::cmp::Ordering::Equal => half,
                    std::cmp::Ordering::Greater => {
                        let k = i + j - side - 1;
                        half - at(k, i - k, j - k)
                    }
                };
            }
        }
        PlanePartition::new(side, side, 2 * half, &rows)
    }

    /// Membership in the stated image.
    pub fn in_image(&self, pi: &PlanePartition) -> bool {
        pi.is_square() && pi.a() == self.side() && satisfies(self.kind, pi)
    }

    /// A search space containing the image.
    ///
    /// For the wide and corner kinds, `Tr·Row^{side}(π) = π` forces the antidiagonal to equal half
    /// the height, by reciprocity; the search pins those cells.
    pub fn image_search(&self, m: u32) -> Result<BoxSearch> {
        let side = self.side();
        let h = self.target_height(m);
        let mut search = match self.kind {
            Conjecture::Tall | Conjecture::Corner => BoxSearch::symmetric(side, h)?,
            Conjecture::Wide => BoxSearch::new(side, side, h)?,
        };
        if self.kind != Conjecture::Tall {
            for i in 1..=side {
                search = search.pin(i, side + 1 - i, m)?;
            }
        }
        Ok(search)
    }

    /// The image, found by search and filtered by [`TriangleEmbedding::in_image`].
    pub fn image(&self, m: u32) -> Result<Vec<PlanePartition>> {
        Ok(self.image_search(m)?.par_filter_map(|p| self.in_image(p).then(|| p.clone())))
    }

    /// Injectivity, rowmotion equivariance, and equality of the image with the searched set.
    pub fn verify(&self, m: u32) -> Result<CheckReport> {
        let mut report = CheckReport::new(format!("{}-embedding", self.kind.name()), &[("n", self.n), ("m", m)]);
        let mut seen = HashSet::new();
        for sigma in self.source.ppartitions(m) {
            let pi = self.embed(&sigma)?;
            let row = self.embed(&self.source.rowmotion(&sigma))?;
            report.record(row == pi.rowmotion(), || format!("embedding does not commute with rowmotion at {pi}"));
            report.record(self.in_image(&pi), || format!("{pi} is outside the stated image"));
            report.record(seen.insert(pi.clone()), || format!("{pi} is hit twice"));
        }
        let image = self.image(m)?;
        let all_hit = image.len() == seen.len() && image.iter().all(|p| seen.contains(p));
        report
            .record(all_hit, || format!("searched image has {} elements, embedding hits {}", image.len(), seen.len()));
        Ok(report)
    }
}

fn satisfies(kind: Conjecture, pi: &PlanePartition) -> bool {
    let row_side = || {
        let mut q = pi.clone();
        for _ in 0..pi.a() {
            q.rowmote_mut();
        }
        q
    };
    match kind {
        Conjecture::Tall => pi.is_symmetric(),
        Conjecture::Wide => row_side().transpose().map(|t| t == *pi).unwrap_or(false),
        Conjecture::Corner => pi.is_symmetric() && row_side() == *pi,
    }
}

/// `PP^m(△_n) → PP^m(n × n)`, onto the symmetric plane partitions.
pub fn embed_tall(pi: &PPartition, n: u32) -> Result<PlanePartition> {
    TriangleEmbedding::new(Conjecture::Tall, n)?.embed(pi)
}

/// `PP^M(▽_{n−1}) → PP^{2M}(n × n)`, onto `{π : Tr·Row^n(π) = π}`. Needs `n ≥ 2`.
pub fn embed_wide(pi: &PPartition, n: u32) -> Result<PlanePartition> {
    if n < 2 {
        return Err(Error::Range("the wide embedding needs n ≥ 2".into()));
    }
    TriangleEmbedding::new(Conjecture::Wide, n - 1)?.embed(pi)
}

/// `PP^M(corner_n) → PP^{2M}(2n × 2n)`, onto `{π : Tr(π) = π, Row^{2n}(π) = π}`.
pub fn embed_corner(pi: &PPartition, n: u32) -> Result<PlanePartition> {
    TriangleEmbedding::new(Conjecture::Corner, n)?.embed(pi)
}
