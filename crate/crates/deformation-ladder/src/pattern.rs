use galois_rings::Mat;

/// Entry-wise lower bounds on `p`-adic valuations, as for the conjugated lattice
/// `H = D·GSp·D⁻¹ ∩ D⁻¹·GSp·D` with `D = diag(p^{e_i})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuationPattern {
    bounds: Vec<Vec<u32>>,
}

impl ValuationPattern {
    pub fn new(bounds: Vec<Vec<u32>>) -> Self {
        ValuationPattern { bounds }
    }

    /// `bounds[i][j] = |e_i − e_j|`.
    pub fn from_exponents(e: &[i64]) -> Self {
        let bounds = e.iter().map(|a| e.iter().map(|b| (a - b).unsigned_abs() as u32).collect()).collect();
        ValuationPattern { bounds }
    }

    pub fn bound(&self, i: usize, j: usize) -> u32 {
        self.bounds[i][j]
    }
    pub fn size(&self) -> usize {
        self.bounds.len()
    }

    /// Whether every entry of `x` has valuation at least its bound (zero always passes).
    pub fn admits(&self, x: &Mat) -> bool {
        let r = x.ring();
        (0..x.rows()).all(|i| {
            (0..x.cols()).all(|j| match r.valuation(x.get(i, j)) {
                None => true,
                Some(v) => v >= self.bounds[i][j],
            })
        })
    }

    /// Whether `Id + p^level·y` is admitted for every `y` supported on `(i, j)`.
    pub fn allows_at(&self, level: u32, i: usize, j: usize) -> bool {
        self.bounds[i][j] <= level
    }

    /// Whether every nonzero entry of `y` sits at a position allowed at `level`.
    pub fn supports(&self, level: u32, y: &Mat) -> bool {
        let r = y.ring();
        (0..y.rows()).all(|i| (0..y.cols()).all(|j| r.is_zero(y.get(i, j)) || self.allows_at(level, i, j)))
    }
}
