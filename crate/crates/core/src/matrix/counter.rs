use std::ops::AddAssign;

/// Tally of scalar operations performed by one computation.
///
/// `temp_cells` counts scratch cells reserved by the block star: every block
/// product stages both operands and its result (`r·k + k·c + r·c` cells) and
/// every scalar star reserves one cell. Nothing is released before the run
/// ends, so the tally is also the peak.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct OpCounter {
    pub adds: u64,
    pub muls: u64,
    pub stars: u64,
    pub temp_cells: u64,
    /// Matrix products issued (naive or Strassen), regardless of size.
    pub products: u64,
}

impl OpCounter {
    pub fn new() -> Self {
        Self::default()
    }

    /// `⊕ + ⊗ + ⋆` applications.
    pub fn total_ops(&self) -> u64 {
        self.adds + self.muls + self.stars
    }
}

impl AddAssign for OpCounter {
    fn add_assign(&mut self, rhs: Self) {
        self.adds += rhs.adds;
        self.muls += rhs.muls;
        self.stars += rhs.stars;
        self.temp_cells += rhs.temp_cells;
        self.products += rhs.products;
    }
}
