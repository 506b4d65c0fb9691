//! Counter measurements of the block star.

use std::io::Write;
use std::time::Instant;

use crate::error::Result;
use crate::matrix::{star_block_with, BlockStarOptions, Matrix, OpCounter};
use crate::random::{InstanceGen, RandomValue};
use crate::semiring::SemiringKind;

pub const CSV_HEADER: [&str; 6] = ["n", "adds", "muls", "stars", "temp_cells", "wall_time"];

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub n: usize,
    pub semiring: SemiringKind,
    pub adds: u64,
    pub muls: u64,
    pub stars: u64,
    pub temp_cells: u64,
    /// Seconds.
    pub wall_time: f64,
}

/// Input for a star benchmark of size `n`. Where arbitrary matrices may lack
/// a star (`nat`, `rational`) a strictly upper-triangular one is drawn.
/// Counters do not depend on the entries.
pub fn bench_input<S: RandomValue>(gen: &mut InstanceGen, n: usize) -> Matrix<S> {
    match S::KIND {
        SemiringKind::Nat | SemiringKind::Rational => gen.strictly_upper(n),
        _ => gen.matrix(n, n),
    }
}

/// One record per size and trial.
pub fn bench_star<S: RandomValue>(
    sizes: &[usize],
    trials: usize,
    seed: u64,
    options: BlockStarOptions,
) -> Result<Vec<BenchRecord>> {
    let mut gen = InstanceGen::seeded(seed);
    let mut records = Vec::with_capacity(sizes.len() * trials);
    for &n in sizes {
        for _ in 0..trials {
            let m = bench_input::<S>(&mut gen, n);
            let mut ctr = OpCounter::new();
            let start = Instant::now();
            star_block_with(&m, options, &mut ctr)?;
            let wall_time = start.elapsed().as_secs_f64();
            records.push(BenchRecord {
                n,
                semiring: S::KIND,
                adds: ctr.adds,
                muls: ctr.muls,
                stars: ctr.stars,
                temp_cells: ctr.temp_cells,
                wall_time,
            });
        }
    }
    Ok(records)
}

pub fn write_csv<W: Write>(records: &[BenchRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.write_record([
            r.n.to_string(),
            r.adds.to_string(),
            r.muls.to_string(),
            r.stars.to_string(),
            r.temp_cells.to_string(),
            format!("{:.9}", r.wall_time),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::{Bool, Rational};

    #[test]
    fn counters_are_deterministic_and_value_independent() {
        let a = bench_star::<Bool>(&[1, 2, 4, 5], 2, 11, BlockStarOptions::default()).unwrap();
        let b = bench_star::<Rational>(&[1, 2, 4, 5], 1, 99, BlockStarOptions::default()).unwrap();
        let counts = |r: &BenchRecord| (r.n, r.adds, r.muls, r.stars, r.temp_cells);
        assert_eq!(counts(&a[0]), (1, 0, 0, 1, 1));
        assert_eq!(counts(&a[2]), (2, 2, 8, 4, 28));
        for (x, y) in a.chunks(2).zip(&b) {
            assert_eq!(counts(&x[0]), counts(&x[1]));
            assert_eq!(counts(&x[0]), counts(y));
        }
    }

    #[test]
    fn csv_layout() {
        let records = bench_star::<Bool>(&[2], 1, 0, BlockStarOptions::default()).unwrap();
        let mut buf = Vec::new();
        write_csv(&records, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("n,adds,muls,stars,temp_cells,wall_time"));
        assert!(lines.next().unwrap().starts_with("2,2,8,4,28,"));
    }
}
