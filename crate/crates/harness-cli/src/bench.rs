use anyhow::{bail, Context, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rotation_core::{
    rotate_block_cycle, rotate_block_swap, rotate_dolphin, rotate_triple_reverse, rotate_trinity,
    BlockCycleConfig, MoveLedger, RotationProblem,
};
use std::io::Write;
use std::path::Path;
use std::time::Instant;

/// Shift generator seed; printed into the CSV header so runs are
/// reproducible. Timings vary, sizes and shifts do not.
pub const SHIFT_SEED: u64 = 0x1bd9_1c2c_7a0a_5c55;

const WARMUP_ROUNDS: usize = 2;
const TIMED_ROUNDS: usize = 5;

/// Bench-grade defaults: a 256-element early-exit buffer and 32-byte
/// batches.
fn bench_config(elem_bytes: usize) -> BlockCycleConfig {
    let batch = (32 / elem_bytes).max(1);
    BlockCycleConfig::new(256, batch).expect("nonzero capacities")
}

trait Candidate<T: Copy> {
    fn name(&self) -> &'static str;
    fn run(&self, seq: &mut [T], k: usize);
}

struct BlockCycle(BlockCycleConfig);
struct BlockSwap;
struct TripleReverse;
struct Trinity(BlockCycleConfig);
struct Dolphin;
struct StdRotate;

impl<T: Copy> Candidate<T> for BlockCycle {
    fn name(&self) -> &'static str {
        "block_cycle"
    }
    fn run(&self, seq: &mut [T], k: usize) {
        rotate_block_cycle(seq, k, &self.0, &mut MoveLedger::new()).unwrap();
    }
}

impl<T: Copy> Candidate<T> for BlockSwap {
    fn name(&self) -> &'static str {
        "block_swap"
    }
    fn run(&self, seq: &mut [T], k: usize) {
        rotate_block_swap(seq, k, &mut MoveLedger::new()).unwrap();
    }
}

impl<T: Copy> Candidate<T> for TripleReverse {
    fn name(&self) -> &'static str {
        "triple_reverse"
    }
    fn run(&self, seq: &mut [T], k: usize) {
        rotate_triple_reverse(seq, k, &mut MoveLedger::new()).unwrap();
    }
}

impl<T: Copy> Candidate<T> for Trinity {
    fn name(&self) -> &'static str {
        if self.0.early_exit_capacity() > 1 {
            "trinity_buffered"
        } else {
            "trinity"
        }
    }
    fn run(&self, seq: &mut [T], k: usize) {
        rotate_trinity(seq, k, &self.0, &mut MoveLedger::new()).unwrap();
    }
}

impl<T: Copy> Candidate<T> for Dolphin {
    fn name(&self) -> &'static str {
        "dolphin"
    }
    fn run(&self, seq: &mut [T], k: usize) {
        if k > 0 && k < seq.len() {
            rotate_dolphin(seq, k, &mut MoveLedger::new()).unwrap();
        }
    }
}

impl<T: Copy> Candidate<T> for StdRotate {
    fn name(&self) -> &'static str {
        "std_rotate"
    }
    fn run(&self, seq: &mut [T], k: usize) {
        seq.rotate_left(k);
    }
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    xs[xs.len() / 2]
}

fn time_one<T: Copy>(candidate: &dyn Candidate<T>, case: &RotationProblem<T>) -> f64 {
    let bytes = std::mem::size_of_val(case.seq());
    let mut scratch = case.seq().to_vec();
    for _ in 0..WARMUP_ROUNDS {
        scratch.copy_from_slice(case.seq());
        candidate.run(&mut scratch, case.shift());
    }
    let mut times = Vec::with_capacity(TIMED_ROUNDS);
    for _ in 0..TIMED_ROUNDS {
        scratch.copy_from_slice(case.seq());
        let start = Instant::now();
        candidate.run(&mut scratch, case.shift());
        let elapsed = start.elapsed();
        times.push(elapsed.as_secs_f64() * 1e9 / bytes as f64);
    }
    median(times)
}

fn bench_width<const W: usize>(max_bytes: usize, out: &mut String) {
    let config = bench_config(W);
    let candidates: Vec<Box<dyn Candidate<[u8; W]>>> = vec![
        Box::new(BlockCycle(config)),
        Box::new(BlockSwap),
        Box::new(TripleReverse),
        Box::new(Trinity(BlockCycleConfig::UNIT)),
        Box::new(Trinity(config)),
        Box::new(Dolphin),
        Box::new(StdRotate),
    ];

    let mut rng = ChaCha8Rng::seed_from_u64(SHIFT_SEED);
    let mut bytes = 1024usize;
    while bytes <= max_bytes {
        let n = bytes / W;
        if n >= 4 {
            let k = rng.random_range(1..n);
            let seq: Vec<[u8; W]> = (0..n).map(|i| [(i % 251) as u8; W]).collect();
            let case = RotationProblem::new(seq, k).expect("k < n");
            for c in &candidates {
                let ns_per_byte = time_one(c.as_ref(), &case);
                out.push_str(&format!("{},{:.4},{}\n", bytes, ns_per_byte, c.name()));
            }
        }
        bytes *= 4;
    }
}

/// Runs the ladder for one element width and writes the CSV.
pub fn run_bench(elem_bytes: usize, max_bytes: usize, path: &Path) -> Result<()> {
    let mut body = String::new();
    body.push_str(&format!(
        "# shifts drawn uniformly per size from chacha8 seed {SHIFT_SEED:#018x}; \
         median of {TIMED_ROUNDS} rounds after {WARMUP_ROUNDS} warmups\n"
    ));
    body.push_str("bytes,ns_per_byte,algorithm\n");
    match elem_bytes {
        1 => bench_width::<1>(max_bytes, &mut body),
        2 => bench_width::<2>(max_bytes, &mut body),
        4 => bench_width::<4>(max_bytes, &mut body),
        8 => bench_width::<8>(max_bytes, &mut body),
        16 => bench_width::<16>(max_bytes, &mut body),
        other => bail!("unsupported element width {other}; pick one of 1, 2, 4, 8, 16"),
    }
    let mut file =
        std::fs::File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
    file.write_all(body.as_bytes())
        .with_context(|| format!("cannot write {}", path.display()))?;
    Ok(())
}
