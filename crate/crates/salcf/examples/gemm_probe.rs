use ndarray::Array2;
use std::time::Instant;

fn bench_f32(m: usize, k: usize, n: usize, reps: usize) -> f64 {
    let a = Array2::<f32>::from_elem((m, k), 1.01);
    let b = Array2::<f32>::from_elem((k, n), 0.99);
    let t = Instant::now();
    let mut acc = 0.0f32;
    for _ in 0..reps {
        let c = a.dot(&b);
        acc += c[[0, 0]];
    }
    let dt = t.elapsed().as_secs_f64();
    std::hint::black_box(acc);
    (2.0 * m as f64 * k as f64 * n as f64 * reps as f64) / dt / 1e9
}

fn bench_f64(m: usize, k: usize, n: usize, reps: usize) -> f64 {
    let a = Array2::<f64>::from_elem((m, k), 1.01);
    let b = Array2::<f64>::from_elem((k, n), 0.99);
    let t = Instant::now();
    let mut acc = 0.0f64;
    for _ in 0..reps {
        let c = a.dot(&b);
        acc += c[[0, 0]];
    }
    let dt = t.elapsed().as_secs_f64();
    std::hint::black_box(acc);
    (2.0 * m as f64 * k as f64 * n as f64 * reps as f64) / dt / 1e9
}

fn main() {
    // conv-typical shapes: W2 [O, I*k*k] x col [I*k*k, Ho*Wo]
    for &(m, k, n) in &[(24usize, 108usize, 1024usize), (48, 216, 256), (12, 54, 4096), (64, 576, 64), (256, 256, 256)] {
        let reps = (200_000_000 / (m * k * n)).max(3);
        println!("f32 {}x{}x{}: {:.2} GFLOP/s", m, k, n, bench_f32(m, k, n, reps));
        println!("f64 {}x{}x{}: {:.2} GFLOP/s", m, k, n, bench_f64(m, k, n, reps));
    }
}
