use ndarray::Array2;
use std::time::Instant;

fn gflops(m: usize, k: usize, n: usize, reps: usize) -> f64 {
    let a = Array2::<f32>::from_elem((m, k), 1.001);
    let b = Array2::<f32>::from_elem((k, n), 0.999);
    let mut acc = 0.0f32;
    let t = Instant::now();
    for _ in 0..reps {
        let c = a.dot(&b);
        acc += c[[0, 0]];
    }
    let dt = t.elapsed().as_secs_f64();
    std::hint::black_box(acc);
    (2.0 * m as f64 * k as f64 * n as f64 * reps as f64) / dt / 1e9
}

fn main() {
    println!("conv-like  (2560x200)@(200x40):  {:.2} Gflops/s", gflops(2560, 200, 40, 200));
    println!("lstm-like  (256x40)@(40x160):    {:.2} Gflops/s", gflops(256, 40, 160, 2000));
    println!("sim-like   (256x400)@(400x256):  {:.2} Gflops/s", gflops(256, 400, 256, 100));
    println!("fuse-like  (2560x160)@(160x40):  {:.2} Gflops/s", gflops(2560, 160, 40, 200));
}
