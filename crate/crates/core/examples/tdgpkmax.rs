use rug::ops::Pow;
use rug::Float;
use tcompile_core::gridprob::{EpsilonRegion, TdgpStream};

fn main() {
    let digits: i32 = std::env::args().nth(1).map(|s| s.parse().unwrap()).unwrap_or(100);
    let kmax: u32 = std::env::args().nth(2).map(|s| s.parse().unwrap()).unwrap_or(300);
    let eps_f = Float::with_val(64, 10f64).pow(-digits);
    let prec = tcompile_core::bits_for_epsilon(&eps_f);
    let theta = Float::with_val(prec, 1.2345678901234567);
    let eps = Float::with_val(prec, 10f64).pow(-digits);
    let region = EpsilonRegion::new(theta, eps, prec);
    let t0 = std::time::Instant::now();
    let mut stream = TdgpStream::new(region, kmax);
    let first = stream.next();
    println!(
        "kmax={} got={:?} nodes={} t={:.2}s",
        kmax,
        first.map(|u| u.lde()),
        stream.nodes_visited,
        t0.elapsed().as_secs_f64()
    );
}
