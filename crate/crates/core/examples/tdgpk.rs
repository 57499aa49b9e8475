use rug::ops::Pow;
use rug::Float;
use tcompile_core::gridprob::{EpsilonRegion, TdgpStream};

fn main() {
    let digits: i32 = std::env::args().nth(1).map(|s| s.parse().unwrap()).unwrap_or(100);
    let eps_f = Float::with_val(64, 10f64).pow(-digits);
    let prec = tcompile_core::bits_for_epsilon(&eps_f);
    let theta = Float::with_val(prec, 1.2345678901234567);
    let eps = Float::with_val(prec, 10f64).pow(-digits);
    let t0 = std::time::Instant::now();
    let region = EpsilonRegion::new(theta.clone(), eps.clone(), prec);
    let mut stream = TdgpStream::new(region, u32::MAX);
    println!("setup: {:.2}s (lattice reduction done)", t0.elapsed().as_secs_f64());
    // advance k manually to see per-k cost
    let mut count = 0;
    while count < 3 {
        let before = t0.elapsed().as_secs_f64();
        if let Some(u) = stream.next() {
            count += 1;
            println!(
                "cand {} k={} nodes={} dt~{:.3}s total={:.2}s",
                count,
                u.lde(),
                stream.nodes_visited,
                t0.elapsed().as_secs_f64() - before,
                t0.elapsed().as_secs_f64()
            );
        } else {
            break;
        }
    }
}
