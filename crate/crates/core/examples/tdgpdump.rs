use rug::ops::Pow;
use rug::Float;
use tcompile_core::gridprob::{EpsilonRegion, TdgpStream};

fn main() {
    let digits: i32 = std::env::args().nth(1).map(|s| s.parse().unwrap()).unwrap_or(100);
    let eps_f = Float::with_val(64, 10f64).pow(-digits);
    let prec = tcompile_core::bits_for_epsilon(&eps_f);
    println!("prec={} digits={}", prec, tcompile_core::digits_for_epsilon(&eps_f));
    let theta = Float::with_val(prec, 1.2345678901234567);
    let eps = Float::with_val(prec, 10f64).pow(-digits);
    let region = EpsilonRegion::new(theta.clone(), eps.clone(), prec);
    println!("c = 1 - {:e}", (Float::with_val(prec, 1) - &region.c).to_f64());
    let ell = region.enclosing_ellipse();
    println!("D00={:e} D01={:e} D11={:e}", ell.d[0][0].to_f64(), ell.d[0][1].to_f64(), ell.d[1][1].to_f64());
    let t0 = std::time::Instant::now();
    let stream = TdgpStream::new(region, 4);
    println!("stream built {:.2}s", t0.elapsed().as_secs_f64());
    stream.debug_dump();
}
