use rug::ops::Pow;
use rug::Float;
use tcompile_core::gridprob::{EpsilonRegion, TdgpStream};
use tcompile_core::zrot::{gridsynth, GridsynthOptions};

fn main() {
    let which = std::env::args().nth(1).unwrap_or_else(|| "full".into());
    let digits: i32 = std::env::args().nth(2).map(|s| s.parse().unwrap()).unwrap_or(100);
    let eps_f = Float::with_val(64, 10f64).pow(-digits);
    let prec = tcompile_core::bits_for_epsilon(&eps_f);
    let theta = Float::with_val(prec, 1.2345678901234567);
    let eps = Float::with_val(prec, 10f64).pow(-digits);
    let t0 = std::time::Instant::now();
    if which == "tdgp" {
        // Just enumerate the first few grid candidates with progress.
        let region = EpsilonRegion::new(theta.clone(), eps.clone(), prec);
        let mut stream = TdgpStream::new(region, u32::MAX);
        for (i, u) in stream.by_ref().take(5).enumerate() {
            println!("cand {} k={} t={:.2}s", i, u.lde(), t0.elapsed().as_secs_f64());
        }
    } else {
        let out = gridsynth(&theta, &eps, &GridsynthOptions::default()).unwrap();
        println!(
            "t_count={} k={} err_ok={} candidates={} abandoned={} time={:.2}s",
            out.t_count,
            out.k,
            out.error <= eps,
            out.stats.candidates_tried,
            out.stats.dioph_abandoned,
            t0.elapsed().as_secs_f64()
        );
    }
}
