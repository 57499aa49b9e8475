use tcompile_core::chanmetrics::{choi_of_unitary, dnorm_sdp, dnorm_unitary_pair};
use tcompile_core::mpnum::haar_random_unitary;
use rand::SeedableRng;

fn main() {
    let prec = 128;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(77);
    let u = haar_random_unitary(2, prec, &mut rng);
    let v = haar_random_unitary(2, prec, &mut rng);
    let closed = dnorm_unitary_pair(&u, &v).unwrap().to_f64();
    let jd = choi_of_unitary(&u).sub(&choi_of_unitary(&v));
    println!("closed = {}", closed);
    match dnorm_sdp(&jd) {
        Ok(s) => println!("sdp = {}", s),
        Err(e) => println!("sdp err: {}", e),
    }
}
