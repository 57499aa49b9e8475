use nalgebra::{Cholesky, DMatrix};
type C64 = nalgebra::Complex<f64>;
fn main() {
    // negative definite
    let m = DMatrix::from_diagonal_element(3, 3, C64::new(-5.0, 0.0));
    println!("neg: {:?}", Cholesky::new(m).is_some());
    // indefinite
    let mut m2 = DMatrix::from_diagonal_element(3, 3, C64::new(1.0, 0.0));
    m2[(2, 2)] = C64::new(-1e9, 0.0);
    println!("indef: {:?}", Cholesky::new(m2).is_some());
    // PSD-singular
    let m3 = DMatrix::from_diagonal_element(3, 3, C64::new(0.0, 0.0));
    println!("zero: {:?}", Cholesky::new(m3).is_some());
}
