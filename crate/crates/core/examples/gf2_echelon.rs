//! Rank, kernel and quotient representatives over F₂.
//!
//!     cargo run --example gf2_echelon

use slice_ss::gf2::{coset_reduce, image_basis, kernel_basis, rank, Gf2Matrix, Gf2Vector};

fn main() -> slice_ss::Result<()> {
    let m = Gf2Matrix::from_bit_strs(4, &["1100", "0110", "1010"])?;
    println!("rank {}", rank(&m));
    for k in kernel_basis(&m) {
        println!("kernel: {k}");
    }
    let image = image_basis(&m);
    for v in &image {
        println!("image:  {v}");
    }
    let v = Gf2Vector::from_bit_str("111");
    println!("{v} mod image = {}", coset_reduce(&v, &image)?);
    Ok(())
}
