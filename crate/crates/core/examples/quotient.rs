//! Quotient by an ideal with the induced projection.

use evoalg::corpus;
use evoalg::{FieldSpec, Vector};

fn main() {
    let q = FieldSpec::rational();
    let e = corpus::eight_dim(q);
    let ideal = e.ideal_generated(&e.span_i64(&[&[0, 0, 0, 0, 1, 1, 0, 0]]));
    println!("I = {}", ideal.pretty());
    let quotient = e.quotient(&ideal).unwrap();
    let kept: Vec<String> = quotient.kept_indices.iter().map(|i| format!("e{}", i + 1)).collect();
    println!("E/I has basis the images of {}", kept.join(", "));
    for i in 0..quotient.algebra.dim() {
        println!("  f{}^2 = {}", i + 1, quotient.algebra.square_of_basis(i).pretty());
    }
    let u = Vector::from_i64(q, &[1, 0, 0, 0, 1, 0, 0, 0]);
    println!("image of {} is {}", u.pretty(), quotient.project(&u).pretty());
}
