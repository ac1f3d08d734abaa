//! Two distinct maximal nilpotent ideals, so no nilradical exists and
//! `snil` is zero.

use evoalg::corpus;
use evoalg::enumerate::Budget;
use evoalg::radicals::{self, NilradicalVerdict};
use evoalg::supersolvable;
use evoalg::FieldSpec;

fn main() {
    let e = corpus::two_maximal_nilpotent(FieldSpec::prime(5).unwrap());
    let n1 = e.span_i64(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 1]]);
    let n2 = e.span_i64(&[&[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 1, 0, 0]]);
    for n in [&n1, &n2] {
        println!("{} ideal={} nilpotent={}", n.pretty(), e.is_ideal(n), e.is_nilpotent(n).unwrap());
    }
    let sum = n1.sum(&n2);
    println!("sum {} nilpotent={}", sum.pretty(), e.is_nilpotent(&sum).unwrap());
    println!("snil = {}", radicals::snil(&e).pretty());
    match radicals::nilradical_if_exists(&e, &Budget::default()) {
        NilradicalVerdict::NotMaximal { witness, .. } => println!("larger nilpotent ideal: {}", witness.pretty()),
        other => println!("{other:?}"),
    }
    println!("supersolvable: {}", supersolvable::is_supersolvable(&e).is_supersolvable());
}
