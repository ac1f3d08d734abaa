//! A complete flag of ideals witnessing supersolvability.

use evoalg::corpus;
use evoalg::supersolvable::{self, Supersolvability};
use evoalg::FieldSpec;

fn main() {
    let q = FieldSpec::rational();
    for (name, e) in [
        ("E_3(1,1,-2,0)", corpus::e_k(q, 3, &[1, 1, -2, 0]).unwrap()),
        ("two maximal nilpotent ideals", corpus::two_maximal_nilpotent(FieldSpec::prime(5).unwrap())),
    ] {
        match supersolvable::is_supersolvable(&e) {
            Supersolvability::Supersolvable(flag) => {
                println!("{name}: supersolvable");
                for f in flag {
                    println!("  {}", f.pretty());
                }
            }
            other => println!("{name}: {other:?}"),
        }
    }
}
