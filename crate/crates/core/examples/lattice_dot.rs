//! Hasse diagram of the subalgebra lattice in DOT format.
//!
//! `cargo run --example lattice_dot | dot -Tsvg > lattice.svg`

use evoalg::corpus;
use evoalg::enumerate::Budget;
use evoalg::frattini;
use evoalg::FieldSpec;

fn main() {
    let e = corpus::dually_atomistic_example(FieldSpec::prime(5).unwrap());
    let lattice = frattini::subalgebra_lattice(&e, &Budget::default()).unwrap();
    eprintln!("dually atomistic: {}", lattice.is_dually_atomistic());
    print!("{}", frattini::lattice_to_dot(&lattice));
}
