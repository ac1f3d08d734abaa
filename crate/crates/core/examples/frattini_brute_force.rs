//! Frattini subalgebra and ideal by enumerating all subalgebras over F_5,
//! next to the necessary conditions for being φ-free.

use evoalg::corpus;
use evoalg::enumerate::Budget;
use evoalg::frattini;
use evoalg::FieldSpec;

fn main() {
    let e = corpus::phi_nonzero(FieldSpec::prime(5).unwrap());
    let budget = Budget::default();
    for s in frattini::subalgebras(&e, &budget).unwrap() {
        println!("subalgebra {}", s.pretty());
    }
    let data = frattini::frattini(&e, &budget).unwrap();
    println!("F(E) = {}", data.f.pretty());
    println!("phi(E) = {}", data.phi.pretty());
    let c = frattini::phi_free_necessary(&e);
    println!("bnil = ann: {}, snil = asoc1: {:?}", c.bnil_eq_ann, c.snil_eq_asoc1);
}
