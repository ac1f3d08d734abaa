//! φ-freeness when the supersolvable nilradical has full support, with the
//! splitting `E = K ⊕ ann(E)`.

use evoalg::corpus;
use evoalg::frattini;
use evoalg::{EvolutionAlgebra, FieldSpec};

fn main() {
    let q = FieldSpec::rational();
    let with_ann = corpus::e2_direct_sum(q, 2)
        .direct_sum(&EvolutionAlgebra::abelian(q, 1))
        .unwrap();
    for (name, e) in [
        ("E_2(1,-1) + E_2(1,-1) + K", with_ann),
        ("E_3(1,1,-2)", corpus::e_k(q, 3, &[1, 1, -2]).unwrap()),
        ("eight-dimensional example", corpus::eight_dim(q)),
    ] {
        let v = frattini::phi_free_full_support(&e).unwrap();
        println!("{name}: applicable {}, phi-free {:?}", v.applicable, v.phi_free);
        if let Some(d) = v.decomposition {
            println!("  m = {}, K = {}, ann = {}", d.m, d.k.pretty(), d.ann.pretty());
        }
    }
}
