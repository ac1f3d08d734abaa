//! Almost abelian classification with normal-form bases.

use evoalg::classify::{self, AlmostAbelian};
use evoalg::corpus;
use evoalg::report::kind_name;
use evoalg::{EvolutionAlgebra, FieldSpec};

fn main() {
    let q = FieldSpec::rational();
    let cases = [
        ("e1^2 = e1 + 2e2", EvolutionAlgebra::from_i64(q, &[&[1, 2], &[0, 0]])),
        ("E_{4,2}", corpus::e_n2(q, 4)),
        ("E_2(1,-1,0)", corpus::e_k(q, 2, &[1, -1, 0]).unwrap()),
        ("E_2(1,-1)", corpus::e_k(q, 2, &[1, -1]).unwrap()),
        ("E_2(1,-1) + E_2(1,-1)", corpus::e2_direct_sum(q, 2)),
    ];
    for (name, e) in cases {
        let v = classify::almost_abelian_classify(&e);
        println!("{name}: {}", kind_name(&v.kind));
        if let AlmostAbelian::AlmostBasicAbelian { basis, .. } = &v.kind {
            let rows: Vec<String> = basis.row_vectors().iter().map(|r| r.pretty()).collect();
            println!("  normal form basis [{}]", rows.join(", "));
        }
        println!("  dually atomistic: {:?}", classify::dually_atomistic_structural(&e));
    }
}
