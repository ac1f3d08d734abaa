//! Recover the canonical form `E_k(λ)` of a disguised algebra and read off
//! its nilradical and Frattini subalgebra.

use evoalg::corpus;
use evoalg::tk;
use evoalg::FieldSpec;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let e = corpus::random_tk(&mut rng, FieldSpec::rational(), 5);
    for i in 0..e.dim() {
        println!("e{}^2 = {}", i + 1, e.square_of_basis(i).pretty());
    }
    let form = tk::canonicalize_tk(&e).unwrap();
    let lambdas: Vec<String> = form.lambdas.iter().map(|l| l.to_string()).collect();
    println!("k = {}, lambdas = ({})", form.k, lambdas.join(", "));
    for (i, f) in form.canonical_basis.row_vectors().iter().enumerate() {
        println!("f{} = {}", i + 1, f.pretty());
    }
    println!("nil(E) = {}", tk::tk_nilradical(&e).unwrap().pretty());
    println!("ann_E(E^2) = {}", tk::ann_of_derived(&e).pretty());
    let (f, phi) = tk::tk_frattini(&e).unwrap();
    println!("F(E) = {}, phi(E) = {}", f.pretty(), phi.pretty());
}
