//! The supersolvable nilpotent series of the eight-dimensional example,
//! with the certificates recorded at each step.

use evoalg::corpus;
use evoalg::radicals;
use evoalg::FieldSpec;

fn main() {
    let e = corpus::eight_dim(FieldSpec::rational());
    let series = radicals::sn_series(&e);
    for (i, step) in series.steps.iter().enumerate() {
        println!("N^{} = {}", i + 1, step.term.pretty());
        let gamma: Vec<String> = step.gamma.iter().map(|k| format!("e{}", k + 1)).collect();
        println!("  annihilated modulo previous term: [{}]", gamma.join(", "));
        for r in &step.records {
            println!("  class w = {}, lift = {}", r.w.pretty(), r.lift.pretty());
        }
    }
    println!("snil = {}", series.last().pretty());
    println!("bnil = {}", radicals::basic_nilradical(&e).pretty());
    println!("asoc1 = {}", radicals::asoc1(&e).pretty());
    for f in series.flag(&e) {
        println!("  flag: {}", f.pretty());
    }
}
