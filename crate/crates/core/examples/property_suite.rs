//! The randomized property suite, as run by `evoalg verify`.

use evoalg::enumerate::Budget;
use evoalg::verify::{self, VerifyConfig};
use evoalg::FieldSpec;

fn main() {
    let config = VerifyConfig {
        dim: 3,
        field: FieldSpec::prime(3).unwrap(),
        samples: 100,
        seed: 42,
        budget: Budget::default(),
    };
    let report = verify::run(&config).unwrap();
    print!("{report}");
    assert!(report.passed());
}
