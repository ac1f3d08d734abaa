//! Named algebras used throughout the tests, examples and the `examples` CLI
//! command, plus seeded random generators.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::EvolutionAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::scalar::{FieldSpec, Scalar};

/// `e1^2 = -e2^2 = e3 + e4`, `e3^2 = -e4^2 = e1 + e2`: two distinct maximal
/// nilpotent ideals whose sum is not nilpotent.
pub fn two_maximal_nilpotent(field: FieldSpec) -> EvolutionAlgebra {
    EvolutionAlgebra::from_i64(
        field,
        &[&[0, 0, 1, 1], &[0, 0, -1, -1], &[1, 1, 0, 0], &[-1, -1, 0, 0]],
    )
}

/// Eight-dimensional algebra whose supersolvable series stops after two steps.
pub fn eight_dim(field: FieldSpec) -> EvolutionAlgebra {
    EvolutionAlgebra::from_i64(
        field,
        &[
            &[1, 1, 1, 0, 0, 0, 0, 0],
            &[1, 1, 1, 0, 0, 0, 0, 0],
            &[-2, -2, -2, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0, 0, 0],
            &[1, -1, 0, 0, 1, 1, 0, 0],
            &[4, 0, 2, 0, -1, -1, 0, 0],
            &[1, 1, 1, 0, 0, 0, 1, 1],
            &[0, 0, 0, 0, 0, 0, -1, -1],
        ],
    )
}

/// `e1^2 = -e2^2 = e1+e2+e3+e4`, `e3^2 = -e4^2 = e1+e2`: a unique maximal
/// nilpotent ideal but no one-dimensional abelian ideal.
pub fn nil_ne_snil(field: FieldSpec) -> EvolutionAlgebra {
    EvolutionAlgebra::from_i64(
        field,
        &[&[1, 1, 1, 1], &[-1, -1, -1, -1], &[1, 1, 0, 0], &[-1, -1, 0, 0]],
    )
}

/// Five-dimensional algebra with `snil = span{e1+e2, e3, e4+e5}` and
/// `snil^2 = span{e1+e2}` not an ideal.
pub fn snil_square_not_ideal(field: FieldSpec) -> EvolutionAlgebra {
    EvolutionAlgebra::from_i64(
        field,
        &[
            &[1, 1, 1, 0, 0],
            &[-1, -1, -1, 0, 0],
            &[0, 0, 0, 0, 0],
            &[1, 1, 1, 1, 1],
            &[0, 0, -1, -1, -1],
        ],
    )
}

/// `e1^2 = -e2^2 = e1 + e2`, `e3^2 = e2`: both necessary conditions for
/// φ-freeness hold, yet `φ(E) = span{e1, e2}`.
pub fn phi_nonzero(field: FieldSpec) -> EvolutionAlgebra {
    EvolutionAlgebra::from_i64(field, &[&[1, 1, 0], &[-1, -1, 0], &[0, 1, 0]])
}

/// `e1^2 = e1`, `e2^2 = e2`, `e3^2 = ¼e1 + ¼e2 + e3`. Over `F_p` the quarter is
/// the field inverse of 4.
pub fn dually_atomistic_example(field: FieldSpec) -> EvolutionAlgebra {
    let quarter = field.ratio(1, 4).expect("4 is invertible when char != 2");
    let mut m = Matrix::identity(field, 3);
    m.set(2, 0, quarter.clone());
    m.set(2, 1, quarter);
    EvolutionAlgebra::new(m).expect("square")
}

/// `E_k(λ_1, …, λ_n)`: `e_i^2 = λ_i (e_1 + ⋯ + e_k)`. Requires `1 ≤ k ≤ n`,
/// `λ` not all zero and `λ_1 + ⋯ + λ_k = 0`.
pub fn e_k_scalars(field: FieldSpec, k: usize, lambdas: &[Scalar]) -> Result<EvolutionAlgebra> {
    let n = lambdas.len();
    if k == 0 || k > n {
        return Err(Error::Format(format!("need 1 <= k <= n, got k = {k}, n = {n}")));
    }
    if lambdas.iter().any(|l| l.field() != field) {
        return Err(Error::MixedFields);
    }
    if lambdas.iter().all(Scalar::is_zero) {
        return Err(Error::Format("parameters are all zero".into()));
    }
    let head = lambdas[..k].iter().fold(field.zero(), |acc, l| &acc + l);
    if !head.is_zero() {
        return Err(Error::Format(format!("first {k} parameters sum to {head}, not 0")));
    }
    let mut m = Matrix::zeros(field, n, n);
    for (i, l) in lambdas.iter().enumerate() {
        for j in 0..k {
            m.set(i, j, l.clone());
        }
    }
    EvolutionAlgebra::new(m)
}

pub fn e_k(field: FieldSpec, k: usize, lambdas: &[i64]) -> Result<EvolutionAlgebra> {
    let ls: Vec<Scalar> = lambdas.iter().map(|&l| field.from_i64(l)).collect();
    e_k_scalars(field, k, &ls)
}

/// `E_{n,1}`: `e1^2 = e1`, all other squares zero.
pub fn e_n1(field: FieldSpec, n: usize) -> EvolutionAlgebra {
    let mut m = Matrix::zeros(field, n, n);
    if n > 0 {
        m.set(0, 0, field.one());
    }
    EvolutionAlgebra::new(m).expect("square")
}

/// `E_{n,2}`: `e1^2 = e2`, all other squares zero. Needs `n ≥ 2`.
pub fn e_n2(field: FieldSpec, n: usize) -> EvolutionAlgebra {
    assert!(n >= 2, "E_{{n,2}} needs n >= 2");
    let mut m = Matrix::zeros(field, n, n);
    m.set(0, 1, field.one());
    EvolutionAlgebra::new(m).expect("square")
}

/// `m` copies of `E_2(1,-1)`.
pub fn e2_direct_sum(field: FieldSpec, m: usize) -> EvolutionAlgebra {
    let block = e_k(field, 2, &[1, -1]).expect("valid parameters");
    let mut acc = EvolutionAlgebra::abelian(field, 0);
    for _ in 0..m {
        acc = acc.direct_sum(&block).expect("same field");
    }
    acc
}

/// Names accepted by [`by_name`].
pub const NAMES: &[&str] = &[
    "ex3_two_maximal_nilradicals",
    "ex3_2_eightdim",
    "ex_nil_ne_snil",
    "ex4_snil_sq_not_ideal",
    "ex4_phi_nonzero",
    "ex5_dually_atomistic",
    "ek",
    "e_n1",
    "e_n2",
    "e2m_direct_sum",
];

/// Parameters for the parametrised corpus entries.
#[derive(Debug, Clone, Default)]
pub struct CorpusParams {
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub m: Option<usize>,
    pub lambdas: Vec<String>,
}

pub fn by_name(name: &str, field: FieldSpec, params: &CorpusParams) -> Result<EvolutionAlgebra> {
    let need = |v: Option<usize>, what: &str| v.ok_or_else(|| Error::Format(format!("{name} needs --{what}")));
    match name {
        "ex3_two_maximal_nilradicals" => Ok(two_maximal_nilpotent(field)),
        "ex3_2_eightdim" => Ok(eight_dim(field)),
        "ex_nil_ne_snil" => Ok(nil_ne_snil(field)),
        "ex4_snil_sq_not_ideal" => Ok(snil_square_not_ideal(field)),
        "ex4_phi_nonzero" => Ok(phi_nonzero(field)),
        "ex5_dually_atomistic" => Ok(dually_atomistic_example(field)),
        "ek" => {
            let k = need(params.k, "k")?;
            let ls: Result<Vec<Scalar>> = params.lambdas.iter().map(|t| field.parse(t)).collect();
            e_k_scalars(field, k, &ls?)
        }
        "e_n1" => Ok(e_n1(field, need(params.n, "n")?.max(1))),
        "e_n2" => {
            let n = need(params.n, "n")?;
            if n < 2 {
                return Err(Error::Format("e_n2 needs n >= 2".into()));
            }
            Ok(e_n2(field, n))
        }
        "e2m_direct_sum" => Ok(e2_direct_sum(field, need(params.m, "m")?.max(1))),
        other => Err(Error::UnknownExample(other.to_string())),
    }
}

fn random_scalar<R: Rng>(rng: &mut R, field: FieldSpec) -> Scalar {
    match field.modulus() {
        Some(p) => field.from_i64(rng.gen_range(0..p) as i64),
        None => field.from_i64(rng.gen_range(-3..=3)),
    }
}

fn random_nonzero<R: Rng>(rng: &mut R, field: FieldSpec) -> Scalar {
    loop {
        let s = match field.modulus() {
            Some(_) => random_scalar(rng, field),
            None => {
                let num = rng.gen_range(-3i64..=3);
                let den = rng.gen_range(1i64..=2);
                field.ratio(num, den).expect("nonzero denominator")
            }
        };
        if !s.is_zero() {
            return s;
        }
    }
}

/// Uniform structure matrix over `F_p`; over `Q` entries are integers in
/// `[-3, 3]`.
pub fn random_algebra<R: Rng>(rng: &mut R, field: FieldSpec, n: usize) -> EvolutionAlgebra {
    let mut m = Matrix::zeros(field, n, n);
    for r in 0..n {
        for c in 0..n {
            m.set(r, c, random_scalar(rng, field));
        }
    }
    EvolutionAlgebra::new(m).expect("square")
}

/// A random member of `E_k(λ)` form (solvable, non-nilpotent, one-dimensional
/// derived subalgebra), disguised by a random permutation and rescaling of the
/// natural basis. Needs `n ≥ 2`.
pub fn random_tk<R: Rng>(rng: &mut R, field: FieldSpec, n: usize) -> EvolutionAlgebra {
    assert!(n >= 2, "T_K members have dimension at least 2");
    loop {
        let k = rng.gen_range(2..=n);
        let mut lambdas: Vec<Scalar> = (0..n).map(|_| random_scalar(rng, field)).collect();
        // force the head sum to zero through the last head entry
        let partial = lambdas[..k - 1].iter().fold(field.zero(), |acc, l| &acc + l);
        lambdas[k - 1] = -partial;
        if lambdas[..k].iter().all(Scalar::is_zero) {
            continue;
        }
        let base = e_k_scalars(field, k, &lambdas).expect("head sums to zero");
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        let rows: Vec<Vector> = perm
            .iter()
            .map(|&p| Vector::unit(field, n, p).scale(&random_nonzero(rng, field)))
            .collect();
        let basis = Matrix::from_rows(field, n, &rows).expect("square");
        let algebra = base.change_basis(&basis).expect("monomial change is a natural basis");
        debug_assert!(crate::tk::detect_tk(&algebra));
        return algebra;
    }
}
