//! Thom polynomials of the corank-one Thom-Boardman loci `Sigma^{1^k}`,
//! written in the virtual Chern classes `cbar_i`.

use crate::error::EngineError;
use crate::poly::GradedClass;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ThomProfile {
    k: u32,
}

/// One term `coeff * cbar_1^a1 cbar_2^a2 ...`, exponents indexed from `cbar_1`.
pub type ThomTerm = (i64, &'static [u32]);

const TP1: &[ThomTerm] = &[(1, &[1])];
const TP2: &[ThomTerm] = &[(1, &[2]), (1, &[0, 1])];
const TP3: &[ThomTerm] = &[(1, &[3]), (3, &[1, 1]), (2, &[0, 0, 1])];
// Gaffney, Porteous and Ronga.
const TP4: &[ThomTerm] = &[
    (1, &[4]),
    (6, &[2, 1]),
    (9, &[1, 0, 1]),
    (2, &[0, 2]),
    (6, &[0, 0, 0, 1]),
];

impl ThomProfile {
    pub fn new(k: u32) -> Result<Self, EngineError> {
        match k {
            0 => Err(EngineError::OutOfRange(
                "Thom-Boardman profile with no 1's".into(),
            )),
            1..=4 => Ok(ThomProfile { k }),
            _ => Err(EngineError::UnsupportedCodimension { k }),
        }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `Sigma^{1,1,...}` with `k` ones.
    pub fn symbol(&self) -> String {
        let ones = vec!["1"; self.k as usize].join(",");
        format!("Sigma^{{{ones}}}")
    }

    pub fn coefficients(&self) -> &'static [ThomTerm] {
        match self.k {
            1 => TP1,
            2 => TP2,
            3 => TP3,
            _ => TP4,
        }
    }
}

/// Evaluates the Thom polynomial on `cbars = [cbar_1, cbar_2, ...]`.
pub fn thom_class(profile: ThomProfile, cbars: &[GradedClass]) -> Result<GradedClass, EngineError> {
    let k = profile.k() as usize;
    if cbars.len() < k {
        return Err(EngineError::InvalidInput(format!(
            "{} needs cbar_1..cbar_{k}, got {}",
            profile.symbol(),
            cbars.len()
        )));
    }
    let table = cbars[0].table();
    let mut acc = GradedClass::zero(table);
    for (coeff, exps) in profile.coefficients() {
        let mut term = GradedClass::one(table);
        for (i, &e) in exps.iter().enumerate() {
            if e > 0 {
                term = term.try_mul(&cbars[i].pow(e))?;
            }
        }
        acc = acc.try_add(&term.scale_int(*coeff))?;
    }
    Ok(acc)
}
