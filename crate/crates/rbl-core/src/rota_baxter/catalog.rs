use once_cell::sync::Lazy;

use crate::error::{Error, Result};
use crate::lie::{sl2, Matrix, OperatorMatrix};
use crate::scalar::{parse_ratfun, Bindings, RatFun, Scalar, ZeroTest};

/// One representative family of Rota-Baxter operators on sl(2,C) up to
/// scaling, with the nonvanishing constraints its parameters must satisfy.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    /// "P1" through "P22".
    pub id: String,
    /// 1-based position in the catalog.
    pub index: usize,
    /// Parameter names appearing in the matrix.
    pub params: Vec<&'static str>,
    /// Operator rows over the Cartan-Weyl basis, entries exact in the
    /// parameters.
    pub matrix: Matrix,
    /// Polynomials that must not vanish at any admissible binding.
    pub constraints: Vec<RatFun>,
    /// Discriminating polynomial whose vanishing splits the family into two
    /// classification branches; only the last family carries one.
    pub branch: Option<RatFun>,
}

impl CatalogEntry {
    /// The family as a symbolic operator over sl(2,C).
    pub fn operator(&self) -> Result<OperatorMatrix> {
        OperatorMatrix::new(&sl2(), self.matrix.clone())
    }

    /// Exact specialization at a constraint-satisfying binding.
    pub fn specialize(&self, bindings: &Bindings) -> Result<OperatorMatrix> {
        if matches!(bindings, Bindings::Numeric(_)) {
            return Err(Error::NumericTag);
        }
        for c in &self.constraints {
            let v = Scalar::Exact(c.clone()).evaluate(bindings)?;
            if ZeroTest::Exact.is_zero(&v)? {
                return Err(Error::ConstraintViolated(
                    self.id.clone(),
                    format!("{c} != 0"),
                ));
            }
        }
        let m = self
            .matrix
            .iter()
            .map(|row| row.iter().map(|x| x.evaluate(bindings)).collect())
            .collect::<Result<Matrix>>()?;
        OperatorMatrix::new(&sl2(), m)
    }

    /// Numeric specialization at a binding. Constraints are tested under the
    /// given zero test, which must therefore tolerate numeric values.
    pub fn specialize_numeric(&self, bindings: &Bindings, zt: ZeroTest) -> Result<OperatorMatrix> {
        for c in &self.constraints {
            let v = Scalar::Exact(c.clone()).evaluate(bindings)?.to_numeric()?;
            if zt.is_zero(&v)? {
                return Err(Error::ConstraintViolated(
                    self.id.clone(),
                    format!("{c} != 0"),
                ));
            }
        }
        let m = self
            .matrix
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| x.evaluate(bindings)?.to_numeric())
                    .collect()
            })
            .collect::<Result<Matrix>>()?;
        OperatorMatrix::new(&sl2().to_numeric()?, m)
    }

    /// Sign of the branch polynomial at a binding: None for families
    /// without a branch split, otherwise whether the polynomial vanishes.
    pub fn branch_vanishes(&self, bindings: &Bindings) -> Result<Option<bool>> {
        match &self.branch {
            None => Ok(None),
            Some(b) => {
                let v = Scalar::Exact(b.clone()).evaluate(bindings)?;
                Ok(Some(ZeroTest::Exact.is_zero(&v)?))
            }
        }
    }
}

fn entry(
    index: usize,
    params: &[&'static str],
    rows: [[&str; 3]; 3],
    constraints: &[&str],
    branch: Option<&str>,
) -> CatalogEntry {
    let parse = |t: &str| parse_ratfun(t).expect("catalog entry text");
    CatalogEntry {
        id: format!("P{index}"),
        index,
        params: params.to_vec(),
        matrix: rows
            .iter()
            .map(|row| row.iter().map(|t| Scalar::Exact(parse(t))).collect())
            .collect(),
        constraints: constraints.iter().map(|t| parse(t)).collect(),
        branch: branch.map(parse),
    }
}

static CATALOG: Lazy<Vec<CatalogEntry>> = Lazy::new(|| {
    vec![
        entry(1, &[], [["0", "0", "0"], ["0", "0", "1"], ["0", "0", "0"]], &[], None),
        entry(2, &[], [["0", "0", "0"], ["0", "0", "0"], ["0", "0", "0"]], &[], None),
        entry(3, &[], [["0", "1", "0"], ["0", "0", "0"], ["0", "0", "0"]], &[], None),
        entry(4, &[], [["0", "0", "0"], ["0", "0", "0"], ["0", "0", "1"]], &[], None),
        entry(5, &[], [["0", "0", "0"], ["1", "0", "0"], ["0", "0", "0"]], &[], None),
        entry(6, &["a"], [["0", "0", "0"], ["1", "0", "a"], ["0", "0", "0"]], &["a"], None),
        entry(
            7,
            &["a"],
            [["1", "a", "0"], ["1/a", "1", "0"], ["0", "0", "0"]],
            &["a"],
            None,
        ),
        entry(
            8,
            &["a"],
            [
                ["1", "a^2/16", "0"],
                ["16/a^2", "-3", "-8/a"],
                ["0", "a", "2"],
            ],
            &["a"],
            None,
        ),
        entry(9, &[], [["0", "0", "1"], ["0", "0", "0"], ["0", "0", "0"]], &[], None),
        entry(10, &[], [["0", "0", "1"], ["0", "0", "0"], ["0", "-2", "0"]], &[], None),
        entry(
            11,
            &["a"],
            [["0", "1", "a"], ["0", "0", "0"], ["0", "0", "0"]],
            &["a"],
            None,
        ),
        entry(
            12,
            &["a"],
            [["0", "1", "a"], ["0", "0", "0"], ["0", "-2*a", "0"]],
            &["a"],
            None,
        ),
        entry(
            13,
            &["a"],
            [["0", "1", "a"], ["0", "0", "0"], ["0", "2*a", "2*a^2"]],
            &["a"],
            None,
        ),
        entry(
            14,
            &["a"],
            [
                ["0", "1", "a"],
                ["0", "-4*a^2", "-4*a^3"],
                ["0", "4*a", "4*a^2"],
            ],
            &["a"],
            None,
        ),
        entry(15, &[], [["0", "0", "0"], ["0", "0", "1"], ["-2", "0", "0"]], &[], None),
        entry(
            16,
            &["a"],
            [["0", "0", "0"], ["1", "0", "a"], ["-2*a", "0", "0"]],
            &["a"],
            None,
        ),
        entry(
            17,
            &["a"],
            [["0", "0", "0"], ["1", "0", "a"], ["2*a", "0", "2*a^2"]],
            &["a"],
            None,
        ),
        entry(
            18,
            &["a"],
            [
                ["-4*a^2", "0", "-4*a^3"],
                ["1", "0", "a"],
                ["4*a", "0", "4*a^2"],
            ],
            &["a"],
            None,
        ),
        entry(
            19,
            &["a"],
            [
                ["1", "-3*a^2/4", "a"],
                ["-4/(27*a^2)", "-1/3", "0"],
                ["-8/(9*a)", "0", "-2/3"],
            ],
            &["a"],
            None,
        ),
        entry(
            20,
            &["a"],
            [
                ["a", "0", "-a^2/2"],
                ["0", "-a", "-1/2"],
                ["1", "a^2", "0"],
            ],
            &["a"],
            None,
        ),
        entry(
            21,
            &["a"],
            [
                ["a", "4*a^3", "0"],
                ["-1/(4*a)", "-a", "0"],
                ["1", "4*a^2", "0"],
            ],
            &["a"],
            None,
        ),
        entry(
            22,
            &["a", "b"],
            [
                ["-1/(4*b)", "a", "-(1+16*a*b^3)/(16*b^2)"],
                ["b", "-4*a*b^2", "(1+16*a*b^3)/4"],
                ["1", "-4*a*b", "(1+16*a*b^3)/(4*b)"],
            ],
            &["a", "b"],
            Some("16*a*b^3 - 1"),
        ),
    ]
});

/// The 22 representative families of Rota-Baxter operators on sl(2,C).
pub fn catalog() -> &'static [CatalogEntry] {
    &CATALOG
}

pub fn entry_by_id(id: &str) -> Option<&'static CatalogEntry> {
    CATALOG.iter().find(|e| e.id.eq_ignore_ascii_case(id))
}
