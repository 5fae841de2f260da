//! The three q=5, n=4 worked examples, loaded from the fixture directory at
//! the workspace root. Symbolic rows in the displays are linear combinations
//! of x_1..x_4 and z, written here as coefficient vectors.

use std::path::PathBuf;

use rankcode::format::{parse_code, parse_matrix, parse_packets, CodeSpec};
use rankcode::{GabidulinCode, MatQ};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

pub fn fixture(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).unwrap_or_else(|e| panic!("fixture {name}: {e}"))
}

pub fn matrix(name: &str) -> MatQ {
    parse_matrix(&fixture(name)).unwrap_or_else(|e| panic!("fixture {name}: {e}"))
}

pub struct Worked {
    pub code: GabidulinCode,
    /// n×m payload, row i is x_{i+1}.
    pub x: MatQ,
    /// The injected packet [1 2 3 4 | z].
    pub corrupt: MatQ,
}

impl Worked {
    pub fn load() -> Self {
        let code = match parse_code(fixture("example.code").trim()).unwrap() {
            CodeSpec::Gabidulin(c) => c,
            other => panic!("expected a Gabidulin code, got {other:?}"),
        };
        Worked { code, x: matrix("codeword.mat"), corrupt: matrix("corrupt.mat") }
    }

    pub fn z(&self) -> MatQ {
        self.corrupt.col_range(4, 8)
    }

    /// [I | x]
    pub fn transmitted(&self) -> MatQ {
        rankcode::channel::lift_matrix(&self.x)
    }

    /// Y = A·[I | x] + B·[1 2 3 4 | z]
    pub fn received(&self, a: &MatQ, b: Option<&MatQ>) -> MatQ {
        let ax = a.mul(&self.transmitted()).unwrap();
        match b {
            Some(b) => ax.add(&b.mul(&self.corrupt).unwrap()).unwrap(),
            None => ax,
        }
    }

    /// Rows Σ_i c_i x_i + c_5 z for each coefficient vector.
    pub fn eval(&self, rows: &[[i64; 5]]) -> MatQ {
        let fq = self.x.fq();
        let basis = self.x.vstack(&self.z()).unwrap();
        let c: Vec<&[i64]> = rows.iter().map(|r| &r[..]).collect();
        MatQ::from_i64_rows(fq, &c).mul(&basis).unwrap()
    }

    pub fn packets(&self, name: &str) -> MatQ {
        parse_packets(self.x.fq(), 8, &fixture(name)).unwrap()
    }
}

pub fn ex1() -> (MatQ, MatQ) {
    (matrix("example1_a.mat"), matrix("example1_b.mat"))
}

pub fn ex2() -> (MatQ, MatQ) {
    (matrix("example2_a.mat"), matrix("example2_b.mat"))
}

pub fn ex3() -> MatQ {
    matrix("example3_a.mat")
}
