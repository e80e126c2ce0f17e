//! Small square integer matrices indexed by graph vertices, used for the
//! abelianized action on first homology.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    n: usize,
    data: Vec<i64>, // row-major
}

impl IntegerMatrix {
    pub fn zero(n: usize) -> IntegerMatrix {
        IntegerMatrix {
            n,
            data: vec![0; n * n],
        }
    }

    pub fn identity(n: usize) -> IntegerMatrix {
        let mut m = IntegerMatrix::zero(n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.data[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: i64) {
        self.data[row * self.n + col] = value;
    }

    pub fn is_identity(&self) -> bool {
        *self == IntegerMatrix::identity(self.n)
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.n, other.n, "matrix dimensions must agree");
        let mut out = IntegerMatrix::zero(self.n);
        for i in 0..self.n {
            for k in 0..self.n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..self.n {
                    out.data[i * self.n + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn trace(&self) -> i64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// Exact determinant by fraction-free elimination.
    pub fn determinant(&self) -> i64 {
        let n = self.n;
        if n == 0 {
            return 1;
        }
        let mut m: Vec<i128> = self.data.iter().map(|&x| x as i128).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if m[k * n + k] == 0 {
                match (k + 1..n).find(|&r| m[r * n + k] != 0) {
                    Some(r) => {
                        for c in 0..n {
                            m.swap(k * n + c, r * n + c);
                        }
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    m[i * n + j] =
                        (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
                }
                m[i * n + k] = 0;
            }
            prev = m[k * n + k];
        }
        i64::try_from(sign * m[n * n - 1]).expect("determinant fits in i64 at desk scale")
    }

    /// Extracts the 2x2 block on rows and columns (i, j).
    pub fn restrict_2x2(&self, i: usize, j: usize) -> [[i64; 2]; 2] {
        [
            [self.get(i, i), self.get(i, j)],
            [self.get(j, i), self.get(j, j)],
        ]
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
