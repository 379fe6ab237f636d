//! Brute-force eigenbasis search written against the raw structure
//! constants with machine-integer Gaussian arithmetic. It shares no code
//! with the quadric pipeline.

use nijenhuis_core::linalg::{Field, Matrix, Scalar};
use nijenhuis_core::LieAlgebra;
use num_traits::{ToPrimitive, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Gi {
    pub re: i64,
    pub im: i64,
}

impl Gi {
    pub const ZERO: Gi = Gi { re: 0, im: 0 };

    pub fn new(re: i64, im: i64) -> Self {
        Gi { re, im }
    }

    fn add(self, o: Gi) -> Gi {
        Gi::new(self.re + o.re, self.im + o.im)
    }

    fn sub(self, o: Gi) -> Gi {
        Gi::new(self.re - o.re, self.im - o.im)
    }

    fn mul(self, o: Gi) -> Gi {
        Gi::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }

    fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }

    pub fn to_scalar(self) -> Scalar {
        Scalar::gaussian(self.re, self.im)
    }

    fn from_scalar(x: &Scalar) -> Option<Gi> {
        if !x.re().is_integer() || !x.im().is_integer() {
            return None;
        }
        Some(Gi::new(
            x.re().to_integer().to_i64()?,
            x.im().to_integer().to_i64()?,
        ))
    }
}

pub type V3 = [Gi; 3];

fn cross(x: &V3, y: &V3) -> V3 {
    [
        x[1].mul(y[2]).sub(x[2].mul(y[1])),
        x[2].mul(y[0]).sub(x[0].mul(y[2])),
        x[0].mul(y[1]).sub(x[1].mul(y[0])),
    ]
}

fn dot(x: &V3, y: &V3) -> Gi {
    x[0].mul(y[0]).add(x[1].mul(y[1])).add(x[2].mul(y[2]))
}

/// Structure constants `c[i][j][k] = c^k_{ij}` as Gaussian integers.
pub struct RawAlgebra {
    c: [[[Gi; 3]; 3]; 3],
}

impl RawAlgebra {
    /// `None` unless the algebra is three-dimensional with Gaussian-integer
    /// constants.
    pub fn new(alg: &LieAlgebra) -> Option<Self> {
        if alg.dim() != 3 {
            return None;
        }
        let mut c = [[[Gi::ZERO; 3]; 3]; 3];
        for (i, ci) in c.iter_mut().enumerate() {
            for (j, cij) in ci.iter_mut().enumerate() {
                for (k, x) in cij.iter_mut().enumerate() {
                    *x = Gi::from_scalar(alg.constant(i, j, k))?;
                }
            }
        }
        Some(RawAlgebra { c })
    }

    /// `ad_x` as rows: `[x, y]_k = Σ_j ad[k][j] y_j`.
    fn ad(&self, x: &V3) -> [[Gi; 3]; 3] {
        let mut ad = [[Gi::ZERO; 3]; 3];
        for (k, row) in ad.iter_mut().enumerate() {
            for (j, a) in row.iter_mut().enumerate() {
                for (i, xi) in x.iter().enumerate() {
                    *a = a.add(xi.mul(self.c[i][j][k]));
                }
            }
        }
        ad
    }

    pub fn bracket(&self, x: &V3, y: &V3) -> V3 {
        apply(&self.ad(x), y)
    }
}

fn apply(m: &[[Gi; 3]; 3], y: &V3) -> V3 {
    [0, 1, 2].map(|k| dot(&m[k], y))
}

/// One representative per line through the origin among the box vectors.
/// Over ℝ the first nonzero coordinate is positive; over ℂ it has
/// `re > 0, im ≥ 0`.
pub fn box_vectors(field: Field, bound: i64) -> Vec<V3> {
    let parts: Vec<i64> = (-bound..=bound).collect();
    let scalars: Vec<Gi> = match field {
        Field::Real => parts.iter().map(|&r| Gi::new(r, 0)).collect(),
        Field::Complex => parts
            .iter()
            .flat_map(|&r| parts.iter().map(move |&i| Gi::new(r, i)))
            .collect(),
    };
    let mut out = Vec::new();
    for &a in &scalars {
        for &b in &scalars {
            for &c in &scalars {
                let v = [a, b, c];
                if let Some(lead) = v.iter().find(|x| !x.is_zero()) {
                    if lead.re > 0 && lead.im >= 0 {
                        out.push(v);
                    }
                }
            }
        }
    }
    out
}

/// Searches all bases whose columns come from `box_vectors` for one in which
/// every pair spans a subalgebra (`det(x, y, [x, y]) = 0`). Rescaling a
/// column by a unit does not change that property, so this covers every
/// basis with entries in the box.
pub fn brute_force_eigenbasis(alg: &LieAlgebra, field: Field, bound: i64) -> Option<Matrix> {
    let raw = RawAlgebra::new(alg).expect("Gaussian-integer structure constants");
    let vs = box_vectors(field, bound);
    let n = vs.len();
    let words = n.div_ceil(64);
    let mut adj = vec![0u64; n * words];
    let ads: Vec<_> = vs.iter().map(|v| raw.ad(v)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let normal = cross(&vs[i], &vs[j]);
            if normal.iter().all(|x| x.is_zero()) {
                continue;
            }
            let b = apply(&ads[i], &vs[j]);
            if dot(&normal, &b).is_zero() {
                adj[i * words + j / 64] |= 1 << (j % 64);
                adj[j * words + i / 64] |= 1 << (i % 64);
            }
        }
    }
    for i in 0..n {
        let row_i = &adj[i * words..(i + 1) * words];
        for j in i + 1..n {
            if row_i[j / 64] >> (j % 64) & 1 == 0 {
                continue;
            }
            let normal = cross(&vs[i], &vs[j]);
            let row_j = &adj[j * words..(j + 1) * words];
            for w in j / 64..words {
                let mut bits = row_i[w] & row_j[w];
                while bits != 0 {
                    let k = w * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    if k <= j {
                        continue;
                    }
                    if !dot(&normal, &vs[k]).is_zero() {
                        let col = |v: &V3| v.iter().map(|x| x.to_scalar()).collect::<Vec<_>>();
                        return Some(
                            Matrix::from_columns(&[col(&vs[i]), col(&vs[j]), col(&vs[k])])
                                .expect("3x3"),
                        );
                    }
                }
            }
        }
    }
    None
}

/// Every integer 3×3 matrix with entries in `-bound..=bound`, checked one by
/// one; returns how many are bases in which every pair spans a subalgebra.
pub fn count_integer_eigenbases(alg: &LieAlgebra, bound: i64) -> usize {
    let raw = RawAlgebra::new(alg).expect("Gaussian-integer structure constants");
    let parts: Vec<i64> = (-bound..=bound).collect();
    let vs: Vec<V3> = parts
        .iter()
        .flat_map(|&a| {
            let parts = &parts;
            parts.iter().flat_map(move |&b| {
                parts
                    .iter()
                    .map(move |&c| [Gi::new(a, 0), Gi::new(b, 0), Gi::new(c, 0)])
            })
        })
        .collect();
    let pair_ok = |x: &V3, y: &V3| dot(&cross(x, y), &raw.bracket(x, y)).is_zero();
    let mut count = 0;
    for x in &vs {
        for y in &vs {
            if !pair_ok(x, y) {
                continue;
            }
            for z in &vs {
                if !dot(&cross(x, y), z).is_zero() && pair_ok(y, z) && pair_ok(x, z) {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Exact check that a matrix has entries of the box.
pub fn in_box(z: &Matrix, bound: i64) -> bool {
    z.entries().iter().all(|x| {
        Gi::from_scalar(x).is_some_and(|g| g.re.abs() <= bound && g.im.abs() <= bound)
    }) && z.entries().iter().any(|x| !x.is_zero())
}
