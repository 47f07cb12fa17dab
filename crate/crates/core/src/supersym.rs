//! Supersymmetric complete functions `h_n(x/y)`, elementary functions,
//! power sums and supersymmetric Schur polynomials.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, RwLock};

use crate::error::{Error, Result};
use crate::exactalg::{det, Scalar};
use crate::shapes::{Alphabet, Partition};

/// Cancelled `(x, y)` contents.
type SeriesKey = (Vec<Scalar>, Vec<Scalar>);

/// Memoised series coefficients `h_0(x/y), …, h_N(x/y)`.
///
/// Keys are alphabet contents with letters common to `x` and `y` cancelled,
/// since `h(x∪a / y∪a) = h(x/y)`. Readers never block each other; two
/// writers racing on one key both store a correct series.
pub struct GeneratorTable {
    series: RwLock<HashMap<SeriesKey, Arc<Vec<Scalar>>>>,
}

static TABLE: LazyLock<GeneratorTable> = LazyLock::new(GeneratorTable::new);

impl Default for GeneratorTable {
    fn default() -> Self {
        GeneratorTable::new()
    }
}

impl GeneratorTable {
    pub fn new() -> GeneratorTable {
        GeneratorTable { series: RwLock::new(HashMap::new()) }
    }

    /// The process-wide table used by the free functions of this module.
    pub fn global() -> &'static GeneratorTable {
        &TABLE
    }

    /// `[h_0(x/y), …, h_n(x/y)]`, possibly longer.
    pub fn series(&self, n: usize, x: &Alphabet, y: &Alphabet) -> Arc<Vec<Scalar>> {
        let key = cancelled(x.content(), y.content());
        if let Some(s) = self.series.read().expect("table lock").get(&key) {
            if s.len() > n {
                return Arc::clone(s);
            }
        }
        // grow geometrically so repeated small extensions stay cheap
        let len = (n + 1).max(8);
        let s = Arc::new(series_of(&key.0, &key.1, len));
        let mut w = self.series.write().expect("table lock");
        let entry = w.entry(key).or_insert_with(|| Arc::clone(&s));
        if entry.len() < s.len() {
            *entry = Arc::clone(&s);
        }
        s
    }

    pub fn h(&self, n: i64, x: &Alphabet, y: &Alphabet) -> Scalar {
        if n < 0 {
            return Scalar::zero();
        }
        if n == 0 {
            return Scalar::one();
        }
        self.series(n as usize, x, y)[n as usize].clone()
    }

    pub fn len(&self) -> usize {
        self.series.read().expect("table lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Removes common letters from two sorted multisets.
fn cancelled(x: Vec<Scalar>, y: Vec<Scalar>) -> (Vec<Scalar>, Vec<Scalar>) {
    let (mut i, mut j) = (0, 0);
    let (mut xs, mut ys) = (Vec::new(), Vec::new());
    while i < x.len() && j < y.len() {
        match x[i].cmp(&y[j]) {
            std::cmp::Ordering::Less => {
                xs.push(x[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                ys.push(y[j].clone());
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    xs.extend_from_slice(&x[i..]);
    ys.extend_from_slice(&y[j..]);
    (xs, ys)
}

/// Coefficients of `Π 1/(1 - x_j z) · Π (1 - y_l z)` up to `z^{len-1}`.
fn series_of(x: &[Scalar], y: &[Scalar], len: usize) -> Vec<Scalar> {
    let mut c = vec![Scalar::zero(); len];
    c[0] = Scalar::one();
    for a in x {
        // multiply by 1/(1 - a z): c_k += a c_{k-1}, ascending
        for k in 1..len {
            let add = a * &c[k - 1];
            c[k] += add;
        }
    }
    for b in y {
        // multiply by (1 - b z): descending so c_{k-1} is still old
        for k in (1..len).rev() {
            let sub = b * &c[k - 1];
            c[k] -= &sub;
        }
    }
    c
}

/// `h_n(x/y)`: zero for `n < 0`, one for `n = 0`.
pub fn h_super(n: i64, x: &Alphabet, y: &Alphabet) -> Scalar {
    GeneratorTable::global().h(n, x, y)
}

/// `e_n(x)`, computed as `(-1)^n h_n(∅/x)`.
pub fn e_elem(n: i64, x: &Alphabet) -> Scalar {
    let h = h_super(n, &Alphabet::empty(), x);
    if n % 2 == 0 {
        h
    } else {
        -h
    }
}

/// `p_n(x/y) = Σ x_i^n - Σ y_j^n` for `n ≥ 1`.
pub fn p_power(n: i64, x: &Alphabet, y: &Alphabet) -> Result<Scalar> {
    if n <= 0 {
        return Err(Error::Domain(format!("power sum p_{n} needs a positive index")));
    }
    let n = n as u32;
    let mut acc = Scalar::zero();
    for a in x.entries() {
        acc += a.pow(n);
    }
    for b in y.entries() {
        acc -= &b.pow(n);
    }
    Ok(acc)
}

/// `s_λ(x/y) = det(h_{λ_i - i + j}(x/y))`.
pub fn supersym_schur(lambda: &Partition, x: &Alphabet, y: &Alphabet) -> Scalar {
    skew_supersym_schur(lambda, &Partition::empty(), x, y)
}

/// `s_{λ/μ}(x/y) = det(h_{λ_i - μ_j - i + j}(x/y))` with size `max(ℓ(λ), ℓ(μ))`.
pub fn skew_supersym_schur(lambda: &Partition, mu: &Partition, x: &Alphabet, y: &Alphabet) -> Scalar {
    let r = lambda.len().max(mu.len());
    let rows: Vec<Vec<Scalar>> = (1..=r)
        .map(|i| {
            (1..=r)
                .map(|j| h_super(lambda.part(i) as i64 - mu.part(j) as i64 - i as i64 + j as i64, x, y))
                .collect()
        })
        .collect();
    det(&rows).expect("square by construction")
}
