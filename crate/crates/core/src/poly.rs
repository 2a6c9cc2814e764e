//! Bivariate polynomials in `x` and `q` with nonnegative integer coefficients.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Sparse map from `(x_degree, q_degree)` to a positive coefficient.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub x: u32,
    pub q: u32,
    pub c: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub n: usize,
    pub terms: Vec<Term>,
}

impl BivariatePolynomial {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, x: u32, q: u32, c: u64) {
        if c > 0 {
            *self.terms.entry((x, q)).or_insert(0) += c;
        }
    }

    pub fn coefficient(&self, x: u32, q: u32) -> u64 {
        self.terms.get(&(x, q)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn x_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(x, _)| x).max()
    }

    /// Highest `q` exponent appearing with `x^d`.
    pub fn q_degree_at(&self, d: u32) -> Option<u32> {
        self.terms
            .range((d, 0)..=(d, u32::MAX))
            .next_back()
            .map(|(&(_, q), _)| q)
    }

    /// Coefficient of `x^d` as a dense list indexed by `q` exponent.
    pub fn x_coefficient(&self, d: u32) -> Vec<u64> {
        let Some(top) = self.q_degree_at(d) else {
            return Vec::new();
        };
        let mut out = vec![0; top as usize + 1];
        for (&(_, q), &c) in self.terms.range((d, 0)..=(d, u32::MAX)) {
            out[q as usize] = c;
        }
        out
    }

    /// Sets `q = 1`, giving a dense list indexed by `x` exponent.
    pub fn at_q_one(&self) -> Vec<u64> {
        let Some(top) = self.x_degree() else {
            return Vec::new();
        };
        let mut out = vec![0; top as usize + 1];
        for (&(x, _), &c) in &self.terms {
            out[x as usize] += c;
        }
        out
    }

    pub fn coefficient_sum(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (&(x, q), &c) in &other.terms {
            self.add_term(x, q, c);
        }
    }

    /// Terms ordered by `x` ascending, then `q` descending.
    pub fn terms(&self) -> Vec<Term> {
        let mut out: Vec<Term> = self
            .terms
            .iter()
            .map(|(&(x, q), &c)| Term { x, q, c })
            .collect();
        out.sort_by(|a, b| a.x.cmp(&b.x).then(b.q.cmp(&a.q)));
        out
    }

    pub fn to_json(&self, n: usize) -> PolynomialJson {
        PolynomialJson {
            n,
            terms: self.terms(),
        }
    }

    /// `x,q,c` rows in [`Self::terms`] order, with a header line.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("x,q,c\n");
        for t in self.terms() {
            s.push_str(&format!("{},{},{}\n", t.x, t.q, t.c));
        }
        s
    }
}

fn q_monomial(q: u32, c: u64) -> String {
    let coeff = if c == 1 && q > 0 {
        String::new()
    } else {
        c.to_string()
    };
    match q {
        0 => coeff,
        1 => format!("{coeff}q"),
        _ => format!("{coeff}q^{q}"),
    }
}

/// Renders like `1 + x(q + 3) + x^2`.
impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms = self.terms();
        let mut first = true;
        let mut idx = 0;
        while idx < terms.len() {
            let d = terms[idx].x;
            let inner: Vec<String> = terms[idx..]
                .iter()
                .take_while(|t| t.x == d)
                .map(|t| q_monomial(t.q, t.c))
                .collect();
            idx += inner.len();
            let inner_text = inner.join(" + ");
            let x_part = match d {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{d}"),
            };
            let rendered = match (x_part.is_empty(), inner_text.as_str()) {
                (true, _) if inner.len() == 1 => inner_text.clone(),
                (true, _) => format!("({inner_text})"),
                (false, "1") => x_part,
                (false, _) => format!("{x_part}({inner_text})"),
            };
            if !first {
                f.write_str(" + ")?;
            }
            f.write_str(&rendered)?;
            first = false;
        }
        Ok(())
    }
}
