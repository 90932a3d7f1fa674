//! Dense univariate polynomials with real-root isolation by Sturm
//! sequences. Degrees here are small (at most 8), so robustness wins
//! over asymptotics: isolation brackets come from sign counting and are
//! polished by the hybrid Newton solver.

use super::roots::newton_bisect;

/// Polynomial with coefficients in ascending order of degree.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly(pub Vec<f64>);

impl Poly {
    pub fn new(coeffs: Vec<f64>) -> Self {
        let mut p = Poly(coeffs);
        p.trim();
        p
    }

    pub fn constant(c: f64) -> Self {
        Poly(vec![c])
    }

    fn trim(&mut self) {
        let scale = self.0.iter().fold(0.0f64, |m, c| m.max(c.abs()));
        while let Some(&last) = self.0.last() {
            if self.0.len() > 1 && last.abs() <= 1e-14 * scale {
                self.0.pop();
            } else {
                break;
            }
        }
        if self.0.is_empty() {
            self.0.push(0.0);
        }
    }

    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0.0)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        self.0.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    /// Value and first derivative in one pass.
    pub fn eval_with_derivative(&self, x: f64) -> (f64, f64) {
        let mut p = 0.0;
        let mut d = 0.0;
        for &c in self.0.iter().rev() {
            d = d * x + p;
            p = p * x + c;
        }
        (p, d)
    }

    pub fn derivative(&self) -> Poly {
        if self.0.len() <= 1 {
            return Poly::constant(0.0);
        }
        Poly::new(
            self.0[1..]
                .iter()
                .enumerate()
                .map(|(i, &c)| c * (i + 1) as f64)
                .collect(),
        )
    }

    pub fn scale(&self, s: f64) -> Poly {
        Poly::new(self.0.iter().map(|&c| c * s).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![0.0; n];
        for (i, &c) in self.0.iter().enumerate() {
            out[i] += c;
        }
        for (i, &c) in other.0.iter().enumerate() {
            out[i] += c;
        }
        Poly::new(out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(-1.0))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = vec![0.0; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    /// Remainder of self / divisor (Euclidean division).
    fn rem(&self, divisor: &Poly) -> Poly {
        let mut r = self.0.clone();
        let d = &divisor.0;
        let dn = d.len();
        let lead = d[dn - 1];
        while r.len() >= dn && !r.iter().all(|&c| c == 0.0) {
            let k = r.len() - dn;
            let q = r[r.len() - 1] / lead;
            for i in 0..dn {
                r[k + i] -= q * d[i];
            }
            r.pop();
            // guard against drift keeping a spurious leading term
            let scale = r.iter().fold(0.0f64, |m, c| m.max(c.abs()));
            while r.len() > 1 && r.last().is_some_and(|c| c.abs() <= 1e-12 * scale) {
                r.pop();
            }
        }
        Poly::new(r)
    }

    /// Sturm chain of the square-free part behaviour: p, p', then
    /// negated remainders.
    fn sturm_chain(&self) -> Vec<Poly> {
        let mut chain = vec![self.clone(), self.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() || chain[n - 1].degree() == 0 {
                break;
            }
            let r = chain[n - 2].rem(&chain[n - 1]).scale(-1.0);
            if r.is_zero() {
                break;
            }
            chain.push(r);
        }
        chain
    }

    fn sign_changes(chain: &[Poly], x: f64) -> usize {
        let mut count = 0;
        let mut prev = 0.0f64;
        for p in chain {
            let v = p.eval(x);
            if v != 0.0 {
                if prev != 0.0 && prev * v < 0.0 {
                    count += 1;
                }
                prev = v;
            }
        }
        count
    }

    /// All real roots in `(lo, hi)`, ascending, polished to residual
    /// tolerance `ftol` (scaled by the local coefficient magnitude).
    pub fn real_roots_in(&self, lo: f64, hi: f64, ftol: f64) -> Vec<f64> {
        if self.degree() == 0 {
            return Vec::new();
        }
        let chain = self.sturm_chain();
        let scale = self.0.iter().fold(0.0f64, |m, c| m.max(c.abs())).max(1.0);
        let mut roots = Vec::new();
        let mut stack = vec![(
            lo,
            hi,
            Self::sign_changes(&chain, lo),
            Self::sign_changes(&chain, hi),
        )];
        while let Some((a, b, sa, sb)) = stack.pop() {
            let n = sa.saturating_sub(sb);
            if n == 0 {
                continue;
            }
            if n == 1 {
                // single root isolated: bracket may not show a strict sign
                // change if the root is at a subdivision point; nudge.
                if let Ok(r) = newton_bisect(|x| self.eval_with_derivative(x), a, b, ftol * scale) {
                    roots.push(r.x);
                } else {
                    // fall back to midpoint subdivision
                    let mid = 0.5 * (a + b);
                    if (b - a).abs() > 1e-13 * (1.0 + a.abs() + b.abs()) {
                        let sm = Self::sign_changes(&chain, mid);
                        stack.push((a, mid, sa, sm));
                        stack.push((mid, b, sm, sb));
                    } else {
                        roots.push(mid);
                    }
                }
                continue;
            }
            let mid = 0.5 * (a + b);
            if (b - a).abs() <= 1e-13 * (1.0 + a.abs() + b.abs()) {
                roots.push(mid); // cluster collapsed to machine width
                continue;
            }
            let sm = Self::sign_changes(&chain, mid);
            stack.push((a, mid, sa, sm));
            stack.push((mid, b, sm, sb));
        }
        roots.sort_by(|p, q| p.partial_cmp(q).unwrap());
        roots.dedup_by(|p, q| (*p - *q).abs() <= 1e-10 * (1.0 + p.abs()));
        roots
    }

    /// All real roots, using a Cauchy bound for the search interval.
    pub fn real_roots(&self, ftol: f64) -> Vec<f64> {
        let lead = *self.0.last().unwrap();
        if lead == 0.0 {
            return Vec::new();
        }
        let bound = 1.0
            + self.0[..self.0.len() - 1]
                .iter()
                .fold(0.0f64, |m, &c| m.max((c / lead).abs()));
        self.real_roots_in(-bound, bound, ftol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_roots() {
        let p = Poly::new(vec![-2.0, 0.0, 1.0]); // x^2 - 2
        let r = p.real_roots(1e-14);
        assert_eq!(r.len(), 2);
        assert!((r[1] - 2f64.sqrt()).abs() < 1e-12);
        assert!((r[0] + 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn quartic_with_two_real_roots() {
        // (x^2+1)(x-1)(x-3) = x^4 - 4x^3 + 4x^2 - 4x + 3
        let p = Poly::new(vec![3.0, -4.0, 4.0, -4.0, 1.0]);
        let r = p.real_roots(1e-14);
        assert_eq!(r.len(), 2);
        assert!((r[0] - 1.0).abs() < 1e-10 && (r[1] - 3.0).abs() < 1e-10);
    }

    #[test]
    fn no_real_roots() {
        let p = Poly::new(vec![1.0, 0.0, 1.0]);
        assert!(p.real_roots(1e-14).is_empty());
    }

    #[test]
    fn family_quartic_root_matches_closed_form() {
        // 9b(b^2 x^4 + 4b x^2 - 1) with b = 2: positive root sqrt((sqrt5-2)/2)
        let b = 2.0;
        let p = Poly::new(vec![-9.0 * b, 0.0, 36.0 * b * b, 0.0, 9.0 * b * b * b]);
        let r = p.real_roots(1e-14);
        let expected = ((5f64.sqrt() - 2.0) / b).sqrt();
        assert_eq!(r.len(), 2);
        assert!((r[1] - expected).abs() < 1e-12);
    }

    #[test]
    fn close_roots_are_separated() {
        // (x-1)(x-1.001)
        let p = Poly::new(vec![1.001, -2.001, 1.0]);
        let r = p.real_roots(1e-16);
        assert_eq!(r.len(), 2);
    }
}
