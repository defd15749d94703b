use crate::error::{Error, Result};
use crate::factorization::RationalDiskFunction;
use crate::fourier::FourierPoly;
use crate::C64;

/// Zeros closer than this to the unit circle are treated as boundary zeros.
pub const BOUNDARY_EPS: f64 = 1e-8;

/// `B(z) = z^m · Π b_a(z)` with `b_a(z) = (|a|/a)·(a − z)/(1 − ā z)`.
///
/// Each factor is positive at the origin, so the lowest nonzero Taylor
/// coefficient of `B` is `Π |a| > 0`, and a zero set closed under conjugation
/// gives real coefficients. Exact zeros at the origin are folded into `m`.
pub fn blaschke_product(zeros: &[C64], origin_order: usize) -> Result<RationalDiskFunction> {
    let one = C64::new(1.0, 0.0);
    let mut order = origin_order;
    let mut num = vec![one];
    let mut den = vec![one];
    for &a in zeros {
        let r = a.norm();
        if !(r < 1.0 - BOUNDARY_EPS) {
            return Err(Error::ZeroOnBoundary { re: a.re, im: a.im });
        }
        if r == 0.0 {
            order += 1;
            continue;
        }
        let unit = r / a;
        // (|a|/a)(a − z) = |a| − (|a|/a) z
        num = mul_linear(&num, C64::new(r, 0.0), -unit);
        den = mul_linear(&den, one, -a.conj());
    }
    Ok(RationalDiskFunction::from_parts(
        FourierPoly::from_dense(order as i64, &num),
        FourierPoly::from_dense(0, &den),
    ))
}

fn mul_linear(p: &[C64], c0: C64, c1: C64) -> Vec<C64> {
    let mut out = vec![C64::new(0.0, 0.0); p.len() + 1];
    for (i, &x) in p.iter().enumerate() {
        out[i] += x * c0;
        out[i + 1] += x * c1;
    }
    out
}
