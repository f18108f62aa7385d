//! Numeric continuation of `t = F^{1/d}` along the triangle loop.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::curves::CurveSpec;
use crate::poly::{dth_power_test, LineForm, MPoly, Point};

use super::{HolonomyError, TriangleCycle};

const MAX_BISECTIONS: u32 = 40;
const THETA_CANDIDATES: usize = 24;
const CLEARANCE_SAMPLES: usize = 2048;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PathOptions {
    /// Uniform samples per segment before adaptive bisection.
    pub steps: usize,
    /// Minimum chordal distance, in the line's affine parameter, between the
    /// path and the tangency point.
    pub clearance: f64,
    /// Relative bound on `|t^d - F| / max(1, |F|)` at every sample.
    pub tolerance: f64,
    /// Seed of a random smooth deformation of the path interiors.
    pub perturbation: Option<u64>,
    pub reverse: bool,
}

impl Default for PathOptions {
    fn default() -> Self {
        PathOptions { steps: 256, clearance: 1e-3, tolerance: 1e-8, perturbation: None, reverse: false }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Sample {
    pub segment: usize,
    pub s: f64,
    pub pos: [[f64; 2]; 3],
    pub t: [f64; 2],
    /// Index `k` of the chosen root `|F|^{1/d} e^{i(arg F + 2πk)/d}`.
    pub branch: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BranchTrack {
    pub samples: Vec<Sample>,
    pub bisections: usize,
    pub max_residual: f64,
    /// Smallest chordal distance to a tangency point, per segment.
    pub clearance: [f64; 3],
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumericLink {
    pub estimate: [f64; 2],
    pub track: BranchTrack,
}

impl NumericLink {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.estimate[0], self.estimate[1])
    }
}

struct ComplexPoly {
    terms: Vec<([u32; 3], Complex64)>,
}

impl ComplexPoly {
    fn new(f: &MPoly) -> Self {
        ComplexPoly { terms: f.terms().map(|(e, c)| (*e, c.to_complex())).collect() }
    }

    fn eval(&self, v: &[Complex64; 3]) -> Complex64 {
        self.terms.iter().fold(Complex64::new(0.0, 0.0), |acc, (e, c)| {
            acc + c * v[0].powu(e[0]) * v[1].powu(e[1]) * v[2].powu(e[2])
        })
    }
}

fn embed(p: &Point) -> [Complex64; 3] {
    let v = p.clone().map(|c| c.to_complex());
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.map(|z| z / norm)
}

/// Chordal distance on the Riemann sphere.
fn chordal(a: Complex64, b: Option<Complex64>) -> f64 {
    match b {
        None => 2.0 / (1.0 + a.norm_sqr()).sqrt(),
        Some(b) => 2.0 * (a - b).norm() / ((1.0 + a.norm_sqr()).sqrt() * (1.0 + b.norm_sqr()).sqrt()),
    }
}

/// One segment: `v(s) = cos(πs/2) A + w(s) cos(πs/2) B`, with affine parameter
/// `w(s) = tan(πs/2) e^{iθ(s)} ρ(s)` going from 0 to ∞.
struct SegmentPath {
    a: [Complex64; 3],
    b: [Complex64; 3],
    theta_max: f64,
    bumps: [(f64, f64); 3],
}

impl SegmentPath {
    fn theta(&self, s: f64) -> f64 {
        let mut th = self.theta_max * (PI * s).sin();
        for (m, (ang, _)) in self.bumps.iter().enumerate() {
            th += ang * ((m + 1) as f64 * PI * s).sin();
        }
        th
    }

    fn radial(&self, s: f64) -> f64 {
        let mut r = 1.0;
        for (m, (_, rad)) in self.bumps.iter().enumerate() {
            r += rad * ((m + 1) as f64 * PI * s).sin();
        }
        r
    }

    fn point(&self, s: f64) -> [Complex64; 3] {
        let (sn, cs) = ((PI * s / 2.0).sin(), (PI * s / 2.0).cos());
        let rot = Complex64::from_polar(sn * self.radial(s), self.theta(s));
        std::array::from_fn(|i| self.a[i] * cs + self.b[i] * rot)
    }

    /// The affine parameter `w = v_B / v_A`, `None` at `s = 1`.
    fn affine(&self, s: f64) -> Option<Complex64> {
        let cs = (PI * s / 2.0).cos();
        if cs.abs() < 1e-300 {
            return None;
        }
        let sn = (PI * s / 2.0).sin();
        Some(Complex64::from_polar(sn * self.radial(s) / cs, self.theta(s)))
    }

    fn clearance(&self, tangency: Option<Complex64>) -> f64 {
        (0..=CLEARANCE_SAMPLES)
            .map(|k| {
                let s = k as f64 / CLEARANCE_SAMPLES as f64;
                match (self.affine(s), tangency) {
                    (Some(w), t) => chordal(w, t),
                    (None, Some(t)) => chordal(t, None),
                    (None, None) => 0.0,
                }
            })
            .fold(f64::INFINITY, f64::min)
    }
}

/// Affine parameter of the tangency point with respect to the frame `(A, B)`:
/// the zero of `ℓ(αA + βB) = α ℓ(A) + β ℓ(B)` is at `β/α = -ℓ(A)/ℓ(B)`.
fn tangency_parameter(
    f: &MPoly,
    d: u32,
    l: &LineForm,
    a: &Point,
    b: &Point,
) -> Result<Option<Complex64>, HolonomyError> {
    let (_, lin) = dth_power_test(&f.restrict_to_line(l), d)?
        .ok_or(crate::curves::CurveError::NotTangentAtOnePoint { line: 0 })?;
    let eval = |p: &Point| {
        let (s, t) = l.params_of(p);
        lin.eval(&s, &t).to_complex()
    };
    // scale of the embedded representatives
    let na = a.iter().map(|c| c.to_complex().norm_sqr()).sum::<f64>().sqrt();
    let nb = b.iter().map(|c| c.to_complex().norm_sqr()).sum::<f64>().sqrt();
    let (la, lb) = (eval(a) / na, eval(b) / nb);
    if lb.norm() == 0.0 {
        return Ok(None);
    }
    Ok(Some(-la / lb))
}

fn roots(f: Complex64, d: u32) -> Vec<Complex64> {
    let r = f.norm().powf(1.0 / d as f64);
    let arg = f.arg();
    (0..d)
        .map(|k| Complex64::from_polar(r, (arg + 2.0 * PI * k as f64) / d as f64))
        .collect()
}

/// Nearest root to `prev` and its index, or `None` when the choice is unsafe.
fn choose(f: Complex64, d: u32, prev: Complex64) -> Option<(usize, Complex64)> {
    let rs = roots(f, d);
    let mut idx: Vec<usize> = (0..rs.len()).collect();
    idx.sort_by(|&i, &j| (rs[i] - prev).norm().partial_cmp(&(rs[j] - prev).norm()).unwrap());
    let best = idx[0];
    let margin = prev.norm() * (PI / d as f64).sin();
    let dist = (rs[best] - prev).norm();
    if dist >= margin {
        return None;
    }
    if d > 1 {
        let second = (rs[idx[1]] - prev).norm();
        if second - dist < 1e-12 * prev.norm().max(1.0) {
            return None;
        }
    }
    Some((best, rs[best]))
}

fn to_pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

/// Continues the `d`-th root of `F` around the loop of `cycle`, returning
/// `t_end / t_start` together with the sampled track.
pub fn linking_numeric(
    c: &CurveSpec,
    cycle: &TriangleCycle,
    opts: &PathOptions,
) -> Result<NumericLink, HolonomyError> {
    let d = c.d;
    let f = ComplexPoly::new(&c.main);
    let mut rng = opts.perturbation.map(ChaCha8Rng::seed_from_u64);
    let order: Vec<(usize, bool)> = if opts.reverse {
        vec![(2, true), (1, true), (0, true)]
    } else {
        vec![(0, false), (1, false), (2, false)]
    };

    let base = &cycle.vertices[0];
    let f0 = f.eval(&embed(base));
    let t0 = roots(f0, d)[0];
    let mut t = t0;
    let mut samples = Vec::new();
    let mut bisections = 0usize;
    let mut max_residual: f64 = 0.0;
    let mut clearances = [f64::INFINITY; 3];

    for (seg_idx, backwards) in order {
        let (l, from, to) = cycle.segment(seg_idx);
        let (from, to) = if backwards { (to, from) } else { (from, to) };
        let tang = tangency_parameter(&c.main, d, l, from, to)?;
        let bumps: [(f64, f64); 3] = match rng.as_mut() {
            Some(r) => std::array::from_fn(|_| (r.gen_range(-0.2..0.2), r.gen_range(-0.2..0.2))),
            None => [(0.0, 0.0); 3],
        };
        let (a, b) = (embed(from), embed(to));
        // pick the detour angle keeping furthest from the tangency point
        let mut best: Option<(f64, SegmentPath)> = None;
        for k in 0..THETA_CANDIDATES {
            let theta_max = if k == 0 {
                0.0
            } else {
                let m = k.div_ceil(2) as f64;
                let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
                sign * m * PI / (THETA_CANDIDATES as f64 / 2.0 + 1.0)
            };
            let path = SegmentPath { a, b, theta_max, bumps };
            let cl = path.clearance(tang);
            if best.as_ref().is_none_or(|(c0, _)| cl > *c0 + 1e-12) {
                best = Some((cl, path));
            }
        }
        let (cl, path) = best.unwrap();
        clearances[seg_idx] = cl;
        if cl < opts.clearance {
            return Err(HolonomyError::PathThroughCurve { segment: seg_idx + 1 });
        }

        let steps = opts.steps.max(1);
        let mut s = 0.0;
        let mut h = 1.0 / steps as f64;
        while s < 1.0 {
            let mut depth = 0;
            loop {
                let next = (s + h).min(1.0);
                let v = path.point(next);
                let fv = f.eval(&v);
                match choose(fv, d, t) {
                    Some((k, root)) => {
                        let residual = (root.powu(d) - fv).norm() / fv.norm().max(1.0);
                        max_residual = max_residual.max(residual);
                        if residual > opts.tolerance {
                            return Err(HolonomyError::Residual { segment: seg_idx + 1, residual });
                        }
                        t = root;
                        s = next;
                        samples.push(Sample {
                            segment: seg_idx + 1,
                            s,
                            pos: v.map(to_pair),
                            t: to_pair(t),
                            branch: k,
                        });
                        break;
                    }
                    None => {
                        depth += 1;
                        bisections += 1;
                        if depth > MAX_BISECTIONS {
                            return Err(HolonomyError::BranchAmbiguity { segment: seg_idx + 1, s });
                        }
                        h /= 2.0;
                    }
                }
            }
            // relax the step back towards the uniform grid
            h = (h * 2.0).min(1.0 / steps as f64);
        }
    }
    let estimate = t / t0;
    Ok(NumericLink {
        estimate: to_pair(estimate),
        track: BranchTrack { samples, bisections, max_residual, clearance: clearances },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::kummer_construct;
    use crate::cyclotomic::RootOfUnity;
    use crate::holonomy::linking_exact;

    #[test]
    fn matches_exact_for_third_root() {
        let taus = [RootOfUnity::minus_one(), RootOfUnity::new(6, 1), RootOfUnity::new(6, 5)];
        let c = kummer_construct(3, taus, 2).unwrap().curve;
        let exact = linking_exact(&c, false).unwrap();
        let cycle = TriangleCycle::from_curve(&c).unwrap();
        let num = linking_numeric(&c, &cycle, &PathOptions::default()).unwrap();
        assert!((num.value() - exact.holonomy.to_complex()).norm() < 1e-8);
        let rev = linking_numeric(&c, &cycle, &PathOptions { reverse: true, ..Default::default() }).unwrap();
        assert!((rev.value() - exact.holonomy.inv().to_complex()).norm() < 1e-8);
    }
}
