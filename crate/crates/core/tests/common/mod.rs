//! Independent oracles shared by the integration tests. Nothing here calls the
//! code paths it is used to check.

#![allow(dead_code, clippy::excessive_precision)]

use eulerprod::{Complex64, ZetaRef};

// Gauss–Kronrod 7/15 nodes and weights on [−1, 1].
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5) and the centre.
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

fn gk15<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> (Complex64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = f(center - dx) + f(center + dx);
        kronrod += pair * WGK[j];
        if j % 2 == 1 {
            gauss += pair * WG[j / 2];
        }
    }
    ((kronrod * half), ((kronrod - gauss) * half).norm())
}

fn adapt<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64, tol: f64, depth: u32) -> Complex64 {
    let (k, err) = gk15(f, a, b);
    if err <= tol || depth >= 60 {
        return k;
    }
    let m = 0.5 * (a + b);
    adapt(f, a, m, tol, depth + 1) + adapt(f, m, b, tol, depth + 1)
}

/// Adaptive Gauss–Kronrod on `[a, b]`; `tol` is an absolute per-panel bound.
pub fn integrate<F: Fn(f64) -> Complex64>(f: F, a: f64, b: f64, tol: f64) -> Complex64 {
    adapt(&f, a, b, tol, 0)
}

/// `E₁(z) = e^{−z} ∫_0^∞ e^{−u} / (z + u) du`, integrating along the horizontal
/// ray from `z` to `+∞`, which never meets the cut when `Im z ≠ 0` or `z > 0`.
pub fn e1_quadrature(z: Complex64) -> Complex64 {
    assert!(
        z.im != 0.0 || z.re > 0.0,
        "ray from {z} would run along the cut"
    );
    let f = |u: f64| (-u).exp() / (z + u);
    let kink = (-z.re).max(0.0);
    let far = kink + 60.0;

    // rough pass to size the absolute tolerance
    let rough = integrate(f, 0.0, far.max(1.0), 1e-6 * (1.0 / z.norm()).min(1.0));
    let tol = 1e-16 * rough.norm().max(1e-300);

    let mut total = Complex64::new(0.0, 0.0);
    let mut edges = vec![0.0];
    if kink > 0.0 {
        // tight panels around the near-pole at u = −Re z
        let w = z.im.abs().max(1e-6);
        for e in [kink - 16.0 * w, kink - w, kink, kink + w, kink + 16.0 * w] {
            if e > *edges.last().unwrap() {
                edges.push(e);
            }
        }
    }
    edges.push(far);
    for pair in edges.windows(2) {
        total += integrate(f, pair[0], pair[1], tol);
    }
    // tail [far, ∞) via u = far + v/(1 − v)
    let tail = |v: f64| {
        if v >= 1.0 {
            return Complex64::new(0.0, 0.0);
        }
        let jac = 1.0 / ((1.0 - v) * (1.0 - v));
        f(far + v / (1.0 - v)) * jac
    };
    total += integrate(tail, 0.0, 1.0, tol);
    (-z).exp() * total
}

pub fn mobius(n: u64) -> i32 {
    let mut n = n;
    let mut sign = 1;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// `P(s) = Σ_{n≥1} μ(n)/n · log ζ(ns)` for real `s ∈ (1/2, 1)`, with `log ζ(s)`
/// continued from the upper half plane (ζ(s) < 0 there, so `Im = −π`).
pub fn prime_zeta_mobius(s: f64, zeta: &ZetaRef) -> Complex64 {
    let mut total = Complex64::new(0.0, 0.0);
    for n in 1..=200u64 {
        let ns = n as f64 * s;
        if 2f64.powf(-ns) < 1e-18 {
            break;
        }
        let mu = mobius(n);
        if mu == 0 {
            continue;
        }
        let z = zeta.eval(Complex64::new(ns, 0.0)).unwrap().re;
        let log = if z < 0.0 {
            Complex64::new((-z).ln(), -std::f64::consts::PI)
        } else {
            Complex64::new((z - 1.0).ln_1p(), 0.0)
        };
        total += log * (mu as f64 / n as f64);
    }
    total
}

/// Deterministic points with `|z|` log-uniform on `[r_min, r_max]` and
/// `arg z` uniform on `[−arg_max, arg_max]`.
pub fn sample_points(n: usize, r_min: f64, r_max: f64, arg_max: f64, seed: u64) -> Vec<Complex64> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let r = (r_min.ln() + rng.gen::<f64>() * (r_max.ln() - r_min.ln())).exp();
            let theta = rng.gen_range(-arg_max..=arg_max);
            Complex64::from_polar(r, theta)
        })
        .collect()
}

pub fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}
