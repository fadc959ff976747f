//! Acceptance suite. Prints one line per criterion and exits nonzero if a
//! criterion fails that is not listed in `KNOWN_FAILURES`.

use std::cmp::Ordering;
use std::time::Instant;

use hawaii::families::{
    family_binomial_sym, family_monomial_gap, family_shapiro1_deg4, family_shapiro2,
    section16_example, theorem7_search,
};
use hawaii::kappa::{
    h_kappa, interval_partition, jensen_pk, kappa_breakpoints_exact, kappa_sweep_grid,
    per_interval_counts_with, polya_gk, q_reduced, shapiro_polynomial, IntervalKind,
};
use hawaii::poly::{factorial, format_rational, int, rat, ComplexRational, Poly, Rational};
use hawaii::roots::{
    count_distinct_roots, count_roots_with_multiplicity, interior_point, isolate_roots,
    real_root_count, Endpoint, IntervalSpec, RootCounter,
};
use hawaii::theorems::{check_preconditions, predict, random_polynomial, RootMode, TheoremId};
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Half-width of the windows around the printed critical points of the worked example.
const ROOT_WINDOW: (i64, i64) = (1, 1000);
/// Windows for `M` at the two sample points of the worked example.
const M_WINDOWS: [((i64, i64), (i64, i64), (i64, i64)); 2] = [
    ((-11, 40), (641, 1000), (643, 1000)),
    ((-27, 20), (683, 1000), (685, 1000)),
];
/// Grid step of the sweep comparison; grid points this close to a breakpoint are skipped.
const SWEEP_STEP: (i64, i64) = (1, 100);
const SWEEP_RANGE: (i64, i64) = (-3, 3);
const COEFF_BOUND: i64 = 6;

/// Criteria that fail on the current code, with the reason.
const KNOWN_FAILURES: &[(u32, &str)] = &[(
    17,
    "the lower bounds do not hold as stated when p has a multiple real root",
)];

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Pass,
    Fail,
    Info,
}

struct Line {
    id: &'static str,
    name: &'static str,
    status: Status,
    detail: String,
}

fn line(id: &'static str, name: &'static str, ok: bool, detail: impl Into<String>) -> Line {
    Line {
        id,
        name,
        status: if ok { Status::Pass } else { Status::Fail },
        detail: detail.into(),
    }
}

fn info(id: &'static str, name: &'static str, detail: impl Into<String>) -> Line {
    Line {
        id,
        name,
        status: Status::Info,
        detail: detail.into(),
    }
}

fn rng(criterion: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed_0000 + criterion)
}

/// Degrees `lo..=hi` in rotation.
fn degree(i: usize, lo: usize, hi: usize) -> usize {
    lo + i % (hi - lo + 1)
}

fn draw(r: &mut ChaCha8Rng, mode: RootMode, n: usize) -> Poly {
    random_polynomial(r, mode, n, COEFF_BOUND)
}

fn zr(p: &Poly) -> usize {
    real_root_count(p).unwrap()
}

fn zr_h(p: &Poly, k: &Rational) -> usize {
    zr(&h_kappa(p, k).unwrap())
}

fn drop_of(n: usize) -> Rational {
    rat(n as i64 - 1, n as i64)
}

fn random_rational(r: &mut ChaCha8Rng, bound: i64, den: i64) -> Rational {
    rat(r.gen_range(-bound * den..=bound * den), r.gen_range(1..=den))
}

fn laguerre() -> Line {
    let mut r = rng(1);
    let mut bad = 0;
    for i in 0..200 {
        let p = draw(&mut r, RootMode::RealRooted, degree(i, 2, 8));
        bad += usize::from(zr_h(&p, &int(1)) != 0);
    }
    line("1", "Laguerre: Z_R(H_1) = 0 for real-rooted p", bad == 0, format!("200 polynomials, degree 2-8, {bad} failures"))
}

fn hawaii_inequality() -> Line {
    let mut r = rng(2);
    let mut bad = 0;
    for i in 0..200 {
        let p = draw(&mut r, RootMode::PRealSimple, degree(i, 2, 8));
        let n = p.degree() as usize;
        bad += usize::from(zr_h(&p, &int(1)) > n - zr(&p));
    }
    line("2", "Z_R(H_1) <= Z_C(p) for simple real zeros", bad == 0, format!("200 polynomials, degree 2-8, {bad} failures"))
}

fn above_drop() -> Vec<Line> {
    let mut r = rng(3);
    let mut bad = 0;
    let mut checks = 0;
    for i in 0..100 {
        let p = draw(&mut r, RootMode::Both, degree(i, 3, 8));
        let n = p.degree() as usize;
        let zc = n - zr(&p);
        for k in [drop_of(n), int(1), rat(3, 2), int(7)] {
            checks += 1;
            bad += usize::from(zr_h(&p, &k) != zc);
        }
    }
    // the quadratic case kept apart: H_{1/2} of a quadratic is a constant
    let mut r = rng(33);
    let (mut quad, mut quad_off) = (0, 0);
    for _ in 0..100 {
        let p = draw(&mut r, RootMode::Both, 2);
        quad += 1;
        quad_off += usize::from(zr_h(&p, &rat(1, 2)) != 2 - zr(&p));
    }
    vec![
        line(
            "3",
            "Z_R(H_k) = Z_C(p) for k in {(n-1)/n, 1, 3/2, 7}",
            bad == 0,
            format!("100 polynomials, degree 3-8, {checks} checks, {bad} failures"),
        ),
        info(
            "3q",
            "degree 2 at k = 1/2",
            format!(
                "H is the nonzero constant -disc(p)/4; {quad_off} of {quad} quadratics with complex zeros have Z_R(H) = 0 < 2 = Z_C(p)"
            ),
        ),
    ]
}

fn nonpositive() -> Line {
    let mut r = rng(4);
    let mut bad = 0;
    for i in 0..100 {
        let p = draw(&mut r, RootMode::Both, degree(i, 2, 8));
        let n = p.degree() as usize;
        for k in [int(0), int(-1), int(-10)] {
            bad += usize::from(zr_h(&p, &k) != n + zr(&p) - 2);
        }
    }
    line("4", "Z_R(H_k) = n + Z_R(p) - 2 for k in {0, -1, -10}", bad == 0, format!("100 polynomials, 300 checks, {bad} failures"))
}

fn small_kappa() -> Line {
    let mut r = rng(5);
    let mut bad = 0;
    for i in 0..100 {
        let p = draw(&mut r, RootMode::Both, degree(i, 2, 8));
        let n = p.degree() as i64;
        let zrp = zr(&p) as i64;
        for k in [rat(1, 10), rat(1, 4), rat(2, 5)] {
            let c = zr_h(&p, &k) as i64;
            bad += usize::from(!(n - zrp - 2 <= c && c <= n + zrp - 2));
        }
    }
    line("5", "Z_C(p) - 2 <= Z_R(H_k) <= n + Z_R(p) - 2 for k in {1/10, 1/4, 2/5}", bad == 0, format!("100 polynomials, 300 checks, {bad} failures"))
}

fn regimes() -> Line {
    let mut r = rng(6);
    let (mut bad, mut checks) = (0, 0);
    for i in 0..100 {
        let p = draw(&mut r, RootMode::RealRooted, degree(i, 3, 8));
        let n = p.degree() as usize;
        for k in 2..n {
            let kappa = (drop_of(k) + drop_of(k + 1)) / int(2);
            let c = zr_h(&p, &kappa);
            checks += 1;
            bad += usize::from(!(2 <= c && c <= 2 * n - 2 * k));
        }
    }
    line("6", "2 <= Z_R(H_k) <= 2n - 2k in each regime", bad == 0, format!("100 polynomials, {checks} regime checks, {bad} failures"))
}

fn binomial() -> Line {
    let mut notes = Vec::new();
    let mut ok = true;
    for n in 5..=10usize {
        let p = &Poly::from_ints(&[-1, 1]).pow(n as u32) + &Poly::from_ints(&[1, 1]).pow(n as u32);
        let h = h_kappa(&p, &drop_of(n)).unwrap();
        let rhs = Poly::from_ints(&[-1, 0, 1]).pow(n as u32 - 2).scale(&int(-4 * (n * (n - 1)) as i64));
        let (zh, zc) = (zr(&h), n - zr(&p));
        let fam = family_binomial_sym(n).unwrap().all_hold();
        let good = h == rhs && zh == 2 * n - 4 && zc == 2 * (n / 2) && zh > zc && fam;
        ok &= good;
        notes.push(format!("n={n}: {zh}>{zc}"));
    }
    line("7", "binomial family: closed form of H, Z_R(H) = 2n-4 > Z_C(p)", ok, notes.join(", "))
}

fn shapiro_quartic() -> Line {
    let mut ok = true;
    for a in [int(2), int(3), rat(-1, 2)] {
        // (x^2 + a^2)(x + a^2)(x - 1)
        let a2 = &a * &a;
        let p = &(&Poly::from_coeffs(vec![a2.clone(), int(0), int(1)]) * &Poly::from_coeffs(vec![a2.clone(), int(1)]))
            * &Poly::from_ints(&[-1, 1]);
        let h = h_kappa(&p, &rat(3, 4)).unwrap();
        let f1 = Poly::from_coeffs(vec![-(&a * (&a + int(1))), &a - int(1)]);
        let f2 = Poly::from_coeffs(vec![&a * (&a - int(1)), &a + int(1)]);
        let rhs = &(&f1 * &f1) * &(&f2 * &f2);
        let fam = family_shapiro1_deg4(&a).unwrap();
        ok &= h.scale(&rat(4, 3)) == rhs && zr(&h) == 4 && 4 - zr(&p) == 2 && fam.p == p && fam.all_hold();
    }
    line("8", "(4/3) H_3/4 is a product of squares, Z_R = 4 > 2 = Z_C", ok, "a in {2, 3, -1/2}")
}

fn shapiro_even() -> Line {
    let mut ok = true;
    for n in 2..=6usize {
        let m = 2 * n;
        let p = Poly::from_coeffs({
            let mut c = vec![Rational::zero(); m + 1];
            c[0] = int(1);
            c[2] = rat(1, 2);
            c[m] = rat(1, m as i64);
            c
        });
        let h = h_kappa(&p, &rat(m as i64 - 1, m as i64)).unwrap();
        // -2n H = (2n^2 - 5n + 3) x^(2n) + 2n(2n-1) x^(2n-2) - (n-1) x^2 + 2n
        let ni = n as i64;
        let mut c = vec![Rational::zero(); m + 1];
        c[m] += int(2 * ni * ni - 5 * ni + 3);
        c[m - 2] += int(2 * ni * (2 * ni - 1));
        c[2] -= int(ni - 1);
        c[0] += int(2 * ni);
        ok &= h.scale(&int(-2 * ni)) == Poly::from_coeffs(c) && zr(&h) == 0;
        ok &= family_shapiro2(n).unwrap().all_hold();
        if n == 2 {
            ok &= h.scale(&int(-4)) == Poly::from_ints(&[4, 0, 11, 0, 1]);
        }
    }
    line("9", "x^(2n)/(2n) + x^2/2 + 1: Z_R(H) = 0 and closed form", ok, "n = 2..6, -4H = x^4 + 11x^2 + 4 at n = 2")
}

fn monomial_gap() -> Line {
    let mut ok = true;
    let mut notes = Vec::new();
    for n in 3..=6usize {
        let p = &Poly::monomial(int(1), n) + &Poly::monomial(int(1), n - 2);
        let lo = drop_of(n);
        let hi = rat(((2 * n - 3) * (2 * n - 3)) as i64, (4 * n * (n - 2)) as i64);
        let count = |k: &Rational| zr(&q_reduced(&p, k).unwrap().q_num);
        let mid = count(&((&lo + &hi) / int(2)));
        let (left, right) = (count(&lo), count(&hi));
        ok &= mid == 4;
        ok &= family_monomial_gap(n, &int(1)).unwrap().all_hold();
        if n <= 4 {
            // the documented endpoint discrepancy must still be visible
            ok &= left == 2;
        }
        notes.push(format!("n={n}: mid {mid}, ends {left}/{right}"));
    }
    line("10", "x^n + x^(n-2): Z_R(Q) = 4 inside the window; left end gives 2 for n = 3, 4", ok, notes.join("; "))
}

fn theorem7() -> Line {
    let eps = rat(1, 10);
    let want = [rat(1, 10), rat(1, 4), rat(2, 5)];
    let mut ok = true;
    let mut notes = Vec::new();
    for n in 1..=3usize {
        let s = match theorem7_search(n, &eps) {
            Ok(s) => s,
            Err(e) => {
                ok = false;
                notes.push(format!("n={n}: {e}"));
                continue;
            }
        };
        let ks: Vec<Rational> = s.verification.iter().map(|v| v.kappa.clone()).collect();
        ok &= ks == want;
        for k in &want {
            // recount on H itself, where no zero is shared with p'
            let h = h_kappa(&s.p, k).unwrap();
            let shared = !h.gcd(&s.p.derivative(1)).unwrap().is_constant();
            let c = RootCounter::new(&h).unwrap().count_real();
            ok &= !shared && c == 4 * n - 2;
        }
        notes.push(format!("n={n}: B = {}", format_rational(&s.b)));
    }
    line("11", "dyadic B with 4n-2 zeros at k in {1/10, 1/4, 2/5}", ok, notes.join(", "))
}

fn worked_example() -> Line {
    let x = Poly::x();
    let p = &(&(&(&x * &x) * &Poly::from_ints(&[-1, 1])) * &(&Poly::from_ints(&[-2, 1]) * &Poly::from_ints(&[10, 1])))
        + &Poly::constant(rat(1, 10));
    let dp = p.derivative(1);
    let tol = rat(ROOT_WINDOW.0, ROOT_WINDOW.1);
    let mut ok = dp == Poly::from_ints(&[0, 40, -84, 28, 5]) && zr(&dp) == 4;
    // zero is exact; the others are bracketed by a sign change of p'
    ok &= dp.eval(&int(0)).is_zero();
    for a in [rat(-7865, 1000), rat(617, 1000), rat(1648, 1000)] {
        let (l, r) = (dp.eval(&(&a - &tol)), dp.eval(&(&a + &tol)));
        ok &= (&l * &r).is_negative();
    }
    let xi1 = isolate_roots(&dp).unwrap().roots[0].clone();
    let q = q_reduced(&p, &rat(2, 3)).unwrap().q_num;
    let count = count_roots_with_multiplicity(&q, &IntervalSpec::open(Endpoint::Alg(xi1), Endpoint::At(int(0)))).unwrap();
    ok &= count == 3;
    let mut ms = Vec::new();
    for (xv, lo, hi) in M_WINDOWS {
        let xv = rat(xv.0, xv.1);
        let d = dp.eval(&xv);
        let m = p.eval(&xv) * p.derivative(2).eval(&xv) / (&d * &d);
        ok &= m > rat(lo.0, lo.1) && m < rat(hi.0, hi.1);
        ms.push(format!("M({}) ~ {:.4}", format_rational(&xv), hawaii::roots::ratio_to_f64(&m)));
    }
    let fam = section16_example().unwrap();
    ok &= fam.p == p && fam.all_hold();
    line("12", "worked example: critical points, 3 zeros of Q_2/3 on (xi_1, 0), M windows", ok, format!("count {count}; {}", ms.join(", ")))
}

fn jensen() -> Line {
    let mut r = rng(13);
    let mut bad = 0;
    for i in 0..100 {
        let p = draw(&mut r, RootMode::Arbitrary, degree(i, 2, 6));
        let (x, y) = (random_rational(&mut r, 3, 7), random_rational(&mut r, 3, 7));
        let n = p.degree() as usize;
        let mut lhs = Rational::zero();
        let mut ypow = Rational::one();
        for k in 0..=n {
            lhs += jensen_pk(&p, k).unwrap().eval(&x) * &ypow / factorial(2 * k);
            ypow *= &y * &y;
        }
        let prod = &p.eval_complex(&ComplexRational::new(x.clone(), y.clone())) * &p.eval_complex(&ComplexRational::new(x, -y));
        bad += usize::from(!(prod.im.is_zero() && prod.re == lhs));
    }
    line("13", "sum P_k(x) y^2k/(2k)! = p(x+iy) p(x-iy)", bad == 0, format!("100 random (p, x, y), degree <= 6, {bad} mismatches"))
}

fn polya_and_shapiro() -> Line {
    let mut r = rng(14);
    let mut bad_id = 0;
    for i in 0..100 {
        let p = draw(&mut r, RootMode::Arbitrary, degree(i, 2, 8));
        let n = p.degree() as i64;
        let d1 = p.derivative(1);
        let direct = &(&d1 * &d1).scale(&int(n - 1)) - &(&p * &p.derivative(2)).scale(&int(n));
        bad_id += usize::from(shapiro_polynomial(&p).unwrap() != direct || direct != h_kappa(&p, &drop_of(n as usize)).unwrap().scale(&int(n)));
        for k in 1..n as usize {
            let m = n - k as i64 + 1;
            let via = h_kappa(&p.derivative(k - 1), &rat(m - 1, m)).unwrap().scale(&int(m));
            let a = p.derivative(k);
            let g = &(&a * &a).scale(&int(n - k as i64)) - &(&p.derivative(k - 1) * &p.derivative(k + 1)).scale(&int(m));
            bad_id += usize::from(g != via || polya_gk(&p, k).unwrap() != g);
        }
    }
    let mut bad_pos = 0;
    for i in 0..100 {
        let p = draw(&mut r, RootMode::RealRooted, degree(i, 2, 8));
        for k in 1..p.degree() as usize {
            let g = polya_gk(&p, k).unwrap();
            bad_pos += usize::from(zr(&g) != 0 || !g.eval(&int(0)).is_positive());
        }
    }
    line(
        "14",
        "Polya bridge, Shapiro identity, G_k > 0 on real-rooted p",
        bad_id == 0 && bad_pos == 0,
        format!("identities: {bad_id} mismatches on 100; positivity: {bad_pos} failures on 100"),
    )
}

/// Values of `p, p', p'', p'''` at `x`.
fn jet(p: &Poly, x: &Rational) -> [Rational; 4] {
    [0, 1, 2, 3].map(|j| p.derivative(j).eval(x))
}

fn rolle() -> Line {
    let mut r = rng(15);
    let mut bad_id = 0;
    for i in 0..200 {
        let p = draw(&mut r, RootMode::Arbitrary, degree(i, 3, 8));
        let k = loop {
            let k = random_rational(&mut r, 3, 5);
            if !k.is_zero() {
                break k;
            }
        };
        let k2 = int(2) - Rational::one() / &k;
        let c = (int(2) * &k - int(1)) / &k;
        // both sides have degree below 3n, so agreement at 3n points is an identity
        let n = p.degree() as i64;
        for t in 0..3 * n {
            let x = rat(t - n, 3);
            let [p0, p1, p2, p3] = jet(&p, &x);
            let h = &k * &p1 * &p1 - &p0 * &p2;
            let dh = int(2) * &k * &p1 * &p2 - &p1 * &p2 - &p0 * &p3;
            let hd = &k2 * &p2 * &p2 - &p1 * &p3;
            let first = &dh * &p1 - &hd * &p0 - &c * &h * &p2;
            let second = &dh * &p2 - &k * &hd * &p1 - &h * &p3;
            bad_id += usize::from(!(first.is_zero() && second.is_zero()));
        }
    }

    let (mut applicable, mut bad, mut attempts) = (0, 0, 0);
    while applicable < 500 && attempts < 20_000 {
        attempts += 1;
        let p = draw(&mut r, RootMode::Arbitrary, degree(attempts, 3, 7));
        let k = random_rational(&mut r, 3, 5);
        if k.is_zero() {
            continue;
        }
        let lo = random_rational(&mut r, 4, 4);
        let hi = &lo + rat(r.gen_range(1..=16), 8);
        let closed = IntervalSpec::closed_rat(lo.clone(), hi.clone());
        let free = |q: &Poly| count_distinct_roots(q, &closed).unwrap() == 0;
        let (d1, d2) = (p.derivative(1), p.derivative(2));
        if !(free(&d1) && (free(&p) || free(&d2))) {
            continue;
        }
        let h = h_kappa(&p, &k).unwrap();
        let hd = h_kappa(&d1, &(int(2) - Rational::one() / &k)).unwrap();
        if h.is_zero() || hd.is_zero() {
            continue;
        }
        applicable += 1;
        let open = IntervalSpec::open_rat(lo, hi);
        let lhs = count_roots_with_multiplicity(&h, &open).unwrap();
        let rhs = count_roots_with_multiplicity(&hd, &open).unwrap();
        bad += usize::from(lhs > rhs + 1);
    }
    line(
        "15",
        "derivative identities for H and the Rolle-type inequality",
        bad_id == 0 && bad == 0 && applicable == 500,
        format!("identities on 200 (p, k): {bad_id} mismatches; inequality on {applicable} triples: {bad} failures"),
    )
}

fn inner_bound() -> Line {
    let mut r = rng(16);
    let (mut bad, mut checks) = (0, 0);
    for i in 0..100 {
        let p = draw(&mut r, RootMode::RealRooted, degree(i, 3, 8));
        let n = p.degree() as usize;
        let part = interval_partition(&p).unwrap();
        for s in 2..=(n + 1) / 2 {
            let h = h_kappa(&p, &rat((n - s) as i64, (n - s + 1) as i64)).unwrap();
            for idx in [s - 1, n - s] {
                let span = &part.intervals[idx].span;
                checks += 1;
                let zeros = count_roots_with_multiplicity(&h, span).unwrap();
                bad += usize::from(zeros != 0 || !h.eval(&interior_point(span)).is_positive());
            }
        }
    }
    line("16", "H_{(n-s)/(n-s+1)} has no zeros on I_s and I_(n-s+1)", bad == 0, format!("100 real-rooted polynomials, {checks} interval checks, {bad} failures"))
}

fn lower_bounds() -> Vec<Line> {
    let mut r = rng(17);
    let (mut checks, mut bad, mut bad_multiple, mut bad_alt) = (0, 0, 0, 0);
    let mut example = None;
    for i in 0..200 {
        let p = draw(&mut r, RootMode::Arbitrary, degree(i, 2, 8));
        let n = p.degree() as usize;
        let pre = check_preconditions(&p).unwrap();
        let poles = interval_partition(&p).unwrap().poles.len() as i64;
        for k in [int(2), drop_of(n) + rat(1, 7), rat(1, 3), int(-2)] {
            let Some(v) = predict(&p, &k).unwrap().into_iter().find(|v| v.id == TheoremId::LowerBound) else {
                continue;
            };
            if !v.applicable {
                continue;
            }
            checks += 1;
            let zq = zr(&q_reduced(&p, &k).unwrap().q_num) as i64;
            let zp = pre.distinct_real_p as i64;
            // same regimes with the poles of M in place of the real zeros of p'
            let alt = if k > drop_of(n) {
                poles + 1 - zp
            } else if k.is_positive() {
                poles - 1 - zp
            } else {
                poles - 1 + zp
            };
            bad_alt += usize::from(zq < alt);
            if v.failed() {
                bad += 1;
                if !pre.p_real_roots_simple {
                    bad_multiple += 1;
                } else if example.is_none() {
                    example = Some(format!("{p} at k = {}", format_rational(&k)));
                }
            }
        }
    }
    let simple_bad = bad - bad_multiple;
    let cubic = Poly::from_ints(&[0, 0, -1, 1]);
    let pinned: Vec<String> = [int(2), int(-2)]
        .iter()
        .map(|k| {
            let v = predict(&cubic, k).unwrap().into_iter().find(|v| v.id == TheoremId::LowerBound).unwrap();
            format!("k = {}: Z_R(Q) = {} vs {}", format_rational(k), v.computed.unwrap(), v.predicted.unwrap())
        })
        .collect();
    vec![
        line(
            "17",
            "lower bounds on Z_R(Q_k) for arbitrary p",
            bad == 0,
            format!(
                "{checks} checks on 200 polynomials, {bad} failures ({bad_multiple} with a multiple real root, {simple_bad} without{})",
                example.map(|e| format!("; e.g. {e}")).unwrap_or_default()
            ),
        ),
        info("17a", "x^2 (x - 1)", pinned.join("; ")),
        info("17b", "bounds counted with poles of M instead of zeros of p'", format!("{bad_alt} failures on the same {checks} checks")),
    ]
}

fn sweep_consistency() -> Line {
    let mut r = rng(18);
    let step = rat(SWEEP_STEP.0, SWEEP_STEP.1);
    let (lo, hi) = (int(SWEEP_RANGE.0), int(SWEEP_RANGE.1));
    let (mut compared, mut skipped, mut bad, mut polys) = (0, 0, 0, 0);
    while polys < 20 {
        let p = draw(&mut r, RootMode::Arbitrary, degree(polys, 2, 6));
        if p.squarefree_part().unwrap().degree() == 1 {
            continue;
        }
        polys += 1;
        let bp = kappa_breakpoints_exact(&p).unwrap();
        for row in kappa_sweep_grid(&p, &lo, &hi, &step).unwrap() {
            let near = bp.points.iter().any(|b| {
                b.cmp_rational(&(&row.kappa - &step)) != Ordering::Less && b.cmp_rational(&(&row.kappa + &step)) != Ordering::Greater
            });
            let Some(g) = bp.gap_of(&row.kappa).filter(|_| !near) else {
                skipped += 1;
                continue;
            };
            compared += 1;
            let gap = &bp.gaps[g];
            bad += usize::from(row.z_r_h != Some(gap.z_r_h) || row.z_r_q != Some(gap.z_r_q));
        }
    }
    line(
        "18",
        "exact breakpoints and the 1/100 grid give the same step function",
        bad == 0,
        format!("20 polynomials, {compared} grid points compared, {skipped} near breakpoints skipped, {bad} mismatches"),
    )
}

fn parity() -> Line {
    let mut r = rng(19);
    let (mut cases, mut intervals, mut bad, mut attempts) = (0, 0, 0, 0);
    while cases < 200 && attempts < 5_000 {
        attempts += 1;
        let p = draw(&mut r, RootMode::PRealSimple, degree(attempts, 2, 8));
        let k = random_rational(&mut r, 2, 12);
        let part = interval_partition(&p).unwrap();
        if part.poles.is_empty() || kappa_breakpoints_exact(&p).unwrap().gap_of(&k).is_none() {
            continue;
        }
        let n = p.degree() as usize;
        let drop = drop_of(n);
        let report = per_interval_counts_with(&p, &k, &part).unwrap();
        cases += 1;
        for (iv, c) in part.intervals.iter().zip(&report.per_interval) {
            let first = iv.kind == IntervalKind::First;
            // true means even
            let want = if iv.is_finite() {
                first
            } else if k == drop {
                continue;
            } else {
                first == (k > drop)
            };
            intervals += 1;
            bad += usize::from(want != (c.count_q % 2 == 0));
        }
    }
    line(
        "19",
        "parity of Z(Q_k) on each interval",
        bad == 0 && cases == 200,
        format!("{cases} (p, k) pairs off breakpoints, {intervals} intervals, {bad} wrong parities"),
    )
}

fn main() {
    let start = Instant::now();
    let mut lines = vec![laguerre(), hawaii_inequality()];
    lines.extend(above_drop());
    lines.extend([
        nonpositive(),
        small_kappa(),
        regimes(),
        binomial(),
        shapiro_quartic(),
        shapiro_even(),
        monomial_gap(),
        theorem7(),
        worked_example(),
        jensen(),
        polya_and_shapiro(),
        rolle(),
        inner_bound(),
    ]);
    lines.extend(lower_bounds());
    lines.extend([sweep_consistency(), parity()]);

    let mut unexpected = 0;
    let (mut pass, mut fail) = (0, 0);
    for l in &lines {
        let known = l.id.parse::<u32>().ok().and_then(|id| KNOWN_FAILURES.iter().find(|(k, _)| *k == id));
        let tag = match (l.status, known) {
            (Status::Pass, _) => {
                pass += 1;
                "PASS".to_string()
            }
            (Status::Info, _) => "INFO".to_string(),
            (Status::Fail, Some((_, why))) => {
                fail += 1;
                format!("FAIL (known: {why})")
            }
            (Status::Fail, None) => {
                fail += 1;
                unexpected += 1;
                "FAIL".to_string()
            }
        };
        println!("[{tag}] {:>3} {}: {}", l.id, l.name, l.detail);
    }
    for (id, _) in KNOWN_FAILURES {
        let now = lines.iter().find(|l| l.id == id.to_string()).map(|l| l.status);
        if now == Some(Status::Pass) {
            println!("note: criterion {id} is listed as a known failure but now passes");
        }
    }
    println!(
        "acceptance: {pass} passed, {fail} failed ({unexpected} unexpected) in {:.1}s",
        start.elapsed().as_secs_f64()
    );
    if unexpected > 0 {
        std::process::exit(1);
    }
}
