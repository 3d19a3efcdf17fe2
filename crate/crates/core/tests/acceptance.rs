//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::time::{Duration, Instant};

use kgeom::centers::{center_coords, isosceles_rotation_center, to_barycentric, CenterId};
use kgeom::embedding::{
    edge_planes, embedded_to_stereo, from_geodesic_polar, geodesic_distance, geodesic_polar_to_planar, homog_to_stereo, planar_distance,
    stereo_to_embedded, stereo_to_homog, triangle_from_vertices, GeodesicPolar, PlanarPoint, Translation,
};
use kgeom::gtrig::{cosg, sing, Curvature};
use kgeom::median_rotation::{
    doubled_points, median_point, polar_about, residual_median, rotation_center, PointSet, SolverOptions,
};
use kgeom::projective::HomPoint;
use kgeom::triangle::Triangle;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn k(v: f64) -> Curvature {
    Curvature::new(v).unwrap()
}

fn rel(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(f64::MIN_POSITIVE)
}

fn check(ok: bool, summary: String) -> Outcome {
    if ok {
        Ok(summary)
    } else {
        Err(summary)
    }
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

fn sample_vertices() -> [PlanarPoint; 3] {
    [
        PlanarPoint::new(4.0 / 5.0, 3.0 / 5.0),
        PlanarPoint::new(-8.0 / 15.0, 2.0 / 5.0),
        PlanarPoint::new(-2.0 / 5.0, -8.0 / 15.0),
    ]
}

fn vertex_median_pipeline(kv: f64) -> kgeom::Result<(Triangle, PlanarPoint)> {
    let v = sample_vertices();
    let t = triangle_from_vertices(&v, k(kv))?;
    let h = center_coords(&t, CenterId::VertexMedian)?;
    Ok((t, homog_to_stereo(&h, &v, k(kv))?))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let (t, p) = vertex_median_pipeline(1.0).map_err(|e| e.to_string())?;
    let planes = edge_planes(&sample_vertices(), k(1.0)).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();

    let r = 3131f64.sqrt();
    let want = [-(5.0 / 53.0) * (r - 55.0), (9.0 / 53.0) * (r - 55.0)];
    let err_p = rel(p.x1, want[0]).max(rel(p.x2, want[1]));
    let q = 29.0 * 3259321f64.sqrt();
    let err_cos = rel(t.cos_angles()[0], 35344.0 / q);
    let err_sin = rel(t.sin_angles()[0], 38625.0 / q);
    let c = planes[0].t_centered_coefficients(k(1.0)).unwrap();
    let s = c[0] / 15.0;
    let err_plane = [15.0, 28.0, 4.0, 15.0].iter().zip(c).map(|(w, g)| (g - s * w).abs() / s.abs()).fold(0.0, f64::max);
    check(
        err_p <= 1e-10 && err_cos <= 1e-10 && err_sin <= 1e-10 && err_plane <= 1e-10 && elapsed < Duration::from_secs(1),
        format!(
            "K=+1 vertex median rel err {err_p:.1e}, cosA {err_cos:.1e}, sinA {err_sin:.1e}, plane {err_plane:.1e}, {:.2} ms",
            ms(elapsed)
        ),
    )
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let (t, p) = vertex_median_pipeline(-1.0).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let q = 60978f64.sqrt();
    let want = [(250.0 - q) / 761.0, 39.0 * (250.0 - q) / 761.0];
    let err_p = rel(p.x1, want[0]).max(rel(p.x2, want[1]));
    let err_cos = rel(t.cos_angles()[1], 1039.0 / 16919921f64.sqrt());
    check(
        err_p <= 1e-10 && err_cos <= 1e-10 && elapsed < Duration::from_secs(1),
        format!("K=-1 vertex median rel err {err_p:.1e}, cosB {err_cos:.1e}, {:.2} ms", ms(elapsed)),
    )
}

fn criterion_3() -> Outcome {
    use std::f64::consts::{FRAC_PI_3, FRAC_PI_4, FRAC_PI_6};
    let g = GeodesicPolar { r: FRAC_PI_4, theta: [FRAC_PI_6.cos(), FRAC_PI_3.cos()] };
    let xi = from_geodesic_polar(&g, k(1.0)).and_then(|e| e.centered(k(1.0))).map_err(|e| e.to_string())?;
    let want = [2f64.sqrt() / 2.0, 6f64.sqrt() / 4.0, 2f64.sqrt() / 4.0];
    let err = (0..3).map(|i| (xi[i] - want[i]).abs()).fold(0.0, f64::max);
    check(err <= 1e-12, format!("polar (pi/4)(cos pi/6, cos pi/3) embeds with abs err {err:.1e}"))
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let start = Instant::now();
    let (mut pyth, mut dsin, mut dcos) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..100_000 {
        let kv: f64 = rng.gen_range(-4.0..4.0);
        let x: f64 = rng.gen_range(-3.0..3.0);
        let kk = k(kv);
        let (s, c) = (sing(x, kk), cosg(x, kk));
        let scale = (c * c).max((kv * s * s).abs()).max(1.0);
        pyth = pyth.max((c * c + kv * s * s - 1.0).abs() / scale);
        let s2 = sing(2.0 * x, kk);
        dsin = dsin.max((s2 - 2.0 * s * c).abs() / s2.abs().max(2.0 * (s * c).abs()).max(f64::MIN_POSITIVE));
        let c2 = cosg(2.0 * x, kk);
        dcos = dcos.max((c2 - (c * c - kv * s * s)).abs() / c2.abs().max(c * c).max(1.0));
    }
    let elapsed = start.elapsed();
    check(
        pyth <= 1e-9 && dsin <= 1e-10 && dcos <= 1e-10 && elapsed < Duration::from_secs(5),
        format!("1e5 samples: pythagorean {pyth:.1e}, sing 2x {dsin:.1e}, cosg 2x {dcos:.1e}, {:.0} ms", ms(elapsed)),
    )
}

fn random_triangle(rng: &mut ChaCha8Rng, kv: f64, radius: f64) -> ([PlanarPoint; 3], Triangle) {
    loop {
        let mut pick = || {
            let (r, a): (f64, f64) = (radius * rng.gen::<f64>().sqrt(), rng.gen_range(0.0..std::f64::consts::TAU));
            PlanarPoint::new(r * a.cos(), r * a.sin())
        };
        let v = [pick(), pick(), pick()];
        if let Ok(t) = triangle_from_vertices(&v, k(kv)) {
            if t.angles().iter().all(|&a| a > 0.1) {
                return (v, t);
            }
        }
    }
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut stereo = 0.0f64;
    for sign in [-1.0, 1.0] {
        for _ in 0..10_000 {
            let kv: f64 = sign * rng.gen_range(0.05..2.0);
            let rho = 1.0 / f64::sqrt(kv.abs());
            let rmax = if kv < 0.0 { 1.8 * rho } else { 4.0 * rho };
            let (r, a): (f64, f64) = (rng.gen_range(0.0..rmax), rng.gen_range(0.0..std::f64::consts::TAU));
            let p = PlanarPoint::new(r * a.cos(), r * a.sin());
            let e = stereo_to_embedded(&p, k(kv)).map_err(|e| e.to_string())?;
            let q = embedded_to_stereo(&e, k(kv)).map_err(|e| e.to_string())?;
            stereo = stereo.max(p.chart_distance(&q) / rho);
        }
    }
    let mut homog = 0.0f64;
    for kv in [-1.0, -0.5, 0.5, 1.0] {
        for _ in 0..500 {
            let (v, _) = random_triangle(&mut rng, kv, 1.0);
            let h = HomPoint::new(rng.gen_range(0.05..1.0), rng.gen_range(0.05..1.0), rng.gen_range(0.05..1.0)).unwrap();
            let p = homog_to_stereo(&h, &v, k(kv)).map_err(|e| e.to_string())?;
            let back = stereo_to_homog(&p, &v, k(kv)).map_err(|e| e.to_string())?;
            let (u, w) = (h.unit(), back.unit());
            homog = homog.max((0..3).map(|i| (u[i] - w[i]).abs()).fold(0.0, f64::max));
            let again = homog_to_stereo(&back, &v, k(kv)).map_err(|e| e.to_string())?;
            homog = homog.max(planar_distance(&p, &again, k(kv)).map_err(|e| e.to_string())?);
        }
    }
    check(
        stereo <= 1e-12 && homog <= 1e-9,
        format!("stereo/embedded max err {stereo:.1e} (2e4 samples), homogeneous max err {homog:.1e}"),
    )
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (mut dist, mut resid) = (0.0f64, 0.0f64);
    for kv in [-1.0, 1.0] {
        for _ in 0..200 {
            let (v, t) = random_triangle(&mut rng, kv, 1.2);
            let h = center_coords(&t, CenterId::VertexMedian).map_err(|e| e.to_string())?;
            let want = homog_to_stereo(&h, &v, k(kv)).map_err(|e| e.to_string())?;
            let ps = PointSet::new(v.to_vec(), k(kv)).map_err(|e| e.to_string())?;
            let got = median_point(&ps).map_err(|e| e.to_string())?;
            dist = dist.max(planar_distance(&got, &want, k(kv)).map_err(|e| e.to_string())?);
        }
        for n in 1..=20 {
            for _ in 0..10 {
                let pts = (0..n).map(|_| PlanarPoint::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
                let ps = PointSet::new(pts, k(kv)).map_err(|e| e.to_string())?;
                let m = median_point(&ps).map_err(|e| e.to_string())?;
                let r = residual_median(&m, &ps).map_err(|e| e.to_string())?;
                resid = resid.max(r.max_abs() / n as f64);
            }
        }
    }
    check(
        dist <= 1e-9 && resid <= 1e-10,
        format!("median vs cosecant center max distance {dist:.1e} (400 triangles), residual/n {resid:.1e}"),
    )
}

/// Isosceles triangle with legs `b` and base `c`, apex C, placed at a random
/// position and orientation.
fn random_isosceles(rng: &mut ChaCha8Rng, kv: f64) -> ([PlanarPoint; 3], Triangle) {
    let kk = k(kv);
    loop {
        let b = rng.gen_range(0.3..1.2);
        let c = rng.gen_range(0.2..1.6 * b);
        let Ok(t) = Triangle::from_sides(b, b, c, kk) else { continue };
        let (half, phi) = (0.5 * t.angles()[2], rng.gen_range(0.0..std::f64::consts::TAU));
        let at = |a: f64| geodesic_polar_to_planar(&GeodesicPolar { r: b, theta: [a.cos(), a.sin()] }, kk).unwrap();
        let local = [at(phi + half), at(phi - half), PlanarPoint::ORIGIN];
        let shift = PlanarPoint::new(rng.gen_range(-0.4..0.4), rng.gen_range(-0.4..0.4));
        let tr = Translation::to_point(&stereo_to_embedded(&shift, kk).unwrap(), kk).unwrap();
        let v = local.map(|p| {
            let xi = tr.apply(&stereo_to_embedded(&p, kk).unwrap().centered(kk).unwrap());
            embedded_to_stereo(&kgeom::EmbeddedPoint::from_centered(xi, kk).unwrap(), kk).unwrap()
        });
        return (v, t);
    }
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut dist, mut fixed) = (0.0f64, 0.0f64);
    let mut antipodal = 0;
    let opts = SolverOptions::default();
    for kv in [-1.0, 1.0] {
        for _ in 0..100 {
            let (v, t) = random_isosceles(&mut rng, kv);
            let kk = k(kv);
            let h = isosceles_rotation_center(&t).map_err(|e| e.to_string())?;
            let want = homog_to_stereo(&h, &v, kk).map_err(|e| e.to_string())?;
            let ps = PointSet::new(v.to_vec(), kk).map_err(|e| e.to_string())?;
            let got = rotation_center(&ps, None, &opts).map_err(|e| e.to_string())?.point;
            dist = dist.max(planar_distance(&got, &want, kk).map_err(|e| e.to_string())?);
            let doubled = doubled_points(&got, &ps).map_err(|e| e.to_string())?;
            // R always solves the median equation of the doubled set
            let r = residual_median(&got, &doubled).map_err(|e| e.to_string())?;
            fixed = fixed.max(r.max_abs() / 3.0);
            // The centroid projection picks R itself when the doubled points
            // sit around R (Σ cosg 2r > 0), otherwise R's antipode
            let m = median_point(&doubled).map_err(|e| e.to_string())?;
            let polar = polar_about(&got, &ps).map_err(|e| e.to_string())?;
            let em = stereo_to_embedded(&m, kk).map_err(|e| e.to_string())?;
            let mut xr = stereo_to_embedded(&got, kk).and_then(|e| e.centered(kk)).map_err(|e| e.to_string())?;
            if polar.iter().map(|g| cosg(2.0 * g.r, kk)).sum::<f64>() <= 0.0 {
                antipodal += 1;
                xr = xr.map(|x| -x);
            }
            let er = kgeom::EmbeddedPoint::from_centered(xr, kk).map_err(|e| e.to_string())?;
            fixed = fixed.max(geodesic_distance(&em, &er, kk).map_err(|e| e.to_string())?);
        }
    }
    check(
        dist <= 1e-9 && fixed <= 1e-9,
        format!("numeric vs closed-form rotation center max distance {dist:.1e} (200 triangles), doubling fixed point {fixed:.1e} ({antipodal} antipodal)"),
    )
}

fn normalized(t: &Triangle, id: CenterId) -> kgeom::Result<[f64; 3]> {
    Ok(center_coords(t, id)?.components())
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let opts = SolverOptions::default();
    let mut exact = 0.0f64;
    for _ in 0..200 {
        let (v, _) = random_triangle(&mut rng, 0.0, 1.0);
        let c = PlanarPoint::new((v[0].x1 + v[1].x1 + v[2].x1) / 3.0, (v[0].x2 + v[1].x2 + v[2].x2) / 3.0);
        let ps = PointSet::new(v.to_vec(), Curvature::EUCLIDEAN).map_err(|e| e.to_string())?;
        let m = median_point(&ps).map_err(|e| e.to_string())?;
        let r = rotation_center(&ps, None, &opts).map_err(|e| e.to_string())?.point;
        exact = exact.max(m.chart_distance(&c)).max(r.chart_distance(&c));
    }

    let mut limit = 0.0f64;
    let mut worst = String::new();
    for _ in 0..50 {
        let (a, b, c) = loop {
            let (a, b, c): (f64, f64, f64) = (rng.gen_range(0.5..1.5), rng.gen_range(0.5..1.5), rng.gen_range(0.5..1.5));
            let slack = (a + b - c).min(b + c - a).min(c + a - b);
            let spread = (a - b).abs().min((b - c).abs()).min((c - a).abs());
            if slack > 0.2 && spread > 0.05 {
                break (a, b, c);
            }
        };
        let flat = Triangle::from_sides(a, b, c, Curvature::EUCLIDEAN).map_err(|e| e.to_string())?;
        let iso_flat = Triangle::from_sides(b, b, c.min(1.8 * b), Curvature::EUCLIDEAN).map_err(|e| e.to_string())?;
        for kv in [-1e-8, 1e-8] {
            let t = Triangle::from_sides(a, b, c, k(kv)).map_err(|e| e.to_string())?;
            let iso = Triangle::from_sides(b, b, c.min(1.8 * b), k(kv)).map_err(|e| e.to_string())?;
            for id in CenterId::ALL {
                let (curved, euclid) = if id == CenterId::IsoscelesRotation { (&iso, &iso_flat) } else { (&t, &flat) };
                let got = normalized(curved, id).map_err(|e| e.to_string())?;
                let want = normalized(euclid, id).map_err(|e| e.to_string())?;
                let err = (0..3).map(|i| (got[i] - want[i]).abs()).fold(0.0, f64::max);
                if err > limit {
                    limit = err;
                    worst = id.to_string();
                }
            }
        }
    }
    check(
        exact <= 1e-14 && limit <= 1e-5,
        format!("k=0 median/rotation/centroid max diff {exact:.1e}; k=+-1e-8 catalog max diff {limit:.1e} ({worst})"),
    )
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut mismatches = 0;
    for _ in 0..1000 {
        let kv = rng.gen_range(-2.0..2.0);
        let (_, t) = random_triangle(&mut rng, kv, 0.9);
        let x = [rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)];
        let p = HomPoint::from_array(x).unwrap();
        let got = to_barycentric(&p, &t).map_err(|e| e.to_string())?.components();
        let [a, b, c] = t.sides();
        let kk = t.curvature();
        let want = [x[0] * sing(a, kk), x[1] * sing(b, kk), x[2] * sing(c, kk)];
        if got != want {
            mismatches += 1;
        }
    }
    let mut flat = 0.0f64;
    for _ in 0..200 {
        let (_, t) = random_triangle(&mut rng, 0.0, 1.0);
        let i = center_coords(&t, CenterId::Incenter).map_err(|e| e.to_string())?;
        let got = to_barycentric(&i, &t).map_err(|e| e.to_string())?.normalize().components();
        let [a, b, c] = t.sides();
        let want = HomPoint::new(a, b, c).unwrap().normalize().components();
        flat = flat.max((0..3).map(|j| (got[j] - want[j]).abs()).fold(0.0, f64::max));
    }
    check(
        mismatches == 0 && flat <= 1e-12,
        format!("{mismatches} inexact of 1000 conversions; flat incenter vs (a:b:c) max diff {flat:.1e}"),
    )
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let kk = k(1e-10);
    let mut worst = 0.0f64;
    let mut count = 0;
    while count < 10_000 {
        let (a, b, c): (f64, f64, f64) = (rng.gen_range(0.01..2.0), rng.gen_range(0.01..2.0), rng.gen_range(0.01..2.0));
        let Ok(t) = Triangle::from_sides(a, b, c, kk) else { continue };
        count += 1;
        let gamma = t.angles()[2];
        worst = worst.max((c * c - a * a - b * b + 2.0 * a * b * gamma.cos()).abs());
    }
    check(worst <= 1e-4, format!("k=1e-10 flat law of cosines max residual {worst:.1e} (1e4 triangles)"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("golden pipeline K=+1", criterion_1),
        ("golden pipeline K=-1", criterion_2),
        ("geodesic polar coordinates", criterion_3),
        ("generalized trig identities", criterion_4),
        ("round trips", criterion_5),
        ("median point", criterion_6),
        ("rotation center", criterion_7),
        ("Euclidean coincidence", criterion_8),
        ("barycentric conversion", criterion_9),
        ("near-flat law of cosines", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(msg) => println!("criterion {:>2} PASS  {name}: {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {msg}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
