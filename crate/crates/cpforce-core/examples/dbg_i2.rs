use cpforce_core::kernels::*;
use cpforce_core::quad::Tol;

fn main() {
    let m = KernelMedium::Dielectric(2.0);
    let sigma = Polarization::Parallel;
    // brute force in u-space: t = 1-u^2, Simpson with 2e6 intervals
    let n = 2_000_000usize;
    let h = 1.0 / n as f64;
    let f = |u: f64| 2.0 * u * i2_subtracted(sigma, 1.0 - u * u, m);
    let mut sum = f(0.0) + f(1.0);
    for k in 1..n {
        let w = if k % 2 == 1 { 4.0 } else { 2.0 };
        sum += w * f(k as f64 * h);
    }
    let oracle = sum * h / 3.0;
    let quad = integrate_sqrt_endpoint(|t| i2_subtracted(sigma, t, m), &[], Tol::new(1e-13, 1e-11));
    println!("simpson u-space : {oracle:.12}");
    println!("integrate_sqrt  : {:.12}  abs_err={:.3e} converged={} evals={}", quad.value, quad.abs_err, quad.converged, quad.evals);
    let ep = kernel_endpoints(sigma, m);
    println!("K_par = {:.12}  (expect 0.116563450259)", ep.t0 - quad.value);
    println!("K_par oracle = {:.12}", ep.t0 - oracle);
    // sample integrand around panels
    for u in [0.1, 0.3, 0.5, 0.7, 0.9, 0.94, 0.96, 0.98, 0.99, 0.995, 0.999] {
        println!("u={u:.3} t={:.5} f={:.9}", 1.0-u*u, f(u));
    }
}
