//! Acceptance suite: one line per criterion, nonzero exit on any failure.

mod common;

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use equik::groups::FgAbelianGroup;
use equik::join::{
    boundary_matrices, build_join_complex, join_k_theory_formula, mayer_vietoris_delta,
    reduced_homology,
};
use equik::linalg::{snf, Matrix};
use equik::modules::{
    circle_module, element_stable_nonvanishing, ideal_image, kunneth_pieces,
    max_nonvanishing_power, stable_nonvanishing_under, truncated_ring_module,
};
use equik::ring::{
    content, cyclic_ring, ideal_power, lambda_expansion, lattice_quotient, product_ring,
    regular_class_check, BasedRing, FusionRing, RingSpec,
};
use equik::rokhlin::{
    circle_ah_dimension, commutative_dimension, tensor_rule, z2_af_bounds, z6_collapse_report,
    ActionDescriptor, Certificate, CommutativeGroup, DimBound, Report, TensorRule, Upper,
};
use equik::IntMatrix;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

fn b(n: i64) -> BigInt {
    BigInt::from(n)
}

fn rows(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    m.row_vecs()
}

fn z(n: usize) -> std::sync::Arc<BasedRing> {
    cyclic_ring(n).unwrap().based().clone()
}

fn c1_snf() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut minor_checked = 0;
    for case in 0..200 {
        let (r, c) = (rng.gen_range(1..=8), rng.gen_range(1..=8));
        let entries = (0..r * c).map(|_| b(rng.gen_range(-9..=9))).collect();
        let a = Matrix::new(r, c, entries).unwrap();
        let s = snf(&a);
        let uav = common::mat_mul(&common::mat_mul(&rows(&s.u), &rows(&a), r, c), &rows(&s.v), c, c);
        ensure!(uav == rows(&s.d), "case {case}: U·A·V ≠ D for {a:?}");
        ensure!(common::det(&rows(&s.u)).abs().is_one(), "case {case}: U not unimodular");
        ensure!(common::det(&rows(&s.v)).abs().is_one(), "case {case}: V not unimodular");
        for i in 0..r {
            for j in 0..c {
                ensure!(i == j || s.d.get(i, j).is_zero(), "case {case}: D not diagonal");
            }
        }
        let diag: Vec<BigInt> = (0..r.min(c)).map(|i| s.d.get(i, i).clone()).collect();
        let rank = diag.iter().take_while(|x| !x.is_zero()).count();
        ensure!(diag[rank..].iter().all(Zero::is_zero), "case {case}: zeros not trailing");
        ensure!(common::is_divisor_chain(&diag[..rank]), "case {case}: not a divisor chain: {diag:?}");
        if r <= 4 && c <= 4 {
            minor_checked += 1;
            let mut prod = BigInt::one();
            for k in 1..=r.min(c) {
                if k <= rank {
                    prod *= &diag[k - 1];
                } else {
                    prod = BigInt::zero();
                }
                let g = common::minor_gcd(&rows(&a), k);
                ensure!(g == prod, "case {case}: {k}x{k} minor gcd {g} vs {prod}");
            }
        }
    }
    Ok(format!("200 matrices, {minor_checked} minor-gcd checks"))
}

fn c2_join_oracle() -> Outcome {
    let mut cases: Vec<(usize, usize)> = (1..=4).flat_map(|n| (1..=4).map(move |k| (n, k))).collect();
    cases.extend((5..=6).map(|k| (2, k)));
    for &(n, k) in &cases {
        let f = join_k_theory_formula(n, k).map_err(|e| e.to_string())?;
        // independent closed form
        let wedge = BigInt::from(n - 1).pow(k as u32);
        let expect = if k % 2 == 1 { (&wedge + 1, b(0)) } else { (b(1), wedge) };
        ensure!((f.k0_rank.clone(), f.k1_rank.clone()) == expect, "N={n} k={k}: formula {f:?}");
        let c = build_join_complex(n, k).map_err(|e| e.to_string())?;
        let chain = boundary_matrices(&c);
        ensure!(chain.boundary_squared_vanishes(), "N={n} k={k}: ∂∂ ≠ 0");
        let h = reduced_homology(&chain);
        let (mut even, mut odd) = (b(1), b(0));
        for (d, g) in h.groups().iter().enumerate() {
            ensure!(g.is_torsion_free(), "N={n} k={k}: torsion in H{d}: {g}");
            if d % 2 == 0 {
                even += g.free_rank();
            } else {
                odd += g.free_rank();
            }
        }
        ensure!(even == f.k0_rank && odd == f.k1_rank, "N={n} k={k}: Betti ({even},{odd}) vs formula {f:?}");
    }
    Ok(format!("{} (N,k) pairs", cases.len()))
}

fn c3_spheres() -> Outcome {
    for k in 1..=6 {
        let h = reduced_homology(&boundary_matrices(&build_join_complex(2, k).unwrap()));
        for (d, g) in h.groups().iter().enumerate() {
            let expect = if d + 1 == k { FgAbelianGroup::free(1) } else { FgAbelianGroup::trivial() };
            ensure!(*g == expect, "k={k}: H{d} = {g}, sphere S^{} needs {expect}", k - 1);
        }
    }
    Ok("k = 1..6".into())
}

fn c4_mayer_vietoris() -> Outcome {
    for l in 1..=5 {
        for n in 1..=5 {
            let d = mayer_vietoris_delta(l, n).map_err(|e| e.to_string())?;
            ensure!(d.matrix.shape() == (l + n, l * n), "l={l} N={n}: shape");
            ensure!(d.kernel_rank == 1, "l={l} N={n}: kernel rank {}", d.kernel_rank);
            let expect = FgAbelianGroup::free(l * n + 1 - l - n);
            ensure!(d.cokernel == expect, "l={l} N={n}: cokernel {} vs {expect}", d.cokernel);
        }
    }
    Ok("25 pairs".into())
}

fn c5_filtration() -> Outcome {
    for p in [3usize, 5, 7] {
        let r = z(p);
        let mut powers = vec![ideal_power(&r, 1).map_err(|e| e.to_string())?];
        for m in 2..=5 {
            powers.push(ideal_power(&r, m).map_err(|e| e.to_string())?);
        }
        for m in 1..=4 {
            let q = lattice_quotient(&powers[m - 1], &powers[m]).map_err(|e| e.to_string())?;
            ensure!(q == FgAbelianGroup::cyclic(p as i64), "p={p} m={m}: quotient {q}");
        }
    }
    for m in 1..=6u32 {
        let i = ideal_power(&z(2), m as usize).map_err(|e| e.to_string())?;
        ensure!(i.rank() == 1, "Z2 m={m}: rank {}", i.rank());
        let c = content(i.basis().row(0));
        ensure!(c == BigInt::from(2).pow(m - 1), "Z2 m={m}: content {c}");
    }
    Ok("p ∈ {3,5,7}, m ≤ 4; Z_2 contents m ≤ 6".into())
}

fn c6_lambda() -> Outcome {
    for p in [3usize, 5, 7, 9, 11] {
        let n = lambda_expansion(p).map_err(|e| e.to_string())?;
        ensure!(n == common::lambda_binomial(p as u64), "p={p}: {n:?} vs binomial oracle");
        let lam = common::lambda(p);
        let lhs = common::cyclic_pow(&lam, p);
        let mut rhs = vec![BigInt::zero(); p];
        for (j, c) in n.iter().enumerate() {
            for (acc, x) in rhs.iter_mut().zip(common::cyclic_pow(&lam, j + 1)) {
                *acc += c * x;
            }
        }
        ensure!(lhs == rhs, "p={p}: back-substitution fails");
        if p <= 7 {
            ensure!(n[0] == BigInt::from(-(p as i64)), "p={p}: n1 = {}", n[0]);
        }
    }
    Ok("p ∈ {3,5,7,9,11}".into())
}

fn c7_regular() -> Outcome {
    let mut rings: Vec<FusionRing> = (2..=7).map(|n| cyclic_ring(n).unwrap()).collect();
    rings.push(product_ring(&cyclic_ring(2).unwrap(), &cyclic_ring(3).unwrap()));
    rings.push(FusionRing::s3());
    for ring in &rings {
        let check = regular_class_check(ring);
        ensure!(check.annihilated, "{}: not annihilated", ring.name());
        // oracle: (e_i − dim_i·1)·reg = 0 from the raw structure constants
        let r = ring.rank();
        for i in 0..r {
            let mut out = vec![BigInt::zero(); r];
            for (j, dj) in ring.dims().iter().enumerate() {
                for (k, slot) in out.iter_mut().enumerate() {
                    *slot += dj * BigInt::from(ring.coefficient(i, j, k));
                }
                out[j] -= &ring.dims()[i] * dj;
            }
            ensure!(out.iter().all(Zero::is_zero), "{}: oracle fails at {i}", ring.name());
        }
    }
    Ok(format!("{} rings", rings.len()))
}

fn witness_group(b: &DimBound) -> Option<FgAbelianGroup> {
    match &b.lower_certificate {
        Certificate::AnnihilatorWitness(w) => Some(w.nonzero_group.clone()),
        _ => None,
    }
}

fn c8_z2_bounds() -> Outcome {
    for m in 1..=5u64 {
        let bound = z2_af_bounds(m).map_err(|e| e.to_string())?;
        ensure!(bound.lower == m && bound.upper == Upper::Finite(2 * m + 2), "m={m}: {}", bound.summary());
        let g = witness_group(&bound).ok_or("missing witness")?;
        ensure!(g == FgAbelianGroup::cyclic(2), "m={m}: witness {g}");
        let r = z(2);
        let q = lattice_quotient(&ideal_power(&r, m as usize).unwrap(), &ideal_power(&r, m as usize + 1).unwrap())
            .map_err(|e| e.to_string())?;
        ensure!(q == g, "m={m}: I^m/I^(m+1) = {q}");
        ensure!(equik::rokhlin::validate(&bound), "m={m}: does not validate");
    }
    Ok("m ≤ 5".into())
}

fn c9_circle() -> Outcome {
    for d in 0..=8u64 {
        let n = d as usize;
        let module = circle_module(n + 1).map_err(|e| e.to_string())?;
        let top = max_nonvanishing_power(&module, 10).map_err(|e| e.to_string())?;
        ensure!(top == d as i64, "d={d}: max nonvanishing power {top}");
        let one = module.generator(0);
        for k in 0..=n {
            ensure!(
                element_stable_nonvanishing(&module, &one, k, &b(2)).map_err(|e| e.to_string())?,
                "d={d}: I^{k}·2^j[1] vanishes"
            );
        }
        let bound = circle_ah_dimension(d).map_err(|e| e.to_string())?;
        ensure!(bound.lower == d && bound.upper == Upper::Finite(d), "d={d}: {}", bound.summary());
        ensure!(equik::rokhlin::validate(&bound), "d={d}: does not validate");
    }
    Ok("d ≤ 8".into())
}

fn c10_kunneth() -> Outcome {
    for g in [3usize, 5] {
        for m in 1..=4usize {
            let left = truncated_ring_module(&z(2), m + 1).map_err(|e| e.to_string())?;
            let right = truncated_ring_module(&z(g), 1).map_err(|e| e.to_string())?;
            let k = kunneth_pieces(&left, &right).map_err(|e| e.to_string())?;
            let ideal = ideal_power(&z(2), m)
                .and_then(|i| i.extend_to_product(&z(g)))
                .map_err(|e| e.to_string())?;
            let image = ideal_image(&ideal, &k.tensor).map_err(|e| e.to_string())?;
            ensure!(image == FgAbelianGroup::cyclic(2), "G=Z{g} m={m}: image {image}");
            let x = k.tensor.generator(0);
            let stable = stable_nonvanishing_under(&ideal, &k.tensor, &x, &b(g as i64)).map_err(|e| e.to_string())?;
            ensure!(stable, "G=Z{g} m={m}: killed by multiplication by {g}");
            let doubled = stable_nonvanishing_under(&ideal, &k.tensor, &x, &b(2)).map_err(|e| e.to_string())?;
            ensure!(!doubled, "G=Z{g} m={m}: Z_2 witness survives doubling");
        }
    }
    Ok("G ∈ {Z_3, Z_5}, m ≤ 4".into())
}

fn c11_ceiling() -> Outcome {
    let mut rings: Vec<(String, std::sync::Arc<BasedRing>)> =
        (2..=7).map(|n| (format!("Z{n}"), z(n))).collect();
    rings.push(("Z2xZ3".into(), product_ring(&cyclic_ring(2).unwrap(), &cyclic_ring(3).unwrap()).based().clone()));
    rings.push(("S3".into(), FusionRing::s3().based().clone()));
    let mut checked = 0;
    for d in 1..=6 {
        for (name, r) in &rings {
            let module = truncated_ring_module(r, d).map_err(|e| e.to_string())?;
            let i = ideal_power(r, d).map_err(|e| e.to_string())?;
            let img = ideal_image(&i, &module).map_err(|e| e.to_string())?;
            ensure!(img.is_trivial(), "{name} d={d}: I^d·M = {img}");
            checked += 1;
        }
        let module = circle_module(d).map_err(|e| e.to_string())?;
        let top = max_nonvanishing_power(&module, 10).map_err(|e| e.to_string())?;
        ensure!(top < d as i64, "circle d={d}: I^d·M ≠ 0");
        checked += 1;
    }
    Ok(format!("{checked} (model, d) pairs"))
}

fn c12_calculus() -> Outcome {
    let z3 = RingSpec::named("z3").unwrap();
    let mut bounds = vec![DimBound::rokhlin(), DimBound::unknown()];
    for m in 1..=3 {
        bounds.push(z2_af_bounds(m).map_err(|e| e.to_string())?);
    }
    bounds.push(circle_ah_dimension(2).map_err(|e| e.to_string())?);
    for bd in &bounds {
        let min = tensor_rule(TensorRule::Min, bd, bd).map_err(|e| e.to_string())?;
        ensure!(min.upper == bd.upper, "min unit law fails for {}", bd.summary());
        let sum = tensor_rule(TensorRule::Sum, bd, &DimBound::rokhlin()).map_err(|e| e.to_string())?;
        ensure!(sum.upper == bd.upper, "sum unit law fails for {}", bd.summary());
        ensure!(equik::rokhlin::validate(&min) && equik::rokhlin::validate(&sum), "rule output does not validate");
    }
    for d in 1..=3u64 {
        let r = z6_collapse_report(d).map_err(|e| e.to_string())?;
        ensure!(r.factor1.lower > d && r.factor2.lower > d, "d={d}: factor lowers {} {}", r.factor1.lower, r.factor2.lower);
        ensure!(r.product.lower == 0 && r.product.upper == Upper::Finite(0), "d={d}: product {}", r.product.summary());
        ensure!(r.non_monotone(), "d={d}: no collapse");
    }
    let mut descriptors = Vec::new();
    for m in 1..=3 {
        descriptors.push(ActionDescriptor::Z2Af { m });
        descriptors.push(ActionDescriptor::ProductZ2G { m, group: z3.clone() });
    }
    for d in 0..=3 {
        descriptors.push(ActionDescriptor::CircleAh { d });
        descriptors.push(ActionDescriptor::CircleProduct { d, group: z3.clone() });
    }
    for d in 1..=3 {
        descriptors.push(ActionDescriptor::Z6Collapse { d });
    }
    for k in 1..=4 {
        descriptors.push(ActionDescriptor::CommutativeJoin { group: CommutativeGroup::Cyclic(2), copies: k });
    }
    for g in ["z2", "z3", "s3"] {
        descriptors.push(ActionDescriptor::FiniteGroupAf { group: RingSpec::named(g).unwrap(), n: 2 });
    }
    for desc in &descriptors {
        let r = Report::build(desc).map_err(|e| e.to_string())?;
        let back = Report::from_json(&r.to_json()).map_err(|e| e.to_string())?;
        ensure!(back.validate(), "{} {:?}: {:?}", desc.name(), desc.parameters(), back.check());
    }
    let mut forged = z2_af_bounds(3).map_err(|e| e.to_string())?;
    forged.lower = 5;
    if let Certificate::AnnihilatorWitness(w) = &mut forged.lower_certificate {
        w.power = 5;
    }
    ensure!(!equik::rokhlin::validate(&forged), "forged lower 5 on TruncatedZ2(3) validates");
    ensure!(equik::rokhlin::validate(&DimBound::unknown()), "vacuous bound rejected");
    Ok(format!("{} reports validated, forgery rejected", descriptors.len()))
}

fn c13_commutative() -> Outcome {
    for g in [CommutativeGroup::Cyclic(2), CommutativeGroup::Cyclic(3), CommutativeGroup::Circle] {
        for k in 1..=6u64 {
            let c = commutative_dimension(g, k).map_err(|e| e.to_string())?;
            ensure!(c.dim == k - 1 && c.ind == k && c.dim + 1 == c.ind, "{g} k={k}: ({}, {})", c.dim, c.ind);
            if g == CommutativeGroup::Cyclic(2) {
                ensure!(c.sphere_checked == Some(true), "{g} k={k}: sphere check {:?}", c.sphere_checked);
            }
            ensure!(equik::rokhlin::validate(&c.bound), "{g} k={k}: does not validate");
        }
    }
    Ok("G ∈ {Z_2, Z_3, S^1}, k ≤ 6".into())
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);
    let criteria: [Criterion; 13] = [
        ("SNF soundness", c1_snf, Some(Duration::from_secs(5))),
        ("join K-theory vs homology oracle", c2_join_oracle, Some(Duration::from_secs(60))),
        ("sphere identification", c3_spheres, None),
        ("Mayer-Vietoris connecting map", c4_mayer_vietoris, None),
        ("I-adic filtration", c5_filtration, Some(Duration::from_secs(10))),
        ("lambda^p expansion", c6_lambda, None),
        ("regular class annihilation", c7_regular, None),
        ("Z_2 bounds", c8_z2_bounds, None),
        ("circle exactness", c9_circle, None),
        ("Kunneth product certificate", c10_kunneth, None),
        ("annihilation ceiling", c11_ceiling, None),
        ("calculus laws and validation", c12_calculus, None),
        ("commutative case", c13_commutative, None),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = match (result, limit) {
            (Ok(_), Some(l)) if elapsed > *l => Err(format!("took {elapsed:.2?}, limit {l:?}")),
            (r, _) => r,
        };
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({elapsed:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} ({elapsed:.2?})", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
