//! Acceptance matrix. Prints one line per criterion and exits non-zero if
//! any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use quotcoh_core::bb_hilb2::{
    cell_dimensions, hilb2_count_polynomial, hilb2_dim, hilb2_poincare_cells,
};
use quotcoh_core::bb_rcells::{
    expected_r_circ_poincare, product_grassmannian_profile, r_circ_poincare, WeightAssignment,
};
use quotcoh_core::ffield::{
    blowup_count_identity, gl_order, hilb2_point_count_species, is_id_plus_square_zero,
    lmax_search, quot_census, singular_count, spanning_index, w_space,
};
use quotcoh_core::grassmann::{binomial, gaussian_binomial, grass_point_count, target_ring_series};
use quotcoh_core::quot_formulas::{
    blowup_assemble, degree_agreement, hilb2_series_closed, lmax, quot2_series, stable_quot2_series,
};
use quotcoh_core::{Budget, IntPolynomial};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn cells_equal_closed_form() -> Outcome {
    for n in 1..=10 {
        for r in 1..=10 {
            let cells = hilb2_poincare_cells(n, r).map_err(err)?;
            let closed = hilb2_series_closed(n, r).map_err(err)?;
            ensure(cells == closed, || {
                format!("n={n} r={r}: cells {cells} vs closed {closed}")
            })?;
        }
    }
    Ok("100 cases, zero tolerance".into())
}

fn blowup_assembly() -> Outcome {
    for n in 1..=10 {
        for r in 1..=10 {
            let a = blowup_assemble(n, r).map_err(err)?;
            let b = quot2_series(n, r).map_err(err)?;
            ensure(a == b, || format!("n={n} r={r}: {a} vs {b}"))?;
        }
    }
    for (n, r, expect) in [(2, 1, vec![1, 1]), (1, 1, vec![1]), (1, 2, vec![1, 1, 1])] {
        let got = quot2_series(n, r).map_err(err)?;
        ensure(got == IntPolynomial::from_i64s(&expect), || {
            format!("quot2({n},{r}) = {got}")
        })?;
    }
    Ok("100 cases + 3 spot values".into())
}

fn stable_limit() -> Outcome {
    for r in 1..=10 {
        let stable = stable_quot2_series(r, 50).map_err(err)?;
        let target = target_ring_series(2, r, 50).map_err(err)?;
        ensure(stable == target, || {
            format!("r={r}: stable series differs from target ring")
        })?;
    }
    for n in 1..=10 {
        for r in 1..=10 {
            let a = degree_agreement(n, r).map_err(err)?;
            ensure(a.first_mismatch == n + r - 1, || {
                format!("n={n} r={r}: first mismatch at q^{}", a.first_mismatch)
            })?;
        }
    }
    Ok("precision 50, r <= 10; first mismatch at n+r-1 for 100 cases".into())
}

fn euler_characteristic() -> Outcome {
    for n in 1..=10u64 {
        for r in 1..=10u64 {
            let chi = 3 * binomial(r, 2) + BigInt::from(r * n);
            let (nu, ru) = (n as usize, r as usize);
            let neg = hilb2_poincare_cells(nu, ru).map_err(err)?.eval_i64(1);
            let pos = hilb2_count_polynomial(nu, ru).map_err(err)?.eval_i64(1);
            ensure(neg == chi && pos == chi, || {
                format!("n={n} r={r}: {neg}, {pos} vs {chi}")
            })?;
            for c in cell_dimensions(nu, ru).map_err(err)? {
                ensure(c.positive_dim + c.negative_dim == hilb2_dim(nu, ru), || {
                    format!("{c:?}")
                })?;
            }
        }
    }
    Ok("100 cases".into())
}

fn hilb2_species() -> Outcome {
    let mut saw_40 = false;
    for n in 1..=3 {
        for r in 1..=3 {
            for p in [2u32, 3] {
                let pb = BigInt::from(p);
                let species = hilb2_point_count_species(n, r, &pb).map_err(err)?;
                let cells = hilb2_count_polynomial(n, r).map_err(err)?.eval(&pb);
                let oracle = BigInt::from(common::hilb2_points_by_support(
                    n as u32,
                    r as u32,
                    p.into(),
                ));
                ensure(species == cells && cells == oracle, || {
                    format!("n={n} r={r} p={p}: species {species}, cells {cells}, oracle {oracle}")
                })?;
                saw_40 |= (n, r, p) == (1, 2, 2) && species == BigInt::from(40);
            }
        }
    }
    ensure(saw_40, || "worked value 40 at (1,2,2) missing".into())?;
    Ok("18 cases incl. 40 at (1,2,2)".into())
}

const QUOT_ENVELOPE: [(usize, usize, u32); 6] = [
    (1, 1, 2),
    (1, 2, 2),
    (1, 1, 3),
    (2, 1, 2),
    (1, 2, 3),
    (2, 2, 2),
];

fn quot2_brute_force() -> Outcome {
    let budget = Budget::default();
    let mut notes = Vec::new();
    for (n, r, p) in QUOT_ENVELOPE {
        let census = quot_census(2, n, r, p, budget).map_err(err)?;
        ensure(census.gl_order == gl_order(2, p), || "GL order".into())?;
        ensure(
            &census.points * &census.gl_order == census.raw_total,
            || format!("({n},{r},{p}): raw total not divisible by |GL_2|"),
        )?;
        let identity = blowup_count_identity(n, r, p, budget).map_err(err)?;
        ensure(identity.quot_brute == census.points, || {
            "census and identity disagree".into()
        })?;
        notes.push(format!("({n},{r},{p})={}", census.points));
    }
    let count = |n, r, p| quot_census(2, n, r, p, budget).map(|c| c.points);
    ensure(count(1, 2, 2) == Ok(28.into()), || {
        "expected 28 at (1,2,2)".into()
    })?;
    let hilb = hilb2_point_count_species(1, 2, &2.into()).map_err(err)?;
    ensure(hilb == BigInt::from(40), || "hilb count at (1,2,2)".into())?;
    let hilb_21 = hilb2_point_count_species(2, 1, &2.into()).map_err(err)?;
    ensure(hilb_21 == BigInt::from(24), || {
        format!("hilb count at (2,1,2) is {hilb_21}")
    })?;
    ensure(count(2, 1, 2) == Ok(24.into()), || {
        "expected 24 at (2,1,2)".into()
    })?;
    Ok(notes.join(" "))
}

fn weight_assignments(r: usize, n: usize) -> Vec<WeightAssignment> {
    let top = |l: &[i64]| *l.last().unwrap();
    let squares: Vec<i64> = (1..=r as i64).map(|j| j * j).collect();
    let odd: Vec<i64> = (1..=r as i64).map(|j| 3 * j - 1).collect();
    let mut out = vec![WeightAssignment::standard(r, n)];
    let t = top(&squares);
    out.push(
        WeightAssignment::new(
            squares.clone(),
            (1..=n as i64).map(|i| (t + 1) * i + i * i).collect(),
        )
        .expect("admissible"),
    );
    let t = top(&odd);
    out.push(
        WeightAssignment::new(
            odd.clone(),
            (1..=n as i64).map(|i| 7 + (2 * t + 3) * i).collect(),
        )
        .expect("admissible"),
    );
    out
}

fn r_loci_cells() -> Outcome {
    let mut cases = 0;
    for r in 1..=4 {
        for n in 1..=3 {
            let weights = weight_assignments(r, n);
            for m in 1..=r {
                for s in 0..=n * m {
                    let expected = expected_r_circ_poincare(r, m, s, n).map_err(err)?;
                    for w in &weights {
                        let circ = r_circ_poincare(r, m, s, n, w).map_err(err)?;
                        let prod = product_grassmannian_profile(r, m, s, n, w).map_err(err)?;
                        ensure(circ == expected && prod == expected, || {
                            format!("r={r} m={m} s={s} n={n} {w:?}: {circ} / {prod} vs {expected}")
                        })?;
                        cases += 1;
                    }
                }
            }
        }
    }
    Ok(format!(
        "{cases} (shape, weight) cases, 3 weight assignments each"
    ))
}

fn classification_evidence() -> Outcome {
    let budget = Budget::default();
    let big = lmax_search(4, 2, 2, 4, budget).map_err(err)?;
    ensure(big.max_dim == 5, || {
        format!("lmax_search(4,2,2,4) = {}", big.max_dim)
    })?;
    ensure(big.max_dim as u64 == lmax(4, 2).map_err(err)?, || {
        "closed form disagrees".into()
    })?;
    ensure(big.achievers_structural(), || {
        "an achiever is not <Id> + W".into()
    })?;
    let small = lmax_search(2, 1, 2, 2, budget).map_err(err)?;
    ensure(small.max_dim == 2, || {
        format!("lmax_search(2,1,2,2) = {}", small.max_dim)
    })?;
    for d in 2..=6 {
        for k in 1..d {
            let w = w_space(d, k).map_err(err)?;
            for p in [2u32, 3] {
                let basis = w.basis(p).map_err(err)?;
                ensure(basis.len() == k * (d - k), || format!("dim W d={d} k={k}"))?;
                for x in &basis {
                    for y in &basis {
                        ensure(x.mul(y).is_zero(), || {
                            format!("W not square-zero d={d} k={k}")
                        })?;
                    }
                }
                let alg = w.algebra(p).map_err(err)?;
                ensure(alg.dim() == k * (d - k) + 1, || {
                    format!("dim <Id>+W d={d} k={k}")
                })?;
                ensure(is_id_plus_square_zero(&alg, k), || {
                    format!("structure d={d} k={k}")
                })?;
            }
            let alg = w.algebra(2).map_err(err)?;
            let idx = spanning_index(&alg, budget).map_err(err)?;
            ensure(idx == k, || {
                format!("spanning index of <Id>+W d={d} k={k} is {idx}")
            })?;
        }
    }
    Ok(format!(
        "max_dim 5 with {} achievers over {} algebras; W-suite d <= 6",
        big.achievers.len(),
        big.algebras_seen
    ))
}

fn singular_locus() -> Outcome {
    for (n, r, p) in QUOT_ENVELOPE {
        let got = singular_count(n, r, p, Budget::default()).map_err(err)?;
        let pb = BigInt::from(p);
        let expected =
            pb.pow(n as u32) * BigInt::from(common::subspace_count(p.into(), r as u32, 2));
        ensure(got == expected, || {
            format!("({n},{r},{p}): {got} vs {expected}")
        })?;
        let via_lib = pb.pow(n as u32) * grass_point_count(r as i64, 2, &pb).map_err(err)?;
        ensure(got == via_lib, || "grass_point_count disagrees".into())?;
    }
    Ok("6 cases".into())
}

fn property_suites() -> Outcome {
    for a in 0..=20usize {
        for b in 0..=a {
            let g = gaussian_binomial(a as i64, b as i64).map_err(err)?;
            let oracle = common::to_poly(&common::gaussian_pascal(a, b));
            ensure(g == oracle, || format!("[{a},{b}] differs from q-Pascal"))?;
            let sym = gaussian_binomial(a as i64, (a - b) as i64).map_err(err)?;
            ensure(g == sym, || format!("[{a},{b}] not symmetric"))?;
            let c = g.coeffs();
            ensure(c.iter().eq(c.iter().rev()), || {
                format!("[{a},{b}] not palindromic")
            })?;
            ensure(g.eval_i64(1) == binomial(a as u64, b as u64), || {
                format!("[{a},{b}] at q=1")
            })?;
            if a >= 1 && b >= 1 && b < a {
                let rec = gaussian_binomial(a as i64 - 1, b as i64 - 1).map_err(err)?
                    + gaussian_binomial(a as i64 - 1, b as i64)
                        .map_err(err)?
                        .shift(b);
                ensure(g == rec, || format!("[{a},{b}] fails recursion"))?;
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let random = |rng: &mut ChaCha8Rng| -> Vec<i128> {
        let len = rng.gen_range(0..8);
        common::trim((0..len).map(|_| rng.gen_range(-50..=50)).collect())
    };
    for case in 0..1000 {
        let (a, b, c) = (random(&mut rng), random(&mut rng), random(&mut rng));
        let (pa, pb, pc) = (
            common::to_poly(&a),
            common::to_poly(&b),
            common::to_poly(&c),
        );
        let fail = || format!("ring axioms, case {case}");
        ensure(
            &pa * &pb == common::to_poly(&common::mul_i128(&a, &b)),
            fail,
        )?;
        ensure(
            &pa + &pb == common::to_poly(&common::add_i128(&a, &b)),
            fail,
        )?;
        ensure(&pa + &pb == &pb + &pa && &pa * &pb == &pb * &pa, fail)?;
        ensure((&pa + &pb) + &pc == &pa + (&pb + &pc), fail)?;
        ensure((&pa * &pb) * &pc == &pa * (&pb * &pc), fail)?;
        ensure(&pa * (&pb + &pc) == &pa * &pb + &pa * &pc, fail)?;
        ensure(
            &pa + IntPolynomial::zero() == pa && &pa * IntPolynomial::one() == pa,
            fail,
        )?;
        ensure(&(&pa + &pb) - &pb == pa, fail)?;
        if !pb.is_zero() {
            let back = (&pa * &pb).exact_div(&pb).map_err(err)?;
            ensure(back == pa, || {
                format!("exact division round trip, case {case}")
            })?;
        }
    }
    Ok("gaussian a <= 20; 1000 random ring/division cases".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            "cell count equals closed form for Hilb_2",
            cells_equal_closed_form,
        ),
        ("blowup assembly equals Quot_2 closed form", blowup_assembly),
        (
            "stable limit equals target ring; first mismatch at n+r-1",
            stable_limit,
        ),
        (
            "Euler characteristic and cell dimension sums",
            euler_characteristic,
        ),
        (
            "Hilb_2 species count equals cell count polynomial",
            hilb2_species,
        ),
        (
            "Quot_2 brute force equals blowup counting identity",
            quot2_brute_force,
        ),
        ("R-locus cells equal product Grassmannian", r_loci_cells),
        (
            "l_max search and W-space structure",
            classification_evidence,
        ),
        ("singular locus count", singular_locus),
        (
            "Gaussian binomial and polynomial ring properties",
            property_suites,
        ),
    ];
    let mut failures = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!(
                "criterion {:>2} PASS [{secs:7.2}s] {title}: {detail}",
                i + 1
            ),
            Err(detail) => {
                failures += 1;
                println!(
                    "criterion {:>2} FAIL [{secs:7.2}s] {title}: {detail}",
                    i + 1
                );
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
