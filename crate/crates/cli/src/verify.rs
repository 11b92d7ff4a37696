use std::fmt::{Display, Write as _};

use anyhow::{bail, Result};
use num_bigint::BigInt;
use quotcoh_core::bb_hilb2::{
    cell_dimensions, hilb2_count_polynomial, hilb2_dim, hilb2_poincare_cells,
};
use quotcoh_core::bb_rcells::{
    expected_r_circ_poincare, product_grassmannian_profile, r_circ_poincare, WeightAssignment,
};
use quotcoh_core::ffield::{
    blowup_count_identity, check_prime, gl_order, hilb2_point_count_species,
    is_id_plus_square_zero, lmax_search, quot_census, singular_count, spanning_index, w_space,
};
use quotcoh_core::grassmann::{binomial, gaussian_binomial, grass_point_count, target_ring_series};
use quotcoh_core::quot_formulas::{
    blowup_assemble, degree_agreement, hilb2_series_closed, lmax, quot2_series, stable_quot2_series,
};
use quotcoh_core::{Budget, Error, ResultValue, RunReport};

use crate::args::VerifyCmd;
use crate::commands::Output;

/// Parameter tuples for the brute-force `Quot_2` checks.
const QUOT_ENVELOPE: [(usize, usize, u32); 6] = [
    (1, 1, 2),
    (1, 2, 2),
    (1, 1, 3),
    (2, 1, 2),
    (1, 2, 3),
    (2, 2, 2),
];

struct Row {
    check: &'static str,
    params: String,
    expected: String,
    actual: String,
    pass: bool,
}

/// Collects per-tuple checks into the report and, optionally, CSV rows.
struct Sweep {
    report: RunReport,
    rows: Vec<Row>,
}

impl Sweep {
    fn check<T: PartialEq + Display>(
        &mut self,
        check: &'static str,
        params: String,
        expected: &T,
        actual: &T,
    ) {
        let pass = self
            .report
            .check(format!("{check} [{params}]"), expected, actual);
        self.rows.push(Row {
            check,
            params,
            expected: expected.to_string(),
            actual: actual.to_string(),
            pass,
        });
    }

    fn csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["check", "params", "expected", "actual", "status"])?;
        for r in &self.rows {
            w.write_record([
                r.check,
                &r.params,
                &r.expected,
                &r.actual,
                if r.pass { "pass" } else { "fail" },
            ])?;
        }
        Ok(String::from_utf8(w.into_inner()?)?)
    }

    fn summary(&self) -> String {
        let mut checks: Vec<&str> = Vec::new();
        for r in &self.rows {
            if !checks.contains(&r.check) {
                checks.push(r.check);
            }
        }
        let mut text = String::new();
        for check in checks {
            let rows: Vec<&Row> = self.rows.iter().filter(|r| r.check == check).collect();
            let passed = rows.iter().filter(|r| r.pass).count();
            let _ = writeln!(
                text,
                "{:<4} {check}: {passed}/{}",
                if passed == rows.len() { "ok" } else { "FAIL" },
                rows.len()
            );
        }
        text
    }
}

fn weight_assignments(r: usize, n: usize) -> Result<Vec<WeightAssignment>> {
    let squares: Vec<i64> = (1..=r as i64).map(|j| j * j).collect();
    let shifted: Vec<i64> = (1..=r as i64).map(|j| 3 * j - 1).collect();
    let (t1, t2) = (squares[r - 1], shifted[r - 1]);
    Ok(vec![
        WeightAssignment::standard(r, n),
        WeightAssignment::new(
            squares,
            (1..=n as i64).map(|i| (t1 + 1) * i + i * i).collect(),
        )?,
        WeightAssignment::new(
            shifted,
            (1..=n as i64).map(|i| 7 + (2 * t2 + 3) * i).collect(),
        )?,
    ])
}

fn all(max_n: usize, max_r: usize, fields: &[u32], budget: Budget) -> Result<Sweep> {
    if max_n == 0 || max_r == 0 {
        bail!(Error::InvalidParams(
            "--max-n and --max-r must be at least 1".into()
        ));
    }
    for &p in fields {
        check_prime(p)?;
    }
    let mut report = RunReport::new("verify all");
    report.param("max_n", max_n).param("max_r", max_r);
    report.param(
        "fields",
        fields
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(","),
    );
    let mut s = Sweep {
        report,
        rows: Vec::new(),
    };

    for n in 1..=max_n {
        for r in 1..=max_r {
            let params = format!("n={n} r={r}");
            s.check(
                "hilb2 cells = closed form",
                params.clone(),
                &hilb2_series_closed(n, r)?,
                &hilb2_poincare_cells(n, r)?,
            );
            s.check(
                "quot2 blowup = closed form",
                params.clone(),
                &quot2_series(n, r)?,
                &blowup_assemble(n, r)?,
            );
            s.check(
                "first mismatch with stable limit",
                params.clone(),
                &(n + r - 1),
                &degree_agreement(n, r)?.first_mismatch,
            );
            let chi = 3 * binomial(r as u64, 2) + BigInt::from(r * n);
            s.check(
                "euler characteristic",
                params.clone(),
                &chi,
                &hilb2_poincare_cells(n, r)?.eval_i64(1),
            );
            let dims_ok = cell_dimensions(n, r)?
                .iter()
                .all(|c| c.positive_dim + c.negative_dim == hilb2_dim(n, r));
            s.check("cell dimensions sum to 2(n+r-1)", params, &true, &dims_ok);
        }
    }
    for r in 1..=max_r {
        s.check(
            "stable limit = target ring",
            format!("r={r} prec=50"),
            &target_ring_series(2, r, 50)?.to_polynomial(),
            &stable_quot2_series(r, 50)?.to_polynomial(),
        );
    }
    for n in 1..=max_n.min(3) {
        for r in 1..=max_r.min(3) {
            for &p in fields {
                let pb = BigInt::from(p);
                s.check(
                    "hilb2 species = cell count",
                    format!("n={n} r={r} p={p}"),
                    &hilb2_count_polynomial(n, r)?.eval(&pb),
                    &hilb2_point_count_species(n, r, &pb)?,
                );
            }
        }
    }
    for (n, r, p) in QUOT_ENVELOPE {
        if n > max_n || r > max_r || !fields.contains(&p) {
            continue;
        }
        let params = format!("n={n} r={r} p={p}");
        let census = quot_census(2, n, r, p, budget)?;
        s.check(
            "raw total = points x |GL_2|",
            params.clone(),
            &census.raw_total,
            &(&census.points * gl_order(2, p)),
        );
        match blowup_count_identity(n, r, p, budget) {
            Ok(c) => s.check(
                "quot2 brute force = blowup identity",
                params.clone(),
                &(&c.hilb + &c.z - &c.zprime),
                &c.quot_brute,
            ),
            Err(Error::Mismatch {
                expected, actual, ..
            }) => s.check(
                "quot2 brute force = blowup identity",
                params.clone(),
                &expected,
                &actual,
            ),
            Err(e) => return Err(e.into()),
        }
        let pb = BigInt::from(p);
        let z = pb.pow(n as u32) * grass_point_count(r as i64, 2, &pb)?;
        match singular_count(n, r, p, budget) {
            Ok(v) => s.check("singular locus = p^n #Grass(r,2)", params, &z, &v),
            Err(Error::Mismatch { actual, .. }) => s.check(
                "singular locus = p^n #Grass(r,2)",
                params,
                &z.to_string(),
                &actual,
            ),
            Err(e) => return Err(e.into()),
        }
    }
    for r in 1..=max_r.min(4) {
        for n in 1..=max_n.min(3) {
            let weights = weight_assignments(r, n)?;
            for m in 1..=r {
                for sdim in 0..=n * m {
                    let expected = expected_r_circ_poincare(r, m, sdim, n)?;
                    for (wi, w) in weights.iter().enumerate() {
                        let params = format!("r={r} m={m} s={sdim} n={n} weights={wi}");
                        s.check(
                            "R-locus cells = Grass x Grass",
                            params.clone(),
                            &expected,
                            &r_circ_poincare(r, m, sdim, n, w)?,
                        );
                        s.check(
                            "product Grassmannian cells",
                            params,
                            &expected,
                            &product_grassmannian_profile(r, m, sdim, n, w)?,
                        );
                    }
                }
            }
        }
    }
    if fields.contains(&2) {
        for (d, r, gens) in [(2usize, 1usize, 2usize), (4, 2, 4)] {
            let found = lmax_search(d, r, 2, gens, budget)?;
            let params = format!("d={d} r={r} p=2 gens={gens}");
            s.check(
                "lmax search = closed form",
                params.clone(),
                &lmax(d as u64, r as u64)?,
                &(found.max_dim as u64),
            );
            if r > 1 {
                s.check(
                    "lmax achievers are <Id> + W",
                    params,
                    &true,
                    &found.achievers_structural(),
                );
            }
        }
    }
    for d in 2..=6 {
        for k in 1..d {
            let (ok, idx) = wspace_facts(d, k, 2, budget)?;
            s.check("W-space structure", format!("d={d} k={k} p=2"), &true, &ok);
            if let Some(idx) = idx {
                s.check(
                    "W-space spanning index",
                    format!("d={d} k={k} p=2"),
                    &k,
                    &idx,
                );
            }
        }
    }
    for a in 0..=20i64 {
        for b in 0..=a {
            let g = gaussian_binomial(a, b)?;
            let mut ok =
                g == gaussian_binomial(a, a - b)? && g.coeffs().iter().eq(g.coeffs().iter().rev());
            if b >= 1 && b < a {
                ok &= g
                    == gaussian_binomial(a - 1, b - 1)?
                        + gaussian_binomial(a - 1, b)?.shift(b as usize);
            }
            s.check(
                "gaussian symmetry, palindrome, recursion",
                format!("a={a} b={b}"),
                &true,
                &ok,
            );
        }
    }
    Ok(s)
}

/// Square-zero, dimension and structure of `<Id> + W_{d-k,k}`; the
/// spanning index is only computed for `d <= 4`.
fn wspace_facts(d: usize, k: usize, p: u32, budget: Budget) -> Result<(bool, Option<usize>)> {
    let w = w_space(d, k)?;
    let basis = w.basis(p)?;
    let alg = w.algebra(p)?;
    let ok = basis
        .iter()
        .all(|x| basis.iter().all(|y| x.mul(y).is_zero()))
        && basis.len() == k * (d - k)
        && alg.dim() == k * (d - k) + 1
        && is_id_plus_square_zero(&alg, k);
    let idx = if d <= 4 {
        Some(spanning_index(&alg, budget)?)
    } else {
        None
    };
    Ok((ok, idx))
}

pub fn verify(cmd: &VerifyCmd, budget: Budget) -> Result<Output> {
    match *cmd {
        VerifyCmd::All {
            max_n,
            max_r,
            ref fields,
            csv,
        } => {
            let sweep = all(max_n, max_r, fields, budget)?;
            let csv = if csv { Some(sweep.csv()?) } else { None };
            let mut text = sweep.summary();
            text.push_str(if sweep.report.passed() {
                "pass"
            } else {
                "fail"
            });
            Ok(Output {
                report: sweep.report,
                text,
                csv,
            })
        }
        VerifyCmd::Blowup { nrp } => {
            let mut report = RunReport::new("verify blowup");
            report.param("n", nrp.n).param("r", nrp.r).param("p", nrp.p);
            let text = match blowup_count_identity(nrp.n, nrp.r, nrp.p, budget) {
                Ok(c) => {
                    report.check(
                        "#Quot = #Hilb + #Z - #Z'",
                        &(&c.hilb + &c.z - &c.zprime),
                        &c.quot_brute,
                    );
                    for (name, v) in [
                        ("quot", &c.quot_brute),
                        ("hilb", &c.hilb),
                        ("z", &c.z),
                        ("zprime", &c.zprime),
                    ] {
                        report.result(name, ResultValue::Int(v.clone()));
                    }
                    format!("{c}\npass")
                }
                Err(Error::Mismatch {
                    what,
                    expected,
                    actual,
                }) => {
                    report.fail(what, &expected, &actual);
                    format!("{actual} != {expected}\nfail")
                }
                Err(e) => return Err(e.into()),
            };
            Ok(Output::new(report, text))
        }
        VerifyCmd::Lmax { d, r, p, gens } => {
            let mut report = RunReport::new("verify lmax");
            report
                .param("d", d)
                .param("r", r)
                .param("p", p)
                .param("gens", gens);
            let found = lmax_search(d, r, p, gens, budget)?;
            report.result("max_dim", ResultValue::Int(found.max_dim.into()));
            report.result("achievers", ResultValue::Int(found.achievers.len().into()));
            report.result(
                "algebras_seen",
                ResultValue::Int(found.algebras_seen.into()),
            );
            let mut text = format!(
                "max_dim={} achievers={} algebras={}",
                found.max_dim,
                found.achievers.len(),
                found.algebras_seen
            );
            match lmax(d as u64, r as u64) {
                Ok(bound) => {
                    report.result("lmax_closed_form", ResultValue::Int(bound.into()));
                    let within = found.max_dim as u64 <= bound;
                    report.check("search does not exceed closed form", &true, &within);
                    if found.max_dim as u64 == bound && r > 1 && 2 * r <= d {
                        report.check(
                            "achievers are <Id> + W",
                            &true,
                            &found.achievers_structural(),
                        );
                    }
                    write!(text, " closed_form={bound}")?;
                }
                Err(Error::Unclassified { .. }) => text.push_str(" closed_form=unclassified"),
                Err(e) => return Err(e.into()),
            }
            text.push_str(if report.passed() { "\npass" } else { "\nfail" });
            Ok(Output::new(report, text))
        }
        VerifyCmd::Wspace { d, p } => {
            let mut report = RunReport::new("verify wspace");
            report.param("d", d).param("p", p);
            if d < 2 {
                bail!(Error::InvalidParams("--d must be at least 2".into()));
            }
            let mut text = String::new();
            for k in 1..d {
                let (ok, idx) = wspace_facts(d, k, p, budget)?;
                report.check(format!("W_{{{},{k}}} structure", d - k), &true, &ok);
                if let Some(idx) = idx {
                    report.check(format!("W_{{{},{k}}} spanning index", d - k), &k, &idx);
                }
                writeln!(
                    text,
                    "k={k} dim={} structure={}",
                    k * (d - k) + 1,
                    if ok { "ok" } else { "FAIL" }
                )?;
            }
            text.push_str(if report.passed() { "pass" } else { "fail" });
            Ok(Output::new(report, text))
        }
    }
}
