use std::fmt::Write as _;

use anyhow::Result;
use num_bigint::BigInt;
use quotcoh_core::bb_hilb2::{cell_dimensions, hilb2_count_polynomial, hilb2_poincare_cells};
use quotcoh_core::bb_rcells::{
    enumerate_r_fixed_points, expected_r_circ_poincare, product_grassmannian_profile,
    r_circ_poincare, tangent_sign_profile, WeightAssignment,
};
use quotcoh_core::ffield::{hilb2_point_count_species, quot_census};
use quotcoh_core::grassmann::{gaussian_binomial, stable_grass_series, target_ring_series};
use quotcoh_core::quot_formulas::{
    blowup_assemble, hilb2_series_closed, lmax, loci_dim_bounds, quot2_series, quot_d1_series,
    r_locus_poincare, stable_quot2_series, RLocusPoincare,
};
use quotcoh_core::{Budget, IntPolynomial, ResultValue, RunReport};

use crate::args::{BbCmd, CountCmd, LociCmd, SeriesCmd, Side};

/// A finished command: the report plus its plain-text rendering.
pub struct Output {
    pub report: RunReport,
    pub text: String,
    pub csv: Option<String>,
}

impl Output {
    pub fn new(report: RunReport, text: String) -> Self {
        Output {
            report,
            text,
            csv: None,
        }
    }
}

fn poly_output(mut report: RunReport, name: &str, poly: IntPolynomial) -> Output {
    let text = poly.to_string();
    report.result(name, ResultValue::Poly(poly));
    Output::new(report, text)
}

pub fn series(cmd: &SeriesCmd) -> Result<Output> {
    Ok(match *cmd {
        SeriesCmd::Hilb2 { nr } => {
            let mut report = RunReport::new("series hilb2");
            report.param("n", nr.n).param("r", nr.r);
            let closed = hilb2_series_closed(nr.n, nr.r)?;
            report.check(
                "closed form = fixed-point count",
                &closed,
                &hilb2_poincare_cells(nr.n, nr.r)?,
            );
            poly_output(report, "poincare", closed)
        }
        SeriesCmd::Quot2 { nr } => {
            let mut report = RunReport::new("series quot2");
            report.param("n", nr.n).param("r", nr.r);
            let closed = quot2_series(nr.n, nr.r)?;
            report.check(
                "closed form = blowup assembly",
                &closed,
                &blowup_assemble(nr.n, nr.r)?,
            );
            poly_output(report, "poincare", closed)
        }
        SeriesCmd::Stable { r, prec } => {
            let mut report = RunReport::new("series stable");
            report.param("r", r).param("prec", prec);
            let stable = stable_quot2_series(r, prec)?;
            let target = target_ring_series(2, r, prec)?;
            report.check(
                "stable limit = Z[c1,c2]/(c2^r)",
                &stable.to_polynomial(),
                &target.to_polynomial(),
            );
            poly_output(report, "series", stable.to_polynomial())
        }
        SeriesCmd::Target { d, r, prec } => {
            let mut report = RunReport::new("series target");
            report.param("d", d).param("r", r).param("prec", prec);
            poly_output(
                report,
                "series",
                target_ring_series(d, r, prec)?.to_polynomial(),
            )
        }
        SeriesCmd::D1 { nr } => {
            let mut report = RunReport::new("series d1");
            report.param("n", nr.n).param("r", nr.r);
            poly_output(report, "poincare", quot_d1_series(nr.n, nr.r)?)
        }
        SeriesCmd::Rlocus { d, r, n } => {
            let mut report = RunReport::new("series rlocus");
            report.param("d", d).param("r", r).param("n", n);
            let locus = r_locus_poincare(d, r, n)?;
            if let RLocusPoincare::OddSum(a, b) = &locus {
                report.result("component_k", ResultValue::Poly(a.clone()));
                report.result("component_k_plus_1", ResultValue::Poly(b.clone()));
            }
            poly_output(report, "poincare", locus.total())
        }
        SeriesCmd::Grass { a, b } => {
            let mut report = RunReport::new("series grass");
            report.param("a", a).param("b", b);
            let g = gaussian_binomial(a, b)?;
            let prec = g.coeffs().len().min((a - b).max(0) as usize + 1);
            let stable = stable_grass_series(b as usize, prec).to_polynomial();
            let head = IntPolynomial::from_coeffs(g.coeffs()[..prec].to_vec());
            report.check(
                "agrees with Grass(b, infinity) below degree a-b+1",
                &stable,
                &head,
            );
            poly_output(report, "poincare", g)
        }
    })
}

pub fn loci(cmd: &LociCmd) -> Result<Output> {
    Ok(match *cmd {
        LociCmd::Bounds { n, r, d, l } => {
            let mut report = RunReport::new("loci bounds");
            report
                .param("n", n)
                .param("r", r)
                .param("d", d)
                .param("l", l);
            let b = loci_dim_bounds(n, r, d, l)?;
            report.result("lower", ResultValue::Int(b.lower.clone()));
            report.result("upper_numerator", ResultValue::Int(b.upper.numer().clone()));
            report.result(
                "upper_denominator",
                ResultValue::Int(b.upper.denom().clone()),
            );
            Output::new(report, format!("{} <= dim <= {}", b.lower, b.upper))
        }
        LociCmd::Lmax { d, r } => {
            let mut report = RunReport::new("loci lmax");
            report.param("d", d).param("r", r);
            let v = lmax(d, r)?;
            report.result("lmax", ResultValue::Int(v.into()));
            Output::new(report, v.to_string())
        }
    })
}

pub fn bb(cmd: &BbCmd) -> Result<Output> {
    Ok(match *cmd {
        BbCmd::Hilb2 { nr, side } => {
            let mut report = RunReport::new("bb hilb2");
            report
                .param("n", nr.n)
                .param("r", nr.r)
                .param("side", format!("{side:?}").to_lowercase());
            let mut text = String::new();
            let show_pos = side != Side::Neg;
            let show_neg = side != Side::Pos;
            for c in cell_dimensions(nr.n, nr.r)? {
                let mut line = format!("{:<10}", c.point.to_string());
                if show_pos {
                    report.result(
                        format!("{}.pos", c.point),
                        ResultValue::Int(c.positive_dim.into()),
                    );
                    write!(line, " pos {:>3}", c.positive_dim)?;
                }
                if show_neg {
                    report.result(
                        format!("{}.neg", c.point),
                        ResultValue::Int(c.negative_dim.into()),
                    );
                    write!(line, " neg {:>3}", c.negative_dim)?;
                }
                writeln!(text, "{}", line.trim_end())?;
            }
            if show_neg {
                let poly = hilb2_poincare_cells(nr.n, nr.r)?;
                writeln!(text, "poincare: {poly}")?;
                report.result("poincare", ResultValue::Poly(poly));
            }
            if show_pos {
                let poly = hilb2_count_polynomial(nr.n, nr.r)?;
                writeln!(text, "count: {poly}")?;
                report.result("count_polynomial", ResultValue::Poly(poly));
            }
            Output::new(report, text.trim_end().to_string())
        }
        BbCmd::Rcells { r, m, s, n } => {
            let mut report = RunReport::new("bb rcells");
            report
                .param("r", r)
                .param("m", m)
                .param("s", s)
                .param("n", n);
            let w = WeightAssignment::standard(r, n);
            let mut text = String::new();
            for fp in enumerate_r_fixed_points(r, m, s, n)? {
                let profile = tangent_sign_profile(&fp, &w)?;
                writeln!(
                    text,
                    "{fp:?} pos {} neg {}",
                    profile.positive, profile.negative
                )?;
            }
            let circ = r_circ_poincare(r, m, s, n, &w)?;
            let expected = expected_r_circ_poincare(r, m, s, n)?;
            let ok = report.check(
                "fixed-point count = Grass(r,m) x Grass(nm,s)",
                &expected,
                &circ,
            ) & report.check(
                "product Grassmannian count",
                &expected,
                &product_grassmannian_profile(r, m, s, n, &w)?,
            );
            writeln!(text, "{circ}")?;
            write!(text, "check={}", if ok { "pass" } else { "fail" })?;
            report.result("poincare", ResultValue::Poly(circ));
            Output::new(report, text)
        }
    })
}

pub fn count(cmd: &CountCmd, budget: Budget) -> Result<Output> {
    Ok(match *cmd {
        CountCmd::Quot { d, n, r, p } => {
            let mut report = RunReport::new("count quot");
            report
                .param("d", d)
                .param("n", n)
                .param("r", r)
                .param("p", p);
            let census = quot_census(d, n, r, p, budget)?;
            let mut text = format!("{}", census.points);
            report.result("points", ResultValue::Int(census.points.clone()));
            report.result("raw_total", ResultValue::Int(census.raw_total.clone()));
            report.result("gl_order", ResultValue::Int(census.gl_order.clone()));
            for (class, pts) in &census.by_class {
                write!(text, "\n  {class}: {pts}")?;
                report.result(format!("points.{class}"), ResultValue::Int(pts.clone()));
            }
            Output::new(report, text)
        }
        CountCmd::Hilb2 { nrp } => {
            let mut report = RunReport::new("count hilb2");
            report.param("n", nrp.n).param("r", nrp.r).param("p", nrp.p);
            quotcoh_core::ffield::check_prime(nrp.p)?;
            let pb = BigInt::from(nrp.p);
            let species = hilb2_point_count_species(nrp.n, nrp.r, &pb)?;
            let cells = hilb2_count_polynomial(nrp.n, nrp.r)?.eval(&pb);
            report.check("species count = cell count polynomial", &cells, &species);
            report.result("points", ResultValue::Int(species.clone()));
            Output::new(report, species.to_string())
        }
    })
}
