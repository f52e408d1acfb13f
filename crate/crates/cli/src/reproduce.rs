//! `reproduce`: recompute reference values and comparison chains.

use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;
use serde_json::json;

use coxgrowth::{
    classify_number, compactness_check, euler_characteristic, fixture_graph, format_enclosure, growth_rate,
    growth_series, matches_printed, minimality_report, parse_coxeter_symbol, reciprocity_type, signature,
    solve_prism_length, strip_cyclotomic, sturm_count, symbol_to_graph, validate_graph, EulerCharacteristic,
    GrowthRate, IntPolynomial, MinimalityReport, Rate, Reciprocity, SelfReciprocity, VinbergGraph,
    DEFAULT_PRECISION_BITS,
};

use crate::output::{compute_err, CliError, Record, Table};
use crate::reference::{self, printed_rate, sparse};
use crate::Scope;

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub section: &'static str,
    pub name: String,
    pub reference: String,
    pub computed: String,
    pub passed: bool,
}

#[derive(Serialize)]
pub struct ReproduceResult {
    pub rows: Vec<Row>,
    pub reports: Vec<MinimalityReport>,
    pub passed: bool,
}

struct Rows {
    section: &'static str,
    rows: Vec<Row>,
}

impl Rows {
    fn new(section: &'static str) -> Self {
        Self { section, rows: Vec::new() }
    }

    fn push(&mut self, name: impl Into<String>, reference: impl ToString, computed: impl ToString, passed: bool) {
        self.rows.push(Row {
            section: self.section,
            name: name.into(),
            reference: reference.to_string(),
            computed: computed.to_string(),
            passed,
        });
    }

    fn rate(&mut self, name: &str, rate: &Rate, printed: &str) {
        let (lo, hi) = rate.bounds();
        let [a, b] = format_enclosure(&lo, &hi, 10);
        self.push(format!("τ {name}"), printed, format!("[{a}, {b}]"), matches_printed(rate, printed));
    }

    fn poly(&mut self, name: &str, expected: &IntPolynomial, got: &IntPolynomial) {
        self.push(name, expected, got, expected == got);
    }
}

fn sym(s: &str) -> VinbergGraph {
    symbol_to_graph(&parse_coxeter_symbol(s).expect("reference symbols parse"))
}

fn eps() -> BigRational {
    coxgrowth::order::report_width()
}

fn rate_of(g: &VinbergGraph) -> Result<(GrowthRate, Rate), CliError> {
    let f = growth_series(g).map_err(compute_err)?;
    let r = growth_rate(f.function(), &eps()).map_err(compute_err)?;
    let tau = Rate::Exponential { tau: r.tau.clone() };
    Ok((r, tau))
}

fn class_flags(r: &GrowthRate) -> Result<(Vec<&'static str>, bool, bool, bool), CliError> {
    let c = classify_number(r.defining_polynomial(), &r.tau).map_err(compute_err)?;
    Ok((c.flags(), c.salem.holds, c.pisot.holds, c.perron.holds))
}

fn flags_string(f: &[&str]) -> String {
    if f.is_empty() {
        "none".into()
    } else {
        f.join(", ")
    }
}

fn triangle_rates(rows: &mut Rows) -> Result<(), CliError> {
    let cases: [(&str, &[i64], &str); 4] = [
        ("[7,3]", reference::LEHMER, "salem"),
        ("[8,3]", reference::SALEM_83, "salem"),
        ("[inf,3]", reference::SMALLEST_PISOT, "pisot"),
        ("[3,5,3]", reference::TETRAHEDRAL_353, ""),
    ];
    for (symbol, poly, class) in cases {
        let (r, tau) = rate_of(&sym(symbol))?;
        rows.rate(symbol, &tau, printed_rate(symbol));
        rows.poly(&format!("{symbol} defining polynomial"), &IntPolynomial::from_i64(poly), r.defining_polynomial());
        if !class.is_empty() {
            let (flags, ..) = class_flags(&r)?;
            rows.push(format!("{symbol} class"), class, flags_string(&flags), flags.contains(&class));
        }
    }
    let f = growth_series(&sym("[3,5,3]")).map_err(compute_err)?;
    let rec = reciprocity_type(f.function());
    rows.push("[3,5,3] reciprocity", Reciprocity::AntiReciprocal, rec, rec == Reciprocity::AntiReciprocal);
    Ok(())
}

fn lambert(rows: &mut Rows) -> Result<(), CliError> {
    let (r, tau) = rate_of(&fixture_graph("lambert"))?;
    rows.rate("Q", &tau, printed_rate("lambert"));
    rows.poly("Q defining polynomial", &IntPolynomial::from_i64(reference::LAMBERT), r.defining_polynomial());
    let (flags, salem, ..) = class_flags(&r)?;
    rows.push("Q class", "salem", flags_string(&flags), salem);
    Ok(())
}

fn simplex_5333(rows: &mut Rows) -> Result<(), CliError> {
    let g = sym("[5,3,3,3]");
    let f = growth_series(&g).map_err(compute_err)?;
    let num = IntPolynomial::bracket_product(reference::H4_BRACKETS);
    rows.push("[5,3,3,3] numerator", "[2,12,20,30]", "[2,12,20,30]", f.numerator() == &num);
    let den = sparse(reference::SIMPLEX_5333_DENOMINATOR);
    rows.push(
        "[5,3,3,3] denominator",
        format!("degree {}", den.degree_or_zero()),
        format!("degree {}", f.denominator().degree_or_zero()),
        f.denominator() == &den,
    );
    let pal = coxgrowth::is_self_reciprocal(f.denominator());
    rows.push("[5,3,3,3] denominator palindromic", SelfReciprocity::Palindromic, pal, pal == SelfReciprocity::Palindromic);
    let sq = f.denominator().square_free_part();
    let count = sturm_count(&sq, Some(&BigRational::one()), None).map_err(compute_err)?;
    rows.push("[5,3,3,3] real roots in (1, ∞)", 2, count, count == 2);
    let rec = reciprocity_type(f.function());
    rows.push("[5,3,3,3] reciprocity", Reciprocity::Reciprocal, rec, rec == Reciprocity::Reciprocal);
    let (r, tau) = rate_of(&g)?;
    rows.rate("[5,3,3,3]", &tau, printed_rate("[5,3,3,3]"));
    let (flags, salem, _, perron) = class_flags(&r)?;
    rows.push("[5,3,3,3] class", "perron, not salem", flags_string(&flags), perron && !salem);
    Ok(())
}

fn prisms(rows: &mut Rows) -> Result<(), CliError> {
    let m = fixture_graph("makarov");
    let f = growth_series(&m).map_err(compute_err)?;
    let (r, tau) = rate_of(&m)?;
    rows.rate("M", &tau, printed_rate("makarov"));
    let has_t_minus_1 = r.cyclotomic.iter().any(|&(d, _)| d == 1);
    rows.push("M denominator factor t - 1", "present", if has_t_minus_1 { "present" } else { "absent" }, has_t_minus_1);
    let chi = euler_characteristic(f.function());
    rows.push("M Euler characteristic", 0, &chi, matches!(chi, EulerCharacteristic::Zero { .. }));

    let p = solve_prism_length(&m, 5, DEFAULT_PRECISION_BITS).map_err(compute_err)?;
    let cosh = p.cosh.to_f64();
    let target = reference::prism_cosh();
    rows.push(
        "M cosh l",
        format!("{target:.12}"),
        format!("{cosh:.12}"),
        (cosh - target).abs() < reference::PRISM_COSH_TOLERANCE,
    );
    let [a, b] = format_enclosure(p.determinant.lo(), p.determinant.hi(), 30);
    rows.push("M Gram determinant", "contains 0", format!("[{a}, {b}]"), p.determinant.contains_zero());
    let s = signature(&p.gram);
    rows.push("M signature", "(5, 1, 1)", format!("{:?}", s.triple()), s.triple() == (5, 1, 1) && s.certified);

    let k = fixture_graph("kaplinskaja");
    let fk = growth_series(&k).map_err(compute_err)?;
    let (rk, tauk) = rate_of(&k)?;
    rows.rate("K", &tauk, printed_rate("kaplinskaja"));
    let stripped = strip_cyclotomic(&fk.denominator().square_free_part());
    let rest = &stripped.remainder;
    let pal = coxgrowth::is_self_reciprocal(rest);
    let t1 = stripped.factors.iter().any(|&(d, _)| d == 1);
    rows.push(
        "K stripped denominator",
        "t - 1 times a palindromic degree 32 factor",
        format!("{} of degree {}, t - 1 {}", pal, rest.degree_or_zero(), if t1 { "present" } else { "absent" }),
        pal == SelfReciprocity::Palindromic && rest.degree_or_zero() == 32 && t1,
    );
    let (flags, _, _, perron) = class_flags(&rk)?;
    rows.push("K class", "perron", flags_string(&flags), perron);

    let t = fixture_graph("tumarkin");
    let c = compactness_check(&t, 5).map_err(compute_err)?;
    let dotted = validate_graph(&t).dotted_edges;
    rows.push(
        "T compact with one dotted pair",
        "compact, 1",
        format!("{}, {dotted}", if c.is_compact() { "compact" } else { "not compact" }),
        c.is_compact() && dotted == 1,
    );
    Ok(())
}

fn examples() -> Result<Vec<Row>, CliError> {
    let mut rows = Rows::new("examples");
    triangle_rates(&mut rows)?;
    lambert(&mut rows)?;
    simplex_5333(&mut rows)?;
    prisms(&mut rows)?;
    Ok(rows.rows)
}

fn report_rows(section: &'static str, report: &MinimalityReport) -> Vec<Row> {
    let mut rows = Rows::new(section);
    for step in &report.steps {
        for r in &step.rates {
            if let (Some(p), Some(ok)) = (&r.printed, r.matches_printed) {
                rows.push(format!("τ {}", r.name), p, format!("[{}, {}]", r.interval[0], r.interval[1]), ok);
            }
        }
        for c in step.checks.iter().filter(|c| !c.description.contains('≈')) {
            rows.push(
                format!("{}: {}", step.name, c.description),
                "holds",
                if c.passed { "holds" } else { "fails" },
                c.passed,
            );
        }
    }
    let minimal = report.minimal.unwrap_or("none");
    let expected = if report.dimension == 4 { "lanner-5333" } else { "makarov" };
    rows.push("minimal growth rate", expected, minimal, minimal == expected);
    rows.rows
}

enum Job {
    Report(usize),
    Examples,
}

type JobOutput = Result<(Vec<Row>, Option<MinimalityReport>), CliError>;

fn run_job(job: &Job) -> JobOutput {
    match job {
        Job::Report(dim) => {
            let r = minimality_report(*dim).map_err(compute_err)?;
            let section = if *dim == 4 { "dim4" } else { "dim5" };
            Ok((report_rows(section, &r), Some(r)))
        }
        Job::Examples => Ok((examples()?, None)),
    }
}

pub fn reproduce(scope: Scope) -> Result<Record, CliError> {
    let jobs: Vec<Job> = match scope {
        Scope::Dim4 => vec![Job::Report(4)],
        Scope::Dim5 => vec![Job::Report(5)],
        Scope::Examples => vec![Job::Examples],
        Scope::All => vec![Job::Report(4), Job::Report(5), Job::Examples],
    };
    // Independent jobs run on their own threads; results keep job order.
    let outputs: Vec<JobOutput> = std::thread::scope(|s| {
        let handles: Vec<_> = jobs.iter().map(|j| s.spawn(move || run_job(j))).collect();
        handles.into_iter().map(|h| h.join().expect("reproduce job panicked")).collect()
    });
    let mut rows = Vec::new();
    let mut reports = Vec::new();
    for out in outputs {
        let (r, report) = out?;
        rows.extend(r);
        reports.extend(report);
    }
    let passed = rows.iter().all(|r| r.passed);
    let mut table = Table::new(&["section", "name", "reference", "computed", "verdict"]);
    for r in &rows {
        table.push(vec![
            r.section.to_string(),
            r.name.clone(),
            r.reference.clone(),
            r.computed.clone(),
            if r.passed { "pass" } else { "FAIL" }.to_string(),
        ]);
    }
    let failures = rows.iter().filter(|r| !r.passed).count();
    let scope_name = match scope {
        Scope::Dim4 => "dim4",
        Scope::Dim5 => "dim5",
        Scope::Examples => "examples",
        Scope::All => "all",
    };
    let result = ReproduceResult { rows, reports, passed };
    let mut rec = Record::new("reproduce", json!({ "scope": scope_name }), result, table)?;
    if failures > 0 {
        rec.warnings.push(format!("{failures} row(s) failed"));
    }
    rec.failed = !passed;
    Ok(rec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering;

    #[test]
    fn ordering_helper_is_consistent() {
        let (_, a) = rate_of(&sym("[7,3]")).unwrap();
        let (_, b) = rate_of(&sym("[8,3]")).unwrap();
        assert_eq!(a.compare(&b), Ordering::Less);
    }
}
