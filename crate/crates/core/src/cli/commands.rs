use super::config::{PrimeSelector, RunConfig};
use super::report::Report;
use crate::codes::{load_code_table, CodeTable};
use crate::error::{Error, Result};
use crate::idealarith::{
    alphabet_set, contains, factor_prime, ideal_power, prime_from_generators, PrimeIdealFactor,
};
use crate::lattice::{brute_force_min, ideal_tower, shortest_vector, TowerOptions};
use crate::embedding::{lattice_basis, EmbeddingContext};
use crate::numfield::{
    define_field_with, FieldElement, FieldOptions, IrreducibilityCertificate, NumberField,
};
use crate::packing::{
    asymptotic_lambda, finite_density_report, required_code_distances, implied_code_sum, run_tiny_instance, tiny_instances,
    DEFAULT_CHECKPOINTS, REFERENCE_PRIMES,
};
use rand::{Rng, SeedableRng};
use std::io::BufReader;

pub fn load_field(cfg: &RunConfig) -> Result<NumberField> {
    define_field_with(
        cfg.poly.clone(),
        FieldOptions {
            assume_irreducible: cfg.assume_irreducible,
            seed: cfg.seed,
        },
    )
}

pub fn select_prime(k: &NumberField, cfg: &RunConfig) -> Result<PrimeIdealFactor> {
    match &cfg.prime {
        PrimeSelector::Index { p, index } => {
            let mut factors = factor_prime(k, *p, cfg.seed)?;
            if *index >= factors.len() {
                return Err(Error::Validation(format!(
                    "index {index} out of range: {p} has {} prime factors",
                    factors.len()
                )));
            }
            Ok(factors.swap_remove(*index))
        }
        PrimeSelector::Generators { p, g } => {
            let mut c = g.clone();
            c.resize(k.degree(), 0);
            prime_from_generators(k, *p, &FieldElement::from_i64s(&c), cfg.seed)
        }
    }
}

pub fn load_table(cfg: &RunConfig) -> Result<CodeTable> {
    match &cfg.code_table {
        None => Ok(CodeTable::bundled()),
        Some(path) => {
            let file = std::fs::File::open(path)
                .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            load_code_table(BufReader::new(file))
        }
    }
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn prime_label(k: &NumberField, f: &PrimeIdealFactor) -> String {
    f.label(k)
}

/// Degree, signature, discriminant and the maximality certificate, plus the
/// decomposition of the configured prime.
pub fn cmd_field(cfg: &RunConfig) -> Result<Report> {
    let k = load_field(cfg)?;
    let (s, t) = k.signature();
    let mut r = Report::new("field");
    r.push("polynomial", k.polynomial());
    r.push("degree", k.degree());
    r.push("signature", format!("{s},{t}"));
    r.push("discriminant", k.discriminant());
    r.push("abs_discriminant", k.abs_discriminant());
    r.push(
        "irreducibility",
        match k.irreducibility() {
            IrreducibilityCertificate::ModularPrime(p) => format!("irreducible mod {p}"),
            IrreducibilityCertificate::Assumed => "assumed".into(),
        },
    );
    let checks: Vec<String> = k
        .maximality()
        .checks
        .iter()
        .map(|c| format!("{}:{}", c.p, if c.maximal { "ok" } else { "fail" }))
        .collect();
    r.push("maximality_checks", if checks.is_empty() { "none needed".into() } else { checks.join(";") });
    let p = cfg.prime.p();
    let factors = factor_prime(&k, p, cfg.seed)?;
    r.push("prime", p);
    r.push("prime_factors", factors.len());
    for (i, f) in factors.iter().enumerate() {
        r.push(
            &format!("factor.{i}"),
            format!("{} e={} f={} q={}", prime_label(&k, f), f.e, f.f_deg, f.q),
        );
    }
    r.human = format!(
        "The degree of K = Q[x]/({}) is m={}, signature (s,t) = ({s},{t}).\n\
         The absolute value of the discriminant of K is |d|={}.\n\
         Z[a] is the maximal order ({}).\n\
         {p} splits into {} prime(s):\n{}",
        k.polynomial(),
        k.degree(),
        k.abs_discriminant(),
        r.get("maximality_checks").unwrap_or_default(),
        factors.len(),
        factors
            .iter()
            .enumerate()
            .map(|(i, f)| format!(
                "  [{i}] {}  e={}  f={}  q={}",
                prime_label(&k, f),
                f.e,
                f.f_deg,
                f.q
            ))
            .collect::<Vec<_>>()
            .join("\n")
    );
    Ok(r)
}

/// Finite-level center-density bound.
pub fn cmd_density(cfg: &RunConfig) -> Result<Report> {
    let k = load_field(cfg)?;
    let prime = select_prime(&k, cfg)?;
    let table = load_table(cfg)?;
    let rep = finite_density_report(&k, &prime, cfg.n, &table, &cfg.tower_options())?;
    let mut r = Report::new("density");
    r.push("polynomial", &rep.polynomial);
    r.push("degree", rep.degree);
    r.push("abs_discriminant", &rep.abs_discriminant);
    r.push("prime", &rep.generators);
    r.push("q", rep.q);
    r.push("n", rep.n);
    r.push("levels", rep.levels);
    r.push("min_sq", join(&rep.min_sqs.iter().map(|x| format!("{x:.6}")).collect::<Vec<_>>(), ";"));
    r.push("required_d", join(&rep.required_d, ";"));
    r.push("code_dims", join(&rep.code_dims, ";"));
    r.push("sum_k", rep.code_dims.iter().sum::<u64>());
    r.push("dimension", rep.dimension);
    r.push("log2_center_density", format!("{:.9}", rep.log2_center_density));
    r.push("log2_density", format!("{:.9}", rep.log2_density));
    r.push("precision_bits", rep.precision);
    r.push("snapped_levels", join(&rep.snapped_levels, ";"));
    let mut human = vec![
        format!("The degree of K = Q[x]/({}) is m={}, |d|={}.", rep.polynomial, rep.degree, rep.abs_discriminant),
        format!("P = {} with residue field of size q={}.", rep.generators, rep.q),
        format!(
            "We can concatenate at most {} levels: codes of length {} whose Hamming weights are required respectively at least {}.",
            rep.levels,
            rep.n,
            join(&rep.required_d, ";")
        ),
        format!("Code dimensions {} (sum {}).", join(&rep.code_dims, ";"), rep.code_dims.iter().sum::<u64>()),
        format!(
            "Our packing is in dimension {} with Log_2(center density) at least {:.9}.",
            rep.dimension, rep.log2_center_density
        ),
        format!("Log_2(density) at least {:.6}.", rep.log2_density),
    ];
    for note in &rep.notes {
        human.push(format!("note: {note}"));
    }
    r.human = human.join("\n");
    Ok(r)
}

/// Asymptotic density exponent with its convergence trace.
pub fn cmd_asymptotic(cfg: &RunConfig) -> Result<Report> {
    let k = load_field(cfg)?;
    let prime = select_prime(&k, cfg)?;
    let rep = asymptotic_lambda(&k, &prime, cfg.lmax, &DEFAULT_CHECKPOINTS, &cfg.tower_options())?;
    let mut r = Report::new("asymptotic");
    r.push("polynomial", k.polynomial());
    r.push("prime", prime_label(&k, &prime));
    r.push("q", rep.q);
    r.push("lmax", rep.lmax);
    r.push("log2_n", format!("{:.6}", rep.log2_n));
    r.push("n_digits", rep.n_digits);
    r.push(
        "trace",
        rep.trace
            .iter()
            .map(|(l, v)| format!("{l}:{v:.9}"))
            .collect::<Vec<_>>()
            .join(";"),
    );
    r.push("lambda", format!("{:.9}", rep.lambda));
    r.push("precision_bits", rep.precision);
    let mut human = vec![format!(
        "Family over {} on K = Q[x]/({}), n_l = ceil((q^(2l)|d|)^(1/m)) has {} digits at l = {}.",
        prime_label(&k, &prime),
        k.polynomial(),
        rep.n_digits,
        rep.lmax
    )];
    for (l, v) in &rep.trace {
        human.push(format!("  l = {l:5}: {v:.9}"));
    }
    human.push(format!(
        "The asymptotic density exponent of the packing family is at least {:.9}.",
        rep.lambda
    ));
    r.human = human.join("\n");
    Ok(r)
}

/// Reference rows recomputed from the code table in use; rows whose code
/// lookups are absent are reported as data-missing.
pub fn cmd_tables(cfg: &RunConfig) -> Result<Report> {
    let table = load_table(cfg)?;
    let opts = cfg.tower_options();
    let mut r = Report::new("tables");
    let mut human = Vec::new();
    if table.is_empty() {
        r.warnings.push("code table is empty: every row is data-missing".into());
    }
    let mut row_id = 0;
    let (mut reproduced, mut missing) = (0, 0);
    for (pi, refp) in REFERENCE_PRIMES.iter().enumerate() {
        let k = refp.field()?;
        let prime = refp.prime(&k, cfg.seed)?;
        let lam = asymptotic_lambda(&k, &prime, cfg.lmax, &[], &opts)?;
        let key = format!("prime.{pi}");
        r.push(&format!("{key}.table"), refp.table);
        r.push(&format!("{key}.ideal"), refp.label());
        r.push(&format!("{key}.lambda"), format!("{:.6}", lam.lambda));
        r.push(&format!("{key}.reference_lambda"), format!("{:.3}", refp.lambda));
        human.push(format!(
            "Table {} K = Q[x]/({}) P = {} q = {}: lambda >= {:.6} at l = {} (listed {:.3})",
            refp.table,
            k.polynomial(),
            refp.label(),
            refp.q,
            lam.lambda,
            cfg.lmax,
            refp.lambda
        ));
        for row in refp.rows {
            let key = format!("row.{row_id}");
            row_id += 1;
            let implied = implied_code_sum(&k, &prime, row.n, row.log2_delta, &opts)?;
            r.push(&format!("{key}.prime"), pi);
            r.push(&format!("{key}.dimension"), row.dimension);
            r.push(&format!("{key}.reference_log2_center_density"), format!("{:.2}", row.log2_delta));
            r.push(&format!("{key}.implied_sum_k"), format!("{:.4}", implied.sum_k));
            match finite_density_report(&k, &prime, row.n, &table, &opts) {
                Ok(rep) => {
                    let ok = (rep.log2_center_density - row.log2_delta).abs() <= 0.01;
                    reproduced += ok as usize;
                    r.push(&format!("{key}.status"), if ok { "reproduced" } else { "mismatch" });
                    r.push(&format!("{key}.log2_center_density"), format!("{:.6}", rep.log2_center_density));
                    r.push(&format!("{key}.missing"), "");
                    human.push(format!(
                        "  dim {:4} (n = {:3}): log2 delta >= {:.6}  [{}]",
                        row.dimension,
                        row.n,
                        rep.log2_center_density,
                        if ok { "matches" } else { "MISMATCH" }
                    ));
                }
                Err(Error::MissingEntry { .. }) => {
                    missing += 1;
                    let lookups = missing_lookups(&k, &prime, row.n, &table, &opts)?;
                    r.push(&format!("{key}.status"), "data-missing");
                    r.push(&format!("{key}.log2_center_density"), "na");
                    r.push(&format!("{key}.missing"), lookups.join(";"));
                    human.push(format!(
                        "  dim {:4} (n = {:3}): data-missing, needs (q,n,d) = {}; listed {:.2} implies sum k = {:.4}",
                        row.dimension,
                        row.n,
                        lookups.join(" "),
                        row.log2_delta,
                        implied.sum_k
                    ));
                }
                Err(e) => return Err(e),
            }
        }
    }
    r.push("rows", row_id);
    r.push("reproduced", reproduced);
    r.push("data_missing", missing);
    if missing > 0 {
        r.warnings.push(format!("{missing} of {row_id} rows lack code-table data"));
    }
    r.human = human.join("\n");
    Ok(r)
}

fn missing_lookups(
    k: &NumberField,
    prime: &PrimeIdealFactor,
    n: u64,
    table: &CodeTable,
    opts: &TowerOptions,
) -> Result<Vec<String>> {
    let q = prime.q_u64();
    let req = required_code_distances(k, prime, n, opts)?;
    Ok(req
        .required_d
        .iter()
        .filter(|&&d| table.best_dimension(q, n, d).is_err())
        .map(|d| format!("({q},{n},{d})"))
        .collect())
}

/// Outcome of one property suite.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
}

fn suite(name: &'static str, results: impl IntoIterator<Item = bool>) -> SuiteResult {
    let mut s = SuiteResult {
        name,
        ..Default::default()
    };
    for ok in results {
        if ok {
            s.passed += 1;
        } else {
            s.failed += 1;
        }
    }
    s
}

const VERIFY_LEVELS: usize = 3;

/// Seeded property suites over the reference fields.
pub fn run_suites(cfg: &RunConfig) -> Result<Vec<SuiteResult>> {
    let opts = cfg.tower_options();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut det = Vec::new();
    let mut norms = Vec::new();
    let mut oracle = Vec::new();
    let mut alphabets = Vec::new();
    for refp in REFERENCE_PRIMES {
        let k = refp.field()?;
        let m = k.degree();
        let prime = refp.prime(&k, cfg.seed)?;
        // the tower checks the determinant law at every level and fails loudly
        let tower = ideal_tower(&k, &prime, VERIFY_LEVELS, &opts)?;
        det.extend(tower.levels.iter().map(|l| l.det_rel_error <= 2f64.powi(-((tower.ctx.precision() / 4) as i32))));
        for _ in 0..25 {
            let a: Vec<i64> = (0..m).map(|_| rng.gen_range(-9..=9)).collect();
            let b: Vec<i64> = (0..m).map(|_| rng.gen_range(-9..=9)).collect();
            let (a, b) = (FieldElement::from_i64s(&a), FieldElement::from_i64s(&b));
            let ab = k.mul(&a, &b)?;
            norms.push(k.norm(&ab)? == k.norm(&a)? * k.norm(&b)?);
        }
        if m <= 4 {
            let ctx = EmbeddingContext::new(&k, opts.precision.unwrap_or(192))?;
            for i in 0..=VERIFY_LEVELS as u64 {
                let basis = lattice_basis(&ctx, &ideal_power(&k, &prime.hnf, i)?)?;
                let svp = shortest_vector(&basis)?;
                let bf = brute_force_min(&basis, 8)?;
                oracle.push(crate::lattice::approx_eq(&svp.min_sq, &bf, svp.rel_error.max(1e-30)));
            }
        }
        for i in 0..=VERIFY_LEVELS {
            let s = alphabet_set(&k, &prime, i)?;
            let here = ideal_power(&k, &prime.hnf, i as u64)?;
            let next = ideal_power(&k, &prime.hnf, i as u64 + 1)?;
            let mut ok = s.len() as u64 == refp.q && s.elements[0].is_zero();
            for (x, a) in s.elements.iter().enumerate() {
                ok &= contains(&here, a)?;
                for b in &s.elements[x + 1..] {
                    ok &= !contains(&next, &a.sub(b))?;
                }
            }
            alphabets.push(ok);
        }
    }
    let tiny = tiny_instances(cfg.seed, 20, 5)
        .iter()
        .map(|inst| run_tiny_instance(inst).map(|o| o.passed()))
        .collect::<Result<Vec<bool>>>()?;
    Ok(vec![
        suite("determinant_law", det),
        suite("norm_multiplicativity", norms),
        suite("svp_oracle", oracle),
        suite("alphabet_sets", alphabets),
        suite("lemma_tiny_instances", tiny),
    ])
}

pub fn cmd_verify(cfg: &RunConfig) -> Result<Report> {
    let suites = run_suites(cfg)?;
    let mut r = Report::new("verify");
    r.push("seed", cfg.seed);
    let mut human = Vec::new();
    let mut failed = 0;
    for s in &suites {
        r.push(&format!("{}.passed", s.name), s.passed);
        r.push(&format!("{}.failed", s.name), s.failed);
        failed += s.failed;
        human.push(format!(
            "{:24} {:4} passed {:3} failed",
            s.name, s.passed, s.failed
        ));
    }
    r.push("status", if failed == 0 { "pass" } else { "fail" });
    human.push(if failed == 0 { "all suites pass".into() } else { format!("{failed} checks failed") });
    r.human = human.join("\n");
    if failed > 0 {
        r.exit_code = 4;
    }
    Ok(r)
}
