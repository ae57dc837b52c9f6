use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde::Serialize;

use stacktop::checks::{
    check_associativity, check_coassociativity, check_cocommutativity, check_frobenius, check_graded_commutativity,
    check_morphism, check_snake,
};
use stacktop::grading::{self, EigenData, SectorRecord};
use stacktop::group::{self, FiniteGroupTable, TableDoc};
use stacktop::lie::{self, ExponentProfile};
use stacktop::tqft::{self, SurfaceSignature};
use stacktop::twist::{self, Weights};
use stacktop::{scalar, serial, sphere, CheckReport, FrobeniusData};

use super::{AlgebraArgs, Command, GroupArgs, Output};

const ALGEBRA_CHECKS: [&str; 6] = [
    "associativity",
    "commutativity",
    "coassociativity",
    "cocommutativity",
    "frobenius",
    "snake",
];

const LIE_CHECKS: [&str; 5] = ["associativity", "symmetry", "factorization", "unit", "degree"];

#[derive(Serialize)]
struct ReportDoc<'a> {
    command: &'a str,
    subject: String,
    passed: bool,
    reports: &'a [CheckReport],
    #[serde(skip_serializing_if = "Vec::is_empty")]
    notes: Vec<String>,
}

/// Artifacts collected during a command, written in one place at the end.
struct Job<'a> {
    command: &'a str,
    subject: String,
    reports: Vec<CheckReport>,
    notes: Vec<String>,
    files: Vec<(&'static str, String)>,
}

impl<'a> Job<'a> {
    fn new(command: &'a str, subject: impl Into<String>) -> Self {
        Job {
            command,
            subject: subject.into(),
            reports: Vec::new(),
            notes: Vec::new(),
            files: Vec::new(),
        }
    }

    fn file(&mut self, name: &'static str, text: String) {
        self.files.push((name, text));
    }

    fn json<T: Serialize>(&mut self, name: &'static str, value: &T) -> Result<()> {
        self.file(name, serde_json::to_string_pretty(value)? + "\n");
        Ok(())
    }

    fn finish(self, out: &Output) -> Result<bool> {
        let passed = self.reports.iter().all(CheckReport::passed);
        let doc = ReportDoc {
            command: self.command,
            subject: self.subject.clone(),
            passed,
            reports: &self.reports,
            notes: self.notes.clone(),
        };
        let report_text = serde_json::to_string_pretty(&doc)? + "\n";
        for r in &self.reports {
            println!("{r}");
        }
        for n in &self.notes {
            println!("note: {n}");
        }
        if let Some(dir) = &out.out {
            fs::create_dir_all(dir).with_context(|| format!("--out: cannot create {}", dir.display()))?;
            for (name, text) in self.files.iter().chain([&("report.json", report_text)]) {
                let path = dir.join(name);
                fs::write(&path, text).with_context(|| format!("--out: cannot write {}", path.display()))?;
            }
        } else if let Some((_, text)) = self.files.first() {
            print!("{text}");
        }
        Ok(passed)
    }
}

fn read(path: &Path, field: &str) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("{field}: cannot read {}", path.display()))
}

fn load_group(args: &GroupArgs) -> Result<(FiniteGroupTable, String)> {
    let given = [args.group.is_some(), args.table.is_some(), !args.perms.is_empty()];
    if given.iter().filter(|&&g| g).count() != 1 {
        bail!("give exactly one of --group, --table, --perms");
    }
    if let Some(name) = &args.group {
        let g = group::builtin_group(name).map_err(|e| anyhow!("--group: {e}"))?;
        return Ok((g, name.clone()));
    }
    if let Some(path) = &args.table {
        let doc: TableDoc = serde_json::from_str(&read(path, "--table")?).map_err(|e| anyhow!("--table: {e}"))?;
        let g = group::group_from_doc(&doc).map_err(|e| anyhow!("--table: {e}"))?;
        return Ok((g, path.display().to_string()));
    }
    let degree = args
        .perms
        .iter()
        .flat_map(|p| p.split(|c: char| !c.is_ascii_digit()))
        .filter_map(|s| s.parse::<usize>().ok())
        .max()
        .unwrap_or(1);
    let gens: Vec<&str> = args.perms.iter().map(String::as_str).collect();
    let g = group::group_from_cycle_strings(degree, &gens).map_err(|e| anyhow!("--perms: {e}"))?;
    Ok((g, format!("<{}>", args.perms.join(", "))))
}

fn dw(args: &GroupArgs) -> Result<(FrobeniusData, String)> {
    let (g, name) = load_group(args)?;
    let a = group::dw_algebra(&g)?.with_name(&format!("DW({name})"));
    Ok((a, name))
}

fn load_algebra(args: &AlgebraArgs) -> Result<FrobeniusData> {
    match &args.algebra {
        Some(path) => {
            let g = &args.group;
            if g.group.is_some() || g.table.is_some() || !g.perms.is_empty() {
                bail!("--algebra cannot be combined with a group source");
            }
            serial::algebra_from_json(&read(path, "--algebra")?).map_err(|e| anyhow!("--algebra: {e}"))
        }
        None => Ok(dw(&args.group)?.0),
    }
}

fn selected<'n>(check: &str, known: &[&'n str]) -> Result<(Vec<&'n str>, bool)> {
    match check.trim() {
        "none" | "" => Ok((Vec::new(), false)),
        "all" => Ok((known.to_vec(), true)),
        list => list
            .split(',')
            .map(|s| {
                let s = s.trim();
                known
                    .iter()
                    .find(|k| **k == s)
                    .copied()
                    .ok_or_else(|| anyhow!("--check: unknown check `{s}` (known: {}, all, none)", known.join(", ")))
            })
            .collect::<Result<Vec<_>>>()
            .map(|v| (v, false)),
    }
}

fn algebra_checks(a: &FrobeniusData, check: &str, job: &mut Job) -> Result<()> {
    let (names, all) = selected(check, &ALGEBRA_CHECKS)?;
    for name in names {
        let r = match name {
            "associativity" => check_associativity(a),
            "commutativity" => check_graded_commutativity(a),
            "coassociativity" => check_coassociativity(a),
            "cocommutativity" => check_cocommutativity(a),
            "frobenius" => check_frobenius(a),
            "snake" => match check_snake(a) {
                Ok(r) => r,
                Err(e) if all => {
                    job.notes.push(format!("snake skipped: {e}"));
                    continue;
                }
                Err(e) => bail!("--check snake: {e}"),
            },
            _ => unreachable!("filtered by selected"),
        };
        job.reports.push(r);
    }
    Ok(())
}

fn profile(name: &Option<String>, exponents: &Option<String>) -> Result<ExponentProfile> {
    match (name, exponents) {
        (Some(n), None) => lie::builtin_profile(n).map_err(|e| anyhow!("--lie-name: {e}")),
        (None, Some(list)) => {
            let exps = list
                .split(',')
                .map(|s| s.trim().parse::<u32>().map_err(|_| anyhow!("--exponents: `{s}` is not a positive integer")))
                .collect::<Result<Vec<_>>>()?;
            ExponentProfile::custom(&exps).map_err(|e| anyhow!("--exponents: {e}"))
        }
        _ => bail!("give exactly one of --lie-name, --exponents"),
    }
}

pub fn run(command: Command) -> Result<bool> {
    match command {
        Command::Dw { group, check, out } => {
            let (a, name) = dw(&group)?;
            let mut job = Job::new("dw", name);
            algebra_checks(&a, &check, &mut job)?;
            job.file("algebra.json", serial::algebra_to_json(&a));
            job.finish(&out)
        }
        Command::Sphere { n, check, out } => {
            let a = sphere::sphere_string_algebra(n)?;
            let mut job = Job::new("sphere", format!("n={n}"));
            algebra_checks(&a, &check, &mut job)?;
            job.file("algebra.json", serial::algebra_to_json(&a));
            job.finish(&out)
        }
        Command::Lie {
            lie_name,
            exponents,
            truncate,
            check,
            out,
        } => {
            let p = profile(&lie_name, &exponents)?;
            let mut job = Job::new("lie", p.display_name());
            let (names, _) = selected(&check, &LIE_CHECKS)?;
            for name in names {
                job.reports.push(match name {
                    "associativity" => lie::check_associativity_truncated(&p, truncate)?,
                    "symmetry" => lie::check_literal_symmetry(&p, truncate)?,
                    "factorization" => lie::check_factorization(&p, truncate)?,
                    "unit" => lie::check_unit(&p, truncate)?,
                    "degree" => lie::check_degree(&p, truncate)?,
                    _ => unreachable!("filtered by selected"),
                });
            }
            job.file("algebra.json", serial::algebra_to_json(&lie::truncated_algebra(&p, truncate)?));
            job.finish(&out)
        }
        Command::Grading { exponents, check, out } => {
            let gen = EigenData::parse(&exponents).map_err(|e| anyhow!("--exponents: {e}"))?;
            let rows = grading::sector_table(&gen)?;
            let mut job = Job::new("grading", gen.render());
            let (names, _) = selected(&check, &["age-dimension", "pairing-degree"])?;
            let n = rows.len() as i64;
            let elems: Vec<EigenData> = (0..n).map(|t| gen.power(t)).collect();
            let records: Vec<SectorRecord> = elems
                .iter()
                .enumerate()
                .map(|(t, e)| SectorRecord::from_eigen(&format!("g^{t}"), e))
                .collect();
            for name in names {
                if name == "age-dimension" {
                    job.reports.extend(elems.iter().map(grading::check_age_dimension));
                    continue;
                }
                for s in 0..n as usize {
                    for t in 0..n as usize {
                        let st = (s + t) % n as usize;
                        let dim_double = 2 * elems[s]
                            .exponents()
                            .iter()
                            .zip(elems[t].exponents())
                            .filter(|(a, b)| a == &&scalar::zero() && b == &&scalar::zero())
                            .count() as i64;
                        let i = scalar::int(records[s].fixed_dim) + scalar::int(2) * &records[s].age;
                        let j = scalar::int(records[t].fixed_dim) + scalar::int(2) * &records[t].age;
                        let ledger =
                            grading::check_pairing_degree(&records[s], &records[t], &records[st], dim_double, &i, &j)?;
                        job.reports.push(ledger.report);
                    }
                }
            }
            job.json("sectors.json", &rows)?;
            job.finish(&out)
        }
        Command::Tqft {
            source,
            genus,
            inputs,
            outputs,
            out,
        } => {
            let a = load_algebra(&source)?;
            let mut job = Job::new("tqft", a.name());
            let counit_tag = a.tags().get("counit").cloned();
            if inputs.is_empty() && outputs == 0 {
                let value = tqft::closed_invariant(&a, genus)?;
                job.json(
                    "result.json",
                    &serde_json::json!({
                        "genus": genus,
                        "closed_invariant": scalar::format(&value),
                        "counit": counit_tag,
                    }),
                )?;
            } else {
                let args = inputs
                    .iter()
                    .map(|l| a.basis_element(l).map_err(|e| anyhow!("--inputs: {e}")))
                    .collect::<Result<Vec<_>>>()?;
                let sig = SurfaceSignature::new(args.len(), outputs, genus);
                let t = tqft::surface_operation(&a, sig, &args)?;
                job.json(
                    "result.json",
                    &serde_json::json!({
                        "signature": sig,
                        "inputs": inputs,
                        "result": t.to_pairs(),
                        "counit": if outputs == 0 { counit_tag } else { None },
                    }),
                )?;
            }
            job.finish(&out)
        }
        Command::Twist { source, cocycle, out } => {
            let a = load_algebra(&source)?;
            let alpha = Weights::from_json(&read(&cocycle, "--cocycle")?).map_err(|e| anyhow!("--cocycle: {e}"))?;
            let mut job = Job::new("twist", a.name());
            job.reports.push(twist::check_cocycle(&a, &alpha)?);
            let t = twist::twist_product(&a, &alpha)?;
            job.reports.push(check_associativity(&t));
            job.file("algebra.json", serial::algebra_to_json(&t));
            job.finish(&out)
        }
        Command::Check { source, check, out } => {
            let a = load_algebra(&source)?;
            let mut job = Job::new("check", a.name());
            algebra_checks(&a, &check, &mut job)?;
            job.finish(&out)
        }
        Command::Phi { n, truncate, out } => {
            let (s, l, f) = sphere::phi_map(n, truncate)?;
            let mut job = Job::new("phi", format!("n={n}, u^{truncate}"));
            job.reports.push(check_morphism(&f, &s, &l.algebra)?);
            job.file("map.json", serial::map_to_json(&f));
            job.file("source.json", serial::algebra_to_json(&s));
            job.file("target.json", serial::algebra_to_json(&l.algebra));
            job.finish(&out)
        }
    }
}
