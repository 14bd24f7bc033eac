use std::fs;
use std::path::Path;

use graded_convexity::chain_map::format::{chain_map_to_text, parse_chain_map};
use graded_convexity::chain_map::{search_hae, verify_hae, HaeDefect, HaeSearch};
use graded_convexity::corpus::{self, CorpusKind, CorpusSpec};
use graded_convexity::homology::format::{parse_complex, parse_family};
use graded_convexity::homology::{level_complexity, mu, reduced_betti, shatter, skeleton_simplex, SimplicialComplex};
use graded_convexity::params::{
    self, colorful_helly, fh_profile, graded, partition_number, CliqueMode, ParameterOptions, ParameterRegistry,
};
use graded_convexity::theorems::{
    self, growth_diagnostic, rg2_witness, CheckArgs, CheckRegistry, CheckReport, PsiTable, Value, Verdict,
};
use graded_convexity::{Budget, Error, Result, SetSystem};
use serde_json::{json, Map};

use crate::output::{big, list, ratio, set, Record};
use crate::{Cli, Command, Status};

type Outcome = (Vec<Record>, Status);

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn set_system(path: &Path) -> Result<SetSystem> {
    SetSystem::parse(&read(path)?)
}

fn complex(path: &Path) -> Result<SimplicialComplex> {
    parse_complex(&read(path)?)
}

fn ok(record: Record) -> Result<Outcome> {
    Ok((vec![record], Status::Ok))
}

pub fn dispatch(cli: &Cli) -> Result<Outcome> {
    let budget = Budget::new(cli.budget);
    match &cli.command {
        Command::Helly { input } => {
            let v = params::helly(&set_system(input)?, &budget)?;
            ok(Record::new("helly").field("value", v).line(v.to_string()))
        }
        Command::Radon { input } => {
            let f = set_system(input)?;
            let v = params::radon(&f, &budget)?;
            let w = params::radon_witness(&f, &budget)?;
            ok(Record::new("radon").field("value", v).field("witness", w.clone()).line(v.to_string()))
        }
        Command::Obstructions { input } => {
            let obs = params::minimal_obstructions(&set_system(input)?, &budget)?;
            let sels: Vec<Vec<usize>> = obs.iter().map(|o| o.selector.indices().to_vec()).collect();
            let mut r = Record::new("obstructions").field("count", obs.len()).field("obstructions", sels.clone());
            if sels.is_empty() {
                r = r.line("none");
            }
            for s in sels {
                r = r.line(set(s));
            }
            ok(r)
        }
        Command::Graded { input, param, t, c, k } => {
            let f = set_system(input)?;
            let p = ParameterRegistry::default().build(param, &ParameterOptions { c: *c, k: *k })?;
            let t = t.unwrap_or(f.len()).max(1);
            let prof = graded(&f, p.as_ref(), t, &budget)?;
            ok(Record::new("graded")
                .field("param", p.name())
                .field("t_max", t)
                .field("profile", prof.0.clone())
                .line(list(&prof.0)))
        }
        Command::Partition { input, k } => {
            let v = partition_number(&set_system(input)?, *k, &budget)?;
            ok(Record::new("partition").field("k", *k).field("value", v).line(v.to_string()))
        }
        Command::Colorful { input, c } => {
            let mode = match c {
                None => CliqueMode::Plain,
                Some(0) => return Err(Error::Input("clique arity c must be at least 1".into())),
                Some(c) => CliqueMode::CWise(*c),
            };
            let v = colorful_helly(&set_system(input)?, mode, &budget)?;
            let mut r = Record::new("colorful").field("value", v);
            if let Some(c) = c {
                r = r.field("c", *c);
            }
            ok(r.line(v.to_string()))
        }
        Command::FhProfile { input, s, c } => {
            let p = fh_profile(&set_system(input)?, *s, *c, &budget)?;
            ok(Record::new("fh-profile")
                .field("s", p.s)
                .field("c", p.c)
                .field("n", p.n)
                .field("alpha", ratio(p.alpha.numer(), p.alpha.denom()))
                .field("max_cwise_clique", p.max_cwise_clique)
                .line(format!("alpha: {}/{}", p.alpha.numer(), p.alpha.denom()))
                .line(format!("max_cwise_clique: {}", p.max_cwise_clique)))
        }
        Command::Betti { input } => {
            let b = reduced_betti(&complex(input)?);
            let vals: Vec<u64> = b.0.iter().map(|&x| x as u64).collect();
            ok(Record::new("betti").field("reduced_betti", vals.clone()).line(list(&vals)))
        }
        Command::Shatter { input, h, k } => {
            let fam = parse_family(&read(input)?)?;
            let k = k.unwrap_or(fam.len()).max(1);
            let prof = shatter(&fam, *h, k, &budget)?;
            ok(Record::new("shatter").field("h", *h).field("profile", prof.0.clone()).line(list(&prof.0)))
        }
        Command::Level { input, h } => {
            let fam = parse_family(&read(input)?)?;
            let v = level_complexity(&fam, *h, &budget)?;
            ok(Record::new("level").field("h", *h).field("value", v).line(v.to_string()))
        }
        Command::Mu { input } => {
            let v = mu(&complex(input)?);
            ok(Record::new("mu").field("value", v).line(v.map_or("none".into(), |v| v.to_string())))
        }
        Command::Skeleton { n, k } => {
            let c = skeleton_simplex(*n, *k)?;
            let text = c.to_text();
            ok(Record::new("skeleton")
                .field("n", *n)
                .field("k", *k)
                .field("f_vector", c.f_vector())
                .field("text", text.clone())
                .line(text.trim_end()))
        }
        Command::VerifyHae { k, l, map } => {
            let (k, l) = (complex(k)?, complex(l)?);
            let f = parse_chain_map(&read(map)?, &k, &l)?;
            match verify_hae(&f) {
                Ok(()) => ok(Record::new("verify-hae").field("verdict", "holds").line("holds")),
                Err(d) => {
                    let kind = match d {
                        HaeDefect::NotChainMap { .. } => "not-chain-map",
                        HaeDefect::EvenVertexSupport { .. } => "even-vertex-support",
                        HaeDefect::SupportsMeet { .. } => "supports-meet",
                    };
                    let r = Record::new("verify-hae")
                        .field("verdict", "fails")
                        .field("defect", kind)
                        .field("diagnostic", d.to_string())
                        .line(format!("fails: {d}"));
                    Ok((vec![r], Status::Fails))
                }
            }
        }
        Command::SearchHae { k, l } => {
            let out = search_hae(&complex(k)?, &complex(l)?, &budget)?;
            let mut r = Record::new("search-hae").field("result", out.tag()).field("nodes", out.nodes_explored).line(out.tag());
            let status = match &out.result {
                HaeSearch::Found(map) => {
                    let text = chain_map_to_text(map);
                    r = r.field("certificate", text.clone()).line(text.trim_end());
                    Status::Ok
                }
                HaeSearch::ExhaustedNone => Status::Ok,
                HaeSearch::BudgetExceeded => Status::Budget,
            };
            Ok((vec![r], status))
        }
        Command::Xi { r } => {
            let v = theorems::xi(*r)?;
            ok(Record::new("xi").field("r", *r).field("value", big(&v)).line(v.to_string()))
        }
        Command::Check { suite, input, args } => {
            let f = set_system(input)?;
            let args = CheckArgs::parse(args)?;
            let report = CheckRegistry::default().run(suite, &f, &args, &budget)?;
            Ok(report_outcome(&report))
        }
        Command::Rg2Witness { psi, tmax } => {
            let table = PsiTable::parse(&read(psi)?)?;
            Ok(report_outcome(&rg2_witness(&table, *tmax)?))
        }
        Command::DiagnoseGrowth { input, t } => {
            let rows = growth_diagnostic(&set_system(input)?, *t, &budget)?;
            let records = rows
                .iter()
                .map(|e| {
                    let sign = e.sign.symbol().to_string();
                    Record::new("growth")
                        .field("t", e.t)
                        .field("radon", e.radon)
                        .field("sign", sign.clone())
                        .line(format!("{}\t{}\t{sign}", e.t, e.radon))
                })
                .collect();
            Ok((records, Status::Ok))
        }
        Command::GenCorpus { seed, count, ground, members, kind, out } => {
            let spec = CorpusSpec {
                seed: *seed,
                count: *count,
                ground: *ground,
                members: *members,
                kind: kind.parse::<CorpusKind>()?,
            };
            let systems = corpus::generate(&spec)?;
            if let Some(dir) = out {
                fs::create_dir_all(dir).map_err(|e| Error::Input(format!("{}: {e}", dir.display())))?;
            }
            let mut records = Vec::with_capacity(systems.len());
            for (name, f) in systems {
                let text = f.to_text();
                let mut r = Record::new("instance")
                    .field("name", name.clone())
                    .field("ground", f.ground_size())
                    .field("members", f.len());
                match out {
                    Some(dir) => {
                        let file = format!("{name}.ss");
                        fs::write(dir.join(&file), &text)
                            .map_err(|e| Error::Input(format!("{}: {e}", dir.join(&file).display())))?;
                        r = r.field("file", file.clone()).line(file);
                    }
                    None => {
                        r = r.field("text", text.clone()).line(format!("# {name}\n{}", text.trim_end()));
                    }
                }
                records.push(r);
            }
            Ok((records, Status::Ok))
        }
    }
}

fn value_json(v: &Value) -> serde_json::Value {
    match v {
        Value::Int(i) => json!(i),
        Value::Big(b) => big(b),
        Value::Profile(p) => json!(p),
        Value::Text(s) => json!(s),
    }
}

fn pairs_json(pairs: &[(String, Value)]) -> serde_json::Value {
    let mut m = Map::new();
    for (k, v) in pairs {
        m.insert(k.clone(), value_json(v));
    }
    serde_json::Value::Object(m)
}

fn report_outcome(report: &CheckReport) -> Outcome {
    let mut r = Record::new("check")
        .field("name", report.name.clone())
        .field("verdict", report.verdict.tag())
        .field("quantities", pairs_json(&report.quantities))
        .field("notes", report.notes.clone())
        .line(report.to_string());
    let status = match &report.verdict {
        Verdict::Holds => Status::Ok,
        Verdict::NotApplicable { reason } => {
            r = r.field("reason", reason.clone());
            Status::Ok
        }
        Verdict::Fails { witness } => {
            r = r.field("witness", pairs_json(witness));
            Status::Fails
        }
        Verdict::Budget { lower_bound } => {
            if let Some(b) = lower_bound {
                r = r.field("lower_bound", *b);
            }
            Status::Budget
        }
    };
    (vec![r], status)
}
