use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use pbent_core::bent::{classify as classify_fn, extract_dual, is_bent};
use pbent_core::constructions::{
    agw_combine, cm_bent, cor1_family, direct_sum, monomial_bent, ndcor_condition_sum,
    ndcor_function, product_form, sds_is_bent_condition, semi_direct_sum, sporadic, G2Coeff,
    NdCorSpec, PowerMap, SdsSpec, Sporadic,
};
use pbent_core::reference::{run_reference_checks, Expectations, Status};
use pbent_core::search::{candidate_pairs, search as run_search, SearchConfig};
use pbent_core::walsh::walsh;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::input::{element, emit_json, emit_tt, field, function, load_tt, random_nonzero};
use crate::{Construct, Family, FieldArgs, InputArgs, SporadicName, A0};

pub fn classify(input: &InputArgs, out: Option<&Path>) -> Result<ExitCode> {
    let f = function(input)?;
    emit_json(out, &classify_fn(&f)?.to_json())?;
    Ok(ExitCode::SUCCESS)
}

pub fn dual(input: &InputArgs, out: Option<&Path>) -> Result<ExitCode> {
    let f = function(input)?;
    let w = walsh(&f);
    if !is_bent(&w) {
        bail!("function is not bent, so it has no dual");
    }
    emit_tt(out, &extract_dual(&w)?.0)?;
    Ok(ExitCode::SUCCESS)
}

pub fn spectrum(input: &InputArgs, out: Option<&Path>) -> Result<ExitCode> {
    let f = function(input)?;
    emit_json(out, &walsh(&f).to_json())?;
    Ok(ExitCode::SUCCESS)
}

fn alpha_or_random(
    ctx: &pbent_core::FieldCtx,
    src: Option<&str>,
    seed: u64,
) -> Result<pbent_core::FieldElement> {
    match src {
        Some(s) => element(ctx, s),
        None => Ok(random_nonzero(ctx, &mut ChaCha8Rng::seed_from_u64(seed))),
    }
}

pub fn construct(kind: Construct, out: Option<&Path>) -> Result<ExitCode> {
    let f = match kind {
        Construct::Monomial {
            field: fa,
            alpha,
            k,
            seed,
        } => {
            let ctx = field(&fa)?;
            let a = alpha_or_random(&ctx, alpha.as_deref(), seed)?;
            monomial_bent(&ctx, a, k)?
        }
        Construct::Cm {
            field: fa,
            alpha,
            k,
            seed,
        } => {
            let ctx = field(&fa)?;
            let a = alpha_or_random(&ctx, alpha.as_deref(), seed)?;
            cm_bent(&ctx, a, k)?
        }
        Construct::Directsum { f, g } => direct_sum(&load_tt(&f)?, &load_tt(&g)?)?,
        Construct::Sds { f, g, h, check } => {
            let hs = h.iter().map(|p| load_tt(p)).collect::<Result<Vec<_>>>()?;
            let spec = SdsSpec::new(load_tt(&f)?, load_tt(&g)?, hs)?;
            if check {
                let c = sds_is_bent_condition(&spec);
                eprintln!(
                    "condition holds: {}{}",
                    c.holds,
                    c.witness
                        .map(|b| format!(" (first failing b = {b})"))
                        .unwrap_or_default()
                );
            }
            semi_direct_sum(&spec)?
        }
        Construct::Cor1 {
            field: fa,
            alphas,
            g,
            family,
            k,
        } => {
            let ctx = field(&fa)?;
            let alphas = alphas
                .split(';')
                .map(|s| element(&ctx, s))
                .collect::<Result<Vec<_>>>()?;
            let g = match g {
                Some(path) => load_tt(&path)?,
                None => product_form(ctx.p()),
            };
            let map = match family {
                Family::Monomial => PowerMap::Monomial { k },
                Family::Cm => PowerMap::CoulterMatthews { k },
            };
            let out = cor1_family(&ctx, map, &alphas, &g)?;
            eprintln!(
                "quadratic characters: {} squares, {} non-squares",
                out.squares, out.non_squares
            );
            out.function
        }
        Construct::Ndcor {
            field: fa,
            alpha,
            beta,
            seed,
            report,
        } => {
            let ctx = field(&fa)?;
            let spec = match (alpha, beta) {
                (Some(a), Some(b)) => {
                    NdCorSpec::new(ctx.clone(), element(&ctx, &a)?, element(&ctx, &b)?)?
                }
                _ => random_pair(&ctx, seed)?,
            };
            if report {
                let s = ndcor_condition_sum(&spec);
                eprintln!(
                    "alpha = {}, beta = {}, S = {s}, |S|^2 = {}",
                    ctx.format(spec.alpha()),
                    ctx.format(spec.beta()),
                    s.abs_sq()
                );
            }
            ndcor_function(&spec)?
        }
        Construct::Agw { f } => {
            let fs = f.iter().map(|p| load_tt(p)).collect::<Result<Vec<_>>>()?;
            agw_combine(&fs)?
        }
        Construct::Sporadic {
            name,
            field: fa,
            a0,
            xi,
        } => {
            let which = match name {
                SporadicName::G1 => Sporadic::G1,
                SporadicName::G3 => Sporadic::G3,
                SporadicName::G2 => Sporadic::G2(match a0 {
                    A0::PlusXi10 => G2Coeff::PlusXi10,
                    A0::MinusXi10 => G2Coeff::MinusXi10,
                    A0::PlusXi30 => G2Coeff::PlusXi30,
                    A0::MinusXi30 => G2Coeff::MinusXi30,
                    A0::Zero => G2Coeff::Zero,
                }),
            };
            let (p, m) = which.shape();
            let fa = FieldArgs {
                p: fa.p.or(Some(p)),
                m: fa.m.or(Some(m)),
                ..fa
            };
            let ctx = field(&fa)?;
            let xi = xi.map(|s| element(&ctx, &s)).transpose()?;
            sporadic(which, &ctx, xi)?
        }
    };
    emit_tt(out, &f)?;
    Ok(ExitCode::SUCCESS)
}

fn random_pair(ctx: &Arc<pbent_core::FieldCtx>, seed: u64) -> Result<NdCorSpec> {
    let count = candidate_pairs(ctx).count();
    if count == 0 {
        bail!("no independent pair exists in {}", ctx.describe());
    }
    let pick = ChaCha8Rng::seed_from_u64(seed).gen_range(0..count);
    let (a, b) = candidate_pairs(ctx).nth(pick).expect("pick < count");
    Ok(NdCorSpec::new(ctx.clone(), a, b)?)
}

pub fn search(
    fa: &FieldArgs,
    limit: Option<usize>,
    timed: bool,
    width: usize,
    out: Option<&Path>,
) -> Result<ExitCode> {
    let ctx = field(fa)?;
    let cfg = SearchConfig {
        limit,
        width,
        deterministic: !timed,
    };
    let mut sink: Box<dyn Write> = match out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("creating {}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let summary = run_search(&ctx, &cfg, |rec| {
        let line = serde_json::to_string(rec).expect("record serializes");
        writeln!(sink, "{line}").map_err(pbent_core::Error::from)
    })?;
    sink.flush()?;
    eprintln!("{}", serde_json::to_string(&summary)?);
    Ok(ExitCode::SUCCESS)
}

pub fn verify(modulus36: Option<&[u32]>, json: bool, corrupt: bool) -> Result<ExitCode> {
    let mut exp = Expectations::default();
    if corrupt {
        exp.f27_abs_sq += 1;
    }
    if modulus36.is_none() {
        eprintln!("warning: no --modulus-36 given; skipping g1 and g3");
    }
    let rows = run_reference_checks(&exp, modulus36)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&rows)?);
    } else {
        let width = rows.iter().map(|r| r.id.len()).max().unwrap_or(0);
        for r in &rows {
            let tag = match r.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skip => "SKIP",
            };
            println!("{tag}  {:width$}  {}", r.id, r.detail);
        }
    }
    let failed = rows.iter().filter(|r| r.status == Status::Fail).count();
    eprintln!("{} checks, {failed} failed", rows.len());
    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}
