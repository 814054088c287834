use std::fs;
use std::io::Write;
use std::path::Path;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use pbent_core::field::{builtin_modulus, find_irreducible};
use pbent_core::pfunc::expr::parse_element;
use pbent_core::pfunc::io::{read_truth_table, write_truth_table};
use pbent_core::{FieldCtx, FieldElement, PFunction};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::{FieldArgs, InputArgs};

pub fn field(args: &FieldArgs) -> Result<Arc<FieldCtx>> {
    let (p, m) = match (args.p, args.m, &args.modulus) {
        (Some(p), Some(m), _) => (p, m),
        (Some(p), None, Some(modulus)) => (p, modulus.len().saturating_sub(1) as u32),
        _ => bail!("--p and --m (or --p and --modulus) are required"),
    };
    let modulus = match &args.modulus {
        Some(v) => v.clone(),
        None => match builtin_modulus(p, m) {
            Some(v) => v,
            None => find_irreducible(p, m)?,
        },
    };
    Ok(Arc::new(FieldCtx::new(p, m, &modulus, args.primitive)?))
}

/// `@index` or a coefficient expression such as `w^2+1` or `g^5`.
pub fn element(ctx: &FieldCtx, src: &str) -> Result<FieldElement> {
    let src = src.trim();
    if let Some(idx) = src.strip_prefix('@') {
        let idx: u32 = idx
            .parse()
            .with_context(|| format!("bad element index {idx:?}"))?;
        return Ok(ctx.try_elem(idx)?);
    }
    parse_element(ctx, src).with_context(|| format!("cannot parse element {src:?}"))
}

pub fn random_nonzero(ctx: &FieldCtx, rng: &mut ChaCha8Rng) -> FieldElement {
    ctx.elem(rng.gen_range(1..ctx.size()))
}

pub fn load_tt(path: &Path) -> Result<PFunction> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    read_truth_table(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn function(args: &InputArgs) -> Result<PFunction> {
    match (&args.expr, &args.tt) {
        (Some(e), None) => Ok(PFunction::from_expr(field(&args.field)?, e)?),
        (None, Some(path)) => load_tt(path),
        _ => bail!("give exactly one of --expr or --tt"),
    }
}

pub fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

pub fn emit_json(out: Option<&Path>, v: &serde_json::Value) -> Result<()> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    emit(out, &s)
}

pub fn emit_tt(out: Option<&Path>, f: &PFunction) -> Result<()> {
    emit(out, &write_truth_table(f))
}
