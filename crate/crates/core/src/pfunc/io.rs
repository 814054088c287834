//! Plain-text truth tables.
//!
//! ```text
//! 3 5
//! # field m=3 modulus=2,0,1,1 primitive=5
//! # vector n=2
//! 0 1 1 2 ...
//! ```
//!
//! Line 1 holds `p n_total`; the remaining non-comment lines hold the p^n
//! digits in index order. `# field` / `# vector` lines describe the domain
//! components in order; without them the domain is F_p^n.

use std::fmt::Write as _;
use std::sync::Arc;

use super::{Component, Domain, PFunction};
use crate::error::{Error, Result};
use crate::field::FieldCtx;

fn bad(msg: impl Into<String>) -> Error {
    Error::TruthTable(msg.into())
}

fn parse_digit_list(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| bad(format!("bad digit {t:?}")))
        })
        .collect()
}

pub fn write_truth_table(f: &PFunction) -> String {
    let d = f.domain();
    let mut out = format!("{} {}\n", d.p(), d.dim());
    let has_field = d
        .components()
        .iter()
        .any(|c| matches!(c, Component::Field(_)));
    if has_field {
        for c in d.components() {
            match c {
                Component::Field(ctx) => {
                    let modulus: Vec<String> = ctx.modulus().iter().map(u32::to_string).collect();
                    let _ = writeln!(
                        out,
                        "# field m={} modulus={} primitive={}",
                        ctx.m(),
                        modulus.join(","),
                        ctx.primitive().index()
                    );
                }
                Component::Vector(n) => {
                    let _ = writeln!(out, "# vector n={n}");
                }
            }
        }
    }
    let width = (d.p() as usize).pow(d.dim().min(3));
    for row in f.table().chunks(width) {
        let line: Vec<String> = row.iter().map(u32::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

fn parse_component(p: u32, line: &str) -> Result<Option<Component>> {
    let mut words = line.split_whitespace();
    let kind = words.next();
    let mut kv = std::collections::HashMap::new();
    for w in words {
        if let Some((k, v)) = w.split_once('=') {
            kv.insert(k, v);
        }
    }
    let get = |k: &str| {
        kv.get(k)
            .copied()
            .ok_or_else(|| bad(format!("missing {k}= in {line:?}")))
    };
    match kind {
        Some("field") => {
            let m: u32 = get("m")?.parse().map_err(|_| bad("bad m"))?;
            let modulus = parse_digit_list(get("modulus")?)?;
            let primitive = match kv.get("primitive") {
                Some(v) => Some(v.parse::<u32>().map_err(|_| bad("bad primitive"))?),
                None => None,
            };
            let ctx = FieldCtx::new(p, m, &modulus, primitive)?;
            Ok(Some(Component::Field(Arc::new(ctx))))
        }
        Some("vector") => {
            let n: u32 = get("n")?.parse().map_err(|_| bad("bad n"))?;
            Ok(Some(Component::Vector(n)))
        }
        _ => Ok(None),
    }
}

pub fn read_truth_table(src: &str) -> Result<PFunction> {
    let mut header: Option<(u32, u32)> = None;
    let mut comments = Vec::new();
    let mut digits = Vec::new();
    for line in src.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            comments.push(rest.trim().to_string());
            continue;
        }
        if header.is_none() {
            let nums: Vec<&str> = line.split_whitespace().collect();
            if nums.len() != 2 {
                return Err(bad("first line must be `p n_total`"));
            }
            let p = nums[0].parse().map_err(|_| bad("bad p"))?;
            let n = nums[1].parse().map_err(|_| bad("bad n_total"))?;
            header = Some((p, n));
            continue;
        }
        for t in line.split_whitespace() {
            digits.push(
                t.parse::<u32>()
                    .map_err(|_| bad(format!("bad digit {t:?}")))?,
            );
        }
    }
    let (p, n) = header.ok_or_else(|| bad("missing header line"))?;
    let mut comps = Vec::new();
    for c in &comments {
        if let Some(comp) = parse_component(p, c)? {
            comps.push(comp);
        }
    }
    if comps.is_empty() {
        comps.push(Component::Vector(n));
    }
    let domain = Domain::new(p, comps)?;
    if domain.dim() != n {
        return Err(bad(format!(
            "components have total dimension {}, header says {n}",
            domain.dim()
        )));
    }
    PFunction::new(domain, digits)
}
