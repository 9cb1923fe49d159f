//! Plain-text views of a single group.

use std::fmt::Write;

use galblock_core::theorems::GroupContext;

fn class_names(ctx: &GroupContext) -> Vec<String> {
    let c = ctx.classes();
    let mut seen: std::collections::BTreeMap<u64, u8> = Default::default();
    (0..c.len())
        .map(|k| {
            let o = c.element_order(k);
            let n = seen.entry(o).or_insert(0);
            let letter = char::from(b'a' + *n % 26);
            *n += 1;
            format!("{o}{letter}")
        })
        .collect()
}

fn grid(rows: &[Vec<String>]) -> String {
    let width = rows.iter().flat_map(|r| r.iter().skip(1)).map(|s| s.chars().count()).max().unwrap_or(1);
    let label = rows.iter().map(|r| r[0].chars().count()).max().unwrap_or(1);
    let mut out = String::new();
    for r in rows {
        let _ = write!(out, "{:<label$}", r[0]);
        for cell in &r[1..] {
            let _ = write!(out, "  {cell:>width$}");
        }
        out.push('\n');
    }
    out
}

pub fn table(ctx: &GroupContext) -> String {
    let t = ctx.table();
    let c = ctx.classes();
    let mut rows = vec![
        std::iter::once("class".to_string()).chain(class_names(ctx)).collect::<Vec<_>>(),
        std::iter::once("size".to_string()).chain((0..c.len()).map(|k| c.size(k).to_string())).collect(),
    ];
    for chi in 0..t.len() {
        rows.push(std::iter::once(format!("X.{}", chi + 1)).chain(t.row(chi).iter().map(|v| v.to_string())).collect());
    }
    format!("{}: order {}, {} classes, values in Q(E({}))\n{}", ctx.id(), ctx.order(), c.len(), t.modulus(), grid(&rows))
}

pub fn blocks(ctx: &GroupContext) -> String {
    let t = ctx.table();
    let bp = ctx.blocks();
    let mut out = format!("{}: {}-blocks of a group of order {}\n", ctx.id(), ctx.p(), ctx.order());
    for (i, b) in bp.blocks.iter().enumerate() {
        let tag = if i == bp.principal_index { " (principal)" } else { "" };
        let chars: Vec<String> = b.char_indices.iter().map(|&c| format!("X.{}[{}]", c + 1, t.degree(c))).collect();
        let _ = writeln!(out, "B{i}{tag} defect {}: {}", b.defect, chars.join(" "));
    }
    out
}

pub fn k0sigma(ctx: &GroupContext) -> String {
    let t = ctx.table();
    let chars: Vec<String> = ctx.irr0_sigma().iter().map(|&c| format!("X.{}[{}]", c + 1, t.degree(c))).collect();
    format!(
        "{}: k0sigma = {} at p = {} (sigma = E({}) -> E({})^{})\n{}\n",
        ctx.id(),
        ctx.k0_sigma(),
        ctx.p(),
        ctx.sigma().modulus(),
        ctx.sigma().modulus(),
        ctx.sigma().exponent(),
        chars.join(" ")
    )
}
