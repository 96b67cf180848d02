//! Family-aware element literals. The group expression fixes the
//! element shape, so there is no universal element grammar: residues
//! and table indices are plain integers, tuples are `(x,y,...)`,
//! wreath elements are `[(x,...,y);t]`, affine maps are `aff(m,b)`.
//! `e`/`id` name the identity, `dist` the family's distinguished
//! element, and `delta0` puts the cyclic-base generator at point 0 of a
//! wreath with identity top.

use classprod::{Element, Group, GroupSpec};

use crate::{CliError, CliResult};

pub fn parse_element(
    group: &Group,
    distinguished: Option<&Element>,
    text: &str,
) -> CliResult<Element> {
    let text = text.trim();
    match text {
        "e" | "id" => return Ok(group.identity().clone()),
        "dist" => {
            return distinguished.cloned().ok_or_else(|| {
                CliError::Usage("this group has no distinguished element".into())
            })
        }
        "delta0" => return delta0(group.spec()),
        _ => {}
    }
    let element = parse_for_spec(group.spec(), text)?;
    group.spec().check_element(&element)?;
    Ok(element)
}

fn delta0(spec: &GroupSpec) -> CliResult<Element> {
    let (base, top_identity, size) = match spec {
        GroupSpec::Wreath { base, top_order } => {
            (base.as_ref(), Element::Residue(0), *top_order as usize)
        }
        GroupSpec::WreathOverSet {
            base,
            top,
            set_size,
            ..
        } => (base.as_ref(), top.identity(), *set_size),
        _ => {
            return Err(CliError::Usage(
                "delta0 only names elements of wreath-product groups".into(),
            ))
        }
    };
    match base {
        GroupSpec::Cyclic(m) => {
            let mut fill = vec![Element::Residue(0); size];
            fill[0] = Element::Residue(1 % m);
            Ok(Element::WreathPair {
                top: Box::new(top_identity),
                base: fill,
            })
        }
        _ => Err(CliError::Usage(
            "delta0 requires a cyclic base group".into(),
        )),
    }
}

fn parse_for_spec(spec: &GroupSpec, text: &str) -> CliResult<Element> {
    match spec {
        GroupSpec::Cyclic(_) => Ok(Element::Residue(parse_u64(text)?)),
        GroupSpec::Table { .. } | GroupSpec::Heisenberg(_) => {
            Ok(Element::TableIndex(parse_u64(text)? as usize))
        }
        GroupSpec::Affine(_) => parse_affine(text),
        GroupSpec::DirectProduct(parts) => {
            let inner = strip(text, '(', ')')?;
            let pieces = split_top_level(inner);
            if pieces.len() != parts.len() {
                return Err(CliError::Usage(format!(
                    "tuple has {} entries, the group has {} factors",
                    pieces.len(),
                    parts.len()
                )));
            }
            let mut out = Vec::with_capacity(parts.len());
            for (part, piece) in parts.iter().zip(pieces) {
                out.push(parse_for_spec(part, piece.trim())?);
            }
            Ok(Element::Tuple(out))
        }
        GroupSpec::Wreath { base, top_order } => parse_wreath(
            base,
            &GroupSpec::Cyclic(*top_order),
            *top_order as usize,
            text,
        ),
        GroupSpec::WreathOverSet {
            base,
            top,
            set_size,
            ..
        } => parse_wreath(base, top, *set_size, text),
    }
}

fn parse_wreath(
    base: &GroupSpec,
    top: &GroupSpec,
    size: usize,
    text: &str,
) -> CliResult<Element> {
    let inner = strip(text, '[', ']')?;
    let semi = inner
        .rfind(';')
        .ok_or_else(|| CliError::Usage(format!("expected [(...);top], got {text:?}")))?;
    let base_text = strip(inner[..semi].trim(), '(', ')')?;
    let top_text = inner[semi + 1..].trim();
    let pieces = split_top_level(base_text);
    if pieces.len() != size {
        return Err(CliError::Usage(format!(
            "base function has {} entries, the index set has {size} points",
            pieces.len()
        )));
    }
    let mut fill = Vec::with_capacity(size);
    for piece in pieces {
        fill.push(parse_for_spec(base, piece.trim())?);
    }
    Ok(Element::WreathPair {
        top: Box::new(parse_for_spec(top, top_text)?),
        base: fill,
    })
}

fn parse_affine(text: &str) -> CliResult<Element> {
    let inner = text
        .strip_prefix("aff")
        .map(str::trim)
        .ok_or_else(|| CliError::Usage(format!("expected aff(m,b), got {text:?}")))?;
    let inner = strip(inner, '(', ')')?;
    let pieces = split_top_level(inner);
    if pieces.len() != 2 {
        return Err(CliError::Usage(format!("expected aff(m,b), got {text:?}")));
    }
    Ok(Element::AffineMap {
        slope: parse_u64(pieces[0].trim())?,
        shift: parse_u64(pieces[1].trim())?,
    })
}

fn parse_u64(text: &str) -> CliResult<u64> {
    text.parse()
        .map_err(|_| CliError::Usage(format!("expected an integer, got {text:?}")))
}

fn strip<'a>(text: &'a str, open: char, close: char) -> CliResult<&'a str> {
    let text = text.trim();
    text.strip_prefix(open)
        .and_then(|t| t.strip_suffix(close))
        .ok_or_else(|| CliError::Usage(format!("expected {open}...{close}, got {text:?}")))
}

/// Splits on commas outside any parentheses or brackets.
fn split_top_level(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, ch) in text.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                out.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&text[start..]);
    out
}
