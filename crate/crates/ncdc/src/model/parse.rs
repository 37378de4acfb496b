//! The line-oriented model-file grammar and the expression parsers the
//! CLI shares with it. `#` starts a comment; blank lines are ignored.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{AlgElement, AlgebraPresentation, GenId, RewriteRule, Scalar, Word};
use crate::bimodule::{BasisId, BimElement, BimodulePresentation, Matrix};
use crate::calculus::Differential;
use crate::dual::DualElement;
use crate::error::{Error, Result};

use super::ModelFile;

fn scalar_token(tok: &str) -> Option<Scalar> {
    let (negative, body) = match tok.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, tok),
    };
    if body.is_empty() {
        return None;
    }
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    if num.is_empty() || !num.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let mut numer: BigInt = num.parse().ok()?;
    let denom: BigInt = match den {
        Some(d) if !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()) => d.parse().ok()?,
        Some(_) => return None,
        None => BigInt::from(1),
    };
    if denom.is_zero() {
        return None;
    }
    if negative {
        numer = -numer;
    }
    Some(Scalar::new(numer, denom))
}

type Token<'a> = (usize, &'a str);

fn tokenize(s: &str, base_col: usize) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        while i < bytes.len() && bytes[i].is_ascii_whitespace() {
            i += 1;
        }
        let start = i;
        while i < bytes.len() && !bytes[i].is_ascii_whitespace() {
            i += 1;
        }
        if start < i {
            out.push((base_col + start + 1, &s[start..i]));
        }
    }
    out
}

fn lookup(names: &[String], tok: &str) -> Option<usize> {
    names.iter().position(|n| n == tok)
}

/// Parse a sum of `<rational>? <word>?` terms over the given generator
/// names.
fn expr_from_tokens(tokens: &[Token<'_>], gens: &[String], line: usize) -> Result<AlgElement> {
    if tokens.is_empty() {
        return Err(Error::parse(line, 0, "empty expression"));
    }
    let mut out = AlgElement::zero();
    let mut idx = 0;
    let mut sign = 1i32;
    if tokens[idx].1 == "-" {
        sign = -1;
        idx += 1;
    }
    loop {
        // One term: an optional coefficient followed by word letters.
        let term_col = tokens.get(idx).map(|t| t.0).unwrap_or(0);
        let mut coeff: Option<Scalar> = None;
        let mut letters: Vec<GenId> = Vec::new();
        let mut saw_anything = false;
        if idx < tokens.len() {
            if let Some(c) = scalar_token(tokens[idx].1) {
                coeff = Some(c);
                saw_anything = true;
                idx += 1;
            }
        }
        while idx < tokens.len() && tokens[idx].1 != "+" && tokens[idx].1 != "-" {
            let (col, tok) = tokens[idx];
            if scalar_token(tok).is_some() {
                return Err(Error::parse(
                    line,
                    col,
                    format!("unexpected coefficient `{tok}` inside a term"),
                ));
            }
            let (name, exp) = match tok.split_once('^') {
                Some((n, e)) => {
                    let exp: usize = e.parse().map_err(|_| {
                        Error::parse(line, col, format!("invalid exponent in `{tok}`"))
                    })?;
                    if exp == 0 {
                        return Err(Error::parse(line, col, "exponent must be positive"));
                    }
                    (n, exp)
                }
                None => (tok, 1),
            };
            let g = lookup(gens, name).ok_or_else(|| {
                Error::parse(line, col, format!("unknown identifier `{name}`"))
            })?;
            letters.extend(std::iter::repeat_n(GenId(g), exp));
            saw_anything = true;
            idx += 1;
        }
        if !saw_anything {
            return Err(Error::parse(line, term_col, "empty term"));
        }
        let mut c = coeff.unwrap_or_else(num_traits::One::one);
        if sign < 0 {
            c = -c;
        }
        out.add_term(Word::from_letters(letters), c);
        if idx == tokens.len() {
            break;
        }
        sign = match tokens[idx].1 {
            "+" => 1,
            "-" => -1,
            _ => unreachable!("term loop stops only at separators"),
        };
        idx += 1;
        if idx == tokens.len() {
            return Err(Error::parse(line, 0, "trailing separator"));
        }
    }
    Ok(out)
}

/// Parse a sum of `<basis>.( <expr> )` terms.
fn modexpr_from_tokens(
    tokens: &[Token<'_>],
    gens: &[String],
    basis: &[String],
    line: usize,
) -> Result<BimElement> {
    if tokens.len() == 1 && tokens[0].1 == "0" {
        return Ok(BimElement::zero());
    }
    if tokens.is_empty() {
        return Err(Error::parse(line, 0, "empty module expression"));
    }
    let mut out = BimElement::zero();
    let mut idx = 0;
    let mut sign = 1i32;
    if tokens[idx].1 == "-" {
        sign = -1;
        idx += 1;
    }
    loop {
        let (col, tok) = *tokens.get(idx).ok_or_else(|| {
            Error::parse(line, 0, "expected `<basis>.( <expr> )`")
        })?;
        let name = tok.strip_suffix(".(").ok_or_else(|| {
            Error::parse(line, col, format!("expected `<basis>.(`, found `{tok}`"))
        })?;
        let b = lookup(basis, name)
            .ok_or_else(|| Error::parse(line, col, format!("unknown basis name `{name}`")))?;
        idx += 1;
        let start = idx;
        while idx < tokens.len() && tokens[idx].1 != ")" {
            idx += 1;
        }
        if idx == tokens.len() {
            return Err(Error::parse(line, col, "missing closing `)`"));
        }
        let inner = expr_from_tokens(&tokens[start..idx], gens, line)?;
        idx += 1;
        out.add_component(BasisId(b), if sign < 0 { inner.neg() } else { inner });
        if idx == tokens.len() {
            break;
        }
        sign = match tokens[idx].1 {
            "+" => 1,
            "-" => -1,
            other => {
                return Err(Error::parse(
                    line,
                    tokens[idx].0,
                    format!("expected `+` or `-`, found `{other}`"),
                ))
            }
        };
        idx += 1;
    }
    Ok(out)
}

/// Parse a sum of `( <expr> ).<basis>` terms; a bare basis name means
/// the corresponding dual basis element.
fn dualexpr_from_tokens(
    tokens: &[Token<'_>],
    gens: &[String],
    basis: &[String],
    line: usize,
) -> Result<DualElement> {
    if tokens.len() == 1 && tokens[0].1 == "0" {
        return Ok(DualElement::zero());
    }
    if tokens.is_empty() {
        return Err(Error::parse(line, 0, "empty dual expression"));
    }
    let mut out = DualElement::zero();
    let mut idx = 0;
    let mut sign = 1i32;
    if tokens[idx].1 == "-" {
        sign = -1;
        idx += 1;
    }
    loop {
        let (col, tok) = *tokens
            .get(idx)
            .ok_or_else(|| Error::parse(line, 0, "expected `( <expr> ).<basis>`"))?;
        let (b, inner) = if tok == "(" {
            idx += 1;
            let start = idx;
            while idx < tokens.len() && !tokens[idx].1.starts_with(").") {
                idx += 1;
            }
            if idx == tokens.len() {
                return Err(Error::parse(line, col, "missing `).<basis>`"));
            }
            let inner = expr_from_tokens(&tokens[start..idx], gens, line)?;
            let name = &tokens[idx].1[2..];
            let b = lookup(basis, name).ok_or_else(|| {
                Error::parse(line, tokens[idx].0, format!("unknown basis name `{name}`"))
            })?;
            idx += 1;
            (b, inner)
        } else {
            let b = lookup(basis, tok).ok_or_else(|| {
                Error::parse(line, col, format!("unknown basis name `{tok}`"))
            })?;
            idx += 1;
            (b, AlgElement::unit())
        };
        out.add_component(BasisId(b), if sign < 0 { inner.neg() } else { inner });
        if idx == tokens.len() {
            break;
        }
        sign = match tokens[idx].1 {
            "+" => 1,
            "-" => -1,
            other => {
                return Err(Error::parse(
                    line,
                    tokens[idx].0,
                    format!("expected `+` or `-`, found `{other}`"),
                ))
            }
        };
        idx += 1;
    }
    Ok(out)
}

/// Split a token list at the `=` sign.
fn split_equals<'a>(
    tokens: &'a [Token<'a>],
    line: usize,
) -> Result<(&'a [Token<'a>], &'a [Token<'a>])> {
    let pos = tokens
        .iter()
        .position(|(_, t)| *t == "=")
        .ok_or_else(|| Error::parse(line, 0, "missing `=`"))?;
    Ok((&tokens[..pos], &tokens[pos + 1..]))
}

/// Parse a complete model file.
pub fn parse(text: &str) -> Result<ModelFile> {
    let mut gen_names: Option<Vec<String>> = None;
    let mut basis_names: Option<Vec<String>> = None;
    let mut rules: Vec<RewriteRule> = Vec::new();
    let mut rule_lines: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut left_entries: BTreeMap<(usize, usize), BimElement> = BTreeMap::new();
    let mut d_entries: BTreeMap<usize, BimElement> = BTreeMap::new();
    let mut rho_entries: BTreeMap<(usize, usize), AlgElement> = BTreeMap::new();
    let mut decl_lines: BTreeMap<String, usize> = BTreeMap::new();

    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let content = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        if content.trim().is_empty() {
            continue;
        }
        let colon = content
            .find(':')
            .ok_or_else(|| Error::parse(line, 1, "expected `<section>: ...`"))?;
        let key = content[..colon].trim();
        let tokens = tokenize(&content[colon + 1..], colon + 1);
        match key {
            "generators" => {
                if gen_names.is_some() {
                    return Err(Error::parse(line, 1, "duplicate `generators:` line"));
                }
                if tokens.is_empty() {
                    return Err(Error::parse(line, 1, "no generators declared"));
                }
                decl_lines.insert("generators".to_string(), line);
                gen_names = Some(tokens.iter().map(|(_, t)| t.to_string()).collect());
            }
            "rule" => {
                let gens = gen_names
                    .as_ref()
                    .ok_or_else(|| Error::parse(line, 1, "`rule:` before `generators:`"))?;
                let (lhs, rhs) = split_equals(&tokens, line)?;
                if lhs.len() != 2 {
                    return Err(Error::parse(
                        line,
                        1,
                        "rule lhs must be exactly two generators",
                    ));
                }
                let j = lookup(gens, lhs[0].1).ok_or_else(|| {
                    Error::parse(line, lhs[0].0, format!("unknown identifier `{}`", lhs[0].1))
                })?;
                let i = lookup(gens, lhs[1].1).ok_or_else(|| {
                    Error::parse(line, lhs[1].0, format!("unknown identifier `{}`", lhs[1].1))
                })?;
                if j <= i {
                    return Err(Error::parse(
                        line,
                        lhs[0].0,
                        "lhs must be in descending generator order",
                    ));
                }
                if let Some(prev) = rule_lines.insert((j, i), line) {
                    return Err(Error::parse(
                        line,
                        lhs[0].0,
                        format!(
                            "duplicate rule for the pair `{} {}` (first on line {prev})",
                            lhs[0].1, lhs[1].1
                        ),
                    ));
                }
                let rhs = expr_from_tokens(rhs, gens, line)?;
                decl_lines.insert(format!("rule {} {}", lhs[0].1, lhs[1].1), line);
                rules.push(RewriteRule::new(GenId(j), GenId(i), rhs));
            }
            "basis" => {
                if gen_names.is_none() {
                    return Err(Error::parse(line, 1, "`basis:` before `generators:`"));
                }
                if basis_names.is_some() {
                    return Err(Error::parse(line, 1, "duplicate `basis:` line"));
                }
                if tokens.is_empty() {
                    return Err(Error::parse(line, 1, "no basis elements declared"));
                }
                decl_lines.insert("basis".to_string(), line);
                basis_names = Some(tokens.iter().map(|(_, t)| t.to_string()).collect());
            }
            "left" => {
                let gens = gen_names
                    .as_ref()
                    .ok_or_else(|| Error::parse(line, 1, "`left:` before `generators:`"))?;
                let basis = basis_names
                    .as_ref()
                    .ok_or_else(|| Error::parse(line, 1, "`left:` before `basis:`"))?;
                let (lhs, rhs) = split_equals(&tokens, line)?;
                if lhs.len() != 2 {
                    return Err(Error::parse(
                        line,
                        1,
                        "`left:` needs a generator and a basis element",
                    ));
                }
                let g = lookup(gens, lhs[0].1).ok_or_else(|| {
                    Error::parse(line, lhs[0].0, format!("unknown identifier `{}`", lhs[0].1))
                })?;
                let b = lookup(basis, lhs[1].1).ok_or_else(|| {
                    Error::parse(line, lhs[1].0, format!("unknown basis name `{}`", lhs[1].1))
                })?;
                if left_entries.contains_key(&(g, b)) {
                    return Err(Error::parse(
                        line,
                        lhs[0].0,
                        format!("duplicate `left:` line for `{} {}`", lhs[0].1, lhs[1].1),
                    ));
                }
                let value = modexpr_from_tokens(rhs, gens, basis, line)?;
                decl_lines.insert(format!("left {} {}", lhs[0].1, lhs[1].1), line);
                left_entries.insert((g, b), value);
            }
            "d" => {
                let gens = gen_names
                    .as_ref()
                    .ok_or_else(|| Error::parse(line, 1, "`d:` before `generators:`"))?;
                let basis = basis_names
                    .as_ref()
                    .ok_or_else(|| Error::parse(line, 1, "`d:` before `basis:`"))?;
                let (lhs, rhs) = split_equals(&tokens, line)?;
                if lhs.len() != 1 {
                    return Err(Error::parse(line, 1, "`d:` needs exactly one generator"));
                }
                let g = lookup(gens, lhs[0].1).ok_or_else(|| {
                    Error::parse(line, lhs[0].0, format!("unknown identifier `{}`", lhs[0].1))
                })?;
                if d_entries.contains_key(&g) {
                    return Err(Error::parse(
                        line,
                        lhs[0].0,
                        format!("duplicate `d:` line for `{}`", lhs[0].1),
                    ));
                }
                let value = modexpr_from_tokens(rhs, gens, basis, line)?;
                decl_lines.insert(format!("d {}", lhs[0].1), line);
                d_entries.insert(g, value);
            }
            "rho" => {
                let gens = gen_names
                    .as_ref()
                    .ok_or_else(|| Error::parse(line, 1, "`rho:` before `generators:`"))?;
                let basis = basis_names
                    .as_ref()
                    .ok_or_else(|| Error::parse(line, 1, "`rho:` before `basis:`"))?;
                let (lhs, rhs) = split_equals(&tokens, line)?;
                if lhs.len() != 2 {
                    return Err(Error::parse(
                        line,
                        1,
                        "`rho:` needs a basis element and a generator",
                    ));
                }
                let b = lookup(basis, lhs[0].1).ok_or_else(|| {
                    Error::parse(line, lhs[0].0, format!("unknown basis name `{}`", lhs[0].1))
                })?;
                let g = lookup(gens, lhs[1].1).ok_or_else(|| {
                    Error::parse(line, lhs[1].0, format!("unknown identifier `{}`", lhs[1].1))
                })?;
                if rho_entries.contains_key(&(b, g)) {
                    return Err(Error::parse(
                        line,
                        lhs[0].0,
                        format!("duplicate `rho:` line for `{} {}`", lhs[0].1, lhs[1].1),
                    ));
                }
                let value = expr_from_tokens(rhs, gens, line)?;
                decl_lines.insert(format!("rho {} {}", lhs[0].1, lhs[1].1), line);
                rho_entries.insert((b, g), value);
            }
            other => {
                return Err(Error::parse(
                    line,
                    1,
                    format!("unknown section `{other}`"),
                ));
            }
        }
    }

    let gen_names =
        gen_names.ok_or_else(|| Error::shape("model file has no `generators:` line"))?;
    let n_gens = gen_names.len();
    let algebra = AlgebraPresentation::new(gen_names, rules)?;

    let bimodule = match basis_names {
        None => None,
        Some(basis) => {
            let rank = basis.len();
            let mut phi = Vec::with_capacity(n_gens);
            for g in 0..n_gens {
                let mut matrix = Matrix::zero(rank);
                for i in 0..rank {
                    let column = left_entries.remove(&(g, i)).ok_or_else(|| {
                        Error::shape(format!(
                            "missing `left:` line for generator `{}` and basis `{}`",
                            algebra.name(GenId(g)),
                            basis[i]
                        ))
                    })?;
                    for (j, a) in column.components() {
                        if j.0 >= rank {
                            return Err(Error::shape("basis index out of range"));
                        }
                        *matrix.at_mut(j.0, i) = a.clone();
                    }
                }
                phi.push(matrix);
            }
            Some(BimodulePresentation::new(algebra.clone(), basis, phi)?)
        }
    };

    let differential = if d_entries.is_empty() {
        None
    } else {
        let mut values = Vec::with_capacity(n_gens);
        for g in 0..n_gens {
            let v = d_entries.remove(&g).ok_or_else(|| {
                Error::shape(format!(
                    "missing `d:` line for generator `{}`",
                    algebra.name(GenId(g))
                ))
            })?;
            values.push(v);
        }
        Some(Differential::new(values))
    };

    let action = if rho_entries.is_empty() {
        None
    } else {
        let m = bimodule
            .as_ref()
            .expect("rho lines are only accepted after a basis line");
        let mut matrix = Vec::with_capacity(m.rank());
        for b in 0..m.rank() {
            let mut row = Vec::with_capacity(n_gens);
            for g in 0..n_gens {
                let entry = rho_entries.remove(&(b, g)).ok_or_else(|| {
                    Error::shape(format!(
                        "missing `rho:` line for basis `{}` and generator `{}`",
                        m.basis_name(BasisId(b)),
                        algebra.name(GenId(g))
                    ))
                })?;
                row.push(entry);
            }
            matrix.push(row);
        }
        Some(matrix)
    };

    Ok(ModelFile {
        algebra,
        bimodule,
        differential,
        action,
        decl_lines,
    })
}

/// Parse an algebra expression against a presentation; used for CLI
/// arguments.
pub fn parse_alg_expr(text: &str, p: &AlgebraPresentation) -> Result<AlgElement> {
    let tokens = tokenize(text, 0);
    expr_from_tokens(&tokens, p.generator_names(), 1)
}

/// Parse a module expression (`basis.( expr )` sums) for CLI arguments.
pub fn parse_mod_expr(text: &str, m: &BimodulePresentation) -> Result<BimElement> {
    let tokens = tokenize(text, 0);
    modexpr_from_tokens(
        &tokens,
        m.algebra().generator_names(),
        m.basis_names(),
        1,
    )
}

/// Parse a dual expression (`( expr ).basis` sums, bare basis names
/// allowed) for CLI arguments.
pub fn parse_dual_expr(text: &str, m: &BimodulePresentation) -> Result<DualElement> {
    let tokens = tokenize(text, 0);
    dualexpr_from_tokens(
        &tokens,
        m.algebra().generator_names(),
        m.basis_names(),
        1,
    )
}
