use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::LinearForm;
use crate::{Error, Result};

/// Parses `lhs > rhs`, each side a `+`-separated list of `[k]d_X` or
/// `[k]d_{X}` terms. `resolve` maps the subscript `X` to a coordinate.
pub fn parse_inequality(text: &str, dim: usize, resolve: &dyn Fn(&str) -> Option<usize>) -> Result<LinearForm> {
    let t: String = text.chars().filter(|c| !c.is_whitespace() && *c != '$').collect();
    let (lhs, rhs) = t
        .split_once('>')
        .ok_or_else(|| Error::InvalidArgument(format!("no '>' in inequality {text:?}")))?;
    let mut c = vec![0i64; dim];
    for (side, sign) in [(lhs, 1i64), (rhs, -1)] {
        for term in split_terms(side) {
            let (k, idx) = parse_term(&term, resolve).ok_or_else(|| Error::InvalidArgument(format!("bad term {term:?} in {text:?}")))?;
            if idx >= dim {
                return Err(Error::InvalidArgument(format!("coordinate {idx} out of range in {text:?}")));
            }
            c[idx] += sign * k;
        }
    }
    LinearForm::new(c)
}

/// Splits on `+` outside braces.
fn split_terms(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0i32;
    for ch in s.chars() {
        match ch {
            '{' => depth += 1,
            '}' => depth -= 1,
            '+' if depth == 0 => {
                out.push(core::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(ch);
    }
    out.push(cur);
    out.into_iter().filter(|s| !s.is_empty()).collect()
}

fn parse_term(term: &str, resolve: &dyn Fn(&str) -> Option<usize>) -> Option<(i64, usize)> {
    let pos = term.find('d')?;
    let k = if pos == 0 { 1 } else { term[..pos].trim_end_matches('*').parse().ok()? };
    let rest = term[pos + 1..].strip_prefix('_')?;
    let sub = match rest.strip_prefix('{') {
        Some(r) => r.strip_suffix('}')?,
        None => rest,
    };
    Some((k, resolve(sub)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_coefficients_and_braces() {
        let r = |s: &str| s.parse::<usize>().ok().map(|k| k - 1);
        let f = parse_inequality("d_3 + d_{10} > 2d_7 + d_9", 10, &r).unwrap();
        assert_eq!(f.coeffs, [0, 0, 1, 0, 0, 0, -2, 0, -1, 1]);
        assert!(parse_inequality("d_1 + d_2", 2, &r).is_err());
        assert!(parse_inequality("d_1 > d_1", 2, &r).is_err());
    }
}
