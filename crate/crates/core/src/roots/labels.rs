use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{Family, RootSystem};
use crate::{Error, Result};

const MACRON: char = '\u{0304}';

pub(crate) fn label(rs: &RootSystem, k: usize, ascii: bool) -> String {
    let v = rs.root(k);
    let bar = |j: usize| if ascii { format!("{j}b") } else { format!("{j}{MACRON}") };
    match rs.ty.family {
        Family::D | Family::G => {
            if rs.ty.family == Family::G {
                let mut s = String::new();
                for _ in 0..v[0] {
                    s.push('1');
                }
                for _ in 0..v[1] {
                    s.push('2');
                }
                s
            } else {
                v.iter().map(|c| format!("{c}")).collect()
            }
        }
        Family::A | Family::B | Family::C => {
            let first = v.iter().position(|&c| c > 0).unwrap() + 1;
            match v.iter().position(|&c| c == 2) {
                None => {
                    let last = v.iter().rposition(|&c| c > 0).unwrap() + 1;
                    format!("{first},{last}")
                }
                Some(p) => format!("{first},{}", bar(p + 1)),
            }
        }
    }
}

fn normalize(s: &str) -> String {
    let mut t = String::from(s.trim());
    for pat in ["\\alpha", "alpha", "α", "d_", "f_"] {
        t = t.replace(pat, "");
    }
    t = t.replace("\\overline{", "~").replace("\\bar{", "~");
    let mut out = String::new();
    let mut pending_bar = false;
    for ch in t.chars() {
        match ch {
            '~' => pending_bar = true,
            '{' | '}' | ' ' | '_' => {
                if ch == '}' && pending_bar {
                    out.push('b');
                    pending_bar = false;
                }
            }
            MACRON | '\'' => out.push('b'),
            c => out.push(c),
        }
    }
    out
}

/// Finds the canonical index of a root given by its label, e.g. `1,2`,
/// `1,3b`, `1,3̄`, `α_{1,\overline{3}}`, `1211` or `11122`.
pub fn parse_label(rs: &RootSystem, s: &str) -> Result<usize> {
    let t = normalize(s);
    (0..rs.n_pos())
        .find(|&k| rs.ascii_label(k) == t)
        .ok_or_else(|| Error::InvalidArgument(format!("unknown root label {s:?} for {}", rs.ty)))
}

/// The coordinate order used by the printed tables: position `p` holds the
/// canonical index of the root in that slot.
pub fn reference_order(rs: &RootSystem) -> Vec<usize> {
    let n = rs.rank();
    let by = |labels: &[&str]| -> Vec<usize> { labels.iter().map(|l| parse_label(rs, l).expect("reference label")).collect() };
    match (rs.ty.family, n) {
        (Family::A, _) => {
            let mut out = Vec::new();
            for i in 1..=n {
                for j in i..=n {
                    out.push(parse_label(rs, &format!("{i},{j}")).unwrap());
                }
            }
            out
        }
        (Family::B, 3) => by(&["1,1", "1,2", "2,2", "1,3", "1,2b", "1,3b", "2,3", "2,3b", "3,3"]),
        (Family::C, 2) => by(&["1,1", "1,1b", "1,2", "2,2"]),
        (Family::C, 3) => by(&["1,1", "1,2", "1,1b", "1,3", "1,2b", "2,2", "2,2b", "2,3", "3,3"]),
        (Family::G, 2) => by(&["1", "1112", "112", "11122", "12", "2"]),
        (Family::D, 4) => by(&["0100", "1100", "1000", "1110", "0110", "1211", "1101", "1111", "0010", "0111", "0101", "0001"]),
        _ => (0..rs.n_pos()).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::CartanType;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(CartanType::parse(s).unwrap())
    }

    #[test]
    fn type_b_and_c_bars() {
        let b3 = rs("B3");
        assert_eq!(b3.root(parse_label(&b3, "1,3b").unwrap()), &[1, 1, 2]);
        assert_eq!(b3.root(parse_label(&b3, "1,2b").unwrap()), &[1, 2, 2]);
        assert_eq!(b3.root(parse_label(&b3, "α_{2,\\overline{3}}").unwrap()), &[0, 1, 2]);
        let c3 = rs("C3");
        assert_eq!(c3.root(parse_label(&c3, "1,1b").unwrap()), &[2, 2, 1]);
        assert_eq!(c3.root(parse_label(&c3, "1,2b").unwrap()), &[1, 2, 1]);
        assert_eq!(c3.root(parse_label(&c3, "2,2\u{0304}").unwrap()), &[0, 2, 1]);
        assert_eq!(c3.label(parse_label(&c3, "1,2b").unwrap()), "1,2\u{0304}");
    }

    #[test]
    fn digit_labels() {
        let g = rs("G2");
        assert_eq!(g.root(parse_label(&g, "11122").unwrap()), &[3, 2]);
        let d = rs("D4");
        assert_eq!(d.root(parse_label(&d, "1211").unwrap()), &[1, 2, 1, 1]);
    }

    #[test]
    fn reference_orders_are_permutations() {
        for t in ["A3", "A4", "B3", "C2", "C3", "D4", "G2", "B4"] {
            let r = rs(t);
            let mut o = reference_order(&r);
            o.sort();
            assert_eq!(o, (0..r.n_pos()).collect::<Vec<_>>());
        }
    }
}
