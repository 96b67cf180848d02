//! The group-expression grammar and its resolution into built groups.
//!
//! Leaves: `cyclic:M`, `heis:P`, `aff:P`, `remarkb:P`, `tower:P:N`,
//! `super:P`, `table:PATH`, `catalog:NAME`. Combinators:
//! `dirprod(E1,E2,...)` and `wreath(E,P)`. `parse(print(ast)) = ast`.

use std::fmt;

use classprod::constructions;
use classprod::spec::{is_prime, Action};
use classprod::table::{parse_table_text, validate_table};
use classprod::{Element, Group, GroupSpec};

use crate::{CliError, CliResult};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupExpr {
    Cyclic(u64),
    Heis(u64),
    Aff(u64),
    RemarkB(u64),
    Tower(u64, u64),
    Super(u64),
    Table(String),
    Catalog(String),
    DirProd(Vec<GroupExpr>),
    Wreath(Box<GroupExpr>, u64),
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Cyclic(m) => write!(f, "cyclic:{m}"),
            GroupExpr::Heis(p) => write!(f, "heis:{p}"),
            GroupExpr::Aff(p) => write!(f, "aff:{p}"),
            GroupExpr::RemarkB(p) => write!(f, "remarkb:{p}"),
            GroupExpr::Tower(p, n) => write!(f, "tower:{p}:{n}"),
            GroupExpr::Super(p) => write!(f, "super:{p}"),
            GroupExpr::Table(path) => write!(f, "table:{path}"),
            GroupExpr::Catalog(name) => write!(f, "catalog:{name}"),
            GroupExpr::DirProd(parts) => {
                write!(f, "dirprod(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
            GroupExpr::Wreath(base, p) => write!(f, "wreath({base},{p})"),
        }
    }
}

pub fn parse_group_expr(text: &str) -> CliResult<GroupExpr> {
    let mut parser = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let expr = parser.expr()?;
    parser.skip_ws();
    if parser.pos != parser.bytes.len() {
        return Err(CliError::Parse {
            offset: parser.pos,
            msg: "trailing input after the expression".into(),
        });
    }
    Ok(expr)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn expect(&mut self, ch: u8) -> CliResult<()> {
        self.skip_ws();
        if self.pos < self.bytes.len() && self.bytes[self.pos] == ch {
            self.pos += 1;
            Ok(())
        } else {
            Err(CliError::Parse {
                offset: self.pos,
                msg: format!("expected {:?}", ch as char),
            })
        }
    }

    fn ident(&mut self) -> CliResult<(usize, String)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len()
            && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(CliError::Parse {
                offset: start,
                msg: "expected an identifier".into(),
            });
        }
        Ok((
            start,
            String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned(),
        ))
    }

    fn number(&mut self) -> CliResult<(usize, u64)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(CliError::Parse {
                offset: start,
                msg: "expected a number".into(),
            });
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        text.parse().map(|n| (start, n)).map_err(|_| CliError::Parse {
            offset: start,
            msg: "number out of range".into(),
        })
    }

    fn prime(&mut self) -> CliResult<u64> {
        let (off, p) = self.number()?;
        if !is_prime(p) {
            return Err(CliError::Semantic {
                offset: off,
                msg: format!("{p} is not prime"),
            });
        }
        Ok(p)
    }

    /// Path argument of `table:`: everything up to `,`, `)`, or the end.
    fn path(&mut self) -> CliResult<String> {
        let start = self.pos;
        while self.pos < self.bytes.len()
            && self.bytes[self.pos] != b','
            && self.bytes[self.pos] != b')'
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(CliError::Parse {
                offset: start,
                msg: "expected a file path".into(),
            });
        }
        Ok(String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned())
    }

    fn expr(&mut self) -> CliResult<GroupExpr> {
        let (off, head) = self.ident()?;
        match head.as_str() {
            "dirprod" => {
                self.expect(b'(')?;
                let mut parts = vec![self.expr()?];
                loop {
                    self.skip_ws();
                    if self.pos < self.bytes.len() && self.bytes[self.pos] == b',' {
                        self.pos += 1;
                        parts.push(self.expr()?);
                    } else {
                        break;
                    }
                }
                self.expect(b')')?;
                Ok(GroupExpr::DirProd(parts))
            }
            "wreath" => {
                self.expect(b'(')?;
                let base = self.expr()?;
                self.expect(b',')?;
                let p = self.prime()?;
                self.expect(b')')?;
                Ok(GroupExpr::Wreath(Box::new(base), p))
            }
            "cyclic" => {
                self.expect(b':')?;
                let (noff, m) = self.number()?;
                if m == 0 {
                    return Err(CliError::Semantic {
                        offset: noff,
                        msg: "cyclic order must be >= 1".into(),
                    });
                }
                Ok(GroupExpr::Cyclic(m))
            }
            "heis" => {
                self.expect(b':')?;
                let (noff, p) = self.number()?;
                if !is_prime(p) || p == 2 {
                    return Err(CliError::Semantic {
                        offset: noff,
                        msg: format!("{p} is not an odd prime"),
                    });
                }
                Ok(GroupExpr::Heis(p))
            }
            "aff" => {
                self.expect(b':')?;
                Ok(GroupExpr::Aff(self.prime()?))
            }
            "remarkb" => {
                self.expect(b':')?;
                Ok(GroupExpr::RemarkB(self.prime()?))
            }
            "tower" => {
                self.expect(b':')?;
                let p = self.prime()?;
                self.expect(b':')?;
                let (_, n) = self.number()?;
                Ok(GroupExpr::Tower(p, n))
            }
            "super" => {
                self.expect(b':')?;
                Ok(GroupExpr::Super(self.prime()?))
            }
            "table" => {
                self.expect(b':')?;
                Ok(GroupExpr::Table(self.path()?))
            }
            "catalog" => {
                self.expect(b':')?;
                let (_, name) = self.ident()?;
                Ok(GroupExpr::Catalog(name))
            }
            other => Err(CliError::Parse {
                offset: off,
                msg: format!("unknown constructor {other:?}"),
            }),
        }
    }
}

/// A resolved expression: the built group plus, when the family defines
/// one, its distinguished element.
pub struct ResolvedGroup {
    pub group: Group,
    pub distinguished: Option<Element>,
    pub label: String,
}

pub fn resolve(expr: &GroupExpr, limits: &classprod::Limits) -> CliResult<ResolvedGroup> {
    let label = expr.to_string();
    match expr {
        GroupExpr::Cyclic(m) => {
            let group = classprod::group::build_group(GroupSpec::Cyclic(*m))?;
            Ok(ResolvedGroup {
                distinguished: Some(Element::Residue(1 % m)),
                group,
                label,
            })
        }
        GroupExpr::Heis(p) => family(constructions::heisenberg(*p)?, label),
        GroupExpr::Aff(p) => {
            let group = classprod::group::build_group(GroupSpec::Affine(*p))?;
            Ok(ResolvedGroup {
                distinguished: None,
                group,
                label,
            })
        }
        GroupExpr::RemarkB(p) => family(constructions::remark_b_group(*p)?, label),
        GroupExpr::Tower(p, n) => family(constructions::tower(*p, *n, limits)?, label),
        GroupExpr::Super(p) => family(constructions::supersolvable_example(*p)?, label),
        GroupExpr::Table(path) => {
            let text = std::fs::read_to_string(path)?;
            let (n, table) = parse_table_text(&text)?;
            let group = validate_table(n, table, false)?;
            Ok(ResolvedGroup {
                group,
                distinguished: None,
                label,
            })
        }
        GroupExpr::Catalog(name) => family(constructions::catalog_entry(name)?, label),
        GroupExpr::DirProd(parts) => {
            let resolved: Vec<ResolvedGroup> = parts
                .iter()
                .map(|p| resolve(p, limits))
                .collect::<CliResult<_>>()?;
            let spec =
                GroupSpec::DirectProduct(resolved.iter().map(|r| r.group.spec().clone()).collect());
            let group = classprod::group::build_group(spec)?;
            let distinguished = resolved
                .iter()
                .map(|r| r.distinguished.clone())
                .collect::<Option<Vec<_>>>()
                .map(Element::Tuple);
            Ok(ResolvedGroup {
                group,
                distinguished,
                label,
            })
        }
        GroupExpr::Wreath(base, p) => {
            let inner = resolve(base, limits)?;
            let spec = GroupSpec::Wreath {
                base: Box::new(inner.group.spec().clone()),
                top_order: *p,
            };
            let group = classprod::group::build_group(spec)?;
            let distinguished = inner.distinguished.map(|d| {
                let mut fill = vec![inner.group.identity().clone(); *p as usize];
                fill[0] = d;
                Element::WreathPair {
                    top: Box::new(Element::Residue(0)),
                    base: fill,
                }
            });
            Ok(ResolvedGroup {
                group,
                distinguished,
                label,
            })
        }
    }
}

fn family(inst: constructions::FamilyInstance, label: String) -> CliResult<ResolvedGroup> {
    Ok(ResolvedGroup {
        group: inst.group,
        distinguished: Some(inst.distinguished),
        label,
    })
}

/// Keeps the CLI grammar aligned with the wreath actions the core
/// supports; exercised by resolution tests.
pub fn describe_action(action: Action) -> &'static str {
    match action {
        Action::CyclicShift => "cyclic shift",
        Action::AffineOnField => "affine action on the field",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_leaves() {
        assert_eq!(parse_group_expr("cyclic:9").unwrap(), GroupExpr::Cyclic(9));
        assert_eq!(parse_group_expr("tower:3:2").unwrap(), GroupExpr::Tower(3, 2));
        assert_eq!(
            parse_group_expr("catalog:q8").unwrap(),
            GroupExpr::Catalog("q8".into())
        );
    }

    #[test]
    fn parse_combinators() {
        assert_eq!(
            parse_group_expr("wreath(cyclic:9,3)").unwrap(),
            GroupExpr::Wreath(Box::new(GroupExpr::Cyclic(9)), 3)
        );
        assert_eq!(
            parse_group_expr("dirprod(heis:3,catalog:q8)").unwrap(),
            GroupExpr::DirProd(vec![GroupExpr::Heis(3), GroupExpr::Catalog("q8".into())])
        );
    }

    #[test]
    fn non_prime_wreath_is_a_semantic_error() {
        match parse_group_expr("wreath(cyclic:9,4)") {
            Err(CliError::Semantic { msg, .. }) => assert!(msg.contains("4 is not prime")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        match parse_group_expr("wreath(cyclic:9") {
            Err(CliError::Parse { offset, .. }) => assert_eq!(offset, 15),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn heis_semantic_check() {
        assert!(matches!(
            parse_group_expr("heis:2"),
            Err(CliError::Semantic { .. })
        ));
    }

    #[test]
    fn print_parse_round_trip_samples() {
        for text in [
            "cyclic:9",
            "wreath(cyclic:9,3)",
            "dirprod(heis:3,catalog:q8,cyclic:5)",
            "tower:2:3",
            "super:5",
            "table:/tmp/foo.tbl",
        ] {
            let ast = parse_group_expr(text).unwrap();
            assert_eq!(ast.to_string(), text);
            assert_eq!(parse_group_expr(&ast.to_string()).unwrap(), ast);
        }
    }
}
