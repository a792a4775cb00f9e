//! Text grammars accepted on the command line.
//!
//! Groups: `Z5`, `Z2^4`, `Z3xZ9`, `Z2^3xZ5`. Allowed sets: `interval:k`,
//! `hamming:k`, `nonzero`, `set:{0,3}` or `set:{(1,0),(0,1)}`. Edge sets:
//! `v=4;edges=01,02,12` or `v=4;mask=0b001011`. Rationals: `p/q` or `p`.

use std::fmt;
use std::str::FromStr;

use reciprocity_core::graphs::pair_count;
use reciprocity_core::{AllowedSet, EdgeSet, FiniteAbelianGroup, GroupElement, Rational};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    pub orders: Vec<u32>,
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteAbelianGroup, CliError> {
        Ok(FiniteAbelianGroup::new(&self.orders)?)
    }
}

impl FromStr for GroupSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let mut orders = Vec::new();
        for factor in s.trim().split('x') {
            let body = factor.strip_prefix('Z').ok_or_else(|| {
                CliError::parse(format!("group factor {factor:?} must start with Z"))
            })?;
            let (base, power) = match body.split_once('^') {
                Some((b, p)) => (b, p),
                None => (body, "1"),
            };
            let base: u32 = base
                .parse()
                .map_err(|_| CliError::parse(format!("bad cyclic order in {factor:?}")))?;
            let power: usize = power
                .parse()
                .map_err(|_| CliError::parse(format!("bad exponent in {factor:?}")))?;
            if power == 0 {
                return Err(CliError::parse(format!("zero exponent in {factor:?}")));
            }
            orders.extend(std::iter::repeat_n(base, power));
        }
        Ok(GroupSpec { orders })
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut rest = &self.orders[..];
        while let Some(&n) = rest.first() {
            let run = rest.iter().take_while(|&&m| m == n).count();
            if !first {
                f.write_str("x")?;
            }
            first = false;
            if run == 1 {
                write!(f, "Z{n}")?;
            } else {
                write!(f, "Z{n}^{run}")?;
            }
            rest = &rest[run..];
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AllowedSpec {
    Interval(usize),
    Hamming(i64),
    Nonzero,
    Set(Vec<Vec<u32>>),
}

impl AllowedSpec {
    pub fn build(&self, group: &FiniteAbelianGroup) -> Result<AllowedSet, CliError> {
        match self {
            AllowedSpec::Interval(k) => Ok(AllowedSet::interval(group, *k)?),
            AllowedSpec::Hamming(k) => {
                if group.factors().iter().any(|&n| n != 2) {
                    return Err(CliError::parse(
                        "hamming sets need a group of the form Z2^n",
                    ));
                }
                Ok(AllowedSet::hamming(group.factors().len() as u32, *k)?)
            }
            AllowedSpec::Nonzero => Ok(AllowedSet::nonzero(group)),
            AllowedSpec::Set(items) => {
                let elements = items
                    .iter()
                    .map(|r| {
                        if r.len() == 1 && group.factors().len() > 1 {
                            // bare integer in a product group: element index
                            let i = r[0] as usize;
                            if i >= group.order() {
                                return Err(CliError::parse(format!(
                                    "element index {i} out of range"
                                )));
                            }
                            Ok(group.element(i))
                        } else {
                            Ok(GroupElement::new(r.clone()))
                        }
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(AllowedSet::explicit(group, &elements)?)
            }
        }
    }
}

fn parse_number<T: FromStr>(s: &str, what: &str) -> Result<T, CliError> {
    s.trim()
        .parse()
        .map_err(|_| CliError::parse(format!("bad {what}: {s:?}")))
}

impl FromStr for AllowedSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let s = s.trim();
        if s == "nonzero" {
            return Ok(AllowedSpec::Nonzero);
        }
        let (kind, arg) = s
            .split_once(':')
            .ok_or_else(|| CliError::parse(format!("unknown allowed set {s:?}")))?;
        match kind {
            "interval" => Ok(AllowedSpec::Interval(parse_number(arg, "interval width")?)),
            "hamming" => Ok(AllowedSpec::Hamming(parse_number(
                arg,
                "hamming threshold",
            )?)),
            "set" => {
                let inner = arg
                    .trim()
                    .strip_prefix('{')
                    .and_then(|x| x.strip_suffix('}'))
                    .ok_or_else(|| CliError::parse("set elements must be wrapped in {...}"))?;
                let mut items = Vec::new();
                let mut rest = inner.trim();
                while !rest.is_empty() {
                    if let Some(tuple) = rest.strip_prefix('(') {
                        let close = tuple
                            .find(')')
                            .ok_or_else(|| CliError::parse("unclosed tuple in set"))?;
                        let residues = tuple[..close]
                            .split(',')
                            .map(|x| parse_number(x, "residue"))
                            .collect::<Result<Vec<u32>, _>>()?;
                        items.push(residues);
                        rest = tuple[close + 1..].trim_start();
                    } else {
                        let end = rest.find(',').unwrap_or(rest.len());
                        items.push(vec![parse_number(&rest[..end], "element")?]);
                        rest = &rest[end..];
                    }
                    rest = rest.strip_prefix(',').unwrap_or(rest).trim_start();
                }
                Ok(AllowedSpec::Set(items))
            }
            _ => Err(CliError::parse(format!(
                "unknown allowed set kind {kind:?}"
            ))),
        }
    }
}

impl fmt::Display for AllowedSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AllowedSpec::Interval(k) => write!(f, "interval:{k}"),
            AllowedSpec::Hamming(k) => write!(f, "hamming:{k}"),
            AllowedSpec::Nonzero => f.write_str("nonzero"),
            AllowedSpec::Set(items) => {
                f.write_str("set:{")?;
                for (n, r) in items.iter().enumerate() {
                    if n > 0 {
                        f.write_str(",")?;
                    }
                    if r.len() == 1 {
                        write!(f, "{}", r[0])?;
                    } else {
                        let parts: Vec<String> = r.iter().map(u32::to_string).collect();
                        write!(f, "({})", parts.join(","))?;
                    }
                }
                f.write_str("}")
            }
        }
    }
}

pub fn parse_edge_set(s: &str) -> Result<EdgeSet, CliError> {
    let (head, body) = s
        .trim()
        .split_once(';')
        .ok_or_else(|| CliError::parse("edge set must look like v=N;edges=... or v=N;mask=..."))?;
    let v: usize = head
        .strip_prefix("v=")
        .ok_or_else(|| CliError::parse("edge set must start with v="))
        .and_then(|x| parse_number(x, "vertex count"))?;
    if let Some(list) = body.strip_prefix("edges=") {
        let mut edges = Vec::new();
        for item in list.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            let (a, b) = match item.split_once('-') {
                Some((a, b)) => (parse_number(a, "vertex")?, parse_number(b, "vertex")?),
                None if item.len() == 2 => {
                    let d: Vec<usize> = item
                        .chars()
                        .map(|c| c.to_digit(10).map(|d| d as usize))
                        .collect::<Option<_>>()
                        .ok_or_else(|| CliError::parse(format!("bad edge {item:?}")))?;
                    (d[0], d[1])
                }
                None => return Err(CliError::parse(format!("bad edge {item:?}"))),
            };
            edges.push((a, b));
        }
        Ok(EdgeSet::from_edges(v, &edges)?)
    } else if let Some(mask) = body.strip_prefix("mask=") {
        let value = match mask.strip_prefix("0b") {
            Some(bits) => u32::from_str_radix(bits, 2),
            None => mask.parse(),
        }
        .map_err(|_| CliError::parse(format!("bad mask {mask:?}")))?;
        Ok(EdgeSet::new(v, value)?)
    } else {
        Err(CliError::parse(
            "edge set body must be edges=... or mask=...",
        ))
    }
}

/// `v=N;mask=0b...`, padded to one bit per vertex pair, edge 0 rightmost.
pub fn render_mask(e: &EdgeSet) -> String {
    format!(
        "v={};mask=0b{:0width$b}",
        e.v(),
        e.mask(),
        width = pair_count(e.v()).max(1)
    )
}

pub fn parse_rational(s: &str) -> Result<Rational, CliError> {
    s.trim()
        .parse()
        .map_err(|_| CliError::parse(format!("bad rational {s:?}, expected p/q")))
}
