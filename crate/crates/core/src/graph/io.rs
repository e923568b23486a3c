//! Plain-text edge lists.
//!
//! ```text
//! # optional comments
//! n m
//! u v
//! ...
//! ```
//!
//! Endpoints are 0-based. Graphs with roles carry a comment block
//! `# roles:` followed by one `# <vertex> <role>` line per vertex; readers
//! that do not know about roles simply skip it.

use std::fmt::Write as _;

use super::{Edge, LabeledGraph, Role};
use crate::error::{Error, Result};

pub fn write_edge_list(g: &LabeledGraph) -> String {
    let mut out = String::new();
    if let Some(roles) = g.roles() {
        out.push_str("# roles:\n");
        for (v, role) in roles.iter().enumerate() {
            let _ = writeln!(out, "# {v} {role}");
        }
    }
    let _ = writeln!(out, "{} {}", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.u(), e.v());
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<LabeledGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut roles: Vec<(usize, Role)> = Vec::new();
    let mut in_roles = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        let parse_err = |msg: String| Error::Parse { line: line_no, msg };

        if let Some(comment) = line.strip_prefix('#') {
            let comment = comment.trim();
            if comment == "roles:" {
                in_roles = true;
            } else if in_roles {
                let mut parts = comment.split_whitespace();
                match (parts.next(), parts.next(), parts.next()) {
                    (Some(v), Some(role), None) => {
                        let v = v
                            .parse()
                            .map_err(|_| parse_err(format!("bad vertex in role line `{comment}`")))?;
                        let role = role.parse().map_err(|e: Error| parse_err(e.to_string()))?;
                        roles.push((v, role));
                    }
                    _ => in_roles = false,
                }
            }
            continue;
        }
        in_roles = false;
        if line.is_empty() {
            continue;
        }

        let nums: Vec<usize> = line
            .split_whitespace()
            .map(|tok| tok.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| parse_err(format!("expected two non-negative integers, got `{line}`")))?;
        if nums.len() != 2 {
            return Err(parse_err(format!("expected two integers, got {}", nums.len())));
        }
        match header {
            None => header = Some((nums[0], nums[1])),
            Some((n, _)) => {
                if nums[0] >= n || nums[1] >= n {
                    return Err(parse_err(format!("endpoint out of range 0..{n}")));
                }
                edges.push(Edge::new(nums[0], nums[1]).map_err(|e| parse_err(e.to_string()))?);
            }
        }
    }

    let (n, m) = header.ok_or(Error::Parse {
        line: 0,
        msg: "missing `n m` header".into(),
    })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: 0,
            msg: format!("header announces {m} edges but {} were listed", edges.len()),
        });
    }
    let g = LabeledGraph::from_edges(n, edges);
    if roles.is_empty() {
        return Ok(g);
    }
    let mut table = vec![None; n];
    for (v, role) in roles {
        if v >= n || table[v].replace(role).is_some() {
            return Err(Error::Parse {
                line: 0,
                msg: format!("role block names vertex {v} twice or out of range"),
            });
        }
    }
    let table = table
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or(Error::Parse {
            line: 0,
            msg: "role block does not cover every vertex".into(),
        })?;
    g.with_roles(table)
}
