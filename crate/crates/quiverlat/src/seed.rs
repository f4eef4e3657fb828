//! Seed files: the on-disk format for augmented quivers.
//!
//! Line-oriented, '#' starts a comment, tokens are whitespace-separated:
//!
//! ```text
//! knot 4_1
//! nodes 6
//! matrix
//! 1 0 1 1 1 1
//! ...five more rows...
//! a_grading 2 0 -2 0 0 2
//! q_grading -1 0 0 -2 2 0
//! x_degree 0 1 1 1 1 1
//! ```
//!
//! The x_degree line may be omitted; it then defaults to 0,1,...,1 and the
//! loader records a warning. Node 0 is always the auxiliary node.

use crate::error::{Error, Result};
use crate::quiver::{AugmentedQuiver, GradedQuiver, NodeGrading, SymQuiver};
use std::fmt::Write as _;
use std::path::Path;

/// A parsed seed: the quiver plus its declared name and any loader notes.
#[derive(Clone, Debug)]
pub struct LoadedSeed {
    pub name: String,
    pub quiver: AugmentedQuiver,
    pub warnings: Vec<String>,
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::SeedParse {
        line,
        msg: msg.into(),
    }
}

fn parse_ints(line_no: usize, tokens: &[&str]) -> Result<Vec<i64>> {
    tokens
        .iter()
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| parse_err(line_no, format!("expected an integer, found '{t}'")))
        })
        .collect()
}

pub fn parse_seed(text: &str) -> Result<LoadedSeed> {
    let mut name: Option<String> = None;
    let mut nodes: Option<usize> = None;
    let mut matrix: Option<Vec<Vec<i64>>> = None;
    let mut a_grading: Option<Vec<i64>> = None;
    let mut q_grading: Option<Vec<i64>> = None;
    let mut x_degree: Option<(usize, Vec<i64>)> = None;

    let mut lines = text.lines().enumerate().peekable();
    let mut last_line = 0usize;
    while let Some((idx, raw)) = lines.next() {
        let line_no = idx + 1;
        last_line = line_no;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        match tokens[0] {
            "knot" => {
                if tokens.len() != 2 {
                    return Err(parse_err(line_no, "knot takes exactly one name"));
                }
                name = Some(tokens[1].to_string());
            }
            "nodes" => {
                if tokens.len() != 2 {
                    return Err(parse_err(line_no, "nodes takes exactly one count"));
                }
                let n: usize = tokens[1]
                    .parse()
                    .map_err(|_| parse_err(line_no, "node count must be a positive integer"))?;
                if n == 0 {
                    return Err(parse_err(line_no, "node count must be positive"));
                }
                nodes = Some(n);
            }
            "matrix" => {
                let n = nodes
                    .ok_or_else(|| parse_err(line_no, "nodes must be declared before matrix"))?;
                let mut rows = Vec::with_capacity(n);
                while rows.len() < n {
                    let Some((ridx, rraw)) = lines.next() else {
                        return Err(parse_err(
                            last_line,
                            format!("matrix ended after {} of {} rows", rows.len(), n),
                        ));
                    };
                    let rline = ridx + 1;
                    last_line = rline;
                    let rcontent = rraw.split('#').next().unwrap_or("");
                    let rtokens: Vec<&str> = rcontent.split_whitespace().collect();
                    if rtokens.is_empty() {
                        continue;
                    }
                    let row = parse_ints(rline, &rtokens)?;
                    if row.len() != n {
                        return Err(parse_err(
                            rline,
                            format!("matrix row has {} entries, expected {n}", row.len()),
                        ));
                    }
                    rows.push(row);
                }
                matrix = Some(rows);
            }
            "a_grading" => a_grading = Some(parse_ints(line_no, &tokens[1..])?),
            "q_grading" => q_grading = Some(parse_ints(line_no, &tokens[1..])?),
            "x_degree" => x_degree = Some((line_no, parse_ints(line_no, &tokens[1..])?)),
            other => {
                return Err(parse_err(line_no, format!("unknown directive '{other}'")));
            }
        }
    }

    let name = name.ok_or_else(|| parse_err(last_line, "missing 'knot' line"))?;
    let n = nodes.ok_or_else(|| parse_err(last_line, "missing 'nodes' line"))?;
    let matrix = matrix.ok_or_else(|| parse_err(last_line, "missing 'matrix' section"))?;
    let a = a_grading.ok_or_else(|| parse_err(last_line, "missing 'a_grading' line"))?;
    let q = q_grading.ok_or_else(|| parse_err(last_line, "missing 'q_grading' line"))?;

    for i in 0..n {
        for j in 0..i {
            if matrix[i][j] != matrix[j][i] {
                return Err(Error::SeedSymmetry { i, j });
            }
        }
    }
    if a.len() != n {
        return Err(Error::SeedGradingLength {
            grading: "a_grading",
            expected: n,
            got: a.len(),
        });
    }
    if q.len() != n {
        return Err(Error::SeedGradingLength {
            grading: "q_grading",
            expected: n,
            got: q.len(),
        });
    }

    let mut warnings = Vec::new();
    let x: Vec<i64> = match x_degree {
        Some((line_no, x)) => {
            if x.len() != n {
                return Err(Error::SeedGradingLength {
                    grading: "x_degree",
                    expected: n,
                    got: x.len(),
                });
            }
            let expected: Vec<i64> = (0..n).map(|i| i64::from(i > 0)).collect();
            if x != expected {
                return Err(parse_err(
                    line_no,
                    "x_degree must be 0 on node 0 and 1 elsewhere",
                ));
            }
            x
        }
        None => {
            warnings.push(format!(
                "seed '{name}': no x_degree line; defaulting to 0,1,...,1"
            ));
            (0..n).map(|i| i64::from(i > 0)).collect()
        }
    };

    let gradings = (0..n)
        .map(|i| NodeGrading {
            a_deg: a[i],
            q_deg: q[i],
            x_deg: x[i] as u32,
        })
        .collect();
    let quiver = AugmentedQuiver::new(GradedQuiver::new(SymQuiver::new(matrix), gradings));
    Ok(LoadedSeed {
        name,
        quiver,
        warnings,
    })
}

pub fn load_seed(path: &Path) -> Result<LoadedSeed> {
    let text = std::fs::read_to_string(path)?;
    parse_seed(&text)
}

/// Render a seed in the file format; parse_seed inverts this exactly.
pub fn serialize_seed(name: &str, aug: &AugmentedQuiver) -> String {
    let n = aug.size();
    let mut out = String::new();
    writeln!(out, "knot {name}").unwrap();
    writeln!(out, "nodes {n}").unwrap();
    writeln!(out, "matrix").unwrap();
    for row in aug.matrix().rows() {
        let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
        writeln!(out, "{}", cells.join(" ")).unwrap();
    }
    let join = |f: &dyn Fn(&NodeGrading) -> String| {
        aug.gradings().iter().map(|g| f(g)).collect::<Vec<_>>().join(" ")
    };
    writeln!(out, "a_grading {}", join(&|g| g.a_deg.to_string())).unwrap();
    writeln!(out, "q_grading {}", join(&|g| g.q_deg.to_string())).unwrap();
    writeln!(out, "x_degree {}", join(&|g| g.x_deg.to_string())).unwrap();
    out
}
