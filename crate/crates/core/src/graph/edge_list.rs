//! Plain edge-list text: a header line `n m`, then `m` lines `u v` with
//! 0-based endpoints. Blank lines and `#` comments are skipped.

use super::{Graph, GraphError};

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (line_no, header) = lines
        .next()
        .ok_or_else(|| GraphError::MalformedRecord("missing `n m` header".into()))?;
    let [n, m] = parse_pair(header, line_no)?;

    let mut edges = Vec::with_capacity(m);
    for (line_no, line) in lines {
        let [u, v] = parse_pair(line, line_no)?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(GraphError::MalformedRecord(format!(
            "header declares {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::new(n, edges)
}

fn parse_pair(line: &str, line_no: usize) -> Result<[usize; 2], GraphError> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    let bad = || GraphError::MalformedRecord(format!("line {line_no}: expected two integers, got `{line}`"));
    if fields.len() != 2 {
        return Err(bad());
    }
    let a = fields[0].parse().map_err(|_| bad())?;
    let b = fields[1].parse().map_err(|_| bad())?;
    Ok([a, b])
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
