//! graph6 records: a size prefix followed by the upper triangle of the
//! adjacency matrix in column order, six bits per printable byte (63..=126).

use super::{Graph, GraphError, VertexSet, MAX_VERTICES};

/// Largest order with a one-byte size prefix; the encoder emits only that form.
pub const GRAPH6_MAX_VERTICES: usize = 62;

const BIAS: u8 = 63;
const HEADER: &str = ">>graph6<<";

/// Parses one graph6 record. Surrounding whitespace and an optional
/// `>>graph6<<` header are ignored. The four-byte size form is accepted as
/// long as the order fits the 64-vertex mask width.
pub fn parse_graph6(line: &str) -> Result<Graph, GraphError> {
    let record = line.trim();
    let record = record.strip_prefix(HEADER).unwrap_or(record);
    let bytes = record.as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::MalformedRecord("empty graph6 record".into()));
    }
    if let Some(pos) = bytes.iter().position(|b| !(BIAS..=126).contains(b)) {
        return Err(GraphError::MalformedRecord(format!(
            "byte {:#04x} at offset {pos} is outside the graph6 range",
            bytes[pos]
        )));
    }

    let (n, body) = match bytes[0] {
        126 => {
            if bytes.get(1) == Some(&126) {
                // eight-byte form: orders of at least 258048
                return Err(GraphError::UnsupportedSize(258_048));
            }
            if bytes.len() < 4 {
                return Err(GraphError::MalformedRecord("truncated size prefix".into()));
            }
            let n = bytes[1..4]
                .iter()
                .fold(0usize, |acc, &b| acc << 6 | (b - BIAS) as usize);
            (n, &bytes[4..])
        }
        b => ((b - BIAS) as usize, &bytes[1..]),
    };
    if n > MAX_VERTICES {
        return Err(GraphError::UnsupportedSize(n));
    }

    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    if body.len() != expected {
        return Err(GraphError::MalformedRecord(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            body.len()
        )));
    }

    let mut rows = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                rows[i].insert(j);
                rows[j].insert(i);
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows(rows))
}

/// Encodes a graph with at most [`GRAPH6_MAX_VERTICES`] vertices.
pub fn encode_graph6(g: &Graph) -> Result<String, GraphError> {
    let n = g.n();
    if n > GRAPH6_MAX_VERTICES {
        return Err(GraphError::UnsupportedSize(n));
    }
    let bit_count = n * n.saturating_sub(1) / 2;
    let mut body = vec![0u8; bit_count.div_ceil(6)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                body[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(1 + body.len());
    out.push((n as u8 + BIAS) as char);
    out.extend(body.into_iter().map(|b| (b + BIAS) as char));
    Ok(out)
}
