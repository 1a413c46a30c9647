//! Graph input and output formats: edge lists, 0/1 adjacency matrices,
//! and graph6 (short form, `n <= 62`).

use stress_core::Graph;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    EdgeList,
    AdjMatrix,
    Graph6,
}

/// Guesses the format. An `n x n` block of 0/1 lines is an adjacency
/// matrix; otherwise a leading comment or lone integer means an edge
/// list, and anything else is graph6.
pub fn detect_format(text: &str) -> InputFormat {
    let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
    let Some(&first) = lines.first() else {
        return InputFormat::EdgeList;
    };
    if first.starts_with('#') {
        return InputFormat::EdgeList;
    }
    let is_01 = |l: &str| l.len() >= 2 && l.bytes().all(|b| b == b'0' || b == b'1');
    if is_01(first)
        && lines.len() == first.len()
        && lines.iter().all(|l| is_01(l) && l.len() == first.len())
    {
        return InputFormat::AdjMatrix;
    }
    if first.parse::<usize>().is_ok() {
        return InputFormat::EdgeList;
    }
    InputFormat::Graph6
}

fn parse_err(msg: impl Into<String>) -> CliError {
    CliError::Parse(msg.into())
}

/// Edge-list format: first significant line is the vertex count, each
/// following line one `u v` pair. `#` starts a comment, blank lines are
/// ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, CliError> {
    let mut lines = text.lines().filter_map(|raw| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some(line)
    });
    let header = lines.next().ok_or_else(|| parse_err("missing vertex count"))?;
    let n: usize = header
        .parse()
        .map_err(|_| parse_err(format!("invalid vertex count `{header}`")))?;
    let mut edges = Vec::new();
    for line in lines {
        let mut tokens = line.split_whitespace();
        let (u, v) = match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => return Err(parse_err(format!("malformed edge line `{line}`"))),
        };
        let u: usize = u
            .parse()
            .map_err(|_| parse_err(format!("invalid vertex `{u}`")))?;
        let v: usize = v
            .parse()
            .map_err(|_| parse_err(format!("invalid vertex `{v}`")))?;
        edges.push((u, v));
    }
    Graph::from_edge_list(n, edges).map_err(|e| parse_err(e.to_string()))
}

/// Adjacency-matrix format: `n` lines of `n` characters `0`/`1`,
/// symmetric with a zero diagonal.
pub fn parse_adjacency_matrix(text: &str) -> Result<Graph, CliError> {
    let rows: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
    let n = rows.len();
    if n == 0 {
        return Err(parse_err("empty adjacency matrix"));
    }
    let mut cells = vec![false; n * n];
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(parse_err(format!(
                "row {i} has length {}, expected {n}",
                row.len()
            )));
        }
        for (j, b) in row.bytes().enumerate() {
            cells[i * n + j] = match b {
                b'0' => false,
                b'1' => true,
                _ => {
                    return Err(parse_err(format!(
                        "row {i} contains `{}`, expected 0 or 1",
                        b as char
                    )))
                }
            };
        }
    }
    let mut edges = Vec::new();
    for i in 0..n {
        if cells[i * n + i] {
            return Err(parse_err(format!("nonzero diagonal at vertex {i}")));
        }
        for j in i + 1..n {
            if cells[i * n + j] != cells[j * n + i] {
                return Err(parse_err(format!("matrix not symmetric at ({i}, {j})")));
            }
            if cells[i * n + j] {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edge_list(n, edges).map_err(|e| parse_err(e.to_string()))
}

const G6_BIAS: u8 = 63;
const G6_MAX_N: usize = 62;

/// Upper-triangle pairs in graph6 bit order: `(0,1), (0,2), (1,2),
/// (0,3), (1,3), (2,3), ...` (column-major).
fn g6_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(move |j| (0..j).map(move |i| (i, j)))
}

/// Decodes a single short-form graph6 line.
pub fn parse_graph6(text: &str) -> Result<Graph, CliError> {
    let line = text.trim();
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(parse_err("empty graph6 line"));
    }
    if bytes[0] == 126 {
        return Err(parse_err("long-form graph6 (n > 62) is not supported"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(G6_BIAS..=126).contains(&b)) {
        return Err(parse_err(format!(
            "graph6 byte {b} outside the printable range 63..=126"
        )));
    }
    let n = (bytes[0] - G6_BIAS) as usize;
    let pair_count = n * n.saturating_sub(1) / 2;
    let body = &bytes[1..];
    if body.len() != pair_count.div_ceil(6) {
        return Err(parse_err(format!(
            "graph6 line has {} data bytes, expected {} for n = {n}",
            body.len(),
            pair_count.div_ceil(6)
        )));
    }
    let mut edges = Vec::new();
    for (p, (i, j)) in g6_pairs(n).enumerate() {
        let bits = body[p / 6] - G6_BIAS;
        if bits >> (5 - p % 6) & 1 == 1 {
            edges.push((i, j));
        }
    }
    Graph::from_edge_list(n, edges).map_err(|e| parse_err(e.to_string()))
}

/// Encodes a graph as a short-form graph6 line.
pub fn emit_graph6(g: &Graph) -> Result<String, CliError> {
    let n = g.n();
    if n > G6_MAX_N {
        return Err(CliError::Domain(stress_core::Error::TooLarge {
            n,
            max: G6_MAX_N,
        }));
    }
    let mut bytes = vec![G6_BIAS + n as u8];
    let pair_count = n * n.saturating_sub(1) / 2;
    bytes.resize(1 + pair_count.div_ceil(6), G6_BIAS);
    for (p, (i, j)) in g6_pairs(n).enumerate() {
        if g.has_edge(i, j) {
            bytes[1 + p / 6] += 1 << (5 - p % 6);
        }
    }
    Ok(String::from_utf8(bytes).expect("graph6 bytes are printable ASCII"))
}

/// Edge-list emitter: the inverse of [`parse_edge_list`].
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses input text in the given (or detected) format. Graph6 input may
/// hold several graphs, one per line; the other formats hold exactly one.
pub fn parse_input(text: &str, format: Option<InputFormat>) -> Result<Vec<Graph>, CliError> {
    let format = format.unwrap_or_else(|| detect_format(text));
    match format {
        InputFormat::EdgeList => Ok(vec![parse_edge_list(text)?]),
        InputFormat::AdjMatrix => Ok(vec![parse_adjacency_matrix(text)?]),
        InputFormat::Graph6 => {
            let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
            if lines.is_empty() {
                return Err(parse_err("empty graph6 input"));
            }
            lines.into_iter().map(parse_graph6).collect()
        }
    }
}
