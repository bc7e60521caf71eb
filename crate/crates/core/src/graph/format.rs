use std::collections::HashMap;
use std::fmt::Write as _;
use std::str::FromStr;

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            "edge_list" | "edgelist" | "el" => Ok(GraphFormat::EdgeList),
            other => Err(Error::UnknownName(format!("graph format '{other}'"))),
        }
    }
}

pub fn parse_graph(format: GraphFormat, text: &str) -> Result<Graph> {
    match format {
        GraphFormat::Graph6 => parse_graph6(text),
        GraphFormat::EdgeList => parse_edge_list(text),
    }
}

/// Decodes one graph6 string. A leading `>>graph6<<` header and
/// surrounding whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(Error::parse(
            1,
            format!("byte {pos} ({:#x}) outside the graph6 range", bytes[pos]),
        ));
    }
    let (n, body) = match bytes {
        [] => return Err(Error::parse(1, "empty graph6 string")),
        [126, 126, ..] => {
            return Err(Error::Capacity(format!(
                "graph6 8-byte size form implies more than {MAX_VERTICES} vertices"
            )))
        }
        [126, a, b, c, rest @ ..] => {
            let n = ((*a as usize - 63) << 12) | ((*b as usize - 63) << 6) | (*c as usize - 63);
            (n, rest)
        }
        [126, ..] => return Err(Error::parse(1, "truncated graph6 size field")),
        [first, rest @ ..] => (*first as usize - 63, rest),
    };
    if n > MAX_VERTICES {
        return Err(Error::Capacity(format!(
            "graph6 declares {n} vertices, at most {MAX_VERTICES} supported"
        )));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::parse(
            1,
            format!(
                "graph6 body has {} bytes, {expected} expected for {n} vertices",
                body.len()
            ),
        ));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push(126 as char);
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc <<= 1;
            if g.has_edge(i, j) {
                acc |= 1;
            }
            k += 1;
            if k % 6 == 0 {
                out.push((acc + 63) as char);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        acc <<= 6 - k % 6;
        out.push((acc + 63) as char);
    }
    out
}

/// Parses whitespace-separated vertex pairs, one per line. Blank lines and
/// `#` comments are skipped.
///
/// Without a header, vertex names are arbitrary tokens numbered in order of
/// first appearance. With a leading `n <count>` line and purely numeric
/// tokens below `count`, tokens are taken as vertex indices so isolated
/// vertices and the writer's output survive a round trip.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut pairs: Vec<(usize, &str, &str)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() == 2 && tokens[0] == "n" && declared.is_none() && pairs.is_empty() {
            let count: usize = tokens[1]
                .parse()
                .map_err(|_| Error::parse(lineno, format!("bad vertex count '{}'", tokens[1])))?;
            if count > MAX_VERTICES {
                return Err(Error::Capacity(format!(
                    "edge list declares {count} vertices, at most {MAX_VERTICES} supported"
                )));
            }
            declared = Some(count);
            continue;
        }
        if tokens.len() != 2 {
            return Err(Error::parse(
                lineno,
                format!("expected two vertex names, found {} tokens", tokens.len()),
            ));
        }
        pairs.push((lineno, tokens[0], tokens[1]));
    }

    let indexed = declared.is_some_and(|count| {
        pairs.iter().all(|(_, a, b)| {
            [a, b]
                .iter()
                .all(|t| t.parse::<usize>().is_ok_and(|v| v < count))
        })
    });

    type Indexer<'a> = Box<dyn Fn(&str) -> usize + 'a>;
    let (mut g, index_of): (Graph, Indexer) = if indexed {
        let count = declared.unwrap_or(0);
        (Graph::empty(count)?, Box::new(|t: &str| t.parse().unwrap()))
    } else {
        let mut names: Vec<String> = Vec::new();
        let mut index: HashMap<&str, usize> = HashMap::new();
        for (_, a, b) in &pairs {
            for t in [*a, *b] {
                if !index.contains_key(t) {
                    index.insert(t, names.len());
                    names.push(t.to_string());
                }
            }
        }
        let count = declared.unwrap_or(0).max(names.len());
        if names.len() > MAX_VERTICES || count > MAX_VERTICES {
            return Err(Error::Capacity(format!(
                "edge list names {} vertices, at most {MAX_VERTICES} supported",
                names.len()
            )));
        }
        while names.len() < count {
            names.push(format!("_{}", names.len()));
        }
        let g = Graph::empty(count)?.with_labels(names)?;
        let owned: HashMap<String, usize> =
            index.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
        (g, Box::new(move |t: &str| owned[t]))
    };

    for (lineno, a, b) in pairs {
        let (u, v) = (index_of(a), index_of(b));
        if u == v {
            return Err(Error::parse(lineno, format!("self-loop at '{a}'")));
        }
        if g.has_edge(u, v) {
            return Err(Error::parse(lineno, format!("duplicate edge '{a} {b}'")));
        }
        g.add_edge(u, v)?;
    }
    Ok(g)
}

/// Writes the `n <count>` header followed by every edge as an index pair.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_from_edge_list() {
        let g = parse_edge_list("0 1\n1 2\n2 0").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3);
        assert!(g.is_complete());
    }

    #[test]
    fn first_appearance_order() {
        let g = parse_edge_list("b c\nc a\n").unwrap();
        assert_eq!(g.labels().unwrap(), ["b", "c", "a"]);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        assert!(matches!(
            parse_edge_list("0 0"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 1\n# comment\n1 0"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 1\n1 2 3"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(parse_edge_list("n 65"), Err(Error::Capacity(_))));
    }

    #[test]
    fn header_keeps_isolated_vertices() {
        let g = parse_edge_list("n 4\n0 2\n").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges(), vec![(0, 2)]);
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn graph6_known_strings() {
        // 5 vertices, edges 0-2, 0-4, 1-3, 3-4
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(write_graph6(&g), "DQc");
        assert_eq!(parse_graph6("DQc").unwrap(), g);
        assert_eq!(parse_graph6(">>graph6<<Bw\n").unwrap().edge_count(), 3);
        assert_eq!(write_graph6(&Graph::empty(0).unwrap()), "?");
    }

    #[test]
    fn graph6_large_size_form() {
        let mut g = Graph::empty(64).unwrap();
        g.add_edge(0, 63).unwrap();
        g.add_edge(10, 11).unwrap();
        let s = write_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn graph6_rejects_garbage() {
        assert!(parse_graph6("D?").is_err());
        assert!(parse_graph6("D Q c").is_err());
        assert!(matches!(parse_graph6("~?@~"), Err(Error::Capacity(_))));
    }
}
