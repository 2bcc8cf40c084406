use std::io::Read;
use std::path::{Path, PathBuf};

use clap::Args;
use sdgraph::fixtures::named_fixture;
use sdgraph::graph::parse_edge_list;
use sdgraph::{graph6, Error, Graph, Matching, Result, VertexId};

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Built-in example graph (its drawn matching is used as the reference).
    #[arg(long, value_name = "NAME")]
    pub fixture: Option<String>,
    /// Inline edge list, e.g. "0 1, 1 2, 2 0".
    #[arg(long, value_name = "EDGES")]
    pub edges: Option<String>,
    /// Inline graph6 string.
    #[arg(long, value_name = "G6")]
    pub graph6: Option<String>,
    /// File holding an edge list or a graph6 line; `-` reads standard input.
    #[arg(long, value_name = "PATH")]
    pub file: Option<PathBuf>,
}

pub struct Loaded {
    pub graph: Graph,
    /// Input label of each vertex, when an edge list used other ids.
    pub labels: Option<Vec<u64>>,
    pub matching: Option<Matching>,
}

impl Loaded {
    fn plain(graph: Graph) -> Loaded {
        Loaded {
            graph,
            labels: None,
            matching: None,
        }
    }

    fn from_edges(text: &str) -> Result<Loaded> {
        let lg = parse_edge_list(text)?;
        let labels = (!lg.is_identity()).then(|| lg.labels.clone());
        Ok(Loaded {
            graph: lg.graph,
            labels,
            matching: None,
        })
    }

    /// Maps a vertex as written by the user to its internal id.
    pub fn vertex(&self, label: u64) -> Result<VertexId> {
        let v = match &self.labels {
            Some(ls) => ls.iter().position(|&l| l == label),
            None => usize::try_from(label)
                .ok()
                .filter(|&v| v < self.graph.order()),
        };
        v.ok_or_else(|| {
            Error::Domain(format!(
                "vertex {label} not in graph of order {}",
                self.graph.order()
            ))
        })
    }
}

pub fn read_text(path: &Path) -> Result<String> {
    let mut s = String::new();
    let res = if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut s).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| s = t)
    };
    res.map_err(|e| Error::Validation(format!("cannot read {}: {e}", path.display())))?;
    Ok(s)
}

/// A line is taken as graph6 if it is one token of printable graph6 bytes.
fn looks_like_graph6(text: &str) -> bool {
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .collect();
    !lines.is_empty()
        && lines.iter().all(|l| {
            let l = l.strip_prefix(">>graph6<<").unwrap_or(l);
            !l.is_empty() && l.bytes().all(|b| (63..=126).contains(&b))
        })
}

/// Decodes one graph6 string per line, with or without the `>>graph6<<`
/// header.
pub fn graph6_stream(text: &str) -> Result<Vec<Graph>> {
    graph6::decode_stream(&text.replace(">>graph6<<", ""))
}

pub fn load(src: &Source) -> Result<Loaded> {
    if let Some(name) = &src.fixture {
        let f = named_fixture(name)?;
        return Ok(Loaded {
            graph: f.graph,
            labels: None,
            matching: Some(f.matching),
        });
    }
    if let Some(e) = &src.edges {
        return Loaded::from_edges(e);
    }
    if let Some(s) = &src.graph6 {
        return graph6::decode(s.trim()).map(Loaded::plain);
    }
    let path = src.file.as_ref().expect("clap requires one source");
    let text = read_text(path)?;
    if looks_like_graph6(&text) {
        let mut gs = graph6_stream(&text)?;
        if gs.len() != 1 {
            return Err(Error::Validation(format!(
                "{} holds {} graphs, expected one",
                path.display(),
                gs.len()
            )));
        }
        Ok(Loaded::plain(gs.pop().unwrap()))
    } else {
        Loaded::from_edges(&text)
    }
}
