//! Bit-exact readers and writers for plane-graph interchange formats.
//!
//! planar_code is the byte-level catalog format written by the usual
//! planar-graph generators: an optional ASCII header `>>planar_code<<`,
//! then per graph one byte `n` followed, for each vertex, by its
//! neighbors in rotation order (1-based) terminated by a 0 byte. The
//! neighbor order is taken verbatim as the rotation. Only the 1-byte
//! variant is supported, so `n <= 255`.
//!
//! The rotation-text format is the native fixture format: one line per
//! vertex, `v: a b c` giving the counterclockwise rotation, `#` starting
//! a comment, blank lines ignored, labels contiguous from 0.

use std::io::{BufReader, Read};

use thiserror::Error;

use crate::coloring::ColorPartition;
use crate::plane_graph::{PlaneGraph, PlaneGraphError};

pub const PLANAR_CODE_HEADER: &[u8] = b">>planar_code<<";

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("graph {graph_index}: truncated record at byte {offset}")]
    Truncated { graph_index: usize, offset: usize },
    #[error("graph {graph_index}: neighbor byte {byte} out of range 1..={n} at byte {offset}")]
    NeighborOutOfRange { graph_index: usize, byte: u8, n: usize, offset: usize },
    #[error("graph {graph_index}: vertex count byte is 0 at byte {offset}")]
    ZeroVertexCount { graph_index: usize, offset: usize },
    #[error("graph {graph_index}: {source}")]
    Validation { graph_index: usize, source: PlaneGraphError },
    #[error("graph has {0} vertices; planar_code records hold at most 255")]
    TooManyVertices(usize),
    #[error("line {line}: duplicate rotation line for vertex {vertex}")]
    DuplicateVertexLine { line: usize, vertex: usize },
    #[error("vertex labels are not contiguous from 0: missing {missing}")]
    NonContiguousLabels { missing: usize },
    #[error("line {line}: malformed token {token:?}")]
    MalformedToken { line: usize, token: String },
    #[error("line {line}: expected `v: neighbors...`")]
    MissingColon { line: usize },
    #[error("no vertex lines found")]
    EmptyRotationText,
    #[error("partition does not match the graph: {0}")]
    PartitionMismatch(crate::coloring::ColoringError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Streaming planar_code decoder. Yields graphs in file order; errors
/// carry the 1-based graph index and the byte offset.
pub struct PlanarCodeReader<R: Read> {
    source: std::io::Bytes<BufReader<R>>,
    offset: usize,
    graphs_read: usize,
    header_checked: bool,
    peeked: Option<u8>,
}

impl<R: Read> PlanarCodeReader<R> {
    pub fn new(source: R) -> Self {
        PlanarCodeReader {
            source: BufReader::new(source).bytes(),
            offset: 0,
            graphs_read: 0,
            header_checked: false,
            peeked: None,
        }
    }

    /// Graphs decoded so far.
    pub fn graphs_read(&self) -> usize {
        self.graphs_read
    }

    fn next_byte(&mut self) -> Result<Option<u8>, FormatError> {
        if let Some(byte) = self.peeked.take() {
            self.offset += 1;
            return Ok(Some(byte));
        }
        match self.source.next() {
            None => Ok(None),
            Some(Err(err)) => Err(err.into()),
            Some(Ok(byte)) => {
                self.offset += 1;
                Ok(Some(byte))
            }
        }
    }

    fn expect_byte(&mut self, graph_index: usize) -> Result<u8, FormatError> {
        self.next_byte()?
            .ok_or(FormatError::Truncated { graph_index, offset: self.offset })
    }

    fn skip_header_if_present(&mut self) -> Result<(), FormatError> {
        self.header_checked = true;
        match self.next_byte()? {
            None => Ok(()),
            Some(b'>') => {
                // committed to a header: consume and compare the rest
                let mut seen = vec![b'>'];
                while seen.len() < PLANAR_CODE_HEADER.len() {
                    let byte = self.expect_byte(1)?;
                    seen.push(byte);
                }
                if seen != PLANAR_CODE_HEADER {
                    return Err(FormatError::Truncated { graph_index: 1, offset: self.offset });
                }
                Ok(())
            }
            Some(other) => {
                self.peeked = Some(other);
                self.offset -= 1;
                Ok(())
            }
        }
    }

    fn read_record(&mut self) -> Result<Option<PlaneGraph>, FormatError> {
        if !self.header_checked {
            self.skip_header_if_present()?;
        }
        let graph_index = self.graphs_read + 1;
        let Some(n_byte) = self.next_byte()? else {
            return Ok(None); // clean end of stream
        };
        if n_byte == 0 {
            return Err(FormatError::ZeroVertexCount { graph_index, offset: self.offset });
        }
        let n = n_byte as usize;
        let mut rotations = Vec::with_capacity(n);
        for _ in 0..n {
            let mut rotation = Vec::new();
            loop {
                let byte = self.expect_byte(graph_index)?;
                if byte == 0 {
                    break;
                }
                if byte as usize > n {
                    return Err(FormatError::NeighborOutOfRange {
                        graph_index,
                        byte,
                        n,
                        offset: self.offset,
                    });
                }
                rotation.push(byte as usize - 1);
            }
            rotations.push(rotation);
        }
        let graph = PlaneGraph::from_rotation_system(n, rotations)
            .map_err(|source| FormatError::Validation { graph_index, source })?;
        self.graphs_read += 1;
        Ok(Some(graph))
    }
}

impl<R: Read> Iterator for PlanarCodeReader<R> {
    type Item = Result<PlaneGraph, FormatError>;

    fn next(&mut self) -> Option<Self::Item> {
        self.read_record().transpose()
    }
}

/// Decodes a whole planar_code byte string.
pub fn parse_planar_code(bytes: &[u8]) -> Result<Vec<PlaneGraph>, FormatError> {
    PlanarCodeReader::new(bytes).collect()
}

/// Encodes one graph as a planar_code record (no header).
pub fn write_planar_code(g: &PlaneGraph) -> Result<Vec<u8>, FormatError> {
    let n = g.vertex_count();
    if n > 255 {
        return Err(FormatError::TooManyVertices(n));
    }
    let mut bytes = vec![n as u8];
    for rotation in g.rotations() {
        for &w in rotation {
            bytes.push(w as u8 + 1);
        }
        bytes.push(0);
    }
    Ok(bytes)
}

/// Encodes a catalog: the header followed by one record per graph.
pub fn write_planar_code_catalog(graphs: &[PlaneGraph]) -> Result<Vec<u8>, FormatError> {
    let mut bytes = PLANAR_CODE_HEADER.to_vec();
    for g in graphs {
        bytes.extend(write_planar_code(g)?);
    }
    Ok(bytes)
}

/// Parses the rotation-text format into a single validated graph.
pub fn parse_rotation_text(text: &str) -> Result<PlaneGraph, FormatError> {
    let mut lines: Vec<(usize, usize, Vec<usize>)> = Vec::new(); // (line no, vertex, rotation)
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let Some((label, rest)) = content.split_once(':') else {
            return Err(FormatError::MissingColon { line: line_no });
        };
        let vertex = parse_label(label.trim(), line_no)?;
        let mut rotation = Vec::new();
        for token in rest.split_whitespace() {
            rotation.push(parse_label(token, line_no)?);
        }
        lines.push((line_no, vertex, rotation));
    }
    if lines.is_empty() {
        return Err(FormatError::EmptyRotationText);
    }
    let n = lines.iter().map(|&(_, v, _)| v).max().unwrap() + 1;
    let mut rotations: Vec<Option<Vec<usize>>> = vec![None; n];
    for (line_no, vertex, rotation) in lines {
        if rotations[vertex].is_some() {
            return Err(FormatError::DuplicateVertexLine { line: line_no, vertex });
        }
        rotations[vertex] = Some(rotation);
    }
    if let Some(missing) = rotations.iter().position(Option::is_none) {
        return Err(FormatError::NonContiguousLabels { missing });
    }
    let rotations: Vec<Vec<usize>> = rotations.into_iter().map(Option::unwrap).collect();
    PlaneGraph::from_rotation_system(n, rotations)
        .map_err(|source| FormatError::Validation { graph_index: 1, source })
}

fn parse_label(token: &str, line: usize) -> Result<usize, FormatError> {
    token
        .parse()
        .map_err(|_| FormatError::MalformedToken { line, token: token.to_string() })
}

/// Writes one graph in the rotation-text format.
pub fn write_rotation_text(g: &PlaneGraph) -> String {
    let mut out = String::new();
    for (v, rotation) in g.rotations().iter().enumerate() {
        out.push_str(&v.to_string());
        out.push(':');
        for &w in rotation {
            out.push(' ');
            out.push_str(&w.to_string());
        }
        out.push('\n');
    }
    out
}

/// Undirected DOT text for debugging. With a partition, every vertex
/// carries a color attribute chosen by class index. Output is
/// deterministic: vertices ascending, edges sorted.
pub fn write_dot(g: &PlaneGraph, partition: Option<&ColorPartition>) -> Result<String, FormatError> {
    const PALETTE: [&str; 6] = ["red", "green", "blue", "orange", "purple", "cyan"];
    if let Some(p) = partition {
        p.validate_for(&g.abstract_graph()).map_err(FormatError::PartitionMismatch)?;
    }
    let mut out = String::from("graph {\n");
    for v in 0..g.vertex_count() {
        match partition {
            Some(p) => {
                let class = p.class_of(v).expect("partition covers every vertex");
                let color = PALETTE[class % PALETTE.len()];
                out.push_str(&format!("    {v} [color={color}];\n"));
            }
            None => out.push_str(&format!("    {v};\n")),
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("    {u} -- {v};\n"));
    }
    out.push_str("}\n");
    Ok(out)
}
