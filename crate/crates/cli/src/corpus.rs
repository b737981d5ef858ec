//! Corpus loading: one graph6-encoded graph per line. Malformed lines are
//! collected with their line numbers and the rest of the file is still used.

use std::fs;
use std::path::Path;

use total_forcing::graph6::parse_graph6;
use total_forcing::Graph;

/// A loaded corpus: `(line_number, graph6, graph)` entries plus the lines
/// that failed to parse.
pub struct Corpus {
    pub graphs: Vec<(usize, String, Graph)>,
    pub errors: Vec<(usize, String)>,
}

pub fn load_graph6_file(path: &Path) -> std::io::Result<Corpus> {
    let text = fs::read_to_string(path)?;
    Ok(load_graph6_lines(&text))
}

pub fn load_graph6_lines(text: &str) -> Corpus {
    let mut graphs = Vec::new();
    let mut errors = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        match parse_graph6(trimmed) {
            Ok(g) => graphs.push((line_no, trimmed.to_string(), g)),
            Err(e) => errors.push((line_no, e.to_string())),
        }
    }
    Corpus { graphs, errors }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_file() {
        let c = load_graph6_lines("Bw\n\nbad line\nCl\n");
        assert_eq!(c.graphs.len(), 2);
        assert_eq!(c.graphs[0].0, 1);
        assert_eq!(c.graphs[1].2.n(), 4);
        assert_eq!(c.errors.len(), 1);
        assert_eq!(c.errors[0].0, 3);
    }
}
