//! The RMC1 text format: `RMC1 <n>\n`, lowercase hex of the packed red
//! bits, `\n`.

use std::fs;
use std::path::Path;

use rml_core::coloring::pair_count;
use rml_core::EdgeColoring;

use crate::error::CliError;

const MAGIC: &str = "RMC1";

pub fn to_rmc(c: &EdgeColoring) -> String {
    format!("{MAGIC} {}\n{}\n", c.n(), hex::encode(c.to_packed_bytes()))
}

pub fn from_rmc(text: &str) -> Result<EdgeColoring, CliError> {
    let bad = |why: String| CliError::Format(why);
    let (header, rest) = text.split_once('\n').ok_or_else(|| bad("missing header line".into()))?;
    let n_text = header
        .strip_prefix(MAGIC)
        .and_then(|s| s.strip_prefix(' '))
        .ok_or_else(|| bad(format!("bad magic in header {header:?}")))?;
    let n: usize = n_text.parse().map_err(|_| bad(format!("bad vertex count {n_text:?}")))?;
    let body = rest.strip_suffix('\n').ok_or_else(|| bad("payload must end with a newline".into()))?;
    if body.contains('\n') || body.bytes().any(|b| b.is_ascii_uppercase()) {
        return Err(bad("payload must be one line of lowercase hex".into()));
    }
    let bytes = hex::decode(body).map_err(|e| bad(format!("bad hex payload: {e}")))?;
    let want = pair_count(n).div_ceil(8);
    if bytes.len() != want {
        return Err(bad(format!("n={n} needs {want} payload bytes, found {}", bytes.len())));
    }
    Ok(EdgeColoring::from_packed_bytes(n, &bytes)?)
}

pub fn read_rmc(path: &Path) -> Result<EdgeColoring, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })?;
    from_rmc(&text)
}

pub fn write_rmc(path: &Path, c: &EdgeColoring) -> Result<(), CliError> {
    fs::write(path, to_rmc(c)).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rml_core::coloring::split;
    use rml_core::SimpleGraph;

    #[test]
    fn single_edge() {
        let red = EdgeColoring::from_red_graph(&SimpleGraph::complete(2));
        assert_eq!(to_rmc(&red), "RMC1 2\n80\n");
        assert_eq!(to_rmc(&red.swapped()), "RMC1 2\n00\n");
        assert_eq!(from_rmc("RMC1 2\n80\n").unwrap(), red);
    }

    #[test]
    fn empty_and_round_trip() {
        assert_eq!(to_rmc(&split(0, 0)), "RMC1 0\n\n");
        assert_eq!(from_rmc("RMC1 0\n\n").unwrap().n(), 0);
        for (a, b) in [(6, 2), (5, 5), (1, 0), (3, 9)] {
            let c = split(a, b);
            assert_eq!(from_rmc(&to_rmc(&c)).unwrap(), c);
        }
    }

    #[test]
    fn rejects_malformed() {
        for text in [
            "RMC2 2\n80\n",
            "RMC1 2\n8\n",
            "RMC1 2\n80",
            "RMC1 2\n8000\n",
            "RMC1 2\n81\n",
            "RMC1 2\nAB\n",
            "RMC1 x\n80\n",
            "RMC1 3\nzz\n",
        ] {
            assert!(from_rmc(text).is_err(), "{text:?}");
        }
    }
}
