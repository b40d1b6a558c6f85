//! Published tables for `n = 2`, kept verbatim in LaTeX so that they can be
//! both compared against computed matrices and diffed against emitted output.

use crate::laurent::LaurentPoly;
use crate::partition::{revlex_order, Partition};

use super::{MatrixKind, TransitionMatrix};

const A2: &str = r"\left [\begin {array}{cc} 1&0\\q-q^{-1}&1\end {array}
\right ]";

const A3: &str = r"\left [\begin {array}{ccc} 1&0&0\\0&1&0\\q-q^{-1}&0&1
\end {array}\right ]";

const A4: &str = r"\left [\begin {array}{ccccc} 1&0&0&0&0\\q-q^{-1}&1&0&0&0\\
-1+q^{-2}&q-q^{-1}&1&0&0\\0&q^{2}-1&
q-q^{-1}&1&0\\q^{2}-1&0&-1+q^{-2}&
q-q^{-1}&1\end {array}\right ]";

const D2: &str = r"\begin {array}{ccc}  2 &1&0\\ 1 1 &q&1\end {array}";

const D3: &str = r"\begin {array}{cccc}  3 &1&0&0\\ 2 1 &0&1&0\\ 1 1 1 &q&0&1
\end {array}";

pub(crate) const D4: &str = r"\begin {array}{cccccc}  4 &1&0&0&0&0\\ 3 1 &q&1&0&0&0\\ 2 2 &0&
q&1&0&0\\ 2 1 1 &q&q^{2}&q&1&0\\ 1 1 1 1 &q^{2}&0&0&q&1\end {array}";

const D5: &str = r"\begin {array}{cccccccc}  5 &1&0&0&0&0&0&0\\ 4 1 &0&1&0&0&0&0&0
\\ 3 2 &0&0&1&0&0&0&0\\ 3 1 1 &q&0&q&1&0&0&0\\ 2 2 1 &0&0&q^{2}&q&1&0&0
\\ 2 1 1 1 &0&q&0&0&0&1&0\\ 1 1 1 1 1 &q^{2}&0&0&q&0&0&1\end {array}";

const D6: &str = r"\begin {array}{cccccccccccc}  6 &1&0&0&0&0&0&0&0&0&0&0\\ 5 1 &q
&1&0&0&0&0&0&0&0&0&0\\ 4 2 &0&q&1&0&0&0&0&0&0&0&0\\ 4 1 1 &q&q^{2}&q&1
&0&0&0&0&0&0&0\\ 3 3 &0&0&q&0&1&0&0&0&0&0&0\\ 3 2 1 &0&0&0&0&0&1&0&0&0
&0&0\\ 3 1 1 1 &q^{2}&q&q^{2}&q&q&0&1&0&0&0&0\\ 2 2 2 &0&0&q^{2}&q&q&0
&0&1&0&0&0\\ 2 2 1 1 &0&q^{2}&q^{3}&q^{2}&q^{2}&0&q&q&1&0&0\\ 2 1 1 1
1 &q^{2}&q^{3}&0&q&0&0&q^{2}&0&q&1&0\\ 1 1 1 1 1 1 &q^{3}&0&0&q^{2}&0&0
&0&0&0&q&1\end {array}";

/// A parsed table: optional row labels and the cell polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrintedTable {
    pub labels: Option<Vec<Partition>>,
    pub cells: Vec<Vec<LaurentPoly>>,
}

/// Parses a LaTeX `array`; when `labelled`, the first cell of each row is a
/// partition written as space-separated parts.
pub fn parse_latex_matrix(src: &str, labelled: bool) -> Result<PrintedTable, String> {
    let start = src.find(r"\begin").ok_or("missing \\begin")?;
    let body = &src[start..];
    let after_begin = body.find("}{").ok_or("missing column spec")?;
    let spec_end = body[after_begin + 2..].find('}').ok_or("unterminated column spec")?;
    let body = &body[after_begin + 2 + spec_end + 1..];
    let end = body.find(r"\end").ok_or("missing \\end")?;
    let body = &body[..end];
    let mut labels = Vec::new();
    let mut cells = Vec::new();
    for row in body.split(r"\\") {
        if row.trim().is_empty() {
            continue;
        }
        let mut it = row.split('&');
        if labelled {
            let label = it.next().unwrap_or_default();
            let parts = label
                .split_whitespace()
                .map(|x| x.parse::<u32>().map_err(|e| format!("bad label {label:?}: {e}")))
                .collect::<Result<Vec<_>, _>>()?;
            labels.push(Partition::new(parts).map_err(|e| e.to_string())?);
        }
        let row: Vec<LaurentPoly> = it
            .map(|c| {
                c.parse::<LaurentPoly>()
                    .map_err(|e| format!("bad cell {c:?}: {e}"))
            })
            .collect::<Result<_, _>>()?;
        cells.push(row);
    }
    Ok(PrintedTable {
        labels: labelled.then_some(labels),
        cells,
    })
}

fn to_matrix(kind: MatrixKind, m: usize, table: PrintedTable) -> TransitionMatrix {
    let order = revlex_order(m);
    if let Some(labels) = &table.labels {
        assert_eq!(labels, &order, "printed labels out of revlex order");
    }
    assert_eq!(table.cells.len(), order.len());
    let mut out = TransitionMatrix::identity(kind, 2, m);
    out.entries.clear();
    for (i, row) in table.cells.into_iter().enumerate() {
        assert_eq!(row.len(), order.len());
        for (j, c) in row.into_iter().enumerate() {
            out.set(i, j, c);
        }
    }
    out
}

/// Published bar matrix for `n = 2`, available for `m` in 2..=4.
pub fn printed_a(m: usize) -> Option<TransitionMatrix> {
    let src = match m {
        2 => A2,
        3 => A3,
        4 => A4,
        _ => return None,
    };
    let t = parse_latex_matrix(src, false).expect("embedded table parses");
    Some(to_matrix(MatrixKind::A, m, t))
}

/// Published `D` matrix for `n = 2`, available for `m` in 2..=6.
pub fn printed_d(m: usize) -> Option<TransitionMatrix> {
    let src = match m {
        2 => D2,
        3 => D3,
        4 => D4,
        5 => D5,
        6 => D6,
        _ => return None,
    };
    let t = parse_latex_matrix(src, true).expect("embedded table parses");
    Some(to_matrix(MatrixKind::D, m, t))
}

/// Raw LaTeX source of a published `D` matrix.
pub fn printed_d_latex(m: usize) -> Option<&'static str> {
    match m {
        2 => Some(D2),
        3 => Some(D3),
        4 => Some(D4),
        5 => Some(D5),
        6 => Some(D6),
        _ => None,
    }
}
