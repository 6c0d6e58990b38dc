use std::fmt;

use crate::grassmann::{FerrersDiagram, IdentifyingVector};
use crate::rankmetric::EntryOrder;

use super::{lines, parse_err, IoError};

/// A dot order for one cell: the identifying vector on the first line, then
/// one line per diagram row with the coordinate numbers of its dots, left to
/// right. Number 1 is the most significant dot. A row without dots is an
/// empty line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermFile {
    pub comments: Vec<String>,
    pub idvec: IdentifyingVector,
    pub order: EntryOrder,
}

impl PermFile {
    pub fn new(idvec: IdentifyingVector, order: EntryOrder) -> Self {
        Self { comments: Vec::new(), idvec, order }
    }

    pub fn parse(text: &str) -> Result<Self, IoError> {
        let mut comments = Vec::new();
        let mut idvec: Option<(usize, IdentifyingVector)> = None;
        let mut rows: Vec<(usize, Vec<usize>)> = Vec::new();
        for (no, line) in lines(text)? {
            if let Some(rest) = line.strip_prefix('#') {
                if idvec.is_none() {
                    comments.push(rest.to_string());
                }
                continue;
            }
            let t = line.trim();
            match idvec {
                None if t.is_empty() => {}
                None => idvec = Some((no, t.parse().map_err(|e| parse_err(no, format!("{e}")))?)),
                Some(_) => {
                    let row: Result<Vec<usize>, _> = t.split_whitespace().map(str::parse).collect();
                    rows.push((no, row.map_err(|_| parse_err(no, format!("bad number in {t:?}")))?));
                }
            }
        }
        let (line, v) = idvec.ok_or_else(|| parse_err(1, "missing identifying vector"))?;
        while rows.last().is_some_and(|(_, r)| r.is_empty()) {
            rows.pop();
        }
        let d = FerrersDiagram::from_idvec(&v);
        let k = v.weight();
        if rows.len() > k {
            return Err(parse_err(rows[k].0, format!("more than k={k} rows")));
        }
        let mut grid: Vec<Vec<usize>> = rows.into_iter().map(|(_, r)| r).collect();
        grid.resize(k, Vec::new());
        let order = EntryOrder::from_grid(&d, &grid).map_err(|e| parse_err(line, e.to_string()))?;
        Ok(Self { comments, idvec: v, order })
    }
}

impl fmt::Display for PermFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.comments {
            writeln!(f, "#{c}")?;
        }
        writeln!(f, "{}", self.idvec)?;
        for row in self.order.to_grid(&FerrersDiagram::from_idvec(&self.idvec)) {
            let cells: Vec<String> = row.iter().map(usize::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}
