//! Text and JSON output of basis sets.

use serde::{Deserialize, Serialize};

use crate::bases::{BasisKind, BasisSet};
use crate::binomial::{Binomial, VariableNames};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct BasisJson {
    kind: BasisKind,
    p: u64,
    n: usize,
    k: usize,
    oriented_count: usize,
    unordered_count: usize,
    elements: Vec<Binomial>,
}

/// One binomial per line in the basis' stored order, or a single JSON object.
pub fn render(basis: &BasisSet, json: bool, names: VariableNames) -> String {
    if json {
        return to_json(basis);
    }
    let mut out = String::new();
    for b in basis.elements() {
        out.push_str(&b.display(names).to_string());
        out.push('\n');
    }
    out
}

pub fn to_json(basis: &BasisSet) -> String {
    let doc = BasisJson {
        kind: basis.kind(),
        p: basis.p(),
        n: basis.length(),
        k: basis.dimension(),
        oriented_count: basis.oriented_count(),
        unordered_count: basis.unordered_count(),
        elements: basis.elements().to_vec(),
    };
    serde_json::to_string(&doc).expect("basis serializes")
}

/// Inverse of [`to_json`]; the stated counts must match the elements.
pub fn from_json(text: &str) -> Result<BasisSet> {
    let doc: BasisJson = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    if let Some(b) = doc.elements.iter().find(|b| b.num_vars() != doc.n) {
        return Err(Error::LengthMismatch(b.num_vars(), doc.n));
    }
    let basis = BasisSet::from_parts(doc.kind, doc.p, doc.n, doc.k, doc.elements);
    if basis.oriented_count() != doc.oriented_count
        || basis.unordered_count() != doc.unordered_count
    {
        return Err(Error::Parse {
            line: 1,
            message: "element counts do not match the element list".into(),
        });
    }
    Ok(basis)
}
