use serde::{Deserialize, Serialize};

use super::SymSeries;
use crate::error::Result;
use crate::partition::Partition;
use crate::poly::{fmt_rational, parse_rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub partition: Vec<u32>,
    pub t: usize,
    pub coeff: String,
}

/// Text form of a [`SymSeries`]: `{n, terms: [{partition, t, coeff}]}` with
/// coefficients as exact `num/den` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymSeriesRecord {
    pub n: usize,
    pub terms: Vec<TermRecord>,
}

impl SymSeries {
    pub fn to_record(&self) -> SymSeriesRecord {
        SymSeriesRecord {
            n: self.n_max(),
            terms: self
                .iter_terms()
                .map(|(lam, t, c)| TermRecord { partition: lam.parts().to_vec(), t, coeff: fmt_rational(c) })
                .collect(),
        }
    }

    pub fn from_record(rec: &SymSeriesRecord) -> Result<SymSeries> {
        let mut terms = Vec::with_capacity(rec.terms.len());
        for term in &rec.terms {
            terms.push((Partition::new(term.partition.clone())?, term.t, parse_rational(&term.coeff)?));
        }
        Ok(SymSeries::from_terms(rec.n, terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::homogeneous_h;

    #[test]
    fn record_shape() {
        let rec = homogeneous_h(2, 2).to_record();
        let json = serde_json::to_string(&rec).unwrap();
        assert_eq!(
            json,
            r#"{"n":2,"terms":[{"partition":[2],"t":0,"coeff":"1/2"},{"partition":[1,1],"t":0,"coeff":"1/2"}]}"#
        );
        let back: SymSeriesRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(SymSeries::from_record(&back).unwrap(), homogeneous_h(2, 2));
    }
}
