//! Text renderings of computed tables: JSON records, CSV and LaTeX.

use std::collections::BTreeMap;
use std::fmt::Write;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::level_trees::StrataSummary;
use crate::numeric::NumericTable;
use crate::partition::Partition;
use crate::poly::{fmt_rational, parse_rational, TPoly};
use crate::symfunc::SymSeries;

pub type SchurTable = BTreeMap<Partition, TPoly>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurRow {
    pub lambda: Vec<u32>,
    pub poly: Vec<String>,
}

/// `{n, rows: [{lambda, poly: ["c0", "c1", ...]}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurTableRecord {
    pub n: usize,
    pub rows: Vec<SchurRow>,
}

impl SchurTableRecord {
    pub fn new(n: usize, table: &SchurTable) -> Self {
        SchurTableRecord {
            n,
            rows: table
                .iter()
                .map(|(lam, p)| SchurRow {
                    lambda: lam.parts().to_vec(),
                    poly: p.coeffs().iter().map(fmt_rational).collect(),
                })
                .collect(),
        }
    }

    pub fn to_table(&self) -> Result<SchurTable> {
        self.rows
            .iter()
            .map(|r| {
                let coeffs = r.poly.iter().map(|c| parse_rational(c)).collect::<Result<Vec<_>>>()?;
                Ok((Partition::new(r.lambda.clone())?, TPoly::from_coeffs(coeffs)))
            })
            .collect()
    }
}

fn latex_poly(p: &TPoly) -> String {
    let mut s = String::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let abs = c.abs();
        if s.is_empty() {
            if c.is_negative() {
                s.push('-');
            }
        } else {
            s.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let var = match k {
            0 => String::new(),
            1 => "t".into(),
            _ => format!("t^{k}"),
        };
        let num = if abs.is_integer() {
            abs.to_integer().to_string()
        } else {
            format!("\\frac{{{}}}{{{}}}", abs.numer(), abs.denom())
        };
        if abs.is_one() && k > 0 {
            s.push_str(&var);
        } else {
            s.push_str(&num);
            s.push_str(&var);
        }
    }
    s
}

fn latex_schur(lam: &Partition) -> String {
    let label = lam.label();
    if label.len() == 1 {
        format!("s_{label}")
    } else {
        format!("s_{{{label}}}")
    }
}

/// One table row in the layout `s_4(1 + 3t + t^2) + s_{31}t + s_{22}t`.
pub fn latex_schur_expression(table: &SchurTable) -> String {
    let mut out = String::new();
    for (lam, p) in table {
        let nonzero: Vec<usize> = (0..p.len()).filter(|&k| !p.coeff(k).is_zero()).collect();
        let (negative, body) = match nonzero.as_slice() {
            [k] => {
                let c = p.coeff(*k);
                let mono = TPoly::monomial(c.abs(), *k);
                let body = match (c.abs().is_one(), *k) {
                    (true, 0) => latex_schur(lam),
                    (true, _) => format!("{}{}", latex_schur(lam), latex_poly(&mono)),
                    _ => format!("{}({})", latex_schur(lam), latex_poly(&mono)),
                };
                (c.is_negative(), body)
            }
            _ => (false, format!("{}({})", latex_schur(lam), latex_poly(p))),
        };
        match (out.is_empty(), negative) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

/// `symbol` is the LaTeX name of the tabulated series, e.g. `\mathrm{H}`.
pub fn latex_schur_tables(tables: &BTreeMap<usize, SchurTable>, symbol: &str) -> String {
    let mut s = format!("\\begin{{tabular}}{{|l|l|}}\n\\hline\n$n$ & ${symbol}_n(t)$ \\\\ \\hline\n");
    for (n, t) in tables {
        writeln!(s, "${n}$ & ${}$ \\\\ \\hline", latex_schur_expression(t)).unwrap();
    }
    s.push_str("\\end{tabular}\n");
    s
}

pub fn csv_schur_tables(tables: &BTreeMap<usize, SchurTable>) -> String {
    let mut s = String::from("n,lambda,t,coeff\n");
    for (n, t) in tables {
        for (lam, p) in t {
            for (k, c) in p.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                writeln!(s, "{n},{},{k},{}", lam.label(), fmt_rational(c)).unwrap();
            }
        }
    }
    s
}

pub fn csv_series(series: &BTreeMap<usize, SymSeries>) -> String {
    let mut s = String::from("n,partition,t,coeff\n");
    for (n, c) in series {
        for (lam, k, coeff) in c.iter_terms() {
            let parts: Vec<String> = lam.parts().iter().map(|p| p.to_string()).collect();
            writeln!(s, "{n},{},{k},{}", parts.join(" "), fmt_rational(coeff)).unwrap();
        }
    }
    s
}

fn latex_p(lam: &Partition) -> String {
    let label = lam.label();
    if label.len() == 1 {
        format!("p_{label}")
    } else {
        format!("p_{{{label}}}")
    }
}

/// `symbol` is the LaTeX name of the tabulated series, e.g. `\mathrm{H}`.
pub fn latex_series(series: &BTreeMap<usize, SymSeries>, symbol: &str) -> String {
    let mut s = format!("\\begin{{tabular}}{{|l|l|}}\n\\hline\n$n$ & ${symbol}_n(t)$ \\\\ \\hline\n");
    for (n, c) in series {
        let terms: Vec<String> = c.terms().iter().map(|(l, p)| format!("{}({})", latex_p(l), latex_poly(p))).collect();
        writeln!(s, "${n}$ & ${}$ \\\\ \\hline", terms.join(" + ")).unwrap();
    }
    s.push_str("\\end{tabular}\n");
    s
}

pub fn csv_numeric(table: &NumericTable) -> String {
    let mut s = String::from("n,hnum,chi\n");
    for rec in table.to_records() {
        writeln!(s, "{},{},{}", rec.n, rec.hnum.join(" "), rec.chi).unwrap();
    }
    s
}

pub fn latex_numeric(table: &NumericTable) -> String {
    let mut s = String::from(
        "\\begin{tabular}{|l|l|l|}\n\\hline\n$n$ & $\\mathrm{H}^{\\mathrm{num}}_n(t)$ & $\\chi_n$ \\\\ \\hline\n",
    );
    for (n, p) in table.polys() {
        writeln!(s, "${n}$ & ${}$ & ${}$ \\\\ \\hline", latex_poly(p), table.chi(*n).unwrap_or_default()).unwrap();
    }
    s.push_str("\\end{tabular}\n");
    s
}

fn coeff_strings(p: &TPoly) -> Vec<String> {
    p.coeffs().iter().map(fmt_rational).collect()
}

/// `{n, counts_by_length: {len: count}, epoly: [...], epoly_by_length: {len: [...]}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrataRecord {
    pub n: usize,
    pub total: u64,
    pub counts_by_length: BTreeMap<usize, u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub epoly: Option<Vec<String>>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub epoly_by_length: BTreeMap<usize, Vec<String>>,
}

impl StrataRecord {
    pub fn new(summary: &StrataSummary, count_only: bool) -> Self {
        StrataRecord {
            n: summary.n,
            total: summary.total_count(),
            counts_by_length: summary.counts_by_length.clone(),
            epoly: (!count_only).then(|| coeff_strings(&summary.epoly())),
            epoly_by_length: summary.epoly_by_length.iter().map(|(l, p)| (*l, coeff_strings(p))).collect(),
        }
    }
}

pub fn csv_strata(summary: &StrataSummary) -> String {
    let mut s = String::from("n,length,count,epoly\n");
    for (len, count) in &summary.counts_by_length {
        let e = summary.epoly_by_length.get(len).map(|p| coeff_strings(p).join(" ")).unwrap_or_default();
        writeln!(s, "{},{len},{count},{e}", summary.n).unwrap();
    }
    s
}

pub fn latex_strata(summary: &StrataSummary) -> String {
    let mut s = String::from("\\begin{tabular}{|l|l|l|}\n\\hline\nlength & strata & $E(q)$ \\\\ \\hline\n");
    for (len, count) in &summary.counts_by_length {
        let e = summary.epoly_by_length.get(len).map(|p| latex_poly(p).replace('t', "q")).unwrap_or_default();
        writeln!(s, "${len}$ & ${count}$ & ${e}$ \\\\ \\hline").unwrap();
    }
    s.push_str("\\end{tabular}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn latex_layout() {
        let table: SchurTable = [
            (part(&[4]), TPoly::from_ints(&[1, 3, 1])),
            (part(&[3, 1]), TPoly::from_ints(&[0, 1])),
            (part(&[2, 2]), TPoly::from_ints(&[0, 1])),
        ]
        .into_iter()
        .collect();
        assert_eq!(latex_schur_expression(&table), "s_4(1 + 3t + t^2) + s_{31}t + s_{22}t");
        let two: SchurTable = [(part(&[2]), TPoly::one())].into_iter().collect();
        assert_eq!(latex_schur_expression(&two), "s_2");
        let sq: SchurTable = [(part(&[3, 1, 1, 1]), TPoly::from_ints(&[0, 0, 1]))].into_iter().collect();
        assert_eq!(latex_schur_expression(&sq), "s_{3111}t^2");
    }

    #[test]
    fn schur_record_round_trip() {
        let table: SchurTable = [(part(&[3]), TPoly::from_ints(&[1, 1]))].into_iter().collect();
        let rec = SchurTableRecord::new(3, &table);
        assert_eq!(serde_json::to_string(&rec).unwrap(), r#"{"n":3,"rows":[{"lambda":[3],"poly":["1/1","1/1"]}]}"#);
        assert_eq!(rec.to_table().unwrap(), table);
    }
}
