//! Output rendering: aligned text, canonical JSON, CSV, and LaTeX tabular
//! fragments, all with the library's deterministic orderings.

use macfold::expansion::{FundExpansion, SchurExpansion};
use macfold::partition::Partition;
use macfold::poly::QtPolynomial;

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
    Latex,
}

pub fn partition_label(p: &Partition) -> String {
    p.parts()
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn latex_escape_set(members: &[usize]) -> String {
    let inner = members
        .iter()
        .map(|m| m.to_string())
        .collect::<Vec<_>>()
        .join(",");
    format!("\\{{{inner}\\}}")
}

/// Render a Schur coefficient table in the canonical descending-lex order.
pub fn schur_table(s: &SchurExpansion, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => serde_json::to_string_pretty(s).expect("serializable"),
        OutputFormat::Csv => {
            let mut out = String::from("lambda,coefficient\n");
            for (lambda, coeff) in s.terms() {
                out.push_str(&format!("{},{coeff}\n", partition_label(lambda)));
            }
            out
        }
        OutputFormat::Latex => {
            let mut out = String::from("\\begin{tabular}{ll}\n\\lambda & coefficient \\\\\n\\hline\n");
            for (lambda, coeff) in s.terms() {
                out.push_str(&format!("({}) & ${}$ \\\\\n", lambda, coeff.to_latex()));
            }
            out.push_str("\\end{tabular}\n");
            out
        }
        OutputFormat::Text => {
            let rows: Vec<(String, String)> = s
                .terms()
                .map(|(lambda, coeff)| (format!("({lambda})"), coeff.to_string()))
                .collect();
            if rows.is_empty() {
                return "lambda | coefficient\n".into();
            }
            let width = rows.iter().map(|(l, _)| l.len()).max().unwrap_or(6).max(6);
            let mut out = format!("{:width$} | coefficient\n", "lambda");
            for (l, c) in rows {
                out.push_str(&format!("{l:width$} | {c}\n"));
            }
            out
        }
    }
}

/// Render a fundamental-basis table indexed by descent subsets.
pub fn fund_table(f: &FundExpansion, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => serde_json::to_string_pretty(f).expect("serializable"),
        OutputFormat::Csv => {
            let mut out = String::from("ides,coefficient\n");
            for (d, coeff) in f.terms() {
                let label = d
                    .members()
                    .iter()
                    .map(|m| m.to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                out.push_str(&format!("{label},{coeff}\n"));
            }
            out
        }
        OutputFormat::Latex => {
            let mut out = String::from("\\begin{tabular}{ll}\nD & coefficient \\\\\n\\hline\n");
            for (d, coeff) in f.terms() {
                out.push_str(&format!(
                    "${}$ & ${}$ \\\\\n",
                    latex_escape_set(&d.members()),
                    coeff.to_latex()
                ));
            }
            out.push_str("\\end{tabular}\n");
            out
        }
        OutputFormat::Text => {
            let rows: Vec<(String, String)> = f
                .terms()
                .map(|(d, coeff)| (d.to_string(), coeff.to_string()))
                .collect();
            let width = rows.iter().map(|(l, _)| l.len()).max().unwrap_or(4).max(4);
            let mut out = format!("{:width$} | coefficient\n", "iDes");
            for (l, c) in rows {
                out.push_str(&format!("{l:width$} | {c}\n"));
            }
            out
        }
    }
}

/// A q^inv t^maj weight as a one-term polynomial.
pub fn weight_monomial(inv: usize, maj: usize) -> QtPolynomial {
    QtPolynomial::monomial(inv as u32, maj as u32, 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_tables_keep_their_headers() {
        let empty = SchurExpansion::new(3);
        assert_eq!(schur_table(&empty, OutputFormat::Csv), "lambda,coefficient\n");
        assert!(schur_table(&empty, OutputFormat::Text).starts_with("lambda"));
        let empty = FundExpansion::new(3);
        assert_eq!(fund_table(&empty, OutputFormat::Csv), "ides,coefficient\n");
    }

    #[test]
    fn latex_fragments_are_wrapped_tabulars() {
        let mut s = SchurExpansion::new(2);
        s.add_term("1,1".parse().unwrap(), &QtPolynomial::monomial(0, 1, 1));
        let latex = schur_table(&s, OutputFormat::Latex);
        assert!(latex.starts_with("\\begin{tabular}{ll}"));
        assert!(latex.trim_end().ends_with("\\end{tabular}"));
        assert!(latex.contains("(1,1) & $t$"));
    }
}
