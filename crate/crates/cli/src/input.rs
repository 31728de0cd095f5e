use std::io::Read;

use nca::bidet::Bitableau;
use nca::combinat::{Partition, Tableau};
use nca::grass::PlueckerMonomial;

use crate::{CliError, TableauInput};

fn bad(message: impl Into<String>) -> CliError {
    CliError::new("bad_input", message)
}

fn numbers<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, CliError> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| x.parse().map_err(|_| bad(format!("{what}: {x:?} is not a number"))))
        .collect()
}

pub fn shape(s: &str) -> Result<Partition, CliError> {
    Ok(Partition::new(numbers(s, "shape")?)?)
}

pub fn weight(s: &str) -> Result<Vec<usize>, CliError> {
    numbers(s, "weight")
}

/// File path, `-` for stdin, or the JSON text itself.
fn json_text(src: &str) -> Result<String, CliError> {
    if src == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| bad(format!("stdin: {e}")))?;
        return Ok(s);
    }
    if src.trim_start().starts_with('{') {
        return Ok(src.to_string());
    }
    std::fs::read_to_string(src).map_err(|e| bad(format!("{src}: {e}")))
}

fn columns(s: &str) -> Result<Vec<Vec<u32>>, CliError> {
    s.split(';').map(|c| numbers(c, "column")).collect()
}

pub fn tableau(input: &TableauInput) -> Result<Tableau, CliError> {
    match (&input.tableau, &input.columns) {
        (Some(src), _) => serde_json::from_str(&json_text(src)?).map_err(|e| CliError::new("malformed_tableau", e.to_string())),
        (None, Some(cols)) => Ok(Tableau::new(columns(cols)?)?),
        (None, None) => Err(bad("give --tableau or --columns")),
    }
}

pub fn bitableau(input: &TableauInput) -> Result<Bitableau, CliError> {
    match (&input.tableau, &input.columns) {
        (Some(src), _) => serde_json::from_str(&json_text(src)?).map_err(|e| CliError::new("malformed_tableau", e.to_string())),
        (None, Some(cols)) => {
            let pairs = cols
                .split(';')
                .map(|c| {
                    let (l, r) = c.split_once('|').ok_or_else(|| bad(format!("bitableau column {c:?} needs left|right")))?;
                    Ok((numbers(l, "column")?, numbers(r, "column")?))
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            Ok(Bitableau::from_pairs(&pairs)?)
        }
        (None, None) => Err(bad("give --tableau or --columns")),
    }
}

/// `13,24`, or with dots inside factors `1.10,2.11`.
pub fn monomial(m: usize, s: &str) -> Result<PlueckerMonomial, CliError> {
    let factors = s
        .split(',')
        .map(str::trim)
        .filter(|f| !f.is_empty())
        .map(|f| {
            if f.contains('.') {
                f.split('.').map(|x| x.parse::<u32>().map_err(|_| bad(format!("factor {f:?}")))).collect()
            } else {
                f.chars().map(|c| c.to_digit(10).ok_or_else(|| bad(format!("factor {f:?}")))).collect()
            }
        })
        .collect::<Result<Vec<Vec<u32>>, CliError>>()?;
    Ok(PlueckerMonomial::from_lists(m, &factors)?)
}
