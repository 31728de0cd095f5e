use nca::combinat::Tableau;

/// Boxed Young diagram, rows read from the columns in their stored order.
pub fn young(t: &Tableau) -> String {
    let rows = t.rows();
    if rows.is_empty() {
        return "(empty)\n".into();
    }
    let w = t.max_entry().to_string().len();
    let rule = |k: usize| format!("+{}\n", format!("{}+", "-".repeat(w + 2)).repeat(k));
    let mut out = rule(rows[0].len());
    for row in &rows {
        let cells: String = row.iter().map(|v| format!(" {v:>w$} |")).collect();
        out.push_str(&format!("|{cells}\n"));
        out.push_str(&rule(row.len()));
    }
    out
}

/// Diagrams side by side, top-aligned.
pub fn side_by_side(blocks: &[String]) -> String {
    let split: Vec<Vec<&str>> = blocks.iter().map(|b| b.lines().collect()).collect();
    let widths: Vec<usize> = split.iter().map(|l| l.iter().map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    let height = split.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = String::new();
    for i in 0..height {
        let line: Vec<String> = split
            .iter()
            .zip(&widths)
            .map(|(l, &w)| format!("{:<w$}", l.get(i).copied().unwrap_or("")))
            .collect();
        out.push_str(line.join("   ").trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn draws_boxes() {
        let t = Tableau::new(vec![vec![1, 3], vec![2]]).unwrap();
        assert_eq!(young(&t), "+---+---+\n| 1 | 2 |\n+---+---+\n| 3 |\n+---+\n");
        let two = side_by_side(&[young(&t), "x\n".into()]);
        assert!(two.starts_with("+---+---+   x\n"));
    }
}
