//! Fixed-width text diagrams: one character column per word position.

use maxrep::Interval;

/// Position ruler: a tens line when the word is longer than ten, then units.
pub fn ruler(n: usize, indent: usize) -> Vec<String> {
    let pad = " ".repeat(indent);
    let mut lines = Vec::new();
    if n > 10 {
        let tens: String = (0..n)
            .map(|i| {
                if i >= 10 {
                    char::from(b'0' + (i / 10 % 10) as u8)
                } else {
                    ' '
                }
            })
            .collect();
        lines.push(format!("{pad}{}", tens.trim_end()));
    }
    let units: String = (0..n).map(|i| char::from(b'0' + (i % 10) as u8)).collect();
    lines.push(format!("{pad}{units}"));
    lines
}

/// Blank line of width `n` with `fill` over each interval.
pub fn bar(n: usize, segments: &[(Interval, char)]) -> String {
    let mut cells = vec![' '; n];
    for (iv, fill) in segments {
        for cell in &mut cells[iv.start..=iv.end.min(n - 1)] {
            *cell = *fill;
        }
    }
    let line: String = cells.into_iter().collect();
    line.trim_end().to_string()
}

/// Pads a bar so annotations line up after the word.
pub fn annotate(indent: usize, n: usize, bar: &str, note: &str) -> String {
    format!("{}{bar:<n$}  {note}", " ".repeat(indent))
}
