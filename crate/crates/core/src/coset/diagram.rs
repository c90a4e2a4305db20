//! Two-row pictures of morphisms on the integer line.

use crate::error::Result;

use super::kappa::canonical_kappa;
use super::Coset;

/// Source row on top, target row at the bottom, one cell per integer
/// position. Kernel and indefiniteness slots are black, paired slots are
/// joined on the middle line, and `η` copies of `⊘` close the middle line.
pub fn render_diagram(c: &Coset) -> Result<String> {
    let t = canonical_kappa(c)?;
    let (alpha, beta) = (c.alpha(), c.beta());
    let s = alpha.lo().min(beta.lo());
    let e = alpha.hi().max(beta.hi());
    let width = 2 * (e - s) as usize;
    let row = |lo: i64, hi: i64, black: usize| -> Vec<char> {
        let mut cells = vec![' '; width];
        for pos in lo + 1..=hi {
            let slot = (pos - lo - 1) as usize;
            cells[2 * (pos - s - 1) as usize] = if slot < black { '●' } else { '○' };
        }
        cells
    };
    let upper = row(beta.lo(), beta.hi(), t.k[0][1]);
    let lower = row(alpha.lo(), alpha.hi(), t.k[1][0]);
    let mut middle = vec![' '; width];
    for j in 0..t.k[1][1] {
        let x = beta.lo() + 1 + (t.k[0][1] + j) as i64;
        let y = alpha.lo() + 1 + (t.k[1][0] + j) as i64;
        let glyph = match y.cmp(&x) {
            std::cmp::Ordering::Equal => '│',
            std::cmp::Ordering::Greater => '╲',
            std::cmp::Ordering::Less => '╱',
        };
        middle[(x + y - 2 * s - 2) as usize] = glyph;
    }
    let mut middle: String = middle.into_iter().collect();
    middle = middle.trim_end().to_string();
    if c.eta() > 0 {
        if !middle.is_empty() {
            middle.push(' ');
        }
        middle.extend(std::iter::repeat_n('⊘', c.eta()));
    }
    let line = |v: Vec<char>| v.into_iter().collect::<String>().trim_end().to_string();
    Ok(format!("{}\n{}\n{}\n", line(upper), middle, line(lower)))
}
