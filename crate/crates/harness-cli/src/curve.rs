use anyhow::{ensure, Context, Result};
use std::io::Write;
use std::path::Path;

/// Two-column plot data: strictly increasing abscissas, one
/// space-separated pair per line, newline-terminated ASCII. The layout
/// drops straight into a gnuplot/TikZ `plot file` directive.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveFile {
    rows: Vec<(f64, f64)>,
}

impl CurveFile {
    pub fn new(rows: Vec<(f64, f64)>) -> Result<Self> {
        ensure!(
            rows.windows(2).all(|w| w[0].0 < w[1].0),
            "curve abscissas must be strictly increasing"
        );
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[(f64, f64)] {
        &self.rows
    }

    pub fn max_value(&self) -> Option<f64> {
        self.rows.iter().map(|r| r.1).fold(None, |acc, v| {
            Some(acc.map_or(v, |a: f64| a.max(v)))
        })
    }

    pub fn render(&self) -> String {
        let mut out = String::with_capacity(self.rows.len() * 32);
        for (x, v) in &self.rows {
            out.push_str(&format!("{x:.12} {v:.12}\n"));
        }
        out
    }

    pub fn write_to(&self, path: &Path) -> Result<()> {
        let mut file = std::fs::File::create(path)
            .with_context(|| format!("cannot create {}", path.display()))?;
        file.write_all(self.render().as_bytes())
            .with_context(|| format!("cannot write {}", path.display()))?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_unsorted_rows() {
        assert!(CurveFile::new(vec![(0.2, 1.0), (0.1, 1.0)]).is_err());
    }

    #[test]
    fn renders_two_columns() {
        let c = CurveFile::new(vec![(0.125, 1.25), (0.25, 1.5)]).unwrap();
        let text = c.render();
        assert_eq!(text.lines().count(), 2);
        assert!(text.ends_with('\n'));
        let first: Vec<&str> = text.lines().next().unwrap().split(' ').collect();
        assert_eq!(first.len(), 2);
        assert_eq!(first[0], "0.125000000000");
    }
}
