//! CSV writing helpers: `#` provenance headers and fixed 15-significant-digit
//! float formatting so outputs are byte-diffable.

use std::io::Write;
use std::path::Path;

use lstat_core::Result;

/// 15 significant digits, scientific.
pub fn fmt15(v: f64) -> String {
    format!("{v:.14e}")
}

pub struct CsvSink {
    out: Box<dyn Write>,
}

impl CsvSink {
    /// Write to `path`, or stdout when `path` is None.
    pub fn open(path: Option<&Path>) -> Result<Self> {
        let out: Box<dyn Write> = match path {
            Some(p) => Box::new(std::io::BufWriter::new(std::fs::File::create(p)?)),
            None => Box::new(std::io::stdout().lock()),
        };
        Ok(Self { out })
    }

    /// `# key: value` provenance line.
    pub fn comment(&mut self, text: &str) -> Result<()> {
        writeln!(self.out, "# {text}")?;
        Ok(())
    }

    pub fn row(&mut self, fields: &[String]) -> Result<()> {
        writeln!(self.out, "{}", fields.join(","))?;
        Ok(())
    }

    pub fn header(&mut self, columns: &str) -> Result<()> {
        writeln!(self.out, "{columns}")?;
        Ok(())
    }

    pub fn finish(mut self) -> Result<()> {
        self.out.flush()?;
        Ok(())
    }
}
