use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use clap::ValueEnum;
use serde::Serialize;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    #[value(alias = "json-lines")]
    Jsonl,
}

/// Writes flat records as CSV (with a header) or JSON lines. Comment lines
/// start with `#` in both formats.
pub enum RecordWriter {
    Csv {
        sink: Box<dyn Write>,
        header_done: bool,
    },
    Jsonl(Box<dyn Write>),
}

impl RecordWriter {
    pub fn new(format: Format, path: Option<&Path>) -> Result<RecordWriter, CliError> {
        let sink: Box<dyn Write> = match path {
            Some(p) => Box::new(BufWriter::new(File::create(p)?)),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        };
        Ok(match format {
            Format::Csv => RecordWriter::Csv {
                sink,
                header_done: false,
            },
            Format::Jsonl => RecordWriter::Jsonl(sink),
        })
    }

    pub fn record<T: Serialize>(&mut self, row: &T) -> Result<(), CliError> {
        match self {
            RecordWriter::Csv { sink, header_done } => {
                // one small writer per row so comment lines can go straight to the sink
                let mut w = csv::WriterBuilder::new()
                    .has_headers(!*header_done)
                    .from_writer(Vec::new());
                w.serialize(row)?;
                let bytes = w
                    .into_inner()
                    .map_err(|e| io::Error::other(e.to_string()))?;
                sink.write_all(&bytes)?;
                *header_done = true;
            }
            RecordWriter::Jsonl(w) => {
                serde_json::to_writer(&mut *w, row)?;
                writeln!(w)?;
            }
        }
        Ok(())
    }

    pub fn comment(&mut self, text: &str) -> Result<(), CliError> {
        let w = match self {
            RecordWriter::Csv { sink, .. } => sink,
            RecordWriter::Jsonl(w) => w,
        };
        writeln!(w, "# {text}")?;
        Ok(())
    }

    pub fn finish(self) -> Result<(), CliError> {
        match self {
            RecordWriter::Csv { mut sink, .. } | RecordWriter::Jsonl(mut sink) => sink.flush()?,
        }
        Ok(())
    }
}
