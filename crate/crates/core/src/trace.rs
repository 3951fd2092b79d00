//! Structured derivation traces.
//!
//! An algorithm reports its intermediate states as [`TraceEvent`]s pushed into
//! a [`TraceSink`]. The wire form is JSON lines: one event per line, every
//! numeric value as a decimal string, and a `{"v":1}` header as the first line
//! of a stream.

use std::borrow::Cow;
use std::fmt::Display;
use std::io::Write;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceError {
    #[error("trace sink is closed")]
    SinkClosed,
    #[error("trace write failed: {0}")]
    Io(String),
    #[error("malformed trace line: {0}")]
    Parse(String),
}

impl TraceError {
    pub fn name(&self) -> &'static str {
        match self {
            TraceError::SinkClosed => "SinkClosed",
            TraceError::Io(_) => "TraceIo",
            TraceError::Parse(_) => "TraceParse",
        }
    }
}

/// Field names and notes are usually literals, so they are only copied when
/// built at runtime or read back from a stream.
pub type Label = Cow<'static, str>;

/// One named step of an algorithm.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEvent {
    pub algorithm: Label,
    pub step: u64,
    pub state: IndexMap<Label, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<Label>,
}

impl TraceEvent {
    pub fn new(algorithm: impl Into<Label>, step: u64) -> Self {
        TraceEvent {
            algorithm: algorithm.into(),
            step,
            state: IndexMap::with_capacity(4),
            note: None,
        }
    }

    pub fn with(mut self, name: impl Into<Label>, value: impl Display) -> Self {
        self.state.insert(name.into(), value.to_string());
        self
    }

    pub fn note(mut self, note: impl Into<Label>) -> Self {
        let note = note.into();
        self.note = if note.is_empty() { None } else { Some(note) };
        self
    }

    pub fn get(&self, name: &str) -> Option<&str> {
        self.state.get(name).map(String::as_str)
    }
}

/// Renders one event as a single JSON line (no trailing newline).
pub fn serialize(event: &TraceEvent) -> String {
    serde_json::to_string(event).expect("trace events always serialize")
}

pub fn parse(line: &str) -> Result<TraceEvent, TraceError> {
    serde_json::from_str(line).map_err(|e| TraceError::Parse(e.to_string()))
}

/// The header line written before the first event of a stream.
pub fn header() -> String {
    format!("{{\"v\":{FORMAT_VERSION}}}")
}

/// Parses a full JSON-lines stream, header included.
pub fn parse_stream(text: &str) -> Result<Vec<TraceEvent>, TraceError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    match lines.next() {
        Some(first) => {
            let v: serde_json::Value =
                serde_json::from_str(first).map_err(|e| TraceError::Parse(e.to_string()))?;
            if v.get("v").and_then(|v| v.as_u64()) != Some(FORMAT_VERSION as u64) {
                return Err(TraceError::Parse(format!(
                    "missing version header: {first}"
                )));
            }
        }
        None => return Ok(Vec::new()),
    }
    lines.map(parse).collect()
}

/// Destination for trace events. A sink has a single writer.
pub trait TraceSink {
    fn emit(&mut self, event: TraceEvent) -> Result<(), TraceError>;

    /// Algorithms skip building events entirely when this is false.
    fn enabled(&self) -> bool {
        true
    }
}

/// Discards everything.
#[derive(Debug, Default, Clone, Copy)]
pub struct NoTrace;

impl TraceSink for NoTrace {
    fn emit(&mut self, _event: TraceEvent) -> Result<(), TraceError> {
        Ok(())
    }

    fn enabled(&self) -> bool {
        false
    }
}

/// Collects events in memory.
#[derive(Debug, Default, Clone)]
pub struct MemorySink {
    events: Vec<TraceEvent>,
    closed: bool,
}

impl MemorySink {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn events(&self) -> &[TraceEvent] {
        &self.events
    }

    pub fn into_events(self) -> Vec<TraceEvent> {
        self.events
    }

    pub fn close(&mut self) {
        self.closed = true;
    }
}

impl TraceSink for MemorySink {
    fn emit(&mut self, event: TraceEvent) -> Result<(), TraceError> {
        if self.closed {
            return Err(TraceError::SinkClosed);
        }
        self.events.push(event);
        Ok(())
    }
}

/// Writes JSON lines to any [`Write`], each prefixed with `prefix`.
pub struct LineSink<W: Write> {
    out: Option<W>,
    prefix: String,
    started: bool,
}

impl<W: Write> LineSink<W> {
    pub fn new(out: W) -> Self {
        Self::with_prefix(out, "")
    }

    pub fn with_prefix(out: W, prefix: impl Into<String>) -> Self {
        LineSink {
            out: Some(out),
            prefix: prefix.into(),
            started: false,
        }
    }

    fn write_line(&mut self, line: &str) -> Result<(), TraceError> {
        let out = self.out.as_mut().ok_or(TraceError::SinkClosed)?;
        writeln!(out, "{}{}", self.prefix, line).map_err(|e| TraceError::Io(e.to_string()))
    }

    /// Writes the header if nothing has been written yet. Called implicitly
    /// by the first `emit`; call it directly to produce a valid empty stream.
    pub fn start(&mut self) -> Result<(), TraceError> {
        if !self.started {
            self.write_line(&header())?;
            self.started = true;
        }
        Ok(())
    }

    /// Flushes and releases the writer; later emits fail with `SinkClosed`.
    pub fn close(&mut self) -> Result<Option<W>, TraceError> {
        match self.out.take() {
            Some(mut w) => {
                w.flush().map_err(|e| TraceError::Io(e.to_string()))?;
                Ok(Some(w))
            }
            None => Ok(None),
        }
    }
}

impl<W: Write> TraceSink for LineSink<W> {
    fn emit(&mut self, event: TraceEvent) -> Result<(), TraceError> {
        if self.out.is_none() {
            return Err(TraceError::SinkClosed);
        }
        self.start()?;
        self.write_line(&serialize(&event))
    }
}

/// Numbers steps of one algorithm run consecutively from 1.
pub struct Recorder<'a> {
    sink: &'a mut dyn TraceSink,
    algorithm: &'static str,
    step: u64,
}

impl<'a> Recorder<'a> {
    pub fn new(sink: &'a mut dyn TraceSink, algorithm: &'static str) -> Self {
        Recorder {
            sink,
            algorithm,
            step: 0,
        }
    }

    pub fn enabled(&self) -> bool {
        self.sink.enabled()
    }

    /// Emits the event built by `build`; `build` is not called when the sink
    /// is disabled.
    pub fn record(
        &mut self,
        build: impl FnOnce(TraceEvent) -> TraceEvent,
    ) -> Result<(), TraceError> {
        if !self.sink.enabled() {
            return Ok(());
        }
        self.step += 1;
        let event = build(TraceEvent::new(self.algorithm, self.step));
        self.sink.emit(event)
    }
}
